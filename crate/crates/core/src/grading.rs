//! Dimension vectors of group-graded vector spaces.

use thiserror::Error;

use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("dimension vector has length {got} but the group has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("total dimension overflows u64")]
    Overflow,
}

/// `dims[i] = dim V_{x_i}`, one entry per group element, with the total
/// dimension `d` cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimVector {
    dims: Vec<u64>,
    total: u64,
}

impl DimVector {
    pub fn new(dims: Vec<u64>) -> Result<DimVector, GradingError> {
        let total = dims
            .iter()
            .try_fold(0u64, |acc, &d| acc.checked_add(d))
            .ok_or(GradingError::Overflow)?;
        Ok(DimVector { dims, total })
    }

    /// Checks the length against the group order as well.
    pub fn for_group(g: &Group, dims: Vec<u64>) -> Result<DimVector, GradingError> {
        if dims.len() != g.order() {
            return Err(GradingError::LengthMismatch { expected: g.order(), got: dims.len() });
        }
        DimVector::new(dims)
    }

    pub fn zeros(s: usize) -> DimVector {
        DimVector { dims: vec![0; s], total: 0 }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.dims[i]
    }

    /// `d = dim V`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Indices with positive dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&i| self.dims[i] > 0).collect()
    }

    pub(crate) fn check_length(&self, g: &Group) -> Result<(), GradingError> {
        if self.dims.len() == g.order() {
            Ok(())
        } else {
            Err(GradingError::LengthMismatch { expected: g.order(), got: self.dims.len() })
        }
    }
}
