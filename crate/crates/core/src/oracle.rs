//! Direct computation of graded tensor-power dimensions.
//!
//! `a_n(x) = dim (V^{⊗n})_x` satisfies `a_0(x) = [x = e]` and
//! `a_n(x) = Σ_y d_{x y^{-1}} a_{n-1}(y)`: the first tensor factor has grade
//! `x y^{-1}` and the remaining `n - 1` factors multiply to `y`. This module
//! shares nothing with the determinant path beyond the group and big
//! integers, so agreement between the two is meaningful.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::exact::RatFun;
use crate::grading::{DimVector, GradingError};
use crate::group::Group;
use crate::hilbert::HilbertResult;

/// `rows[n][x] = a_n(x)` for `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTable {
    rows: Vec<Vec<BigInt>>,
}

impl ComponentTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, n: usize, x: usize) -> &BigInt {
        &self.rows[n][x]
    }

    /// `a_0(x), ..., a_{n_max}(x)`.
    pub fn column(&self, x: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[x].clone()).collect()
    }
}

/// Fills the table by the recursion, one degree at a time.
pub fn tensor_dimensions(
    g: &Group,
    dims: &DimVector,
    n_max: usize,
) -> Result<ComponentTable, GradingError> {
    dims.check_length(g)?;
    let s = g.order();
    let weights: Vec<BigInt> = dims.as_slice().iter().map(|&d| BigInt::from(d)).collect();
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut first = vec![BigInt::zero(); s];
    first[0] = BigInt::from(1);
    rows.push(first);
    for n in 1..=n_max {
        let prev: &Vec<BigInt> = &rows[n - 1];
        let next: Vec<BigInt> = (0..s)
            .into_par_iter()
            .map(|x| {
                let mut acc = BigInt::zero();
                for (y, a) in prev.iter().enumerate() {
                    let w = &weights[g.mul(x, g.inv(y))];
                    if !w.is_zero() && !a.is_zero() {
                        acc += w * a;
                    }
                }
                acc
            })
            .collect();
        rows.push(next);
    }
    Ok(ComponentTable { rows })
}

/// Result of comparing a series expansion against a table column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossCheck {
    /// Lowest degree where the two disagree, or where the series could not
    /// be expanded.
    pub first_mismatch: Option<usize>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the identity-component series of `res` against column `e`.
pub fn cross_check(res: &HilbertResult, table: &ComponentTable) -> CrossCheck {
    cross_check_column(&res.series, table, 0)
}

/// Compares the expansion of `f` against column `x` through `table.n_max()`.
pub fn cross_check_column(f: &RatFun, table: &ComponentTable, x: usize) -> CrossCheck {
    let expected = table.column(x);
    let first_mismatch = match f.expand(table.n_max()) {
        Ok(prefix) => prefix.coeffs.iter().zip(&expected).position(|(a, b)| a != b),
        Err(_) => Some(0),
    };
    CrossCheck { first_mismatch }
}
