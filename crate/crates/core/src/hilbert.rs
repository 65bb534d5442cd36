//! Hilbert series of the graded components `T(V)_x` via Cramer's rule.
//!
//! The component series `F_x(t) = Σ_n dim (V^{⊗n})_x t^n` satisfy
//! `F_x = δ_{x,e} + t Σ_y d_{x y^{-1}} F_y`, i.e. the linear system
//! `M F = (-1, 0, ..., 0)` with `M[i][j] = d_{x_i x_j^{-1}} t - δ_{ij}`.
//! Each `F_x` is a ratio of two determinants of `M`-shaped matrices whose
//! entries have degree at most one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{det_poly, reduce, DetError, IntPoly, RatFun};
use crate::grading::{DimVector, GradingError};
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Determinant(#[from] DetError),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// The homogeneous coefficient matrix of the system for the `F_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemMatrix {
    entries: Vec<Vec<IntPoly>>,
}

impl SystemMatrix {
    pub fn entries(&self) -> &[Vec<IntPoly>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Copy with column `col` replaced by the right-hand side `(-1, 0, ..., 0)`.
    pub fn with_rhs_column(&self, col: usize) -> Vec<Vec<IntPoly>> {
        let mut m = self.entries.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[col] = if i == 0 { IntPoly::constant(-1) } else { IntPoly::zero() };
        }
        m
    }
}

pub fn build_system_matrix(g: &Group, dims: &DimVector) -> Result<SystemMatrix, HilbertError> {
    dims.check_length(g)?;
    let s = g.order();
    let entries = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    let d = dims.get(g.mul(i, g.inv(j)));
                    let constant = if i == j { -1 } else { 0 };
                    IntPoly::linear(constant, d)
                })
                .collect()
        })
        .collect();
    Ok(SystemMatrix { entries })
}

/// Hilbert series of the identity component together with the raw
/// determinants it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertResult {
    /// Cramer numerator: determinant with column `e` replaced by the right-hand side.
    pub p_raw: IntPoly,
    /// Determinant of the system matrix.
    pub r_raw: IntPoly,
    /// Reduced series with `num(0) = den(0) = 1`.
    pub series: RatFun,
    /// `r_raw` normalized to constant term 1, divided by `1 - d t`.
    pub q: IntPoly,
    pub d: u64,
    pub s: usize,
    pub dims: DimVector,
}

impl HilbertResult {
    /// `p_raw` rescaled to constant term `+1`.
    pub fn p_normalized(&self) -> IntPoly {
        normalize_constant(&self.p_raw)
    }

    /// `r_raw` rescaled to constant term `+1`; equals `(1 - d t) q`.
    pub fn r_normalized(&self) -> IntPoly {
        normalize_constant(&self.r_raw)
    }
}

fn normalize_constant(p: &IntPoly) -> IntPoly {
    if p.constant_term().is_negative() {
        -p
    } else {
        p.clone()
    }
}

fn sign_power(s: usize) -> i64 {
    if s.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `P(T(V)_e, t) = p(t) / r(t)` by Cramer's rule.
pub fn hilbert_identity(g: &Group, dims: &DimVector) -> Result<HilbertResult, HilbertError> {
    dims.check_length(g)?;
    let s = g.order();
    let d = dims.total();
    if d == 0 {
        // M = -I.
        let unit = IntPoly::constant(sign_power(s));
        return Ok(HilbertResult {
            p_raw: unit.clone(),
            r_raw: unit,
            series: RatFun::one(),
            q: IntPoly::one(),
            d,
            s,
            dims: dims.clone(),
        });
    }
    if s == 1 {
        return Ok(HilbertResult {
            p_raw: IntPoly::constant(-1),
            r_raw: IntPoly::linear(-1, d),
            series: reduce(&IntPoly::one(), &IntPoly::linear(1, -BigInt::from(d))).with_unit_constant_denominator(),
            q: IntPoly::one(),
            d,
            s,
            dims: dims.clone(),
        });
    }

    let m = build_system_matrix(g, dims)?;
    let (r_raw, p_raw) =
        rayon::join(|| det_poly(m.entries(), s), || det_poly(&m.with_rhs_column(0), s));
    let (r_raw, p_raw) = (r_raw?, p_raw?);
    finish_identity(p_raw, r_raw, dims.clone(), s)
}

fn finish_identity(
    p_raw: IntPoly,
    r_raw: IntPoly,
    dims: DimVector,
    s: usize,
) -> Result<HilbertResult, HilbertError> {
    let d = dims.total();
    let series = reduce(&p_raw, &r_raw).with_unit_constant_denominator();
    if !series.num().constant_term().is_one() || !series.den().constant_term().is_one() {
        return Err(HilbertError::Internal(format!(
            "series {series} does not have unit constant terms"
        )));
    }
    let one_minus_dt = IntPoly::linear(1, -BigInt::from(d));
    let q = normalize_constant(&r_raw).div_exact(&one_minus_dt).ok_or_else(|| {
        HilbertError::Internal(format!("1 - {d}t does not divide r(t) = {r_raw}"))
    })?;
    Ok(HilbertResult { p_raw, r_raw, series, q, d, s, dims })
}

/// `F_x(t)` for a single element `x`, reduced with `den(0) = 1`.
pub fn hilbert_component(g: &Group, dims: &DimVector, x: usize) -> Result<RatFun, HilbertError> {
    dims.check_length(g)?;
    let s = g.order();
    if x >= s {
        return Err(HilbertError::IndexOutOfRange { index: x, order: s });
    }
    if let Some(f) = component_fast_path(dims, x) {
        return Ok(f);
    }
    let m = build_system_matrix(g, dims)?;
    let (r, num) =
        rayon::join(|| det_poly(m.entries(), s), || det_poly(&m.with_rhs_column(x), s));
    Ok(reduce(&num?, &r?).with_unit_constant_denominator())
}

/// All `F_x`, in element order. Shares the denominator determinant.
pub fn hilbert_components(g: &Group, dims: &DimVector) -> Result<Vec<RatFun>, HilbertError> {
    dims.check_length(g)?;
    let s = g.order();
    if dims.total() == 0 || s == 1 {
        return Ok((0..s).map(|x| component_fast_path(dims, x).unwrap()).collect());
    }
    let m = build_system_matrix(g, dims)?;
    let r = det_poly(m.entries(), s)?;
    (0..s)
        .into_par_iter()
        .map(|x| {
            let num = det_poly(&m.with_rhs_column(x), s)?;
            Ok(reduce(&num, &r).with_unit_constant_denominator())
        })
        .collect()
}

fn component_fast_path(dims: &DimVector, x: usize) -> Option<RatFun> {
    let d = dims.total();
    if d == 0 {
        Some(if x == 0 { RatFun::one() } else { RatFun::zero() })
    } else if dims.len() == 1 {
        Some(reduce(&IntPoly::one(), &IntPoly::linear(1, -BigInt::from(d))).with_unit_constant_denominator())
    } else {
        None
    }
}

/// Outcome of the structural checks on a [`HilbertResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    /// `d^s r(1/d) = 0`, so `1 - d t` divides `r`.
    pub r_vanishes_at_inverse_d: bool,
    /// `deg p <= s - 1`.
    pub p_degree_bounded: bool,
    /// `deg q <= s - 1`.
    pub q_degree_bounded: bool,
    /// `p(0) = r(0) = (-1)^s`.
    pub constant_terms: bool,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.r_vanishes_at_inverse_d
            && self.p_degree_bounded
            && self.q_degree_bounded
            && self.constant_terms
    }
}

/// Checks the shape `P = p / ((1 - d t) q)` with the degree bounds.
/// Requires `d > 0`.
pub fn verify_structure(res: &HilbertResult) -> Result<StructureReport, HilbertError> {
    if res.d == 0 {
        return Err(HilbertError::PreconditionViolated(
            "structure checks need d > 0".into(),
        ));
    }
    let s = res.s;
    let d = BigInt::from(res.d);
    let r_vanishes_at_inverse_d = match res.r_raw.degree() {
        Some(deg) if deg <= s => {
            // Σ c_n d^(s - n)
            let mut acc = BigInt::zero();
            let mut power = BigInt::one();
            for n in (0..=s).rev() {
                acc += res.r_raw.coeff(n) * &power;
                power *= &d;
            }
            acc.is_zero()
        }
        _ => false,
    };
    let bound = s - 1;
    let sign = BigInt::from(sign_power(s));
    Ok(StructureReport {
        r_vanishes_at_inverse_d,
        p_degree_bounded: res.p_raw.degree().is_some_and(|k| k <= bound),
        q_degree_bounded: res.q.degree().is_some_and(|k| k <= bound),
        constant_terms: res.p_raw.constant_term() == sign && res.r_raw.constant_term() == sign,
    })
}
