//! Finite generation of the identity component.
//!
//! `T(V)_e` is free, so with generator series `g(t)` its Hilbert series is
//! `P = 1 / (1 - g)`. It is finitely generated exactly when `g = 1 - 1/P`
//! is a polynomial, i.e. when `1/P` is a polynomial. The verdict here always
//! comes from that criterion on the reduced series; the statements about
//! trivial and two-block gradings are checked against it, not assumed.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{reduce, IntPoly, RatFun, SeriesError};
use crate::grading::DimVector;
use crate::group::Group;
use crate::hilbert::{hilbert_identity, HilbertError, HilbertResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FgError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("negative generator count in degree {0}")]
    NegativeGeneratorCount(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingClass {
    pub trivial: bool,
    pub support: Vec<usize>,
}

/// A grading is trivial when `V` lives in at most one component.
pub fn classify_grading(dims: &DimVector) -> GradingClass {
    let support = dims.support();
    GradingClass { trivial: support.len() <= 1, support }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgReason {
    TrivialGrading,
    InversePolynomial,
    InverseNotPolynomial,
}

impl FgReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FgReason::TrivialGrading => "TrivialGrading",
            FgReason::InversePolynomial => "InversePolynomial",
            FgReason::InverseNotPolynomial => "InverseNotPolynomial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgVerdict {
    pub finitely_generated: bool,
    pub reason: FgReason,
    pub support: Vec<usize>,
    /// Order of the single support element, for trivial gradings.
    pub trivial_support_order: Option<usize>,
}

impl FgVerdict {
    /// Nontrivial gradings with `V_e = 0` are not covered by either of the
    /// classical statements (trivial grading, or `V_e != 0`).
    pub fn outside_classical_theorems(&self) -> bool {
        self.support.len() > 1 && !self.support.contains(&0)
    }
}

/// `1 / (1 - d^r t^r)`: the series of `k ⊕ V^{⊗r} ⊕ V^{⊗2r} ⊕ ...`.
pub fn trivial_grading_series(d: u64, r: usize) -> RatFun {
    assert!(r >= 1, "element order is at least 1");
    let coefficient = BigInt::from(d).pow(r as u32);
    let den = &IntPoly::one() - &IntPoly::monomial(coefficient, r);
    reduce(&IntPoly::one(), &den).with_unit_constant_denominator()
}

/// `d^r`, the number of length-`r` monomials in a basis of `V`.
pub fn generator_count_trivial(d: u64, r: usize) -> BigInt {
    if d == 0 {
        return BigInt::zero();
    }
    BigInt::from(d).pow(r as u32)
}

/// Decides finite generation from the reduced series of `res`.
pub fn is_finitely_generated(g: &Group, res: &HilbertResult) -> Result<FgVerdict, FgError> {
    let class = classify_grading(&res.dims);
    let num = res.series.num();
    // With num(0) = 1 and num/den reduced, den/num is a polynomial iff num = 1.
    let inverse_polynomial = num.is_one();
    if class.trivial {
        if !inverse_polynomial {
            return Err(FgError::Internal(format!(
                "trivial grading but P has numerator {num}"
            )));
        }
        let order = match class.support.first() {
            Some(&x) => g
                .element_order(x)
                .map_err(|e| FgError::Internal(e.to_string()))?,
            None => 1,
        };
        return Ok(FgVerdict {
            finitely_generated: true,
            reason: FgReason::TrivialGrading,
            support: class.support,
            trivial_support_order: Some(order),
        });
    }
    Ok(FgVerdict {
        finitely_generated: inverse_polynomial,
        reason: if inverse_polynomial {
            FgReason::InversePolynomial
        } else {
            FgReason::InverseNotPolynomial
        },
        support: class.support,
        trivial_support_order: None,
    })
}

/// Free generators of `T(V)_e` counted by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSeries {
    pub coeffs: Vec<BigInt>,
    /// `g(t) = 1 - 1/P`.
    pub closed_form: RatFun,
}

pub fn generator_series(res: &HilbertResult, n_max: usize) -> Result<GeneratorSeries, FgError> {
    let p = &res.series;
    if !p.num().constant_term().is_one() || !p.den().constant_term().is_one() {
        return Err(FgError::PreconditionViolated("series must satisfy P(0) = 1".into()));
    }
    // 1 - den/num = (num - den) / num
    let closed_form = reduce(&(p.num() - p.den()), p.num()).with_unit_constant_denominator();
    let prefix = closed_form.expand(n_max)?;
    if !prefix.coeffs[0].is_zero() {
        return Err(FgError::Internal("generator series has a constant term".into()));
    }
    if let Some(n) = prefix.coeffs.iter().position(|c| c.is_negative()) {
        return Err(FgError::NegativeGeneratorCount(n));
    }
    Ok(GeneratorSeries { coeffs: prefix.coeffs, closed_form })
}

/// For a nontrivial grading with `V_e != 0`: true iff the computed verdict is
/// "not finitely generated".
pub fn verify_nontrivial_theorem(g: &Group, dims: &DimVector) -> Result<bool, FgError> {
    let class = classify_grading(dims);
    if class.trivial || dims.get(0) == 0 {
        return Err(FgError::PreconditionViolated(
            "needs a nontrivial grading with V_e != 0".into(),
        ));
    }
    let res = hilbert_identity(g, dims)?;
    Ok(!is_finitely_generated(g, &res)?.finitely_generated)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoBlockRoots {
    /// `p(1/d_e) = 0`.
    pub p_root: bool,
    /// `r(1/d_e) != 0`.
    pub r_nonroot: bool,
}

/// For a grading supported on exactly `{e, x}`, evaluates the raw Cramer
/// determinants at `t = 1/d_e` (homogenized, so everything stays integral).
pub fn verify_two_block_roots(g: &Group, dims: &DimVector) -> Result<TwoBlockRoots, FgError> {
    let support = dims.support();
    if support.len() != 2 || support[0] != 0 {
        return Err(FgError::PreconditionViolated(format!(
            "support {support:?} is not of the form {{e, x}}"
        )));
    }
    let res = hilbert_identity(g, dims)?;
    let de = BigInt::from(dims.get(0));
    let one = BigInt::one();
    Ok(TwoBlockRoots {
        p_root: res.p_raw.eval_homogenized(&one, &de).is_zero(),
        r_nonroot: !res.r_raw.eval_homogenized(&one, &de).is_zero(),
    })
}

/// Restricts `dims` to `{e, x}`, keeping the two values.
pub fn two_block_restriction(dims: &DimVector, x: usize) -> DimVector {
    let mut v = vec![0; dims.len()];
    v[0] = dims.get(0);
    v[x] = dims.get(x);
    DimVector::new(v).expect("restriction of a valid vector")
}
