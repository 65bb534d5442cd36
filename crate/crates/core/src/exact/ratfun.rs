use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::gcd::gcd_primitive;
use super::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator vanishes at t = 0; no power series expansion")]
    NotExpandable,
    #[error("coefficient of t^{0} is not an integer")]
    NonIntegralCoefficient(usize),
}

/// A reduced quotient `num / den` of integer polynomials.
///
/// `num` and `den` share no nonconstant factor and no common integer content.
/// [`reduce`] picks the sign that makes the denominator's leading coefficient
/// positive; [`RatFun::with_unit_constant_denominator`] switches to the
/// power-series presentation with a positive constant term instead.
/// Equality is equality of rational functions, independent of that choice.
#[derive(Clone)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

/// Coefficients of `t^0..=t^N` of a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coeffs: Vec<BigInt>,
}

impl SeriesPrefix {
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Divides out the primitive gcd and common content of `num` and `den`, and
/// normalizes the denominator to a positive leading coefficient.
///
/// Panics if `den` is zero.
pub fn reduce(num: &IntPoly, den: &IntPoly) -> RatFun {
    assert!(!den.is_zero(), "rational function with zero denominator");
    if num.is_zero() {
        return RatFun { num: IntPoly::zero(), den: IntPoly::one() };
    }
    let g = gcd_primitive(num, den);
    let (mut n, mut d) = if g.degree() == Some(0) {
        (num.clone(), den.clone())
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let mut c = n.content().gcd(&d.content());
    if d.leading().unwrap().is_negative() {
        c = -c;
    }
    n = n.div_scalar_exact(&c);
    d = d.div_scalar_exact(&c);
    RatFun { num: n, den: d }
}

impl RatFun {
    pub fn from_poly(p: IntPoly) -> RatFun {
        RatFun { num: p, den: IntPoly::one() }
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(IntPoly::one())
    }

    pub fn zero() -> RatFun {
        RatFun::from_poly(IntPoly::zero())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Same function, signs chosen so the denominator's constant term is
    /// positive. Unchanged if that constant term is zero.
    pub fn with_unit_constant_denominator(&self) -> RatFun {
        if self.den.constant_term().is_negative() {
            RatFun { num: -&self.num, den: -&self.den }
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        reduce(
            &(&(&self.num * &other.den) + &(&other.num * &self.den)),
            &(&self.den * &other.den),
        )
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        reduce(
            &(&(&self.num * &other.den) - &(&other.num * &self.den)),
            &(&self.den * &other.den),
        )
    }

    /// `den / num`, or `None` for the zero function.
    pub fn recip(&self) -> Option<RatFun> {
        if self.num.is_zero() {
            None
        } else {
            Some(reduce(&self.den, &self.num))
        }
    }

    /// The polynomial this function equals, if it is one.
    pub fn as_polynomial(&self) -> Option<IntPoly> {
        if self.den.degree() != Some(0) {
            return None;
        }
        let d = &self.den.coeffs()[0];
        if self.num.coeffs().iter().all(|c| (c % d).is_zero()) {
            Some(self.num.div_scalar_exact(d))
        } else {
            None
        }
    }

    /// Maclaurin coefficients of `num / den` through `t^n_max`, by long
    /// division.
    pub fn expand(&self, n_max: usize) -> Result<SeriesPrefix, SeriesError> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(SeriesError::NotExpandable);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            // num_n = Σ_{k=0..n} den_k * out_{n-k}
            let mut acc = self.num.coeff(n);
            for (k, dk) in den.iter().enumerate().take(n + 1).skip(1) {
                acc -= dk * &out[n - k];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(SeriesError::NonIntegralCoefficient(n));
            }
            out.push(q);
        }
        Ok(SeriesPrefix { coeffs: out })
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFun {}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun(({}) / ({}))", self.num, self.den)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
