use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPoly;

/// Primitive gcd with positive leading coefficient, via the subresultant
/// pseudo-remainder sequence on primitive parts.
///
/// `gcd_primitive(0, 0)` is zero.
pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let (mut f, mut g) = (a.primitive_part(), b.primitive_part());
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    if g.degree() == Some(0) {
        return IntPoly::one();
    }

    let mut lead_prev = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = f.degree().unwrap() - g.degree().unwrap();
        let r = f.pseudo_rem(&g);
        match r.degree() {
            None => return g.primitive_part(),
            Some(0) => return IntPoly::one(),
            Some(_) => {}
        }
        let divisor = &lead_prev * num_traits::pow(h.clone(), delta);
        f = g;
        g = r.div_scalar_exact(&divisor);
        lead_prev = f.leading().unwrap().clone();
        // h <- lead^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(lead_prev.clone(), delta) / num_traits::pow(h, delta - 1)
        };
    }
}
