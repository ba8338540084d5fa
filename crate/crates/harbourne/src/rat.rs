//! Exact rational numbers.
//!
//! `Rat` carries every Harbourne value, bound, and cover invariant in the
//! crate. It is kept reduced with a positive denominator; `Display` prints
//! `p/q`, or just `p` when the denominator is one. Decimal output is a
//! formatting concern only and never feeds back into a computation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

pub type Rat = BigRational;

/// Exact rational from an integer.
pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Exact rational `n/d`. Panics on `d = 0`.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Four-place decimal approximation, rounding half away from zero.
///
/// `-572/157` becomes `-3.6433`, `-4` becomes `-4.0000`.
pub fn decimal4(x: &Rat) -> String {
    let negative = x.is_negative();
    let scaled = (x.numer().abs()) * BigInt::from(10_000);
    let denom = x.denom();
    let mut q = &scaled / denom;
    let r = &scaled % denom;
    if &r * BigInt::from(2) >= *denom {
        q += 1;
    }
    let whole = &q / BigInt::from(10_000);
    let frac = &q % BigInt::from(10_000);
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    format!("{sign}{whole}.{frac:04}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let y = ratio(-572, 157) + rat(4);
        assert_eq!(y, ratio(56, 157));
        assert_eq!(y.denom(), &BigInt::from(157));
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(rat(-4).to_string(), "-4");
        assert_eq!(ratio(-36, 13).to_string(), "-36/13");
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(decimal4(&ratio(-572, 157)), "-3.6433");
        assert_eq!(decimal4(&rat(-4)), "-4.0000");
        assert_eq!(decimal4(&ratio(1, 3)), "0.3333");
        assert_eq!(decimal4(&ratio(-1, 8)), "-0.1250");
        // half cases round away from zero
        assert_eq!(decimal4(&ratio(1, 20_000)), "0.0001");
        assert_eq!(decimal4(&ratio(-1, 20_000)), "-0.0001");
        assert_eq!(decimal4(&Rat::zero()), "0.0000");
    }
}
