//! Exact rational coefficients.

use alloc::string::String;
use alloc::string::ToString;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Exact rational coefficient type used throughout the symbolic engine.
pub type Rat = BigRational;

/// Shorthand constructor for `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for the integer `p`.
pub fn int(p: i64) -> Rat {
    Rat::from(BigInt::from(p))
}

/// Exact factorial as a rational.
pub fn factorial(k: u32) -> Rat {
    let mut acc = BigInt::from(1);
    for i in 2..=k as u64 {
        acc *= BigInt::from(i);
    }
    Rat::from(acc)
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k as u64 {
        acc = acc * BigInt::from(n as u64 - i) / BigInt::from(i + 1);
    }
    Rat::from(acc)
}

/// Lossy conversion to `f64` (exact for the small fractions arising here).
pub fn to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Renders `p` or `p/q` without a spurious denominator of one.
pub fn display(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(binomial(3, 5), int(0));
    }

    #[test]
    fn display_suppresses_unit_denominator() {
        assert_eq!(display(&rat(4, 2)), "2");
        assert_eq!(display(&rat(-1, 3)), "-1/3");
    }
}
