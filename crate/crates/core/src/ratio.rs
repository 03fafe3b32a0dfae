//! Helpers for arbitrary-precision rational scalars.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// 2^-bits as a rational.
pub fn pow2_inv(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

/// Floor square root of a non-negative rational, accurate to 2^-bits from below.
pub fn sqrt_lower(q: &Rat, bits: u32) -> Rat {
    assert!(!q.is_negative(), "sqrt of negative rational");
    if q.is_zero() {
        return Rat::zero();
    }
    // sqrt(a/b) = sqrt(a*b)/b; scale by 4^bits for accuracy.
    let a = q.numer().magnitude().clone();
    let b = q.denom().magnitude().clone();
    let scaled = &a * &b << (2 * bits);
    let root = scaled.sqrt(); // floor
    Rat::new(
        BigInt::from_biguint(Sign::Plus, root),
        BigInt::from_biguint(Sign::Plus, b << bits),
    )
}

/// Upper bound on the square root of a non-negative rational, within 2^-bits.
pub fn sqrt_upper(q: &Rat, bits: u32) -> Rat {
    assert!(!q.is_negative(), "sqrt of negative rational");
    if q.is_zero() {
        return Rat::zero();
    }
    let a = q.numer().magnitude().clone();
    let b = q.denom().magnitude().clone();
    let scaled = &a * &b << (2 * bits);
    let root = scaled.sqrt() + BigUint::one();
    Rat::new(
        BigInt::from_biguint(Sign::Plus, root),
        BigInt::from_biguint(Sign::Plus, b << bits),
    )
}

/// Round to the nearest dyadic rational with denominator 2^bits.
pub fn round_dyadic(q: &Rat, bits: u32) -> Rat {
    let scaled = q * Rat::from_integer(BigInt::one() << bits);
    let rounded = scaled.round();
    Rat::new(rounded.to_integer(), BigInt::one() << bits)
}

/// Fixed-point decimal rendering (rounds toward negative infinity).
pub fn format_decimal(q: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (q * Rat::from_integer(scale.clone())).floor().to_integer();
    let (sign, mag) = if scaled.is_negative() {
        ("-", -scaled)
    } else {
        ("", scaled)
    };
    let (int_part, frac_part) = mag.div_rem(&scale);
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part,
            width = digits as usize
        )
    }
}

/// Parse "num/den" or "num" into a rational.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Render a rational as "num/den" (or "num" when integral).
pub fn format_rational(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Closed rational interval with exact endpoint arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(q: Rat) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        Interval { lo, hi }
    }

    /// Interval square, tight around zero-straddling inputs.
    pub fn square(&self) -> Interval {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            Interval {
                lo: Rat::zero(),
                hi: &m * &m,
            }
        } else {
            self.mul(self)
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Interval for |x| given x in self.
    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            Interval {
                lo: Rat::zero(),
                hi: self.lo.abs().max(self.hi.abs()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_bounds_bracket() {
        let q = rat(13, 1);
        let lo = sqrt_lower(&q, 32);
        let hi = sqrt_upper(&q, 32);
        assert!(&lo * &lo <= q);
        assert!(&hi * &hi >= q);
        assert!(&hi - &lo <= pow2_inv(30));
    }

    #[test]
    fn decimal_format() {
        assert_eq!(format_decimal(&rat(1, 3), 5), "0.33333");
        assert_eq!(format_decimal(&rat(-1, 2), 2), "-0.50");
        assert_eq!(format_decimal(&rat_int(7), 0), "7");
    }

    #[test]
    fn rational_round_trip() {
        let q = parse_rational("-22/7").unwrap();
        assert_eq!(format_rational(&q), "-22/7");
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn interval_square_straddling_zero() {
        let i = Interval::new(rat(-2, 1), rat(1, 1));
        let sq = i.square();
        assert_eq!(sq.lo, Rat::zero());
        assert_eq!(sq.hi, rat(4, 1));
    }
}
