//! Dense univariate polynomials over the rationals: Euclidean arithmetic,
//! Sturm sequences and interval evaluation. Coefficients are stored in
//! ascending degree with a nonzero leading coefficient (zero = empty).

use crate::ratio::{Interval, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation over a rational interval.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Interval::point(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dlen + 1];
        let inv_lead = Rat::one() / divisor.leading();
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dlen - 1] * &inv_lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&q * d);
                }
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let inv = Rat::one() / self.leading();
        self.scale(&inv)
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn ext_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Rat::one() / r0.leading();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree() <= 1 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Coefficient reversal x^n p(1/x).
    pub fn reversed(&self) -> RatPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RatPoly::new(coeffs)
    }

    /// Sturm chain of self (which should be squarefree for exact counts).
    pub fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                return chain;
            }
            chain.push(r.scale(&-Rat::one()));
        }
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots_half_open(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        let chain = self.sturm_chain();
        let variations = |x: &Rat| -> usize {
            let mut count = 0;
            let mut last = 0i8;
            for p in &chain {
                let v = p.eval(x);
                let s = if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                };
                if s != 0 {
                    if last != 0 && s != last {
                        count += 1;
                    }
                    last = s;
                }
            }
            count
        };
        variations(a).saturating_sub(variations(b))
    }

    /// Number of distinct real roots in the open interval (a, b).
    pub fn count_roots_open(&self, a: &Rat, b: &Rat) -> usize {
        let mut n = self.count_roots_half_open(a, b);
        if !self.eval(b).is_zero() {
            return n;
        }
        if n > 0 {
            n -= 1;
        }
        n
    }

    /// Rational roots of a monic integer polynomial (candidates are integer
    /// divisors of the constant term).
    pub fn integer_roots_of_monic(coeffs: &[BigInt]) -> Vec<BigInt> {
        let poly = RatPoly::from_bigints(coeffs);
        let c0 = &coeffs[0];
        if c0.is_zero() {
            let mut roots = vec![BigInt::zero()];
            // Strip x factors and recurse on the rest.
            let reduced: Vec<BigInt> = coeffs[1..].to_vec();
            if reduced.len() > 1 {
                for r in Self::integer_roots_of_monic(&reduced) {
                    if !r.is_zero() {
                        roots.push(r);
                    }
                }
            }
            return roots;
        }
        let mut roots = Vec::new();
        let limit = c0.abs();
        let mut d = BigInt::one();
        while d <= limit {
            if (&limit % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    if poly.eval(&Rat::from_integer(cand.clone())).is_zero() {
                        roots.push(cand);
                    }
                }
            }
            d += 1;
        }
        roots.sort();
        roots.dedup();
        roots
    }
}
