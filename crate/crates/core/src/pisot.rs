//! Exact Pisot test: delta > 1 is Pisot iff the other d-1 roots of its
//! defining polynomial lie strictly inside the unit circle.
//!
//! Roots on the circle are detected first via gcd with the reciprocal
//! polynomial and a Chebyshev-style substitution counted by Sturm
//! sequences. The strict interior count then runs the Schur-Cohn
//! transform over the ordered field Q(eps) of rational polynomials in an
//! infinitesimal eps, applied to p((1+eps)z): for every minpoly with
//! constant term +-1 the plain rational transform degenerates at the first
//! step, while the infinitesimal radius bump makes every step decisive and
//! counts the roots of modulus <= 1.

use crate::error::{Error, Result};
use crate::numberfield::NumberField;
use crate::poly::RatPoly;
use crate::ratio::Rat;
use crate::roots::conjugate_modulus_bounds;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in eps, ascending powers; sign as eps -> 0+ is the
/// sign of the lowest-order nonzero coefficient. All Schur-Cohn iterates
/// stay integral because the seed coefficients are integral.
#[derive(Debug, Clone, PartialEq, Eq)]
struct EpsPoly(Vec<BigInt>);

impl EpsPoly {
    fn zero() -> Self {
        EpsPoly(Vec::new())
    }

    fn trim(&mut self) {
        while self.0.last().map_or(false, Zero::is_zero) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn sign(&self) -> i8 {
        for c in &self.0 {
            if c.is_positive() {
                return 1;
            }
            if c.is_negative() {
                return -1;
            }
        }
        0
    }

    fn sub(&self, other: &EpsPoly) -> EpsPoly {
        let n = self.0.len().max(other.0.len());
        let get = |p: &EpsPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(BigInt::zero);
        let mut out = EpsPoly((0..n).map(|i| get(self, i) - get(other, i)).collect());
        out.trim();
        out
    }

    fn mul(&self, other: &EpsPoly) -> EpsPoly {
        if self.is_zero() || other.is_zero() {
            return EpsPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = EpsPoly(out);
        p.trim();
        p
    }
}

/// (1 + eps)^k as an EpsPoly.
fn one_plus_eps_pow(k: usize) -> EpsPoly {
    let mut coeffs = vec![BigInt::zero(); k + 1];
    let mut binom = BigInt::one();
    for (j, c) in coeffs.iter_mut().enumerate() {
        *c = binom.clone();
        binom = &binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    EpsPoly(coeffs)
}

/// Number of roots of the integer polynomial with |z| <= 1, assuming no
/// roots exactly on the unit circle. Returns None when the transform
/// degenerates identically (callers fall back to certified enclosures).
fn schur_cohn_closed_count(coeffs: &[BigInt]) -> Option<usize> {
    // f((1+eps) z): coefficient k picks up (1+eps)^k.
    let f: Vec<EpsPoly> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| EpsPoly(vec![c.clone()]).mul(&one_plus_eps_pow(k)))
        .collect();
    count_inside(&f)
}

/// Scales every coefficient by the same positive unit of Q(eps): a common
/// power of eps and the integer content. Root locations and all sign
/// decisions are invariant, while the entries stay small.
fn normalize_level(g: &mut [EpsPoly]) {
    let shift = g
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.0.iter().position(|x| !x.is_zero()).unwrap_or(0))
        .min()
        .unwrap_or(0);
    if shift > 0 {
        for c in g.iter_mut() {
            if !c.is_zero() {
                c.0.drain(..shift);
            }
        }
    }
    let mut content = BigInt::zero();
    for c in g.iter() {
        for x in &c.0 {
            content = num_integer::gcd(content, x.clone());
            if content.is_one() {
                return;
            }
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for c in g.iter_mut() {
        for x in c.0.iter_mut() {
            *x = &*x / &content;
        }
    }
}

fn count_inside(f: &[EpsPoly]) -> Option<usize> {
    let mut f: Vec<EpsPoly> = f.to_vec();
    while f.last().map_or(false, EpsPoly::is_zero) {
        f.pop();
    }
    if f.len() <= 1 {
        return Some(0);
    }
    let n = f.len() - 1;
    let a0 = f[0].clone();
    let an = f[n].clone();
    if a0.is_zero() {
        // Roots at the origin are inside; divide one factor of z out.
        return count_inside(&f[1..]).map(|m| m + 1);
    }
    // g = a0 * f - an * reverse(f); g(0) = a0^2 - an^2 decides the Rouche
    // comparison of |a0 f| and |an f~| on the circle.
    let mut g: Vec<EpsPoly> = (0..=n)
        .map(|i| a0.mul(&f[i]).sub(&an.mul(&f[n - i])))
        .collect();
    normalize_level(&mut g);
    let gamma = g[0].clone();
    if gamma.is_zero() {
        return None;
    }
    let m = count_inside(&g)?;
    Some(if gamma.sign() > 0 { m } else { n - m })
}

/// Monic Chebyshev-like basis: P_j(x + 1/x) = x^j + x^-j.
fn chebyshev_basis(m: usize) -> Vec<RatPoly> {
    let mut basis = vec![
        RatPoly::constant(Rat::from_integer(BigInt::from(2))),
        RatPoly::new(vec![Rat::zero(), Rat::one()]),
    ];
    while basis.len() <= m {
        let n = basis.len();
        let next = basis[1].mul(&basis[n - 1]).sub(&basis[n - 2]);
        basis.push(next);
    }
    basis
}

/// Number of roots of the squarefree integer polynomial on |z| = 1.
fn unit_circle_root_count(poly: &RatPoly) -> Result<usize> {
    let g = poly.gcd(&poly.reversed());
    if g.degree() == 0 {
        return Ok(0);
    }
    let mut g = g;
    let mut count = 0;
    let one = Rat::one();
    if g.eval(&one).is_zero() {
        count += 1;
        g = g.div_rem(&RatPoly::new(vec![-one.clone(), Rat::one()])).0;
    }
    let minus_one = -Rat::one();
    if g.eval(&minus_one).is_zero() {
        count += 1;
        g = g.div_rem(&RatPoly::new(vec![Rat::one(), Rat::one()])).0;
    }
    if g.degree() == 0 {
        return Ok(count);
    }
    let deg = g.degree();
    if deg % 2 != 0 {
        return Err(Error::InvalidInput(
            "reciprocal factor of odd degree after removing roots at +-1".into(),
        ));
    }
    let m = deg / 2;
    let g = g.monic();
    // Inversion-closed root set without +-1 forces a palindromic factor.
    for i in 0..=deg {
        if g.coeff(i) != g.coeff(deg - i) {
            return Err(Error::InvalidInput(
                "gcd with reciprocal polynomial is not palindromic".into(),
            ));
        }
    }
    // g(x) / x^m = c_m + sum_{j>=1} c_{m+j} (x^j + x^-j) = G(x + 1/x);
    // roots on the circle correspond to roots of G in (-2, 2).
    let basis = chebyshev_basis(m);
    let mut big_g = RatPoly::constant(g.coeff(m));
    for j in 1..=m {
        big_g = big_g.add(&basis[j].scale(&g.coeff(m + j)));
    }
    let two = Rat::from_integer(BigInt::from(2));
    count += 2 * big_g.count_roots_open(&-two.clone(), &two);
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PisotAnalysis {
    pub is_pisot: bool,
    /// Roots other than delta strictly inside the unit circle.
    pub interior_roots: usize,
    /// Roots on the unit circle.
    pub boundary_roots: usize,
    /// False when the degree exceeds 3 and irreducibility was assumed.
    pub irreducibility_verified: bool,
}

/// Decides whether delta is a Pisot number.
pub fn is_pisot(field: &NumberField) -> bool {
    analyze_pisot(field).is_pisot
}

pub fn analyze_pisot(field: &NumberField) -> PisotAnalysis {
    let d = field.degree();
    let poly = field.minpoly_rat().clone();
    let boundary = unit_circle_root_count(&poly)
        .expect("squarefree minpoly admits exact circle-root analysis");
    if boundary > 0 {
        return PisotAnalysis {
            is_pisot: false,
            interior_roots: d - 1 - boundary.min(d - 1),
            boundary_roots: boundary,
            irreducibility_verified: field.irreducibility_verified(),
        };
    }
    // No boundary roots: the closed-disk count is the strict count.
    let interior = schur_cohn_closed_count(field.minpoly())
        .unwrap_or_else(|| enclosure_interior_count(field));
    PisotAnalysis {
        is_pisot: interior == d - 1,
        interior_roots: interior,
        boundary_roots: 0,
        irreducibility_verified: field.irreducibility_verified(),
    }
}

/// Fallback interior count from certified disk enclosures; valid only when
/// no root lies on the unit circle.
fn enclosure_interior_count(field: &NumberField) -> usize {
    let mut bits = 32;
    loop {
        let bounds =
            conjugate_modulus_bounds(field, bits).expect("certified enclosures for minpoly roots");
        let inside = bounds.iter().filter(|(_, hi)| hi < &Rat::one()).count();
        let outside = bounds.iter().filter(|(lo, _)| lo > &Rat::one()).count();
        if inside + outside == bounds.len() {
            return inside;
        }
        bits *= 2;
        assert!(bits <= 1 << 16, "modulus refinement did not separate from 1");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::NumberField;
    use crate::ratio::rat_int;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn schur_cohn_counts() {
        // x - 2: no roots in the closed unit disk.
        assert_eq!(schur_cohn_closed_count(&ints(&[-2, 1])), Some(0));
        // x^2 - 3x - 1: exactly the conjugate -0.3028 inside.
        assert_eq!(schur_cohn_closed_count(&ints(&[-1, -3, 1])), Some(1));
        // x^2 - x - 1: conjugate -1/phi inside.
        assert_eq!(schur_cohn_closed_count(&ints(&[-1, -1, 1])), Some(1));
        // x^6 - x^5 - 1: three roots inside, two outside besides delta.
        assert_eq!(schur_cohn_closed_count(&ints(&[-1, 0, 0, 0, 0, -1, 1])), Some(3));
        // x^2 - 9x + 9: both roots exceed 1 in modulus... the smaller root
        // (9 - 3 sqrt 5)/2 ~ 1.1459 is outside the unit disk.
        assert_eq!(schur_cohn_closed_count(&ints(&[9, -9, 1])), Some(0));
        // x^2 - 3x + 1 is self-reciprocal with roots phi^2 and phi^-2.
        assert_eq!(schur_cohn_closed_count(&ints(&[1, -3, 1])), Some(1));
    }

    #[test]
    fn circle_roots_detected() {
        // x^2 + 1 has both roots on the circle.
        let p = RatPoly::from_bigints(&ints(&[1, 0, 1]));
        assert_eq!(unit_circle_root_count(&p).unwrap(), 2);
        // x^2 - 1: roots at +-1.
        let p = RatPoly::from_bigints(&ints(&[-1, 0, 1]));
        assert_eq!(unit_circle_root_count(&p).unwrap(), 2);
        // Lehmer's polynomial is a Salem polynomial: degree 10 with exactly
        // 8 roots on the unit circle.
        let p = RatPoly::from_bigints(&ints(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        assert_eq!(unit_circle_root_count(&p).unwrap(), 8);
        // x^2 - 3x - 1 has none.
        let p = RatPoly::from_bigints(&ints(&[-1, -3, 1]));
        assert_eq!(unit_circle_root_count(&p).unwrap(), 0);
        // x^2 - 3x + 1: reciprocal pair off the circle, none on it.
        let p = RatPoly::from_bigints(&ints(&[1, -3, 1]));
        assert_eq!(unit_circle_root_count(&p).unwrap(), 0);
    }

    #[test]
    fn pisot_paper_examples() {
        let two = NumberField::new(&[-2, 1], (rat_int(1), rat_int(3))).unwrap();
        assert!(is_pisot(&two));
        let sqrt13 = NumberField::new(&[-1, -3, 1], (rat_int(3), rat_int(4))).unwrap();
        assert!(is_pisot(&sqrt13));
        let x6 = NumberField::new(&[-1, 0, 0, 0, 0, -1, 1], (rat_int(1), rat_int(2))).unwrap();
        let analysis = analyze_pisot(&x6);
        assert!(!analysis.is_pisot);
        assert_eq!(analysis.interior_roots, 3);
        assert_eq!(analysis.boundary_roots, 0);
        assert!(!analysis.irreducibility_verified);
        // Golden ratio is Pisot; 3 phi^2 (x^2 - 9x + 9) is not.
        let phi = NumberField::new(&[-1, -1, 1], (rat_int(1), rat_int(2))).unwrap();
        assert!(is_pisot(&phi));
        let threephi2 = NumberField::new(&[9, -9, 1], (rat_int(7), rat_int(8))).unwrap();
        assert!(!is_pisot(&threephi2));
        // phi^2 = (3 + sqrt 5)/2 is Pisot with a self-reciprocal minpoly.
        let phi2 = NumberField::new(&[1, -3, 1], (rat_int(2), rat_int(3))).unwrap();
        assert!(is_pisot(&phi2));
    }

    #[test]
    fn schur_cohn_matches_enclosures() {
        for coeffs in [
            vec![-2i64, 1],
            vec![-1, -3, 1],
            vec![-1, -1, 1],
            vec![9, -9, 1],
            vec![-1, 0, 0, 0, 0, -1, 1],
            vec![-1, -1, 0, 1], // tribonacci-like cubic x^3 - x - 1 (plastic number)
        ] {
            let ints: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
            let interval = (rat_int(1), rat_int(10));
            let field = match NumberField::from_bigints(ints.clone(), interval) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let sc = schur_cohn_closed_count(&ints).unwrap();
            assert_eq!(sc, enclosure_interior_count(&field), "coeffs {coeffs:?}");
        }
    }
}
