//! Exact arithmetic in a real algebraic number field Q(delta), where delta
//! is the unique root > 1 of a monic squarefree integer polynomial isolated
//! by a rational interval. Elements are rational coordinate vectors in the
//! power basis 1, delta, ..., delta^{d-1}; every comparison is decided by
//! exact interval refinement, never by floating point.

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::ratio::{Interval, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, RwLock};

use crate::roots::ConjugateCache;

pub struct NumberField {
    minpoly: Vec<BigInt>,
    degree: usize,
    poly: RatPoly,
    /// Isolating interval for delta; only ever shrinks.
    interval: RwLock<(Rat, Rat)>,
    irreducibility_verified: bool,
    pub(crate) conjugates: Mutex<ConjugateCache>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.interval();
        f.debug_struct("NumberField")
            .field("minpoly", &self.minpoly)
            .field("interval", &(a.to_string(), b.to_string()))
            .finish()
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly
    }
}
impl Eq for NumberField {}

impl NumberField {
    /// Builds the field of the unique real root delta > 1 of the given monic
    /// integer polynomial inside the open interval (a, b). The stored
    /// interval is refined to width <= 1/16 with a lower endpoint >= 1.
    pub fn new(minpoly: &[i64], root_interval: (Rat, Rat)) -> Result<Arc<NumberField>> {
        let coeffs: Vec<BigInt> = minpoly.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_bigints(coeffs, root_interval)
    }

    pub fn from_bigints(coeffs: Vec<BigInt>, root_interval: (Rat, Rat)) -> Result<Arc<NumberField>> {
        let coeffs = {
            let mut c = coeffs;
            while c.last().map_or(false, Zero::is_zero) {
                c.pop();
            }
            c
        };
        if coeffs.len() < 2 || !coeffs.last().unwrap().is_one() {
            return Err(Error::NotMonic);
        }
        let degree = coeffs.len() - 1;
        let poly = RatPoly::from_bigints(&coeffs);
        if !poly.is_squarefree() {
            return Err(Error::NotSquarefree);
        }

        // Rational roots certify reducibility for degree >= 2; for degree
        // <= 3 their absence certifies irreducibility.
        let rational_roots = RatPoly::integer_roots_of_monic(&coeffs);
        if degree >= 2 && !rational_roots.is_empty() {
            return Err(Error::NotIrreducible);
        }
        let irreducibility_verified = degree <= 3;

        let (mut a, mut b) = root_interval;
        if a >= b {
            return Err(Error::InvalidInput("empty root interval".into()));
        }
        match poly.count_roots_open(&a, &b) {
            0 => return Err(Error::NoRootInInterval),
            1 => {}
            _ => return Err(Error::MultipleRootsInInterval),
        }
        // Nudge endpoints off roots so that sign-change bisection is valid.
        for endpoint_is_lower in [true, false] {
            let mut guard = 0;
            loop {
                let e = if endpoint_is_lower { &a } else { &b };
                if !poly.eval(e).is_zero() {
                    break;
                }
                let step = (&b - &a) / Rat::from_integer(BigInt::from(4));
                if endpoint_is_lower {
                    a = &a + &step;
                } else {
                    b = &b - &step;
                }
                if poly.count_roots_open(&a, &b) != 1 {
                    return Err(Error::NoRootInInterval);
                }
                guard += 1;
                if guard > 64 {
                    return Err(Error::NoRootInInterval);
                }
            }
        }

        // Enforce delta > 1: clip the interval at 1 and re-count.
        if a < Rat::one() {
            if b <= Rat::one() {
                return Err(Error::RootNotGreaterThanOne);
            }
            if poly.eval(&Rat::one()).is_zero() {
                // The root could be exactly 1 only if 1 is a root; if the
                // isolated root is 1 it is not > 1.
                if poly.count_roots_open(&Rat::one(), &b) == 0 {
                    return Err(Error::RootNotGreaterThanOne);
                }
            }
            let clipped = Rat::one();
            if poly.count_roots_open(&clipped, &b) == 1 {
                a = clipped;
                // The endpoint 1 may be a root of another factor; nudge.
                while poly.eval(&a).is_zero() {
                    a = (&a + &b) / Rat::from_integer(BigInt::from(2));
                    if poly.count_roots_open(&a, &b) != 1 {
                        return Err(Error::RootNotGreaterThanOne);
                    }
                }
            } else {
                return Err(Error::RootNotGreaterThanOne);
            }
        }

        let field = NumberField {
            minpoly: coeffs,
            degree,
            poly,
            interval: RwLock::new((a, b)),
            irreducibility_verified,
            conjugates: Mutex::new(ConjugateCache::default()),
        };
        field.refine_until_width(&crate::ratio::rat(1, 16));
        Ok(Arc::new(field))
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn minpoly_rat(&self) -> &RatPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// True when irreducibility of the defining polynomial was verified
    /// exactly (degree <= 3); for higher degrees it is assumed.
    pub fn irreducibility_verified(&self) -> bool {
        self.irreducibility_verified
    }

    /// Snapshot of the current isolating interval.
    pub fn interval(&self) -> (Rat, Rat) {
        self.interval.read().expect("interval lock").clone()
    }

    /// One bisection step; keeps exactly one root inside.
    pub fn refine_once(&self) {
        let mut guard = self.interval.write().expect("interval lock");
        let (a, b) = guard.clone();
        let two = Rat::from_integer(BigInt::from(2));
        let mid = (&a + &b) / &two;
        let fm = self.poly.eval(&mid);
        if fm.is_zero() {
            // Rational root: shrink symmetrically around it.
            let w = (&b - &a) / Rat::from_integer(BigInt::from(8));
            *guard = (&mid - &w, &mid + &w);
            return;
        }
        let fa = self.poly.eval(&a);
        if fa.is_positive() == fm.is_positive() {
            *guard = (mid, b);
        } else {
            *guard = (a, mid);
        }
    }

    pub fn refine_until_width(&self, width: &Rat) {
        loop {
            let (a, b) = self.interval();
            if &(&b - &a) <= width {
                return;
            }
            self.refine_once();
        }
    }

    /// f64 approximation of delta (diagnostics only; never used in decisions).
    pub fn delta_approx(&self) -> f64 {
        let (a, b) = self.interval();
        ((&a + &b) / Rat::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            field: Arc::clone(self),
            coords: vec![Rat::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(Rat::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rat) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree];
        coords[0] = q;
        FieldElement {
            field: Arc::clone(self),
            coords,
        }
    }

    pub fn from_i64(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_rational(Rat::from_integer(BigInt::from(n)))
    }

    /// delta as a field element. For degree 1 this is the rational root.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        if self.degree == 1 {
            let root = -Rat::from_integer(self.minpoly[0].clone());
            self.from_rational(root)
        } else {
            let mut coords = vec![Rat::zero(); self.degree];
            coords[1] = Rat::one();
            FieldElement {
                field: Arc::clone(self),
                coords,
            }
        }
    }

    /// Builds an element from power-basis coordinates (length == degree).
    pub fn element(self: &Arc<Self>, coords: Vec<Rat>) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates, got {}",
                self.degree,
                coords.len()
            )));
        }
        Ok(FieldElement {
            field: Arc::clone(self),
            coords,
        })
    }
}

/// An element of Q(delta) as exact power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rat>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement[{}]", self.to_poly_string())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact total order by real value (panics on mixed fields).
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The element as a rational if its higher coordinates vanish.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn coord_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    fn check_same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn from_poly(field: &Arc<NumberField>, poly: RatPoly) -> FieldElement {
        let reduced = poly.rem(field.minpoly_rat());
        let mut coords = reduced.coeffs().to_vec();
        coords.resize(field.degree(), Rat::zero());
        FieldElement {
            field: Arc::clone(field),
            coords,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<FieldElement> {
        self.check_same_field(other)?;
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<FieldElement> {
        self.check_same_field(other)?;
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<FieldElement> {
        self.check_same_field(other)?;
        Ok(Self::from_poly(
            &self.field,
            self.coord_poly().mul(&other.coord_poly()),
        ))
    }

    /// Exact division; the divisor is inverted by the extended Euclidean
    /// algorithm modulo the defining polynomial.
    pub fn try_div(&self, other: &Self) -> Result<FieldElement> {
        self.check_same_field(other)?;
        Ok(self.try_mul(&other.inverse()?)?)
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.coord_poly().ext_gcd(self.field.minpoly_rat());
        if g.degree() != 0 {
            // Only possible if the defining polynomial is reducible.
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_poly(&self.field, s))
    }

    pub fn scale(&self, q: &Rat) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut n: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Exact sign of the real value: 0 iff the coordinate vector is zero,
    /// otherwise decided by refining the isolating interval of delta until
    /// the interval evaluation of the coordinate polynomial excludes 0.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let poly = self.coord_poly();
        for _ in 0..100_000 {
            let (a, b) = self.field.interval();
            let out = poly.eval_interval(&Interval::new(a, b));
            if out.lo.is_positive() {
                return 1;
            }
            if out.hi.is_negative() {
                return -1;
            }
            self.field.refine_once();
        }
        unreachable!("sign refinement did not converge; minpoly is reducible?")
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn abs(&self) -> FieldElement {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// A rational enclosure of the real value, of width <= eps.
    pub fn enclosure(&self, eps: &Rat) -> Interval {
        if let Some(q) = self.as_rational() {
            return Interval::point(q);
        }
        let poly = self.coord_poly();
        loop {
            let (a, b) = self.field.interval();
            let out = poly.eval_interval(&Interval::new(a, b));
            if &out.width() <= eps {
                return out;
            }
            self.field.refine_once();
        }
    }

    /// f64 approximation (diagnostics only).
    pub fn approx(&self) -> f64 {
        let e = self.enclosure(&crate::ratio::rat(1, 1 << 30));
        ((&e.lo + &e.hi) / Rat::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// The unique n with n <= x < n + 1, certified by two exact sign calls.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut enc = self.enclosure(&crate::ratio::rat(1, 4));
        // Candidate from the enclosure, then certify.
        let mut n = enc.lo.floor().to_integer();
        loop {
            let low_ok = (self - &self.field.from_rational(Rat::from_integer(n.clone()))).sign()
                >= 0;
            if low_ok {
                let high_bad = (self
                    - &self
                        .field
                        .from_rational(Rat::from_integer(&n + BigInt::one())))
                .sign()
                    < 0;
                if high_bad {
                    return n;
                }
                n += BigInt::one();
            } else {
                n -= BigInt::one();
            }
            // Tighten the enclosure if the candidate drifted far.
            enc = self.enclosure(&crate::ratio::rat(1, 16));
            let _ = &enc;
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Field norm: the determinant of the multiplication-by-x matrix,
    /// equal to the product of all conjugate embeddings.
    pub fn norm(&self) -> Rat {
        let d = self.field.degree();
        // Columns are the coordinates of x * delta^j.
        let gen = self.field.generator();
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        for _ in 0..d {
            cols.push(cur.coords.clone());
            cur = &cur * &gen;
        }
        // Row-major matrix m[i][j] = coordinate i of x * delta^j.
        let mut m: Vec<Vec<Rat>> = (0..d)
            .map(|i| (0..d).map(|j| cols[j][i].clone()).collect())
            .collect();
        // Gaussian elimination over Q.
        let mut det = Rat::one();
        for col in 0..d {
            let pivot = (col..d).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else {
                return Rat::zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pv = m[col][col].clone();
            det *= &pv;
            for r in col + 1..d {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pv;
                for c in col..d {
                    let sub = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        det
    }

    /// Human-readable polynomial string in the generator, e.g. "-2 + d".
    pub fn to_poly_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = crate::ratio::format_rational(c);
            let term = match i {
                0 => coeff,
                1 if c.is_one() => "d".to_string(),
                1 if (-c).is_one() => "-d".to_string(),
                1 => format!("{coeff}*d"),
                _ if c.is_one() => format!("d^{i}"),
                _ if (-c).is_one() => format!("-d^{i}"),
                _ => format!("{coeff}*d^{i}"),
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (k, t) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

macro_rules! elem_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

elem_binop!(Add, add, try_add);
elem_binop!(Sub, sub, try_sub);
elem_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
