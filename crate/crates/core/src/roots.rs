//! Certified complex enclosures for the conjugate roots of the defining
//! polynomial. Approximations come from floating-point Durand-Kerner
//! iteration; everything that is *claimed* is then established in exact
//! rational arithmetic: a disk of radius d*|p(z)/p'(z)| around any point z
//! contains at least one root, so d pairwise disjoint such disks contain
//! exactly one root each.

use crate::error::{Error, Result};
use crate::numberfield::{FieldElement, NumberField};
use crate::ratio::{pow2_inv, round_dyadic, sqrt_lower, sqrt_upper, Interval, Rat};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A certified axis-aligned box around a complex value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn point(re: Rat, im: Rat) -> Self {
        ComplexInterval {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    pub fn real_lo(&self) -> &Rat {
        &self.re.lo
    }
    pub fn real_hi(&self) -> &Rat {
        &self.re.hi
    }
    pub fn imag_lo(&self) -> &Rat {
        &self.im.lo
    }
    pub fn imag_hi(&self) -> &Rat {
        &self.im.hi
    }

    pub fn width(&self) -> Rat {
        self.re.width().max(self.im.width())
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexInterval {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ComplexInterval {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    /// Exact rational interval for |z|^2.
    pub fn modulus_squared(&self) -> Interval {
        self.re.square().add(&self.im.square())
    }

    /// Certified rational bounds on |z|, within 2^-bits each.
    pub fn modulus_bounds(&self, bits: u32) -> (Rat, Rat) {
        let sq = self.modulus_squared();
        (sqrt_lower(&sq.lo, bits), sqrt_upper(&sq.hi, bits))
    }
}

/// A disk certified to contain exactly one root of the defining polynomial.
#[derive(Debug, Clone)]
pub struct RootDisk {
    pub re: Rat,
    pub im: Rat,
    pub radius: Rat,
}

impl RootDisk {
    pub fn to_box(&self) -> ComplexInterval {
        ComplexInterval {
            re: Interval::new(&self.re - &self.radius, &self.re + &self.radius),
            im: Interval::new(&self.im - &self.radius, &self.im + &self.radius),
        }
    }
}

#[derive(Default)]
pub struct ConjugateCache {
    disks: Vec<RootDisk>,
    delta_index: usize,
    quality_bits: u32,
    valid: bool,
}

// Gaussian rational arithmetic for exact evaluation at complex points.
#[derive(Clone)]
struct GRat {
    re: Rat,
    im: Rat,
}

impl GRat {
    fn add(&self, o: &GRat) -> GRat {
        GRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &GRat) -> GRat {
        GRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &GRat) -> GRat {
        GRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
    fn div(&self, o: &GRat) -> GRat {
        let n = o.norm_sq();
        let conj = GRat {
            re: o.re.clone(),
            im: -o.im.clone(),
        };
        let p = self.mul(&conj);
        GRat {
            re: p.re / &n,
            im: p.im / &n,
        }
    }
}

fn eval_grat(coeffs: &[BigInt], z: &GRat) -> GRat {
    let mut acc = GRat {
        re: Rat::zero(),
        im: Rat::zero(),
    };
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(&GRat {
            re: Rat::from_integer(c.clone()),
            im: Rat::zero(),
        });
    }
    acc
}

fn derivative_coeffs(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// Durand-Kerner iteration in f64; the output is only a starting guess.
fn durand_kerner(coeffs: &[BigInt]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let fc: Vec<f64> = coeffs.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in fc.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // Cauchy-style radius for initial guesses.
    let bound = 1.0
        + fc[..n]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32 + 1) / seed.norm().powi(k as i32) * bound * 0.7)
        .collect();
    for _ in 0..400 {
        let mut delta_max = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 1e-12);
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta_max = delta_max.max(step.norm());
        }
        if delta_max < 1e-14 {
            break;
        }
    }
    roots
}

/// One exact Newton step, rounded to dyadic rationals with 2^-bits grid.
fn newton_step(coeffs: &[BigInt], deriv: &[BigInt], z: &GRat, bits: u32) -> GRat {
    let pz = eval_grat(coeffs, z);
    let dz = eval_grat(deriv, z);
    if dz.norm_sq().is_zero() {
        return GRat {
            re: &z.re + &pow2_inv(bits),
            im: z.im.clone(),
        };
    }
    let next = z.sub(&pz.div(&dz));
    GRat {
        re: round_dyadic(&next.re, bits),
        im: round_dyadic(&next.im, bits),
    }
}

/// Certified radius: the disk |w - z| <= d |p(z)/p'(z)| contains a root.
fn certified_radius(coeffs: &[BigInt], deriv: &[BigInt], z: &GRat) -> Option<Rat> {
    let pz = eval_grat(coeffs, z);
    let dz = eval_grat(deriv, z);
    let dsq = dz.norm_sq();
    if dsq.is_zero() {
        return None;
    }
    let d = coeffs.len() - 1;
    let r_sq = pz.norm_sq() / dsq * Rat::from_integer(BigInt::from((d * d) as u64));
    Some(sqrt_upper(&r_sq, 80))
}

fn pairwise_disjoint(disks: &[RootDisk]) -> bool {
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let dre = &disks[i].re - &disks[j].re;
            let dim = &disks[i].im - &disks[j].im;
            let dist_sq = &dre * &dre + &dim * &dim;
            let rsum = &disks[i].radius + &disks[j].radius;
            if dist_sq <= &rsum * &rsum {
                return false;
            }
        }
    }
    true
}

/// Finds the unique disk that meets the real isolating segment of delta.
fn delta_disk_index(disks: &[RootDisk], interval: &(Rat, Rat)) -> Option<usize> {
    let (a, b) = interval;
    let mut hit = None;
    for (k, disk) in disks.iter().enumerate() {
        let im_touches_axis = disk.im.abs() <= disk.radius;
        let re_lo = &disk.re - &disk.radius;
        let re_hi = &disk.re + &disk.radius;
        let re_overlaps = &re_hi >= a && &re_lo <= b;
        if im_touches_axis && re_overlaps {
            if hit.is_some() {
                return None; // ambiguous, refine further
            }
            hit = Some(k);
        }
    }
    hit
}

/// Ensures the cache holds pairwise disjoint root disks of radius
/// <= 2^-bits with the delta disk identified unambiguously.
pub(crate) fn ensure_disks(field: &NumberField, bits: u32) -> Result<(Vec<RootDisk>, usize)> {
    let mut cache = field.conjugates.lock().expect("conjugate cache lock");
    if cache.valid && cache.quality_bits >= bits {
        return Ok((cache.disks.clone(), cache.delta_index));
    }
    let coeffs = field.minpoly().to_vec();
    let deriv = derivative_coeffs(&coeffs);
    let target = pow2_inv(bits);

    let mut centers: Vec<GRat> = if cache.valid {
        cache
            .disks
            .iter()
            .map(|d| GRat {
                re: d.re.clone(),
                im: d.im.clone(),
            })
            .collect()
    } else {
        durand_kerner(&coeffs)
            .into_iter()
            .map(|z| GRat {
                re: Rat::from_float(z.re).unwrap_or_else(Rat::zero),
                im: Rat::from_float(z.im).unwrap_or_else(Rat::zero),
            })
            .collect()
    };

    let mut work_bits = bits.max(64);
    for _round in 0..64 {
        let mut disks = Vec::with_capacity(centers.len());
        let mut all_good = true;
        for z in &centers {
            match certified_radius(&coeffs, &deriv, z) {
                Some(radius) => {
                    if radius > target {
                        all_good = false;
                    }
                    disks.push(RootDisk {
                        re: z.re.clone(),
                        im: z.im.clone(),
                        radius,
                    });
                }
                None => {
                    all_good = false;
                    disks.push(RootDisk {
                        re: z.re.clone(),
                        im: z.im.clone(),
                        radius: Rat::one(),
                    });
                }
            }
        }
        if all_good && pairwise_disjoint(&disks) {
            if let Some(idx) = delta_disk_index(&disks, &field.interval()) {
                cache.disks = disks.clone();
                cache.delta_index = idx;
                cache.quality_bits = bits;
                cache.valid = true;
                return Ok((disks, idx));
            }
        }
        centers = centers
            .iter()
            .map(|z| newton_step(&coeffs, &deriv, z, work_bits))
            .collect();
        work_bits = work_bits.saturating_mul(2).min(1 << 22);
    }
    Err(Error::RootEnclosureFailure)
}

/// Certified boxes for the d-1 conjugate roots (delta excluded), ordered by
/// (real part, imaginary part) of their enclosures.
pub fn conjugate_boxes(field: &NumberField, bits: u32) -> Result<Vec<ComplexInterval>> {
    let mut bits = bits.max(8);
    for _ in 0..32 {
        let (disks, delta_idx) = ensure_disks(field, bits)?;
        let mut conj: Vec<&RootDisk> = disks
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != delta_idx)
            .map(|(_, d)| d)
            .collect();
        // Order by real part when the enclosures separate it, otherwise by
        // imaginary part; retry at higher precision when incomparable.
        let mut ok = true;
        conj.sort_by(|x, y| {
            let re_gap = (&x.re - &y.re).abs();
            if re_gap > &x.radius + &y.radius {
                return x.re.cmp(&y.re);
            }
            let im_gap = (&x.im - &y.im).abs();
            if im_gap > &x.radius + &y.radius {
                return x.im.cmp(&y.im);
            }
            ok = false;
            std::cmp::Ordering::Equal
        });
        if ok {
            return Ok(conj.into_iter().map(|d| d.to_box()).collect());
        }
        bits *= 2;
    }
    Err(Error::RootEnclosureFailure)
}

/// Evaluates the conjugate embedding psi_k(x): the coordinate polynomial of
/// x at the k-th conjugate root, certified to width <= 2^-precision.
pub fn conjugate_embed(x: &FieldElement, conj_index: usize, precision: u32) -> Result<ComplexInterval> {
    let field = x.field();
    if conj_index + 1 >= field.degree().max(1) {
        if field.degree() <= 1 {
            return Err(Error::InvalidInput(
                "degree-1 field has no conjugate embeddings".into(),
            ));
        }
        return Err(Error::InvalidInput(format!(
            "conjugate index {} out of range (degree {})",
            conj_index,
            field.degree()
        )));
    }
    let target = pow2_inv(precision);
    let mut bits = precision.max(16);
    for _ in 0..24 {
        let boxes = conjugate_boxes(field, bits)?;
        let root = &boxes[conj_index];
        let mut acc = ComplexInterval::point(Rat::zero(), Rat::zero());
        for c in x.coords().iter().rev() {
            acc = acc
                .mul(root)
                .add(&ComplexInterval::point(c.clone(), Rat::zero()));
        }
        if acc.width() <= target {
            return Ok(acc);
        }
        bits = bits.saturating_mul(2).min(1 << 22);
    }
    Err(Error::RootEnclosureFailure)
}

/// Certified (lower, upper) bounds on |psi_k(delta)| for every conjugate.
pub fn conjugate_modulus_bounds(field: &NumberField, bits: u32) -> Result<Vec<(Rat, Rat)>> {
    let boxes = conjugate_boxes(field, bits)?;
    Ok(boxes
        .iter()
        .map(|b| b.modulus_bounds(bits.max(32)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::NumberField;
    use crate::ratio::{rat, rat_int};

    #[test]
    fn sqrt13_conjugate_enclosure() {
        let f = NumberField::new(&[-1, -3, 1], (rat_int(3), rat_int(4))).unwrap();
        let d = f.generator();
        let boxed = conjugate_embed(&d, 0, 40).unwrap();
        // (3 - sqrt 13)/2 ~ -0.302776
        assert!(boxed.im.contains_zero());
        assert!(*boxed.real_lo() <= rat(-30277, 100000));
        assert!(*boxed.real_hi() >= rat(-30278, 100000));
        assert!(boxed.width() <= pow2_inv(40));
    }

    #[test]
    fn rational_fixed_by_all_embeddings() {
        let f = NumberField::new(&[-1, 0, 0, 0, 0, -1, 1], (rat_int(1), rat_int(2))).unwrap();
        let one = f.one();
        for k in 0..5 {
            let b = conjugate_embed(&one, k, 30).unwrap();
            assert!(b.re.lo <= Rat::one() && Rat::one() <= b.re.hi);
            assert!(b.im.contains_zero());
        }
    }

    #[test]
    fn x6_has_two_conjugates_outside_unit_circle() {
        let f = NumberField::new(&[-1, 0, 0, 0, 0, -1, 1], (rat_int(1), rat_int(2))).unwrap();
        let bounds = conjugate_modulus_bounds(&f, 48).unwrap();
        assert_eq!(bounds.len(), 5);
        let outside = bounds.iter().filter(|(lo, _)| lo > &Rat::one()).count();
        let inside = bounds.iter().filter(|(_, hi)| hi < &Rat::one()).count();
        assert_eq!(outside, 2);
        assert_eq!(inside, 3);
    }

    #[test]
    fn product_of_embeddings_encloses_norm() {
        let f = NumberField::new(&[-1, -3, 1], (rat_int(3), rat_int(4))).unwrap();
        for x in [
            f.generator(),
            f.element(vec![rat(2, 3), rat(-1, 5)]).unwrap(),
        ] {
            let norm = x.norm();
            // psi_1 is the identity embedding.
            let real = x.enclosure(&pow2_inv(32));
            let conj = conjugate_embed(&x, 0, 32).unwrap();
            let prod = conj.mul(&ComplexInterval {
                re: real,
                im: Interval::point(Rat::zero()),
            });
            assert!(prod.re.lo <= norm && norm <= prod.re.hi);
            assert!(prod.im.contains_zero());
        }
    }
}
