//! Shared fixtures for unit tests: the bases worked out in the worked
//! examples of the domain literature.

use crate::expansion::AlternateBase;
use crate::numberfield::NumberField;
use crate::ratio::{rat, rat_int};
use std::sync::Arc;

/// Q(delta) for delta = (3 + sqrt 13)/2, the product of the sqrt13 base.
pub fn sqrt13_field() -> Arc<NumberField> {
    NumberField::new(&[-1, -3, 1], (rat_int(3), rat_int(4))).unwrap()
}

/// The base ((1 + sqrt 13)/2, (5 + sqrt 13)/6): beta0 = delta - 1,
/// beta1 = (1 + delta)/3.
pub fn sqrt13_base() -> AlternateBase {
    let f = sqrt13_field();
    let beta0 = f.element(vec![rat_int(-1), rat_int(1)]).unwrap();
    let beta1 = f.element(vec![rat(1, 3), rat(1, 3)]).unwrap();
    AlternateBase::new(vec![beta0, beta1]).unwrap()
}

/// Q(delta) for delta = 3 phi^2, a root of x^2 - 9x + 9.
pub fn threephiphi_field() -> Arc<NumberField> {
    NumberField::new(&[9, -9, 1], (rat_int(7), rat_int(8))).unwrap()
}

/// The base (3, phi, phi) with phi = (delta - 3)/3 in Q(3 phi^2).
pub fn threephiphi_base() -> AlternateBase {
    let f = threephiphi_field();
    let three = f.from_i64(3);
    let phi = f.element(vec![rat_int(-1), rat(1, 3)]).unwrap();
    AlternateBase::new(vec![three, phi.clone(), phi]).unwrap()
}

/// Q(delta) for the real root > 1 of x^6 - x^5 - 1.
pub fn x6_field() -> Arc<NumberField> {
    NumberField::new(&[-1, 0, 0, 0, 0, -1, 1], (rat_int(1), rat_int(2))).unwrap()
}

/// The base ((1 + delta^7)/delta^7, delta^8/(1 + delta^7)).
pub fn x6_alpha_base() -> AlternateBase {
    let f = x6_field();
    let d7 = f.generator().pow(7);
    let d8 = f.generator().pow(8);
    let one_plus_d7 = &f.one() + &d7;
    let alpha0 = one_plus_d7.try_div(&d7).unwrap();
    let alpha1 = d8.try_div(&one_plus_d7).unwrap();
    AlternateBase::new(vec![alpha0, alpha1]).unwrap()
}

/// The base (6/5, 5 delta/6) over the same field; its first expansion of 1
/// is aperiodic.
pub fn x6_beta65_base() -> AlternateBase {
    let f = x6_field();
    let beta0 = f.from_rational(rat(6, 5));
    let beta1 = f.generator().scale(&rat(5, 6));
    AlternateBase::new(vec![beta0, beta1]).unwrap()
}

/// The integer base (2) over Q(2).
pub fn base2() -> AlternateBase {
    let f = NumberField::new(&[-2, 1], (rat_int(1), rat_int(3))).unwrap();
    AlternateBase::new(vec![f.generator()]).unwrap()
}

/// Q(phi) and the golden-ratio base (phi).
pub fn phi_field() -> Arc<NumberField> {
    NumberField::new(&[-1, -1, 1], (rat_int(1), rat_int(2))).unwrap()
}

pub fn phi_base() -> AlternateBase {
    AlternateBase::new(vec![phi_field().generator()]).unwrap()
}
