//! Exact-arithmetic toolkit for alternate-base numeration systems.
//!
//! An alternate base is a tuple beta = (beta_0, ..., beta_{p-1}) of reals
//! greater than 1 used cyclically as position-dependent bases; delta is the
//! product of the tuple. Everything here computes over the number field
//! Q(delta) with arbitrary-precision rational coordinates, so digit
//! expansions, automata state sets and algebraic certificates are exact:
//!
//! - [`numberfield`]: elements of Q(delta), sign and floor decisions, the
//!   field norm, certified conjugate embeddings, and the Pisot test;
//! - [`words`]: finite and eventually periodic digit words in canonical
//!   form, with lexicographic comparison and pairing;
//! - [`expansion`]: greedy and quasi-greedy expansions, exact remainders,
//!   admissibility, and Parry detection;
//! - [`spectrum`]: grouped digit alphabets, truncated spectra, minimum
//!   gaps, and the Pisot separation bound;
//! - [`automata`]: Buchi automata with lasso acceptance, the zero
//!   automata, block grouping, and DOT/JSON export;
//! - [`polysystem`]: polynomials associated with eventually periodic
//!   expansions, the base polynomial matrix, and exact base recovery;
//! - [`normalization`]: the converter, the greedy automaton, their
//!   product, and the normalization oracle;
//! - [`config`]: JSON descriptions of fields and bases.

pub mod automata;
pub mod config;
pub mod error;
pub mod expansion;
pub mod normalization;
pub mod numberfield;
pub mod pisot;
pub mod poly;
pub mod polysystem;
pub mod ratio;
pub mod roots;
pub mod spectrum;
pub mod words;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil;
pub use numberfield::{FieldElement, NumberField};
pub use words::{EvWord, EventuallyPeriodicWord, FiniteWord, PairWord};
