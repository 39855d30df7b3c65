//! Exact computations for Iwahori-Hecke algebras of finite Weyl groups with
//! unequal parameters: Kazhdan-Lusztig bases and Lusztig's ring J, Schur
//! elements, Fock space crystals and canonical basic sets.

pub mod basicsets;
pub mod coxeter;
pub mod laurent;

pub use coxeter::{CoxeterType, WeightFunction, WeylGroup};
pub use laurent::LaurentPoly;
pub mod fock;
pub mod klcells;
mod par;
pub mod schur;
