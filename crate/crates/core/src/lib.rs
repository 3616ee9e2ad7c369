//! Exact constructive commutative algebra over countable, strongly discrete
//! rings.
//!
//! The centre of the crate is [`maximal::MaximalIdeal`]: walking an
//! enumeration `x_0, x_1, …` and admitting `x_n` as a generator exactly when
//! `1 ∉ (G_n) + (x_n)`. With decidable unit-ideal tests the resulting ideal is
//! detachable and its quotient is a geometric field, which powers Kronecker
//! root adjunction ([`field::tower`]), prime ideals avoiding non-nilpotent
//! elements ([`spectrum`]) and the executable verifiers in [`theorems`].

pub mod enumeration;
pub mod error;
pub mod field;
pub mod maximal;
pub mod parse;
pub mod ring;
pub mod spectrum;
pub mod theorems;
pub mod witness;

pub use enumeration::Enumeration;
pub use error::{Error, Result};
pub use maximal::{Dichotomy, MaximalIdeal};
pub use ring::{EuclideanDomain, Field, FiniteField, Ring};
pub use witness::MembershipWitness;
