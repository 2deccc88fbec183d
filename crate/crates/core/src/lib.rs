//! Symbolic invariants of ribbon 2-knots and their Gluck twists.
//!
//! The crate works entirely at the level of handle counts and fundamental
//! group presentations: words and presentations ([`word`],
//! [`presentation`]), integer Laurent polynomials and Smith normal forms
//! ([`laurent`], [`matrix`]), Fox calculus and Alexander polynomials
//! ([`fox`]), Todd-Coxeter enumeration ([`coset`]) and the 2-knot model
//! itself ([`twoknot`]).

pub mod coset;
pub mod error;
pub mod fox;
pub mod laurent;
pub mod matrix;
pub mod presentation;
pub mod twoknot;
pub mod word;

pub use coset::{certify_trivial, enumerate, EnumerationOutcome, EnumerationStatus, Triviality};
pub use error::Error;
pub use fox::{alexander_polynomial, AlexanderResult, Principality};
pub use laurent::LaurentPolynomial;
pub use matrix::{cokernel, smith_normal_form, AbelianGroup, IntMatrix, SmithForm};
pub use presentation::Presentation;
pub use twoknot::{
    classify, family_knot, family_record, family_relator, FamilyRecord, GluckVariant, HandleCounts,
    ParityClass, RibbonTwoKnot,
};
pub use word::{Generator, Letter, Word};
