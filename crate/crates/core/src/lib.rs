//! Digit-restricted numeration languages.
//!
//! Languages of base-b representations are described declaratively
//! ([`langspec`]), compiled into position-aware counting automata, and then
//! studied through several lenses: exact per-length counts and recurrences
//! ([`counting`]), cluster-method generating functions ([`cluster`]),
//! automatic and regular sequences ([`regular`]), dominant roots and Pisot
//! checks ([`spectral`]), and the abscissa of convergence of the associated
//! Dirichlet series ([`dirichlet`]). The non-regular evil-position language
//! has its own module ([`evilwords`]).

pub mod cluster;
pub mod counting;
pub mod dirichlet;
pub mod error;
pub mod evilwords;
pub mod langspec;
pub mod linalg;
pub mod manifest;
pub mod numeration;
pub mod oeis;
pub mod poly;
pub mod regular;
pub mod repro;
pub mod spectral;

pub use error::{Error, Result};
pub use langspec::{CountingAutomaton, LanguageKind, LanguageSpec, LeadingZeroPolicy};
pub use numeration::DigitWord;
pub use poly::IntPolynomial;
