//! Exact symbolic engine for a two-parameter deformation of the genus-two
//! skein algebra and its specializations.
//!
//! The algebra has fifteen generators subject to a normal-ordering table, a
//! central relation and a canonical-form relator set that together solve the
//! word problem in four settings at once: the generic noncommutative algebra,
//! its `t = q` skein specialization, the commutative `q = 1` classical limit
//! and the `q = t = 1` coordinate ring of the SL(2) character variety of a
//! closed genus-two surface. On top of the word problem the crate implements
//! the mapping class group action by algebra automorphisms, the faithful
//! representation by q-difference operators, the Poisson bracket extracted
//! from the flat family, and exact finite-field validation against sampled
//! SL(2) surface-group representations.
//!
//! Entry points:
//! - [`engine::Engine`] — canonical forms, products, structure constants;
//! - [`mcg`] — Dehn twists and the order-6 rotation acting on all four algebras;
//! - [`qdiff`] — shift-operator representation and its classical limit;
//! - [`poisson`] — the bracket on the `q = 1` algebra and its `t = 1` limit;
//! - [`charvar`] — finite-field surface-group sampling and trace identities;
//! - [`cli`] — the command-line front end (see the `genus2` binary).

pub mod bundle;
pub mod charvar;
pub mod cli;
pub mod engine;
pub mod free;
pub mod gens;
pub mod mcg;
pub mod parse;
pub mod poisson;
pub mod print;
pub mod qdiff;
pub mod qt;
pub mod relators;
pub mod report;
pub mod table;
pub mod transcription;
pub mod xring;
