//! Exact census of finite group actions on the projective line and on
//! elliptic curves over finite fields.
//!
//! The algebraic closure of F_p is approximated by explicit finite levels
//! F_{p^n}; every result states the level it was computed at. Subgroups of
//! PGL2 are enumerated by their stabilized loci (the ramification loci of
//! the corresponding Galois covers), and the elementary abelian p-groups with
//! a single stabilized point are counted through additive subgroups of the
//! field, whose number grows without bound along the tower.

pub mod census;
pub mod elliptic;
mod error;
pub mod gfq;
pub mod groups;
pub mod moebius;
pub mod report;

pub use error::{Error, Result};
pub use gfq::{Embedding, Field, FqElem, Modulus, Poly};
pub use moebius::{Moebius, RamPoint, PP1};
