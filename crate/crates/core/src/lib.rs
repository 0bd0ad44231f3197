//! Combinatorial realizations of Kashiwara crystals for `sl(n+1)`.
//!
//! Three models are provided, all sharing the [`Crystal`] interface:
//!
//! * [`Multisegment`]: a bicrystal realization of `B(∞)` driven by bracket
//!   strings over segments, with Saito reflections and the σ-chain.
//! * [`Tableau`]: semistandard Young tableaux with entries `0..=n`, realizing
//!   `B(λ)`, together with the weak embedding into multisegments.
//! * [`LusztigDatum`]: PBW exponents for the reduced word
//!   `s1 s2 ... sn s1 ... s(n-1) ... s1`, carried onto multisegments by the
//!   bijection [`pbw::phi`].
//!
//! The [`verify`] module enumerates finite graded pieces and checks the
//! structural identities relating these models exhaustively.

pub mod bracket;
pub mod crystal;
pub mod document;
pub mod error;
pub mod multisegment;
pub mod pbw;
pub mod tableau;
pub mod verify;

pub use bracket::{Bracket, BracketKind, BracketString, BracketToken};
pub use crystal::{jump, pairing, phi_from_eps, Bicrystal, Crystal, Rank, Weight};
pub use document::Document;
pub use error::{CrystalError, DocumentError};
pub use multisegment::{Multisegment, Segment, SigmaStep, SigmaTrace};
pub use pbw::{LusztigDatum, RootOrder};
pub use tableau::{Partition, Tableau};
