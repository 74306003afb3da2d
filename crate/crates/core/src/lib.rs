//! Z2-triple cyclic codes of block length `(r, s, t)`.
//!
//! A binary code of length `r + s + t` is triple cyclic when it is closed under
//! the simultaneous cyclic shift of its three blocks. Such codes are
//! `Z2[x]`-submodules of `Z2[x]/(x^r-1) x Z2[x]/(x^s-1) x Z2[x]/(x^t-1)` and are
//! described by six generator polynomials.
//!
//! - [`gf2poly`]: polynomial arithmetic over GF(2).
//! - [`triplecode`]: canonical generator tuples, validation, spanning sets.
//! - [`dualpair`]: the shift-invariant pairing and closed-form dual generators.
//! - [`linoracle`]: brute-force linear algebra used as an independent oracle.
//! - [`search`]: factorization of `x^n - 1` and best-distance code search.
//! - [`specfile`]: the `key=value` text format for specs.
//! - [`matrix`]: packed binary rows and row spaces.
//! - [`catalog`]: worked codes.

pub mod catalog;
pub mod dualpair;
pub mod error;
pub mod gf2poly;
pub mod linoracle;
pub mod matrix;
pub mod search;
pub mod specfile;
pub mod triplecode;

pub use error::{Error, Result};
pub use gf2poly::Gf2Poly;
pub use matrix::{BinMatrix, BitRow};
pub use triplecode::{BlockLengths, Codeword, TripleSpec};
