//! Exact q-series for cube roots of Dedekind eta-quotients, a Ligozat-type
//! modularity criterion, and Atkin–Swinnerton-Dyer congruence scans.
//!
//! The crate is organised bottom-up:
//!
//! - [`qseries`]: truncated series in `q^(1/M)` with exact rational coefficients.
//! - [`eta`]: eta-quotients with rational exponents, their expansions and cusp orders.
//! - [`ligozat`]: Kronecker symbols and the weight-0 modularity criterion.
//! - [`asd`]: p-adic valuations, the congruence check and the Case 1 / Case 2 scans.
//! - [`catalog`]: every concrete form used by the reproduction (blocks, tables, the newform `f`).
//! - [`search`]: enumeration of cube-root candidates and the pair scan.
//! - [`cli`]: the `asd-eta` command line front end.

pub mod asd;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod eta;
pub mod ligozat;
pub mod par;
pub mod parse;
pub mod qseries;
pub mod search;

pub use error::{Error, Result};
pub use eta::{EtaQuotient, TupleSpec};
pub use qseries::FracSeries;
