//! Exact word/index algebra and t-adic symmetric multiple zeta values.
//!
//! The crate has two halves:
//!
//! * an exact half — words over {x, y} with shuffle product, duality and
//!   shuffle regularization; indices with harmonic (stuffle) product, index
//!   shuffle and harmonic regularization; symbolic zeta expressions; and the
//!   t-adic symmetric values built from them ([`word`], [`index`], [`expr`],
//!   [`shuffle`], [`quasi`], [`smzv`]);
//! * a numeric half — arbitrary-precision evaluation of convergent zeta
//!   values and of the symbolic expressions, plus truncated generating-series
//!   arithmetic for the identity battery ([`numeric`], [`genseries`]).
//!
//! [`closed_forms`] holds the right-hand sides the verification targets are
//! compared against, and [`verify`] packages every check into report-producing
//! runners used by both the test suite and the `smzv` binary.

pub mod closed_forms;
pub mod combinatorics;
pub mod error;
pub mod expr;
pub mod genseries;
pub mod index;
pub mod json;
pub mod lincomb;
pub mod numeric;
pub mod quasi;
pub mod shuffle;
pub mod smzv;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
