//! Arbitrary-precision numeric half: fixed-point reals, π, zeta values, and
//! evaluation of the symbolic layer.

pub mod bigfloat;
pub mod consts;
pub mod eval;
pub mod mzv;

pub use bigfloat::{bits_for_digits, BigFloat};
pub use consts::{pi_const, riemann_zeta_numeric, zeta_even_rational};
pub use eval::{eval_expr, eval_series};
pub use mzv::{eval_mzv, load_cache_file, save_cache_file};
