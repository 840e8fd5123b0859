//! Certified effective irrationality-measure bounds for real and p-adic
//! `n`-th roots of rationals close to 1, with the supporting linear-form
//! estimates, Hensel roots, empirical verifiers and a Thue-Mahler search.

pub mod arith;
pub mod error;
pub mod linforms;
pub mod measures;
pub mod numerics;
pub mod padic;
pub mod report;
pub mod thue_mahler;
pub mod verify;

pub use error::{Error, Result};
