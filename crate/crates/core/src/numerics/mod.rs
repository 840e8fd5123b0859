//! Exact rationals, dyadic interval arithmetic and the η parameters.

mod dyadic;
mod eta;
mod interval;
mod log;
mod precision;
mod rational;

pub use dyadic::Dyadic;
pub use eta::{eta_bm, eta_free, eta_padic, eta_real, exact_log_ratio, log_ratio, over_eta, EtaKind, EtaValue};
pub use interval::BoundedReal;
pub use log::{ln_interval, ln_uint};
pub use precision::{compare_powers, compare_powers_u64, power_ge, refine, resolved, DEFAULT_PRECISION, PRECISION_CAP};
pub(crate) use precision::int;
pub use rational::PosRational;
