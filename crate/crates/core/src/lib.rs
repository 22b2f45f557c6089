//! Bursty transmission over the two-user Gaussian Z-interference channel
//! when each transmitter pays a fixed processing power whenever it is on.
//!
//! * [`single_user`]: the closed-form optimal burst of an isolated user and
//!   glue pouring over two parallel channels.
//! * [`regimes`]: when receiver 1 can strip all interference at no rate
//!   loss, and the threshold cross gain for it.
//! * [`schemes`]: sum-rate maximization for five joint schemes and the
//!   interference-free upper bound.
//! * [`sweep`]: cross-gain sweeps with deterministic CSV/JSON output.
//! * [`cli`]: the `zic` command-line front end.
//!
//! ```
//! use zic_core::{single_user_optimum, UserProfile};
//!
//! let opt = single_user_optimum(&UserProfile::new(3.5, 2.0)?)?;
//! assert!((opt.theta_star - 0.7623).abs() < 1e-4);
//! # Ok::<(), zic_core::Error>(())
//! ```
//!
//! All rates are in bits per channel use; powers and costs are normalized by
//! the noise variance.

// NaN must fail input checks, so `!(x >= 0.0)` is intended.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod math;
pub mod regimes;
pub mod schemes;
pub mod single_user;
pub mod sweep;

pub use error::{Error, Result};
pub use math::{capacity, lambert_w0, maximize_1d, maximize_2d, SearchBox, ToleranceConfig};
pub use regimes::{
    low_snr_threshold, overlap_required, regime_report, very_strong_holds, very_strong_threshold,
    LowSnrCase, RegimeReport, ZicConfig,
};
pub use schemes::{
    best_scheme, scheme_i, scheme_ii, scheme_iii, scheme_iv, scheme_v, upper_bound,
    SchemeEvaluation, SchemeId,
};
pub use single_user::{
    glue_pour, single_user_optimum, single_user_rate, GluePourAllocation, ParallelChannel,
    SingleUserOptimum, UserProfile,
};
pub use sweep::{sweep, SweepRow, SweepSpec};
