//! When does interference cost nothing?
//!
//! If both users keep their single-user bursts and their activity overlaps
//! only where it must, receiver 1 can decode and strip all of user 2's
//! codeword provided
//!
//! ```text
//! log(1 + nu2) <= rho log(1 + a nu2) + (1 - rho) log(1 + a nu2 / (1 + nu1)),
//! rho = (1 - theta1) / theta2
//! ```
//!
//! (single-user optima throughout). The right side grows strictly with the
//! cross gain `a`, so the condition defines a threshold.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::bisect_threshold;
use crate::single_user::{single_user_optimum, SingleUserOptimum, UserProfile};

/// A two-user Gaussian Z-interference channel: receiver 1 hears user 2
/// through power gain `cross_gain`, receiver 2 is interference-free.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZicConfig {
    pub cross_gain: f64,
    pub user1: UserProfile,
    pub user2: UserProfile,
}

impl ZicConfig {
    pub fn new(cross_gain: f64, user1: UserProfile, user2: UserProfile) -> Result<Self> {
        if !(cross_gain >= 0.0) || !cross_gain.is_finite() {
            return Err(Error::domain(format!(
                "cross gain must be finite and non-negative, got {cross_gain}"
            )));
        }
        Ok(ZicConfig {
            cross_gain,
            user1,
            user2,
        })
    }

    pub fn with_cross_gain(&self, cross_gain: f64) -> Result<Self> {
        Self::new(cross_gain, self.user1, self.user2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub overlap_required: bool,
    /// `(1 - theta1*) / theta2*`, only defined when the bursts must overlap.
    pub rho: Option<f64>,
    pub very_strong: Option<bool>,
    pub threshold_a: Option<f64>,
}

/// Both single-user optima, and `rho` when their bursts cannot be
/// separated in time.
struct Standing {
    opt1: SingleUserOptimum,
    opt2: SingleUserOptimum,
    rho: f64,
}

fn standing(u1: &UserProfile, u2: &UserProfile) -> Result<Standing> {
    let opt1 = single_user_optimum(u1)?;
    let opt2 = single_user_optimum(u2)?;
    if opt1.theta_star + opt2.theta_star <= 1.0 {
        return Err(Error::Precondition(
            "single-user bursts fit side by side (theta1* + theta2* <= 1); \
             time division already achieves interference-free rates"
                .to_string(),
        ));
    }
    let rho = ((1.0 - opt1.theta_star) / opt2.theta_star).clamp(0.0, 1.0);
    Ok(Standing { opt1, opt2, rho })
}

/// `true` iff the single-user bursts cannot be scheduled without overlap,
/// i.e. `theta1* + theta2* > 1`.
pub fn overlap_required(u1: &UserProfile, u2: &UserProfile) -> Result<bool> {
    let t1 = single_user_optimum(u1)?.theta_star;
    let t2 = single_user_optimum(u2)?.theta_star;
    Ok(t1 + t2 > 1.0)
}

/// Log-domain margin of the decoding condition; non-negative when it holds.
fn decoding_margin(s: &Standing, a: f64) -> f64 {
    let nu1 = s.opt1.nu_star;
    let nu2 = s.opt2.nu_star;
    s.rho * (a * nu2).ln_1p() + (1.0 - s.rho) * (a * nu2 / (1.0 + nu1)).ln_1p() - nu2.ln_1p()
}

const CONDITION_SLACK: f64 = 1e-12;

/// Whether both users reach their interference-free rates at this cross
/// gain.
pub fn very_strong_holds(cfg: &ZicConfig) -> Result<bool> {
    let s = standing(&cfg.user1, &cfg.user2)?;
    Ok(decoding_margin(&s, cfg.cross_gain) >= -CONDITION_SLACK)
}

/// Width of the final bisection bracket for the threshold.
const THRESHOLD_WIDTH: f64 = 1e-7;

/// Smallest cross gain at which [`very_strong_holds`].
///
/// With `theta1* = 1` the condition reduces to `a >= 1 + nu1*`, returned
/// exactly. Otherwise the upper bracket starts at `2 (1 + nu1*)` and
/// doubles until the condition holds.
pub fn very_strong_threshold(u1: &UserProfile, u2: &UserProfile) -> Result<f64> {
    let s = standing(u1, u2)?;
    if s.rho == 0.0 {
        return Ok(1.0 + s.opt1.nu_star);
    }
    let holds = |a: f64| decoding_margin(&s, a) >= -CONDITION_SLACK;
    let mut hi = 2.0 * (1.0 + s.opt1.nu_star);
    while !holds(hi) {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::domain("threshold bracket diverged"));
        }
    }
    // At a = 1 the right side is a weighted geometric mean of 1 + nu2 and
    // something smaller, so the condition fails whenever rho < 1. At a = 0
    // it fails because nu2* > 0.
    if holds(1.0) {
        return bisect_threshold(holds, 0.0, 1.0, THRESHOLD_WIDTH);
    }
    bisect_threshold(holds, 1.0, hi, THRESHOLD_WIDTH)
}

pub fn regime_report(cfg: &ZicConfig) -> Result<RegimeReport> {
    if !overlap_required(&cfg.user1, &cfg.user2)? {
        return Ok(RegimeReport {
            overlap_required: false,
            rho: None,
            very_strong: None,
            threshold_a: None,
        });
    }
    let s = standing(&cfg.user1, &cfg.user2)?;
    Ok(RegimeReport {
        overlap_required: true,
        rho: Some(s.rho),
        very_strong: Some(very_strong_holds(cfg)?),
        threshold_a: Some(very_strong_threshold(&cfg.user1, &cfg.user2)?),
    })
}

/// Which closed form [`low_snr_threshold`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowSnrCase {
    /// Both users bursty (`lambda1 < 1`, `lambda2 < 1`).
    BothBursty,
    /// Only user 1 bursty (`lambda1 < 1 <= lambda2`).
    FirstBursty,
    /// User 1 always on (`lambda1 >= 1`).
    FirstAlwaysOn,
}

/// Closed-form sufficient threshold in the low-SNR scaling
/// `P -> 0`, `eps -> 0` with `lambda = P / sqrt(2 eps)` fixed.
///
/// The caller is trusted to supply profiles where that scaling is a good
/// approximation; nothing checks smallness.
pub fn low_snr_threshold(u1: &UserProfile, u2: &UserProfile) -> Result<(LowSnrCase, f64)> {
    u1.require_positive_budget()?;
    u2.require_positive_budget()?;
    let (p1, p2) = (u1.power_budget, u2.power_budget);
    let s1 = (2.0 * u1.processing_cost).sqrt();
    let s2 = (2.0 * u2.processing_cost).sqrt();
    let lambda1 = p1 / s1;
    let lambda2 = p2 / s2;

    if lambda1 >= 1.0 {
        return Ok((LowSnrCase::FirstAlwaysOn, 1.0 + p1 - u1.processing_cost));
    }
    if lambda2 >= 1.0 {
        return Ok((LowSnrCase::FirstBursty, (1.0 + s1) / (1.0 + s1 - p1)));
    }
    let denom = p2 + s2 * (s1 - p1);
    // Positive denominator is necessary but a0 > 1 needs lambda1 + lambda2 > 1.
    if denom <= 0.0 || lambda1 + lambda2 <= 1.0 {
        return Err(Error::domain(
            "bursts do not overlap in the low-SNR limit (lambda1 + lambda2 <= 1)",
        ));
    }
    Ok((LowSnrCase::BothBursty, (p2 + s1 * p2) / denom))
}
