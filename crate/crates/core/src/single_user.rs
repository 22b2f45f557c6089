//! Optimal bursty signaling for a single transmitter whose circuitry draws a
//! fixed power whenever it is on.
//!
//! With average budget `P` and processing cost `eps`, a user that is active
//! for a fraction `theta` of the channel uses can radiate `P / theta - eps`
//! while on. The rate `theta * C(P / theta - eps)` is maximized at
//!
//! ```text
//! theta* = min(1, P * W(x) / ((eps - 1) (W(x) + 1))),   x = (eps - 1) / e
//! nu*    = P / theta* - eps
//! ```
//!
//! where `W` is the principal Lambert W branch. Below saturation `nu*`
//! depends on `eps` alone and the rate grows linearly with `P`.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{capacity_unchecked, lambert_w0, maximize_1d, ToleranceConfig};

/// Half-width of the band around `eps = 1` where the removable singularity
/// of the closed form is replaced by its limit.
const UNIT_COST_BAND: f64 = 1e-6;

/// A transmitter's noise-normalized average power budget and per-use
/// processing cost.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UserProfile {
    pub power_budget: f64,
    pub processing_cost: f64,
}

impl UserProfile {
    pub fn new(power_budget: f64, processing_cost: f64) -> Result<Self> {
        if !(power_budget >= 0.0) || !power_budget.is_finite() {
            return Err(Error::domain(format!(
                "power budget must be finite and non-negative, got {power_budget}"
            )));
        }
        if !(processing_cost >= 0.0) || !processing_cost.is_finite() {
            return Err(Error::domain(format!(
                "processing cost must be finite and non-negative, got {processing_cost}"
            )));
        }
        Ok(UserProfile {
            power_budget,
            processing_cost,
        })
    }

    /// Largest burst fraction that still leaves non-negative radiated power.
    pub fn max_burst(&self) -> f64 {
        if self.processing_cost <= 0.0 {
            1.0
        } else {
            (self.power_budget / self.processing_cost).min(1.0)
        }
    }

    /// On-power when active for a fraction `theta` of the channel uses.
    #[inline]
    pub fn on_power(&self, theta: f64) -> f64 {
        self.power_budget / theta - self.processing_cost
    }

    pub(crate) fn require_positive_budget(&self) -> Result<()> {
        if self.power_budget > 0.0 {
            Ok(())
        } else {
            Err(Error::domain("power budget must be positive"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingleUserOptimum {
    pub theta_star: f64,
    pub nu_star: f64,
    pub rate: f64,
}

/// The optimal single-user policy for a fixed processing cost, as a function
/// of the budget: `theta*(P) = min(1, P * slope)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BurstShape {
    pub processing_cost: f64,
    /// Burst fraction per unit budget; infinite when there is no processing
    /// cost.
    pub slope: f64,
}

impl BurstShape {
    pub fn new(processing_cost: f64) -> Result<Self> {
        let eps = processing_cost;
        if !(eps >= 0.0) || !eps.is_finite() {
            return Err(Error::domain(format!("invalid processing cost {eps}")));
        }
        let slope = if eps == 0.0 {
            f64::INFINITY
        } else if (eps - 1.0).abs() < UNIT_COST_BAND {
            1.0 / E
        } else {
            let w = lambert_w0((eps - 1.0) / E, &ToleranceConfig::default())?;
            w / ((eps - 1.0) * (w + 1.0))
        };
        Ok(BurstShape {
            processing_cost: eps,
            slope,
        })
    }

    #[inline]
    pub fn theta(&self, budget: f64) -> f64 {
        (budget * self.slope).min(1.0)
    }

    /// Best achievable rate with the given average budget; zero for a
    /// non-positive budget.
    #[inline]
    pub fn rate(&self, budget: f64) -> f64 {
        if budget <= 0.0 {
            return 0.0;
        }
        let theta = self.theta(budget);
        theta * capacity_unchecked(budget / theta - self.processing_cost)
    }

    pub fn optimum(&self, budget: f64) -> SingleUserOptimum {
        let theta_star = self.theta(budget);
        let nu_star = budget / theta_star - self.processing_cost;
        SingleUserOptimum {
            theta_star,
            nu_star,
            rate: theta_star * capacity_unchecked(nu_star),
        }
    }
}

pub fn single_user_optimum(u: &UserProfile) -> Result<SingleUserOptimum> {
    u.require_positive_budget()?;
    Ok(BurstShape::new(u.processing_cost)?.optimum(u.power_budget))
}

/// Interference-free rate of a user transmitting alone.
pub fn single_user_rate(u: &UserProfile) -> Result<f64> {
    single_user_optimum(u).map(|o| o.rate)
}

/// One of a set of parallel Gaussian channels sharing a transmitter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParallelChannel {
    pub noise_variance: f64,
    /// Share of the block's channel uses that belong to this channel.
    pub time_fraction: f64,
}

impl ParallelChannel {
    pub fn new(noise_variance: f64, time_fraction: f64) -> Self {
        ParallelChannel {
            noise_variance,
            time_fraction,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ChannelAllocation {
    /// Active fraction of this channel's uses.
    pub theta: f64,
    /// On-power while active.
    pub nu: f64,
    /// Average power (per block channel use) spent on this channel,
    /// processing included.
    pub power_share: f64,
    /// Contribution to the block rate.
    pub rate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GluePourAllocation {
    pub channels: [ChannelAllocation; 2],
    pub total_rate: f64,
}

const FRACTION_SLACK: f64 = 1e-9;

fn validate_channels(channels: &[ParallelChannel; 2]) -> Result<()> {
    for ch in channels {
        if !(ch.noise_variance >= 1.0) || !ch.noise_variance.is_finite() {
            return Err(Error::domain(format!(
                "noise variance must be finite and at least 1, got {}",
                ch.noise_variance
            )));
        }
        if !(0.0..=1.0).contains(&ch.time_fraction) {
            return Err(Error::domain(format!(
                "time fraction must lie in [0, 1], got {}",
                ch.time_fraction
            )));
        }
    }
    let total = channels[0].time_fraction + channels[1].time_fraction;
    if (total - 1.0).abs() > FRACTION_SLACK {
        return Err(Error::domain(format!(
            "channel time fractions must sum to 1, got {total}"
        )));
    }
    if channels[0].noise_variance > channels[1].noise_variance {
        return Err(Error::domain("channels must be ordered by noise variance"));
    }
    Ok(())
}

/// Splits one user's budget across two parallel channels with processing
/// cost ("glue pouring").
///
/// Within a channel of noise `N` and time share `f`, an average share `p` of
/// the budget behaves like a single user with budget `p / (f N)` and cost
/// `eps / N` in noise-normalized units, so each channel follows the closed
/// form. Only the split between the two channels is searched. The rate as
/// a function of the split is concave, and the better channel fills up to
/// a saturation level before the worse one is touched.
pub fn glue_pour(
    u: &UserProfile,
    channels: &[ParallelChannel; 2],
    tol: &ToleranceConfig,
) -> Result<GluePourAllocation> {
    u.require_positive_budget()?;
    validate_channels(channels)?;

    let budget = u.power_budget;
    if channels[0].noise_variance == channels[1].noise_variance {
        // Equal noise: the rate is flat in the split while both channels
        // burst, so pool them and share the single-channel optimum.
        let n = channels[0].noise_variance;
        let opt = BurstShape::new(u.processing_cost / n)?.optimum(budget / n);
        let mut out = [ChannelAllocation::default(); 2];
        for (slot, ch) in out.iter_mut().zip(channels) {
            if ch.time_fraction > 0.0 {
                *slot = ChannelAllocation {
                    theta: opt.theta_star,
                    nu: opt.nu_star * n,
                    power_share: budget * ch.time_fraction,
                    rate: ch.time_fraction * opt.rate,
                };
            }
        }
        return Ok(GluePourAllocation {
            channels: out,
            total_rate: out[0].rate + out[1].rate,
        });
    }

    let shapes = [
        BurstShape::new(u.processing_cost / channels[0].noise_variance)?,
        BurstShape::new(u.processing_cost / channels[1].noise_variance)?,
    ];
    let per_use = |k: usize, share: f64| {
        let ch = &channels[k];
        if ch.time_fraction > 0.0 {
            share / (ch.time_fraction * ch.noise_variance)
        } else {
            0.0
        }
    };
    let rate_k = |k: usize, share: f64| channels[k].time_fraction * shapes[k].rate(per_use(k, share));

    // Share of the budget handed to the second channel.
    let (lo, hi) = match (channels[0].time_fraction > 0.0, channels[1].time_fraction > 0.0) {
        (true, true) => (0.0, budget),
        (true, false) => (0.0, 0.0),
        (false, _) => (budget, budget),
    };
    let best = maximize_1d(|p| rate_k(0, budget - p) + rate_k(1, p), lo, hi, tol)?;

    let shares = [budget - best.arg, best.arg];
    let mut out = [ChannelAllocation::default(); 2];
    for k in 0..2 {
        let b = per_use(k, shares[k]);
        if b <= 0.0 {
            continue;
        }
        let opt = shapes[k].optimum(b);
        out[k] = ChannelAllocation {
            theta: opt.theta_star,
            nu: opt.nu_star * channels[k].noise_variance,
            power_share: shares[k],
            rate: channels[k].time_fraction * opt.rate,
        };
    }
    Ok(GluePourAllocation {
        channels: out,
        total_rate: out[0].rate + out[1].rate,
    })
}
