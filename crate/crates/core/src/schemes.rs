//! Sum-rate maximization for five joint transmission schemes and the
//! interference-free upper bound.
//!
//! Throughout, user `i` active for a fraction `theta_i` of the block radiates
//! `nu_i = P_i / theta_i - eps_i` while on, and the two bursts are scheduled
//! to overlap for exactly `theta1 + theta2 - 1` of the block.
//!
//! | scheme | idea                                                        | cross gain |
//! |--------|-------------------------------------------------------------|------------|
//! | I      | both always on                                              | any        |
//! | II     | time division, no overlap                                   | any        |
//! | III    | partial overlap, decode or ignore interference in overlap   | any        |
//! | IV     | partial overlap, receiver 1 jointly decodes the whole block | `a >= 1`   |
//! | V      | like III but user 1 splits power across clean/noisy slots  | `a < 1`    |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{
    capacity_unchecked as cap, maximize_1d, maximize_2d, weighted_capacity as wcap, SearchBox,
    ToleranceConfig,
};
use crate::regimes::ZicConfig;
use crate::single_user::{glue_pour, single_user_optimum, ParallelChannel, SingleUserOptimum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SchemeId {
    I,
    II,
    III,
    IV,
    V,
    #[serde(rename = "UPPER_BOUND")]
    UpperBound,
}

impl SchemeId {
    pub const SCHEMES: [SchemeId; 5] = [SchemeId::I, SchemeId::II, SchemeId::III, SchemeId::IV, SchemeId::V];

    pub fn as_str(&self) -> &'static str {
        match self {
            SchemeId::I => "I",
            SchemeId::II => "II",
            SchemeId::III => "III",
            SchemeId::IV => "IV",
            SchemeId::V => "V",
            SchemeId::UpperBound => "UPPER_BOUND",
        }
    }

    /// Whether the scheme is defined at cross gain `a`.
    pub fn applies_at(&self, a: f64) -> bool {
        match self {
            SchemeId::IV => a >= 1.0,
            SchemeId::V => a < 1.0,
            _ => true,
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(SchemeId::I),
            "II" | "2" => Ok(SchemeId::II),
            "III" | "3" => Ok(SchemeId::III),
            "IV" | "4" => Ok(SchemeId::IV),
            "V" | "5" => Ok(SchemeId::V),
            "UPPER_BOUND" | "UB" => Ok(SchemeId::UpperBound),
            _ => Err(Error::domain(format!("unknown scheme '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeEvaluation {
    pub scheme: SchemeId,
    pub sum_rate: f64,
    /// Maximizing parameters by name (`theta1`, `nu2`, ...).
    pub params: BTreeMap<String, f64>,
    /// `false` when the scheme's constraint set is empty for this channel;
    /// `sum_rate` is then zero.
    pub feasible: bool,
}

impl SchemeEvaluation {
    fn new(scheme: SchemeId, sum_rate: f64, params: &[(&str, f64)]) -> Self {
        SchemeEvaluation {
            scheme,
            sum_rate,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            feasible: true,
        }
    }

    fn infeasible(scheme: SchemeId) -> Self {
        SchemeEvaluation {
            scheme,
            sum_rate: 0.0,
            params: BTreeMap::new(),
            feasible: false,
        }
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.get(name).copied()
    }
}

/// Single-user optima of both users; every scheme's search box is built from
/// these.
struct Optima {
    u1: SingleUserOptimum,
    u2: SingleUserOptimum,
}

fn optima(cfg: &ZicConfig) -> Result<Optima> {
    Ok(Optima {
        u1: single_user_optimum(&cfg.user1)?,
        u2: single_user_optimum(&cfg.user2)?,
    })
}

/// Burst box `1 - theta_j* <= theta_i <= min(1, P_i / eps_i)` shared by
/// Schemes III and IV, or `None` when it is empty.
fn overlap_box(cfg: &ZicConfig, opt: &Optima) -> Option<SearchBox> {
    let x = ((1.0 - opt.u2.theta_star).max(0.0), cfg.user1.max_burst());
    let y = ((1.0 - opt.u1.theta_star).max(0.0), cfg.user2.max_burst());
    if x.0 > x.1 || y.0 > y.1 || x.1 + y.1 < 1.0 {
        None
    } else {
        Some(SearchBox::new(x, y))
    }
}

#[inline]
fn overlaps(theta1: f64, theta2: f64) -> bool {
    theta1 + theta2 >= 1.0 - 1e-12
}

/// Sum of the two interference-free single-user rates; no scheme exceeds it.
pub fn upper_bound(cfg: &ZicConfig) -> Result<SchemeEvaluation> {
    let opt = optima(cfg)?;
    Ok(SchemeEvaluation::new(
        SchemeId::UpperBound,
        opt.u1.rate + opt.u2.rate,
        &[
            ("theta1", opt.u1.theta_star),
            ("nu1", opt.u1.nu_star),
            ("theta2", opt.u2.theta_star),
            ("nu2", opt.u2.nu_star),
        ],
    ))
}

/// Scheme I: no burstiness. With `a >= 1` receiver 1 decodes the
/// interference; below that it treats it as noise.
pub fn scheme_i(cfg: &ZicConfig) -> Result<SchemeEvaluation> {
    cfg.user1.require_positive_budget()?;
    cfg.user2.require_positive_budget()?;
    let nu1 = cfg.user1.on_power(1.0);
    let nu2 = cfg.user2.on_power(1.0);
    if nu1 <= 0.0 || nu2 <= 0.0 {
        return Ok(SchemeEvaluation::infeasible(SchemeId::I));
    }
    let a = cfg.cross_gain;
    let sum = if a >= 1.0 {
        (cap(nu1) + cap(nu2)).min(cap(nu1 + a * nu2))
    } else {
        cap(nu1 / (1.0 + a * nu2)) + cap(nu2)
    };
    Ok(SchemeEvaluation::new(
        SchemeId::I,
        sum,
        &[("theta1", 1.0), ("nu1", nu1), ("theta2", 1.0), ("nu2", nu2)],
    ))
}

/// Scheme II: time division. Independent of the cross gain.
pub fn scheme_ii(cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<SchemeEvaluation> {
    let opt = optima(cfg)?;
    let (u1, u2) = (cfg.user1, cfg.user2);
    let lo = 1.0 - opt.u2.theta_star;
    let hi = opt.u1.theta_star;
    if lo > hi {
        // Both single-user bursts fit side by side.
        let ub = upper_bound(cfg)?;
        return Ok(SchemeEvaluation::new(
            SchemeId::II,
            ub.sum_rate,
            &[("theta1", opt.u1.theta_star), ("theta2", opt.u2.theta_star)],
        ));
    }
    let objective = |t1: f64| {
        let t2 = 1.0 - t1;
        wcap(t1, u1.on_power(t1)) + wcap(t2, u2.on_power(t2))
    };
    let best = maximize_1d(objective, lo, hi, tol)?;
    Ok(SchemeEvaluation::new(
        SchemeId::II,
        best.value,
        &[("theta1", best.arg), ("theta2", 1.0 - best.arg)],
    ))
}

/// Scheme III sum rate at fixed bursts. Receiver 1 only listens while its
/// own transmitter is on.
pub fn scheme_iii_rate(cfg: &ZicConfig, theta1: f64, theta2: f64) -> f64 {
    let a = cfg.cross_gain;
    let nu1 = cfg.user1.on_power(theta1);
    let nu2 = cfg.user2.on_power(theta2);
    let overlap = theta1 + theta2 - 1.0;
    if a >= 1.0 {
        let joint = if overlap > 0.0 {
            overlap * (cap(nu1) + cap(nu2)).min(cap(nu1 + a * nu2))
        } else {
            0.0
        };
        wcap(1.0 - theta2, nu1) + wcap(1.0 - theta1, nu2) + joint
    } else {
        wcap(1.0 - theta2, nu1) + wcap(theta2, nu2) + wcap(overlap, nu1 / (1.0 + a * nu2))
    }
}

/// Scheme IV sum rate at fixed bursts: the smaller of the users' combined
/// single-link rates and what receiver 1 can jointly decode over the block.
pub fn scheme_iv_rate(cfg: &ZicConfig, theta1: f64, theta2: f64) -> f64 {
    let a = cfg.cross_gain;
    let nu1 = cfg.user1.on_power(theta1);
    let nu2 = cfg.user2.on_power(theta2);
    let overlap = theta1 + theta2 - 1.0;
    let direct = wcap(theta1, nu1) + wcap(theta2, nu2);
    let at_rx1 = wcap(1.0 - theta2, nu1) + wcap(1.0 - theta1, a * nu2) + wcap(overlap, nu1 + a * nu2);
    direct.min(at_rx1)
}

fn overlap_scheme<F>(
    id: SchemeId,
    cfg: &ZicConfig,
    tol: &ToleranceConfig,
    rate: F,
) -> Result<SchemeEvaluation>
where
    F: Fn(&ZicConfig, f64, f64) -> f64,
{
    let opt = optima(cfg)?;
    let Some(bx) = overlap_box(cfg, &opt) else {
        return Ok(SchemeEvaluation::infeasible(id));
    };
    let best = match maximize_2d(|t1, t2| rate(cfg, t1, t2), overlaps, bx, tol) {
        Ok(best) => best,
        Err(Error::Infeasible(_)) => return Ok(SchemeEvaluation::infeasible(id)),
        Err(e) => return Err(e),
    };
    let (t1, t2) = best.arg;
    Ok(SchemeEvaluation::new(
        id,
        best.value,
        &[
            ("theta1", t1),
            ("nu1", cfg.user1.on_power(t1)),
            ("theta2", t2),
            ("nu2", cfg.user2.on_power(t2)),
        ],
    ))
}

/// Scheme III: partially overlapping bursts at constant power.
pub fn scheme_iii(cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<SchemeEvaluation> {
    overlap_scheme(SchemeId::III, cfg, tol, scheme_iii_rate)
}

/// Scheme IV: partially overlapping bursts with joint decoding of both
/// codewords over the whole block at receiver 1. Only for `a >= 1`.
pub fn scheme_iv(cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<SchemeEvaluation> {
    if cfg.cross_gain < 1.0 {
        return Err(Error::domain(format!(
            "scheme IV needs cross gain a >= 1, got {}",
            cfg.cross_gain
        )));
    }
    overlap_scheme(SchemeId::IV, cfg, tol, scheme_iv_rate)
}

/// The two parallel channels user 1 sees when user 2 is on for `theta2` of
/// the block: clean slots, and slots shared with user 2's interference,
/// which user 1 treats as noise.
pub fn scheme_v_channels(cfg: &ZicConfig, theta2: f64) -> [ParallelChannel; 2] {
    let noise = if theta2 > 0.0 {
        1.0 + cfg.cross_gain * cfg.user2.on_power(theta2)
    } else {
        1.0
    };
    [
        ParallelChannel::new(1.0, 1.0 - theta2),
        ParallelChannel::new(noise, theta2),
    ]
}

/// Scheme V: user 2 bursts at constant power; user 1 glue-pours its budget
/// across the clean and the interfered slots. Only for `a < 1`.
pub fn scheme_v(cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<SchemeEvaluation> {
    if cfg.cross_gain >= 1.0 {
        return Err(Error::domain(format!(
            "scheme V needs cross gain a < 1, got {}",
            cfg.cross_gain
        )));
    }
    let opt = optima(cfg)?;
    let lo = (1.0 - opt.u1.theta_star).max(0.0);
    let hi = cfg.user2.max_burst();
    if lo > hi {
        return Ok(SchemeEvaluation::infeasible(SchemeId::V));
    }
    let user1 = cfg.user1;
    let objective = |t2: f64| {
        let own = wcap(t2, cfg.user2.on_power(t2));
        match glue_pour(&user1, &scheme_v_channels(cfg, t2), tol) {
            Ok(g) => own + g.total_rate,
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let best = maximize_1d(objective, lo, hi, tol)?;
    let t2 = best.arg;
    let channels = scheme_v_channels(cfg, t2);
    let g = glue_pour(&user1, &channels, tol)?;
    Ok(SchemeEvaluation::new(
        SchemeId::V,
        best.value,
        &[
            ("theta2", t2),
            ("nu2", cfg.user2.on_power(t2)),
            ("noise_shared", channels[1].noise_variance),
            ("theta1_clean", g.channels[0].theta),
            ("nu1_clean", g.channels[0].nu),
            ("theta1_shared", g.channels[1].theta),
            ("nu1_shared", g.channels[1].nu),
            ("power1_shared", g.channels[1].power_share),
        ],
    ))
}

/// Evaluates one scheme; `Ok(None)` when it is not defined at this cross
/// gain.
pub fn evaluate(id: SchemeId, cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<Option<SchemeEvaluation>> {
    if !id.applies_at(cfg.cross_gain) {
        return Ok(None);
    }
    let eval = match id {
        SchemeId::I => scheme_i(cfg)?,
        SchemeId::II => scheme_ii(cfg, tol)?,
        SchemeId::III => scheme_iii(cfg, tol)?,
        SchemeId::IV => scheme_iv(cfg, tol)?,
        SchemeId::V => scheme_v(cfg, tol)?,
        SchemeId::UpperBound => upper_bound(cfg)?,
    };
    Ok(Some(eval))
}

/// Two sum rates closer than this count as a tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Picks the winner among already evaluated schemes. Ties go to the lowest
/// scheme index.
pub fn pick_best<'a, I>(evals: I) -> Option<&'a SchemeEvaluation>
where
    I: IntoIterator<Item = &'a SchemeEvaluation>,
{
    let mut sorted: Vec<&SchemeEvaluation> = evals
        .into_iter()
        .filter(|e| e.feasible && e.scheme != SchemeId::UpperBound)
        .collect();
    sorted.sort_by_key(|e| e.scheme);
    let mut best: Option<&SchemeEvaluation> = None;
    for e in sorted {
        if best.is_none_or(|b| e.sum_rate > b.sum_rate + TIE_TOLERANCE) {
            best = Some(e);
        }
    }
    best
}

/// Best scheme defined at this cross gain (I, II, III, plus IV or V).
pub fn best_scheme(cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<SchemeEvaluation> {
    let mut evals = Vec::new();
    for id in SchemeId::SCHEMES {
        if let Some(e) = evaluate(id, cfg, tol)? {
            evals.push(e);
        }
    }
    pick_best(&evals)
        .cloned()
        .ok_or_else(|| Error::Infeasible("no scheme is feasible for this channel".to_string()))
}
