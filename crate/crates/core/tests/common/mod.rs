//! Brute-force oracles. They share no code path with the library beyond the
//! plain data types.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::SeedableRng;
use zic_core::{UserProfile, ZicConfig};

pub fn c(x: f64) -> f64 {
    0.5 * (1.0 + x).log2()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn symmetric(a: f64) -> ZicConfig {
    let u = UserProfile::new(3.5, 2.0).unwrap();
    ZicConfig::new(a, u, u).unwrap()
}

/// Interference-free rate of the symmetric user, `2 * 0.762341 * C(2.591121)`
/// summed over both users; frozen from a 1e6-point scan.
pub const SYMMETRIC_UPPER_BOUND: f64 = 1.406_088;

/// `max theta C(P / theta - eps)` over `n` evenly spaced bursts in
/// `(0, min(1, P / eps)]`. Returns `(theta, rate)`.
pub fn scan_single_user(p: f64, eps: f64, n: usize) -> (f64, f64) {
    let top = if eps > 0.0 { (p / eps).min(1.0) } else { 1.0 };
    let mut best = (0.0, 0.0);
    for k in 1..=n {
        let t = top * k as f64 / n as f64;
        let v = t * c((p / t - eps).max(0.0));
        if v > best.1 {
            best = (t, v);
        }
    }
    best
}

/// Water-filling over two channels with fixed activity weights `w` (share
/// of the block in which each channel is active) and radiated budget `q`:
/// maximize `sum w_k C(nu_k / n_k)` s.t. `sum w_k nu_k = q`.
fn waterfill(w: [f64; 2], n: [f64; 2], q: f64) -> f64 {
    if q < 0.0 {
        return f64::NEG_INFINITY;
    }
    let active: Vec<usize> = (0..2).filter(|&k| w[k] > 0.0).collect();
    match active.as_slice() {
        [] => 0.0,
        [k] => w[*k] * c(q / w[*k] / n[*k]),
        _ => {
            let level = (q + w[0] * n[0] + w[1] * n[1]) / (w[0] + w[1]);
            if level >= n[0].max(n[1]) {
                w[0] * c((level - n[0]) / n[0]) + w[1] * c((level - n[1]) / n[1])
            } else {
                // Only the quieter channel gets power; the other is on at
                // zero radiated power, which is wasteful but not better.
                let k = if n[0] <= n[1] { 0 } else { 1 };
                w[k] * c(q / w[k] / n[k])
            }
        }
    }
}

/// Glue pouring by exhaustive search over both channels' burst fractions,
/// zooming twice around the best cell. Channels are `(noise, fraction)`.
pub fn brute_glue_pour(p: f64, eps: f64, chans: [(f64, f64); 2]) -> f64 {
    let n = [chans[0].0, chans[1].0];
    let f = [chans[0].1, chans[1].1];
    let eval = |t1: f64, t2: f64| {
        let w = [f[0] * t1, f[1] * t2];
        let q = p - eps * (w[0] + w[1]);
        waterfill(w, n, q)
    };
    let mut lo = (0.0, 0.0);
    let mut hi = (1.0, 1.0);
    let mut best = (0.0, 0.0, eval(0.0, 0.0));
    let m = 301;
    for _ in 0..3 {
        for i in 0..m {
            let t1 = lo.0 + (hi.0 - lo.0) * i as f64 / (m - 1) as f64;
            for j in 0..m {
                let t2 = lo.1 + (hi.1 - lo.1) * j as f64 / (m - 1) as f64;
                let v = eval(t1, t2);
                if v > best.2 {
                    best = (t1, t2, v);
                }
            }
        }
        let h0 = 3.0 * (hi.0 - lo.0) / (m - 1) as f64;
        let h1 = 3.0 * (hi.1 - lo.1) / (m - 1) as f64;
        lo = ((best.0 - h0).max(0.0), (best.1 - h1).max(0.0));
        hi = ((best.0 + h0).min(1.0), (best.1 + h1).min(1.0));
    }
    best.2
}

/// Scheme IV objective written out directly.
pub fn scheme_iv_formula(cfg: &ZicConfig, t1: f64, t2: f64) -> f64 {
    let (p1, e1) = (cfg.user1.power_budget, cfg.user1.processing_cost);
    let (p2, e2) = (cfg.user2.power_budget, cfg.user2.processing_cost);
    let a = cfg.cross_gain;
    let n1 = p1 / t1 - e1;
    let n2 = p2 / t2 - e2;
    let direct = t1 * c(n1) + t2 * c(n2);
    let rx1 = (1.0 - t2) * c(n1) + (1.0 - t1) * c(a * n2) + (t1 + t2 - 1.0) * c(n1 + a * n2);
    direct.min(rx1)
}

/// Scheme III objective written out directly.
pub fn scheme_iii_formula(cfg: &ZicConfig, t1: f64, t2: f64) -> f64 {
    let (p1, e1) = (cfg.user1.power_budget, cfg.user1.processing_cost);
    let (p2, e2) = (cfg.user2.power_budget, cfg.user2.processing_cost);
    let a = cfg.cross_gain;
    let n1 = p1 / t1 - e1;
    let n2 = p2 / t2 - e2;
    let ov = t1 + t2 - 1.0;
    if a >= 1.0 {
        (1.0 - t2) * c(n1) + (1.0 - t1) * c(n2) + ov * (c(n1) + c(n2)).min(c(n1 + a * n2))
    } else {
        (1.0 - t2) * c(n1) + t2 * c(n2) + ov * c(n1 / (1.0 + a * n2))
    }
}

/// Exhaustive grid maximum of an overlap-scheme objective over
/// `[lo1, hi1] x [lo2, hi2]` restricted to `t1 + t2 >= 1`.
pub fn grid_max<F: Fn(f64, f64) -> f64>(f: F, b1: (f64, f64), b2: (f64, f64), n: usize) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let t1 = b1.0 + (b1.1 - b1.0) * i as f64 / (n - 1) as f64;
        for j in 0..n {
            let t2 = b2.0 + (b2.1 - b2.0) * j as f64 / (n - 1) as f64;
            if t1 + t2 >= 1.0 {
                let v = f(t1, t2);
                if v > best {
                    best = v;
                }
            }
        }
    }
    best
}
