//! Scalar special functions and the deterministic grid-plus-refine
//! optimizers used by every scheme.
//!
//! The optimizers never rely on concavity. A dense grid picks the winning
//! cell and golden-section search polishes it, so the result is the grid
//! winner's local maximum to within [`ToleranceConfig::refine_tol`]. Every
//! step is a fixed sequence of floating point operations, so repeated calls
//! return bit-identical results.

use std::f64::consts::{E, LN_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2

/// Numerical knobs shared by the root finder and the optimizers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Residual tolerance for root finding and the stopping rule of the 2D
    /// coordinate refinement.
    pub abs_tol: f64,
    /// Samples per optimization dimension.
    pub grid_points: usize,
    /// Width of the final golden-section bracket.
    pub refine_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            abs_tol: 1e-9,
            grid_points: 2001,
            refine_tol: 1e-7,
        }
    }
}

impl ToleranceConfig {
    /// Coarse grids for interactive use. Results are close to, but not
    /// guaranteed to match, the default profile.
    pub fn fast() -> Self {
        ToleranceConfig {
            grid_points: 201,
            ..Self::default()
        }
    }

    pub fn with_grid_points(self, grid_points: usize) -> Self {
        ToleranceConfig {
            grid_points,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.refine_tol > 0.0) {
            return Err(Error::domain("tolerances must be positive"));
        }
        if self.grid_points < 3 {
            return Err(Error::domain("grid_points must be at least 3"));
        }
        Ok(())
    }
}

/// Principal branch of the Lambert W function, `w` with `w * exp(w) = x`
/// and `w >= -1`.
///
/// Halley iteration, started from `ln(1 + x)` away from the branch point
/// and from the branch-point series `-1 + p - p^2/3 + 11 p^3 / 72`,
/// `p = sqrt(2 (e x + 1))`, close to it.
pub fn lambert_w0(x: f64, tol: &ToleranceConfig) -> Result<f64> {
    const BRANCH: f64 = -1.0 / E;
    if x.is_nan() {
        return Err(Error::domain("lambert_w0 of NaN"));
    }
    if x < BRANCH {
        // (eps - 1) / e at eps = 0 can land one ulp below the branch point.
        if BRANCH - x <= 4.0 * f64::EPSILON {
            return Ok(-1.0);
        }
        return Err(Error::domain(format!(
            "lambert_w0 argument {x} is below the branch point -1/e"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }

    let mut w = if x < -0.25 {
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else {
        x.ln_1p()
    };

    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    let w = w.max(-1.0);

    let residual = (w * w.exp() - x).abs();
    if residual > tol.abs_tol * x.abs().max(1.0) {
        return Err(Error::domain(format!(
            "lambert_w0({x}) did not converge (residual {residual:e})"
        )));
    }
    Ok(w)
}

/// Gaussian channel capacity `1/2 log2(1 + snr)` in bits per channel use.
pub fn capacity(snr: f64) -> Result<f64> {
    if !(snr >= 0.0) {
        return Err(Error::domain(format!("capacity of negative snr {snr}")));
    }
    Ok(capacity_unchecked(snr))
}

/// [`capacity`] without the domain check, for objective inner loops whose
/// arguments are non-negative by construction.
#[inline]
pub fn capacity_unchecked(snr: f64) -> f64 {
    0.5 * snr.ln_1p() / LN_2
}

/// `weight * C(snr)`, taken as zero when the weight is zero so that an idle
/// time share contributes nothing even if its power level is unbounded.
#[inline]
pub(crate) fn weighted_capacity(weight: f64, snr: f64) -> f64 {
    if weight <= 0.0 {
        0.0
    } else {
        weight * capacity_unchecked(snr)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum1d {
    pub arg: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum2d {
    pub arg: (f64, f64),
    pub value: f64,
}

/// Axis-aligned search box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBox {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl SearchBox {
    pub fn new(x: (f64, f64), y: (f64, f64)) -> Self {
        SearchBox { x, y }
    }
}

#[inline]
fn sanitize(v: f64) -> f64 {
    if v.is_nan() {
        f64::NEG_INFINITY
    } else {
        v
    }
}

#[inline]
fn grid_at(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    Ok(())
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`, stopping once
/// the bracket is narrower than `width`.
pub fn golden_section_max<F>(f: F, lo: f64, hi: f64, width: f64) -> Result<Maximum1d>
where
    F: Fn(f64) -> f64,
{
    check_interval(lo, hi)?;
    let f = |x: f64| sanitize(f(x));
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_GOLDEN * (b - a);
    let mut d = a + INV_GOLDEN * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > width {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_GOLDEN * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_GOLDEN * (b - a);
            fd = f(d);
        }
    }
    let arg = 0.5 * (a + b);
    let value = f(arg);
    let mut best = Maximum1d { arg, value };
    for (x, v) in [(c, fc), (d, fd)] {
        if v > best.value {
            best = Maximum1d { arg: x, value: v };
        }
    }
    Ok(best)
}

/// Maximizes `f` over `[lo, hi]`: dense grid scan, then golden-section
/// refinement inside the winning grid cell's neighbours.
///
/// Ties on the grid go to the smallest argument. The refined point replaces
/// the grid winner only if it is strictly better, so a maximum sitting on a
/// grid node (typically an endpoint) is returned exactly.
pub fn maximize_1d<F>(f: F, lo: f64, hi: f64, tol: &ToleranceConfig) -> Result<Maximum1d>
where
    F: Fn(f64) -> f64,
{
    check_interval(lo, hi)?;
    tol.validate()?;
    if lo == hi {
        return Ok(Maximum1d {
            arg: lo,
            value: sanitize(f(lo)),
        });
    }

    let n = tol.grid_points;
    let mut best_i = 0;
    let mut best = Maximum1d {
        arg: lo,
        value: sanitize(f(lo)),
    };
    for i in 1..n {
        let x = grid_at(lo, hi, i, n);
        let v = sanitize(f(x));
        if v > best.value {
            best_i = i;
            best = Maximum1d { arg: x, value: v };
        }
    }

    let a = grid_at(lo, hi, best_i.saturating_sub(1), n);
    let b = grid_at(lo, hi, (best_i + 1).min(n - 1), n);
    let refined = golden_section_max(&f, a, b, tol.refine_tol)?;
    if refined.value > best.value {
        best = refined;
    }
    Ok(best)
}

/// Maximizes `f` over the points of `bx` accepted by `feasible`.
///
/// The feasible set is assumed convex along coordinate lines (true for the
/// linear constraints used by the schemes). After the grid scan the best
/// node is polished by alternating golden-section line searches along each
/// axis, one grid cell either side, until a sweep gains less than
/// `abs_tol`.
pub fn maximize_2d<F, G>(
    f: F,
    feasible: G,
    bx: SearchBox,
    tol: &ToleranceConfig,
) -> Result<Maximum2d>
where
    F: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> bool,
{
    let SearchBox {
        x: (x_lo, x_hi),
        y: (y_lo, y_hi),
    } = bx;
    check_interval(x_lo, x_hi)?;
    check_interval(y_lo, y_hi)?;
    tol.validate()?;

    let nx = if x_lo == x_hi { 1 } else { tol.grid_points };
    let ny = if y_lo == y_hi { 1 } else { tol.grid_points };
    let at = |lo: f64, hi: f64, i: usize, n: usize| {
        if n == 1 {
            lo
        } else {
            grid_at(lo, hi, i, n)
        }
    };

    let mut best: Option<Maximum2d> = None;
    for i in 0..nx {
        let x = at(x_lo, x_hi, i, nx);
        for j in 0..ny {
            let y = at(y_lo, y_hi, j, ny);
            if !feasible(x, y) {
                continue;
            }
            let v = sanitize(f(x, y));
            if best.is_none_or(|b| v > b.value) {
                best = Some(Maximum2d { arg: (x, y), value: v });
            }
        }
    }
    let mut best = best.ok_or_else(|| {
        Error::Infeasible("no grid point satisfies the constraints".to_string())
    })?;

    let hx = if nx > 1 { (x_hi - x_lo) / (nx - 1) as f64 } else { 0.0 };
    let hy = if ny > 1 { (y_hi - y_lo) / (ny - 1) as f64 } else { 0.0 };

    for _ in 0..200 {
        let start = best.value;
        if hx > 0.0 {
            let (x0, y0) = best.arg;
            let (a, b) = feasible_segment(|x| feasible(x, y0), x0, x_lo.max(x0 - hx), x_hi.min(x0 + hx));
            if b > a {
                let line = golden_section_max(|x| f(x, y0), a, b, tol.refine_tol)?;
                if line.value > best.value {
                    best = Maximum2d { arg: (line.arg, y0), value: line.value };
                }
            }
        }
        if hy > 0.0 {
            let (x0, y0) = best.arg;
            let (a, b) = feasible_segment(|y| feasible(x0, y), y0, y_lo.max(y0 - hy), y_hi.min(y0 + hy));
            if b > a {
                let line = golden_section_max(|y| f(x0, y), a, b, tol.refine_tol)?;
                if line.value > best.value {
                    best = Maximum2d { arg: (x0, line.arg), value: line.value };
                }
            }
        }
        if best.value - start < tol.abs_tol {
            break;
        }
    }
    Ok(best)
}

/// Shrinks `[lo, hi]` (which contains the feasible point `inside`) to the
/// feasible part of the line, assuming feasibility is convex along it.
fn feasible_segment<G>(feasible: G, inside: f64, lo: f64, hi: f64) -> (f64, f64)
where
    G: Fn(f64) -> bool,
{
    let edge = |out: f64| {
        if feasible(out) {
            return out;
        }
        let (mut good, mut bad) = (inside, out);
        for _ in 0..64 {
            let mid = 0.5 * (good + bad);
            if mid == good || mid == bad {
                break;
            }
            if feasible(mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    (edge(lo), edge(hi))
}

/// Locates the switch point of a monotone predicate by bisection.
///
/// Requires `pred(lo) == false` and `pred(hi) == true`; returns the upper
/// end of a final bracket no wider than `width`, so the result always
/// satisfies the predicate.
pub fn bisect_threshold<P>(pred: P, lo: f64, hi: f64, width: f64) -> Result<f64>
where
    P: Fn(f64) -> bool,
{
    check_interval(lo, hi)?;
    if pred(lo) || !pred(hi) {
        return Err(Error::Precondition(
            "bisection requires pred(lo) = false and pred(hi) = true".to_string(),
        ));
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > width {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        if pred(mid) {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(b)
}
