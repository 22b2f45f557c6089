//! Sum rate against cross gain for `a >= 1`, as CSV on stdout. Scheme IV
//! meets the upper bound once `a` passes the very-strong threshold.
//!
//! ```text
//! cargo run -p zic-core --example strong_interference_sweep > strong.csv
//! ```

use std::io;

use zic_core::sweep::{sweep, write_csv, SweepSpec};
use zic_core::{very_strong_threshold, ToleranceConfig, UserProfile};

fn main() -> zic_core::Result<()> {
    let u = UserProfile::new(3.5, 2.0)?;
    let spec = SweepSpec {
        user1: u,
        user2: u,
        a_min: 1.0,
        a_max: 5.0,
        steps: 41,
    };
    let rows = sweep(&spec, &ToleranceConfig::default(), true)?;
    write_csv(&rows, io::stdout().lock())?;

    let threshold = very_strong_threshold(&u, &u)?;
    let saturated = rows
        .iter()
        .find(|r| r.scheme_iv.is_some_and(|iv| (iv - r.upper_bound).abs() < 1e-4))
        .map(|r| r.a);
    eprintln!("threshold a* = {threshold:.4}; first sweep point with IV at the bound: {saturated:?}");
    Ok(())
}
