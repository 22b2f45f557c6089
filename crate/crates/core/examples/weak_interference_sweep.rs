//! Sum rate against cross gain for `a < 1`, as CSV on stdout, and the largest
//! gain at which user 1's power control (Scheme V) still beats time
//! division.
//!
//! ```text
//! cargo run -p zic-core --example weak_interference_sweep > weak.csv
//! ```

use std::io;

use zic_core::sweep::{sweep, write_csv, SweepSpec};
use zic_core::{ToleranceConfig, UserProfile};

fn main() -> zic_core::Result<()> {
    let u = UserProfile::new(3.5, 2.0)?;
    let spec = SweepSpec {
        user1: u,
        user2: u,
        a_min: 0.0,
        a_max: 0.99,
        steps: 100,
    };
    let rows = sweep(&spec, &ToleranceConfig::default(), true)?;
    write_csv(&rows, io::stdout().lock())?;

    let crossover = rows
        .iter()
        .filter(|r| match (r.scheme_v, r.scheme_ii) {
            (Some(v), Some(ii)) => v > ii + 1e-6,
            _ => false,
        })
        .map(|r| r.a)
        .next_back();
    eprintln!("Scheme V beats TDM up to a = {crossover:?}");
    Ok(())
}
