//! Every scheme defined at one cross gain, with its maximizing parameters.
//!
//! ```text
//! cargo run -p zic-core --example compare_schemes -- 0.2
//! ```

use zic_core::schemes::{best_scheme, evaluate, SchemeId};
use zic_core::{ToleranceConfig, UserProfile, ZicConfig};

fn main() -> zic_core::Result<()> {
    let a: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("cross gain must be a number"))
        .unwrap_or(1.5);
    let u = UserProfile::new(3.5, 2.0)?;
    let cfg = ZicConfig::new(a, u, u)?;
    let tol = ToleranceConfig::default();

    println!("a = {a}, P = 3.5, eps = 2 for both users");
    for id in SchemeId::SCHEMES.into_iter().chain([SchemeId::UpperBound]) {
        let Some(e) = evaluate(id, &cfg, &tol)? else {
            println!("{:>11}: not defined at this gain", id.to_string());
            continue;
        };
        let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v:.4}")).collect();
        println!("{:>11}: {:.6}  {}", id.to_string(), e.sum_rate, params.join(" "));
    }
    let best = best_scheme(&cfg, &tol)?;
    println!("best: scheme {} at {:.6}", best.scheme, best.sum_rate);
    Ok(())
}
