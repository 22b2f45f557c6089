//! The cross gain beyond which interference costs nothing, compared with the
//! channel without processing cost (`a >= 1 + P1`).
//!
//! ```text
//! cargo run -p zic-core --example very_strong_regime
//! ```

use zic_core::{regime_report, very_strong_holds, very_strong_threshold, UserProfile, ZicConfig};

fn main() -> zic_core::Result<()> {
    let u = UserProfile::new(3.5, 2.0)?;
    let threshold = very_strong_threshold(&u, &u)?;
    let report = regime_report(&ZicConfig::new(1.0, u, u)?)?;
    println!("P = 3.5, eps = 2 for both users");
    println!("rho = {:.4}", report.rho.unwrap_or(f64::NAN));
    println!("very strong for a >= {threshold:.4} (without processing cost: {})", 1.0 + u.power_budget);
    for a in [1.0, 2.0, 2.3, 2.35, 3.0, 4.5] {
        let holds = very_strong_holds(&ZicConfig::new(a, u, u)?)?;
        println!("  a = {a:<5} interference-free rates: {holds}");
    }

    println!();
    println!("threshold vs cost, P = 3.5:");
    for eps in [0.5, 1.0, 1.5, 2.0, 3.0, 4.0] {
        let u = UserProfile::new(3.5, eps)?;
        match very_strong_threshold(&u, &u) {
            Ok(t) => println!("  eps = {eps:<4} a* = {t:.4}"),
            Err(e) => println!("  eps = {eps:<4} {e}"),
        }
    }
    Ok(())
}
