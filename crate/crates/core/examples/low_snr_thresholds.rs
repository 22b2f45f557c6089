//! Closed-form thresholds in the low-SNR scaling `P = lambda sqrt(2 eps)`,
//! and how the exact threshold approaches them as `eps -> 0`.
//!
//! ```text
//! cargo run -p zic-core --example low_snr_thresholds
//! ```

use zic_core::{low_snr_threshold, very_strong_threshold, UserProfile};

fn main() -> zic_core::Result<()> {
    let (l1, l2) = (0.6, 0.6);
    println!("lambda1 = {l1}, lambda2 = {l2}");
    println!("{:>8} {:>12} {:>12} {:>12}", "eps", "exact", "closed form", "1 + P1");
    for eps in [1e-2f64, 1e-3, 1e-4, 1e-5] {
        let s = (2.0 * eps).sqrt();
        let u1 = UserProfile::new(l1 * s, eps)?;
        let u2 = UserProfile::new(l2 * s, eps)?;
        let exact = very_strong_threshold(&u1, &u2)?;
        let (_, approx) = low_snr_threshold(&u1, &u2)?;
        println!("{eps:>8.0e} {exact:>12.7} {approx:>12.7} {:>12.7}", 1.0 + u1.power_budget);
    }

    println!();
    for (label, u1, u2) in [
        ("both bursty", UserProfile::new(0.006, 5e-5)?, UserProfile::new(0.006, 5e-5)?),
        ("user 2 always on", UserProfile::new(0.006, 5e-5)?, UserProfile::new(0.02, 5e-5)?),
        ("user 1 always on", UserProfile::new(0.02, 5e-5)?, UserProfile::new(0.006, 5e-5)?),
    ] {
        let (case, a) = low_snr_threshold(&u1, &u2)?;
        println!("{label:<18} {case:?}: a >= {a:.6}");
    }
    Ok(())
}
