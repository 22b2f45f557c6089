//! Splitting one user's budget across a clean and a noisy channel with
//! processing cost. The noisy channel only switches on once the clean one is
//! saturated.
//!
//! ```text
//! cargo run -p zic-core --example glue_pouring
//! ```

use zic_core::{glue_pour, ParallelChannel, ToleranceConfig, UserProfile};

fn main() -> zic_core::Result<()> {
    let channels = [ParallelChannel::new(1.0, 0.3), ParallelChannel::new(3.0, 0.7)];
    let tol = ToleranceConfig::default();
    println!("clean: N = 1, 30% of uses; noisy: N = 3, 70% of uses; eps = 2");
    println!(
        "{:>5} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "P", "theta_c", "nu_c", "theta_n", "nu_n", "rate"
    );
    for k in 1..=16 {
        let p = 0.5 * k as f64;
        let g = glue_pour(&UserProfile::new(p, 2.0)?, &channels, &tol)?;
        let [c, n] = g.channels;
        println!(
            "{p:>5.1} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>9.4}",
            c.theta, c.nu, n.theta, n.nu, g.total_rate
        );
    }
    Ok(())
}
