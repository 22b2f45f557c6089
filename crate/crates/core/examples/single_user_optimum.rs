//! Optimal burst fraction and on-power of an isolated user as the
//! processing cost grows.
//!
//! ```text
//! cargo run -p zic-core --example single_user_optimum
//! ```

use zic_core::{single_user_optimum, UserProfile};

fn main() -> zic_core::Result<()> {
    let budget = 3.5;
    println!("P = {budget}");
    println!("{:>6} {:>8} {:>8} {:>8}", "eps", "theta*", "nu*", "rate");
    for eps in [0.0, 0.25, 0.5, 1.0, 2.0, 3.5, 5.0, 10.0] {
        let o = single_user_optimum(&UserProfile::new(budget, eps)?)?;
        println!("{eps:>6.2} {:>8.4} {:>8.4} {:>8.4}", o.theta_star, o.nu_star, o.rate);
    }
    // Below saturation the on-power is set by eps alone; more budget only
    // buys more air time.
    println!();
    println!("eps = 2");
    for budget in [0.5, 1.0, 2.0, 3.5, 4.0, 6.0] {
        let o = single_user_optimum(&UserProfile::new(budget, 2.0)?)?;
        println!("P = {budget:>4}: theta* = {:.4}, nu* = {:.4}", o.theta_star, o.nu_star);
    }
    Ok(())
}
