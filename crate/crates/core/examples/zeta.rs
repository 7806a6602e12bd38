// Witten zeta values at t = 3 for alternating groups, as exact rationals.

use growthlab::characters::zeta;
use growthlab::constructors::{alternating, psl2};
use num_traits::ToPrimitive;

fn main() -> growthlab::Result<()> {
    // set ALT_MAX=9 to include Alt(9), which takes a couple of seconds
    let top: u32 = std::env::var("ALT_MAX").ok().and_then(|v| v.parse().ok()).unwrap_or(8);
    for k in 5..=top {
        let z = zeta(&alternating(k), 3)?;
        println!("zeta_Alt({k})(3) = {z} ≈ {:.9}", z.to_f64().unwrap_or(f64::NAN));
    }
    for q in [5, 7, 11, 13] {
        let z = zeta(&psl2(q)?, 3)?;
        println!("zeta_L2({q})(3) ≈ {:.9}", z.to_f64().unwrap_or(f64::NAN));
    }
    Ok(())
}
