// Hering's truncated negative power, its hypergeometric chain for
// non-integer exponent, and the integer-exponent limit with a bounded tail.

use cb_identity::exact::rat;
use cb_identity::hypergeom::{hering_chain_check, hering_limit_tail_check, verify_pfaff};
use cb_identity::identity::{hering_identity_check, hering_to_cb};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("Hering at m=3 n=4 x=1/3: {}", hering_identity_check(3, 4, &rat(1, 3))?);
    let t = hering_to_cb(3, 4)?;
    println!("  same as the two-series identity with n={} m={}", t.cb_n, t.cb_m);

    println!("Pfaff, a=-4 b=2/3 c=7/2 z=-1/5: {}", verify_pfaff(&rat(-4, 1), &rat(2, 3), &rat(7, 2), &rat(-1, 5))?);

    let chain = hering_chain_check(&rat(3, 2), 5, &rat(7, 5))?;
    println!("chain m=3/2 n=5 x=7/5: {} = {} = {}", chain.left, chain.middle, chain.right);

    let tail = hering_limit_tail_check(2, 2, &rat(3, 1), 60)?;
    println!("limit m=2 n=2 x=3: head {} target {}", tail.head, tail.head_target);
    println!("  tail residual {:.3e} <= bound {:.3e}", to_f64(&tail.residual), to_f64(&tail.bound));
    Ok(())
}

fn to_f64(x: &cb_identity::Rational) -> f64 {
    num::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
