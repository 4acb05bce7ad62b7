// The two truncated binomial series add up to 1, at a rational point and as
// polynomials.

use cb_identity::exact::rat;
use cb_identity::identity::{cb_polynomial_identity, cb_polynomials, cb_split, CbParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let split = cb_split(&CbParams::new(3, 2, rat(2, 7)));
    println!("n=3 m=2 x=2/7: {} + {} = {}", split.first, split.second, split.sum());

    let (first, second) = cb_polynomials(2, 1);
    println!("n=2 m=1: ({first}) + ({second})");

    let all = (0..=8).all(|n| (0..=8).all(|m| cb_polynomial_identity(n, m)));
    println!("identity holds on [0, 8]^2: {all}");
    if !all {
        return Err("identity failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
