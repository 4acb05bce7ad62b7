// Newton's answer to Pepys, and the chance that a face turns up fewer than
// its expected number of times.

use cb_identity::dice::{g_chance, g_monotone_check, pepys_probability};
use cb_identity::exact::to_decimal;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for k in 1..=3 {
        let p = pepys_probability(k)?;
        println!("at least {k} six(es) in {} dice: {p} ~ {}", 6 * k, to_decimal(&p));
    }
    for n in 1..=4 {
        println!("g({}, {n}) = {}", 6 * n, to_decimal(&g_chance(6, n)?));
    }
    for s in 2..=8 {
        println!("s={s}: g(sn, n) increasing for n <= 12: {}", g_monotone_check(s, 12)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
