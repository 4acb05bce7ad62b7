// De Moivre's canon for a figurate partial sum, checked against the split
// of the same sum by its recurrence.

use cb_identity::identity::{demoivre_canon, demoivre_canon_terms};
use cb_identity::poly::{figurate, FigurateConvention};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (p, n) = (4, 6);
    let canon = demoivre_canon(p, n)?;
    println!("sum = {}", canon.partial_sum);
    println!("    = {}", demoivre_canon_terms(p, n).join(" "));
    println!("r in powers of (1-x): {}", canon.derived_r.display_in("(1-x)"));
    println!("checks: {}", canon.check);

    let row: Vec<String> = (0..6)
        .map(|k| figurate(p, k, FigurateConvention::DeMoivre).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("figurate numbers of order {p}: {}", row.join(", "));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
