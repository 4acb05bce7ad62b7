// A maximally flat smoothing filter from the Krawtchouk kernel: taps, a
// smoothed signal, and the frequency response.

use cb_identity::exact::{format_f64, int};
use cb_identity::krawtchouk::{apply_filter, kernel_coefficients, transfer_function, FilterSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = FilterSpec::new(4, 1)?;
    let taps = kernel_coefficients(&spec)?;
    let text: Vec<String> = taps.iter().map(ToString::to_string).collect();
    println!("taps: {}", text.join(", "));

    // a cubic passes through unchanged
    let signal: Vec<_> = (0..14i64).map(|t| int(t * t * t - 4 * t)).collect();
    let smoothed = apply_filter(&spec, &signal)?;
    println!("cubic preserved: {}", smoothed[..] == signal[4..10]);

    let tf = transfer_function(&spec)?;
    println!("phi(s) = {}", tf.s_poly.display_in("s"));
    println!("P = {}", tf.p.display_in("s"));
    println!("Q = {}", tf.q.display_in("s"));
    for (omega, phi) in tf.sample(4) {
        println!("  omega {:>18}  phi {}", format_f64(omega), format_f64(phi));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
