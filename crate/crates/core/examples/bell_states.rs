//! Prints the generalized Bell basis for a few qubit counts and checks that
//! the columns are orthonormal.
//!
//! cargo run --example bell_states -- 3

use bellmat::{bell_state, inner, Complex64};

fn show(amplitudes: &[Complex64]) -> String {
    amplitudes
        .iter()
        .map(|a| format!("{:+.4}", a.re))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> bellmat::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |a| a.parse()).expect("qubit count");
    let basis: Vec<_> = (0..1usize << n).map(|k| bell_state(n, k)).collect::<Result<_, _>>()?;

    for (k, b) in basis.iter().enumerate() {
        println!("b_{k:<3} {}", show(b.amplitudes()));
    }

    let mut worst: f64 = 0.0;
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((inner(a, b)? - expected).norm());
        }
    }
    println!("orthonormality residual: {worst:.3e}");
    Ok(())
}
