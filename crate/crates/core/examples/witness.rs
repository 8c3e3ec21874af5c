//! Evaluates the witness |F| and the Meyer–Wallach measure Q on Bell, GHZ
//! and random product states.

use bellmat::sample::{random_product_state, stream_rng};
use bellmat::{bell_state, f_value, ghz_state, mw_measure, reduced_density_qubit, purity};

fn main() -> bellmat::Result<()> {
    println!("{:<16} {:>8} {:>8}", "state", "|F|", "Q");
    for n in 2..=8 {
        let b = bell_state(n, (1 << n) - 1)?;
        println!("{:<16} {:>8.4} {:>8.4}", format!("bell n={n}"), f_value(&b)?.norm(), mw_measure(&b)?);
    }
    for n in 3..=8 {
        let g = ghz_state(n)?;
        println!("{:<16} {:>8.4} {:>8.4}", format!("ghz n={n}"), f_value(&g)?.norm(), mw_measure(&g)?);
    }

    let mut rng = stream_rng(1, "witness-example");
    for n in [3, 6, 9] {
        let p = random_product_state(&mut rng, n, n / 2)?;
        println!("{:<16} {:>8.1e} {:>8.4}", format!("product n={n}"), f_value(&p)?.norm(), mw_measure(&p)?);
    }

    // A unit witness value mixes qubits 1 and n completely; the middle
    // qubits of a Bell column stay pure.
    let b = bell_state(5, 11)?;
    let purities: Vec<String> = (1..=5)
        .map(|j| reduced_density_qubit(&b, j).map(|rho| format!("{:.3}", purity(&rho))))
        .collect::<Result<_, _>>()?;
    println!("single-qubit purities of b_11 (n=5): {}", purities.join(" "));
    Ok(())
}
