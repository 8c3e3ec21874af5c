//! Schmidt coefficients across every cut for a Bell column, a GHZ state and
//! a random state.

use bellmat::sample::{random_state, stream_rng};
use bellmat::{bell_state, ghz_state, is_product, schmidt, PureState};

fn report(label: &str, s: &PureState) -> bellmat::Result<()> {
    println!("{label}");
    for cut in 1..s.n() {
        let data = schmidt(s, cut)?;
        let coeffs: Vec<String> = data.coefficients.iter().take(4).map(|c| format!("{c:.4}")).collect();
        println!("  cut {cut}: rank {:<3} purity {:.4}  [{}]", data.rank(), data.purity(), coeffs.join(", "));
    }
    let check = is_product(s, 1e-10)?;
    println!("  product: {} (cut {:?})", check.is_product, check.cut);
    Ok(())
}

fn main() -> bellmat::Result<()> {
    report("bell n=5 k=6", &bell_state(5, 6)?)?;
    report("ghz n=5", &ghz_state(5)?)?;
    let mut rng = stream_rng(3, "schmidt-example");
    report("random n=5", &random_state(&mut rng, 5)?)?;
    Ok(())
}
