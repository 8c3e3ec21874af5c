//! Thue–Morse prefixes, the evil/odious partition and the block negation
//! identity.
//!
//! cargo run --example thue_morse -- 5

use bellmat::thuemorse::{block_negation_check, evil_odious_indices, ThueMorsePrefix};

fn main() -> bellmat::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(4), |a| a.parse()).expect("exponent");
    let prefix = ThueMorsePrefix::new(n)?;
    let bits: String = prefix.bits().iter().map(|b| char::from(b'0' + b)).collect();
    println!("t_1..t_{}: {bits}", prefix.len());

    let classes = evil_odious_indices(n)?;
    println!("evil   ({}): {:?}", classes.evil.len(), classes.evil);
    println!("odious ({}): {:?}", classes.odious.len(), classes.odious);

    for m in 1..=n {
        println!("block negation holds for 2^{m}: {}", block_negation_check(m)?);
    }
    Ok(())
}
