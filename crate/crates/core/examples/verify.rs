//! Runs the property verification and prints the summary.
//!
//! cargo run --example verify -- 6 42 100

use bellmat::verify::{verify, VerifyConfig};

fn arg<T: std::str::FromStr>(i: usize, default: T) -> T {
    std::env::args().nth(i).and_then(|a| a.parse().ok()).unwrap_or(default)
}

fn main() -> bellmat::Result<()> {
    let config = VerifyConfig { max_n: arg(1, 6), seed: arg(2, 42), trials: arg(3, 100) };
    let summary = verify(&config)?;
    summary.write_text(std::io::stdout())?;
    Ok(())
}
