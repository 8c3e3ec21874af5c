//! Saves a Bell state to disk, reads it back and prints its report in both
//! output formats.

use bellmat::report::measure;
use bellmat::statefile::{load_state, save_state};
use bellmat::bell_state;

fn main() -> bellmat::Result<()> {
    let path = std::env::temp_dir().join("bellmat-example-state.txt");
    let original = bell_state(4, 9)?;
    save_state(&path, &original)?;
    let loaded = load_state(&path)?;
    println!("round trip exact: {}", loaded == original);

    let record = measure(&loaded, path.display().to_string())?;
    record.write_text(std::io::stdout())?;
    record.write_kv(std::io::stdout())?;
    std::fs::remove_file(&path)?;
    Ok(())
}
