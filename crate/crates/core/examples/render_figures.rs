//! Writes sign pixmaps of M and of the Bell matrix for n = 2..7.
//!
//! cargo run --example render_figures -- out_dir

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use bellmat::render::write_ppm;
use bellmat::{GateTag, RenderSpec};

fn main() -> bellmat::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    for n in 2..=7 {
        let cellsize = if n <= 4 { 8 } else { 2 };
        for (name, tag) in [("m", GateTag::M(n)), ("bell", GateTag::Bell(n))] {
            let path = dir.join(format!("{name}{n}.ppm"));
            write_ppm(BufWriter::new(File::create(&path)?), &RenderSpec::new(tag).with_cellsize(cellsize))?;
            println!("{}", path.display());
        }
    }
    Ok(())
}
