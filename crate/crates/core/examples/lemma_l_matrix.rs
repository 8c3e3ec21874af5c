//! Conjugates M by the Bell matrix densely and compares the result with the
//! Thue–Morse diagonal.

use bellmat::thuemorse::l_diag_via_thue;
use bellmat::{dense, GateTag};

fn main() -> bellmat::Result<()> {
    for n in 2..=7 {
        let b = dense(GateTag::Bell(n))?;
        let m = dense(GateTag::M(n))?;
        let l = b.adjoint().matmul(&m)?.matmul(&b)?;
        let diagonal = l.diagonal();
        let thue = l_diag_via_thue(n)?;
        let diag_err = diagonal
            .iter()
            .zip(&thue)
            .map(|(d, t)| (d - t).norm())
            .fold(0.0, f64::max);
        println!(
            "n={n}: off-diagonal {:.2e}, diagonal vs Thue-Morse {:.2e}",
            l.max_off_diagonal(),
            diag_err
        );
        if n <= 3 {
            let signs: Vec<&str> = thue.iter().map(|&x| if x > 0.0 { "+" } else { "-" }).collect();
            println!("      diag = {}", signs.join(" "));
        }
    }
    Ok(())
}
