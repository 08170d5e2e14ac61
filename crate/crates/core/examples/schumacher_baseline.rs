//! Typical-subspace projection next to the lossless 1-1 code.

use fock_compress::coder::{Codebook, SymbolOrder};
use fock_compress::experiments::source_at;
use fock_compress::schumacher::{projection_fidelity, schumacher_rate, typical_set};
use fock_compress::source::DEFAULT_ENUMERATION_CAP;

fn main() -> fock_compress::Result<()> {
    let eig = source_at(45.0)?;
    let eps = 0.15;
    println!("S = {:.4}", eig.entropy());
    println!(" n  dim   rate    fidelity  1-1 rate");
    for n in (4..=16).step_by(2) {
        let ts = typical_set(&eig, n, eps, DEFAULT_ENUMERATION_CAP)?;
        let rate = schumacher_rate(&ts).map(|r| format!("{r:.4}")).unwrap_or_else(|_| "  -   ".into());
        let l = Codebook::build(&eig, n, SymbolOrder::VFirst)?.average_length();
        let one_to_one = (l + (n as f64).log2()) / n as f64;
        println!("{n:2} {:5}  {rate}  {:.4}    {one_to_one:.4}", ts.dimension, projection_fidelity(&ts));
    }
    Ok(())
}
