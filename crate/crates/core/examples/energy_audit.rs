//! Energy saved by compression and the Landauer-style information audit.

use fock_compress::coder::{Codebook, SymbolOrder};
use fock_compress::experiments::source_at;
use fock_compress::fock::ModeFrequencies;
use fock_compress::thermo::{energy_ratio_one_to_one, energy_ratio_with_frequencies, landauer_audit};

fn main() -> fock_compress::Result<()> {
    let eig = source_at(45.0)?;
    for n in [2, 3, 6, 10] {
        let book = Codebook::build(&eig, n, SymbolOrder::VFirst)?;
        let e = energy_ratio_one_to_one(&book)?;
        let audit = landauer_audit(n as f64 * eig.entropy(), e.l, (n as f64).log2())?;
        println!(
            "n={n:2}  E_f/E_i={:.4}  L/n={:.4}  deficit={:+.4}  lossless={}",
            e.ratio,
            e.l / n as f64,
            audit.deficit,
            audit.lossless_consistent
        );
    }
    let book = Codebook::build(&eig, 3, SymbolOrder::VFirst)?;
    let graded = energy_ratio_with_frequencies(&book, &ModeFrequencies::new(vec![1.0, 1.5, 2.0])?)?;
    println!("omega = (1, 1.5, 2): E_f/E_i = {:.4}", graded.ratio);
    Ok(())
}
