//! Density matrix, eigenbasis and entropy of the two-letter source.

use fock_compress::source::{diagonalize, ranked_sequences, sequence_label, sequence_letters, LetterEnsemble};

fn main() -> fock_compress::Result<()> {
    let theta: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(45.0);
    let ensemble = LetterEnsemble::two_state(theta.to_radians());
    let rho = ensemble.density_matrix();
    println!("rho = {rho}");

    let eig = diagonalize(&rho)?;
    for (i, p) in eig.pairs().iter().enumerate() {
        println!("r_{i} = {:.6}  vector {}", p.value, eig.vector(i).transpose());
    }
    println!("S(rho) = {:.6} bits per letter, {:.4} for three letters", eig.entropy(), 3.0 * eig.entropy());

    for r in ranked_sequences(&eig, 3, 1 << 10)? {
        println!("{:>2}  {}  {:.6}", r.rank, sequence_label(&sequence_letters(r.index, 2, 3), 2), r.probability);
    }
    Ok(())
}
