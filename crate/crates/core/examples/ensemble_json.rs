//! Load a custom letter ensemble from JSON and compress it.

use fock_compress::coder::{Codebook, SymbolOrder};
use fock_compress::source::{diagonalize, LetterEnsemble};

const ENSEMBLE: &str = r#"{"letters": [
    {"amplitudes": [[1.0, 0.0], [0.0, 0.0]], "p": 0.7},
    {"amplitudes": [[0.6, 0.0], [0.0, 0.8]], "p": 0.3}
]}"#;

fn main() -> fock_compress::Result<()> {
    let ens = LetterEnsemble::from_json(ENSEMBLE)?;
    let eig = diagonalize(&ens.density_matrix())?;
    println!("eigenvalues {:?}, S = {:.4}", eig.values(), eig.entropy());
    for n in 1..=6 {
        let book = Codebook::build(&eig, n, SymbolOrder::VFirst)?;
        println!("n={n}  L={:.4}  n*S={:.4}", book.average_length(), n as f64 * eig.entropy());
    }
    println!("{}", ens.to_json()?);
    Ok(())
}
