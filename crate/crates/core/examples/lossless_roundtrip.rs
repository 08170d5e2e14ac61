//! Encode a random superposition of messages and decode it exactly.

use fock_compress::coder::{Codebook, SymbolOrder};
use fock_compress::experiments::source_at;
use fock_compress::message::LetterState;
use fock_compress::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fock_compress::Result<()> {
    let n = 4;
    let eig = source_at(60.0)?;
    let book = Codebook::build(&eig, n, SymbolOrder::VFirst)?;
    let msg = LetterState::random(2, n, &mut ChaCha8Rng::seed_from_u64(42))?;

    let encoded = book.encode(&msg)?;
    println!("{} Fock terms over {} modes, <N> = {:.4}", encoded.len(), encoded.mode_count(), encoded.expected_photon_number());
    let back = book.decode(&encoded, n)?;
    println!("fidelity after decode: {:.15}", msg.fidelity(&back)?);

    match book.decode(&encoded, n + 1) {
        Err(e @ Error::SideInfoMismatch { .. }) => println!("wrong total length rejected: {e}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
