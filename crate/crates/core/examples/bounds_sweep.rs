//! Average codeword length against the lower bounds over a small grid.

use fock_compress::coder::{compression_bounds, Codebook, SymbolOrder};
use fock_compress::experiments::source_at;

fn main() -> fock_compress::Result<()> {
    println!("theta  n   S_total  L        land_n   land_S   cover    prisco   ok");
    for theta in [20.0, 45.0, 70.0] {
        let eig = source_at(theta)?;
        for n in [1, 2, 4, 8, 12] {
            let l = Codebook::build(&eig, n, SymbolOrder::VFirst)?.average_length();
            let b = compression_bounds(eig.entropy(), n, l)?;
            println!(
                "{theta:5} {n:2} {:8.4} {:8.4} {:8.4} {:8.4} {:8.4} {:8.4}  {}",
                b.s_total, l, b.bound_landauer_n, b.bound_landauer_s, b.bound_cover, b.bound_prisco, b.satisfied.all()
            );
        }
    }
    Ok(())
}
