//! Build and combine sparse Fock-basis states.

use fock_compress::fock::{FockKet, FockState, ModeFrequencies, ModeOccupation};
use fock_compress::thermo::average_energy;
use num_complex::Complex64 as C64;

fn main() -> fock_compress::Result<()> {
    let one = C64::new(1.0, 0.0);
    let psi = FockState::from_labels([("HV.", one), ("V..", C64::new(0.0, 1.0))])?.normalized()?;
    println!("psi = {psi:?}");
    println!("<N> = {}", psi.expected_photon_number());

    let phi = FockState::basis(FockKet::parse("HV.")?);
    println!("|<phi|psi>|^2 = {:.3}", phi.fidelity(&psi)?);

    let pair = psi.tensor(&FockState::basis(FockKet::parse("H")?))?;
    println!("psi (x) |H> has {} modes, <N> = {}", pair.mode_count(), pair.expected_photon_number());

    let freqs = ModeFrequencies::new(vec![1.0, 2.0, 3.0])?;
    println!("<H> with omega = (1,2,3): {}", average_energy(&psi, &freqs)?);

    let projected = psi.select_mode(1, ModeOccupation::V)?;
    println!("mode 1 = V branch: {projected:?} (weight {:.2})", projected.norm_sqr());
    Ok(())
}
