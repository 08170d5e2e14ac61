//! Walk the two-letter optical network stage by stage.

use fock_compress::circuit::{run_circuit, CircuitMode, TwoLetterInput};
use fock_compress::coder::Codebook;
use fock_compress::experiments::source_at;
use num_complex::Complex64 as C64;

fn main() -> fock_compress::Result<()> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let z = C64::default();
    let input = TwoLetterInput::new([C64::new(r, 0.0), C64::new(r, 0.0), z, z])?;

    let run = run_circuit(&input, CircuitMode::Measured)?;
    for st in &run.trace {
        println!("{:?}: {:?}", st.stage, st.state);
    }
    let eig = source_at(45.0)?;
    let expected = Codebook::two_mode_network(&eig)?.encode(&input.to_message(&eig)?)?;
    for b in &run.branches {
        println!("{:?} p={:.2} -> {:?}  fidelity {:.12}", b.outcome.unwrap(), b.probability, b.output, b.output.fidelity(&expected)?);
    }
    let coherent = run_circuit(&input, CircuitMode::Coherent)?;
    println!("coherent -> {:?}", coherent.branches[0].output);
    Ok(())
}
