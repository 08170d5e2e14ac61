//! Energy bookkeeping in units of ħω and Landauer-style information audits.
//! Entropies and lengths are in bits; Boltzmann factors are dropped.

use serde::Serialize;

use crate::coder::Codebook;
use crate::error::{Error, Result};
use crate::fock::{FockState, ModeFrequencies};

/// Deficits at or below this count as lossless.
pub const LANDAUER_TOLERANCE: f64 = 1e-9;

/// `Σ_kets |a|² Σ_{occupied i} ω_i`, normalized by the state norm.
pub fn average_energy(state: &FockState, freqs: &ModeFrequencies) -> Result<f64> {
    if state.mode_count() != freqs.len() {
        return Err(Error::Dimension { expected: freqs.len(), found: state.mode_count() });
    }
    let omegas = freqs.as_slice();
    let weighted: f64 = state
        .terms()
        .map(|(ket, a)| {
            let e: f64 = ket.occupations().zip(omegas).filter(|(o, _)| o.is_occupied()).map(|(_, w)| w).sum();
            a.norm_sqr() * e
        })
        .sum();
    Ok(weighted / state.norm_sqr())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnergyReport {
    pub scheme: String,
    pub n: usize,
    /// Average codeword length of the scheme, in photons.
    pub l: f64,
    pub e_initial: f64,
    pub e_final: f64,
    /// `e_final / e_initial`.
    pub ratio: f64,
}

/// Energy before and after 1-1 compression with every mode at ω = 1.
pub fn energy_ratio_one_to_one(book: &Codebook) -> Result<EnergyReport> {
    energy_ratio_with_frequencies(book, &ModeFrequencies::uniform(book.modes()))
}

/// Energy before and after 1-1 compression for arbitrary mode frequencies.
///
/// Before compression each of the `n` letters is one photon in its own mode
/// `1..=n`. After compression the register holds the codeword mixture
/// `Σ p_s |c_s⟩⟨c_s|`, whose energy is summed ket by ket.
pub fn energy_ratio_with_frequencies(book: &Codebook, freqs: &ModeFrequencies) -> Result<EnergyReport> {
    if freqs.len() != book.modes() {
        return Err(Error::Dimension { expected: book.modes(), found: freqs.len() });
    }
    let e_initial: f64 = freqs.as_slice()[..book.n()].iter().sum();
    let mut e_final = 0.0;
    for entry in book.entries() {
        let state = book.encode_sequence(entry.sequence)?;
        e_final += entry.probability * average_energy(&state, freqs)?;
    }
    Ok(EnergyReport {
        scheme: "one-to-one".into(),
        n: book.n(),
        l: book.average_length(),
        e_initial,
        e_final,
        ratio: e_final / e_initial,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LandauerAudit {
    pub s_total: f64,
    pub side_info_bits: f64,
    pub l: f64,
    /// `s_total − (l + side_info_bits)`.
    pub deficit: f64,
    pub lossless_consistent: bool,
}

/// Compare the information a scheme carries, `l + side_info_bits`, with the
/// entropy it must preserve. A positive deficit means some information was
/// erased.
pub fn landauer_audit(s_total: f64, l: f64, side_info_bits: f64) -> Result<LandauerAudit> {
    if !(s_total >= 0.0 && l >= 0.0 && side_info_bits >= 0.0) {
        return Err(Error::Domain(format!(
            "audit inputs must be non-negative (S={s_total}, L={l}, side={side_info_bits})"
        )));
    }
    let deficit = s_total - (l + side_info_bits);
    Ok(LandauerAudit { s_total, side_info_bits, l, deficit, lossless_consistent: deficit <= LANDAUER_TOLERANCE })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coder::SymbolOrder;
    use crate::fock::FockKet;
    use crate::source::{diagonalize, LetterEnsemble};
    use num_complex::Complex64 as C64;

    #[test]
    fn average_energy_examples() {
        let hv = FockState::basis(FockKet::parse("HV").unwrap());
        assert_eq!(average_energy(&hv, &ModeFrequencies::uniform(2)).unwrap(), 2.0);
        let sup = FockState::from_labels([("H.", C64::new(1.0, 0.0)), ("VV", C64::new(1.0, 0.0))])
            .unwrap()
            .normalized()
            .unwrap();
        assert!((average_energy(&sup, &ModeFrequencies::uniform(2)).unwrap() - 1.5).abs() < 1e-15);
        let weighted = ModeFrequencies::new(vec![1.0, 2.0]).unwrap();
        assert_eq!(average_energy(&hv, &weighted).unwrap(), 3.0);
        assert!(matches!(average_energy(&hv, &ModeFrequencies::uniform(3)), Err(Error::Dimension { .. })));
    }

    #[test]
    fn ratio_is_length_per_letter() {
        let eig = diagonalize(&LetterEnsemble::two_state(45f64.to_radians()).density_matrix()).unwrap();
        let book = Codebook::build(&eig, 3, SymbolOrder::VFirst).unwrap();
        let r = energy_ratio_one_to_one(&book).unwrap();
        assert_eq!(r.e_initial, 3.0);
        assert!((r.ratio - 0.431).abs() < 1e-3);
        assert!((r.ratio - book.average_length() / 3.0).abs() < 1e-12);

        let orth = diagonalize(&LetterEnsemble::two_state(std::f64::consts::PI).density_matrix()).unwrap();
        let book = Codebook::build(&orth, 1, SymbolOrder::VFirst).unwrap();
        assert!((energy_ratio_one_to_one(&book).unwrap().ratio - 1.0).abs() < 1e-15);
    }

    #[test]
    fn nonuniform_frequencies_break_the_identity() {
        let eig = diagonalize(&LetterEnsemble::two_state(45f64.to_radians()).density_matrix()).unwrap();
        let book = Codebook::build(&eig, 3, SymbolOrder::VFirst).unwrap();
        let freqs = ModeFrequencies::new(vec![1.0, 2.0, 3.0]).unwrap();
        let r = energy_ratio_with_frequencies(&book, &freqs).unwrap();
        assert_eq!(r.e_initial, 6.0);
        assert!((r.ratio - book.average_length() / 3.0).abs() > 1e-3);
    }

    #[test]
    fn audits() {
        let s = 3.0 * 0.600_876_1;
        let a = landauer_audit(s, 1.292_893, 3f64.log2()).unwrap();
        assert!((a.deficit - (-1.075)).abs() < 1e-3);
        assert!(a.lossless_consistent);

        let eq = landauer_audit(2.5, 2.5, 0.0).unwrap();
        assert_eq!(eq.deficit, 0.0);
        assert!(eq.lossless_consistent);

        let lossy = landauer_audit(2.5, 1.5, 0.0).unwrap();
        assert_eq!(lossy.deficit, 1.0);
        assert!(!lossy.lossless_consistent);

        assert!(landauer_audit(-1.0, 0.0, 0.0).is_err());
    }
}
