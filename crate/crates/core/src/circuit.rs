//! Gate-level model of the two-mode photonic compression network.
//!
//! The register has three modes: the two signal frequencies ω₁, ω₂ and one
//! environment mode. Frequency and polarization routing (prism, polarizing
//! beam splitter and their reversal) only relabel paths, so they are not
//! represented; the Fock indexing already tells the modes and polarizations
//! apart.
//!
//! Stages:
//! 1. prepare: `+ → H`, `- → V` in modes ω₁, ω₂; environment empty
//! 2. swap the ω₂ photon into the environment when it is H
//! 3. environment Hadamard: `H → (0 + H)/√2`, `0 → (0 − H)/√2`
//! 4. either measure the environment and undo the sign on the photon-found
//!    branch, or apply the sign flip coherently as a doubly controlled phase

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{FockKet, FockState, ModeOccupation, NORM_TOLERANCE};
use crate::message::LetterState;
use crate::source::EigenDecomposition;

/// Index of the ω₂ signal mode.
pub const SECOND_MODE: usize = 1;
/// Index of the environment mode.
pub const ENV_MODE: usize = 2;
const REGISTER_MODES: usize = 3;

/// A normalized two-letter state written over `++, +-, -+, --`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoLetterInput([C64; 4]);

impl TwoLetterInput {
    pub fn new(amplitudes: [C64; 4]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Validation(format!("two-letter input has squared norm {norm}")));
        }
        Ok(TwoLetterInput(amplitudes))
    }

    /// Basis input; `letters` uses 0 for `+` and 1 for `-`.
    pub fn basis(first: usize, second: usize) -> Result<Self> {
        if first > 1 || second > 1 {
            return Err(Error::Domain("letters must be 0 (+) or 1 (-)".into()));
        }
        let mut amps = [C64::default(); 4];
        amps[2 * first + second] = C64::new(1.0, 0.0);
        TwoLetterInput::new(amps)
    }

    pub fn amplitudes(&self) -> &[C64; 4] {
        &self.0
    }

    /// The same state in the letter basis, with `+`/`-` read as the source
    /// eigenvectors.
    pub fn to_message(&self, eig: &EigenDecomposition) -> Result<LetterState> {
        LetterState::from_eigen_coefficients(eig, 2, self.0.to_vec())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Prepared,
    Swapped,
    EnvHadamard,
    PhaseCorrected,
}

/// Combined signal and environment register at one stage of the network.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircuitState {
    pub stage: Stage,
    pub state: FockState,
}

impl CircuitState {
    /// Map `+ → H`, `- → V` on modes ω₁, ω₂ with the environment in vacuum.
    pub fn prepare(input: &TwoLetterInput) -> Result<Self> {
        let occ = |l: usize| if l == 0 { ModeOccupation::H } else { ModeOccupation::V };
        let mut terms = Vec::with_capacity(4);
        for (i, amp) in input.0.iter().enumerate() {
            let ket = FockKet::from_occupations(&[occ(i >> 1), occ(i & 1), ModeOccupation::Vacuum])?;
            terms.push((ket, *amp));
        }
        Ok(CircuitState { stage: Stage::Prepared, state: FockState::from_terms(REGISTER_MODES, terms)? })
    }

    /// Attach an empty environment to an arbitrary two-mode signal state.
    pub fn from_system(system: &FockState) -> Result<Self> {
        if system.mode_count() != 2 {
            return Err(Error::Dimension { expected: 2, found: system.mode_count() });
        }
        let env = FockState::vacuum(1)?;
        Ok(CircuitState { stage: Stage::Prepared, state: system.tensor(&env)? })
    }

    pub fn norm(&self) -> f64 {
        self.state.norm()
    }

    fn next(&self, stage: Stage, state: FockState) -> CircuitState {
        CircuitState { stage, state }
    }
}

/// Exchange an H photon between ω₂ and the environment. A permutation of
/// basis kets, hence unitary and self-inverse.
pub fn conditional_swap_ket(ket: &FockKet) -> FockKet {
    use ModeOccupation::{Vacuum, H};
    match (ket.get(SECOND_MODE), ket.get(ENV_MODE)) {
        (H, Vacuum) => ket.with(SECOND_MODE, Vacuum).with(ENV_MODE, H),
        (Vacuum, H) => ket.with(SECOND_MODE, H).with(ENV_MODE, Vacuum),
        _ => *ket,
    }
}

/// Move an H-polarized ω₂ photon into the (empty) environment.
pub fn conditional_swap_env(s: &CircuitState) -> Result<CircuitState> {
    check_register(&s.state)?;
    if let Some((ket, _)) = s.state.terms().find(|(k, _)| k.get(ENV_MODE) != ModeOccupation::Vacuum) {
        return Err(Error::Precondition(format!("environment must start in vacuum, found ket {ket}")));
    }
    let out = s.state.apply_basis_map(|k| Ok(FockState::basis(conditional_swap_ket(k))))?;
    Ok(s.next(Stage::Swapped, out))
}

/// Hadamard-type rotation of the environment slot.
pub fn env_hadamard(s: &CircuitState) -> Result<CircuitState> {
    check_register(&s.state)?;
    let r = C64::new(FRAC_1_SQRT_2, 0.0);
    let out = s.state.apply_basis_map(|k| {
        let vac = k.with(ENV_MODE, ModeOccupation::Vacuum);
        let one = k.with(ENV_MODE, ModeOccupation::H);
        let terms = match k.get(ENV_MODE) {
            ModeOccupation::H => [(vac, r), (one, r)],
            ModeOccupation::Vacuum => [(vac, r), (one, -r)],
            ModeOccupation::V => {
                return Err(Error::Domain(format!("environment holds a V photon in ket {k}")))
            }
        };
        FockState::from_terms(REGISTER_MODES, terms)
    })?;
    Ok(s.next(Stage::EnvHadamard, out))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnvOutcome {
    EnvVacuum,
    EnvOnePhoton,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasurementOutcome {
    pub result: EnvOutcome,
    pub probability: f64,
    /// Signal state (modes ω₁, ω₂) conditioned on `result`, renormalized.
    pub post_state: FockState,
}

/// Photon-number measurement of the environment; both branches are returned.
pub fn measure_env(s: &CircuitState) -> Result<[MeasurementOutcome; 2]> {
    check_register(&s.state)?;
    let total = s.state.norm_sqr();
    let branch = |result: EnvOutcome, occ: ModeOccupation| -> Result<MeasurementOutcome> {
        let projected = s.state.select_mode(ENV_MODE, occ)?;
        let probability = projected.norm_sqr() / total;
        let post_state = if projected.is_empty() { projected } else { projected.normalized()? };
        Ok(MeasurementOutcome { result, probability, post_state })
    };
    let outcomes = [
        branch(EnvOutcome::EnvVacuum, ModeOccupation::Vacuum)?,
        branch(EnvOutcome::EnvOnePhoton, ModeOccupation::H)?,
    ];
    let seen: f64 = outcomes.iter().map(|o| o.probability).sum();
    if (seen - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::Precondition(format!("environment has V-polarized weight {}", 1.0 - seen)));
    }
    Ok(outcomes)
}

/// Undo the sign picked up on the photon-found branch: flip kets whose ω₂
/// photon is V.
pub fn conditional_phase_correction(s: &FockState, outcome: EnvOutcome) -> Result<FockState> {
    if outcome == EnvOutcome::EnvVacuum {
        return Ok(s.clone());
    }
    s.apply_basis_map(|k| {
        let sign = if k.get(SECOND_MODE) == ModeOccupation::V { -1.0 } else { 1.0 };
        Ok(FockState::basis(*k).scaled(C64::new(sign, 0.0)))
    })
}

/// Doubly controlled phase: `−1` on kets with an environment photon and a V
/// photon in ω₂.
pub fn coherent_phase_correction(s: &CircuitState) -> Result<CircuitState> {
    check_register(&s.state)?;
    let out = s.state.apply_basis_map(|k| {
        let flip = k.get(ENV_MODE) == ModeOccupation::H && k.get(SECOND_MODE) == ModeOccupation::V;
        Ok(FockState::basis(*k).scaled(C64::new(if flip { -1.0 } else { 1.0 }, 0.0)))
    })?;
    Ok(s.next(Stage::PhaseCorrected, out))
}

fn check_register(state: &FockState) -> Result<()> {
    if state.mode_count() != REGISTER_MODES {
        return Err(Error::Dimension { expected: REGISTER_MODES, found: state.mode_count() });
    }
    Ok(())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CircuitMode {
    Measured,
    Coherent,
}

/// One way the network can end.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Branch {
    /// `None` in coherent mode.
    pub outcome: Option<EnvOutcome>,
    pub probability: f64,
    /// Encoded two-mode signal after correction.
    pub output: FockState,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircuitRun {
    pub mode: CircuitMode,
    /// Register after each unitary stage, in order.
    pub trace: Vec<CircuitState>,
    pub branches: Vec<Branch>,
}

/// Run the full network on a two-letter input.
pub fn run_circuit(input: &TwoLetterInput, mode: CircuitMode) -> Result<CircuitRun> {
    let prepared = CircuitState::prepare(input)?;
    let swapped = conditional_swap_env(&prepared)?;
    let rotated = env_hadamard(&swapped)?;
    let mut trace = vec![prepared, swapped, rotated];
    let branches = match mode {
        CircuitMode::Measured => measure_env(&trace[2])?
            .into_iter()
            .map(|o| {
                Ok(Branch {
                    outcome: Some(o.result),
                    probability: o.probability,
                    output: conditional_phase_correction(&o.post_state, o.result)?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        CircuitMode::Coherent => {
            let corrected = coherent_phase_correction(&trace[2])?;
            // environment is left in (0 + H)/√2, a product with the signal
            let output = corrected.state.select_mode(ENV_MODE, ModeOccupation::Vacuum)?.normalized()?;
            trace.push(corrected);
            vec![Branch { outcome: None, probability: 1.0, output }]
        }
    };
    Ok(CircuitRun { mode, trace, branches })
}
