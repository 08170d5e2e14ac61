//! Memoryless quantum sources: letter ensembles, their density matrices, the
//! eigenbasis, and probability-ranked n-letter sequences in that basis.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `d^n` for exact enumerations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 22;

/// Eigenvalues closer than this are treated as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

const ENSEMBLE_TOLERANCE: f64 = 1e-12;
const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// One letter the source can emit: a pure state and its probability.
#[derive(Clone, Debug, PartialEq)]
pub struct Letter {
    pub amplitudes: Vec<C64>,
    pub probability: f64,
}

/// A memoryless source `ρ = Σ p_i |ψ_i⟩⟨ψ_i|`.
#[derive(Clone, Debug, PartialEq)]
pub struct LetterEnsemble {
    dim: usize,
    letters: Vec<Letter>,
}

impl LetterEnsemble {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let dim = letters
            .first()
            .map(|l| l.amplitudes.len())
            .ok_or_else(|| Error::Validation("ensemble has no letters".into()))?;
        if dim == 0 {
            return Err(Error::Validation("letter states must have dimension >= 1".into()));
        }
        let mut total = 0.0;
        for (i, letter) in letters.iter().enumerate() {
            if letter.amplitudes.len() != dim {
                return Err(Error::Dimension { expected: dim, found: letter.amplitudes.len() });
            }
            if !(letter.probability >= 0.0) {
                return Err(Error::Validation(format!("letter {i} has negative probability")));
            }
            let norm: f64 = letter.amplitudes.iter().map(|a| a.norm_sqr()).sum();
            if (norm - 1.0).abs() > ENSEMBLE_TOLERANCE {
                return Err(Error::Validation(format!("letter {i} has squared norm {norm}")));
            }
            total += letter.probability;
        }
        if (total - 1.0).abs() > ENSEMBLE_TOLERANCE {
            return Err(Error::Validation(format!("letter probabilities sum to {total}")));
        }
        Ok(LetterEnsemble { dim, letters })
    }

    /// Two equiprobable qubit letters `cos(θ/2)|0⟩ + sin(θ/2)|1⟩` and
    /// `sin(θ/2)|0⟩ + cos(θ/2)|1⟩`, whose overlap is `sin θ`.
    pub fn two_state(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        let letters = vec![
            Letter { amplitudes: vec![C64::new(c, 0.0), C64::new(s, 0.0)], probability: 0.5 },
            Letter { amplitudes: vec![C64::new(s, 0.0), C64::new(c, 0.0)], probability: 0.5 },
        ];
        LetterEnsemble { dim: 2, letters }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn density_matrix(&self) -> DMatrix<C64> {
        density_matrix(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: EnsembleRecord = serde_json::from_str(s)?;
        raw.try_into()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&EnsembleRecord::from(self))?)
    }
}

#[derive(Serialize, Deserialize)]
struct LetterRecord {
    amplitudes: Vec<[f64; 2]>,
    p: f64,
}

#[derive(Serialize, Deserialize)]
struct EnsembleRecord {
    letters: Vec<LetterRecord>,
}

impl TryFrom<EnsembleRecord> for LetterEnsemble {
    type Error = Error;

    fn try_from(raw: EnsembleRecord) -> Result<Self> {
        let letters = raw
            .letters
            .into_iter()
            .map(|l| Letter {
                amplitudes: l.amplitudes.iter().map(|[re, im]| C64::new(*re, *im)).collect(),
                probability: l.p,
            })
            .collect();
        LetterEnsemble::new(letters)
    }
}

impl From<&LetterEnsemble> for EnsembleRecord {
    fn from(e: &LetterEnsemble) -> Self {
        EnsembleRecord {
            letters: e
                .letters
                .iter()
                .map(|l| LetterRecord {
                    amplitudes: l.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
                    p: l.probability,
                })
                .collect(),
        }
    }
}

/// `Σ p_i |ψ_i⟩⟨ψ_i|`.
pub fn density_matrix(ensemble: &LetterEnsemble) -> DMatrix<C64> {
    let d = ensemble.dim;
    let mut rho = DMatrix::<C64>::zeros(d, d);
    for letter in &ensemble.letters {
        let psi = DVector::from_column_slice(&letter.amplitudes);
        rho += psi.clone() * psi.adjoint() * C64::new(letter.probability, 0.0);
    }
    rho
}

/// One eigenvalue with its unit eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: DVector<C64>,
}

/// Spectral decomposition of a density matrix, eigenvalues descending.
///
/// Each eigenvector is phased so its first non-negligible component is real
/// and positive. Eigenvalues within [`DEGENERACY_TOLERANCE`] of one another
/// are replaced by their common mean, and values below it are set to zero,
/// so that products over sequences tie exactly when they should.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition {
    pairs: Vec<EigenPair>,
}

impl EigenDecomposition {
    /// Decomposition of `diag(values)` in the standard basis. `values` must
    /// already be sorted descending.
    pub fn from_diagonal(values: &[f64]) -> Result<Self> {
        let d = values.len();
        let rho = DMatrix::from_diagonal(&DVector::from_iterator(d, values.iter().map(|&v| C64::new(v, 0.0))));
        diagonalize(&rho)
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[EigenPair] {
        &self.pairs
    }

    pub fn values(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.value).collect()
    }

    pub fn vector(&self, i: usize) -> &DVector<C64> {
        &self.pairs[i].vector
    }

    /// Unitary whose columns are the eigenvectors.
    pub fn basis_matrix(&self) -> DMatrix<C64> {
        let cols: Vec<_> = self.pairs.iter().map(|p| p.vector.clone()).collect();
        DMatrix::from_columns(&cols)
    }

    /// `Σ r_i |r_i⟩⟨r_i|`.
    pub fn reconstruct(&self) -> DMatrix<C64> {
        let d = self.dim();
        let mut rho = DMatrix::<C64>::zeros(d, d);
        for p in &self.pairs {
            rho += &p.vector * p.vector.adjoint() * C64::new(p.value, 0.0);
        }
        rho
    }

    /// Shannon entropy of the eigenvalue distribution, in bits.
    pub fn entropy(&self) -> f64 {
        shannon_entropy(&self.values())
    }
}

fn check_hermitian(rho: &DMatrix<C64>) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::Validation(format!("matrix is {}x{}, not square", rho.nrows(), rho.ncols())));
    }
    let n = rho.nrows();
    for i in 0..n {
        for j in i..n {
            let diff = (rho[(i, j)] - rho[(j, i)].conj()).norm();
            if diff > HERMITIAN_TOLERANCE {
                return Err(Error::Validation(format!("matrix is not Hermitian at ({i}, {j}): |Δ| = {diff:e}")));
            }
        }
    }
    Ok(())
}

/// Hermitian eigendecomposition, sorted by eigenvalue descending.
pub fn diagonalize(rho: &DMatrix<C64>) -> Result<EigenDecomposition> {
    check_hermitian(rho)?;
    let eig = SymmetricEigen::new(rho.clone());
    let mut pairs: Vec<EigenPair> = eig
        .eigenvalues
        .iter()
        .zip(eig.eigenvectors.column_iter())
        .map(|(&value, col)| EigenPair { value, vector: fix_phase(col.into_owned()) })
        .collect();
    pairs.sort_by(|a, b| b.value.total_cmp(&a.value));
    snap_degenerate(&mut pairs);
    Ok(EigenDecomposition { pairs })
}

fn fix_phase(mut v: DVector<C64>) -> DVector<C64> {
    let norm = v.norm();
    if norm > 0.0 {
        v /= C64::new(norm, 0.0);
    }
    if let Some(lead) = v.iter().find(|a| a.norm() > 1e-12).copied() {
        let phase = lead / lead.norm();
        v /= phase;
    }
    v
}

fn snap_degenerate(pairs: &mut [EigenPair]) {
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && (pairs[start].value - pairs[end].value).abs() <= DEGENERACY_TOLERANCE {
            end += 1;
        }
        let mean = pairs[start..end].iter().map(|p| p.value).sum::<f64>() / (end - start) as f64;
        let mean = if mean.abs() <= DEGENERACY_TOLERANCE { 0.0 } else { mean };
        for p in &mut pairs[start..end] {
            p.value = mean;
        }
        start = end;
    }
}

/// `−Σ p log₂ p` with `0 log 0 = 0`.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    let h: f64 = probs.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.log2()).sum();
    // -0.0 for a point mass
    h.max(0.0)
}

/// `−tr ρ log₂ ρ`, computed from the eigenvalues.
pub fn von_neumann_entropy(rho: &DMatrix<C64>) -> Result<f64> {
    Ok(diagonalize(rho)?.entropy())
}

/// Number of length-`n` sequences over `d` letters, or `None` on overflow.
pub fn sequence_count(d: usize, n: usize) -> Option<u128> {
    (d as u128).checked_pow(n as u32)
}

/// Fail unless `d^n` is within `cap`.
pub fn check_enumeration(d: usize, n: usize, cap: u64) -> Result<u64> {
    match sequence_count(d, n) {
        Some(count) if count <= cap as u128 => Ok(count as u64),
        Some(count) => Err(Error::Resource { requested: count, cap }),
        None => Err(Error::Resource { requested: u128::MAX, cap }),
    }
}

/// Letters of sequence `index`, first letter most significant.
pub fn sequence_letters(index: u64, d: usize, n: usize) -> Vec<usize> {
    let mut letters = vec![0; n];
    let mut rest = index;
    for slot in letters.iter_mut().rev() {
        *slot = (rest % d as u64) as usize;
        rest /= d as u64;
    }
    letters
}

/// Inverse of [`sequence_letters`].
pub fn sequence_index(letters: &[usize], d: usize) -> u64 {
    letters.iter().fold(0u64, |acc, &l| acc * d as u64 + l as u64)
}

/// Human-readable sequence label: `+`/`-` for qubits, 1-based digits otherwise.
pub fn sequence_label(letters: &[usize], d: usize) -> String {
    if d == 2 {
        letters.iter().map(|&l| if l == 0 { '+' } else { '-' }).collect()
    } else if d <= 9 {
        letters.iter().map(|&l| char::from(b'1' + l as u8)).collect()
    } else {
        letters.iter().map(|l| (l + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Inverse of [`sequence_label`]. Accepts `−` (U+2212) as well as `-`.
pub fn parse_sequence_label(label: &str, d: usize) -> Result<Vec<usize>> {
    let bad = || Error::Validation(format!("invalid sequence label {label:?} for dimension {d}"));
    if d == 2 {
        label
            .chars()
            .map(|c| match c {
                '+' => Ok(0),
                '-' | '−' => Ok(1),
                _ => Err(bad()),
            })
            .collect()
    } else if d <= 9 {
        label
            .chars()
            .map(|c| c.to_digit(10).filter(|&x| x >= 1 && (x as usize) <= d).map(|x| x as usize - 1).ok_or_else(bad))
            .collect()
    } else {
        label
            .split(',')
            .map(|t| t.parse::<usize>().ok().filter(|&x| x >= 1 && x <= d).map(|x| x - 1).ok_or_else(bad))
            .collect()
    }
}

/// Probability of an eigenbasis sequence.
///
/// The product is accumulated letter-class by letter-class, so any two
/// sequences that are permutations of each other get bit-identical values.
pub fn sequence_probability(eigenvalues: &[f64], letters: &[usize]) -> f64 {
    let mut counts = vec![0usize; eigenvalues.len()];
    for &l in letters {
        counts[l] += 1;
    }
    let mut p = 1.0;
    for (k, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            p *= eigenvalues[k];
        }
    }
    p
}

/// An eigenbasis sequence with its rank in the probability ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct RankedSequence {
    /// 1-based.
    pub rank: usize,
    /// Base-`d` index; see [`sequence_letters`].
    pub index: u64,
    pub probability: f64,
}

/// All `d^n` eigenbasis sequences, most probable first.
///
/// Ties are broken lexicographically on the letter sequence (eigenvector 1
/// before eigenvector 2).
pub fn ranked_sequences(eig: &EigenDecomposition, n: usize, cap: u64) -> Result<Vec<RankedSequence>> {
    if n == 0 {
        return Err(Error::Domain("sequence length must be >= 1".into()));
    }
    let d = eig.dim();
    let count = check_enumeration(d, n, cap)?;
    let values = eig.values();
    let mut seqs: Vec<(u64, f64)> =
        (0..count).map(|idx| (idx, sequence_probability(&values, &sequence_letters(idx, d, n)))).collect();
    seqs.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(seqs
        .into_iter()
        .enumerate()
        .map(|(i, (index, probability))| RankedSequence { rank: i + 1, index, probability })
        .collect())
}

/// `(|0⟩ + |1⟩)/√2` and `(|0⟩ − |1⟩)/√2`.
pub fn plus_minus_basis() -> [DVector<C64>; 2] {
    let r = C64::new(FRAC_1_SQRT_2, 0.0);
    [DVector::from_vec(vec![r, r]), DVector::from_vec(vec![r, -r])]
}
