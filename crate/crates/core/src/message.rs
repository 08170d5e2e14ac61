//! Dense n-letter messages in the first-quantized letter basis.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::source::{sequence_count, EigenDecomposition};

/// Largest message dimension `d^n` that is materialized densely.
pub const MAX_MESSAGE_DIM: u128 = 1 << 24;

/// A pure state of `n` letters, each a `d`-level system.
///
/// Amplitudes are indexed base `d` with the first letter most significant,
/// matching [`crate::source::sequence_letters`].
#[derive(Clone, Debug, PartialEq)]
pub struct LetterState {
    dim: usize,
    n: usize,
    amplitudes: Vec<C64>,
}

fn checked_len(dim: usize, n: usize) -> Result<usize> {
    match sequence_count(dim, n) {
        Some(len) if len <= MAX_MESSAGE_DIM => Ok(len as usize),
        Some(len) => Err(Error::Resource { requested: len, cap: MAX_MESSAGE_DIM as u64 }),
        None => Err(Error::Resource { requested: u128::MAX, cap: MAX_MESSAGE_DIM as u64 }),
    }
}

impl LetterState {
    pub fn new(dim: usize, n: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if dim == 0 || n == 0 {
            return Err(Error::Domain("letter dimension and message length must be >= 1".into()));
        }
        let len = checked_len(dim, n)?;
        if amplitudes.len() != len {
            return Err(Error::Dimension { expected: len, found: amplitudes.len() });
        }
        Ok(LetterState { dim, n, amplitudes })
    }

    /// Computational basis state for the given letter sequence.
    pub fn basis(dim: usize, letters: &[usize]) -> Result<Self> {
        let len = checked_len(dim, letters.len())?;
        let mut amplitudes = vec![C64::default(); len];
        if let Some(&bad) = letters.iter().find(|&&l| l >= dim) {
            return Err(Error::Domain(format!("letter {bad} out of range for dimension {dim}")));
        }
        amplitudes[crate::source::sequence_index(letters, dim) as usize] = C64::new(1.0, 0.0);
        LetterState::new(dim, letters.len(), amplitudes)
    }

    /// Tensor product of single-letter states.
    pub fn product(letters: &[Vec<C64>]) -> Result<Self> {
        let dim = letters.first().map(Vec::len).ok_or_else(|| Error::Domain("empty message".into()))?;
        let mut amplitudes = vec![C64::new(1.0, 0.0)];
        for letter in letters {
            if letter.len() != dim {
                return Err(Error::Dimension { expected: dim, found: letter.len() });
            }
            amplitudes = amplitudes.iter().flat_map(|a| letter.iter().map(move |b| a * b)).collect();
        }
        LetterState::new(dim, letters.len(), amplitudes)
    }

    /// `Σ_s c_s |r_{s_1}⟩…|r_{s_n}⟩` for coefficients over eigenbasis sequences.
    pub fn from_eigen_coefficients(eig: &EigenDecomposition, n: usize, coefficients: Vec<C64>) -> Result<Self> {
        let mut state = LetterState::new(eig.dim(), n, coefficients)?;
        state.apply_to_each_letter(&eig.basis_matrix());
        Ok(state)
    }

    /// Coefficients `⟨r_s|self⟩` over eigenbasis sequences, same index order.
    pub fn eigen_coefficients(&self, eig: &EigenDecomposition) -> Result<Vec<C64>> {
        if eig.dim() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: eig.dim() });
        }
        let mut copy = self.clone();
        copy.apply_to_each_letter(&eig.basis_matrix().adjoint());
        Ok(copy.amplitudes)
    }

    /// Normalized complex-Gaussian random state.
    pub fn random<R: Rng + ?Sized>(dim: usize, n: usize, rng: &mut R) -> Result<Self> {
        let len = checked_len(dim, n)?;
        let amplitudes =
            (0..len).map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
        LetterState::new(dim, n, amplitudes)?.normalized()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(mut self) -> Result<Self> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::Domain("cannot normalize the zero message".into()));
        }
        self.amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(self)
    }

    pub fn inner_product(&self, other: &LetterState) -> Result<C64> {
        if self.dim != other.dim || self.n != other.n {
            return Err(Error::Dimension { expected: self.amplitudes.len(), found: other.amplitudes.len() });
        }
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
    }

    /// `|⟨a|b⟩|²/(‖a‖²‖b‖²)`.
    pub fn fidelity(&self, other: &LetterState) -> Result<f64> {
        let ip = self.inner_product(other)?;
        Ok(ip.norm_sqr() / (self.norm_sqr() * other.norm_sqr()))
    }

    /// Apply the same `d×d` matrix to every letter.
    fn apply_to_each_letter(&mut self, m: &DMatrix<C64>) {
        let d = self.dim;
        let mut scratch = vec![C64::default(); d];
        let mut stride = self.amplitudes.len() / d;
        for _ in 0..self.n {
            let block = stride * d;
            for base in (0..self.amplitudes.len()).step_by(block) {
                for inner in 0..stride {
                    for (j, s) in scratch.iter_mut().enumerate() {
                        *s = (0..d).map(|l| m[(j, l)] * self.amplitudes[base + l * stride + inner]).sum();
                    }
                    for (j, s) in scratch.iter().enumerate() {
                        self.amplitudes[base + j * stride + inner] = *s;
                    }
                }
            }
            stride /= d;
        }
    }
}
