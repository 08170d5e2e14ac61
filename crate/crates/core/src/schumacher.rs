//! Finite-n typical-subspace baseline.
//!
//! A sequence of eigenbasis letters is ε-typical when its empirical
//! information rate `−(1/n) log₂ P` lies within ε of the letter entropy.
//! Projecting onto the span of typical sequences succeeds with probability
//! equal to their total weight, which is the fidelity this fixed-length
//! scheme achieves at finite n.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::source::{check_enumeration, sequence_letters, EigenDecomposition};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TypicalSet {
    pub n: usize,
    pub epsilon: f64,
    /// Letter entropy the members are measured against.
    pub entropy: f64,
    /// Member sequence indices, ascending.
    pub members: Vec<u64>,
    pub total_probability: f64,
    pub dimension: usize,
}

/// `−Σ log₂ r` over the letters, summed per letter class.
fn information_content(log_values: &[f64], letters: &[usize]) -> f64 {
    let mut counts = vec![0usize; log_values.len()];
    for &l in letters {
        counts[l] += 1;
    }
    counts.iter().zip(log_values).filter(|(c, _)| **c > 0).map(|(&c, &lv)| -(c as f64) * lv).sum()
}

/// Exact ε-typical set by enumerating all `d^n` sequences.
pub fn typical_set(eig: &EigenDecomposition, n: usize, epsilon: f64, cap: u64) -> Result<TypicalSet> {
    if n == 0 {
        return Err(Error::Domain("sequence length must be >= 1".into()));
    }
    if !(epsilon > 0.0) {
        return Err(Error::Domain(format!("epsilon must be positive, got {epsilon}")));
    }
    let d = eig.dim();
    let count = check_enumeration(d, n, cap)?;
    let values = eig.values();
    let log_values: Vec<f64> = values.iter().map(|v| v.log2()).collect();
    let entropy = eig.entropy();

    let mut members = Vec::new();
    let mut total_probability = 0.0;
    for idx in 0..count {
        let letters = sequence_letters(idx, d, n);
        let info = information_content(&log_values, &letters);
        if (info / n as f64 - entropy).abs() <= epsilon {
            members.push(idx);
            total_probability += (-info).exp2();
        }
    }
    let dimension = members.len();
    Ok(TypicalSet { n, epsilon, entropy, members, total_probability: total_probability.min(1.0), dimension })
}

/// Probability that projecting onto the typical subspace succeeds.
pub fn projection_fidelity(ts: &TypicalSet) -> f64 {
    ts.total_probability
}

/// `log₂(dimension) / n` qubits per letter.
pub fn schumacher_rate(ts: &TypicalSet) -> Result<f64> {
    if ts.dimension == 0 {
        return Err(Error::Domain(format!("typical set at n={}, ε={} is empty", ts.n, ts.epsilon)));
    }
    Ok((ts.dimension as f64).log2() / ts.n as f64)
}
