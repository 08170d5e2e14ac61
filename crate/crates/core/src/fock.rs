//! Sparse states over photon-number Fock kets with at most one excitation per
//! frequency mode.
//!
//! Every mode holds either nothing, one horizontally polarized photon or one
//! vertically polarized photon, so a ket over `M` modes is a string over the
//! three-letter alphabet `{., H, V}`. Kets are packed two bits per mode into a
//! `u128`, which caps a single computation at [`MAX_MODES`] modes. States store
//! only their nonzero amplitudes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of modes a [`FockKet`] can address.
pub const MAX_MODES: usize = 64;

/// Amplitudes with modulus below this are dropped from a [`FockState`].
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// Tolerance on `Σ|a|² = 1` for states that promise normalization.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Content of a single frequency mode.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModeOccupation {
    Vacuum,
    H,
    V,
}

impl ModeOccupation {
    fn bits(self) -> u128 {
        match self {
            ModeOccupation::Vacuum => 0b00,
            ModeOccupation::H => 0b01,
            ModeOccupation::V => 0b10,
        }
    }

    fn from_bits(bits: u128) -> Self {
        match bits & 0b11 {
            0b00 => ModeOccupation::Vacuum,
            0b01 => ModeOccupation::H,
            0b10 => ModeOccupation::V,
            _ => unreachable!("packed ket holds an invalid occupation"),
        }
    }

    pub fn is_occupied(self) -> bool {
        self != ModeOccupation::Vacuum
    }

    /// One-character label: `.` for vacuum, `H` or `V` for a photon.
    pub fn symbol(self) -> char {
        match self {
            ModeOccupation::Vacuum => '.',
            ModeOccupation::H => 'H',
            ModeOccupation::V => 'V',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '.' | '0' => Some(ModeOccupation::Vacuum),
            'H' | 'h' => Some(ModeOccupation::H),
            'V' | 'v' => Some(ModeOccupation::V),
            _ => None,
        }
    }
}

/// A definite occupation pattern over an ordered set of modes.
///
/// Mode `0` is the lowest frequency. Distinct kets are orthonormal.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct FockKet {
    packed: u128,
    modes: u8,
}

impl FockKet {
    pub fn vacuum(modes: usize) -> Result<Self> {
        if modes > MAX_MODES {
            return Err(Error::Capacity { available: MAX_MODES, required: modes });
        }
        Ok(FockKet { packed: 0, modes: modes as u8 })
    }

    pub fn from_occupations(occupations: &[ModeOccupation]) -> Result<Self> {
        let mut ket = FockKet::vacuum(occupations.len())?;
        for (i, &occ) in occupations.iter().enumerate() {
            ket.packed |= occ.bits() << (2 * i);
        }
        Ok(ket)
    }

    /// Parse a string such as `"HV."` (mode 1 first).
    pub fn parse(s: &str) -> Result<Self> {
        let occupations = s
            .chars()
            .map(|c| {
                ModeOccupation::from_symbol(c)
                    .ok_or_else(|| Error::Validation(format!("invalid occupation symbol {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FockKet::from_occupations(&occupations)
    }

    pub fn mode_count(&self) -> usize {
        self.modes as usize
    }

    /// Occupation of `mode` (zero-based). Panics if `mode` is out of range.
    pub fn get(&self, mode: usize) -> ModeOccupation {
        assert!(mode < self.mode_count(), "mode {mode} out of range for {} modes", self.modes);
        ModeOccupation::from_bits(self.packed >> (2 * mode))
    }

    /// Copy of this ket with `mode` set to `occ`.
    pub fn with(&self, mode: usize, occ: ModeOccupation) -> Self {
        assert!(mode < self.mode_count(), "mode {mode} out of range for {} modes", self.modes);
        let cleared = self.packed & !(0b11 << (2 * mode));
        FockKet { packed: cleared | (occ.bits() << (2 * mode)), modes: self.modes }
    }

    pub fn occupations(&self) -> impl Iterator<Item = ModeOccupation> + '_ {
        (0..self.mode_count()).map(move |i| self.get(i))
    }

    /// Number of occupied modes.
    pub fn photon_number(&self) -> usize {
        const LOW_BITS: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5555;
        ((self.packed | (self.packed >> 1)) & LOW_BITS).count_ones() as usize
    }

    /// `true` if the occupied modes form an initial segment of the mode order.
    pub fn is_prefix_occupied(&self) -> bool {
        let n = self.photon_number();
        (0..n).all(|i| self.get(i).is_occupied())
    }

    /// Modes of `self` followed by modes of `other`.
    pub fn concat(&self, other: &FockKet) -> Result<Self> {
        let modes = self.mode_count() + other.mode_count();
        if modes > MAX_MODES {
            return Err(Error::Capacity { available: MAX_MODES, required: modes });
        }
        let shifted = other.packed.checked_shl(2 * self.modes as u32).unwrap_or(0);
        Ok(FockKet { packed: self.packed | shifted, modes: modes as u8 })
    }

    /// This ket with `mode` deleted; later modes shift down by one.
    pub fn without_mode(&self, mode: usize) -> Self {
        assert!(mode < self.mode_count(), "mode {mode} out of range for {} modes", self.modes);
        let low_mask = (1u128 << (2 * mode)) - 1;
        let low = self.packed & low_mask;
        let high = self.packed.checked_shr(2 * (mode as u32 + 1)).unwrap_or(0) << (2 * mode);
        FockKet { packed: low | high, modes: self.modes - 1 }
    }
}

impl Ord for FockKet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.modes.cmp(&other.modes).then_with(|| self.occupations().cmp(other.occupations()))
    }
}

impl PartialOrd for FockKet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FockKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for occ in self.occupations() {
            write!(f, "{}", occ.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{self}⟩")
    }
}

/// Sparse complex superposition of [`FockKet`]s sharing one mode count.
#[derive(Clone, PartialEq)]
pub struct FockState {
    modes: usize,
    terms: BTreeMap<FockKet, C64>,
}

impl FockState {
    pub fn vacuum(modes: usize) -> Result<Self> {
        Ok(FockState::basis(FockKet::vacuum(modes)?))
    }

    pub fn basis(ket: FockKet) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ket, C64::new(1.0, 0.0));
        FockState { modes: ket.mode_count(), terms }
    }

    /// Collect terms, summing repeated kets and pruning negligible amplitudes.
    /// The result is not normalized; see [`FockState::normalized`].
    pub fn from_terms<I>(modes: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FockKet, C64)>,
    {
        if modes > MAX_MODES {
            return Err(Error::Capacity { available: MAX_MODES, required: modes });
        }
        let mut map: BTreeMap<FockKet, C64> = BTreeMap::new();
        for (ket, amp) in terms {
            if ket.mode_count() != modes {
                return Err(Error::Dimension { expected: modes, found: ket.mode_count() });
            }
            *map.entry(ket).or_default() += amp;
        }
        map.retain(|_, a| a.norm() >= PRUNE_THRESHOLD);
        Ok(FockState { modes, terms: map })
    }

    /// Parse `(ket string, amplitude)` pairs, e.g. `[("H.", 1.0), ("VV", 1.0)]`.
    pub fn from_labels<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, C64)>,
    {
        let kets = terms
            .into_iter()
            .map(|(s, a)| Ok((FockKet::parse(s)?, a)))
            .collect::<Result<Vec<_>>>()?;
        let modes = kets
            .first()
            .map(|(k, _)| k.mode_count())
            .ok_or_else(|| Error::Validation("empty term list".into()))?;
        FockState::from_terms(modes, kets)
    }

    /// Rescale to unit norm. Fails on the zero vector.
    pub fn normalized(mut self) -> Result<Self> {
        let norm = self.norm();
        if norm < PRUNE_THRESHOLD {
            return Err(Error::Domain("cannot normalize the zero state".into()));
        }
        for a in self.terms.values_mut() {
            *a /= norm;
        }
        Ok(self)
    }

    pub fn mode_count(&self) -> usize {
        self.modes
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockKet, &C64)> {
        self.terms.iter()
    }

    pub fn amplitude(&self, ket: &FockKet) -> C64 {
        self.terms.get(ket).copied().unwrap_or_default()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOLERANCE
    }

    fn check_modes(&self, other: &FockState) -> Result<()> {
        if self.modes != other.modes {
            return Err(Error::Dimension { expected: self.modes, found: other.modes });
        }
        Ok(())
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner_product(&self, other: &FockState) -> Result<C64> {
        self.check_modes(other)?;
        let (small, large, swap) =
            if self.len() <= other.len() { (self, other, false) } else { (other, self, true) };
        let mut acc = C64::default();
        for (ket, a) in &small.terms {
            if let Some(b) = large.terms.get(ket) {
                acc += a.conj() * b;
            }
        }
        Ok(if swap { acc.conj() } else { acc })
    }

    /// `|⟨a|b⟩|² / (‖a‖²‖b‖²)`: overlap with global phase quotiented out.
    pub fn fidelity(&self, other: &FockState) -> Result<f64> {
        let ip = self.inner_product(other)?;
        let denom = self.norm_sqr() * other.norm_sqr();
        if denom == 0.0 {
            return Err(Error::Domain("fidelity with the zero state".into()));
        }
        Ok(ip.norm_sqr() / denom)
    }

    /// `self ⊗ other`, with `other`'s modes appended after `self`'s.
    pub fn tensor(&self, other: &FockState) -> Result<FockState> {
        let modes = self.modes + other.modes;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (k1, a1) in &self.terms {
            for (k2, a2) in &other.terms {
                terms.push((k1.concat(k2)?, a1 * a2));
            }
        }
        FockState::from_terms(modes, terms)
    }

    /// Linear extension of a ket-level rule.
    ///
    /// The rule is called once per stored ket; every image must share a mode
    /// count. If the rule maps an orthonormal set to an orthonormal set the
    /// result has the norm of `self`.
    pub fn apply_basis_map<F>(&self, mut rule: F) -> Result<FockState>
    where
        F: FnMut(&FockKet) -> Result<FockState>,
    {
        let mut out_modes: Option<usize> = None;
        let mut terms = Vec::new();
        for (ket, amp) in &self.terms {
            let image = rule(ket)?;
            match out_modes {
                None => out_modes = Some(image.modes),
                Some(m) if m != image.modes => {
                    return Err(Error::Dimension { expected: m, found: image.modes })
                }
                _ => {}
            }
            terms.extend(image.terms.into_iter().map(|(k, a)| (k, amp * a)));
        }
        FockState::from_terms(out_modes.unwrap_or(self.modes), terms)
    }

    /// Multiply every amplitude by `factor`.
    pub fn scaled(&self, factor: C64) -> FockState {
        let terms = self.terms.iter().map(|(k, a)| (*k, a * factor));
        FockState::from_terms(self.modes, terms).expect("mode count unchanged")
    }

    /// `self + other` (unnormalized).
    pub fn sum(&self, other: &FockState) -> Result<FockState> {
        self.check_modes(other)?;
        let terms = self.terms.iter().chain(other.terms.iter()).map(|(k, a)| (*k, *a));
        FockState::from_terms(self.modes, terms)
    }

    /// Terms whose `mode` holds `occ`, with that mode removed. Unnormalized.
    pub fn select_mode(&self, mode: usize, occ: ModeOccupation) -> Result<FockState> {
        if mode >= self.modes {
            return Err(Error::Domain(format!("mode {mode} out of range for {} modes", self.modes)));
        }
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.get(mode) == occ)
            .map(|(k, a)| (k.without_mode(mode), *a));
        FockState::from_terms(self.modes - 1, terms)
    }

    /// `Σ |a|² · photons(ket)`, normalized by the state norm.
    pub fn expected_photon_number(&self) -> f64 {
        let weighted: f64 = self.terms.iter().map(|(k, a)| a.norm_sqr() * k.photon_number() as f64).sum();
        weighted / self.norm_sqr()
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:.6}{:+.6}i){:?}", a.re, a.im, k)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    occupations: String,
    re: f64,
    im: f64,
}

impl Serialize for FockState {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(k, a)| TermRecord { occupations: k.to_string(), re: a.re, im: a.im })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FockState {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let terms = records.iter().map(|r| (r.occupations.as_str(), C64::new(r.re, r.im)));
        FockState::from_labels(terms).map_err(D::Error::custom)
    }
}

/// Per-mode photon energies in units of ħ (so ħ = 1).
#[derive(Clone, Debug, PartialEq)]
pub struct ModeFrequencies(Vec<f64>);

impl ModeFrequencies {
    pub fn new(omegas: Vec<f64>) -> Result<Self> {
        if let Some(bad) = omegas.iter().find(|w| !(**w > 0.0) || !w.is_finite()) {
            return Err(Error::Validation(format!("mode frequency must be positive, got {bad}")));
        }
        Ok(ModeFrequencies(omegas))
    }

    /// `modes` copies of ω = 1.
    pub fn uniform(modes: usize) -> Self {
        ModeFrequencies(vec![1.0; modes])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}
