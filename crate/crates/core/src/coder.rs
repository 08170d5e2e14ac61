//! Rank-ordered 1-1 codebooks and the isometric letter-to-Fock encoding.
//!
//! Eigenbasis sequences are sorted by probability and the `i`-th most likely
//! one is written with `⌈log₂(i/2 + 1)⌉` photons, one per mode, starting at the
//! lowest-frequency mode. Within one length the words are handed out in
//! binary counting order. The map is a bijection between orthonormal sets,
//! so its linear extension is an isometry and decoding is exact once the
//! receiver knows the message length out of band.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{FockKet, FockState, ModeOccupation, NORM_TOLERANCE};
use crate::message::LetterState;
use crate::source::{
    check_enumeration, parse_sequence_label, ranked_sequences, sequence_index, sequence_label, sequence_letters,
    sequence_probability, EigenDecomposition, DEFAULT_ENUMERATION_CAP,
};

/// Photon polarization used as a code symbol.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    H,
    V,
}

impl Symbol {
    pub fn occupation(self) -> ModeOccupation {
        match self {
            Symbol::H => ModeOccupation::H,
            Symbol::V => ModeOccupation::V,
        }
    }
}

/// Which polarization plays the role of binary `0` when counting codewords.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymbolOrder {
    #[default]
    VFirst,
    HFirst,
}

impl SymbolOrder {
    fn symbol(self, bit: bool) -> Symbol {
        match (self, bit) {
            (SymbolOrder::VFirst, false) | (SymbolOrder::HFirst, true) => Symbol::V,
            (SymbolOrder::VFirst, true) | (SymbolOrder::HFirst, false) => Symbol::H,
        }
    }
}

impl fmt::Display for SymbolOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolOrder::VFirst => "v-first",
            SymbolOrder::HFirst => "h-first",
        })
    }
}

impl FromStr for SymbolOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v-first" => Ok(SymbolOrder::VFirst),
            "h-first" => Ok(SymbolOrder::HFirst),
            _ => Err(Error::Config(format!("unknown symbol order {s:?} (expected v-first or h-first)"))),
        }
    }
}

/// A non-empty word over `{H, V}`; its length is its photon count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword(Vec<Symbol>);

impl Codeword {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Domain("codewords must be non-empty".into()));
        }
        Ok(Codeword(symbols))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                'H' => Ok(Symbol::H),
                'V' => Ok(Symbol::V),
                _ => Err(Error::Validation(format!("invalid codeword symbol {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Codeword::new(symbols)
    }

    /// The `position`-th word of length `len` in binary counting order.
    fn counting(position: usize, len: usize, order: SymbolOrder) -> Self {
        let symbols = (0..len).rev().map(|bit| order.symbol((position >> bit) & 1 == 1)).collect();
        Codeword(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Photons in modes `1..=len`, vacuum in the remaining modes.
    pub fn to_ket(&self, modes: usize) -> Result<FockKet> {
        if modes < self.len() {
            return Err(Error::Capacity { available: modes, required: self.len() });
        }
        let mut occ = vec![ModeOccupation::Vacuum; modes];
        for (slot, s) in occ.iter_mut().zip(&self.0) {
            *slot = s.occupation();
        }
        FockKet::from_occupations(&occ)
    }

    /// Read a codeword back from a prefix-occupied ket.
    pub fn from_ket(ket: &FockKet) -> Option<Self> {
        if !ket.is_prefix_occupied() {
            return None;
        }
        let symbols: Vec<Symbol> = ket
            .occupations()
            .take_while(|o| o.is_occupied())
            .map(|o| if o == ModeOccupation::H { Symbol::H } else { Symbol::V })
            .collect();
        Codeword::new(symbols).ok()
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Symbol::H { "H" } else { "V" })?;
        }
        Ok(())
    }
}

/// `⌈log₂(rank/2 + 1)⌉` for 1-based `rank`.
///
/// Equivalently the smallest `l` with `2^(l+1) ≥ rank + 2`: ranks 1–2 get one
/// photon, 3–6 two, 7–14 three, and so on.
pub fn codeword_length(rank: usize) -> Result<usize> {
    if rank == 0 {
        return Err(Error::Domain("ranks start at 1".into()));
    }
    let shifted = (rank as u128) + 2;
    Ok(shifted.next_power_of_two().trailing_zeros() as usize - 1)
}

/// First rank that receives a codeword of length `len`.
fn first_rank_of_length(len: usize) -> usize {
    (1usize << len) - 1
}

#[derive(Clone, Debug, PartialEq)]
pub struct CodebookEntry {
    pub rank: usize,
    /// Eigenbasis sequence index; see [`sequence_letters`].
    pub sequence: u64,
    pub codeword: Codeword,
    pub probability: f64,
}

/// Bijection from eigenbasis sequences of `n` letters to codewords.
#[derive(Clone, Debug)]
pub struct Codebook {
    n: usize,
    eig: EigenDecomposition,
    symbol_order: SymbolOrder,
    entries: Vec<CodebookEntry>,
    by_sequence: Vec<usize>,
    by_codeword: HashMap<Codeword, usize>,
}

impl Codebook {
    /// Canonical codebook with the default enumeration cap.
    pub fn build(eig: &EigenDecomposition, n: usize, symbol_order: SymbolOrder) -> Result<Self> {
        Codebook::build_with_cap(eig, n, symbol_order, DEFAULT_ENUMERATION_CAP)
    }

    pub fn build_with_cap(eig: &EigenDecomposition, n: usize, symbol_order: SymbolOrder, cap: u64) -> Result<Self> {
        let ranked = ranked_sequences(eig, n, cap)?;
        let entries = ranked
            .into_iter()
            .map(|r| {
                let len = codeword_length(r.rank)?;
                let codeword = Codeword::counting(r.rank - first_rank_of_length(len), len, symbol_order);
                Ok(CodebookEntry { rank: r.rank, sequence: r.index, codeword, probability: r.probability })
            })
            .collect::<Result<Vec<_>>>()?;
        Codebook::assemble(eig, n, symbol_order, entries)
    }

    /// Codebook with an explicit rank order and codeword choice.
    ///
    /// `assignments` lists `(letters, codeword)` from rank 1 down. It must
    /// cover every sequence once, keep probabilities non-increasing, use the
    /// standard length for each rank and never repeat a codeword.
    pub fn from_assignments(
        eig: &EigenDecomposition,
        n: usize,
        symbol_order: SymbolOrder,
        assignments: Vec<(Vec<usize>, Codeword)>,
    ) -> Result<Self> {
        let d = eig.dim();
        let count = check_enumeration(d, n, DEFAULT_ENUMERATION_CAP)?;
        if assignments.len() as u64 != count {
            return Err(Error::Validation(format!("{} assignments for {count} sequences", assignments.len())));
        }
        let values = eig.values();
        let mut entries = Vec::with_capacity(assignments.len());
        for (i, (letters, codeword)) in assignments.into_iter().enumerate() {
            let rank = i + 1;
            if letters.len() != n || letters.iter().any(|&l| l >= d) {
                return Err(Error::Validation(format!("rank {rank}: invalid sequence {letters:?}")));
            }
            if codeword.len() != codeword_length(rank)? {
                return Err(Error::Validation(format!(
                    "rank {rank}: codeword {codeword} has length {}, expected {}",
                    codeword.len(),
                    codeword_length(rank)?
                )));
            }
            let probability = sequence_probability(&values, &letters);
            entries.push(CodebookEntry { rank, sequence: sequence_index(&letters, d), codeword, probability });
        }
        if let Some(w) = entries.windows(2).find(|w| w[1].probability > w[0].probability) {
            return Err(Error::Validation(format!("rank {} is more probable than rank {}", w[1].rank, w[0].rank)));
        }
        Codebook::assemble(eig, n, symbol_order, entries)
    }

    /// The three-letter qubit table with `--+ → HHH` and `--- → HHV` in the
    /// last two ranks; ranks 1–6 agree with the V-first canonical book.
    pub fn three_letter_table(eig: &EigenDecomposition) -> Result<Self> {
        let rows = [
            ("+++", "V"),
            ("++-", "H"),
            ("+-+", "VV"),
            ("-++", "VH"),
            ("+--", "HV"),
            ("-+-", "HH"),
            ("--+", "HHH"),
            ("---", "HHV"),
        ];
        Codebook::from_labels(eig, 3, SymbolOrder::VFirst, &rows)
    }

    /// Two-letter qubit book realized by the two-mode photonic network:
    /// the first letter sets the polarization of mode 1 (`+ → H`, `- → V`)
    /// and the second letter leaves a V photon in mode 2 when it is `-` and
    /// nothing when it is `+`.
    pub fn two_mode_network(eig: &EigenDecomposition) -> Result<Self> {
        let rows = [("++", "H"), ("-+", "V"), ("+-", "HV"), ("--", "VV")];
        Codebook::from_labels(eig, 2, SymbolOrder::HFirst, &rows)
    }

    fn from_labels(eig: &EigenDecomposition, n: usize, order: SymbolOrder, rows: &[(&str, &str)]) -> Result<Self> {
        if eig.dim() != 2 {
            return Err(Error::Dimension { expected: 2, found: eig.dim() });
        }
        let assignments = rows
            .iter()
            .map(|(seq, cw)| Ok((parse_sequence_label(seq, 2)?, Codeword::parse(cw)?)))
            .collect::<Result<Vec<_>>>()?;
        Codebook::from_assignments(eig, n, order, assignments)
    }

    fn assemble(
        eig: &EigenDecomposition,
        n: usize,
        symbol_order: SymbolOrder,
        entries: Vec<CodebookEntry>,
    ) -> Result<Self> {
        let mut by_sequence = vec![usize::MAX; entries.len()];
        let mut by_codeword = HashMap::with_capacity(entries.len());
        for (pos, e) in entries.iter().enumerate() {
            let slot = by_sequence
                .get_mut(e.sequence as usize)
                .ok_or_else(|| Error::Validation(format!("sequence index {} out of range", e.sequence)))?;
            if *slot != usize::MAX {
                return Err(Error::Validation(format!("sequence index {} assigned twice", e.sequence)));
            }
            *slot = pos;
            if by_codeword.insert(e.codeword.clone(), pos).is_some() {
                return Err(Error::Validation(format!("codeword {} assigned twice", e.codeword)));
            }
        }
        Ok(Codebook { n, eig: eig.clone(), symbol_order, entries, by_sequence, by_codeword })
    }

    /// Letters per message.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.eig.dim()
    }

    pub fn symbol_order(&self) -> SymbolOrder {
        self.symbol_order
    }

    pub fn eigen(&self) -> &EigenDecomposition {
        &self.eig
    }

    /// Entries in rank order.
    pub fn entries(&self) -> &[CodebookEntry] {
        &self.entries
    }

    pub fn entry_for_sequence(&self, sequence: u64) -> Option<&CodebookEntry> {
        self.by_sequence.get(sequence as usize).map(|&pos| &self.entries[pos])
    }

    pub fn entry_for_codeword(&self, codeword: &Codeword) -> Option<&CodebookEntry> {
        self.by_codeword.get(codeword).map(|&pos| &self.entries[pos])
    }

    pub fn max_codeword_length(&self) -> usize {
        self.entries.last().map_or(0, |e| e.codeword.len())
    }

    /// Default mode register size: enough for `n` letters and the longest word.
    pub fn modes(&self) -> usize {
        self.n.max(self.max_codeword_length())
    }

    /// Expected photon number `Σ p_i l_i`.
    pub fn average_length(&self) -> f64 {
        self.entries.iter().map(|e| e.probability * e.codeword.len() as f64).sum()
    }

    fn check_message(&self, message: &LetterState) -> Result<()> {
        if message.dim() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), found: message.dim() });
        }
        if message.len() != self.n {
            return Err(Error::Dimension { expected: self.n, found: message.len() });
        }
        if (message.norm_sqr() - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Validation(format!("message has squared norm {}", message.norm_sqr())));
        }
        Ok(())
    }

    /// Encode into [`Codebook::modes`] modes.
    pub fn encode(&self, message: &LetterState) -> Result<FockState> {
        self.encode_with_modes(message, self.modes())
    }

    /// Encode a normalized letter-basis message into a register of `modes`
    /// modes: change every letter to the eigenbasis, then send each eigenbasis
    /// sequence to its codeword ket.
    pub fn encode_with_modes(&self, message: &LetterState, modes: usize) -> Result<FockState> {
        if modes < self.modes() {
            return Err(Error::Capacity { available: modes, required: self.modes() });
        }
        self.check_message(message)?;
        let coefficients = message.eigen_coefficients(&self.eig)?;
        let mut terms = Vec::new();
        for (seq, c) in coefficients.into_iter().enumerate() {
            if c == C64::default() {
                continue;
            }
            let entry = &self.entries[self.by_sequence[seq]];
            terms.push((entry.codeword.to_ket(modes)?, c));
        }
        FockState::from_terms(modes, terms)
    }

    /// Codeword ket of a single eigenbasis sequence.
    pub fn encode_sequence(&self, sequence: u64) -> Result<FockState> {
        let entry = self
            .entry_for_sequence(sequence)
            .ok_or_else(|| Error::Domain(format!("sequence index {sequence} out of range")))?;
        Ok(FockState::basis(entry.codeword.to_ket(self.modes())?))
    }

    /// Invert [`Codebook::encode`], given the total message length `l_t`.
    pub fn decode(&self, encoded: &FockState, l_t: usize) -> Result<LetterState> {
        if l_t != self.n {
            return Err(Error::SideInfoMismatch { expected: self.n, found: l_t });
        }
        let mut coefficients = vec![C64::default(); self.entries.len()];
        for (ket, amp) in encoded.terms() {
            let entry = Codeword::from_ket(ket)
                .and_then(|cw| self.entry_for_codeword(&cw))
                .ok_or_else(|| Error::Corruption { ket: ket.to_string() })?;
            coefficients[entry.sequence as usize] += amp;
        }
        LetterState::from_eigen_coefficients(&self.eig, self.n, coefficients)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&CodebookExport::from(self))?)
    }
}

/// Serializable view of a [`Codebook`], entries in rank order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CodebookExport {
    pub n: usize,
    pub symbol_order: SymbolOrder,
    pub entries: Vec<CodebookExportEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CodebookExportEntry {
    pub rank: usize,
    pub sequence: String,
    pub codeword: String,
    pub probability: f64,
}

impl From<&Codebook> for CodebookExport {
    fn from(book: &Codebook) -> Self {
        let d = book.dim();
        CodebookExport {
            n: book.n,
            symbol_order: book.symbol_order,
            entries: book
                .entries
                .iter()
                .map(|e| CodebookExportEntry {
                    rank: e.rank,
                    sequence: sequence_label(&sequence_letters(e.sequence, d, book.n), d),
                    codeword: e.codeword.to_string(),
                    probability: e.probability,
                })
                .collect(),
        }
    }
}

/// Which lower bounds the average length meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundFlags {
    pub landauer_n: bool,
    pub landauer_s: bool,
    pub cover: bool,
    pub prisco: bool,
}

impl BoundFlags {
    pub fn all(&self) -> bool {
        self.landauer_n && self.landauer_s && self.cover && self.prisco
    }
}

/// Entropy, length and lower-bound values for one `(source, n)` pair.
/// All quantities in bits.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub s_letter: f64,
    /// `n · s_letter`.
    pub s_total: f64,
    pub l_one_one: f64,
    /// `log₂ n`, the cost of sending the message length.
    pub side_info_bits: f64,
    /// `S_total − log₂ n`.
    pub bound_landauer_n: f64,
    /// `S_total − log₂ S_total`; `−∞` when `S_total = 0`.
    pub bound_landauer_s: f64,
    /// `S_total − log₂ n − 3`.
    pub bound_cover: f64,
    /// `S − log₂(S+1) − S log₂(1 + 1/S)`; `−∞` when `S_total = 0`.
    pub bound_prisco: f64,
    /// `S − log₂ S − S log₂(1 + 1/S)`, reported only when `S_total > 0`.
    pub bound_prisco_log_s: Option<f64>,
    pub satisfied: BoundFlags,
}

/// Evaluate every lower bound on the 1-1 average length and flag which ones
/// `l_one_one` meets.
pub fn compression_bounds(s_letter: f64, n: usize, l_one_one: f64) -> Result<BoundsReport> {
    if !(s_letter >= 0.0) {
        return Err(Error::Domain(format!("letter entropy must be >= 0, got {s_letter}")));
    }
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let s = n as f64 * s_letter;
    let log_n = (n as f64).log2();
    let (landauer_s, prisco, prisco_log_s) = if s > 0.0 {
        let tail = s * (1.0 + 1.0 / s).log2();
        (s - s.log2(), s - (s + 1.0).log2() - tail, Some(s - s.log2() - tail))
    } else {
        (f64::NEG_INFINITY, f64::NEG_INFINITY, None)
    };
    let report = BoundsReport {
        n,
        s_letter,
        s_total: s,
        l_one_one,
        side_info_bits: log_n,
        bound_landauer_n: s - log_n,
        bound_landauer_s: landauer_s,
        bound_cover: s - log_n - 3.0,
        bound_prisco: prisco,
        bound_prisco_log_s: prisco_log_s,
        satisfied: BoundFlags {
            landauer_n: l_one_one >= s - log_n,
            landauer_s: l_one_one >= landauer_s,
            cover: l_one_one >= s - log_n - 3.0,
            prisco: l_one_one >= prisco,
        },
    };
    Ok(report)
}
