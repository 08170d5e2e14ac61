//! Table and sweep generators behind the `fock-compress` binary.
//!
//! Every generator is a pure function of an [`ExperimentConfig`] and renders
//! to CSV or JSON deterministically: grid points may be evaluated on a worker
//! pool, but rows are always emitted in grid order and random inputs come
//! from per-point ChaCha streams derived from the seed.

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::circuit::{run_circuit, CircuitMode, CircuitState, EnvOutcome, TwoLetterInput};
use crate::coder::{compression_bounds, Codebook, SymbolOrder};
use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::message::LetterState;
use crate::schumacher::{projection_fidelity, schumacher_rate, typical_set};
use crate::source::{
    check_enumeration, diagonalize, sequence_label, sequence_letters, EigenDecomposition, LetterEnsemble,
    DEFAULT_ENUMERATION_CAP,
};
use crate::thermo::{energy_ratio_one_to_one, landauer_audit};

/// Embedded in every output header.
pub const SCHEMA_VERSION: &str = "v1";

/// Round-trip fidelity below `1 − ROUNDTRIP_TOLERANCE` is a failure.
pub const ROUNDTRIP_TOLERANCE: f64 = 1e-10;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Shared knobs for all generators. Empty lists mean "use the command's
/// default grid".
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub theta_degrees: Vec<f64>,
    pub n_values: Vec<usize>,
    pub epsilon: Option<f64>,
    pub symbol_order: SymbolOrder,
    pub format: OutputFormat,
    pub seed: u64,
    pub cap: u64,
    /// Random superpositions per grid point in the round-trip suite.
    pub samples: usize,
    /// Use the canonical counting rule for every rank in `table3`.
    pub canonical: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            theta_degrees: Vec::new(),
            n_values: Vec::new(),
            epsilon: None,
            symbol_order: SymbolOrder::VFirst,
            format: OutputFormat::Csv,
            seed: 2024,
            cap: DEFAULT_ENUMERATION_CAP,
            samples: 200,
            canonical: false,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.theta_degrees.iter().find(|t| !(**t > 0.0 && **t < 180.0)) {
            return Err(Error::Config(format!("theta must lie in (0, 180) degrees, got {t}")));
        }
        if self.n_values.contains(&0) {
            return Err(Error::Config("n must be >= 1".into()));
        }
        if let Some(e) = self.epsilon.filter(|e| !(*e > 0.0)) {
            return Err(Error::Config(format!("epsilon must be positive, got {e}")));
        }
        if self.cap == 0 {
            return Err(Error::Config("cap must be >= 1".into()));
        }
        Ok(())
    }

    fn thetas_or(&self, default: &[f64]) -> Vec<f64> {
        if self.theta_degrees.is_empty() {
            default.to_vec()
        } else {
            self.theta_degrees.clone()
        }
    }

    fn ns_or(&self, default: &[usize]) -> Vec<usize> {
        if self.n_values.is_empty() {
            default.to_vec()
        } else {
            self.n_values.clone()
        }
    }

    fn grid(&self, thetas: &[f64], ns: &[usize]) -> Vec<(f64, usize)> {
        thetas.iter().flat_map(|&t| ns.iter().map(move |&n| (t, n))).collect()
    }

    fn rng_for(&self, point: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(point as u64);
        rng
    }
}

/// Eigendecomposition of the two-letter source at `theta_deg` degrees.
pub fn source_at(theta_deg: f64) -> Result<EigenDecomposition> {
    diagonalize(&LetterEnsemble::two_state(theta_deg.to_radians()).density_matrix())
}

/// Rows plus header notes and a summary, ready to render.
#[derive(Clone, Debug)]
pub struct Table<T> {
    pub name: &'static str,
    pub rows: Vec<T>,
    pub notes: Vec<String>,
    pub summary: Vec<(String, Value)>,
    /// A property check in this table failed.
    pub failed: bool,
}

impl<T: Serialize> Table<T> {
    fn new(name: &'static str, rows: Vec<T>) -> Self {
        Table { name, rows, notes: Vec::new(), summary: Vec::new(), failed: false }
    }

    pub fn schema(&self) -> String {
        format!("fock-compress/{}/{}", self.name, SCHEMA_VERSION)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => {
                let mut out = format!("# schema: {}\n", self.schema());
                for note in &self.notes {
                    out.push_str(&format!("# warning: {note}\n"));
                }
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.rows {
                    w.serialize(row)?;
                }
                let body = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
                out.push_str(&String::from_utf8_lossy(&body));
                for (k, v) in &self.summary {
                    out.push_str(&format!("# {k} = {v}\n"));
                }
                Ok(out)
            }
            OutputFormat::Json => {
                let summary: serde_json::Map<String, Value> = self.summary.iter().cloned().collect();
                let doc = json!({
                    "schema": self.schema(),
                    "warnings": self.notes,
                    "rows": self.rows,
                    "summary": summary,
                });
                Ok(serde_json::to_string_pretty(&doc)? + "\n")
            }
        }
    }
}

// ---------------------------------------------------------------- table3

pub const TABLE3_COLUMNS: &str = "\
rank         1-based position in the probability ordering
sequence     eigenbasis letters ('+' = larger eigenvalue)
codeword     photon polarizations in modes 1..l
length       photon count l
probability  sequence probability
Footer: total_probability, average_length (bits = expected photons).";

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Table3Row {
    pub rank: usize,
    pub sequence: String,
    pub codeword: String,
    pub length: usize,
    pub probability: f64,
}

/// The three-letter codebook at θ = 45° (or the first `--theta`/`--n`).
///
/// With `n = 3` and qubit letters the published row order is used unless
/// `config.canonical` is set; otherwise the canonical counting rule.
pub fn table3(config: &ExperimentConfig) -> Result<Table<Table3Row>> {
    config.validate()?;
    let theta = config.thetas_or(&[45.0])[0];
    let n = config.ns_or(&[3])[0];
    let eig = source_at(theta)?;
    check_enumeration(2, n, config.cap)?;
    let book = if n == 3 && !config.canonical {
        Codebook::three_letter_table(&eig)?
    } else {
        Codebook::build_with_cap(&eig, n, config.symbol_order, config.cap)?
    };
    let rows: Vec<Table3Row> = book
        .entries()
        .iter()
        .map(|e| Table3Row {
            rank: e.rank,
            sequence: sequence_label(&sequence_letters(e.sequence, 2, n), 2),
            codeword: e.codeword.to_string(),
            length: e.codeword.len(),
            probability: e.probability,
        })
        .collect();
    let total: f64 = rows.iter().map(|r| r.probability).sum();
    let mut table = Table::new("table3", rows);
    table.summary = vec![
        ("theta_deg".into(), json!(theta)),
        ("n".into(), json!(n)),
        ("total_probability".into(), json!(total)),
        ("average_length".into(), json!(book.average_length())),
    ];
    Ok(table)
}

// ---------------------------------------------------------------- sweep

pub const SWEEP_COLUMNS: &str = "\
theta_deg            source angle; letter overlap is sin(theta)
n                    letters per message
s_letter             von Neumann entropy per letter (bits)
s_total              n * s_letter
l                    average 1-1 codeword length (photons)
side_info            log2 n, bits to send the total length
rate_with_side_info  (l + side_info) / n
bound_landauer_n     s_total - log2 n
bound_landauer_s     s_total - log2 s_total
bound_cover          s_total - log2 n - 3
bound_prisco         s_total - log2(s_total+1) - s_total log2(1 + 1/s_total)
energy_ratio         <H>_final / <H>_initial at uniform frequency
deficit              s_total - (l + side_info)
lossless             deficit <= 1e-9
*_ok                 l >= the corresponding bound
all_ok               every *_ok flag";

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SweepRow {
    pub theta_deg: f64,
    pub n: usize,
    pub s_letter: f64,
    pub s_total: f64,
    pub l: f64,
    pub side_info: f64,
    pub rate_with_side_info: f64,
    pub bound_landauer_n: f64,
    pub bound_landauer_s: f64,
    pub bound_cover: f64,
    pub bound_prisco: f64,
    pub energy_ratio: f64,
    pub deficit: f64,
    pub lossless: bool,
    pub landauer_n_ok: bool,
    pub landauer_s_ok: bool,
    pub cover_ok: bool,
    pub prisco_ok: bool,
    pub all_ok: bool,
}

fn sweep_point(theta: f64, n: usize, config: &ExperimentConfig) -> Result<SweepRow> {
    let eig = source_at(theta)?;
    let book = Codebook::build_with_cap(&eig, n, config.symbol_order, config.cap)?;
    let s_letter = eig.entropy();
    let l = book.average_length();
    let bounds = compression_bounds(s_letter, n, l)?;
    let energy = energy_ratio_one_to_one(&book)?;
    let audit = landauer_audit(bounds.s_total, l, bounds.side_info_bits)?;
    Ok(SweepRow {
        theta_deg: theta,
        n,
        s_letter,
        s_total: bounds.s_total,
        l,
        side_info: bounds.side_info_bits,
        rate_with_side_info: (l + bounds.side_info_bits) / n as f64,
        bound_landauer_n: bounds.bound_landauer_n,
        bound_landauer_s: bounds.bound_landauer_s,
        bound_cover: bounds.bound_cover,
        bound_prisco: bounds.bound_prisco,
        energy_ratio: energy.ratio,
        deficit: audit.deficit,
        lossless: audit.lossless_consistent,
        landauer_n_ok: bounds.satisfied.landauer_n,
        landauer_s_ok: bounds.satisfied.landauer_s,
        cover_ok: bounds.satisfied.cover,
        prisco_ok: bounds.satisfied.prisco,
        all_ok: bounds.satisfied.all(),
    })
}

fn default_sweep_thetas() -> Vec<f64> {
    (1..=17).map(|k| 10.0 * k as f64).collect()
}

/// Bounds, energy and Landauer audit over a θ × n grid. Points whose
/// enumeration exceeds the cap are skipped with a warning.
pub fn sweep(config: &ExperimentConfig) -> Result<Table<SweepRow>> {
    config.validate()?;
    let grid = config.grid(&config.thetas_or(&default_sweep_thetas()), &config.ns_or(&(1..=10).collect::<Vec<_>>()));
    let results: Vec<Result<SweepRow>> = grid.par_iter().map(|&(t, n)| sweep_point(t, n, config)).collect();
    let mut table = Table::new("sweep", Vec::new());
    for ((t, n), r) in grid.iter().zip(results) {
        match r {
            Ok(row) => table.rows.push(row),
            Err(e @ Error::Resource { .. }) => table.notes.push(format!("skipped theta={t} n={n}: {e}")),
            Err(e) => return Err(e),
        }
    }
    let violations = table.rows.iter().filter(|r| !r.all_ok).count();
    table.summary = vec![("rows".into(), json!(table.rows.len())), ("bound_violations".into(), json!(violations))];
    Ok(table)
}

// ---------------------------------------------------------------- bounds

pub const BOUNDS_COLUMNS: &str = "\
theta_deg, n, s_letter, s_total, l_one_one, side_info_bits as in `sweep`
bound_landauer_n     s_total - log2 n
bound_landauer_s     s_total - log2 s_total (-inf when s_total = 0)
bound_cover          s_total - log2 n - 3
bound_prisco         s_total - log2(s_total+1) - s_total log2(1 + 1/s_total)
bound_prisco_log_s   s_total - log2 s_total - s_total log2(1 + 1/s_total), empty when s_total = 0
*_ok                 l_one_one >= the corresponding bound";

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BoundsRow {
    pub theta_deg: f64,
    pub n: usize,
    pub s_letter: f64,
    pub s_total: f64,
    pub l_one_one: f64,
    pub side_info_bits: f64,
    pub bound_landauer_n: f64,
    pub bound_landauer_s: f64,
    pub bound_cover: f64,
    pub bound_prisco: f64,
    pub bound_prisco_log_s: Option<f64>,
    pub landauer_n_ok: bool,
    pub landauer_s_ok: bool,
    pub cover_ok: bool,
    pub prisco_ok: bool,
}

/// Just the bound report for each grid point (no energy or state work).
pub fn bounds(config: &ExperimentConfig) -> Result<Table<BoundsRow>> {
    config.validate()?;
    let grid = config.grid(&config.thetas_or(&[45.0]), &config.ns_or(&[3]));
    let mut table = Table::new("bounds", Vec::new());
    for (t, n) in grid {
        let eig = source_at(t)?;
        let book = match Codebook::build_with_cap(&eig, n, config.symbol_order, config.cap) {
            Ok(b) => b,
            Err(e @ Error::Resource { .. }) => {
                table.notes.push(format!("skipped theta={t} n={n}: {e}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        let r = compression_bounds(eig.entropy(), n, book.average_length())?;
        table.rows.push(BoundsRow {
            theta_deg: t,
            n,
            s_letter: r.s_letter,
            s_total: r.s_total,
            l_one_one: r.l_one_one,
            side_info_bits: r.side_info_bits,
            bound_landauer_n: r.bound_landauer_n,
            bound_landauer_s: r.bound_landauer_s,
            bound_cover: r.bound_cover,
            bound_prisco: r.bound_prisco,
            bound_prisco_log_s: r.bound_prisco_log_s,
            landauer_n_ok: r.satisfied.landauer_n,
            landauer_s_ok: r.satisfied.landauer_s,
            cover_ok: r.satisfied.cover,
            prisco_ok: r.satisfied.prisco,
        });
    }
    Ok(table)
}

// ---------------------------------------------------------------- roundtrip

pub const ROUNDTRIP_COLUMNS: &str = "\
theta_deg     source angle
n             letters per message
check         random | basis | side-info
cases         number of states tried
min_fidelity  worst |<in|decode(encode(in))>|^2 (side-info rows: 1 if the mismatch was rejected)
passed        min_fidelity >= 1 - 1e-10";

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RoundtripRow {
    pub theta_deg: f64,
    pub n: usize,
    pub check: String,
    pub cases: usize,
    pub min_fidelity: f64,
    pub passed: bool,
}

fn roundtrip_point(theta: f64, n: usize, point: usize, config: &ExperimentConfig) -> Result<Vec<RoundtripRow>> {
    let eig = source_at(theta)?;
    let book = Codebook::build_with_cap(&eig, n, config.symbol_order, config.cap)?;
    let mut rng = config.rng_for(point);
    let mut worst_random = 1.0f64;
    for _ in 0..config.samples {
        let msg = LetterState::random(2, n, &mut rng)?;
        let back = book.decode(&book.encode(&msg)?, n)?;
        worst_random = worst_random.min(msg.fidelity(&back)?);
    }
    let mut worst_basis = 1.0f64;
    for e in book.entries() {
        let mut coeffs = vec![C64::default(); book.entries().len()];
        coeffs[e.sequence as usize] = C64::new(1.0, 0.0);
        let msg = LetterState::from_eigen_coefficients(&eig, n, coeffs)?;
        let back = book.decode(&book.encode(&msg)?, n)?;
        worst_basis = worst_basis.min(msg.fidelity(&back)?);
    }
    let probe = book.encode(&LetterState::random(2, n, &mut rng)?)?;
    let rejected = matches!(book.decode(&probe, n + 1), Err(Error::SideInfoMismatch { .. }));
    let row = |check: &str, cases: usize, f: f64| RoundtripRow {
        theta_deg: theta,
        n,
        check: check.into(),
        cases,
        min_fidelity: f,
        passed: f >= 1.0 - ROUNDTRIP_TOLERANCE,
    };
    Ok(vec![
        row("random", config.samples, worst_random),
        row("basis", book.entries().len(), worst_basis),
        row("side-info", 1, if rejected { 1.0 } else { 0.0 }),
    ])
}

/// Seeded decode∘encode suite, including zero-probability codewords and the
/// wrong-length rejection path.
pub fn roundtrip(config: &ExperimentConfig) -> Result<Table<RoundtripRow>> {
    config.validate()?;
    let grid = config.grid(&config.thetas_or(&[30.0, 45.0, 60.0, 90.0, 135.0]), &config.ns_or(&[1, 2, 3, 4, 5, 6]));
    let results: Vec<Result<Vec<RoundtripRow>>> =
        grid.par_iter().enumerate().map(|(i, &(t, n))| roundtrip_point(t, n, i, config)).collect();
    let mut table = Table::new("roundtrip", Vec::new());
    for ((t, n), r) in grid.iter().zip(results) {
        match r {
            Ok(rows) => table.rows.extend(rows),
            Err(e @ Error::Resource { .. }) => table.notes.push(format!("skipped theta={t} n={n}: {e}")),
            Err(e) => return Err(e),
        }
    }
    let failures = table.rows.iter().filter(|r| !r.passed).count();
    table.failed = failures > 0;
    table.summary = vec![("checks".into(), json!(table.rows.len())), ("failures".into(), json!(failures))];
    Ok(table)
}

// ---------------------------------------------------------------- schumacher

pub const SCHUMACHER_COLUMNS: &str = "\
theta_deg            source angle
n                    letters per message
epsilon              typicality window
s_letter             entropy per letter (bits)
dimension            number of typical sequences
rate                 log2(dimension) / n
fidelity             projection success probability
deficit              n*s_letter - log2(dimension) (positive: information erased)
one_to_one_rate      (L + log2 n) / n of the lossless 1-1 scheme
one_to_one_fidelity  always 1 (decoding is exact)";

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SchumacherRow {
    pub theta_deg: f64,
    pub n: usize,
    pub epsilon: f64,
    pub s_letter: f64,
    pub dimension: usize,
    pub rate: Option<f64>,
    pub fidelity: f64,
    pub deficit: Option<f64>,
    pub one_to_one_rate: f64,
    pub one_to_one_fidelity: f64,
}

/// Typical-subspace rate and fidelity next to the 1-1 scheme's total rate.
pub fn schumacher(config: &ExperimentConfig) -> Result<Table<SchumacherRow>> {
    config.validate()?;
    let epsilon = config.epsilon.unwrap_or(0.15);
    let grid = config.grid(&config.thetas_or(&[45.0]), &config.ns_or(&(4..=16).collect::<Vec<_>>()));
    let results: Vec<Result<SchumacherRow>> = grid
        .par_iter()
        .map(|&(t, n)| {
            let eig = source_at(t)?;
            let ts = typical_set(&eig, n, epsilon, config.cap)?;
            let rate = schumacher_rate(&ts).ok();
            let book = Codebook::build_with_cap(&eig, n, config.symbol_order, config.cap)?;
            let s = eig.entropy();
            Ok(SchumacherRow {
                theta_deg: t,
                n,
                epsilon,
                s_letter: s,
                dimension: ts.dimension,
                rate,
                fidelity: projection_fidelity(&ts),
                deficit: rate.map(|r| n as f64 * (s - r)),
                one_to_one_rate: (book.average_length() + (n as f64).log2()) / n as f64,
                one_to_one_fidelity: 1.0,
            })
        })
        .collect();
    let mut table = Table::new("schumacher", Vec::new());
    for ((t, n), r) in grid.iter().zip(results) {
        match r {
            Ok(row) => table.rows.push(row),
            Err(e @ Error::Resource { .. }) => table.notes.push(format!("skipped theta={t} n={n}: {e}")),
            Err(e) => return Err(e),
        }
    }
    Ok(table)
}

// ---------------------------------------------------------------- circuit-demo

pub const CIRCUIT_COLUMNS: &str = "\
input        ++, +-, -+, --, or random-<k>
mode         measured | coherent
outcome      env-vacuum | env-one-photon | (empty in coherent mode)
probability  branch probability
fidelity     |<branch output|encode(input)>|^2 against the two-mode network codebook
passed       fidelity >= 1 - 1e-10
JSON output additionally carries the register state after every stage.";

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CircuitRow {
    pub input: String,
    pub mode: CircuitMode,
    pub outcome: Option<EnvOutcome>,
    pub probability: f64,
    pub fidelity: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CircuitDemoRun {
    pub input: String,
    pub mode: CircuitMode,
    pub trace: Vec<CircuitState>,
    pub expected: FockState,
    pub branches: Vec<CircuitRow>,
}

#[derive(Clone, Debug)]
pub struct CircuitDemo {
    pub theta_deg: f64,
    pub runs: Vec<CircuitDemoRun>,
}

impl CircuitDemo {
    pub fn failed(&self) -> bool {
        self.runs.iter().flat_map(|r| &r.branches).any(|b| !b.passed)
    }

    pub fn rows(&self) -> Table<CircuitRow> {
        let rows = self.runs.iter().flat_map(|r| r.branches.clone()).collect();
        let mut t = Table::new("circuit-demo", rows);
        t.failed = self.failed();
        t
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => self.rows().render(format),
            OutputFormat::Json => {
                let doc = json!({
                    "schema": format!("fock-compress/circuit-demo/{SCHEMA_VERSION}"),
                    "theta_deg": self.theta_deg,
                    "runs": self.runs,
                });
                Ok(serde_json::to_string_pretty(&doc)? + "\n")
            }
        }
    }
}

/// Run the two-mode network on the four basis inputs and `samples.min(4)`
/// seeded random inputs, in both modes, and compare with direct encoding.
pub fn circuit_demo(config: &ExperimentConfig) -> Result<CircuitDemo> {
    config.validate()?;
    let theta = config.thetas_or(&[45.0])[0];
    let eig = source_at(theta)?;
    let book = Codebook::two_mode_network(&eig)?;
    let mut inputs: Vec<(String, TwoLetterInput)> = Vec::new();
    for (l1, l2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        inputs.push((sequence_label(&[l1, l2], 2), TwoLetterInput::basis(l1, l2)?));
    }
    let mut rng = config.rng_for(0);
    for k in 0..config.samples.min(4) {
        let msg = LetterState::random(2, 2, &mut rng)?;
        let amps: [C64; 4] = msg.amplitudes().try_into().expect("two qubits have four amplitudes");
        inputs.push((format!("random-{k}"), TwoLetterInput::new(amps)?));
    }
    let mut runs = Vec::new();
    for (label, input) in inputs {
        let expected = book.encode(&input.to_message(&eig)?)?;
        for mode in [CircuitMode::Measured, CircuitMode::Coherent] {
            let run = run_circuit(&input, mode)?;
            let branches = run
                .branches
                .iter()
                .map(|b| {
                    let fidelity = b.output.fidelity(&expected)?;
                    Ok(CircuitRow {
                        input: label.clone(),
                        mode,
                        outcome: b.outcome,
                        probability: b.probability,
                        fidelity,
                        passed: fidelity >= 1.0 - ROUNDTRIP_TOLERANCE,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            runs.push(CircuitDemoRun { input: label.clone(), mode, trace: run.trace, expected: expected.clone(), branches });
        }
    }
    Ok(CircuitDemo { theta_deg: theta, runs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let bad = ExperimentConfig { theta_degrees: vec![180.0], ..Default::default() };
        assert!(matches!(bad.validate(), Err(Error::Config(_))));
        let bad = ExperimentConfig { n_values: vec![0], ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = ExperimentConfig { epsilon: Some(-1.0), ..Default::default() };
        assert!(bad.validate().is_err());
        assert!(ExperimentConfig::default().validate().is_ok());
    }

    #[test]
    fn table3_default() {
        let t = table3(&ExperimentConfig::default()).unwrap();
        assert_eq!(t.rows.len(), 8);
        assert_eq!((t.rows[0].sequence.as_str(), t.rows[0].codeword.as_str(), t.rows[0].length), ("+++", "V", 1));
        let csv = t.render(OutputFormat::Csv).unwrap();
        assert!(csv.starts_with("# schema: fock-compress/table3/v1\nrank,sequence,codeword,length,probability\n"));
        assert!(csv.contains("\n7,--+,HHH,3,"));
    }

    #[test]
    fn sweep_skips_capped_points() {
        let cfg = ExperimentConfig { theta_degrees: vec![45.0], n_values: vec![3, 12], cap: 1 << 10, ..Default::default() };
        let t = sweep(&cfg).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.notes.len(), 1);
        assert!(t.render(OutputFormat::Csv).unwrap().contains("# warning: skipped theta=45 n=12"));
    }

    #[test]
    fn json_rendering_is_stable() {
        let cfg = ExperimentConfig { theta_degrees: vec![45.0, 90.0], n_values: vec![2, 3], format: OutputFormat::Json, ..Default::default() };
        let a = bounds(&cfg).unwrap().render(OutputFormat::Json).unwrap();
        let b = bounds(&cfg).unwrap().render(OutputFormat::Json).unwrap();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], "fock-compress/bounds/v1");
        assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    }
}
