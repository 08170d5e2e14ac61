//! Independent oracles and property tests for the coder, source, circuit
//! and thermodynamic audit.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fock_compress::circuit::{measure_env, run_circuit, CircuitMode, EnvOutcome, TwoLetterInput};
use fock_compress::coder::{codeword_length, Codebook, Symbol, SymbolOrder};
use fock_compress::experiments::source_at;
use fock_compress::fock::{FockKet, FockState, ModeOccupation};
use fock_compress::message::LetterState;
use fock_compress::schumacher::{projection_fidelity, schumacher_rate, typical_set};
use fock_compress::source::{diagonalize, Letter, LetterEnsemble, DEFAULT_ENUMERATION_CAP};
use fock_compress::thermo::landauer_audit;
use num_complex::Complex64 as C64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Expected Huffman length, from the sum of merged weights.
fn huffman_average_length(probs: &[f64]) -> f64 {
    #[derive(PartialEq)]
    struct W(f64);
    impl Eq for W {}
    impl PartialOrd for W {
        fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(o))
        }
    }
    impl Ord for W {
        fn cmp(&self, o: &Self) -> std::cmp::Ordering {
            self.0.total_cmp(&o.0)
        }
    }
    let mut heap: BinaryHeap<Reverse<W>> = probs.iter().map(|&p| Reverse(W(p))).collect();
    let mut total = 0.0;
    while heap.len() > 1 {
        let Reverse(W(a)) = heap.pop().unwrap();
        let Reverse(W(b)) = heap.pop().unwrap();
        total += a + b;
        heap.push(Reverse(W(a + b)));
    }
    total
}

#[test]
fn one_to_one_beats_huffman() {
    for theta in [10.0, 45.0, 80.0, 120.0] {
        let eig = source_at(theta).unwrap();
        for n in 1..=8 {
            let book = Codebook::build(&eig, n, SymbolOrder::VFirst).unwrap();
            let probs: Vec<f64> = book.entries().iter().map(|e| e.probability).collect();
            let h: f64 = probs.iter().filter(|p| **p > 0.0).map(|p| -p * p.log2()).sum();
            let huff = huffman_average_length(&probs);
            let l = book.average_length();
            assert!(huff <= h + 1.0 + 1e-12, "θ={theta} n={n}");
            assert!(l <= huff + 1e-12, "θ={theta} n={n}: 1-1 {l} > huffman {huff}");
            assert!((h - n as f64 * eig.entropy()).abs() < 1e-9);
        }
    }
}

#[test]
fn length_law_matches_capacity_count() {
    // there are 2^(k+1) - 2 non-empty binary strings of length <= k
    let mut k = 1usize;
    for rank in 1..=(1usize << 16) {
        while (1usize << (k + 1)) - 2 < rank {
            k += 1;
        }
        assert_eq!(codeword_length(rank).unwrap(), k, "rank {rank}");
    }
}

#[test]
fn codewords_are_distinct_and_most_probable_are_shortest() {
    let eig = source_at(45.0).unwrap();
    let book = Codebook::build(&eig, 6, SymbolOrder::VFirst).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for e in book.entries() {
        assert!(seen.insert(e.codeword.to_string()));
    }
    for w in book.entries().windows(2) {
        assert!(w[0].probability >= w[1].probability);
        assert!(w[0].codeword.len() <= w[1].codeword.len());
    }
}

#[test]
fn entropy_depends_only_on_density_matrix() {
    let theta: f64 = 50f64.to_radians();
    let overlapping = LetterEnsemble::two_state(theta);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let eigen_ensemble = LetterEnsemble::new(vec![
        Letter { amplitudes: vec![C64::new(r, 0.0), C64::new(r, 0.0)], probability: (1.0 + theta.sin()) / 2.0 },
        Letter { amplitudes: vec![C64::new(r, 0.0), C64::new(-r, 0.0)], probability: (1.0 - theta.sin()) / 2.0 },
    ])
    .unwrap();
    let a = diagonalize(&overlapping.density_matrix()).unwrap();
    let b = diagonalize(&eigen_ensemble.density_matrix()).unwrap();
    assert!((a.entropy() - b.entropy()).abs() < 1e-12);
    let la = Codebook::build(&a, 5, SymbolOrder::VFirst).unwrap().average_length();
    let lb = Codebook::build(&b, 5, SymbolOrder::VFirst).unwrap().average_length();
    assert!((la - lb).abs() < 1e-12);
}

#[test]
fn symbol_order_only_relabels_polarization() {
    let eig = source_at(60.0).unwrap();
    let v = Codebook::build(&eig, 4, SymbolOrder::VFirst).unwrap();
    let h = Codebook::build(&eig, 4, SymbolOrder::HFirst).unwrap();
    assert_eq!(v.average_length(), h.average_length());
    for (a, b) in v.entries().iter().zip(h.entries()) {
        assert_eq!(a.sequence, b.sequence);
        let flipped: Vec<Symbol> =
            a.codeword.symbols().iter().map(|s| if *s == Symbol::H { Symbol::V } else { Symbol::H }).collect();
        assert_eq!(flipped, b.codeword.symbols());
    }
}

#[test]
fn qutrit_source_round_trips() {
    let third = 1.0 / 3.0;
    let s = 0.5f64.sqrt();
    let ens = LetterEnsemble::new(vec![
        Letter { amplitudes: vec![C64::new(1.0, 0.0), C64::default(), C64::default()], probability: third },
        Letter { amplitudes: vec![C64::new(s, 0.0), C64::new(0.0, s), C64::default()], probability: third },
        Letter { amplitudes: vec![C64::default(), C64::new(s, 0.0), C64::new(s, 0.0)], probability: third },
    ])
    .unwrap();
    let eig = diagonalize(&ens.density_matrix()).unwrap();
    let book = Codebook::build(&eig, 3, SymbolOrder::VFirst).unwrap();
    assert_eq!(book.entries().len(), 27);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let m = LetterState::random(3, 3, &mut rng).unwrap();
        let back = book.decode(&book.encode(&m).unwrap(), 3).unwrap();
        assert!(m.fidelity(&back).unwrap() > 1.0 - 1e-10);
    }
}

#[test]
fn landauer_sign_pattern() {
    for k in 1..=17 {
        let theta = 10.0 * k as f64;
        let eig = source_at(theta).unwrap();
        let s = eig.entropy();
        for n in 1..=10 {
            let l = Codebook::build(&eig, n, SymbolOrder::VFirst).unwrap().average_length();
            let audit = landauer_audit(n as f64 * s, l, (n as f64).log2()).unwrap();
            assert!(audit.lossless_consistent, "θ={theta} n={n}: deficit {}", audit.deficit);
        }
        for n in 4..=12 {
            let ts = typical_set(&eig, n, 0.15, DEFAULT_ENUMERATION_CAP).unwrap();
            if let Ok(rate) = schumacher_rate(&ts) {
                let audit = landauer_audit(n as f64 * s, n as f64 * rate, 0.0).unwrap();
                if !audit.lossless_consistent {
                    assert!(projection_fidelity(&ts) < 1.0, "θ={theta} n={n}");
                }
            }
        }
    }
}

#[test]
fn coherent_output_matches_each_measured_branch() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let m = LetterState::random(2, 2, &mut rng).unwrap();
        let input = TwoLetterInput::new(m.amplitudes().try_into().unwrap()).unwrap();
        let coherent = run_circuit(&input, CircuitMode::Coherent).unwrap();
        let measured = run_circuit(&input, CircuitMode::Measured).unwrap();
        let out = &coherent.branches[0].output;
        for b in &measured.branches {
            assert!((b.output.fidelity(out).unwrap() - 1.0).abs() < 1e-12);
            assert!((b.probability - 0.5).abs() < 1e-12);
        }
        let outcomes = measure_env(&measured.trace[2]).unwrap();
        assert_eq!(outcomes[0].result, EnvOutcome::EnvVacuum);
        assert_eq!(outcomes[1].result, EnvOutcome::EnvOnePhoton);
    }
}

fn arb_state(modes: usize) -> impl Strategy<Value = FockState> {
    let occ = prop_oneof![Just(ModeOccupation::Vacuum), Just(ModeOccupation::H), Just(ModeOccupation::V)];
    let term = (proptest::collection::vec(occ, modes), -1.0f64..1.0, -1.0f64..1.0);
    proptest::collection::vec(term, 1..6).prop_filter_map("non-zero", move |terms| {
        let terms = terms.into_iter().map(|(o, re, im)| (FockKet::from_occupations(&o).unwrap(), C64::new(re, im)));
        FockState::from_terms(modes, terms).ok().filter(|s| s.norm() > 1e-3)
    })
}

proptest! {
    #[test]
    fn cauchy_schwarz(a in arb_state(4), b in arb_state(4)) {
        let ip = a.inner_product(&b).unwrap().norm();
        prop_assert!(ip <= a.norm() * b.norm() * (1.0 + 1e-12) + 1e-15);
        let f = a.normalized().unwrap().fidelity(&b.normalized().unwrap()).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&f));
    }

    #[test]
    fn tensor_adds_photon_numbers(a in arb_state(3), b in arb_state(2)) {
        let (a, b) = (a.normalized().unwrap(), b.normalized().unwrap());
        let t = a.tensor(&b).unwrap();
        prop_assert_eq!(t.mode_count(), 5);
        prop_assert!((t.norm() - 1.0).abs() < 1e-12);
        prop_assert!((t.expected_photon_number() - a.expected_photon_number() - b.expected_photon_number()).abs() < 1e-12);
    }

    #[test]
    fn round_trip_any_angle(theta in 1.0f64..179.0, n in 1usize..=5, seed in any::<u64>(), h_first in any::<bool>()) {
        let eig = source_at(theta).unwrap();
        let order = if h_first { SymbolOrder::HFirst } else { SymbolOrder::VFirst };
        let book = Codebook::build(&eig, n, order).unwrap();
        let m = LetterState::random(2, n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let encoded = book.encode(&m).unwrap();
        prop_assert!((encoded.norm() - 1.0).abs() < 1e-12);
        prop_assert!(encoded.terms().all(|(k, _)| k.is_prefix_occupied()));
        let back = book.decode(&encoded, n).unwrap();
        prop_assert!(m.fidelity(&back).unwrap() >= 1.0 - 1e-10);
    }
}
