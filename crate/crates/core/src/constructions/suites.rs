//! Seeded property suites over the constructions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::rotor::{alexander_report, random_rotor, random_stator, AlexanderEntry, SegmentOrientation};
use super::word::{random_braid_word, random_tl_word, random_xy_word, rewrite_cyclic_word, CyclicWord, Letter, Rewrite};
use super::{build_rotant_pair, certify, connected_sum_pair, pad, random_marked_link, Certificate, ConstructionError};
use crate::diagram::{random_tangle, Axis, Closure, TangleDiagram};
use crate::invariants::{alexander_from_homflypt, homflypt, homflypt_braid_closure, jones, InvariantError, InvariantKind, SkeinConfig};
use crate::tl::bracket;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    /// Pairs whose invariants were compared.
    pub checks: usize,
    /// Pairs dropped because a diagram exceeded the crossing cap.
    pub skipped: usize,
    pub failures: Vec<Certificate>,
    pub alexander: Vec<AlexanderEntry>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, trials: usize) -> Self {
        SuiteReport { name: name.into(), trials, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn summary(&self) -> String {
        format!("{}: {} trials, {} checks, {} skipped, {} failures", self.name, self.trials, self.checks, self.skipped, self.failures.len())
    }

    fn record(&mut self, cert: Result<Certificate, ConstructionError>) -> Result<(), ConstructionError> {
        match cert {
            Ok(c) => {
                self.checks += 1;
                if !c.all_equal() {
                    self.failures.push(c);
                }
                Ok(())
            }
            Err(ConstructionError::Invariant(InvariantError::Budget(..))) => {
                self.skipped += 1;
                Ok(())
            }
            Err(e) => Err(e),
        }
    }
}

fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.gen()).collect()
}

const AXES: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

/// Random oriented marked links mutated about every axis: the bracket always
/// agrees, and so do HOMFLYPT and Kauffman F when components are preserved.
pub fn mutation_suite(seed: u64, trials: usize, cfg: &SkeinConfig) -> Result<SuiteReport, ConstructionError> {
    let mut rep = SuiteReport::new("mutation", trials);
    for s in trial_seeds(seed, trials) {
        let m = random_marked_link(s, 5, 8, true);
        let l = m.link()?;
        for axis in AXES {
            let ml = m.mutant(axis)?.link()?;
            let mut kinds = vec![InvariantKind::Bracket];
            if m.component_preserving(axis)? {
                kinds.extend([InvariantKind::Homflypt, InvariantKind::KauffmanF]);
            }
            rep.record(certify(&format!("mutation-{axis:?}"), "1.1", (&l, &ml), &kinds, cfg, Some(s)))?;
        }
    }
    Ok(rep)
}

/// Rotant pairs of order `n` with oriented segments, compared on `kinds`
/// plus the Tait number; Alexander polynomials are logged.
pub fn rotant_suite(seed: u64, n: usize, kinds: &[InvariantKind], trials: usize, cfg: &SkeinConfig) -> Result<SuiteReport, ConstructionError> {
    let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
    let mut rep = SuiteReport::new(&format!("rotant n={n} [{}]", names.join(",")), trials);
    for s in trial_seeds(seed, trials) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let arcs = rng.gen_range(1..=2);
        let rotor = random_rotor(rng.gen(), n, arcs, 3, SegmentOrientation::Oriented)?;
        let stator = random_stator(rng.gen(), &rotor, 1, 2, SegmentOrientation::Oriented)?;
        let (l, rl) = build_rotant_pair(&rotor, &stator)?;
        let cert = certify("rotant", "2.2", (&l, &rl), kinds, cfg, Some(s)).map(|mut c| {
            let (a, b) = (l.tait_number().ok(), rl.tait_number().ok());
            c.invariants.insert("tait".into(), [format!("{a:?}"), format!("{b:?}")]);
            c.verdicts.insert("tait".into(), a.is_some() && a == b);
            c
        });
        rep.record(cert)?;
        rep.alexander.push(alexander_report(&format!("rotant n={n} seed={s}"), &l, &rl, cfg));
    }
    Ok(rep)
}

/// Braid-like rotors with two arcs between segments. HOMFLYPT goes through
/// the Markov trace, so large orders stay cheap.
pub fn traczyk_suite(seed: u64, n: usize, trials: usize) -> Result<SuiteReport, ConstructionError> {
    let mut rep = SuiteReport::new(&format!("traczyk n={n}"), trials);
    for s in trial_seeds(seed, trials) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let rotor = random_rotor(rng.gen(), n, 2, 3, SegmentOrientation::BraidLike)?;
        let stator = random_stator(rng.gen(), &rotor, 1, 2, SegmentOrientation::BraidLike)?;
        let (open_l, open_r) = (stator.assemble_open(&rotor)?, stator.assemble_open(&rotor.rotated()?)?);
        let (l, rl) = build_rotant_pair(&rotor, &stator)?;
        let (bl, br) = (bracket(&l)?, bracket(&rl)?);
        let (pl, pr) = (homflypt_braid_closure(&open_l)?, homflypt_braid_closure(&open_r)?);
        let (al, ar) = (alexander_from_homflypt(&pl)?, alexander_from_homflypt(&pr)?);
        rep.alexander.push(AlexanderEntry {
            label: format!("traczyk n={n} seed={s}"),
            left: Some(al.to_string()),
            right: Some(ar.to_string()),
            equal: Some(al == ar),
        });
        let values = vec![
            ("bracket".into(), bl.to_string(), br.to_string(), bl == br),
            ("homflypt".into(), pl.to_string(), pr.to_string(), pl == pr),
        ];
        rep.record(Ok(Certificate::from_values("rotant-braid", "2.3", (&l, &rl), values, Some(s))))?;
    }
    Ok(rep)
}

/// Every logged Alexander comparison of the given reports, and a one-line
/// tally. Nothing is asserted.
pub fn conjecture_report(reports: &[SuiteReport]) -> (Vec<AlexanderEntry>, String) {
    let all: Vec<AlexanderEntry> = reports.iter().flat_map(|r| r.alexander.iter().cloned()).collect();
    let equal = all.iter().filter(|e| e.equal == Some(true)).count();
    let differ = all.iter().filter(|e| e.equal == Some(false)).count();
    let open = all.len() - equal - differ;
    (all.clone(), format!("alexander: {} rotant pairs, {equal} equal, {differ} different, {open} not computed", all.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WordTheorem {
    /// Two 2-tangles on overlapping strand pairs exchange order.
    T32,
    T34a,
    T34b,
    T42a,
    T42b,
    T51,
}

impl WordTheorem {
    pub const ALL: [WordTheorem; 6] = [WordTheorem::T32, WordTheorem::T34a, WordTheorem::T34b, WordTheorem::T42a, WordTheorem::T42b, WordTheorem::T51];

    pub fn label(self) -> &'static str {
        match self {
            WordTheorem::T32 => "3.2",
            WordTheorem::T34a => "3.4a",
            WordTheorem::T34b => "3.4b",
            WordTheorem::T42a => "4.2a",
            WordTheorem::T42b => "4.2b",
            WordTheorem::T51 => "5.1",
        }
    }

    pub fn parse(s: &str) -> Option<WordTheorem> {
        WordTheorem::ALL.into_iter().find(|t| t.label() == s)
    }
}

fn annulus_cert(theorem: &str, a: &CyclicWord, b: &CyclicWord, seed: u64) -> Result<Certificate, ConstructionError> {
    let (ca, cb) = (a.annulus_class()?, b.annulus_class()?);
    let (pa, pb) = (a.product()?, b.product()?);
    let values = vec![("annulus".into(), format!("{ca:?}"), format!("{cb:?}"), ca == cb)];
    Ok(Certificate::from_values("cyclic-word", theorem, (&pa, &pb), values, Some(seed)))
}

fn closures_cert(theorem: &str, a: &CyclicWord, b: &CyclicWord, seed: u64, cfg: &SkeinConfig) -> Result<Certificate, ConstructionError> {
    let mut values = vec![];
    for k in 0..=2 {
        let (pa, pb) = (homflypt(&a.closure(k)?, cfg)?, homflypt(&b.closure(k)?, cfg)?);
        values.push((format!("homflypt twist {k}"), pa.to_string(), pb.to_string(), pa == pb));
    }
    Ok(Certificate::from_values("cyclic-word", theorem, (&a.closure(0)?, &b.closure(0)?), values, Some(seed)))
}

/// Random cyclic words rewritten per the chosen statement and compared in
/// the skein module of the solid torus (bracket cases) or through closures
/// with 0, 1 and 2 full twists (HOMFLYPT cases).
pub fn word_suite(theorem: WordTheorem, seed: u64, trials: usize, cfg: &SkeinConfig) -> Result<SuiteReport, ConstructionError> {
    let mut rep = SuiteReport::new(&format!("words {}", theorem.label()), trials);
    for s in trial_seeds(seed, trials) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let len = rng.gen_range(2..=5);
        let at = rng.gen_range(0..=1);
        let cert = match theorem {
            WordTheorem::T32 => {
                let w = random_tl_word(rng.gen(), len, 0, 3, 3)?;
                let t = random_tangle(rng.gen(), 2, 3, false);
                let t2 = random_tangle(rng.gen(), 2, 3, false);
                let (a, b) = (pad(&t, 0, None, 3)?, pad(&t2, 1, None, 3)?);
                let swap = |l: &TangleDiagram| -> Result<CyclicWord, ConstructionError> {
                    CyclicWord::new(
                        w.letters()
                            .iter()
                            .map(|x| match x {
                                Letter::Tangle(_) => Letter::Tangle(l.clone()),
                                f => f.clone(),
                            })
                            .collect(),
                    )
                };
                annulus_cert("3.2", &swap(&a.compose(&b)?)?, &swap(&b.compose(&a)?)?, s)
            }
            WordTheorem::T34a | WordTheorem::T34b => {
                let w = random_tl_word(rng.gen(), len, at, 4, 3)?;
                let rw = if theorem == WordTheorem::T34a { Rewrite::Rz } else { Rewrite::Ry };
                annulus_cert(theorem.label(), &w, &rewrite_cyclic_word(&w, rw)?, s)
            }
            WordTheorem::T42a => {
                let w = random_braid_word(rng.gen(), len.min(4), at, [true; 3], 2, 2)?;
                closures_cert("4.2a", &w, &rewrite_cyclic_word(&w, Rewrite::ORz)?, s, cfg)
            }
            WordTheorem::T42b => {
                let flags = [[true; 3], [true, false, true], [false, true, false]][rng.gen_range(0..3)];
                let w = random_braid_word(rng.gen(), len.min(4), at, flags, 2, 2)?;
                closures_cert("4.2b", &w, &rewrite_cyclic_word(&w, Rewrite::ORy)?, s, cfg)
            }
            WordTheorem::T51 => {
                let w = random_xy_word(rng.gen(), len.min(4), [true, false, true], 3)?;
                closures_cert("5.1", &w, &rewrite_cyclic_word(&w, Rewrite::ORy)?, s, cfg)
            }
        };
        rep.record(cert)?;
    }
    Ok(rep)
}

/// Small oriented marked links with a nontrivial Jones polynomial, mutated
/// with components preserved, then 2-cabled: HOMFLYPT and Kauffman F agree. `max_base` bounds the crossings
/// of the uncabled diagram.
pub fn satellite_mutation_suite(seed: u64, trials: usize, max_base: usize, cfg: &SkeinConfig) -> Result<SuiteReport, ConstructionError> {
    let mut rep = SuiteReport::new("satellite mutation", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = 0;
    while found < trials {
        let s: u64 = rng.gen();
        let m = random_marked_link(s, 3, 4, true);
        let axis = AXES[rng.gen_range(0..3)];
        let l = m.link()?;
        let c = l.word().crossing_count();
        if c > max_base || m.inner().word().crossing_count() == 0 || !m.component_preserving(axis)? || jones(&l)?.num_terms() <= 2 {
            continue;
        }
        found += 1;
        let ml = m.mutant(axis)?.link()?;
        let kinds = [InvariantKind::Homflypt, InvariantKind::KauffmanF];
        rep.record(certify(&format!("2-cable of mutation-{axis:?}"), "1.2", (&l.two_cable(), &ml.two_cable()), &kinds, cfg, Some(s)))?;
    }
    Ok(rep)
}

fn catalog() -> Vec<(&'static str, TangleDiagram)> {
    let cl = |n: usize, w: &[i32]| TangleDiagram::from_braid(n, w).and_then(|b| b.closure(&Closure::Trace)).expect("catalog braid");
    vec![
        ("kinked unknot", cl(2, &[1])),
        ("hopf+", cl(2, &[1, 1])),
        ("hopf-", cl(2, &[-1, -1])),
        ("trefoil+", cl(2, &[1, 1, 1])),
        ("trefoil-", cl(2, &[-1, -1, -1])),
    ]
}

/// `L1 # L2` against `L1 # -L2`, 2-cabled, with the summands drawn from a
/// small catalog of closed braids; `max_base` bounds the uncabled sum.
pub fn connected_sum_suite(seed: u64, trials: usize, max_base: usize, cfg: &SkeinConfig) -> Result<SuiteReport, ConstructionError> {
    let mut rep = SuiteReport::new("connected sum", trials);
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = 0;
    while found < trials {
        let s: u64 = rng.gen();
        let mut r = ChaCha8Rng::seed_from_u64(s);
        let (n1, l1) = &cat[r.gen_range(0..cat.len())];
        let (n2, l2) = &cat[r.gen_range(0..cat.len())];
        if l1.word().crossing_count() + l2.word().crossing_count() > max_base {
            continue;
        }
        let c1 = r.gen_range(0..l1.component_count());
        let c2 = l2.components().0[l2.events().len() - 1][0];
        let (a, b) = connected_sum_pair(l1, c1, l2, c2)?;
        found += 1;
        let kinds = [InvariantKind::Homflypt, InvariantKind::KauffmanF];
        rep.record(certify(&format!("2-cable of {n1} # {n2} (component {c1})"), "1.3", (&a.two_cable(), &b.two_cable()), &kinds, cfg, Some(s)))?;
    }
    Ok(rep)
}
