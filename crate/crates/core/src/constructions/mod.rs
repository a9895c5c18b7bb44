//! Constructions of distinct links sharing polynomial invariants: mutation,
//! rotants, cyclic-word rewriting and connected sums, with certificates.

mod certify;
mod mutation;
mod rotor;
mod suites;
mod sum;
mod word;

use thiserror::Error;

use crate::diagram::{solve_orientation, DiagramError, TangleDiagram};
use crate::invariants::InvariantError;
use crate::tl::TlError;

pub use certify::{certify, Certificate};
pub use mutation::{mutate, random_marked_link, MarkedLink};
pub use rotor::{alexander_report, build_rotant_pair, random_rotor, random_stator, AlexanderEntry, Rotor, SegmentOrientation, Stator};
pub use suites::{conjecture_report, connected_sum_suite, mutation_suite, rotant_suite, satellite_mutation_suite, traczyk_suite, word_suite, SuiteReport, WordTheorem};
pub use sum::{connected_sum_pair, open_up};
pub use word::{full_twist, random_braid_word, random_tl_word, random_xy_word, rewrite_cyclic_word, CyclicWord, Letter, Rewrite};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Tl(#[from] TlError),
    #[error("arity: {0}")]
    Arity(String),
    #[error("orientation: {0}")]
    Orientation(String),
    #[error("component: {0}")]
    Component(String),
}


/// `t` on strands `at..at+k` of an ambient level with directions `flags`
/// (or `n` unoriented strands).
pub(crate) fn pad(t: &TangleDiagram, at: usize, flags: Option<&[bool]>, n: usize) -> Result<TangleDiagram, ConstructionError> {
    let k = t.width_in();
    let (l, r) = match flags {
        Some(f) => (Some(&f[..at]), Some(&f[at + k..])),
        None => (None, None),
    };
    Ok(t.padded(at, l, r, n)?)
}

/// `d` oriented with the given end directions, if possible.
pub(crate) fn orient_between(d: &TangleDiagram, bottom: &[bool], top: &[bool]) -> Option<TangleDiagram> {
    let last = d.events().len();
    let fixed: Vec<_> = bottom.iter().enumerate().map(|(p, &f)| (0, p, f)).chain(top.iter().enumerate().map(|(p, &f)| (last, p, f))).collect();
    let o = solve_orientation(d.word(), &fixed).ok()?;
    TangleDiagram::new(d.word().clone(), Some(o)).ok()
}
