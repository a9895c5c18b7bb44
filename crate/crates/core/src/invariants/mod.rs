//! Polynomial invariants of closed diagrams.

mod pdgraph;
mod skein;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{DiagramError, TangleDiagram};
use crate::hecke::{hecke_from_tangle_in, markov_trace, HeckeError};
use crate::poly::{MultiLaurent, PolyError, Vars};
use crate::tl::{self, TlError};
use skein::{Engine, Theory};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tl(#[from] TlError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error("{0} crossings exceed the skein-tree budget of {1}")]
    Budget(usize, usize),
    #[error("the empty diagram has no invariant")]
    Empty,
    #[error("internal normalization error: {0}")]
    Normalization(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeinConfig {
    pub max_crossings: usize,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { max_crossings: 12 }
    }
}

impl SkeinConfig {
    pub fn with_cap(max_crossings: usize) -> Self {
        SkeinConfig { max_crossings }
    }
}

fn closed(d: &TangleDiagram) -> Result<(), InvariantError> {
    if !d.is_closed() {
        return Err(DiagramError::NotClosed.into());
    }
    Ok(())
}

/// `V(t)` with `s = t^(1/2)`, from the bracket:
/// `V = (-A^3)^(-Tait) <D>` under `A -> s^(-1/2)`.
pub fn jones(d: &TangleDiagram) -> Result<MultiLaurent, InvariantError> {
    closed(d)?;
    let tait = d.tait_number()?;
    let a = Vars::a();
    let b = tl::bracket(d)?;
    let f = MultiLaurent::monomial(&a, if tait % 2 == 0 { 1 } else { -1 }, vec![-3 * tait]);
    let v = &b * &f;
    let s = v.rescale_exponent("A", -1, 2)?;
    Ok(s.rename(&Vars::s()))
}

/// HOMFLYPT `P(v, z)` with `v^-1 P(L+) - v P(L-) = z P(L0)` and unknot 1.
pub fn homflypt(d: &TangleDiagram, cfg: &SkeinConfig) -> Result<MultiLaurent, InvariantError> {
    closed(d)?;
    let pd = pdgraph::Pd::from_tangle(d, true)?;
    let p = Engine::new(Theory::Homflypt, cfg.max_crossings).eval_top(&pd)?;
    Ok(p.to_multi(&Vars::vz()))
}

/// The regular-isotopy Kauffman polynomial `Lambda(a, x)`; framing offsets
/// contribute `a` per unit.
/// HOMFLYPT of the trace closure of an upward braid, through the Markov
/// trace on the Hecke algebra rather than the skein tree.
pub fn homflypt_braid_closure(braid: &TangleDiagram) -> Result<MultiLaurent, InvariantError> {
    let vz = Vars::vz();
    let t = markov_trace(&hecke_from_tangle_in(braid, &vz)?)?;
    t.as_poly().cloned().ok_or_else(|| InvariantError::Normalization("trace is not a Laurent polynomial".into()))
}

pub fn kauffman_lambda(d: &TangleDiagram, cfg: &SkeinConfig) -> Result<MultiLaurent, InvariantError> {
    closed(d)?;
    let pd = pdgraph::Pd::from_tangle(d, false)?;
    let p = Engine::new(Theory::Kauffman, cfg.max_crossings).eval_top(&pd)?;
    let v = Vars::ax();
    let tw = d.total_twist();
    Ok(&p.to_multi(&v) * &MultiLaurent::monomial(&v, 1, vec![tw, 0]))
}

/// `F = a^(-Tait) Lambda`, an invariant of oriented links.
pub fn kauffman_f(d: &TangleDiagram, cfg: &SkeinConfig) -> Result<MultiLaurent, InvariantError> {
    let l = kauffman_lambda(d, cfg)?;
    let tait = d.tait_number()?;
    Ok(&l * &MultiLaurent::monomial(&Vars::ax(), 1, vec![-tait, 0]))
}

fn s_minus_inv(s: &Vars) -> MultiLaurent {
    MultiLaurent::from_terms(s, [(vec![1], BigInt::from(1)), (vec![-1], BigInt::from(-1))])
}

/// `P(v = t, z = t^(1/2) - t^(-1/2))` in `s = t^(1/2)`.
pub fn jones_from_homflypt(p: &MultiLaurent) -> Result<MultiLaurent, InvariantError> {
    let s = Vars::s();
    let v = MultiLaurent::monomial(&s, 1, vec![2]);
    Ok(p.substitute(&[("v", v), ("z", s_minus_inv(&s))], &s)?)
}

/// Conway-normalized `Delta(t)` in `s = t^(1/2)`: `P(1, s - s^-1)`.
pub fn alexander_from_homflypt(p: &MultiLaurent) -> Result<MultiLaurent, InvariantError> {
    let s = Vars::s();
    Ok(p.substitute(&[("v", MultiLaurent::one(&s)), ("z", s_minus_inv(&s))], &s)?)
}

pub fn alexander(d: &TangleDiagram, cfg: &SkeinConfig) -> Result<MultiLaurent, InvariantError> {
    alexander_from_homflypt(&homflypt(d, cfg)?)
}

/// `|Delta(-1)|`, evaluating at `s = i` with exact Gaussian integers.
pub fn determinant_from_alexander(delta: &MultiLaurent) -> Result<BigInt, InvariantError> {
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for (e, c) in delta.terms() {
        match e[0].rem_euclid(4) {
            0 => re += c,
            1 => im += c,
            2 => re -= c,
            _ => im -= c,
        }
    }
    match (re.is_zero(), im.is_zero()) {
        (_, true) => Ok(re.abs()),
        (true, false) => Ok(im.abs()),
        _ => {
            let n2 = &re * &re + &im * &im;
            let r = n2.sqrt();
            if &r * &r == n2 {
                Ok(r)
            } else {
                Err(InvariantError::Normalization(format!("|Delta(-1)|^2 = {n2} is not a square")))
            }
        }
    }
}

pub fn determinant(d: &TangleDiagram, cfg: &SkeinConfig) -> Result<BigInt, InvariantError> {
    determinant_from_alexander(&alexander(d, cfg)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    Bracket,
    Jones,
    Homflypt,
    KauffmanF,
    KauffmanLambda,
    Alexander,
    Determinant,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 7] = [
        InvariantKind::Bracket,
        InvariantKind::Jones,
        InvariantKind::Homflypt,
        InvariantKind::KauffmanF,
        InvariantKind::KauffmanLambda,
        InvariantKind::Alexander,
        InvariantKind::Determinant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Bracket => "bracket",
            InvariantKind::Jones => "jones",
            InvariantKind::Homflypt => "homflypt",
            InvariantKind::KauffmanF => "kauffman_f",
            InvariantKind::KauffmanLambda => "kauffman_lambda",
            InvariantKind::Alexander => "alexander",
            InvariantKind::Determinant => "determinant",
        }
    }

    /// Variable convention tag.
    pub fn convention(self) -> &'static str {
        match self {
            InvariantKind::Bracket => "A",
            InvariantKind::Jones | InvariantKind::Alexander => "s=t^(1/2)",
            InvariantKind::Homflypt => "v,z",
            InvariantKind::KauffmanF | InvariantKind::KauffmanLambda => "a,x",
            InvariantKind::Determinant => "integer",
        }
    }

    pub fn parse(s: &str) -> Option<InvariantKind> {
        Self::ALL.into_iter().find(|k| k.name() == s || (s == "kauffman" && *k == InvariantKind::KauffmanF))
    }

    /// Whether the kind needs an oriented diagram.
    pub fn needs_orientation(self) -> bool {
        !matches!(self, InvariantKind::Bracket | InvariantKind::KauffmanLambda)
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Poly(MultiLaurent),
    Int(BigInt),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Poly(p) => write!(f, "{p}"),
            InvariantValue::Int(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    pub value: InvariantValue,
}

impl InvariantResult {
    pub fn convention(&self) -> &'static str {
        self.kind.convention()
    }
}

pub fn compute(d: &TangleDiagram, kind: InvariantKind, cfg: &SkeinConfig) -> Result<InvariantResult, InvariantError> {
    let value = match kind {
        InvariantKind::Bracket => InvariantValue::Poly(tl::bracket(d)?),
        InvariantKind::Jones => InvariantValue::Poly(jones(d)?),
        InvariantKind::Homflypt => InvariantValue::Poly(homflypt(d, cfg)?),
        InvariantKind::KauffmanF => InvariantValue::Poly(kauffman_f(d, cfg)?),
        InvariantKind::KauffmanLambda => InvariantValue::Poly(kauffman_lambda(d, cfg)?),
        InvariantKind::Alexander => InvariantValue::Poly(alexander(d, cfg)?),
        InvariantKind::Determinant => InvariantValue::Int(determinant(d, cfg)?),
    };
    Ok(InvariantResult { kind, value })
}

#[derive(Clone, Debug, Serialize)]
pub struct EqualityEntry {
    pub kind: InvariantKind,
    pub equal: bool,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EqualityReport {
    pub entries: Vec<EqualityEntry>,
}

impl EqualityReport {
    pub fn all_equal(&self) -> bool {
        self.entries.iter().all(|e| e.equal)
    }

    pub fn get(&self, kind: InvariantKind) -> Option<&EqualityEntry> {
        self.entries.iter().find(|e| e.kind == kind)
    }
}

pub fn verify_equal(d1: &TangleDiagram, d2: &TangleDiagram, kinds: &[InvariantKind], cfg: &SkeinConfig) -> Result<EqualityReport, InvariantError> {
    let mut entries = vec![];
    for &kind in kinds {
        let a = compute(d1, kind, cfg)?.value;
        let b = compute(d2, kind, cfg)?.value;
        entries.push(EqualityEntry { kind, equal: a == b, left: a.to_string(), right: b.to_string() });
    }
    Ok(EqualityReport { entries })
}
