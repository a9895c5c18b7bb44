use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{orient_between, pad, ConstructionError};
use crate::diagram::{random_braid, random_tangle, Axis, Closure, TangleDiagram};
use crate::invariants::{alexander, SkeinConfig};

/// How rotor segments are oriented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SegmentOrientation {
    Unoriented,
    /// Oriented with matching bottom and top directions.
    Oriented,
    /// Upward braids only.
    BraidLike,
}

/// An `n`-fold rotor cut into `n` congruent segments. The diagram is drawn in
/// a strip whose trace closure is the annulus: the segment occupies strands
/// `s..s+m` of every slab, strand `s` being the rotor boundary where it meets
/// the stator, and `m` arcs run between neighbouring segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotor {
    segment: TangleDiagram,
    n: usize,
}

impl Rotor {
    pub fn new(segment: TangleDiagram, n: usize) -> Result<Self, ConstructionError> {
        if n == 0 {
            return Err(ConstructionError::Arity("rotor order must be positive".into()));
        }
        if segment.width_in() != segment.width_out() || segment.width_in() < 2 {
            return Err(ConstructionError::Arity(format!(
                "segment is {} -> {}, need k -> k with k >= 2",
                segment.width_in(),
                segment.width_out()
            )));
        }
        if let (Some(b), Some(t)) = (segment.bottom_flags(), segment.top_flags()) {
            if b != t.as_slice() {
                return Err(ConstructionError::Orientation("segment directions differ at its two ends".into()));
            }
        }
        Ok(Rotor { segment, n })
    }

    pub fn segment(&self) -> &TangleDiagram {
        &self.segment
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Arcs between neighbouring segments.
    pub fn arc_profile(&self) -> usize {
        self.segment.width_in() - 1
    }

    /// The same rotor turned over about the in-plane horizontal axis, which
    /// in the strip acts on each segment separately.
    pub fn rotated(&self) -> Result<Rotor, ConstructionError> {
        self.rotated_about(Axis::X)
    }

    pub(crate) fn rotated_about(&self, axis: Axis) -> Result<Rotor, ConstructionError> {
        let mut seg = self.segment.rotate(axis)?;
        if let (Some(b), Some(_)) = (self.segment.bottom_flags(), seg.bottom_flags()) {
            if seg.bottom_flags() != Some(b) {
                seg = seg.reverse_orientation();
            }
            if seg.bottom_flags() != Some(b) {
                return Err(ConstructionError::Orientation("rotated segment does not fit".into()));
            }
        }
        Rotor::new(seg, self.n)
    }
}

/// The part of the link outside the rotor: one `(s+1) -> (s+1)` piece per
/// segment, whose last strand is the rotor boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stator {
    pieces: Vec<TangleDiagram>,
}

impl Stator {
    pub fn new(pieces: Vec<TangleDiagram>) -> Result<Self, ConstructionError> {
        let first = pieces.first().ok_or_else(|| ConstructionError::Arity("empty stator".into()))?;
        let k = first.width_in();
        if k == 0 {
            return Err(ConstructionError::Arity("stator pieces need a boundary strand".into()));
        }
        for p in &pieces {
            if p.width_in() != k || p.width_out() != k {
                return Err(ConstructionError::Arity("stator pieces must all be k -> k".into()));
            }
            let ends_agree = p.bottom_flags() == first.bottom_flags() && p.top_flags().as_deref() == p.bottom_flags();
            if p.is_oriented() != first.is_oriented() || !ends_agree {
                return Err(ConstructionError::Orientation("stator pieces must share directions at both ends".into()));
            }
        }
        Ok(Stator { pieces })
    }

    pub fn pieces(&self) -> &[TangleDiagram] {
        &self.pieces
    }

    /// Strands left of the boundary strand.
    pub fn depth(&self) -> usize {
        self.pieces[0].width_in() - 1
    }

    /// Closed diagram of the stator around `rotor`.
    pub fn assemble(&self, rotor: &Rotor) -> Result<TangleDiagram, ConstructionError> {
        Ok(self.assemble_open(rotor)?.closure(&Closure::Trace)?)
    }

    /// The strip before its trace closure.
    pub fn assemble_open(&self, rotor: &Rotor) -> Result<TangleDiagram, ConstructionError> {
        if self.pieces.len() != rotor.n {
            return Err(ConstructionError::Arity(format!("{} stator pieces for a rotor of order {}", self.pieces.len(), rotor.n)));
        }
        let s = self.depth();
        let w = s + 1 + rotor.arc_profile();
        let flags: Option<Vec<bool>> = match (self.pieces[0].bottom_flags(), rotor.segment.bottom_flags()) {
            (Some(q), Some(r)) => {
                if q[s] != r[0] {
                    return Err(ConstructionError::Orientation("stator and rotor disagree on the boundary strand".into()));
                }
                Some(q.iter().chain(&r[1..]).copied().collect())
            }
            (None, None) => None,
            _ => return Err(ConstructionError::Orientation("stator and rotor must both be oriented or both not".into())),
        };
        let seg = pad(&rotor.segment, s, flags.as_deref(), w)?;
        let mut acc = TangleDiagram::identity(w, flags.clone())?;
        for q in &self.pieces {
            acc = acc.compose(&pad(q, 0, flags.as_deref(), w)?)?.compose(&seg)?;
        }
        Ok(acc)
    }
}

/// The link and its rotant.
pub fn build_rotant_pair(rotor: &Rotor, stator: &Stator) -> Result<(TangleDiagram, TangleDiagram), ConstructionError> {
    Ok((stator.assemble(rotor)?, stator.assemble(&rotor.rotated()?)?))
}

fn random_flags(rng: &mut ChaCha8Rng, k: usize) -> Vec<bool> {
    (0..k).map(|_| rng.gen_bool(0.5)).collect()
}

/// A seeded rotor with `arcs` arcs between segments and about `events`
/// events per segment. Braid-like segments have exactly `events` crossings.
pub fn random_rotor(seed: u64, n: usize, arcs: usize, events: usize, kind: SegmentOrientation) -> Result<Rotor, ConstructionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = arcs + 1;
    let seg = match kind {
        SegmentOrientation::Unoriented => random_tangle(rng.gen(), k, events, false),
        SegmentOrientation::BraidLike => random_braid(rng.gen(), k, events),
        SegmentOrientation::Oriented => loop {
            let d = random_tangle(rng.gen(), k, events, false);
            let f = random_flags(&mut rng, k);
            if let Some(d) = orient_between(&d, &f, &f) {
                break d;
            }
        },
    };
    Rotor::new(seg, n)
}

/// A seeded stator for `rotor` with `depth` strands beside the boundary
/// strand and about `events` events per piece.
pub fn random_stator(seed: u64, rotor: &Rotor, depth: usize, events: usize, kind: SegmentOrientation) -> Result<Stator, ConstructionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = depth + 1;
    let braid_like = kind == SegmentOrientation::BraidLike;
    if (kind == SegmentOrientation::Unoriented) == rotor.segment.is_oriented() {
        return Err(ConstructionError::Orientation("stator kind does not match the rotor".into()));
    }
    let flags = rotor.segment.bottom_flags().map(|r| {
        let mut f = if braid_like { vec![true; k] } else { random_flags(&mut rng, k) };
        f[depth] = r[0];
        f
    });
    let pieces = (0..rotor.n)
        .map(|_| match &flags {
            None => random_tangle(rng.gen(), k, events, false),
            Some(_) if braid_like => random_braid(rng.gen(), k, events),
            Some(f) => loop {
                let d = random_tangle(rng.gen(), k, events, false);
                if let Some(d) = orient_between(&d, f, f) {
                    break d;
                }
            },
        })
        .collect();
    Stator::new(pieces)
}

/// One Alexander comparison of a rotant pair.
#[derive(Clone, Debug, Serialize)]
pub struct AlexanderEntry {
    pub label: String,
    pub left: Option<String>,
    pub right: Option<String>,
    pub equal: Option<bool>,
}

/// Alexander polynomials of a rotant pair, or `None` entries when the cap is
/// exceeded. Nothing is asserted.
pub fn alexander_report(label: &str, l: &TangleDiagram, rl: &TangleDiagram, cfg: &SkeinConfig) -> AlexanderEntry {
    let a = alexander(l, cfg).ok();
    let b = alexander(rl, cfg).ok();
    let equal = match (&a, &b) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    AlexanderEntry { label: label.to_string(), left: a.map(|p| p.to_string()), right: b.map(|p| p.to_string()), equal }
}
