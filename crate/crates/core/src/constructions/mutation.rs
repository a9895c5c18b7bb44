use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{pad, ConstructionError};
use crate::diagram::{random_tangle, solve_orientation, Axis, Event, SliceWord, TangleDiagram};

/// A closed diagram with a marked 2-tangle: `below`, then `inner` on strands
/// `at, at+1`, then `above`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedLink {
    below: TangleDiagram,
    inner: TangleDiagram,
    at: usize,
    above: TangleDiagram,
}

impl MarkedLink {
    pub fn new(below: TangleDiagram, inner: TangleDiagram, at: usize, above: TangleDiagram) -> Result<Self, ConstructionError> {
        if inner.width_in() != 2 || inner.width_out() != 2 {
            return Err(ConstructionError::Arity(format!("inner tangle is {} -> {}, need 2 -> 2", inner.width_in(), inner.width_out())));
        }
        if below.width_in() != 0 || above.width_out() != 0 || below.width_out() != above.width_in() || at + 2 > below.width_out() {
            return Err(ConstructionError::Arity("context does not close around the hole".into()));
        }
        if below.is_oriented() != inner.is_oriented() || inner.is_oriented() != above.is_oriented() {
            return Err(ConstructionError::Orientation("pieces disagree on being oriented".into()));
        }
        let m = MarkedLink { below, inner, at, above };
        m.link()?;
        Ok(m)
    }

    pub fn inner(&self) -> &TangleDiagram {
        &self.inner
    }

    pub fn position(&self) -> usize {
        self.at
    }

    pub fn with_inner(&self, inner: TangleDiagram) -> Result<Self, ConstructionError> {
        MarkedLink::new(self.below.clone(), inner, self.at, self.above.clone())
    }

    pub fn link(&self) -> Result<TangleDiagram, ConstructionError> {
        let w = self.below.width_out();
        let top = self.below.top_flags();
        let mid = pad(&self.inner, self.at, top.as_deref(), w)?;
        Ok(self.below.compose(&mid)?.compose(&self.above)?)
    }

    /// Link components at the hole's corners: bottom-left, bottom-right,
    /// top-left, top-right.
    pub fn corner_components(&self) -> Result<[usize; 4], ConstructionError> {
        let (seg, _) = self.link()?.components();
        let lb = self.below.events().len();
        let lt = lb + self.inner.events().len();
        let a = self.at;
        Ok([seg[lb][a], seg[lb][a + 1], seg[lt][a], seg[lt][a + 1]])
    }

    /// Whether every corner and its image under the rotation lie on the same
    /// component.
    pub fn component_preserving(&self, axis: Axis) -> Result<bool, ConstructionError> {
        let c = self.corner_components()?;
        let image: [usize; 4] = match axis {
            Axis::X => [2, 3, 0, 1],
            Axis::Y => [1, 0, 3, 2],
            Axis::Z => [3, 2, 1, 0],
        };
        Ok((0..4).all(|k| c[k] == c[image[k]]))
    }

    /// The marked link with the inner tangle rotated by π about `axis`; an
    /// oriented inner tangle is reversed when its endpoints would clash.
    pub fn mutant(&self, axis: Axis) -> Result<MarkedLink, ConstructionError> {
        let rot = self.inner.rotate(axis)?;
        if !self.inner.is_oriented() {
            return self.with_inner(rot);
        }
        let want = (self.inner.bottom_flags().map(<[bool]>::to_vec), self.inner.top_flags());
        for cand in [rot.clone(), rot.reverse_orientation()] {
            if (cand.bottom_flags().map(<[bool]>::to_vec), cand.top_flags()) == want {
                return self.with_inner(cand);
            }
        }
        Err(ConstructionError::Orientation("rotated tangle fits neither orientation".into()))
    }
}

/// The closed mutant diagram.
pub fn mutate(m: &MarkedLink, axis: Axis) -> Result<TangleDiagram, ConstructionError> {
    m.mutant(axis)?.link()
}

/// A seeded marked link. The context is `w = 2` or `4` strands opened by
/// cups, a random `w`-tangle below and above the hole, then caps.
pub fn random_marked_link(seed: u64, inner_events: usize, outer_events: usize, oriented: bool) -> MarkedLink {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = rng.gen_range(1..=2usize);
    let w = 2 * pairs;
    let at = rng.gen_range(0..=w - 2);
    let lower = random_tangle(rng.gen(), w, outer_events / 2, false);
    let inner = random_tangle(rng.gen(), 2, inner_events, false);
    let upper = random_tangle(rng.gen(), w, outer_events - outer_events / 2, false);
    let mut events: Vec<Event> = vec![Event::Cup(0); pairs];
    events.extend_from_slice(lower.events());
    let nb = events.len();
    let shift = |e: Event| match e {
        Event::Cup(i) => Event::Cup(i + at),
        Event::Cap(i) => Event::Cap(i + at),
        Event::Cross(i, s) => Event::Cross(i + at, s),
    };
    events.extend(inner.events().iter().map(|&e| shift(e)));
    let ni = inner.events().len();
    events.extend_from_slice(upper.events());
    events.extend(vec![Event::Cap(0); pairs]);
    let word = SliceWord::new(0, events).expect("widths are consistent");
    let orient = oriented.then(|| solve_orientation(&word, &[]).expect("closed diagrams are orientable"));
    let full = TangleDiagram::new(word, orient).expect("valid orientation");
    let len = full.events().len();
    let below = full.restrict(0..nb, 0, 0).expect("prefix");
    let hole = full.restrict(nb..nb + ni, at, w - at - 2).expect("hole");
    let above = full.restrict(nb + ni..len, 0, 0).expect("suffix");
    MarkedLink::new(below, hole, at, above).expect("consistent pieces")
}
