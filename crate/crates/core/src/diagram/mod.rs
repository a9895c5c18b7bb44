//! Framed, optionally oriented tangle diagrams as Morse (slice) words.
//!
//! A word is read bottom to top. Positions are 0-based from the left at the
//! current level. `Cross(i, Pos)` has its over strand running from the
//! bottom-left to the top-right endpoint of the slice.
//!
//! Orientation is stored as one flag per bottom endpoint followed by one flag
//! per cup (the direction of its left leg); `true` means upward. That data
//! determines the direction of every segment, so consistency reduces to caps
//! joining opposite flags.

mod json;
mod ops;
pub mod pd;
mod random;

use std::collections::BTreeMap;

use thiserror::Error;

pub use ops::{Axis, Closure};
pub use pd::from_pd;
pub use random::{random_braid, random_tangle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("event {index}: {msg}")]
    Width { index: usize, msg: String },
    #[error("arity mismatch: {0} vs {1}")]
    Arity(usize, usize),
    #[error("orientation: {0}")]
    Orientation(String),
    #[error("placement out of range: {k} strands at {i} in {n}")]
    Placement { k: usize, i: usize, n: usize },
    #[error("diagram is not closed")]
    NotClosed,
    #[error("diagram is not oriented")]
    Unoriented,
    #[error("json: {0}")]
    Json(String),
    #[error("pd code: {0}")]
    Pd(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Event {
    Cup(usize),
    Cap(usize),
    Cross(usize, Sign),
}

impl Event {
    /// Width after the event, or an error message.
    pub fn apply(self, w: usize) -> Result<usize, String> {
        match self {
            Event::Cup(i) if i <= w => Ok(w + 2),
            Event::Cup(i) => Err(format!("cup at {i} exceeds width {w}")),
            Event::Cap(i) | Event::Cross(i, _) if i + 1 < w => Ok(match self {
                Event::Cap(_) => w - 2,
                _ => w,
            }),
            _ => Err(format!("{self:?} needs width > {}", self.pos() + 1)),
        }
    }

    pub fn pos(self) -> usize {
        match self {
            Event::Cup(i) | Event::Cap(i) | Event::Cross(i, _) => i,
        }
    }
}

/// An event list with width bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SliceWord {
    width_in: usize,
    events: Vec<Event>,
    width_out: usize,
}

impl SliceWord {
    pub fn new(width_in: usize, events: Vec<Event>) -> Result<Self, DiagramError> {
        let mut w = width_in;
        for (index, e) in events.iter().enumerate() {
            w = e.apply(w).map_err(|msg| DiagramError::Width { index, msg })?;
        }
        Ok(SliceWord { width_in, events, width_out: w })
    }

    pub fn identity(n: usize) -> Self {
        SliceWord { width_in: n, events: vec![], width_out: n }
    }

    pub fn width_in(&self) -> usize {
        self.width_in
    }

    pub fn width_out(&self) -> usize {
        self.width_out
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Width at each level; `widths()[t]` is the width below event `t`.
    pub fn widths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut w = self.width_in;
        out.push(w);
        for e in &self.events {
            w = e.apply(w).expect("validated word");
            out.push(w);
        }
        out
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cross(..))).count()
    }

    pub fn cup_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cup(_))).count()
    }
}

/// A slice word with optional orientation and per-component framing offsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleDiagram {
    word: SliceWord,
    orient: Option<Vec<bool>>,
    twists: BTreeMap<usize, i32>,
}

/// Where a component starts, used for its canonical numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Has at least one endpoint.
    Arc,
    Closed,
}

impl TangleDiagram {
    pub fn new(word: SliceWord, orient: Option<Vec<bool>>) -> Result<Self, DiagramError> {
        let d = TangleDiagram { word, orient, twists: BTreeMap::new() };
        if let Some(o) = &d.orient {
            let want = d.word.width_in + d.word.cup_count();
            if o.len() != want {
                return Err(DiagramError::Orientation(format!("expected {want} flags, got {}", o.len())));
            }
            d.level_flags().transpose()?;
        }
        Ok(d)
    }

    pub fn unoriented(word: SliceWord) -> Self {
        TangleDiagram { word, orient: None, twists: BTreeMap::new() }
    }

    pub fn from_events(width_in: usize, events: Vec<Event>) -> Result<Self, DiagramError> {
        Ok(Self::unoriented(SliceWord::new(width_in, events)?))
    }

    pub fn identity(n: usize, orient: Option<Vec<bool>>) -> Result<Self, DiagramError> {
        Self::new(SliceWord::identity(n), orient)
    }

    /// Positive braid generators are `i` (1-based), negative are `-i`; all
    /// strands oriented upward.
    pub fn from_braid(n: usize, word: &[i32]) -> Result<Self, DiagramError> {
        let events = word
            .iter()
            .map(|&g| {
                let i = g.unsigned_abs() as usize;
                if i == 0 || i >= n {
                    return Err(DiagramError::Width { index: 0, msg: format!("generator {g} out of range for {n} strands") });
                }
                Ok(Event::Cross(i - 1, if g > 0 { Sign::Pos } else { Sign::Neg }))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(SliceWord::new(n, events)?, Some(vec![true; n]))
    }

    pub fn with_twists(mut self, twists: BTreeMap<usize, i32>) -> Self {
        twists.into_iter().filter(|(_, t)| *t != 0).for_each(|(c, t)| {
            self.twists.insert(c, t);
        });
        self
    }

    pub fn word(&self) -> &SliceWord {
        &self.word
    }

    pub fn events(&self) -> &[Event] {
        &self.word.events
    }

    pub fn width_in(&self) -> usize {
        self.word.width_in
    }

    pub fn width_out(&self) -> usize {
        self.word.width_out
    }

    pub fn orient(&self) -> Option<&[bool]> {
        self.orient.as_deref()
    }

    pub fn is_oriented(&self) -> bool {
        self.orient.is_some()
    }

    pub fn twists(&self) -> &BTreeMap<usize, i32> {
        &self.twists
    }

    pub fn is_closed(&self) -> bool {
        self.word.width_in == 0 && self.word.width_out == 0
    }

    pub fn bottom_flags(&self) -> Option<&[bool]> {
        self.orient.as_ref().map(|o| &o[..self.word.width_in])
    }

    pub fn top_flags(&self) -> Option<Vec<bool>> {
        self.level_flags().map(|r| r.expect("validated").pop().unwrap())
    }

    /// Segment directions at every level, or `None` when unoriented.
    pub fn level_flags(&self) -> Option<Result<Vec<Vec<bool>>, DiagramError>> {
        let o = self.orient.as_ref()?;
        let mut cur: Vec<bool> = o[..self.word.width_in].to_vec();
        let mut cups = o[self.word.width_in..].iter();
        let mut out = vec![cur.clone()];
        for (t, e) in self.word.events.iter().enumerate() {
            match *e {
                Event::Cup(i) => {
                    let f = *cups.next().expect("flag count checked");
                    cur.splice(i..i, [f, !f]);
                }
                Event::Cap(i) => {
                    if cur[i] == cur[i + 1] {
                        return Some(Err(DiagramError::Orientation(format!("cap at event {t} joins parallel strands"))));
                    }
                    cur.drain(i..i + 2);
                }
                Event::Cross(i, _) => cur.swap(i, i + 1),
            }
            out.push(cur.clone());
        }
        Some(Ok(out))
    }

    /// Oriented sign of each crossing in event order.
    pub fn crossing_signs(&self) -> Result<Vec<i32>, DiagramError> {
        let flags = self.level_flags().ok_or(DiagramError::Unoriented)??;
        Ok(self
            .word
            .events
            .iter()
            .enumerate()
            .filter_map(|(t, e)| match *e {
                Event::Cross(i, s) => Some(s.value() * if flags[t][i] == flags[t][i + 1] { 1 } else { -1 }),
                _ => None,
            })
            .collect())
    }

    /// Component index of every segment `(level, position)`, plus the kind of
    /// each component. Components with endpoints come first (bottom endpoints
    /// left to right, then top endpoints), closed ones by first occurrence.
    pub fn components(&self) -> (Vec<Vec<usize>>, Vec<ComponentKind>) {
        let widths = self.word.widths();
        let mut base = Vec::with_capacity(widths.len());
        let mut total = 0;
        for w in &widths {
            base.push(total);
            total += w;
        }
        let id = |t: usize, p: usize| base[t] + p;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        for (t, e) in self.word.events.iter().enumerate() {
            let w = widths[t];
            match *e {
                Event::Cup(i) => {
                    for p in 0..w {
                        union(id(t, p), id(t + 1, if p < i { p } else { p + 2 }));
                    }
                    union(id(t + 1, i), id(t + 1, i + 1));
                }
                Event::Cap(i) => {
                    for p in 0..w {
                        if p < i {
                            union(id(t, p), id(t + 1, p));
                        } else if p > i + 1 {
                            union(id(t, p), id(t + 1, p - 2));
                        }
                    }
                    union(id(t, i), id(t, i + 1));
                }
                Event::Cross(i, _) => {
                    for p in 0..w {
                        let q = if p == i { i + 1 } else if p == i + 1 { i } else { p };
                        union(id(t, p), id(t + 1, q));
                    }
                }
            }
        }
        let mut order: Vec<usize> = Vec::new();
        let mut kind_of_root: Vec<ComponentKind> = Vec::new();
        let last = widths.len() - 1;
        let ends = (0..widths[0]).map(|p| id(0, p)).chain((0..widths[last]).map(|p| id(last, p)));
        let rest = 0..total;
        for (x, kind) in ends.map(|x| (x, ComponentKind::Arc)).chain(rest.map(|x| (x, ComponentKind::Closed))) {
            let r = find(&mut parent, x);
            if !order.contains(&r) {
                order.push(r);
                kind_of_root.push(kind);
            }
        }
        let seg = widths
            .iter()
            .enumerate()
            .map(|(t, &w)| (0..w).map(|p| order.iter().position(|&r| r == find(&mut parent, id(t, p))).unwrap()).collect())
            .collect();
        (seg, kind_of_root)
    }

    pub fn component_count(&self) -> usize {
        self.components().1.len()
    }

    /// Signed crossing sum plus framing offsets.
    pub fn tait_number(&self) -> Result<i32, DiagramError> {
        Ok(self.crossing_signs()?.iter().sum::<i32>() + self.twists.values().sum::<i32>())
    }

    /// Sum of framing offsets (the bracket picks up `(-A^3)` per unit).
    pub fn total_twist(&self) -> i32 {
        self.twists.values().sum()
    }
}

/// Union-find with parity: `value(x) = value(root) ^ parity(x)`.
struct ParityUf {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUf {
    fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parity.push(false);
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (r, pp) = self.find(p);
        self.parent[x] = r;
        self.parity[x] ^= pp;
        (r, self.parity[x])
    }

    /// Imposes `value(a) ^ value(b) == rel`; false on contradiction.
    fn relate(&mut self, a: usize, b: usize, rel: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        self.parity[hi] = pa ^ pb ^ rel;
        true
    }
}

/// Finds orientation flags for `word` such that segment `(level, pos)` has
/// the given direction for every fixed triple. Unconstrained components are
/// oriented so that their first free flag points up.
pub fn solve_orientation(word: &SliceWord, fixed: &[(usize, usize, bool)]) -> Result<Vec<bool>, DiagramError> {
    let mut uf = ParityUf { parent: vec![], parity: vec![] };
    let truth = uf.add();
    let mut vars: Vec<usize> = (0..word.width_in).map(|_| uf.add()).collect();
    let mut cur: Vec<(usize, bool)> = vars.iter().map(|&v| (v, false)).collect();
    let mut by_level: BTreeMap<usize, Vec<(usize, bool)>> = BTreeMap::new();
    for &(t, p, f) in fixed {
        by_level.entry(t).or_default().push((p, f));
    }
    let clash = |what: &str| DiagramError::Orientation(format!("no consistent orientation ({what})"));
    let pin = |uf: &mut ParityUf, cur: &[(usize, bool)], t: usize| -> Result<(), DiagramError> {
        for &(p, f) in by_level.get(&t).map(Vec::as_slice).unwrap_or(&[]) {
            let (node, par) = *cur.get(p).ok_or_else(|| clash("fixed segment out of range"))?;
            if !uf.relate(node, truth, par ^ !f) {
                return Err(clash("fixed directions"));
            }
        }
        Ok(())
    };
    pin(&mut uf, &cur, 0)?;
    for (t, e) in word.events.iter().enumerate() {
        match *e {
            Event::Cup(i) => {
                let v = uf.add();
                vars.push(v);
                cur.splice(i..i, [(v, false), (v, true)]);
            }
            Event::Cap(i) => {
                let ((a, pa), (b, pb)) = (cur[i], cur[i + 1]);
                if !uf.relate(a, b, !(pa ^ pb)) {
                    return Err(clash("cap"));
                }
                cur.drain(i..i + 2);
            }
            Event::Cross(i, _) => cur.swap(i, i + 1),
        }
        pin(&mut uf, &cur, t + 1)?;
    }
    let mut chosen: BTreeMap<usize, bool> = BTreeMap::new();
    let (rt, pt) = uf.find(truth);
    chosen.insert(rt, !pt);
    Ok(vars
        .iter()
        .map(|&v| {
            let (r, p) = uf.find(v);
            let root_val = *chosen.entry(r).or_insert(!p);
            root_val ^ p
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_bookkeeping() {
        assert!(SliceWord::new(0, vec![Event::Cup(0), Event::Cross(0, Sign::Pos), Event::Cap(0)]).is_ok());
        assert!(SliceWord::new(1, vec![Event::Cap(0)]).is_err());
        assert!(SliceWord::new(0, vec![Event::Cup(1)]).is_err());
        assert_eq!(SliceWord::new(2, vec![Event::Cup(2)]).unwrap().width_out(), 4);
    }

    #[test]
    fn cap_needs_opposite_flags() {
        let w = SliceWord::new(2, vec![Event::Cap(0)]).unwrap();
        assert!(TangleDiagram::new(w.clone(), Some(vec![true, false])).is_ok());
        assert!(TangleDiagram::new(w, Some(vec![true, true])).is_err());
    }

    #[test]
    fn components_of_closed_braid() {
        let d = TangleDiagram::from_braid(2, &[1, 1]).unwrap();
        let (_, kinds) = d.components();
        assert_eq!(kinds, vec![ComponentKind::Arc, ComponentKind::Arc]);
        let d = TangleDiagram::from_braid(2, &[1]).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.closure(&Closure::Trace).unwrap().component_count(), 1);
        assert_eq!(d.crossing_signs().unwrap(), vec![1]);
    }
}
