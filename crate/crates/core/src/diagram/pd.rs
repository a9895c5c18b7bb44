//! Planar-diagram (PD) code import.
//!
//! A PD crossing lists its four edge labels counterclockwise starting from
//! the incoming under-strand. The importer sweeps the crossings bottom to
//! top, keeping a frontier of open strands, and emits cups, crossings and
//! caps. When the only reachable crossing wraps around the ends of the
//! frontier, the rightmost strand is swung over everything to the left end,
//! which is an isotopy.

use std::collections::BTreeMap;

use super::{DiagramError, Event, Sign, SliceWord, TangleDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    crossing: usize,
    k: usize,
}

/// An open strand: the edge it lies on and the unprocessed slot it heads to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Entry {
    edge: usize,
    to: Slot,
}

struct Pd {
    x: Vec<[usize; 4]>,
    ends: BTreeMap<usize, Vec<Slot>>,
    incoming: Vec<[bool; 4]>,
}

impl Pd {
    fn new(code: &[[usize; 4]]) -> Result<Self, DiagramError> {
        let mut ends: BTreeMap<usize, Vec<Slot>> = BTreeMap::new();
        for (c, x) in code.iter().enumerate() {
            for (k, &e) in x.iter().enumerate() {
                ends.entry(e).or_default().push(Slot { crossing: c, k });
            }
        }
        if let Some((e, _)) = ends.iter().find(|(_, v)| v.len() != 2) {
            return Err(DiagramError::Pd(format!("edge {e} does not occur exactly twice")));
        }
        let mut pd = Pd { x: code.to_vec(), ends, incoming: vec![[false; 4]; code.len()] };
        pd.orient_edges()?;
        Ok(pd)
    }

    fn other(&self, s: Slot) -> Slot {
        let e = self.x[s.crossing][s.k];
        let v = &self.ends[&e];
        if v[0] == s {
            v[1]
        } else {
            v[0]
        }
    }

    /// Slot reached by continuing straight through the crossing.
    fn across(s: Slot) -> Slot {
        Slot { crossing: s.crossing, k: (s.k + 2) % 4 }
    }

    /// Orients each component along the under-strand data; components that
    /// never pass under follow increasing labels.
    fn orient_edges(&mut self) -> Result<(), DiagramError> {
        let n = self.x.len();
        let mut seen = vec![[false; 4]; n];
        for c0 in 0..n {
            for k0 in 0..4 {
                if seen[c0][k0] {
                    continue;
                }
                // walk the component: enter at a slot, leave across, follow the edge
                let mut walk = vec![];
                let mut s = Slot { crossing: c0, k: k0 };
                loop {
                    walk.push(s);
                    let out = Self::across(s);
                    walk.push(out);
                    s = self.other(out);
                    if s == (Slot { crossing: c0, k: k0 }) {
                        break;
                    }
                    if walk.len() > 8 * n {
                        return Err(DiagramError::Pd("malformed component".into()));
                    }
                }
                // walk alternates entered slot, exited slot
                let forward = match walk.iter().position(|s| s.k == 0 || s.k == 2) {
                    Some(i) => (i % 2 == 0) == (walk[i].k == 0),
                    None => {
                        let labels: Vec<usize> = walk.iter().step_by(2).map(|s| self.x[s.crossing][s.k]).collect();
                        let ups = labels.windows(2).filter(|w| w[1] > w[0]).count();
                        2 * ups >= labels.len().saturating_sub(1)
                    }
                };
                for (i, s) in walk.iter().enumerate() {
                    seen[s.crossing][s.k] = true;
                    self.incoming[s.crossing][s.k] = (i % 2 == 0) == forward;
                }
            }
        }
        for (c, inc) in self.incoming.iter().enumerate() {
            if !inc[0] || inc[2] || inc[1] == inc[3] {
                return Err(DiagramError::Pd(format!("crossing {c} has inconsistent orientation")));
            }
        }
        Ok(())
    }
}

struct Sweep<'a> {
    pd: &'a Pd,
    frontier: Vec<Entry>,
    events: Vec<Event>,
    cup_flags: Vec<bool>,
    done: Vec<bool>,
}

impl<'a> Sweep<'a> {
    fn entry_from(&self, s: Slot) -> Entry {
        Entry { edge: self.pd.x[s.crossing][s.k], to: self.pd.other(s) }
    }

    fn flag(&self, e: Entry) -> bool {
        self.pd.incoming[e.to.crossing][e.to.k]
    }

    fn cup(&mut self, p: usize, left: Entry, right: Entry) {
        self.events.push(Event::Cup(p));
        self.cup_flags.push(self.flag(left));
        self.frontier.splice(p..p, [left, right]);
    }

    fn cap_adjacent(&mut self) {
        let mut p = 0;
        while p + 1 < self.frontier.len() {
            if self.frontier[p].edge == self.frontier[p + 1].edge {
                self.events.push(Event::Cap(p));
                self.frontier.drain(p..p + 2);
                p = p.saturating_sub(1);
            } else {
                p += 1;
            }
        }
    }

    /// Present entries of crossing `c`: `(frontier position, slot)` sorted by
    /// position.
    fn present(&self, c: usize) -> Vec<(usize, usize)> {
        self.frontier.iter().enumerate().filter(|(_, e)| e.to.crossing == c).map(|(p, e)| (p, e.to.k)).collect()
    }

    /// Start slot if the present entries form a run of consecutive positions
    /// whose slots increase counterclockwise.
    fn linear_run(pres: &[(usize, usize)]) -> Option<usize> {
        let ok = pres.windows(2).all(|w| w[1].0 == w[0].0 + 1 && w[1].1 == (w[0].1 + 1) % 4);
        (ok && !pres.is_empty()).then(|| pres[0].1)
    }

    /// Number of right-end strands to swing left so that the run of `c`
    /// becomes linear.
    fn wrap_shift(&self, pres: &[(usize, usize)]) -> Option<usize> {
        let w = self.frontier.len();
        for cut in 1..pres.len() {
            let (head, tail) = pres.split_at(cut);
            let shift = w - tail[0].0;
            let moved: Vec<(usize, usize)> = tail
                .iter()
                .map(|&(p, k)| (p + shift - w, k))
                .chain(head.iter().map(|&(p, k)| (p + shift, k)))
                .collect();
            if Self::linear_run(&moved).is_some() {
                return Some(shift);
            }
        }
        None
    }

    fn swing_left(&mut self) {
        let w = self.frontier.len();
        for i in (0..w - 1).rev() {
            self.events.push(Event::Cross(i, Sign::Neg));
            self.frontier.swap(i, i + 1);
        }
    }

    fn process(&mut self, c: usize, p: usize, s: usize, j: usize) {
        let slot = |k: usize| Slot { crossing: c, k: k % 4 };
        if j == 1 {
            let e = self.entry_from(slot(s + 1));
            let back = Entry { edge: e.edge, to: slot(s + 1) };
            self.cup(p + 1, back, e);
        }
        let sign = if s % 2 == 1 { Sign::Pos } else { Sign::Neg };
        self.events.push(Event::Cross(p, sign));
        self.frontier[p] = self.entry_from(slot(s + 3));
        self.frontier[p + 1] = self.entry_from(slot(s + 2));
        self.done[c] = true;
        self.cap_adjacent();
    }

    fn run(&mut self) -> Result<(), DiagramError> {
        let n = self.pd.x.len();
        while self.done.iter().any(|d| !d) {
            if self.frontier.is_empty() {
                let c = self.done.iter().position(|d| !d).unwrap();
                let s0 = Slot { crossing: c, k: 0 };
                let e = self.entry_from(s0);
                let w = self.frontier.len();
                self.cup(w, e, Entry { edge: e.edge, to: s0 });
                continue;
            }
            let mut best: Option<(usize, usize, usize, usize)> = None;
            let mut wrap: Option<(usize, usize)> = None;
            for c in (0..n).filter(|&c| !self.done[c]) {
                let pres = self.present(c);
                if pres.is_empty() {
                    continue;
                }
                match Self::linear_run(&pres) {
                    Some(s) => {
                        let j = pres.len();
                        if best.is_none_or(|b| j > b.3) {
                            best = Some((c, pres[0].0, s, j));
                        }
                    }
                    None => {
                        if let Some(shift) = self.wrap_shift(&pres) {
                            if wrap.is_none_or(|w| shift < w.1) {
                                wrap = Some((c, shift));
                            }
                        }
                    }
                }
            }
            if let Some((c, p, s, j)) = best {
                self.process(c, p, s, j);
            } else if let Some((_, shift)) = wrap {
                for _ in 0..shift {
                    self.swing_left();
                }
            } else {
                return Err(DiagramError::Pd("sweep is stuck; the code is not planar".into()));
            }
        }
        if !self.frontier.is_empty() {
            return Err(DiagramError::Pd("open strands remain".into()));
        }
        Ok(())
    }
}

/// Converts a PD code to a closed oriented diagram.
pub fn from_pd(code: &[[usize; 4]]) -> Result<TangleDiagram, DiagramError> {
    let pd = Pd::new(code)?;
    let mut sw = Sweep { pd: &pd, frontier: vec![], events: vec![], cup_flags: vec![], done: vec![false; code.len()] };
    sw.run()?;
    let word = SliceWord::new(0, sw.events)?;
    TangleDiagram::new(word, Some(sw.cup_flags))
}
