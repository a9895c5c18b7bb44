//! Crossing graphs for skein-tree evaluation.
//!
//! Each crossing lists four edge labels counterclockwise; slots 0 and 2 are
//! the under-strand, 1 and 3 the over-strand. For oriented graphs slot 0 is
//! the incoming under-strand and `pos[k]` says the over-strand leaves
//! through slot 1 (a positive crossing).

use std::collections::HashMap;

use crate::diagram::{DiagramError, Event, Sign, TangleDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Pd {
    pub x: Vec<[u32; 4]>,
    /// Empty for unoriented graphs.
    pub pos: Vec<bool>,
    pub oriented: bool,
    /// Crossingless circles.
    pub loops: u32,
}

struct Uf(Vec<u32>);

impl Uf {
    fn find(&mut self, a: u32) -> u32 {
        let mut r = a;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut a = a;
        while self.0[a as usize] != r {
            let n = self.0[a as usize];
            self.0[a as usize] = r;
            a = n;
        }
        r
    }

    /// Returns false when `a` and `b` were already joined.
    fn join(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb) as usize] = ra.min(rb);
        true
    }
}

/// Sign of the crossing whose slots are given in screen positions
/// (bottom-left, bottom-right, top-right, top-left), as a ccw list from the
/// incoming under slot.
fn layout(sign: Sign, under_up: bool) -> [usize; 4] {
    // 0 = BL, 1 = BR, 2 = TR, 3 = TL
    match (sign, under_up) {
        (Sign::Pos, true) => [1, 2, 3, 0],
        (Sign::Pos, false) => [3, 0, 1, 2],
        (Sign::Neg, true) => [0, 1, 2, 3],
        (Sign::Neg, false) => [2, 3, 0, 1],
    }
}

impl Pd {
    /// Builds the crossing graph of a closed diagram.
    pub fn from_tangle(d: &TangleDiagram, oriented: bool) -> Result<Pd, DiagramError> {
        if !d.is_closed() {
            return Err(DiagramError::NotClosed);
        }
        let flags = if oriented { Some(d.level_flags().ok_or(DiagramError::Unoriented)??) } else { None };
        let widths = d.word().widths();
        let mut base = vec![0usize];
        for w in &widths {
            base.push(base.last().unwrap() + w);
        }
        let mut uf = Uf((0..*base.last().unwrap() as u32).collect());
        let id = |l: usize, p: usize| (base[l] + p) as u32;
        let mut xs = vec![];
        for (t, e) in d.events().iter().enumerate() {
            let w = widths[t];
            match *e {
                Event::Cup(i) => {
                    for p in 0..w {
                        uf.join(id(t, p), id(t + 1, if p < i { p } else { p + 2 }));
                    }
                    uf.join(id(t + 1, i), id(t + 1, i + 1));
                }
                Event::Cap(i) => {
                    for p in (0..w).filter(|&p| p != i && p != i + 1) {
                        uf.join(id(t, p), id(t + 1, if p < i { p } else { p - 2 }));
                    }
                    uf.join(id(t, i), id(t, i + 1));
                }
                Event::Cross(i, s) => {
                    for p in (0..w).filter(|&p| p != i && p != i + 1) {
                        uf.join(id(t, p), id(t + 1, p));
                    }
                    let screen = [id(t, i), id(t, i + 1), id(t + 1, i + 1), id(t + 1, i)];
                    // the under-strand starts bottom-right for a positive label
                    let (under_up, over_out_tr) = match &flags {
                        Some(f) => {
                            let (ub, ob) = if s == Sign::Pos { (i + 1, i) } else { (i, i + 1) };
                            (f[t][ub], f[t][ob])
                        }
                        None => (true, true),
                    };
                    let lay = layout(s, under_up);
                    let slots = lay.map(|k| screen[k]);
                    // over-strand exit in screen terms
                    let exit = match (s, over_out_tr) {
                        (Sign::Pos, true) => 2,
                        (Sign::Pos, false) => 0,
                        (Sign::Neg, true) => 3,
                        (Sign::Neg, false) => 1,
                    };
                    xs.push((slots, lay[1] == exit));
                }
            }
        }
        let mut used: HashMap<u32, u32> = HashMap::new();
        let mut x = Vec::with_capacity(xs.len());
        let mut pos = vec![];
        for (slots, p) in xs {
            let mut c = [0u32; 4];
            for (k, &s) in slots.iter().enumerate() {
                let r = uf.find(s);
                let n = used.len() as u32;
                c[k] = *used.entry(r).or_insert(n);
            }
            x.push(c);
            if oriented {
                pos.push(p);
            }
        }
        // classes never touched by a crossing are whole crossingless circles
        let mut roots: Vec<u32> = (0..*base.last().unwrap() as u32).map(|s| uf.find(s)).collect();
        roots.sort_unstable();
        roots.dedup();
        let loops = roots.iter().filter(|r| !used.contains_key(r)).count() as u32;
        Ok(Pd { x, pos, oriented, loops })
    }

    pub fn crossings(&self) -> usize {
        self.x.len()
    }

    fn max_label(&self) -> u32 {
        self.x.iter().flat_map(|c| c.iter().copied()).max().map_or(0, |m| m + 1)
    }

    /// Removes the listed crossings and joins edge pairs; returns the new
    /// graph with compact labels.
    pub fn remove(&self, ks: &[usize], joins: &[(u32, u32)]) -> Pd {
        let mut uf = Uf((0..self.max_label()).collect());
        let mut loops = self.loops;
        for &(a, b) in joins {
            if !uf.join(a, b) {
                loops += 1;
            }
        }
        let mut x = Vec::with_capacity(self.x.len() - ks.len());
        let mut pos = vec![];
        for (k, c) in self.x.iter().enumerate() {
            if ks.contains(&k) {
                continue;
            }
            x.push(c.map(|e| uf.find(e)));
            if self.oriented {
                pos.push(self.pos[k]);
            }
        }
        let mut pd = Pd { x, pos, oriented: self.oriented, loops };
        pd.compact();
        pd
    }

    fn compact(&mut self) {
        let mut map: HashMap<u32, u32> = HashMap::new();
        for c in &mut self.x {
            for e in c.iter_mut() {
                let n = map.len() as u32;
                *e = *map.entry(*e).or_insert(n);
            }
        }
    }

    /// Replaces crossing `k` by the smoothing joining slot pairs `(p, q)`
    /// and `(r, s)`.
    pub fn smooth(&self, k: usize, pairs: [(usize, usize); 2]) -> Pd {
        let c = self.x[k];
        self.remove(&[k], &[(c[pairs[0].0], c[pairs[0].1]), (c[pairs[1].0], c[pairs[1].1])])
    }

    /// The oriented smoothing.
    pub fn smooth_oriented(&self, k: usize) -> Pd {
        if self.pos[k] {
            self.smooth(k, [(0, 1), (2, 3)])
        } else {
            self.smooth(k, [(0, 3), (1, 2)])
        }
    }

    pub fn switch(&mut self, k: usize) {
        let c = self.x[k];
        if self.oriented {
            if self.pos[k] {
                self.x[k] = [c[3], c[0], c[1], c[2]];
            } else {
                self.x[k] = [c[1], c[2], c[3], c[0]];
            }
            self.pos[k] = !self.pos[k];
        } else {
            self.x[k] = [c[1], c[2], c[3], c[0]];
        }
    }

    /// `(crossing, slot)` pairs for each edge label.
    fn ends(&self) -> Vec<[(u32, u8); 2]> {
        let mut ends = vec![[(u32::MAX, 0u8); 2]; self.max_label() as usize];
        for (k, c) in self.x.iter().enumerate() {
            for (s, &e) in c.iter().enumerate() {
                let slot = &mut ends[e as usize];
                if slot[0].0 == u32::MAX {
                    slot[0] = (k as u32, s as u8);
                } else {
                    slot[1] = (k as u32, s as u8);
                }
            }
        }
        ends
    }

    /// One Reidemeister I or II reduction; returns the framing change of a
    /// removed kink (0 for R2), or `None` if nothing applies.
    pub fn reduce_once(&self) -> Option<(Pd, i32)> {
        for (k, c) in self.x.iter().enumerate() {
            for s in 0..4 {
                if c[s] == c[(s + 1) % 4] {
                    let sign = if s % 2 == 0 { 1 } else { -1 };
                    let pd = self.remove(&[k], &[(c[(s + 2) % 4], c[(s + 3) % 4])]);
                    return Some((pd, sign));
                }
            }
        }
        let ends = self.ends();
        for (k1, c) in self.x.iter().enumerate() {
            for a in 0..4 {
                let e = c[a];
                let f = c[(a + 1) % 4];
                let other = |edge: u32, k: usize, s: usize| {
                    let [p, q] = ends[edge as usize];
                    if p == (k as u32, s as u8) {
                        q
                    } else {
                        p
                    }
                };
                let (k2, b) = other(e, k1, a);
                let (k2f, bf) = other(f, k1, (a + 1) % 4);
                let (k2, b) = (k2 as usize, b as usize);
                if k2 == k1 || k2f as usize != k2 || bf as usize != (b + 3) % 4 || a % 2 != b % 2 {
                    continue;
                }
                let c2 = self.x[k2];
                let joins = [(c[(a + 2) % 4], c2[(b + 2) % 4]), (c[(a + 3) % 4], c2[(b + 1) % 4])];
                return Some((self.remove(&[k1, k2], &joins), 0));
            }
        }
        None
    }

    /// Splits into crossing-connected parts (each with no loops).
    pub fn split(&self) -> Vec<Pd> {
        let n = self.x.len();
        let mut uf = Uf((0..n as u32).collect());
        let ends = self.ends();
        for [p, q] in &ends {
            if p.0 != u32::MAX && q.0 != u32::MAX {
                uf.join(p.0, q.0);
            }
        }
        let mut groups: HashMap<u32, Vec<usize>> = HashMap::new();
        for k in 0..n {
            groups.entry(uf.find(k as u32)).or_default().push(k);
        }
        let mut parts: Vec<Vec<usize>> = groups.into_values().collect();
        parts.sort();
        parts
            .into_iter()
            .map(|ks| {
                let mut pd = Pd {
                    x: ks.iter().map(|&k| self.x[k]).collect(),
                    pos: if self.oriented { ks.iter().map(|&k| self.pos[k]).collect() } else { vec![] },
                    oriented: self.oriented,
                    loops: 0,
                };
                pd.compact();
                pd
            })
            .collect()
    }

    fn incoming(&self, k: usize, s: usize) -> bool {
        match s {
            0 => true,
            2 => false,
            1 => !self.pos[k],
            _ => self.pos[k],
        }
    }

    /// Walks every component of a connected graph from `(k0, s0)`.
    /// Returns visits `(crossing, entry slot)` in order, the number of
    /// cycles, and the relabelling orders used for canonical forms.
    pub fn walk(&self, k0: usize, s0: usize) -> Walk {
        let n = self.x.len();
        let ends = self.ends();
        let mut rot = vec![u8::MAX; n];
        let mut seen = vec![[false; 4]; n];
        let mut order = vec![];
        let mut visits = vec![];
        let mut cycles = 0;
        let mut start = Some((k0, s0));
        let mut next_check = 0;
        while let Some((ks, ss)) = start {
            cycles += 1;
            let (mut k, mut s) = (ks, ss);
            loop {
                if rot[k] == u8::MAX {
                    rot[k] = if self.oriented || s < 2 { 0 } else { 2 };
                    order.push(k);
                }
                seen[k][s] = true;
                seen[k][(s + 2) % 4] = true;
                visits.push((k, s));
                let out = (s + 2) % 4;
                let e = self.x[k][out];
                let [p, q] = ends[e as usize];
                let (nk, ns) = if p == (k as u32, out as u8) { q } else { p };
                k = nk as usize;
                s = ns as usize;
                if (k, s) == (ks, ss) {
                    break;
                }
            }
            start = None;
            while next_check < order.len() {
                let k = order[next_check];
                let free = (0..4).find(|&t| !seen[k][t]);
                if let Some(t) = free {
                    // enter the free strand at its incoming (or lower normalized) slot
                    let cands = [t, (t + 2) % 4];
                    let s = if self.oriented {
                        *cands.iter().find(|&&c| self.incoming(k, c)).unwrap()
                    } else {
                        *cands.iter().min_by_key(|&&c| (c + 4 - rot[k] as usize) % 4).unwrap()
                    };
                    start = Some((k, s));
                    break;
                }
                next_check += 1;
            }
        }
        Walk { visits, cycles, order, rot }
    }

    /// Canonical relabelling of a connected graph; the walk of the result
    /// from `(0, start)` is the canonical walk.
    pub fn canonical(&self) -> (Pd, usize) {
        let n = self.x.len();
        let mut best: Option<(Vec<u32>, Pd, usize)> = None;
        for k in 0..n {
            for s in 0..4 {
                if self.oriented && !self.incoming(k, s) {
                    continue;
                }
                let w = self.walk(k, s);
                let mut cmap = vec![0usize; n];
                for (i, &c) in w.order.iter().enumerate() {
                    cmap[c] = i;
                }
                let mut emap: HashMap<u32, u32> = HashMap::new();
                for &(c, es) in &w.visits {
                    for t in [es, (es + 2) % 4] {
                        let e = self.x[c][t];
                        let l = emap.len() as u32;
                        emap.entry(e).or_insert(l);
                    }
                }
                let mut x = vec![[0u32; 4]; n];
                let mut pos = vec![false; if self.oriented { n } else { 0 }];
                for c in 0..n {
                    let r = w.rot[c] as usize;
                    let old = self.x[c];
                    x[cmap[c]] = std::array::from_fn(|t| emap[&old[(t + r) % 4]]);
                    if self.oriented {
                        pos[cmap[c]] = self.pos[c];
                    }
                }
                let start = (s + 4 - w.rot[k] as usize) % 4;
                let mut key: Vec<u32> = Vec::with_capacity(5 * n + 1);
                key.push(start as u32);
                for (c, xc) in x.iter().enumerate() {
                    key.extend_from_slice(xc);
                    if self.oriented {
                        key.push(pos[c] as u32);
                    }
                }
                if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
                    best = Some((key, Pd { x, pos, oriented: self.oriented, loops: 0 }, start));
                }
            }
        }
        let (_, pd, start) = best.expect("non-empty graph");
        (pd, start)
    }

    /// Crossings first met from below along the walk, in walk order.
    pub fn violations(&self, walk: &Walk) -> Vec<usize> {
        let mut seen = vec![false; self.x.len()];
        let mut out = vec![];
        for &(k, s) in &walk.visits {
            if !seen[k] {
                seen[k] = true;
                if s % 2 == 0 {
                    out.push(k);
                }
            }
        }
        out
    }

    /// Crossing signs with every cycle oriented along the walk.
    pub fn walk_signs(&self, walk: &Walk) -> Vec<i32> {
        let n = self.x.len();
        let mut under = vec![0usize; n];
        let mut over = vec![0usize; n];
        for &(k, s) in &walk.visits {
            if s % 2 == 0 {
                under[k] = s;
            } else {
                over[k] = s;
            }
        }
        (0..n).map(|k| if (under[k] == 0) == (over[k] == 3) { 1 } else { -1 }).collect()
    }

    #[cfg(test)]
    pub fn writhe(&self) -> i32 {
        self.pos.iter().map(|&p| if p { 1 } else { -1 }).sum()
    }
}

pub(crate) struct Walk {
    pub visits: Vec<(usize, usize)>,
    pub cycles: usize,
    order: Vec<usize>,
    rot: Vec<u8>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_graph() {
        let d = TangleDiagram::from_braid(2, &[1, 1, 1]).unwrap().closure(&crate::diagram::Closure::Trace).unwrap();
        let pd = Pd::from_tangle(&d, true).unwrap();
        assert_eq!(pd.crossings(), 3);
        assert_eq!(pd.writhe(), 3);
        assert_eq!(pd.loops, 0);
        let (c, s) = pd.canonical();
        assert_eq!(c.walk(0, s).cycles, 1);
        assert!(pd.reduce_once().is_none());
    }

    #[test]
    fn kink_and_bigon_reduce() {
        let kink = TangleDiagram::from_events(0, vec![Event::Cup(0), Event::Cup(1), Event::Cross(0, Sign::Pos), Event::Cap(1), Event::Cap(0)]).unwrap();
        let pd = Pd::from_tangle(&kink, false).unwrap();
        let (r, w) = pd.reduce_once().unwrap();
        assert_eq!((r.crossings(), r.loops, w), (0, 1, 1));
        let r2 = TangleDiagram::from_braid(2, &[1, -1]).unwrap().closure(&crate::diagram::Closure::Trace).unwrap();
        let pd = Pd::from_tangle(&r2, true).unwrap();
        let (r, w) = pd.reduce_once().unwrap();
        assert_eq!((r.crossings(), r.loops, w), (0, 2, 0));
        // a clasp is not a removable bigon
        let hopf = TangleDiagram::from_braid(2, &[1, 1]).unwrap().closure(&crate::diagram::Closure::Trace).unwrap();
        assert!(Pd::from_tangle(&hopf, true).unwrap().reduce_once().is_none());
    }
}
