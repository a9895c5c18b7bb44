use std::collections::BTreeMap;

use super::{DiagramError, Event, Sign, SliceWord, TangleDiagram};

/// The three π-rotations of a tangle box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Bottom point `i` joined to top point `i` around the right-hand side.
    Trace,
    /// Adjacent pairs `(2k, 2k+1)` capped off at both ends.
    Plat,
    /// Explicit caps below (`0 -> n`) and above (`m -> 0`).
    Custom { below: SliceWord, above: SliceWord },
}

impl TangleDiagram {
    /// Adds the framing offsets of `src`, locating each component through a
    /// segment map `(level, pos) -> (level, pos)` into `self`.
    fn carry_twists(&mut self, src: &TangleDiagram, map: impl Fn(usize, usize) -> (usize, usize)) {
        if src.twists.is_empty() {
            return;
        }
        let (sseg, _) = src.components();
        let (dseg, _) = self.components();
        for (&c, &tw) in &src.twists {
            let (t, p) = sseg
                .iter()
                .enumerate()
                .find_map(|(t, row)| row.iter().position(|&x| x == c).map(|p| (t, p)))
                .expect("twisted component exists");
            let (t2, p2) = map(t, p);
            *self.twists.entry(dseg[t2][p2]).or_insert(0) += tw;
        }
        self.twists.retain(|_, v| *v != 0);
    }

    /// Stacks `top` above `self`.
    pub fn compose(&self, top: &TangleDiagram) -> Result<TangleDiagram, DiagramError> {
        if self.width_out() != top.width_in() {
            return Err(DiagramError::Arity(self.width_out(), top.width_in()));
        }
        let orient = match (self.top_flags(), &top.orient) {
            (Some(f), Some(o)) => {
                if f[..] != o[..top.width_in()] {
                    return Err(DiagramError::Orientation("composed endpoints disagree".into()));
                }
                let mut o2 = self.orient.clone().unwrap();
                o2.extend_from_slice(&o[top.width_in()..]);
                Some(o2)
            }
            _ => None,
        };
        let mut events = self.word.events.clone();
        events.extend_from_slice(&top.word.events);
        let word = SliceWord { width_in: self.width_in(), events, width_out: top.width_out() };
        let mut d = TangleDiagram { word, orient, twists: BTreeMap::new() };
        let off = self.word.events.len();
        d.carry_twists(self, |t, p| (t, p));
        d.carry_twists(top, |t, p| (t + off, p));
        Ok(d)
    }

    /// Juxtaposes `right` to the right of `self`.
    pub fn tensor(&self, right: &TangleDiagram) -> TangleDiagram {
        let shift = self.width_out();
        let mut events = self.word.events.clone();
        events.extend(right.word.events.iter().map(|e| match *e {
            Event::Cup(i) => Event::Cup(i + shift),
            Event::Cap(i) => Event::Cap(i + shift),
            Event::Cross(i, s) => Event::Cross(i + shift, s),
        }));
        let orient = match (&self.orient, &right.orient) {
            (Some(a), Some(b)) => {
                let (wa, wb) = (self.width_in(), right.width_in());
                let mut o = a[..wa].to_vec();
                o.extend_from_slice(&b[..wb]);
                o.extend_from_slice(&a[wa..]);
                o.extend_from_slice(&b[wb..]);
                Some(o)
            }
            _ => None,
        };
        let word = SliceWord {
            width_in: self.width_in() + right.width_in(),
            events,
            width_out: self.width_out() + right.width_out(),
        };
        let mut d = TangleDiagram { word, orient, twists: BTreeMap::new() };
        let la = self.word.events.len();
        d.carry_twists(self, |t, p| (t, p));
        d.carry_twists(right, |t, p| if t == 0 { (0, p + self.width_in()) } else { (t + la, p + shift) });
        d
    }

    /// `self` on strands `i..i+k` of `n` upward-oriented (if oriented) strands.
    pub fn place_at(&self, i: usize, n: usize) -> Result<TangleDiagram, DiagramError> {
        let k = self.width_in();
        if i + k > n || self.width_out() != k {
            return Err(DiagramError::Placement { k, i, n });
        }
        let up = |m: usize| self.orient.as_ref().map(|_| vec![true; m]);
        let left = TangleDiagram::identity(i, up(i))?;
        let right = TangleDiagram::identity(n - i - k, up(n - i - k))?;
        Ok(left.tensor(self).tensor(&right))
    }

    pub fn rotate(&self, axis: Axis) -> Result<TangleDiagram, DiagramError> {
        if axis != Axis::Y && self.width_in() != self.width_out() {
            return Err(DiagramError::Arity(self.width_in(), self.width_out()));
        }
        let widths = self.word.widths();
        let len = self.word.events.len();
        let mut events = Vec::with_capacity(len);
        let order: Box<dyn Iterator<Item = usize>> = if axis == Axis::Y { Box::new(0..len) } else { Box::new((0..len).rev()) };
        for t in order {
            let w = widths[t];
            let e = self.word.events[t];
            events.push(match (axis, e) {
                (Axis::Z, Event::Cup(i)) => Event::Cap(w - i),
                (Axis::Z, Event::Cap(i)) => Event::Cup(w - 2 - i),
                (Axis::Y, Event::Cup(i)) => Event::Cup(w - i),
                (Axis::Y, Event::Cap(i)) => Event::Cap(w - 2 - i),
                (Axis::Z | Axis::Y, Event::Cross(i, s)) => Event::Cross(w - 2 - i, s),
                (Axis::X, Event::Cup(i)) => Event::Cap(i),
                (Axis::X, Event::Cap(i)) => Event::Cup(i),
                (Axis::X, Event::Cross(i, s)) => Event::Cross(i, s),
            });
        }
        let (wi, wo) = if axis == Axis::Y { (self.width_in(), self.width_out()) } else { (self.width_out(), self.width_in()) };
        let word = SliceWord { width_in: wi, events, width_out: wo };
        let nw = word.widths();
        // new segment -> old segment
        let back = |t: usize, p: usize| -> (usize, usize) {
            match axis {
                Axis::Z => (len - t, nw[t] - 1 - p),
                Axis::Y => (t, nw[t] - 1 - p),
                Axis::X => (len - t, p),
            }
        };
        // old segment -> new segment
        let fwd = |t: usize, p: usize| -> (usize, usize) {
            match axis {
                Axis::Z => (len - t, widths[t] - 1 - p),
                Axis::Y => (t, widths[t] - 1 - p),
                Axis::X => (len - t, p),
            }
        };
        let negate = axis != Axis::Y;
        let orient = match self.level_flags() {
            Some(f) => {
                let f = f?;
                let flag = |t2: usize, p2: usize| {
                    let (t, p) = back(t2, p2);
                    f[t][p] ^ negate
                };
                let mut o: Vec<bool> = (0..wi).map(|p| flag(0, p)).collect();
                for (t2, e) in word.events.iter().enumerate() {
                    if let Event::Cup(i) = *e {
                        o.push(flag(t2 + 1, i));
                    }
                }
                Some(o)
            }
            None => None,
        };
        let mut d = TangleDiagram { word, orient, twists: BTreeMap::new() };
        d.carry_twists(self, fwd);
        Ok(d)
    }

    pub fn reverse_orientation(&self) -> TangleDiagram {
        let mut d = self.clone();
        if let Some(o) = &mut d.orient {
            o.iter_mut().for_each(|f| *f = !*f);
        }
        d
    }

    /// Mirror image: every crossing and framing offset changes sign.
    pub fn mirror(&self) -> TangleDiagram {
        let mut d = self.clone();
        for e in &mut d.word.events {
            if let Event::Cross(i, s) = *e {
                *e = Event::Cross(i, s.flip());
            }
        }
        d.twists.values_mut().for_each(|v| *v = -*v);
        d
    }

    pub fn closure(&self, mode: &Closure) -> Result<TangleDiagram, DiagramError> {
        let (n, m) = (self.width_in(), self.width_out());
        let (below, above) = match mode {
            Closure::Trace => {
                if m != n {
                    return Err(DiagramError::Arity(n, m));
                }
                (SliceWord::new(0, (0..n).map(Event::Cup).collect())?, SliceWord::new(2 * n, (0..n).rev().map(Event::Cap).collect())?)
            }
            Closure::Plat => {
                if n % 2 == 1 || m % 2 == 1 {
                    return Err(DiagramError::Arity(n, m));
                }
                (SliceWord::new(0, (0..n / 2).map(|k| Event::Cup(2 * k)).collect())?, SliceWord::new(m, vec![Event::Cap(0); m / 2])?)
            }
            Closure::Custom { below, above } => {
                if below.width_in() != 0 || above.width_out() != 0 {
                    return Err(DiagramError::NotClosed);
                }
                (below.clone(), above.clone())
            }
        };
        if below.width_out() < n || above.width_in() != below.width_out() - n + m {
            return Err(DiagramError::Arity(below.width_out(), above.width_in()));
        }
        let off = below.events().len();
        let mut events = below.events.clone();
        events.extend_from_slice(&self.word.events);
        events.extend_from_slice(&above.events);
        let word = SliceWord::new(0, events)?;
        let orient = match self.level_flags() {
            Some(f) => {
                let f = f?;
                let fixed: Vec<(usize, usize, bool)> = f.iter().enumerate().flat_map(|(t, row)| row.iter().enumerate().map(move |(p, &v)| (t + off, p, v))).collect();
                Some(super::solve_orientation(&word, &fixed)?)
            }
            None => None,
        };
        let mut d = TangleDiagram { word, orient, twists: BTreeMap::new() };
        d.carry_twists(self, |t, p| (t + off, p));
        Ok(d)
    }

    /// Replaces framing offsets by explicit kinks, one per unit of twist.
    pub fn materialize_twists(&self) -> TangleDiagram {
        let mut d = TangleDiagram { word: self.word.clone(), orient: self.orient.clone(), twists: BTreeMap::new() };
        let (seg, _) = self.components();
        for (&c, &tw) in self.twists.iter().rev() {
            let (t, p) = seg
                .iter()
                .enumerate()
                .find_map(|(t, row)| row.iter().position(|&x| x == c).map(|p| (t, p)))
                .expect("twisted component exists");
            let sign = if tw > 0 { Sign::Pos } else { Sign::Neg };
            let flag = d.level_flags().map(|f| f.expect("valid")[t][p]);
            for _ in 0..tw.unsigned_abs() {
                d.insert_kink(t, p, sign, flag);
            }
        }
        d
    }

    /// Inserts `Cup(p+1) Cross(p) Cap(p+1)` before event `t`; the kink has
    /// writhe equal to `sign` whatever the orientation.
    fn insert_kink(&mut self, t: usize, p: usize, sign: Sign, flag: Option<bool>) {
        let cups_before = self.word.events[..t].iter().filter(|e| matches!(e, Event::Cup(_))).count();
        self.word.events.splice(t..t, [Event::Cup(p + 1), Event::Cross(p, sign), Event::Cap(p + 1)]);
        if let (Some(o), Some(f)) = (&mut self.orient, flag) {
            o.insert(self.word.width_in + cups_before, f);
        }
    }

    /// Doubles every strand into two parallel (blackboard) strands.
    pub fn two_cable(&self) -> TangleDiagram {
        let d = self.materialize_twists();
        let mut events = Vec::with_capacity(d.word.events.len() * 4);
        for e in &d.word.events {
            match *e {
                Event::Cup(i) => events.extend([Event::Cup(2 * i), Event::Cup(2 * i + 1)]),
                Event::Cap(i) => events.extend([Event::Cap(2 * i + 1), Event::Cap(2 * i)]),
                Event::Cross(i, s) => events.extend([
                    Event::Cross(2 * i + 1, s),
                    Event::Cross(2 * i, s),
                    Event::Cross(2 * i + 2, s),
                    Event::Cross(2 * i + 1, s),
                ]),
            }
        }
        let orient = d.orient.as_ref().map(|o| o.iter().flat_map(|&f| [f, f]).collect());
        let word = SliceWord { width_in: 2 * d.width_in(), events, width_out: 2 * d.width_out() };
        TangleDiagram { word, orient, twists: BTreeMap::new() }
    }

    /// The sub-tangle made of events `range`, dropping `left` and `right`
    /// untouched strands on either side. Orientation is inherited; framing
    /// offsets are not.
    pub fn restrict(&self, range: std::ops::Range<usize>, left: usize, right: usize) -> Result<TangleDiagram, DiagramError> {
        let widths = self.word.widths();
        if range.start > range.end || range.end > self.word.events.len() {
            return Err(DiagramError::Placement { k: range.end, i: range.start, n: self.word.events.len() });
        }
        let inner = |t: usize| widths[t].checked_sub(left + right).ok_or(DiagramError::Placement { k: left + right, i: t, n: widths[t] });
        let mut events = Vec::with_capacity(range.len());
        for t in range.clone() {
            let e = self.word.events[t];
            let w = inner(t)?;
            let i = e.pos().checked_sub(left).ok_or(DiagramError::Placement { k: left, i: e.pos(), n: widths[t] })?;
            let top = match e {
                Event::Cup(_) => i,
                _ => i + 1,
            };
            if top > w || (top == w && !matches!(e, Event::Cup(_))) {
                return Err(DiagramError::Placement { k: w, i, n: widths[t] });
            }
            events.push(match e {
                Event::Cup(_) => Event::Cup(i),
                Event::Cap(_) => Event::Cap(i),
                Event::Cross(_, s) => Event::Cross(i, s),
            });
        }
        let word = SliceWord::new(inner(range.start)?, events)?;
        let orient = match self.level_flags() {
            Some(f) => {
                let f = f?;
                let a = range.start;
                let mut o = f[a][left..left + word.width_in].to_vec();
                for t in range {
                    if let Event::Cup(i) = self.word.events[t] {
                        o.push(f[t + 1][i]);
                    }
                }
                Some(o)
            }
            None => None,
        };
        TangleDiagram::new(word, orient)
    }

    /// `self` on strands `i..i+k` between identity strands with the given
    /// directions (`None` for unoriented use).
    pub fn padded(&self, i: usize, left: Option<&[bool]>, right: Option<&[bool]>, n: usize) -> Result<TangleDiagram, DiagramError> {
        let k = self.width_in();
        if i + k > n || self.width_out() != k {
            return Err(DiagramError::Placement { k, i, n });
        }
        let l = TangleDiagram::identity(i, left.map(<[bool]>::to_vec))?;
        let r = TangleDiagram::identity(n - i - k, right.map(<[bool]>::to_vec))?;
        Ok(l.tensor(self).tensor(&r))
    }
}
