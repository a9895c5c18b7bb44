//! Skein-tree evaluation of HOMFLYPT and the Kauffman polynomial.

use std::collections::{BTreeMap, HashMap};

use super::pdgraph::Pd;
use super::InvariantError;
use crate::poly::{MultiLaurent, Vars};

/// Laurent polynomial in two variables with machine coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct P2(BTreeMap<(i32, i32), i128>);

impl P2 {
    pub fn one() -> P2 {
        P2::mono(1, 0, 0)
    }

    pub fn mono(c: i128, i: i32, j: i32) -> P2 {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert((i, j), c);
        }
        P2(m)
    }

    pub fn from_terms(t: &[(i128, i32, i32)]) -> P2 {
        let mut p = P2::default();
        for &(c, i, j) in t {
            p.add_mono(c, i, j);
        }
        p
    }

    fn add_mono(&mut self, c: i128, i: i32, j: i32) {
        if c == 0 {
            return;
        }
        let e = self.0.entry((i, j)).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.0.remove(&(i, j));
        }
    }

    /// `self += c * x^i * y^j * other`.
    pub fn add_scaled(&mut self, other: &P2, c: i128, i: i32, j: i32) {
        for (&(a, b), &k) in &other.0 {
            self.add_mono(k.checked_mul(c).expect("coefficient overflow"), a + i, b + j);
        }
    }

    pub fn mul(&self, o: &P2) -> P2 {
        let mut r = P2::default();
        for (&(a, b), &k) in &self.0 {
            r.add_scaled(o, k, a, b);
        }
        r
    }

    pub fn pow(&self, n: u32) -> P2 {
        (0..n).fold(P2::one(), |acc, _| acc.mul(self))
    }

    pub fn to_multi(&self, vars: &Vars) -> MultiLaurent {
        MultiLaurent::from_terms(vars, self.0.iter().map(|(&(a, b), &c)| (vec![a, b], num_bigint::BigInt::from(c))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Theory {
    /// Variables `(v, z)`.
    Homflypt,
    /// Regular-isotopy Kauffman polynomial; variables `(a, x)`.
    Kauffman,
}

pub(crate) struct Engine {
    theory: Theory,
    memo: HashMap<(Pd, usize), P2>,
    delta: P2,
    budget: usize,
}

impl Engine {
    pub fn new(theory: Theory, budget: usize) -> Engine {
        let delta = match theory {
            Theory::Homflypt => P2::from_terms(&[(1, -1, -1), (-1, 1, -1)]),
            Theory::Kauffman => P2::from_terms(&[(1, 1, -1), (1, -1, -1), (-1, 0, 0)]),
        };
        Engine { theory, memo: HashMap::new(), delta, budget }
    }

    pub fn eval_top(&mut self, pd: &Pd) -> Result<P2, InvariantError> {
        if pd.crossings() > self.budget {
            return Err(InvariantError::Budget(pd.crossings(), self.budget));
        }
        if pd.crossings() == 0 && pd.loops == 0 {
            return Err(InvariantError::Empty);
        }
        Ok(self.eval(pd.clone()))
    }

    /// Value with the unknot normalized to 1.
    fn eval(&mut self, mut pd: Pd) -> P2 {
        let mut framing = 0;
        while let Some((r, w)) = pd.reduce_once() {
            pd = r;
            framing += w;
        }
        let parts = pd.split();
        let pieces = parts.len() + pd.loops as usize;
        let mut val = self.delta.pow(pieces.saturating_sub(1) as u32);
        for part in parts {
            let (c, s) = part.canonical();
            let v = self.eval_connected(c, s);
            val = val.mul(&v);
        }
        if self.theory == Theory::Kauffman && framing != 0 {
            let mut r = P2::default();
            r.add_scaled(&val, 1, framing, 0);
            val = r;
        }
        val
    }

    fn eval_connected(&mut self, pd: Pd, start: usize) -> P2 {
        let key = (pd, start);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (pd, start) = key;
        let walk = pd.walk(0, start);
        let bad = pd.violations(&walk);
        let mut total = P2::default();
        let mut cur = pd.clone();
        // running coefficient of the partially switched diagram
        let mut coef = P2::one();
        for &k in &bad {
            match self.theory {
                Theory::Homflypt => {
                    let smooth = self.eval(cur.smooth_oriented(k));
                    let (cs, e) = if cur.pos[k] { ((1, 1, 1), (2, 0)) } else { ((-1, -1, 1), (-2, 0)) };
                    total.add_scaled(&coef.mul(&smooth), cs.0, cs.1, cs.2);
                    let mut c = P2::default();
                    c.add_scaled(&coef, 1, e.0, e.1);
                    coef = c;
                }
                Theory::Kauffman => {
                    let a = self.eval(cur.smooth(k, [(0, 1), (2, 3)]));
                    let b = self.eval(cur.smooth(k, [(0, 3), (1, 2)]));
                    let mut s = a;
                    s.add_scaled(&b, 1, 0, 0);
                    total.add_scaled(&coef.mul(&s), 1, 0, 1);
                    let mut c = P2::default();
                    c.add_scaled(&coef, -1, 0, 0);
                    coef = c;
                }
            }
            cur.switch(k);
        }
        let leaf = self.delta.pow(walk.cycles as u32 - 1);
        let leaf = match self.theory {
            Theory::Homflypt => leaf,
            Theory::Kauffman => {
                let mut r = P2::default();
                let mut signs = pd.walk_signs(&walk);
                for &k in &bad {
                    signs[k] = -signs[k];
                }
                r.add_scaled(&leaf, 1, signs.iter().sum(), 0);
                r
            }
        };
        total.add_scaled(&coef.mul(&leaf), 1, 0, 0);
        self.memo.insert((pd, start), total.clone());
        total
    }
}
