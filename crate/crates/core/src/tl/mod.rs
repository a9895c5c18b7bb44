//! The Temperley-Lieb algebra TL_n over F(A): planar matchings of `n`
//! bottom and `n` top points, multiplied by stacking, closed loops valued
//! `mu = -A^2 - A^-2`.
//!
//! Points `0..n` are the bottom endpoints left to right, `n..2n` the top
//! ones. `x * y` places `x` below `y`.

mod annulus;
mod spectral;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::DiagramError;
use crate::poly::{loop_value_a, PolyError, RationalFunction, Vars};

pub use annulus::{annulus_reduce, AnnulusClass};
pub use spectral::{left_mult_matrix, tl2_inverse_closed_form, tl3_membership, tl_invert, tl_spectral_p, Spectral, SpectralAxis};
pub use sweep::{bracket, bracket_uni, tl_from_tangle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TlError {
    #[error("strand counts differ: {0} vs {1}")]
    Arity(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("element is not invertible")]
    NonInvertible,
    #[error("the bracket of the empty diagram is not defined")]
    Empty,
    #[error("invalid matching: {0}")]
    BadMatching(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    partner: Vec<u8>,
}

impl PlanarMatching {
    pub fn new(n: usize, partner: Vec<usize>) -> Result<Self, TlError> {
        if partner.len() != 2 * n || partner.iter().enumerate().any(|(i, &p)| p >= 2 * n || p == i || partner[p] != i) {
            return Err(TlError::BadMatching(format!("{partner:?} is not an involution on {} points", 2 * n)));
        }
        let m = PlanarMatching { n, partner: partner.iter().map(|&p| p as u8).collect() };
        if !m.is_planar() {
            return Err(TlError::BadMatching(format!("{partner:?} has crossing arcs")));
        }
        Ok(m)
    }

    pub(crate) fn from_raw(n: usize, partner: Vec<u8>) -> Self {
        PlanarMatching { n, partner }
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { (i + n) as u8 } else { (i - n) as u8 }).collect();
        PlanarMatching { n, partner }
    }

    /// The hook `U_i` (0-based): cap on bottom `i, i+1`, cup on top `i, i+1`.
    pub fn hook(n: usize, i: usize) -> Self {
        let mut m = Self::identity(n);
        let p = &mut m.partner;
        p[i] = (i + 1) as u8;
        p[i + 1] = i as u8;
        p[n + i] = (n + i + 1) as u8;
        p[n + i + 1] = (n + i) as u8;
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Reads the `b0-t0,b1-b2` form produced by `Display`.
    pub fn parse(n: usize, s: &str) -> Result<Self, TlError> {
        let bad = || TlError::BadMatching(s.to_string());
        let point = |p: &str| -> Result<usize, TlError> {
            let (side, idx) = p.trim().split_at(1);
            let i: usize = idx.parse().map_err(|_| bad())?;
            match side {
                "b" if i < n => Ok(i),
                "t" if i < n => Ok(n + i),
                _ => Err(bad()),
            }
        };
        let mut partner = vec![usize::MAX; 2 * n];
        for arc in s.split(',').filter(|a| !a.trim().is_empty()) {
            let (a, b) = arc.split_once('-').ok_or_else(bad)?;
            let (a, b) = (point(a)?, point(b)?);
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(bad());
        }
        PlanarMatching::new(n, partner)
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    /// Position of point `i` going counterclockwise round the box boundary
    /// (bottom left to right, then top right to left).
    fn boundary_pos(&self, i: usize) -> usize {
        if i < self.n {
            i
        } else {
            3 * self.n - 1 - i
        }
    }

    /// Non-crossing test: arcs must nest like parentheses round the boundary.
    pub fn is_planar(&self) -> bool {
        let mut order = vec![0usize; 2 * self.n];
        for i in 0..2 * self.n {
            order[self.boundary_pos(i)] = i;
        }
        let mut stack = vec![];
        for &i in &order {
            let j = self.partner(i);
            if stack.last() == Some(&j) {
                stack.pop();
            } else {
                stack.push(i);
            }
        }
        stack.is_empty()
    }

    /// All planar matchings on `n` strands, sorted.
    pub fn all(n: usize) -> Vec<PlanarMatching> {
        // non-crossing perfect matchings of the 2n boundary positions
        fn rec(lo: usize, hi: usize, out: &mut Vec<Vec<(usize, usize)>>) {
            if lo >= hi {
                out.push(vec![]);
                return;
            }
            for k in (lo + 1..hi).step_by(2) {
                let mut inner = vec![];
                rec(lo + 1, k, &mut inner);
                let mut outer = vec![];
                rec(k + 1, hi, &mut outer);
                for a in &inner {
                    for b in &outer {
                        let mut v = vec![(lo, k)];
                        v.extend_from_slice(a);
                        v.extend_from_slice(b);
                        out.push(v);
                    }
                }
            }
        }
        let mut pairs = vec![];
        rec(0, 2 * n, &mut pairs);
        let point = |b: usize| if b < n { b } else { 3 * n - 1 - b };
        let mut out: Vec<PlanarMatching> = pairs
            .into_iter()
            .map(|ps| {
                let mut partner = vec![0u8; 2 * n];
                for (a, b) in ps {
                    let (x, y) = (point(a), point(b));
                    partner[x] = y as u8;
                    partner[y] = x as u8;
                }
                PlanarMatching { n, partner }
            })
            .collect();
        out.sort();
        out
    }

    /// `self` below `top`; returns the product matching and the number of
    /// closed loops formed in the middle.
    pub fn stack(&self, top: &PlanarMatching) -> (PlanarMatching, usize) {
        let n = self.n;
        let mut partner = vec![u8::MAX; 2 * n];
        let mut mid_seen = vec![false; n];
        // point in the result: bottom i is self.i, top i is top.(n+i)
        for start in 0..2 * n {
            if partner[start] != u8::MAX {
                continue;
            }
            // (in_lower, point)
            let (mut lower, mut p) = if start < n { (true, start) } else { (false, start) };
            let end = loop {
                let q = if lower { self.partner(p) } else { top.partner(p) };
                if lower && q < n {
                    break q;
                }
                if !lower && q >= n {
                    break q;
                }
                // crossed into the middle
                let m = if lower { q - n } else { q };
                mid_seen[m] = true;
                lower = !lower;
                p = if lower { m + n } else { m };
            };
            partner[start] = end as u8;
            partner[end] = start as u8;
        }
        let mut loops = 0;
        for m0 in 0..n {
            if mid_seen[m0] {
                continue;
            }
            loops += 1;
            let mut m = m0;
            let mut lower = true;
            loop {
                mid_seen[m] = true;
                let q = if lower { self.partner(m + n) } else { top.partner(m) };
                m = if lower { q - n } else { q };
                lower = !lower;
                if m == m0 && lower {
                    break;
                }
                mid_seen[m] = true;
            }
        }
        (PlanarMatching { n, partner }, loops)
    }

    /// Top-bottom flip (an anti-automorphism of the algebra).
    pub fn flip(&self) -> PlanarMatching {
        let n = self.n;
        let sw = |i: usize| if i < n { i + n } else { i - n };
        let mut partner = vec![0u8; 2 * n];
        for i in 0..2 * n {
            partner[sw(i)] = sw(self.partner(i)) as u8;
        }
        PlanarMatching { n, partner }
    }

    /// Rotation by π in the plane of the box.
    pub fn rotate_z(&self) -> PlanarMatching {
        let n = self.n;
        let r = |i: usize| 2 * n - 1 - i;
        let mut partner = vec![0u8; 2 * n];
        for i in 0..2 * n {
            partner[r(i)] = r(self.partner(i)) as u8;
        }
        PlanarMatching { n, partner }
    }

    /// Left-right mirror of the box.
    pub fn mirror(&self) -> PlanarMatching {
        let n = self.n;
        let r = |i: usize| if i < n { n - 1 - i } else { 3 * n - 1 - i };
        let mut partner = vec![0u8; 2 * n];
        for i in 0..2 * n {
            partner[r(i)] = r(self.partner(i)) as u8;
        }
        PlanarMatching { n, partner }
    }

    /// Tensor with `left` identity strands on the left and `right` on the
    /// right.
    pub fn pad(&self, left: usize, right: usize) -> PlanarMatching {
        let n = self.n;
        let m = left + n + right;
        let mut partner = PlanarMatching::identity(m).partner;
        let map = |i: usize| if i < n { left + i } else { m + left + (i - n) };
        for i in 0..2 * n {
            partner[map(i)] = map(self.partner(i)) as u8;
        }
        PlanarMatching { n: m, partner }
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PlanarMatching {
    /// Arcs as `b0-t0`, `b1-b2`, ... with bottom points `b` and top points `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |i: usize| if i < self.n { format!("b{i}") } else { format!("t{}", i - self.n) };
        let arcs: Vec<String> = (0..2 * self.n).filter(|&i| i < self.partner(i)).map(|i| format!("{}-{}", name(i), name(self.partner(i)))).collect();
        write!(f, "{}", arcs.join(","))
    }
}

/// A linear combination of planar matchings with coefficients in a field of
/// rational functions containing `A`.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    vars: Vars,
    coeffs: BTreeMap<PlanarMatching, RationalFunction>,
}

impl TLElement {
    pub fn zero(n: usize, vars: &Vars) -> Self {
        TLElement { n, vars: vars.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize, vars: &Vars) -> Self {
        Self::basis(PlanarMatching::identity(n), vars)
    }

    pub fn basis(m: PlanarMatching, vars: &Vars) -> Self {
        let mut e = Self::zero(m.n, vars);
        e.coeffs.insert(m, RationalFunction::one(vars));
        e
    }

    pub fn from_terms(n: usize, vars: &Vars, terms: impl IntoIterator<Item = (PlanarMatching, RationalFunction)>) -> Self {
        let mut e = Self::zero(n, vars);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    fn add_term(&mut self, m: PlanarMatching, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, m: &PlanarMatching) -> RationalFunction {
        self.coeffs.get(m).cloned().unwrap_or_else(|| RationalFunction::zero(&self.vars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mu(&self) -> RationalFunction {
        RationalFunction::from(loop_value_a(&self.vars))
    }

    fn check(&self, o: &Self) -> Result<(), TlError> {
        if self.n != o.n {
            return Err(TlError::Arity(self.n, o.n));
        }
        if !self.vars.same(&o.vars) {
            return Err(PolyError::VarMismatch(format!("{:?}", self.vars), format!("{:?}", o.vars)).into());
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, TlError> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.coeffs {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, TlError> {
        self.add(&o.scale(&RationalFunction::constant(&self.vars, -1)))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut r = Self::zero(self.n, &self.vars);
        if c.is_zero() {
            return r;
        }
        r.coeffs = self.coeffs.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        r
    }

    pub fn mul(&self, o: &Self) -> Result<Self, TlError> {
        self.check(o)?;
        let mu = self.mu();
        let mut r = Self::zero(self.n, &self.vars);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &o.coeffs {
                let (m, loops) = a.stack(b);
                let mut c = ca * cb;
                for _ in 0..loops {
                    c = &c * &mu;
                }
                r.add_term(m, c);
            }
        }
        Ok(r)
    }

    fn map_matchings(&self, f: impl Fn(&PlanarMatching) -> PlanarMatching, n: usize) -> Self {
        let mut r = Self::zero(n, &self.vars);
        for (m, c) in &self.coeffs {
            r.add_term(f(m), c.clone());
        }
        r
    }

    /// The top-bottom flip, written `r_y` in the algebra.
    pub fn r_y(&self) -> Self {
        self.map_matchings(PlanarMatching::flip, self.n)
    }

    pub fn r_z(&self) -> Self {
        self.map_matchings(PlanarMatching::rotate_z, self.n)
    }

    /// `X_{(i)}`: `self` on strands `i..i+k` (0-based) of `n`.
    pub fn place(&self, i: usize, n: usize) -> Result<Self, TlError> {
        if i + self.n > n {
            return Err(TlError::Arity(i + self.n, n));
        }
        Ok(self.map_matchings(|m| m.pad(i, n - i - self.n), n))
    }

    /// Re-expresses the coefficients over a larger variable list.
    pub fn embed(&self, vars: &Vars) -> Result<Self, TlError> {
        let mut r = Self::zero(self.n, vars);
        for (m, c) in &self.coeffs {
            r.add_term(m.clone(), c.embed(vars)?);
        }
        Ok(r)
    }

    /// Coordinates in the given basis order.
    pub fn coords(&self, basis: &[PlanarMatching]) -> Vec<RationalFunction> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn from_coords(basis: &[PlanarMatching], coords: &[RationalFunction], vars: &Vars) -> Self {
        Self::from_terms(basis[0].n, vars, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    /// Reads either `{matching: coefficient}` or, for `n = 2, 3`, a list of
    /// coefficients in the standard basis order.
    pub fn from_json_value(n: usize, vars: &Vars, v: &serde_json::Value) -> Result<Self, TlError> {
        let coeff = |x: &serde_json::Value| -> Result<RationalFunction, TlError> {
            let s = x.as_str().ok_or_else(|| TlError::BadMatching(format!("coefficient {x} is not a string")))?;
            Ok(RationalFunction::parse(vars, s)?)
        };
        let terms = match v {
            serde_json::Value::Array(xs) => {
                let basis: Vec<PlanarMatching> = match n {
                    2 => tl2_basis().to_vec(),
                    3 => tl3_basis().to_vec(),
                    _ => return Err(TlError::BadMatching("lists are only read for n = 2, 3".into())),
                };
                if xs.len() != basis.len() {
                    return Err(TlError::Arity(xs.len(), basis.len()));
                }
                basis.into_iter().zip(xs).map(|(m, x)| Ok((m, coeff(x)?))).collect::<Result<Vec<_>, TlError>>()?
            }
            serde_json::Value::Object(map) => map.iter().map(|(k, x)| Ok((PlanarMatching::parse(n, k)?, coeff(x)?))).collect::<Result<Vec<_>, TlError>>()?,
            _ => return Err(TlError::BadMatching("expected an object or a list".into())),
        };
        Ok(TLElement::from_terms(n, vars, terms))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Object(self.coeffs.iter().map(|(m, c)| (m.to_string(), serde_json::Value::String(c.to_string()))).collect())
    }
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(m, c)| format!("({c})[{m}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The TL_3 basis `e1..e5` = `1, U2, U1, U1U2, U2U1` (hooks `U_i` on strands
/// `i, i+1`, 1-based; products read bottom to top).
pub fn tl3_basis() -> [PlanarMatching; 5] {
    let u1 = PlanarMatching::hook(3, 0);
    let u2 = PlanarMatching::hook(3, 1);
    [PlanarMatching::identity(3), u2.clone(), u1.clone(), u1.stack(&u2).0, u2.stack(&u1).0]
}

/// The TL_2 basis `f1 = 1`, `f2 = hook`.
pub fn tl2_basis() -> [PlanarMatching; 2] {
    [PlanarMatching::identity(2), PlanarMatching::hook(2, 0)]
}

pub fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}
