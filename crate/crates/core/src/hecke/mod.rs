//! The Hecke algebra `H_n(v, z)` in the basis of positive permutation
//! braids, and the oriented three-strand module with alternating ends.

mod density;
mod sprime3;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{DiagramError, Event, Sign, TangleDiagram};
use crate::linalg::{self, Matrix};
use crate::poly::{MultiLaurent, PolyError, RationalFunction, Vars};

pub use density::{density_witness, det_residue, Algebra, DensityReport};
pub use sprime3::{sprime3_membership, sprime3_spectral, SPrime3Element, SPrime3Spectral};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("strand counts differ: {0} vs {1}")]
    Arity(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("tangle is not braid-like: {0}")]
    NotBraidLike(String),
    #[error("element is not invertible")]
    NonInvertible,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// A permutation of `0..n` in one-line notation.
pub type Perm = Vec<u8>;

pub fn perm_identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn perm_length(w: &[u8]) -> usize {
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                l += 1;
            }
        }
    }
    l
}

/// Canonical reduced word (0-based generator indices): peel off the
/// smallest right descent repeatedly.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut rev = vec![];
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

pub fn perm_from_word(n: usize, word: &[usize]) -> Perm {
    let mut w = perm_identity(n);
    for &i in word {
        w.swap(i, i + 1);
    }
    w
}

pub fn perm_inverse(w: &[u8]) -> Perm {
    let mut r = vec![0u8; w.len()];
    for (i, &x) in w.iter().enumerate() {
        r[x as usize] = i as u8;
    }
    r
}

/// All permutations of `0..n`, ordered by length then one-line notation;
/// the identity comes first.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(cur: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = vec![];
    rec(&mut vec![], &mut vec![false; n], &mut out);
    out.sort_by_key(|w| (perm_length(w), w.clone()));
    out
}

/// `(e_1..e_6) = (1, s1, s2, s1 s2 s1, s1 s2, s2 s1)`.
pub fn h3_basis() -> [Perm; 6] {
    let words: [&[usize]; 6] = [&[], &[0], &[1], &[0, 1, 0], &[0, 1], &[1, 0]];
    words.map(|w| perm_from_word(3, w))
}

pub fn h2_basis() -> [Perm; 2] {
    [vec![0, 1], vec![1, 0]]
}

fn rf_var(vars: &Vars, name: &str) -> Result<RationalFunction, HeckeError> {
    Ok(RationalFunction::var(vars, name)?)
}

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    vars: Vars,
    coeffs: BTreeMap<Perm, RationalFunction>,
}

impl HeckeElement {
    /// Coefficients live in a field over `vars`, which must contain `v`
    /// and `z`.
    pub fn zero(n: usize, vars: &Vars) -> Self {
        HeckeElement { n, vars: vars.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize, vars: &Vars) -> Self {
        Self::basis(perm_identity(n), vars)
    }

    pub fn basis(w: Perm, vars: &Vars) -> Self {
        let mut e = Self::zero(w.len(), vars);
        e.coeffs.insert(w, RationalFunction::one(vars));
        e
    }

    /// `sigma_{i+1}` (0-based index `i`).
    pub fn generator(n: usize, i: usize, vars: &Vars) -> Result<Self, HeckeError> {
        if i + 1 >= n {
            return Err(HeckeError::Arity(i + 2, n));
        }
        Ok(Self::basis(perm_from_word(n, &[i]), vars))
    }

    /// The positive word `sigma_{i1} sigma_{i2} ...` multiplied out.
    pub fn from_word(n: usize, word: &[usize], vars: &Vars) -> Result<Self, HeckeError> {
        let mut e = Self::one(n, vars);
        for &i in word {
            e = e.mul(&Self::generator(n, i, vars)?)?;
        }
        Ok(e)
    }

    pub fn from_terms(n: usize, vars: &Vars, terms: impl IntoIterator<Item = (Perm, RationalFunction)>) -> Self {
        let mut e = Self::zero(n, vars);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    fn add_term(&mut self, w: Perm, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> RationalFunction {
        self.coeffs.get(w).cloned().unwrap_or_else(|| RationalFunction::zero(&self.vars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, o: &Self) -> Result<(), HeckeError> {
        if self.n != o.n {
            return Err(HeckeError::Arity(self.n, o.n));
        }
        if !self.vars.same(&o.vars) {
            return Err(PolyError::VarMismatch(format!("{:?}", self.vars), format!("{:?}", o.vars)).into());
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, HeckeError> {
        self.check(o)?;
        let mut r = self.clone();
        for (w, c) in &o.coeffs {
            r.add_term(w.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, HeckeError> {
        self.add(&o.scale(&RationalFunction::constant(&self.vars, -1)))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut r = Self::zero(self.n, &self.vars);
        if !c.is_zero() {
            r.coeffs = self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        }
        r
    }

    /// Right multiplication by one generator.
    fn mul_gen(&self, i: usize, vz: &RationalFunction, v2: &RationalFunction) -> Self {
        let mut r = Self::zero(self.n, &self.vars);
        for (w, c) in &self.coeffs {
            let mut ws = w.clone();
            ws.swap(i, i + 1);
            if w[i] < w[i + 1] {
                r.add_term(ws, c.clone());
            } else {
                r.add_term(w.clone(), c * vz);
                r.add_term(ws, c * v2);
            }
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Result<Self, HeckeError> {
        self.check(o)?;
        let v = rf_var(&self.vars, "v")?;
        let vz = &v * &rf_var(&self.vars, "z")?;
        let v2 = &v * &v;
        let mut r = Self::zero(self.n, &self.vars);
        for (u, cu) in &o.coeffs {
            let mut acc = self.clone();
            for i in reduced_word(u) {
                acc = acc.mul_gen(i, &vz, &v2);
            }
            for (w, c) in acc.coeffs {
                r.add_term(w, &c * cu);
            }
        }
        Ok(r)
    }

    /// The anti-automorphism reversing braid words: `T_w -> T_{w^-1}`.
    pub fn transpose_ry(&self) -> Self {
        let mut r = Self::zero(self.n, &self.vars);
        for (w, c) in &self.coeffs {
            r.add_term(perm_inverse(w), c.clone());
        }
        r
    }

    /// `X_{(i)}`: `self` on strands `i..i+k` (0-based) of `n`.
    pub fn place(&self, i: usize, n: usize) -> Result<Self, HeckeError> {
        if i + self.n > n {
            return Err(HeckeError::Arity(i + self.n, n));
        }
        let mut r = Self::zero(n, &self.vars);
        for (w, c) in &self.coeffs {
            let mut p = perm_identity(n);
            for (k, &x) in w.iter().enumerate() {
                p[i + k] = x + i as u8;
            }
            r.add_term(p, c.clone());
        }
        Ok(r)
    }

    pub fn embed(&self, vars: &Vars) -> Result<Self, HeckeError> {
        let mut r = Self::zero(self.n, vars);
        for (w, c) in &self.coeffs {
            r.add_term(w.clone(), c.embed(vars)?);
        }
        Ok(r)
    }

    pub fn coords(&self, basis: &[Perm]) -> Vec<RationalFunction> {
        basis.iter().map(|w| self.coeff(w)).collect()
    }

    pub fn from_coords(basis: &[Perm], coords: &[RationalFunction], vars: &Vars) -> Self {
        Self::from_terms(basis[0].len(), vars, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    /// Reads `{one-line permutation (1-based digits): coefficient}`.
    pub fn from_json_value(n: usize, vars: &Vars, v: &serde_json::Value) -> Result<Self, HeckeError> {
        let map = v.as_object().ok_or_else(|| HeckeError::Unsupported("expected an object".into()))?;
        let terms = map
            .iter()
            .map(|(k, x)| {
                let w: Perm = k.chars().map(|c| c.to_digit(10).map(|d| d as u8 - 1)).collect::<Option<Vec<_>>>().ok_or_else(|| HeckeError::Unsupported(format!("bad permutation {k}")))?;
                let mut sorted = w.clone();
                sorted.sort_unstable();
                if sorted != perm_identity(n) {
                    return Err(HeckeError::Unsupported(format!("{k} is not a permutation of 1..{n}")));
                }
                let s = x.as_str().ok_or_else(|| HeckeError::Unsupported(format!("coefficient {x} is not a string")))?;
                Ok((w, RationalFunction::parse(vars, s)?))
            })
            .collect::<Result<Vec<_>, HeckeError>>()?;
        Ok(HeckeElement::from_terms(n, vars, terms))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.coeffs
                .iter()
                .map(|(w, c)| (w.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(""), serde_json::Value::String(c.to_string())))
                .collect(),
        )
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = reduced_word(w).iter().map(|i| format!("s{}", i + 1)).collect();
                format!("({c})[{}]", if word.is_empty() { "1".into() } else { word.join("") })
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The skein class of a braid-like oriented tangle (all strands up,
/// crossings only), over `Q(v, z)`.
pub fn hecke_from_tangle(d: &TangleDiagram) -> Result<HeckeElement, HeckeError> {
    hecke_from_tangle_in(d, &Vars::vz())
}

pub fn hecke_from_tangle_in(d: &TangleDiagram, vars: &Vars) -> Result<HeckeElement, HeckeError> {
    let n = d.width_in();
    let flags = d.bottom_flags().ok_or(DiagramError::Unoriented)?;
    if flags.iter().any(|&f| !f) {
        return Err(HeckeError::NotBraidLike("a strand points down".into()));
    }
    let v = rf_var(vars, "v")?;
    let z = rf_var(vars, "z")?;
    let vinv = v.inv()?;
    let mut r = HeckeElement::one(n, vars);
    for e in d.events() {
        let Event::Cross(i, s) = *e else {
            return Err(HeckeError::NotBraidLike("cup or cap".into()));
        };
        let g = HeckeElement::generator(n, i, vars)?;
        let f = match s {
            Sign::Pos => g,
            // sigma^-1 = v^-2 sigma - v^-1 z
            Sign::Neg => g.scale(&(&vinv * &vinv)).sub(&HeckeElement::one(n, vars).scale(&(&vinv * &z)))?,
        };
        r = r.mul(&f)?;
    }
    Ok(r)
}

/// The Markov trace normalized to the HOMFLYPT polynomial of the closure,
/// with the unknot equal to 1.
pub fn markov_trace(x: &HeckeElement) -> Result<RationalFunction, HeckeError> {
    let mut memo = BTreeMap::new();
    let mut total = RationalFunction::zero(&x.vars);
    for (w, c) in &x.coeffs {
        total = &total + &(c * &trace_basis(w, &x.vars, &mut memo)?);
    }
    Ok(total)
}

fn trace_basis(w: &[u8], vars: &Vars, memo: &mut BTreeMap<Perm, RationalFunction>) -> Result<RationalFunction, HeckeError> {
    let n = w.len();
    if n <= 1 {
        return Ok(RationalFunction::one(vars));
    }
    if let Some(t) = memo.get(w) {
        return Ok(t.clone());
    }
    let top = (n - 1) as u8;
    let t = if w[n - 1] == top {
        let delta = &(&rf_var(vars, "v")?.inv()? - &rf_var(vars, "v")?) / &rf_var(vars, "z")?;
        &delta * &trace_basis(&w[..n - 1], vars, memo)?
    } else {
        // T_w = T_u g_{n-2} g_{n-3} .. g_p with u fixing the last strand;
        // conjugate the tail to the front and drop g_{n-2}.
        let p = w.iter().position(|&x| x == top).expect("permutation");
        let mut u = w.to_vec();
        for i in p..n - 1 {
            u.swap(i, i + 1);
        }
        u.pop();
        let tail: Vec<usize> = (p..n - 2).rev().collect();
        let y = HeckeElement::from_word(n - 1, &tail, vars)?.mul(&HeckeElement::basis(u, vars))?;
        let mut acc = RationalFunction::zero(vars);
        for (b, c) in &y.coeffs {
            acc = &acc + &(c * &trace_basis(b, vars, memo)?);
        }
        acc
    };
    memo.insert(w.to_vec(), t.clone());
    Ok(t)
}

/// `M[i][j]` = coefficient of `b_i` in `X b_j`.
pub fn left_mult_matrix(x: &HeckeElement) -> Result<Matrix, HeckeError> {
    mult_matrix(x, true)
}

/// `M[i][j]` = coefficient of `b_i` in `b_j X`.
pub fn right_mult_matrix(x: &HeckeElement) -> Result<Matrix, HeckeError> {
    mult_matrix(x, false)
}

fn mult_matrix(x: &HeckeElement, left: bool) -> Result<Matrix, HeckeError> {
    let basis = all_perms(x.n());
    let cols = basis
        .iter()
        .map(|b| {
            let b = HeckeElement::basis(b.clone(), x.vars());
            let p = if left { x.mul(&b)? } else { b.mul(x)? };
            Ok(p.coords(&basis))
        })
        .collect::<Result<Vec<_>, HeckeError>>()?;
    Ok((0..basis.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

pub fn hecke_invert(x: &HeckeElement) -> Result<HeckeElement, HeckeError> {
    let basis = all_perms(x.n());
    let m = left_mult_matrix(x)?;
    let one = HeckeElement::one(x.n(), x.vars()).coords(&basis);
    let c = linalg::solve(&m, &one).ok_or(HeckeError::NonInvertible)?;
    let inv = HeckeElement::from_coords(&basis, &c, x.vars());
    if inv.mul(x)? != HeckeElement::one(x.n(), x.vars()) {
        return Err(HeckeError::NonInvertible);
    }
    Ok(inv)
}

#[derive(Clone, Debug, PartialEq)]
pub enum HeckeSpectral {
    Found { p: HeckeElement, p_inv: HeckeElement },
    NotInDense,
}

/// The membership polynomial for braid-like 3-tangles.
pub fn hecke3_membership_poly(l: &HeckeElement) -> Result<RationalFunction, HeckeError> {
    let a = l.coords(&h3_basis());
    let vars = l.vars();
    let v = rf_var(vars, "v")?;
    let vz = &v * &rf_var(vars, "z")?;
    let v2 = &v * &v;
    let base = &a[2] - &(&v2 * &a[3]);
    let d = &a[4] - &a[5];
    Ok(&(&(&base + &(&vz * &a[4])) * &(&base + &(&vz * &a[5]))) - &(&v2 * &(&d * &d)))
}

pub fn hecke3_membership(l: &HeckeElement) -> Result<bool, HeckeError> {
    let a = l.coords(&h3_basis());
    Ok(a[4] == a[5] || !hecke3_membership_poly(l)?.is_zero())
}

/// Solves `L P_(1) = P_(1) r_y(L)` for invertible `P` in `H_2`.
pub fn hecke_spectral_p(l: &HeckeElement) -> Result<HeckeSpectral, HeckeError> {
    if l.n() != 3 {
        return Err(HeckeError::Unsupported(format!("spectral solver needs n = 3, got {}", l.n())));
    }
    let vars = l.vars().clone();
    let a = l.coords(&h3_basis());
    let v = rf_var(&vars, "v")?;
    let vz = &v * &rf_var(&vars, "z")?;
    let v2 = &v * &v;
    let (x1, x2) = if a[4] == a[5] {
        (RationalFunction::one(&vars), RationalFunction::zero(&vars))
    } else {
        (&(&a[2] + &(&vz * &a[5])) - &(&v2 * &a[3]), &a[4] - &a[5])
    };
    let det = &(&(&x1 * &x1) - &(&v2 * &(&x2 * &x2))) + &(&vz * &(&x1 * &x2));
    if det.is_zero() {
        return Ok(HeckeSpectral::NotInDense);
    }
    let b = h2_basis();
    let p = HeckeElement::from_coords(&b, &[x1.clone(), x2.clone()], &vars);
    let p_inv = HeckeElement::from_coords(&b, &[&(&x1 + &(&vz * &x2)) / &det, -&(&x2 / &det)], &vars);
    Ok(HeckeSpectral::Found { p, p_inv })
}

/// Evaluates a polynomial-valued matrix as polynomials; fails on proper
/// fractions.
pub fn matrix_as_polys(m: &Matrix) -> Option<Vec<Vec<MultiLaurent>>> {
    m.iter().map(|row| row.iter().map(|x| x.as_poly().cloned()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vz() -> Vars {
        Vars::vz()
    }

    fn rf(vars: &Vars, s: &str) -> RationalFunction {
        RationalFunction::from(MultiLaurent::parse(vars, s).unwrap())
    }

    #[test]
    fn perms_and_words() {
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(4).len(), 24);
        for w in all_perms(4) {
            let word = reduced_word(&w);
            assert_eq!(word.len(), perm_length(&w));
            assert_eq!(perm_from_word(4, &word), w);
        }
        assert_eq!(all_perms(3)[0], perm_identity(3));
    }

    #[test]
    fn quadratic_relation() {
        let v = vz();
        let s = HeckeElement::generator(2, 0, &v).unwrap();
        let sq = s.mul(&s).unwrap();
        let expect = s.scale(&rf(&v, "v*z")).add(&HeckeElement::one(2, &v).scale(&rf(&v, "v^2"))).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn length_increasing_product() {
        let v = vz();
        let x = HeckeElement::from_word(3, &[0, 1], &v).unwrap();
        let y = HeckeElement::generator(3, 0, &v).unwrap();
        assert_eq!(x.mul(&y).unwrap(), HeckeElement::basis(perm_from_word(3, &[0, 1, 0]), &v));
    }

    #[test]
    fn right_mult_matrix_in_h2() {
        let v = Vars::new(&["v", "z", "x1", "x2"]);
        let p = HeckeElement::from_coords(&h2_basis(), &[rf(&v, "x1"), rf(&v, "x2")], &v);
        let m = right_mult_matrix(&p).unwrap();
        assert_eq!(m, vec![vec![rf(&v, "x1"), rf(&v, "v^2*x2")], vec![rf(&v, "x2"), rf(&v, "x1 + v*z*x2")]]);
        assert_eq!(linalg::det(&m, &v), rf(&v, "x1^2 - v^2*x2^2 + v*z*x1*x2"));
    }

    #[test]
    fn transpose_swaps_e5_e6() {
        let v = vz();
        let b = h3_basis();
        let e = |i: usize| HeckeElement::basis(b[i].clone(), &v);
        assert_eq!(e(4).transpose_ry(), e(5));
        assert_eq!(e(3).transpose_ry(), e(3));
    }
}
