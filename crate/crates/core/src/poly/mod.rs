//! Exact multivariate Laurent polynomials over the integers and their
//! fraction fields.
//!
//! Every value carries its ordered variable list. Arithmetic between values
//! over different variable lists is a contract violation: the checked
//! methods (`try_add`, ...) report it as [`PolyError::VarMismatch`], the
//! operator impls panic.

mod gcd;
mod parse;
mod ratfun;
mod uni;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use gcd::poly_gcd;
pub use ratfun::RationalFunction;
pub use uni::UniLaurent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists differ: {0} vs {1}")]
    VarMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("substitution produces a non-integral exponent for `{0}`")]
    FractionalExponent(String),
    #[error("division is not exact")]
    NotExact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// An ordered list of variable symbols, shared cheaply between values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Vars {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// The bracket ring variable.
    pub fn a() -> Vars {
        Vars::new(&["A"])
    }

    /// HOMFLYPT variables.
    pub fn vz() -> Vars {
        Vars::new(&["v", "z"])
    }

    /// Kauffman polynomial variables.
    pub fn ax() -> Vars {
        Vars::new(&["a", "x"])
    }

    /// `s` stands for `t^(1/2)`.
    pub fn s() -> Vars {
        Vars::new(&["s"])
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// A Laurent polynomial `sum c_e * x^e` with `e` in `Z^n` and `c_e` in `Z`.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is
/// in increasing lexicographic order and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiLaurent {
    vars: Vars,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl MultiLaurent {
    pub fn zero(vars: &Vars) -> Self {
        MultiLaurent { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c, vec![0; vars.len()])
    }

    pub fn monomial(vars: &Vars, c: impl Into<BigInt>, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiLaurent { vars: vars.clone(), terms }
    }

    /// The variable `name` raised to `power`.
    pub fn var_pow(vars: &Vars, name: &str, power: i32) -> Result<Self, PolyError> {
        let i = vars.index(name).ok_or_else(|| PolyError::UnknownVar(name.into()))?;
        let mut e = vec![0; vars.len()];
        e[i] = power;
        Ok(Self::monomial(vars, 1, e))
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, PolyError> {
        Self::var_pow(vars, name, 1)
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I, C>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i32>, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// The constant term if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Leading term under the lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<i32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Trailing term under the lexicographic order.
    pub fn trailing(&self) -> Option<(&Vec<i32>, &BigInt)> {
        self.terms.iter().next()
    }

    pub(crate) fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(format!("{:?}", self.vars), format!("{:?}", other.vars)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut r = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiLaurent {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        MultiLaurent {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Non-negative powers for any polynomial; negative powers only for
    /// monomials with unit coefficient.
    pub fn pow(&self, n: i32) -> Result<Self, PolyError> {
        if n < 0 {
            let inv = self.unit_inverse().ok_or(PolyError::NotExact)?;
            return inv.pow(-n);
        }
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Inverse in the Laurent ring, which exists only for `±x^e`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c).is_one()) {
            return None;
        }
        Some(Self::monomial(&self.vars, c.clone(), e.iter().map(|x| -x).collect()))
    }

    /// Componentwise minimum exponent (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut m: Option<Vec<i32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        let mut m: Option<Vec<i32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| *a.max(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    /// gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division in the Laurent ring; `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(self.vars.same(&other.vars), "variable lists differ");
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lb_e, lb_c) = other.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        // degrees in each variable are additive, so quotient exponents lie in a box
        let lo: Vec<i32> = self.min_exponents().iter().zip(other.min_exponents()).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = self.max_exponents().iter().zip(other.max_exponents()).map(|(a, b)| a - b).collect();
        let mut r = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((e, c)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Vec<i32> = e.iter().zip(&lb_e).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return None;
            }
            let (qc, rem) = c.div_rem(&lb_c);
            if !rem.is_zero() {
                return None;
            }
            for (be, bc) in &other.terms {
                let ne: Vec<i32> = be.iter().zip(&qe).map(|(a, b)| a + b).collect();
                r.add_term(ne, -(bc * &qc));
            }
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that occurs with a non-zero exponent.
    pub fn embed(&self, target: &Vars) -> Result<Self, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let used = self.terms.keys().any(|e| e[i] != 0);
            match target.index(name) {
                Some(j) => map.push(Some(j)),
                None if !used => map.push(None),
                None => return Err(PolyError::UnknownVar(name.clone())),
            }
        }
        let mut r = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, x) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = *x;
                }
            }
            r.add_term(ne, c.clone());
        }
        Ok(r)
    }

    /// Ring homomorphism sending each variable to a Laurent polynomial over
    /// `target`. Variables without a binding must exist in `target` and map
    /// to themselves. Negative powers of non-unit images are cleared by a
    /// common denominator and divided out exactly at the end.
    pub fn substitute(&self, bindings: &[(&str, MultiLaurent)], target: &Vars) -> Result<Self, PolyError> {
        let n = self.vars.len();
        let mut images: Vec<MultiLaurent> = Vec::with_capacity(n);
        for name in self.vars.names() {
            match bindings.iter().find(|(v, _)| v == name) {
                Some((_, img)) => {
                    if !img.vars.same(target) {
                        return Err(PolyError::VarMismatch(format!("{:?}", img.vars), format!("{:?}", target)));
                    }
                    images.push(img.clone());
                }
                None => images.push(Self::var(target, name)?),
            }
        }
        let min = self.min_exponents();
        // denominators needed for negative powers of non-units
        let mut clear = vec![0i32; n];
        let mut inverses: Vec<Option<MultiLaurent>> = Vec::with_capacity(n);
        for i in 0..n {
            let inv = images[i].unit_inverse();
            if min[i] < 0 && inv.is_none() {
                if images[i].is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                clear[i] = -min[i];
            }
            inverses.push(inv);
        }
        let mut pow_cache: Vec<BTreeMap<i32, MultiLaurent>> = vec![BTreeMap::new(); n];
        let mut power = |i: usize, k: i32| -> MultiLaurent {
            pow_cache[i]
                .entry(k)
                .or_insert_with(|| {
                    if k >= 0 {
                        images[i].pow(k).unwrap()
                    } else {
                        inverses[i].as_ref().unwrap().pow(-k).unwrap()
                    }
                })
                .clone()
        };
        let mut acc = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for i in 0..n {
                let k = e[i] + clear[i];
                if k != 0 {
                    t = &t * &power(i, k);
                }
            }
            acc = &acc + &t;
        }
        let mut den = Self::one(target);
        for i in 0..n {
            if clear[i] > 0 {
                den = &den * &images[i].pow(clear[i]).unwrap();
            }
        }
        if den.is_one() {
            Ok(acc)
        } else {
            acc.div_exact(&den).ok_or(PolyError::NotExact)
        }
    }

    /// Rescales every exponent of `var` by `num/den`, failing when a
    /// rescaled exponent is not an integer.
    pub fn rescale_exponent(&self, var: &str, num: i32, den: i32) -> Result<Self, PolyError> {
        let i = self.vars.index(var).ok_or_else(|| PolyError::UnknownVar(var.into()))?;
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let scaled = e[i] * num;
            if scaled % den != 0 {
                return Err(PolyError::FractionalExponent(var.into()));
            }
            let mut ne = e.clone();
            ne[i] = scaled / den;
            r.add_term(ne, c.clone());
        }
        Ok(r)
    }

    /// Renames variables position-wise (same arity).
    pub fn rename(&self, target: &Vars) -> Self {
        assert_eq!(self.vars.len(), target.len());
        MultiLaurent { vars: target.clone(), terms: self.terms.clone() }
    }

    /// Residue modulo the ideal `(z, v^2 - 1)`: terms with a positive power
    /// of `z` vanish and powers of `v` reduce mod 2. Terms with a negative
    /// power of `z` are not in the ring where the reduction is defined.
    pub fn residue_mod_z_v2(&self, v: &str, z: &str) -> Result<Self, PolyError> {
        let iv = self.vars.index(v).ok_or_else(|| PolyError::UnknownVar(v.into()))?;
        let iz = self.vars.index(z).ok_or_else(|| PolyError::UnknownVar(z.into()))?;
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[iz] < 0 {
                return Err(PolyError::NotExact);
            }
            if e[iz] > 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[iv] = e[iv].rem_euclid(2);
            r.add_term(ne, c.clone());
        }
        Ok(r)
    }

    /// Degree in variable `i` (max exponent), `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Coefficient of `x_i^k`, as a polynomial in the remaining variables
    /// (same variable list, exponent `i` zeroed).
    pub fn coeff_in(&self, i: usize, k: i32) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut ne = e.clone();
                ne[i] = 0;
                r.terms.insert(ne, c.clone());
            }
        }
        r
    }

    /// Evaluates every variable at an integer (variables with negative
    /// exponents must evaluate to ±1).
    pub fn eval_integers(&self, point: &[i64]) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &p) in e.iter().zip(point) {
                if *x >= 0 {
                    t *= BigInt::from(p).pow(*x as u32);
                } else if p == 1 || p == -1 {
                    t *= BigInt::from(p).pow((-*x) as u32);
                } else {
                    return None;
                }
            }
            acc += t;
        }
        Some(acc)
    }

    pub fn is_leading_positive(&self) -> bool {
        self.leading().is_none_or(|(_, c)| c.is_positive())
    }

    pub fn parse(vars: &Vars, s: &str) -> Result<Self, PolyError> {
        parse::parse_poly(vars, s)
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render(self))
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", parse::render(self), self.vars)
    }
}

impl Add for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiLaurent {
            type Output = MultiLaurent;
            fn $m(self, rhs: MultiLaurent) -> MultiLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        -&self
    }
}

/// `mu = -A^2 - A^-2` over `vars`, which must contain `A`.
pub fn loop_value_a(vars: &Vars) -> MultiLaurent {
    let a2 = MultiLaurent::var_pow(vars, "A", 2).expect("A in vars");
    let am2 = MultiLaurent::var_pow(vars, "A", -2).expect("A in vars");
    -(&a2 + &am2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiLaurent {
        MultiLaurent::parse(&Vars::a(), s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("A + A^-1") * &p("A - A^-1"), p("A^2 - A^-2"));
    }

    #[test]
    fn additive_identity() {
        let x = p("3*A^4 - A + 7");
        assert_eq!(&x + &MultiLaurent::zero(&Vars::a()), x);
    }

    #[test]
    fn loop_value_squared() {
        let mu = loop_value_a(&Vars::a());
        assert_eq!(&mu * &mu, p("A^4 + 2 + A^-4"));
    }

    #[test]
    fn mismatched_vars_is_an_error() {
        let x = MultiLaurent::one(&Vars::a());
        let y = MultiLaurent::one(&Vars::vz());
        assert!(matches!(x.try_add(&y), Err(PolyError::VarMismatch(..))));
        assert!(matches!(x.try_mul(&y), Err(PolyError::VarMismatch(..))));
    }

    #[test]
    fn exact_division() {
        let a = p("A^2 - A^-2");
        let b = p("A + A^-1");
        assert_eq!(a.div_exact(&b), Some(p("A - A^-1")));
        assert_eq!(b.div_exact(&p("A - 1")), None);
        assert_eq!(p("4*A").div_exact(&p("2")), Some(p("2*A")));
        assert_eq!(p("3*A").div_exact(&p("2")), None);
    }

    #[test]
    fn alexander_of_two_component_unlink_vanishes() {
        let vz = Vars::vz();
        let t2 = MultiLaurent::parse(&vz, "v^-1*z^-1 - v*z^-1").unwrap();
        let s = Vars::s();
        let one = MultiLaurent::one(&s);
        let z = MultiLaurent::parse(&s, "s - s^-1").unwrap();
        let r = t2.substitute(&[("v", one), ("z", z)], &s).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn substitution_divides_out_denominators() {
        let vz = Vars::vz();
        let t2 = MultiLaurent::parse(&vz, "v^-1*z^-1 - v*z^-1").unwrap();
        let s = Vars::s();
        let v = MultiLaurent::parse(&s, "s^2").unwrap();
        let z = MultiLaurent::parse(&s, "s - s^-1").unwrap();
        let r = t2.substitute(&[("v", v), ("z", z)], &s).unwrap();
        assert_eq!(r, MultiLaurent::parse(&s, "-s - s^-1").unwrap());
        let bad = MultiLaurent::parse(&vz, "z^-1").unwrap();
        let z = MultiLaurent::parse(&s, "s - s^-1").unwrap();
        assert_eq!(bad.substitute(&[("v", MultiLaurent::one(&s)), ("z", z)], &s), Err(PolyError::NotExact));
    }

    #[test]
    fn identity_substitution() {
        let x = p("A");
        let r = x.substitute(&[("A", p("A"))], &Vars::a()).unwrap();
        assert_eq!(r, x);
    }

    #[test]
    fn fractional_exponent_rejected() {
        assert!(p("A^4 + A^-8").rescale_exponent("A", -1, 2).is_ok());
        assert_eq!(p("A^3").rescale_exponent("A", -1, 2), Err(PolyError::FractionalExponent("A".into())));
    }

    #[test]
    fn residues() {
        let vz = Vars::new(&["v", "z", "x1", "x2"]);
        let q = |s: &str| MultiLaurent::parse(&vz, s).unwrap();
        assert!(q("v*z*x2").residue_mod_z_v2("v", "z").unwrap().is_zero());
        assert_eq!(q("v^-2").residue_mod_z_v2("v", "z").unwrap(), q("1"));
        let det = q("x1^2 - v^2*x2^2 + v*z*x1*x2");
        assert_eq!(det.residue_mod_z_v2("v", "z").unwrap(), q("x1^2 - x2^2"));
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(p("A^-7 - A^-3 - A^5").to_string(), "-A^5 - A^-3 + A^-7");
        assert_eq!(MultiLaurent::zero(&Vars::a()).to_string(), "0");
        assert_eq!(p("1").to_string(), "1");
        let vz = Vars::vz();
        let q = MultiLaurent::parse(&vz, "2*v^2 - v^4 + v^2*z^2").unwrap();
        assert_eq!(q.to_string(), "-v^4 + v^2*z^2 + 2*v^2");
    }
}
