use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiLaurent, PolyError, Vars};

/// Dense univariate Laurent polynomial; the hot-path type for bracket sweeps.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniLaurent {
    lo: i32,
    coeffs: Vec<BigInt>,
}

impl UniLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut r = UniLaurent { lo: e, coeffs: vec![c.into()] };
        r.trim();
        r
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let k = e - self.lo;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.lo + k as i32, c))
    }

    pub fn shift(&self, by: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        UniLaurent { lo: self.lo + by, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut r = UniLaurent { lo: self.lo, coeffs: self.coeffs.iter().map(|x| x * c).collect() };
        r.trim();
        r
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        let lo = self.lo.min(o.lo);
        let hi = (self.lo + self.coeffs.len() as i32).max(o.lo + o.coeffs.len() as i32);
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
            self.lo = lo;
        }
        self.coeffs.resize((hi - lo) as usize, BigInt::zero());
        let off = (o.lo - lo) as usize;
        for (k, c) in o.coeffs.iter().enumerate() {
            self.coeffs[off + k] += c;
        }
        self.trim();
    }

    pub fn to_multi(&self, vars: &Vars, var: &str) -> Result<MultiLaurent, PolyError> {
        let i = vars.index(var).ok_or_else(|| PolyError::UnknownVar(var.to_string()))?;
        let mut r = MultiLaurent::zero(vars);
        for (e, c) in self.terms() {
            let mut ex = vec![0; vars.len()];
            ex[i] = e;
            r.add_term(ex, c.clone());
        }
        Ok(r)
    }

    /// Inverse of [`to_multi`](Self::to_multi); fails if other variables occur.
    pub fn from_multi(p: &MultiLaurent, var: &str) -> Result<Self, PolyError> {
        let i = p.vars().index(var).ok_or_else(|| PolyError::UnknownVar(var.to_string()))?;
        let mut r = UniLaurent::zero();
        for (e, c) in p.terms() {
            if e.iter().enumerate().any(|(j, &x)| j != i && x != 0) {
                return Err(PolyError::VarMismatch(format!("{:?}", p.vars()), var.to_string()));
            }
            r.add_assign_ref(&UniLaurent::monomial(c.clone(), e[i]));
        }
        Ok(r)
    }
}

impl Add for &UniLaurent {
    type Output = UniLaurent;
    fn add(self, o: &UniLaurent) -> UniLaurent {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
}

impl Neg for &UniLaurent {
    type Output = UniLaurent;
    fn neg(self) -> UniLaurent {
        UniLaurent { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniLaurent {
    type Output = UniLaurent;
    fn sub(self, o: &UniLaurent) -> UniLaurent {
        self + &(-o)
    }
}

impl Mul for &UniLaurent {
    type Output = UniLaurent;
    fn mul(self, o: &UniLaurent) -> UniLaurent {
        if self.is_zero() || o.is_zero() {
            return UniLaurent::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut r = UniLaurent { lo: self.lo + o.lo, coeffs };
        r.trim();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_sparse_type() {
        let v = Vars::a();
        let p = MultiLaurent::parse(&v, "-A^3 + 2*A^-5 - 1").unwrap();
        let q = MultiLaurent::parse(&v, "A^2 - A^-2").unwrap();
        let up = UniLaurent::from_multi(&p, "A").unwrap();
        let uq = UniLaurent::from_multi(&q, "A").unwrap();
        assert_eq!((&up * &uq).to_multi(&v, "A").unwrap(), &p * &q);
        assert_eq!((&up - &uq).to_multi(&v, "A").unwrap(), &p - &q);
        assert!((&up - &up).is_zero());
    }
}
