use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{poly_gcd, MultiLaurent, PolyError, Vars};

/// A quotient of Laurent polynomials in reduced canonical form.
///
/// The denominator has every minimum exponent zero, is coprime to the
/// numerator, and has a positive leading coefficient; monomial factors live
/// in the numerator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: MultiLaurent,
    den: MultiLaurent,
}

impl RationalFunction {
    pub fn new(num: MultiLaurent, den: MultiLaurent) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.vars() != den.vars() {
            return Err(PolyError::VarMismatch(format!("{:?}", num.vars()), format!("{:?}", den.vars())));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiLaurent, den: MultiLaurent) -> Self {
        let vars = num.vars().clone();
        if num.is_zero() {
            return RationalFunction { num, den: MultiLaurent::one(&vars) };
        }
        let mn = num.min_exponents();
        let md = den.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let mut n = num.shift(&neg(&mn));
        let mut d = den.shift(&neg(&md));
        if !d.is_one() {
            let g = poly_gcd(&n, &d);
            if !g.is_one() {
                n = n.div_exact(&g).expect("gcd divides numerator");
                d = d.div_exact(&g).expect("gcd divides denominator");
            }
            if !d.is_leading_positive() {
                n = -n;
                d = -d;
            }
        }
        let shift: Vec<i32> = mn.iter().zip(&md).map(|(a, b)| a - b).collect();
        RationalFunction { num: n.shift(&shift), den: d }
    }

    /// Parses `p` or `p / q`; the quotient is split at a `/` outside any
    /// parentheses.
    pub fn parse(vars: &Vars, s: &str) -> Result<Self, PolyError> {
        let mut depth = 0i32;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => return Self::new(MultiLaurent::parse(vars, &s[..i])?, MultiLaurent::parse(vars, &s[i + 1..])?),
                _ => {}
            }
        }
        Ok(Self::from_poly(MultiLaurent::parse(vars, s)?))
    }

    pub fn from_poly(p: MultiLaurent) -> Self {
        let one = MultiLaurent::one(p.vars());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(vars: &Vars) -> Self {
        Self::from_poly(MultiLaurent::zero(vars))
    }

    pub fn one(vars: &Vars) -> Self {
        Self::from_poly(MultiLaurent::one(vars))
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::from_poly(MultiLaurent::constant(vars, c))
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, PolyError> {
        Ok(Self::from_poly(MultiLaurent::var(vars, name)?))
    }

    pub fn num(&self) -> &MultiLaurent {
        &self.num
    }

    pub fn den(&self) -> &MultiLaurent {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, PolyError> {
        if self.den == o.den {
            return Ok(Self::reduce(self.num.try_add(&o.num)?, self.den.clone()));
        }
        let n = self.num.try_mul(&o.den)?.try_add(&o.num.try_mul(&self.den)?)?;
        Ok(Self::reduce(n, self.den.try_mul(&o.den)?))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(self.vars()));
        }
        if self.den.is_one() && o.den.is_one() {
            return Ok(Self::from_poly(self.num.try_mul(&o.num)?));
        }
        Ok(Self::reduce(self.num.try_mul(&o.num)?, self.den.try_mul(&o.den)?))
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, PolyError> {
        self.try_mul(&o.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Self, PolyError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.vars());
        for _ in 0..n.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Re-expresses over a superset of the variables.
    pub fn embed(&self, target: &Vars) -> Result<Self, PolyError> {
        Ok(RationalFunction { num: self.num.embed(target)?, den: self.den.embed(target)? })
    }

    /// Ring homomorphism into rational functions over `target`; unbound
    /// variables must exist in `target`.
    pub fn substitute(&self, bindings: &[(&str, RationalFunction)], target: &Vars) -> Result<Self, PolyError> {
        let n = eval_poly(&self.num, bindings, target)?;
        let d = eval_poly(&self.den, bindings, target)?;
        n.try_div(&d)
    }
}

fn eval_poly(p: &MultiLaurent, bindings: &[(&str, RationalFunction)], target: &Vars) -> Result<RationalFunction, PolyError> {
    let names = p.vars().names();
    let mut images = Vec::with_capacity(names.len());
    for name in names {
        match bindings.iter().find(|(v, _)| v == name) {
            Some((_, img)) => images.push(img.clone()),
            None => images.push(RationalFunction::var(target, name)?),
        }
    }
    let mut acc = RationalFunction::zero(target);
    for (e, c) in p.terms() {
        let mut t = RationalFunction::constant(target, c.clone());
        for (img, &k) in images.iter().zip(e) {
            if k != 0 {
                t = t.try_mul(&img.pow(k)?)?;
            }
        }
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<MultiLaurent> for RationalFunction {
    fn from(p: MultiLaurent) -> Self {
        Self::from_poly(p)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! rf_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                self.$f(rhs).expect(concat!("rational function ", stringify!($m)))
            }
        }
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
rf_op!(Add, add, try_add);
rf_op!(Sub, sub, try_sub);
rf_op!(Mul, mul, try_mul);
rf_op!(Div, div, try_div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::loop_value_a;

    #[test]
    fn field_identities() {
        let v = Vars::new(&["x"]);
        let x = RationalFunction::var(&v, "x").unwrap();
        assert!((&x.inv().unwrap() * &x).is_one());
        let a = Vars::a();
        let mu = RationalFunction::from(loop_value_a(&a));
        assert!((&mu / &mu).is_one());
        assert_eq!(RationalFunction::zero(&a).inv(), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn reduced_form_is_canonical() {
        let v = Vars::vz();
        let p = |s: &str| MultiLaurent::parse(&v, s).unwrap();
        let f = RationalFunction::new(p("v^2 - 1"), p("-2*v + 2")).unwrap();
        assert_eq!(f.num(), &p("-v - 1"));
        assert_eq!(f.den(), &p("2"));
        let g = RationalFunction::new(p("z^-1"), p("v*z^3")).unwrap();
        assert_eq!(g.num(), &p("v^-1*z^-4"));
        assert!(g.den().is_one());
    }

    #[test]
    fn inverse_of_spectral_denominator() {
        let v = Vars::new(&["A", "a2", "a4", "a5"]);
        let p = |s: &str| RationalFunction::from(MultiLaurent::parse(&v, s).unwrap());
        let mu = RationalFunction::from(loop_value_a(&v));
        let x = &p("a2") + &(&mu * &p("a5"));
        let y = &p("a4") - &p("a5");
        let d = &x + &(&mu * &y);
        assert!((&d.inv().unwrap() * &d).is_one());
    }
}
