//! `S'_3(3)`: 3-tangles with alternating end orientations, basis
//! `e_0..e_5`, `e_0` the identity tangle.

use std::fmt;

use super::HeckeError;
use crate::linalg::{self, Matrix};
use crate::poly::{RationalFunction, Vars};

#[derive(Clone, PartialEq, Eq)]
pub struct SPrime3Element {
    vars: Vars,
    mu: RationalFunction,
    c: [RationalFunction; 6],
}

/// The HOMFLYPT loop value `(v^-1 - v) / z`.
pub fn homflypt_loop(vars: &Vars) -> Result<RationalFunction, HeckeError> {
    let v = RationalFunction::var(vars, "v")?;
    let z = RationalFunction::var(vars, "z")?;
    Ok(&(&v.inv()? - &v) / &z)
}

impl SPrime3Element {
    /// Uses the HOMFLYPT loop value for the scalar `mu`.
    pub fn new(coeffs: [RationalFunction; 6], vars: &Vars) -> Result<Self, HeckeError> {
        Ok(Self::with_mu(coeffs, vars, homflypt_loop(vars)?))
    }

    pub fn with_mu(c: [RationalFunction; 6], vars: &Vars, mu: RationalFunction) -> Self {
        SPrime3Element { vars: vars.clone(), mu, c }
    }

    pub fn basis(i: usize, vars: &Vars, mu: &RationalFunction) -> Self {
        let c = std::array::from_fn(|k| if k == i { RationalFunction::one(vars) } else { RationalFunction::zero(vars) });
        Self::with_mu(c, vars, mu.clone())
    }

    pub fn unit(vars: &Vars, mu: &RationalFunction) -> Self {
        Self::basis(0, vars, mu)
    }

    pub fn coeffs(&self) -> &[RationalFunction; 6] {
        &self.c
    }

    pub fn mu(&self) -> &RationalFunction {
        &self.mu
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    fn like(&self, c: [RationalFunction; 6]) -> Self {
        Self::with_mu(c, &self.vars, self.mu.clone())
    }

    pub fn mul(&self, y: &Self) -> Result<Self, HeckeError> {
        let vars = &self.vars;
        let x = &self.c;
        let y = &y.c;
        let mu = &self.mu;
        let v = RationalFunction::var(vars, "v")?;
        let z = RationalFunction::var(vars, "z")?;
        let vi = v.inv()?;
        let vi2 = &vi * &vi;
        let viz = &vi * &z;
        let s = |a: usize, b: usize, m: usize| &(&x[a] + &x[b]) + &(mu * &x[m]);
        let c = [
            &(&y[0] * &x[0]) + &(&vi2 * &(&y[5] * &x[5])),
            &(&(&(&y[0] * &x[1]) + &(&y[1] * &s(0, 3, 1))) + &(&y[4] * &s(1, 5, 3))) + &(&y[5] * &(&x[3] - &(&viz * &x[5]))),
            &(&(&(&y[0] * &x[2]) + &(&y[2] * &s(0, 4, 2))) + &(&y[3] * &s(2, 5, 4))) + &(&y[5] * &(&x[4] - &(&viz * &x[5]))),
            &(&(&(&y[0] * &x[3]) + &(&y[2] * &s(1, 5, 3))) + &(&y[3] * &s(0, 3, 1))) + &(&y[5] * &x[1]),
            &(&(&(&y[0] * &x[4]) + &(&y[1] * &s(2, 5, 4))) + &(&y[4] * &s(0, 4, 2))) + &(&y[5] * &x[2]),
            &(&y[0] * &x[5]) + &(&y[5] * &(&x[0] + &(&viz * &x[5]))),
        ];
        Ok(self.like(c))
    }

    /// The rotation anti-automorphism: swaps `e_3` and `e_4`.
    pub fn r_y(&self) -> Self {
        let mut c = self.c.clone();
        c.swap(3, 4);
        self.like(c)
    }

    pub fn is_symmetric(&self) -> bool {
        self.c[3] == self.c[4]
    }

    /// `M[i][j]` = coefficient of `e_i` in `X e_j`.
    pub fn left_mult_matrix(&self) -> Result<Matrix, HeckeError> {
        let cols = (0..6).map(|j| Ok(self.mul(&Self::basis(j, &self.vars, &self.mu))?.c)).collect::<Result<Vec<_>, HeckeError>>()?;
        Ok((0..6).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
    }

    /// The product whose nonvanishing characterizes invertibility.
    pub fn invertibility_poly(&self) -> Result<RationalFunction, HeckeError> {
        let y = &self.c;
        let mu = &self.mu;
        let v = RationalFunction::var(&self.vars, "v")?;
        let z = RationalFunction::var(&self.vars, "z")?;
        let vi = v.inv()?;
        let s = |a: usize, b: usize, m: usize| &(&y[a] + &y[b]) + &(mu * &y[m]);
        let f1 = &(&s(0, 3, 1) * &s(0, 4, 2)) - &(&s(2, 5, 4) * &s(1, 5, 3));
        let f2 = &(&y[0] * &(&y[0] + &(&(&vi * &z) * &y[5]))) - &(&(&vi * &vi) * &(&y[5] * &y[5]));
        Ok(&f1 * &f2)
    }

    /// A right inverse `Z` with `self * Z = e_0`.
    pub fn invert(&self) -> Result<Self, HeckeError> {
        let m = self.left_mult_matrix()?;
        let e0 = Self::unit(&self.vars, &self.mu).c;
        let sol = linalg::solve(&m, &e0).ok_or(HeckeError::NonInvertible)?;
        let z = self.like(std::array::from_fn(|i| sol[i].clone()));
        if self.mul(&z)? != Self::unit(&self.vars, &self.mu) {
            return Err(HeckeError::NonInvertible);
        }
        Ok(z)
    }

    /// Reads a list of six coefficient strings.
    pub fn from_json_value(vars: &Vars, v: &serde_json::Value) -> Result<Self, HeckeError> {
        let xs = v.as_array().filter(|xs| xs.len() == 6).ok_or_else(|| HeckeError::Unsupported("expected a list of six coefficients".into()))?;
        let c = xs
            .iter()
            .map(|x| {
                let s = x.as_str().ok_or_else(|| HeckeError::Unsupported(format!("coefficient {x} is not a string")))?;
                Ok(RationalFunction::parse(vars, s)?)
            })
            .collect::<Result<Vec<_>, HeckeError>>()?;
        Self::new(c.try_into().expect("six coefficients"), vars)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(self.c.iter().map(|x| serde_json::Value::String(x.to_string())).collect())
    }
}

impl fmt::Debug for SPrime3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| format!("({x})e{i}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SPrime3Spectral {
    Found { y: SPrime3Element, y_inv: SPrime3Element },
    NotInDense,
}

/// Coefficients of the linear form `Y -> [e_3](XY) - [e_4](XY)` in the
/// unknowns `(y_0, y_1, y_2, y_3 = y_4, y_5)`.
fn symmetry_row(x: &SPrime3Element) -> Result<Vec<RationalFunction>, HeckeError> {
    let vars = x.vars();
    let unknown = |k: usize| -> SPrime3Element {
        let mut e = SPrime3Element::basis(if k == 4 { 5 } else { k }, vars, x.mu());
        if k == 3 {
            e.c[4] = RationalFunction::one(vars);
        }
        e
    };
    (0..5)
        .map(|k| {
            let p = x.mul(&unknown(k))?;
            Ok(&p.c[3] - &p.c[4])
        })
        .collect()
}

fn from_unknowns(u: &[RationalFunction], vars: &Vars, mu: &RationalFunction) -> SPrime3Element {
    SPrime3Element::with_mu([u[0].clone(), u[1].clone(), u[2].clone(), u[3].clone(), u[3].clone(), u[4].clone()], vars, mu.clone())
}

/// Solution space of `Y = r_y(Y)`, `XY = r_y(XY)`, `BY = r_y(BY)`.
pub fn sprime3_solution_space(x: &SPrime3Element, b: &SPrime3Element) -> Result<Vec<SPrime3Element>, HeckeError> {
    let m: Matrix = vec![symmetry_row(x)?, symmetry_row(b)?];
    Ok(linalg::nullspace(&m, x.vars()).iter().map(|u| from_unknowns(u, x.vars(), x.mu())).collect())
}

/// Finds an invertible `Y` with `X Y = Y r_y(X)` and `B Y = Y r_y(B)`.
pub fn sprime3_spectral(x: &SPrime3Element, b: &SPrime3Element) -> Result<SPrime3Spectral, HeckeError> {
    let space = sprime3_solution_space(x, b)?;
    let vars = x.vars();
    let mut candidates: Vec<SPrime3Element> = space.clone();
    // small integer combinations when no single basis vector is invertible
    for w in 1..=3i64 {
        let mut acc = SPrime3Element::with_mu(std::array::from_fn(|_| RationalFunction::zero(vars)), vars, x.mu().clone());
        for (k, s) in space.iter().enumerate() {
            let c = RationalFunction::constant(vars, w.pow(k as u32));
            acc = acc.like(std::array::from_fn(|i| &acc.c[i] + &(&c * &s.c[i])));
        }
        candidates.push(acc);
    }
    for y in candidates {
        if y.invertibility_poly()?.is_zero() {
            continue;
        }
        if let Ok(y_inv) = y.invert() {
            return Ok(SPrime3Spectral::Found { y, y_inv });
        }
    }
    Ok(SPrime3Spectral::NotInDense)
}

pub fn sprime3_membership(x: &SPrime3Element, b: &SPrime3Element) -> Result<bool, HeckeError> {
    Ok(matches!(sprime3_spectral(x, b)?, SPrime3Spectral::Found { .. }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiLaurent;

    fn symbolic(prefix: &str, vars: &Vars, mu: &RationalFunction) -> SPrime3Element {
        SPrime3Element::with_mu(std::array::from_fn(|i| RationalFunction::var(vars, &format!("{prefix}{i}")).unwrap()), vars, mu.clone())
    }

    fn vars() -> Vars {
        Vars::new(&["v", "z", "mu", "x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1", "y2", "y3", "y4", "y5"])
    }

    #[test]
    fn unit_is_two_sided() {
        let v = vars();
        let mu = RationalFunction::var(&v, "mu").unwrap();
        let x = symbolic("x", &v, &mu);
        let e = SPrime3Element::unit(&v, &mu);
        assert_eq!(x.mul(&e).unwrap(), x);
        assert_eq!(e.mul(&x).unwrap(), x);
    }

    #[test]
    fn ry_is_anti_automorphism_for_formal_mu() {
        let v = vars();
        let mu = RationalFunction::var(&v, "mu").unwrap();
        let x = symbolic("x", &v, &mu);
        let y = symbolic("y", &v, &mu);
        assert_eq!(x.mul(&y).unwrap().r_y(), y.r_y().mul(&x.r_y()).unwrap());
    }

    #[test]
    fn printed_condition_is_the_symmetry_constraint() {
        let v = vars();
        let mu = RationalFunction::var(&v, "mu").unwrap();
        let x = symbolic("x", &v, &mu);
        let mut y = symbolic("y", &v, &mu);
        y.c[4] = y.c[3].clone();
        let xy = x.mul(&y).unwrap();
        let lhs = &xy.c[4] - &xy.c[3];
        let p = |s: &str| RationalFunction::from(MultiLaurent::parse(&v, s).unwrap());
        let printed = p("y0*(x4 - x3) + y1*(x2 + x5 + mu*x4) - y2*(x1 + x5 + mu*x3) - y3*(x3 - x4 + mu*(x1 - x2)) + y5*(x2 - x1)");
        assert_eq!(lhs, printed);
    }

    #[test]
    fn determinant_factors() {
        let v = vars();
        let mu = RationalFunction::var(&v, "mu").unwrap();
        let x = symbolic("x", &v, &mu);
        let det = linalg::det(&x.left_mult_matrix().unwrap(), &v);
        let p = |s: &str| RationalFunction::from(MultiLaurent::parse(&v, s).unwrap());
        let f1 = p("(x0 + x3 + mu*x1)*(x0 + x4 + mu*x2) - (x2 + x5 + mu*x4)*(x1 + x5 + mu*x3)");
        let f2 = p("x0*(x0 + v^-1*z*x5) - v^-2*x5^2");
        assert_eq!(det, &(&f1 * &f1) * &f2);
    }
}
