//! Spectral-parameter 2-tangles for TL_3 and inversion in TL_n.

use super::{tl2_basis, tl3_basis, PlanarMatching, TLElement, TlError};
use crate::linalg::{self, Matrix};
use crate::poly::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralAxis {
    /// `L P_(1) = P_(1) r_y(L)`.
    Y,
    /// `L P_(1) = P_(2) r_z(L)`.
    Z,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Spectral {
    Found { p: TLElement, p_inv: TLElement },
    NotInDense,
}

fn f(j: usize, l: &TLElement) -> TLElement {
    TLElement::basis(tl2_basis()[j].clone(), l.vars())
}

/// Inverse of `x f1 + y f2`, if it exists.
pub fn tl2_inverse_closed_form(x: &RationalFunction, y: &RationalFunction, mu: &RationalFunction) -> Option<(RationalFunction, RationalFunction)> {
    let s = x + &(mu * y);
    if x.is_zero() || s.is_zero() {
        return None;
    }
    let z1 = x.inv().ok()?;
    let z2 = -&(y / &(x * &s));
    Some((z1, z2))
}

/// Solves for an invertible `P = x f1 + y f2` intertwining `L` with its
/// rotation.
pub fn tl_spectral_p(l: &TLElement, axis: SpectralAxis) -> Result<Spectral, TlError> {
    if l.n() != 3 {
        return Err(TlError::Arity(l.n(), 3));
    }
    let vars = l.vars().clone();
    let mu = l.mu();
    let (x, y) = match axis {
        SpectralAxis::Y => {
            let a = l.coords(&tl3_basis());
            if a[3] == a[4] {
                (RationalFunction::one(&vars), RationalFunction::zero(&vars))
            } else {
                (&a[1] + &(&mu * &a[4]), &a[3] - &a[4])
            }
        }
        SpectralAxis::Z => {
            let rot = l.r_z();
            let basis = PlanarMatching::all(3);
            let cols = (0..2)
                .map(|j| {
                    let fj = f(j, l);
                    let lhs = l.mul(&fj.place(0, 3)?)?;
                    let rhs = fj.place(1, 3)?.mul(&rot)?;
                    Ok(lhs.sub(&rhs)?.coords(&basis))
                })
                .collect::<Result<Vec<_>, TlError>>()?;
            let m: Matrix = (0..basis.len()).map(|i| vec![cols[0][i].clone(), cols[1][i].clone()]).collect();
            let ns = linalg::nullspace(&m, &vars);
            match ns.len() {
                0 => return Ok(Spectral::NotInDense),
                1 => (ns[0][0].clone(), ns[0][1].clone()),
                _ => (RationalFunction::one(&vars), RationalFunction::zero(&vars)),
            }
        }
    };
    let Some((z1, z2)) = tl2_inverse_closed_form(&x, &y, &mu) else {
        return Ok(Spectral::NotInDense);
    };
    let p = f(0, l).scale(&x).add(&f(1, l).scale(&y))?;
    let p_inv = f(0, l).scale(&z1).add(&f(1, l).scale(&z2))?;
    Ok(Spectral::Found { p, p_inv })
}

/// Membership of `L` in the dense set where the solver succeeds.
pub fn tl3_membership(l: &TLElement) -> bool {
    let a = l.coords(&tl3_basis());
    let mu = l.mu();
    a[3] == a[4] || !(&(&a[1] + &(&mu * &a[4])) * &(&a[1] + &(&mu * &a[3]))).is_zero()
}

/// `M[i][j]` = coefficient of basis matching `i` in `X * b_j`.
pub fn left_mult_matrix(x: &TLElement) -> Result<Matrix, TlError> {
    let basis = PlanarMatching::all(x.n());
    let cols = basis
        .iter()
        .map(|b| Ok(x.mul(&TLElement::basis(b.clone(), x.vars()))?.coords(&basis)))
        .collect::<Result<Vec<_>, TlError>>()?;
    Ok((0..basis.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

/// Two-sided inverse by solving the left-multiplication system.
pub fn tl_invert(x: &TLElement) -> Result<TLElement, TlError> {
    let basis = PlanarMatching::all(x.n());
    let m = left_mult_matrix(x)?;
    let one = TLElement::one(x.n(), x.vars()).coords(&basis);
    let c = linalg::solve(&m, &one).ok_or(TlError::NonInvertible)?;
    let inv = TLElement::from_coords(&basis, &c, x.vars());
    if inv.mul(x)? != TLElement::one(x.n(), x.vars()) {
        return Err(TlError::NonInvertible);
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MultiLaurent, Vars};

    fn generic() -> TLElement {
        let v = Vars::new(&["A", "a1", "a2", "a3", "a4", "a5"]);
        let coords: Vec<RationalFunction> = (1..=5).map(|i| RationalFunction::var(&v, &format!("a{i}")).unwrap()).collect();
        TLElement::from_coords(&tl3_basis(), &coords, &v)
    }

    #[test]
    fn closed_form_solves_y_identity() {
        let l = generic();
        let Spectral::Found { p, p_inv } = tl_spectral_p(&l, SpectralAxis::Y).unwrap() else { panic!() };
        let lhs = l.mul(&p.place(0, 3).unwrap()).unwrap();
        let rhs = p.place(0, 3).unwrap().mul(&l.r_y()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(p.mul(&p_inv).unwrap(), TLElement::one(2, l.vars()));
    }

    #[test]
    fn z_axis_solution_intertwines() {
        let l = generic();
        let Spectral::Found { p, p_inv } = tl_spectral_p(&l, SpectralAxis::Z).unwrap() else { panic!() };
        let lhs = l.mul(&p.place(0, 3).unwrap()).unwrap();
        let rhs = p.place(1, 3).unwrap().mul(&l.r_z()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(p_inv.mul(&p).unwrap(), TLElement::one(2, l.vars()));
    }

    #[test]
    fn inversion_of_hook_combination() {
        let v = Vars::a();
        let x = RationalFunction::from(MultiLaurent::parse(&v, "A^2 + 3").unwrap());
        let y = RationalFunction::from(MultiLaurent::parse(&v, "A - 1").unwrap());
        let b = tl2_basis();
        let e = TLElement::from_terms(2, &v, [(b[0].clone(), x.clone()), (b[1].clone(), y.clone())]);
        let inv = tl_invert(&e).unwrap();
        let (z1, z2) = tl2_inverse_closed_form(&x, &y, &e.mu()).unwrap();
        assert_eq!(inv.coords(&b), vec![z1, z2]);
        let h = TLElement::basis(b[1].clone(), &v);
        assert_eq!(tl_invert(&h), Err(TlError::NonInvertible));
    }
}
