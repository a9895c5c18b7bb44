//! Generic invertibility in TL_n and H_n.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{all_perms, left_mult_matrix, matrix_as_polys, HeckeElement, HeckeError};
use crate::linalg::{self, Matrix};
use crate::poly::{MultiLaurent, RationalFunction, Vars};
use crate::tl::{self, PlanarMatching, TLElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Algebra {
    Tl,
    Hecke,
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub algebra: Algebra,
    pub n: usize,
    pub dim: usize,
    pub trials: usize,
    pub invertible: usize,
    /// Determinant of left multiplication by the generic element; for H_n
    /// reduced mod `(z, v^2 - 1)`.
    pub residue: Option<String>,
    /// The residue is monic of degree `dim` in `x1`.
    pub leading_ok: Option<bool>,
    /// The coefficient of `x1^(dim-1)` vanishes.
    pub subleading_vanishes: Option<bool>,
}

fn x_vars(params: &[&str], dim: usize) -> Vars {
    let mut names: Vec<String> = params.iter().map(|s| s.to_string()).collect();
    names.extend((1..=dim).map(|i| format!("x{i}")));
    Vars::new(&names)
}

fn generic_matrix(algebra: Algebra, n: usize) -> Result<(Vars, Matrix), HeckeError> {
    match algebra {
        Algebra::Hecke => {
            let basis = all_perms(n);
            let vars = x_vars(&["v", "z"], basis.len());
            let coords: Vec<RationalFunction> = (1..=basis.len()).map(|i| RationalFunction::var(&vars, &format!("x{i}"))).collect::<Result<_, _>>()?;
            let x = HeckeElement::from_coords(&basis, &coords, &vars);
            Ok((vars, left_mult_matrix(&x)?))
        }
        Algebra::Tl => {
            let basis = PlanarMatching::all(n);
            let vars = x_vars(&["A"], basis.len());
            let coords: Vec<RationalFunction> = (1..=basis.len()).map(|i| RationalFunction::var(&vars, &format!("x{i}"))).collect::<Result<_, _>>()?;
            // identity first so that x1 is its coefficient
            let mut ordered = basis.clone();
            let id = PlanarMatching::identity(n);
            ordered.retain(|m| *m != id);
            ordered.insert(0, id);
            let x = TLElement::from_coords(&ordered, &coords, &vars);
            let m = tl::left_mult_matrix(&x).map_err(|e| HeckeError::Unsupported(e.to_string()))?;
            Ok((vars, m))
        }
    }
}

/// Symbolic determinant of left multiplication by `sum x_i b_i` (`b_1 = 1`),
/// reduced mod `(z, v^2 - 1)` for the Hecke algebra.
pub fn det_residue(algebra: Algebra, n: usize) -> Result<(Vars, MultiLaurent), HeckeError> {
    let (vars, m) = generic_matrix(algebra, n)?;
    let polys = matrix_as_polys(&m).ok_or_else(|| HeckeError::Unsupported("matrix has fractional entries".into()))?;
    let det = match algebra {
        Algebra::Hecke => {
            let reduced = polys.iter().map(|row| row.iter().map(|p| p.residue_mod_z_v2("v", "z")).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
            linalg::det_poly(&reduced, &vars).residue_mod_z_v2("v", "z")?
        }
        Algebra::Tl => linalg::det_poly(&polys, &vars),
    };
    Ok((vars, det))
}

fn dimension(algebra: Algebra, n: usize) -> usize {
    match algebra {
        Algebra::Hecke => (1..=n).product(),
        Algebra::Tl => tl::catalan(n),
    }
}

/// Seeded random elements with integer coefficients up to 10^6; invertibility
/// is certified by a nonzero determinant at an integer specialization of
/// the parameters, falling back to the symbolic rank.
pub fn density_witness(algebra: Algebra, n: usize, trials: usize, seed: u64) -> Result<DensityReport, HeckeError> {
    if n == 0 || n > 4 {
        return Err(HeckeError::Unsupported(format!("density check needs 1 <= n <= 4, got {n}")));
    }
    let dim = dimension(algebra, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invertible = 0;
    for _ in 0..trials {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
        let (vars, m) = match algebra {
            Algebra::Hecke => {
                let vars = Vars::vz();
                let basis = all_perms(n);
                let c: Vec<RationalFunction> = coords.iter().map(|&k| RationalFunction::constant(&vars, k)).collect();
                (vars.clone(), left_mult_matrix(&HeckeElement::from_coords(&basis, &c, &vars))?)
            }
            Algebra::Tl => {
                let vars = Vars::a();
                let basis = PlanarMatching::all(n);
                let c: Vec<RationalFunction> = coords.iter().map(|&k| RationalFunction::constant(&vars, k)).collect();
                let m = tl::left_mult_matrix(&TLElement::from_coords(&basis, &c, &vars)).map_err(|e| HeckeError::Unsupported(e.to_string()))?;
                (vars, m)
            }
        };
        let point: Vec<(String, RationalFunction)> =
            vars.names().iter().map(|name| (name.clone(), RationalFunction::constant(&vars, rng.gen_range(2..=40i64)))).collect();
        let bindings: Vec<(&str, RationalFunction)> = point.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        let special: Matrix = m.iter().map(|row| row.iter().map(|x| x.substitute(&bindings, &vars)).collect::<Result<Vec<_>, _>>()).collect::<Result<_, _>>()?;
        if linalg::rank(&special) == dim || linalg::rank(&m) == dim {
            invertible += 1;
        }
    }
    let (residue, leading_ok, subleading_vanishes) = if dim <= 6 {
        let (vars, r) = det_residue(algebra, n)?;
        let i = vars.index("x1").expect("x1 present");
        let lead = r.coeff_in(i, dim as i32);
        let ok = r.degree_in(i) == Some(dim as i32) && lead.is_one();
        let sub = r.coeff_in(i, dim as i32 - 1).is_zero();
        (Some(r.to_string()), Some(ok), Some(sub))
    } else {
        (None, None, None)
    };
    Ok(DensityReport { algebra, n, dim, trials, invertible, residue, leading_ok, subleading_vanishes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_residue() {
        let (vars, r) = det_residue(Algebra::Hecke, 2).unwrap();
        assert_eq!(r, MultiLaurent::parse(&vars, "x1^2 - x2^2").unwrap());
    }

    #[test]
    fn tl2_determinant() {
        let (vars, r) = det_residue(Algebra::Tl, 2).unwrap();
        let expect = MultiLaurent::parse(&vars, "x1*(x1 + (-A^2 - A^-2)*x2)").unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn h3_leading_term() {
        let rep = density_witness(Algebra::Hecke, 3, 5, 1).unwrap();
        assert_eq!(rep.leading_ok, Some(true));
        assert_eq!(rep.subleading_vanishes, Some(true));
        assert_eq!(rep.invertible, 5);
    }
}
