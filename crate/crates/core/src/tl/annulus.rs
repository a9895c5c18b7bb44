use std::collections::BTreeMap;
use std::fmt;

use super::{PlanarMatching, TLElement};
use crate::poly::{RationalFunction, Vars};

/// An element of the bracket skein module of the solid torus, as
/// coefficients of powers of the core curve.
#[derive(Clone, PartialEq, Eq)]
pub struct AnnulusClass {
    vars: Vars,
    coeffs: BTreeMap<usize, RationalFunction>,
}

impl AnnulusClass {
    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| RationalFunction::zero(&self.vars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &RationalFunction)> {
        self.coeffs.iter()
    }
}

impl fmt::Debug for AnnulusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(k, c)| format!("({c})*z^{k}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Loops of the annular closure of `m`: `(contractible, core-parallel)`.
pub fn closure_census(m: &PlanarMatching) -> (usize, usize) {
    let n = m.n();
    let mut seen = vec![false; 2 * n];
    let (mut trivial, mut core) = (0, 0);
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let mut p = start;
        let mut winding = 0i32;
        loop {
            seen[p] = true;
            let q = m.partner(p);
            seen[q] = true;
            // leave through the outer arc joining top i and bottom i
            let (next, w) = if q < n { (q + n, -1) } else { (q - n, 1) };
            winding += w;
            p = next;
            if p == start {
                break;
            }
        }
        if winding == 0 {
            trivial += 1;
        } else {
            core += 1;
        }
    }
    (trivial, core)
}

pub fn annulus_reduce(x: &TLElement) -> AnnulusClass {
    let mu = x.mu();
    let mut coeffs: BTreeMap<usize, RationalFunction> = BTreeMap::new();
    for (m, c) in x.terms() {
        let (trivial, core) = closure_census(m);
        let mut t = c.clone();
        for _ in 0..trivial {
            t = &t * &mu;
        }
        let e = coeffs.entry(core).or_insert_with(|| RationalFunction::zero(x.vars()));
        *e = &*e + &t;
    }
    coeffs.retain(|_, c| !c.is_zero());
    AnnulusClass { vars: x.vars().clone(), coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_by_tracing() {
        assert_eq!(closure_census(&PlanarMatching::identity(3)), (0, 3));
        // the hook closes to a single contractible loop
        assert_eq!(closure_census(&PlanarMatching::hook(2, 0)), (1, 0));
        assert_eq!(closure_census(&PlanarMatching::hook(3, 0)), (1, 1));
    }
}
