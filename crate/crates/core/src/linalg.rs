//! Dense linear algebra over exact coefficient rings.

use crate::poly::{MultiLaurent, RationalFunction, Vars};

pub type Matrix = Vec<Vec<RationalFunction>>;

/// Determinant by Laplace expansion over column subsets; no divisions.
pub fn det_poly(m: &[Vec<MultiLaurent>], vars: &Vars) -> MultiLaurent {
    let n = m.len();
    if n == 0 {
        return MultiLaurent::one(vars);
    }
    let mut dp: Vec<Option<MultiLaurent>> = vec![None; 1 << n];
    dp[0] = Some(MultiLaurent::one(vars));
    for mask in 0..(1usize << n) {
        let Some(cur) = dp[mask].take() else { continue };
        if cur.is_zero() {
            continue;
        }
        let r = mask.count_ones() as usize;
        if r == n {
            dp[mask] = Some(cur);
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 || m[r][c].is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let mut t = &m[r][c] * &cur;
            if above % 2 == 1 {
                t = -t;
            }
            let slot = &mut dp[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(acc) => &acc + &t,
                None => t,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| MultiLaurent::zero(vars))
}

/// Determinant of a matrix of rational functions via a common denominator.
pub fn det(m: &Matrix, vars: &Vars) -> RationalFunction {
    let n = m.len();
    let mut den = RationalFunction::one(vars);
    let mut rows = Vec::with_capacity(n);
    for row in m {
        let mut l = RationalFunction::one(vars);
        for x in row {
            // least common multiple of denominators, up to units
            let d = RationalFunction::from(x.den().clone());
            let g = crate::poly::poly_gcd(l.num(), x.den());
            l = &l * &(&d / &RationalFunction::from(g));
        }
        den = &den * &l;
        rows.push(row.iter().map(|x| (x * &l).as_poly().expect("cleared").clone()).collect::<Vec<_>>());
    }
    &RationalFunction::from(det_poly(&rows, vars)) / &den
}

/// Row-reduces in place; returns pivot columns.
fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix, vars: &Vars) -> Vec<Vec<RationalFunction>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RationalFunction::zero(vars); cols];
            v[f] = RationalFunction::one(vars);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&a[r][f];
            }
            v
        })
        .collect()
}

/// The unique solution of `m x = b` for square non-singular `m`.
pub fn solve(m: &Matrix, b: &[RationalFunction]) -> Option<Vec<RationalFunction>> {
    let n = m.len();
    let mut a: Matrix = m.iter().zip(b).map(|(row, x)| row.iter().cloned().chain([x.clone()]).collect()).collect();
    let pivots = rref(&mut a);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[RationalFunction], vars: &Vars) -> Vec<RationalFunction> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(RationalFunction::zero(vars), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { &acc + &(a * b) }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let v = Vars::new(&["x", "y"]);
        let p = |s: &str| MultiLaurent::parse(&v, s).unwrap();
        let m = vec![vec![p("x"), p("y"), p("1")], vec![p("2"), p("x*y"), p("0")], vec![p("y"), p("1"), p("x")]];
        // cofactor expansion along the first row
        let oracle = &(&p("x") * &(&(&p("x*y") * &p("x")) - &p("0"))) - &(&p("y") * &(&(&p("2") * &p("x")) - &p("0")));
        let oracle = &oracle + &(&p("1") * &(&p("2") - &(&p("x*y") * &p("y"))));
        assert_eq!(det_poly(&m, &v), oracle);
    }

    #[test]
    fn solve_and_nullspace() {
        let v = Vars::new(&["t"]);
        let r = |s: &str| RationalFunction::from(MultiLaurent::parse(&v, s).unwrap());
        let m = vec![vec![r("t"), r("1")], vec![r("1"), r("t")]];
        let x = solve(&m, &[r("1"), r("0")]).unwrap();
        assert_eq!(mat_vec(&m, &x, &v), vec![r("1"), r("0")]);
        let s = vec![vec![r("t"), r("t^2")], vec![r("1"), r("t")]];
        assert!(solve(&s, &[r("1"), r("0")]).is_none());
        let ns = nullspace(&s, &v);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&s, &ns[0], &v).iter().all(RationalFunction::is_zero));
        assert_eq!(det(&s, &v), RationalFunction::zero(&v));
    }
}
