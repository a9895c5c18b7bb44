//! Multivariate gcd over the integers: recursive content / primitive part
//! with a primitive pseudo-remainder sequence in a chosen main variable.

use num_integer::Integer;

use super::MultiLaurent;

/// gcd in the Laurent ring, normalized to have all minimum exponents zero
/// and a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    if a.is_zero() {
        return normalize(&strip(b));
    }
    if b.is_zero() {
        return normalize(&strip(a));
    }
    normalize(&gcd_core(&strip(a), &strip(b)))
}

fn strip(p: &MultiLaurent) -> MultiLaurent {
    let m: Vec<i32> = p.min_exponents().iter().map(|x| -x).collect();
    p.shift(&m)
}

fn normalize(p: &MultiLaurent) -> MultiLaurent {
    if p.is_leading_positive() {
        p.clone()
    } else {
        -p
    }
}

/// gcd of two polynomials with non-negative exponents (monomial factors
/// included).
fn gcd_rec(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let m: Vec<i32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    let g = gcd_core(&strip(a), &strip(b));
    g.shift(&m)
}

fn int_gcd(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    MultiLaurent::constant(a.vars(), a.content().gcd(&b.content()))
}

fn gcd_core(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return int_gcd(a, b);
    }
    // cheap divisibility shortcuts
    if a.num_terms() <= b.num_terms() {
        if b.div_exact(a).is_some() {
            return normalize(a);
        }
    } else if a.div_exact(b).is_some() {
        return normalize(b);
    }
    let n = a.vars().len();
    let mut best: Option<(usize, i32)> = None;
    for i in 0..n {
        let da = a.degree_in(i).unwrap_or(0);
        let db = b.degree_in(i).unwrap_or(0);
        if da > 0 && db > 0 {
            let d = da.max(db);
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
    }
    let Some((x, _)) = best else {
        return int_gcd(a, b);
    };
    let ua = to_uni(a, x);
    let ub = to_uni(b, x);
    let (ca, pa) = primitive(&ua);
    let (cb, pb) = primitive(&ub);
    let c = gcd_rec(&ca, &cb);
    let h = prs_gcd(pa, pb);
    normalize(&(&c * &from_uni(&h, x)))
}

fn to_uni(p: &MultiLaurent, x: usize) -> Vec<MultiLaurent> {
    let d = p.degree_in(x).unwrap_or(0) as usize;
    (0..=d).map(|k| p.coeff_in(x, k as i32)).collect()
}

fn from_uni(u: &[MultiLaurent], x: usize) -> MultiLaurent {
    let vars = u[0].vars().clone();
    let mut r = MultiLaurent::zero(&vars);
    for (k, c) in u.iter().enumerate() {
        let mut e = vec![0; vars.len()];
        e[x] = k as i32;
        r = &r + &c.shift(&e);
    }
    r
}

fn trim(u: &mut Vec<MultiLaurent>) {
    while u.len() > 1 && u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn is_zero_uni(u: &[MultiLaurent]) -> bool {
    u.iter().all(|c| c.is_zero())
}

/// Content (gcd of coefficients) and primitive part.
fn primitive(u: &[MultiLaurent]) -> (MultiLaurent, Vec<MultiLaurent>) {
    let mut g = MultiLaurent::zero(u[0].vars());
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return (g, u.to_vec());
    }
    let lead_neg = u.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| !c.is_leading_positive());
    if lead_neg {
        g = -&g;
    }
    let pp = u.iter().map(|c| c.div_exact(&g).expect("content divides")).collect();
    (g, pp)
}

fn prem(f: &[MultiLaurent], g: &[MultiLaurent]) -> Vec<MultiLaurent> {
    let dg = g.len() - 1;
    let lcg = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    while r.len() > dg && !is_zero_uni(&r) {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lcg;
        }
        for (j, gj) in g.iter().enumerate() {
            let k = j + dr - dg;
            r[k] = &r[k] - &(&lcr * gj);
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn prs_gcd(mut f: Vec<MultiLaurent>, mut g: Vec<MultiLaurent>) -> Vec<MultiLaurent> {
    trim(&mut f);
    trim(&mut g);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if is_zero_uni(&g) {
            return primitive(&f).1;
        }
        if g.len() == 1 {
            return vec![MultiLaurent::one(g[0].vars())];
        }
        let r = prem(&f, &g);
        if is_zero_uni(&r) {
            return primitive(&g).1;
        }
        f = g;
        g = primitive(&r).1;
    }
}
