//! Transfer-matrix evaluation of the bracket: sweep the slice word upward,
//! keeping a map from boundary matchings (bottom points plus the current
//! level) to coefficients in `Z[A, A^-1]`.

use std::collections::HashMap;

use super::{PlanarMatching, TLElement, TlError};
use crate::diagram::{Event, Sign, TangleDiagram};
use crate::poly::{MultiLaurent, RationalFunction, UniLaurent, Vars};

type State = Vec<u8>;

fn delta() -> UniLaurent {
    &UniLaurent::monomial(-1, 2) + &UniLaurent::monomial(-1, -2)
}

/// Inserts a new arc at level positions `i, i+1`.
fn cup(s: &[u8], nb: usize, i: usize) -> State {
    let at = (nb + i) as u8;
    let remap = |x: u8| if x >= at { x + 2 } else { x };
    let mut out: State = Vec::with_capacity(s.len() + 2);
    out.extend(s[..nb + i].iter().map(|&x| remap(x)));
    out.push(at + 1);
    out.push(at);
    out.extend(s[nb + i..].iter().map(|&x| remap(x)));
    out
}

/// Joins level positions `i, i+1`; returns the new state and whether a
/// closed loop was formed.
fn cap(s: &[u8], nb: usize, i: usize) -> (State, bool) {
    let (a, b) = (nb + i, nb + i + 1);
    let remap = |x: u8| if x as usize > b { x - 2 } else { x };
    let mut t = s.to_vec();
    let closed = t[a] as usize == b;
    if !closed {
        let (pa, pb) = (t[a] as usize, t[b] as usize);
        t[pa] = pb as u8;
        t[pb] = pa as u8;
    }
    t.drain(a..=b);
    (t.into_iter().map(remap).collect(), closed)
}

fn add_into(map: &mut HashMap<State, UniLaurent>, s: State, c: UniLaurent) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&s) {
        Some(x) => {
            x.add_assign_ref(&c);
            if x.is_zero() {
                map.remove(&s);
            }
        }
        None => {
            map.insert(s, c);
        }
    }
}

/// Runs the sweep; the result maps final matchings (bottom points then top
/// points) to coefficients, framing offsets included.
fn sweep(d: &TangleDiagram) -> HashMap<State, UniLaurent> {
    let nb = d.width_in();
    let init: State = (0..2 * nb).map(|i| if i < nb { (i + nb) as u8 } else { (i - nb) as u8 }).collect();
    let mut cur: HashMap<State, UniLaurent> = HashMap::new();
    cur.insert(init, UniLaurent::one());
    let dl = delta();
    for e in d.events() {
        let mut next = HashMap::with_capacity(cur.len() * 2);
        for (s, c) in cur {
            match *e {
                Event::Cup(i) => add_into(&mut next, cup(&s, nb, i), c),
                Event::Cap(i) => {
                    let (t, closed) = cap(&s, nb, i);
                    add_into(&mut next, t, if closed { &c * &dl } else { c });
                }
                Event::Cross(i, sign) => {
                    let (ka, kh) = match sign {
                        Sign::Pos => (1, -1),
                        Sign::Neg => (-1, 1),
                    };
                    let (t, closed) = cap(&s, nb, i);
                    let hook = cup(&t, nb, i);
                    let ch = if closed { &c * &dl } else { c.clone() };
                    add_into(&mut next, hook, ch.shift(kh));
                    add_into(&mut next, s, c.shift(ka));
                }
            }
        }
        cur = next;
    }
    let tw = d.total_twist();
    if tw != 0 {
        let f = UniLaurent::monomial(if tw % 2 == 0 { 1 } else { -1 }, 3 * tw);
        for c in cur.values_mut() {
            *c = &*c * &f;
        }
    }
    cur
}

/// The skein class of an `n -> n` tangle in TL_n over `Q(A)`.
pub fn tl_from_tangle(d: &TangleDiagram) -> Result<TLElement, TlError> {
    let n = d.width_in();
    if d.width_out() != n {
        return Err(TlError::Arity(n, d.width_out()));
    }
    let vars = Vars::a();
    let mut out = TLElement::zero(n, &vars);
    for (s, c) in sweep(d) {
        out.add_term(PlanarMatching::from_raw(n, s), RationalFunction::from(c.to_multi(&vars, "A")?));
    }
    Ok(out)
}

/// The bracket as a dense univariate polynomial, normalized so the unknot
/// is 1.
pub fn bracket_uni(d: &TangleDiagram) -> Result<UniLaurent, TlError> {
    if !d.is_closed() {
        return Err(TlError::Arity(d.width_in(), d.width_out()));
    }
    if d.events().is_empty() {
        return Err(TlError::Empty);
    }
    let total = sweep(d).remove(&State::new()).unwrap_or_default();
    // every state has at least one loop; divide one delta out
    let v = Vars::a();
    let q = total.to_multi(&v, "A")?.div_exact(&delta().to_multi(&v, "A")?).expect("closed diagrams carry a loop factor");
    Ok(UniLaurent::from_multi(&q, "A")?)
}

/// `<D>` in `Z[A, A^-1]`, with `<unknot> = 1`.
pub fn bracket(d: &TangleDiagram) -> Result<MultiLaurent, TlError> {
    Ok(bracket_uni(d)?.to_multi(&Vars::a(), "A")?)
}
