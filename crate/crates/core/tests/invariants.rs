use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use serde::Deserialize;
use skeinlab::diagram::{from_pd, random_braid, random_tangle, Closure, TangleDiagram};
use skeinlab::invariants::{
    alexander, determinant, homflypt, jones, jones_from_homflypt, kauffman_f, kauffman_lambda, verify_equal, InvariantKind, SkeinConfig,
};
use skeinlab::poly::{MultiLaurent, Vars};
use skeinlab::tl::bracket;

#[derive(Deserialize)]
struct Entry {
    name: String,
    pd: Vec<[usize; 4]>,
    jones_s: Vec<(Vec<i32>, i64)>,
    homflypt_vz: Vec<(Vec<i32>, i64)>,
    kauffman_az: Vec<(Vec<i32>, i64)>,
    alexander_t: Vec<(Vec<i32>, i64)>,
    determinant: i64,
}

fn corpus() -> Vec<Entry> {
    serde_json::from_str(include_str!("../data/knot_corpus.json")).unwrap()
}

fn special() -> Vec<Entry> {
    vec![
        serde_json::from_str(include_str!("../data/conway_11n34.json")).unwrap(),
        serde_json::from_str(include_str!("../data/kinoshita_terasaka_11n42.json")).unwrap(),
    ]
}

fn poly(vars: &Vars, t: &[(Vec<i32>, i64)]) -> MultiLaurent {
    MultiLaurent::from_terms(vars, t.iter().map(|(e, c)| (e.clone(), BigInt::from(*c))))
}

/// Coefficient list of a one-variable polynomial, with exponents scaled by
/// `step`, shifted to start at 0 and signed so the lowest term is positive.
fn unit_normal(p: &MultiLaurent, step: i32) -> Vec<(i32, BigInt)> {
    let mut t: Vec<(i32, BigInt)> = p.terms().map(|(e, c)| (e[0] / step, c.clone())).collect();
    t.sort();
    let (lo, neg) = match t.first() {
        Some((e, c)) => (*e, *c < BigInt::from(0)),
        None => return t,
    };
    t.into_iter().map(|(e, c)| (e - lo, if neg { -c } else { c })).collect()
}

fn check(e: &Entry, cfg: &SkeinConfig) {
    let d = from_pd(&e.pd).unwrap_or_else(|err| panic!("{}: {err}", e.name));
    assert_eq!(d.crossing_signs().unwrap().len(), e.pd.len(), "{}", e.name);
    let h = homflypt(&d, cfg).unwrap();
    assert_eq!(h, poly(&Vars::vz(), &e.homflypt_vz), "{} homflypt", e.name);
    assert_eq!(jones(&d).unwrap(), poly(&Vars::s(), &e.jones_s), "{} jones", e.name);
    assert_eq!(jones_from_homflypt(&h).unwrap(), poly(&Vars::s(), &e.jones_s), "{} jones via homflypt", e.name);
    assert_eq!(kauffman_f(&d, cfg).unwrap(), poly(&Vars::ax(), &e.kauffman_az), "{} kauffman", e.name);
    let delta = alexander(&d, cfg).unwrap();
    assert_eq!(unit_normal(&delta, 2), unit_normal(&poly(&Vars::new(&["t"]), &e.alexander_t), 1), "{} alexander", e.name);
    assert_eq!(determinant(&d, cfg).unwrap(), BigInt::from(e.determinant), "{} determinant", e.name);
}

#[test]
fn corpus_matches_all_invariants() {
    let cfg = SkeinConfig::default();
    let c = corpus();
    assert_eq!(c.len(), 124);
    for e in &c {
        check(e, &cfg);
    }
}

#[test]
fn conway_and_kinoshita_terasaka() {
    let cfg = SkeinConfig::default();
    let s = special();
    for e in &s {
        check(e, &cfg);
    }
    let (a, b) = (from_pd(&s[0].pd).unwrap(), from_pd(&s[1].pd).unwrap());
    let rep = verify_equal(&a, &b, &InvariantKind::ALL, &cfg).unwrap();
    assert!(rep.all_equal());
}

#[test]
fn alexander_is_trivial_on_kinoshita_terasaka() {
    let e = &special()[1];
    let d = from_pd(&e.pd).unwrap();
    assert_eq!(alexander(&d, &SkeinConfig::default()).unwrap(), MultiLaurent::one(&Vars::s()));
}

fn closure(seed: u64, n: usize, len: usize) -> TangleDiagram {
    random_braid(seed, n, len).closure(&Closure::Trace).unwrap()
}

fn braid_closure(n: usize, w: &[i32]) -> TangleDiagram {
    TangleDiagram::from_braid(n, w).unwrap().closure(&Closure::Trace).unwrap()
}

fn word(seed: u64, n: usize, len: usize) -> Vec<i32> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

fn mirror_homflypt(p: &MultiLaurent) -> MultiLaurent {
    let v = Vars::vz();
    p.substitute(&[("v", MultiLaurent::monomial(&v, 1, vec![-1, 0])), ("z", MultiLaurent::monomial(&v, -1, vec![0, 1]))], &v).unwrap()
}

#[test]
fn hopf_and_unlink() {
    let cfg = SkeinConfig::default();
    let hopf = braid_closure(2, &[1, 1]);
    let v = Vars::vz();
    assert_eq!(homflypt(&hopf, &cfg).unwrap(), MultiLaurent::parse(&v, "v*z^-1 - v^3*z^-1 + v*z").unwrap());
    assert_eq!(determinant(&hopf, &cfg).unwrap(), BigInt::from(2));
    let unlink = braid_closure(2, &[1, -1]);
    assert_eq!(alexander(&unlink, &cfg).unwrap(), MultiLaurent::zero(&Vars::s()));
    assert_eq!(determinant(&unlink, &cfg).unwrap(), BigInt::from(0));
}

#[test]
fn framing_twists_scale_lambda() {
    let cfg = SkeinConfig::default();
    let d = braid_closure(2, &[1, 1, 1]);
    let tw = d.clone().with_twists(BTreeMap::from([(0, 2)]));
    let a2 = MultiLaurent::monomial(&Vars::ax(), 1, vec![2, 0]);
    assert_eq!(kauffman_lambda(&tw, &cfg).unwrap(), &kauffman_lambda(&d, &cfg).unwrap() * &a2);
    assert_eq!(kauffman_f(&tw, &cfg).unwrap(), kauffman_f(&d, &cfg).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jones_routes_agree(seed in 0u64..100_000, len in 0usize..9) {
        let d = closure(seed, 3, len);
        prop_assert_eq!(jones_from_homflypt(&homflypt(&d, &SkeinConfig::default()).unwrap()).unwrap(), jones(&d).unwrap());
    }

    #[test]
    fn lambda_specializes_to_bracket(seed in 0u64..100_000, events in 0usize..14) {
        // x -> A + A^-1 with a kink worth -A^3 recovers <D>
        let d = random_tangle(seed, 0, events, false);
        prop_assume!(d.crossing_signs().map(|s| s.len()).unwrap_or(0) <= 10);
        let l = kauffman_lambda(&d, &SkeinConfig::default());
        prop_assume!(l.is_ok());
        let a = Vars::a();
        let img = l.unwrap().substitute(&[
            ("a", MultiLaurent::monomial(&a, -1, vec![3])),
            ("x", MultiLaurent::parse(&a, "A + A^-1").unwrap()),
        ], &a).unwrap();
        let b = bracket(&d).unwrap();
        let inv = img.substitute(&[("A", MultiLaurent::monomial(&a, 1, vec![-1]))], &a).unwrap();
        prop_assert!(img == b || inv == b, "{} vs {}", img, b);
    }

    #[test]
    fn markov_and_reidemeister_moves(seed in 0u64..100_000, len in 1usize..8, at in 0usize..8, pos in any::<bool>()) {
        let cfg = SkeinConfig::default();
        let w = word(seed, 3, len);
        let base = braid_closure(3, &w);
        let at = at.min(w.len());
        // R2
        let mut r2 = w.clone();
        r2.splice(at..at, [2, -2]);
        // stabilization
        let mut st = w.clone();
        st.push(if pos { 3 } else { -3 });
        // conjugation
        let mut cj = w.clone();
        cj.rotate_left(at % w.len());
        let kinds = [InvariantKind::Homflypt, InvariantKind::KauffmanF, InvariantKind::Jones];
        for other in [braid_closure(3, &r2), braid_closure(4, &st), braid_closure(3, &cj)] {
            prop_assert!(verify_equal(&base, &other, &kinds, &cfg).unwrap().all_equal());
        }
    }

    #[test]
    fn braid_relation_invariance(seed in 0u64..100_000, len in 0usize..6, s in any::<bool>()) {
        let cfg = SkeinConfig::default();
        let mut w = word(seed, 3, len);
        let e = if s { 1 } else { -1 };
        let mut w2 = w.clone();
        w.extend([e, 2 * e, e]);
        w2.extend([2 * e, e, 2 * e]);
        prop_assert_eq!(homflypt(&braid_closure(3, &w), &cfg).unwrap(), homflypt(&braid_closure(3, &w2), &cfg).unwrap());
        prop_assert_eq!(kauffman_f(&braid_closure(3, &w), &cfg).unwrap(), kauffman_f(&braid_closure(3, &w2), &cfg).unwrap());
    }

    #[test]
    fn mirror_symmetry(seed in 0u64..100_000, len in 0usize..9) {
        let cfg = SkeinConfig::default();
        let d = closure(seed, 3, len);
        let m = d.mirror();
        prop_assert_eq!(homflypt(&m, &cfg).unwrap(), mirror_homflypt(&homflypt(&d, &cfg).unwrap()));
        let f = kauffman_f(&d, &cfg).unwrap();
        prop_assert_eq!(kauffman_f(&m, &cfg).unwrap(), f.substitute(&[("a", MultiLaurent::monomial(&Vars::ax(), 1, vec![-1, 0]))], &Vars::ax()).unwrap());
    }

    #[test]
    fn pd_round_trip_of_corpus_is_stable(i in 0usize..124) {
        let e = &corpus()[i];
        let d = from_pd(&e.pd).unwrap();
        prop_assert!(d.is_closed());
        prop_assert_eq!(d.component_count(), 1);
    }
}
