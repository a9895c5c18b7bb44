use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skeinlab::diagram::{random_braid, Axis, TangleDiagram};
use skeinlab::hecke::{
    h3_basis, hecke3_membership, hecke3_membership_poly, hecke_from_tangle, hecke_invert, hecke_spectral_p, sprime3_spectral, HeckeElement,
    HeckeSpectral, SPrime3Element, SPrime3Spectral,
};
use skeinlab::poly::{MultiLaurent, RationalFunction, Vars};

fn rf(vars: &Vars, s: &str) -> RationalFunction {
    RationalFunction::from(MultiLaurent::parse(vars, s).unwrap())
}

fn h(word: &[i32]) -> HeckeElement {
    let n = word.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(1) + 1;
    hecke_from_tangle(&TangleDiagram::from_braid(n.max(3), word).unwrap()).unwrap()
}

#[test]
fn inverse_expansion_cancels() {
    assert_eq!(h(&[1, -1]), h(&[]));
    assert_eq!(h(&[-2, 2]), h(&[]));
    let v = Vars::vz();
    let s = HeckeElement::generator(2, 0, &v).unwrap();
    let inv = s.scale(&rf(&v, "v^-2")).sub(&HeckeElement::one(2, &v).scale(&rf(&v, "v^-1*z"))).unwrap();
    assert_eq!(inv.mul(&s).unwrap(), HeckeElement::one(2, &v));
    assert_eq!(hecke_invert(&s).unwrap(), inv);
}

#[test]
fn braid_relations() {
    assert_eq!(h(&[1, 2, 1]), h(&[2, 1, 2]));
    assert_eq!(h(&[-1, -2, -1]), h(&[-2, -1, -2]));
    assert_eq!(h(&[1, 2, -1]), h(&[-2, 1, 2]));
    let four = |w: &[i32]| hecke_from_tangle(&TangleDiagram::from_braid(4, w).unwrap()).unwrap();
    assert_eq!(four(&[1, 3]), four(&[3, 1]));
    assert_eq!(four(&[-1, 3, 2]), four(&[3, -1, 2]));
}

#[test]
fn downward_strand_is_rejected() {
    let d = TangleDiagram::identity(2, Some(vec![true, false])).unwrap();
    assert!(hecke_from_tangle(&d).is_err());
    assert!(hecke_from_tangle(&TangleDiagram::identity(2, None).unwrap()).is_err());
}

fn generic_l() -> (Vars, Vec<RationalFunction>, HeckeElement) {
    let v = Vars::new(&["v", "z", "a1", "a2", "a3", "a4", "a5", "a6"]);
    let a: Vec<RationalFunction> = (1..=6).map(|i| RationalFunction::var(&v, &format!("a{i}")).unwrap()).collect();
    let l = HeckeElement::from_coords(&h3_basis(), &a, &v);
    (v, a, l)
}

#[test]
fn pairing_values_with_generic_p() {
    let (_, _, l) = generic_l();
    let v = Vars::new(&["v", "z", "a1", "a2", "a3", "a4", "a5", "a6", "x1", "x2"]);
    let l = l.embed(&v).unwrap();
    let p = HeckeElement::from_coords(&skeinlab::hecke::h2_basis(), &[rf(&v, "x1"), rf(&v, "x2")], &v);
    let lp = l.mul(&p.place(0, 3).unwrap()).unwrap();
    let c = lp.coords(&h3_basis());
    assert_eq!(c[4], rf(&v, "x1*a5 + x2*a4*v^2"));
    assert_eq!(c[5], rf(&v, "x1*a6 + a3*x2 + v*z*a6*x2"));
}

#[test]
fn generic_spectral_solution() {
    let (v, _, l) = generic_l();
    let HeckeSpectral::Found { p, p_inv } = hecke_spectral_p(&l).unwrap() else { panic!("generic L must be in the dense set") };
    let lhs = l.mul(&p.place(0, 3).unwrap()).unwrap();
    assert_eq!(lhs, lhs.transpose_ry());
    assert_eq!(lhs, p.place(0, 3).unwrap().mul(&l.transpose_ry()).unwrap());
    assert_eq!(p.mul(&p_inv).unwrap(), HeckeElement::one(2, &v));
    assert_eq!(p_inv.mul(&p).unwrap(), HeckeElement::one(2, &v));
    let f = rf(&v, "(a3 - v^2*a4 + v*z*a5)*(a3 - v^2*a4 + v*z*a6) - v^2*(a5 - a6)^2");
    assert_eq!(hecke3_membership_poly(&l).unwrap(), f);
    assert!(hecke3_membership(&l).unwrap());
}

#[test]
fn palindrome_needs_no_spectral_tangle() {
    let l = h(&[1, 2, 1]);
    let HeckeSpectral::Found { p, .. } = hecke_spectral_p(&l).unwrap() else { panic!() };
    assert_eq!(p, HeckeElement::one(2, l.vars()));
}

fn random_sprime(rng: &mut ChaCha8Rng, vars: &Vars) -> SPrime3Element {
    let c = std::array::from_fn(|_| {
        let (num, den) = (rng.gen_range(-20i64..=20), rng.gen_range(1i64..=9));
        &RationalFunction::constant(vars, num) / &RationalFunction::constant(vars, den)
    });
    SPrime3Element::new(c, vars).unwrap()
}

#[test]
fn sprime3_associative_with_loop_value() {
    let v = Vars::vz();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (x, y, z) = (random_sprime(&mut rng, &v), random_sprime(&mut rng, &v), random_sprime(&mut rng, &v));
        assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }
}

#[test]
fn sprime3_associator_vanishes_only_at_loop_value() {
    let v = Vars::new(&["v", "z", "mu"]);
    let mu = RationalFunction::var(&v, "mu").unwrap();
    let e = |i| SPrime3Element::basis(i, &v, &mu);
    let lhs = e(1).mul(&e(5)).unwrap().mul(&e(5)).unwrap();
    let rhs = e(1).mul(&e(5).mul(&e(5)).unwrap()).unwrap();
    let diff = &lhs.coeffs()[1] - &rhs.coeffs()[1];
    assert_eq!(diff, rf(&v, "mu*z*v^-1 + 1 - v^-2"));
}

#[test]
fn sprime3_spectral_generic_pair() {
    let v = Vars::vz();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let (x, b) = (random_sprime(&mut rng, &v), random_sprime(&mut rng, &v));
        let SPrime3Spectral::Found { y, y_inv } = sprime3_spectral(&x, &b).unwrap() else { panic!("generic pair must be solvable") };
        assert!(y.is_symmetric());
        assert_eq!(x.mul(&y).unwrap(), y.mul(&x.r_y()).unwrap());
        assert_eq!(b.mul(&y).unwrap(), y.mul(&b.r_y()).unwrap());
        assert_eq!(y.mul(&y_inv).unwrap(), SPrime3Element::unit(&v, y.mu()));
        assert_eq!(y_inv.mul(&y).unwrap(), SPrime3Element::unit(&v, y.mu()));
    }
}

#[test]
fn sprime3_symmetric_x_takes_unit() {
    let v = Vars::vz();
    let c = |k: i64| RationalFunction::constant(&v, k);
    let x = SPrime3Element::new([c(1), c(2), c(2), c(3), c(3), c(4)], &v).unwrap();
    assert_eq!(x.r_y(), x);
    assert_eq!(x.mul(&SPrime3Element::unit(&v, x.mu())).unwrap(), SPrime3Element::unit(&v, x.mu()).mul(&x.r_y()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn from_tangle_is_a_homomorphism(s1 in 0u64..10_000, s2 in 0u64..10_000, len in 0usize..7) {
        let a = random_braid(s1, 3, len);
        let b = random_braid(s2, 3, len);
        let lhs = hecke_from_tangle(&a.compose(&b).unwrap()).unwrap();
        let rhs = hecke_from_tangle(&a).unwrap().mul(&hecke_from_tangle(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_is_an_anti_automorphism(s1 in 0u64..10_000, s2 in 0u64..10_000, len in 0usize..6) {
        let x = hecke_from_tangle(&random_braid(s1, 4, len)).unwrap();
        let y = hecke_from_tangle(&random_braid(s2, 4, len)).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().transpose_ry(), y.transpose_ry().mul(&x.transpose_ry()).unwrap());
        prop_assert_eq!(x.transpose_ry().transpose_ry(), x);
    }

    #[test]
    fn rotation_matches_transpose(seed in 0u64..10_000, len in 0usize..8) {
        let d = random_braid(seed, 3, len);
        let rot = d.rotate(Axis::X).unwrap().reverse_orientation();
        prop_assert_eq!(hecke_from_tangle(&rot).unwrap(), hecke_from_tangle(&d).unwrap().transpose_ry());
    }

    #[test]
    fn diagrammatic_spectral_identity(seed in 0u64..10_000, len in 1usize..7) {
        let l = hecke_from_tangle(&random_braid(seed, 3, len)).unwrap();
        let l_rot = hecke_from_tangle(&random_braid(seed, 3, len).rotate(Axis::X).unwrap().reverse_orientation()).unwrap();
        if let HeckeSpectral::Found { p, .. } = hecke_spectral_p(&l).unwrap() {
            let p1 = p.place(0, 3).unwrap();
            prop_assert_eq!(l.mul(&p1).unwrap(), p1.mul(&l_rot).unwrap());
        } else {
            prop_assert!(!hecke3_membership(&l).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // The skein tree is an independent route to the same polynomial.
    #[test]
    fn markov_trace_matches_skein_tree(seed in any::<u64>(), n in 1usize..=4, len in 0usize..9) {
        use skeinlab::diagram::Closure;
        use skeinlab::invariants::{homflypt, homflypt_braid_closure, SkeinConfig};
        let b = random_braid(seed, n, len);
        let closed = b.closure(&Closure::Trace).unwrap();
        prop_assert_eq!(homflypt_braid_closure(&b).unwrap(), homflypt(&closed, &SkeinConfig::with_cap(20)).unwrap());
    }
}

#[test]
fn markov_trace_base_values() {
    use skeinlab::hecke::markov_trace;
    let vz = Vars::vz();
    let one = |n| HeckeElement::one(n, &vz);
    assert_eq!(markov_trace(&one(1)).unwrap(), RationalFunction::one(&vz));
    // two unlinked circles
    assert_eq!(markov_trace(&one(2)).unwrap(), rf(&vz, "v^-1*z^-1 - v*z^-1"));
    // positive Hopf link
    let hopf2 = HeckeElement::from_word(2, &[0, 0], &vz).unwrap();
    assert_eq!(markov_trace(&hopf2).unwrap(), rf(&vz, "v*z^-1 - v^3*z^-1 + v*z"));
}
