mod common;

use common::*;
use hopf_trace::action::check_bicomodule_algebra;
use hopf_trace::coend::*;
use hopf_trace::comodule::{comodule_hom_basis, Comodule};
use hopf_trace::linalg::LinearMap;
use hopf_trace::zoo::standard_test_family;
use hopf_trace::Error;
use proptest::prelude::*;

#[test]
fn carrier_algebras_pass() {
    for (entry, field) in zoo_list() {
        let h = entry.build(field).unwrap();
        assert!(check_bicomodule_algebra(&twisted_coend_algebra(&h).unwrap()).passed());
        assert!(check_bicomodule_algebra(&hat_algebra(&h).unwrap()).passed());
    }
}

#[test]
fn j_regular_against_counit_recovers_h() {
    for (entry, field) in zoo_list() {
        let h = entry.build(field).unwrap();
        let j = dense(&dinatural_j(&Comodule::regular(&h)).unwrap());
        let d = h.dim();
        let eps = transpose(&dense(h.counit()));
        let got = matmul(h.field(), &j, &kron(h.field(), &eye(h.field(), d), &eps));
        assert_eq!(got, eye(h.field(), d), "{}", entry.name());
    }
}

#[test]
fn j_from_coaction_entries() {
    // j(x_a ⊗ x^i) is the H-coefficient of x_i in δ(x_a).
    for name in ["sweedler_h4", "group_algebra(3)", "taft(3,2,7)"] {
        let h = build(name);
        for x in standard_test_family(&h).unwrap().small_comodules() {
            let n = x.dim();
            let coact = dense(x.coaction());
            let j = dense(&dinatural_j(&x).unwrap());
            for a in 0..n {
                for i in 0..n {
                    for r in 0..h.dim() {
                        assert_eq!(j[r][a * n + i], coact[r * n + i][a], "{name} {} at {a},{i}", x.name());
                    }
                }
            }
        }
    }
}

#[test]
fn grouplike_j_is_the_grouplike() {
    let h = build("group_algebra(4)");
    for g in standard_test_family(&h).unwrap().grouplike_simples() {
        let j = dinatural_j(g).unwrap();
        assert_eq!(j, *g.coaction());
    }
}

#[test]
fn dinaturality_against_hom_bases() {
    for name in ["group_algebra(2)", "sweedler_h4", "function_algebra(3)"] {
        let h = build(name);
        let family = standard_test_family(&h).unwrap().small_comodules();
        for x in &family {
            for y in &family {
                for f in comodule_hom_basis(x, y).unwrap() {
                    assert!(check_dinaturality(x, y, &f).passed(), "{name} {} → {}", x.name(), y.name());
                }
            }
        }
    }
}

#[test]
fn dinaturality_fails_for_a_non_morphism() {
    let h = build("sweedler_h4");
    let reg = Comodule::regular(&h);
    let f = LinearMap::from_entries(h.field(), 4, 4, [(0, 2, h.field().one())]).unwrap();
    assert!(!check_dinaturality(&reg, &reg, &f).passed());
}

#[test]
fn coend_multiplication_on_family_pairs() {
    for name in ["group_algebra(3)", "sweedler_h4", "function_algebra(2)"] {
        let h = build(name);
        let family = standard_test_family(&h).unwrap().small_comodules();
        for x in &family {
            for y in &family {
                assert!(check_coend_multiplication(x, y).unwrap().passed(), "{name} {}, {}", x.name(), y.name());
            }
        }
    }
}

fn j_cowedge(h: &hopf_trace::hopf::HopfAlgebra, scale: i64) -> Cowedge {
    let target = twisted_coend_algebra(h).unwrap().carrier().clone();
    let s = h.field().from_i64(scale);
    let components = standard_test_family(h)
        .unwrap()
        .small_comodules()
        .into_iter()
        .map(|x| {
            let j = dinatural_j(&x).unwrap().scale(&s);
            (x, j)
        })
        .collect();
    Cowedge { target, components }
}

#[test]
fn cowedge_errors() {
    let h = build("sweedler_h4");
    let mut alpha = j_cowedge(&h, 1);
    alpha.components.retain(|(x, _)| x.dim() != 4);
    assert!(matches!(cowedge_factorize(&alpha), Err(Error::Precondition(_))));
    let mut alpha = j_cowedge(&h, 1);
    let (_, a) = &mut alpha.components[1];
    *a = a.add(&LinearMap::from_entries(h.field(), 4, 16, [(0, 5, h.field().one())]).unwrap()).unwrap();
    assert!(matches!(cowedge_factorize(&alpha), Err(Error::NotCowedge(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn scaled_j_factors_through_the_scalar(c in 1i64..6, which in 0usize..3) {
        let name = ["sweedler_h4", "group_algebra(3)", "function_algebra(2)"][which];
        let h = build(name);
        let fac = cowedge_factorize(&j_cowedge(&h, c)).unwrap();
        prop_assert_eq!(fac.phi, h.id().scale(&h.field().from_i64(c)));
        prop_assert_eq!(fac.uniqueness_dim, 1);
    }
}
