mod common;

use common::*;
use hopf_trace::action::{left_act, module_object_hom, right_act, BicomoduleAlgebra, ModuleCategoryObject};
use hopf_trace::coend::{hat_algebra, twisted_coend_algebra};
use hopf_trace::comodule::{comodule_hom_basis, Comodule};
use hopf_trace::linalg::LinearMap;
use hopf_trace::trace::*;
use hopf_trace::zoo::{standard_test_family, test_module_objects};
use hopf_trace::Error;
use proptest::prelude::*;

fn algebras(h: &hopf_trace::hopf::HopfAlgebra) -> Vec<BicomoduleAlgebra> {
    vec![BicomoduleAlgebra::trivial(h), hat_algebra(h).unwrap(), twisted_coend_algebra(h).unwrap()]
}

#[test]
fn htilde_acting_on_itself() {
    for name in ["group_algebra(2)", "sweedler_h4", "function_algebra(3)"] {
        let h = build(name);
        let k = ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h));
        let n = induce(&k).unwrap();
        assert_eq!(n.dim(), h.dim());
        assert_eq!(n.left_action(), twisted_coend_algebra(&h).unwrap().mul());
        assert!(check_hopf_bimodule(&n).passed());
    }
}

#[test]
fn induced_objects_are_hopf_bimodules() {
    for name in ["group_algebra(3)", "sweedler_h4", "function_algebra(2)"] {
        let h = build(name);
        let family = standard_test_family(&h).unwrap();
        for b in &family.algebras {
            for m in test_module_objects(b, &family).unwrap() {
                let n = induce(&m).unwrap();
                let r = check_hopf_bimodule(&n);
                assert!(r.passed(), "{name} {} over {}: {:?}", m.name(), b.name(), r.failed_ids());
                assert_eq!(forget(&n).dim(), h.dim() * m.dim());
            }
        }
    }
}

#[test]
fn left_action_through_s_squared_is_not_a_bicomodule_map() {
    let h = build("sweedler_h4");
    let k = ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h));
    let n = induce(&k).unwrap();
    let s2 = h.antipode().compose(h.antipode()).unwrap();
    let twisted = n.with_left_action(n.left_action().compose(&s2.kronecker(&n.id())).unwrap()).unwrap();
    let r = check_hopf_bimodule(&twisted);
    assert!(r.failed_ids().iter().any(|id| id.starts_with("left action:")), "{:?}", r.failed_ids());
}

#[test]
fn balancing_at_the_unit_is_the_identity() {
    for (entry, field) in zoo_list() {
        let h = entry.build(field).unwrap();
        for m_dim in [1, 3] {
            assert!(balancing_map(&h, m_dim, &Comodule::trivial(&h)).is_identity());
        }
    }
}

#[test]
fn balancing_on_z2_grouplike() {
    // h⊗m⊗v ↦ hg⊗v⊗m, i.e. right multiplication by g on the first factor.
    let h = build("group_algebra(2)");
    let f = h.field();
    let family = standard_test_family(&h).unwrap();
    let xg = family.grouplike_simples().next().unwrap();
    for m_dim in [1, 2, 4] {
        let g = vec![vec![f.zero()], vec![f.one()]];
        let right_g = matmul(f, &dense(h.mul()), &kron(f, &eye(f, 2), &g));
        let expect = kron(f, &right_g, &eye(f, m_dim));
        assert_eq!(dense(&balancing_map(&h, m_dim, xg)), expect);
    }
}

#[test]
fn balancing_witnesses_on_small_zoo() {
    for name in ["group_algebra(2)", "sweedler_h4", "function_algebra(3)"] {
        let h = build(name);
        let family = standard_test_family(&h).unwrap();
        for b in algebras(&h) {
            for m in test_module_objects(&b, &family).unwrap() {
                for x in family.small_comodules() {
                    let w = balancing(&m, &x).unwrap();
                    assert!(w.inverse.compose(&w.beta).unwrap().is_identity());
                    assert!(w.beta.compose(&w.inverse).unwrap().is_identity());
                }
            }
        }
    }
}

#[test]
fn balancing_is_natural_in_the_comodule() {
    let h = build("sweedler_h4");
    let family = standard_test_family(&h).unwrap().small_comodules();
    let m = ModuleCategoryObject::regular(&hat_algebra(&h).unwrap());
    for x in &family {
        for y in &family {
            let (bx, by) = (balancing_map(&h, m.dim(), x), balancing_map(&h, m.dim(), y));
            for g in comodule_hom_basis(x, y).unwrap() {
                assert!(balancing_natural_in_comodule(&h, m.dim(), &bx, &by, &g));
            }
        }
    }
    // A non-morphism breaks the square.
    let reg = Comodule::regular(&h);
    let b = balancing_map(&h, m.dim(), &reg);
    let bad = LinearMap::from_entries(h.field(), 4, 4, [(0, 2, h.field().one())]).unwrap();
    assert!(!balancing_natural_in_comodule(&h, m.dim(), &b, &b, &bad));
}

#[test]
fn balanced_axioms_examples() {
    let z2 = build("group_algebra(2)");
    let k = Comodule::trivial(&z2);
    let m = ModuleCategoryObject::regular(&twisted_coend_algebra(&z2).unwrap());
    assert!(check_balanced_axioms(&m, &k, &k).unwrap().passed());
    let family = standard_test_family(&z2).unwrap();
    let g = family.grouplike_simples().next().unwrap();
    assert!(check_balanced_axioms(&m, g, g).unwrap().passed());
    let h4 = build("sweedler_h4");
    let reg = Comodule::regular(&h4);
    let m = ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h4));
    assert!(check_balanced_axioms(&m, &reg, &reg).unwrap().passed());
}

#[test]
fn gamma_at_the_unit_is_the_identity() {
    let h = build("sweedler_h4");
    let n = induce(&ModuleCategoryObject::regular(&hat_algebra(&h).unwrap())).unwrap();
    assert!(rho_to_gamma(&n, &Comodule::trivial(&h)).unwrap().is_identity());
}

#[test]
fn gamma_on_z2_multiplies_by_g() {
    let h = build("group_algebra(2)");
    let f = h.field();
    let n = induce(&ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h))).unwrap();
    let family = standard_test_family(&h).unwrap();
    let g = family.grouplike_simples().next().unwrap();
    let gv = vec![vec![f.zero()], vec![f.one()]];
    let left_g = matmul(f, &dense(h.mul()), &kron(f, &gv, &eye(f, 2)));
    assert_eq!(dense(&rho_to_gamma(&n, g).unwrap()), left_g);
}

fn induced_bimodules(name: &str) -> Vec<HopfBimodule> {
    let h = build(name);
    let family = standard_test_family(&h).unwrap();
    let mut out = Vec::new();
    for b in &family.algebras {
        for m in test_module_objects(b, &family).unwrap() {
            out.push(induce(&m).unwrap());
        }
    }
    out
}

#[test]
fn round_trip_and_center_checks() {
    for name in ["group_algebra(2)", "sweedler_h4", "function_algebra(2)"] {
        let h = build(name);
        let family = standard_test_family(&h).unwrap().comodules;
        let family: Vec<Comodule> = family.into_iter().filter(|x| x.dim() <= h.dim()).collect();
        for n in induced_bimodules(name) {
            let c = CenterStructure::from_bimodule(&n, &family).unwrap();
            let back = gamma_to_rho(&c).unwrap();
            assert_eq!(back.left_action(), n.left_action(), "{name} {}", n.name());
            let r = check_center(&c).unwrap();
            assert!(r.passed(), "{name} {}: {:?}", n.name(), r.failed_ids());
        }
    }
}

#[test]
fn corrupted_gamma_sign_is_rejected() {
    let h = build("sweedler_h4");
    let n = induce(&ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h))).unwrap();
    let reg = Comodule::regular(&h);
    let mut c = CenterStructure::from_bimodule(&n, &[Comodule::trivial(&h), reg.clone()]).unwrap();
    let gamma = &mut c.gamma[1].1;
    let (r0, c0, s) = gamma.entries().find(|(r, _, _)| *r != 0).map(|(r, c, s)| (r, c, s.clone())).unwrap();
    let flip = LinearMap::from_entries(h.field(), gamma.rows(), gamma.cols(), [(r0, c0, -(&s + &s))]).unwrap();
    *gamma = gamma.add(&flip).unwrap();
    match gamma_to_rho(&c) {
        Err(Error::Diagram { diagram, .. }) => assert!(diagram.contains("hexagon")),
        other => panic!("expected a diagram error, got {other:?}"),
    }
    assert!(center_defect(&c).unwrap().is_some());
}

#[test]
fn scaled_gamma_breaks_the_hexagon() {
    let h = build("group_algebra(2)");
    let n = induce(&ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h))).unwrap();
    let family = standard_test_family(&h).unwrap().small_comodules();
    let mut c = CenterStructure::from_bimodule(&n, &family).unwrap();
    let g = family.iter().find(|x| x.name().starts_with("grouplike")).unwrap().clone();
    assert!(check_hexagon(&c, &g, &g).unwrap().passed());
    let k = Comodule::trivial(&h);
    assert!(check_hexagon(&c, &k, &k).unwrap().passed());
    for (x, gamma) in c.gamma.iter_mut() {
        if x.coaction() == g.coaction() {
            *gamma = gamma.scale(&h.field().from_i64(2));
        }
    }
    assert!(!check_hexagon(&c, &g, &g).unwrap().passed());
}

#[test]
fn one_dimensional_gamma_collapses_to_the_counit() {
    let h = build("group_algebra(1)");
    let m = ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h));
    let c = CenterStructure { base: m, gamma: vec![(Comodule::trivial(&h), LinearMap::identity(h.field(), 1))] };
    let n = gamma_to_rho(&c).unwrap();
    assert!(n.left_action().is_identity());
}

#[test]
fn adjunction_dimensions() {
    for name in ["group_algebra(2)", "sweedler_h4", "function_algebra(3)"] {
        let h = build(name);
        let family = standard_test_family(&h).unwrap();
        for b in &family.algebras {
            let objects = test_module_objects(b, &family).unwrap();
            let induced: Vec<HopfBimodule> = objects.iter().map(|m| induce(m).unwrap()).collect();
            for m in &objects {
                for n in &induced {
                    let left = hom_hopf_bimodule(&induce(m).unwrap(), n).unwrap().dim();
                    let right = module_object_hom(m, &forget(n)).unwrap().dim();
                    assert_eq!(left, right, "{name} {} → {}", m.name(), n.name());
                }
            }
            for n in &induced {
                assert!(hom_hopf_bimodule(n, n).unwrap().dim() >= 1);
            }
        }
    }
}

#[test]
fn disjoint_supports_have_no_maps() {
    let h = build("group_algebra(2)");
    let family = standard_test_family(&h).unwrap();
    let k = ModuleCategoryObject::regular(&BicomoduleAlgebra::trivial(&h));
    let g = family.grouplike_simples().next().unwrap();
    let n1 = induce(&k).unwrap();
    let n2 = induce(&right_act(&k, g).unwrap()).unwrap();
    assert_eq!(hom_hopf_bimodule(&n1, &n2).unwrap().dim(), 0);
    // The two shifts are identified by the balancing.
    let n3 = induce(&left_act(g, &k).unwrap()).unwrap();
    assert_eq!(hom_hopf_bimodule(&n2, &n3).unwrap().dim(), 1);
    let mut r = hopf_trace::report::CheckReport::new("β");
    assert!(check_hopf_bimodule_morphism(&mut r, "β", &n2, &n3, &balancing_map(&h, 1, g)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn balancing_inverts_random_vectors(
        coords in proptest::collection::vec(-4i64..=4, 16),
        which in 0usize..3,
    ) {
        let name = ["sweedler_h4", "group_algebra(4)", "function_algebra(2)"][which];
        let h = build(name);
        let f = h.field();
        let m_dim = 2;
        let x = Comodule::regular(&h);
        let beta = balancing_map(&h, m_dim, &x);
        let inv = balancing_inverse_map(&h, m_dim, &x);
        let n = beta.cols();
        let v: Vec<(usize, _)> = (0..n).filter_map(|i| {
            let c = coords[i % coords.len()] + i as i64 % 3;
            (c != 0).then(|| (i, f.from_i64(c)))
        }).collect();
        prop_assert_eq!(inv.apply(&beta.apply(&v)), v.clone());
        prop_assert_eq!(beta.apply(&inv.apply(&v)), v);
    }

    #[test]
    fn hopf_bimodule_hom_combinations_are_morphisms(coeffs in proptest::collection::vec(-3i64..=3, 8)) {
        let h = build("sweedler_h4");
        let n = induce(&ModuleCategoryObject::regular(&hat_algebra(&h).unwrap())).unwrap();
        let basis = hom_hopf_bimodule_basis(&n, &n).unwrap();
        let f = h.field();
        let mut acc = LinearMap::zero(f, n.dim(), n.dim());
        for (b, c) in basis.iter().zip(coeffs.iter()) {
            acc = acc.add(&b.scale(&f.from_i64(*c))).unwrap();
        }
        let mut r = hopf_trace::report::CheckReport::new("combination");
        prop_assert!(check_hopf_bimodule_morphism(&mut r, "f", &n, &n, &acc));
    }
}
