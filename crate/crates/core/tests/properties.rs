use carter_linkage::catalog::{self, carter_d_ak, catalog, dynkin_a, dynkin_d};
use carter_linkage::linkage::beta_unicolored;
use carter_linkage::roots::embedding_independence;
use carter_linkage::{
    build_system, dual_reflect, enumerate_linkages, CarterDiagram, LinkageSystem, LinkageVector,
    PartialCartan, RMatrix, Rational, RootSystem,
};
use proptest::prelude::*;

fn all_named() -> Vec<CarterDiagram> {
    catalog::names()
        .iter()
        .map(|n| catalog(n).unwrap())
        .collect()
}

#[test]
fn beta_unicolored_vanish_at_b1() {
    for d in all_named() {
        let pc = PartialCartan::new(&d).unwrap();
        let bu = beta_unicolored(&d, &enumerate_linkages(&pc));
        assert_eq!(bu.b1_zero, d.name() != "D4(a1)", "{}", d.name());
    }
}

#[test]
fn loctet_members_miss_some_pattern_alpha() {
    for d in all_named() {
        let Some(p) = d.pattern() else { continue };
        let sys = build_system(&PartialCartan::new(&d).unwrap()).unwrap();
        for l in &sys.loctets {
            for v in &l.members {
                assert!(p.alphas.iter().any(|&i| v.0[i] == 0), "{} {v}", d.name());
            }
        }
    }
}

#[test]
fn every_member_is_reachable_from_gamma8() {
    let pc = PartialCartan::new(&catalog("E7(a2)").unwrap()).unwrap();
    let sys = build_system(&pc).unwrap();
    for l in &sys.loctets {
        let g8 = l.gamma(8);
        let c = sys
            .components
            .iter()
            .find(|c| c.nodes.contains(&sys.index_of(g8).unwrap()))
            .unwrap();
        for v in &l.members {
            assert!(c.nodes.contains(&sys.index_of(v).unwrap()));
        }
    }
}

#[test]
fn embeddings_agree_in_e8() {
    let e8 = RootSystem::build("E8").unwrap();
    for name in ["D5(a1)", "E6(a1)", "A_3"] {
        let r = embedding_independence(&catalog(name).unwrap(), &e8, 20).unwrap();
        assert_eq!(r.embeddings, 20, "{name}");
        assert_eq!(
            r.label_set_size,
            enumerate_linkages(&PartialCartan::new(&catalog(name).unwrap()).unwrap()).len()
        );
    }
}

#[test]
fn diagram_and_system_json_round_trip() {
    let mut ds = all_named();
    ds.push(carter_d_ak(11, 4).unwrap());
    ds.push(dynkin_a(5).unwrap());
    for d in ds {
        let back = CarterDiagram::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let sys = build_system(&PartialCartan::new(&d).unwrap()).unwrap();
        let again = LinkageSystem::from_json(&sys.to_json()).unwrap();
        assert_eq!(again, sys, "{}", d.name());
    }
}

#[test]
fn extension_keeps_positivity_exactly_when_extendable() {
    for d in [
        catalog("E6(a1)").unwrap(),
        catalog("D7(a2)").unwrap(),
        dynkin_d(6).unwrap(),
        carter_d_ak(9, 2).unwrap(),
    ] {
        let pc = PartialCartan::new(&d).unwrap();
        for &v in d.vertices() {
            let e = d.extend(v).unwrap();
            assert_eq!(
                PartialCartan::new(&e).is_ok(),
                pc.simply_extendable(v).unwrap(),
                "{} at {v}",
                d.name()
            );
        }
    }
}

#[test]
fn systems_are_deterministic() {
    let pc = PartialCartan::new(&catalog("D6(a2)").unwrap()).unwrap();
    assert_eq!(
        build_system(&pc).unwrap().to_json(),
        build_system(&pc).unwrap().to_json()
    );
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #[test]
    fn rational_field_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, Rational::ZERO);
        if !b.is_zero() {
            prop_assert_eq!(a / b * b, a);
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn inverse_times_matrix_is_identity(entries in proptest::collection::vec(-3i64..4, 16)) {
        let rows: Vec<Vec<i64>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let m = RMatrix::from_int_rows(&rows);
        match m.inverse() {
            Ok(inv) => prop_assert_eq!(m.mul(&inv).unwrap(), RMatrix::identity(4)),
            Err(_) => prop_assert_eq!(m.det().unwrap(), Rational::ZERO),
        }
    }

    #[test]
    fn dual_reflections_are_involutions(which in 0usize..19, pick in any::<proptest::sample::Index>(), t in any::<proptest::sample::Index>()) {
        let d = catalog(&catalog::names()[which]).unwrap();
        let pc = PartialCartan::new(&d).unwrap();
        let all = enumerate_linkages(&pc);
        prop_assume!(!all.is_empty());
        let v: &LinkageVector = pick.get(&all);
        let tv = *t.get(d.vertices());
        let w = dual_reflect(&pc, tv, v).unwrap();
        prop_assert_eq!(&dual_reflect(&pc, tv, &w).unwrap(), v);
        prop_assert_eq!(pc.inverse_form(w.entries()), pc.inverse_form(v.entries()));
    }
}
