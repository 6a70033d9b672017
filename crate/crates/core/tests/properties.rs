use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use superloop::automorphisms::random::{random_inner, seeded};
use superloop::automorphisms::{f_group, family_arc, outer_class, AutMorphism, FGroup, Generator};
use superloop::exactfield::CycScalar;
use superloop::families::{Family, FamilySpec};
use superloop::io::{automorphism_from_json, automorphism_to_json};
use superloop::loops::{d_alpha_canonical, d_alpha_orbit, loop_bracket, loop_build, LoopAlgebra, LoopElement};
use superloop::superalgebra::Parity;

fn fam(s: &str) -> Arc<Family> {
    family_arc(&s.parse().unwrap()).unwrap()
}

fn groups() -> Vec<FGroup> {
    ["osp(3|2)", "sl(2|1)", "psl(3|3)", "D(cyc(3)[0,1])", "psq(3)"]
        .iter()
        .map(|s| f_group(&s.parse::<FamilySpec>().unwrap()).unwrap())
        .collect()
}

fn sl_loop() -> &'static LoopAlgebra {
    static L: OnceLock<LoopAlgebra> = OnceLock::new();
    L.get_or_init(|| {
        let f = fam("sl(2|1)");
        loop_build(&AutMorphism::generator(&f, Generator::Tau).unwrap(), 4).unwrap()
    })
}

/// A homogeneous element `c · b ⊗ z^d` for the `k`-th basis vector `b` of the degree-`d` piece.
fn basis_element(l: &LoopAlgebra, d: i64, k: usize, c: i64) -> Option<(Parity, LoopElement)> {
    let basis = l.homogeneous_basis(d);
    let (p, v) = basis.get(k % basis.len().max(1))?;
    let c = CycScalar::from_int(c);
    Some((*p, LoopElement::homogeneous(d, v.iter().map(|x| x * &c).collect())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn outer_groups_are_abelian_groups(g in 0usize..5, a in 0u32..4, b in 0u32..4, c in 0u32..4) {
        let group = &groups()[g];
        let n = group.kind.order();
        let (a, b, c) = (group.element(a % n).unwrap(), group.element(b % n).unwrap(), group.element(c % n).unwrap());
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&group.identity()), a.clone());
        prop_assert!(a.mul(&a.inverse()).is_identity());
        let mut power = group.identity();
        for _ in 0..n {
            power = power.mul(&a);
        }
        prop_assert!(power.is_identity());
    }

    #[test]
    fn canonical_alpha_is_an_orbit_invariant(p in -9i64..=9, q in 1i64..=6) {
        let alpha = CycScalar::frac(p, q);
        prop_assume!(!alpha.is_zero() && alpha != CycScalar::from_int(-1));
        let canon = d_alpha_canonical(&alpha);
        prop_assert!(d_alpha_orbit(&alpha).contains(&canon));
        for beta in d_alpha_orbit(&alpha) {
            prop_assert_eq!(d_alpha_canonical(&beta), canon.clone());
        }
    }

    #[test]
    fn loop_bracket_is_graded_and_super_skew(
        (d1, d2) in (-5i64..=5, -5i64..=5),
        (k1, k2) in (0usize..8, 0usize..8),
        (c1, c2) in (1i64..=4, -4i64..=-1),
    ) {
        let l = sl_loop();
        let (Some((p1, u)), Some((p2, v))) = (basis_element(l, d1, k1, c1), basis_element(l, d2, k2, c2)) else {
            return Ok(());
        };
        let uv = loop_bracket(l, &u, &v).unwrap();
        prop_assert!(uv.support().iter().all(|&d| d == d1 + d2));
        if !uv.is_zero() {
            prop_assert_eq!(uv.parity(l.base()), Some(p1 + p2));
        }
        let sign = CycScalar::from_int(if p1.is_odd() && p2.is_odd() { 1 } else { -1 });
        prop_assert_eq!(loop_bracket(l, &v, &u).unwrap(), uv.scale(&sign));
    }

    #[test]
    fn loop_bracket_is_additive(
        (d1, d2, d3) in (-4i64..=4, -4i64..=4, -4i64..=4),
        (k1, k2, k3) in (0usize..8, 0usize..8, 0usize..8),
    ) {
        let l = sl_loop();
        let (Some((_, u)), Some((_, v)), Some((_, w))) =
            (basis_element(l, d1, k1, 1), basis_element(l, d2, k2, 2), basis_element(l, d3, k3, -3))
        else {
            return Ok(());
        };
        let lhs = loop_bracket(l, &u.add(&v), &w).unwrap();
        let rhs = loop_bracket(l, &u, &w).unwrap().add(&loop_bracket(l, &v, &w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn automorphism_files_round_trip(seed in any::<u64>(), which in 0usize..4) {
        let f = fam(["psl(2|2)", "osp(4|2)", "D(1)", "H(4)"][which]);
        let sigma = random_inner(&f, &mut seeded(seed)).unwrap();
        let back = automorphism_from_json(&automorphism_to_json(&sigma)).unwrap().to_automorphism(&f).unwrap();
        prop_assert_eq!(back.matrix(), sigma.matrix());
        prop_assert_eq!(back.witness(), sigma.witness());
        prop_assert_eq!(outer_class(&back).unwrap(), outer_class(&sigma).unwrap());
    }
}
