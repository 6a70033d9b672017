use super::random::{random_inner, seeded};
use super::*;

fn fam(s: &str) -> Arc<Family> {
    family_arc(&s.parse().unwrap()).unwrap()
}

#[test]
fn every_generator_is_an_automorphism_where_defined() {
    let cases: Vec<(&str, Generator)> = vec![
        ("sl(2|1)", Generator::Tau),
        ("sl(3|2)", Generator::J(CycScalar::from_int(3))),
        ("psl(3|3)", Generator::Pi),
        ("psl(3|3)", Generator::Tau),
        ("psl(2|2)", Generator::Pi),
        ("psl(2|2)", Generator::Rho(Matrix::from_int_rows(&[&[2, 1], &[1, 1]]))),
        ("psq(3)", Generator::SigmaQ),
        ("osp(4|2)", Generator::R),
        ("osp(3|2)", Generator::R),
        ("D(1)", Generator::Theta { perm: [1, 0, 2], lambda: CycScalar::one() }),
    ];
    for (s, g) in cases {
        let f = fam(s);
        let m = g.matrix(&f).unwrap();
        assert!(f.algebra.is_automorphism(&m), "{g} on {s}");
    }
}

#[test]
fn transposition_theta_needs_equal_weights() {
    let g = Generator::Theta { perm: [1, 0, 2], lambda: CycScalar::one() };
    let f = fam("D(2)");
    assert!(!f.algebra.is_automorphism(&g.matrix(&f).unwrap()));
    for s in ["D(-2)", "D(-1/2)"] {
        let f = fam(s);
        let c = f_group(&f.spec).unwrap().element(1).unwrap();
        let r = representative(&f, &c).unwrap();
        assert_eq!(outer_class(&r).unwrap(), c, "{s}");
    }
}

#[test]
fn orders_of_distinguished_generators() {
    let tau = AutMorphism::generator(&fam("sl(2|1)"), Generator::Tau).unwrap();
    assert_eq!(tau.order(), Some(4));
    let sq = AutMorphism::generator(&fam("psq(3)"), Generator::SigmaQ).unwrap();
    assert_eq!(sq.order(), Some(4));
    // σ_q² is the sign flip on the odd part
    let g = sq.algebra();
    let m = sq.pow(2);
    for k in 0..g.dim() {
        let mut e = vec![CycScalar::zero(); g.dim()];
        e[k] = if g.parity(k).is_odd() { CycScalar::from_int(-1) } else { CycScalar::one() };
        assert_eq!(m.matrix().column(k), e);
    }
}

#[test]
fn representatives_classify_to_themselves() {
    for s in ["sl(2|1)", "psl(3|3)", "psl(2|2)", "psq(3)", "osp(4|2)", "D(1)", "D(cyc(3)[0,1])", "H(4)", "osp(2|2)"] {
        let f = fam(s);
        for c in f_group(&f.spec).unwrap().elements() {
            let r = representative(&f, &c).unwrap();
            assert!(r.witness_consistent());
            assert_eq!(outer_class(&r).unwrap(), c, "{s} class {c}");
            let order = r.order().unwrap() as u32;
            assert_eq!(order % c.order(), 0, "{s}");
        }
    }
}

#[test]
fn inner_rejects_bad_witnesses() {
    let f = fam("osp(4|2)");
    let x = Matrix::from_int_rows(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let err = inner(&f, vec![Generator::Ad { x, y: Matrix::identity(2) }]).unwrap_err();
    assert!(err.to_string().contains("orthogonal"), "{err}");
    let err = inner(&f, vec![Generator::R]).unwrap_err();
    assert!(matches!(err, AutError::NotInner(_)));
    let f = fam("sl(2|1)");
    let id = inner(
        &f,
        vec![Generator::Ad { x: Matrix::identity(2), y: Matrix::identity(1) }, Generator::J(CycScalar::one())],
    )
    .unwrap();
    assert!(id.is_identity());
}

#[test]
fn rho_fixes_the_even_part() {
    let f = fam("psl(2|2)");
    let mut rng = seeded(3);
    for _ in 0..5 {
        let z = random::special_linear(2, &mut rng);
        let r = inner(&f, vec![Generator::Rho(z)]).unwrap();
        for k in f.algebra.indices_of(crate::superalgebra::Parity::Even) {
            assert_eq!(r.apply(&f.algebra.basis_vector(k)), f.algebra.basis_vector(k));
        }
    }
}

#[test]
fn classifier_is_a_conjugation_invariant_homomorphism() {
    for s in ["sl(2|1)", "psl(3|3)", "psl(2|2)", "psq(3)", "osp(4|2)", "D(1)", "D(cyc(3)[0,1])", "H(4)"] {
        let f = fam(s);
        let group = f_group(&f.spec).unwrap();
        let mut rng = seeded(11);
        let reps: Vec<AutMorphism> = group.elements().iter().map(|c| representative(&f, c).unwrap()).collect();
        for t in 0..6 {
            let a = random_inner(&f, &mut rng).unwrap().compose(&reps[t % reps.len()]).unwrap();
            let b = reps[(t / 2) % reps.len()].compose(&random_inner(&f, &mut rng).unwrap()).unwrap();
            let (ca, cb) = (outer_class(&a).unwrap(), outer_class(&b).unwrap());
            assert_eq!(ca, group.elements()[t % reps.len()], "{s}");
            assert_eq!(outer_class(&a.compose(&b).unwrap()).unwrap(), ca.mul(&cb), "{s}");
            let g = random_inner(&f, &mut rng).unwrap();
            assert_eq!(outer_class(&a.conjugate_by(&g).unwrap()).unwrap(), ca, "{s}");
        }
    }
}

#[test]
fn raw_matrices_on_even_hamiltonian_need_a_witness() {
    let f = fam("H(4)");
    let c = f_group(&f.spec).unwrap().element(1).unwrap();
    let r = representative(&f, &c).unwrap();
    let raw = AutMorphism::from_matrix(&f, r.matrix().clone()).unwrap();
    assert!(matches!(outer_class(&raw), Err(AutError::WitnessRequired(_))));
}

#[test]
fn eigenspaces_of_small_examples() {
    let f = fam("psq(3)");
    let sq = AutMorphism::generator(&f, Generator::SigmaQ).unwrap();
    let dims: Vec<usize> = eigen_decomposition(&sq, 4).unwrap().iter().map(|s| s.dim()).collect();
    assert_eq!(dims.iter().sum::<usize>(), 16);
    assert!(matches!(eigen_decomposition(&sq, 2), Err(AutError::Period { .. })));
    let f = fam("sl(2|1)");
    let spaces = eigen_decomposition(&AutMorphism::identity(&f), 1).unwrap();
    assert_eq!(spaces.len(), 1);
    assert!(spaces[0].is_full());
}

#[test]
fn standard_relations_hold() {
    for s in ["sl(2|1)", "psl(3|3)", "D(2)"] {
        let report = check_standard_relations(&fam(s), 5, 4).unwrap();
        assert!(report.all_passed(), "{s}\n{report}");
    }
}

#[test]
fn conjugating_rho_by_pi_swaps_the_entries_of_z() {
    let report = check_standard_relations(&fam("psl(2|2)"), 5, 4).unwrap();
    for r in &report.results {
        if r.name.contains("(Z^t)^-1") {
            // πρ(Z)π⁻¹ = ρ(PZP), and PZP ≠ Z⁻ᵗ unless Z commutes with diag(1, −1)
            assert_eq!(r.failures, r.trials, "{report}");
        } else {
            assert!(r.passed(), "{report}");
        }
    }
}

#[test]
fn inverse_words_expand_to_inverse_matrices() {
    let f = fam("D(cyc(3)[0,1])");
    let c = f_group(&f.spec).unwrap().element(1).unwrap();
    let r = representative(&f, &c).unwrap();
    let inv = r.inverse();
    assert!(inv.witness_consistent());
    assert!(r.compose(&inv).unwrap().is_identity());
    assert_eq!(outer_class(&inv).unwrap(), c.inverse());
}

#[test]
fn exponentials_of_nilpotent_derivations_are_inner() {
    use crate::families::{hamiltonian_field, GrassmannPoly, PolyDerivation};
    let n = 4;
    let cases = [
        ("W(4)", PolyDerivation::single(GrassmannPoly::monomial(n, 0b0111, CycScalar::one()), 4)),
        ("H(4)", hamiltonian_field(&GrassmannPoly::top(n))),
        ("S(4)", crate::families::s_spanning_set(n).into_iter().find(|d| d.degree() == Some(2)).unwrap()),
    ];
    for (s, d) in cases {
        let f = fam(s);
        let a = exp_nilpotent(&f, &d).unwrap();
        assert!(f.algebra.is_automorphism(a.matrix()), "{s}");
        assert!(outer_class(&a).unwrap().is_identity(), "{s}");
        assert!(exp_nilpotent(&f, &PolyDerivation::zero(n)).unwrap().is_identity());
    }
}
