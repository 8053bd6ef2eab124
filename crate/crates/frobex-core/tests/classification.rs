//! Classification machinery exercised on the built-in families.

use frobex_core::catalog::{
    family_conductor, family_lattice, family_structures, family_witnesses, group_algebra,
    nilpotent_algebra, taft_algebra, unit_frobenius, GroupTable,
};
use frobex_core::extended::{
    check_ext_morphism, check_extended, check_key_identity, classify_extended, default_budget,
    find_frobenius_involutions, no_morphism_obstruction, solve_theta,
    theta_free_directions, ExtFrobAlgebra, MorphismObstruction,
};
use frobex_core::linalg::{Matrix, Vector};
use frobex_core::scalars::{sqrt_rational, CycField, CycScalar};

fn field(n: u64) -> std::sync::Arc<CycField> {
    CycField::new(n).unwrap()
}

#[test]
fn base_field_classification() {
    let f = field(family_conductor("k", None).unwrap());
    let fa = unit_frobenius(&f).unwrap();
    let lat = family_lattice("k", None, &f).unwrap();
    let c = classify_extended(&fa, &lat, &[], default_budget()).unwrap();
    assert_eq!(c.structures.len(), 2);
    assert_eq!(c.classes.len(), 2);
    assert!(c.unresolved.is_empty());
    for s in &c.structures {
        assert!(s.phi.is_identity());
    }
}

#[test]
fn complex_over_real_classification() {
    let f = field(8);
    let fa = frobex_core::catalog::complex_over_real_frobenius(&f).unwrap();
    let lat = family_lattice("complex-over-real", None, &f).unwrap();
    let c = classify_extended(&fa, &lat, &[], default_budget()).unwrap();
    eprintln!("C/R structures:");
    for s in &c.structures {
        eprintln!(
            "  phi={:?} theta=[{}]",
            s.phi.to_row_strings(),
            s.theta.to_strings().join(", ")
        );
    }
    assert_eq!(c.structures.len(), 3);
    assert_eq!(c.classes.len(), 3);
    assert!(c.unresolved.is_empty());
}

#[test]
fn c2_classification() {
    let f = field(8);
    let g = GroupTable::cyclic(2).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    let lat = family_lattice("kC2", None, &f).unwrap();
    let w = family_witnesses("kC2", &f).unwrap();
    let c = classify_extended(&fa, &lat, &w, default_budget()).unwrap();
    eprintln!("kC2: {} structures, {} classes", c.structures.len(), c.classes.len());
    for s in &c.structures {
        eprintln!(
            "  phi={:?} theta=[{}]",
            s.phi.to_row_strings(),
            s.theta.to_strings().join(", ")
        );
    }
    eprintln!("classes: {:?}", c.classes);
    assert!(c.unresolved.is_empty());
    assert_eq!(c.classes.len(), 4);
}

#[test]
fn c3_classification_structures() {
    let f = field(12);
    let g = GroupTable::cyclic(3).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    let lat = family_lattice("kC3", None, &f).unwrap();
    let c = classify_extended(&fa, &lat, &[], default_budget()).unwrap();
    eprintln!("kC3: {} structures, {} classes", c.structures.len(), c.classes.len());
    assert!(c.unresolved.is_empty());
    // golden list: 8 phi-trivial + 6 on the inversion-type involutions
    assert_eq!(c.structures.len(), 14);
    // catalog structures all appear
    let golden = family_structures("kC3", &f).unwrap().unwrap();
    for e in &golden {
        assert!(
            c.structures
                .iter()
                .any(|s| s.phi == *e.phi() && s.theta == *e.theta()),
            "missing {:?}",
            e.theta().to_strings()
        );
    }
    eprintln!("classes: {:?}", c.classes);
}

#[test]
fn taft_involutions_and_theta_span() {
    let f = field(family_conductor("taft2", None).unwrap());
    let fa = taft_algebra(2, 1, &f).unwrap();
    let lat = family_lattice("taft2", None, &f).unwrap();
    let invs = find_frobenius_involutions(&fa, &lat, default_budget()).unwrap();
    eprintln!("T2 involutions: {}", invs.len());
    for m in &invs {
        eprintln!("  {:?}", m.to_row_strings());
    }
    // theta solutions for phi = id fill span{x, gx} over the lattice
    let id = Matrix::identity(&f, 4);
    let thetas = solve_theta(&fa, &id, &lat, default_budget()).unwrap();
    eprintln!("T2 thetas (id): {}", thetas.len());
    for t in &thetas {
        assert!(t.get(0).is_zero() && t.get(2).is_zero(), "outside span{{x,gx}}");
    }
    assert_eq!(thetas.len(), 9); // {0,+-1}^2 in coordinates (x, gx)
}

#[test]
fn nilpotent_classification() {
    for n in [2usize, 4, 6] {
        let f = field(family_conductor("nilpotent", Some(n)).unwrap());
        let fa = nilpotent_algebra(n, &f).unwrap();
        let lat = family_lattice("nilpotent", Some(n), &f).unwrap();
        let c = classify_extended(&fa, &lat, &[], default_budget()).unwrap();
        assert!(c.structures.is_empty(), "x^{n} should not be extendable");
    }
    for n in [3usize, 5] {
        let f = field(family_conductor("nilpotent", Some(n)).unwrap());
        let fa = nilpotent_algebra(n, &f).unwrap();
        let lat = family_lattice("nilpotent", Some(n), &f).unwrap();
        let c = classify_extended(&fa, &lat, &[], default_budget()).unwrap();
        eprintln!("x^{n}: {} structures, {} classes", c.structures.len(), c.classes.len());
        for s in &c.structures {
            eprintln!(
                "  theta=[{}], {} free dirs",
                s.theta.to_strings().join(", "),
                s.free_directions.len()
            );
        }
        assert_eq!(c.structures.len(), 2);
        let s_n = sqrt_rational(&f, n as u64).unwrap();
        for s in &c.structures {
            assert!(s.phi.is_identity());
            // basepoint is +- sqrt(n) x^((n-1)/2)
            let mid = (n - 1) / 2;
            assert!(s.theta.get(mid) == &s_n || *s.theta.get(mid) == s_n.neg());
            // free directions exactly {x^j : (n+1)/2 <= j <= n-1}
            assert_eq!(s.free_directions.len(), n - 1 - mid);
        }
        eprintln!("classes: {:?}", c.classes);
    }
}

#[test]
fn c4_classifier_finds_extra_phi_trivial_thetas() {
    // the handle equation theta^2 = 4e on the order-4 cyclic group algebra
    // has 16 solutions; the classifier must find all with lattice coefficients
    let f = field(8);
    let g = GroupTable::cyclic(4).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    let lat = family_lattice("kC4", None, &f).unwrap();
    let id = Matrix::identity(&f, 4);
    let thetas = solve_theta(&fa, &id, &lat, default_budget()).unwrap();
    eprintln!("kC4 phi-trivial thetas: {}", thetas.len());
    for t in &thetas {
        eprintln!("  [{}]", t.to_strings().join(", "));
    }
    assert_eq!(thetas.len(), 16);
}

#[test]
fn free_directions_on_taft() {
    let f = field(2);
    let fa = taft_algebra(2, 1, &f).unwrap();
    let id = Matrix::identity(&f, 4);
    let theta = Vector::zeros(&f, 4);
    let fam = theta_free_directions(&fa, &id, &theta).unwrap();
    // at theta = 0 the residual system is trivial, the full space fails the
    // pairwise product check, so no free family is certified
    assert!(fam.directions.is_empty());
}

#[test]
fn obstruction_and_witnesses_on_c2() {
    let f = field(8);
    let all = family_structures("kC2", &f).unwrap().unwrap();
    // order: (+e), (+g), (-e), (-g), (phi=-g, 0)
    let plus_e = &all[0];
    let plus_g = &all[1];
    let minus_e = &all[2];
    let minus_g = &all[3];
    assert_eq!(
        no_morphism_obstruction(plus_e, minus_e).unwrap(),
        MorphismObstruction::Obstructed
    );
    assert_eq!(
        no_morphism_obstruction(plus_g, minus_g).unwrap(),
        MorphismObstruction::Unknown
    );
    assert_eq!(
        no_morphism_obstruction(plus_e, plus_e).unwrap(),
        MorphismObstruction::Unknown
    );
    // witness g -> -g connects (id, +-sqrt2 g) and fails on (id, +-sqrt2 e)
    let w = &family_witnesses("kC2", &f).unwrap()[0];
    assert!(check_ext_morphism(plus_g, minus_g, w).unwrap().passed());
    let rep = check_ext_morphism(plus_e, minus_e, w).unwrap();
    assert!(!rep.passed());
    // identity is always a morphism structure -> itself
    let id = Matrix::identity(&f, 2);
    assert!(check_ext_morphism(plus_e, plus_e, &id).unwrap().passed());
}

#[test]
fn key_identity_on_catalog_structures() {
    let f8 = field(8);
    for e in family_structures("kC2", &f8).unwrap().unwrap() {
        assert!(check_key_identity(&e).unwrap());
    }
    let f1 = field(1);
    for e in family_structures("klein-four", &f1).unwrap().unwrap() {
        assert!(check_key_identity(&e).unwrap());
    }
    // corrupted theta breaks it
    let all = family_structures("kC2", &f8).unwrap().unwrap();
    let mut bad = all[0].clone();
    bad.ext.theta = Vector::unit(&f8, 2, 0);
    assert!(!check_key_identity(&bad).unwrap());
}

#[test]
fn separable_extension_cases() {
    use frobex_core::extended::separable_extension;
    let f = field(8);
    let unit = unit_frobenius(&f).unwrap();
    let e = separable_extension(&unit).unwrap();
    assert!(check_extended(&e).unwrap().passed());
    // group algebra kC2 is not separable (m Delta = 2 id)
    let g = GroupTable::cyclic(2).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    assert!(separable_extension(&fa).is_err());
    // rescaled Mat2 is
    let m2 = frobex_core::catalog::matrix_algebra(2, &f).unwrap();
    let resc = m2
        .frob
        .rescale_delta(&CycScalar::from_rational(&f, frobex_core::scalars::rat(1, 2)))
        .unwrap();
    let e = separable_extension(&resc).unwrap();
    assert!(check_extended(&e).unwrap().passed());
}

#[test]
fn morphism_invertibility_contradiction_never_fires() {
    // every passing morphism in the c2 run is invertible
    let f = field(8);
    let all = family_structures("kC2", &f).unwrap().unwrap();
    let lat = family_lattice("kC2", None, &f).unwrap();
    for s in &all {
        for t in &all {
            let found = frobex_core::extended::find_ext_morphisms(
                s,
                t,
                &[],
                &lat,
                default_budget(),
            )
            .unwrap();
            for m in &found {
                let rep = check_ext_morphism(s, t, m).unwrap();
                assert!(rep.passed());
                assert!(m.is_invertible().unwrap());
            }
        }
    }
}

#[test]
fn evidence_search_on_c5() {
    let f = field(family_conductor("kC5", None).unwrap());
    let g = GroupTable::cyclic(5).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    let lat = family_lattice("kC5", None, &f).unwrap();
    let invs = find_frobenius_involutions(&fa, &lat, default_budget()).unwrap();
    eprintln!("kC5 involutions: {}", invs.len());
    for m in &invs {
        eprintln!("  col(g) = {:?}", m.column(1).to_strings());
    }
    assert_eq!(invs.len(), 6); // id plus w g^-1 for each fifth root w
}

#[test]
fn c4_classifier_contains_catalog_and_the_extra_octet() {
    // classifier output at the documented lattice: the 19 catalog
    // structures plus 8 further phi-trivial solutions whose handle squares
    // to 4e (coefficient patterns like e - i g + g^2 + i g^3)
    let f = field(8);
    let g = GroupTable::cyclic(4).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    let lat = family_lattice("kC4", None, &f).unwrap();
    let w = family_witnesses("kC4", &f).unwrap();
    let c = classify_extended(&fa, &lat, &w, default_budget()).unwrap();
    assert!(c.unresolved.is_empty());
    let catalog_list = family_structures("kC4", &f).unwrap().unwrap();
    for (i, e) in catalog_list.iter().enumerate() {
        assert!(
            c.structures
                .iter()
                .any(|s| s.phi == *e.phi() && s.theta == *e.theta()),
            "catalog structure {i} missing from classifier output"
        );
    }
    assert_eq!(c.structures.len(), catalog_list.len() + 8);
    // soundness: everything the classifier returns passes in full
    for s in &c.structures {
        let e = ExtFrobAlgebra::new(fa.clone(), s.phi.clone(), s.theta.clone()).unwrap();
        assert!(check_extended(&e).unwrap().passed());
        assert!(check_key_identity(&e).unwrap());
    }
    eprintln!(
        "kC4 classifier: {} structures in {} classes",
        c.structures.len(),
        c.classes.len()
    );
}

#[test]
fn taft_classifier_structures_are_phi_trivial_span_points() {
    let f = field(2);
    let fa = taft_algebra(2, 1, &f).unwrap();
    let lat = family_lattice("taft2", None, &f).unwrap();
    let c = classify_extended(&fa, &lat, &[], default_budget()).unwrap();
    assert!(c.unresolved.is_empty());
    // all structures are phi-trivial lattice points of span{x, gx}
    for s in &c.structures {
        assert!(s.phi.is_identity());
        assert!(s.theta.get(0).is_zero() && s.theta.get(2).is_zero());
    }
    assert_eq!(c.structures.len(), 9);
}
