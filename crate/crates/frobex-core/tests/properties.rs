//! Randomized and exhaustive property tests: field axioms, linear-algebra
//! identities, catalog-wide axiom sweeps, and soundness of the Hopf-induced
//! Frobenius structures over group tables up to order 8.

use std::sync::Arc;

use proptest::prelude::*;

use frobex_core::catalog::{
    self, family_lattice, family_structures, group_algebra, GroupTable,
};
use frobex_core::extended::{solve_theta, CandidateLattice, default_budget};
use frobex_core::frobenius::{check_frobenius, pairing_matrix};
use frobex_core::hopf::{check_hopf, check_integral_composites, group_hopf, psi};
use frobex_core::linalg::{solve_linear, LinSolve, Matrix, Vector};
use frobex_core::rng::SplitMix64;
use frobex_core::scalars::{sqrt_rational, CycField, CycScalar};

fn field(n: u64) -> Arc<CycField> {
    CycField::new(n).unwrap()
}

// ---------------------------------------------------------------------------
// scalar field axioms
// ---------------------------------------------------------------------------

fn scalar_strategy(conductor: u64) -> impl Strategy<Value = CycScalar> {
    let f = field(conductor);
    let deg = f.degree();
    proptest::collection::vec((-4i64..5, 1i64..4), deg).prop_map(move |coefs| {
        let mut s = CycScalar::zero(&f);
        for (k, (n, d)) in coefs.into_iter().enumerate() {
            let term =
                CycScalar::zeta_pow(&f, k as i64).scale(&frobex_core::scalars::rat(n, d));
            s = s.add(&term).unwrap();
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_hold_exactly(
        a in scalar_strategy(12),
        b in scalar_strategy(12),
        c in scalar_strategy(12),
    ) {
        // associativity and commutativity
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        // distributivity
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn matrix_multiplication_is_associative(
        seed in any::<u64>(),
    ) {
        let f = field(8);
        let mut rng = SplitMix64::new(seed);
        let a = rng.matrix(&f, 2, 3);
        let b = rng.matrix(&f, 3, 2);
        let c = rng.matrix(&f, 2, 4);
        let lhs = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
        let rhs = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_mixed_product_holds(seed in any::<u64>()) {
        let f = field(8);
        let mut rng = SplitMix64::new(seed);
        let a = rng.matrix(&f, 2, 2);
        let b = rng.matrix(&f, 3, 2);
        let c = rng.matrix(&f, 2, 3);
        let d = rng.matrix(&f, 2, 2);
        let lhs = a.kron(&b).unwrap().mat_mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mat_mul(&c).unwrap().kron(&b.mat_mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solver_residuals_vanish(seed in any::<u64>()) {
        let f = field(4);
        let mut rng = SplitMix64::new(seed);
        let a = rng.matrix(&f, 3, 4);
        let x = {
            let mut v = Vector::zeros(&f, 4);
            for i in 0..4 {
                v.set(i, CycScalar::from_rational(&f, rng.small_rational()));
            }
            v
        };
        let b = a.mul_vec(&x).unwrap();
        match solve_linear(&a, &b).unwrap() {
            LinSolve::Solved { particular, nullspace, .. } => {
                prop_assert_eq!(a.mul_vec(&particular).unwrap(), b);
                for v in &nullspace {
                    prop_assert!(a.mul_vec(v).unwrap().is_zero());
                }
            }
            LinSolve::Inconsistent => prop_assert!(false, "constructed system must be solvable"),
        }
    }
}

#[test]
fn inverse_times_self_is_one_across_conductors() {
    for conductor in [1u64, 2, 3, 4, 8, 12, 24] {
        let f = field(conductor);
        let mut rng = SplitMix64::new(0xF1E1D * conductor);
        for _ in 0..200 {
            let s = rng.nonzero_scalar(&f);
            let inv = s.inverse().unwrap();
            assert!(inv.mul(&s).unwrap().is_one(), "conductor {conductor}");
        }
    }
}

#[test]
fn embedding_is_a_field_homomorphism_on_samples() {
    let small = field(12);
    let big = field(24);
    let mut rng = SplitMix64::new(99);
    for _ in 0..50 {
        let a = rng.scalar(&small);
        let b = rng.scalar(&small);
        let ea = a.embed(&big).unwrap();
        let eb = b.embed(&big).unwrap();
        assert_eq!(a.mul(&b).unwrap().embed(&big).unwrap(), ea.mul(&eb).unwrap());
        assert_eq!(a.add(&b).unwrap().embed(&big).unwrap(), ea.add(&eb).unwrap());
        // injectivity on samples: distinct inputs stay distinct
        if a != b {
            assert_ne!(ea, eb);
        }
    }
    assert!(CycScalar::one(&small).embed(&big).unwrap().is_one());
}

// ---------------------------------------------------------------------------
// catalog-wide sweeps
// ---------------------------------------------------------------------------

#[test]
fn every_catalog_frobenius_algebra_passes_and_is_nondegenerate() {
    let mut algebras = Vec::new();
    let f1 = field(1);
    algebras.push(catalog::unit_frobenius(&f1).unwrap());
    algebras.push(catalog::complex_over_real_frobenius(&field(8)).unwrap());
    for n in 2..=6usize {
        algebras.push(group_algebra(&GroupTable::cyclic(n).unwrap(), &f1).unwrap());
    }
    algebras.push(group_algebra(&GroupTable::klein_four().unwrap(), &f1).unwrap());
    algebras.push(group_algebra(&GroupTable::symmetric_3().unwrap(), &f1).unwrap());
    for n in 2..=5usize {
        let f = field(catalog::family_conductor("nilpotent", Some(n)).unwrap());
        algebras.push(catalog::nilpotent_algebra(n, &f).unwrap());
    }
    algebras.push(catalog::taft_algebra(2, 1, &field(2)).unwrap());
    algebras.push(catalog::taft_algebra(3, 1, &field(12)).unwrap());
    algebras.push(catalog::matrix_algebra(2, &field(8)).unwrap().frob);
    for fa in &algebras {
        assert!(check_frobenius(fa).unwrap().passed(), "dim {}", fa.dim());
        assert!(
            pairing_matrix(fa).unwrap().is_invertible().unwrap(),
            "degenerate pairing at dim {}",
            fa.dim()
        );
    }
}

#[test]
fn catalog_extended_structures_all_pass() {
    use frobex_core::extended::check_extended;
    for (family, cond) in [
        ("k", 1u64),
        ("complex-over-real", 8),
        ("kC2", 8),
        ("kC3", 12),
        ("kC4", 8),
        ("klein-four", 1),
    ] {
        let f = field(cond);
        let list = family_structures(family, &f).unwrap().unwrap();
        for (i, e) in list.iter().enumerate() {
            assert!(
                check_extended(e).unwrap().passed(),
                "{family} structure {i}"
            );
        }
    }
}

#[test]
fn phi_or_theta_trivial_on_domains() {
    // structures on the base field and on the complex-over-real model are
    // all phi-trivial or theta-trivial
    for (family, cond) in [("k", 1u64), ("complex-over-real", 8)] {
        let f = field(cond);
        for e in family_structures(family, &f).unwrap().unwrap() {
            assert!(e.is_phi_trivial() || e.is_theta_trivial());
        }
    }
}

#[test]
fn theta_solutions_are_monotone_under_lattice_growth() {
    // enlarging the lattice never removes solutions, and a benign
    // enlargement of the documented lattice adds none on the order-2 family
    let f = field(8);
    let g = GroupTable::cyclic(2).unwrap();
    let fa = group_algebra(&g, &f).unwrap();
    let id = Matrix::identity(&f, 2);
    let lat = family_lattice("kC2", None, &f).unwrap();
    let small = solve_theta(&fa, &id, &lat, default_budget()).unwrap();

    let mut extra = lat.scalars().to_vec();
    extra.push(CycScalar::from_int(&f, 2));
    extra.push(CycScalar::from_int(&f, -2));
    extra.push(CycScalar::from_int(&f, 3));
    let bigger = CandidateLattice::new("kC2 plus integers", extra);
    let large = solve_theta(&fa, &id, &bigger, default_budget()).unwrap();
    for s in &small {
        assert!(large.contains(s));
    }
    assert_eq!(small.len(), large.len());
}

// ---------------------------------------------------------------------------
// hopf soundness over group tables up to order 8
// ---------------------------------------------------------------------------

fn groups_up_to_order_8() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    for n in 1..=8usize {
        out.push((format!("C{n}"), GroupTable::cyclic(n).unwrap()));
    }
    let c2 = GroupTable::cyclic(2).unwrap();
    let c4 = GroupTable::cyclic(4).unwrap();
    out.push((
        "C2xC2".into(),
        GroupTable::direct_product(&c2, &c2).unwrap(),
    ));
    out.push((
        "C2xC4".into(),
        GroupTable::direct_product(&c2, &c4).unwrap(),
    ));
    let c2c2 = GroupTable::direct_product(&c2, &c2).unwrap();
    out.push((
        "C2xC2xC2".into(),
        GroupTable::direct_product(&c2, &c2c2).unwrap(),
    ));
    out.push(("S3".into(), GroupTable::symmetric_3().unwrap()));
    out.push(("D4".into(), GroupTable::dihedral(4).unwrap()));
    out
}

#[test]
fn hopf_induced_structures_sound_up_to_order_8() {
    let f = field(1);
    for (name, table) in groups_up_to_order_8() {
        let h = group_hopf(&table, &f).unwrap();
        let rep = check_hopf(&h).unwrap();
        assert!(rep.passed(), "{name}: {}", rep.render_table());
        let fa = psi(&h).unwrap();
        assert!(check_frobenius(&fa).unwrap().passed(), "{name}");
        // the induced comultiplication agrees with the group-algebra one
        let direct = group_algebra(&table, &f).unwrap();
        assert_eq!(fa, direct, "{name}");
        assert!(check_integral_composites(&h).unwrap().passed(), "{name}");
        // the antipode is invertible for every normalized-integral example
        assert!(h.s.is_invertible().unwrap(), "{name}");
    }
}

#[test]
fn sqrt_lattice_scalars_square_correctly() {
    // the family lattices contain genuine square roots
    let f = field(8);
    let lat = family_lattice("kC2", None, &f).unwrap();
    let two = CycScalar::from_int(&f, 2);
    assert!(lat
        .scalars()
        .iter()
        .any(|s| s.mul(s).unwrap() == two));
    let s2 = sqrt_rational(&f, 2).unwrap();
    assert!(lat.scalars().iter().any(|s| *s == s2));
}
