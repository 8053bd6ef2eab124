//! Acceptance suite: every criterion runs once (shared across the test
//! functions) and prints one line; each test asserts its criterion's
//! outcome.

use std::sync::OnceLock;

use frobex_core::acceptance::{run_acceptance, CriterionOutcome};

fn outcomes() -> &'static Vec<CriterionOutcome> {
    static OUTCOMES: OnceLock<Vec<CriterionOutcome>> = OnceLock::new();
    OUTCOMES.get_or_init(|| {
        let out = run_acceptance(0);
        for o in &out {
            println!("{}", o.line());
        }
        out
    })
}

fn assert_criterion(index: usize) {
    let o = outcomes()
        .iter()
        .find(|o| o.index == index)
        .expect("criterion present");
    println!("{}", o.line());
    assert!(o.passed, "{}", o.line());
}

#[test]
fn criterion_01_base_field_classification() {
    assert_criterion(1);
}

#[test]
fn criterion_02_complex_over_real_classification() {
    assert_criterion(2);
}

#[test]
fn criterion_03_truncated_polynomial_classification() {
    assert_criterion(3);
}

#[test]
fn criterion_04_order_2_cyclic_group_classification() {
    assert_criterion(4);
}

#[test]
fn criterion_05_order_3_cyclic_group_structures() {
    assert_criterion(5);
}

#[test]
fn criterion_06_order_4_cyclic_group_witness_grouping() {
    assert_criterion(6);
}

#[test]
fn criterion_07_klein_four_group_structures() {
    assert_criterion(7);
}

#[test]
fn criterion_08_smallest_taft_algebra() {
    assert_criterion(8);
}

#[test]
fn criterion_09_key_identity_property_suite() {
    assert_criterion(9);
}

#[test]
fn criterion_10_morphism_invertibility() {
    assert_criterion(10);
}

#[test]
fn criterion_11_tensor_and_biproduct_closure() {
    assert_criterion(11);
}

#[test]
fn criterion_12_separable_extensions() {
    assert_criterion(12);
}

#[test]
fn criterion_13_hopf_induced_frobenius_structures() {
    assert_criterion(13);
}

#[test]
fn criterion_14_integral_square_root_extensions() {
    assert_criterion(14);
}

#[test]
fn criterion_15_hopf_versus_frobenius_extension_gap() {
    assert_criterion(15);
}

#[test]
fn criterion_16_tensor_and_biproduct_functors() {
    assert_criterion(16);
}

#[test]
fn criterion_17_functor_images_match_products() {
    assert_criterion(17);
}

#[test]
fn criterion_18_functor_composition() {
    assert_criterion(18);
}

#[test]
fn criterion_19_involution_shape_evidence() {
    assert_criterion(19);
}
