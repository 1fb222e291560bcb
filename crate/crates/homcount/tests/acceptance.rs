//! One test per acceptance criterion; each prints its PASS/FAIL line.

use homcount::acceptance::{criterion, Settings};

fn check(id: u8) {
    let outcome = criterion(id, &Settings::default());
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_01_kneser_facts() {
    check(1);
}

#[test]
fn criterion_02_kneser_scale() {
    check(2);
}

#[test]
fn criterion_03_td_equivalence() {
    check(3);
}

#[test]
fn criterion_04_basis_roundtrips() {
    check(4);
}

#[test]
fn criterion_05_sub_via_hom() {
    check(5);
}

#[test]
fn criterion_06_line_identity() {
    check(6);
}

#[test]
fn criterion_07_whitney() {
    check(7);
}

#[test]
fn criterion_08_clique_pipeline() {
    check(8);
}

#[test]
fn criterion_09_crown_structure() {
    check(9);
}

#[test]
fn criterion_10_universality_roundtrip() {
    check(10);
}

#[test]
fn criterion_11_antichain_certificates() {
    check(11);
}

#[test]
fn criterion_12_extraction() {
    check(12);
}

#[test]
fn criterion_13_line_decision() {
    check(13);
}
