use std::sync::OnceLock;

use termrank::acceptance::{self, CriterionResult, Scale};

fn results() -> &'static [CriterionResult] {
    static RESULTS: OnceLock<Vec<CriterionResult>> = OnceLock::new();
    RESULTS.get_or_init(|| acceptance::run(&Scale::default()))
}

fn criterion(id: u8) {
    let r = results()
        .iter()
        .find(|r| r.id == id)
        .expect("criterion ran");
    println!("{}", r.line());
    assert!(r.passed(), "{}\n{}", r.line(), r.samples.join("\n"));
}

#[test]
fn criterion_1_checker_brute_force_and_cover_agree() {
    criterion(1);
}

#[test]
fn criterion_2_min_cover_equals_max_independent_family() {
    criterion(2);
}

#[test]
fn criterion_3_auxiliary_functions_are_supermodular() {
    criterion(3);
}

#[test]
fn criterion_4_ore_matches_subgraph_existence() {
    criterion(4);
}

#[test]
fn criterion_5_brualdi_forms_match_basis_matchings() {
    criterion(5);
}

#[test]
fn criterion_6_reduction_lattice_holds() {
    criterion(6);
}

#[test]
fn criterion_7_witnesses_validate_independently() {
    criterion(7);
}

#[test]
fn criterion_8_certificates_recompute() {
    criterion(8);
}

#[test]
fn summary() {
    let all = results();
    assert_eq!(all.len(), 8);
    for r in all {
        println!("{}", r.line());
    }
    assert!(all.iter().all(|r| r.passed()));
}
