use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use termrank::acceptance::Context;
use termrank::cover::{self, Route, Solution};
use termrank::feasibility::{self, ryser_full, ryser_prefix};
use termrank::gen::random_recipe;
use termrank::io::{self, InstanceFile, ModeTag};
use termrank::{DegreeSpec, Grounds};

fn degree_spec(ns: usize, nt: usize) -> impl Strategy<Value = DegreeSpec> {
    (
        prop::collection::vec(0..=nt as u32, ns),
        prop::collection::vec(0..=ns as u32, nt),
    )
        .prop_filter_map("equal totals", |(a, b)| DegreeSpec::new(a, b).ok())
}

fn shaped_spec() -> impl Strategy<Value = (usize, usize, DegreeSpec)> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(ns, nt)| degree_spec(ns, nt).prop_map(move |m| (ns, nt, m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ryser_prefix_matches_full_scan((ns, nt, m) in shaped_spec(), ell in 0usize..=5) {
        let g = Grounds::numbered(ns, nt).unwrap();
        let ell = ell.min(nt);
        prop_assert_eq!(ryser_full(&g, &m, ell).max_lhs, ryser_prefix(&g, &m, ell).max_lhs);
    }

    #[test]
    fn msmt_checker_agrees_with_search(seed in any::<u64>()) {
        let r = random_recipe(&mut ChaCha8Rng::seed_from_u64(seed), ModeTag::Msmt, 3, 3);
        let inst = r.instance().unwrap();
        let v = feasibility::check_msmt(&inst).unwrap();
        let ctx = Context::of(&inst);
        match cover::construct_brute(&inst) {
            Some(g) => {
                prop_assert!(v.passed());
                prop_assert_eq!(ctx.graph_holds(&g), Ok(()));
            }
            None => {
                let cert = v.violation.expect("infeasible instances carry a certificate");
                prop_assert_eq!(ctx.certificate_holds(&cert), Ok(()));
            }
        }
    }

    #[test]
    fn term_rank_witnesses_round_trip(seed in any::<u64>()) {
        let r = random_recipe(&mut ChaCha8Rng::seed_from_u64(seed), ModeTag::RyserGen, 3, 3);
        let inst = r.instance().unwrap();
        let file = InstanceFile::from_instance(ModeTag::RyserGen, &inst);
        let loaded = file.load(12).unwrap();
        let result = io::solve(&loaded, Route::Both).unwrap();
        match cover::solve_term_rank(&inst, Route::Brute).unwrap() {
            Solution::Solved(_) => {
                prop_assert!(result.feasible());
                prop_assert!(io::validate_witness(&loaded, &result).is_ok());
            }
            Solution::Infeasible(_) => prop_assert!(!result.feasible()),
        }
    }

    #[test]
    fn checkers_are_deterministic(seed in any::<u64>()) {
        let r = random_recipe(&mut ChaCha8Rng::seed_from_u64(seed), ModeTag::Msmt, 3, 3);
        let inst = r.instance().unwrap();
        prop_assert_eq!(
            feasibility::check_msmt(&inst).unwrap(),
            feasibility::check_msmt(&inst).unwrap()
        );
    }
}
