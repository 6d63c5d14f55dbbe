//! Seeded cross-checking: every generated instance is decided by its checker
//! and by an independent constructor, and the two must agree.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bigraph::{bipartite_complement, matching_number};
use crate::cover::{self, find_matching_covering_bases, first_fitting, Route, Solution};
use crate::error::Error;
use crate::feasibility::{self, Verdict};
use crate::gen::{random_recipe, Recipe};
use crate::io::{InstanceFile, ModeTag};
use crate::setfun::{classify_supermodular, Mode};
use crate::validate;

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub max_s: usize,
    pub max_t: usize,
    pub modes: Vec<ModeTag>,
    /// Deliberately flip every checker verdict, to exercise the reporting.
    pub fault: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            count: 200,
            max_s: 3,
            max_t: 3,
            modes: ModeTag::ALL.to_vec(),
            fault: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ModeStats {
    pub instances: usize,
    pub feasible: usize,
    pub infeasible: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub mode: ModeTag,
    pub message: String,
    pub reproducer: InstanceFile,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub count: usize,
    pub modes: BTreeMap<ModeTag, ModeStats>,
    pub counterexamples: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn passed(v: crate::Result<Verdict>, fault: bool) -> Result<bool, String> {
    let ok = match v {
        Ok(v) => v.passed(),
        Err(Error::NoSimpleRealization(_)) => false,
        Err(e) => return Err(format!("checker error: {e}")),
    };
    Ok(ok != fault)
}

fn agree(what: &str, a: bool, b: bool) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a} vs {b}"))
    }
}

/// Decides one recipe every available way; `Ok(feasible)` when all agree.
pub fn evaluate(r: &Recipe, fault: bool) -> Result<bool, String> {
    let err = |e: Error| e.to_string();
    if r.mode == ModeTag::Brualdi {
        let gplus = r.graph().map_err(err)?;
        let ms = r.matroid_s().map_err(err)?;
        let mt = r.matroid_t().map_err(err)?.ok_or("missing M_T")?;
        let check = passed(feasibility::check_brualdi(&gplus, &ms, &mt), fault)?;
        let found = find_matching_covering_bases(&gplus, &ms, &mt).map_err(err)?;
        if let Some(m) = &found {
            validate::is_basis_matching(&gplus, &ms, &mt, m)?;
        }
        agree("check_brualdi vs matching search", check, found.is_some())?;
        return Ok(check);
    }
    let inst = r.instance().map_err(err)?;
    let g = inst.grounds().clone();
    match r.mode {
        ModeTag::Ore => {
            let m = inst.full_degrees().map_err(err)?;
            let check = passed(feasibility::check_ore(inst.g0(), m), fault)?;
            let found = first_fitting(inst.g0(), m.m_s(), Some(m.m_t()), |_| true);
            agree("check_ore vs subgraph search", check, found.is_some())?;
            Ok(check)
        }
        ModeTag::Msmt | ModeTag::Fully => {
            let check = passed(feasibility::check_msmt(&inst), fault)?;
            let brute = cover::construct_brute(&inst);
            agree("check_msmt vs brute force", check, brute.is_some())?;
            let route = cover::cover_route(&inst).map_err(err)?;
            if let Some(out) = &route {
                validate::is_augmentation(&inst, &out.graph)?;
            }
            agree("check_msmt vs cover route", check, route.is_some())?;
            if matches!(
                classify_supermodular(inst.pt(), Mode::Full, false),
                Ok(None)
            ) {
                let fully = passed(feasibility::check_fully(&inst), fault)?;
                agree("check_msmt vs check_fully", check, fully)?;
            }
            Ok(check)
        }
        ModeTag::MsOnly => {
            let check = passed(feasibility::check_ms_only(&inst), fault)?;
            let brute = cover::construct_brute(&inst);
            agree("check_ms_only vs brute force", check, brute.is_some())?;
            Ok(check)
        }
        ModeTag::Ryser => {
            let m = inst.full_degrees().map_err(err)?;
            let ell = r.ell.ok_or("missing ell")?;
            let check = if inst.h0().edge_count() == 0 {
                let classic = passed(feasibility::check_ryser(&g, m, ell), fault)?;
                let novel = passed(feasibility::check_ryser_novel(inst.h0(), m, ell), fault)?;
                agree("check_ryser vs uniform specialisation", classic, novel)?;
                classic
            } else {
                passed(feasibility::check_ryser_novel(inst.h0(), m, ell), fault)?
            };
            let gen = passed(feasibility::check_ryser_gen(&inst), fault)?;
            agree("ryser vs check_ryser_gen on uniform matroids", check, gen)?;
            let g0 = bipartite_complement(inst.h0()).map_err(err)?;
            let found = first_fitting(&g0, m.m_s(), Some(m.m_t()), |cand| {
                cand.union(inst.h0())
                    .map(|gp| matching_number(&gp) >= ell)
                    .unwrap_or(false)
            });
            agree("ryser vs matching-number search", check, found.is_some())?;
            Ok(check)
        }
        ModeTag::RyserGen => {
            let m = inst.full_degrees().map_err(err)?;
            let mt = inst.mt().ok_or("missing M_T")?;
            let check = passed(feasibility::check_ryser_gen(&inst), fault)?;
            let msmt = passed(feasibility::check_msmt(&inst), fault)?;
            agree("check_ryser_gen vs check_msmt on the co-rank", check, msmt)?;
            let found = first_fitting(inst.g0(), m.m_s(), Some(m.m_t()), |cand| {
                cand.union(inst.h0())
                    .ok()
                    .and_then(|gp| find_matching_covering_bases(&gp, inst.ms(), mt).ok())
                    .flatten()
                    .is_some()
            });
            agree("check_ryser_gen vs matching search", check, found.is_some())?;
            if check && !fault {
                match cover::solve_term_rank(&inst, Route::Both).map_err(err)? {
                    Solution::Solved(s) => {
                        validate::is_augmentation(&inst, &s.graph)?;
                        let gp = s.graph.union(inst.h0()).map_err(err)?;
                        validate::is_basis_matching(&gp, inst.ms(), mt, &s.matching)?;
                    }
                    Solution::Infeasible(_) => return Err("solver disagrees".into()),
                }
            }
            Ok(check)
        }
        ModeTag::Brualdi => unreachable!("handled above"),
    }
}

/// Greedily applies shrink steps that keep the failure.
pub fn minimize(r: &Recipe, fault: bool) -> Recipe {
    let mut cur = r.clone();
    'outer: loop {
        for c in cur.shrink_candidates() {
            if evaluate(&c, fault).is_err() {
                cur = c;
                continue 'outer;
            }
        }
        return cur;
    }
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// The recipe generated for instance `index` of a run.
pub fn recipe_at(cfg: &FuzzConfig, index: usize) -> Recipe {
    let mode = cfg.modes[index % cfg.modes.len()];
    random_recipe(&mut rng_for(cfg.seed, index), mode, cfg.max_s, cfg.max_t)
}

pub fn run(cfg: &FuzzConfig) -> FuzzReport {
    assert!(!cfg.modes.is_empty(), "at least one mode");
    let results: Vec<(ModeTag, Result<bool, Counterexample>)> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            let r = recipe_at(cfg, i);
            let res = evaluate(&r, cfg.fault).map_err(|message| Counterexample {
                index: i,
                mode: r.mode,
                message,
                reproducer: minimize(&r, cfg.fault).to_file(),
            });
            (r.mode, res)
        })
        .collect();
    let mut modes: BTreeMap<ModeTag, ModeStats> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (mode, res) in results {
        let st = modes.entry(mode).or_default();
        st.instances += 1;
        match res {
            Ok(true) => st.feasible += 1,
            Ok(false) => st.infeasible += 1,
            Err(c) => counterexamples.push(c),
        }
    }
    FuzzReport {
        seed: cfg.seed,
        count: cfg.count,
        modes,
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let cfg = FuzzConfig {
            seed: 11,
            count: 70,
            ..FuzzConfig::default()
        };
        let a = run(&cfg);
        assert!(a.clean(), "{:#?}", a.counterexamples);
        assert_eq!(a, run(&cfg));
    }

    #[test]
    fn injected_fault_is_caught_and_minimized() {
        let cfg = FuzzConfig {
            seed: 5,
            count: 6,
            modes: vec![ModeTag::Msmt],
            fault: true,
            ..FuzzConfig::default()
        };
        let report = run(&cfg);
        assert_eq!(report.counterexamples.len(), 6);
        for c in &report.counterexamples {
            assert_eq!(c.reproducer.s.len(), 1);
            assert_eq!(c.reproducer.t.len(), 1);
        }
    }
}
