//! The acceptance suite: eight property checks over seeded random and
//! exhaustive instance families. Witnesses and certificates are re-checked
//! by evaluators in this module that recompute everything from the raw
//! instance data rather than reusing the checkers' tables.

use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bigraph::{Bigraph, DegreeSpec, Edge, Grounds};
use crate::cover::{self, find_matching_covering_bases, first_fitting, Route, Solution};
use crate::error::Error;
use crate::feasibility::{self, Condition, Degrees, Instance, Verdict, ViolationCert};
use crate::gen::{matroid_of_rank, random_matroid, random_recipe};
use crate::io::ModeTag;
use crate::mask::{self, Mask};
use crate::matroid::Matroid;
use crate::setfun::{build_p0, build_p1, classify_supermodular, vs_set, Mode, SetFunctionTable};

/// Sizes of the random families.
#[derive(Debug, Clone)]
pub struct Scale {
    pub seed: u64,
    /// Random instances for the main equivalence.
    pub instances: usize,
    /// Random `(G⁺, M_S, M_T)` triples.
    pub brualdi: usize,
    /// Random 4×4 instances on top of the exhaustive small-shape sweep.
    pub ore_random: usize,
    /// Random instances per reduction-lattice family.
    pub lattice: usize,
    /// Largest side for the exhaustive Ryser prefix sweep.
    pub prefix_side: usize,
    /// Random term-rank instances solved end to end.
    pub solved: usize,
}

impl Default for Scale {
    fn default() -> Self {
        Scale {
            seed: 2024,
            instances: 1000,
            brualdi: 500,
            ore_random: 1000,
            lattice: 600,
            prefix_side: 6,
            solved: 400,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// First few failure descriptions.
    pub samples: Vec<String>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {}/{} agree",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.checked - self.failed,
            self.checked
        )
    }
}

/// Thread-safe tally for one criterion.
struct Tally {
    checked: usize,
    failed: usize,
    samples: Vec<String>,
}

struct Counter(Mutex<Tally>);

impl Counter {
    fn new() -> Self {
        Counter(Mutex::new(Tally {
            checked: 0,
            failed: 0,
            samples: Vec::new(),
        }))
    }

    fn record(&self, outcome: Result<(), String>) {
        let mut t = self.0.lock().unwrap();
        t.checked += 1;
        if let Err(e) = outcome {
            t.failed += 1;
            if t.samples.len() < 5 {
                t.samples.push(e);
            }
        }
    }

    fn finish(self, id: u8, title: &'static str) -> CriterionResult {
        let t = self.0.into_inner().unwrap();
        CriterionResult {
            id,
            title,
            checked: t.checked,
            failed: t.failed,
            samples: t.samples,
        }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn same(what: &str, a: bool, b: bool) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a} vs {b}"))
    }
}

/// Ore-style failure of `𝒢(m_S, m_T)` counts as an infeasible verdict.
fn verdict(r: crate::Result<Verdict>) -> Result<(bool, Option<ViolationCert>), String> {
    match r {
        Ok(v) => Ok((v.passed(), v.violation)),
        Err(Error::NoSimpleRealization(c)) => Ok((false, Some(*c))),
        Err(e) => Err(e.to_string()),
    }
}

/// Raw instance data a certificate or witness is judged against.
pub struct Context<'a> {
    pub grounds: &'a Grounds,
    /// `H₀`, or `G⁺` for matching-only questions.
    pub h0: &'a Bigraph,
    pub m_s: &'a [u32],
    pub m_t: Option<&'a [u32]>,
    pub ms: Option<&'a Matroid>,
    pub mt: Option<&'a Matroid>,
    pub pt: Option<&'a SetFunctionTable>,
    pub ell: usize,
}

impl<'a> Context<'a> {
    pub fn of(inst: &'a Instance) -> Self {
        let m_t = match inst.degrees() {
            Degrees::Full(m) => Some(m.m_t()),
            Degrees::SOnly(_) => None,
        };
        Context {
            grounds: inst.grounds(),
            h0: inst.h0(),
            m_s: inst.m_s(),
            m_t,
            ms: Some(inst.ms()),
            mt: inst.mt(),
            pt: Some(inst.pt()),
            ell: inst.ell().unwrap_or(0),
        }
    }

    fn sum_s(&self, x: Mask) -> i64 {
        mask::bits(x).map(|i| self.m_s[i] as i64).sum()
    }

    fn sum_t(&self, y: Mask) -> Result<i64, String> {
        let m_t = self.m_t.ok_or("no T-degrees")?;
        Ok(mask::bits(y).map(|i| m_t[i] as i64).sum())
    }

    fn gamma(&self) -> i64 {
        self.m_s.iter().map(|&d| d as i64).sum()
    }

    /// Pairs in `X × Y` that are not edges of `H₀`.
    fn d_g0(&self, x: Mask, y: Mask) -> i64 {
        let mut n = 0;
        for s in mask::bits(x) {
            for t in mask::bits(y) {
                if !self.h0.edges().contains(&(s, t)) {
                    n += 1;
                }
            }
        }
        n
    }

    /// `S`-neighbours of `Z` in `H₀`, read from the edge list.
    fn gamma_h0(&self, z: Mask) -> Mask {
        self.h0
            .edges()
            .iter()
            .filter(|&&(_, t)| z >> t & 1 == 1)
            .fold(0, |acc, &(s, _)| acc | 1 << s)
    }

    /// `X′ ∪ Y′` meets every edge of `H₀`.
    fn covers_h0(&self, xp: Mask, yp: Mask) -> bool {
        self.h0
            .edges()
            .iter()
            .all(|&(s, t)| xp >> s & 1 == 1 || yp >> t & 1 == 1)
    }

    fn rs(&self, x: Mask) -> Result<i64, String> {
        Ok(self.ms.ok_or("no M_S")?.rank(x))
    }

    fn rt(&self, y: Mask) -> Result<i64, String> {
        Ok(self.mt.ok_or("no M_T")?.rank(y))
    }

    fn pt(&self, y: Mask) -> Result<i64, String> {
        Ok(self.pt.ok_or("no p_T")?.get(y))
    }

    fn check_parts(&self, cert: &ViolationCert, within: Mask) -> Result<(), String> {
        let mut seen = 0;
        for &p in &cert.parts {
            if p == 0 || p & seen != 0 || !mask::is_subset(p, within) {
                return Err(format!("bad subpartition {:?}", cert.parts));
            }
            seen |= p;
        }
        Ok(())
    }

    fn sups(&self, cert: &ViolationCert) -> Result<(Mask, Mask), String> {
        let xp = cert.x_sup.ok_or("missing X′")?;
        let yp = cert.y_sup.ok_or("missing Y′")?;
        if !mask::is_subset(cert.x, xp) || !mask::is_subset(cert.y, yp) {
            return Err("X ⊄ X′ or Y ⊄ Y′".into());
        }
        if !self.covers_h0(xp, yp) {
            return Err("X′ ∪ Y′ misses an edge".into());
        }
        Ok((xp, yp))
    }

    /// Left-hand side and bound of the certificate's inequality, recomputed.
    pub fn recompute(&self, cert: &ViolationCert) -> Result<(i64, i64), String> {
        let (x, y) = (cert.x, cert.y);
        let full_t = self.grounds.full_t();
        let ell = self.ell as i64;
        let ore =
            || -> Result<i64, String> { Ok(self.sum_s(x) + self.sum_t(y)? - self.d_g0(x, y)) };
        let ore0 = || -> Result<i64, String> {
            Ok(self.sum_s(x) + self.sum_t(y)? - mask::card(x) * mask::card(y))
        };
        let part_sum = || -> Result<i64, String> {
            let mut total = 0;
            for &z in &cert.parts {
                total += self.pt(z)? - self.rs(x | self.gamma_h0(z))?;
            }
            Ok(total)
        };
        let gamma = self.gamma();
        Ok(match cert.which {
            Condition::Ore => (ore()?, gamma),
            Condition::OreComplete => (ore0()?, gamma),
            Condition::Ftgs => {
                self.check_parts(cert, full_t & !y)?;
                (ore()? + part_sum()?, gamma)
            }
            Condition::DegreeBoundS => {
                let s = x.trailing_zeros() as usize;
                let d = self.h0.edges().iter().filter(|e| e.0 == s).count() as i64;
                (self.m_s[s] as i64 + d, self.grounds.t_len() as i64)
            }
            Condition::MsNov => {
                self.check_parts(cert, full_t)?;
                (self.sum_s(x) + part_sum()?, gamma)
            }
            Condition::FtgsFully => {
                if cert.parts.len() > 1 {
                    return Err("more than one part".into());
                }
                self.check_parts(cert, full_t & !y)?;
                let t0 = cert.parts.first().copied().unwrap_or(0);
                (
                    ore()? + self.pt(t0)? - self.rs(x | self.gamma_h0(t0))?,
                    gamma,
                )
            }
            Condition::CsakMatroidMon => (ore0()? + self.pt(full_t & !y)? - self.rs(x)?, gamma),
            Condition::Ryser => (ore0()? + ell - mask::card(x) - mask::card(y), gamma),
            Condition::Brualdi => {
                let (xp, yp) = self.sups(cert)?;
                (ell - self.rs(xp)? - self.rt(yp)?, 0)
            }
            Condition::RyserGen => {
                let (xp, yp) = self.sups(cert)?;
                (ore()? + ell - self.rs(xp)? - self.rt(yp)?, gamma)
            }
            Condition::RyserMatroid => (ore0()? + ell - self.rs(x)? - self.rt(y)?, gamma),
            Condition::Integrated => (ore0()? + (ell - self.rs(x)? - self.rt(y)?).max(0), gamma),
            Condition::RyserNovel => {
                let (xp, yp) = self.sups(cert)?;
                (ore()? + ell - mask::card(xp) - mask::card(yp), gamma)
            }
            Condition::EmptyDemand => (self.pt(0)?, 0),
        })
    }

    /// The certificate's stored numbers match a from-scratch evaluation and
    /// show a strict violation.
    pub fn certificate_holds(&self, cert: &ViolationCert) -> Result<(), String> {
        let (lhs, rhs) = self.recompute(cert)?;
        if lhs != cert.lhs || rhs != cert.rhs {
            return Err(format!(
                "{:?}: stored {} > {}, recomputed {lhs} > {rhs}",
                cert.which, cert.lhs, cert.rhs
            ));
        }
        if lhs <= rhs {
            return Err(format!("{:?}: {lhs} ≤ {rhs}", cert.which));
        }
        Ok(())
    }

    /// `g` fits the degrees exactly, avoids `H₀`, has no repeated edge, and
    /// (when `p_T` is given) `g + H₀` `M_S`-covers it.
    pub fn graph_holds(&self, g: &Bigraph) -> Result<(), String> {
        let edges = g.edges();
        for (i, e) in edges.iter().enumerate() {
            if edges[..i].contains(e) {
                return Err(format!("repeated edge {e:?}"));
            }
            if self.h0.edges().contains(e) {
                return Err(format!("edge {e:?} is already present"));
            }
        }
        for s in 0..self.grounds.s_len() {
            let d = edges.iter().filter(|e| e.0 == s).count();
            if d != self.m_s[s] as usize {
                return Err(format!("S-node {s} has degree {d}"));
            }
        }
        if let Some(m_t) = self.m_t {
            for (t, &want) in m_t.iter().enumerate() {
                let d = edges.iter().filter(|e| e.1 == t).count();
                if d != want as usize {
                    return Err(format!("T-node {t} has degree {d}"));
                }
            }
        }
        if let (Some(pt), Some(ms)) = (self.pt, self.ms) {
            let all: Vec<Edge> = edges.iter().chain(self.h0.edges()).copied().collect();
            for y in 0..=self.grounds.full_t() {
                let nb = all
                    .iter()
                    .filter(|&&(_, t)| y >> t & 1 == 1)
                    .fold(0, |acc, &(s, _)| acc | 1 << s);
                if ms.rank(nb) < pt.get(y) {
                    return Err(format!("T-set {y:#b} is not covered"));
                }
            }
        }
        Ok(())
    }

    /// `matching` is an `ℓ`-matching of `g + H₀` whose ends are bases.
    pub fn matching_holds(&self, g: &Bigraph, matching: &[Edge]) -> Result<(), String> {
        let (ms, mt) = (self.ms.ok_or("no M_S")?, self.mt.ok_or("no M_T")?);
        if matching.len() != self.ell {
            return Err(format!("{} edges, want {}", matching.len(), self.ell));
        }
        let (mut a, mut b): (Mask, Mask) = (0, 0);
        for &(s, t) in matching {
            if !g.edges().contains(&(s, t)) && !self.h0.edges().contains(&(s, t)) {
                return Err(format!("({s}, {t}) is not an edge"));
            }
            if a >> s & 1 == 1 || b >> t & 1 == 1 {
                return Err("shared endpoint".into());
            }
            a |= 1 << s;
            b |= 1 << t;
        }
        if ms.rank(a) != self.ell as i64 || mt.rank(b) != self.ell as i64 {
            return Err("endpoints are not bases".into());
        }
        Ok(())
    }
}

/// Existence of a subgraph of the complement of `h0` with the given degrees,
/// by scanning every edge subset.
pub fn exists_subgraph_by_subsets(h0: &Bigraph, m: &DegreeSpec) -> bool {
    let g = h0.grounds();
    let free: Vec<Edge> = (0..g.s_len())
        .flat_map(|s| (0..g.t_len()).map(move |t| (s, t)))
        .filter(|&(s, t)| !h0.has_edge(s, t))
        .collect();
    let gamma = m.gamma() as u32;
    if gamma as usize > free.len() {
        return false;
    }
    let mut ds = vec![0u32; g.s_len()];
    let mut dt = vec![0u32; g.t_len()];
    (0u32..1 << free.len())
        .filter(|c| c.count_ones() == gamma)
        .any(|chosen| {
            ds.fill(0);
            dt.fill(0);
            for (i, &(s, t)) in free.iter().enumerate() {
                if chosen >> i & 1 == 1 {
                    ds[s] += 1;
                    dt[t] += 1;
                }
            }
            ds == m.m_s() && dt == m.m_t()
        })
}

/// Existence of an `ℓ`-matching covering bases, by scanning edge subsets.
pub fn exists_basis_matching_by_subsets(gplus: &Bigraph, ms: &Matroid, mt: &Matroid) -> bool {
    let ell = ms.full_rank();
    let edges = gplus.edges();
    (0u32..1 << edges.len())
        .filter(|c| c.count_ones() as usize == ell)
        .any(|chosen| {
            let (mut a, mut b): (Mask, Mask) = (0, 0);
            for (i, &(s, t)) in edges.iter().enumerate() {
                if chosen >> i & 1 == 1 {
                    if a >> s & 1 == 1 || b >> t & 1 == 1 {
                        return false;
                    }
                    a |= 1 << s;
                    b |= 1 << t;
                }
            }
            ms.rank(a) == ell as i64 && mt.rank(b) == ell as i64
        })
}

/// Shared sinks for criteria 7 and 8.
struct Sinks {
    witnesses: Counter,
    certificates: Counter,
}

impl Sinks {
    fn cert(&self, ctx: &Context<'_>, cert: Option<&ViolationCert>) {
        if let Some(c) = cert {
            self.certificates.record(ctx.certificate_holds(c));
        }
    }

    fn graph(&self, ctx: &Context<'_>, g: Option<&Bigraph>) {
        if let Some(g) = g {
            self.witnesses.record(ctx.graph_holds(g));
        }
    }
}

fn criterion_main(scale: &Scale, sinks: &Sinks) -> [CriterionResult; 3] {
    let c1 = Counter::new();
    let c2 = Counter::new();
    let c3 = Counter::new();
    (0..scale.instances).into_par_iter().for_each(|i| {
        let r = random_recipe(&mut rng_for(scale.seed, i as u64), ModeTag::Msmt, 4, 4);
        let inst = match r.instance() {
            Ok(inst) => inst,
            Err(e) => {
                c1.record(Err(format!("generator produced an invalid instance: {e}")));
                return;
            }
        };
        let ctx = Context::of(&inst);
        let m = inst.full_degrees().expect("full degrees");
        let (check, cert) = match verdict(feasibility::check_msmt(&inst)) {
            Ok(v) => v,
            Err(e) => {
                c1.record(Err(e));
                return;
            }
        };
        sinks.cert(&ctx, cert.as_ref());
        let brute = cover::construct_brute(&inst);
        sinks.graph(&ctx, brute.as_ref());
        let route = cover::cover_route(&inst);
        let via = cover::construct_via_cover(&inst);
        if let Ok(g) = &via {
            sinks.graph(&ctx, Some(g));
        }
        c1.record((|| {
            let route = route.map_err(|e| e.to_string())?;
            if let Some(out) = &route {
                sinks.graph(&ctx, Some(&out.graph));
            }
            same("check_msmt vs construct_brute", check, brute.is_some())?;
            same("check_msmt vs cover route", check, route.is_some())?;
            match (&via, check) {
                (Ok(_), true) | (Err(Error::Infeasible(_)), false) => Ok(()),
                (other, _) => Err(format!("construct_via_cover: {other:?}")),
            }
        })());

        // supermodularity of the auxiliary functions
        let g = inst.grounds();
        let p0 = build_p0(inst.h0(), m, inst.pt(), inst.ms()).expect("valid instance");
        c3.record(
            match classify_supermodular(&p0, Mode::TIntersecting(g), true) {
                Ok(None) => Ok(()),
                other => Err(format!("p₀ classification: {other:?}")),
            },
        );
        let overloaded = (0..g.s_len()).any(|s| p0.get(vs_set(inst.h0(), s)) > m.m_s()[s] as i64);
        let p1 = match build_p1(&p0, inst.h0(), m) {
            Ok(p1) => p1,
            Err(e) => {
                c3.record(Err(e.to_string()));
                return;
            }
        };
        let p1_ok = matches!(
            classify_supermodular(&p1, Mode::StCrossing(g), true),
            Ok(None)
        );
        if check {
            c3.record(if p1_ok && !overloaded {
                Ok(())
            } else {
                Err("p₁ of a feasible instance is not positively ST-crossing supermodular".into())
            });
        }

        // min-max on p₁ wherever its preconditions hold
        if !p1_ok || overloaded {
            return;
        }
        c2.record((|| match cover::min_arc_cover(&p1, g) {
            Ok((cover_, dual)) => {
                if !cover_.covers(&p1, g) {
                    return Err("returned arcs do not cover p₁".into());
                }
                let independent = dual.sets.iter().enumerate().all(|(i, &a)| {
                    dual.sets[i + 1..].iter().all(|&b| {
                        let (xa, ya) = g.split(a);
                        let (xb, yb) = g.split(b);
                        ya & yb == 0 || xa | xb == g.full_s()
                    })
                });
                let value: i64 = dual.sets.iter().map(|&v| p1.get(v)).sum();
                if !independent || value != dual.value {
                    return Err("dual family is not a valid ST-independent family".into());
                }
                if cover_.len() as i64 != dual.value {
                    return Err(format!("cover {} vs dual {}", cover_.len(), dual.value));
                }
                if check && dual.value != m.gamma() {
                    return Err(format!(
                        "feasible but ν = {} ≠ γ = {}",
                        dual.value,
                        m.gamma()
                    ));
                }
                Ok(())
            }
            Err(Error::UnboundedDemand(_)) if !check => Ok(()),
            Err(e) => Err(e.to_string()),
        })());
    });
    [
        c1.finish(1, "check_msmt ⟺ brute force ⟺ cover construction"),
        c2.finish(2, "min arc cover = max ST-independent family on p₁"),
        c3.finish(3, "p₀ / p₁ supermodularity classes"),
    ]
}

fn all_degree_specs(ns: usize, nt: usize, max: u32) -> Vec<DegreeSpec> {
    fn vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=max).map(move |d| {
                        let mut w = v.clone();
                        w.push(d);
                        w
                    })
                })
                .collect();
        }
        out
    }
    let ts = vectors(nt, max);
    vectors(ns, max)
        .into_iter()
        .flat_map(|a| {
            let total: u32 = a.iter().sum();
            ts.iter()
                .filter(move |b| b.iter().sum::<u32>() == total)
                .map(move |b| DegreeSpec::new(a.clone(), b.clone()).expect("equal totals"))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn ore_case(h0: &Bigraph, m: &DegreeSpec, sinks: &Sinks) -> Result<(), String> {
    let g0 = crate::bigraph::bipartite_complement(h0).map_err(|e| e.to_string())?;
    let v = feasibility::check_ore(&g0, m).map_err(|e| e.to_string())?;
    let g = h0.grounds();
    let zero = SetFunctionTable::zero(g.t_names().to_vec());
    let ctx = Context {
        grounds: g,
        h0,
        m_s: m.m_s(),
        m_t: Some(m.m_t()),
        ms: None,
        mt: None,
        pt: Some(&zero),
        ell: 0,
    };
    sinks.cert(&ctx, v.violation.as_ref());
    let witness = first_fitting(&g0, m.m_s(), Some(m.m_t()), |_| true);
    sinks.graph(&ctx, witness.as_ref());
    let exists = exists_subgraph_by_subsets(h0, m);
    same("check_ore vs subset scan", v.passed(), exists)?;
    same("subgraph search vs subset scan", witness.is_some(), exists)
}

fn criterion_ore(scale: &Scale, sinks: &Sinks) -> CriterionResult {
    let c = Counter::new();
    // every H₀ and every degree spec with entries ≤ 4 on shapes with |S||T| ≤ 9
    let shapes: Vec<(usize, usize)> = (1..=4)
        .flat_map(|a| (1..=4).map(move |b| (a, b)))
        .filter(|&(a, b)| a * b <= 9)
        .collect();
    for (ns, nt) in shapes {
        let g = Grounds::numbered(ns, nt).expect("small");
        let specs = all_degree_specs(ns, nt, 4);
        let pairs: Vec<(usize, usize)> =
            (0..ns).flat_map(|s| (0..nt).map(move |t| (s, t))).collect();
        (0u32..1 << pairs.len()).into_par_iter().for_each(|hm| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| hm >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let h0 = Bigraph::new(g.clone(), edges).expect("in range");
            for m in &specs {
                c.record(ore_case(&h0, m, sinks));
            }
        });
    }
    // random 4×4 instances
    (0..scale.ore_random).into_par_iter().for_each(|i| {
        let mut rng = rng_for(scale.seed ^ 0x04e, i as u64);
        let g = Grounds::numbered(4, 4).expect("small");
        let density = *[0.0, 0.25, 0.5].choose(&mut rng).unwrap();
        let mut edges = Vec::new();
        for s in 0..4 {
            for t in 0..4 {
                if rng.gen_bool(density) {
                    edges.push((s, t));
                }
            }
        }
        let m_s: Vec<u32> = (0..4).map(|_| rng.gen_range(0..=4)).collect();
        let total: u32 = m_s.iter().sum();
        let mut m_t = vec![0u32; 4];
        for _ in 0..total {
            let open: Vec<usize> = (0..4).filter(|&t| m_t[t] < 4).collect();
            m_t[*open.choose(&mut rng).unwrap()] += 1;
        }
        let h0 = Bigraph::new(g, edges).expect("in range");
        let m = DegreeSpec::new(m_s, m_t).expect("equal totals");
        c.record(ore_case(&h0, &m, sinks));
    });
    c.finish(4, "check_ore ⟺ subgraph existence")
}

fn criterion_brualdi(scale: &Scale, sinks: &Sinks) -> CriterionResult {
    let c = Counter::new();
    (0..scale.brualdi).into_par_iter().for_each(|i| {
        let mut rng = rng_for(scale.seed ^ 0xb2, i as u64);
        let ns = rng.gen_range(1..=4);
        let nt = rng.gen_range(1..=4);
        let g = Grounds::numbered(ns, nt).expect("small");
        let mut pairs: Vec<Edge> = (0..ns).flat_map(|s| (0..nt).map(move |t| (s, t))).collect();
        pairs.shuffle(&mut rng);
        let keep = rng.gen_range(0..=pairs.len().min(12));
        let gplus = Bigraph::new(g.clone(), pairs[..keep].to_vec()).expect("in range");
        let ell = rng.gen_range(0..=ns.min(nt).min(3));
        let ms = matroid_of_rank(&mut rng, g.s_names().to_vec(), ell);
        let mt = matroid_of_rank(&mut rng, g.t_names().to_vec(), ell);
        let ctx = Context {
            grounds: &g,
            h0: &gplus,
            m_s: &vec![0; ns],
            m_t: None,
            ms: Some(&ms),
            mt: Some(&mt),
            pt: None,
            ell,
        };
        c.record((|| {
            let cover_form = feasibility::brualdi_cover_form(&gplus, &ms, &mt, ell);
            let neighbour_form = feasibility::brualdi_neighbour_form(&gplus, &ms, &mt);
            let v = feasibility::check_brualdi(&gplus, &ms, &mt).map_err(|e| e.to_string())?;
            sinks.cert(&ctx, v.violation.as_ref());
            let found =
                find_matching_covering_bases(&gplus, &ms, &mt).map_err(|e| e.to_string())?;
            if let Some(mm) = &found {
                sinks
                    .witnesses
                    .record(ctx.matching_holds(&Bigraph::empty(g.clone()), mm));
            }
            let truth = exists_basis_matching_by_subsets(&gplus, &ms, &mt);
            same(
                "cover form vs neighbourhood form",
                !cover_form.violated(),
                neighbour_form.is_none(),
            )?;
            same("cover form vs matching scan", !cover_form.violated(), truth)?;
            same("matching search vs matching scan", found.is_some(), truth)
        })());
    });
    c.finish(5, "vertex-cover form ⟺ neighbourhood form ⟺ basis matching")
}

fn criterion_lattice(scale: &Scale, sinks: &Sinks) -> CriterionResult {
    let c = Counter::new();
    // fully supermodular p_T
    (0..scale.lattice).into_par_iter().for_each(|i| {
        let r = random_recipe(
            &mut rng_for(scale.seed ^ 0xf0, i as u64),
            ModeTag::Fully,
            4,
            4,
        );
        let Ok(inst) = r.instance() else {
            c.record(Err("invalid fully instance".into()));
            return;
        };
        let ctx = Context::of(&inst);
        c.record((|| {
            let (a, ca) = verdict(feasibility::check_fully(&inst))?;
            let (b, cb) = verdict(feasibility::check_msmt(&inst))?;
            sinks.cert(&ctx, ca.as_ref());
            sinks.cert(&ctx, cb.as_ref());
            same("check_fully vs check_msmt", a, b)?;
            // H₀ empty and monotone p_T: the single-set form with T₀ = T − Y
            if inst.h0().edge_count() == 0 && inst.pt().is_monotone() {
                let m = inst.full_degrees().map_err(|e| e.to_string())?;
                let (d, cd) = verdict(feasibility::check_csak_matroid_mon(
                    inst.grounds(),
                    m,
                    inst.ms(),
                    inst.pt(),
                ))?;
                sinks.cert(&ctx, cd.as_ref());
                same("check_fully vs T₀ = T − Y form", a, d)?;
            }
            Ok(())
        })());
    });
    // matroids of rank ℓ with H₀ empty, and uniform matroids with any H₀
    (0..scale.lattice).into_par_iter().for_each(|i| {
        let mut rng = rng_for(scale.seed ^ 0x9e, i as u64);
        let mut r = random_recipe(&mut rng, ModeTag::RyserGen, 4, 4);
        r.h0.clear();
        let Ok(inst) = r.instance() else {
            c.record(Err("invalid term-rank instance".into()));
            return;
        };
        let ctx = Context::of(&inst);
        let g = inst.grounds();
        let m = inst.full_degrees().expect("full");
        let mt = inst.mt().expect("M_T");
        c.record((|| {
            let (a, ca) = verdict(feasibility::check_ryser_gen(&inst))?;
            let (b, cb) = verdict(feasibility::check_ryser_matroid(g, m, inst.ms(), mt))?;
            let (d, cd) = verdict(feasibility::check_integrated(g, m, inst.ms(), mt))?;
            for cert in [&ca, &cb, &cd] {
                sinks.cert(&ctx, cert.as_ref());
            }
            same("check_ryser_gen (H₀ = ∅) vs matroid form", a, b)?;
            same("matroid form vs integrated form", b, d)
        })());
    });
    (0..scale.lattice).into_par_iter().for_each(|i| {
        let mut rng = rng_for(scale.seed ^ 0x07, i as u64);
        let r = random_recipe(&mut rng, ModeTag::Ryser, 4, 4);
        let Ok(inst) = r.instance() else {
            c.record(Err("invalid uniform instance".into()));
            return;
        };
        let ctx = Context::of(&inst);
        let m = inst.full_degrees().expect("full");
        let ell = inst.ell().expect("ell");
        c.record((|| {
            let (a, ca) = verdict(feasibility::check_ryser_gen(&inst))?;
            let (b, cb) = verdict(feasibility::check_ryser_novel(inst.h0(), m, ell))?;
            sinks.cert(&ctx, ca.as_ref());
            sinks.cert(&ctx, cb.as_ref());
            same("uniform check_ryser_gen vs uniform specialisation", a, b)?;
            if inst.h0().edge_count() == 0 {
                let (d, cd) = verdict(feasibility::check_ryser(inst.grounds(), m, ell))?;
                sinks.cert(&ctx, cd.as_ref());
                same("uniform specialisation vs classic Ryser", b, d)?;
            }
            Ok(())
        })());
    });
    // sorted-prefix Ryser against the full scan on every degree spec
    let side = scale.prefix_side;
    let shapes: Vec<(usize, usize)> = (1..=side)
        .flat_map(|a| (1..=side).map(move |b| (a, b)))
        .collect();
    shapes.into_par_iter().for_each(|(ns, nt)| {
        let g = Grounds::numbered(ns, nt).expect("small");
        let mut rng = rng_for(scale.seed ^ 0x5e, (ns * 16 + nt) as u64);
        let sides_s = non_increasing(ns, nt as u32);
        let sides_t = non_increasing(nt, ns as u32);
        for a in &sides_s {
            let total: u32 = a.iter().sum();
            for b in sides_t.iter().filter(|b| b.iter().sum::<u32>() == total) {
                let (mut a, mut b) = (a.clone(), b.clone());
                a.shuffle(&mut rng);
                b.shuffle(&mut rng);
                let m = DegreeSpec::new(a, b).expect("equal totals");
                for ell in 0..=nt {
                    let full = feasibility::ryser_full(&g, &m, ell);
                    let prefix = feasibility::ryser_prefix(&g, &m, ell);
                    c.record(if full.max_lhs == prefix.max_lhs {
                        Ok(())
                    } else {
                        Err(format!(
                            "{:?}/{:?} ℓ={ell}: full {} vs prefix {}",
                            m.m_s(),
                            m.m_t(),
                            full.max_lhs,
                            prefix.max_lhs
                        ))
                    });
                }
            }
        }
    });
    c.finish(6, "reduction lattice and Ryser prefix reduction")
}

fn non_increasing(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=cap {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

fn solve_witnesses(scale: &Scale, sinks: &Sinks) {
    (0..scale.solved).into_par_iter().for_each(|i| {
        let mut rng = rng_for(scale.seed ^ 0x50, i as u64);
        let mode = if i % 2 == 0 {
            ModeTag::RyserGen
        } else {
            ModeTag::MsOnly
        };
        let r = random_recipe(&mut rng, mode, 4, 4);
        let Ok(inst) = r.instance() else {
            sinks.witnesses.record(Err("invalid instance".into()));
            return;
        };
        let ctx = Context::of(&inst);
        if mode == ModeTag::MsOnly {
            let v = feasibility::check_ms_only(&inst);
            if let Ok(v) = &v {
                sinks.cert(&ctx, v.violation.as_ref());
            }
            sinks.graph(&ctx, cover::construct_brute(&inst).as_ref());
            return;
        }
        for route in [Route::Cover, Route::Brute, Route::Both] {
            match cover::solve_term_rank(&inst, route) {
                Ok(Solution::Solved(s)) => {
                    sinks.witnesses.record(
                        ctx.graph_holds(&s.graph)
                            .and_then(|_| ctx.matching_holds(&s.graph, &s.matching)),
                    );
                }
                Ok(Solution::Infeasible(c)) => sinks.cert(&ctx, Some(&c)),
                Err(e) => sinks.witnesses.record(Err(e.to_string())),
            }
        }
    });
}

/// Runs all eight criteria.
pub fn run(scale: &Scale) -> Vec<CriterionResult> {
    let sinks = Sinks {
        witnesses: Counter::new(),
        certificates: Counter::new(),
    };
    let [c1, c2, c3] = criterion_main(scale, &sinks);
    let c4 = criterion_ore(scale, &sinks);
    let c5 = criterion_brualdi(scale, &sinks);
    let c6 = criterion_lattice(scale, &sinks);
    solve_witnesses(scale, &sinks);
    let c7 = sinks.witnesses.finish(
        7,
        "witness graphs and matchings pass independent validation",
    );
    let c8 = sinks
        .certificates
        .finish(8, "certificates recompute to a strict violation");
    vec![c1, c2, c3, c4, c5, c6, c7, c8]
}

/// A matroid drawn the way the generator draws them, for callers that want
/// extra families.
pub fn sample_matroid(seed: u64, names: Vec<String>) -> Matroid {
    random_matroid(&mut rng_for(seed, 0), names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ryser_instance() -> Instance {
        let g = Grounds::numbered(2, 2).unwrap();
        let m = DegreeSpec::new(vec![2, 0], vec![1, 1]).unwrap();
        let ms = Matroid::uniform(g.s_names().to_vec(), 2).unwrap();
        let mt = Matroid::uniform(g.t_names().to_vec(), 2).unwrap();
        Instance::term_rank(Bigraph::empty(g), m, ms, mt, None).unwrap()
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let inst = ryser_instance();
        let ctx = Context::of(&inst);
        let cert = feasibility::check_ryser_gen(&inst)
            .unwrap()
            .violation
            .expect("a star has no 2-matching");
        ctx.certificate_holds(&cert).unwrap();
        let mut bumped = cert.clone();
        bumped.lhs += 1;
        assert!(ctx.certificate_holds(&bumped).is_err());
        let mut moved = cert.clone();
        moved.x ^= 0b10;
        assert!(ctx.certificate_holds(&moved).is_err());
    }

    #[test]
    fn bad_witnesses_are_rejected() {
        let g = Grounds::numbered(2, 2).unwrap();
        let m = DegreeSpec::uniform(2, 2, 1).unwrap();
        let ms = Matroid::free(g.s_names().to_vec());
        let mt = Matroid::free(g.t_names().to_vec());
        let inst = Instance::term_rank(Bigraph::empty(g.clone()), m, ms, mt, None).unwrap();
        let ctx = Context::of(&inst);
        let good = Bigraph::new(g.clone(), vec![(0, 0), (1, 1)]).unwrap();
        ctx.graph_holds(&good).unwrap();
        ctx.matching_holds(&good, &[(0, 0), (1, 1)]).unwrap();
        let star = Bigraph::new(g.clone(), vec![(0, 0), (0, 1)]).unwrap();
        assert!(ctx.graph_holds(&star).is_err());
        assert!(ctx.matching_holds(&good, &[(0, 0), (1, 0)]).is_err());
        assert!(ctx.matching_holds(&good, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn subset_scans_match_small_cases() {
        let g = Grounds::numbered(2, 2).unwrap();
        let h0 = Bigraph::new(g.clone(), vec![(0, 0)]).unwrap();
        assert!(!exists_subgraph_by_subsets(
            &h0,
            &DegreeSpec::uniform(2, 2, 2).unwrap()
        ));
        assert!(exists_subgraph_by_subsets(
            &h0,
            &DegreeSpec::uniform(2, 2, 1).unwrap()
        ));
        let ms = Matroid::uniform(g.s_names().to_vec(), 2).unwrap();
        let mt = Matroid::uniform(g.t_names().to_vec(), 2).unwrap();
        assert!(!exists_basis_matching_by_subsets(&h0, &ms, &mt));
        let full = Bigraph::complete(g);
        assert!(exists_basis_matching_by_subsets(&full, &ms, &mt));
    }

    #[test]
    fn small_scale_run_passes() {
        let scale = Scale {
            instances: 60,
            brualdi: 40,
            ore_random: 40,
            lattice: 40,
            prefix_side: 3,
            solved: 20,
            ..Scale::default()
        };
        for r in run(&scale) {
            assert!(r.passed(), "{}: {:?}", r.line(), r.samples);
        }
    }
}
