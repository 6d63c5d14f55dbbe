//! Constructive side: minimum `ST`-arc covers of a set function on `V = S ∪ T`
//! with matching dual families, bigraph construction through such a cover, a
//! brute-force constructor, and matchings that cover matroid bases.

use std::collections::{HashMap, HashSet};

use crate::bigraph::{Bigraph, DegreeSpec, Edge, Grounds};
use crate::error::{Error, Result};
use crate::feasibility::{check_msmt, check_ryser_gen, Degrees, Instance, ViolationCert};
use crate::mask::Mask;
use crate::matroid::Matroid;
use crate::setfun::{
    build_p0, build_p1, enters, require_supermodular, st_independent_pair, vs_set, Mode,
    SetFunctionTable,
};
use crate::validate;

/// A multiset of `ST`-arcs, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCover {
    pub arcs: Vec<Edge>,
}

impl ArcCover {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Number of arcs entering the `V`-mask `v`.
    pub fn in_degree(&self, v: Mask, g: &Grounds) -> i64 {
        self.arcs
            .iter()
            .filter(|&&(s, t)| enters(s, t, v, g))
            .count() as i64
    }

    /// `ρ(V′) ≥ p(V′)` for every positive set.
    pub fn covers(&self, p: &SetFunctionTable, g: &Grounds) -> bool {
        p.positive_sets()
            .into_iter()
            .all(|v| self.in_degree(v, g) >= p.get(v))
    }

    /// Underlying bigraph; may have parallel edges.
    pub fn underlying(&self, g: &Grounds) -> Bigraph {
        Bigraph::new(g.clone(), self.arcs.clone()).expect("arcs are in range")
    }
}

/// Pairwise `ST`-independent sets with positive `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualFamily {
    pub sets: Vec<Mask>,
    pub value: i64,
}

fn all_arcs(g: &Grounds) -> Vec<Edge> {
    (0..g.s_len())
        .flat_map(|s| (0..g.t_len()).map(move |t| (s, t)))
        .collect()
}

fn check_on_v(p: &SetFunctionTable, g: &Grounds) -> Result<()> {
    if p.ground() != g.v_names().as_slice() {
        return Err(Error::GroundMismatch("p must be defined on S ∪ T".into()));
    }
    Ok(())
}

/// Positive sets with no entering `ST`-arc make a cover impossible.
fn check_bounded(p: &SetFunctionTable, g: &Grounds) -> Result<()> {
    let arcs = all_arcs(g);
    for v in p.positive_sets() {
        if !arcs.iter().any(|&(s, t)| enters(s, t, v, g)) {
            return Err(Error::UnboundedDemand(v));
        }
    }
    Ok(())
}

struct CoverSearch<'a> {
    g: &'a Grounds,
    arcs: Vec<Edge>,
    // positive sets and their demands
    sets: Vec<Mask>,
    // arc index -> indices of positive sets it enters
    enters: Vec<Vec<usize>>,
    // set index -> arcs entering it
    entered_by: Vec<Vec<usize>>,
    best: Vec<u8>,
    best_size: usize,
    seen: HashSet<Vec<u8>>,
}

impl CoverSearch<'_> {
    fn independent(&self, a: usize, b: usize) -> bool {
        st_independent_pair(self.sets[a], self.sets[b], self.g)
    }

    /// Sum of deficiencies over a greedily packed `ST`-independent family.
    /// No arc enters two members, so this many more arcs are needed.
    fn lower_bound(&self, deficit: &[i64]) -> usize {
        let mut order: Vec<usize> = (0..deficit.len()).filter(|&i| deficit[i] > 0).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(deficit[i]), i));
        let mut picked: Vec<usize> = Vec::new();
        let mut total = 0;
        for i in order {
            if picked.iter().all(|&j| self.independent(i, j)) {
                picked.push(i);
                total += deficit[i] as usize;
            }
        }
        total
    }

    fn live_count(&self, arc: usize, deficit: &[i64]) -> usize {
        self.enters[arc].iter().filter(|&&i| deficit[i] > 0).count()
    }

    fn greedy(&self, deficit: &mut [i64]) -> Vec<u8> {
        let mut counts = vec![0u8; self.arcs.len()];
        while deficit.iter().any(|&d| d > 0) {
            let a = (0..self.arcs.len())
                .max_by_key(|&a| (self.live_count(a, deficit), std::cmp::Reverse(a)))
                .expect("some arc");
            counts[a] += 1;
            for &i in &self.enters[a] {
                deficit[i] -= 1;
            }
        }
        counts
    }

    fn dfs(&mut self, counts: &mut Vec<u8>, deficit: &mut Vec<i64>, size: usize) {
        let target = (0..deficit.len())
            .filter(|&i| deficit[i] > 0)
            .min_by_key(|&i| (self.entered_by[i].len(), std::cmp::Reverse(deficit[i]), i));
        let Some(target) = target else {
            if size < self.best_size {
                self.best_size = size;
                self.best = counts.clone();
            }
            return;
        };
        if size + self.lower_bound(deficit) >= self.best_size {
            return;
        }
        if !self.seen.insert(counts.clone()) {
            return;
        }
        let mut choices = self.entered_by[target].clone();
        choices.sort_by_key(|&a| (std::cmp::Reverse(self.live_count(a, deficit)), a));
        for a in choices {
            counts[a] += 1;
            for &i in &self.enters[a] {
                deficit[i] -= 1;
            }
            self.dfs(counts, deficit, size + 1);
            counts[a] -= 1;
            for &i in &self.enters[a] {
                deficit[i] += 1;
            }
        }
    }
}

/// Minimum-cardinality multiset of `ST`-arcs covering `p`, by branch and bound.
pub fn minimum_cover(p: &SetFunctionTable, g: &Grounds) -> Result<ArcCover> {
    check_on_v(p, g)?;
    check_bounded(p, g)?;
    let arcs = all_arcs(g);
    let sets = p.positive_sets();
    let enters_: Vec<Vec<usize>> = arcs
        .iter()
        .map(|&(s, t)| {
            (0..sets.len())
                .filter(|&i| enters(s, t, sets[i], g))
                .collect()
        })
        .collect();
    let mut entered_by = vec![Vec::new(); sets.len()];
    for (a, list) in enters_.iter().enumerate() {
        for &i in list {
            entered_by[i].push(a);
        }
    }
    let mut deficit: Vec<i64> = sets.iter().map(|&v| p.get(v)).collect();
    let mut search = CoverSearch {
        g,
        arcs,
        sets,
        enters: enters_,
        entered_by,
        best: Vec::new(),
        best_size: usize::MAX,
        seen: HashSet::new(),
    };
    let greedy = search.greedy(&mut deficit.clone());
    search.best_size = greedy.iter().map(|&c| c as usize).sum();
    search.best = greedy;
    let mut counts = vec![0u8; search.arcs.len()];
    search.dfs(&mut counts, &mut deficit, 0);
    let arcs = search
        .arcs
        .iter()
        .zip(&search.best)
        .flat_map(|(&arc, &c)| std::iter::repeat_n(arc, c as usize))
        .collect();
    Ok(ArcCover { arcs })
}

struct DualSearch<'a> {
    g: &'a Grounds,
    sets: Vec<Mask>,
    values: Vec<i64>,
    // sets sharing a clique id are all entered by one arc
    clique: Vec<usize>,
    target: i64,
    best: DualFamily,
    memo: HashMap<Vec<u16>, i64>,
}

impl DualSearch<'_> {
    fn bound(&self, cands: &[u16]) -> i64 {
        let mut top: HashMap<usize, i64> = HashMap::new();
        for &c in cands {
            let e = top.entry(self.clique[c as usize]).or_insert(0);
            *e = (*e).max(self.values[c as usize]);
        }
        top.values().sum()
    }

    fn rec(&mut self, cands: &[u16], chosen: &mut Vec<Mask>, value: i64) {
        if self.best.value >= self.target {
            return;
        }
        if value > self.best.value {
            self.best = DualFamily {
                sets: chosen.clone(),
                value,
            };
        }
        if cands.is_empty() || value + self.bound(cands) <= self.best.value {
            return;
        }
        match self.memo.get(cands) {
            Some(&v) if v >= value => return,
            _ => {
                self.memo.insert(cands.to_vec(), value);
            }
        }
        let c = cands[0] as usize;
        let with: Vec<u16> = cands[1..]
            .iter()
            .copied()
            .filter(|&d| st_independent_pair(self.sets[c], self.sets[d as usize], self.g))
            .collect();
        chosen.push(self.sets[c]);
        self.rec(&with, chosen, value + self.values[c]);
        chosen.pop();
        self.rec(&cands[1..], chosen, value);
    }
}

/// Maximum `Σ p` over `ST`-independent families of positive sets. The search
/// stops early once `stop_at` is reached (pass a known cover size, or
/// `i64::MAX` for a full search).
pub fn maximum_dual(p: &SetFunctionTable, g: &Grounds, stop_at: i64) -> Result<DualFamily> {
    check_on_v(p, g)?;
    check_bounded(p, g)?;
    let arcs = all_arcs(g);
    let mut sets = p.positive_sets();
    sets.sort_by_key(|&v| (std::cmp::Reverse(p.get(v)), v));
    let values: Vec<i64> = sets.iter().map(|&v| p.get(v)).collect();
    let clique = sets
        .iter()
        .map(|&v| {
            arcs.iter()
                .position(|&(s, t)| enters(s, t, v, g))
                .expect("bounded")
        })
        .collect();
    let mut search = DualSearch {
        g,
        sets,
        values,
        clique,
        target: stop_at,
        best: DualFamily {
            sets: Vec::new(),
            value: 0,
        },
        memo: HashMap::new(),
    };
    let cands: Vec<u16> = (0..search.sets.len() as u16).collect();
    search.rec(&cands, &mut Vec::new(), 0);
    let mut best = search.best;
    best.sets.sort_unstable();
    Ok(best)
}

/// Minimum cover together with a dual family of equal value.
pub fn min_arc_cover(p: &SetFunctionTable, g: &Grounds) -> Result<(ArcCover, DualFamily)> {
    check_on_v(p, g)?;
    require_supermodular(p, Mode::StCrossing(g), true)?;
    let cover = minimum_cover(p, g)?;
    let dual = maximum_dual(p, g, cover.len() as i64)?;
    if dual.value != cover.len() as i64 {
        return Err(Error::MinMaxGap {
            cover: cover.len(),
            dual: dual.value,
        });
    }
    Ok((cover, dual))
}

/// Drops arcs, in order, while the rest still covers `p`.
pub fn minimalize(cover: &ArcCover, p: &SetFunctionTable, g: &Grounds) -> ArcCover {
    let mut arcs = cover.arcs.clone();
    let mut i = 0;
    while i < arcs.len() {
        let removed = arcs.remove(i);
        if !(ArcCover { arcs: arcs.clone() }).covers(p, g) {
            arcs.insert(i, removed);
            i += 1;
        }
    }
    ArcCover { arcs }
}

/// Everything the cover route produced.
#[derive(Debug, Clone)]
pub struct CoverOutcome {
    pub graph: Bigraph,
    pub cover: ArcCover,
    pub dual: DualFamily,
    /// The raw minimum cover failed a postcondition and was minimalized.
    pub minimalized: bool,
}

fn route_postconditions(inst: &Instance, graph: &Bigraph, m: &DegreeSpec) -> bool {
    validate::fits(graph, m) && validate::is_augmentation(inst, graph).is_ok()
}

/// Runs the cover construction without consulting any checker.
/// `Ok(None)` means no bigraph comes out of it: `p₀(V_s) > m_S(s)` for some
/// `s`, the minimum cover of `p₁` exceeds `γ`, or some positive set of `p₁`
/// cannot be entered at all.
pub fn cover_route(inst: &Instance) -> Result<Option<CoverOutcome>> {
    let m = match inst.degrees() {
        Degrees::Full(m) => m,
        Degrees::SOnly(_) => {
            return Err(Error::Unsupported(
                "the cover route needs degrees on both sides".into(),
            ))
        }
    };
    if inst.pt().get(0) > 0 {
        return Ok(None);
    }
    let g = inst.grounds();
    let p0 = build_p0(inst.h0(), m, inst.pt(), inst.ms())?;
    // ρ(V_s) = d_G(s) = m_S(s) in any solution, which must also cover p₀
    let overloaded = (0..g.s_len()).any(|s| p0.get(vs_set(inst.h0(), s)) > m.m_s()[s] as i64);
    if overloaded {
        return Ok(None);
    }
    let p1 = build_p1(&p0, inst.h0(), m)?;
    let (cover, dual) = match min_arc_cover(&p1, g) {
        Ok(r) => r,
        Err(Error::UnboundedDemand(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if cover.len() as i64 != m.gamma() {
        return Ok(None);
    }
    let graph = cover.underlying(g);
    if route_postconditions(inst, &graph, m) {
        return Ok(Some(CoverOutcome {
            graph,
            cover,
            dual,
            minimalized: false,
        }));
    }
    let smaller = minimalize(&cover, &p1, g);
    let graph = smaller.underlying(g);
    if smaller.len() as i64 == m.gamma() && route_postconditions(inst, &graph, m) {
        return Ok(Some(CoverOutcome {
            graph,
            cover: smaller,
            dual,
            minimalized: true,
        }));
    }
    Err(Error::Inconsistent(
        "minimum cover of size γ does not yield a valid bigraph".into(),
    ))
}

/// Checks the instance, then builds `G` through a minimum cover of `p₁`.
pub fn construct_via_cover(inst: &Instance) -> Result<Bigraph> {
    let verdict = check_msmt(inst)?;
    if let Some(cert) = verdict.violation {
        return Err(Error::Infeasible(Box::new(cert)));
    }
    match cover_route(inst)? {
        Some(out) => Ok(out.graph),
        None => Err(Error::Inconsistent(
            "condition holds but the cover route found no bigraph".into(),
        )),
    }
}

struct Brute<'a, F> {
    grounds: &'a Grounds,
    edges: Vec<Edge>,
    need_s: Vec<i64>,
    need_t: Option<Vec<i64>>,
    // candidate edges at each node from position i on
    left_s: Vec<Vec<i64>>,
    left_t: Vec<Vec<i64>>,
    chosen: Vec<Edge>,
    accept: F,
}

impl<F: FnMut(&Bigraph) -> bool> Brute<'_, F> {
    fn feasible_at(&self, i: usize) -> bool {
        let s_ok = self
            .need_s
            .iter()
            .zip(&self.left_s[i])
            .all(|(&n, &l)| n >= 0 && n <= l);
        let t_ok = match &self.need_t {
            Some(need) => need
                .iter()
                .zip(&self.left_t[i])
                .all(|(&n, &l)| n >= 0 && n <= l),
            None => true,
        };
        s_ok && t_ok
    }

    fn dfs(&mut self, i: usize) -> Option<Bigraph> {
        if !self.feasible_at(i) {
            return None;
        }
        if i == self.edges.len() {
            let g = Bigraph::new(self.grounds.clone(), self.chosen.clone()).ok()?;
            return (self.accept)(&g).then_some(g);
        }
        let (s, t) = self.edges[i];
        self.need_s[s] -= 1;
        if let Some(n) = &mut self.need_t {
            n[t] -= 1;
        }
        self.chosen.push((s, t));
        let found = self.dfs(i + 1);
        self.chosen.pop();
        self.need_s[s] += 1;
        if let Some(n) = &mut self.need_t {
            n[t] += 1;
        }
        found.or_else(|| self.dfs(i + 1))
    }
}

/// First subgraph of `allowed` (include-first over its edges in increasing
/// order) with the given degrees that `accept` takes. `need_t = None` leaves
/// `T`-degrees free.
pub fn first_fitting(
    allowed: &Bigraph,
    need_s: &[u32],
    need_t: Option<&[u32]>,
    accept: impl FnMut(&Bigraph) -> bool,
) -> Option<Bigraph> {
    let g = allowed.grounds();
    let mut edges = allowed.edges().to_vec();
    edges.dedup();
    let (ns, nt) = (g.s_len(), g.t_len());
    let mut left_s = vec![vec![0i64; ns]; edges.len() + 1];
    let mut left_t = vec![vec![0i64; nt]; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        left_s[i] = left_s[i + 1].clone();
        left_t[i] = left_t[i + 1].clone();
        left_s[i][edges[i].0] += 1;
        left_t[i][edges[i].1] += 1;
    }
    let mut b = Brute {
        grounds: g,
        edges,
        need_s: need_s.iter().map(|&d| d as i64).collect(),
        need_t: need_t.map(|v| v.iter().map(|&d| d as i64).collect()),
        left_s,
        left_t,
        chosen: Vec::new(),
        accept,
    };
    b.dfs(0)
}

/// First subgraph of `G₀` (include-first over edges in increasing order)
/// fitting the degrees and `M_S`-covering `p_T`.
pub fn construct_brute(inst: &Instance) -> Option<Bigraph> {
    let need_t = match inst.degrees() {
        Degrees::Full(m) => Some(m.m_t()),
        Degrees::SOnly(_) => None,
    };
    first_fitting(inst.g0(), inst.m_s(), need_t, |g| {
        validate::is_augmentation(inst, g).is_ok()
    })
}

fn matching_rec(
    edges: &[Edge],
    i: usize,
    ms: &Matroid,
    mt: &Matroid,
    ell: usize,
    chosen: &mut Vec<Edge>,
    (a, b): (Mask, Mask),
) -> bool {
    if chosen.len() == ell {
        return true;
    }
    // endpoints still reachable; the final rank on either side cannot exceed
    // the rank of what is chosen plus what is reachable
    let (ra, rb) = edges[i..]
        .iter()
        .filter(|&&(s, t)| a >> s & 1 == 0 && b >> t & 1 == 0)
        .fold((a, b), |(x, y), &(s, t)| (x | 1 << s, y | 1 << t));
    if (ms.rank(ra) as usize) < ell || (mt.rank(rb) as usize) < ell {
        return false;
    }
    for j in i..edges.len() {
        let (s, t) = edges[j];
        if a >> s & 1 == 1 || b >> t & 1 == 1 {
            continue;
        }
        let (na, nb) = (a | 1 << s, b | 1 << t);
        if !ms.is_independent(na) || !mt.is_independent(nb) {
            continue;
        }
        chosen.push((s, t));
        if matching_rec(edges, j + 1, ms, mt, ell, chosen, (na, nb)) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// An `ℓ`-edge matching of `gplus` whose endpoints are bases of both matroids.
pub fn find_matching_covering_bases(
    gplus: &Bigraph,
    ms: &Matroid,
    mt: &Matroid,
) -> Result<Option<Vec<Edge>>> {
    let g = gplus.grounds();
    if ms.ground() != g.s_names() || mt.ground() != g.t_names() {
        return Err(Error::GroundMismatch(
            "matroids must live on S and T".into(),
        ));
    }
    let ell = ms.full_rank();
    if mt.full_rank() != ell {
        return Err(Error::RankMismatch {
            rs: ell,
            rt: mt.full_rank(),
            ell,
        });
    }
    let mut edges = gplus.edges().to_vec();
    edges.dedup();
    let mut chosen = Vec::new();
    Ok(matching_rec(&edges, 0, ms, mt, ell, &mut chosen, (0, 0)).then_some(chosen))
}

/// Which constructor(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Cover,
    Brute,
    Both,
}

/// Builds a bigraph by the chosen route; `Both` insists the two agree on
/// whether one exists and returns the cover-route graph.
pub fn construct(inst: &Instance, route: Route) -> Result<Option<Bigraph>> {
    match route {
        Route::Cover => Ok(cover_route(inst)?.map(|o| o.graph)),
        Route::Brute => Ok(construct_brute(inst)),
        Route::Both => {
            let cover = cover_route(inst)?.map(|o| o.graph);
            let brute = construct_brute(inst);
            if cover.is_some() != brute.is_some() {
                return Err(Error::Inconsistent(format!(
                    "cover route {} but brute force {}",
                    if cover.is_some() {
                        "succeeded"
                    } else {
                        "failed"
                    },
                    if brute.is_some() {
                        "succeeded"
                    } else {
                        "failed"
                    },
                )));
            }
            Ok(cover)
        }
    }
}

/// A solved term-rank instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub graph: Bigraph,
    pub matching: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Solved(Solved),
    Infeasible(ViolationCert),
}

/// Adds a degree-prescribed `G` to `H₀` so that `G + H₀` has a matching
/// covering bases of `M_S` and `M_T`, or returns the violated inequality.
pub fn solve_term_rank(inst: &Instance, route: Route) -> Result<Solution> {
    let mt = inst.mt().ok_or(Error::MissingMatroidT)?;
    let verdict = check_ryser_gen(inst)?;
    if let Some(cert) = verdict.violation {
        return Ok(Solution::Infeasible(cert));
    }
    let graph = construct(inst, route)?.ok_or_else(|| {
        Error::Inconsistent("condition holds but no bigraph was constructed".into())
    })?;
    let gplus = graph.union(inst.h0())?;
    let matching = find_matching_covering_bases(&gplus, inst.ms(), mt)?.ok_or_else(|| {
        Error::Inconsistent("constructed bigraph has no matching covering bases".into())
    })?;
    Ok(Solution::Solved(Solved { graph, matching }))
}

/// Sum of `p` over a family; the value of a dual.
pub fn family_value(p: &SetFunctionTable, sets: &[Mask]) -> i64 {
    sets.iter().map(|&v| p.get(v)).sum()
}

/// All `ST`-arcs entering `v`, for diagnostics.
pub fn entering_arcs(v: Mask, g: &Grounds) -> Vec<Edge> {
    all_arcs(g)
        .into_iter()
        .filter(|&(s, t)| enters(s, t, v, g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::maximum_matching;
    use crate::mask;
    use crate::setfun::st_independent;

    fn named(ns: usize, nt: usize) -> Grounds {
        Grounds::numbered(ns, nt).unwrap()
    }

    #[test]
    fn single_positive_set() {
        let g = named(2, 2);
        let target = g.join(0b01, 0b01);
        let p = SetFunctionTable::from_fn(g.v_names(), |v| (v == target) as i64);
        let (cover, dual) = min_arc_cover(&p, &g).unwrap();
        assert_eq!(cover.len(), 1);
        assert_eq!(dual.sets, vec![target]);
        assert!(cover.covers(&p, &g));
    }

    #[test]
    fn nonpositive_function_needs_nothing() {
        let g = named(2, 3);
        let p = SetFunctionTable::from_fn(g.v_names(), |v| -mask::card(v));
        let (cover, dual) = min_arc_cover(&p, &g).unwrap();
        assert!(cover.is_empty());
        assert_eq!(dual.value, 0);
    }

    #[test]
    fn parallel_arcs_when_demand_exceeds_one() {
        let g = named(1, 1);
        let target = g.join(0, 1);
        let p = SetFunctionTable::from_fn(g.v_names(), |v| if v == target { 3 } else { 0 });
        let (cover, dual) = min_arc_cover(&p, &g).unwrap();
        assert_eq!(cover.arcs, vec![(0, 0); 3]);
        assert_eq!(dual.value, 3);
    }

    #[test]
    fn unbounded_demand_is_rejected() {
        let g = named(1, 1);
        let p = SetFunctionTable::from_fn(g.v_names(), |v| (v == g.full_v()) as i64);
        assert!(matches!(
            minimum_cover(&p, &g),
            Err(Error::UnboundedDemand(_))
        ));
    }

    #[test]
    fn dual_is_independent() {
        let g = named(2, 2);
        let p = SetFunctionTable::from_fn(g.v_names(), |v| {
            let (x, y) = g.split(v);
            mask::card(y) - mask::card(x)
        });
        let (cover, dual) = min_arc_cover(&p, &g).unwrap();
        assert!(st_independent(&dual.sets, &g));
        assert_eq!(family_value(&p, &dual.sets), dual.value);
        assert_eq!(cover.len() as i64, dual.value);
        assert!(cover.covers(&p, &g));
    }

    fn plain(g: &Grounds, m: DegreeSpec) -> Instance {
        Instance::new(
            Bigraph::empty(g.clone()),
            Degrees::Full(m),
            Matroid::free(g.s_names().to_vec()),
            SetFunctionTable::zero(g.t_names().to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn cover_route_builds_perfect_matching() {
        let g = named(2, 2);
        let inst = plain(&g, DegreeSpec::uniform(2, 2, 1).unwrap());
        let out = cover_route(&inst).unwrap().unwrap();
        assert_eq!(out.graph.edge_count(), 2);
        assert_eq!(maximum_matching(&out.graph).len(), 2);
        assert!(construct_via_cover(&inst).is_ok());
    }

    #[test]
    fn infeasible_instance_carries_certificate() {
        let g = named(2, 2);
        let inst = plain(&g, DegreeSpec::new(vec![2, 2], vec![3, 1]).unwrap());
        match construct_via_cover(&inst) {
            Err(Error::Infeasible(c)) => assert!(c.lhs > c.rhs),
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert!(cover_route(&inst).unwrap().is_none());
        assert!(construct_brute(&inst).is_none());
    }

    #[test]
    fn brute_with_zero_degrees() {
        let g = named(2, 2);
        let inst = plain(&g, DegreeSpec::uniform(2, 2, 0).unwrap());
        assert_eq!(construct_brute(&inst).unwrap().edge_count(), 0);
        let demanding = Instance::new(
            Bigraph::empty(g.clone()),
            Degrees::Full(DegreeSpec::uniform(2, 2, 0).unwrap()),
            Matroid::free(g.s_names().to_vec()),
            SetFunctionTable::from_fn(g.t_names().to_vec(), mask::card),
        )
        .unwrap();
        assert!(construct_brute(&demanding).is_none());
    }

    #[test]
    fn brute_is_first_in_edge_order() {
        let g = named(2, 2);
        let inst = plain(&g, DegreeSpec::uniform(2, 2, 1).unwrap());
        assert_eq!(construct_brute(&inst).unwrap().edges(), &[(0, 0), (1, 1)]);
    }

    #[test]
    fn matchings_covering_bases() {
        let g = named(2, 3);
        let u2s = Matroid::uniform(g.s_names().to_vec(), 2).unwrap();
        let u2t = Matroid::uniform(g.t_names().to_vec(), 2).unwrap();
        let k = Bigraph::complete(g.clone());
        let m = find_matching_covering_bases(&k, &u2s, &u2t)
            .unwrap()
            .unwrap();
        assert_eq!(m.len(), 2);
        let e = Bigraph::empty(g.clone());
        assert!(find_matching_covering_bases(&e, &u2s, &u2t)
            .unwrap()
            .is_none());
        // t3 is a loop of M_T, so a matching through t3 does not count
        let mt = Matroid::partition(g.t_names().to_vec(), vec![0b011], vec![2]).unwrap();
        let star = Bigraph::new(g.clone(), vec![(0, 0), (1, 2)]).unwrap();
        assert!(find_matching_covering_bases(&star, &u2s, &mt)
            .unwrap()
            .is_none());
    }

    #[test]
    fn term_rank_examples() {
        let g = named(3, 3);
        let u3s = Matroid::uniform(g.s_names().to_vec(), 3).unwrap();
        let u3t = Matroid::uniform(g.t_names().to_vec(), 3).unwrap();
        let ok = Instance::term_rank(
            Bigraph::empty(g.clone()),
            DegreeSpec::new(vec![2, 1, 1], vec![2, 1, 1]).unwrap(),
            u3s.clone(),
            u3t.clone(),
            Some(3),
        )
        .unwrap();
        match solve_term_rank(&ok, Route::Both).unwrap() {
            Solution::Solved(s) => {
                assert_eq!(s.matching.len(), 3);
                assert_eq!(s.graph.edge_count(), 4);
            }
            other => panic!("expected a solution, got {other:?}"),
        }
        let bad = Instance::term_rank(
            Bigraph::empty(g.clone()),
            DegreeSpec::new(vec![2, 2, 0], vec![2, 2, 0]).unwrap(),
            u3s,
            u3t,
            Some(3),
        )
        .unwrap();
        match solve_term_rank(&bad, Route::Both).unwrap() {
            Solution::Infeasible(c) => assert_eq!((c.x, c.y), (0b011, 0)),
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn zero_rank_gives_empty_matching() {
        let g = named(2, 2);
        let inst = Instance::term_rank(
            Bigraph::empty(g.clone()),
            DegreeSpec::uniform(2, 2, 1).unwrap(),
            Matroid::uniform(g.s_names().to_vec(), 0).unwrap(),
            Matroid::uniform(g.t_names().to_vec(), 0).unwrap(),
            Some(0),
        )
        .unwrap();
        match solve_term_rank(&inst, Route::Cover).unwrap() {
            Solution::Solved(s) => assert!(s.matching.is_empty()),
            other => panic!("{other:?}"),
        }
    }
}
