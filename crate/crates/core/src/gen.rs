//! Seeded random instances for the cross-checking harness.
//!
//! A [`Recipe`] is a concrete, index-based instance description that can be
//! shrunk one step at a time and written out as an [`InstanceFile`].

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::bigraph::{Bigraph, DegreeSpec, Edge, Grounds};
use crate::error::{Error, Result};
use crate::feasibility::{Degrees, Instance};
use crate::io::{InstanceFile, ModeTag};
use crate::mask::Mask;
use crate::matroid::{Matroid, MatroidDescriptor};
use crate::setfun::{classify_supermodular, Mode, SetFunctionJson, SetFunctionTable};

/// Everything needed to rebuild an instance, with tables indexed by masks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recipe {
    pub mode: ModeTag,
    pub ns: usize,
    pub nt: usize,
    /// `H₀`, or `G⁺` in `brualdi` mode.
    pub h0: Vec<Edge>,
    pub m_s: Vec<u32>,
    pub m_t: Option<Vec<u32>>,
    /// Rank table of `M_S`.
    pub ms: Vec<i64>,
    /// Rank table of `M_T`; when present `p_T` is its co-rank.
    pub mt: Option<Vec<i64>>,
    /// Explicit `p_T` when `mt` is absent.
    pub pt: Option<Vec<i64>>,
    pub ell: Option<usize>,
}

/// Drops bit `i` from every index of a subset table (restriction to the
/// other elements).
fn delete_bit(table: &[i64], i: usize) -> Vec<i64> {
    let half = table.len() / 2;
    (0..half)
        .map(|j| {
            let low = j & ((1 << i) - 1);
            table[low | (j >> i) << (i + 1)]
        })
        .collect()
}

impl Recipe {
    pub fn grounds(&self) -> Grounds {
        Grounds::numbered(self.ns, self.nt).expect("recipe sizes are small")
    }

    pub fn graph(&self) -> Result<Bigraph> {
        Bigraph::new(self.grounds(), self.h0.clone())
    }

    pub fn matroid_s(&self) -> Result<Matroid> {
        Matroid::from_rank_table(self.grounds().s_names().to_vec(), self.ms.clone())
    }

    pub fn matroid_t(&self) -> Result<Option<Matroid>> {
        self.mt
            .as_ref()
            .map(|r| Matroid::from_rank_table(self.grounds().t_names().to_vec(), r.clone()))
            .transpose()
    }

    pub fn degrees(&self) -> Result<DegreeSpec> {
        let m_t = self.m_t.clone().ok_or(Error::MissingDegreesT)?;
        DegreeSpec::new(self.m_s.clone(), m_t)
    }

    pub fn demand(&self) -> Result<SetFunctionTable> {
        let g = self.grounds();
        match (&self.mt, &self.pt) {
            (Some(_), _) => Ok(self.matroid_t()?.expect("present").corank_table()),
            (None, Some(p)) => SetFunctionTable::new(g.t_names().to_vec(), p.clone()),
            (None, None) => Ok(SetFunctionTable::zero(g.t_names().to_vec())),
        }
    }

    /// The instance this recipe describes (`brualdi` recipes have none).
    pub fn instance(&self) -> Result<Instance> {
        let h0 = self.graph()?;
        let ms = self.matroid_s()?;
        match (self.mode, self.matroid_t()?) {
            (ModeTag::MsOnly, _) => {
                Instance::new(h0, Degrees::SOnly(self.m_s.clone()), ms, self.demand()?)
            }
            (ModeTag::Brualdi, _) => Err(Error::Unsupported("brualdi recipes".into())),
            (_, Some(mt)) => Instance::term_rank(h0, self.degrees()?, ms, mt, self.ell),
            (_, None) => Instance::new(h0, Degrees::Full(self.degrees()?), ms, self.demand()?),
        }
    }

    pub fn to_file(&self) -> InstanceFile {
        let g = self.grounds();
        let named = |names: &[String], vals: &[u32]| -> BTreeMap<String, u32> {
            names.iter().cloned().zip(vals.iter().copied()).collect()
        };
        let describe = |names: &[String], ranks: &[i64]| {
            Matroid::from_rank_table(names.to_vec(), ranks.to_vec())
                .map(|m| MatroidDescriptor::describe(&m))
                .ok()
        };
        let h0 = self
            .h0
            .iter()
            .map(|&(s, t)| (g.s_names()[s].clone(), g.t_names()[t].clone()))
            .collect();
        let (matroid_s, matroid_t) = match self.mode {
            ModeTag::Ore | ModeTag::Ryser => (None, None),
            _ => (
                describe(g.s_names(), &self.ms),
                self.mt.as_ref().and_then(|r| describe(g.t_names(), r)),
            ),
        };
        let p_t = match (&self.mt, &self.pt, self.mode) {
            (None, Some(p), ModeTag::Msmt | ModeTag::Fully | ModeTag::MsOnly) => {
                SetFunctionTable::new(g.t_names().to_vec(), p.clone())
                    .ok()
                    .map(|t| SetFunctionJson::from(&t))
            }
            _ => None,
        };
        InstanceFile {
            mode: self.mode,
            s: g.s_names().to_vec(),
            t: g.t_names().to_vec(),
            h0,
            m_s: (self.mode != ModeTag::Brualdi).then(|| named(g.s_names(), &self.m_s)),
            m_t: match self.mode {
                ModeTag::Brualdi | ModeTag::MsOnly => None,
                _ => self.m_t.as_ref().map(|m| named(g.t_names(), m)),
            },
            matroid_s,
            matroid_t,
            p_t,
            ell: self.ell,
        }
    }

    fn without_s(&self, s: usize) -> Recipe {
        let mut r = self.clone();
        r.ns -= 1;
        r.h0 = self
            .h0
            .iter()
            .filter(|e| e.0 != s)
            .map(|&(a, b)| (if a > s { a - 1 } else { a }, b))
            .collect();
        r.m_s.remove(s);
        r.ms = delete_bit(&self.ms, s);
        r
    }

    fn without_t(&self, t: usize) -> Recipe {
        let mut r = self.clone();
        r.nt -= 1;
        r.h0 = self
            .h0
            .iter()
            .filter(|e| e.1 != t)
            .map(|&(a, b)| (a, if b > t { b - 1 } else { b }))
            .collect();
        if let Some(m) = &mut r.m_t {
            m.remove(t);
        }
        r.mt = self.mt.as_ref().map(|m| delete_bit(m, t));
        r.pt = self.pt.as_ref().map(|p| delete_bit(p, t));
        r
    }

    /// One-step simplifications, smallest first: drop a zero-degree node,
    /// drop an edge of `H₀`, lower a pair of degrees.
    pub fn shrink_candidates(&self) -> Vec<Recipe> {
        let mut out = Vec::new();
        if self.ns > 1 {
            for s in (0..self.ns).filter(|&s| self.m_s[s] == 0) {
                out.push(self.without_s(s));
            }
        }
        if self.nt > 1 {
            for t in 0..self.nt {
                if self.m_t.as_ref().is_none_or(|m| m[t] == 0) {
                    out.push(self.without_t(t));
                }
            }
        }
        for i in 0..self.h0.len() {
            let mut r = self.clone();
            r.h0.remove(i);
            out.push(r);
        }
        for s in (0..self.ns).filter(|&s| self.m_s[s] > 0) {
            match &self.m_t {
                Some(m_t) => {
                    for t in (0..self.nt).filter(|&t| m_t[t] > 0) {
                        let mut r = self.clone();
                        r.m_s[s] -= 1;
                        r.m_t.as_mut().unwrap()[t] -= 1;
                        out.push(r);
                    }
                }
                None => {
                    let mut r = self.clone();
                    r.m_s[s] -= 1;
                    out.push(r);
                }
            }
        }
        out
    }

    /// Total size, decreasing along every shrink step.
    pub fn weight(&self) -> usize {
        self.ns
            + self.nt
            + self.h0.len()
            + self.m_s.iter().map(|&d| d as usize).sum::<usize>()
            + self
                .m_t
                .iter()
                .flatten()
                .map(|&d| d as usize)
                .sum::<usize>()
    }
}

fn random_edges<R: Rng>(rng: &mut R, ns: usize, nt: usize, density: f64) -> Vec<Edge> {
    let mut out = Vec::new();
    for s in 0..ns {
        for t in 0..nt {
            if rng.gen_bool(density) {
                out.push((s, t));
            }
        }
    }
    out
}

/// A random matroid on `n` elements: free, uniform, partition (with loops),
/// or a truncated partition matroid.
pub fn random_matroid<R: Rng>(rng: &mut R, names: Vec<String>) -> Matroid {
    let n = names.len();
    match rng.gen_range(0..4) {
        0 => Matroid::free(names),
        1 => Matroid::uniform(names, rng.gen_range(0..=n)).expect("k ≤ n"),
        kind => {
            let nb = rng.gen_range(1..=n.max(1));
            let mut blocks = vec![0 as Mask; nb];
            for e in 0..n {
                if !rng.gen_bool(0.15) {
                    blocks[rng.gen_range(0..nb)] |= 1 << e;
                }
            }
            blocks.retain(|&b| b != 0);
            let caps = blocks
                .iter()
                .map(|&b| rng.gen_range(0..=b.count_ones() as usize))
                .collect();
            let m = Matroid::partition(names.clone(), blocks, caps).expect("valid partition");
            if kind == 3 && m.full_rank() > 0 {
                let k = rng.gen_range(0..=m.full_rank()) as i64;
                let ranks = m.rank_table().iter().map(|&r| r.min(k)).collect();
                Matroid::from_rank_table(names, ranks).expect("truncation is a matroid")
            } else {
                m
            }
        }
    }
}

/// A random matroid of rank exactly `ell`.
pub fn matroid_of_rank<R: Rng>(rng: &mut R, names: Vec<String>, ell: usize) -> Matroid {
    for _ in 0..10 {
        let m = random_matroid(rng, names.clone());
        if m.full_rank() >= ell {
            let ranks = m.rank_table().iter().map(|&r| r.min(ell as i64)).collect();
            return Matroid::from_rank_table(names, ranks).expect("truncation is a matroid");
        }
    }
    Matroid::uniform(names, ell).expect("ell ≤ n")
}

/// Degrees on both sides with equal totals: half the time read off a random
/// subgraph of `allowed` (so an Ore-feasible degree spec), otherwise random.
fn random_degrees<R: Rng>(
    rng: &mut R,
    ns: usize,
    nt: usize,
    allowed: &[Edge],
) -> (Vec<u32>, Vec<u32>) {
    let mut m_s = vec![0u32; ns];
    let mut m_t = vec![0u32; nt];
    if rng.gen_bool(0.5) {
        let q = *[0.3, 0.6].choose(rng).unwrap();
        for &(s, t) in allowed {
            if rng.gen_bool(q) {
                m_s[s] += 1;
                m_t[t] += 1;
            }
        }
        return (m_s, m_t);
    }
    let cap_s = nt.min(3) as u32;
    let cap_t = ns.min(3) as u32;
    for d in m_s.iter_mut() {
        *d = rng.gen_range(0..=cap_s);
    }
    let room = cap_t as usize * nt;
    while m_s.iter().sum::<u32>() as usize > room {
        let s = rng.gen_range(0..ns);
        m_s[s] = m_s[s].saturating_sub(1);
    }
    for _ in 0..m_s.iter().sum::<u32>() {
        let open: Vec<usize> = (0..nt).filter(|&t| m_t[t] < cap_t).collect();
        m_t[*open.choose(rng).unwrap()] += 1;
    }
    (m_s, m_t)
}

/// A demand function on `T`. `fully` restricts to fully supermodular ones.
fn random_demand<R: Rng>(rng: &mut R, names: &[String], fully: bool) -> Vec<i64> {
    let corank = |rng: &mut R| {
        let m = random_matroid(rng, names.to_vec());
        // mostly lowered by 0 or 1; rarely raised so that p_T(∅) > 0
        let shift = if rng.gen_bool(0.05) {
            1
        } else {
            -rng.gen_range(0..=1)
        };
        m.corank_table().shifted(shift)
    };
    let kinds = if fully { 2 } else { 4 };
    let table = match rng.gen_range(0..kinds) {
        0 => SetFunctionTable::zero(names.to_vec()),
        1 => corank(rng),
        2 => corank(rng).truncated(),
        _ => {
            let mut found = None;
            for _ in 0..60 {
                let values = (0..1usize << names.len())
                    .map(|y| {
                        if y != 0 && rng.gen_bool(0.3) {
                            rng.gen_range(1..=2)
                        } else {
                            -(rng.gen_range(0..=1) as i64)
                        }
                    })
                    .collect();
                let candidate = SetFunctionTable::new(names.to_vec(), values).expect("sized");
                if matches!(
                    classify_supermodular(&candidate, Mode::Intersecting, true),
                    Ok(None)
                ) {
                    found = Some(candidate);
                    break;
                }
            }
            found.unwrap_or_else(|| corank(rng))
        }
    };
    table.values().to_vec()
}

fn complement(ns: usize, nt: usize, h0: &[Edge]) -> Vec<Edge> {
    (0..ns)
        .flat_map(|s| (0..nt).map(move |t| (s, t)))
        .filter(|e| !h0.contains(e))
        .collect()
}

/// A random recipe for `mode` with `|S| ≤ max_s`, `|T| ≤ max_t`.
pub fn random_recipe<R: Rng>(rng: &mut R, mode: ModeTag, max_s: usize, max_t: usize) -> Recipe {
    let ns = rng.gen_range(1..=max_s.max(1));
    let nt = rng.gen_range(1..=max_t.max(1));
    let g = Grounds::numbered(ns, nt).expect("small");
    let density = *[0.0, 0.25, 0.5].choose(rng).unwrap();
    let free_s = Matroid::free(g.s_names().to_vec()).rank_table().to_vec();
    let mut r = Recipe {
        mode,
        ns,
        nt,
        h0: random_edges(rng, ns, nt, density),
        m_s: vec![0; ns],
        m_t: Some(vec![0; nt]),
        ms: free_s,
        mt: None,
        pt: None,
        ell: None,
    };
    let allowed = complement(ns, nt, &r.h0);
    match mode {
        ModeTag::Ore => {
            let (a, b) = random_degrees(rng, ns, nt, &allowed);
            r.m_s = a;
            r.m_t = Some(b);
        }
        ModeTag::Msmt | ModeTag::Fully => {
            let (a, b) = random_degrees(rng, ns, nt, &allowed);
            r.m_s = a;
            r.m_t = Some(b);
            r.ms = random_matroid(rng, g.s_names().to_vec())
                .rank_table()
                .to_vec();
            r.pt = Some(random_demand(rng, g.t_names(), mode == ModeTag::Fully));
        }
        ModeTag::MsOnly => {
            r.m_t = None;
            r.m_s = (0..ns)
                .map(|_| rng.gen_range(0..=nt.min(3) as u32))
                .collect();
            r.ms = random_matroid(rng, g.s_names().to_vec())
                .rank_table()
                .to_vec();
            r.pt = Some(random_demand(rng, g.t_names(), false));
        }
        ModeTag::Ryser => {
            if rng.gen_bool(0.5) {
                r.h0.clear();
            }
            let allowed = complement(ns, nt, &r.h0);
            let (a, b) = random_degrees(rng, ns, nt, &allowed);
            r.m_s = a;
            r.m_t = Some(b);
            let ell = rng.gen_range(0..=ns.min(nt));
            r.ell = Some(ell);
            r.ms = Matroid::uniform(g.s_names().to_vec(), ell)
                .unwrap()
                .rank_table()
                .to_vec();
            r.mt = Some(
                Matroid::uniform(g.t_names().to_vec(), ell)
                    .unwrap()
                    .rank_table()
                    .to_vec(),
            );
        }
        ModeTag::RyserGen => {
            let (a, b) = random_degrees(rng, ns, nt, &allowed);
            r.m_s = a;
            r.m_t = Some(b);
            let ell = rng.gen_range(0..=ns.min(nt));
            r.ell = Some(ell);
            r.ms = matroid_of_rank(rng, g.s_names().to_vec(), ell)
                .rank_table()
                .to_vec();
            r.mt = Some(
                matroid_of_rank(rng, g.t_names().to_vec(), ell)
                    .rank_table()
                    .to_vec(),
            );
        }
        ModeTag::Brualdi => {
            let d = *[0.3, 0.5, 0.7].choose(rng).unwrap();
            r.h0 = random_edges(rng, ns, nt, d);
            r.m_t = None;
            let ell = rng.gen_range(0..=ns.min(nt));
            r.ell = Some(ell);
            r.ms = matroid_of_rank(rng, g.s_names().to_vec(), ell)
                .rank_table()
                .to_vec();
            r.mt = Some(
                matroid_of_rank(rng, g.t_names().to_vec(), ell)
                    .rank_table()
                    .to_vec(),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn recipes_build_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..200 {
            let mode = ModeTag::ALL[i % ModeTag::ALL.len()];
            let r = random_recipe(&mut rng, mode, 4, 4);
            if mode == ModeTag::Brualdi {
                assert!(r.matroid_s().is_ok() && r.matroid_t().unwrap().is_some());
                continue;
            }
            r.instance()
                .unwrap_or_else(|e| panic!("{mode}: {e} in {r:?}"));
            let file = r.to_file();
            let loaded = file.load(12).unwrap();
            let again = loaded.instance().unwrap();
            assert_eq!(again.pt(), r.instance().unwrap().pt());
        }
    }

    #[test]
    fn shrinking_reduces_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for mode in ModeTag::ALL {
            let r = random_recipe(&mut rng, mode, 4, 4);
            for c in r.shrink_candidates() {
                assert!(c.weight() < r.weight());
                assert_eq!(c.ms.len(), 1 << c.ns);
            }
        }
    }

    #[test]
    fn delete_bit_restricts() {
        // table indexed by 3 bits, value = mask
        let t: Vec<i64> = (0..8).collect();
        assert_eq!(delete_bit(&t, 1), vec![0, 1, 4, 5]);
        assert_eq!(delete_bit(&t, 0), vec![0, 2, 4, 6]);
    }
}
