//! Ground sets, bipartite graphs on them, degree specifications and the
//! elementary graph quantities (complement, neighbourhoods, cut counts,
//! matching number).
//!
//! Node `i` of `S` is bit `i` of a `V`-mask, node `j` of `T` is bit
//! `|S| + j`. Most routines work with *local* masks instead: an `S`-mask has
//! bit `i` for `s_i`, a `T`-mask has bit `j` for `t_j`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::mask::{self, bits, Mask, MASK_BITS};

/// `(s, t)` with `s` an index into `S` and `t` an index into `T`.
pub type Edge = (usize, usize);

/// The two colour classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grounds {
    s: Vec<String>,
    t: Vec<String>,
}

impl Grounds {
    pub const DEFAULT_CAP: usize = 12;

    pub fn new(s: Vec<String>, t: Vec<String>) -> Result<Self> {
        Self::with_cap(s, t, Self::DEFAULT_CAP)
    }

    pub fn with_cap(s: Vec<String>, t: Vec<String>, cap: usize) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySide("S"));
        }
        if t.is_empty() {
            return Err(Error::EmptySide("T"));
        }
        let size = s.len() + t.len();
        let cap = cap.min(MASK_BITS);
        if size > cap {
            return Err(Error::TooLarge { size, cap });
        }
        let mut seen = HashSet::new();
        for name in s.iter().chain(&t) {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateNode(name.clone()));
            }
        }
        Ok(Grounds { s, t })
    }

    /// `s1..s{ns}` and `t1..t{nt}`.
    pub fn numbered(ns: usize, nt: usize) -> Result<Self> {
        Self::with_cap(
            (1..=ns).map(|i| format!("s{i}")).collect(),
            (1..=nt).map(|j| format!("t{j}")).collect(),
            MASK_BITS,
        )
    }

    pub fn s_len(&self) -> usize {
        self.s.len()
    }

    pub fn t_len(&self) -> usize {
        self.t.len()
    }

    pub fn v_len(&self) -> usize {
        self.s.len() + self.t.len()
    }

    pub fn s_names(&self) -> &[String] {
        &self.s
    }

    pub fn t_names(&self) -> &[String] {
        &self.t
    }

    /// `S` followed by `T`, the node order behind `V`-masks.
    pub fn v_names(&self) -> Vec<String> {
        self.s.iter().chain(&self.t).cloned().collect()
    }

    pub fn s_index(&self, name: &str) -> Option<usize> {
        self.s.iter().position(|n| n == name)
    }

    pub fn t_index(&self, name: &str) -> Option<usize> {
        self.t.iter().position(|n| n == name)
    }

    pub fn full_s(&self) -> Mask {
        mask::full(self.s.len())
    }

    pub fn full_t(&self) -> Mask {
        mask::full(self.t.len())
    }

    pub fn full_v(&self) -> Mask {
        mask::full(self.v_len())
    }

    /// Joins a local `S`-mask and a local `T`-mask into a `V`-mask.
    #[inline]
    pub fn join(&self, x: Mask, y: Mask) -> Mask {
        x | (y << self.s.len())
    }

    /// Splits a `V`-mask into its local `S` and `T` parts.
    #[inline]
    pub fn split(&self, v: Mask) -> (Mask, Mask) {
        (v & self.full_s(), v >> self.s.len())
    }

    pub fn check_s(&self, x: Mask) -> Result<()> {
        if mask::is_subset(x, self.full_s()) {
            Ok(())
        } else {
            Err(Error::NotASubset { mask: x, side: "S" })
        }
    }

    pub fn check_t(&self, y: Mask) -> Result<()> {
        if mask::is_subset(y, self.full_t()) {
            Ok(())
        } else {
            Err(Error::NotASubset { mask: y, side: "T" })
        }
    }

    pub fn s_subset_names(&self, x: Mask) -> Vec<String> {
        bits(x).map(|i| self.s[i].clone()).collect()
    }

    pub fn t_subset_names(&self, y: Mask) -> Vec<String> {
        bits(y).map(|j| self.t[j].clone()).collect()
    }
}

/// A bipartite (multi)graph on fixed colour classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bigraph {
    grounds: Grounds,
    edges: Vec<Edge>,
    simple: bool,
    // local T-mask of neighbours of each s
    s_adj: Vec<Mask>,
    // local S-mask of neighbours of each t
    t_adj: Vec<Mask>,
}

impl Bigraph {
    pub fn new(grounds: Grounds, mut edges: Vec<Edge>) -> Result<Self> {
        let (ns, nt) = (grounds.s_len(), grounds.t_len());
        let mut s_adj = vec![0; ns];
        let mut t_adj = vec![0; nt];
        for &(s, t) in &edges {
            if s >= ns || t >= nt {
                return Err(Error::EdgeOutOfRange(s, t));
            }
            s_adj[s] |= 1 << t;
            t_adj[t] |= 1 << s;
        }
        edges.sort_unstable();
        let simple = edges.windows(2).all(|w| w[0] != w[1]);
        Ok(Bigraph {
            grounds,
            edges,
            simple,
            s_adj,
            t_adj,
        })
    }

    pub fn empty(grounds: Grounds) -> Self {
        Bigraph::new(grounds, Vec::new()).expect("no edges to reject")
    }

    pub fn complete(grounds: Grounds) -> Self {
        let edges = (0..grounds.s_len())
            .flat_map(|s| (0..grounds.t_len()).map(move |t| (s, t)))
            .collect();
        Bigraph::new(grounds, edges).expect("indices in range")
    }

    /// Builds a graph from `(s-name, t-name)` pairs.
    pub fn from_named<A: AsRef<str>, B: AsRef<str>>(
        grounds: Grounds,
        pairs: &[(A, B)],
    ) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let s = grounds
                .s_index(a.as_ref())
                .ok_or_else(|| Error::UnknownNode(a.as_ref().to_string()))?;
            let t = grounds
                .t_index(b.as_ref())
                .ok_or_else(|| Error::UnknownNode(b.as_ref().to_string()))?;
            edges.push((s, t));
        }
        Bigraph::new(grounds, edges)
    }

    pub fn grounds(&self) -> &Grounds {
        &self.grounds
    }

    /// Edges sorted lexicographically, parallel copies repeated.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        self.s_adj[s] >> t & 1 == 1
    }

    pub fn degree_s(&self, s: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == s).count()
    }

    pub fn degree_t(&self, t: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == t).count()
    }

    /// Local `T`-mask of the neighbours of `s`.
    pub fn s_neighbours(&self, s: usize) -> Mask {
        self.s_adj[s]
    }

    /// Local `S`-mask of the neighbours of `t`.
    pub fn t_neighbours(&self, t: usize) -> Mask {
        self.t_adj[t]
    }

    /// `Γ(Y)` for a local `T`-mask, unchecked.
    #[inline]
    pub fn gamma(&self, y: Mask) -> Mask {
        bits(y).fold(0, |acc, t| acc | self.t_adj[t])
    }

    /// Number of edges (with multiplicity) between `X ⊆ S` and `Y ⊆ T`, unchecked.
    pub fn cut(&self, x: Mask, y: Mask) -> i64 {
        self.edges
            .iter()
            .filter(|&&(s, t)| x >> s & 1 == 1 && y >> t & 1 == 1)
            .count() as i64
    }

    /// Edge union, keeping parallel copies.
    pub fn union(&self, other: &Bigraph) -> Result<Bigraph> {
        if self.grounds != other.grounds {
            return Err(Error::GroundMismatch("graph union".into()));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Bigraph::new(self.grounds.clone(), edges)
    }

    pub fn named_edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(s, t)| {
                (
                    self.grounds.s_names()[s].clone(),
                    self.grounds.t_names()[t].clone(),
                )
            })
            .collect()
    }
}

/// Exact degree prescription on `S ∪ T` with equal totals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSpec {
    m_s: Vec<u32>,
    m_t: Vec<u32>,
    gamma: i64,
}

impl DegreeSpec {
    pub fn new(m_s: Vec<u32>, m_t: Vec<u32>) -> Result<Self> {
        let s: i64 = m_s.iter().map(|&d| d as i64).sum();
        let t: i64 = m_t.iter().map(|&d| d as i64).sum();
        if s != t {
            return Err(Error::DegreeTotals { s, t });
        }
        Ok(DegreeSpec { m_s, m_t, gamma: s })
    }

    pub fn uniform(ns: usize, nt: usize, d: u32) -> Result<Self> {
        DegreeSpec::new(vec![d; ns], vec![d; nt])
    }

    pub fn m_s(&self) -> &[u32] {
        &self.m_s
    }

    pub fn m_t(&self) -> &[u32] {
        &self.m_t
    }

    /// Common total `m̃_S(S) = m̃_T(T)`.
    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn sum_s(&self, x: Mask) -> i64 {
        sum_over(&self.m_s, x)
    }

    pub fn sum_t(&self, y: Mask) -> i64 {
        sum_over(&self.m_t, y)
    }

    pub fn check_grounds(&self, g: &Grounds) -> Result<()> {
        if self.m_s.len() != g.s_len() || self.m_t.len() != g.t_len() {
            return Err(Error::GroundMismatch(format!(
                "degree spec covers {}+{} nodes, grounds have {}+{}",
                self.m_s.len(),
                self.m_t.len(),
                g.s_len(),
                g.t_len()
            )));
        }
        Ok(())
    }
}

pub(crate) fn sum_over(values: &[u32], m: Mask) -> i64 {
    bits(m).map(|i| values[i] as i64).sum()
}

/// Table of `m̃(X)` for every subset of a side.
pub(crate) fn sum_table(values: &[u32]) -> Vec<i64> {
    let n = values.len();
    let mut out = vec![0i64; 1 << n];
    for m in 1..(1usize << n) {
        let low = m.trailing_zeros() as usize;
        out[m] = out[m & (m - 1)] + values[low] as i64;
    }
    out
}

/// `G₀`: the edges of the complete bigraph missing from `h0`.
pub fn bipartite_complement(h0: &Bigraph) -> Result<Bigraph> {
    if !h0.is_simple() {
        return Err(Error::NotSimple);
    }
    let g = h0.grounds();
    let edges = (0..g.s_len())
        .flat_map(|s| (0..g.t_len()).map(move |t| (s, t)))
        .filter(|&(s, t)| !h0.has_edge(s, t))
        .collect();
    Bigraph::new(g.clone(), edges)
}

/// `Γ_G(Y)` as a local `S`-mask.
pub fn neighborhood(g: &Bigraph, y: Mask) -> Result<Mask> {
    g.grounds().check_t(y)?;
    Ok(g.gamma(y))
}

/// `d_G(X, Y)`: edges with one end in `X ⊆ S` and the other in `Y ⊆ T`.
pub fn cut_count(g: &Bigraph, x: Mask, y: Mask) -> Result<i64> {
    g.grounds().check_s(x)?;
    g.grounds().check_t(y)?;
    Ok(g.cut(x, y))
}

/// Maximum matching size `ν(G)`, by repeated augmenting-path search.
pub fn matching_number(g: &Bigraph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching as a list of edges.
pub fn maximum_matching(g: &Bigraph) -> Vec<Edge> {
    let (ns, nt) = (g.grounds().s_len(), g.grounds().t_len());
    let mut mate_t: Vec<Option<usize>> = vec![None; nt];
    for s in 0..ns {
        let mut seen = vec![false; nt];
        augment(g, s, &mut seen, &mut mate_t);
    }
    let mut out: Vec<Edge> = mate_t
        .iter()
        .enumerate()
        .filter_map(|(t, m)| m.map(|s| (s, t)))
        .collect();
    out.sort_unstable();
    out
}

fn augment(g: &Bigraph, s: usize, seen: &mut [bool], mate_t: &mut [Option<usize>]) -> bool {
    for t in bits(g.s_neighbours(s)) {
        if seen[t] {
            continue;
        }
        seen[t] = true;
        let free = match mate_t[t] {
            None => true,
            Some(other) => augment(g, other, seen, mate_t),
        };
        if free {
            mate_t[t] = Some(s);
            return true;
        }
    }
    false
}

/// Whether every node degree equals its prescription.
pub fn fits(g: &Bigraph, m: &DegreeSpec) -> Result<bool> {
    m.check_grounds(g.grounds())?;
    let gr = g.grounds();
    let mut ds = vec![0u32; gr.s_len()];
    let mut dt = vec![0u32; gr.t_len()];
    for &(s, t) in g.edges() {
        ds[s] += 1;
        dt[t] += 1;
    }
    Ok(ds == m.m_s() && dt == m.m_t())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g22() -> Grounds {
        Grounds::numbered(2, 2).unwrap()
    }

    fn brute_matching_number(g: &Bigraph) -> usize {
        let e = g.edges();
        let mut best = 0;
        for sel in 0u32..(1 << e.len()) {
            let (mut us, mut ut) = (0u32, 0u32);
            let mut ok = true;
            for i in bits(sel) {
                let (s, t) = e[i];
                if us >> s & 1 == 1 || ut >> t & 1 == 1 {
                    ok = false;
                    break;
                }
                us |= 1 << s;
                ut |= 1 << t;
            }
            if ok {
                best = best.max(sel.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn grounds_validation() {
        assert_eq!(
            Grounds::new(vec![], vec!["t".into()]),
            Err(Error::EmptySide("S"))
        );
        assert!(matches!(
            Grounds::new(vec!["a".into()], vec!["a".into()]),
            Err(Error::DuplicateNode(_))
        ));
        let big: Vec<String> = (0..7).map(|i| format!("x{i}")).collect();
        let big_t: Vec<String> = (0..7).map(|i| format!("y{i}")).collect();
        assert!(matches!(
            Grounds::new(big.clone(), big_t.clone()),
            Err(Error::TooLarge { size: 14, cap: 12 })
        ));
        assert!(Grounds::with_cap(big, big_t, 14).is_ok());
    }

    #[test]
    fn complement_examples() {
        let k = Bigraph::complete(g22());
        assert_eq!(bipartite_complement(&k).unwrap().edge_count(), 0);
        let e = Bigraph::empty(g22());
        assert_eq!(bipartite_complement(&e).unwrap(), Bigraph::complete(g22()));
        let one = Bigraph::from_named(g22(), &[("s1", "t1")]).unwrap();
        let c = bipartite_complement(&one).unwrap();
        assert_eq!(c.edges(), &[(0, 1), (1, 0), (1, 1)]);
        let multi = Bigraph::new(g22(), vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(bipartite_complement(&multi), Err(Error::NotSimple));
    }

    #[test]
    fn neighborhood_examples() {
        let k = Bigraph::complete(g22());
        assert_eq!(neighborhood(&k, 0).unwrap(), 0);
        assert_eq!(neighborhood(&k, 0b01).unwrap(), 0b11);
        let g = Bigraph::new(g22(), vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(neighborhood(&g, 0b01).unwrap(), 0b01);
        assert!(neighborhood(&g, 0b100).is_err());
    }

    #[test]
    fn cut_count_examples() {
        let k = Bigraph::complete(g22());
        assert_eq!(cut_count(&k, 0b11, 0b11).unwrap(), 4);
        assert_eq!(cut_count(&k, 0, 0b11).unwrap(), 0);
        let g = Bigraph::new(g22(), vec![(0, 0), (0, 1), (1, 0)]).unwrap();
        assert_eq!(cut_count(&g, 0b01, 0b01).unwrap(), 1);
        assert!(cut_count(&g, 0b100, 0).is_err());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&Bigraph::complete(g22())), 2);
        assert_eq!(matching_number(&Bigraph::empty(g22())), 0);
        let star = Bigraph::new(
            Grounds::numbered(1, 3).unwrap(),
            vec![(0, 0), (0, 1), (0, 2)],
        )
        .unwrap();
        assert_eq!(matching_number(&star), 1);
    }

    #[test]
    fn fits_examples() {
        let pm = Bigraph::new(g22(), vec![(0, 0), (1, 1)]).unwrap();
        let ones = DegreeSpec::uniform(2, 2, 1).unwrap();
        assert!(fits(&pm, &ones).unwrap());
        assert!(!fits(&Bigraph::complete(g22()), &ones).unwrap());
        let zeros = DegreeSpec::uniform(2, 2, 0).unwrap();
        assert!(fits(&Bigraph::empty(g22()), &zeros).unwrap());
        let wrong = DegreeSpec::uniform(3, 3, 0).unwrap();
        assert!(fits(&pm, &wrong).is_err());
        assert!(matches!(
            DegreeSpec::new(vec![1], vec![2]),
            Err(Error::DegreeTotals { s: 1, t: 2 })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph() -> impl Strategy<Value = Bigraph> {
            (1usize..=4, 1usize..=4)
                .prop_flat_map(|(ns, nt)| (Just(ns), Just(nt), any::<u32>()))
                .prop_map(|(ns, nt, bitsel)| {
                    let edges = (0..ns)
                        .flat_map(|s| (0..nt).map(move |t| (s, t)))
                        .enumerate()
                        .filter(|(i, _)| bitsel >> i & 1 == 1)
                        .map(|(_, e)| e)
                        .collect();
                    Bigraph::new(Grounds::numbered(ns, nt).unwrap(), edges).unwrap()
                })
        }

        proptest! {
            #[test]
            fn complement_is_involution(h in graph()) {
                let c = bipartite_complement(&h).unwrap();
                let g = h.grounds();
                prop_assert_eq!(c.edge_count() + h.edge_count(), g.s_len() * g.t_len());
                prop_assert_eq!(bipartite_complement(&c).unwrap(), h);
            }

            #[test]
            fn cut_counts_add_up(h in graph(), x in any::<u32>(), y in any::<u32>()) {
                let g = h.grounds();
                let (x, y) = (x & g.full_s(), y & g.full_t());
                let c = bipartite_complement(&h).unwrap();
                prop_assert_eq!(
                    cut_count(&h, x, y).unwrap() + cut_count(&c, x, y).unwrap(),
                    mask::card(x) * mask::card(y)
                );
            }

            #[test]
            fn neighborhood_distributes_over_union(h in graph(), a in any::<u32>(), b in any::<u32>()) {
                let ft = h.grounds().full_t();
                let (a, b) = (a & ft, b & ft);
                prop_assert_eq!(
                    neighborhood(&h, a | b).unwrap(),
                    neighborhood(&h, a).unwrap() | neighborhood(&h, b).unwrap()
                );
            }

            #[test]
            fn matching_number_matches_brute_force(h in graph()) {
                let nu = matching_number(&h);
                prop_assert_eq!(nu, brute_matching_number(&h));
                let g = h.grounds();
                prop_assert!(nu <= g.s_len().min(g.t_len()));
                // one more edge raises ν by at most one
                let c = bipartite_complement(&h).unwrap();
                for &e in c.edges() {
                    let mut edges = h.edges().to_vec();
                    edges.push(e);
                    let h2 = Bigraph::new(g.clone(), edges).unwrap();
                    let nu2 = matching_number(&h2);
                    prop_assert!(nu2 == nu || nu2 == nu + 1);
                }
            }
        }
    }
}
