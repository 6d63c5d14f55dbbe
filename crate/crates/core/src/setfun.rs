//! Integer set functions as bitmask-indexed tables, the supermodularity
//! classifiers, the family `𝓗₀` of sets no `H₀`-arc enters, and the
//! auxiliary functions `p₀`, `p₁` used by the cover construction.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bigraph::{Bigraph, DegreeSpec, Grounds};
use crate::error::{Error, Result};
use crate::mask::{self, bits, Mask};
use crate::matroid::Matroid;

/// An integer-valued function on every subset of an ordered ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctionTable {
    ground: Vec<String>,
    values: Vec<i64>,
}

impl SetFunctionTable {
    pub fn new(ground: Vec<String>, values: Vec<i64>) -> Result<Self> {
        let expected = 1usize << ground.len();
        if values.len() != expected {
            return Err(Error::TableSize {
                got: values.len(),
                expected,
            });
        }
        Ok(SetFunctionTable { ground, values })
    }

    pub fn zero(ground: Vec<String>) -> Self {
        let n = ground.len();
        SetFunctionTable {
            ground,
            values: vec![0; 1 << n],
        }
    }

    pub fn from_fn(ground: Vec<String>, f: impl Fn(Mask) -> i64) -> Self {
        let values = (0..1u32 << ground.len()).map(f).collect();
        SetFunctionTable { ground, values }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    #[inline]
    pub fn get(&self, m: Mask) -> i64 {
        self.values[m as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn full_mask(&self) -> Mask {
        mask::full(self.len())
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        SetFunctionTable {
            ground: self.ground.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn shifted(&self, c: i64) -> Self {
        self.map(|v| v + c)
    }

    /// `max(p, 0)`.
    pub fn truncated(&self) -> Self {
        self.map(|v| v.max(0))
    }

    pub fn is_monotone(&self) -> bool {
        let n = self.len();
        (0..self.values.len()).all(|a| (0..n).all(|e| self.values[a] <= self.values[a | 1 << e]))
    }

    /// Subsets with a positive value, in increasing mask order.
    pub fn positive_sets(&self) -> Vec<Mask> {
        (0..self.values.len() as Mask)
            .filter(|&m| self.get(m) > 0)
            .collect()
    }

    fn key(&self, m: Mask) -> String {
        bits(m)
            .map(|i| self.ground[i].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Wire form: `{"ground":["t1","t2"],"values":{"":0,"t1":1,...}}`, subset keys
/// are comma-joined ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFunctionJson {
    pub ground: Vec<String>,
    pub values: BTreeMap<String, i64>,
}

impl From<&SetFunctionTable> for SetFunctionJson {
    fn from(p: &SetFunctionTable) -> Self {
        SetFunctionJson {
            ground: p.ground.clone(),
            values: (0..p.values.len() as Mask)
                .map(|m| (p.key(m), p.get(m)))
                .collect(),
        }
    }
}

impl SetFunctionJson {
    /// Re-indexes onto `ground`, which must hold the same ids (any order).
    pub fn to_table(&self, ground: &[String]) -> Result<SetFunctionTable> {
        let mut a = self.ground.clone();
        let mut b = ground.to_vec();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::GroundMismatch(format!(
                "set function ground {:?} vs {:?}",
                self.ground, ground
            )));
        }
        let n = ground.len();
        let mut values: Vec<Option<i64>> = vec![None; 1 << n];
        for (key, &v) in &self.values {
            let mut m: Mask = 0;
            for name in key.split(',').filter(|s| !s.is_empty()) {
                let i = ground
                    .iter()
                    .position(|g| g == name.trim())
                    .ok_or_else(|| Error::UnknownNode(name.to_string()))?;
                m |= 1 << i;
            }
            if values[m as usize].replace(v).is_some() {
                return Err(Error::GroundMismatch(format!("subset `{key}` given twice")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(m, v)| {
                v.ok_or_else(|| {
                    let names: Vec<_> = bits(m as Mask).map(|i| ground[i].clone()).collect();
                    Error::GroundMismatch(format!("missing value for subset `{}`", names.join(",")))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SetFunctionTable::new(ground.to_vec(), values)
    }
}

/// Which pairs the supermodular inequality is demanded on.
#[derive(Debug, Clone, Copy)]
pub enum Mode<'a> {
    Full,
    Intersecting,
    TIntersecting(&'a Grounds),
    StCrossing(&'a Grounds),
}

impl Mode<'_> {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Full => "fully",
            Mode::Intersecting => "intersecting",
            Mode::TIntersecting(_) => "T-intersecting",
            Mode::StCrossing(_) => "ST-crossing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupermodularViolation {
    pub x: Mask,
    pub y: Mask,
    /// `p(X) + p(Y)`
    pub lhs: i64,
    /// `p(X ∩ Y) + p(X ∪ Y)`
    pub rhs: i64,
}

impl fmt::Display for SupermodularViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p({:#b}) + p({:#b}) = {} > {}",
            self.x, self.y, self.lhs, self.rhs
        )
    }
}

/// Checks `p(X) + p(Y) ≤ p(X∩Y) + p(X∪Y)` on the pairs `mode` selects,
/// restricted to pairs with both values positive when `positively` is set.
/// Returns the first violating pair in mask order.
pub fn classify_supermodular(
    p: &SetFunctionTable,
    mode: Mode<'_>,
    positively: bool,
) -> Result<Option<SupermodularViolation>> {
    let (s_full, t_shift) = match mode {
        Mode::TIntersecting(g) | Mode::StCrossing(g) => {
            if p.ground() != g.v_names().as_slice() {
                return Err(Error::GroundMismatch(format!(
                    "{} mode needs a function on S ∪ T",
                    mode.name()
                )));
            }
            (g.full_s(), g.s_len())
        }
        _ => (0, 0),
    };
    let candidates: Vec<Mask> = if positively {
        p.positive_sets()
    } else {
        (0..=p.full_mask()).collect()
    };
    let wanted = |x: Mask, y: Mask| -> bool {
        if mask::comparable(x, y) {
            return matches!(mode, Mode::Full);
        }
        match mode {
            Mode::Full => true,
            Mode::Intersecting => x & y != 0,
            Mode::TIntersecting(_) => (x & y) >> t_shift != 0,
            Mode::StCrossing(_) => (x & y) >> t_shift != 0 && (x | y) & s_full != s_full,
        }
    };
    for (i, &x) in candidates.iter().enumerate() {
        for &y in &candidates[i + 1..] {
            if !wanted(x, y) {
                continue;
            }
            let lhs = p.get(x) + p.get(y);
            let rhs = p.get(x & y) + p.get(x | y);
            if lhs > rhs {
                return Ok(Some(SupermodularViolation { x, y, lhs, rhs }));
            }
        }
    }
    Ok(None)
}

/// Convenience wrapper turning a violation into [`Error::NotSupermodular`].
pub fn require_supermodular(p: &SetFunctionTable, mode: Mode<'_>, positively: bool) -> Result<()> {
    match classify_supermodular(p, mode, positively)? {
        None => Ok(()),
        Some(violation) => Err(Error::NotSupermodular {
            mode: mode.name(),
            violation,
        }),
    }
}

/// `𝓗₀`: subsets of `V` that no arc of `H₀` (oriented `S → T`) enters.
#[derive(Debug, Clone)]
pub struct ClosedFamily {
    grounds: Grounds,
    member: Vec<bool>,
}

impl ClosedFamily {
    pub fn new(h0: &Bigraph) -> Self {
        let g = h0.grounds().clone();
        let member = (0..=g.full_v())
            .map(|v| {
                let (x, y) = g.split(v);
                mask::is_subset(h0.gamma(y), x)
            })
            .collect();
        ClosedFamily { grounds: g, member }
    }

    #[inline]
    pub fn contains(&self, v: Mask) -> bool {
        self.member[v as usize]
    }

    pub fn grounds(&self) -> &Grounds {
        &self.grounds
    }

    pub fn members(&self) -> impl Iterator<Item = Mask> + '_ {
        (0..self.member.len() as Mask).filter(|&v| self.contains(v))
    }
}

/// `V_s = {v ∈ V − s : sv ∉ F₀}` as a `V`-mask.
pub fn vs_set(h0: &Bigraph, s: usize) -> Mask {
    let g = h0.grounds();
    g.join(g.full_s() & !(1 << s), g.full_t() & !h0.s_neighbours(s))
}

fn check_instance_grounds(h0: &Bigraph, pt: &SetFunctionTable, rs: &Matroid) -> Result<()> {
    let g = h0.grounds();
    if pt.ground() != g.t_names() {
        return Err(Error::GroundMismatch("p_T must be defined on T".into()));
    }
    if rs.ground() != g.s_names() {
        return Err(Error::GroundMismatch("M_S must be defined on S".into()));
    }
    if !h0.is_simple() {
        return Err(Error::NotSimple);
    }
    Ok(())
}

/// The function `p₀` on `V` built from an instance with degrees on both sides.
pub fn build_p0(
    h0: &Bigraph,
    m: &DegreeSpec,
    pt: &SetFunctionTable,
    rs: &Matroid,
) -> Result<SetFunctionTable> {
    check_instance_grounds(h0, pt, rs)?;
    let g = h0.grounds();
    m.check_grounds(g)?;
    let family = ClosedFamily::new(h0);
    Ok(SetFunctionTable::from_fn(g.v_names(), |v| {
        if !family.contains(v) {
            return 0;
        }
        let (x, y) = g.split(v);
        match y.count_ones() {
            0 => 0,
            1 => {
                let t = y.trailing_zeros() as usize;
                let by_rank = pt.get(y) - rs.rank(x);
                let by_degree =
                    m.m_t()[t] as i64 - mask::card(x) + h0.t_neighbours(t).count_ones() as i64;
                by_rank.max(by_degree)
            }
            _ => pt.get(y) - rs.rank(x),
        }
    }))
}

/// `p₁`: `p₀` raised to `m_S(s)` on each `V_s`.
pub fn build_p1(p0: &SetFunctionTable, h0: &Bigraph, m: &DegreeSpec) -> Result<SetFunctionTable> {
    let g = h0.grounds();
    m.check_grounds(g)?;
    if p0.ground() != g.v_names().as_slice() {
        return Err(Error::GroundMismatch("p₀ must be defined on S ∪ T".into()));
    }
    let mut values = p0.values().to_vec();
    let mut assigned: BTreeMap<Mask, u32> = BTreeMap::new();
    for s in 0..g.s_len() {
        let vs = vs_set(h0, s);
        let d = m.m_s()[s];
        if let Some(prev) = assigned.insert(vs, d) {
            if prev != d {
                return Err(Error::AmbiguousVs);
            }
        }
        values[vs as usize] = d as i64;
    }
    SetFunctionTable::new(g.v_names(), values)
}

/// `p₀` for the variant with degrees prescribed on `S` only.
pub fn build_p0_s_only(
    h0: &Bigraph,
    pt: &SetFunctionTable,
    rs: &Matroid,
) -> Result<SetFunctionTable> {
    check_instance_grounds(h0, pt, rs)?;
    let g = h0.grounds();
    let family = ClosedFamily::new(h0);
    Ok(SetFunctionTable::from_fn(g.v_names(), |v| {
        if family.contains(v) {
            let (x, y) = g.split(v);
            pt.get(y) - rs.rank(x)
        } else {
            0
        }
    }))
}

/// No `ST`-arc enters both `a` and `b` (`V`-masks).
#[inline]
pub fn st_independent_pair(a: Mask, b: Mask, g: &Grounds) -> bool {
    (a & b) >> g.s_len() == 0 || (a | b) & g.full_s() == g.full_s()
}

/// Every two members of the family are `ST`-independent.
pub fn st_independent(family: &[Mask], g: &Grounds) -> bool {
    family.iter().enumerate().all(|(i, &a)| {
        family[i + 1..]
            .iter()
            .all(|&b| st_independent_pair(a, b, g))
    })
}

/// Whether the arc `st` enters the `V`-mask `v`.
#[inline]
pub fn enters(s: usize, t: usize, v: Mask, g: &Grounds) -> bool {
    v >> s & 1 == 0 && v >> (g.s_len() + t) & 1 == 1
}
