//! Exhaustive evaluators for the feasibility conditions. Each one scans its
//! whole inequality family and reports either a pass or the first maximal
//! violation as a [`ViolationCert`]. "First" means smallest `X ∪ Y` read as a
//! node mask with `S` in the low bits, then smallest refinement (partition,
//! or `X′ ∪ Y′` in the same order).

use serde::{Deserialize, Serialize};

use crate::bigraph::{bipartite_complement, sum_table, Bigraph, DegreeSpec, Grounds};
use crate::error::{Error, Result};
use crate::mask::{self, submasks, Mask};
use crate::matroid::Matroid;
use crate::partition::SetPartitions;
use crate::setfun::{classify_supermodular, require_supermodular, Mode, SetFunctionTable};

/// Identifies the inequality family a certificate violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `m̃_S(X) + m̃_T(Y) − d_{G₀}(X,Y) ≤ γ`
    Ore,
    /// Same with `|X||Y|`, i.e. `H₀` empty.
    OreComplete,
    /// Ore plus `Σ [p_T(Tᵢ) − r_S(X ∪ Γ_{H₀}(Tᵢ))]` over a subpartition of `T − Y`.
    Ftgs,
    /// `m_S(s) + d_{H₀}(s) ≤ |T|`; `rhs` is `|T|`.
    DegreeBoundS,
    /// `m̃_S(X) + Σ [p_T(Tᵢ) − r_S(X ∪ Γ_{H₀}(Tᵢ))] ≤ γ` over subpartitions of `T`.
    MsNov,
    /// Ore plus a single `p_T(T₀) − r_S(X ∪ Γ_{H₀}(T₀))`.
    FtgsFully,
    /// Complete-graph Ore plus `p_T(T − Y) − r_S(X)`.
    CsakMatroidMon,
    /// Complete-graph Ore plus `ℓ − |X| − |Y|`.
    Ryser,
    /// `ℓ − r_S(X′) − r_T(Y′) ≤ 0` for vertex covers `X′ ∪ Y′`; `rhs` is 0.
    Brualdi,
    /// Ore plus `ℓ − r_S(X′) − r_T(Y′)` for `X ⊆ X′`, `Y ⊆ Y′` covering `H₀`.
    RyserGen,
    /// Complete-graph Ore plus `ℓ − r_S(X) − r_T(Y)`.
    RyserMatroid,
    /// Complete-graph Ore plus `(ℓ − r_S(X) − r_T(Y))⁺`.
    Integrated,
    /// Ore plus `ℓ − |X′| − |Y′|` for `X ⊆ X′`, `Y ⊆ Y′` covering `H₀`.
    RyserNovel,
    /// `p_T(∅) > 0`: the empty set can never be covered; `lhs = p_T(∅)`, `rhs = 0`.
    EmptyDemand,
}

/// A violated inequality. Masks are local to their side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationCert {
    pub which: Condition,
    pub x: Mask,
    pub y: Mask,
    pub parts: Vec<Mask>,
    pub x_sup: Option<Mask>,
    pub y_sup: Option<Mask>,
    pub lhs: i64,
    pub rhs: i64,
}

impl std::fmt::Display for ViolationCert {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:?} at X={:#b}, Y={:#b}: {} > {}",
            self.which, self.x, self.y, self.lhs, self.rhs
        )
    }
}

impl ViolationCert {
    fn new(which: Condition, x: Mask, y: Mask, lhs: i64, rhs: i64) -> Self {
        ViolationCert {
            which,
            x,
            y,
            parts: Vec::new(),
            x_sup: None,
            y_sup: None,
            lhs,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub violation: Option<ViolationCert>,
    /// Number of inequalities evaluated.
    pub evaluated: u64,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    fn pass(evaluated: u64) -> Self {
        Verdict {
            violation: None,
            evaluated,
        }
    }

    fn fail(cert: ViolationCert, evaluated: u64) -> Self {
        Verdict {
            violation: Some(cert),
            evaluated,
        }
    }
}

/// Maximum of a scanned inequality family together with its first maximiser.
#[derive(Debug, Clone)]
pub struct Scan {
    pub max_lhs: i64,
    pub argmax: Option<ViolationCert>,
    pub evaluated: u64,
    pub rhs: i64,
}

impl Scan {
    fn new(rhs: i64) -> Self {
        Scan {
            max_lhs: i64::MIN,
            argmax: None,
            evaluated: 0,
            rhs,
        }
    }

    #[inline]
    fn offer(&mut self, lhs: i64, cert: impl FnOnce() -> ViolationCert) {
        self.evaluated += 1;
        if lhs > self.max_lhs {
            self.max_lhs = lhs;
            self.argmax = Some(cert());
        }
    }

    pub fn violated(&self) -> bool {
        self.max_lhs > self.rhs
    }

    pub fn into_violation(self) -> Option<ViolationCert> {
        if self.violated() {
            self.argmax
        } else {
            None
        }
    }

    fn verdict(self, evaluated_before: u64) -> Verdict {
        let evaluated = evaluated_before + self.evaluated;
        match self.into_violation() {
            Some(c) => Verdict::fail(c, evaluated),
            None => Verdict::pass(evaluated),
        }
    }
}

/// Degrees on both sides, or on `S` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degrees {
    Full(DegreeSpec),
    SOnly(Vec<u32>),
}

/// Everything a feasibility question can mention.
#[derive(Debug, Clone)]
pub struct Instance {
    grounds: Grounds,
    h0: Bigraph,
    g0: Bigraph,
    degrees: Degrees,
    ms: Matroid,
    pt: SetFunctionTable,
    mt: Option<Matroid>,
    ell: Option<usize>,
}

impl Instance {
    pub fn new(h0: Bigraph, degrees: Degrees, ms: Matroid, pt: SetFunctionTable) -> Result<Self> {
        let grounds = h0.grounds().clone();
        let g0 = bipartite_complement(&h0)?;
        match &degrees {
            Degrees::Full(m) => m.check_grounds(&grounds)?,
            Degrees::SOnly(ms) if ms.len() != grounds.s_len() => {
                return Err(Error::GroundMismatch("m_S length".into()))
            }
            Degrees::SOnly(_) => {}
        }
        if ms.ground() != grounds.s_names() {
            return Err(Error::GroundMismatch("M_S must live on S".into()));
        }
        if pt.ground() != grounds.t_names() {
            return Err(Error::GroundMismatch("p_T must live on T".into()));
        }
        Ok(Instance {
            grounds,
            h0,
            g0,
            degrees,
            ms,
            pt,
            mt: None,
            ell: None,
        })
    }

    /// Term-rank instance: `p_T` is the co-rank of `mt`, `ℓ` defaults to `r_S(S)`.
    pub fn term_rank(
        h0: Bigraph,
        m: DegreeSpec,
        ms: Matroid,
        mt: Matroid,
        ell: Option<usize>,
    ) -> Result<Self> {
        if mt.ground() != h0.grounds().t_names() {
            return Err(Error::GroundMismatch("M_T must live on T".into()));
        }
        let max = ms.full_rank().min(mt.full_rank());
        let ell = ell.unwrap_or(ms.full_rank());
        if ell > max {
            return Err(Error::TargetRankTooLarge { ell, max });
        }
        let pt = mt.corank_table();
        let mut inst = Instance::new(h0, Degrees::Full(m), ms, pt)?;
        inst.mt = Some(mt);
        inst.ell = Some(ell);
        Ok(inst)
    }

    pub fn grounds(&self) -> &Grounds {
        &self.grounds
    }

    pub fn h0(&self) -> &Bigraph {
        &self.h0
    }

    /// Bipartite complement of `H₀`.
    pub fn g0(&self) -> &Bigraph {
        &self.g0
    }

    pub fn degrees(&self) -> &Degrees {
        &self.degrees
    }

    pub fn full_degrees(&self) -> Result<&DegreeSpec> {
        match &self.degrees {
            Degrees::Full(m) => Ok(m),
            Degrees::SOnly(_) => Err(Error::MissingDegreesT),
        }
    }

    pub fn m_s(&self) -> &[u32] {
        match &self.degrees {
            Degrees::Full(m) => m.m_s(),
            Degrees::SOnly(v) => v,
        }
    }

    pub fn gamma(&self) -> i64 {
        self.m_s().iter().map(|&d| d as i64).sum()
    }

    pub fn ms(&self) -> &Matroid {
        &self.ms
    }

    pub fn pt(&self) -> &SetFunctionTable {
        &self.pt
    }

    pub fn mt(&self) -> Option<&Matroid> {
        self.mt.as_ref()
    }

    pub fn ell(&self) -> Option<usize> {
        self.ell
    }
}

/// `m̃_S(X) + m̃_T(Y) − d(X, Y)` for all `X`, `Y`, with `d` taken in `g0`.
struct BaseTable {
    nt: usize,
    values: Vec<i64>,
}

impl BaseTable {
    fn new(g0: &Bigraph, m: &DegreeSpec) -> Self {
        let g = g0.grounds();
        let (ns, nt) = (g.s_len(), g.t_len());
        let ss = sum_table(m.m_s());
        let st = sum_table(m.m_t());
        let mut values = vec![0i64; 1 << (ns + nt)];
        for y in 0..=g.full_t() {
            for x in 0..=g.full_s() {
                let d: i64 = mask::bits(y)
                    .map(|t| mask::card(g0.t_neighbours(t) & x))
                    .sum();
                values[(x as usize) << nt | y as usize] = ss[x as usize] + st[y as usize] - d;
            }
        }
        BaseTable { nt, values }
    }

    fn complete(g: &Grounds, m: &DegreeSpec) -> Self {
        BaseTable::new(&Bigraph::complete(g.clone()), m)
    }

    #[inline]
    fn get(&self, x: Mask, y: Mask) -> i64 {
        self.values[(x as usize) << self.nt | y as usize]
    }
}

fn scan_base(g: &Grounds, base: &BaseTable, gamma: i64, which: Condition) -> Scan {
    let mut scan = Scan::new(gamma);
    for y in 0..=g.full_t() {
        for x in 0..=g.full_s() {
            let lhs = base.get(x, y);
            scan.offer(lhs, || ViolationCert::new(which, x, y, lhs, gamma));
        }
    }
    scan
}

fn empty_demand(pt: &SetFunctionTable) -> Option<ViolationCert> {
    let v = pt.get(0);
    (v > 0).then(|| ViolationCert::new(Condition::EmptyDemand, 0, 0, v, 0))
}

/// Ore: a subgraph of `g0` fitting `m` exists iff this passes.
pub fn check_ore(g0: &Bigraph, m: &DegreeSpec) -> Result<Verdict> {
    if !g0.is_simple() {
        return Err(Error::NotSimple);
    }
    m.check_grounds(g0.grounds())?;
    let base = BaseTable::new(g0, m);
    Ok(scan_base(g0.grounds(), &base, m.gamma(), Condition::Ore).verdict(0))
}

/// Ore on the complete bigraph: `𝒢(m_S, m_T)` is non-empty iff this passes.
pub fn check_ore_complete(g: &Grounds, m: &DegreeSpec) -> Result<Verdict> {
    m.check_grounds(g)?;
    let base = BaseTable::complete(g, m);
    Ok(scan_base(g, &base, m.gamma(), Condition::OreComplete).verdict(0))
}

/// Partitions of every subset of `T`, grouped in increasing subset order.
fn all_subpartitions(full_t: Mask) -> Vec<(Mask, Vec<Mask>)> {
    submasks(full_t)
        .flat_map(|u| SetPartitions::new(u).map(move |p| (u, p)))
        .collect()
}

fn all_part_weights(inst: &Instance) -> Vec<Vec<i64>> {
    (0..=inst.grounds.full_s())
        .map(|x| part_weights(inst, x))
        .collect()
}

/// `p_T(Z) − r_S(X ∪ Γ_{H₀}(Z))` for every `Z ⊆ T`.
fn part_weights(inst: &Instance, x: Mask) -> Vec<i64> {
    (0..=inst.grounds.full_t())
        .map(|z| inst.pt.get(z) - inst.ms.rank(x | inst.h0.gamma(z)))
        .collect()
}

/// Best subpartition value for each `U`, skipping parts with non-positive weight.
fn scan_subpartitions<'a>(
    subparts: &'a [(Mask, Vec<Mask>)],
    weights: &'a [i64],
    within: Mask,
) -> impl Iterator<Item = (i64, &'a [Mask])> + 'a {
    subparts
        .iter()
        .filter(move |(u, _)| mask::is_subset(*u, within))
        .filter(move |(_, parts)| parts.iter().all(|&z| weights[z as usize] > 0))
        .map(move |(_, parts)| {
            (
                parts.iter().map(|&z| weights[z as usize]).sum::<i64>(),
                parts.as_slice(),
            )
        })
}

/// Main condition with degrees on both sides.
pub fn check_msmt(inst: &Instance) -> Result<Verdict> {
    let m = inst.full_degrees()?;
    require_supermodular(&inst.pt, Mode::Intersecting, true)?;
    if let Some(c) = empty_demand(&inst.pt) {
        return Ok(Verdict::fail(c, 0));
    }
    let g = &inst.grounds;
    let gamma = m.gamma();
    let base = BaseTable::new(&inst.g0, m);
    let subparts = all_subpartitions(g.full_t());
    let mut scan = Scan::new(gamma);
    let weights = all_part_weights(inst);
    for y in 0..=g.full_t() {
        for x in 0..=g.full_s() {
            let w = &weights[x as usize];
            let b = base.get(x, y);
            for (extra, parts) in scan_subpartitions(&subparts, w, g.full_t() & !y) {
                let lhs = b + extra;
                scan.offer(lhs, || ViolationCert {
                    parts: parts.to_vec(),
                    ..ViolationCert::new(Condition::Ftgs, x, y, lhs, gamma)
                });
            }
        }
    }
    Ok(scan.verdict(0))
}

/// Variant with degrees prescribed on `S` only.
pub fn check_ms_only(inst: &Instance) -> Result<Verdict> {
    require_supermodular(&inst.pt, Mode::Intersecting, true)?;
    if let Some(c) = empty_demand(&inst.pt) {
        return Ok(Verdict::fail(c, 0));
    }
    let g = &inst.grounds;
    let nt = g.t_len() as i64;
    let m_s = inst.m_s();
    for (s, &d) in m_s.iter().enumerate() {
        let lhs = d as i64 + inst.h0.degree_s(s) as i64;
        if lhs > nt {
            return Ok(Verdict::fail(
                ViolationCert::new(Condition::DegreeBoundS, 1 << s, 0, lhs, nt),
                s as u64 + 1,
            ));
        }
    }
    let gamma = inst.gamma();
    let sums = sum_table(m_s);
    let subparts = all_subpartitions(g.full_t());
    let mut scan = Scan::new(gamma);
    for x in 0..=g.full_s() {
        let w = part_weights(inst, x);
        for (extra, parts) in scan_subpartitions(&subparts, &w, g.full_t()) {
            let lhs = sums[x as usize] + extra;
            scan.offer(lhs, || ViolationCert {
                parts: parts.to_vec(),
                ..ViolationCert::new(Condition::MsNov, x, 0, lhs, gamma)
            });
        }
    }
    Ok(scan.verdict(m_s.len() as u64))
}

/// Single-set condition for fully supermodular `p_T`.
pub fn check_fully(inst: &Instance) -> Result<Verdict> {
    let m = inst.full_degrees()?;
    require_supermodular(&inst.pt, Mode::Full, false)?;
    if let Some(c) = empty_demand(&inst.pt) {
        return Ok(Verdict::fail(c, 0));
    }
    let g = &inst.grounds;
    let gamma = m.gamma();
    let base = BaseTable::new(&inst.g0, m);
    let ore = scan_base(g, &base, gamma, Condition::Ore);
    let before = ore.evaluated;
    if let Some(c) = ore.into_violation() {
        return Ok(Verdict::fail(c, before));
    }
    let mut scan = Scan::new(gamma);
    let weights = all_part_weights(inst);
    for y in 0..=g.full_t() {
        for x in 0..=g.full_s() {
            let w = &weights[x as usize];
            let b = base.get(x, y);
            for t0 in submasks(g.full_t() & !y) {
                let lhs = b + w[t0 as usize];
                scan.offer(lhs, || ViolationCert {
                    parts: if t0 == 0 { vec![] } else { vec![t0] },
                    ..ViolationCert::new(Condition::FtgsFully, x, y, lhs, gamma)
                });
            }
        }
    }
    Ok(scan.verdict(before))
}

/// Simplified form for `H₀` empty and monotone fully supermodular `p_T`:
/// complete-graph Ore plus `T₀ = T − Y`.
pub fn check_csak_matroid_mon(
    g: &Grounds,
    m: &DegreeSpec,
    ms: &Matroid,
    pt: &SetFunctionTable,
) -> Result<Verdict> {
    m.check_grounds(g)?;
    if !pt.is_monotone() {
        return Err(Error::Unsupported("this form needs a monotone p_T".into()));
    }
    require_supermodular(pt, Mode::Full, false)?;
    if let Some(c) = empty_demand(pt) {
        return Ok(Verdict::fail(c, 0));
    }
    let gamma = m.gamma();
    let base = BaseTable::complete(g, m);
    let ore = scan_base(g, &base, gamma, Condition::OreComplete);
    let before = ore.evaluated;
    if let Some(c) = ore.into_violation() {
        return Ok(Verdict::fail(c, before));
    }
    let mut scan = Scan::new(gamma);
    for y in 0..=g.full_t() {
        for x in 0..=g.full_s() {
            let lhs = base.get(x, y) + pt.get(g.full_t() & !y) - ms.rank(x);
            scan.offer(lhs, || {
                ViolationCert::new(Condition::CsakMatroidMon, x, y, lhs, gamma)
            });
        }
    }
    Ok(scan.verdict(before))
}

fn require_ore_complete(g: &Grounds, m: &DegreeSpec) -> Result<u64> {
    let v = check_ore_complete(g, m)?;
    match v.violation {
        Some(c) => Err(Error::NoSimpleRealization(Box::new(c))),
        None => Ok(v.evaluated),
    }
}

/// Ryser inequality over every `X ⊆ S`, `Y ⊆ T`.
pub fn ryser_full(g: &Grounds, m: &DegreeSpec, ell: usize) -> Scan {
    let base = BaseTable::complete(g, m);
    let gamma = m.gamma();
    let mut scan = Scan::new(gamma);
    for y in 0..=g.full_t() {
        for x in 0..=g.full_s() {
            let lhs = base.get(x, y) + ell as i64 - mask::card(x) - mask::card(y);
            scan.offer(lhs, || {
                ViolationCert::new(Condition::Ryser, x, y, lhs, gamma)
            });
        }
    }
    scan
}

/// Indices sorted by decreasing degree, ties by index.
fn by_decreasing(values: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(values[i]), i));
    idx
}

/// Ryser inequality restricted to `X` = the `i` largest `m_S` values and
/// `Y` = the `j` largest `m_T` values.
pub fn ryser_prefix(g: &Grounds, m: &DegreeSpec, ell: usize) -> Scan {
    let gamma = m.gamma();
    let os = by_decreasing(m.m_s());
    let ot = by_decreasing(m.m_t());
    let mut scan = Scan::new(gamma);
    let mut x: Mask = 0;
    let mut sx = 0i64;
    for i in 0..=g.s_len() {
        if i > 0 {
            x |= 1 << os[i - 1];
            sx += m.m_s()[os[i - 1]] as i64;
        }
        let mut y: Mask = 0;
        let mut sy = 0i64;
        for j in 0..=g.t_len() {
            if j > 0 {
                y |= 1 << ot[j - 1];
                sy += m.m_t()[ot[j - 1]] as i64;
            }
            let lhs = sx + sy - (i * j) as i64 + ell as i64 - i as i64 - j as i64;
            scan.offer(lhs, || {
                ViolationCert::new(Condition::Ryser, x, y, lhs, gamma)
            });
        }
    }
    scan
}

/// Classic Ryser condition: some member of `𝒢(m_S, m_T)` has `ν ≥ ℓ`.
/// Runs both the full and the sorted-prefix scan and insists they agree.
pub fn check_ryser(g: &Grounds, m: &DegreeSpec, ell: usize) -> Result<Verdict> {
    m.check_grounds(g)?;
    if ell > g.t_len() {
        return Err(Error::RankOutOfRange {
            k: ell,
            n: g.t_len(),
        });
    }
    let before = require_ore_complete(g, m)?;
    let full = ryser_full(g, m, ell);
    let prefix = ryser_prefix(g, m, ell);
    if full.max_lhs != prefix.max_lhs {
        return Err(Error::Inconsistent(format!(
            "Ryser full scan max {} vs prefix scan max {}",
            full.max_lhs, prefix.max_lhs
        )));
    }
    Ok(full.verdict(before))
}

fn ranks_match(ms: &Matroid, mt: &Matroid, ell: usize) -> Result<()> {
    let (rs, rt) = (ms.full_rank(), mt.full_rank());
    if rs != ell || rt != ell {
        return Err(Error::RankMismatch { rs, rt, ell });
    }
    Ok(())
}

fn check_sides(g: &Grounds, ms: &Matroid, mt: &Matroid) -> Result<()> {
    if ms.ground() != g.s_names() || mt.ground() != g.t_names() {
        return Err(Error::GroundMismatch(
            "matroids must live on S and T".into(),
        ));
    }
    Ok(())
}

/// Vertex-cover form of the matroidal matching condition.
pub fn brualdi_cover_form(gplus: &Bigraph, ms: &Matroid, mt: &Matroid, ell: usize) -> Scan {
    let g = gplus.grounds();
    let mut scan = Scan::new(0);
    for yp in 0..=g.full_t() {
        for xp in 0..=g.full_s() {
            if !mask::is_subset(gplus.gamma(g.full_t() & !yp), xp) {
                continue;
            }
            let lhs = ell as i64 - ms.rank(xp) - mt.rank(yp);
            scan.offer(lhs, || ViolationCert {
                x_sup: Some(xp),
                y_sup: Some(yp),
                ..ViolationCert::new(Condition::Brualdi, 0, 0, lhs, 0)
            });
        }
    }
    scan
}

/// First `Y` with `r_S(Γ(Y)) < p_T(Y)`, `p_T` the co-rank of `mt`.
pub fn brualdi_neighbour_form(gplus: &Bigraph, ms: &Matroid, mt: &Matroid) -> Option<Mask> {
    (0..=gplus.grounds().full_t()).find(|&y| ms.rank(gplus.gamma(y)) < mt.corank_of(y))
}

/// A matching of `gplus` covering bases of both matroids exists iff this passes.
pub fn check_brualdi(gplus: &Bigraph, ms: &Matroid, mt: &Matroid) -> Result<Verdict> {
    let g = gplus.grounds();
    check_sides(g, ms, mt)?;
    let ell = ms.full_rank();
    ranks_match(ms, mt, ell)?;
    let cover = brualdi_cover_form(gplus, ms, mt, ell);
    let neighbour = brualdi_neighbour_form(gplus, ms, mt);
    if cover.violated() != neighbour.is_some() {
        return Err(Error::Inconsistent(format!(
            "vertex-cover form says {}, neighbourhood form says {}",
            cover.violated(),
            neighbour.is_some()
        )));
    }
    Ok(cover.verdict(0))
}

/// `ℓ − r_S(X′) − r_T(Y′)` minimised over covers `X′ ⊇ X`, `Y′ ⊇ Y` of `H₀`,
/// generic in the rank functions.
#[allow(clippy::too_many_arguments)]
fn scan_cover_pairs(
    inst_g: &Grounds,
    h0: &Bigraph,
    base: &BaseTable,
    gamma: i64,
    ell: i64,
    which: Condition,
    rs: impl Fn(Mask) -> i64,
    rt: impl Fn(Mask) -> i64,
) -> Scan {
    let g = inst_g;
    let (fs, ft) = (g.full_s(), g.full_t());
    let mut scan = Scan::new(gamma);
    for y in 0..=ft {
        for x in 0..=fs {
            let b = base.get(x, y);
            for yp in submasks(ft & !y).map(|e| e | y) {
                for xp in submasks(fs & !x).map(|e| e | x) {
                    if !mask::is_subset(h0.gamma(ft & !yp), xp) {
                        continue;
                    }
                    let lhs = b + ell - rs(xp) - rt(yp);
                    scan.offer(lhs, || ViolationCert {
                        x_sup: Some(xp),
                        y_sup: Some(yp),
                        ..ViolationCert::new(which, x, y, lhs, gamma)
                    });
                }
            }
        }
    }
    scan
}

/// Augmentation with a matching covering bases of `M_S` and `M_T`.
/// Also evaluates the single-set reformulation with `p_T` = co-rank of `M_T`
/// and insists both give the same maximum.
pub fn check_ryser_gen(inst: &Instance) -> Result<Verdict> {
    let m = inst.full_degrees()?;
    let mt = inst.mt.as_ref().ok_or(Error::MissingMatroidT)?;
    let g = &inst.grounds;
    let ell = inst.ell.unwrap_or(inst.ms.full_rank());
    ranks_match(&inst.ms, mt, ell)?;
    let gamma = m.gamma();
    let base = BaseTable::new(&inst.g0, m);
    let ore = scan_base(g, &base, gamma, Condition::Ore);
    let before = ore.evaluated;
    if let Some(c) = ore.into_violation() {
        return Ok(Verdict::fail(c, before));
    }
    let gen = scan_cover_pairs(
        g,
        &inst.h0,
        &base,
        gamma,
        ell as i64,
        Condition::RyserGen,
        |a| inst.ms.rank(a),
        |b| mt.rank(b),
    );
    // ℓ − r_T(T − T₀) − r_S(X ∪ Γ_{H₀}(T₀))
    let ft = g.full_t();
    let mut regi = i64::MIN;
    for y in 0..=ft {
        for x in 0..=g.full_s() {
            for t0 in submasks(ft & !y) {
                let lhs = base.get(x, y) + ell as i64
                    - mt.rank(ft & !t0)
                    - inst.ms.rank(x | inst.h0.gamma(t0));
                regi = regi.max(lhs);
            }
        }
    }
    if regi != gen.max_lhs {
        return Err(Error::Inconsistent(format!(
            "cover-pair scan max {} vs single-set scan max {regi}",
            gen.max_lhs
        )));
    }
    Ok(gen.verdict(before))
}

/// `H₀ = ∅` form: `m̃_S(X) + m̃_T(Y) − |X||Y| + ℓ − r_S(X) − r_T(Y) ≤ γ`.
/// Assumes `𝒢(m_S, m_T)` non-empty and errors otherwise.
pub fn check_ryser_matroid(
    g: &Grounds,
    m: &DegreeSpec,
    ms: &Matroid,
    mt: &Matroid,
) -> Result<Verdict> {
    m.check_grounds(g)?;
    check_sides(g, ms, mt)?;
    let ell = ms.full_rank();
    ranks_match(ms, mt, ell)?;
    let before = require_ore_complete(g, m)?;
    Ok(ryser_matroid_scan(g, m, ms, mt, ell, false).verdict(before))
}

fn ryser_matroid_scan(
    g: &Grounds,
    m: &DegreeSpec,
    ms: &Matroid,
    mt: &Matroid,
    ell: usize,
    positive_part: bool,
) -> Scan {
    let base = BaseTable::complete(g, m);
    let gamma = m.gamma();
    let which = if positive_part {
        Condition::Integrated
    } else {
        Condition::RyserMatroid
    };
    let mut scan = Scan::new(gamma);
    for y in 0..=g.full_t() {
        for x in 0..=g.full_s() {
            let mut extra = ell as i64 - ms.rank(x) - mt.rank(y);
            if positive_part {
                extra = extra.max(0);
            }
            let lhs = base.get(x, y) + extra;
            scan.offer(lhs, || ViolationCert::new(which, x, y, lhs, gamma));
        }
    }
    scan
}

/// Single inequality merging complete-graph Ore with the `H₀ = ∅` matroid form.
pub fn check_integrated(
    g: &Grounds,
    m: &DegreeSpec,
    ms: &Matroid,
    mt: &Matroid,
) -> Result<Verdict> {
    m.check_grounds(g)?;
    check_sides(g, ms, mt)?;
    let ell = ms.full_rank();
    ranks_match(ms, mt, ell)?;
    let merged = ryser_matroid_scan(g, m, ms, mt, ell, true);
    let ore = check_ore_complete(g, m)?;
    let plain = ryser_matroid_scan(g, m, ms, mt, ell, false);
    if merged.violated() != (!ore.passed() || plain.violated()) {
        return Err(Error::Inconsistent(
            "merged inequality disagrees with Ore ∧ matroid form".into(),
        ));
    }
    Ok(merged.verdict(0))
}

/// Uniform-matroid specialisation: `ℓ − |X′| − |Y′|` in place of the ranks.
pub fn check_ryser_novel(h0: &Bigraph, m: &DegreeSpec, ell: usize) -> Result<Verdict> {
    let g = h0.grounds();
    m.check_grounds(g)?;
    let g0 = bipartite_complement(h0)?;
    let gamma = m.gamma();
    let base = BaseTable::new(&g0, m);
    let ore = scan_base(g, &base, gamma, Condition::Ore);
    let before = ore.evaluated;
    if let Some(c) = ore.into_violation() {
        return Ok(Verdict::fail(c, before));
    }
    Ok(scan_cover_pairs(
        g,
        h0,
        &base,
        gamma,
        ell as i64,
        Condition::RyserNovel,
        mask::card,
        mask::card,
    )
    .verdict(before))
}

/// Whether `pt` satisfies the classifier precondition of [`check_msmt`].
pub fn pt_is_admissible(pt: &SetFunctionTable) -> bool {
    matches!(
        classify_supermodular(pt, Mode::Intersecting, true),
        Ok(None)
    )
}
