//! Instance and result files, and the check/solve drivers behind the CLI.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bigraph::{bipartite_complement, Bigraph, DegreeSpec, Edge, Grounds};
use crate::cover::{self, find_matching_covering_bases, first_fitting, Route};
use crate::error::Error;
use crate::feasibility::{self, Condition, Degrees, Instance, Verdict, ViolationCert};
use crate::matroid::{Matroid, MatroidDescriptor};
use crate::setfun::{SetFunctionJson, SetFunctionTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum ModeTag {
    Ore,
    Msmt,
    MsOnly,
    Fully,
    Ryser,
    Brualdi,
    RyserGen,
}

impl ModeTag {
    pub const ALL: [ModeTag; 7] = [
        ModeTag::Ore,
        ModeTag::Msmt,
        ModeTag::MsOnly,
        ModeTag::Fully,
        ModeTag::Ryser,
        ModeTag::Brualdi,
        ModeTag::RyserGen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModeTag::Ore => "ore",
            ModeTag::Msmt => "msmt",
            ModeTag::MsOnly => "ms_only",
            ModeTag::Fully => "fully",
            ModeTag::Ryser => "ryser",
            ModeTag::Brualdi => "brualdi",
            ModeTag::RyserGen => "ryser_gen",
        }
    }

    pub fn parse(s: &str) -> Option<ModeTag> {
        ModeTag::ALL.into_iter().find(|m| m.name() == s)
    }
}

impl std::fmt::Display for ModeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// On-disk instance. For `brualdi`, `h0` holds the graph `G⁺` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub mode: ModeTag,
    pub s: Vec<String>,
    pub t: Vec<String>,
    #[serde(default)]
    pub h0: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_s: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_t: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid_s: Option<MatroidDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid_t: Option<MatroidDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_t: Option<SetFunctionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
}

/// Why a file could not be processed.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Unreadable, malformed or invalid input.
    Input(String),
    /// Two routes that must agree did not.
    Internal(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

fn at(path: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| match e {
        Error::Inconsistent(_) | Error::MinMaxGap { .. } => Failure::Internal(e.to_string()),
        e => Failure::Input(format!("{path}: {e}")),
    }
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, Failure> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Failure::Input(format!("{path}: {}", e.into_inner()))
    })
}

/// A parsed file with everything resolved against its grounds.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub mode: ModeTag,
    pub grounds: Grounds,
    pub h0: Bigraph,
    pub m_s: Option<Vec<u32>>,
    pub m_t: Option<Vec<u32>>,
    pub ms: Option<Matroid>,
    pub mt: Option<Matroid>,
    pub pt: Option<SetFunctionTable>,
    pub ell: Option<usize>,
}

fn degree_vec(
    path: &str,
    map: &BTreeMap<String, u32>,
    names: &[String],
) -> Result<Vec<u32>, Failure> {
    if let Some(k) = map.keys().find(|k| !names.contains(k)) {
        return Err(Failure::Input(format!(
            "{path}.{k}: not a node of this side"
        )));
    }
    names
        .iter()
        .map(|n| {
            map.get(n)
                .copied()
                .ok_or_else(|| Failure::Input(format!("{path}: missing degree for `{n}`")))
        })
        .collect()
}

impl InstanceFile {
    pub fn load(&self, cap: usize) -> Result<Loaded, Failure> {
        let grounds = Grounds::with_cap(self.s.clone(), self.t.clone(), cap).map_err(at("s/t"))?;
        let mut edges = Vec::with_capacity(self.h0.len());
        for (i, (a, b)) in self.h0.iter().enumerate() {
            let s = grounds
                .s_index(a)
                .ok_or_else(|| Failure::Input(format!("h0[{i}][0]: `{a}` is not in s")))?;
            let t = grounds
                .t_index(b)
                .ok_or_else(|| Failure::Input(format!("h0[{i}][1]: `{b}` is not in t")))?;
            edges.push((s, t));
        }
        let h0 = Bigraph::new(grounds.clone(), edges).map_err(at("h0"))?;
        if !h0.is_simple() {
            return Err(Failure::Input("h0: repeated edge".into()));
        }
        let m_s = self
            .m_s
            .as_ref()
            .map(|m| degree_vec("m_s", m, grounds.s_names()))
            .transpose()?;
        let m_t = self
            .m_t
            .as_ref()
            .map(|m| degree_vec("m_t", m, grounds.t_names()))
            .transpose()?;
        let ms = self
            .matroid_s
            .as_ref()
            .map(|d| d.build(grounds.s_names()))
            .transpose()
            .map_err(at("matroid_s"))?;
        let mt = self
            .matroid_t
            .as_ref()
            .map(|d| d.build(grounds.t_names()))
            .transpose()
            .map_err(at("matroid_t"))?;
        let pt = self
            .p_t
            .as_ref()
            .map(|p| p.to_table(grounds.t_names()))
            .transpose()
            .map_err(at("p_t"))?;
        Ok(Loaded {
            mode: self.mode,
            grounds,
            h0,
            m_s,
            m_t,
            ms,
            mt,
            pt,
            ell: self.ell,
        })
    }

    /// Writes an instance back out, naming matroids by their descriptors.
    pub fn from_instance(mode: ModeTag, inst: &Instance) -> Self {
        let g = inst.grounds();
        let named = |names: &[String], vals: &[u32]| -> BTreeMap<String, u32> {
            names.iter().cloned().zip(vals.iter().copied()).collect()
        };
        let (m_t, m_s) = match inst.degrees() {
            Degrees::Full(m) => (
                Some(named(g.t_names(), m.m_t())),
                named(g.s_names(), m.m_s()),
            ),
            Degrees::SOnly(v) => (None, named(g.s_names(), v)),
        };
        InstanceFile {
            mode,
            s: g.s_names().to_vec(),
            t: g.t_names().to_vec(),
            h0: inst.h0().named_edges(),
            m_s: Some(m_s),
            m_t,
            matroid_s: Some(MatroidDescriptor::describe(inst.ms())),
            matroid_t: inst.mt().map(MatroidDescriptor::describe),
            p_t: if inst.mt().is_some() {
                None
            } else {
                Some(SetFunctionJson::from(inst.pt()))
            },
            ell: inst.ell(),
        }
    }
}

impl Loaded {
    fn need_m_s(&self) -> Result<Vec<u32>, Failure> {
        self.m_s
            .clone()
            .ok_or_else(|| Failure::Input("m_s: required for this mode".into()))
    }

    fn full_degrees(&self) -> Result<DegreeSpec, Failure> {
        let m_s = self.need_m_s()?;
        let m_t = self
            .m_t
            .clone()
            .ok_or_else(|| Failure::Input("m_t: required for this mode".into()))?;
        DegreeSpec::new(m_s, m_t).map_err(at("m_s/m_t"))
    }

    fn ms_or_free(&self) -> Matroid {
        self.ms
            .clone()
            .unwrap_or_else(|| Matroid::free(self.grounds.s_names().to_vec()))
    }

    fn need_ms(&self) -> Result<Matroid, Failure> {
        self.ms
            .clone()
            .ok_or_else(|| Failure::Input("matroid_s: required for this mode".into()))
    }

    fn need_mt(&self) -> Result<Matroid, Failure> {
        self.mt
            .clone()
            .ok_or_else(|| Failure::Input("matroid_t: required for this mode".into()))
    }

    fn need_ell(&self) -> Result<usize, Failure> {
        self.ell
            .ok_or_else(|| Failure::Input("ell: required for this mode".into()))
    }

    /// `p_T` from `p_t`, else the co-rank of `matroid_t`, else zero.
    fn demand(&self) -> Result<SetFunctionTable, Failure> {
        match (&self.pt, &self.mt) {
            (Some(_), Some(_)) => Err(Failure::Input(
                "p_t: give either p_t or matroid_t, not both".into(),
            )),
            (Some(p), None) => Ok(p.clone()),
            (None, Some(m)) => Ok(m.corank_table()),
            (None, None) => Ok(SetFunctionTable::zero(self.grounds.t_names().to_vec())),
        }
    }

    /// Instance for the modes built around `p_T`.
    pub fn instance(&self) -> Result<Instance, Failure> {
        match self.mode {
            ModeTag::MsOnly => {
                if self.m_t.is_some() {
                    return Err(Failure::Input("m_t: not allowed in ms_only mode".into()));
                }
                let m_s = self.need_m_s()?;
                Instance::new(
                    self.h0.clone(),
                    Degrees::SOnly(m_s),
                    self.ms_or_free(),
                    self.demand()?,
                )
                .map_err(at("instance"))
            }
            ModeTag::RyserGen => Instance::term_rank(
                self.h0.clone(),
                self.full_degrees()?,
                self.need_ms()?,
                self.need_mt()?,
                self.ell,
            )
            .map_err(at("instance")),
            ModeTag::Ryser => {
                let ell = self.need_ell()?;
                let g = &self.grounds;
                let ms = Matroid::uniform(g.s_names().to_vec(), ell).map_err(at("ell"))?;
                let mt = Matroid::uniform(g.t_names().to_vec(), ell).map_err(at("ell"))?;
                Instance::term_rank(self.h0.clone(), self.full_degrees()?, ms, mt, Some(ell))
                    .map_err(at("instance"))
            }
            _ => Instance::new(
                self.h0.clone(),
                Degrees::Full(self.full_degrees()?),
                self.ms_or_free(),
                self.demand()?,
            )
            .map_err(at("instance")),
        }
    }
}

/// A violated inequality with sets given by node ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCert {
    pub condition: Condition,
    pub x: Vec<String>,
    pub y: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_sup: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_sup: Option<Vec<String>>,
    pub lhs: i64,
    pub rhs: i64,
}

impl NamedCert {
    pub fn new(c: &ViolationCert, g: &Grounds) -> Self {
        NamedCert {
            condition: c.which,
            x: g.s_subset_names(c.x),
            y: g.t_subset_names(c.y),
            parts: c.parts.iter().map(|&p| g.t_subset_names(p)).collect(),
            x_sup: c.x_sup.map(|m| g.s_subset_names(m)),
            y_sup: c.y_sup.map(|m| g.t_subset_names(m)),
            lhs: c.lhs,
            rhs: c.rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictTag {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub evaluated: u64,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub mode: ModeTag,
    pub verdict: VerdictTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<NamedCert>,
    pub stats: Stats,
}

impl ResultFile {
    pub fn feasible(&self) -> bool {
        self.verdict == VerdictTag::Feasible
    }
}

fn named(g: &Grounds, edges: &[Edge]) -> Vec<(String, String)> {
    edges
        .iter()
        .map(|&(s, t)| (g.s_names()[s].clone(), g.t_names()[t].clone()))
        .collect()
}

/// What a driver found before it is wrapped into a [`ResultFile`].
enum Outcome {
    Witness(Bigraph, Option<Vec<Edge>>),
    Cert(ViolationCert),
}

fn verdict_or_witness(
    verdict: Verdict,
    witness: impl FnOnce() -> Result<Option<(Bigraph, Option<Vec<Edge>>)>, Failure>,
) -> Result<(Outcome, u64), Failure> {
    let evaluated = verdict.evaluated;
    match verdict.violation {
        Some(c) => Ok((Outcome::Cert(c), evaluated)),
        None => match witness()? {
            Some((g, m)) => Ok((Outcome::Witness(g, m), evaluated)),
            None => Err(Failure::Internal(
                "condition holds but no witness was found".into(),
            )),
        },
    }
}

/// `Ore.felt.0` failing is itself an infeasibility certificate.
fn ryser_verdict(r: crate::Result<Verdict>) -> Result<Verdict, Failure> {
    match r {
        Err(Error::NoSimpleRealization(c)) => Ok(Verdict {
            violation: Some(*c),
            evaluated: 0,
        }),
        other => other.map_err(at("instance")),
    }
}

/// A graph and, for term-rank modes, its basis matching.
type WitnessParts = (Bigraph, Option<Vec<Edge>>);

fn term_rank_witness(inst: &Instance, route: Route) -> Result<Option<WitnessParts>, Failure> {
    let mt = inst.mt().expect("term-rank instance");
    let graph = match route {
        Route::Brute => {
            // search directly for a graph whose union with H₀ has the matching
            first_fitting(
                inst.g0(),
                inst.m_s(),
                Some(inst.full_degrees().map_err(at("instance"))?.m_t()),
                |g| {
                    g.union(inst.h0())
                        .ok()
                        .and_then(|gp| find_matching_covering_bases(&gp, inst.ms(), mt).ok())
                        .flatten()
                        .is_some()
                },
            )
        }
        _ => cover::construct(inst, route).map_err(at("instance"))?,
    };
    let Some(graph) = graph else {
        return Ok(None);
    };
    let gplus = graph.union(inst.h0()).map_err(at("instance"))?;
    let matching = find_matching_covering_bases(&gplus, inst.ms(), mt).map_err(at("instance"))?;
    match matching {
        Some(m) => Ok(Some((graph, Some(m)))),
        None => Err(Failure::Internal(
            "constructed bigraph has no matching covering bases".into(),
        )),
    }
}

fn run(loaded: &Loaded, route: Route) -> Result<(Outcome, u64), Failure> {
    let g = &loaded.grounds;
    match loaded.mode {
        ModeTag::Ore => {
            let m = loaded.full_degrees()?;
            let g0 = bipartite_complement(&loaded.h0).map_err(at("h0"))?;
            let v = feasibility::check_ore(&g0, &m).map_err(at("instance"))?;
            verdict_or_witness(v, || {
                Ok(first_fitting(&g0, m.m_s(), Some(m.m_t()), |_| true).map(|b| (b, None)))
            })
        }
        ModeTag::Msmt | ModeTag::Fully | ModeTag::MsOnly => {
            let inst = loaded.instance()?;
            let v = match loaded.mode {
                ModeTag::Msmt => feasibility::check_msmt(&inst),
                ModeTag::Fully => feasibility::check_fully(&inst),
                _ => feasibility::check_ms_only(&inst),
            }
            .map_err(at("instance"))?;
            verdict_or_witness(v, || {
                cover::construct(&inst, route)
                    .map(|o| o.map(|b| (b, None)))
                    .map_err(at("instance"))
            })
        }
        ModeTag::Ryser => {
            let ell = loaded.need_ell()?;
            let m = loaded.full_degrees()?;
            let v = if loaded.h0.edge_count() == 0 {
                ryser_verdict(feasibility::check_ryser(g, &m, ell))?
            } else {
                feasibility::check_ryser_novel(&loaded.h0, &m, ell).map_err(at("instance"))?
            };
            verdict_or_witness(v, || term_rank_witness(&loaded.instance()?, route))
        }
        ModeTag::RyserGen => {
            let inst = loaded.instance()?;
            let v = feasibility::check_ryser_gen(&inst).map_err(at("instance"))?;
            verdict_or_witness(v, || term_rank_witness(&inst, route))
        }
        ModeTag::Brualdi => {
            let ms = loaded.need_ms()?;
            let mt = loaded.need_mt()?;
            let v = feasibility::check_brualdi(&loaded.h0, &ms, &mt).map_err(at("instance"))?;
            verdict_or_witness(v, || {
                let m =
                    find_matching_covering_bases(&loaded.h0, &ms, &mt).map_err(at("instance"))?;
                Ok(m.map(|m| (Bigraph::empty(g.clone()), Some(m))))
            })
        }
    }
}

/// Decides the instance; a feasible verdict carries a witness built by the
/// brute-force route, an infeasible one the violated inequality.
pub fn check(loaded: &Loaded) -> Result<ResultFile, Failure> {
    execute(loaded, Route::Brute)
}

/// Like [`check`] but builds the witness along the chosen route.
pub fn solve(loaded: &Loaded, route: Route) -> Result<ResultFile, Failure> {
    if loaded.mode == ModeTag::MsOnly && route != Route::Brute {
        return Err(Failure::Input(
            "mode: ms_only supports only the brute route".into(),
        ));
    }
    execute(loaded, route)
}

fn execute(loaded: &Loaded, route: Route) -> Result<ResultFile, Failure> {
    let started = Instant::now();
    let (outcome, evaluated) = run(loaded, route)?;
    let g = &loaded.grounds;
    let (verdict, witness, certificate) = match outcome {
        Outcome::Witness(graph, matching) => (
            VerdictTag::Feasible,
            Some(Witness {
                edges: graph.named_edges(),
                matching: matching.map(|m| named(g, &m)),
            }),
            None,
        ),
        Outcome::Cert(c) => (VerdictTag::Infeasible, None, Some(NamedCert::new(&c, g))),
    };
    Ok(ResultFile {
        mode: loaded.mode,
        verdict,
        witness,
        certificate,
        stats: Stats {
            evaluated,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
        },
    })
}

/// Re-checks a feasible result's witness against the instance from scratch.
pub fn validate_witness(loaded: &Loaded, result: &ResultFile) -> Result<(), String> {
    let Some(w) = &result.witness else {
        return Err("no witness".into());
    };
    let g = &loaded.grounds;
    let to_edges = |list: &[(String, String)]| -> Result<Vec<Edge>, String> {
        list.iter()
            .map(|(a, b)| match (g.s_index(a), g.t_index(b)) {
                (Some(s), Some(t)) => Ok((s, t)),
                _ => Err(format!("unknown edge ({a}, {b})")),
            })
            .collect()
    };
    let graph = Bigraph::new(g.clone(), to_edges(&w.edges)?).map_err(|e| e.to_string())?;
    let matching = w.matching.as_deref().map(to_edges).transpose()?;
    match loaded.mode {
        ModeTag::Ore => {
            let m = loaded.full_degrees().map_err(|e| e.to_string())?;
            let inst = Instance::new(
                loaded.h0.clone(),
                Degrees::Full(m),
                Matroid::free(g.s_names().to_vec()),
                SetFunctionTable::zero(g.t_names().to_vec()),
            )
            .map_err(|e| e.to_string())?;
            crate::validate::is_augmentation(&inst, &graph)
        }
        ModeTag::Msmt | ModeTag::Fully | ModeTag::MsOnly => {
            let inst = loaded.instance().map_err(|e| e.to_string())?;
            crate::validate::is_augmentation(&inst, &graph)
        }
        ModeTag::Ryser | ModeTag::RyserGen => {
            let inst = loaded.instance().map_err(|e| e.to_string())?;
            crate::validate::is_augmentation(&inst, &graph)?;
            let gplus = graph.union(inst.h0()).map_err(|e| e.to_string())?;
            let m = matching.ok_or("missing matching")?;
            crate::validate::is_basis_matching(&gplus, inst.ms(), inst.mt().unwrap(), &m)
        }
        ModeTag::Brualdi => {
            let (ms, mt) = (
                loaded.need_ms().map_err(|e| e.to_string())?,
                loaded.need_mt().map_err(|e| e.to_string())?,
            );
            let m = matching.ok_or("missing matching")?;
            crate::validate::is_basis_matching(&loaded.h0, &ms, &mt, &m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ryser_file(m: [u32; 3], ell: usize) -> String {
        format!(
            r#"{{"mode":"ryser","s":["s1","s2","s3"],"t":["t1","t2","t3"],
            "m_s":{{"s1":{a},"s2":{b},"s3":{c}}},"m_t":{{"t1":{a},"t2":{b},"t3":{c}}},"ell":{ell}}}"#,
            a = m[0],
            b = m[1],
            c = m[2]
        )
    }

    fn run_text(text: &str) -> Result<ResultFile, Failure> {
        let f = parse_instance(text)?;
        check(&f.load(12)?)
    }

    #[test]
    fn ryser_files() {
        let ok = run_text(&ryser_file([2, 1, 1], 3)).unwrap();
        assert!(ok.feasible());
        assert!(ok.certificate.is_none());
        assert_eq!(
            ok.witness
                .as_ref()
                .unwrap()
                .matching
                .as_ref()
                .unwrap()
                .len(),
            3
        );
        let f = parse_instance(&ryser_file([2, 1, 1], 3)).unwrap();
        validate_witness(&f.load(12).unwrap(), &ok).unwrap();

        let bad = run_text(&ryser_file([2, 2, 0], 3)).unwrap();
        assert!(!bad.feasible());
        let c = bad.certificate.unwrap();
        assert_eq!(c.x, vec!["s1", "s2"]);
        assert!(c.y.is_empty());
        assert_eq!((c.lhs, c.rhs), (5, 4));
    }

    #[test]
    fn errors_carry_paths() {
        match run_text(r#"{"mode":"ore","s":["a"],"t":["b"],"m_s":{"a":"x"}}"#) {
            Err(Failure::Input(m)) => assert!(m.starts_with("m_s.a"), "{m}"),
            other => panic!("{other:?}"),
        }
        match run_text(r#"{"mode":"ore","s":["a"],"t":["b"],"bogus":1}"#) {
            Err(Failure::Input(m)) => assert!(m.contains("bogus"), "{m}"),
            other => panic!("{other:?}"),
        }
        match run_text(r#"{"mode":"ore","s":["a"],"t":["b"],"h0":[["a","c"]]}"#) {
            Err(Failure::Input(m)) => assert!(m.starts_with("h0[0][1]"), "{m}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(run_text("{"), Err(Failure::Input(_))));
    }

    #[test]
    fn ore_file() {
        let r = run_text(
            r#"{"mode":"ore","s":["s1","s2"],"t":["t1","t2"],
            "m_s":{"s1":1,"s2":1},"m_t":{"t1":1,"t2":1}}"#,
        )
        .unwrap();
        let w = r.witness.unwrap();
        assert_eq!(w.edges.len(), 2);
    }

    #[test]
    fn instance_round_trip() {
        let f = parse_instance(
            r#"{"mode":"ryser_gen","s":["a","b"],"t":["x","y"],"h0":[["a","x"]],
            "m_s":{"a":0,"b":1},"m_t":{"x":1,"y":0},
            "matroid_s":{"kind":"uniform","k":1},"matroid_t":{"kind":"uniform","k":1}}"#,
        )
        .unwrap();
        let inst = f.load(12).unwrap().instance().unwrap();
        let back = InstanceFile::from_instance(ModeTag::RyserGen, &inst);
        let again = back.load(12).unwrap().instance().unwrap();
        assert_eq!(again.pt(), inst.pt());
        assert_eq!(again.h0(), inst.h0());
    }
}
