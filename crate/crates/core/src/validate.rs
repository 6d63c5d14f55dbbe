//! Independent checks on constructed bigraphs and matchings.

use crate::bigraph::{Bigraph, DegreeSpec, Edge};
use crate::feasibility::{Degrees, Instance};
use crate::mask::Mask;
use crate::matroid::Matroid;
use crate::setfun::SetFunctionTable;

/// `d_G(v) = m(v)` on both sides.
pub fn fits(g: &Bigraph, m: &DegreeSpec) -> bool {
    let gr = g.grounds();
    m.m_s().len() == gr.s_len()
        && m.m_t().len() == gr.t_len()
        && (0..gr.s_len()).all(|s| g.degree_s(s) == m.m_s()[s] as usize)
        && (0..gr.t_len()).all(|t| g.degree_t(t) == m.m_t()[t] as usize)
}

/// First `Y ⊆ T` with `r_S(Γ(Y)) < p_T(Y)`, if any.
pub fn first_uncovered(gplus: &Bigraph, ms: &Matroid, pt: &SetFunctionTable) -> Option<Mask> {
    (0..=gplus.grounds().full_t()).find(|&y| ms.rank(gplus.gamma(y)) < pt.get(y))
}

/// Checks that `g` solves the augmentation instance: it is simple, disjoint
/// from `H₀`, fits the prescribed degrees, and `g + H₀` `M_S`-covers `p_T`.
pub fn is_augmentation(inst: &Instance, g: &Bigraph) -> Result<(), String> {
    if g.grounds() != inst.grounds() {
        return Err("graph lives on different grounds".into());
    }
    if !g.is_simple() {
        return Err("graph has parallel edges".into());
    }
    if let Some(&(s, t)) = g.edges().iter().find(|&&(s, t)| inst.h0().has_edge(s, t)) {
        return Err(format!("edge ({s}, {t}) already in H₀"));
    }
    match inst.degrees() {
        Degrees::Full(m) if !fits(g, m) => return Err("degrees do not fit".into()),
        Degrees::SOnly(ms) => {
            if let Some(s) = (0..ms.len()).find(|&s| g.degree_s(s) != ms[s] as usize) {
                return Err(format!("degree of S-node {s} does not fit"));
            }
        }
        Degrees::Full(_) => {}
    }
    let gplus = g.union(inst.h0()).map_err(|e| e.to_string())?;
    if let Some(y) = first_uncovered(&gplus, inst.ms(), inst.pt()) {
        return Err(format!("T-set {y:#b} is not covered"));
    }
    Ok(())
}

/// Checks that `matching` is an `ℓ`-edge matching of `gplus` whose endpoint
/// sets are bases of `ms` and `mt`.
pub fn is_basis_matching(
    gplus: &Bigraph,
    ms: &Matroid,
    mt: &Matroid,
    matching: &[Edge],
) -> Result<(), String> {
    let ell = ms.full_rank();
    if matching.len() != ell {
        return Err(format!("matching has {} edges, want {ell}", matching.len()));
    }
    let (mut a, mut b): (Mask, Mask) = (0, 0);
    for &(s, t) in matching {
        if !gplus.has_edge(s, t) {
            return Err(format!("({s}, {t}) is not an edge"));
        }
        if a >> s & 1 == 1 || b >> t & 1 == 1 {
            return Err(format!("({s}, {t}) reuses an endpoint"));
        }
        a |= 1 << s;
        b |= 1 << t;
    }
    if ms.rank(a) != ell as i64 || mt.rank(b) != ell as i64 {
        return Err("endpoints are not bases".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::Grounds;

    #[test]
    fn augmentation_checks() {
        let g = Grounds::numbered(2, 2).unwrap();
        let h0 = Bigraph::new(g.clone(), vec![(0, 0)]).unwrap();
        let inst = Instance::new(
            h0,
            Degrees::Full(DegreeSpec::uniform(2, 2, 1).unwrap()),
            Matroid::free(g.s_names().to_vec()),
            SetFunctionTable::zero(g.t_names().to_vec()),
        )
        .unwrap();
        let good = Bigraph::new(g.clone(), vec![(0, 1), (1, 0)]).unwrap();
        assert!(is_augmentation(&inst, &good).is_ok());
        let clash = Bigraph::new(g.clone(), vec![(0, 0), (1, 1)]).unwrap();
        assert!(is_augmentation(&inst, &clash).is_err());
        let short = Bigraph::new(g.clone(), vec![(0, 1)]).unwrap();
        assert!(is_augmentation(&inst, &short).is_err());
    }

    #[test]
    fn basis_matching_checks() {
        let g = Grounds::numbered(2, 2).unwrap();
        let k = Bigraph::complete(g.clone());
        let ms = Matroid::free(g.s_names().to_vec());
        let mt = Matroid::free(g.t_names().to_vec());
        assert!(is_basis_matching(&k, &ms, &mt, &[(0, 1), (1, 0)]).is_ok());
        assert!(is_basis_matching(&k, &ms, &mt, &[(0, 1), (1, 1)]).is_err());
        assert!(is_basis_matching(&k, &ms, &mt, &[(0, 1)]).is_err());
    }
}
