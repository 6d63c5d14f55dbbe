//! Matroids materialized as full rank tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::{self, bits, Mask};
use crate::setfun::SetFunctionTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidKind {
    Free,
    Uniform(usize),
    /// Disjoint blocks with per-block caps. Elements outside every block are loops.
    Partition {
        blocks: Vec<Mask>,
        caps: Vec<usize>,
    },
    Explicit,
}

/// First failed rank axiom, with the witness sets as local masks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `r(∅) ≠ 0`.
    Normalization { value: i64 },
    /// `r(A) > |A|` or `r(A) < 0`.
    Subcardinality { set: Mask, rank: i64 },
    /// `A ⊆ B` but `r(A) > r(B)`.
    Monotonicity { subset: Mask, superset: Mask },
    /// `r(A) + r(B) < r(A ∪ B) + r(A ∩ B)`.
    Submodularity { a: Mask, b: Mask },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Normalization { value } => write!(f, "r(∅) = {value}"),
            AxiomViolation::Subcardinality { set, rank } => {
                write!(f, "r({set:#b}) = {rank} is not within [0, |A|]")
            }
            AxiomViolation::Monotonicity { subset, superset } => {
                write!(f, "r({subset:#b}) > r({superset:#b})")
            }
            AxiomViolation::Submodularity { a, b } => {
                write!(f, "submodularity fails for {a:#b}, {b:#b}")
            }
        }
    }
}

/// Exhaustive check of the rank axioms on a table indexed by subset mask.
pub fn validate(ranks: &[i64]) -> std::result::Result<(), AxiomViolation> {
    let size = ranks.len();
    debug_assert!(size.is_power_of_two());
    let n = size.trailing_zeros() as usize;
    if ranks[0] != 0 {
        return Err(AxiomViolation::Normalization { value: ranks[0] });
    }
    for (a, &r) in ranks.iter().enumerate() {
        if r < 0 || r > mask::card(a as Mask) {
            return Err(AxiomViolation::Subcardinality {
                set: a as Mask,
                rank: r,
            });
        }
    }
    // single-element extensions suffice for monotonicity
    for a in 0..size {
        for e in 0..n {
            let b = a | 1 << e;
            if ranks[a] > ranks[b] {
                return Err(AxiomViolation::Monotonicity {
                    subset: a as Mask,
                    superset: b as Mask,
                });
            }
        }
    }
    for a in 0..size {
        for b in (a + 1)..size {
            if mask::comparable(a as Mask, b as Mask) {
                continue;
            }
            if ranks[a] + ranks[b] < ranks[a | b] + ranks[a & b] {
                return Err(AxiomViolation::Submodularity {
                    a: a as Mask,
                    b: b as Mask,
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: Vec<String>,
    ranks: Vec<i64>,
    kind: MatroidKind,
}

impl Matroid {
    fn checked(ground: Vec<String>, ranks: Vec<i64>, kind: MatroidKind) -> Result<Self> {
        validate(&ranks).map_err(Error::NotAMatroid)?;
        Ok(Matroid {
            ground,
            ranks,
            kind,
        })
    }

    pub fn free(ground: Vec<String>) -> Self {
        let ranks = (0..1u32 << ground.len()).map(mask::card).collect();
        Matroid {
            ground,
            ranks,
            kind: MatroidKind::Free,
        }
    }

    pub fn uniform(ground: Vec<String>, k: usize) -> Result<Self> {
        let n = ground.len();
        if k > n {
            return Err(Error::RankOutOfRange { k, n });
        }
        let ranks = (0..1u32 << n)
            .map(|a| mask::card(a).min(k as i64))
            .collect();
        Ok(Matroid {
            ground,
            ranks,
            kind: MatroidKind::Uniform(k),
        })
    }

    pub fn partition(ground: Vec<String>, blocks: Vec<Mask>, caps: Vec<usize>) -> Result<Self> {
        let n = ground.len();
        if blocks.len() != caps.len() {
            return Err(Error::InvalidPartition(format!(
                "{} blocks but {} caps",
                blocks.len(),
                caps.len()
            )));
        }
        let mut seen: Mask = 0;
        for &b in &blocks {
            if !mask::is_subset(b, mask::full(n)) {
                return Err(Error::InvalidPartition(format!(
                    "block {b:#b} leaves the ground set"
                )));
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            seen |= b;
        }
        let ranks = (0..1u32 << n)
            .map(|a| {
                blocks
                    .iter()
                    .zip(&caps)
                    .map(|(&b, &c)| mask::card(a & b).min(c as i64))
                    .sum()
            })
            .collect();
        Matroid::checked(ground, ranks, MatroidKind::Partition { blocks, caps })
    }

    /// Rank from a basis list: `r(A) = max |A ∩ B|`, validated afterwards.
    pub fn from_bases(ground: Vec<String>, bases: &[Mask]) -> Result<Self> {
        let n = ground.len();
        if bases.is_empty() {
            return Err(Error::InvalidPartition("empty basis list".into()));
        }
        if let Some(&b) = bases.iter().find(|&&b| !mask::is_subset(b, mask::full(n))) {
            return Err(Error::NotASubset {
                mask: b,
                side: "matroid ground",
            });
        }
        let ranks: Vec<i64> = (0..1u32 << n)
            .map(|a| bases.iter().map(|&b| mask::card(a & b)).max().unwrap_or(0))
            .collect();
        let m = Matroid::checked(ground, ranks, MatroidKind::Explicit)?;
        // every listed set must be a basis of the matroid it generates
        let r = m.full_rank();
        if let Some(&b) = bases.iter().find(|&&b| mask::card(b) != r as i64) {
            return Err(Error::NotAMatroid(AxiomViolation::Subcardinality {
                set: b,
                rank: m.rank(b),
            }));
        }
        Ok(m)
    }

    pub fn from_rank_table(ground: Vec<String>, ranks: Vec<i64>) -> Result<Self> {
        let expected = 1usize << ground.len();
        if ranks.len() != expected {
            return Err(Error::TableSize {
                got: ranks.len(),
                expected,
            });
        }
        Matroid::checked(ground, ranks, MatroidKind::Explicit)
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

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    #[inline]
    pub fn rank(&self, a: Mask) -> i64 {
        self.ranks[a as usize]
    }

    pub fn full_rank(&self) -> usize {
        self.ranks[self.ranks.len() - 1] as usize
    }

    pub fn rank_table(&self) -> &[i64] {
        &self.ranks
    }

    /// `r(ground) − r(ground − Y)`, unchecked.
    #[inline]
    pub fn corank_of(&self, y: Mask) -> i64 {
        let full = mask::full(self.len());
        self.rank(full) - self.rank(full & !y)
    }

    pub fn corank_table(&self) -> SetFunctionTable {
        SetFunctionTable::from_fn(self.ground.clone(), |y| self.corank_of(y))
    }

    pub fn is_independent(&self, a: Mask) -> bool {
        self.rank(a) == mask::card(a)
    }

    pub fn bases(&self) -> Vec<Mask> {
        let r = self.full_rank() as i64;
        (0..1u32 << self.len())
            .filter(|&a| mask::card(a) == r && self.rank(a) == r)
            .collect()
    }

    pub fn names_of(&self, a: Mask) -> Vec<String> {
        bits(a).map(|i| self.ground[i].clone()).collect()
    }
}

pub fn make_uniform(ground: Vec<String>, k: usize) -> Result<Matroid> {
    Matroid::uniform(ground, k)
}

/// Co-rank `r(ground) − r(ground − Y)`.
pub fn corank(m: &Matroid, y: Mask) -> Result<i64> {
    if !mask::is_subset(y, mask::full(m.len())) {
        return Err(Error::NotASubset {
            mask: y,
            side: "matroid ground",
        });
    }
    Ok(m.corank_of(y))
}

/// JSON descriptor of a matroid, nodes named by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidDescriptor {
    Free,
    Uniform {
        k: usize,
    },
    Partition {
        blocks: Vec<Vec<String>>,
        caps: Vec<usize>,
    },
    Explicit {
        bases: Vec<Vec<String>>,
    },
}

impl MatroidDescriptor {
    pub fn build(&self, ground: &[String]) -> Result<Matroid> {
        let to_mask = |names: &[String]| -> Result<Mask> {
            names.iter().try_fold(0, |acc, n| {
                let i = ground
                    .iter()
                    .position(|g| g == n)
                    .ok_or_else(|| Error::UnknownNode(n.clone()))?;
                Ok(acc | 1 << i)
            })
        };
        let ground = ground.to_vec();
        match self {
            MatroidDescriptor::Free => Ok(Matroid::free(ground)),
            MatroidDescriptor::Uniform { k } => Matroid::uniform(ground, *k),
            MatroidDescriptor::Partition { blocks, caps } => {
                let masks = blocks
                    .iter()
                    .map(|b| to_mask(b))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::partition(ground, masks, caps.clone())
            }
            MatroidDescriptor::Explicit { bases } => {
                let masks = bases
                    .iter()
                    .map(|b| to_mask(b))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(ground, &masks)
            }
        }
    }

    /// Inverse of [`MatroidDescriptor::build`] up to equality of rank tables.
    pub fn describe(m: &Matroid) -> Self {
        match m.kind() {
            MatroidKind::Free => MatroidDescriptor::Free,
            MatroidKind::Uniform(k) => MatroidDescriptor::Uniform { k: *k },
            MatroidKind::Partition { blocks, caps } => MatroidDescriptor::Partition {
                blocks: blocks.iter().map(|&b| m.names_of(b)).collect(),
                caps: caps.clone(),
            },
            MatroidKind::Explicit => MatroidDescriptor::Explicit {
                bases: m.bases().into_iter().map(|b| m.names_of(b)).collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    fn min_over_bases(m: &Matroid, y: Mask) -> i64 {
        m.bases()
            .into_iter()
            .map(|b| mask::card(b & y))
            .min()
            .unwrap()
    }

    #[test]
    fn uniform_examples() {
        let free = make_uniform(names(3), 3).unwrap();
        for a in 0..8 {
            assert_eq!(free.rank(a), mask::card(a));
        }
        let zero = make_uniform(names(3), 0).unwrap();
        assert!(zero.rank_table().iter().all(|&r| r == 0));
        let u2 = make_uniform(names(3), 2).unwrap();
        assert_eq!(u2.rank(0b111), 2);
        assert_eq!(
            make_uniform(names(3), 4),
            Err(Error::RankOutOfRange { k: 4, n: 3 })
        );
    }

    #[test]
    fn validate_examples() {
        let u2 = make_uniform(names(3), 2).unwrap();
        assert_eq!(validate(u2.rank_table()), Ok(()));
        assert_eq!(
            validate(&[1, 1, 1, 2]),
            Err(AxiomViolation::Normalization { value: 1 })
        );
        // r(∅)=0, r({a})=0, r({b})=1, r({a,b})=2: R1 and R2 hold, R3 fails on ({a},{b})
        assert_eq!(
            validate(&[0, 0, 1, 2]),
            Err(AxiomViolation::Submodularity { a: 0b01, b: 0b10 })
        );
        assert_eq!(
            validate(&[0, 2, 1, 2]),
            Err(AxiomViolation::Subcardinality { set: 0b01, rank: 2 })
        );
        assert_eq!(
            validate(&[0, 1, 1, 0]),
            Err(AxiomViolation::Monotonicity {
                subset: 0b01,
                superset: 0b11
            })
        );
    }

    #[test]
    fn corank_examples() {
        let free = Matroid::free(names(4));
        for y in 0..16 {
            assert_eq!(corank(&free, y).unwrap(), mask::card(y));
        }
        // uniform(ℓ) on n elements: ℓ − min(ℓ, n − |Y|) = max(0, ℓ − n + |Y|)
        for l in 0..=4usize {
            let u = make_uniform(names(4), l).unwrap();
            for y in 0..16 {
                let expect = (l as i64 - 4 + mask::card(y)).max(0);
                assert_eq!(corank(&u, y).unwrap(), expect);
                assert_eq!(min_over_bases(&u, y), expect);
            }
            assert_eq!(corank(&u, 0).unwrap(), 0);
        }
        assert!(corank(&free, 1 << 4).is_err());
    }

    #[test]
    fn partition_and_bases() {
        let p = Matroid::partition(names(3), vec![0b011, 0b100], vec![1, 1]).unwrap();
        assert_eq!(p.full_rank(), 2);
        assert_eq!(p.rank(0b011), 1);
        assert_eq!(p.bases(), vec![0b101, 0b110]);
        let back = Matroid::from_bases(names(3), &p.bases()).unwrap();
        assert_eq!(back.rank_table(), p.rank_table());
        assert!(Matroid::partition(names(3), vec![0b011, 0b010], vec![1, 1]).is_err());
        // {a,b}, {c} alone is not a basis system (exchange fails)
        assert!(Matroid::from_bases(names(4), &[0b0011, 0b1100]).is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        let g = names(3);
        for d in [
            MatroidDescriptor::Free,
            MatroidDescriptor::Uniform { k: 2 },
            MatroidDescriptor::Partition {
                blocks: vec![vec!["e0".into(), "e1".into()], vec!["e2".into()]],
                caps: vec![1, 1],
            },
        ] {
            let m = d.build(&g).unwrap();
            assert_eq!(MatroidDescriptor::describe(&m), d);
        }
        let json = r#"{"kind":"explicit","bases":[["e0","e2"],["e1","e2"]]}"#;
        let d: MatroidDescriptor = serde_json::from_str(json).unwrap();
        assert_eq!(d.build(&g).unwrap().full_rank(), 2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn matroid() -> impl Strategy<Value = Matroid> {
            (1usize..=6).prop_flat_map(|n| {
                prop_oneof![
                    Just(Matroid::free(names(n))),
                    (0..=n).prop_map(move |k| Matroid::uniform(names(n), k).unwrap()),
                    (
                        proptest::collection::vec(0..3usize, n),
                        proptest::collection::vec(0..3usize, 3)
                    )
                        .prop_map(move |(assign, caps)| {
                            let mut blocks = vec![0 as Mask; 3];
                            for (e, &b) in assign.iter().enumerate() {
                                blocks[b] |= 1 << e;
                            }
                            Matroid::partition(names(n), blocks, caps).unwrap()
                        }),
                ]
            })
        }

        proptest! {
            #[test]
            fn corank_equals_min_over_bases(m in matroid()) {
                let full = mask::full(m.len());
                for y in 0..=full {
                    prop_assert_eq!(m.corank_of(y), min_over_bases(&m, y));
                }
                prop_assert_eq!(m.corank_of(full), m.full_rank() as i64);
            }

            #[test]
            fn corank_is_monotone_and_supermodular(m in matroid()) {
                let full = mask::full(m.len());
                for a in 0..=full {
                    for b in 0..=full {
                        let (ca, cb) = (m.corank_of(a), m.corank_of(b));
                        prop_assert!(ca + cb <= m.corank_of(a & b) + m.corank_of(a | b));
                        if mask::is_subset(a, b) {
                            prop_assert!(ca <= cb);
                        }
                    }
                }
            }
        }
    }
}
