//! Integer partitions in exponent notation and the class sets that decide
//! strong reality of nilpotent orbits.
//!
//! A partition of n is written `[d₁^{t₁}, …, d_s^{t_s}]` with strictly
//! decreasing parts. From it we derive
//!
//! - `N_d`: the set of distinct parts,
//! - `E_d = N_d ∩ 2ℕ` and `E²_d = {η ∈ E_d : η ≡ 2 (mod 4)}`,
//! - `O_d = N_d \ E_d` split into `O¹_d` (≡ 1 mod 4) and `O³_d` (≡ 3 mod 4).
//!
//! A partition is *even* when `E_d = N_d`, *very even* when moreover every
//! multiplicity is even, and lies in the distinguished family `P̃ₑ(n)` when
//! it is even, not very even, and `Σ_{η ∈ E²_d} t_η` is odd. Membership in
//! `P̃ₑ(n)` is exactly the obstruction to strong reality of the
//! corresponding nilpotent orbit over ℂ.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap for [`enumerate_partitions`]; keeps the atlas instant.
pub const DEFAULT_ENUMERATION_BOUND: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("enumeration bound exceeded: n = {n}, bound = {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

/// `[d₁^{t₁}, …, d_s^{t_s}]` with d₁ > ⋯ > d_s > 0 and every t ≥ 1.
/// Stored as (part, multiplicity) pairs; [`Partition::flatten`] provides the
/// flat view used by Jordan basis builders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct Partition {
    parts: Vec<(usize, usize)>,
}

impl Partition {
    pub fn new(parts: Vec<(usize, usize)>) -> Result<Self, PartitionError> {
        for window in parts.windows(2) {
            if window[0].0 <= window[1].0 {
                return Err(PartitionError::Invalid(
                    "part sizes must strictly decrease".into(),
                ));
            }
        }
        if parts.iter().any(|&(d, t)| d == 0 || t == 0) {
            return Err(PartitionError::Invalid(
                "parts and multiplicities must be positive".into(),
            ));
        }
        Ok(Self { parts })
    }

    /// Build from an arbitrary list of parts, normalizing order and
    /// multiplicities. An empty list gives the empty partition of 0.
    pub fn from_parts(mut flat: Vec<usize>) -> Result<Self, PartitionError> {
        if flat.contains(&0) {
            return Err(PartitionError::Invalid("zero part".into()));
        }
        flat.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for d in flat {
            match parts.last_mut() {
                Some((size, t)) if *size == d => *t += 1,
                _ => parts.push((d, 1)),
            }
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Single row `[n]`; `n = 0` gives the empty partition.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self {
                parts: vec![(n, 1)],
            }
        }
    }

    /// `[1ⁿ]`.
    pub fn ones(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self {
                parts: vec![(1, n)],
            }
        }
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&(d, t)| d * t).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// (part, multiplicity) pairs, largest part first.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.parts
    }

    /// Flat list of parts, descending, with repetitions.
    pub fn flatten(&self) -> Vec<usize> {
        self.parts
            .iter()
            .flat_map(|&(d, t)| std::iter::repeat_n(d, t))
            .collect()
    }

    pub fn multiplicity_of(&self, part: usize) -> usize {
        self.parts
            .iter()
            .find(|&&(d, _)| d == part)
            .map_or(0, |&(_, t)| t)
    }

    pub fn class_sets(&self) -> PartitionClassSets {
        let n_d: BTreeSet<usize> = self.parts.iter().map(|&(d, _)| d).collect();
        let e_d: BTreeSet<usize> = n_d.iter().copied().filter(|d| d % 2 == 0).collect();
        let e2_d: BTreeSet<usize> = e_d.iter().copied().filter(|d| d % 4 == 2).collect();
        let o_d: BTreeSet<usize> = n_d.difference(&e_d).copied().collect();
        let o1_d: BTreeSet<usize> = o_d.iter().copied().filter(|d| d % 4 == 1).collect();
        let o3_d: BTreeSet<usize> = o_d.iter().copied().filter(|d| d % 4 == 3).collect();
        PartitionClassSets {
            n_d,
            e_d,
            e2_d,
            o_d,
            o1_d,
            o3_d,
        }
    }

    /// All parts even (vacuously true for the empty partition).
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&(d, _)| d % 2 == 0)
    }

    pub fn is_very_even(&self) -> bool {
        self.is_even() && self.parts.iter().all(|&(_, t)| t % 2 == 0)
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|&(d, _)| d % 2 == 1)
    }

    /// `Σ_{η ∈ E²_d} t_η`, the multiplicity total over parts ≡ 2 (mod 4).
    pub fn e2_multiplicity_sum(&self) -> usize {
        self.parts
            .iter()
            .filter(|&&(d, _)| d % 4 == 2)
            .map(|&(_, t)| t)
            .sum()
    }

    pub fn in_p_tilde_e(&self) -> bool {
        self.is_even() && !self.is_very_even() && self.e2_multiplicity_sum() % 2 == 1
    }

    pub fn classify(&self) -> PartitionClass {
        PartitionClass {
            even: self.is_even(),
            very_even: self.is_very_even(),
            in_p_tilde_e: self.in_p_tilde_e(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, &(d, t)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            if t == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{t}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl TryFrom<Vec<(usize, usize)>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<(usize, usize)>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<(usize, usize)> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// The six derived sets of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClassSets {
    pub n_d: BTreeSet<usize>,
    pub e_d: BTreeSet<usize>,
    pub e2_d: BTreeSet<usize>,
    pub o_d: BTreeSet<usize>,
    pub o1_d: BTreeSet<usize>,
    pub o3_d: BTreeSet<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionClass {
    pub even: bool,
    pub very_even: bool,
    pub in_p_tilde_e: bool,
}

/// All partitions of n in canonical descending order (largest first part
/// first). `n` must stay within `bound`.
pub fn enumerate_partitions(n: usize, bound: usize) -> Result<Vec<Partition>, PartitionError> {
    if n > bound {
        return Err(PartitionError::BoundExceeded { n, bound });
    }
    if n == 0 {
        return Ok(vec![Partition::empty()]);
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(current.clone()).expect("parts are positive"));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Cardinalities of 𝒫(n) and its distinguished subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: usize,
    pub even: usize,
    pub very_even: usize,
    pub p_tilde_e: usize,
}

pub fn census(n: usize, bound: usize) -> Result<Census, PartitionError> {
    let mut c = Census {
        total: 0,
        even: 0,
        very_even: 0,
        p_tilde_e: 0,
    };
    for p in enumerate_partitions(n, bound)? {
        c.total += 1;
        let class = p.classify();
        c.even += usize::from(class.even);
        c.very_even += usize::from(class.very_even);
        c.p_tilde_e += usize::from(class.in_p_tilde_e);
    }
    Ok(c)
}

/// One row of the partition atlas. The strongly-real nilpotent orbit counts
/// come from the nilpotent classification: over ℂ an orbit is obstructed
/// exactly when its partition lies in P̃ₑ(n); over ℍ never.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    pub n: usize,
    pub total: usize,
    pub even: usize,
    pub very_even: usize,
    pub p_tilde_e: usize,
    pub strongly_real_nilpotent_c: usize,
    pub strongly_real_nilpotent_h: usize,
}

pub fn atlas_rows(bound: usize) -> Result<Vec<AtlasRow>, PartitionError> {
    (1..=bound)
        .map(|n| {
            let c = census(n, bound)?;
            Ok(AtlasRow {
                n,
                total: c.total,
                even: c.even,
                very_even: c.very_even,
                p_tilde_e: c.p_tilde_e,
                strongly_real_nilpotent_c: c.total - c.p_tilde_e,
                strongly_real_nilpotent_h: c.total,
            })
        })
        .collect()
}

/// CSV for the `atlas` subcommand.
pub fn atlas_csv(rows: &[AtlasRow]) -> String {
    let mut out = String::from(
        "n,total,even,very_even,p_tilde_e,strongly_real_nilpotent_C,strongly_real_nilpotent_H\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            r.total,
            r.even,
            r.very_even,
            r.p_tilde_e,
            r.strongly_real_nilpotent_c,
            r.strongly_real_nilpotent_h
        ));
    }
    out
}
