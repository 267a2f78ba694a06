//! Partitions, conjugation and multiplicity profiles.
//!
//! Partitions label both Levi classes (block sizes) and nilpotent orbits
//! (Jordan types). Parts are stored largest first.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AtlasError, Result};
use crate::sheets::GroupKind;

/// A weakly decreasing tuple of positive integers. The empty partition of 0
/// is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts largest first. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(AtlasError::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `size^count` repeated blocks, largest first when chained with
    /// [`Partition::from_blocks`].
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Result<Self> {
        let parts = blocks
            .iter()
            .flat_map(|&(size, count)| std::iter::repeat_n(size, count))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `size`.
    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    /// Transpose of the Young diagram: the i-th part counts the parts `>= i`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().filter(|&&m| m >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn profile(&self) -> MultiplicityProfile {
        MultiplicityProfile {
            l: (1..=self.largest()).map(|i| self.multiplicity(i)).collect(),
        }
    }

    /// `sum m_i^2`.
    pub fn sum_of_squares(&self) -> usize {
        self.parts.iter().map(|m| m * m).sum()
    }

    /// All partitions of `n`, in reverse lexicographic order: `(n)` first,
    /// `(1^n)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = AtlasError;

    /// Accepts `"2,1,1"`, `"(2,1,1)"` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| AtlasError::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// Multiplicities `l_i` of each part size `i = 1..=s`, where `s` is the
/// largest part. Entries with `l_i = 0` are kept so tuple shapes are total.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiplicityProfile {
    l: Vec<usize>,
}

impl MultiplicityProfile {
    /// From explicit multiplicities `l_1..l_s`. Trailing zeros are dropped so
    /// that `s` is the largest part actually present.
    pub fn from_multiplicities(mut l: Vec<usize>) -> Self {
        while l.last() == Some(&0) {
            l.pop();
        }
        MultiplicityProfile { l }
    }

    /// `l_i` for `1 <= i`; zero past `s`.
    pub fn get(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.l.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Largest part size `s`.
    pub fn s(&self) -> usize {
        self.l.len()
    }

    /// `(i, l_i)` for `i = 1..=s`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.l.iter().enumerate().map(|(k, &l)| (k + 1, l))
    }

    /// `sum i * l_i`.
    pub fn n(&self) -> usize {
        self.iter().map(|(i, l)| i * l).sum()
    }

    /// `sum l_i`, the number of parts.
    pub fn total_parts(&self) -> usize {
        self.l.iter().sum()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = (1..=self.s())
            .rev()
            .flat_map(|i| std::iter::repeat_n(i, self.get(i)))
            .collect();
        Partition { parts }
    }
}

impl Serialize for MultiplicityProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.l.len()))?;
        for (i, l) in self.iter() {
            map.serialize_entry(&i.to_string(), &l)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MultiplicityProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(d)?;
        let mut by_index = BTreeMap::new();
        for (k, v) in raw {
            let i: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("profile key {k:?} is not an integer")))?;
            if i == 0 {
                return Err(D::Error::custom("profile keys start at 1"));
            }
            by_index.insert(i, v);
        }
        let s = by_index.keys().next_back().copied().unwrap_or(0);
        if by_index.len() != s {
            return Err(D::Error::custom("profile keys must run 1..s without gaps"));
        }
        Ok(MultiplicityProfile::from_multiplicities(
            by_index.into_values().collect(),
        ))
    }
}

/// Parity rule for Jordan types of nilpotents: in orthogonal algebras even
/// parts have even multiplicity, in symplectic ones odd parts do.
///
/// Fails when `p` does not partition the natural dimension of `kind`.
pub fn is_valid_orbit_partition(kind: GroupKind, p: &Partition) -> Result<bool> {
    let n = kind.natural_dim().ok_or_else(|| {
        AtlasError::KindMismatch(format!("{kind} has no partition-labelled orbits"))
    })?;
    if p.n() != n {
        return Err(AtlasError::KindMismatch(format!(
            "{p} partitions {} but {kind} acts on dimension {n}",
            p.n()
        )));
    }
    let restricted_parity = match kind {
        GroupKind::A(_) => return Ok(true),
        GroupKind::B(_) | GroupKind::D(_) => 0,
        GroupKind::C(_) => 1,
        GroupKind::F4 => unreachable!(),
    };
    Ok(p
        .profile()
        .iter()
        .all(|(i, l)| i % 2 != restricted_parity || l % 2 == 0))
}
