//! Jordan types (partitions) and Jordan degree types (partitions whose parts
//! carry the degree where their string starts).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` descending. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Partition with `multiplicities[i]` parts equal to `i + 1`.
    pub fn from_multiplicities(multiplicities: &[usize]) -> Self {
        let parts = multiplicities
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(i, &n)| std::iter::repeat_n(i + 1, n))
            .collect();
        Partition { parts }
    }

    /// `out[i]` = number of parts equal to `i + 1`, for `i < len`.
    pub fn multiplicities(&self, len: usize) -> Vec<usize> {
        let mut out = vec![0; len];
        for &p in &self.parts {
            if p <= len {
                out[p - 1] += 1;
            }
        }
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest().unwrap_or(0);
        let parts = (1..=width)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,3,1` (spaces allowed).
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// One Jordan string: `len` basis elements starting in degree `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JordanString {
    #[serde(rename = "len")]
    pub len: usize,
    #[serde(rename = "deg")]
    pub start: usize,
}

impl PartialOrd for JordanString {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for JordanString {
    /// Longer strings first, then earlier start degree.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.len.cmp(&self.len).then(self.start.cmp(&other.start))
    }
}

impl fmt::Display for JordanString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.len, self.start)
    }
}

/// Jordan degree type, kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IndexedPartition {
    strings: Vec<JordanString>,
}

impl IndexedPartition {
    pub fn new(mut strings: Vec<JordanString>) -> Self {
        strings.sort();
        IndexedPartition { strings }
    }

    /// Builds from `(len, start)` pairs; handy for literals.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(len, start)| JordanString { len, start })
                .collect(),
        )
    }

    pub fn strings(&self) -> &[JordanString] {
        &self.strings
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    /// Forgets the degrees.
    pub fn jordan_type(&self) -> Partition {
        Partition::new(self.strings.iter().map(|s| s.len).collect())
            .expect("string lengths are positive")
    }

    pub fn total_length(&self) -> usize {
        self.strings.iter().map(|s| s.len).sum()
    }
}

impl fmt::Display for IndexedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.strings.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugates() {
        let p = Partition::new(vec![1, 3, 5, 3, 1]).unwrap();
        assert_eq!(p.parts(), [5, 3, 3, 1, 1]);
        assert_eq!(p.conjugate().parts(), [5, 3, 3, 1, 1]);
        let q = Partition::new(vec![3, 3, 3, 3, 1]).unwrap();
        assert_eq!(q.conjugate().parts(), [5, 4, 4]);
        assert!(Partition::default().conjugate().is_empty());
    }

    #[test]
    fn multiplicity_round_trip() {
        let p: Partition = "7,7,7,4,4,4,4,2,2,1,1,1,1,1,1".parse().unwrap();
        let n = p.multiplicities(9);
        assert_eq!(n, [6, 2, 0, 4, 0, 0, 3, 0, 0]);
        assert_eq!(Partition::from_multiplicities(&n), p);
        assert_eq!(p.sum(), 47);
    }

    #[test]
    fn parse_errors() {
        assert!("5,0,1".parse::<Partition>().is_err());
        assert!("5,x".parse::<Partition>().is_err());
        assert_eq!("1, 3 ,5".parse::<Partition>().unwrap().to_string(), "5,3,1");
    }

    #[test]
    fn canonical_string_order() {
        let s = IndexedPartition::from_pairs(&[(1, 2), (3, 2), (3, 0), (3, 1), (3, 1)]);
        assert_eq!(s.to_string(), "3_0 3_1 3_1 3_2 1_2");
        assert_eq!(s.jordan_type().parts(), [3, 3, 3, 3, 1]);
        assert_eq!(s.total_length(), 13);
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(parts in prop::collection::vec(1usize..10, 0..12)) {
            let p = Partition::new(parts).unwrap();
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().sum(), p.sum());
        }
    }
}
