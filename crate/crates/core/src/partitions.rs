//! Partitions, skew shapes and the shape constructors that label strand terms.
//!
//! A [`Partition`] is stored without trailing zeros, so structural equality
//! is equality of partitions. Partitions serialize as plain JSON arrays,
//! e.g. `[3,1,1,1]`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("requires l(alpha) <= s (got l(alpha) = {len}, s = {s})")]
    TooLong { len: usize, s: usize },
    #[error("requires beta_1 <= s (got beta_1 = {first}, s = {s})")]
    TooWide { first: usize, s: usize },
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the input is
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition { parts: vec![width; height] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Parts padded with zeros to length `len` (truncating never happens;
    /// longer partitions are returned as is).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Cells `(row, col)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// All partitions obtained by removing one corner box.
    pub fn remove_corners(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts).expect("removing a corner keeps the order"));
            }
        }
        out
    }

    /// Concatenation of parts, valid when the last part of `self` is at
    /// least the first part of `tail`.
    pub fn concat(&self, tail: &Partition) -> Result<Partition, PartitionError> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&tail.parts);
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Shorthand for building partitions in tests and examples. Panics on
/// input that is not weakly decreasing.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("weakly decreasing parts")
    };
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if !outer.contains(&inner) {
            return Err(PartitionError::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of the skew diagram in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len())
            .flat_map(move |i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
    }

    /// At most one box in every column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }

    /// At most one box in every row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i) + 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

/// The shape `(s+a_1, ..., s+a_s, s^r, a'_1, ..., a'_{a_1})` where `a'` is the
/// transpose of `alpha`.
pub fn p_rs(alpha: &Partition, r: usize, s: usize) -> Result<Partition, PartitionError> {
    if alpha.len() > s {
        return Err(PartitionError::TooLong { len: alpha.len(), s });
    }
    let mut parts: Vec<usize> = (0..s).map(|i| s + alpha.part(i)).collect();
    parts.extend(std::iter::repeat_n(s, r));
    parts.extend_from_slice(alpha.transpose().parts());
    Partition::new(parts)
}

/// The pair of shapes labelling the `E*` and `F` factors of a Lascoux term.
pub fn pq_rs(
    alpha: &Partition,
    beta: &Partition,
    r: usize,
    s: usize,
) -> Result<(Partition, Partition), PartitionError> {
    if alpha.len() > s {
        return Err(PartitionError::TooLong { len: alpha.len(), s });
    }
    if beta.first_part() > s {
        return Err(PartitionError::TooWide { first: beta.first_part(), s });
    }
    let beta_t = beta.transpose();
    let mut p: Vec<usize> = (0..s).map(|i| s + alpha.part(i)).collect();
    p.extend(std::iter::repeat_n(s, r));
    p.extend_from_slice(beta.parts());
    let mut q: Vec<usize> = (0..s).map(|i| s + beta_t.part(i)).collect();
    q.extend(std::iter::repeat_n(s, r));
    q.extend_from_slice(alpha.transpose().parts());
    Ok((Partition::new(p)?, Partition::new(q)?))
}

/// For `nu` inside the rectangle `(a^b)`, the straight shape `eta` with
/// `S_{(a^b)/nu} = S_eta`, namely `eta = (a - nu_b, ..., a - nu_1)`.
pub fn rect_complement(a: usize, b: usize, nu: &Partition) -> Result<Partition, PartitionError> {
    let rect = Partition::rectangle(a, b);
    if !rect.contains(nu) {
        return Err(PartitionError::NotContained { inner: nu.clone(), outer: rect });
    }
    let parts = (0..b).map(|j| a - nu.part(b - 1 - j)).collect();
    Partition::new(parts)
}

pub fn is_horizontal_strip(sh: &SkewShape) -> bool {
    sh.is_horizontal_strip()
}

pub fn is_vertical_strip(sh: &SkewShape) -> bool {
    sh.is_vertical_strip()
}

/// All partitions of `size` with at most `max_len` parts, each at most
/// `max_part`, in reverse-lexicographic order (largest first part first).
pub fn enumerate_partitions(
    size: usize,
    max_len: Option<usize>,
    max_part: Option<usize>,
) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        cap: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        size,
        max_part.unwrap_or(size),
        max_len.unwrap_or(size),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All partitions contained in `outer` with exactly `size` boxes.
pub fn subpartitions_of_size(outer: &Partition, size: usize) -> Vec<Partition> {
    enumerate_partitions(size, Some(outer.len()), Some(outer.first_part()))
        .into_iter()
        .filter(|nu| outer.contains(nu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(partition![3, 1].transpose(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(partition![2, 2].transpose(), partition![2, 2]);
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), partition![2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn p_rs_examples() {
        assert_eq!(p_rs(&Partition::empty(), 1, 1).unwrap(), partition![1, 1]);
        assert_eq!(p_rs(&partition![2], 1, 1).unwrap(), partition![3, 1, 1, 1]);
        assert_eq!(p_rs(&partition![1], 2, 2).unwrap(), partition![3, 2, 2, 2, 1]);
        assert!(matches!(
            p_rs(&partition![1, 1], 1, 1),
            Err(PartitionError::TooLong { len: 2, s: 1 })
        ));
    }

    #[test]
    fn pq_rs_examples() {
        let e = Partition::empty();
        assert_eq!(pq_rs(&e, &e, 1, 1).unwrap(), (partition![1, 1], partition![1, 1]));
        assert_eq!(
            pq_rs(&partition![1], &partition![1], 1, 1).unwrap(),
            (partition![2, 1, 1], partition![2, 1, 1])
        );
        assert_eq!(
            pq_rs(&partition![2], &e, 1, 1).unwrap(),
            (partition![3, 1], partition![1, 1, 1, 1])
        );
        assert!(pq_rs(&e, &partition![2], 1, 1).is_err());
    }

    #[test]
    fn rect_complement_examples() {
        assert_eq!(rect_complement(2, 2, &partition![1]).unwrap(), partition![2, 1]);
        assert_eq!(rect_complement(3, 2, &Partition::empty()).unwrap(), partition![3, 3]);
        assert_eq!(rect_complement(2, 3, &partition![2, 1]).unwrap(), partition![2, 1]);
        assert!(rect_complement(2, 2, &partition![3]).is_err());
    }

    #[test]
    fn strips() {
        let h = SkewShape::new(partition![2, 1], partition![1]).unwrap();
        assert!(h.is_horizontal_strip());
        let not_h = SkewShape::new(partition![2, 2], partition![1]).unwrap();
        assert!(!not_h.is_horizontal_strip());
        let v = SkewShape::new(partition![1, 1], Partition::empty()).unwrap();
        assert!(v.is_vertical_strip());
        assert!(SkewShape::new(partition![1], partition![2]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(2, Some(1), None), vec![partition![2]]);
        assert_eq!(
            enumerate_partitions(2, Some(2), Some(2)),
            vec![partition![2], partition![1, 1]]
        );
        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
        // p(7) = 15
        assert_eq!(enumerate_partitions(7, None, None).len(), 15);
    }

    #[test]
    fn json_form() {
        let p = partition![3, 1, 1, 1];
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1,1,1]");
        let back: Partition = serde_json::from_str("[3,1,1,1]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    fn small_partition() -> impl Strategy<Value = Partition> {
        (0usize..=12).prop_flat_map(|n| {
            let all = enumerate_partitions(n, None, None);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(lambda in small_partition()) {
            prop_assert_eq!(lambda.transpose().transpose(), lambda.clone());
            prop_assert_eq!(lambda.transpose().size(), lambda.size());
        }

        #[test]
        fn p_rs_size(alpha in small_partition(), r in 0usize..4, extra in 0usize..3) {
            let s = alpha.len() + extra;
            let p = p_rs(&alpha, r, s).unwrap();
            prop_assert_eq!(p.size(), s * (s + r) + 2 * alpha.size());
        }

        #[test]
        fn pq_rs_sizes_agree(alpha in small_partition(), beta in small_partition(), r in 1usize..4) {
            let s = alpha.len().max(beta.first_part());
            let (p, q) = pq_rs(&alpha, &beta, r, s).unwrap();
            let expected = s * (s + r) + alpha.size() + beta.size();
            prop_assert_eq!(p.size(), expected);
            prop_assert_eq!(q.size(), expected);
        }

        #[test]
        fn rect_complement_is_involution(a in 1usize..5, b in 1usize..5, seed in 0usize..1000) {
            let inside: Vec<Partition> = (0..=a * b)
                .flat_map(|k| subpartitions_of_size(&Partition::rectangle(a, b), k))
                .collect();
            let nu = &inside[seed % inside.len()];
            let eta = rect_complement(a, b, nu).unwrap();
            prop_assert_eq!(&rect_complement(a, b, &eta).unwrap(), nu);
        }
    }
}
