use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Young diagram: weakly decreasing row lengths with trailing zeros
/// stripped. The empty list is the empty diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition rows must be weakly decreasing: {rows:?}"
            )));
        }
        Ok(Self::from_sorted(rows))
    }

    /// Builds a partition from rows already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut rows: Vec<usize>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition { rows }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Single row with `k` boxes.
    pub fn row(k: usize) -> Self {
        Self::from_sorted(vec![k])
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `i` (0-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of boxes `|t|`.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The transposed diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition::from_sorted(cols)
    }

    /// `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.num_rows() <= other.num_rows()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
    }

    /// Boxes as `(row, column)`, row-major, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    /// Hook length of box `(i, j)`: arm + leg + 1.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.rows[i] - j - 1;
        let leg = self.rows[i + 1..].iter().take_while(|&&r| r > j).count();
        arm + leg + 1
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        Self::all_of_bounded(n, usize::MAX)
    }

    /// All partitions of `n` with at most `max_rows` rows.
    pub fn all_of_bounded(n: usize, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n, n, max_rows, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `max_boxes` boxes and `max_rows` rows,
    /// ordered by size.
    pub fn all_up_to(max_boxes: usize, max_rows: usize) -> Vec<Partition> {
        (0..=max_boxes)
            .flat_map(|n| Self::all_of_bounded(n, max_rows))
            .collect()
    }
}

fn gen(remaining: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        cur.push(part);
        gen(remaining - part, part, rows_left - 1, cur, out);
        cur.pop();
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(d)?;
        Partition::new(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_trailing_zeros_and_rejects_increase() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().rows(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(Partition::all_of_bounded(6, 2).len(), 4);
    }

    #[test]
    fn transpose_and_hooks() {
        let t = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(t.transpose().rows(), &[2, 1, 1]);
        assert_eq!(t.transpose().transpose(), t);
        assert_eq!(t.hook_length(0, 0), 4);
        assert_eq!(t.hook_length(0, 2), 1);
        assert_eq!(t.hook_length(1, 0), 1);
    }

    #[test]
    fn json_is_a_plain_array() {
        let t = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), "[2,1]");
        let back: Partition = serde_json::from_str("[3,3,1,0]").unwrap();
        assert_eq!(back.rows(), &[3, 3, 1]);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
