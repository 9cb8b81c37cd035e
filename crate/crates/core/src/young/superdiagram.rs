use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// Non-degenerate covariant diagram of Gl(m|n): an `m × n` block with `p`
/// (at most `m` rows) to its right and `q` (at most `n` rows) transposed
/// below it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSuperDiagram")]
pub struct SuperDiagram {
    pub m: usize,
    pub n: usize,
    pub p: Partition,
    pub q: Partition,
}

#[derive(Deserialize)]
struct RawSuperDiagram {
    m: usize,
    n: usize,
    p: Partition,
    q: Partition,
}

impl TryFrom<RawSuperDiagram> for SuperDiagram {
    type Error = Error;
    fn try_from(r: RawSuperDiagram) -> Result<Self> {
        SuperDiagram::new(r.m, r.n, r.p, r.q)
    }
}

/// Outcome of splitting a covariant diagram around the `m × n` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    NonDegenerate(SuperDiagram),
    /// Covariant, but the diagram does not contain the full block.
    Degenerate,
}

impl SuperDiagram {
    pub fn new(m: usize, n: usize, p: Partition, q: Partition) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::invalid("super diagram needs m, n >= 1"));
        }
        if p.num_rows() > m {
            return Err(Error::TooManyRows { partition: p, rows: m });
        }
        if q.num_rows() > n {
            return Err(Error::TooManyRows { partition: q, rows: n });
        }
        Ok(SuperDiagram { m, n, p, q })
    }

    /// The full diagram: `t_i = n + p_i` for `i <= m`, then the rows of `qᵀ`.
    pub fn assemble(&self) -> Partition {
        let mut rows: Vec<usize> = (0..self.m).map(|i| self.n + self.p.part(i)).collect();
        rows.extend_from_slice(self.q.transpose().rows());
        Partition::from_sorted(rows)
    }

    pub fn size(&self) -> usize {
        self.m * self.n + self.p.size() + self.q.size()
    }

    /// Bosonic indices `k_i = m + p_i - i`, `i = 1..m`.
    pub fn bosonic_k(&self) -> Vec<usize> {
        (0..self.m).map(|i| self.m + self.p.part(i) - i - 1).collect()
    }

    /// Fermionic indices `k_{m+j} = n + q_j - j`, `j = 1..n`.
    pub fn fermionic_k(&self) -> Vec<usize> {
        (0..self.n).map(|j| self.n + self.q.part(j) - j - 1).collect()
    }

    /// Every non-degenerate diagram of Gl(m|n) with at most `max_boxes`
    /// boxes in total, ordered by `|p| + |q|`.
    pub fn all_up_to(m: usize, n: usize, max_boxes: usize) -> Vec<SuperDiagram> {
        if m * n > max_boxes {
            return Vec::new();
        }
        let free = max_boxes - m * n;
        let mut out = Vec::new();
        for total in 0..=free {
            for ps in 0..=total {
                for p in Partition::all_of_bounded(ps, m) {
                    for q in Partition::all_of_bounded(total - ps, n) {
                        out.push(SuperDiagram {
                            m,
                            n,
                            p: p.clone(),
                            q,
                        });
                    }
                }
            }
        }
        out
    }
}

/// `t_{m+1} <= n`, the condition for `t` to label a covariant
/// representation of Gl(m|n).
pub fn is_hook_covariant(t: &Partition, m: usize, n: usize) -> bool {
    t.part(m) <= n
}

/// Inverse of [`SuperDiagram::assemble`].
pub fn decompose_superdiagram(t: &Partition, m: usize, n: usize) -> Result<Decomposition> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("super diagram needs m, n >= 1"));
    }
    if !is_hook_covariant(t, m, n) {
        return Err(Error::NotCovariant {
            partition: t.clone(),
            m,
            n,
        });
    }
    if t.part(m - 1) < n {
        return Ok(Decomposition::Degenerate);
    }
    let p = Partition::from_sorted((0..m).map(|i| t.part(i) - n).collect());
    let below = Partition::from_sorted(t.rows().iter().skip(m).copied().collect());
    let q = below.transpose();
    Ok(Decomposition::NonDegenerate(SuperDiagram { m, n, p, q }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sd(m: usize, n: usize, p: &[usize], q: &[usize]) -> SuperDiagram {
        SuperDiagram::new(m, n, part(p), part(q)).unwrap()
    }

    #[test]
    fn assemble_examples() {
        assert_eq!(sd(1, 1, &[], &[]).assemble(), part(&[1]));
        assert_eq!(sd(1, 1, &[1], &[1]).assemble(), part(&[2, 1]));
        assert_eq!(sd(2, 1, &[], &[]).assemble(), part(&[1, 1]));
    }

    #[test]
    fn decompose_examples() {
        let nd = |t: &[usize], m, n| match decompose_superdiagram(&part(t), m, n).unwrap() {
            Decomposition::NonDegenerate(s) => s,
            Decomposition::Degenerate => panic!("unexpected degenerate"),
        };
        assert_eq!(nd(&[2, 1], 1, 1), sd(1, 1, &[1], &[1]));
        assert_eq!(nd(&[1], 1, 1), sd(1, 1, &[], &[]));
        assert_eq!(nd(&[1, 1, 1], 1, 1), sd(1, 1, &[], &[2]));
    }

    #[test]
    fn degenerate_and_non_covariant() {
        assert_eq!(
            decompose_superdiagram(&part(&[1]), 2, 1).unwrap(),
            Decomposition::Degenerate
        );
        assert_eq!(
            decompose_superdiagram(&Partition::empty(), 1, 1).unwrap(),
            Decomposition::Degenerate
        );
        assert!(matches!(
            decompose_superdiagram(&part(&[2, 2]), 1, 1),
            Err(Error::NotCovariant { .. })
        ));
    }

    #[test]
    fn round_trip_over_small_diagrams() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
            for s in SuperDiagram::all_up_to(m, n, 10) {
                let back = decompose_superdiagram(&s.assemble(), m, n).unwrap();
                assert_eq!(back, Decomposition::NonDegenerate(s));
            }
        }
    }

    #[test]
    fn rejects_oversized_subdiagrams() {
        assert!(SuperDiagram::new(1, 1, part(&[1, 1]), Partition::empty()).is_err());
        assert!(SuperDiagram::new(2, 1, Partition::empty(), part(&[1, 1])).is_err());
    }

    #[test]
    fn json_shape() {
        let s = sd(2, 1, &[1], &[]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"m":2,"n":1,"p":[1],"q":[]}"#);
        let bad = r#"{"m":1,"n":1,"p":[1,1],"q":[]}"#;
        assert!(serde_json::from_str::<SuperDiagram>(bad).is_err());
    }
}
