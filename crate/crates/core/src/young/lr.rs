use rug::Integer;

use super::Partition;

/// Littlewood-Richardson coefficient `c^r_{p q}`: the number of
/// semistandard fillings of `r / p` with content `q` whose reverse reading
/// word is a lattice word.
pub fn lr_coefficient(r: &Partition, p: &Partition, q: &Partition) -> Integer {
    if !p.is_contained_in(r) || r.size() != p.size() + q.size() {
        return Integer::new();
    }
    // Reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, usize)> = (0..r.num_rows())
        .flat_map(|i| (p.part(i)..r.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut filler = Filler {
        r,
        p,
        content: q.rows().to_vec(),
        counts: vec![0; q.num_rows()],
        grid: r.rows().iter().map(|&len| vec![0; len]).collect(),
        cells,
    };
    Integer::from(filler.count(0))
}

struct Filler<'a> {
    r: &'a Partition,
    p: &'a Partition,
    content: Vec<usize>,
    counts: Vec<usize>,
    grid: Vec<Vec<usize>>,
    cells: Vec<(usize, usize)>,
}

impl Filler<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (i, j) = self.cells[idx];
        // Row weakly increases: bounded above by the right neighbour.
        let hi = if j + 1 < self.r.part(i) {
            self.grid[i][j + 1]
        } else {
            self.content.len().saturating_sub(1)
        };
        // Column strictly increases below a skew cell.
        let lo = if i > 0 && j >= self.p.part(i - 1) {
            self.grid[i - 1][j] + 1
        } else {
            0
        };
        let mut total = 0;
        for v in lo..=hi.min(self.content.len().saturating_sub(1)) {
            if self.content.is_empty() || self.counts[v] == self.content[v] {
                continue;
            }
            if v > 0 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[i][j] = v;
            total += self.count(idx + 1);
            self.counts[v] -= 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::schur_tableaux;
    use rug::Rational;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[1]), &part(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[1]), &part(&[2])), 1);
        assert_eq!(lr_coefficient(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&part(&[2]), &part(&[1, 1]), &part(&[])), 0);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[]), &part(&[1])), 1);
        assert_eq!(lr_coefficient(&part(&[]), &part(&[]), &part(&[])), 1);
    }

    #[test]
    fn schur_product_expansion() {
        // s_p s_q = Σ_r c^r_{pq} s_r at a generic rational point.
        let z: Vec<Rational> = [2, 5, -3, 7]
            .iter()
            .map(|&v| Rational::from((v, 3)))
            .collect();
        for a in 0..=3 {
            for b in 0..=3 {
                for p in Partition::all_of_bounded(a, 4) {
                    for q in Partition::all_of_bounded(b, 4) {
                        let lhs = schur_tableaux(&p, &z).unwrap() * schur_tableaux(&q, &z).unwrap();
                        let mut rhs = Rational::new();
                        for r in Partition::all_of_bounded(a + b, 4) {
                            let c = lr_coefficient(&r, &p, &q);
                            if c != 0 {
                                rhs += Rational::from(c) * schur_tableaux(&r, &z).unwrap();
                            }
                        }
                        assert_eq!(lhs, rhs, "{p} * {q}");
                    }
                }
            }
        }
    }
}
