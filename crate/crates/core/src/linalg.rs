//! Exact integer row reduction.
//!
//! [`Echelon`] is the workhorse of the colength engine: an incremental,
//! fraction-free echelon form over sparse integer rows. Each elimination step
//! cross-multiplies by the two leading entries (divided by their gcd) and then
//! strips the row content, which keeps entries close to the size of the
//! inputs. [`bareiss_rank`] is the classical dense one-step fraction-free
//! elimination; it is used as a cross-check on small matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse row: `(column, nonzero entry)` pairs, strictly increasing columns.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Echelon form where every stored row is keyed by its first (smallest)
/// column. Column order is therefore elimination order: callers that want
/// some block of columns eliminated first give it the smallest indices.
#[derive(Clone, Debug)]
pub struct Echelon {
    pivots: Vec<Option<SparseRow>>,
    rank: usize,
}

fn combine(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let (rv, pv) = (&row[0].1, &pivot[0].1);
    let g = rv.gcd(pv);
    let (ra, pa) = (pv / &g, rv / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, val) = if ci < cj {
            i += 1;
            (ci, &ra * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&pa * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &ra * &row[i - 1].1 - &pa * &pivot[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    normalize(&mut out);
    out
}

/// Divides out the content and makes the leading entry positive.
fn normalize(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            pivots: vec![None; ncols],
            rank: 0,
        }
    }

    pub fn ncols(&self) -> usize {
        self.pivots.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `row` against the stored pivots. Returns the new pivot column
    /// if the row was independent, `None` if it reduced to zero.
    pub fn insert(&mut self, mut row: SparseRow) -> Option<usize> {
        row.retain(|(_, v)| !v.is_zero());
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        normalize(&mut row);
        while let Some(&(lead, _)) = row.first() {
            match &self.pivots[lead] {
                Some(pivot) => row = combine(&row, pivot),
                None => {
                    self.pivots[lead] = Some(row);
                    self.rank += 1;
                    return Some(lead);
                }
            }
        }
        None
    }

    /// Whether column `c` carries a pivot.
    pub fn has_pivot(&self, c: usize) -> bool {
        self.pivots[c].is_some()
    }

    /// Number of pivots in columns `range`.
    pub fn pivots_in(&self, range: std::ops::Range<usize>) -> usize {
        self.pivots[range].iter().filter(|p| p.is_some()).count()
    }
}

/// Rank of a dense integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_to_sparse(row: &[i64]) -> SparseRow {
        row.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(c, &v)| (c, BigInt::from(v)))
            .collect()
    }

    fn echelon_rank(m: &[Vec<i64>]) -> usize {
        let mut e = Echelon::new(m.first().map_or(0, Vec::len));
        for row in m {
            e.insert(dense_to_sparse(row));
        }
        e.rank()
    }

    fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(echelon_rank(&m), 2);
        assert_eq!(bareiss_rank(to_big(&m)), 2);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(echelon_rank(&id), 2);
        assert_eq!(bareiss_rank(Vec::new()), 0);
    }

    #[test]
    fn rank_deficient_with_skipped_columns() {
        let m = vec![
            vec![0, 2, 4, 1, 0],
            vec![0, 1, 2, 0, 3],
            vec![0, 3, 6, 1, 3],
            vec![0, 0, 0, 5, -30],
        ];
        assert_eq!(echelon_rank(&m), 2);
        assert_eq!(bareiss_rank(to_big(&m)), 2);
    }

    #[test]
    fn pivot_blocks() {
        let mut e = Echelon::new(4);
        e.insert(dense_to_sparse(&[0, 0, 1, 1]));
        e.insert(dense_to_sparse(&[0, 0, 1, 2]));
        assert!(e.has_pivot(2) && e.has_pivot(3));
        assert_eq!(e.pivots_in(2..4), 2);
        assert_eq!(e.pivots_in(0..2), 0);
        assert_eq!(e.insert(dense_to_sparse(&[0, 0, 3, -7])), None);
    }

    proptest! {
        #[test]
        fn sparse_echelon_agrees_with_bareiss(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..8)
        ) {
            prop_assert_eq!(echelon_rank(&m), bareiss_rank(to_big(&m)));
        }
    }
}
