//! Invariant factors of large sparse integer matrices.
//!
//! Unit pivots are eliminated in place with a Markowitz-style choice; the
//! remaining block goes through the dense Smith form.

use num_bigint::BigInt;
use num_traits::One;

use super::matrix::IntegerMatrix;
use super::snf::Smith;

/// A row-major sparse integer matrix; each row is sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    /// Rows may list a column more than once; duplicates are summed.
    pub fn new(cols: usize, rows: Vec<Vec<(usize, i64)>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(usize, i64)> = Vec::with_capacity(r.len());
                for (c, v) in r {
                    assert!(c < cols, "column {c} out of range");
                    match out.last_mut() {
                        Some(last) if last.0 == c => last.1 += v,
                        _ => out.push((c, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMatrix { cols, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.rows[i]
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for &(c, v) in r {
                m.set(i, c, BigInt::from(v));
            }
        }
        m
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&(c, v)| &x[c] * v).sum())
            .collect()
    }

    /// The nonzero invariant factors, in divisibility order.
    pub fn nonzero_invariants(&self) -> Vec<BigInt> {
        match self.eliminate_units() {
            Some((units, rest)) => {
                let s = Smith::diagonal_only(&rest);
                let mut out = vec![BigInt::one(); units];
                out.extend_from_slice(&s.diag[..s.rank]);
                out
            }
            None => {
                let s = Smith::diagonal_only(&self.to_dense());
                s.diag[..s.rank].to_vec()
            }
        }
    }

    /// Removes unit pivots; returns their count and the dense remainder, or
    /// `None` on `i128` overflow.
    fn eliminate_units(&self) -> Option<(usize, IntegerMatrix)> {
        let mut rows: Vec<Vec<(usize, i128)>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
            .collect();
        let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); self.cols];
        for (i, r) in rows.iter().enumerate() {
            for &(c, _) in r {
                col_rows[c].push(i);
            }
        }
        let mut alive = vec![true; rows.len()];
        let mut units = 0;
        loop {
            let mut progress = false;
            let mut order: Vec<usize> = (0..rows.len())
                .filter(|&i| alive[i] && !rows[i].is_empty())
                .collect();
            order.sort_by_key(|&i| rows[i].len());
            for r in order {
                if !alive[r] || rows[r].is_empty() {
                    continue;
                }
                let Some(&(c, v)) = rows[r]
                    .iter()
                    .filter(|e| e.1 == 1 || e.1 == -1)
                    .min_by_key(|e| col_rows[e.0].len())
                else {
                    continue;
                };
                let mut others = std::mem::take(&mut col_rows[c]);
                others.sort_unstable();
                others.dedup();
                let pivot = std::mem::take(&mut rows[r]);
                for r2 in others {
                    if r2 == r || !alive[r2] {
                        continue;
                    }
                    let Ok(k) = rows[r2].binary_search_by_key(&c, |e| e.0) else {
                        continue;
                    };
                    let q = rows[r2][k].1 * v;
                    let merged = sub_scaled(&rows[r2], &pivot, q)?;
                    for &(c2, _) in &merged {
                        if rows[r2].binary_search_by_key(&c2, |e| e.0).is_err() {
                            col_rows[c2].push(r2);
                        }
                    }
                    rows[r2] = merged;
                }
                alive[r] = false;
                units += 1;
                progress = true;
            }
            if !progress {
                break;
            }
        }
        let live: Vec<usize> = (0..rows.len())
            .filter(|&i| alive[i] && !rows[i].is_empty())
            .collect();
        let mut used: Vec<usize> = live.iter().flat_map(|&i| rows[i].iter().map(|e| e.0)).collect();
        used.sort_unstable();
        used.dedup();
        let mut m = IntegerMatrix::zeros(live.len(), used.len());
        for (a, &i) in live.iter().enumerate() {
            for &(c, v) in &rows[i] {
                let b = used.binary_search(&c).expect("collected");
                m.set(a, b, BigInt::from(v));
            }
        }
        Some((units, m))
    }
}

/// `a - q * b` on sorted sparse rows.
fn sub_scaled(a: &[(usize, i128)], b: &[(usize, i128)], q: i128) -> Option<Vec<(usize, i128)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1)
        } else if cb < ca {
            j += 1;
            (cb, q.checked_mul(b[j - 1].1)?.checked_neg()?)
        } else {
            i += 1;
            j += 1;
            (ca, a[i - 1].1.checked_sub(q.checked_mul(b[j - 1].1)?)?)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
        let s = Smith::diagonal_only(m);
        s.diag[..s.rank].to_vec()
    }

    #[test]
    fn small_example() {
        let m = SparseMatrix::new(2, vec![vec![(0, 2), (1, 4)], vec![(0, 6), (1, 8)]]);
        assert_eq!(m.nonzero_invariants(), vec![BigInt::from(2), BigInt::from(4)]);
        let m = SparseMatrix::new(3, vec![vec![(0, 1), (2, 1)], vec![(1, 1), (1, 1)], vec![]]);
        assert_eq!(m.nonzero_invariants(), vec![BigInt::one(), BigInt::from(2)]);
    }

    proptest! {
        #[test]
        fn agrees_with_dense(rows in 0usize..9, cols in 0usize..9,
                             cells in proptest::collection::vec((0usize..9, 0usize..9, -3i64..4), 0..40)) {
            let mut r = vec![Vec::new(); rows];
            for (i, j, v) in cells {
                if i < rows && j < cols {
                    r[i].push((j, v));
                }
            }
            let m = SparseMatrix::new(cols, r);
            prop_assert_eq!(m.nonzero_invariants(), dense_invariants(&m.to_dense()));
        }
    }
}
