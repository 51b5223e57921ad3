use std::fmt;

use num::{BigInt, Integer, One, Zero};

use super::{q, LinalgError, SparseVec, SubspaceBasis, Q};

/// Sparse rational matrix stored by row.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<SparseVec>,
    cols: usize,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows: vec![SparseVec::new(); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(super::unit_vec).collect();
        Self { rows, cols: n }
    }

    /// Builds a matrix from sparse rows. Zero entries are dropped; an entry outside `cols` is a
    /// dimension error.
    pub fn from_rows(rows: Vec<SparseVec>, cols: usize) -> Result<Self, LinalgError> {
        let mut cleaned = Vec::with_capacity(rows.len());
        for row in rows {
            if let Some(max) = super::max_index(&row) {
                if max >= cols {
                    return Err(LinalgError::DimensionMismatch { expected: cols, found: max + 1 });
                }
            }
            cleaned.push(row.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        Ok(Self { rows: cleaned, cols })
    }

    pub fn from_dense(entries: &[Vec<i64>]) -> Self {
        let cols = entries.first().map_or(0, Vec::len);
        let rows = entries
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, q(c))).collect()
            })
            .collect();
        Self { rows, cols }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[SparseVec], rows: usize) -> Result<Self, LinalgError> {
        let mut out = vec![SparseVec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col {
                if i >= rows {
                    return Err(LinalgError::DimensionMismatch { expected: rows, found: i + 1 });
                }
                if !c.is_zero() {
                    out[i].insert(j, c.clone());
                }
            }
        }
        Ok(Self { rows: out, cols: columns.len() })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.rows[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut out = vec![SparseVec::new(); self.cols];
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, c) in row {
                out[j].insert(i, c.clone());
            }
        }
        Self { rows: out, cols: self.rows.len() }
    }

    /// `M v`, with `v` indexed by column.
    pub fn apply(&self, v: &SparseVec) -> Result<SparseVec, LinalgError> {
        if let Some(max) = super::max_index(v) {
            if max >= self.cols {
                return Err(LinalgError::DimensionMismatch { expected: self.cols, found: max + 1 });
            }
        }
        let mut out = SparseVec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = Q::zero();
            // iterate the sparser side
            if row.len() <= v.len() {
                for (j, c) in row {
                    if let Some(x) = v.get(j) {
                        acc += c * x;
                    }
                }
            } else {
                for (j, x) in v {
                    if let Some(c) = row.get(j) {
                        acc += c * x;
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        Ok(out)
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.rows.iter().enumerate().filter_map(|(i, row)| row.get(&j).map(|c| (i, c.clone()))).collect()
    }

    /// Reduced row-echelon form and its pivot columns.
    ///
    /// Elimination runs on primitive integer rows (cross-multiplication followed by content
    /// division); rows are normalized to a leading 1 only at the end. Pivot rows are taken in
    /// column order, choosing the smallest remaining row index with a nonzero entry.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut work: Vec<Vec<(usize, BigInt)>> = self.rows.iter().map(primitive_row).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == work.len() {
                break;
            }
            let Some(found) = (next..work.len()).find(|&r| entry(&work[r], col).is_some()) else {
                continue;
            };
            work.swap(next, found);
            let pivot_row = work[next].clone();
            let p = entry(&pivot_row, col).cloned().expect("pivot entry");
            for (r, row) in work.iter_mut().enumerate() {
                if r == next {
                    continue;
                }
                if let Some(a) = entry(row, col).cloned() {
                    *row = combine(&p, row, &a, &pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
        }
        let rows = work
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                if r < pivots.len() {
                    let lead = entry(&row, pivots[r]).cloned().expect("pivot entry");
                    row.into_iter().map(|(j, c)| (j, Q::new(c, lead.clone()))).collect()
                } else {
                    row.into_iter().map(|(j, c)| (j, Q::from_integer(c))).collect()
                }
            })
            .collect();
        (RationalMatrix { rows, cols: self.cols }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = super::unit_vec(free);
            for (r, &p) in pivots.iter().enumerate() {
                if let Some(c) = reduced.rows[r].get(&free) {
                    v.insert(p, -c.clone());
                }
            }
            vectors.push(v);
        }
        SubspaceBasis::span(self.cols, vectors).expect("kernel vectors fit the ambient")
    }

    /// Echelonized basis of the column space.
    pub fn image_basis(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.rows.len(), self.transpose().rows).expect("columns fit the ambient")
    }
}

fn entry(row: &[(usize, BigInt)], col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(j, _)| *j).ok().map(|k| &row[k].1)
}

/// Scale a rational row to a primitive integer row with the same span.
fn primitive_row(row: &SparseVec) -> Vec<(usize, BigInt)> {
    let lcm = row.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<(usize, BigInt)> = row.iter().map(|(&j, c)| (j, c.numer() * (&lcm / c.denom()))).collect();
    normalize_content(ints)
}

fn normalize_content(row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return row;
    }
    row.into_iter().map(|(j, c)| (j, c / &g)).collect()
}

/// `p * row - a * pivot`, divided by its content.
fn combine(p: &BigInt, row: &[(usize, BigInt)], a: &BigInt, pivot: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (0, 0);
    while i < row.len() || k < pivot.len() {
        let take_row = k == pivot.len() || (i < row.len() && row[i].0 < pivot[k].0);
        let take_pivot = i == row.len() || (k < pivot.len() && pivot[k].0 < row[i].0);
        let (j, c) = if take_row {
            i += 1;
            (row[i - 1].0, p * &row[i - 1].1)
        } else if take_pivot {
            k += 1;
            (pivot[k - 1].0, -(a * &pivot[k - 1].1))
        } else {
            i += 1;
            k += 1;
            (row[i - 1].0, p * &row[i - 1].1 - a * &pivot[k - 1].1)
        };
        if !c.is_zero() {
            out.push((j, c));
        }
    }
    normalize_content(out)
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows.len(), self.cols)?;
        for row in &self.rows {
            let dense: Vec<String> =
                (0..self.cols).map(|j| row.get(&j).map_or_else(|| "0".to_string(), ToString::to_string)).collect();
            writeln!(f, "  [{}]", dense.join(", "))?;
        }
        write!(f, "]")
    }
}
