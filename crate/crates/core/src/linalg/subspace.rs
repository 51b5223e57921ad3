use num::{One, Zero};

use super::{axpy, LinalgError, RationalMatrix, SparseVec, Q};

/// A subspace of `Q^ambient`, stored as the nonzero rows of a reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, rows: (0..ambient).map(super::unit_vec).collect(), pivots: (0..ambient).collect() }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let m = RationalMatrix::from_rows(vectors.into_iter().collect(), ambient)?;
        let (reduced, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|r| reduced.row(r).clone()).collect();
        Ok(Self { ambient, rows, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The echelonized basis vectors (leading entry 1, pivot columns cleared elsewhere).
    pub fn vectors(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_dim(&self, v: &SparseVec) -> Result<(), LinalgError> {
        match super::max_index(v) {
            Some(max) if max >= self.ambient => {
                Err(LinalgError::DimensionMismatch { expected: self.ambient, found: max + 1 })
            }
            _ => Ok(()),
        }
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &SparseVec) -> Result<SparseVec, LinalgError> {
        self.check_dim(v)?;
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = out.get(&p).cloned() {
                axpy(&mut out, &-c, row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.is_empty())
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { expected: other.ambient, found: self.ambient });
        }
        for v in &self.rows {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Self::span(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    /// `U ∩ W`, from the kernel of `[u_1 .. u_r | -w_1 .. -w_s]`.
    pub fn intersection(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let columns: Vec<SparseVec> =
            self.rows.iter().cloned().chain(other.rows.iter().map(|w| super::scale(w, &-Q::one()))).collect();
        let m = RationalMatrix::from_columns(&columns, self.ambient)?;
        let kernel = m.kernel_basis();
        let r = self.rows.len();
        let vectors = kernel.vectors().iter().map(|k| {
            let mut v = SparseVec::new();
            for (&i, c) in k.range(..r) {
                axpy(&mut v, c, &self.rows[i]);
            }
            v
        });
        Self::span(self.ambient, vectors.collect::<Vec<_>>())
    }
}

/// Incremental echelon form that remembers how each row was built from the inputs, so a vector
/// in the span can be written as a combination of the original vectors.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    ambient: usize,
    /// (reduced row with leading 1 at pivot, combination of originals, pivot)
    rows: Vec<(SparseVec, SparseVec, usize)>,
    originals: usize,
}

impl SpanSolver {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), originals: 0 }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn originals(&self) -> usize {
        self.originals
    }

    /// Reduce `v` against the current rows, returning the remainder and the combination of
    /// originals that was subtracted.
    fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut rem = v.clone();
        let mut comb = SparseVec::new();
        for (row, row_comb, p) in &self.rows {
            if let Some(c) = rem.get(p).cloned() {
                axpy(&mut rem, &-c.clone(), row);
                axpy(&mut comb, &c, row_comb);
            }
        }
        (rem, comb)
    }

    /// Adds an original vector. Returns whether it was independent of the previous ones.
    pub fn push(&mut self, v: &SparseVec) -> Result<bool, LinalgError> {
        if let Some(max) = super::max_index(v) {
            if max >= self.ambient {
                return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: max + 1 });
            }
        }
        let idx = self.originals;
        self.originals += 1;
        let (rem, comb) = self.reduce(v);
        let Some((&p, lead)) = rem.iter().next() else {
            return Ok(false);
        };
        let inv = lead.recip();
        // rem = v - comb, so the new row is (e_idx - comb) / lead
        let mut row_comb = super::unit_vec(idx);
        axpy(&mut row_comb, &-Q::one(), &comb);
        let row = super::scale(&rem, &inv);
        let row_comb = super::scale(&row_comb, &inv);
        // keep rows reduced: clear the new pivot from existing rows
        for (other, other_comb, _) in &mut self.rows {
            if let Some(c) = other.get(&p).cloned() {
                axpy(other, &-c.clone(), &row);
                axpy(other_comb, &-c, &row_comb);
            }
        }
        self.rows.push((row, row_comb, p));
        Ok(true)
    }

    /// Coefficients on the originals expressing `v`, or `None` when `v` is not in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, comb) = self.reduce(v);
        rem.is_empty().then_some(comb)
    }
}

/// The projection `V → V/W` with chosen coset representatives.
///
/// Representatives are the basis vectors of `V` (in echelon order) that are independent modulo
/// `W` and the previously chosen ones.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    sub_dim: usize,
    representatives: Vec<SparseVec>,
    solver: SpanSolver,
}

impl QuotientMap {
    pub fn new(v: &SubspaceBasis, w: &SubspaceBasis) -> Result<Self, LinalgError> {
        if !w.is_subspace_of(v)? {
            return Err(LinalgError::NotASubspace);
        }
        let mut solver = SpanSolver::new(v.ambient());
        for b in w.vectors() {
            solver.push(b)?;
        }
        let sub_dim = solver.originals();
        let mut representatives = Vec::new();
        let mut probe = solver.clone();
        for candidate in v.vectors() {
            if probe.push(candidate)? {
                representatives.push(candidate.clone());
            }
        }
        for r in &representatives {
            solver.push(r)?;
        }
        Ok(Self { sub_dim, representatives, solver })
    }

    /// Dimension of `V/W`.
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[SparseVec] {
        &self.representatives
    }

    /// Quotient coordinates of `v ∈ V`.
    pub fn coords(&self, v: &SparseVec) -> Result<SparseVec, LinalgError> {
        let comb = self.solver.solve(v).ok_or(LinalgError::NotInSubspace)?;
        Ok(comb.range(self.sub_dim..).map(|(&i, c)| (i - self.sub_dim, c.clone())).collect())
    }

    /// The coset representative `Σ c_i rep_i`.
    pub fn lift(&self, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in coords {
            axpy(&mut out, c, &self.representatives[i]);
        }
        out
    }

    /// Whether `v ∈ V` lies in `W`.
    pub fn is_trivial(&self, v: &SparseVec) -> Result<bool, LinalgError> {
        Ok(self.coords(v)?.values().all(Zero::is_zero))
    }
}
