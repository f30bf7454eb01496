//! Dense exact matrices and Gauss-Jordan elimination.
//!
//! Everything here is tiny by numerical-linear-algebra standards (the largest
//! matrices are a few thousand rows of rationals), so a plain row-major dense
//! layout with textbook elimination is the right tool.

use crate::field::Field;

/// A dense matrix over an exact field, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        Matrix::new(r, c, entries)
    }

    /// An empty matrix (0 rows) with a given column count.
    pub fn empty(cols: usize) -> Self {
        Matrix {
            rows: 0,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize, witness: &F) -> Self {
        let zero = witness.zero_of();
        let one = witness.one_of();
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            entries[i * n + i] = one.clone();
        }
        Matrix::new(n, n, entries)
    }

    pub fn zero(rows: usize, cols: usize, witness: &F) -> Self {
        Matrix::new(rows, cols, vec![witness.zero_of(); rows * cols])
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<F> {
        self.row(i).to_vec()
    }

    /// Any entry, used as a field witness. `None` for 0-row matrices.
    pub fn witness(&self) -> Option<&F> {
        self.entries.first()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.at(i, j).clone());
            }
        }
        Matrix::new(self.cols, self.rows, out)
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        if self.rows == 0 || rhs.cols == 0 {
            return Matrix::empty(rhs.cols);
        }
        let zero = self
            .witness()
            .or_else(|| rhs.witness())
            .expect("product of empty matrices")
            .zero_of();
        let mut out = vec![zero.clone(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.mul(rhs.at(k, j));
                    out[i * rhs.cols + j] = out[i * rhs.cols + j].add(&t);
                }
            }
        }
        Matrix::new(self.rows, rhs.cols, out)
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc: Option<F> = None;
                for j in 0..self.cols {
                    let t = self.at(i, j).mul(&v[j]);
                    acc = Some(match acc {
                        Some(a) => a.add(&t),
                        None => t,
                    });
                }
                acc.expect("apply on zero-column matrix")
            })
            .collect()
    }

    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, entries)
    }

    /// Reduced row-echelon form together with the rank and pivot columns.
    /// The RREF is unique, which is what makes subspace equality syntactic.
    pub fn rref(&self) -> (Matrix<F>, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = m.at(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.at(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// A basis of the kernel (right null space), one row per basis vector,
    /// in the standard RREF parametrization by free columns.
    pub fn kernel(&self) -> Matrix<F> {
        if self.rows == 0 {
            // Kernel of an empty map is everything; needs a witness only if
            // there are columns to describe.
            panic!("kernel of a 0-row matrix needs a witness; use kernel_with");
        }
        let w = self.witness().unwrap().clone();
        self.kernel_with(&w)
    }

    pub fn kernel_with(&self, witness: &F) -> Matrix<F> {
        let (r, rank, pivots) = self.rref();
        let zero = witness.zero_of();
        let one = witness.one_of();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![zero.clone(); self.cols];
            v[fc] = one.clone();
            for (pi, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = r.at(pi, fc).neg();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::empty(self.cols)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Determinant by elimination. Square matrices only.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let w = self.witness().expect("determinant of empty matrix");
        let mut m = self.clone();
        let mut det = w.one_of();
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                return w.zero_of();
            };
            if pr != c {
                det = det.neg();
                for j in 0..m.cols {
                    let a = m.at(c, j).clone();
                    let b = m.at(pr, j).clone();
                    m.set(c, j, b);
                    m.set(pr, j, a);
                }
            }
            let piv = m.at(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv().unwrap();
            for i in (c + 1)..m.rows {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..m.cols {
                    let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// One solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = Matrix::from_rows(
            (0..self.rows)
                .map(|i| {
                    let mut row = self.row_vec(i);
                    row.push(b[i].clone());
                    row
                })
                .collect(),
        );
        let (r, rank, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let w = self.witness().or_else(|| b.first())?;
        let mut x = vec![w.zero_of(); self.cols];
        for (i, &p) in pivots.iter().enumerate().take(rank) {
            x[p] = r.at(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.render()).collect())
            .collect()
    }
}
