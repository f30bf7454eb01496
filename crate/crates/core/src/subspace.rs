//! Subspaces of a coordinate space in canonical reduced row-echelon form.
//!
//! Two subspaces are equal as sets iff their stored matrices are identical,
//! so all the membership claims downstream reduce to syntactic equality.

use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Canonicalize a spanning set (rows) into RREF, dropping zero rows.
    pub fn from_spanning(rows: &Matrix<F>) -> Self {
        let ambient = rows.cols;
        let (r, rank, pivots) = rows.rref();
        let kept: Vec<Vec<F>> = (0..rank).map(|i| r.row_vec(i)).collect();
        let basis = if kept.is_empty() {
            Matrix::empty(ambient)
        } else {
            Matrix::from_rows(kept)
        };
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(vecs: Vec<Vec<F>>) -> Self {
        assert!(!vecs.is_empty(), "use Subspace::zero for the zero space");
        Self::from_spanning(&Matrix::from_rows(vecs))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::empty(ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, witness: &F) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, witness),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        self.basis.row_vec(i)
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates without a pivot: a canonical complement, used as the
    /// basis of the quotient ambient/self.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        // Reduce v against the RREF basis; membership iff remainder is 0.
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for j in 0..self.ambient {
                w[j] = w[j].sub(&f.mul(self.basis.at(i, j)));
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        Subspace::from_spanning(&self.basis.vstack(&other.basis))
    }

    /// Intersection via the kernel of the stacked-basis relation matrix.
    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // Solve a*B1 - b*B2 = 0; stacked (dim1+dim2) x ambient, kernel of
        // the transpose pairing.
        let stacked = self.basis.vstack(&other.basis).transpose();
        let witness = self.basis.witness().unwrap();
        let ker = stacked.kernel_with(witness); // rows: coefficient vectors
        if ker.rows == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut vecs = Vec::with_capacity(ker.rows);
        for i in 0..ker.rows {
            let coeffs = ker.row(i);
            let mut v = vec![witness.zero_of(); self.ambient];
            for (a, c) in coeffs.iter().take(self.dim()).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    v[j] = v[j].add(&c.mul(self.basis.at(a, j)));
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(vecs)
    }

    /// `{ w : pairing(a, w) = 0 for all a in self }` where `pairing` is an
    /// n x m bilinear pairing matrix between the ambient space and another
    /// m-dimensional space.
    pub fn annihilator(&self, pairing: &Matrix<F>) -> Subspace<F> {
        assert_eq!(pairing.rows, self.ambient, "pairing row dimension mismatch");
        let witness = pairing.witness().expect("empty pairing matrix");
        if self.dim() == 0 {
            return Subspace::full(pairing.cols, witness);
        }
        let constraints = self.basis.mul(pairing);
        let ker = constraints.kernel_with(witness);
        if ker.rows == 0 {
            Subspace::zero(pairing.cols)
        } else {
            Subspace::from_spanning(&ker)
        }
    }

    /// Flat limit of the subspace under a 1-parameter diagonal action with
    /// the given coordinate weights, as t -> 0: the weight-graded initial
    /// subspace. For each weight level c this takes the image of
    /// (U ∩ F_{>=c}) in the weight-c coordinates, F_{>=c} being the span of
    /// coordinates of weight >= c; the lowest-weight part of a vector
    /// dominates as t -> 0.
    pub fn one_ps_limit(&self, weights: &[i64]) -> Subspace<F> {
        assert_eq!(weights.len(), self.ambient, "weight vector length mismatch");
        if self.dim() == 0 {
            return self.clone();
        }
        let witness = self.basis.witness().unwrap().clone();
        // Column order: ascending weight. Row-reduce in that order; the
        // leading block of each row then sits in its minimal weight level.
        let mut order: Vec<usize> = (0..self.ambient).collect();
        order.sort_by_key(|&c| (weights[c], c));
        let permuted = Matrix::from_rows(
            (0..self.dim())
                .map(|i| order.iter().map(|&c| self.basis.at(i, c).clone()).collect())
                .collect(),
        );
        let (r, rank, _) = permuted.rref();
        // For each reduced row, keep only the coordinates in the weight
        // level of its leading entry.
        let mut vecs = Vec::with_capacity(rank);
        for i in 0..rank {
            let lead = (0..self.ambient)
                .find(|&j| !r.at(i, j).is_zero())
                .expect("nonzero row");
            let w0 = weights[order[lead]];
            let mut v = vec![witness.zero_of(); self.ambient];
            for j in 0..self.ambient {
                if weights[order[j]] == w0 {
                    v[order[j]] = r.at(i, j).clone();
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(vecs)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        // RREF is preserved by any field map sending 0 to 0 and 1 to 1,
        // which reductions mod good primes do.
        Subspace {
            ambient: self.ambient,
            basis: self.basis.map(f),
            pivots: self.pivots.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    fn s(vecs: Vec<Vec<i64>>) -> Subspace<Rat> {
        Subspace::from_vectors(
            vecs.into_iter()
                .map(|v| v.into_iter().map(Rat::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn idempotent_sum_and_intersection() {
        let a = s(vec![vec![1, 2, 0, 0], vec![0, 0, 1, 1]]);
        assert_eq!(a.sum(&a), a);
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn canonical_equality() {
        let a = s(vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let b = s(vec![vec![1, 2, 1], vec![2, 3, 1]]);
        assert_eq!(a, b);
    }

    #[test]
    fn dim_formula() {
        let a = s(vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let b = s(vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let sum = a.sum(&b);
        let int = a.intersect(&b);
        assert_eq!(a.dim() + b.dim(), sum.dim() + int.dim());
        assert_eq!(int.dim(), 1);
        assert!(int.contains(&[
            Rat::from_int(0),
            Rat::from_int(1),
            Rat::from_int(0),
            Rat::from_int(0)
        ]));
    }

    #[test]
    fn annihilator_with_identity_pairing() {
        let a = s(vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let id = Matrix::identity(3, &Rat::one());
        let ann = a.annihilator(&id);
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&[Rat::zero(), Rat::zero(), Rat::one()]));
    }

    #[test]
    fn one_ps_limit_monomial_fixed_and_graded() {
        // Torus-fixed (coordinate) subspaces are limit-fixed.
        let a = s(vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0]]);
        assert_eq!(a.one_ps_limit(&[3, 1, 4, 1]), a);
        // Equal weights: limit is the identity on any subspace.
        let b = s(vec![vec![1, 2, 3, 4], vec![4, 3, 2, 1]]);
        assert_eq!(b.one_ps_limit(&[5, 5, 5, 5]), b);
        // A genuine degeneration: lowest-weight parts survive.
        let c = s(vec![vec![1, 1, 0]]);
        let lim = c.one_ps_limit(&[2, 1, 0]);
        assert_eq!(lim, s(vec![vec![0, 1, 0]]));
    }

    #[test]
    fn one_ps_limit_idempotent() {
        let u = s(vec![vec![1, 1, 1, 0], vec![0, 1, 2, 3]]);
        let w = [4, 2, 2, 1];
        let l1 = u.one_ps_limit(&w);
        let l2 = l1.one_ps_limit(&w);
        assert_eq!(l1, l2);
        assert_eq!(l1.dim(), u.dim());
    }
}
