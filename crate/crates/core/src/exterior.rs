//! Alternating forms on a coordinate space: evaluation, contraction,
//! restriction, isotropy tests, and the 7-variable wedge gymnastics needed
//! to certify a 3-form on a 7-space as generic.
//!
//! Coefficients are stored densely, indexed by strictly increasing tuples in
//! lexicographic order; the coefficient at (i<j<k) equals eval(e_i,e_j,e_k).

use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// All strictly increasing k-tuples from 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Rank of an increasing k-tuple in the lexicographic enumeration.
pub fn tuple_rank(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0usize;
    let mut prev = 0usize;
    for (pos, &t) in tuple.iter().enumerate() {
        for c in prev..t {
            rank += binomial(n - 1 - c, k - 1 - pos);
        }
        prev = t + 1;
    }
    rank
}

/// Sort an index tuple, returning the permutation sign; `None` on repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1i32;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                v.swap(i, j);
                sign = -sign;
            }
        }
    }
    Some((v, sign))
}

/// An alternating k-form (k = 2 or 3 in practice) on an n-dimensional space.
#[derive(Clone, PartialEq, Debug)]
pub struct AltForm<F: Field> {
    pub degree: usize,
    pub ambient_dim: usize,
    pub coeffs: Vec<F>,
}

impl<F: Field> AltForm<F> {
    pub fn zero(degree: usize, ambient_dim: usize, witness: &F) -> Self {
        AltForm {
            degree,
            ambient_dim,
            coeffs: vec![witness.zero_of(); binomial(ambient_dim, degree)],
        }
    }

    pub fn new(degree: usize, ambient_dim: usize, coeffs: Vec<F>) -> Self {
        assert_eq!(coeffs.len(), binomial(ambient_dim, degree));
        AltForm {
            degree,
            ambient_dim,
            coeffs,
        }
    }

    /// Build from a sparse list of (index tuple, value); tuples need not be
    /// sorted, signs are adjusted.
    pub fn from_terms(
        degree: usize,
        ambient_dim: usize,
        witness: &F,
        terms: &[(Vec<usize>, F)],
    ) -> Self {
        let mut f = AltForm::zero(degree, ambient_dim, witness);
        for (idx, v) in terms {
            let (sorted, sign) = sort_with_sign(idx).expect("repeated index in term");
            let r = tuple_rank(ambient_dim, &sorted);
            let signed = if sign < 0 { v.neg() } else { v.clone() };
            f.coeffs[r] = f.coeffs[r].add(&signed);
        }
        f
    }

    pub fn coeff(&self, idx: &[usize]) -> F {
        let w = &self.coeffs[0];
        match sort_with_sign(idx) {
            None => w.zero_of(),
            Some((sorted, sign)) => {
                let c = self.coeffs[tuple_rank(self.ambient_dim, &sorted)].clone();
                if sign < 0 {
                    c.neg()
                } else {
                    c
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn witness(&self) -> &F {
        &self.coeffs[0]
    }

    /// Multilinear alternating evaluation on `degree` many vectors.
    pub fn eval(&self, vectors: &[&[F]]) -> F {
        assert_eq!(vectors.len(), self.degree, "wrong number of arguments");
        for v in vectors {
            assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        }
        let mut acc = self.witness().zero_of();
        if self.degree == 3 {
            // inlined 3x3 minors; this is the hot loop of every membership
            // and tangent computation
            let (u, v, w) = (vectors[0], vectors[1], vectors[2]);
            for (r, tuple) in combinations(self.ambient_dim, 3).into_iter().enumerate() {
                if self.coeffs[r].is_zero() {
                    continue;
                }
                let (a, b, c) = (tuple[0], tuple[1], tuple[2]);
                let m0 = v[b].mul(&w[c]).sub(&v[c].mul(&w[b]));
                let m1 = v[a].mul(&w[c]).sub(&v[c].mul(&w[a]));
                let m2 = v[a].mul(&w[b]).sub(&v[b].mul(&w[a]));
                let d = u[a].mul(&m0).sub(&u[b].mul(&m1)).add(&u[c].mul(&m2));
                acc = acc.add(&self.coeffs[r].mul(&d));
            }
            return acc;
        }
        for (r, tuple) in combinations(self.ambient_dim, self.degree)
            .into_iter()
            .enumerate()
        {
            if self.coeffs[r].is_zero() {
                continue;
            }
            // determinant of the minor picked by the tuple
            let minor: Vec<Vec<F>> = vectors
                .iter()
                .map(|v| tuple.iter().map(|&c| v[c].clone()).collect())
                .collect();
            let d = Matrix::from_rows(minor).det();
            acc = acc.add(&self.coeffs[r].mul(&d));
        }
        acc
    }

    pub fn eval3(&self, a: &[F], b: &[F], c: &[F]) -> F {
        self.eval(&[a, b, c])
    }

    /// Contraction of a 3-form by a vector: (u ⌟ f)(a, b) = f(u, a, b).
    pub fn contract(&self, u: &[F]) -> AltForm<F> {
        assert_eq!(self.degree, 3, "contract is for 3-forms");
        assert_eq!(u.len(), self.ambient_dim, "ambient dimension mismatch");
        let n = self.ambient_dim;
        let mut out = AltForm::zero(2, n, self.witness());
        for (r2, pair) in combinations(n, 2).into_iter().enumerate() {
            let (j, k) = (pair[0], pair[1]);
            let mut acc = self.witness().zero_of();
            for i in 0..n {
                if u[i].is_zero() {
                    continue;
                }
                acc = acc.add(&u[i].mul(&self.coeff(&[i, j, k])));
            }
            out.coeffs[r2] = acc;
        }
        out
    }

    /// Restriction to a subspace, expressed in its RREF basis.
    pub fn restrict(&self, w: &Subspace<F>) -> AltForm<F> {
        assert_eq!(w.ambient_dim(), self.ambient_dim);
        let d = w.dim();
        assert!(d >= self.degree, "subspace too small for the degree");
        let mut out = AltForm::zero(self.degree, d, self.witness());
        for (r, tuple) in combinations(d, self.degree).into_iter().enumerate() {
            let rows: Vec<Vec<F>> = tuple.iter().map(|&i| w.basis_vector(i)).collect();
            let refs: Vec<&[F]> = rows.iter().map(|r| r.as_slice()).collect();
            out.coeffs[r] = self.eval(&refs);
        }
        out
    }

    /// True iff the form vanishes identically on the subspace.
    pub fn is_isotropic(&self, w: &Subspace<F>) -> bool {
        assert!(
            w.dim() >= self.degree,
            "isotropy test needs dim >= degree of the form"
        );
        self.restrict(w).is_zero()
    }

    /// Pullback along a linear map: (g*f)(v1..vk) = f(g v1, .., g vk).
    pub fn pullback(&self, g: &Matrix<F>) -> AltForm<F> {
        assert_eq!(g.rows, self.ambient_dim);
        assert_eq!(g.cols, self.ambient_dim);
        let n = self.ambient_dim;
        let cols: Vec<Vec<F>> = (0..n)
            .map(|j| (0..n).map(|i| g.at(i, j).clone()).collect())
            .collect();
        let mut out = AltForm::zero(self.degree, n, self.witness());
        for (r, tuple) in combinations(n, self.degree).into_iter().enumerate() {
            let refs: Vec<&[F]> = tuple.iter().map(|&j| cols[j].as_slice()).collect();
            out.coeffs[r] = self.eval(&refs);
        }
        out
    }

    /// Lie derivative along an endomorphism X (first-order flow):
    /// (L_X f)(v1..vk) = sum_i f(v1, .., X vi, .., vk).
    pub fn lie_derivative(&self, x: &Matrix<F>) -> AltForm<F> {
        assert_eq!(x.rows, self.ambient_dim);
        assert_eq!(x.cols, self.ambient_dim);
        let n = self.ambient_dim;
        let zero = self.witness().zero_of();
        let one = self.witness().one_of();
        let basis: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut v = vec![zero.clone(); n];
                v[i] = one.clone();
                v
            })
            .collect();
        let images: Vec<Vec<F>> = (0..n).map(|i| x.apply(&basis[i])).collect();
        let mut out = AltForm::zero(self.degree, n, self.witness());
        for (r, tuple) in combinations(n, self.degree).into_iter().enumerate() {
            let mut acc = zero.clone();
            for pos in 0..self.degree {
                let refs: Vec<&[F]> = tuple
                    .iter()
                    .enumerate()
                    .map(|(q, &j)| {
                        if q == pos {
                            images[j].as_slice()
                        } else {
                            basis[j].as_slice()
                        }
                    })
                    .collect();
                acc = acc.add(&self.eval(&refs));
            }
            out.coeffs[r] = acc;
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> AltForm<G> {
        AltForm {
            degree: self.degree,
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> AltForm<F> {
        AltForm {
            degree: self.degree,
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn add(&self, other: &AltForm<F>) -> AltForm<F> {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.ambient_dim, other.ambient_dim);
        AltForm {
            degree: self.degree,
            ambient_dim: self.ambient_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// JSON serialization: degree, ambient dimension, and the coefficient
    /// strings in the fixed lexicographic index order.
    pub fn to_json(&self) -> String {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.render()).collect();
        serde_json::json!({
            "degree": self.degree,
            "ambient_dim": self.ambient_dim,
            "coeffs": coeffs,
        })
        .to_string()
    }
}

/// Coordinates of a ∧ b where a has degree k and b degree l, both given in
/// the lexicographic increasing-tuple coordinates on n-space.
pub fn wedge_coords<F: Field>(n: usize, k: usize, l: usize, a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), binomial(n, k));
    assert_eq!(b.len(), binomial(n, l));
    let witness = a
        .iter()
        .chain(b.iter())
        .next()
        .expect("wedge of empty coordinates");
    let zero = witness.zero_of();
    let mut out = vec![zero; binomial(n, k + l)];
    let ks = combinations(n, k);
    let ls = combinations(n, l);
    for (ra, ta) in ks.iter().enumerate() {
        if a[ra].is_zero() {
            continue;
        }
        for (rb, tb) in ls.iter().enumerate() {
            if b[rb].is_zero() {
                continue;
            }
            let joined: Vec<usize> = ta.iter().chain(tb.iter()).copied().collect();
            let Some((sorted, sign)) = sort_with_sign(&joined) else {
                continue;
            };
            let r = tuple_rank(n, &sorted);
            let term = a[ra].mul(&b[rb]);
            out[r] = if sign < 0 {
                out[r].sub(&term)
            } else {
                out[r].add(&term)
            };
        }
    }
    out
}

/// Coordinates of x ∧ y for plain vectors on n-space.
pub fn vector_wedge<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    let n = x.len();
    wedge_coords(n, 1, 1, x, y)
}

/// The induced matrix of m on the second exterior power, in the pair basis.
pub fn exterior_square_matrix<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let pairs = combinations(n, 2);
    let np = pairs.len();
    let w = m.witness().expect("empty matrix");
    let mut out = Matrix::zero(np, np, w);
    for (col, cd) in pairs.iter().enumerate() {
        let (c, d) = (cd[0], cd[1]);
        for (row, ab) in pairs.iter().enumerate() {
            let (a, b) = (ab[0], ab[1]);
            let v = m
                .at(a, c)
                .mul(m.at(b, d))
                .sub(&m.at(a, d).mul(m.at(b, c)));
            out.set(row, col, v);
        }
    }
    out
}

/// The symmetric 7x7 matrix B(u,v) defined by
/// (u ⌟ a) ∧ (v ⌟ a) ∧ a = B(u,v) · e_0∧…∧e_6.
/// A 3-form on a 7-space lies in the open GL(7)-orbit iff det(B) is nonzero.
pub fn g2_bilinear<F: Field>(a: &AltForm<F>) -> Matrix<F> {
    assert_eq!(a.degree, 3);
    assert_eq!(a.ambient_dim, 7, "g2_bilinear needs ambient dimension 7");
    let zero = a.coeffs[0].zero_of();
    let one = a.coeffs[0].one_of();
    let n = 7usize;
    let basis: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut v = vec![zero.clone(); n];
            v[i] = one.clone();
            v
        })
        .collect();
    let contracted: Vec<AltForm<F>> = (0..n).map(|i| a.contract(&basis[i])).collect();
    let pairs = combinations(n, 2);
    let mut entries = Vec::with_capacity(49);
    for u in 0..n {
        for v in 0..n {
            // coefficient of e_{0..6} in (e_u ⌟ a) ∧ (e_v ⌟ a) ∧ a:
            // sum over splits of {0..6} into (2,2,3) blocks with shuffle sign.
            let mut acc = zero.clone();
            for p1 in &pairs {
                let c1 = contracted[u].coeff(p1);
                if c1.is_zero() {
                    continue;
                }
                let rest1: Vec<usize> = (0..n).filter(|i| !p1.contains(i)).collect();
                for p2 in combinations(rest1.len(), 2) {
                    let q2: Vec<usize> = p2.iter().map(|&i| rest1[i]).collect();
                    let c2 = contracted[v].coeff(&q2);
                    if c2.is_zero() {
                        continue;
                    }
                    let q3: Vec<usize> =
                        rest1.iter().copied().filter(|i| !q2.contains(i)).collect();
                    let c3 = a.coeff(&q3);
                    if c3.is_zero() {
                        continue;
                    }
                    let full: Vec<usize> = p1.iter().chain(&q2).chain(&q3).copied().collect();
                    let (_, sign) = sort_with_sign(&full).expect("blocks are disjoint");
                    let term = c1.mul(&c2).mul(&c3);
                    acc = if sign < 0 {
                        acc.sub(&term)
                    } else {
                        acc.add(&term)
                    };
                }
            }
            entries.push(acc);
        }
    }
    Matrix::new(n, n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    fn e(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    }

    #[test]
    fn combination_indexing_roundtrip() {
        let combos = combinations(10, 3);
        assert_eq!(combos.len(), 120);
        for (r, c) in combos.iter().enumerate() {
            assert_eq!(tuple_rank(10, c), r);
        }
        assert_eq!(combinations(10, 2).len(), 45);
    }

    #[test]
    fn eval_on_basis_triples_and_signs() {
        let f = AltForm::from_terms(
            3,
            5,
            &Rat::one(),
            &[
                (vec![0, 1, 2], Rat::from_int(7)),
                (vec![1, 2, 4], Rat::from_int(-2)),
            ],
        );
        assert_eq!(f.eval3(&e(5, 0), &e(5, 1), &e(5, 2)), Rat::from_int(7));
        // odd permutation flips sign
        assert_eq!(f.eval3(&e(5, 1), &e(5, 0), &e(5, 2)), Rat::from_int(-7));
        // repeated argument kills the value
        assert_eq!(f.eval3(&e(5, 1), &e(5, 1), &e(5, 2)), Rat::zero());
        assert_eq!(f.coeff(&[4, 2, 1]), Rat::from_int(2));
    }

    #[test]
    fn contract_matches_triple_eval() {
        let f = AltForm::from_terms(
            3,
            6,
            &Rat::one(),
            &[
                (vec![0, 2, 4], Rat::from_int(3)),
                (vec![1, 2, 3], Rat::from_int(5)),
                (vec![3, 4, 5], Rat::from_int(-1)),
            ],
        );
        let u: Vec<Rat> = (0..6).map(|i| Rat::from_int(i as i64 - 2)).collect();
        let g = f.contract(&u);
        for a in 0..6 {
            for b in 0..6 {
                let direct = f.eval3(&u, &e(6, a), &e(6, b));
                let via = g.eval(&[e(6, a).as_slice(), e(6, b).as_slice()]);
                assert_eq!(direct, via);
            }
        }
        // contracting by zero gives the zero 2-form
        let z = f.contract(&vec![Rat::zero(); 6]);
        assert!(z.is_zero());
    }

    #[test]
    fn isotropy_is_basis_independent() {
        let f = AltForm::from_terms(3, 5, &Rat::one(), &[(vec![0, 1, 2], Rat::one())]);
        let w = Subspace::from_vectors(vec![e(5, 0), e(5, 1), e(5, 2)]);
        assert!(!f.is_isotropic(&w));
        // same space in a skewed spanning set
        let w2 = Subspace::from_vectors(vec![
            vec![
                Rat::from_int(2),
                Rat::from_int(3),
                Rat::zero(),
                Rat::zero(),
                Rat::zero(),
            ],
            vec![
                Rat::from_int(1),
                Rat::from_int(1),
                Rat::from_int(5),
                Rat::zero(),
                Rat::zero(),
            ],
            e(5, 2),
        ]);
        assert_eq!(w, w2);
        assert!(!f.is_isotropic(&w2));
        let iso = Subspace::from_vectors(vec![e(5, 1), e(5, 3), e(5, 4)]);
        assert!(f.is_isotropic(&iso));
    }

    #[test]
    fn decomposable_form_has_degenerate_g2_matrix() {
        let a = AltForm::from_terms(3, 7, &Rat::one(), &[(vec![0, 1, 2], Rat::one())]);
        let b = g2_bilinear(&a);
        assert!(b.rank() < 7);
        let z = AltForm::zero(3, 7, &Rat::one());
        let bz = g2_bilinear(&z);
        assert_eq!(bz.rank(), 0);
    }
}
