//! The four special trivectors on a 10-space and their ambient structures:
//! the Sp(4)-invariant trace form on the second wedge of a 5-space, the
//! G2 x SL(3) block form, the SL(2)-invariant form on wedge^2 Sym^4, and the
//! SL(3)-invariant form on the cubics of a 3-space.
//!
//! All models are built over the rationals; reduce with `AltForm::map` and
//! `Subspace::map` for prime-field runs.

use crate::exterior::{
    combinations, g2_bilinear, tuple_rank, vector_wedge, wedge_coords, AltForm,
};
use crate::field::{Field, Rat};
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The SL(W3)-invariant trivector on the cubics of W3, in the fixed monomial
/// coordinates, normalized by sigma0(x^3, y^3, z^3) = 1. Exactly nine index
/// triples carry nonzero coefficients.
pub fn sl3_sigma0() -> AltForm<Rat> {
    let one = Rat::one();
    let terms: Vec<(Vec<usize>, Rat)> = vec![
        (vec![0, 1, 2], Rat::from_int(1)),
        (vec![0, 5, 8], Rat::from_int(-3)),
        (vec![1, 4, 7], Rat::from_int(-3)),
        (vec![2, 3, 6], Rat::from_int(-3)),
        (vec![3, 4, 5], Rat::from_int(-3)),
        (vec![6, 7, 8], Rat::from_int(-3)),
        (vec![3, 8, 9], Rat::from_int(-6)),
        (vec![4, 6, 9], Rat::from_int(-6)),
        (vec![5, 7, 9], Rat::from_int(-6)),
    ];
    AltForm::from_terms(3, 10, &one, &terms)
}

/// sigma0 evaluated on three cubes is det^3; used pervasively in tests.
pub fn det3<F: Field>(u: &[F], v: &[F], w: &[F]) -> F {
    let d = Matrix::from_rows(vec![u.to_vec(), v.to_vec(), w.to_vec()]).det();
    d.mul(&d).mul(&d)
}

/// Sp(4) model: a symplectic 4-space, the 5-space V5 = ker(omega) inside
/// wedge^2 V4 with its quadratic form q, and the identification of
/// wedge^2 V5 with q-skew endomorphisms of V5.
pub struct Sp4Model {
    /// Gram matrix of q on V5 in the fixed basis.
    pub gram: Matrix<Rat>,
    /// Skew endomorphism attached to each pair basis vector of wedge^2 V5.
    pub endos: Vec<Matrix<Rat>>,
    /// sigma0(a, b, c) = Tr(a o b o c).
    pub sigma: AltForm<Rat>,
    /// The five basis vectors of V5 as elements of wedge^2 V4.
    pub v5_in_wedge2v4: Matrix<Rat>,
}

/// Builds the Sp(4)-invariant trivector. Alternation of the trace form is
/// verified during construction.
pub fn sp4_sigma0() -> Sp4Model {
    let one = Rat::one();
    let zero = Rat::zero();
    // V4 basis (a1, b1, a2, b2); omega = a1* ^ b1* + a2* ^ b2*.
    // Pair basis of wedge^2 V4: (01),(02),(03),(12),(13),(23).
    // V5 = ker(omega) basis:
    //   E1 = a1^a2, E2 = a1^b2, E3 = b1^a2, E4 = b1^b2, E5 = a1^b1 - a2^b2.
    let mut v5 = Matrix::zero(5, 6, &one);
    let pair = |a: usize, b: usize| tuple_rank(4, &[a, b]);
    v5.set(0, pair(0, 2), one.clone());
    v5.set(1, pair(0, 3), one.clone());
    v5.set(2, pair(1, 2), one.clone());
    v5.set(3, pair(1, 3), one.clone());
    v5.set(4, pair(0, 1), one.clone());
    v5.set(4, pair(2, 3), Rat::from_int(-1));

    // q(x, y) := coefficient of e0^e1^e2^e3 in x ^ y.
    let mut gram = Matrix::zero(5, 5, &one);
    for i in 0..5 {
        for j in 0..5 {
            let w = wedge_coords(4, 2, 2, v5.row(i), v5.row(j));
            gram.set(i, j, w[0].clone());
        }
    }
    assert_eq!(gram.rank(), 5, "q must be nondegenerate on V5");

    // Endomorphism of the pair basis vector E_a ^ E_b:
    // u |-> q(E_a, u) E_b - q(E_b, u) E_a, i.e. row b = gram row a,
    // row a = -gram row b.
    let pairs = combinations(5, 2);
    let endos: Vec<Matrix<Rat>> = pairs
        .iter()
        .map(|p| {
            let (a, b) = (p[0], p[1]);
            let mut m = Matrix::zero(5, 5, &one);
            for u in 0..5 {
                m.set(b, u, gram.at(a, u).clone());
                m.set(a, u, gram.at(b, u).neg());
            }
            m
        })
        .collect();

    let trace3 = |p: usize, q: usize, r: usize| -> Rat {
        let m = endos[p].mul(&endos[q]).mul(&endos[r]);
        let mut t = zero.clone();
        for i in 0..5 {
            t = t.add(m.at(i, i));
        }
        t
    };

    let mut coeffs = Vec::with_capacity(120);
    for t in combinations(10, 3) {
        coeffs.push(trace3(t[0], t[1], t[2]));
    }
    let sigma = AltForm::new(3, 10, coeffs);

    // Alternation check: a swap of the first two slots flips the sign.
    for p in 0..10 {
        for q in 0..10 {
            let r = (p + q + 1) % 10;
            assert_eq!(
                trace3(p, q, r),
                trace3(q, p, r).neg(),
                "trace form failed alternation"
            );
        }
    }

    Sp4Model {
        gram,
        endos,
        sigma,
        v5_in_wedge2v4: v5,
    }
}

/// The seven lines of the Fano plane on points 0..6, as sorted triples.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 3],
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [0, 4, 5],
    [1, 5, 6],
    [0, 2, 6],
];

/// G2 x SL(3) model: the Fano-plane 3-form alpha on coordinates 0..6 plus
/// the volume form beta on coordinates 7..9.
pub struct G2SL3Model {
    /// alpha as a 3-form on the 7-space.
    pub alpha: AltForm<Rat>,
    /// sigma0 = alpha + beta on the 10-space.
    pub sigma: AltForm<Rat>,
}

pub fn g2sl3_sigma0() -> G2SL3Model {
    let one = Rat::one();
    let terms7: Vec<(Vec<usize>, Rat)> = FANO_LINES
        .iter()
        .map(|l| (l.to_vec(), Rat::one()))
        .collect();
    let alpha = AltForm::from_terms(3, 7, &one, &terms7);
    let b = g2_bilinear(&alpha);
    assert!(
        !b.det().is_zero(),
        "Fano-plane form is degenerate; invalid alpha"
    );
    let mut terms10: Vec<(Vec<usize>, Rat)> = FANO_LINES
        .iter()
        .map(|l| (l.to_vec(), Rat::one()))
        .collect();
    terms10.push((vec![7, 8, 9], Rat::one()));
    let sigma = AltForm::from_terms(3, 10, &one, &terms10);
    G2SL3Model { alpha, sigma }
}

/// SL(2) model: V5 = Sym^4 of the standard 2-dimensional representation,
/// V10 = wedge^2 V5 with the induced raising/lowering/torus operators, the
/// 3-dimensional isotypic summand W3, and the invariant trivector cut out
/// by the incidence conditions at sampled points of P(V5).
pub struct SL2Model {
    /// sl2 operators on V5 (5x5): raising, lowering, torus.
    pub e5: Matrix<Rat>,
    pub f5: Matrix<Rat>,
    pub h5: Matrix<Rat>,
    /// Induced operators on wedge^2 V5 (10x10).
    pub e_op: Matrix<Rat>,
    pub f_op: Matrix<Rat>,
    pub h_op: Matrix<Rat>,
    /// W3 inside wedge^2 V5.
    pub w3: Subspace<Rat>,
    /// The complementary 7-dimensional isotypic summand.
    pub v7_summand: Subspace<Rat>,
    /// The invariant trivector, first nonzero coefficient normalized to 1.
    pub sigma: AltForm<Rat>,
    /// Dimension of the constraint-system kernel (must be 1).
    pub kernel_dim: usize,
    /// Points used in the solve (excluded from held-out testing).
    pub solve_points: Vec<Vec<Rat>>,
}

/// Derivation-induced matrix on wedge^2 from a matrix on the base space.
fn wedge2_derivation<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let n = m.rows;
    let w = m.witness().expect("empty matrix");
    let pairs = combinations(n, 2);
    let np = pairs.len();
    let mut out = Matrix::zero(np, np, w);
    // X(e_i ^ e_j) = X e_i ^ e_j + e_i ^ X e_j
    for (col, ij) in pairs.iter().enumerate() {
        let (i, j) = (ij[0], ij[1]);
        for a in 0..n {
            // (X e_i)_a * e_a ^ e_j
            if !m.at(a, i).is_zero() && a != j {
                let (t, sign) = if a < j { ((a, j), 1) } else { ((j, a), -1) };
                let r = tuple_rank(n, &[t.0, t.1]);
                let mut v = m.at(a, i).clone();
                if sign < 0 {
                    v = v.neg();
                }
                let cur = out.at(r, col).add(&v);
                out.set(r, col, cur);
            }
            // (X e_j)_a * e_i ^ e_a
            if !m.at(a, j).is_zero() && a != i {
                let (t, sign) = if i < a { ((i, a), 1) } else { ((a, i), -1) };
                let r = tuple_rank(n, &[t.0, t.1]);
                let mut v = m.at(a, j).clone();
                if sign < 0 {
                    v = v.neg();
                }
                let cur = out.at(r, col).add(&v);
                out.set(r, col, cur);
            }
        }
    }
    out
}

/// The wedge pairing between wedge^2 and wedge^3 of a 5-space, as the 10x10
/// matrix P[(ij),(klm)] = sign when the union is {0..4}, else 0.
pub fn wedge23_pairing<F: Field>(witness: &F) -> Matrix<F> {
    let pairs = combinations(5, 2);
    let triples = combinations(5, 3);
    let mut p = Matrix::zero(10, 10, witness);
    for (i, pr) in pairs.iter().enumerate() {
        for (j, tr) in triples.iter().enumerate() {
            let joined: Vec<usize> = pr.iter().chain(tr.iter()).copied().collect();
            if let Some((_, sign)) = crate::exterior::sort_with_sign(&joined) {
                p.set(i, j, witness.embed(sign as i64));
            }
        }
    }
    p
}

/// V_{4,[x]} = x ^ V5 and V_{7,[x]} = (x ^ W3)^perp inside wedge^2 V5.
/// Panics when x ^ W3 drops dimension, which would contradict the model.
pub fn sl2_vspaces<F: Field>(w3: &Subspace<F>, x: &[F]) -> (Subspace<F>, Subspace<F>) {
    assert_eq!(x.len(), 5);
    assert!(!x.iter().all(|c| c.is_zero()), "x must be nonzero");
    let witness = x.iter().find(|c| !c.is_zero()).unwrap();
    let one = witness.one_of();
    let zero = witness.zero_of();
    // x ^ V5: five spanning vectors x ^ e_i.
    let mut gens = Vec::with_capacity(5);
    for i in 0..5 {
        let mut ei = vec![zero.clone(); 5];
        ei[i] = one.clone();
        gens.push(vector_wedge(x, &ei));
    }
    let v4 = Subspace::from_vectors(gens);
    assert_eq!(v4.dim(), 4, "x ^ V5 must have dimension 4");
    // x ^ W3 inside wedge^3 V5.
    let xw3: Vec<Vec<F>> = (0..w3.dim())
        .map(|k| wedge_coords(5, 1, 2, x, &w3.basis_vector(k)))
        .collect();
    let xw3 = Subspace::from_vectors(xw3);
    assert_eq!(
        xw3.dim(),
        3,
        "x ^ W3 must have dimension 3 (W3 has no rank-2 elements)"
    );
    // V7 = annihilator of x ^ W3 under the wedge^3 x wedge^2 pairing.
    let pairing = wedge23_pairing(&one).transpose(); // rows: wedge^3, cols: wedge^2
    let v7 = xw3.annihilator(&pairing);
    assert_eq!(v7.dim(), 7, "V7 must have dimension 7");
    assert!(v7.contains_subspace(&v4), "V4 must sit inside V7");
    (v4, v7)
}

pub fn sl2_sigma0() -> SL2Model {
    let one = Rat::one();
    // Basis of V5 = Sym^4 U2: m_i = u^(4-i) v^i.
    // e = u d/dv, f = v d/du, h = [e, f].
    let mut e5 = Matrix::zero(5, 5, &one);
    let mut f5 = Matrix::zero(5, 5, &one);
    let mut h5 = Matrix::zero(5, 5, &one);
    for i in 0..5usize {
        if i >= 1 {
            e5.set(i - 1, i, Rat::from_int(i as i64));
        }
        if i + 1 < 5 {
            f5.set(i + 1, i, Rat::from_int(4 - i as i64));
        }
        h5.set(i, i, Rat::from_int(4 - 2 * i as i64));
    }
    let e_op = wedge2_derivation(&e5);
    let f_op = wedge2_derivation(&f5);
    let h_op = wedge2_derivation(&h5);

    // sl2 commutation relations for the induced operators.
    let comm = |a: &Matrix<Rat>, b: &Matrix<Rat>| {
        let ab = a.mul(b);
        let ba = b.mul(a);
        Matrix::from_rows(
            (0..ab.rows)
                .map(|i| {
                    (0..ab.cols)
                        .map(|j| ab.at(i, j).sub(ba.at(i, j)))
                        .collect()
                })
                .collect(),
        )
    };
    let two_e = e_op.map(|v| v.mul(&Rat::from_int(2)).div(&Rat::from_int(1)));
    assert_eq!(comm(&h_op, &e_op), two_e, "[h,e] != 2e");
    let minus_two_f = f_op.map(|v| v.mul(&Rat::from_int(-2)));
    assert_eq!(comm(&h_op, &f_op), minus_two_f, "[h,f] != -2f");
    assert_eq!(comm(&e_op, &f_op), h_op, "[e,f] != h");

    // W3: highest-weight line in the weight-2 space of wedge^2 V5, closed
    // under f. Weight of e_i ^ e_j is 8 - 2(i + j); weight 2 <=> i + j = 3.
    let pairs = combinations(5, 2);
    let wt2: Vec<usize> = pairs
        .iter()
        .enumerate()
        .filter(|(_, p)| p[0] + p[1] == 3)
        .map(|(r, _)| r)
        .collect();
    assert_eq!(wt2.len(), 2);
    // Solve e_op(c0 * p0 + c1 * p1) = 0.
    let col0: Vec<Rat> = (0..10).map(|r| e_op.at(r, wt2[0]).clone()).collect();
    let col1: Vec<Rat> = (0..10).map(|r| e_op.at(r, wt2[1]).clone()).collect();
    let sys = Matrix::from_rows(vec![col0, col1]).transpose();
    let ker = sys.kernel();
    assert_eq!(ker.rows, 1, "weight-2 highest-weight line must be unique");
    let mut w = vec![Rat::zero(); 10];
    w[wt2[0]] = ker.at(0, 0).clone();
    w[wt2[1]] = ker.at(0, 1).clone();
    let fw = f_op.apply(&w);
    let ffw = f_op.apply(&fw);
    let fff = f_op.apply(&ffw);
    assert!(fff.iter().all(|c| c.is_zero()), "f^3 must kill W3");
    let w3 = Subspace::from_vectors(vec![w, fw, ffw]);
    assert_eq!(w3.dim(), 3);

    // V7: the complementary summand, generated from the weight-6 highest
    // vector e0 ^ e1 by lowering. wedge^2 V5 = V7 + W3 directly.
    let mut hw7 = vec![Rat::zero(); 10];
    hw7[tuple_rank(5, &[0, 1])] = Rat::one();
    assert!(e_op.apply(&hw7).iter().all(|c| c.is_zero()));
    let mut v7_gens = vec![hw7.clone()];
    let mut cur = hw7;
    for _ in 0..6 {
        cur = f_op.apply(&cur);
        v7_gens.push(cur.clone());
    }
    assert!(f_op.apply(&cur).iter().all(|c| c.is_zero()), "f^7 must kill V7");
    let v7_summand = Subspace::from_vectors(v7_gens);
    assert_eq!(v7_summand.dim(), 7);
    assert_eq!(v7_summand.intersect(&w3).dim(), 0);
    assert_eq!(v7_summand.sum(&w3).dim(), 10);

    // Solve the 120-coefficient linear system: for sampled [x] in P(V5),
    // sigma(v, w, w') = 0 for v in V4_[x] and w, w' in V7_[x].
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a11);
    let mut solution = Matrix::identity(120, &one);
    let triples = combinations(10, 3);
    let mut solve_points = Vec::new();
    let n_points = 40;
    while solve_points.len() < n_points {
        let x: Vec<Rat> = (0..5)
            .map(|_| Rat::from_int(rng.gen_range(-5..=5)))
            .collect();
        if x.iter().all(|c| c.is_zero()) {
            continue;
        }
        let (v4, v7) = sl2_vspaces(&w3, &x);
        // Constraint rows restricted to the current solution space.
        let mut rows = Vec::new();
        for a in 0..v4.dim() {
            let va = v4.basis_vector(a);
            for bc in combinations(v7.dim(), 2) {
                let wb = v7.basis_vector(bc[0]);
                let wc = v7.basis_vector(bc[1]);
                // Row over the 120 coefficients: minor determinants.
                let row: Vec<Rat> = triples
                    .iter()
                    .map(|t| {
                        let minor: Vec<Vec<Rat>> = [&va, &wb, &wc]
                            .iter()
                            .map(|v| t.iter().map(|&c| v[c].clone()).collect())
                            .collect();
                        Matrix::from_rows(minor).det()
                    })
                    .collect();
                rows.push(row);
            }
        }
        let c = Matrix::from_rows(rows);
        let restricted = c.mul(&solution.transpose());
        let ker = restricted.kernel_with(&one);
        if ker.rows == 0 {
            solution = Matrix::empty(120);
            break;
        }
        solution = ker.mul(&solution);
        solve_points.push(x);
    }
    let kernel_dim = solution.rows;
    assert_eq!(
        kernel_dim, 1,
        "incidence constraints must cut out a line of trivectors"
    );
    let raw = solution.row_vec(0);
    let lead = raw
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero solution")
        .clone();
    let inv = lead.inv().unwrap();
    let coeffs: Vec<Rat> = raw.iter().map(|c| c.mul(&inv)).collect();
    let sigma = AltForm::new(3, 10, coeffs);

    SL2Model {
        e5,
        f5,
        h5,
        e_op,
        f_op,
        h_op,
        w3,
        v7_summand,
        sigma,
        kernel_dim,
        solve_points,
    }
}

/// Deterministic random trivector with small integer coefficients.
pub fn random_trivector(seed: u64) -> AltForm<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let coeffs: Vec<Rat> = (0..120)
            .map(|_| Rat::from_int(rng.gen_range(-9..=9)))
            .collect();
        if coeffs.iter().any(|c| !c.is_zero()) {
            return AltForm::new(3, 10, coeffs);
        }
    }
}

/// The same trivector reduced into a prime field: identical draws from the
/// same seed, so rational and prime-field runs see the same deformation.
pub fn random_trivector_fp(seed: u64, p: u64) -> AltForm<crate::field::Fp> {
    let rat = random_trivector(seed);
    let coeffs = rat
        .coeffs
        .iter()
        .map(|c| c.to_fp(p).expect("small integers reduce at any prime"))
        .collect();
    AltForm::new(3, 10, coeffs)
}

/// A symplectic transvection u |-> u + t * omega(u, v) v on the 4-space,
/// pushed to wedge^2 V4, restricted to V5, then to wedge^2 V5; used to test
/// the Sp(4)-invariance of the trace trivector.
pub fn sp4_transvection_on_v10(model: &Sp4Model, v: &[Rat], t: &Rat) -> Matrix<Rat> {
    assert_eq!(v.len(), 4);
    let one = Rat::one();
    // omega(u, w) with basis (a1, b1, a2, b2).
    let omega = |u: &[Rat], w: &[Rat]| -> Rat {
        u[0].mul(&w[1])
            .sub(&u[1].mul(&w[0]))
            .add(&u[2].mul(&w[3]))
            .sub(&u[3].mul(&w[2]))
    };
    let mut t4 = Matrix::identity(4, &one);
    for col in 0..4 {
        let mut ec = vec![Rat::zero(); 4];
        ec[col] = Rat::one();
        let coef = t.mul(&omega(&ec, v));
        for row in 0..4 {
            let cur = t4.at(row, col).add(&coef.mul(&v[row]));
            t4.set(row, col, cur);
        }
    }
    let t6 = crate::exterior::exterior_square_matrix(&t4);
    // Restrict to V5: columns = images of E_k expressed in the E basis.
    let e_mat = &model.v5_in_wedge2v4; // 5 x 6
    let mut t5 = Matrix::zero(5, 5, &one);
    for k in 0..5 {
        let img = t6.apply(e_mat.row(k));
        let sol = e_mat
            .transpose()
            .solve(&img)
            .expect("transvection must preserve V5");
        for r in 0..5 {
            t5.set(r, k, sol[r].clone());
        }
    }
    crate::exterior::exterior_square_matrix(&t5)
}
