//! Finite Debarre-Voisin geometry: membership of 6-spaces in the variety
//! cut out by a trivector, singular points of the Pluecker hypersurface,
//! tangent ranks and excess fibers of the defining section, the special
//! subvariety constructors for each model, exhaustive monomial sweeps, and
//! point samplers on the auxiliary varieties.

use crate::exterior::{combinations, vector_wedge, AltForm};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::symw3::{self, mul_dual_w3_sym2, mul_w3_sym2, mul_w3_w3, square};
use crate::zoo::sl3_sigma0;
use rand::Rng;

/// sigma restricted to the 6-space, as the vector of its 20 basis-triple
/// values in lexicographic order.
pub fn restriction_vector<F: Field>(sigma: &AltForm<F>, w6: &Subspace<F>) -> Vec<F> {
    assert_eq!(w6.dim(), 6, "expected a 6-dimensional subspace");
    assert_eq!(w6.ambient_dim(), 10);
    let rows: Vec<Vec<F>> = (0..6).map(|i| w6.basis_vector(i)).collect();
    combinations(6, 3)
        .into_iter()
        .map(|t| sigma.eval3(&rows[t[0]], &rows[t[1]], &rows[t[2]]))
        .collect()
}

/// Membership in the Debarre-Voisin variety: sigma vanishes identically on
/// the 6-space.
pub fn dv_member<F: Field>(sigma: &AltForm<F>, w6: &Subspace<F>) -> bool {
    restriction_vector(sigma, w6).iter().all(|v| v.is_zero())
}

/// Singularity test for a point of the Pluecker hypersurface: sigma vanishes
/// on wedge^2(U3) wedge V10.
pub fn x_singular_at<F: Field>(sigma: &AltForm<F>, u3: &Subspace<F>) -> bool {
    assert_eq!(u3.dim(), 3, "expected a 3-dimensional subspace");
    assert_eq!(u3.ambient_dim(), 10);
    let witness = u3.basis().witness().unwrap();
    let zero = witness.zero_of();
    let one = witness.one_of();
    let rows: Vec<Vec<F>> = (0..3).map(|i| u3.basis_vector(i)).collect();
    for pair in combinations(3, 2) {
        for v in 0..10 {
            let mut ev = vec![zero.clone(); 10];
            ev[v] = one.clone();
            if !sigma.eval3(&rows[pair[0]], &rows[pair[1]], &ev).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The 20 x 24 matrix of the differential of the defining section at a
/// member point: rows are basis triples of the 6-space, columns the maps
/// w_a -> e_mu for the four non-pivot coordinates mu.
pub fn dv_differential<F: Field>(sigma: &AltForm<F>, w6: &Subspace<F>) -> Matrix<F> {
    assert_eq!(w6.dim(), 6);
    let rows: Vec<Vec<F>> = (0..6).map(|i| w6.basis_vector(i)).collect();
    let comp = w6.complement_coords();
    assert_eq!(comp.len(), 4);
    let witness = w6.basis().witness().unwrap();
    let zero = witness.zero_of();
    let one = witness.one_of();
    let unit = |m: usize| -> Vec<F> {
        let mut v = vec![zero.clone(); 10];
        v[m] = one.clone();
        v
    };
    let triples = combinations(6, 3);
    let mut entries = Vec::with_capacity(20 * 24);
    for t in &triples {
        for a in 0..6usize {
            for &m in &comp {
                if !t.contains(&a) {
                    entries.push(zero.clone());
                    continue;
                }
                let em = unit(m);
                let args: Vec<&[F]> = t
                    .iter()
                    .map(|&i| {
                        if i == a {
                            em.as_slice()
                        } else {
                            rows[i].as_slice()
                        }
                    })
                    .collect();
                entries.push(sigma.eval(&args));
            }
        }
    }
    Matrix::new(20, 24, entries)
}

/// Cokernel data of the differential at a member point.
#[derive(Clone, Debug)]
pub struct ExcessFiber<F: Field> {
    pub point: Subspace<F>,
    /// Rows: a basis of functionals on wedge^3 W6-dual vanishing on the
    /// image of the differential; the excess fiber in coordinates.
    pub functionals: Matrix<F>,
}

#[derive(Clone, Debug)]
pub struct TangentData<F: Field> {
    pub rank: usize,
    pub tangent_dim: usize,
    pub excess: ExcessFiber<F>,
}

/// Rank and excess fiber of the differential. Errors when the point is not
/// a member; tangency has no meaning off the variety in exact arithmetic.
pub fn dv_tangent_rank<F: Field>(
    sigma: &AltForm<F>,
    w6: &Subspace<F>,
) -> Result<TangentData<F>, String> {
    if !dv_member(sigma, w6) {
        return Err("not a member of the Debarre-Voisin variety".to_string());
    }
    let m = dv_differential(sigma, w6);
    let witness = w6.basis().witness().unwrap();
    let rank = m.rank();
    let coker = m.transpose().kernel_with(witness);
    assert_eq!(coker.rows, 20 - rank);
    Ok(TangentData {
        rank,
        tangent_dim: 24 - rank,
        excess: ExcessFiber {
            point: w6.clone(),
            functionals: coker,
        },
    })
}

/// Image of sigma' restricted to the point, in the cokernel coordinates.
pub fn excess_project<F: Field>(excess: &ExcessFiber<F>, sigma_prime: &AltForm<F>) -> Vec<F> {
    let v = restriction_vector(sigma_prime, &excess.point);
    excess.functionals.apply(&v)
}

// ---------------------------------------------------------------------------
// SL(3) model constructions on V10 = Sym^3 W3
// ---------------------------------------------------------------------------

/// Gauss-map point: the tangent 3-space x^2 . W3 to the Veronese of cubes.
pub fn gauss_point<F: Field>(x: &[F]) -> Subspace<F> {
    assert!(!x.iter().all(|c| c.is_zero()), "x must be nonzero");
    let witness = x.iter().find(|c| !c.is_zero()).unwrap();
    let one = witness.one_of();
    let zero = witness.zero_of();
    let sq = square(x);
    let gens: Vec<Vec<F>> = (0..3)
        .map(|i| {
            let mut e = vec![zero.clone(); 3];
            e[i] = one.clone();
            mul_w3_sym2(&e, &sq)
        })
        .collect();
    let s = Subspace::from_vectors(gens);
    assert_eq!(s.dim(), 3);
    s
}

/// L(a, H) = (a . I(a,H)-perp)-perp for a linear form a on W3 and a
/// 2-dimensional H inside Sym^2 of the kernel of a.
pub fn sl3_l_space<F: Field>(a: &[F], h: &Subspace<F>) -> Result<Subspace<F>, String> {
    assert_eq!(a.len(), 3);
    assert_eq!(h.ambient_dim(), 6, "H lives in Sym^2 W3");
    if h.dim() != 2 {
        return Err("H must be 2-dimensional".to_string());
    }
    let i_perp = symw3::apolar_annihilator(h);
    if i_perp.dim() != 4 {
        return Err("I(a,H)-perp degenerated".to_string());
    }
    let t4: Vec<Vec<F>> = (0..4)
        .map(|k| mul_dual_w3_sym2(a, &i_perp.basis_vector(k)))
        .collect();
    let t4 = Subspace::from_vectors(t4);
    if t4.dim() != 4 {
        return Err("a . I(a,H)-perp dropped dimension".to_string());
    }
    let l = symw3::apolar_annihilator(&t4);
    if l.dim() != 6 {
        return Err("L(a,H) is not 6-dimensional".to_string());
    }
    Ok(l)
}

/// M(a, x) = (a . J(a,x)-perp)-perp with J(a,x) = x . Ker(a).
pub fn sl3_m_space<F: Field>(a: &[F], x: &[F]) -> Result<Subspace<F>, String> {
    assert_eq!(a.len(), 3);
    assert_eq!(x.len(), 3);
    if x.iter().all(|c| c.is_zero()) {
        return Err("x must be nonzero".to_string());
    }
    let ker = symw3::linear_form_kernel(a);
    if ker.dim() != 2 {
        return Err("a must be a nonzero linear form".to_string());
    }
    let j: Vec<Vec<F>> = (0..2)
        .map(|k| mul_w3_w3(x, &ker.basis_vector(k)))
        .collect();
    let j = Subspace::from_vectors(j);
    if j.dim() != 2 {
        return Err("J(a,x) dropped dimension".to_string());
    }
    let j_perp = symw3::apolar_annihilator(&j);
    let t4: Vec<Vec<F>> = (0..j_perp.dim())
        .map(|k| mul_dual_w3_sym2(a, &j_perp.basis_vector(k)))
        .collect();
    let t4 = Subspace::from_vectors(t4);
    if t4.dim() != 4 {
        return Err("a . J(a,x)-perp dropped dimension".to_string());
    }
    let m = symw3::apolar_annihilator(&t4);
    if m.dim() != 6 {
        return Err("M(a,x) is not 6-dimensional".to_string());
    }
    Ok(m)
}

/// The adapted K_L point x^2 W3 + y^2 W3 for independent x, y: a sum of two
/// Gauss-map points, with the two 3-blocks explicit in the basis.
pub fn sl3_l_point_from_xy<F: Field>(x: &[F], y: &[F]) -> Subspace<F> {
    let gx = gauss_point(x);
    let gy = gauss_point(y);
    let s = gx.sum(&gy);
    assert_eq!(s.dim(), 6, "x and y must give transverse Gauss points");
    s
}

// ---------------------------------------------------------------------------
// Sp(4) model constructions on V10 = wedge^2 V5
// ---------------------------------------------------------------------------

/// j(x) = x ^ x-perp (with respect to the quadratic form) for an isotropic
/// x in the 5-space: a 3-dimensional subspace of the 10-space.
pub fn sp4_j<F: Field>(gram: &Matrix<F>, x: &[F]) -> Result<Subspace<F>, String> {
    assert_eq!(x.len(), 5);
    let gx = gram.apply(x);
    let qxx = (0..5).fold(x[0].zero_of(), |acc, i| acc.add(&x[i].mul(&gx[i])));
    if !qxx.is_zero() {
        return Err("x is not isotropic".to_string());
    }
    let witness = x.iter().find(|c| !c.is_zero()).ok_or("x must be nonzero")?;
    let perp = Matrix::from_rows(vec![gx]).kernel_with(&witness.one_of());
    if perp.rows != 4 {
        return Err("x-perp must have dimension 4".to_string());
    }
    let gens: Vec<Vec<F>> = (0..4).map(|i| vector_wedge(x, perp.row(i))).collect();
    let j = Subspace::from_vectors(gens);
    if j.dim() != 3 {
        return Err("j(x) must have dimension 3".to_string());
    }
    Ok(j)
}

/// The 6-space j(x) + j(y); errors on overlap.
pub fn sp4_pair<F: Field>(gram: &Matrix<F>, x: &[F], y: &[F]) -> Result<Subspace<F>, String> {
    let jx = sp4_j(gram, x)?;
    let jy = sp4_j(gram, y)?;
    let s = jx.sum(&jy);
    if s.dim() != 6 {
        return Err("j(x) and j(y) overlap".to_string());
    }
    Ok(s)
}

/// The value of sigma' on the canonical basis of j(x): the induced cubic
/// on the quadric threefold, defined up to a nonzero scale, so exactly its
/// vanishing is meaningful.
pub fn sp4_induced_cubic<F: Field>(
    gram: &Matrix<F>,
    sigma_prime: &AltForm<F>,
    x: &[F],
) -> Result<F, String> {
    let j = sp4_j(gram, x)?;
    let r: Vec<Vec<F>> = (0..3).map(|i| j.basis_vector(i)).collect();
    Ok(sigma_prime.eval3(&r[0], &r[1], &r[2]))
}

// ---------------------------------------------------------------------------
// G2 x SL(3) model constructions
// ---------------------------------------------------------------------------

/// W4 + W2 inside V7 + W3 coordinates, from a coordinate 4-subset of 0..6
/// and a 2-subspace of the last three coordinates.
pub fn g2sl3_block_point<F: Field>(
    w4_coords: &[usize],
    w2: &Subspace<F>,
    witness: &F,
) -> Subspace<F> {
    assert_eq!(w4_coords.len(), 4);
    assert_eq!(w2.ambient_dim(), 3);
    assert_eq!(w2.dim(), 2);
    let zero = witness.zero_of();
    let one = witness.one_of();
    let mut gens: Vec<Vec<F>> = w4_coords
        .iter()
        .map(|&c| {
            let mut v = vec![zero.clone(); 10];
            v[c] = one.clone();
            v
        })
        .collect();
    for i in 0..2 {
        let b = w2.basis_vector(i);
        let mut v = vec![zero.clone(); 10];
        for k in 0..3 {
            v[7 + k] = b[k].clone();
        }
        gens.push(v);
    }
    let s = Subspace::from_vectors(gens);
    assert_eq!(s.dim(), 6);
    s
}

// ---------------------------------------------------------------------------
// SL(2) model constructions on V10 = wedge^2 V5
// ---------------------------------------------------------------------------

/// A point of the incidence component: V4_[x] plus a 2-dimensional lift
/// inside V7_[x]. The lift vectors must lie in V7_[x].
pub fn sl2_k1_point<F: Field>(
    w3: &Subspace<F>,
    x: &[F],
    lift: &[Vec<F>; 2],
) -> Result<Subspace<F>, String> {
    let (v4, v7) = crate::zoo::sl2_vspaces(w3, x);
    for v in lift {
        if !v7.contains(v) {
            return Err("lift vector is not inside V7_[x]".to_string());
        }
    }
    let w6 = v4.sum(&Subspace::from_vectors(vec![lift[0].clone(), lift[1].clone()]));
    if w6.dim() != 6 {
        return Err("lift does not complement V4_[x]".to_string());
    }
    Ok(w6)
}

// ---------------------------------------------------------------------------
// Monomial sweeps for the SL(3) model
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSweeps {
    /// Monomial 3-subsets singular on the hypersurface; expected: the three
    /// tangent spaces m^2 . W3.
    pub singular_triples: Vec<Vec<usize>>,
    /// Number of the 220 monomial multiset triples where the column-sum
    /// criterion matches the evaluation.
    pub criterion_matches: usize,
    /// Total number of multiset triples scanned (220).
    pub multisets_scanned: usize,
    /// Monomial 6-subspaces of the 7-monomial span on which the trivector
    /// vanishes; expected: none.
    pub isotropic_six: Vec<Vec<usize>>,
}

/// Multisets of size k from 0..n (weakly increasing tuples).
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if cur[i] + 1 < n {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[i];
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

/// The three exhaustive scans over the 10 cubic monomials.
pub fn monomial_sweeps() -> MonomialSweeps {
    let sigma = sl3_sigma0();
    let one = crate::field::Rat::one();
    let zero = crate::field::Rat::zero();
    let unit = |i: usize| {
        let mut v = vec![zero.clone(); 10];
        v[i] = one.clone();
        v
    };

    // (i) all 120 monomial 3-subsets, classified by the singularity test
    let mut singular_triples = Vec::new();
    for t in combinations(10, 3) {
        let u3 = Subspace::from_vectors(t.iter().map(|&i| unit(i)).collect());
        if x_singular_at(&sigma, &u3) {
            singular_triples.push(t);
        }
    }

    // (ii) all 220 monomial multiset triples against the column-sum rule
    let all = multisets(10, 3);
    let multisets_scanned = all.len();
    let mut criterion_matches = 0;
    for ms in all {
        let value = sigma.eval3(&unit(ms[0]), &unit(ms[1]), &unit(ms[2]));
        let sums: Vec<usize> = (0..3)
            .map(|c| ms.iter().map(|&i| symw3::SYM3_EXP[i][c]).sum())
            .collect();
        let all_xyz = ms.iter().all(|&i| i == 9);
        let predicted_nonzero = sums == vec![3, 3, 3] && !all_xyz;
        if predicted_nonzero == !value.is_zero() {
            criterion_matches += 1;
        }
    }

    // (iii) monomial 6-subspaces of the span of x^3, x^2z, xz^2, y^3, y^2z,
    // yz^2, z^3 (indices 0,7,4,1,5,8,2): none may be isotropic
    let seven = [0usize, 7, 4, 1, 5, 8, 2];
    let mut isotropic_six = Vec::new();
    for c in combinations(7, 6) {
        let idxs: Vec<usize> = c.iter().map(|&i| seven[i]).collect();
        let w6 = Subspace::from_vectors(idxs.iter().map(|&i| unit(i)).collect());
        if dv_member(&sigma, &w6) {
            isotropic_six.push(idxs);
        }
    }

    MonomialSweeps {
        singular_triples,
        criterion_matches,
        multisets_scanned,
        isotropic_six,
    }
}

// ---------------------------------------------------------------------------
// Point samplers
// ---------------------------------------------------------------------------

/// Random isotropic vectors of a quadratic form, by sweeping lines through
/// a known isotropic point x0: for w with q(x0, w) invertible,
/// 2 q(x0, w) w - q(w, w) x0 is isotropic.
pub fn quadric_points<F: Field, R: Rng>(
    gram: &Matrix<F>,
    x0: &[F],
    count: usize,
    rng: &mut R,
    rand_elem: &mut dyn FnMut(&mut R) -> F,
) -> Vec<Vec<F>> {
    let n = gram.rows;
    let pair = |a: &[F], b: &[F]| -> F {
        let gb = gram.apply(b);
        (0..n).fold(a[0].zero_of(), |acc, i| acc.add(&a[i].mul(&gb[i])))
    };
    assert!(pair(x0, x0).is_zero(), "x0 must be isotropic");
    let two = x0[0].one_of().embed(2);
    let mut out = Vec::with_capacity(count);
    let mut guard = 0usize;
    while out.len() < count {
        guard += 1;
        assert!(guard < 10000 * (count + 1), "sampler exhausted its budget");
        let w: Vec<F> = (0..n).map(|_| rand_elem(rng)).collect();
        let qx0w = pair(x0, &w);
        if qx0w.is_zero() {
            continue;
        }
        let qww = pair(&w, &w);
        let c = two.mul(&qx0w);
        let x: Vec<F> = (0..n)
            .map(|i| c.mul(&w[i]).sub(&qww.mul(&x0[i])))
            .collect();
        if x.iter().all(|v| v.is_zero()) {
            continue;
        }
        debug_assert!(pair(&x, &x).is_zero());
        out.push(x);
    }
    out
}

/// Points of the quadric threefold where the cubic induced by sigma' also
/// vanishes, found by scanning pencils through the base isotropic point
/// over a prime field. Points are deduplicated projectively.
pub fn sp4_cubic_zero_points<R: Rng>(
    gram: &Matrix<crate::field::Fp>,
    sigma_prime: &AltForm<crate::field::Fp>,
    x0: &[crate::field::Fp],
    count: usize,
    rng: &mut R,
) -> Vec<Vec<crate::field::Fp>> {
    use crate::field::Fp;
    let p = x0[0].modulus;
    let n = gram.rows;
    let pair = |a: &[Fp], b: &[Fp]| -> Fp {
        let gb = gram.apply(b);
        (0..n).fold(Fp::new(0, p), |acc, i| acc.add(&a[i].mul(&gb[i])))
    };
    let two = Fp::new(2, p);
    let mut out: Vec<Vec<Fp>> = Vec::new();
    let normalize = |x: &[Fp]| -> Vec<Fp> {
        let lead = x.iter().find(|c| !c.is_zero()).unwrap();
        let inv = lead.inv().unwrap();
        x.iter().map(|c| c.mul(&inv)).collect()
    };
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 200, "cubic-zero sampler exhausted its budget");
        let w0: Vec<Fp> = (0..n).map(|_| Fp::new(rng.gen_range(0..p), p)).collect();
        let w1: Vec<Fp> = (0..n).map(|_| Fp::new(rng.gen_range(0..p), p)).collect();
        for t in 0..p {
            if out.len() >= count {
                break;
            }
            let tf = Fp::new(t, p);
            let w: Vec<Fp> = (0..n).map(|i| w0[i].add(&tf.mul(&w1[i]))).collect();
            let qx0w = pair(x0, &w);
            if qx0w.is_zero() {
                continue;
            }
            let qww = pair(&w, &w);
            let c = two.mul(&qx0w);
            let x: Vec<Fp> = (0..n)
                .map(|i| c.mul(&w[i]).sub(&qww.mul(&x0[i])))
                .collect();
            if x.iter().all(|v| v.is_zero()) {
                continue;
            }
            let Ok(val) = sp4_induced_cubic(gram, sigma_prime, &x) else {
                continue;
            };
            if val.is_zero() {
                let nx = normalize(&x);
                if !out.contains(&nx) {
                    out.push(nx);
                }
            }
        }
    }
    out
}

/// A point of the quintic Fano threefold in Gr(2, V5-dual) cut out by the
/// three Pluecker conditions from W3.
pub struct XPoint<F: Field> {
    /// The 2-space of linear forms on V5.
    pub v2: Subspace<F>,
    /// Its kernel V3 inside V5.
    pub v3: Subspace<F>,
    /// U3 = wedge^2 V3 inside wedge^2 V5.
    pub u3: Subspace<F>,
}

/// Sample points of the threefold: for a random linear form phi, the set of
/// psi with (phi ^ psi) orthogonal to W3 is generically 2-dimensional and
/// is then a point of the threefold containing phi.
pub fn fano3fold_points<F: Field, R: Rng>(
    w3: &Subspace<F>,
    count: usize,
    rng: &mut R,
    rand_elem: &mut dyn FnMut(&mut R) -> F,
) -> Vec<XPoint<F>> {
    let pairs = combinations(5, 2);
    let mut out = Vec::with_capacity(count);
    let mut guard = 0usize;
    while out.len() < count {
        guard += 1;
        assert!(guard < 10000 * (count + 1), "sampler exhausted its budget");
        let phi: Vec<F> = (0..5).map(|_| rand_elem(rng)).collect();
        if phi.iter().all(|v| v.is_zero()) {
            continue;
        }
        let witness = phi.iter().find(|v| !v.is_zero()).unwrap().clone();
        // rows: for each W3 basis vector xi, the linear condition on psi:
        // sum_{i<j} xi_{ij} (phi_i psi_j - phi_j psi_i) = 0
        let mut rows = Vec::with_capacity(3);
        for k in 0..3 {
            let xi = w3.basis_vector(k);
            let mut row = vec![witness.zero_of(); 5];
            for (r, p) in pairs.iter().enumerate() {
                let (i, j) = (p[0], p[1]);
                if xi[r].is_zero() {
                    continue;
                }
                row[j] = row[j].add(&xi[r].mul(&phi[i]));
                row[i] = row[i].sub(&xi[r].mul(&phi[j]));
            }
            rows.push(row);
        }
        let sys = Matrix::from_rows(rows);
        let ker = sys.kernel_with(&witness);
        if ker.rows != 2 {
            continue; // special phi, resample
        }
        let v2 = Subspace::from_spanning(&ker);
        // V3 = common kernel of the forms in V2
        let v3m = v2.basis().kernel_with(&witness);
        if v3m.rows != 3 {
            continue;
        }
        let v3 = Subspace::from_spanning(&v3m);
        let gens: Vec<Vec<F>> = combinations(3, 2)
            .into_iter()
            .map(|p| vector_wedge(&v3.basis_vector(p[0]), &v3.basis_vector(p[1])))
            .collect();
        let u3 = Subspace::from_vectors(gens);
        if u3.dim() != 3 {
            continue;
        }
        out.push(XPoint { v2, v3, u3 });
    }
    out
}
