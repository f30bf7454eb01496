//! Schubert calculus on Grassmannians Gr(k, n): partition-indexed classes,
//! Pieri and Giambelli multiplication, integration, Chern classes of the
//! third exterior power of the dual tautological subbundle through formal
//! roots, and the intersection numbers those produce.
//!
//! The Chow ring is presented on the Chern roots y_1..y_k of the dual
//! tautological subbundle: the Schur polynomial s_lambda(y) is the Schubert
//! class sigma_lambda for lambda inside the k x (n-k) box and zero outside.
//! Integration reads off the coefficient of the full-box class, which on the
//! root side is the coefficient of y^(box + staircase) after multiplying by
//! the Vandermonde determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// A partition: weakly decreasing positive parts (trailing zeros trimmed).
pub type Partition = Vec<usize>;

fn trim(mut p: Partition) -> Partition {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn fits_box(p: &[usize], k: usize, cols: usize) -> bool {
    p.len() <= k && p.iter().all(|&x| x <= cols)
}

/// Conjugate (transpose) partition.
pub fn conjugate(p: &[usize]) -> Partition {
    if p.is_empty() {
        return vec![];
    }
    (1..=p[0]).map(|c| p.iter().filter(|&&x| x >= c).count()).collect()
}

/// The complement of lambda in the k x (n-k) box, reversed: the Poincare
/// dual partition.
pub fn box_dual(p: &[usize], k: usize, cols: usize) -> Partition {
    let mut parts: Vec<usize> = (0..k)
        .map(|i| cols - p.get(k - 1 - i).copied().unwrap_or(0))
        .collect();
    parts.retain(|&x| x > 0);
    parts
}

// ---------------------------------------------------------------------------
// Dense multivariate polynomials in at most 6 variables (the formal roots)
// ---------------------------------------------------------------------------

/// Sparse polynomial in k variables with big-integer coefficients.
#[derive(Clone, Debug)]
pub struct RootPoly {
    pub k: usize,
    pub terms: HashMap<Vec<u8>, BigInt>,
}

impl RootPoly {
    pub fn one(k: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert(vec![0u8; k], BigInt::one());
        RootPoly { k, terms }
    }

    pub fn zero(k: usize) -> Self {
        RootPoly {
            k,
            terms: HashMap::new(),
        }
    }

    pub fn insert_add(&mut self, key: Vec<u8>, val: BigInt) {
        if val.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(BigInt::zero);
        *e += val;
        if e.is_zero() {
            // keep the map clean; look up the key again to remove
        }
    }

    pub fn coeff(&self, key: &[u8]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by (1 + y_{i1} + y_{i2} + ... ) for a subset of variables.
    pub fn mul_one_plus_linear(&self, vars: &[usize]) -> RootPoly {
        let mut out = RootPoly::zero(self.k);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.clone());
            for &v in vars {
                let mut e2 = e.clone();
                e2[v] += 1;
                out.insert_add(e2, c.clone());
            }
        }
        out.prune();
        out
    }

    pub fn mul(&self, other: &RootPoly) -> RootPoly {
        assert_eq!(self.k, other.k);
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = RootPoly::zero(self.k);
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                let key: Vec<u8> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.insert_add(key, c1 * c2);
            }
        }
        out.prune();
        out
    }

    fn prune(&mut self) {
        self.terms.retain(|_, v| !v.is_zero());
    }

    /// The homogeneous part of a given total degree.
    pub fn degree_part(&self, d: usize) -> RootPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        RootPoly { k: self.k, terms }
    }

    /// Elementary symmetric polynomial e_d(y_1..y_k).
    pub fn elementary(k: usize, d: usize) -> RootPoly {
        let mut out = RootPoly::zero(k);
        for combo in crate::exterior::combinations(k, d) {
            let mut e = vec![0u8; k];
            for i in combo {
                e[i] = 1;
            }
            out.insert_add(e, BigInt::one());
        }
        out
    }

    /// The Vandermonde product of pairwise differences, expanded as the
    /// signed sum over permutations of the staircase monomial.
    pub fn vandermonde(k: usize) -> RootPoly {
        // det(y_i^(k-j)) = sum over permutations
        let mut out = RootPoly::zero(k);
        let mut perm: Vec<usize> = (0..k).collect();
        permute_all(&mut perm, 0, &mut |p, sign| {
            let mut e = vec![0u8; k];
            for (i, &pi) in p.iter().enumerate() {
                e[i] = (k - 1 - pi) as u8;
            }
            out.insert_add(e, BigInt::from(sign as i64));
        });
        out
    }
}

fn permute_all(perm: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize], i32)) {
    // Heap's algorithm with explicit sign tracking is overkill here; use
    // recursion with inversion-count signs on small k.
    fn inversions(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
    if i == perm.len() {
        let sign = if inversions(perm) % 2 == 0 { 1 } else { -1 };
        f(perm, sign);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute_all(perm, i + 1, f);
        perm.swap(i, j);
    }
}

/// Chern-class generating polynomial of the d-th exterior power of a bundle
/// whose roots are y_1..y_k: the product of (1 + y_{i1} + .. + y_{id}) over
/// all d-subsets. Grading by total degree gives c_1, c_2, ...
pub fn chern_of_exterior_power(k: usize, d: usize) -> RootPoly {
    let mut p = RootPoly::one(k);
    for subset in crate::exterior::combinations(k, d) {
        p = p.mul_one_plus_linear(&subset);
    }
    p
}

/// Coefficient of the Schur polynomial s_lambda in a symmetric polynomial,
/// via the alternant: it is the coefficient of y^(lambda + staircase) in
/// poly * Vandermonde. Evaluated per partition by convolving the 720-term
/// Vandermonde against the polynomial.
pub fn schur_coefficient(poly: &RootPoly, vandermonde: &RootPoly, lambda: &[usize]) -> BigInt {
    let k = poly.k;
    let mut target = vec![0i64; k];
    for i in 0..k {
        let part = lambda.get(i).copied().unwrap_or(0) as i64;
        target[i] = part + (k - 1 - i) as i64;
    }
    let mut acc = BigInt::zero();
    for (e, c) in &vandermonde.terms {
        let mut key = Vec::with_capacity(k);
        let mut ok = true;
        for i in 0..k {
            let need = target[i] - e[i] as i64;
            if need < 0 {
                ok = false;
                break;
            }
            key.push(need as u8);
        }
        if !ok {
            continue;
        }
        let pc = poly.coeff(&key);
        if !pc.is_zero() {
            acc += c * pc;
        }
    }
    acc
}

/// All partitions of m that fit in the k x cols box.
pub fn box_partitions_of(m: usize, k: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = max_part.min(remaining);
        for part in (1..=hi).rev() {
            cur.push(part);
            rec(remaining - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(m, cols, k, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Schubert classes
// ---------------------------------------------------------------------------

/// An integer combination of Schubert basis classes on Gr(k, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    pub k: usize,
    pub n: usize,
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl SchubertClass {
    pub fn zero(k: usize, n: usize) -> Self {
        SchubertClass {
            k,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, n: usize) -> Self {
        let mut c = SchubertClass::zero(k, n);
        c.coeffs.insert(vec![], BigInt::one());
        c
    }

    pub fn basis(k: usize, n: usize, lambda: &[usize]) -> Self {
        let lam = trim(lambda.to_vec());
        assert!(fits_box(&lam, k, n - k), "partition outside the box");
        let mut c = SchubertClass::zero(k, n);
        c.coeffs.insert(lam, BigInt::one());
        c
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let lam = trim(lambda);
        if !fits_box(&lam, self.k, self.n - self.k) {
            return; // vanishes in the Chow ring
        }
        let e = self.coeffs.entry(lam).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            // cleaned in normalize
        }
    }

    pub fn normalize(&mut self) {
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|v| v.is_zero())
    }

    pub fn coeff(&self, lambda: &[usize]) -> BigInt {
        self.coeffs
            .get(&trim(lambda.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, s: &BigInt) -> SchubertClass {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = &*v * s;
        }
        out.normalize();
        out
    }

    pub fn add(&self, other: &SchubertClass) -> SchubertClass {
        assert_eq!((self.k, self.n), (other.k, other.n));
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out.normalize();
        out
    }

    /// Pieri rule: multiply by the single-row class sigma_r, truncating to
    /// the box.
    pub fn pieri(&self, r: usize) -> SchubertClass {
        let cols = self.n - self.k;
        let mut out = SchubertClass::zero(self.k, self.n);
        if r == 0 {
            return self.clone();
        }
        if r > cols {
            return out;
        }
        for (lam, c) in &self.coeffs {
            // horizontal strips: mu_i in [max(lam_i, mu_{i+1} constraint)...]
            // enumerate mu with lam_i <= mu_i <= min(cols, lam_{i-1})
            let rows = self.k;
            let mut mu = vec![0usize; rows];
            fn rec(
                i: usize,
                rows: usize,
                cols: usize,
                remaining: usize,
                lam: &[usize],
                mu: &mut Vec<usize>,
                out: &mut Vec<Partition>,
            ) {
                if i == rows {
                    if remaining == 0 {
                        out.push(mu.clone());
                    }
                    return;
                }
                let lam_i = lam.get(i).copied().unwrap_or(0);
                let upper_prev = if i == 0 {
                    cols
                } else {
                    lam.get(i - 1).copied().unwrap_or(0)
                };
                let hi = upper_prev.min(cols).min(lam_i + remaining);
                for m in lam_i..=hi {
                    mu[i] = m;
                    rec(i + 1, rows, cols, remaining - (m - lam_i), lam, mu, out);
                }
                mu[i] = 0;
            }
            let mut mus = Vec::new();
            rec(0, rows, cols, r, lam, &mut mu, &mut mus);
            for m in mus {
                out.add_term(m, c.clone());
            }
        }
        out.normalize();
        out
    }

    /// General product via the Giambelli determinant of the right factor
    /// expanded into iterated Pieri multiplications.
    pub fn multiply(&self, other: &SchubertClass) -> SchubertClass {
        assert_eq!(
            (self.k, self.n),
            (other.k, other.n),
            "ambient Grassmannian mismatch"
        );
        // Expand the factor with fewer terms.
        let (base, expand) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = SchubertClass::zero(self.k, self.n);
        for (mu, c) in &expand.coeffs {
            let m = mu.len();
            if m == 0 {
                out = out.add(&base.scale(c));
                continue;
            }
            // det(h_{mu_i - i + j})_{i,j in 1..m}
            let mut perm: Vec<usize> = (0..m).collect();
            let mut acc = SchubertClass::zero(self.k, self.n);
            permute_all(&mut perm, 0, &mut |p, sign| {
                let mut rows: Vec<i64> = Vec::with_capacity(m);
                for i in 0..m {
                    rows.push(mu[i] as i64 - i as i64 + p[i] as i64);
                }
                if rows.iter().any(|&r| r < 0) {
                    return;
                }
                let mut term = base.clone();
                for &r in &rows {
                    term = term.pieri(r as usize);
                    if term.is_zero() {
                        break;
                    }
                }
                if sign < 0 {
                    term = term.scale(&BigInt::from(-1));
                }
                acc = acc.add(&term);
            });
            out = out.add(&acc.scale(c));
        }
        out.normalize();
        out
    }

    /// Integration over the Grassmannian: the coefficient of the full box.
    pub fn integrate(&self) -> BigInt {
        let box_part: Partition = vec![self.n - self.k; self.k];
        self.coeff(&box_part)
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(l, c)| format!("{c}*s{l:?}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Expand a symmetric root polynomial into Schubert classes (box-truncated).
pub fn root_poly_to_class(poly: &RootPoly, k: usize, n: usize) -> SchubertClass {
    let vdm = RootPoly::vandermonde(k);
    let mut out = SchubertClass::zero(k, n);
    let degrees: std::collections::BTreeSet<usize> = poly
        .terms
        .keys()
        .map(|e| e.iter().map(|&x| x as usize).sum())
        .collect();
    for d in degrees {
        let part = poly.degree_part(d);
        for lam in box_partitions_of(d, k, n - k) {
            let c = schur_coefficient(&part, &vdm, &lam);
            out.add_term(lam, c);
        }
    }
    out.normalize();
    out
}

/// The Chern classes c_1 .. c_20 of the third exterior power of the dual
/// rank-6 tautological subbundle on Gr(6, 10), in the Schubert basis.
pub fn chern_exterior_cube() -> Vec<SchubertClass> {
    let poly = chern_of_exterior_power(6, 3);
    let vdm = RootPoly::vandermonde(6);
    let mut out = Vec::with_capacity(20);
    for d in 1..=20usize {
        let part = poly.degree_part(d);
        let mut cls = SchubertClass::zero(6, 10);
        for lam in box_partitions_of(d, 6, 4) {
            let c = schur_coefficient(&part, &vdm, &lam);
            cls.add_term(lam, c);
        }
        cls.normalize();
        out.push(cls);
    }
    out
}

/// Integral over Gr(k, n) of a product of root polynomials: coefficient of
/// the box Schur class in the product.
pub fn integrate_root_polys(factors: &[&RootPoly], k: usize, n: usize) -> BigInt {
    assert!(!factors.is_empty());
    // Convolve everything except the largest factor with the Vandermonde,
    // then pair against the largest factor.
    let mut idx: Vec<usize> = (0..factors.len()).collect();
    idx.sort_by_key(|&i| factors[i].terms.len());
    let big = factors[*idx.last().unwrap()];
    let mut small = RootPoly::vandermonde(k);
    for &i in &idx[..idx.len() - 1] {
        small = small.mul(factors[i]);
    }
    let box_target: Vec<i64> = (0..k).map(|i| (n - k + (k - 1 - i)) as i64).collect();
    let mut acc = BigInt::zero();
    for (e, c) in &small.terms {
        let mut key = Vec::with_capacity(k);
        let mut ok = true;
        for i in 0..k {
            let need = box_target[i] - e[i] as i64;
            if need < 0 {
                ok = false;
                break;
            }
            key.push(need as u8);
        }
        if !ok {
            continue;
        }
        let pc = big.coeff(&key);
        if !pc.is_zero() {
            acc += c * pc;
        }
    }
    acc
}

/// The five Segre numbers of the rank-4 tautological quotient bundle paired
/// against the top Chern class of the third exterior power of the dual
/// subbundle on Gr(6, 10). The Segre classes of the quotient are, up to
/// signs that cancel in every listed monomial, the elementary symmetric
/// polynomials in the six formal roots.
pub struct SegreNumbers {
    pub s1_4: BigInt,
    pub s1_2_s2: BigInt,
    pub s1_s3: BigInt,
    pub s2_2: BigInt,
    pub s4: BigInt,
}

pub fn dv_segre_numbers() -> SegreNumbers {
    let c_all = chern_of_exterior_power(6, 3);
    let top = c_all.degree_part(20);
    let e1 = RootPoly::elementary(6, 1);
    let e2 = RootPoly::elementary(6, 2);
    let e3 = RootPoly::elementary(6, 3);
    let e4 = RootPoly::elementary(6, 4);
    SegreNumbers {
        s1_4: integrate_root_polys(&[&top, &e1, &e1, &e1, &e1], 6, 10),
        s1_2_s2: integrate_root_polys(&[&top, &e1, &e1, &e2], 6, 10),
        s1_s3: integrate_root_polys(&[&top, &e1, &e3], 6, 10),
        s2_2: integrate_root_polys(&[&top, &e2, &e2], 6, 10),
        s4: integrate_root_polys(&[&top, &e4], 6, 10),
    }
}

/// The auxiliary top-Chern computations on Gr(3,7), Gr(4,7), Gr(5,7).
pub struct AuxChernChecks {
    /// Pairings of c10((wedge^2 E3)^3 + wedge^3 E3) against sigma_2 and
    /// sigma_(1,1) on Gr(3,7).
    pub gr37_pairings: (BigInt, BigInt),
    /// c4(wedge^3 E4) on Gr(4,7) in the Schubert basis.
    pub gr47_c4: SchubertClass,
    /// Integral of c10(wedge^3 E5) over Gr(5,7).
    pub gr57_c10: BigInt,
}

pub fn aux_chern_checks() -> AuxChernChecks {
    // Gr(3,7): bundle (O^3 tensor wedge^2 E3) + wedge^3 E3, rank 10.
    // Roots: each pair-sum three times, plus the full sum once.
    let mut p37 = RootPoly::one(3);
    for pair in crate::exterior::combinations(3, 2) {
        for _ in 0..3 {
            p37 = p37.mul_one_plus_linear(&pair);
        }
    }
    p37 = p37.mul_one_plus_linear(&[0, 1, 2]);
    let c10 = p37.degree_part(10);
    let vdm3 = RootPoly::vandermonde(3);
    // sigma_2 = s_(2) = h_2, sigma_(1,1) = e_2 as Schur polynomials
    let mut h2 = RootPoly::zero(3);
    for i in 0..3u8 {
        for j in i..3 {
            let mut e = vec![0u8; 3];
            e[i as usize] += 1;
            e[j as usize] += 1;
            h2.insert_add(e, BigInt::one());
        }
    }
    let e2 = RootPoly::elementary(3, 2);
    let _ = vdm3;
    let pair_h2 = integrate_root_polys(&[&c10, &h2], 3, 7);
    let pair_e2 = integrate_root_polys(&[&c10, &e2], 3, 7);

    // Gr(4,7): c4 of wedge^3 E4 (rank 4).
    let p47 = chern_of_exterior_power(4, 3);
    let c4 = p47.degree_part(4);
    let gr47_c4 = root_poly_to_class(&c4, 4, 7);

    // Gr(5,7): c10 of wedge^3 E5 (rank 10) integrated over the 10-fold.
    let p57 = chern_of_exterior_power(5, 3);
    let c10_57 = p57.degree_part(10);
    let one = RootPoly::one(5);
    let gr57_c10 = integrate_root_polys(&[&c10_57, &one], 5, 7);

    AuxChernChecks {
        gr37_pairings: (pair_h2, pair_e2),
        gr47_c4,
        gr57_c10,
    }
}

/// Pluecker degree of Gr(k, n) by the hook length formula on the rectangle:
/// (k(n-k))! divided by the product of hook lengths. The independent oracle
/// for integrate(sigma_1^dim).
pub fn grassmannian_degree(k: usize, n: usize) -> BigInt {
    let cols = n - k;
    let mut num = BigInt::one();
    for i in 1..=(k * cols) {
        num *= BigInt::from(i as u64);
    }
    let mut den = BigInt::one();
    for i in 0..k {
        for j in 0..cols {
            den *= BigInt::from((k - i) + (cols - j) - 1);
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn pieri_on_gr24() {
        // sigma_1 * sigma_1 = sigma_2 + sigma_11 on Gr(2,4)
        let s1 = SchubertClass::basis(2, 4, &[1]);
        let p = s1.pieri(1);
        assert_eq!(p.coeff(&[2]), b(1));
        assert_eq!(p.coeff(&[1, 1]), b(1));
        assert_eq!(p.coeffs.len(), 2);
        // degree of Gr(2,4) is 2
        let top = s1.pieri(1).pieri(1).pieri(1);
        assert_eq!(top.integrate(), b(2));
    }

    #[test]
    fn multiply_by_identity_and_box_overflow() {
        let s = SchubertClass::basis(6, 10, &[3, 2, 1]);
        let one = SchubertClass::one(6, 10);
        assert_eq!(s.multiply(&one), s);
        let boxc = SchubertClass::basis(6, 10, &[4, 4, 4, 4, 4, 4]);
        let s1 = SchubertClass::basis(6, 10, &[1]);
        assert!(boxc.multiply(&s1).is_zero());
    }

    #[test]
    fn giambelli_route_matches_pieri_route() {
        // products with single-row classes agree between the general rule
        // and the Pieri rule
        let cases: Vec<(Vec<usize>, usize)> = vec![
            (vec![2, 1], 2),
            (vec![3, 2, 1], 3),
            (vec![4, 2, 2, 1], 1),
            (vec![2, 2], 4),
        ];
        for (lam, r) in cases {
            let a = SchubertClass::basis(6, 10, &lam);
            let row = SchubertClass::basis(6, 10, &[r]);
            assert_eq!(a.multiply(&row), a.pieri(r), "lam={lam:?}, r={r}");
        }
    }

    #[test]
    fn duality_pairs_to_one() {
        for lam in [vec![2, 1], vec![4, 3, 2], vec![1, 1, 1], vec![4, 4, 1, 1]] {
            let a = SchubertClass::basis(6, 10, &lam);
            let d = box_dual(&lam, 6, 4);
            let bclass = SchubertClass::basis(6, 10, &d);
            assert_eq!(a.multiply(&bclass).integrate(), b(1), "lam={lam:?}");
        }
    }

    #[test]
    fn whitney_sum_of_sub_and_quotient_is_trivial() {
        // c(S6) c(Q4) = 1 with c_j(S6) = (-1)^j sigma_(1^j), c_i(Q4) = sigma_i
        for d in 1..=10usize {
            let mut acc = SchubertClass::zero(6, 10);
            for j in 0..=d {
                let i = d - j;
                if j > 6 || i > 4 {
                    continue;
                }
                let cs = if j == 0 {
                    SchubertClass::one(6, 10)
                } else {
                    SchubertClass::basis(6, 10, &vec![1; j]).scale(&b(if j % 2 == 0 {
                        1
                    } else {
                        -1
                    }))
                };
                let cq = if i == 0 {
                    SchubertClass::one(6, 10)
                } else {
                    SchubertClass::basis(6, 10, &[i])
                };
                acc = acc.add(&cs.multiply(&cq));
            }
            assert!(acc.is_zero(), "degree {d}");
        }
    }

    #[test]
    fn degree_formula_oracle() {
        assert_eq!(grassmannian_degree(2, 4), b(2));
        assert_eq!(grassmannian_degree(2, 5), b(5));
        assert_eq!(grassmannian_degree(3, 6), b(42));
        // integrate(sigma_1^(k(n-k))) equals the hook-length degree
        let mut c = SchubertClass::one(2, 5);
        for _ in 0..6 {
            c = c.pieri(1);
        }
        assert_eq!(c.integrate(), grassmannian_degree(2, 5));
    }

    #[test]
    fn schur_coefficient_reads_small_cases() {
        // e_2 in 3 variables is s_(1,1)
        let e2 = RootPoly::elementary(3, 2);
        let vdm = RootPoly::vandermonde(3);
        assert_eq!(schur_coefficient(&e2, &vdm, &[1, 1]), b(1));
        assert_eq!(schur_coefficient(&e2, &vdm, &[2]), b(0));
        // h_2 = s_(2)
        let mut h2 = RootPoly::zero(3);
        for i in 0..3usize {
            for j in i..3 {
                let mut e = vec![0u8; 3];
                e[i] += 1;
                e[j] += 1;
                h2.insert_add(e, BigInt::one());
            }
        }
        assert_eq!(schur_coefficient(&h2, &vdm, &[2]), b(1));
        assert_eq!(schur_coefficient(&h2, &vdm, &[1, 1]), b(0));
    }

    #[test]
    fn first_chern_class_of_exterior_cube() {
        let cs = chern_exterior_cube();
        assert_eq!(cs.len(), 20);
        // each root appears in C(5,2) = 10 triples
        assert_eq!(cs[0].coeff(&[1]), b(10));
        assert_eq!(cs[0].coeffs.len(), 1);
    }

    #[test]
    fn top_chern_integral_agrees_between_routes() {
        // the polynomial/alternant route and the Schubert/Pieri route give
        // the same degree for the top class against sigma_1^4
        let c20 = chern_exterior_cube().pop().unwrap();
        let mut cls = c20;
        for _ in 0..4 {
            cls = cls.pieri(1);
        }
        assert_eq!(cls.integrate(), b(1452));
    }
}
