//! Coordinates on the symmetric powers of a 3-space W3 and the apolarity
//! pairing between Sym^a(W3) and Sym^a(W3^dual).
//!
//! A cubic is stored by the coefficients alpha_m of
//!   alpha = alpha_300 x^3 + ... + 3 alpha_210 x^2 y + ... + 6 alpha_111 xyz,
//! i.e. with the multinomial factors pulled out, and a quadric likewise with
//! factors (1,1,1,2,2,2). In these coordinates the cube map reads
//! u |-> (u^m)_m with no extra factors, and the contraction pairing against
//! plain coefficient vectors on the dual side is diagonal with entries 1,
//! which keeps every annihilator computation integral.
//!
//! Monomial order for cubics (degree 3): exponent triples
//! (300,030,003,210,102,021,120,201,012,111) <-> indices 0..9.

use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Exponent triples of the degree-3 monomial basis, in the fixed order.
pub const SYM3_EXP: [[usize; 3]; 10] = [
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [1, 0, 2],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
    [0, 1, 2],
    [1, 1, 1],
];

/// Multinomial weight of each degree-3 monomial (3 choose exponents).
pub const SYM3_MULT: [i64; 10] = [1, 1, 1, 3, 3, 3, 3, 3, 3, 6];

/// Exponent triples of the degree-2 monomial basis: squares first.
pub const SYM2_EXP: [[usize; 3]; 6] = [
    [2, 0, 0],
    [0, 2, 0],
    [0, 0, 2],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
];

pub const SYM2_MULT: [i64; 6] = [1, 1, 1, 2, 2, 2];

pub fn sym3_index(exp: &[usize; 3]) -> usize {
    SYM3_EXP.iter().position(|e| e == exp).expect("bad exponent")
}

pub fn sym2_index(exp: &[usize; 3]) -> usize {
    SYM2_EXP.iter().position(|e| e == exp).expect("bad exponent")
}

/// Coordinates of the cube u^3 of a vector u in W3.
pub fn cube<F: Field>(u: &[F]) -> Vec<F> {
    assert_eq!(u.len(), 3);
    SYM3_EXP.iter().map(|e| monomial_value(u, e)).collect()
}

/// Coordinates of the square u^2.
pub fn square<F: Field>(u: &[F]) -> Vec<F> {
    assert_eq!(u.len(), 3);
    SYM2_EXP.iter().map(|e| monomial_value(u, e)).collect()
}

fn monomial_value<F: Field>(u: &[F], exp: &[usize; 3]) -> F {
    let mut acc = u[0].one_of();
    for (i, &e) in exp.iter().enumerate() {
        for _ in 0..e {
            acc = acc.mul(&u[i]);
        }
    }
    acc
}

/// Plain polynomial coefficients -> scaled coordinates (divide by the
/// multinomial factor). Requires 2 and 3 invertible, true away from p = 2, 3.
pub fn sym3_from_plain<F: Field>(plain: &[F]) -> Vec<F> {
    assert_eq!(plain.len(), 10);
    plain
        .iter()
        .zip(SYM3_MULT.iter())
        .map(|(c, &m)| c.div(&c.embed(m)))
        .collect()
}

pub fn sym3_to_plain<F: Field>(coords: &[F]) -> Vec<F> {
    assert_eq!(coords.len(), 10);
    coords
        .iter()
        .zip(SYM3_MULT.iter())
        .map(|(c, &m)| c.mul(&c.embed(m)))
        .collect()
}

pub fn sym2_from_plain<F: Field>(plain: &[F]) -> Vec<F> {
    assert_eq!(plain.len(), 6);
    plain
        .iter()
        .zip(SYM2_MULT.iter())
        .map(|(c, &m)| c.div(&c.embed(m)))
        .collect()
}

pub fn sym2_to_plain<F: Field>(coords: &[F]) -> Vec<F> {
    assert_eq!(coords.len(), 6);
    coords
        .iter()
        .zip(SYM2_MULT.iter())
        .map(|(c, &m)| c.mul(&c.embed(m)))
        .collect()
}

/// Product of two W3 vectors as a quadric (scaled coordinates).
pub fn mul_w3_w3<F: Field>(u: &[F], v: &[F]) -> Vec<F> {
    assert_eq!(u.len(), 3);
    assert_eq!(v.len(), 3);
    let zero = u[0].zero_of();
    let mut plain = vec![zero; 6];
    for i in 0..3 {
        for j in 0..3 {
            let mut exp = [0usize; 3];
            exp[i] += 1;
            exp[j] += 1;
            let idx = sym2_index(&exp);
            plain[idx] = plain[idx].add(&u[i].mul(&v[j]));
        }
    }
    sym2_from_plain(&plain)
}

/// Product of a W3 vector with a quadric (scaled coords), as a cubic
/// (scaled coords).
pub fn mul_w3_sym2<F: Field>(u: &[F], q: &[F]) -> Vec<F> {
    assert_eq!(u.len(), 3);
    assert_eq!(q.len(), 6);
    let qplain = sym2_to_plain(q);
    let zero = u[0].zero_of();
    let mut plain = vec![zero; 10];
    for i in 0..3 {
        if u[i].is_zero() {
            continue;
        }
        for (nu, qe) in SYM2_EXP.iter().enumerate() {
            if qplain[nu].is_zero() {
                continue;
            }
            let mut exp = *qe;
            exp[i] += 1;
            let idx = sym3_index(&exp);
            plain[idx] = plain[idx].add(&u[i].mul(&qplain[nu]));
        }
    }
    sym3_from_plain(&plain)
}

/// Product on the dual side, where vectors are plain coefficient lists:
/// a linear form (3 coords) times a dual quadric (6 coords, plain) gives a
/// dual cubic (10 coords, plain). Plain coefficients convolve directly.
pub fn mul_dual_w3_sym2<F: Field>(a: &[F], psi: &[F]) -> Vec<F> {
    assert_eq!(a.len(), 3);
    assert_eq!(psi.len(), 6);
    let zero = a[0].zero_of();
    let mut plain = vec![zero; 10];
    for i in 0..3 {
        if a[i].is_zero() {
            continue;
        }
        for (nu, qe) in SYM2_EXP.iter().enumerate() {
            if psi[nu].is_zero() {
                continue;
            }
            let mut exp = *qe;
            exp[i] += 1;
            let idx = sym3_index(&exp);
            plain[idx] = plain[idx].add(&a[i].mul(&psi[nu]));
        }
    }
    plain
}

/// Diagonal apolarity pairing of a cubic (scaled coords) against a dual
/// cubic (plain coords).
pub fn apolar_pair3<F: Field>(phi: &[F], psi: &[F]) -> F {
    assert_eq!(phi.len(), 10);
    assert_eq!(psi.len(), 10);
    let mut acc = phi[0].zero_of();
    for (a, b) in phi.iter().zip(psi.iter()) {
        acc = acc.add(&a.mul(b));
    }
    acc
}

/// Annihilator in Sym^3 W3 of a subspace of the dual side (or vice versa);
/// with the diagonal pairing this is a plain kernel computation.
pub fn apolar_annihilator<F: Field>(space: &Subspace<F>) -> Subspace<F> {
    let n = space.ambient_dim();
    let witness = space
        .basis()
        .witness()
        .expect("annihilator of the zero space is everything")
        .clone();
    space.annihilator(&Matrix::identity(n, &witness))
}

/// Weights induced on the 10 cubic monomials by weights on (x, y, z).
pub fn sym3_weights(w: &[i64; 3]) -> Vec<i64> {
    SYM3_EXP
        .iter()
        .map(|e| (0..3).map(|i| e[i] as i64 * w[i]).sum())
        .collect()
}

/// The kernel of a linear form a on W3, as a 2-dimensional subspace.
pub fn linear_form_kernel<F: Field>(a: &[F]) -> Subspace<F> {
    assert_eq!(a.len(), 3);
    let m = Matrix::from_rows(vec![a.to_vec()]);
    Subspace::from_spanning(&m.kernel())
}
