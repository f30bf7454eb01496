//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! All linear algebra in this crate is generic over [`Field`], so a
//! computation set up over the rationals can be rerun verbatim over several
//! prime fields (the usual guard against bad-prime artifacts).
//!
//! Prime-field elements carry their modulus, so `zero`/`one`/`embed` are
//! instance methods: any element of a matrix is a witness for the field it
//! lives in. Code that may face entirely empty data takes an explicit
//! witness argument.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field. `inv` returns `None` exactly on zero.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero_of(&self) -> Self;
    fn one_of(&self) -> Self;
    /// The image of a signed integer in the field of `self`.
    fn embed(&self, n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }

    /// Serialization used in reports: `"p/q"` for rationals (`"p"` when the
    /// denominator is 1), the residue for prime-field elements.
    fn render(&self) -> String;
}

/// Rational scalar, always in lowest terms with positive denominator
/// (enforced by `BigRational`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn from_big_frac(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Reduction mod p. `None` when p divides the denominator.
    pub fn to_fp(&self, p: u64) -> Option<Fp> {
        let pb = BigInt::from(p);
        let dm = self.0.denom() % &pb;
        if dm.is_zero() {
            return None;
        }
        let red = |x: &BigInt| -> u64 {
            let mut r = x % &pb;
            if r.is_negative() {
                r += &pb;
            }
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        };
        let num = Fp::new(red(self.0.numer()), p);
        let den = Fp::new(red(self.0.denom()), p);
        Some(num.mul(&den.inv().expect("denominator reduced to zero")))
    }
}

impl Field for Rat {
    fn zero_of(&self) -> Self {
        Rat::zero()
    }
    fn one_of(&self) -> Self {
        Rat::one()
    }
    fn embed(&self, n: i64) -> Self {
        Rat::from_int(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn render(&self) -> String {
        if self.0.denom().is_one() {
            format!("{}", self.0.numer())
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Prime-field element: a residue in `[0, p)` carrying its modulus.
/// Arithmetic never mixes moduli; mixing panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub value: u64,
    pub modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be a prime >= 2");
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(n: i64, p: u64) -> Self {
        let m = n.rem_euclid(p as i64) as u64;
        Fp::new(m, p)
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mixed prime-field moduli {} and {}",
            self.modulus, rhs.modulus
        );
    }

    fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// A square root mod p when one exists (p odd). Tonelli-Shanks.
    pub fn sqrt(&self) -> Option<Fp> {
        let p = self.modulus;
        if self.value == 0 {
            return Some(*self);
        }
        if self.pow((p - 1) / 2).value != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        // Tonelli-Shanks for p = 1 mod 4.
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::new(2, p);
        while z.pow((p - 1) / 2).value == 1 {
            z = Fp::new(z.value + 1, p);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while t.value != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt.value != 1 {
                tt = tt.mul(&tt);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b.mul(&b);
            t = t.mul(&c);
            r = r.mul(&b);
        }
        Some(r)
    }
}

impl Field for Fp {
    fn zero_of(&self) -> Self {
        Fp::new(0, self.modulus)
    }
    fn one_of(&self) -> Self {
        Fp::new(1, self.modulus)
    }
    fn embed(&self, n: i64) -> Self {
        Fp::from_i64(n, self.modulus)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value as u128 + rhs.value as u128;
        Fp::new((s % self.modulus as u128) as u64, self.modulus)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value as u128 + (self.modulus - rhs.value) as u128;
        Fp::new((s % self.modulus as u128) as u64, self.modulus)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value as u128 * rhs.value as u128;
        Fp::new((s % self.modulus as u128) as u64, self.modulus)
    }
    fn neg(&self) -> Self {
        Fp::new(self.modulus - self.value, self.modulus)
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn render(&self) -> String {
        format!("{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_lowest_terms_positive_denominator() {
        let r = Rat::from_frac(4, -6);
        assert_eq!(r.render(), "-2/3");
        assert_eq!(Rat::from_frac(7, 1).render(), "7");
        assert_eq!(Rat::from_frac(-9, 3).render(), "-3");
    }

    #[test]
    fn rat_field_ops() {
        let a = Rat::from_frac(1, 2);
        let b = Rat::from_frac(1, 3);
        assert_eq!(a.add(&b), Rat::from_frac(5, 6));
        assert_eq!(a.mul(&b), Rat::from_frac(1, 6));
        assert_eq!(a.inv().unwrap(), Rat::from_int(2));
        assert!(Rat::zero().inv().is_none());
    }

    #[test]
    fn fp_basic() {
        let p = 10007;
        let a = Fp::from_i64(-1, p);
        assert_eq!(a.value, p - 1);
        let b = Fp::new(3, p);
        assert_eq!(b.mul(&b.inv().unwrap()).value, 1);
    }

    #[test]
    #[should_panic(expected = "mixed prime-field moduli")]
    fn fp_modulus_mixing_is_an_error() {
        let a = Fp::new(1, 10007);
        let b = Fp::new(1, 101);
        let _ = a.add(&b);
    }

    #[test]
    fn fp_sqrt() {
        for p in [10007u64, 20011, 65537] {
            let mut found = 0;
            for v in 2..200u64 {
                let x = Fp::new(v, p);
                if let Some(r) = x.sqrt() {
                    assert_eq!(r.mul(&r), x);
                    found += 1;
                }
            }
            assert!(found > 50);
        }
    }

    #[test]
    fn rat_reduction_mod_p() {
        let r = Rat::from_frac(22, 7);
        let p = 10007;
        let f = r.to_fp(p).unwrap();
        let seven_inv = Fp::new(7, p).inv().unwrap();
        assert_eq!(f, Fp::new(22, p).mul(&seven_inv));
        assert!(Rat::from_frac(1, 10007).to_fp(10007).is_none());
    }
}
