//! Dense univariate polynomials with unbounded integer coefficients.
//!
//! Coefficients are stored in ascending degree order; the vector is empty
//! for the zero polynomial and its last entry is nonzero otherwise. The
//! intermediate coefficients of the cyclotomic constructions outgrow
//! machine words quickly, so everything is `BigInt`-based.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    /// The indeterminate.
    pub fn x() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitution self(inner(x)) by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = IntPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPolynomial::constant(c.clone());
        }
        acc
    }

    /// x^deg · self(1/x): the coefficient vector reversed.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact division over ℤ: `Some(q)` with self = q·d, or `None` when no
    /// such integer-coefficient quotient exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_deg = d.deg().unwrap();
        let n_deg = self.deg().unwrap();
        if n_deg < d_deg {
            return None;
        }
        let d_lead = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![BigInt::zero(); n_deg - d_deg + 1];
        while let Some(r_deg) = rem.deg() {
            if r_deg < d_deg {
                return None;
            }
            let (q, r) = rem.leading().unwrap().div_rem(d_lead);
            if !r.is_zero() {
                return None;
            }
            let shift = r_deg - d_deg;
            rem = &rem - &d.scale(&q).shifted(shift);
            quo[shift] = q;
        }
        Some(IntPolynomial::from_coeffs(quo))
    }

    fn shifted(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Pseudo-division: multiplies the remainder by the divisor's leading
    /// coefficient once per reduction step, so quotient and remainder stay
    /// integral. Returns (quotient, remainder) with deg rem < deg d.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let d_deg = d.deg().unwrap();
        let d_lead = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = IntPolynomial::zero();
        while let Some(r_deg) = rem.deg() {
            if r_deg < d_deg {
                break;
            }
            let shift = r_deg - d_deg;
            let r_lead = rem.leading().unwrap().clone();
            quo = &quo.scale(d_lead) + &IntPolynomial::monomial(r_lead.clone(), shift);
            rem = &rem.scale(d_lead) - &d.scale(&r_lead).shifted(shift);
        }
        (quo, rem)
    }

    /// The content: gcd of all coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Canonical form: primitive with positive leading coefficient.
    pub fn canonical(&self) -> Self {
        let pp = self.primitive_part();
        match pp.leading() {
            Some(l) if l.is_negative() => -&pp,
            _ => pp,
        }
    }

    /// Polynomial gcd over ℤ[x] (content times primitive-PRS gcd), in
    /// canonical form.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.canonical();
        }
        if other.is_zero() {
            return self.canonical();
        }
        let content = self.content().gcd(&other.content());
        let (mut r0, mut r1) = (self.primitive_part(), other.primitive_part());
        if r0.deg() < r1.deg() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let (_, rem) = r0.pseudo_divrem(&r1);
            r0 = r1;
            r1 = rem.primitive_part();
        }
        r0.canonical().scale(&content)
    }

    /// Roots in [0, p) by exhaustive evaluation of the reduction mod p.
    pub fn roots_mod(&self, p: Prime) -> Vec<u64> {
        let pv = p.value();
        let pb = BigInt::from(pv);
        let reduced: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        let mut roots = Vec::new();
        for k in 0..pv {
            let mut acc: u64 = 0;
            for c in reduced.iter().rev() {
                acc = ((acc as u128 * k as u128 + *c as u128) % pv as u128) as u64;
            }
            if acc == 0 {
                roots.push(k);
            }
        }
        roots
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending-degree rendering in the variable k, e.g.
    /// `k^3 - 24*k^2 + 80*k - 64`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "k")?;
                    } else {
                        write!(f, "k^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    #[test]
    fn construction_strips_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0, 0, 3]).deg(), Some(2));
    }

    #[test]
    fn arithmetic_basics() {
        let a = poly(&[-4, 1]); // k - 4
        let b = poly(&[-4, 3]); // 3k - 4
        assert_eq!(&a * &b, poly(&[16, -16, 3]));
        assert_eq!(&a + &b, poly(&[-8, 4]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.eval(&BigInt::from(4)), BigInt::zero());
    }

    #[test]
    fn div_exact_cases() {
        let prod = poly(&[16, -16, 3]);
        assert_eq!(prod.div_exact(&poly(&[-4, 1])), Some(poly(&[-4, 3])));
        assert_eq!(prod.div_exact(&poly(&[-4, 3])), Some(poly(&[-4, 1])));
        // k² - 8k + 8 is not divisible by k - 2
        assert_eq!(poly(&[8, -8, 1]).div_exact(&poly(&[-2, 1])), None);
        // 2k/4 has no integer quotient
        assert_eq!(poly(&[0, 2]).div_exact(&poly(&[4])), None);
        assert_eq!(poly(&[0, 4]).div_exact(&poly(&[4])), Some(poly(&[0, 1])));
    }

    #[test]
    fn pseudo_divrem_identity() {
        let a = poly(&[3, 1, 4, 1, 5]);
        let d = poly(&[2, 7, 1]);
        let (q, r) = a.pseudo_divrem(&d);
        // lead(d)^steps · a = q·d + r with deg r < deg d; lead(d) = 1 here
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.deg() < d.deg());
    }

    #[test]
    fn content_and_canonical() {
        let a = poly(&[6, -12, 18]);
        assert_eq!(a.content(), BigInt::from(6));
        assert_eq!(a.primitive_part(), poly(&[1, -2, 3]));
        let b = poly(&[4, 0, -2]);
        assert_eq!(b.canonical(), poly(&[-2, 0, 1]));
        assert!(IntPolynomial::zero().canonical().is_zero());
    }

    #[test]
    fn gcd_of_products() {
        let a = poly(&[-4, 1]);
        let b = poly(&[-4, 3]);
        let c = poly(&[16, -12, 1]);
        let left = &(&a * &b) * &c;
        let right = &(&a * &c) * &poly(&[1, 1]);
        assert_eq!(left.gcd(&right), &a * &c);
        // content contributes
        let g = poly(&[2]).gcd(&poly(&[0, 4]));
        assert_eq!(g, poly(&[2]));
    }

    #[test]
    fn compose_and_reverse() {
        // q(y) = y² - 3 at 2x gives 4x² - 3, then at 2x-1 gives 16x² - 16x + 1
        let q = poly(&[-3, 0, 1]);
        let two_x = poly(&[0, 2]);
        let r = q.compose(&two_x);
        assert_eq!(r, poly(&[-3, 0, 4]));
        let s = r.compose(&poly(&[-1, 2]));
        assert_eq!(s, poly(&[1, -16, 16]));
        assert_eq!(s.reversed(), poly(&[16, -16, 1]));
    }

    #[test]
    fn roots_mod_examples() {
        // k² - 16k + 16 mod 11 has roots 6 and 10
        let p12 = poly(&[16, -16, 1]);
        let p = Prime::new(11).unwrap();
        assert_eq!(p12.roots_mod(p), vec![6, 10]);
        // negative coefficients reduce correctly
        let lin = poly(&[-4, 1]);
        assert_eq!(lin.roots_mod(p), vec![4]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[-64, 80, -24, 1]).to_string(), "k^3 - 24*k^2 + 80*k - 64");
        assert_eq!(poly(&[-4, 3]).to_string(), "3*k - 4");
        assert_eq!(poly(&[0, -1]).to_string(), "-k");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-40i64..40, 0..8).prop_map(|cs| IntPolynomial::from_i64(&cs))
    }

    proptest! {
        #[test]
        fn mul_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn product_division_roundtrips(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            let q = prod.div_exact(&b).expect("a*b divisible by b");
            prop_assert_eq!(q, a.clone());
        }

        #[test]
        fn pseudo_division_invariant(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (q, r) = a.pseudo_divrem(&d);
            prop_assert!(r.deg() < d.deg() || r.is_zero());
            // q·d + r equals lead(d)^s · a for some s >= 0: check by
            // comparing primitive parts with matching signs when a != 0
            if !a.is_zero() {
                let lhs = &(&q * &d) + &r;
                if !lhs.is_zero() {
                    prop_assert_eq!(lhs.canonical(), a.canonical());
                }
            }
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
        }
    }
}
