//! Exact arithmetic in GF(p) for odd primes p, and in the quadratic
//! extension GF(p)(√c) ≅ GF(p²) for a nonsquare c.
//!
//! All values are immutable and all operations are pure, so everything in
//! this module is safe to use concurrently without coordination.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

/// Errors raised when constructing a [`Prime`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is even; only odd primes are supported")]
    Even(u64),
    #[error("{0} is too small; need p >= 3")]
    TooSmall(u64),
}

/// An odd prime modulus, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Validates `p` with a deterministic Miller–Rabin test (exact for all
    /// 64-bit inputs) and rejects even or tiny values.
    pub fn new(p: u64) -> Result<Self, PrimeError> {
        if p < 3 {
            return Err(PrimeError::TooSmall(p));
        }
        if p % 2 == 0 {
            return Err(PrimeError::Even(p));
        }
        if !is_prime_u64(p) {
            return Err(PrimeError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// The residue of `v` modulo p, accepting negative inputs.
    pub fn fp(self, v: i64) -> Fp {
        let p = self.0 as i64;
        Fp {
            value: v.rem_euclid(p) as u64,
            p: self.0,
        }
    }

    /// The residue of an unsigned value modulo p.
    pub fn fp_u(self, v: u64) -> Fp {
        Fp {
            value: v % self.0,
            p: self.0,
        }
    }

    pub fn zero(self) -> Fp {
        self.fp_u(0)
    }

    pub fn one(self) -> Fp {
        self.fp_u(1)
    }

    /// All residues 0, 1, ..., p-1 in order.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        let p = self.0;
        (0..p).map(move |v| Fp { value: v, p })
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic Miller–Rabin primality test, exact below 2^64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set is exact for every n < 3.3 * 10^24.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Quadratic character of an element of GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Legendre {
    Zero,
    Square,
    Nonsquare,
}

/// A residue modulo an odd prime p. The modulus travels with the value;
/// combining elements of different moduli is a contract violation and
/// panics rather than producing silent garbage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn prime(self) -> Prime {
        Prime(self.p)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, rhs: Fp) -> u64 {
        assert_eq!(self.p, rhs.p, "mixed moduli: {} vs {}", self.p, rhs.p);
        self.p
    }

    pub fn pow(self, mut exp: u64) -> Fp {
        let mut base = self.value;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            exp >>= 1;
        }
        Fp {
            value: acc,
            p: self.p,
        }
    }

    /// Multiplicative inverse by Fermat: x^(p-2).
    ///
    /// Panics on zero.
    pub fn inv(self) -> Fp {
        assert!(!self.is_zero(), "division by zero mod {}", self.p);
        self.pow(self.p - 2)
    }

    /// Quadratic character by Euler's criterion x^((p-1)/2).
    pub fn legendre(self) -> Legendre {
        if self.is_zero() {
            return Legendre::Zero;
        }
        if self.pow((self.p - 1) / 2).value == 1 {
            Legendre::Square
        } else {
            Legendre::Nonsquare
        }
    }

    pub fn is_square(self) -> bool {
        self.legendre() == Legendre::Square
    }

    /// Both square roots of `self`, smaller representative first, or `None`
    /// for a nonsquare. `sqrt(0)` is `Some((0, 0))`.
    ///
    /// Uses the x^((p+1)/4) shortcut when p ≡ 3 (mod 4) and Tonelli–Shanks
    /// otherwise; both are deterministic.
    pub fn sqrt(self) -> Option<(Fp, Fp)> {
        let p = self.p;
        if self.is_zero() {
            return Some((self, self));
        }
        if self.legendre() == Legendre::Nonsquare {
            return None;
        }
        let r = if p % 4 == 3 {
            self.pow((p + 1) / 4)
        } else {
            self.tonelli_shanks()
        };
        debug_assert_eq!((r * r).value, self.value);
        let other = -r;
        if r.value <= other.value {
            Some((r, other))
        } else {
            Some((other, r))
        }
    }

    /// Tonelli–Shanks for p ≡ 1 (mod 4); assumes `self` is a nonzero square.
    fn tonelli_shanks(self) -> Fp {
        let p = self.p;
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        // Smallest nonsquare as the auxiliary generator, found by scan;
        // deterministic, and fast at desk scale.
        let z = (2..p)
            .map(|v| Fp { value: v, p })
            .find(|v| v.legendre() == Legendre::Nonsquare)
            .expect("GF(p) has a nonsquare for p > 2");
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while t.value != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
                assert!(i < m, "Tonelli-Shanks called on a nonsquare");
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b * b;
            }
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        r
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let p = self.same_field(rhs);
        let mut v = self.value + rhs.value;
        if v >= p {
            v -= p;
        }
        Fp { value: v, p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let p = self.same_field(rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + p - rhs.value
        };
        Fp { value: v, p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let p = self.same_field(rhs);
        Fp {
            value: mul_mod(self.value, rhs.value, p),
            p,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.p - self.value
            },
            p: self.p,
        }
    }
}

/// An element a + b√c of GF(p)(√c), where c is a fixed nonsquare mod p.
/// The extension is isomorphic to GF(p²).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp2 {
    a: Fp,
    b: Fp,
    c: Fp,
}

impl Fp2 {
    /// Panics if `c` is not a nonsquare or the moduli disagree.
    pub fn new(a: Fp, b: Fp, c: Fp) -> Fp2 {
        a.same_field(b);
        a.same_field(c);
        assert_eq!(
            c.legendre(),
            Legendre::Nonsquare,
            "extension parameter {c} must be a nonsquare mod {}",
            a.modulus()
        );
        Fp2 { a, b, c }
    }

    /// Embeds a base-field element as a + 0√c.
    pub fn from_base(a: Fp, c: Fp) -> Fp2 {
        Fp2::new(a, a.prime().zero(), c)
    }

    pub fn base_part(self) -> Fp {
        self.a
    }

    pub fn radical_part(self) -> Fp {
        self.b
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Whether the element lies in the base field GF(p).
    pub fn is_base(self) -> bool {
        self.b.is_zero()
    }

    fn compatible(self, rhs: Fp2) {
        self.a.same_field(rhs.a);
        assert_eq!(self.c, rhs.c, "mixed extension parameters");
    }

    pub fn conjugate(self) -> Fp2 {
        Fp2 {
            a: self.a,
            b: -self.b,
            c: self.c,
        }
    }

    /// The norm a² - cb², multiplicative and zero only at zero.
    pub fn norm(self) -> Fp {
        self.a * self.a - self.c * self.b * self.b
    }

    /// Panics on zero.
    pub fn inv(self) -> Fp2 {
        assert!(!self.is_zero(), "division by zero in GF(p^2)");
        let n = self.norm().inv();
        Fp2 {
            a: self.a * n,
            b: -self.b * n,
            c: self.c,
        }
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.c)
    }
}

impl Add for Fp2 {
    type Output = Fp2;
    fn add(self, rhs: Fp2) -> Fp2 {
        self.compatible(rhs);
        Fp2 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c,
        }
    }
}

impl Sub for Fp2 {
    type Output = Fp2;
    fn sub(self, rhs: Fp2) -> Fp2 {
        self.compatible(rhs);
        Fp2 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            c: self.c,
        }
    }
}

impl Mul for Fp2 {
    type Output = Fp2;
    fn mul(self, rhs: Fp2) -> Fp2 {
        self.compatible(rhs);
        // (x + y√c)(z + w√c) = (xz + ywc) + (yz + xw)√c
        Fp2 {
            a: self.a * rhs.a + self.b * rhs.b * self.c,
            b: self.b * rhs.a + self.a * rhs.b,
            c: self.c,
        }
    }
}

impl Div for Fp2 {
    type Output = Fp2;
    fn div(self, rhs: Fp2) -> Fp2 {
        self * rhs.inv()
    }
}

impl Neg for Fp2 {
    type Output = Fp2;
    fn neg(self) -> Fp2 {
        Fp2 {
            a: -self.a,
            b: -self.b,
            c: self.c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    /// Squares mod p, by exhaustive squaring. Test oracle for the
    /// Euler-criterion implementation.
    fn square_table(p: u64) -> Vec<u64> {
        let mut squares: Vec<u64> = (1..p).map(|x| mul_mod(x, x, p)).collect();
        squares.sort_unstable();
        squares.dedup();
        squares
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(3).is_ok());
        assert!(Prime::new(53).is_ok());
        assert_eq!(Prime::new(2), Err(PrimeError::TooSmall(2)));
        assert_eq!(Prime::new(4), Err(PrimeError::Even(4)));
        assert_eq!(Prime::new(9), Err(PrimeError::NotPrime(9)));
        assert_eq!(Prime::new(1), Err(PrimeError::TooSmall(1)));
        assert_eq!(Prime::new(91), Err(PrimeError::NotPrime(91)));
        assert!(Prime::new(4294967311).is_ok()); // first prime past 2^32
    }

    #[test]
    fn legendre_matches_exhaustive_table() {
        for q in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let pr = p(q);
            let squares = square_table(q);
            for x in pr.elements() {
                let expected = if x.is_zero() {
                    Legendre::Zero
                } else if squares.binary_search(&x.value()).is_ok() {
                    Legendre::Square
                } else {
                    Legendre::Nonsquare
                };
                assert_eq!(x.legendre(), expected, "x={x} mod {q}");
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(p(7).fp(1).legendre(), Legendre::Square);
        // squares mod 7 are {1, 2, 4}
        assert_eq!(p(7).fp(3).legendre(), Legendre::Nonsquare);
        // 2 is a square iff p = ±1 (mod 8): 7 = -1 (8), 13 = 5 (8)
        assert_eq!(p(7).fp(2).legendre(), Legendre::Square);
        assert_eq!(p(13).fp(2).legendre(), Legendre::Nonsquare);
    }

    #[test]
    fn half_of_nonzero_elements_are_squares() {
        for q in (3..=200u64).filter(|&q| is_prime_u64(q)) {
            let pr = p(q);
            let count = pr.elements().filter(|x| x.is_square()).count() as u64;
            assert_eq!(count, (q - 1) / 2, "p={q}");
        }
    }

    #[test]
    fn quadratic_reciprocity_special_cases() {
        // legendre(2) = square iff p = ±1 (8); legendre(5) = square iff
        // p = ±1 (5); legendre(-1) = square iff p = 1 (4).
        for q in (3..=500u64).filter(|&q| is_prime_u64(q)) {
            let pr = p(q);
            if q != 2 {
                let two_sq = pr.fp(2).is_square();
                assert_eq!(two_sq, q % 8 == 1 || q % 8 == 7, "2 mod {q}");
            }
            if q != 5 {
                let five_sq = pr.fp(5).is_square();
                assert_eq!(five_sq, q % 5 == 1 || q % 5 == 4, "5 mod {q}");
            }
            let minus_one_sq = pr.fp(-1).is_square();
            assert_eq!(minus_one_sq, q % 4 == 1, "-1 mod {q}");
        }
    }

    #[test]
    fn sqrt_examples() {
        let (r1, r2) = p(7).fp(2).sqrt().unwrap();
        assert_eq!((r1.value(), r2.value()), (3, 4));
        let (z1, z2) = p(11).fp(0).sqrt().unwrap();
        assert_eq!((z1.value(), z2.value()), (0, 0));
        let (s1, s2) = p(11).fp(5).sqrt().unwrap();
        assert_eq!((s1.value(), s2.value()), (4, 7));
        assert!(p(7).fp(3).sqrt().is_none());
    }

    #[test]
    fn sqrt_roundtrip_all_small_primes() {
        // Covers both the p = 3 (4) shortcut and Tonelli-Shanks.
        for q in (3..=97u64).filter(|&q| is_prime_u64(q)) {
            let pr = p(q);
            for x in pr.elements() {
                match x.sqrt() {
                    Some((r1, r2)) => {
                        assert_eq!(r1 * r1, x);
                        assert_eq!(r2 * r2, x);
                        assert!(r1.value() <= r2.value());
                    }
                    None => assert_eq!(x.legendre(), Legendre::Nonsquare),
                }
            }
        }
    }

    #[test]
    fn inv_examples() {
        assert_eq!(p(7).fp(3).inv().value(), 5);
        assert_eq!(p(11).fp(1).inv().value(), 1);
        assert_eq!(p(11).fp(10).inv().value(), 10);
        for q in [5u64, 13, 31] {
            for x in p(q).elements().skip(1) {
                assert_eq!((x * x.inv()).value(), 1);
            }
        }
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn inv_of_zero_panics() {
        let _ = p(7).fp(0).inv();
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn mixed_moduli_panics() {
        let _ = p(7).fp(1) + p(11).fp(1);
    }

    #[test]
    fn fp2_identity_and_norm() {
        let pr = p(13);
        let c = pr.fp(2);
        let one = Fp2::from_base(pr.one(), c);
        let x = Fp2::new(pr.fp(5), pr.fp(9), c);
        assert_eq!(one * x, x);
        // (1 + √2)(1 - √2) = 1 - 2 = -1 = 12 in GF(13)
        let u = Fp2::new(pr.fp(1), pr.fp(1), c);
        let prod = u * u.conjugate();
        assert_eq!(prod, Fp2::from_base(pr.fp(12), c));
    }

    #[test]
    fn fp2_inv_example() {
        // (0 + 1√2)^-1 = 0 + 7√2 in GF(13), since 2*7 = 1 (13)
        let pr = p(13);
        let c = pr.fp(2);
        let x = Fp2::new(pr.fp(0), pr.fp(1), c);
        let y = x.inv();
        assert_eq!((y.base_part().value(), y.radical_part().value()), (0, 7));
        assert_eq!(x * y, Fp2::from_base(pr.one(), c));
    }

    #[test]
    fn fp2_field_axioms_exhaustive() {
        // Exhaustive over GF(p^2) for p <= 13: commutativity, associativity,
        // inverses, and multiplicativity of the norm.
        for (q, cv) in [(3u64, 2i64), (5, 2), (7, 3), (11, 2), (13, 2)] {
            let pr = p(q);
            let c = pr.fp(cv);
            let all: Vec<Fp2> = pr
                .elements()
                .flat_map(|a| pr.elements().map(move |b| (a, b)))
                .map(|(a, b)| Fp2::new(a, b, c))
                .collect();
            for &x in &all {
                for &y in &all {
                    assert_eq!(x * y, y * x);
                    assert_eq!((x * y).norm(), x.norm() * y.norm());
                }
                if !x.is_zero() {
                    let xi = x.inv();
                    assert_eq!(x * xi, Fp2::from_base(pr.one(), c));
                }
            }
            // associativity on a subsample to keep the cube tractable
            for &x in all.iter().step_by(3) {
                for &y in all.iter().step_by(5) {
                    for &z in all.iter().step_by(7) {
                        assert_eq!((x * y) * z, x * (y * z));
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "nonsquare")]
    fn fp2_rejects_square_parameter() {
        let pr = p(13);
        let _ = Fp2::new(pr.fp(1), pr.fp(1), pr.fp(3)); // 3 = 4^2 (13)
    }
}
