//! Cyclotomic and Poncelet polynomials, the t-iteration, the doubling
//! formula, and root-finding mod p.
//!
//! The polynomial P_n has integer coefficients, degree φ(n)/2, and its
//! roots mod p are exactly the indices k for which the pair (O_k, O_1)
//! carries an n-sided polygon. Three independent routes to these root sets
//! live here and in [`crate::cayley`]: the t-iteration (odd n), the
//! cyclotomic construction, and the doubling step k ↦ 2/(1 ∓ k^(-1/2)).

pub mod poly;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::{Fp, Prime};
use crate::numtheory::{divisors, half_order_of_two, totient};
use crate::pencil::{Pencil, RelationTable};
pub use poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("n = {0} must be odd for the iteration route")]
    EvenN(u64),
    #[error("n = {n} does not divide p + 1 = {p} + 1")]
    NotDividing { n: u64, p: u64 },
    #[error("t_{step} = 2 makes the next iterate undefined")]
    SingularIterate { step: usize },
    #[error("k = {0} is not a nonzero square, so sqrt(k) does not exist")]
    NonsquareK(u64),
    #[error("k = 1 makes 1 - 1/sqrt(k) vanish")]
    UnitK,
}

/// The n-th cyclotomic polynomial Φ_n, degree φ(n), computed by exact
/// division of x^n - 1 by the Φ_d of all proper divisors d.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    let mut table: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    for d in divisors(n) {
        let mut quotient_of = IntPolynomial::monomial(1, d as usize);
        quotient_of = &quotient_of - &IntPolynomial::one(); // x^d - 1
        let mut prod = IntPolynomial::one();
        for e in divisors(d) {
            if e < d {
                prod = &prod * &table[&e];
            }
        }
        let phi_d = quotient_of
            .div_exact(&prod)
            .expect("x^d - 1 is divisible by the product of lower cyclotomics");
        table.insert(d, phi_d);
    }
    table.remove(&n).unwrap()
}

/// The Poncelet polynomial P_n, canonical (primitive, positive leading
/// coefficient), of degree φ(n)/2.
///
/// Construction: Φ_n is palindromic for n ≥ 3, so Φ_n(x)·x^(-φ(n)/2) is a
/// polynomial q_n in y = x + 1/x, assembled through the recurrence
/// V_{j+1} = y·V_j - V_{j-1} for x^j + x^(-j). Then r_n(x) = q_n(2x),
/// s_n(x) = r_n(2x - 1), and P_n is the coefficient reversal of s_n.
pub fn poncelet_polynomial(n: u64) -> IntPolynomial {
    assert!(n >= 3);
    let phi = totient(n) as usize;
    let m = phi / 2;
    let cyc = cyclotomic(n);
    debug_assert!(
        (0..=phi).all(|i| cyc.coeff(i) == cyc.coeff(phi - i)),
        "cyclotomic polynomials are palindromic for n >= 3"
    );
    let mut q = IntPolynomial::constant(cyc.coeff(m));
    let mut v_prev = IntPolynomial::constant(2); // x^0 + x^0
    let mut v_cur = IntPolynomial::x(); // x + 1/x
    for j in 1..=m {
        q = &q + &v_cur.scale(&cyc.coeff(m + j));
        let next = &(&IntPolynomial::x() * &v_cur) - &v_prev;
        v_prev = v_cur;
        v_cur = next;
    }
    let r = q.compose(&IntPolynomial::from_i64(&[0, 2]));
    let s = r.compose(&IntPolynomial::from_i64(&[-1, 2]));
    let p = s.reversed().canonical();
    debug_assert_eq!(p.deg(), Some(m));
    p
}

/// The doubling step on polynomials: clears the denominators of
/// P_n(k²/(k-2)²) with (k-2)^(2 deg P_n), divides by P_n exactly when that
/// division is exact (always for odd n, never for even n), and checks the
/// result has degree φ(2n)/2.
///
/// Panics when the degree check fails, which signals a misuse or a bug.
pub fn double_polynomial(p_n: &IntPolynomial, n: u64) -> IntPolynomial {
    let m = p_n.deg().expect("P_n must be nonzero");
    let k_sq = IntPolynomial::from_i64(&[0, 0, 1]);
    let k_minus_2_sq = IntPolynomial::from_i64(&[4, -4, 1]);
    let mut cleared = IntPolynomial::zero();
    for i in 0..=m {
        let term = &k_sq.pow(i) * &k_minus_2_sq.pow(m - i);
        cleared = &cleared + &term.scale(&p_n.coeff(i));
    }
    let cleared = cleared.canonical();
    let result = match cleared.div_exact(&p_n.canonical()) {
        Some(q) => q,
        None => cleared,
    };
    let result = result.canonical();
    assert_eq!(
        result.deg(),
        Some((totient(2 * n) / 2) as usize),
        "doubling P_{n} produced the wrong degree"
    );
    result
}

/// The iterates t_0 = k, t_{i+1} = t_i²/(t_i - 2)² as reduced
/// numerator/denominator pairs in the indeterminate k.
pub fn t_iterate_symbolic(steps: usize) -> Vec<(IntPolynomial, IntPolynomial)> {
    let mut seq = vec![(IntPolynomial::x(), IntPolynomial::one())];
    for _ in 0..steps {
        let (num, den) = seq.last().unwrap();
        let shifted = &num.clone() - &den.scale(&BigInt::from(2));
        let (raw_num, raw_den) = (num * num, &shifted * &shifted);
        let g = raw_num.gcd(&raw_den);
        let num_next = raw_num.div_exact(&g).unwrap();
        let den_next = raw_den.div_exact(&g).unwrap();
        seq.push((num_next, den_next));
    }
    seq
}

/// The iterates t_0 = k, ..., t_steps in GF(p). Fails with the offending
/// step index when some t_i = 2 makes the next quotient undefined.
pub fn t_iterate_mod(k: Fp, steps: usize) -> Result<Vec<Fp>, AlgebraError> {
    let two = k.prime().fp(2);
    let mut seq = vec![k];
    for i in 0..steps {
        let t = *seq.last().unwrap();
        if t == two {
            return Err(AlgebraError::SingularIterate { step: i });
        }
        let d = t - two;
        seq.push((t * t) / (d * d));
    }
    Ok(seq)
}

/// Poncelet coefficients for odd n via the t-iteration: all k in [2, p-1]
/// with t_0 = t_s and t_0 ≠ t_i for 0 < i < s, where s is the least
/// exponent with 2^s ≡ ±1 (mod n). Values whose iteration hits t_i = 2
/// before step s are excluded, as is the universal fixed point k = 1.
///
/// The period condition alone can admit strays: whenever another odd m
/// with the same exponent s shares the plane (the smallest pair is m = 7,
/// n = 9, both with s = 3), the m-gon family has the same exact period.
/// Strays with m ∤ p+1 fail the inside relation O_k ⋄ O_1 and are removed
/// by a residue check; if m | p+1 as well, both families are genuine and
/// each survivor is assigned its side count by one geometric trace.
pub fn coefficients_by_iteration(n: u64, p: Prime) -> Result<BTreeSet<u64>, AlgebraError> {
    if n < 3 || n % 2 == 0 {
        return Err(AlgebraError::EvenN(n));
    }
    if (p.value() + 1) % n != 0 {
        return Err(AlgebraError::NotDividing { n, p: p.value() });
    }
    let s = half_order_of_two(n) as usize;
    let pencil = Pencil::new(p);
    let mut out = BTreeSet::new();
    for k in 2..p.value() {
        let k_fp = p.fp_u(k);
        let seq = match t_iterate_mod(k_fp, s) {
            Ok(seq) => seq,
            Err(AlgebraError::SingularIterate { .. }) => continue,
            Err(e) => return Err(e),
        };
        if seq[s] == k_fp && seq[1..s].iter().all(|t| *t != k_fp) && pencil.diamond(k, 1) {
            out.insert(k);
        }
    }
    if out.len() as u64 > totient(n) / 2 {
        // two same-period families divide p+1; one trace per value settles
        // which n-gon it belongs to
        let start = pencil.conic(1).points()[0];
        out.retain(|&k| {
            crate::tracer::trace(&pencil, k, 1, &start)
                .expect("survivors are diamond partners of O_1")
                .n()
                == n
        });
    }
    assert_eq!(
        out.len() as u64,
        totient(n) / 2,
        "iteration found the wrong number of {n}-gon coefficients mod {p}"
    );
    Ok(out)
}

/// Poncelet coefficients as roots of P_n mod p. Requires n ≥ 3 and
/// n | p + 1, in which case exactly φ(n)/2 roots exist.
pub fn coefficients_by_polynomial(n: u64, p: Prime) -> BTreeSet<u64> {
    assert!(n >= 3, "polygons need at least 3 sides");
    assert_eq!((p.value() + 1) % n, 0, "{n} must divide p + 1");
    let poly = poncelet_polynomial(n);
    let roots: BTreeSet<u64> = poly
        .roots_mod(p)
        .into_iter()
        .filter(|&k| k >= 1)
        .collect();
    assert_eq!(
        roots.len() as u64,
        totient(n) / 2,
        "P_{n} must have φ(n)/2 roots mod {p}"
    );
    roots
}

/// The doubling step on coefficients: both values 2/(1 ∓ k^(-1/2)),
/// keeping only those different from k. If (O_k, O_1) carries an n-gon,
/// the surviving values index the 2n-gon partners of O_1.
pub fn double_coefficient(k: Fp) -> Result<BTreeSet<Fp>, AlgebraError> {
    let p = k.prime();
    if k == p.one() {
        return Err(AlgebraError::UnitK);
    }
    let (r1, r2) = k.sqrt().ok_or(AlgebraError::NonsquareK(k.value()))?;
    if r1.is_zero() {
        return Err(AlgebraError::NonsquareK(0));
    }
    let two = p.fp(2);
    let mut out = BTreeSet::new();
    for r in [r1, r2] {
        let denom = p.one() - r.inv();
        // 1 - 1/r = 0 forces r = 1, i.e. k = 1, already rejected
        let h = two / denom;
        if h != k {
            out.insert(h);
        }
    }
    Ok(out)
}

/// Checks the invariant (h - 1)(k - 1) = (√k + 1)², a square, linking a
/// coefficient k to its doubling image h. Degenerate h = k returns false.
pub fn existence_transfer_check(h: Fp, k: Fp) -> bool {
    if h == k {
        return false;
    }
    let one = h.prime().one();
    ((h - one) * (k - one)).is_square()
}

/// The full relation table of PG(2,p) from polynomial roots alone: for
/// every n | p+1 (n ≥ 3) and every root k of P_n mod p, the pair
/// (O_{kβ}, O_β) carries an n-gon for each β. Rows are the inner conic α,
/// columns the outer conic β.
pub fn relation_table_by_polynomials(p: Prime) -> RelationTable {
    let pencil = Pencil::new(p);
    let pv = p.value();
    let mut entries = BTreeMap::new();
    for n in divisors(pv + 1) {
        if n < 3 {
            continue;
        }
        let roots = coefficients_by_polynomial(n, p);
        for beta in 1..pv {
            for &k in &roots {
                let alpha = (p.fp_u(k) * p.fp_u(beta)).value();
                assert!(
                    pencil.diamond(alpha, beta),
                    "polynomial root {k} transported to a non-diamond pair ({alpha},{beta})"
                );
                let prev = entries.insert((alpha, beta), n);
                assert!(prev.is_none(), "two polygon lengths for ({alpha},{beta})");
            }
        }
    }
    // p-1 columns with (p-1)/2 entries each
    assert_eq!(entries.len() as u64, (pv - 1) * (pv - 1) / 2);
    RelationTable::new(p, entries)
}
