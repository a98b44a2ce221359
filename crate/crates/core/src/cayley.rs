//! An independent check on the polynomial route via power series: for the
//! conic pair (O_1, O_k) the series √(det(tC + D)) = A₀ + A₁t + A₂t² + …
//! exists with A_m = √(ck²)·(binom(1/2,m) + binom(1/2,m-1)/k), and the
//! vanishing of Hankel determinants in the A_m characterizes the existence
//! of an n-gon.
//!
//! Every A_m shares the factor √(ck²), so it is normalized away here and
//! all arithmetic happens in exact rational functions of k over ℤ. In
//! particular the criterion never depends on c.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use thiserror::Error;

use crate::algebra::{poncelet_polynomial, IntPolynomial};
use crate::numtheory::divisors;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("series of order {available} too short: the n = {n} condition reads up to A_{needed}")]
    InsufficientOrder {
        n: u64,
        needed: usize,
        available: usize,
    },
}

/// A reduced quotient of integer polynomials in k. The gcd of numerator
/// and denominator is 1 (contents included) and the denominator has a
/// positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Panics on a zero denominator.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: IntPolynomial::zero(),
                den: IntPolynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = -&num;
            den = -&den;
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction::new(IntPolynomial::zero(), IntPolynomial::one())
    }

    pub fn one() -> Self {
        RationalFunction::new(IntPolynomial::one(), IntPolynomial::one())
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalFunction::new(p, IntPolynomial::one())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// The truncated series with coefficients A_m / √(ck²). A₀ = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySeries {
    coeffs: Vec<RationalFunction>,
}

impl CayleySeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The normalized coefficient of t^m.
    pub fn coeff(&self, m: usize) -> &RationalFunction {
        &self.coeffs[m]
    }
}

/// binom(1/2, m) as a reduced fraction.
fn binomial_half(m: usize) -> (BigInt, BigInt) {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m as i64 {
        // multiply by (1/2 - i) / (i + 1) = (1 - 2i) / (2(i + 1))
        num *= BigInt::from(1 - 2 * i);
        den *= BigInt::from(2 * (i + 1));
    }
    let g = num.gcd(&den);
    (num / &g, den / g)
}

/// Expands √(det(tC + D)) for C = diag(1,1,c), D = diag(1,k,ck), i.e.
/// √(c(t+1)(t+k)²), normalized by √(ck²):
///
/// ```text
/// (1 + t/k) · Σ_m binom(1/2, m) tᵐ
/// ```
///
/// so the normalized A_m is binom(1/2,m) + binom(1/2,m-1)/k.
pub fn expand_series(order: usize) -> CayleySeries {
    assert!(order >= 2, "the smallest Hankel condition reads A_2");
    let mut coeffs = vec![RationalFunction::one()];
    let mut prev = binomial_half(0);
    for m in 1..=order {
        let cur = binomial_half(m);
        // cur + prev/k = (cur.num·prev.den·k + prev.num·cur.den) / (cur.den·prev.den·k)
        let num = IntPolynomial::from_coeffs(vec![&prev.0 * &cur.1, &cur.0 * &prev.1]);
        let den = IntPolynomial::from_coeffs(vec![BigInt::zero(), &cur.1 * &prev.1]);
        coeffs.push(RationalFunction::new(num, den));
        prev = cur;
    }
    CayleySeries { coeffs }
}

/// Fraction-free Bareiss determinant over ℤ[k]; every division is exact.
fn det_bareiss(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for r in 0..n.saturating_sub(1) {
        if m[r][r].is_zero() {
            let Some(swap) = (r + 1..n).find(|&i| !m[i][r].is_zero()) else {
                return IntPolynomial::zero();
            };
            m.swap(r, swap);
            negate = !negate;
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let t = &(&m[r][r] * &m[i][j]) - &(&m[i][r] * &m[r][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss divisions are exact");
            }
            m[i][r] = IntPolynomial::zero();
        }
        prev = m[r][r].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// The Hankel determinant deciding the existence of an n-gon, as a reduced
/// rational function of k: entries A_{2+i+j} (size m) for n = 2m+1, and
/// A_{3+i+j} (size m-1) for n = 2m. Its numerator's primitive part is the
/// criterion polynomial.
pub fn cayley_condition(n: u64, series: &CayleySeries) -> Result<RationalFunction, CayleyError> {
    assert!(n >= 3);
    let (size, base) = if n % 2 == 1 {
        (((n - 1) / 2) as usize, 2usize)
    } else {
        ((n / 2 - 1) as usize, 3usize)
    };
    let needed = base + 2 * (size - 1);
    if series.order() < needed {
        return Err(CayleyError::InsufficientOrder {
            n,
            needed,
            available: series.order(),
        });
    }
    // clear each row by the product of its denominators so the determinant
    // runs fraction-free over ℤ[k]
    let mut cleared = Vec::with_capacity(size);
    let mut den_product = IntPolynomial::one();
    for i in 0..size {
        let row: Vec<&RationalFunction> = (0..size).map(|j| series.coeff(base + i + j)).collect();
        let row_den = row
            .iter()
            .fold(IntPolynomial::one(), |acc, rf| &acc * rf.denominator());
        let cleared_row: Vec<IntPolynomial> = row
            .iter()
            .map(|rf| {
                let cofactor = row_den.div_exact(rf.denominator()).expect("den divides row den");
                rf.numerator() * &cofactor
            })
            .collect();
        den_product = &den_product * &row_den;
        cleared.push(cleared_row);
    }
    Ok(RationalFunction::new(det_bareiss(cleared), den_product))
}

/// The criterion polynomial for n: the primitive numerator of the Hankel
/// determinant with the factors belonging to proper divisors m | n, m ≥ 3,
/// removed by exact division.
pub fn criterion_polynomial(n: u64) -> IntPolynomial {
    let series = expand_series(((n - 1) as usize).max(2));
    let det = cayley_condition(n, &series).expect("order chosen to suffice");
    let mut poly = det.numerator().canonical();
    for m in divisors(n) {
        if m < 3 || m == n {
            continue;
        }
        let factor = poncelet_polynomial(m);
        while let Some(q) = poly.div_exact(&factor) {
            poly = q;
        }
    }
    poly.canonical()
}

/// Whether the Cayley route reproduces P_n exactly (up to sign, which the
/// canonical form absorbs).
pub fn cross_check(n: u64) -> bool {
    criterion_polynomial(n) == poncelet_polynomial(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(num), poly(den))
    }

    #[test]
    fn binomial_half_values() {
        let expect: [(i64, i64); 5] = [(1, 1), (1, 2), (-1, 8), (1, 16), (-5, 128)];
        for (m, (n, d)) in expect.iter().enumerate() {
            assert_eq!(binomial_half(m), (BigInt::from(*n), BigInt::from(*d)));
        }
    }

    #[test]
    fn rational_function_reduction() {
        // (2k)/(4k) reduces to 1/2
        assert_eq!(rf(&[0, 2], &[0, 0, 4]), rf(&[1], &[0, 2]));
        // denominator sign is normalized
        assert_eq!(rf(&[1], &[-1]), rf(&[-1], &[1]));
        assert!(rf(&[0], &[5]).is_zero());
    }

    #[test]
    fn series_printed_coefficients() {
        let series = expand_series(4);
        assert_eq!(series.coeff(0), &RationalFunction::one());
        // A₁ = (k + 2)/(2k)
        assert_eq!(series.coeff(1), &rf(&[2, 1], &[0, 2]));
        // A₂ = -(k - 4)/(8k)
        assert_eq!(series.coeff(2), &rf(&[4, -1], &[0, 8]));
        // A₃ = (k - 2)/(16k)
        assert_eq!(series.coeff(3), &rf(&[-2, 1], &[0, 16]));
        // A₄ = -(5k - 8)/(128k)
        assert_eq!(series.coeff(4), &rf(&[8, -5], &[0, 128]));
    }

    #[test]
    fn series_squares_back_to_determinant() {
        // Σ A_m tᵐ (normalized) squared must reproduce (1+t)(1+t/k)², the
        // normalized det(tC+D)/(ck²), up to the truncation order.
        let order = 8;
        let series = expand_series(order);
        // square the truncated series as a polynomial in t over ℚ(k)
        let mut sq = vec![RationalFunction::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                let term = series.coeff(i) * series.coeff(j);
                sq[i + j] = &sq[i + j] + &term;
            }
        }
        // (1+t)(1+t/k)² = 1 + (1 + 2/k)t + (2/k + 1/k²)t² + (1/k²)t³
        let expect = [
            RationalFunction::one(),
            rf(&[2, 1], &[0, 1]),
            rf(&[1, 2], &[0, 0, 1]),
            rf(&[1], &[0, 0, 1]),
        ];
        for (m, e) in expect.iter().enumerate() {
            assert_eq!(&sq[m], e, "t^{m}");
        }
        for (m, c) in sq.iter().enumerate().take(order + 1).skip(4) {
            assert!(c.is_zero(), "t^{m} must vanish");
        }
    }

    #[test]
    fn condition_for_triangle_and_square() {
        let series = expand_series(4);
        // n = 3: the 1×1 determinant A₂ vanishes iff k = 4
        let tri = cayley_condition(3, &series).unwrap();
        assert_eq!(tri.numerator().canonical(), poly(&[-4, 1]));
        // n = 4: A₃ vanishes iff k = 2
        let quad = cayley_condition(4, &series).unwrap();
        assert_eq!(quad.numerator().canonical(), poly(&[-2, 1]));
    }

    #[test]
    fn condition_for_pentagon() {
        // A₂A₄ - A₃² = c(k² - 12k + 16)/1024 before normalization; here the
        // c and the √(ck²) factor are scaled out
        let series = expand_series(4);
        let pent = cayley_condition(5, &series).unwrap();
        assert_eq!(
            pent,
            rf(&[16, -12, 1], &[0, 0, 1024])
        );
    }

    #[test]
    fn insufficient_order_is_reported() {
        let series = expand_series(3);
        assert_eq!(
            cayley_condition(5, &series),
            Err(CayleyError::InsufficientOrder {
                n: 5,
                needed: 4,
                available: 3
            })
        );
    }

    #[test]
    fn hankel_carries_all_divisor_factors() {
        // measured structure: for n ≤ 12 the primitive Hankel numerator is
        // exactly the product of P_m over all divisors m | n with m ≥ 3
        for n in 3..=12u64 {
            let series = expand_series((n as usize - 1).max(2));
            let det = cayley_condition(n, &series).unwrap();
            let mut expect = IntPolynomial::one();
            for m in divisors(n) {
                if m >= 3 {
                    expect = &expect * &poncelet_polynomial(m);
                }
            }
            assert_eq!(
                det.numerator().canonical(),
                expect.canonical(),
                "n={n}"
            );
        }
    }

    #[test]
    fn cross_checks_through_twelve() {
        for n in 3..=12 {
            assert!(cross_check(n), "n={n}");
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![
            vec![poly(&[1, 1]), poly(&[0, 2]), poly(&[3])],
            vec![poly(&[2]), poly(&[1, 0, 1]), poly(&[0, 1])],
            vec![poly(&[0, 0, 1]), poly(&[5]), poly(&[1, 2])],
        ];
        let cofactor = |m: &Vec<Vec<IntPolynomial>>| {
            let d2 = |a: &IntPolynomial, b: &IntPolynomial, c: &IntPolynomial, d: &IntPolynomial| {
                &(a * d) - &(b * c)
            };
            let t0 = &m[0][0] * &d2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
            let t1 = &m[0][1] * &d2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
            let t2 = &m[0][2] * &d2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
            &(&t0 - &t1) + &t2
        };
        assert_eq!(det_bareiss(m.clone()), cofactor(&m));
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = vec![
            vec![IntPolynomial::zero(), poly(&[1])],
            vec![poly(&[1]), poly(&[7])],
        ];
        assert_eq!(det_bareiss(m), poly(&[-1]));
        let singular = vec![
            vec![IntPolynomial::zero(), IntPolynomial::zero()],
            vec![poly(&[1]), poly(&[7])],
        ];
        assert!(det_bareiss(singular).is_zero());
    }
}
