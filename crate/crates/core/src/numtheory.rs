//! Small integer helpers: divisors, Euler's totient, and the order-of-2
//! quantity governing the t-iteration length.

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient φ(n) by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n > 0);
    let mut m = n;
    let mut phi = n;
    let mut f = 2;
    while f * f <= m {
        if m % f == 0 {
            while m % f == 0 {
                m /= f;
            }
            phi -= phi / f;
        }
        f += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// The smallest s ≥ 1 with 2^s ≡ ±1 (mod n), for odd n ≥ 3. This never
/// exceeds φ(n)/2 and is the number of t-iteration steps needed for
/// n-sided polygons.
pub fn half_order_of_two(n: u64) -> u64 {
    assert!(n >= 3 && n % 2 == 1, "defined for odd n >= 3");
    let mut pow = 1u64;
    for s in 1.. {
        pow = pow * 2 % n;
        if pow == 1 || pow == n - 1 {
            return s;
        }
    }
    unreachable!()
}
