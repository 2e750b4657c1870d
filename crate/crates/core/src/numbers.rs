//! Small exact-arithmetic helpers shared by the combinatorial modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Multinomial coefficient `(Σ k_i)! / ∏ k_i!`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::one();
    for &k in parts {
        total += k;
        acc *= binomial(total, k);
    }
    acc
}

/// Table of Stirling numbers of the second kind `S(r, a)` for `0 <= a <= r <= max_r`.
///
/// Row `r` has `r + 1` entries.
pub fn stirling2_table(max_r: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_r + 1);
    rows.push(vec![BigUint::one()]);
    for r in 0..max_r {
        let prev = &rows[r];
        let mut next = vec![BigUint::zero(); r + 2];
        for a in 1..=r + 1 {
            let stay = if a <= r { &prev[a] * BigUint::from(a) } else { BigUint::zero() };
            next[a] = stay + &prev[a - 1];
        }
        rows.push(next);
    }
    rows
}

/// Stirling number of the second kind `S(r, a)`; zero outside `0 <= a <= r`.
pub fn stirling2(r: usize, a: usize) -> BigUint {
    if a > r {
        return BigUint::zero();
    }
    stirling2_table(r).swap_remove(r).swap_remove(a)
}

pub fn sign_int(negative: bool) -> BigInt {
    if negative {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// Lossy conversion for reporting. Handles numerators and denominators far
/// beyond `f64` range by scaling both down first.
pub fn ratio_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    // keep ~60 significant bits of each
    let ns = (nb - 60).max(0);
    let ds = (db - 60).max(0);
    let n = (q.numer() >> ns as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> ds as usize).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((ns - ds) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_partitions(r: usize) -> Vec<usize> {
        // restricted growth strings; count by number of blocks
        let mut counts = vec![0usize; r + 1];
        fn go(pos: usize, r: usize, maxb: usize, counts: &mut [usize]) {
            if pos == r {
                counts[maxb] += 1;
                return;
            }
            for b in 0..=maxb {
                go(pos + 1, r, maxb.max(b + 1), counts);
            }
        }
        go(0, r, 0, &mut counts);
        counts
    }

    #[test]
    fn stirling_matches_set_partition_enumeration() {
        for r in 0..=7 {
            let counts = set_partitions(r);
            for (a, &c) in counts.iter().enumerate() {
                assert_eq!(stirling2(r, a), BigUint::from(c), "S({r},{a})");
            }
        }
        assert_eq!(stirling2(3, 2), BigUint::from(3u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(5, 5), BigUint::one());
        assert_eq!(stirling2(2, 5), BigUint::zero());
    }

    #[test]
    fn binomials_and_multinomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 10), BigUint::zero());
        assert_eq!(multinomial(&[2, 1, 1]), BigUint::from(12u32));
        assert_eq!(multinomial(&[]), BigUint::one());
        assert_eq!(factorial(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn huge_ratio_conversion() {
        let big = BigInt::from(3u32).pow(2000);
        let q = BigRational::new(big.clone(), big * BigInt::from(4u32));
        assert!((ratio_to_f64(&q) - 0.25).abs() < 1e-12);
    }
}
