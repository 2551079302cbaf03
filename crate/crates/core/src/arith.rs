use alloc::vec;
use alloc::vec::Vec;

/// Positive divisors of `n` in ascending order; empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `k` as nonincreasing part lists, in reverse lexicographic
/// order (`[k]` first, `[1, 1, ..]` last).
pub fn exponent_partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut part = max.min(rest);
        while part >= 1 {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut vec![], &mut out);
    out
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_of_small_numbers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
        assert!(divisors(0).is_empty());
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(prime_factors(1).is_empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..7).map(|k| exponent_partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(exponent_partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }
}
