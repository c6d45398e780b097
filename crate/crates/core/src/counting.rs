//! Exact combinatorial counts for diagram families.
//!
//! All values are arbitrary precision; Bell numbers leave `u64` range at
//! around 26 elements.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Memoised Stirling numbers of the second kind, grown on demand.
#[derive(Debug, Clone)]
pub struct CountingTable {
    // stirling[m][t] = S2(m, t) for t in 0..=m
    stirling: Vec<Vec<BigUint>>,
}

impl Default for CountingTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CountingTable {
    pub fn new() -> Self {
        CountingTable {
            stirling: vec![vec![BigUint::one()]],
        }
    }

    fn ensure(&mut self, m: usize) {
        while self.stirling.len() <= m {
            let prev = self.stirling.last().expect("table is never empty");
            let row_len = prev.len() + 1;
            let mut row = vec![BigUint::zero(); row_len];
            for (t, slot) in row.iter_mut().enumerate().skip(1) {
                let stay = prev.get(t).map(|s| s * BigUint::from(t)).unwrap_or_default();
                let open = prev[t - 1].clone();
                *slot = stay + open;
            }
            self.stirling.push(row);
        }
    }

    /// S2(m, t): partitions of an m-set into exactly t nonempty blocks.
    pub fn stirling2(&mut self, m: usize, t: usize) -> BigUint {
        if t > m {
            return BigUint::zero();
        }
        self.ensure(m);
        self.stirling[m][t].clone()
    }

    pub fn bell(&mut self, m: usize) -> BigUint {
        self.bell_bounded(m, m)
    }

    /// Partitions of an m-set with at most `n` blocks. The empty set has one
    /// partition (with zero blocks) for every `n`.
    pub fn bell_bounded(&mut self, m: usize, n: usize) -> BigUint {
        self.ensure(m);
        let top = n.min(m);
        self.stirling[m][..=top].iter().sum()
    }
}

pub fn stirling2(m: usize, t: usize) -> BigUint {
    CountingTable::new().stirling2(m, t)
}

pub fn bell(m: usize) -> BigUint {
    CountingTable::new().bell(m)
}

pub fn bell_bounded(m: usize, n: usize) -> BigUint {
    CountingTable::new().bell_bounded(m, n)
}

/// m!! with the conventions 0!! = (-1)!! = 1.
///
/// # Panics
/// If `m < -1`.
pub fn double_factorial(m: i64) -> BigUint {
    assert!(m >= -1, "double factorial undefined for {m}");
    let mut acc = BigUint::one();
    let mut x = m;
    while x > 1 {
        acc *= BigUint::from(x as u64);
        x -= 2;
    }
    acc
}

/// Number of perfect matchings on `m` points.
pub fn brauer_count(m: usize) -> BigUint {
    if m % 2 == 1 {
        BigUint::zero()
    } else {
        double_factorial(m as i64 - 1)
    }
}

/// Number of (l+k)\n diagrams on `m = l+k` vertices: choose the `n` free
/// vertices, then match the rest.
pub fn brauer_grood_count(m: usize, n: usize) -> BigUint {
    if n > m || (m - n) % 2 == 1 {
        return BigUint::zero();
    }
    binomial(m, n) * brauer_count(m - n)
}

pub fn binomial(m: usize, r: usize) -> BigUint {
    if r > m {
        return BigUint::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= BigUint::from(m - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_values() {
        assert_eq!(stirling2(4, 2), big(7));
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(3, 0), big(0));
        assert_eq!(bell(4), big(15));
        assert_eq!(bell(0), big(1));
        assert_eq!(bell_bounded(2, 4), big(2));
        assert_eq!(bell_bounded(4, 2), big(8));
        assert_eq!(bell_bounded(0, 3), big(1));
        assert_eq!(double_factorial(3), big(3));
        assert_eq!(double_factorial(-1), big(1));
        assert_eq!(double_factorial(5), big(15));
        assert_eq!(brauer_grood_count(6, 2), big(45));
    }

    #[test]
    fn recurrence_and_boundaries() {
        let mut table = CountingTable::new();
        for m in 1..30 {
            assert_eq!(table.stirling2(m, 1), big(1));
            assert_eq!(table.stirling2(m, m), big(1));
            for t in 2..m {
                let lhs = table.stirling2(m, t);
                let rhs = table.stirling2(m - 1, t) * big(t as u64) + table.stirling2(m - 1, t - 1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bell_overflows_u64() {
        // Bell(26) = 49631246523618756274 > u64::MAX
        assert_eq!(bell(26).to_string(), "49631246523618756274");
    }
}
