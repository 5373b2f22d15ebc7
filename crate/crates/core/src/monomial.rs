//! Weighted monomials and the weighted-degree reverse lexicographic order.

use std::cmp::Ordering;

/// Monomial in a fixed ambient variable set. The weighted degree is cached
/// at construction and is the primary sort key, so the term order is
/// intrinsic to the value: `Ord` below IS the ring's term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    weighted_degree: u64,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>, weights: &[u32]) -> Monomial {
        assert_eq!(exponents.len(), weights.len());
        let weighted_degree = exponents
            .iter()
            .zip(weights)
            .map(|(e, w)| *e as u64 * *w as u64)
            .sum();
        Monomial {
            exponents,
            weighted_degree,
        }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exponents: vec![0; nvars],
            weighted_degree: 0,
        }
    }

    pub fn variable(idx: usize, weights: &[u32]) -> Monomial {
        let mut e = vec![0u32; weights.len()];
        e[idx] = 1;
        Monomial::new(e, weights)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn weighted_degree(&self) -> u64 {
        self.weighted_degree
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_one(&self) -> bool {
        self.weighted_degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exponents.len(), other.exponents.len());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            weighted_degree: self.weighted_degree + other.weighted_degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
            weighted_degree: other.weighted_degree - self.weighted_degree,
        }
    }

    pub fn lcm_with_weights(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exponents, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weighted-degree reverse lexicographic: higher weighted degree wins; on
/// ties the monomial whose last differing exponent is smaller wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.weighted_degree.cmp(&other.weighted_degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exponents.iter().zip(&other.exponents).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32], w: &[u32]) -> Monomial {
        Monomial::new(e.to_vec(), w)
    }

    #[test]
    fn grevlex_standard() {
        let w = [1, 1, 1];
        // x > y > z in degree 1
        let x = m(&[1, 0, 0], &w);
        let y = m(&[0, 1, 0], &w);
        let z = m(&[0, 0, 1], &w);
        assert!(x > y && y > z);
        // x*z < y^2 under grevlex (last entry of xz - y2 is positive)
        let xz = m(&[1, 0, 1], &w);
        let y2 = m(&[0, 2, 0], &w);
        assert!(xz < y2);
        assert!(m(&[0, 0, 0], &w) < z);
    }

    #[test]
    fn weighted_degree_dominates() {
        let w = [4, 5, 3];
        let x = m(&[1, 0, 0], &w); // degree 4
        let z = m(&[0, 0, 1], &w); // degree 3
        assert!(x > z);
        let y = m(&[0, 1, 0], &w); // degree 5
        assert!(y > x);
        assert_eq!(m(&[1, 0, 2], &w).weighted_degree(), 10);
    }

    #[test]
    fn divides_and_quotient() {
        let w = [1, 1];
        let xy = m(&[1, 1], &w);
        let x2y3 = m(&[2, 3], &w);
        assert!(xy.divides(&x2y3));
        assert_eq!(xy.quotient(&x2y3), m(&[1, 2], &w));
        assert!(!x2y3.divides(&xy));
    }
}
