//! Vectors in finite free modules, ordered position-over-term.

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::AmbientRing;
use crate::scalar::Scalar;
use std::fmt;

/// Element of a free module `R^r`, one polynomial per coordinate. The
/// module term order is position-over-term: earlier coordinates dominate,
/// ties break by the ring's term order. Consequently the leading term of a
/// nonzero vector sits in its first nonzero coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(components: Vec<Polynomial>) -> ModuleVector {
        ModuleVector { components }
    }

    pub fn zero(ambient: &AmbientRing, rank: usize) -> ModuleVector {
        ModuleVector {
            components: (0..rank).map(|_| Polynomial::zero(ambient)).collect(),
        }
    }

    pub fn unit(ambient: &AmbientRing, rank: usize, pos: usize) -> ModuleVector {
        let mut v = ModuleVector::zero(ambient, rank);
        v.components[pos] = Polynomial::one(ambient);
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    /// Leading term under position-over-term: `(position, coefficient,
    /// monomial)` from the first nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, &Scalar, &Monomial)> {
        for (i, p) in self.components.iter().enumerate() {
            if let Some((c, m)) = p.leading_term() {
                return Some((i, c, m));
            }
        }
        None
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        debug_assert_eq!(self.rank(), other.rank());
        ModuleVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        debug_assert_eq!(self.rank(), other.rank());
        ModuleVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> ModuleVector {
        ModuleVector {
            components: self.components.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn term_mul(&self, c: &Scalar, m: &Monomial) -> ModuleVector {
        ModuleVector {
            components: self.components.iter().map(|p| p.term_mul(c, m)).collect(),
        }
    }

    pub fn poly_mul(&self, p: &Polynomial) -> ModuleVector {
        ModuleVector {
            components: self.components.iter().map(|q| q.mul(p)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> ModuleVector {
        ModuleVector {
            components: self.components.iter().map(|p| p.scalar_mul(c)).collect(),
        }
    }

    pub fn monic(&self) -> ModuleVector {
        match self.leading() {
            None => self.clone(),
            Some((_, c, _)) => {
                let ambient = self.components[0].ambient().clone();
                let inv = ambient.field().inv(c).expect("nonzero lead");
                self.scalar_mul(&inv)
            }
        }
    }

    /// Degree of a homogeneous vector given target shifts, or `None` when
    /// the vector is inhomogeneous. The zero vector reports `None` as well.
    pub fn homogeneous_degree(&self, shifts: &[i64]) -> Option<i64> {
        debug_assert_eq!(shifts.len(), self.rank());
        let mut degree: Option<i64> = None;
        for (i, p) in self.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()? as i64 + shifts[i];
            match degree {
                None => degree = Some(d),
                Some(existing) if existing == d => {}
                _ => return None,
            }
        }
        degree
    }

    pub fn is_homogeneous(&self, shifts: &[i64]) -> bool {
        self.is_zero() || self.homogeneous_degree(shifts).is_some()
    }

    /// Append extra zero coordinates at the end.
    pub fn extend_rank(&self, ambient: &AmbientRing, extra: usize) -> ModuleVector {
        let mut components = self.components.clone();
        components.extend((0..extra).map(|_| Polynomial::zero(ambient)));
        ModuleVector { components }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
