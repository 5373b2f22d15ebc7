//! Sparse multivariate polynomials over a fixed ambient ring.

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::ring::AmbientRing;
use crate::scalar::{display_signed, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in canonical form: terms strictly descending in the term
/// order, no zero coefficients. The zero polynomial has an empty term list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ambient: AmbientRing,
    terms: Vec<(Scalar, Monomial)>,
}

impl Polynomial {
    pub fn zero(ambient: &AmbientRing) -> Polynomial {
        Polynomial {
            ambient: ambient.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ambient: &AmbientRing) -> Polynomial {
        Polynomial::from_term(ambient, ambient.field().one(), Monomial::one(ambient.nvars()))
    }

    pub fn variable(ambient: &AmbientRing, idx: usize) -> Polynomial {
        Polynomial::from_term(
            ambient,
            ambient.field().one(),
            Monomial::variable(idx, ambient.weights()),
        )
    }

    pub fn from_term(ambient: &AmbientRing, c: Scalar, m: Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ambient);
        }
        Polynomial {
            ambient: ambient.clone(),
            terms: vec![(c, m)],
        }
    }

    /// Build from an arbitrary term list, merging and sorting into canonical
    /// form.
    pub fn from_terms(ambient: &AmbientRing, terms: Vec<(Scalar, Monomial)>) -> Polynomial {
        let field = *ambient.field();
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), ambient.nvars());
            match acc.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let terms: Vec<(Scalar, Monomial)> = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        Polynomial {
            ambient: ambient.clone(),
            terms,
        }
    }

    pub fn ambient(&self) -> &AmbientRing {
        &self.ambient
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Scalar, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Nonzero constant (hence unit) polynomial.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// Degree-0 coefficient, if any.
    pub fn constant_coefficient(&self) -> Option<&Scalar> {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| c)
    }

    /// All terms share one weighted degree (or the polynomial is zero).
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.terms.first()?.1.weighted_degree();
        if self.terms.iter().all(|(_, m)| m.weighted_degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// First term whose degree differs from the leading term's, for error
    /// reporting.
    pub fn inhomogeneous_witness(&self) -> Option<String> {
        let d = self.terms.first()?.1.weighted_degree();
        self.terms
            .iter()
            .find(|(_, m)| m.weighted_degree() != d)
            .map(|(c, m)| format_term(c, m, &self.ambient))
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ambient.compatible(&other.ambient) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(format!(
                "{} vs {}",
                self.ambient.describe(),
                other.ambient.describe()
            )))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let field = *self.ambient.field();
        let mut result = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    result.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    result.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = field.add(ca, cb);
                    if !s.is_zero() {
                        result.push((s, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        result.extend(self.terms[i..].iter().cloned());
        result.extend(other.terms[j..].iter().cloned());
        Polynomial {
            ambient: self.ambient.clone(),
            terms: result,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ambient.field();
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let field = *self.ambient.field();
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        Polynomial {
            ambient: self.ambient.clone(),
            terms: acc.into_iter().rev().map(|(m, c)| (c, m)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        let field = *self.ambient.field();
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    pub fn term_mul(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        let field = *self.ambient.field();
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (field.mul(a, c), t.mul(m)))
                .collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((c, _)) => {
                let inv = self.ambient.field().inv(c).expect("nonzero lead");
                self.scalar_mul(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Polynomial {
        let field = *self.ambient.field();
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exponents()[idx] > 0)
            .map(|(c, m)| {
                let e = m.exponents()[idx];
                let mut exps = m.exponents().to_vec();
                exps[idx] -= 1;
                (
                    field.mul(c, &field.from_i64(e as i64)),
                    Monomial::new(exps, self.ambient.weights()),
                )
            })
            .collect();
        Polynomial::from_terms(&self.ambient, terms)
    }
}

pub fn format_term(c: &Scalar, m: &Monomial, ambient: &AmbientRing) -> String {
    let (_, cs) = display_signed(c, ambient.field());
    let mut parts = Vec::new();
    for (i, e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ambient.variables()[i].clone()),
            _ => parts.push(format!("{}^{}", ambient.variables()[i], e)),
        }
    }
    if parts.is_empty() {
        cs
    } else if c.is_one() {
        parts.join("*")
    } else {
        format!("{}*{}", cs, parts.join("*"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let (negative, cs) = display_signed(c, self.ambient.field());
            let body = {
                let mut parts = Vec::new();
                for (vi, e) in m.exponents().iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(self.ambient.variables()[vi].clone()),
                        _ => parts.push(format!("{}^{}", self.ambient.variables()[vi], e)),
                    }
                }
                if parts.is_empty() {
                    cs.clone()
                } else if cs == "1" {
                    parts.join("*")
                } else {
                    format!("{}*{}", cs, parts.join("*"))
                }
            };
            if i == 0 {
                if negative {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if negative {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}
