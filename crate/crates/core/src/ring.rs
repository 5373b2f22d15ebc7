//! Ambient weighted polynomial rings and their quotients.
//!
//! Complete local rings from the examples are modeled by their graded
//! avatars: `k[[x,y]]/(xy)` becomes the weighted-graded `k[x,y]/(xy)`.
//! Every quotient carries the reduced Groebner basis of its defining ideal,
//! computed once at construction.

use crate::error::{AlgebraError, Result};
use crate::groebner;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::FieldSpec;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct AmbientData {
    variables: Vec<String>,
    weights: Vec<u32>,
    field: FieldSpec,
}

/// Ambient polynomial ring `k[x_1..x_n]` with positive per-variable weights.
/// Cheap to clone; polynomials hold one of these.
#[derive(Clone, Debug)]
pub struct AmbientRing(Arc<AmbientData>);

impl AmbientRing {
    pub fn new(variables: Vec<String>, weights: Vec<u32>, field: FieldSpec) -> Result<AmbientRing> {
        if variables.len() != weights.len() {
            return Err(AlgebraError::Invalid(
                "one weight per variable required".into(),
            ));
        }
        if weights.iter().any(|w| *w == 0) {
            return Err(AlgebraError::Invalid("weights must be positive".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &variables {
            if !seen.insert(v.clone()) {
                return Err(AlgebraError::Invalid(format!("duplicate variable {v}")));
            }
        }
        Ok(AmbientRing(Arc::new(AmbientData {
            variables,
            weights,
            field,
        })))
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn standard_grading(&self) -> bool {
        self.0.weights.iter().all(|w| *w == 1)
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }

    pub fn compatible(&self, other: &AmbientRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.variables == other.0.variables
                && self.0.weights == other.0.weights
                && self.0.field == other.0.field)
    }

    pub fn describe(&self) -> String {
        format!(
            "{}[{}]",
            match self.0.field {
                FieldSpec::Fp(p) => format!("GF({p})"),
                FieldSpec::Rational => "QQ".into(),
            },
            self.0.variables.join(",")
        )
    }

    /// All monomials of exact weighted degree `d`, in descending term order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let nv = self.nvars();
        let mut exps = vec![0u32; nv];
        fn rec(
            ring: &AmbientRing,
            idx: usize,
            remaining: u64,
            exps: &mut Vec<u32>,
            out: &mut Vec<Monomial>,
        ) {
            if idx == ring.nvars() {
                if remaining == 0 {
                    out.push(Monomial::new(exps.clone(), ring.weights()));
                }
                return;
            }
            let w = ring.weights()[idx] as u64;
            let max = remaining / w;
            for e in 0..=max {
                exps[idx] = e as u32;
                rec(ring, idx + 1, remaining - e * w, exps, out);
            }
            exps[idx] = 0;
        }
        rec(self, 0, d, &mut exps, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl PartialEq for AmbientRing {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other)
    }
}
impl Eq for AmbientRing {}

#[derive(Debug)]
struct QuotientData {
    ambient: AmbientRing,
    ideal_generators: Vec<Polynomial>,
    reduced_gb: Vec<Polynomial>,
}

/// Quotient `R = k[x_1..x_n]/I` by a weighted-homogeneous ideal. The
/// maximal ideal is the ideal of all variables.
#[derive(Clone, Debug)]
pub struct QuotientRing(Arc<QuotientData>);

/// Construct a quotient ring, computing the reduced Groebner basis of the
/// defining ideal. Inputs are kept verbatim for report echoing.
pub fn make_quotient_ring(
    variables: Vec<String>,
    weights: Vec<u32>,
    field: FieldSpec,
    generators: Vec<Polynomial>,
) -> Result<QuotientRing> {
    let ambient = AmbientRing::new(variables, weights, field)?;
    QuotientRing::new(&ambient, generators)
}

impl QuotientRing {
    pub fn new(ambient: &AmbientRing, generators: Vec<Polynomial>) -> Result<QuotientRing> {
        for g in &generators {
            if !g.ambient().compatible(ambient) {
                return Err(AlgebraError::RingMismatch(
                    "ideal generator from a different ambient ring".into(),
                ));
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::homogeneity(
                    format!("ideal generator {g}"),
                    g.inhomogeneous_witness().unwrap_or_default(),
                ));
            }
        }
        let nonzero: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        if nonzero
            .iter()
            .any(|g| g.homogeneous_degree() == Some(0))
        {
            return Err(AlgebraError::DegenerateRing);
        }
        let reduced_gb = groebner::reduced_ideal_gb(ambient, &nonzero);
        if reduced_gb.iter().any(|g| g.is_unit_constant()) {
            return Err(AlgebraError::DegenerateRing);
        }
        Ok(QuotientRing(Arc::new(QuotientData {
            ambient: ambient.clone(),
            ideal_generators: generators,
            reduced_gb,
        })))
    }

    /// Polynomial ring (zero ideal) over the given ambient.
    pub fn polynomial_ring(ambient: &AmbientRing) -> QuotientRing {
        QuotientRing::new(ambient, Vec::new()).expect("zero ideal is always valid")
    }

    pub fn ambient(&self) -> &AmbientRing {
        &self.0.ambient
    }

    pub fn field(&self) -> &FieldSpec {
        self.0.ambient.field()
    }

    pub fn nvars(&self) -> usize {
        self.0.ambient.nvars()
    }

    pub fn weights(&self) -> &[u32] {
        self.0.ambient.weights()
    }

    pub fn ideal_generators(&self) -> &[Polynomial] {
        &self.0.ideal_generators
    }

    pub fn reduced_gb(&self) -> &[Polynomial] {
        &self.0.reduced_gb
    }

    pub fn standard_grading(&self) -> bool {
        self.0.ambient.standard_grading()
    }

    pub fn compatible(&self, other: &QuotientRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ambient.compatible(&other.0.ambient)
                && self.0.reduced_gb == other.0.reduced_gb)
    }

    /// Normal form of an ambient polynomial modulo the defining ideal.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        groebner::reduce_by_ideal(p, &self.0.reduced_gb)
    }

    pub fn is_zero_element(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Variables with nonzero image in the quotient. A variable dies exactly
    /// when it appears bare in the reduced Groebner basis.
    pub fn live_variables(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|i| {
                let v = Polynomial::variable(self.ambient(), *i);
                !self.is_zero_element(&v)
            })
            .collect()
    }

    /// Generators of the maximal ideal: the live variables.
    pub fn maximal_ideal_generators(&self) -> Vec<Polynomial> {
        self.live_variables()
            .into_iter()
            .map(|i| Polynomial::variable(self.ambient(), i))
            .collect()
    }

    /// True when the quotient is the residue field itself.
    pub fn is_residue_field(&self) -> bool {
        self.live_variables().is_empty()
    }

    /// Quotient of this ring by further homogeneous elements.
    pub fn quotient_by(&self, extra: &[Polynomial]) -> Result<QuotientRing> {
        let mut gens = self.0.ideal_generators.clone();
        gens.extend(extra.iter().cloned());
        QuotientRing::new(self.ambient(), gens)
    }

    pub fn describe(&self) -> String {
        if self.0.reduced_gb.is_empty() {
            self.0.ambient.describe()
        } else {
            format!(
                "{} / ({})",
                self.0.ambient.describe(),
                self.0
                    .reduced_gb
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        }
    }
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other)
    }
}
impl Eq for QuotientRing {}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn hypersurface_ring() {
        let r = ring_xy_mod_xy();
        assert_eq!(r.reduced_gb().len(), 1);
        assert_eq!(r.reduced_gb()[0].to_string(), "x*y");
        assert_eq!(r.live_variables(), vec![0, 1]);
    }

    #[test]
    fn polynomial_ring_has_empty_gb() {
        let r = poly_ring(&["x"]);
        assert!(r.reduced_gb().is_empty());
    }

    #[test]
    fn weighted_generators_accepted() {
        // x z^2 - y^2, x^2 - y z, x y - z^3 under weights (4,5,3)
        let r = ring_weighted_determinantal();
        assert_eq!(r.reduced_gb().len(), 3);
        for g in r.reduced_gb() {
            assert!(g.is_homogeneous());
        }
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let a = ambient(&["x", "y"], &[1, 1]);
        let p = parse_poly(&a, "x^2 + y");
        let err = QuotientRing::new(&a, vec![p]).unwrap_err();
        assert!(matches!(err, AlgebraError::Homogeneity { .. }));
    }

    #[test]
    fn unit_generator_rejected() {
        let a = ambient(&["x"], &[1]);
        let p = parse_poly(&a, "3");
        let err = QuotientRing::new(&a, vec![p]).unwrap_err();
        assert!(matches!(err, AlgebraError::DegenerateRing));
    }

    #[test]
    fn ghost_variable_detected() {
        let a = ambient(&["x", "y", "z"], &[1, 1, 1]);
        let r = QuotientRing::new(&a, vec![parse_poly(&a, "z"), parse_poly(&a, "x*y")]).unwrap();
        assert_eq!(r.live_variables(), vec![0, 1]);
    }
}
