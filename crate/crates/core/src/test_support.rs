//! Shared fixtures and independent oracles for the unit tests.

use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::{AmbientRing, QuotientRing};
use crate::scalar::{FieldSpec, Scalar};
use crate::vector::ModuleVector;

pub fn ambient(vars: &[&str], weights: &[u32]) -> AmbientRing {
    AmbientRing::new(
        vars.iter().map(|s| s.to_string()).collect(),
        weights.to_vec(),
        FieldSpec::Fp(32003),
    )
    .unwrap()
}

pub fn parse_poly(a: &AmbientRing, s: &str) -> Polynomial {
    parse_polynomial(a, s).unwrap()
}

pub fn poly_ring(vars: &[&str]) -> QuotientRing {
    let a = ambient(vars, &vec![1; vars.len()]);
    QuotientRing::polynomial_ring(&a)
}

pub fn quotient(vars: &[&str], weights: &[u32], gens: &[&str]) -> QuotientRing {
    let a = ambient(vars, weights);
    let gs: Vec<Polynomial> = gens.iter().map(|g| parse_poly(&a, g)).collect();
    QuotientRing::new(&a, gs).unwrap()
}

/// k[x,y]/(xy)
pub fn ring_xy_mod_xy() -> QuotientRing {
    quotient(&["x", "y"], &[1, 1], &["x*y"])
}

/// k[x,y,z]/(xy,xz)
pub fn ring_xyz_mod_xy_xz() -> QuotientRing {
    quotient(&["x", "y", "z"], &[1, 1, 1], &["x*y", "x*z"])
}

/// k[x,y]/(x^2,xy)
pub fn ring_xy_mod_x2_xy() -> QuotientRing {
    quotient(&["x", "y"], &[1, 1], &["x^2", "x*y"])
}

/// k[x,y,t]/(xy)
pub fn ring_xyt_mod_xy() -> QuotientRing {
    quotient(&["x", "y", "t"], &[1, 1, 1], &["x*y"])
}

/// Weighted determinantal ring: k[x,y,z]/(xz^2 - y^2, x^2 - yz, xy - z^3),
/// weights (4,5,3).
pub fn ring_weighted_determinantal() -> QuotientRing {
    quotient(
        &["x", "y", "z"],
        &[4, 5, 3],
        &["x*z^2 - y^2", "x^2 - y*z", "x*y - z^3"],
    )
}

/// Coordinates of a polynomial in the full monomial basis of its degree.
fn poly_coords(p: &Polynomial, basis: &[Monomial], field: &FieldSpec) -> Vec<Scalar> {
    let mut v = vec![field.zero(); basis.len()];
    for (c, m) in p.terms() {
        let idx = basis.iter().position(|b| b == m).expect("degree mismatch");
        v[idx] = c.clone();
    }
    v
}

/// Independent Groebner-basis oracle: degree-by-degree linear algebra.
///
/// For each weighted degree `d <= maxdeg`, the span of `generators`
/// (monomial multiples, Gaussian elimination) must agree with the ideal the
/// basis claims: every spanned element has normal form zero, and the
/// dimension predicted by counting standard monomials matches the rank.
pub fn gb_linear_oracle(
    generators: &[Polynomial],
    gb: &[Polynomial],
    ambient: &AmbientRing,
    maxdeg: u64,
) -> bool {
    let field = *ambient.field();
    for d in 0..=maxdeg {
        let monomials = ambient.monomials_of_degree(d);
        if monomials.is_empty() {
            continue;
        }
        let mut ech = Echelon::new(field, monomials.len());
        let mut members: Vec<Polynomial> = Vec::new();
        for g in generators {
            let Some(gd) = g.homogeneous_degree() else {
                continue;
            };
            if gd > d {
                continue;
            }
            for m in ambient.monomials_of_degree(d - gd) {
                let prod = g.term_mul(&field.one(), &m);
                members.push(prod.clone());
                ech.insert(poly_coords(&prod, &monomials, &field));
            }
        }
        // (a) every member of the ideal in degree d reduces to zero
        for p in &members {
            if !crate::groebner::reduce_by_ideal(p, gb).is_zero() {
                return false;
            }
        }
        // (b) the lead-term ideal has the right dimension in degree d
        let standard = monomials
            .iter()
            .filter(|m| {
                !gb.iter()
                    .any(|g| g.leading_monomial().map(|l| l.divides(m)).unwrap_or(false))
            })
            .count();
        if monomials.len() - standard != ech.len() {
            return false;
        }
    }
    true
}

/// Degree-truncated module-membership oracle for a list of vectors: the
/// span of `generators` inside the free module (with ideal multiples
/// adjoined) in each degree, compared against GB-claimed membership.
pub fn module_span_contains(
    generators: &[ModuleVector],
    shifts: &[i64],
    ring: &QuotientRing,
    v: &ModuleVector,
    vdeg: i64,
) -> bool {
    let ambient = ring.ambient();
    let field = *ambient.field();
    // basis of the free module component in degree vdeg
    let mut basis: Vec<(usize, Monomial)> = Vec::new();
    for (i, s) in shifts.iter().enumerate() {
        if vdeg - s < 0 {
            continue;
        }
        for m in ambient.monomials_of_degree((vdeg - s) as u64) {
            basis.push((i, m));
        }
    }
    let coords = |w: &ModuleVector| -> Vec<Scalar> {
        let mut out = vec![field.zero(); basis.len()];
        for (i, p) in w.components().iter().enumerate() {
            for (c, m) in p.terms() {
                let idx = basis
                    .iter()
                    .position(|(bi, bm)| *bi == i && bm == m)
                    .expect("degree mismatch in module oracle");
                out[idx] = c.clone();
            }
        }
        out
    };
    let mut ech = Echelon::new(field, basis.len());
    let mut all_gens: Vec<ModuleVector> = generators.to_vec();
    for q in ring.reduced_gb() {
        for i in 0..shifts.len() {
            let mut comps = vec![Polynomial::zero(ambient); shifts.len()];
            comps[i] = q.clone();
            all_gens.push(ModuleVector::new(comps));
        }
    }
    for g in &all_gens {
        let Some(gd) = g.homogeneous_degree(shifts) else {
            continue;
        };
        if gd > vdeg {
            continue;
        }
        for m in ambient.monomials_of_degree((vdeg - gd) as u64) {
            let prod = g.term_mul(&field.one(), &m);
            ech.insert(coords(&prod));
        }
    }
    ech.contains(coords(v))
}
