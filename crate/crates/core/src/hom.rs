//! Graded Hom spaces between finitely presented modules, computed by exact
//! linear algebra over the coefficient field.

use crate::error::Result;
use crate::fpmod::{FPMap, FPModule};
use crate::groebner;
use crate::hilbert::standard_monomials;
use crate::linalg::{DenseMatrix, TrackedEchelon};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::vector::ModuleVector;

/// Basis of the space of degree-`d` homomorphisms `M -> N`, each element a
/// matrix on minimal generators together with a retained well-definedness
/// certificate.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: FPModule,
    target: FPModule,
    degree: i64,
    basis: Vec<FPMap>,
    certificates: Vec<LiftCertificate>,
    /// per source generator, the standard module monomials of the target in
    /// the matching degree (the coordinate system for canonical forms)
    value_basis: Vec<Vec<(usize, Monomial)>>,
}

/// Exact division data showing that a map carries relations into relations:
/// for each source relation column, quotients against the target relation
/// basis with zero remainder.
#[derive(Clone, Debug)]
pub struct LiftCertificate {
    pub per_relation_quotients: Vec<Vec<Polynomial>>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FPMap] {
        &self.basis
    }

    pub fn certificates(&self) -> &[LiftCertificate] {
        &self.certificates
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    /// Canonical form of a map `M -> N` of this degree: the coordinates of
    /// the normal forms of its generator images. Zero exactly for the zero
    /// homomorphism.
    pub fn canonical_form(&self, map: &FPMap) -> Vec<Scalar> {
        let field = *self.source.ring().field();
        let mut out = Vec::new();
        for j in 0..self.source.generator_count() {
            let col = map.column(j);
            let nf = self.target.element_normal_form(&col);
            let basis = &self.value_basis[j];
            let mut coords = vec![field.zero(); basis.len()];
            for (pos, p) in nf.components().iter().enumerate() {
                for (c, m) in p.terms() {
                    if let Some(idx) = basis.iter().position(|(bp, bm)| *bp == pos && bm == m) {
                        coords[idx] = c.clone();
                    }
                }
            }
            out.extend(coords);
        }
        out
    }

    /// Coordinates of a map in this basis, when it lies in the span.
    pub fn coordinates(&self, map: &FPMap) -> Option<Vec<Scalar>> {
        let field = *self.source.ring().field();
        let width = self.value_basis.iter().map(|b| b.len()).sum();
        let mut ech = TrackedEchelon::new(field, width);
        for b in &self.basis {
            ech.insert(self.canonical_form(b));
        }
        ech.express(self.canonical_form(map))
    }

    /// Linear combination of the basis maps.
    pub fn combination(&self, coeffs: &[Scalar]) -> FPMap {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = FPMap::zero(self.source.clone(), self.target.clone());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc = acc.add(&b.scale(c));
        }
        acc
    }
}

/// Compute a basis of `Hom(M, N)_d`. Both modules are minimalized first;
/// the returned maps act on minimal generators.
pub fn hom_space_in_degree(m: &FPModule, n: &FPModule, degree: i64) -> Result<HomSpace> {
    let m = if m.is_minimal() { m.clone() } else { m.minimal_presentation() };
    let n = if n.is_minimal() { n.clone() } else { n.minimal_presentation() };
    let ring = m.ring().clone();
    let ambient = ring.ambient().clone();
    let field = *ring.field();

    let a_shifts = m.generator_degrees().to_vec();
    let b_shifts = n.generator_degrees().to_vec();
    let g0m = m.generator_count();
    let g0n = n.generator_count();

    // unknowns: one per (target gen i, source gen j, ring standard monomial
    // of degree a_j + degree - b_i)
    let mut unknowns: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..g0m {
        for i in 0..g0n {
            let e = a_shifts[j] + degree - b_shifts[i];
            if e < 0 {
                continue;
            }
            for mono in ambient.monomials_of_degree(e as u64) {
                let is_standard = !ring
                    .reduced_gb()
                    .iter()
                    .any(|g| g.leading_monomial().map(|l| l.divides(&mono)).unwrap_or(false));
                if is_standard {
                    unknowns.push((i, j, mono));
                }
            }
        }
    }

    let value_basis: Vec<Vec<(usize, Monomial)>> = (0..g0m)
        .map(|j| standard_monomials(&n, a_shifts[j] + degree))
        .collect();

    if unknowns.is_empty() {
        return Ok(HomSpace {
            source: m,
            target: n,
            degree,
            basis: Vec::new(),
            certificates: Vec::new(),
            value_basis,
        });
    }

    // constraint rows: for each relation column of M, the normal form of
    // the image must vanish identically
    let relation_cols = m.presentation().columns();
    let n_gb = n.relations_gb();
    let mut row_index: std::collections::HashMap<(usize, usize, Monomial), usize> =
        std::collections::HashMap::new();
    let mut columns_data: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (i, j, mono) in unknowns.iter() {
        let mut entries: Vec<(usize, Scalar)> = Vec::new();
        for (l, rel) in relation_cols.iter().enumerate() {
            // image of relation l under the elementary matrix E_(i,j,mono)
            let coeff = rel.component(*j);
            if coeff.is_zero() {
                continue;
            }
            let image_entry = coeff.term_mul(&field.one(), mono);
            let mut comps = ModuleVector::zero(&ambient, g0n).into_components();
            comps[*i] = image_entry;
            let v = ModuleVector::new(comps);
            let nf = groebner::normal_form(&v, n_gb)?;
            for (pos, p) in nf.components().iter().enumerate() {
                for (c, mm) in p.terms() {
                    let key = (l, pos, mm.clone());
                    let next = row_index.len();
                    let idx = *row_index.entry(key).or_insert(next);
                    entries.push((idx, c.clone()));
                }
            }
        }
        columns_data.push(entries);
    }
    let nrows = row_index.len();
    let mut mat = DenseMatrix::zero(field, nrows, unknowns.len());
    for (ci, entries) in columns_data.iter().enumerate() {
        for (ri, c) in entries {
            let cur = mat.get(*ri, ci).clone();
            mat.set(*ri, ci, field.add(&cur, c));
        }
    }
    let kernel = mat.kernel_basis();

    // keep solutions with independent canonical forms (quotient by the
    // null homomorphisms)
    let width: usize = value_basis.iter().map(|b| b.len()).sum();
    let mut kappa = TrackedEchelon::new(field, width);
    let mut basis: Vec<FPMap> = Vec::new();
    let mut certificates: Vec<LiftCertificate> = Vec::new();
    for sol in kernel {
        let mut matrix = vec![vec![Polynomial::zero(&ambient); g0m]; g0n];
        for (ai, (i, j, mono)) in unknowns.iter().enumerate() {
            if sol[ai].is_zero() {
                continue;
            }
            let t = Polynomial::from_term(&ambient, sol[ai].clone(), mono.clone());
            matrix[*i][*j] = matrix[*i][*j].add(&t);
        }
        let map = FPMap::new(m.clone(), n.clone(), matrix)?;
        // canonical form (inline to avoid constructing HomSpace first)
        let mut kf: Vec<Scalar> = Vec::new();
        for j in 0..g0m {
            let col = map.column(j);
            let nf = n.element_normal_form(&col);
            let vb = &value_basis[j];
            let mut coords = vec![field.zero(); vb.len()];
            for (pos, p) in nf.components().iter().enumerate() {
                for (c, mm) in p.terms() {
                    if let Some(idx) = vb.iter().position(|(bp, bm)| *bp == pos && bm == mm) {
                        coords[idx] = c.clone();
                    }
                }
            }
            kf.extend(coords);
        }
        if kappa.insert(kf) {
            let cert = certify_well_defined(&map)?;
            certificates.push(cert);
            basis.push(map);
        }
    }

    Ok(HomSpace {
        source: m,
        target: n,
        degree,
        basis,
        certificates,
        value_basis,
    })
}

/// Degree-zero Hom space.
pub fn hom_space(m: &FPModule, n: &FPModule) -> Result<HomSpace> {
    hom_space_in_degree(m, n, 0)
}

/// Produce the exact division certificate that `map` carries each relation
/// of its source into the relation submodule of its target; errors if it
/// does not.
pub fn certify_well_defined(map: &FPMap) -> Result<LiftCertificate> {
    let n_gb = map.target().relations_gb();
    let ambient = map.target().ring().ambient();
    let mut per_relation_quotients = Vec::new();
    for rel in map.source().presentation().columns() {
        let image = map.apply_to_coordinates(&rel);
        let (quotients, remainder) = groebner::divide(&image, n_gb.elements(), ambient);
        if !remainder.is_zero() {
            return Err(crate::error::AlgebraError::precondition(format!(
                "map does not carry relation {rel} into target relations"
            )));
        }
        per_relation_quotients.push(quotients);
    }
    Ok(LiftCertificate {
        per_relation_quotients,
    })
}

/// Re-verify a lift certificate from scratch: the recorded quotients must
/// reproduce each relation image exactly.
pub fn verify_certificate(map: &FPMap, cert: &LiftCertificate) -> bool {
    let n_gb = map.target().relations_gb();
    let ambient = map.target().ring().ambient();
    let rels = map.source().presentation().columns();
    if rels.len() != cert.per_relation_quotients.len() {
        return false;
    }
    for (rel, quotients) in rels.iter().zip(&cert.per_relation_quotients) {
        let image = map.apply_to_coordinates(rel);
        if quotients.len() != n_gb.elements().len() {
            return false;
        }
        let mut acc = ModuleVector::zero(ambient, image.rank());
        for (q, g) in quotients.iter().zip(n_gb.elements()) {
            acc = acc.add(&g.poly_mul(q));
        }
        if acc.sub(&image).is_zero() {
            continue;
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn hom_from_ring_counts_degree_zero_generators() {
        // Hom(R, M) in degree 0 has dimension = number of degree-0 generators
        let r = ring_xy_mod_xy();
        let free = FPModule::free(&r, vec![0]);
        let m = FPModule::free(&r, vec![0, 0, 1]);
        let h = hom_space(&free, &m).unwrap();
        assert_eq!(h.dimension(), 2);
    }

    #[test]
    fn end_of_residue_field_is_one_dimensional() {
        let r = ring_xy_mod_xy();
        let k = FPModule::residue_field(&r);
        let h = hom_space(&k, &k).unwrap();
        assert_eq!(h.dimension(), 1);
    }

    #[test]
    fn end_of_decomposable_maximal_ideal_contains_projections() {
        // End_0(m) over k[x,y]/(xy) contains the two idempotent projections
        let r = ring_xy_mod_xy();
        let m = FPModule::maximal_ideal(&r);
        let h = hom_space(&m, &m).unwrap();
        assert!(h.dimension() >= 2, "dim End_0(m) = {}", h.dimension());
        for (map, cert) in h.basis().iter().zip(h.certificates()) {
            assert!(map.is_well_defined());
            assert!(verify_certificate(map, cert));
        }
    }

    #[test]
    fn nonzero_degree_hom() {
        // the ideal (x) is R/(y) shifted: a degree -1 hom onto R/(y) exists,
        // while no degree-1 map R/(y) -> R/(x) can kill the relation
        let r = ring_xy_mod_xy();
        let a = r.ambient();
        let xmod = FPModule::ideal_module(&r, &[parse_poly(a, "x")]).unwrap();
        let ry = FPModule::cyclic(&r, &[parse_poly(a, "y")]).unwrap();
        let down = hom_space_in_degree(&xmod, &ry, -1).unwrap();
        assert_eq!(down.dimension(), 1);
        let rx = FPModule::cyclic(&r, &[parse_poly(a, "x")]).unwrap();
        let none = hom_space_in_degree(&ry, &rx, 1).unwrap();
        assert_eq!(none.dimension(), 0);
    }
}
