//! Closed-set descriptions of the singular, non-free, and infinite
//! projective dimension loci, each given by a defining ideal.

use crate::error::{AlgebraError, Result};
use crate::fpmod::FPModule;
use crate::groebner;
use crate::homalg;
use crate::poly::Polynomial;
use crate::resolution;
use crate::ring::QuotientRing;


#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusKind {
    Singular,
    NonFree,
    InfiniteProjectiveDimension,
}

/// A closed locus `V(J)` together with the assumptions its computation
/// relied on.
#[derive(Clone, Debug)]
pub struct LocusDescription {
    pub kind: LocusKind,
    pub defining_ideal: Vec<Polynomial>,
    pub validity_flags: Vec<String>,
}

impl LocusDescription {
    /// Empty locus: the defining ideal is the unit ideal.
    pub fn is_empty(&self) -> bool {
        self.defining_ideal
            .iter()
            .any(|p| p.constant_coefficient().is_some())
    }
}

/// All `c x c` minors of a matrix.
fn minors(matrix: &[Vec<Polynomial>], c: usize, ambient: &crate::ring::AmbientRing) -> Vec<Polynomial> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let row_sets = subsets(rows, c);
    let col_sets = subsets(cols, c);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(det_recursive(matrix, rs, cs, ambient));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn det_recursive(
    matrix: &[Vec<Polynomial>],
    rows: &[usize],
    cols: &[usize],
    ambient: &crate::ring::AmbientRing,
) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::one(ambient);
    }
    let mut acc = Polynomial::zero(ambient);
    let r = rows[0];
    let rest: Vec<usize> = rows[1..].to_vec();
    for (idx, c) in cols.iter().enumerate() {
        let entry = &matrix[r][*c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| *v)
            .collect();
        let sub = det_recursive(matrix, &rest, &sub_cols, ambient);
        let term = entry.mul(&sub);
        acc = if idx % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Singular locus as `V(I + I_c(Jacobian))`: the user supplies the expected
/// codimension `c`; the Jacobian criterion is only guaranteed for
/// equidimensional quotients, which is flagged when unverified.
pub fn singular_locus(ring: &QuotientRing, codim: usize) -> Result<LocusDescription> {
    let ambient = ring.ambient();
    let gens = ring.reduced_gb();
    let jac: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..ambient.nvars()).map(|v| g.derivative(v)).collect())
        .collect();
    let rows = jac.len();
    let cols = ambient.nvars();
    if codim > rows.max(1) || codim > cols {
        return Err(AlgebraError::Shape(format!(
            "codimension {codim} exceeds the {rows}x{cols} Jacobian"
        )));
    }
    let mut ideal: Vec<Polynomial> = gens.to_vec();
    if rows == 0 {
        // polynomial ring: smooth, empty singular locus
        return Ok(LocusDescription {
            kind: LocusKind::Singular,
            defining_ideal: vec![Polynomial::one(ambient)],
            validity_flags: vec![],
        });
    }
    ideal.extend(minors(&jac, codim, ambient).into_iter().filter(|p| !p.is_zero()));
    let canonical = groebner::reduced_ideal_gb(ambient, &ideal);
    let mut flags = vec![format!("expected codimension supplied by caller: {codim}")];
    flags.push("Jacobian criterion assumes equidimensionality".into());
    Ok(LocusDescription {
        kind: LocusKind::Singular,
        defining_ideal: canonical,
        validity_flags: flags,
    })
}

/// Non-free locus `V(ann Ext^1(M, Omega^1 M))`: a prime is in the locus
/// exactly when the extension `0 -> Omega M -> F -> M -> 0` fails to split
/// locally.
pub fn non_free_locus(module: &FPModule) -> Result<LocusDescription> {
    let m = module.minimal_presentation();
    let ring = m.ring().clone();
    let ambient = ring.ambient();
    if m.is_zero_module() {
        return Ok(LocusDescription {
            kind: LocusKind::NonFree,
            defining_ideal: vec![Polynomial::one(ambient)],
            validity_flags: vec![],
        });
    }
    let omega = resolution::syzygy(&m, 1)?;
    if omega.is_zero_module() {
        return Ok(LocusDescription {
            kind: LocusKind::NonFree,
            defining_ideal: vec![Polynomial::one(ambient)],
            validity_flags: vec![],
        });
    }
    let ext_mod = homalg::ext(&m, &omega, 1)?.module;
    if ext_mod.is_zero_module() {
        return Ok(LocusDescription {
            kind: LocusKind::NonFree,
            defining_ideal: vec![Polynomial::one(ambient)],
            validity_flags: vec![],
        });
    }
    let ann = groebner::annihilator(&ext_mod)?;
    let mut with_ideal: Vec<Polynomial> = ring.reduced_gb().to_vec();
    with_ideal.extend(ann);
    let canonical = groebner::reduced_ideal_gb(ambient, &with_ideal);
    Ok(LocusDescription {
        kind: LocusKind::NonFree,
        defining_ideal: canonical,
        validity_flags: vec![],
    })
}

/// Infinite projective dimension locus: the non-free locus of the `d`-th
/// syzygy, `d` the (Cohen-Macaulay) dimension of the ring.
pub fn ipd_locus(module: &FPModule, d: usize) -> Result<LocusDescription> {
    let m = module.minimal_presentation();
    let ring = m.ring().clone();
    let syz = resolution::syzygy(&m, d)?;
    let mut inner = if syz.is_zero_module() {
        LocusDescription {
            kind: LocusKind::NonFree,
            defining_ideal: vec![Polynomial::one(ring.ambient())],
            validity_flags: vec![],
        }
    } else {
        non_free_locus(&syz)?
    };
    inner.kind = LocusKind::InfiniteProjectiveDimension;
    let depth = homalg::ring_depth(&ring)?;
    if ring.standard_grading() {
        let dim = crate::hilbert::dimension(&FPModule::free(&ring, vec![0]))?;
        if depth != dim || dim != d {
            inner
                .validity_flags
                .push(format!(
                    "Cohen-Macaulay assumption unverified: depth {depth}, dim {dim}, supplied d = {d}"
                ));
        }
    } else {
        inner
            .validity_flags
            .push("nonstandard grading: Cohen-Macaulay assumption unchecked".into());
    }
    Ok(inner)
}

/// Bounded radical-membership probe: every generator of `inner` has some
/// power up to the exponent bound lying in `outer`.
pub fn contained_up_to_radical(
    inner: &[Polynomial],
    outer: &[Polynomial],
    ring: &QuotientRing,
    max_power: u32,
) -> bool {
    let ambient = ring.ambient();
    let outer_gb = groebner::reduced_ideal_gb(ambient, outer);
    'gens: for g in inner {
        let mut power = g.clone();
        for _ in 0..max_power {
            if groebner::reduce_by_ideal(&power, &outer_gb).is_zero() {
                continue 'gens;
            }
            power = power.mul(g);
        }
        return false;
    }
    true
}

/// Equality of closed sets up to radical, by bounded two-sided containment.
pub fn equal_up_to_radical(
    a: &[Polynomial],
    b: &[Polynomial],
    ring: &QuotientRing,
    max_power: u32,
) -> bool {
    contained_up_to_radical(a, b, ring, max_power) && contained_up_to_radical(b, a, ring, max_power)
}

/// The vanishing locus of the maximal ideal: used by tests to compare loci
/// against `V(x_1, .., x_n)`.
pub fn maximal_ideal_locus(ring: &QuotientRing) -> Vec<Polynomial> {
    (0..ring.nvars())
        .map(|i| Polynomial::variable(ring.ambient(), i))
        .collect()
}

/// Witness used by tests: the locus contains only the irrelevant point,
/// i.e. it equals `V(m)` up to radical.
pub fn is_origin_only(desc: &LocusDescription, ring: &QuotientRing) -> bool {
    let m = maximal_ideal_locus(ring);
    equal_up_to_radical(&desc.defining_ideal, &m, ring, 8)
        && equal_up_to_radical(&m, &desc.defining_ideal, ring, 8)
}

/// Use in tests: specialization closure is automatic for closed sets; this
/// checks the ideal is homogeneous (hence the locus is a cone, closed under
/// specialization).
pub fn is_specialization_closed_witness(desc: &LocusDescription) -> bool {
    desc.defining_ideal.iter().all(|p| p.is_homogeneous())
}

/// Helper for tests: does the locus contain the point defined by a prime
/// with all listed variables? (Bounded membership of each generator.)
pub fn locus_defining_ideal_reduces_to_zero_on(
    desc: &LocusDescription,
    ring: &QuotientRing,
    vanishing_vars: &[usize],
) -> bool {
    // substitute: a generator lies in (vars) iff every term contains one
    let ambient = ring.ambient();
    let var_ideal: Vec<Polynomial> = vanishing_vars
        .iter()
        .map(|v| Polynomial::variable(ambient, *v))
        .collect();
    let gb = groebner::reduced_ideal_gb(ambient, &var_ideal);
    desc.defining_ideal
        .iter()
        .all(|g| groebner::reduce_by_ideal(g, &gb).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn singular_locus_of_hypersurface_is_origin() {
        let r = ring_xy_mod_xy();
        let desc = singular_locus(&r, 1).unwrap();
        assert!(is_origin_only(&desc, &r));
        assert!(is_specialization_closed_witness(&desc));
    }

    #[test]
    fn smooth_ring_has_empty_singular_locus() {
        // k[x,y]/(x) is a polynomial ring in disguise
        let r = quotient(&["x", "y"], &[1, 1], &["x"]);
        let desc = singular_locus(&r, 1).unwrap();
        assert!(desc.is_empty());
    }

    #[test]
    fn weighted_determinantal_singular_locus_is_origin() {
        let r = ring_weighted_determinantal();
        let desc = singular_locus(&r, 2).unwrap();
        assert!(is_origin_only(&desc, &r));
    }

    #[test]
    fn nonfree_locus_of_free_is_empty() {
        let r = ring_xy_mod_xy();
        let f = FPModule::free(&r, vec![0, 1]);
        let desc = non_free_locus(&f).unwrap();
        assert!(desc.is_empty());
    }

    #[test]
    fn nonfree_locus_of_branch_module_is_origin() {
        let r = ring_xy_mod_xy();
        let m = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        let desc = non_free_locus(&m).unwrap();
        assert!(is_origin_only(&desc, &r));
        // residue field too
        let k = FPModule::residue_field(&r);
        let desck = non_free_locus(&k).unwrap();
        assert!(is_origin_only(&desck, &r));
    }

    #[test]
    fn ipd_locus_cases() {
        // IPD(free) empty
        let r = ring_xy_mod_xy();
        let f = FPModule::free(&r, vec![0]);
        assert!(ipd_locus(&f, 1).unwrap().is_empty());
        // IPD(R/(x)) over the hypersurface: the origin
        let m = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        let desc = ipd_locus(&m, 1).unwrap();
        assert!(is_origin_only(&desc, &r));
        // IPD(R/(t)) over k[x,y,t]/(xy): empty (pd = 1)
        let r4 = ring_xyt_mod_xy();
        let mt = FPModule::cyclic(&r4, &[parse_poly(r4.ambient(), "t")]).unwrap();
        let desc4 = ipd_locus(&mt, 2).unwrap();
        assert!(desc4.is_empty());
    }
}
