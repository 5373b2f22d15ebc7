//! The five bundled rings and their standard modules, parameterized by the
//! coefficient field.

use syzygy_core::error::Result;
use syzygy_core::fpmod::FPModule;
use syzygy_core::parse::parse_polynomial;
use syzygy_core::poly::Polynomial;
use syzygy_core::ring::{AmbientRing, QuotientRing};
use syzygy_core::scalar::FieldSpec;

pub fn build_ring(
    vars: &[&str],
    weights: &[u32],
    gens: &[&str],
    field: FieldSpec,
) -> Result<QuotientRing> {
    let ambient = AmbientRing::new(
        vars.iter().map(|s| s.to_string()).collect(),
        weights.to_vec(),
        field,
    )?;
    let gs: Vec<Polynomial> = gens
        .iter()
        .map(|g| parse_polynomial(&ambient, g))
        .collect::<Result<Vec<_>>>()?;
    QuotientRing::new(&ambient, gs)
}

pub fn poly(ring: &QuotientRing, s: &str) -> Polynomial {
    parse_polynomial(ring.ambient(), s).expect("fixture polynomial parses")
}

/// `k[x,y]/(xy)`: the product of two lines.
pub fn r1(field: FieldSpec) -> QuotientRing {
    build_ring(&["x", "y"], &[1, 1], &["x*y"], field).unwrap()
}

/// `k[x,y,z]/(xy,xz)`: a line glued to a plane.
pub fn r2(field: FieldSpec) -> QuotientRing {
    build_ring(&["x", "y", "z"], &[1, 1, 1], &["x*y", "x*z"], field).unwrap()
}

/// `k[x,y]/(x^2,xy)`: a line with an embedded point (depth zero).
pub fn r3(field: FieldSpec) -> QuotientRing {
    build_ring(&["x", "y"], &[1, 1], &["x^2", "x*y"], field).unwrap()
}

/// `k[x,y,t]/(xy)`: the product of two lines times a free direction.
pub fn r4(field: FieldSpec) -> QuotientRing {
    build_ring(&["x", "y", "t"], &[1, 1, 1], &["x*y"], field).unwrap()
}

/// The weighted determinantal ring with weights (4,5,3): the quotient by
/// the 2x2 minors of (x y z / y z^2 x).
pub fn r5(field: FieldSpec) -> QuotientRing {
    build_ring(
        &["x", "y", "z"],
        &[4, 5, 3],
        &["x*z^2 - y^2", "x^2 - y*z", "x*y - z^3"],
        field,
    )
    .unwrap()
}

/// The transpose module from the two-branch ring: the Auslander transpose
/// of the ideal (y, z).
pub fn r2_transpose_module(ring: &QuotientRing) -> FPModule {
    let i = FPModule::ideal_module(ring, &[poly(ring, "y"), poly(ring, "z")])
        .expect("fixture ideal");
    i.auslander_transpose()
}

/// All five rings with names.
pub fn bundled_rings(field: FieldSpec) -> Vec<(&'static str, QuotientRing)> {
    vec![
        ("R1", r1(field)),
        ("R2", r2(field)),
        ("R3", r3(field)),
        ("R4", r4(field)),
        ("R5", r5(field)),
    ]
}
