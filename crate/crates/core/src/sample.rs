//! Seeded random generation of homogeneous elements and modules, used by
//! the randomized property checks and the verification battery.

use crate::fpmod::FPModule;
use crate::freemod::{FreeModule, ModuleMap};
use crate::poly::Polynomial;
use crate::ring::QuotientRing;
use crate::scalar::{FieldSpec, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_scalar(field: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Fp(p) => Scalar::Fp(rng.gen_range(0..*p)),
        FieldSpec::Rational => field.from_i64(rng.gen_range(-9..=9)),
    }
}

/// Random homogeneous element of the quotient ring of the given weighted
/// degree (possibly zero when the degree piece vanishes).
pub fn random_homogeneous(ring: &QuotientRing, degree: u64, rng: &mut ChaCha8Rng) -> Polynomial {
    let ambient = ring.ambient();
    let field = *ambient.field();
    let mut terms = Vec::new();
    for m in ambient.monomials_of_degree(degree) {
        if rng.gen_bool(0.6) {
            terms.push((random_scalar(&field, rng), m));
        }
    }
    ring.reduce(&Polynomial::from_terms(ambient, terms))
}

/// Random nonzero homogeneous maximal-ideal element of degree within the
/// range, retrying across degrees.
pub fn random_ideal_element(ring: &QuotientRing, max_degree: u64, rng: &mut ChaCha8Rng) -> Polynomial {
    for _ in 0..64 {
        let d = rng.gen_range(1..=max_degree);
        let p = random_homogeneous(ring, d, rng);
        if !p.is_zero() {
            return p;
        }
    }
    // fall back to the first live variable
    let live = ring.live_variables();
    Polynomial::variable(ring.ambient(), live[0])
}

/// Random finitely presented module: a cokernel of a small matrix with
/// homogeneous entries of low degree.
pub fn random_module(ring: &QuotientRing, rng: &mut ChaCha8Rng) -> FPModule {
    let gens = rng.gen_range(1..=2usize);
    let rels = rng.gen_range(1..=2usize);
    let tgt_shifts = vec![0i64; gens];
    let mut src_shifts = Vec::new();
    let mut matrix = vec![Vec::new(); gens];
    for _ in 0..rels {
        let d = rng.gen_range(1..=2u64);
        src_shifts.push(d as i64);
        for row in matrix.iter_mut() {
            row.push(random_homogeneous(ring, d, rng));
        }
    }
    let map = ModuleMap::new(
        FreeModule::new(ring, src_shifts),
        FreeModule::new(ring, tgt_shifts),
        matrix,
    )
    .expect("sampled entries are homogeneous of the declared degree");
    FPModule::from_presentation(map)
}

/// Random module of infinite projective dimension over a ring with
/// decomposable maximal ideal: sampled until the second syzygy is nonzero,
/// which certifies pd = infinity there.
pub fn random_infinite_pd_module(ring: &QuotientRing, rng: &mut ChaCha8Rng) -> FPModule {
    loop {
        let m = random_module(ring, rng).minimal_presentation();
        if m.is_zero_module() {
            continue;
        }
        if let Ok(crate::homalg::PdReport::Infinite) = crate::homalg::projective_dimension(&m, 3) {
            return m;
        }
    }
}
