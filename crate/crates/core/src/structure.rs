//! Ring and module structure: fiber products, decomposable maximal ideals,
//! split-summand certification, isomorphism testing, and the DVR and
//! minimal-multiplicity predicates.

use crate::error::{AlgebraError, Result};
use crate::fpmod::{FPMap, FPModule};
use crate::groebner;
use crate::hilbert;
use crate::hom::{self, certify_well_defined, verify_certificate, LiftCertificate};
use crate::homalg;
use crate::linalg::DenseMatrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{AmbientRing, QuotientRing};
use crate::scalar::{FieldSpec, Scalar};
use crate::vector::ModuleVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default number of randomized certificate-search trials.
pub const DEFAULT_TRIALS: u32 = 64;

/// A verified pair of maps exhibiting the source as a direct summand of
/// the target: `retraction . inclusion` is an automorphism.
#[derive(Clone, Debug)]
pub struct SplitCertificate {
    pub inclusion: FPMap,
    pub retraction: FPMap,
    pub composite: FPMap,
    pub inclusion_cert: LiftCertificate,
    pub retraction_cert: LiftCertificate,
    pub seed: u64,
    pub trial: u32,
}

impl SplitCertificate {
    /// Re-verify everything from scratch: both maps carry relations into
    /// relations, and the composite endomorphism is surjective (Groebner
    /// cokernel-zero certificate), hence bijective.
    pub fn verify(&self) -> bool {
        if !verify_certificate(&self.inclusion, &self.inclusion_cert) {
            return false;
        }
        if !verify_certificate(&self.retraction, &self.retraction_cert) {
            return false;
        }
        let composite = match self.retraction.compose(&self.inclusion) {
            Ok(c) => c,
            Err(_) => return false,
        };
        composite.is_surjective()
    }
}

/// Diagnostics attached to a failed summand search. `obstruction` makes
/// the failure a disproof; otherwise it is only a shortfall of the
/// randomized search.
#[derive(Clone, Debug)]
pub struct NotFoundReport {
    pub obstruction: Option<String>,
    pub nu_source: usize,
    pub nu_target: usize,
    pub source_generator_degrees: Vec<i64>,
    pub target_generator_degrees: Vec<i64>,
    pub hilbert_source: Vec<(i64, usize)>,
    pub hilbert_target: Vec<(i64, usize)>,
    pub seed: u64,
    pub trials: u32,
}

#[derive(Clone, Debug)]
pub enum SplitOutcome {
    Certified(Box<SplitCertificate>),
    ProvedNo(NotFoundReport),
    NotFound(NotFoundReport),
}

impl SplitOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, SplitOutcome::Certified(_))
    }

    pub fn is_proved_no(&self) -> bool {
        matches!(self, SplitOutcome::ProvedNo(_))
    }
}

fn diagnostics(
    m: &FPModule,
    n: &FPModule,
    obstruction: Option<String>,
    seed: u64,
    trials: u32,
) -> NotFoundReport {
    let bound = hilbert::DEFAULT_DEGREE_BOUND;
    NotFoundReport {
        obstruction,
        nu_source: m.generator_count(),
        nu_target: n.generator_count(),
        source_generator_degrees: m.minimal_generator_degrees(),
        target_generator_degrees: n.minimal_generator_degrees(),
        hilbert_source: hilbert::hilbert_function_range(m, 0, bound),
        hilbert_target: hilbert::hilbert_function_range(n, 0, bound),
        seed,
        trials,
    }
}

fn random_scalar(field: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Fp(p) => Scalar::Fp(rng.gen_range(0..*p)),
        FieldSpec::Rational => field.from_i64(rng.gen_range(-20..=20)),
    }
}

/// Search for a certificate that `m` is a direct summand of `n`.
///
/// Candidate maps are sums of homogeneous components whose degrees come
/// from the generator-degree differences of the two modules, so twisted
/// copies (the syzygy modules of the worked examples) are found. A firing
/// obstruction (total generator count, or an annihilator element of the
/// target not killing the source) turns the failure into a disproof.
pub fn split_summand(m: &FPModule, n: &FPModule, trials: u32, seed: u64) -> Result<SplitOutcome> {
    if !m.ring().compatible(n.ring()) {
        return Err(AlgebraError::RingMismatch("split search".into()));
    }
    let m = m.minimal_presentation();
    let n = n.minimal_presentation();

    // obstruction: a summand cannot need more generators than the ambient
    if m.generator_count() > n.generator_count() {
        let why = format!(
            "minimal generator count {} exceeds the target's {}",
            m.generator_count(),
            n.generator_count()
        );
        return Ok(SplitOutcome::ProvedNo(diagnostics(
            &m,
            &n,
            Some(why),
            seed,
            trials,
        )));
    }
    // obstruction: ann(N) must kill every summand of N
    let ann_n = groebner::annihilator(&n)?;
    for r in &ann_n {
        for i in 0..m.generator_count() {
            let v = ModuleVector::unit(m.ring().ambient(), m.generator_count(), i).poly_mul(r);
            if !m.element_is_zero(&v) {
                let why = format!("annihilator element {r} of the target does not kill the source");
                return Ok(SplitOutcome::ProvedNo(diagnostics(
                    &m,
                    &n,
                    Some(why),
                    seed,
                    trials,
                )));
            }
        }
    }

    // relevant homogeneous degrees: differences of generator degrees
    let mut degrees: Vec<i64> = Vec::new();
    for a in n.generator_degrees() {
        for b in m.generator_degrees() {
            if !degrees.contains(&(a - b)) {
                degrees.push(a - b);
            }
        }
    }
    degrees.sort();

    let mut fwd = Vec::new();
    let mut bwd = Vec::new();
    for d in &degrees {
        let hf = hom::hom_space_in_degree(&m, &n, *d)?;
        let hb = hom::hom_space_in_degree(&n, &m, -*d)?;
        if hf.dimension() > 0 && hb.dimension() > 0 {
            fwd.push(hf);
            bwd.push(hb);
        }
    }
    if fwd.is_empty() {
        return Ok(SplitOutcome::NotFound(diagnostics(&m, &n, None, seed, trials)));
    }

    let field = *m.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let mut f = FPMap::zero(m.clone(), n.clone());
        let mut g = FPMap::zero(n.clone(), m.clone());
        for (hf, hb) in fwd.iter().zip(&bwd) {
            for b in hf.basis() {
                let c = if trial == 0 {
                    field.one()
                } else {
                    random_scalar(&field, &mut rng)
                };
                f = f.add(&b.scale(&c));
            }
            for b in hb.basis() {
                let c = if trial == 0 {
                    field.one()
                } else {
                    random_scalar(&field, &mut rng)
                };
                g = g.add(&b.scale(&c));
            }
        }
        let composite = g.compose(&f)?;
        let scalar = composite.generator_matrix_mod_m();
        let det = DenseMatrix::from_rows(field, scalar).determinant();
        if det.is_zero() {
            continue;
        }
        // the composite is surjective by Nakayama; record the full
        // Groebner certificate as well
        if !composite.is_surjective() {
            continue;
        }
        let inclusion_cert = certify_well_defined(&f)?;
        let retraction_cert = certify_well_defined(&g)?;
        let cert = SplitCertificate {
            inclusion: f,
            retraction: g,
            composite,
            inclusion_cert,
            retraction_cert,
            seed,
            trial,
        };
        debug_assert!(cert.verify());
        return Ok(SplitOutcome::Certified(Box::new(cert)));
    }
    Ok(SplitOutcome::NotFound(diagnostics(&m, &n, None, seed, trials)))
}

/// A verified internal direct sum decomposition `M = A + B`.
#[derive(Clone, Debug)]
pub struct DecompositionCertificate {
    pub summand_a: FPModule,
    pub summand_b: FPModule,
    pub to_sum: FPMap,
    pub from_sum: FPMap,
    pub seed: u64,
}

impl DecompositionCertificate {
    pub fn verify(&self) -> bool {
        if !self.to_sum.is_well_defined() || !self.from_sum.is_well_defined() {
            return false;
        }
        let round = match self.from_sum.compose(&self.to_sum) {
            Ok(c) => c,
            Err(_) => return false,
        };
        let back = match self.to_sum.compose(&self.from_sum) {
            Ok(c) => c,
            Err(_) => return false,
        };
        round.is_surjective() && back.is_surjective()
    }
}

#[derive(Clone, Debug)]
pub enum DecomposeOutcome {
    Decomposed(Box<DecompositionCertificate>),
    /// proved indecomposable (deterministic obstruction)
    ProvedIndecomposable(String),
    /// no splitting found within the trial budget; only a hint
    NotFound { seed: u64, trials: u32 },
}

impl DecomposeOutcome {
    pub fn is_decomposed(&self) -> bool {
        matches!(self, DecomposeOutcome::Decomposed(_))
    }
}

/// Univariate polynomial helpers over the coefficient field (ascending
/// coefficients, no trailing zeros).
mod unipoly {
    use crate::scalar::{FieldSpec, Scalar};

    pub fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
        while p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
        p
    }

    pub fn eval(p: &[Scalar], x: &Scalar, field: &FieldSpec) -> Scalar {
        let mut acc = field.zero();
        for c in p.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    pub fn divmod(
        num: &[Scalar],
        den: &[Scalar],
        field: &FieldSpec,
    ) -> (Vec<Scalar>, Vec<Scalar>) {
        let den = trim(den.to_vec());
        assert!(!den.is_empty());
        let mut rem = trim(num.to_vec());
        let mut quo = vec![field.zero(); rem.len().saturating_sub(den.len() - 1)];
        let lead_inv = field.inv(den.last().unwrap()).unwrap();
        while rem.len() >= den.len() && !rem.is_empty() {
            let shift = rem.len() - den.len();
            let c = field.mul(rem.last().unwrap(), &lead_inv);
            quo[shift] = c.clone();
            for (i, d) in den.iter().enumerate() {
                let t = field.mul(&c, d);
                rem[shift + i] = field.sub(&rem[shift + i], &t);
            }
            rem = trim(rem);
        }
        (trim(quo), rem)
    }

    /// Extended gcd: returns (u, v) with u a + v b = gcd (monic).
    pub fn extended_gcd(
        a: &[Scalar],
        b: &[Scalar],
        field: &FieldSpec,
    ) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
        let mut r0 = trim(a.to_vec());
        let mut r1 = trim(b.to_vec());
        let mut s0 = vec![field.one()];
        let mut s1: Vec<Scalar> = Vec::new();
        let mut t0: Vec<Scalar> = Vec::new();
        let mut t1 = vec![field.one()];
        while !r1.is_empty() {
            let (q, r) = divmod(&r0, &r1, field);
            let snew = sub(&s0, &mul(&q, &s1, field), field);
            let tnew = sub(&t0, &mul(&q, &t1, field), field);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = snew;
            t0 = t1;
            t1 = tnew;
        }
        if let Some(l) = r0.last().cloned() {
            let inv = field.inv(&l).unwrap();
            r0 = r0.iter().map(|c| field.mul(c, &inv)).collect();
            s0 = s0.iter().map(|c| field.mul(c, &inv)).collect();
            t0 = t0.iter().map(|c| field.mul(c, &inv)).collect();
        }
        (r0, s0, t0)
    }

    pub fn mul(a: &[Scalar], b: &[Scalar], field: &FieldSpec) -> Vec<Scalar> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = field.mul(x, y);
                out[i + j] = field.add(&out[i + j], &t);
            }
        }
        trim(out)
    }

    pub fn sub(a: &[Scalar], b: &[Scalar], field: &FieldSpec) -> Vec<Scalar> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
            out.push(field.sub(&x, &y));
        }
        trim(out)
    }

    /// Roots in the prime field by exhaustive scan (fields of size up to
    /// 2^17), or small-integer candidates over the rationals.
    pub fn roots(p: &[Scalar], field: &FieldSpec) -> Vec<Scalar> {
        let mut out = Vec::new();
        match field {
            FieldSpec::Fp(q) if *q <= (1 << 17) => {
                for c in 0..*q {
                    let x = Scalar::Fp(c);
                    if eval(p, &x, field).is_zero() {
                        out.push(x);
                    }
                }
            }
            FieldSpec::Fp(_) => {}
            FieldSpec::Rational => {
                for c in -32i64..=32 {
                    let x = field.from_i64(c);
                    if eval(p, &x, field).is_zero() {
                        out.push(x);
                    }
                }
            }
        }
        out
    }
}

/// Minimal polynomial of an endomorphism inside its degree-zero End
/// algebra, via the canonical-form coordinatization.
fn minimal_polynomial(
    end_space: &hom::HomSpace,
    a: &FPMap,
    field: &FieldSpec,
) -> Option<Vec<Scalar>> {
    let width: usize = end_space.canonical_form(&FPMap::identity(end_space.source())).len();
    let mut ech = crate::linalg::TrackedEchelon::new(*field, width);
    let mut power = FPMap::identity(end_space.source());
    let mut powers: Vec<FPMap> = Vec::new();
    for _ in 0..=(end_space.dimension() + 1) {
        let kf = end_space.canonical_form(&power);
        if !ech.insert(kf.clone()) {
            // dependence: express this power in the previous ones
            let prev = crate::linalg::TrackedEchelon::new(*field, width);
            let mut prev = prev;
            for q in &powers {
                prev.insert(end_space.canonical_form(q));
            }
            let coords = prev.express(kf)?;
            // minimal polynomial: x^t - sum coords_i x^i
            let mut poly = coords.iter().map(|c| field.neg(c)).collect::<Vec<_>>();
            poly.push(field.one());
            return Some(unipoly::trim(poly));
        }
        powers.push(power.clone());
        power = a.compose(&power).ok()?;
    }
    None
}

/// Try to extract a nontrivial idempotent from the subalgebra generated by
/// `a`: a coprime factorization of the minimal polynomial yields one by
/// the Chinese remainder construction.
fn idempotent_from(
    end_space: &hom::HomSpace,
    a: &FPMap,
    field: &FieldSpec,
) -> Option<FPMap> {
    let m = minimal_polynomial(end_space, a, field)?;
    if m.len() <= 1 {
        return None;
    }
    for root in unipoly::roots(&m, field) {
        // factor m = (x - root)^k * g with g(root) != 0
        let lin = vec![field.neg(&root), field.one()];
        let mut g = m.clone();
        loop {
            let (q, r) = unipoly::divmod(&g, &lin, field);
            if r.is_empty() {
                g = q;
            } else {
                break;
            }
        }
        let (f, rem) = unipoly::divmod(&m, &g, field);
        if !rem.is_empty() {
            continue;
        }
        if g.len() <= 1 || f.len() <= 1 {
            continue; // m is a pure power of (x - root): no splitting here
        }
        // coprime check and Bezout: u f + v g = 1
        let (gcd, u, _v) = unipoly::extended_gcd(&f, &g, field);
        if gcd.len() != 1 {
            continue;
        }
        // e = u(a) f(a): idempotent, acts as 1 on the g-part
        let uf = unipoly::mul(&u, &f, field);
        let mut e = FPMap::zero(end_space.source().clone(), end_space.source().clone());
        let mut power = FPMap::identity(end_space.source());
        for c in &uf {
            e = e.add(&power.scale(c));
            power = a.compose(&power).ok()?;
        }
        // nontrivial: e != 0 and e != 1
        let kf = end_space.canonical_form(&e);
        if kf.iter().all(|c| c.is_zero()) {
            continue;
        }
        let one_minus = FPMap::identity(end_space.source()).add(&e.scale(&field.neg(&field.one())));
        let kf1 = end_space.canonical_form(&one_minus);
        if kf1.iter().all(|c| c.is_zero()) {
            continue;
        }
        return Some(e);
    }
    None
}

/// Present the image of a set of coordinate columns inside a module: the
/// columns become generators, with all relations they satisfy modulo the
/// module's relation submodule.
fn image_presentation(columns: &[ModuleVector], module: &FPModule) -> Result<(FPModule, Vec<ModuleVector>)> {
    let ring = module.ring().clone();
    let shifts = module.generator_degrees().to_vec();
    let ambient = ring.ambient();
    let nonzero: Vec<ModuleVector> = columns
        .iter()
        .map(|c| module.element_normal_form(c))
        .filter(|c| !c.is_zero())
        .collect();
    if nonzero.is_empty() {
        return Ok((FPModule::zero(&ring), Vec::new()));
    }
    let mut all = nonzero.clone();
    all.extend(
        module
            .presentation()
            .columns()
            .into_iter()
            .filter(|c| !c.is_zero()),
    );
    let syz = groebner::syzygy_basis(&all, &shifts, &ring)?;
    let n_u = nonzero.len();
    let gen_degrees: Vec<i64> = nonzero
        .iter()
        .map(|v| v.homogeneous_degree(&shifts).unwrap_or(0))
        .collect();
    let mut rel_cols = Vec::new();
    for s in syz {
        let head = ModuleVector::new(s.components()[..n_u].to_vec());
        if !head.is_zero() {
            rel_cols.push(head);
        }
    }
    let rel_degrees: Vec<i64> = rel_cols
        .iter()
        .map(|r| r.homogeneous_degree(&gen_degrees).unwrap_or(0))
        .collect();
    let matrix: Vec<Vec<Polynomial>> = (0..n_u)
        .map(|i| rel_cols.iter().map(|r| r.component(i).clone()).collect())
        .collect();
    let map = crate::freemod::ModuleMap::new(
        crate::freemod::FreeModule::new(&ring, rel_degrees),
        crate::freemod::FreeModule::new(&ring, gen_degrees),
        if rel_cols.is_empty() {
            vec![Vec::new(); n_u]
        } else {
            matrix
        },
    )?;
    let _ = ambient;
    Ok((FPModule::from_presentation(map), nonzero))
}

/// Build a decomposition certificate from an idempotent endomorphism.
fn decomposition_from_idempotent(
    module: &FPModule,
    e: &FPMap,
    seed: u64,
) -> Result<Option<DecompositionCertificate>> {
    let ring = module.ring().clone();
    let field = *ring.field();
    let one_minus = FPMap::identity(module).add(&e.scale(&field.neg(&field.one())));
    let (a, a_gens) = image_presentation(&e.columns(), module)?;
    let (b, b_gens) = image_presentation(&one_minus.columns(), module)?;
    if a.is_zero_module() || b.is_zero_module() {
        return Ok(None);
    }
    let ambient = ring.ambient();
    let g0 = module.generator_count();
    // M -> A: generator j of M maps to the class of e(e_j); the A-generators
    // are exactly the nonzero normal forms of those columns, so express each
    // column in the generator list
    let to_a = map_onto_image_generators(module, &a, &a_gens, &e.columns())?;
    let to_b = map_onto_image_generators(module, &b, &b_gens, &one_minus.columns())?;
    // stack into M -> A + B
    let sum = a.direct_sum(&b)?;
    let mut matrix = Vec::new();
    for row in to_a.matrix() {
        matrix.push(row.clone());
    }
    for row in to_b.matrix() {
        matrix.push(row.clone());
    }
    let to_sum = FPMap::new(module.clone(), sum.clone(), matrix)?;
    // A + B -> M: the generators are elements of M
    let mut from_matrix = vec![vec![Polynomial::zero(ambient); a_gens.len() + b_gens.len()]; g0];
    for (j, gen) in a_gens.iter().chain(b_gens.iter()).enumerate() {
        for i in 0..g0 {
            from_matrix[i][j] = gen.component(i).clone();
        }
    }
    let from_sum = FPMap::new(sum, module.clone(), from_matrix)?;
    let cert = DecompositionCertificate {
        summand_a: a,
        summand_b: b,
        to_sum,
        from_sum,
        seed,
    };
    if cert.verify() {
        Ok(Some(cert))
    } else {
        Ok(None)
    }
}

/// Express each column (an element of `module`) in terms of the chosen
/// image generators: a map `module -> image`.
fn map_onto_image_generators(
    module: &FPModule,
    image: &FPModule,
    image_gens: &[ModuleVector],
    columns: &[ModuleVector],
) -> Result<FPMap> {
    let ambient = module.ring().ambient();
    let mut matrix = vec![vec![Polynomial::zero(ambient); columns.len()]; image_gens.len()];
    for (cj, col) in columns.iter().enumerate() {
        let nf = module.element_normal_form(col);
        if nf.is_zero() {
            continue;
        }
        let (q, r) = divide_with_lift(col, image_gens, module)?;
        if !r {
            return Err(AlgebraError::Invalid(
                "image column failed to reduce against its own generators".into(),
            ));
        }
        for (i, qi) in q.into_iter().enumerate() {
            matrix[i][cj] = qi;
        }
    }
    FPMap::new(module.clone(), image.clone(), matrix)
}

/// Divide `v` by the submodule generated by `gens` + module relations,
/// tracking quotients on the `gens` only. Returns the quotients and
/// whether the remainder was zero.
fn divide_with_lift(
    v: &ModuleVector,
    gens: &[ModuleVector],
    module: &FPModule,
) -> Result<(Vec<Polynomial>, bool)> {
    // direct approach: solve by syzygy computation on [v | gens | rels]
    let ring = module.ring().clone();
    let ambient = ring.ambient().clone();
    let shifts = module.generator_degrees().to_vec();
    let mut cols = vec![v.clone()];
    cols.extend(gens.iter().cloned());
    let rels: Vec<ModuleVector> = module
        .presentation()
        .columns()
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    cols.extend(rels.iter().cloned());
    let syz = groebner::syzygy_basis(&cols, &shifts, &ring)?;
    // find a syzygy with unit first coordinate
    for s in syz {
        let c0 = s.component(0);
        if let Some(u) = c0.constant_coefficient() {
            if !u.is_zero() && c0.homogeneous_degree() == Some(0) {
                let inv = ambient.field().inv(u).unwrap();
                let neg_inv = ambient.field().neg(&inv);
                let q: Vec<Polynomial> = (1..=gens.len())
                    .map(|i| ring.reduce(&s.component(i).scalar_mul(&neg_inv)))
                    .collect();
                return Ok((q, true));
            }
        }
    }
    Ok((vec![Polynomial::zero(&ambient); gens.len()], false))
}

/// Search for a nontrivial direct sum decomposition.
///
/// The canonical maximal-ideal module admits two deterministic paths: a
/// depth obstruction (depth >= 2 forces indecomposability) and the fiber
/// detection below. General modules go through idempotents of the
/// degree-zero endomorphism algebra: a deterministic pass over basis
/// elements and their pairwise sums, then randomized combinations.
pub fn decompose(module: &FPModule, trials: u32, seed: u64) -> Result<DecomposeOutcome> {
    let m = module.minimal_presentation();
    if m.is_zero_module() {
        return Err(AlgebraError::ZeroModule);
    }
    let ring = m.ring().clone();
    if module.is_maximal_ideal_module() {
        let d = homalg::ring_depth(&ring)?;
        if d >= 2 {
            return Ok(DecomposeOutcome::ProvedIndecomposable(format!(
                "ring depth {d} >= 2: a decomposable maximal ideal forces depth at most 1"
            )));
        }
        if let Some(split) = detect_fiber_split(&ring) {
            let e = projection_idempotent(&m, &ring, &split)?;
            if let Some(cert) = decomposition_from_idempotent(&m, &e, seed)? {
                return Ok(DecomposeOutcome::Decomposed(Box::new(cert)));
            }
        }
    }
    let end = hom::hom_space(&m, &m)?;
    if end.dimension() <= 1 {
        // End_0 = k: indecomposable in the graded-local sense
        return Ok(DecomposeOutcome::ProvedIndecomposable(
            "degree-zero endomorphism algebra is one-dimensional".into(),
        ));
    }
    let field = *ring.field();
    // deterministic pass: basis elements and pairwise sums
    let mut candidates: Vec<FPMap> = end.basis().to_vec();
    for i in 0..end.dimension() {
        for j in (i + 1)..end.dimension() {
            candidates.push(end.basis()[i].add(&end.basis()[j]));
        }
    }
    for a in &candidates {
        if let Some(e) = idempotent_from(&end, a, &field) {
            if let Some(cert) = decomposition_from_idempotent(&m, &e, seed)? {
                return Ok(DecomposeOutcome::Decomposed(Box::new(cert)));
            }
        }
    }
    // randomized pass
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<Scalar> = (0..end.dimension())
            .map(|_| random_scalar(&field, &mut rng))
            .collect();
        let a = end.combination(&coeffs);
        if let Some(e) = idempotent_from(&end, &a, &field) {
            if let Some(cert) = decomposition_from_idempotent(&m, &e, seed)? {
                return Ok(DecomposeOutcome::Decomposed(Box::new(cert)));
            }
        }
    }
    Ok(DecomposeOutcome::NotFound { seed, trials })
}

/// The idempotent of End(m) projecting onto the left block of a detected
/// variable split: variables in the left block map to themselves, the
/// others to zero.
fn projection_idempotent(
    max_ideal: &FPModule,
    ring: &QuotientRing,
    split: &FiberSplit,
) -> Result<FPMap> {
    let ambient = ring.ambient();
    let live = ring.live_variables();
    let g0 = max_ideal.generator_count();
    if g0 != live.len() {
        return Err(AlgebraError::Invalid(
            "maximal ideal generators do not line up with live variables".into(),
        ));
    }
    let mut matrix = vec![vec![Polynomial::zero(ambient); g0]; g0];
    for (k, var) in live.iter().enumerate() {
        if split.left.contains(var) {
            matrix[k][k] = Polynomial::one(ambient);
        }
    }
    FPMap::new(max_ideal.clone(), max_ideal.clone(), matrix)
}

/// A certified partition of the live variables exhibiting the ring as a
/// fiber product over its residue field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSplit {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Detect a decomposition of the maximal ideal by variable partition:
/// all cross products must lie in the defining ideal, and every reduced
/// Groebner basis element must split into parts that lie in the ideal
/// separately. Ghost variables (bare variables in the ideal) are excluded.
pub fn detect_fiber_split(ring: &QuotientRing) -> Option<FiberSplit> {
    let live = ring.live_variables();
    if live.len() < 2 {
        return None;
    }
    let ambient = ring.ambient();
    let n = live.len();
    // the first live variable always goes left: halves the search and
    // makes the answer canonical
    for raw in 0u32..(1 << (n - 1)) {
        let mask = (raw << 1) | 1;
        let left: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| live[i]).collect();
        let right: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| live[i]).collect();
        if right.is_empty() {
            continue;
        }
        if check_split(ring, ambient, &left, &right) {
            return Some(FiberSplit { left, right });
        }
    }
    None
}

fn check_split(
    ring: &QuotientRing,
    ambient: &AmbientRing,
    left: &[usize],
    right: &[usize],
) -> bool {
    // all cross products vanish
    for i in left {
        for j in right {
            let prod = Polynomial::variable(ambient, *i).mul(&Polynomial::variable(ambient, *j));
            if !ring.is_zero_element(&prod) {
                return false;
            }
        }
    }
    // every GB element splits into pure parts that lie in the ideal
    for g in ring.reduced_gb() {
        let mut left_terms = Vec::new();
        let mut right_terms = Vec::new();
        for (c, m) in g.terms() {
            let has_left = left.iter().any(|v| m.exponents()[*v] > 0);
            let has_right = right.iter().any(|v| m.exponents()[*v] > 0);
            match (has_left, has_right) {
                (true, true) => {} // cross term, in the ideal by the check above
                (true, false) => left_terms.push((c.clone(), m.clone())),
                (false, true) => right_terms.push((c.clone(), m.clone())),
                (false, false) => {
                    // ghost-variable element (bare variable) or a constant
                    // term; pure ghost elements are trivially in the ideal
                    if !m.is_one() {
                        continue;
                    } else {
                        return false;
                    }
                }
            }
        }
        let gl = Polynomial::from_terms(ambient, left_terms);
        let gr = Polynomial::from_terms(ambient, right_terms);
        if !ring.is_zero_element(&gl) || !ring.is_zero_element(&gr) {
            return false;
        }
    }
    true
}

/// Extract certified factor rings from a detected split: candidate factors
/// are rebuilt into a fiber product whose reduced basis must reproduce the
/// original ring exactly.
pub fn certified_fiber_factors(ring: &QuotientRing) -> Option<(QuotientRing, QuotientRing)> {
    let split = detect_fiber_split(ring)?;
    let factor = |vars: &[usize]| -> Option<QuotientRing> {
        let ambient = ring.ambient();
        let names: Vec<String> = vars.iter().map(|v| ambient.variables()[*v].clone()).collect();
        let weights: Vec<u32> = vars.iter().map(|v| ambient.weights()[*v]).collect();
        let sub_ambient = AmbientRing::new(names, weights, *ambient.field()).ok()?;
        // pure generators supported on these variables
        let mut gens = Vec::new();
        for g in ring.reduced_gb() {
            let mut ok = true;
            let mut terms = Vec::new();
            for (c, m) in g.terms() {
                let mut exps = Vec::with_capacity(vars.len());
                let mut pure = true;
                for (u, e) in m.exponents().iter().enumerate() {
                    if let Some(pos) = vars.iter().position(|v| *v == u) {
                        exps.resize(vars.len(), 0);
                        exps[pos] = *e;
                    } else if *e > 0 {
                        pure = false;
                    }
                }
                if !pure {
                    ok = false;
                    break;
                }
                exps.resize(vars.len(), 0);
                terms.push((c.clone(), Monomial::new(exps, sub_ambient.weights())));
            }
            if ok && !terms.is_empty() {
                gens.push(Polynomial::from_terms(&sub_ambient, terms));
            }
        }
        QuotientRing::new(&sub_ambient, gens).ok()
    };
    let s = factor(&split.left)?;
    let t = factor(&split.right)?;
    // certification: rebuild the fiber product inside the original ambient
    let ambient = ring.ambient();
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in ring.reduced_gb() {
        let pure_left = g.terms().iter().all(|(_, m)| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(v, e)| *e == 0 || split.left.contains(&v))
        });
        let pure_right = g.terms().iter().all(|(_, m)| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(v, e)| *e == 0 || split.right.contains(&v))
        });
        let ghost = g.terms().len() == 1
            && g.terms()[0]
                .1
                .exponents()
                .iter()
                .enumerate()
                .all(|(v, e)| *e == 0 || (!split.left.contains(&v) && !split.right.contains(&v)));
        if pure_left || pure_right || ghost {
            gens.push(g.clone());
        } else {
            // mixed element: split it and keep the pure parts
            let mut left_terms = Vec::new();
            let mut right_terms = Vec::new();
            for (c, m) in g.terms() {
                let has_left = split.left.iter().any(|v| m.exponents()[*v] > 0);
                if has_left {
                    left_terms.push((c.clone(), m.clone()));
                } else {
                    right_terms.push((c.clone(), m.clone()));
                }
            }
            gens.push(Polynomial::from_terms(ambient, left_terms));
            gens.push(Polynomial::from_terms(ambient, right_terms));
        }
    }
    for i in &split.left {
        for j in &split.right {
            gens.push(Polynomial::variable(ambient, *i).mul(&Polynomial::variable(ambient, *j)));
        }
    }
    // ghost variables stay in the ideal
    for v in 0..ambient.nvars() {
        if !split.left.contains(&v) && !split.right.contains(&v) {
            gens.push(Polynomial::variable(ambient, v));
        }
    }
    let rebuilt = QuotientRing::new(ambient, gens).ok()?;
    if rebuilt.reduced_gb() == ring.reduced_gb() {
        Some((s, t))
    } else {
        None
    }
}

/// Result of a fiber product construction.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub ring: QuotientRing,
    pub split: FiberSplit,
    pub certificate: DecompositionCertificate,
}

/// Remap a polynomial into a larger ambient ring, matching variables by
/// name.
fn remap(p: &Polynomial, into: &AmbientRing) -> Result<Polynomial> {
    let from = p.ambient();
    let positions: Vec<usize> = from
        .variables()
        .iter()
        .map(|v| {
            into.variable_index(v)
                .ok_or_else(|| AlgebraError::Invalid(format!("variable {v} missing in target")))
        })
        .collect::<Result<Vec<_>>>()?;
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut exps = vec![0u32; into.nvars()];
            for (i, e) in m.exponents().iter().enumerate() {
                exps[positions[i]] = *e;
            }
            (c.clone(), Monomial::new(exps, into.weights()))
        })
        .collect();
    Ok(Polynomial::from_terms(into, terms))
}

/// Construct the fiber product of two quotient presentations over the
/// common residue field: disjoint variable sets, both ideals, and all
/// cross products. A verified decomposition certificate for the maximal
/// ideal is attached.
pub fn fiber_product(s: &QuotientRing, t: &QuotientRing) -> Result<FiberProduct> {
    if s.field() != t.field() {
        return Err(AlgebraError::RingMismatch(
            "fiber product factors over different fields".into(),
        ));
    }
    if s.is_residue_field() || t.is_residue_field() {
        return Err(AlgebraError::TrivialFactor);
    }
    let sa = s.ambient();
    let ta = t.ambient();
    for v in ta.variables() {
        if sa.variable_index(v).is_some() {
            return Err(AlgebraError::Invalid(format!(
                "factor variable sets must be disjoint; both contain {v}"
            )));
        }
    }
    let mut vars: Vec<String> = sa.variables().to_vec();
    vars.extend(ta.variables().iter().cloned());
    let mut weights: Vec<u32> = sa.weights().to_vec();
    weights.extend(ta.weights());
    let combined = AmbientRing::new(vars, weights, *s.field())?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in s.ideal_generators() {
        gens.push(remap(g, &combined)?);
    }
    for g in t.ideal_generators() {
        gens.push(remap(g, &combined)?);
    }
    for i in 0..sa.nvars() {
        for j in 0..ta.nvars() {
            let x = Polynomial::variable(&combined, i);
            let y = Polynomial::variable(&combined, sa.nvars() + j);
            gens.push(x.mul(&y));
        }
    }
    let ring = QuotientRing::new(&combined, gens)?;
    let split = detect_fiber_split(&ring).ok_or_else(|| {
        AlgebraError::Invalid("constructed fiber product failed split detection".into())
    })?;
    let max_ideal = FPModule::maximal_ideal(&ring).minimal_presentation();
    let e = projection_idempotent(&max_ideal, &ring, &split)?;
    let certificate = decomposition_from_idempotent(&max_ideal, &e, 0)?
        .ok_or_else(|| AlgebraError::Invalid("fiber product certificate failed".into()))?;
    Ok(FiberProduct {
        ring,
        split,
        certificate,
    })
}

/// All 2x2 minors of a 2-row matrix of homogeneous polynomials.
pub fn determinantal_ideal_2x2(rows: &[Vec<Polynomial>; 2]) -> Result<Vec<Polynomial>> {
    let m = rows[0].len();
    if rows[1].len() != m {
        return Err(AlgebraError::Shape("rows of different lengths".into()));
    }
    let mut minors = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let minor = rows[0][i]
                .mul(&rows[1][j])
                .sub(&rows[0][j].mul(&rows[1][i]));
            if !minor.is_homogeneous() {
                return Err(AlgebraError::homogeneity(
                    format!("minor of columns {i},{j}"),
                    minor.inhomogeneous_witness().unwrap_or_default(),
                ));
            }
            minors.push(minor);
        }
    }
    Ok(minors)
}

/// Isomorphism test with invariant pre-screen and randomized certificate
/// search, up to the degree twist aligning the lowest generators.
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Certified {
        map: FPMap,
        twist: i64,
        /// exact Hilbert series comparison (standard grading); truncated
        /// comparison up to the default bound otherwise
        exact: bool,
        seed: u64,
    },
    ProvedNo(String),
    NotFound {
        seed: u64,
        trials: u32,
    },
}

impl IsoOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, IsoOutcome::Certified { .. })
    }
    pub fn is_proved_no(&self) -> bool {
        matches!(self, IsoOutcome::ProvedNo(_))
    }
}

pub fn is_isomorphic(m: &FPModule, n: &FPModule, trials: u32, seed: u64) -> Result<IsoOutcome> {
    if !m.ring().compatible(n.ring()) {
        return Err(AlgebraError::RingMismatch("isomorphism test".into()));
    }
    let m = m.minimal_presentation();
    let n = n.minimal_presentation();
    if m.is_zero_module() && n.is_zero_module() {
        return Ok(IsoOutcome::Certified {
            map: FPMap::zero(m, n),
            twist: 0,
            exact: true,
            seed,
        });
    }
    if m.is_zero_module() != n.is_zero_module() {
        return Ok(IsoOutcome::ProvedNo("exactly one side is zero".into()));
    }
    // twist aligning the lowest generator degrees
    let dm = m.minimal_generator_degrees();
    let dn = n.minimal_generator_degrees();
    let twist = dm[0] - dn[0];
    let shifted: Vec<i64> = dn.iter().map(|d| d + twist).collect();
    if dm != shifted {
        return Ok(IsoOutcome::ProvedNo(format!(
            "generator degrees differ: {dm:?} vs {dn:?} (twist {twist})"
        )));
    }
    let n_t = n.twist(twist);
    // graded Betti pre-screen at the first syzygy level
    let rm = crate::resolution::free_resolution(&m, 1)?;
    let rn = crate::resolution::free_resolution(&n_t, 1)?;
    if rm.graded_betti() != rn.graded_betti() {
        return Ok(IsoOutcome::ProvedNo("graded Betti numbers differ".into()));
    }
    // annihilator pre-screen
    let am = groebner::annihilator(&m)?;
    let an = groebner::annihilator(&n)?;
    if am != an {
        return Ok(IsoOutcome::ProvedNo(format!(
            "annihilators differ: ({}) vs ({})",
            am.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
            an.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )));
    }
    // Hilbert comparison
    let exact = m.ring().standard_grading();
    if exact {
        let hm = hilbert::hilbert_numerator(&m)?;
        let hn = hilbert::hilbert_numerator(&n_t)?;
        if hm != hn {
            return Ok(IsoOutcome::ProvedNo("Hilbert series differ".into()));
        }
    } else {
        for d in 0..=hilbert::DEFAULT_DEGREE_BOUND {
            if hilbert::hilbert_function(&m, d) != hilbert::hilbert_function(&n_t, d) {
                return Ok(IsoOutcome::ProvedNo(format!(
                    "Hilbert functions differ in degree {d}"
                )));
            }
        }
    }
    // search for a degree-zero surjection m -> n_t
    let h = hom::hom_space(&m, &n_t)?;
    if h.dimension() == 0 {
        return Ok(IsoOutcome::NotFound { seed, trials });
    }
    let field = *m.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials.max(1) {
        let coeffs: Vec<Scalar> = if trial == 0 {
            (0..h.dimension()).map(|_| field.one()).collect()
        } else {
            (0..h.dimension())
                .map(|_| random_scalar(&field, &mut rng))
                .collect()
        };
        let f = h.combination(&coeffs);
        let scalar = f.generator_matrix_mod_m();
        let det = DenseMatrix::from_rows(field, scalar).determinant();
        if det.is_zero() {
            continue;
        }
        if !f.is_surjective() {
            continue;
        }
        // surjective with equal Hilbert data: bijective
        return Ok(IsoOutcome::Certified {
            map: f,
            twist,
            exact,
            seed,
        });
    }
    Ok(IsoOutcome::NotFound { seed, trials })
}

/// Graded DVR test: embedding dimension one and Krull dimension one.
pub fn is_dvr(ring: &QuotientRing) -> Result<bool> {
    let max_ideal = FPModule::maximal_ideal(ring).minimal_presentation();
    let edim = max_ideal.generator_count();
    if edim != 1 {
        return Ok(false);
    }
    let dim = hilbert::dimension(&FPModule::free(ring, vec![0]))?;
    Ok(dim == 1)
}

/// Minimal multiplicity report: `e(R) >= edim R - dim R + 1` with equality
/// defining minimal multiplicity; only meaningful as stated when the ring
/// is Cohen-Macaulay, so a verification flag is attached.
#[derive(Clone, Debug)]
pub struct MinimalMultiplicityReport {
    pub multiplicity: i128,
    pub edim: usize,
    pub dim: usize,
    pub depth: usize,
    pub holds: bool,
    pub cm_verified: bool,
}

pub fn minimal_multiplicity(ring: &QuotientRing) -> Result<MinimalMultiplicityReport> {
    let free = FPModule::free(ring, vec![0]);
    let rep = hilbert::multiplicity(&free)?;
    let edim = FPModule::maximal_ideal(ring)
        .minimal_presentation()
        .generator_count();
    let depth = homalg::ring_depth(ring)?;
    let holds = rep.multiplicity == (edim as i128 - rep.dimension as i128 + 1);
    Ok(MinimalMultiplicityReport {
        multiplicity: rep.multiplicity,
        edim,
        dim: rep.dimension,
        depth,
        holds,
        cm_verified: depth == rep.dimension,
    })
}

/// Quasi-decomposability: a regular sequence whose quotient has a
/// decomposable maximal ideal.
#[derive(Clone, Debug)]
pub struct QuasiDecomposableReport {
    pub regular: homalg::RegularSequenceOutcome,
    pub quotient_ring: Option<QuotientRing>,
    pub decomposition: Option<DecomposeOutcome>,
    /// the sequence length must equal depth R or depth R - 1
    pub length_constraint_ok: Option<bool>,
    pub ring_depth: usize,
}

pub fn quasi_decomposable(
    ring: &QuotientRing,
    x: &[Polynomial],
    trials: u32,
    seed: u64,
) -> Result<QuasiDecomposableReport> {
    let free = FPModule::free(ring, vec![0]);
    let regular = homalg::is_regular_sequence(x, &free)?;
    let ring_depth = homalg::ring_depth(ring)?;
    if !regular.is_regular() {
        return Ok(QuasiDecomposableReport {
            regular,
            quotient_ring: None,
            decomposition: None,
            length_constraint_ok: None,
            ring_depth,
        });
    }
    let quotient = ring.quotient_by(x)?;
    let max_ideal = FPModule::maximal_ideal(&quotient);
    let decomposition = decompose(&max_ideal, trials, seed)?;
    let len_ok = if decomposition.is_decomposed() {
        Some(x.len() + 1 == ring_depth || x.len() == ring_depth)
    } else {
        None
    };
    Ok(QuasiDecomposableReport {
        regular,
        quotient_ring: Some(quotient),
        decomposition: Some(decomposition),
        length_constraint_ok: len_ok,
        ring_depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn detect_splits_on_fixture_rings() {
        let r1 = ring_xy_mod_xy();
        let s = detect_fiber_split(&r1).unwrap();
        assert_eq!(s.left, vec![0]);
        assert_eq!(s.right, vec![1]);

        let r2 = ring_xyz_mod_xy_xz();
        let s2 = detect_fiber_split(&r2).unwrap();
        assert_eq!(s2.left, vec![0]);
        assert_eq!(s2.right, vec![1, 2]);

        let r3 = ring_xy_mod_x2_xy();
        assert!(detect_fiber_split(&r3).is_some());

        // k[x,y,t]/(xy) is not a fiber product (t is a free direction)
        let r4 = ring_xyt_mod_xy();
        assert!(detect_fiber_split(&r4).is_none());

        // a domain is never a fiber product
        let r5 = ring_weighted_determinantal();
        assert!(detect_fiber_split(&r5).is_none());
    }

    #[test]
    fn fiber_products_of_paper_rings() {
        // k[x] x_k k[y] = k[x,y]/(xy)
        let s = poly_ring(&["x"]);
        let t = poly_ring(&["y"]);
        let fp = fiber_product(&s, &t).unwrap();
        assert_eq!(fp.ring.reduced_gb().len(), 1);
        assert_eq!(fp.ring.reduced_gb()[0].to_string(), "x*y");
        assert!(fp.certificate.verify());

        // k[x] x_k k[y,z] = k[x,y,z]/(xy,xz)
        let t2 = poly_ring(&["y", "z"]);
        let fp2 = fiber_product(&s, &t2).unwrap();
        let gb: Vec<String> = fp2.ring.reduced_gb().iter().map(|g| g.to_string()).collect();
        assert_eq!(gb, vec!["x*y", "x*z"]);

        // k[x]/(x^2) x_k k[y] = k[x,y]/(x^2,xy)
        let s3 = quotient(&["x"], &[1], &["x^2"]);
        let fp3 = fiber_product(&s3, &t).unwrap();
        let gb3: Vec<String> = fp3.ring.reduced_gb().iter().map(|g| g.to_string()).collect();
        assert_eq!(gb3, vec!["x^2", "x*y"]);
    }

    #[test]
    fn trivial_factor_rejected() {
        let s = poly_ring(&["x"]);
        let k = quotient(&["y"], &[1], &["y"]);
        assert!(matches!(
            fiber_product(&s, &k),
            Err(AlgebraError::TrivialFactor)
        ));
    }

    #[test]
    fn decompose_maximal_ideal_of_hypersurface() {
        let r = ring_xy_mod_xy();
        let m = FPModule::maximal_ideal(&r);
        let out = decompose(&m, 16, 7).unwrap();
        match out {
            DecomposeOutcome::Decomposed(cert) => {
                assert!(cert.verify());
                assert_eq!(cert.summand_a.minimal_presentation().generator_count(), 1);
                assert_eq!(cert.summand_b.minimal_presentation().generator_count(), 1);
            }
            other => panic!("expected decomposition, got {other:?}"),
        }
    }

    #[test]
    fn decompose_depth_obstruction() {
        let r = ring_xyt_mod_xy();
        let m = FPModule::maximal_ideal(&r);
        let out = decompose(&m, 4, 7).unwrap();
        assert!(matches!(out, DecomposeOutcome::ProvedIndecomposable(_)));
    }

    #[test]
    fn decompose_ring_itself_is_local() {
        let r = ring_xy_mod_xy();
        let free = FPModule::free(&r, vec![0]);
        let out = decompose(&free, 4, 7).unwrap();
        assert!(matches!(out, DecomposeOutcome::ProvedIndecomposable(_)));
    }

    #[test]
    fn split_trivial_inclusion() {
        let r = ring_xy_mod_xy();
        let free = FPModule::free(&r, vec![0]);
        let m = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        let sum = free.direct_sum(&m).unwrap();
        let out = split_summand(&free, &sum, 8, 11).unwrap();
        assert!(out.is_certified());
    }

    #[test]
    fn split_obstruction_by_generator_count() {
        // m is not a summand of the 2-generator ideal I over k[x,y,z]/(xy,xz)
        let r = ring_xyz_mod_xy_xz();
        let a = r.ambient();
        let m = FPModule::maximal_ideal(&r);
        let i = FPModule::ideal_module(&r, &[parse_poly(a, "y"), parse_poly(a, "z")]).unwrap();
        let out = split_summand(&m, &i, 4, 3).unwrap();
        assert!(out.is_proved_no());
    }

    #[test]
    fn iso_of_syzygy_with_twist() {
        // (x) = R/(y) twisted by 1 over k[x,y]/(xy)
        let r = ring_xy_mod_xy();
        let a = r.ambient();
        let xmod = FPModule::ideal_module(&r, &[parse_poly(a, "x")]).unwrap();
        let ry = FPModule::cyclic(&r, &[parse_poly(a, "y")]).unwrap();
        let out = is_isomorphic(&xmod, &ry, 8, 5).unwrap();
        match out {
            IsoOutcome::Certified { twist, exact, .. } => {
                assert_eq!(twist, 1);
                assert!(exact);
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn iso_distinguishes_branches_by_annihilator() {
        let r = ring_xy_mod_xy();
        let a = r.ambient();
        let rx = FPModule::cyclic(&r, &[parse_poly(a, "x")]).unwrap();
        let ry = FPModule::cyclic(&r, &[parse_poly(a, "y")]).unwrap();
        let out = is_isomorphic(&rx, &ry, 4, 5).unwrap();
        assert!(out.is_proved_no());
    }

    #[test]
    fn dvr_predicate() {
        assert!(is_dvr(&poly_ring(&["x"])).unwrap());
        assert!(!is_dvr(&poly_ring(&["y", "z"])).unwrap());
        assert!(!is_dvr(&quotient(&["x"], &[1], &["x^2"])).unwrap());
    }

    #[test]
    fn minimal_multiplicity_of_hypersurface() {
        let rep = minimal_multiplicity(&ring_xy_mod_xy()).unwrap();
        assert_eq!(rep.multiplicity, 2);
        assert_eq!(rep.edim, 2);
        assert_eq!(rep.dim, 1);
        assert!(rep.holds);
        assert!(rep.cm_verified);
    }

    #[test]
    fn minimal_multiplicity_of_regular_ring() {
        let rep = minimal_multiplicity(&poly_ring(&["x"])).unwrap();
        assert_eq!(rep.multiplicity, 1);
        assert!(rep.holds);
    }

    #[test]
    fn non_equidimensional_flagged() {
        let rep = minimal_multiplicity(&ring_xyz_mod_xy_xz()).unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(rep.edim, 3);
        assert!(!rep.cm_verified);
    }

    #[test]
    fn determinantal_minors() {
        let a = ambient(&["x", "y"], &[1, 1]);
        let rows = [
            vec![parse_poly(&a, "x"), parse_poly(&a, "y")],
            vec![parse_poly(&a, "y"), parse_poly(&a, "x")],
        ];
        let minors = determinantal_ideal_2x2(&rows).unwrap();
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[0].to_string(), "x^2 - y^2");

        // the weighted determinantal presentation
        let aw = ambient(&["x", "y", "z"], &[4, 5, 3]);
        let rows = [
            vec![
                parse_poly(&aw, "x"),
                parse_poly(&aw, "y"),
                parse_poly(&aw, "z"),
            ],
            vec![
                parse_poly(&aw, "y"),
                parse_poly(&aw, "z^2"),
                parse_poly(&aw, "x"),
            ],
        ];
        let minors = determinantal_ideal_2x2(&rows).unwrap();
        assert_eq!(minors.len(), 3);
        for expected in ["x*z^2 - y^2", "x^2 - y*z", "x*y - z^3"] {
            let e = parse_poly(&aw, expected);
            assert!(minors.contains(&e), "missing minor {expected}");
        }

        let rows_diag = [
            vec![parse_poly(&a, "x"), parse_poly(&a, "0")],
            vec![parse_poly(&a, "0"), parse_poly(&a, "y")],
        ];
        let minors = determinantal_ideal_2x2(&rows_diag).unwrap();
        assert_eq!(minors[0].to_string(), "x*y");
    }

    #[test]
    fn quasi_decomposable_fixtures() {
        // k[x,y,t]/(xy) with sequence (t)
        let r4 = ring_xyt_mod_xy();
        let rep = quasi_decomposable(&r4, &[parse_poly(r4.ambient(), "t")], 16, 9).unwrap();
        assert!(rep.regular.is_regular());
        assert!(rep.decomposition.as_ref().unwrap().is_decomposed());
        assert_eq!(rep.length_constraint_ok, Some(true));
        assert_eq!(rep.ring_depth, 2);

        // weighted determinantal ring with sequence (z)
        let r5 = ring_weighted_determinantal();
        let rep5 = quasi_decomposable(&r5, &[parse_poly(r5.ambient(), "z")], 16, 9).unwrap();
        assert!(rep5.regular.is_regular());
        assert!(rep5.decomposition.as_ref().unwrap().is_decomposed());
        // quotient is k[x,y]/(x^2, xy, y^2) structurally
        let q = rep5.quotient_ring.as_ref().unwrap();
        let gb: Vec<String> = q.reduced_gb().iter().map(|g| g.to_string()).collect();
        assert_eq!(gb, vec!["y^2", "x*y", "x^2", "z"]);
    }

    #[test]
    fn non_regular_sequence_witnessed() {
        let r = ring_xy_mod_xy();
        let rep = quasi_decomposable(&r, &[parse_poly(r.ambient(), "x")], 4, 9).unwrap();
        assert!(!rep.regular.is_regular());
        assert!(rep.decomposition.is_none());
    }
}
