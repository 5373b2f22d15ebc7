//! Finitely presented graded modules: minimal presentations, direct sums,
//! subquotient presentations, homology of two composable maps, and the
//! Auslander transpose.

use crate::error::{AlgebraError, Result};
use crate::freemod::{FreeModule, ModuleMap};
use crate::groebner::{self, GroebnerBasis};
use crate::poly::Polynomial;
use crate::ring::QuotientRing;
use crate::vector::ModuleVector;
use std::sync::{Arc, Mutex, OnceLock};

/// Cached minimal free resolution data: differentials `d_1, d_2, ...` with
/// `d_1` the minimal presentation map. Grows monotonically; `complete`
/// marks that the last computed syzygy module was zero.
#[derive(Debug, Default)]
pub(crate) struct ResolutionCache {
    pub differentials: Vec<ModuleMap>,
    pub complete: bool,
}

/// Module presented as the cokernel of a degree-zero map of graded free
/// modules. Immutable; clones share the lazily computed caches.
#[derive(Clone, Debug)]
pub struct FPModule {
    presentation: ModuleMap,
    minimal_flag: bool,
    is_maximal_ideal: bool,
    relations_gb: Arc<OnceLock<GroebnerBasis>>,
    pub(crate) resolution: Arc<Mutex<ResolutionCache>>,
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        self.presentation == other.presentation
    }
}
impl Eq for FPModule {}

impl FPModule {
    pub fn from_presentation(presentation: ModuleMap) -> FPModule {
        FPModule {
            presentation,
            minimal_flag: false,
            is_maximal_ideal: false,
            relations_gb: Arc::new(OnceLock::new()),
            resolution: Arc::new(Mutex::new(ResolutionCache::default())),
        }
    }

    /// Free module of the given shifts, presented with no relations.
    pub fn free(ring: &QuotientRing, shifts: Vec<i64>) -> FPModule {
        let target = FreeModule::new(ring, shifts);
        let source = FreeModule::new(ring, Vec::new());
        let map = ModuleMap::zero(source, target);
        let mut m = FPModule::from_presentation(map);
        m.minimal_flag = true;
        m
    }

    pub fn zero(ring: &QuotientRing) -> FPModule {
        FPModule::free(ring, Vec::new())
    }

    /// `R/I` for the homogeneous ideal spanned by `gens`.
    pub fn cyclic(ring: &QuotientRing, gens: &[Polynomial]) -> Result<FPModule> {
        let mut cols = Vec::new();
        let mut shifts = Vec::new();
        for g in gens {
            let r = ring.reduce(g);
            if r.is_zero() {
                continue;
            }
            let d = r.homogeneous_degree().ok_or_else(|| {
                AlgebraError::homogeneity(
                    format!("cyclic module relation {g}"),
                    g.inhomogeneous_witness().unwrap_or_default(),
                )
            })?;
            cols.push(r);
            shifts.push(d as i64);
        }
        let target = FreeModule::new(ring, vec![0]);
        let source = FreeModule::new(ring, shifts);
        let matrix = vec![cols];
        Ok(FPModule::from_presentation(ModuleMap::new(source, target, matrix)?))
    }

    /// A homogeneous ideal viewed as a module: generators are the given
    /// elements, relations are their syzygies.
    pub fn ideal_module(ring: &QuotientRing, gens: &[Polynomial]) -> Result<FPModule> {
        let reduced: Vec<Polynomial> = gens
            .iter()
            .map(|g| ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        if reduced.is_empty() {
            return Ok(FPModule::zero(ring));
        }
        let columns: Vec<ModuleVector> = reduced
            .iter()
            .map(|g| ModuleVector::new(vec![g.clone()]))
            .collect();
        submodule_presentation(&columns, &[0], ring)
    }

    /// The maximal ideal as a module, generated by the live variables.
    pub fn maximal_ideal(ring: &QuotientRing) -> FPModule {
        let gens = ring.maximal_ideal_generators();
        let mut m = FPModule::ideal_module(ring, &gens).expect("variables are homogeneous");
        m.is_maximal_ideal = true;
        m
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: &QuotientRing) -> FPModule {
        FPModule::cyclic(ring, &ring.maximal_ideal_generators()).expect("variables homogeneous")
    }

    pub fn presentation(&self) -> &ModuleMap {
        &self.presentation
    }

    pub fn ring(&self) -> &QuotientRing {
        self.presentation.ring()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal_flag
    }

    pub fn is_maximal_ideal_module(&self) -> bool {
        self.is_maximal_ideal
    }

    pub(crate) fn mark_minimal(&mut self) {
        self.minimal_flag = true;
    }

    /// Number of generators in this presentation (= nu(M) when minimal).
    pub fn generator_count(&self) -> usize {
        self.presentation.target().rank()
    }

    pub fn generator_degrees(&self) -> &[i64] {
        self.presentation.target().shifts()
    }

    pub fn relation_count(&self) -> usize {
        self.presentation.source().rank()
    }

    /// Groebner basis of the relation submodule inside the generator free
    /// module (defining ideal adjoined); cached.
    pub fn relations_gb(&self) -> &GroebnerBasis {
        self.relations_gb.get_or_init(|| {
            let cols = self.presentation.columns();
            let nonzero: Vec<ModuleVector> = cols.into_iter().filter(|c| !c.is_zero()).collect();
            groebner::buchberger(
                &nonzero,
                Some(self.presentation.target().shifts()),
                self.ring(),
            )
            .expect("presentation columns are homogeneous")
        })
    }

    /// Is the class of `v` zero in the module?
    pub fn element_is_zero(&self, v: &ModuleVector) -> bool {
        groebner::is_member(v, self.relations_gb())
    }

    pub fn element_normal_form(&self, v: &ModuleVector) -> ModuleVector {
        groebner::normal_form(v, self.relations_gb()).expect("rank checked by caller")
    }

    pub fn is_zero_module(&self) -> bool {
        let ambient = self.ring().ambient();
        (0..self.generator_count()).all(|i| {
            let e = ModuleVector::unit(ambient, self.generator_count(), i);
            self.element_is_zero(&e)
        })
    }

    /// Shift all degrees by `t` (generator degrees increase by `t`).
    pub fn twist(&self, t: i64) -> FPModule {
        let p = &self.presentation;
        let map = ModuleMap::new(
            p.source().twist(t),
            p.target().twist(t),
            p.matrix().to_vec(),
        )
        .expect("twist preserves homogeneity");
        let mut m = FPModule::from_presentation(map);
        m.minimal_flag = self.minimal_flag;
        m
    }

    /// Minimal presentation: prune unit entries by pivoting, drop zero and
    /// redundant relation columns. The result presents an isomorphic module
    /// with every matrix entry in the maximal ideal and a minimal relation
    /// set; idempotent.
    pub fn minimal_presentation(&self) -> FPModule {
        if self.minimal_flag {
            return self.clone();
        }
        let ring = self.ring().clone();
        let ambient = ring.ambient().clone();
        let field = *ambient.field();

        let mut tgt_shifts = self.presentation.target().shifts().to_vec();
        let mut src_shifts = self.presentation.source().shifts().to_vec();
        let mut matrix: Vec<Vec<Polynomial>> = self
            .presentation
            .matrix()
            .iter()
            .map(|row| row.iter().map(|e| ring.reduce(e)).collect())
            .collect();

        // pivot away unit entries
        loop {
            let mut unit_pos = None;
            'scan: for (i, row) in matrix.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if !e.is_zero() && e.homogeneous_degree() == Some(0) {
                        unit_pos = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((pi, pj)) = unit_pos else { break };
            let pivot = matrix[pi][pj].clone();
            let pivot_c = pivot.constant_coefficient().unwrap().clone();
            let inv = field.inv(&pivot_c).unwrap();
            // clear the pivot row across other columns
            for j in 0..src_shifts.len() {
                if j == pj || matrix[pi][j].is_zero() {
                    continue;
                }
                let f = matrix[pi][j].scalar_mul(&inv);
                for i in 0..tgt_shifts.len() {
                    let t = matrix[i][pj].mul(&f);
                    matrix[i][j] = ring.reduce(&matrix[i][j].sub(&t));
                }
            }
            // clear the pivot column across other rows (row operations
            // change the generator basis; entries stay homogeneous)
            for i in 0..tgt_shifts.len() {
                if i == pi || matrix[i][pj].is_zero() {
                    continue;
                }
                let f = matrix[i][pj].scalar_mul(&inv);
                for j in 0..src_shifts.len() {
                    let t = f.mul(&matrix[pi][j]);
                    matrix[i][j] = ring.reduce(&matrix[i][j].sub(&t));
                }
            }
            // delete pivot row and column
            matrix.remove(pi);
            tgt_shifts.remove(pi);
            for row in &mut matrix {
                row.remove(pj);
            }
            src_shifts.remove(pj);
        }

        // drop zero columns
        let mut keep_cols: Vec<usize> = Vec::new();
        for j in 0..src_shifts.len() {
            if matrix.iter().any(|row| !row[j].is_zero()) {
                keep_cols.push(j);
            }
        }
        let mut cols: Vec<(i64, ModuleVector)> = keep_cols
            .iter()
            .map(|&j| {
                (
                    src_shifts[j],
                    ModuleVector::new(matrix.iter().map(|row| row[j].clone()).collect()),
                )
            })
            .collect();

        // autoreduce the relation set: a homogeneous generator lying in the
        // span of the others is redundant
        cols.sort_by(|a, b| a.0.cmp(&b.0));
        loop {
            let mut removed = false;
            for idx in 0..cols.len() {
                let others: Vec<ModuleVector> = cols
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != idx)
                    .map(|(_, (_, v))| v.clone())
                    .collect();
                let gb = groebner::buchberger(&others, Some(&tgt_shifts), &ring)
                    .expect("homogeneous columns");
                if groebner::is_member(&cols[idx].1, &gb) {
                    cols.remove(idx);
                    removed = true;
                    break;
                }
            }
            if !removed {
                break;
            }
        }

        let new_src_shifts: Vec<i64> = cols.iter().map(|(d, _)| *d).collect();
        let new_matrix: Vec<Vec<Polynomial>> = (0..tgt_shifts.len())
            .map(|i| cols.iter().map(|(_, v)| v.component(i).clone()).collect())
            .collect();
        let map = ModuleMap::new(
            FreeModule::new(&ring, new_src_shifts),
            FreeModule::new(&ring, tgt_shifts),
            new_matrix,
        )
        .expect("minimalization preserves homogeneity");
        let mut out = FPModule::from_presentation(map);
        out.minimal_flag = true;
        out.is_maximal_ideal = self.is_maximal_ideal;
        out
    }

    /// Minimal number of generators.
    pub fn nu(&self) -> usize {
        if self.minimal_flag {
            self.generator_count()
        } else {
            self.minimal_presentation().generator_count()
        }
    }

    /// Degrees of a minimal generating set, ascending.
    pub fn minimal_generator_degrees(&self) -> Vec<i64> {
        let m = if self.minimal_flag {
            self.clone()
        } else {
            self.minimal_presentation()
        };
        let mut d = m.generator_degrees().to_vec();
        d.sort();
        d
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        if !self.ring().compatible(other.ring()) {
            return Err(AlgebraError::RingMismatch("direct sum".into()));
        }
        let ring = self.ring();
        let ambient = ring.ambient();
        let mut tgt = self.presentation.target().shifts().to_vec();
        tgt.extend(other.presentation.target().shifts());
        let mut src = self.presentation.source().shifts().to_vec();
        src.extend(other.presentation.source().shifts());
        let (r1, c1) = (self.generator_count(), self.relation_count());
        let (r2, c2) = (other.generator_count(), other.relation_count());
        let mut matrix = vec![vec![Polynomial::zero(ambient); c1 + c2]; r1 + r2];
        for i in 0..r1 {
            for j in 0..c1 {
                matrix[i][j] = self.presentation.entry(i, j).clone();
            }
        }
        for i in 0..r2 {
            for j in 0..c2 {
                matrix[r1 + i][c1 + j] = other.presentation.entry(i, j).clone();
            }
        }
        let map = ModuleMap::new(
            FreeModule::new(ring, src),
            FreeModule::new(ring, tgt),
            matrix,
        )?;
        Ok(FPModule::from_presentation(map))
    }

    /// Auslander transpose: cokernel of the dualized minimal presentation.
    pub fn auslander_transpose(&self) -> FPModule {
        let m = if self.minimal_flag {
            self.clone()
        } else {
            self.minimal_presentation()
        };
        FPModule::from_presentation(m.presentation.transpose())
    }

    /// Quotient `M / (elements) M` by homogeneous ring elements.
    pub fn quotient_by_elements(&self, elements: &[Polynomial]) -> Result<FPModule> {
        let ring = self.ring().clone();
        let ambient = ring.ambient();
        let tgt = self.presentation.target().clone();
        let mut src_shifts = self.presentation.source().shifts().to_vec();
        let mut matrix: Vec<Vec<Polynomial>> = self.presentation.matrix().to_vec();
        for x in elements {
            let d = x.homogeneous_degree().ok_or_else(|| {
                AlgebraError::homogeneity(format!("quotient element {x}"), String::new())
            })? as i64;
            for i in 0..tgt.rank() {
                src_shifts.push(tgt.shifts()[i] + d);
                for (r, row) in matrix.iter_mut().enumerate() {
                    row.push(if r == i { x.clone() } else { Polynomial::zero(ambient) });
                }
            }
        }
        let map = ModuleMap::new(FreeModule::new(&ring, src_shifts), tgt, matrix)?;
        Ok(FPModule::from_presentation(map))
    }

    /// View an `R`-module killed by the extra relations of `sub` as a
    /// module over the further quotient `sub`: same presentation read over
    /// the smaller ring (relations of the new defining ideal are implicit).
    pub fn base_change_to(&self, sub: &QuotientRing) -> Result<FPModule> {
        if !sub.ambient().compatible(self.ring().ambient()) {
            return Err(AlgebraError::RingMismatch("base change".into()));
        }
        let tgt = FreeModule::new(sub, self.presentation.target().shifts().to_vec());
        let src = FreeModule::new(sub, self.presentation.source().shifts().to_vec());
        let matrix: Vec<Vec<Polynomial>> = self
            .presentation
            .matrix()
            .iter()
            .map(|row| row.iter().map(|e| sub.reduce(e)).collect())
            .collect();
        Ok(FPModule::from_presentation(ModuleMap::new(src, tgt, matrix)?))
    }

    /// Pull a module over a further quotient `R/(extra)` back to `R`: the
    /// generators and relations are kept and the extra defining relations
    /// become explicit relation columns.
    pub fn pull_back_to(&self, big: &QuotientRing) -> Result<FPModule> {
        if !big.ambient().compatible(self.ring().ambient()) {
            return Err(AlgebraError::RingMismatch("pull back".into()));
        }
        // relations of the small ring not already in the big ring
        let small = self.ring();
        let extra: Vec<Polynomial> = small
            .reduced_gb()
            .iter()
            .filter(|g| !big.is_zero_element(g))
            .cloned()
            .collect();
        let tgt = FreeModule::new(big, self.presentation.target().shifts().to_vec());
        let src = FreeModule::new(big, self.presentation.source().shifts().to_vec());
        let matrix: Vec<Vec<Polynomial>> = self.presentation.matrix().to_vec();
        let base = FPModule::from_presentation(ModuleMap::new(src, tgt, matrix)?);
        base.quotient_by_elements(&extra)
    }
}

/// Present the submodule of a free module (with the given shifts) spanned
/// by homogeneous column vectors: generators are the columns, relations
/// their syzygies over the quotient ring.
pub fn submodule_presentation(
    columns: &[ModuleVector],
    ambient_shifts: &[i64],
    ring: &QuotientRing,
) -> Result<FPModule> {
    let nonzero: Vec<ModuleVector> = columns
        .iter()
        .map(|c| {
            ModuleVector::new(c.components().iter().map(|p| ring.reduce(p)).collect())
        })
        .filter(|c| !c.is_zero())
        .collect();
    if nonzero.is_empty() {
        return Ok(FPModule::zero(ring));
    }
    let mut gen_degrees = Vec::with_capacity(nonzero.len());
    for c in &nonzero {
        gen_degrees.push(c.homogeneous_degree(ambient_shifts).ok_or_else(|| {
            AlgebraError::homogeneity(format!("submodule generator {c}"), String::new())
        })?);
    }
    let syz = groebner::syzygy_basis(&nonzero, ambient_shifts, ring)?;
    let ambient = ring.ambient();
    let mut rel_degrees = Vec::with_capacity(syz.len());
    for s in &syz {
        rel_degrees.push(s.homogeneous_degree(&gen_degrees).unwrap_or(0));
    }
    let matrix: Vec<Vec<Polynomial>> = (0..nonzero.len())
        .map(|i| syz.iter().map(|s| s.component(i).clone()).collect())
        .collect();
    let map = ModuleMap::new(
        FreeModule::new(ring, rel_degrees),
        FreeModule::new(ring, gen_degrees),
        if syz.is_empty() {
            vec![Vec::new(); nonzero.len()]
        } else {
            matrix
        },
    )?;
    let _ = ambient;
    Ok(FPModule::from_presentation(map))
}

/// A map between finitely presented modules, given on generators. Entries
/// may be inhomogeneous (sums of homogeneous components of different
/// degrees); individual homogeneous maps arise as the common case.
#[derive(Clone, Debug)]
pub struct FPMap {
    source: FPModule,
    target: FPModule,
    matrix: Vec<Vec<Polynomial>>,
}

impl FPMap {
    pub fn new(source: FPModule, target: FPModule, matrix: Vec<Vec<Polynomial>>) -> Result<FPMap> {
        if matrix.len() != target.generator_count()
            || matrix.iter().any(|r| r.len() != source.generator_count())
        {
            return Err(AlgebraError::Shape(format!(
                "map matrix {}x{} between modules with {} and {} generators",
                matrix.len(),
                matrix.first().map(|r| r.len()).unwrap_or(0),
                target.generator_count(),
                source.generator_count()
            )));
        }
        Ok(FPMap {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: FPModule, target: FPModule) -> FPMap {
        let ambient = source.ring().ambient().clone();
        let matrix = (0..target.generator_count())
            .map(|_| {
                (0..source.generator_count())
                    .map(|_| Polynomial::zero(&ambient))
                    .collect()
            })
            .collect();
        FPMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(module: &FPModule) -> FPMap {
        let ambient = module.ring().ambient().clone();
        let n = module.generator_count();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(&ambient)
                        } else {
                            Polynomial::zero(&ambient)
                        }
                    })
                    .collect()
            })
            .collect();
        FPMap {
            source: module.clone(),
            target: module.clone(),
            matrix,
        }
    }

    /// Multiplication by a ring element as an endomorphism-with-twist:
    /// source is `M` twisted so the map has degree zero.
    pub fn multiplication(module: &FPModule, x: &Polynomial) -> Result<FPMap> {
        let d = if x.is_zero() {
            0
        } else {
            x.homogeneous_degree().ok_or_else(|| {
                AlgebraError::homogeneity(format!("multiplier {x}"), String::new())
            })? as i64
        };
        let source = module.twist(d);
        let n = module.generator_count();
        let ambient = module.ring().ambient();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            x.clone()
                        } else {
                            Polynomial::zero(ambient)
                        }
                    })
                    .collect()
            })
            .collect();
        FPMap::new(source, module.clone(), matrix)
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> ModuleVector {
        ModuleVector::new(self.matrix.iter().map(|r| r[j].clone()).collect())
    }

    pub fn columns(&self) -> Vec<ModuleVector> {
        (0..self.source.generator_count()).map(|j| self.column(j)).collect()
    }

    /// The map is well defined when it carries every relation of the source
    /// into the relation submodule of the target.
    pub fn is_well_defined(&self) -> bool {
        let gb = self.target.relations_gb();
        for rel in self.source.presentation().columns() {
            let image = self.apply_to_coordinates(&rel);
            if !groebner::is_member(&image, gb) {
                return false;
            }
        }
        true
    }

    /// Apply the generator matrix to a coordinate vector (an element of the
    /// source's generator free module).
    pub fn apply_to_coordinates(&self, v: &ModuleVector) -> ModuleVector {
        let ambient = self.source.ring().ambient();
        let mut out = ModuleVector::zero(ambient, self.target.generator_count());
        for (j, p) in v.components().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            out = out.add(&self.column(j).poly_mul(p));
        }
        out
    }

    pub fn compose(&self, first: &FPMap) -> Result<FPMap> {
        if first.target.generator_count() != self.source.generator_count() {
            return Err(AlgebraError::Shape("composition mismatch".into()));
        }
        let ambient = self.source.ring().ambient();
        let rows = self.target.generator_count();
        let cols = first.source.generator_count();
        let mid = self.source.generator_count();
        let ring = self.source.ring().clone();
        let mut matrix = vec![vec![Polynomial::zero(ambient); cols]; rows];
        #[allow(clippy::needless_range_loop)]
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = Polynomial::zero(ambient);
                for l in 0..mid {
                    acc = acc.add(&self.matrix[i][l].mul(&first.matrix[l][j]));
                }
                matrix[i][j] = ring.reduce(&acc);
            }
        }
        FPMap::new(first.source.clone(), self.target.clone(), matrix)
    }

    pub fn add(&self, other: &FPMap) -> FPMap {
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.add(b)).collect())
            .collect();
        FPMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
        }
    }

    pub fn scale(&self, c: &crate::scalar::Scalar) -> FPMap {
        FPMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|e| e.scalar_mul(c)).collect())
                .collect(),
        }
    }

    /// Zero as a map (all columns land in the target's relations).
    pub fn is_zero_map(&self) -> bool {
        let gb = self.target.relations_gb();
        self.columns().iter().all(|c| groebner::is_member(c, gb))
    }

    /// Groebner certificate that the cokernel vanishes: every target
    /// generator lies in the span of the image columns and the relations.
    pub fn is_surjective(&self) -> bool {
        let ring = self.source.ring();
        let ambient = ring.ambient();
        let tshifts = self.target.generator_degrees();
        let mut cols = self.columns();
        cols.retain(|c| !c.is_zero());
        cols.extend(self.target.presentation().columns());
        cols.retain(|c| !c.is_zero());
        // mixed-degree columns are legal here: split into homogeneous parts
        let mut parts: Vec<ModuleVector> = Vec::new();
        for c in cols {
            parts.extend(homogeneous_parts(&c, tshifts, ambient));
        }
        let gb = match groebner::buchberger(&parts, Some(tshifts), ring) {
            Ok(gb) => gb,
            Err(_) => return false,
        };
        (0..self.target.generator_count()).all(|i| {
            let e = ModuleVector::unit(ambient, self.target.generator_count(), i);
            groebner::is_member(&e, &gb)
        })
    }

    /// The induced scalar matrix on `M/mM` (only meaningful when both
    /// endpoints are minimally presented): degree-zero coefficients of the
    /// reduced entries.
    pub fn generator_matrix_mod_m(&self) -> Vec<Vec<crate::scalar::Scalar>> {
        let ring = self.source.ring();
        let field = *ring.field();
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        ring.reduce(e)
                            .constant_coefficient()
                            .cloned()
                            .unwrap_or_else(|| field.zero())
                    })
                    .collect()
            })
            .collect()
    }
}

/// Split a possibly inhomogeneous vector into its homogeneous parts with
/// respect to the given shifts.
pub fn homogeneous_parts(
    v: &ModuleVector,
    shifts: &[i64],
    ambient: &crate::ring::AmbientRing,
) -> Vec<ModuleVector> {
    use std::collections::BTreeMap;
    let mut by_degree: BTreeMap<i64, Vec<Vec<(crate::scalar::Scalar, crate::monomial::Monomial)>>> =
        BTreeMap::new();
    for (i, p) in v.components().iter().enumerate() {
        for (c, m) in p.terms() {
            let d = m.weighted_degree() as i64 + shifts[i];
            let entry = by_degree
                .entry(d)
                .or_insert_with(|| vec![Vec::new(); v.rank()]);
            entry[i].push((c.clone(), m.clone()));
        }
    }
    by_degree
        .into_values()
        .map(|comps| {
            ModuleVector::new(
                comps
                    .into_iter()
                    .map(|terms| Polynomial::from_terms(ambient, terms))
                    .collect(),
            )
        })
        .collect()
}

/// Presentation of the homology `ker(d_out) / im(d_in)` at the middle of
/// `X --d_in--> Y --d_out--> Z`. Degenerate ends (kernel, cokernel) are the
/// zero-map special cases.
pub fn homology(d_in: &FPMap, d_out: &FPMap) -> Result<FPModule> {
    let (module, _) = homology_with_generators(d_in, d_out)?;
    Ok(module)
}

/// Homology together with the chosen generators expressed as coordinate
/// vectors in the generator free module of the middle term.
pub fn homology_with_generators(
    d_in: &FPMap,
    d_out: &FPMap,
) -> Result<(FPModule, Vec<ModuleVector>)> {
    let y = d_in.target();
    if d_out.source().generator_count() != y.generator_count() {
        return Err(AlgebraError::Shape(
            "homology maps are not composable".into(),
        ));
    }
    let composite = d_out.compose(d_in)?;
    if !composite.is_zero_map() {
        return Err(AlgebraError::NotAComplex("the middle term".into()));
    }
    let ring = y.ring().clone();
    let ambient = ring.ambient();
    let y_shifts = y.generator_degrees().to_vec();

    // generators of U = preimage in the generator free module of ker(d_out)
    let u_gens: Vec<ModuleVector> = if d_out.target().generator_count() == 0
        || d_out.is_zero_map()
    {
        (0..y.generator_count())
            .map(|i| ModuleVector::unit(ambient, y.generator_count(), i))
            .collect()
    } else {
        let z = d_out.target();
        let z_shifts = z.generator_degrees().to_vec();
        // keep the d_out columns in place (even zero ones) so the head
        // block of each syzygy stays aligned with Y's generators
        let mut cols: Vec<ModuleVector> = d_out.columns();
        cols.extend(z.presentation().columns().into_iter().filter(|c| !c.is_zero()));
        let syz = groebner::syzygy_basis(&cols, &z_shifts, &ring)?;
        let mut gens = Vec::new();
        for s in syz {
            let headv = ModuleVector::new(
                s.components()[..y.generator_count()]
                    .iter()
                    .cloned()
                    .collect(),
            );
            if !headv.is_zero() {
                gens.push(headv);
            }
        }
        gens
    };

    if u_gens.is_empty() {
        return Ok((FPModule::zero(&ring), Vec::new()));
    }

    let u_degrees: Vec<i64> = u_gens
        .iter()
        .map(|g| g.homogeneous_degree(&y_shifts).unwrap_or(0))
        .collect();

    // relations: combinations of the U-generators landing in
    // im(d_in) + relations(Y)
    let mut denom: Vec<ModuleVector> = u_gens.clone();
    let n_u = denom.len();
    denom.extend(d_in.columns().into_iter().filter(|c| !c.is_zero()));
    denom.extend(
        y.presentation()
            .columns()
            .into_iter()
            .filter(|c| !c.is_zero()),
    );
    let syz = groebner::syzygy_basis(&denom, &y_shifts, &ring)?;
    let mut rel_cols: Vec<ModuleVector> = Vec::new();
    for s in syz {
        let headv = ModuleVector::new(s.components()[..n_u].to_vec());
        if !headv.is_zero() {
            rel_cols.push(headv);
        }
    }
    let rel_degrees: Vec<i64> = rel_cols
        .iter()
        .map(|r| r.homogeneous_degree(&u_degrees).unwrap_or(0))
        .collect();
    let matrix: Vec<Vec<Polynomial>> = (0..n_u)
        .map(|i| rel_cols.iter().map(|r| r.component(i).clone()).collect())
        .collect();
    let map = ModuleMap::new(
        FreeModule::new(&ring, rel_degrees),
        FreeModule::new(&ring, u_degrees),
        if rel_cols.is_empty() {
            vec![Vec::new(); n_u]
        } else {
            matrix
        },
    )?;
    Ok((FPModule::from_presentation(map), u_gens))
}

/// Kernel of a map, with generator witnesses in the source coordinates.
pub fn kernel_with_generators(f: &FPMap) -> Result<(FPModule, Vec<ModuleVector>)> {
    let zero_in = FPMap::zero(FPModule::zero(f.source().ring()), f.source().clone());
    homology_with_generators(&zero_in, f)
}

/// Cokernel of a map: the target with the image columns as extra relations.
pub fn cokernel(f: &FPMap) -> Result<FPModule> {
    let ring = f.source().ring().clone();
    let ambient = ring.ambient();
    let tgt = f.target().presentation().target().clone();
    let mut src_shifts = f.target().presentation().source().shifts().to_vec();
    let mut matrix: Vec<Vec<Polynomial>> = f.target().presentation().matrix().to_vec();
    let tshifts = f.target().generator_degrees().to_vec();
    for col in f.columns() {
        if col.is_zero() {
            continue;
        }
        for part in homogeneous_parts(&col, &tshifts, ambient) {
            let d = part.homogeneous_degree(&tshifts).unwrap_or(0);
            src_shifts.push(d);
            for (i, row) in matrix.iter_mut().enumerate() {
                row.push(part.component(i).clone());
            }
        }
    }
    let map = ModuleMap::new(FreeModule::new(&ring, src_shifts), tgt, matrix)?;
    Ok(FPModule::from_presentation(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn unit_pruning() {
        // coker((1,0),(0,x)) = coker(x)
        let r = poly_ring(&["x"]);
        let a = r.ambient();
        let tgt = FreeModule::new(&r, vec![0, 0]);
        let src = FreeModule::new(&r, vec![0, 1]);
        let matrix = vec![
            vec![parse_poly(a, "1"), parse_poly(a, "0")],
            vec![parse_poly(a, "0"), parse_poly(a, "x")],
        ];
        let m = FPModule::from_presentation(ModuleMap::new(src, tgt, matrix).unwrap());
        let min = m.minimal_presentation();
        assert_eq!(min.generator_count(), 1);
        assert_eq!(min.relation_count(), 1);
        assert_eq!(min.presentation().entry(0, 0).to_string(), "x");
        // idempotent
        let again = min.minimal_presentation();
        assert_eq!(again.generator_count(), 1);
    }

    #[test]
    fn coker_identity_is_zero() {
        let r = poly_ring(&["x"]);
        let a = r.ambient();
        let tgt = FreeModule::new(&r, vec![0, 0]);
        let src = FreeModule::new(&r, vec![0, 0]);
        let matrix = vec![
            vec![parse_poly(a, "1"), parse_poly(a, "0")],
            vec![parse_poly(a, "0"), parse_poly(a, "1")],
        ];
        let m = FPModule::from_presentation(ModuleMap::new(src, tgt, matrix).unwrap());
        let min = m.minimal_presentation();
        assert_eq!(min.generator_count(), 0);
        assert!(m.is_zero_module());
    }

    #[test]
    fn maximal_ideal_over_hypersurface() {
        // m over k[x,y]/(xy): presentation diag(y, x), nu = 2
        let r = ring_xy_mod_xy();
        let m = FPModule::maximal_ideal(&r).minimal_presentation();
        assert_eq!(m.generator_count(), 2);
        assert_eq!(m.relation_count(), 2);
        let mat = m.presentation().matrix();
        let entries: Vec<String> = mat.iter().flatten().map(|e| e.to_string()).collect();
        let mut nonzero: Vec<String> = entries.iter().filter(|e| *e != "0").cloned().collect();
        nonzero.sort();
        assert_eq!(nonzero, vec!["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn direct_sum_with_zero() {
        let r = ring_xy_mod_xy();
        let a = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        let z = FPModule::zero(&r);
        let s = a.direct_sum(&z).unwrap();
        assert_eq!(s.minimal_presentation().generator_count(), 1);
    }

    #[test]
    fn transpose_of_free_is_zero() {
        let r = ring_xy_mod_xy();
        let f = FPModule::free(&r, vec![0, -1]);
        let t = f.auslander_transpose();
        assert!(t.is_zero_module());
    }

    #[test]
    fn homology_of_zero_maps_returns_module() {
        let r = ring_xy_mod_xy();
        let n = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        let zin = FPMap::zero(FPModule::zero(&r), n.clone());
        let zout = FPMap::zero(n.clone(), FPModule::zero(&r));
        let h = homology(&zin, &zout).unwrap().minimal_presentation();
        // H = N itself
        assert_eq!(h.generator_count(), 1);
        assert_eq!(h.presentation().entry(0, 0).to_string(), "x");
    }

    #[test]
    fn exactness_of_alternating_resolution_spot() {
        // R --x--> R --y--> R over k[x,y]/(xy) is exact in the middle
        let r = ring_xy_mod_xy();
        let a = r.ambient();
        let rf0 = FPModule::free(&r, vec![0]);
        let rf1 = FPModule::free(&r, vec![1]);
        let rf2 = FPModule::free(&r, vec![2]);
        let dx = FPMap::new(rf2, rf1.clone(), vec![vec![parse_poly(a, "x")]]).unwrap();
        let dy = FPMap::new(rf1, rf0, vec![vec![parse_poly(a, "y")]]).unwrap();
        let h = homology(&dx, &dy).unwrap();
        assert!(h.is_zero_module());
    }

    #[test]
    fn kernel_of_multiplication() {
        // ker of x on R/(x^2, xy) over k[x,y]/(x^2,xy) is ann(x) = m
        let r = ring_xy_mod_x2_xy();
        let rr = FPModule::free(&r, vec![0]);
        let mul = FPMap::multiplication(&rr, &parse_poly(r.ambient(), "x")).unwrap();
        let (k, _) = kernel_with_generators(&mul).unwrap();
        let k = k.minimal_presentation();
        assert_eq!(k.generator_count(), 2);
    }
}
