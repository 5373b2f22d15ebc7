//! Graded free modules and degree-zero maps between them.

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::ring::QuotientRing;
use crate::vector::ModuleVector;

/// Finitely generated graded free module `R(-s_1) + ... + R(-s_r)`; the
/// shift of a coordinate is the degree of its generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: QuotientRing,
    shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &QuotientRing, shifts: Vec<i64>) -> FreeModule {
        FreeModule {
            ring: ring.clone(),
            shifts,
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn twist(&self, t: i64) -> FreeModule {
        FreeModule {
            ring: self.ring.clone(),
            shifts: self.shifts.iter().map(|s| s + t).collect(),
        }
    }
}

/// Degree-zero map of graded free modules, stored as a matrix with one
/// column per source generator. Entry `(i, j)` is homogeneous of degree
/// `source.shift(j) - target.shift(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: FreeModule,
    target: FreeModule,
    matrix: Vec<Vec<Polynomial>>,
}

impl ModuleMap {
    pub fn new(source: FreeModule, target: FreeModule, matrix: Vec<Vec<Polynomial>>) -> Result<ModuleMap> {
        if !source.ring.compatible(&target.ring) {
            return Err(AlgebraError::RingMismatch("map endpoints".into()));
        }
        if matrix.len() != target.rank() || matrix.iter().any(|row| row.len() != source.rank()) {
            return Err(AlgebraError::Shape(format!(
                "matrix {}x{} for map of ranks {} -> {}",
                matrix.len(),
                matrix.first().map(|r| r.len()).unwrap_or(0),
                source.rank(),
                target.rank()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let want = source.shifts[j] - target.shifts[i];
                match entry.homogeneous_degree() {
                    Some(d) if d as i64 == want => {}
                    _ => {
                        return Err(AlgebraError::homogeneity(
                            format!("matrix entry ({i},{j}) = {entry}; expected degree {want}"),
                            entry
                                .inhomogeneous_witness()
                                .unwrap_or_else(|| entry.to_string()),
                        ));
                    }
                }
            }
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    /// Zero map.
    pub fn zero(source: FreeModule, target: FreeModule) -> ModuleMap {
        let ambient = source.ring().ambient().clone();
        let matrix = (0..target.rank())
            .map(|_| (0..source.rank()).map(|_| Polynomial::zero(&ambient)).collect())
            .collect();
        ModuleMap {
            source,
            target,
            matrix,
        }
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    pub fn ring(&self) -> &QuotientRing {
        self.source.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix
            .iter()
            .all(|row| row.iter().all(|e| self.ring().is_zero_element(e)))
    }

    /// Column `j` as a vector in the target free module.
    pub fn column(&self, j: usize) -> ModuleVector {
        ModuleVector::new(self.matrix.iter().map(|row| row[j].clone()).collect())
    }

    pub fn columns(&self) -> Vec<ModuleVector> {
        (0..self.source.rank()).map(|j| self.column(j)).collect()
    }

    /// Apply to a vector of the source free module.
    pub fn apply(&self, v: &ModuleVector) -> ModuleVector {
        debug_assert_eq!(v.rank(), self.source.rank());
        let ambient = self.ring().ambient();
        let mut out = ModuleVector::zero(ambient, self.target.rank());
        for (j, p) in v.components().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            out = out.add(&self.column(j).poly_mul(p));
        }
        out
    }

    /// Matrix composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.target.rank() != self.source.rank() {
            return Err(AlgebraError::Shape("composition rank mismatch".into()));
        }
        let ambient = self.ring().ambient();
        let mut matrix = vec![vec![Polynomial::zero(ambient); other.source.rank()]; self.target.rank()];
        for i in 0..self.target.rank() {
            for j in 0..other.source.rank() {
                let mut acc = Polynomial::zero(ambient);
                for l in 0..self.source.rank() {
                    acc = acc.add(&self.matrix[i][l].mul(&other.matrix[l][j]));
                }
                matrix[i][j] = acc;
            }
        }
        ModuleMap::new(other.source.clone(), self.target.clone(), matrix)
    }

    /// Transpose with dualized (negated) shifts.
    pub fn transpose(&self) -> ModuleMap {
        let dual_source = FreeModule::new(self.ring(), self.target.shifts.iter().map(|s| -s).collect());
        let dual_target = FreeModule::new(self.ring(), self.source.shifts.iter().map(|s| -s).collect());
        let matrix = (0..self.source.rank())
            .map(|i| (0..self.target.rank()).map(|j| self.matrix[j][i].clone()).collect())
            .collect();
        ModuleMap {
            source: dual_source,
            target: dual_target,
            matrix,
        }
    }

    /// Every entry reduced modulo the defining ideal.
    pub fn reduced(&self) -> ModuleMap {
        let ring = self.ring().clone();
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|e| ring.reduce(e)).collect())
                .collect(),
        }
    }

    /// No entry is a unit (scans reduced entries).
    pub fn is_minimal(&self) -> bool {
        self.matrix.iter().all(|row| {
            row.iter().all(|e| {
                let r = self.ring().reduce(e);
                r.constant_coefficient().is_none()
            })
        })
    }
}
