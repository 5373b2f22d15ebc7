//! Hilbert functions, series, dimension, and multiplicity via the initial
//! module of the relation submodule.

use crate::error::{AlgebraError, Result};
use crate::fpmod::FPModule;
use crate::monomial::Monomial;
use std::collections::BTreeMap;

/// Default degree bound for truncated Hilbert probes.
pub const DEFAULT_DEGREE_BOUND: i64 = 12;

/// Lead-term data of a module: per generator coordinate, the monomial ideal
/// of leading terms sitting in that coordinate.
fn lead_term_ideals(module: &FPModule) -> Vec<Vec<Monomial>> {
    let gb = module.relations_gb();
    let mut per_coord: Vec<Vec<Monomial>> = vec![Vec::new(); module.generator_count()];
    for v in gb.elements() {
        if let Some((pos, _, m)) = v.leading() {
            per_coord[pos].push(m.clone());
        }
    }
    // drop redundant generators
    for coord in &mut per_coord {
        let mut minimal: Vec<Monomial> = Vec::new();
        coord.sort();
        for m in coord.iter() {
            if !minimal.iter().any(|g| g.divides(m)) {
                minimal.push(m.clone());
            }
        }
        *coord = minimal;
    }
    per_coord
}

/// Standard module monomials of internal degree `d`: pairs (coordinate,
/// monomial) surviving the initial module.
pub fn standard_monomials(module: &FPModule, d: i64) -> Vec<(usize, Monomial)> {
    let ambient = module.ring().ambient();
    let shifts = module.generator_degrees();
    let leads = lead_term_ideals(module);
    let mut out = Vec::new();
    for (i, s) in shifts.iter().enumerate() {
        if d - s < 0 {
            continue;
        }
        for m in ambient.monomials_of_degree((d - s) as u64) {
            if !leads[i].iter().any(|g| g.divides(&m)) {
                out.push((i, m));
            }
        }
    }
    out
}

/// Hilbert function `dim_k M_d`.
pub fn hilbert_function(module: &FPModule, d: i64) -> usize {
    standard_monomials(module, d).len()
}

/// Hilbert function on `0..=bound`.
pub fn hilbert_function_range(module: &FPModule, lo: i64, hi: i64) -> Vec<(i64, usize)> {
    (lo..=hi).map(|d| (d, hilbert_function(module, d))).collect()
}

/// Krull dimension of a monomial quotient via independent variable subsets:
/// the largest set of variables supporting no lead-term generator.
fn monomial_ideal_dimension(gens: &[Monomial], nvars: usize) -> usize {
    if gens.iter().any(|g| g.is_one()) {
        return 0; // unit ideal: empty support, dimension of the zero ring
    }
    let mut best = 0usize;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = gens.iter().all(|g| {
            g.exponents()
                .iter()
                .enumerate()
                .any(|(v, e)| *e > 0 && mask & (1 << v) == 0)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// Krull dimension of the module (valid in any grading; the combinatorial
/// criterion does not consult degrees). Zero module reports 0.
pub(crate) fn dimension_unchecked(module: &FPModule) -> usize {
    let nvars = module.ring().nvars();
    let leads = lead_term_ideals(module);
    let mut best = 0;
    let mut any = false;
    for coord in &leads {
        if coord.iter().any(|g| g.is_one()) {
            continue; // this coordinate dies entirely
        }
        any = true;
        best = best.max(monomial_ideal_dimension(coord, nvars));
    }
    if any {
        best
    } else {
        0
    }
}

fn require_standard(module: &FPModule, operation: &str) -> Result<()> {
    if module.ring().standard_grading() {
        Ok(())
    } else {
        Err(AlgebraError::UnsupportedGrading {
            operation: operation.into(),
        })
    }
}

/// Krull dimension (standard grading only, per the engine's contract).
pub fn dimension(module: &FPModule) -> Result<usize> {
    require_standard(module, "dimension")?;
    Ok(dimension_unchecked(module))
}

/// Laurent polynomial with integer coefficients, used for Hilbert series
/// numerators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntLaurent(pub BTreeMap<i64, i128>);

impl IntLaurent {
    pub fn zero() -> IntLaurent {
        IntLaurent(BTreeMap::new())
    }

    pub fn one() -> IntLaurent {
        let mut m = BTreeMap::new();
        m.insert(0, 1);
        IntLaurent(m)
    }

    pub fn monomial(d: i64, c: i128) -> IntLaurent {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(d, c);
        }
        IntLaurent(m)
    }

    pub fn add(&self, other: &IntLaurent) -> IntLaurent {
        let mut m = self.0.clone();
        for (d, c) in &other.0 {
            let e = m.entry(*d).or_insert(0);
            *e += c;
            if *e == 0 {
                m.remove(d);
            }
        }
        IntLaurent(m)
    }

    pub fn sub(&self, other: &IntLaurent) -> IntLaurent {
        let neg = IntLaurent(other.0.iter().map(|(d, c)| (*d, -c)).collect());
        self.add(&neg)
    }

    pub fn shift(&self, by: i64) -> IntLaurent {
        IntLaurent(self.0.iter().map(|(d, c)| (d + by, *c)).collect())
    }

    /// Exact division by `(1 - t)`; `None` when it does not divide.
    pub fn divide_by_one_minus_t(&self) -> Option<IntLaurent> {
        if self.0.is_empty() {
            return Some(IntLaurent::zero());
        }
        // (1 - t) q = k  means  q_j = sum_{i <= j} k_i (prefix sums),
        // exact iff the running total returns to zero past the top degree.
        let lo = *self.0.keys().next().unwrap();
        let hi = *self.0.keys().last().unwrap();
        let mut q = BTreeMap::new();
        let mut acc: i128 = 0;
        for d in lo..=hi {
            acc += self.0.get(&d).copied().unwrap_or(0);
            if acc != 0 {
                q.insert(d, acc);
            }
        }
        if acc == 0 {
            Some(IntLaurent(q))
        } else {
            None
        }
    }

    pub fn eval_at_one(&self) -> i128 {
        self.0.values().sum()
    }
}

/// Numerator `K(t)` with `HS(P/J) = K(t)/(1-t)^n` for a monomial ideal `J`
/// in the standard grading, by the splitting recursion
/// `K(J' + (m)) = K(J') - t^{deg m} K(J' : m)`.
fn k_polynomial(gens: &[Monomial], nvars: usize) -> IntLaurent {
    let mut minimal: Vec<Monomial> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort();
    for m in sorted {
        if !minimal.iter().any(|g| g.divides(&m)) {
            minimal.push(m);
        }
    }
    if minimal.is_empty() {
        return IntLaurent::one();
    }
    if minimal.iter().any(|m| m.is_one()) {
        return IntLaurent::zero();
    }
    let weights = vec![1u32; nvars];
    let m = minimal.pop().unwrap();
    let rest = minimal;
    let k_rest = k_polynomial(&rest, nvars);
    // (rest) : m
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            let exps: Vec<u32> = g
                .exponents()
                .iter()
                .zip(m.exponents())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect();
            Monomial::new(exps, &weights)
        })
        .collect();
    let k_colon = k_polynomial(&colon, nvars);
    k_rest.sub(&k_colon.shift(m.weighted_degree() as i64))
}

/// Hilbert series numerator of the module over `(1-t)^n` (standard grading).
pub fn hilbert_numerator(module: &FPModule) -> Result<IntLaurent> {
    require_standard(module, "series")?;
    let nvars = module.ring().nvars();
    let shifts = module.generator_degrees();
    let leads = lead_term_ideals(module);
    let mut total = IntLaurent::zero();
    for (i, coord) in leads.iter().enumerate() {
        let k = k_polynomial(coord, nvars);
        total = total.add(&k.shift(shifts[i]));
    }
    Ok(total)
}

/// Multiplicity report under the standard grading.
#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub dimension: usize,
    pub multiplicity: i128,
    pub numerator: IntLaurent,
}

/// Multiplicity: evaluate the reduced Hilbert series numerator at 1 after
/// clearing the pole of order `dim`. For zero-dimensional modules this is
/// the total length.
pub fn multiplicity(module: &FPModule) -> Result<MultiplicityReport> {
    require_standard(module, "multiplicity")?;
    let nvars = module.ring().nvars();
    let dim = dimension_unchecked(module);
    let mut k = hilbert_numerator(module)?;
    for _ in 0..(nvars - dim) {
        k = k.divide_by_one_minus_t().ok_or_else(|| {
            AlgebraError::Invalid("Hilbert numerator pole order below dimension".into())
        })?;
    }
    Ok(MultiplicityReport {
        dimension: dim,
        multiplicity: k.eval_at_one(),
        numerator: k,
    })
}

/// Total k-dimension of a finite-length module, with the exact cutoff
/// derived from pure powers in the initial module. `None` when the module
/// has positive dimension.
pub fn finite_length_dimension(module: &FPModule) -> Option<usize> {
    if dimension_unchecked(module) != 0 {
        return None;
    }
    let ring = module.ring();
    let weights = ring.weights();
    let leads = lead_term_ideals(module);
    let shifts = module.generator_degrees();
    let mut max_degree = i64::MIN;
    for (i, coord) in leads.iter().enumerate() {
        if coord.iter().any(|m| m.is_one()) {
            continue;
        }
        // dimension 0 guarantees a pure power of every variable
        let mut bound = shifts[i];
        for v in 0..ring.nvars() {
            let min_pure = coord
                .iter()
                .filter(|m| {
                    m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(u, e)| u == v || *e == 0)
                })
                .map(|m| m.exponents()[v])
                .min()
                .expect("pure power exists in a zero-dimensional coordinate");
            bound += (min_pure.saturating_sub(1)) as i64 * weights[v] as i64;
        }
        max_degree = max_degree.max(bound);
    }
    if max_degree == i64::MIN {
        return Some(0);
    }
    let lo = *shifts.iter().min().unwrap_or(&0);
    let mut total = 0usize;
    for d in lo..=max_degree {
        total += hilbert_function(module, d);
    }
    Some(total)
}
