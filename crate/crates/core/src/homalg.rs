//! Ext, Tor, depth, Bass numbers, projective dimension probes, and
//! regular-sequence tests.

use crate::error::{AlgebraError, Result};
use crate::fpmod::{self, FPMap, FPModule};
use crate::freemod::ModuleMap;
use crate::hilbert;
use crate::poly::Polynomial;
use crate::resolution;
use crate::ring::QuotientRing;
use crate::vector::ModuleVector;

/// Homology module report: finite-length modules carry their exact
/// k-dimension, others a truncated Hilbert function.
#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub index: usize,
    pub module: FPModule,
    pub length: LengthInfo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthInfo {
    FiniteLength(usize),
    /// positive-dimensional: truncated Hilbert function on `0..=bound`
    InfiniteLength {
        hilbert: Vec<(i64, usize)>,
        bound: i64,
    },
}

impl HomologyReport {
    fn new(index: usize, module: FPModule) -> HomologyReport {
        let module = module.minimal_presentation();
        let length = match hilbert::finite_length_dimension(&module) {
            Some(n) => LengthInfo::FiniteLength(n),
            None => {
                let bound = hilbert::DEFAULT_DEGREE_BOUND;
                LengthInfo::InfiniteLength {
                    hilbert: hilbert::hilbert_function_range(&module, 0, bound),
                    bound,
                }
            }
        };
        HomologyReport {
            index,
            module,
            length,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.module.generator_count() == 0
    }

    /// k-dimension when finite length, `None` otherwise.
    pub fn finite_length_dimension(&self) -> Option<usize> {
        match &self.length {
            LengthInfo::FiniteLength(n) => Some(*n),
            LengthInfo::InfiniteLength { .. } => None,
        }
    }
}

/// `F_j tensor N` as an explicit module: one twisted copy of `N` per free
/// generator.
fn tensor_spot(free_shifts: &[i64], n: &FPModule) -> Result<FPModule> {
    let ring = n.ring();
    let mut acc: Option<FPModule> = None;
    for s in free_shifts {
        let piece = n.twist(*s);
        acc = Some(match acc {
            None => piece,
            Some(a) => a.direct_sum(&piece)?,
        });
    }
    Ok(acc.unwrap_or_else(|| FPModule::zero(ring)))
}

/// `d tensor N` on the spots built by `tensor_spot`.
fn tensor_map(d: &ModuleMap, n: &FPModule, src: &FPModule, tgt: &FPModule) -> Result<FPMap> {
    let ambient = n.ring().ambient();
    let g0 = n.generator_count();
    let rows = d.target().rank() * g0;
    let cols = d.source().rank() * g0;
    let mut matrix = vec![vec![Polynomial::zero(ambient); cols]; rows];
    for u in 0..d.target().rank() {
        for v in 0..d.source().rank() {
            let e = d.entry(u, v);
            if e.is_zero() {
                continue;
            }
            for g in 0..g0 {
                matrix[u * g0 + g][v * g0 + g] = e.clone();
            }
        }
    }
    FPMap::new(src.clone(), tgt.clone(), matrix)
}

/// `Hom(F_j, N)`: one copy of `N` twisted by minus the generator degree.
fn cotensor_spot(free_shifts: &[i64], n: &FPModule) -> Result<FPModule> {
    let ring = n.ring();
    let mut acc: Option<FPModule> = None;
    for s in free_shifts {
        let piece = n.twist(-*s);
        acc = Some(match acc {
            None => piece,
            Some(a) => a.direct_sum(&piece)?,
        });
    }
    Ok(acc.unwrap_or_else(|| FPModule::zero(ring)))
}

/// `Hom(d, N): Hom(F_(j-1), N) -> Hom(F_j, N)` (the transposed action).
fn cotensor_map(d: &ModuleMap, n: &FPModule, src: &FPModule, tgt: &FPModule) -> Result<FPMap> {
    let ambient = n.ring().ambient();
    let g0 = n.generator_count();
    let rows = d.source().rank() * g0;
    let cols = d.target().rank() * g0;
    let mut matrix = vec![vec![Polynomial::zero(ambient); cols]; rows];
    for v in 0..d.source().rank() {
        for u in 0..d.target().rank() {
            let e = d.entry(u, v);
            if e.is_zero() {
                continue;
            }
            for g in 0..g0 {
                matrix[v * g0 + g][u * g0 + g] = e.clone();
            }
        }
    }
    FPMap::new(src.clone(), tgt.clone(), matrix)
}

/// `Tor_i(M, N)` from a minimal resolution of the first argument.
pub fn tor(m: &FPModule, n: &FPModule, i: usize) -> Result<HomologyReport> {
    if !m.ring().compatible(n.ring()) {
        return Err(AlgebraError::RingMismatch("Tor".into()));
    }
    let n = if n.is_minimal() { n.clone() } else { n.minimal_presentation() };
    let res = resolution::free_resolution(m, i + 1)?;
    let shifts_at = |j: usize| -> Vec<i64> {
        if j == 0 {
            res.differentials()
                .first()
                .map(|d| d.target().shifts().to_vec())
                .unwrap_or_default()
        } else {
            res.differentials()
                .get(j - 1)
                .map(|d| d.source().shifts().to_vec())
                .unwrap_or_default()
        }
    };
    let spot_i = tensor_spot(&shifts_at(i), &n)?;
    let d_in = match res.differential(i + 1) {
        Some(d) => {
            let spot_next = tensor_spot(&shifts_at(i + 1), &n)?;
            tensor_map(d, &n, &spot_next, &spot_i)?
        }
        None => FPMap::zero(FPModule::zero(m.ring()), spot_i.clone()),
    };
    let d_out = if i == 0 {
        FPMap::zero(spot_i.clone(), FPModule::zero(m.ring()))
    } else {
        match res.differential(i) {
            Some(d) => {
                let spot_prev = tensor_spot(&shifts_at(i - 1), &n)?;
                tensor_map(d, &n, &spot_i, &spot_prev)?
            }
            None => FPMap::zero(spot_i.clone(), FPModule::zero(m.ring())),
        }
    };
    let h = fpmod::homology(&d_in, &d_out)?;
    Ok(HomologyReport::new(i, h))
}

/// `Ext^i(M, N)` from a minimal resolution of the first argument.
pub fn ext(m: &FPModule, n: &FPModule, i: usize) -> Result<HomologyReport> {
    if !m.ring().compatible(n.ring()) {
        return Err(AlgebraError::RingMismatch("Ext".into()));
    }
    let n = if n.is_minimal() { n.clone() } else { n.minimal_presentation() };
    let res = resolution::free_resolution(m, i + 1)?;
    let shifts_at = |j: usize| -> Vec<i64> {
        if j == 0 {
            res.differentials()
                .first()
                .map(|d| d.target().shifts().to_vec())
                .unwrap_or_default()
        } else {
            res.differentials()
                .get(j - 1)
                .map(|d| d.source().shifts().to_vec())
                .unwrap_or_default()
        }
    };
    let spot_i = cotensor_spot(&shifts_at(i), &n)?;
    // d_in: Hom(F_(i-1), N) -> Hom(F_i, N) via d_i
    let d_in = if i == 0 {
        FPMap::zero(FPModule::zero(m.ring()), spot_i.clone())
    } else {
        match res.differential(i) {
            Some(d) => {
                let spot_prev = cotensor_spot(&shifts_at(i - 1), &n)?;
                cotensor_map(d, &n, &spot_prev, &spot_i)?
            }
            None => FPMap::zero(FPModule::zero(m.ring()), spot_i.clone()),
        }
    };
    // d_out: Hom(F_i, N) -> Hom(F_(i+1), N) via d_(i+1)
    let d_out = match res.differential(i + 1) {
        Some(d) => {
            let spot_next = cotensor_spot(&shifts_at(i + 1), &n)?;
            cotensor_map(d, &n, &spot_i, &spot_next)?
        }
        None => FPMap::zero(spot_i.clone(), FPModule::zero(m.ring())),
    };
    let h = fpmod::homology(&d_in, &d_out)?;
    Ok(HomologyReport::new(i, h))
}

/// Depth as the least `i` with `Ext^i(k, M)` nonzero, probed up to the
/// number of variables (always terminates there for graded modules).
pub fn depth(m: &FPModule) -> Result<usize> {
    if m.is_zero_module() {
        return Err(AlgebraError::ZeroModule);
    }
    let ring = m.ring();
    let k = FPModule::residue_field(ring);
    for i in 0..=ring.nvars() {
        if !ext(&k, m, i)?.is_zero() {
            return Ok(i);
        }
    }
    Err(AlgebraError::Invalid(
        "no Ext(k, M) found within the variable count; module is not graded-finite".into(),
    ))
}

/// Depth of the ring itself.
pub fn ring_depth(ring: &QuotientRing) -> Result<usize> {
    depth(&FPModule::free(ring, vec![0]))
}

/// Bass numbers `mu^i = dim_k Ext^i(k, N)` over a range, with the finite
/// injective dimension hint from vanishing past the depth.
#[derive(Clone, Debug)]
pub struct BassReport {
    pub numbers: Vec<(usize, usize)>,
    pub depth: usize,
    pub finite_injdim_hint: bool,
}

pub fn bass_numbers(n: &FPModule, upto: usize) -> Result<BassReport> {
    let ring = n.ring();
    let k = FPModule::residue_field(ring);
    let mut numbers = Vec::new();
    for i in 0..=upto {
        let e = ext(&k, n, i)?;
        let dim = e.finite_length_dimension().unwrap_or(0);
        numbers.push((i, dim));
    }
    let d = depth(n)?;
    let finite_injdim_hint = numbers.iter().any(|(i, mu)| *i > d && *mu == 0);
    Ok(BassReport {
        numbers,
        depth: d,
        finite_injdim_hint,
    })
}

/// Projective dimension probe up to a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdReport {
    Exact(usize),
    /// no free syzygy within the bound
    AtLeast(usize),
    /// certified infinite: the ring has decomposable maximal ideal and the
    /// second syzygy is nonfree, so finite pd would force pd <= 1
    Infinite,
}

pub fn projective_dimension(m: &FPModule, bound: usize) -> Result<PdReport> {
    let res = resolution::free_resolution(m, bound + 1)?;
    let betti = res.betti();
    // minimal resolution: pd = last index with nonzero Betti number
    for (i, b) in betti.iter().enumerate().skip(1) {
        if *b == 0 {
            return Ok(PdReport::Exact(i - 1));
        }
    }
    if res.is_complete() {
        return Ok(PdReport::Exact(betti.len() - 1));
    }
    if crate::structure::detect_fiber_split(m.ring()).is_some() && bound >= 2 {
        // over a ring with decomposable maximal ideal, pd >= 2 forces
        // infinite projective dimension
        return Ok(PdReport::Infinite);
    }
    Ok(PdReport::AtLeast(bound + 1))
}

/// Regular sequence test with a failure witness.
#[derive(Clone, Debug)]
pub enum RegularSequenceOutcome {
    Regular,
    /// `x_(stage)` has a kernel on the partial quotient; the witness is a
    /// nonzero kernel element in the generator coordinates of that quotient
    KernelWitness {
        stage: usize,
        witness: ModuleVector,
    },
    /// the final quotient vanished, so the sequence is not regular
    QuotientVanished,
}

impl RegularSequenceOutcome {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularSequenceOutcome::Regular)
    }
}

pub fn is_regular_sequence(x: &[Polynomial], m: &FPModule) -> Result<RegularSequenceOutcome> {
    let ring = m.ring().clone();
    let mut current = m.minimal_presentation();
    if current.is_zero_module() {
        return Ok(RegularSequenceOutcome::QuotientVanished);
    }
    for (stage, xi) in x.iter().enumerate() {
        let r = ring.reduce(xi);
        if r.is_zero() || r.constant_coefficient().is_some() {
            return Err(AlgebraError::precondition(format!(
                "sequence element {xi} is not a nonzero maximal-ideal element"
            )));
        }
        let mul = FPMap::multiplication(&current, &r)?;
        let (ker, gens) = fpmod::kernel_with_generators(&mul)?;
        let kmin = ker.minimal_presentation();
        if kmin.generator_count() > 0 {
            // produce a nonzero kernel element: the first generator of the
            // kernel, normalized in the quotient's coordinates
            let witness = gens
                .iter()
                .map(|g| current.element_normal_form(g))
                .find(|w| !w.is_zero())
                .unwrap_or_else(|| gens[0].clone());
            return Ok(RegularSequenceOutcome::KernelWitness { stage, witness });
        }
        current = current.quotient_by_elements(&[r])?.minimal_presentation();
        if current.is_zero_module() {
            return Ok(RegularSequenceOutcome::QuotientVanished);
        }
    }
    Ok(RegularSequenceOutcome::Regular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn tor_of_free_vanishes_positively() {
        let r = ring_xy_mod_xy();
        let f = FPModule::free(&r, vec![0]);
        let n = FPModule::residue_field(&r);
        for i in 1..4 {
            assert!(tor(&f, &n, i).unwrap().is_zero());
        }
        // Tor_0(R, k) = k
        let t0 = tor(&f, &n, 0).unwrap();
        assert_eq!(t0.finite_length_dimension(), Some(1));
    }

    #[test]
    fn tor_alternation_over_hypersurface() {
        // M = N = R/(x) over k[x,y]/(xy): dim Tor_i = 1 for odd i, 0 for even i >= 2
        let r = ring_xy_mod_xy();
        let m = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        for i in 1..=6 {
            let t = tor(&m, &m, i).unwrap();
            let expect = if i % 2 == 1 { 1 } else { 0 };
            assert_eq!(
                t.finite_length_dimension().unwrap_or(usize::MAX),
                expect,
                "Tor_{i}"
            );
        }
    }

    #[test]
    fn ext_examples_over_two_branch_ring() {
        // Ext^1(R/I, R) = 0 and dim Ext^1(k, R) = 1 over k[x,y,z]/(xy,xz)
        let r = ring_xyz_mod_xy_xz();
        let a = r.ambient();
        let ri = FPModule::cyclic(&r, &[parse_poly(a, "y"), parse_poly(a, "z")]).unwrap();
        let free = FPModule::free(&r, vec![0]);
        assert!(ext(&ri, &free, 1).unwrap().is_zero());
        let k = FPModule::residue_field(&r);
        let e = ext(&k, &free, 1).unwrap();
        assert_eq!(e.finite_length_dimension(), Some(1));
    }

    #[test]
    fn ext0_of_ring_is_target() {
        // Ext^0(R, N) = N
        let r = ring_xy_mod_xy();
        let free = FPModule::free(&r, vec![0]);
        let n = FPModule::cyclic(&r, &[parse_poly(r.ambient(), "x")]).unwrap();
        let e = ext(&free, &n, 0).unwrap();
        let em = e.module.minimal_presentation();
        assert_eq!(em.generator_count(), 1);
        assert_eq!(em.presentation().entry(0, 0).to_string(), "x");
    }

    #[test]
    fn depths_of_fixture_rings() {
        assert_eq!(ring_depth(&ring_xy_mod_xy()).unwrap(), 1);
        assert_eq!(ring_depth(&ring_xy_mod_x2_xy()).unwrap(), 0);
        assert_eq!(ring_depth(&ring_xyt_mod_xy()).unwrap(), 2);
        assert_eq!(ring_depth(&ring_xyz_mod_xy_xz()).unwrap(), 1);
    }

    #[test]
    fn bass_numbers_of_regular_ring() {
        // mu^i(k[x,y]) = (0, 0, 1)
        let r = poly_ring(&["x", "y"]);
        let f = FPModule::free(&r, vec![0]);
        let rep = bass_numbers(&f, 2).unwrap();
        assert_eq!(rep.numbers, vec![(0, 0), (1, 0), (2, 1)]);
        assert_eq!(rep.depth, 2);
    }

    #[test]
    fn bass_number_of_socle() {
        // mu^0(k[x,y]/(x^2,xy)) = 1: socle spanned by x
        let r = ring_xy_mod_x2_xy();
        let f = FPModule::free(&r, vec![0]);
        let rep = bass_numbers(&f, 1).unwrap();
        assert_eq!(rep.numbers[0], (0, 1));
    }

    #[test]
    fn gorenstein_type_of_hypersurface() {
        // mu^1(k[x,y]/(xy)) = 1
        let r = ring_xy_mod_xy();
        let f = FPModule::free(&r, vec![0]);
        let rep = bass_numbers(&f, 1).unwrap();
        assert_eq!(rep.numbers, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn projective_dimension_cases() {
        let r = ring_xyt_mod_xy();
        let a = r.ambient();
        // free module
        let f = FPModule::free(&r, vec![0]);
        assert_eq!(projective_dimension(&f, 4).unwrap(), PdReport::Exact(0));
        // R/(t): t regular, pd 1
        let rt = FPModule::cyclic(&r, &[parse_poly(a, "t")]).unwrap();
        assert_eq!(projective_dimension(&rt, 4).unwrap(), PdReport::Exact(1));
        // R/(x) over the fiber product k[x,y]/(xy): infinite
        let r2 = ring_xy_mod_xy();
        let rx = FPModule::cyclic(&r2, &[parse_poly(r2.ambient(), "x")]).unwrap();
        assert_eq!(projective_dimension(&rx, 4).unwrap(), PdReport::Infinite);
    }

    #[test]
    fn regular_sequence_tests() {
        let r = ring_xy_mod_xy();
        let a = r.ambient();
        let free = FPModule::free(&r, vec![0]);
        // empty sequence
        assert!(is_regular_sequence(&[], &free).unwrap().is_regular());
        // x is a zerodivisor: witness is y
        let out = is_regular_sequence(&[parse_poly(a, "x")], &free).unwrap();
        match out {
            RegularSequenceOutcome::KernelWitness { stage, witness } => {
                assert_eq!(stage, 0);
                assert_eq!(witness.component(0).to_string(), "y");
            }
            other => panic!("expected kernel witness, got {other:?}"),
        }
        // t is regular on k[x,y,t]/(xy)
        let r4 = ring_xyt_mod_xy();
        let free4 = FPModule::free(&r4, vec![0]);
        assert!(
            is_regular_sequence(&[parse_poly(r4.ambient(), "t")], &free4)
                .unwrap()
                .is_regular()
        );
    }
}
