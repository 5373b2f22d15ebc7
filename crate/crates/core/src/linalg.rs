//! Dense exact linear algebra over the coefficient field.

use crate::scalar::{FieldSpec, Scalar};

/// Row-major dense matrix over a fixed field.
#[derive(Clone, Debug)]
pub struct DenseMatrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> DenseMatrix {
        DenseMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> DenseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        DenseMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            let row: Vec<Scalar> = (0..self.cols).map(|c| self.get(r, c).clone()).collect();
            e.insert(row);
        }
        e.len()
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let field = self.field;
        let n = self.rows;
        let mut m: Vec<Vec<Scalar>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut det = field.one();
        for col in 0..n {
            let mut pivot = None;
            for r in col..n {
                if !m[r][col].is_zero() {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else {
                return field.zero();
            };
            if pr != col {
                m.swap(pr, col);
                det = field.neg(&det);
            }
            det = field.mul(&det, &m[col][col]);
            let inv = field.inv(&m[col][col]).unwrap();
            for r in (col + 1)..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = field.mul(&m[r][col], &inv);
                for c in col..n {
                    let t = field.mul(&f, &m[col][c]);
                    m[r][c] = field.sub(&m[r][c], &t);
                }
            }
        }
        det
    }

    /// Basis of the right kernel `{ x : A x = 0 }`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let field = self.field;
        // row reduce a working copy
        let mut m: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            // find pivot
            let mut pr = None;
            for r in row..m.len() {
                if !m[r][col].is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            m.swap(row, pr);
            let inv = field.inv(&m[row][col]).unwrap();
            for c in col..self.cols {
                m[row][c] = field.mul(&m[row][c], &inv);
            }
            for r in 0..m.len() {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..self.cols {
                        let t = field.mul(&f, &m[row][c]);
                        m[r][c] = field.sub(&m[r][c], &t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free_col in 0..self.cols {
            if pivot_set.contains(&free_col) {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[free_col] = field.one();
            for (pi, pcol) in pivots.iter().enumerate() {
                v[*pcol] = field.neg(&m[pi][free_col]);
            }
            basis.push(v);
        }
        basis
    }
}

/// Incremental row echelon with no tracking: membership/rank queries.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, ncols: usize) -> Echelon {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols);
        for (row, pivot) in self.rows.iter().zip(&self.pivots) {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for c in 0..self.ncols {
                    let t = self.field.mul(&f, &row[c]);
                    v[c] = self.field.sub(&v[c], &t);
                }
            }
        }
        v
    }

    /// Insert after reduction; returns true when the vector was independent.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let v = self.reduce(v);
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = self.field.inv(&v[p]).unwrap();
            let norm: Vec<Scalar> = v.iter().map(|x| self.field.mul(x, &inv)).collect();
            self.rows.push(norm);
            self.pivots.push(p);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, v: Vec<Scalar>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Echelon that tracks how each stored row combines the inserted originals,
/// so membership queries can report coordinates.
#[derive(Clone, Debug)]
pub struct TrackedEchelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Scalar>>,
    inserted: usize,
}

impl TrackedEchelon {
    pub fn new(field: FieldSpec, ncols: usize) -> TrackedEchelon {
        TrackedEchelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, mut v: Vec<Scalar>) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut combo = vec![self.field.zero(); self.inserted];
        for ((row, pivot), rcombo) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for c in 0..self.ncols {
                    let t = self.field.mul(&f, &row[c]);
                    v[c] = self.field.sub(&v[c], &t);
                }
                for (ci, rc) in rcombo.iter().enumerate() {
                    let t = self.field.mul(&f, rc);
                    combo[ci] = self.field.sub(&combo[ci], &t);
                }
            }
        }
        (v, combo)
    }

    /// Insert; returns true if independent of the rows so far.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.inserted += 1;
        for combo in &mut self.combos {
            combo.push(self.field.zero());
        }
        let (v, mut combo) = self.reduce_tracked(v);
        combo[self.inserted - 1] = self.field.one();
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = self.field.inv(&v[p]).unwrap();
            let norm: Vec<Scalar> = v.iter().map(|x| self.field.mul(x, &inv)).collect();
            let ncombo: Vec<Scalar> = combo.iter().map(|x| self.field.mul(x, &inv)).collect();
            self.rows.push(norm);
            self.pivots.push(p);
            self.combos.push(ncombo);
            true
        } else {
            false
        }
    }

    /// Express `v` as a combination of the inserted originals, if possible.
    /// Coordinates are indexed by insertion order.
    pub fn express(&self, v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        let (r, combo) = self.reduce_tracked(v);
        if r.iter().all(|x| x.is_zero()) {
            Some(combo.iter().map(|c| self.field.neg(c)).collect())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(field: &FieldSpec, v: i64) -> Scalar {
        field.from_i64(v)
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let f = FieldSpec::Fp(32003);
        let m = DenseMatrix::from_rows(
            f,
            vec![
                vec![s(&f, 1), s(&f, 2), s(&f, 3)],
                vec![s(&f, 2), s(&f, 4), s(&f, 6)],
            ],
        );
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..2 {
                let mut acc = f.zero();
                for c in 0..3 {
                    acc = f.add(&acc, &f.mul(m.get(r, c), &v[c]));
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn tracked_express() {
        let f = FieldSpec::Fp(32003);
        let mut e = TrackedEchelon::new(f, 3);
        assert!(e.insert(vec![s(&f, 1), s(&f, 0), s(&f, 1)]));
        assert!(e.insert(vec![s(&f, 0), s(&f, 1), s(&f, 1)]));
        // (2, 3, 5) = 2*a + 3*b
        let coords = e
            .express(vec![s(&f, 2), s(&f, 3), s(&f, 5)])
            .expect("in span");
        assert_eq!(coords, vec![s(&f, 2), s(&f, 3)]);
        assert!(e.express(vec![s(&f, 1), s(&f, 0), s(&f, 0)]).is_none());
    }
}
