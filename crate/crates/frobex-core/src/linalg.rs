//! Dense exact linear algebra over [`CycScalar`].
//!
//! Index convention used everywhere in this crate: the basis of a tensor
//! product `X (x) Y` is ordered row-major, `(i, j) -> i * dim_Y + j`.

use std::sync::Arc;

use crate::error::{FrobexError, Result};
use crate::scalars::{CycField, CycScalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    field: Arc<CycField>,
    entries: Vec<CycScalar>,
}

impl Vector {
    pub fn new(field: &Arc<CycField>, entries: Vec<CycScalar>) -> Result<Vector> {
        for e in &entries {
            if e.field() != field {
                return Err(FrobexError::FieldMismatch {
                    left: field.conductor(),
                    right: e.field().conductor(),
                });
            }
        }
        Ok(Vector {
            field: field.clone(),
            entries,
        })
    }

    pub fn zeros(field: &Arc<CycField>, d: usize) -> Vector {
        Vector {
            field: field.clone(),
            entries: vec![CycScalar::zero(field); d],
        }
    }

    pub fn unit(field: &Arc<CycField>, d: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, d);
        v.entries[i] = CycScalar::one(field);
        v
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &CycScalar {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: CycScalar) {
        self.entries[i] = v;
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycScalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.len() != other.len() {
            return Err(shape("vector add length mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Vector {
            field: self.field.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        if self.len() != other.len() {
            return Err(shape("vector sub length mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(Vector {
            field: self.field.clone(),
            entries,
        })
    }

    pub fn scale(&self, s: &CycScalar) -> Result<Vector> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.mul(s))
            .collect::<Result<_>>()?;
        Ok(Vector {
            field: self.field.clone(),
            entries,
        })
    }

    pub fn neg(&self) -> Vector {
        Vector {
            field: self.field.clone(),
            entries: self.entries.iter().map(CycScalar::neg).collect(),
        }
    }

    /// Kronecker product of vectors under the row-major pairing.
    pub fn kron(&self, other: &Vector) -> Result<Vector> {
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a.mul(b)?);
            }
        }
        Ok(Vector {
            field: self.field.clone(),
            entries,
        })
    }

    pub fn embed(&self, target: &Arc<CycField>) -> Result<Vector> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.embed(target))
            .collect::<Result<_>>()?;
        Ok(Vector {
            field: target.clone(),
            entries,
        })
    }

    /// Concatenation (direct sum of coordinates).
    pub fn concat(&self, other: &Vector) -> Result<Vector> {
        if self.field != other.field {
            return Err(FrobexError::FieldMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Vector {
            field: self.field.clone(),
            entries,
        })
    }

    pub fn cmp_lex(&self, other: &Vector) -> std::cmp::Ordering {
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let o = a.cmp_lex(b);
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        self.len().cmp(&other.len())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_poly_string()).collect()
    }

    /// Treats the vector as a d x 1 matrix.
    pub fn as_column(&self) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.len(),
            cols: 1,
            entries: self.entries.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    entries: Vec<CycScalar>, // row-major
}

fn shape(what: &str) -> FrobexError {
    FrobexError::ShapeMismatch { what: what.into() }
}

impl Matrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![CycScalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CycField>, d: usize) -> Matrix {
        let mut m = Matrix::zeros(field, d, d);
        for i in 0..d {
            m.set(i, i, CycScalar::one(field));
        }
        m
    }

    pub fn from_rows(field: &Arc<CycField>, rows: Vec<Vec<CycScalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(shape("ragged rows"));
            }
            for e in row {
                if e.field() != field {
                    return Err(FrobexError::FieldMismatch {
                        left: field.conductor(),
                        right: e.field().conductor(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Builds a matrix from integer entries (test and table convenience).
    pub fn from_ints(field: &Arc<CycField>, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, CycScalar::from_int(field, v));
            }
        }
        m
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector {
            field: self.field.clone(),
            entries: (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        }
    }

    pub fn set_column(&mut self, c: usize, v: &Vector) {
        for r in 0..self.rows {
            self.set(r, c, v.get(r).clone());
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(shape("matrix add shape mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(shape("matrix sub shape mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &CycScalar) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.mul(s))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Exact product, skipping zero entries of the left factor.
    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(FrobexError::FieldMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            });
        }
        if self.cols != other.rows {
            return Err(shape(&format!(
                "mat_mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b)?;
                    let cur = out.get(r, c).add(&t)?;
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(shape("mul_vec length mismatch"));
        }
        let mut out = Vector::zeros(&self.field, self.rows);
        for r in 0..self.rows {
            let mut acc = CycScalar::zero(&self.field);
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() || v.get(k).is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(v.get(k))?)?;
            }
            out.set(r, acc);
        }
        Ok(out)
    }

    /// Kronecker product under the fixed row-major pairing:
    /// `(A (x) B)[(i,j),(k,l)] = A[i,k] * B[j,l]`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(FrobexError::FieldMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            });
        }
        let mut out = Matrix::zeros(
            &self.field,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(j, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + j, k * other.cols + l, a.mul(b)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(FrobexError::FieldMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            });
        }
        let mut out = Matrix::zeros(
            &self.field,
            self.rows + other.rows,
            self.cols + other.cols,
        );
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn embed(&self, target: &Arc<CycField>) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.embed(target))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn cmp_lex(&self, other: &Matrix) -> std::cmp::Ordering {
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let o = a.cmp_lex(b);
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        (self.rows, self.cols).cmp(&(other.rows, other.cols))
    }

    /// Inverse via Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(shape("inverse of non-square matrix"));
        }
        let d = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(&self.field, d);
        for col in 0..d {
            let pivot = (col..d).find(|&r| !a.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Ok(None);
            };
            if p != col {
                for c in 0..d {
                    let t = a.get(p, c).clone();
                    a.set(p, c, a.get(col, c).clone());
                    a.set(col, c, t);
                    let t = inv.get(p, c).clone();
                    inv.set(p, c, inv.get(col, c).clone());
                    inv.set(col, c, t);
                }
            }
            let pv = a.get(col, col).inverse()?;
            for c in 0..d {
                a.set(col, c, a.get(col, c).mul(&pv)?);
                inv.set(col, c, inv.get(col, c).mul(&pv)?);
            }
            for r in 0..d {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..d {
                    let t = factor.mul(a.get(col, c))?;
                    a.set(r, c, a.get(r, c).sub(&t)?);
                    let t = factor.mul(inv.get(col, c))?;
                    inv.set(r, c, inv.get(r, c).sub(&t)?);
                }
            }
        }
        Ok(Some(inv))
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.inverse()?.is_some())
    }

    pub fn to_row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c).to_poly_string())
                    .collect()
            })
            .collect()
    }
}

/// The permutation matrix realizing the symmetry `X (x) Y -> Y (x) X`:
/// basis vector `(i, j)` (index `i*d2 + j`) maps to `(j, i)` (index
/// `j*d1 + i`).
pub fn swap_map(d1: usize, d2: usize, field: &Arc<CycField>) -> Matrix {
    let mut m = Matrix::zeros(field, d1 * d2, d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            m.set(j * d1 + i, i * d2 + j, CycScalar::one(field));
        }
    }
    m
}

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug)]
pub enum LinSolve {
    Inconsistent,
    Solved {
        particular: Vector,
        /// Reduced-echelon nullspace basis: basis vector `k` has a 1 at its
        /// free coordinate and the pivot-column completions elsewhere.
        nullspace: Vec<Vector>,
        /// The free coordinate owned by each nullspace basis vector.
        free_coords: Vec<usize>,
    },
}

/// Exact Gaussian elimination with pivoting on the first nonzero entry.
/// Returns one particular solution plus a nullspace basis, or reports
/// inconsistency.
pub fn solve_linear(a: &Matrix, b: &Vector) -> Result<LinSolve> {
    if a.rows() != b.len() {
        return Err(shape("solve_linear: row count vs rhs length"));
    }
    if a.field() != b.field() {
        return Err(FrobexError::FieldMismatch {
            left: a.field().conductor(),
            right: b.field().conductor(),
        });
    }
    let field = a.field().clone();
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut rhs = b.clone();

    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !m.get(r, col).is_zero());
        let Some(p) = pivot else { continue };
        if p != rank {
            for c in 0..cols {
                let t = m.get(p, c).clone();
                m.set(p, c, m.get(rank, c).clone());
                m.set(rank, c, t);
            }
            let t = rhs.get(p).clone();
            rhs.set(p, rhs.get(rank).clone());
            rhs.set(rank, t);
        }
        let pv = m.get(rank, col).inverse()?;
        for c in 0..cols {
            m.set(rank, c, m.get(rank, c).mul(&pv)?);
        }
        rhs.set(rank, rhs.get(rank).mul(&pv)?);
        for r in 0..rows {
            if r == rank || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in 0..cols {
                let t = factor.mul(m.get(rank, c))?;
                m.set(r, c, m.get(r, c).sub(&t)?);
            }
            let t = factor.mul(rhs.get(rank))?;
            rhs.set(r, rhs.get(r).sub(&t)?);
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    for r in rank..rows {
        if !rhs.get(r).is_zero() {
            return Ok(LinSolve::Inconsistent);
        }
    }

    let mut particular = Vector::zeros(&field, cols);
    for (i, &pc) in pivot_cols.iter().enumerate() {
        particular.set(pc, rhs.get(i).clone());
    }

    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut nullspace = Vec::new();
    let mut free_coords = Vec::new();
    for fc in 0..cols {
        if pivot_set.contains(&fc) {
            continue;
        }
        let mut v = Vector::zeros(&field, cols);
        v.set(fc, CycScalar::one(&field));
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v.set(pc, m.get(i, fc).neg());
        }
        nullspace.push(v);
        free_coords.push(fc);
    }
    Ok(LinSolve::Solved {
        particular,
        nullspace,
        free_coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    fn f8() -> Arc<CycField> {
        CycField::new(8).unwrap()
    }

    #[test]
    fn identity_multiplication() {
        let f = f8();
        let m = Matrix::from_ints(&f, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i3.mat_mul(&m).unwrap(), m);
        assert_eq!(m.mat_mul(&i3).unwrap(), m);
    }

    #[test]
    fn inverse_round_trip() {
        let f = f8();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap().unwrap();
        assert!(m.mat_mul(&inv).unwrap().is_identity());
        let sing = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().unwrap().is_none());
    }

    #[test]
    fn kron_identities() {
        let f = f8();
        let i2 = Matrix::identity(&f, 2);
        let i3 = Matrix::identity(&f, 3);
        assert!(i2.kron(&i3).unwrap().is_identity());

        // mixed-product property on small matrices
        let a = Matrix::from_ints(&f, &[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&f, &[&[2, 1], &[1, 1]]);
        let c = Matrix::from_ints(&f, &[&[1, 1], &[3, 2]]);
        let d = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        let lhs = a.kron(&b).unwrap().mat_mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mat_mul(&c).unwrap().kron(&b.mat_mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_map_axioms() {
        let f = f8();
        assert!(swap_map(1, 5, &f).is_identity());
        let s22 = swap_map(2, 2, &f);
        assert!(s22.mat_mul(&s22).unwrap().is_identity());
        // inverse law for rectangular swaps
        let s23 = swap_map(2, 3, &f);
        let s32 = swap_map(3, 2, &f);
        assert!(s32.mat_mul(&s23).unwrap().is_identity());
        // naturality: swap . (f (x) g) = (g (x) f) . swap
        let fm = Matrix::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let gm = Matrix::from_ints(&f, &[&[0, 1, 2], &[1, 1, 0], &[2, 0, 1]]);
        let lhs = s23.mat_mul(&fm.kron(&gm).unwrap()).unwrap();
        let rhs = gm.kron(&fm).unwrap().mat_mul(&s23).unwrap();
        assert_eq!(lhs, rhs);
        // swap on basis: (e1 (x) e0) (x) e0 under swap(2,2) (x) id
        let e = |i| Vector::unit(&f, 2, i);
        let v = e(1).kron(&e(0)).unwrap().kron(&e(0)).unwrap();
        let m = s22.kron(&Matrix::identity(&f, 2)).unwrap();
        let w = m.mul_vec(&v).unwrap();
        assert_eq!(w, e(0).kron(&e(1)).unwrap().kron(&e(0)).unwrap());
    }

    #[test]
    fn solver_cases() {
        let f = f8();
        let i = Matrix::identity(&f, 3);
        let b = Vector::new(
            &f,
            vec![
                CycScalar::from_int(&f, 1),
                CycScalar::from_int(&f, 2),
                CycScalar::from_int(&f, 3),
            ],
        )
        .unwrap();
        match solve_linear(&i, &b).unwrap() {
            LinSolve::Solved {
                particular,
                nullspace,
                ..
            } => {
                assert_eq!(particular, b);
                assert!(nullspace.is_empty());
            }
            _ => panic!("expected solution"),
        }

        let z = Matrix::zeros(&f, 2, 2);
        let zero = Vector::zeros(&f, 2);
        match solve_linear(&z, &zero).unwrap() {
            LinSolve::Solved {
                particular,
                nullspace,
                ..
            } => {
                assert!(particular.is_zero());
                assert_eq!(nullspace.len(), 2);
            }
            _ => panic!("expected solution"),
        }

        let b1 = Vector::unit(&f, 2, 0);
        assert!(matches!(
            solve_linear(&z, &b1).unwrap(),
            LinSolve::Inconsistent
        ));

        // residual check on a rank-deficient consistent system
        let a = Matrix::from_ints(&f, &[&[1, 2, 3], &[2, 4, 6]]);
        let rhs = Vector::new(
            &f,
            vec![CycScalar::from_int(&f, 5), CycScalar::from_int(&f, 10)],
        )
        .unwrap();
        match solve_linear(&a, &rhs).unwrap() {
            LinSolve::Solved {
                particular,
                nullspace,
                ..
            } => {
                assert_eq!(a.mul_vec(&particular).unwrap(), rhs);
                assert_eq!(nullspace.len(), 2);
                for v in &nullspace {
                    assert!(a.mul_vec(v).unwrap().is_zero());
                }
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn rational_coefficients_survive_elimination() {
        let f = CycField::new(12).unwrap();
        let half = CycScalar::from_rational(&f, rat(1, 2));
        let third = CycScalar::from_rational(&f, rat(1, 3));
        let a = Matrix::from_rows(
            &f,
            vec![
                vec![half.clone(), third.clone()],
                vec![third, CycScalar::from_rational(&f, rat_int(1))],
            ],
        )
        .unwrap();
        let b = Vector::new(&f, vec![CycScalar::one(&f), CycScalar::zero(&f)]).unwrap();
        match solve_linear(&a, &b).unwrap() {
            LinSolve::Solved { particular, .. } => {
                assert_eq!(a.mul_vec(&particular).unwrap(), b);
            }
            _ => panic!("expected solution"),
        }
    }
}
