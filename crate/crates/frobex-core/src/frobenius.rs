//! Structure-constant presentations of algebras, coalgebras and Frobenius
//! algebras, with exact verification of every axiom.
//!
//! Multiplication is a `d x d^2` matrix whose column `(i, j)` (row-major
//! pairing, `i*d + j`) is the product of basis elements `i` and `j`.
//! Comultiplication is `d^2 x d`, the counit `1 x d`.
//!
//! The axiom checkers work column-by-column instead of forming Kronecker
//! blow-ups, so dimensions up to a few dozen stay cheap.

use std::sync::Arc;

use crate::error::{FrobexError, Result};
use crate::linalg::{solve_linear, LinSolve, Matrix, Vector};
use crate::report::CheckReport;
use crate::scalars::{CycField, CycScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    field: Arc<CycField>,
    dim: usize,
    labels: Vec<String>,
    /// d x d^2 multiplication table.
    m: Matrix,
    /// Unit element, length d.
    u: Vector,
}

impl AlgebraData {
    pub fn new(
        field: &Arc<CycField>,
        labels: Vec<String>,
        m: Matrix,
        u: Vector,
    ) -> Result<AlgebraData> {
        let dim = labels.len();
        if m.rows() != dim || m.cols() != dim * dim {
            return Err(FrobexError::ShapeMismatch {
                what: format!(
                    "multiplication must be {dim} x {}, got {} x {}",
                    dim * dim,
                    m.rows(),
                    m.cols()
                ),
            });
        }
        if u.len() != dim {
            return Err(FrobexError::ShapeMismatch {
                what: "unit length must equal dimension".into(),
            });
        }
        if m.field() != field || u.field() != field {
            return Err(FrobexError::FieldMismatch {
                left: field.conductor(),
                right: m.field().conductor(),
            });
        }
        Ok(AlgebraData {
            field: field.clone(),
            dim,
            labels,
            m,
            u,
        })
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn m(&self) -> &Matrix {
        &self.m
    }
    pub fn u(&self) -> &Vector {
        &self.u
    }

    /// Product of basis elements `i` and `j` as a vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.m.column(i * self.dim + j)
    }

    /// Product of arbitrary elements.
    pub fn mult(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(FrobexError::ShapeMismatch {
                what: "mult operand length".into(),
            });
        }
        let mut out = Vector::zeros(&self.field, self.dim);
        for i in 0..self.dim {
            if a.get(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b.get(j).is_zero() {
                    continue;
                }
                let coef = a.get(i).mul(b.get(j))?;
                for r in 0..self.dim {
                    let s = self.m.get(r, i * self.dim + j);
                    if s.is_zero() {
                        continue;
                    }
                    out.set(r, out.get(r).add(&coef.mul(s)?)?);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    field: Arc<CycField>,
    dim: usize,
    /// d^2 x d comultiplication.
    delta: Matrix,
    /// 1 x d counit.
    eps: Matrix,
}

impl CoalgebraData {
    pub fn new(field: &Arc<CycField>, dim: usize, delta: Matrix, eps: Matrix) -> Result<CoalgebraData> {
        if delta.rows() != dim * dim || delta.cols() != dim {
            return Err(FrobexError::ShapeMismatch {
                what: format!(
                    "comultiplication must be {} x {dim}, got {} x {}",
                    dim * dim,
                    delta.rows(),
                    delta.cols()
                ),
            });
        }
        if eps.rows() != 1 || eps.cols() != dim {
            return Err(FrobexError::ShapeMismatch {
                what: "counit must be 1 x dim".into(),
            });
        }
        Ok(CoalgebraData {
            field: field.clone(),
            dim,
            delta,
            eps,
        })
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }
    pub fn eps(&self) -> &Matrix {
        &self.eps
    }

    pub fn eps_of(&self, v: &Vector) -> Result<CycScalar> {
        let mut acc = CycScalar::zero(&self.field);
        for i in 0..self.dim {
            if v.get(i).is_zero() {
                continue;
            }
            acc = acc.add(&self.eps.get(0, i).mul(v.get(i))?)?;
        }
        Ok(acc)
    }

    pub fn delta_of(&self, v: &Vector) -> Result<Vector> {
        self.delta.mul_vec(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobAlgebra {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
}

impl FrobAlgebra {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<FrobAlgebra> {
        if algebra.dim != coalgebra.dim {
            return Err(FrobexError::ShapeMismatch {
                what: "algebra/coalgebra dimension mismatch".into(),
            });
        }
        if algebra.field != coalgebra.field {
            return Err(FrobexError::FieldMismatch {
                left: algebra.field.conductor(),
                right: coalgebra.field.conductor(),
            });
        }
        Ok(FrobAlgebra { algebra, coalgebra })
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.algebra.field
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.algebra.labels
    }
    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }
    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }
    pub fn m(&self) -> &Matrix {
        &self.algebra.m
    }
    pub fn u(&self) -> &Vector {
        &self.algebra.u
    }
    pub fn delta(&self) -> &Matrix {
        &self.coalgebra.delta
    }
    pub fn eps(&self) -> &Matrix {
        &self.coalgebra.eps
    }

    pub fn mult(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.algebra.mult(a, b)
    }

    /// Rescales the coalgebra side: `delta -> factor * delta`. Used to turn
    /// matrix algebras into separable Frobenius algebras.
    pub fn rescale_delta(&self, factor: &CycScalar) -> Result<FrobAlgebra> {
        let inv = factor.inverse()?;
        let delta = self.coalgebra.delta.scale(factor)?;
        // keep the pairing counital: eps scales by the inverse
        let eps = self.coalgebra.eps.scale(&inv)?;
        Ok(FrobAlgebra {
            algebra: self.algebra.clone(),
            coalgebra: CoalgebraData::new(&self.algebra.field, self.algebra.dim, delta, eps)?,
        })
    }

    pub fn embed_into(&self, target: &Arc<CycField>) -> Result<FrobAlgebra> {
        Ok(FrobAlgebra {
            algebra: AlgebraData::new(
                target,
                self.algebra.labels.clone(),
                self.algebra.m.embed(target)?,
                self.algebra.u.embed(target)?,
            )?,
            coalgebra: CoalgebraData::new(
                target,
                self.algebra.dim,
                self.coalgebra.delta.embed(target)?,
                self.coalgebra.eps.embed(target)?,
            )?,
        })
    }
}

fn witness(labels: &[String], idx: &[usize]) -> String {
    idx.iter()
        .map(|&i| labels.get(i).cloned().unwrap_or_else(|| format!("b{i}")))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Associativity and unitality, reported per axiom with the first violating
/// basis tuple.
pub fn check_algebra(a: &AlgebraData) -> Result<CheckReport> {
    let d = a.dim;
    let mut report = CheckReport::new("algebra");

    let mut assoc_witness = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            let ij = a.basis_product(i, j);
            for k in 0..d {
                // (b_i b_j) b_k vs b_i (b_j b_k)
                let left = a.mult(&ij, &Vector::unit(&a.field, d, k))?;
                let jk = a.basis_product(j, k);
                let right = a.mult(&Vector::unit(&a.field, d, i), &jk)?;
                if left != right {
                    assoc_witness = Some(vec![i, j, k]);
                    break 'assoc;
                }
            }
        }
    }
    match assoc_witness {
        None => report.push_ok("associativity"),
        Some(w) => report.push_fail(
            "associativity",
            format!("first violating triple: ({})", witness(&a.labels, &w)),
        ),
    }

    let mut unit_witness = None;
    for i in 0..d {
        let e = Vector::unit(&a.field, d, i);
        if a.mult(&a.u, &e)? != e || a.mult(&e, &a.u)? != e {
            unit_witness = Some(vec![i]);
            break;
        }
    }
    match unit_witness {
        None => report.push_ok("unitality"),
        Some(w) => report.push_fail(
            "unitality",
            format!("unit fails on basis element {}", witness(&a.labels, &w)),
        ),
    }
    Ok(report)
}

/// Coassociativity and counitality.
pub fn check_coalgebra(c: &CoalgebraData) -> Result<CheckReport> {
    let d = c.dim;
    let f = &c.field;
    let mut report = CheckReport::new("coalgebra");

    let mut coassoc_witness = None;
    for col in 0..d {
        // (Delta (x) id) Delta(b_col) vs (id (x) Delta) Delta(b_col), both in
        // the d^3 space indexed (p, q, r) -> (p*d + q)*d + r.
        let dc = c.delta.column(col);
        let mut left = vec![CycScalar::zero(f); d * d * d];
        let mut right = vec![CycScalar::zero(f); d * d * d];
        for p in 0..d {
            for q in 0..d {
                let coef = dc.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                let dp = c.delta.column(p);
                for s in 0..d {
                    for t in 0..d {
                        let v = dp.get(s * d + t);
                        if v.is_zero() {
                            continue;
                        }
                        let idx = (s * d + t) * d + q;
                        left[idx] = left[idx].add(&coef.mul(v)?)?;
                    }
                }
                let dq = c.delta.column(q);
                for s in 0..d {
                    for t in 0..d {
                        let v = dq.get(s * d + t);
                        if v.is_zero() {
                            continue;
                        }
                        let idx = (p * d + s) * d + t;
                        right[idx] = right[idx].add(&coef.mul(v)?)?;
                    }
                }
            }
        }
        if left != right {
            coassoc_witness = Some(col);
            break;
        }
    }
    match coassoc_witness {
        None => report.push_ok("coassociativity"),
        Some(col) => report.push_fail("coassociativity", format!("fails on basis column {col}")),
    }

    let mut counit_witness = None;
    for col in 0..d {
        let dc = c.delta.column(col);
        let mut left = Vector::zeros(f, d);
        let mut right = Vector::zeros(f, d);
        for p in 0..d {
            for q in 0..d {
                let coef = dc.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                // (eps (x) id): eps(b_p) * b_q ; (id (x) eps): eps(b_q) * b_p
                left.set(q, left.get(q).add(&coef.mul(c.eps.get(0, p))?)?);
                right.set(p, right.get(p).add(&coef.mul(c.eps.get(0, q))?)?);
            }
        }
        let e = Vector::unit(f, d, col);
        if left != e || right != e {
            counit_witness = Some(col);
            break;
        }
    }
    match counit_witness {
        None => report.push_ok("counitality"),
        Some(col) => report.push_fail("counitality", format!("fails on basis column {col}")),
    }
    Ok(report)
}

/// The three-way Frobenius law `(m (x) id)(id (x) Delta) = Delta m =
/// (id (x) m)(Delta (x) id)`, checked pairwise on every basis pair.
pub fn check_frobenius_law(fa: &FrobAlgebra) -> Result<CheckReport> {
    let d = fa.dim();
    let f = fa.field();
    let mut report = CheckReport::new("frobenius law");
    let mut fail = None;
    'outer: for c1 in 0..d {
        for c2 in 0..d {
            // middle: Delta(b_c1 * b_c2)
            let prod = fa.algebra.basis_product(c1, c2);
            let middle = fa.coalgebra.delta_of(&prod)?;

            // left: (m (x) id)(id (x) Delta) (b_c1 (x) b_c2)
            let mut left = Vector::zeros(f, d * d);
            let dc2 = fa.delta().column(c2);
            for p in 0..d {
                for q in 0..d {
                    let coef = dc2.get(p * d + q);
                    if coef.is_zero() {
                        continue;
                    }
                    let mp = fa.algebra.basis_product(c1, p);
                    for r in 0..d {
                        if mp.get(r).is_zero() {
                            continue;
                        }
                        let idx = r * d + q;
                        left.set(idx, left.get(idx).add(&coef.mul(mp.get(r))?)?);
                    }
                }
            }

            // right: (id (x) m)(Delta (x) id) (b_c1 (x) b_c2)
            let mut right = Vector::zeros(f, d * d);
            let dc1 = fa.delta().column(c1);
            for p in 0..d {
                for q in 0..d {
                    let coef = dc1.get(p * d + q);
                    if coef.is_zero() {
                        continue;
                    }
                    let mq = fa.algebra.basis_product(q, c2);
                    for r in 0..d {
                        if mq.get(r).is_zero() {
                            continue;
                        }
                        let idx = p * d + r;
                        right.set(idx, right.get(idx).add(&coef.mul(mq.get(r))?)?);
                    }
                }
            }

            if left != middle || middle != right || left != right {
                fail = Some((c1, c2));
                break 'outer;
            }
        }
    }
    match fail {
        None => report.push_ok("frobenius law (three-way)"),
        Some((i, j)) => report.push_fail(
            "frobenius law (three-way)",
            format!("fails on basis pair ({})", witness(fa.labels(), &[i, j])),
        ),
    }
    Ok(report)
}

/// Full Frobenius-algebra verification: algebra, coalgebra, Frobenius law.
pub fn check_frobenius(fa: &FrobAlgebra) -> Result<CheckReport> {
    let mut report = CheckReport::new("frobenius algebra");
    report.merge(check_algebra(&fa.algebra)?);
    report.merge(check_coalgebra(&fa.coalgebra)?);
    report.merge(check_frobenius_law(fa)?);
    Ok(report)
}

/// `m . Delta = id`.
pub fn check_separable(fa: &FrobAlgebra) -> Result<bool> {
    let d = fa.dim();
    for col in 0..d {
        let dc = fa.delta().column(col);
        let mut acc = Vector::zeros(fa.field(), d);
        for p in 0..d {
            for q in 0..d {
                let coef = dc.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                let prod = fa.algebra.basis_product(p, q);
                for r in 0..d {
                    if prod.get(r).is_zero() {
                        continue;
                    }
                    acc.set(r, acc.get(r).add(&coef.mul(prod.get(r))?)?);
                }
            }
        }
        if acc != Vector::unit(fa.field(), d, col) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the comultiplication determined by `Delta(1)`: column `j` is
/// `(m (x) id)(b_j (x) delta_one)`, so `Delta(a) = a . Delta(1)` acting on
/// the left tensor leg.
pub fn delta_from_delta_one(a: &AlgebraData, delta_one: &Vector) -> Result<Matrix> {
    let d = a.dim;
    if delta_one.len() != d * d {
        return Err(FrobexError::ShapeMismatch {
            what: "delta_one must have length dim^2".into(),
        });
    }
    let mut delta = Matrix::zeros(&a.field, d * d, d);
    for j in 0..d {
        for p in 0..d {
            for q in 0..d {
                let coef = delta_one.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                let prod = a.basis_product(j, p);
                for r in 0..d {
                    if prod.get(r).is_zero() {
                        continue;
                    }
                    let idx = r * d + q;
                    let cur = delta.get(idx, j).add(&coef.mul(prod.get(r))?)?;
                    delta.set(idx, j, cur);
                }
            }
        }
    }
    Ok(delta)
}

/// Outcome of solving counitality for a counit candidate.
pub enum CounitSolution {
    Unique(Matrix),
    /// A particular counit plus free directions (the data does not pin eps).
    Ambiguous(Matrix, usize),
    Inconsistent,
}

/// Solves `(eps (x) id) Delta = id` for the counit row vector.
pub fn solve_counit(field: &Arc<CycField>, dim: usize, delta: &Matrix) -> Result<CounitSolution> {
    let d = dim;
    // unknowns: eps_k, k in 0..d; equations indexed (r, c):
    //   sum_k Delta[(k*d + r), c] * eps_k = delta_{r,c}
    let mut a = Matrix::zeros(field, d * d, d);
    let mut b = Vector::zeros(field, d * d);
    for r in 0..d {
        for c in 0..d {
            let row = r * d + c;
            for k in 0..d {
                a.set(row, k, delta.get(k * d + r, c).clone());
            }
            if r == c {
                b.set(row, CycScalar::one(field));
            }
        }
    }
    match solve_linear(&a, &b)? {
        LinSolve::Inconsistent => Ok(CounitSolution::Inconsistent),
        LinSolve::Solved {
            particular,
            nullspace,
            ..
        } => {
            let mut eps = Matrix::zeros(field, 1, d);
            for k in 0..d {
                eps.set(0, k, particular.get(k).clone());
            }
            if nullspace.is_empty() {
                Ok(CounitSolution::Unique(eps))
            } else {
                Ok(CounitSolution::Ambiguous(eps, nullspace.len()))
            }
        }
    }
}

/// The pairing `eps . m` as a d x d matrix; invertibility witnesses
/// nondegeneracy of a Frobenius form.
pub fn pairing_matrix(fa: &FrobAlgebra) -> Result<Matrix> {
    let d = fa.dim();
    let mut p = Matrix::zeros(fa.field(), d, d);
    for i in 0..d {
        for j in 0..d {
            let prod = fa.algebra.basis_product(i, j);
            p.set(i, j, fa.coalgebra.eps_of(&prod)?);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalars::CycField;

    #[test]
    fn base_field_is_a_frobenius_algebra() {
        let f = CycField::new(1).unwrap();
        let a = AlgebraData::new(
            &f,
            vec!["1".into()],
            Matrix::identity(&f, 1),
            Vector::unit(&f, 1, 0),
        )
        .unwrap();
        assert!(check_algebra(&a).unwrap().passed());
        let c = CoalgebraData::new(&f, 1, Matrix::identity(&f, 1), Matrix::identity(&f, 1)).unwrap();
        let fa = FrobAlgebra::new(a, c).unwrap();
        assert!(check_frobenius(&fa).unwrap().passed());
        assert!(check_separable(&fa).unwrap());
    }

    #[test]
    fn corrupted_group_algebra_fails_with_witness() {
        let f = CycField::new(8).unwrap();
        let c2 = catalog::GroupTable::cyclic(2).unwrap();
        let fa = catalog::group_algebra(&c2, &f).unwrap();
        assert!(check_frobenius(&fa).unwrap().passed());

        // g*g := g keeps a unital associative monoid but breaks the
        // Frobenius law against the group comultiplication
        let mut m = fa.m().clone();
        let d = fa.dim();
        m.set_column(1 * d + 1, &Vector::unit(&f, d, 1));
        let bad_alg = AlgebraData::new(&f, fa.labels().to_vec(), m, fa.u().clone()).unwrap();
        assert!(check_algebra(&bad_alg).unwrap().passed());
        let bad = FrobAlgebra::new(bad_alg, fa.coalgebra().clone()).unwrap();
        let rep = check_frobenius(&bad).unwrap();
        assert!(!rep.passed());
        assert!(rep.first_failure().unwrap().detail.is_some());

        // breaking the unit column is caught with a witness
        let mut m2 = fa.m().clone();
        m2.set_column(1, &Vector::unit(&f, d, 0)); // e * g := e
        let bad2 = AlgebraData::new(&f, fa.labels().to_vec(), m2, fa.u().clone()).unwrap();
        let rep2 = check_algebra(&bad2).unwrap();
        assert!(!rep2.passed());
        assert!(rep2.first_failure().unwrap().detail.is_some());
    }

    #[test]
    fn counitality_failure_is_detected() {
        // kC2 with eps(e) = eps(g) = 1 breaks counitality.
        let f = CycField::new(8).unwrap();
        let c2 = catalog::GroupTable::cyclic(2).unwrap();
        let fa = catalog::group_algebra(&c2, &f).unwrap();
        let mut eps = fa.eps().clone();
        eps.set(0, 1, CycScalar::one(&f));
        let co = CoalgebraData::new(&f, fa.dim(), fa.delta().clone(), eps).unwrap();
        let rep = check_coalgebra(&co).unwrap();
        assert!(!rep.passed());
        assert_eq!(rep.first_failure().unwrap().name, "counitality");
    }

    #[test]
    fn dual_numbers_are_frobenius_but_not_separable() {
        let f = CycField::new(4).unwrap();
        let fa = catalog::nilpotent_algebra(2, &f).unwrap();
        assert!(check_frobenius(&fa).unwrap().passed());
        assert!(!check_separable(&fa).unwrap());
    }

    #[test]
    fn pairing_is_invertible_on_catalog_algebras() {
        let f = CycField::new(8).unwrap();
        let c2 = catalog::GroupTable::cyclic(2).unwrap();
        let fa = catalog::group_algebra(&c2, &f).unwrap();
        assert!(pairing_matrix(&fa).unwrap().is_invertible().unwrap());
        let nil = catalog::nilpotent_algebra(3, &CycField::new(12).unwrap()).unwrap();
        assert!(pairing_matrix(&nil).unwrap().is_invertible().unwrap());
    }
}
