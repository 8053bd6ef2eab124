//! Monoidal products of extended Frobenius algebras and finite realizations
//! of extended Frobenius monoidal functors on vector spaces.
//!
//! A realized functor carries explicit matrix evaluators for its structure
//! morphisms at any requested object dimensions; the checkers verify the
//! functor axioms as exact matrix equalities on a finite object sample.

use std::sync::Arc;

use crate::error::{FrobexError, Result};
use crate::extended::{check_extended, ExtFrobAlgebra};
use crate::frobenius::{AlgebraData, CoalgebraData, FrobAlgebra};
use crate::linalg::{swap_map, Matrix};
use crate::report::CheckReport;
use crate::rng::SplitMix64;
use crate::scalars::CycField;

// ---------------------------------------------------------------------------
// Monoidal products of extended Frobenius algebras
// ---------------------------------------------------------------------------

/// Tensor product: `m = (m_A (x) m_B)(id (x) c (x) id)`, unit `u_A (x) u_B`,
/// `Delta = (id (x) c (x) id)(Delta_A (x) Delta_B)`, `eps = eps_A (x) eps_B`,
/// `phi = phi_A (x) phi_B`, `theta = theta_A (x) theta_B`.
pub fn tensor_product_ext(a: &ExtFrobAlgebra, b: &ExtFrobAlgebra) -> Result<ExtFrobAlgebra> {
    if a.field() != b.field() {
        return Err(FrobexError::FieldMismatch {
            left: a.field().conductor(),
            right: b.field().conductor(),
        });
    }
    let f = a.field();
    let da = a.dim();
    let db = b.dim();
    let d = da * db;
    let idx = |p: usize, q: usize| p * db + q;

    let mut m = Matrix::zeros(f, d, d * d);
    for p1 in 0..da {
        for q1 in 0..db {
            for p2 in 0..da {
                for q2 in 0..db {
                    let col = idx(p1, q1) * d + idx(p2, q2);
                    let ma = a.frob.algebra().basis_product(p1, p2);
                    let mb = b.frob.algebra().basis_product(q1, q2);
                    for r1 in 0..da {
                        if ma.get(r1).is_zero() {
                            continue;
                        }
                        for r2 in 0..db {
                            if mb.get(r2).is_zero() {
                                continue;
                            }
                            m.set(idx(r1, r2), col, ma.get(r1).mul(mb.get(r2))?);
                        }
                    }
                }
            }
        }
    }
    let u = a.frob.u().kron(b.frob.u())?;
    let labels = (0..da)
        .flat_map(|p| {
            (0..db).map(move |q| (p, q))
        })
        .map(|(p, q)| format!("{}(x){}", a.frob.labels()[p], b.frob.labels()[q]))
        .collect();
    let algebra = AlgebraData::new(f, labels, m, u)?;

    let mut delta = Matrix::zeros(f, d * d, d);
    for p in 0..da {
        for q in 0..db {
            let col = idx(p, q);
            let dpa = a.frob.delta().column(p);
            let dqb = b.frob.delta().column(q);
            for s1 in 0..da {
                for t1 in 0..da {
                    let ca = dpa.get(s1 * da + t1);
                    if ca.is_zero() {
                        continue;
                    }
                    for s2 in 0..db {
                        for t2 in 0..db {
                            let cb = dqb.get(s2 * db + t2);
                            if cb.is_zero() {
                                continue;
                            }
                            let row = idx(s1, s2) * d + idx(t1, t2);
                            delta.set(row, col, delta.get(row, col).add(&ca.mul(cb)?)?);
                        }
                    }
                }
            }
        }
    }
    let mut eps = Matrix::zeros(f, 1, d);
    for p in 0..da {
        for q in 0..db {
            eps.set(
                0,
                idx(p, q),
                a.frob.eps().get(0, p).mul(b.frob.eps().get(0, q))?,
            );
        }
    }
    let coalgebra = CoalgebraData::new(f, d, delta, eps)?;
    let frob = FrobAlgebra::new(algebra, coalgebra)?;
    let phi = a.phi().kron(b.phi())?;
    let theta = a.theta().kron(b.theta())?;
    ExtFrobAlgebra::new(frob, phi, theta)
}

/// Biproduct: block-diagonal multiplication and comultiplication, summed
/// units/counits, `phi = phi_A (+) phi_B`, `theta = theta_A (+) theta_B`.
pub fn biproduct_ext(a: &ExtFrobAlgebra, b: &ExtFrobAlgebra) -> Result<ExtFrobAlgebra> {
    if a.field() != b.field() {
        return Err(FrobexError::FieldMismatch {
            left: a.field().conductor(),
            right: b.field().conductor(),
        });
    }
    let f = a.field();
    let da = a.dim();
    let db = b.dim();
    let d = da + db;

    let mut m = Matrix::zeros(f, d, d * d);
    for i in 0..da {
        for j in 0..da {
            let col = i * d + j;
            let prod = a.frob.algebra().basis_product(i, j);
            for r in 0..da {
                if !prod.get(r).is_zero() {
                    m.set(r, col, prod.get(r).clone());
                }
            }
        }
    }
    for i in 0..db {
        for j in 0..db {
            let col = (da + i) * d + (da + j);
            let prod = b.frob.algebra().basis_product(i, j);
            for r in 0..db {
                if !prod.get(r).is_zero() {
                    m.set(da + r, col, prod.get(r).clone());
                }
            }
        }
    }
    let u = a.frob.u().concat(b.frob.u())?;
    let mut labels: Vec<String> = a
        .frob
        .labels()
        .iter()
        .map(|l| format!("A.{l}"))
        .collect();
    labels.extend(b.frob.labels().iter().map(|l| format!("B.{l}")));
    let algebra = AlgebraData::new(f, labels, m, u)?;

    let mut delta = Matrix::zeros(f, d * d, d);
    for c in 0..da {
        let dc = a.frob.delta().column(c);
        for p in 0..da {
            for q in 0..da {
                let v = dc.get(p * da + q);
                if !v.is_zero() {
                    delta.set(p * d + q, c, v.clone());
                }
            }
        }
    }
    for c in 0..db {
        let dc = b.frob.delta().column(c);
        for p in 0..db {
            for q in 0..db {
                let v = dc.get(p * db + q);
                if !v.is_zero() {
                    delta.set((da + p) * d + (da + q), da + c, v.clone());
                }
            }
        }
    }
    let mut eps = Matrix::zeros(f, 1, d);
    for c in 0..da {
        eps.set(0, c, a.frob.eps().get(0, c).clone());
    }
    for c in 0..db {
        eps.set(0, da + c, b.frob.eps().get(0, c).clone());
    }
    let coalgebra = CoalgebraData::new(f, d, delta, eps)?;
    let frob = FrobAlgebra::new(algebra, coalgebra)?;
    let phi = a.phi().direct_sum(b.phi())?;
    let theta = a.theta().concat(b.theta())?;
    ExtFrobAlgebra::new(frob, phi, theta)
}

// ---------------------------------------------------------------------------
// Realized functors
// ---------------------------------------------------------------------------

/// Finite realization of an extended Frobenius monoidal endofunctor on
/// vector spaces: tensoring with a fixed extended Frobenius algebra,
/// forming a biproduct with one, or a composition.
#[derive(Clone, Debug)]
pub enum RealizedFunctor {
    TensorWith(ExtFrobAlgebra),
    BiproductWith(ExtFrobAlgebra),
    Compose(Box<RealizedFunctor>, Box<RealizedFunctor>), // outer, inner
}

/// Finite witness data for the functor checks: object dimensions plus
/// sample morphisms for the naturality squares.
#[derive(Clone, Debug)]
pub struct ObjectSample {
    pub dims: Vec<usize>,
    pub morphisms: Vec<(usize, usize, Matrix)>,
}

impl ObjectSample {
    /// Default sample: the given dims with `per_pair` random morphisms for
    /// every ordered dim pair, generated from the seed.
    pub fn generate(field: &Arc<CycField>, dims: &[usize], per_pair: usize, seed: u64) -> ObjectSample {
        let mut rng = SplitMix64::new(seed);
        let mut morphisms = Vec::new();
        for &a in dims {
            for &b in dims {
                for _ in 0..per_pair {
                    morphisms.push((a, b, rng.matrix(field, b, a)));
                }
            }
        }
        ObjectSample {
            dims: dims.to_vec(),
            morphisms,
        }
    }
}

impl RealizedFunctor {
    pub fn field(&self) -> &Arc<CycField> {
        match self {
            RealizedFunctor::TensorWith(b) | RealizedFunctor::BiproductWith(b) => b.field(),
            RealizedFunctor::Compose(outer, _) => outer.field(),
        }
    }

    /// Object map on dimensions.
    pub fn map_dim(&self, d: usize) -> usize {
        match self {
            RealizedFunctor::TensorWith(b) => d * b.dim(),
            RealizedFunctor::BiproductWith(b) => d + b.dim(),
            RealizedFunctor::Compose(outer, inner) => outer.map_dim(inner.map_dim(d)),
        }
    }

    /// Morphism map: `f: X -> Y` to `F(f): F(X) -> F(Y)`.
    pub fn map_morphism(&self, f: &Matrix) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(b) => {
                f.kron(&Matrix::identity(b.field(), b.dim()))
            }
            RealizedFunctor::BiproductWith(b) => {
                f.direct_sum(&Matrix::identity(b.field(), b.dim()))
            }
            RealizedFunctor::Compose(outer, inner) => outer.map_morphism(&inner.map_morphism(f)?),
        }
    }

    /// Monoidal structure `F2_{x,y}: F(X) (x) F(Y) -> F(X (x) Y)`.
    pub fn f2(&self, x: usize, y: usize) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                // (id_{X (x) Y} (x) m_B)(id_X (x) c_{B,Y} (x) id_B)
                let swap = swap_map(b, y, f);
                let stage1 = Matrix::identity(f, x)
                    .kron(&swap)?
                    .kron(&Matrix::identity(f, b))?;
                let stage2 = Matrix::identity(f, x * y).kron(alg.frob.m())?;
                stage2.mat_mul(&stage1)
            }
            RealizedFunctor::BiproductWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                // (X (+) B) (x) (Y (+) B) -> (X (x) Y) (+) B:
                // project the X(x)Y block, multiply the B(x)B block.
                let mut out = Matrix::zeros(f, x * y + b, (x + b) * (y + b));
                for i in 0..x {
                    for j in 0..y {
                        out.set(
                            i * y + j,
                            i * (y + b) + j,
                            crate::scalars::CycScalar::one(f),
                        );
                    }
                }
                for p in 0..b {
                    for q in 0..b {
                        let col = (x + p) * (y + b) + (y + q);
                        for r in 0..b {
                            let v = alg.frob.m().get(r, p * b + q);
                            if !v.is_zero() {
                                out.set(x * y + r, col, v.clone());
                            }
                        }
                    }
                }
                Ok(out)
            }
            RealizedFunctor::Compose(outer, inner) => {
                // (GF)2_{x,y} = G(F2_{x,y}) . G2_{F(x),F(y)}
                let g2 = outer.f2(inner.map_dim(x), inner.map_dim(y))?;
                let gf2 = outer.map_morphism(&inner.f2(x, y)?)?;
                gf2.mat_mul(&g2)
            }
        }
    }

    /// `F0: 1 -> F(1)` as a column matrix.
    pub fn f0(&self) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(alg) => Ok(alg.frob.u().as_column()),
            RealizedFunctor::BiproductWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                let mut out = Matrix::zeros(f, 1 + b, 1);
                out.set(0, 0, crate::scalars::CycScalar::one(f));
                for r in 0..b {
                    out.set(1 + r, 0, alg.frob.u().get(r).clone());
                }
                Ok(out)
            }
            RealizedFunctor::Compose(outer, inner) => {
                // (GF)0 = G(F0) . G0
                outer.map_morphism(&inner.f0()?)?.mat_mul(&outer.f0()?)
            }
        }
    }

    /// Comonoidal structure `F_2^{x,y}: F(X (x) Y) -> F(X) (x) F(Y)`.
    pub fn f2_co(&self, x: usize, y: usize) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                // (id_X (x) c_{Y,B} (x) id_B)(id_{X (x) Y} (x) Delta_B)
                let stage1 = Matrix::identity(f, x * y).kron(alg.frob.delta())?;
                let swap = swap_map(y, b, f);
                let stage2 = Matrix::identity(f, x)
                    .kron(&swap)?
                    .kron(&Matrix::identity(f, b))?;
                stage2.mat_mul(&stage1)
            }
            RealizedFunctor::BiproductWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                // (X (x) Y) (+) B -> (X (+) B) (x) (Y (+) B):
                // include the X(x)Y block, comultiply B into the B(x)B block.
                let mut out = Matrix::zeros(f, (x + b) * (y + b), x * y + b);
                for i in 0..x {
                    for j in 0..y {
                        out.set(
                            i * (y + b) + j,
                            i * y + j,
                            crate::scalars::CycScalar::one(f),
                        );
                    }
                }
                for c in 0..b {
                    let dc = alg.frob.delta().column(c);
                    for p in 0..b {
                        for q in 0..b {
                            let v = dc.get(p * b + q);
                            if !v.is_zero() {
                                out.set((x + p) * (y + b) + (y + q), x * y + c, v.clone());
                            }
                        }
                    }
                }
                Ok(out)
            }
            RealizedFunctor::Compose(outer, inner) => {
                // (GF)_2 = G_2^{F(x),F(y)} . G(F_2)
                let g2co = outer.f2_co(inner.map_dim(x), inner.map_dim(y))?;
                let gf2co = outer.map_morphism(&inner.f2_co(x, y)?)?;
                g2co.mat_mul(&gf2co)
            }
        }
    }

    /// `F_0: F(1) -> 1` as a row matrix.
    pub fn f0_co(&self) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(alg) => Ok(alg.frob.eps().clone()),
            RealizedFunctor::BiproductWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                let mut out = Matrix::zeros(f, 1, 1 + b);
                out.set(0, 0, crate::scalars::CycScalar::one(f));
                for c in 0..b {
                    out.set(0, 1 + c, alg.frob.eps().get(0, c).clone());
                }
                Ok(out)
            }
            RealizedFunctor::Compose(outer, inner) => {
                // (GF)_0 = G_0 . G(F_0)
                outer.f0_co()?.mat_mul(&outer.map_morphism(&inner.f0_co()?)?)
            }
        }
    }

    /// The involutive natural transformation `Fhat_X: F(X) -> F(X)`.
    pub fn fhat(&self, x: usize) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(alg) => {
                Matrix::identity(alg.field(), x).kron(alg.phi())
            }
            RealizedFunctor::BiproductWith(alg) => {
                Matrix::identity(alg.field(), x).direct_sum(alg.phi())
            }
            RealizedFunctor::Compose(outer, inner) => {
                // (GF)hat_X = G(Fhat_X) . Ghat_{F(X)}
                let ghat = outer.fhat(inner.map_dim(x))?;
                outer.map_morphism(&inner.fhat(x)?)?.mat_mul(&ghat)
            }
        }
    }

    /// `Fcheck: 1 -> F(1)` as a column matrix.
    pub fn fcheck(&self) -> Result<Matrix> {
        match self {
            RealizedFunctor::TensorWith(alg) => Ok(alg.theta().as_column()),
            RealizedFunctor::BiproductWith(alg) => {
                let f = alg.field();
                let b = alg.dim();
                let mut out = Matrix::zeros(f, 1 + b, 1);
                out.set(0, 0, crate::scalars::CycScalar::one(f));
                for r in 0..b {
                    out.set(1 + r, 0, alg.theta().get(r).clone());
                }
                Ok(out)
            }
            RealizedFunctor::Compose(outer, inner) => {
                // (GF)check = G(Fcheck) . Gcheck
                outer
                    .map_morphism(&inner.fcheck()?)?
                    .mat_mul(&outer.fcheck()?)
            }
        }
    }
}

pub enum FunctorKind {
    Tensor,
    Biproduct,
}

/// Builds a realized functor from a verified extended Frobenius algebra.
pub fn realize_functor(kind: FunctorKind, b: &ExtFrobAlgebra) -> Result<RealizedFunctor> {
    let rep = check_extended(b)?;
    if !rep.passed() {
        return Err(FrobexError::Precondition {
            what: "functor carrier fails the extended axioms".into(),
        });
    }
    Ok(match kind {
        FunctorKind::Tensor => RealizedFunctor::TensorWith(b.clone()),
        FunctorKind::Biproduct => RealizedFunctor::BiproductWith(b.clone()),
    })
}

// ---------------------------------------------------------------------------
// Functor axiom checks
// ---------------------------------------------------------------------------

/// Monoidal and comonoidal constraints, the two Frobenius conditions, and
/// the naturality squares against the sample morphisms.
pub fn check_frobenius_functor(fr: &RealizedFunctor, sample: &ObjectSample) -> Result<CheckReport> {
    let field = fr.field().clone();
    let mut report = CheckReport::new("frobenius monoidal functor");
    let id = |d: usize| Matrix::identity(&field, d);

    let mut assoc = true;
    let mut co_assoc = true;
    let mut frob1 = true;
    let mut frob2 = true;
    let mut detail = None;
    'triples: for &x in &sample.dims {
        for &y in &sample.dims {
            for &z in &sample.dims {
                // monoidal associativity
                let lhs = fr
                    .f2(x * y, z)?
                    .mat_mul(&fr.f2(x, y)?.kron(&id(fr.map_dim(z)))?)?;
                let rhs = fr
                    .f2(x, y * z)?
                    .mat_mul(&id(fr.map_dim(x)).kron(&fr.f2(y, z)?)?)?;
                if lhs != rhs {
                    assoc = false;
                    detail = Some(format!("monoidal associativity at ({x},{y},{z})"));
                    break 'triples;
                }
                // comonoidal coassociativity
                let lhs = fr
                    .f2_co(x, y)?
                    .kron(&id(fr.map_dim(z)))?
                    .mat_mul(&fr.f2_co(x * y, z)?)?;
                let rhs = id(fr.map_dim(x))
                    .kron(&fr.f2_co(y, z)?)?
                    .mat_mul(&fr.f2_co(x, y * z)?)?;
                if lhs != rhs {
                    co_assoc = false;
                    detail = Some(format!("comonoidal coassociativity at ({x},{y},{z})"));
                    break 'triples;
                }
                // Frobenius conditions
                let lhs = fr
                    .f2(x, y)?
                    .kron(&id(fr.map_dim(z)))?
                    .mat_mul(&id(fr.map_dim(x)).kron(&fr.f2_co(y, z)?)?)?;
                let rhs = fr.f2_co(x * y, z)?.mat_mul(&fr.f2(x, y * z)?)?;
                if lhs != rhs {
                    frob1 = false;
                    detail = Some(format!("first frobenius condition at ({x},{y},{z})"));
                    break 'triples;
                }
                let lhs = id(fr.map_dim(x))
                    .kron(&fr.f2(y, z)?)?
                    .mat_mul(&fr.f2_co(x, y)?.kron(&id(fr.map_dim(z)))?)?;
                let rhs = fr.f2_co(x, y * z)?.mat_mul(&fr.f2(x * y, z)?)?;
                if lhs != rhs {
                    frob2 = false;
                    detail = Some(format!("second frobenius condition at ({x},{y},{z})"));
                    break 'triples;
                }
            }
        }
    }
    report.push("monoidal associativity", assoc, None);
    report.push("comonoidal coassociativity", co_assoc, None);
    report.push("frobenius condition (left)", frob1, detail.clone());
    report.push("frobenius condition (right)", frob2, detail);

    let mut unit_ok = true;
    for &x in &sample.dims {
        // F2_{1,x} (F0 (x) id) = id = F2_{x,1} (id (x) F0)
        let left = fr.f2(1, x)?.mat_mul(&fr.f0()?.kron(&id(fr.map_dim(x)))?)?;
        let right = fr.f2(x, 1)?.mat_mul(&id(fr.map_dim(x)).kron(&fr.f0()?)?)?;
        if !left.is_identity() || !right.is_identity() {
            unit_ok = false;
            break;
        }
    }
    report.push("monoidal unitality", unit_ok, None);

    let mut counit_ok = true;
    for &x in &sample.dims {
        let left = fr.f0_co()?.kron(&id(fr.map_dim(x)))?.mat_mul(&fr.f2_co(1, x)?)?;
        let right = id(fr.map_dim(x)).kron(&fr.f0_co()?)?.mat_mul(&fr.f2_co(x, 1)?)?;
        if !left.is_identity() || !right.is_identity() {
            counit_ok = false;
            break;
        }
    }
    report.push("comonoidal counitality", counit_ok, None);

    let mut natural = true;
    'pairs: for (sx, tx, fm) in &sample.morphisms {
        for (sy, ty, gm) in &sample.morphisms {
            // F(f (x) g) . F2 = F2 . (F(f) (x) F(g))
            let lhs = fr
                .map_morphism(&fm.kron(gm)?)?
                .mat_mul(&fr.f2(*sx, *sy)?)?;
            let rhs = fr
                .f2(*tx, *ty)?
                .mat_mul(&fr.map_morphism(fm)?.kron(&fr.map_morphism(gm)?)?)?;
            if lhs != rhs {
                natural = false;
                break 'pairs;
            }
            let lhs = fr
                .f2_co(*tx, *ty)?
                .mat_mul(&fr.map_morphism(&fm.kron(gm)?)?)?;
            let rhs = fr
                .map_morphism(fm)?
                .kron(&fr.map_morphism(gm)?)?
                .mat_mul(&fr.f2_co(*sx, *sy)?)?;
            if lhs != rhs {
                natural = false;
                break 'pairs;
            }
        }
    }
    report.push("naturality of the (co)monoidal structure", natural, None);
    Ok(report)
}

/// `F2_{x,y} . F_2^{x,y} = id` for all sampled dims.
pub fn check_separable_functor(fr: &RealizedFunctor, sample: &ObjectSample) -> Result<bool> {
    for &x in &sample.dims {
        for &y in &sample.dims {
            if !fr.f2(x, y)?.mat_mul(&fr.f2_co(x, y)?)?.is_identity() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The extended-functor axioms: Fhat is a Frobenius monoidal natural
/// involution, the Fcheck square, and the two compatibility diagrams.
pub fn check_extended_functor(fr: &RealizedFunctor, sample: &ObjectSample) -> Result<CheckReport> {
    let field = fr.field().clone();
    let mut report = CheckReport::new("extended frobenius monoidal functor");
    let id = |d: usize| Matrix::identity(&field, d);

    // (a) Fhat is monoidal and comonoidal
    let mut monoidal = true;
    let mut comonoidal = true;
    for &x in &sample.dims {
        for &y in &sample.dims {
            let lhs = fr.fhat(x * y)?.mat_mul(&fr.f2(x, y)?)?;
            let rhs = fr.f2(x, y)?.mat_mul(&fr.fhat(x)?.kron(&fr.fhat(y)?)?)?;
            if lhs != rhs {
                monoidal = false;
            }
            let lhs = fr.fhat(x)?.kron(&fr.fhat(y)?)?.mat_mul(&fr.f2_co(x, y)?)?;
            let rhs = fr.f2_co(x, y)?.mat_mul(&fr.fhat(x * y)?)?;
            if lhs != rhs {
                comonoidal = false;
            }
        }
    }
    let unit_hat = fr.fhat(1)?.mat_mul(&fr.f0()?)? == fr.f0()?;
    let counit_hat = fr.f0_co()?.mat_mul(&fr.fhat(1)?)? == fr.f0_co()?;
    report.push("(a) involution transformation monoidal", monoidal && unit_hat, None);
    report.push(
        "(a) involution transformation comonoidal",
        comonoidal && counit_hat,
        None,
    );

    let mut natural = true;
    for (sx, tx, fm) in &sample.morphisms {
        let lhs = fr.fhat(*tx)?.mat_mul(&fr.map_morphism(fm)?)?;
        let rhs = fr.map_morphism(fm)?.mat_mul(&fr.fhat(*sx)?)?;
        if lhs != rhs {
            natural = false;
            break;
        }
    }
    report.push("(a) involution transformation natural", natural, None);

    // (b) F2_{1,1} (Fhat_1 (x) id) F_2^{1,1} F0 = F2_{1,1} (Fcheck (x) Fcheck)
    let lhs = fr
        .f2(1, 1)?
        .mat_mul(&fr.fhat(1)?.kron(&id(fr.map_dim(1)))?)?
        .mat_mul(&fr.f2_co(1, 1)?)?
        .mat_mul(&fr.f0()?)?;
    let rhs = fr.f2(1, 1)?.mat_mul(&fr.fcheck()?.kron(&fr.fcheck()?)?)?;
    report.push(
        "(b) handle square for the point morphism",
        lhs == rhs,
        (lhs != rhs).then(|| "composite through Fhat differs from Fcheck (x) Fcheck".to_string()),
    );

    // (c)(i) Fhat^2 = id
    let mut invol = true;
    for &x in &sample.dims {
        if !fr.fhat(x)?.mat_mul(&fr.fhat(x)?)?.is_identity() {
            invol = false;
            break;
        }
    }
    report.push("(c)(i) involution squared is the identity", invol, None);

    // (c)(ii) Fhat_{1 (x) X} F2_{1,X} (Fcheck (x) id) = F2_{1,X} (Fcheck (x) id)
    let mut cii = true;
    for &x in &sample.dims {
        let base = fr
            .f2(1, x)?
            .mat_mul(&fr.fcheck()?.kron(&id(fr.map_dim(x)))?)?;
        if fr.fhat(x)?.mat_mul(&base)? != base {
            cii = false;
            break;
        }
    }
    report.push("(c)(ii) point morphism lands in the fixed part", cii, None);

    // (c)(iii) F2_{X,Y}(Fhat_X (x) id)F_2^{X,Y}
    //        = F2_{X (x) Y, 1}(Fhat_{X (x) Y} (x) id)F_2^{X (x) Y, 1}
    let mut ciii = true;
    for &x in &sample.dims {
        for &y in &sample.dims {
            let lhs = fr
                .f2(x, y)?
                .mat_mul(&fr.fhat(x)?.kron(&id(fr.map_dim(y)))?)?
                .mat_mul(&fr.f2_co(x, y)?)?;
            let rhs = fr
                .f2(x * y, 1)?
                .mat_mul(&fr.fhat(x * y)?.kron(&id(fr.map_dim(1)))?)?
                .mat_mul(&fr.f2_co(x * y, 1)?)?;
            if lhs != rhs {
                ciii = false;
                break;
            }
        }
    }
    report.push(
        "(c)(iii) partial involution independent of the splitting",
        ciii,
        None,
    );
    Ok(report)
}

/// Image of an extended Frobenius algebra under a realized functor:
/// `m = F(m_A) . F2`, `u = F(u_A) . F0`, `Delta = F_2 . F(Delta_A)`,
/// `eps = F_0 . F(eps_A)`, `phi = F(phi_A) . Fhat`, `theta = F(theta_A) . Fcheck`.
pub fn apply_functor(fr: &RealizedFunctor, a: &ExtFrobAlgebra) -> Result<ExtFrobAlgebra> {
    let field = fr.field().clone();
    let da = a.dim();
    let d = fr.map_dim(da);

    let m = fr.map_morphism(a.frob.m())?.mat_mul(&fr.f2(da, da)?)?;
    let u_mat = fr
        .map_morphism(&a.frob.u().as_column())?
        .mat_mul(&fr.f0()?)?;
    let u = u_mat.column(0);
    let labels = (0..d).map(|i| format!("F{i}")).collect();
    let algebra = AlgebraData::new(&field, labels, m, u)?;

    let delta = fr.f2_co(da, da)?.mat_mul(&fr.map_morphism(a.frob.delta())?)?;
    let eps = fr.f0_co()?.mat_mul(&fr.map_morphism(a.frob.eps())?)?;
    let coalgebra = CoalgebraData::new(&field, d, delta, eps)?;
    let frob = FrobAlgebra::new(algebra, coalgebra)?;

    let phi = fr.map_morphism(a.phi())?.mat_mul(&fr.fhat(da)?)?;
    let theta_mat = fr
        .map_morphism(&a.theta().as_column())?
        .mat_mul(&fr.fcheck()?)?;
    ExtFrobAlgebra::new(frob, phi, theta_mat.column(0))
}

/// Composition `G after F`; callers verify the factors on their samples.
pub fn compose_functors(outer: RealizedFunctor, inner: RealizedFunctor) -> RealizedFunctor {
    RealizedFunctor::Compose(Box::new(outer), Box::new(inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;
    use crate::catalog::{
        family_structures, group_algebra, matrix_algebra, unit_extended, GroupTable,
    };
    use crate::extended::separable_extension;
    use crate::scalars::{rat, CycField, CycScalar};

    fn field(n: u64) -> Arc<CycField> {
        CycField::new(n).unwrap()
    }

    fn kc2_structures(f: &Arc<CycField>) -> Vec<ExtFrobAlgebra> {
        family_structures("kC2", f).unwrap().unwrap()
    }

    #[test]
    fn tensor_with_unit_is_identity_up_to_pairing() {
        let f = field(8);
        let unit = unit_extended(&f).unwrap();
        let c2 = kc2_structures(&f).into_iter().next().unwrap();
        let t = tensor_product_ext(&unit, &c2).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.frob.m(), c2.frob.m());
        assert_eq!(t.phi(), c2.phi());
        assert!(check_extended(&t).unwrap().passed());
    }

    #[test]
    fn tensor_and_biproduct_products_pass() {
        let f = field(8);
        let all = kc2_structures(&f);
        let a = &all[0]; // (id, sqrt2 e)
        let b = &all[4]; // (phi = -g, 0)
        for e in [a, b] {
            assert!(check_extended(e).unwrap().passed());
        }
        let t = tensor_product_ext(a, a).unwrap();
        assert!(check_extended(&t).unwrap().passed());
        // theta = 2 (e (x) e)
        let two = CycScalar::from_int(&f, 2);
        assert_eq!(*t.theta().get(0), two);
        let t2 = tensor_product_ext(b, a).unwrap();
        assert!(check_extended(&t2).unwrap().passed());
        assert!(t2.theta().is_zero());

        let s = biproduct_ext(a, b).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_extended(&s).unwrap().passed());
        let unit = unit_extended(&f).unwrap();
        let uu = biproduct_ext(&unit, &unit).unwrap();
        assert!(check_extended(&uu).unwrap().passed());
    }

    #[test]
    fn tensor_functor_passes_and_matches_products() {
        let f = field(8);
        let all = kc2_structures(&f);
        let b = all[0].clone();
        let fr = realize_functor(FunctorKind::Tensor, &b).unwrap();
        let sample = ObjectSample::generate(&f, &[1, 2, 3], 2, 17);
        assert!(check_frobenius_functor(&fr, &sample).unwrap().passed());
        assert!(check_extended_functor(&fr, &sample).unwrap().passed());

        let a = all[4].clone();
        let image = apply_functor(&fr, &a).unwrap();
        assert!(check_extended(&image).unwrap().passed());
        let direct = tensor_product_ext(&a, &b).unwrap();
        assert_eq!(image.frob.m(), direct.frob.m());
        assert_eq!(image.frob.delta(), direct.frob.delta());
        assert_eq!(image.frob.eps(), direct.frob.eps());
        assert_eq!(image.phi(), direct.phi());
        assert_eq!(image.theta(), direct.theta());
    }

    #[test]
    fn biproduct_functor_passes_and_matches_products() {
        let f = field(8);
        let all = kc2_structures(&f);
        let b = all[0].clone();
        let fr = realize_functor(FunctorKind::Biproduct, &b).unwrap();
        assert_eq!(fr.map_dim(3), 5);
        let sample = ObjectSample::generate(&f, &[1, 2], 2, 11);
        assert!(check_frobenius_functor(&fr, &sample).unwrap().passed());
        assert!(check_extended_functor(&fr, &sample).unwrap().passed());

        let a = all[0].clone();
        let image = apply_functor(&fr, &a).unwrap();
        assert!(check_extended(&image).unwrap().passed());
        let direct = biproduct_ext(&a, &b).unwrap();
        assert_eq!(image.frob.m(), direct.frob.m());
        assert_eq!(image.frob.delta(), direct.frob.delta());
        assert_eq!(image.phi(), direct.phi());
        assert_eq!(image.theta(), direct.theta());
    }

    #[test]
    fn biproduct_with_the_zero_object_is_the_identity() {
        let f = field(8);
        let zero = crate::catalog::zero_extended(&f).unwrap();
        assert!(check_extended(&zero).unwrap().passed());
        let a = kc2_structures(&f).remove(0);
        let s = biproduct_ext(&a, &zero).unwrap();
        assert_eq!(s.dim(), a.dim());
        assert_eq!(s.frob.m(), a.frob.m());
        assert_eq!(s.frob.u(), a.frob.u());
        assert_eq!(s.frob.delta(), a.frob.delta());
        assert_eq!(s.frob.eps(), a.frob.eps());
        assert_eq!(s.phi(), a.phi());
        assert_eq!(s.theta(), a.theta());
    }

    #[test]
    fn separability_detection() {
        let f = field(8);
        let sample = ObjectSample::generate(&f, &[1, 2], 1, 3);
        // group Frobenius structure is not separable
        let c2 = kc2_structures(&f)[0].clone();
        let fr = realize_functor(FunctorKind::Tensor, &c2).unwrap();
        assert!(!check_separable_functor(&fr, &sample).unwrap());
        // rescaled matrix algebra is separable
        let m2 = matrix_algebra(2, &f).unwrap();
        let resc = m2
            .frob
            .rescale_delta(&CycScalar::from_rational(&f, rat(1, 2)))
            .unwrap();
        let sep = separable_extension(&resc).unwrap();
        let fr = realize_functor(FunctorKind::Tensor, &sep).unwrap();
        assert!(check_separable_functor(&fr, &sample).unwrap());
        assert!(check_extended_functor(&fr, &sample).unwrap().passed());
        // unit functor separable
        let unit = unit_extended(&f).unwrap();
        let fr = realize_functor(FunctorKind::Tensor, &unit).unwrap();
        assert!(check_separable_functor(&fr, &sample).unwrap());
    }

    #[test]
    fn corrupted_fcheck_fails_the_handle_square() {
        let f = field(8);
        let b = kc2_structures(&f)[0].clone();
        // zero out theta while keeping the true phi: condition (b) breaks
        let mut bad = b.clone();
        bad.ext.theta = Vector::zeros(&f, 2);
        let fr = RealizedFunctor::TensorWith(bad);
        let sample = ObjectSample::generate(&f, &[1, 2], 1, 5);
        let rep = check_extended_functor(&fr, &sample).unwrap();
        assert!(!rep.passed());
        assert!(rep
            .items
            .iter()
            .any(|i| i.name.starts_with("(b)") && !i.passed));
    }

    #[test]
    fn composition_passes_and_identity_composes_trivially() {
        let f = field(8);
        let all = kc2_structures(&f);
        let b = all[0].clone();
        let bp = all[4].clone();
        let sample = ObjectSample::generate(&f, &[1, 2], 2, 23);

        let comp = compose_functors(
            RealizedFunctor::TensorWith(b.clone()),
            RealizedFunctor::TensorWith(bp.clone()),
        );
        assert!(check_frobenius_functor(&comp, &sample).unwrap().passed());
        assert!(check_extended_functor(&comp, &sample).unwrap().passed());

        let mixed = compose_functors(
            RealizedFunctor::BiproductWith(bp),
            RealizedFunctor::TensorWith(b.clone()),
        );
        assert!(check_extended_functor(&mixed, &sample).unwrap().passed());

        // composing with the unit tensor functor reproduces the evaluators
        let unit = unit_extended(&f).unwrap();
        let idf = RealizedFunctor::TensorWith(unit);
        let wrapped = compose_functors(RealizedFunctor::TensorWith(b.clone()), idf);
        let plain = RealizedFunctor::TensorWith(b);
        for x in 1..=3usize {
            for y in 1..=3usize {
                assert_eq!(wrapped.f2(x, y).unwrap(), plain.f2(x, y).unwrap());
                assert_eq!(wrapped.f2_co(x, y).unwrap(), plain.f2_co(x, y).unwrap());
            }
            assert_eq!(wrapped.fhat(x).unwrap(), plain.fhat(x).unwrap());
        }
        assert_eq!(wrapped.f0().unwrap(), plain.f0().unwrap());
        assert_eq!(wrapped.fcheck().unwrap(), plain.fcheck().unwrap());
    }

    #[test]
    fn group_frobenius_tensor_functor_on_s3_sample() {
        // a non-catalog carrier to vary the sample: C2 x C2 group algebra
        let f = field(1);
        let g = GroupTable::klein_four().unwrap();
        let fa = group_algebra(&g, &f).unwrap();
        let e = ExtFrobAlgebra::new(
            fa,
            Matrix::identity(&f, 4),
            Vector::zeros(&f, 4),
        )
        .unwrap();
        // theta = 0 fails (iii) for klein (handle = 4e), so realize must fail
        assert!(realize_functor(FunctorKind::Tensor, &e).is_err());
    }
}
