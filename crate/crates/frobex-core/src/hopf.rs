//! Integral Hopf algebras, the induced Frobenius structure, and extended
//! Hopf structures.
//!
//! A Hopf algebra here always carries a normalized integral/cointegral pair
//! and an explicit antipode inverse. The Frobenius structure it induces is
//! `Delta = (m (x) S)(id (x) Delta_h Lambda)`, `eps = lambda`.

use std::sync::Arc;

use crate::error::{FrobexError, Result};
use crate::extended::{check_extended, check_frob_morphism, ExtFrobAlgebra};
use crate::frobenius::{check_frobenius, AlgebraData, CoalgebraData, FrobAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::report::CheckReport;
use crate::catalog::GroupTable;
use crate::scalars::{CycField, CycScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: Arc<CycField>,
    dim: usize,
    labels: Vec<String>,
    pub m: Matrix,
    pub u: Vector,
    pub delta_h: Matrix,
    pub eps_h: Matrix,
    pub s: Matrix,
    pub s_inv: Matrix,
    pub integral: Vector,
    pub cointegral: Matrix,
}

impl HopfAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: &Arc<CycField>,
        labels: Vec<String>,
        m: Matrix,
        u: Vector,
        delta_h: Matrix,
        eps_h: Matrix,
        s: Matrix,
        s_inv: Matrix,
        integral: Vector,
        cointegral: Matrix,
    ) -> Result<HopfAlgebra> {
        let d = labels.len();
        let shapes_ok = m.rows() == d
            && m.cols() == d * d
            && u.len() == d
            && delta_h.rows() == d * d
            && delta_h.cols() == d
            && eps_h.rows() == 1
            && eps_h.cols() == d
            && s.rows() == d
            && s.cols() == d
            && s_inv.rows() == d
            && s_inv.cols() == d
            && integral.len() == d
            && cointegral.rows() == 1
            && cointegral.cols() == d;
        if !shapes_ok {
            return Err(FrobexError::ShapeMismatch {
                what: "hopf algebra component shapes".into(),
            });
        }
        Ok(HopfAlgebra {
            field: field.clone(),
            dim: d,
            labels,
            m,
            u,
            delta_h,
            eps_h,
            s,
            s_inv,
            integral,
            cointegral,
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

    fn algebra_data(&self) -> Result<AlgebraData> {
        AlgebraData::new(&self.field, self.labels.clone(), self.m.clone(), self.u.clone())
    }

    fn underlying_with(&self, delta: Matrix, eps: Matrix) -> Result<FrobAlgebra> {
        FrobAlgebra::new(
            self.algebra_data()?,
            CoalgebraData::new(&self.field, self.dim, delta, eps)?,
        )
    }

    /// The bialgebra as a "Frobenius-shaped" carrier for morphism checks:
    /// algebra (m, u) with coalgebra (Delta_h, eps_h).
    pub fn bialgebra_carrier(&self) -> Result<FrobAlgebra> {
        self.underlying_with(self.delta_h.clone(), self.eps_h.clone())
    }

    pub fn mult(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.algebra_data()?.mult(a, b)
    }
}

/// Group Hopf algebra: `Delta_h(g) = g (x) g`, `eps_h(g) = 1`,
/// `S(g) = g^-1`, `Lambda = sum_h h`, `lambda = delta_e`.
pub fn group_hopf(g: &GroupTable, field: &Arc<CycField>) -> Result<HopfAlgebra> {
    let n = g.order;
    let one = CycScalar::one(field);
    let mut m = Matrix::zeros(field, n, n * n);
    for a in 0..n {
        for b in 0..n {
            m.set(g.mult[a][b], a * n + b, one.clone());
        }
    }
    let u = Vector::unit(field, n, g.identity);
    let mut delta_h = Matrix::zeros(field, n * n, n);
    for a in 0..n {
        delta_h.set(a * n + a, a, one.clone());
    }
    let mut eps_h = Matrix::zeros(field, 1, n);
    for a in 0..n {
        eps_h.set(0, a, one.clone());
    }
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        s.set(g.inverse[a], a, one.clone());
    }
    let s_inv = s.clone(); // inversion is its own inverse as a permutation map
    let mut integral = Vector::zeros(field, n);
    for a in 0..n {
        integral.set(a, one.clone());
    }
    let mut cointegral = Matrix::zeros(field, 1, n);
    cointegral.set(0, g.identity, one.clone());
    HopfAlgebra::new(
        field,
        g.labels.clone(),
        m,
        u,
        delta_h,
        eps_h,
        s,
        s_inv,
        integral,
        cointegral,
    )
}

/// `Delta_h` applied to a vector, as a d^2 vector.
fn delta_h_of(h: &HopfAlgebra, v: &Vector) -> Result<Vector> {
    h.delta_h.mul_vec(v)
}

/// Full per-axiom verification: bialgebra laws, antipode axiom, antipode
/// invertibility, the antipode (anti)homomorphism identities, and the
/// integral laws.
pub fn check_hopf(h: &HopfAlgebra) -> Result<CheckReport> {
    let d = h.dim;
    let f = &h.field;
    let mut report = CheckReport::new("integral hopf algebra");

    report.merge(crate::frobenius::check_algebra(&h.algebra_data()?)?);
    report.merge(crate::frobenius::check_coalgebra(&CoalgebraData::new(
        f,
        d,
        h.delta_h.clone(),
        h.eps_h.clone(),
    )?)?);

    // Delta_h is an algebra morphism into the tensor-square algebra:
    // Delta_h(m(a,b)) = Delta_h(a) *_(AxA) Delta_h(b), and Delta_h(u) = u(x)u
    let mult_pair = |x: &Vector, y: &Vector| -> Result<Vector> {
        // componentwise product in A (x) A with the swap-free convention
        let mut out = Vector::zeros(f, d * d);
        for p1 in 0..d {
            for q1 in 0..d {
                let c1 = x.get(p1 * d + q1);
                if c1.is_zero() {
                    continue;
                }
                for p2 in 0..d {
                    for q2 in 0..d {
                        let c2 = y.get(p2 * d + q2);
                        if c2.is_zero() {
                            continue;
                        }
                        let coef = c1.mul(c2)?;
                        let first = h.m.column(p1 * d + p2);
                        let second = h.m.column(q1 * d + q2);
                        for r1 in 0..d {
                            if first.get(r1).is_zero() {
                                continue;
                            }
                            for r2 in 0..d {
                                if second.get(r2).is_zero() {
                                    continue;
                                }
                                let idx = r1 * d + r2;
                                let t = coef.mul(first.get(r1))?.mul(second.get(r2))?;
                                out.set(idx, out.get(idx).add(&t)?);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    };
    let mut bialg_ok = true;
    'outer: for a in 0..d {
        for b in 0..d {
            let prod = h.m.column(a * d + b);
            let lhs = delta_h_of(h, &prod)?;
            let rhs = mult_pair(&h.delta_h.column(a), &h.delta_h.column(b))?;
            if lhs != rhs {
                bialg_ok = false;
                break 'outer;
            }
        }
    }
    let unit_ok = delta_h_of(h, &h.u)? == h.u.kron(&h.u)?;
    report.push(
        "comultiplication is an algebra morphism",
        bialg_ok && unit_ok,
        (!(bialg_ok && unit_ok)).then(|| "bialgebra law fails".to_string()),
    );
    // eps_h is an algebra morphism
    let mut eps_alg = true;
    'outer2: for a in 0..d {
        for b in 0..d {
            let prod = h.m.column(a * d + b);
            let mut lhs = CycScalar::zero(f);
            for r in 0..d {
                if prod.get(r).is_zero() {
                    continue;
                }
                lhs = lhs.add(&prod.get(r).mul(h.eps_h.get(0, r))?)?;
            }
            let rhs = h.eps_h.get(0, a).mul(h.eps_h.get(0, b))?;
            if lhs != rhs {
                eps_alg = false;
                break 'outer2;
            }
        }
    }
    let mut eps_u = CycScalar::zero(f);
    for r in 0..d {
        if h.u.get(r).is_zero() {
            continue;
        }
        eps_u = eps_u.add(&h.u.get(r).mul(h.eps_h.get(0, r))?)?;
    }
    report.push(
        "counit is an algebra morphism",
        eps_alg && eps_u.is_one(),
        None,
    );

    // antipode axiom: m(S (x) id)Delta_h = u eps_h = m(id (x) S)Delta_h
    let mut antipode_ok = true;
    for c in 0..d {
        let dc = h.delta_h.column(c);
        let mut left = Vector::zeros(f, d);
        let mut right = Vector::zeros(f, d);
        for p in 0..d {
            for q in 0..d {
                let coef = dc.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                let sp = h.s.column(p);
                let sq = h.s.column(q);
                let l = h.mult(&sp, &Vector::unit(f, d, q))?;
                let r = h.mult(&Vector::unit(f, d, p), &sq)?;
                for i in 0..d {
                    if !l.get(i).is_zero() {
                        left.set(i, left.get(i).add(&coef.mul(l.get(i))?)?);
                    }
                    if !r.get(i).is_zero() {
                        right.set(i, right.get(i).add(&coef.mul(r.get(i))?)?);
                    }
                }
            }
        }
        let target = h.u.scale(h.eps_h.get(0, c))?;
        if left != target || right != target {
            antipode_ok = false;
            break;
        }
    }
    report.push("antipode axiom", antipode_ok, None);

    let s_inv_ok = h.s.mat_mul(&h.s_inv)?.is_identity() && h.s_inv.mat_mul(&h.s)?.is_identity();
    report.push("antipode inverse", s_inv_ok, None);

    // antipode identities: S m = m c (S (x) S); S u = u;
    // Delta_h S = (S (x) S) c Delta_h; eps_h S = eps_h
    let mut anti_mult = true;
    'outer3: for a in 0..d {
        for b in 0..d {
            let lhs = h.s.mul_vec(&h.m.column(a * d + b))?;
            let rhs = h.mult(&h.s.column(b), &h.s.column(a))?;
            if lhs != rhs {
                anti_mult = false;
                break 'outer3;
            }
        }
    }
    report.push("antipode reverses multiplication", anti_mult, None);
    report.push("antipode fixes the unit", h.s.mul_vec(&h.u)? == h.u, None);
    let mut anti_comult = true;
    for c in 0..d {
        let lhs = delta_h_of(h, &h.s.column(c))?;
        let dc = h.delta_h.column(c);
        let mut rhs = Vector::zeros(f, d * d);
        for p in 0..d {
            for q in 0..d {
                let coef = dc.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                // (S (x) S) applied to swapped legs: S(q) (x) S(p)
                let block = h.s.column(q).kron(&h.s.column(p))?;
                for idx in 0..d * d {
                    if block.get(idx).is_zero() {
                        continue;
                    }
                    rhs.set(idx, rhs.get(idx).add(&coef.mul(block.get(idx))?)?);
                }
            }
        }
        if lhs != rhs {
            anti_comult = false;
            break;
        }
    }
    report.push("antipode reverses comultiplication", anti_comult, None);
    let eps_s_ok = (0..d).try_fold(true, |acc, c| -> Result<bool> {
        let mut v = CycScalar::zero(f);
        let sc = h.s.column(c);
        for r in 0..d {
            if sc.get(r).is_zero() {
                continue;
            }
            v = v.add(&sc.get(r).mul(h.eps_h.get(0, r))?)?;
        }
        Ok(acc && v == *h.eps_h.get(0, c))
    })?;
    report.push("antipode preserves the counit", eps_s_ok, None);

    // integral law: m(id (x) Lambda) = Lambda eps_h
    let mut integral_ok = true;
    for c in 0..d {
        let lhs = h.mult(&Vector::unit(f, d, c), &h.integral)?;
        let rhs = h.integral.scale(h.eps_h.get(0, c))?;
        if lhs != rhs {
            integral_ok = false;
            break;
        }
    }
    report.push("left integral law", integral_ok, None);

    // cointegral law: (lambda (x) id)Delta_h = u lambda
    let mut cointegral_ok = true;
    for c in 0..d {
        let dc = h.delta_h.column(c);
        let mut lhs = Vector::zeros(f, d);
        for p in 0..d {
            for q in 0..d {
                let coef = dc.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                lhs.set(q, lhs.get(q).add(&coef.mul(h.cointegral.get(0, p))?)?);
            }
        }
        let rhs = h.u.scale(h.cointegral.get(0, c))?;
        if lhs != rhs {
            cointegral_ok = false;
            break;
        }
    }
    report.push("right cointegral law", cointegral_ok, None);

    // normalization: lambda(Lambda) = 1
    let mut norm = CycScalar::zero(f);
    for r in 0..d {
        if h.integral.get(r).is_zero() {
            continue;
        }
        norm = norm.add(&h.integral.get(r).mul(h.cointegral.get(0, r))?)?;
    }
    report.push("normalization lambda(Lambda) = 1", norm.is_one(), None);

    Ok(report)
}

/// The induced Frobenius structure: same algebra,
/// `Delta = (m (x) S)(id (x) Delta_h Lambda)`, `eps = lambda`.
pub fn psi(h: &HopfAlgebra) -> Result<FrobAlgebra> {
    let rep = check_hopf(h)?;
    if !rep.passed() {
        return Err(FrobexError::Precondition {
            what: format!(
                "hopf axioms fail: {}",
                rep.first_failure().map(|i| i.name.clone()).unwrap_or_default()
            ),
        });
    }
    let d = h.dim;
    let f = &h.field;
    let w = delta_h_of(h, &h.integral)?; // Delta_h(Lambda), d^2 vector
    let mut delta = Matrix::zeros(f, d * d, d);
    for c in 0..d {
        for p in 0..d {
            for q in 0..d {
                let coef = w.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                // x (x) Lambda_(1) (x) Lambda_(2) -> x Lambda_(1) (x) S(Lambda_(2))
                let prod = h.mult(&Vector::unit(f, d, c), &Vector::unit(f, d, p))?;
                let sq = h.s.column(q);
                for r1 in 0..d {
                    if prod.get(r1).is_zero() {
                        continue;
                    }
                    for r2 in 0..d {
                        if sq.get(r2).is_zero() {
                            continue;
                        }
                        let idx = r1 * d + r2;
                        let t = coef.mul(prod.get(r1))?.mul(sq.get(r2))?;
                        delta.set(idx, c, delta.get(idx, c).add(&t)?);
                    }
                }
            }
        }
    }
    let fa = h.underlying_with(delta, h.cointegral.clone())?;
    let check = check_frobenius(&fa)?;
    if !check.passed() {
        return Err(FrobexError::Precondition {
            what: "induced Frobenius structure failed verification".into(),
        });
    }
    Ok(fa)
}

/// The two composite identities behind the induced Frobenius structure:
/// (a) `(m (x) S)(id (x) Delta_h Lambda)` equals the five-stage composite
/// `(id (x) m)(id (x) S (x) id)(Delta_h m (x) id)(id (x) Lambda (x) id)Delta_h`,
/// (b) `lambda S Lambda = 1`.
pub fn check_integral_composites(h: &HopfAlgebra) -> Result<CheckReport> {
    let d = h.dim;
    let f = &h.field;
    let mut report = CheckReport::new("integral composites");

    // (a) both sides as d^2 x d matrices
    let w = delta_h_of(h, &h.integral)?;
    let mut lhs = Matrix::zeros(f, d * d, d);
    for c in 0..d {
        for p in 0..d {
            for q in 0..d {
                let coef = w.get(p * d + q);
                if coef.is_zero() {
                    continue;
                }
                let prod = h.mult(&Vector::unit(f, d, c), &Vector::unit(f, d, p))?;
                let sq = h.s.column(q);
                for r1 in 0..d {
                    if prod.get(r1).is_zero() {
                        continue;
                    }
                    for r2 in 0..d {
                        if sq.get(r2).is_zero() {
                            continue;
                        }
                        let idx = r1 * d + r2;
                        let t = coef.mul(prod.get(r1))?.mul(sq.get(r2))?;
                        lhs.set(idx, c, lhs.get(idx, c).add(&t)?);
                    }
                }
            }
        }
    }

    let mut rhs = Matrix::zeros(f, d * d, d);
    for c in 0..d {
        // x_(1) (x) x_(2)
        let dx = h.delta_h.column(c);
        for a in 0..d {
            for b in 0..d {
                let c1 = dx.get(a * d + b);
                if c1.is_zero() {
                    continue;
                }
                // a (x) Lambda (x) b -> Delta_h(a Lambda) (x) b
                for lam in 0..d {
                    let cl = h.integral.get(lam);
                    if cl.is_zero() {
                        continue;
                    }
                    let al = h.mult(&Vector::unit(f, d, a), &Vector::unit(f, d, lam))?;
                    for t1 in 0..d {
                        if al.get(t1).is_zero() {
                            continue;
                        }
                        let dal = h.delta_h.column(t1);
                        for p in 0..d {
                            for q in 0..d {
                                let c2 = dal.get(p * d + q);
                                if c2.is_zero() {
                                    continue;
                                }
                                // p (x) S(q) b
                                let sq = h.s.column(q);
                                for sr in 0..d {
                                    if sq.get(sr).is_zero() {
                                        continue;
                                    }
                                    let prod =
                                        h.mult(&Vector::unit(f, d, sr), &Vector::unit(f, d, b))?;
                                    for r2 in 0..d {
                                        if prod.get(r2).is_zero() {
                                            continue;
                                        }
                                        let idx = p * d + r2;
                                        let t = c1
                                            .mul(cl)?
                                            .mul(al.get(t1))?
                                            .mul(&c2.mul(sq.get(sr))?)?
                                            .mul(prod.get(r2))?;
                                        rhs.set(idx, c, rhs.get(idx, c).add(&t)?);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(
        "(a) comultiplication composite identity",
        lhs == rhs,
        (lhs != rhs).then(|| "the two comultiplication routes differ".to_string()),
    );

    // (b) lambda(S(Lambda)) = 1
    let s_lambda = h.s.mul_vec(&h.integral)?;
    let mut v = CycScalar::zero(f);
    for r in 0..d {
        if s_lambda.get(r).is_zero() {
            continue;
        }
        v = v.add(&s_lambda.get(r).mul(h.cointegral.get(0, r))?)?;
    }
    report.push(
        "(b) cointegral of antipode of integral is 1",
        v.is_one(),
        (!v.is_one()).then(|| format!("got {}", v.to_poly_string())),
    );
    Ok(report)
}

/// Checks that `f` is a morphism of integral Hopf algebras, then asserts
/// the induced map on the Frobenius structures is a Frobenius morphism.
pub fn check_psi_morphism(h: &HopfAlgebra, k: &HopfAlgebra, f: &Matrix) -> Result<CheckReport> {
    let mut report = CheckReport::new("psi morphism");
    // precondition: algebra + coalgebra (for Delta_h) morphism, integral and
    // cointegral preserved
    let hb = h.bialgebra_carrier()?;
    let kb = k.bialgebra_carrier()?;
    let pre = check_frob_morphism(&hb, &kb, f)?;
    let pre_ok = pre.passed();
    for item in pre.items {
        report.push(format!("pre: {}", item.name), item.passed, item.detail);
    }
    let int_ok = f.mul_vec(&h.integral)? == k.integral;
    report.push("pre: integral preserved", int_ok, None);
    let coint_ok = {
        let mut ok = true;
        for c in 0..h.dim() {
            let fc = f.column(c);
            let mut v = CycScalar::zero(h.field());
            for r in 0..k.dim() {
                if fc.get(r).is_zero() {
                    continue;
                }
                v = v.add(&fc.get(r).mul(k.cointegral.get(0, r))?)?;
            }
            if v != *h.cointegral.get(0, c) {
                ok = false;
                break;
            }
        }
        ok
    };
    report.push("pre: cointegral preserved", coint_ok, None);
    if !(pre_ok && int_ok && coint_ok) {
        return Err(FrobexError::Precondition {
            what: "f is not an integral-Hopf morphism".into(),
        });
    }
    let ph = psi(h)?;
    let pk = psi(k)?;
    let conclusion = check_frob_morphism(&ph, &pk, f)?;
    for item in conclusion.items {
        report.push(
            format!("induced frobenius morphism: {}", item.name),
            item.passed,
            item.detail,
        );
    }
    Ok(report)
}

/// If `m(theta (x) theta) = u eps_h(Lambda)` then `(psi(h), id, theta)` is
/// an extended Frobenius algebra. Returns a mismatch report otherwise.
pub enum IntegralThetaOutcome {
    Extended(ExtFrobAlgebra),
    Mismatch { lhs: Vector, rhs: Vector },
}

pub fn integral_theta_extension(h: &HopfAlgebra, theta: &Vector) -> Result<IntegralThetaOutcome> {
    let f = &h.field;
    let d = h.dim;
    let lhs = h.mult(theta, theta)?;
    let mut eps_lambda = CycScalar::zero(f);
    for r in 0..d {
        if h.integral.get(r).is_zero() {
            continue;
        }
        eps_lambda = eps_lambda.add(&h.integral.get(r).mul(h.eps_h.get(0, r))?)?;
    }
    let rhs = h.u.scale(&eps_lambda)?;
    if lhs != rhs {
        return Ok(IntegralThetaOutcome::Mismatch { lhs, rhs });
    }
    let fa = psi(h)?;
    let e = ExtFrobAlgebra::new(fa, Matrix::identity(f, d), theta.clone())?;
    let rep = check_extended(&e)?;
    if !rep.passed() {
        return Err(FrobexError::Precondition {
            what: "integral theta extension failed the extended axioms".into(),
        });
    }
    Ok(IntegralThetaOutcome::Extended(e))
}

/// Extended integral Hopf algebra check: (i) phi is an integral-Hopf
/// morphism with phi^2 = id, (ii) theta left-multiplication fixed by phi,
/// (iii) `m(phi (x) S) Delta_h Lambda = m(theta (x) theta)`.
pub fn check_extended_hopf(h: &HopfAlgebra, phi: &Matrix, theta: &Vector) -> Result<CheckReport> {
    let d = h.dim;
    let f = &h.field;
    let mut report = CheckReport::new("extended hopf algebra");

    let hb = h.bialgebra_carrier()?;
    let morph = check_frob_morphism(&hb, &hb, phi)?;
    for item in morph.items {
        report.push(format!("(i) phi {}", item.name), item.passed, item.detail);
    }
    let int_ok = phi.mul_vec(&h.integral)? == h.integral;
    report.push("(i) phi preserves the integral", int_ok, None);
    let coint_ok = {
        let mut ok = true;
        for c in 0..d {
            let pc = phi.column(c);
            let mut v = CycScalar::zero(f);
            for r in 0..d {
                if pc.get(r).is_zero() {
                    continue;
                }
                v = v.add(&pc.get(r).mul(h.cointegral.get(0, r))?)?;
            }
            if v != *h.cointegral.get(0, c) {
                ok = false;
                break;
            }
        }
        ok
    };
    report.push("(i) phi preserves the cointegral", coint_ok, None);
    report.push(
        "(i) phi involution",
        phi.mat_mul(phi)?.is_identity(),
        None,
    );

    // (ii)
    let mut cond2 = true;
    for c in 0..d {
        let lm = h.mult(theta, &Vector::unit(f, d, c))?;
        if phi.mul_vec(&lm)? != lm {
            cond2 = false;
            break;
        }
    }
    report.push("(ii) theta left-multiplication fixed by phi", cond2, None);

    // (iii): m(phi (x) S) Delta_h Lambda = theta^2
    let w = delta_h_of(h, &h.integral)?;
    let mut lhs = Vector::zeros(f, d);
    for p in 0..d {
        for q in 0..d {
            let coef = w.get(p * d + q);
            if coef.is_zero() {
                continue;
            }
            let prod = h.mult(&phi.column(p), &h.s.column(q))?;
            for r in 0..d {
                if prod.get(r).is_zero() {
                    continue;
                }
                lhs.set(r, lhs.get(r).add(&coef.mul(prod.get(r))?)?);
            }
        }
    }
    let rhs = h.mult(theta, theta)?;
    let cond3 = lhs == rhs;
    report.push(
        "(iii) twisted hopf handle equals theta^2",
        cond3,
        (!cond3).then(|| {
            format!(
                "lhs = [{}], rhs = [{}]",
                lhs.to_strings().join(", "),
                rhs.to_strings().join(", ")
            )
        }),
    );
    Ok(report)
}

/// `(psi(h), phi, theta)`; requires [`check_extended_hopf`] to pass and
/// verifies the result.
pub fn ext_hopf_to_ext_frob(
    h: &HopfAlgebra,
    phi: &Matrix,
    theta: &Vector,
) -> Result<ExtFrobAlgebra> {
    let pre = check_extended_hopf(h, phi, theta)?;
    if !pre.passed() {
        return Err(FrobexError::Precondition {
            what: format!(
                "extended hopf axioms fail: {}",
                pre.first_failure().map(|i| i.name.clone()).unwrap_or_default()
            ),
        });
    }
    let fa = psi(h)?;
    let e = ExtFrobAlgebra::new(fa, phi.clone(), theta.clone())?;
    let rep = check_extended(&e)?;
    if !rep.passed() {
        return Err(FrobexError::Precondition {
            what: "induced extended Frobenius structure failed verification".into(),
        });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, GroupTable};
    use crate::scalars::sqrt_rational;

    fn field(n: u64) -> Arc<CycField> {
        CycField::new(n).unwrap()
    }

    #[test]
    fn group_hopf_passes_all_axioms() {
        let f = field(1);
        for table in [
            GroupTable::cyclic(1).unwrap(),
            GroupTable::cyclic(2).unwrap(),
            GroupTable::cyclic(3).unwrap(),
            GroupTable::symmetric_3().unwrap(),
        ] {
            let h = group_hopf(&table, &f).unwrap();
            let rep = check_hopf(&h).unwrap();
            assert!(rep.passed(), "order {}: {}", table.order, rep.render_table());
        }
    }

    #[test]
    fn broken_integral_is_rejected() {
        let f = field(1);
        let g = GroupTable::cyclic(2).unwrap();
        let mut h = group_hopf(&g, &f).unwrap();
        h.integral = Vector::unit(&f, 2, 0); // Lambda := e only
        let rep = check_hopf(&h).unwrap();
        assert!(!rep.passed());
        assert!(rep
            .items
            .iter()
            .any(|i| i.name == "left integral law" && !i.passed));
    }

    #[test]
    fn psi_reproduces_the_group_frobenius_structure() {
        let f = field(1);
        for table in [
            GroupTable::cyclic(2).unwrap(),
            GroupTable::cyclic(3).unwrap(),
            GroupTable::klein_four().unwrap(),
        ] {
            let h = group_hopf(&table, &f).unwrap();
            let induced = psi(&h).unwrap();
            let direct = group_algebra(&table, &f).unwrap();
            assert_eq!(induced.delta(), direct.delta());
            assert_eq!(induced.eps(), direct.eps());
        }
    }

    #[test]
    fn integral_composites_hold() {
        let f = field(1);
        for table in [GroupTable::cyclic(2).unwrap(), GroupTable::cyclic(4).unwrap()] {
            let h = group_hopf(&table, &f).unwrap();
            assert!(check_integral_composites(&h).unwrap().passed());
        }
    }

    #[test]
    fn inversion_is_a_psi_morphism_on_c3() {
        let f = field(1);
        let g = GroupTable::cyclic(3).unwrap();
        let h = group_hopf(&g, &f).unwrap();
        let id = Matrix::identity(&f, 3);
        assert!(check_psi_morphism(&h, &h, &id).unwrap().passed());
        let mut inv = Matrix::zeros(&f, 3, 3);
        for a in 0..3usize {
            inv.set((3 - a) % 3, a, CycScalar::one(&f));
        }
        let rep = check_psi_morphism(&h, &h, &inv).unwrap();
        assert!(rep.passed(), "{}", rep.render_table());
    }

    #[test]
    fn integral_theta_extension_on_c2() {
        let f = field(8);
        let g = GroupTable::cyclic(2).unwrap();
        let h = group_hopf(&g, &f).unwrap();
        let s2 = sqrt_rational(&f, 2).unwrap();
        let theta = Vector::unit(&f, 2, 0).scale(&s2).unwrap();
        match integral_theta_extension(&h, &theta).unwrap() {
            IntegralThetaOutcome::Extended(e) => {
                assert!(check_extended(&e).unwrap().passed());
            }
            _ => panic!("expected an extension"),
        }
        // wrong theta reports both sides
        let bad = Vector::unit(&f, 2, 0);
        match integral_theta_extension(&h, &bad).unwrap() {
            IntegralThetaOutcome::Mismatch { lhs, rhs } => {
                assert!(!lhs.is_zero() && !rhs.is_zero());
                assert_ne!(lhs, rhs);
            }
            _ => panic!("expected a mismatch"),
        }
    }

    #[test]
    fn sign_flip_extends_frobenius_but_not_hopf_on_c2() {
        let f = field(8);
        let g = GroupTable::cyclic(2).unwrap();
        let h = group_hopf(&g, &f).unwrap();
        let phi = Matrix::from_ints(&f, &[&[1, 0], &[0, -1]]);
        let theta = Vector::zeros(&f, 2);
        let rep = check_extended_hopf(&h, &phi, &theta).unwrap();
        assert!(!rep.passed());
        assert!(rep
            .items
            .iter()
            .any(|i| i.name == "(i) phi comultiplicative" && !i.passed));
        // but the same pair extends the induced Frobenius structure
        let fa = psi(&h).unwrap();
        let e = ExtFrobAlgebra::new(fa, phi, theta).unwrap();
        assert!(check_extended(&e).unwrap().passed());
    }
}
