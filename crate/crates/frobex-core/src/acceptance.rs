//! The acceptance suite: one runnable criterion per classification or
//! structural claim the library reproduces, each with a stated wall-clock
//! limit. All comparisons are exact; the runner prints one line per
//! criterion and the `acceptance` test target asserts each outcome.

use std::sync::Arc;
use std::time::Instant;

use crate::catalog::{
    complex_over_real_frobenius, family_conductor, family_lattice, family_structures,
    family_witnesses, group_algebra, matrix_algebra, nilpotent_algebra, taft_algebra,
    unit_extended, unit_frobenius, GroupTable,
};
use crate::error::Result;
use crate::extended::{
    check_ext_morphism, check_extended, check_key_identity, classify_extended, default_budget,
    find_frobenius_involutions, group_by_witnesses, separable_extension, solve_theta,
    ExtFrobAlgebra, ExtStructure,
};
use crate::frobenius::{check_frobenius, check_separable};
use crate::functors::{
    apply_functor, biproduct_ext, check_extended_functor, check_frobenius_functor,
    check_separable_functor, compose_functors, tensor_product_ext, ObjectSample, RealizedFunctor,
};
use crate::hopf::{
    check_extended_hopf, check_integral_composites, group_hopf, integral_theta_extension, psi,
    IntegralThetaOutcome,
};
use crate::linalg::{Matrix, Vector};
use crate::scalars::{lcm, rat, sqrt_conductor, sqrt_rational, CycField, CycScalar};

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub informational: bool,
    pub detail: String,
    pub millis: u128,
    pub limit_millis: u128,
}

impl CriterionOutcome {
    /// Timing-free line; stable bytes for identical inputs.
    pub fn line_deterministic(&self) -> String {
        let status = if self.passed {
            "PASS"
        } else if self.informational {
            "INFO"
        } else {
            "FAIL"
        };
        format!(
            "[{:>2}] {status} {:<55}{}",
            self.index,
            self.name,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(" -- {}", self.detail)
            }
        )
    }

    pub fn line(&self) -> String {
        let status = if self.passed {
            "PASS"
        } else if self.informational {
            "INFO"
        } else {
            "FAIL"
        };
        format!(
            "[{:>2}] {status} {:<55} {:>6} ms (limit {} ms){}",
            self.index,
            self.name,
            self.millis,
            self.limit_millis,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(" -- {}", self.detail)
            }
        )
    }
}

/// Shared evidence gathered while the suite runs: every extended structure
/// produced anywhere, and every morphism that passed the full check.
#[derive(Default)]
struct Evidence {
    structures: Vec<ExtFrobAlgebra>,
    passing_morphisms: Vec<Matrix>,
}

struct Runner {
    outcomes: Vec<CriterionOutcome>,
    evidence: Evidence,
    budget: u64,
}

impl Runner {
    fn run<F>(&mut self, index: usize, name: &'static str, limit_millis: u128, body: F)
    where
        F: FnOnce(&mut Evidence, u64) -> Result<(bool, String)>,
    {
        self.run_inner(index, name, limit_millis, false, body)
    }

    fn run_info<F>(&mut self, index: usize, name: &'static str, limit_millis: u128, body: F)
    where
        F: FnOnce(&mut Evidence, u64) -> Result<(bool, String)>,
    {
        self.run_inner(index, name, limit_millis, true, body)
    }

    fn run_inner<F>(
        &mut self,
        index: usize,
        name: &'static str,
        limit_millis: u128,
        informational: bool,
        body: F,
    ) where
        F: FnOnce(&mut Evidence, u64) -> Result<(bool, String)>,
    {
        let start = Instant::now();
        let budget = self.budget;
        let (content_ok, detail) = match body(&mut self.evidence, budget) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        let millis = start.elapsed().as_millis();
        // wall-clock limits are enforced for optimized builds; debug builds
        // report the time but do not fail on it
        let time_ok = millis <= limit_millis || cfg!(debug_assertions);
        self.outcomes.push(CriterionOutcome {
            index,
            name,
            passed: content_ok && time_ok,
            informational,
            detail: if !time_ok && content_ok {
                format!("over time limit; {detail}")
            } else {
                detail
            },
            millis,
            limit_millis,
        });
    }
}

fn field(n: u64) -> Result<Arc<CycField>> {
    CycField::new(n)
}

fn ext_structs(list: &[ExtFrobAlgebra]) -> Vec<ExtStructure> {
    list.iter().map(|e| e.ext.clone()).collect()
}

/// Runs the whole suite. The seed feeds the randomized functor samples and
/// is echoed in the outcome details for reproducibility.
pub fn run_acceptance(seed: u64) -> Vec<CriterionOutcome> {
    let mut r = Runner {
        outcomes: Vec::new(),
        evidence: Evidence::default(),
        budget: default_budget(),
    };

    // 1 -----------------------------------------------------------------
    r.run(1, "base-field classification", 1_000, |ev, budget| {
        let f = field(1)?;
        let fa = unit_frobenius(&f)?;
        let lat = family_lattice("k", None, &f)?;
        let c = classify_extended(&fa, &lat, &[], budget)?;
        for s in &c.structures {
            ev.structures
                .push(ExtFrobAlgebra::new(fa.clone(), s.phi.clone(), s.theta.clone())?);
        }
        let phis_ok = c.structures.iter().all(|s| s.phi.is_identity());
        let thetas: Vec<String> = c
            .structures
            .iter()
            .map(|s| s.theta.to_strings().join(","))
            .collect();
        let ok = c.structures.len() == 2
            && phis_ok
            && c.classes.len() == 2
            && c.unresolved.is_empty()
            && thetas.contains(&"1".to_string())
            && thetas.contains(&"-1".to_string());
        Ok((
            ok,
            format!(
                "{} structures in {} classes",
                c.structures.len(),
                c.classes.len()
            ),
        ))
    });

    // 2 -----------------------------------------------------------------
    r.run(2, "complex-over-real classification", 1_000, |ev, budget| {
        let f = field(8)?;
        let fa = complex_over_real_frobenius(&f)?;
        let lat = family_lattice("complex-over-real", None, &f)?;
        let c = classify_extended(&fa, &lat, &[], budget)?;
        for s in &c.structures {
            ev.structures
                .push(ExtFrobAlgebra::new(fa.clone(), s.phi.clone(), s.theta.clone())?);
        }
        let golden = family_structures("complex-over-real", &f)?.unwrap();
        let all_found = golden.iter().all(|e| {
            c.structures
                .iter()
                .any(|s| s.phi == *e.phi() && s.theta == *e.theta())
        });
        let ok = c.structures.len() == 3
            && c.classes.len() == 3
            && c.unresolved.is_empty()
            && all_found;
        Ok((
            ok,
            format!("{} structures in {} classes", c.structures.len(), c.classes.len()),
        ))
    });

    // 3 -----------------------------------------------------------------
    r.run(3, "truncated-polynomial classification", 5_000, |ev, budget| {
        let mut detail = String::new();
        let mut ok = true;
        for n in [2usize, 4, 6] {
            let f = field(family_conductor("nilpotent", Some(n))?)?;
            let fa = nilpotent_algebra(n, &f)?;
            let lat = family_lattice("nilpotent", Some(n), &f)?;
            let c = classify_extended(&fa, &lat, &[], budget)?;
            if !c.structures.is_empty() {
                ok = false;
                detail.push_str(&format!("n={n} unexpectedly extendable; "));
            }
        }
        for n in [3usize, 5] {
            let f = field(family_conductor("nilpotent", Some(n))?)?;
            let fa = nilpotent_algebra(n, &f)?;
            let lat = family_lattice("nilpotent", Some(n), &f)?;
            let c = classify_extended(&fa, &lat, &[], budget)?;
            let s_n = sqrt_rational(&f, n as u64)?;
            let mid = (n - 1) / 2;
            let families_ok = c.structures.len() == 2
                && c.structures.iter().all(|s| {
                    s.phi.is_identity()
                        && (*s.theta.get(mid) == s_n || *s.theta.get(mid) == s_n.neg())
                        && s.theta
                            .entries()
                            .iter()
                            .enumerate()
                            .all(|(i, v)| i == mid || v.is_zero())
                        && s.free_directions.len() == n - 1 - mid
                        && s.free_directions.iter().all(|dir| {
                            let nz: Vec<usize> =
                                (0..n).filter(|&i| !dir.get(i).is_zero()).collect();
                            nz.len() == 1 && nz[0] > mid
                        })
                });
            if !families_ok {
                ok = false;
                detail.push_str(&format!("n={n} family shape wrong; "));
            }
            for s in &c.structures {
                ev.structures
                    .push(ExtFrobAlgebra::new(fa.clone(), s.phi.clone(), s.theta.clone())?);
            }
        }
        if detail.is_empty() {
            detail = "n=2,4,6 empty; n=3,5 basepoint plus free tail".into();
        }
        Ok((ok, detail))
    });

    // 4 -----------------------------------------------------------------
    r.run(4, "order-2 cyclic group classification", 5_000, |ev, budget| {
        let f = field(8)?;
        let g = GroupTable::cyclic(2)?;
        let fa = group_algebra(&g, &f)?;
        let lat = family_lattice("kC2", None, &f)?;
        let witnesses = family_witnesses("kC2", &f)?;
        let c = classify_extended(&fa, &lat, &witnesses, budget)?;
        for s in &c.structures {
            ev.structures
                .push(ExtFrobAlgebra::new(fa.clone(), s.phi.clone(), s.theta.clone())?);
        }
        // the shipped witness g -> -g pairs (id, +-sqrt2 g)
        let golden = family_structures("kC2", &f)?.unwrap();
        let plus_g = &golden[1];
        let minus_g = &golden[3];
        let wrep = check_ext_morphism(plus_g, minus_g, &witnesses[0])?;
        if wrep.passed() {
            ev.passing_morphisms.push(witnesses[0].clone());
        }
        let golden_found = golden.iter().all(|e| {
            c.structures
                .iter()
                .any(|s| s.phi == *e.phi() && s.theta == *e.theta())
        });
        let ok = c.structures.len() == 6
            && c.classes.len() == 4
            && c.unresolved.is_empty()
            && golden_found
            && wrep.passed();
        Ok((
            ok,
            format!(
                "claimed 6 structures; classifier found {} in {} classes, {} unresolved",
                c.structures.len(),
                c.classes.len(),
                c.unresolved.len()
            ),
        ))
    });

    // 5 -----------------------------------------------------------------
    r.run(5, "order-3 cyclic group structures", 10_000, |ev, _| {
        let f = field(12)?;
        let golden = family_structures("kC3", &f)?.unwrap();
        let mut all_pass = true;
        for e in &golden {
            if !check_extended(e)?.passed() {
                all_pass = false;
            }
            ev.structures.push(e.clone());
        }
        // class count under the shipped witness set (empty for this family):
        // nothing is identified, matching the claim that the listed
        // structures are pairwise non-isomorphic
        let fa = golden[0].frob.clone();
        let witnesses = family_witnesses("kC3", &f)?;
        let classes = group_by_witnesses(&fa, &ext_structs(&golden), &witnesses)?;
        let ok = all_pass && classes.len() == golden.len();
        Ok((
            ok,
            format!(
                "{} structures all pass; {} classes under the shipped witnesses",
                golden.len(),
                classes.len()
            ),
        ))
    });

    // 6 -----------------------------------------------------------------
    r.run(
        6,
        "order-4 cyclic group structures and witness grouping",
        30_000,
        |ev, _| {
            let f = field(8)?;
            let golden = family_structures("kC4", &f)?.unwrap();
            let mut all_pass = true;
            for e in &golden {
                if !check_extended(e)?.passed() {
                    all_pass = false;
                }
                ev.structures.push(e.clone());
            }
            let fa = golden[0].frob.clone();
            let witnesses = family_witnesses("kC4", &f)?;
            // record the passing witness applications for the invertibility sweep
            for s in &golden {
                for t in &golden {
                    for w in &witnesses {
                        if check_ext_morphism(s, t, w)?.passed() {
                            ev.passing_morphisms.push(w.clone());
                        }
                    }
                }
            }
            let classes = group_by_witnesses(&fa, &ext_structs(&golden), &witnesses)?;
            let ok = all_pass && classes.len() == 8;
            Ok((
                ok,
                format!(
                    "{} structures all pass: {}; witness grouping gives {} classes (claimed 8)",
                    golden.len(),
                    all_pass,
                    classes.len()
                ),
            ))
        },
    );

    // 7 -----------------------------------------------------------------
    r.run(7, "klein four-group structures", 5_000, |ev, _| {
        let f = field(1)?;
        let golden = family_structures("klein-four", &f)?.unwrap();
        let mut all_pass = true;
        for e in &golden {
            if !check_extended(e)?.passed() {
                all_pass = false;
            }
            ev.structures.push(e.clone());
        }
        Ok((
            all_pass && golden.len() == 43,
            format!("{} structures across all index roles", golden.len()),
        ))
    });

    // 8 -----------------------------------------------------------------
    r.run(
        8,
        "smallest taft algebra involutions and theta span",
        5_000,
        |ev, budget| {
            let f = field(2)?;
            let fa = taft_algebra(2, 1, &f)?;
            let lat = family_lattice("taft2", None, &f)?;
            let invs = find_frobenius_involutions(&fa, &lat, budget)?;
            let id = Matrix::identity(&f, 4);
            let only_identity = invs.len() == 1 && invs[0].is_identity();

            // theta solutions for the identity involution fill exactly the
            // lattice points of span{x, gx}, and theta^2 = 0 on each
            let thetas = solve_theta(&fa, &id, &lat, budget)?;
            let mut span_ok = !thetas.is_empty();
            for t in &thetas {
                if !t.get(0).is_zero() || !t.get(2).is_zero() {
                    span_ok = false;
                }
                if !fa.mult(t, t)?.is_zero() {
                    span_ok = false;
                }
            }
            let expected = lat.len() * lat.len();
            span_ok = span_ok && thetas.len() == expected;
            for t in &thetas {
                ev.structures
                    .push(ExtFrobAlgebra::new(fa.clone(), id.clone(), t.clone())?);
            }
            // the extra involutions admit no theta, so every extension is
            // phi-trivial regardless
            let mut extras_admit_none = true;
            for m in &invs {
                if m.is_identity() {
                    continue;
                }
                if !solve_theta(&fa, m, &lat, budget)?.is_empty() {
                    extras_admit_none = false;
                }
            }
            let ok = only_identity && span_ok && extras_admit_none;
            Ok((
                ok,
                format!(
                    "involution search found {} maps (claimed exactly the identity); \
                     {} theta solutions all inside span{{x,gx}} with square zero",
                    invs.len(),
                    thetas.len()
                ),
            ))
        },
    );

    // 9 -----------------------------------------------------------------
    r.run(9, "key identity property suite", 5_000, |ev, _| {
        let mut checked = 0usize;
        let mut failures = 0usize;
        for e in &ev.structures {
            checked += 1;
            if !check_key_identity(e)? {
                failures += 1;
            }
        }
        let ok = failures == 0 && checked >= 40;
        Ok((ok, format!("{checked} structures checked, {failures} failures")))
    });

    // 10 ----------------------------------------------------------------
    r.run(10, "morphism invertibility", 5_000, |ev, _| {
        let mut checked = 0usize;
        let mut violations = 0usize;
        for m in &ev.passing_morphisms {
            checked += 1;
            if !m.is_invertible()? {
                violations += 1;
            }
        }
        Ok((
            violations == 0 && checked > 0,
            format!("{checked} passing morphisms, {violations} singular"),
        ))
    });

    // 11 ----------------------------------------------------------------
    r.run(11, "tensor and biproduct closure", 60_000, |ev, _| {
        let factors = closure_factors()?;
        let mut pairs = 0usize;
        let mut failures = 0usize;
        for i in 0..factors.len() {
            for j in i..factors.len() {
                let (a, b) = (&factors[i], &factors[j]);
                if a.dim() * b.dim() > 16 {
                    continue;
                }
                let cond = lcm(a.field().conductor(), b.field().conductor());
                let f = field(cond)?;
                let ae = a.embed_into(&f)?;
                let be = b.embed_into(&f)?;
                let t = tensor_product_ext(&ae, &be)?;
                if !check_extended(&t)?.passed() {
                    failures += 1;
                }
                ev.structures.push(t);
                let s = biproduct_ext(&ae, &be)?;
                if !check_extended(&s)?.passed() {
                    failures += 1;
                }
                ev.structures.push(s);
                pairs += 1;
            }
        }
        Ok((
            failures == 0 && pairs >= 25,
            format!("{pairs} pairs, {failures} failures"),
        ))
    });

    // 12 ----------------------------------------------------------------
    r.run(12, "separable extensions", 10_000, |ev, _| {
        let mut ok = true;
        let mut detail = String::new();
        let f1 = field(1)?;
        let unit = unit_frobenius(&f1)?;
        let e = separable_extension(&unit)?;
        if !check_extended(&e)?.passed() {
            ok = false;
            detail.push_str("unit algebra failed; ");
        }
        ev.structures.push(e);
        for n in 2..=3usize {
            let f = field(sqrt_conductor(n as u64).max(1))?;
            let m = matrix_algebra(n, &f)?;
            if !check_extended(&m)?.passed() {
                ok = false;
                detail.push_str(&format!("matrix {n} catalog extension failed; "));
            }
            ev.structures.push(m.clone());
            let resc = m
                .frob
                .rescale_delta(&CycScalar::from_rational(&f, rat(1, n as i64)))?;
            if !check_separable(&resc)? {
                ok = false;
                detail.push_str(&format!("matrix {n} rescale not separable; "));
            }
            let se = separable_extension(&resc)?;
            if !check_extended(&se)?.passed() {
                ok = false;
                detail.push_str(&format!("matrix {n} separable extension failed; "));
            }
            ev.structures.push(se);
        }
        let f = field(1)?;
        let m1 = matrix_algebra(1, &f)?;
        if !check_extended(&m1)?.passed() {
            ok = false;
            detail.push_str("matrix 1 failed; ");
        }
        if detail.is_empty() {
            detail = "unit, matrix 1..3 catalog and rescaled separable extensions pass".into();
        }
        Ok((ok, detail))
    });

    // 13 ----------------------------------------------------------------
    r.run(13, "hopf-induced frobenius structures", 30_000, |_, _| {
        let f = field(1)?;
        let mut ok = true;
        let mut detail = String::new();
        for (name, table) in acceptance_groups()? {
            let h = group_hopf(&table, &f)?;
            let induced = psi(&h)?;
            let direct = group_algebra(&table, &f)?;
            if induced != direct {
                ok = false;
                detail.push_str(&format!("{name}: induced differs from direct; "));
            }
            if !check_frobenius(&induced)?.passed() {
                ok = false;
                detail.push_str(&format!("{name}: induced structure fails; "));
            }
            let comp = check_integral_composites(&h)?;
            if !comp.passed() {
                ok = false;
                detail.push_str(&format!("{name}: composite identities fail; "));
            }
        }
        if detail.is_empty() {
            detail = "7 groups: induced structure equals the direct one, composites hold".into();
        }
        Ok((ok, detail))
    });

    // 14 ----------------------------------------------------------------
    r.run(14, "integral square-root extensions", 10_000, |ev, _| {
        let mut ok = true;
        let mut detail = String::new();
        for (name, table) in acceptance_groups()? {
            let cond = sqrt_conductor(table.order as u64).max(1);
            let f = field(cond)?;
            let h = group_hopf(&table, &f)?;
            let s = sqrt_rational(&f, table.order as u64)?;
            let theta = Vector::unit(&f, table.order, table.identity).scale(&s)?;
            match integral_theta_extension(&h, &theta)? {
                IntegralThetaOutcome::Extended(e) => {
                    if !check_extended(&e)?.passed() {
                        ok = false;
                        detail.push_str(&format!("{name}: extension invalid; "));
                    }
                    ev.structures.push(e);
                }
                IntegralThetaOutcome::Mismatch { .. } => {
                    ok = false;
                    detail.push_str(&format!("{name}: unexpected mismatch; "));
                }
            }
            // wrong theta is rejected with both sides reported
            let bad = Vector::unit(&f, table.order, table.identity);
            match integral_theta_extension(&h, &bad)? {
                IntegralThetaOutcome::Mismatch { lhs, rhs } => {
                    if lhs == rhs {
                        ok = false;
                    }
                }
                IntegralThetaOutcome::Extended(_) => {
                    if table.order > 1 {
                        ok = false;
                        detail.push_str(&format!("{name}: bad theta accepted; "));
                    }
                }
            }
        }
        if detail.is_empty() {
            detail = "square-root integral extension passes for all 7 groups".into();
        }
        Ok((ok, detail))
    });

    // 15 ----------------------------------------------------------------
    r.run(15, "hopf-versus-frobenius extension gap", 5_000, |ev, _| {
        let f = field(8)?;
        let g = GroupTable::cyclic(2)?;
        let h = group_hopf(&g, &f)?;
        let s2 = sqrt_rational(&f, 2)?;
        let id = Matrix::identity(&f, 2);
        let theta = Vector::unit(&f, 2, 0).scale(&s2)?;
        let good = check_extended_hopf(&h, &id, &theta)?;
        let phi_neg = Matrix::from_ints(&f, &[&[1, 0], &[0, -1]]);
        let zero = Vector::zeros(&f, 2);
        let gap = check_extended_hopf(&h, &phi_neg, &zero)?;
        let fro = psi(&h)?;
        let fro_side = ExtFrobAlgebra::new(fro, phi_neg, zero)?;
        let fro_ok = check_extended(&fro_side)?.passed();
        ev.structures.push(fro_side);
        let ok = good.passed() && !gap.passed() && fro_ok;
        Ok((
            ok,
            format!(
                "identity extension passes: {}; sign-flip hopf check fails: {}; \
                 sign-flip frobenius extension passes: {}",
                good.passed(),
                !gap.passed(),
                fro_ok
            ),
        ))
    });

    // 16 ----------------------------------------------------------------
    r.run(16, "tensor and biproduct functors", 60_000, |_, _| {
        let f = field(8)?;
        let golden = family_structures("kC2", &f)?.unwrap();
        let carriers = [golden[0].clone(), golden[4].clone()];
        let sample = ObjectSample::generate(&f, &[1, 2, 3], 5, seed);
        let mut ok = true;
        let mut detail = String::new();
        for (i, b) in carriers.iter().enumerate() {
            for fr in [
                RealizedFunctor::TensorWith(b.clone()),
                RealizedFunctor::BiproductWith(b.clone()),
            ] {
                if !check_frobenius_functor(&fr, &sample)?.passed() {
                    ok = false;
                    detail.push_str(&format!("carrier {i}: frobenius functor check failed; "));
                }
                if !check_extended_functor(&fr, &sample)?.passed() {
                    ok = false;
                    detail.push_str(&format!("carrier {i}: extended functor check failed; "));
                }
            }
        }
        // tensoring with the group Frobenius algebra is not separable
        let fr = RealizedFunctor::TensorWith(carriers[0].clone());
        if check_separable_functor(&fr, &sample)? {
            ok = false;
            detail.push_str("group carrier unexpectedly separable; ");
        }
        if detail.is_empty() {
            detail = format!("4 functors pass on dims 1,2,3 (seed {seed})");
        }
        Ok((ok, detail))
    });

    // 17 ----------------------------------------------------------------
    r.run(17, "functor images match products", 30_000, |ev, _| {
        let f = field(8)?;
        let golden = family_structures("kC2", &f)?.unwrap();
        let carriers = [golden[0].clone(), golden[4].clone()];
        let arguments = [
            unit_extended(&f)?,
            golden[1].clone(),
            family_structures("complex-over-real", &f)?.unwrap()[2].clone(),
        ];
        let mut ok = true;
        let mut pairs = 0usize;
        let mut detail = String::new();
        for b in &carriers {
            for a in &arguments {
                pairs += 1;
                let tf = RealizedFunctor::TensorWith(b.clone());
                let image = apply_functor(&tf, a)?;
                let direct = tensor_product_ext(a, b)?;
                if !check_extended(&image)?.passed()
                    || image.frob.m() != direct.frob.m()
                    || image.frob.delta() != direct.frob.delta()
                    || image.frob.eps() != direct.frob.eps()
                    || image.frob.u() != direct.frob.u()
                    || image.phi() != direct.phi()
                    || image.theta() != direct.theta()
                {
                    ok = false;
                    detail.push_str("tensor image mismatch; ");
                }
                ev.structures.push(image);
                let bf = RealizedFunctor::BiproductWith(b.clone());
                let image = apply_functor(&bf, a)?;
                let direct = biproduct_ext(a, b)?;
                if !check_extended(&image)?.passed()
                    || image.frob.m() != direct.frob.m()
                    || image.frob.delta() != direct.frob.delta()
                    || image.phi() != direct.phi()
                    || image.theta() != direct.theta()
                {
                    ok = false;
                    detail.push_str("biproduct image mismatch; ");
                }
                ev.structures.push(image);
            }
        }
        if detail.is_empty() {
            detail = format!("{pairs} argument/carrier pairs match entrywise");
        }
        Ok((ok, detail))
    });

    // 18 ----------------------------------------------------------------
    r.run(18, "functor composition", 60_000, |_, _| {
        let f = field(8)?;
        let golden = family_structures("kC2", &f)?.unwrap();
        let b1 = golden[0].clone();
        let b2 = golden[4].clone();
        let sample = ObjectSample::generate(&f, &[1, 2], 3, seed);
        let pairs: Vec<(RealizedFunctor, RealizedFunctor)> = vec![
            (
                RealizedFunctor::TensorWith(b1.clone()),
                RealizedFunctor::TensorWith(b2.clone()),
            ),
            (
                RealizedFunctor::TensorWith(b2.clone()),
                RealizedFunctor::BiproductWith(b1.clone()),
            ),
            (
                RealizedFunctor::BiproductWith(b1.clone()),
                RealizedFunctor::TensorWith(b2.clone()),
            ),
            (
                RealizedFunctor::BiproductWith(b2),
                RealizedFunctor::BiproductWith(b1),
            ),
        ];
        let mut ok = true;
        let mut detail = String::new();
        for (i, (outer, inner)) in pairs.into_iter().enumerate() {
            if !check_extended_functor(&outer, &sample)?.passed()
                || !check_extended_functor(&inner, &sample)?.passed()
            {
                ok = false;
                detail.push_str(&format!("pair {i}: factor check failed; "));
                continue;
            }
            let comp = compose_functors(outer, inner);
            if !check_frobenius_functor(&comp, &sample)?.passed()
                || !check_extended_functor(&comp, &sample)?.passed()
            {
                ok = false;
                detail.push_str(&format!("pair {i}: composition failed; "));
            }
        }
        if detail.is_empty() {
            detail = format!("4 compositions pass on dims 1,2 (seed {seed})");
        }
        Ok((ok, detail))
    });

    // 19 ----------------------------------------------------------------
    r.run_info(
        19,
        "involution-shape evidence on larger cyclic groups",
        120_000,
        |_, budget| {
            let mut detail = String::from("EVIDENCE: ");
            let mut ok = true;
            for n in [5usize, 6] {
                let name = if n == 5 { "kC5" } else { "kC6" };
                let f = field(family_conductor(name, None)?)?;
                let g = GroupTable::cyclic(n)?;
                let fa = group_algebra(&g, &f)?;
                let lat = family_lattice(name, None, &f)?;
                let invs = find_frobenius_involutions(&fa, &lat, budget)?;
                let mut shapes_ok = true;
                for m in &invs {
                    if !involution_has_conjectured_shape(m, n)? {
                        shapes_ok = false;
                    }
                }
                if !shapes_ok {
                    ok = false;
                }
                detail.push_str(&format!(
                    "order {n}: {} involutions at the documented lattice, shapes ok: {shapes_ok}; ",
                    invs.len()
                ));
            }
            Ok((ok, detail))
        },
    );

    r.outcomes
}

/// An involution on a cyclic group algebra has a conjectured shape when it
/// sends the generator to `c g` with `c^2 = 1` or to `w g^(n-1)` for an
/// n-th root of unity `w`.
fn involution_has_conjectured_shape(phi: &Matrix, n: usize) -> Result<bool> {
    let col = phi.column(1);
    let support: Vec<usize> = (0..n).filter(|&i| !col.get(i).is_zero()).collect();
    if support.len() != 1 {
        return Ok(false);
    }
    let target = support[0];
    let coef = col.get(target);
    if target == 1 {
        let sq = coef.mul(coef)?;
        return Ok(sq.is_one());
    }
    if target == n - 1 {
        let pw = coef.pow(n as u64)?;
        return Ok(pw.is_one());
    }
    Ok(false)
}

/// The extended algebras whose pairwise tensor/biproduct products are
/// checked in the closure criterion.
fn closure_factors() -> Result<Vec<ExtFrobAlgebra>> {
    let f1 = field(1)?;
    let f8 = field(8)?;
    let f12 = field(12)?;
    let f2 = field(2)?;
    let kc2 = family_structures("kC2", &f8)?.unwrap();
    let cr = family_structures("complex-over-real", &f8)?.unwrap();
    let kc3 = family_structures("kC3", &f12)?.unwrap();
    let kc4 = family_structures("kC4", &f8)?.unwrap();
    let klein = family_structures("klein-four", &f1)?.unwrap();
    // truncated-polynomial basepoint structure at n = 3
    let fn3 = field(family_conductor("nilpotent", Some(3))?)?;
    let nil3 = nilpotent_algebra(3, &fn3)?;
    let s3 = sqrt_rational(&fn3, 3)?;
    let mut theta = Vector::zeros(&fn3, 3);
    theta.set(1, s3);
    let nil3e = ExtFrobAlgebra::new(nil3, Matrix::identity(&fn3, 3), theta)?;
    // smallest taft structure (id, x)
    let t2 = taft_algebra(2, 1, &f2)?;
    let mut tx = Vector::zeros(&f2, 4);
    tx.set(1, CycScalar::one(&f2));
    let t2e = ExtFrobAlgebra::new(t2, Matrix::identity(&f2, 4), tx)?;
    Ok(vec![
        unit_extended(&f1)?,     // dim 1
        kc2[0].clone(),          // dim 2
        kc2[4].clone(),          // dim 2
        cr[2].clone(),           // dim 2
        kc3[0].clone(),          // dim 3
        nil3e,                   // dim 3
        kc4[8].clone(),          // dim 4 (sign involution, theta 0)
        klein[0].clone(),        // dim 4
        t2e,                     // dim 4
        matrix_algebra(2, &f8)?, // dim 4
    ])
}

fn acceptance_groups() -> Result<Vec<(&'static str, GroupTable)>> {
    Ok(vec![
        ("C2", GroupTable::cyclic(2)?),
        ("C3", GroupTable::cyclic(3)?),
        ("C4", GroupTable::cyclic(4)?),
        ("C2xC2", GroupTable::klein_four()?),
        ("C5", GroupTable::cyclic(5)?),
        ("C6", GroupTable::cyclic(6)?),
        ("S3", GroupTable::symmetric_3()?),
    ])
}
