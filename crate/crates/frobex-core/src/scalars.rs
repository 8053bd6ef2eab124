//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Every coefficient used anywhere in this crate is a [`CycScalar`]: a residue
//! of `Q[z]` modulo the N-th cyclotomic polynomial. This gives decidable,
//! exact equality for all the scalars the algebra constructions need: roots of
//! unity, square roots of integers (via Gauss sums), the imaginary unit, and
//! plain rationals.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{FrobexError, Result};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

/// Largest conductor accepted by [`CycField::new`]. `phi(120) = 32` keeps the
/// dense polynomial arithmetic fast.
pub const CONDUCTOR_CAP: u64 = 120;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Euler totient by trial division.
fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Dense polynomial over `Rational`, little-endian coefficients.
/// Internal helper for cyclotomic polynomial construction and reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<Rational>);

impl Poly {
    fn trim(mut self) -> Poly {
        while self.0.len() > 1 && self.0.last().map(Zero::is_zero).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn x_pow_minus_one(n: u64) -> Poly {
        let mut c = vec![Rational::zero(); n as usize + 1];
        c[0] = -Rational::one();
        c[n as usize] = Rational::one();
        Poly(c)
    }

    /// Exact division, panics if the remainder is nonzero. Only used while
    /// building cyclotomic polynomials, where divisibility is guaranteed.
    fn div_exact(&self, divisor: &Poly) -> Poly {
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        let lead = divisor.0[dd].clone();
        assert!(rem.len() > dd, "degree underflow in exact division");
        let qlen = rem.len() - dd;
        let mut q = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let coef = &rem[i + dd] / &lead;
            if coef.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                let t = &coef * d;
                rem[i + j] -= t;
            }
            q[i] = coef;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        Poly(q).trim()
    }
}

/// The field `Q(zeta_N)`, presented as `Q[z]` modulo the N-th cyclotomic
/// polynomial.
#[derive(Debug)]
pub struct CycField {
    conductor: u64,
    /// Monic coefficient list of `Phi_N`, little-endian, length `degree + 1`.
    min_poly: Vec<Rational>,
    degree: usize,
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}
impl Eq for CycField {}

impl CycField {
    /// Builds `Q(zeta_n)`. `Phi_n` is computed by exact recursive division of
    /// `x^n - 1` by the cyclotomic polynomials of the proper divisors of `n`.
    pub fn new(n: u64) -> Result<Arc<CycField>> {
        if n == 0 {
            return Err(FrobexError::Capacity {
                what: "conductor must be positive".into(),
            });
        }
        if n > CONDUCTOR_CAP {
            return Err(FrobexError::Capacity {
                what: format!("conductor {n} exceeds cap {CONDUCTOR_CAP}"),
            });
        }
        let mut cache: Vec<Option<Poly>> = vec![None; n as usize + 1];
        let phi_n = cyclotomic_poly(n, &mut cache);
        let degree = phi_n.degree();
        debug_assert_eq!(degree as u64, totient(n));
        debug_assert!(phi_n.0[degree].is_one());
        // Phi_n divides x^n - 1 exactly; div_exact asserts this.
        let _check = Poly::x_pow_minus_one(n).div_exact(&phi_n);
        Ok(Arc::new(CycField {
            conductor: n,
            min_poly: phi_n.0,
            degree,
        }))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }
}

fn cyclotomic_poly(n: u64, cache: &mut Vec<Option<Poly>>) -> Poly {
    if let Some(p) = &cache[n as usize] {
        return p.clone();
    }
    let mut quotient = Poly::x_pow_minus_one(n);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d, cache);
            quotient = quotient.div_exact(&phi_d);
        }
    }
    cache[n as usize] = Some(quotient.clone());
    quotient
}

/// An element of `Q(zeta_N)`: the unique reduced residue mod `Phi_N`,
/// stored as `degree` rational coefficients.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tagged_string())
    }
}

impl CycScalar {
    pub fn zero(field: &Arc<CycField>) -> CycScalar {
        CycScalar {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CycField>) -> CycScalar {
        CycScalar::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CycField>, r: Rational) -> CycScalar {
        let mut coeffs = vec![Rational::zero(); field.degree];
        coeffs[0] = r;
        CycScalar {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_int(field: &Arc<CycField>, n: i64) -> CycScalar {
        CycScalar::from_rational(field, rat_int(n))
    }

    /// The residue class of `z^k`, i.e. `zeta_N^k` (k may be any integer).
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> CycScalar {
        let n = field.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        CycScalar::reduce(field, raw)
    }

    fn reduce(field: &Arc<CycField>, mut raw: Vec<Rational>) -> CycScalar {
        let deg = field.degree;
        let min = &field.min_poly;
        while raw.len() > deg {
            let top = raw.len() - 1;
            let lead = raw.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            // subtract lead * z^(top-deg) * Phi_N
            let shift = top - deg;
            for (j, m) in min.iter().take(deg).enumerate() {
                let t = &lead * m;
                raw[shift + j] -= t;
            }
        }
        raw.resize(deg, Rational::zero());
        CycScalar {
            field: field.clone(),
            coeffs: raw,
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the value as a plain rational if it lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_field(&self, other: &CycScalar) -> Result<()> {
        if self.field != other.field {
            return Err(FrobexError::FieldMismatch {
                left: self.field.conductor,
                right: other.field.conductor,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycScalar) -> Result<CycScalar> {
        self.check_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycScalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycScalar) -> Result<CycScalar> {
        self.check_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycScalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycScalar) -> Result<CycScalar> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CycScalar::zero(&self.field));
        }
        let deg = self.field.degree;
        let mut raw = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Ok(CycScalar::reduce(&self.field, raw))
    }

    pub fn scale(&self, r: &Rational) -> CycScalar {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representative and `Phi_N` in `Q[z]`.
    pub fn inverse(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(FrobexError::DivisionByZero);
        }
        // Extended Euclid over Q[z]: maintain r0, r1 and s0, s1 with
        // r_i = s_i * self (mod Phi_N).
        let modulus = Poly(self.field.min_poly.clone());
        let mut r0 = modulus.0.clone();
        let mut r1 = self.coeffs.clone();
        while r1.len() > 1 && r1.last().map(Zero::is_zero).unwrap_or(false) {
            r1.pop();
        }
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];
        loop {
            // r1 is nonzero here; divide r0 by r1.
            let (q, r) = poly_divmod(&r0, &r1);
            if r.iter().all(Zero::is_zero) {
                break;
            }
            let s_new = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_new;
        }
        // r1 is now the gcd, a nonzero constant (Phi_N is irreducible).
        debug_assert!(r1.len() == 1 || r1[1..].iter().all(Zero::is_zero));
        let g = r1[0].clone();
        debug_assert!(!g.is_zero(), "gcd degenerate in cyclotomic inverse");
        let inv_coeffs: Vec<Rational> = s1.iter().map(|c| c / &g).collect();
        let inv = CycScalar::reduce(&self.field, inv_coeffs);
        debug_assert!(inv.mul(self).unwrap().is_one());
        Ok(inv)
    }

    pub fn div(&self, other: &CycScalar) -> Result<CycScalar> {
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Result<CycScalar> {
        let mut base = self.clone();
        let mut acc = CycScalar::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Image under the embedding `zeta_N -> zeta_M^(M/N)`. Requires
    /// `N | M`; embedding is a field homomorphism.
    pub fn embed(&self, target: &Arc<CycField>) -> Result<CycScalar> {
        let n = self.field.conductor;
        let m = target.conductor;
        if m % n != 0 {
            return Err(FrobexError::NonDivisibleConductor { from: n, to: m });
        }
        let step = (m / n) as usize;
        let mut raw = vec![Rational::zero(); (self.field.degree - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * step] += c;
            }
        }
        Ok(CycScalar::reduce(target, raw))
    }

    /// Deterministic total order on scalars of one field: lexicographic on
    /// the coefficient vector. Used for stable search/report ordering.
    pub fn cmp_lex(&self, other: &CycScalar) -> std::cmp::Ordering {
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            let o = a.cmp(b);
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    }
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (vec![Rational::zero()], rem);
    }
    let qlen = rem.len() - db;
    let mut q = vec![Rational::zero(); qlen];
    for i in (0..qlen).rev() {
        let coef = &rem[i + db] / lead;
        if coef.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            let t = &coef * d;
            rem[i + j] -= t;
        }
        q[i] = coef;
    }
    while rem.len() > 1 && rem.last().map(Zero::is_zero).unwrap_or(false) {
        rem.pop();
    }
    (q, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// `zeta_N^(k*N/n)`, an exact n-th root of unity. Requires `n | N`, except
/// that `n = 1` and `n = 2` are available in every field.
pub fn root_of_unity(field: &Arc<CycField>, n: u64, k: i64) -> Result<CycScalar> {
    if n == 0 {
        return Err(FrobexError::Capacity {
            what: "root order must be positive".into(),
        });
    }
    if n == 1 {
        return Ok(CycScalar::one(field));
    }
    if n == 2 {
        return Ok(if k.rem_euclid(2) == 0 {
            CycScalar::one(field)
        } else {
            CycScalar::from_int(field, -1)
        });
    }
    let cond = field.conductor;
    if cond % n != 0 {
        return Err(FrobexError::ConductorTooSmall {
            needed: n,
            have: cond,
        });
    }
    let step = (cond / n) as i64;
    Ok(CycScalar::zeta_pow(field, k * step))
}

/// Smallest conductor whose cyclotomic field contains `sqrt(n)` under the
/// Gauss-sum construction: lcm of 8 (if 2 divides the squarefree part) and,
/// per odd prime p dividing it, p when `p = 1 (mod 4)` and 4p otherwise.
pub fn sqrt_conductor(n: u64) -> u64 {
    let (_, squarefree) = square_split(n);
    let mut cond = 1u64;
    let mut m = squarefree;
    if m % 2 == 0 {
        cond = lcm(cond, 8);
        m /= 2;
    }
    let mut p = 3;
    while p * p <= m {
        if m % p == 0 {
            cond = lcm(cond, if p % 4 == 1 { p } else { 4 * p });
            m /= p;
        } else {
            p += 2;
        }
    }
    if m > 1 {
        cond = lcm(cond, if m % 4 == 1 { m } else { 4 * m });
    }
    cond
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Splits `n = m^2 * s` with `s` squarefree; returns `(m, s)`.
fn square_split(n: u64) -> (u64, u64) {
    let mut m = 1u64;
    let mut s = 1u64;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    if rest > 1 {
        s *= rest;
    }
    (m, s)
}

/// Exact `sqrt(n)` built multiplicatively from prime factors:
/// `sqrt(2) = zeta_8 + zeta_8^7`, and for odd prime p the quadratic Gauss
/// sum (corrected by `i = zeta_4` when `p = 3 (mod 4)`). The result is
/// verified by squaring before it is returned.
pub fn sqrt_rational(field: &Arc<CycField>, n: u64) -> Result<CycScalar> {
    if n == 0 {
        return Ok(CycScalar::zero(field));
    }
    let needed = sqrt_conductor(n);
    if field.conductor % needed != 0 {
        return Err(FrobexError::ConductorTooSmall {
            needed,
            have: field.conductor,
        });
    }
    let (m, s) = square_split(n);
    let mut acc = CycScalar::from_rational(field, rat_int(m as i64));
    let mut rest = s;
    if rest % 2 == 0 {
        let z = root_of_unity(field, 8, 1)?;
        let z7 = root_of_unity(field, 8, 7)?;
        acc = acc.mul(&z.add(&z7)?)?;
        rest /= 2;
    }
    let mut p = 3;
    while rest > 1 {
        if rest % p == 0 {
            acc = acc.mul(&gauss_sum_sqrt(field, p)?)?;
            rest /= p;
        } else {
            p += 2;
        }
    }
    let sq = acc.mul(&acc)?;
    debug_assert_eq!(sq, CycScalar::from_int(field, n as i64), "sqrt failed to square back");
    if sq != CycScalar::from_int(field, n as i64) {
        return Err(FrobexError::Capacity {
            what: format!("sqrt({n}) construction failed verification"),
        });
    }
    Ok(acc)
}

/// `sqrt(p)` for an odd prime via the quadratic Gauss sum
/// `g = sum_a (a|p) zeta_p^a`, with `g^2 = (-1|p) p`.
fn gauss_sum_sqrt(field: &Arc<CycField>, p: u64) -> Result<CycScalar> {
    let mut g = CycScalar::zero(field);
    for a in 1..p {
        let z = root_of_unity(field, p, a as i64)?;
        if legendre(a, p) == 1 {
            g = g.add(&z)?;
        } else {
            g = g.sub(&z)?;
        }
    }
    if p % 4 == 1 {
        Ok(g)
    } else {
        // g^2 = -p, so (g / i)^2 = p.
        let i = root_of_unity(field, 4, 1)?;
        g.div(&i)
    }
}

fn legendre(a: u64, p: u64) -> i32 {
    // a^((p-1)/2) mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------
// Text serialization
// ---------------------------------------------------------------------------

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl CycScalar {
    /// Polynomial form in `z`, ascending powers, e.g. `1/2 - 2*z^3`.
    pub fn to_poly_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push_str("-");
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if k == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&format!("z^{k}"));
            } else {
                out.push_str(&format!("{}*z^{k}", format_rational(&mag)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Full form carrying the conductor: `Q(zeta_8): z^1 + z^7`.
    pub fn to_tagged_string(&self) -> String {
        format!("Q(zeta_{}): {}", self.field.conductor, self.to_poly_string())
    }

    /// Parses the polynomial form produced by [`CycScalar::to_poly_string`].
    /// Accepts terms in any order and `z` as shorthand for `z^1`.
    pub fn parse_poly(field: &Arc<CycField>, text: &str) -> Result<CycScalar> {
        let mut raw = vec![Rational::zero(); field.degree.max(1)];
        let text = text.trim();
        if text.is_empty() {
            return Err(FrobexError::Parse {
                what: "empty scalar".into(),
            });
        }
        let mut rest = text;
        let mut sign = 1i64;
        // leading sign
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            // find the end of this term: next top-level '+' or '-'
            let end = rest
                .char_indices()
                .find(|&(i, ch)| i > 0 && (ch == '+' || ch == '-') && !rest[..i].ends_with('^'))
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = rest[..end].trim();
            parse_term(field, term, sign, &mut raw)?;
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with('-') { -1 } else { 1 };
            rest = rest[end + 1..].trim_start();
            if rest.is_empty() {
                return Err(FrobexError::Parse {
                    what: format!("dangling sign in scalar '{text}'"),
                });
            }
        }
        Ok(CycScalar::reduce(field, raw))
    }

    /// Parses the tagged form `Q(zeta_N): <poly>`, building the field.
    pub fn parse_tagged(text: &str) -> Result<CycScalar> {
        let text = text.trim();
        let rest = text
            .strip_prefix("Q(zeta_")
            .ok_or_else(|| FrobexError::Parse {
                what: format!("expected 'Q(zeta_N): ...' in '{text}'"),
            })?;
        let close = rest.find(national_close).ok_or_else(|| FrobexError::Parse {
            what: format!("missing ')' in '{text}'"),
        })?;
        let n: u64 = rest[..close].parse().map_err(|_| FrobexError::Parse {
            what: format!("bad conductor in '{text}'"),
        })?;
        let after = rest[close + 1..]
            .trim_start()
            .strip_prefix(':')
            .ok_or_else(|| FrobexError::Parse {
                what: format!("missing ':' in '{text}'"),
            })?;
        let field = CycField::new(n)?;
        CycScalar::parse_poly(&field, after)
    }
}

fn national_close(c: char) -> bool {
    c == ')'
}

fn parse_term(
    field: &Arc<CycField>,
    term: &str,
    sign: i64,
    raw: &mut [Rational],
) -> Result<()> {
    let bad = |t: &str| FrobexError::Parse {
        what: format!("bad scalar term '{t}'"),
    };
    let (coef_str, pow) = if let Some(star) = term.find('*') {
        let (c, z) = term.split_at(star);
        (c.trim(), parse_z(&z[1..]).ok_or_else(|| bad(term))?)
    } else if term.starts_with('z') {
        ("1", parse_z(term).ok_or_else(|| bad(term))?)
    } else {
        (term, 0usize)
    };
    let coef: Rational = parse_rational(coef_str).ok_or_else(|| bad(term))?;
    let k = pow % field.conductor() as usize;
    // raw has space only up to degree; route high powers through zeta_pow.
    if k < raw.len() {
        raw[k] += coef * rat_int(sign);
        Ok(())
    } else {
        let z = CycScalar::zeta_pow(field, k as i64).scale(&(coef * rat_int(sign)));
        for (i, c) in z.coeffs.iter().enumerate() {
            raw[i] += c;
        }
        Ok(())
    }
}

fn parse_z(z: &str) -> Option<usize> {
    let z = z.trim();
    if z == "z" {
        return Some(1);
    }
    z.strip_prefix("z^")?.trim().parse().ok()
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some(slash) = s.find('/') {
        let n: BigInt = s[..slash].trim().parse().ok()?;
        let d: BigInt = s[slash + 1..].trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64) -> Arc<CycField> {
        CycField::new(n).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_match_textbook_values() {
        assert_eq!(f(1).degree(), 1); // Phi_1 = x - 1
        let f8 = f(8);
        assert_eq!(f8.degree(), 4);
        let expect = vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(f8.min_poly(), &expect[..]); // x^4 + 1
        let f12 = f(12);
        assert_eq!(f12.degree(), 4);
        let expect = vec![rat_int(1), rat_int(0), rat_int(-1), rat_int(0), rat_int(1)];
        assert_eq!(f12.min_poly(), &expect[..]); // x^4 - x^2 + 1
    }

    #[test]
    fn conductor_cap_enforced() {
        assert!(CycField::new(121).is_err());
        assert!(CycField::new(0).is_err());
    }

    #[test]
    fn root_of_unity_relations() {
        let f8 = f(8);
        let z = CycScalar::zeta_pow(&f8, 1);
        let z3 = CycScalar::zeta_pow(&f8, 3);
        assert_eq!(z.mul(&z3).unwrap(), CycScalar::from_int(&f8, -1));

        let f12 = f(12);
        let w3 = root_of_unity(&f12, 3, 1).unwrap();
        assert!(w3.pow(3).unwrap().is_one());
        let i = root_of_unity(&f12, 4, 1).unwrap();
        assert_eq!(i.mul(&i).unwrap(), CycScalar::from_int(&f12, -1));
        assert_eq!(
            root_of_unity(&f12, 2, 1).unwrap(),
            CycScalar::from_int(&f12, -1)
        );
        assert!(root_of_unity(&f12, 8, 1).is_err());
    }

    #[test]
    fn division_and_inverse() {
        let f12 = f(12);
        let a = CycScalar::one(&f12)
            .add(&CycScalar::zeta_pow(&f12, 1))
            .unwrap();
        assert!(a.div(&a).unwrap().is_one());
        let s3 = sqrt_rational(&f12, 3).unwrap();
        let inv = s3.inverse().unwrap();
        let three = CycScalar::from_int(&f12, 3);
        // (1/sqrt(3)) * 3 = sqrt(3)
        assert_eq!(inv.mul(&three).unwrap(), s3);
        assert!(CycScalar::zero(&f12).inverse().is_err());
    }

    #[test]
    fn sqrt_constructions_square_back() {
        let f8 = f(8);
        let s2 = sqrt_rational(&f8, 2).unwrap();
        // zeta_8 + zeta_8^7
        let expect = CycScalar::zeta_pow(&f8, 1)
            .add(&CycScalar::zeta_pow(&f8, 7))
            .unwrap();
        assert_eq!(s2, expect);
        assert_eq!(s2.mul(&s2).unwrap(), CycScalar::from_int(&f8, 2));
        assert!(sqrt_rational(&f8, 1).unwrap().is_one());
        for (n, cond) in [(3, 12), (5, 5), (6, 24), (7, 28), (12, 24)] {
            let fl = f(cond);
            let s = sqrt_rational(&fl, n).unwrap();
            assert_eq!(s.mul(&s).unwrap(), CycScalar::from_int(&fl, n as i64));
        }
        assert!(sqrt_rational(&f8, 3).is_err());
    }

    #[test]
    fn embedding_is_multiplicative_and_injective_on_samples() {
        let f2 = f(2);
        let f8 = f(8);
        let m1 = CycScalar::from_int(&f2, -1);
        assert_eq!(m1.embed(&f8).unwrap(), CycScalar::zeta_pow(&f8, 4));

        let f3 = f(3);
        let f12 = f(12);
        let z3 = CycScalar::zeta_pow(&f3, 1);
        assert_eq!(z3.embed(&f12).unwrap(), CycScalar::zeta_pow(&f12, 4));

        let f24 = f(24);
        let s2 = sqrt_rational(&f8, 2).unwrap();
        let e = s2.embed(&f24).unwrap();
        assert_eq!(e.mul(&e).unwrap(), CycScalar::from_int(&f24, 2));
        assert!(z3.embed(&f8).is_err());
    }

    #[test]
    fn text_round_trip_is_exact() {
        let f8 = f(8);
        let s = CycScalar::zeta_pow(&f8, 1)
            .add(&CycScalar::zeta_pow(&f8, 7))
            .unwrap();
        // reduced residue mod Phi_8 = z^4 + 1: zeta_8^7 = -zeta_8^3
        assert_eq!(s.to_tagged_string(), "Q(zeta_8): z^1 - z^3");
        let back = CycScalar::parse_tagged(&s.to_tagged_string()).unwrap();
        assert_eq!(back, s);
        // unreduced powers parse to the same residue
        assert_eq!(CycScalar::parse_tagged("Q(zeta_8): z^1 + z^7").unwrap(), s);

        let t = CycScalar::from_rational(&f8, rat(1, 2))
            .mul(&CycScalar::zeta_pow(&f8, 3))
            .unwrap()
            .sub(&CycScalar::from_int(&f8, 2))
            .unwrap();
        assert_eq!(t.to_poly_string(), "-2 + 1/2*z^3");
        assert_eq!(CycScalar::parse_poly(&f8, &t.to_poly_string()).unwrap(), t);
        assert_eq!(CycScalar::parse_poly(&f8, "1/2*z^3 - 2").unwrap(), t);
        assert_eq!(
            CycScalar::parse_poly(&f8, "0").unwrap(),
            CycScalar::zero(&f8)
        );
        assert!(CycScalar::parse_poly(&f8, "z^^").is_err());
    }
}
