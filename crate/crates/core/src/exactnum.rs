//! Exact arithmetic in the cyclotomic field `Q(zeta_n)` with `n = 2(K+N)`.
//!
//! The field houses the distinguished scalars `q = zeta^2` (a primitive
//! root of unity of order `K+N`), its square root `v = zeta`, and
//! `t = q^{-(a+b)}`. Elements are canonical residues modulo the `n`-th
//! cyclotomic polynomial with arbitrary-precision rational coefficients,
//! so equality is plain coefficient equality. The conductor is always
//! `2(K+N)`, even when `K+N` is odd, so `v` exists uniformly.

use std::fmt;

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, the coefficient field for all scalars.
pub type Rational = BigRational;

fn rat_int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut pk = 1u64;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
///
/// Computed by exact division: `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1
    let mut num = vec![BigInt::from(0); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::from(1);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact_int(&num, &phi_d);
        }
    }
    num
}

// Exact division of integer polynomials, constant term first; panics if not exact.
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::from(0); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// An element of `Q(zeta_n)`: the canonical residue modulo `Phi_n`,
/// stored as `phi(n)` rational coefficients (constant term first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (mod Phi_{})", self.conductor)
    }
}

// Wire form: {"conductor": n, "coefficients": ["num/den", ...]}.
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    conductor: u64,
    coefficients: Vec<String>,
}

impl Serialize for CycloScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = ScalarRepr {
            conductor: self.conductor,
            coefficients: self
                .coeffs
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let expect = euler_phi(repr.conductor) as usize;
        if repr.coefficients.len() != expect {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for conductor {}",
                expect, repr.conductor
            )));
        }
        let mut coeffs = Vec::with_capacity(expect);
        for s in &repr.coefficients {
            let (num, den) = s
                .split_once('/')
                .ok_or_else(|| D::Error::custom("expected num/den"))?;
            let num: BigInt = num.parse().map_err(D::Error::custom)?;
            let den: BigInt = den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(num, den));
        }
        Ok(CycloScalar {
            conductor: repr.conductor,
            coeffs,
        })
    }
}

/// Field context: the conductor, `Phi_n`, and a reduction table for products.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    conductor: u64,
    degree: usize,
    /// Monic `Phi_n` over the rationals, constant term first.
    modulus: Vec<Rational>,
    /// `x^(degree + k) mod Phi_n` for `k = 0 .. degree - 2`.
    reduction: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    /// Field context for parameters `(K, N)`: conductor `n = 2(K+N)`,
    /// with `q = zeta^2` of multiplicative order exactly `K+N` and `v = zeta`.
    pub fn for_params(big_k: i64, big_n: i64) -> Result<Self> {
        if big_k < 1 || big_n < 1 {
            return Err(Error::InvalidParams(format!(
                "K and N must be positive, got K={big_k}, N={big_n}"
            )));
        }
        Ok(Self::with_conductor(2 * (big_k + big_n) as u64))
    }

    /// Field context for an explicit conductor `n >= 1`.
    pub fn with_conductor(n: u64) -> Self {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let modulus: Vec<Rational> = phi.into_iter().map(Rational::from_integer).collect();
        // Precompute x^(degree+k) mod Phi_n by repeated shift-and-reduce.
        // Products of residues need exponents up to 2*degree - 2 and powers
        // of zeta need exponents up to n - 1, so cover both.
        let needed = (n as usize)
            .saturating_sub(degree)
            .max(degree.saturating_sub(1));
        let mut reduction: Vec<Vec<Rational>> = Vec::new();
        if degree > 0 && needed > 0 {
            let mut cur: Vec<Rational> = modulus[..degree].iter().map(|c| -c.clone()).collect(); // x^degree = -(lower part), Phi monic
            reduction.push(cur.clone());
            for _ in 1..needed {
                // multiply by x, reduce the overflow term
                let top = cur[degree - 1].clone();
                let mut next = vec![Rational::zero(); degree];
                next[1..degree].clone_from_slice(&cur[..degree - 1]);
                if !top.is_zero() {
                    for j in 0..degree {
                        next[j] += &top * &reduction[0][j];
                    }
                }
                cur = next;
                reduction.push(cur.clone());
            }
        }
        CyclotomicField {
            conductor: n,
            degree,
            modulus,
            reduction,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Degree `phi(n)` of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CycloScalar {
        CycloScalar {
            conductor: self.conductor,
            coeffs: vec![Rational::zero(); self.degree],
        }
    }

    pub fn one(&self) -> CycloScalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> CycloScalar {
        let mut s = self.zero();
        if self.degree > 0 {
            s.coeffs[0] = r;
        }
        s
    }

    pub fn from_integer(&self, k: i64) -> CycloScalar {
        self.from_rational(rat_int(k))
    }

    /// The distinguished primitive `n`-th root of unity `zeta` raised to `k`.
    pub fn zeta_pow(&self, k: i64) -> CycloScalar {
        let n = self.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        // x^e reduced mod Phi_n
        let mut coeffs = vec![Rational::zero(); self.degree];
        if e < self.degree {
            coeffs[e] = Rational::one();
        } else {
            coeffs.clone_from_slice(&self.reduction[e - self.degree]);
        }
        CycloScalar {
            conductor: self.conductor,
            coeffs,
        }
    }

    /// `q^k` where `q = zeta^2` has multiplicative order `n/2 = K+N`.
    pub fn q_pow(&self, k: i64) -> CycloScalar {
        self.zeta_pow(2 * k.rem_euclid(self.conductor as i64))
    }

    /// `v^k` where `v = zeta` is the distinguished square root of `q`.
    pub fn v_pow(&self, k: i64) -> CycloScalar {
        self.zeta_pow(k)
    }

    pub fn q(&self) -> CycloScalar {
        self.q_pow(1)
    }

    pub fn v(&self) -> CycloScalar {
        self.zeta_pow(1)
    }

    fn check(&self, x: &CycloScalar) -> Result<()> {
        if x.conductor != self.conductor {
            return Err(Error::ConductorMismatch(self.conductor, x.conductor));
        }
        Ok(())
    }

    pub fn add(&self, x: &CycloScalar, y: &CycloScalar) -> Result<CycloScalar> {
        self.check(x)?;
        self.check(y)?;
        let coeffs = x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycloScalar {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, x: &CycloScalar, y: &CycloScalar) -> Result<CycloScalar> {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &CycloScalar) -> CycloScalar {
        CycloScalar {
            conductor: x.conductor,
            coeffs: x.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, x: &CycloScalar, y: &CycloScalar) -> Result<CycloScalar> {
        self.check(x)?;
        self.check(y)?;
        let d = self.degree;
        if d == 0 {
            return Ok(self.zero());
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut coeffs: Vec<Rational> = prod[..d].to_vec();
        for (k, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in coeffs.iter_mut().zip(&self.reduction[k]) {
                *slot += c * r;
            }
        }
        Ok(CycloScalar {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn scale(&self, x: &CycloScalar, r: &Rational) -> CycloScalar {
        CycloScalar {
            conductor: x.conductor,
            coeffs: x.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Phi_n` over the rationals.
    pub fn invert(&self, x: &CycloScalar) -> Result<CycloScalar> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended gcd of f = x (as polynomial) and Phi_n: since Phi_n is
        // irreducible and f != 0 with deg f < deg Phi_n, gcd = 1 = u*f + w*Phi.
        let mut r0: Vec<Rational> = self.modulus.clone();
        let mut r1: Vec<Rational> = trim(x.coeffs.clone());
        let mut u0: Vec<Rational> = vec![];
        let mut u1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let next_u = poly_sub(&u0, &poly_mul(&quot, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = next_u;
        }
        // r0 is a nonzero constant gcd; inverse of f is u0 / r0.
        debug_assert_eq!(r0.len(), 1, "Phi_n must be irreducible over Q");
        let c = r0[0].clone();
        let mut coeffs = vec![Rational::zero(); self.degree];
        // deg u0 < deg Phi_n, so no reduction needed
        for (slot, a) in coeffs.iter_mut().zip(&u0) {
            *slot = a / &c;
        }
        Ok(CycloScalar {
            conductor: self.conductor,
            coeffs,
        })
    }

    /// `x^k` for `k` of either sign (`x` must be nonzero when `k < 0`).
    pub fn pow(&self, x: &CycloScalar, k: i64) -> Result<CycloScalar> {
        let (mut base, mut e) = if k < 0 {
            (self.invert(x)?, k.unsigned_abs())
        } else {
            (x.clone(), k as u64)
        };
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order of a nonzero scalar, probing up to `bound`.
    pub fn order(&self, x: &CycloScalar, bound: u64) -> Option<u64> {
        let mut acc = x.clone();
        for k in 1..=bound {
            if acc == self.one() {
                return Some(k);
            }
            acc = self.mul(&acc, x).ok()?;
        }
        None
    }

    /// Evaluate the residue at `e^{2*pi*i*root_index/n}`. Floating-point
    /// oracle for cross-checks only; never used in core logic.
    pub fn embed_complex(&self, x: &CycloScalar, root_index: i64) -> Result<Complex64> {
        self.check(x)?;
        let n = self.conductor as i64;
        if gcd_i64(root_index.rem_euclid(n), n) != 1 {
            return Err(Error::NonCoprimeRoot {
                index: root_index,
                conductor: self.conductor,
            });
        }
        let theta = 2.0 * std::f64::consts::PI * (root_index as f64) / (self.conductor as f64);
        let zeta = Complex64::new(theta.cos(), theta.sin());
        let mut acc = Complex64::new(0.0, 0.0);
        for c in x.coeffs.iter().rev() {
            acc = acc * zeta + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        Ok(acc)
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended gcd: returns `(g, p, q)` with `p*a + q*b = g = gcd(a, b)`, `g >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            return (-a, -1, 0);
        }
        return (a, 1, 0);
    }
    let (g, p, q) = extended_gcd(b, a.rem_euclid(b));
    // g = p*b + q*(a - floor(a/b)*b)
    (g, q, p - a.div_euclid(b) * q)
}

// -- dense polynomial helpers over Rational (constant term first) --

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = trim(den.to_vec());
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let delta = &c * dj;
            rem[k + j] -= delta;
        }
    }
    (trim(quot), trim(rem))
}

/// Convenience: parse a rational from `"p/q"` or `"p"`.
pub fn rational_from_str(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.trim().parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}

/// Check the scalar preflight `q^m = t^K = t^{-N}` with `t = q^{-(a+b)}`
/// and `m = a*N - b*K`, required of every parameter tuple.
pub fn check_qt_identities(
    field: &CyclotomicField,
    big_k: i64,
    big_n: i64,
    a: i64,
    b: i64,
) -> Result<()> {
    let m = a * big_n - b * big_k;
    let t = field.q_pow(-(a + b));
    let qm = field.q_pow(m);
    let tk = field.pow(&t, big_k)?;
    let tn = field.pow(&t, -big_n)?;
    if qm != tk || qm != tn {
        return Err(Error::Inconsistency(format!(
            "q^m = t^K = t^-N fails for (K,N,a,b)=({big_k},{big_n},{a},{b})"
        )));
    }
    Ok(())
}
