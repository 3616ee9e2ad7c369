//! Coefficients of nilpotent and invertible polynomials over `Z/n`.
//!
//! Both verifiers peel off the leading term `a X^d` one step at a time: with
//! `p` the prime ideal attached to `a` (the preimage of a maximal ideal of
//! `R[1/a]`), the image of the polynomial over `R/p` forces `a ∈ p`, and `a ∈ p`
//! forces `a` to be nilpotent. Each step records `a ∈ p` as computed by the
//! library and the nilpotency exponent of `a`.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::oracle::{BruteForceOracle, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::ring::poly::{self, Poly};
use crate::ring::{ModInt, Ring, Zmod};
use crate::spectrum::x_prime_ideal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientStep {
    pub degree: usize,
    pub coefficient: String,
    /// The coefficient lies in its own attached prime ideal.
    pub in_prime: bool,
    /// Least `k` with `coefficient^k = 0`.
    pub exponent: u32,
    /// Inverse of the remaining polynomial once this term is removed
    /// (invertible case only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remaining_inverse: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientReport {
    pub proposition: &'static str,
    pub instance: String,
    pub steps: Vec<CoefficientStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse: Option<String>,
    /// Largest power or degree tried by the bounded precondition search.
    pub search_bound: usize,
    /// Exponents agree with the brute-force oracle (when `n` is in its range).
    pub cross_checked: Option<bool>,
    pub passed: bool,
    #[serde(skip)]
    pub inverse_poly: Option<Poly<ModInt>>,
}

impl CoefficientReport {
    /// Exponents in step order (leading term first).
    pub fn exponents(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.exponent).collect()
    }
}

fn modulus_u64(ring: &Zmod) -> Result<u64> {
    ring.modulus()
        .to_u64()
        .ok_or_else(|| Error::BoundExceeded("modulus does not fit in u64".into()))
}

/// Prime exponents of `n`.
fn prime_exponents(mut n: u64) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push(e);
        }
        d += 1;
    }
    if n > 1 {
        out.push(1);
    }
    out
}

fn check_poly(ring: &Zmod, f: &Poly<ModInt>) -> Result<()> {
    f.coeffs().iter().try_for_each(|c| ring.check(c))
}

fn describe(ring: &Zmod, f: &Poly<ModInt>) -> String {
    format!("{} over {}", poly::format(ring, f, "X"), ring.spec())
}

/// Removes the leading term after confirming it is nilpotent through its
/// attached prime ideal.
fn peel(ring: &Zmod, g: &Poly<ModInt>) -> Result<(CoefficientStep, Poly<ModInt>)> {
    let degree = g.degree().expect("nonzero polynomial");
    let a = g.leading().expect("nonzero polynomial").clone();
    let p = x_prime_ideal(ring.clone(), a.clone())?;
    let in_prime = p.contains(&a)?;
    if !in_prime {
        return Err(Error::Invariant(format!(
            "coefficient {} avoids its attached prime ideal",
            ring.format(&a)
        )));
    }
    let exponent = ring.is_nilpotent(&a)?.ok_or_else(|| {
        Error::Invariant(format!("coefficient {} is not nilpotent", ring.format(&a)))
    })?;
    let rest = poly::sub(ring, g, &Poly::monomial(ring, a.clone(), degree));
    let step = CoefficientStep {
        degree,
        coefficient: ring.format(&a),
        in_prime,
        exponent,
        remaining_inverse: None,
    };
    Ok((step, rest))
}

fn cross_check(ring: &Zmod, n: u64, steps: &[CoefficientStep]) -> Result<Option<bool>> {
    if n > MAX_MODULUS {
        return Ok(None);
    }
    let oracle = BruteForceOracle::new(n)?;
    let mut ok = true;
    for s in steps {
        let a = ring.parse(&s.coefficient)?;
        let v = a.value().to_u64().expect("reduced residue");
        ok &= oracle.nilpotency(v) == Some(s.exponent);
    }
    Ok(Some(ok))
}

/// Every coefficient of a nilpotent `f ∈ (Z/n)[X]` is nilpotent.
///
/// Nilpotency of `f` is confirmed first by computing `f^k` for
/// `k ≤ Ω(n)·(deg f + 1) + 1`.
pub fn verify_nilpotent_coefficients(ring: &Zmod, f: &Poly<ModInt>) -> Result<CoefficientReport> {
    check_poly(ring, f)?;
    let n = modulus_u64(ring)?;
    let omega: u32 = prime_exponents(n).iter().sum();
    let bound = omega as usize * (f.degree().unwrap_or(0) + 1) + 1;
    let mut power = f.clone();
    let mut nilpotent = f.is_zero();
    for _ in 1..bound {
        if nilpotent {
            break;
        }
        power = poly::mul(ring, &power, f);
        nilpotent = power.is_zero();
    }
    if !nilpotent {
        return Err(Error::PreconditionViolated(format!(
            "{} is not nilpotent within f^{bound}",
            describe(ring, f)
        )));
    }
    let mut steps = Vec::new();
    let mut g = f.clone();
    while !g.is_zero() {
        let (step, rest) = peel(ring, &g)?;
        steps.push(step);
        g = rest;
    }
    let cross_checked = cross_check(ring, n, &steps)?;
    Ok(CoefficientReport {
        proposition: "nilpotent-coefficients",
        instance: describe(ring, f),
        passed: cross_checked != Some(false),
        steps,
        inverse: None,
        search_bound: bound,
        cross_checked,
        inverse_poly: None,
    })
}

/// Inverse of `f` by undetermined coefficients up to degree `max_degree`.
fn inverse_within(ring: &Zmod, f: &Poly<ModInt>, max_degree: usize) -> Result<Option<Poly<ModInt>>> {
    let Some(a0_inv) = ring.is_unit(&f.coeff(ring, 0))? else {
        return Ok(None);
    };
    let mut b = vec![a0_inv.clone()];
    for k in 1..=max_degree {
        let mut acc = ring.zero();
        for i in 1..=k.min(f.degree().unwrap_or(0)) {
            acc = ring.add(&acc, &ring.mul(&f.coeff(ring, i), &b[k - i]));
        }
        b.push(ring.neg(&ring.mul(&a0_inv, &acc)));
    }
    let g = Poly::new(ring, b);
    let product = poly::mul(ring, f, &g);
    Ok(poly::equal(ring, &product, &Poly::constant(ring, ring.one())).then_some(g))
}

/// Every nonconstant coefficient of an invertible `f ∈ (Z/n)[X]` is
/// nilpotent.
///
/// The inverse is searched up to degree `deg f · e`, `e` the largest prime
/// exponent of `n`. After each removed term the remainder is re-checked to be
/// invertible (a unit plus a nilpotent is a unit).
pub fn verify_invertible_coefficients(ring: &Zmod, f: &Poly<ModInt>) -> Result<CoefficientReport> {
    check_poly(ring, f)?;
    let n = modulus_u64(ring)?;
    let e = prime_exponents(n).into_iter().max().unwrap_or(1) as usize;
    let bound = f.degree().unwrap_or(0) * e;
    let inverse = inverse_within(ring, f, bound)?.ok_or_else(|| {
        Error::PreconditionViolated(format!(
            "no inverse of {} up to degree {bound}",
            describe(ring, f)
        ))
    })?;
    let mut steps = Vec::new();
    let mut g = f.clone();
    while g.degree().unwrap_or(0) >= 1 {
        let (mut step, rest) = peel(ring, &g)?;
        let rest_inverse = inverse_within(ring, &rest, bound)?.ok_or_else(|| {
            Error::Invariant("removing a nilpotent term destroyed invertibility".into())
        })?;
        step.remaining_inverse = Some(poly::format(ring, &rest_inverse, "X"));
        steps.push(step);
        g = rest;
    }
    let cross_checked = cross_check(ring, n, &steps)?;
    Ok(CoefficientReport {
        proposition: "invertible-coefficients",
        instance: describe(ring, f),
        passed: cross_checked != Some(false),
        steps,
        inverse: Some(poly::format(ring, &inverse, "X")),
        search_bound: bound,
        cross_checked,
        inverse_poly: Some(inverse),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: u64) -> Zmod {
        Zmod::new(n).unwrap()
    }

    fn p(ring: &Zmod, s: &str) -> Poly<ModInt> {
        poly::parse(ring, s, 'X').unwrap()
    }

    #[test]
    fn nilpotent_examples() {
        let r4 = zmod(4);
        let rep = verify_nilpotent_coefficients(&r4, &p(&r4, "2*X+2")).unwrap();
        assert_eq!(rep.exponents(), vec![2, 2]);
        assert!(rep.passed);
        let r8 = zmod(8);
        assert_eq!(verify_nilpotent_coefficients(&r8, &p(&r8, "2*X^2")).unwrap().exponents(), vec![3]);
        assert!(verify_nilpotent_coefficients(&r8, &Poly::zero()).unwrap().steps.is_empty());
        assert!(matches!(
            verify_nilpotent_coefficients(&r8, &p(&r8, "X+2")),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn invertible_examples() {
        let r4 = zmod(4);
        let rep = verify_invertible_coefficients(&r4, &p(&r4, "2*X+1")).unwrap();
        assert_eq!(rep.inverse.as_deref(), Some("2*X+1"));
        assert_eq!(rep.exponents(), vec![2]);
        let r9 = zmod(9);
        let rep = verify_invertible_coefficients(&r9, &p(&r9, "3*X+1")).unwrap();
        assert_eq!(rep.inverse.as_deref(), Some("6*X+1"));
        assert_eq!(rep.exponents(), vec![2]);
        let rep = verify_invertible_coefficients(&r9, &p(&r9, "1")).unwrap();
        assert!(rep.steps.is_empty() && rep.passed);
        assert!(matches!(
            verify_invertible_coefficients(&r9, &p(&r9, "X+1")),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn prime_exponent_table() {
        assert_eq!(prime_exponents(12), vec![2, 1]);
        assert_eq!(prime_exponents(1), Vec::<u32>::new());
        assert_eq!(prime_exponents(27), vec![3]);
    }
}
