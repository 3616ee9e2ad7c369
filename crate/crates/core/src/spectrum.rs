//! Prime ideals from localization.
//!
//! For `x ∈ A`, let `m` be the maximal ideal of `A[1/x]` built along the
//! localization's canonical enumeration. Its preimage `p = { a | a/1 ∈ m }`
//! avoids `x` whenever `x` is not nilpotent, and `1 ∈ p` only when `A[1/x]` is
//! trivial, i.e. when `x` is nilpotent.

use serde::Serialize;

use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::maximal::MaximalIdeal;
use crate::ring::{LocElem, Localizable, Localization, Ring};

#[derive(Debug)]
pub struct PrimeIdeal<A: Localizable> {
    inverted: A::Elem,
    maximal: MaximalIdeal<Localization<A>>,
}

impl<A: Localizable> PrimeIdeal<A> {
    pub fn ring(&self) -> &A {
        self.localization().base()
    }

    pub fn inverted(&self) -> &A::Elem {
        &self.inverted
    }

    pub fn localization(&self) -> &Localization<A> {
        self.maximal.ring()
    }

    /// The maximal ideal of `A[1/x]` that `p` is pulled back from.
    pub fn maximal(&self) -> &MaximalIdeal<Localization<A>> {
        &self.maximal
    }

    pub fn image(&self, a: &A::Elem) -> LocElem<A::Elem> {
        self.localization().from_base(a.clone())
    }

    /// `a ∈ p`, i.e. `a/1 ∈ m`.
    pub fn contains(&self, a: &A::Elem) -> Result<bool> {
        self.ring().check(a)?;
        self.maximal.contains(&self.image(a))
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.contains(&self.ring().one())?)
    }

    /// `ab ∈ p ⇒ a ∈ p ∨ b ∈ p` on every pair drawn from `samples`.
    pub fn is_prime_on(&self, samples: &[A::Elem]) -> Result<bool> {
        let members = samples
            .iter()
            .map(|a| self.contains(a))
            .collect::<Result<Vec<_>>>()?;
        for (i, a) in samples.iter().enumerate() {
            for (j, b) in samples.iter().enumerate().skip(i) {
                if !members[i] && !members[j] && self.contains(&self.ring().mul(a, b))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `a^k ∈ p ⇒ a ∈ p` for `k ≤ max_power` on every sample.
    pub fn is_radical_on(&self, samples: &[A::Elem], max_power: u32) -> Result<bool> {
        for a in samples {
            if self.contains(a)? {
                continue;
            }
            for k in 2..=max_power {
                if self.contains(&self.ring().pow(a, k))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The prime ideal attached to `x`: the preimage of the maximal ideal of
/// `A[1/x]` under `a ↦ a/1`.
pub fn x_prime_ideal<A: Localizable>(ring: A, x: A::Elem) -> Result<PrimeIdeal<A>> {
    ring.check(&x)?;
    let loc = Localization::new(ring, x.clone())?;
    let maximal = MaximalIdeal::new(loc, Enumeration::Canonical, Vec::new())?;
    Ok(PrimeIdeal { inverted: x, maximal })
}

/// Number of leading enumeration elements used for the primality spot check.
const KRULL_SAMPLE: u64 = 12;

/// A prime ideal avoiding the non-nilpotent `x`, with `x ∉ p` and `1 ∉ p`
/// verified and primality spot-checked on the first enumerated elements.
pub fn krull_witness<A: Localizable>(ring: A, x: A::Elem) -> Result<PrimeIdeal<A>> {
    ring.check(&x)?;
    if let Some(k) = ring.is_nilpotent(&x)? {
        return Err(Error::PreconditionViolated(format!(
            "{} is nilpotent ({}^{k} = 0)",
            ring.format(&x),
            ring.format(&x)
        )));
    }
    let samples: Vec<A::Elem> = (0..KRULL_SAMPLE).filter_map(|i| ring.enumerate(i)).collect();
    let p = x_prime_ideal(ring, x)?;
    if p.contains(&p.inverted)? {
        return Err(Error::Invariant("prime ideal contains the inverted element".into()));
    }
    if !p.is_proper()? {
        return Err(Error::Invariant("prime ideal contains 1".into()));
    }
    if !p.is_prime_on(&samples)? {
        return Err(Error::Invariant("ideal failed the primality spot check".into()));
    }
    Ok(p)
}

/// Whether `1 − xy` is a nonunit, together with `1 − xy`.
pub fn is_apart_from_jacobson<R: Ring>(ring: &R, x: &R::Elem, y: &R::Elem) -> Result<(bool, R::Elem)> {
    ring.check(x)?;
    ring.check(y)?;
    let w = ring.sub(&ring.one(), &ring.mul(x, y));
    Ok((ring.is_unit(&w)?.is_none(), w))
}

/// A maximal ideal above `(1 − xy)`; it cannot contain `x`, since then it
/// would contain `(1 − xy) + xy = 1`.
pub fn jacobson_escape<R: Ring>(ring: R, x: &R::Elem, y: &R::Elem) -> Result<MaximalIdeal<R>> {
    let (apart, w) = is_apart_from_jacobson(&ring, x, y)?;
    if !apart {
        return Err(Error::PreconditionViolated(format!(
            "1 - xy = {} is a unit",
            ring.format(&w)
        )));
    }
    let m = MaximalIdeal::new(ring, Enumeration::Canonical, vec![w])?;
    if m.is_base_improper() {
        return Err(Error::Invariant("nonunit generates the unit ideal".into()));
    }
    if m.contains(x)? {
        return Err(Error::Invariant("maximal ideal above 1 - xy contains x".into()));
    }
    Ok(m)
}

/// Serialized prime-ideal query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub ring: String,
    pub inverted: String,
    pub member_samples: Vec<(String, bool)>,
    pub avoided: String,
}

impl PrimeReport {
    pub fn new<A: Localizable>(p: &PrimeIdeal<A>, samples: &[A::Elem]) -> Result<Self> {
        let ring = p.ring();
        let member_samples = samples
            .iter()
            .map(|a| Ok((ring.format(a), p.contains(a)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PrimeReport {
            ring: ring.spec(),
            inverted: ring.format(p.inverted()),
            member_samples,
            avoided: ring.format(p.inverted()),
        })
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::ring::{Integers, Zmod};

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn prime_avoiding_six() {
        let p = krull_witness(Integers, z(6)).unwrap();
        assert!(!p.contains(&z(6)).unwrap());
        assert!(p.contains(&z(0)).unwrap());
        assert!(p.is_proper().unwrap());
        let samples: Vec<BigInt> = (-8..=8).map(z).collect();
        assert!(p.is_prime_on(&samples).unwrap());
        assert!(p.is_radical_on(&samples[5..12], 4).unwrap());
    }

    #[test]
    fn nilpotent_inverted_element() {
        let p = x_prime_ideal(Integers, z(0)).unwrap();
        assert!(!p.is_proper().unwrap());
        assert!(matches!(krull_witness(Integers, z(0)), Err(Error::PreconditionViolated(_))));
        let r = Zmod::new(12).unwrap();
        assert!(matches!(krull_witness(r.clone(), r.elem(6)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn unit_inverted_element() {
        let p = krull_witness(Integers, z(1)).unwrap();
        assert!(p.is_proper().unwrap());
    }

    #[test]
    fn modular_prime_avoiding_two() {
        let r = Zmod::new(12).unwrap();
        let p = krull_witness(r.clone(), r.elem(2)).unwrap();
        let all: Vec<_> = (0..12).map(|i| r.elem(i)).collect();
        assert!(!p.contains(&r.elem(2)).unwrap());
        assert!(p.is_prime_on(&all).unwrap());
        // the only prime of Z/12 avoiding 2 is (3)
        for a in 0..12 {
            assert_eq!(p.contains(&r.elem(a)).unwrap(), a % 3 == 0, "a = {a}");
        }
    }

    #[test]
    fn jacobson_examples() {
        assert_eq!(is_apart_from_jacobson(&Integers, &z(2), &z(2)).unwrap(), (true, z(-3)));
        assert_eq!(is_apart_from_jacobson(&Integers, &z(2), &z(1)).unwrap(), (false, z(-1)));
        assert!(!is_apart_from_jacobson(&Integers, &z(0), &z(7)).unwrap().0);

        let m = jacobson_escape(Integers, &z(2), &z(2)).unwrap();
        assert!(m.contains(&z(3)).unwrap());
        assert!(!m.contains(&z(2)).unwrap());
        let m = jacobson_escape(Integers, &z(3), &z(1)).unwrap();
        assert!(m.contains(&z(2)).unwrap());
        assert!(!m.contains(&z(3)).unwrap());

        let r = Zmod::new(12).unwrap();
        for y in [1, 4] {
            let err = jacobson_escape(r.clone(), &r.elem(2), &r.elem(y));
            assert!(matches!(err, Err(Error::PreconditionViolated(_))));
        }
        let m = jacobson_escape(r.clone(), &r.elem(2), &r.elem(2)).unwrap();
        assert!(!m.contains(&r.elem(2)).unwrap());
        assert!(m.contains(&r.elem(9)).unwrap());
    }
}
