//! Residue rings `ℤ/n` and prime fields `GF(p)`.
//!
//! Ideal questions are answered on integer lifts with the modulus adjoined as
//! an extra generator, so `ℤ/n` inherits its certificates from `ℤ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::euclid::{self, EuclideanDomain};
use super::integers::parse_bigint;
use super::{Field, FiniteField, Integers, Localizable, Ring, RingId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: BigInt,
    ring: RingId,
}

impl ModInt {
    /// The least nonnegative representative.
    pub fn value(&self) -> &BigInt {
        &self.value
    }
}

#[derive(Clone, Debug)]
pub struct Zmod {
    n: BigInt,
    id: RingId,
}

impl Zmod {
    pub fn new(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::one() {
            return Err(Error::PreconditionViolated(format!(
                "modulus must be positive, got {n}"
            )));
        }
        Ok(Zmod { n, id: RingId::fresh() })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.n
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn elem(&self, v: impl Into<BigInt>) -> ModInt {
        ModInt { value: v.into().mod_floor(&self.n), ring: self.id }
    }

    fn own(&self, x: &ModInt) {
        assert!(
            x.ring == self.id,
            "element {} belongs to a different ring handle than {}",
            x.value,
            self.spec()
        );
    }

    /// Integer lifts of `gens`, preceded by the modulus.
    fn lifted_with_modulus(&self, gens: &[ModInt]) -> Vec<BigInt> {
        std::iter::once(self.n.clone())
            .chain(gens.iter().map(|g| g.value.clone()))
            .collect()
    }

    fn project(&self, coeffs: Vec<BigInt>) -> Vec<ModInt> {
        coeffs.into_iter().skip(1).map(|c| self.elem(c)).collect()
    }
}

impl Ring for Zmod {
    type Elem = ModInt;

    fn zero(&self) -> ModInt {
        self.elem(0)
    }

    fn one(&self) -> ModInt {
        self.elem(1)
    }

    fn add(&self, a: &ModInt, b: &ModInt) -> ModInt {
        self.own(a);
        self.own(b);
        self.elem(&a.value + &b.value)
    }

    fn neg(&self, a: &ModInt) -> ModInt {
        self.own(a);
        self.elem(-&a.value)
    }

    fn sub(&self, a: &ModInt, b: &ModInt) -> ModInt {
        self.own(a);
        self.own(b);
        self.elem(&a.value - &b.value)
    }

    fn mul(&self, a: &ModInt, b: &ModInt) -> ModInt {
        self.own(a);
        self.own(b);
        self.elem(&a.value * &b.value)
    }

    fn eq(&self, a: &ModInt, b: &ModInt) -> bool {
        self.own(a);
        self.own(b);
        a.value == b.value
    }

    fn from_int(&self, n: i64) -> ModInt {
        self.elem(n)
    }

    fn check(&self, x: &ModInt) -> Result<()> {
        if x.ring == self.id && x.value >= BigInt::zero() && x.value < self.n {
            Ok(())
        } else {
            Err(Error::ForeignElement(self.spec()))
        }
    }

    fn enumerate(&self, i: u64) -> Option<ModInt> {
        let i = BigInt::from(i);
        (i < self.n).then(|| self.elem(i))
    }

    fn index_of(&self, x: &ModInt) -> u64 {
        self.own(x);
        x.value.to_u64().expect("residue too large to index")
    }

    fn finite_size(&self) -> Option<u64> {
        self.n.to_u64()
    }

    fn membership_coefficients(&self, x: &ModInt, gens: &[ModInt]) -> Result<Option<Vec<ModInt>>> {
        let lifted = self.lifted_with_modulus(gens);
        Ok(euclid::membership(&Integers, &x.value, &lifted).map(|c| self.project(c)))
    }

    fn compress(&self, gens: &[ModInt]) -> Vec<ModInt> {
        vec![self.principal(gens)]
    }

    fn is_unit(&self, x: &ModInt) -> Result<Option<ModInt>> {
        self.own(x);
        let (g, s, _) = Integers.xgcd(&x.value, &self.n);
        Ok(g.is_one().then(|| self.elem(s)))
    }

    /// Radical divisibility: `x` is nilpotent iff every prime of `n` divides
    /// it, decided by the saturation loop on the lift.
    fn is_nilpotent(&self, x: &ModInt) -> Result<Option<u32>> {
        self.own(x);
        Ok(euclid::saturation_divides(&Integers, &x.value, &self.n).map(|(k, _)| k.max(1)))
    }

    fn spec(&self) -> String {
        format!("Z/{}", self.n)
    }

    fn format(&self, x: &ModInt) -> String {
        x.value.to_string()
    }

    fn parse(&self, s: &str) -> Result<ModInt> {
        Ok(self.elem(parse_bigint(s)?))
    }
}

impl Localizable for Zmod {
    fn saturated_membership(
        &self,
        x: &ModInt,
        y: &ModInt,
        gens: &[ModInt],
    ) -> Result<Option<(u32, Vec<ModInt>)>> {
        let lifted = self.lifted_with_modulus(gens);
        Ok(euclid::saturated_membership(&Integers, &x.value, &y.value, &lifted)
            .map(|(n, c)| (n, self.project(c))))
    }

    fn principal(&self, gens: &[ModInt]) -> ModInt {
        self.elem(Integers.gcd_all(&self.lifted_with_modulus(gens)))
    }

    fn nilpotency_bound(&self) -> u32 {
        self.n.bits().max(1) as u32
    }
}

/// `GF(p)` for a prime `p`.
#[derive(Clone, Debug)]
pub struct PrimeField {
    zmod: Zmod,
}

impl PrimeField {
    pub fn new(p: impl Into<BigInt>) -> Result<Self> {
        let p = p.into();
        if !is_prime(&p) {
            return Err(Error::PreconditionViolated(format!("{p} is not prime")));
        }
        Ok(PrimeField { zmod: Zmod::new(p)? })
    }

    pub fn characteristic(&self) -> &BigInt {
        self.zmod.modulus()
    }

    pub fn elem(&self, v: impl Into<BigInt>) -> ModInt {
        self.zmod.elem(v)
    }

    pub fn as_zmod(&self) -> &Zmod {
        &self.zmod
    }
}

fn is_prime(p: &BigInt) -> bool {
    let two = BigInt::from(2);
    if p < &two {
        return false;
    }
    let mut d = two;
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for PrimeField {
    type Elem = ModInt;

    fn zero(&self) -> ModInt {
        self.zmod.zero()
    }
    fn one(&self) -> ModInt {
        self.zmod.one()
    }
    fn add(&self, a: &ModInt, b: &ModInt) -> ModInt {
        self.zmod.add(a, b)
    }
    fn neg(&self, a: &ModInt) -> ModInt {
        self.zmod.neg(a)
    }
    fn sub(&self, a: &ModInt, b: &ModInt) -> ModInt {
        self.zmod.sub(a, b)
    }
    fn mul(&self, a: &ModInt, b: &ModInt) -> ModInt {
        self.zmod.mul(a, b)
    }
    fn eq(&self, a: &ModInt, b: &ModInt) -> bool {
        self.zmod.eq(a, b)
    }
    fn from_int(&self, n: i64) -> ModInt {
        self.zmod.elem(n)
    }
    fn check(&self, x: &ModInt) -> Result<()> {
        self.zmod.check(x).map_err(|_| Error::ForeignElement(self.spec()))
    }
    fn enumerate(&self, i: u64) -> Option<ModInt> {
        self.zmod.enumerate(i)
    }
    fn index_of(&self, x: &ModInt) -> u64 {
        self.zmod.index_of(x)
    }
    fn finite_size(&self) -> Option<u64> {
        self.zmod.finite_size()
    }
    fn membership_coefficients(&self, x: &ModInt, gens: &[ModInt]) -> Result<Option<Vec<ModInt>>> {
        self.zmod.membership_coefficients(x, gens)
    }
    fn compress(&self, gens: &[ModInt]) -> Vec<ModInt> {
        self.zmod.compress(gens)
    }
    fn is_unit(&self, x: &ModInt) -> Result<Option<ModInt>> {
        self.zmod.is_unit(x)
    }
    fn is_nilpotent(&self, x: &ModInt) -> Result<Option<u32>> {
        self.zmod.is_nilpotent(x)
    }
    fn spec(&self) -> String {
        format!("GF({})", self.zmod.modulus())
    }
    fn format(&self, x: &ModInt) -> String {
        self.zmod.format(x)
    }
    fn parse(&self, s: &str) -> Result<ModInt> {
        self.zmod.parse(s)
    }
}

impl Field for PrimeField {
    fn inv(&self, x: &ModInt) -> Option<ModInt> {
        self.zmod.is_unit(x).expect("unit test is total on Z/p")
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.zmod.modulus().to_u64().expect("characteristic fits in u64")
    }

    fn element(&self, digit: u64) -> ModInt {
        self.zmod.elem(digit)
    }

    fn digit(&self, x: &ModInt) -> u64 {
        self.zmod.index_of(x)
    }
}

impl Localizable for PrimeField {
    fn is_domain(&self) -> bool {
        true
    }

    fn saturated_membership(
        &self,
        x: &ModInt,
        y: &ModInt,
        gens: &[ModInt],
    ) -> Result<Option<(u32, Vec<ModInt>)>> {
        self.zmod.saturated_membership(x, y, gens)
    }
    fn principal(&self, gens: &[ModInt]) -> ModInt {
        self.zmod.principal(gens)
    }
    fn nilpotency_bound(&self) -> u32 {
        1
    }
}
