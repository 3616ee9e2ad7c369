use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::euclid::{self, EuclideanDomain};
use super::{Localizable, Ring};
use crate::error::{Error, Result};

/// The integers, enumerated in zigzag order `0, 1, -1, 2, -2, …`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Integers {
    pub fn new() -> Self {
        Integers
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn eq(&self, a: &BigInt, b: &BigInt) -> bool {
        a == b
    }

    fn check(&self, _: &BigInt) -> Result<()> {
        Ok(())
    }

    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn enumerate(&self, i: u64) -> Option<BigInt> {
        let k = BigInt::from(i.div_ceil(2));
        Some(if i % 2 == 1 { k } else { -k })
    }

    fn index_of(&self, x: &BigInt) -> u64 {
        let magnitude = x
            .abs()
            .to_u64()
            .expect("integer too large to index");
        if x.is_positive() {
            2 * magnitude - 1
        } else {
            2 * magnitude
        }
    }

    fn membership_coefficients(&self, x: &BigInt, gens: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        Ok(euclid::membership(self, x, gens))
    }

    fn compress(&self, gens: &[BigInt]) -> Vec<BigInt> {
        vec![self.gcd_all(gens)]
    }

    fn is_unit(&self, x: &BigInt) -> Result<Option<BigInt>> {
        Ok(if x.abs().is_one() { Some(x.clone()) } else { None })
    }

    fn is_nilpotent(&self, x: &BigInt) -> Result<Option<u32>> {
        Ok(if x.is_zero() { Some(1) } else { None })
    }

    fn spec(&self) -> String {
        "Z".to_string()
    }

    fn format(&self, x: &BigInt) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<BigInt> {
        parse_bigint(s)
    }
}

impl EuclideanDomain for Integers {
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_mod_floor(b)
    }

    fn normal_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
}

impl Localizable for Integers {
    fn is_domain(&self) -> bool {
        true
    }

    fn saturated_membership(
        &self,
        x: &BigInt,
        y: &BigInt,
        gens: &[BigInt],
    ) -> Result<Option<(u32, Vec<BigInt>)>> {
        Ok(euclid::saturated_membership(self, x, y, gens))
    }

    fn principal(&self, gens: &[BigInt]) -> BigInt {
        self.gcd_all(gens)
    }

    fn nilpotency_bound(&self) -> u32 {
        1
    }
}

pub(crate) fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a decimal integer, got {s:?}")));
    }
    t.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}
