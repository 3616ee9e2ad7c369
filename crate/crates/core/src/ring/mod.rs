//! The ring abstraction and the shipped instances.
//!
//! A [`Ring`] is a discrete, enumerated commutative ring together with a
//! decision procedure for membership in finitely generated ideals. Elements are
//! plain values; the ring handle carries the structure. Elements of rings whose
//! carriers could be confused (residues, fractions, tower elements) carry the
//! [`RingId`] of the handle that produced them, so that mixing handles is
//! caught by [`Ring::check`] and by the arithmetic itself.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::witness::MembershipWitness;

pub mod euclid;
pub mod integers;
pub mod localization;
pub mod modular;
pub mod poly;

pub use euclid::EuclideanDomain;
pub use integers::Integers;
pub use localization::{LocElem, Localizable, Localization};
pub use modular::{ModInt, PrimeField, Zmod};
pub use poly::{Poly, PolyRing};

/// Identity of a ring handle. Clones of a handle share the id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    pub fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        RingId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Decidable equality; compatible with the ring operations.
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// Ok if `x` was produced by this handle (or by one it is built on).
    fn check(&self, x: &Self::Elem) -> Result<()>;

    /// The `i`-th element of the canonical enumeration, if defined.
    fn enumerate(&self, i: u64) -> Option<Self::Elem>;

    /// Coefficients `c` with `x = Σ c_i g_i`, or `None` if `x ∉ (gens)`.
    ///
    /// Implementations may assume that `x` and `gens` pass [`Ring::check`].
    fn membership_coefficients(
        &self,
        x: &Self::Elem,
        gens: &[Self::Elem],
    ) -> Result<Option<Vec<Self::Elem>>>;

    /// Canonical textual form of the ring, in the ring-spec grammar.
    fn spec(&self) -> String;
    fn format(&self, x: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.zero())
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.one())
    }

    fn pow(&self, a: &Self::Elem, mut k: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Image of an integer under `ℤ → R`.
    fn from_int(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let mut step = self.one();
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(&acc, &step);
            }
            m >>= 1;
            if m > 0 {
                step = self.add(&step, &step);
            }
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    /// Whether `1 = 0` holds.
    fn is_trivial(&self) -> bool {
        self.eq(&self.one(), &self.zero())
    }

    /// Some index whose element equals `x`. The default is a linear search,
    /// which terminates because the enumeration is surjective; it returns the
    /// least such index.
    fn index_of(&self, x: &Self::Elem) -> u64 {
        let mut i = 0u64;
        loop {
            if let Some(y) = self.enumerate(i) {
                if self.eq(&y, x) {
                    return i;
                }
            }
            i += 1;
        }
    }

    /// Number of elements, when the carrier is known to be finite.
    fn finite_size(&self) -> Option<u64> {
        None
    }

    /// An equivalent, smaller generating set. Used to keep the cached stages
    /// of the maximal-ideal chain small.
    fn compress(&self, gens: &[Self::Elem]) -> Vec<Self::Elem> {
        gens.to_vec()
    }

    fn ideal_membership(
        &self,
        x: &Self::Elem,
        gens: &[Self::Elem],
    ) -> Result<Option<MembershipWitness<Self::Elem>>> {
        self.check(x)?;
        for g in gens {
            self.check(g)?;
        }
        match self.membership_coefficients(x, gens)? {
            Some(coeffs) => Ok(Some(MembershipWitness::certify(
                self,
                x.clone(),
                gens.to_vec(),
                coeffs,
            )?)),
            None => Ok(None),
        }
    }

    fn contains_one(&self, gens: &[Self::Elem]) -> Result<Option<MembershipWitness<Self::Elem>>> {
        self.ideal_membership(&self.one(), gens)
    }

    /// An inverse of `x`, or `None` if `x` is not a unit.
    fn is_unit(&self, x: &Self::Elem) -> Result<Option<Self::Elem>> {
        Ok(self
            .contains_one(std::slice::from_ref(x))?
            .map(|w| w.coefficients[0].clone()))
    }

    /// The least `k ≥ 1` with `x^k = 0`, or `None` if `x` is not nilpotent.
    fn is_nilpotent(&self, x: &Self::Elem) -> Result<Option<u32>> {
        let _ = x;
        Err(Error::Unsupported(format!(
            "no nilpotency procedure for {}",
            self.spec()
        )))
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|b| self.mul(a, &b))
    }
}

/// A field with a fixed bijection `{0, …, order-1} → K`, used as the digit
/// alphabet of polynomial enumerations. Digit 0 is zero and digit 1 is one.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    fn element(&self, digit: u64) -> Self::Elem;
    fn digit(&self, x: &Self::Elem) -> u64;
}

/// Cantor pairing, used to interleave two natural-number coordinates.
pub fn pair(a: u64, b: u64) -> u64 {
    let s = a + b;
    s * (s + 1) / 2 + b
}

pub fn unpair(z: u64) -> (u64, u64) {
    // largest s with s(s+1)/2 <= z
    let mut s = (((8.0 * z as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while s * (s + 1) / 2 > z {
        s -= 1;
    }
    while (s + 1) * (s + 2) / 2 <= z {
        s += 1;
    }
    let b = z - s * (s + 1) / 2;
    (s - b, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_round_trips() {
        for z in 0..5000 {
            let (a, b) = unpair(z);
            assert_eq!(pair(a, b), z);
        }
        assert_eq!(unpair(0), (0, 0));
        assert_eq!(unpair(1), (1, 0));
        assert_eq!(unpair(2), (0, 1));
    }
}
