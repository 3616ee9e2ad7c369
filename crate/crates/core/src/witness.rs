//! Membership certificates and the process-wide witness audit.
//!
//! Every [`MembershipWitness`] is created through [`MembershipWitness::certify`],
//! which recombines the coefficients against the generators before handing the
//! witness out. The audit counters record how many certificates were produced
//! and how many failed recombination; a failed certificate is never returned.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::ring::Ring;

static PRODUCED: AtomicU64 = AtomicU64::new(0);
static FAILED: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessAudit {
    pub produced: u64,
    pub failed: u64,
}

/// Snapshot of the global witness counters.
pub fn audit() -> WitnessAudit {
    WitnessAudit {
        produced: PRODUCED.load(Ordering::SeqCst),
        failed: FAILED.load(Ordering::SeqCst),
    }
}

/// A certificate `member = Σ coefficients[i] · generators[i]`.
///
/// The empty combination certifies membership of zero (or of anything, in the
/// trivial ring).
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipWitness<E> {
    pub member: E,
    pub generators: Vec<E>,
    pub coefficients: Vec<E>,
}

impl<E: Clone> MembershipWitness<E> {
    pub fn certify<R: Ring<Elem = E>>(
        ring: &R,
        member: E,
        generators: Vec<E>,
        coefficients: Vec<E>,
    ) -> Result<Self> {
        let witness = MembershipWitness { member, generators, coefficients };
        PRODUCED.fetch_add(1, Ordering::SeqCst);
        if witness.verify(ring) {
            Ok(witness)
        } else {
            FAILED.fetch_add(1, Ordering::SeqCst);
            Err(Error::Invariant(format!(
                "membership witness does not recombine in {}",
                ring.spec()
            )))
        }
    }

    pub fn recombine<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        self.generators
            .iter()
            .zip(&self.coefficients)
            .fold(ring.zero(), |acc, (g, c)| ring.add(&acc, &ring.mul(c, g)))
    }

    pub fn verify<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.generators.len() == self.coefficients.len()
            && ring.eq(&self.recombine(ring), &self.member)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}
