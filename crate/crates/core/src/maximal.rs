//! The maximal ideal of a countable ring, built from an enumeration.
//!
//! Generators are collected along the enumeration:
//!
//! ```text
//! G_0     = ∅
//! G_{n+1} = G_n ∪ { x_n | 1 ∉ (G_n ∪ base ∪ {x_n}) }
//! ```
//!
//! and `m` is the ideal generated by all of them. Whether `x_n ∈ m` is decided
//! by the same test that admits it, so membership in `m` is decidable even
//! though `m` is in general not finitely generated.
//!
//! Negation is relative to the base ideal: `1 ∉ I` is read as
//! `1 ∈ I ⇒ 1 ∈ (base)`. When the base already contains 1 (which includes
//! every base over the trivial ring) every element is admitted and `m` is the
//! whole ring.
//!
//! Three independent routes decide membership of `x_n`:
//!
//! * [`MaximalIdeal::contains_index`] reads the memoized chain,
//! * [`MaximalIdeal::contains_index_via_sequences`] evaluates the
//!   characterization over all binary sequences of length `n`,
//! * [`MaximalIdeal::indicator`] runs the joint indicator recursion `g(n, i)`.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::witness::MembershipWitness;

/// Upper limit on the number of defined positions the sequence route will
/// enumerate (`2^limit` sequences).
pub const SEQUENCE_ROUTE_LIMIT: usize = 20;

static TOTAL_ORACLE_CALLS: AtomicU64 = AtomicU64::new(0);

/// Unit-ideal tests performed by every maximal ideal in this process.
pub fn total_oracle_calls() -> u64 {
    TOTAL_ORACLE_CALLS.load(Ordering::SeqCst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Admission {
    /// The enumeration is undefined at this index.
    Undefined,
    Skipped,
    Admitted,
}

/// `x ∈ m` or `1 ∈ m + (x)`, with a certificate for whichever holds.
#[derive(Clone, Debug, PartialEq)]
pub enum Dichotomy<E> {
    /// `witness` expresses `x` over the stage generators `(G_stage ∪ base)`.
    Zero { stage: u64, witness: MembershipWitness<E> },
    /// `witness` expresses 1 over `(G_stage ∪ base) ∪ {x}`; its last
    /// coefficient is an inverse of `x` modulo `m`.
    Invertible { stage: u64, witness: MembershipWitness<E> },
}

impl<E> Dichotomy<E> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Dichotomy::Zero { .. })
    }

    pub fn stage(&self) -> u64 {
        match self {
            Dichotomy::Zero { stage, .. } | Dichotomy::Invertible { stage, .. } => *stage,
        }
    }

    pub fn witness(&self) -> &MembershipWitness<E> {
        match self {
            Dichotomy::Zero { witness, .. } | Dichotomy::Invertible { witness, .. } => witness,
        }
    }

    pub fn inverse(&self) -> Option<&E> {
        match self {
            Dichotomy::Invertible { witness, .. } => witness.coefficients.last(),
            Dichotomy::Zero { .. } => None,
        }
    }
}

/// Serialized dichotomy certificate. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub query: String,
    pub verdict: &'static str,
    pub generators: Vec<String>,
    pub coefficients: Vec<String>,
    pub stage: u64,
}

impl WitnessRecord {
    pub fn new<R: Ring>(ring: &R, query: &R::Elem, d: &Dichotomy<R::Elem>) -> Self {
        let w = d.witness();
        WitnessRecord {
            query: ring.format(query),
            verdict: if d.is_zero() { "zero" } else { "invertible" },
            generators: w.generators.iter().map(|g| ring.format(g)).collect(),
            coefficients: w.coefficients.iter().map(|c| ring.format(c)).collect(),
            stage: d.stage(),
        }
    }
}

#[derive(Debug)]
struct Chain<E> {
    decisions: Vec<Admission>,
    generators: Vec<E>,
    generator_indices: Vec<u64>,
    /// `(n, gens)`: from index `n` on, `gens` generates `(G_n ∪ base)`.
    stages: Vec<(u64, Vec<E>)>,
}

impl<E: Clone> Chain<E> {
    fn processed(&self) -> u64 {
        self.decisions.len() as u64
    }

    fn stage(&self, n: u64) -> &[E] {
        let pos = self.stages.partition_point(|(start, _)| *start <= n);
        &self.stages[pos - 1].1
    }
}

#[derive(Debug)]
pub struct MaximalIdeal<R: Ring> {
    ring: R,
    enumeration: Enumeration<R::Elem>,
    base: Vec<R::Elem>,
    base_improper: bool,
    chain: Mutex<Chain<R::Elem>>,
    /// Diagonal bits `g(k + 1, k)` of the indicator recursion.
    indicator_bits: Mutex<Vec<bool>>,
    oracle_calls: AtomicU64,
}

impl<R: Ring> MaximalIdeal<R> {
    /// A lazy handle; the chain is advanced on demand.
    pub fn new(ring: R, enumeration: Enumeration<R::Elem>, base: Vec<R::Elem>) -> Result<Self> {
        for b in &base {
            ring.check(b)?;
        }
        if let Enumeration::Prefixed(prefix) = &enumeration {
            for p in prefix {
                ring.check(p)?;
            }
        }
        TOTAL_ORACLE_CALLS.fetch_add(1, Ordering::SeqCst);
        let base_improper = ring.contains_one(&base)?.is_some();
        let first_stage = ring.compress(&base);
        Ok(MaximalIdeal {
            ring,
            enumeration,
            base,
            base_improper,
            chain: Mutex::new(Chain {
                decisions: Vec::new(),
                generators: Vec::new(),
                generator_indices: Vec::new(),
                stages: vec![(0, first_stage)],
            }),
            indicator_bits: Mutex::new(Vec::new()),
            oracle_calls: AtomicU64::new(1),
        })
    }

    /// Maximal ideal above the zero ideal, along the canonical enumeration.
    pub fn canonical(ring: R) -> Result<Self> {
        Self::new(ring, Enumeration::Canonical, Vec::new())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn enumeration(&self) -> &Enumeration<R::Elem> {
        &self.enumeration
    }

    pub fn base(&self) -> &[R::Elem] {
        &self.base
    }

    /// `1 ∈ (base)`; in that case `m` is the whole ring.
    pub fn is_base_improper(&self) -> bool {
        self.base_improper
    }

    /// Number of unit-ideal tests performed so far (construction included).
    pub fn oracle_calls(&self) -> u64 {
        self.oracle_calls.load(Ordering::SeqCst)
    }

    pub fn element(&self, n: u64) -> Option<R::Elem> {
        self.enumeration.get(&self.ring, n)
    }

    pub fn index_of(&self, x: &R::Elem) -> u64 {
        self.enumeration.index_of(&self.ring, x)
    }

    fn unit_test(&self, gens: &[R::Elem]) -> Result<Option<MembershipWitness<R::Elem>>> {
        self.oracle_calls.fetch_add(1, Ordering::SeqCst);
        TOTAL_ORACLE_CALLS.fetch_add(1, Ordering::SeqCst);
        self.ring.contains_one(gens)
    }

    /// `1 ∉ (gens)`, relative to the base.
    fn avoids_one(&self, gens: &[R::Elem]) -> Result<bool> {
        Ok(self.base_improper || self.unit_test(gens)?.is_none())
    }

    fn lock_chain(&self) -> std::sync::MutexGuard<'_, Chain<R::Elem>> {
        self.chain.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn extend_chain(&self, chain: &mut Chain<R::Elem>, upto: u64) -> Result<()> {
        while chain.processed() < upto {
            let n = chain.processed();
            let decision = match self.element(n) {
                None => Admission::Undefined,
                Some(x) => {
                    let mut gens = chain.stage(n).to_vec();
                    gens.push(x.clone());
                    if self.avoids_one(&gens)? {
                        chain.stages.push((n + 1, self.ring.compress(&gens)));
                        chain.generators.push(x);
                        chain.generator_indices.push(n);
                        Admission::Admitted
                    } else {
                        Admission::Skipped
                    }
                }
            };
            chain.decisions.push(decision);
        }
        Ok(())
    }

    /// Number of enumeration indices decided so far.
    pub fn processed(&self) -> u64 {
        self.lock_chain().processed()
    }

    /// Processes indices `0..n` and returns `G_n`.
    pub fn advance(&self, n: u64) -> Result<Vec<R::Elem>> {
        let mut chain = self.lock_chain();
        self.extend_chain(&mut chain, n)?;
        let count = chain.generator_indices.partition_point(|&i| i < n);
        Ok(chain.generators[..count].to_vec())
    }

    /// Raw enumeration indices of the generators in `G_n`.
    pub fn generator_indices(&self, n: u64) -> Result<Vec<u64>> {
        let mut chain = self.lock_chain();
        self.extend_chain(&mut chain, n)?;
        Ok(chain.generator_indices.iter().copied().take_while(|&i| i < n).collect())
    }

    /// Admission decisions for indices `0..n`.
    pub fn admissions(&self, n: u64) -> Result<Vec<Admission>> {
        let mut chain = self.lock_chain();
        self.extend_chain(&mut chain, n)?;
        Ok(chain.decisions[..n as usize].to_vec())
    }

    /// A compressed generating set of `(G_n ∪ base)`.
    pub fn stage_generators(&self, n: u64) -> Result<Vec<R::Elem>> {
        let mut chain = self.lock_chain();
        self.extend_chain(&mut chain, n)?;
        Ok(chain.stage(n).to_vec())
    }

    /// `x_n ∈ m`, decided as `1 ∉ (G_n ∪ base ∪ {x_n})`.
    pub fn contains_index(&self, n: u64) -> Result<bool> {
        let mut chain = self.lock_chain();
        self.extend_chain(&mut chain, n + 1)?;
        match chain.decisions[n as usize] {
            Admission::Undefined => Err(Error::UndefinedIndex(n)),
            Admission::Admitted => Ok(true),
            Admission::Skipped => Ok(false),
        }
    }

    /// `x ∈ m`, through the least index of `x`.
    pub fn contains(&self, x: &R::Elem) -> Result<bool> {
        self.ring.check(x)?;
        self.contains_index(self.index_of(x))
    }

    /// `x ∈ m` or `1 ∈ m + (x)`, with a certificate over the stage at the
    /// least index `n` of `x`: `x ∈ (G_{n+1} ∪ base)` or
    /// `1 ∈ (G_n ∪ base ∪ {x})`.
    pub fn dichotomy(&self, x: &R::Elem) -> Result<Dichotomy<R::Elem>> {
        self.ring.check(x)?;
        let n = self.index_of(x);
        if self.contains_index(n)? {
            let stage = self.stage_generators(n + 1)?;
            let witness = self.ring.ideal_membership(x, &stage)?.ok_or_else(|| {
                Error::Invariant("admitted element is not in its own stage".into())
            })?;
            Ok(Dichotomy::Zero { stage: n + 1, witness })
        } else {
            let mut gens = self.stage_generators(n)?;
            gens.push(x.clone());
            let witness = self.unit_test(&gens)?.ok_or_else(|| {
                Error::Invariant("skipped element does not generate the unit ideal".into())
            })?;
            Ok(Dichotomy::Invertible { stage: n, witness })
        }
    }

    pub fn witness_record(&self, x: &R::Elem) -> Result<WitnessRecord> {
        Ok(WitnessRecord::new(&self.ring, x, &self.dichotomy(x)?))
    }

    /// `x_n ∈ m` evaluated from the binary-sequence characterization:
    /// `x_n ∈ m` iff no sequence `v` is consistent (every `v_i = 1` exactly
    /// when `1 ∉ a_{[v_0..v_{i-1}]}`) while `1 ∈ a_v`, where
    /// `a_v = (v_0 x_0, …, v_{k-1} x_{k-1}, x_n)` plus the base.
    ///
    /// Undefined indices below `n` take no sequence position. Uses
    /// `O(2^n)` unit-ideal tests and no cached state.
    pub fn contains_index_via_sequences(&self, n: u64) -> Result<bool> {
        let target = self.element(n).ok_or(Error::UndefinedIndex(n))?;
        let defined: Vec<R::Elem> = (0..n).filter_map(|i| self.element(i)).collect();
        if defined.len() > SEQUENCE_ROUTE_LIMIT {
            return Err(Error::BoundExceeded(format!(
                "sequence route limited to {SEQUENCE_ROUTE_LIMIT} positions, got {}",
                defined.len()
            )));
        }
        if self.base_improper {
            return Ok(true);
        }
        let ideal = |v: u64, len: usize, last: &R::Elem| {
            let mut gens = self.base.clone();
            gens.extend(defined[..len].iter().enumerate().map(|(j, y)| {
                if v >> j & 1 == 1 {
                    y.clone()
                } else {
                    self.ring.zero()
                }
            }));
            gens.push(last.clone());
            gens
        };
        for v in 0..(1u64 << defined.len()) {
            let mut consistent = true;
            for (i, y) in defined.iter().enumerate() {
                let bit = v >> i & 1 == 1;
                if bit != self.avoids_one(&ideal(v, i, y))? {
                    consistent = false;
                    break;
                }
            }
            if consistent && self.unit_test(&ideal(v, defined.len(), &target))?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The indicator `g(n, i)` of `x_i ∈ G_n` (requires `i < n`):
    ///
    /// ```text
    /// g(0, i)     = 0
    /// g(n + 1, i) = 1  iff  g(n, i) = 1, or i = n and
    ///               1 ∉ (g(n,0) x_0, …, g(n,n-1) x_{n-1}, x_n)
    /// ```
    ///
    /// computed over the uncompressed generator list.
    pub fn indicator(&self, n: u64, i: u64) -> Result<bool> {
        if i >= n {
            return Err(Error::PreconditionViolated(format!(
                "indicator g({n}, {i}) needs i < n"
            )));
        }
        let mut bits = self.indicator_bits.lock().unwrap_or_else(|e| e.into_inner());
        while (bits.len() as u64) < n {
            let k = bits.len() as u64;
            let bit = match self.element(k) {
                None => false,
                Some(xk) => {
                    let mut gens = self.base.clone();
                    for (j, &b) in bits.iter().enumerate() {
                        gens.push(match (b, self.element(j as u64)) {
                            (true, Some(xj)) => xj,
                            _ => self.ring.zero(),
                        });
                    }
                    gens.push(xk);
                    self.avoids_one(&gens)?
                }
            };
            bits.push(bit);
        }
        Ok(bits[i as usize])
    }

    /// `x_n ∈ m` read off the indicator recursion, `g(n + 1, n)`.
    pub fn contains_index_via_indicator(&self, n: u64) -> Result<bool> {
        self.element(n).ok_or(Error::UndefinedIndex(n))?;
        self.indicator(n + 1, n)
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
    fn integers_generator_chain() {
        let m = MaximalIdeal::canonical(Integers).unwrap();
        assert!(m.advance(0).unwrap().is_empty());
        assert_eq!(m.advance(5).unwrap(), vec![z(0), z(2), z(-2)]);
        assert!(m.contains_index(3).unwrap());
        assert!(!m.contains_index(1).unwrap());
        assert!(m.contains(&z(-14)).unwrap());
        assert!(!m.contains(&z(9)).unwrap());
        assert!(!m.contains(&z(1)).unwrap());
    }

    #[test]
    fn local_ring_z4() {
        let r = Zmod::new(4).unwrap();
        let m = MaximalIdeal::canonical(r.clone()).unwrap();
        assert_eq!(m.advance(4).unwrap(), vec![r.elem(0), r.elem(2)]);
        assert!(m.contains_index(2).unwrap());
        assert_eq!(m.contains_index(4), Err(Error::UndefinedIndex(4)));
        assert!(m.indicator(3, 2).unwrap());
    }

    #[test]
    fn dichotomy_examples() {
        let m = MaximalIdeal::canonical(Integers).unwrap();
        match m.dichotomy(&z(5)).unwrap() {
            Dichotomy::Invertible { witness, .. } => {
                assert_eq!(witness.generators, vec![z(2), z(5)]);
                assert_eq!(witness.coefficients, vec![z(-2), z(1)]);
            }
            other => panic!("expected invertible, got {other:?}"),
        }
        match m.dichotomy(&z(6)).unwrap() {
            Dichotomy::Zero { witness, .. } => {
                assert_eq!(witness.generators, vec![z(2)]);
                assert_eq!(witness.coefficients, vec![z(3)]);
            }
            other => panic!("expected zero, got {other:?}"),
        }
        assert!(m.dichotomy(&z(0)).unwrap().is_zero());
    }

    #[test]
    fn sequence_route_examples() {
        let m = MaximalIdeal::canonical(Integers).unwrap();
        assert!(m.contains_index_via_sequences(3).unwrap());
        assert!(!m.contains_index_via_sequences(1).unwrap());
        // n = 0: single empty sequence, decides 1 ∉ (x_0) = (0)
        assert!(m.contains_index_via_sequences(0).unwrap());
    }

    #[test]
    fn indicator_examples() {
        let m = MaximalIdeal::canonical(Integers).unwrap();
        assert!(m.indicator(4, 3).unwrap());
        assert!(!m.indicator(4, 1).unwrap());
        assert!(m.indicator(0, 0).is_err());
        assert_eq!(m.indicator(1, 0), Ok(true));
    }

    #[test]
    fn head_of_enumeration_selects_the_prime() {
        let m = MaximalIdeal::new(Integers, Enumeration::Prefixed(vec![z(5)]), vec![]).unwrap();
        assert!(m.contains(&z(10)).unwrap());
        assert!(!m.contains(&z(2)).unwrap());
        assert_eq!(m.advance(1).unwrap(), vec![z(5)]);
    }

    #[test]
    fn improper_base_admits_everything() {
        let m = MaximalIdeal::new(Integers, Enumeration::Canonical, vec![z(3), z(2)]).unwrap();
        assert!(m.is_base_improper());
        assert!(m.contains(&z(1)).unwrap());
        assert!(m.contains_index_via_sequences(4).unwrap());
        assert!(m.indicator(3, 1).unwrap());
        assert!(m.dichotomy(&z(7)).unwrap().is_zero());
    }

    #[test]
    fn trivial_ring_is_its_own_maximal_ideal() {
        let r = Zmod::new(1).unwrap();
        let m = MaximalIdeal::canonical(r.clone()).unwrap();
        assert!(m.is_base_improper());
        assert!(m.contains(&r.elem(0)).unwrap());
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let a = Zmod::new(6).unwrap();
        let b = Zmod::new(6).unwrap();
        let m = MaximalIdeal::canonical(a).unwrap();
        assert!(matches!(m.contains(&b.elem(2)), Err(Error::ForeignElement(_))));
    }

    #[test]
    fn witness_record_field_order() {
        let m = MaximalIdeal::canonical(Integers).unwrap();
        let json = serde_json::to_string(&m.witness_record(&z(5)).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"query":"5","verdict":"invertible","generators":["2","5"],"coefficients":["-2","1"],"stage":9}"#
        );
    }
}
