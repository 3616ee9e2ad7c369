//! Exhaustive ground truth over `Z/n` for small `n`, written against plain
//! `u64` residues so that it shares no code with the ring implementations.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};

pub const MAX_MODULUS: u64 = 30;

#[derive(Debug)]
pub struct BruteForceOracle {
    n: u64,
    units: Vec<bool>,
    nilpotency: Vec<Option<u32>>,
    spans: Mutex<HashMap<Vec<u64>, Vec<bool>>>,
}

impl BruteForceOracle {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > MAX_MODULUS {
            return Err(Error::BoundExceeded(format!(
                "brute-force oracle supports 1 <= n <= {MAX_MODULUS}, got {n}"
            )));
        }
        let units = (0..n).map(|x| (0..n).any(|y| x * y % n == 1 % n)).collect();
        let nilpotency = (0..n)
            .map(|x| {
                let mut power = x % n;
                for k in 1..=n as u32 {
                    if power == 0 {
                        return Some(k);
                    }
                    power = power * x % n;
                }
                None
            })
            .collect();
        Ok(BruteForceOracle { n, units, nilpotency, spans: Mutex::new(HashMap::new()) })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.n
    }

    pub fn is_unit(&self, x: u64) -> bool {
        self.units[(x % self.n) as usize]
    }

    /// Least `k ≥ 1` with `x^k = 0`.
    pub fn nilpotency(&self, x: u64) -> Option<u32> {
        self.nilpotency[(x % self.n) as usize]
    }

    pub fn units(&self) -> Vec<u64> {
        self.elements().filter(|&x| self.is_unit(x)).collect()
    }

    pub fn nilpotents(&self) -> Vec<u64> {
        self.elements().filter(|&x| self.nilpotency(x).is_some()).collect()
    }

    /// Every ideal of `Z/n`, as the multiples of each divisor of `n`.
    pub fn ideals(&self) -> Vec<Vec<u64>> {
        (1..=self.n)
            .filter(|d| self.n.is_multiple_of(*d))
            .map(|d| self.elements().filter(|x| x % d == 0).collect())
            .collect()
    }

    /// `{ Σ a_i g_i }`, as the closure of `{0}` under adding `r·g` for every
    /// `r` and generator `g`.
    pub fn span(&self, gens: &[u64]) -> Vec<bool> {
        let key: Vec<u64> = gens.iter().map(|g| g % self.n).collect();
        let mut cache = self.spans.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(s) = cache.get(&key) {
            return s.clone();
        }
        let mut reached = vec![false; self.n as usize];
        reached[0] = true;
        let mut frontier = vec![0u64];
        while let Some(s) = frontier.pop() {
            for g in &key {
                for r in self.elements() {
                    let t = (s + r * g) % self.n;
                    if !reached[t as usize] {
                        reached[t as usize] = true;
                        frontier.push(t);
                    }
                }
            }
        }
        cache.insert(key, reached.clone());
        reached
    }

    pub fn membership(&self, x: u64, gens: &[u64]) -> bool {
        self.span(gens)[(x % self.n) as usize]
    }

    pub fn is_ideal(&self, set: &[u64]) -> bool {
        let mut member = vec![false; self.n as usize];
        for &s in set {
            member[(s % self.n) as usize] = true;
        }
        member[0]
            && self.elements().filter(|&a| member[a as usize]).all(|a| {
                self.elements().all(|r| {
                    member[(a * r % self.n) as usize]
                        && (!member[r as usize] || member[((a + r) % self.n) as usize])
                })
            })
    }

    /// Classical primality: an ideal without 1 such that `xy ∈ S` forces
    /// `x ∈ S` or `y ∈ S`.
    pub fn is_prime(&self, set: &[u64]) -> bool {
        if !self.is_ideal(set) {
            return false;
        }
        let member = |x: u64| set.iter().any(|s| s % self.n == x % self.n);
        !member(1 % self.n)
            && self.elements().all(|x| {
                self.elements()
                    .all(|y| !member(x * y % self.n) || member(x) || member(y))
            })
    }

    /// Membership bits of the maximal ideal built along `0, 1, …, n-1` above
    /// `(base)`, with spans computed exhaustively.
    pub fn maximal_ideal(&self, base: &[u64]) -> Vec<bool> {
        let base_improper = self.membership(1, base);
        let mut gens = base.to_vec();
        let mut admitted = vec![false; self.n as usize];
        for x in self.elements() {
            let mut trial = gens.clone();
            trial.push(x);
            if base_improper || !self.membership(1, &trial) {
                gens.push(x);
                admitted[x as usize] = true;
            }
        }
        admitted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check_examples() {
        let o = BruteForceOracle::new(12).unwrap();
        let multiples = |d: u64| (0..12).filter(|x| x % d == 0).collect::<Vec<_>>();
        assert!(o.is_prime(&multiples(3)));
        assert!(!o.is_prime(&multiples(4)));
        assert!(!o.is_prime(&multiples(1)));
        assert_eq!(o.ideals().len(), 6);
    }

    #[test]
    fn membership_examples() {
        let o = BruteForceOracle::new(12).unwrap();
        assert!(o.membership(6, &[4, 9]));
        assert!(!o.membership(1, &[4, 6]));
        assert!(o.membership(0, &[]));
        assert!(!o.membership(5, &[]));
    }

    #[test]
    fn units_and_nilpotents() {
        let o = BruteForceOracle::new(12).unwrap();
        assert_eq!(o.units(), vec![1, 5, 7, 11]);
        assert_eq!(o.nilpotents(), vec![0, 6]);
        assert_eq!(o.nilpotency(6), Some(2));
        let trivial = BruteForceOracle::new(1).unwrap();
        assert!(trivial.is_unit(0));
        assert!(BruteForceOracle::new(31).is_err());
    }

    #[test]
    fn maximal_ideal_of_z12() {
        let o = BruteForceOracle::new(12).unwrap();
        let m = o.maximal_ideal(&[]);
        let members: Vec<u64> = (0..12).filter(|&x| m[x as usize]).collect();
        assert_eq!(members, vec![0, 2, 4, 6, 8, 10]);
    }
}
