//! Enumerations `x_0, x_1, …` driving the maximal-ideal construction.
//!
//! The constructed ideal depends on the enumeration order, so callers control
//! its head: rotate an element of the canonical order to the front, or put an
//! explicit prefix in front of the canonical order. Every variant stays
//! surjective because the full canonical order is still visited.

use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub enum Enumeration<E> {
    /// The ring's own enumeration.
    Canonical,
    /// Rotates the first `k + 1` canonical entries so that `x_k` comes first.
    Shifted(u64),
    /// An explicit prefix, followed by the complete canonical enumeration.
    Prefixed(Vec<E>),
}

impl<E: Clone> Enumeration<E> {
    pub fn get<R: Ring<Elem = E>>(&self, ring: &R, i: u64) -> Option<E> {
        match self {
            Enumeration::Canonical => ring.enumerate(i),
            Enumeration::Shifted(k) => match i {
                0 => ring.enumerate(*k),
                i if i <= *k => ring.enumerate(i - 1),
                i => ring.enumerate(i),
            },
            Enumeration::Prefixed(prefix) => match usize::try_from(i) {
                Ok(j) if j < prefix.len() => Some(prefix[j].clone()),
                _ => ring.enumerate(i - prefix.len() as u64),
            },
        }
    }

    /// The least index whose element equals `x`.
    pub fn index_of<R: Ring<Elem = E>>(&self, ring: &R, x: &E) -> u64 {
        let bound = match self {
            Enumeration::Canonical => return ring.index_of(x),
            Enumeration::Shifted(k) => {
                let j = ring.index_of(x);
                if j < *k {
                    j + 1
                } else if j == *k {
                    0
                } else {
                    j
                }
            }
            Enumeration::Prefixed(prefix) => prefix
                .iter()
                .position(|p| ring.eq(p, x))
                .map(|j| j as u64)
                .unwrap_or_else(|| prefix.len() as u64 + ring.index_of(x)),
        };
        (0..=bound)
            .find(|&i| self.get(ring, i).is_some_and(|y| ring.eq(&y, x)))
            .expect("bound index enumerates x")
    }

    /// Textual form in the enumeration-spec grammar (`canonical`,
    /// `shifted:<k>`, `list:<csv>`).
    pub fn describe<R: Ring<Elem = E>>(&self, ring: &R) -> String {
        match self {
            Enumeration::Canonical => "canonical".to_string(),
            Enumeration::Shifted(k) => format!("shifted:{k}"),
            Enumeration::Prefixed(prefix) => {
                let items: Vec<String> = prefix.iter().map(|p| ring.format(p)).collect();
                format!("list:{}", items.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::ring::Integers;

    #[test]
    fn shifted_brings_an_element_to_the_front() {
        let e: Enumeration<BigInt> = Enumeration::Shifted(9);
        let head: Vec<BigInt> = (0..12).map(|i| e.get(&Integers, i).unwrap()).collect();
        let expect: Vec<BigInt> = [5, 0, 1, -1, 2, -2, 3, -3, 4, -4, -5, 6]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(head, expect);
        for i in 0..100 {
            let x = e.get(&Integers, i).unwrap();
            assert_eq!(e.index_of(&Integers, &x), i);
        }
    }

    #[test]
    fn prefixed_keeps_least_index() {
        let e = Enumeration::Prefixed(vec![BigInt::from(5), BigInt::from(0)]);
        assert_eq!(e.get(&Integers, 0), Some(BigInt::from(5)));
        assert_eq!(e.get(&Integers, 2), Some(BigInt::from(0)));
        assert_eq!(e.index_of(&Integers, &BigInt::from(0)), 1);
        assert_eq!(e.index_of(&Integers, &BigInt::from(-1)), 4);
        assert_eq!(e.describe(&Integers), "list:5,0");
    }
}
