//! Library results against brute force over `Z/n`, `n ≤ 12`.

use krullkit::ring::{ModInt, Ring, Zmod};
use krullkit::theorems::BruteForceOracle;
use krullkit::{Enumeration, MaximalIdeal};
use num_traits::ToPrimitive;

fn lists(n: u64, len: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..n.pow(len as u32)).map(move |mut t| {
        (0..len)
            .map(|_| {
                let d = t % n;
                t /= n;
                d
            })
            .collect()
    })
}

fn elems(r: &Zmod, v: &[u64]) -> Vec<ModInt> {
    v.iter().map(|&x| r.elem(x)).collect()
}

#[test]
fn membership_matches_brute_force() {
    for n in 1..=12u64 {
        let r = Zmod::new(n).unwrap();
        let oracle = BruteForceOracle::new(n).unwrap();
        for len in 0..=3 {
            for gens in lists(n, len) {
                let g = elems(&r, &gens);
                for x in 0..n {
                    let coeffs = r.membership_coefficients(&r.elem(x), &g).unwrap();
                    assert_eq!(coeffs.is_some(), oracle.membership(x, &gens), "Z/{n}: {x} in {gens:?}");
                    if let Some(c) = coeffs {
                        let sum = c
                            .iter()
                            .zip(&g)
                            .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)));
                        assert!(r.eq(&sum, &r.elem(x)), "Z/{n}: bad coefficients for {x} in {gens:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn units_and_nilpotents_match() {
    for n in 1..=12u64 {
        let r = Zmod::new(n).unwrap();
        let oracle = BruteForceOracle::new(n).unwrap();
        for x in 0..n {
            let inv = r.is_unit(&r.elem(x)).unwrap();
            assert_eq!(inv.is_some(), oracle.is_unit(x), "Z/{n}: unit {x}");
            if let Some(y) = inv {
                assert_eq!(x * y.value().to_u64().unwrap() % n, 1 % n);
            }
            assert_eq!(r.is_nilpotent(&r.elem(x)).unwrap(), oracle.nilpotency(x), "Z/{n}: nilpotent {x}");
        }
    }
}

#[test]
fn maximal_ideals_above_small_bases_match() {
    for n in 1..=12u64 {
        let r = Zmod::new(n).unwrap();
        let oracle = BruteForceOracle::new(n).unwrap();
        for len in 0..=2 {
            for base in lists(n, len) {
                let m = MaximalIdeal::new(r.clone(), Enumeration::Canonical, elems(&r, &base)).unwrap();
                let expected = oracle.maximal_ideal(&base);
                for x in 0..n {
                    assert_eq!(
                        m.contains(&r.elem(x)).unwrap(),
                        expected[x as usize],
                        "Z/{n} above {base:?}: {x}"
                    );
                }
                let members: Vec<u64> = (0..n).filter(|&x| expected[x as usize]).collect();
                if !oracle.membership(1, &base) {
                    assert!(oracle.is_prime(&members), "Z/{n} above {base:?}");
                }
            }
        }
    }
}

#[test]
fn shifted_enumerations_still_give_maximal_ideals() {
    for n in 2..=12u64 {
        let r = Zmod::new(n).unwrap();
        let oracle = BruteForceOracle::new(n).unwrap();
        let maximal: Vec<Vec<u64>> = oracle
            .ideals()
            .into_iter()
            .filter(|i| oracle.is_prime(i))
            .collect();
        for k in 0..n {
            let m = MaximalIdeal::new(r.clone(), Enumeration::Shifted(k), vec![]).unwrap();
            let members: Vec<u64> = (0..n).filter(|&x| m.contains(&r.elem(x)).unwrap()).collect();
            assert!(maximal.contains(&members), "Z/{n} shifted {k}: {members:?}");
        }
    }
}
