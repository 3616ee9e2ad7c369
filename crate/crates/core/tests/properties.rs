use krullkit::field::{GeometricField, TowerField};
use krullkit::ring::{poly, Integers, Localization, Poly, PolyRing, PrimeField, Zmod};
use krullkit::theorems::BruteForceOracle;
use krullkit::{EuclideanDomain, Field, FiniteField, MaximalIdeal, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn ring_axioms<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    assert!(r.eq(&r.add(&r.add(a, b), c), &r.add(a, &r.add(b, c))));
    assert!(r.eq(&r.mul(&r.mul(a, b), c), &r.mul(a, &r.mul(b, c))));
    assert!(r.eq(&r.add(a, b), &r.add(b, a)));
    assert!(r.eq(&r.mul(a, b), &r.mul(b, a)));
    assert!(r.eq(&r.mul(a, &r.add(b, c)), &r.add(&r.mul(a, b), &r.mul(a, c))));
    assert!(r.is_zero(&r.add(a, &r.neg(a))));
    assert!(r.eq(&r.mul(a, &r.one()), a));
    assert!(r.eq(&r.add(a, &r.zero()), a));
}

fn by_index<R: Ring>(r: &R, i: u64) -> R::Elem {
    r.enumerate(i).expect("index in range")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn integer_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        ring_axioms(&Integers, &a.into(), &b.into(), &c.into());
    }

    #[test]
    fn modular_axioms(n in 1u64..60, a: u64, b: u64, c: u64) {
        let r = Zmod::new(n).unwrap();
        ring_axioms(&r, &r.elem(a), &r.elem(b), &r.elem(c));
    }

    #[test]
    fn polynomial_axioms(p in prop::sample::select(vec![2u64, 3, 5]), i in 0u64..500, j in 0u64..500, k in 0u64..500) {
        let r = PolyRing::new(PrimeField::new(p).unwrap());
        ring_axioms(&r, &by_index(&r, i), &by_index(&r, j), &by_index(&r, k));
    }

    #[test]
    fn localization_axioms(i in 0u64..300, j in 0u64..300, k in 0u64..300) {
        let r = Localization::new(Integers, BigInt::from(6)).unwrap();
        ring_axioms(&r, &by_index(&r, i), &by_index(&r, j), &by_index(&r, k));
        let z12 = Zmod::new(12).unwrap();
        let s = Localization::new(z12.clone(), z12.elem(2)).unwrap();
        let frac = |t: u64| s.fraction(z12.elem(t % 12), (t / 12 % 4) as u32);
        ring_axioms(&s, &frac(i), &frac(j), &frac(k));
    }

    #[test]
    fn enumeration_round_trip(i in 0u64..2000) {
        let z = Integers;
        prop_assert_eq!(z.index_of(&by_index(&z, i)), i);
        let r = PolyRing::new(PrimeField::new(3).unwrap());
        prop_assert_eq!(r.index_of(&by_index(&r, i)), i);
        let m = Zmod::new(37).unwrap();
        let j = i % 37;
        prop_assert_eq!(m.index_of(&by_index(&m, j)), j);
    }

    #[test]
    fn localization_index_is_least(i in 0u64..400) {
        let r = Localization::new(Integers, BigInt::from(2)).unwrap();
        let x = by_index(&r, i);
        let k = r.index_of(&x);
        prop_assert!(k <= i);
        prop_assert!(r.eq(&by_index(&r, k), &x));
        for earlier in 0..k {
            prop_assert!(!r.eq(&by_index(&r, earlier), &x));
        }
    }

    #[test]
    fn integer_membership_witnesses(x in -500i64..500, gens in prop::collection::vec(-60i64..60, 0..4)) {
        let g: Vec<BigInt> = gens.iter().map(|&v| v.into()).collect();
        let d = gens.iter().fold(0i64, |acc, &v| acc.gcd(&v));
        let coeffs = Integers.membership_coefficients(&x.into(), &g).unwrap();
        prop_assert_eq!(coeffs.is_some(), if d == 0 { x == 0 } else { x % d == 0 });
        if let Some(c) = coeffs {
            let sum: BigInt = c.iter().zip(&g).map(|(a, b)| a * b).sum();
            prop_assert_eq!(sum, BigInt::from(x));
        }
    }

    #[test]
    fn polynomial_membership_witnesses(x in 0u64..3000, gens in prop::collection::vec(0u64..400, 0..3)) {
        let r = PolyRing::new(PrimeField::new(3).unwrap());
        let g: Vec<_> = gens.iter().map(|&i| by_index(&r, i)).collect();
        let f = by_index(&r, x);
        if let Some(c) = r.membership_coefficients(&f, &g).unwrap() {
            let sum = c.iter().zip(&g).fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)));
            prop_assert!(r.eq(&sum, &f));
        } else {
            let d = r.gcd_all(&g);
            prop_assert!(!r.divides(&d, &f));
        }
    }

    #[test]
    fn saturated_equality_over_z12(a in 0u64..12, k in 0u32..4, b in 0u64..12, l in 0u32..4) {
        let base = Zmod::new(12).unwrap();
        let r = Localization::new(base.clone(), base.elem(2)).unwrap();
        let lhs = r.fraction(base.elem(a), k);
        let rhs = r.fraction(base.elem(b), l);
        let direct = (0..=4u32).any(|n| {
            let cross = (a * 2u64.pow(l) + 12 * 16 - b * 2u64.pow(k) % 12) % 12;
            cross * 2u64.pow(n) % 12 == 0
        });
        prop_assert_eq!(r.eq(&lhs, &rhs), direct);
    }

    #[test]
    fn integer_quotient_is_a_field(a in -300i64..300, b in -300i64..300) {
        let k = GeometricField::new(MaximalIdeal::canonical(Integers).unwrap()).unwrap();
        let (x, y) = (k.residue(a.into()).unwrap(), k.residue(b.into()).unwrap());
        prop_assert_eq!(k.eq(&x, &y), (a - b) % 2 == 0);
        match k.inv(&x) {
            Some(inv) => prop_assert!(k.is_one(&k.mul(&x, &inv))),
            None => prop_assert!(k.is_zero(&x)),
        }
    }

    #[test]
    fn polynomial_quotient_is_a_field(i in 0u64..200, j in 0u64..200) {
        let r = PolyRing::new(PrimeField::new(2).unwrap());
        let base = vec![poly::parse(r.field(), "X^4+X^2", 'X').unwrap()];
        let m = MaximalIdeal::new(r.clone(), krullkit::Enumeration::Canonical, base).unwrap();
        let k = GeometricField::new(m).unwrap();
        let (x, y) = (k.residue(by_index(&r, i)).unwrap(), k.residue(by_index(&r, j)).unwrap());
        ring_axioms(&k, &x, &y, &k.add(&x, &y));
        match k.inv(&x) {
            Some(inv) => prop_assert!(k.is_one(&k.mul(&x, &inv))),
            None => prop_assert!(k.is_zero(&x)),
        }
    }

    #[test]
    fn tower_field_axioms(a in 0u64..81, b in 0u64..81, c in 0u64..81) {
        let f = PrimeField::new(3).unwrap();
        let k1 = TowerField::prime(f.clone());
        let k2 = k1.extend(poly::parse(&k1, "X^2+1", 'X').unwrap()).unwrap();
        let nonsquare = (1..9)
            .map(|d| k2.element(d))
            .find(|c| (0..9).all(|e| !k2.eq(&k2.mul(&k2.element(e), &k2.element(e)), c)))
            .unwrap();
        let modulus = Poly::new(&k2, vec![k2.neg(&nonsquare), k2.zero(), k2.one()]);
        let k4 = k2.extend(modulus).unwrap();
        prop_assert_eq!(k4.order(), 81);
        let (x, y, z) = (k4.element(a), k4.element(b), k4.element(c));
        prop_assert_eq!(k4.digit(&x), a);
        ring_axioms(&k4, &x, &y, &z);
        match k4.inv(&x) {
            Some(inv) => prop_assert!(k4.is_one(&k4.mul(&x, &inv))),
            None => prop_assert_eq!(a, 0),
        }
    }

    #[test]
    fn chain_matches_oracle(n in 1u64..=30, base in prop::collection::vec(0u64..30, 0..3)) {
        let r = Zmod::new(n).unwrap();
        let oracle = BruteForceOracle::new(n).unwrap();
        let gens: Vec<_> = base.iter().map(|&b| r.elem(b)).collect();
        let m = MaximalIdeal::new(r.clone(), krullkit::Enumeration::Canonical, gens).unwrap();
        let expected = oracle.maximal_ideal(&base.iter().map(|b| b % n).collect::<Vec<_>>());
        for x in 0..n {
            prop_assert_eq!(m.contains(&r.elem(x)).unwrap(), expected[x as usize]);
            let d = m.dichotomy(&r.elem(x)).unwrap();
            prop_assert_eq!(d.is_zero(), expected[x as usize]);
            prop_assert!(d.witness().verify(&r));
        }
    }
}

#[test]
fn membership_agrees_across_repeated_indices() {
    let r = Localization::new(Integers, BigInt::from(2)).unwrap();
    let m = MaximalIdeal::canonical(r.clone()).unwrap();
    for target in 0..40u64 {
        let x = by_index(&r, target);
        let indices: Vec<u64> = (0..2000).filter(|&i| r.eq(&by_index(&r, i), &x)).take(3).collect();
        assert!(indices.len() == 3, "fewer than 3 indices for {}", r.format(&x));
        let verdicts: Vec<bool> = indices.iter().map(|&i| m.contains_index(i).unwrap()).collect();
        assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{}: {verdicts:?}", r.format(&x));
        assert_eq!(m.contains(&x).unwrap(), verdicts[0]);
    }
}
