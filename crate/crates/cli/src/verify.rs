use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use krullkit::parse::{element_list, RingSpec};
use krullkit::ring::{poly, Integers, ModInt, Poly, Ring, Zmod};
use krullkit::theorems::{
    matrix_not_surjective, verify_invertible_coefficients, verify_nilpotent_coefficients,
    BruteForceOracle, CoefficientReport, MAX_MODULUS,
};
use krullkit::maximal::SEQUENCE_ROUTE_LIMIT;
use krullkit::{Error, MaximalIdeal, Result};

use crate::with_ring;

/// Largest number of polynomials or matrices enumerated exhaustively.
const CASE_LIMIT: u64 = 1 << 20;
const MATRIX_EXHAUSTIVE: u64 = 1 << 16;

pub struct Params {
    pub max_deg: usize,
    pub rows: usize,
    pub cols: usize,
    pub count: u64,
    pub samples: u64,
    pub seed: u64,
    pub base: String,
    pub polys: Option<Vec<String>>,
}

pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    pub passed: bool,
}

fn residue(x: &ModInt) -> u64 {
    x.value().to_u64().expect("reduced residue")
}

fn small_modulus(spec: &RingSpec) -> Result<(Zmod, BruteForceOracle)> {
    let RingSpec::Modular(n) = spec else {
        return Err(Error::Unsupported(format!("this suite needs Z/n, got {spec}")));
    };
    let n = n
        .to_u64()
        .filter(|&n| n <= MAX_MODULUS)
        .ok_or_else(|| Error::BoundExceeded(format!("Z/{n}: the brute-force oracle stops at {MAX_MODULUS}")))?;
    Ok((Zmod::new(n)?, BruteForceOracle::new(n)?))
}

fn digits(mut t: u64, base: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = t % base;
            t /= base;
            d
        })
        .collect()
}

pub fn test_cases(spec: &RingSpec, params: &Params) -> Result<Outcome> {
    let (ring, oracle) = small_modulus(spec)?;
    let n = oracle.modulus();
    let polys: Vec<Poly<ModInt>> = match &params.polys {
        Some(lines) => lines.iter().map(|l| poly::parse(&ring, l, 'X')).collect::<Result<_>>()?,
        None => {
            let total = n
                .checked_pow(params.max_deg as u32 + 1)
                .filter(|&t| t <= CASE_LIMIT)
                .ok_or_else(|| Error::BoundExceeded(format!("Z/{n} with degree {} has too many cases", params.max_deg)))?;
            (0..total)
                .map(|t| Poly::new(&ring, digits(t, n, params.max_deg + 1).into_iter().map(|d| ring.elem(d)).collect()))
                .collect()
        }
    };
    let nil = |c: &ModInt| oracle.nilpotency(residue(c)).is_some();
    let mut failures = Vec::new();
    let mut reports: Vec<CoefficientReport> = Vec::new();
    let (mut nilpotent, mut invertible, mut rejected) = (0u64, 0u64, 0u64);
    for f in &polys {
        let label = poly::format(&ring, f, "X");
        let coeffs: Vec<ModInt> = (0..=f.degree().unwrap_or(0)).map(|i| f.coeff(&ring, i)).collect();
        let expect_nil = coeffs.iter().all(nil);
        let expect_inv = oracle.is_unit(residue(&coeffs[0])) && coeffs[1..].iter().all(nil);
        for (expected, outcome) in [
            (expect_nil, verify_nilpotent_coefficients(&ring, f)),
            (expect_inv, verify_invertible_coefficients(&ring, f)),
        ] {
            match outcome {
                Ok(rep) => {
                    let exponents_ok = rep.steps.iter().all(|s| {
                        let a: u64 = s.coefficient.parse().expect("residue");
                        oracle.nilpotency(a) == Some(s.exponent)
                    });
                    let inverse_ok = rep.inverse_poly.as_ref().map_or(true, |g| {
                        poly::equal(&ring, &poly::mul(&ring, f, g), &Poly::constant(&ring, ring.one()))
                    });
                    if !expected || !rep.passed || !exponents_ok || !inverse_ok {
                        failures.push(format!("{}: {label}", rep.proposition));
                    }
                    if rep.inverse.is_some() {
                        invertible += 1;
                    } else {
                        nilpotent += 1;
                    }
                    if params.polys.is_some() {
                        reports.push(rep);
                    }
                }
                Err(Error::PreconditionViolated(_)) if !expected => rejected += 1,
                Err(e) => failures.push(format!("{label}: {e}")),
            }
        }
    }
    let passed = failures.is_empty();
    let mut result = json!({
        "cases": polys.len(),
        "nilpotent_verified": nilpotent,
        "invertible_verified": invertible,
        "preconditions_rejected": rejected,
        "failures": failures,
        "passed": passed,
    });
    if params.polys.is_some() {
        result["reports"] = serde_json::to_value(&reports).expect("reports serialize");
    }
    let inputs = match &params.polys {
        Some(lines) => json!({ "suite": "test-cases", "ring": spec.to_string(), "polys": lines }),
        None => json!({ "suite": "test-cases", "ring": spec.to_string(), "max_deg": params.max_deg }),
    };
    Ok(Outcome { inputs, result, passed })
}

/// Whether no `x` over `Z/p` maps `rows` onto `target` modulo `p`.
fn residue_unreachable(p: u64, rows: &[Vec<i64>], target: &[i64]) -> bool {
    let cols = rows[0].len();
    let p_i = p as i64;
    (0..p.pow(cols as u32)).all(|t| {
        let x = digits(t, p, cols);
        rows.iter().zip(target).any(|(row, v)| {
            let image: i64 = row.iter().zip(&x).map(|(a, b)| a * *b as i64).sum();
            (image - v).rem_euclid(p_i) != 0
        })
    })
}

pub fn matrix(spec: &RingSpec, params: &Params) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let (r, c) = (params.rows, params.cols);
    let cells = (r * c) as u32;
    let mut failures = Vec::new();
    let mut certificates = Vec::new();
    let (checked, exhaustive) = match spec {
        RingSpec::Integers => {
            let ring = Integers::new();
            for _ in 0..params.samples {
                let rows: Vec<Vec<i64>> =
                    (0..r).map(|_| (0..c).map(|_| rng.gen_range(-20..=20)).collect()).collect();
                let elems = rows.iter().map(|row| row.iter().map(|&v| v.into()).collect()).collect();
                let cert = matrix_not_surjective(ring, elems)?;
                let p = cert.ideal_generators[0].to_u64().unwrap_or(0);
                let target: Vec<i64> = cert.target.iter().map(|t| t.to_i64().expect("small target")).collect();
                if p < 2 || !residue_unreachable(p, &rows, &target) {
                    failures.push(format!("{rows:?}"));
                }
                if certificates.len() < 5 {
                    let elems: Vec<Vec<_>> = rows.iter().map(|row| row.iter().map(|&v| v.into()).collect()).collect();
                    certificates.push(cert.report(&ring, &elems));
                }
            }
            (params.samples, false)
        }
        _ => with_ring!(spec, |ring| {
            let size = ring.finite_size().ok_or_else(|| {
                Error::Unsupported(format!("matrix suite over {spec}: only Z and finite rings"))
            })?;
            let total = size.checked_pow(cells).filter(|&t| t <= MATRIX_EXHAUSTIVE);
            let picks: Vec<u64> = match total {
                Some(t) => (0..t).collect(),
                None => (0..params.samples).map(|_| rng.gen_range(0..u64::MAX)).collect(),
            };
            let elems: Vec<_> = (0..size).filter_map(|i| ring.enumerate(i)).collect();
            for pick in &picks {
                let cell_digits: Vec<u64> = match total {
                    Some(_) => digits(*pick, size, cells as usize),
                    None => {
                        let mut local = ChaCha8Rng::seed_from_u64(*pick);
                        (0..cells).map(|_| local.gen_range(0..size)).collect()
                    }
                };
                let rows: Vec<Vec<_>> = cell_digits
                    .chunks(c)
                    .map(|chunk| chunk.iter().map(|&d| elems[d as usize].clone()).collect())
                    .collect();
                let cert = matrix_not_surjective(ring.clone(), rows.clone())?;
                let report = cert.report(&ring, &rows);
                if cert.exhaustive == Some(false) || !report.passed {
                    failures.push(report.instance.clone());
                }
                if certificates.len() < 5 {
                    certificates.push(report);
                }
            }
            (picks.len() as u64, total.is_some())
        }),
    };
    let passed = failures.is_empty();
    let inputs = json!({
        "suite": "matrix",
        "ring": spec.to_string(),
        "rows": r,
        "cols": c,
        "samples": params.samples,
        "seed": params.seed,
    });
    let result = json!({
        "matrices": checked,
        "all_matrices": exhaustive,
        "certificates": certificates,
        "failures": failures,
        "passed": passed,
    });
    Ok(Outcome { inputs, result, passed })
}

pub fn oracle_equivalence(spec: &RingSpec, params: &Params) -> Result<Outcome> {
    with_ring!(spec, |ring| oracle_equivalence_in(ring, spec, params))
}

fn oracle_equivalence_in<R: Ring>(ring: R, spec: &RingSpec, params: &Params) -> Result<Outcome> {
    let base = element_list(&ring, &params.base)?;
    let fresh = || MaximalIdeal::new(ring.clone(), krullkit::Enumeration::Canonical, base.clone());
    let mut failures = Vec::new();
    let m = fresh()?;
    let indices = params.count.min(SEQUENCE_ROUTE_LIMIT as u64);
    for n in 0..indices {
        if m.element(n).is_none() {
            break;
        }
        let chain = m.contains_index(n)?;
        let sequences = fresh()?.contains_index_via_sequences(n)?;
        let indicator = fresh()?.contains_index_via_indicator(n)?;
        if chain != sequences || chain != indicator {
            failures.push(format!("index {n}: chain {chain}, sequences {sequences}, indicator {indicator}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let range = ring.finite_size().unwrap_or(200);
    for _ in 0..params.samples {
        let i = rng.gen_range(0..range);
        let x = ring.enumerate(i).expect("index in range");
        let d = m.dichotomy(&x)?;
        if d.is_zero() != m.contains(&x)? || !d.witness().verify(&ring) {
            failures.push(format!("dichotomy at {}", ring.format(&x)));
        }
    }

    let mut oracle_checked = Value::Null;
    if let RingSpec::Modular(_) = spec {
        let (zn, oracle) = small_modulus(spec)?;
        let n = oracle.modulus();
        let base_residues: Vec<u64> = element_list(&zn, &params.base)?.iter().map(residue).collect();
        let expected = oracle.maximal_ideal(&base_residues);
        let chain = MaximalIdeal::new(zn.clone(), krullkit::Enumeration::Canonical, element_list(&zn, &params.base)?)?;
        for x in 0..n {
            if chain.contains(&zn.elem(x))? != expected[x as usize] {
                failures.push(format!("Z/{n}: oracle disagrees at {x}"));
            }
        }
        for _ in 0..params.samples {
            let len = rng.gen_range(0..=3);
            let gens: Vec<u64> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let elems: Vec<ModInt> = gens.iter().map(|&g| zn.elem(g)).collect();
            for x in 0..n {
                let lib = zn.membership_coefficients(&zn.elem(x), &elems)?.is_some();
                if lib != oracle.membership(x, &gens) {
                    failures.push(format!("Z/{n}: membership of {x} in {gens:?}"));
                }
            }
        }
        oracle_checked = json!(n);
    }

    let passed = failures.is_empty();
    let inputs = json!({
        "suite": "oracle-equivalence",
        "ring": spec.to_string(),
        "n": params.count,
        "base": base.iter().map(|b| ring.format(b)).collect::<Vec<_>>(),
        "samples": params.samples,
        "seed": params.seed,
    });
    let result = json!({
        "route_indices": indices,
        "dichotomy_samples": params.samples,
        "oracle_elements": oracle_checked,
        "failures": failures,
        "passed": passed,
    });
    Ok(Outcome { inputs, result, passed })
}
