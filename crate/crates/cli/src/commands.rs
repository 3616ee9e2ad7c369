use serde_json::{json, Value};

use krullkit::field::{splitting_field, SplitBounds};
use krullkit::maximal::{Admission, WitnessRecord};
use krullkit::parse::{element_list, EnumSpec, RingSpec};
use krullkit::ring::{poly, Localizable, PrimeField, Ring};
use krullkit::spectrum::{jacobson_escape, krull_witness, PrimeReport};
use krullkit::{Error, MaximalIdeal, Result};

/// Binds `$r` to the ring described by `$spec` and evaluates `$body` once per
/// ring type.
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, |$r:ident| $body:expr) => {{
        use krullkit::parse::RingSpec as S;
        use krullkit::ring::{Integers, Localization, PolyRing, PrimeField, Zmod};
        match $spec {
            S::Integers => {
                let $r = Integers::new();
                $body
            }
            S::Modular(n) => {
                let $r = Zmod::new(n.clone())?;
                $body
            }
            S::PrimeField(p) => {
                let $r = PrimeField::new(p.clone())?;
                $body
            }
            S::PolyOverPrime(p) => {
                let $r = PolyRing::new(PrimeField::new(p.clone())?);
                $body
            }
            S::Localized(x) => {
                let $r = Localization::new(Integers::new(), x.clone())?;
                $body
            }
        }
    }};
}

pub fn maximal(spec: &RingSpec, enumeration: Option<&str>, count: u64, base: &str) -> Result<(Value, Value)> {
    let enum_spec: EnumSpec = enumeration.unwrap_or(spec.default_enumeration()).parse()?;
    with_ring!(spec, |ring| maximal_in(ring, spec, &enum_spec, count, base))
}

fn maximal_in<R: Ring>(ring: R, spec: &RingSpec, enum_spec: &EnumSpec, count: u64, base: &str) -> Result<(Value, Value)> {
    let base = element_list(&ring, base)?;
    let enumeration = enum_spec.build(&ring, spec)?;
    let m = MaximalIdeal::new(ring.clone(), enumeration, base.clone())?;
    let defined = (0..count).take_while(|&i| m.element(i).is_some()).count() as u64;
    let admissions = m.admissions(defined)?;
    let mut entries = Vec::new();
    let mut members = Vec::new();
    for (i, admission) in admissions.iter().enumerate() {
        let x = m.element(i as u64).expect("defined index");
        let member = m.contains(&x)?;
        if member {
            members.push(ring.format(&x));
        }
        entries.push(json!({
            "index": i,
            "element": ring.format(&x),
            "admitted": *admission == Admission::Admitted,
            "member": member,
            "witness": m.witness_record(&x)?,
        }));
    }
    let generators: Vec<String> = m.stage_generators(defined)?.iter().map(|g| ring.format(g)).collect();
    let inputs = json!({
        "ring": spec.to_string(),
        "enumeration": enum_spec.to_string(),
        "n": count,
        "base": base.iter().map(|b| ring.format(b)).collect::<Vec<_>>(),
    });
    let result = json!({
        "base_improper": m.is_base_improper(),
        "entries": entries,
        "members": members,
        "stage_generators": generators,
    });
    Ok((inputs, result))
}

pub fn split(spec: &RingSpec, poly_text: &str) -> Result<(Value, Value)> {
    let RingSpec::PrimeField(p) = spec else {
        return Err(Error::Unsupported(format!("split works over GF(p), not {spec}")));
    };
    let field = PrimeField::new(p.clone())?;
    let f = poly::parse(&field, poly_text, 'X')?;
    let tower = splitting_field(&field, &f, SplitBounds::default())?;
    let inputs = json!({ "field": spec.to_string(), "poly": poly::format(&field, &f, "X") });
    Ok((inputs, serde_json::to_value(tower.report()).expect("tower report serializes")))
}

pub fn prime(spec: &RingSpec, x: &str, samples: u64) -> Result<(Value, Value)> {
    use krullkit::ring::{Integers, PolyRing, Zmod};
    match spec {
        RingSpec::Integers => prime_in(Integers::new(), spec, x, samples),
        RingSpec::Modular(n) => prime_in(Zmod::new(n.clone())?, spec, x, samples),
        RingSpec::PrimeField(p) => prime_in(PrimeField::new(p.clone())?, spec, x, samples),
        RingSpec::PolyOverPrime(p) => prime_in(PolyRing::new(PrimeField::new(p.clone())?), spec, x, samples),
        RingSpec::Localized(_) => Err(Error::Unsupported(format!("prime ideals of {spec}"))),
    }
}

fn prime_in<A: Localizable>(ring: A, spec: &RingSpec, x: &str, samples: u64) -> Result<(Value, Value)> {
    let x = ring.parse(x)?;
    let sample: Vec<A::Elem> = (0..samples).map_while(|i| ring.enumerate(i)).collect();
    let p = krull_witness(ring.clone(), x.clone())?;
    let report = PrimeReport::new(&p, &sample)?;
    let inputs = json!({ "ring": spec.to_string(), "x": ring.format(&x), "samples": samples });
    let mut result = serde_json::to_value(report).expect("prime report serializes");
    result["checks"] = json!({
        "avoids_x": !p.contains(&x)?,
        "proper": p.is_proper()?,
        "prime_on_samples": p.is_prime_on(&sample)?,
    });
    Ok((inputs, result))
}

pub fn jacobson(spec: &RingSpec, x: &str, y: &str, samples: u64) -> Result<(Value, Value)> {
    with_ring!(spec, |ring| jacobson_in(ring, spec, x, y, samples))
}

fn jacobson_in<R: Ring>(ring: R, spec: &RingSpec, x: &str, y: &str, samples: u64) -> Result<(Value, Value)> {
    let (x, y) = (ring.parse(x)?, ring.parse(y)?);
    let m = jacobson_escape(ring.clone(), &x, &y)?;
    let record: WitnessRecord = m.witness_record(&x)?;
    let mut members = Vec::new();
    for i in 0..samples {
        let Some(a) = ring.enumerate(i) else { break };
        if m.contains(&a)? {
            members.push(ring.format(&a));
        }
    }
    let generators: Vec<String> =
        m.stage_generators(m.processed())?.iter().map(|g| ring.format(g)).collect();
    let inputs = json!({ "ring": spec.to_string(), "x": ring.format(&x), "y": ring.format(&y) });
    let result = json!({
        "one_minus_xy": ring.format(&m.base()[0]),
        "stage_generators": generators,
        "avoids_x": !m.contains(&x)?,
        "witness": record,
        "sample_members": members,
    });
    Ok((inputs, result))
}
