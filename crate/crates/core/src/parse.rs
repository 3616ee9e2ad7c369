//! Textual ring and enumeration specifications.
//!
//! Ring specs: `Z`, `Z/<n>`, `GF(<p>)`, `GF(<p>)[X]`, `Z[1/<x>]`. Whitespace is
//! ignored and printing gives the canonical form, so parse-then-print
//! round-trips.
//!
//! Enumeration specs: `zigzag` (for `Z`), `identity` (for `Z/n`, `GF(p)`),
//! `canonical` (any ring), `shifted:<k>` (`x_k` first, then `x_0 … x_{k-1}`,
//! then the rest), `list:<a>,<b>,…` (an explicit prefix, then the canonical
//! enumeration; a trailing `...` is allowed and ignored).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    Modular(BigInt),
    PrimeField(BigInt),
    PolyOverPrime(BigInt),
    /// `Z[1/x]`.
    Localized(BigInt),
}

fn number(text: &str, what: &str) -> Result<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected an integer {what}, got {text:?}")));
    }
    text.parse().map_err(|_| Error::Parse(format!("bad integer {text:?}")))
}

fn prime(text: &str) -> Result<BigInt> {
    let p = number(text, "characteristic")?;
    if crate::ring::PrimeField::new(p.clone()).is_err() {
        return Err(Error::Unsupported(format!("GF({p}): {p} is not prime")));
    }
    Ok(p)
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Z" {
            return Ok(RingSpec::Integers);
        }
        if let Some(n) = t.strip_prefix("Z/") {
            let n = number(n, "modulus")?;
            if !n.is_positive() {
                return Err(Error::Unsupported(format!("Z/{n}: modulus must be positive")));
            }
            return Ok(RingSpec::Modular(n));
        }
        if let Some(x) = t.strip_prefix("Z[1/").and_then(|r| r.strip_suffix(']')) {
            return Ok(RingSpec::Localized(number(x, "to invert")?));
        }
        if let Some(rest) = t.strip_prefix("GF(") {
            if let Some(p) = rest.strip_suffix(")[X]") {
                return Ok(RingSpec::PolyOverPrime(prime(p)?));
            }
            if let Some(p) = rest.strip_suffix(')') {
                return Ok(RingSpec::PrimeField(prime(p)?));
            }
            return Err(Error::Parse(format!("malformed field spec {s:?}")));
        }
        Err(Error::Unsupported(format!("unknown ring {s:?}")))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Modular(n) => write!(f, "Z/{n}"),
            RingSpec::PrimeField(p) => write!(f, "GF({p})"),
            RingSpec::PolyOverPrime(p) => write!(f, "GF({p})[X]"),
            RingSpec::Localized(x) => write!(f, "Z[1/{x}]"),
        }
    }
}

impl RingSpec {
    /// Name of the default enumeration for this ring.
    pub fn default_enumeration(&self) -> &'static str {
        match self {
            RingSpec::Integers => "zigzag",
            RingSpec::Modular(_) | RingSpec::PrimeField(_) => "identity",
            RingSpec::PolyOverPrime(_) | RingSpec::Localized(_) => "canonical",
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, RingSpec::Modular(n) if n.is_one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumSpec {
    Zigzag,
    Identity,
    Canonical,
    Shifted(u64),
    List(Vec<String>),
}

impl FromStr for EnumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "zigzag" => return Ok(EnumSpec::Zigzag),
            "identity" => return Ok(EnumSpec::Identity),
            "canonical" => return Ok(EnumSpec::Canonical),
            _ => {}
        }
        if let Some(k) = t.strip_prefix("shifted:") {
            let k = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad shift in {s:?}")))?;
            return Ok(EnumSpec::Shifted(k));
        }
        if let Some(items) = t.strip_prefix("list:") {
            let mut items: Vec<String> = items.split(',').map(|i| i.trim().to_string()).collect();
            if items.last().is_some_and(|i| i == "...") {
                items.pop();
            }
            if items.iter().any(|i| i.is_empty() || i == "...") {
                return Err(Error::Parse(format!("empty list entry in {s:?}")));
            }
            return Ok(EnumSpec::List(items));
        }
        Err(Error::Parse(format!("unknown enumeration {s:?}")))
    }
}

impl fmt::Display for EnumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumSpec::Zigzag => write!(f, "zigzag"),
            EnumSpec::Identity => write!(f, "identity"),
            EnumSpec::Canonical => write!(f, "canonical"),
            EnumSpec::Shifted(k) => write!(f, "shifted:{k}"),
            EnumSpec::List(items) => write!(f, "list:{}", items.join(",")),
        }
    }
}

impl EnumSpec {
    /// The enumeration over `ring`; `zigzag` and `identity` are the canonical
    /// enumerations of `Z` and of finite modular rings and are rejected
    /// elsewhere.
    pub fn build<R: Ring>(&self, ring: &R, spec: &RingSpec) -> Result<Enumeration<R::Elem>> {
        let mismatch = |name: &str| {
            Error::Parse(format!("enumeration {name} does not apply to {spec}"))
        };
        match self {
            EnumSpec::Zigzag if *spec != RingSpec::Integers => Err(mismatch("zigzag")),
            EnumSpec::Identity
                if !matches!(spec, RingSpec::Modular(_) | RingSpec::PrimeField(_)) =>
            {
                Err(mismatch("identity"))
            }
            EnumSpec::Zigzag | EnumSpec::Identity | EnumSpec::Canonical => Ok(Enumeration::Canonical),
            EnumSpec::Shifted(k) => Ok(Enumeration::Shifted(*k)),
            EnumSpec::List(items) => Ok(Enumeration::Prefixed(
                items.iter().map(|i| ring.parse(i)).collect::<Result<_>>()?,
            )),
        }
    }
}

/// Splits a comma-separated element list (empty input gives no elements).
pub fn element_list<R: Ring>(ring: &R, s: &str) -> Result<Vec<R::Elem>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| ring.parse(t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    #[test]
    fn ring_specs_round_trip() {
        for s in ["Z", "Z/12", "GF(5)", "GF(7)[X]", "Z[1/6]", "Z[1/-2]"] {
            assert_eq!(s.parse::<RingSpec>().unwrap().to_string(), s);
        }
        assert_eq!(" Z / 4 ".parse::<RingSpec>().unwrap().to_string(), "Z/4");
    }

    #[test]
    fn ring_spec_errors() {
        assert!(matches!("Z/x".parse::<RingSpec>(), Err(Error::Parse(_))));
        assert!(matches!("GF(6)".parse::<RingSpec>(), Err(Error::Unsupported(_))));
        assert!(matches!("Q".parse::<RingSpec>(), Err(Error::Unsupported(_))));
        assert!(matches!("Z/0".parse::<RingSpec>(), Err(Error::Unsupported(_))));
        assert!(matches!("GF(5".parse::<RingSpec>(), Err(Error::Parse(_))));
    }

    #[test]
    fn enumeration_specs() {
        assert_eq!("shifted:3".parse::<EnumSpec>().unwrap(), EnumSpec::Shifted(3));
        let list: EnumSpec = "list:5,0,1,-1,...".parse().unwrap();
        assert_eq!(list.to_string(), "list:5,0,1,-1");
        let e = list.build(&Integers, &RingSpec::Integers).unwrap();
        assert_eq!(e.get(&Integers, 0), Some(BigInt::from(5)));
        assert!("list:1,,2".parse::<EnumSpec>().is_err());
        assert!(EnumSpec::Identity.build(&Integers, &RingSpec::Integers).is_err());
    }
}
