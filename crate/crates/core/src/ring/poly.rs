//! Univariate polynomials.
//!
//! [`Poly`] is a dense coefficient vector (constant term first, no trailing
//! zeros). The free functions work over any [`Ring`]; division needs an
//! invertible leading coefficient. [`PolyRing`] is `K[X]` over a finite field
//! as an enumerated Euclidean domain.

use super::euclid::{self, EuclideanDomain};
use super::{Field, FiniteField, Localizable, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    /// Builds a polynomial, dropping trailing zero coefficients.
    pub fn new<R: Ring<Elem = E>>(ring: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant<R: Ring<Elem = E>>(ring: &R, c: E) -> Self {
        Poly::new(ring, vec![c])
    }

    pub fn monomial<R: Ring<Elem = E>>(ring: &R, c: E, degree: usize) -> Self {
        let mut coeffs = vec![ring.zero(); degree];
        coeffs.push(c);
        Poly::new(ring, coeffs)
    }

    /// `X - c`.
    pub fn linear<R: Ring<Elem = E>>(ring: &R, c: &E) -> Self {
        Poly::new(ring, vec![ring.neg(c), ring.one()])
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff<R: Ring<Elem = E>>(&self, ring: &R, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn map<R: Ring>(&self, target: &R, f: impl Fn(&E) -> R::Elem) -> Poly<R::Elem> {
        Poly::new(target, self.coeffs.iter().map(f).collect())
    }
}

pub fn add<R: Ring>(ring: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
    let n = f.coeffs.len().max(g.coeffs.len());
    let coeffs = (0..n)
        .map(|i| ring.add(&f.coeff(ring, i), &g.coeff(ring, i)))
        .collect();
    Poly::new(ring, coeffs)
}

pub fn neg<R: Ring>(ring: &R, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    Poly::new(ring, f.coeffs.iter().map(|c| ring.neg(c)).collect())
}

pub fn sub<R: Ring>(ring: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
    add(ring, f, &neg(ring, g))
}

pub fn mul<R: Ring>(ring: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    let mut coeffs = vec![ring.zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, a) in f.coeffs.iter().enumerate() {
        for (j, b) in g.coeffs.iter().enumerate() {
            coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
        }
    }
    Poly::new(ring, coeffs)
}

pub fn scale<R: Ring>(ring: &R, c: &R::Elem, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    Poly::new(ring, f.coeffs.iter().map(|a| ring.mul(c, a)).collect())
}

pub fn pow<R: Ring>(ring: &R, f: &Poly<R::Elem>, k: u32) -> Poly<R::Elem> {
    (0..k).fold(Poly::constant(ring, ring.one()), |acc, _| mul(ring, &acc, f))
}

pub fn eval<R: Ring>(ring: &R, f: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
    f.coeffs
        .iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

pub fn equal<R: Ring>(ring: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> bool {
    sub(ring, f, g).is_zero()
}

/// `f = q·g + r` with `deg r < deg g`.
pub fn div_rem<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
    let lead = g.leading().ok_or(Error::DivisionByZeroPoly)?;
    let lead_inv = ring.is_unit(lead)?.ok_or(Error::DivisionByZeroPoly)?;
    let dg = g.coeffs.len() - 1;
    let mut rem = f.coeffs.clone();
    if rem.len() <= dg {
        return Ok((Poly::zero(), f.clone()));
    }
    let mut quot = vec![ring.zero(); rem.len() - dg];
    for k in (0..quot.len()).rev() {
        let c = ring.mul(&rem[k + dg], &lead_inv);
        if !ring.is_zero(&c) {
            for (j, b) in g.coeffs.iter().enumerate() {
                rem[k + j] = ring.sub(&rem[k + j], &ring.mul(&c, b));
            }
        }
        quot[k] = c;
    }
    rem.truncate(dg);
    Ok((Poly::new(ring, quot), Poly::new(ring, rem)))
}

pub fn monic<F: Field>(field: &F, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    match f.leading() {
        Some(lead) => scale(field, &field.inv(lead).expect("nonzero leading coefficient"), f),
        None => Poly::zero(),
    }
}

/// Monic gcd over a field.
pub fn gcd<F: Field>(field: &F, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = div_rem(field, &a, &b).expect("nonzero divisor over a field").1;
        a = std::mem::replace(&mut b, r);
    }
    monic(field, &a)
}

pub fn format<R: Ring>(ring: &R, f: &Poly<R::Elem>, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in f.coeffs.iter().enumerate().rev() {
        if ring.is_zero(c) {
            continue;
        }
        let cs = ring.format(c);
        let compound = cs.chars().skip(1).any(|ch| matches!(ch, '+' | '-' | '*'));
        let term = match d {
            0 => cs,
            _ => {
                let power = if d == 1 { var.to_string() } else { format!("{var}^{d}") };
                if ring.is_one(c) {
                    power
                } else if compound {
                    format!("({cs})*{power}")
                } else {
                    format!("{cs}*{power}")
                }
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

/// Parses `3*X^2+X+4`, `X-1`, `-2*X^3`, … with coefficients read by
/// `ring.parse`.
pub fn parse<R: Ring>(ring: &R, s: &str, var: char) -> Result<Poly<R::Elem>> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        if (ch == '+' || ch == '-') && i > start && !text[..i].ends_with('^') {
            terms.push(&text[start..i]);
            start = i;
        }
    }
    terms.push(&text[start..]);
    let mut acc = Poly::zero();
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        let monomial = match body.find(var) {
            None => Poly::constant(ring, ring.parse(body)?),
            Some(pos) => {
                let coeff_text = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                let coeff = if coeff_text.is_empty() {
                    ring.one()
                } else {
                    ring.parse(coeff_text)?
                };
                let rest = &body[pos + var.len_utf8()..];
                let degree = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?
                };
                Poly::monomial(ring, coeff, degree)
            }
        };
        acc = if negative { sub(ring, &acc, &monomial) } else { add(ring, &acc, &monomial) };
    }
    Ok(acc)
}

/// `K[X]` over a finite field `K`.
///
/// Enumerated degree-major, then coefficient-lexicographically: index `i`
/// written in base `|K|` lists the coefficient digits, constant term first.
/// Over `GF(2)` this gives `0, 1, X, X+1, X^2, …`.
#[derive(Clone, Debug)]
pub struct PolyRing<F> {
    field: F,
}

impl<F: FiniteField> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn x(&self) -> Poly<F::Elem> {
        Poly::monomial(&self.field, self.field.one(), 1)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        Poly::constant(&self.field, c)
    }

    pub fn poly(&self, coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        Poly::new(&self.field, coeffs)
    }

    /// Number of polynomials of degree `< d`, i.e. the first index of degree `d`.
    pub fn count_below_degree(&self, d: usize) -> u64 {
        self.field.order().pow(d as u32)
    }

    /// All monic polynomials of the given degree, in enumeration order.
    pub fn monic_of_degree(&self, d: usize) -> impl Iterator<Item = Poly<F::Elem>> + '_ {
        let q = self.field.order();
        (0..q.pow(d as u32)).map(move |low| {
            let mut p = self.enumerate(low).expect("total enumeration");
            p.coeffs.resize(d, self.field.zero());
            p.coeffs.push(self.field.one());
            p
        })
    }
}

impl<F: FiniteField> Ring for PolyRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.field.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        add(&self.field, a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        neg(&self.field, a)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        sub(&self.field, a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mul(&self.field, a, b)
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        equal(&self.field, a, b)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn check(&self, x: &Self::Elem) -> Result<()> {
        if x.leading().is_some_and(|c| self.field.is_zero(c)) {
            return Err(Error::ForeignElement(self.spec()));
        }
        for c in &x.coeffs {
            self.field.check(c).map_err(|_| Error::ForeignElement(self.spec()))?;
        }
        Ok(())
    }

    fn enumerate(&self, mut i: u64) -> Option<Self::Elem> {
        let q = self.field.order();
        let mut coeffs = Vec::new();
        while i > 0 {
            coeffs.push(self.field.element(i % q));
            i /= q;
        }
        Some(self.poly(coeffs))
    }

    fn index_of(&self, x: &Self::Elem) -> u64 {
        let q = self.field.order();
        x.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * q + self.field.digit(c))
    }

    fn membership_coefficients(
        &self,
        x: &Self::Elem,
        gens: &[Self::Elem],
    ) -> Result<Option<Vec<Self::Elem>>> {
        Ok(euclid::membership(self, x, gens))
    }

    fn compress(&self, gens: &[Self::Elem]) -> Vec<Self::Elem> {
        vec![self.gcd_all(gens)]
    }

    fn is_unit(&self, x: &Self::Elem) -> Result<Option<Self::Elem>> {
        Ok(match x.degree() {
            Some(0) => self.field.inv(&x.coeffs[0]).map(|c| self.constant(c)),
            _ => None,
        })
    }

    fn is_nilpotent(&self, x: &Self::Elem) -> Result<Option<u32>> {
        Ok(x.is_zero().then_some(1))
    }

    fn spec(&self) -> String {
        format!("{}[X]", self.field.spec())
    }

    fn format(&self, x: &Self::Elem) -> String {
        format(&self.field, x, "X")
    }

    fn parse(&self, s: &str) -> Result<Self::Elem> {
        parse(&self.field, s, 'X')
    }
}

impl<F: FiniteField> EuclideanDomain for PolyRing<F> {
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        div_rem(&self.field, a, b).expect("nonzero divisor over a field")
    }

    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.leading() {
            Some(lead) => self.constant(self.field.inv(lead).expect("nonzero leading coefficient")),
            None => self.one(),
        }
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        gcd(&self.field, a, b)
    }
}

impl<F: FiniteField> Localizable for PolyRing<F> {
    fn is_domain(&self) -> bool {
        true
    }

    fn saturated_membership(
        &self,
        x: &Self::Elem,
        y: &Self::Elem,
        gens: &[Self::Elem],
    ) -> Result<Option<(u32, Vec<Self::Elem>)>> {
        Ok(euclid::saturated_membership(self, x, y, gens))
    }

    fn principal(&self, gens: &[Self::Elem]) -> Self::Elem {
        self.gcd_all(gens)
    }

    fn nilpotency_bound(&self) -> u32 {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn product_over_gf5() {
        let r = PolyRing::new(gf(5));
        let f = r.parse("X+2").unwrap();
        let g = r.parse("X+3").unwrap();
        assert!(r.eq(&r.mul(&f, &g), &r.parse("X^2+1").unwrap()));
        assert_eq!(r.format(&r.mul(&f, &g)), "X^2+1");
    }

    #[test]
    fn enumeration_over_gf2() {
        let r = PolyRing::new(gf(2));
        let first: Vec<String> = (0..4).map(|i| r.format(&r.enumerate(i).unwrap())).collect();
        assert_eq!(first, vec!["0", "1", "X", "X+1"]);
        for i in 0..300 {
            assert_eq!(r.index_of(&r.enumerate(i).unwrap()), i);
        }
    }

    #[test]
    fn gcd_examples_over_gf5() {
        let r = PolyRing::new(gf(5));
        let f = r.parse("X^2+1").unwrap();
        assert_eq!(r.format(&r.gcd(&f, &r.parse("X+2").unwrap())), "X+2");
        assert_eq!(r.format(&r.gcd(&f, &r.parse("X+1").unwrap())), "1");
    }

    #[test]
    fn division_by_unit_and_by_zero() {
        let k = gf(5);
        let r = PolyRing::new(k.clone());
        let f = r.parse("3*X^2+X+4").unwrap();
        let (q, rem) = div_rem(&k, &f, &r.one()).unwrap();
        assert!(r.eq(&q, &f));
        assert!(rem.is_zero());
        assert_eq!(div_rem(&k, &f, &Poly::zero()), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn format_parse_round_trip() {
        let r = PolyRing::new(gf(7));
        for i in 0..800 {
            let p = r.enumerate(i).unwrap();
            assert!(r.eq(&r.parse(&r.format(&p)).unwrap(), &p));
        }
        assert_eq!(r.format(&r.parse("X-1").unwrap()), "X+6");
        assert_eq!(r.format(&r.parse("-2*X^3 + X").unwrap()), "5*X^3+X");
        assert!(r.parse("2*Y").is_err());
    }

    #[test]
    fn div_rem_over_zmod_needs_unit_leading_coefficient() {
        let z4 = crate::ring::Zmod::new(4).unwrap();
        let f = Poly::new(&z4, vec![z4.elem(1), z4.elem(2)]);
        let g = Poly::new(&z4, vec![z4.elem(1), z4.elem(2)]);
        assert_eq!(div_rem(&z4, &f, &g), Err(Error::DivisionByZeroPoly));
        let h = Poly::new(&z4, vec![z4.elem(1), z4.elem(3)]);
        let (q, r) = div_rem(&z4, &f, &h).unwrap();
        assert!(equal(&z4, &add(&z4, &mul(&z4, &q, &h), &r), &f));
    }
}
