//! Finite field towers from Kronecker root adjunction.
//!
//! To adjoin a root of a monic `f` over a finite field `K`, build the maximal
//! ideal `m` of `K[X]` above `(f)` along the canonical enumeration. `K[X]` is a
//! principal ideal domain, so every stage of the chain is generated by one
//! polynomial `h_n = gcd(f, G_n)`, and the stage is final as soon as every
//! polynomial of lower degree has been processed: a proper factor of `h_n`
//! would have been admitted when it was reached. Then `K[X]/m = K[X]/(h)` and
//! the class of `X` is a root of `f`.

use std::sync::Arc;

use serde::Serialize;

use super::field_membership;
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::maximal::MaximalIdeal;
use crate::ring::poly::{self, Poly, PolyRing};
use crate::ring::{EuclideanDomain, Field, FiniteField, ModInt, PrimeField, Ring, RingId};

/// An element of some level of a tower. Extension elements are reduced
/// coefficient vectors over the level below, constant term first, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TowerElem {
    Prime(ModInt),
    Ext { level: RingId, coeffs: Vec<TowerElem> },
}

#[derive(Debug)]
struct Extension {
    base: TowerField,
    modulus: Poly<TowerElem>,
    id: RingId,
    order: u64,
    depth: usize,
}

#[derive(Debug)]
enum Level {
    Prime(PrimeField),
    Extension(Extension),
}

/// One level of a tower: a prime field, or `base[X]/(modulus)` for a monic
/// irreducible modulus over the level below.
#[derive(Clone, Debug)]
pub struct TowerField(Arc<Level>);

impl TowerField {
    pub fn prime(field: PrimeField) -> Self {
        TowerField(Arc::new(Level::Prime(field)))
    }

    /// `self[X]/(modulus)`. The modulus must be monic of degree at least 2;
    /// irreducibility is the caller's responsibility (see [`is_irreducible`]).
    pub fn extend(&self, modulus: Poly<TowerElem>) -> Result<TowerField> {
        for c in modulus.coeffs() {
            self.check(c)?;
        }
        let degree = modulus.degree().unwrap_or(0);
        if degree < 2 || !modulus.leading().is_some_and(|c| self.is_one(c)) {
            return Err(Error::PreconditionViolated(
                "extension modulus must be monic of degree at least 2".into(),
            ));
        }
        let order = self
            .order()
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::BoundExceeded("field order overflows u64".into()))?;
        Ok(TowerField(Arc::new(Level::Extension(Extension {
            base: self.clone(),
            modulus,
            id: RingId::fresh(),
            order,
            depth: self.depth() + 1,
        }))))
    }

    /// 0 for a prime field.
    pub fn depth(&self) -> usize {
        match &*self.0 {
            Level::Prime(_) => 0,
            Level::Extension(e) => e.depth,
        }
    }

    pub fn base(&self) -> Option<&TowerField> {
        match &*self.0 {
            Level::Prime(_) => None,
            Level::Extension(e) => Some(&e.base),
        }
    }

    pub fn modulus(&self) -> Option<&Poly<TowerElem>> {
        match &*self.0 {
            Level::Prime(_) => None,
            Level::Extension(e) => Some(&e.modulus),
        }
    }

    pub fn prime_field(&self) -> &PrimeField {
        match &*self.0 {
            Level::Prime(p) => p,
            Level::Extension(e) => e.base.prime_field(),
        }
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        match &*self.0 {
            Level::Prime(_) => 1,
            Level::Extension(e) => e.base.degree() * e.modulus.degree().unwrap_or(0),
        }
    }

    pub fn same_level(&self, other: &TowerField) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// The class of `X` in an extension level.
    pub fn generator(&self) -> Option<TowerElem> {
        match &*self.0 {
            Level::Prime(_) => None,
            Level::Extension(e) => Some(TowerElem::Ext {
                level: e.id,
                coeffs: vec![e.base.zero(), e.base.one()],
            }),
        }
    }

    pub fn from_prime(&self, x: ModInt) -> Result<TowerElem> {
        self.prime_field().check(&x)?;
        self.embed(&TowerElem::Prime(x))
    }

    /// Image of an element of this level or of any level below it.
    pub fn embed(&self, x: &TowerElem) -> Result<TowerElem> {
        if self.check(x).is_ok() {
            return Ok(x.clone());
        }
        match &*self.0 {
            Level::Prime(p) => Err(Error::ForeignElement(p.spec())),
            Level::Extension(e) => {
                let y = e.base.embed(x)?;
                Ok(self.from_base_poly(Poly::constant(&e.base, y)))
            }
        }
    }

    pub fn embed_poly(&self, f: &Poly<TowerElem>) -> Result<Poly<TowerElem>> {
        let coeffs = f.coeffs().iter().map(|c| self.embed(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(self, coeffs))
    }

    /// Coordinates over the prime field in the power basis of the tower,
    /// lowest level innermost; `degree()` entries.
    pub fn coordinates(&self, x: &TowerElem) -> Vec<u64> {
        match (&*self.0, x) {
            (Level::Prime(p), TowerElem::Prime(v)) => vec![p.digit(v)],
            (Level::Extension(e), TowerElem::Ext { coeffs, .. }) => {
                let d = e.modulus.degree().unwrap_or(0);
                (0..d)
                    .flat_map(|i| {
                        let c = coeffs.get(i).cloned().unwrap_or_else(|| e.base.zero());
                        e.base.coordinates(&c)
                    })
                    .collect()
            }
            _ => panic!("element does not belong to this level"),
        }
    }

    fn ext(&self) -> &Extension {
        match &*self.0 {
            Level::Extension(e) => e,
            Level::Prime(_) => unreachable!("prime level has no extension data"),
        }
    }

    fn from_base_poly(&self, p: Poly<TowerElem>) -> TowerElem {
        let e = self.ext();
        let r = if p.degree() >= e.modulus.degree() {
            poly::div_rem(&e.base, &p, &e.modulus)
                .expect("monic modulus")
                .1
        } else {
            p
        };
        TowerElem::Ext { level: e.id, coeffs: r.coeffs().to_vec() }
    }

    fn base_poly(&self, x: &TowerElem) -> Poly<TowerElem> {
        let e = self.ext();
        match x {
            TowerElem::Ext { level, coeffs } if *level == e.id => Poly::new(&e.base, coeffs.clone()),
            _ => panic!("element from a different tower level"),
        }
    }

    fn prime_elem<'a>(&self, x: &'a TowerElem) -> &'a ModInt {
        match x {
            TowerElem::Prime(v) => v,
            TowerElem::Ext { .. } => panic!("extension element used in a prime field"),
        }
    }

    fn lift2(
        &self,
        a: &TowerElem,
        b: &TowerElem,
        prime: impl Fn(&PrimeField, &ModInt, &ModInt) -> ModInt,
        ext: impl Fn(&TowerField, &Poly<TowerElem>, &Poly<TowerElem>) -> Poly<TowerElem>,
    ) -> TowerElem {
        match &*self.0 {
            Level::Prime(p) => TowerElem::Prime(prime(p, self.prime_elem(a), self.prime_elem(b))),
            Level::Extension(e) => {
                self.from_base_poly(ext(&e.base, &self.base_poly(a), &self.base_poly(b)))
            }
        }
    }
}

impl Ring for TowerField {
    type Elem = TowerElem;

    fn zero(&self) -> TowerElem {
        match &*self.0 {
            Level::Prime(p) => TowerElem::Prime(p.zero()),
            Level::Extension(e) => TowerElem::Ext { level: e.id, coeffs: Vec::new() },
        }
    }

    fn one(&self) -> TowerElem {
        match &*self.0 {
            Level::Prime(p) => TowerElem::Prime(p.one()),
            Level::Extension(e) => TowerElem::Ext { level: e.id, coeffs: vec![e.base.one()] },
        }
    }

    fn add(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        self.lift2(a, b, |p, x, y| p.add(x, y), poly::add)
    }

    fn neg(&self, a: &TowerElem) -> TowerElem {
        match &*self.0 {
            Level::Prime(p) => TowerElem::Prime(p.neg(self.prime_elem(a))),
            Level::Extension(e) => self.from_base_poly(poly::neg(&e.base, &self.base_poly(a))),
        }
    }

    fn sub(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        self.lift2(a, b, |p, x, y| p.sub(x, y), poly::sub)
    }

    fn mul(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        self.lift2(a, b, |p, x, y| p.mul(x, y), poly::mul)
    }

    fn eq(&self, a: &TowerElem, b: &TowerElem) -> bool {
        a == b
    }

    fn check(&self, x: &TowerElem) -> Result<()> {
        let ok = match (&*self.0, x) {
            (Level::Prime(p), TowerElem::Prime(v)) => p.check(v).is_ok(),
            (Level::Extension(e), TowerElem::Ext { level, coeffs }) => {
                *level == e.id
                    && coeffs.len() < e.modulus.coeffs().len()
                    && coeffs.last().is_none_or(|c| !e.base.is_zero(c))
                    && coeffs.iter().all(|c| e.base.check(c).is_ok())
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ForeignElement(self.spec()))
        }
    }

    fn enumerate(&self, i: u64) -> Option<TowerElem> {
        (i < self.order()).then(|| self.element(i))
    }

    fn index_of(&self, x: &TowerElem) -> u64 {
        self.digit(x)
    }

    fn finite_size(&self) -> Option<u64> {
        Some(self.order())
    }

    fn membership_coefficients(
        &self,
        x: &TowerElem,
        gens: &[TowerElem],
    ) -> Result<Option<Vec<TowerElem>>> {
        Ok(field_membership(self, x, gens))
    }

    fn is_unit(&self, x: &TowerElem) -> Result<Option<TowerElem>> {
        Ok(self.inv(x))
    }

    fn is_nilpotent(&self, x: &TowerElem) -> Result<Option<u32>> {
        Ok(if self.is_zero(x) { Some(1) } else { None })
    }

    fn spec(&self) -> String {
        match &*self.0 {
            Level::Prime(p) => p.spec(),
            Level::Extension(e) => format!(
                "{}[a{}]/({})",
                e.base.spec(),
                e.depth,
                poly::format(&e.base, &e.modulus, &format!("a{}", e.depth))
            ),
        }
    }

    /// Extension elements print as polynomials in `a1`, `a2`, … (one
    /// generator per level).
    fn format(&self, x: &TowerElem) -> String {
        match &*self.0 {
            Level::Prime(p) => p.format(self.prime_elem(x)),
            Level::Extension(e) => {
                poly::format(&e.base, &self.base_poly(x), &format!("a{}", e.depth))
            }
        }
    }

    fn parse(&self, s: &str) -> Result<TowerElem> {
        match &*self.0 {
            Level::Prime(p) => Ok(TowerElem::Prime(p.parse(s)?)),
            Level::Extension(_) => self.embed(&TowerElem::Prime(self.prime_field().parse(s)?)),
        }
    }
}

impl Field for TowerField {
    fn inv(&self, x: &TowerElem) -> Option<TowerElem> {
        match &*self.0 {
            Level::Prime(p) => p.inv(self.prime_elem(x)).map(TowerElem::Prime),
            Level::Extension(e) => {
                let a = self.base_poly(x);
                if a.is_zero() {
                    return None;
                }
                let (g, s, _) = PolyRing::new(e.base.clone()).xgcd(&a, &e.modulus);
                debug_assert!(g.degree() == Some(0), "modulus is irreducible");
                Some(self.from_base_poly(s))
            }
        }
    }
}

impl FiniteField for TowerField {
    fn order(&self) -> u64 {
        match &*self.0 {
            Level::Prime(p) => p.order(),
            Level::Extension(e) => e.order,
        }
    }

    fn element(&self, digit: u64) -> TowerElem {
        match &*self.0 {
            Level::Prime(p) => TowerElem::Prime(p.element(digit)),
            Level::Extension(e) => {
                let q = e.base.order();
                let mut rest = digit;
                let mut coeffs = Vec::new();
                while rest > 0 {
                    coeffs.push(e.base.element(rest % q));
                    rest /= q;
                }
                self.from_base_poly(Poly::new(&e.base, coeffs))
            }
        }
    }

    fn digit(&self, x: &TowerElem) -> u64 {
        match &*self.0 {
            Level::Prime(p) => p.digit(self.prime_elem(x)),
            Level::Extension(e) => {
                let q = e.base.order();
                self.base_poly(x)
                    .coeffs()
                    .iter()
                    .rev()
                    .fold(0, |acc, c| acc * q + e.base.digit(c))
            }
        }
    }
}

/// Irreducibility by trial division by every monic polynomial of degree
/// `1..=deg f / 2`.
pub fn is_irreducible<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    let Some(d) = f.degree() else { return false };
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|k| {
        ring.monic_of_degree(k)
            .all(|p| !poly::div_rem(ring.field(), f, &p).expect("monic divisor").1.is_zero())
    })
}

/// The monic generator `h` of a maximal ideal of `K[X]` built above a nonzero
/// base ideal along the canonical enumeration.
///
/// Walks the chain, recomputing the monic generator `h_n` of `(G_n ∪ base)`
/// after each admission, and stops once `h_n` is irreducible (then `(h_n)` is
/// already maximal) or `n ≥ |K|^{deg h_n}`. The result is checked to divide
/// every base generator and to be irreducible by trial division.
pub fn stabilized_generator<F: FiniteField>(m: &MaximalIdeal<PolyRing<F>>) -> Result<Poly<F::Elem>> {
    let ring = m.ring();
    if !matches!(m.enumeration(), Enumeration::Canonical) {
        return Err(Error::PreconditionViolated(
            "stabilized generator needs the canonical enumeration".into(),
        ));
    }
    if m.base().iter().all(|g| g.is_zero()) {
        return Err(Error::PreconditionViolated("base ideal must contain a nonzero polynomial".into()));
    }
    if m.is_base_improper() {
        return Err(Error::TrivialQuotient);
    }
    let generator = |n| -> Result<Poly<F::Elem>> {
        Ok(poly::monic(ring.field(), &ring.gcd_all(&m.stage_generators(n)?)))
    };
    let mut n = 0u64;
    let mut h = generator(0)?;
    let mut irreducible = is_irreducible(ring, &h);
    loop {
        let degree = h.degree().expect("nonzero base ideal");
        let bound = ring
            .field()
            .order()
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::BoundExceeded("enumeration bound overflows u64".into()))?;
        if irreducible || n >= bound {
            break;
        }
        if m.contains_index(n)? {
            h = generator(n + 1)?;
            irreducible = is_irreducible(ring, &h);
        }
        n += 1;
    }
    for g in m.base() {
        if !ring.divides(&h, g) {
            return Err(Error::Invariant("stabilized generator does not divide the base".into()));
        }
    }
    if !is_irreducible(ring, &h) {
        return Err(Error::Invariant("stabilized generator is reducible".into()));
    }
    Ok(h)
}

fn check_monic(field: &TowerField, f: &Poly<TowerElem>) -> Result<()> {
    for c in f.coeffs() {
        field.check(c)?;
    }
    match f.degree() {
        Some(d) if d >= 1 && f.leading().is_some_and(|c| field.is_one(c)) => Ok(()),
        _ => Err(Error::PreconditionViolated("polynomial must be monic and nonconstant".into())),
    }
}

/// Adjoins a root of `f` to `field`: returns `K' = K[X]/(h)`, the class of
/// `X` in `K'`, and `h`. When `h` is linear, `K' = K` and the root is `-h(0)`.
pub fn adjoin_root(
    field: &TowerField,
    f: &Poly<TowerElem>,
) -> Result<(TowerField, TowerElem, Poly<TowerElem>)> {
    check_monic(field, f)?;
    let ideal = MaximalIdeal::new(PolyRing::new(field.clone()), Enumeration::Canonical, vec![f.clone()])?;
    let h = stabilized_generator(&ideal)?;
    let (top, root) = if h.degree() == Some(1) {
        (field.clone(), field.neg(&h.coeff(field, 0)))
    } else {
        let top = field.extend(h.clone())?;
        let root = top.generator().expect("extension level");
        (top, root)
    };
    let lifted = top.embed_poly(f)?;
    if !top.is_zero(&poly::eval(&top, &lifted, &root)) {
        return Err(Error::Invariant("adjoined element is not a root".into()));
    }
    Ok((top, root, h))
}

/// Limits on splitting-field inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitBounds {
    pub max_degree: usize,
    pub max_prime: u64,
}

impl Default for SplitBounds {
    fn default() -> Self {
        SplitBounds { max_degree: 4, max_prime: 7 }
    }
}

/// One adjunction step: the field after the step, the root found, and the
/// stabilized modulus over the field before it.
#[derive(Clone, Debug)]
pub struct TowerStep {
    pub field: TowerField,
    pub root: TowerElem,
    pub modulus: Poly<TowerElem>,
    /// Field the modulus lives over.
    pub below: TowerField,
}

/// A splitting field of `f` over a prime field, with the roots of `f`.
#[derive(Clone, Debug)]
pub struct FieldTower {
    ground: TowerField,
    target: Poly<TowerElem>,
    steps: Vec<TowerStep>,
    roots: Vec<TowerElem>,
}

impl FieldTower {
    pub fn ground(&self) -> &TowerField {
        &self.ground
    }

    pub fn top(&self) -> &TowerField {
        self.steps.last().map_or(&self.ground, |s| &s.field)
    }

    pub fn steps(&self) -> &[TowerStep] {
        &self.steps
    }

    /// Roots in the top field, with multiplicity.
    pub fn roots(&self) -> &[TowerElem] {
        &self.roots
    }

    /// The split polynomial, over the ground field.
    pub fn target(&self) -> &Poly<TowerElem> {
        &self.target
    }

    /// Product of the modulus degrees, i.e. `[top : ground]`.
    pub fn degree(&self) -> usize {
        self.steps.iter().map(|s| s.modulus.degree().unwrap_or(0)).product()
    }

    /// `Π (X − r_i)` in the top field.
    pub fn root_product(&self) -> Poly<TowerElem> {
        let top = self.top();
        self.roots.iter().fold(Poly::constant(top, top.one()), |acc, r| {
            poly::mul(top, &acc, &Poly::linear(top, r))
        })
    }

    /// `Π (X − r_i) = f`, coefficient by coefficient in the top field.
    pub fn reconstruction_holds(&self) -> bool {
        let top = self.top();
        let lifted = top.embed_poly(&self.target).expect("target lies in the ground field");
        let product = self.root_product();
        let len = lifted.coeffs().len().max(product.coeffs().len());
        (0..len).all(|i| top.eq(&lifted.coeff(top, i), &product.coeff(top, i)))
    }

    pub fn report(&self) -> TowerReport {
        let top = self.top();
        TowerReport {
            field: self.ground.spec(),
            polynomial: poly::format(&self.ground, &self.target, "X"),
            degree: self.degree(),
            levels: self
                .steps
                .iter()
                .map(|s| LevelReport {
                    modulus: poly::format(&s.below, &s.modulus, "X"),
                    degree: s.modulus.degree().unwrap_or(0),
                })
                .collect(),
            roots: self.roots.iter().map(|r| top.coordinates(r)).collect(),
            roots_display: self.roots.iter().map(|r| top.format(r)).collect(),
            reconstruction: self.reconstruction_holds(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub modulus: String,
    pub degree: usize,
}

/// Serialized tower. Roots are coordinate vectors over the prime field in the
/// power basis of the top level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub field: String,
    pub polynomial: String,
    pub degree: usize,
    pub levels: Vec<LevelReport>,
    pub roots: Vec<Vec<u64>>,
    pub roots_display: Vec<String>,
    pub reconstruction: bool,
}

/// Splits a monic `f` over `GF(p)` by repeatedly adjoining a root and
/// dividing it out.
pub fn splitting_field(
    field: &PrimeField,
    f: &Poly<ModInt>,
    bounds: SplitBounds,
) -> Result<FieldTower> {
    let p = field.order();
    let degree = f.degree().unwrap_or(0);
    if p > bounds.max_prime {
        return Err(Error::BoundExceeded(format!("p = {p} exceeds {}", bounds.max_prime)));
    }
    if degree > bounds.max_degree {
        return Err(Error::BoundExceeded(format!(
            "degree {degree} exceeds {}",
            bounds.max_degree
        )));
    }
    let ground = TowerField::prime(field.clone());
    let target = Poly::new(
        &ground,
        f.coeffs()
            .iter()
            .map(|c| ground.from_prime(c.clone()))
            .collect::<Result<Vec<_>>>()?,
    );
    check_monic(&ground, &target)?;
    let mut current = ground.clone();
    let mut remaining = target.clone();
    let mut steps = Vec::new();
    let mut roots: Vec<TowerElem> = Vec::new();
    while remaining.degree().unwrap_or(0) >= 1 {
        let (next, root, modulus) = adjoin_root(&current, &remaining)?;
        roots = roots.iter().map(|r| next.embed(r)).collect::<Result<_>>()?;
        let lifted = next.embed_poly(&remaining)?;
        let (quotient, rest) = poly::div_rem(&next, &lifted, &Poly::linear(&next, &root))?;
        if !rest.is_zero() {
            return Err(Error::Invariant("root does not divide out".into()));
        }
        roots.push(root.clone());
        steps.push(TowerStep { field: next.clone(), root, modulus, below: current });
        current = next;
        remaining = quotient;
    }
    let tower = FieldTower { ground, target, steps, roots };
    if !tower.reconstruction_holds() {
        return Err(Error::Invariant("product of linear factors differs from f".into()));
    }
    Ok(tower)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly_over(field: &PrimeField, s: &str) -> Poly<ModInt> {
        poly::parse(field, s, 'X').unwrap()
    }

    fn tower_poly(k: &TowerField, s: &str) -> Poly<TowerElem> {
        poly::parse(k, s, 'X').unwrap()
    }

    #[test]
    fn stabilized_generator_examples() {
        let k = TowerField::prime(gf(5));
        let ring = PolyRing::new(k.clone());
        for (f, h) in [("X^2+1", "X+2"), ("X^2+2", "X^2+2")] {
            let m = MaximalIdeal::new(ring.clone(), Enumeration::Canonical, vec![tower_poly(&k, f)])
                .unwrap();
            let got = stabilized_generator(&m).unwrap();
            assert_eq!(poly::format(&k, &got, "X"), h);
        }
        let k2 = TowerField::prime(gf(2));
        let m = MaximalIdeal::new(
            PolyRing::new(k2.clone()),
            Enumeration::Canonical,
            vec![tower_poly(&k2, "X^2+X+1")],
        )
        .unwrap();
        assert_eq!(poly::format(&k2, &stabilized_generator(&m).unwrap(), "X"), "X^2+X+1");
    }

    #[test]
    fn adjoin_root_linear_and_quadratic() {
        let k = TowerField::prime(gf(5));
        let (top, r, _) = adjoin_root(&k, &tower_poly(&k, "X^2+1")).unwrap();
        assert!(top.same_level(&k));
        assert_eq!(k.format(&r), "3");

        let (top, r, _) = adjoin_root(&k, &tower_poly(&k, "X-4")).unwrap();
        assert!(top.same_level(&k));
        assert_eq!(k.format(&r), "4");

        let k2 = TowerField::prime(gf(2));
        let (gf4, r, h) = adjoin_root(&k2, &tower_poly(&k2, "X^2+X+1")).unwrap();
        assert_eq!(h.degree(), Some(2));
        assert_eq!(gf4.order(), 4);
        let lhs = gf4.mul(&r, &r);
        let rhs = gf4.add(&r, &gf4.one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_four_field_is_a_field() {
        let k2 = TowerField::prime(gf(2));
        let (gf4, _, _) = adjoin_root(&k2, &tower_poly(&k2, "X^2+X+1")).unwrap();
        let elems: Vec<_> = (0..gf4.order()).map(|i| gf4.element(i)).collect();
        for (i, x) in elems.iter().enumerate() {
            assert_eq!(gf4.digit(x), i as u64);
            if !gf4.is_zero(x) {
                let y = gf4.inv(x).unwrap();
                assert!(gf4.is_one(&gf4.mul(x, &y)));
            }
        }
        assert_eq!(gf4.format(&gf4.generator().unwrap()), "a1");
    }

    #[test]
    fn splitting_field_examples() {
        let f5 = gf(5);
        let t = splitting_field(&f5, &poly_over(&f5, "X^2+1"), SplitBounds::default()).unwrap();
        assert_eq!(t.degree(), 1);
        let mut roots: Vec<_> = t.roots().iter().map(|r| t.top().format(r)).collect();
        roots.sort();
        assert_eq!(roots, vec!["2", "3"]);

        let f2 = gf(2);
        let t = splitting_field(&f2, &poly_over(&f2, "X^2+X+1"), SplitBounds::default()).unwrap();
        assert_eq!(t.degree(), 2);
        assert_eq!(t.roots().len(), 2);
        assert!(t.reconstruction_holds());

        let f3 = gf(3);
        let t = splitting_field(&f3, &poly_over(&f3, "X^2+X+1"), SplitBounds::default()).unwrap();
        assert_eq!(t.degree(), 1);
        let roots: Vec<_> = t.roots().iter().map(|r| t.top().format(r)).collect();
        assert_eq!(roots, vec!["1", "1"]);
    }

    #[test]
    fn splitting_field_bounds() {
        let f11 = gf(11);
        let err = splitting_field(&f11, &poly_over(&f11, "X+1"), SplitBounds::default());
        assert!(matches!(err, Err(Error::BoundExceeded(_))));
        let f2 = gf(2);
        let err = splitting_field(&f2, &poly_over(&f2, "X^5+X+1"), SplitBounds::default());
        assert!(matches!(err, Err(Error::BoundExceeded(_))));
        let err = splitting_field(&f2, &poly_over(&f2, "1"), SplitBounds::default());
        assert!(matches!(err, Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn tower_report_shape() {
        let f2 = gf(2);
        let t = splitting_field(&f2, &poly_over(&f2, "X^2+X+1"), SplitBounds::default()).unwrap();
        let json = serde_json::to_value(t.report()).unwrap();
        assert_eq!(json["levels"][0]["modulus"], "X^2+X+1");
        assert_eq!(json["levels"][0]["degree"], 2);
        assert_eq!(json["roots"].as_array().unwrap().len(), 2);
        assert_eq!(json["reconstruction"], true);
    }
}
