use std::sync::Arc;

use super::field_membership;
use crate::error::{Error, Result};
use crate::maximal::{Dichotomy, MaximalIdeal};
use crate::ring::{Field, Ring, RingId};

/// A residue class of `A/m`, stored through a representative in `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Residue<E> {
    rep: E,
    field: RingId,
}

impl<E> Residue<E> {
    pub fn representative(&self) -> &E {
        &self.rep
    }
}

/// The quotient `A/m` by a constructed maximal ideal.
///
/// Equality is `x − y ∈ m` and inverses come from the dichotomy certificate,
/// so every nonzero element has a verified inverse.
#[derive(Clone, Debug)]
pub struct GeometricField<R: Ring> {
    ideal: Arc<MaximalIdeal<R>>,
    id: RingId,
}

impl<R: Ring> GeometricField<R> {
    /// Fails with [`Error::TrivialQuotient`] when `1 ∈ m`.
    pub fn new(ideal: MaximalIdeal<R>) -> Result<Self> {
        Self::from_shared(Arc::new(ideal))
    }

    pub fn from_shared(ideal: Arc<MaximalIdeal<R>>) -> Result<Self> {
        if ideal.is_base_improper() {
            return Err(Error::TrivialQuotient);
        }
        Ok(GeometricField { ideal, id: RingId::fresh() })
    }

    pub fn ideal(&self) -> &MaximalIdeal<R> {
        &self.ideal
    }

    pub fn base_ring(&self) -> &R {
        self.ideal.ring()
    }

    pub fn residue(&self, a: R::Elem) -> Result<Residue<R::Elem>> {
        self.base_ring().check(&a)?;
        Ok(self.wrap(a))
    }

    fn wrap(&self, rep: R::Elem) -> Residue<R::Elem> {
        Residue { rep, field: self.id }
    }

    fn own<'a>(&self, x: &'a Residue<R::Elem>) -> &'a R::Elem {
        assert!(x.field == self.id, "residue from a different quotient field");
        &x.rep
    }

    fn contains(&self, a: &R::Elem) -> bool {
        self.ideal
            .contains(a)
            .expect("every element of the base ring has a defined index")
    }

    /// The residue class with its least-index representative.
    pub fn canonical(&self, x: &Residue<R::Elem>) -> Residue<R::Elem> {
        let ring = self.base_ring();
        let rep = self.own(x);
        let mut i = 0;
        loop {
            if let Some(y) = self.ideal.element(i) {
                if self.contains(&ring.sub(&y, rep)) {
                    return self.wrap(y);
                }
            }
            i += 1;
        }
    }

    /// `x = 0` or `x` is invertible, with the certificate from the chain.
    pub fn dichotomy(&self, x: &Residue<R::Elem>) -> Result<Dichotomy<R::Elem>> {
        self.ideal.dichotomy(self.own(x))
    }

    /// Number of classes met among the first `n` enumerated elements.
    pub fn count_classes(&self, n: u64) -> u64 {
        let mut reps: Vec<Residue<R::Elem>> = Vec::new();
        for i in 0..n {
            if let Some(y) = self.enumerate(i) {
                if !reps.iter().any(|r| self.eq(r, &y)) {
                    reps.push(y);
                }
            }
        }
        reps.len() as u64
    }
}

impl<R: Ring> Ring for GeometricField<R> {
    type Elem = Residue<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.wrap(self.base_ring().zero())
    }

    fn one(&self) -> Self::Elem {
        self.wrap(self.base_ring().one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.wrap(self.base_ring().add(self.own(a), self.own(b)))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.wrap(self.base_ring().neg(self.own(a)))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.wrap(self.base_ring().sub(self.own(a), self.own(b)))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.wrap(self.base_ring().mul(self.own(a), self.own(b)))
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.contains(&self.base_ring().sub(self.own(a), self.own(b)))
    }

    fn check(&self, x: &Self::Elem) -> Result<()> {
        if x.field != self.id {
            return Err(Error::ForeignElement(self.spec()));
        }
        self.base_ring().check(&x.rep)
    }

    fn enumerate(&self, i: u64) -> Option<Self::Elem> {
        self.ideal.element(i).map(|y| self.wrap(y))
    }

    fn membership_coefficients(
        &self,
        x: &Self::Elem,
        gens: &[Self::Elem],
    ) -> Result<Option<Vec<Self::Elem>>> {
        Ok(field_membership(self, x, gens))
    }

    fn is_unit(&self, x: &Self::Elem) -> Result<Option<Self::Elem>> {
        Ok(self.inv(x))
    }

    fn is_nilpotent(&self, x: &Self::Elem) -> Result<Option<u32>> {
        Ok(if self.is_zero(x) { Some(1) } else { None })
    }

    fn spec(&self) -> String {
        format!("{}/m", self.base_ring().spec())
    }

    fn format(&self, x: &Self::Elem) -> String {
        self.base_ring().format(&self.canonical(x).rep)
    }

    fn parse(&self, s: &str) -> Result<Self::Elem> {
        Ok(self.wrap(self.base_ring().parse(s)?))
    }
}

impl<R: Ring> Field for GeometricField<R> {
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let d = self.dichotomy(x).expect("dichotomy is total on the base ring");
        d.inverse().map(|c| self.wrap(c.clone()))
    }
}
