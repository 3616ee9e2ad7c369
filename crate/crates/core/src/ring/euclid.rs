//! Euclidean domains: extended gcd, canonical membership certificates and the
//! saturation test `∃N. x^N ∈ (g)`.

use super::Ring;

pub trait EuclideanDomain: Ring {
    /// `a = q·b + r` with `r` smaller than `b`. `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// A unit `u` such that `u·a` is the normal form of `a` (nonnegative for
    /// integers, monic for polynomials). Returns one for zero.
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem;

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.normal_unit(a), a)
    }

    fn is_unit_normal(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a) && self.is_one(&self.normalize(a))
    }

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, d).1)
    }

    /// `a / d`, assuming `d | a` and `d ≠ 0`.
    fn exact_div(&self, a: &Self::Elem, d: &Self::Elem) -> Self::Elem {
        let (q, r) = self.div_rem(a, d);
        debug_assert!(self.is_zero(&r), "exact_div with nonzero remainder");
        q
    }

    /// Normalized `g = gcd(a, b)` with `g = s·a + t·b`.
    fn xgcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let u = self.normal_unit(&r0);
        (self.mul(&u, &r0), self.mul(&u, &s0), self.mul(&u, &t0))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.xgcd(a, b).0
    }

    fn gcd_all(&self, gens: &[Self::Elem]) -> Self::Elem {
        gens.iter().fold(self.zero(), |d, g| self.gcd(&d, g))
    }

    /// Canonical remainder of `a` modulo `m`; `a` itself when `m = 0`.
    fn reduce_mod(&self, a: &Self::Elem, m: &Self::Elem) -> Self::Elem {
        if self.is_zero(m) {
            return a.clone();
        }
        self.div_rem(a, &self.normalize(m)).1
    }
}

/// Coefficients `c` with `x = Σ c_i g_i`, or `None`.
///
/// The certificate is canonical: working from the last generator backwards,
/// each coefficient is the reduced solution of `c_i g_i ≡ rest (mod gcd of the
/// earlier generators)`. For `ℤ` this yields `8 = 2·4 + 0·6` and
/// `1 = -2·4 + 1·9`.
pub fn membership<R: EuclideanDomain>(
    ring: &R,
    x: &R::Elem,
    gens: &[R::Elem],
) -> Option<Vec<R::Elem>> {
    let mut prefix = Vec::with_capacity(gens.len() + 1);
    prefix.push(ring.zero());
    for g in gens {
        let d = ring.gcd(prefix.last().unwrap(), g);
        prefix.push(d);
    }
    if !ring.divides(prefix.last().unwrap(), x) {
        return None;
    }
    let mut coeffs = vec![ring.zero(); gens.len()];
    let mut rest = x.clone();
    for i in (0..gens.len()).rev() {
        let g = &gens[i];
        let earlier = &prefix[i];
        let c = if ring.is_zero(g) {
            ring.zero()
        } else if ring.is_zero(earlier) {
            ring.exact_div(&rest, g)
        } else {
            let d = &prefix[i + 1];
            let g_red = ring.exact_div(g, d);
            let m_red = ring.exact_div(earlier, d);
            let rest_red = ring.exact_div(&rest, d);
            let (_, s, _) = ring.xgcd(&g_red, &m_red);
            ring.reduce_mod(&ring.mul(&rest_red, &s), &m_red)
        };
        rest = ring.sub(&rest, &ring.mul(&c, g));
        coeffs[i] = c;
    }
    if ring.is_zero(&rest) {
        Some(coeffs)
    } else {
        None
    }
}

/// Decides `∃N ≥ 0. x^N ∈ (g)` and returns the least such `N` together with
/// the cofactor `q` satisfying `x^N = q·g`.
///
/// Runs `h := g; while gcd(h, x) is a nonunit: h := h / gcd(h, x)`; the answer
/// is yes iff `h` ends as a unit, and the number of rounds bounds `N`.
pub fn saturation_divides<R: EuclideanDomain>(
    ring: &R,
    x: &R::Elem,
    g: &R::Elem,
) -> Option<(u32, R::Elem)> {
    if ring.is_zero(g) {
        // x^N ∈ (0) in a domain: only x = 0 (from N = 1), or 1 = 0.
        if ring.is_trivial() {
            return Some((0, ring.zero()));
        }
        return if ring.is_zero(x) { Some((1, ring.zero())) } else { None };
    }
    let mut h = ring.normalize(g);
    let mut rounds = 0u32;
    loop {
        let d = ring.gcd(&h, x);
        if ring.is_unit_normal(&d) {
            break;
        }
        h = ring.exact_div(&h, &d);
        rounds += 1;
    }
    if !ring.is_unit_normal(&h) {
        return None;
    }
    let mut power = ring.one();
    for n in 0..=rounds {
        if ring.divides(g, &power) {
            return Some((n, ring.exact_div(&power, g)));
        }
        power = ring.mul(&power, x);
    }
    unreachable!("g divides x^rounds once the saturation loop ends in a unit")
}

/// `∃N. x^N·y ∈ (gens)` over a Euclidean domain: least `N` and coefficients of
/// `x^N·y` over `gens`.
pub fn saturated_membership<R: EuclideanDomain>(
    ring: &R,
    x: &R::Elem,
    y: &R::Elem,
    gens: &[R::Elem],
) -> Option<(u32, Vec<R::Elem>)> {
    let d = ring.gcd_all(gens);
    let n = if ring.is_zero(&d) {
        if ring.is_zero(y) || ring.is_trivial() {
            0
        } else if ring.is_zero(x) {
            1
        } else {
            return None;
        }
    } else {
        let common = ring.gcd(&d, y);
        let rest = ring.exact_div(&d, &common);
        saturation_divides(ring, x, &rest)?.0
    };
    let target = ring.mul(&ring.pow(x, n), y);
    let coeffs = membership(ring, &target, gens)
        .expect("saturated element lies in the ideal by construction");
    Some((n, coeffs))
}
