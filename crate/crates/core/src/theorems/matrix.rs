//! A matrix with more rows than columns is not surjective.
//!
//! Reduce the matrix modulo a maximal ideal `m`, eliminate over the field
//! `R/m` while tracking the inverse of the accumulated row operations `Q`,
//! and take `v = Q e_r` for the first zero row `r` of the echelon form. Any
//! solution of `Ax = v` would reduce to `(PA)x̄ = e_r`, whose row `r` reads
//! `0 = 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::GeometricField;
use crate::maximal::MaximalIdeal;
use crate::ring::{Field, Ring};

/// Largest `|R|^columns` for which the image is enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixCertificate<E> {
    /// A vector outside the image.
    pub target: Vec<E>,
    /// Rank of the matrix over `R/m`.
    pub rank: usize,
    /// Generators of the stage of `m` that decided the pivots.
    pub ideal_generators: Vec<E>,
    /// `Some(true)` when exhaustive image enumeration confirmed the target.
    pub exhaustive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub proposition: &'static str,
    pub instance: String,
    pub target: Vec<String>,
    pub rank: usize,
    pub exhaustive: Option<bool>,
    pub passed: bool,
}

impl<E> MatrixCertificate<E> {
    pub fn report<R: Ring<Elem = E>>(&self, ring: &R, rows: &[Vec<E>]) -> MatrixReport {
        let instance = format!(
            "[{}] over {}",
            rows.iter()
                .map(|r| format!("[{}]", r.iter().map(|x| ring.format(x)).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(","),
            ring.spec()
        );
        MatrixReport {
            proposition: "matrix-not-surjective",
            instance,
            target: self.target.iter().map(|x| ring.format(x)).collect(),
            rank: self.rank,
            exhaustive: self.exhaustive,
            passed: self.exhaustive != Some(false),
        }
    }
}

fn apply<R: Ring>(ring: &R, rows: &[Vec<R::Elem>], x: &[R::Elem]) -> Vec<R::Elem> {
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
        })
        .collect()
}

/// Whether `target` is outside `{ A x }`, by enumerating every `x`, or `None`
/// when the ring is infinite or the search space exceeds [`EXHAUSTIVE_LIMIT`].
pub fn outside_image_exhaustive<R: Ring>(
    ring: &R,
    rows: &[Vec<R::Elem>],
    target: &[R::Elem],
) -> Option<bool> {
    let size = ring.finite_size()?;
    let columns = rows.first().map_or(0, |r| r.len());
    let total = size.checked_pow(columns as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT)?;
    let elems: Vec<R::Elem> = (0..size).filter_map(|i| ring.enumerate(i)).collect();
    for t in 0..total {
        let mut rest = t;
        let x: Vec<R::Elem> = (0..columns)
            .map(|_| {
                let e = elems[(rest % size) as usize].clone();
                rest /= size;
                e
            })
            .collect();
        let image = apply(ring, rows, &x);
        if image.iter().zip(target).all(|(a, b)| ring.eq(a, b)) {
            return Some(false);
        }
    }
    Some(true)
}

/// A vector outside the image of `rows` (an `n × m` matrix with `n > m`)
/// over a nontrivial ring.
pub fn matrix_not_surjective<R: Ring>(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<MatrixCertificate<R::Elem>> {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != m) {
        return Err(Error::PreconditionViolated("rows have different lengths".into()));
    }
    if n <= m {
        return Err(Error::PreconditionViolated(format!(
            "need more rows than columns, got {n} x {m}"
        )));
    }
    for x in rows.iter().flatten() {
        ring.check(x)?;
    }
    if ring.is_trivial() {
        return Err(Error::PreconditionViolated("the ring is trivial".into()));
    }
    let k = GeometricField::new(MaximalIdeal::canonical(ring.clone())?)?;
    let mut a: Vec<Vec<_>> = rows
        .iter()
        .map(|r| r.iter().map(|x| k.residue(x.clone())).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut q: Vec<Vec<_>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(pivot) = (rank..n).find(|&i| !k.is_zero(&a[i][col])) else {
            continue;
        };
        a.swap(rank, pivot);
        for row in q.iter_mut() {
            row.swap(rank, pivot);
        }
        let lead = a[rank][col].clone();
        let lead_inv = k
            .inv(&lead)
            .ok_or_else(|| Error::Invariant("nonzero residue without inverse".into()))?;
        for x in a[rank].iter_mut() {
            *x = k.mul(x, &lead_inv);
        }
        for row in q.iter_mut() {
            row[rank] = k.mul(&row[rank], &lead);
        }
        for i in rank + 1..n {
            let c = a[i][col].clone();
            if k.is_zero(&c) {
                continue;
            }
            // R_i -= c R_rank, so Q gains C_rank += c C_i
            for j in 0..m {
                a[i][j] = k.sub(&a[i][j], &k.mul(&c, &a[rank][j]));
            }
            for row in q.iter_mut() {
                row[rank] = k.add(&row[rank], &k.mul(&c, &row[i]));
            }
        }
        rank += 1;
    }
    let target: Vec<R::Elem> = q.iter().map(|row| row[rank].representative().clone()).collect();
    let ideal_generators = k.ideal().stage_generators(k.ideal().processed())?;
    let exhaustive = outside_image_exhaustive(&ring, &rows, &target);
    if exhaustive == Some(false) {
        return Err(Error::Invariant("certified vector lies in the image".into()));
    }
    Ok(MatrixCertificate { target, rank, ideal_generators, exhaustive })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::ring::{Integers, Zmod};

    #[test]
    fn column_over_z6() {
        let r = Zmod::new(6).unwrap();
        let cert = matrix_not_surjective(r.clone(), vec![vec![r.elem(1)], vec![r.elem(0)]]).unwrap();
        assert_eq!(cert.target, vec![r.elem(0), r.elem(1)]);
        assert_eq!(cert.exhaustive, Some(true));
    }

    #[test]
    fn column_over_integers() {
        let z = |n: i64| BigInt::from(n);
        let cert = matrix_not_surjective(Integers, vec![vec![z(2)], vec![z(3)]]).unwrap();
        assert_eq!(cert.rank, 1);
        assert_eq!(cert.target, vec![z(1), z(0)]);
        assert_eq!(cert.exhaustive, None);
    }

    #[test]
    fn zero_matrix_misses_first_basis_vector() {
        let r = Zmod::new(4).unwrap();
        let cert = matrix_not_surjective(r.clone(), vec![vec![r.elem(0)], vec![r.elem(0)]]).unwrap();
        assert_eq!(cert.target, vec![r.elem(1), r.elem(0)]);
    }

    #[test]
    fn shape_and_triviality_checks() {
        let r = Zmod::new(4).unwrap();
        assert!(matches!(
            matrix_not_surjective(r.clone(), vec![vec![r.elem(1)]]),
            Err(Error::PreconditionViolated(_))
        ));
        let t = Zmod::new(1).unwrap();
        assert!(matches!(
            matrix_not_surjective(t.clone(), vec![vec![t.elem(0)], vec![t.elem(0)]]),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
