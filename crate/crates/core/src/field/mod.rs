//! Fields built from maximal ideals: the quotient `A/m` of a ring by a
//! constructed maximal ideal, and finite towers obtained by repeatedly
//! adjoining a root of a polynomial (`K[X]/m` with `m` above `(f)`).

pub mod quotient;
pub mod tower;

pub use quotient::{GeometricField, Residue};
pub use tower::{
    adjoin_root, is_irreducible, splitting_field, stabilized_generator, FieldTower, SplitBounds,
    TowerElem, TowerField, TowerReport,
};

use crate::ring::Field;

/// Ideal membership in a field: `x ∈ (gens)` iff `x = 0` or some generator is
/// nonzero.
pub(crate) fn field_membership<F: Field>(
    field: &F,
    x: &F::Elem,
    gens: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let mut coeffs = vec![field.zero(); gens.len()];
    if field.is_zero(x) {
        return Some(coeffs);
    }
    let (i, g) = gens.iter().enumerate().find(|(_, g)| !field.is_zero(g))?;
    coeffs[i] = field.div(x, g)?;
    Some(coeffs)
}
