//! Shared fixture constructions: the standard bialgebras and the comodule
//! pools the verification suites run over.

use std::sync::Arc;

use exact_kernel::{FieldSpec, LinearMap};

use crate::bialgebra::{monoid_bialgebra, sweedler_h4, BialgebraFD, MonoidTable};
use crate::comodule::{simple_graded_comodule, LeftComoduleFD};

pub const Q: FieldSpec = FieldSpec::Rationals;

/// The trivial bialgebra k.
pub fn trivial_bialgebra() -> Arc<BialgebraFD> {
    Arc::new(monoid_bialgebra(&MonoidTable::trivial(), Q).unwrap())
}

/// The group bialgebra k[Z/2].
pub fn zmod2() -> Arc<BialgebraFD> {
    Arc::new(monoid_bialgebra(&MonoidTable::cyclic(2), Q).unwrap())
}

/// The monoid bialgebra k[S] for S = {e, s}, s² = s.
pub fn ks() -> Arc<BialgebraFD> {
    Arc::new(monoid_bialgebra(&MonoidTable::two_element_idempotent(), Q).unwrap())
}

/// Sweedler's four-dimensional Hopf algebra.
pub fn sweedler() -> Arc<BialgebraFD> {
    Arc::new(sweedler_h4(Q).unwrap())
}

/// All four fixture bialgebras, smallest first.
pub fn fixture_bases() -> Vec<(&'static str, Arc<BialgebraFD>)> {
    vec![
        ("k", trivial_bialgebra()),
        ("k[Z/2]", zmod2()),
        ("k[S]", ks()),
        ("sweedler", sweedler()),
    ]
}

/// A two-dimensional indecomposable non-simple comodule over Sweedler's
/// algebra: `λ(v1) = 1⊗v1`, `λ(v2) = g⊗v2 + x⊗v1`.
pub fn sweedler_nonsimple(base: Arc<BialgebraFD>) -> LeftComoduleFD {
    let field = base.field();
    let mut coaction = LinearMap::zero(base.dim() * 2, 2, field);
    // rows indexed (b, i) with b the basis element of B and i the comodule leg
    coaction.set(0 * 2 + 0, 0, field.one()); // 1 ⊗ v1
    coaction.set(1 * 2 + 1, 1, field.one()); // g ⊗ v2
    coaction.set(2 * 2 + 0, 1, field.one()); // x ⊗ v1
    LeftComoduleFD::new(base, 2, coaction).unwrap()
}

/// The standard comodule pool for a base: the trivial comodule, the regular
/// comodule, every graded simple when the base is a monoid bialgebra, and a
/// two-dimensional non-simple where one exists.
pub fn comodule_pool(base: &Arc<BialgebraFD>) -> Vec<LeftComoduleFD> {
    let mut pool = vec![LeftComoduleFD::trivial(base.clone())];
    if base.dim() > 1 {
        pool.push(LeftComoduleFD::regular(base.clone()));
    }
    if let Some(table) = crate::bialgebra::monoid_structure(base) {
        for z in 0..table.order() {
            pool.push(simple_graded_comodule(base.clone(), z).unwrap());
        }
    } else if base.dim() == 4 {
        pool.push(sweedler_nonsimple(base.clone()));
    }
    pool
}

/// A smaller pool for the more expensive suites.
pub fn small_pool(base: &Arc<BialgebraFD>) -> Vec<LeftComoduleFD> {
    comodule_pool(base).into_iter().take(3).collect()
}
