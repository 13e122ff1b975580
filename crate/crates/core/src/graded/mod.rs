//! Algebras graded by discrete Doi-Hopf data and modules graded by
//! `(G,Λ,X)`-sets.

pub mod algebra;
pub mod module;
pub mod smash;

pub use algebra::{
    check_graded_algebra, check_graded_algebra_map, collapse_dims, local_units_report, GradedAlgebra, GradedMap,
};
pub use module::{
    check_graded_module, check_graded_morphism, functor_tz, inverse_functor, orbit_subset, regular_graded_module,
    restrict_module, GradedModule,
};
pub use smash::{alpha_iso, check_alpha, dual_smash, koppinen_smash, smash_product};

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::discrete::FiniteGroup;
    use crate::hopf::{
        constant_family, gyd_to_doihopf, kc2, regular_bicomodule_algebra, regular_bimodule_coalgebra, trivial_family,
        DoiHopfDatum, HopfGC,
    };
    use crate::Field;

    pub fn kc2_family() -> HopfGC {
        constant_family(&kc2(Field::Rational), &FiniteGroup::cyclic(2)).unwrap()
    }

    /// The datum of the double: 16-dimensional for the kC2 family over C2.
    pub fn double_datum(h: &HopfGC) -> DoiHopfDatum {
        gyd_to_doihopf(h, h, &regular_bicomodule_algebra(h), &regular_bimodule_coalgebra(h)).unwrap()
    }

    pub fn kc2_double() -> DoiHopfDatum {
        double_datum(&kc2_family())
    }

    pub fn trivial_double(group: &FiniteGroup) -> DoiHopfDatum {
        double_datum(&trivial_family(Field::Rational, group))
    }
}
