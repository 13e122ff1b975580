//! Hopf group-coalgebras and the Doi-Hopf structures built over them.

pub mod datum;
pub mod dual;
pub mod family;
pub mod generators;
pub mod gyd;

pub use datum::{
    check_dh_morphism, check_doihopf_module, hopf_module, hopf_module_datum, regular_comodule_algebra,
    regular_module_coalgebra, ComoduleAlgebra, DoiHopfDatum, DoiHopfModule, FamilyMorphism, Flavor, ModuleCoalgebra,
};
pub use dual::{
    check_dual_action, check_graded_action, dual_graded_algebra, left_dual_action, left_dual_action_map,
    left_dual_action_maps, GroupGradedAlgebra,
};
pub use family::{
    derive_twisted_antipode, mul_factors, opposite_hgc, tensor_hgc, Algebra, GroupCoalgebra, HopfGC, SemiHopfGC,
};
pub use generators::{constant_family, group_algebra, kc2, sweedler, trivial_family, OrdinaryHopf};
pub use gyd::{
    check_phi_family, gyd_to_doihopf, phi_bimodule_coalgebra, regular_bicomodule_algebra, regular_bimodule_coalgebra,
    BicomoduleAlgebra, BimoduleCoalgebra, Biset, Side,
};
