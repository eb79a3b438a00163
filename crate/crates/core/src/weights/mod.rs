//! Torus weights of the spin modules and of the structure group, the
//! finite central subgroup `Γ`, and how its elements act on representations.

mod action;
mod delta;
mod descriptor;
mod gamma;
mod tangent;
mod weight;

pub use action::{
    descends, element_action_on_factor, element_action_on_rep, factor_weights,
    spinor_module_action, ActionOutcome, DescentVerdict, NonScalarWitness, SpinorModuleMode,
    SpinorModuleWeights, ENUMERATION_GUARD, SPINOR_MODULE_ENUMERATION_LIMIT,
};
pub use delta::{delta_weights, sign_representatives, DeltaWeights};
pub use descriptor::{Chirality, Factor, Family, Multiplicities, RepDescriptor, Space, Structure};
pub use gamma::{
    structure_group_elements, structure_group_generators, ClassicalPart, GammaElement, SpinPart,
};
pub use tangent::{
    is_tangent_trivial, resolve_pairing, tangent_weight_assignment, tangent_weights_with, Pairing,
};
pub use weight::{evaluate_weight, Coord, GroupElementParams, RootOfUnity, Weight};
