//! Finite permutation-group algorithms: stabilizer chains, subgroup
//! lattices, Carter subgroup enumeration, induced automorphism groups and
//! wreath-product embeddings.
//!
//! The crate is `no_std` (with `alloc`); all IO, parsing and the CLI live
//! in the companion `carter-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod carter;
pub mod error;
pub mod group;
pub mod lattice;
pub mod lemmas;
pub mod normal;
pub mod sections;
pub mod ops;
pub mod perm;
pub mod subgroup;

pub use carter::{
    carter_subgroups, check_star, check_theorem, is_carter, nilpotent_subgroup_classes,
    CarterReport, Limits, StarEntry, StarReport, TheoremVerdict,
};
pub use error::Error;
pub use group::Group;
pub use lattice::{all_subgroup_classes, are_conjugate};
pub use lemmas::{
    build_wreath_embedding, verify_lemma3, verify_lemma5, verify_quotient_image, Lemma3Report,
    Lemma5Report, WreathEmbedding,
};
pub use normal::{
    composition_series, decompose_direct_factors, minimal_normal_subgroups, CompositionSeries,
    FactorDescriptor,
};
pub use sections::{group_with_induced, induced_automorphisms, quotient, section_normalizer, SectionMap};
pub use perm::Perm;
pub use subgroup::{Subgroup, SubgroupClass};
