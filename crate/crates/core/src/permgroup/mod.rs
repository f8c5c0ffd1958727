//! Permutations of small degree and groups given by full enumeration.

mod classes;
mod corpus;
mod elements;
mod group;
mod lattice;
mod members;
mod perm;

pub use classes::{count_in_class, enumerate_class, for_each_in_class};
pub use corpus::{resolve_group, Corpus, CorpusEntry};
pub use elements::{ElementSet, DENSE_DEGREE_LIMIT};
pub use group::{symmetric_generators, Abelianization, ConcreteGroup, DEFAULT_CLOSURE_CAP};
pub use lattice::{all_subgroups, maximal_subgroups, SubgroupClass, SubgroupLattice, DEFAULT_LATTICE_CAP};
pub use members::{
    block_systems, catalog_maximal_subgroups, family_members, family_members_with_caps, subsets, FamilyMember,
    MemberShape, DEFAULT_MEMBER_COUNT_CAP, DEFAULT_MEMBER_DEGREE_CAP,
};
pub use perm::{Perm, MAX_DEGREE};
