//! Counting substitution isomers with permutation groups.
//!
//! A molecular skeleton with `d` single-bonded attachment sites carries a
//! symmetry group `G ≤ S_d`. Assigning substituent kinds to sites gives a
//! *tabloid* — an ordered partition of the sites — whose *shape* (the sizes
//! of its components) is the substituents' empirical formula. Two tabloids in
//! the same `G`-orbit describe the same compound, so the number of distinct
//! derivatives with a given formula is the number of orbits of that shape.
//!
//! The crate provides:
//!
//! * exact permutation and group arithmetic ([`perm`], [`group`]),
//! * tabloid enumeration and orbit decomposition with two independent
//!   counting routes ([`tabloid`], [`orbits`]),
//! * the substitution (dominance) order, genetic digraphs between adjacent
//!   shapes, and distinguishability analysis ([`genetic`]),
//! * consistency checks tying the cycle census to the counts ([`verify`]),
//! * subgroup-lattice enumeration and the inverse search from observed
//!   counts back to candidate symmetry groups ([`lattice`], [`inverse`]).
//!
//! ```
//! use isomers::group::PermGroup;
//! use isomers::orbits::burnside_count;
//!
//! // the rotation group of a six-site ring
//! let group = PermGroup::from_cycle_strings(&["(123456)"], 6)?;
//! // disubstituted derivatives: tabloids of shape (4,2)
//! let count = burnside_count(&group, &"4,2".parse()?)?;
//! assert_eq!(count, 3);
//! # Ok::<(), isomers::Error>(())
//! ```

pub mod error;
pub mod genetic;
pub mod group;
pub mod inverse;
pub mod lattice;
pub mod orbits;
pub mod partition;
pub mod perm;
pub mod tabloid;
pub mod verify;

pub use error::Error;
pub use genetic::{
    dominance_leq, genetic_digraph, identification_partition, simple_moves, GeneticDigraph,
    IdentificationPartition, SubstitutionMove,
};
pub use group::{CycleCensus, PermGroup};
pub use inverse::{solve, CountConstraint, Relation, SearchReport, SubgroupClass};
pub use lattice::all_subgroups_up_to_conjugacy;
pub use orbits::{burnside_count, fixed_tabloid_count, orbit_space, Orbit, OrbitSpace};
pub use partition::{partitions_of, Partition};
pub use perm::{CycleType, Permutation};
pub use tabloid::{enumerate_tabloids, Tabloid};
pub use verify::{cross_check, system_report, SystemReport};

/// Built-in generator presets for the degree-6 groups used throughout the
/// documentation and tests.
pub mod presets {
    use crate::error::Result;
    use crate::group::PermGroup;

    /// Named presets: `(name, generators)`.
    pub const PRESETS: &[(&str, &[&str])] = &[
        ("thm21-d12", &["(123)(456)", "(14)(26)(35)", "(14)(25)(36)"]),
        ("thm21-c6", &["(123456)"]),
        ("thm21-s3", &["(123)(456)", "(14)(26)(35)"]),
    ];

    /// Looks up a preset by name and builds its group.
    pub fn preset_group(name: &str) -> Option<Result<PermGroup>> {
        PRESETS
            .iter()
            .find(|(preset, _)| *preset == name)
            .map(|(_, gens)| PermGroup::from_cycle_strings(gens, 6))
    }

    /// The names of all presets.
    pub fn preset_names() -> Vec<&'static str> {
        PRESETS.iter().map(|(name, _)| *name).collect()
    }
}


// The book's code blocks compile and run as doc-tests, so the guide can
// never drift from the library.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    pub mod permutations {}
    #[doc = include_str!("../../../book/src/groups.md")]
    pub mod groups {}
    #[doc = include_str!("../../../book/src/tabloids-and-orbits.md")]
    pub mod tabloids_and_orbits {}
    #[doc = include_str!("../../../book/src/genetic-relations.md")]
    pub mod genetic_relations {}
    #[doc = include_str!("../../../book/src/inverse-problem.md")]
    pub mod inverse_problem {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
