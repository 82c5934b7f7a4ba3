//! Ground truth from explicit permutation groups: subgroup lattices, their
//! Möbius functions, and brute-force counts of constrained generating tuples.

mod count;
mod group;
mod lattice;
mod perm;

pub use count::{
    brute_force_phi, hall_inversion_check, lattice_inversion, sigma_node, verify_hall_inversion,
    HallInversionCheck,
};
pub use group::{closure, FiniteGroup};
pub use lattice::{
    enumerate_subgroups, lattice_mobius, verify_maximal_intersection, Subgroup, SubgroupLattice,
    DEFAULT_BOUND,
};
pub use perm::{parse_permutations, Permutation};
