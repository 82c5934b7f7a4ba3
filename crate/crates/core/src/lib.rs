//! Möbius function and generation counts for the small Ree groups
//! `R(3^n)`, with a permutation-group oracle for independent checks.
//!
//! - [`numtheory`]: classical Möbius function, divisors, Hall subgroup orders.
//! - [`catalog`]: subgroup classes of `R(3^n)` with `μ_G`, class sizes,
//!   element counts and overgroup tables.
//! - [`inversion`]: `φ` counts by Hall's inversion, closed forms, `d`
//!   counts and generation probabilities.
//! - [`oracle`]: subgroup lattices of small permutation groups.

pub mod catalog;
pub mod error;
pub mod inversion;
pub mod numtheory;
pub mod oracle;

pub use catalog::{
    aut_order, class_instances, class_record, element_count, group_order, nu_count,
    overgroup_table, ClassInstance, ClassRecord, ClassTag, GroupParams, OvergroupTable, ReeGroup,
};
pub use error::{Error, Result};
pub use inversion::{
    cross_check_corollaries, d_count, generation_probability, phi_class_sum, phi_closed_form,
    sigma, verify_defining_relation, verify_trivial_mobius, EpiCountReport, ProbabilitySpec,
    TargetGroup,
};
pub use numtheory::{
    divisors, hall_orders, moebius, route_hall_divisibility, verify_unique_divisibility, Integer,
    Natural, Rational,
};
