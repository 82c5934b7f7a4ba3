use std::collections::HashMap;

use num_traits::One;

use super::group::FiniteGroup;
use super::lattice::{enumerate_subgroups, lattice_mobius, Subgroup, SubgroupLattice};
use crate::error::{Error, Result};
use crate::inversion::{Slot, TargetGroup};
use crate::numtheory::{Integer, Natural};

const MAX_ARITY: usize = 3;

fn slot_matches(g: &FiniteGroup, slot: Slot, x: usize) -> bool {
    match slot {
        Slot::Any => true,
        Slot::Order(a) => g.element_order(x) == a,
    }
}

/// `σ(H)` by direct counting of element orders inside the node.
pub fn sigma_node(g: &FiniteGroup, node: &Subgroup, target: TargetGroup) -> Natural {
    let mut acc = Natural::one();
    for slot in target.slots() {
        let count = node.members.ones().filter(|&x| slot_matches(g, slot, x)).count();
        acc *= count;
    }
    acc
}

/// Counts tuples satisfying the target's order constraints that generate the
/// whole group, by enumerating every tuple. Generation depends only on the set
/// of cyclic subgroups the tuple touches, so that check is memoised.
pub fn brute_force_phi(g: &FiniteGroup, target: TargetGroup, bound: usize) -> Result<Natural> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { order: g.order(), bound });
    }
    let slots = target.slots();
    if slots.len() > MAX_ARITY {
        return Err(Error::ArityTooLarge(slots.len()));
    }
    let mut cyclic_id: HashMap<_, usize> = HashMap::new();
    let ids: Vec<usize> = (0..g.order())
        .map(|x| {
            let next = cyclic_id.len();
            *cyclic_id.entry(g.generate(&[x])).or_insert(next)
        })
        .collect();
    let candidates: Vec<Vec<usize>> = slots
        .iter()
        .map(|&s| (0..g.order()).filter(|&x| slot_matches(g, s, x)).collect())
        .collect();

    let mut memo: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut total = 0u64;
    let mut tuple = Vec::with_capacity(slots.len());
    count_tuples(g, &candidates, &ids, &mut memo, &mut tuple, &mut total);
    Ok(Natural::from(total))
}

fn count_tuples(
    g: &FiniteGroup,
    candidates: &[Vec<usize>],
    ids: &[usize],
    memo: &mut HashMap<Vec<usize>, bool>,
    tuple: &mut Vec<usize>,
    total: &mut u64,
) {
    let depth = tuple.len();
    if depth == candidates.len() {
        let mut key: Vec<usize> = tuple.iter().map(|&x| ids[x]).collect();
        key.sort_unstable();
        key.dedup();
        let generates = *memo.entry(key).or_insert_with(|| g.generates(tuple));
        if generates {
            *total += 1;
        }
        return;
    }
    for &x in &candidates[depth] {
        tuple.push(x);
        count_tuples(g, candidates, ids, memo, tuple, total);
        tuple.pop();
    }
}

/// `Σ_H μ(H) σ(H)` over a lattice with `μ` set.
pub fn lattice_inversion(g: &FiniteGroup, lat: &SubgroupLattice, target: TargetGroup) -> Option<Integer> {
    let mu = lat.mu()?;
    let mut total = Integer::default();
    for (node, &m) in lat.nodes().iter().zip(mu) {
        if m != 0 {
            total += Integer::from(sigma_node(g, node, target)) * m;
        }
    }
    Some(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallInversionCheck {
    pub target: TargetGroup,
    pub inversion: Integer,
    pub brute_force: Natural,
    pub agree: bool,
}

pub fn hall_inversion_check(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    target: TargetGroup,
    bound: usize,
) -> Result<HallInversionCheck> {
    let inversion = lattice_inversion(g, lat, target)
        .ok_or_else(|| Error::Inconsistent("lattice Möbius function not computed".into()))?;
    let brute_force = brute_force_phi(g, target, bound)?;
    Ok(HallInversionCheck {
        target,
        agree: inversion == Integer::from(brute_force.clone()),
        inversion,
        brute_force,
    })
}

/// Builds the lattice, then compares inversion against brute force.
pub fn verify_hall_inversion(g: &FiniteGroup, target: TargetGroup, bound: usize) -> Result<bool> {
    let lat = lattice_mobius(enumerate_subgroups(g, bound)?);
    Ok(hall_inversion_check(g, &lat, target, bound)?.agree)
}
