use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

pub const DEFAULT_BOUND: usize = 600;

#[derive(Debug, Clone)]
pub struct Subgroup {
    pub members: FixedBitSet,
    pub order: usize,
    /// A generating set (element indices).
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// Every subgroup of a finite group, ordered by increasing order, with the
/// proper-containment relation and (once computed) the Möbius function.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    nodes: Vec<Subgroup>,
    /// `above[i]`: nodes properly containing node `i`.
    above: Vec<Vec<usize>>,
    mu: Vec<i64>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub fn above(&self, i: usize) -> &[usize] {
        &self.above[i]
    }

    /// Index of the whole group (always the last node).
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Index of the trivial subgroup (always the first node).
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn find(&self, members: &FixedBitSet) -> Option<usize> {
        self.nodes.iter().position(|n| &n.members == members)
    }

    /// `μ` per node, or `None` before [`lattice_mobius`] has run.
    pub fn mu(&self) -> Option<&[i64]> {
        (self.mu.len() == self.nodes.len()).then_some(self.mu.as_slice())
    }

    /// Nodes covered only by the whole group.
    pub fn maximal(&self) -> Vec<usize> {
        let top = self.top();
        (0..self.nodes.len())
            .filter(|&i| i != top && self.above[i] == [top])
            .collect()
    }
}

/// Finds every subgroup: seeds with the cyclic subgroups, then closes the
/// collection under joining a subgroup with a cyclic subgroup.
pub fn enumerate_subgroups(g: &FiniteGroup, bound: usize) -> Result<SubgroupLattice> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { order: g.order(), bound });
    }
    let mut cyclic: Vec<(usize, FixedBitSet)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in 0..g.order() {
        let c = g.generate(&[x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }

    let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut nodes: Vec<Subgroup> = Vec::new();
    let mut push = |members: FixedBitSet, gens: Vec<usize>, nodes: &mut Vec<Subgroup>| {
        if found.contains_key(&members) {
            return;
        }
        found.insert(members.clone(), nodes.len());
        let order = members.count_ones(..);
        nodes.push(Subgroup { members, order, generators: gens });
    };
    for (x, c) in &cyclic {
        let gens = if *x == 0 { vec![] } else { vec![*x] };
        push(c.clone(), gens, &mut nodes);
    }
    let mut head = 0;
    while head < nodes.len() {
        let base = nodes[head].clone();
        head += 1;
        for (x, c) in &cyclic {
            if c.is_subset(&base.members) {
                continue;
            }
            let mut gens = base.generators.clone();
            gens.push(*x);
            let joined = g.generate(&gens);
            push(joined, gens, &mut nodes);
        }
    }

    nodes.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.members.ones().cmp(b.members.ones())));
    let above = (0..nodes.len())
        .map(|i| {
            (i + 1..nodes.len())
                .filter(|&j| nodes[j].order > nodes[i].order && nodes[i].is_subgroup_of(&nodes[j]))
                .collect()
        })
        .collect();
    Ok(SubgroupLattice { nodes, above, mu: Vec::new() })
}

/// Assigns `μ(G) = 1` and `μ(H) = -Σ_{K > H} μ(K)` from the top down.
pub fn lattice_mobius(mut lat: SubgroupLattice) -> SubgroupLattice {
    let len = lat.nodes.len();
    let mut mu = vec![0i64; len];
    for i in (0..len).rev() {
        mu[i] = if i == len - 1 { 1 } else { -lat.above[i].iter().map(|&k| mu[k]).sum::<i64>() };
    }
    lat.mu = mu;
    lat
}

/// Every node with nonzero `μ` is the whole group or an intersection of
/// maximal subgroups. Intersections are closed up to fixpoint.
pub fn verify_maximal_intersection(lat: &SubgroupLattice) -> bool {
    let Some(mu) = lat.mu() else {
        return false;
    };
    let maximal: Vec<&FixedBitSet> = lat.maximal().into_iter().map(|i| &lat.nodes[i].members).collect();
    let mut reached: HashSet<FixedBitSet> = maximal.iter().map(|&m| m.clone()).collect();
    let mut frontier: Vec<FixedBitSet> = reached.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for m in &maximal {
            let mut t = s.clone();
            t.intersect_with(m);
            if reached.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    (0..lat.len()).all(|i| mu[i] == 0 || i == lat.top() || reached.contains(&lat.nodes[i].members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::group::closure;
    use crate::oracle::perm::Permutation;

    fn perm(d: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    #[test]
    fn cyclic_four_chain() {
        let c4 = closure(&[perm(4, &[&[0, 1, 2, 3]])]).unwrap();
        let lat = lattice_mobius(enumerate_subgroups(&c4, DEFAULT_BOUND).unwrap());
        assert_eq!(lat.len(), 3);
        assert_eq!(lat.mu().unwrap(), &[0, -1, 1]);
        assert_eq!(lat.maximal(), vec![1]);
        assert!(verify_maximal_intersection(&lat));
    }

    #[test]
    fn trivial_group() {
        let one = closure(&[Permutation::identity(2)]).unwrap();
        let lat = lattice_mobius(enumerate_subgroups(&one, DEFAULT_BOUND).unwrap());
        assert_eq!(lat.len(), 1);
        assert_eq!(lat.mu().unwrap(), &[1]);
        assert!(verify_maximal_intersection(&lat));
    }

    #[test]
    fn bound_is_enforced() {
        let s4 = closure(&[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(
            enumerate_subgroups(&s4, 20).unwrap_err(),
            Error::BoundExceeded { order: 24, bound: 20 }
        );
    }

    #[test]
    fn mu_unset_before_computation() {
        let s3 = closure(&[perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])]).unwrap();
        let lat = enumerate_subgroups(&s3, DEFAULT_BOUND).unwrap();
        assert!(lat.mu().is_none());
        assert!(!verify_maximal_intersection(&lat));
        let lat = lattice_mobius(lat);
        // S3: mu(1) = 3, three C2 and one C3 maximal
        assert_eq!(lat.mu().unwrap()[0], 3);
    }
}
