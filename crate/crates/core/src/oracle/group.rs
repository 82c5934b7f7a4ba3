use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A permutation group with all elements listed and a full Cayley table.
/// Element `0` is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<usize>,
    index: HashMap<Permutation, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
    orders: Vec<u32>,
}

/// Generates the group by breadth-first multiplication until no new
/// elements appear.
pub fn closure(generators: &[Permutation]) -> Result<FiniteGroup> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let degree = first.degree();
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch { expected: degree, found: bad.degree() });
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        for g in generators {
            let y = x.then(g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        head += 1;
    }
    let generator_ids = generators.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::from_elements(degree, elements, index, generator_ids))
}

impl FiniteGroup {
    fn from_elements(
        degree: usize,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        generators: Vec<usize>,
    ) -> Self {
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.then(b)] as u32);
            }
        }
        let inverses = elements.iter().map(|a| index[&a.inverse()]).collect();
        let orders = elements.iter().map(|a| a.order() as u32).collect();
        FiniteGroup { degree, elements, generators, index, table, inverses, orders }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `elements[a]` followed by `elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    /// Membership set of the subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Whether `gens` generate the whole group.
    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generate(gens).count_ones(..) == self.order()
    }
}
