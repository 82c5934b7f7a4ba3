#![allow(dead_code)]

use ree_mobius::oracle::{closure, FiniteGroup, Permutation};

pub fn perm(d: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(d, cycles).unwrap()
}

pub fn s4() -> FiniteGroup {
    closure(&[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap()
}

pub fn a5() -> FiniteGroup {
    closure(&[perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1, 2, 3, 4]])]).unwrap()
}

fn gf8_mul(mut a: u32, mut b: u32) -> u32 {
    let mut r = 0;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0b1000 != 0 {
            a ^= 0b1011;
        }
    }
    r
}

fn gf8_inv(a: u32) -> u32 {
    (1..8).find(|&b| gf8_mul(a, b) == 1).unwrap()
}

/// L2(8) on the projective line over GF(8) = GF(2)[x]/(x^3 + x + 1); point 8 is infinity.
pub fn l2_8_generators() -> Vec<Permutation> {
    const INF: u32 = 8;
    let map = |f: &dyn Fn(u32) -> u32| Permutation::new((0..9).map(f).collect()).unwrap();
    let shift = map(&|x| if x == INF { INF } else { x ^ 1 });
    let scale = map(&|x| if x == INF { INF } else { gf8_mul(x, 2) });
    let invert = map(&|x| match x {
        0 => INF,
        INF => 0,
        x => gf8_inv(x),
    });
    vec![shift, scale, invert]
}

pub fn l2_8() -> FiniteGroup {
    closure(&l2_8_generators()).unwrap()
}
