//! Overgroup tables: for a class `H`, every class `K ⩾ H` together with
//! `ν_K(H)`, the number of conjugates of `K` containing a fixed `H`.
//!
//! Each row records how the conjugates of `H` inside a fixed `K` split into
//! `K`-classes, as pairs `(number of K-classes, |N_K(H)|)`. From these,
//! `N(K, H) = Σ count · |K| / |N_K(H)|` and
//! `ν_K(H) = |N_G(H)| · N(K, H) / |N_G(K)|`.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use super::{ClassInstance, ClassTag, ReeGroup};
use crate::error::{Error, Result};
use crate::numtheory::{
    divisors, exact_div, hall_orders, pow3, rational_to_natural, route_hall_divisibility, Natural,
    Rational,
};

/// `classes` conjugacy classes of `H` inside `K`, each with `|N_K(H)| = normaliser_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormaliserClass {
    pub classes: Natural,
    pub normaliser_order: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvergroupRow {
    pub overgroup: ClassInstance,
    pub normalisers: Vec<NormaliserClass>,
    /// `N(K, H)`: number of subgroups of a fixed `K` conjugate in `G` to `H`.
    pub contained: Natural,
    pub nu: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvergroupTable {
    pub subject: ClassInstance,
    pub n: u64,
    pub rows: Vec<OvergroupRow>,
}

impl OvergroupTable {
    pub fn row(&self, overgroup: &ClassInstance) -> Option<&OvergroupRow> {
        self.rows.iter().find(|r| &r.overgroup == overgroup)
    }
}

pub fn overgroup_table(inst: &ClassInstance, n: u64) -> Result<OvergroupTable> {
    ReeGroup::new(n)?.overgroup_table(inst)
}

/// `ν_K(H) = [G:N_G(K)] · N(K,H) / [G:N_G(H)]` as an exact rational.
pub fn nu_count(k: &ClassInstance, h: &ClassInstance, nkh: &Natural, n: u64) -> Result<Rational> {
    let g = ReeGroup::new(n)?;
    nu_rational(&g, k, h, nkh)
}

fn nu_rational(g: &ReeGroup, k: &ClassInstance, h: &ClassInstance, nkh: &Natural) -> Result<Rational> {
    let num = g.class_size(k)? * nkh;
    let den = g.class_size(h)?;
    Ok(BigRational::new(num.into(), den.into()))
}

struct Builder<'a> {
    g: &'a ReeGroup,
    rows: Vec<(ClassInstance, Vec<(Natural, Natural)>)>,
}

impl Builder<'_> {
    fn add(&mut self, k: ClassInstance, splits: Vec<(Natural, Natural)>) {
        if !k.is_applicable(self.g.n()) {
            return;
        }
        match self.rows.iter_mut().find(|(o, _)| *o == k) {
            Some((_, existing)) => existing.extend(splits),
            None => self.rows.push((k, splits)),
        }
    }

    fn one(&mut self, k: ClassInstance, normaliser: Natural) {
        self.add(k, vec![(Natural::one(), normaliser)]);
    }
}

fn nat(v: u32) -> Natural {
    BigUint::from(v)
}

fn r(k: u64) -> ClassInstance {
    ClassInstance::new(ClassTag::R, k)
}

pub(super) fn table_for(g: &ReeGroup, inst: &ClassInstance) -> Result<OvergroupTable> {
    let n = g.n();
    if !inst.is_applicable(n) {
        return Err(Error::Inapplicable { instance: *inst, n });
    }
    let mut b = Builder { g, rows: Vec::new() };
    if *inst != g.full_group() {
        fill_rows(&mut b, inst)?;
    }

    let mut rows = Vec::with_capacity(b.rows.len());
    for (k, splits) in b.rows {
        let order_k = g.subgroup_order(&k)?;
        let mut contained = Natural::default();
        for (count, norm) in &splits {
            contained += count * exact_div(&order_k, norm, &format!("|{k}| / |N_K({inst})|"))?;
        }
        let nu = rational_to_natural(&nu_rational(g, &k, inst, &contained)?, &format!("nu_{k}({inst})"))?;
        let normalisers = splits
            .into_iter()
            .map(|(classes, normaliser_order)| NormaliserClass { classes, normaliser_order })
            .collect();
        rows.push(OvergroupRow { overgroup: k, normalisers, contained, nu });
    }
    Ok(OvergroupTable { subject: *inst, n, rows })
}

fn fill_rows(b: &mut Builder<'_>, inst: &ClassInstance) -> Result<()> {
    use ClassTag::*;
    let n = b.g.n();
    let h = if inst.tag.is_parameterless() { 1 } else { inst.h };
    let ks: Vec<u64> = divisors(n)?.into_iter().filter(|k| k % h == 0).collect();
    let above: Vec<u64> = ks.iter().copied().filter(|&k| k > h).collect();
    let ph = pow3(h);
    let at = |tag: ClassTag, k: u64| ClassInstance::new(tag, k);
    let ct1 = ClassInstance::fixed(Ct1, n);
    let e = ClassInstance::fixed(E, n);
    let self_order = b.g.subgroup_order(inst)?;

    match inst.tag {
        R => {
            for &k in &above {
                b.one(r(k), self_order.clone());
            }
        }
        P | Ct | NV | CtOmega => {
            for &k in &ks {
                b.one(r(k), self_order.clone());
                if inst.tag == CtOmega {
                    b.one(at(P, k), self_order.clone());
                    b.one(at(Ct, k), self_order.clone());
                }
            }
            for &k in &above {
                b.one(at(inst.tag, k), self_order.clone());
            }
        }
        N2 | N3 => {
            let i = if inst.tag == N2 { 2 } else { 3 };
            for &k in &ks {
                b.one(r(k), self_order.clone());
            }
            for &k in &above {
                let j = route_hall_divisibility(h, k)?.target(i);
                let tag = [NV, N2, N3][j - 1];
                b.one(at(tag, k), self_order.clone());
            }
        }
        CV => {
            let nv = (&ph + 1u32) * 6u32;
            let cv = (&ph + 1u32) * 2u32;
            for &k in &ks {
                b.one(r(k), nv.clone());
                b.one(at(NV, k), nv.clone());
                b.one(at(Ct, k), cv.clone());
            }
            for &k in &above {
                b.one(at(CV, k), cv.clone());
            }
        }
        DH2 | DH3 => {
            let i = if inst.tag == DH2 { 2 } else { 3 };
            let a = hall_orders(h)?.get(i).clone();
            for &k in &ks {
                if (k / h) % 3 == 0 {
                    b.one(r(k), &a * 24u32);
                    b.one(at(NV, k), &a * 24u32);
                    b.one(at(Ct, k), &a * 8u32);
                    b.one(at(CV, k), &a * 8u32);
                } else {
                    let j = route_hall_divisibility(h, k)?.target(i);
                    b.one(r(k), &a * 6u32);
                    b.one(at([NV, N2, N3][j - 1], k), &a * 6u32);
                }
            }
        }
        F => {
            for &k in &ks {
                let pk = pow3(k);
                b.one(r(k), pow3(2 * k) * (&ph - 1u32));
                b.one(at(P, k), pow3(2 * k) * (&ph - 1u32));
                b.one(at(Ct, k), &pk * (&ph - 1u32));
                b.one(at(CtOmega, k), &pk * (&ph - 1u32));
            }
            for &k in &above {
                let pk = pow3(k);
                let count = exact_div(&(&pk - 1u32), &(&ph - 1u32), "F subfield count")?;
                b.add(at(F, k), vec![(count, pk)]);
            }
        }
        C0 => {
            for &k in &ks {
                let pk = pow3(k);
                b.one(r(k), (&pk - 1u32) * 2u32);
                b.one(at(Ct, k), (&pk - 1u32) * 2u32);
                b.one(at(P, k), &pk - 1u32);
                b.one(at(CtOmega, k), &pk - 1u32);
            }
            for &k in &above {
                b.one(at(C0, k), pow3(k) - 1u32);
            }
        }
        Ct1 => {
            for &k in &ks {
                b.one(r(k), nat(24));
                if k > 1 {
                    b.one(at(Ct, k), nat(24));
                    b.one(at(NV, k), nat(24));
                }
            }
        }
        E => {
            for &k in &ks {
                b.one(r(k), nat(168));
                if k > 1 {
                    b.one(at(Ct, k), nat(24));
                    b.one(at(NV, k), nat(24));
                    b.one(at(CV, k), nat(8));
                }
            }
            b.one(ct1, nat(24));
        }
        V => {
            for &k in &ks {
                let pk = pow3(k);
                b.one(r(k), (&pk + 1u32) * 6u32);
                if k > 1 {
                    b.add(at(NV, k), vec![(nat(1), (&pk + 1u32) * 6u32), (nat(2), nat(8))]);
                    b.add(at(CV, k), vec![(nat(1), (&pk + 1u32) * 2u32), (nat(6), nat(8))]);
                    b.add(
                        at(Ct, k),
                        vec![(nat(1), (&pk + 1u32) * 2u32), (nat(1), nat(8)), (nat(1), nat(24))],
                    );
                }
            }
            b.add(ct1, vec![(nat(2), nat(8)), (nat(1), nat(24))]);
            b.add(e, vec![(nat(7), nat(8))]);
        }
        C6Star | C3Star => {
            for &k in &ks {
                let pk = pow3(k);
                let top = if inst.tag == C6Star { &pk * 2u32 } else { &pk * &pk * 2u32 };
                b.one(r(k), top.clone());
                b.one(at(P, k), top);
                b.one(at(N3, k), nat(6));
                if k > 1 {
                    b.one(at(Ct, k), &pk * 2u32);
                    b.one(at(CtOmega, k), &pk * 2u32);
                    b.one(at(N2, k), nat(6));
                    b.one(at(NV, k), nat(6));
                }
            }
            b.one(ct1, nat(6));
        }
        C2 => {
            for &k in &ks {
                let pk = pow3(k);
                let centraliser = &pk * (&pk * &pk - 1u32);
                b.one(r(k), centraliser.clone());
                b.one(at(P, k), &pk * (&pk - 1u32));
                b.one(at(N3, k), nat(6));
                if k > 1 {
                    b.add(at(Ct, k), vec![(nat(1), centraliser), (nat(2), (&pk + 1u32) * 2u32)]);
                    b.one(at(CtOmega, k), &pk * (&pk - 1u32));
                    b.add(
                        at(NV, k),
                        vec![(nat(1), (&pk + 1u32) * 2u32), (nat(1), nat(8)), (nat(1), nat(24))],
                    );
                    b.add(at(CV, k), vec![(nat(3), (&pk + 1u32) * 2u32), (nat(4), nat(8))]);
                    b.one(at(N2, k), nat(6));
                }
            }
            b.add(ct1, vec![(nat(2), nat(8)), (nat(1), nat(24))]);
            b.add(e, vec![(nat(7), nat(8))]);
        }
        I => {
            for k in b.g.nonzero_mobius_instances() {
                let order = b.g.subgroup_order(&k)?;
                b.one(k, order);
            }
        }
    }
    Ok(())
}
