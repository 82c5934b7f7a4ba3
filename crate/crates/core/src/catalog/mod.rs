//! Conjugacy classes of subgroups of `G = R(3^n)` that arise as intersections
//! of maximal subgroups, together with their orders, normalisers, Möbius
//! values and element counts.
//!
//! Classes are parameterised by a subfield exponent `h | n`. Classes without a
//! field parameter (`Ct1`, `E`, `V`, `C6star`, `C3star`, `C2`, `I`) carry
//! `h = n` by convention.

mod overgroups;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{divisors, exact_div, hall_orders, moebius, pow3, HallOrders, Natural};

pub use overgroups::{nu_count, overgroup_table, NormaliserClass, OvergroupRow, OvergroupTable};

/// Element orders tabulated per class.
pub const ELEMENT_ORDERS: [u32; 4] = [2, 3, 6, 9];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    /// Subfield subgroups `R(3^h)`.
    R,
    /// Parabolic subgroups `(3^h)^{1+1+1}:(3^h-1)`.
    P,
    /// Involution centralisers `2 x L2(3^h)`, `h > 1`.
    Ct,
    /// Four-group normalisers `(2^2 x D_{(3^h+1)/2}):3`, `h > 1`.
    NV,
    /// Normalisers `a_2(h):6` of Hall subgroups of order `a_2(h)`, `h > 1`.
    N2,
    /// Normalisers `a_3(h):6` of Hall subgroups of order `a_3(h)`.
    N3,
    /// Four-group centralisers `2^2 x D_{(3^h+1)/2}`, `h > 1`.
    CV,
    /// Dihedral `D_{2 a_2(h)}`, when `3h | n` and `h > 1`.
    DH2,
    /// Dihedral `D_{2 a_3(h)}`, when `3h | n`.
    DH3,
    /// Point stabilisers of involution centralisers `2 x (3^h:(3^h-1)/2)`, `h > 1`.
    CtOmega,
    /// Elementary abelian `3^h`, `h > 1`.
    F,
    /// Cyclic `3^h - 1`, `h > 1`.
    C0,
    /// `2 x L2(3)`.
    Ct1,
    /// Sylow 2-subgroups `2^3`.
    E,
    /// Four-groups.
    V,
    /// Cyclic of order 6 generated by `tu`.
    C6Star,
    /// Cyclic of order 3 generated by `u`.
    C3Star,
    /// Cyclic of order 2.
    C2,
    /// Trivial subgroup.
    I,
}

impl ClassTag {
    pub const ALL: [ClassTag; 19] = [
        ClassTag::R,
        ClassTag::N3,
        ClassTag::N2,
        ClassTag::P,
        ClassTag::Ct,
        ClassTag::CtOmega,
        ClassTag::NV,
        ClassTag::CV,
        ClassTag::Ct1,
        ClassTag::E,
        ClassTag::DH2,
        ClassTag::DH3,
        ClassTag::F,
        ClassTag::C0,
        ClassTag::V,
        ClassTag::C6Star,
        ClassTag::C3Star,
        ClassTag::C2,
        ClassTag::I,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::R => "R",
            ClassTag::P => "P",
            ClassTag::Ct => "Ct",
            ClassTag::NV => "NV",
            ClassTag::N2 => "N2",
            ClassTag::N3 => "N3",
            ClassTag::CV => "CV",
            ClassTag::DH2 => "DH2",
            ClassTag::DH3 => "DH3",
            ClassTag::CtOmega => "CtOmega",
            ClassTag::F => "F",
            ClassTag::C0 => "C0",
            ClassTag::Ct1 => "Ct1",
            ClassTag::E => "E",
            ClassTag::V => "V",
            ClassTag::C6Star => "C6star",
            ClassTag::C3Star => "C3star",
            ClassTag::C2 => "C2",
            ClassTag::I => "I",
        }
    }

    /// Classes without a field parameter.
    pub fn is_parameterless(self) -> bool {
        matches!(
            self,
            ClassTag::Ct1
                | ClassTag::E
                | ClassTag::V
                | ClassTag::C6Star
                | ClassTag::C3Star
                | ClassTag::C2
                | ClassTag::I
        )
    }

    /// Classes whose Möbius value is nonzero (for squarefree `n/h`).
    pub fn has_nonzero_mobius(self) -> bool {
        matches!(
            self,
            ClassTag::R
                | ClassTag::N3
                | ClassTag::N2
                | ClassTag::P
                | ClassTag::Ct
                | ClassTag::CtOmega
                | ClassTag::NV
                | ClassTag::CV
                | ClassTag::Ct1
                | ClassTag::E
        )
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Inconsistent(format!("unknown class tag {s}")))
    }
}

/// A conjugacy class of subgroups: tag plus field parameter `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassInstance {
    pub tag: ClassTag,
    pub h: u64,
}

impl ClassInstance {
    pub fn new(tag: ClassTag, h: u64) -> Self {
        ClassInstance { tag, h }
    }

    /// Instance of a parameterless class inside `R(3^n)`.
    pub fn fixed(tag: ClassTag, n: u64) -> Self {
        debug_assert!(tag.is_parameterless());
        ClassInstance { tag, h: n }
    }

    /// Whether the class exists in `R(3^n)`.
    pub fn is_applicable(&self, n: u64) -> bool {
        let h = self.h;
        if h == 0 || !n.is_multiple_of(h) {
            return false;
        }
        match self.tag {
            t if t.is_parameterless() => h == n,
            ClassTag::R | ClassTag::P | ClassTag::N3 => true,
            ClassTag::N2
            | ClassTag::Ct
            | ClassTag::NV
            | ClassTag::CV
            | ClassTag::CtOmega
            | ClassTag::F
            | ClassTag::C0 => h > 1,
            ClassTag::DH2 => h > 1 && n.is_multiple_of(3 * h),
            ClassTag::DH3 => n.is_multiple_of(3 * h),
            _ => unreachable!(),
        }
    }

    /// `|H|` for a subgroup in the class.
    pub fn order(&self) -> Natural {
        subgroup_order_unchecked(self)
    }

    /// Isomorphism type with the field parameter substituted.
    pub fn label(&self) -> String {
        let h = self.h;
        let s = h.div_ceil(2);
        match self.tag {
            ClassTag::R => format!("R(3^{h})"),
            ClassTag::P => format!("(3^{h})^(1+1+1):(3^{h}-1)"),
            ClassTag::Ct => format!("2 x L2(3^{h})"),
            ClassTag::NV => format!("(2^2 x D_((3^{h}+1)/2)):3"),
            ClassTag::N2 => format!("(3^{h}-3^{s}+1):6"),
            ClassTag::N3 => format!("(3^{h}+3^{s}+1):6"),
            ClassTag::CV => format!("2^2 x D_((3^{h}+1)/2)"),
            ClassTag::DH2 => format!("D_(2(3^{h}-3^{s}+1))"),
            ClassTag::DH3 => format!("D_(2(3^{h}+3^{s}+1))"),
            ClassTag::CtOmega => format!("2 x (3^{h}:(3^{h}-1)/2)"),
            ClassTag::F => format!("3^{h}"),
            ClassTag::C0 => format!("C_(3^{h}-1)"),
            ClassTag::Ct1 => "2 x L2(3)".to_string(),
            ClassTag::E => "2^3".to_string(),
            ClassTag::V => "2^2".to_string(),
            ClassTag::C6Star => "C6".to_string(),
            ClassTag::C3Star => "C3".to_string(),
            ClassTag::C2 => "C2".to_string(),
            ClassTag::I => "1".to_string(),
        }
    }
}

impl fmt::Display for ClassInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag.is_parameterless() {
            write!(f, "{}", self.tag)
        } else {
            write!(f, "{}({})", self.tag, self.h)
        }
    }
}

/// `n`, `q = 3^n` and `|R(q)| = q^3 (q^3 + 1)(q - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupParams {
    pub n: u64,
    pub q: Natural,
    pub order: Natural,
}

impl GroupParams {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::UnsupportedRank { n });
        }
        let q = pow3(n);
        let order = ree_order(n);
        Ok(GroupParams { n, q, order })
    }
}

/// `|R(3^h)|` for any odd `h`, including the non-simple `R(3)`.
pub fn ree_order(h: u64) -> Natural {
    let p = pow3(h);
    let p3 = pow3(3 * h);
    &p3 * (&p3 + 1u32) * (p - 1u32)
}

pub fn group_order(n: u64) -> Result<Natural> {
    Ok(GroupParams::new(n)?.order)
}

/// `|Aut(R(3^n))| = n |R(3^n)|` (field automorphisms only).
pub fn aut_order(n: u64) -> Result<Natural> {
    Ok(group_order(n)? * n)
}

/// Derived data of a class instance inside a fixed `R(3^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub instance: ClassInstance,
    pub label: String,
    pub subgroup_order: Natural,
    pub normaliser_order: Natural,
    pub mobius: i64,
    pub class_size: Natural,
    pub elem_counts: BTreeMap<u32, Natural>,
}

/// `R(3^n)` with its class catalogue.
#[derive(Debug, Clone)]
pub struct ReeGroup {
    params: GroupParams,
}

impl ReeGroup {
    pub fn new(n: u64) -> Result<Self> {
        Ok(ReeGroup { params: GroupParams::new(n)? })
    }

    pub fn n(&self) -> u64 {
        self.params.n
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn order(&self) -> &Natural {
        &self.params.order
    }

    pub fn aut_order(&self) -> Natural {
        &self.params.order * self.params.n
    }

    /// `R(3^n)` itself, as the top subfield class.
    pub fn full_group(&self) -> ClassInstance {
        ClassInstance::new(ClassTag::R, self.n())
    }

    /// Every applicable class: the ten nonzero-μ families first (each
    /// expanded over divisors), then the zero-μ classes.
    pub fn class_instances(&self) -> Vec<ClassInstance> {
        let n = self.n();
        let divs = divisors(n).expect("n >= 3");
        let mut out = Vec::new();
        for tag in ClassTag::ALL {
            if tag.is_parameterless() {
                out.push(ClassInstance::fixed(tag, n));
                continue;
            }
            for &h in &divs {
                let inst = ClassInstance::new(tag, h);
                if inst.is_applicable(n) {
                    out.push(inst);
                }
            }
        }
        out
    }

    /// Instances with `μ_G ≠ 0` in general (those of the ten Möbius families).
    pub fn nonzero_mobius_instances(&self) -> Vec<ClassInstance> {
        self.class_instances()
            .into_iter()
            .filter(|i| i.tag.has_nonzero_mobius())
            .collect()
    }

    fn check(&self, inst: &ClassInstance) -> Result<()> {
        if inst.is_applicable(self.n()) {
            Ok(())
        } else {
            Err(Error::Inapplicable { instance: *inst, n: self.n() })
        }
    }

    fn hall(&self, h: u64) -> HallOrders {
        hall_orders(h).expect("h is an odd divisor")
    }

    pub fn subgroup_order(&self, inst: &ClassInstance) -> Result<Natural> {
        self.check(inst)?;
        Ok(subgroup_order_unchecked(inst))
    }

    /// `|N_G(H)|` for a representative `H` of the class.
    pub fn normaliser_order(&self, inst: &ClassInstance) -> Result<Natural> {
        self.check(inst)?;
        let n = self.n();
        let h = inst.h;
        let ph = pow3(h);
        let q = &self.params.q;
        let order = match inst.tag {
            ClassTag::R
            | ClassTag::P
            | ClassTag::Ct
            | ClassTag::NV
            | ClassTag::N2
            | ClassTag::N3
            | ClassTag::CtOmega
            | ClassTag::Ct1 => subgroup_order_unchecked(inst),
            ClassTag::CV => (ph + 1u32) * 6u32,
            ClassTag::DH2 => self.hall(h).a2 * 24u32,
            ClassTag::DH3 => self.hall(h).a3 * 24u32,
            ClassTag::F => pow3(2 * n) * (ph - 1u32),
            ClassTag::C0 => (q - 1u32) * 2u32,
            ClassTag::E => Natural::from(168u32),
            ClassTag::V => (q + 1u32) * 6u32,
            ClassTag::C6Star => q * 2u32,
            ClassTag::C3Star => q * q * 2u32,
            ClassTag::C2 => q * (q * q - 1u32),
            ClassTag::I => self.params.order.clone(),
        };
        Ok(order)
    }

    /// Number of subgroups in the class, `[G : N_G(H)]`.
    pub fn class_size(&self, inst: &ClassInstance) -> Result<Natural> {
        let norm = self.normaliser_order(inst)?;
        exact_div(&self.params.order, &norm, &format!("class size of {inst}"))
    }

    /// `μ_G(H)` for the class.
    pub fn mobius(&self, inst: &ClassInstance) -> Result<i64> {
        self.check(inst)?;
        let n = self.n();
        let rel = moebius(n / inst.h)?;
        Ok(match inst.tag {
            ClassTag::R | ClassTag::CtOmega => rel,
            ClassTag::N2 | ClassTag::N3 | ClassTag::P | ClassTag::Ct | ClassTag::NV => -rel,
            ClassTag::CV => 3 * rel,
            ClassTag::Ct1 => -2 * moebius(n)?,
            ClassTag::E => 21 * moebius(n)?,
            _ => 0,
        })
    }

    pub fn element_count(&self, inst: &ClassInstance, k: u32) -> Result<Natural> {
        self.check(inst)?;
        element_count(inst, k)
    }

    pub fn class_record(&self, inst: &ClassInstance) -> Result<ClassRecord> {
        self.check(inst)?;
        let elem_counts = ELEMENT_ORDERS
            .iter()
            .map(|&k| Ok((k, element_count(inst, k)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(ClassRecord {
            instance: *inst,
            label: inst.label(),
            subgroup_order: self.subgroup_order(inst)?,
            normaliser_order: self.normaliser_order(inst)?,
            mobius: self.mobius(inst)?,
            class_size: self.class_size(inst)?,
            elem_counts,
        })
    }

    pub fn records(&self) -> Result<Vec<ClassRecord>> {
        self.class_instances().iter().map(|i| self.class_record(i)).collect()
    }

    pub fn overgroup_table(&self, inst: &ClassInstance) -> Result<OvergroupTable> {
        overgroups::table_for(self, inst)
    }
}

fn subgroup_order_unchecked(inst: &ClassInstance) -> Natural {
    let h = inst.h;
    let ph = pow3(h);
    let hall = || hall_orders(h).expect("odd h");
    match inst.tag {
        ClassTag::R => ree_order(h),
        ClassTag::P => pow3(3 * h) * (ph - 1u32),
        ClassTag::Ct => &ph * (&ph * &ph - 1u32),
        ClassTag::NV => (ph + 1u32) * 6u32,
        ClassTag::CV => (ph + 1u32) * 2u32,
        ClassTag::N2 => hall().a2 * 6u32,
        ClassTag::N3 => hall().a3 * 6u32,
        ClassTag::DH2 => hall().a2 * 2u32,
        ClassTag::DH3 => hall().a3 * 2u32,
        ClassTag::CtOmega => &ph * (&ph - 1u32),
        ClassTag::F => ph,
        ClassTag::C0 => ph - 1u32,
        ClassTag::Ct1 => BigUint::from(24u32),
        ClassTag::E => BigUint::from(8u32),
        ClassTag::V => BigUint::from(4u32),
        ClassTag::C6Star => BigUint::from(6u32),
        ClassTag::C3Star => BigUint::from(3u32),
        ClassTag::C2 => BigUint::from(2u32),
        ClassTag::I => BigUint::from(1u32),
    }
}

/// Number of elements of order exactly `k` in a subgroup of the class.
///
/// Orders 2, 3, 6 follow the character-table counts; order 9 occurs only in
/// subfield subgroups and their parabolics. Zero-μ classes are counted from
/// their isomorphism type.
pub fn element_count(inst: &ClassInstance, k: u32) -> Result<Natural> {
    if !ELEMENT_ORDERS.contains(&k) {
        return Err(Error::UnsupportedElementOrder(k));
    }
    let h = inst.h;
    let p = pow3(h);
    let p2 = &p * &p;
    let p3 = &p2 * &p;
    let n = |v: u32| Natural::from(v);
    let zero = Natural::zero;
    let cyclic_hall = |a: Natural| match k {
        2 => a,
        3 | 6 => a * 2u32,
        _ => Natural::zero(),
    };
    let count = match inst.tag {
        ClassTag::R => match k {
            2 => &p2 * (&p2 - &p + 1u32),
            3 => (&p3 + 1u32) * (&p2 - 1u32),
            _ => &p2 * (&p3 + 1u32) * (&p - 1u32),
        },
        ClassTag::N2 => cyclic_hall(hall_orders(h)?.a2),
        ClassTag::N3 => cyclic_hall(hall_orders(h)?.a3),
        ClassTag::P => match k {
            2 => p2,
            3 => p2 - 1u32,
            _ => &p2 * (&p - 1u32),
        },
        ClassTag::Ct => match k {
            2 => &p2 - &p + 1u32,
            3 | 6 => p2 - 1u32,
            _ => zero(),
        },
        ClassTag::CtOmega => match k {
            2 => n(1),
            3 | 6 => p - 1u32,
            _ => zero(),
        },
        ClassTag::NV => match k {
            2 => p + 4u32,
            3 | 6 => (p + 1u32) * 2u32,
            _ => zero(),
        },
        ClassTag::CV => match k {
            2 => p + 4u32,
            _ => zero(),
        },
        ClassTag::Ct1 => match k {
            2 => n(7),
            3 | 6 => n(8),
            _ => zero(),
        },
        ClassTag::E => match k {
            2 => n(7),
            _ => zero(),
        },
        ClassTag::DH2 | ClassTag::DH3 => match k {
            2 => {
                let hall = hall_orders(h)?;
                if inst.tag == ClassTag::DH2 {
                    hall.a2
                } else {
                    hall.a3
                }
            }
            _ => zero(),
        },
        ClassTag::F => match k {
            3 => p - 1u32,
            _ => zero(),
        },
        ClassTag::C0 => match k {
            2 => n(1),
            _ => zero(),
        },
        ClassTag::V => match k {
            2 => n(3),
            _ => zero(),
        },
        ClassTag::C6Star => match k {
            2 => n(1),
            3 | 6 => n(2),
            _ => zero(),
        },
        ClassTag::C3Star => match k {
            3 => n(2),
            _ => zero(),
        },
        ClassTag::C2 => match k {
            2 => n(1),
            _ => zero(),
        },
        ClassTag::I => zero(),
    };
    Ok(count)
}

pub fn class_instances(n: u64) -> Result<Vec<ClassInstance>> {
    Ok(ReeGroup::new(n)?.class_instances())
}

pub fn class_record(inst: &ClassInstance, n: u64) -> Result<ClassRecord> {
    ReeGroup::new(n)?.class_record(inst)
}
