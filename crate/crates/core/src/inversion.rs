//! Hall's Möbius inversion over the Ree catalog.
//!
//! For a target presentation `Γ` the number of epimorphisms `Γ → G` is
//! `φ_Γ(G) = Σ_H μ_G(H) σ_Γ(H)`, summed here class by class as
//! `Σ class_size · μ_G · σ_Γ`. Element counts use elements of order exactly
//! `a`, so `|H|_a` never includes the identity.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::catalog::{element_count, ClassInstance, ReeGroup};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, exact_div, moebius, pow3, Integer, Natural, Rational};

/// One generator of a target presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// Unconstrained generator, counted by `|H|`.
    Any,
    /// Generator of exact order `a`, counted by `|H|_a`.
    Order(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetGroup {
    F2,
    FreeProd2Inf,
    FreeProd3Inf,
    FreeProd6Inf,
    FreeProd9Inf,
    TripleInvolution,
    C3C3,
    Hecke3,
    Hecke6,
    Hecke9,
}

impl TargetGroup {
    pub const ALL: [TargetGroup; 10] = [
        TargetGroup::F2,
        TargetGroup::FreeProd2Inf,
        TargetGroup::FreeProd3Inf,
        TargetGroup::FreeProd6Inf,
        TargetGroup::FreeProd9Inf,
        TargetGroup::TripleInvolution,
        TargetGroup::C3C3,
        TargetGroup::Hecke3,
        TargetGroup::Hecke6,
        TargetGroup::Hecke9,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TargetGroup::F2 => "f2",
            TargetGroup::FreeProd2Inf => "c2-inf",
            TargetGroup::FreeProd3Inf => "c3-inf",
            TargetGroup::FreeProd6Inf => "c6-inf",
            TargetGroup::FreeProd9Inf => "c9-inf",
            TargetGroup::TripleInvolution => "c2c2c2",
            TargetGroup::C3C3 => "c3c3",
            TargetGroup::Hecke3 => "hecke3",
            TargetGroup::Hecke6 => "hecke6",
            TargetGroup::Hecke9 => "hecke9",
        }
    }

    pub fn slots(self) -> Vec<Slot> {
        use Slot::*;
        match self {
            TargetGroup::F2 => vec![Any, Any],
            TargetGroup::FreeProd2Inf => vec![Order(2), Any],
            TargetGroup::FreeProd3Inf => vec![Order(3), Any],
            TargetGroup::FreeProd6Inf => vec![Order(6), Any],
            TargetGroup::FreeProd9Inf => vec![Order(9), Any],
            TargetGroup::TripleInvolution => vec![Order(2); 3],
            TargetGroup::C3C3 => vec![Order(3), Order(3)],
            TargetGroup::Hecke3 => vec![Order(2), Order(3)],
            TargetGroup::Hecke6 => vec![Order(2), Order(6)],
            TargetGroup::Hecke9 => vec![Order(2), Order(9)],
        }
    }

    /// Targets whose normal-subgroup count `d` is stated in the source results.
    pub fn has_published_d(self) -> bool {
        matches!(self, TargetGroup::F2 | TargetGroup::Hecke3)
    }
}

impl fmt::Display for TargetGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TargetGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        TargetGroup::ALL
            .into_iter()
            .find(|t| t.id() == key)
            .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

/// `σ_Γ(H)`: tuples in `H` satisfying the target's order relations.
pub fn sigma(target: TargetGroup, inst: &ClassInstance) -> Result<Natural> {
    let mut acc = Natural::one();
    for slot in target.slots() {
        acc *= match slot {
            Slot::Any => inst.order(),
            Slot::Order(a) => element_count(inst, a)?,
        };
    }
    Ok(acc)
}

/// `Σ class_size · μ_G · σ(H)` for an arbitrary class function `σ`.
pub fn phi_class_sum_with<F>(n: u64, mut sigma_fn: F) -> Result<Integer>
where
    F: FnMut(&ClassInstance) -> Result<Integer>,
{
    let g = ReeGroup::new(n)?;
    let mut total = Integer::zero();
    for inst in g.class_instances() {
        let mu = g.mobius(&inst)?;
        if mu == 0 {
            continue;
        }
        let size = Integer::from(g.class_size(&inst)?);
        total += size * mu * sigma_fn(&inst)?;
    }
    Ok(total)
}

pub fn phi_class_sum(target: TargetGroup, n: u64) -> Result<Natural> {
    let total = phi_class_sum_with(n, |inst| Ok(sigma(target, inst)?.into()))?;
    total
        .to_biguint()
        .ok_or_else(|| Error::Inconsistent(format!("negative class sum for {target} at n={n}")))
}

/// Summand `f(p)` of the printed closed form `|G| Σ_{l|n} μ(n/l) f(3^l)`.
fn closed_form_summand(target: TargetGroup, p: &Integer) -> Integer {
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    let p5 = &p4 * p;
    let p6 = &p5 * p;
    let pm1 = p - 1;
    match target {
        TargetGroup::F2 => pm1 * (p6 - p2 - 16),
        TargetGroup::FreeProd2Inf => pm1 * (p3 - p - 2),
        TargetGroup::TripleInvolution => pm1 * (p4 - p3 + 2 * p2 - 1),
        TargetGroup::FreeProd3Inf => pm1 * (p4 - p3 - p - 4),
        TargetGroup::C3C3 => p * (p2 + p - 4),
        TargetGroup::FreeProd6Inf => pm1 * (p5 - p - 6),
        TargetGroup::FreeProd9Inf => p5 * pm1,
        TargetGroup::Hecke3 => &pm1 * &pm1,
        TargetGroup::Hecke6 => p * (p2 - p - 2),
        TargetGroup::Hecke9 => p2 * pm1,
    }
}

fn mobius_sum(n: u64, mut f: impl FnMut(&Integer) -> Integer) -> Result<Integer> {
    let mut s = Integer::zero();
    for l in divisors(n)? {
        let mu = moebius(n / l)?;
        if mu != 0 {
            s += f(&Integer::from(pow3(l))) * mu;
        }
    }
    Ok(s)
}

/// The printed closed form `|G| Σ_{l|n} μ(n/l) f(3^l)`, evaluated literally.
pub fn phi_closed_form(target: TargetGroup, n: u64) -> Result<Integer> {
    let g = ReeGroup::new(n)?;
    let s = mobius_sum(n, |p| closed_form_summand(target, p))?;
    Ok(Integer::from(g.order().clone()) * s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCount {
    pub value: Natural,
    /// Set for targets whose `d` is not among the published results.
    pub beyond_paper: bool,
}

/// `d_Γ(G) = φ_Γ(G) / |Aut(G)|`.
pub fn d_count(target: TargetGroup, n: u64) -> Result<DCount> {
    let g = ReeGroup::new(n)?;
    let phi = phi_class_sum(target, n)?;
    let value = exact_div(&phi, &g.aut_order(), &format!("d for {target} at n={n}"))?;
    Ok(DCount { value, beyond_paper: !target.has_published_d() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpiCountReport {
    pub target: TargetGroup,
    pub n: u64,
    pub phi_class_sum: Natural,
    pub phi_closed_form: Integer,
    pub d: Option<DCount>,
    pub agree: bool,
}

pub fn epi_count_report(target: TargetGroup, n: u64, with_d: bool) -> Result<EpiCountReport> {
    let class_sum = phi_class_sum(target, n)?;
    let closed = phi_closed_form(target, n)?;
    let d = if with_d { Some(d_count(target, n)?) } else { None };
    Ok(EpiCountReport {
        target,
        n,
        agree: Integer::from(class_sum.clone()) == closed,
        phi_class_sum: class_sum,
        phi_closed_form: closed,
        d,
    })
}

/// Order of a generator in a probability specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenOrder {
    Finite(u32),
    Infinite,
}

impl fmt::Display for GenOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenOrder::Finite(a) => write!(f, "{a}"),
            GenOrder::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProbabilitySpec {
    /// Two random elements of the given orders (`Infinite` means any element).
    Pair(GenOrder, GenOrder),
    /// Three random involutions.
    TripleInvolutions,
}

impl ProbabilitySpec {
    pub const SUPPORTED: [ProbabilitySpec; 10] = {
        use GenOrder::*;
        use ProbabilitySpec::*;
        [
            Pair(Finite(2), Finite(3)),
            Pair(Finite(3), Finite(3)),
            Pair(Infinite, Infinite),
            Pair(Finite(2), Infinite),
            Pair(Finite(3), Infinite),
            Pair(Finite(6), Infinite),
            Pair(Finite(9), Infinite),
            Pair(Finite(2), Finite(6)),
            Pair(Finite(2), Finite(9)),
            TripleInvolutions,
        ]
    };

    /// Target presentation whose `φ` is the numerator.
    pub fn target(self) -> TargetGroup {
        use GenOrder::*;
        match self {
            ProbabilitySpec::TripleInvolutions => TargetGroup::TripleInvolution,
            ProbabilitySpec::Pair(a, b) => match (a, b) {
                (Finite(2), Finite(3)) => TargetGroup::Hecke3,
                (Finite(3), Finite(3)) => TargetGroup::C3C3,
                (Infinite, Infinite) => TargetGroup::F2,
                (Finite(2), Infinite) => TargetGroup::FreeProd2Inf,
                (Finite(3), Infinite) => TargetGroup::FreeProd3Inf,
                (Finite(6), Infinite) => TargetGroup::FreeProd6Inf,
                (Finite(9), Infinite) => TargetGroup::FreeProd9Inf,
                (Finite(2), Finite(6)) => TargetGroup::Hecke6,
                (Finite(2), Finite(9)) => TargetGroup::Hecke9,
                _ => unreachable!("constructed through FromStr or SUPPORTED"),
            },
        }
    }
}

impl fmt::Display for ProbabilitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbabilitySpec::Pair(a, b) => write!(f, "{a},{b}"),
            ProbabilitySpec::TripleInvolutions => f.write_str("2,2,2"),
        }
    }
}

fn parse_order(s: &str) -> Option<GenOrder> {
    match s.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "∞" | "oo" => Some(GenOrder::Infinite),
        t => t.parse().ok().map(GenOrder::Finite),
    }
}

impl FromStr for ProbabilitySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedProbability(s.to_string());
        let parts: Vec<GenOrder> = s
            .split(',')
            .map(parse_order)
            .collect::<Option<_>>()
            .ok_or_else(unsupported)?;
        let spec = match parts.as_slice() {
            [GenOrder::Finite(2), GenOrder::Finite(2), GenOrder::Finite(2)] => {
                ProbabilitySpec::TripleInvolutions
            }
            &[a, b] => ProbabilitySpec::Pair(a.min(b), a.max(b)),
            _ => return Err(unsupported()),
        };
        if ProbabilitySpec::SUPPORTED.contains(&spec) {
            Ok(spec)
        } else {
            Err(unsupported())
        }
    }
}

/// Probability that randomly chosen elements of the given orders generate
/// `R(3^n)`, as an exact rational.
pub fn generation_probability(spec: ProbabilitySpec, n: u64) -> Result<Rational> {
    let g = ReeGroup::new(n)?;
    let full = g.full_group();
    let count = |o: GenOrder| -> Result<Natural> {
        match o {
            GenOrder::Infinite => Ok(g.order().clone()),
            GenOrder::Finite(a) => g.element_count(&full, a),
        }
    };
    let den = match spec {
        ProbabilitySpec::TripleInvolutions => {
            let c = count(GenOrder::Finite(2))?;
            &c * &c * &c
        }
        ProbabilitySpec::Pair(a, b) => count(a)? * count(b)?,
    };
    let num = phi_class_sum(spec.target(), n)?;
    Ok(BigRational::new(num.into(), den.into()))
}

/// `3^n Σ μ(n/l)(3^l − 1)^2 / (3^{3n} + 1)`, the simplified form of `P_{2,3}`.
pub fn p23_simplified(n: u64) -> Result<Rational> {
    ReeGroup::new(n)?;
    let s = mobius_sum(n, |p| (p - 1) * (p - 1))?;
    let num = Integer::from(pow3(n)) * s;
    let den = Integer::from(pow3(3 * n) + 1u32);
    Ok(BigRational::new(num, den))
}

/// `μ_G(H) + Σ_K ν_K(H) μ_G(K)` over the overgroup table equals `1` for
/// `H = G` and `0` otherwise.
pub fn verify_defining_relation(inst: &ClassInstance, n: u64) -> Result<bool> {
    let g = ReeGroup::new(n)?;
    defining_relation_holds(&g, inst)
}

pub fn defining_relation_sum(g: &ReeGroup, inst: &ClassInstance) -> Result<Integer> {
    let table = g.overgroup_table(inst)?;
    let mut s = Integer::from(g.mobius(inst)?);
    for row in &table.rows {
        s += Integer::from(row.nu.clone()) * g.mobius(&row.overgroup)?;
    }
    Ok(s)
}

fn defining_relation_holds(g: &ReeGroup, inst: &ClassInstance) -> Result<bool> {
    let expected = if *inst == g.full_group() { Integer::one() } else { Integer::zero() };
    Ok(defining_relation_sum(g, inst)? == expected)
}

/// `Σ class_size · μ_G` over the proper subgroups with nonzero Möbius value.
pub fn proper_mobius_mass(n: u64) -> Result<Integer> {
    let g = ReeGroup::new(n)?;
    let full = g.full_group();
    let mut s = Integer::zero();
    for inst in g.nonzero_mobius_instances() {
        if inst == full {
            continue;
        }
        s += Integer::from(g.class_size(&inst)?) * g.mobius(&inst)?;
    }
    Ok(s)
}

/// `μ_G(1) = 0`: together with `μ_G(G) = 1`, the proper nonzero classes carry
/// total weight `−1`.
pub fn verify_trivial_mobius(n: u64) -> Result<bool> {
    Ok(proper_mobius_mass(n)? == -Integer::one())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckEntry {
    pub target: TargetGroup,
    pub class_sum: Natural,
    pub closed_form: Integer,
    pub agree: bool,
    /// `class_sum − closed_form`; zero when they agree.
    pub discrepancy: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n: u64,
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheckReport {
    pub fn entry(&self, target: TargetGroup) -> Option<&CrossCheckEntry> {
        self.entries.iter().find(|e| e.target == target)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &CrossCheckEntry> {
        self.entries.iter().filter(|e| !e.agree)
    }
}

/// Compares every class sum against its printed closed form. The class sum is
/// authoritative; disagreements are reported, not raised.
pub fn cross_check_corollaries(n: u64) -> Result<CrossCheckReport> {
    let mut entries = Vec::new();
    for target in TargetGroup::ALL {
        let class_sum = phi_class_sum(target, n)?;
        let closed_form = phi_closed_form(target, n)?;
        let discrepancy = Integer::from(class_sum.clone()) - &closed_form;
        entries.push(CrossCheckEntry {
            target,
            agree: discrepancy.is_zero(),
            class_sum,
            closed_form,
            discrepancy,
        });
    }
    Ok(CrossCheckReport { n, entries })
}

/// Decimal rendering with `sig` significant digits, rounded half up.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);
    // Smallest e with |r| < 10^(e+1).
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        let p = num_traits::pow(ten.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(BigInt::one(), p)
        }
    };
    while a >= pow10(e + 1) {
        e += 1;
    }
    while a < pow10(e) {
        e -= 1;
    }
    let shift = sig as i64 - 1 - e;
    let scaled = &a * pow10(shift);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut digits = if rem * 2 >= *scaled.denom() { q + 1 } else { q };
    if digits.to_string().len() > sig {
        digits /= 10;
        e += 1;
    }
    let digits = digits.to_string();
    let body = if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    } else if (e as usize) + 1 >= sig {
        format!("{}{}", digits, "0".repeat(e as usize + 1 - sig))
    } else {
        let (int, frac) = digits.split_at(e as usize + 1);
        format!("{int}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Floating-point approximation, for display and coarse comparisons only.
pub fn approx_f64(r: &Rational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    let shift = d.bits().max(n.bits()).saturating_sub(60);
    let n = (n >> shift).to_f64().unwrap_or(0.0);
    let d = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
    if r.numer().sign() == Sign::Minus && n > 0.0 {
        -n / d
    } else {
        n / d
    }
}
