//! Exact integer helpers, the classical Möbius function, divisor lists and
//! the orders of the cyclic Hall subgroups `a_1(m), a_2(m), a_3(m)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Nonnegative integer of unbounded size.
pub type Natural = BigUint;
/// Signed integer of unbounded size.
pub type Integer = BigInt;
/// Exact rational, always normalised to lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `3^e` as a [`Natural`].
pub fn pow3(e: u64) -> Natural {
    let e = u32::try_from(e).expect("exponent fits in u32");
    Natural::from(3u32).pow(e)
}

/// Exact quotient `a / b`, or an inconsistency error naming `what`.
pub fn exact_div(a: &Natural, b: &Natural, what: &str) -> Result<Natural> {
    if b.is_zero() {
        return Err(Error::Inconsistent(format!("{what}: division by zero")));
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inconsistent(format!("{what}: {a} is not divisible by {b}")))
    }
}

/// Converts a rational known to be a nonnegative integer.
pub fn rational_to_natural(r: &Rational, what: &str) -> Result<Natural> {
    if !r.is_integer() {
        return Err(Error::Inconsistent(format!("{what}: {r} is not an integer")));
    }
    r.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Inconsistent(format!("{what}: {r} is negative")))
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Classical number-theoretic Möbius function.
pub fn moebius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len().is_multiple_of(2) { 1 } else { -1 })
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Orders `a_1(m) = 3^m + 1`, `a_2(m) = 3^m - 3^((m+1)/2) + 1` and
/// `a_3(m) = 3^m + 3^((m+1)/2) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallOrders {
    pub m: u64,
    pub a1: Natural,
    pub a2: Natural,
    pub a3: Natural,
}

impl HallOrders {
    /// `a_i` for `i` in `1..=3`.
    pub fn get(&self, i: usize) -> &Natural {
        match i {
            1 => &self.a1,
            2 => &self.a2,
            3 => &self.a3,
            _ => panic!("Hall index {i} out of range 1..=3"),
        }
    }
}

pub fn hall_orders(m: u64) -> Result<HallOrders> {
    if m == 0 {
        return Err(Error::Zero);
    }
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "m", value: m });
    }
    let p = pow3(m);
    let s = pow3(m.div_ceil(2));
    let one = Natural::one();
    Ok(HallOrders {
        m,
        a1: &p + &one,
        a2: &p - &s + &one,
        a3: &p + &s + &one,
    })
}

/// Which of `a_1(n), a_2(n), a_3(n)` each `a_i(l)` divides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallRouting {
    pub l: u64,
    pub n: u64,
    targets: [u8; 3],
}

impl HallRouting {
    /// Index `j` such that `a_i(l)` divides `a_j(n)`.
    pub fn target(&self, i: usize) -> usize {
        assert!((1..=3).contains(&i), "Hall index {i} out of range 1..=3");
        self.targets[i - 1] as usize
    }

    pub fn target_of_a1(&self) -> usize {
        self.target(1)
    }

    pub fn target_of_a2(&self) -> usize {
        self.target(2)
    }

    pub fn target_of_a3(&self) -> usize {
        self.target(3)
    }
}

fn check_odd_pair(l: u64, n: u64) -> Result<()> {
    if l == 0 || n == 0 {
        return Err(Error::Zero);
    }
    if l.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "l", value: l });
    }
    if n.is_multiple_of(2) {
        return Err(Error::NotOdd { what: "n", value: n });
    }
    if !n.is_multiple_of(l) {
        return Err(Error::NotDivisor { l, n });
    }
    Ok(())
}

/// Routes the Hall orders of the subfield `3^l` into those of `3^n` by the
/// congruence class of `n/l`: everything lands in `a_1(n)` when `3 | n/l`;
/// otherwise `a_2, a_3` keep their index for `n/l ≡ ±1 (mod 12)` and swap
/// for `n/l ≡ ±5 (mod 12)`.
pub fn route_hall_divisibility(l: u64, n: u64) -> Result<HallRouting> {
    check_odd_pair(l, n)?;
    let r = n / l;
    let targets = if r.is_multiple_of(3) {
        [1, 1, 1]
    } else {
        match r % 12 {
            1 | 11 => [1, 2, 3],
            5 | 7 => [1, 3, 2],
            _ => unreachable!("n/l is odd and prime to 3"),
        }
    };
    Ok(HallRouting { l, n, targets })
}

/// Brute-force check of the routing: every nontrivial `a_i(l)` divides
/// exactly one of `a_1(n), a_2(n), a_3(n)`, found by literal division, and
/// that index agrees with [`route_hall_divisibility`].
pub fn verify_unique_divisibility(l: u64, n: u64) -> Result<bool> {
    let routing = route_hall_divisibility(l, n)?;
    let small = hall_orders(l)?;
    let big = hall_orders(n)?;
    for i in 1..=3 {
        let d = small.get(i);
        if d.is_one() {
            continue;
        }
        let hits: Vec<usize> = (1..=3)
            .filter(|&j| (big.get(j) % d).is_zero())
            .collect();
        if hits != [routing.target(i)] {
            return Ok(false);
        }
    }
    Ok(true)
}
