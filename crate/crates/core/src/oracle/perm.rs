use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., d-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::Parse { line: 0, message: "permutation of degree 0".into() });
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("image {i} out of range for degree {}", images.len()),
            })?;
            if *slot {
                return Err(Error::Parse { line: 0, message: format!("image {i} repeated") });
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("point {} exceeds degree {degree}", a.max(b)),
                    });
                }
                if std::mem::replace(&mut touched[a as usize], true) {
                    return Err(Error::Parse { line: 0, message: format!("point {a} in two cycles") });
                }
                images[a as usize] = b;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    fn padded(mut self, degree: usize) -> Permutation {
        let d = self.images.len() as u32;
        self.images.extend(d..degree as u32);
        self
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn parse_cycles(line: &str, line_no: usize) -> Result<Vec<Vec<u32>>> {
    let err = |message: String| Error::Parse { line: line_no, message };
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| err(format!("expected '(' at {rest:?}")))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle".into()))?;
        let points = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<u32>() {
                Ok(0) | Err(_) => Err(err(format!("bad point {t:?} (points are 1-based)"))),
                Ok(p) => Ok(p - 1),
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Reads one permutation per line in 1-based cycle notation, e.g.
/// `(1 2 3)(4 5)` or `(1,2,3)`. Blank lines and lines starting with `#` are
/// skipped; the degree is the largest point mentioned anywhere.
pub fn parse_permutations(text: &str) -> Result<Vec<Permutation>> {
    let mut parsed = Vec::new();
    let mut degree = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cycles = parse_cycles(line, i + 1)?;
        let max = cycles.iter().flatten().map(|&p| p as usize + 1).max().unwrap_or(0);
        degree = degree.max(max);
        parsed.push((i + 1, cycles, max));
    }
    let degree = degree.max(1);
    parsed
        .into_iter()
        .map(|(line, cycles, max)| {
            let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
            Permutation::from_cycles(max.max(1), &refs)
                .map(|p| p.padded(degree))
                .map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse { line, message },
                    other => other,
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let ps = parse_permutations("# S4\n(1 2)\n\n(1,2,3,4)\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].degree(), 4);
        assert_eq!(ps[0].to_string(), "(1 2)");
        assert_eq!(ps[1].to_string(), "(1 2 3 4)");
        assert_eq!(ps[1].order(), 4);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_permutations("(1 2)\n(0 1)"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_permutations("(1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_permutations("(1 2)(2 3)"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_permutations("1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn composition_and_inverse() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = a.then(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.order(), 3);
        assert!(ab.then(&ab.inverse()).is_identity());
        assert!(Permutation::new(vec![0, 0]).is_err());
    }
}
