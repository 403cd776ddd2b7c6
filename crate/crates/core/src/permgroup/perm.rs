use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`.
///
/// Points are stored 0-based; the cycle-notation parser and printer speak
/// the 1-based convention `(1,3)(2,4)` used everywhere at the interfaces.
/// Composition is left to right: `(f * g)(p) = g(f(p))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &q in &images {
            if q >= n || seen[q] {
                return Err(Error::Domain(format!(
                    "image list {:?} is not a bijection",
                    images
                )));
            }
            seen[q] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping 0-based points `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Builds a permutation from 1-based cycles, e.g. `&[vec![1, 3], vec![2, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let p = cycle[window];
                let q = cycle[(window + 1) % cycle.len()];
                if p < 1 || p > degree || q < 1 || q > degree {
                    return Err(Error::Domain(format!(
                        "cycle point out of range 1..{degree}"
                    )));
                }
                if moved[p - 1] {
                    return Err(Error::Domain(format!("point {p} appears twice in cycles")));
                }
                moved[p - 1] = true;
                images[p - 1] = q - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `p`.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Left-to-right composition: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Permutation { images }
    }

    /// `self` composed with itself `k` times; `pow(0)` is the identity.
    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// 1-based one-line image sequence `(f(1), .., f(n))`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&q| q + 1).collect()
    }

    /// Disjoint cycles on 1-based points, each cycle starting at its
    /// smallest point, cycles ordered by smallest point. Fixed points are
    /// omitted; the identity yields no cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation such as `(1,3)(2,4)`; `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' at \"{rest}\"")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse("unclosed cycle".into()));
            };
            let body = &stripped[..close];
            if !body.is_empty() {
                let mut cycle = Vec::new();
                for tok in body.split(',') {
                    let p: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad cycle point \"{tok}\"")))?;
                    cycle.push(p);
                }
                if cycle.len() > 1 {
                    cycles.push(cycle);
                }
            }
            rest = &stripped[close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// All permutations of degree `n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}
