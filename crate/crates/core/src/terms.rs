//! Bracketings, the Catalan labeling codec, labelled terms, and single-step
//! rewriting by a linear rewrite rule.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// Table of bracketing counts `C_1..C_max`, where `C_n` counts the
/// bracketings of a product of `n` factors (`C_1 = C_2 = 1`).
#[derive(Debug, Clone)]
pub struct CatalanTable {
    values: Vec<u64>, // values[n-1] = C_n
}

impl CatalanTable {
    pub fn up_to(max: usize) -> Self {
        assert!(max >= 1);
        let mut values: Vec<u64> = Vec::with_capacity(max);
        values.push(1);
        for n in 2..=max {
            let c: u64 = (1..n).map(|i| values[i - 1] * values[n - i - 1]).sum();
            values.push(c);
        }
        CatalanTable { values }
    }

    pub fn max(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Result<u64> {
        if n == 0 || n > self.values.len() {
            return Err(Error::OutOfRange {
                what: "catalan index",
                value: n as u64,
                max: self.values.len() as u64,
            });
        }
        Ok(self.values[n - 1])
    }
}

const DEFAULT_CATALAN_MAX: usize = 20;

fn default_table() -> &'static CatalanTable {
    static TABLE: OnceLock<CatalanTable> = OnceLock::new();
    TABLE.get_or_init(|| CatalanTable::up_to(DEFAULT_CATALAN_MAX))
}

/// The number of bracketings of `n` factors, for `1 <= n <= 20`.
pub fn catalan(n: usize) -> Result<u64> {
    default_table().get(n)
}

/// The shape of a fully parenthesized product: a leaf, or a pair of
/// sub-bracketings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracketing {
    Leaf,
    Pair(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn pair(left: Bracketing, right: Bracketing) -> Self {
        Bracketing::Pair(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn length(&self) -> usize {
        match self {
            Bracketing::Leaf => 1,
            Bracketing::Pair(l, r) => l.length() + r.length(),
        }
    }

    /// Parses `*` / `◦` placeholder notation, e.g. `((*(**))*)*`.
    /// Juxtaposed factors associate to the left.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (b, used) = parse_factors(&chars, 0)?;
        if used != chars.len() {
            return Err(Error::Parse(format!(
                "unexpected '{}' at position {used}",
                chars[used]
            )));
        }
        Ok(b)
    }
}

fn parse_factors(chars: &[char], mut pos: usize) -> Result<(Bracketing, usize)> {
    let mut acc: Option<Bracketing> = None;
    loop {
        match chars.get(pos) {
            Some('*') | Some('◦') => {
                pos += 1;
                acc = Some(match acc {
                    None => Bracketing::Leaf,
                    Some(prev) => Bracketing::pair(prev, Bracketing::Leaf),
                });
            }
            Some('(') => {
                let (inner, next) = parse_factors(chars, pos + 1)?;
                if chars.get(next) != Some(&')') {
                    return Err(Error::Parse(format!("unclosed '(' at position {pos}")));
                }
                pos = next + 1;
                acc = Some(match acc {
                    None => inner,
                    Some(prev) => Bracketing::pair(prev, inner),
                });
            }
            _ => break,
        }
    }
    match acc {
        Some(b) => Ok((b, pos)),
        None => Err(Error::Parse(format!("expected a factor at position {pos}"))),
    }
}

impl fmt::Display for Bracketing {
    /// Placeholder notation; non-leaf children are parenthesized, the top
    /// pair is not.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(b: &Bracketing, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
            match b {
                Bracketing::Leaf => write!(f, "*"),
                Bracketing::Pair(l, r) => {
                    if !top {
                        write!(f, "(")?;
                    }
                    go(l, f, false)?;
                    go(r, f, false)?;
                    if !top {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, true)
    }
}

/// Label of a bracketing in `[0, C_n)`:
/// leaves get 0, and a pair of lengths `(n-m, m)` gets
/// `sum_{i<m} C_i*C_{n-i} + b(right)*C_{n-m} + b(left)`.
pub fn encode_bracketing(t: &Bracketing) -> Result<u64> {
    let table = default_table();
    encode_with(t, table)
}

fn encode_with(t: &Bracketing, table: &CatalanTable) -> Result<u64> {
    match t {
        Bracketing::Leaf => Ok(0),
        Bracketing::Pair(l, r) => {
            let n = t.length();
            let m = r.length();
            let prefix: u64 = (1..m)
                .map(|i| Ok(table.get(i)? * table.get(n - i)?))
                .sum::<Result<u64>>()?;
            Ok(prefix + encode_with(r, table)? * table.get(n - m)? + encode_with(l, table)?)
        }
    }
}

/// Inverse of `encode_bracketing` for bracketings of `n` factors.
pub fn decode_bracketing(n: usize, label: u64) -> Result<Bracketing> {
    let table = default_table();
    if label >= table.get(n)? {
        return Err(Error::OutOfRange {
            what: "bracketing label",
            value: label,
            max: table.get(n)? - 1,
        });
    }
    decode_with(n, label, table)
}

fn decode_with(n: usize, label: u64, table: &CatalanTable) -> Result<Bracketing> {
    if n == 1 {
        return Ok(Bracketing::Leaf);
    }
    // Largest m whose prefix sum still fits under the label.
    let mut m = 1;
    let mut prefix = 0u64;
    loop {
        let next = prefix + table.get(m)? * table.get(n - m)?;
        if m + 1 > n - 1 || next > label {
            break;
        }
        prefix = next;
        m += 1;
    }
    let d = label - prefix;
    let right_label = d / table.get(n - m)?;
    let left_label = d % table.get(n - m)?;
    Ok(Bracketing::pair(
        decode_with(n - m, left_label, table)?,
        decode_with(m, right_label, table)?,
    ))
}

/// A groupoid term: the shape of a `Bracketing` with a variable index
/// (1-based) at each leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(usize),
    Pair(Box<Term>, Box<Term>),
}

impl Term {
    pub fn pair(left: Term, right: Term) -> Self {
        Term::Pair(Box::new(left), Box::new(right))
    }

    pub fn length(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Pair(l, r) => l.length() + r.length(),
        }
    }

    pub fn shape(&self) -> Bracketing {
        match self {
            Term::Leaf(_) => Bracketing::Leaf,
            Term::Pair(l, r) => Bracketing::pair(l.shape(), r.shape()),
        }
    }

    /// Leaf variable indices, left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Term::Leaf(v) => out.push(*v),
            Term::Pair(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// The canonical linear term of the given shape: variables `1..n` left
    /// to right.
    pub fn from_shape(shape: &Bracketing) -> Term {
        fn go(shape: &Bracketing, next: &mut usize) -> Term {
            match shape {
                Bracketing::Leaf => {
                    let v = *next;
                    *next += 1;
                    Term::Leaf(v)
                }
                Bracketing::Pair(l, r) => {
                    let left = go(l, next);
                    let right = go(r, next);
                    Term::pair(left, right)
                }
            }
        }
        let mut next = 1;
        go(shape, &mut next)
    }

    /// True iff the term of length `n` carries each of `1..n` exactly once.
    pub fn is_linear(&self) -> bool {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        leaves.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// One side of a descent into a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Direction in which a rule `lhs = rhs` is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    LhsToRhs,
    RhsToLhs,
}

/// A linear rewrite rule: two linear pattern terms over the same variables.
#[derive(Debug, Clone)]
pub struct RewriteRule {
    pub lhs: Term,
    pub rhs: Term,
}

/// One application of a rule to a term: where, which way, and the induced
/// permutation of the whole term's leaf positions (position `p` of the
/// source ends at position `perm(p)` of the result; blocks move with their
/// subtree).
#[derive(Debug, Clone)]
pub struct RewriteStep {
    pub path: Vec<Side>,
    pub direction: Direction,
    pub perm: Permutation,
}

/// Every single-step rewrite of `u` by the rule, in either direction.
/// Pattern variables bind whole subtrees; the list is empty when nothing
/// matches.
pub fn all_rewrites(u: &Term, rule: &RewriteRule) -> Vec<(RewriteStep, Term)> {
    let m = u.length();
    let positions = Term::from_shape(&u.shape());
    let mut matches = Vec::new();
    collect_matches(u, rule, &mut Vec::new(), &mut matches);
    matches
        .into_iter()
        .map(|(path, direction)| {
            let (src, dst) = match direction {
                Direction::LhsToRhs => (&rule.lhs, &rule.rhs),
                Direction::RhsToLhs => (&rule.rhs, &rule.lhs),
            };
            let rewritten = rewrite_here(subterm(u, &path), src, dst).unwrap();
            let result = splice(u, &path, rewritten);
            // Run the same step on a position-labelled copy to read off the
            // induced leaf permutation.
            let pos_rewritten = rewrite_here(subterm(&positions, &path), src, dst).unwrap();
            let pos_result = splice(&positions, &path, pos_rewritten);
            let mut images = vec![0; m];
            for (q, p) in pos_result.leaves().into_iter().enumerate() {
                images[p - 1] = q;
            }
            let perm = Permutation::from_images(images).expect("rewrites permute leaves");
            (
                RewriteStep {
                    path,
                    direction,
                    perm,
                },
                result,
            )
        })
        .collect()
}

fn collect_matches(
    u: &Term,
    rule: &RewriteRule,
    path: &mut Vec<Side>,
    out: &mut Vec<(Vec<Side>, Direction)>,
) {
    for (direction, src, dst) in [
        (Direction::LhsToRhs, &rule.lhs, &rule.rhs),
        (Direction::RhsToLhs, &rule.rhs, &rule.lhs),
    ] {
        if rewrite_here(u, src, dst).is_some() {
            out.push((path.clone(), direction));
        }
    }
    if let Term::Pair(l, r) = u {
        path.push(Side::Left);
        collect_matches(l, rule, path, out);
        path.pop();
        path.push(Side::Right);
        collect_matches(r, rule, path, out);
        path.pop();
    }
}

fn subterm<'a>(u: &'a Term, path: &[Side]) -> &'a Term {
    match path.split_first() {
        None => u,
        Some((side, rest)) => {
            let Term::Pair(l, r) = u else {
                unreachable!("path descends into a leaf")
            };
            match side {
                Side::Left => subterm(l, rest),
                Side::Right => subterm(r, rest),
            }
        }
    }
}

/// Applies `src -> dst` at the root of `u`, or `None` if the pattern does
/// not match.
fn rewrite_here(u: &Term, src: &Term, dst: &Term) -> Option<Term> {
    let n = src.length();
    let mut bindings: Vec<Option<&Term>> = vec![None; n + 1];
    if !bind(src, u, &mut bindings) {
        return None;
    }
    Some(substitute(dst, &bindings))
}

fn bind<'a>(pattern: &Term, subject: &'a Term, bindings: &mut Vec<Option<&'a Term>>) -> bool {
    match pattern {
        Term::Leaf(v) => {
            bindings[*v] = Some(subject);
            true
        }
        Term::Pair(pl, pr) => match subject {
            Term::Leaf(_) => false,
            Term::Pair(sl, sr) => bind(pl, sl, bindings) && bind(pr, sr, bindings),
        },
    }
}

fn substitute(pattern: &Term, bindings: &[Option<&Term>]) -> Term {
    match pattern {
        Term::Leaf(v) => bindings[*v].unwrap().clone(),
        Term::Pair(l, r) => Term::pair(substitute(l, bindings), substitute(r, bindings)),
    }
}

fn splice(u: &Term, path: &[Side], replacement: Term) -> Term {
    match path.split_first() {
        None => replacement,
        Some((side, rest)) => {
            let Term::Pair(l, r) = u else {
                unreachable!("path descends into a leaf")
            };
            match side {
                Side::Left => Term::pair(splice(l, rest, replacement), (**r).clone()),
                Side::Right => Term::pair((**l).clone(), splice(r, rest, replacement)),
            }
        }
    }
}
