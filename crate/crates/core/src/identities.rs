//! Linear identities: parsing, printing, canonical naming, enumeration, and
//! the census counts behind the variety numbers.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::permgroup::{all_permutations, Permutation};
use crate::terms::{catalan, decode_bracketing, encode_bracketing, Bracketing, RewriteRule, Term};

/// A linear identity `<n|i|j|f>`: both sides have `n` variables, `i` and `j`
/// are the bracketing labels of the two sides, and `f` maps left-hand
/// variable positions to right-hand positions (the variable at position `p`
/// on the left occupies position `f(p)` on the right).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearIdentity {
    n: usize,
    lhs: u64,
    rhs: u64,
    f: Permutation,
}

impl LinearIdentity {
    pub fn new(n: usize, lhs: u64, rhs: u64, f: Permutation) -> Result<Self> {
        let c = catalan(n)?;
        if lhs >= c || rhs >= c {
            return Err(Error::OutOfRange {
                what: "bracketing label",
                value: lhs.max(rhs),
                max: c - 1,
            });
        }
        if f.degree() != n {
            return Err(Error::Domain(format!(
                "permutation degree {} does not match length {n}",
                f.degree()
            )));
        }
        Ok(LinearIdentity { n, lhs, rhs, f })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lhs(&self) -> u64 {
        self.lhs
    }

    pub fn rhs(&self) -> u64 {
        self.rhs
    }

    pub fn f(&self) -> &Permutation {
        &self.f
    }

    /// `<i|i|()>` holds in every groupoid.
    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs && self.f.is_identity()
    }

    /// The same identity read right to left: `<j|i|f^-1>`.
    pub fn swap(&self) -> LinearIdentity {
        LinearIdentity {
            n: self.n,
            lhs: self.rhs,
            rhs: self.lhs,
            f: self.f.inverse(),
        }
    }

    /// Of `self` and `self.swap()`, the one with the smaller left label;
    /// ties between `f` and its inverse go to the lexicographically smaller
    /// one-line image.
    pub fn canonicalize(&self) -> LinearIdentity {
        if self.lhs < self.rhs {
            return self.clone();
        }
        if self.lhs > self.rhs {
            return self.swap();
        }
        if self.f.one_line() <= self.f.inverse().one_line() {
            self.clone()
        } else {
            self.swap()
        }
    }

    /// The two sides as pattern terms for the rewriting engine.
    pub fn rule(&self) -> RewriteRule {
        let lhs_shape = decode_bracketing(self.n, self.lhs).expect("validated label");
        let rhs_shape = decode_bracketing(self.n, self.rhs).expect("validated label");
        RewriteRule {
            lhs: Term::from_shape(&lhs_shape),
            rhs: term_with_leaves(&rhs_shape, &self.f.inverse().one_line()),
        }
    }

    /// Surface syntax, e.g. `(xy)z=y(zx)`.
    pub fn surface(&self) -> String {
        let rule = self.rule();
        format!("{}={}", term_to_surface(&rule.lhs), term_to_surface(&rule.rhs))
    }

    /// Sort key used everywhere canonical output order is promised.
    pub fn sort_key(&self) -> (usize, u64, u64, Vec<usize>) {
        (self.n, self.lhs, self.rhs, self.f.one_line())
    }
}

impl fmt::Display for LinearIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}|{}|{}|{}>", self.n, self.lhs, self.rhs, self.f)
    }
}

impl Serialize for LinearIdentity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn term_with_leaves(shape: &Bracketing, leaves: &[usize]) -> Term {
    fn go(shape: &Bracketing, leaves: &mut std::slice::Iter<usize>) -> Term {
        match shape {
            Bracketing::Leaf => Term::Leaf(*leaves.next().unwrap()),
            Bracketing::Pair(l, r) => {
                let left = go(l, leaves);
                let right = go(r, leaves);
                Term::pair(left, right)
            }
        }
    }
    go(shape, &mut leaves.iter())
}

/// Output letter for variable index `v` (1-based): x, y, z, u, v, w, then
/// subscripted names.
pub fn variable_name(v: usize) -> String {
    const LETTERS: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    if v >= 1 && v <= 6 {
        LETTERS[v - 1].to_string()
    } else {
        format!("x{v}")
    }
}

fn term_to_surface(t: &Term) -> String {
    fn go(t: &Term, top: bool, out: &mut String) {
        match t {
            Term::Leaf(v) => out.push_str(&variable_name(*v)),
            Term::Pair(l, r) => {
                if !top {
                    out.push('(');
                }
                go(l, false, out);
                go(r, false, out);
                if !top {
                    out.push(')');
                }
            }
        }
    }
    let mut out = String::new();
    go(t, true, &mut out);
    out
}

/// Parses an identity in either form: the name syntax `<n|i|j|f>` or the
/// surface syntax `lhs=rhs` with single-letter variables.
pub fn parse_identity(text: &str) -> Result<LinearIdentity> {
    let trimmed = text.trim();
    if trimmed.starts_with('<') {
        parse_name(trimmed)
    } else {
        parse_surface(trimmed)
    }
}

fn parse_name(text: &str) -> Result<LinearIdentity> {
    let inner = text
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .ok_or_else(|| Error::Parse(format!("name \"{text}\" is not <n|i|j|f>")))?;
    let parts: Vec<&str> = inner.split('|').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!(
            "name \"{text}\" must have four |-separated fields"
        )));
    }
    let n: usize = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad length \"{}\"", parts[0])))?;
    let lhs: u64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad label \"{}\"", parts[1])))?;
    let rhs: u64 = parts[2]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad label \"{}\"", parts[2])))?;
    let f = Permutation::parse(n, parts[3].trim())?;
    LinearIdentity::new(n, lhs, rhs, f)
}

fn parse_surface(text: &str) -> Result<LinearIdentity> {
    let Some((lhs_text, rhs_text)) = text.split_once('=') else {
        return Err(Error::Parse("identity must contain '='".into()));
    };
    let mut vars: Vec<String> = Vec::new();
    let lhs = parse_surface_term(lhs_text, &mut vars, true)?;
    let n = vars.len();
    let rhs = parse_surface_term(rhs_text, &mut vars, false)?;
    if !lhs.is_linear() {
        return Err(Error::Parse(format!(
            "left side \"{}\" is not linear",
            lhs_text.trim()
        )));
    }
    if rhs.length() != n || !rhs.is_linear() {
        return Err(Error::Parse(format!(
            "right side \"{}\" must use the same variables exactly once",
            rhs_text.trim()
        )));
    }
    let lhs_label = encode_bracketing(&lhs.shape())?;
    let rhs_label = encode_bracketing(&rhs.shape())?;
    // f(p) = position of left-hand variable p on the right.
    let mut images = vec![0; n];
    for (q, v) in rhs.leaves().into_iter().enumerate() {
        images[v - 1] = q;
    }
    let f = Permutation::from_images(images)?;
    LinearIdentity::new(n, lhs_label, rhs_label, f)
}

/// Parses a juxtaposition term. On the left side (`introduce = true`) new
/// variables are assigned indices in order of first appearance; on the right
/// an unknown variable is an error.
fn parse_surface_term(text: &str, vars: &mut Vec<String>, introduce: bool) -> Result<Term> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (t, used) = parse_term_factors(&chars, 0, vars, introduce)?;
    if used != chars.len() {
        return Err(Error::Parse(format!(
            "unexpected '{}' in term \"{}\"",
            chars[used],
            text.trim()
        )));
    }
    Ok(t)
}

fn parse_term_factors(
    chars: &[char],
    mut pos: usize,
    vars: &mut Vec<String>,
    introduce: bool,
) -> Result<(Term, usize)> {
    let mut acc: Option<Term> = None;
    loop {
        let factor = match chars.get(pos) {
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = c.to_string();
                pos += 1;
                while let Some(d) = chars.get(pos).filter(|d| d.is_ascii_digit()) {
                    name.push(*d);
                    pos += 1;
                }
                let index = match vars.iter().position(|v| *v == name) {
                    Some(i) => i + 1,
                    None if introduce => {
                        vars.push(name);
                        vars.len()
                    }
                    None => {
                        return Err(Error::Parse(format!(
                            "variable \"{name}\" does not occur on the left side"
                        )))
                    }
                };
                Term::Leaf(index)
            }
            Some('(') => {
                let (inner, next) = parse_term_factors(chars, pos + 1, vars, introduce)?;
                if chars.get(next) != Some(&')') {
                    return Err(Error::Parse(format!("unclosed '(' at position {pos}")));
                }
                pos = next + 1;
                inner
            }
            _ => break,
        };
        acc = Some(match acc {
            None => factor,
            Some(prev) => Term::pair(prev, factor),
        });
    }
    match acc {
        Some(t) => Ok((t, pos)),
        None => Err(Error::Parse(format!("expected a factor at position {pos}"))),
    }
}

/// Every canonical linear identity of length `2n`, sorted by
/// `(lhs, rhs, one-line image)`. With `nontrivial_only` the trivial
/// identities `<i|i|()>` are dropped.
pub fn enumerate_identities(
    n: usize,
    nontrivial_only: bool,
    limits: &Limits,
) -> Result<Vec<LinearIdentity>> {
    if n < 2 || n > limits.max_enumerate {
        return Err(Error::Guard(format!(
            "enumeration length {n} outside 2..={}",
            limits.max_enumerate
        )));
    }
    let c = catalan(n)?;
    let perms = all_permutations(n);
    let mut out = Vec::new();
    for i in 0..c {
        for j in i..c {
            for f in &perms {
                if i == j {
                    // Keep one representative of {f, f^-1}.
                    if f.one_line() > f.inverse().one_line() {
                        continue;
                    }
                    if nontrivial_only && f.is_identity() {
                        continue;
                    }
                }
                out.push(LinearIdentity::new(n, i, j, f.clone())?);
            }
        }
    }
    Ok(out)
}

/// Element-order table of `S_n` and the three identity/variety totals.
#[derive(Debug, Clone, Serialize)]
pub struct VarietyCensus {
    pub n: usize,
    /// `s[m]` = number of elements of order `m` in `S_n`; `s[0]` is unused.
    pub s: Vec<u64>,
    /// `phi[m]` = Euler totient of `m`, for the same index range.
    pub phi: Vec<u64>,
    /// All linear identities of length `2n`, up to side swapping.
    pub total_identities: u64,
    /// The same count without the trivial `<i|i|()>` identities.
    pub nontrivial_identities: u64,
    /// Varieties defined by a single linear identity of length `2n`,
    /// including the trivial variety.
    pub varieties: u64,
}

pub fn euler_phi(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Counts `s_{n,m}` by iterating all of `S_n` and evaluates the identity
/// and variety totals.
pub fn census(n: usize, limits: &Limits) -> Result<VarietyCensus> {
    if n < 2 || n > limits.max_census {
        return Err(Error::Guard(format!(
            "census length {n} outside 2..={}",
            limits.max_census
        )));
    }
    let mut s: Vec<u64> = vec![0; 2];
    for f in all_permutations(n) {
        let order = f.order();
        if s.len() <= order {
            s.resize(order + 1, 0);
        }
        s[order] += 1;
    }
    let phi: Vec<u64> = (0..s.len() as u64).map(euler_phi).collect();

    let c = catalan(n)?;
    let fact: u64 = (1..=n as u64).product();
    let s2 = s.get(2).copied().unwrap_or(0);
    let total_identities = c * (c * fact + 1 + s2) / 2;
    let nontrivial_identities = c * (c * fact - 1 + s2) / 2;

    // 1 + binom(C_n, 2) n! + C_n * (number of nontrivial cyclic subgroups).
    let mut cyclic = 0u64;
    for m in 2..s.len() {
        debug_assert_eq!(s[m] % phi[m], 0);
        cyclic += s[m] / phi[m];
    }
    let varieties = 1 + c * (c - 1) / 2 * fact + c * cyclic;

    Ok(VarietyCensus {
        n,
        s,
        phi,
        total_identities,
        nontrivial_identities,
        varieties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(text: &str) -> LinearIdentity {
        parse_identity(text).unwrap()
    }

    #[test]
    fn parse_known_names() {
        assert_eq!(id("(xy)z=y(zx)").to_string(), "<3|0|1|(1,3,2)>");
        assert_eq!(id("((xy)u)v=(xu)(vy)").to_string(), "<4|0|2|(2,4,3)>");
        assert_eq!(id("xy=xy").to_string(), "<2|0|0|()>");
        assert!(id("xy=xy").is_trivial());
    }

    #[test]
    fn name_syntax_round_trip() {
        let i = id("<4|3|3|(1,2,3,4)>");
        assert_eq!(i.surface(), "x((yz)u)=u((xy)z)");
        assert_eq!(id(&i.surface()), i);
        assert_eq!(id("<4|3|3|(1,3)(2,4)>").surface(), "x((yz)u)=z((ux)y)");
    }

    #[test]
    fn parse_errors_name_the_problem() {
        assert!(parse_identity("(xx)y=y(xx)").is_err());
        assert!(parse_identity("(xy)z=y(zw)").is_err());
        assert!(parse_identity("(xy)z").is_err());
        assert!(parse_identity("<3|0|5|()>").is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let f = Permutation::parse(3, "(1,2,3)").unwrap();
        let i = LinearIdentity::new(3, 1, 0, f).unwrap();
        assert_eq!(i.canonicalize().to_string(), "<3|0|1|(1,3,2)>");

        let i = id("<3|0|0|()>");
        assert_eq!(i.canonicalize(), i);

        let i = id("<3|0|0|(1,3,2)>");
        assert_eq!(i.canonicalize().to_string(), "<3|0|0|(1,2,3)>");
    }

    #[test]
    fn canonicalize_is_idempotent_and_orbit_constant() {
        let limits = Limits::default();
        for i in enumerate_identities(4, false, &limits).unwrap() {
            let c = i.canonicalize();
            assert_eq!(c.canonicalize(), c);
            assert_eq!(i.swap().canonicalize(), c);
        }
    }

    #[test]
    fn enumeration_counts_match_formulas() {
        let limits = Limits::default();
        for n in 2..=4 {
            let census = census(n, &limits).unwrap();
            let all = enumerate_identities(n, false, &limits).unwrap();
            let nontrivial = enumerate_identities(n, true, &limits).unwrap();
            assert_eq!(all.len() as u64, census.total_identities);
            assert_eq!(nontrivial.len() as u64, census.nontrivial_identities);
        }
        let n2 = enumerate_identities(2, true, &limits).unwrap();
        assert_eq!(n2.len(), 1);
        assert_eq!(n2[0].to_string(), "<2|0|0|(1,2)>");
        assert_eq!(
            enumerate_identities(3, true, &limits).unwrap().len(),
            14
        );
        assert_eq!(
            enumerate_identities(4, true, &limits).unwrap().len(),
            320
        );
        assert!(enumerate_identities(6, true, &limits).is_err());
    }

    #[test]
    fn census_matches_reference_table() {
        let limits = Limits::default();
        assert_eq!(census(3, &limits).unwrap().varieties, 15);
        let c5 = census(5, &limits).unwrap();
        assert_eq!(c5.s[2], 25);
        assert_eq!(c5.s[6], 20);
        assert_eq!(census(6, &limits).unwrap().varieties, 635_083);
        assert!(census(9, &limits).is_err());
    }

    #[test]
    fn involution_count_formula() {
        // s_{n,2} = sum over 2m of binom(n, 2m) * 1*3*5*..*(2m-1)
        for n in 2..=8usize {
            let c = census(n, &Limits::default()).unwrap();
            let mut expected = 0u64;
            let mut m = 1;
            while 2 * m <= n {
                let binom = {
                    let mut acc = 1u64;
                    for k in 0..2 * m {
                        acc = acc * (n - k) as u64 / (k + 1) as u64;
                    }
                    acc
                };
                let double_fact: u64 = (1..=m as u64).map(|k| 2 * k - 1).product();
                expected += binom * double_fact;
                m += 1;
            }
            assert_eq!(c.s[2], expected, "n = {n}");
        }
    }

    #[test]
    fn surface_round_trip_over_enumeration() {
        let limits = Limits::default();
        for n in [3, 4] {
            for i in enumerate_identities(n, false, &limits).unwrap() {
                assert_eq!(parse_identity(&i.surface()).unwrap(), i);
                assert_eq!(parse_identity(&i.to_string()).unwrap(), i);
            }
        }
    }

    #[test]
    fn subscripted_variables_round_trip() {
        let i = LinearIdentity::new(
            7,
            0,
            0,
            Permutation::parse(7, "(1,7)").unwrap(),
        )
        .unwrap();
        let surface = i.surface();
        assert!(surface.contains("x7"));
        assert_eq!(parse_identity(&surface).unwrap(), i);
    }
}
