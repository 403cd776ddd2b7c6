//! Identity-hedrons: the directed multigraph of single rule applications on
//! all bracketings of a given length, and implication by journey search.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::identities::LinearIdentity;
use crate::permgroup::Permutation;
use crate::terms::{all_rewrites, catalan, decode_bracketing, encode_bracketing, Term};

/// The hedron of a linear identity at term length `m`: one node per
/// bracketing label in `[0, C_m)` (isolated nodes included), and one arrow
/// per single application, labelled by the induced leaf permutation. Every
/// arrow is accompanied by its inverse.
#[derive(Debug, Clone)]
pub struct Hedron {
    m: usize,
    node_count: u64,
    arrows: Vec<(u64, u64, Permutation)>,
}

impl Hedron {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn node_count(&self) -> u64 {
        self.node_count
    }

    /// Arrows `(src, dst, perm)`, sorted by `(src, dst, one-line image)`.
    pub fn arrows(&self) -> &[(u64, u64, Permutation)] {
        &self.arrows
    }

    /// Outgoing arrows grouped by source node.
    pub fn adjacency(&self) -> Vec<Vec<(u64, &Permutation)>> {
        let mut adj: Vec<Vec<(u64, &Permutation)>> = vec![Vec::new(); self.node_count as usize];
        for (src, dst, perm) in &self.arrows {
            adj[*src as usize].push((*dst, perm));
        }
        adj
    }
}

/// Builds `H(identity, m)` by exhaustively rewriting the canonical linear
/// term of every shape. Arrows are deduplicated as `(src, dst, perm)`
/// triples; inverse arrows arise from the reverse rule direction.
pub fn build_hedron(identity: &LinearIdentity, m: usize, limits: &Limits) -> Result<Hedron> {
    if m < 1 {
        return Err(Error::OutOfRange {
            what: "term length",
            value: m as u64,
            max: u64::MAX,
        });
    }
    let node_count = catalan(m)?;
    if node_count > limits.max_hedron_nodes {
        return Err(Error::Guard(format!(
            "hedron with {node_count} nodes exceeds limit {}",
            limits.max_hedron_nodes
        )));
    }
    let rule = identity.rule();
    let mut arrows = BTreeSet::new();
    for src in 0..node_count {
        let term = Term::from_shape(&decode_bracketing(m, src)?);
        for (step, result) in all_rewrites(&term, &rule) {
            let dst = encode_bracketing(&result.shape())?;
            arrows.insert((src, dst, step.perm));
        }
    }
    Ok(Hedron {
        m,
        node_count,
        arrows: arrows.into_iter().collect(),
    })
}

/// A node of the hedron together with the permutation accumulated along the
/// journey so far (composed left to right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JourneyState {
    pub node: u64,
    pub perm: Permutation,
}

/// Lexicographic rank of a permutation among all of its degree, used to
/// index the visited bitmap.
fn perm_rank(p: &Permutation) -> usize {
    let n = p.degree();
    let mut rank = 0usize;
    let line: Vec<usize> = (0..n).map(|q| p.apply(q)).collect();
    for i in 0..n {
        let smaller = line[i + 1..].iter().filter(|&&x| x < line[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

fn check_bfs_guard(m: usize, limits: &Limits) -> Result<u64> {
    let states = catalan(m)? * factorial_usize(m) as u64;
    if states > limits.max_bfs_states {
        return Err(Error::Guard(format!(
            "{states} journey states exceed limit {}",
            limits.max_bfs_states
        )));
    }
    Ok(states)
}

/// All states reachable from `(start, id)` in `H(identity, m)`.
pub fn reachable_states(
    identity: &LinearIdentity,
    m: usize,
    start: u64,
    limits: &Limits,
) -> Result<Vec<JourneyState>> {
    check_bfs_guard(m, limits)?;
    let hedron = build_hedron(identity, m, limits)?;
    Ok(reachable_in(&hedron, start))
}

fn reachable_in(hedron: &Hedron, start: u64) -> Vec<JourneyState> {
    let m = hedron.m;
    let fact = factorial_usize(m);
    let adj = hedron.adjacency();
    let mut visited = vec![false; hedron.node_count as usize * fact];
    let index = |s: &JourneyState| s.node as usize * fact + perm_rank(&s.perm);
    let initial = JourneyState {
        node: start,
        perm: Permutation::identity(m),
    };
    visited[index(&initial)] = true;
    let mut queue = std::collections::VecDeque::from([initial.clone()]);
    let mut out = vec![initial];
    while let Some(state) = queue.pop_front() {
        for (dst, arrow_perm) in &adj[state.node as usize] {
            let next = JourneyState {
                node: *dst,
                perm: state.perm.compose(arrow_perm),
            };
            let idx = index(&next);
            if !visited[idx] {
                visited[idx] = true;
                queue.push_back(next.clone());
                out.push(next);
            }
        }
    }
    out
}

/// Whether `premise` implies `conclusion`: is the conclusion's right side,
/// carrying the conclusion's permutation, reachable by a journey from its
/// left side in the premise's hedron?
pub fn implies(
    premise: &LinearIdentity,
    conclusion: &LinearIdentity,
    limits: &Limits,
) -> Result<bool> {
    if conclusion.is_trivial() {
        return Ok(true);
    }
    let m = conclusion.n();
    check_bfs_guard(m, limits)?;
    let hedron = build_hedron(premise, m, limits)?;
    let target = JourneyState {
        node: conclusion.rhs(),
        perm: conclusion.f().clone(),
    };
    Ok(reachable_in(&hedron, conclusion.lhs()).contains(&target))
}

/// All nontrivial linear identities of length `2m` implied by the given
/// identity, from full reachability over every source bracketing. The set is
/// closed under side-swapping and counts an identity and its swap
/// separately, matching how the literature counts journeys (45 for the
/// AC-nice identity at m=4); canonicalize the members to collapse the swap
/// pairs.
pub fn implied_set(
    identity: &LinearIdentity,
    m: usize,
    limits: &Limits,
) -> Result<BTreeSet<LinearIdentity>> {
    check_bfs_guard(m, limits)?;
    let hedron = build_hedron(identity, m, limits)?;
    let mut out = BTreeSet::new();
    for start in 0..hedron.node_count {
        for state in reachable_in(&hedron, start) {
            let implied = LinearIdentity::new(m, start, state.node, state.perm)?;
            if !implied.is_trivial() {
                out.insert(implied);
            }
        }
    }
    Ok(out)
}

/// DOT rendering: node names are bracketing strings, edge labels are
/// cycle-notation permutations, output order is deterministic.
pub fn to_dot(hedron: &Hedron) -> String {
    let mut out = String::from("digraph hedron {\n");
    for label in 0..hedron.node_count {
        let name = decode_bracketing(hedron.m, label).expect("node label in range");
        writeln!(out, "    \"{name}\";").unwrap();
    }
    for (src, dst, perm) in &hedron.arrows {
        let src_name = decode_bracketing(hedron.m, *src).unwrap();
        let dst_name = decode_bracketing(hedron.m, *dst).unwrap();
        writeln!(out, "    \"{src_name}\" -> \"{dst_name}\" [label=\"{perm}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct ArrowRecord {
    src: u64,
    dst: u64,
    perm: String,
}

#[derive(Serialize)]
struct HedronRecord {
    m: usize,
    nodes: u64,
    arrows: Vec<ArrowRecord>,
}

/// JSON rendering of the arrow list.
pub fn to_json(hedron: &Hedron) -> String {
    let record = HedronRecord {
        m: hedron.m,
        nodes: hedron.node_count,
        arrows: hedron
            .arrows
            .iter()
            .map(|(src, dst, perm)| ArrowRecord {
                src: *src,
                dst: *dst,
                perm: perm.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&record).expect("hedron serializes")
}
