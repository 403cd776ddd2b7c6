//! Finite groupoid tables: verification against linear identities, direct
//! products, and exhaustive smallest-model search.

use crate::error::{Error, Limits, Result};
use crate::identities::LinearIdentity;
use crate::terms::Term;

/// A finite magma as an order-`k` multiplication table, row-major with
/// entries in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidTable {
    k: usize,
    entries: Vec<usize>,
}

impl GroupoidTable {
    pub fn new(k: usize, entries: Vec<usize>) -> Result<Self> {
        if k == 0 || entries.len() != k * k {
            return Err(Error::Domain(format!(
                "an order-{k} table needs {} entries, got {}",
                k * k,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= k) {
            return Err(Error::OutOfRange {
                what: "table entry",
                value: bad as u64,
                max: k as u64 - 1,
            });
        }
        Ok(GroupoidTable { k, entries })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.k + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Text format: first line the order, then `k` rows of `k` entries.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut numbers = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for token in line.split_whitespace() {
                let value: usize = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad table entry {token:?}")))?;
                numbers.push(value);
            }
        }
        let (first, rest) = numbers
            .split_first()
            .ok_or_else(|| Error::Parse("empty table".into()))?;
        GroupoidTable::new(*first, rest.to_vec())
    }

    fn eval(&self, term: &Term, assignment: &[usize]) -> usize {
        match term {
            Term::Leaf(v) => assignment[v - 1],
            Term::Pair(l, r) => self.product(self.eval(l, assignment), self.eval(r, assignment)),
        }
    }

    /// The first assignment (in lexicographic order, one value per variable)
    /// on which the identity fails, or `None` if the table satisfies it.
    pub fn counterexample(&self, identity: &LinearIdentity) -> Option<Vec<usize>> {
        let rule = identity.rule();
        let n = identity.n();
        let mut assignment = vec![0usize; n];
        loop {
            if self.eval(&rule.lhs, &assignment) != self.eval(&rule.rhs, &assignment) {
                return Some(assignment);
            }
            let mut pos = n;
            while pos > 0 && assignment[pos - 1] == self.k - 1 {
                assignment[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                return None;
            }
            assignment[pos - 1] += 1;
        }
    }

    pub fn satisfies(&self, identity: &LinearIdentity) -> bool {
        self.counterexample(identity).is_none()
    }
}

impl std::fmt::Display for GroupoidTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.k)?;
        for row in self.entries.chunks(self.k) {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Componentwise product on `k1*k2` elements, pair `(a, b)` at index
/// `a*k2 + b`.
pub fn direct_product(t1: &GroupoidTable, t2: &GroupoidTable) -> GroupoidTable {
    let (k1, k2) = (t1.order(), t2.order());
    let k = k1 * k2;
    let mut entries = vec![0; k * k];
    for a1 in 0..k1 {
        for b1 in 0..k2 {
            for a2 in 0..k1 {
                for b2 in 0..k2 {
                    let x = a1 * k2 + b1;
                    let y = a2 * k2 + b2;
                    entries[x * k + y] = t1.product(a1, a2) * k2 + t2.product(b1, b2);
                }
            }
        }
    }
    GroupoidTable { k, entries }
}

/// Result of a smallest-model search: the model, if any, and the orders
/// proven to admit none.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub model: Option<GroupoidTable>,
    pub exhausted_orders: Vec<usize>,
}

struct Searcher<'a> {
    k: usize,
    cells: Vec<Option<usize>>,
    satisfy: &'a [LinearIdentity],
    violate: &'a [LinearIdentity],
}

impl Searcher<'_> {
    fn eval_partial(&self, term: &Term, assignment: &[usize]) -> Option<usize> {
        match term {
            Term::Leaf(v) => Some(assignment[v - 1]),
            Term::Pair(l, r) => {
                let a = self.eval_partial(l, assignment)?;
                let b = self.eval_partial(r, assignment)?;
                self.cells[a * self.k + b]
            }
        }
    }

    /// No ground instance of a satisfy identity may evaluate to distinct
    /// values on both sides; instances touching undefined cells stay open.
    fn consistent(&self) -> bool {
        for identity in self.satisfy {
            let rule = identity.rule();
            let n = identity.n();
            let mut assignment = vec![0usize; n];
            loop {
                if let (Some(l), Some(r)) = (
                    self.eval_partial(&rule.lhs, &assignment),
                    self.eval_partial(&rule.rhs, &assignment),
                ) {
                    if l != r {
                        return false;
                    }
                }
                let mut pos = n;
                while pos > 0 && assignment[pos - 1] == self.k - 1 {
                    assignment[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
                assignment[pos - 1] += 1;
            }
        }
        true
    }

    fn dfs(&mut self, cell: usize) -> Option<GroupoidTable> {
        if cell == self.k * self.k {
            // Satisfy constraints already hold; violate constraints are only
            // refutable on complete tables, so they are checked last.
            let table = GroupoidTable {
                k: self.k,
                entries: self.cells.iter().map(|c| c.unwrap()).collect(),
            };
            if self.violate.iter().all(|psi| !table.satisfies(psi)) {
                return Some(table);
            }
            return None;
        }
        for value in 0..self.k {
            self.cells[cell] = Some(value);
            if self.consistent() {
                if let Some(table) = self.dfs(cell + 1) {
                    return Some(table);
                }
            }
        }
        self.cells[cell] = None;
        None
    }
}

/// The smallest groupoid satisfying every identity of `satisfy` and none of
/// `violate`, trying orders `1..=max_order`. Cells are filled row-major with
/// values in ascending order, so ties break to the lexicographically least
/// table.
pub fn search_model(
    satisfy: &[LinearIdentity],
    violate: &[LinearIdentity],
    max_order: usize,
    limits: &Limits,
) -> Result<SearchOutcome> {
    if max_order > limits.max_search_order {
        return Err(Error::Guard(format!(
            "search limited to order {} (got {max_order})",
            limits.max_search_order
        )));
    }
    let mut exhausted = Vec::new();
    for k in 1..=max_order {
        let mut searcher = Searcher {
            k,
            cells: vec![None; k * k],
            satisfy,
            violate,
        };
        if let Some(model) = searcher.dfs(0) {
            return Ok(SearchOutcome {
                model: Some(model),
                exhausted_orders: exhausted,
            });
        }
        exhausted.push(k);
    }
    Ok(SearchOutcome {
        model: None,
        exhausted_orders: exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::parse_identity;

    fn id(text: &str) -> LinearIdentity {
        parse_identity(text).unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# comment\n3\n0 1 0\n0 1 2  # trailing\n1 1 1\n";
        let t = GroupoidTable::parse(text).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.product(2, 0), 1);
        let reparsed = GroupoidTable::parse(&t.to_string()).unwrap();
        assert_eq!(t, reparsed);
    }

    #[test]
    fn parse_rejects_bad_tables() {
        assert!(GroupoidTable::parse("").is_err());
        assert!(GroupoidTable::parse("2\n0 1\n0").is_err());
        assert!(GroupoidTable::parse("2\n0 1\n0 2").is_err());
        assert!(GroupoidTable::parse("2\n0 x\n0 1").is_err());
    }

    #[test]
    fn satisfies_with_counterexample() {
        let t = GroupoidTable::parse("3\n0 1 0\n0 1 2\n1 1 1").unwrap();
        assert!(t.satisfies(&id("x(yz)=y(xz)")));
        assert!(!t.satisfies(&id("(xy)z=y(zx)")));
        let witness = t.counterexample(&id("(xy)z=y(zx)")).unwrap();
        let l = t.product(t.product(witness[0], witness[1]), witness[2]);
        let r = t.product(witness[1], t.product(witness[2], witness[0]));
        assert_ne!(l, r);
    }

    #[test]
    fn order_one_satisfies_everything() {
        let t = GroupoidTable::new(1, vec![0]).unwrap();
        for text in ["xy=yx", "(xy)z=y(zx)", "((xy)u)v=(xu)(vy)"] {
            assert!(t.satisfies(&id(text)));
        }
    }

    #[test]
    fn product_with_trivial_table_is_identity_map() {
        let t = GroupoidTable::parse("3\n0 1 0\n0 1 2\n1 1 1").unwrap();
        let one = GroupoidTable::new(1, vec![0]).unwrap();
        assert_eq!(direct_product(&t, &one).entries(), t.entries());
    }

    #[test]
    fn products_preserve_satisfaction() {
        let phi = id("x(yz)=y(xz)");
        let t = GroupoidTable::parse("3\n0 1 0\n0 1 2\n1 1 1").unwrap();
        let p = direct_product(&t, &t);
        assert_eq!(p.order(), 9);
        assert!(p.satisfies(&phi));
        assert!(!p.satisfies(&id("(xy)z=y(zx)")));
    }

    #[test]
    fn search_finds_trivial_models() {
        let limits = Limits::default();
        let comm = id("xy=yx");
        let out = search_model(&[comm.clone()], &[], 1, &limits).unwrap();
        assert_eq!(out.model.unwrap().order(), 1);
        assert!(out.exhausted_orders.is_empty());

        // Nothing both satisfies and violates commutativity.
        let out = search_model(&[comm.clone()], &[comm], 2, &limits).unwrap();
        assert!(out.model.is_none());
        assert_eq!(out.exhausted_orders, vec![1, 2]);
    }

    #[test]
    fn search_respects_the_guard() {
        assert!(search_model(&[], &[], 7, &Limits::default()).is_err());
    }

    #[test]
    fn search_matches_brute_force_at_tiny_orders() {
        let limits = Limits::default();
        let satisfy = [id("xy=yx")];
        let violate = [id("(xy)z=x(yz)")];
        let out = search_model(&satisfy, &violate, 2, &limits).unwrap();
        // Brute force over every order-2 table.
        let mut brute: Option<GroupoidTable> = None;
        'outer: for code in 0..(2usize).pow(4) {
            let entries: Vec<usize> = (0..4).map(|i| (code >> (3 - i)) & 1).collect();
            let t = GroupoidTable::new(2, entries).unwrap();
            if satisfy.iter().all(|p| t.satisfies(p)) && violate.iter().all(|p| !t.satisfies(p)) {
                brute = Some(t);
                break 'outer;
            }
        }
        match (out.model, brute) {
            (Some(found), Some(_)) => {
                assert!(satisfy.iter().all(|p| found.satisfies(p)));
                assert!(violate.iter().all(|p| !found.satisfies(p)));
            }
            (None, None) => {}
            (found, brute) => panic!("search {found:?} disagrees with brute force {brute:?}"),
        }
    }
}
