//! Equal-length implication without graph search, variety equality, and the
//! classification of identities into varieties.

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::identities::{enumerate_identities, LinearIdentity};

/// Equal-length implication between nontrivial identities: `phi` implies
/// `psi` iff they are the same identity, or both sides of both identities
/// share one bracketing and `psi`'s permutation is a nonzero power of
/// `phi`'s.
pub fn implies_fast(phi: &LinearIdentity, psi: &LinearIdentity) -> Result<bool> {
    if phi.is_trivial() || psi.is_trivial() {
        return Err(Error::Domain(
            "the fast implication test needs nontrivial identities".into(),
        ));
    }
    if phi.n() != psi.n() {
        return Err(Error::Domain(
            "the fast implication test needs identities of equal length".into(),
        ));
    }
    // The power criterion assumes n >= 3; at n = 2 commutativity is the only
    // nontrivial identity and the same test gives the right answer.
    let phi = phi.canonicalize();
    let psi = psi.canonicalize();
    if phi == psi {
        return Ok(true);
    }
    if !(phi.lhs() == phi.rhs() && psi.lhs() == psi.rhs() && phi.lhs() == psi.lhs()) {
        return Ok(false);
    }
    let mut power = phi.f().clone();
    loop {
        if power == *psi.f() || power.inverse() == *psi.f() {
            return Ok(true);
        }
        if power.is_identity() {
            return Ok(false);
        }
        power = power.compose(phi.f());
    }
}

/// Whether two identities define the same variety. Identities of different
/// lengths never do; equal lengths are decided by mutual `implies_fast`.
/// Trivial identities all define the variety of all groupoids.
pub fn same_variety(phi: &LinearIdentity, psi: &LinearIdentity) -> bool {
    match (phi.is_trivial(), psi.is_trivial()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        (false, false) => {}
    }
    if phi.n() != psi.n() {
        return false;
    }
    implies_fast(phi, psi).unwrap() && implies_fast(psi, phi).unwrap()
}

/// A variety defined by a single linear identity, listed by its canonical
/// member identities.
#[derive(Debug, Clone, Serialize)]
pub struct VarietyClass {
    /// Least member under `(lhs, rhs, one-line image)`.
    pub representative: LinearIdentity,
    /// All canonical identities defining this variety, sorted.
    pub members: Vec<LinearIdentity>,
    /// Human label, where one is established.
    pub annotation: Option<&'static str>,
}

impl VarietyClass {
    /// Alternative names for the display column: the non-canonical swapped
    /// form of each member, plus members beyond the representative.
    pub fn equivalent_names(&self) -> Vec<LinearIdentity> {
        let mut out = Vec::new();
        for member in &self.members {
            if *member != self.representative {
                out.push(member.clone());
            }
            let swapped = member.swap();
            if swapped != *member {
                out.push(swapped);
            }
        }
        out
    }
}

/// Established names for the length-6 varieties.
pub fn annotation(identity: &LinearIdentity) -> Option<&'static str> {
    match identity.canonicalize().to_string().as_str() {
        "<3|0|0|(1,3)>" => Some("right modular groupoids"),
        "<3|0|0|(2,3)>" => Some("right permutable groupoids"),
        "<3|0|1|()>" => Some("semigroups"),
        "<3|0|1|(1,3,2)>" => Some("the ultimately AC-nice identity"),
        "<3|1|1|(1,3)>" => Some("left modular groupoids"),
        "<3|1|1|(2,3)>" => Some("left permutable groupoids"),
        _ => None,
    }
}

/// Partitions the canonical nontrivial identities of length `2n` into
/// variety classes, sorted by representative. The trivial variety is not
/// listed, so the class count is one less than the variety total.
pub fn classify(n: usize, limits: &Limits) -> Result<Vec<VarietyClass>> {
    let identities = enumerate_identities(n, true, limits)?;
    // Identities with distinct side bracketings are classes of their own;
    // with equal bracketings the class is determined by the cyclic group
    // the permutation generates.
    let mut classes: std::collections::BTreeMap<(u64, u64, Vec<Vec<usize>>), Vec<LinearIdentity>> =
        std::collections::BTreeMap::new();
    for identity in identities {
        let key = if identity.lhs() == identity.rhs() {
            let mut powers = Vec::new();
            let mut power = identity.f().clone();
            while !power.is_identity() {
                powers.push(power.one_line());
                power = power.compose(identity.f());
            }
            powers.sort();
            (identity.lhs(), identity.rhs(), powers)
        } else {
            (
                identity.lhs(),
                identity.rhs(),
                vec![identity.f().one_line()],
            )
        };
        classes.entry(key).or_default().push(identity);
    }
    let classes: Vec<Vec<LinearIdentity>> = classes.into_values().collect();
    debug_assert!(classes
        .iter()
        .all(|class| class.iter().all(|i| same_variety(&class[0], i))));
    let mut out: Vec<VarietyClass> = classes
        .into_iter()
        .map(|mut members| {
            members.sort_by_key(|i| i.sort_key());
            let representative = members[0].clone();
            let annotation = annotation(&representative);
            VarietyClass {
                representative,
                members,
                annotation,
            }
        })
        .collect();
    out.sort_by_key(|class| class.representative.sort_key());
    Ok(out)
}
