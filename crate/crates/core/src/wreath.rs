//! The wreath-product subgroup associated with a linear identity: one
//! generator per arrow pair of the identity-hedron, acting on bracketings
//! through the top component. Niceness of an identity at length `m` reduces
//! to an orbit and a projected-stabilizer condition, checked here by the
//! group-theoretic route and by an independent journey search.

use num_bigint::BigUint;

use crate::error::{Error, Limits, Result};
use crate::hedron::{build_hedron, reachable_states};
use crate::identities::LinearIdentity;
use crate::permgroup::{factorial, Permutation, StabilizerChain};
use crate::terms::catalan;

/// An element `((a_i), a)` of `S_m wr S_X`: `top` permutes the `C_m`
/// bracketing labels and `comps[i]` permutes the `m` factor positions of
/// block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathElement {
    pub top: Permutation,
    pub comps: Vec<Permutation>,
}

impl WreathElement {
    pub fn identity(m: usize, blocks: usize) -> Self {
        WreathElement {
            top: Permutation::identity(blocks),
            comps: vec![Permutation::identity(m); blocks],
        }
    }

    pub fn blocks(&self) -> usize {
        self.comps.len()
    }

    pub fn is_identity(&self) -> bool {
        self.top.is_identity() && self.comps.iter().all(|c| c.is_identity())
    }

    /// `((a_i), a) * ((b_i), b) = ((a_i b_{i a}), a b)`.
    pub fn multiply(&self, other: &WreathElement) -> WreathElement {
        let comps = (0..self.blocks())
            .map(|i| self.comps[i].compose(&other.comps[self.top.apply(i)]))
            .collect();
        WreathElement {
            top: self.top.compose(&other.top),
            comps,
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let top_inv = self.top.inverse();
        let comps = (0..self.blocks())
            .map(|i| self.comps[top_inv.apply(i)].inverse())
            .collect();
        WreathElement {
            top: top_inv,
            comps,
        }
    }

    /// The imprimitive action on `blocks * m` points: point `(i, p)` at
    /// index `i*m + p` goes to `(top(i), comps[i](p))`.
    pub fn to_point_permutation(&self) -> Permutation {
        let m = self.comps[0].degree();
        let mut images = vec![0; self.blocks() * m];
        for i in 0..self.blocks() {
            let j = self.top.apply(i);
            for p in 0..m {
                images[i * m + p] = j * m + self.comps[i].apply(p);
            }
        }
        Permutation::from_images(images).expect("wreath element acts bijectively")
    }
}

/// Generators of `W(identity, m)`: one element per mutually inverse arrow
/// pair `(i, j, pi)` of the hedron, with top the transposition `(i, j)` and
/// components `pi` at `i`, `pi^-1` at `j`. Loop arrows keep the identity on
/// top and contribute one generator per direction.
pub fn wreath_generators(
    identity: &LinearIdentity,
    m: usize,
    limits: &Limits,
) -> Result<Vec<WreathElement>> {
    let hedron = build_hedron(identity, m, limits)?;
    let blocks = hedron.node_count() as usize;
    let mut out = Vec::new();
    for (src, dst, perm) in hedron.arrows() {
        let (i, j) = (*src as usize, *dst as usize);
        if i > j {
            continue; // covered by the inverse arrow
        }
        let mut element = WreathElement::identity(m, blocks);
        if i < j {
            element.top = Permutation::transposition(blocks, i, j);
            element.comps[i] = perm.clone();
            element.comps[j] = perm.inverse();
        } else {
            element.comps[i] = perm.clone();
        }
        if !element.is_identity() {
            out.push(element);
        }
    }
    Ok(out)
}

/// Which route established a niceness verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NicenessMethod {
    Group,
    Bfs,
}

impl std::fmt::Display for NicenessMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NicenessMethod::Group => write!(f, "group"),
            NicenessMethod::Bfs => write!(f, "bfs"),
        }
    }
}

/// Outcome of a niceness check at one `(identity, m)` cell.
#[derive(Debug, Clone)]
pub struct NicenessReport {
    pub identity: LinearIdentity,
    pub m: usize,
    /// The bracketing whose orbit and stabilizer were examined.
    pub x: u64,
    /// Sorted orbit of `x` among the bracketing labels.
    pub orbit: Vec<u64>,
    /// Generators of the projected stabilizer at `x` (degree `m`).
    pub stabilizer_gens: Vec<Permutation>,
    /// Order of the projected stabilizer.
    pub stabilizer_order: BigUint,
    pub orbit_is_all: bool,
    pub stabilizer_is_symmetric: bool,
    pub method: NicenessMethod,
    /// True when the hedron has loop arrows, where the generator
    /// construction extends the transposition recipe with an identity top.
    pub used_loop_generators: bool,
}

impl NicenessReport {
    pub fn nice(&self) -> bool {
        self.orbit_is_all && self.stabilizer_is_symmetric
    }
}

/// Checks whether every groupoid satisfying the identity multiplies `m`
/// factors independently of order and bracketing, examining bracketing 0.
pub fn is_nice(
    m: usize,
    identity: &LinearIdentity,
    method: NicenessMethod,
    limits: &Limits,
) -> Result<NicenessReport> {
    is_nice_at(m, identity, 0, method, limits)
}

/// As `is_nice`, examining an arbitrary bracketing `x`.
pub fn is_nice_at(
    m: usize,
    identity: &LinearIdentity,
    x: u64,
    method: NicenessMethod,
    limits: &Limits,
) -> Result<NicenessReport> {
    let node_count = catalan(m)?;
    if x >= node_count {
        return Err(Error::OutOfRange {
            what: "bracketing label",
            value: x,
            max: node_count - 1,
        });
    }
    match method {
        NicenessMethod::Group => {
            if m > limits.max_group_m {
                return Err(Error::Guard(format!(
                    "group method limited to m <= {}",
                    limits.max_group_m
                )));
            }
            group_report(m, identity, x, limits)
        }
        NicenessMethod::Bfs => {
            if m > limits.max_bfs_m {
                return Err(Error::Guard(format!(
                    "journey method limited to m <= {}",
                    limits.max_bfs_m
                )));
            }
            bfs_report(m, identity, x, limits)
        }
    }
}

fn has_loops(gens: &[WreathElement]) -> bool {
    gens.iter().any(|g| g.top.is_identity())
}

fn group_report(
    m: usize,
    identity: &LinearIdentity,
    x: u64,
    limits: &Limits,
) -> Result<NicenessReport> {
    let gens = wreath_generators(identity, m, limits)?;
    let node_count = catalan(m)?;
    let blocks = node_count as usize;

    // Orbit of x under the top action, with wreath-element transversal.
    let mut transversal: Vec<Option<WreathElement>> = vec![None; blocks];
    transversal[x as usize] = Some(WreathElement::identity(m, blocks));
    let mut orbit = vec![x as usize];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        head += 1;
        for g in &gens {
            let z = g.top.apply(y);
            if transversal[z].is_none() {
                transversal[z] = Some(transversal[y].as_ref().unwrap().multiply(g));
                orbit.push(z);
            }
        }
    }

    // Schreier generators of the stabilizer of x, projected onto the x-th
    // component (a homomorphism on elements fixing x).
    let mut stabilizer_gens: Vec<Permutation> = Vec::new();
    for &y in &orbit {
        let u_y = transversal[y].as_ref().unwrap();
        for g in &gens {
            let z = g.top.apply(y);
            let u_z_inv = transversal[z].as_ref().unwrap().inverse();
            let s = u_y.multiply(g).multiply(&u_z_inv);
            debug_assert_eq!(s.top.apply(x as usize), x as usize);
            let projected = s.comps[x as usize].clone();
            if !projected.is_identity() && !stabilizer_gens.contains(&projected) {
                stabilizer_gens.push(projected);
            }
        }
    }

    let chain = StabilizerChain::new(&stabilizer_gens, limits)?;
    let stabilizer_order = chain.order();
    let mut orbit: Vec<u64> = orbit.into_iter().map(|y| y as u64).collect();
    orbit.sort_unstable();
    Ok(NicenessReport {
        identity: identity.clone(),
        m,
        x,
        orbit_is_all: orbit.len() as u64 == node_count,
        stabilizer_is_symmetric: stabilizer_order == factorial(m),
        orbit,
        stabilizer_gens,
        stabilizer_order,
        method: NicenessMethod::Group,
        used_loop_generators: has_loops(&gens),
    })
}

fn bfs_report(
    m: usize,
    identity: &LinearIdentity,
    x: u64,
    limits: &Limits,
) -> Result<NicenessReport> {
    let node_count = catalan(m)?;
    let states = reachable_states(identity, m, x, limits)?;
    let mut orbit: Vec<u64> = states.iter().map(|s| s.node).collect();
    orbit.sort_unstable();
    orbit.dedup();
    // The permutations reachable back at x form the projected stabilizer.
    let mut stabilizer: Vec<Permutation> = states
        .iter()
        .filter(|s| s.node == x)
        .map(|s| s.perm.clone())
        .collect();
    stabilizer.sort();
    let stabilizer_order = BigUint::from(stabilizer.len());
    let gens = wreath_generators(identity, m, limits)?;
    Ok(NicenessReport {
        identity: identity.clone(),
        m,
        x,
        orbit_is_all: orbit.len() as u64 == node_count,
        stabilizer_is_symmetric: stabilizer_order == factorial(m),
        orbit,
        stabilizer_gens: stabilizer
            .into_iter()
            .filter(|p| !p.is_identity())
            .collect(),
        stabilizer_order,
        method: NicenessMethod::Bfs,
        used_loop_generators: has_loops(&gens),
    })
}

/// `|W(identity, m)|` via the imprimitive action on `C_m * m` points.
pub fn wreath_group_order(identity: &LinearIdentity, m: usize, limits: &Limits) -> Result<BigUint> {
    let gens = wreath_generators(identity, m, limits)?;
    let points: Vec<Permutation> = gens.iter().map(|g| g.to_point_permutation()).collect();
    let chain = StabilizerChain::new(&points, limits)?;
    Ok(chain.order())
}

/// `|S_m wr S_{C_m}| = (m!)^{C_m} * C_m!`.
pub fn full_wreath_order(m: usize) -> Result<BigUint> {
    let c = catalan(m)? as usize;
    Ok(factorial(m).pow(c as u32) * factorial(c))
}

/// One cell of a niceness screen.
#[derive(Debug, Clone)]
pub struct ScreenRow {
    pub identity: LinearIdentity,
    pub m: usize,
    pub nice: bool,
}

/// The niceness verdict for every canonical nontrivial identity of length
/// `2n` and every `m` in the inclusive range. Cells are evaluated in
/// parallel; the returned order is canonical.
pub fn niceness_screen(
    n: usize,
    m_range: std::ops::RangeInclusive<usize>,
    method: NicenessMethod,
    limits: &Limits,
) -> Result<Vec<ScreenRow>> {
    use rayon::prelude::*;

    let identities = crate::identities::enumerate_identities(n, true, limits)?;
    let cells: Vec<(LinearIdentity, usize)> = identities
        .into_iter()
        .flat_map(|i| m_range.clone().map(move |m| (i.clone(), m)))
        .collect();
    cells
        .into_par_iter()
        .map(|(identity, m)| {
            let report = is_nice(m, &identity, method, limits)?;
            Ok(ScreenRow {
                identity,
                m,
                nice: report.nice(),
            })
        })
        .collect()
}
