use num_bigint::BigUint;

use crate::error::{Error, Limits, Result};
use crate::permgroup::Permutation;

/// Orbit of the 0-based point `x` under the given generators, together with
/// a transversal: `transversal[y]` maps `x` to `y`, and `transversal[x]` is
/// the identity. The orbit is returned in breadth-first discovery order.
pub fn orbit_with_transversal(
    gens: &[Permutation],
    x: usize,
) -> Result<(Vec<usize>, Vec<Option<Permutation>>)> {
    let degree = check_degree(gens)?;
    let degree = degree.max(x + 1);
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::Domain(format!(
            "generator degree {} does not cover point {}",
            g.degree(),
            x
        )));
    }
    let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
    transversal[x] = Some(Permutation::identity(degree));
    let mut orbit = vec![x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        head += 1;
        for g in gens {
            let z = g.apply(y);
            if transversal[z].is_none() {
                let rep = transversal[y].as_ref().unwrap().compose(g);
                transversal[z] = Some(rep);
                orbit.push(z);
            }
        }
    }
    Ok((orbit, transversal))
}

/// Generators of the stabilizer of `x` in the group generated by `gens`,
/// obtained from the orbit transversal. Identity elements are dropped.
pub fn schreier_generators(gens: &[Permutation], x: usize) -> Result<Vec<Permutation>> {
    let (orbit, transversal) = orbit_with_transversal(gens, x)?;
    let mut out = Vec::new();
    for &y in &orbit {
        let u_y = transversal[y].as_ref().unwrap();
        for g in gens {
            let z = g.apply(y);
            let u_z = transversal[z].as_ref().unwrap();
            let s = u_y.compose(g).compose(&u_z.inverse());
            debug_assert_eq!(s.apply(x), x);
            if !s.is_identity() && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

fn check_degree(gens: &[Permutation]) -> Result<usize> {
    let degree = gens.first().map(|g| g.degree()).unwrap_or(0);
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::Domain("generator degrees differ".into()));
    }
    Ok(degree)
}

struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn recompute(&mut self) {
        let (orbit, transversal) = orbit_with_transversal(&self.gens, self.base)
            .expect("level generators share a degree");
        self.orbit = orbit;
        self.transversal = transversal;
    }
}

/// A base and strong generating set, built by deterministic Schreier-Sims.
/// Level `k` stabilizes the base points of levels `0..k`.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a stabilizer chain for the group generated by `gens`.
    pub fn new(gens: &[Permutation], limits: &Limits) -> Result<Self> {
        let degree = check_degree(gens)?;
        if degree > limits.max_degree {
            return Err(Error::Guard(format!(
                "degree {degree} exceeds limit {}",
                limits.max_degree
            )));
        }
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if g.is_identity() {
                continue;
            }
            if chain.levels.is_empty() {
                let base = first_moved(g).unwrap();
                chain.levels.push(Level::new(degree, base));
            }
            chain.levels[0].gens.push(g.clone());
        }
        if !chain.levels.is_empty() {
            chain.complete_level(0);
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// `|G|` as the product of the orbit lengths along the chain.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    /// Membership by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        if self.levels.is_empty() {
            return g.is_identity();
        }
        if g.degree() != self.degree {
            return false;
        }
        match self.strip(g, 0) {
            Some(residue) => residue.is_identity(),
            None => false,
        }
    }

    /// Sifts `g` through levels `from..`; `None` means `g` left the orbit at
    /// some level and is certainly not a member.
    fn strip(&self, g: &Permutation, from: usize) -> Option<Permutation> {
        let mut residue = g.clone();
        for level in &self.levels[from..] {
            let y = residue.apply(level.base);
            let rep = level.transversal[y].as_ref()?;
            residue = residue.compose(&rep.inverse());
        }
        Some(residue)
    }

    fn complete_level(&mut self, level: usize) {
        self.levels[level].recompute();
        let orbit = self.levels[level].orbit.clone();
        let n_gens = self.levels[level].gens.len();
        for &y in &orbit {
            for gi in 0..n_gens {
                let u_y = self.levels[level].transversal[y].as_ref().unwrap().clone();
                let g = self.levels[level].gens[gi].clone();
                let z = g.apply(y);
                let u_z = self.levels[level].transversal[z].as_ref().unwrap();
                let schreier = u_y.compose(&g).compose(&u_z.inverse());
                let residue = match self.strip(&schreier, level + 1) {
                    Some(r) => r,
                    // Left an orbit below: the element itself is the witness.
                    None => schreier,
                };
                if residue.is_identity() {
                    continue;
                }
                if level + 1 == self.levels.len() {
                    let base = first_moved(&residue).unwrap();
                    self.levels.push(Level::new(self.degree, base));
                }
                self.levels[level + 1].gens.push(residue);
                self.complete_level(level + 1);
            }
        }
    }
}

fn first_moved(g: &Permutation) -> Option<usize> {
    (0..g.degree()).find(|&p| g.apply(p) != p)
}

/// True iff the generators generate the full symmetric group on `m` points,
/// decided by comparing the chain order with `m!`.
pub fn is_full_symmetric(gens: &[Permutation], m: usize, limits: &Limits) -> Result<bool> {
    if m <= 1 {
        return Ok(true);
    }
    if gens.iter().any(|g| g.degree() != m) {
        return Err(Error::Domain(format!("generators are not of degree {m}")));
    }
    let chain = StabilizerChain::new(gens, limits)?;
    Ok(chain.order() == factorial(m))
}

pub fn factorial(m: usize) -> BigUint {
    (1..=m as u64).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, s: &str) -> Permutation {
        Permutation::parse(degree, s).unwrap()
    }

    #[test]
    fn orbit_of_transitive_group() {
        let gens = vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")];
        let (orbit, transversal) = orbit_with_transversal(&gens, 0).unwrap();
        assert_eq!(orbit.len(), 3);
        for &y in &orbit {
            assert_eq!(transversal[y].as_ref().unwrap().apply(0), y);
        }
    }

    #[test]
    fn orbit_of_involution() {
        let gens = vec![perm(4, "(1,2)(3,4)")];
        let (orbit, _) = orbit_with_transversal(&gens, 0).unwrap();
        let mut orbit = orbit;
        orbit.sort();
        assert_eq!(orbit, vec![0, 1]);
    }

    #[test]
    fn schreier_generators_fix_point() {
        // A 3-cycle acting on its own orbit has trivial point stabilizers.
        let gens = vec![perm(3, "(1,2,3)")];
        let stab = schreier_generators(&gens, 0).unwrap();
        assert!(stab.is_empty());

        // |S_3| / |orbit of 3| = 2
        let gens = vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")];
        let stab = schreier_generators(&gens, 2).unwrap();
        let chain = StabilizerChain::new(&stab, &Limits::default()).unwrap();
        assert_eq!(chain.order(), BigUint::from(2u32));
    }

    #[test]
    fn symmetric_group_orders() {
        let limits = Limits::default();
        let gens = vec![perm(4, "(1,2)"), perm(4, "(1,2,3,4)")];
        let chain = StabilizerChain::new(&gens, &limits).unwrap();
        assert_eq!(chain.order(), BigUint::from(24u32));
        assert!(is_full_symmetric(&gens, 4, &limits).unwrap());
        assert!(!is_full_symmetric(&[perm(4, "(1,3)(2,4)")], 4, &limits).unwrap());
        assert!(is_full_symmetric(&[], 1, &limits).unwrap());
    }

    #[test]
    fn membership_by_sifting() {
        let limits = Limits::default();
        let gens = vec![perm(5, "(1,2,3,4,5)")];
        let chain = StabilizerChain::new(&gens, &limits).unwrap();
        assert_eq!(chain.order(), BigUint::from(5u32));
        assert!(chain.contains(&perm(5, "(1,3,5,2,4)")));
        assert!(!chain.contains(&perm(5, "(1,2)")));
        for g in &gens {
            assert!(chain.contains(g));
        }
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::new(&[], &Limits::default()).unwrap();
        assert_eq!(chain.order(), BigUint::from(1u32));
    }
}
