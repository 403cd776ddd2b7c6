//! Randomized invariants over the core types.

use proptest::prelude::*;

use linear_groupoids::hedron::build_hedron;
use linear_groupoids::identities::{enumerate_identities, parse_identity, LinearIdentity};
use linear_groupoids::permgroup::{
    factorial, orbit_with_transversal, schreier_generators, Permutation, StabilizerChain,
};
use linear_groupoids::terms::{
    all_rewrites, catalan, decode_bracketing, encode_bracketing, Bracketing, Term,
};
use linear_groupoids::varieties::same_variety;
use linear_groupoids::wreath::WreathElement;
use linear_groupoids::Limits;

fn fact(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of the given degree at a Lehmer-code index.
fn nth_permutation(degree: usize, mut index: u64) -> Permutation {
    let mut pool: Vec<usize> = (0..degree).collect();
    let mut images = Vec::with_capacity(degree);
    for i in (0..degree).rev() {
        let f = fact(i);
        images.push(pool.remove((index / f) as usize));
        index %= f;
    }
    Permutation::from_images(images).unwrap()
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    (0..fact(degree)).prop_map(move |i| nth_permutation(degree, i))
}

fn identity_strategy(n: usize) -> impl Strategy<Value = LinearIdentity> {
    let c = catalan(n).unwrap();
    (0..c, 0..c, perm_strategy(n))
        .prop_map(move |(i, j, f)| LinearIdentity::new(n, i, j, f).unwrap())
}

fn wreath_strategy(m: usize, blocks: usize) -> impl Strategy<Value = WreathElement> {
    (
        perm_strategy(blocks),
        proptest::collection::vec(perm_strategy(m), blocks),
    )
        .prop_map(|(top, comps)| WreathElement { top, comps })
}

proptest! {
    #[test]
    fn codec_is_a_bijection(n in 1usize..=8, seed in any::<u64>()) {
        let label = seed % catalan(n).unwrap();
        let b = decode_bracketing(n, label).unwrap();
        prop_assert_eq!(b.length(), n);
        prop_assert_eq!(encode_bracketing(&b).unwrap(), label);
        let reparsed = Bracketing::parse(&b.to_string()).unwrap();
        prop_assert_eq!(encode_bracketing(&reparsed).unwrap(), label);
    }

    #[test]
    fn permutation_algebra(a in perm_strategy(6), b in perm_strategy(6), c in perm_strategy(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        let reparsed = Permutation::parse(6, &a.to_string()).unwrap();
        prop_assert_eq!(&reparsed, &a);
        // Left-to-right composition: images chain through the left factor.
        for p in 0..6 {
            prop_assert_eq!(a.compose(&b).apply(p), b.apply(a.apply(p)));
        }
    }

    #[test]
    fn name_round_trip_and_canonical_form(identity in identity_strategy(4)) {
        let reparsed = parse_identity(&identity.to_string()).unwrap();
        prop_assert_eq!(&reparsed, &identity);
        let from_surface = parse_identity(&identity.surface()).unwrap();
        prop_assert_eq!(&from_surface, &identity);

        let canonical = identity.canonicalize();
        prop_assert_eq!(canonical.canonicalize(), canonical.clone());
        prop_assert_eq!(identity.swap().canonicalize(), canonical.clone());
        prop_assert!(same_variety(&identity, &canonical));
    }

    #[test]
    fn rewrites_permute_leaves_and_reverse(shape_seed in any::<u64>(), n in 3usize..=6) {
        let label = shape_seed % catalan(n).unwrap();
        let term = Term::from_shape(&decode_bracketing(n, label).unwrap());
        let rule = parse_identity("(xy)z=y(zx)").unwrap().rule();
        for (step, result) in all_rewrites(&term, &rule) {
            prop_assert!(result.is_linear());
            // The permutation maps source leaf positions to result positions.
            let source = term.leaves();
            let target = result.leaves();
            for (p, v) in source.iter().enumerate() {
                prop_assert_eq!(target[step.perm.apply(p)], *v);
            }
            // Some rewrite of the result leads back to the original term.
            let reversible = all_rewrites(&result, &rule)
                .iter()
                .any(|(s, back)| *back == term && s.perm == step.perm.inverse());
            prop_assert!(reversible);
        }
    }

    #[test]
    fn orbit_stabilizer_product(gens in proptest::collection::vec(perm_strategy(6), 1..4)) {
        let limits = Limits::default();
        let group = StabilizerChain::new(&gens, &limits).unwrap();
        let (orbit, _) = orbit_with_transversal(&gens, 0).unwrap();
        let stabilizer =
            StabilizerChain::new(&schreier_generators(&gens, 0).unwrap(), &limits).unwrap();
        prop_assert_eq!(group.order(), stabilizer.order() * orbit.len() as u64);
        prop_assert!(group.order() <= factorial(6));
        for g in &gens {
            prop_assert!(group.contains(g));
        }
    }

    #[test]
    fn wreath_axioms(
        a in wreath_strategy(4, 5),
        b in wreath_strategy(4, 5),
        c in wreath_strategy(4, 5),
    ) {
        let e = WreathElement::identity(4, 5);
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert_eq!(a.multiply(&e), a.clone());
        prop_assert_eq!(e.multiply(&a), a.clone());
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert_eq!(
            a.multiply(&b).to_point_permutation(),
            a.to_point_permutation().compose(&b.to_point_permutation())
        );
    }

    #[test]
    fn hedron_arrows_pair_up(identity in identity_strategy(3), m in 1usize..=5) {
        let h = build_hedron(&identity, m, &Limits::default()).unwrap();
        for (src, dst, perm) in h.arrows() {
            prop_assert!(h.arrows().contains(&(*dst, *src, perm.inverse())));
        }
    }
}

#[test]
fn enumeration_is_sorted_and_canonical() {
    let limits = Limits::default();
    for n in 2..=4 {
        let ids = enumerate_identities(n, true, &limits).unwrap();
        let mut sorted = ids.clone();
        sorted.sort_by_key(|i| i.sort_key());
        assert_eq!(ids, sorted);
        for i in &ids {
            assert_eq!(i.canonicalize(), *i);
        }
    }
}
