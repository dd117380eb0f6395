//! Enumeration completeness against the exhaustive-filter oracle and
//! certificate invariance.

mod common;

use common::{exhaustive_unicyclic_certs, random_unicyclic};
use proptest::prelude::*;
use rand::prelude::*;
use rand::Rng as _;
use rand::seq::SliceRandom;
use uniharary::canon::canonical_certificate;
use uniharary::enumerate::{tree_from_prufer, unicyclic_class_certificates};
use uniharary::graph::{classify, GraphClass};

/// The Prüfer-based path and the choose-n-edges oracle must produce exactly
/// the same certificate sets.
#[test]
fn completeness_against_exhaustive_filter() {
    for n in 3..=6 {
        let from_prufer = unicyclic_class_certificates(n).unwrap();
        let from_filter = exhaustive_unicyclic_certs(n);
        assert_eq!(from_prufer, from_filter, "certificate sets differ at n = {n}");
    }
}

#[test]
fn completeness_at_n7_count() {
    // C(21,7) subsets; slower, so counts only
    let from_filter = exhaustive_unicyclic_certs(7);
    assert_eq!(from_filter.len(), 33);
    assert_eq!(unicyclic_class_certificates(7).unwrap().len(), 33);
}

#[test]
fn certificates_are_label_invariant() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(3..=10);
        let g = random_unicyclic(n, &mut rng);
        let base = canonical_certificate(&g).unwrap();
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let relabeled = g.relabel(&perm).unwrap();
            assert_eq!(canonical_certificate(&relabeled).unwrap(), base);
        }
    }
}

proptest! {
    /// Any sequence over 0..n decodes to a labeled tree on n vertices.
    #[test]
    fn prufer_always_decodes_to_a_tree(seq in prop::collection::vec(0usize..7, 1..=8)) {
        let n = seq.len() + 2;
        let normalized: Vec<usize> = seq.iter().map(|&s| s % n).collect();
        let t = tree_from_prufer(&normalized).unwrap();
        prop_assert_eq!(t.vertex_count(), n);
        prop_assert_eq!(classify(&t), GraphClass::Tree);
    }
}
