//! Cross-cutting invariants: structural properties of generated graphs,
//! canonical-form behavior of the list enumerations, truncation dominance
//! and offset-bound sufficiency at small sizes.

use proptest::prelude::*;

use choosa::choosability::{is_k_gamma_mu_choosable, EnumLimits};
use choosa::graph::{enumerate_graphs, parse_dimacs, write_dimacs, Graph};
use choosa::lists::{
    canonicalize, default_offset_bound, is_canonical, is_proper, respects_lists,
    canonical_list_assignments, Color, IntervalList, ListAssignment,
};
use choosa::solve::{exists_list_coloring, SolveOptions};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        any::<u64>().prop_map(move |bits| {
            let mask = if m == 64 { bits } else { bits & ((1u64 << m) - 1) };
            let mut g = Graph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graphs_have_symmetric_loop_free_adjacency(g in arb_graph()) {
        for v in 0..g.n() {
            for u in g.neighbors(v) {
                prop_assert!(u != v);
                prop_assert!(g.neighbors(u).any(|w| w == v));
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph()) {
        let parsed = parse_dimacs(&write_dimacs(&g)).unwrap();
        prop_assert_eq!(parsed, g);
    }

    /// Canonicalization is idempotent and absorbs any color permutation
    /// into some canonical form.
    #[test]
    fn canonicalize_is_idempotent_and_closed_under_renaming(
        lists in proptest::collection::vec(
            proptest::collection::btree_set(1i64..=6, 1..=3), 1..=4),
        perm_seed in 0u64..1000,
    ) {
        let lists: Vec<Vec<Color>> =
            lists.into_iter().map(|s| s.into_iter().collect()).collect();
        let canon = canonicalize(&lists);
        prop_assert!(is_canonical(&canon));
        prop_assert_eq!(canonicalize(&canon.clone()), canon.clone());
        // apply an arbitrary permutation of {1..=6}
        let mut perm: Vec<Color> = (1..=6).collect();
        let mut s = perm_seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let renamed: Vec<Vec<Color>> = canon
            .iter()
            .map(|l| {
                let mut out: Vec<Color> = l.iter().map(|&c| perm[(c - 1) as usize]).collect();
                out.sort_unstable();
                out
            })
            .collect();
        prop_assert!(is_canonical(&canonicalize(&renamed)));
    }

    /// A coloring of the k-truncated intervals is a coloring of the
    /// originals, so exact-size-k enumeration suffices for choosability.
    #[test]
    fn truncation_dominance(
        g in arb_graph(),
        offsets in proptest::collection::vec((0i64..10, 0usize..3), 8),
        k in 1usize..=3,
    ) {
        let n = g.n();
        let full = ListAssignment::Interval(
            (0..n)
                .map(|v| {
                    let (gamma, extra) = offsets[v];
                    IntervalList::new(gamma, gamma + (k + extra) as Color - 1)
                })
                .collect(),
        );
        let truncated = ListAssignment::Interval(
            (0..n)
                .map(|v| {
                    let (gamma, _) = offsets[v];
                    IntervalList::new(gamma, gamma + k as Color - 1)
                })
                .collect(),
        );
        if let Some(f) = exists_list_coloring(&g, &truncated, SolveOptions::default()) {
            prop_assert!(is_proper(&g, &f));
            prop_assert!(respects_lists(&f, &full));
        }
    }
}

/// The default offset bound `k*(n-1)` and the wider `2*k*n` agree on every
/// interval-choosability verdict for graphs with n <= 4 and k <= 3.
#[test]
fn default_offset_bound_agrees_with_wider_bound() {
    let limits = EnumLimits::default();
    for n in 1..=4usize {
        for g in enumerate_graphs(n, false).unwrap() {
            for k in 1..=3usize {
                let default = is_k_gamma_mu_choosable(&g, k, None, limits)
                    .unwrap()
                    .choosable;
                let wider_bound = 2 * (k * n) as Color;
                assert!(wider_bound >= default_offset_bound(n, k));
                let wider = is_k_gamma_mu_choosable(&g, k, Some(wider_bound), limits)
                    .unwrap()
                    .choosable;
                assert_eq!(default, wider, "{g:?} k={k}");
            }
        }
    }
}

/// Every enumerated canonical assignment stays canonical after a renaming
/// round trip through `canonicalize`.
#[test]
fn enumerated_canonical_assignments_are_canonical() {
    for (n, k) in [(3usize, 2usize), (4, 2), (3, 3)] {
        for a in canonical_list_assignments(n, k, (n * k) as Color) {
            let ListAssignment::General(lists) = a else {
                unreachable!()
            };
            assert!(is_canonical(&lists));
        }
    }
}
