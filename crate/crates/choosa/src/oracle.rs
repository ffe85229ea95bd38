//! Brute-force reference procedures, deliberately independent of the
//! solvers they cross-check.

use std::collections::BTreeSet;

use crate::constructive::SetFamily;
use crate::graph::Graph;
use crate::lists::{Color, ListAssignment};

/// Evaluates every choice function over the lists and checks properness
/// directly against the edge set.
pub fn product_space_colorable(g: &Graph, lists: &ListAssignment) -> bool {
    fn rec(g: &Graph, lists: &ListAssignment, acc: &mut Vec<Color>) -> bool {
        let v = acc.len();
        if v == g.n() {
            return g.edges().all(|(a, b)| acc[a] != acc[b]);
        }
        for c in lists.colors(v) {
            acc.push(c);
            let ok = rec(g, lists, acc);
            acc.pop();
            if ok {
                return true;
            }
        }
        false
    }
    rec(g, lists, &mut Vec::new())
}

/// Tries every injective choice function over the family.
pub fn brute_force_sdr_exists(family: &SetFamily) -> bool {
    fn rec(family: &SetFamily, i: usize, used: &mut Vec<Color>) -> bool {
        if i == family.len() {
            return true;
        }
        for &c in family.sets()[i].iter() {
            if !used.contains(&c) {
                used.push(c);
                let ok = rec(family, i + 1, used);
                used.pop();
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(family, 0, &mut Vec::new())
}

/// Checks the deficiency inequality `|union of S_i for i in I| < |I|`.
pub fn is_hall_violator(family: &SetFamily, indices: &[usize]) -> bool {
    let union: BTreeSet<Color> = indices
        .iter()
        .flat_map(|&i| family.sets()[i].iter().copied())
        .collect();
    union.len() < indices.len()
}
