//! The forall-lists layer: k-choosability over general lists, interval
//! (gamma, mu) choosability, and both choice numbers, with counterexample
//! witnesses.

use thiserror::Error;

use crate::graph::{degeneracy_ordering, Graph};
use crate::lists::{
    canonical_assignment_count, default_color_budget, default_offset_bound,
    interval_assignment_count, CanonicalAssignments, Color, IntervalAssignments, ListAssignment,
    ListKind, PaperPaletteAssignments,
};
use crate::solve::{exists_list_coloring, SolveOptions, VertexOrder};

pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy)]
pub struct EnumLimits {
    pub cap: u128,
    pub force: bool,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            cap: DEFAULT_ENUMERATION_CAP,
            force: false,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChoosabilityError {
    #[error("enumeration of {estimated} assignments exceeds cap {cap}; force to override")]
    CapExceeded { estimated: u128, cap: u128 },
    #[error("no choosable k found up to bound {k_max}")]
    BoundExhausted { k_max: usize },
}

/// Which space of general list assignments to range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneralPalette {
    /// Exactly-k lists over `1..=budget`, canonical up to color renaming.
    Canonical { color_budget: Option<Color> },
    /// The literal k-subsets-of-`{1..=n}` space, all n-tuples.
    Paper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    /// First failing assignment in enumeration order, when not choosable.
    pub witness: Option<ListAssignment>,
    /// Assignments examined: the full space on "yes", the counterexample's
    /// 1-based position on "no".
    pub checked: u128,
    pub mode: ListKind,
    pub k: usize,
}

// greedy fast path along a fixed elimination ordering; a success proves
// colorability without invoking the backtracking solver
fn greedy_along(
    g: &Graph,
    reverse_elim: &[usize],
    lists: &ListAssignment,
    scratch: &mut Vec<Option<Color>>,
) -> bool {
    scratch.clear();
    scratch.resize(g.n(), None);
    for &v in reverse_elim {
        match lists
            .colors(v)
            .find(|&c| !g.neighbors(v).any(|u| scratch[u] == Some(c)))
        {
            Some(c) => scratch[v] = Some(c),
            None => return false,
        }
    }
    true
}

fn colorable(
    g: &Graph,
    reverse_elim: &[usize],
    lists: &ListAssignment,
    scratch: &mut Vec<Option<Color>>,
) -> bool {
    if greedy_along(g, reverse_elim, lists, scratch) {
        return true;
    }
    exists_list_coloring(
        g,
        lists,
        SolveOptions {
            vertex_order: VertexOrder::MostConstrainedFirst,
        },
    )
    .is_some()
}

fn reverse_elimination(g: &Graph) -> Vec<usize> {
    let mut order = degeneracy_ordering(g).ordering;
    order.reverse();
    order
}

/// Is every assignment of k-element color lists colorable?
pub fn is_k_choosable(
    g: &Graph,
    k: usize,
    palette: GeneralPalette,
    limits: EnumLimits,
) -> Result<ChoosabilityVerdict, ChoosabilityError> {
    assert!(k >= 1);
    let n = g.n();
    let estimated = match palette {
        GeneralPalette::Canonical { color_budget } => {
            let budget = color_budget.unwrap_or_else(|| default_color_budget(n, k));
            canonical_assignment_count(n, k, budget)
        }
        GeneralPalette::Paper => PaperPaletteAssignments::new(n, k).total_count(),
    };
    if estimated > limits.cap && !limits.force {
        return Err(ChoosabilityError::CapExceeded {
            estimated,
            cap: limits.cap,
        });
    }
    let rev = reverse_elimination(g);
    let mut scratch = Vec::new();
    let mut checked: u128 = 0;
    match palette {
        GeneralPalette::Canonical { color_budget } => {
            let budget = color_budget.unwrap_or_else(|| default_color_budget(n, k));
            let mut en = CanonicalAssignments::new(n, k, budget);
            let mut buffer = ListAssignment::General(vec![vec![0; k]; n]);
            while en.advance() {
                checked += 1;
                copy_general(&mut buffer, en.current());
                if !colorable(g, &rev, &buffer, &mut scratch) {
                    return Ok(ChoosabilityVerdict {
                        choosable: false,
                        witness: Some(buffer),
                        checked,
                        mode: ListKind::General,
                        k,
                    });
                }
            }
        }
        GeneralPalette::Paper => {
            let mut en = PaperPaletteAssignments::new(n, k);
            while en.advance() {
                checked += 1;
                let mut lists = Vec::new();
                en.write_current(&mut lists);
                let assignment = ListAssignment::General(lists);
                if !colorable(g, &rev, &assignment, &mut scratch) {
                    return Ok(ChoosabilityVerdict {
                        choosable: false,
                        witness: Some(assignment),
                        checked,
                        mode: ListKind::General,
                        k,
                    });
                }
            }
        }
    }
    debug_assert_eq!(checked, estimated);
    Ok(ChoosabilityVerdict {
        choosable: true,
        witness: None,
        checked,
        mode: ListKind::General,
        k,
    })
}

fn copy_general(buffer: &mut ListAssignment, current: &[Vec<Color>]) {
    let ListAssignment::General(ls) = buffer else {
        unreachable!()
    };
    for (dst, src) in ls.iter_mut().zip(current) {
        dst.clone_from(src);
    }
}

/// Is every assignment of size-k interval lists colorable?
pub fn is_k_gamma_mu_choosable(
    g: &Graph,
    k: usize,
    offset_bound: Option<Color>,
    limits: EnumLimits,
) -> Result<ChoosabilityVerdict, ChoosabilityError> {
    assert!(k >= 1);
    let n = g.n();
    let bound = offset_bound.unwrap_or_else(|| default_offset_bound(n, k));
    let estimated = interval_assignment_count(n, bound);
    if estimated > limits.cap && !limits.force {
        return Err(ChoosabilityError::CapExceeded {
            estimated,
            cap: limits.cap,
        });
    }
    let rev = reverse_elimination(g);
    let mut scratch = Vec::new();
    let mut en = IntervalAssignments::new(n, k, bound);
    let mut buffer = ListAssignment::Interval(Vec::new());
    let mut checked: u128 = 0;
    while en.advance() {
        checked += 1;
        {
            let ListAssignment::Interval(ls) = &mut buffer else {
                unreachable!()
            };
            en.write_current(ls);
        }
        if !colorable(g, &rev, &buffer, &mut scratch) {
            return Ok(ChoosabilityVerdict {
                choosable: false,
                witness: Some(buffer),
                checked,
                mode: ListKind::Interval,
                k,
            });
        }
    }
    debug_assert_eq!(checked, estimated);
    Ok(ChoosabilityVerdict {
        choosable: true,
        witness: None,
        checked,
        mode: ListKind::Interval,
        k,
    })
}

/// Least k for which the graph is k-choosable. The default search bound is
/// degeneracy + 1, where the greedy argument guarantees success.
pub fn choice_number(
    g: &Graph,
    k_max: Option<usize>,
    limits: EnumLimits,
) -> Result<usize, ChoosabilityError> {
    let k_max = k_max.unwrap_or_else(|| degeneracy_ordering(g).degeneracy + 1);
    for k in 1..=k_max {
        let v = is_k_choosable(g, k, GeneralPalette::Canonical { color_budget: None }, limits)?;
        if v.choosable {
            return Ok(k);
        }
    }
    Err(ChoosabilityError::BoundExhausted { k_max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMuMode {
    /// Exhaustive interval enumeration at the default offset bound.
    Enumerate,
    /// Chromatic number: equal by the residue construction plus the
    /// uniform-list lower bound.
    Fast,
}

/// Least k for which the graph is k-(gamma,mu)-choosable.
pub fn gamma_mu_choice_number(
    g: &Graph,
    mode: GammaMuMode,
    limits: EnumLimits,
) -> Result<usize, ChoosabilityError> {
    match mode {
        GammaMuMode::Fast => Ok(crate::solve::chromatic_number(g).0),
        GammaMuMode::Enumerate => {
            let k_max = degeneracy_ordering(g).degeneracy + 1;
            for k in 1..=k_max {
                if is_k_gamma_mu_choosable(g, k, None, limits)?.choosable {
                    return Ok(k);
                }
            }
            Err(ChoosabilityError::BoundExhausted { k_max })
        }
    }
}
