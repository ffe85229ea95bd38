//! Exact backtracking solvers: list coloring, k-coloring, chromatic number
//! and the degeneracy-greedy list coloring.

use crate::graph::{degeneracy_ordering, Graph};
use crate::lists::{Color, Coloring, ListAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Vertices tried in index order.
    #[default]
    Given,
    /// Smallest list first (ties by index); order fixed up front.
    MostConstrainedFirst,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub vertex_order: VertexOrder,
}

/// Depth-first search for a proper coloring with `f(v) in L(v)`.
///
/// Colors are tried in ascending order, so the returned coloring is the
/// lexicographically first under the chosen vertex order. Properness is
/// checked incrementally at each assignment.
pub fn exists_list_coloring(
    g: &Graph,
    lists: &ListAssignment,
    opts: SolveOptions,
) -> Option<Coloring> {
    assert_eq!(g.n(), lists.len(), "graph/list domain mismatch");
    let n = g.n();
    let order: Vec<usize> = match opts.vertex_order {
        VertexOrder::Given => (0..n).collect(),
        VertexOrder::MostConstrainedFirst => {
            let mut v: Vec<usize> = (0..n).collect();
            v.sort_by_key(|&v| (lists.list_size(v), v));
            v
        }
    };
    let mut assigned: Vec<Option<Color>> = vec![None; n];
    if dfs(g, lists, &order, 0, &mut assigned) {
        Some(Coloring(assigned.into_iter().map(|c| c.unwrap()).collect()))
    } else {
        None
    }
}

fn dfs(
    g: &Graph,
    lists: &ListAssignment,
    order: &[usize],
    depth: usize,
    assigned: &mut Vec<Option<Color>>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in lists.colors(v) {
        if g.neighbors(v).any(|u| assigned[u] == Some(c)) {
            continue;
        }
        assigned[v] = Some(c);
        if dfs(g, lists, order, depth + 1, assigned) {
            return true;
        }
        assigned[v] = None;
    }
    false
}

/// Proper coloring with colors `0..k`, if one exists.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    assert!(k >= 1);
    let lists = ListAssignment::uniform_interval(g.n(), 0, k as Color - 1);
    exists_list_coloring(
        g,
        &lists,
        SolveOptions {
            vertex_order: VertexOrder::MostConstrainedFirst,
        },
    )
}

/// Smallest k admitting a proper k-coloring, with a witness.
/// Edgeless graphs report k = 1.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.n() == 0 {
        return (1, Coloring(vec![]));
    }
    for k in 1..=degeneracy_ordering(g).degeneracy + 1 {
        if let Some(c) = k_colorable(g, k) {
            return (k, c);
        }
    }
    unreachable!("degeneracy+1 colors always suffice");
}

/// Colors vertices in reverse elimination order, giving each the smallest
/// list color unused among already-colored neighbors. Total whenever every
/// list has more than `degeneracy(G)` colors.
pub fn greedy_degeneracy_list_color(g: &Graph, lists: &ListAssignment) -> Option<Coloring> {
    assert_eq!(g.n(), lists.len(), "graph/list domain mismatch");
    let order = degeneracy_ordering(g).ordering;
    let mut assigned: Vec<Option<Color>> = vec![None; g.n()];
    for &v in order.iter().rev() {
        let c = lists
            .colors(v)
            .find(|&c| !g.neighbors(v).any(|u| assigned[u] == Some(c)))?;
        assigned[v] = Some(c);
    }
    Some(Coloring(assigned.into_iter().map(|c| c.unwrap()).collect()))
}
