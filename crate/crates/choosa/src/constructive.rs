//! Constructive colorings: the residue-class construction, systems of
//! distinct representatives with Hall certificates, and the K_{n,n}
//! size-2 interval procedures.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{gen_complete_bipartite, Graph};
use crate::lists::{is_proper, respects_lists, Color, Coloring, IntervalList, ListAssignment};

/// The partition of the integers into residue classes mod k, held
/// intensionally by the membership predicate.
#[derive(Debug, Clone, Copy)]
pub struct ResidueClasses {
    k: Color,
}

impl ResidueClasses {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1);
        ResidueClasses { k: k as Color }
    }

    pub fn modulus(&self) -> usize {
        self.k as usize
    }

    /// The class index `r` with `x` congruent to `r` (mod k).
    pub fn class_of(&self, x: Color) -> Color {
        x.rem_euclid(self.k)
    }

    pub fn contains(&self, r: Color, x: Color) -> bool {
        self.class_of(x) == r
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResidueError {
    #[error("base coloring is not proper")]
    ImproperBase,
    #[error("base coloring uses color {c} outside 0..{k}")]
    BaseColorOutOfRange { c: Color, k: usize },
    #[error("list assignment is not interval kind")]
    NotInterval,
    #[error("list of vertex {v} has {size} colors, need at least {k}")]
    ListTooSmall { v: usize, size: usize, k: usize },
}

/// Lifts a proper k-coloring `c` to a list coloring: each vertex takes the
/// unique color among the first k elements of its interval congruent to
/// `c(v)` mod k. Adjacent vertices land in disjoint residue classes, so the
/// result is proper and respects the lists.
pub fn residue_coloring(
    g: &Graph,
    base: &Coloring,
    lists: &ListAssignment,
) -> Result<Coloring, ResidueError> {
    let k = base.0.iter().max().map_or(1, |&m| m as usize + 1);
    residue_coloring_mod(g, base, k, lists)
}

/// Same as [`residue_coloring`] with an explicit modulus, for base
/// colorings that do not use their full palette.
pub fn residue_coloring_mod(
    g: &Graph,
    base: &Coloring,
    k: usize,
    lists: &ListAssignment,
) -> Result<Coloring, ResidueError> {
    assert_eq!(base.len(), g.n());
    assert_eq!(lists.len(), g.n());
    if let Some(&c) = base.0.iter().find(|&&c| c < 0 || c >= k as Color) {
        return Err(ResidueError::BaseColorOutOfRange { c, k });
    }
    if !is_proper(g, base) {
        return Err(ResidueError::ImproperBase);
    }
    let ListAssignment::Interval(intervals) = lists else {
        return Err(ResidueError::NotInterval);
    };
    let classes = ResidueClasses::new(k);
    let mut out = Vec::with_capacity(g.n());
    for (v, iv) in intervals.iter().enumerate() {
        if iv.size() < k {
            return Err(ResidueError::ListTooSmall {
                v,
                size: iv.size(),
                k,
            });
        }
        let r = classes.class_of(base.color(v));
        let f = (iv.gamma()..iv.gamma() + k as Color)
            .find(|&x| classes.contains(r, x))
            .expect("length-k interval meets every residue class");
        out.push(f);
    }
    let f = Coloring(out);
    debug_assert!(is_proper(g, &f) && respects_lists(&f, lists));
    Ok(f)
}

/// Ordered family of nonempty finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily(Vec<BTreeSet<Color>>);

impl SetFamily {
    pub fn new(sets: Vec<BTreeSet<Color>>) -> Self {
        assert!(sets.iter().all(|s| !s.is_empty()), "empty member set");
        SetFamily(sets)
    }

    pub fn from_slices(sets: &[&[Color]]) -> Self {
        SetFamily::new(sets.iter().map(|s| s.iter().copied().collect()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sets(&self) -> &[BTreeSet<Color>] {
        &self.0
    }
}

struct Matching {
    /// set index -> chosen element position in `elements`
    rep: Vec<Option<usize>>,
    /// element position -> matched set index
    owner: Vec<Option<usize>>,
    elements: Vec<Color>,
}

// augmenting-path bipartite matching between set indices and elements
fn maximum_matching(family: &SetFamily) -> Matching {
    let mut elements: Vec<Color> = family
        .sets()
        .iter()
        .flat_map(|s| s.iter().copied())
        .collect();
    elements.sort_unstable();
    elements.dedup();
    let index_of = |c: Color| elements.binary_search(&c).unwrap();
    let adjacency: Vec<Vec<usize>> = family
        .sets()
        .iter()
        .map(|s| s.iter().map(|&c| index_of(c)).collect())
        .collect();

    let m = family.len();
    let mut rep: Vec<Option<usize>> = vec![None; m];
    let mut owner: Vec<Option<usize>> = vec![None; elements.len()];

    fn augment(
        i: usize,
        adjacency: &[Vec<usize>],
        rep: &mut [Option<usize>],
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &e in &adjacency[i] {
            if visited[e] {
                continue;
            }
            visited[e] = true;
            if owner[e].is_none()
                || augment(owner[e].unwrap(), adjacency, rep, owner, visited)
            {
                owner[e] = Some(i);
                rep[i] = Some(e);
                return true;
            }
        }
        false
    }

    for i in 0..m {
        let mut visited = vec![false; elements.len()];
        augment(i, &adjacency, &mut rep, &mut owner, &mut visited);
    }
    Matching {
        rep,
        owner,
        elements,
    }
}

/// System of distinct representatives: `x_i in S_i`, all distinct.
pub fn find_sdr(family: &SetFamily) -> Option<Vec<Color>> {
    let matching = maximum_matching(family);
    matching
        .rep
        .iter()
        .map(|r| r.map(|e| matching.elements[e]))
        .collect()
}

/// A Hall violator: indices `I` with `|union of S_i| < |I|`, present
/// exactly when no SDR exists. Extracted from the matching's deficiency
/// set (sets reachable from an unmatched set by alternating paths).
pub fn hall_violator(family: &SetFamily) -> Option<Vec<usize>> {
    let matching = maximum_matching(family);
    let unmatched: Vec<usize> = (0..family.len())
        .filter(|&i| matching.rep[i].is_none())
        .collect();
    if unmatched.is_empty() {
        return None;
    }
    let adjacency: Vec<Vec<usize>> = family
        .sets()
        .iter()
        .map(|s| {
            s.iter()
                .map(|&c| matching.elements.binary_search(&c).unwrap())
                .collect()
        })
        .collect();
    let mut in_i = vec![false; family.len()];
    let mut stack = unmatched.clone();
    for &i in &unmatched {
        in_i[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &e in &adjacency[i] {
            if let Some(j) = matching.owner[e] {
                if !in_i[j] {
                    in_i[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    let violator: Vec<usize> = (0..family.len()).filter(|&i| in_i[i]).collect();
    debug_assert!({
        let union: BTreeSet<Color> = violator
            .iter()
            .flat_map(|&i| family.sets()[i].iter().copied())
            .collect();
        union.len() < violator.len()
    });
    Some(violator)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnnError {
    #[error("expected {expected} lists, got {got}")]
    WrongListCount { expected: usize, got: usize },
    #[error("list {i} is not a size-2 interval")]
    WrongListSize { i: usize },
    #[error("lists {i} and {j} are equal, hypothesis needs pairwise distinct lists")]
    SharedList { i: usize, j: usize },
    #[error("a side-V list equals a side-W list, violating the hypothesis")]
    CrossSharedList,
    #[error("internal invariant failed: {0}")]
    Internal(&'static str),
}

fn check_size2(lists: &[IntervalList]) -> Result<(), KnnError> {
    for (i, l) in lists.iter().enumerate() {
        if l.size() != 2 {
            return Err(KnnError::WrongListSize { i });
        }
    }
    Ok(())
}

/// Shared-lists case: list i sits on both `v_i` and `w_i` of K_{n,n},
/// lists pairwise distinct. Colors pairs in ascending-gamma order; the
/// default split is (gamma to v, gamma+1 to w), flipped when it would
/// collide with the opposite side.
///
/// Vertices `0..n` are side V, `n..2n` side W.
pub fn knn_lemma1_coloring(n: usize, shared_lists: &[IntervalList]) -> Result<Coloring, KnnError> {
    if shared_lists.len() != n {
        return Err(KnnError::WrongListCount {
            expected: n,
            got: shared_lists.len(),
        });
    }
    check_size2(shared_lists)?;
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&i| shared_lists[i].gamma());
    for w in sorted.windows(2) {
        if shared_lists[w[0]] == shared_lists[w[1]] {
            return Err(KnnError::SharedList { i: w[0], j: w[1] });
        }
    }
    let mut v_used: BTreeSet<Color> = BTreeSet::new();
    let mut w_used: BTreeSet<Color> = BTreeSet::new();
    let mut f = vec![0; 2 * n];
    for &i in &sorted {
        let gamma = shared_lists[i].gamma();
        // orientation (v=gamma, w=gamma+1) unless it clashes across sides
        let (cv, cw) = if !w_used.contains(&gamma) && !v_used.contains(&(gamma + 1)) {
            (gamma, gamma + 1)
        } else if !w_used.contains(&(gamma + 1)) && !v_used.contains(&gamma) {
            (gamma + 1, gamma)
        } else {
            return Err(KnnError::Internal("both orientations collide"));
        };
        v_used.insert(cv);
        w_used.insert(cw);
        f[i] = cv;
        f[n + i] = cw;
    }
    let coloring = Coloring(f);
    let g = gen_complete_bipartite(n, n);
    if !is_proper(&g, &coloring) {
        return Err(KnnError::Internal("constructed coloring not proper"));
    }
    Ok(coloring)
}

/// All-different case: no side-V list equals a side-W list. The distinct
/// lists across both sides get distinct representatives (distinct size-2
/// intervals pairwise intersect in at most one element, so Hall's
/// condition holds) and every vertex takes its list's representative.
pub fn knn_lemma2_coloring(
    n: usize,
    lists_v: &[IntervalList],
    lists_w: &[IntervalList],
) -> Result<Coloring, KnnError> {
    if lists_v.len() != n || lists_w.len() != n {
        return Err(KnnError::WrongListCount {
            expected: n,
            got: lists_v.len().max(lists_w.len()),
        });
    }
    check_size2(lists_v)?;
    check_size2(lists_w)?;
    for lv in lists_v {
        if lists_w.contains(lv) {
            return Err(KnnError::CrossSharedList);
        }
    }
    let mut distinct: Vec<IntervalList> = Vec::new();
    for &l in lists_v.iter().chain(lists_w) {
        if !distinct.contains(&l) {
            distinct.push(l);
        }
    }
    for (a, sa) in distinct.iter().enumerate() {
        for sb in distinct.iter().skip(a + 1) {
            let overlap = sa.iter().filter(|&c| sb.contains(c)).count();
            if overlap > 1 {
                return Err(KnnError::Internal("distinct size-2 intervals overlap fully"));
            }
        }
    }
    let family = SetFamily::new(distinct.iter().map(|l| l.iter().collect()).collect());
    let sdr = find_sdr(&family).ok_or(KnnError::Internal("SDR unexpectedly absent"))?;
    let rep_of = |l: &IntervalList| sdr[distinct.iter().position(|d| d == l).unwrap()];
    let f: Vec<Color> = lists_v
        .iter()
        .chain(lists_w)
        .map(rep_of)
        .collect();
    let coloring = Coloring(f);
    let g = gen_complete_bipartite(n, n);
    if !is_proper(&g, &coloring) {
        return Err(KnnError::Internal("constructed coloring not proper"));
    }
    Ok(coloring)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnnStrategy {
    Lemma1,
    Lemma2,
    Residue,
}

/// Total procedure behind "K_{n,n} is 2-(gamma,mu)-choosable": dispatches
/// to the matching lemma when its hypothesis holds exactly, otherwise
/// falls back to the residue construction over the natural 2-coloring.
pub fn knn_interval2_coloring(
    n: usize,
    lists: &ListAssignment,
) -> Result<(Coloring, KnnStrategy), KnnError> {
    let ListAssignment::Interval(all) = lists else {
        return Err(KnnError::Internal("interval lists required"));
    };
    if all.len() != 2 * n {
        return Err(KnnError::WrongListCount {
            expected: 2 * n,
            got: all.len(),
        });
    }
    check_size2(all)?;
    let (side_v, side_w) = all.split_at(n);

    let v_distinct = pairwise_distinct(side_v);
    let w_distinct = pairwise_distinct(side_w);
    let same_multiset = {
        let mut a = side_v.to_vec();
        let mut b = side_w.to_vec();
        a.sort();
        b.sort();
        a == b
    };
    if v_distinct && w_distinct && same_multiset {
        // realign W so that w_i carries the same list as v_i
        let mut perm = vec![0usize; n];
        let mut taken = vec![false; n];
        for (i, lv) in side_v.iter().enumerate() {
            let j = (0..n)
                .find(|&j| !taken[j] && side_w[j] == *lv)
                .expect("multisets match");
            taken[j] = true;
            perm[i] = j;
        }
        let paired = knn_lemma1_coloring(n, side_v)?;
        let mut f = vec![0; 2 * n];
        f[..n].copy_from_slice(&paired.0[..n]);
        for (i, &j) in perm.iter().enumerate() {
            f[n + j] = paired.color(n + i);
        }
        let coloring = Coloring(f);
        let g = gen_complete_bipartite(n, n);
        if !is_proper(&g, &coloring) {
            return Err(KnnError::Internal("realigned coloring not proper"));
        }
        return Ok((coloring, KnnStrategy::Lemma1));
    }
    if side_v.iter().all(|lv| !side_w.contains(lv)) {
        return Ok((knn_lemma2_coloring(n, side_v, side_w)?, KnnStrategy::Lemma2));
    }
    // mixed configuration: the natural 2-coloring plus residue classes
    let g = gen_complete_bipartite(n, n);
    let base = Coloring((0..2 * n).map(|v| if v < n { 0 } else { 1 }).collect());
    let f = residue_coloring_mod(&g, &base, 2, lists)
        .map_err(|_| KnnError::Internal("residue fallback failed"))?;
    Ok((f, KnnStrategy::Residue))
}

fn pairwise_distinct(lists: &[IntervalList]) -> bool {
    for (i, a) in lists.iter().enumerate() {
        if lists[i + 1..].contains(a) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::solve::{exists_list_coloring, SolveOptions};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diamond() -> Graph {
        Graph::with_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    }

    #[test]
    fn figure_instance_residue_coloring() {
        let g = diamond();
        let base = Coloring(vec![0, 1, 2, 1]);
        let lists = ListAssignment::Interval(vec![
            IntervalList::new(2, 4),
            IntervalList::new(3, 5),
            IntervalList::new(1, 3),
            IntervalList::new(4, 6),
        ]);
        let f = residue_coloring(&g, &base, &lists).unwrap();
        assert_eq!(f.0, vec![3, 4, 2, 4]);
    }

    #[test]
    fn identity_interval_reproduces_base() {
        let g = gen_cycle(5);
        let base = crate::solve::chromatic_number(&g).1;
        let k = 3;
        let lists = ListAssignment::uniform_interval(5, 0, k - 1);
        let f = residue_coloring(&g, &base, &lists).unwrap();
        assert_eq!(f, base);
    }

    #[test]
    fn residue_rejects_bad_inputs() {
        let g = diamond();
        let lists = ListAssignment::uniform_interval(4, 0, 2);
        assert_eq!(
            residue_coloring(&g, &Coloring(vec![0, 0, 1, 2]), &lists),
            Err(ResidueError::ImproperBase)
        );
        let general = ListAssignment::general(vec![vec![0, 1, 2]; 4]);
        assert_eq!(
            residue_coloring(&g, &Coloring(vec![0, 1, 2, 1]), &general),
            Err(ResidueError::NotInterval)
        );
        let small = ListAssignment::uniform_interval(4, 0, 1);
        assert!(matches!(
            residue_coloring(&g, &Coloring(vec![0, 1, 2, 1]), &small),
            Err(ResidueError::ListTooSmall { .. })
        ));
    }

    #[test]
    fn residue_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for case in 0..200 {
            let n = 2 + case % 9; // up to 10 vertices
            let g = gen_random_graph(n, 0.5, case as u64);
            let (k, base) = crate::solve::chromatic_number(&g);
            let lists = ListAssignment::Interval(
                (0..n)
                    .map(|_| {
                        let gamma = rng.gen_range(-15..15);
                        IntervalList::new(gamma, gamma + k as Color - 1)
                    })
                    .collect(),
            );
            let f = residue_coloring(&g, &base, &lists).unwrap();
            assert!(is_proper(&g, &f));
            assert!(respects_lists(&f, &lists));
            for v in 0..n {
                assert_eq!(f.color(v).rem_euclid(k as Color), base.color(v).rem_euclid(k as Color));
            }
            assert!(exists_list_coloring(&g, &lists, SolveOptions::default()).is_some());
        }
    }

    #[test]
    fn sdr_basic() {
        let fam = SetFamily::from_slices(&[&[1, 2], &[2, 3], &[1, 3]]);
        let sdr = find_sdr(&fam).unwrap();
        for (x, s) in sdr.iter().zip(fam.sets()) {
            assert!(s.contains(x));
        }
        let distinct: BTreeSet<_> = sdr.iter().collect();
        assert_eq!(distinct.len(), 3);
        assert_eq!(hall_violator(&fam), None);
    }

    #[test]
    fn sdr_absent() {
        let fam = SetFamily::from_slices(&[&[1], &[1]]);
        assert_eq!(find_sdr(&fam), None);
        assert_eq!(hall_violator(&fam), Some(vec![0, 1]));
        let fam = SetFamily::from_slices(&[&[1, 2], &[1, 2], &[1, 2]]);
        assert_eq!(hall_violator(&fam), Some(vec![0, 1, 2]));
    }

    // factorial-time oracle over injective choice functions
    fn brute_sdr_exists(fam: &SetFamily) -> bool {
        fn rec(fam: &SetFamily, i: usize, used: &mut Vec<Color>) -> bool {
            if i == fam.len() {
                return true;
            }
            for &c in fam.sets()[i].iter() {
                if !used.contains(&c) {
                    used.push(c);
                    if rec(fam, i + 1, used) {
                        used.pop();
                        return true;
                    }
                    used.pop();
                }
            }
            false
        }
        rec(fam, 0, &mut Vec::new())
    }

    #[test]
    fn sdr_matches_brute_force_on_random_interval_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..12 {
            let m = rng.gen_range(1..=6);
            let fam = SetFamily::new(
                (0..m)
                    .map(|_| {
                        let gamma: Color = rng.gen_range(0..6);
                        [gamma, gamma + 1].into_iter().collect()
                    })
                    .collect(),
            );
            assert_eq!(find_sdr(&fam).is_some(), brute_sdr_exists(&fam), "{fam:?}");
        }
    }

    #[test]
    fn lemma1_small_cases() {
        let f = knn_lemma1_coloring(1, &[IntervalList::new(1, 2)]).unwrap();
        assert_eq!(f.0, vec![1, 2]); // v gets gamma
        let lists = [IntervalList::new(1, 2), IntervalList::new(2, 3)];
        let f = knn_lemma1_coloring(2, &lists).unwrap();
        let g = gen_complete_bipartite(2, 2);
        assert!(is_proper(&g, &f));
        for i in 0..2 {
            assert!(lists[i].contains(f.color(i)) && lists[i].contains(f.color(2 + i)));
        }
    }

    #[test]
    fn lemma1_chain_of_consecutive_lists() {
        let lists: Vec<IntervalList> = (1..=4).map(|g| IntervalList::new(g, g + 1)).collect();
        let f = knn_lemma1_coloring(4, &lists).unwrap();
        let g = gen_complete_bipartite(4, 4);
        assert!(is_proper(&g, &f));
        for i in 0..4 {
            assert!(lists[i].contains(f.color(i)) && lists[i].contains(f.color(4 + i)));
        }
        // backtracking oracle agrees a coloring exists
        let assignment = ListAssignment::Interval(
            lists.iter().chain(lists.iter()).copied().collect(),
        );
        assert!(exists_list_coloring(&g, &assignment, SolveOptions::default()).is_some());
    }

    #[test]
    fn lemma1_rejects_duplicates() {
        let lists = [IntervalList::new(1, 2), IntervalList::new(1, 2)];
        assert!(matches!(
            knn_lemma1_coloring(2, &lists),
            Err(KnnError::SharedList { .. })
        ));
    }

    #[test]
    fn lemma2_cases() {
        let f = knn_lemma2_coloring(1, &[IntervalList::new(1, 2)], &[IntervalList::new(3, 4)])
            .unwrap();
        assert!(f.color(0) != f.color(1));
        let lv = [IntervalList::new(1, 2), IntervalList::new(1, 2)];
        let lw = [IntervalList::new(2, 3), IntervalList::new(3, 4)];
        let f = knn_lemma2_coloring(2, &lv, &lw).unwrap();
        let g = gen_complete_bipartite(2, 2);
        assert!(is_proper(&g, &f));
        let lv: Vec<_> = [1, 3, 5].map(|g| IntervalList::new(g, g + 1)).to_vec();
        let lw: Vec<_> = [2, 4, 6].map(|g| IntervalList::new(g, g + 1)).to_vec();
        let f = knn_lemma2_coloring(3, &lv, &lw).unwrap();
        assert!(is_proper(&gen_complete_bipartite(3, 3), &f));
    }

    #[test]
    fn lemma2_rejects_cross_shared_lists() {
        let shared = [IntervalList::new(1, 2)];
        assert_eq!(
            knn_lemma2_coloring(1, &shared, &shared),
            Err(KnnError::CrossSharedList)
        );
    }

    #[test]
    fn dispatcher_uniform_lists_take_residue_path() {
        let lists = ListAssignment::uniform_interval(4, 5, 6);
        let (f, strategy) = knn_interval2_coloring(2, &lists).unwrap();
        assert_eq!(strategy, KnnStrategy::Residue);
        let g = gen_complete_bipartite(2, 2);
        assert!(is_proper(&g, &f) && respects_lists(&f, &lists));
    }

    #[test]
    fn dispatcher_routes_lemma_configurations() {
        // shared across sides, distinct within: Lemma 1
        let lists = ListAssignment::Interval(vec![
            IntervalList::new(1, 2),
            IntervalList::new(4, 5),
            IntervalList::new(4, 5),
            IntervalList::new(1, 2),
        ]);
        let (f, strategy) = knn_interval2_coloring(2, &lists).unwrap();
        assert_eq!(strategy, KnnStrategy::Lemma1);
        assert!(respects_lists(&f, &lists));
        assert!(is_proper(&gen_complete_bipartite(2, 2), &f));
        // fully disjoint across sides: Lemma 2
        let lists = ListAssignment::Interval(vec![
            IntervalList::new(1, 2),
            IntervalList::new(2, 3),
            IntervalList::new(5, 6),
            IntervalList::new(6, 7),
        ]);
        let (f, strategy) = knn_interval2_coloring(2, &lists).unwrap();
        assert_eq!(strategy, KnnStrategy::Lemma2);
        assert!(respects_lists(&f, &lists));
        assert!(is_proper(&gen_complete_bipartite(2, 2), &f));
    }

    #[test]
    fn dispatcher_random_instances_always_proper() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let g = gen_complete_bipartite(3, 3);
        for _ in 0..100 {
            let lists = ListAssignment::Interval(
                (0..6)
                    .map(|_| {
                        let gamma = rng.gen_range(0..8);
                        IntervalList::new(gamma, gamma + 1)
                    })
                    .collect(),
            );
            let (f, _) = knn_interval2_coloring(3, &lists).unwrap();
            assert!(is_proper(&g, &f) && respects_lists(&f, &lists));
            assert!(exists_list_coloring(&g, &lists, SolveOptions::default()).is_some());
        }
    }
}
