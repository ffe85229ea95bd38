//! Color lists: consecutive intervals, general finite sets, proper/list
//! coloring checks, and the canonical enumerations the choosability
//! checkers range over.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

pub type Color = i64;

/// The consecutive color set `{gamma, gamma+1, ..., mu}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalList {
    gamma: Color,
    mu: Color,
}

impl IntervalList {
    pub fn new(gamma: Color, mu: Color) -> Self {
        assert!(gamma <= mu, "empty interval [{gamma}, {mu}]");
        IntervalList { gamma, mu }
    }

    pub fn gamma(&self) -> Color {
        self.gamma
    }

    pub fn mu(&self) -> Color {
        self.mu
    }

    pub fn size(&self) -> usize {
        (self.mu - self.gamma + 1) as usize
    }

    pub fn contains(&self, c: Color) -> bool {
        self.gamma <= c && c <= self.mu
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> {
        self.gamma..=self.mu
    }
}

impl fmt::Debug for IntervalList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.gamma, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListKind {
    Interval,
    General,
}

/// Per-vertex allowed color sets. General lists are kept sorted and deduped.
#[derive(Clone, PartialEq, Eq)]
pub enum ListAssignment {
    Interval(Vec<IntervalList>),
    General(Vec<Vec<Color>>),
}

impl ListAssignment {
    pub fn general(lists: Vec<Vec<Color>>) -> Self {
        let mut lists = lists;
        for l in lists.iter_mut() {
            l.sort_unstable();
            l.dedup();
            assert!(!l.is_empty(), "empty color list");
        }
        ListAssignment::General(lists)
    }

    pub fn uniform_interval(n: usize, gamma: Color, mu: Color) -> Self {
        ListAssignment::Interval(vec![IntervalList::new(gamma, mu); n])
    }

    pub fn kind(&self) -> ListKind {
        match self {
            ListAssignment::Interval(_) => ListKind::Interval,
            ListAssignment::General(_) => ListKind::General,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ListAssignment::Interval(v) => v.len(),
            ListAssignment::General(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn list_size(&self, v: usize) -> usize {
        match self {
            ListAssignment::Interval(ls) => ls[v].size(),
            ListAssignment::General(ls) => ls[v].len(),
        }
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        match self {
            ListAssignment::Interval(ls) => ls[v].contains(c),
            ListAssignment::General(ls) => ls[v].binary_search(&c).is_ok(),
        }
    }

    /// Colors of `L(v)` in ascending order.
    pub fn colors(&self, v: usize) -> Box<dyn Iterator<Item = Color> + '_> {
        match self {
            ListAssignment::Interval(ls) => Box::new(ls[v].iter()),
            ListAssignment::General(ls) => Box::new(ls[v].iter().copied()),
        }
    }
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ListAssignment::Interval(ls) => write!(f, "Interval{ls:?}"),
            ListAssignment::General(ls) => write!(f, "General{ls:?}"),
        }
    }
}

/// Per-vertex color map over `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring{:?}", self.0)
    }
}

/// True iff `f(u) != f(v)` for every edge.
pub fn is_proper(g: &Graph, f: &Coloring) -> bool {
    assert_eq!(f.len(), g.n(), "coloring does not cover all vertices");
    g.edges().all(|(u, v)| f.color(u) != f.color(v))
}

/// True iff `f(v)` lies in `L(v)` for all vertices.
pub fn respects_lists(f: &Coloring, lists: &ListAssignment) -> bool {
    assert_eq!(f.len(), lists.len(), "coloring/list domain mismatch");
    (0..f.len()).all(|v| lists.contains(v, f.color(v)))
}

pub fn default_offset_bound(n: usize, k: usize) -> Color {
    (k as Color) * (n.saturating_sub(1) as Color)
}

pub fn default_color_budget(n: usize, k: usize) -> Color {
    (n * k) as Color
}

/// Number of normalized gamma vectors: `(bound+1)^n - bound^n`.
pub fn interval_assignment_count(n: usize, offset_bound: Color) -> u128 {
    if n == 0 {
        return 1;
    }
    let b = offset_bound as u128;
    (b + 1).pow(n as u32) - b.pow(n as u32)
}

/// Interval assignments `v -> [gamma_v, gamma_v + k - 1]` with offsets in
/// `0..=offset_bound`, normalized to `min gamma = 0`, in lexicographic
/// order of the gamma vector.
pub struct IntervalAssignments {
    k: usize,
    bound: Color,
    gammas: Vec<Color>,
    state: OdometerState,
}

enum OdometerState {
    Fresh,
    Running,
    Done,
}

impl IntervalAssignments {
    pub fn new(n: usize, k: usize, offset_bound: Color) -> Self {
        assert!(k >= 1);
        assert!(offset_bound >= 0);
        IntervalAssignments {
            k,
            bound: offset_bound,
            gammas: vec![0; n],
            state: OdometerState::Fresh,
        }
    }

    /// Positions at the next normalized gamma vector; false when exhausted.
    pub fn advance(&mut self) -> bool {
        loop {
            match self.state {
                OdometerState::Fresh => {
                    self.state = OdometerState::Running;
                }
                OdometerState::Running => {
                    let mut i = self.gammas.len();
                    loop {
                        if i == 0 {
                            self.state = OdometerState::Done;
                            return false;
                        }
                        i -= 1;
                        if self.gammas[i] < self.bound {
                            self.gammas[i] += 1;
                            for g in self.gammas[i + 1..].iter_mut() {
                                *g = 0;
                            }
                            break;
                        }
                    }
                }
                OdometerState::Done => return false,
            }
            // normalization: shifting every interval is a color relabeling
            if self.gammas.is_empty() || self.gammas.contains(&0) {
                return true;
            }
        }
    }

    pub fn gammas(&self) -> &[Color] {
        &self.gammas
    }

    pub fn write_current(&self, out: &mut Vec<IntervalList>) {
        out.clear();
        out.extend(
            self.gammas
                .iter()
                .map(|&g| IntervalList::new(g, g + self.k as Color - 1)),
        );
    }
}

impl Iterator for IntervalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        if !self.advance() {
            return None;
        }
        let mut out = Vec::new();
        self.write_current(&mut out);
        Some(ListAssignment::Interval(out))
    }
}

pub fn enumerate_interval_assignments(
    n: usize,
    k: usize,
    offset_bound: Color,
) -> IntervalAssignments {
    IntervalAssignments::new(n, k, offset_bound)
}

/// Relabels colors by first appearance across the concatenated,
/// vertex-ordered, sorted lists; labels start at 1.
pub fn canonicalize(lists: &[Vec<Color>]) -> Vec<Vec<Color>> {
    let mut map: HashMap<Color, Color> = HashMap::new();
    let mut next = 1;
    for l in lists {
        debug_assert!(l.windows(2).all(|w| w[0] < w[1]), "lists must be sorted");
        for &c in l {
            map.entry(c).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            });
        }
    }
    lists
        .iter()
        .map(|l| {
            let mut out: Vec<Color> = l.iter().map(|c| map[c]).collect();
            out.sort_unstable();
            out
        })
        .collect()
}

pub fn is_canonical(lists: &[Vec<Color>]) -> bool {
    canonicalize(lists) == lists
}

/// Exact count of canonical assignments, by dynamic programming over the
/// number of colors already introduced.
pub fn canonical_assignment_count(n: usize, k: usize, color_budget: Color) -> u128 {
    let budget = color_budget.max(0) as usize;
    let mut f: HashMap<usize, u128> = HashMap::from([(0, 1)]);
    for _ in 0..n {
        let mut g: HashMap<usize, u128> = HashMap::new();
        for (&m, &c) in &f {
            for t in 0..=k {
                if m + t > budget {
                    continue;
                }
                let ways = binomial(m, k - t);
                if ways > 0 {
                    *g.entry(m + t).or_default() += c * ways;
                }
            }
        }
        f = g;
    }
    f.values().sum()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// General assignments of exactly-k-element lists over colors
/// `1..=color_budget`, de-duplicated up to color renaming by restricted
/// growth: scanning the vertex-ordered sorted lists, new colors must appear
/// as `m+1, m+2, ...` where `m` counts colors already seen.
pub struct CanonicalAssignments {
    n: usize,
    k: usize,
    budget: usize,
    // per vertex: index into the choice table for its m_before
    stack: Vec<(usize, usize)>, // (m_before, choice index)
    current: Vec<Vec<Color>>,
    choice_cache: HashMap<usize, std::rc::Rc<Vec<Vec<Color>>>>,
    state: OdometerState,
}

impl CanonicalAssignments {
    pub fn new(n: usize, k: usize, color_budget: Color) -> Self {
        assert!(k >= 1);
        assert!(color_budget >= k as Color, "budget below list size");
        CanonicalAssignments {
            n,
            k,
            budget: color_budget as usize,
            stack: Vec::new(),
            current: vec![Vec::new(); n],
            choice_cache: HashMap::new(),
            state: OdometerState::Fresh,
        }
    }

    fn choices(&mut self, m: usize) -> std::rc::Rc<Vec<Vec<Color>>> {
        let (k, budget) = (self.k, self.budget);
        std::rc::Rc::clone(self.choice_cache.entry(m).or_insert_with(|| {
            // valid lists: (k-t) old colors from 1..=m plus new colors m+1..=m+t
            let mut out = Vec::new();
            for t in 0..=k {
                if m + t > budget || k - t > m {
                    continue;
                }
                let mut old = Vec::new();
                subsets(m, k - t, &mut old);
                for mut s in old {
                    s.extend((m + 1..=m + t).map(|c| c as Color));
                    out.push(s);
                }
            }
            out.sort();
            std::rc::Rc::new(out)
        }))
    }

    fn fill_from(&mut self, mut vertex: usize) -> bool {
        while vertex < self.n {
            let m = if vertex == 0 {
                0
            } else {
                let (m_before, _) = self.stack[vertex - 1];
                m_before + new_color_count(&self.current[vertex - 1], m_before)
            };
            let choices = self.choices(m);
            if choices.is_empty() {
                return false;
            }
            self.current[vertex].clone_from(&choices[0]);
            self.stack.push((m, 0));
            vertex += 1;
        }
        true
    }

    /// Positions at the next canonical assignment; false when exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            OdometerState::Fresh => {
                self.state = OdometerState::Running;
                if self.n == 0 {
                    // single empty assignment
                    return true;
                }
                if self.fill_from(0) {
                    true
                } else {
                    self.state = OdometerState::Done;
                    false
                }
            }
            OdometerState::Running => {
                loop {
                    let Some((m, idx)) = self.stack.pop() else {
                        self.state = OdometerState::Done;
                        return false;
                    };
                    let vertex = self.stack.len();
                    let choices = self.choices(m);
                    if idx + 1 < choices.len() {
                        self.current[vertex].clone_from(&choices[idx + 1]);
                        self.stack.push((m, idx + 1));
                        if self.fill_from(vertex + 1) {
                            return true;
                        }
                        // deeper vertices had no choices; keep rolling
                        self.stack.truncate(vertex);
                        self.stack.push((m, idx + 1));
                    }
                }
            }
            OdometerState::Done => false,
        }
    }

    pub fn current(&self) -> &[Vec<Color>] {
        &self.current
    }
}

fn new_color_count(list: &[Color], m: usize) -> usize {
    list.iter().filter(|&&c| c > m as Color).count()
}

// all k-subsets of {1..=m}, sorted ascending, in lexicographic order
fn subsets(m: usize, k: usize, out: &mut Vec<Vec<Color>>) {
    fn rec(start: usize, m: usize, k: usize, acc: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        for c in start..=m.saturating_sub(k - 1) {
            acc.push(c as Color);
            rec(c + 1, m, k - 1, acc, out);
            acc.pop();
        }
    }
    rec(1, m, k, &mut Vec::new(), out);
}

impl Iterator for CanonicalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        if !self.advance() {
            return None;
        }
        Some(ListAssignment::General(self.current.to_vec()))
    }
}

pub fn canonical_list_assignments(n: usize, k: usize, color_budget: Color) -> CanonicalAssignments {
    CanonicalAssignments::new(n, k, color_budget)
}

/// Literal palette mode: lists are the k-subsets of `{1..=n}` and every
/// n-tuple of them (with repetition) is produced.
pub struct PaperPaletteAssignments {
    lists: Vec<Vec<Color>>,
    indices: Vec<usize>,
    n: usize,
    state: OdometerState,
}

impl PaperPaletteAssignments {
    pub fn new(n: usize, k: usize) -> Self {
        let mut lists = Vec::new();
        subsets(n, k, &mut lists);
        PaperPaletteAssignments {
            lists,
            indices: vec![0; n],
            n,
            state: OdometerState::Fresh,
        }
    }

    pub fn advance(&mut self) -> bool {
        match self.state {
            OdometerState::Fresh => {
                self.state = OdometerState::Running;
                if self.lists.is_empty() && self.n > 0 {
                    self.state = OdometerState::Done;
                    return false;
                }
                true
            }
            OdometerState::Running => {
                let mut i = self.n;
                loop {
                    if i == 0 {
                        self.state = OdometerState::Done;
                        return false;
                    }
                    i -= 1;
                    if self.indices[i] + 1 < self.lists.len() {
                        self.indices[i] += 1;
                        for x in self.indices[i + 1..].iter_mut() {
                            *x = 0;
                        }
                        return true;
                    }
                }
            }
            OdometerState::Done => false,
        }
    }

    pub fn write_current(&self, out: &mut Vec<Vec<Color>>) {
        out.clear();
        out.extend(self.indices.iter().map(|&i| self.lists[i].clone()));
    }

    pub fn total_count(&self) -> u128 {
        (self.lists.len() as u128).pow(self.n as u32)
    }
}

impl Iterator for PaperPaletteAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        if !self.advance() {
            return None;
        }
        let mut out = Vec::new();
        self.write_current(&mut out);
        Some(ListAssignment::General(out))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ListFileError {
    #[error("missing header line ('lists interval' or 'lists general')")]
    MissingHeader,
    #[error("line {line}: malformed entry")]
    Malformed { line: usize },
    #[error("line {line}: vertex {v} out of range or repeated")]
    BadVertex { line: usize, v: usize },
    #[error("vertex {v} has no list")]
    MissingVertex { v: usize },
    #[error("line {line}: empty interval or empty list")]
    EmptyList { line: usize },
}

/// Parses the list-assignment text format: a `lists interval` or
/// `lists general` header, then one line per vertex
/// (`<v> <gamma> <mu>` or `<v> : <c1> <c2> ...`, 0-indexed vertices).
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ListFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let kind = match lines.next() {
        Some((_, "lists interval")) => ListKind::Interval,
        Some((_, "lists general")) => ListKind::General,
        _ => return Err(ListFileError::MissingHeader),
    };
    let mut intervals: Vec<Option<IntervalList>> = vec![None; n];
    let mut general: Vec<Option<Vec<Color>>> = vec![None; n];
    for (line, l) in lines {
        let mut tok = l.split_ascii_whitespace();
        let v: usize = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ListFileError::Malformed { line })?;
        if v >= n {
            return Err(ListFileError::BadVertex { line, v });
        }
        match kind {
            ListKind::Interval => {
                let gamma: Color = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(ListFileError::Malformed { line })?;
                let mu: Color = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(ListFileError::Malformed { line })?;
                if tok.next().is_some() {
                    return Err(ListFileError::Malformed { line });
                }
                if gamma > mu {
                    return Err(ListFileError::EmptyList { line });
                }
                if intervals[v].is_some() {
                    return Err(ListFileError::BadVertex { line, v });
                }
                intervals[v] = Some(IntervalList::new(gamma, mu));
            }
            ListKind::General => {
                if tok.next() != Some(":") {
                    return Err(ListFileError::Malformed { line });
                }
                let mut colors = Vec::new();
                for t in tok {
                    colors.push(t.parse().map_err(|_| ListFileError::Malformed { line })?);
                }
                if colors.is_empty() {
                    return Err(ListFileError::EmptyList { line });
                }
                colors.sort_unstable();
                colors.dedup();
                if general[v].is_some() {
                    return Err(ListFileError::BadVertex { line, v });
                }
                general[v] = Some(colors);
            }
        }
    }
    match kind {
        ListKind::Interval => {
            let lists = intervals
                .into_iter()
                .enumerate()
                .map(|(v, l)| l.ok_or(ListFileError::MissingVertex { v }))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ListAssignment::Interval(lists))
        }
        ListKind::General => {
            let lists = general
                .into_iter()
                .enumerate()
                .map(|(v, l)| l.ok_or(ListFileError::MissingVertex { v }))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ListAssignment::General(lists))
        }
    }
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    match lists {
        ListAssignment::Interval(ls) => {
            out.push_str("lists interval\n");
            for (v, l) in ls.iter().enumerate() {
                out.push_str(&format!("{} {} {}\n", v, l.gamma(), l.mu()));
            }
        }
        ListAssignment::General(ls) => {
            out.push_str("lists general\n");
            for (v, l) in ls.iter().enumerate() {
                out.push_str(&format!("{} :", v));
                for c in l {
                    out.push_str(&format!(" {c}"));
                }
                out.push('\n');
            }
        }
    }
    out
}
