//! Exhaustive oracles: backtracking list coloring and packing, canonical
//! enumeration of `k`-assignments up to color renaming, and the exact
//! invariants `χ`, `χ_ℓ` and `χ*_ℓ` with certificates.
//!
//! Every search is bounded by a [`SearchBudget`]. Running out of budget gives
//! [`Search::Exhausted`], which is never confused with [`Search::Absent`]
//! (a completed search that found nothing).

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;

use crate::color::{is_proper_coloring, is_proper_packing, Color, Coloring, ListAssignment, Packing};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packer::{pack_via_product, ListColoringSolver};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Search nodes allowed per task (one coloring or packing search).
    pub node_limit: u64,
    /// Wall-clock limit for the whole operation.
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(Error::InvalidArgument("search budget must be positive".into()));
        }
        Ok(SearchBudget { node_limit, time_limit })
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: u64::MAX,
            time_limit: Duration::from_secs(u64::MAX / 4),
        }
    }

    fn deadline(&self) -> Option<Instant> {
        Instant::now().checked_add(self.time_limit)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 1_000_000_000,
            time_limit: Duration::from_secs(600),
        }
    }
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted without a solution.
    Absent,
    /// The budget ran out first; nothing is known.
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Exhausted => Search::Exhausted,
        }
    }
}

struct Meter {
    nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: &SearchBudget, deadline: Option<Instant>) -> Self {
        Meter {
            nodes: 0,
            node_limit: budget.node_limit,
            deadline,
        }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return false;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.node_limit = 0;
                    return false;
                }
            }
        }
        true
    }
}

enum Step {
    Solved,
    Dead,
    Abort,
}

/// Backtracking in vertex order with forward checking.
pub fn solve_list_coloring(g: &Graph, l: &ListAssignment, budget: &SearchBudget) -> Result<Search<Coloring>> {
    l.check_domain(g)?;
    let mut meter = Meter::new(budget, budget.deadline());
    Ok(color_metered(g, l, &mut meter))
}

fn color_metered(g: &Graph, l: &ListAssignment, meter: &mut Meter) -> Search<Coloring> {
    let mut domains: Vec<Vec<Color>> = l.lists().iter().map(|s| s.iter().copied().collect()).collect();
    let mut assigned = vec![0; g.n()];
    match color_rec(g, 1, &mut domains, &mut assigned, meter) {
        Step::Solved => {
            let f = Coloring::new(assigned);
            debug_assert!(is_proper_coloring(g, l, &f).map(|r| r.ok()).unwrap_or(false));
            Search::Found(f)
        }
        Step::Dead => Search::Absent,
        Step::Abort => Search::Exhausted,
    }
}

fn color_rec(g: &Graph, v: usize, domains: &mut [Vec<Color>], assigned: &mut [Color], meter: &mut Meter) -> Step {
    if v > g.n() {
        return Step::Solved;
    }
    let choices = domains[v - 1].clone();
    for c in choices {
        if !meter.tick() {
            return Step::Abort;
        }
        assigned[v - 1] = c;
        let mut pruned = Vec::new();
        let mut wiped = false;
        for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
            let dom = &mut domains[w - 1];
            if let Some(pos) = dom.iter().position(|&d| d == c) {
                dom.remove(pos);
                pruned.push((w, pos));
                if dom.is_empty() {
                    wiped = true;
                    break;
                }
            }
        }
        if !wiped {
            match color_rec(g, v + 1, domains, assigned, meter) {
                Step::Dead => {}
                done => return done,
            }
        }
        for &(w, pos) in pruned.iter().rev() {
            domains[w - 1].insert(pos, c);
        }
    }
    Step::Dead
}

/// Searches for a proper `L`-packing of size `k` directly: each vertex gets
/// an injective `k`-tuple from its list, and tuples of adjacent vertices must
/// differ in every coordinate. Rows may be permuted freely, so the first
/// vertex's tuple is taken in increasing order.
pub fn solve_packing(g: &Graph, l: &ListAssignment, k: usize, budget: &SearchBudget) -> Result<Search<Packing>> {
    check_packing_args(g, l, k)?;
    let mut meter = Meter::new(budget, budget.deadline());
    Ok(pack_metered(g, l, k, &mut meter))
}

fn check_packing_args(g: &Graph, l: &ListAssignment, k: usize) -> Result<()> {
    l.check_domain(g)?;
    if k == 0 {
        return Err(Error::InvalidArgument("packing size must be positive".into()));
    }
    for v in g.vertices() {
        if l.list(v).len() < k {
            return Err(Error::ListTooShort {
                site: format!("vertex {v}"),
                len: l.list(v).len(),
                needed: k,
            });
        }
    }
    Ok(())
}

fn pack_metered(g: &Graph, l: &ListAssignment, k: usize, meter: &mut Meter) -> Search<Packing> {
    let candidates: Vec<Vec<Vec<Color>>> = g
        .vertices()
        .map(|v| {
            let list = l.list(v).iter().copied();
            if v == 1 {
                list.combinations(k).collect()
            } else {
                list.permutations(k).collect()
            }
        })
        .collect();
    let mut columns: Vec<Vec<Color>> = vec![Vec::new(); g.n()];
    match pack_rec(g, 1, &candidates, &mut columns, meter) {
        Step::Solved => {
            let rows = (0..k).map(|j| columns.iter().map(|col| col[j]).collect()).collect();
            let p = Packing::from_rows(rows).expect("k >= 1");
            debug_assert!(is_proper_packing(g, l, &p).map(|r| r.ok()).unwrap_or(false));
            Search::Found(p)
        }
        Step::Dead => Search::Absent,
        Step::Abort => Search::Exhausted,
    }
}

fn pack_rec(
    g: &Graph,
    v: usize,
    candidates: &[Vec<Vec<Color>>],
    columns: &mut [Vec<Color>],
    meter: &mut Meter,
) -> Step {
    if v > g.n() {
        return Step::Solved;
    }
    let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u < v).collect();
    for tuple in &candidates[v - 1] {
        if !meter.tick() {
            return Step::Abort;
        }
        let clash = earlier
            .iter()
            .any(|&u| columns[u - 1].iter().zip(tuple).any(|(a, b)| a == b));
        if clash {
            continue;
        }
        columns[v - 1] = tuple.clone();
        match pack_rec(g, v + 1, candidates, columns, meter) {
            Step::Dead => {}
            done => return done,
        }
    }
    columns[v - 1].clear();
    Step::Dead
}

/// The exhaustive backtracking solver as a [`ListColoringSolver`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Backtracking {
    pub budget: SearchBudget,
}

impl ListColoringSolver for Backtracking {
    fn solve(&self, g: &Graph, l: &ListAssignment) -> Result<Search<Coloring>> {
        solve_list_coloring(g, l, &self.budget)
    }

    fn is_exhaustive(&self) -> bool {
        true
    }
}

/// The second route to packings: list-color `G □ K_k` and read the rows off.
pub fn solve_packing_via_product(
    g: &Graph,
    l: &ListAssignment,
    k: usize,
    budget: &SearchBudget,
) -> Result<Search<Packing>> {
    check_packing_args(g, l, k)?;
    pack_via_product(g, l, k, &Backtracking { budget: *budget })
}

/// One representative per color-renaming class of `k`-assignments of an
/// `n`-vertex graph.
///
/// Candidates are generated in restricted-growth form (reading the lists in
/// vertex order and each list in increasing order, every new color is the
/// next unused integer), in lexicographic order. Two restricted-growth
/// assignments can still be renamings of each other when one list introduces
/// several new colors at once, so only the lexicographically least member of
/// each class is yielded. All colors lie in `1..=n*k`.
pub fn enumerate_canonical_assignments(g: &Graph, k: usize) -> CanonicalAssignments {
    CanonicalAssignments::new(g.n(), k)
}

pub struct CanonicalAssignments {
    n: usize,
    k: usize,
    stack: Vec<(Vec<Vec<Color>>, usize)>,
    current: Vec<Vec<Color>>,
    pending: Option<ListAssignment>,
}

impl CanonicalAssignments {
    fn new(n: usize, k: usize) -> Self {
        if n == 0 || k == 0 {
            return Self::completions(Vec::new(), 0, k);
        }
        Self::completions(Vec::new(), n, k)
    }

    /// Canonical assignments of `n` vertices that start with `prefix`, which
    /// must itself be a canonical assignment of its vertices.
    fn completions(prefix: Vec<Vec<Color>>, n: usize, k: usize) -> Self {
        let mut it = CanonicalAssignments {
            n,
            k,
            stack: Vec::new(),
            current: Vec::new(),
            pending: None,
        };
        if n == 0 || k == 0 {
            return it;
        }
        if prefix.len() == n {
            it.pending = Some(ListAssignment::from_vecs(prefix).expect("canonical lists are valid"));
        } else {
            let max_used = prefix.iter().flatten().copied().max().unwrap_or(0);
            it.stack.push((growth_options(max_used, k), 0));
            it.current = prefix;
        }
        it
    }
}

/// All `k`-sets over `1..=max_used + k` whose colors above `max_used` are
/// exactly `max_used + 1 ..= max_used + t`, in lexicographic order.
fn growth_options(max_used: Color, k: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    for fresh in 0..=k {
        let reused = k - fresh;
        if reused > max_used as usize {
            continue;
        }
        for mut set in (1..=max_used).combinations(reused) {
            set.extend(max_used + 1..=max_used + fresh as Color);
            out.push(set);
        }
    }
    out.sort_unstable();
    out
}

impl Iterator for CanonicalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        if let Some(only) = self.pending.take() {
            return Some(only);
        }
        loop {
            let (options, idx) = self.stack.last_mut()?;
            if *idx >= options.len() {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.current.pop();
                }
                continue;
            }
            let chosen = options[*idx].clone();
            *idx += 1;
            self.current.push(chosen);
            // a prefix with a smaller renaming cannot start a least assignment
            if !is_least_renaming(&self.current) {
                self.current.pop();
                continue;
            }
            if self.current.len() == self.n {
                let out = ListAssignment::from_vecs(self.current.iter().cloned()).expect("nonempty positive lists");
                self.current.pop();
                return Some(out);
            } else {
                let max_used = self.current.iter().flatten().copied().max().unwrap_or(0);
                self.stack.push((growth_options(max_used, self.k), 0));
            }
        }
    }
}

/// True when no restricted-growth renaming of `lists` is lexicographically
/// smaller. Only the order in which each list's new colors receive fresh
/// names is free, so those orders are searched with prefix pruning.
fn is_least_renaming(lists: &[Vec<Color>]) -> bool {
    let max = lists.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut names = vec![0 as Color; max + 1];
    !has_smaller(lists, 0, &mut names, 1)
}

fn has_smaller(lists: &[Vec<Color>], v: usize, names: &mut [Color], next: Color) -> bool {
    if v == lists.len() {
        return false;
    }
    let fresh: Vec<Color> = lists[v].iter().copied().filter(|&c| names[c as usize] == 0).collect();
    // the renamed list is the same set whatever order the fresh colors take
    let mut renamed: Vec<Color> = lists[v]
        .iter()
        .map(|&c| names[c as usize])
        .filter(|&name| name != 0)
        .chain(next..next + fresh.len() as Color)
        .collect();
    renamed.sort_unstable();
    match renamed.cmp(&lists[v]) {
        std::cmp::Ordering::Less => return true,
        std::cmp::Ordering::Greater => return false,
        std::cmp::Ordering::Equal => {}
    }
    // only fresh colors that occur again can influence later comparisons
    let later = &lists[v + 1..];
    let (recurring, once): (Vec<Color>, Vec<Color>) =
        fresh.iter().partition(|&&c| later.iter().any(|l| l.contains(&c)));
    let after = next + fresh.len() as Color;
    for (i, &c) in once.iter().enumerate() {
        names[c as usize] = after - 1 - i as Color;
    }
    let mut verdict = false;
    for order in recurring.iter().copied().permutations(recurring.len()) {
        for (i, &c) in order.iter().enumerate() {
            names[c as usize] = next + i as Color;
        }
        verdict = has_smaller(lists, v + 1, names, after);
        if verdict {
            break;
        }
    }
    for &c in &fresh {
        names[c as usize] = 0;
    }
    verdict
}

/// Result of testing every canonical `k`-assignment against a predicate.
struct Scan {
    first_bad: Option<ListAssignment>,
    checked: usize,
    exhausted: bool,
}

/// Runs `good` over the canonical `k`-assignments of `g` and stops at the
/// first bad one. The stream is split at a fixed prefix depth; prefixes are
/// handed to workers in growing batches and each worker walks its
/// completions in order, so the reported bad assignment is the earliest in
/// canonical order among the batch that produced one.
fn scan_assignments<F>(g: &Graph, k: usize, budget: &SearchBudget, good: F) -> Scan
where
    F: Fn(&ListAssignment, &mut Meter) -> Search<()> + Sync,
{
    let n = g.n();
    let deadline = budget.deadline();
    let exhausted = AtomicBool::new(false);
    let depth = if n > 3 { n - 2 } else { n };
    let mut prefixes = CanonicalAssignments::new(depth, k);
    let mut checked = 0;
    let mut batch_size = 1;
    loop {
        let batch: Vec<Vec<Vec<Color>>> = prefixes
            .by_ref()
            .take(batch_size)
            .map(|l| l.lists().iter().map(|s| s.iter().copied().collect()).collect())
            .collect();
        if batch.is_empty() {
            break;
        }
        let results: Vec<(Option<ListAssignment>, usize)> = batch
            .into_par_iter()
            .map(|prefix| {
                let mut seen = 0;
                for l in CanonicalAssignments::completions(prefix, n, k) {
                    if exhausted.load(Ordering::Relaxed) {
                        break;
                    }
                    seen += 1;
                    let mut meter = Meter::new(budget, deadline);
                    match good(&l, &mut meter) {
                        Search::Found(()) => {}
                        Search::Absent => return (Some(l), seen),
                        Search::Exhausted => exhausted.store(true, Ordering::Relaxed),
                    }
                }
                (None, seen)
            })
            .collect();
        checked += results.iter().map(|r| r.1).sum::<usize>();
        if let Some(bad) = results.into_iter().find_map(|r| r.0) {
            return Scan {
                first_bad: Some(bad),
                checked,
                exhausted: exhausted.into_inner(),
            };
        }
        if exhausted.load(Ordering::Relaxed) {
            break;
        }
        batch_size = (batch_size * 2).min(256);
    }
    Scan {
        first_bad: None,
        checked,
        exhausted: exhausted.into_inner(),
    }
}

/// A canonical `k`-assignment with no proper packing of size `k`, searching
/// in canonical order.
pub fn find_bad_assignment(g: &Graph, k: usize, budget: &SearchBudget) -> Result<Search<ListAssignment>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let scan = scan_assignments(g, k, budget, |l, meter| pack_metered(g, l, k, meter).map(|_| ()));
    Ok(match scan {
        Scan { first_bad: Some(l), .. } => Search::Found(l),
        Scan { exhausted: true, .. } => Search::Exhausted,
        _ => Search::Absent,
    })
}

const CHROMATIC_LIMIT: usize = 24;
const ASSIGNMENT_SCAN_LIMIT: usize = 6;

/// Least `t` with a proper `t`-coloring.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: CHROMATIC_LIMIT,
        });
    }
    let budget = SearchBudget::unlimited();
    for t in 1..=g.n() {
        let l = ListAssignment::uniform(g.n(), 1..=t as Color)?;
        match solve_list_coloring(g, &l, &budget)? {
            Search::Found(_) => return Ok(t),
            Search::Absent => {}
            Search::Exhausted => unreachable!("unlimited budget"),
        }
    }
    unreachable!("n colors always suffice")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiListResult {
    pub value: usize,
    /// A `(value - 1)`-assignment admitting no proper coloring; `None` when
    /// `value == 1`.
    pub lower_witness: Option<ListAssignment>,
    /// Number of canonical `value`-assignments checked, all colorable.
    pub upper_evidence: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiStarResult {
    pub value: usize,
    /// A `(value - 1)`-assignment admitting no proper packing; `None` when
    /// `value == 1`.
    pub lower_witness: Option<ListAssignment>,
    /// Number of canonical `value`-assignments checked, all packable.
    pub upper_evidence: usize,
    /// Colors used by the canonical assignments are at most `n * value`.
    pub color_cap: usize,
}

/// Outcome of an exact invariant computation bounded by `k_max`:
/// `Absent` means every `k ≤ k_max` has a certified bad assignment, and the
/// one for `k_max` is returned as the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bounded<T> {
    Value(T),
    AboveBound { k_max: usize, witness: ListAssignment },
    Exhausted,
}

fn guard_scan(g: &Graph) -> Result<()> {
    if g.n() > ASSIGNMENT_SCAN_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: ASSIGNMENT_SCAN_LIMIT,
        });
    }
    Ok(())
}

/// Least `k ≤ k_max` such that every canonical `k`-assignment is colorable.
pub fn list_chromatic_number(g: &Graph, k_max: usize, budget: &SearchBudget) -> Result<Bounded<ChiListResult>> {
    guard_scan(g)?;
    let mut witness = None;
    for k in 1..=k_max {
        let scan = scan_assignments(g, k, budget, |l, meter| color_metered(g, l, meter).map(|_| ()));
        match scan {
            Scan { first_bad: Some(l), .. } => witness = Some(l),
            Scan { exhausted: true, .. } => return Ok(Bounded::Exhausted),
            Scan { checked, .. } => {
                return Ok(Bounded::Value(ChiListResult {
                    value: k,
                    lower_witness: witness,
                    upper_evidence: checked,
                }))
            }
        }
    }
    Ok(match witness {
        Some(witness) => Bounded::AboveBound { k_max, witness },
        None => Bounded::Exhausted,
    })
}

/// Least `k ≤ k_max` such that every canonical `k`-assignment has a proper
/// packing of size `k`.
pub fn list_packing_number(g: &Graph, k_max: usize, budget: &SearchBudget) -> Result<Bounded<ChiStarResult>> {
    guard_scan(g)?;
    let mut witness = None;
    for k in 1..=k_max {
        let scan = scan_assignments(g, k, budget, |l, meter| pack_metered(g, l, k, meter).map(|_| ()));
        match scan {
            Scan { first_bad: Some(l), .. } => witness = Some(l),
            Scan { exhausted: true, .. } => return Ok(Bounded::Exhausted),
            Scan { checked, .. } => {
                return Ok(Bounded::Value(ChiStarResult {
                    value: k,
                    lower_witness: witness,
                    upper_evidence: checked,
                    color_cap: g.n() * k,
                }))
            }
        }
    }
    Ok(match witness {
        Some(witness) => Bounded::AboveBound { k_max, witness },
        None => Bounded::Exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, path_graph};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    fn k(n: usize) -> Graph {
        complete_graph(n).unwrap()
    }

    #[test]
    fn list_coloring_examples() {
        let l = ListAssignment::uniform(3, [1, 2, 3]).unwrap();
        let f = solve_list_coloring(&k(3), &l, &budget()).unwrap().found().unwrap();
        let mut colors = f.as_slice().to_vec();
        colors.sort();
        assert_eq!(colors, vec![1, 2, 3]);

        let l = ListAssignment::uniform(3, [1, 2]).unwrap();
        assert_eq!(solve_list_coloring(&k(3), &l, &budget()).unwrap(), Search::Absent);
    }

    #[test]
    fn k24_classic_bad_assignment() {
        let (g, _) = complete_bipartite(2, 4).unwrap();
        let l = ListAssignment::from_vecs([vec![1, 2], vec![3, 4], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]])
            .unwrap();
        assert_eq!(solve_list_coloring(&g, &l, &budget()).unwrap(), Search::Absent);
        // brute force over all 2^6 L-colorings
        let lists: Vec<Vec<Color>> = l.lists().iter().map(|s| s.iter().copied().collect()).collect();
        let proper = lists
            .iter()
            .map(|l| l.iter().copied())
            .multi_cartesian_product()
            .filter(|f| g.edges().iter().all(|e| f[e.u - 1] != f[e.v - 1]))
            .count();
        assert_eq!(proper, 0);
    }

    #[test]
    fn tiny_budget_exhausts() {
        let tight = SearchBudget::new(3, Duration::from_secs(10)).unwrap();
        let l = ListAssignment::uniform(5, [1, 2, 3, 4]).unwrap();
        assert_eq!(solve_list_coloring(&k(5), &l, &tight).unwrap(), Search::Exhausted);
        assert!(SearchBudget::new(0, Duration::from_secs(1)).is_err());
    }

    #[test]
    fn packing_examples() {
        let l = ListAssignment::from_vecs([vec![1, 2], vec![2, 3]]).unwrap();
        let p = solve_packing(&k(2), &l, 2, &budget()).unwrap().found().unwrap();
        assert!(is_proper_packing(&k(2), &l, &p).unwrap().ok());
        // brute force: injective pairs (a, b) at v1 and (c, d) at v2 with a != c, b != d
        let count = [(1, 2), (2, 1)]
            .iter()
            .cartesian_product([(2, 3), (3, 2)].iter())
            .filter(|((a, b), (c, d))| a != c && b != d)
            .count();
        assert!(count >= 1);

        let l = ListAssignment::uniform(3, [1, 2, 3]).unwrap();
        assert!(solve_packing(&k(3), &l, 3, &budget()).unwrap().is_found());
        let l = ListAssignment::uniform(3, [1, 2]).unwrap();
        assert_eq!(solve_packing(&k(3), &l, 2, &budget()).unwrap(), Search::Absent);
        assert!(matches!(
            solve_packing(&k(3), &l, 3, &budget()),
            Err(Error::ListTooShort { .. })
        ));
    }

    #[test]
    fn canonical_counts_on_k2() {
        let got: Vec<_> = enumerate_canonical_assignments(&k(2), 1)
            .map(|l| l.to_string())
            .collect();
        assert_eq!(got, vec!["1:{1} 2:{1}", "1:{1} 2:{2}"]);
        let got: Vec<_> = enumerate_canonical_assignments(&k(2), 2)
            .map(|l| l.to_string())
            .collect();
        assert_eq!(got, vec!["1:{1, 2} 2:{1, 2}", "1:{1, 2} 2:{1, 3}", "1:{1, 2} 2:{3, 4}"]);
    }

    #[test]
    fn first_canonical_assignment_is_identical_lists() {
        let first = enumerate_canonical_assignments(&k(5), 4).next().unwrap();
        assert_eq!(first, ListAssignment::uniform(5, 1..=4).unwrap());
    }

    #[test]
    fn colors_stay_under_cap() {
        for l in enumerate_canonical_assignments(&k(3), 3) {
            assert!(l.colors().iter().all(|&c| c as usize <= 9));
        }
    }

    #[test]
    fn bad_assignments() {
        let found = find_bad_assignment(&k(3), 2, &budget()).unwrap().found().unwrap();
        assert_eq!(found, ListAssignment::uniform(3, [1, 2]).unwrap());
        assert_eq!(find_bad_assignment(&k(2), 2, &budget()).unwrap(), Search::Absent);
        let found = find_bad_assignment(&k(4), 3, &budget()).unwrap().found().unwrap();
        assert_eq!(found, ListAssignment::uniform(4, [1, 2, 3]).unwrap());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&k(5)).unwrap(), 5);
        let prod = crate::graph::cartesian_product(&k(3), &k(5));
        assert_eq!(chromatic_number(&prod).unwrap(), 5);
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::from_edges(3, []).unwrap()).unwrap(), 1);
    }

    #[test]
    fn list_chromatic_numbers() {
        let b = budget();
        let Bounded::Value(r) = list_chromatic_number(&k(3), 4, &b).unwrap() else {
            panic!()
        };
        assert_eq!(r.value, 3);
        let Bounded::Value(r) = list_chromatic_number(&cycle_graph(4).unwrap(), 4, &b).unwrap() else {
            panic!()
        };
        assert_eq!(r.value, 2);
        let (k24, _) = complete_bipartite(2, 4).unwrap();
        let Bounded::Value(r) = list_chromatic_number(&k24, 4, &b).unwrap() else {
            panic!()
        };
        assert_eq!(r.value, 3);
        let w = r.lower_witness.unwrap();
        assert_eq!(solve_list_coloring(&k24, &w, &b).unwrap(), Search::Absent);
    }

    #[test]
    fn list_packing_numbers() {
        let b = budget();
        for n in 2..=3 {
            let Bounded::Value(r) = list_packing_number(&k(n), 5, &b).unwrap() else {
                panic!()
            };
            assert_eq!(r.value, n);
            assert_eq!(r.color_cap, n * n);
        }
        let Bounded::Value(r) = list_packing_number(&path_graph(3).unwrap(), 4, &b).unwrap() else {
            panic!()
        };
        assert!(r.value <= 3);
    }

    #[test]
    fn above_bound_reports_witness() {
        let b = budget();
        match list_packing_number(&k(3), 2, &b).unwrap() {
            Bounded::AboveBound { k_max: 2, witness } => {
                assert_eq!(solve_packing(&k(3), &witness, 2, &b).unwrap(), Search::Absent);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn scan_size_guard() {
        let g = complete_graph(7).unwrap();
        assert!(matches!(
            list_packing_number(&g, 2, &budget()),
            Err(Error::TooLarge { .. })
        ));
    }
}
