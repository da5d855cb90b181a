//! List edge coloring of simple bipartite graphs by the kernel method.
//!
//! A proper `Δ`-edge-coloring `c` orients the line graph: at an `X`-side
//! vertex an edge is preferred to its neighbors of lower `c`, at a `Y`-side
//! vertex to its neighbors of higher `c`. Kernels of any edge subset under
//! this orientation are exactly the stable matchings of that subset, so they
//! can be found by deferred acceptance. Coloring one kernel per color and
//! striking that color from the rest of the candidates never removes more
//! than `Δ - 1` colors from any edge, hence lists of size `Δ` always suffice.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::color::{is_proper_coloring, Color, Coloring, ListAssignment, VerifyReport};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Bipartition, Edge, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: BTreeMap<Edge, Color>,
    /// `Δ` of the colored graph. Base colorings use exactly the colors
    /// `1..=palette_size`; list colorings draw from the edge lists instead.
    pub palette_size: usize,
}

impl EdgeColoring {
    pub fn color(&self, e: Edge) -> Option<Color> {
        self.colors.get(&e).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListAssignment {
    pub lists: BTreeMap<Edge, BTreeSet<Color>>,
}

impl EdgeListAssignment {
    pub fn new(lists: BTreeMap<Edge, BTreeSet<Color>>) -> Result<Self> {
        for (e, l) in &lists {
            if l.is_empty() {
                return Err(Error::EmptyList(format!("edge {e}")));
            }
            if l.contains(&0) {
                return Err(Error::ZeroColor(format!("edge {e}")));
            }
        }
        Ok(EdgeListAssignment { lists })
    }

    /// Gives every edge of `g` the same list.
    pub fn uniform(g: &Graph, colors: impl IntoIterator<Item = Color>) -> Result<Self> {
        let list: BTreeSet<Color> = colors.into_iter().collect();
        Self::new(g.edges().into_iter().map(|e| (e, list.clone())).collect())
    }

    pub fn list(&self, e: Edge) -> Option<&BTreeSet<Color>> {
        self.lists.get(&e)
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        let edges = g.edges();
        if edges.len() != self.lists.len() || edges.iter().any(|e| !self.lists.contains_key(e)) {
            return Err(Error::DomainMismatch {
                what: "edge list assignment",
                expected: edges.len(),
                found: self.lists.len(),
            });
        }
        Ok(())
    }
}

/// Strict preferences derived from a proper base edge coloring: `X`-side
/// vertices prefer higher base colors, `Y`-side vertices lower ones.
#[derive(Clone, Debug)]
pub struct PreferenceSystem {
    pub base: EdgeColoring,
    pub bipartition: Bipartition,
}

impl PreferenceSystem {
    pub fn new(base: EdgeColoring, bipartition: Bipartition) -> Self {
        PreferenceSystem { base, bipartition }
    }

    fn base_color(&self, e: Edge) -> Result<Color> {
        self.base
            .color(e)
            .ok_or_else(|| Error::InvalidArgument(format!("edge {e} has no base color")))
    }

    fn orient(&self, e: Edge) -> Result<(VertexId, VertexId)> {
        self.bipartition
            .orient(e)
            .ok_or_else(|| Error::BadBipartition(format!("edge {e} does not cross")))
    }
}

/// A proper edge coloring with exactly `Δ` colors.
///
/// Complete bipartite inputs use `c(x_i, y_j) = ((i + j - 2) mod max(n, m)) + 1`
/// with `i`, `j` the ranks of the endpoints inside their sides. Other graphs
/// are colored edge by edge, swapping two colors along an alternating path
/// whenever the endpoints have no common free color.
pub fn edge_color_bipartite(g: &Graph, b: &Bipartition) -> Result<EdgeColoring> {
    b.validate(g)?;
    let delta = g.max_degree();
    let (nx, ny) = (b.x.len(), b.y.len());
    if g.edge_count() == nx * ny && nx > 0 && ny > 0 {
        let rank_x: BTreeMap<VertexId, usize> = b.x.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let rank_y: BTreeMap<VertexId, usize> = b.y.iter().enumerate().map(|(j, &v)| (v, j)).collect();
        let modulus = nx.max(ny);
        let colors = g
            .edges()
            .into_iter()
            .map(|e| {
                let (x, y) = b.orient(e).expect("validated");
                let c = (rank_x[&x] + rank_y[&y]) % modulus + 1;
                (e, c as Color)
            })
            .collect();
        return Ok(EdgeColoring {
            colors,
            palette_size: delta,
        });
    }

    // at[v][c] = the neighbor joined to v by the edge of color c
    let mut at: Vec<Vec<Option<VertexId>>> = vec![vec![None; delta + 1]; g.n() + 1];
    let free = |at: &Vec<Vec<Option<VertexId>>>, v: VertexId| {
        (1..=delta).find(|&c| at[v][c].is_none()).expect("degree <= delta")
    };
    for e in g.edges() {
        let (u, v) = (e.u, e.v);
        let a = free(&at, u);
        if at[v][a].is_some() {
            let bc = free(&at, v);
            // walk the a/b path starting at v and swap its colors
            let mut path = Vec::new();
            let (mut cur, mut col) = (v, a);
            while let Some(w) = at[cur][col] {
                path.push((cur, w, col));
                cur = w;
                col = if col == a { bc } else { a };
            }
            for &(p, q, c) in &path {
                at[p][c] = None;
                at[q][c] = None;
            }
            for &(p, q, c) in &path {
                let swapped = if c == a { bc } else { a };
                at[p][swapped] = Some(q);
                at[q][swapped] = Some(p);
            }
            debug_assert!(at[u][a].is_none() && at[v][a].is_none());
        }
        at[u][a] = Some(v);
        at[v][a] = Some(u);
    }
    let mut colors = BTreeMap::new();
    for u in g.vertices() {
        for (c, slot) in at[u].iter().enumerate().skip(1) {
            if let Some(w) = *slot {
                if w > u {
                    colors.insert(Edge::new(u, w), c as Color);
                }
            }
        }
    }
    Ok(EdgeColoring {
        colors,
        palette_size: delta,
    })
}

/// Deferred acceptance on the edge set `f`: `X`-side vertices propose along
/// their edges in decreasing base color, each `Y`-side vertex keeps the
/// lowest-colored proposal it has seen. The result is a kernel of `f`.
pub fn stable_matching(f: &BTreeSet<Edge>, prefs: &PreferenceSystem) -> Result<BTreeSet<Edge>> {
    if f.is_empty() {
        return Err(Error::InvalidArgument("stable matching of an empty edge set".into()));
    }
    let mut proposals: BTreeMap<VertexId, Vec<(Color, Edge)>> = BTreeMap::new();
    for &e in f {
        let (x, _) = prefs.orient(e)?;
        proposals.entry(x).or_default().push((prefs.base_color(e)?, e));
    }
    for list in proposals.values_mut() {
        list.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut next: BTreeMap<VertexId, usize> = proposals.keys().map(|&x| (x, 0)).collect();
    let mut held: BTreeMap<VertexId, (Color, Edge)> = BTreeMap::new();
    let mut queue: VecDeque<VertexId> = proposals.keys().copied().collect();
    while let Some(x) = queue.pop_front() {
        let i = next[&x];
        let Some(&(c, e)) = proposals[&x].get(i) else {
            continue;
        };
        *next.get_mut(&x).unwrap() += 1;
        let (_, y) = prefs.orient(e)?;
        match held.get(&y) {
            Some(&(held_c, _)) if held_c <= c => {
                queue.push_back(x);
            }
            Some(&(_, held_e)) => {
                let (loser, _) = prefs.orient(held_e)?;
                held.insert(y, (c, e));
                queue.push_back(loser);
            }
            None => {
                held.insert(y, (c, e));
            }
        }
    }
    Ok(held.into_values().map(|(_, e)| e).collect())
}

/// Direct check that `m ⊆ f` is a matching and absorbs every other edge of
/// `f`: each `e = xy ∈ f \ m` meets an edge of `m` at `x` with higher base
/// color, or at `y` with lower base color.
pub fn kernel_check(f: &BTreeSet<Edge>, prefs: &PreferenceSystem, m: &BTreeSet<Edge>) -> bool {
    if !m.is_subset(f) {
        return false;
    }
    for (i, a) in m.iter().enumerate() {
        for b in m.iter().skip(i + 1) {
            if a.shares_endpoint(b) {
                return false;
            }
        }
    }
    for &e in f.difference(m) {
        let (Ok((x, y)), Ok(c)) = (prefs.orient(e), prefs.base_color(e)) else {
            return false;
        };
        let absorbed = m.iter().any(|&d| {
            let Ok(cd) = prefs.base_color(d) else {
                return false;
            };
            (d.touches(x) && cd > c) || (d.touches(y) && cd < c)
        });
        if !absorbed {
            return false;
        }
    }
    true
}

/// One color class committed by [`list_edge_color_traced`].
#[derive(Clone, Debug)]
pub struct Round {
    pub color: Color,
    pub candidates: BTreeSet<Edge>,
    pub matching: BTreeSet<Edge>,
}

#[derive(Clone, Debug)]
pub struct GalvinRun {
    pub coloring: EdgeColoring,
    pub base: EdgeColoring,
    pub rounds: Vec<Round>,
    /// How many colors were struck from each edge's list.
    pub deletions: BTreeMap<Edge, usize>,
}

/// Colors every edge of the bipartite graph `g` from its list, given lists
/// of size at least `Δ`.
pub fn list_edge_color(g: &Graph, b: &Bipartition, lists: &EdgeListAssignment) -> Result<EdgeColoring> {
    list_edge_color_traced(g, b, lists).map(|run| run.coloring)
}

/// [`list_edge_color`] with the per-round kernels and deletion counters.
///
/// Each round takes the smallest color `α` still present in an uncolored
/// edge's list, computes a kernel of the uncolored edges whose list holds
/// `α`, colors the kernel `α`, and strikes `α` from the lists of the rest.
pub fn list_edge_color_traced(g: &Graph, b: &Bipartition, lists: &EdgeListAssignment) -> Result<GalvinRun> {
    lists.check_domain(g)?;
    let base = edge_color_bipartite(g, b)?;
    let delta = base.palette_size;
    for (e, l) in &lists.lists {
        if l.len() < delta {
            return Err(Error::ListTooShort {
                site: format!("edge {e}"),
                len: l.len(),
                needed: delta,
            });
        }
    }
    let prefs = PreferenceSystem::new(base.clone(), b.clone());
    let mut remaining = lists.lists.clone();
    let mut deletions: BTreeMap<Edge, usize> = remaining.keys().map(|&e| (e, 0)).collect();
    let mut colors = BTreeMap::new();
    let mut rounds = Vec::new();

    while !remaining.is_empty() {
        let alpha = remaining
            .values()
            .filter_map(|l| l.first().copied())
            .min()
            .ok_or_else(|| Error::Internal("an uncolored edge ran out of colors".into()))?;
        let candidates: BTreeSet<Edge> = remaining
            .iter()
            .filter(|(_, l)| l.contains(&alpha))
            .map(|(&e, _)| e)
            .collect();
        let matching = stable_matching(&candidates, &prefs)?;
        if matching.is_empty() || !kernel_check(&candidates, &prefs, &matching) {
            return Err(Error::Internal(format!("round with color {alpha} produced no kernel")));
        }
        for &e in &matching {
            colors.insert(e, alpha);
            remaining.remove(&e);
        }
        for e in candidates.difference(&matching) {
            let list = remaining.get_mut(e).expect("candidate is uncolored");
            list.remove(&alpha);
            let count = deletions.get_mut(e).expect("tracked");
            *count += 1;
            if list.is_empty() {
                return Err(Error::Internal(format!("edge {e} ran out of colors")));
            }
        }
        rounds.push(Round {
            color: alpha,
            candidates,
            matching,
        });
    }

    Ok(GalvinRun {
        coloring: EdgeColoring {
            colors,
            palette_size: delta,
        },
        base,
        rounds,
        deletions,
    })
}

/// Independent check of an edge coloring: recolors the line graph and runs
/// the vertex-coloring verifier on it. Without `lists`, every edge may use
/// any color.
pub fn check_edge_coloring(g: &Graph, ec: &EdgeColoring, lists: Option<&EdgeListAssignment>) -> Result<VerifyReport> {
    let lg = line_graph(g)?;
    let edges = g.edges();
    let mut vertex_colors = Vec::with_capacity(edges.len());
    for e in &edges {
        let c = ec
            .color(*e)
            .ok_or_else(|| Error::InvalidArgument(format!("edge {e} is uncolored")))?;
        vertex_colors.push(c);
    }
    let vertex_lists = match lists {
        Some(le) => {
            le.check_domain(g)?;
            ListAssignment::new(edges.iter().map(|e| le.lists[e].clone()).collect())?
        }
        None => ListAssignment::new(vertex_colors.iter().map(|&c| BTreeSet::from([c])).collect())?,
    };
    is_proper_coloring(&lg, &vertex_lists, &Coloring::new(vertex_colors))
}
