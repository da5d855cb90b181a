//! Simple undirected graphs and the constructions used throughout the crate:
//! complete graphs, complete bipartite graphs, Cartesian products and line
//! graphs.
//!
//! Vertices are the contiguous ids `1..=n`. Every vertex also carries a
//! structured [`Label`], so the coordinates of a product vertex or the
//! endpoints of a line-graph vertex can be read back without parsing.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// Normalizes the endpoint order. Loops are not representable as graph
    /// edges, but the constructor itself does not reject them.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Atom(usize),
    Pair(Box<Label>, Box<Label>),
    EdgeOf(VertexId, VertexId),
}

impl Label {
    pub fn pair(left: Label, right: Label) -> Self {
        Label::Pair(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(i) => write!(f, "{i}"),
            Label::Pair(l, r) => write!(f, "({l},{r})"),
            Label::EdgeOf(u, v) => write!(f, "[{u}-{v}]"),
        }
    }
}

/// Immutable simple graph. Neighbor lists are sorted.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    labels: Vec<Label>,
}

/// Two graphs are equal when they have the same vertex count and the same
/// sorted edge list. Labels are not compared.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `1..=n` with `Atom` labels.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let labels = (1..=n).map(Label::Atom).collect();
        Self::with_labels(n, edges, labels)
    }

    fn with_labels(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        labels: Vec<Label>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        debug_assert_eq!(labels.len(), n);
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            for w in [a, b] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
            adj[a - 1].push(b);
            adj[b - 1].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        1..=self.adj.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// All edges in increasing `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, list) in self.adj.iter().enumerate() {
            let u = i + 1;
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| Edge { u, v }));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: VertexId) -> &Label {
        &self.labels[v - 1]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v >= 1 && v <= self.n()
    }

    /// The subgraph on the same vertex set keeping only `keep`-approved edges.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(Edge) -> bool) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().filter(|&e| keep(e)).collect();
        let mut adj = vec![Vec::new(); self.n()];
        for e in edges {
            adj[e.u - 1].push(e.v);
            adj[e.v - 1].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|u| (u, u + 1)))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (1..=n).map(|u| (u, u % n + 1)))
}

/// The two sides of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub x: BTreeSet<VertexId>,
    pub y: BTreeSet<VertexId>,
}

impl Bipartition {
    pub fn in_x(&self, v: VertexId) -> bool {
        self.x.contains(&v)
    }

    /// The endpoints of `e` as `(x_side, y_side)`, or `None` if the edge does
    /// not cross.
    pub fn orient(&self, e: Edge) -> Option<(VertexId, VertexId)> {
        match (self.in_x(e.u), self.in_x(e.v)) {
            (true, false) if self.y.contains(&e.v) => Some((e.u, e.v)),
            (false, true) if self.y.contains(&e.u) => Some((e.v, e.u)),
            _ => None,
        }
    }

    /// Checks that the sides partition `V(g)` and every edge crosses.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.x.len() + self.y.len() != g.n() || !self.x.is_disjoint(&self.y) {
            return Err(Error::BadBipartition("sides do not partition the vertex set".into()));
        }
        if let Some(&v) = self.x.iter().chain(&self.y).find(|&&v| !g.contains_vertex(v)) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if let Some(e) = g.edges().into_iter().find(|&e| self.orient(e).is_none()) {
            return Err(Error::BadBipartition(format!("edge {e} lies inside one side")));
        }
        Ok(())
    }
}

/// `K_{n,m}` with `X = 1..=n` and `Y = n+1..=n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<(Graph, Bipartition)> {
    if n == 0 || m == 0 {
        return Err(Error::EmptySide(n, m));
    }
    let edges = (1..=n).flat_map(|i| (1..=m).map(move |j| (i, n + j)));
    let g = Graph::from_edges(n + m, edges)?;
    let bip = Bipartition {
        x: (1..=n).collect(),
        y: (n + 1..=n + m).collect(),
    };
    Ok((g, bip))
}

/// Vertex `(a, b)` of `g □ h` gets id `(a - 1) * |V(h)| + b` and label
/// `Pair(label_g(a), label_h(b))`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.n();
    let id = |a: VertexId, b: VertexId| (a - 1) * hn + b;
    let mut edges = Vec::new();
    for a in g.vertices() {
        for b in h.vertices() {
            for &b2 in h.neighbors(b).iter().filter(|&&b2| b2 > b) {
                edges.push((id(a, b), id(a, b2)));
            }
            for &a2 in g.neighbors(a).iter().filter(|&&a2| a2 > a) {
                edges.push((id(a, b), id(a2, b)));
            }
        }
    }
    let labels = g
        .vertices()
        .flat_map(|a| h.vertices().map(move |b| (a, b)))
        .map(|(a, b)| Label::pair(g.label(a).clone(), h.label(b).clone()))
        .collect();
    Graph::with_labels(g.n() * hn, edges, labels).expect("product of simple graphs is simple")
}

/// Vertices follow `g.edges()` order; vertex `k` is labelled `EdgeOf(u, v)`
/// with `u < v`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (k, e) in edges.iter().enumerate() {
        incident[e.u - 1].push(k + 1);
        incident[e.v - 1].push(k + 1);
    }
    let mut pairs = BTreeSet::new();
    for around in &incident {
        for (i, &a) in around.iter().enumerate() {
            for &b in &around[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    let labels = edges.iter().map(|e| Label::EdgeOf(e.u, e.v)).collect();
    Graph::with_labels(edges.len(), pairs, labels)
}

/// Two-colors `g` by breadth-first search. The lower-numbered vertex of each
/// component goes to `X`.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n + 1];
    let mut parent = vec![0usize; n + 1];
    let mut depth = vec![0usize; n + 1];
    for root in g.vertices() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(u, w, &parent, &depth),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let x = g.vertices().filter(|&v| side[v] == Some(true)).collect();
    let y = g.vertices().filter(|&v| side[v] == Some(false)).collect();
    Ok(Bipartition { x, y })
}

fn odd_cycle(u: VertexId, w: VertexId, parent: &[usize], depth: &[usize]) -> Vec<VertexId> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // both paths end at the common ancestor
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        g.vertices().map(|v| g.degree(v)).collect()
    }

    #[test]
    fn complete_graph_sizes() {
        let k1 = complete_graph(1).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let k3 = complete_graph(3).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(degrees(&k3), vec![2, 2, 2]);
        assert_eq!(complete_graph(6).unwrap().edge_count(), 15);
        assert_eq!(complete_graph(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn complete_bipartite_sizes() {
        let (g, b) = complete_bipartite(1, 1).unwrap();
        assert_eq!(g.edges(), vec![Edge::new(1, 2)]);
        assert_eq!(b.x.len() + b.y.len(), 2);

        let (g, b) = complete_bipartite(2, 3).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(degrees(&g), vec![3, 3, 2, 2, 2]);
        assert_eq!(b.x, BTreeSet::from([1, 2]));
        assert_eq!(b.y, BTreeSet::from([3, 4, 5]));

        assert_eq!(complete_bipartite(4, 4).unwrap().0.edge_count(), 16);
        assert_eq!(complete_bipartite(0, 2).unwrap_err(), Error::EmptySide(0, 2));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]).unwrap_err(), Error::Loop(1));
        assert_eq!(
            Graph::from_edges(2, [(1, 2), (2, 1)]).unwrap_err(),
            Error::DuplicateEdge(Edge::new(1, 2))
        );
        assert_eq!(
            Graph::from_edges(2, [(1, 3)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 3, n: 2 }
        );
    }

    #[test]
    fn products() {
        let k2 = complete_graph(2).unwrap();
        let square = cartesian_product(&k2, &k2);
        // row-major ids: the 4-cycle 1-2-4-3
        let c4 = Graph::from_edges(4, [(1, 2), (2, 4), (4, 3), (3, 1)]).unwrap();
        assert_eq!(square, c4);
        assert_eq!(degrees(&square), vec![2; 4]);

        let p4 = path_graph(4).unwrap();
        let k1 = complete_graph(1).unwrap();
        assert_eq!(cartesian_product(&k1, &p4), p4);

        let prism = cartesian_product(&complete_graph(3).unwrap(), &k2);
        assert_eq!((prism.n(), prism.edge_count()), (6, 9));
        assert_eq!(degrees(&prism), vec![3; 6]);
        assert_eq!(prism.label(4), &Label::pair(Label::Atom(2), Label::Atom(2)));
    }

    #[test]
    fn line_graphs() {
        let lk2 = line_graph(&complete_graph(2).unwrap()).unwrap();
        assert_eq!((lk2.n(), lk2.edge_count()), (1, 0));
        assert_eq!(lk2.label(1), &Label::EdgeOf(1, 2));

        let lp3 = line_graph(&path_graph(3).unwrap()).unwrap();
        assert_eq!(lp3, complete_graph(2).unwrap());

        let (k22, _) = complete_bipartite(2, 2).unwrap();
        let l = line_graph(&k22).unwrap();
        assert_eq!(degrees(&l), vec![2; 4]);
        assert_eq!(l.edge_count(), 4);

        assert_eq!(line_graph(&complete_graph(1).unwrap()).unwrap_err(), Error::Edgeless);
    }

    #[test]
    fn bipartitions() {
        let (k23, expected) = complete_bipartite(2, 3).unwrap();
        assert_eq!(bipartition(&k23).unwrap(), expected);

        match bipartition(&complete_graph(3).unwrap()) {
            Err(Error::NotBipartite { cycle }) => {
                assert_eq!(cycle.len(), 3);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }

        let c4 = cycle_graph(4).unwrap();
        let b = bipartition(&c4).unwrap();
        assert_eq!(b.x, BTreeSet::from([1, 3]));
        assert_eq!(b.y, BTreeSet::from([2, 4]));
        b.validate(&c4).unwrap();
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        // 7-cycle with a pendant path so the conflict is found deep in the BFS
        let g = Graph::from_edges(
            9,
            [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1), (1, 8), (8, 9)],
        )
        .unwrap();
        let Err(Error::NotBipartite { cycle }) = bipartition(&g) else {
            panic!("7-cycle is not bipartite");
        };
        assert_eq!(cycle.len() % 2, 1);
        let distinct: BTreeSet<_> = cycle.iter().collect();
        assert_eq!(distinct.len(), cycle.len());
        for i in 0..cycle.len() {
            assert!(g.is_adjacent(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }
}
