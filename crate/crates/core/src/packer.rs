//! Packings through the Cartesian product with `K_k`.
//!
//! [`pack_complete`] turns any `m`-assignment of `K_n` with `m ≥ n` into a
//! proper packing of size `m`: the lifted lists on `K_n □ K_m` are lists on
//! the line graph of `K_{n,m}`, which the kernel method colors because every
//! list has `Δ(K_{n,m}) = m` colors. [`pack_via_product`] is the same
//! read-off for arbitrary graphs, with any list-coloring procedure in place
//! of the kernel method.

use std::collections::{BTreeMap, HashMap};

use crate::color::{
    extract_packing, is_proper_coloring, is_proper_packing, lift_lists, Coloring, ListAssignment, Packing,
};
use crate::error::{Error, Result};
use crate::galvin::{list_edge_color, EdgeListAssignment};
use crate::graph::{complete_bipartite, complete_graph, Edge, Graph, Label, VertexId};
use crate::search::Search;

/// An `m`-assignment of `K_n` to be packed with `m` colorings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackRequest {
    pub n: usize,
    pub lists: ListAssignment,
    pub m: usize,
}

impl PackRequest {
    /// Takes `m` from the list sizes, which must all agree.
    pub fn new(n: usize, lists: ListAssignment) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if lists.len() != n {
            return Err(Error::DomainMismatch {
                what: "list assignment",
                expected: n,
                found: lists.len(),
            });
        }
        let m = lists.uniform_size().ok_or(Error::NonUniformLists)?;
        if m < n {
            return Err(Error::UnsupportedRegime { n, m });
        }
        Ok(PackRequest { n, lists, m })
    }
}

/// Packs `K_n` with `m` colorings from an `m`-assignment, `m ≥ n`.
///
/// 1. lift `L` to `H = K_n □ K_m`;
/// 2. read vertex `(v_i, u_j)` of `H` as the edge `x_i y_j` of `K_{n,m}`;
/// 3. list-edge-color `K_{n,m}` from `LE(x_i y_j) = L(v_i)`;
/// 4. pull the edge colors back to a coloring of `H`;
/// 5. read the packing off by rows.
///
/// The result is verified before it is returned; a failed verification is an
/// [`Error::Internal`].
pub fn pack_complete(req: &PackRequest) -> Result<Packing> {
    let PackRequest { n, ref lists, m } = *req;
    let g = complete_graph(n)?;
    let (h, lifted) = lift_lists(&g, lists, m)?;
    let (kb, bip) = complete_bipartite(n, m)?;

    let edge_of = product_to_edge(&h, n)?;
    let mut edge_lists = BTreeMap::new();
    for w in h.vertices() {
        edge_lists.insert(edge_of[w - 1], lifted.list(w).clone());
    }
    let edge_lists = EdgeListAssignment::new(edge_lists)?;
    let ec = list_edge_color(&kb, &bip, &edge_lists)?;

    let f_h = Coloring::new(
        edge_of
            .iter()
            .map(|&e| {
                ec.color(e)
                    .ok_or_else(|| Error::Internal(format!("edge {e} left uncolored")))
            })
            .collect::<Result<_>>()?,
    );
    let packing = extract_packing(&g, m, &h, &f_h)?;
    let report = is_proper_packing(&g, lists, &packing)?;
    if !report.ok() {
        return Err(Error::Internal(format!(
            "constructed packing failed verification: {}",
            report.violations[0]
        )));
    }
    Ok(packing)
}

/// `Pair(Atom(i), Atom(j)) ↦ x_i y_j` where `x_i = i` and `y_j = n + j`,
/// indexed by product vertex.
fn product_to_edge(h: &Graph, n: usize) -> Result<Vec<Edge>> {
    h.vertices()
        .map(|w| match h.label(w) {
            Label::Pair(left, right) => match (left.as_ref(), right.as_ref()) {
                (Label::Atom(i), Label::Atom(j)) => Ok(Edge::new(*i, n + *j)),
                _ => Err(Error::MissingLabel(h.label(w).to_string())),
            },
            other => Err(Error::MissingLabel(other.to_string())),
        })
        .collect()
}

/// Inverse of the relabeling used by [`pack_complete`]: edge `x_i y_j` of
/// `K_{n,m}` to the id of `(v_i, u_j)` in `K_n □ K_m`.
pub fn edge_to_product(n: usize, m: usize, e: Edge) -> Option<VertexId> {
    let (i, y) = (e.u, e.v);
    if i == 0 || i > n || y <= n || y > n + m {
        return None;
    }
    Some((i - 1) * m + (y - n))
}

/// A procedure that list-colors a graph. `is_exhaustive` says whether an
/// `Absent` answer is a proof.
pub trait ListColoringSolver {
    fn solve(&self, g: &Graph, l: &ListAssignment) -> Result<Search<Coloring>>;

    fn is_exhaustive(&self) -> bool;
}

/// Lists-colors `G □ K_k` with `solver` and reads off a packing of size `k`.
///
/// A coloring returned by the solver that fails verification is reported as
/// [`Error::Internal`]. `Absent` is only a certificate when the solver is
/// exhaustive.
pub fn pack_via_product<S: ListColoringSolver + ?Sized>(
    g: &Graph,
    l: &ListAssignment,
    k: usize,
    solver: &S,
) -> Result<Search<Packing>> {
    if let Some(v) = g.vertices().find(|&v| l.len() == g.n() && l.list(v).len() < k) {
        return Err(Error::ListTooShort {
            site: format!("vertex {v}"),
            len: l.list(v).len(),
            needed: k,
        });
    }
    let (h, lifted) = lift_lists(g, l, k)?;
    let f_h = match solver.solve(&h, &lifted)? {
        Search::Found(f) => f,
        Search::Absent => return Ok(Search::Absent),
        Search::Exhausted => return Ok(Search::Exhausted),
    };
    let report = is_proper_coloring(&h, &lifted, &f_h)?;
    if !report.ok() {
        return Err(Error::Internal(format!(
            "solver returned an improper coloring: {}",
            report.violations[0]
        )));
    }
    let packing = extract_packing(g, k, &h, &f_h)?;
    let report = is_proper_packing(g, l, &packing)?;
    if !report.ok() {
        return Err(Error::Internal(format!(
            "extracted packing failed verification: {}",
            report.violations[0]
        )));
    }
    Ok(Search::Found(packing))
}

/// Reverses the relabeling in both directions and reports whether they
/// compose to the identity on every vertex of `K_n □ K_m`.
pub fn relabeling_round_trips(n: usize, m: usize) -> Result<bool> {
    let h = crate::graph::cartesian_product(&complete_graph(n)?, &complete_graph(m)?);
    let edges = product_to_edge(&h, n)?;
    let back: HashMap<Edge, VertexId> = edges.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
    let ok = h
        .vertices()
        .all(|w| edge_to_product(n, m, edges[w - 1]) == Some(w) && back[&edges[w - 1]] == w);
    Ok(ok)
}
