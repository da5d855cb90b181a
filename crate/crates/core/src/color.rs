//! List assignments, colorings and packings, their verifiers, and the
//! packing/product-coloring correspondence: a proper `L`-packing of size `k`
//! of `G` is the same data as a proper list coloring of `G □ K_k` whose
//! lists are constant along the `K_k` coordinate.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, complete_graph, Edge, Graph, Label, VertexId};

/// Colors are opaque positive integers.
pub type Color = u32;

/// `L`: one nonempty color set per vertex, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<Color>>) -> Result<Self> {
        for (i, list) in lists.iter().enumerate() {
            let site = format!("vertex {}", i + 1);
            if list.is_empty() {
                return Err(Error::EmptyList(site));
            }
            if list.contains(&0) {
                return Err(Error::ZeroColor(site));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn from_vecs<I, L>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = Color>,
    {
        Self::new(lists.into_iter().map(|l| l.into_iter().collect()).collect())
    }

    /// Every one of the `n` vertices gets the same list.
    pub fn uniform(n: usize, colors: impl IntoIterator<Item = Color>) -> Result<Self> {
        let list: BTreeSet<Color> = colors.into_iter().collect();
        Self::new(vec![list; n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: VertexId) -> &BTreeSet<Color> {
        &self.lists[v - 1]
    }

    pub fn lists(&self) -> &[BTreeSet<Color>] {
        &self.lists
    }

    /// `Some(k)` when this is a `k`-assignment.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.lists.first()?.len();
        self.lists.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn min_list_size(&self) -> usize {
        self.lists.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn colors(&self) -> BTreeSet<Color> {
        self.lists.iter().flatten().copied().collect()
    }

    /// Applies a color renaming. `rename` must be injective on the colors in
    /// use.
    pub fn renamed(&self, mut rename: impl FnMut(Color) -> Color) -> Result<Self> {
        Self::new(
            self.lists
                .iter()
                .map(|l| l.iter().map(|&c| rename(c)).collect())
                .collect(),
        )
    }

    pub(crate) fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.lists.len() != g.n() {
            return Err(Error::DomainMismatch {
                what: "list assignment",
                expected: g.n(),
                found: self.lists.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lists.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}:{:?}", i + 1, l)?;
        }
        Ok(())
    }
}

/// A total map from vertices to colors; properness is checked, not enforced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v - 1]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::DomainMismatch {
                what: "coloring",
                expected: g.n(),
                found: self.colors.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<Color>> for Coloring {
    fn from(colors: Vec<Color>) -> Self {
        Coloring::new(colors)
    }
}

/// `k` colorings `f_1, ..., f_k` of the same vertex set, stored as rows.
/// Row order carries no meaning beyond reproducible output.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Packing {
    rows: Vec<Coloring>,
}

impl Packing {
    pub fn new(rows: Vec<Coloring>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyPacking);
        };
        let n = first.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DomainMismatch {
                what: "packing row",
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Packing { rows })
    }

    pub fn from_rows(rows: Vec<Vec<Color>>) -> Result<Self> {
        Self::new(rows.into_iter().map(Coloring::new).collect())
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Coloring] {
        &self.rows
    }

    /// `f_j`, 1-based.
    pub fn row(&self, j: usize) -> &Coloring {
        &self.rows[j - 1]
    }

    /// The colors `(f_1(v), ..., f_k(v))` at vertex `v`.
    pub fn column(&self, v: VertexId) -> Vec<Color> {
        self.rows.iter().map(|r| r.color(v)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Color>> {
        self.rows.iter().map(|r| r.colors.clone()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    NotInList,
    NotProper,
    NotDisjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    Vertex(VertexId),
    Edge(Edge),
}

/// A single failed check. `indices` are the 1-based positions of the
/// colorings involved inside a packing; empty for a lone coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub site: Site,
    pub indices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::NotInList => "color not in list",
            ViolationKind::NotProper => "adjacent vertices share a color",
            ViolationKind::NotDisjoint => "colorings agree",
        };
        match self.site {
            Site::Vertex(v) => write!(f, "{kind} at vertex {v}")?,
            Site::Edge(e) => write!(f, "{kind} on edge {e}")?,
        }
        if !self.indices.is_empty() {
            write!(f, " (colorings {:?})", self.indices)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn coloring_violations(g: &Graph, l: &ListAssignment, f: &Coloring, index: Option<usize>) -> Vec<Violation> {
    let indices: Vec<usize> = index.into_iter().collect();
    let mut out = Vec::new();
    for v in g.vertices() {
        if !l.list(v).contains(&f.color(v)) {
            out.push(Violation {
                kind: ViolationKind::NotInList,
                site: Site::Vertex(v),
                indices: indices.clone(),
            });
        }
    }
    for e in g.edges() {
        if f.color(e.u) == f.color(e.v) {
            out.push(Violation {
                kind: ViolationKind::NotProper,
                site: Site::Edge(e),
                indices: indices.clone(),
            });
        }
    }
    out
}

/// Checks `f(v) ∈ L(v)` everywhere and `f(u) ≠ f(v)` on every edge,
/// reporting every failure.
pub fn is_proper_coloring(g: &Graph, l: &ListAssignment, f: &Coloring) -> Result<VerifyReport> {
    l.check_domain(g)?;
    f.check_domain(g)?;
    Ok(VerifyReport {
        violations: coloring_violations(g, l, f, None),
    })
}

/// Checks each row is a proper `L`-coloring and that distinct rows disagree
/// at every vertex.
pub fn is_proper_packing(g: &Graph, l: &ListAssignment, p: &Packing) -> Result<VerifyReport> {
    l.check_domain(g)?;
    for row in p.rows() {
        row.check_domain(g)?;
    }
    let mut violations = Vec::new();
    for (i, row) in p.rows().iter().enumerate() {
        violations.extend(coloring_violations(g, l, row, Some(i + 1)));
    }
    for v in g.vertices() {
        let column = p.column(v);
        for i in 0..column.len() {
            for j in i + 1..column.len() {
                if column[i] == column[j] {
                    violations.push(Violation {
                        kind: ViolationKind::NotDisjoint,
                        site: Site::Vertex(v),
                        indices: vec![i + 1, j + 1],
                    });
                }
            }
        }
    }
    Ok(VerifyReport { violations })
}

/// Builds `H = G □ K_k` together with `L_H(v_i, u_j) = L(v_i)`.
pub fn lift_lists(g: &Graph, l: &ListAssignment, k: usize) -> Result<(Graph, ListAssignment)> {
    l.check_domain(g)?;
    let kk = complete_graph(k)?;
    let h = cartesian_product(g, &kk);
    // product ids are row-major: (i, j) -> (i - 1) * k + j
    let lists = g
        .vertices()
        .flat_map(|i| std::iter::repeat_n(l.list(i).clone(), k))
        .collect();
    Ok((h, ListAssignment::new(lists)?))
}

/// Reads the packing `f_j(v_i) = f_H(v_i, u_j)` off a coloring of
/// `h = G □ K_k`, locating product vertices through their labels. No
/// validation of the colors is performed.
pub fn extract_packing(g: &Graph, k: usize, h: &Graph, f_h: &Coloring) -> Result<Packing> {
    if k == 0 {
        return Err(Error::EmptyPacking);
    }
    if h.n() != g.n() * k {
        return Err(Error::DomainMismatch {
            what: "product graph",
            expected: g.n() * k,
            found: h.n(),
        });
    }
    f_h.check_domain(h)?;
    let by_label: HashMap<&Label, VertexId> = h.vertices().map(|w| (h.label(w), w)).collect();
    let mut rows = vec![Vec::with_capacity(g.n()); k];
    for i in g.vertices() {
        for (j, row) in rows.iter_mut().enumerate() {
            let want = Label::pair(g.label(i).clone(), Label::Atom(j + 1));
            let w = by_label
                .get(&want)
                .ok_or_else(|| Error::MissingLabel(want.to_string()))?;
            row.push(f_h.color(*w));
        }
    }
    Packing::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn k(n: usize) -> Graph {
        complete_graph(n).unwrap()
    }

    #[test]
    fn proper_coloring_examples() {
        let g = k(2);
        let l = ListAssignment::uniform(2, [1, 2]).unwrap();
        assert!(is_proper_coloring(&g, &l, &vec![1, 2].into()).unwrap().ok());

        let r = is_proper_coloring(&g, &l, &vec![1, 1].into()).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation {
                kind: ViolationKind::NotProper,
                site: Site::Edge(Edge::new(1, 2)),
                indices: vec![],
            }]
        );

        let l = ListAssignment::from_vecs([vec![1], vec![2]]).unwrap();
        let r = is_proper_coloring(&g, &l, &vec![2, 1].into()).unwrap();
        let sites: Vec<_> = r.violations.iter().map(|v| (v.kind, v.site)).collect();
        assert_eq!(
            sites,
            vec![
                (ViolationKind::NotInList, Site::Vertex(1)),
                (ViolationKind::NotInList, Site::Vertex(2)),
            ]
        );
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let l = ListAssignment::uniform(3, [1, 2]).unwrap();
        assert!(matches!(
            is_proper_coloring(&k(2), &l, &vec![1, 2].into()),
            Err(Error::DomainMismatch { .. })
        ));
        let l = ListAssignment::uniform(2, [1, 2]).unwrap();
        assert!(is_proper_coloring(&k(2), &l, &vec![1].into()).is_err());
    }

    #[test]
    fn packing_examples() {
        let g = k(2);
        let l = ListAssignment::uniform(2, [1, 2]).unwrap();
        let p = Packing::from_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert!(is_proper_packing(&g, &l, &p).unwrap().ok());

        let p = Packing::from_rows(vec![vec![1, 2], vec![1, 2]]).unwrap();
        let r = is_proper_packing(&g, &l, &p).unwrap();
        assert_eq!(
            r.violations,
            vec![
                Violation {
                    kind: ViolationKind::NotDisjoint,
                    site: Site::Vertex(1),
                    indices: vec![1, 2],
                },
                Violation {
                    kind: ViolationKind::NotDisjoint,
                    site: Site::Vertex(2),
                    indices: vec![1, 2],
                },
            ]
        );

        let l = ListAssignment::uniform(3, [1, 2, 3]).unwrap();
        let latin = Packing::from_rows(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]).unwrap();
        assert!(is_proper_packing(&k(3), &l, &latin).unwrap().ok());
    }

    #[test]
    fn packing_rows_must_agree_in_length() {
        assert_eq!(Packing::from_rows(vec![]).unwrap_err(), Error::EmptyPacking);
        assert!(Packing::from_rows(vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn list_assignment_validation() {
        assert!(matches!(
            ListAssignment::from_vecs([vec![1], vec![]]),
            Err(Error::EmptyList(_))
        ));
        assert!(matches!(
            ListAssignment::from_vecs([vec![0, 1]]),
            Err(Error::ZeroColor(_))
        ));
        let l = ListAssignment::from_vecs([vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(l.uniform_size(), None);
        assert_eq!(l.min_list_size(), 2);
    }

    #[test]
    fn lift_examples() {
        let l = ListAssignment::from_vecs([vec![5, 7]]).unwrap();
        let (h, lh) = lift_lists(&k(1), &l, 2).unwrap();
        assert_eq!(h, k(2));
        assert_eq!(lh.lists(), &[BTreeSet::from([5, 7]), BTreeSet::from([5, 7])]);

        let l = ListAssignment::uniform(2, [1, 2]).unwrap();
        let (h, lh) = lift_lists(&k(2), &l, 2).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert!(h.vertices().all(|v| h.degree(v) == 2));
        assert_eq!(lh.uniform_size(), Some(2));

        let l = ListAssignment::from_vecs([vec![1, 2, 3], vec![4, 5, 6], vec![1, 5, 9]]).unwrap();
        let (h, lh) = lift_lists(&k(3), &l, 3).unwrap();
        assert_eq!(h.n(), 9);
        for w in h.vertices() {
            let Label::Pair(left, _) = h.label(w) else { panic!() };
            let Label::Atom(i) = **left else { panic!() };
            assert_eq!(lh.list(w), l.list(i));
        }
    }

    #[test]
    fn extract_examples() {
        let g = k(3);
        let (h, _) = lift_lists(&g, &ListAssignment::uniform(3, [1, 2, 3]).unwrap(), 1).unwrap();
        let f: Coloring = vec![3, 1, 2].into();
        let p = extract_packing(&g, 1, &h, &f).unwrap();
        assert_eq!(p.to_rows(), vec![vec![3, 1, 2]]);

        // C_4 = K_2 □ K_2; ids (1,1)=1, (1,2)=2, (2,1)=3, (2,2)=4
        let g = k(2);
        let (h, _) = lift_lists(&g, &ListAssignment::uniform(2, [1, 2]).unwrap(), 2).unwrap();
        let f: Coloring = vec![1, 2, 2, 1].into();
        let p = extract_packing(&g, 2, &h, &f).unwrap();
        assert_eq!(p.to_rows(), vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn extract_requires_product_labels() {
        let g = k(2);
        let plain = crate::graph::cycle_graph(4).unwrap();
        let f: Coloring = vec![1, 2, 1, 2].into();
        assert!(matches!(
            extract_packing(&g, 2, &plain, &f),
            Err(Error::MissingLabel(_))
        ));
    }

    #[test]
    fn disjointness_matches_naive_double_loop() {
        // every 2x3 array over {1,2,3}
        let g = Graph::from_edges(3, []).unwrap();
        let l = ListAssignment::uniform(3, [1, 2, 3]).unwrap();
        for code in 0..3u32.pow(6) {
            let cells: Vec<Color> = (0..6).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
            let p = Packing::from_rows(vec![cells[..3].to_vec(), cells[3..].to_vec()]).unwrap();
            let naive = (0..3).any(|v| cells[v] == cells[3 + v]);
            let report = is_proper_packing(&g, &l, &p).unwrap();
            assert_eq!(!report.ok(), naive);
        }
    }
}
