//! Finite simple graphs and the three constructions everything else is
//! built from: strong product, Zykov join, disjoint union.
//!
//! Graphs are label-carrying, not isomorphism classes. Vertices are
//! addressed positionally by [`VertexId`] (an index into the label list),
//! every operation is deterministic on labels, and no canonicalization is
//! ever performed.

use std::collections::BTreeSet;
use std::fmt;

use crate::vset::VSet;
use crate::{Error, Result};

/// Position of a vertex inside one particular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Vertex label. Product graphs carry ordered pairs of the constituent
/// labels, so a product vertex decomposes losslessly into its projections.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Atom(String),
    Pair(Box<Label>, Box<Label>),
}

impl Label {
    pub fn atom(s: impl Into<String>) -> Self {
        Label::Atom(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Pair(Box::new(a), Box::new(b))
    }

    /// Both projections of a pair label, if this is one.
    pub fn split(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(a, b) => Some((a, b)),
            Label::Atom(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => write!(f, "{s}"),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// A finite simple graph: unique vertex labels plus symmetric, irreflexive
/// adjacency. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Label>,
    neighbors: Vec<BTreeSet<u32>>,
}

impl Graph {
    /// Builds a graph from labels and an edge list over label positions.
    /// Rejects self-loops, out-of-range endpoints and duplicate labels.
    pub fn new(labels: Vec<Label>, edges: &[(u32, u32)]) -> Result<Graph> {
        let n = labels.len();
        {
            let mut seen = std::collections::HashSet::with_capacity(n);
            for l in &labels {
                if !seen.insert(l) {
                    return Err(Error::InvalidGraph(format!("duplicate vertex label {l}")));
                }
            }
        }
        let mut neighbors = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) references a missing vertex"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            neighbors[a as usize].insert(b);
            neighbors[b as usize].insert(a);
        }
        Ok(Graph { labels, neighbors })
    }

    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Graph {
            labels: Vec::new(),
            neighbors: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &Label {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Looks a vertex up by its rendered label.
    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.labels
            .iter()
            .position(|l| l.to_string() == name)
            .map(|i| VertexId(i as u32))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        }
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.neighbors[v.index()].iter().map(|&u| VertexId(u))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors[v.index()].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.neighbors[a.index()].contains(&b.0)
    }

    /// All edges `(a, b)` with `a < b`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, nbrs) in self.neighbors.iter().enumerate() {
            for &b in nbrs.range(a as u32 + 1..) {
                out.push((VertexId(a as u32), VertexId(b)));
            }
        }
        out
    }

    /// Adjacency as bitsets over 0..n, for the clique machinery.
    pub(crate) fn bit_adjacency(&self) -> Vec<VSet> {
        let n = self.vertex_count();
        self.neighbors
            .iter()
            .map(|nbrs| VSet::from_indices(n, nbrs.iter().map(|&u| u as usize)))
            .collect()
    }

    /// Subgraph induced on `vs`, vertices in ascending id order. Duplicate
    /// or unknown ids are rejected.
    pub fn induced_subgraph(&self, vs: &[VertexId]) -> Result<Graph> {
        let mut sorted: Vec<VertexId> = Vec::with_capacity(vs.len());
        for &v in vs {
            self.check_vertex(v)?;
            sorted.push(v);
        }
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return Err(Error::InvalidGraph(
                "duplicate vertex in induced subgraph".into(),
            ));
        }
        Ok(self.induced_on_sorted(&sorted))
    }

    pub(crate) fn induced_on_sorted(&self, sorted: &[VertexId]) -> Graph {
        let labels: Vec<Label> = sorted.iter().map(|&v| self.label(v).clone()).collect();
        let pos: std::collections::HashMap<u32, u32> = sorted
            .iter()
            .enumerate()
            .map(|(i, v)| (v.0, i as u32))
            .collect();
        let mut edges = Vec::new();
        for (i, &v) in sorted.iter().enumerate() {
            for &u in self.neighbors[v.index()].range(v.0 + 1..) {
                if let Some(&j) = pos.get(&u) {
                    edges.push((i as u32, j));
                }
            }
        }
        Graph::new(labels, &edges).expect("induced subgraph of a valid graph is valid")
    }

    /// The unit sphere S(x): subgraph induced on the neighbors of `x`.
    pub fn unit_sphere(&self, x: VertexId) -> Result<Graph> {
        self.check_vertex(x)?;
        let nbrs: Vec<VertexId> = self.neighbors(x).collect();
        Ok(self.induced_on_sorted(&nbrs))
    }

    /// The unit ball B(x): subgraph induced on `{x} ∪ S(x)`.
    pub fn unit_ball(&self, x: VertexId) -> Result<Graph> {
        self.check_vertex(x)?;
        let mut vs: Vec<VertexId> = self.neighbors(x).collect();
        vs.push(x);
        vs.sort();
        Ok(self.induced_on_sorted(&vs))
    }

    /// Strong product. Vertices are all pairs `(a, b)` in a-major
    /// lexicographic order, so the pair `(a, b)` sits at index
    /// `a·|V(h)| + b`; distinct pairs are adjacent when both projections
    /// are adjacent-or-equal.
    pub fn strong_product(&self, other: &Graph) -> Graph {
        let (ng, nh) = (self.vertex_count(), other.vertex_count());
        let mut labels = Vec::with_capacity(ng * nh);
        for a in 0..ng {
            for b in 0..nh {
                labels.push(Label::pair(
                    self.labels[a].clone(),
                    other.labels[b].clone(),
                ));
            }
        }
        let idx = |a: usize, b: usize| (a * nh + b) as u32;
        let mut edges = Vec::new();
        for a in 0..ng {
            for b in 0..nh {
                for c in a..ng {
                    if c != a && !self.has_edge(VertexId(a as u32), VertexId(c as u32)) {
                        continue;
                    }
                    for d in 0..nh {
                        if idx(c, d) <= idx(a, b) {
                            continue;
                        }
                        if d != b && !other.has_edge(VertexId(b as u32), VertexId(d as u32)) {
                            continue;
                        }
                        edges.push((idx(a, b), idx(c, d)));
                    }
                }
            }
        }
        Graph::new(labels, &edges).expect("strong product of valid graphs is valid")
    }

    /// Zykov join: disjoint union plus every cross edge.
    pub fn zykov_join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let (ng, nh) = (self.vertex_count(), other.vertex_count());
        for a in 0..ng {
            for b in 0..nh {
                g.neighbors[a].insert((ng + b) as u32);
                g.neighbors[ng + b].insert(a as u32);
            }
        }
        g
    }

    /// Disjoint union. Left labels are kept; right labels that collide get
    /// primes appended until unique.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let ng = self.vertex_count();
        let mut labels = self.labels.clone();
        let mut taken: std::collections::HashSet<String> =
            labels.iter().map(|l| l.to_string()).collect();
        for l in &other.labels {
            let mut candidate = l.clone();
            while taken.contains(&candidate.to_string()) {
                candidate = prime(&candidate);
            }
            taken.insert(candidate.to_string());
            labels.push(candidate);
        }
        let mut neighbors = self.neighbors.clone();
        neighbors.extend(other.neighbors.iter().map(|nbrs| {
            nbrs.iter().map(|&u| u + ng as u32).collect::<BTreeSet<u32>>()
        }));
        Graph { labels, neighbors }
    }
}

/// Appends a prime to the innermost-right atom of a label.
fn prime(l: &Label) -> Label {
    match l {
        Label::Atom(s) => Label::Atom(format!("{s}'")),
        Label::Pair(a, b) => Label::Pair(a.clone(), Box::new(prime(b))),
    }
}

/// Builds a graph from string labels and edges given as label pairs.
pub fn graph_from_names(names: &[&str], edges: &[(&str, &str)]) -> Result<Graph> {
    let labels: Vec<Label> = names.iter().map(|s| Label::atom(*s)).collect();
    let pos = |s: &str| -> Result<u32> {
        names
            .iter()
            .position(|n| *n == s)
            .map(|i| i as u32)
            .ok_or_else(|| Error::UnknownVertex(s.to_string()))
    };
    let mut idx_edges = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        idx_edges.push((pos(a)?, pos(b)?));
    }
    Graph::new(labels, &idx_edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn rejects_self_loops_and_bad_edges() {
        let labels = vec![Label::atom("a"), Label::atom("b")];
        assert!(Graph::new(labels.clone(), &[(0, 0)]).is_err());
        assert!(Graph::new(labels.clone(), &[(0, 5)]).is_err());
        assert!(Graph::new(labels, &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn rejects_duplicate_labels() {
        let labels = vec![Label::atom("a"), Label::atom("a")];
        assert!(Graph::new(labels, &[]).is_err());
    }

    #[test]
    fn strong_product_of_k1_relabels_h() {
        let h = generators::cycle(5);
        let p = generators::complete(1).strong_product(&h);
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.edge_count(), 5);
        for (a, b) in h.edges() {
            assert!(p.has_edge(a, b));
        }
    }

    #[test]
    fn strong_product_k2_k2_is_k4() {
        let k2 = generators::complete(2);
        let p = k2.strong_product(&k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 6);
    }

    #[test]
    fn product_vertex_order_is_pair_lexicographic() {
        let g = generators::path(2);
        let h = generators::path(3);
        let p = g.strong_product(&h);
        let expected: Vec<String> = ["(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)", "(2,3)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let got: Vec<String> = p.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn product_labels_split() {
        let p = generators::complete(2).strong_product(&generators::path(2));
        let (a, b) = p.label(VertexId(3)).split().unwrap();
        assert_eq!(a.to_string(), "2");
        assert_eq!(b.to_string(), "2");
    }

    #[test]
    fn join_of_two_edgeless_pairs_is_c4() {
        let e2 = generators::edgeless(2);
        let j = e2.zykov_join(&e2);
        assert_eq!(j.vertex_count(), 4);
        assert_eq!(j.edge_count(), 4);
        // complete bipartite: no edge inside either side
        assert!(!j.has_edge(VertexId(0), VertexId(1)));
        assert!(!j.has_edge(VertexId(2), VertexId(3)));
    }

    #[test]
    fn join_edge_count_formula() {
        let g = generators::cycle(4);
        let h = generators::path(3);
        let j = g.zykov_join(&h);
        assert_eq!(
            j.edge_count(),
            g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count()
        );
    }

    #[test]
    fn cone_over_graph() {
        let g = generators::cycle(4);
        let cone = generators::complete(1).zykov_join(&g);
        assert_eq!(cone.vertex_count(), 5);
        let apex = VertexId(0);
        assert_eq!(cone.degree(apex), 4);
    }

    #[test]
    fn union_keeps_components_apart() {
        let g = generators::complete(1);
        let u = g.disjoint_union(&g);
        assert_eq!(u.vertex_count(), 2);
        assert_eq!(u.edge_count(), 0);
        assert_ne!(u.label(VertexId(0)), u.label(VertexId(1)));
    }

    #[test]
    fn union_with_empty_is_identity() {
        let g = generators::cycle(5);
        let u = Graph::empty().disjoint_union(&g);
        assert_eq!(u, g);
        let u2 = g.disjoint_union(&Graph::empty());
        assert_eq!(u2, g);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = generators::complete(4);
        let k3 = k4
            .induced_subgraph(&[VertexId(0), VertexId(1), VertexId(3)])
            .unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));

        let none = k4.induced_subgraph(&[]).unwrap();
        assert_eq!(none.vertex_count(), 0);

        let c5 = generators::cycle(5);
        let k2 = c5
            .induced_subgraph(&[VertexId(0), VertexId(1)])
            .unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));

        assert!(k4.induced_subgraph(&[VertexId(9)]).is_err());
        assert!(k4
            .induced_subgraph(&[VertexId(0), VertexId(0)])
            .is_err());
    }

    #[test]
    fn spheres_and_balls() {
        let k4 = generators::complete(4);
        let s = k4.unit_sphere(VertexId(0)).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (3, 3));
        let b = k4.unit_ball(VertexId(0)).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (4, 6));

        let c5 = generators::cycle(5);
        let s = c5.unit_sphere(VertexId(2)).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (2, 0));
        let b = c5.unit_ball(VertexId(2)).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (3, 2));

        let octa = generators::octahedron();
        let s = octa.unit_sphere(VertexId(0)).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (4, 4));
        for v in s.vertices() {
            assert_eq!(s.degree(v), 2);
        }

        assert!(c5.unit_sphere(VertexId(40)).is_err());
    }

    #[test]
    fn sphere_of_isolated_vertex_is_empty() {
        let g = generators::edgeless(3);
        let s = g.unit_sphere(VertexId(1)).unwrap();
        assert_eq!(s.vertex_count(), 0);
    }

    #[test]
    fn product_vertex_counts_multiply() {
        let g = generators::cycle(4);
        let h = generators::star(3);
        assert_eq!(
            g.strong_product(&h).vertex_count(),
            g.vertex_count() * h.vertex_count()
        );
    }

    #[test]
    fn product_sphere_is_cylinder_vertex_set() {
        // V(S(x,y)) = S(x)×B(y) ∪ B(x)×S(y), checked positionally
        let g = generators::cycle(4);
        let h = generators::path(3);
        let p = g.strong_product(&h);
        let nh = h.vertex_count();
        for x in g.vertices() {
            for y in h.vertices() {
                let xy = VertexId((x.index() * nh + y.index()) as u32);
                let sphere: std::collections::BTreeSet<u32> =
                    p.neighbors(xy).map(|v| v.0).collect();
                let sx: Vec<usize> = g.neighbors(x).map(|v| v.index()).collect();
                let sy: Vec<usize> = h.neighbors(y).map(|v| v.index()).collect();
                let mut bx = sx.clone();
                bx.push(x.index());
                let mut by = sy.clone();
                by.push(y.index());
                let mut expected = std::collections::BTreeSet::new();
                for &a in &sx {
                    for &b in &by {
                        expected.insert((a * nh + b) as u32);
                    }
                }
                for &a in &bx {
                    for &b in &sy {
                        expected.insert((a * nh + b) as u32);
                    }
                }
                assert_eq!(sphere, expected);
            }
        }
    }

    #[test]
    fn iterated_join_of_three_pairs_is_octahedron() {
        let e2 = generators::edgeless(2);
        let octa = e2.zykov_join(&e2).zykov_join(&e2);
        assert_eq!(octa.vertex_count(), 6);
        assert_eq!(octa.edge_count(), 12);
        // positionally the same adjacency as the named generator
        let reference = generators::octahedron();
        let edges = |g: &Graph| -> Vec<(u32, u32)> {
            g.edges().iter().map(|&(a, b)| (a.0, b.0)).collect()
        };
        assert_eq!(edges(&octa), edges(&reference));
    }
}
