//! The Whitney clique complex of a graph: every complete subgraph is a
//! simplex, graded by dimension = vertex count − 1.
//!
//! Two independent routes to the simplex counts are provided. The listing
//! route enumerates maximal cliques (Bron–Kerbosch with pivoting) and
//! expands them to all subsets with hash-set deduplication. The counting
//! route extends cliques in ascending vertex order so each one is visited
//! exactly once, never materializing anything; it is what the curvature
//! and index machinery run on. A third route, the Gauss–Bonnet recursion
//! over unit spheres, recovers the generating function without any clique
//! search at all.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::graph::{Graph, VertexId};
use crate::vset::VSet;
use crate::{Error, Limits, Result};

/// A complete subgraph, stored as strictly ascending vertex ids of its
/// host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    pub(crate) fn from_vset(s: &VSet) -> Simplex {
        Simplex {
            vertices: s.iter().map(|i| VertexId(i as u32)).collect(),
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    /// ω(x) = (−1)^dim(x), the weight every valuation here is built from.
    pub fn omega(&self) -> i64 {
        if self.dimension().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.0)?;
        }
        write!(f, "}}")
    }
}

/// Simplex counts by dimension; `counts()[k]` is the number of
/// k-dimensional simplices. Empty for the empty graph, and never ends in
/// a zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(mut counts: Vec<u64>) -> FVector {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        FVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest simplex dimension, or none for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// χ = f₀ − f₁ + f₂ − ⋯
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The simplex generating function f_G(t) = 1 + f₀t + f₁t² + ⋯ + f_d t^{d+1},
/// stored as its integer coefficient sequence starting at the constant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexPolynomial {
    coeffs: Vec<u64>,
}

impl SimplexPolynomial {
    pub fn from_f_vector(fv: &FVector) -> SimplexPolynomial {
        let mut coeffs = Vec::with_capacity(fv.counts().len() + 1);
        coeffs.push(1);
        coeffs.extend_from_slice(fv.counts());
        SimplexPolynomial { coeffs }
    }

    /// Coefficients `[1, f₀, f₁, …]`.
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(self.coeffs[1..].to_vec())
    }

    /// Exact evaluation at an integer argument.
    pub fn evaluate(&self, t: i64) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i64, |acc, &c| acc * t + c as i64)
    }

    /// Product of generating functions; under the Zykov join the simplex
    /// generating functions multiply.
    pub fn multiply(&self, other: &SimplexPolynomial) -> SimplexPolynomial {
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        SimplexPolynomial { coeffs }
    }
}

impl fmt::Display for SimplexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &c) in self.coeffs.iter().enumerate() {
            if k == 0 {
                write!(f, "{c}")?;
            } else if c != 0 {
                write!(f, " + {c}")?;
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Counting route: ordered clique extension, each clique visited once.
// ---------------------------------------------------------------------------

struct Counter<'a> {
    adj: &'a [VSet],
    counts: Vec<u64>,
    visited: u64,
    limit: u64,
}

impl Counter<'_> {
    fn bump(&mut self, size: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::Budget { limit: self.limit });
        }
        if self.counts.len() < size {
            self.counts.resize(size, 0);
        }
        self.counts[size - 1] += 1;
        Ok(())
    }

    fn extend(&mut self, cand: &VSet, size: usize) -> Result<()> {
        for u in cand.iter() {
            self.bump(size + 1)?;
            let next = cand.intersect_above(&self.adj[u], u);
            if !next.is_empty() {
                self.extend(&next, size + 1)?;
            }
        }
        Ok(())
    }
}

/// Simplex counts of the subcomplex induced on `universe`, without
/// materializing anything.
pub(crate) fn counts_within(adj: &[VSet], universe: &VSet, limits: &Limits) -> Result<Vec<u64>> {
    let mut counter = Counter {
        adj,
        counts: Vec::new(),
        visited: 0,
        limit: limits.max_simplices,
    };
    for v in universe.iter() {
        counter.bump(1)?;
        let cand = universe.intersect_above(&adj[v], v);
        if !cand.is_empty() {
            counter.extend(&cand, 1)?;
        }
    }
    Ok(counter.counts)
}

pub(crate) fn euler_within(adj: &[VSet], universe: &VSet, limits: &Limits) -> Result<i64> {
    Ok(FVector::new(counts_within(adj, universe, limits)?).euler_characteristic())
}

// ---------------------------------------------------------------------------
// Listing route: Bron–Kerbosch maximal cliques, then subset expansion.
// ---------------------------------------------------------------------------

fn bron_kerbosch(
    adj: &[VSet],
    r: &mut Vec<usize>,
    p: VSet,
    x: VSet,
    out: &mut Vec<VSet>,
    universe: usize,
) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(VSet::from_indices(universe, r.iter().copied()));
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbors in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersect(&adj[u]).len())
        .expect("P ∪ X nonempty");
    let todo = p.difference(&adj[pivot]);
    let mut p = p;
    let mut x = x;
    for v in todo.iter() {
        r.push(v);
        bron_kerbosch(
            adj,
            r,
            p.intersect(&adj[v]),
            x.intersect(&adj[v]),
            out,
            universe,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All maximal cliques of the subcomplex induced on `universe`.
pub(crate) fn maximal_cliques_within(adj: &[VSet], universe: &VSet) -> Vec<VSet> {
    let mut out = Vec::new();
    let n = adj.len();
    let mut r = Vec::new();
    bron_kerbosch(adj, &mut r, universe.clone(), VSet::empty(n), &mut out, n);
    out
}

/// Every simplex of the subcomplex induced on `universe`, deduplicated and
/// grouped by size (index k holds the k-vertex cliques). The budget counts
/// expansion work, so duplicated subsets of overlapping maximal cliques
/// are charged too.
pub(crate) fn simplices_within(
    adj: &[VSet],
    universe: &VSet,
    limits: &Limits,
) -> Result<Vec<Vec<VSet>>> {
    let n = adj.len();
    let maximal = maximal_cliques_within(adj, universe);
    let mut seen: HashSet<VSet> = HashSet::new();
    let mut work: u64 = 0;
    for clique in &maximal {
        let members = clique.to_vec();
        let s = members.len();
        if s >= 63 {
            // 2^s subsets cannot fit any realistic budget
            return Err(Error::Budget {
                limit: limits.max_simplices,
            });
        }
        for mask in 1u64..(1u64 << s) {
            work += 1;
            if work > limits.max_simplices {
                return Err(Error::Budget {
                    limit: limits.max_simplices,
                });
            }
            let mut sub = VSet::empty(n);
            let mut bits = mask;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                sub.insert(members[b]);
            }
            seen.insert(sub);
        }
    }
    let mut graded: Vec<Vec<VSet>> = Vec::new();
    for s in seen {
        let size = s.len();
        if graded.len() < size {
            graded.resize(size, Vec::new());
        }
        graded[size - 1].push(s);
    }
    for level in &mut graded {
        level.sort_by_key(|s| s.to_vec());
    }
    Ok(graded)
}

// ---------------------------------------------------------------------------
// Public operations on graphs.
// ---------------------------------------------------------------------------

/// Every nonempty complete subgraph of `g`, grouped by dimension and
/// lexicographically sorted within each group.
pub fn enumerate_cliques(g: &Graph) -> Result<Vec<Vec<Simplex>>> {
    enumerate_cliques_limited(g, &Limits::default())
}

pub fn enumerate_cliques_limited(g: &Graph, limits: &Limits) -> Result<Vec<Vec<Simplex>>> {
    let adj = g.bit_adjacency();
    let universe = VSet::full(g.vertex_count());
    let graded = simplices_within(&adj, &universe, limits)?;
    Ok(graded
        .iter()
        .map(|level| level.iter().map(Simplex::from_vset).collect())
        .collect())
}

/// Simplex counts per dimension, via the counting route.
pub fn f_vector(g: &Graph) -> Result<FVector> {
    f_vector_limited(g, &Limits::default())
}

pub fn f_vector_limited(g: &Graph, limits: &Limits) -> Result<FVector> {
    let adj = g.bit_adjacency();
    let universe = VSet::full(g.vertex_count());
    Ok(FVector::new(counts_within(&adj, &universe, limits)?))
}

pub fn generating_function(g: &Graph) -> Result<SimplexPolynomial> {
    generating_function_limited(g, &Limits::default())
}

pub fn generating_function_limited(g: &Graph, limits: &Limits) -> Result<SimplexPolynomial> {
    Ok(SimplexPolynomial::from_f_vector(&f_vector_limited(
        g, limits,
    )?))
}

/// χ(G) = f₀ − f₁ + f₂ − ⋯ = 1 − f_G(−1).
pub fn euler_characteristic(g: &Graph) -> Result<i64> {
    euler_characteristic_limited(g, &Limits::default())
}

pub fn euler_characteristic_limited(g: &Graph, limits: &Limits) -> Result<i64> {
    Ok(f_vector_limited(g, limits)?.euler_characteristic())
}

// ---------------------------------------------------------------------------
// Gauss–Bonnet recursion: f_G(t) = 1 + ∫₀ᵗ Σ_x f_{S(x)}(s) ds, i.e.
// (k+1)·f_k(G) = Σ_x f_{k−1}(S(x)) with f_{−1} = 1.
// ---------------------------------------------------------------------------

/// The generating function computed without any clique search: the sphere
/// recursion with memoization on induced vertex sets and exact integer
/// division.
pub fn generating_function_recursive(g: &Graph) -> Result<SimplexPolynomial> {
    generating_function_recursive_limited(g, &Limits::default())
}

pub fn generating_function_recursive_limited(
    g: &Graph,
    limits: &Limits,
) -> Result<SimplexPolynomial> {
    let adj = g.bit_adjacency();
    let universe = VSet::full(g.vertex_count());
    let mut memo: HashMap<VSet, Vec<u64>> = HashMap::new();
    let mut calls = 0u64;
    let counts = recursive_counts(&adj, &universe, &mut memo, &mut calls, limits)?;
    Ok(SimplexPolynomial::from_f_vector(&FVector::new(counts)))
}

fn recursive_counts(
    adj: &[VSet],
    universe: &VSet,
    memo: &mut HashMap<VSet, Vec<u64>>,
    calls: &mut u64,
    limits: &Limits,
) -> Result<Vec<u64>> {
    *calls += 1;
    if *calls > limits.max_simplices {
        return Err(Error::Budget {
            limit: limits.max_simplices,
        });
    }
    if let Some(hit) = memo.get(universe) {
        return Ok(hit.clone());
    }
    let n = universe.len() as u64;
    let has_edge = universe
        .iter()
        .any(|v| universe.intersect_above(&adj[v], v).iter().next().is_some());
    let counts = if !has_edge {
        // edgeless base case: f(t) = 1 + n·t
        if n == 0 {
            Vec::new()
        } else {
            vec![n]
        }
    } else {
        // Σ_x f_{k−1}(S(x)), then divide by k+1
        let mut sums: Vec<u64> = vec![n]; // k = 0 term: Σ_x f_{−1} = n
        for x in universe.iter() {
            let sphere = universe.intersect(&adj[x]);
            let sphere_counts = recursive_counts(adj, &sphere, memo, calls, limits)?;
            if sums.len() < sphere_counts.len() + 1 {
                sums.resize(sphere_counts.len() + 1, 0);
            }
            for (k, &c) in sphere_counts.iter().enumerate() {
                sums[k + 1] += c;
            }
        }
        sums.iter()
            .enumerate()
            .map(|(k, &s)| {
                debug_assert_eq!(s % (k as u64 + 1), 0, "Gauss-Bonnet recursion sum not divisible");
                s / (k as u64 + 1)
            })
            .collect()
    };
    memo.insert(universe.clone(), counts.clone());
    Ok(counts)
}
