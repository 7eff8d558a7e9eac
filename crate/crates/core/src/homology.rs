//! Simplicial homology of the clique complex over the rationals.
//!
//! Boundary operators use the alternating-sign face convention on
//! ascending-ordered simplices. Betti numbers come from exact integer
//! ranks (fraction-free Bareiss elimination), never from floating-point
//! kernels: b_k = f_k − rank d_k − rank d_{k+1}.
//!
//! Graph endomorphisms induce integer chain maps; their super trace is the
//! Lefschetz number. The Lefschetz fixed point theorem (super trace equals
//! the signed count of fixed simplices) is checked by computing the two
//! sides through genuinely different code paths.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{Graph, VertexId};
use crate::simplicial::{enumerate_cliques_limited, Simplex};
use crate::{Error, Limits, Result};

/// Dense integer matrix, rows × cols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn trace(&self) -> i64 {
        debug_assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    pub fn multiply(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.at(k, c);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Exact rank over the rationals by one-step fraction-free (Bareiss)
    /// elimination on arbitrary-precision integers.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.at(r, c))).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot_row = match (rank..self.rows).find(|&r| !a[r][c].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            a.swap(rank, pivot_row);
            let (top, rest) = a.split_at_mut(rank + 1);
            let pivot_row_vals = &top[rank];
            for row in rest.iter_mut() {
                if row[c].is_zero() {
                    // still rescale untouched columns to keep the
                    // fraction-free invariant
                    for value in row.iter_mut().skip(c + 1) {
                        let num = &pivot_row_vals[c] * &*value;
                        debug_assert!((&num % &prev).is_zero());
                        *value = num / &prev;
                    }
                    continue;
                }
                for c2 in (c + 1)..self.cols {
                    let num = &pivot_row_vals[c] * &row[c2] - &row[c] * &pivot_row_vals[c2];
                    debug_assert!((&num % &prev).is_zero());
                    row[c2] = num / &prev;
                }
                row[c] = BigInt::zero();
            }
            prev = pivot_row_vals[c].clone();
            rank += 1;
        }
        rank
    }
}

/// Betti numbers as an integer polynomial p(t) = Σ b_k t^k. Coefficients
/// may be negative for ring elements extended linearly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: Vec<i64>,
}

impl PoincarePolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> PoincarePolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn evaluate(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn multiply(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PoincarePolynomial::new(Vec::new());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PoincarePolynomial::new(coeffs)
    }

    pub fn add_scaled(&self, other: &PoincarePolynomial, scale: i64) -> PoincarePolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0i64; len];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = self.coefficient(k) + scale * other.coefficient(k);
        }
        PoincarePolynomial::new(coeffs)
    }

    pub fn negate(&self) -> PoincarePolynomial {
        PoincarePolynomial::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Oriented chain complex of a clique complex: graded simplices plus the
/// boundary matrix of each dimension.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    graded: Vec<Vec<Simplex>>,
    /// `boundaries[k-1]` is d_k : C_k → C_{k−1}, for k = 1..=dim.
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn dimension(&self) -> Option<usize> {
        self.graded.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.graded.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn graded(&self) -> &[Vec<Simplex>] {
        &self.graded
    }

    pub fn f_count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    /// d_k for 1 ≤ k ≤ dim.
    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        if k == 0 {
            None
        } else {
            self.boundaries.get(k - 1)
        }
    }
}

pub fn chain_complex(g: &Graph) -> Result<ChainComplex> {
    chain_complex_limited(g, &Limits::default())
}

pub fn chain_complex_limited(g: &Graph, limits: &Limits) -> Result<ChainComplex> {
    let graded = enumerate_cliques_limited(g, limits)?;
    let index: Vec<HashMap<&[VertexId], usize>> = graded
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .map(|(i, s)| (s.vertices(), i))
                .collect()
        })
        .collect();
    let mut boundaries = Vec::new();
    for k in 1..graded.len() {
        let mut d = IntMatrix::zero(graded[k - 1].len(), graded[k].len());
        for (col, simplex) in graded[k].iter().enumerate() {
            let verts = simplex.vertices();
            let mut face: Vec<VertexId> = Vec::with_capacity(verts.len() - 1);
            for omit in 0..verts.len() {
                face.clear();
                face.extend(verts.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| v));
                let row = index[k - 1][face.as_slice()];
                let sign = if omit % 2 == 0 { 1 } else { -1 };
                d.set(row, col, sign);
            }
        }
        boundaries.push(d);
    }
    Ok(ChainComplex { graded, boundaries })
}

/// Betti numbers b_k = f_k − rank d_k − rank d_{k+1}, exactly over ℚ.
pub fn betti(g: &Graph) -> Result<PoincarePolynomial> {
    betti_limited(g, &Limits::default())
}

pub fn betti_limited(g: &Graph, limits: &Limits) -> Result<PoincarePolynomial> {
    let complex = chain_complex_limited(g, limits)?;
    Ok(betti_of_complex(&complex))
}

pub fn betti_of_complex(complex: &ChainComplex) -> PoincarePolynomial {
    let dim = match complex.dimension() {
        Some(d) => d,
        None => return PoincarePolynomial::new(Vec::new()),
    };
    let ranks: Vec<usize> = (1..=dim)
        .map(|k| complex.boundary(k).map(|d| d.rank()).unwrap_or(0))
        .collect();
    let rank_d = |k: usize| -> i64 {
        if k == 0 || k > dim {
            0
        } else {
            ranks[k - 1] as i64
        }
    };
    let coeffs: Vec<i64> = (0..=dim)
        .map(|k| complex.f_count(k) as i64 - rank_d(k) - rank_d(k + 1))
        .collect();
    PoincarePolynomial::new(coeffs)
}

/// Euler–Poincaré evidence: p(−1) against χ from the f-vector.
#[derive(Debug, Clone)]
pub struct EulerPoincareReport {
    pub poincare_at_minus_one: i64,
    pub chi: i64,
    pub equal: bool,
}

pub fn euler_poincare_check(g: &Graph) -> Result<EulerPoincareReport> {
    euler_poincare_check_limited(g, &Limits::default())
}

pub fn euler_poincare_check_limited(g: &Graph, limits: &Limits) -> Result<EulerPoincareReport> {
    let p = betti_limited(g, limits)?;
    let chi = crate::simplicial::euler_characteristic_limited(g, limits)?;
    let v = p.evaluate(-1);
    Ok(EulerPoincareReport {
        poincare_at_minus_one: v,
        chi,
        equal: v == chi,
    })
}

/// Künneth evidence: the Poincaré polynomial of the strong product against
/// the product of the factor polynomials, both computed independently.
#[derive(Debug, Clone)]
pub struct KunnethReport {
    pub p_g: PoincarePolynomial,
    pub p_h: PoincarePolynomial,
    pub p_product: PoincarePolynomial,
    pub p_expected: PoincarePolynomial,
    pub equal: bool,
}

pub fn verify_kunneth(g: &Graph, h: &Graph) -> Result<KunnethReport> {
    verify_kunneth_limited(g, h, &Limits::default())
}

pub fn verify_kunneth_limited(g: &Graph, h: &Graph, limits: &Limits) -> Result<KunnethReport> {
    let p_g = betti_limited(g, limits)?;
    let p_h = betti_limited(h, limits)?;
    let p_product = betti_limited(&g.strong_product(h), limits)?;
    let p_expected = p_g.multiply(&p_h);
    let equal = p_product == p_expected;
    Ok(KunnethReport {
        p_g,
        p_h,
        p_product,
        p_expected,
        equal,
    })
}

// ---------------------------------------------------------------------------
// Graph endomorphisms and Lefschetz numbers.
// ---------------------------------------------------------------------------

/// A vertex map T with the property that edges land on edges or collapse:
/// {a,b} ∈ E implies T(a) = T(b) or {T(a),T(b)} ∈ E. Such a map sends
/// simplices to simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEndomorphism {
    map: Vec<u32>,
}

impl GraphEndomorphism {
    pub fn new(g: &Graph, map: Vec<u32>) -> Result<GraphEndomorphism> {
        if map.len() != g.vertex_count() {
            return Err(Error::NotEndomorphism(format!(
                "map covers {} vertices, graph has {}",
                map.len(),
                g.vertex_count()
            )));
        }
        for (v, &t) in map.iter().enumerate() {
            if t as usize >= g.vertex_count() {
                return Err(Error::NotEndomorphism(format!(
                    "vertex {v} maps to missing vertex {t}"
                )));
            }
        }
        for (a, b) in g.edges() {
            let (ta, tb) = (map[a.index()], map[b.index()]);
            if ta != tb && !g.has_edge(VertexId(ta), VertexId(tb)) {
                return Err(Error::NotEndomorphism(format!(
                    "edge ({},{}) maps to non-edge ({},{})",
                    g.label(a),
                    g.label(b),
                    g.label(VertexId(ta)),
                    g.label(VertexId(tb))
                )));
            }
        }
        Ok(GraphEndomorphism { map })
    }

    pub fn identity(g: &Graph) -> GraphEndomorphism {
        GraphEndomorphism {
            map: (0..g.vertex_count() as u32).collect(),
        }
    }

    pub fn constant(g: &Graph, target: VertexId) -> Result<GraphEndomorphism> {
        g.check_vertex(target)?;
        Ok(GraphEndomorphism {
            map: vec![target.0; g.vertex_count()],
        })
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        VertexId(self.map[v.index()])
    }

    pub fn map(&self) -> &[u32] {
        &self.map
    }

    /// T*S on the strong product, acting coordinatewise on pair vertices.
    pub fn product(&self, other: &GraphEndomorphism, nh: usize) -> GraphEndomorphism {
        let mut map = Vec::with_capacity(self.map.len() * other.map.len());
        for &ti in &self.map {
            for &sj in &other.map {
                map.push(ti * nh as u32 + sj);
            }
        }
        GraphEndomorphism { map }
    }
}

/// Sign of the permutation carrying `values` to sorted order; `None` if
/// the values are not distinct.
fn permutation_sign(values: &[u32]) -> Option<i64> {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            match values[i].cmp(&values[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// The induced chain maps T_k, one integer matrix per dimension. A simplex
/// that collapses to lower dimension contributes a zero column.
pub fn chain_maps(complex: &ChainComplex, t: &GraphEndomorphism) -> Vec<IntMatrix> {
    let mut maps = Vec::new();
    for level in complex.graded() {
        let index: HashMap<&[VertexId], usize> = level
            .iter()
            .enumerate()
            .map(|(i, s)| (s.vertices(), i))
            .collect();
        let mut m = IntMatrix::zero(level.len(), level.len());
        for (col, simplex) in level.iter().enumerate() {
            let image: Vec<u32> = simplex.vertices().iter().map(|&v| t.apply(v).0).collect();
            let sign = match permutation_sign(&image) {
                Some(s) => s,
                None => continue, // collapsed: lands in lower dimension
            };
            let mut sorted: Vec<VertexId> = image.iter().map(|&v| VertexId(v)).collect();
            sorted.sort();
            let row = index[sorted.as_slice()];
            m.set(row, col, sign);
        }
        maps.push(m);
    }
    maps
}

/// Lefschetz number as the super trace Σ_k (−1)^k tr(T|C_k) of the induced
/// chain maps.
pub fn lefschetz_number(g: &Graph, t: &GraphEndomorphism) -> Result<i64> {
    lefschetz_number_limited(g, t, &Limits::default())
}

pub fn lefschetz_number_limited(g: &Graph, t: &GraphEndomorphism, limits: &Limits) -> Result<i64> {
    let complex = chain_complex_limited(g, limits)?;
    Ok(lefschetz_of_complex(&complex, t))
}

pub fn lefschetz_of_complex(complex: &ChainComplex, t: &GraphEndomorphism) -> i64 {
    chain_maps(complex, t)
        .iter()
        .enumerate()
        .map(|(k, m)| if k % 2 == 0 { m.trace() } else { -m.trace() })
        .sum()
}

/// The fixed-point side of the Lefschetz theorem: Σ over setwise-fixed
/// simplices of (−1)^dim · sign(T restricted to the simplex). Computed
/// directly from the simplex list, without any matrices.
pub fn fixed_simplex_index_sum(g: &Graph, t: &GraphEndomorphism) -> Result<i64> {
    fixed_simplex_index_sum_limited(g, t, &Limits::default())
}

pub fn fixed_simplex_index_sum_limited(
    g: &Graph,
    t: &GraphEndomorphism,
    limits: &Limits,
) -> Result<i64> {
    let graded = enumerate_cliques_limited(g, limits)?;
    Ok(fixed_sum_of_listing(&graded, t))
}

pub fn fixed_sum_of_listing(graded: &[Vec<Simplex>], t: &GraphEndomorphism) -> i64 {
    let mut total = 0i64;
    for level in graded {
        for simplex in level {
            let image: Vec<u32> = simplex.vertices().iter().map(|&v| t.apply(v).0).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let fixed = sorted.len() == simplex.vertices().len()
                && sorted
                    .iter()
                    .zip(simplex.vertices())
                    .all(|(&a, &b)| a == b.0);
            if fixed {
                let sign = permutation_sign(&image).expect("distinct by the dedup check");
                total += simplex.omega() * sign;
            }
        }
    }
    total
}

/// Both sides of Lefschetz multiplicativity for a product endomorphism,
/// plus the fixed-point sums.
#[derive(Debug, Clone)]
pub struct LefschetzProductReport {
    pub l_g: i64,
    pub l_h: i64,
    pub l_product: i64,
    pub fixed_g: i64,
    pub fixed_h: i64,
    pub fixed_product: i64,
}

impl LefschetzProductReport {
    pub fn multiplicative(&self) -> bool {
        self.l_product == self.l_g * self.l_h && self.fixed_product == self.fixed_g * self.fixed_h
    }

    pub fn sides_agree(&self) -> bool {
        self.l_g == self.fixed_g && self.l_h == self.fixed_h && self.l_product == self.fixed_product
    }
}

pub fn verify_lefschetz_product(
    g: &Graph,
    h: &Graph,
    t: &GraphEndomorphism,
    s: &GraphEndomorphism,
    limits: &Limits,
) -> Result<LefschetzProductReport> {
    let product = g.strong_product(h);
    let ts = t.product(s, h.vertex_count());
    // coordinatewise products of endomorphisms stay endomorphisms
    let ts = GraphEndomorphism::new(&product, ts.map)?;
    Ok(LefschetzProductReport {
        l_g: lefschetz_number_limited(g, t, limits)?,
        l_h: lefschetz_number_limited(h, s, limits)?,
        l_product: lefschetz_number_limited(&product, &ts, limits)?,
        fixed_g: fixed_simplex_index_sum_limited(g, t, limits)?,
        fixed_h: fixed_simplex_index_sum_limited(h, s, limits)?,
        fixed_product: fixed_simplex_index_sum_limited(&product, &ts, limits)?,
    })
}
