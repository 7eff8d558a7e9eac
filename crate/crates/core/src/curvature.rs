//! Levitt curvature K(x) = ∫₋₁⁰ f_{S(x)}(s) ds and the identities built on
//! it: Gauss–Bonnet, the strong-product curvature theorem, the cylinder
//! decomposition of product spheres, and the sphere-to-join comparison
//! through homotopy invariants.
//!
//! Every check returns its evidence, both sides of each equality, so a
//! failing property test localizes immediately. Nothing in here asserts.

use num_traits::Zero;

use crate::graph::{Graph, VertexId};
use crate::homology::{self, PoincarePolynomial};
use crate::rational::{self, Rational};
use crate::simplicial::{counts_within, euler_within};
use crate::vset::VSet;
use crate::{Limits, Result};

/// Curvature at every vertex, in vertex order. The values always sum to
/// χ(G) by Gauss–Bonnet, which [`gauss_bonnet_report`] exposes as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureMap {
    values: Vec<Rational>,
}

impl CurvatureMap {
    pub fn get(&self, v: VertexId) -> &Rational {
        &self.values[v.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn total(&self) -> Rational {
        self.values.iter().fold(rational::zero(), |a, b| a + b)
    }
}

/// Curvature from the f-vector of a unit sphere:
/// K = 1 + Σ_k (−1)^{k+1} f_k / (k+2).
fn curvature_from_sphere_counts(counts: &[u64]) -> Rational {
    let mut k = rational::one();
    for (i, &f) in counts.iter().enumerate() {
        let term = Rational::new((f as i64).into(), (i as i64 + 2).into());
        if i % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

/// Curvature of one vertex.
pub fn curvature(g: &Graph, x: VertexId) -> Result<Rational> {
    curvature_limited(g, x, &Limits::default())
}

pub fn curvature_limited(g: &Graph, x: VertexId, limits: &Limits) -> Result<Rational> {
    g.check_vertex(x)?;
    let adj = g.bit_adjacency();
    let sphere = &adj[x.index()];
    Ok(curvature_from_sphere_counts(&counts_within(
        &adj, sphere, limits,
    )?))
}

/// Curvature at every vertex.
pub fn curvatures(g: &Graph) -> Result<CurvatureMap> {
    curvatures_limited(g, &Limits::default())
}

pub fn curvatures_limited(g: &Graph, limits: &Limits) -> Result<CurvatureMap> {
    let adj = g.bit_adjacency();
    let mut values = Vec::with_capacity(g.vertex_count());
    for x in 0..g.vertex_count() {
        let counts = counts_within(&adj, &adj[x], limits)?;
        values.push(curvature_from_sphere_counts(&counts));
    }
    Ok(CurvatureMap { values })
}

/// Evidence for Gauss–Bonnet on one graph: the curvature total, χ, and
/// whether they agree (they must, for every finite simple graph).
#[derive(Debug, Clone)]
pub struct GaussBonnetReport {
    pub sum: Rational,
    pub chi: i64,
    pub equal: bool,
}

pub fn gauss_bonnet_report(g: &Graph) -> Result<GaussBonnetReport> {
    gauss_bonnet_report_limited(g, &Limits::default())
}

pub fn gauss_bonnet_report_limited(g: &Graph, limits: &Limits) -> Result<GaussBonnetReport> {
    let sum = curvatures_limited(g, limits)?.total();
    let chi = crate::simplicial::euler_characteristic_limited(g, limits)?;
    let equal = sum == rational::from_int(chi);
    Ok(GaussBonnetReport { sum, chi, equal })
}

/// One product vertex of a curvature-product check: the curvature computed
/// directly on G*H against the product of the factor curvatures.
#[derive(Debug, Clone)]
pub struct ProductVertexEvidence {
    pub index: usize,
    pub label: String,
    pub product_value: Rational,
    pub tensor_value: Rational,
}

impl ProductVertexEvidence {
    pub fn equal(&self) -> bool {
        self.product_value == self.tensor_value
    }
}

#[derive(Debug, Clone)]
pub struct CurvatureProductReport {
    pub vertices: Vec<ProductVertexEvidence>,
    pub all_equal: bool,
}

/// Checks K_{G*H}(x,y) = K_G(x)·K_H(y) at every product vertex, computing
/// both sides independently: the left on the product graph, the right as
/// the positional tensor of the factor curvature maps.
pub fn verify_curvature_product(g: &Graph, h: &Graph) -> Result<CurvatureProductReport> {
    verify_curvature_product_limited(g, h, &Limits::default())
}

pub fn verify_curvature_product_limited(
    g: &Graph,
    h: &Graph,
    limits: &Limits,
) -> Result<CurvatureProductReport> {
    let product = g.strong_product(h);
    let kp = curvatures_limited(&product, limits)?;
    let kg = curvatures_limited(g, limits)?;
    let kh = curvatures_limited(h, limits)?;
    let nh = h.vertex_count();
    let mut vertices = Vec::with_capacity(product.vertex_count());
    for (i, kx) in kg.values().iter().enumerate() {
        for (j, ky) in kh.values().iter().enumerate() {
            let index = i * nh + j;
            vertices.push(ProductVertexEvidence {
                index,
                label: product.label(VertexId(index as u32)).to_string(),
                product_value: kp.values()[index].clone(),
                tensor_value: kx * ky,
            });
        }
    }
    let all_equal = vertices.iter().all(|v| v.equal());
    Ok(CurvatureProductReport { vertices, all_equal })
}

/// Evidence for the cylinder decomposition of a product unit sphere:
/// S(x,y) = S(x)*B(y) ∪ B(x)*S(y) with intersection S(x)*S(y), as exact
/// vertex-set identities, plus the check that both cylinder pieces sit in
/// S(x,y) as induced subgraphs.
#[derive(Debug, Clone)]
pub struct CylinderReport {
    pub sphere_size: usize,
    pub union_identity: bool,
    pub intersection_identity: bool,
    pub pieces_induced: bool,
}

impl CylinderReport {
    pub fn holds(&self) -> bool {
        self.union_identity && self.intersection_identity && self.pieces_induced
    }
}

pub fn cylinder_decomposition_check(
    g: &Graph,
    h: &Graph,
    x: VertexId,
    y: VertexId,
) -> Result<CylinderReport> {
    g.check_vertex(x)?;
    h.check_vertex(y)?;
    let product = g.strong_product(h);
    cylinder_check_on_product(g, h, &product, x, y)
}

/// Same check, reusing a product graph the caller already built.
pub fn cylinder_check_on_product(
    g: &Graph,
    h: &Graph,
    product: &Graph,
    x: VertexId,
    y: VertexId,
) -> Result<CylinderReport> {
    let nh = h.vertex_count();
    let np = product.vertex_count();
    let xy = VertexId((x.index() * nh + y.index()) as u32);

    let sphere_set = VSet::from_indices(np, product.neighbors(xy).map(|v| v.index()));

    let sx: Vec<usize> = g.neighbors(x).map(|v| v.index()).collect();
    let sy: Vec<usize> = h.neighbors(y).map(|v| v.index()).collect();
    let mut bx = sx.clone();
    bx.push(x.index());
    bx.sort_unstable();
    let mut by = sy.clone();
    by.push(y.index());
    by.sort_unstable();

    let pairs = |left: &[usize], right: &[usize]| -> VSet {
        let mut s = VSet::empty(np);
        for &a in left {
            for &b in right {
                s.insert(a * nh + b);
            }
        }
        s
    };
    let piece_a = pairs(&sx, &by); // S(x) × B(y)
    let piece_b = pairs(&bx, &sy); // B(x) × S(y)
    let union_identity = piece_a.union(&piece_b) == sphere_set;
    let intersection_identity = piece_a.intersect(&piece_b) == pairs(&sx, &sy);

    // each cylinder piece, as a strong product, is the subgraph the product
    // sphere induces on its vertex set
    let sphere_x = g.unit_sphere(x)?;
    let ball_y = h.unit_ball(y)?;
    let ball_x = g.unit_ball(x)?;
    let sphere_y = h.unit_sphere(y)?;
    let induced_a =
        product.induced_on_sorted(&piece_a.iter().map(|i| VertexId(i as u32)).collect::<Vec<_>>());
    let induced_b =
        product.induced_on_sorted(&piece_b.iter().map(|i| VertexId(i as u32)).collect::<Vec<_>>());
    let pieces_induced =
        sphere_x.strong_product(&ball_y) == induced_a && ball_x.strong_product(&sphere_y) == induced_b;

    Ok(CylinderReport {
        sphere_size: sphere_set.len(),
        union_identity,
        intersection_identity,
        pieces_induced,
    })
}

/// Homotopy-invariant comparison of the product unit sphere S(x,y) with
/// the Zykov join S(x) ⊕ S(y): χ of both sides and the full Betti
/// vectors of both sides. Equality of both is the lemma's testable shadow.
#[derive(Debug, Clone)]
pub struct SphereJoinReport {
    pub chi_sphere: i64,
    pub chi_join: i64,
    pub betti_sphere: PoincarePolynomial,
    pub betti_join: PoincarePolynomial,
}

impl SphereJoinReport {
    pub fn chi_equal(&self) -> bool {
        self.chi_sphere == self.chi_join
    }

    pub fn betti_equal(&self) -> bool {
        self.betti_sphere == self.betti_join
    }

    pub fn holds(&self) -> bool {
        self.chi_equal() && self.betti_equal()
    }
}

pub fn sphere_join_homotopy_check(
    g: &Graph,
    h: &Graph,
    x: VertexId,
    y: VertexId,
    limits: &Limits,
) -> Result<SphereJoinReport> {
    g.check_vertex(x)?;
    h.check_vertex(y)?;
    let product = g.strong_product(h);
    let nh = h.vertex_count();
    let xy = VertexId((x.index() * nh + y.index()) as u32);
    let sphere = product.unit_sphere(xy)?;
    let join = g.unit_sphere(x)?.zykov_join(&h.unit_sphere(y)?);
    Ok(SphereJoinReport {
        chi_sphere: crate::simplicial::euler_characteristic_limited(&sphere, limits)?,
        chi_join: crate::simplicial::euler_characteristic_limited(&join, limits)?,
        betti_sphere: homology::betti_limited(&sphere, limits)?,
        betti_join: homology::betti_limited(&join, limits)?,
    })
}

/// χ of the unit sphere at product vertex (x,y), computed on a prebuilt
/// product; the cheap half of the sphere-join comparison.
pub(crate) fn product_sphere_chi(
    product: &Graph,
    adj: &[VSet],
    x_index: usize,
    y_index: usize,
    nh: usize,
    limits: &Limits,
) -> Result<i64> {
    let xy = x_index * nh + y_index;
    debug_assert!(xy < product.vertex_count());
    euler_within(adj, &adj[xy], limits)
}

/// Per-vertex curvature map rendered with labels, for reports.
pub fn labeled_curvatures(g: &Graph, map: &CurvatureMap) -> Vec<(String, Rational)> {
    g.vertices()
        .map(|v| (g.label(v).to_string(), map.get(v).clone()))
        .collect()
}

/// True when every value of the map is zero; handy for flat graphs.
pub fn is_flat(map: &CurvatureMap) -> bool {
    map.values().iter().all(|v| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;

    #[test]
    fn complete_graph_curvature_is_one_over_n() {
        for n in 1..=6 {
            let g = generators::complete(n);
            for v in g.vertices() {
                assert_eq!(curvature(&g, v).unwrap(), ratio(1, n as i64));
            }
        }
    }

    #[test]
    fn cycle_curvature_vanishes() {
        for n in 4..=7 {
            let g = generators::cycle(n);
            assert!(is_flat(&curvatures(&g).unwrap()));
        }
    }

    #[test]
    fn star_curvatures() {
        let g = generators::star(4);
        let k = curvatures(&g).unwrap();
        assert_eq!(k.get(VertexId(0)), &ratio(-1, 1));
        for leaf in 1..=4 {
            assert_eq!(k.get(VertexId(leaf)), &ratio(1, 2));
        }
    }

    #[test]
    fn octahedron_curvature_is_one_third() {
        let g = generators::octahedron();
        let k = curvatures(&g).unwrap();
        for v in g.vertices() {
            assert_eq!(k.get(v), &ratio(1, 3));
        }
        assert_eq!(k.total(), ratio(2, 1));
    }

    #[test]
    fn isolated_vertex_has_curvature_one() {
        let g = generators::edgeless(3);
        for v in g.vertices() {
            assert_eq!(curvature(&g, v).unwrap(), ratio(1, 1));
        }
    }

    #[test]
    fn curvature_restricts_to_union_components() {
        let g = generators::complete(4);
        let h = generators::cycle(5);
        let u = g.disjoint_union(&h);
        let ku = curvatures(&u).unwrap();
        let kg = curvatures(&g).unwrap();
        let kh = curvatures(&h).unwrap();
        for v in g.vertices() {
            assert_eq!(ku.get(v), kg.get(v));
        }
        for v in h.vertices() {
            assert_eq!(
                ku.get(VertexId(v.0 + g.vertex_count() as u32)),
                kh.get(v)
            );
        }
    }

    #[test]
    fn gauss_bonnet_on_small_families() {
        for g in [
            generators::complete(4),
            generators::cycle(4),
            generators::star(4),
            generators::octahedron(),
            crate::graph::Graph::empty(),
        ] {
            let r = gauss_bonnet_report(&g).unwrap();
            assert!(r.equal, "sum {} vs chi {}", r.sum, r.chi);
        }
    }

    #[test]
    fn gauss_bonnet_on_seeded_graphs() {
        for seed in 0..100 {
            let n = 1 + (seed % 8) as u32;
            let max_e = n as u64 * (n as u64 - 1) / 2;
            let g = generators::random_graph(n, (seed * 5) % (max_e + 1), seed).unwrap();
            let r = gauss_bonnet_report(&g).unwrap();
            assert!(r.equal, "seed {seed}: sum {} vs chi {}", r.sum, r.chi);
        }
    }

    #[test]
    fn unknown_vertex_is_rejected() {
        let g = generators::complete(3);
        assert!(curvature(&g, VertexId(7)).is_err());
    }

    #[test]
    fn product_theorem_on_paper_example() {
        let report =
            verify_curvature_product(&generators::complete(4), &generators::star(4)).unwrap();
        assert!(report.all_equal);
        // at (any x, center): 1/4 · (−1) = −1/4
        let center = &report.vertices[0];
        assert_eq!(center.label, "(1,1)");
        assert_eq!(center.product_value, ratio(-1, 4));
    }

    #[test]
    fn product_with_k1_reproduces_h() {
        let h = generators::random_graph(6, 9, 2).unwrap();
        let report = verify_curvature_product(&generators::complete(1), &h).unwrap();
        assert!(report.all_equal);
        let kh = curvatures(&h).unwrap();
        for (i, v) in report.vertices.iter().enumerate() {
            assert_eq!(&v.product_value, &kh.values()[i]);
        }
    }

    #[test]
    fn cylinder_identity_on_c4_k2() {
        let g = generators::cycle(4);
        let h = generators::complete(2);
        for x in g.vertices() {
            for y in h.vertices() {
                let r = cylinder_decomposition_check(&g, &h, x, y).unwrap();
                assert!(r.holds());
                // |S(x)|·|B(y)| + |B(x)|·|S(y)| − |S(x)|·|S(y)| = 2·2+3·1−2·1,
                // which is |B(x)|·|B(y)| − 1
                assert_eq!(r.sphere_size, 5);
            }
        }
    }

    #[test]
    fn cylinder_identity_with_k1_degenerates() {
        let g = generators::complete(1);
        let h = generators::cycle(5);
        for y in h.vertices() {
            let r = cylinder_decomposition_check(&g, &h, VertexId(0), y).unwrap();
            assert!(r.holds());
            assert_eq!(r.sphere_size, h.degree(y));
        }
    }

    #[test]
    fn sphere_join_invariants_on_octahedron_case() {
        let g = generators::cycle(4);
        let h = generators::complete(2);
        let limits = Limits::default();
        for x in g.vertices() {
            for y in h.vertices() {
                let r = sphere_join_homotopy_check(&g, &h, x, y, &limits).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }

    #[test]
    fn sphere_join_with_isolated_vertex() {
        let g = generators::edgeless(2);
        let h = generators::path(3);
        let limits = Limits::default();
        let r = sphere_join_homotopy_check(&g, &h, VertexId(0), VertexId(1), &limits).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn sphere_chi_join_factorization() {
        // 1 − χ(S(x,y)) = (1 − χ(S(x)))·(1 − χ(S(y)))
        let g = generators::random_graph(6, 8, 11).unwrap();
        let h = generators::random_graph(5, 6, 12).unwrap();
        let product = g.strong_product(&h);
        let adj = product.bit_adjacency();
        let limits = Limits::default();
        let nh = h.vertex_count();
        for x in g.vertices() {
            let sx = g.unit_sphere(x).unwrap();
            let cx = crate::simplicial::euler_characteristic(&sx).unwrap();
            for y in h.vertices() {
                let sy = h.unit_sphere(y).unwrap();
                let cy = crate::simplicial::euler_characteristic(&sy).unwrap();
                let c_xy =
                    product_sphere_chi(&product, &adj, x.index(), y.index(), nh, &limits).unwrap();
                assert_eq!(1 - c_xy, (1 - cx) * (1 - cy));
            }
        }
    }
}
