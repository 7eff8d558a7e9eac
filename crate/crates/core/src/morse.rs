//! Locally injective vertex functions (colorings), their Poincaré–Hopf
//! indices i(x) = 1 − χ({y ∈ S(x) : g(y) < g(x)}), and the Monte-Carlo
//! index expectation that recovers curvature.
//!
//! Colorings take values in the positive rationals {1,…,2^40}/2^40 rather
//! than [−1,1]: the index depends only on the vertex ordering induced by
//! the function, which is distribution-free for continuous i.i.d. laws,
//! and positive values keep tensor products order-generic. The generator
//! is counter-based (ChaCha8) with one substream per sample index, so
//! sampling is deterministic no matter how the work is scheduled.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::rational::{self, Rational};
use crate::simplicial::euler_within;
use crate::vset::VSet;
use crate::{Error, Limits, Result};

const VALUE_BITS: u32 = 40;
const MAX_RETRIES: u32 = 100;

/// A rational-valued vertex labeling, positionally indexed. Valid ones are
/// locally injective: adjacent vertices get distinct values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<Rational>,
}

impl VertexFunction {
    /// Wraps explicit values after checking local injectivity.
    pub fn new(g: &Graph, values: Vec<Rational>) -> Result<VertexFunction> {
        if values.len() != g.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "function covers {} vertices, graph has {}",
                values.len(),
                g.vertex_count()
            )));
        }
        for (a, b) in g.edges() {
            if values[a.index()] == values[b.index()] {
                return Err(Error::NotLocallyInjective(
                    g.label(a).to_string(),
                    g.label(b).to_string(),
                ));
            }
        }
        Ok(VertexFunction { values })
    }

    pub fn get(&self, v: VertexId) -> &Rational {
        &self.values[v.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn draw_values(rng: &mut impl RngCore, n: usize) -> Vec<u64> {
    let mask = (1u64 << VALUE_BITS) - 1;
    (0..n).map(|_| (rng.next_u64() & mask) + 1).collect()
}

fn coloring_from_rng(g: &Graph, rng: &mut impl RngCore) -> Result<VertexFunction> {
    let n = g.vertex_count();
    let denom = 1i64 << VALUE_BITS;
    for _ in 0..MAX_RETRIES {
        let raw = draw_values(rng, n);
        let mut sorted = raw.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue; // wholesale re-sample on any collision
        }
        let values = raw
            .into_iter()
            .map(|v| Rational::new((v as i64).into(), denom.into()))
            .collect();
        return VertexFunction::new(g, values);
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// Uniform random coloring with values in {1,…,2^40}/2^40, re-sampled
/// until all vertex values are pairwise distinct. Deterministic in `seed`.
pub fn random_coloring(g: &Graph, seed: u64) -> Result<VertexFunction> {
    random_coloring_stream(g, seed, 0)
}

/// Substream variant: stream `i` is independent of stream `j ≠ i` under
/// the same seed. Used for per-sample and per-case randomness.
pub fn random_coloring_stream(g: &Graph, seed: u64, stream: u64) -> Result<VertexFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    coloring_from_rng(g, &mut rng)
}

/// S_g(x) = {y ∈ S(x) : g(y) < g(x)} as a graph.
pub fn sublevel_sphere(g: &Graph, f: &VertexFunction, x: VertexId) -> Result<Graph> {
    g.check_vertex(x)?;
    let cutoff = f.get(x);
    let below: Vec<VertexId> = g.neighbors(x).filter(|&y| f.get(y) < cutoff).collect();
    Ok(g.induced_on_sorted(&below))
}

fn index_from_adj(
    g: &Graph,
    adj: &[VSet],
    f: &VertexFunction,
    x: VertexId,
    limits: &Limits,
) -> Result<i64> {
    let cutoff = f.get(x);
    let mut below = VSet::empty(g.vertex_count());
    for y in g.neighbors(x) {
        if f.get(y) < cutoff {
            below.insert(y.index());
        }
    }
    Ok(1 - euler_within(adj, &below, limits)?)
}

/// Poincaré–Hopf index i(x) = 1 − χ(S_g(x)).
pub fn ph_index(g: &Graph, f: &VertexFunction, x: VertexId) -> Result<i64> {
    ph_index_limited(g, f, x, &Limits::default())
}

pub fn ph_index_limited(
    g: &Graph,
    f: &VertexFunction,
    x: VertexId,
    limits: &Limits,
) -> Result<i64> {
    g.check_vertex(x)?;
    let adj = g.bit_adjacency();
    index_from_adj(g, &adj, f, x, limits)
}

/// Indices at every vertex plus the Poincaré–Hopf balance against χ.
#[derive(Debug, Clone)]
pub struct PhReport {
    pub indices: Vec<i64>,
    pub sum: i64,
    pub chi: i64,
    pub equal: bool,
}

pub fn ph_report(g: &Graph, f: &VertexFunction) -> Result<PhReport> {
    ph_report_limited(g, f, &Limits::default())
}

pub fn ph_report_limited(g: &Graph, f: &VertexFunction, limits: &Limits) -> Result<PhReport> {
    let adj = g.bit_adjacency();
    let mut indices = Vec::with_capacity(g.vertex_count());
    for x in g.vertices() {
        indices.push(index_from_adj(g, &adj, f, x, limits)?);
    }
    let sum: i64 = indices.iter().sum();
    let chi = crate::simplicial::euler_characteristic_limited(g, limits)?;
    Ok(PhReport {
        indices,
        sum,
        chi,
        equal: sum == chi,
    })
}

/// The tensor coloring (f ⊗ k)(x,y) = f(x)·k(y) on a prebuilt strong
/// product. Positive inputs keep the order structure generic; if two
/// adjacent product vertices still tie, the caller is expected to re-seed.
pub fn tensor_function(
    f: &VertexFunction,
    k: &VertexFunction,
    product: &Graph,
) -> Result<VertexFunction> {
    assert_eq!(
        f.len() * k.len(),
        product.vertex_count(),
        "product graph does not match the factor functions"
    );
    let mut values = Vec::with_capacity(product.vertex_count());
    for a in f.values() {
        for b in k.values() {
            values.push(a * b);
        }
    }
    for (u, v) in product.edges() {
        if values[u.index()] == values[v.index()] {
            return Err(Error::TensorCollision(
                product.label(u).to_string(),
                product.label(v).to_string(),
            ));
        }
    }
    Ok(VertexFunction { values })
}

/// One product vertex of an index-product check.
#[derive(Debug, Clone)]
pub struct IndexProductEvidence {
    pub index: usize,
    pub label: String,
    pub product_value: i64,
    pub tensor_value: i64,
}

#[derive(Debug, Clone)]
pub struct IndexProductReport {
    pub vertices: Vec<IndexProductEvidence>,
    pub all_equal: bool,
    /// Poincaré–Hopf balance of the three index sums, for the record.
    pub ph_g: PhReport,
    pub ph_h: PhReport,
    pub ph_product: PhReport,
}

/// Checks i_{G*H, f⊗k}(x,y) = i_{G,f}(x)·i_{H,k}(y) at every product
/// vertex, computing the left side on the product graph with the tensor
/// coloring and the right side as the positional tensor of the factor
/// index maps.
pub fn verify_index_product(
    g: &Graph,
    h: &Graph,
    f: &VertexFunction,
    k: &VertexFunction,
) -> Result<IndexProductReport> {
    verify_index_product_limited(g, h, f, k, &Limits::default())
}

pub fn verify_index_product_limited(
    g: &Graph,
    h: &Graph,
    f: &VertexFunction,
    k: &VertexFunction,
    limits: &Limits,
) -> Result<IndexProductReport> {
    let product = g.strong_product(h);
    let fk = tensor_function(f, k, &product)?;
    let ph_g = ph_report_limited(g, f, limits)?;
    let ph_h = ph_report_limited(h, k, limits)?;
    let ph_product = ph_report_limited(&product, &fk, limits)?;
    let nh = h.vertex_count();
    let mut vertices = Vec::with_capacity(product.vertex_count());
    for (i, &ix) in ph_g.indices.iter().enumerate() {
        for (j, &iy) in ph_h.indices.iter().enumerate() {
            let index = i * nh + j;
            vertices.push(IndexProductEvidence {
                index,
                label: product.label(VertexId(index as u32)).to_string(),
                product_value: ph_product.indices[index],
                tensor_value: ix * iy,
            });
        }
    }
    let all_equal = vertices
        .iter()
        .all(|v| v.product_value == v.tensor_value);
    Ok(IndexProductReport {
        vertices,
        all_equal,
        ph_g,
        ph_h,
        ph_product,
    })
}

/// Monte-Carlo estimate of E[i_g(x)] over random colorings: the exact
/// rational mean of the sampled indices, plus a floating-point standard
/// error for diagnostics only.
#[derive(Debug, Clone)]
pub struct Expectation {
    pub estimate: Rational,
    pub stderr: f64,
    pub samples: u64,
}

pub fn index_expectation(g: &Graph, x: VertexId, samples: u64, seed: u64) -> Result<Expectation> {
    index_expectation_limited(g, x, samples, seed, &Limits::default())
}

pub fn index_expectation_limited(
    g: &Graph,
    x: VertexId,
    samples: u64,
    seed: u64,
    limits: &Limits,
) -> Result<Expectation> {
    assert!(samples >= 1, "need at least one sample");
    g.check_vertex(x)?;
    let adj = g.bit_adjacency();
    let mut sum = 0i64;
    let mut sum_sq = 0i64;
    for i in 0..samples {
        let f = random_coloring_stream(g, seed, i)?;
        let idx = index_from_adj(g, &adj, &f, x, limits)?;
        sum += idx;
        sum_sq += idx * idx;
    }
    let estimate = Rational::new(sum.into(), (samples as i64).into());
    let stderr = if samples > 1 {
        let n = samples as f64;
        let mean = sum as f64 / n;
        let var = (sum_sq as f64 - n * mean * mean) / (n - 1.0);
        (var.max(0.0) / n).sqrt()
    } else {
        0.0
    };
    Ok(Expectation {
        estimate,
        stderr,
        samples,
    })
}

/// Replaces the values of `f` by their ranks 1..n (same order, different
/// scale). Indices are blind to this; tests lean on it.
pub fn rank_normalize(f: &VertexFunction) -> VertexFunction {
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&a, &b| f.values[a].cmp(&f.values[b]));
    let mut values = vec![rational::zero(); f.len()];
    for (rank, &pos) in order.iter().enumerate() {
        values[pos] = rational::from_int(rank as i64 + 1);
    }
    VertexFunction { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;
    use num_traits::Signed;

    #[test]
    fn coloring_is_deterministic_and_positive() {
        let g = generators::random_graph(8, 12, 3).unwrap();
        let a = random_coloring(&g, 42).unwrap();
        let b = random_coloring(&g, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.values().iter().all(|v| v.is_positive()));
        let c = random_coloring(&g, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn coloring_is_locally_injective_on_corpus() {
        for seed in 0..100 {
            let n = 1 + (seed % 8) as u32;
            let max_e = n as u64 * (n as u64 - 1) / 2;
            let g = generators::random_graph(n, (seed * 3) % (max_e + 1), seed).unwrap();
            let f = random_coloring(&g, seed).unwrap();
            // stronger than required: all values distinct
            let mut vals: Vec<&Rational> = f.values().iter().collect();
            vals.sort();
            assert!(vals.windows(2).all(|w| w[0] != w[1]), "seed {seed}");
        }
    }

    #[test]
    fn explicit_function_validation() {
        let k2 = generators::complete(2);
        assert!(VertexFunction::new(&k2, vec![ratio(1, 2), ratio(1, 2)]).is_err());
        assert!(VertexFunction::new(&k2, vec![ratio(1, 2), ratio(1, 3)]).is_ok());
        assert!(VertexFunction::new(&k2, vec![ratio(1, 2)]).is_err());
    }

    #[test]
    fn sublevel_sphere_examples() {
        let k2 = generators::complete(2);
        let f = VertexFunction::new(&k2, vec![ratio(1, 4), ratio(1, 2)]).unwrap();
        // global minimum: empty sphere
        assert_eq!(sublevel_sphere(&k2, &f, VertexId(0)).unwrap().vertex_count(), 0);
        let s = sublevel_sphere(&k2, &f, VertexId(1)).unwrap();
        assert_eq!(s.vertex_count(), 1);

        let c4 = generators::cycle(4);
        let f = VertexFunction::new(
            &c4,
            vec![ratio(1, 1), ratio(2, 1), ratio(3, 1), ratio(4, 1)],
        )
        .unwrap();
        let s = sublevel_sphere(&c4, &f, VertexId(3)).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (2, 0));
    }

    #[test]
    fn c4_index_sequence() {
        let c4 = generators::cycle(4);
        let f = VertexFunction::new(
            &c4,
            vec![ratio(1, 1), ratio(2, 1), ratio(3, 1), ratio(4, 1)],
        )
        .unwrap();
        let r = ph_report(&c4, &f).unwrap();
        assert_eq!(r.indices, vec![1, 0, 0, -1]);
        assert_eq!(r.sum, 0);
        assert!(r.equal);
    }

    #[test]
    fn complete_graph_has_single_unit_index() {
        for seed in 0..10 {
            let k4 = generators::complete(4);
            let f = random_coloring(&k4, seed).unwrap();
            let mut indices = ph_report(&k4, &f).unwrap().indices;
            indices.sort_unstable();
            assert_eq!(indices, vec![0, 0, 0, 1]);
        }
    }

    #[test]
    fn star_indices_sum_to_one() {
        for seed in 0..10 {
            let g = generators::star(4);
            let f = random_coloring(&g, seed).unwrap();
            let r = ph_report(&g, &f).unwrap();
            assert_eq!(r.sum, 1);
            assert!(r.equal);
        }
    }

    #[test]
    fn ph_balance_on_corpus() {
        for seed in 0..100 {
            let n = 1 + (seed % 8) as u32;
            let max_e = n as u64 * (n as u64 - 1) / 2;
            let g = generators::random_graph(n, (seed * 5) % (max_e + 1), seed + 7).unwrap();
            let f = random_coloring(&g, seed).unwrap();
            let r = ph_report(&g, &f).unwrap();
            assert!(r.equal, "seed {seed}: sum {} chi {}", r.sum, r.chi);
        }
    }

    #[test]
    fn indices_only_see_the_order() {
        for seed in 0..20 {
            let g = generators::random_graph(7, (seed * 3) % 22, seed + 60).unwrap();
            let f = random_coloring(&g, seed).unwrap();
            let ranked = rank_normalize(&f);
            assert_eq!(
                ph_report(&g, &f).unwrap().indices,
                ph_report(&g, &ranked).unwrap().indices,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn tensor_function_scales_and_validates() {
        let k1 = generators::complete(1);
        let h = generators::cycle(4);
        let f = VertexFunction::new(&k1, vec![ratio(2, 1)]).unwrap();
        let k = random_coloring(&h, 5).unwrap();
        let product = k1.strong_product(&h);
        let fk = tensor_function(&f, &k, &product).unwrap();
        for (i, v) in fk.values().iter().enumerate() {
            assert_eq!(v, &(ratio(2, 1) * &k.values()[i]));
            assert!(v.is_positive());
        }
    }

    #[test]
    fn tensor_collision_is_reported() {
        let k2 = generators::complete(2);
        let f = VertexFunction::new(&k2, vec![ratio(1, 1), ratio(2, 1)]).unwrap();
        let k = VertexFunction::new(&k2, vec![ratio(2, 1), ratio(4, 1)]).unwrap();
        // (1·4) = (2·2): adjacent in K2*K2 = K4
        let product = k2.strong_product(&k2);
        assert!(matches!(
            tensor_function(&f, &k, &product),
            Err(Error::TensorCollision(_, _))
        ));
    }

    #[test]
    fn index_product_with_unit_factor() {
        let k1 = generators::complete(1);
        let h = generators::random_graph(6, 9, 8).unwrap();
        let f = random_coloring(&k1, 1).unwrap();
        let k = random_coloring(&h, 2).unwrap();
        let r = verify_index_product(&k1, &h, &f, &k).unwrap();
        assert!(r.all_equal);
        for (v, &expected) in r.vertices.iter().zip(&r.ph_h.indices) {
            assert_eq!(v.product_value, expected);
        }
    }

    #[test]
    fn index_product_on_paper_shape() {
        let g = generators::random_graph(8, 12, 21).unwrap();
        let h = generators::random_graph(7, 17, 22).unwrap();
        let f = random_coloring(&g, 31).unwrap();
        let k = random_coloring(&h, 32).unwrap();
        let r = verify_index_product(&g, &h, &f, &k).unwrap();
        assert!(r.all_equal);
        assert!(r.ph_g.equal && r.ph_h.equal && r.ph_product.equal);
    }

    #[test]
    fn single_sample_expectation_is_an_index() {
        let g = generators::cycle(5);
        let e = index_expectation(&g, VertexId(0), 1, 9).unwrap();
        let num: i64 = e.estimate.numer().try_into().unwrap();
        let den: i64 = e.estimate.denom().try_into().unwrap();
        assert_eq!(den, 1);
        assert!((-2..=1).contains(&num));
        assert_eq!(e.stderr, 0.0);
    }

    #[test]
    fn expectation_converges_to_curvature() {
        for g in [generators::complete(4), generators::cycle(4)] {
            let e = index_expectation(&g, VertexId(0), 4000, 17).unwrap();
            let exact = crate::curvature::curvature(&g, VertexId(0)).unwrap();
            let diff = rational::to_f64(&(e.estimate.clone() - exact));
            assert!(
                diff.abs() <= 4.0 * e.stderr.max(1e-12),
                "diff {diff} stderr {}",
                e.stderr
            );
        }
    }
}
