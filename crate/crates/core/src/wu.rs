//! Wu characteristic ω(G) = Σ_{σ∼τ} ω(σ)ω(τ) over ordered pairs of
//! intersecting simplices, together with a local Wu curvature and the
//! strong-product survey that exhibits its failure to multiply.
//!
//! The characteristic itself is computed through the complement identity
//! Σ_{τ: τ∩σ≠∅} ω(τ) = χ(G) − χ(G − V(σ)), so the conservation check
//! against the pair-loop curvature below crosses two genuinely different
//! routes. The pointwise curvature distributes each pair term equally
//! over the vertices of σ∪τ; any rule that sums back to ω(G) would do,
//! and this one mirrors the Euler handshake used for χ.

use crate::graph::{Graph, VertexId};
use crate::rational::{self, Rational};
use crate::simplicial::{euler_within, simplices_within};
use crate::vset::VSet;
use crate::{Error, Limits, Result};

/// ω(G), its pointwise curvatures, and the conservation evidence.
#[derive(Debug, Clone)]
pub struct WuReport {
    pub wu: i64,
    pub curvatures: Vec<Rational>,
    pub sum_equals_wu: bool,
}

fn omega_of_size(size: usize) -> i64 {
    if (size - 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// ω(G) via the complement identity, one induced-χ computation per simplex.
pub fn wu_characteristic(g: &Graph) -> Result<i64> {
    wu_characteristic_limited(g, &Limits::default())
}

pub fn wu_characteristic_limited(g: &Graph, limits: &Limits) -> Result<i64> {
    let n = g.vertex_count();
    let adj = g.bit_adjacency();
    let universe = VSet::full(n);
    let chi = euler_within(&adj, &universe, limits)?;
    let graded = simplices_within(&adj, &universe, limits)?;
    let mut total = 0i64;
    for (k, level) in graded.iter().enumerate() {
        let omega = omega_of_size(k + 1);
        for simplex in level {
            let complement = universe.difference(simplex);
            total += omega * (chi - euler_within(&adj, &complement, limits)?);
        }
    }
    Ok(total)
}

/// Pointwise Wu curvature at every vertex via the ordered pair loop. The
/// budget guards the quadratic pair count.
pub fn wu_curvatures(g: &Graph) -> Result<WuReport> {
    wu_curvatures_limited(g, &Limits::default())
}

pub fn wu_curvatures_limited(g: &Graph, limits: &Limits) -> Result<WuReport> {
    let n = g.vertex_count();
    let adj = g.bit_adjacency();
    let universe = VSet::full(n);
    let graded = simplices_within(&adj, &universe, limits)?;
    let simplices: Vec<(&VSet, i64)> = graded
        .iter()
        .enumerate()
        .flat_map(|(k, level)| {
            let omega = omega_of_size(k + 1);
            level.iter().map(move |s| (s, omega))
        })
        .collect();

    // accumulate numerators per (vertex, |σ∪τ|); the denominators are
    // bounded by n so exact summation happens once at the end
    let mut buckets = vec![vec![0i64; n + 1]; n];
    let mut pairs = 0u64;
    for &(sigma, w_sigma) in &simplices {
        for &(tau, w_tau) in &simplices {
            pairs += 1;
            if pairs > limits.max_simplices {
                return Err(Error::Budget {
                    limit: limits.max_simplices,
                });
            }
            if !sigma.intersects(tau) {
                continue;
            }
            let union = sigma.union(tau);
            let size = union.len();
            let w = w_sigma * w_tau;
            for v in union.iter() {
                buckets[v][size] += w;
            }
        }
    }

    let curvatures: Vec<Rational> = buckets
        .iter()
        .map(|per_size| {
            per_size
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &num)| num != 0)
                .fold(rational::zero(), |acc, (size, &num)| {
                    acc + Rational::new(num.into(), (size as i64).into())
                })
        })
        .collect();

    let wu = wu_characteristic_limited(g, limits)?;
    let sum = curvatures.iter().fold(rational::zero(), |a, b| a + b);
    let sum_equals_wu = sum == rational::from_int(wu);
    Ok(WuReport {
        wu,
        curvatures,
        sum_equals_wu,
    })
}

/// Wu curvature of a single vertex.
pub fn wu_curvature(g: &Graph, x: VertexId) -> Result<Rational> {
    g.check_vertex(x)?;
    Ok(wu_curvatures(g)?.curvatures[x.index()].clone())
}

/// One product vertex where the Wu curvatures disagree with the tensor
/// product of the factor curvatures.
#[derive(Debug, Clone)]
pub struct WuMismatch {
    pub index: usize,
    pub label: String,
    pub product_value: Rational,
    pub tensor_value: Rational,
}

/// The survey: pointwise comparison of K_ω on G*H against K_ω(x)·K_ω(y),
/// plus whether ω itself happened to multiply. Nothing here is asserted;
/// the expected finding is a nonempty mismatch list.
#[derive(Debug, Clone)]
pub struct WuSurvey {
    pub wu_g: i64,
    pub wu_h: i64,
    pub wu_product: i64,
    pub characteristic_multiplicative: bool,
    pub mismatches: Vec<WuMismatch>,
    pub vertices_checked: usize,
}

pub fn wu_product_survey(g: &Graph, h: &Graph) -> Result<WuSurvey> {
    wu_product_survey_limited(g, h, &Limits::default())
}

pub fn wu_product_survey_limited(g: &Graph, h: &Graph, limits: &Limits) -> Result<WuSurvey> {
    let product = g.strong_product(h);
    let report_g = wu_curvatures_limited(g, limits)?;
    let report_h = wu_curvatures_limited(h, limits)?;
    let report_p = wu_curvatures_limited(&product, limits)?;
    let nh = h.vertex_count();
    let mut mismatches = Vec::new();
    for (i, kx) in report_g.curvatures.iter().enumerate() {
        for (j, ky) in report_h.curvatures.iter().enumerate() {
            let index = i * nh + j;
            let tensor = kx * ky;
            if report_p.curvatures[index] != tensor {
                mismatches.push(WuMismatch {
                    index,
                    label: product.label(VertexId(index as u32)).to_string(),
                    product_value: report_p.curvatures[index].clone(),
                    tensor_value: tensor,
                });
            }
        }
    }
    Ok(WuSurvey {
        wu_g: report_g.wu,
        wu_h: report_h.wu,
        wu_product: report_p.wu,
        characteristic_multiplicative: report_p.wu == report_g.wu * report_h.wu,
        mismatches,
        vertices_checked: product.vertex_count(),
    })
}
