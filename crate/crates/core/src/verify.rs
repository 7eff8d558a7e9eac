//! Seeded verification suites. Each suite draws a deterministic corpus,
//! runs one identity check per case, and reports per-case evidence. Cases
//! are independent, so they fan out across a rayon pool; results are
//! collected by case index, which keeps the output identical for any
//! worker count.
//!
//! Identity violations become failed cases. Resource exhaustion and other
//! operational problems surface as errors instead.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::curvature::{self, cylinder_check_on_product};
use crate::generators::{self, uniform_usize};
use crate::graph::{Graph, VertexId};
use crate::homology::{self, GraphEndomorphism};
use crate::morse;
use crate::rational;
use crate::simplicial;
use crate::wu;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    IndexProduct,
    GaussBonnet,
    PoincareHopf,
    Kunneth,
    Lefschetz,
    Cylinder,
    WuProduct,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::IndexProduct => "index-product",
            Suite::GaussBonnet => "gauss-bonnet",
            Suite::PoincareHopf => "poincare-hopf",
            Suite::Kunneth => "kunneth",
            Suite::Lefschetz => "lefschetz",
            Suite::Cylinder => "cylinder",
            Suite::WuProduct => "wu-product",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::all().into_iter().find(|s| s.name() == name)
    }

    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Theorem1,
            Suite::IndexProduct,
            Suite::GaussBonnet,
            Suite::PoincareHopf,
            Suite::Kunneth,
            Suite::Lefschetz,
            Suite::Cylinder,
            Suite::WuProduct,
        ]
    }

    fn default_cases(self) -> usize {
        match self {
            Suite::Theorem1 | Suite::IndexProduct | Suite::Cylinder => 100,
            Suite::GaussBonnet | Suite::PoincareHopf => 100,
            Suite::Kunneth => 30,
            Suite::Lefschetz => 24,
            Suite::WuProduct => 20,
        }
    }

    /// Product spheres of the paper-shaped corpus can approach 2^24
    /// simplices; the counting suites get headroom, the matrix suites
    /// keep the standard guard and small corpora.
    fn default_budget(self) -> u64 {
        match self {
            Suite::Theorem1
            | Suite::IndexProduct
            | Suite::GaussBonnet
            | Suite::PoincareHopf
            | Suite::Cylinder => 100_000_000,
            Suite::Kunneth | Suite::Lefschetz | Suite::WuProduct => Limits::DEFAULT_MAX_SIMPLICES,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyConfig {
    /// Number of random cases; suite default when unset.
    pub cases: Option<usize>,
    pub seed: u64,
    /// Overrides the per-side vertex bound of the random corpora.
    pub max_vertices: Option<u32>,
    /// Overrides the per-side edge bound of the random corpora.
    pub max_edges: Option<u64>,
    /// Overrides the simplex budget.
    pub budget: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub index: usize,
    pub description: String,
    pub passed: bool,
    /// Failure evidence; empty when the case passed.
    pub detail: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub cases: Vec<CaseOutcome>,
    pub passed: bool,
    pub summary: String,
}

impl SuiteReport {
    fn assemble(suite: Suite, seed: u64, cases: Vec<CaseOutcome>) -> SuiteReport {
        let failed = cases.iter().filter(|c| !c.passed).count();
        let passed = failed == 0;
        let summary = if passed {
            format!("{}: PASS ({} cases)", suite.name(), cases.len())
        } else {
            format!(
                "{}: FAIL ({} of {} cases failed)",
                suite.name(),
                failed,
                cases.len()
            )
        };
        SuiteReport {
            suite: suite.name(),
            seed,
            cases,
            passed,
            summary,
        }
    }
}

// stream purposes inside one case
const STREAM_GRAPHS: u64 = 0;
const STREAM_COLORINGS: u64 = 1;
const STREAM_ENDOS: u64 = 2;

fn case_rng(seed: u64, case: usize, purpose: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((case as u64) << 3) | purpose);
    rng
}

#[derive(Debug, Clone, Copy)]
struct Shape {
    max_v: u32,
    max_e: u64,
}

impl Shape {
    fn apply_overrides(self, config: &VerifyConfig) -> Shape {
        Shape {
            max_v: config.max_vertices.unwrap_or(self.max_v),
            max_e: config.max_edges.unwrap_or(self.max_e),
        }
    }
}

fn sample_graph(rng: &mut ChaCha8Rng, shape: Shape) -> Graph {
    let n = 1 + uniform_usize(rng, shape.max_v as usize) as u32;
    let slots = n as u64 * (n as u64 - 1) / 2;
    let max_e = shape.max_e.min(slots);
    let m = uniform_usize(rng, max_e as usize + 1) as u64;
    generators::random_graph_with_rng(n, m, rng).expect("edge bound is respected")
}

fn describe_pair(g: &Graph, h: &Graph) -> String {
    format!(
        "G({}v,{}e) × H({}v,{}e)",
        g.vertex_count(),
        g.edge_count(),
        h.vertex_count(),
        h.edge_count()
    )
}

fn describe_single(g: &Graph) -> String {
    format!("G({}v,{}e)", g.vertex_count(), g.edge_count())
}

/// Runs one suite under the configuration. Identity violations show up in
/// the report; errors (budget, broken inputs) abort.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let cases = config.cases.unwrap_or(suite.default_cases());
    let limits = Limits::new(config.budget.unwrap_or(suite.default_budget()));
    match suite {
        Suite::Theorem1 => run_theorem1(config, cases, &limits),
        Suite::IndexProduct => run_index_product(config, cases, &limits),
        Suite::GaussBonnet => run_gauss_bonnet(config, cases, &limits),
        Suite::PoincareHopf => run_poincare_hopf(config, cases, &limits),
        Suite::Kunneth => run_kunneth(config, cases, &limits),
        Suite::Lefschetz => run_lefschetz(config, cases, &limits),
        Suite::Cylinder => run_cylinder(config, cases, &limits),
        Suite::WuProduct => run_wu_product(config, cases, &limits),
    }
}

/// Every suite, in order; handy for `verify` drivers that want the lot.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    Suite::all()
        .into_iter()
        .map(|s| run_suite(s, config))
        .collect()
}

// ---------------------------------------------------------------------------
// Pair corpora
// ---------------------------------------------------------------------------

const PAPER_SHAPE_G: Shape = Shape { max_v: 8, max_e: 12 };
const PAPER_SHAPE_H: Shape = Shape { max_v: 7, max_e: 17 };

/// The pair corpus mirroring the reference experiment: a few pinned cases
/// first, then seeded random pairs bounded by the paper shapes.
fn product_pair(config: &VerifyConfig, case: usize) -> (Graph, Graph) {
    let mut rng = case_rng(config.seed, case, STREAM_GRAPHS);
    match case {
        0 => (generators::complete(1), generators::star(4)),
        1 => (generators::complete(4), generators::star(4)),
        2 => {
            // the exact experiment shape: 8 vertices/12 edges × 7/17
            let g = generators::random_graph_with_rng(8, 12, &mut rng).unwrap();
            let h = generators::random_graph_with_rng(7, 17, &mut rng).unwrap();
            (g, h)
        }
        _ => {
            let g = sample_graph(&mut rng, PAPER_SHAPE_G.apply_overrides(config));
            let h = sample_graph(&mut rng, PAPER_SHAPE_H.apply_overrides(config));
            (g, h)
        }
    }
}

const NAMED_PAIRS: usize = 3;

fn collect_cases<F>(total: usize, run: F) -> Result<Vec<CaseOutcome>>
where
    F: Fn(usize) -> Result<CaseOutcome> + Sync + Send,
{
    (0..total).into_par_iter().map(run).collect()
}

// ---------------------------------------------------------------------------
// theorem1: K_{G*H}(x,y) = K_G(x)·K_H(y), plus Gauss–Bonnet on the side.
// ---------------------------------------------------------------------------

fn run_theorem1(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let total = NAMED_PAIRS + cases;
    let outcomes = collect_cases(total, |case| {
        let (g, h) = product_pair(config, case);
        let product = g.strong_product(&h);
        let kg = curvature::curvatures_limited(&g, limits)?;
        let kh = curvature::curvatures_limited(&h, limits)?;
        let kp = curvature::curvatures_limited(&product, limits)?;
        let nh = h.vertex_count();
        let mut detail = Vec::new();
        for (i, kx) in kg.values().iter().enumerate() {
            for (j, ky) in kh.values().iter().enumerate() {
                let lhs = &kp.values()[i * nh + j];
                let rhs = kx * ky;
                if *lhs != rhs {
                    detail.push(format!(
                        "K mismatch at {}: product {} vs tensor {}",
                        product.label(VertexId((i * nh + j) as u32)),
                        lhs,
                        rhs
                    ));
                }
            }
        }
        // Gauss–Bonnet must hold on every graph this suite touches
        for (name, graph, map) in [("G", &g, &kg), ("H", &h, &kh), ("G*H", &product, &kp)] {
            let chi = simplicial::euler_characteristic_limited(graph, limits)?;
            if map.total() != rational::from_int(chi) {
                detail.push(format!(
                    "Gauss-Bonnet broken on {name}: sum {} vs chi {chi}",
                    map.total()
                ));
            }
        }
        Ok(CaseOutcome {
            index: case,
            description: describe_pair(&g, &h),
            passed: detail.is_empty(),
            detail,
        })
    })?;
    Ok(SuiteReport::assemble(Suite::Theorem1, config.seed, outcomes))
}

// ---------------------------------------------------------------------------
// index-product: i_{G*H,f⊗k} = i_G ⊗ i_H with Poincaré–Hopf on the side.
// ---------------------------------------------------------------------------

fn run_index_product(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let total = NAMED_PAIRS + cases;
    let outcomes = collect_cases(total, |case| {
        let (g, h) = product_pair(config, case);
        // colliding tensor values force a re-seed; streams keep it deterministic
        let mut report = None;
        for attempt in 0..20u64 {
            let f = morse::random_coloring_stream(&g, config.seed, stream_of(case, attempt, 0))?;
            let k = morse::random_coloring_stream(&h, config.seed, stream_of(case, attempt, 1))?;
            match morse::verify_index_product_limited(&g, &h, &f, &k, limits) {
                Err(Error::TensorCollision(..)) => continue,
                other => {
                    report = Some(other?);
                    break;
                }
            }
        }
        let report = report.ok_or(Error::RetriesExhausted(20))?;
        let mut detail = Vec::new();
        for v in &report.vertices {
            if v.product_value != v.tensor_value {
                detail.push(format!(
                    "index mismatch at {}: product {} vs tensor {}",
                    v.label, v.product_value, v.tensor_value
                ));
            }
        }
        for (name, ph) in [
            ("G", &report.ph_g),
            ("H", &report.ph_h),
            ("G*H", &report.ph_product),
        ] {
            if !ph.equal {
                detail.push(format!(
                    "Poincare-Hopf broken on {name}: sum {} vs chi {}",
                    ph.sum, ph.chi
                ));
            }
        }
        Ok(CaseOutcome {
            index: case,
            description: describe_pair(&g, &h),
            passed: detail.is_empty(),
            detail,
        })
    })?;
    Ok(SuiteReport::assemble(
        Suite::IndexProduct,
        config.seed,
        outcomes,
    ))
}

fn stream_of(case: usize, attempt: u64, side: u64) -> u64 {
    ((case as u64) << 8) | (attempt << 1) | side | (STREAM_COLORINGS << 62)
}

// ---------------------------------------------------------------------------
// gauss-bonnet and poincare-hopf on single graphs
// ---------------------------------------------------------------------------

fn named_graphs() -> Vec<(String, Graph)> {
    vec![
        ("empty".into(), Graph::empty()),
        ("K1".into(), generators::complete(1)),
        ("K4".into(), generators::complete(4)),
        ("C4".into(), generators::cycle(4)),
        ("C5".into(), generators::cycle(5)),
        ("Star(4)".into(), generators::star(4)),
        ("P3".into(), generators::path(3)),
        ("octahedron".into(), generators::octahedron()),
        (
            "K4*Star(4)".into(),
            generators::complete(4).strong_product(&generators::star(4)),
        ),
    ]
}

const SINGLE_SHAPE: Shape = Shape { max_v: 8, max_e: 12 };

fn single_graph(config: &VerifyConfig, case: usize, named: &[(String, Graph)]) -> (String, Graph) {
    if case < named.len() {
        named[case].clone()
    } else {
        let mut rng = case_rng(config.seed, case, STREAM_GRAPHS);
        let g = sample_graph(&mut rng, SINGLE_SHAPE.apply_overrides(config));
        (describe_single(&g), g)
    }
}

fn run_gauss_bonnet(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let named = named_graphs();
    let total = named.len() + cases;
    let outcomes = collect_cases(total, |case| {
        let (name, g) = single_graph(config, case, &named);
        let report = curvature::gauss_bonnet_report_limited(&g, limits)?;
        let detail = if report.equal {
            Vec::new()
        } else {
            vec![format!(
                "curvature sum {} vs chi {}",
                report.sum, report.chi
            )]
        };
        Ok(CaseOutcome {
            index: case,
            description: name,
            passed: report.equal,
            detail,
        })
    })?;
    Ok(SuiteReport::assemble(
        Suite::GaussBonnet,
        config.seed,
        outcomes,
    ))
}

fn run_poincare_hopf(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let named = named_graphs();
    let total = named.len() + cases;
    let outcomes = collect_cases(total, |case| {
        let (name, g) = single_graph(config, case, &named);
        let f = morse::random_coloring_stream(&g, config.seed, (case as u64) << 3)?;
        let report = morse::ph_report_limited(&g, &f, limits)?;
        let mut detail = Vec::new();
        if !report.equal {
            detail.push(format!("index sum {} vs chi {}", report.sum, report.chi));
        }
        // indices see only the order of the coloring
        let ranked = morse::rank_normalize(&f);
        let ranked_report = morse::ph_report_limited(&g, &ranked, limits)?;
        if ranked_report.indices != report.indices {
            detail.push("indices changed under rank normalization".into());
        }
        Ok(CaseOutcome {
            index: case,
            description: name,
            passed: detail.is_empty(),
            detail,
        })
    })?;
    Ok(SuiteReport::assemble(
        Suite::PoincareHopf,
        config.seed,
        outcomes,
    ))
}

// ---------------------------------------------------------------------------
// kunneth: p_{G*H} = p_G · p_H and p(−1) = χ; exact homology needs small
// complexes, so the corpus resamples until the product complex is modest.
// ---------------------------------------------------------------------------

const KUNNETH_SHAPE: Shape = Shape { max_v: 6, max_e: 9 };
const KUNNETH_PRODUCT_CAP: u64 = 700;

fn bounded_pair(
    config: &VerifyConfig,
    case: usize,
    shape_g: Shape,
    shape_h: Shape,
    cap: u64,
) -> Result<(Graph, Graph)> {
    let mut rng = case_rng(config.seed, case, STREAM_GRAPHS);
    let guard = Limits::new(cap);
    for _ in 0..64 {
        let g = sample_graph(&mut rng, shape_g);
        let h = sample_graph(&mut rng, shape_h);
        let product = g.strong_product(&h);
        if simplicial::f_vector_limited(&product, &guard).is_ok() {
            return Ok((g, h));
        }
    }
    Err(Error::RetriesExhausted(64))
}

fn run_kunneth(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let named: Vec<(Graph, Graph)> = vec![
        (generators::complete(1), generators::cycle(5)),
        (generators::cycle(4), generators::cycle(4)),
        (generators::complete(2), generators::star(3)),
    ];
    let total = named.len() + cases;
    let outcomes = collect_cases(total, |case| {
        let (g, h) = if case < named.len() {
            named[case].clone()
        } else {
            let shape = KUNNETH_SHAPE.apply_overrides(config);
            bounded_pair(config, case, shape, shape, KUNNETH_PRODUCT_CAP)?
        };
        let report = homology::verify_kunneth_limited(&g, &h, limits)?;
        let mut detail = Vec::new();
        if !report.equal {
            detail.push(format!(
                "p(G*H) = {} but p(G)·p(H) = {}",
                report.p_product, report.p_expected
            ));
        }
        for (name, graph) in [("G", &g), ("H", &h), ("G*H", &g.strong_product(&h))] {
            let ep = homology::euler_poincare_check_limited(graph, limits)?;
            if !ep.equal {
                detail.push(format!(
                    "Euler-Poincare broken on {name}: p(-1) {} vs chi {}",
                    ep.poincare_at_minus_one, ep.chi
                ));
            }
        }
        Ok(CaseOutcome {
            index: case,
            description: describe_pair(&g, &h),
            passed: detail.is_empty(),
            detail,
        })
    })?;
    Ok(SuiteReport::assemble(Suite::Kunneth, config.seed, outcomes))
}

// ---------------------------------------------------------------------------
// lefschetz: chain super trace vs fixed-simplex sum, identity gives χ,
// and multiplicativity on product endomorphisms.
// ---------------------------------------------------------------------------

const LEFSCHETZ_SHAPE: Shape = Shape { max_v: 5, max_e: 6 };
const LEFSCHETZ_PAIR_SHAPE_G: Shape = Shape { max_v: 4, max_e: 4 };
const LEFSCHETZ_PAIR_SHAPE_H: Shape = Shape { max_v: 3, max_e: 3 };
const LEFSCHETZ_PRODUCT_CAP: u64 = 4000;

/// Draws an adjacency-compatible endomorphism: rejection sampling over
/// uniform vertex maps with a constant-map fallback.
fn random_endomorphism(g: &Graph, rng: &mut ChaCha8Rng) -> GraphEndomorphism {
    let n = g.vertex_count();
    if n == 0 {
        return GraphEndomorphism::identity(g);
    }
    for _ in 0..60 {
        let map: Vec<u32> = (0..n).map(|_| uniform_usize(rng, n) as u32).collect();
        if let Ok(t) = GraphEndomorphism::new(g, map) {
            return t;
        }
    }
    let target = VertexId(uniform_usize(rng, n) as u32);
    GraphEndomorphism::constant(g, target).expect("constant maps are always endomorphisms")
}

fn run_lefschetz(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    // pinned single cases: (graph, endomorphism, expected L) with None
    // meaning "whatever the fixed-point sum says"
    let c4 = generators::cycle(4);
    let p3 = generators::path(3);
    let k4 = generators::complete(4);
    let named: Vec<(String, Graph, GraphEndomorphism, Option<i64>)> = vec![
        (
            "C4 rotation".into(),
            c4.clone(),
            GraphEndomorphism::new(&c4, vec![1, 2, 3, 0]).unwrap(),
            Some(0),
        ),
        (
            "C4 identity".into(),
            c4.clone(),
            GraphEndomorphism::identity(&c4),
            Some(0),
        ),
        (
            "P3 swap".into(),
            p3.clone(),
            GraphEndomorphism::new(&p3, vec![2, 1, 0]).unwrap(),
            Some(1),
        ),
        (
            "K4 3-cycle".into(),
            k4.clone(),
            GraphEndomorphism::new(&k4, vec![1, 2, 0, 3]).unwrap(),
            Some(1),
        ),
        (
            "K4 constant".into(),
            k4.clone(),
            GraphEndomorphism::constant(&k4, VertexId(2)).unwrap(),
            Some(1),
        ),
        (
            "octahedron identity".into(),
            generators::octahedron(),
            GraphEndomorphism::identity(&generators::octahedron()),
            Some(2),
        ),
    ];
    // every fourth random case exercises a product pair
    let total = named.len() + cases;
    let outcomes = collect_cases(total, |case| {
        if case < named.len() {
            let (name, g, t, expected) = &named[case];
            let mut detail = check_lefschetz_single(g, t, *expected, limits)?;
            if case == 1 || case == 5 {
                // identity endomorphism must reproduce χ
                let chi = simplicial::euler_characteristic_limited(g, limits)?;
                let l = homology::lefschetz_number_limited(g, t, limits)?;
                if l != chi {
                    detail.push(format!("identity Lefschetz {l} vs chi {chi}"));
                }
            }
            return Ok(CaseOutcome {
                index: case,
                description: name.clone(),
                passed: detail.is_empty(),
                detail,
            });
        }
        let mut endo_rng = case_rng(config.seed, case, STREAM_ENDOS);
        if (case - named.len()) % 4 == 3 {
            // product case
            let (g, h) = bounded_pair(
                config,
                case,
                LEFSCHETZ_PAIR_SHAPE_G.apply_overrides(config),
                LEFSCHETZ_PAIR_SHAPE_H.apply_overrides(config),
                LEFSCHETZ_PRODUCT_CAP,
            )?;
            let t = random_endomorphism(&g, &mut endo_rng);
            let s = random_endomorphism(&h, &mut endo_rng);
            let report = homology::verify_lefschetz_product(&g, &h, &t, &s, limits)?;
            let mut detail = Vec::new();
            if !report.sides_agree() {
                detail.push(format!(
                    "chain traces vs fixed sums: ({},{},{}) vs ({},{},{})",
                    report.l_g,
                    report.l_h,
                    report.l_product,
                    report.fixed_g,
                    report.fixed_h,
                    report.fixed_product
                ));
            }
            if !report.multiplicative() {
                detail.push(format!(
                    "L(G*H) = {} but L(G)·L(H) = {}·{}",
                    report.l_product, report.l_g, report.l_h
                ));
            }
            Ok(CaseOutcome {
                index: case,
                description: format!("product {}", describe_pair(&g, &h)),
                passed: detail.is_empty(),
                detail,
            })
        } else {
            let mut rng = case_rng(config.seed, case, STREAM_GRAPHS);
            let g = sample_graph(&mut rng, LEFSCHETZ_SHAPE.apply_overrides(config));
            let t = random_endomorphism(&g, &mut endo_rng);
            let detail = check_lefschetz_single(&g, &t, None, limits)?;
            Ok(CaseOutcome {
                index: case,
                description: format!("{} with random endomorphism", describe_single(&g)),
                passed: detail.is_empty(),
                detail,
            })
        }
    })?;
    Ok(SuiteReport::assemble(
        Suite::Lefschetz,
        config.seed,
        outcomes,
    ))
}

fn check_lefschetz_single(
    g: &Graph,
    t: &GraphEndomorphism,
    expected: Option<i64>,
    limits: &Limits,
) -> Result<Vec<String>> {
    let l = homology::lefschetz_number_limited(g, t, limits)?;
    let fixed = homology::fixed_simplex_index_sum_limited(g, t, limits)?;
    let mut detail = Vec::new();
    if l != fixed {
        detail.push(format!("super trace {l} vs fixed-simplex sum {fixed}"));
    }
    if let Some(e) = expected {
        if l != e {
            detail.push(format!("Lefschetz number {l}, expected {e}"));
        }
    }
    Ok(detail)
}

// ---------------------------------------------------------------------------
// cylinder: the sphere decomposition identities at every product vertex,
// the sphere-join χ comparison on the same corpus, and full Betti
// comparisons on a smaller corpus where exact homology is comfortable.
// ---------------------------------------------------------------------------

const BETTI_CASES: usize = 10;
const BETTI_SHAPE_G: Shape = Shape { max_v: 5, max_e: 6 };
const BETTI_SHAPE_H: Shape = Shape { max_v: 4, max_e: 4 };
const BETTI_PRODUCT_CAP: u64 = 2500;

fn run_cylinder(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let set_cases = NAMED_PAIRS + cases;
    let total = set_cases + 1 + BETTI_CASES;
    let outcomes = collect_cases(total, |case| {
        if case < set_cases {
            // vertex-set identities plus the χ half of the join comparison
            let (g, h) = product_pair(config, case);
            let product = g.strong_product(&h);
            let adj = product.bit_adjacency();
            let nh = h.vertex_count();
            let mut detail = Vec::new();
            let sphere_chis: Vec<i64> = h
                .vertices()
                .map(|y| {
                    let sy = h.unit_sphere(y)?;
                    simplicial::euler_characteristic_limited(&sy, limits)
                })
                .collect::<Result<_>>()?;
            for x in g.vertices() {
                let sx = g.unit_sphere(x)?;
                let chi_sx = simplicial::euler_characteristic_limited(&sx, limits)?;
                for y in h.vertices() {
                    let r = cylinder_check_on_product(&g, &h, &product, x, y)?;
                    if !r.holds() {
                        detail.push(format!(
                            "cylinder identity fails at ({},{})",
                            g.label(x),
                            h.label(y)
                        ));
                    }
                    // χ(S(x,y)) must equal χ(S(x) ⊕ S(y)) = χ_sx + χ_sy − χ_sx·χ_sy
                    let chi_sphere = curvature::product_sphere_chi(
                        &product,
                        &adj,
                        x.index(),
                        y.index(),
                        nh,
                        limits,
                    )?;
                    let chi_sy = sphere_chis[y.index()];
                    let chi_join = chi_sx + chi_sy - chi_sx * chi_sy;
                    if chi_sphere != chi_join {
                        detail.push(format!(
                            "sphere chi {} vs join chi {} at ({},{})",
                            chi_sphere,
                            chi_join,
                            g.label(x),
                            h.label(y)
                        ));
                    }
                }
            }
            Ok(CaseOutcome {
                index: case,
                description: describe_pair(&g, &h),
                passed: detail.is_empty(),
                detail,
            })
        } else {
            // Betti half on a small corpus; homotopy equivalence is read
            // through χ and the full Betti vector
            let betti_limits = Limits::default();
            let (g, h) = if case == set_cases {
                (generators::cycle(4), generators::complete(2))
            } else {
                bounded_pair(
                    config,
                    case,
                    BETTI_SHAPE_G.apply_overrides(config),
                    BETTI_SHAPE_H.apply_overrides(config),
                    BETTI_PRODUCT_CAP,
                )?
            };
            let mut detail = Vec::new();
            for x in g.vertices() {
                for y in h.vertices() {
                    let r = curvature::sphere_join_homotopy_check(&g, &h, x, y, &betti_limits)?;
                    if !r.holds() {
                        detail.push(format!(
                            "at ({},{}): sphere chi {} betti {} vs join chi {} betti {}",
                            g.label(x),
                            h.label(y),
                            r.chi_sphere,
                            r.betti_sphere,
                            r.chi_join,
                            r.betti_join
                        ));
                    }
                }
            }
            Ok(CaseOutcome {
                index: case,
                description: format!("betti {}", describe_pair(&g, &h)),
                passed: detail.is_empty(),
                detail,
            })
        }
    })?;
    Ok(SuiteReport::assemble(Suite::Cylinder, config.seed, outcomes))
}

// ---------------------------------------------------------------------------
// wu-product: conservation everywhere, K_n values, and the survey that
// must find a pointwise counterexample somewhere in the corpus.
// ---------------------------------------------------------------------------

const WU_SHAPE: Shape = Shape { max_v: 4, max_e: 4 };

fn run_wu_product(config: &VerifyConfig, cases: usize, limits: &Limits) -> Result<SuiteReport> {
    let named: Vec<(Graph, Graph)> = vec![
        (generators::complete(1), generators::complete(1)),
        (generators::complete(2), generators::star(2)),
        (generators::complete(2), generators::complete(2)),
        (generators::path(3), generators::complete(2)),
    ];
    let kn_cases = 5usize;
    let total = kn_cases + named.len() + cases;
    let results: Vec<(CaseOutcome, usize)> = (0..total)
        .into_par_iter()
        .map(|case| -> Result<(CaseOutcome, usize)> {
            if case < kn_cases {
                // ω(K_n) = (−1)^{n−1}, with conservation
                let n = case as u32 + 1;
                let g = generators::complete(n);
                let report = wu::wu_curvatures_limited(&g, limits)?;
                let expected = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
                let mut detail = Vec::new();
                if report.wu != expected {
                    detail.push(format!("wu(K{n}) = {}, expected {expected}", report.wu));
                }
                if !report.sum_equals_wu {
                    detail.push(format!("wu curvatures of K{n} do not sum to wu"));
                }
                return Ok((
                    CaseOutcome {
                        index: case,
                        description: format!("K{n}"),
                        passed: detail.is_empty(),
                        detail,
                    },
                    0,
                ));
            }
            let (g, h) = if case - kn_cases < named.len() {
                named[case - kn_cases].clone()
            } else {
                let shape = WU_SHAPE.apply_overrides(config);
                let mut rng = case_rng(config.seed, case, STREAM_GRAPHS);
                (sample_graph(&mut rng, shape), sample_graph(&mut rng, shape))
            };
            let survey = wu::wu_product_survey_limited(&g, &h, limits)?;
            let mut detail = Vec::new();
            // conservation on both factors and the product
            for (name, graph) in [("G", &g), ("H", &h), ("G*H", &g.strong_product(&h))] {
                let r = wu::wu_curvatures_limited(graph, limits)?;
                if !r.sum_equals_wu {
                    detail.push(format!("wu conservation broken on {name}"));
                }
            }
            let witnesses = survey.mismatches.len();
            let outcome = CaseOutcome {
                index: case,
                description: format!(
                    "{} [wu {}·{} vs {}; {} pointwise mismatches]",
                    describe_pair(&g, &h),
                    survey.wu_g,
                    survey.wu_h,
                    survey.wu_product,
                    witnesses
                ),
                passed: detail.is_empty(),
                detail,
            };
            Ok((outcome, witnesses))
        })
        .collect::<Result<_>>()?;

    let witnesses: usize = results.iter().map(|(_, w)| w).sum();
    let mut outcomes: Vec<CaseOutcome> = results.into_iter().map(|(c, _)| c).collect();
    // the paper asserts the pointwise product formula fails; a corpus with
    // no witness at all would contradict that and must fail the suite
    outcomes.push(CaseOutcome {
        index: outcomes.len(),
        description: format!("survey recorded {witnesses} pointwise counterexamples"),
        passed: witnesses > 0,
        detail: if witnesses > 0 {
            Vec::new()
        } else {
            vec!["no pointwise Wu-curvature counterexample found anywhere in the corpus".into()]
        },
    });
    Ok(SuiteReport::assemble(
        Suite::WuProduct,
        config.seed,
        outcomes,
    ))
}
