//! Document assembly and the three output formats. Plain is for people,
//! json is one object per command (one per suite for `verify all`), csv is
//! flat `section,term,key,value` rows for eval and per-case rows for
//! verify. Every rational is rendered `p/q` in lowest terms (`p` when the
//! denominator is one); the only floating point anywhere is the labeled
//! Monte-Carlo stderr column.

use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{json, Value};

use whitney::morse;
use whitney::rational::{self, Rational};
use whitney::ring::{self, RingElement};
use whitney::verify::SuiteReport;
use whitney::{Error, Graph, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

pub struct EvalRequest {
    pub expression: String,
    pub fvector: bool,
    pub chi: bool,
    pub curvature: bool,
    pub betti: bool,
    pub wu: bool,
    pub indices: bool,
    pub lefschetz_endo: Option<PathBuf>,
    pub seed: u64,
}

pub struct TermDoc {
    pub coefficient: i64,
    pub vertices: usize,
    pub edges: usize,
    pub graph_json: Value,
}

pub struct PerVertex<T> {
    pub term: usize,
    pub vertex: String,
    pub value: T,
}

pub struct IndicesDoc {
    pub rows: Vec<PerVertex<i64>>,
    pub total: i64,
    pub extended_chi: i64,
}

pub struct LefschetzDoc {
    pub lefschetz: i64,
    pub fixed_sum: i64,
    pub equal: bool,
}

pub struct EvalDocument {
    pub expression: String,
    pub seed: u64,
    pub terms: Vec<TermDoc>,
    pub fvector: Option<Vec<i64>>,
    pub chi: Option<i64>,
    pub curvature: Option<Vec<PerVertex<Rational>>>,
    pub betti: Option<Vec<i64>>,
    pub wu: Option<i64>,
    pub indices: Option<IndicesDoc>,
    pub lefschetz: Option<LefschetzDoc>,
}

pub fn eval_document(
    element: &RingElement,
    req: &EvalRequest,
    limits: &Limits,
) -> Result<EvalDocument> {
    let terms: Vec<TermDoc> = element
        .terms()
        .iter()
        .map(|(c, g)| TermDoc {
            coefficient: *c,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            graph_json: serde_json::from_str(&whitney::io::graph_to_json(g))
                .expect("graph json is valid"),
        })
        .collect();

    let fvector = if req.fvector {
        let mut acc: Vec<i64> = Vec::new();
        for (c, g) in element.terms() {
            let fv = whitney::simplicial::f_vector_limited(g, limits)?;
            if acc.len() < fv.counts().len() {
                acc.resize(fv.counts().len(), 0);
            }
            for (k, &f) in fv.counts().iter().enumerate() {
                acc[k] += c * f as i64;
            }
        }
        while acc.last() == Some(&0) {
            acc.pop();
        }
        Some(acc)
    } else {
        None
    };

    let chi = if req.chi {
        Some(ring::extended_chi(element, limits)?)
    } else {
        None
    };

    let curvature = if req.curvature {
        let mut rows = Vec::new();
        for (t, (c, g)) in element.terms().iter().enumerate() {
            let map = whitney::curvature::curvatures_limited(g, limits)?;
            for v in g.vertices() {
                rows.push(PerVertex {
                    term: t,
                    vertex: g.label(v).to_string(),
                    value: rational::from_int(*c) * map.get(v),
                });
            }
        }
        Some(rows)
    } else {
        None
    };

    let betti = if req.betti {
        Some(
            ring::extended_poincare(element, limits)?
                .coefficients()
                .to_vec(),
        )
    } else {
        None
    };

    let wu = if req.wu {
        Some(ring::extended_wu(element, limits)?)
    } else {
        None
    };

    let indices = if req.indices {
        let mut rows = Vec::new();
        let mut total = 0i64;
        for (t, (c, g)) in element.terms().iter().enumerate() {
            let f = morse::random_coloring_stream(g, req.seed, t as u64)?;
            let report = morse::ph_report_limited(g, &f, limits)?;
            for (v, &idx) in g.vertices().zip(&report.indices) {
                rows.push(PerVertex {
                    term: t,
                    vertex: g.label(v).to_string(),
                    value: c * idx,
                });
                total += c * idx;
            }
        }
        Some(IndicesDoc {
            rows,
            total,
            extended_chi: ring::extended_chi(element, limits)?,
        })
    } else {
        None
    };

    let lefschetz = match &req.lefschetz_endo {
        Some(path) => {
            let g = element.as_single_graph().ok_or_else(|| {
                Error::InvalidGraph(
                    "--lefschetz-endo needs an expression evaluating to a single graph".into(),
                )
            })?;
            let text = std::fs::read_to_string(path)?;
            let t = whitney::io::endomorphism_from_json(g, &text)?;
            let l = whitney::homology::lefschetz_number_limited(g, &t, limits)?;
            let fixed = whitney::homology::fixed_simplex_index_sum_limited(g, &t, limits)?;
            Some(LefschetzDoc {
                lefschetz: l,
                fixed_sum: fixed,
                equal: l == fixed,
            })
        }
        None => None,
    };

    Ok(EvalDocument {
        expression: req.expression.clone(),
        seed: req.seed,
        terms,
        fvector,
        chi,
        curvature,
        betti,
        wu,
        indices,
        lefschetz,
    })
}

fn tuple(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

pub fn render_eval(doc: &EvalDocument, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            out.push_str(&format!("expression: {}\n", doc.expression));
            for (i, t) in doc.terms.iter().enumerate() {
                out.push_str(&format!(
                    "term {i}: {}{} · graph({}v,{}e)\n",
                    if t.coefficient < 0 { "-" } else { "+" },
                    t.coefficient.abs(),
                    t.vertices,
                    t.edges
                ));
            }
            if doc.terms.is_empty() {
                out.push_str("zero element\n");
            }
            if let Some(fv) = &doc.fvector {
                out.push_str(&format!("fvector: {}\n", tuple(fv)));
            }
            if let Some(chi) = doc.chi {
                out.push_str(&format!("chi: {chi}\n"));
            }
            if let Some(rows) = &doc.curvature {
                for r in rows {
                    out.push_str(&format!(
                        "curvature[term {}] K({}) = {}\n",
                        r.term, r.vertex, r.value
                    ));
                }
            }
            if let Some(b) = &doc.betti {
                out.push_str(&format!("betti: {}\n", tuple(b)));
            }
            if let Some(wu) = doc.wu {
                out.push_str(&format!("wu: {wu}\n"));
            }
            if let Some(idx) = &doc.indices {
                for r in &idx.rows {
                    out.push_str(&format!(
                        "index[term {}] i({}) = {}\n",
                        r.term, r.vertex, r.value
                    ));
                }
                out.push_str(&format!(
                    "index sum: {} (chi {})\n",
                    idx.total, idx.extended_chi
                ));
            }
            if let Some(l) = &doc.lefschetz {
                out.push_str(&format!(
                    "lefschetz: {} fixed-simplex sum: {} equal: {}\n",
                    l.lefschetz, l.fixed_sum, l.equal
                ));
            }
            out
        }
        Format::Json => {
            let mut obj = json!({
                "command": "eval",
                "expression": doc.expression,
                "terms": doc.terms.iter().map(|t| json!({
                    "coefficient": t.coefficient,
                    "graph": t.graph_json,
                })).collect::<Vec<_>>(),
            });
            let map = obj.as_object_mut().unwrap();
            if let Some(fv) = &doc.fvector {
                map.insert("fvector".into(), json!(fv));
            }
            if let Some(chi) = doc.chi {
                map.insert("chi".into(), json!(chi));
            }
            if let Some(rows) = &doc.curvature {
                map.insert(
                    "curvature".into(),
                    json!(rows
                        .iter()
                        .map(|r| json!({
                            "term": r.term,
                            "vertex": r.vertex,
                            "value": r.value.to_string(),
                        }))
                        .collect::<Vec<_>>()),
                );
            }
            if let Some(b) = &doc.betti {
                map.insert("betti".into(), json!(b));
            }
            if let Some(wu) = doc.wu {
                map.insert("wu".into(), json!(wu));
            }
            if let Some(idx) = &doc.indices {
                map.insert(
                    "indices".into(),
                    json!({
                        "seed": doc.seed,
                        "rows": idx.rows.iter().map(|r| json!({
                            "term": r.term,
                            "vertex": r.vertex,
                            "value": r.value,
                        })).collect::<Vec<_>>(),
                        "sum": idx.total,
                        "chi": idx.extended_chi,
                    }),
                );
            }
            if let Some(l) = &doc.lefschetz {
                map.insert(
                    "lefschetz".into(),
                    json!({
                        "super_trace": l.lefschetz,
                        "fixed_simplex_sum": l.fixed_sum,
                        "equal": l.equal,
                    }),
                );
            }
            format!("{obj}\n")
        }
        Format::Csv => {
            let mut out = String::from("section,term,key,value\n");
            for (i, t) in doc.terms.iter().enumerate() {
                out.push_str(&csv_row(&[
                    "term",
                    &i.to_string(),
                    "coefficient",
                    &t.coefficient.to_string(),
                ]));
                out.push_str(&csv_row(&[
                    "term",
                    &i.to_string(),
                    "size",
                    &format!("{}v {}e", t.vertices, t.edges),
                ]));
            }
            if let Some(fv) = &doc.fvector {
                for (k, c) in fv.iter().enumerate() {
                    out.push_str(&csv_row(&["fvector", "", &k.to_string(), &c.to_string()]));
                }
            }
            if let Some(chi) = doc.chi {
                out.push_str(&csv_row(&["chi", "", "", &chi.to_string()]));
            }
            if let Some(rows) = &doc.curvature {
                for r in rows {
                    out.push_str(&csv_row(&[
                        "curvature",
                        &r.term.to_string(),
                        &r.vertex,
                        &r.value.to_string(),
                    ]));
                }
            }
            if let Some(b) = &doc.betti {
                for (k, c) in b.iter().enumerate() {
                    out.push_str(&csv_row(&["betti", "", &k.to_string(), &c.to_string()]));
                }
            }
            if let Some(wu) = doc.wu {
                out.push_str(&csv_row(&["wu", "", "", &wu.to_string()]));
            }
            if let Some(idx) = &doc.indices {
                for r in &idx.rows {
                    out.push_str(&csv_row(&[
                        "index",
                        &r.term.to_string(),
                        &r.vertex,
                        &r.value.to_string(),
                    ]));
                }
                out.push_str(&csv_row(&["index", "", "sum", &idx.total.to_string()]));
                out.push_str(&csv_row(&[
                    "index",
                    "",
                    "chi",
                    &idx.extended_chi.to_string(),
                ]));
            }
            if let Some(l) = &doc.lefschetz {
                out.push_str(&csv_row(&[
                    "lefschetz",
                    "",
                    "super_trace",
                    &l.lefschetz.to_string(),
                ]));
                out.push_str(&csv_row(&[
                    "lefschetz",
                    "",
                    "fixed_simplex_sum",
                    &l.fixed_sum.to_string(),
                ]));
            }
            out
        }
    }
}

pub fn render_suite(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = format!(
                "suite {} seed={} cases={}\n",
                report.suite,
                report.seed,
                report.cases.len()
            );
            for c in &report.cases {
                out.push_str(&format!(
                    "case {} [{}] {}\n",
                    c.index,
                    if c.passed { "pass" } else { "FAIL" },
                    c.description
                ));
                for d in &c.detail {
                    out.push_str(&format!("    {d}\n"));
                }
            }
            out.push_str(&format!("{}\n", report.summary));
            out
        }
        Format::Json => {
            let obj = json!({
                "command": "verify",
                "suite": report.suite,
                "seed": report.seed,
                "cases": report.cases.iter().map(|c| json!({
                    "index": c.index,
                    "description": c.description,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
                "passed": report.passed,
                "summary": report.summary,
            });
            format!("{obj}\n")
        }
        Format::Csv => {
            let mut out = String::from("suite,case,passed,description,detail\n");
            for c in &report.cases {
                out.push_str(&csv_row(&[
                    report.suite,
                    &c.index.to_string(),
                    &c.passed.to_string(),
                    &c.description,
                    &c.detail.join("; "),
                ]));
            }
            out.push_str(&csv_row(&[
                report.suite,
                "summary",
                &report.passed.to_string(),
                &report.summary,
                "",
            ]));
            out
        }
    }
}

pub struct ExpectationRow {
    pub vertex: String,
    pub estimate: Rational,
    pub stderr: f64,
    pub curvature: Rational,
}

pub struct ExpectationDocument {
    pub expression: String,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<ExpectationRow>,
}

pub fn expectation_document(
    g: &Graph,
    expression: String,
    samples: u64,
    seed: u64,
    limits: &Limits,
) -> Result<ExpectationDocument> {
    let curvatures = whitney::curvature::curvatures_limited(g, limits)?;
    let mut rows = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let e = morse::index_expectation_limited(g, v, samples, seed, limits)?;
        rows.push(ExpectationRow {
            vertex: g.label(v).to_string(),
            estimate: e.estimate,
            stderr: e.stderr,
            curvature: curvatures.get(v).clone(),
        });
    }
    Ok(ExpectationDocument {
        expression,
        samples,
        seed,
        rows,
    })
}

pub fn render_expectation(doc: &ExpectationDocument, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = format!(
                "expression: {} samples={} seed={}\n",
                doc.expression, doc.samples, doc.seed
            );
            for r in &doc.rows {
                out.push_str(&format!(
                    "vertex {}: estimate {} (stderr {:.6}), curvature {}\n",
                    r.vertex, r.estimate, r.stderr, r.curvature
                ));
            }
            out
        }
        Format::Json => {
            let obj = json!({
                "command": "expectation",
                "expression": doc.expression,
                "samples": doc.samples,
                "seed": doc.seed,
                "vertices": doc.rows.iter().map(|r| json!({
                    "vertex": r.vertex,
                    "estimate": r.estimate.to_string(),
                    "stderr": r.stderr,
                    "curvature": r.curvature.to_string(),
                })).collect::<Vec<_>>(),
            });
            format!("{obj}\n")
        }
        Format::Csv => {
            let mut out = String::from("vertex,estimate,stderr,curvature\n");
            for r in &doc.rows {
                out.push_str(&csv_row(&[
                    &r.vertex,
                    &r.estimate.to_string(),
                    &format!("{:.6}", r.stderr),
                    &r.curvature.to_string(),
                ]));
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[&str]) -> String {
    let quoted: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    format!("{}\n", quoted.join(","))
}
