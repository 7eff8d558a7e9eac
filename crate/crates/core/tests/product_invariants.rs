//! Structural invariants of the graph constructions on seeded random
//! inputs: the strong product commutes and associates up to the canonical
//! pair bijection, vertex counts multiply, and join edge counts follow the
//! inclusion formula.

use whitney::generators::random_graph;
use whitney::graph::VertexId;
use whitney::Graph;

fn random_small(seed: u64) -> Graph {
    let n = 1 + (seed % 5) as u32;
    let max_e = n as u64 * (n as u64 - 1) / 2;
    random_graph(n, (seed * 7) % (max_e + 1), seed).unwrap()
}

/// Edge set as index pairs.
fn edge_indices(g: &Graph) -> Vec<(u32, u32)> {
    g.edges().iter().map(|&(a, b)| (a.0, b.0)).collect()
}

#[test]
fn strong_product_commutes_up_to_pair_swap() {
    for seed in 0..25u64 {
        let g = random_small(seed);
        let h = random_small(seed + 100);
        let gh = g.strong_product(&h);
        let hg = h.strong_product(&g);
        let (ng, nh) = (g.vertex_count(), h.vertex_count());
        // (a,b) at a·nh+b in g*h corresponds to (b,a) at b·ng+a in h*g
        let swap = |idx: usize| -> usize {
            let (a, b) = (idx / nh, idx % nh);
            b * ng + a
        };
        assert_eq!(gh.vertex_count(), hg.vertex_count());
        for u in 0..gh.vertex_count() {
            for v in u + 1..gh.vertex_count() {
                let lhs = gh.has_edge(VertexId(u as u32), VertexId(v as u32));
                let rhs = hg.has_edge(
                    VertexId(swap(u) as u32),
                    VertexId(swap(v) as u32),
                );
                assert_eq!(lhs, rhs, "seed {seed}, pair ({u},{v})");
            }
        }
    }
}

#[test]
fn strong_product_associates_positionally() {
    // ((a,b),c) at (a·nh+b)·nk+c and (a,(b,c)) at a·(nh·nk)+(b·nk+c) are
    // the same index, so associativity is plain edge-set equality
    for seed in 0..15u64 {
        let g = random_small(seed);
        let h = random_small(seed + 40);
        let k = random_small(seed + 80);
        let left = g.strong_product(&h).strong_product(&k);
        let right = g.strong_product(&h.strong_product(&k));
        assert_eq!(left.vertex_count(), right.vertex_count());
        assert_eq!(edge_indices(&left), edge_indices(&right), "seed {seed}");
    }
}

#[test]
fn product_vertex_count_multiplies() {
    for seed in 0..25u64 {
        let g = random_small(seed);
        let h = random_small(seed + 7);
        assert_eq!(
            g.strong_product(&h).vertex_count(),
            g.vertex_count() * h.vertex_count()
        );
    }
}

#[test]
fn join_edge_count_formula_on_random_pairs() {
    for seed in 0..25u64 {
        let g = random_small(seed);
        let h = random_small(seed + 13);
        let j = g.zykov_join(&h);
        assert_eq!(
            j.edge_count(),
            g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count(),
            "seed {seed}"
        );
    }
}

#[test]
fn union_is_additive_for_chi() {
    for seed in 0..15u64 {
        let g = random_small(seed);
        let h = random_small(seed + 55);
        let u = g.disjoint_union(&h);
        let chi = |x: &Graph| whitney::euler_characteristic(x).unwrap();
        assert_eq!(chi(&u), chi(&g) + chi(&h), "seed {seed}");
    }
}

#[test]
fn product_sphere_vertex_set_formula_on_random_pairs() {
    for seed in 0..10u64 {
        let g = random_small(seed);
        let h = random_small(seed + 31);
        let p = g.strong_product(&h);
        let nh = h.vertex_count();
        for x in g.vertices() {
            for y in h.vertices() {
                let xy = VertexId((x.index() * nh + y.index()) as u32);
                let sphere: std::collections::BTreeSet<u32> =
                    p.neighbors(xy).map(|v| v.0).collect();
                let mut expected = std::collections::BTreeSet::new();
                let sx: Vec<usize> = g.neighbors(x).map(|v| v.index()).collect();
                let sy: Vec<usize> = h.neighbors(y).map(|v| v.index()).collect();
                for &a in &sx {
                    for b in sy.iter().copied().chain([y.index()]) {
                        expected.insert((a * nh + b) as u32);
                    }
                }
                for a in sx.iter().copied().chain([x.index()]) {
                    for &b in &sy {
                        expected.insert((a * nh + b) as u32);
                    }
                }
                assert_eq!(sphere, expected, "seed {seed} at ({x:?},{y:?})");
            }
        }
    }
}
