#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use ncdecomp::reducer::Pattern;
use ncdecomp::{generate, Kind, LemmaId, RotationGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn planar_kinds() -> Vec<Kind> {
    let mut kinds = Vec::new();
    for n in 3..=9 {
        kinds.push(Kind::Cycle { n });
        kinds.push(Kind::Wheel { n });
        kinds.push(Kind::Prism { n });
    }
    for n in 2..=6 {
        kinds.push(Kind::Path { n });
    }
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5), (5, 6)] {
        kinds.push(Kind::PlanarGrid { m, n });
    }
    for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4)] {
        kinds.push(Kind::HexGrid { m, n });
    }
    for n in 1..=4 {
        kinds.push(Kind::Complete { n });
    }
    kinds
}

pub fn toroidal_kinds() -> Vec<Kind> {
    let mut kinds = Vec::new();
    for (m, n) in [(3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (5, 6), (6, 6)] {
        kinds.push(Kind::ToroidalGrid { m, n });
    }
    for n in 5..=6 {
        kinds.push(Kind::Complete { n });
    }
    kinds
}

pub fn all_kinds() -> Vec<Kind> {
    let mut kinds = planar_kinds();
    kinds.extend(toroidal_kinds());
    kinds
}

pub fn build(kind: Kind) -> RotationGraph {
    generate(kind).unwrap_or_else(|e| panic!("{kind}: {e}"))
}

/// Deletes `count` distinct random vertices.
pub fn delete_random(g: &RotationGraph, count: usize, rng: &mut ChaCha8Rng) -> RotationGraph {
    let mut vs: Vec<usize> = (0..g.vertex_count()).collect();
    vs.shuffle(rng);
    let removed: BTreeSet<usize> = vs.into_iter().take(count.min(g.vertex_count())).collect();
    g.remove_vertices(&removed)
}

pub fn subdivide_all(g: &RotationGraph) -> RotationGraph {
    g.subdivide_edges(&g.edges()).unwrap()
}

/// 12 vertices, 20 triangles, on the sphere.
pub fn icosahedron() -> RotationGraph {
    let top = 0;
    let bottom = 11;
    let upper = |i: usize| 1 + i % 5;
    let lower = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![top, upper(i), upper(i + 1)]);
        faces.push(vec![upper(i), lower(i), upper(i + 1)]);
        faces.push(vec![upper(i + 1), lower(i), lower(i + 1)]);
        faces.push(vec![lower(i), bottom, lower(i + 1)]);
    }
    RotationGraph::from_oriented_faces(12, &faces).unwrap()
}

/// A labeled instance with a short description for failure messages.
pub struct Instance {
    pub name: String,
    pub graph: RotationGraph,
}

fn push(out: &mut Vec<Instance>, name: String, graph: RotationGraph) {
    out.push(Instance { name, graph });
}

/// Every generator plus random vertex-deleted variants of each.
pub fn conservation_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    let mut r = rng(1);
    for kind in all_kinds() {
        let g = build(kind);
        for k in 1..=3 {
            if g.vertex_count() > k {
                let h = delete_random(&g, k, &mut r);
                push(&mut out, format!("{kind} minus {k}"), h);
            }
        }
        push(&mut out, format!("subdivided {kind}"), subdivide_all(&g));
        push(&mut out, kind.to_string(), g);
    }
    push(&mut out, "icosahedron".into(), icosahedron());
    out
}

/// Graphs without cycles of two of the lengths 3, 4, 6, up to 60 vertices:
/// hex patches, subdivided planar and toroidal graphs, and random deletions.
pub fn class_h_instances() -> Vec<Instance> {
    let mut base = Vec::new();
    for (m, n) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (3, 5)] {
        let kind = Kind::HexGrid { m, n };
        base.push((kind.to_string(), build(kind)));
    }
    for (m, n) in [(3, 3), (3, 4), (4, 4), (4, 5)] {
        let kind = Kind::ToroidalGrid { m, n };
        base.push((format!("subdivided {kind}"), subdivide_all(&build(kind))));
    }
    for kind in [
        Kind::Cycle { n: 5 },
        Kind::Cycle { n: 11 },
        Kind::Wheel { n: 5 },
        Kind::Wheel { n: 8 },
        Kind::Prism { n: 5 },
        Kind::Prism { n: 8 },
        Kind::PlanarGrid { m: 3, n: 3 },
        Kind::PlanarGrid { m: 3, n: 4 },
        Kind::PlanarGrid { m: 4, n: 4 },
        Kind::Complete { n: 4 },
    ] {
        base.push((format!("subdivided {kind}"), subdivide_all(&build(kind))));
    }
    with_deletions(base, 2, 60, 7, ncdecomp::structure::in_class_h)
}

/// Graphs without chordal 5-cycles (or another of the three conditions),
/// up to 60 vertices.
pub fn class_g_instances() -> Vec<Instance> {
    let mut base = Vec::new();
    for (m, n) in [(4, 4), (4, 5), (5, 5), (5, 6), (6, 6), (6, 7), (7, 8)] {
        let kind = Kind::ToroidalGrid { m, n };
        base.push((kind.to_string(), build(kind)));
    }
    for kind in [
        Kind::Cycle { n: 7 },
        Kind::Prism { n: 4 },
        Kind::Prism { n: 6 },
        Kind::Prism { n: 10 },
        Kind::PlanarGrid { m: 4, n: 4 },
        Kind::PlanarGrid { m: 5, n: 7 },
        Kind::PlanarGrid { m: 7, n: 8 },
        Kind::HexGrid { m: 3, n: 3 },
        Kind::HexGrid { m: 4, n: 4 },
        Kind::Complete { n: 4 },
    ] {
        base.push((kind.to_string(), build(kind)));
    }
    with_deletions(base, 3, 60, 11, ncdecomp::structure::in_class_g)
}

fn with_deletions(
    base: Vec<(String, RotationGraph)>,
    variants: usize,
    max_vertices: usize,
    seed: u64,
    keep: fn(&RotationGraph) -> bool,
) -> Vec<Instance> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for (name, g) in base {
        let mut candidates = vec![(name.clone(), g.clone())];
        for i in 0..variants {
            let k = r.gen_range(1..=3 + i);
            candidates.push((format!("{name} minus {k}"), delete_random(&g, k, &mut r)));
        }
        for (name, h) in candidates {
            if h.vertex_count() <= max_vertices && h.summary().is_nonnegative() && keep(&h) {
                push(&mut out, name, h);
            }
        }
    }
    out
}

/// Every labeled connected graph on `n` vertices, as edge lists.
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect())
        .filter(|edges: &Vec<(usize, usize)>| is_connected(n, edges))
        .collect()
}

/// A connected graph on `n` vertices: a random tree plus random extra edges
/// kept with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    edges.into_iter().collect()
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// The pattern as a standalone graph: label `i` is vertex `i`, and each label
/// gets as many pendant outside vertices as its allowance permits. The
/// outside vertices are joined in a path so the remainder stays connected.
pub fn gadget(lemma: LemmaId) -> (RotationGraph, &'static Pattern) {
    let p = lemma.pattern();
    let d = lemma.theorem().d();
    let k = p.len();
    let mut edges: Vec<(usize, usize)> = p.edges().collect();
    let mut next = k;
    let mut outside = Vec::new();
    for i in 0..k {
        for _ in 0..p.budget(i, d).unwrap() {
            edges.push((i, next));
            outside.push(next);
            next += 1;
        }
    }
    for w in outside.windows(2) {
        edges.push((w[0], w[1]));
    }
    (RotationGraph::from_edges(next, &edges).unwrap(), p)
}

/// Points on a circle of radius `r` at the given angles in turns.
pub fn on_circle(r: f64, turns: &[f64]) -> Vec<(f64, f64)> {
    turns.iter().map(|t| (r * (TAU * t).cos(), r * (TAU * t).sin())).collect()
}

/// Relabels `edges` to the lexicographically least edge list over all
/// vertex permutations that list vertices by nonincreasing degree.
pub fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let slot_degrees: Vec<usize> = slots.iter().map(|&v| deg[v]).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![usize::MAX; n];
    fn go(
        pos: usize,
        deg: &[usize],
        slot_degrees: &[usize],
        label: &mut Vec<usize>,
        edges: &[(usize, usize)],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        let n = deg.len();
        if pos == n {
            let mut e: Vec<(usize, usize)> =
                edges.iter().map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v]))).collect();
            e.sort();
            if best.as_ref().is_none_or(|b| e < *b) {
                *best = Some(e);
            }
            return;
        }
        for v in 0..n {
            if label[v] == usize::MAX && deg[v] == slot_degrees[pos] {
                label[v] = pos;
                go(pos + 1, deg, slot_degrees, label, edges, best);
                label[v] = usize::MAX;
            }
        }
    }
    go(0, &deg, &slot_degrees, &mut label, edges, &mut best);
    best.unwrap()
}

/// Every connected graph with at most `max_vertices` vertices and
/// `max_edges` edges, one per isomorphism class, grown one edge at a time.
pub fn connected_up_to_iso(max_vertices: usize, max_edges: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut layer: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::from([(1, Vec::new())]);
    let mut all: Vec<_> = layer.iter().cloned().collect();
    for _ in 0..max_edges {
        let mut next = BTreeSet::new();
        for (n, edges) in &layer {
            let present: BTreeSet<_> = edges.iter().copied().collect();
            let mut grow = |n: usize, e: Vec<(usize, usize)>| {
                next.insert((n, canonical(n, &e)));
            };
            for u in 0..*n {
                for v in u + 1..*n {
                    if !present.contains(&(u, v)) {
                        let mut e = edges.clone();
                        e.push((u, v));
                        grow(*n, e);
                    }
                }
                if *n < max_vertices {
                    let mut e = edges.clone();
                    e.push((u, *n));
                    grow(n + 1, e);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[derive(Clone, Copy)]
pub enum Corner {
    Triangle,
    Quad,
    Open,
}

/// A hub (vertex 0) with neighbors `1..=k` around it. Corner `i` lies
/// between neighbors `i` and `i + 1`: a triangle, a 4-face through an extra
/// vertex, or the outer face. Neighbors are padded with pendant vertices up
/// to the requested degrees.
pub fn hub(degrees: &[usize], corners: &[Corner]) -> RotationGraph {
    let k = degrees.len();
    assert_eq!(corners.len(), k);
    let turns: Vec<f64> = (0..k).map(|i| i as f64 / k as f64).collect();
    let mut points = vec![(0.0, 0.0)];
    points.extend(on_circle(1.0, &turns));
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    for (i, corner) in corners.iter().enumerate() {
        let (a, b) = (i + 1, (i + 1) % k + 1);
        match corner {
            Corner::Triangle => edges.push((a, b)),
            Corner::Quad => {
                let x = points.len();
                points.extend(on_circle(1.7, &[(i as f64 + 0.5) / k as f64]));
                edges.push((a, x));
                edges.push((x, b));
            }
            Corner::Open => {}
        }
    }
    for (i, &target) in degrees.iter().enumerate() {
        let v = i + 1;
        let have = edges.iter().filter(|&&(a, b)| a == v || b == v).count();
        let extra = target.checked_sub(have).expect("degree below the gadget's own edges");
        for j in 0..extra {
            let offset = (j as f64 - (extra as f64 - 1.0) / 2.0) * 0.02;
            let p = points.len();
            points.extend(on_circle(1.35, &[turns[i] + offset]));
            edges.push((v, p));
        }
    }
    RotationGraph::from_planar_drawing(&points, &edges).unwrap()
}

pub fn corner_degrees(g: &RotationGraph, v: usize) -> Vec<usize> {
    let faces = g.faces();
    faces.incident_faces(v).unwrap().iter().map(|&f| faces.face(f).degree()).collect()
}
