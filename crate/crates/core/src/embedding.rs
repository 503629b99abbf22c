//! Signed rotation systems and face tracing.
//!
//! A [`RotationGraph`] stores, for every vertex, the cyclic order of its
//! darts. Each dart carries a signature; a negative signature flips the
//! local sense of traversal, which is what lets the projective plane and
//! the Klein bottle be described alongside orientable surfaces.
//!
//! Face tracing convention: a walk leaves vertex `v` along dart `i` with a
//! sense `s`. On reaching `w` the sense becomes `s * sign(dart)`, and the
//! next dart is the rotation successor of the reverse dart when the sense
//! is positive, the predecessor when it is negative. Every face is traced
//! once; its mirror walk is discarded.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// One end of an edge, as seen from the vertex whose rotation holds it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Dart {
    pub to: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} has a loop")]
    Loop { vertex: usize },
    #[error("parallel edges between {u} and {v}")]
    ParallelEdge { u: usize, v: usize },
    #[error("vertex {from} references nonexistent vertex {to}")]
    DanglingReference { from: usize, to: usize },
    #[error("edge {u}-{v} is listed at {u} but not at {v}")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("edge {u}-{v} has mismatched signatures on its two darts")]
    SignatureMismatch { u: usize, v: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("{0}")]
    OutOfRange(String),
}

/// A combinatorial embedding given by a signed rotation system.
#[derive(Clone)]
pub struct RotationGraph {
    rotations: Vec<Vec<Dart>>,
    /// `reverse[v][i]` is the index of the reverse dart inside the rotation of
    /// `rotations[v][i].to`.
    reverse: Vec<Vec<usize>>,
    /// Sorted neighbor lists, used for adjacency queries.
    sorted: Vec<Vec<usize>>,
    edge_count: usize,
    faces: OnceLock<FaceSet>,
}

impl PartialEq for RotationGraph {
    fn eq(&self, other: &Self) -> bool {
        self.rotations == other.rotations
    }
}

impl Eq for RotationGraph {}

impl fmt::Debug for RotationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RotationGraph")
            .field("vertices", &self.vertex_count())
            .field("rotations", &self.rotations)
            .finish()
    }
}

impl RotationGraph {
    /// Builds an embedding from per-vertex rotations, validating simplicity
    /// and dart symmetry.
    pub fn from_rotations(rotations: Vec<Vec<Dart>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        let mut index: Vec<HashMap<usize, usize>> = Vec::with_capacity(n);
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = HashMap::with_capacity(rot.len());
            for (i, dart) in rot.iter().enumerate() {
                if dart.to >= n {
                    return Err(GraphError::DanglingReference { from: v, to: dart.to });
                }
                if dart.to == v {
                    return Err(GraphError::Loop { vertex: v });
                }
                if seen.insert(dart.to, i).is_some() {
                    return Err(GraphError::ParallelEdge { u: v, v: dart.to });
                }
            }
            index.push(seen);
        }
        let mut reverse = Vec::with_capacity(n);
        let mut half_edges = 0usize;
        for (v, rot) in rotations.iter().enumerate() {
            let mut rev = Vec::with_capacity(rot.len());
            for dart in rot {
                let j = *index[dart.to]
                    .get(&v)
                    .ok_or(GraphError::AsymmetricAdjacency { u: v, v: dart.to })?;
                if rotations[dart.to][j].sign != dart.sign {
                    return Err(GraphError::SignatureMismatch { u: v.min(dart.to), v: v.max(dart.to) });
                }
                rev.push(j);
            }
            half_edges += rot.len();
            reverse.push(rev);
        }
        let sorted = rotations
            .iter()
            .map(|rot| {
                let mut ns: Vec<usize> = rot.iter().map(|d| d.to).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Ok(RotationGraph {
            rotations,
            reverse,
            sorted,
            edge_count: half_edges / 2,
            faces: OnceLock::new(),
        })
    }

    /// Builds an orientable embedding whose rotation at each vertex lists the
    /// neighbors in increasing id order. Useful when only the abstract graph
    /// matters.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::DanglingReference { from: u.min(v), to: u.max(v) });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let rotations = adj
            .into_iter()
            .map(|mut ns| {
                ns.sort_unstable();
                ns.into_iter().map(|to| Dart { to, sign: Sign::Pos }).collect()
            })
            .collect();
        Self::from_rotations(rotations)
    }

    /// Orientable embedding from consistently oriented facial cycles: each
    /// consecutive triple `(a, v, b)` of a face makes `b` follow `a` in the
    /// rotation at `v`. Every corner of every vertex must be covered.
    pub fn from_oriented_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self, GraphError> {
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for face in faces {
            let l = face.len();
            for k in 0..l {
                let (a, v, b) = (face[k], face[(k + 1) % l], face[(k + 2) % l]);
                if a >= n || v >= n || b >= n {
                    return Err(GraphError::UnknownVertex(a.max(v).max(b)));
                }
                if succ[v].insert(a, b).is_some() {
                    return Err(GraphError::OutOfRange(format!(
                        "corner ({a},{v},{b}) appears twice in the face list"
                    )));
                }
            }
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, s) in succ.iter().enumerate() {
            let mut rot = Vec::with_capacity(s.len());
            if let Some(&start) = s.keys().min() {
                let mut cur = start;
                loop {
                    rot.push(Dart { to: cur, sign: Sign::Pos });
                    cur = *s.get(&cur).ok_or_else(|| {
                        GraphError::OutOfRange(format!("rotation at {v} is not closed"))
                    })?;
                    if cur == start {
                        break;
                    }
                    if rot.len() > s.len() {
                        return Err(GraphError::OutOfRange(format!(
                            "rotation at {v} is not a single cycle"
                        )));
                    }
                }
                if rot.len() != s.len() {
                    return Err(GraphError::OutOfRange(format!(
                        "rotation at {v} is not a single cycle"
                    )));
                }
            }
            rotations.push(rot);
        }
        Self::from_rotations(rotations)
    }

    /// Straight-line planar drawing: rotations follow counterclockwise angle.
    pub fn from_planar_drawing(
        points: &[(f64, f64)],
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let n = points.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::DanglingReference { from: u.min(v), to: u.max(v) });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let rotations = adj
            .into_iter()
            .enumerate()
            .map(|(v, mut ns)| {
                let (x0, y0) = points[v];
                ns.sort_by(|&a, &b| {
                    let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
                    let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
                    ta.total_cmp(&tb).then(a.cmp(&b))
                });
                ns.into_iter().map(|to| Dart { to, sign: Sign::Pos }).collect()
            })
            .collect();
        Self::from_rotations(rotations)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    /// Neighbors in increasing id order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.sorted[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.sorted.len() && self.sorted[u].binary_search(&v).is_ok()
    }

    /// Index of the reverse of dart `(v, i)` in the rotation of its head.
    pub fn reverse_index(&self, v: usize, i: usize) -> usize {
        self.reverse[v][i]
    }

    /// Undirected edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, ns) in self.sorted.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_orientable_signature(&self) -> bool {
        self.rotations.iter().flatten().all(|d| d.sign == Sign::Pos)
    }

    /// Connected component id of each vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.sorted[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Faces of the embedding, traced on first use.
    pub fn faces(&self) -> &FaceSet {
        self.faces.get_or_init(|| FaceSet::trace(self))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }

    pub fn summary(&self) -> EmbeddingSummary {
        let comp = self.components();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut per = vec![0i64; count];
        let mut half_edges = vec![0i64; count];
        for (v, &c) in comp.iter().enumerate() {
            per[c] += 1;
            half_edges[c] += self.degree(v) as i64;
        }
        for c in 0..count {
            per[c] -= half_edges[c] / 2;
        }
        for face in &self.faces().faces {
            per[comp[face.anchor]] += 1;
        }
        EmbeddingSummary {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            faces: self.faces().len(),
            characteristic: self.euler_characteristic(),
            components: count,
            component_characteristics: per,
        }
    }

    /// Induced embedding on the surviving vertices, relabeled densely in
    /// increasing id order. Rotation order and signatures are preserved.
    pub fn remove_vertices(&self, removed: &BTreeSet<usize>) -> RotationGraph {
        self.remove_vertices_mapped(removed).0
    }

    /// Like [`remove_vertices`](Self::remove_vertices), also returning the
    /// original id of every surviving vertex.
    pub fn remove_vertices_mapped(&self, removed: &BTreeSet<usize>) -> (RotationGraph, Vec<usize>) {
        let n = self.vertex_count();
        let mut new_id = vec![usize::MAX; n];
        let mut old_id = Vec::with_capacity(n.saturating_sub(removed.len()));
        for v in 0..n {
            if !removed.contains(&v) {
                new_id[v] = old_id.len();
                old_id.push(v);
            }
        }
        let rotations = old_id
            .iter()
            .map(|&v| {
                self.rotations[v]
                    .iter()
                    .filter(|d| new_id[d.to] != usize::MAX)
                    .map(|d| Dart { to: new_id[d.to], sign: d.sign })
                    .collect()
            })
            .collect();
        let g = RotationGraph::from_rotations(rotations)
            .expect("induced sub-embedding of a valid embedding is valid");
        (g, old_id)
    }

    /// Replaces each listed edge `u-v` by a path `u-w-v` through a new vertex,
    /// keeping the embedding (and the face structure) intact. New vertices are
    /// appended in the order the edges are given.
    pub fn subdivide_edges(&self, edges: &[(usize, usize)]) -> Result<RotationGraph, GraphError> {
        let mut rotations = self.rotations.clone();
        let mut next = self.vertex_count();
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            let key = (u.min(v), u.max(v));
            if !self.has_edge(u, v) || !seen.insert(key) {
                return Err(GraphError::OutOfRange(format!("cannot subdivide {u}-{v}")));
            }
            let (a, b) = key;
            let w = next;
            next += 1;
            let ia = self.rotations[a].iter().position(|d| d.to == b).unwrap();
            let ib = self.rotations[b].iter().position(|d| d.to == a).unwrap();
            let sign = self.rotations[a][ia].sign;
            rotations[a][ia] = Dart { to: w, sign };
            rotations[b][ib] = Dart { to: w, sign: Sign::Pos };
            rotations.push(vec![Dart { to: a, sign }, Dart { to: b, sign: Sign::Pos }]);
        }
        RotationGraph::from_rotations(rotations)
    }
}

/// A face: its boundary walk as the sequence of darts `(vertex, rotation index)`
/// leaving each boundary vertex. An isolated vertex carries one empty face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
    /// A vertex on the face, used to attribute the face to a component.
    pub anchor: usize,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Boundary vertices in walk order, with repetition.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(v, _)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// `corners[v][k]` is the face containing the corner between darts `k`
    /// and `k + 1` of the rotation at `v`.
    corners: Vec<Vec<usize>>,
    /// For every edge `(u, v)` with `u < v`, the two `(face, position)` sides.
    sides: HashMap<(usize, usize), [(usize, usize); 2]>,
}

impl FaceSet {
    fn trace(g: &RotationGraph) -> FaceSet {
        let n = g.vertex_count();
        // visited[v][i][s]: state leaving v along dart i with sense s (0 = +, 1 = -)
        let mut visited: Vec<Vec<[bool; 2]>> =
            g.rotations.iter().map(|r| vec![[false; 2]; r.len()]).collect();
        let mut faces = Vec::new();
        let mut corners: Vec<Vec<usize>> = g.rotations.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        let mut side_lists: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();

        let sidx = |s: Sign| if s == Sign::Pos { 0 } else { 1 };
        let step = |v: usize, i: usize, s: Sign| -> (usize, usize, Sign, usize) {
            let dart = g.rotations[v][i];
            let w = dart.to;
            let s2 = s.times(dart.sign);
            let j = g.reverse[v][i];
            let deg = g.rotations[w].len();
            let (next, corner) = match s2 {
                Sign::Pos => ((j + 1) % deg, j),
                Sign::Neg => ((j + deg - 1) % deg, (j + deg - 1) % deg),
            };
            (w, next, s2, corner)
        };

        for v0 in 0..n {
            if g.rotations[v0].is_empty() {
                faces.push(Face { darts: Vec::new(), anchor: v0 });
            }
        }
        for s0 in [Sign::Pos, Sign::Neg] {
            for v0 in 0..n {
                for i0 in 0..g.rotations[v0].len() {
                    if visited[v0][i0][sidx(s0)] {
                        continue;
                    }
                    let fid = faces.len();
                    let mut darts = Vec::new();
                    let (mut v, mut i, mut s) = (v0, i0, s0);
                    loop {
                        visited[v][i][sidx(s)] = true;
                        darts.push((v, i));
                        let w = g.rotations[v][i].to;
                        side_lists
                            .entry((v.min(w), v.max(w)))
                            .or_default()
                            .push((fid, darts.len() - 1));
                        let (w, next, s2, corner) = step(v, i, s);
                        corners[w][corner] = fid;
                        v = w;
                        i = next;
                        s = s2;
                        if (v, i, s) == (v0, i0, s0) {
                            break;
                        }
                    }
                    // Mark the mirror walk so the face is not traced twice.
                    let mut s = s0;
                    for &(v, i) in &darts {
                        let dart = g.rotations[v][i];
                        let mirror_sense = s.times(dart.sign).flip();
                        visited[dart.to][g.reverse[v][i]][sidx(mirror_sense)] = true;
                        s = s.times(dart.sign);
                    }
                    faces.push(Face { darts, anchor: v0 });
                }
            }
        }
        let sides = side_lists
            .into_iter()
            .map(|(e, l)| {
                debug_assert_eq!(l.len(), 2, "edge {e:?} must have two sides");
                (e, [l[0], l[1]])
            })
            .collect();
        FaceSet { faces, corners, sides }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    /// Face of each corner of `v` in rotation order; a face appears once per
    /// corner it occupies.
    pub fn incident_faces(&self, v: usize) -> Result<&[usize], GraphError> {
        self.corners.get(v).map(Vec::as_slice).ok_or(GraphError::UnknownVertex(v))
    }

    /// The face across the edge traversed at position `pos` of face `f`.
    pub fn across(&self, f: usize, pos: usize) -> usize {
        let (v, _) = self.faces[f].darts[pos];
        let w = self.faces[f].darts[(pos + 1) % self.faces[f].darts.len()].0;
        let sides = self.sides[&(v.min(w), v.max(w))];
        if sides[0] == (f, pos) {
            sides[1].0
        } else {
            sides[0].0
        }
    }

    pub fn degree_sum(&self) -> usize {
        self.faces.iter().map(Face::degree).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub characteristic: i64,
    pub components: usize,
    pub component_characteristics: Vec<i64>,
}

impl EmbeddingSummary {
    /// Every component lies on a surface of nonnegative characteristic.
    pub fn is_nonnegative(&self) -> bool {
        self.component_characteristics.iter().all(|&c| c >= 0)
    }
}
