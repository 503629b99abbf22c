//! Cycle-structure predicates and class membership.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{GraphError, RotationGraph};

pub const MIN_CYCLE: usize = 3;
pub const MAX_CYCLE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("cycle length {0} outside supported range {MIN_CYCLE}..={MAX_CYCLE}")]
    CycleLength(usize),
}

fn check_len(k: usize) -> Result<(), StructureError> {
    if (MIN_CYCLE..=MAX_CYCLE).contains(&k) {
        Ok(())
    } else {
        Err(StructureError::CycleLength(k))
    }
}

/// Visits every simple `k`-cycle once, in canonical form: the smallest vertex
/// first and the second vertex smaller than the last. Cycles arrive in
/// lexicographic order.
pub fn for_each_cycle<F>(g: &RotationGraph, k: usize, mut visit: F) -> Result<(), StructureError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_len(k)?;
    let n = g.vertex_count();
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        let flow = extend(g, k, &mut path, &mut on_path, &mut visit);
        on_path[s] = false;
        path.pop();
        if flow.is_break() {
            break;
        }
    }
    Ok(())
}

fn extend<F>(
    g: &RotationGraph,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == k {
        if path[1] < path[k - 1] && g.has_edge(last, s) {
            return visit(path);
        }
        return ControlFlow::Continue(());
    }
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let flow = extend(g, k, path, on_path, visit);
        on_path[w] = false;
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

pub fn enumerate_cycles(g: &RotationGraph, k: usize) -> Result<Vec<Vec<usize>>, StructureError> {
    let mut out = Vec::new();
    for_each_cycle(g, k, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn has_cycle(g: &RotationGraph, k: usize) -> Result<bool, StructureError> {
    let mut found = false;
    for_each_cycle(g, k, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordWitness {
    pub cycle: Vec<usize>,
    pub chord: (usize, usize),
}

fn chord_of(g: &RotationGraph, cycle: &[usize]) -> Option<(usize, usize)> {
    let k = cycle.len();
    for i in 0..k {
        // skip j = i + 1 (cycle edge) and, for i = 0, j = k - 1 (closing edge)
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                let (a, b) = (cycle[i], cycle[j]);
                return Some((a.min(b), a.max(b)));
            }
        }
    }
    None
}

/// First `k`-cycle (in canonical order) that has a chord.
pub fn has_chord_cycle(g: &RotationGraph, k: usize) -> Result<Option<ChordWitness>, StructureError> {
    let mut witness = None;
    for_each_cycle(g, k, |c| match chord_of(g, c) {
        Some(chord) => {
            witness = Some(ChordWitness { cycle: c.to_vec(), chord });
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    })?;
    Ok(witness)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacentCycles {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub shared_edge: (usize, usize),
}

fn cycle_edges(c: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..c.len()).map(move |i| {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        (a.min(b), a.max(b))
    })
}

/// Two distinct 4-cycles sharing at least one edge.
pub fn has_adjacent_4cycles(g: &RotationGraph) -> Option<AdjacentCycles> {
    let cycles = enumerate_cycles(g, 4).expect("4 is a supported length");
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (idx, c) in cycles.iter().enumerate() {
        for e in cycle_edges(c) {
            if let Some(&prev) = owner.get(&e) {
                return Some(AdjacentCycles {
                    first: cycles[prev].clone(),
                    second: c.clone(),
                    shared_edge: e,
                });
            }
        }
        for e in cycle_edges(c) {
            owner.insert(e, idx);
        }
    }
    None
}

/// Hypotheses under which every member is (3,1)-decomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GCondition {
    NoChord5,
    NoChord6,
    NoChord7NoAdjacent4,
}

/// Cycle-length pairs whose joint absence gives (2,1)-decomposability.
pub const H_PAIRS: [(usize, usize); 3] = [(3, 4), (3, 6), (4, 6)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexFaceStats {
    pub vertex: usize,
    pub degree: usize,
    /// Corner incidences per face degree, `n_i(v)`.
    pub face_counts: BTreeMap<usize, usize>,
    /// Longest run of 3-face corners in cyclic rotation order.
    pub max_triangle_run: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub has_cycle: BTreeMap<usize, bool>,
    pub has_chord_cycle: BTreeMap<usize, bool>,
    pub has_adjacent_4cycles: bool,
    pub class_g: BTreeSet<GCondition>,
    pub class_h: BTreeSet<(usize, usize)>,
    pub vertices: Vec<VertexFaceStats>,
}

impl StructureReport {
    pub fn in_class_g(&self) -> bool {
        !self.class_g.is_empty()
    }

    pub fn in_class_h(&self) -> bool {
        !self.class_h.is_empty()
    }
}

/// Membership in the (3,1) family, short-circuiting on the first satisfied
/// condition.
pub fn in_class_g(g: &RotationGraph) -> bool {
    let no_chord = |k| has_chord_cycle(g, k).unwrap().is_none();
    no_chord(5) || no_chord(6) || (no_chord(7) && has_adjacent_4cycles(g).is_none())
}

/// Membership in the (2,1) family.
pub fn in_class_h(g: &RotationGraph) -> bool {
    let free = |k| !has_cycle(g, k).unwrap();
    H_PAIRS.iter().any(|&(i, j)| free(i) && free(j))
}

pub fn face_counts(g: &RotationGraph, v: usize) -> Result<BTreeMap<usize, usize>, GraphError> {
    let faces = g.faces();
    let mut counts = BTreeMap::new();
    for &f in faces.incident_faces(v)? {
        *counts.entry(faces.face(f).degree()).or_insert(0) += 1;
    }
    Ok(counts)
}

pub fn max_triangle_run(g: &RotationGraph, v: usize) -> Result<usize, GraphError> {
    let faces = g.faces();
    let tri: Vec<bool> = faces
        .incident_faces(v)?
        .iter()
        .map(|&f| faces.face(f).degree() == 3)
        .collect();
    if tri.iter().all(|&t| t) {
        return Ok(tri.len());
    }
    let d = tri.len();
    let start = tri.iter().position(|&t| !t).unwrap();
    let (mut best, mut run) = (0, 0);
    for k in 1..=d {
        if tri[(start + k) % d] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Ok(best)
}

pub fn classify(g: &RotationGraph) -> StructureReport {
    let mut has = BTreeMap::new();
    for k in 3..=7 {
        has.insert(k, has_cycle(g, k).unwrap());
    }
    let mut chord = BTreeMap::new();
    for k in 5..=7 {
        let c = has[&k] && has_chord_cycle(g, k).unwrap().is_some();
        chord.insert(k, c);
    }
    let adjacent4 = has[&4] && has_adjacent_4cycles(g).is_some();

    let mut class_g = BTreeSet::new();
    if !chord[&5] {
        class_g.insert(GCondition::NoChord5);
    }
    if !chord[&6] {
        class_g.insert(GCondition::NoChord6);
    }
    if !chord[&7] && !adjacent4 {
        class_g.insert(GCondition::NoChord7NoAdjacent4);
    }
    let class_h = H_PAIRS.iter().copied().filter(|&(i, j)| !has[&i] && !has[&j]).collect();

    let vertices = (0..g.vertex_count())
        .map(|v| VertexFaceStats {
            vertex: v,
            degree: g.degree(v),
            face_counts: face_counts(g, v).unwrap(),
            max_triangle_run: max_triangle_run(g, v).unwrap(),
        })
        .collect();
    StructureReport {
        has_cycle: has,
        has_chord_cycle: chord,
        has_adjacent_4cycles: adjacent4,
        class_g,
        class_h,
        vertices,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub face: usize,
    /// Boundary vertex degrees, sorted, with multiplicity.
    pub degrees: Vec<usize>,
}

pub fn face_profile(g: &RotationGraph, f: usize) -> FaceProfile {
    let mut degrees: Vec<usize> = g.faces().face(f).vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    FaceProfile { face: f, degrees }
}

/// Which face degree makes a 3-vertex bad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BadMode {
    /// Bad when incident with a 4-face.
    FourFace,
    /// Bad when incident with a 3-face.
    ThreeFace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeVertexClass {
    Good,
    Bad,
    NotThreeVertex,
}

pub fn classify_3vertex(g: &RotationGraph, v: usize, mode: BadMode) -> Result<ThreeVertexClass, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(v));
    }
    if g.degree(v) != 3 {
        return Ok(ThreeVertexClass::NotThreeVertex);
    }
    let target = match mode {
        BadMode::FourFace => 4,
        BadMode::ThreeFace => 3,
    };
    let faces = g.faces();
    let hit = faces.incident_faces(v)?.iter().any(|&f| faces.face(f).degree() == target);
    Ok(if hit { ThreeVertexClass::Bad } else { ThreeVertexClass::Good })
}
