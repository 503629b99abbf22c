//! Reducible configurations: detectors, extension recipes and the
//! constructive decomposer built from them.

mod decompose;
mod patterns;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::decomposition::{verify, OrientedDecomposition, VerifyError};
use crate::embedding::RotationGraph;

pub use decompose::{decompose_by_reduction, DecomposeError, Reduction, ReductionOptions, ReductionOutcome, TraceStep};
pub use patterns::{patterns, Pattern};

/// The two decomposition targets: (3,1) for `T0`, (2,1) for `T1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    T0,
    T1,
}

impl Theorem {
    pub fn d(self) -> usize {
        match self {
            Theorem::T0 => 3,
            Theorem::T1 => 2,
        }
    }

    pub fn h(self) -> usize {
        1
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T0 => "T0",
            Theorem::T1 => "T1",
        })
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T0" => Ok(Theorem::T0),
            "T1" => Ok(Theorem::T1),
            _ => Err(format!("unknown theorem `{s}` (expected T0 or T1)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    L1a,
    L1b,
    L2aCase1_545,
    L2aCase1_454,
    L2aCase2,
    L2b,
    L5a,
    L5b,
    L6,
    L7_1,
    L7_2,
    L7_3,
    L7_4,
    L7_5,
    L7_6,
    L7_7,
}

impl LemmaId {
    pub const ALL: [LemmaId; 16] = [
        LemmaId::L1a,
        LemmaId::L1b,
        LemmaId::L2aCase1_545,
        LemmaId::L2aCase1_454,
        LemmaId::L2aCase2,
        LemmaId::L2b,
        LemmaId::L5a,
        LemmaId::L5b,
        LemmaId::L6,
        LemmaId::L7_1,
        LemmaId::L7_2,
        LemmaId::L7_3,
        LemmaId::L7_4,
        LemmaId::L7_5,
        LemmaId::L7_6,
        LemmaId::L7_7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::L1a => "L1a",
            LemmaId::L1b => "L1b",
            LemmaId::L2aCase1_545 => "L2a-case1-545",
            LemmaId::L2aCase1_454 => "L2a-case1-454",
            LemmaId::L2aCase2 => "L2a-case2",
            LemmaId::L2b => "L2b",
            LemmaId::L5a => "L5a",
            LemmaId::L5b => "L5b",
            LemmaId::L6 => "L6",
            LemmaId::L7_1 => "L7-1",
            LemmaId::L7_2 => "L7-2",
            LemmaId::L7_3 => "L7-3",
            LemmaId::L7_4 => "L7-4",
            LemmaId::L7_5 => "L7-5",
            LemmaId::L7_6 => "L7-6",
            LemmaId::L7_7 => "L7-7",
        }
    }

    pub fn theorem(self) -> Theorem {
        if self <= LemmaId::L2b {
            Theorem::T0
        } else {
            Theorem::T1
        }
    }

    pub fn pattern(self) -> &'static Pattern {
        patterns(self.theorem()).iter().find(|p| p.id == self).expect("every id has a pattern")
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown lemma id `{s}`"))
    }
}

impl Serialize for LemmaId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Label-to-vertex assignment, serialized as an object in label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap(pub Vec<(&'static str, usize)>);

impl Serialize for LabelMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (label, v) in &self.0 {
            map.serialize_entry(label, v)?;
        }
        map.end()
    }
}

/// A located configuration together with its recipe in host ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigMatch {
    pub lemma: LemmaId,
    pub map: LabelMap,
    pub deleted: BTreeSet<usize>,
    pub matching: Vec<(usize, usize)>,
    pub arcs: Vec<(usize, usize)>,
}

impl ConfigMatch {
    fn new(p: &Pattern, hosts: &[usize]) -> Self {
        ConfigMatch {
            lemma: p.id,
            map: LabelMap(p.labels.iter().copied().zip(hosts.iter().copied()).collect()),
            deleted: hosts.iter().copied().collect(),
            matching: p.matching.iter().map(|&(a, b)| (hosts[a], hosts[b])).collect(),
            arcs: p.arcs.iter().map(|&(a, b)| (hosts[a], hosts[b])).collect(),
        }
    }
}

/// First configuration of the theorem's detector list present in `g`.
pub fn find_config(g: &RotationGraph, theorem: Theorem) -> Option<ConfigMatch> {
    find_config_touching(g, theorem, |_| true)
}

/// First configuration, in detector order, whose vertex set satisfies
/// `accept` (given the mapped vertices in label order).
pub fn find_config_touching(
    g: &RotationGraph,
    theorem: Theorem,
    accept: impl Fn(&[usize]) -> bool,
) -> Option<ConfigMatch> {
    patterns(theorem).iter().find_map(|p| match_pattern(g, p, theorem.d(), &accept))
}

/// The lexicographically first match of one specific configuration.
pub fn find_lemma(g: &RotationGraph, lemma: LemmaId) -> Option<ConfigMatch> {
    match_pattern(g, lemma.pattern(), lemma.theorem().d(), &|_| true)
}

struct Matcher<'a> {
    g: &'a RotationGraph,
    adjacent: Vec<Vec<bool>>,
    anchor: Vec<Option<usize>>,
    min_degree: Vec<usize>,
    max_degree: Vec<usize>,
    hosts: Vec<usize>,
    used: Vec<bool>,
    accept: &'a dyn Fn(&[usize]) -> bool,
}

fn match_pattern(g: &RotationGraph, p: &Pattern, d: usize, accept: &dyn Fn(&[usize]) -> bool) -> Option<ConfigMatch> {
    let k = p.len();
    let adjacent: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| p.adjacent(i, j)).collect()).collect();
    let mut m = Matcher {
        g,
        anchor: (0..k).map(|i| (0..i).find(|&j| adjacent[i][j])).collect(),
        adjacent,
        min_degree: (0..k).map(|i| p.internal_degree(i)).collect(),
        max_degree: (0..k).map(|i| p.internal_degree(i) + p.budget(i, d).expect("pattern within budget")).collect(),
        hosts: Vec::with_capacity(k),
        used: vec![false; g.vertex_count()],
        accept,
    };
    m.extend().then(|| ConfigMatch::new(p, &m.hosts))
}

impl Matcher<'_> {
    fn extend(&mut self) -> bool {
        let i = self.hosts.len();
        if i == self.adjacent.len() {
            return (self.accept)(&self.hosts);
        }
        let candidates: Vec<usize> = match self.anchor[i] {
            Some(j) => self.g.neighbors(self.hosts[j]).to_vec(),
            None => (0..self.g.vertex_count()).collect(),
        };
        for x in candidates {
            if self.used[x] || !(self.min_degree[i]..=self.max_degree[i]).contains(&self.g.degree(x)) {
                continue;
            }
            if (0..i).any(|j| self.g.has_edge(x, self.hosts[j]) != self.adjacent[i][j]) {
                continue;
            }
            self.hosts.push(x);
            self.used[x] = true;
            if self.extend() {
                return true;
            }
            self.used[x] = false;
            self.hosts.pop();
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("sub-decomposition of the reduced graph is invalid: {0}")]
    InvalidSubDecomposition(VerifyError),
    #[error("sub-decomposition has parameters ({d},{h}), above the target ({target_d},{target_h})")]
    SubParameters { d: usize, h: usize, target_d: usize, target_h: usize },
    #[error("recipe for {lemma} conflicts with the graph: {reason}")]
    RecipeConflict { lemma: LemmaId, reason: String },
}

/// Extends a decomposition of `g - X` to `g`.
///
/// `sub_dec` uses the ids of `g.remove_vertices(&m.deleted)`: the surviving
/// vertices renumbered in increasing order. The result adds the recipe's H
/// edges and arcs and orients every edge leaving `X` outward.
pub fn apply_reduction(
    g: &RotationGraph,
    m: &ConfigMatch,
    sub_dec: &OrientedDecomposition,
) -> Result<OrientedDecomposition, ReduceError> {
    let theorem = m.lemma.theorem();
    let (d, h) = (theorem.d(), theorem.h());
    let conflict = |reason: String| ReduceError::RecipeConflict { lemma: m.lemma, reason };
    let (sub, old_id) = g.remove_vertices_mapped(&m.deleted);
    verify(&sub, sub_dec).map_err(ReduceError::InvalidSubDecomposition)?;
    if sub_dec.d > d || sub_dec.h > h {
        return Err(ReduceError::SubParameters { d: sub_dec.d, h: sub_dec.h, target_d: d, target_h: h });
    }

    let mut dec = OrientedDecomposition::new(d, h);
    for &(u, v) in &sub_dec.h_edges {
        dec.add_h_edge(old_id[u], old_id[v]);
    }
    for &(t, w) in &sub_dec.d_arcs {
        dec.add_arc(old_id[t], old_id[w]);
    }
    for &(u, v) in &m.matching {
        if !g.has_edge(u, v) {
            return Err(conflict(format!("matching edge {u}-{v} is not in the graph")));
        }
        dec.add_h_edge(u, v);
    }
    for &(t, w) in &m.arcs {
        if !g.has_edge(t, w) {
            return Err(conflict(format!("arc {t}>{w} is not an edge of the graph")));
        }
        dec.add_arc(t, w);
    }
    for &x in &m.deleted {
        for &y in g.neighbors(x) {
            if !m.deleted.contains(&y) {
                dec.add_arc(x, y);
            }
        }
        let out = dec.d_arcs.range((x, 0)..(x + 1, 0)).count();
        if out > d {
            return Err(conflict(format!("vertex {x} ends with out-degree {out}, above {d}")));
        }
    }
    verify(g, &dec).map_err(|e| conflict(e.to_string()))?;
    Ok(dec)
}
