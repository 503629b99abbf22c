//! The (d,h)-decomposition data model and its verifier.

mod coloring;
mod degeneracy;
mod format;
mod oracle;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::RotationGraph;

pub use coloring::{defect, defective_coloring, ColoringError};
pub use degeneracy::{
    adjacency_without, degeneracy_order, degeneracy_order_adj, orientation_from_order, DegeneracyCertificate,
    OrderError,
};
pub use format::{parse_decomposition, write_decomposition, DecompParseError};
pub use oracle::{oracle_decide, OracleError, DEFAULT_EDGE_BUDGET, MAX_ORACLE_H};

/// A pair `(D, H)`: `h_edges` are undirected edges stored as `(u, v)` with
/// `u < v`, `d_arcs` are directed arcs `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct OrientedDecomposition {
    pub d: usize,
    pub h: usize,
    pub h_edges: BTreeSet<(usize, usize)>,
    pub d_arcs: BTreeSet<(usize, usize)>,
}

impl OrientedDecomposition {
    pub fn new(d: usize, h: usize) -> Self {
        OrientedDecomposition { d, h, ..Default::default() }
    }

    pub fn add_h_edge(&mut self, u: usize, v: usize) {
        self.h_edges.insert((u.min(v), u.max(v)));
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) {
        self.d_arcs.insert((tail, head));
    }

    pub fn max_out_degree(&self, n: usize) -> usize {
        let mut out = vec![0usize; n];
        for &(t, _) in &self.d_arcs {
            out[t] += 1;
        }
        out.into_iter().max().unwrap_or(0)
    }

    pub fn max_h_degree(&self, n: usize) -> usize {
        let mut deg = vec![0usize; n];
        for &(u, v) in &self.h_edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// The first invariant a decomposition breaks, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    #[error("uncovered edge {u}-{v}")]
    UncoveredEdge { u: usize, v: usize },
    #[error("doubly covered edge {u}-{v}")]
    DoublyCoveredEdge { u: usize, v: usize },
    #[error("vertex {vertex} has degree {degree} in H, above {bound}")]
    HDegree { vertex: usize, degree: usize, bound: usize },
    #[error("directed cycle {cycle:?}")]
    DirectedCycle { cycle: Vec<usize> },
    #[error("vertex {vertex} has out-degree {out_degree} in D, above {bound}")]
    OutDegree { vertex: usize, out_degree: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("decomposition references nonexistent edge {u}-{v}")]
    NonexistentEdge { u: usize, v: usize },
    #[error("{0}")]
    Violation(Violation),
}

impl VerifyError {
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            VerifyError::Violation(v) => Some(v),
            VerifyError::NonexistentEdge { .. } => None,
        }
    }
}

/// Checks edge coverage, the H degree bound, acyclicity of D and the
/// out-degree bound, in that order, reporting the first failure.
pub fn verify(g: &RotationGraph, dec: &OrientedDecomposition) -> Result<(), VerifyError> {
    let n = g.vertex_count();
    let exists = |u: usize, v: usize| u < n && v < n && g.has_edge(u, v);
    for &(u, v) in &dec.h_edges {
        if !exists(u, v) {
            return Err(VerifyError::NonexistentEdge { u, v });
        }
    }
    for &(u, v) in &dec.d_arcs {
        if !exists(u, v) {
            return Err(VerifyError::NonexistentEdge { u, v });
        }
    }

    let violation = |v| Err(VerifyError::Violation(v));
    for (u, v) in g.edges() {
        let covers = usize::from(dec.h_edges.contains(&(u, v)))
            + usize::from(dec.d_arcs.contains(&(u, v)))
            + usize::from(dec.d_arcs.contains(&(v, u)));
        match covers {
            0 => return violation(Violation::UncoveredEdge { u, v }),
            1 => {}
            _ => return violation(Violation::DoublyCoveredEdge { u, v }),
        }
    }

    let mut h_deg = vec![0usize; n];
    for &(u, v) in &dec.h_edges {
        h_deg[u] += 1;
        h_deg[v] += 1;
    }
    if let Some(vertex) = (0..n).find(|&v| h_deg[v] > dec.h) {
        return violation(Violation::HDegree { vertex, degree: h_deg[vertex], bound: dec.h });
    }

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(t, h) in &dec.d_arcs {
        out[t].push(h);
    }
    if let Some(cycle) = find_directed_cycle(&out) {
        return violation(Violation::DirectedCycle { cycle });
    }
    if let Some(vertex) = (0..n).find(|&v| out[v].len() > dec.d) {
        return violation(Violation::OutDegree { vertex, out_degree: out[vertex].len(), bound: dec.d });
    }
    Ok(())
}

/// Some directed cycle of the digraph given by out-lists, as a vertex
/// sequence starting from its smallest member.
fn find_directed_cycle(out: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = out.len();
    let mut mark = vec![Mark::New; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for s in 0..n {
        if mark[s] != Mark::New {
            continue;
        }
        mark[s] = Mark::Active;
        stack.push((s, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < out[v].len() {
                let w = out[v][*next];
                *next += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0));
                    }
                    Mark::Active => {
                        let start = stack.iter().position(|&(x, _)| x == w).unwrap();
                        let mut cycle: Vec<usize> = stack[start..].iter().map(|&(x, _)| x).collect();
                        let min = cycle.iter().enumerate().min_by_key(|&(_, &x)| x).unwrap().0;
                        cycle.rotate_left(min);
                        return Some(cycle);
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    None
}

/// A topological order of the arcs on `n` vertices (tails before heads),
/// or `None` when they contain a directed cycle.
pub fn topological_order(n: usize, arcs: &BTreeSet<(usize, usize)>) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(t, h) in arcs {
        out[t].push(h);
        indeg[h] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}
