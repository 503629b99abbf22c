use serde::Serialize;
use thiserror::Error;

use super::{apply_reduction, find_config, ConfigMatch, LabelMap, LemmaId, ReduceError, Theorem};
use crate::decomposition::{oracle_decide, OracleError, OrientedDecomposition, DEFAULT_EDGE_BUDGET};
use crate::embedding::RotationGraph;
use crate::structure::{in_class_g, in_class_h};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Graphs with at most this many vertices go straight to the oracle.
    pub threshold: usize,
    pub edge_budget: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions { threshold: 10, edge_budget: DEFAULT_EDGE_BUDGET }
    }
}

/// One reduction: the configuration found, in original vertex ids, and the
/// number of vertices of the graph it was found in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub lemma: LemmaId,
    pub map: LabelMap,
    pub vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReductionOutcome {
    Decomposed { decomposition: OrientedDecomposition },
    /// The oracle proved that the residual graph (original ids) has no
    /// decomposition; neither has any supergraph.
    NotDecomposable { residual: Vec<usize> },
    /// No configuration applies and the residual is too large for the oracle.
    Diagnostic { residual: Vec<usize>, edges: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub theorem: Theorem,
    /// Whether the input satisfies the theorem's cycle hypotheses.
    pub in_class: bool,
    pub nonnegative_characteristic: bool,
    pub trace: Vec<TraceStep>,
    pub outcome: ReductionOutcome,
}

impl Reduction {
    pub fn decomposition(&self) -> Option<&OrientedDecomposition> {
        match &self.outcome {
            ReductionOutcome::Decomposed { decomposition } => Some(decomposition),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

/// Deletes configurations until the graph is small or irreducible, decides
/// the remainder with the oracle, then extends the decomposition back
/// through every deletion in reverse.
pub fn decompose_by_reduction(
    g: &RotationGraph,
    theorem: Theorem,
    options: ReductionOptions,
) -> Result<Reduction, DecomposeError> {
    let in_class = match theorem {
        Theorem::T0 => in_class_g(g),
        Theorem::T1 => in_class_h(g),
    };
    let nonnegative_characteristic = g.summary().is_nonnegative();

    // each level: the graph, its original ids, and the match found in it
    let mut levels: Vec<(RotationGraph, Vec<usize>, ConfigMatch)> = Vec::new();
    let mut trace = Vec::new();
    let mut current = g.clone();
    let mut ids: Vec<usize> = (0..g.vertex_count()).collect();
    while current.vertex_count() > options.threshold {
        let Some(m) = find_config(&current, theorem) else { break };
        trace.push(TraceStep {
            lemma: m.lemma,
            map: LabelMap(m.map.0.iter().map(|&(l, v)| (l, ids[v])).collect()),
            vertices: current.vertex_count(),
        });
        let (next, kept) = current.remove_vertices_mapped(&m.deleted);
        let next_ids = kept.iter().map(|&v| ids[v]).collect();
        levels.push((current, ids, m));
        current = next;
        ids = next_ids;
    }

    let finish = |outcome| Reduction { theorem, in_class, nonnegative_characteristic, trace, outcome };
    if current.vertex_count() > options.threshold && current.edge_count() > options.edge_budget {
        return Ok(finish(ReductionOutcome::Diagnostic { residual: ids, edges: current.edge_count() }));
    }
    let Some(mut dec) = oracle_decide(&current, theorem.d(), theorem.h(), options.edge_budget)? else {
        return Ok(finish(ReductionOutcome::NotDecomposable { residual: ids }));
    };
    for (graph, _, m) in levels.iter().rev() {
        dec = apply_reduction(graph, m, &dec)?;
    }
    Ok(finish(ReductionOutcome::Decomposed { decomposition: dec }))
}
