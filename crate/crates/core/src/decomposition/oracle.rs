use std::collections::BTreeSet;

use thiserror::Error;

use super::degeneracy::{adjacency_without, degeneracy_order_adj, orientation_from_order};
use super::OrientedDecomposition;
use crate::embedding::RotationGraph;

pub const MAX_ORACLE_H: usize = 2;
pub const DEFAULT_EDGE_BUDGET: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle supports h <= {MAX_ORACLE_H}, got h = {0}")]
    HTooLarge(usize),
    #[error("graph has {edges} edges, above the oracle edge budget of {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
}

/// Exact decision by exhaustive search over the H part.
///
/// Candidate edge sets `H` with maximum degree at most `h` are visited in
/// lexicographic order of their 0/1 indicator vectors over the sorted edge
/// list (edges left out of `H` first). The first `H` whose complement is
/// `d`-degenerate yields the witness, oriented by its degeneracy order.
pub fn oracle_decide(
    g: &RotationGraph,
    d: usize,
    h: usize,
    edge_budget: usize,
) -> Result<Option<OrientedDecomposition>, OracleError> {
    if h > MAX_ORACLE_H {
        return Err(OracleError::HTooLarge(h));
    }
    let edges = g.edges();
    if edges.len() > edge_budget {
        return Err(OracleError::BudgetExceeded { edges: edges.len(), budget: edge_budget });
    }
    let mut search = Search {
        g,
        d,
        h,
        edges: &edges,
        max_d_edges: max_degenerate_edges(g.vertex_count(), d),
        h_deg: vec![0; g.vertex_count()],
        chosen: BTreeSet::new(),
    };
    let Some(h_edges) = search.run(0, 0) else {
        return Ok(None);
    };
    let adj = adjacency_without(g, &h_edges);
    let cert = degeneracy_order_adj(&adj);
    let d_arcs = orientation_from_order(&adj, &cert.order).expect("certificate order is a permutation");
    Ok(Some(OrientedDecomposition { d, h, h_edges, d_arcs }))
}

/// Largest edge count of a `d`-degenerate graph on `n` vertices.
fn max_degenerate_edges(n: usize, d: usize) -> usize {
    (0..n).map(|i| i.min(d)).sum()
}

struct Search<'a> {
    g: &'a RotationGraph,
    d: usize,
    h: usize,
    edges: &'a [(usize, usize)],
    max_d_edges: usize,
    h_deg: Vec<usize>,
    chosen: BTreeSet<(usize, usize)>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, excluded: usize) -> Option<BTreeSet<(usize, usize)>> {
        if excluded > self.max_d_edges {
            return None;
        }
        if i == self.edges.len() {
            let adj = adjacency_without(self.g, &self.chosen);
            return (degeneracy_order_adj(&adj).value <= self.d).then(|| self.chosen.clone());
        }
        if let Some(found) = self.run(i + 1, excluded + 1) {
            return Some(found);
        }
        let (u, v) = self.edges[i];
        if self.h_deg[u] < self.h && self.h_deg[v] < self.h {
            self.h_deg[u] += 1;
            self.h_deg[v] += 1;
            self.chosen.insert((u, v));
            let found = self.run(i + 1, excluded);
            self.chosen.remove(&(u, v));
            self.h_deg[u] -= 1;
            self.h_deg[v] -= 1;
            return found;
        }
        None
    }
}
