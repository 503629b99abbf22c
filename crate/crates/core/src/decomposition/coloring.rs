use thiserror::Error;

use super::{topological_order, verify, OrientedDecomposition, VerifyError};
use crate::embedding::RotationGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("invalid decomposition: {0}")]
    Invalid(#[from] VerifyError),
    #[error("coloring needs h <= 1, got h = {0}")]
    HTooLarge(usize),
}

/// Colors from `0..=d`, assigned sinks first: each vertex avoids the colors
/// of its out-neighbors. Same-colored neighbors can then only be joined by
/// H edges, so with `h <= 1` every vertex has at most one of them.
pub fn defective_coloring(g: &RotationGraph, dec: &OrientedDecomposition) -> Result<Vec<usize>, ColoringError> {
    if dec.h > 1 {
        return Err(ColoringError::HTooLarge(dec.h));
    }
    verify(g, dec)?;
    let n = g.vertex_count();
    let order = topological_order(n, &dec.d_arcs).expect("verified decomposition is acyclic");
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(t, h) in &dec.d_arcs {
        out[t].push(h);
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let used: Vec<usize> = out[v].iter().map(|&w| color[w]).collect();
        color[v] = (0..=dec.d).find(|c| !used.contains(c)).expect("out-degree is at most d");
    }
    Ok(color)
}

/// Largest number of same-colored neighbors over all vertices.
pub fn defect(g: &RotationGraph, colors: &[usize]) -> usize {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().filter(|&&w| colors[w] == colors[v]).count())
        .max()
        .unwrap_or(0)
}
