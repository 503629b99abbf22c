use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::RotationGraph;

/// A vertex order in which every vertex has at most `value` neighbors
/// placed before it.
///
/// `order` is the construction order: the reverse of minimum-degree
/// peeling, so the last vertex peeled comes first. The back-degree of a
/// vertex (neighbors earlier in `order`) equals its residual degree at the
/// moment it was peeled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyCertificate {
    pub order: Vec<usize>,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order is not a permutation of the {n} vertices")]
pub struct OrderError {
    pub n: usize,
}

pub fn degeneracy_order(g: &RotationGraph) -> DegeneracyCertificate {
    let adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    degeneracy_order_adj(&adj)
}

/// Minimum-degree peeling over adjacency lists, ties broken by smallest id.
pub fn degeneracy_order_adj(adj: &[Vec<usize>]) -> DegeneracyCertificate {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut peeled = Vec::with_capacity(n);
    let mut value = 0;
    while let Some((d, v)) = queue.pop_first() {
        value = value.max(d);
        removed[v] = true;
        peeled.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    peeled.reverse();
    DegeneracyCertificate { order: peeled, value }
}

/// Adjacency lists of `g` with the given undirected edges (stored `u < v`)
/// left out.
pub fn adjacency_without(g: &RotationGraph, removed: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&v| !removed.contains(&(u.min(v), u.max(v))))
                .collect()
        })
        .collect()
}

/// Orients every edge from its endpoint later in `order` to the earlier one.
/// For a certificate order this is acyclic with out-degree equal to the
/// back-degree, hence maximum out-degree equal to the certificate value.
pub fn orientation_from_order(adj: &[Vec<usize>], order: &[usize]) -> Result<BTreeSet<(usize, usize)>, OrderError> {
    let n = adj.len();
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(OrderError { n });
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(OrderError { n });
        }
        pos[v] = i;
    }
    let mut arcs = BTreeSet::new();
    for (u, ns) in adj.iter().enumerate() {
        for &v in ns {
            if pos[u] > pos[v] {
                arcs.insert((u, v));
            }
        }
    }
    Ok(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::topological_order;
    use crate::generate::{generate, Kind};

    fn adj_of(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Degeneracy as the maximum, over all vertex subsets, of the minimum
    /// induced degree.
    fn brute_degeneracy(adj: &[Vec<usize>]) -> usize {
        let n = adj.len();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let min = (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| adj[v].iter().filter(|&&w| mask >> w & 1 == 1).count())
                .min()
                .unwrap();
            best = best.max(min);
        }
        best
    }

    fn max_out(n: usize, arcs: &BTreeSet<(usize, usize)>) -> usize {
        let mut out = vec![0; n];
        for &(t, _) in arcs {
            out[t] += 1;
        }
        out.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn forest_and_cycle() {
        let forest = adj_of(6, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(degeneracy_order_adj(&forest).value, 1);
        let c5 = generate(Kind::Cycle { n: 5 }).unwrap();
        assert_eq!(degeneracy_order(&c5).value, 2);
    }

    #[test]
    fn k5_minus_matching() {
        let k5 = generate(Kind::Complete { n: 5 }).unwrap();
        let removed: BTreeSet<_> = [(0, 1), (2, 3)].into_iter().collect();
        let adj = adjacency_without(&k5, &removed);
        let cert = degeneracy_order_adj(&adj);
        assert_eq!(cert.value, 3);
        assert_eq!(brute_degeneracy(&adj), 3);
    }

    #[test]
    fn path_orientations() {
        // a=0, b=1, c=2
        let path = adj_of(3, &[(0, 1), (1, 2)]);
        let arcs = orientation_from_order(&path, &[0, 1, 2]).unwrap();
        assert_eq!(arcs, [(1, 0), (2, 1)].into_iter().collect());
        assert_eq!(max_out(3, &arcs), 1);
        let arcs = orientation_from_order(&path, &[0, 2, 1]).unwrap();
        assert_eq!(arcs, [(1, 0), (1, 2)].into_iter().collect());
        assert_eq!(max_out(3, &arcs), 2);
        assert_eq!(orientation_from_order(&path, &[0, 0, 1]), Err(OrderError { n: 3 }));
        assert_eq!(orientation_from_order(&path, &[0, 1]), Err(OrderError { n: 3 }));
    }

    #[test]
    fn certificate_orientation_is_acyclic_and_tight() {
        for kind in [Kind::Cycle { n: 5 }, Kind::Complete { n: 4 }, Kind::Prism { n: 5 }, Kind::Wheel { n: 6 }] {
            let g = generate(kind).unwrap();
            let cert = degeneracy_order(&g);
            let adj = adjacency_without(&g, &BTreeSet::new());
            let arcs = orientation_from_order(&adj, &cert.order).unwrap();
            assert_eq!(arcs.len(), g.edge_count());
            assert!(topological_order(g.vertex_count(), &arcs).is_some());
            assert_eq!(max_out(g.vertex_count(), &arcs), cert.value);
            assert_eq!(cert.value, brute_degeneracy(&adj));
        }
        let k4 = generate(Kind::Complete { n: 4 }).unwrap();
        assert_eq!(degeneracy_order(&k4).value, 3);
    }
}
