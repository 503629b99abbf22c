//! Labeled configurations with their extension recipes.
//!
//! A configuration is matched in a host graph as a labeled subgraph whose
//! edges among the labeled vertices are exactly `matching` plus the
//! underlying edges of `arcs`. Each labeled vertex may have at most
//! `d - (internal out-degree)` further neighbors; those edges are oriented
//! away from the configuration when the recipe is applied.

use std::sync::OnceLock;

use super::{LemmaId, Theorem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub id: LemmaId,
    pub labels: Vec<&'static str>,
    /// H edges added by the recipe, as label indices.
    pub matching: Vec<(usize, usize)>,
    /// Internal arcs added by the recipe, as label indices.
    pub arcs: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// All internal edges (matching first, then arcs), unordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.matching.iter().chain(self.arcs.iter()).copied()
    }

    pub fn internal_degree(&self, i: usize) -> usize {
        self.edges().filter(|&(a, b)| a == i || b == i).count()
    }

    pub fn internal_out_degree(&self, i: usize) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == i).count()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges().any(|(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    /// Number of edges label `i` may have to vertices outside the
    /// configuration, or `None` when the recipe itself overloads it.
    pub fn budget(&self, i: usize, d: usize) -> Option<usize> {
        d.checked_sub(self.internal_out_degree(i))
    }
}

fn label_index(labels: &[&'static str], name: &str) -> usize {
    labels.iter().position(|l| *l == name).unwrap_or_else(|| panic!("unknown label {name}"))
}

/// Builds a pattern from `a-b` matching pairs and `a>b` arcs over label names.
fn pattern(id: LemmaId, labels: &'static str, matching: &str, arcs: &str) -> Pattern {
    let labels: Vec<&'static str> = labels.split_whitespace().collect();
    let pairs = |text: &str, sep: char| -> Vec<(usize, usize)> {
        text.split_whitespace()
            .map(|tok| {
                let (a, b) = tok.split_once(sep).unwrap();
                (label_index(&labels, a), label_index(&labels, b))
            })
            .collect()
    };
    let matching = pairs(matching, '-');
    let arcs = pairs(arcs, '>');
    Pattern { id, labels, matching, arcs }
}

const V11: &str = "v1 v2 v3 v4 v5 v6 v7 v8 v9 v10 v11";

/// The patterns for one theorem, in detector order.
pub fn patterns(theorem: Theorem) -> &'static [Pattern] {
    static T0: OnceLock<Vec<Pattern>> = OnceLock::new();
    static T1: OnceLock<Vec<Pattern>> = OnceLock::new();
    match theorem {
        Theorem::T0 => T0.get_or_init(|| build(theorem)),
        Theorem::T1 => T1.get_or_init(|| build(theorem)),
    }
}

fn build(theorem: Theorem) -> Vec<Pattern> {
    use LemmaId::*;
    match theorem {
        Theorem::T0 => vec![
            pattern(L1a, "v", "", ""),
            pattern(L1b, "u v", "u-v", ""),
            pattern(L2aCase1_545, "v v1 v2 v3", "v-v1 v2-v3", "v>v3 v2>v v2>v1"),
            pattern(L2aCase1_454, "v v1 v2 v3", "v1-v2 v-v3", "v>v2 v1>v v3>v2"),
            pattern(L2aCase2, "v v1 v2 v3 v4", "v1-v2 v3-v4", "v>v2 v>v4 v1>v v3>v"),
            pattern(L2b, "v v1 v2 v3 v4", "v1-v2 v3-v4", "v>v1 v>v3 v2>v v2>v3 v4>v"),
        ],
        Theorem::T1 => vec![
            pattern(L5a, "v", "", ""),
            pattern(L5b, "u v", "u-v", ""),
            pattern(L6, "v1 v2 v3 v4", "v1-v2 v3-v4", "v1>v4 v3>v2"),
            pattern(
                L7_1,
                V11,
                "v1-v5 v2-v3 v6-v7 v8-v9 v10-v11",
                "v1>v2 v1>v7 v2>v9 v3>v4 v3>v8 v4>v5 v5>v6 v8>v10 v11>v4",
            ),
            pattern(
                L7_2,
                V11,
                "v1-v5 v2-v3 v6-v7 v8-v9 v4-v11",
                "v1>v2 v1>v7 v2>v9 v3>v4 v3>v8 v4>v5 v5>v6 v8>v10 v10>v11",
            ),
            pattern(
                L7_3,
                V11,
                "v1-v5 v6-v7 v2-v11 v4-v8 v9-v10",
                "v1>v2 v1>v7 v2>v3 v3>v4 v3>v9 v4>v5 v5>v6 v9>v8 v11>v10",
            ),
            pattern(
                L7_4,
                V11,
                "v1-v5 v6-v7 v2-v11 v4-v8 v9-v10",
                "v1>v2 v1>v7 v2>v3 v3>v4 v3>v9 v4>v5 v5>v6 v9>v8 v10>v11",
            ),
            pattern(
                L7_5,
                "v1 v2 v3 v4 v5 v6 v7 v9",
                "v1-v2 v4-v5 v6-v7",
                "v1>v5 v1>v7 v2>v6 v2>v9 v3>v2 v3>v4 v7>v3 v7>v9",
            ),
            pattern(
                L7_6,
                "v1 v2 v3 v4 v5 v6 v7 v8 v9",
                "v1-v5 v3-v4 v6-v7 v8-v9",
                "v1>v2 v1>v7 v2>v6 v3>v2 v3>v9 v4>v8 v5>v4 v5>v9 v6>v5",
            ),
            pattern(
                L7_7,
                V11,
                "v2-v3 v4-v5 v6-v7 v8-v9 v10-v11",
                "v1>v5 v1>v7 v2>v1 v2>v6 v3>v4 v3>v9 v4>v8 v9>v10 v11>v2",
            ),
        ],
    }
}
