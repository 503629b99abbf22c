//! Canonical embedded test instances.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::embedding::{Dart, GraphError, RotationGraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kind {
    Cycle { n: usize },
    Path { n: usize },
    /// Hub plus a rim of `n` vertices.
    Wheel { n: usize },
    Prism { n: usize },
    PlanarGrid { m: usize, n: usize },
    ToroidalGrid { m: usize, n: usize },
    /// Honeycomb patch of `m` rows by `n` columns of hexagons.
    HexGrid { m: usize, n: usize },
    Complete { n: usize },
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Cycle { .. } => "cycle",
            Kind::Path { .. } => "path",
            Kind::Wheel { .. } => "wheel",
            Kind::Prism { .. } => "prism",
            Kind::PlanarGrid { .. } => "planar_grid",
            Kind::ToroidalGrid { .. } => "toroidal_grid",
            Kind::HexGrid { .. } => "hex_grid",
            Kind::Complete { .. } => "complete",
        }
    }

    /// Builds a kind from its name and numeric parameters, e.g.
    /// `("toroidal_grid", [3, 3])`.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Kind, GraphError> {
        let one = |params: &[usize]| match params {
            [n] => Ok(*n),
            _ => Err(GraphError::OutOfRange(format!("{name} takes one parameter"))),
        };
        let two = |params: &[usize]| match params {
            [m, n] => Ok((*m, *n)),
            _ => Err(GraphError::OutOfRange(format!("{name} takes two parameters"))),
        };
        Ok(match name {
            "cycle" => Kind::Cycle { n: one(params)? },
            "path" => Kind::Path { n: one(params)? },
            "wheel" => Kind::Wheel { n: one(params)? },
            "prism" => Kind::Prism { n: one(params)? },
            "complete" => Kind::Complete { n: one(params)? },
            "planar_grid" => {
                let (m, n) = two(params)?;
                Kind::PlanarGrid { m, n }
            }
            "toroidal_grid" => {
                let (m, n) = two(params)?;
                Kind::ToroidalGrid { m, n }
            }
            "hex_grid" => {
                let (m, n) = two(params)?;
                Kind::HexGrid { m, n }
            }
            other => return Err(GraphError::OutOfRange(format!("unknown generator `{other}`"))),
        })
    }

    /// Whether the generator produces a sphere embedding.
    pub fn is_planar(&self) -> bool {
        match self {
            Kind::ToroidalGrid { .. } => false,
            Kind::Complete { n } => *n <= 4,
            _ => true,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Cycle { n }
            | Kind::Path { n }
            | Kind::Wheel { n }
            | Kind::Prism { n }
            | Kind::Complete { n } => write!(f, "{} {n}", self.name()),
            Kind::PlanarGrid { m, n } | Kind::ToroidalGrid { m, n } | Kind::HexGrid { m, n } => {
                write!(f, "{} {m} {n}", self.name())
            }
        }
    }
}

impl FromStr for Kind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut it = s.split_whitespace();
        let name = it.next().ok_or_else(|| GraphError::OutOfRange("empty generator description".into()))?;
        let params = it
            .map(|p| p.parse::<usize>().map_err(|_| GraphError::OutOfRange(format!("bad parameter `{p}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Kind::from_parts(name, &params)
    }
}

fn at_least(name: &str, value: usize, min: usize) -> Result<(), GraphError> {
    if value < min {
        Err(GraphError::OutOfRange(format!("{name} needs parameter >= {min}, got {value}")))
    } else {
        Ok(())
    }
}

fn polar(r: f64, k: usize, n: usize, phase: f64) -> (f64, f64) {
    let t = TAU * k as f64 / n as f64 + phase;
    (r * t.cos(), r * t.sin())
}

pub fn generate(kind: Kind) -> Result<RotationGraph, GraphError> {
    match kind {
        Kind::Cycle { n } => {
            at_least("cycle", n, 3)?;
            let pts: Vec<_> = (0..n).map(|k| polar(1.0, k, n, 0.0)).collect();
            let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
            RotationGraph::from_planar_drawing(&pts, &edges)
        }
        Kind::Path { n } => {
            at_least("path", n, 1)?;
            let pts: Vec<_> = (0..n).map(|k| (k as f64, 0.0)).collect();
            let edges: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
            RotationGraph::from_planar_drawing(&pts, &edges)
        }
        Kind::Wheel { n } => {
            at_least("wheel", n, 3)?;
            let mut pts = vec![(0.0, 0.0)];
            pts.extend((0..n).map(|k| polar(1.0, k, n, 0.0)));
            let mut edges: Vec<_> = (1..=n).map(|k| (0, k)).collect();
            edges.extend((0..n).map(|k| (k + 1, (k + 1) % n + 1)));
            RotationGraph::from_planar_drawing(&pts, &edges)
        }
        Kind::Prism { n } => {
            at_least("prism", n, 3)?;
            let mut pts: Vec<_> = (0..n).map(|k| polar(1.0, k, n, 0.0)).collect();
            pts.extend((0..n).map(|k| polar(2.0, k, n, 0.0)));
            let mut edges = Vec::new();
            for k in 0..n {
                edges.push((k, (k + 1) % n));
                edges.push((n + k, n + (k + 1) % n));
                edges.push((k, n + k));
            }
            RotationGraph::from_planar_drawing(&pts, &edges)
        }
        Kind::PlanarGrid { m, n } => {
            at_least("planar_grid", m, 2)?;
            at_least("planar_grid", n, 2)?;
            let id = |r: usize, c: usize| r * n + c;
            let mut pts = Vec::with_capacity(m * n);
            let mut edges = Vec::new();
            for r in 0..m {
                for c in 0..n {
                    pts.push((c as f64, r as f64));
                    if c + 1 < n {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < m {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            RotationGraph::from_planar_drawing(&pts, &edges)
        }
        Kind::ToroidalGrid { m, n } => {
            at_least("toroidal_grid", m, 3)?;
            at_least("toroidal_grid", n, 3)?;
            let id = |r: usize, c: usize| (r % m) * n + (c % n);
            let rotations = (0..m * n)
                .map(|v| {
                    let (r, c) = (v / n, v % n);
                    [id(r, c + 1), id(r + 1, c), id(r, c + n - 1), id(r + m - 1, c)]
                        .into_iter()
                        .map(|to| Dart { to, sign: Sign::Pos })
                        .collect()
                })
                .collect();
            RotationGraph::from_rotations(rotations)
        }
        Kind::HexGrid { m, n } => {
            at_least("hex_grid", m, 1)?;
            at_least("hex_grid", n, 1)?;
            hex_grid(m, n)
        }
        Kind::Complete { n } => {
            if !(1..=6).contains(&n) {
                return Err(GraphError::OutOfRange(format!("complete needs 1 <= n <= 6, got {n}")));
            }
            if n <= 3 {
                let pts: Vec<_> = (0..n).map(|k| polar(1.0, k, n, 0.0)).collect();
                let edges: Vec<_> = pairs(n);
                RotationGraph::from_planar_drawing(&pts, &edges)
            } else if n == 4 {
                let mut pts: Vec<_> = (0..3).map(|k| polar(1.0, k, 3, 0.0)).collect();
                pts.push((0.0, 0.0));
                RotationGraph::from_planar_drawing(&pts, &pairs(4))
            } else {
                // K7 triangulates the torus with rotation i+1, i+3, i+2, i+6, i+4, i+5;
                // deleting vertices keeps the characteristic at 0.
                let k7 = (0..7)
                    .map(|i| {
                        [1, 3, 2, 6, 4, 5]
                            .into_iter()
                            .map(|o| Dart { to: (i + o) % 7, sign: Sign::Pos })
                            .collect()
                    })
                    .collect();
                let k7 = RotationGraph::from_rotations(k7)?;
                Ok(k7.remove_vertices(&(n..7).collect()))
            }
        }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Brick-wall drawing of the honeycomb: rows of bricks of width 2, pendant
/// corners trimmed.
fn hex_grid(m: usize, n: usize) -> Result<RotationGraph, GraphError> {
    let width = if m == 1 { 2 * n } else { 2 * n + 1 };
    let mut adj: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for y in 0..=m {
        for x in 0..=width {
            adj.entry((y, x)).or_default();
        }
    }
    let mut link = |a: (usize, usize), b: (usize, usize)| {
        adj.get_mut(&a).unwrap().push(b);
        adj.get_mut(&b).unwrap().push(a);
    };
    for y in 0..=m {
        for x in 0..=width {
            if x < width {
                link((y, x), (y, x + 1));
            }
            if y < m && (x + y) % 2 == 0 {
                link((y, x), (y + 1, x));
            }
        }
    }
    loop {
        let low: Vec<_> = adj.iter().filter(|(_, ns)| ns.len() <= 1).map(|(&k, _)| k).collect();
        if low.is_empty() {
            break;
        }
        for k in low {
            adj.remove(&k);
            for ns in adj.values_mut() {
                ns.retain(|&w| w != k);
            }
        }
    }
    let ids: BTreeMap<(usize, usize), usize> = adj.keys().enumerate().map(|(i, &k)| (k, i)).collect();
    let pts: Vec<(f64, f64)> = adj.keys().map(|&(y, x)| (x as f64, y as f64)).collect();
    let mut edges = Vec::new();
    for (&a, ns) in &adj {
        for &b in ns {
            if ids[&a] < ids[&b] {
                edges.push((ids[&a], ids[&b]));
            }
        }
    }
    RotationGraph::from_planar_drawing(&pts, &edges)
}
