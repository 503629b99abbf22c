//! The five rule tables.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::reducer::Theorem;
use crate::structure::BadMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSetId {
    T0_13,
    T0_2,
    T1_1,
    T1_2,
    T1_3,
}

impl RuleSetId {
    pub const ALL: [RuleSetId; 5] = [RuleSetId::T0_13, RuleSetId::T0_2, RuleSetId::T1_1, RuleSetId::T1_2, RuleSetId::T1_3];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleSetId::T0_13 => "T0_13",
            RuleSetId::T0_2 => "T0_2",
            RuleSetId::T1_1 => "T1_1",
            RuleSetId::T1_2 => "T1_2",
            RuleSetId::T1_3 => "T1_3",
        }
    }

    /// The decomposition whose configurations explain negative charges.
    pub fn theorem(self) -> Theorem {
        match self {
            RuleSetId::T0_13 | RuleSetId::T0_2 => Theorem::T0,
            _ => Theorem::T1,
        }
    }
}

impl fmt::Display for RuleSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleSetId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleSetId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown ruleset `{s}` (expected one of T0_13, T0_2, T1_1, T1_2, T1_3)"))
    }
}

impl Serialize for RuleSetId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Inclusive degree interval; `max = None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degrees {
    pub min: usize,
    pub max: Option<usize>,
}

impl Degrees {
    pub const fn exactly(d: usize) -> Self {
        Degrees { min: d, max: Some(d) }
    }

    pub const fn at_least(d: usize) -> Self {
        Degrees { min: d, max: None }
    }

    pub fn contains(self, d: usize) -> bool {
        d >= self.min && self.max.is_none_or(|m| d <= m)
    }
}

/// Who sends charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sender {
    Vertex(Degrees),
    Face(Degrees),
}

/// Which 3-vertices a face pays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreeVertexKind {
    Any,
    Good(BadMode),
    Bad(BadMode),
}

/// Who receives charge from a sender.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Receiver {
    /// Each incident 3-face whose sorted boundary degrees fall in the given
    /// intervals componentwise; `None` accepts every 3-face.
    Triangle(Option<[Degrees; 3]>),
    /// Each incident vertex.
    Vertex,
    /// Each incident 3-vertex of the given kind.
    ThreeVertex(ThreeVertexKind),
    /// Each 3-face across a boundary edge, once per shared edge.
    AdjacentTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub sender: Sender,
    pub receiver: Receiver,
    pub amount: Rational64,
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

const FOUR: Degrees = Degrees::exactly(4);
const FIVE: Degrees = Degrees::exactly(5);
const SIX: Degrees = Degrees::exactly(6);
const FIVE_PLUS: Degrees = Degrees::at_least(5);
const SIX_PLUS: Degrees = Degrees::at_least(6);
const SEVEN_PLUS: Degrees = Degrees::at_least(7);

fn rule(id: &'static str, sender: Sender, receiver: Receiver, amount: Rational64) -> Rule {
    Rule { id, sender, receiver, amount }
}

fn triangle(profile: [Degrees; 3]) -> Receiver {
    Receiver::Triangle(Some(profile))
}

pub fn rules(id: RuleSetId) -> Vec<Rule> {
    use Receiver::{AdjacentTriangle, ThreeVertex, Vertex};
    use Sender::{Face as F, Vertex as V};
    let any_triangle = Receiver::Triangle(None);
    match id {
        RuleSetId::T0_13 => vec![
            rule("R1", V(FIVE), triangle([FIVE_PLUS; 3]), r(1, 3)),
            rule("R1", V(FIVE), triangle([FOUR, FIVE, FIVE]), r(1, 2)),
            rule("R1", V(FIVE), triangle([FOUR, FIVE, SIX_PLUS]), r(5, 12)),
            rule("R2", V(SIX_PLUS), any_triangle, r(7, 12)),
            rule("R3", F(FIVE_PLUS), Vertex, r(11, 60)),
        ],
        RuleSetId::T0_2 => vec![
            rule("R1", V(FIVE), triangle([FIVE_PLUS; 3]), r(1, 3)),
            rule("R1", V(FIVE), triangle([FOUR, FIVE, FIVE]), r(1, 2)),
            rule("R1", V(FIVE), triangle([FOUR, FIVE, SIX]), r(5, 12)),
            rule("R1", V(FIVE), triangle([FOUR, FIVE, SEVEN_PLUS]), r(61, 150)),
            rule("R2", V(SIX), any_triangle, r(7, 12)),
            rule("R3", V(SEVEN_PLUS), any_triangle, r(89, 150)),
            rule("R4", F(FIVE), Vertex, r(11, 60)),
            rule("R5", F(SIX_PLUS), Vertex, r(49, 150)),
        ],
        RuleSetId::T1_1 => vec![rule("R1", F(FIVE_PLUS), ThreeVertex(ThreeVertexKind::Any), r(1, 3))],
        RuleSetId::T1_2 => vec![
            rule("R1", F(FIVE_PLUS), ThreeVertex(ThreeVertexKind::Good(BadMode::FourFace)), r(1, 3)),
            rule("R1", F(FIVE_PLUS), ThreeVertex(ThreeVertexKind::Bad(BadMode::FourFace)), r(1, 2)),
        ],
        RuleSetId::T1_3 => vec![
            rule("R1", F(FIVE_PLUS), ThreeVertex(ThreeVertexKind::Good(BadMode::ThreeFace)), r(1, 3)),
            rule("R1", F(FIVE_PLUS), ThreeVertex(ThreeVertexKind::Bad(BadMode::ThreeFace)), r(1, 2)),
            rule("R1", F(FIVE_PLUS), AdjacentTriangle, r(1, 3)),
        ],
    }
}
