//! Exact-rational discharging: initial charges, rule application and audits.
//!
//! Every vertex and face `x` starts with charge `d(x) - 4`; the total is
//! `-4` times the Euler characteristic. Rules move charge between elements
//! without changing the total. Incidences count once per corner
//! (vertex-face) or per shared edge (face-face), with multiplicity.

mod rules;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::embedding::RotationGraph;
use crate::reducer::{find_config, find_config_touching, ConfigMatch, LemmaId};
use crate::structure::{classify_3vertex, ThreeVertexClass};

pub use rules::{rules, Degrees, Receiver, Rule, RuleSetId, Sender, ThreeVertexKind};

/// Serializes a rational as `"p/q"`, always with an explicit denominator.
pub fn ratio_string(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_ratio<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

fn ser_ratios<S: Serializer>(rs: &[Rational64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(ratio_string))
}

/// A vertex or a face, printed as `v<id>` or `f<id>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    #[serde(serialize_with = "ser_ratio")]
    pub amount: Rational64,
    pub rule: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    #[serde(serialize_with = "ser_ratios")]
    pub initial_vertices: Vec<Rational64>,
    #[serde(serialize_with = "ser_ratios")]
    pub initial_faces: Vec<Rational64>,
    pub transfers: Vec<Transfer>,
    #[serde(serialize_with = "ser_ratios")]
    pub final_vertices: Vec<Rational64>,
    #[serde(serialize_with = "ser_ratios")]
    pub final_faces: Vec<Rational64>,
}

impl ChargeLedger {
    pub fn initial(&self, x: Element) -> Rational64 {
        match x {
            Element::Vertex(v) => self.initial_vertices[v],
            Element::Face(f) => self.initial_faces[f],
        }
    }

    pub fn final_charge(&self, x: Element) -> Rational64 {
        match x {
            Element::Vertex(v) => self.final_vertices[v],
            Element::Face(f) => self.final_faces[f],
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let faces = self.final_faces.len();
        (0..self.final_vertices.len())
            .map(Element::Vertex)
            .chain((0..faces).map(Element::Face))
    }

    pub fn total_initial(&self) -> Rational64 {
        self.initial_vertices.iter().chain(&self.initial_faces).copied().sum()
    }

    pub fn total_final(&self) -> Rational64 {
        self.final_vertices.iter().chain(&self.final_faces).copied().sum()
    }

    fn final_mut(&mut self, x: Element) -> &mut Rational64 {
        match x {
            Element::Vertex(v) => &mut self.final_vertices[v],
            Element::Face(f) => &mut self.final_faces[f],
        }
    }

    fn push(&mut self, t: Transfer) {
        *self.final_mut(t.from) -= t.amount;
        *self.final_mut(t.to) += t.amount;
        self.transfers.push(t);
    }
}

/// `d(x) - 4` for every vertex and face, with no transfers.
pub fn initial_charges(g: &RotationGraph) -> ChargeLedger {
    let charge = |d: usize| Rational64::from_integer(d as i64 - 4);
    let initial_vertices: Vec<Rational64> = (0..g.vertex_count()).map(|v| charge(g.degree(v))).collect();
    let initial_faces: Vec<Rational64> = g.faces().faces.iter().map(|f| charge(f.degree())).collect();
    ChargeLedger {
        final_vertices: initial_vertices.clone(),
        final_faces: initial_faces.clone(),
        initial_vertices,
        initial_faces,
        transfers: Vec::new(),
    }
}

fn triangle_matches(g: &RotationGraph, f: usize, profile: &Option<[Degrees; 3]>) -> bool {
    let face = g.faces().face(f);
    if face.degree() != 3 {
        return false;
    }
    let Some(profile) = profile else { return true };
    let mut degs: Vec<usize> = face.vertices().map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    degs.iter().zip(profile).all(|(&d, range)| range.contains(d))
}

fn three_vertex_matches(g: &RotationGraph, v: usize, kind: ThreeVertexKind) -> bool {
    let class = |mode| classify_3vertex(g, v, mode).expect("vertex exists");
    match kind {
        ThreeVertexKind::Any => g.degree(v) == 3,
        ThreeVertexKind::Good(mode) => class(mode) == ThreeVertexClass::Good,
        ThreeVertexKind::Bad(mode) => class(mode) == ThreeVertexClass::Bad,
    }
}

/// Applies every rule of the set once per qualifying incidence.
pub fn apply_rules(g: &RotationGraph, ruleset: RuleSetId) -> ChargeLedger {
    let mut ledger = initial_charges(g);
    let faces = g.faces();
    for rule in rules(ruleset) {
        let transfer = |from, to| Transfer { from, to, amount: rule.amount, rule: rule.id };
        match (rule.sender, rule.receiver) {
            (Sender::Vertex(degs), Receiver::Triangle(profile)) => {
                for v in (0..g.vertex_count()).filter(|&v| degs.contains(g.degree(v))) {
                    for &f in faces.incident_faces(v).unwrap() {
                        if triangle_matches(g, f, &profile) {
                            ledger.push(transfer(Element::Vertex(v), Element::Face(f)));
                        }
                    }
                }
            }
            (Sender::Face(degs), Receiver::Vertex | Receiver::ThreeVertex(_)) => {
                for v in 0..g.vertex_count() {
                    if let Receiver::ThreeVertex(kind) = rule.receiver {
                        if !three_vertex_matches(g, v, kind) {
                            continue;
                        }
                    }
                    for &f in faces.incident_faces(v).unwrap() {
                        if degs.contains(faces.face(f).degree()) {
                            ledger.push(transfer(Element::Face(f), Element::Vertex(v)));
                        }
                    }
                }
            }
            (Sender::Face(degs), Receiver::AdjacentTriangle) => {
                for f in (0..faces.len()).filter(|&f| degs.contains(faces.face(f).degree())) {
                    for pos in 0..faces.face(f).degree() {
                        let t = faces.across(f, pos);
                        if t != f && faces.face(t).degree() == 3 {
                            ledger.push(transfer(Element::Face(f), Element::Face(t)));
                        }
                    }
                }
            }
            (sender, receiver) => unreachable!("no rule pairs {sender:?} with {receiver:?}"),
        }
    }
    ledger
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeElement {
    pub element: Element,
    #[serde(rename = "final", serialize_with = "ser_ratio")]
    pub final_charge: Rational64,
    pub transfers: Vec<Transfer>,
    /// First configuration (detector order) containing the vertex, or a
    /// boundary vertex of the face.
    pub explained_by: Option<ConfigMatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub ruleset: RuleSetId,
    pub characteristic: i64,
    #[serde(serialize_with = "ser_ratio")]
    pub total_initial: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub total_final: Rational64,
    /// Totals agree with each other and with `-4` times the characteristic,
    /// and every final charge matches its itemized transfers.
    pub conservation: bool,
    pub negatives: Vec<NegativeElement>,
    /// Number of elements ending strictly positive.
    pub positive: usize,
    /// First configuration found anywhere in the graph.
    pub reducible: Option<ConfigMatch>,
}

impl AuditReport {
    pub fn unexplained(&self) -> impl Iterator<Item = &NegativeElement> {
        self.negatives.iter().filter(|n| n.explained_by.is_none())
    }

    pub fn negative_lemmas(&self) -> BTreeSet<LemmaId> {
        self.negatives.iter().filter_map(|n| n.explained_by.as_ref().map(|m| m.lemma)).collect()
    }
}

/// Checks that final charges follow from the transfers, independently of
/// how the ledger was accumulated.
fn ledger_consistent(ledger: &ChargeLedger) -> bool {
    let mut recomputed = initial_ledger_copy(ledger);
    for t in &ledger.transfers {
        *recomputed.final_mut(t.from) -= t.amount;
        *recomputed.final_mut(t.to) += t.amount;
    }
    recomputed.final_vertices == ledger.final_vertices && recomputed.final_faces == ledger.final_faces
}

fn initial_ledger_copy(ledger: &ChargeLedger) -> ChargeLedger {
    ChargeLedger {
        initial_vertices: ledger.initial_vertices.clone(),
        initial_faces: ledger.initial_faces.clone(),
        transfers: Vec::new(),
        final_vertices: ledger.initial_vertices.clone(),
        final_faces: ledger.initial_faces.clone(),
    }
}

pub fn audit(g: &RotationGraph, ruleset: RuleSetId) -> AuditReport {
    let ledger = apply_rules(g, ruleset);
    let characteristic = g.euler_characteristic();
    let expected = Rational64::from_integer(-4 * characteristic);
    let conservation = ledger.total_initial() == expected
        && ledger.total_final() == expected
        && ledger_consistent(&ledger);
    let theorem = ruleset.theorem();

    let negatives = ledger
        .elements()
        .filter(|&x| ledger.final_charge(x).is_negative())
        .map(|x| {
            let touched: BTreeSet<usize> = match x {
                Element::Vertex(v) => BTreeSet::from([v]),
                Element::Face(f) => g.faces().face(f).vertices().collect(),
            };
            NegativeElement {
                element: x,
                final_charge: ledger.final_charge(x),
                transfers: ledger.transfers.iter().filter(|t| t.from == x || t.to == x).cloned().collect(),
                explained_by: find_config_touching(g, theorem, |hosts| hosts.iter().any(|v| touched.contains(v))),
            }
        })
        .collect();
    let positive = ledger.elements().filter(|&x| ledger.final_charge(x) > Rational64::zero()).count();
    AuditReport {
        ruleset,
        characteristic,
        total_initial: ledger.total_initial(),
        total_final: ledger.total_final(),
        conservation,
        negatives,
        positive,
        reducible: find_config(g, theorem),
    }
}
