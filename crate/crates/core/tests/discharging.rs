mod common;

use common::*;
use ncdecomp::discharging::{rules, Element, Receiver, Sender, ThreeVertexKind};
use ncdecomp::{apply_rules, audit, initial_charges, Kind, RotationGraph, RuleSetId};
use num_rational::Rational64;

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn int(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// The amount of the first rule whose sender and receiver satisfy `pick`.
fn amount(id: RuleSetId, pick: impl Fn(&Sender, &Receiver) -> bool) -> Rational64 {
    rules(id).into_iter().find(|rule| pick(&rule.sender, &rule.receiver)).unwrap().amount
}

/// A pentagon `0..5` whose vertices 0 and 1 are 3-vertices sharing a
/// 4-face outside it; the other pentagon vertices get two pendants each.
fn pentagon_with_two_three_vertices() -> RotationGraph {
    let mut points = on_circle(1.0, &[0.0, 0.2, 0.4, 0.6, 0.8]);
    points.extend(on_circle(2.0, &[0.2, 0.0]));
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 0)];
    for (v, turn) in [(2, 0.4), (3, 0.6), (4, 0.8)] {
        for offset in [-0.02, 0.02] {
            let p = points.len();
            points.extend(on_circle(1.4, &[turn + offset]));
            edges.push((v, p));
        }
    }
    RotationGraph::from_planar_drawing(&points, &edges).unwrap()
}

fn face_with_boundary(g: &RotationGraph, mut boundary: Vec<usize>) -> usize {
    boundary.sort_unstable();
    (0..g.faces().len())
        .find(|&f| {
            let mut vs: Vec<usize> = g.faces().face(f).vertices().collect();
            vs.sort_unstable();
            vs == boundary
        })
        .unwrap()
}

#[test]
fn icosahedron_vertices_end_negative() {
    let ico = icosahedron();
    let ledger = apply_rules(&ico, RuleSetId::T0_13);
    for v in 0..12 {
        assert_eq!(ledger.final_charge(Element::Vertex(v)), r(-2, 3));
    }
    for f in 0..20 {
        assert_eq!(ledger.final_charge(Element::Face(f)), int(0));
    }
    let report = audit(&ico, RuleSetId::T0_13);
    assert!(report.conservation);
    assert_eq!(report.total_final, int(-8));
    assert_eq!(report.negatives.len(), 12);
    assert_eq!(report.unexplained().count(), 12);
    assert!(report.reducible.is_none());
    assert_eq!(report.negatives[0].transfers.len(), 5);
}

#[test]
fn bad_three_vertices_drain_a_pentagon_exactly() {
    let g = pentagon_with_two_three_vertices();
    assert_eq!(g.euler_characteristic(), 2);
    let f = face_with_boundary(&g, vec![0, 1, 2, 3, 4]);
    let bad = amount(RuleSetId::T1_2, |_, rec| {
        matches!(rec, Receiver::ThreeVertex(k) if matches!(k, ThreeVertexKind::Bad(_)))
    });
    assert_eq!(bad, r(1, 2));
    assert_eq!(apply_rules(&g, RuleSetId::T1_2).final_charge(Element::Face(f)), int(0));
    assert_eq!(apply_rules(&g, RuleSetId::T1_1).final_charge(Element::Face(f)), r(1, 3));
    assert_eq!(apply_rules(&g, RuleSetId::T1_3).final_charge(Element::Face(f)), r(1, 3));
    let quad = face_with_boundary(&g, vec![0, 1, 5, 6]);
    assert_eq!(apply_rules(&g, RuleSetId::T1_2).final_charge(Element::Face(quad)), int(0));
}

#[test]
fn faces_pay_adjacent_triangles_once_per_edge() {
    // the rim face of a 5-wheel borders five triangles and five 3-vertices
    let g = build(Kind::Wheel { n: 5 });
    let rim = face_with_boundary(&g, vec![1, 2, 3, 4, 5]);
    let ledger = apply_rules(&g, RuleSetId::T1_3);
    assert_eq!(ledger.final_charge(Element::Face(rim)), int(1) - r(5, 3) - r(5, 2));
    let to_triangles = ledger.transfers.iter().filter(|t| t.from == Element::Face(rim) && t.to != Element::Vertex(0));
    assert_eq!(to_triangles.count(), 10);
    let report = audit(&g, RuleSetId::T1_3);
    assert!(report.conservation);
    assert!(report.unexplained().next().is_none());
}

#[test]
fn triangle_profiles_in_the_anchor_gadgets() {
    use Corner::*;
    // hub 0 is a 5-vertex; its (4,5,7) triangle ends at exactly zero
    let g = hub(&[5, 4, 6, 4, 7], &[Triangle, Triangle, Quad, Triangle, Open]);
    let ledger = apply_rules(&g, RuleSetId::T0_2);
    let f457 = face_with_boundary(&g, vec![0, 4, 5]);
    assert_eq!(ledger.final_charge(Element::Face(f457)), int(0));
    let f455 = face_with_boundary(&g, vec![0, 1, 2]);
    assert_eq!(ledger.final_charge(Element::Face(f455)), int(0));
    // a 6-vertex on three triangles and three 4-faces keeps 2 - 3 * 7/12
    let six = hub(&[3, 3, 3, 3, 3, 3], &[Triangle, Triangle, Triangle, Quad, Quad, Quad]);
    assert_eq!(corner_degrees(&six, 0).iter().filter(|&&d| d == 3).count(), 3);
    assert_eq!(apply_rules(&six, RuleSetId::T0_2).final_charge(Element::Vertex(0)), int(2) - r(21, 12));
}

#[test]
fn closed_form_spot_checks() {
    let face_to_vertex = |id: RuleSetId, d: usize| {
        amount(id, |s, rec| matches!(s, Sender::Face(x) if x.contains(d)) && matches!(rec, Receiver::Vertex))
    };
    let vertex_to_triangle = |id: RuleSetId, d: usize| {
        amount(id, |s, rec| matches!(s, Sender::Vertex(x) if x.contains(d)) && matches!(rec, Receiver::Triangle(None)))
    };
    let to_bad = amount(RuleSetId::T1_2, |_, rec| {
        matches!(rec, Receiver::ThreeVertex(k) if matches!(k, ThreeVertexKind::Bad(_)))
    });
    // a 5-face paying all five corners
    assert_eq!(int(5) - 4 - face_to_vertex(RuleSetId::T0_13, 5) * 5, r(5, 60));
    assert_eq!(r(49, 60) * 5 - 4, r(1, 12));
    // a 7-vertex paying at most d - 2 triangles
    assert_eq!(int(7) - 4 - vertex_to_triangle(RuleSetId::T0_2, 7) * 5, r(1, 30));
    assert_eq!(r(61, 150) * 7 - r(422, 150), r(1, 30));
    // a 6-face paying all six corners
    assert_eq!(int(6) - 4 - face_to_vertex(RuleSetId::T0_2, 6) * 6, r(6, 150));
    // a 6-vertex on three triangles
    assert_eq!(int(2) - vertex_to_triangle(RuleSetId::T0_2, 6) * 3, r(1, 4));
    // a 5-vertex on three (4,5,5) triangles and two 6+-faces
    assert_eq!(int(1) - r(1, 2) * 3 + face_to_vertex(RuleSetId::T0_2, 6) * 2, r(23, 150));
    // a 7-vertex on at most two thirds of its corners as triangles
    assert_eq!(int(7) - 4 - vertex_to_triangle(RuleSetId::T0_13, 7) * r(14, 3), r(5, 18));
    assert_eq!(r(11, 18) * 7 - 4, r(5, 18));
    // a 7-face with half its vertices bad
    assert_eq!(int(7) - 4 - to_bad * r(7, 2), r(5, 4));
    assert_eq!(r(3, 4) * 7 - 4, r(5, 4));
}

#[test]
fn initial_charges_follow_degrees() {
    for kind in all_kinds() {
        let g = build(kind);
        let ledger = initial_charges(&g);
        assert!(ledger.transfers.is_empty());
        for v in 0..g.vertex_count() {
            assert_eq!(ledger.initial(Element::Vertex(v)), int(g.degree(v) as i64 - 4));
        }
        assert_eq!(ledger.total_initial(), int(-4 * g.euler_characteristic()), "{kind}");
    }
}

#[test]
fn transfers_respect_rule_senders() {
    for inst in conservation_instances() {
        let g = &inst.graph;
        for id in RuleSetId::ALL {
            let ledger = apply_rules(g, id);
            for t in &ledger.transfers {
                let rule = rules(id).into_iter().find(|rule| rule.id == t.rule && rule.amount == t.amount);
                assert!(rule.is_some(), "{}: {t:?}", inst.name);
                match (rule.unwrap().sender, t.from) {
                    (Sender::Vertex(d), Element::Vertex(v)) => assert!(d.contains(g.degree(v))),
                    (Sender::Face(d), Element::Face(f)) => assert!(d.contains(g.faces().face(f).degree())),
                    other => panic!("{}: sender mismatch {other:?}", inst.name),
                }
            }
        }
    }
}

#[test]
fn reports_serialize_rationals_as_strings() {
    let report = audit(&icosahedron(), RuleSetId::T0_13);
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["ruleset"], "T0_13");
    assert_eq!(json["total_final"], "-8/1");
    assert_eq!(json["negatives"][0]["element"], "v0");
    assert_eq!(json["negatives"][0]["final"], "-2/3");
    assert_eq!(json["negatives"][0]["transfers"][0]["amount"], "1/3");
    assert!(json["negatives"][0]["explained_by"].is_null());
    let ledger = serde_json::to_value(apply_rules(&build(Kind::Cycle { n: 5 }), RuleSetId::T1_1)).unwrap();
    assert_eq!(ledger["final_faces"], serde_json::json!(["1/1", "1/1"]));
}
