use super::*;
use crate::css::plan_css;
use crate::fpalg::rank;
use crate::stabilizer::{plan_measurements, verify_plan};

fn ids(kind: &[String], idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| kind[i].clone()).collect()
}

fn square_with_open(open: &[&str]) -> Surface {
    square().with_open_edges(open).unwrap()
}

#[test]
fn fig1_profile_and_code() {
    let s = fig1();
    let p = s.classify_boundary().unwrap();
    assert!(p.boundary_edges.is_empty());
    assert_eq!(p.ring_vertices.len(), 5);
    assert_eq!(p.ring_edges.len(), 8);
    let code = surface_to_css(&s).unwrap();
    assert_eq!(code.n(), 8);
    assert_eq!(code.css().cx().dim() + code.css().cz().dim(), 7);
    assert_eq!(code.stabilizer().k(), 1);
}

#[test]
fn fig1_touched_sets() {
    let s = fig1();
    let t = touched_sets(&s, &["e7"]).unwrap();
    assert_eq!(ids(s.vertex_ids(), &t.vertices), ["v2", "v4"]);
    assert_eq!(ids(s.face_ids(), &t.faces), ["f3", "f4"]);
    let empty = touched_sets::<&str>(&s, &[]).unwrap();
    assert!(empty.vertices.is_empty() && empty.faces.is_empty());
}

#[test]
fn fig1_reduced_plans() {
    let s = fig1();
    let p7 = reduce_plan(&s, &["e7"]).unwrap();
    assert_eq!(p7.faces_to_measure, ["f3"]);
    assert_eq!(p7.vertices_to_measure, ["v2"]);
    assert_eq!(p7.measured_qubits, ["e1", "e5", "e6", "e7", "e8"]);

    let p8 = reduce_plan(&s, &["e8"]).unwrap();
    assert_eq!(p8.faces_to_measure, ["f3"]);
    assert_eq!(p8.vertices_to_measure, ["v1"]);
    assert_eq!(p8.measured_qubits, ["e1", "e2", "e3", "e6", "e7", "e8"]);

    let none = reduce_plan::<&str>(&s, &[]).unwrap();
    assert_eq!(none.counts(), (0, 0));
    assert!(none.measured_qubits.is_empty());
}

#[test]
fn fig1_locality() {
    let s = fig1();
    assert_eq!(locality_single(&s).unwrap(), 5);
    let code = surface_to_css(&s).unwrap();
    for e in s.edge_ids() {
        let plan = code.reduce_plan(&code.erasures(&[e]).unwrap()).unwrap();
        assert!(plan.measured_qubits.len() <= 6);
    }
    let profile: Vec<usize> = (1..=3).map(|d| code.locality_profile(d).unwrap()).collect();
    assert_eq!(profile, [8, 7, 6]);
    let wc = crate::stabilizer::worst_case_measurements(&code.stabilizer(), 1).unwrap();
    assert_eq!(wc.count, 2);
}

#[test]
fn square_examples() {
    let closed = square();
    let p = closed.classify_boundary().unwrap();
    assert_eq!(p.boundary_edges.len(), 4);
    assert_eq!((p.ring_edges.len(), p.ring_vertices.len()), (4, 4));
    let code = surface_to_css(&closed).unwrap();
    assert_eq!(code.css().cx().dim(), 1);
    assert_eq!(code.vertex_vectors().rows(), 4);
    assert_eq!(rank(code.vertex_vectors()), 3);
    assert_eq!(locality_profile(&closed, 2).unwrap(), 3);
    assert_eq!(locality_single(&closed).unwrap(), 3);

    let t = touched_sets(&closed, &["ab"]).unwrap();
    assert_eq!((t.faces.len(), t.vertices.len()), (1, 2));

    let open = square_with_open(&["ab", "bc", "cd", "da"]);
    let p = open.classify_boundary().unwrap();
    assert!(p.ring_edges.is_empty());
    assert!(p.ring_vertices.is_empty());
    assert_eq!(p.open_faces, vec![0]);
    assert_eq!(surface_to_css(&open).unwrap().n(), 0);
}

#[test]
fn open_edges_must_be_boundary() {
    let err = fig1().with_open_edges(&["e1"]).unwrap_err();
    assert!(matches!(err, Error::InvalidInput(_)));
}

#[test]
fn open_edges_are_not_qubits() {
    let s = square_with_open(&["ab"]);
    let code = surface_to_css(&s).unwrap();
    assert_eq!(code.n(), 3);
    assert!(matches!(
        code.erasures(&["ab"]),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        code.erasures(&["zz"]),
        Err(Error::InvalidInput(_))
    ));
    // a and b are open vertices, so only c and d stabilise
    assert_eq!(code.vertex_vectors().rows(), 2);
}

#[test]
fn self_loop_in_one_face() {
    let spec = SurfaceSpec {
        vertices: vec!["v".into()],
        edges: vec![EdgeSpec {
            id: "e".into(),
            ends: vec!["v".into()],
        }],
        faces: vec![FaceSpec {
            id: "f".into(),
            edges: vec!["e".into()],
        }],
        open_edges: vec![],
    };
    let s = Surface::from_spec(&spec).unwrap();
    assert_eq!(locality_single(&s).unwrap(), 0);
    // the loop meets its only face once, an odd incidence
    assert!(matches!(
        surface_to_css(&s),
        Err(Error::MalformedSurface(_))
    ));
}

#[test]
fn isolated_edges_have_no_faces() {
    let spec = SurfaceSpec {
        vertices: vec!["a".into(), "b".into()],
        edges: vec![EdgeSpec {
            id: "e".into(),
            ends: vec!["a".into(), "b".into()],
        }],
        faces: vec![],
        open_edges: vec![],
    };
    let s = Surface::from_spec(&spec).unwrap();
    let code = surface_to_css(&s).unwrap();
    assert_eq!(code.css().cx().dim(), 0);
    assert!(matches!(locality_single(&s), Err(Error::Undefined(_))));
}

#[test]
fn malformed_inputs() {
    assert!(Surface::from_json("{").is_err());
    assert!(Surface::from_json(
        r#"{"vertices":["a"],"edges":[{"id":"e","ends":["b"]}],"faces":[]}"#
    )
    .is_err());
    assert!(Surface::from_json(r#"{"vertices":["a","a"],"edges":[],"faces":[]}"#).is_err());
    assert!(Surface::from_json(
        r#"{"vertices":["a"],"edges":[],"faces":[{"id":"f","edges":["x"]}]}"#
    )
    .is_err());
    assert!(locality_profile(&square(), 0).is_err());
}

#[test]
fn spec_round_trip() {
    let s = fig1();
    let json = serde_json::to_string(&s.to_spec()).unwrap();
    assert_eq!(Surface::from_json(&json).unwrap(), s);
}

#[test]
fn lattices_agree_with_general_planner() {
    for (rows, cols) in [(2, 2), (2, 3), (3, 3)] {
        let s = toric(rows, cols).unwrap();
        let code = surface_to_css(&s).unwrap();
        assert_eq!(code.n(), 2 * rows * cols);
        assert_eq!(code.stabilizer().k(), 2);
        let stab = code.stabilizer();
        for e in 0..code.n() {
            let pattern = ErasurePattern::new(code.n(), [e]).unwrap();
            let plan = code.reduce_plan(&pattern).unwrap();
            let general = plan_measurements(&stab, &pattern).unwrap();
            let css = plan_css(code.css(), &pattern).unwrap();
            assert_eq!(plan.face_rows.len(), css.dx.rows());
            assert_eq!(plan.vertex_rows.len(), css.dz.rows());
            assert_eq!(
                plan.face_rows.len() + plan.vertex_rows.len(),
                general.measurement_count()
            );
            assert!(verify_plan(&stab, &code.plan_observables(&plan), &pattern).unwrap());
        }
    }
    let patch = planar_patch(2, 2).unwrap();
    let code = surface_to_css(&patch).unwrap();
    assert_eq!(code.n(), 12);
    assert!(toric(1, 3).is_err());
}
