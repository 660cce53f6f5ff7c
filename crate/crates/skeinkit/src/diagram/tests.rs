use super::*;

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const HOPF: &str = "X[4,1,3,2] X[2,3,1,4]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

#[test]
fn parse_trefoil() {
    let d = Diagram::parse_pd(TREFOIL).unwrap();
    assert_eq!(d.crossings().len(), 3);
    assert_eq!(d.edge_count(), 6);
    assert_eq!(d.unknot_components(), 0);
}

#[test]
fn parse_empty_with_unknots() {
    let d = Diagram::parse_pd("unknots=1").unwrap();
    assert_eq!(d.crossings().len(), 0);
    assert_eq!(d.component_count().unwrap(), 1);
}

#[test]
fn parse_rejects_bad_arity() {
    assert!(matches!(
        Diagram::parse_pd("X[1,2,3]"),
        Err(DiagramError::MalformedToken(_))
    ));
}

#[test]
fn parse_rejects_dangling_edge() {
    assert!(matches!(
        Diagram::parse_pd("X[1,2,3,4]"),
        Err(DiagramError::EdgeOccurrence(_, 1))
    ));
}

#[test]
fn trefoil_orientation_and_writhe() {
    let d = Diagram::from_pd(TREFOIL).unwrap();
    for c in d.crossings() {
        assert_eq!(c.sign, Some(Sign::Negative));
    }
    assert_eq!(d.writhe(), -3);
}

#[test]
fn mirror_negates_writhe() {
    let d = Diagram::from_pd(TREFOIL).unwrap();
    let m = d.mirror();
    assert_eq!(m.writhe(), 3);
    for c in m.crossings() {
        assert_eq!(c.sign, Some(Sign::Positive));
    }
}

#[test]
fn zero_crossing_writhe() {
    assert_eq!(Diagram::unknots(1).writhe(), 0);
}

#[test]
fn component_counts() {
    assert_eq!(Diagram::from_pd(TREFOIL).unwrap().component_count().unwrap(), 1);
    assert_eq!(Diagram::from_pd(HOPF).unwrap().component_count().unwrap(), 2);
    assert_eq!(Diagram::unknots(2).component_count().unwrap(), 2);
    assert_eq!(Diagram::from_pd(FIGURE_EIGHT).unwrap().component_count().unwrap(), 1);
}

#[test]
fn explicit_sign_dialect() {
    let d = Diagram::from_pd("X-[1,4,2,5] X-[3,6,4,1] X-[5,2,6,3]").unwrap();
    assert_eq!(d.writhe(), -3);
    // contradicting declared sign is rejected
    assert!(matches!(
        Diagram::from_pd("X+[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"),
        Err(DiagramError::DeclaredSignMismatch(_))
    ));
}

#[test]
fn canonical_frame_in_ends_sit_west() {
    let pos = CompassFrame::for_sign(Sign::Positive);
    assert_eq!(pos.compass_of_slot(0), Compass::SW); // under-in
    assert_eq!(pos.compass_of_slot(3), Compass::NW); // over-in
    let neg = CompassFrame::for_sign(Sign::Negative);
    assert_eq!(neg.compass_of_slot(0), Compass::NW); // under-in
    assert_eq!(neg.compass_of_slot(1), Compass::SW); // over-in
    // mirror pair: frames related by the north/south reflection
    for s in 0..4 {
        let flip = |c: Compass| match c {
            Compass::SW => Compass::NW,
            Compass::NW => Compass::SW,
            Compass::SE => Compass::NE,
            Compass::NE => Compass::SE,
        };
        // mirroring swaps slots 1 and 3 and the sign
        let mirrored_slot = match s {
            1 => 3,
            3 => 1,
            s => s,
        };
        assert_eq!(
            flip(pos.compass_of_slot(s)),
            neg.compass_of_slot(mirrored_slot)
        );
    }
}

#[test]
fn trefoil_faces_satisfy_euler() {
    let d = Diagram::from_pd(TREFOIL).unwrap();
    // V=3, E=6, so a planar embedding has 5 faces
    assert_eq!(d.faces().count(), 5);
    assert!(d.is_planar());
}

#[test]
fn virtual_trefoil_orients() {
    // two classical crossings, one virtual
    let d = Diagram::from_pd("X+[4,2,5,1] X+[5,3,6,2] P[3,6,4,1]").unwrap();
    assert_eq!(d.writhe(), 2);
    assert_eq!(d.component_count().unwrap(), 1);
}

#[test]
fn pure_virtual_two_circles() {
    let d = Diagram::from_pd("P[1,2,1,2]").unwrap();
    assert_eq!(d.component_count().unwrap(), 2);
    assert_eq!(d.writhe(), 0);
}

#[test]
fn r1_add_then_remove_roundtrip() {
    let d = Diagram::from_pd(TREFOIL).unwrap();
    for sign in [Sign::Positive, Sign::Negative] {
        for under_first in [true, false] {
            let spec = MoveSpec::R1Add { site: Site::Edge(2), sign, under_first };
            let kinked = d.apply_move(&spec).unwrap();
            assert_eq!(kinked.crossings().len(), 4);
            assert_eq!(kinked.writhe(), d.writhe() + sign.value());
            assert!(kinked.is_planar());
            assert_eq!(kinked.component_count().unwrap(), 1);
            let kink_at = kinked
                .crossings()
                .iter()
                .position(|c| (0..4).any(|i| c.slots[i] == c.slots[(i + 1) % 4]))
                .unwrap();
            let back = kinked
                .apply_move(&MoveSpec::R1Remove { crossing: kink_at })
                .unwrap();
            assert!(back.isomorphic(&d).unwrap());
        }
    }
}

#[test]
fn r1_kink_on_circle_and_back() {
    let d = Diagram::unknots(1);
    let kinked = d
        .apply_move(&MoveSpec::R1Add {
            site: Site::Circle,
            sign: Sign::Positive,
            under_first: true,
        })
        .unwrap();
    assert_eq!(kinked.crossings().len(), 1);
    assert_eq!(kinked.writhe(), 1);
    let back = kinked.apply_move(&MoveSpec::R1Remove { crossing: 0 }).unwrap();
    assert_eq!(back.unknot_components(), 1);
    assert_eq!(back.crossings().len(), 0);
}

#[test]
fn r2_add_then_remove_roundtrip() {
    let d = Diagram::from_pd(TREFOIL).unwrap();
    let moves = d.enumerate_moves(&[MoveKind::R2Add]);
    assert!(!moves.is_empty());
    let mut tried = 0;
    for spec in &moves {
        let Ok(pushed) = d.apply_move(spec) else { continue };
        tried += 1;
        assert_eq!(pushed.crossings().len(), 5);
        assert_eq!(pushed.writhe(), d.writhe());
        assert!(pushed.is_planar(), "push {spec:?} left the plane");
        assert_eq!(pushed.component_count().unwrap(), d.component_count().unwrap());
        let bigons = pushed.enumerate_moves(&[MoveKind::R2Remove]);
        assert!(!bigons.is_empty());
        let back = pushed.apply_move(&bigons[0]).unwrap();
        assert_eq!(back.crossings().len(), 3);
    }
    assert!(tried > 0);
}

#[test]
fn r2_circle_pushes() {
    let mut d = Diagram::from_pd(TREFOIL).unwrap();
    d.set_unknot_components(1);
    let pushed = d
        .apply_move(&MoveSpec::R2Add {
            moved: Site::Circle,
            across: Site::Edge(3),
            moved_over: true,
        })
        .unwrap();
    assert_eq!(pushed.crossings().len(), 5);
    assert_eq!(pushed.unknot_components(), 0);
    assert_eq!(pushed.component_count().unwrap(), 2);
    assert!(pushed.is_planar());

    let self_pushed = Diagram::unknots(1)
        .apply_move(&MoveSpec::R2Add {
            moved: Site::Circle,
            across: Site::Circle,
            moved_over: false,
        })
        .unwrap();
    assert_eq!(self_pushed.crossings().len(), 2);
    assert_eq!(self_pushed.component_count().unwrap(), 1);
    assert!(self_pushed.is_planar());
}

#[test]
fn moves_preserve_component_count() {
    let d = Diagram::from_pd(FIGURE_EIGHT).unwrap();
    let all = d.enumerate_moves(&[
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
    ]);
    for spec in &all {
        if let Ok(moved) = d.apply_move(spec) {
            assert_eq!(
                moved.component_count().unwrap(),
                d.component_count().unwrap(),
                "component count changed under {spec:?}"
            );
        }
    }
}

#[test]
fn renumbered_is_stable() {
    let d = Diagram::from_pd(TREFOIL).unwrap();
    let r = d.renumbered().unwrap();
    assert_eq!(r.renumbered().unwrap(), r);
    assert!(d.isomorphic(&r).unwrap());
}
