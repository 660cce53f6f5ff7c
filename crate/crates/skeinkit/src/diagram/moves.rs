//! Reidemeister moves as diagram rewrites.
//!
//! Addition moves build new crossings from oriented strand passes; removal
//! moves splice strands through deleted crossings. Sites for R2 additions
//! and R3 come from the face decomposition, so every produced diagram is a
//! diagram of the same link.

use super::faces::edge_endpoints;
use super::{
    classical_from_passes, Crossing, Diagram, DiagramError, EdgeId, Port, Sign, UnionFind,
};

/// Where a move attaches: an edge of the diagram or one of the
/// crossing-free circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    Edge(EdgeId),
    Circle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

/// A fully parameterized Reidemeister move.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MoveSpec {
    /// Kink the strand at `site`. `under_first` selects which pass of the
    /// new crossing the strand meets first, i.e. the side of the loop.
    R1Add { site: Site, sign: Sign, under_first: bool },
    /// Remove the kink crossing at this index.
    R1Remove { crossing: usize },
    /// Push `moved` across a shared face over (or under) `across`.
    R2Add { moved: Site, across: Site, moved_over: bool },
    /// Remove the bigon formed by these two crossings.
    R2Remove { crossings: (usize, usize) },
    /// Slide a strand across a triangle face, named by its three
    /// boundary edges.
    R3 { edges: [EdgeId; 3] },
}

impl MoveSpec {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSpec::R1Add { .. } => MoveKind::R1Add,
            MoveSpec::R1Remove { .. } => MoveKind::R1Remove,
            MoveSpec::R2Add { .. } => MoveKind::R2Add,
            MoveSpec::R2Remove { .. } => MoveKind::R2Remove,
            MoveSpec::R3 { .. } => MoveKind::R3,
        }
    }
}

pub(super) fn apply_move(d: &Diagram, spec: &MoveSpec) -> Result<Diagram, DiagramError> {
    if !d.is_oriented() && !d.crossings().is_empty() {
        return Err(DiagramError::NotOriented);
    }
    let out = match *spec {
        MoveSpec::R1Add { site, sign, under_first } => r1_add(d, site, sign, under_first)?,
        MoveSpec::R1Remove { crossing } => r1_remove(d, crossing)?,
        MoveSpec::R2Add { moved, across, moved_over } => r2_add(d, moved, across, moved_over)?,
        MoveSpec::R2Remove { crossings } => r2_remove(d, crossings)?,
        MoveSpec::R3 { edges } => r3(d, edges)?,
    };
    out.renumbered()
}

/// Replace the edge at one specific port.
fn set_edge_at(crossings: &mut [Crossing], port: Port, e: EdgeId) {
    crossings[port.crossing].slots[port.slot] = e;
}

fn r1_add(d: &Diagram, site: Site, sign: Sign, under_first: bool) -> Result<Diagram, DiagramError> {
    let mut out = d.clone();
    let base = d.fresh_edge_base();
    match site {
        Site::Edge(e) => {
            let (_, head) = edge_endpoints(d, e).ok_or(DiagramError::NotOriented)?;
            let q = base; // kink loop
            let r = base + 1; // final piece, arrives where e used to
            set_edge_at(out.crossings_mut(), head, r);
            let crossing = if under_first {
                classical_from_passes((e, q), (q, r), sign)
            } else {
                classical_from_passes((q, r), (e, q), sign)
            };
            out.crossings_mut().push(crossing);
        }
        Site::Circle => {
            if d.unknot_components() == 0 {
                return Err(DiagramError::InvalidMoveSite("no crossing-free circle".into()));
            }
            out.set_unknot_components(d.unknot_components() - 1);
            let (p, q) = (base, base + 1);
            let crossing = if under_first {
                classical_from_passes((p, q), (q, p), sign)
            } else {
                classical_from_passes((q, p), (p, q), sign)
            };
            out.crossings_mut().push(crossing);
        }
    }
    Ok(out)
}

/// A kink crossing repeats one edge in two cyclically adjacent slots.
fn is_kink(c: &Crossing) -> bool {
    c.is_classical()
        && (0..4).any(|i| c.slots[i] == c.slots[(i + 1) % 4])
        && c.slots[0] != c.slots[2]
}

fn r1_remove(d: &Diagram, crossing: usize) -> Result<Diagram, DiagramError> {
    let c = d
        .crossings()
        .get(crossing)
        .ok_or_else(|| DiagramError::PatternNotFound(format!("no crossing {crossing}")))?;
    if !is_kink(c) {
        return Err(DiagramError::PatternNotFound(format!(
            "crossing {crossing} is not a kink"
        )));
    }
    splice_crossings(d, &[crossing])
}

fn r2_remove(d: &Diagram, (a, b): (usize, usize)) -> Result<Diagram, DiagramError> {
    let ca = d
        .crossings()
        .get(a)
        .ok_or_else(|| DiagramError::PatternNotFound(format!("no crossing {a}")))?;
    let cb = d
        .crossings()
        .get(b)
        .ok_or_else(|| DiagramError::PatternNotFound(format!("no crossing {b}")))?;
    if a == b || !is_bigon(ca, cb) {
        return Err(DiagramError::PatternNotFound(format!(
            "crossings {a},{b} do not bound a bigon"
        )));
    }
    splice_crossings(d, &[a, b])
}

/// Two crossings bound a removable bigon when one edge runs over both, a
/// second edge runs under both, and the signs are opposite.
fn is_bigon(a: &Crossing, b: &Crossing) -> bool {
    if !a.is_classical() || !b.is_classical() {
        return false;
    }
    let (Some(sa), Some(sb)) = (a.sign, b.sign) else {
        return false;
    };
    if sa == sb {
        return false;
    }
    let over_shared = [a.slots[1], a.slots[3]]
        .iter()
        .any(|e| *e == b.slots[1] || *e == b.slots[3]);
    let under_shared = [a.slots[0], a.slots[2]]
        .iter()
        .any(|e| *e == b.slots[0] || *e == b.slots[2]);
    over_shared && under_shared
}

/// Delete crossings and reconnect the strands straight through them.
fn splice_crossings(d: &Diagram, remove: &[usize]) -> Result<Diagram, DiagramError> {
    let ids = d.edge_ids();
    let index: std::collections::HashMap<EdgeId, usize> =
        ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf = UnionFind::new(ids.len());
    for &ci in remove {
        let c = &d.crossings()[ci];
        uf.union(index[&c.slots[0]], index[&c.slots[2]]);
        uf.union(index[&c.slots[1]], index[&c.slots[3]]);
    }
    // lowest edge id per merge group
    let mut rep: std::collections::HashMap<usize, EdgeId> = std::collections::HashMap::new();
    for &e in &ids {
        let root = uf.find(index[&e]);
        let r = rep.entry(root).or_insert(e);
        *r = (*r).min(e);
    }
    let keep: Vec<usize> = (0..d.crossings().len())
        .filter(|i| !remove.contains(i))
        .collect();
    let mut new_crossings = Vec::with_capacity(keep.len());
    let mut surviving: std::collections::HashSet<usize> = std::collections::HashSet::new();
    for &ci in &keep {
        let mut c = d.crossings()[ci].clone();
        for s in &mut c.slots {
            let root = uf.find(index[s]);
            surviving.insert(root);
            *s = rep[&root];
        }
        new_crossings.push(c);
    }
    // merge groups with no surviving occurrence close into circles
    let circles = rep
        .keys()
        .filter(|root| !surviving.contains(root))
        .count();
    // splicing glues tails to heads, so the flow on kept crossings stays
    // valid and the chosen orientation of every component is preserved
    let out = Diagram::new(new_crossings, d.unknot_components() + circles)?;
    debug_assert!(out.crossings().is_empty() || out.is_oriented());
    Ok(out)
}

fn r2_add(
    d: &Diagram,
    moved: Site,
    across: Site,
    moved_over: bool,
) -> Result<Diagram, DiagramError> {
    match (moved, across) {
        (Site::Edge(e), Site::Edge(f)) => r2_add_edge_edge(d, e, f, moved_over),
        (Site::Circle, Site::Edge(f)) => r2_add_circle_edge(d, f, moved_over),
        (Site::Edge(e), Site::Circle) => r2_add_edge_circle(d, e, moved_over),
        (Site::Circle, Site::Circle) => r2_add_circles(d, moved_over),
    }
}

/// Push edge `e` across its left face, crossing `f` twice.
fn r2_add_edge_edge(
    d: &Diagram,
    e: EdgeId,
    f: EdgeId,
    moved_over: bool,
) -> Result<Diagram, DiagramError> {
    if e == f {
        return Err(DiagramError::InvalidMoveSite(
            "self-crossing R2 push is not supported".into(),
        ));
    }
    let (_, e_head) = edge_endpoints(d, e).ok_or(DiagramError::NotOriented)?;
    let (f_tail, f_head) = edge_endpoints(d, f).ok_or(DiagramError::NotOriented)?;
    let faces = d.faces();
    let face = faces.face_of(e_head);
    // forward: the face walk travels f in its own direction
    let f_forward = faces.face(face).contains(&f_head);
    let f_backward = faces.face(face).contains(&f_tail);
    if !f_forward && !f_backward {
        return Err(DiagramError::InvalidMoveSite(format!(
            "edge {f} is not on the left face of edge {e}"
        )));
    }

    let base = d.fresh_edge_base();
    let (m_e, e2, m_f, f2) = (base, base + 1, base + 2, base + 3);
    let mut out = d.clone();
    set_edge_at(out.crossings_mut(), e_head, e2);
    set_edge_at(out.crossings_mut(), f_head, f2);

    // passes in travel order along each strand; crossing signs are forced
    // by the plane geometry of the push
    let crossings: [((EdgeId, EdgeId), (EdgeId, EdgeId), Sign); 2] = if f_forward {
        // f antiparallel to e around the face
        [
            ((f, m_f), (m_e, e2), Sign::Negative),
            ((m_f, f2), (e, m_e), Sign::Positive),
        ]
    } else {
        // f parallel to e
        [
            ((f, m_f), (e, m_e), Sign::Negative),
            ((m_f, f2), (m_e, e2), Sign::Positive),
        ]
    };
    for (f_pass, e_pass, sign) in crossings {
        let (under, over, sign) = if moved_over {
            (f_pass, e_pass, sign)
        } else {
            (e_pass, f_pass, sign.flipped())
        };
        out.crossings_mut().push(classical_from_passes(under, over, sign));
    }
    Ok(out)
}

/// Slide a crossing-free circle across edge `f`.
fn r2_add_circle_edge(d: &Diagram, f: EdgeId, moved_over: bool) -> Result<Diagram, DiagramError> {
    if d.unknot_components() == 0 {
        return Err(DiagramError::InvalidMoveSite("no crossing-free circle".into()));
    }
    let (_, f_head) = edge_endpoints(d, f).ok_or(DiagramError::NotOriented)?;
    let base = d.fresh_edge_base();
    let (c1, c2, m_f, f2) = (base, base + 1, base + 2, base + 3);
    let mut out = d.clone();
    out.set_unknot_components(d.unknot_components() - 1);
    set_edge_at(out.crossings_mut(), f_head, f2);
    push_double_crossing(
        &mut out,
        ((f, m_f), (m_f, f2)),
        ((c1, c2), (c2, c1)),
        moved_over,
    );
    Ok(out)
}

/// Push edge `e` across a crossing-free circle.
fn r2_add_edge_circle(d: &Diagram, e: EdgeId, moved_over: bool) -> Result<Diagram, DiagramError> {
    if d.unknot_components() == 0 {
        return Err(DiagramError::InvalidMoveSite("no crossing-free circle".into()));
    }
    let (_, e_head) = edge_endpoints(d, e).ok_or(DiagramError::NotOriented)?;
    let base = d.fresh_edge_base();
    let (c1, c2, m_e, e2) = (base, base + 1, base + 2, base + 3);
    let mut out = d.clone();
    out.set_unknot_components(d.unknot_components() - 1);
    set_edge_at(out.crossings_mut(), e_head, e2);
    push_double_crossing(
        &mut out,
        ((c1, c2), (c2, c1)),
        ((e, m_e), (m_e, e2)),
        moved_over,
    );
    Ok(out)
}

/// R2 between circles: two distinct circles when available, otherwise a
/// circle pushed across itself.
fn r2_add_circles(d: &Diagram, moved_over: bool) -> Result<Diagram, DiagramError> {
    let base = d.fresh_edge_base();
    let mut out = d.clone();
    match d.unknot_components() {
        0 => Err(DiagramError::InvalidMoveSite("no crossing-free circle".into())),
        1 => {
            // the circle crosses itself twice: edges base..base+3 in cyclic
            // travel order 1 -> 2 -> 3 -> 4 -> 1, over first
            out.set_unknot_components(0);
            let (e1, e2, e3, e4) = (base, base + 1, base + 2, base + 3);
            push_double_crossing(
                &mut out,
                ((e4, e1), (e3, e4)),
                ((e1, e2), (e2, e3)),
                moved_over,
            );
            Ok(out)
        }
        _ => {
            out.set_unknot_components(d.unknot_components() - 2);
            let (c1, c2, u1, u2) = (base, base + 1, base + 2, base + 3);
            push_double_crossing(
                &mut out,
                ((u1, u2), (u2, u1)),
                ((c1, c2), (c2, c1)),
                moved_over,
            );
            Ok(out)
        }
    }
}

/// Append the two opposite-sign crossings of an R2 pattern. `lower` takes
/// the under role when `moved_over` is set.
fn push_double_crossing(
    out: &mut Diagram,
    lower: ((EdgeId, EdgeId), (EdgeId, EdgeId)),
    upper: ((EdgeId, EdgeId), (EdgeId, EdgeId)),
    moved_over: bool,
) {
    let signs = if moved_over {
        (Sign::Positive, Sign::Negative)
    } else {
        (Sign::Negative, Sign::Positive)
    };
    let (under, over) = if moved_over { (lower, upper) } else { (upper, lower) };
    out.crossings_mut()
        .push(classical_from_passes(under.0, over.0, signs.0));
    out.crossings_mut()
        .push(classical_from_passes(under.1, over.1, signs.1));
}

/// Triangle data for an R3 site: the face edge of each strand plus its
/// outside continuations.
struct TrianglePass {
    edge: EdgeId,
    first: usize,
    second: usize,
    in_before: EdgeId,
    out_after: EdgeId,
    role_first_under: bool,
    role_second_under: bool,
}

fn r3(d: &Diagram, edges: [EdgeId; 3]) -> Result<Diagram, DiagramError> {
    let mut want = edges;
    want.sort_unstable();
    if want[0] == want[1] || want[1] == want[2] {
        return Err(DiagramError::InvalidMoveSite("R3 needs three distinct edges".into()));
    }
    let faces = d.faces();
    let face = faces
        .faces_of_len(3)
        .find(|&f| {
            let mut es: Vec<EdgeId> = faces
                .face(f)
                .iter()
                .map(|p| d.crossings()[p.crossing].slots[p.slot])
                .collect();
            es.sort_unstable();
            es == want
        })
        .ok_or_else(|| {
            DiagramError::InvalidMoveSite(format!(
                "edges {want:?} do not bound a triangle face"
            ))
        })?;
    let triangle_crossings: Vec<usize> = {
        let mut cs: Vec<usize> = faces.face(face).iter().map(|p| p.crossing).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    };
    if triangle_crossings.len() != 3
        || !triangle_crossings
            .iter()
            .all(|&ci| d.crossings()[ci].is_classical())
    {
        return Err(DiagramError::InvalidMoveSite(
            "triangle face must touch three distinct classical crossings".into(),
        ));
    }

    // one strand per face edge
    let mut passes = Vec::with_capacity(3);
    let mut seen = std::collections::HashSet::new();
    for p in faces.face(face) {
        let g = d.crossings()[p.crossing].slots[p.slot];
        if !seen.insert(g) {
            return Err(DiagramError::InvalidMoveSite(
                "degenerate triangle: repeated boundary edge".into(),
            ));
        }
        let (tail, head) = edge_endpoints(d, g).ok_or(DiagramError::NotOriented)?;
        let first = tail.crossing;
        let second = head.crossing;
        let in_before = d.crossings()[first].slots[(tail.slot + 2) % 4];
        let out_after = d.crossings()[second].slots[(head.slot + 2) % 4];
        passes.push(TrianglePass {
            edge: g,
            first,
            second,
            in_before,
            out_after,
            role_first_under: tail.slot % 2 == 0,
            role_second_under: head.slot % 2 == 0,
        });
    }
    // the move slides a strand past the opposite crossing; it is a
    // Reidemeister move only when some strand stays on one level
    let slidable = passes
        .iter()
        .any(|t| t.role_first_under == t.role_second_under);
    if !slidable {
        return Err(DiagramError::InvalidMoveSite(
            "no strand passes its two triangle crossings on one level".into(),
        ));
    }

    // rebuild the three crossings with each strand's pass order swapped
    let mut new_under: std::collections::HashMap<usize, (EdgeId, EdgeId)> =
        std::collections::HashMap::new();
    let mut new_over: std::collections::HashMap<usize, (EdgeId, EdgeId)> =
        std::collections::HashMap::new();
    for t in &passes {
        // after the slide the strand meets `second` first:
        // in_before -> [second] -> edge -> [first] -> out_after
        let record = |m: &mut std::collections::HashMap<usize, (EdgeId, EdgeId)>,
                      ci: usize,
                      pass: (EdgeId, EdgeId)| {
            m.insert(ci, pass);
        };
        if t.role_second_under {
            record(&mut new_under, t.second, (t.in_before, t.edge));
        } else {
            record(&mut new_over, t.second, (t.in_before, t.edge));
        }
        if t.role_first_under {
            record(&mut new_under, t.first, (t.edge, t.out_after));
        } else {
            record(&mut new_over, t.first, (t.edge, t.out_after));
        }
    }
    let mut out = d.clone();
    for &ci in &triangle_crossings {
        let sign = d.crossings()[ci].sign.ok_or(DiagramError::NotOriented)?;
        out.crossings_mut()[ci] = classical_from_passes(new_under[&ci], new_over[&ci], sign);
    }
    Ok(out)
}

pub(super) fn enumerate_moves(d: &Diagram, kinds: &[MoveKind]) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    let has = |k: MoveKind| kinds.contains(&k);
    let edges = d.edge_ids();

    if has(MoveKind::R1Add) {
        for site in edges
            .iter()
            .map(|&e| Site::Edge(e))
            .chain((d.unknot_components() > 0).then_some(Site::Circle))
        {
            for sign in [Sign::Positive, Sign::Negative] {
                for under_first in [true, false] {
                    out.push(MoveSpec::R1Add { site, sign, under_first });
                }
            }
        }
    }
    if has(MoveKind::R1Remove) {
        for (ci, c) in d.crossings().iter().enumerate() {
            if is_kink(c) {
                out.push(MoveSpec::R1Remove { crossing: ci });
            }
        }
    }
    if has(MoveKind::R2Add) {
        let faces = d.faces();
        let mut seen = std::collections::HashSet::new();
        for &e in &edges {
            let Some((_, e_head)) = edge_endpoints(d, e) else { continue };
            let face = faces.face_of(e_head);
            for p in faces.face(face) {
                let f = d.crossings()[p.crossing].slots[p.slot];
                if f == e || !seen.insert((e, f)) {
                    continue;
                }
                for moved_over in [true, false] {
                    out.push(MoveSpec::R2Add {
                        moved: Site::Edge(e),
                        across: Site::Edge(f),
                        moved_over,
                    });
                }
            }
        }
        if d.unknot_components() > 0 {
            for &f in &edges {
                for moved_over in [true, false] {
                    out.push(MoveSpec::R2Add {
                        moved: Site::Circle,
                        across: Site::Edge(f),
                        moved_over,
                    });
                    out.push(MoveSpec::R2Add {
                        moved: Site::Edge(f),
                        across: Site::Circle,
                        moved_over,
                    });
                }
            }
            for moved_over in [true, false] {
                out.push(MoveSpec::R2Add {
                    moved: Site::Circle,
                    across: Site::Circle,
                    moved_over,
                });
            }
        }
    }
    if has(MoveKind::R2Remove) {
        for a in 0..d.crossings().len() {
            for b in (a + 1)..d.crossings().len() {
                if is_bigon(&d.crossings()[a], &d.crossings()[b]) {
                    out.push(MoveSpec::R2Remove { crossings: (a, b) });
                }
            }
        }
    }
    if has(MoveKind::R3) {
        let faces = d.faces();
        let mut seen = std::collections::HashSet::new();
        for f in faces.faces_of_len(3) {
            let mut edges: Vec<EdgeId> = faces
                .face(f)
                .iter()
                .map(|p| d.crossings()[p.crossing].slots[p.slot])
                .collect();
            edges.sort_unstable();
            if edges.windows(2).any(|w| w[0] == w[1]) || !seen.insert(edges.clone()) {
                continue;
            }
            let site = [edges[0], edges[1], edges[2]];
            // only keep admissible triangles
            if r3(d, site).is_ok() {
                out.push(MoveSpec::R3 { edges: site });
            }
        }
    }
    out
}
