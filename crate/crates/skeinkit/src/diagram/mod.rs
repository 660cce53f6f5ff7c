//! Planar diagram codes for classical and virtual link diagrams.
//!
//! A classical crossing lists its four incident edges counterclockwise
//! starting from the incoming under-edge; a virtual crossing lists four
//! edges counterclockwise with no over/under distinction. Crossing-free
//! circles cannot be encoded by a PD code and are carried by an explicit
//! counter.

mod braid;
mod faces;
mod moves;
mod parse;

pub use braid::braid_closure;
pub use faces::{FaceId, Faces, Port};
pub use moves::{MoveKind, MoveSpec, Site};

use std::collections::BTreeMap;

use thiserror::Error;

pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("edge {0} occurs {1} times, expected exactly 2")]
    EdgeOccurrence(EdgeId, usize),
    #[error("orientation is inconsistent at edge {0}")]
    InconsistentOrientation(EdgeId),
    #[error("declared sign contradicts inferred orientation at crossing {0}")]
    DeclaredSignMismatch(usize),
    #[error("crossing {0} is virtual; operation requires a classical crossing")]
    VirtualCrossing(usize),
    #[error("diagram is not oriented; call orient() first")]
    NotOriented,
    #[error("move site is invalid: {0}")]
    InvalidMoveSite(String),
    #[error("removal pattern not found: {0}")]
    PatternNotFound(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    Classical,
    Virtual,
}

/// One crossing of a PD code.
///
/// `flow[i]` is true when the edge in slot `i` points into the crossing;
/// it is populated by orientation inference. For a classical crossing slot
/// 0 is always the incoming under-edge and slot 2 the outgoing one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub slots: [EdgeId; 4],
    pub sign: Option<Sign>,
    pub(crate) flow: Option<[bool; 4]>,
}

impl Crossing {
    pub fn classical(slots: [EdgeId; 4]) -> Self {
        Self { kind: CrossingKind::Classical, slots, sign: None, flow: None }
    }

    pub fn classical_signed(slots: [EdgeId; 4], sign: Sign) -> Self {
        Self { kind: CrossingKind::Classical, slots, sign: Some(sign), flow: None }
    }

    pub fn virtual_crossing(slots: [EdgeId; 4]) -> Self {
        Self { kind: CrossingKind::Virtual, slots, sign: None, flow: None }
    }

    pub fn is_classical(&self) -> bool {
        self.kind == CrossingKind::Classical
    }

    /// Incoming/outgoing edges of the under strand (slots 0 and 2).
    pub fn under(&self) -> (EdgeId, EdgeId) {
        (self.slots[0], self.slots[2])
    }

    /// Incoming/outgoing edges of the over strand; requires a sign.
    pub fn over(&self) -> Option<(EdgeId, EdgeId)> {
        match self.sign? {
            Sign::Positive => Some((self.slots[3], self.slots[1])),
            Sign::Negative => Some((self.slots[1], self.slots[3])),
        }
    }
}

/// Construction data for an oriented classical crossing.
pub fn classical_from_passes(
    under: (EdgeId, EdgeId),
    over: (EdgeId, EdgeId),
    sign: Sign,
) -> Crossing {
    let (u_in, u_out) = under;
    let (o_in, o_out) = over;
    let (slots, flow) = match sign {
        Sign::Positive => ([u_in, o_out, u_out, o_in], [true, false, false, true]),
        Sign::Negative => ([u_in, o_in, u_out, o_out], [true, true, false, false]),
    };
    Crossing {
        kind: CrossingKind::Classical,
        slots,
        sign: Some(sign),
        flow: Some(flow),
    }
}

/// Compass corner of a crossing end in the canonical frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Compass {
    SW,
    SE,
    NE,
    NW,
}

/// Slot-to-compass assignment of one classical crossing: the unique
/// rotation placing both oriented strands into the east half-plane, so the
/// two incoming ends sit on the west side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompassFrame {
    by_slot: [Compass; 4],
}

impl CompassFrame {
    pub fn for_sign(sign: Sign) -> Self {
        let by_slot = match sign {
            // under: SW -> NE, over: NW -> SE
            Sign::Positive => [Compass::SW, Compass::SE, Compass::NE, Compass::NW],
            // under: NW -> SE, over: SW -> NE
            Sign::Negative => [Compass::NW, Compass::SW, Compass::SE, Compass::NE],
        };
        Self { by_slot }
    }

    pub fn compass_of_slot(&self, slot: usize) -> Compass {
        self.by_slot[slot]
    }

    pub fn slot_of_compass(&self, c: Compass) -> usize {
        self.by_slot.iter().position(|&x| x == c).unwrap()
    }
}

/// A validated planar diagram code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    unknot_components: usize,
}

impl Diagram {
    /// Validates edge occurrences and returns an unoriented diagram.
    pub fn new(crossings: Vec<Crossing>, unknot_components: usize) -> Result<Self, DiagramError> {
        let d = Self { crossings, unknot_components };
        d.validate()?;
        Ok(d)
    }

    /// Empty diagram plus `n` crossing-free circles.
    pub fn unknots(n: usize) -> Self {
        Self { crossings: Vec::new(), unknot_components: n }
    }

    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        parse::parse_pd(text)
    }

    /// Parse and orient in one step.
    pub fn from_pd(text: &str) -> Result<Self, DiagramError> {
        Self::parse_pd(text)?.oriented()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn unknot_components(&self) -> usize {
        self.unknot_components
    }

    pub fn classical_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.is_classical()).count()
    }

    pub fn is_oriented(&self) -> bool {
        self.crossings
            .iter()
            .all(|c| c.flow.is_some() && (!c.is_classical() || c.sign.is_some()))
    }

    /// Sorted list of edge identifiers.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self
            .crossings
            .iter()
            .flat_map(|c| c.slots.iter().copied())
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids().len()
    }

    fn occurrences(&self) -> BTreeMap<EdgeId, Vec<Port>> {
        let mut occ: BTreeMap<EdgeId, Vec<Port>> = BTreeMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &e) in c.slots.iter().enumerate() {
                occ.entry(e).or_default().push(Port::new(ci, si));
            }
        }
        occ
    }

    fn validate(&self) -> Result<(), DiagramError> {
        for (e, ports) in self.occurrences() {
            if ports.len() != 2 {
                return Err(DiagramError::EdgeOccurrence(e, ports.len()));
            }
        }
        Ok(())
    }

    /// The other occurrence of the edge sitting at `port`.
    pub(crate) fn partner_port(&self, port: Port) -> Port {
        let e = self.crossings[port.crossing].slots[port.slot];
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &x) in c.slots.iter().enumerate() {
                let p = Port::new(ci, si);
                if x == e && p != port {
                    return p;
                }
            }
        }
        // an edge can occupy the same port list twice only if the diagram
        // is invalid, which `new` rejects
        unreachable!("edge has a unique partner occurrence")
    }

    /// Infers per-edge directions and per-crossing signs.
    ///
    /// Directions propagate along strands from the under-in convention
    /// (slot 0 points in, slot 2 out) and from any explicitly declared
    /// signs; components never passing under anything get a deterministic
    /// seed at their lowest edge.
    pub fn oriented(&self) -> Result<Self, DiagramError> {
        let mut d = self.clone();
        let occ = d.occurrences();
        // flow[crossing][slot]: Some(true) = edge points in here
        let mut flow: Vec<[Option<bool>; 4]> = vec![[None; 4]; d.crossings.len()];

        // strand-continuation partner: within a crossing, the slot on the
        // same strand
        let pass_partner = |s: usize| (s + 2) % 4;

        // walk a strand forward from a port known to point in
        let apply_seed = |flow: &mut Vec<[Option<bool>; 4]>,
                              start: Port|
         -> Result<(), DiagramError> {
            let mut arrive = start;
            loop {
                let e = d.crossings[arrive.crossing].slots[arrive.slot];
                match flow[arrive.crossing][arrive.slot] {
                    Some(true) => break,
                    Some(false) => return Err(DiagramError::InconsistentOrientation(e)),
                    None => flow[arrive.crossing][arrive.slot] = Some(true),
                }
                let depart = Port::new(arrive.crossing, pass_partner(arrive.slot));
                let e_out = d.crossings[depart.crossing].slots[depart.slot];
                match flow[depart.crossing][depart.slot] {
                    Some(false) => break,
                    Some(true) => return Err(DiagramError::InconsistentOrientation(e_out)),
                    None => flow[depart.crossing][depart.slot] = Some(false),
                }
                arrive = d.partner_port(depart);
            }
            Ok(())
        };

        // seeds from the under-in convention
        for (ci, c) in d.crossings.iter().enumerate() {
            if c.is_classical() {
                apply_seed(&mut flow, Port::new(ci, 0))?;
            }
        }
        // seeds from declared signs: positive means over-in at slot 3
        for (ci, c) in d.crossings.iter().enumerate() {
            if let (CrossingKind::Classical, Some(sign)) = (c.kind, c.sign) {
                let over_in = match sign {
                    Sign::Positive => 3,
                    Sign::Negative => 1,
                };
                apply_seed(&mut flow, Port::new(ci, over_in))
                    .map_err(|_| DiagramError::DeclaredSignMismatch(ci))?;
            }
        }
        // deterministic seed for any strand that never passes under:
        // direct the lowest unresolved edge into its first-listed port
        loop {
            let mut pending: Option<Port> = None;
            for (&e, ports) in &occ {
                let p = ports[0];
                if flow[p.crossing][p.slot].is_none() {
                    let _ = e;
                    pending = Some(p);
                    break;
                }
            }
            match pending {
                Some(p) => apply_seed(&mut flow, p)?,
                None => break,
            }
        }

        for (ci, c) in d.crossings.iter_mut().enumerate() {
            let resolved: [bool; 4] = std::array::from_fn(|s| flow[ci][s] == Some(true));
            // every strand pass has one in and one out end
            for pair in [(0, 2), (1, 3)] {
                if resolved[pair.0] == resolved[pair.1] {
                    return Err(DiagramError::InconsistentOrientation(c.slots[pair.0]));
                }
            }
            if c.is_classical() {
                if !resolved[0] {
                    return Err(DiagramError::InconsistentOrientation(c.slots[0]));
                }
                let inferred = if resolved[3] { Sign::Positive } else { Sign::Negative };
                match c.sign {
                    Some(declared) if declared != inferred => {
                        return Err(DiagramError::DeclaredSignMismatch(ci));
                    }
                    _ => c.sign = Some(inferred),
                }
            }
            c.flow = Some(resolved);
        }
        Ok(d)
    }

    /// Sum of classical crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings
            .iter()
            .filter_map(|c| c.sign)
            .map(Sign::value)
            .sum()
    }

    /// Oriented successor edge along the strand.
    pub fn successor(&self, e: EdgeId) -> Result<EdgeId, DiagramError> {
        let occ = self.occurrences();
        let ports = occ.get(&e).ok_or(DiagramError::EdgeOccurrence(e, 0))?;
        for &p in ports {
            let c = &self.crossings[p.crossing];
            let flow = c.flow.ok_or(DiagramError::NotOriented)?;
            if flow[p.slot] {
                return Ok(c.slots[(p.slot + 2) % 4]);
            }
        }
        Err(DiagramError::InconsistentOrientation(e))
    }

    /// Partition of edges into link components, each listed in traversal
    /// order from its lowest edge; components ordered by lowest edge.
    pub fn components(&self) -> Result<Vec<Vec<EdgeId>>, DiagramError> {
        if !self.is_oriented() && !self.crossings.is_empty() {
            return Err(DiagramError::NotOriented);
        }
        let mut succ: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for e in self.edge_ids() {
            succ.insert(e, self.successor(e)?);
        }
        let mut remaining: std::collections::BTreeSet<EdgeId> = succ.keys().copied().collect();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut cycle = vec![start];
            remaining.remove(&start);
            let mut cur = succ[&start];
            while cur != start {
                remaining.remove(&cur);
                cycle.push(cur);
                cur = succ[&cur];
            }
            out.push(cycle);
        }
        Ok(out)
    }

    /// Number of link components including crossing-free circles.
    pub fn component_count(&self) -> Result<usize, DiagramError> {
        Ok(self.components()?.len() + self.unknot_components)
    }

    /// Canonical frame of a classical crossing.
    pub fn canonical_frame(&self, crossing: usize) -> Result<CompassFrame, DiagramError> {
        let c = &self.crossings[crossing];
        if !c.is_classical() {
            return Err(DiagramError::VirtualCrossing(crossing));
        }
        let sign = c.sign.ok_or(DiagramError::NotOriented)?;
        Ok(CompassFrame::for_sign(sign))
    }

    /// Mirror image: reverse the cyclic order at every crossing, which
    /// exchanges over and under strand roles and negates all signs.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.slots.swap(1, 3);
            if let Some(f) = &mut c.flow {
                f.swap(1, 3);
            }
            if c.is_classical() {
                c.sign = c.sign.map(Sign::flipped);
            }
        }
        d
    }

    /// Relabel edges canonically: components in order of their lowest old
    /// edge id, edges numbered sequentially from 1 along each component;
    /// crossings sorted by their relabeled slots.
    pub fn renumbered(&self) -> Result<Self, DiagramError> {
        let comps = self.components()?;
        let mut map: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        let mut next = 1;
        for comp in &comps {
            for &e in comp {
                map.insert(e, next);
                next += 1;
            }
        }
        let mut d = self.clone();
        for c in &mut d.crossings {
            for s in &mut c.slots {
                *s = map[s];
            }
        }
        d.crossings.sort();
        Ok(d)
    }

    /// Structural equality up to relabeling of edges: compares minimal
    /// canonical forms over all traversal starts and component orders.
    pub fn isomorphic(&self, other: &Self) -> Result<bool, DiagramError> {
        if self.crossings.len() != other.crossings.len()
            || self.unknot_components != other.unknot_components
        {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    /// Lexicographically minimal sorted crossing list over all sequential
    /// relabelings (every rotation of every component, every component
    /// order). Falls back to the deterministic relabeling when the search
    /// space is large.
    fn canonical_form(&self) -> Result<Vec<Crossing>, DiagramError> {
        let comps = self.components()?;
        let variants: usize = comps.iter().map(Vec::len).product::<usize>()
            * (1..=comps.len()).product::<usize>();
        if comps.is_empty() || variants > 100_000 {
            return Ok(self.renumbered()?.crossings);
        }
        let mut best: Option<Vec<Crossing>> = None;
        let mut order: Vec<usize> = (0..comps.len()).collect();
        permute(&mut order, 0, &mut |order| {
            let mut rotation = vec![0usize; comps.len()];
            loop {
                let mut map: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
                let mut next = 1;
                for &ci in order.iter() {
                    let comp = &comps[ci];
                    for k in 0..comp.len() {
                        map.insert(comp[(rotation[ci] + k) % comp.len()], next);
                        next += 1;
                    }
                }
                let mut crossings = self.crossings.clone();
                for c in &mut crossings {
                    for s in &mut c.slots {
                        *s = map[s];
                    }
                }
                crossings.sort();
                if best.as_ref().is_none_or(|b| crossings < *b) {
                    best = Some(crossings);
                }
                // advance the rotation odometer
                let mut i = 0;
                loop {
                    if i == comps.len() {
                        return;
                    }
                    rotation[i] += 1;
                    if rotation[i] < comps[i].len() {
                        break;
                    }
                    rotation[i] = 0;
                    i += 1;
                }
            }
        });
        Ok(best.expect("at least one relabeling"))
    }

    pub fn faces(&self) -> Faces {
        Faces::build(self)
    }

    /// Whether the rotation system embeds in the sphere (per connected
    /// piece of the underlying 4-valent graph).
    pub fn is_planar(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        let v = self.crossings.len() as i64;
        let e = 2 * v;
        let f = self.faces().count() as i64;
        // connected pieces of the shadow graph
        let mut uf = UnionFind::new(self.crossings.len());
        let occ = self.occurrences();
        for ports in occ.values() {
            uf.union(ports[0].crossing, ports[1].crossing);
        }
        let c = (0..self.crossings.len())
            .filter(|&i| uf.find(i) == i)
            .count() as i64;
        v - e + f == 2 * c
    }

    pub fn apply_move(&self, spec: &MoveSpec) -> Result<Self, DiagramError> {
        moves::apply_move(self, spec)
    }

    pub fn enumerate_moves(&self, kinds: &[MoveKind]) -> Vec<MoveSpec> {
        moves::enumerate_moves(self, kinds)
    }

    /// Fresh edge id above everything in use.
    pub(crate) fn fresh_edge_base(&self) -> EdgeId {
        self.edge_ids().last().map_or(1, |m| m + 1)
    }

    pub(crate) fn set_unknot_components(&mut self, n: usize) {
        self.unknot_components = n;
    }

    pub(crate) fn crossings_mut(&mut self) -> &mut Vec<Crossing> {
        &mut self.crossings
    }
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Small array-backed union-find with path halving.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n);
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn class_count(&mut self, n: usize) -> usize {
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
pub(crate) mod tests;
