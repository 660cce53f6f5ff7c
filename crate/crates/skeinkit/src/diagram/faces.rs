//! Faces of the rotation system defined by a PD code.
//!
//! The cyclic slot order at each crossing is a rotation system; faces are
//! orbits of the walk that arrives at a port and leaves through the
//! clockwise-next one, keeping the face on the left. For a planar diagram
//! these are the complementary regions.

use super::{Diagram, EdgeId};

/// One edge end: a slot of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub crossing: usize,
    pub slot: usize,
}

impl Port {
    pub fn new(crossing: usize, slot: usize) -> Self {
        Self { crossing, slot }
    }

    fn index(self) -> usize {
        self.crossing * 4 + self.slot
    }
}

pub type FaceId = usize;

/// Face decomposition; each face is the sequence of arrival ports of its
/// boundary walk.
#[derive(Debug, Clone)]
pub struct Faces {
    faces: Vec<Vec<Port>>,
    face_of_port: Vec<FaceId>,
}

impl Faces {
    pub fn build(d: &Diagram) -> Self {
        let n = d.crossings().len();
        let mut face_of_port = vec![usize::MAX; 4 * n];
        let mut faces = Vec::new();
        for c in 0..n {
            for s in 0..4 {
                let start = Port::new(c, s);
                if face_of_port[start.index()] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let mut p = start;
                loop {
                    face_of_port[p.index()] = id;
                    walk.push(p);
                    let exit = Port::new(p.crossing, (p.slot + 3) % 4);
                    p = d.partner_port(exit);
                    if p == start {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
        Self { faces, face_of_port }
    }

    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, id: FaceId) -> &[Port] {
        &self.faces[id]
    }

    pub fn face_of(&self, p: Port) -> FaceId {
        self.face_of_port[p.index()]
    }

    /// Faces with exactly `len` boundary arcs.
    pub fn faces_of_len(&self, len: usize) -> impl Iterator<Item = FaceId> + '_ {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.len() == len)
            .map(|(i, _)| i)
    }
}

/// The head port of an oriented edge (where it flows into a crossing) and
/// its tail port.
pub(crate) fn edge_endpoints(d: &Diagram, e: EdgeId) -> Option<(Port, Port)> {
    let mut head = None;
    let mut tail = None;
    for (ci, c) in d.crossings().iter().enumerate() {
        let flow = c.flow?;
        for (si, &x) in c.slots.iter().enumerate() {
            if x == e {
                if flow[si] {
                    head = Some(Port::new(ci, si));
                } else {
                    tail = Some(Port::new(ci, si));
                }
            }
        }
    }
    Some((tail?, head?))
}
