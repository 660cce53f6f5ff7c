//! Two-color alternation colorings.
//!
//! A bicoloring assigns solid or dotted to every edge so that the color
//! flips at every classical crossing pass (on both strands) and passes
//! through virtual crossings unchanged. A classical diagram with k
//! components has exactly `2^k` of them; a virtual diagram may have none,
//! because a component can pass classical crossings an odd number of
//! times.

use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::Dir;
use crate::diagram::{Compass, CrossingKind, Diagram, EdgeId, Sign};

use super::ColoringError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BicolorColor {
    Solid,
    Dotted,
}

impl BicolorColor {
    pub fn swapped(self) -> Self {
        match self {
            BicolorColor::Solid => BicolorColor::Dotted,
            BicolorColor::Dotted => BicolorColor::Solid,
        }
    }
}

/// An edge-to-color map; crossing-free circles carry their own colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicoloring {
    pub edges: BTreeMap<EdgeId, BicolorColor>,
    pub circles: Vec<BicolorColor>,
}

impl Bicoloring {
    pub fn color_of(&self, e: EdgeId) -> Option<BicolorColor> {
        self.edges.get(&e).copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.edges {
            let name = match c {
                BicolorColor::Solid => "solid",
                BicolorColor::Dotted => "dotted",
            };
            map.insert(e.to_string(), json!(name));
        }
        for (i, c) in self.circles.iter().enumerate() {
            let name = match c {
                BicolorColor::Solid => "solid",
                BicolorColor::Dotted => "dotted",
            };
            map.insert(format!("circle{i}"), json!(name));
        }
        serde_json::Value::Object(map)
    }
}

/// The crossing type of relations driven by a bicoloring: the compass ray
/// separating the two dotted ends, plus the crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BicolorCrossingType {
    pub dir: Dir,
    pub sign: Sign,
}

impl std::fmt::Display for BicolorCrossingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{}{}", self.dir, s)
    }
}

/// All bicolorings of an oriented diagram, in lexicographic order of the
/// per-component seed colors (components ordered by lowest edge, solid
/// before dotted). Returns the empty list when the alternation rule is
/// unsatisfiable, which only happens for virtual diagrams.
pub fn enumerate_bicolorings(d: &Diagram) -> Result<Vec<Bicoloring>, ColoringError> {
    let comps = d.components()?;
    // per component: relative color of each edge against the seed, and a
    // parity check when the cycle closes
    let mut relative: Vec<BTreeMap<EdgeId, bool>> = Vec::with_capacity(comps.len());
    for comp in &comps {
        let mut flip = false;
        let mut rel = BTreeMap::new();
        for &e in comp {
            rel.insert(e, flip);
            flip ^= classical_pass(d, e)?;
        }
        if flip {
            // odd number of classical passes: no consistent coloring
            return Ok(Vec::new());
        }
        relative.push(rel);
    }
    let k = comps.len() + d.unknot_components();
    let mut out = Vec::with_capacity(1 << k);
    for seeds in 0..(1u32 << k) {
        let mut edges = BTreeMap::new();
        for (i, rel) in relative.iter().enumerate() {
            let seed = if seeds >> (k - 1 - i) & 1 == 0 {
                BicolorColor::Solid
            } else {
                BicolorColor::Dotted
            };
            for (&e, &flipped) in rel {
                edges.insert(e, if flipped { seed.swapped() } else { seed });
            }
        }
        let circles = (0..d.unknot_components())
            .map(|j| {
                let bit = k - 1 - (comps.len() + j);
                if seeds >> bit & 1 == 0 {
                    BicolorColor::Solid
                } else {
                    BicolorColor::Dotted
                }
            })
            .collect();
        out.push(Bicoloring { edges, circles });
    }
    Ok(out)
}

/// Whether the pass at the head of `e` flips the color (classical) or
/// keeps it (virtual).
fn classical_pass(d: &Diagram, e: EdgeId) -> Result<bool, ColoringError> {
    for c in d.crossings() {
        let flow = c.flow.ok_or(crate::diagram::DiagramError::NotOriented)?;
        for (si, &x) in c.slots.iter().enumerate() {
            if x == e && flow[si] {
                return Ok(c.kind == CrossingKind::Classical);
            }
        }
    }
    Err(ColoringError::MissingEdge(e))
}

/// Exchange solid and dotted everywhere; an involution.
pub fn swap_colors(coloring: &Bicoloring) -> Bicoloring {
    Bicoloring {
        edges: coloring
            .edges
            .iter()
            .map(|(&e, &c)| (e, c.swapped()))
            .collect(),
        circles: coloring.circles.iter().map(|c| c.swapped()).collect(),
    }
}

/// Classify one classical crossing under a bicoloring: place the four end
/// colors into the canonical frame and name the compass ray separating the
/// two dotted ends.
pub fn classify_bicolor(
    d: &Diagram,
    coloring: &Bicoloring,
    crossing: usize,
) -> Result<BicolorCrossingType, ColoringError> {
    let c = &d.crossings()[crossing];
    if !c.is_classical() {
        return Err(ColoringError::VirtualCrossing(crossing));
    }
    let sign = c.sign.ok_or(crate::diagram::DiagramError::NotOriented)?;
    let frame = d.canonical_frame(crossing)?;
    let mut dotted: Vec<Compass> = Vec::with_capacity(2);
    for (si, &e) in c.slots.iter().enumerate() {
        let color = coloring
            .color_of(e)
            .ok_or(ColoringError::MissingEdge(e))?;
        if color == BicolorColor::Dotted {
            dotted.push(frame.compass_of_slot(si));
        }
    }
    if dotted.len() != 2 {
        return Err(ColoringError::DottedEndCount(crossing));
    }
    let has = |x: Compass| dotted.contains(&x);
    let dir = match () {
        _ if has(Compass::SW) && has(Compass::SE) => Dir::S,
        _ if has(Compass::NW) && has(Compass::NE) => Dir::N,
        _ if has(Compass::SE) && has(Compass::NE) => Dir::E,
        _ if has(Compass::SW) && has(Compass::NW) => Dir::W,
        _ => return Err(ColoringError::OppositeDottedEnds(crossing)),
    };
    Ok(BicolorCrossingType { dir, sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{HOPF, TREFOIL};

    #[test]
    fn counts_are_two_to_the_components() {
        let trefoil = Diagram::from_pd(TREFOIL).unwrap();
        assert_eq!(enumerate_bicolorings(&trefoil).unwrap().len(), 2);
        let hopf = Diagram::from_pd(HOPF).unwrap();
        assert_eq!(enumerate_bicolorings(&hopf).unwrap().len(), 4);
        let unknot = Diagram::unknots(1);
        assert_eq!(enumerate_bicolorings(&unknot).unwrap().len(), 2);
    }

    #[test]
    fn alternation_holds_edge_by_edge() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        for coloring in enumerate_bicolorings(&d).unwrap() {
            for c in d.crossings() {
                let (ui, uo) = c.under();
                let (oi, oo) = c.over().unwrap();
                assert_ne!(coloring.color_of(ui), coloring.color_of(uo));
                assert_ne!(coloring.color_of(oi), coloring.color_of(oo));
            }
        }
    }

    #[test]
    fn swap_is_involution_and_maps_between_the_two() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let colorings = enumerate_bicolorings(&d).unwrap();
        let swapped = swap_colors(&colorings[0]);
        assert_eq!(swapped, colorings[1]);
        assert_eq!(swap_colors(&swapped), colorings[0]);
    }

    #[test]
    fn knot_types_avoid_east_west() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        for coloring in enumerate_bicolorings(&d).unwrap() {
            for ci in 0..d.crossings().len() {
                let t = classify_bicolor(&d, &coloring, ci).unwrap();
                assert!(matches!(t.dir, Dir::N | Dir::S), "got {t}");
            }
        }
    }

    #[test]
    fn swap_complements_the_direction() {
        let d = Diagram::from_pd(HOPF).unwrap();
        for coloring in enumerate_bicolorings(&d).unwrap() {
            let swapped = swap_colors(&coloring);
            for ci in 0..d.crossings().len() {
                let a = classify_bicolor(&d, &coloring, ci).unwrap();
                let b = classify_bicolor(&d, &swapped, ci).unwrap();
                assert_eq!(b.dir, a.dir.color_swapped());
                assert_eq!(b.sign, a.sign);
            }
        }
    }

    #[test]
    fn virtual_trefoil_classifies_cleanly() {
        let d = Diagram::from_pd("X+[4,2,5,1] X+[5,3,6,2] P[3,6,4,1]").unwrap();
        let colorings = enumerate_bicolorings(&d).unwrap();
        assert_eq!(colorings.len(), 2);
        for coloring in &colorings {
            for (ci, c) in d.crossings().iter().enumerate() {
                if c.is_classical() {
                    classify_bicolor(&d, coloring, ci).unwrap();
                }
            }
        }
    }

    #[test]
    fn odd_parity_virtual_component_has_no_coloring() {
        // two components crossing once classically and once virtually:
        // each passes a classical crossing an odd number of times, so the
        // alternation rule cannot close up
        let d = Diagram::from_pd("X+[1,4,2,3] P[2,4,1,3]").unwrap();
        assert_eq!(d.component_count().unwrap(), 2);
        assert!(enumerate_bicolorings(&d).unwrap().is_empty());
    }
}
