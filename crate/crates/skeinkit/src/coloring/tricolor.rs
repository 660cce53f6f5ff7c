//! Fox tricolorings.
//!
//! A Fox arc is a maximal chain of edges joined through over-passes and
//! virtual passes; under-passes break arcs. A tricoloring assigns a color
//! in `Z/3` to each arc so that at every classical crossing twice the over
//! color equals the sum of the two under colors, equivalently the three
//! incident arcs carry all three colors or just one.

use std::collections::BTreeMap;

use serde_json::json;

use crate::diagram::{CrossingKind, Diagram, EdgeId, Sign};

use super::gf3;
use super::ColoringError;

/// Materialize at most this many tricolorings by default (`3^8`).
pub const DEFAULT_ENUMERATION_CAP: u128 = 6561;

/// Colors per Fox arc, keyed by the arc representative (lowest edge of the
/// arc); crossing-free circles are their own arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tricoloring {
    arc_colors: BTreeMap<EdgeId, u8>,
    edge_arc: BTreeMap<EdgeId, EdgeId>,
    circle_colors: Vec<u8>,
}

impl Tricoloring {
    pub fn color_of_edge(&self, e: EdgeId) -> Option<u8> {
        self.edge_arc.get(&e).and_then(|a| self.arc_colors.get(a)).copied()
    }

    /// True when only one color appears anywhere.
    pub fn is_trivial(&self) -> bool {
        let mut colors: Vec<u8> = self.arc_colors.values().copied().collect();
        colors.extend(self.circle_colors.iter().copied());
        colors.windows(2).all(|w| w[0] == w[1])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (arc, color) in &self.arc_colors {
            map.insert(arc.to_string(), json!(color));
        }
        for (i, color) in self.circle_colors.iter().enumerate() {
            map.insert(format!("circle{i}"), json!(color));
        }
        serde_json::Value::Object(map)
    }

    /// Apply a permutation of the three colors.
    pub fn permuted(&self, perm: [u8; 3]) -> Self {
        Self {
            arc_colors: self
                .arc_colors
                .iter()
                .map(|(&a, &c)| (a, perm[c as usize]))
                .collect(),
            edge_arc: self.edge_arc.clone(),
            circle_colors: self.circle_colors.iter().map(|&c| perm[c as usize]).collect(),
        }
    }
}

/// Group edges into Fox arcs; returns the edge-to-representative map and
/// the sorted arc representatives.
pub fn fox_arcs(d: &Diagram) -> (BTreeMap<EdgeId, EdgeId>, Vec<EdgeId>) {
    let ids = d.edge_ids();
    let index: BTreeMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for c in d.crossings() {
        match c.kind {
            CrossingKind::Classical => {
                // the over strand continues through; slots 1 and 3
                union(&mut parent, index[&c.slots[1]], index[&c.slots[3]]);
            }
            CrossingKind::Virtual => {
                union(&mut parent, index[&c.slots[0]], index[&c.slots[2]]);
                union(&mut parent, index[&c.slots[1]], index[&c.slots[3]]);
            }
        }
    }
    // representative = lowest edge id in the class
    let mut edge_arc = BTreeMap::new();
    for &e in &ids {
        let root = find(&mut parent, index[&e]);
        edge_arc.insert(e, ids[root]);
    }
    let mut reps: Vec<EdgeId> = edge_arc.values().copied().collect();
    reps.sort_unstable();
    reps.dedup();
    (edge_arc, reps)
}

/// Exact count plus (when within the cap) the materialized colorings.
#[derive(Debug, Clone)]
pub struct TricolorSet {
    pub count: u128,
    pub colorings: Option<Vec<Tricoloring>>,
}

/// Solve the mod-3 system: one equation `2*over = under_in + under_out`
/// per classical crossing, variables the Fox arcs. The count is always
/// `3^dim(kernel)`; the colorings are enumerated when the count is at most
/// `cap`.
pub fn enumerate_tricolorings_with_cap(
    d: &Diagram,
    cap: u128,
) -> Result<TricolorSet, ColoringError> {
    let (edge_arc, reps) = fox_arcs(d);
    let arc_index: BTreeMap<EdgeId, usize> =
        reps.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let nvars = reps.len() + d.unknot_components();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for c in d.crossings() {
        if !c.is_classical() {
            continue;
        }
        let (over_in, _) = c.over().ok_or(crate::diagram::DiagramError::NotOriented)?;
        let (under_in, under_out) = c.under();
        let mut row = vec![0u8; nvars];
        row[arc_index[&edge_arc[&over_in]]] += 2;
        row[arc_index[&edge_arc[&under_in]]] += 3 - 1;
        row[arc_index[&edge_arc[&under_out]]] += 3 - 1;
        for x in &mut row {
            *x %= 3;
        }
        rows.push(row);
    }
    let pivots = gf3::row_reduce(&mut rows);
    let dim = (nvars - pivots.len()) as u32;
    let count = 3u128.pow(dim);
    let colorings = if count <= cap {
        let sols = gf3::kernel_solutions(&rows, &pivots, nvars);
        Some(
            sols.into_iter()
                .map(|sol| Tricoloring {
                    arc_colors: reps
                        .iter()
                        .enumerate()
                        .map(|(i, &a)| (a, sol[i]))
                        .collect(),
                    edge_arc: edge_arc.clone(),
                    circle_colors: sol[reps.len()..].to_vec(),
                })
                .collect(),
        )
    } else {
        None
    };
    Ok(TricolorSet { count, colorings })
}

pub fn enumerate_tricolorings(d: &Diagram) -> Result<TricolorSet, ColoringError> {
    enumerate_tricolorings_with_cap(d, DEFAULT_ENUMERATION_CAP)
}

/// The number of tricolorings, trivial ones included.
pub fn tri_count(d: &Diagram) -> Result<u128, ColoringError> {
    Ok(enumerate_tricolorings_with_cap(d, 0)?.count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TricolorKind {
    /// All three incident arcs share one color.
    Mono,
    /// All three colors are present.
    Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TricolorCrossingType {
    pub kind: TricolorKind,
    pub sign: Sign,
}

pub fn classify_tricolor(
    d: &Diagram,
    coloring: &Tricoloring,
    crossing: usize,
) -> Result<TricolorCrossingType, ColoringError> {
    let c = &d.crossings()[crossing];
    if !c.is_classical() {
        return Err(ColoringError::VirtualCrossing(crossing));
    }
    let sign = c.sign.ok_or(crate::diagram::DiagramError::NotOriented)?;
    let (over_in, _) = c.over().ok_or(crate::diagram::DiagramError::NotOriented)?;
    let (under_in, under_out) = c.under();
    let over = coloring
        .color_of_edge(over_in)
        .ok_or(ColoringError::MissingEdge(over_in))?;
    let ui = coloring
        .color_of_edge(under_in)
        .ok_or(ColoringError::MissingEdge(under_in))?;
    let uo = coloring
        .color_of_edge(under_out)
        .ok_or(ColoringError::MissingEdge(under_out))?;
    if (2 * over) % 3 != (ui + uo) % 3 {
        return Err(ColoringError::FoxCondition(crossing));
    }
    let kind = if over == ui && over == uo {
        TricolorKind::Mono
    } else {
        TricolorKind::Poly
    };
    Ok(TricolorCrossingType { kind, sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{FIGURE_EIGHT, TREFOIL};

    #[test]
    fn counts_match_knot_table() {
        let trefoil = Diagram::from_pd(TREFOIL).unwrap();
        assert_eq!(tri_count(&trefoil).unwrap(), 9);
        let fig8 = Diagram::from_pd(FIGURE_EIGHT).unwrap();
        assert_eq!(tri_count(&fig8).unwrap(), 3);
        assert_eq!(tri_count(&Diagram::unknots(1)).unwrap(), 3);
    }

    #[test]
    fn trefoil_brute_force_oracle() {
        // independent check: color the three arcs directly and count
        // assignments satisfying the Fox rule at all crossings
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let (edge_arc, reps) = fox_arcs(&d);
        assert_eq!(reps.len(), 3);
        let mut valid = 0;
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    let color = |e: EdgeId| {
                        let arc = edge_arc[&e];
                        [a, b, c][reps.iter().position(|&r| r == arc).unwrap()]
                    };
                    let ok = d.crossings().iter().all(|x| {
                        let (oi, _) = x.over().unwrap();
                        let (ui, uo) = x.under();
                        (2 * color(oi)) % 3 == (color(ui) + color(uo)) % 3
                    });
                    if ok {
                        valid += 1;
                    }
                }
            }
        }
        assert_eq!(valid, 9);
        assert_eq!(tri_count(&d).unwrap(), valid);
    }

    #[test]
    fn enumeration_respects_cap_and_count() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let full = enumerate_tricolorings(&d).unwrap();
        assert_eq!(full.count, 9);
        assert_eq!(full.colorings.as_ref().unwrap().len(), 9);
        let capped = enumerate_tricolorings_with_cap(&d, 8).unwrap();
        assert_eq!(capped.count, 9);
        assert!(capped.colorings.is_none());
    }

    #[test]
    fn closed_under_color_permutations() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let set = enumerate_tricolorings(&d).unwrap();
        let all = set.colorings.unwrap();
        for perm in [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]] {
            for t in &all {
                let p = t.permuted(perm);
                assert!(all.contains(&p));
            }
        }
    }

    #[test]
    fn trivial_coloring_is_mono_everywhere() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let all = enumerate_tricolorings(&d).unwrap().colorings.unwrap();
        let trivial = all.iter().find(|t| t.is_trivial()).unwrap();
        for ci in 0..d.crossings().len() {
            let t = classify_tricolor(&d, trivial, ci).unwrap();
            assert_eq!(t.kind, TricolorKind::Mono);
        }
    }

    #[test]
    fn nontrivial_trefoil_coloring_is_poly_everywhere() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let all = enumerate_tricolorings(&d).unwrap().colorings.unwrap();
        for t in all.iter().filter(|t| !t.is_trivial()) {
            for ci in 0..d.crossings().len() {
                let ty = classify_tricolor(&d, t, ci).unwrap();
                assert_eq!(ty.kind, TricolorKind::Poly);
            }
        }
    }
}
