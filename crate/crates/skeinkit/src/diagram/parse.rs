//! PD source parser.
//!
//! Grammar: whitespace-separated terms. `X[a,b,c,d]` is a classical
//! crossing, `X+[a,b,c,d]` / `X-[a,b,c,d]` carry an explicit sign,
//! `P[a,b,c,d]` is virtual. Edge ids are nonnegative integers. An optional
//! `unknots=<k>` term adds crossing-free circles.

use super::{Crossing, Diagram, DiagramError, Sign};

pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut crossings = Vec::new();
    let mut unknots = 0usize;
    for token in text.split_whitespace() {
        if let Some(k) = token.strip_prefix("unknots=") {
            unknots = k
                .parse()
                .map_err(|_| DiagramError::MalformedToken(token.to_string()))?;
            continue;
        }
        let (head, rest) = token
            .split_once('[')
            .ok_or_else(|| DiagramError::MalformedToken(token.to_string()))?;
        let body = rest
            .strip_suffix(']')
            .ok_or_else(|| DiagramError::MalformedToken(token.to_string()))?;
        let ids: Result<Vec<usize>, _> = body.split(',').map(|s| s.trim().parse()).collect();
        let ids = ids.map_err(|_| DiagramError::MalformedToken(token.to_string()))?;
        if ids.len() != 4 {
            return Err(DiagramError::MalformedToken(token.to_string()));
        }
        let slots = [ids[0], ids[1], ids[2], ids[3]];
        let crossing = match head {
            "X" => Crossing::classical(slots),
            "X+" => Crossing::classical_signed(slots, Sign::Positive),
            "X-" => Crossing::classical_signed(slots, Sign::Negative),
            "P" => Crossing::virtual_crossing(slots),
            _ => return Err(DiagramError::MalformedToken(token.to_string())),
        };
        crossings.push(crossing);
    }
    Diagram::new(crossings, unknots)
}
