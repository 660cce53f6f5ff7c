//! The Reidemeister II and III constraint systems on a coefficient scheme,
//! checked by exact residuals.

use crate::algebra::{CoefficientScheme, Dir, Ring, SchemeCoeffs};

use super::{ConstraintEntry, ConstraintReport};

/// Symbolic handle on one of the sixteen scheme coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Coef {
    A(Dir),
    B(Dir),
    Ap(Dir),
    Bp(Dir),
}

impl Coef {
    fn name(self) -> String {
        match self {
            Coef::A(d) => format!("a_{}", d.to_string().to_lowercase()),
            Coef::B(d) => format!("b_{}", d.to_string().to_lowercase()),
            Coef::Ap(d) => format!("a'_{}", d.to_string().to_lowercase()),
            Coef::Bp(d) => format!("b'_{}", d.to_string().to_lowercase()),
        }
    }

    fn value<R: Ring>(self, s: &SchemeCoeffs<R>) -> R {
        match self {
            Coef::A(d) => s.a(d).clone(),
            Coef::B(d) => s.b(d).clone(),
            Coef::Ap(d) => s.a_prime(d).clone(),
            Coef::Bp(d) => s.b_prime(d).clone(),
        }
    }
}

/// A term is a product of coefficients times `d^power`; a side is a sum of
/// terms, with the empty product denoting 1.
type Term = (Vec<Coef>, u32);
type Side = Vec<Term>;

fn eval_side<R: Ring>(s: &SchemeCoeffs<R>, side: &Side) -> R {
    let mut total = s.d.zero_like();
    for (coeffs, dpow) in side {
        let mut term = s.d.one_like();
        for c in coeffs {
            term = term.mul(&c.value(s));
        }
        for _ in 0..*dpow {
            term = term.mul(&s.d);
        }
        total = total.add(&term);
    }
    total
}

fn side_name(side: &Side) -> String {
    if side.is_empty() {
        return "0".into();
    }
    side.iter()
        .map(|(coeffs, dpow)| {
            let mut parts: Vec<String> = coeffs.iter().map(|c| c.name()).collect();
            match dpow {
                0 => {}
                1 => parts.push("d".into()),
                k => parts.push(format!("d^{k}")),
            }
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn check_equations<R: Ring>(
    s: &SchemeCoeffs<R>,
    equations: &[(Side, Side)],
) -> ConstraintReport {
    let entries = equations
        .iter()
        .map(|(lhs, rhs)| {
            let residual = eval_side(s, lhs).sub(&eval_side(s, rhs));
            ConstraintEntry {
                eq: format!("{} = {}", side_name(lhs), side_name(rhs)),
                ok: residual.is_zero(),
                residual: residual.to_string(),
            }
        })
        .collect();
    ConstraintReport { entries }
}

fn one() -> Side {
    vec![(vec![], 0)]
}

fn zero() -> Side {
    vec![]
}

/// The second Reidemeister move forces, for each way of coloring the two
/// strands, a unit equation and a cancellation equation; eight pairs in
/// all.
pub(crate) fn r2_equations() -> Vec<(Side, Side)> {
    use Coef::*;
    use Dir::*;
    let mut eqs: Vec<(Side, Side)> = Vec::new();
    // (first, second) per line: a_x a'_y = 1 and
    // a_x b'_y + b_x a'_y + b_x b'_y d = 0
    let unit_lines = [(W, E), (E, W), (S, S), (N, N)];
    for (x, y) in unit_lines {
        eqs.push((vec![(vec![A(x), Ap(y)], 0)], one()));
        eqs.push((
            vec![
                (vec![A(x), Bp(y)], 0),
                (vec![B(x), Ap(y)], 0),
                (vec![B(x), Bp(y)], 1),
            ],
            zero(),
        ));
    }
    // the mirrored family: b_x b'_y = 1 and
    // b_x a'_y + a_x b'_y + a_x a'_y d = 0
    for (x, y) in unit_lines {
        eqs.push((vec![(vec![B(x), Bp(y)], 0)], one()));
        eqs.push((
            vec![
                (vec![B(x), Ap(y)], 0),
                (vec![A(x), Bp(y)], 0),
                (vec![A(x), Ap(y)], 1),
            ],
            zero(),
        ));
    }
    eqs
}

/// The twenty equations of the single oriented third move on the scheme,
/// four subscript families of five.
pub(crate) fn r3_equations() -> Vec<(Side, Side)> {
    use Coef::*;
    use Dir::*;
    // each family is given by the six subscript slots
    // (p, q, r | u, v, w) standing for the pattern
    //   b_p b'_q a_r = b_u b'_v a_w
    //   b_p a'_q b_r = b_u a'_v b_w
    //   a_p b'_q b_r = a_u b'_v b_w
    //   b_p b'_q b_r = d a_u a'_v a_w + a_u a'_v b_w + a_u b'_v a_w + b_u a'_v a_w
    //   b_u b'_v b_w = d a_p a'_q a_r + a_p a'_q b_r + a_p b'_q a_r + b_p a'_q a_r
    let families = [
        (N, N, N, S, S, S),
        (N, W, E, S, E, W),
        (W, S, E, E, N, W),
        (W, E, N, E, W, S),
    ];
    let mut eqs = Vec::new();
    for (p, q, r, u, v, w) in families {
        eqs.push((
            vec![(vec![B(p), Bp(q), A(r)], 0)],
            vec![(vec![B(u), Bp(v), A(w)], 0)],
        ));
        eqs.push((
            vec![(vec![B(p), Ap(q), B(r)], 0)],
            vec![(vec![B(u), Ap(v), B(w)], 0)],
        ));
        eqs.push((
            vec![(vec![A(p), Bp(q), B(r)], 0)],
            vec![(vec![A(u), Bp(v), B(w)], 0)],
        ));
        eqs.push((
            vec![(vec![B(p), Bp(q), B(r)], 0)],
            vec![
                (vec![A(u), Ap(v), A(w)], 1),
                (vec![A(u), Ap(v), B(w)], 0),
                (vec![A(u), Bp(v), A(w)], 0),
                (vec![B(u), Ap(v), A(w)], 0),
            ],
        ));
        eqs.push((
            vec![(vec![B(u), Bp(v), B(w)], 0)],
            vec![
                (vec![A(p), Ap(q), A(r)], 1),
                (vec![A(p), Ap(q), B(r)], 0),
                (vec![A(p), Bp(q), A(r)], 0),
                (vec![B(p), Ap(q), A(r)], 0),
            ],
        ));
    }
    eqs
}

pub fn verify_r2_equations(scheme: &CoefficientScheme) -> ConstraintReport {
    match scheme {
        CoefficientScheme::Symbolic(s) => check_equations(s, &r2_equations()),
        CoefficientScheme::Nor(s) => check_equations(s, &r2_equations()),
    }
}

pub fn verify_r3_equations(scheme: &CoefficientScheme) -> ConstraintReport {
    match scheme {
        CoefficientScheme::Symbolic(s) => check_equations(s, &r3_equations()),
        CoefficientScheme::Nor(s) => check_equations(s, &r3_equations()),
    }
}

/// The unknotting factors of a positive and negative kink:
/// `(d a_n + b_n, d a'_n + b'_n)`. Their product must be one for the two
/// kink chiralities to cancel.
pub fn kink_factors(scheme: &CoefficientScheme) -> (String, String, bool) {
    fn compute<R: Ring>(s: &SchemeCoeffs<R>) -> (String, String, bool) {
        let pos = s.d.mul(s.a(Dir::N)).add(s.b(Dir::N));
        let neg = s.d.mul(s.a_prime(Dir::N)).add(s.b_prime(Dir::N));
        let unit = pos.mul(&neg) == s.d.one_like();
        (pos.to_string(), neg.to_string(), unit)
    }
    match scheme {
        CoefficientScheme::Symbolic(s) => compute(s),
        CoefficientScheme::Nor(s) => compute(s),
    }
}
