//! Skein coefficient schemes: the sixteen crossing weights and the loop
//! value for the bicolor skein relations, over a chosen ring.
//!
//! The symbolic scheme realizes the general solution of the Reidemeister
//! constraint system in the five-variable Laurent ring; the `nor` scheme is
//! its specialization over `Z2[t]/(1+t+t^3)` with `a=1, b=t, w=1+t^2,
//! e=1+t, n=s=1`.

use super::f8::F8Element;
use super::laurent::{LaurentPoly, VarSet};
use super::Ring;

/// Compass direction of a bicolored crossing type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    N,
    S,
    E,
    W,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::N, Dir::S, Dir::E, Dir::W];

    pub fn index(self) -> usize {
        match self {
            Dir::N => 0,
            Dir::S => 1,
            Dir::E => 2,
            Dir::W => 3,
        }
    }

    /// Direction complement induced by exchanging the two colors.
    pub fn color_swapped(self) -> Dir {
        match self {
            Dir::N => Dir::S,
            Dir::S => Dir::N,
            Dir::E => Dir::W,
            Dir::W => Dir::E,
        }
    }
}

impl std::fmt::Display for Dir {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            Dir::N => 'N',
            Dir::S => 'S',
            Dir::E => 'E',
            Dir::W => 'W',
        };
        write!(f, "{c}")
    }
}

/// The sixteen skein coefficients plus the loop value, generic in the ring.
///
/// `pos[dir] = (a_dir, b_dir)` weights the H and V smoothings of a positive
/// crossing of that type; `neg[dir] = (a'_dir, b'_dir)` the negative one.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeCoeffs<R> {
    pos: [(R, R); 4],
    neg: [(R, R); 4],
    pub d: R,
}

impl<R: Ring> SchemeCoeffs<R> {
    pub fn new(pos: [(R, R); 4], neg: [(R, R); 4], d: R) -> Self {
        Self { pos, neg, d }
    }

    /// `(H, V)` weights for a crossing of the given type.
    pub fn weights(&self, dir: Dir, positive: bool) -> &(R, R) {
        if positive {
            &self.pos[dir.index()]
        } else {
            &self.neg[dir.index()]
        }
    }

    pub fn a(&self, dir: Dir) -> &R {
        &self.pos[dir.index()].0
    }
    pub fn b(&self, dir: Dir) -> &R {
        &self.pos[dir.index()].1
    }
    pub fn a_prime(&self, dir: Dir) -> &R {
        &self.neg[dir.index()].0
    }
    pub fn b_prime(&self, dir: Dir) -> &R {
        &self.neg[dir.index()].1
    }

    pub fn all_values(&self) -> Vec<&R> {
        let mut out = Vec::with_capacity(17);
        for i in 0..4 {
            out.push(&self.pos[i].0);
            out.push(&self.pos[i].1);
            out.push(&self.neg[i].0);
            out.push(&self.neg[i].1);
        }
        out.push(&self.d);
        out
    }
}

/// Ring tag for a scheme choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeRing {
    Symbolic,
    F8,
}

/// A coefficient scheme in one of the two supported rings.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientScheme {
    Symbolic(SchemeCoeffs<LaurentPoly>),
    Nor(SchemeCoeffs<F8Element>),
}

impl CoefficientScheme {
    /// The general five-variable solution: `a_n = a_s = na`, `b_n = b_s =
    /// nb`, `a_w = wa`, `b_w = wb`, `a_e = ea`, `b_e = eb`, primed values
    /// their monomial inverses with `e` and `w` exchanged, and
    /// `d = -a/b - b/a`.
    pub fn symbolic() -> Self {
        let vars = VarSet::enhanced();
        // Exponent order: [a, b, n, w, e].
        let mono = |expo: [i32; 5]| LaurentPoly::monomial(&vars, 1, &expo);
        let a_n = mono([1, 0, 1, 0, 0]);
        let b_n = mono([0, 1, 1, 0, 0]);
        let a_w = mono([1, 0, 0, 1, 0]);
        let b_w = mono([0, 1, 0, 1, 0]);
        let a_e = mono([1, 0, 0, 0, 1]);
        let b_e = mono([0, 1, 0, 0, 1]);
        let ap_n = mono([-1, 0, -1, 0, 0]);
        let bp_n = mono([0, -1, -1, 0, 0]);
        let ap_w = mono([-1, 0, 0, 0, -1]);
        let bp_w = mono([0, -1, 0, 0, -1]);
        let ap_e = mono([-1, 0, 0, -1, 0]);
        let bp_e = mono([0, -1, 0, -1, 0]);
        let d = LaurentPoly::monomial(&vars, -1, &[1, -1, 0, 0, 0])
            .add(&LaurentPoly::monomial(&vars, -1, &[-1, 1, 0, 0, 0]));
        // Dir order: N, S, E, W; the paper sets n = s.
        CoefficientScheme::Symbolic(SchemeCoeffs::new(
            [
                (a_n.clone(), b_n.clone()),
                (a_n, b_n),
                (a_e, b_e),
                (a_w, b_w),
            ],
            [
                (ap_n.clone(), bp_n.clone()),
                (ap_n, bp_n),
                (ap_e, bp_e),
                (ap_w, bp_w),
            ],
            d,
        ))
    }

    /// The finite-ring specialization over `Z2[t]/(1+t+t^3)`.
    pub fn nor() -> Self {
        let one = F8Element::ONE;
        let t = F8Element::T;
        let one_t = one + t; // 1 + t
        let one_t2 = one + F8Element::T2; // 1 + t^2
        let t_t2 = t + F8Element::T2; // t + t^2
        let d = one + t + F8Element::T2; // 1 + t + t^2
        CoefficientScheme::Nor(SchemeCoeffs::new(
            [
                (one, t),       // N+: a_n = 1, b_n = t
                (one, t),       // S+
                (one_t, t_t2),  // E+: a_e = 1+t, b_e = t+t^2
                (one_t2, one),  // W+: a_w = 1+t^2, b_w = 1
            ],
            [
                (one, one_t2),  // N-: a'_n = 1, b'_n = 1+t^2
                (one, one_t2),  // S-
                (t, one),       // E-: a'_e = t, b'_e = 1
                (t_t2, one_t),  // W-: a'_w = t+t^2, b'_w = 1+t
            ],
            d,
        ))
    }

    pub fn ring(&self) -> SchemeRing {
        match self {
            CoefficientScheme::Symbolic(_) => SchemeRing::Symbolic,
            CoefficientScheme::Nor(_) => SchemeRing::F8,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    #[test]
    fn symbolic_primed_east_is_inverse_of_west_scaled() {
        // a'_e = 1/(wa), b'_e = 1/(wb)
        let CoefficientScheme::Symbolic(s) = CoefficientScheme::symbolic() else {
            unreachable!()
        };
        let vars = VarSet::enhanced();
        assert_eq!(
            *s.a_prime(Dir::E),
            LaurentPoly::monomial(&vars, 1, &[-1, 0, 0, -1, 0])
        );
        assert_eq!(
            *s.b_prime(Dir::E),
            LaurentPoly::monomial(&vars, 1, &[0, -1, 0, -1, 0])
        );
        // every coefficient is a unit monomial
        for v in s.all_values() {
            if v == &s.d {
                continue;
            }
            let (_, c) = v.as_monomial().expect("coefficients are monomials");
            assert_eq!(c.abs(), BigInt::from(1));
        }
    }

    #[test]
    fn nor_values_match_specialization() {
        let CoefficientScheme::Nor(s) = CoefficientScheme::nor() else {
            unreachable!()
        };
        // a_w = 1 + t^2, b_w = 1, a_e = 1 + t, b_e = t + t^2
        assert_eq!(s.a(Dir::W).to_string(), "1+t^2");
        assert_eq!(s.b(Dir::W).to_string(), "1");
        assert_eq!(s.a(Dir::E).to_string(), "1+t");
        assert_eq!(s.b(Dir::E).to_string(), "t+t^2");
        assert_eq!(s.d.to_string(), "1+t+t^2");
        // every coefficient is a nonzero element of the field
        for v in s.all_values() {
            assert_ne!(*v, F8Element::ZERO);
        }
    }

    #[test]
    fn nor_primed_coefficients_are_inverses() {
        // a'_e * a_w = 1, b'_e * b_w = 1, and likewise for the other pairs
        // demanded by the simplified Reidemeister II system.
        let CoefficientScheme::Nor(s) = CoefficientScheme::nor() else {
            unreachable!()
        };
        let pairs = [
            (s.a_prime(Dir::E), s.a(Dir::W)),
            (s.b_prime(Dir::E), s.b(Dir::W)),
            (s.a_prime(Dir::W), s.a(Dir::E)),
            (s.b_prime(Dir::W), s.b(Dir::E)),
            (s.a_prime(Dir::N), s.a(Dir::N)),
            (s.b_prime(Dir::N), s.b(Dir::N)),
            (s.a_prime(Dir::S), s.a(Dir::S)),
            (s.b_prime(Dir::S), s.b(Dir::S)),
        ];
        for (p, q) in pairs {
            assert_eq!(*p * *q, F8Element::ONE);
        }
    }
}
