//! Multivariate Laurent polynomials with exact integer coefficients.
//!
//! A polynomial is a map from integer exponent vectors to nonzero `BigInt`
//! coefficients, kept in canonical (lexicographic) term order. The variable
//! set is fixed when a ring instance is created; mixing polynomials from
//! different variable sets is a bug and panics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use smallvec::{smallvec, SmallVec};
use thiserror::Error;

use super::Ring;

pub type Expo = SmallVec<[i32; 5]>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative power of a non-monomial")]
    NegativePowerOfNonMonomial,
    #[error("zero substituted into a negative exponent")]
    ZeroToNegativePower,
    #[error("substitution map is not a bijection on the variable set")]
    NotABijection,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("inverse of zero in Z2[t]/(1+t+t^3)")]
    ZeroInverse,
}

/// Ordered set of variable names, fixed per ring instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "variable set must be nonempty");
        Self { names: Arc::new(names) }
    }

    /// `{a, b, n, w, e}` for the enhanced bicolor bracket.
    pub fn enhanced() -> Self {
        Self::new(["a", "b", "n", "w", "e"])
    }

    /// `{x, y}` for the tricolor bracket.
    pub fn tricolor() -> Self {
        Self::new(["x", "y"])
    }

    /// `{A}` for the Kauffman bracket.
    pub fn kauffman() -> Self {
        Self::new(["A"])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exact multivariate Laurent polynomial over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Expo, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(smallvec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn monomial(vars: &VarSet, coeff: impl Into<BigInt>, expo: &[i32]) -> Self {
        assert_eq!(expo.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(SmallVec::from_slice(expo), c);
        }
        p
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self, AlgebraError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut expo: Expo = smallvec![0; vars.len()];
        expo[i] = 1;
        Ok(Self::monomial(vars, 1, &expo))
    }

    /// `name^k` for any integer `k` (Laurent powers allowed).
    pub fn var_pow(vars: &VarSet, name: &str, k: i32) -> Result<Self, AlgebraError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut expo: Expo = smallvec![0; vars.len()];
        expo[i] = k;
        Ok(Self::monomial(vars, 1, &expo))
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single `(exponents, coefficient)` pair of a monomial.
    pub fn as_monomial(&self) -> Option<(&Expo, &BigInt)> {
        if self.is_monomial() {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "cross-ring arithmetic: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn add_term(&mut self, expo: Expo, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Integer power; `k < 0` requires a monomial with unit coefficient
    /// handled by `monomial_pow`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Laurent power of a monomial: exponents scale by `k`, the coefficient
    /// must be `±1` when `k < 0` (the only units of `Z`).
    pub fn monomial_pow(&self, k: i32) -> Result<Self, AlgebraError> {
        if k >= 0 && !self.is_monomial() {
            return Ok(self.pow(k as u32));
        }
        let (expo, coeff) = self
            .as_monomial()
            .ok_or(AlgebraError::NegativePowerOfNonMonomial)?;
        if k < 0 && !(coeff.is_one() || (-coeff).is_one()) {
            return Err(AlgebraError::NegativePowerOfNonMonomial);
        }
        let new_expo: Expo = expo.iter().map(|e| e * k).collect();
        let new_coeff = if coeff.is_one() || k % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        // coeff is ±1 when k < 0; otherwise take the true power.
        let new_coeff = if k >= 0 { coeff.pow(k as u32) } else { new_coeff };
        Ok(Self::monomial(&self.vars, new_coeff, &new_expo))
    }

    /// Rename variables by a bijection of the variable set.
    pub fn substitute(&self, map: &[(&str, &str)]) -> Result<Self, AlgebraError> {
        let n = self.vars.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for (from, to) in map {
            let i = self
                .vars
                .index_of(from)
                .ok_or_else(|| AlgebraError::UnknownVariable(from.to_string()))?;
            let j = self
                .vars
                .index_of(to)
                .ok_or_else(|| AlgebraError::UnknownVariable(to.to_string()))?;
            perm[i] = j;
        }
        let mut seen = vec![false; n];
        for &j in &perm {
            if seen[j] {
                return Err(AlgebraError::NotABijection);
            }
            seen[j] = true;
        }
        let mut out = Self::zero(&self.vars);
        for (expo, coeff) in &self.terms {
            let mut new_expo: Expo = smallvec![0; n];
            for (i, e) in expo.iter().enumerate() {
                new_expo[perm[i]] = *e;
            }
            out.add_term(new_expo, coeff.clone());
        }
        Ok(out)
    }

    /// Evaluate at a total complex assignment of the variables.
    pub fn eval_complex(&self, values: &[Complex64]) -> Result<Complex64, AlgebraError> {
        assert_eq!(values.len(), self.vars.len(), "assignment length mismatch");
        let mut total = Complex64::new(0.0, 0.0);
        for (expo, coeff) in &self.terms {
            let mut term = bigint_to_complex(coeff);
            for (v, e) in values.iter().zip(expo.iter()) {
                if *e == 0 {
                    continue;
                }
                if v.norm_sqr() == 0.0 && *e < 0 {
                    return Err(AlgebraError::ZeroToNegativePower);
                }
                term *= v.powi(*e);
            }
            total += term;
        }
        Ok(total)
    }
}

fn bigint_to_complex(c: &BigInt) -> Complex64 {
    // Exact for coefficients below 2^53, which covers every state sum at
    // the supported crossing envelope; larger ones degrade gracefully.
    let f = c.to_string().parse::<f64>().unwrap_or(f64::NAN);
    Complex64::new(f, 0.0)
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.vars)
    }
    fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (expo, coeff) in &other.terms {
            out.add_term(expo.clone(), coeff.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (expo, coeff) in &other.terms {
            out.add_term(expo.clone(), -coeff.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let expo: Expo = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(expo, c1 * c2);
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        Ring::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        Ring::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        Ring::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let zero = LaurentPoly::zero(&self.vars);
        Ring::sub(&zero, self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coeff}")?;
            for (name, e) in self.vars.names().iter().zip(expo.iter()) {
                if *e != 0 {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = AlgebraError;

    /// Parses the canonical text form, e.g. `-1*a^1*b^-1 + -1*a^-1*b^1`.
    ///
    /// The variable set is reconstructed from the union of variable names in
    /// order of first appearance; use `parse_in` to pin a known set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut names: Vec<String> = Vec::new();
        for piece in s.split('*') {
            if let Some((name, _)) = piece.trim().split_once('^') {
                let name = name.trim();
                if !name.is_empty()
                    && name.chars().all(|c| c.is_alphabetic())
                    && !names.iter().any(|n| n == name)
                {
                    names.push(name.to_string());
                }
            }
        }
        if names.is_empty() {
            names.push("x".to_string());
        }
        let vars = VarSet::new(names);
        LaurentPoly::parse_in(&vars, s)
    }
}

impl LaurentPoly {
    /// Parse the canonical text form against a fixed variable set.
    pub fn parse_in(vars: &VarSet, s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(vars));
        }
        let mut out = Self::zero(vars);
        for term in s.split(" + ") {
            let mut coeff: Option<BigInt> = None;
            let mut expo: Expo = smallvec![0; vars.len()];
            for factor in term.trim().split('*') {
                let factor = factor.trim();
                if let Some((name, pow)) = factor.split_once('^') {
                    let i = vars
                        .index_of(name.trim())
                        .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
                    let p: i32 = pow
                        .trim()
                        .parse()
                        .map_err(|_| AlgebraError::Parse(format!("bad exponent `{pow}`")))?;
                    expo[i] += p;
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| AlgebraError::Parse(format!("bad coefficient `{factor}`")))?;
                    coeff = Some(match coeff {
                        None => c,
                        Some(prev) => prev * c,
                    });
                }
            }
            out.add_term(expo, coeff.unwrap_or_else(BigInt::one));
        }
        Ok(out)
    }
}
