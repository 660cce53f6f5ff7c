//! The quotient ring `Z2[t]/(1 + t + t^3)`, a field with eight elements.
//!
//! Elements are residue polynomials `c0 + c1*t + c2*t^2` packed into three
//! bits. Addition is XOR; multiplication reduces with `t^3 = 1 + t`.

use std::fmt;
use std::str::FromStr;

use super::laurent::AlgebraError;
use super::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct F8Element(u8);

impl F8Element {
    pub const ZERO: Self = Self(0b000);
    pub const ONE: Self = Self(0b001);
    pub const T: Self = Self(0b010);
    pub const T2: Self = Self(0b100);

    /// Build from coefficient bits `(c0, c1, c2)` of `c0 + c1 t + c2 t^2`.
    pub fn new(c0: bool, c1: bool, c2: bool) -> Self {
        Self((c0 as u8) | (c1 as u8) << 1 | (c2 as u8) << 2)
    }

    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 8, "residue out of range");
        Self(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn mul(self, other: Self) -> Self {
        // Carry-less product of degree <= 2 inputs, then reduce t^3 -> 1+t,
        // t^4 -> t+t^2.
        let mut wide: u8 = 0;
        for i in 0..3 {
            if self.0 >> i & 1 == 1 {
                wide ^= other.0 << i;
            }
        }
        let mut low = wide & 0b111;
        if wide >> 3 & 1 == 1 {
            low ^= 0b011;
        }
        if wide >> 4 & 1 == 1 {
            low ^= 0b110;
        }
        Self(low)
    }

    /// Multiplicative inverse; the nonzero elements form a group of order 7,
    /// so `u^-1 = u^6`.
    pub fn inv(self) -> Result<Self, AlgebraError> {
        if self == Self::ZERO {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(self.pow(6))
    }

    pub fn pow(self, k: i64) -> Self {
        if self == Self::ZERO {
            assert!(k > 0, "zero to a non-positive power");
            return Self::ZERO;
        }
        let k = k.rem_euclid(7);
        let mut acc = Self::ONE;
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl std::ops::Add for F8Element {
    type Output = F8Element;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl std::ops::Sub for F8Element {
    type Output = F8Element;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl std::ops::Mul for F8Element {
    type Output = F8Element;
    fn mul(self, rhs: Self) -> Self {
        F8Element::mul(self, rhs)
    }
}

impl Ring for F8Element {
    fn zero_like(&self) -> Self {
        Self::ZERO
    }
    fn one_like(&self) -> Self {
        Self::ONE
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
}

impl fmt::Display for F8Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "0");
        }
        let mut first = true;
        for (bit, name) in [(0b001, "1"), (0b010, "t"), (0b100, "t^2")] {
            if self.0 & bit != 0 {
                if !first {
                    write!(f, "+")?;
                }
                write!(f, "{name}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for F8Element {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::ZERO);
        }
        let mut bits = 0u8;
        for part in s.split('+') {
            let bit = match part {
                "1" => 0b001,
                "t" | "1*t" => 0b010,
                "t^2" | "1*t^2" => 0b100,
                "0" | "0*t" | "0*t^2" => 0,
                other => return Err(AlgebraError::Parse(format!("bad F8 term `{other}`"))),
            };
            if bits & bit != 0 {
                return Err(AlgebraError::Parse(format!("repeated F8 term in `{s}`")));
            }
            bits |= bit;
        }
        Ok(Self(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_t_cubed() {
        // t * t^2 = t^3 = 1 + t
        assert_eq!(F8Element::T * F8Element::T2, F8Element::new(true, true, false));
    }

    #[test]
    fn inverse_of_one_plus_t_squared() {
        // (1 + t^2) * t = t + t^3 = 1
        let u = F8Element::new(true, false, true);
        assert_eq!(u.inv().unwrap(), F8Element::T);
        assert_eq!(F8Element::ZERO.inv(), Err(AlgebraError::ZeroInverse));
    }

    #[test]
    fn loop_value_from_unit_ratio() {
        // With a = 1, b = t in characteristic 2: -a/b - b/a = t^-1 + t.
        // t^-1 = 1 + t^2, so the sum is 1 + t + t^2.
        let a = F8Element::ONE;
        let b = F8Element::T;
        let d = a * b.inv().unwrap() + b * a.inv().unwrap();
        assert_eq!(d, F8Element::new(true, true, true));
    }

    #[test]
    fn multiplicative_group_order_seven() {
        for bits in 1..8u8 {
            let u = F8Element::from_bits(bits);
            assert_eq!(u.pow(7), F8Element::ONE);
            assert_eq!(u.inv().unwrap() * u, F8Element::ONE);
        }
    }

    #[test]
    fn display_roundtrip() {
        for bits in 0..8u8 {
            let u = F8Element::from_bits(bits);
            let s = u.to_string();
            assert_eq!(s.parse::<F8Element>().unwrap(), u);
        }
    }
}
