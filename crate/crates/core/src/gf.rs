//! The three small fields the workbench needs: GF(2), GF(3) and GF(4).
//!
//! Elements are encoded as integers `0..q`. For GF(4) the encoding is
//! `b0 + 2*b1` for `b0 + b1*w`, where `w^2 = w + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Gf2,
    Gf3,
    Gf4,
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const GF4_INV: [u8; 4] = [0, 1, 3, 2];
const GF4_FROB: [u8; 4] = [0, 1, 3, 2];

impl Field {
    pub const ALL: [Field; 3] = [Field::Gf2, Field::Gf3, Field::Gf4];

    pub const fn order(self) -> usize {
        match self {
            Field::Gf2 => 2,
            Field::Gf3 => 3,
            Field::Gf4 => 4,
        }
    }

    pub const fn characteristic(self) -> u8 {
        match self {
            Field::Gf2 | Field::Gf4 => 2,
            Field::Gf3 => 3,
        }
    }

    pub const fn degree(self) -> u32 {
        match self {
            Field::Gf4 => 2,
            _ => 1,
        }
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Field::Gf2 | Field::Gf4 => a ^ b,
            Field::Gf3 => (a + b) % 3,
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        match self {
            Field::Gf2 | Field::Gf4 => a,
            Field::Gf3 => (3 - a) % 3,
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Field::Gf2 => a & b,
            Field::Gf3 => (a * b) % 3,
            Field::Gf4 => GF4_MUL[a as usize][b as usize],
        }
    }

    #[inline]
    pub fn inv(self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Field::Gf2 => 1,
            Field::Gf3 => a, // 1*1 = 1, 2*2 = 4 = 1
            Field::Gf4 => GF4_INV[a as usize],
        })
    }

    /// `x -> x^p`.
    #[inline]
    pub fn frobenius(self, a: u8) -> u8 {
        match self {
            Field::Gf4 => GF4_FROB[a as usize],
            _ => a,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = Fe> {
        (0..self.order() as u8).map(move |v| Fe { field: self, value: v })
    }

    pub fn zero(self) -> Fe {
        Fe { field: self, value: 0 }
    }

    pub fn one(self) -> Fe {
        Fe { field: self, value: 1 }
    }

    /// Primitive element `w` of GF(4).
    pub fn omega() -> Fe {
        Fe { field: Field::Gf4, value: 2 }
    }

    pub fn elem(self, value: u8) -> Fe {
        assert!((value as usize) < self.order(), "{value} is not an element of {self}");
        Fe { field: self, value }
    }

    /// Encodes a coordinate vector as a base-q integer, coordinate 0 least significant.
    pub fn encode(self, v: &[u8]) -> u64 {
        let q = self.order() as u64;
        v.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64)
    }

    pub fn decode(self, mut code: u64, dim: usize) -> Vec<u8> {
        let q = self.order() as u64;
        (0..dim)
            .map(|_| {
                let x = (code % q) as u8;
                code /= q;
                x
            })
            .collect()
    }

    /// Number of vectors in `F^dim`.
    pub fn space_size(self, dim: usize) -> u64 {
        (self.order() as u64).pow(dim as u32)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

/// A field element; ordered by its integer encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    field: Field,
    value: u8,
}

impl Fe {
    pub fn field(self) -> Field {
        self.field
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Fe> {
        Ok(Fe { field: self.field, value: self.field.inv(self.value)? })
    }

    pub fn frobenius(self) -> Fe {
        Fe { field: self.field, value: self.field.frobenius(self.value) }
    }

    fn check(self, other: Fe) {
        assert_eq!(self.field, other.field, "mixed-field arithmetic");
    }
}

impl Add for Fe {
    type Output = Fe;
    fn add(self, rhs: Fe) -> Fe {
        self.check(rhs);
        Fe { field: self.field, value: self.field.add(self.value, rhs.value) }
    }
}

impl Sub for Fe {
    type Output = Fe;
    fn sub(self, rhs: Fe) -> Fe {
        self.check(rhs);
        Fe { field: self.field, value: self.field.sub(self.value, rhs.value) }
    }
}

impl Mul for Fe {
    type Output = Fe;
    fn mul(self, rhs: Fe) -> Fe {
        self.check(rhs);
        Fe { field: self.field, value: self.field.mul(self.value, rhs.value) }
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe { field: self.field, value: self.field.neg(self.value) }
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.field, self.value) {
            (Field::Gf4, 2) => write!(f, "w"),
            (Field::Gf4, 3) => write!(f, "w+1"),
            (_, v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_exhaustive() {
        for f in Field::ALL {
            let els: Vec<Fe> = f.elements().collect();
            assert_eq!(els.len(), f.order());
            for &a in &els {
                assert_eq!(a + f.zero(), a);
                assert_eq!(a * f.one(), a);
                assert_eq!(a + (-a), f.zero());
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), f.one());
                }
                for &b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!(a - b, a + (-b));
                    for &c in &els {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(Field::Gf3.elem(2).inv().unwrap(), Field::Gf3.elem(2));
        assert_eq!(Field::Gf2.one().inv().unwrap(), Field::Gf2.one());
        let w = Field::omega();
        // w^2 = w + 1
        assert_eq!(w * w, w + Field::Gf4.one());
        assert_eq!(w.inv().unwrap(), w * w);
        assert_eq!(w.inv().unwrap().value(), 3);
        for f in Field::ALL {
            assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        }
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero in field");
    }

    #[test]
    fn frobenius_behaviour() {
        for x in Field::Gf2.elements().chain(Field::Gf3.elements()) {
            assert_eq!(x.frobenius(), x);
        }
        let w = Field::omega();
        assert_eq!(w.frobenius(), w * w);
        for f in Field::ALL {
            assert_eq!(f.zero().frobenius(), f.zero());
            for a in f.elements() {
                let p = f.characteristic();
                let mut pow = f.one();
                for _ in 0..p {
                    pow = pow * a;
                }
                assert_eq!(a.frobenius(), pow);
                for b in f.elements() {
                    assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
                    assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
                }
            }
        }
        for a in Field::Gf4.elements() {
            assert_eq!(a.frobenius().frobenius(), a);
        }
    }

    #[test]
    fn encode_roundtrip() {
        for f in Field::ALL {
            for code in 0..f.space_size(3) {
                assert_eq!(f.encode(&f.decode(code, 3)), code);
            }
        }
    }
}
