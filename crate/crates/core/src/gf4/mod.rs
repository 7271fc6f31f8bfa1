//! Arithmetic in the four-element field `{0, 1, ω, ω²}`.
//!
//! Elements are stored as two bits: `0 = 0`, `1 = 1`, `2 = ω`, `3 = ω²`.
//! With this encoding addition is bitwise XOR (since `ω² = ω + 1`) and
//! multiplication is a 16-entry table.
//!
//! ```text
//! × | 0  1  ω  ω²
//! --+------------
//! 0 | 0  0  0  0
//! 1 | 0  1  ω  ω²
//! ω | 0  ω  ω² 1
//! ω²| 0  ω² 1  ω
//! ```

mod matrix;

pub use matrix::Gf4Matrix;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};

use crate::error::{Error, Result};

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

/// An element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    /// `ω² = ω + 1`.
    pub const OMEGA2: Gf4 = Gf4(3);

    /// All four elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];
    /// The multiplicative group, in encoding order.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Builds an element from its 2-bit code. Only the low two bits are used.
    #[inline]
    pub const fn from_code(code: u8) -> Gf4 {
        Gf4(code & 3)
    }

    #[inline]
    pub const fn code(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; zero has none.
    pub fn inverse(self) -> Result<Gf4> {
        if self.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(Gf4(INV[self.0 as usize]))
        }
    }

    /// Inverse without the zero check. Returns zero for zero.
    #[inline]
    pub(crate) const fn inv_or_zero(self) -> Gf4 {
        Gf4(INV[self.0 as usize])
    }

    /// The Frobenius automorphism `a ↦ a²`, which swaps ω and ω².
    #[inline]
    pub const fn frobenius(self) -> Gf4 {
        Gf4(MUL[self.0 as usize][self.0 as usize])
    }

    /// Single-character token used by the text formats: `0 1 w v`.
    pub const fn token(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'v',
        }
    }

    pub fn from_token(token: &str) -> Option<Gf4> {
        match token {
            "0" => Some(Gf4::ZERO),
            "1" => Some(Gf4::ONE),
            "w" => Some(Gf4::OMEGA),
            "v" => Some(Gf4::OMEGA2),
            _ => None,
        }
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("0"),
            1 => f.write_str("1"),
            2 => f.write_str("ω"),
            _ => f.write_str("ω²"),
        }
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

// addition in characteristic 2 is XOR of the coefficient bits
impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

// characteristic 2: subtraction is addition and negation is the identity
impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl Div for Gf4 {
    type Output = Gf4;
    /// Panics on division by zero; use [`Gf4::inverse`] for a fallible version.
    fn div(self, rhs: Gf4) -> Gf4 {
        assert!(!rhs.is_zero(), "division by zero in GF(4)");
        self * rhs.inv_or_zero()
    }
}

/// Determinant of the `n × n` row-major matrix in `buf`, destroying it.
///
/// Plain Gaussian elimination; row swaps do not change the sign in
/// characteristic 2.
pub(crate) fn det_in_place(buf: &mut [Gf4], n: usize) -> Gf4 {
    debug_assert!(buf.len() >= n * n);
    let mut det = Gf4::ONE;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !buf[r * n + col].is_zero()) else {
            return Gf4::ZERO;
        };
        if pivot != col {
            for k in col..n {
                buf.swap(pivot * n + k, col * n + k);
            }
        }
        let p = buf[col * n + col];
        det *= p;
        let pinv = p.inv_or_zero();
        for r in col + 1..n {
            let factor = buf[r * n + col];
            if factor.is_zero() {
                continue;
            }
            let factor = factor * pinv;
            for k in col..n {
                let v = buf[col * n + k];
                buf[r * n + k] += factor * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn any_gf4() -> impl Strategy<Value = Gf4> {
        (0u8..4).prop_map(Gf4::from_code)
    }

    #[test]
    fn named_products() {
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA, Gf4::OMEGA2);
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA2, Gf4::ONE);
        assert_eq!(Gf4::OMEGA + Gf4::OMEGA, Gf4::ZERO);
        assert_eq!(Gf4::OMEGA + Gf4::ONE, Gf4::OMEGA2);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert!(matches!(Gf4::ZERO.inverse(), Err(Error::ZeroInverse)));
        for a in Gf4::NONZERO {
            assert_eq!(a * a.inverse().unwrap(), Gf4::ONE);
        }
    }

    #[test]
    fn nonzero_elements_are_cyclic_of_order_three() {
        let w = Gf4::OMEGA;
        assert_ne!(w, Gf4::ONE);
        assert_ne!(w * w, Gf4::ONE);
        assert_eq!(w * w * w, Gf4::ONE);
    }

    #[test]
    fn tokens_round_trip() {
        for a in Gf4::ALL {
            assert_eq!(Gf4::from_token(&a.token().to_string()), Some(a));
        }
        assert_eq!(Gf4::from_token("x"), None);
    }

    proptest! {
        #[test]
        fn field_axioms(a in any_gf4(), b in any_gf4(), c in any_gf4()) {
            prop_assert_eq!(a + a, Gf4::ZERO);
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a * Gf4::ONE, a);
            prop_assert_eq!(a + Gf4::ZERO, a);
        }

        #[test]
        fn frobenius_is_a_field_automorphism(a in any_gf4(), b in any_gf4()) {
            prop_assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
            prop_assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
            prop_assert_eq!(a.frobenius().frobenius(), a);
        }
    }
}
