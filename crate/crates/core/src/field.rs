//! Scalar traits and the prime fields used by every construction.
//!
//! Linear algebra is written against [`Field`]; anything that enumerates
//! vectors or subspaces additionally needs [`FiniteField`]. Prime fields are
//! the const-generic [`Fp`], so the characteristic lives in the type.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Commutative ring operations needed by [`crate::Matrix`] arithmetic.
///
/// Blanket-implemented, so integer types (`i64`, `BigInt`) and fields alike
/// can be stored in matrices.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// A field with cheap copyable elements.
pub trait Field: Ring + Copy + Eq {
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(self) -> Option<Self>;
}

/// A finite field whose elements can be enumerated.
pub trait FiniteField: Field + Hash + Ord + Display + Send + Sync + 'static {
    fn characteristic() -> u64;

    fn order() -> u64;

    /// The element with canonical representative `n mod order`.
    fn from_u64(n: u64) -> Self;

    /// Canonical representative in `0..order`.
    fn to_u64(self) -> u64;

    fn elements() -> Box<dyn Iterator<Item = Self>> {
        Box::new((0..Self::order()).map(Self::from_u64))
    }

    /// Whether the characteristic is actually prime. `Fp<P>` accepts any
    /// modulus at the type level, so validation asks this at runtime.
    fn is_valid() -> bool;
}

/// Element of the prime field `Z/PZ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const fn new(n: u64) -> Self {
        Fp(n % P)
    }

    /// Reduce a signed integer.
    pub fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn try_inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat; only meaningful for prime P, which validation enforces.
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> FiniteField for Fp<P> {
    fn characteristic() -> u64 {
        P
    }
    fn order() -> u64 {
        P
    }
    fn from_u64(n: u64) -> Self {
        Fp::new(n)
    }
    fn to_u64(self) -> u64 {
        self.0
    }
    fn is_valid() -> bool {
        is_prime(P)
    }
}

impl Field for Rational64 {
    fn try_inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_in_f7() {
        for a in Fp::<7>::elements().skip(1) {
            assert_eq!(a * a.try_inv().unwrap(), Fp::one());
        }
        assert_eq!(Fp::<7>::zero().try_inv(), None);
    }

    #[test]
    fn negation_and_subtraction_agree() {
        for a in Fp::<5>::elements() {
            for b in Fp::<5>::elements() {
                assert_eq!(a - b, a + (-b));
            }
        }
    }

    #[test]
    fn primality() {
        assert!(Fp::<2>::is_valid());
        assert!(Fp::<3>::is_valid());
        assert!(!Fp::<4>::is_valid());
        assert!(!Fp::<1>::is_valid());
        assert_eq!(Fp::<3>::from_i64(-1), Fp::new(2));
    }
}
