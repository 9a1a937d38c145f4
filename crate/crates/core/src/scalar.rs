//! Exact rational scalars.
//!
//! Values that fit in a pair of `i64` are kept inline and combined with `i128`
//! intermediates; anything larger is promoted to a `BigRational`. The
//! representation is canonical (a value that fits is always stored inline), so
//! structural equality is numeric equality.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `den > 0`, `gcd(num, den) = 1`.
    Small { num: i64, den: i64 },
    Big(BigRational),
}

/// An element of the rational field, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    pub const fn zero() -> Self {
        Scalar(Repr::Small { num: 0, den: 1 })
    }

    pub const fn one() -> Self {
        Scalar(Repr::Small { num: 1, den: 1 })
    }

    pub const fn from_int(n: i64) -> Self {
        Scalar(Repr::Small { num: n, den: 1 })
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Scalar(Repr::Small { num, den }),
            _ => Scalar(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    /// Builds a scalar from arbitrary-precision parts. Panics if `den` is zero.
    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        Self::from_ratio(BigRational::new(num, den))
    }

    fn from_ratio(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Scalar(Repr::Small { num, den }),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_ratio(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.0 {
            Repr::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Repr::Big(r) => Self::from_ratio(r.recip()),
        }
    }

    pub fn factorial(n: u32) -> Scalar {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= k;
        }
        Self::from_ratio(BigRational::from_integer(acc))
    }

    fn add_ref(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    // |a*d + c*b| < 2^127 since every factor is below 2^63.
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_ratio(self.to_ratio() + other.to_ratio()),
        }
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if *a == 0 || *c == 0 {
                    return Self::zero();
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * c, b * d)
            }
            _ => Self::from_ratio(self.to_ratio() * other.to_ratio()),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Small { num, den } => Self::from_i128(-(*num as i128), *den as i128),
            Repr::Big(r) => Self::from_ratio(-r.clone()),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_ratio(BigRational::from_integer(n))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_ratio().cmp(&other.to_ratio()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_ref(b));
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_ref(b));
binop!(Div, div, |a: &Scalar, b: &Scalar| a.mul_ref(&b.recip()));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl core::str::FromStr for Scalar {
    type Err = ();

    /// Accepts `n` or `n/d` with an optional leading sign.
    fn from_str(s: &str) -> Result<Self, ()> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let n: BigInt = n.parse().map_err(|_| ())?;
        let d: BigInt = match d {
            Some(d) => d.parse().map_err(|_| ())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(());
        }
        Ok(Scalar::from_big(n, d))
    }
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Scalar::new(2, 4), Scalar::new(-1, -2));
        assert_eq!(Scalar::new(0, -5), Scalar::zero());
        assert_eq!(std::format!("{}", Scalar::new(3, -6)), "-1/2");
        assert_eq!(std::format!("{}", Scalar::from_int(7)), "7");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Scalar::from_int(i64::MAX);
        let sq = &m * &m;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &m;
        assert_eq!(back, m);
        assert!(matches!(back.0, Repr::Small { .. }));
        let min = Scalar::from_int(i64::MIN);
        assert_eq!(-(-&min), min);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(Scalar::factorial(0), Scalar::one());
        assert_eq!(Scalar::factorial(6), Scalar::from_int(720));
    }

    #[test]
    fn parse() {
        assert_eq!("3/6".parse::<Scalar>(), Ok(Scalar::new(1, 2)));
        assert_eq!("-4".parse::<Scalar>(), Ok(Scalar::from_int(-4)));
        assert!("1/0".parse::<Scalar>().is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in -1_000_000i64..1_000_000, b in 1i64..10_000,
                                   c in i64::MIN/2..i64::MAX/2, d in 1i64..i64::MAX) {
            let (x, y) = (Scalar::new(a, b), Scalar::new(c, d));
            let (bx, by) = (big(a, b), big(c, d));
            prop_assert_eq!((&x + &y).to_ratio(), &bx + &by);
            prop_assert_eq!((&x - &y).to_ratio(), &bx - &by);
            prop_assert_eq!((&x * &y).to_ratio(), &bx * &by);
            prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
            if !y.is_zero() {
                prop_assert_eq!((&x / &y).to_ratio(), &bx / &by);
            }
        }
    }
}
