//! Exact integer algebra of primitive vectors, the intersection pairing,
//! Farey adjacency, and unimodular group actions.
//!
//! A primitive vector `(a, b)` is a vertex of the extended Farey graph; its
//! sign class is a [`Slope`], a vertex of the ordinary Farey graph, written
//! in fraction form `b/a`.  Two slopes are joined by an edge exactly when
//! their pairing is `+-1`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A primitive integer pair: gcd(|a|, |b|) = 1 and (a, b) != (0, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVector {
    a: i64,
    b: i64,
}

impl PrimitiveVector {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::ZeroVector);
        }
        if num_integer::gcd(a, b) != 1 {
            return Err(Error::NonPrimitive(a, b));
        }
        Ok(Self { a, b })
    }

    /// Internal constructor for values already known to be primitive.
    pub(crate) fn new_unchecked(a: i64, b: i64) -> Self {
        debug_assert!(num_integer::gcd(a, b) == 1 && (a, b) != (0, 0));
        Self { a, b }
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    pub fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }

    /// Componentwise sum.  Primitive whenever the summands pair to `+-1`,
    /// which is the only way it is used (blow-up insertions).
    pub fn sum(self, other: Self) -> Result<Self> {
        Self::new(self.a + other.a, self.b + other.b)
    }

    pub fn as_pair(self) -> (i64, i64) {
        (self.a, self.b)
    }
}

/// Algebraic intersection number of two curves on the torus:
/// `<x, y> = x.a * y.b - x.b * y.a`.
///
/// The sign convention is normative: together with the slope reading
/// `b/a -> (a, b)` it reproduces Euler number `+n` for the disk-bundle
/// diagram `(0/1, 1/0, n/1)` and signature `+1` for `(0/1, 1/0, 1/1)`.
pub fn pairing(x: PrimitiveVector, y: PrimitiveVector) -> i64 {
    x.a * y.b - x.b * y.a
}

/// A sign class `{v, -v}` of primitive vectors: an isotopy class of
/// essential simple closed curve on the torus, i.e. a Farey vertex.
///
/// The canonical representative has `b > 0`, or `b = 0` and `a > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    rep: PrimitiveVector,
}

impl Slope {
    pub fn from_vector(v: PrimitiveVector) -> Self {
        let canonical = if v.b > 0 || (v.b == 0 && v.a > 0) { v } else { v.neg() };
        Self { rep: canonical }
    }

    pub fn new(a: i64, b: i64) -> Result<Self> {
        Ok(Self::from_vector(PrimitiveVector::new(a, b)?))
    }

    /// The canonical sign representative.
    pub fn rep(self) -> PrimitiveVector {
        self.rep
    }
}

/// Farey adjacency: `|<x, y>| = 1` on any sign representatives.
pub fn is_adjacent(x: Slope, y: Slope) -> bool {
    pairing(x.rep, y.rep).abs() == 1
}

impl FromStr for Slope {
    type Err = Error;

    /// Parses the fraction form `b/a`, so `"0/1"` is the vector `(1, 0)`
    /// and `"1/0"` is `(0, 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::MalformedSlope(s.to_string()))?;
        let b: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::MalformedSlope(s.to_string()))?;
        let a: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::MalformedSlope(s.to_string()))?;
        Slope::new(a, b)
    }
}

impl fmt::Display for Slope {
    /// Fraction form `b/a` with the sign carried by the numerator: the
    /// displayed representative has `a > 0`, or `a = 0` and `b > 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.rep;
        let v = if v.a > 0 || (v.a == 0 && v.b > 0) { v } else { v.neg() };
        write!(f, "{}/{}", v.b, v.a)
    }
}

/// An element of GL(2, Z): integer matrix with determinant `+-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    m11: i64,
    m12: i64,
    m21: i64,
    m22: i64,
}

impl UnimodularMatrix {
    pub fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Result<Self> {
        let det = m11 * m22 - m12 * m21;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { m11, m12, m21, m22 })
    }

    pub fn identity() -> Self {
        Self { m11: 1, m12: 0, m21: 0, m22: 1 }
    }

    pub fn det(self) -> i64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn entries(self) -> (i64, i64, i64, i64) {
        (self.m11, self.m12, self.m21, self.m22)
    }

    /// Matrix-vector product; unimodularity preserves primitivity.
    pub fn apply(self, v: PrimitiveVector) -> PrimitiveVector {
        PrimitiveVector::new_unchecked(
            self.m11 * v.a + self.m12 * v.b,
            self.m21 * v.a + self.m22 * v.b,
        )
    }

    pub fn compose(self, other: Self) -> Self {
        Self {
            m11: self.m11 * other.m11 + self.m12 * other.m21,
            m12: self.m11 * other.m12 + self.m12 * other.m22,
            m21: self.m21 * other.m11 + self.m22 * other.m21,
            m22: self.m21 * other.m12 + self.m22 * other.m22,
        }
    }

    pub fn inverse(self) -> Self {
        let d = self.det();
        Self {
            m11: d * self.m22,
            m12: -d * self.m12,
            m21: -d * self.m21,
            m22: d * self.m11,
        }
    }

    /// The unique determinant-`+1` matrix sending `v1 -> (1, 0)` and
    /// `v2 -> (0, 1)`, defined when `<v1, v2> = 1`.
    pub(crate) fn normalizing(v1: PrimitiveVector, v2: PrimitiveVector) -> Self {
        debug_assert_eq!(pairing(v1, v2), 1);
        Self { m11: v2.b, m12: -v2.a, m21: -v1.b, m22: v1.a }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(a: i64, b: i64) -> PrimitiveVector {
        PrimitiveVector::new(a, b).unwrap()
    }

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(v(1, 0), v(0, 1)), 1);
        assert_eq!(pairing(v(2, 1), v(3, 2)), 1);
        assert_eq!(pairing(v(1, 0), v(1, 5)), 5);
    }

    #[test]
    fn adjacency_examples() {
        assert!(is_adjacent(s("0/1"), s("1/0")));
        assert!(!is_adjacent(s("0/1"), s("2/1")));
        assert!(!is_adjacent(s("1/1"), s("1/1")));
    }

    #[test]
    fn apply_examples() {
        let id = UnimodularMatrix::identity();
        assert_eq!(id.apply(v(3, 2)), v(3, 2));
        let rot = UnimodularMatrix::new(0, -1, 1, 0).unwrap();
        assert_eq!(rot.apply(v(1, 0)), v(0, 1));
        let shear = UnimodularMatrix::new(1, 1, 0, 1).unwrap();
        assert_eq!(shear.apply(v(0, 1)), v(1, 1));
    }

    #[test]
    fn slope_parsing() {
        assert_eq!(s("0/1").rep(), v(1, 0));
        assert_eq!(s("1/0").rep(), v(0, 1));
        assert_eq!(s("-1/1").rep(), v(-1, 1));
        assert!(matches!("2/4".parse::<Slope>(), Err(Error::NonPrimitive(4, 2))));
        assert!(matches!("0/0".parse::<Slope>(), Err(Error::ZeroVector)));
        assert!(matches!("x/1".parse::<Slope>(), Err(Error::MalformedSlope(_))));
        assert!(matches!("3".parse::<Slope>(), Err(Error::MalformedSlope(_))));
    }

    #[test]
    fn display_uses_positive_denominator() {
        assert_eq!(s("-1/1").to_string(), "-1/1");
        assert_eq!(s("1/0").to_string(), "1/0");
        assert_eq!(s("0/1").to_string(), "0/1");
        assert_eq!(Slope::from_vector(v(-2, -1)).to_string(), "1/2");
    }

    #[test]
    fn normalizing_matrix_sends_basis() {
        let v1 = v(2, 1);
        let v2 = v(3, 2);
        let m = UnimodularMatrix::normalizing(v1, v2);
        assert_eq!(m.apply(v1), v(1, 0));
        assert_eq!(m.apply(v2), v(0, 1));
        assert_eq!(m.det(), 1);
    }

    fn arb_vec() -> impl Strategy<Value = PrimitiveVector> {
        (-40i64..=40, -40i64..=40)
            .prop_filter_map("primitive", |(a, b)| PrimitiveVector::new(a, b).ok())
    }

    fn arb_mat() -> impl Strategy<Value = UnimodularMatrix> {
        // products of shears and the quarter turn stay small
        proptest::collection::vec((0u8..3, -3i64..=3), 0..5).prop_map(|ops| {
            let mut m = UnimodularMatrix::identity();
            for (kind, k) in ops {
                let f = match kind {
                    0 => UnimodularMatrix::new(1, k, 0, 1).unwrap(),
                    1 => UnimodularMatrix::new(1, 0, k, 1).unwrap(),
                    _ => UnimodularMatrix::new(0, -1, 1, 0).unwrap(),
                };
                m = m.compose(f);
            }
            m
        })
    }

    proptest! {
        #[test]
        fn pairing_antisymmetric(x in arb_vec(), y in arb_vec()) {
            prop_assert_eq!(pairing(x, y), -pairing(y, x));
        }

        #[test]
        fn pairing_equivariant(m in arb_mat(), x in arb_vec(), y in arb_vec()) {
            prop_assert_eq!(pairing(m.apply(x), m.apply(y)), m.det() * pairing(x, y));
        }

        #[test]
        fn adjacency_sign_invariant(x in arb_vec(), y in arb_vec()) {
            let base = is_adjacent(Slope::from_vector(x), Slope::from_vector(y));
            prop_assert_eq!(is_adjacent(Slope::from_vector(x.neg()), Slope::from_vector(y)), base);
            prop_assert_eq!(is_adjacent(Slope::from_vector(x), Slope::from_vector(y.neg())), base);
        }

        #[test]
        fn parse_format_round_trip(x in arb_vec()) {
            let slope = Slope::from_vector(x);
            let back: Slope = slope.to_string().parse().unwrap();
            prop_assert_eq!(back, slope);
        }
    }
}
