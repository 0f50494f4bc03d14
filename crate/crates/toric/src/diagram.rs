//! The multisection-diagram data model: loops and paths of slopes, validity,
//! orientation lifting to the extended Farey graph, conjugacy and canonical
//! forms.

use std::fmt;
use std::str::FromStr;

use crate::lattice::{is_adjacent, pairing, PrimitiveVector, Slope, UnimodularMatrix};
use crate::{Error, Result};

/// A cyclic sequence of slopes with unimodular consecutive pairings: the
/// multisection diagram of a closed 4-manifold.
///
/// The all-equal ("degenerate") loops form a separate flagged class; they
/// encode `S1 x S3` rather than a simply-connected manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricLoop {
    slopes: Vec<Slope>,
    degenerate: bool,
}

/// An open sequence of adjacent slopes: a multisection diagram of a compact
/// 4-manifold with boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricPath {
    slopes: Vec<Slope>,
}

/// A choice of signs on a slope sequence making each consecutive pairing
/// `+1`: a path in the extended Farey graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedLift {
    pub vectors: Vec<PrimitiveVector>,
    /// Whether the wraparound pairing `<v_n, v_1>` also equals `+1`.
    pub closed: bool,
}

fn check_adjacent_run(slopes: &[Slope], wrap: bool) -> Result<()> {
    let n = slopes.len();
    let pairs = if wrap { n } else { n - 1 };
    for i in 0..pairs {
        if !is_adjacent(slopes[i], slopes[(i + 1) % n]) {
            return Err(Error::AdjacencyViolation(i + 1));
        }
    }
    Ok(())
}

/// Core lift: unique up to global sign; the returned sign has
/// `vectors[0] = rep(slopes[0])`.
fn lift_slopes(slopes: &[Slope]) -> OrientedLift {
    let mut vectors = Vec::with_capacity(slopes.len());
    vectors.push(slopes[0].rep());
    for s in &slopes[1..] {
        let prev = *vectors.last().unwrap();
        let w = s.rep();
        let p = pairing(prev, w);
        debug_assert_eq!(p.abs(), 1);
        vectors.push(if p == 1 { w } else { w.neg() });
    }
    let closed = pairing(*vectors.last().unwrap(), vectors[0]) == 1;
    OrientedLift { vectors, closed }
}

impl ToricLoop {
    /// Validates a slope sequence as a loop.  All-equal sequences of length
    /// at least 1 are accepted as degenerate; otherwise length must be at
    /// least 2 and every consecutive pair, including the wraparound, must be
    /// Farey-adjacent.
    pub fn new(slopes: Vec<Slope>) -> Result<Self> {
        if slopes.is_empty() {
            return Err(Error::TooShort);
        }
        if slopes.iter().all(|s| *s == slopes[0]) {
            return Ok(Self { slopes, degenerate: true });
        }
        if slopes.len() < 2 {
            return Err(Error::TooShort);
        }
        check_adjacent_run(&slopes, true)?;
        Ok(Self { slopes, degenerate: false })
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let slopes = text
            .split_whitespace()
            .map(Slope::from_str)
            .collect::<Result<Vec<_>>>()?;
        Self::new(slopes)
    }

    pub fn from_vectors(vectors: &[PrimitiveVector]) -> Result<Self> {
        Self::new(vectors.iter().map(|&v| Slope::from_vector(v)).collect())
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// The unique oriented lift with `vectors[0] = rep(slopes[0])`.
    pub fn lift(&self) -> Result<OrientedLift> {
        if self.degenerate {
            return Err(Error::DegenerateDiagram);
        }
        Ok(lift_slopes(&self.slopes))
    }

    /// Cyclic left rotation by `r` positions.
    pub fn rotate(&self, r: i64) -> Self {
        let n = self.slopes.len() as i64;
        let shift = r.rem_euclid(n) as usize;
        let mut slopes = Vec::with_capacity(self.slopes.len());
        slopes.extend_from_slice(&self.slopes[shift..]);
        slopes.extend_from_slice(&self.slopes[..shift]);
        Self { slopes, degenerate: self.degenerate }
    }

    pub fn reverse(&self) -> Self {
        let mut slopes = self.slopes.clone();
        slopes.reverse();
        Self { slopes, degenerate: self.degenerate }
    }

    /// Simultaneous change of basis on every slope.
    pub fn conjugate(&self, m: UnimodularMatrix) -> Self {
        let slopes = self
            .slopes
            .iter()
            .map(|s| Slope::from_vector(m.apply(s.rep())))
            .collect();
        Self { slopes, degenerate: self.degenerate }
    }

    /// Orientation reversal: conjugation by `(a, b) -> (a, -b)`.
    pub fn mirror(&self) -> Self {
        let slopes = self
            .slopes
            .iter()
            .map(|s| {
                let v = s.rep();
                Slope::from_vector(PrimitiveVector::new_unchecked(v.a(), -v.b()))
            })
            .collect();
        Self { slopes, degenerate: self.degenerate }
    }

    /// Complete conjugacy invariant: over all cyclic rotations (and, with
    /// `dihedral`, both traversal directions), lift, conjugate the lift so
    /// it starts `(1,0), (0,1)`, flatten, and take the lexicographic
    /// minimum.
    pub fn canonical_form(&self, dihedral: bool) -> Result<Vec<(i64, i64)>> {
        if self.degenerate {
            return Err(Error::DegenerateDiagram);
        }
        let n = self.slopes.len();
        let mut best: Option<Vec<(i64, i64)>> = None;
        let mut variants = vec![self.clone()];
        if dihedral {
            // A reflection is reversal combined with an orientation-reversing
            // change of basis; reversal alone negates the Euler data.
            variants.push(self.reverse().mirror());
        }
        for variant in &variants {
            for r in 0..n {
                let rotated = variant.rotate(r as i64);
                let lift = lift_slopes(&rotated.slopes);
                let m = UnimodularMatrix::normalizing(lift.vectors[0], lift.vectors[1]);
                let flat: Vec<(i64, i64)> =
                    lift.vectors.iter().map(|&v| m.apply(v).as_pair()).collect();
                if best.as_ref().is_none_or(|b| flat < *b) {
                    best = Some(flat);
                }
            }
        }
        Ok(best.unwrap())
    }

    pub fn are_conjugate(&self, other: &Self, dihedral: bool) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        Ok(self.canonical_form(dihedral)? == other.canonical_form(dihedral)?)
    }

    /// A conjugate loop whose first three slopes are `(0/1, 1/0, 1/1)`,
    /// `(0/1, 1/0, -1/1)`, or `(0/1, 1/0, 0/1)`.
    pub fn normalize_start(&self) -> Result<Self> {
        if self.degenerate {
            return Err(Error::DegenerateDiagram);
        }
        let n = self.slopes.len();
        if n < 3 {
            return Err(Error::TooShort);
        }
        for i in 0..n {
            let a = self.slopes[i];
            let c = self.slopes[(i + 2) % n];
            if a == c || is_adjacent(a, c) {
                let rotated = self.rotate(i as i64);
                let lift = lift_slopes(&rotated.slopes);
                let m = UnimodularMatrix::normalizing(lift.vectors[0], lift.vectors[1]);
                return rotated.conjugate(m).validate_normal_start();
            }
        }
        Err(Error::NoReduction)
    }

    fn validate_normal_start(self) -> Result<Self> {
        let third = self.slopes[2].rep().as_pair();
        debug_assert!(
            matches!(third, (1, 1) | (-1, 1) | (1, 0)),
            "normalize_start produced unexpected third slope {third:?}"
        );
        Ok(self)
    }
}

impl fmt::Display for ToricLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.slopes {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

impl ToricPath {
    pub fn new(slopes: Vec<Slope>) -> Result<Self> {
        if slopes.len() < 2 {
            return Err(Error::TooShort);
        }
        check_adjacent_run(&slopes, false)?;
        Ok(Self { slopes })
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let slopes = text
            .split_whitespace()
            .map(Slope::from_str)
            .collect::<Result<Vec<_>>>()?;
        Self::new(slopes)
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub fn lift(&self) -> OrientedLift {
        lift_slopes(&self.slopes)
    }

    pub fn conjugate(&self, m: UnimodularMatrix) -> Self {
        let slopes = self
            .slopes
            .iter()
            .map(|s| Slope::from_vector(m.apply(s.rep())))
            .collect();
        Self { slopes }
    }
}
