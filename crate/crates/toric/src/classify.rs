//! Connected-sum classification of the 4-manifold of a toric loop, and the
//! surgeries that build loops: blow-ups, `S2 x S2` sums, and central-surface
//! covers.

use std::fmt;

use crate::diagram::ToricLoop;
use crate::lattice::{is_adjacent, pairing, PrimitiveVector, Slope};
use crate::{Error, Result};

/// The normalized diffeomorphism type of the closed 4-manifold of a loop.
///
/// `Sum` is in standard form: either `s2s2 = 0` (non-spin) or
/// `cp2 = cp2bar = 0` (spin), never both nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnSumType {
    S4,
    S1xS3,
    Sum { cp2: u32, cp2bar: u32, s2s2: u32 },
}

impl ConnSumType {
    /// Standard form from raw tallies, using
    /// `CP2 # S2xS2 = 2 CP2 # CP2bar`.
    pub fn from_tallies(a: u32, b: u32, c: u32) -> Self {
        if a == 0 && b == 0 && c == 0 {
            Self::S4
        } else if a == 0 && b == 0 {
            Self::Sum { cp2: 0, cp2bar: 0, s2s2: c }
        } else {
            Self::Sum { cp2: a + c, cp2bar: b + c, s2s2: 0 }
        }
    }

    pub fn b2(self) -> i64 {
        match self {
            Self::S4 | Self::S1xS3 => 0,
            Self::Sum { cp2, cp2bar, s2s2 } => {
                i64::from(cp2) + i64::from(cp2bar) + 2 * i64::from(s2s2)
            }
        }
    }

    pub fn sigma(self) -> i64 {
        match self {
            Self::S4 | Self::S1xS3 => 0,
            Self::Sum { cp2, cp2bar, .. } => i64::from(cp2) - i64::from(cp2bar),
        }
    }

    pub fn spin(self) -> bool {
        match self {
            Self::S4 | Self::S1xS3 => true,
            Self::Sum { cp2, cp2bar, .. } => cp2 == 0 && cp2bar == 0,
        }
    }
}

impl fmt::Display for ConnSumType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::S4 => write!(f, "S4"),
            Self::S1xS3 => write!(f, "S1xS3"),
            Self::Sum { cp2, cp2bar, s2s2 } => {
                let mut parts = Vec::new();
                if cp2 > 0 {
                    parts.push(format!("#{cp2} CP2"));
                }
                if cp2bar > 0 {
                    parts.push(format!("#{cp2bar} CP2bar"));
                }
                if s2s2 > 0 {
                    parts.push(format!("#{s2s2} (S2xS2)"));
                }
                write!(f, "{}", parts.join(" # "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Backtrack,
    Triangle,
}

/// One reduction step: the 1-based position in the loop as it stood when
/// the step was taken; triangles carry the sign of the removed sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub position: usize,
    pub sign: Option<i64>,
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            StepKind::Backtrack => write!(f, "Backtrack at {}", self.position),
            StepKind::Triangle => {
                let sign = self.sign.unwrap_or(0);
                let sign = if sign >= 0 { format!("+{sign}") } else { sign.to_string() };
                write!(f, "Triangle at {}, sign {sign}", self.position)
            }
        }
    }
}

/// Full record of a classification run.  Raw tallies `(a, b, c)` satisfy
/// `a + b + 2c = n - 2`; they are not themselves diffeomorphism invariants,
/// only the normalized [`ConnSumType`] is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub raw_tallies: (u32, u32, u32),
}

/// Direction in which removable positions are searched.  The classification
/// result is independent of the policy; only the trace depends on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanPolicy {
    LeftToRight,
    RightToLeft,
}

/// Local lift of a slope window: signs chosen so consecutive pairings are
/// `+1`, starting from the canonical representative.
fn local_lift(slopes: &[Slope]) -> Vec<PrimitiveVector> {
    let mut out = Vec::with_capacity(slopes.len());
    out.push(slopes[0].rep());
    for s in &slopes[1..] {
        let prev = *out.last().unwrap();
        let w = s.rep();
        out.push(if pairing(prev, w) == 1 { w } else { w.neg() });
    }
    out
}

pub fn classify_with_policy(
    d: &ToricLoop,
    policy: ScanPolicy,
) -> Result<(ConnSumType, ReductionTrace)> {
    let empty = ReductionTrace { steps: Vec::new(), raw_tallies: (0, 0, 0) };
    if d.is_degenerate() {
        return Ok((ConnSumType::S1xS3, empty));
    }
    let mut slopes: Vec<Slope> = d.slopes().to_vec();
    let (mut a, mut b, mut c) = (0u32, 0u32, 0u32);
    let mut steps = Vec::new();
    while slopes.len() > 2 {
        let n = slopes.len();
        let order: Vec<usize> = match policy {
            ScanPolicy::LeftToRight => (0..n).collect(),
            ScanPolicy::RightToLeft => (0..n).rev().collect(),
        };
        let backtrack = order
            .iter()
            .copied()
            .find(|&i| slopes[i] == slopes[(i + 2) % n]);
        if let Some(i) = backtrack {
            // Removed piece is a linear plumbing on Euler data [0, -m];
            // even m splits off S2 x S2, odd m splits off CP2 # CP2bar.
            let window = [
                slopes[i],
                slopes[(i + 1) % n],
                slopes[(i + 2) % n],
                slopes[(i + 3) % n],
            ];
            let w = local_lift(&window);
            let e2 = pairing(w[3], w[1]);
            if e2 % 2 == 0 {
                c += 1;
            } else {
                a += 1;
                b += 1;
            }
            steps.push(ReductionStep {
                kind: StepKind::Backtrack,
                position: i + 1,
                sign: None,
            });
            let removed = [(i + 1) % n, (i + 2) % n];
            slopes = drop_indices(&slopes, &removed);
            continue;
        }
        let triangle = order
            .iter()
            .copied()
            .find(|&i| is_adjacent(slopes[i], slopes[(i + 2) % n]));
        let Some(i) = triangle else {
            return Err(Error::NoReduction);
        };
        let window = [slopes[i], slopes[(i + 1) % n], slopes[(i + 2) % n]];
        let w = local_lift(&window);
        let e = pairing(w[2], w[0]);
        debug_assert_eq!(e.abs(), 1);
        if e == 1 {
            a += 1;
        } else {
            b += 1;
        }
        steps.push(ReductionStep {
            kind: StepKind::Triangle,
            position: i + 1,
            sign: Some(e),
        });
        slopes = drop_indices(&slopes, &[(i + 1) % n]);
    }
    Ok((
        ConnSumType::from_tallies(a, b, c),
        ReductionTrace { steps, raw_tallies: (a, b, c) },
    ))
}

pub fn classify(d: &ToricLoop) -> Result<(ConnSumType, ReductionTrace)> {
    classify_with_policy(d, ScanPolicy::LeftToRight)
}

/// Blows up between positions `i` and `i + 1` (1-based, cyclic: `i = n`
/// means the wraparound pair), adding a `CP2` summand for `sign = +1` or a
/// `CP2bar` summand for `sign = -1`.
pub fn blow_up(d: &ToricLoop, i: usize, sign: i64) -> Result<ToricLoop> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDiagram);
    }
    let n = d.len();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange(i));
    }
    let window = [d.slopes()[i - 1], d.slopes()[i % n]];
    let w = local_lift(&window);
    // On the +1-oriented local lift, inserting v1 + v2 gives CP2bar and
    // v1 - v2 gives CP2.
    let inserted = if sign >= 0 {
        PrimitiveVector::new_unchecked(w[0].a() - w[1].a(), w[0].b() - w[1].b())
    } else {
        w[0].sum(w[1])?
    };
    let mut slopes = d.slopes().to_vec();
    slopes.insert(i, Slope::from_vector(inserted));
    ToricLoop::new(slopes)
}

/// Replaces the cyclic pair at 1-based position `i` with
/// `(a_i, a_{i+1}, a_i, a_{i+1})`, summing with `S2 x S2`.
pub fn sum_s2s2(d: &ToricLoop, i: usize) -> Result<ToricLoop> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDiagram);
    }
    let n = d.len();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange(i));
    }
    let mut slopes = d.slopes().to_vec();
    if i < n {
        let pair = [slopes[i - 1], slopes[i]];
        slopes.splice(i + 1..i + 1, pair);
    } else {
        slopes.push(slopes[0]);
        slopes.push(slopes[n - 1]);
    }
    ToricLoop::new(slopes)
}

/// The degree-`r` cover branched over the central surface: `r` concatenated
/// copies of the slope sequence.
pub fn central_cover(d: &ToricLoop, r: u32) -> Result<ToricLoop> {
    if r < 1 {
        return Err(Error::NonPositiveCover);
    }
    let mut slopes = Vec::with_capacity(d.len() * r as usize);
    for _ in 0..r {
        slopes.extend_from_slice(d.slopes());
    }
    ToricLoop::new(slopes)
}

/// Standard form of a simply-connected sum with the given invariants.
pub fn conn_sum_from_invariants(b2: i64, sigma: i64, spin: bool) -> ConnSumType {
    if b2 == 0 {
        ConnSumType::S4
    } else if spin {
        ConnSumType::Sum { cp2: 0, cp2bar: 0, s2s2: (b2 / 2) as u32 }
    } else {
        ConnSumType::Sum {
            cp2: ((b2 + sigma) / 2) as u32,
            cp2bar: ((b2 - sigma) / 2) as u32,
            s2s2: 0,
        }
    }
}

/// Expected type of the degree-`r` central-surface cover of a genus-`g`
/// trisected `X`: `#^r X # #^{g(r-1)} (S2 x S2)`, in standard form.
pub fn xtn_expected(b2_x: i64, sigma_x: i64, spin_x: bool, g: i64, r: i64) -> ConnSumType {
    let b2 = r * b2_x + 2 * g * (r - 1);
    conn_sum_from_invariants(b2, r * sigma_x, spin_x)
}

fn drop_indices(slopes: &[Slope], removed: &[usize]) -> Vec<Slope> {
    slopes
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, &s)| s)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{is_spin, report, signature};

    fn lp(text: &str) -> ToricLoop {
        ToricLoop::parse_text(text).unwrap()
    }

    fn sum(cp2: u32, cp2bar: u32, s2s2: u32) -> ConnSumType {
        ConnSumType::Sum { cp2, cp2bar, s2s2 }
    }

    fn cls(text: &str) -> ConnSumType {
        classify(&lp(text)).unwrap().0
    }

    #[test]
    fn classify_examples() {
        assert_eq!(cls("0/1 1/0 1/1"), sum(1, 0, 0));
        assert_eq!(cls("0/1 1/0 0/1 1/2"), sum(0, 0, 1));
        assert_eq!(cls("0/1 1/0 1/1 1/2 1/3 1/4"), sum(4, 0, 0));
        assert_eq!(cls("0/1 1/0 0/1 1/1"), sum(1, 1, 0));
        assert_eq!(cls("0/1 1/0"), ConnSumType::S4);
        assert_eq!(cls("1/0 1/0 1/0"), ConnSumType::S1xS3);
    }

    #[test]
    fn other_paper_6_sections_are_4cp2() {
        assert_eq!(cls("0/1 1/0 1/1 2/3 1/2 1/3"), sum(4, 0, 0));
        assert_eq!(cls("0/1 1/0 1/1 2/3 3/5 1/2"), sum(4, 0, 0));
    }

    #[test]
    fn backtrack_parity_family() {
        for m in 1..8i64 {
            let d = ToricLoop::parse_text(&format!("0/1 1/0 0/1 1/{m}")).unwrap();
            let expected = if m % 2 == 0 { sum(0, 0, 1) } else { sum(1, 1, 0) };
            assert_eq!(classify(&d).unwrap().0, expected, "m = {m}");
        }
    }

    #[test]
    fn trace_accounting() {
        let d = lp("0/1 1/0 1/1 1/2 1/3 1/4");
        let (_, trace) = classify(&d).unwrap();
        let (a, b, c) = trace.raw_tallies;
        assert_eq!(a + b + 2 * c, d.len() as u32 - 2);
        assert_eq!(trace.steps.len(), 4);
    }

    #[test]
    fn classify_matches_invariants() {
        for text in [
            "0/1 1/0 1/1",
            "0/1 1/0 0/1 1/2",
            "0/1 1/0 0/1 1/1",
            "0/1 1/0 1/1 1/2 1/3 1/4",
            "0/1 1/0 1/1 2/3 3/5 1/2",
        ] {
            let d = lp(text);
            let (t, _) = classify(&d).unwrap();
            let r = report(&d).unwrap();
            assert_eq!(t.b2(), r.b2, "{text}");
            assert_eq!(t.sigma(), r.sigma, "{text}");
            assert_eq!(t.spin(), r.spin, "{text}");
        }
    }

    #[test]
    fn policy_independence_on_goldens() {
        for text in [
            "0/1 1/0 0/1 1/1",
            "0/1 1/0 1/1 1/2 1/3 1/4",
            "0/1 1/0 1/1 2/3 1/2 1/3",
        ] {
            let d = lp(text);
            assert_eq!(
                classify_with_policy(&d, ScanPolicy::LeftToRight).unwrap().0,
                classify_with_policy(&d, ScanPolicy::RightToLeft).unwrap().0,
                "{text}"
            );
        }
    }

    #[test]
    fn mirror_swaps_summands() {
        let d = lp("0/1 1/0 1/1 1/2 1/3 1/4");
        assert_eq!(classify(&d.mirror()).unwrap().0, sum(0, 4, 0));
    }

    #[test]
    fn blow_up_examples() {
        let d = lp("0/1 1/0");
        assert_eq!(classify(&blow_up(&d, 1, 1).unwrap()).unwrap().0, sum(1, 0, 0));
        assert_eq!(classify(&blow_up(&d, 1, -1).unwrap()).unwrap().0, sum(0, 1, 0));
        assert_eq!(blow_up(&d, 3, 1).unwrap_err(), Error::IndexOutOfRange(3));
        assert_eq!(blow_up(&d, 0, 1).unwrap_err(), Error::IndexOutOfRange(0));
        // wraparound insertion
        let d = lp("0/1 1/0 1/1");
        let e = blow_up(&d, 3, 1).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(signature(&e), signature(&d) + 1);
    }

    #[test]
    fn blow_up_shifts_signature() {
        let d = lp("0/1 1/0 1/1 1/2 1/3 1/4");
        for i in 1..=d.len() {
            for sign in [1, -1] {
                let e = blow_up(&d, i, sign).unwrap();
                assert_eq!(e.len(), d.len() + 1);
                assert_eq!(signature(&e), signature(&d) + sign, "i = {i}, sign = {sign}");
            }
        }
    }

    #[test]
    fn sum_s2s2_examples() {
        let d = lp("0/1 1/0");
        let e = sum_s2s2(&d, 1).unwrap();
        assert_eq!(e, lp("0/1 1/0 0/1 1/0"));
        assert_eq!(classify(&e).unwrap().0, sum(0, 0, 1));
        // wraparound duplication stays valid and spin-preserving
        let d = lp("0/1 1/0 1/1");
        let e = sum_s2s2(&d, 3).unwrap();
        assert_eq!(e.len(), 5);
        assert_eq!(signature(&e), signature(&d));
        assert_eq!(is_spin(&e).unwrap(), is_spin(&d).unwrap());
        assert_eq!(sum_s2s2(&d, 4).unwrap_err(), Error::IndexOutOfRange(4));
    }

    #[test]
    fn central_cover_examples() {
        let cp2 = lp("0/1 1/0 1/1");
        assert_eq!(central_cover(&cp2, 2).unwrap().len(), 6);
        assert_eq!(central_cover(&cp2, 1).unwrap(), cp2);
        for r in 2..=4u32 {
            let cover = central_cover(&cp2, r).unwrap();
            assert_eq!(
                classify(&cover).unwrap().0,
                sum(2 * r - 1, r - 1, 0),
                "r = {r}"
            );
            assert_eq!(
                classify(&cover).unwrap().0,
                xtn_expected(1, 1, false, 1, i64::from(r)),
                "r = {r}"
            );
        }
        assert_eq!(central_cover(&cp2, 0).unwrap_err(), Error::NonPositiveCover);
    }

    #[test]
    fn xtn_expected_examples() {
        assert_eq!(xtn_expected(1, 1, false, 1, 2), sum(3, 1, 0));
        assert_eq!(xtn_expected(1, 1, false, 1, 1), sum(1, 0, 0));
        assert_eq!(xtn_expected(2, 0, true, 1, 3), sum(0, 0, 5));
    }

    #[test]
    fn display_formats() {
        assert_eq!(sum(3, 1, 0).to_string(), "#3 CP2 # #1 CP2bar");
        assert_eq!(sum(0, 0, 2).to_string(), "#2 (S2xS2)");
        assert_eq!(ConnSumType::S4.to_string(), "S4");
        assert_eq!(ConnSumType::S1xS3.to_string(), "S1xS3");
        assert_eq!(
            ReductionStep {
                kind: StepKind::Triangle,
                position: 2,
                sign: Some(1)
            }
            .to_string(),
            "Triangle at 2, sign +1"
        );
    }

    #[test]
    fn classify_is_conjugacy_invariant_samples() {
        let d = lp("0/1 1/0 1/1 2/3 1/2 1/3");
        let base = classify(&d).unwrap().0;
        for r in 0..d.len() as i64 {
            assert_eq!(classify(&d.rotate(r)).unwrap().0, base);
        }
    }
}
