//! Toric multisections with boundary: the linear plumbing carried by a path
//! of slopes and the identification of its lens-space boundary.

use std::fmt;

use num_integer::Integer;

use crate::diagram::ToricPath;
use crate::lattice::{pairing, PrimitiveVector};

/// Euler numbers of the linear plumbing of 2-spheres described by a path;
/// one entry per interior slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plumbing {
    pub euler_numbers: Vec<i64>,
}

/// The (unoriented) boundary 3-manifold of a plumbed path: it always admits
/// a genus-one Heegaard splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary3Manifold {
    S3,
    S1xS2,
    /// `q` is normalized to the minimum of `{+-q^{+-1} mod p}` in
    /// `[1, p-1]`, the classical unoriented lens invariant.
    Lens { p: i64, q: i64 },
}

impl fmt::Display for Boundary3Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::S3 => write!(f, "S3"),
            Self::S1xS2 => write!(f, "S1xS2"),
            Self::Lens { p, q } => write!(f, "L({p},{q})"),
        }
    }
}

/// Euler numbers `e_i = <lift[i+2], lift[i]>` on the oriented lift;
/// well defined because the lift is unique up to global sign.
pub fn plumbing(path: &ToricPath) -> Plumbing {
    let lift = path.lift();
    let euler_numbers = (0..path.len().saturating_sub(2))
        .map(|i| pairing(lift.vectors[i + 2], lift.vectors[i]))
        .collect();
    Plumbing { euler_numbers }
}

fn mod_inverse(q: i64, p: i64) -> i64 {
    let e = q.extended_gcd(&p);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p)
}

fn normalized_lens(p: i64, q: i64) -> Boundary3Manifold {
    debug_assert!(p >= 2);
    let q = q.rem_euclid(p);
    let inv = mod_inverse(q, p);
    let qn = [q, p - q, inv, p - inv].into_iter().min().unwrap();
    Boundary3Manifold::Lens { p, q: qn }
}

fn classify_pq(p: i64, q: i64) -> Boundary3Manifold {
    match p {
        0 => Boundary3Manifold::S1xS2,
        1 => Boundary3Manifold::S3,
        _ => normalized_lens(p, q),
    }
}

/// Boundary identification together with the raw Heegaard parameters
/// `(p, q)` before lens normalization; the raw `q` is reduced mod `p` only.
pub fn boundary_with_raw(path: &ToricPath) -> (Boundary3Manifold, i64, i64) {
    let a1 = path.slopes()[0].rep();
    let an = path.slopes()[path.len() - 1].rep();
    let p = pairing(a1, an).abs();
    // delta completes a1 to a positively paired basis: <a1, delta> = 1.
    let e = a1.a().extended_gcd(&a1.b());
    debug_assert_eq!(e.gcd, 1);
    let delta = PrimitiveVector::new_unchecked(-e.y, e.x);
    debug_assert_eq!(pairing(a1, delta), 1);
    let q = if p == 0 { 0 } else { pairing(delta, an).rem_euclid(p) };
    (classify_pq(p, q), p, q)
}

pub fn boundary(path: &ToricPath) -> Boundary3Manifold {
    boundary_with_raw(path).0
}

/// Independent oracle: evaluates the continued fraction
/// `e_1 - 1/(e_2 - 1/(...))` projectively (empty fraction is `1/0`) and
/// classifies the resulting `p/q`.
pub fn cf_lens_oracle(euler_numbers: &[i64]) -> Boundary3Manifold {
    let mut p: i128 = 1;
    let mut q: i128 = 0;
    for &e in euler_numbers.iter().rev() {
        let next = i128::from(e) * p - q;
        q = p;
        p = next;
    }
    if p < 0 {
        p = -p;
        q = -q;
    }
    let p = i64::try_from(p).expect("plumbing continued fraction overflow");
    let q = if p == 0 {
        0
    } else {
        i64::try_from(q.rem_euclid(i128::from(p))).unwrap()
    };
    classify_pq(p, q)
}
