//! Numerical invariants of a toric multisection: Euler characteristic, Betti
//! numbers, signature (by three independent routes), intersection form, spin,
//! and almost-complex existence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::ToricLoop;
use crate::lattice::{pairing, PrimitiveVector, Slope, UnimodularMatrix};
use crate::{Error, Result};

/// A symmetric integer matrix; intersection forms produced here are
/// tridiagonal with all off-diagonal entries 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricIntegerMatrix {
    entries: Vec<Vec<i64>>,
}

impl SymmetricIntegerMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::NotSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Self { entries })
    }

    /// Tridiagonal matrix with the given diagonal and all off-diagonal
    /// entries 1.
    pub fn tridiagonal(diagonal: &[i64]) -> Self {
        let n = diagonal.len();
        let mut entries = vec![vec![0; n]; n];
        for (i, &e) in diagonal.iter().enumerate() {
            entries[i][i] = e;
            if i + 1 < n {
                entries[i][i + 1] = 1;
                entries[i + 1][i] = 1;
            }
        }
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.size()).map(|i| self.entries[i][i]).collect()
    }
}

/// Signature by exact symmetric congruence diagonalization over the
/// rationals.  A zero diagonal pivot with a nonzero off-diagonal entry in
/// its column is repaired by either swapping with a nonzero diagonal entry
/// or adding the partner row and column, which splits the hyperbolic block.
pub fn matrix_signature(q: &SymmetricIntegerMatrix) -> i64 {
    let n = q.size();
    let mut m: Vec<Vec<BigRational>> = q
        .entries
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from(BigInt::from(x))).collect())
        .collect();
    let mut sig = 0i64;
    for i in 0..n {
        if m[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !m[i][j].is_zero()) {
                if !m[j][j].is_zero() {
                    m.swap(i, j);
                    for row in m.iter_mut() {
                        row.swap(i, j);
                    }
                } else {
                    for k in 0..n {
                        let t = m[j][k].clone();
                        m[i][k] += t;
                    }
                    for row in m.iter_mut() {
                        let t = row[j].clone();
                        row[i] += t;
                    }
                }
            }
        }
        if m[i][i].is_zero() {
            continue;
        }
        for j in i + 1..n {
            let f = &m[j][i] / &m[i][i];
            if f.is_zero() {
                continue;
            }
            for k in 0..n {
                let t = &f * &m[i][k];
                m[j][k] -= t;
            }
            for row in m.iter_mut() {
                let t = &f * &row[i];
                row[j] -= t;
            }
        }
        sig += if m[i][i].is_positive() { 1 } else { -1 };
    }
    sig
}

fn sign(x: i64) -> i64 {
    x.signum()
}

/// The Maslov index of a slope triple: the sign of the cyclic pairing
/// product, well defined because any representative flip changes two
/// factors.
pub fn maslov_triple(l1: Slope, l2: Slope, l3: Slope) -> i64 {
    let (v1, v2, v3) = (l1.rep(), l2.rep(), l3.rep());
    sign(pairing(v1, v2)) * sign(pairing(v2, v3)) * sign(pairing(v3, v1))
}

/// Independent oracle for [`maslov_triple`]: signature of the symmetric
/// 3x3 theta form built from the pairwise pairings.
pub fn maslov_theta_signature(l1: Slope, l2: Slope, l3: Slope) -> i64 {
    let (v1, v2, v3) = (l1.rep(), l2.rep(), l3.rep());
    let w12 = pairing(v1, v2);
    let w13 = pairing(v1, v3);
    let w23 = pairing(v2, v3);
    let theta = SymmetricIntegerMatrix::new(vec![
        vec![0, -w12, w13],
        vec![-w12, 0, -w23],
        vec![w13, -w23, 0],
    ])
    .expect("theta form is symmetric by construction");
    matrix_signature(&theta)
}

/// Signature of the closed 4-manifold, as the Maslov sum over the fan of
/// triangles based at the first slope.
pub fn signature(d: &ToricLoop) -> i64 {
    if d.is_degenerate() || d.len() < 3 {
        return 0;
    }
    let s = d.slopes();
    (1..d.len() - 1)
        .map(|i| maslov_triple(s[0], s[i], s[i + 1]))
        .sum()
}

/// Signature by the slope-ratio rule: normalize the lift so it starts
/// `(1,0), (0,1)`, then each interior consecutive pair contributes the sign
/// of the exact slope comparison.  Cross-check route for [`signature`].
pub fn signature_by_slopes(d: &ToricLoop) -> Result<i64> {
    if d.is_degenerate() || d.len() < 3 {
        return Ok(0);
    }
    let lift = d.lift()?;
    let m = UnimodularMatrix::normalizing(lift.vectors[0], lift.vectors[1]);
    let up = |v: PrimitiveVector| {
        let w = m.apply(v);
        if w.b() >= 0 {
            w
        } else {
            w.neg()
        }
    };
    let n = d.len();
    let mut sig = 0i64;
    for i in 1..n - 1 {
        let w = up(lift.vectors[i]);
        let x = up(lift.vectors[i + 1]);
        if w.b() == 0 || x.b() == 0 {
            continue;
        }
        sig += sign(x.a() * w.b() - w.a() * x.b());
    }
    Ok(sig)
}

/// The intersection form: tridiagonal of size `n - 2` with off-diagonal 1
/// and diagonal `e_i = <lift[i+2], lift[i]>`.
pub fn intersection_form(d: &ToricLoop) -> Result<SymmetricIntegerMatrix> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDiagram);
    }
    if d.len() < 3 {
        return Err(Error::TooShort);
    }
    let lift = d.lift()?;
    let diagonal: Vec<i64> = (0..d.len() - 2)
        .map(|i| pairing(lift.vectors[i + 2], lift.vectors[i]))
        .collect();
    Ok(SymmetricIntegerMatrix::tridiagonal(&diagonal))
}

/// Spin condition: after normalizing the lift to start `(1,0), (0,1)`,
/// every vector has `a * b` even.  Degenerate loops are spin.
pub fn is_spin(d: &ToricLoop) -> Result<bool> {
    if d.is_degenerate() {
        return Ok(true);
    }
    if d.len() < 2 {
        return Err(Error::TooShort);
    }
    let lift = d.lift()?;
    let m = UnimodularMatrix::normalizing(lift.vectors[0], lift.vectors[1]);
    Ok(lift
        .vectors
        .iter()
        .all(|&v| (m.apply(v).a() * m.apply(v).b()) % 2 == 0))
}

/// Almost-complex existence: equivalent to the lift closing up, and to
/// `b2+` being odd.
pub fn admits_almost_complex(d: &ToricLoop) -> Result<bool> {
    Ok(d.lift()?.closed)
}

/// Aggregated invariants of the closed 4-manifold of a loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub euler: i64,
    pub b2: i64,
    pub sigma: i64,
    #[serde(rename = "b2_plus")]
    pub b2plus: i64,
    #[serde(rename = "b2_minus")]
    pub b2minus: i64,
    pub spin: bool,
    pub almost_complex: bool,
}

pub fn report(d: &ToricLoop) -> Result<InvariantReport> {
    let n = d.len();
    if d.is_degenerate() {
        // S1 x S3
        return Ok(InvariantReport {
            n,
            euler: 0,
            b2: 0,
            sigma: 0,
            b2plus: 0,
            b2minus: 0,
            spin: true,
            almost_complex: false,
        });
    }
    let sigma = signature(d);
    let b2 = (n as i64) - 2;
    Ok(InvariantReport {
        n,
        euler: n as i64,
        b2,
        sigma,
        b2plus: (b2 + sigma) / 2,
        b2minus: (b2 - sigma) / 2,
        spin: is_spin(d)?,
        almost_complex: admits_almost_complex(d)?,
    })
}
