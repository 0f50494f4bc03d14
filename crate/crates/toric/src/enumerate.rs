//! Enumeration of the finitely many positive-definite toric multisections of
//! each length, up to conjugacy.

use std::collections::BTreeMap;

use crate::classify::blow_up;
use crate::diagram::ToricLoop;
use crate::{Error, Result};

/// Hard default cap on the loop length; the number of loops grows like the
/// Catalan numbers.
pub const DEFAULT_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub n: usize,
    /// Pairwise non-conjugate representatives, sorted by canonical form.
    pub loops: Vec<ToricLoop>,
    pub count: usize,
}

pub fn enumerate_definite_with_limit(
    n: usize,
    dihedral: bool,
    limit: usize,
) -> Result<EnumerationResult> {
    if n < 3 {
        return Err(Error::TooShort);
    }
    if n > limit {
        return Err(Error::EnumerationLimit(n, limit));
    }
    let base = ToricLoop::parse_text("0/1 1/0 1/1").expect("base triple is valid");
    // BFS layers keyed by the cyclic canonical form; positive blow-ups at
    // every position reach every definite loop (ear-removal induction).
    let mut layer: BTreeMap<Vec<(i64, i64)>, ToricLoop> = BTreeMap::new();
    layer.insert(base.canonical_form(false)?, base);
    for _ in 3..n {
        let mut next = BTreeMap::new();
        for d in layer.values() {
            for i in 1..=d.len() {
                let e = blow_up(d, i, 1)?;
                next.entry(e.canonical_form(false)?).or_insert(e);
            }
        }
        layer = next;
    }
    let mut dedup: BTreeMap<Vec<(i64, i64)>, ()> = BTreeMap::new();
    for d in layer.values() {
        dedup.entry(d.canonical_form(dihedral)?).or_insert(());
    }
    let loops: Vec<ToricLoop> = dedup
        .keys()
        .map(|form| {
            let vectors: Vec<_> = form
                .iter()
                .map(|&(a, b)| crate::lattice::PrimitiveVector::new(a, b))
                .collect::<Result<_>>()?;
            ToricLoop::from_vectors(&vectors)
        })
        .collect::<Result<_>>()?;
    let count = loops.len();
    Ok(EnumerationResult { n, loops, count })
}

pub fn enumerate_definite(n: usize, dihedral: bool) -> Result<EnumerationResult> {
    enumerate_definite_with_limit(n, dihedral, DEFAULT_LIMIT)
}

pub fn count_definite(n: usize, dihedral: bool) -> Result<usize> {
    Ok(enumerate_definite(n, dihedral)?.count)
}
