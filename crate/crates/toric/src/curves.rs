//! The complex curves `C_{p,q}` in `CP1 x CP1`: bridge parameters,
//! fundamental-group data, exact shadow diagrams on the unit torus, and
//! branched-cover multisection parameters.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Rational64;

use crate::{Error, Result};

/// Numerical parameters of the bidegree-`(p, q)` curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveParams {
    pub p: i64,
    pub q: i64,
    /// Bridge number of the efficient 4-bridge position.
    pub bridge_b: i64,
    pub genus: i64,
    pub chi: i64,
    pub homology: (i64, i64),
    /// Order of the fundamental group of the complement (cyclic).
    pub pi1_order: i64,
}

pub fn curve_params(p: i64, q: i64) -> Result<CurveParams> {
    if p < 1 || q < 1 {
        return Err(Error::NonPositiveDegree);
    }
    let b = p * q - p - q + 2;
    Ok(CurveParams {
        p,
        q,
        bridge_b: b,
        genus: (p - 1) * (q - 1),
        chi: 4 - 2 * b,
        homology: (p, q),
        pi1_order: p.gcd(&q),
    })
}

/// An exact rational point in the unit torus `[0, 1)^2`.
pub type RationalPoint = (Rational64, Rational64);

/// One arc of the shadow diagram, running from bridge point `from` to
/// bridge point `to` along its multicurve; `segment` repeats the endpoint
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowArc {
    pub family: u8,
    pub from: usize,
    pub to: usize,
    pub segment: (RationalPoint, RationalPoint),
}

/// The shadow of the bridge position of `C_{p,q}` on the central torus: the
/// `(p-2, q)` multicurve carries the family-1/3 arcs, the `(-p, q-2)`
/// multicurve the family-2/4 arcs, and their `2b` intersections are the
/// bridge points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowDiagram {
    pub bridge_points: Vec<RationalPoint>,
    pub arcs: Vec<ShadowArc>,
    pub curve13_class: (i64, i64),
    pub curve24_class: (i64, i64),
    /// Set when `p < 2` or `q < 2`; a curve class then fails to be reduced
    /// in the sense of the ambient surface and the diagram is a degenerate
    /// limit with the same counting invariants.
    pub reduced: bool,
}

pub(crate) fn frac(r: Rational64) -> Rational64 {
    r - r.floor()
}

fn primitive_direction(class: (i64, i64)) -> (i64, (i64, i64)) {
    let d = class.0.gcd(&class.1);
    (d, (class.0 / d, class.1 / d))
}

/// Primitive directions of the two multicurves: the 1/3 direction points
/// toward increasing x (or increasing y when vertical), the 2/4 direction
/// is chosen so the pair is positively oriented.
pub(crate) fn oriented_directions(c13: (i64, i64), c24: (i64, i64)) -> ((i64, i64), (i64, i64)) {
    let (_, u13) = primitive_direction(c13);
    let u13 = if u13.0 > 0 || (u13.0 == 0 && u13.1 > 0) {
        u13
    } else {
        (-u13.0, -u13.1)
    };
    let (_, u24) = primitive_direction(c24);
    let u24 = if u13.0 * u24.1 - u13.1 * u24.0 > 0 {
        u24
    } else {
        (-u24.0, -u24.1)
    };
    (u13, u24)
}

/// Traversal parameter along direction `u`: advances by exactly 1 per full
/// loop of the primitive class, well defined mod 1.
pub(crate) fn traversal_param(point: RationalPoint, u: (i64, i64)) -> Rational64 {
    let e = u.0.extended_gcd(&u.1);
    debug_assert_eq!(e.gcd, 1);
    frac(point.0 * e.x + point.1 * e.y)
}

/// Pseudo-angle half-plane for counterclockwise sorting from the positive
/// x-axis.
fn half(v: (i64, i64)) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn ccw_less(a: (i64, i64), b: (i64, i64)) -> bool {
    if half(a) != half(b) {
        half(a) < half(b)
    } else {
        a.0 * b.1 - a.1 * b.0 > 0
    }
}

/// For each point, its cycle id and position along the multicurve of
/// primitive direction `u`, plus the cycles themselves (point indices in
/// traversal order).
struct SideDecomposition {
    cycles: Vec<Vec<usize>>,
    /// point index -> (cycle id, position in cycle)
    position: Vec<(usize, usize)>,
}

fn decompose_side(points: &[RationalPoint], u: (i64, i64)) -> SideDecomposition {
    // g is constant along u and separates parallel components
    let mut groups: BTreeMap<Rational64, Vec<(Rational64, usize)>> = BTreeMap::new();
    for (i, &(x, y)) in points.iter().enumerate() {
        let g = frac(x * u.1 - y * u.0);
        let t = traversal_param((x, y), u);
        groups.entry(g).or_default().push((t, i));
    }
    let mut cycles = Vec::new();
    let mut position = vec![(0usize, 0usize); points.len()];
    for (_, mut members) in groups {
        members.sort();
        let cycle_id = cycles.len();
        let cycle: Vec<usize> = members.iter().map(|&(_, i)| i).collect();
        for (k, &i) in cycle.iter().enumerate() {
            position[i] = (cycle_id, k);
        }
        cycles.push(cycle);
    }
    SideDecomposition { cycles, position }
}

/// Solves the alternation phases: one boolean per component, linked at
/// every bridge point by the counterclockwise condition `s24 = s13`.
fn solve_phases(
    n_points: usize,
    side13: &SideDecomposition,
    side24: &SideDecomposition,
) -> Result<(Vec<bool>, Vec<bool>)> {
    let mut phase13: Vec<Option<bool>> = vec![None; side13.cycles.len()];
    let mut phase24: Vec<Option<bool>> = vec![None; side24.cycles.len()];
    // anchor: the lexicographically smallest bridge point starts family 1
    let (c0, k0) = side13.position[0];
    phase13[c0] = Some(k0 % 2 == 0);
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n_points {
            let (c13, k13) = side13.position[i];
            let (c24, k24) = side24.position[i];
            let odd = (k13 % 2 == 1) != (k24 % 2 == 1);
            match (phase13[c13], phase24[c24]) {
                (Some(a), None) => {
                    phase24[c24] = Some(a != odd);
                    changed = true;
                }
                (None, Some(b)) => {
                    phase13[c13] = Some(b != odd);
                    changed = true;
                }
                (Some(a), Some(b)) => {
                    if (a != b) != odd {
                        return Err(Error::NonGenericPlacement);
                    }
                }
                (None, None) => {}
            }
        }
    }
    if phase13.iter().chain(&phase24).any(Option::is_none) {
        return Err(Error::NonGenericPlacement);
    }
    Ok((
        phase13.into_iter().map(Option::unwrap).collect(),
        phase24.into_iter().map(Option::unwrap).collect(),
    ))
}

fn ccw_families_ok(u13: (i64, i64), u24: (i64, i64), s13: bool, s24: bool) -> bool {
    let fam = |on: bool, yes: u8, no: u8| if on { yes } else { no };
    let mut rays = [
        (u13, fam(s13, 1, 3)),
        ((-u13.0, -u13.1), fam(s13, 3, 1)),
        (u24, fam(s24, 2, 4)),
        ((-u24.0, -u24.1), fam(s24, 4, 2)),
    ];
    rays.sort_by(|a, b| {
        if a.0 == b.0 {
            std::cmp::Ordering::Equal
        } else if ccw_less(a.0, b.0) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let fams: Vec<u8> = rays.iter().map(|&(_, f)| f).collect();
    let start = fams.iter().position(|&f| f == 1).unwrap();
    (0..4).all(|i| fams[(start + i) % 4] == (i as u8) + 1)
}

fn build_shadow(p: i64, q: i64, x24: Rational64) -> Result<ShadowDiagram> {
    let b = p * q - p - q + 2;
    let d = 2 * b;
    let c13 = (p - 2, q);
    let c24 = (-p, q - 2);
    // level sets: q*x - (p-2)*y = r13 (mod 1) through (0, 1/2), and
    // (q-2)*x + p*y = r24 (mod 1) through (x24, 0)
    let r13 = frac(Rational64::new(-(p - 2), 2));
    let r24 = frac(Rational64::from_integer(q - 2) * x24);
    let det = Rational64::from_integer(d);
    let mut set = std::collections::BTreeSet::new();
    for m in 0..d {
        for n in 0..d {
            let a13 = r13 + Rational64::from_integer(m);
            let a24 = r24 + Rational64::from_integer(n);
            let x = frac((a13 * p + a24 * (p - 2)) / det);
            let y = frac((a13 * (2 - q) + a24 * q) / det);
            set.insert((x, y));
        }
    }
    if set.len() != d as usize {
        return Err(Error::NonGenericPlacement);
    }
    let bridge_points: Vec<RationalPoint> = set.into_iter().collect();

    let (u13, u24) = oriented_directions(c13, c24);
    let side13 = decompose_side(&bridge_points, u13);
    let side24 = decompose_side(&bridge_points, u24);
    for cycle in side13.cycles.iter().chain(&side24.cycles) {
        if cycle.len() % 2 != 0 {
            return Err(Error::NonGenericPlacement);
        }
    }
    let (phase13, phase24) = solve_phases(bridge_points.len(), &side13, &side24)?;

    let s13 = |i: usize| {
        let (c, k) = side13.position[i];
        phase13[c] == (k % 2 == 0)
    };
    let s24 = |i: usize| {
        let (c, k) = side24.position[i];
        phase24[c] == (k % 2 == 0)
    };
    for i in 0..bridge_points.len() {
        if !ccw_families_ok(u13, u24, s13(i), s24(i)) {
            return Err(Error::NonGenericPlacement);
        }
    }

    let mut arcs = Vec::with_capacity(2 * d as usize);
    let mut emit = |cycles: &[Vec<usize>], fam_on: u8, fam_off: u8, s: &dyn Fn(usize) -> bool| {
        for cycle in cycles {
            for (k, &i) in cycle.iter().enumerate() {
                let j = cycle[(k + 1) % cycle.len()];
                arcs.push(ShadowArc {
                    family: if s(i) { fam_on } else { fam_off },
                    from: i,
                    to: j,
                    segment: (bridge_points[i], bridge_points[j]),
                });
            }
        }
    };
    emit(&side13.cycles, 1, 3, &s13);
    emit(&side24.cycles, 2, 4, &s24);
    arcs.sort_by_key(|a| (a.family, a.from, a.to));

    for family in 1..=4u8 {
        if arcs.iter().filter(|a| a.family == family).count() != b as usize {
            return Err(Error::NonGenericPlacement);
        }
    }

    Ok(ShadowDiagram {
        bridge_points,
        arcs,
        curve13_class: c13,
        curve24_class: c24,
        reduced: p < 2 || q < 2,
    })
}

/// Exact shadow diagram of the efficient bridge position of `C_{p,q}`.
pub fn shadow_diagram(p: i64, q: i64) -> Result<ShadowDiagram> {
    if p < 1 || q < 1 {
        return Err(Error::NonPositiveDegree);
    }
    let half = Rational64::new(1, 2);
    match build_shadow(p, q, half) {
        Err(Error::NonGenericPlacement) => {
            let b = p * q - p - q + 2;
            let eps = Rational64::new(1, 4 * b * p.max(q));
            build_shadow(p, q, half + eps)
        }
        other => other,
    }
}

/// Bridge-multisection parameters `(g; k)` with `(b; c)`-bridge surface
/// data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeParams {
    pub g: i64,
    pub k: Vec<i64>,
    pub b: i64,
    pub c: Vec<i64>,
    pub sectors: i64,
}

/// Parameters of the `n`-fold cyclic branched cover of a `(b, c)`-bridge
/// surface in a `(g; k)` multisected manifold.
pub fn branched_cover_params(g: i64, k: &[i64], b: i64, c: &[i64], n: i64) -> (i64, Vec<i64>) {
    let g2 = n * g + (n - 1) * (b - 1);
    let k2 = k
        .iter()
        .zip(c)
        .map(|(&ki, &ci)| n * ki + (n - 1) * (ci - 1))
        .collect();
    (g2, k2)
}

/// Named families of cyclic branched covers over `C_{p,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverFamily {
    /// `CP2 # (4q'+1) CP2bar`
    Rational { q: i64 },
    /// Elliptic surface `E(q')`
    Elliptic { q: i64 },
    /// Horikawa surface `H(q')`
    Horikawa { q: i64 },
    Unnamed,
}

fn family_of(p: i64, q: i64, n: i64) -> CoverFamily {
    if n != 2 {
        return CoverFamily::Unnamed;
    }
    for (a, b) in [(p, q), (q, p)] {
        if b % 2 == 0 {
            match a {
                2 => return CoverFamily::Rational { q: b / 2 },
                4 => return CoverFamily::Elliptic { q: b / 2 },
                6 => return CoverFamily::Horikawa { q: b / 2 },
                _ => {}
            }
        }
    }
    CoverFamily::Unnamed
}

/// Central-surface genus of the efficient `(g, 0)` 4-section of the
/// `n`-fold cyclic cover `X_{p,q,n}`, with the named family when known.
pub fn cyclic_cover_genus(p: i64, q: i64, n: i64) -> Result<(i64, CoverFamily)> {
    if p < 1 || q < 1 {
        return Err(Error::NonPositiveDegree);
    }
    if n < 2 {
        return Err(Error::NonPositiveCover);
    }
    if p.gcd(&q) % n != 0 {
        return Err(Error::DivisibilityViolation { n, p, q });
    }
    let g = n + (n - 1) * (p - 1) * (q - 1);
    Ok((g, family_of(p, q, n)))
}
