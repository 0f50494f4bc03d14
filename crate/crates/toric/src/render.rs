//! Deterministic SVG emitters.  All geometry is computed exactly upstream;
//! floating point appears only here, at coordinate emission, with a fixed
//! 6-digit format so output is byte-stable.

use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::Zero;

use crate::curves::{frac, oriented_directions, traversal_param, RationalPoint, ShadowDiagram};
use crate::diagram::ToricLoop;
use crate::{Error, Result};

fn fmt6(x: f64) -> String {
    // normalize negative zero so formatting is truly deterministic
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.6}")
}

/// Boundary point of the hyperbolic disk for slope `b/a` under the Cayley
/// transform.
fn cayley_point(a: i64, b: i64) -> (f64, f64) {
    let (a, b) = (a as f64, b as f64);
    let norm = a * a + b * b;
    ((b * b - a * a) / norm, -2.0 * a * b / norm)
}

/// Renders a loop as a circuit in the Farey graph on the hyperbolic disk:
/// one vertex per distinct slope, one geodesic arc per loop edge.
pub fn emit_farey_svg(d: &ToricLoop) -> Result<String> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDiagram);
    }
    let n = d.len();
    let points: Vec<(f64, f64)> = d
        .slopes()
        .iter()
        .map(|s| {
            let v = s.rep();
            cayley_point(v.a(), v.b())
        })
        .collect();
    let mut svg = String::new();
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    );
    svg.push_str(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.01\"/>\n",
    );
    for i in 0..n {
        let p = points[i];
        let q = points[(i + 1) % n];
        let cross = p.0 * q.1 - p.1 * q.0;
        let path = if cross.abs() < 1e-12 {
            // antipodal endpoints: the geodesic is a diameter
            format!(
                "M {} {} L {} {}",
                fmt6(p.0),
                fmt6(p.1),
                fmt6(q.0),
                fmt6(q.1)
            )
        } else {
            // center c of the circle orthogonal to the boundary: c.p = c.q = 1
            let c = ((q.1 - p.1) / cross, (p.0 - q.0) / cross);
            let r = (c.0 * c.0 + c.1 * c.1 - 1.0).sqrt();
            let ccw = (p.0 - c.0) * (q.1 - c.1) - (p.1 - c.1) * (q.0 - c.0);
            let sweep = if ccw > 0.0 { 0 } else { 1 };
            format!(
                "M {} {} A {} {} 0 0 {} {} {}",
                fmt6(p.0),
                fmt6(p.1),
                fmt6(r),
                fmt6(r),
                sweep,
                fmt6(q.0),
                fmt6(q.1)
            )
        };
        let _ = writeln!(
            svg,
            "<path d=\"{path}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.015\"/>"
        );
    }
    let mut seen = Vec::new();
    for s in d.slopes() {
        if seen.contains(s) {
            continue;
        }
        seen.push(*s);
        let v = s.rep();
        let (x, y) = cayley_point(v.a(), v.b());
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"0.03\" fill=\"#000000\"/>",
            fmt6(x),
            fmt6(y)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn family_color(family: u8) -> &'static str {
    match family {
        1 => "red",
        2 => "blue",
        3 => "green",
        _ => "purple",
    }
}

fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Straight segments of the arc from `from` along direction `u` for
/// parameter length `tau`, split at the unit-square boundary.
fn torus_segments(
    from: RationalPoint,
    u: (i64, i64),
    tau: Rational64,
) -> Vec<(RationalPoint, RationalPoint)> {
    let one = Rational64::from_integer(1);
    let mut cur = from;
    let mut rem = tau;
    let mut out = Vec::new();
    while rem > Rational64::zero() {
        if u.0 < 0 && cur.0.is_zero() {
            cur.0 = one;
        }
        if u.1 < 0 && cur.1.is_zero() {
            cur.1 = one;
        }
        let step_for = |pos: Rational64, dir: i64| -> Option<Rational64> {
            match dir.cmp(&0) {
                std::cmp::Ordering::Greater => Some((one - pos) / dir),
                std::cmp::Ordering::Less => Some(pos / -dir),
                std::cmp::Ordering::Equal => None,
            }
        };
        let mut step = rem;
        if let Some(sx) = step_for(cur.0, u.0) {
            step = step.min(sx);
        }
        if let Some(sy) = step_for(cur.1, u.1) {
            step = step.min(sy);
        }
        let next = (cur.0 + step * u.0, cur.1 + step * u.1);
        out.push((cur, next));
        rem -= step;
        cur = next;
        if cur.0 == one {
            cur.0 = Rational64::zero();
        }
        if cur.1 == one {
            cur.1 = Rational64::zero();
        }
    }
    out
}

/// Renders a shadow diagram on the unit square with torus wrapping: one
/// path element per arc (colored by family), one circle per bridge point.
pub fn emit_shadow_svg(s: &ShadowDiagram) -> String {
    let (u13, u24) = oriented_directions(s.curve13_class, s.curve24_class);
    let mut svg = String::new();
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.05 -0.05 1.1 1.1\">\n",
    );
    svg.push_str(
        "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.004\"/>\n",
    );
    for arc in &s.arcs {
        let u = if arc.family == 1 || arc.family == 3 { u13 } else { u24 };
        let t0 = traversal_param(arc.segment.0, u);
        let t1 = traversal_param(arc.segment.1, u);
        let mut tau = frac(t1 - t0);
        if tau.is_zero() {
            tau = Rational64::from_integer(1);
        }
        let mut path = String::new();
        for (a, b) in torus_segments(arc.segment.0, u, tau) {
            let _ = write!(
                path,
                "M {} {} L {} {} ",
                fmt6(to_f64(a.0)),
                fmt6(to_f64(a.1)),
                fmt6(to_f64(b.0)),
                fmt6(to_f64(b.1))
            );
        }
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.006\"/>",
            path.trim_end(),
            family_color(arc.family)
        );
    }
    for &(x, y) in &s.bridge_points {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"0.01\" fill=\"#000000\"/>",
            fmt6(to_f64(x)),
            fmt6(to_f64(y))
        );
    }
    svg.push_str("</svg>\n");
    svg
}
