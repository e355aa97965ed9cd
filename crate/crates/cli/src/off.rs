//! OFF export of projected simplices.
//!
//! The projection deletes the requested coordinates (the ones where
//! every seed shares a standard-basis frozen vertex, in the intended
//! use) and must land in three dimensions. Faces are recovered by an
//! exact rational convex hull over the projected vertices, then
//! rendered with floating-point coordinates for viewers; the exact
//! geometry stays in the JSON documents.

use num_traits::{Signed, Zero};

use okbodies_core::Rational;

use crate::json::rational_f64;

type Point = Vec<Rational>;

fn sub(a: &Point, b: &Point) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross(a: &Point, b: &Point) -> Point {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &Point, b: &Point) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |s, t| s + t)
}

/// Convex hull of up to a handful of 3-d rational points. Returns the
/// extreme points and the facet polygons (indices into them, outward
/// counterclockwise). Degenerate (flat) inputs get a single polygon.
fn hull3d(points: &[Point]) -> (Vec<Point>, Vec<Vec<usize>>) {
    let mut vertices: Vec<Point> = Vec::new();
    for p in points {
        if !vertices.contains(p) {
            vertices.push(p.clone());
        }
    }
    let n = vertices.len();
    if n < 3 {
        return (vertices, Vec::new());
    }
    // collect supporting planes: all points weakly on one side
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut seen_planes: Vec<(Point, Rational)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let normal = cross(
                    &sub(&vertices[j], &vertices[i]),
                    &sub(&vertices[k], &vertices[i]),
                );
                if normal.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let offset = dot(&normal, &vertices[i]);
                let mut above = false;
                let mut below = false;
                for v in &vertices {
                    let d = dot(&normal, v) - &offset;
                    if d.is_positive() {
                        above = true;
                    } else if d.is_negative() {
                        below = true;
                    }
                }
                if above && below {
                    continue;
                }
                // orient outward
                let (normal, offset) = if above {
                    (
                        normal.iter().map(|c| -c.clone()).collect::<Point>(),
                        -offset.clone(),
                    )
                } else {
                    (normal, offset)
                };
                if seen_planes.iter().any(|(pn, po)| {
                    // same oriented plane up to positive scaling
                    cross(pn, &normal).iter().all(|c| c.is_zero())
                        && dot(pn, &normal).is_positive()
                        && po * dot(&normal, &normal) == &offset * dot(pn, &normal)
                }) {
                    continue;
                }
                let incident: Vec<usize> = (0..n)
                    .filter(|&t| dot(&normal, &vertices[t]) == offset)
                    .collect();
                if incident.len() < 3 {
                    continue;
                }
                faces.push(order_polygon(&vertices, &incident, &normal));
                seen_planes.push((normal, offset));
            }
        }
    }
    (vertices, faces)
}

/// Orders coplanar points into their convex polygon, counterclockwise
/// around `normal`, dropping interior points. Monotone chain on exact
/// in-plane coordinates.
fn order_polygon(vertices: &[Point], incident: &[usize], normal: &Point) -> Vec<usize> {
    let origin = &vertices[incident[0]];
    // in-plane basis
    let mut u = None;
    for &t in &incident[1..] {
        let d = sub(&vertices[t], origin);
        if !d.iter().all(|c| c.is_zero()) {
            u = Some(d);
            break;
        }
    }
    let u = u.expect("polygon has an edge");
    let v = cross(normal, &u);
    let mut coords: Vec<(Rational, Rational, usize)> = incident
        .iter()
        .map(|&t| {
            let d = sub(&vertices[t], origin);
            (dot(&d, &u), dot(&d, &v), t)
        })
        .collect();
    coords.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    let orient = |o: &(Rational, Rational, usize),
                  a: &(Rational, Rational, usize),
                  b: &(Rational, Rational, usize)| {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    };
    let mut lower: Vec<(Rational, Rational, usize)> = Vec::new();
    for p in &coords {
        while lower.len() >= 2
            && !orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Rational, Rational, usize)> = Vec::new();
    for p in coords.iter().rev() {
        while upper.len() >= 2
            && !orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    // (u, v = normal x u, normal) is right-handed, so the chain is
    // already counterclockwise around the outward normal
    let mut ring: Vec<usize> = lower.into_iter().map(|c| c.2).collect();
    ring.extend(upper.into_iter().map(|c| c.2));
    ring
}

/// Deletes the 0-based coordinates in `drop` (sorted, deduped by the
/// caller) from every vertex.
pub fn project(vertices: &[Vec<Rational>], drop: &[usize]) -> Vec<Point> {
    vertices
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Renders projected 3-d vertices as an OFF document.
pub fn off_document(points: &[Point]) -> String {
    let (vertices, faces) = hull3d(points);
    let mut out = String::new();
    out.push_str("OFF\n");
    out.push_str(&format!("{} {} 0\n", vertices.len(), faces.len()));
    for v in &vertices {
        let coords: Vec<String> = v.iter().map(|c| format!("{}", rational_f64(c))).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    for f in &faces {
        out.push_str(&f.len().to_string());
        for idx in f {
            out.push_str(&format!(" {}", idx));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn tetrahedron_hull() {
        let pts = vec![
            vec![q(0), q(0), q(0)],
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        let (verts, faces) = hull3d(&pts);
        assert_eq!(verts.len(), 4);
        assert_eq!(faces.len(), 4);
        for f in &faces {
            assert_eq!(f.len(), 3);
        }
    }

    #[test]
    fn interior_point_dropped_from_facet() {
        let pts = vec![
            vec![q(0), q(0), q(0)],
            vec![q(2), q(0), q(0)],
            vec![q(0), q(2), q(0)],
            vec![q(0), q(0), q(2)],
            // centroid of the bottom facet
            vec![
                Rational::new(2.into(), 3.into()),
                Rational::new(2.into(), 3.into()),
                q(0),
            ],
        ];
        let (_, faces) = hull3d(&pts);
        assert_eq!(faces.len(), 4);
        for f in &faces {
            assert_eq!(f.len(), 3, "interior point must not join a facet polygon");
        }
    }

    #[test]
    fn off_text_shape() {
        let pts = vec![
            vec![q(0), q(0), q(0)],
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        let doc = off_document(&pts);
        let mut lines = doc.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("4 4 0"));
    }
}
