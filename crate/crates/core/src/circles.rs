//! Rotation systems read off from configurations of Euclidean circles.
//!
//! Used for families that are not cylindrical and therefore have no wiring,
//! and for small hand-placed test fixtures.
//!
//! Pairs listed as touching are placed exactly at their tangency point; every
//! other pair must cross transversally.

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use crate::arrangement::{Arrangement, Builder};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub x: f64,
    pub y: f64,
    pub r: f64,
}

impl Circle {
    pub fn new(x: f64, y: f64, r: f64) -> Self {
        Circle { x, y, r }
    }
}

struct Meeting {
    point: (f64, f64),
    circles: (usize, usize),
    crossing: bool,
}

/// One dart at a meeting point: tangent direction, signed curvature, circle
/// and whether it follows the circle counterclockwise.
#[derive(Clone, Copy)]
struct Port {
    angle: f64,
    curvature: f64,
    circle: usize,
    forward: bool,
}

pub fn realize(circles: &[Circle], touching: &BTreeSet<(usize, usize)>) -> Result<Arrangement> {
    let n = circles.len();
    let mut meetings = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (circles[i], circles[j]);
            let (dx, dy) = (b.x - a.x, b.y - a.y);
            let d = dx.hypot(dy);
            if touching.contains(&(i, j)) {
                let point = if (d - (a.r + b.r)).abs() < (d - (a.r - b.r).abs()).abs() {
                    (a.x + dx * a.r / d, a.y + dy * a.r / d)
                } else {
                    let s = if a.r > b.r { 1.0 } else { -1.0 };
                    (a.x + s * dx / d * a.r, a.y + s * dy / d * a.r)
                };
                meetings.push(Meeting { point, circles: (i, j), crossing: false });
            } else {
                let along = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d);
                let h2 = a.r * a.r - along * along;
                if h2 <= 0.0 {
                    return Err(Error::ConstructionFailed(format!("circles {i} and {j} do not cross")));
                }
                let h = h2.sqrt();
                let (mx, my) = (a.x + along * dx / d, a.y + along * dy / d);
                meetings.push(Meeting { point: (mx + h * dy / d, my - h * dx / d), circles: (i, j), crossing: true });
                meetings.push(Meeting { point: (mx - h * dy / d, my + h * dx / d), circles: (i, j), crossing: true });
            }
        }
    }

    let mut b = Builder::new();
    let mut ports: Vec<Vec<Port>> = Vec::with_capacity(meetings.len());
    let mut along: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
    for (k, m) in meetings.iter().enumerate() {
        b.vertex();
        let mut items = Vec::with_capacity(4);
        for c in [m.circles.0, m.circles.1] {
            let cc = circles[c];
            let (rx, ry) = (m.point.0 - cc.x, m.point.1 - cc.y);
            along[c].push((ry.atan2(rx), k));
            let (tx, ty) = (-ry, rx);
            items.push(Port { angle: ty.atan2(tx), curvature: 1.0 / cc.r, circle: c, forward: true });
            items.push(Port { angle: (-ty).atan2(-tx), curvature: -1.0 / cc.r, circle: c, forward: false });
        }
        if m.crossing {
            items.sort_by(|p, q| p.angle.total_cmp(&q.angle));
        } else {
            // Tangent darts share two directions; within a direction the
            // more clockwise-bending curve comes first.
            let reference = items[0].angle;
            let group = |p: &Port| {
                let delta = (p.angle - reference).rem_euclid(TAU);
                usize::from((1.0..=TAU - 1.0).contains(&delta))
            };
            items.sort_by(|p, q| group(p).cmp(&group(q)).then(p.curvature.total_cmp(&q.curvature)));
        }
        ports.push(items);
    }
    let port = |k: usize, c: usize, forward: bool| -> usize {
        let idx = ports[k].iter().position(|p| p.circle == c && p.forward == forward).expect("port exists");
        4 * k + idx
    };
    for (c, events) in along.iter_mut().enumerate() {
        events.sort_by(|p, q| p.0.total_cmp(&q.0));
        for i in 0..events.len() {
            let (from, to) = (events[i].1, events[(i + 1) % events.len()].1);
            b.connect(port(from, c, true), port(to, c, false), c);
        }
    }
    b.build(n)
}
