//! Arrangement families and the local operators that transform them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::analysis::{alternation_witnesses, incident_triangles};
use crate::arrangement::{Arrangement, CircleId, DartId, FaceId, VertexId, VertexKind};
use crate::circles::{realize, Circle};
use crate::error::{Error, Result};
use crate::format::parse_wir;
use crate::surgery::Rebuild;
use crate::wiring::{Event, EventKind, Wiring};

/// Four triangles along a circle, in walk order, alternating sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternationWitness {
    pub circle: CircleId,
    /// Walk positions (indices into `circle_walk`) of the witness edges.
    pub edges: [usize; 4],
    pub faces: [FaceId; 4],
    /// Side bit of each triangle relative to the circle.
    pub sides: [bool; 4],
}

/// Where a relaxed touching puts its new digon, relative to the smaller of
/// the two circles: `In` is the side away from the reference face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    In,
    Out,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::In => "in",
            Side::Out => "out",
        }
    }

    fn from_bit(bit: bool) -> Side {
        if bit {
            Side::In
        } else {
            Side::Out
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s {
            "in" => Ok(Side::In),
            "out" => Ok(Side::Out),
            _ => Err(Error::OutOfRange(format!("side must be 'in' or 'out', got '{s}'"))),
        }
    }
}

pub fn krupp_wiring() -> Wiring {
    Wiring::from_cross_slots(3, &[0, 1, 0, 1, 0, 1])
}

/// Three pairwise crossing circles whose eight cells are all triangles.
pub fn krupp() -> Arrangement {
    krupp_wiring().to_arrangement().expect("full twist is a valid wiring")
}

/// Annular wiring with two crossing wires on top and every other wire
/// forming a lens with each of them.
pub fn grunbaum_wiring(n: usize) -> Result<Wiring> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("digon family needs n >= 4, got {n}")));
    }
    let block = n - 2;
    let mut events = Vec::new();
    for _ in 0..2 {
        events.push(Event::cross(0));
        for k in 0..block {
            // the wire at block index k rises to position 2
            for p in (2..=1 + k).rev() {
                events.push(Event::cross(p));
            }
            events.push(Event::cross(1));
            events.push(Event::cross(1));
        }
    }
    Ok(Wiring::annular(n, events))
}

/// Touching-free arrangement with exactly `2n - 2` digons.
pub fn grunbaum_digons(n: usize) -> Result<Arrangement> {
    grunbaum_wiring(n)?.to_arrangement()
}

/// Hub circle 0 touching rim circles `1..n`, rim circle `i` touching
/// `i ± n/2` (mod `n - 1`). Realized by equal rim circles around a unit hub.
pub fn wheel(n: usize) -> Result<Arrangement> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::OutOfRange(format!("wheel needs an even n >= 6, got {n}")));
    }
    let m = n - 1;
    let s = (std::f64::consts::PI / (2.0 * m as f64)).cos();
    let radius = s / (1.0 - s);
    let mut circles = vec![Circle::new(0.0, 0.0, 1.0)];
    let mut touching = BTreeSet::new();
    for k in 0..m {
        let theta = std::f64::consts::TAU * k as f64 / m as f64;
        circles.push(Circle::new((1.0 + radius) * theta.cos(), (1.0 + radius) * theta.sin(), radius));
        touching.insert((0, k + 1));
        let j = (k + n / 2) % m;
        touching.insert((k.min(j) + 1, k.max(j) + 1));
    }
    let a = realize(&circles, &touching)?;
    a.ensure_valid()?;
    Ok(a)
}

/// Merges the two corners of a lens into one touching vertex.
pub fn contract_digon(a: &Arrangement, f: FaceId) -> Result<Arrangement> {
    a.ensure_valid()?;
    let faces = a.faces();
    let face = faces.get(f).ok_or(Error::NotDigon(f))?;
    if !a.is_lens(face) {
        return Err(Error::NotDigon(f));
    }
    let (d1, d2) = (face.darts[0], face.darts[1]);
    let (x, y) = (a.origin(d1), a.origin(d2));
    let from = |v: VertexId, first: DartId| {
        let r = a.rotation(v);
        let i = r.iter().position(|&d| d == first).expect("dart at its origin");
        [r[i], r[(i + 1) % 4], r[(i + 2) % 4], r[(i + 3) % 4]]
    };
    let rx = from(x, a.rev(d2));
    let ry = from(y, a.rev(d1));
    debug_assert_eq!((rx[1], ry[1]), (d1, d2));
    let merged = [rx[2], rx[3], ry[2], ry[3]];

    let removed = [d1, d2, a.rev(d1), a.rev(d2)];
    let mut renumber = vec![usize::MAX; a.dart_count()];
    let mut next = 0;
    for (d, slot) in renumber.iter_mut().enumerate() {
        if !removed.contains(&d) {
            *slot = next;
            next += 1;
        }
    }
    let keep: Vec<DartId> = (0..a.dart_count()).filter(|d| !removed.contains(d)).collect();
    let circle = keep.iter().map(|&d| a.circle_of(d)).collect();
    let reversal = keep.iter().map(|&d| renumber[a.rev(d)]).collect();
    let mut rotation = Vec::new();
    let mut kinds = Vec::new();
    for v in 0..a.vertex_count() {
        if v != x && v != y {
            rotation.push(a.rotation(v).map(|d| renumber[d]));
            kinds.push(a.kind(v));
        }
    }
    rotation.push(merged.map(|d| renumber[d]));
    kinds.push(VertexKind::Touching);
    let out = Arrangement::from_parts(a.n(), circle, reversal, rotation, Some(kinds))?;
    out.ensure_valid()?;
    Ok(out)
}

/// Side of a lens face relative to the smaller of its two circles.
pub fn digon_side(a: &Arrangement, f: FaceId) -> Result<Side> {
    let faces = a.faces();
    let face = faces.get(f).ok_or(Error::NotDigon(f))?;
    if !a.is_lens(face) {
        return Err(Error::NotDigon(f));
    }
    let (c, _) = a.circles_at(a.origin(face.darts[0]));
    Ok(Side::from_bit(a.side_vectors()[f].bits.get(c)))
}

/// Splits a touching vertex into two crossings bounding a new lens.
///
/// The lens position is forced by the rotation at `x`; `side` must name it,
/// otherwise the call fails with [`Error::SideMismatch`].
pub fn relax_touching(a: &Arrangement, x: VertexId, side: Side) -> Result<Arrangement> {
    a.ensure_valid()?;
    if x >= a.vertex_count() || a.kind(x) != VertexKind::Touching {
        return Err(Error::NotTouching(x));
    }
    let r = a.rotation(x);
    let c = r.map(|d| a.circle_of(d));
    let k = (0..4)
        .find(|&k| c[k] == c[(k + 3) % 4] && c[(k + 1) % 4] == c[(k + 2) % 4] && c[k] != c[(k + 1) % 4])
        .expect("touching pattern");
    let [p, q, rr, s] = [r[k], r[(k + 1) % 4], r[(k + 2) % 4], r[(k + 3) % 4]];
    let (alpha, beta) = (a.circle_of(p), a.circle_of(q));

    let base = a.dart_count();
    let (e_alpha, e_beta, f_beta, f_alpha) = (base, base + 1, base + 2, base + 3);
    let mut circle: Vec<CircleId> = (0..base).map(|d| a.circle_of(d)).collect();
    circle.extend([alpha, beta, beta, alpha]);
    let mut reversal: Vec<DartId> = (0..base).map(|d| a.rev(d)).collect();
    reversal.extend([f_alpha, f_beta, e_beta, e_alpha]);
    let mut rotation: Vec<[DartId; 4]> = (0..a.vertex_count()).map(|v| a.rotation(v)).collect();
    let mut kinds: Vec<VertexKind> = (0..a.vertex_count()).map(|v| a.kind(v)).collect();
    rotation[x] = [p, q, e_alpha, e_beta];
    kinds[x] = VertexKind::Crossing;
    rotation.push([rr, s, f_beta, f_alpha]);
    kinds.push(VertexKind::Crossing);
    let out = Arrangement::from_parts(a.n(), circle, reversal, rotation, Some(kinds))?;
    out.ensure_valid()?;

    let index = out.face_index();
    let lens = index.face_of[e_beta];
    let actual = digon_side(&out, lens)?;
    if actual != side {
        return Err(Error::SideMismatch { vertex: x, actual: actual.as_str() });
    }
    Ok(out)
}

/// Relaxes the touchings of circle `v` to lenses and threads one new circle
/// per touching just inside `v`. New circle `n + i` touches `v` and the
/// `i`-th and `(i+1)`-th old touching partners along `v`.
pub fn blossom(a: &Arrangement, v: CircleId) -> Result<Arrangement> {
    a.ensure_valid()?;
    if v >= a.n() {
        return Err(Error::OutOfRange(format!("circle {v} with n={}", a.n())));
    }
    let mut walk: Vec<DartId> = a.circle_walk(v).iter().map(|e| e.dart).collect();
    let partner = |d: DartId| a.partner(d).expect("simple vertex");
    let is_touch = |d: DartId| a.kind(a.origin(d)) == VertexKind::Touching;
    let touches: Vec<DartId> = walk.iter().copied().filter(|&d| is_touch(d)).collect();
    if touches.len() < 3 {
        return Err(Error::TooFewTouchings { circle: v, count: touches.len() });
    }
    // walk so that the sector between the two v-darts of a touching lies on the right
    if a.succ(partner(touches[0])) != touches[0] {
        walk = walk.iter().rev().map(|&d| partner(d)).collect();
    }
    if walk.iter().any(|&d| is_touch(d) && a.succ(partner(d)) != d) {
        return Err(Error::MixedTouchingSides(v));
    }
    let degree = touches.len();
    let n = a.n();
    let dropped: BTreeSet<VertexId> = walk.iter().map(|&d| a.origin(d)).collect();
    let mut r = Rebuild::new(a, &dropped, &[v]);
    r.pos = std::iter::once(v).chain(n..n + degree).collect();
    let cross = EventKind::Cross;
    for &d in &walk {
        if is_touch(d) {
            // band top touches v, then sinks to position D-1
            r.event(0, EventKind::Touch);
            r.events(1..degree - 1, cross);
            let ne = a.succ(d);
            let nw = a.succ(ne);
            let guest = a.circle_of(ne);
            r.enter_top(guest, nw);
            r.event(0, cross);
            r.events(1..degree - 1, cross);
            r.event(degree - 1, EventKind::Touch);
            r.event(degree, cross);
            r.event(degree - 1, EventKind::Touch);
            r.events((1..degree - 1).rev(), cross);
            r.event(0, cross);
            r.exit_top(guest, ne)?;
        } else {
            let north = a.succ(d);
            let south = a.succ(a.succ(north));
            let guest = a.circle_of(north);
            r.enter_top(guest, north);
            r.events(0..=degree, cross);
            r.exit_bottom(guest, south)?;
        }
    }
    let out = r.finish(n + degree)?;
    out.ensure_valid()?;
    Ok(out)
}

const BASE6: &str = include_str!("../data/base6.wir");
const BASE7: &str = include_str!("../data/base7.wir");
const BASE8: &str = include_str!("../data/base8.wir");

/// Bundled wiring text of the base arrangement on `m` circles.
pub fn base_resource(m: usize) -> Result<&'static str> {
    match m {
        6 => Ok(BASE6),
        7 => Ok(BASE7),
        8 => Ok(BASE8),
        _ => Err(Error::OutOfRange(format!("base arrangements exist for m in 6..=8, got {m}"))),
    }
}

pub fn base_wiring(m: usize) -> Result<Wiring> {
    parse_wir(base_resource(m)?)
}

/// Digon-free cylindrical arrangements with 8, 10 and 11 triangles.
pub fn base_family(m: usize) -> Result<Arrangement> {
    base_wiring(m)?.to_arrangement()
}

/// The first witness on `c` whose triangles all face non-triangles across
/// the witness edges, so that replacing `c` along it gains exactly four
/// triangles. Falls back to the least witness when there is no such one.
pub fn replacement_witness(a: &Arrangement, c: CircleId) -> Option<AlternationWitness> {
    let index = a.face_index();
    let walk = a.circle_walk(c);
    let is_triangle = |f: FaceId| {
        let face = &index.faces[f];
        face.len() == 3 && a.face_crossings(face) == 3
    };
    let all = alternation_witnesses(a, c);
    let clean = all.iter().position(|w| {
        (0..4).all(|i| {
            let d = walk[w.edges[i]].dart;
            let across = if index.face_of[d] == w.faces[i] { index.face_of[a.rev(d)] } else { index.face_of[d] };
            !is_triangle(across)
        })
    });
    let pick = clean.unwrap_or(0);
    all.into_iter().nth(pick)
}

/// Replaces circle `w.circle` by a band of four circles that cross each other
/// in a staircase at the four witness edges.
pub fn replace_circle(a: &Arrangement, w: &AlternationWitness) -> Result<Arrangement> {
    a.ensure_valid()?;
    let stats = a.cell_stats();
    if stats.p2_combined > 0 {
        return Err(Error::DigonsPresent(stats.p2_combined));
    }
    let c = w.circle;
    if c >= a.n() {
        return Err(Error::InvalidWitness(format!("circle {c} out of range")));
    }
    let items = incident_triangles(a, c);
    for i in 0..4 {
        if !items.iter().any(|t| (t.edge, t.face, t.side) == (w.edges[i], w.faces[i], w.sides[i])) {
            return Err(Error::InvalidWitness(format!(
                "face {} is not a triangle on edge {} of circle {c}",
                w.faces[i], w.edges[i]
            )));
        }
    }
    if !w.edges.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::InvalidWitness("edges are not in walk order".into()));
    }
    if w.sides[0] == w.sides[1] || w.sides[0] != w.sides[2] || w.sides[1] != w.sides[3] {
        return Err(Error::InvalidWitness("sides do not alternate".into()));
    }

    let walk: Vec<DartId> = a.circle_walk(c).iter().map(|e| e.dart).collect();
    let n = a.n();
    let dropped: BTreeSet<VertexId> = walk.iter().map(|&d| a.origin(d)).collect();
    let mut r = Rebuild::new(a, &dropped, &[c]);
    r.pos = vec![c, n, n + 1, n + 2];
    for (k, &d) in walk.iter().enumerate() {
        let left = a.succ(d);
        let right = a.succ(a.succ(left));
        let guest = a.circle_of(left);
        r.enter_top(guest, left);
        r.events(0..4, EventKind::Cross);
        r.exit_bottom(guest, right)?;
        if w.edges.contains(&k) {
            r.events(0..3, EventKind::Cross);
        }
    }
    let out = r.finish(n + 3)?;
    out.ensure_valid()?;
    Ok(out)
}

/// Digon-free cylindrical arrangement with `ceil(4n/3)` triangles.
pub fn triangle_family(n: usize) -> Result<Arrangement> {
    if n < 6 {
        return Err(Error::OutOfRange(format!("triangle family needs n >= 6, got {n}")));
    }
    let mut a = base_family(6 + (n - 6) % 3)?;
    for _ in 0..(n - 6) / 3 {
        let c = a.n() - 1;
        let w = replacement_witness(&a, c).ok_or(Error::NoWitness(c))?;
        a = replace_circle(&a, &w)?;
    }
    Ok(a)
}

/// Decomposes `n = base + 3k` with `base` in {11, 15, 19}.
pub fn prop1_decomposition(n: usize) -> Option<(usize, usize)> {
    [11, 15, 19].into_iter().find(|&b| n >= b && (n - b).is_multiple_of(3)).map(|b| (b, (n - b) / 3))
}

/// Arrangement with `2n - 2` touchings and a triangle-free touching graph:
/// a blossomed wheel followed by blossoms on circles with three touchings.
pub fn prop1_family(n: usize) -> Result<Arrangement> {
    let (base, k) = prop1_decomposition(n)
        .ok_or_else(|| Error::OutOfRange(format!("n={n} is not of the form 11, 15 or 19 plus a multiple of 3")))?;
    let mut a = blossom(&wheel(base.div_ceil(2))?, 0)?;
    for _ in 0..k {
        let counts = touchings_per_circle(&a);
        let c = (0..a.n())
            .find(|&c| counts[c] == 3)
            .ok_or_else(|| Error::ConstructionFailed("no circle with exactly three touchings".into()))?;
        a = blossom(&a, c)?;
    }
    Ok(a)
}

pub fn touchings_per_circle(a: &Arrangement) -> Vec<usize> {
    let mut counts = vec![0; a.n()];
    for v in a.touching_vertices() {
        let (i, j) = a.circles_at(v);
        counts[i] += 1;
        counts[j] += 1;
    }
    counts
}
