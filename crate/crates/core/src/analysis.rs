//! Touching graphs and instance checks of the structural claims.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use itertools::Itertools;

use crate::arrangement::{Arrangement, CircleId, DartId, FaceId, VertexId, VertexKind};
use crate::constructions::AlternationWitness;
use crate::error::{Error, Result};
use crate::planarity::is_planar;
use crate::wiring::{EventKind, Topology, Wiring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TouchingGraph {
    pub n: usize,
    /// One edge per touching vertex, `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(CircleId, CircleId)>,
    /// Touching partners of each circle in the order met along its walk.
    pub order: Vec<Vec<CircleId>>,
}

impl TouchingGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut order = vec![Vec::new(); n];
        for &(a, b) in &edges {
            order[a].push(b);
            order[b].push(a);
        }
        TouchingGraph { n, edges, order }
    }

    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    pub fn degree(&self, v: CircleId) -> usize {
        self.order[v].len()
    }

    /// Whether the touchings of `v` with `a` and `b` are adjacent in the
    /// cyclic order along `v`.
    pub fn consecutive_at(&self, v: CircleId, a: CircleId, b: CircleId) -> bool {
        let ord = &self.order[v];
        let (Some(i), Some(j)) = (ord.iter().position(|&x| x == a), ord.iter().position(|&x| x == b)) else {
            return false;
        };
        let d = i.abs_diff(j);
        d == 1 || d + 1 == ord.len()
    }

    /// Proper 2-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &w in &adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// All triangles `[a, b, c]` with `a < b < c`, sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for &c in adj[a].intersection(&adj[b]) {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub fn touching_graph(a: &Arrangement) -> TouchingGraph {
    let mut edges: Vec<_> = a.touching_vertices().map(|v| a.circles_at(v)).collect();
    edges.sort_unstable();
    let order = (0..a.n())
        .map(|c| a.circle_walk(c).iter().filter(|e| e.kind == VertexKind::Touching).map(|e| e.other).collect())
        .collect();
    TouchingGraph { n: a.n(), edges, order }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphChecks {
    pub bipartite: bool,
    pub planar: bool,
    pub triangles: Vec<[usize; 3]>,
}

pub fn graph_checks(g: &TouchingGraph) -> GraphChecks {
    GraphChecks { bipartite: g.two_coloring().is_some(), planar: is_planar(g.n, &g.edges), triangles: g.triangles() }
}

/// A triangle cell next to an edge of a circle walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IncidentTriangle {
    /// Walk position of the edge.
    pub edge: usize,
    pub face: FaceId,
    pub side: bool,
}

/// Triangle cells along circle `c`, ordered by walk position, then face id.
pub fn incident_triangles(a: &Arrangement, c: CircleId) -> Vec<IncidentTriangle> {
    let index = a.face_index();
    let sides = a.side_vectors();
    let is_triangle = |f: FaceId| {
        let face = &index.faces[f];
        face.len() == 3 && a.face_crossings(face) == 3
    };
    let mut out = Vec::new();
    for (k, e) in a.circle_walk(c).iter().enumerate() {
        let mut here: Vec<FaceId> =
            [index.face_of[e.dart], index.face_of[a.rev(e.dart)]].into_iter().filter(|&f| is_triangle(f)).collect();
        here.sort_unstable();
        here.dedup();
        out.extend(here.into_iter().map(|f| IncidentTriangle { edge: k, face: f, side: sides[f].bits.get(c) }));
    }
    out
}

/// Every alternating quadruple of triangles along `c`, in lexicographic
/// order of (walk position, face id) tuples.
pub fn alternation_witnesses(a: &Arrangement, c: CircleId) -> Vec<AlternationWitness> {
    if c >= a.n() {
        return Vec::new();
    }
    let items = incident_triangles(a, c);
    let mut out = Vec::new();
    for (i, p) in items.iter().enumerate() {
        for (j, q) in items.iter().enumerate().skip(i + 1) {
            if q.edge == p.edge || q.side == p.side {
                continue;
            }
            for (k, r) in items.iter().enumerate().skip(j + 1) {
                if r.edge == q.edge || r.side != p.side {
                    continue;
                }
                for s in &items[k + 1..] {
                    if s.edge == r.edge || s.side != q.side {
                        continue;
                    }
                    let quad = [p, q, r, s];
                    out.push(AlternationWitness {
                        circle: c,
                        edges: quad.map(|t| t.edge),
                        faces: quad.map(|t| t.face),
                        sides: quad.map(|t| t.side),
                    });
                }
            }
        }
    }
    out
}

/// The lexicographically least witness on `c`.
pub fn alternation_witness(a: &Arrangement, c: CircleId) -> Option<AlternationWitness> {
    alternation_witnesses(a, c).into_iter().next()
}

/// A piece of a circle inside one of the two triangle cells of a
/// pairwise-touching triple, between two consecutive points where it meets the triple.
///
/// Boundary arcs are named after the triple in order: `α` on `triple[0]`,
/// `β` on `triple[1]`, `γ` on `triple[2]`; arcs in the second cell are primed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcArc {
    pub circle: CircleId,
    /// 0 for the first triangle cell, 1 for the second (primed).
    pub cell: usize,
    /// Triple indices of the circles at the two ends, smaller first.
    pub ends: (usize, usize),
    pub start: VertexId,
    pub end: VertexId,
    pub interior: Vec<VertexId>,
}

impl PcArc {
    pub fn label(&self) -> String {
        const NAMES: [char; 3] = ['α', 'β', 'γ'];
        let prime = if self.cell == 1 { "′" } else { "" };
        format!("{}{prime}{}{prime}", NAMES[self.ends.0], NAMES[self.ends.1])
    }

    /// Type class ignoring the cell.
    pub fn class(&self) -> (usize, usize) {
        self.ends
    }
}

impl fmt::Display for PcArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "circle {} {} ({} -> {})", self.circle, self.label(), self.start, self.end)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn check_triple(a: &Arrangement, triple: [CircleId; 3]) -> Result<()> {
    if a.n() < 3 {
        return Err(Error::NotTouchingTriple(format!("need three circles, n={}", a.n())));
    }
    if triple.iter().any(|&c| c >= a.n()) || !triple.iter().all_unique() {
        return Err(Error::NotTouchingTriple(format!("{triple:?} is not a set of three circles")));
    }
    let touching: BTreeSet<_> = a.touching_vertices().map(|v| a.circles_at(v)).collect();
    for (x, y) in triple.iter().copied().tuple_combinations() {
        if !touching.contains(&(x.min(y), x.max(y))) {
            return Err(Error::NotTouchingTriple(format!("circles {x} and {y} do not touch")));
        }
    }
    Ok(())
}

/// pc-arcs of every circle outside `triple`, grouped by circle.
pub fn pc_arc_types(a: &Arrangement, triple: [CircleId; 3]) -> Result<Vec<(CircleId, Vec<PcArc>)>> {
    a.ensure_valid()?;
    check_triple(a, triple)?;
    let index = a.face_index();
    let in_k = |c: CircleId| triple.contains(&c);
    let mut parent: Vec<usize> = (0..index.faces.len()).collect();
    for d in 0..a.dart_count() {
        if !in_k(a.circle_of(d)) {
            let (x, y) = (find(&mut parent, index.face_of[d]), find(&mut parent, index.face_of[a.rev(d)]));
            parent[x] = y;
        }
    }
    let mut labels: BTreeMap<usize, (BTreeSet<CircleId>, DartId)> = BTreeMap::new();
    for d in 0..a.dart_count() {
        let root = find(&mut parent, index.face_of[d]);
        let entry = labels.entry(root).or_insert((BTreeSet::new(), d));
        entry.1 = entry.1.min(d);
        if in_k(a.circle_of(d)) {
            entry.0.insert(a.circle_of(d));
        }
    }
    let mut cells: Vec<(DartId, usize)> =
        labels.iter().filter(|(_, (set, _))| set.len() == 3).map(|(&root, &(_, min))| (min, root)).collect();
    cells.sort_unstable();
    if cells.len() != 2 {
        return Err(Error::InvalidArrangement(format!("triple {triple:?} bounds {} triangle regions", cells.len())));
    }
    let cells = [cells[0].1, cells[1].1];
    let k_index = |c: CircleId| triple.iter().position(|&t| t == c).expect("circle of the triple");

    let mut out = Vec::new();
    for d in (0..a.n()).filter(|&c| !in_k(c)) {
        let walk = a.circle_walk(d);
        let len = walk.len();
        // a touching with the triple ends one arc and starts the next at the same point
        let breaks: Vec<usize> = (0..len).filter(|&i| in_k(walk[i].other)).collect();
        let mut arcs = Vec::new();
        for (bi, &i) in breaks.iter().enumerate() {
            let j = breaks[(bi + 1) % breaks.len()];
            let steps = (j + len - i - 1) % len + 1;
            let root = find(&mut parent, index.face_of[walk[i].dart]);
            let Some(cell) = cells.iter().position(|&c| c == root) else { continue };
            let (s, e) = (k_index(walk[i].other), k_index(walk[j].other));
            arcs.push(PcArc {
                circle: d,
                cell,
                ends: (s.min(e), s.max(e)),
                start: walk[i].vertex,
                end: walk[j].vertex,
                interior: (1..steps).map(|t| walk[(i + t) % len].vertex).collect(),
            });
        }
        out.push((d, arcs));
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Claim1Report {
    /// Arc pairs in one cell that touch or cross twice, with type equality.
    pub pairs: Vec<(PcArc, PcArc, bool)>,
    /// Circles whose arcs do not cover the three type classes once each.
    pub class_violations: Vec<CircleId>,
}

impl Claim1Report {
    pub fn violations(&self) -> usize {
        self.pairs.iter().filter(|p| !p.2).count()
    }

    pub fn holds(&self) -> bool {
        self.violations() == 0
    }
}

pub fn claim1_check(a: &Arrangement, triple: [CircleId; 3]) -> Result<Claim1Report> {
    let per_circle = pc_arc_types(a, triple)?;
    let mut report = Claim1Report::default();
    for (c, arcs) in &per_circle {
        let classes: Vec<_> = arcs.iter().map(PcArc::class).sorted().collect();
        if !arcs.is_empty() && classes != [(0, 1), (0, 2), (1, 2)] {
            report.class_violations.push(*c);
        }
    }
    let all: Vec<&PcArc> = per_circle.iter().flat_map(|(_, arcs)| arcs).collect();
    for (x, y) in all.iter().tuple_combinations() {
        if x.circle == y.circle || x.cell != y.cell {
            continue;
        }
        let xs: BTreeSet<_> = x.interior.iter().collect();
        let shared: Vec<VertexId> = y.interior.iter().copied().filter(|v| xs.contains(v)).collect();
        let crossings = shared.iter().filter(|&&v| a.kind(v) == VertexKind::Crossing).count();
        let touchings = shared.len() - crossings;
        if crossings == 2 || touchings == 1 {
            report.pairs.push(((*x).clone(), (*y).clone(), x.ends == y.ends));
        }
    }
    Ok(report)
}

/// All pairwise-touching triples of an arrangement.
pub fn touching_triples(a: &Arrangement) -> Vec<[CircleId; 3]> {
    touching_graph(a).triangles()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Left,
    Right,
}

/// Routing of touching-graph edges around the wires strictly between their
/// endpoints, and the crossing parity this forces on independent edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgarwalDrawing {
    pub edges: Vec<(usize, usize)>,
    /// `(edge index, w) -> route` for every `u < w < v`.
    pub routes: BTreeMap<(usize, usize), Route>,
    /// `(edge index, edge index, odd)` for every pair of independent edges.
    pub parities: Vec<(usize, usize, bool)>,
    /// Per wire: `Some(true)` when all its touchings are from below,
    /// `Some(false)` when all are from above, `None` if it has none or both.
    pub touch_sides: Vec<Option<bool>>,
    pub mixed_sides: Vec<usize>,
}

impl AgarwalDrawing {
    pub fn all_even(&self) -> bool {
        self.parities.iter().all(|p| !p.2)
    }

    pub fn odd_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parities.iter().filter(|p| p.2).map(|p| (p.0, p.1))
    }
}

/// Applies the routing rule "`e = {u, v}` passes left of `w` iff `P_w` meets
/// `P_u` before `P_v`" on a linear wiring whose wires are numbered top to
/// bottom at the left boundary.
pub fn agarwal_drawing(lw: &Wiring) -> Result<AgarwalDrawing> {
    if lw.topology != (Topology::Linear { open_strip: false }) {
        return Err(Error::InvalidWiring("the drawing rule needs a closed linear wiring".into()));
    }
    let n = lw.n;
    for e in &lw.events {
        if e.slot + 1 >= n {
            return Err(Error::InvalidWiring(format!("slot {} out of range", e.slot)));
        }
    }
    let wires = lw.event_wires();
    let mut first = vec![vec![usize::MAX; n]; n];
    let mut touches = Vec::new();
    let mut below = vec![false; n];
    let mut above = vec![false; n];
    for (idx, (e, &(up, lo))) in lw.events.iter().zip(&wires).enumerate() {
        first[up][lo] = first[up][lo].min(idx);
        first[lo][up] = first[lo][up].min(idx);
        if e.kind == EventKind::Touch {
            touches.push((up.min(lo), up.max(lo)));
            below[up] = true;
            above[lo] = true;
        }
    }
    for (i, j) in (0..n).tuple_combinations() {
        if first[i][j] == usize::MAX {
            return Err(Error::NoIntersection(i, j));
        }
    }
    lw.ensure_valid()?;
    touches.sort_unstable();
    let edges = touches;
    let mut routes = BTreeMap::new();
    for (k, &(u, v)) in edges.iter().enumerate() {
        for w in u + 1..v {
            let r = if first[w][u] < first[w][v] { Route::Left } else { Route::Right };
            routes.insert((k, w), r);
        }
    }
    let left = |k: usize, w: usize| routes[&(k, w)] == Route::Left;
    let mut parities = Vec::new();
    for (x, y) in (0..edges.len()).tuple_combinations() {
        let (mut ei, mut fi) = (x, y);
        if edges[fi].0 < edges[ei].0 {
            std::mem::swap(&mut ei, &mut fi);
        }
        let ((a, b), (c, d)) = (edges[ei], edges[fi]);
        if [a, b].contains(&c) || [a, b].contains(&d) {
            continue;
        }
        let odd = if c > b {
            false
        } else {
            let top = left(ei, c);
            let bottom = if b < d { !left(fi, b) } else { left(ei, d) };
            top != bottom
        };
        parities.push((x, y, odd));
    }
    let touch_sides: Vec<Option<bool>> = (0..n)
        .map(|w| match (below[w], above[w]) {
            (true, false) => Some(true),
            (false, true) => Some(false),
            _ => None,
        })
        .collect();
    let mixed_sides = (0..n).filter(|&w| below[w] && above[w]).collect();
    Ok(AgarwalDrawing { edges, routes, parities, touch_sides, mixed_sides })
}

/// Observational summary of an arrangement against the known bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub touchings: usize,
    pub digons: usize,
    pub p2_combined: usize,
    pub by_crossings: BTreeMap<usize, usize>,
    pub by_walk_length: BTreeMap<usize, usize>,
    pub cylindrical: bool,
    pub tg_edges: usize,
    pub tg_triangles: usize,
    pub tg_bipartite: bool,
    pub tg_planar: bool,
}

impl Report {
    pub fn p3(&self) -> usize {
        self.by_crossings.get(&3).copied().unwrap_or(0)
    }

    pub fn digon_free(&self) -> bool {
        self.p2_combined == 0
    }

    pub fn p3_floor(&self) -> usize {
        (4 * self.n).div_ceil(3)
    }

    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv: Vec<(String, String)> = Vec::new();
        let mut put = |k: &str, v: String| kv.push((k.to_string(), v));
        put("n", self.n.to_string());
        put("vertices", self.vertices.to_string());
        put("edges", self.edges.to_string());
        put("faces", self.faces.to_string());
        put("touchings", self.touchings.to_string());
        put("digons", self.digons.to_string());
        put("p2_combined", self.p2_combined.to_string());
        let bound = (2 * self.n).saturating_sub(2);
        put("p2_bound", bound.to_string());
        put("p2_within_bound", (self.p2_combined <= bound).to_string());
        for (k, c) in &self.by_crossings {
            put(&format!("p{k}"), c.to_string());
        }
        if !self.by_crossings.contains_key(&3) {
            put("p3", "0".into());
        }
        for (k, c) in &self.by_walk_length {
            put(&format!("walk{k}"), c.to_string());
        }
        put("digon_free", self.digon_free().to_string());
        put("p3_floor", self.p3_floor().to_string());
        let floor = if self.digon_free() { (self.p3() >= self.p3_floor()).to_string() } else { "na".into() };
        put("p3_floor_met", floor);
        put("p3_at_least_n_minus_1", (self.p3() + 1 >= self.n).to_string());
        put("cylindrical", self.cylindrical.to_string());
        put("tg_edges", self.tg_edges.to_string());
        put("tg_triangles", self.tg_triangles.to_string());
        put("tg_bipartite", self.tg_bipartite.to_string());
        put("tg_planar", self.tg_planar.to_string());
        put("theorem1_hypothesis", (self.tg_triangles > 0).to_string());
        kv
    }

    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.key_values() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        let kv = self.key_values();
        format!("{}\n{}\n", kv.iter().map(|p| &p.0).join("\t"), kv.iter().map(|p| &p.1).join("\t"))
    }
}

pub fn report(a: &Arrangement) -> Result<Report> {
    a.ensure_valid()?;
    let st = a.cell_stats();
    let g = touching_graph(a);
    let checks = graph_checks(&g);
    Ok(Report {
        n: a.n(),
        vertices: a.vertex_count(),
        edges: a.edge_count(),
        faces: st.face_count,
        touchings: st.touchings,
        digons: st.digons,
        p2_combined: st.p2_combined,
        by_crossings: st.by_crossings.clone(),
        by_walk_length: st.by_walk_length.clone(),
        cylindrical: a.is_cylindrical().is_some(),
        tg_edges: g.edges.len(),
        tg_triangles: checks.triangles.len(),
        tg_bipartite: checks.bipartite,
        tg_planar: checks.planar,
    })
}
