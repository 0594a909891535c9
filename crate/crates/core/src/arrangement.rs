//! Combinatorial maps of pseudocircle arrangements on the sphere.
//!
//! An [`Arrangement`] stores darts (directed half-arcs) with a circle label,
//! a reversal involution and an origin vertex. Every vertex has degree four
//! and lists its darts in counterclockwise order. The face to the right of a
//! dart `d` continues with `succ(rev(d))`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type DartId = usize;
pub type VertexId = usize;
pub type FaceId = usize;
pub type CircleId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Crossing,
    Touching,
}

impl VertexKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexKind::Crossing => "cross",
            VertexKind::Touching => "touch",
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Immutable arrangement of pseudocircles as a rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    circle: Vec<CircleId>,
    reversal: Vec<DartId>,
    rotation: Vec<[DartId; 4]>,
    kind: Vec<VertexKind>,
    origin: Vec<VertexId>,
    slot: Vec<u8>,
}

/// A closed face walk; `darts[i+1] == succ(rev(darts[i]))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<DartId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Faces together with the inverse lookup dart -> face.
#[derive(Clone, Debug)]
pub struct FaceIndex {
    pub faces: Vec<Face>,
    pub face_of: Vec<FaceId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellStats {
    pub face_count: usize,
    pub by_walk_length: BTreeMap<usize, usize>,
    /// Faces keyed by the number of crossing corners on their boundary.
    pub by_crossings: BTreeMap<usize, usize>,
    /// Lens cells: exactly two corners, both crossings.
    pub digons: usize,
    pub triangles: usize,
    pub touchings: usize,
    pub p2_combined: usize,
}

impl CellStats {
    pub fn p(&self, k: usize) -> usize {
        self.by_crossings.get(&k).copied().unwrap_or(0)
    }

    pub fn is_digon_free(&self) -> bool {
        self.digons == 0
    }
}

/// Side bits of a face relative to the reference face, one bit per circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SideBits(Vec<u64>);

impl SideBits {
    fn zero(n: usize) -> Self {
        SideBits(vec![0; n.div_ceil(64).max(1)])
    }

    pub fn get(&self, c: CircleId) -> bool {
        (self.0[c / 64] >> (c % 64)) & 1 == 1
    }

    fn flip(&mut self, c: CircleId) {
        self.0[c / 64] ^= 1 << (c % 64);
    }

    fn complement(&self, n: usize) -> Self {
        let mut out = self.clone();
        for c in 0..n {
            out.flip(c);
        }
        out
    }

    pub fn count_ones(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn differing(&self, other: &SideBits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a ^ b).count_ones()).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideVector {
    pub face: FaceId,
    pub bits: SideBits,
}

/// One vertex met while travelling along a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkEvent {
    pub vertex: VertexId,
    /// Dart of the walked circle leaving `vertex` in walking direction.
    pub dart: DartId,
    pub other: CircleId,
    pub kind: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ReversalNotInvolution { dart: DartId },
    ReversalFixedPoint { dart: DartId },
    ReversalCircle { dart: DartId },
    Simplicity { vertex: VertexId, labels: usize },
    LabelPattern { vertex: VertexId },
    KindMismatch { vertex: VertexId },
    EmptyCircle { circle: CircleId },
    CircleNotClosed { circle: CircleId, reached: usize, total: usize },
    Pair { i: CircleId, j: CircleId, crossings: usize, touchings: usize },
    Euler { v: usize, e: usize, f: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ReversalNotInvolution { dart } => write!(f, "reversal: dart {dart} is not an involution point"),
            Violation::ReversalFixedPoint { dart } => write!(f, "reversal: dart {dart} is its own reversal"),
            Violation::ReversalCircle { dart } => write!(f, "reversal: dart {dart} changes circle"),
            Violation::Simplicity { vertex, labels } => {
                write!(f, "simplicity: vertex {vertex} carries {labels} circle labels")
            }
            Violation::LabelPattern { vertex } => write!(f, "pattern: vertex {vertex} is neither crossing nor touching"),
            Violation::KindMismatch { vertex } => write!(f, "kind: vertex {vertex} declared kind disagrees with its rotation"),
            Violation::EmptyCircle { circle } => write!(f, "circle: circle {circle} has no vertices"),
            Violation::CircleNotClosed { circle, reached, total } => {
                write!(f, "circle: circle {circle} walk covers {reached} of {total} darts")
            }
            Violation::Pair { i, j, crossings, touchings } => {
                write!(f, "pair: circles {i},{j} meet in {crossings} crossings and {touchings} touchings")
            }
            Violation::Euler { v, e, f: faces } => write!(f, "euler: V={v} E={e} F={faces}"),
        }
    }
}

/// Outcome of a validation pass. Empty means valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport<V> {
    pub violations: Vec<V>,
}

impl<V> Default for ValidationReport<V> {
    fn default() -> Self {
        ValidationReport { violations: Vec::new() }
    }
}

impl<V: fmt::Display> ValidationReport<V> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        self.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
    }
}

impl Arrangement {
    /// Assembles an arrangement from dense arrays, checking index ranges and
    /// that every dart sits in exactly one rotation. `kind` defaults to what the
    /// circle labels around each vertex imply.
    pub fn from_parts(
        n: usize,
        circle: Vec<CircleId>,
        reversal: Vec<DartId>,
        rotation: Vec<[DartId; 4]>,
        kind: Option<Vec<VertexKind>>,
    ) -> Result<Self> {
        let darts = circle.len();
        if reversal.len() != darts {
            return Err(Error::Malformed(format!("{} circle labels but {} reversals", darts, reversal.len())));
        }
        if darts != 4 * rotation.len() {
            return Err(Error::Malformed(format!("{} darts for {} vertices", darts, rotation.len())));
        }
        if let Some(k) = &kind {
            if k.len() != rotation.len() {
                return Err(Error::Malformed("vertex kind count differs from vertex count".into()));
            }
        }
        for (d, (&c, &r)) in circle.iter().zip(&reversal).enumerate() {
            if c >= n {
                return Err(Error::Malformed(format!("dart {d} lies on circle {c} but n={n}")));
            }
            if r >= darts {
                return Err(Error::Malformed(format!("dart {d} has reversal {r} out of range")));
            }
        }
        let mut origin = vec![usize::MAX; darts];
        let mut slot = vec![0u8; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::Malformed(format!("vertex {v} lists dart {d} out of range")));
                }
                if origin[d] != usize::MAX {
                    return Err(Error::Malformed(format!("dart {d} appears in two rotations")));
                }
                origin[d] = v;
                slot[d] = i as u8;
            }
        }
        let kind = kind.unwrap_or_else(|| {
            rotation
                .iter()
                .map(|r| {
                    if circle[r[0]] == circle[r[2]] && circle[r[1]] == circle[r[3]] && circle[r[0]] != circle[r[1]] {
                        VertexKind::Crossing
                    } else {
                        VertexKind::Touching
                    }
                })
                .collect()
        });
        Ok(Arrangement { n, circle, reversal, rotation, kind, origin, slot })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dart_count(&self) -> usize {
        self.circle.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.circle.len() / 2
    }

    pub fn circle_of(&self, d: DartId) -> CircleId {
        self.circle[d]
    }

    pub fn rev(&self, d: DartId) -> DartId {
        self.reversal[d]
    }

    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d]
    }

    pub fn rotation(&self, v: VertexId) -> [DartId; 4] {
        self.rotation[v]
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kind[v]
    }

    /// Counterclockwise successor of `d` around its origin.
    pub fn succ(&self, d: DartId) -> DartId {
        self.rotation[self.origin[d]][(self.slot[d] as usize + 1) % 4]
    }

    pub fn pred(&self, d: DartId) -> DartId {
        self.rotation[self.origin[d]][(self.slot[d] as usize + 3) % 4]
    }

    /// The other dart of the same circle at the origin of `d`.
    pub fn partner(&self, d: DartId) -> Option<DartId> {
        let c = self.circle[d];
        self.rotation[self.origin[d]].iter().copied().find(|&e| e != d && self.circle[e] == c)
    }

    /// Continues along the circle of `d` past the far endpoint of `d`.
    pub fn next_on_circle(&self, d: DartId) -> DartId {
        let r = self.reversal[d];
        self.partner(r).expect("vertex without same-circle partner")
    }

    /// The two circles meeting at `v`, smaller first.
    pub fn circles_at(&self, v: VertexId) -> (CircleId, CircleId) {
        let r = self.rotation[v];
        let a = self.circle[r[0]];
        let b = r.iter().map(|&d| self.circle[d]).find(|&c| c != a).unwrap_or(a);
        (a.min(b), a.max(b))
    }

    pub fn other_circle(&self, v: VertexId, c: CircleId) -> CircleId {
        let (a, b) = self.circles_at(v);
        if a == c {
            b
        } else {
            a
        }
    }

    pub fn touching_count(&self) -> usize {
        self.kind.iter().filter(|&&k| k == VertexKind::Touching).count()
    }

    pub fn touching_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(|&v| self.kind[v] == VertexKind::Touching)
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_index().faces
    }

    pub fn face_index(&self) -> FaceIndex {
        let darts = self.dart_count();
        let mut face_of = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = id;
                walk.push(d);
                d = self.succ(self.reversal[d]);
            }
            faces.push(Face { darts: walk });
        }
        FaceIndex { faces, face_of }
    }

    /// Number of crossing corners on a face boundary.
    pub fn face_crossings(&self, face: &Face) -> usize {
        face.darts.iter().filter(|&&d| self.kind[self.origin[d]] == VertexKind::Crossing).count()
    }

    pub fn is_lens(&self, face: &Face) -> bool {
        face.len() == 2 && self.face_crossings(face) == 2
    }

    pub fn cell_stats(&self) -> CellStats {
        let faces = self.faces();
        let mut stats = CellStats { face_count: faces.len(), ..CellStats::default() };
        for f in &faces {
            *stats.by_walk_length.entry(f.len()).or_default() += 1;
            *stats.by_crossings.entry(self.face_crossings(f)).or_default() += 1;
            if self.is_lens(f) {
                stats.digons += 1;
            }
        }
        stats.triangles = stats.p(3);
        stats.touchings = self.touching_count();
        stats.p2_combined = stats.digons + stats.touchings;
        stats
    }

    /// Breadth-first labelling of the dual graph from the face right of dart 0.
    pub fn side_vectors(&self) -> Vec<SideVector> {
        let FaceIndex { faces, face_of } = self.face_index();
        let mut bits: Vec<Option<SideBits>> = vec![None; faces.len()];
        if faces.is_empty() {
            return Vec::new();
        }
        let reference = face_of[0];
        bits[reference] = Some(SideBits::zero(self.n));
        let mut queue = VecDeque::from([reference]);
        while let Some(f) = queue.pop_front() {
            for &d in &faces[f].darts {
                let g = face_of[self.reversal[d]];
                if bits[g].is_none() {
                    let mut b = bits[f].clone().unwrap();
                    b.flip(self.circle[d]);
                    bits[g] = Some(b);
                    queue.push_back(g);
                }
            }
        }
        bits.into_iter()
            .enumerate()
            .map(|(face, b)| SideVector { face, bits: b.expect("dual graph is connected") })
            .collect()
    }

    /// Some pair of faces lying on opposite sides of every circle.
    pub fn is_cylindrical(&self) -> Option<(FaceId, FaceId)> {
        let sv = self.side_vectors();
        let mut first: HashMap<&SideBits, FaceId> = HashMap::new();
        for s in &sv {
            first.entry(&s.bits).or_insert(s.face);
        }
        sv.iter().find_map(|s| first.get(&s.bits.complement(self.n)).map(|&g| (s.face, g)))
    }

    /// Vertices along circle `c`, starting with the smallest dart on `c`.
    pub fn circle_walk(&self, c: CircleId) -> Vec<WalkEvent> {
        let Some(start) = (0..self.dart_count()).find(|&d| self.circle[d] == c) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut d = start;
        loop {
            let v = self.origin[d];
            out.push(WalkEvent { vertex: v, dart: d, other: self.other_circle(v, c), kind: self.kind[v] });
            d = self.next_on_circle(d);
            if d == start {
                break;
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport<Violation> {
        let mut report = ValidationReport::default();
        let v = &mut report.violations;
        for d in 0..self.dart_count() {
            let r = self.reversal[d];
            if r == d {
                v.push(Violation::ReversalFixedPoint { dart: d });
            } else if self.reversal[r] != d {
                v.push(Violation::ReversalNotInvolution { dart: d });
            } else if self.circle[r] != self.circle[d] {
                v.push(Violation::ReversalCircle { dart: d });
            }
        }
        for (vx, rot) in self.rotation.iter().enumerate() {
            let c: Vec<CircleId> = rot.iter().map(|&d| self.circle[d]).collect();
            let mut labels = c.clone();
            labels.sort_unstable();
            labels.dedup();
            if labels.len() != 2 {
                v.push(Violation::Simplicity { vertex: vx, labels: labels.len() });
                continue;
            }
            let crossing = c[0] == c[2] && c[1] == c[3];
            let touching = (c[0] == c[1] && c[2] == c[3]) || (c[1] == c[2] && c[3] == c[0]);
            let actual = match (crossing, touching) {
                (true, _) => VertexKind::Crossing,
                (false, true) => VertexKind::Touching,
                (false, false) => {
                    v.push(Violation::LabelPattern { vertex: vx });
                    continue;
                }
            };
            if actual != self.kind[vx] {
                v.push(Violation::KindMismatch { vertex: vx });
            }
        }
        if !v.is_empty() {
            return report;
        }
        if self.dart_count() == 0 {
            if self.n >= 2 {
                for c in 0..self.n {
                    v.push(Violation::EmptyCircle { circle: c });
                }
            }
            return report;
        }

        let mut total = vec![0usize; self.n];
        for &c in &self.circle {
            total[c] += 1;
        }
        for c in 0..self.n {
            if total[c] == 0 {
                v.push(Violation::EmptyCircle { circle: c });
                continue;
            }
            let reached = 2 * self.circle_walk(c).len();
            if reached != total[c] {
                v.push(Violation::CircleNotClosed { circle: c, reached, total: total[c] });
            }
        }

        let mut meet: BTreeMap<(CircleId, CircleId), (usize, usize)> = BTreeMap::new();
        for vx in 0..self.vertex_count() {
            let e = meet.entry(self.circles_at(vx)).or_default();
            match self.kind[vx] {
                VertexKind::Crossing => e.0 += 1,
                VertexKind::Touching => e.1 += 1,
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (x, t) = meet.get(&(i, j)).copied().unwrap_or((0, 0));
                if !((x == 2 && t == 0) || (x == 0 && t == 1)) {
                    v.push(Violation::Pair { i, j, crossings: x, touchings: t });
                }
            }
        }

        let (vs, es, fs) = (self.vertex_count(), self.edge_count(), self.face_index().faces.len());
        if vs + fs != es + 2 {
            v.push(Violation::Euler { v: vs, e: es, f: fs });
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidArrangement(report.summary()))
        }
    }
}

/// Incremental constructor: allocate vertices with four open ports, then
/// glue ports into edges.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    circle: Vec<CircleId>,
    reversal: Vec<DartId>,
    rotation: Vec<[DartId; 4]>,
}

impl Builder {
    pub fn new() -> Self {
        Builder::default()
    }

    pub fn vertex(&mut self) -> VertexId {
        let base = self.circle.len();
        self.circle.extend([usize::MAX; 4]);
        self.reversal.extend([usize::MAX; 4]);
        self.rotation.push([base, base + 1, base + 2, base + 3]);
        self.rotation.len() - 1
    }

    pub fn port(&self, v: VertexId, i: usize) -> DartId {
        self.rotation[v][i]
    }

    pub fn connect(&mut self, a: DartId, b: DartId, c: CircleId) {
        self.reversal[a] = b;
        self.reversal[b] = a;
        self.circle[a] = c;
        self.circle[b] = c;
    }

    pub fn build(self, n: usize) -> Result<Arrangement> {
        if let Some(d) = self.circle.iter().position(|&c| c == usize::MAX) {
            return Err(Error::ConstructionFailed(format!("port {d} left unconnected")));
        }
        Arrangement::from_parts(n, self.circle, self.reversal, self.rotation, None)
    }
}
