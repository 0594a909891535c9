//! Local rebuilding of an arrangement inside an annular neighbourhood.
//!
//! The untouched part of the map is copied; the vertices along a removed
//! circle are replaced by a small wiring diagram woven from a band of new
//! wires plus short "guest" pieces of the surviving circles that cross the
//! band. Darts of surviving circles that pointed into the removed region are
//! re-attached to the ports of the new events.

use std::collections::{BTreeSet, HashMap};

use crate::arrangement::{Arrangement, Builder, CircleId, DartId, VertexId};
use crate::error::{Error, Result};
use crate::wiring::EventKind;

const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

pub(crate) struct Rebuild<'a> {
    src: &'a Arrangement,
    b: Builder,
    /// old dart -> new dart
    map: HashMap<DartId, DartId>,
    dropped_circles: BTreeSet<CircleId>,
    /// wire at each vertical position of the band
    pub pos: Vec<CircleId>,
    last: HashMap<CircleId, DartId>,
    first: HashMap<CircleId, DartId>,
    pending: HashMap<CircleId, DartId>,
}

impl<'a> Rebuild<'a> {
    pub fn new(src: &'a Arrangement, drop_vertices: &BTreeSet<VertexId>, drop_circles: &[CircleId]) -> Self {
        let mut b = Builder::new();
        let mut map = HashMap::new();
        for v in 0..src.vertex_count() {
            if drop_vertices.contains(&v) {
                continue;
            }
            let nv = b.vertex();
            for (i, &d) in src.rotation(v).iter().enumerate() {
                map.insert(d, b.port(nv, i));
            }
        }
        Rebuild {
            src,
            b,
            map,
            dropped_circles: drop_circles.iter().copied().collect(),
            pos: Vec::new(),
            last: HashMap::new(),
            first: HashMap::new(),
            pending: HashMap::new(),
        }
    }

    /// A guest wire enters the band from above; `stub` is the old dart whose
    /// far end will be glued to the guest's first event.
    pub fn enter_top(&mut self, wire: CircleId, stub: DartId) {
        self.pos.insert(0, wire);
        self.pending.insert(wire, stub);
    }

    pub fn exit_top(&mut self, wire: CircleId, stub: DartId) -> Result<()> {
        if self.pos.first() != Some(&wire) {
            return Err(Error::ConstructionFailed(format!("wire {wire} is not on top of the band")));
        }
        self.pos.remove(0);
        self.exit(wire, stub)
    }

    pub fn exit_bottom(&mut self, wire: CircleId, stub: DartId) -> Result<()> {
        if self.pos.last() != Some(&wire) {
            return Err(Error::ConstructionFailed(format!("wire {wire} is not at the bottom of the band")));
        }
        self.pos.pop();
        self.exit(wire, stub)
    }

    fn exit(&mut self, wire: CircleId, stub: DartId) -> Result<()> {
        let last = self
            .last
            .remove(&wire)
            .ok_or_else(|| Error::ConstructionFailed(format!("wire {wire} leaves without an event")))?;
        self.map.insert(stub, last);
        Ok(())
    }

    pub fn event(&mut self, s: usize, kind: EventKind) {
        let v = self.b.vertex();
        let (up, lo) = (self.pos[s], self.pos[s + 1]);
        for (w, port) in [(up, NW), (lo, SW)] {
            let p = self.b.port(v, port);
            if let Some(stub) = self.pending.remove(&w) {
                self.map.insert(stub, p);
            } else if let Some(&l) = self.last.get(&w) {
                self.b.connect(l, p, w);
            } else {
                self.first.insert(w, p);
            }
        }
        match kind {
            EventKind::Cross => {
                self.last.insert(lo, self.b.port(v, NE));
                self.last.insert(up, self.b.port(v, SE));
                self.pos.swap(s, s + 1);
            }
            EventKind::Touch => {
                self.last.insert(up, self.b.port(v, NE));
                self.last.insert(lo, self.b.port(v, SE));
            }
        }
    }

    pub fn events(&mut self, slots: impl IntoIterator<Item = usize>, kind: EventKind) {
        for s in slots {
            self.event(s, kind);
        }
    }

    pub fn finish(mut self, n: usize) -> Result<Arrangement> {
        let src = self.src;
        for d in 0..src.dart_count() {
            let e = src.rev(d);
            if e < d || self.dropped_circles.contains(&src.circle_of(d)) {
                continue;
            }
            let (Some(&a), Some(&b)) = (self.map.get(&d), self.map.get(&e)) else {
                return Err(Error::ConstructionFailed(format!("dart {d} lost during rebuild")));
            };
            self.b.connect(a, b, src.circle_of(d));
        }
        let mut wires: Vec<_> = self.first.keys().copied().collect();
        wires.sort_unstable();
        for w in wires {
            let (f, l) = (self.first[&w], self.last[&w]);
            self.b.connect(l, f, w);
        }
        self.b.build(n)
    }
}
