//! Wiring diagrams: event sequences of adjacent swaps and touches.
//!
//! Wires are labelled by their vertical position (0 = top) at the start of
//! the sequence. An event at slot `s` acts on the wires currently at
//! positions `s` and `s + 1`. Annular wirings close up cyclically; linear
//! wirings are open strips whose wires are pseudoparabolas.

use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::{Arrangement, Builder, ValidationReport};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    Cross,
    Touch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    pub slot: usize,
    pub kind: EventKind,
}

impl Event {
    pub fn cross(slot: usize) -> Self {
        Event { slot, kind: EventKind::Cross }
    }

    pub fn touch(slot: usize) -> Self {
        Event { slot, kind: EventKind::Touch }
    }

    pub fn is_cross(&self) -> bool {
        self.kind == EventKind::Cross
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Topology {
    Annular,
    /// `open_strip` admits pairs that cross exactly once.
    Linear { open_strip: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wiring {
    pub n: usize,
    pub topology: Topology,
    pub events: Vec<Event>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WiringViolation {
    SlotOutOfRange { index: usize, slot: usize },
    NotClosed { permutation: Vec<usize> },
    Pair { i: usize, j: usize, crossings: usize, touchings: usize },
}

impl fmt::Display for WiringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WiringViolation::SlotOutOfRange { index, slot } => write!(f, "slot: event {index} uses slot {slot}"),
            WiringViolation::NotClosed { permutation } => {
                write!(f, "closure: wires end in order {permutation:?}")
            }
            WiringViolation::Pair { i, j, crossings, touchings } => {
                write!(f, "pair: wires {i},{j} meet in {crossings} crossings and {touchings} touchings")
            }
        }
    }
}

// Port order around a vertex, counterclockwise.
const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

impl Wiring {
    pub fn annular(n: usize, events: Vec<Event>) -> Self {
        Wiring { n, topology: Topology::Annular, events }
    }

    pub fn linear(n: usize, events: Vec<Event>) -> Self {
        Wiring { n, topology: Topology::Linear { open_strip: false }, events }
    }

    /// Annular wiring made of crossings only.
    pub fn from_cross_slots(n: usize, slots: &[usize]) -> Self {
        Wiring::annular(n, slots.iter().map(|&s| Event::cross(s)).collect())
    }

    pub fn is_annular(&self) -> bool {
        self.topology == Topology::Annular
    }

    pub fn touch_count(&self) -> usize {
        self.events.iter().filter(|e| !e.is_cross()).count()
    }

    /// Positions of the wires after the first `upto` events.
    pub fn positions_after(&self, upto: usize) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.n).collect();
        for e in &self.events[..upto] {
            if e.is_cross() && e.slot + 1 < self.n {
                pos.swap(e.slot, e.slot + 1);
            }
        }
        pos
    }

    /// For every event, the pair of wire labels it acts on (upper, lower).
    pub fn event_wires(&self) -> Vec<(usize, usize)> {
        let mut pos: Vec<usize> = (0..self.n).collect();
        let mut out = Vec::with_capacity(self.events.len());
        for e in &self.events {
            if e.slot + 1 >= self.n {
                out.push((usize::MAX, usize::MAX));
                continue;
            }
            out.push((pos[e.slot], pos[e.slot + 1]));
            if e.is_cross() {
                pos.swap(e.slot, e.slot + 1);
            }
        }
        out
    }

    /// Crossing and touching counts per unordered wire pair.
    pub fn pair_intersections(&self) -> BTreeMap<(usize, usize), (usize, usize)> {
        let mut meet: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
        for (e, (u, l)) in self.events.iter().zip(self.event_wires()) {
            if u == usize::MAX {
                continue;
            }
            let m = meet.entry((u.min(l), u.max(l))).or_default();
            match e.kind {
                EventKind::Cross => m.0 += 1,
                EventKind::Touch => m.1 += 1,
            }
        }
        meet
    }

    pub fn validate(&self) -> ValidationReport<WiringViolation> {
        let mut report = ValidationReport::default();
        let v = &mut report.violations;
        for (index, e) in self.events.iter().enumerate() {
            if e.slot + 1 >= self.n {
                v.push(WiringViolation::SlotOutOfRange { index, slot: e.slot });
            }
        }
        if !v.is_empty() {
            return report;
        }
        if self.is_annular() {
            let pos = self.positions_after(self.events.len());
            if pos.iter().enumerate().any(|(i, &w)| i != w) {
                v.push(WiringViolation::NotClosed { permutation: pos });
            }
        }
        let open = matches!(self.topology, Topology::Linear { open_strip: true });
        let meet = self.pair_intersections();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (x, t) = meet.get(&(i, j)).copied().unwrap_or((0, 0));
                let ok = (x == 2 && t == 0) || (x == 0 && t == 1) || (open && x == 1 && t == 0);
                if !ok {
                    v.push(WiringViolation::Pair { i, j, crossings: x, touchings: t });
                }
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidWiring(report.summary()))
        }
    }

    /// Glues the strip into a cylinder and reads off the rotation system.
    ///
    /// A crossing sends the upper wire from NW to SE and the lower wire from
    /// SW to NE; at a touching both wires keep their position. Linear wirings
    /// are accepted whenever every pair meets twice or touches, since then the
    /// wires leave in their entry order.
    pub fn to_arrangement(&self) -> Result<Arrangement> {
        self.ensure_valid()?;
        if matches!(self.topology, Topology::Linear { open_strip: true }) {
            return Err(Error::InvalidWiring("open strips do not close into pseudocircles".into()));
        }
        let mut b = Builder::new();
        let mut pos: Vec<usize> = (0..self.n).collect();
        let mut first = vec![usize::MAX; self.n];
        let mut last = vec![usize::MAX; self.n];
        for e in &self.events {
            let v = b.vertex();
            let (up, lo) = (pos[e.slot], pos[e.slot + 1]);
            for (w, port) in [(up, NW), (lo, SW)] {
                let p = b.port(v, port);
                if last[w] == usize::MAX {
                    first[w] = p;
                } else {
                    b.connect(last[w], p, w);
                }
            }
            match e.kind {
                EventKind::Cross => {
                    last[lo] = b.port(v, NE);
                    last[up] = b.port(v, SE);
                    pos.swap(e.slot, e.slot + 1);
                }
                EventKind::Touch => {
                    last[up] = b.port(v, NE);
                    last[lo] = b.port(v, SE);
                }
            }
        }
        for w in 0..self.n {
            if last[w] != usize::MAX {
                b.connect(last[w], first[w], w);
            }
        }
        b.build(self.n)
    }

    /// Opens the cylinder just before event `offset`. Wire labels of the
    /// result follow the top-to-bottom order at that meridian.
    pub fn cut(&self, offset: usize) -> Result<Wiring> {
        if !self.is_annular() {
            return Err(Error::InvalidWiring("only annular wirings can be cut".into()));
        }
        if offset >= self.events.len() && !(offset == 0 && self.events.is_empty()) {
            return Err(Error::OutOfRange(format!("cut offset {offset} for {} events", self.events.len())));
        }
        Ok(Wiring::linear(self.n, self.rotated(offset).events))
    }

    pub fn rotated(&self, k: usize) -> Wiring {
        let mut events = self.events.clone();
        if !events.is_empty() {
            events.rotate_left(k % self.events.len());
        }
        Wiring { events, ..*self }
    }

    /// Top-bottom mirror image.
    pub fn reflected(&self) -> Wiring {
        let events = self.events.iter().map(|e| Event { slot: self.n - 2 - e.slot, kind: e.kind }).collect();
        Wiring { events, ..*self }
    }

    /// Same drawing traversed right to left.
    pub fn reversed(&self) -> Wiring {
        let mut events = self.events.clone();
        events.reverse();
        Wiring { events, ..*self }
    }

    /// The representative of this wiring's symmetry orbit whose event word is
    /// minimal over rotations, top-bottom reflection and reversal.
    pub fn canonical_form(&self) -> Wiring {
        let base: Vec<(usize, u8)> = self.events.iter().map(token).collect();
        let mirror = |t: &(usize, u8)| (self.n.saturating_sub(2) - t.0, t.1);
        let mut variants = vec![base.clone(), base.iter().map(mirror).collect::<Vec<_>>()];
        let rev: Vec<_> = base.iter().rev().copied().collect();
        variants.push(rev.iter().map(mirror).collect());
        variants.push(rev);
        let len = base.len();
        let mut best: Option<Vec<(usize, u8)>> = None;
        for v in &variants {
            for k in 0..len.max(1) {
                let cand: Vec<_> = v.iter().cycle().skip(k).take(len).copied().collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let events = best
            .unwrap_or_default()
            .into_iter()
            .map(|(slot, k)| Event { slot, kind: if k == 0 { EventKind::Cross } else { EventKind::Touch } })
            .collect();
        Wiring { events, ..*self }
    }

    /// Orbit key, `"<n>:"` followed by the canonical event word (`x3` for a
    /// crossing at slot 3, `t3` for a touching).
    pub fn canonical_key(&self) -> String {
        let words: String = self
            .canonical_form()
            .events
            .iter()
            .map(|e| format!("{}{}", if e.is_cross() { 'x' } else { 't' }, e.slot))
            .collect();
        format!("{}:{}", self.n, words)
    }
}

fn token(e: &Event) -> (usize, u8) {
    (e.slot, if e.is_cross() { 0 } else { 1 })
}
