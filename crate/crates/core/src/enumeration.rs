//! Exhaustive search over annular wiring diagrams on few wires.
//!
//! Depth-first over event words with per-pair state; a word is complete once
//! every pair has crossed twice or touched once. Words are deduplicated by
//! [`Wiring::canonical_key`] and returned sorted by key.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arrangement::CellStats;
use crate::error::{Error, Result};
use crate::wiring::{Event, EventKind, Wiring};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    /// Reject wirings whose arrangement has a lens cell.
    pub digon_free: bool,
    pub allow_touch: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Permit `n = 5`, which takes minutes rather than milliseconds.
    pub allow_n5: bool,
    /// Try slots bottom-up instead of top-down. Results must not change.
    pub reverse_slots: bool,
}

/// One symmetry orbit with its cell census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub key: String,
    pub wiring: Wiring,
    pub stats: CellStats,
}

const NONE: u8 = 0;
const ONE_CROSS: u8 = 1;
const DONE_CROSS: u8 = 2;
const TOUCHED: u8 = 3;

struct Search {
    n: usize,
    allow_touch: bool,
    slots: Vec<usize>,
    pos: Vec<usize>,
    pair: Vec<u8>,
    open_pairs: usize,
    events: Vec<Event>,
    found: Vec<Wiring>,
}

impl Search {
    fn pair_index(&self, a: usize, b: usize) -> usize {
        let (a, b) = (a.min(b), a.max(b));
        a * self.n + b
    }

    fn apply(&mut self, e: Event) -> Option<(usize, u8)> {
        let p = self.pair_index(self.pos[e.slot], self.pos[e.slot + 1]);
        let old = self.pair[p];
        let new = match (e.kind, old) {
            (EventKind::Cross, NONE) => ONE_CROSS,
            (EventKind::Cross, ONE_CROSS) => DONE_CROSS,
            (EventKind::Touch, NONE) if self.allow_touch => TOUCHED,
            _ => return None,
        };
        self.pair[p] = new;
        if new != ONE_CROSS {
            self.open_pairs -= 1;
        }
        if e.kind == EventKind::Cross {
            self.pos.swap(e.slot, e.slot + 1);
        }
        self.events.push(e);
        Some((p, old))
    }

    fn undo(&mut self, e: Event, (p, old): (usize, u8)) {
        if self.pair[p] != ONE_CROSS {
            self.open_pairs += 1;
        }
        self.pair[p] = old;
        if e.kind == EventKind::Cross {
            self.pos.swap(e.slot, e.slot + 1);
        }
        self.events.pop();
    }

    fn run(&mut self) {
        if self.open_pairs == 0 {
            if !self.events.is_empty() && self.pos.iter().enumerate().all(|(i, &w)| i == w) {
                self.found.push(Wiring::annular(self.n, self.events.clone()));
            }
            return;
        }
        for i in 0..self.slots.len() {
            let s = self.slots[i];
            for kind in [EventKind::Cross, EventKind::Touch] {
                let e = Event { slot: s, kind };
                if let Some(undo) = self.apply(e) {
                    self.run();
                    self.undo(e, undo);
                }
            }
        }
    }
}

fn check_n(n: usize, options: &EnumOptions) -> Result<()> {
    match n {
        2..=4 => Ok(()),
        5 if options.allow_n5 => Ok(()),
        5 => Err(Error::OutOfRange("n=5 needs the explicit n5 opt-in".into())),
        _ => Err(Error::OutOfRange(format!("enumeration supports n in 2..=4, got {n}"))),
    }
}

/// Every valid annular wiring word (not deduplicated).
pub fn all_words(n: usize, allow_touch: bool, options: &EnumOptions) -> Result<Vec<Wiring>> {
    check_n(n, options)?;
    let mut slots: Vec<usize> = (0..n - 1).collect();
    if options.reverse_slots {
        slots.reverse();
    }
    let kinds: &[EventKind] = if allow_touch { &[EventKind::Cross, EventKind::Touch] } else { &[EventKind::Cross] };
    let firsts: Vec<Event> = slots.iter().flat_map(|&s| kinds.iter().map(move |&kind| Event { slot: s, kind })).collect();
    let words = firsts
        .par_iter()
        .map(|&first| {
            let mut search = Search {
                n,
                allow_touch,
                slots: slots.clone(),
                pos: (0..n).collect(),
                pair: vec![NONE; n * n],
                open_pairs: n * (n - 1) / 2,
                events: Vec::new(),
                found: Vec::new(),
            };
            search.apply(first).expect("first event is always legal");
            search.run();
            search.found
        })
        .flatten()
        .collect();
    Ok(words)
}

/// One representative per symmetry orbit, sorted by canonical key.
pub fn enumerate_orbits(n: usize, constraints: Constraints, options: &EnumOptions) -> Result<Vec<Orbit>> {
    let words = all_words(n, constraints.allow_touch, options)?;
    let reps: BTreeMap<String, Wiring> =
        words.par_iter().map(|w| (w.canonical_key(), w.canonical_form())).collect::<Vec<_>>().into_iter().collect();
    let orbits: Vec<Orbit> = reps
        .into_par_iter()
        .map(|(key, wiring)| {
            let stats = wiring.to_arrangement().map(|a| a.cell_stats())?;
            Ok(Orbit { key, wiring, stats })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(orbits.into_iter().filter(|o| !constraints.digon_free || o.stats.digons == 0).collect())
}

pub fn enumerate_annular(n: usize, constraints: Constraints, options: &EnumOptions) -> Result<Vec<Wiring>> {
    Ok(enumerate_orbits(n, constraints, options)?.into_iter().map(|o| o.wiring).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalStats {
    pub n: usize,
    pub orbits: usize,
    pub max_touchings: usize,
    pub max_touchings_key: String,
    pub max_p2_combined: usize,
    pub max_p2_combined_key: String,
    /// Over orbits without lenses and without touchings.
    pub min_triangles_digon_free: Option<usize>,
    pub min_triangles_key: Option<String>,
}

impl ExtremalStats {
    pub fn to_tsv(&self) -> String {
        let row = [
            ("n", self.n.to_string()),
            ("orbits", self.orbits.to_string()),
            ("max_touchings", self.max_touchings.to_string()),
            ("max_touchings_key", self.max_touchings_key.clone()),
            ("max_p2_combined", self.max_p2_combined.to_string()),
            ("max_p2_combined_key", self.max_p2_combined_key.clone()),
            ("min_triangles_digon_free", self.min_triangles_digon_free.map_or("na".into(), |v| v.to_string())),
            ("min_triangles_key", self.min_triangles_key.clone().unwrap_or_else(|| "na".into())),
        ];
        let head: Vec<&str> = row.iter().map(|r| r.0).collect();
        let vals: Vec<&str> = row.iter().map(|r| r.1.as_str()).collect();
        format!("{}\n{}\n", head.join("\t"), vals.join("\t"))
    }
}

/// Aggregates over `orbits`; ties go to the smallest key.
pub fn summarize(n: usize, orbits: &[Orbit]) -> ExtremalStats {
    let mut out = ExtremalStats {
        n,
        orbits: orbits.len(),
        max_touchings: 0,
        max_touchings_key: String::new(),
        max_p2_combined: 0,
        max_p2_combined_key: String::new(),
        min_triangles_digon_free: None,
        min_triangles_key: None,
    };
    for o in orbits {
        let st = &o.stats;
        if out.max_touchings_key.is_empty() || st.touchings > out.max_touchings {
            out.max_touchings = st.touchings;
            out.max_touchings_key = o.key.clone();
        }
        if out.max_p2_combined_key.is_empty() || st.p2_combined > out.max_p2_combined {
            out.max_p2_combined = st.p2_combined;
            out.max_p2_combined_key = o.key.clone();
        }
        if st.p2_combined == 0 && out.min_triangles_digon_free.is_none_or(|m| st.triangles < m) {
            out.min_triangles_digon_free = Some(st.triangles);
            out.min_triangles_key = Some(o.key.clone());
        }
    }
    out
}

pub fn extremal_stats(n: usize, constraints: Constraints, options: &EnumOptions) -> Result<ExtremalStats> {
    Ok(summarize(n, &enumerate_orbits(n, constraints, options)?))
}
