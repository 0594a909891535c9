#![allow(dead_code)]

use std::collections::BTreeSet;

use pseudocircles::constructions::{
    base_family, blossom, grunbaum_digons, grunbaum_wiring, krupp, prop1_family, touchings_per_circle,
    triangle_family, wheel,
};
use pseudocircles::enumeration::{all_words, EnumOptions};
use pseudocircles::{Arrangement, Event, EventKind, VertexKind, Wiring};

/// Grünbaum's wiring with every lens between a distinguished wire and a block
/// wire squeezed to a touching: `2n - 4` touchings, still cylindrical.
pub fn grunbaum_touch_wiring(n: usize) -> Wiring {
    let g = grunbaum_wiring(n).unwrap();
    let mut events = Vec::new();
    let mut i = 0;
    while i < g.events.len() {
        if i + 1 < g.events.len() && g.events[i].slot == 1 && g.events[i + 1].slot == 1 {
            events.push(Event::touch(1));
            i += 2;
        } else {
            events.push(g.events[i]);
            i += 1;
        }
    }
    Wiring::annular(n, events)
}

/// Every wiring-built instance used by the suites, with a name.
pub fn wiring_corpus() -> Vec<(String, Wiring)> {
    let mut out = vec![("full-twist".to_string(), Wiring::from_cross_slots(3, &[0, 1, 0, 1, 0, 1]))];
    for n in 4..=12 {
        out.push((format!("grunbaum-{n}"), grunbaum_wiring(n).unwrap()));
        out.push((format!("grunbaum-touch-{n}"), grunbaum_touch_wiring(n)));
    }
    for m in 6..=8 {
        out.push((format!("base-{m}"), pseudocircles::constructions::base_wiring(m).unwrap()));
    }
    out
}

/// Families and their blossoms, built from rotation systems.
pub fn family_corpus() -> Vec<(String, Arrangement)> {
    let mut out = vec![("krupp".to_string(), krupp())];
    for n in 4..=12 {
        out.push((format!("grunbaum-{n}"), grunbaum_digons(n).unwrap()));
    }
    for n in [6, 8, 10, 12] {
        let w = wheel(n).unwrap();
        out.push((format!("wheel-{n}-hub-blossom"), blossom(&w, 0).unwrap()));
        out.push((format!("wheel-{n}-rim-blossom"), blossom(&w, 1).unwrap()));
        out.push((format!("wheel-{n}"), w));
    }
    for n in 6..=18 {
        out.push((format!("triangle-family-{n}"), triangle_family(n).unwrap()));
    }
    for m in 6..=8 {
        out.push((format!("base-{m}"), base_family(m).unwrap()));
    }
    for n in [11, 14, 15, 17, 18, 19, 20] {
        out.push((format!("prop1-{n}"), prop1_family(n).unwrap()));
    }
    for (name, w) in wiring_corpus() {
        out.push((format!("wiring-{name}"), w.to_arrangement().unwrap()));
    }
    out
}

pub fn enumerated_words(max_n: usize) -> Vec<Wiring> {
    (2..=max_n).flat_map(|n| all_words(n, true, &EnumOptions::default()).unwrap()).collect()
}

/// First circle with exactly three touchings.
pub fn three_touching_circle(a: &Arrangement) -> Option<usize> {
    let counts = touchings_per_circle(a);
    (0..a.n()).find(|&c| counts[c] == 3)
}

/// Backtracking search for a valid annular wiring, with the move order at
/// depth `k` rotated by `choices[k]`. Returns `None` if the node budget runs
/// out first.
pub fn guided_wiring(n: usize, allow_touch: bool, choices: &[u32]) -> Option<Wiring> {
    struct State<'a> {
        n: usize,
        allow_touch: bool,
        choices: &'a [u32],
        pos: Vec<usize>,
        pair: Vec<u8>,
        open: usize,
        events: Vec<Event>,
        budget: usize,
    }
    fn go(s: &mut State) -> bool {
        if s.open == 0 {
            return !s.events.is_empty() && s.pos.iter().enumerate().all(|(i, &w)| i == w);
        }
        if s.budget == 0 {
            return false;
        }
        s.budget -= 1;
        let mut moves = Vec::new();
        for slot in 0..s.n - 1 {
            let (a, b) = (s.pos[slot], s.pos[slot + 1]);
            let p = a.min(b) * s.n + a.max(b);
            match s.pair[p] {
                0 => {
                    moves.push((slot, EventKind::Cross, p));
                    if s.allow_touch {
                        moves.push((slot, EventKind::Touch, p));
                    }
                }
                1 => moves.push((slot, EventKind::Cross, p)),
                _ => {}
            }
        }
        if moves.is_empty() {
            return false;
        }
        let r = s.choices.get(s.events.len()).copied().unwrap_or(0) as usize % moves.len();
        moves.rotate_left(r);
        for (slot, kind, p) in moves {
            let old = s.pair[p];
            s.pair[p] = match kind {
                EventKind::Cross => old + 1,
                EventKind::Touch => 3,
            };
            if s.pair[p] != 1 {
                s.open -= 1;
            }
            if kind == EventKind::Cross {
                s.pos.swap(slot, slot + 1);
            }
            s.events.push(Event { slot, kind });
            if go(s) {
                return true;
            }
            s.events.pop();
            if kind == EventKind::Cross {
                s.pos.swap(slot, slot + 1);
            }
            if s.pair[p] != 1 {
                s.open += 1;
            }
            s.pair[p] = old;
        }
        false
    }
    let mut s = State {
        n,
        allow_touch,
        choices,
        pos: (0..n).collect(),
        pair: vec![0; n * n],
        open: n * (n - 1) / 2,
        events: Vec::new(),
        budget: 200_000,
    };
    go(&mut s).then(|| Wiring::annular(n, s.events))
}

/// Face census traced from the raw rotation arrays: for every unvisited
/// dart, follow "reverse, then next counterclockwise" by scanning the
/// rotation lists. Returns sorted `(walk length, crossing corners)` pairs.
pub fn traced_faces(a: &Arrangement) -> Vec<(usize, usize)> {
    let darts = a.dart_count();
    let mut home = vec![(usize::MAX, usize::MAX); darts];
    for v in 0..a.vertex_count() {
        for (i, &d) in a.rotation(v).iter().enumerate() {
            assert_eq!(home[d].0, usize::MAX, "dart {d} listed twice");
            home[d] = (v, i);
        }
    }
    let mut seen = vec![false; darts];
    let mut out = Vec::new();
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        let (mut len, mut crossings) = (0, 0);
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            let (v, _) = home[d];
            len += 1;
            crossings += usize::from(a.kind(v) == VertexKind::Crossing);
            let r = a.rev(d);
            let (w, i) = home[r];
            d = a.rotation(w)[(i + 1) % 4];
        }
        assert_eq!(d, start, "face walk did not close");
        out.push((len, crossings));
    }
    out.sort_unstable();
    out
}

pub fn library_faces(a: &Arrangement) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = a.faces().iter().map(|f| (f.len(), a.face_crossings(f))).collect();
    out.sort_unstable();
    out
}

/// Side bits by depth-first search over the dual, as a cross-check of the
/// breadth-first labelling.
pub fn dfs_side_bits(a: &Arrangement) -> Vec<BTreeSet<usize>> {
    let index = a.face_index();
    let mut bits: Vec<Option<BTreeSet<usize>>> = vec![None; index.faces.len()];
    if bits.is_empty() {
        return Vec::new();
    }
    let root = index.face_of[0];
    bits[root] = Some(BTreeSet::new());
    let mut stack = vec![root];
    while let Some(f) = stack.pop() {
        for &d in index.faces[f].darts.iter().rev() {
            let g = index.face_of[a.rev(d)];
            if bits[g].is_none() {
                let mut b = bits[f].clone().unwrap();
                let c = a.circle_of(d);
                if !b.remove(&c) {
                    b.insert(c);
                }
                bits[g] = Some(b);
                stack.push(g);
            }
        }
    }
    bits.into_iter().map(Option::unwrap).collect()
}

/// The Euler and degree identities that every valid arrangement satisfies.
pub fn euler_identities(a: &Arrangement) -> Result<(), String> {
    let (v, e) = (a.vertex_count(), a.edge_count());
    let f = a.faces().len();
    let t = a.touching_count();
    let n = a.n();
    let walk: usize = a.faces().iter().map(|x| x.len()).sum();
    let checks = [
        (e == 2 * v, "E = 2V"),
        (f == v + 2, "F = V + 2"),
        (v + t == n * (n - 1), "V = n(n-1) - t"),
        (walk == 4 * v, "sum of walk lengths = 4V"),
    ];
    match checks.iter().find(|c| !c.0) {
        Some((_, name)) => Err(format!("{name} fails: n={n} V={v} E={e} F={f} t={t} walk={walk}")),
        None => Ok(()),
    }
}

pub fn ceil_4n_3(n: usize) -> usize {
    (4 * n).div_ceil(3)
}
