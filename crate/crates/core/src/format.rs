//! Line-oriented `.arr` and `.wir` text formats.
//!
//! ```text
//! arrangement <n_circles> <n_vertices> <n_darts>
//! vertex <id> <cross|touch> <d0> <d1> <d2> <d3>
//! dart <id> <circle> <reversal_dart>
//! ```
//!
//! ```text
//! wiring <n> <annular|linear>
//! cross <slot>
//! touch <slot>
//! ```
//!
//! Blank lines and `#` comments are ignored in both.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::arrangement::{Arrangement, VertexKind};
use crate::error::{Error, Result};
use crate::wiring::{Event, Topology, Wiring};

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn malformed(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("line {line}: {msg}"))
}

fn num(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| malformed(line, format!("expected a non-negative integer, got '{field}'")))
}

fn expect_len(line: usize, fields: &[&str], len: usize) -> Result<()> {
    if fields.len() == len {
        Ok(())
    } else {
        Err(malformed(line, format!("'{}' record needs {} fields, got {}", fields[0], len, fields.len())))
    }
}

/// Parses an arrangement. Ids may appear in any order and need not start at
/// zero; they are renumbered densely in increasing order.
pub fn parse_arr(text: &str) -> Result<Arrangement> {
    let mut it = records(text);
    let (line, head) = it.next().ok_or_else(|| malformed(0, "empty input"))?;
    if head[0] != "arrangement" {
        return Err(malformed(line, "expected 'arrangement' header"));
    }
    expect_len(line, &head, 4)?;
    let (n, nv, nd) = (num(line, head[1])?, num(line, head[2])?, num(line, head[3])?);

    let mut vertices: BTreeMap<usize, (usize, VertexKind, [usize; 4])> = BTreeMap::new();
    let mut darts: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for (line, f) in it {
        match f[0] {
            "vertex" => {
                expect_len(line, &f, 7)?;
                let id = num(line, f[1])?;
                let kind = match f[2] {
                    "cross" => VertexKind::Crossing,
                    "touch" => VertexKind::Touching,
                    other => return Err(malformed(line, format!("unknown vertex kind '{other}'"))),
                };
                let rot = [num(line, f[3])?, num(line, f[4])?, num(line, f[5])?, num(line, f[6])?];
                if vertices.insert(id, (line, kind, rot)).is_some() {
                    return Err(malformed(line, format!("duplicate vertex {id}")));
                }
            }
            "dart" => {
                expect_len(line, &f, 4)?;
                let id = num(line, f[1])?;
                if darts.insert(id, (line, num(line, f[2])?, num(line, f[3])?)).is_some() {
                    return Err(malformed(line, format!("duplicate dart {id}")));
                }
            }
            other => return Err(malformed(line, format!("unknown record '{other}'"))),
        }
    }
    if vertices.len() != nv || darts.len() != nd {
        return Err(malformed(
            line,
            format!("header promises {nv} vertices and {nd} darts, found {} and {}", vertices.len(), darts.len()),
        ));
    }
    if nd != 4 * nv {
        return Err(malformed(line, format!("{nd} darts cannot fill {nv} degree-4 vertices")));
    }

    let dense: BTreeMap<usize, usize> = darts.keys().enumerate().map(|(i, &id)| (id, i)).collect();
    let lookup = |line: usize, id: usize| -> Result<usize> {
        dense.get(&id).copied().ok_or_else(|| malformed(line, format!("unknown dart {id}")))
    };
    let mut circle = Vec::with_capacity(nd);
    let mut reversal = Vec::with_capacity(nd);
    for (&id, &(line, c, r)) in &darts {
        if c >= n {
            return Err(malformed(line, format!("dart {id} on circle {c} but only {n} circles")));
        }
        circle.push(c);
        reversal.push(lookup(line, r)?);
    }
    for (i, &r) in reversal.iter().enumerate() {
        if reversal[r] != i || r == i {
            let id = darts.keys().nth(i).copied().unwrap_or(i);
            let line = darts[&id].0;
            return Err(malformed(line, format!("reversal of dart {id} is not an involution")));
        }
    }
    let mut rotation = Vec::with_capacity(nv);
    let mut kinds = Vec::with_capacity(nv);
    for &(line, kind, rot) in vertices.values() {
        let mut r = [0; 4];
        for (slot, &d) in r.iter_mut().zip(&rot) {
            *slot = lookup(line, d)?;
        }
        rotation.push(r);
        kinds.push(kind);
    }
    Arrangement::from_parts(n, circle, reversal, rotation, Some(kinds))
}

pub fn write_arr(a: &Arrangement) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "arrangement {} {} {}", a.n(), a.vertex_count(), a.dart_count());
    for v in 0..a.vertex_count() {
        let r = a.rotation(v);
        let _ = writeln!(out, "vertex {} {} {} {} {} {}", v, a.kind(v), r[0], r[1], r[2], r[3]);
    }
    for d in 0..a.dart_count() {
        let _ = writeln!(out, "dart {} {} {}", d, a.circle_of(d), a.rev(d));
    }
    out
}

pub fn parse_wir(text: &str) -> Result<Wiring> {
    let mut it = records(text);
    let (line, head) = it.next().ok_or_else(|| malformed(0, "empty input"))?;
    if head[0] != "wiring" {
        return Err(malformed(line, "expected 'wiring' header"));
    }
    expect_len(line, &head, 3)?;
    let n = num(line, head[1])?;
    let topology = match head[2] {
        "annular" => Topology::Annular,
        "linear" => Topology::Linear { open_strip: false },
        other => return Err(malformed(line, format!("unknown wiring kind '{other}'"))),
    };
    let mut events = Vec::new();
    for (line, f) in it {
        expect_len(line, &f, 2)?;
        let slot = num(line, f[1])?;
        if slot + 1 >= n {
            return Err(malformed(line, format!("slot {slot} needs at least {} wires", slot + 2)));
        }
        events.push(match f[0] {
            "cross" => Event::cross(slot),
            "touch" => Event::touch(slot),
            other => return Err(malformed(line, format!("unknown event '{other}'"))),
        });
    }
    Ok(Wiring { n, topology, events })
}

pub fn write_wir(w: &Wiring) -> String {
    let mut out = String::new();
    let kind = if w.is_annular() { "annular" } else { "linear" };
    let _ = writeln!(out, "wiring {} {}", w.n, kind);
    for e in &w.events {
        let _ = writeln!(out, "{} {}", if e.is_cross() { "cross" } else { "touch" }, e.slot);
    }
    out
}
