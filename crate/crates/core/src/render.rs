//! Deterministic SVG drawings of wiring diagrams.
//!
//! Wires run on fixed horizontal lanes; each event occupies one column.
//! Crossings are drawn as two diagonals and touchings as two arcs meeting at
//! the midpoint of the column. Annular diagrams get tick marks on the left
//! and right edges to show that they are glued.

use std::fmt::Write as _;

use crate::error::Result;
use crate::wiring::{EventKind, Wiring};

const COL: f64 = 40.0;
const LANE: f64 = 30.0;
const MARGIN: f64 = 20.0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Shade triangles (three crossing corners) gray and lens cells dark.
    pub shade_cells: bool,
}

/// A cell between two adjacent lanes, or above the top / below the bottom lane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerCell {
    /// Lane gap index: 0 is above lane 0, `k + 1` lies between lanes `k` and `k + 1`.
    pub layer: usize,
    /// Column span `[from, to]` of the bounding events; `None` for a whole layer.
    pub span: Option<(usize, usize)>,
    pub wraps: bool,
    pub corners: usize,
    pub crossings: usize,
}

impl LayerCell {
    pub fn is_triangle(&self) -> bool {
        self.crossings == 3 && self.corners == 3
    }

    pub fn is_lens(&self) -> bool {
        self.crossings == 2 && self.corners == 2
    }
}

/// The cells of the drawing, layer by layer. The strip is read cyclically,
/// matching how `to_arrangement` closes the wires.
pub fn layer_cells(w: &Wiring) -> Vec<LayerCell> {
    let n = w.n;
    let ev = &w.events;
    let mut out = Vec::new();
    let tally = |i: usize, cell: &mut LayerCell| {
        cell.corners += 1;
        cell.crossings += usize::from(ev[i].kind == EventKind::Cross);
    };
    // gap g is split by events at slot g - 1; events at slots g - 2 and g are corners
    for g in 0..=n {
        let corner_at = |i: usize| (g >= 2 && ev[i].slot == g - 2) || ev[i].slot == g;
        let splitting: Vec<usize> = (0..ev.len()).filter(|&i| g >= 1 && ev[i].slot == g - 1).collect();
        if splitting.is_empty() {
            let mut cell = LayerCell { layer: g, span: None, wraps: true, corners: 0, crossings: 0 };
            (0..ev.len()).filter(|&i| corner_at(i)).for_each(|i| tally(i, &mut cell));
            out.push(cell);
            continue;
        }
        for (p, &from) in splitting.iter().enumerate() {
            let to = splitting[(p + 1) % splitting.len()];
            let wraps = p + 1 == splitting.len();
            let mut cell = LayerCell { layer: g, span: Some((from, to)), wraps, corners: 0, crossings: 0 };
            // a lone splitting event bounds its cell from both sides
            tally(from, &mut cell);
            tally(to, &mut cell);
            let inside: Vec<usize> =
                if wraps { (from + 1..ev.len()).chain(0..to).collect() } else { (from + 1..to).collect() };
            inside.into_iter().filter(|&i| corner_at(i)).for_each(|i| tally(i, &mut cell));
            out.push(cell);
        }
    }
    out
}

fn lane_y(k: usize) -> f64 {
    MARGIN + LANE * (k as f64 + 1.0)
}

fn col_x(i: usize) -> f64 {
    MARGIN + COL * i as f64
}

fn gap_top(g: usize) -> f64 {
    if g == 0 {
        MARGIN
    } else {
        lane_y(g - 1)
    }
}

fn gap_bottom(g: usize, n: usize) -> f64 {
    if g == n {
        lane_y(n - 1) + LANE
    } else {
        lane_y(g)
    }
}

pub fn render_svg(w: &Wiring, options: &RenderOptions) -> Result<String> {
    w.ensure_valid()?;
    let n = w.n;
    let cols = w.events.len();
    let width = 2.0 * MARGIN + COL * cols.max(1) as f64;
    let height = lane_y(n.saturating_sub(1)) + LANE + MARGIN;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#);

    if options.shade_cells && n >= 1 {
        let _ = writeln!(svg, r#"<g id="cells">"#);
        let right = col_x(cols);
        for (idx, cell) in layer_cells(w).iter().enumerate() {
            let (class, fill) = if cell.is_triangle() {
                ("triangle", "#c8c8c8")
            } else if cell.is_lens() {
                ("digon", "#505050")
            } else {
                continue;
            };
            let (top, bottom) = (gap_top(cell.layer), gap_bottom(cell.layer, n));
            let rect = |x0: f64, x1: f64| format!("M{x0:.1} {top:.1}H{x1:.1}V{bottom:.1}H{x0:.1}Z");
            let d = match cell.span {
                None => rect(MARGIN, right),
                Some((a, b)) if !cell.wraps => rect(col_x(a) + COL / 2.0, col_x(b) + COL / 2.0),
                Some((a, b)) => format!("{}{}", rect(col_x(a) + COL / 2.0, right), rect(MARGIN, col_x(b) + COL / 2.0)),
            };
            let _ = writeln!(
                svg,
                r#"<path class="cell {class}" data-cell="{idx}" data-layer="{}" data-crossings="{}" d="{d}" fill="{fill}"/>"#,
                cell.layer, cell.crossings
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    if w.is_annular() {
        let _ = writeln!(svg, r#"<g id="glue" stroke="black" stroke-width="1">"#);
        for k in 0..n {
            let y = lane_y(k);
            for x in [MARGIN, col_x(cols)] {
                let _ = writeln!(svg, r#"<line x1="{x:.1}" y1="{:.1}" x2="{x:.1}" y2="{:.1}"/>"#, y - 5.0, y + 5.0);
            }
        }
        let _ = writeln!(svg, "</g>");
    }

    // one path per wire, built column by column
    let mut pos: Vec<usize> = (0..n).collect();
    let mut paths: Vec<String> = (0..n).map(|k| format!("M{:.1} {:.1}", MARGIN, lane_y(k))).collect();
    for (i, e) in w.events.iter().enumerate() {
        let (x0, xm, x1) = (col_x(i), col_x(i) + COL / 2.0, col_x(i + 1));
        let (s, t) = (e.slot, e.slot + 1);
        for (lane, &wire) in pos.iter().enumerate() {
            let p = &mut paths[wire];
            if lane != s && lane != t {
                let _ = write!(p, "H{x1:.1}");
            }
        }
        let (ys, yt) = (lane_y(s), lane_y(t));
        let ym = (ys + yt) / 2.0;
        let q = COL / 4.0;
        match e.kind {
            EventKind::Cross => {
                let _ = write!(paths[pos[s]], "H{:.1}L{:.1} {yt:.1}H{x1:.1}", x0 + q, x1 - q);
                let _ = write!(paths[pos[t]], "H{:.1}L{:.1} {ys:.1}H{x1:.1}", x0 + q, x1 - q);
                pos.swap(s, t);
            }
            EventKind::Touch => {
                let _ = write!(paths[pos[s]], "Q{xm:.1} {ys:.1} {xm:.1} {ym:.1}Q{xm:.1} {ys:.1} {x1:.1} {ys:.1}");
                let _ = write!(paths[pos[t]], "Q{xm:.1} {yt:.1} {xm:.1} {ym:.1}Q{xm:.1} {yt:.1} {x1:.1} {yt:.1}");
            }
        }
    }
    let _ = writeln!(svg, r#"<g id="wires" fill="none" stroke="black" stroke-width="2">"#);
    for (wire, p) in paths.iter().enumerate() {
        let _ = writeln!(svg, r#"<path data-wire="{wire}" d="{p}"/>"#);
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
