//! Fixtures shared by the criterion benches.

use pseudocircles::constructions::{grunbaum_digons, prop1_family, triangle_family, wheel};
use pseudocircles::Arrangement;

/// Named arrangements of increasing size used across benches.
pub fn corpus() -> Vec<(String, Arrangement)> {
    let mut out = Vec::new();
    for n in [6, 12, 18] {
        out.push((format!("triangle-family-{n}"), triangle_family(n).expect("triangle family")));
    }
    for n in [8, 16] {
        out.push((format!("grunbaum-{n}"), grunbaum_digons(n).expect("digon family")));
    }
    out.push(("wheel-10".into(), wheel(10).expect("wheel")));
    out.push(("prop1-20".into(), prop1_family(20).expect("prop1 family")));
    out
}
