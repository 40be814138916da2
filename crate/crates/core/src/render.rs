//! Text and SVG pictures of wiring diagrams.

use std::fmt::Write;

use crate::pipedream::{trace, wiring_size};
use crate::symgroup::Diagram;

const TILE: usize = 40;
const MARGIN: usize = 30;

fn size(d: &Diagram) -> usize {
    wiring_size(d).max(1)
}

/// Tile characters by row, `'+'` for a crossing and `'.'` for a bump, out to the elbow antidiagonal.
pub fn grid(d: &Diagram) -> Vec<Vec<char>> {
    let m = size(d);
    (1..=m).map(|r| (1..=m + 1 - r).map(|c| if d.contains(r, c) { '+' } else { '.' }).collect()).collect()
}

pub fn ascii(d: &Diagram) -> String {
    let m = size(d);
    let w = m.to_string().len();
    let wiring = trace(d);
    let mut out = String::new();
    write!(out, "{:w$} ", "").unwrap();
    for c in 1..=m {
        write!(out, " {c:>w$}").unwrap();
    }
    out.push('\n');
    for (r, row) in grid(d).into_iter().enumerate() {
        write!(out, "{:>w$} ", r + 1).unwrap();
        for ch in row {
            write!(out, " {ch:>w$}").unwrap();
        }
        out.push('\n');
    }
    for i in 1..=m {
        writeln!(out, "{i} -> {}", wiring.perm.apply(i)).unwrap();
    }
    if !wiring.reduced {
        out.push_str("not reduced\n");
    }
    out
}

pub fn svg(d: &Diagram) -> String {
    let m = size(d);
    let side = 2 * MARGIN + TILE * m;
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#)
        .unwrap();
    writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#).unwrap();
    let h = TILE / 2;
    for r in 1..=m {
        for c in 1..=m + 1 - r {
            let (x, y) = (MARGIN + TILE * (c - 1), MARGIN + TILE * (r - 1));
            writeln!(out, r#"<rect x="{x}" y="{y}" width="{TILE}" height="{TILE}" stroke="lightgray" stroke-width="1"/>"#)
                .unwrap();
            if d.contains(r, c) {
                writeln!(out, r#"<line x1="{x}" y1="{}" x2="{}" y2="{}"/>"#, y + h, x + TILE, y + h).unwrap();
                writeln!(out, r#"<line x1="{}" y1="{y}" x2="{}" y2="{}"/>"#, x + h, x + h, y + TILE).unwrap();
            } else {
                writeln!(out, r#"<path d="M {x} {} A {h} {h} 0 0 0 {} {y}"/>"#, y + h, x + h).unwrap();
                if r + c <= m {
                    writeln!(out, r#"<path d="M {} {} A {h} {h} 0 0 1 {} {}"/>"#, x + h, y + TILE, x + TILE, y + h)
                        .unwrap();
                }
            }
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g font-family="monospace" font-size="14" text-anchor="middle">"#).unwrap();
    for i in 1..=m {
        let mid = MARGIN + TILE * (i - 1) + h;
        writeln!(out, r#"<text x="{}" y="{}">{i}</text>"#, MARGIN / 2, mid + 5).unwrap();
        writeln!(out, r#"<text x="{mid}" y="{}">{i}</text>"#, MARGIN - 8).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    out
}
