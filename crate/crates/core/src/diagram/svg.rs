use std::fmt::Write;

use super::arc::build_arc_diagram;
use crate::basket::BasketCode;

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
];

/// The disk as a rectangle with each band drawn as a half annulus. Bands
/// are painted from the lowest page up, so a band covers every band with a
/// smaller label.
pub fn draw_svg(code: &BasketCode) -> String {
    let d = build_arc_diagram(code);
    let (left, right) = d.foot_sides();
    let unit = 0.04;
    let x = |v: i64| 20.0 + v as f64 * unit;
    let width = if code.is_empty() {
        120.0
    } else {
        x(right[right.len() - 1]) + 20.0
    };
    let span = right.last().map_or(0, |&r| r - left[0]) as f64 * unit;
    let base = 20.0 + span / 2.0;
    let height = base + 60.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="10" y="{base:.1}" width="{:.1}" height="40" fill="#dddddd" stroke="#333333"/>"##,
        width - 20.0
    );
    for (k, &[p, q]) in code.feet().iter().enumerate() {
        let (ol, or) = (x(left[p]), x(right[q]));
        let (il, ir) = (x(right[p]), x(left[q]));
        let (ro, ri) = ((or - ol) / 2.0, (ir - il) / 2.0);
        let colour = PALETTE[k % PALETTE.len()];
        let _ = writeln!(
            out,
            r##"<path d="M {ol:.1} {base:.1} A {ro:.1} {ro:.1} 0 0 1 {or:.1} {base:.1} L {ir:.1} {base:.1} A {ri:.1} {ri:.1} 0 0 0 {il:.1} {base:.1} Z" fill="{colour}" fill-opacity="0.9" stroke="#222222"/>"##
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{}</text>"#,
            (ol + or) / 2.0,
            base - ro - 3.0,
            k + 1
        );
    }
    out.push_str("</svg>\n");
    out
}
