//! SVG 1.1 drawings of regions.

use std::fmt::Write;

use hexatile_core::{Mark, Region, TriCell};

const UNIT: f64 = 24.0;
const MARGIN: f64 = 12.0;

/// Screen position of the lattice point `(x, y)`: horizontal spacing is the
/// triangle height, `y` counts half units upward.
fn point(x: i32, y: i32) -> (f64, f64) {
    (f64::from(x) * UNIT * 3f64.sqrt() / 2.0, -f64::from(y) * UNIT / 2.0)
}

fn mark_color(m: Mark) -> &'static str {
    match m {
        Mark::X => "#d62728",
        Mark::Y => "#1f77b4",
        Mark::Z => "#2ca02c",
        Mark::W => "#9467bd",
    }
}

/// Draws every cell as a triangle, a shaded ellipse on the shared edge of
/// each half-weight lozenge position, and labelled marks. Output depends
/// only on the region.
pub fn render_svg(region: &Region) -> String {
    let corners: Vec<(f64, f64)> =
        region.cells().iter().flat_map(|c| c.corners()).map(|(x, y)| point(x, y)).collect();
    let (min_x, max_x, min_y, max_y) = corners.iter().fold(
        (f64::MAX, f64::MIN, f64::MAX, f64::MIN),
        |(a, b, c, d), &(x, y)| (a.min(x), b.max(x), c.min(y), d.max(y)),
    );
    let (min_x, max_x, min_y, max_y) = if corners.is_empty() { (0.0, 0.0, 0.0, 0.0) } else { (min_x, max_x, min_y, max_y) };
    let (w, h) = (max_x - min_x + 2.0 * MARGIN, max_y - min_y + 2.0 * MARGIN);
    let (ox, oy) = (MARGIN - min_x, MARGIN - min_y);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    if let Some(spec) = region.spec() {
        let _ = writeln!(s, "<title>{spec}</title>");
    }
    let marked: Vec<(TriCell, Mark)> = region.marks().iter().map(|(&m, &c)| (c, m)).collect();
    let _ = writeln!(s, r##"<g stroke="#444" stroke-width="0.8" stroke-linejoin="round">"##);
    for cell in region.cells() {
        let fill = marked.iter().find(|(c, _)| c == cell).map_or("#ffffff", |&(_, m)| mark_color(m));
        let pts: Vec<String> = cell
            .corners()
            .iter()
            .map(|&(x, y)| {
                let (px, py) = point(x, y);
                format!("{:.3},{:.3}", px + ox, py + oy)
            })
            .collect();
        let _ = writeln!(s, r#"<polygon points="{}" fill="{fill}"/>"#, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");
    if !region.half_weight_pairs().is_empty() {
        let _ = writeln!(s, r##"<g fill="#888" fill-opacity="0.6">"##);
        for (a, b) in region.half_weight_pairs() {
            let (px, py) = point(a.strip.max(b.strip), a.level);
            let _ = writeln!(
                s,
                r#"<ellipse cx="{:.3}" cy="{:.3}" rx="{:.3}" ry="{:.3}"/>"#,
                px + ox,
                py + oy,
                UNIT * 0.18,
                UNIT * 0.42
            );
        }
        let _ = writeln!(s, "</g>");
    }
    for (cell, m) in &marked {
        let c = cell.corners();
        let cx = c.iter().map(|&(x, y)| point(x, y).0).sum::<f64>() / 3.0 + ox;
        let cy = c.iter().map(|&(x, y)| point(x, y).1).sum::<f64>() / 3.0 + oy;
        let _ = writeln!(
            s,
            r##"<text x="{cx:.3}" y="{:.3}" font-family="sans-serif" font-size="{:.1}" text-anchor="middle" fill="#ffffff">{}</text>"##,
            cy + UNIT * 0.15,
            UNIT * 0.45,
            m.label()
        );
    }
    s.push_str("</svg>\n");
    s
}
