//! Deterministic SVG drawings of Fano polygons.

use std::fmt::Write;

use crate::error::Result;
use crate::polygon::{FanoPolygon, Point};

const CELL: i64 = 40;
const MARGIN: i64 = 1;

/// Lattice grid, polygon outline, filled vertex dots and the origin as a hollow circle.
pub fn render_polygon_svg(p: &FanoPolygon) -> String {
    let vs = p.vertices();
    let xmin = vs.iter().map(|v| v.0).min().unwrap_or(0).min(0) - MARGIN;
    let xmax = vs.iter().map(|v| v.0).max().unwrap_or(0).max(0) + MARGIN;
    let ymin = vs.iter().map(|v| v.1).min().unwrap_or(0).min(0) - MARGIN;
    let ymax = vs.iter().map(|v| v.1).max().unwrap_or(0).max(0) + MARGIN;
    let (w, h) = ((xmax - xmin) * CELL, (ymax - ymin) * CELL);
    let px = |q: Point| ((q.0 - xmin) * CELL, (ymax - q.1) * CELL);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##);
    let _ = writeln!(s, r##"<g class="grid" stroke="#e0e0e0" stroke-width="1">"##);
    for x in xmin..=xmax {
        let (cx, _) = px((x, 0));
        let _ = writeln!(s, r#"<line x1="{cx}" y1="0" x2="{cx}" y2="{h}"/>"#);
    }
    for y in ymin..=ymax {
        let (_, cy) = px((0, y));
        let _ = writeln!(s, r#"<line x1="0" y1="{cy}" x2="{w}" y2="{cy}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g class="lattice" fill="#9e9e9e">"##);
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            if (x, y) != (0, 0) && !vs.contains(&(x, y)) {
                let (cx, cy) = px((x, y));
                let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="2"/>"#);
            }
        }
    }
    let _ = writeln!(s, "</g>");
    let pts: Vec<String> = vs.iter().map(|&v| px(v)).map(|(a, b)| format!("{},{}", a, b)).collect();
    let _ = writeln!(
        s,
        r##"<polygon class="outline" points="{}" fill="#1565c0" fill-opacity="0.12" stroke="#1565c0" stroke-width="2"/>"##,
        pts.join(" ")
    );
    for &v in vs {
        let (cx, cy) = px(v);
        let _ = writeln!(
            s,
            r##"<circle class="vertex" data-x="{}" data-y="{}" cx="{cx}" cy="{cy}" r="5" fill="#1565c0"/>"##,
            v.0, v.1
        );
    }
    let (ox, oy) = px((0, 0));
    let _ = writeln!(
        s,
        r##"<circle class="origin" cx="{ox}" cy="{oy}" r="6" fill="#ffffff" stroke="#c62828" stroke-width="2"/>"##
    );
    s.push_str("</svg>\n");
    s
}

/// Validates first; invalid input propagates the polygon error.
pub fn render_vertices_svg(vertices: &[Point]) -> Result<String> {
    Ok(render_polygon_svg(&FanoPolygon::new(vertices)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::Registry;

    fn marked(svg: &str) -> usize {
        svg.matches(r#"class="vertex""#).count()
    }

    #[test]
    fn polygon_26_has_three_vertices() {
        let reg = Registry::embedded().unwrap();
        let p = reg.polygon(26).unwrap();
        let pts: Vec<Point> = p.vertices.iter().map(|v| (v[0], v[1])).collect();
        let svg = render_vertices_svg(&pts).unwrap();
        assert_eq!(marked(&svg), 3);
        assert_eq!(svg.matches(r#"class="origin""#).count(), 1);
        assert_eq!(svg, render_vertices_svg(&pts).unwrap());
    }

    #[test]
    fn square_origin_at_centre() {
        let svg = render_vertices_svg(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]).unwrap();
        assert_eq!(marked(&svg), 4);
        // 2 + 2 margin cells each way, origin in the middle
        assert!(svg.contains(r#"width="160" height="160""#));
        assert!(svg.contains(r#"class="origin" cx="80" cy="80""#));
    }

    #[test]
    fn invalid_polygon_errors() {
        assert!(render_vertices_svg(&[(1, 0), (0, 1), (1, 1)]).is_err());
        assert!(render_vertices_svg(&[(2, 0), (0, 1), (-1, -1)]).is_err());
    }
}
