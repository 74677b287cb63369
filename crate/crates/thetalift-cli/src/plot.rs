use std::collections::BTreeSet;
use std::fmt::Write;

use thetalift::hyperbolic::{geodesic, singular_set, GeodesicKind};
use thetalift::weilrep::HarmonicMaassInput;
use thetalift::Result;

const SCALE: f64 = 200.0;

#[derive(Debug, Clone, Copy)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Window {
    fn sx(&self, x: f64) -> f64 {
        (x - self.xmin) * SCALE
    }

    fn sy(&self, y: f64) -> f64 {
        (self.ymax - y) * SCALE
    }
}

/// SVG of the walls of `f` in the window, with the number of walls drawn.
///
/// Each wall is split at its midpoint into two path elements, the first ending in an
/// arrow that shows the orientation of the geodesic.
pub fn render(f: &HarmonicMaassInput, w: Window, bound: i64) -> Result<(String, usize)> {
    let set = singular_set(f, bound)?;
    let (width, height) = ((w.xmax - w.xmin) * SCALE, w.ymax * SCALE);
    let mut body = String::new();
    let mut seen = BTreeSet::new();
    let mut drawn = 0;
    for wall in &set.walls {
        let g = geodesic(&wall.lambda)?;
        let forward = g.orientation > 0;
        let key = match g.kind {
            GeodesicKind::Vertical { x0 } => (0, (x0 * 1e9).round() as i64, 0),
            GeodesicKind::Semicircle { center, radius } => (1, (center * 1e9).round() as i64, (radius * 1e9).round() as i64),
        };
        match g.kind {
            GeodesicKind::Vertical { x0 } => {
                if x0 < w.xmin || x0 > w.xmax || !seen.insert(key) {
                    continue;
                }
                let (y0, y1) = if forward { (0.0, w.ymax) } else { (w.ymax, 0.0) };
                let (sx, ym) = (w.sx(x0), w.sy(w.ymax / 2.0));
                writeln!(body, r#"<path class="wall" d="M {sx:.3} {:.3} L {sx:.3} {ym:.3}" marker-end="url(#arrow)"/>"#, w.sy(y0)).unwrap();
                writeln!(body, r#"<path class="wall" d="M {sx:.3} {ym:.3} L {sx:.3} {:.3}"/>"#, w.sy(y1)).unwrap();
            }
            GeodesicKind::Semicircle { center, radius } => {
                let visible = center + radius >= w.xmin && center - radius <= w.xmax && radius * SCALE >= 0.5;
                if !visible || !seen.insert(key) {
                    continue;
                }
                let (start, end) = if forward { (center + radius, center - radius) } else { (center - radius, center + radius) };
                let sweep = if forward { 0 } else { 1 };
                let r = radius * SCALE;
                let (ax, ay) = (w.sx(center), w.sy(radius));
                writeln!(
                    body,
                    r#"<path class="wall" d="M {:.3} {:.3} A {r:.3} {r:.3} 0 0 {sweep} {ax:.3} {ay:.3}" marker-end="url(#arrow)"/>"#,
                    w.sx(start),
                    w.sy(0.0)
                )
                .unwrap();
                writeln!(
                    body,
                    r#"<path class="wall" d="M {ax:.3} {ay:.3} A {r:.3} {r:.3} 0 0 {sweep} {:.3} {:.3}"/>"#,
                    w.sx(end),
                    w.sy(0.0)
                )
                .unwrap();
            }
        }
        drawn += 1;
    }
    let p = &f.pair;
    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(svg, "<title>walls for N={} delta={} r={} k={}</title>", p.level, p.delta, p.r, f.k).unwrap();
    svg.push_str(concat!(
        "<defs>\n",
        r#"<marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" markerHeight="6" orient="auto">"#,
        "\n",
        r#"<path d="M 0 0 L 10 5 L 0 10 z" fill="black"/>"#,
        "\n</marker>\n",
        r#"<clipPath id="window"><rect x="0" y="0" width="100%" height="100%"/></clipPath>"#,
        "\n</defs>\n",
        "<style>.wall { fill: none; stroke: black; stroke-width: 1.2 }</style>\n",
    ));
    writeln!(svg, r#"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white" stroke="gray"/>"#).unwrap();
    writeln!(svg, r#"<line x1="0" y1="{height:.0}" x2="{width:.0}" y2="{height:.0}" stroke="gray"/>"#).unwrap();
    writeln!(svg, r#"<g clip-path="url(#window)">"#).unwrap();
    svg.push_str(&body);
    svg.push_str("</g>\n</svg>\n");
    Ok((svg, drawn))
}
