//! Minimal static SVG scatter plots.
//!
//! Output is a self-contained SVG 1.1 document with one dot per sample and
//! a small text label next to it. Rendering is deterministic: same points
//! and labels, same bytes.

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 48.0;

pub fn scatter(points: &[(f64, f64)], labels: &[String]) -> String {
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if points.is_empty() {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    // Degenerate spans still need a usable scale.
    if x1 - x0 < 1e-12 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 - y0 < 1e-12 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let sx = (WIDTH - 2.0 * MARGIN) / (x1 - x0);
    let sy = (HEIGHT - 2.0 * MARGIN) / (y1 - y0);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    for (i, &(x, y)) in points.iter().enumerate() {
        let px = MARGIN + (x - x0) * sx;
        let py = HEIGHT - MARGIN - (y - y0) * sy;
        out.push_str(&format!(
            "  <circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"4\" fill=\"steelblue\"/>\n"
        ));
        if let Some(label) = labels.get(i) {
            out.push_str(&format!(
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" \
                 font-size=\"10\">{}</text>\n",
                px + 6.0,
                py - 6.0,
                escape(label)
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
