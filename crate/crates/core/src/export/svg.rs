//! Minimal standalone SVG charts. Purely visual; no numeric guarantees.

use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    Line,
    Scatter,
    Bars,
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn fit(xs: &[f64], ys: &[f64]) -> Self {
        let range = |v: &[f64]| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            match (lo.is_finite(), hi.is_finite()) {
                (true, true) if hi > lo => (lo, hi),
                (true, true) => (lo - 0.5, hi + 0.5),
                _ => (0.0, 1.0),
            }
        };
        let (x0, x1) = range(xs);
        let (y0, y1) = range(ys);
        Self { x0, x1, y0, y1 }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * MARGIN)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Render `(xs, ys)` as a single-series chart.
pub fn plot(
    kind: PlotKind,
    title: &str,
    x_label: &str,
    y_label: &str,
    xs: &[f64],
    ys: &[f64],
) -> String {
    let n = xs.len().min(ys.len());
    let frame = Frame::fit(&xs[..n], &ys[..n]);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let (l, r, t, b) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        out,
        r#"<path d="M{l} {t} L{l} {b} L{r} {b}" stroke="black" fill="none"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="12">{} [{:.4} .. {:.4}]</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0,
        escape(x_label),
        frame.x0,
        frame.x1
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{}" transform="rotate(-90 14 {})" text-anchor="middle" font-family="sans-serif" font-size="12">{} [{:.4} .. {:.4}]</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(y_label),
        frame.y0,
        frame.y1
    );

    match kind {
        PlotKind::Line => {
            let mut d = String::new();
            for i in 0..n {
                let _ = write!(
                    d,
                    "{}{:.2} {:.2} ",
                    if i == 0 { "M" } else { "L" },
                    frame.px(xs[i]),
                    frame.py(ys[i])
                );
            }
            let _ = writeln!(
                out,
                r#"<path d="{}" stroke="steelblue" fill="none" stroke-width="1"/>"#,
                d.trim_end()
            );
        }
        PlotKind::Scatter => {
            for i in 0..n {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="2" fill="steelblue"/>"#,
                    frame.px(xs[i]),
                    frame.py(ys[i])
                );
            }
        }
        PlotKind::Bars => {
            let w = ((WIDTH - 2.0 * MARGIN) / n.max(1) as f64 * 0.9).max(1.0);
            let base = frame.py(frame.y0.max(0.0).min(frame.y1));
            for i in 0..n {
                let top = frame.py(ys[i]);
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="steelblue"/>"#,
                    frame.px(xs[i]) - w / 2.0,
                    top.min(base),
                    w,
                    (base - top).abs()
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
