//! Minimal SVG line plots: axes, ticks, polylines, optional log-log scaling.

use std::fmt::Write;

const PANEL_W: f64 = 480.0;
const PANEL_H: f64 = 360.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 16.0;
const MARGIN_T: f64 = 32.0;
const MARGIN_B: f64 = 48.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    pub dashed: bool,
    /// Index into the fixed palette.
    pub color: usize,
}

impl Series {
    pub fn solid(label: impl Into<String>, color: usize, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
            dashed: false,
            color,
        }
    }

    pub fn dashed(label: impl Into<String>, color: usize, points: Vec<(f64, f64)>) -> Self {
        Self {
            dashed: true,
            ..Self::solid(label, color, points)
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Panel {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    pub log_log: bool,
}

/// Keeps about `max` samples: half on an even stride and half on
/// geometrically spaced indices, so fast early transients and log axes stay
/// resolved. The first and last samples are always kept.
pub fn thin<T: Copy>(values: &[T], max: usize) -> Vec<T> {
    let len = values.len();
    if len <= max || max < 4 {
        return values.to_vec();
    }
    let half = max / 2;
    let mut idx: Vec<usize> = (0..half).map(|k| k * (len - 1) / (half - 1)).collect();
    let ratio = ((len - 1) as f64).ln() / (half - 1) as f64;
    idx.extend((0..half).map(|k| ((k as f64 * ratio).exp().round() as usize).min(len - 1)));
    idx.push(0);
    idx.sort_unstable();
    idx.dedup();
    idx.into_iter().map(|i| values[i]).collect()
}

fn nice_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let frac = raw / mag;
    let nice = if frac < 1.5 {
        1.0
    } else if frac < 3.5 {
        2.0
    } else if frac < 7.5 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn tick_label(v: f64, log: bool) -> String {
    if log {
        return format!("1e{}", v.round() as i64);
    }
    let s = format!("{:.4}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn render_panel(out: &mut String, panel: &Panel, ox: f64, oy: f64) {
    let map = |p: &(f64, f64)| -> Option<(f64, f64)> {
        if panel.log_log {
            (p.0 > 0.0 && p.1 > 0.0).then(|| (p.0.log10(), p.1.log10()))
        } else {
            (p.0.is_finite() && p.1.is_finite()).then_some(*p)
        }
    };
    let data: Vec<Vec<(f64, f64)>> = panel
        .series
        .iter()
        .map(|s| s.points.iter().filter_map(map).collect())
        .collect();
    let all = data.iter().flatten();
    let (mut x0, mut x1, mut y0, mut y1) = all.fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), p| (a.min(p.0), b.max(p.0), c.min(p.1), d.max(p.1)),
    );
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    if x1 - x0 <= 0.0 {
        x1 = x0 + 1.0;
    }
    if y1 - y0 <= 0.0 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let pad = 0.04 * (y1 - y0);
    let (y0, y1) = (y0 - pad, y1 + pad);
    let (pw, ph) = (PANEL_W - MARGIN_L - MARGIN_R, PANEL_H - MARGIN_T - MARGIN_B);
    let sx = |x: f64| ox + MARGIN_L + (x - x0) / (x1 - x0) * pw;
    let sy = |y: f64| oy + MARGIN_T + (1.0 - (y - y0) / (y1 - y0)) * ph;

    let _ = writeln!(
        out,
        r##"<rect x="{:.1}" y="{:.1}" width="{pw:.1}" height="{ph:.1}" fill="none" stroke="#444"/>"##,
        ox + MARGIN_L,
        oy + MARGIN_T
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="14">{}</text>"#,
        ox + PANEL_W / 2.0,
        oy + 20.0,
        escape(&panel.title)
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="12">{}</text>"#,
        ox + MARGIN_L + pw / 2.0,
        oy + PANEL_H - 8.0,
        escape(&panel.x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="12" transform="rotate(-90 {:.1} {:.1})">{}</text>"#,
        ox + 14.0,
        oy + MARGIN_T + ph / 2.0,
        ox + 14.0,
        oy + MARGIN_T + ph / 2.0,
        escape(&panel.y_label)
    );
    for (lo, hi, horizontal) in [(x0, x1, true), (y0, y1, false)] {
        let step = if panel.log_log { nice_step(hi - lo).max(1.0).round() } else { nice_step(hi - lo) };
        let mut v = (lo / step).ceil() * step;
        while v <= hi + 1e-9 * step {
            let (x, y, anchor) = if horizontal {
                (sx(v), oy + MARGIN_T + ph + 16.0, "middle")
            } else {
                (ox + MARGIN_L - 6.0, sy(v) + 4.0, "end")
            };
            let _ = writeln!(
                out,
                r#"<text x="{x:.1}" y="{y:.1}" text-anchor="{anchor}" font-size="10">{}</text>"#,
                tick_label(v, panel.log_log)
            );
            let (ax, ay, bx, by) = if horizontal {
                (sx(v), oy + MARGIN_T + ph, sx(v), oy + MARGIN_T + ph - 5.0)
            } else {
                (ox + MARGIN_L, sy(v), ox + MARGIN_L + 5.0, sy(v))
            };
            let _ = writeln!(
                out,
                r##"<line x1="{ax:.1}" y1="{ay:.1}" x2="{bx:.1}" y2="{by:.1}" stroke="#444"/>"##
            );
            v += step;
        }
    }
    for (k, (s, pts)) in panel.series.iter().zip(&data).enumerate() {
        let color = PALETTE[s.color % PALETTE.len()];
        let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let dash = if s.dashed { r#" stroke-dasharray="6 4""# } else { "" };
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
            path.join(" ")
        );
        let ly = oy + MARGIN_T + 14.0 + 14.0 * k as f64;
        let lx = ox + PANEL_W - MARGIN_R - 110.0;
        let _ = writeln!(
            out,
            r#"<line x1="{lx:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{color}" stroke-width="1.5"{dash}/>"#,
            ly - 4.0,
            lx + 20.0,
            ly - 4.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{ly:.1}" font-size="10">{}</text>"#,
            lx + 24.0,
            escape(&s.label)
        );
    }
}

/// Lays the panels out in one row.
pub fn render(panels: &[Panel]) -> String {
    let width = PANEL_W * panels.len().max(1) as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL_H}" viewBox="0 0 {width} {PANEL_H}" font-family="sans-serif">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (k, p) in panels.iter().enumerate() {
        render_panel(&mut out, p, k as f64 * PANEL_W, 0.0);
    }
    out.push_str("</svg>\n");
    out
}
