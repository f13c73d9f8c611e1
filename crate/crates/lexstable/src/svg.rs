//! Self-contained SVG charts: variability line charts (one panel per trait
//! and unit, one line per mode), grouped ratio bars and interval plots for
//! media comparisons. Coordinates are printed with fixed precision so output
//! is byte-stable.

use std::fmt::Write;

use lexstable_core::{Baseline, MediaComparisonRow, Mode, StabilityCurve};

const PANEL_W: f64 = 320.0;
const PANEL_H: f64 = 220.0;
const MARGIN: f64 = 40.0;
const COLUMNS: usize = 3;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn open(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn mode_color(mode: Mode) -> &'static str {
    match mode {
        Mode::Random => "#1f77b4",
        Mode::Contiguous => "#d62728",
    }
}

/// Line charts of mean variability against subsample size (log x axis).
pub fn variability_chart(curves: &[StabilityCurve]) -> String {
    // panels keyed by (trait, unit) in first-seen order
    let mut panels: Vec<(&str, &str, Vec<&StabilityCurve>)> = Vec::new();
    for c in curves {
        let unit = c.unit.as_str();
        match panels.iter_mut().find(|(t, u, _)| *t == c.trait_name && *u == unit) {
            Some(p) => p.2.push(c),
            None => panels.push((&c.trait_name, unit, vec![c])),
        }
    }
    let rows = panels.len().div_ceil(COLUMNS).max(1);
    let cols = panels.len().clamp(1, COLUMNS);
    let mut out = String::new();
    open(&mut out, cols as f64 * PANEL_W, rows as f64 * PANEL_H);
    for (i, (trait_name, unit, lines)) in panels.iter().enumerate() {
        let ox = (i % COLUMNS) as f64 * PANEL_W;
        let oy = (i / COLUMNS) as f64 * PANEL_H;
        let points = lines.iter().flat_map(|c| c.points.iter()).filter(|p| p.mean_variability.is_finite());
        let (mut xmin, mut xmax, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
        for p in points {
            let lx = (p.size as f64).log10();
            xmin = xmin.min(lx);
            xmax = xmax.max(lx);
            ymax = ymax.max(p.mean_variability);
        }
        if !xmin.is_finite() {
            xmin = 0.0;
            xmax = 1.0;
        }
        if xmax - xmin < 1e-9 {
            xmax = xmin + 1.0;
        }
        let ymax = if ymax > 0.0 { ymax * 1.1 } else { 1.0 };
        let (pw, ph) = (PANEL_W - 1.5 * MARGIN, PANEL_H - 2.0 * MARGIN);
        let sx = |size: usize| ox + MARGIN + ((size as f64).log10() - xmin) / (xmax - xmin) * pw;
        let sy = |v: f64| oy + MARGIN + ph - v / ymax * ph;
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-weight="bold">{} ({})</text>"#,
            ox + MARGIN + pw / 2.0,
            oy + MARGIN / 2.0,
            escape(trait_name),
            unit
        );
        let _ = writeln!(
            out,
            r#"<path d="M{:.2},{:.2} V{:.2} H{:.2}" fill="none" stroke="black"/>"#,
            ox + MARGIN,
            oy + MARGIN,
            oy + MARGIN + ph,
            ox + MARGIN + pw
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{:.1}</text>"#,
            ox + MARGIN - 4.0,
            oy + MARGIN + 4.0,
            ymax
        );
        if let Some(first) = lines.first() {
            for p in &first.points {
                let _ = writeln!(
                    out,
                    r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                    sx(p.size),
                    oy + MARGIN + ph + 14.0,
                    p.size
                );
            }
        }
        for (k, c) in lines.iter().enumerate() {
            let color = mode_color(c.mode);
            let mut d = String::new();
            for p in c.points.iter().filter(|p| p.mean_variability.is_finite()) {
                let cmd = if d.is_empty() { 'M' } else { 'L' };
                let _ = write!(d, "{cmd}{:.2},{:.2} ", sx(p.size), sy(p.mean_variability));
            }
            let _ = writeln!(
                out,
                r#"<path d="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                d.trim_end()
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" fill="{color}" text-anchor="end">{}</text>"#,
                ox + MARGIN + pw,
                oy + MARGIN + 12.0 * (k as f64 + 1.0),
                c.mode
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn normalized(row: &MediaComparisonRow, baseline: Baseline) -> Option<[(f64, f64, f64); 2]> {
    let base = match baseline {
        Baseline::A => row.mean_a,
        Baseline::B => row.mean_b,
    };
    if base == 0.0 {
        return None;
    }
    let n = |m: f64, ci: (f64, f64)| (m / base, ci.0 / base, ci.1 / base);
    Some([n(row.mean_a, row.ci95_a), n(row.mean_b, row.ci95_b)])
}

/// Grouped bars of each side's mean relative to the baseline mean, on a log
/// axis. Rows with a zero baseline mean are left out.
pub fn ratio_bars(rows: &[MediaComparisonRow], baseline: Baseline, labels: [&str; 2]) -> String {
    let data: Vec<(&str, [f64; 2])> = rows
        .iter()
        .filter_map(|r| normalized(r, baseline).map(|n| (r.name.as_str(), [n[0].0, n[1].0])))
        .collect();
    let group_w = 36.0;
    let width = 2.0 * MARGIN + group_w * data.len().max(1) as f64;
    let height = 300.0;
    let ph = height - 2.5 * MARGIN;
    let positive = data.iter().flat_map(|(_, v)| v.iter().copied()).filter(|v| *v > 0.0);
    let (lo, hi) = positive.fold((1.0f64, 1.0f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let (llo, lhi) = (lo.log10().floor(), hi.log10().ceil().max(lo.log10().floor() + 1.0));
    let sy = |v: f64| MARGIN + ph - (v.max(lo).log10() - llo) / (lhi - llo) * ph;
    let mut out = String::new();
    open(&mut out, width, height);
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="4 2"/>"#,
        MARGIN,
        sy(1.0),
        width - MARGIN,
        sy(1.0)
    );
    let colors = ["#1f77b4", "#ff7f0e"];
    for (g, (name, vals)) in data.iter().enumerate() {
        let x0 = MARGIN + g as f64 * group_w + 4.0;
        for (k, v) in vals.iter().enumerate() {
            let (top, bottom) = (sy(*v).min(sy(1.0)), sy(*v).max(sy(1.0)));
            let _ = writeln!(
                out,
                r#"<rect x="{:.2}" y="{:.2}" width="13.00" height="{:.2}" fill="{}"><title>{}: {}</title></rect>"#,
                x0 + k as f64 * 14.0,
                top,
                (bottom - top).max(0.5),
                colors[k],
                escape(labels[k]),
                v
            );
        }
        let (tx, ty) = (x0 + 14.0, MARGIN + ph + 10.0);
        let _ = writeln!(
            out,
            r#"<text x="{tx:.2}" y="{ty:.2}" transform="rotate(60 {tx:.2} {ty:.2})">{}</text>"#,
            escape(name)
        );
    }
    for (k, label) in labels.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" fill="{}">{}</text>"#,
            MARGIN + 90.0 * k as f64,
            MARGIN / 2.0,
            colors[k],
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// 95% intervals of both sides per measure, scaled so the baseline mean is 1.
pub fn interval_plot(rows: &[MediaComparisonRow], baseline: Baseline, labels: [&str; 2]) -> String {
    let data: Vec<(&str, [(f64, f64, f64); 2])> = rows
        .iter()
        .filter_map(|r| normalized(r, baseline).map(|n| (r.name.as_str(), n)))
        .collect();
    let group_w = 40.0;
    let width = 2.0 * MARGIN + group_w * data.len().max(1) as f64;
    let height = 300.0;
    let ph = height - 2.5 * MARGIN;
    let all = data.iter().flat_map(|(_, s)| s.iter().flat_map(|&(m, lo, hi)| [m, lo, hi]));
    let (lo, hi) = all.fold((1.0f64, 1.0f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let span = (hi - lo).max(1e-9);
    let sy = |v: f64| MARGIN + ph - (v - lo) / span * ph;
    let mut out = String::new();
    open(&mut out, width, height);
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="4 2"/>"#,
        MARGIN,
        sy(1.0),
        width - MARGIN,
        sy(1.0)
    );
    let colors = ["#1f77b4", "#ff7f0e"];
    for (g, (name, sides)) in data.iter().enumerate() {
        let x0 = MARGIN + g as f64 * group_w + 12.0;
        for (k, &(m, l, h)) in sides.iter().enumerate() {
            let x = x0 + k as f64 * 14.0;
            let _ = writeln!(
                out,
                r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="{}" stroke-width="3"/>"#,
                sy(l),
                sy(h),
                colors[k]
            );
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{:.2}" r="2.5" fill="black"/>"#, sy(m));
        }
        let (tx, ty) = (x0 + 7.0, MARGIN + ph + 10.0);
        let _ = writeln!(
            out,
            r#"<text x="{tx:.2}" y="{ty:.2}" transform="rotate(60 {tx:.2} {ty:.2})">{}</text>"#,
            escape(name)
        );
    }
    for (k, label) in labels.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" fill="{}">{}</text>"#,
            MARGIN + 90.0 * k as f64,
            MARGIN / 2.0,
            colors[k],
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lexstable_core::{Unit, VariabilityPoint};

    fn curve(name: &str, mode: Mode) -> StabilityCurve {
        StabilityCurve {
            trait_name: name.into(),
            mode,
            unit: Unit::Messages,
            points: [20, 200]
                .iter()
                .map(|&s| VariabilityPoint {
                    size: s,
                    n_observations: 3,
                    mean_variability: 100.0 / s as f64,
                    sd_variability: 1.0,
                    p95_empirical: 2.0,
                    p95_parametric: 2.0,
                })
                .collect(),
        }
    }

    #[test]
    fn one_panel_per_trait_one_line_per_mode() {
        let svg = variability_chart(&[
            curve("a<b", Mode::Random),
            curve("c", Mode::Random),
            curve("a<b", Mode::Contiguous),
        ]);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("stroke-width=\"2\"").count(), 3);
        assert!(svg.contains("a&lt;b (messages)"));
        assert_eq!(svg, variability_chart(&[curve("a<b", Mode::Random), curve("c", Mode::Random), curve("a<b", Mode::Contiguous)]));
    }

    #[test]
    fn comparison_charts_skip_zero_baselines() {
        let row = |name: &str, b: f64| MediaComparisonRow {
            name: name.into(),
            mean_a: 2.0,
            mean_b: b,
            ratio: None,
            cohens_d: None,
            p_value: None,
            ci95_a: (1.5, 2.5),
            ci95_b: (b - 0.1, b + 0.1),
            large_effect: false,
            significant: false,
        };
        let rows = [row("x", 1.0), row("zero", 0.0)];
        let bars = ratio_bars(&rows, Baseline::B, ["twitter", "email"]);
        assert_eq!(bars.matches("<rect x=").count(), 2);
        assert!(!bars.contains(">zero<"));
        let ci = interval_plot(&rows, Baseline::B, ["twitter", "email"]);
        assert_eq!(ci.matches("<circle").count(), 2);
    }
}
