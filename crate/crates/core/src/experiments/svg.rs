//! Minimal self-contained vector-graphics rendering for the comparison
//! figures: axes, ticks, legend, and one polyline per series. No external
//! assets, deterministic bytes for equal inputs.

use std::io::{self, Write};

use super::output::sig6;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 50.0;
const TICKS: usize = 5;
const PALETTE: [&str; 6] =
    ["#1f6fb4", "#d1495b", "#2e8b57", "#8a5bd1", "#c98a17", "#4a4a4a"];

/// One named polyline.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    name: String,
    points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(name: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Series { name: name.into(), points }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SvgError {
    #[error("every series needs at least two points")]
    InsufficientData,
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

struct Range {
    min: f64,
    max: f64,
}

impl Range {
    fn of(values: impl Iterator<Item = f64>) -> Range {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in values {
            min = min.min(v);
            max = max.max(v);
        }
        // Degenerate (constant) ranges are padded so scaling stays finite.
        if min == max {
            let pad = min.abs().max(1.0) * 0.5;
            min -= pad;
            max += pad;
        }
        Range { min, max }
    }

    fn fraction(&self, v: f64) -> f64 {
        (v - self.min) / (self.max - self.min)
    }

    fn tick(&self, i: usize) -> f64 {
        self.min + (self.max - self.min) * i as f64 / (TICKS - 1) as f64
    }
}

/// Renders a standalone SVG document with axes, tick labels, a legend, and
/// one polyline per series.
pub fn render_svg<W: Write>(
    series: &[Series],
    title: &str,
    sink: &mut W,
) -> Result<(), SvgError> {
    if series.is_empty() || series.iter().any(|s| s.points.len() < 2) {
        return Err(SvgError::InsufficientData);
    }
    let xr = Range::of(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let yr = Range::of(series.iter().flat_map(|s| s.points.iter().map(|p| p.1)));
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + xr.fraction(x) * plot_w;
    let sy = |y: f64| MARGIN_TOP + (1.0 - yr.fraction(y)) * plot_h;

    writeln!(
        sink,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"##
    )?;
    writeln!(sink, r##"<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##)?;
    writeln!(
        sink,
        r##"<text x="{:.2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="15">{}</text>"##,
        WIDTH / 2.0,
        escape_xml(title)
    )?;

    // Axes.
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    writeln!(
        sink,
        r##"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="#000000" stroke-width="1"/>"##,
        MARGIN_LEFT + plot_w
    )?;
    writeln!(
        sink,
        r##"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{MARGIN_TOP:.2}" stroke="#000000" stroke-width="1"/>"##
    )?;

    // Ticks and labels.
    for i in 0..TICKS {
        let xv = xr.tick(i);
        let px = sx(xv);
        writeln!(
            sink,
            r##"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{:.2}" stroke="#000000" stroke-width="1"/>"##,
            y0 + 4.0
        )?;
        writeln!(
            sink,
            r##"<text x="{px:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="11">{}</text>"##,
            y0 + 18.0,
            escape_xml(&sig6(xv))
        )?;
        let yv = yr.tick(i);
        let py = sy(yv);
        writeln!(
            sink,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{x0:.2}" y2="{py:.2}" stroke="#000000" stroke-width="1"/>"##,
            x0 - 4.0
        )?;
        writeln!(
            sink,
            r##"<text x="{:.2}" y="{:.2}" text-anchor="end" font-family="sans-serif" font-size="11">{}</text>"##,
            x0 - 8.0,
            py + 4.0,
            escape_xml(&sig6(yv))
        )?;
    }

    // Data polylines.
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> =
            s.points.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        writeln!(
            sink,
            r##"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"##,
            points.join(" ")
        )?;
    }

    // Legend, top-left inside the plot area.
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let ly = MARGIN_TOP + 16.0 + 18.0 * i as f64;
        writeln!(
            sink,
            r##"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="1.5"/>"##,
            MARGIN_LEFT + 10.0,
            MARGIN_LEFT + 34.0
        )?;
        writeln!(
            sink,
            r##"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"##,
            MARGIN_LEFT + 40.0,
            ly + 4.0,
            escape_xml(s.name())
        )?;
    }

    writeln!(sink, "</svg>")?;
    Ok(())
}
