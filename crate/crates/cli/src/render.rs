//! Deterministic SVG drawings: embedded planar hypergraphs (dots,
//! segments, translucent hulls) and one period of a planar tiling
//! coloring with a unit-length scale bar.

use std::fmt::Write;

use chromalift::tiling::PeriodicColoring;
use chromalift::{Error, Hypergraph, Result};

const CANVAS: f64 = 600.0;

pub fn hypergraph_svg(h: &Hypergraph) -> Result<String> {
    let Some(points) = h.embedding() else {
        return Err(Error::invalid("rendering requires an embedded hypergraph"));
    };
    if h.dim() != Some(2) {
        return Err(Error::invalid("rendering requires a planar embedding"));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.coords()[0]).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.coords()[1]).collect();
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let extent = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 0.1 * extent;
    let scale = CANVAS / (extent + 2.0 * margin);
    // SVG y grows downward; flip so the drawing matches the plane.
    let px = |x: f64| (x - min_x + margin) * scale;
    let py = |y: f64| (max_y - y + margin) * scale;
    let side = (extent + 2.0 * margin) * scale;

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{side:.0}\" height=\"{side:.0}\" \
         viewBox=\"0 0 {side:.2} {side:.2}\">"
    )
    .unwrap();

    // Hulls under segments under dots.
    for (idx, e) in h.edges().iter().enumerate().filter(|(_, e)| e.len() >= 3) {
        let pts: Vec<(f64, f64)> = e
            .iter()
            .map(|&v| (px(xs[v]), py(ys[v])))
            .collect();
        let hull = convex_hull(&pts);
        let path: Vec<String> = hull
            .iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect();
        let hue = (idx * 47) % 360;
        writeln!(
            svg,
            "  <polygon points=\"{}\" fill=\"hsl({hue},70%,55%)\" fill-opacity=\"0.25\" \
             stroke=\"none\"/>",
            path.join(" ")
        )
        .unwrap();
    }
    for e in h.edges().iter().filter(|e| e.len() == 2) {
        writeln!(
            svg,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" \
             stroke=\"#333\" stroke-width=\"2\"/>",
            px(xs[e[0]]),
            py(ys[e[0]]),
            px(xs[e[1]]),
            py(ys[e[1]])
        )
        .unwrap();
    }
    for v in 0..h.n() {
        writeln!(
            svg,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"#111\"/>",
            px(xs[v]),
            py(ys[v])
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn tiling_svg(pc: &PeriodicColoring) -> Result<String> {
    if pc.d != 2 {
        return Err(Error::invalid("tiling rendering is planar only"));
    }
    let m = pc.m as usize;
    let period = pc.period();
    let scale = CANVAS / period;
    let cell = pc.eps * scale;
    let bar_zone = 60.0;

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" \
         viewBox=\"0 0 {CANVAS:.2} {:.2}\">",
        CANVAS,
        CANVAS + bar_zone,
        CANVAS + bar_zone
    )
    .unwrap();
    // One period: m x m cells, each color class appears exactly once.
    for i in 0..m {
        for j in 0..m {
            let color_index = i * m + j;
            let hue = (color_index * 360) / (m * m);
            writeln!(
                svg,
                "  <rect x=\"{:.2}\" y=\"{:.2}\" width=\"{cell:.2}\" height=\"{cell:.2}\" \
                 fill=\"hsl({hue},65%,60%)\" stroke=\"#fff\" stroke-width=\"1\"/>",
                i as f64 * cell,
                CANVAS - (j + 1) as f64 * cell
            )
            .unwrap();
        }
    }
    // Unit-length scale bar below the period.
    let bar_y = CANVAS + bar_zone / 2.0;
    writeln!(
        svg,
        "  <line x1=\"0\" y1=\"{bar_y:.2}\" x2=\"{:.2}\" y2=\"{bar_y:.2}\" \
         stroke=\"#000\" stroke-width=\"3\"/>",
        scale
    )
    .unwrap();
    writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"16\" \
         font-family=\"sans-serif\">1</text>",
        scale + 8.0,
        bar_y + 5.0
    )
    .unwrap();
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

/// Andrew's monotone chain; returns hull vertices counterclockwise.
fn convex_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
