//! Deterministic SVG rendering of plabic tilings, plabic graphs, and layered
//! projections of zonotopal tilings. Black faces and vertices are shaded,
//! white ones are unshaded, vertices are labeled by their subsets. Output is
//! byte-identical across runs for fixed inputs.

use chordsep::json::{GraphDoc, TilingDoc, ZonotopalDoc};
use chordsep::plabic_graph::VertexKind;
use chordsep::plabic_tiling::{Color, TriangulatedPlabicTiling};
use chordsep::subset::Subset;
use chordsep::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Embedding {
    RegularNgon,
    MomentCurveProjection,
}

#[derive(Debug, Clone, Copy)]
pub struct RenderSpec {
    pub embedding: Embedding,
    pub labels: bool,
    pub width: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            embedding: Embedding::RegularNgon,
            labels: true,
            width: 640.0,
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

fn label_text(s: Subset) -> String {
    let elems = s.to_vec();
    if elems.is_empty() {
        return "∅".into();
    }
    let sep = if elems.iter().any(|&e| e >= 10) { "," } else { "" };
    elems
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Planar coordinates for a subset vertex at one level.
fn embed(n: u8, s: Subset, embedding: Embedding) -> (f64, f64) {
    match embedding {
        Embedding::RegularNgon => {
            // sums of unit vectors of a regular n-gon; y grows upward here
            // and is flipped when mapped to the viewport
            let mut x = 0.0;
            let mut y = 0.0;
            for i in s.elems() {
                let ang = std::f64::consts::PI / 2.0
                    + std::f64::consts::PI * (2.0 * i as f64 - 1.0) / n as f64;
                x += ang.cos();
                y += ang.sin();
            }
            (x, y)
        }
        Embedding::MomentCurveProjection => {
            let mut x = 0.0;
            let mut y = 0.0;
            for i in s.elems() {
                x += i as f64;
                y += (i as f64) * (i as f64);
            }
            (x, y)
        }
    }
}

struct Canvas {
    body: Vec<String>,
    min: (f64, f64),
    max: (f64, f64),
}

impl Canvas {
    fn new() -> Self {
        Canvas {
            body: Vec::new(),
            min: (f64::INFINITY, f64::INFINITY),
            max: (f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn see(&mut self, p: (f64, f64)) {
        self.min.0 = self.min.0.min(p.0);
        self.min.1 = self.min.1.min(p.1);
        self.max.0 = self.max.0.max(p.0);
        self.max.1 = self.max.1.max(p.1);
    }

    fn finish(self, spec: &RenderSpec) -> String {
        let pad = 0.9;
        let w = (self.max.0 - self.min.0).max(1e-9);
        let h = (self.max.1 - self.min.1).max(1e-9);
        let scale = (spec.width - 2.0 * 40.0) / w.max(h);
        let vw = w * scale + 2.0 * 40.0 + 2.0 * pad;
        let vh = h * scale + 2.0 * 40.0 + 2.0 * pad;
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"13\">\n",
            fmt(vw),
            fmt(vh)
        ));
        out.push_str(&format!(
            "<g transform=\"translate({},{}) scale({},-{}) translate({},{})\">\n",
            fmt(40.0),
            fmt(vh - 40.0),
            fmt(scale),
            fmt(scale),
            fmt(-self.min.0),
            fmt(-self.min.1)
        ));
        for line in &self.body {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str("</g>\n</svg>\n");
        out
    }
}

fn render_tiling_into(
    canvas: &mut Canvas,
    t: &TriangulatedPlabicTiling,
    spec: &RenderSpec,
    offset: (f64, f64),
) {
    let n = t.ground().n();
    let pts: Vec<(f64, f64)> = t
        .base()
        .vertices()
        .iter()
        .map(|&s| {
            let (x, y) = embed(n, s, spec.embedding);
            (x + offset.0, y + offset.1)
        })
        .collect();
    for &p in &pts {
        canvas.see(p);
    }
    // shaded faces first
    for face in t.base().faces() {
        if face.color != Color::Black {
            continue;
        }
        let path: Vec<String> = face
            .members
            .iter()
            .map(|&v| format!("{},{}", fmt(pts[v].0), fmt(pts[v].1)))
            .collect();
        canvas.body.push(format!(
            "<polygon points=\"{}\" fill=\"#000000\" fill-opacity=\"0.18\" stroke=\"none\"/>",
            path.join(" ")
        ));
    }
    for &(i, j) in t.all_edges().iter() {
        canvas.body.push(format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"0.012\"/>",
            fmt(pts[i].0),
            fmt(pts[i].1),
            fmt(pts[j].0),
            fmt(pts[j].1)
        ));
    }
    if spec.labels {
        for (v, &s) in t.base().vertices().iter().enumerate() {
            canvas.body.push(format!(
                "<g transform=\"translate({},{}) scale(0.016,-0.016)\"><text text-anchor=\"middle\" dy=\"4\" fill=\"#00339a\">{}</text></g>",
                fmt(pts[v].0),
                fmt(pts[v].1),
                label_text(s)
            ));
        }
    }
}

pub fn render_tiling(doc: &TilingDoc, spec: &RenderSpec) -> Result<String> {
    let t = if doc.diagonals.is_empty() {
        // a plain tiling renders with its faces only; reuse the triangulated
        // pipeline when diagonals are present
        None
    } else {
        Some(doc.to_triangulated()?)
    };
    let mut canvas = Canvas::new();
    match t {
        Some(tri) => render_tiling_into(&mut canvas, &tri, spec, (0.0, 0.0)),
        None => {
            let plain = doc.to_plabic()?;
            let n = plain.ground().n();
            let pts: Vec<(f64, f64)> = plain
                .vertices()
                .iter()
                .map(|&s| embed(n, s, spec.embedding))
                .collect();
            for &p in &pts {
                canvas.see(p);
            }
            for face in plain.faces() {
                if face.color != Color::Black {
                    continue;
                }
                let path: Vec<String> = face
                    .members
                    .iter()
                    .map(|&v| format!("{},{}", fmt(pts[v].0), fmt(pts[v].1)))
                    .collect();
                canvas.body.push(format!(
                    "<polygon points=\"{}\" fill=\"#000000\" fill-opacity=\"0.18\" stroke=\"none\"/>",
                    path.join(" ")
                ));
            }
            for &(i, j) in plain.edges().iter() {
                canvas.body.push(format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"0.012\"/>",
                    fmt(pts[i].0),
                    fmt(pts[i].1),
                    fmt(pts[j].0),
                    fmt(pts[j].1)
                ));
            }
            if spec.labels {
                for (v, &s) in plain.vertices().iter().enumerate() {
                    canvas.body.push(format!(
                        "<g transform=\"translate({},{}) scale(0.016,-0.016)\"><text text-anchor=\"middle\" dy=\"4\" fill=\"#00339a\">{}</text></g>",
                        fmt(pts[v].0),
                        fmt(pts[v].1),
                        label_text(s)
                    ));
                }
            }
        }
    }
    Ok(canvas.finish(spec))
}

/// Graphs carry no coordinates; boundary vertices go on a circle and the
/// interior relaxes to neighbor barycenters (a fixed number of rounds, so
/// the output is deterministic).
pub fn render_graph(doc: &GraphDoc, spec: &RenderSpec) -> Result<String> {
    let g = doc.to_graph()?;
    let n = g.n();
    let mut pos: Vec<(f64, f64)> = vec![(0.0, 0.0); g.vertex_count()];
    let mut fixed = vec![false; g.vertex_count()];
    for (v, (p, fix)) in pos.iter_mut().zip(fixed.iter_mut()).enumerate() {
        if let VertexKind::Boundary(i) = g.kind(v) {
            let ang = std::f64::consts::PI / 2.0
                + std::f64::consts::PI * (2.0 * i as f64 - 1.0) / n as f64;
            *p = (ang.cos(), ang.sin());
            *fix = true;
        }
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        let (a, b) = g.edge_endpoints(e);
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    for _ in 0..120 {
        let snapshot = pos.clone();
        for v in 0..g.vertex_count() {
            if fixed[v] || nbrs[v].is_empty() {
                continue;
            }
            let mut x = 0.0;
            let mut y = 0.0;
            for &w in &nbrs[v] {
                x += snapshot[w].0;
                y += snapshot[w].1;
            }
            pos[v] = (x / nbrs[v].len() as f64, y / nbrs[v].len() as f64);
        }
    }

    let mut canvas = Canvas::new();
    for &p in &pos {
        canvas.see(p);
    }
    for e in 0..g.edge_count() {
        let (a, b) = g.edge_endpoints(e);
        canvas.body.push(format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#00339a\" stroke-width=\"0.01\"/>",
            fmt(pos[a].0),
            fmt(pos[a].1),
            fmt(pos[b].0),
            fmt(pos[b].1)
        ));
    }
    for (v, p) in pos.iter().enumerate() {
        let (r, fill) = match g.kind(v) {
            VertexKind::Boundary(_) => (0.018, "#00339a"),
            VertexKind::Internal(Color::White) => (0.035, "#ffffff"),
            VertexKind::Internal(Color::Black) => (0.035, "#00339a"),
        };
        canvas.body.push(format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\" stroke=\"#00339a\" stroke-width=\"0.01\"/>",
            fmt(p.0),
            fmt(p.1)
        ));
        if spec.labels {
            if let VertexKind::Boundary(i) = g.kind(v) {
                let out = (p.0 * 1.12, p.1 * 1.12);
                canvas.see(out);
                canvas.body.push(format!(
                    "<g transform=\"translate({},{}) scale(0.014,-0.014)\"><text text-anchor=\"middle\" dy=\"4\">b{i}</text></g>",
                    fmt(out.0),
                    fmt(out.1)
                ));
            }
        }
    }
    Ok(canvas.finish(spec))
}

/// Layered view of a zonotopal tiling: all sections stacked bottom-up.
pub fn render_layered(doc: &ZonotopalDoc, spec: &RenderSpec) -> Result<String> {
    let z = doc.to_tiling()?;
    let n = z.ground().n();
    let mut canvas = Canvas::new();
    let step = match spec.embedding {
        Embedding::RegularNgon => n as f64 * 0.9,
        Embedding::MomentCurveProjection => (n as f64) * (n as f64) * 1.2,
    };
    for (i, section) in z.sections()?.iter().enumerate() {
        render_tiling_into(&mut canvas, section, spec, (0.0, step * i as f64));
    }
    Ok(canvas.finish(spec))
}

/// Auto-detect the document type and render it.
pub fn render_any(text: &str, spec: &RenderSpec) -> Result<String> {
    if let Ok(doc) = serde_json::from_str::<ZonotopalDoc>(text) {
        return render_layered(&doc, spec);
    }
    if let Ok(doc) = serde_json::from_str::<GraphDoc>(text) {
        return render_graph(&doc, spec);
    }
    if let Ok(doc) = serde_json::from_str::<TilingDoc>(text) {
        return render_tiling(&doc, spec);
    }
    Err(Error::InvalidDocument(
        "not a tiling, graph, or zonotopal tiling document".into(),
    ))
}
