//! Text drawings of mixed configurations.
//!
//! The ASCII form has a header line and then one line per level, from `n`
//! down to `1`, with one character per vertex `x = 0..level`:
//! the letter of the step leaving the vertex, `o` for a path vertex with no
//! outgoing step, `+` for a vertex shared by two paths and `.` otherwise.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt::Write;

use crate::mixed_config::{MixedConfiguration, Step, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    /// `shifted` slants each level by half a unit, like a triangular grid.
    Svg {
        shifted: bool,
    },
}

pub fn render(cfg: &MixedConfiguration, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(cfg),
        RenderFormat::Svg { shifted } => render_svg(cfg, shifted),
    }
}

#[derive(Clone, Copy)]
enum Cell {
    Step(Step),
    Vertex,
    Shared,
}

fn cells(cfg: &MixedConfiguration) -> BTreeMap<Vertex, Cell> {
    let mut out = BTreeMap::new();
    for path in cfg.paths() {
        let mut own: BTreeMap<Vertex, Cell> = BTreeMap::new();
        for v in path.vertices() {
            own.insert(v, Cell::Vertex);
        }
        for (v, s) in path.step_positions() {
            own.insert(v, Cell::Step(s));
        }
        for (v, c) in own {
            out.entry(v).and_modify(|e| *e = Cell::Shared).or_insert(c);
        }
    }
    out
}

pub fn render_ascii(cfg: &MixedConfiguration) -> String {
    let n = cfg.order() as i64;
    let cells = cells(cfg);
    let mut out = String::new();
    let _ = writeln!(out, "# n={n}");
    for level in (1..=n).rev() {
        for x in 0..level {
            out.push(match cells.get(&Vertex::new(x, level)) {
                Some(Cell::Step(s)) => s.letter(),
                Some(Cell::Vertex) => 'o',
                Some(Cell::Shared) => '+',
                None => '.',
            });
        }
        out.push('\n');
    }
    out
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn point(v: Vertex, n: i64, shifted: bool) -> (f64, f64) {
    let slant = if shifted {
        0.5 * (n - v.level) as f64
    } else {
        0.0
    };
    (
        MARGIN + (v.x as f64 + slant) * UNIT,
        MARGIN + (n - v.level) as f64 * UNIT,
    )
}

pub fn render_svg(cfg: &MixedConfiguration, shifted: bool) -> String {
    let n = cfg.order() as i64;
    let width = 2.0 * MARGIN + (n as f64 + if shifted { 0.5 * n as f64 } else { 0.0 }) * UNIT;
    let height = 2.0 * MARGIN + (n - 1).max(0) as f64 * UNIT;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str(
        "<style>\
.grid{fill:#bbb}.step-e{stroke:#1f77b4}.step-s{stroke:#d62728}.step-f{stroke:#2ca02c}.step-n{stroke:#9467bd}\
line{stroke-width:3}.start,.end{stroke:#000;fill:#fff}text{font:11px sans-serif}\
</style>\n",
    );
    for level in 1..=n {
        for x in 0..level {
            let (px, py) = point(Vertex::new(x, level), n, shifted);
            let _ = writeln!(out, r#"<circle class="grid" cx="{px}" cy="{py}" r="2"/>"#);
        }
    }
    for (idx, path) in cfg.paths().iter().enumerate() {
        let i = idx + 1;
        let _ = writeln!(out, r#"<g id="path-{i}">"#);
        for (v, s) in path.step_positions() {
            let (x1, y1) = point(v, n, shifted);
            let (x2, y2) = point(v.step(s), n, shifted);
            let class = match s {
                Step::E => "step-e",
                Step::S => "step-s",
                Step::F => "step-f",
                Step::N => "step-n",
            };
            let _ = writeln!(
                out,
                r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
            );
        }
        let (sx, sy) = point(path.start, n, shifted);
        let (ex, ey) = point(path.end(), n, shifted);
        let _ = writeln!(out, r#"<circle class="start" cx="{sx}" cy="{sy}" r="4"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">s{i}</text>"#,
            sx - 24.0,
            sy + 4.0
        );
        let _ = writeln!(out, r#"<circle class="end" cx="{ex}" cy="{ey}" r="4"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">e{i}</text>"#,
            ex + 6.0,
            ey - 6.0
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
