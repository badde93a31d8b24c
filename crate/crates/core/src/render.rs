//! SVG, CSV and TikZ output for diagram grids. All three are byte-stable:
//! coordinates go through exact 6-digit decimal rounding.

use crate::geometry::{lambda_at, DiagramGrid};
use crate::kwmf::AltSet;
use crate::rootsys::{algebra_data, weyl_group};
use crate::surd::{format_scaled, Surd};
use crate::Q;
use std::fmt::Write;

const DIGITS: u32 = 6;
/// SVG user units per root-basis unit.
const SVG_SCALE: i64 = 16;
const MARGIN: i128 = 24_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marker {
    Circle,
    Square,
    Diamond,
    Triangle,
}

impl Marker {
    const ALL: [Marker; 4] = [Marker::Circle, Marker::Square, Marker::Diamond, Marker::Triangle];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Palette {
    pub colors: Vec<String>,
}

impl Palette {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(colors: I) -> Self {
        let colors: Vec<String> = colors.into_iter().map(Into::into).collect();
        assert!(!colors.is_empty(), "palette needs at least one color");
        Palette { colors }
    }

    /// Color and marker for key index `i`; past the end of the list colors
    /// repeat with the next marker shape.
    pub fn style(&self, i: usize) -> (&str, Marker) {
        let n = self.colors.len();
        (&self.colors[i % n], Marker::ALL[(i / n) % Marker::ALL.len()])
    }
}

impl Default for Palette {
    fn default() -> Self {
        Palette::new([
            "#E6194B", "#3CB44B", "#FFE119", "#4363D8", "#F58231", "#911EB4", "#46F0F0", "#F032E6",
            "#BCF60C", "#FABEBE", "#008080", "#E6BEFF", "#9A6324", "#FFFAC8", "#800000", "#AAFFC3",
            "#808000", "#FFD8B1", "#000075", "#808080", "#2F4F4F", "#B8860B", "#7B68EE", "#000000",
        ])
    }
}

fn num(v: i128) -> String {
    format_scaled(v, DIGITS)
}

/// Exact plane position of lattice point `c`, scaled, as rounded (x, y).
fn position(grid: &DiagramGrid, c: (i64, i64), scale: i64) -> (i128, i128) {
    let [x, y] = algebra_data(grid.algebra).embedding.place(&lambda_at(grid.algebra, c));
    let s = Q::from_integer(scale);
    (round(x * s), round(y * s))
}

fn round(s: Surd) -> i128 {
    s.round_scaled(DIGITS)
}

fn axis_ends(grid: &DiagramGrid) -> [((i64, i64), (i64, i64)); 2] {
    let w = grid.window;
    [((w.c1_min, 0), (w.c1_max, 0)), ((0, w.c2_min), (0, w.c2_max))]
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn legend_text(grid: &DiagramGrid, set: &AltSet) -> String {
    set.describe(weyl_group(grid.algebra), "1")
}

fn svg_marker(out: &mut String, class: &str, marker: Marker, x: i128, y: i128, color: &str, extra: &str) {
    let r = 4_000_000i128;
    match marker {
        Marker::Circle => writeln!(
            out,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" fill="{color}"{extra}/>"#,
            num(x),
            num(y),
            num(r)
        ),
        Marker::Square => writeln!(
            out,
            r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}" fill="{color}"{extra}/>"#,
            num(x - r),
            num(y - r),
            num(2 * r),
            num(2 * r)
        ),
        Marker::Diamond => writeln!(
            out,
            r#"<polygon class="{class}" points="{},{} {},{} {},{} {},{}" fill="{color}"{extra}/>"#,
            num(x),
            num(y - r),
            num(x + r),
            num(y),
            num(x),
            num(y + r),
            num(x - r),
            num(y)
        ),
        Marker::Triangle => writeln!(
            out,
            r#"<polygon class="{class}" points="{},{} {},{} {},{}" fill="{color}"{extra}/>"#,
            num(x),
            num(y - r),
            num(x + r),
            num(y + r),
            num(x - r),
            num(y + r)
        ),
    }
    .unwrap();
}

pub fn emit_svg(grid: &DiagramGrid, palette: &Palette) -> Vec<u8> {
    let w = grid.window;
    let corners = [(w.c1_min, w.c2_min), (w.c1_min, w.c2_max), (w.c1_max, w.c2_min), (w.c1_max, w.c2_max)];
    let pts: Vec<(i128, i128)> = corners
        .iter()
        .map(|&c| {
            let (x, y) = position(grid, c, SVG_SCALE);
            (x, -y)
        })
        .collect();
    let min_x = pts.iter().map(|p| p.0).min().unwrap() - MARGIN;
    let max_x = pts.iter().map(|p| p.0).max().unwrap() + MARGIN;
    let min_y = pts.iter().map(|p| p.1).min().unwrap() - MARGIN;
    let plot_max_y = pts.iter().map(|p| p.1).max().unwrap() + MARGIN;
    let line = 18_000_000i128;
    let legend_x = max_x;
    let legend_w = 220_000_000i128;
    let legend_bottom = min_y + MARGIN + line * (grid.key.len() as i128 + 1);
    let max_y = plot_max_y.max(legend_bottom);
    let (vw, vh) = (max_x + legend_w - min_x, max_y - min_y);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(vw),
        num(vh),
        num(min_x),
        num(min_y),
        num(vw),
        num(vh)
    )
    .unwrap();
    writeln!(out, "<title>{} alternation diagram, mu = {}</title>", grid.algebra, escape(&grid.mu.to_string())).unwrap();
    out.push_str("<rect x=\"");
    writeln!(out, "{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#FFFFFF\"/>", num(min_x), num(min_y), num(vw), num(vh))
        .unwrap();

    out.push_str("<g class=\"axes\" stroke=\"#999999\" stroke-width=\"1\">\n");
    for (a, b) in axis_ends(grid) {
        let (x1, y1) = position(grid, a, SVG_SCALE);
        let (x2, y2) = position(grid, b, SVG_SCALE);
        writeln!(
            out,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(x1),
            num(-y1),
            num(x2),
            num(-y2)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"cells\">\n");
    for (c, set) in grid.iter() {
        let Some(k) = grid.color_index(&set) else { continue };
        let (color, marker) = palette.style(k);
        let (x, y) = position(grid, c, SVG_SCALE);
        let extra = format!(r#" data-c1="{}" data-c2="{}""#, c.0, c.1);
        svg_marker(&mut out, "cell", marker, x, -y, color, &extra);
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"legend\" font-family=\"monospace\" font-size=\"12\">\n");
    for (k, set) in grid.key.iter().enumerate() {
        let (color, marker) = palette.style(k);
        let y = min_y + MARGIN + line * k as i128;
        svg_marker(&mut out, "swatch", marker, legend_x + 8_000_000, y, color, "");
        writeln!(
            out,
            r#"<text x="{}" y="{}" dominant-baseline="middle">{}</text>"#,
            num(legend_x + 18_000_000),
            num(y),
            escape(&legend_text(grid, set))
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out.into_bytes()
}

pub fn emit_csv(grid: &DiagramGrid) -> Vec<u8> {
    let group = weyl_group(grid.algebra);
    let mut out = String::from("c1,c2,set\n");
    for ((c1, c2), set) in grid.iter() {
        writeln!(out, "{c1},{c2},{}", set.dotted(group)).unwrap();
    }
    out.into_bytes()
}

/// LaTeX-safe set label such as `\{1, s_2 s_1\}`.
fn tikz_label(grid: &DiagramGrid, set: &AltSet) -> String {
    let group = weyl_group(grid.algebra);
    let names: Vec<String> = set
        .indices()
        .map(|i| {
            let e = &group[i];
            if e.is_identity() {
                "1".to_string()
            } else {
                e.word.iter().map(|g| format!("s_{g}")).collect::<Vec<_>>().join("")
            }
        })
        .collect();
    format!("$\\{{{}\\}}$", names.join(", "))
}

fn tikz_marker(out: &mut String, marker: Marker, x: &str, y: &str, color: &str) {
    let r = "0.2";
    match marker {
        Marker::Circle => writeln!(out, "\\fill[{color}] ({x},{y}) circle ({r});"),
        Marker::Square => writeln!(out, "\\fill[{color}] ({x},{y}) ++(-{r},-{r}) rectangle ++(0.4,0.4);"),
        Marker::Diamond => writeln!(
            out,
            "\\fill[{color}] ({x},{y}) ++(0,{r}) -- ++({r},-{r}) -- ++(-{r},-{r}) -- ++(-{r},{r}) -- cycle;"
        ),
        Marker::Triangle => {
            writeln!(out, "\\fill[{color}] ({x},{y}) ++(0,{r}) -- ++({r},-0.4) -- ++(-0.4,0) -- cycle;")
        }
    }
    .unwrap();
}

pub fn emit_tikz(grid: &DiagramGrid, palette: &Palette) -> Vec<u8> {
    let w = grid.window;
    let mut out = String::new();
    writeln!(
        out,
        "% {} alternation diagram, mu = {}, window [{},{}]x[{},{}]",
        grid.algebra, grid.mu, w.c1_min, w.c1_max, w.c2_min, w.c2_max
    )
    .unwrap();
    out.push_str("\\begin{tikzpicture}[x=0.25cm,y=0.25cm]\n");
    let used = grid.key.len().min(palette.colors.len());
    for (k, color) in palette.colors.iter().take(used).enumerate() {
        writeln!(out, "\\definecolor{{k{k}}}{{HTML}}{{{}}}", color.trim_start_matches('#')).unwrap();
    }
    for (a, b) in axis_ends(grid) {
        let (x1, y1) = position(grid, a, 1);
        let (x2, y2) = position(grid, b, 1);
        writeln!(out, "\\draw[gray, thin] ({},{}) -- ({},{});", num(x1), num(y1), num(x2), num(y2)).unwrap();
    }
    let name = |k: usize| format!("k{}", k % palette.colors.len());
    for (c, set) in grid.iter() {
        let Some(k) = grid.color_index(&set) else { continue };
        let (x, y) = position(grid, c, 1);
        tikz_marker(&mut out, palette.style(k).1, &num(x), &num(y), &name(k));
    }
    let right = [(w.c1_max, w.c2_min), (w.c1_max, w.c2_max), (w.c1_min, w.c2_max), (w.c1_min, w.c2_min)]
        .iter()
        .map(|&c| position(grid, c, 1))
        .fold((i128::MIN, i128::MIN), |(mx, my), (x, y)| (mx.max(x), my.max(y)));
    for (k, set) in grid.key.iter().enumerate() {
        let x = right.0 + 2_000_000;
        let y = right.1 - 1_200_000 * k as i128;
        writeln!(
            out,
            "\\node[anchor=west, font=\\scriptsize] at ({},{}) {{\\textcolor{{{}}}{{$\\bullet$}} {}}};",
            num(x),
            num(y),
            name(k),
            tikz_label(grid, set)
        )
        .unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out.into_bytes()
}
