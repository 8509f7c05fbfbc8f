//! Plain-text renderings. Planar drawings put the top row first, with the
//! minimum box at the lower left.
//!
//! In tableau drawings a number is a label, `#` an inner box, `.` a box of
//! the poset outside the outer shape; cells not in the poset are blank.

use crate::dualequiv::HaimanTable;
use crate::growth::{GrowthDiagram, TriangularGrowthDiagram};
use crate::jdt::SlideRecord;
use crate::rootsys::CominusculePoset;
use crate::shapes::{format_shape, Shape, Tableau};

fn grid(poset: &CominusculePoset, width: usize, cell: impl Fn(usize) -> String) -> String {
    let rows = poset.num_rows();
    let cols = poset.num_columns();
    let mut lines = Vec::with_capacity(rows);
    for r in (0..rows).rev() {
        let mut line = String::new();
        for c in 0..cols {
            let text = poset.box_at(r, c).map(&cell).unwrap_or_default();
            if c > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{text:>width$}"));
        }
        lines.push(line.trim_end().to_string());
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// Canonical box indices in planar position; short roots marked with `*`.
pub fn render_poset(poset: &CominusculePoset) -> String {
    let width = format!("{}*", poset.len().saturating_sub(1)).len();
    let mut out = format!("{}: {} boxes\n", poset.space().name(), poset.len());
    out.push_str(&grid(poset, width, |b| if poset.is_short(b) { format!("{b}*") } else { b.to_string() }));
    out
}

pub fn render_shape(poset: &CominusculePoset, s: Shape) -> String {
    grid(poset, 1, |b| if s.contains(b) { "#".into() } else { ".".into() })
}

pub fn render_tableau(poset: &CominusculePoset, t: &Tableau) -> String {
    let width = t.len().max(1).to_string().len();
    grid(poset, width, |b| match t.label(b) {
        Some(l) => l.to_string(),
        None if t.inner().contains(b) => "#".into(),
        None => ".".into(),
    })
}

/// One line per slide: start box, the moves made, and the box vacated.
pub fn render_trace(poset: &CominusculePoset, trace: &[SlideRecord]) -> String {
    let pos = |b: usize| {
        let i = poset.box_info(b);
        format!("({},{})", i.row, i.col)
    };
    let mut out = String::new();
    for (k, rec) in trace.iter().enumerate() {
        let moves: Vec<String> = rec.moves.iter().map(|&(f, t)| format!("{}->{}", pos(f), pos(t))).collect();
        out.push_str(&format!(
            "slide {}: start {} moves [{}] end {}\n",
            k + 1,
            pos(rec.start),
            moves.join(", "),
            pos(rec.end)
        ));
    }
    out
}

/// Blocks of text side by side, top-aligned.
pub fn side_by_side(blocks: &[String], sep: &str) -> String {
    let split: Vec<Vec<&str>> = blocks.iter().map(|b| b.lines().collect()).collect();
    let widths: Vec<usize> = split.iter().map(|ls| ls.iter().map(|l| l.chars().count()).max().unwrap_or(0)).collect();
    let height = split.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for i in 0..height {
        let mut line = String::new();
        for (k, ls) in split.iter().enumerate() {
            if k > 0 {
                line.push_str(sep);
            }
            let text = ls.get(i).copied().unwrap_or("");
            line.push_str(text);
            line.extend(std::iter::repeat_n(' ', widths[k] - text.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn shape_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; cols];
    for row in rows {
        for (j, s) in row.iter().enumerate() {
            widths[j] = widths[j].max(s.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = (0..cols)
            .map(|j| {
                let s = row.get(j).map(String::as_str).unwrap_or("");
                format!("{s}{}", " ".repeat(widths[j] - s.chars().count()))
            })
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

/// Growth diagram, top row first.
pub fn render_growth(poset: &CominusculePoset, g: &GrowthDiagram) -> String {
    let rows: Vec<Vec<String>> =
        g.rows().iter().rev().map(|r| r.iter().map(|s| format_shape(poset, *s)).collect()).collect();
    shape_table(&rows)
}

/// Triangular diagram, right-justified, top row first.
pub fn render_triangle(poset: &CominusculePoset, t: &TriangularGrowthDiagram) -> String {
    let n = t.size();
    let rows: Vec<Vec<String>> = (0..=n)
        .map(|k| (0..=n).map(|j| t.at(k, j).map(|s| format_shape(poset, s)).unwrap_or_default()).collect())
        .collect();
    shape_table(&rows)
}

/// Haiman table: one block per row, the row's rectification after `||`.
pub fn render_haiman(poset: &CominusculePoset, h: &HaimanTable) -> String {
    let mut out = format!(
        "{} / {} rectifying to {}: {} x {}\n",
        format_shape(poset, h.skew.outer),
        format_shape(poset, h.skew.inner),
        format_shape(poset, h.mu),
        h.rows(),
        h.cols()
    );
    for (r, key) in h.row_keys.iter().enumerate() {
        let blocks: Vec<String> = (0..h.cols())
            .map(|c| {
                let cell = h.cell_contents(r, c);
                if cell.is_empty() {
                    "-\n".to_string()
                } else {
                    cell.iter().map(|t| render_tableau(poset, t)).collect::<Vec<_>>().join("\n")
                }
            })
            .collect();
        let row = side_by_side(&blocks, "   ");
        out.push('\n');
        out.push_str(&side_by_side(&[row, render_tableau(poset, key)], "   ||   "));
    }
    out
}
