//! Growth diagrams and evacuation.
//!
//! Grids are stored bottom row first: `cells[i][j]` is row `i` counted from
//! the bottom and column `j` from the left, so shapes grow moving up or right.
//! A `2 x 2` square is read as
//!
//! ```text
//!   alpha  beta
//!   gamma  delta
//! ```
//!
//! with `gamma ⊂ alpha ⊂ beta` and `gamma ⊂ delta ⊂ beta`.

use crate::error::{Error, Result};
use crate::jdt::jdt_unchecked;
use crate::rootsys::{CominusculePoset, MAX_BOXES};
use crate::shapes::{chain_of, tableau_of, Shape, ShapeChain, Tableau};

/// Shapes strictly between `gamma` and `beta` when `|beta / gamma| = 2`.
fn intermediates(poset: &CominusculePoset, gamma: Shape, beta: Shape) -> Vec<Shape> {
    beta.minus(gamma).iter().map(|b| gamma.with(b)).filter(|s| poset.is_ideal(*s)).collect()
}

/// The local rule: `delta` from `alpha`, `beta`, `gamma`.
///
/// If `alpha` is the only shape between `gamma` and `beta`, `delta = alpha`;
/// otherwise `delta` is the other one. The rule is symmetric in `alpha` and
/// `delta`.
pub fn local_rule(poset: &CominusculePoset, alpha: Shape, beta: Shape, gamma: Shape) -> Result<Shape> {
    let ok = gamma.is_subset(alpha)
        && alpha.is_subset(beta)
        && alpha.len() == gamma.len() + 1
        && beta.len() == alpha.len() + 1;
    if !ok {
        return Err(Error::Rule(format!(
            "need gamma ⊂ alpha ⊂ beta with single-box steps, got {gamma:?}, {alpha:?}, {beta:?}"
        )));
    }
    let mids = intermediates(poset, gamma, beta);
    match mids.len() {
        1 => Ok(alpha),
        2 => Ok(if mids[0] == alpha { mids[1] } else { mids[0] }),
        k => panic!("{k} shapes between {gamma:?} and {beta:?}; expected one or two"),
    }
}

/// Order in which interior cells are filled; the result never depends on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepOrder {
    ColumnMajor,
    RowMajor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    cells: Vec<Vec<Shape>>,
}

impl GrowthDiagram {
    /// Number of rows of shapes (`|R| + 1`).
    pub fn height(&self) -> usize {
        self.cells.len()
    }

    /// Number of columns of shapes (`|T| + 1`).
    pub fn width(&self) -> usize {
        self.cells[0].len()
    }

    /// Row `i` from the bottom, column `j` from the left.
    pub fn at(&self, i: usize, j: usize) -> Shape {
        self.cells[i][j]
    }

    pub fn rows(&self) -> &[Vec<Shape>] {
        &self.cells
    }

    pub fn left_column(&self) -> ShapeChain {
        ShapeChain(self.cells.iter().map(|r| r[0]).collect())
    }

    pub fn top_row(&self) -> ShapeChain {
        ShapeChain(self.cells.last().unwrap().clone())
    }

    pub fn bottom_row(&self) -> ShapeChain {
        ShapeChain(self.cells[0].clone())
    }

    pub fn right_column(&self) -> ShapeChain {
        ShapeChain(self.cells.iter().map(|r| *r.last().unwrap()).collect())
    }

    /// Reflection about the antidiagonal (as drawn, top row first): the new
    /// left column is the old bottom row and the new top row the old right
    /// column.
    pub fn reflect(&self) -> GrowthDiagram {
        let (h, w) = (self.height(), self.width());
        let cells = (0..w).map(|a| (0..h).map(|b| self.cells[b][a]).collect()).collect();
        GrowthDiagram { cells }
    }

    /// Every step right or up adds one box, and every square obeys the local rule.
    pub fn check(&self, poset: &CominusculePoset) -> bool {
        let (h, w) = (self.height(), self.width());
        for i in 0..h {
            for j in 0..w {
                let s = self.cells[i][j];
                if !poset.is_ideal(s) {
                    return false;
                }
                if j + 1 < w && !(s.is_subset(self.cells[i][j + 1]) && self.cells[i][j + 1].len() == s.len() + 1) {
                    return false;
                }
                if i + 1 < h && !(s.is_subset(self.cells[i + 1][j]) && self.cells[i + 1][j].len() == s.len() + 1) {
                    return false;
                }
                if i + 1 < h && j + 1 < w {
                    let d = local_rule(poset, self.cells[i + 1][j], self.cells[i + 1][j + 1], s);
                    if d.ok() != Some(self.cells[i][j + 1]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Fills a growth diagram from its left column (read bottom to top, starting
/// at the empty shape) and top row (read left to right).
pub fn build_growth(poset: &CominusculePoset, left: &ShapeChain, top: &ShapeChain) -> Result<GrowthDiagram> {
    build_growth_with(poset, left, top, SweepOrder::ColumnMajor)
}

pub fn build_growth_with(
    poset: &CominusculePoset,
    left: &ShapeChain,
    top: &ShapeChain,
    order: SweepOrder,
) -> Result<GrowthDiagram> {
    if left.last() != top.first() {
        return Err(Error::Chain("left column and top row disagree at the corner".into()));
    }
    tableau_of(poset, left)?;
    tableau_of(poset, top)?;
    let h = left.shapes().len();
    let w = top.shapes().len();
    let mut cells = vec![vec![Shape::EMPTY; w]; h];
    for i in 0..h {
        cells[i][0] = left.shapes()[i];
    }
    cells[h - 1] = top.shapes().to_vec();
    let fill = |i: usize, j: usize, cells: &mut Vec<Vec<Shape>>| -> Result<()> {
        // cell (i, j + 1) from the square above-left of it
        cells[i][j + 1] = local_rule(poset, cells[i + 1][j], cells[i + 1][j + 1], cells[i][j])?;
        Ok(())
    };
    match order {
        SweepOrder::ColumnMajor => {
            for j in 0..w - 1 {
                for i in (0..h - 1).rev() {
                    fill(i, j, &mut cells)?;
                }
            }
        }
        SweepOrder::RowMajor => {
            for i in (0..h - 1).rev() {
                for j in 0..w - 1 {
                    fill(i, j, &mut cells)?;
                }
            }
        }
    }
    Ok(GrowthDiagram { cells })
}

/// Growth diagram of `infusion(r, t)`: left column is `r`, top row is `t`.
pub fn growth_of(poset: &CominusculePoset, r: &Tableau, t: &Tableau) -> Result<GrowthDiagram> {
    if !r.is_straight() {
        return Err(Error::Domain("the left tableau must have straight shape".into()));
    }
    build_growth(poset, &chain_of(r), &chain_of(t))
}

/// `Δ(T)`: erase the label 1 (at the minimum box), lower every other label by
/// one, and slide into the minimum.
pub fn delta_operator(poset: &CominusculePoset, t: &Tableau) -> Result<Tableau> {
    if !t.is_straight() {
        return Err(Error::Domain("Δ needs a straight-shape tableau".into()));
    }
    if t.is_empty() {
        return Err(Error::Domain("Δ is undefined on the empty tableau".into()));
    }
    let min = poset.minimum();
    let mut labels = [0u8; MAX_BOXES];
    for (b, l) in t.entries() {
        if b != min {
            labels[b] = (l - 1) as u8;
        }
    }
    let lowered = Tableau::from_parts(Shape::EMPTY.with(min), t.outer(), labels);
    Ok(jdt_unchecked(poset, &lowered, min).0)
}

/// `T, Δ(T), Δ²(T), …, ∅`.
pub fn delta_iterates(poset: &CominusculePoset, t: &Tableau) -> Result<Vec<Tableau>> {
    if !t.is_straight() {
        return Err(Error::Domain("evacuation needs a straight-shape tableau".into()));
    }
    let mut out = vec![*t];
    let mut cur = *t;
    while !cur.is_empty() {
        cur = delta_operator(poset, &cur)?;
        out.push(cur);
    }
    Ok(out)
}

/// Evacuation: the tableau of the chain `shape(Δ^n T) ⊂ … ⊂ shape(Δ T) ⊂ shape(T)`.
pub fn evacuation(poset: &CominusculePoset, t: &Tableau) -> Result<Tableau> {
    let iter = delta_iterates(poset, t)?;
    let chain = ShapeChain(iter.iter().rev().map(|s| s.outer()).collect());
    tableau_of(poset, &chain)
}

/// Staircase grid: row `k` (from the top) holds the chain of `Δ^k(T)` in
/// columns `k..=n`, starting with ∅ on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularGrowthDiagram {
    n: usize,
    rows: Vec<Vec<Shape>>,
}

impl TriangularGrowthDiagram {
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry in row `k` from the top, column `j` (requires `j >= k`).
    pub fn at(&self, k: usize, j: usize) -> Option<Shape> {
        (j >= k && k <= self.n && j <= self.n).then(|| self.rows[k][j - k])
    }

    pub fn top_row(&self) -> ShapeChain {
        ShapeChain(self.rows[0].clone())
    }

    /// Right column read top to bottom.
    pub fn right_column(&self) -> Vec<Shape> {
        self.rows.iter().map(|r| *r.last().unwrap()).collect()
    }

    /// The tableau encoded by the right column (read bottom to top).
    pub fn right_column_tableau(&self, poset: &CominusculePoset) -> Result<Tableau> {
        let mut col = self.right_column();
        col.reverse();
        tableau_of(poset, &ShapeChain(col))
    }

    /// Reflection across the antidiagonal: `new[k][j] = old[n - j][n - k]`.
    pub fn reflect(&self) -> TriangularGrowthDiagram {
        let n = self.n;
        let rows = (0..=n).map(|k| (k..=n).map(|j| self.rows[n - j][n - k - (n - j)]).collect()).collect();
        TriangularGrowthDiagram { n, rows }
    }

    /// Every complete square obeys the local rule.
    pub fn check(&self, poset: &CominusculePoset) -> bool {
        for k in 0..self.n {
            for j in k + 1..self.n {
                let alpha = self.rows[k][j - k];
                let beta = self.rows[k][j + 1 - k];
                let gamma = self.rows[k + 1][j - k - 1];
                let delta = self.rows[k + 1][j - k];
                if local_rule(poset, alpha, beta, gamma).ok() != Some(delta) {
                    return false;
                }
            }
        }
        true
    }
}

/// Triangular diagram built row by row from the Δ-iterates.
pub fn triangular_growth(poset: &CominusculePoset, t: &Tableau) -> Result<TriangularGrowthDiagram> {
    let iter = delta_iterates(poset, t)?;
    let n = t.len();
    let rows = iter.iter().map(|s| chain_of(s).0).collect();
    Ok(TriangularGrowthDiagram { n, rows })
}

/// Triangular diagram rebuilt from its top row with local rules alone.
pub fn triangular_from_top(poset: &CominusculePoset, top: &ShapeChain) -> Result<TriangularGrowthDiagram> {
    if !top.first().is_empty() {
        return Err(Error::Chain("top row must start at the empty shape".into()));
    }
    tableau_of(poset, top)?;
    let n = top.steps();
    let mut rows: Vec<Vec<Shape>> = vec![top.shapes().to_vec()];
    for k in 0..n {
        let prev = &rows[k];
        let mut row = vec![Shape::EMPTY];
        for j in k + 1..n {
            let alpha = prev[j - k];
            let beta = prev[j + 1 - k];
            let gamma = row[j - k - 1];
            row.push(local_rule(poset, alpha, beta, gamma)?);
        }
        rows.push(row);
    }
    // The last row is just the diagonal ∅ at (n, n).
    Ok(TriangularGrowthDiagram { n, rows })
}
