//! Shared fixtures for the integration tests. Tableaux are written as planar
//! `(row, col, label)` triples, rows counted from the bottom.

#![allow(dead_code)]

use cominuscule::rootsys::{build_poset, CominusculePoset, Space};
use cominuscule::shapes::{shape_from_str, Shape, Tableau};

pub fn poset(space: Space) -> CominusculePoset {
    build_poset(space).expect("valid space")
}

pub fn cayley() -> CominusculePoset {
    poset(Space::CayleyPlane)
}

pub fn shape(p: &CominusculePoset, s: &str) -> Shape {
    shape_from_str(p, s).unwrap_or_else(|e| panic!("bad shape {s:?}: {e}"))
}

pub fn tab(p: &CominusculePoset, inner: &str, cells: &[(usize, usize, usize)]) -> Tableau {
    let entries: Vec<(usize, usize)> =
        cells.iter().map(|&(r, c, l)| (p.box_at(r, c).unwrap_or_else(|| panic!("no box at ({r},{c})")), l)).collect();
    Tableau::new(p, shape(p, inner), &entries).unwrap_or_else(|e| panic!("bad tableau: {e}"))
}

/// Small posets used by the exhaustive checks.
pub fn small_spaces() -> Vec<Space> {
    vec![
        Space::Grassmannian { k: 2, n: 4 },
        Space::Grassmannian { k: 2, n: 5 },
        Space::Grassmannian { k: 3, n: 6 },
        Space::LagrangianGrassmannian { n: 3 },
        Space::OrthogonalGrassmannian { n: 3 },
        Space::OddQuadric { n: 3 },
        Space::EvenQuadric { n: 4 },
        Space::EvenQuadric { n: 5 },
    ]
}

// Gr(3,7) skew tableau of shape (3,3,1)/(2,1) and its rectification.

pub fn gr37_skew(p: &CominusculePoset) -> Tableau {
    tab(p, "2,1", &[(2, 0, 1), (1, 1, 2), (2, 1, 3), (0, 2, 4)])
}

pub fn gr37_rectified(p: &CominusculePoset) -> Tableau {
    tab(p, "", &[(0, 0, 1), (0, 1, 2), (1, 0, 3), (0, 2, 4)])
}

// Seven tableaux of (1,1,2,3,1)/(1,1,1) in the Cayley plane.

pub const TABLE1_OUTER: &str = "1,1,2,3,1";
pub const TABLE1_INNER: &str = "1,1,1";

/// Labels at (2,3) / (1,2), (1,3) / (0,3), (0,4).
pub fn table1_entry(p: &CominusculePoset, l: [usize; 5]) -> Tableau {
    tab(p, TABLE1_INNER, &[(2, 3, l[0]), (1, 2, l[1]), (1, 3, l[2]), (0, 3, l[3]), (0, 4, l[4])])
}

pub fn table1_first_row(p: &CominusculePoset) -> Tableau {
    table1_entry(p, [4, 1, 3, 2, 5])
}

/// Middle rows: `[row][col]`.
pub fn table1_grid(p: &CominusculePoset) -> [[Tableau; 3]; 2] {
    [
        [table1_entry(p, [4, 2, 3, 1, 5]), table1_entry(p, [5, 1, 4, 2, 3]), table1_entry(p, [5, 2, 4, 1, 3])],
        [table1_entry(p, [5, 2, 3, 1, 4]), table1_entry(p, [5, 1, 3, 2, 4]), table1_entry(p, [5, 3, 4, 1, 2])],
    ]
}

/// Rectifications: first row, then the two middle rows.
pub fn table1_rectifications(p: &CominusculePoset) -> [Tableau; 3] {
    [
        tab(p, "", &[(0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]),
        tab(p, "", &[(1, 2, 4), (0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 5)]),
        tab(p, "", &[(1, 2, 5), (0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 4)]),
    ]
}

// Two pairs of Cayley-plane tableaux: the first dual equivalent, the second not.

pub fn de_pairs(p: &CominusculePoset) -> [(Tableau, Tableau); 2] {
    [
        (
            tab(p, "1,1", &[(0, 2, 1), (0, 3, 2), (0, 4, 3), (1, 2, 4), (1, 3, 5)]),
            tab(p, "1,1", &[(0, 2, 1), (0, 3, 2), (0, 4, 4), (1, 2, 3), (1, 3, 5)]),
        ),
        (
            tab(p, "1,1,2,2,2", &[(2, 3, 1), (2, 4, 2), (2, 5, 3), (3, 3, 4), (3, 4, 5)]),
            tab(p, "1,1,2,2,2", &[(2, 3, 1), (2, 4, 2), (2, 5, 4), (3, 3, 3), (3, 4, 5)]),
        ),
    ]
}

// Growth diagram: left column is the chain 1,2,3 on (1^3), top row the first
// middle entry of the table above.

pub fn growth_left(p: &CominusculePoset) -> Tableau {
    tab(p, "", &[(0, 0, 1), (0, 1, 2), (0, 2, 3)])
}

pub fn growth_top(p: &CominusculePoset) -> Tableau {
    table1_grid(p)[0][0]
}

/// Grid rows from the bottom.
pub const GROWTH_GRID: [[&str; 6]; 4] = [
    ["", "1", "1^2", "1^3", "1,1,2", "1,1,2,1"],
    ["1", "1^2", "1^3", "1,1,2", "1,1,2,1", "1,1,2,1,1"],
    ["1^2", "1^3", "1,1,2", "1,1,2,1", "1,1,2,2", "1,1,2,2,1"],
    ["1^3", "1^4", "1,1,2,1", "1,1,2,2", "1,1,2,3", "1,1,2,3,1"],
];

// Evacuation example on (1,1,2,3,2).

pub fn evac_input(p: &CominusculePoset) -> Tableau {
    tab(p, "", &[(0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 5), (0, 4, 8), (1, 2, 4), (1, 3, 6), (1, 4, 9), (2, 3, 7)])
}

/// Bottom row from column 0, second row from column 2.
pub fn straight_two_rows(p: &CominusculePoset, bottom: &[usize], second: &[usize], top: Option<usize>) -> Tableau {
    let mut cells: Vec<(usize, usize, usize)> = bottom.iter().enumerate().map(|(c, &l)| (0, c, l)).collect();
    cells.extend(second.iter().enumerate().map(|(i, &l)| (1, 2 + i, l)));
    if let Some(l) = top {
        cells.push((2, 3, l));
    }
    tab(p, "", &cells)
}

pub fn delta_iterates_expected(p: &CominusculePoset) -> Vec<Tableau> {
    let rows: [(&[usize], &[usize]); 8] = [
        (&[1, 2, 3, 4, 7], &[5, 6, 8]),
        (&[1, 2, 3, 5, 6], &[4, 7]),
        (&[1, 2, 3, 4, 5], &[6]),
        (&[1, 2, 3, 4], &[5]),
        (&[1, 2, 3], &[4]),
        (&[1, 2, 3], &[]),
        (&[1, 2], &[]),
        (&[1], &[]),
    ];
    rows.iter().map(|(b, s)| straight_two_rows(p, b, s, None)).collect()
}

pub fn evac_expected(p: &CominusculePoset) -> Tableau {
    straight_two_rows(p, &[1, 2, 3, 5, 6], &[4, 7, 8], Some(9))
}

/// Row `k` lists columns `k..=9`.
pub const TRIANGLE: [&[&str]; 10] = [
    &["", "1", "1^2", "1^3", "1,1,2", "1,1,2,1", "1,1,2,2", "1,1,2,3", "1,1,2,3,1", "1,1,2,3,2"],
    &["", "1", "1^2", "1^3", "1^4", "1,1,2,1", "1,1,2,2", "1,1,2,2,1", "1,1,2,2,2"],
    &["", "1", "1^2", "1^3", "1,1,2", "1,1,2,1", "1,1,2,1,1", "1,1,2,2,1"],
    &["", "1", "1^2", "1^3", "1^4", "1^5", "1,1,2,1,1"],
    &["", "1", "1^2", "1^3", "1^4", "1,1,2,1"],
    &["", "1", "1^2", "1^3", "1,1,2"],
    &["", "1", "1^2", "1^3"],
    &["", "1", "1^2"],
    &["", "1"],
    &[""],
];
