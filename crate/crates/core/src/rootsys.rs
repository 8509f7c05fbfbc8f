//! Root systems and the cominuscule posets built from them.
//!
//! Positive roots are stored as integer coefficient vectors over the simple
//! roots, so the cover relation ("differ by one simple root") is exact integer
//! arithmetic for every family including E6 and E7. Root lengths come from the
//! symmetrized Cartan form.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::dualequiv::PartnerTable;
use crate::error::{Error, Result};
use crate::shapes::Shape;

/// Largest poset handled (the E7 space has 27 boxes).
pub const MAX_BOXES: usize = 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::E => "E",
        };
        f.write_str(s)
    }
}

/// Positive roots of a finite root system together with its symmetrized form.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: LieFamily,
    rank: usize,
    /// `gram[i][j] = (alpha_i, alpha_j)`, scaled to integers.
    gram: Vec<Vec<i64>>,
    /// Positive roots sorted by height, then lexicographically.
    roots: Vec<Vec<i64>>,
    short: Vec<bool>,
}

impl RootSystem {
    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.short[i]
    }

    pub fn short_flags(&self) -> &[bool] {
        &self.short
    }

    /// Symmetrized bilinear form evaluated on two coefficient vectors.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// Cartan integer `<a, alpha_j^vee> = 2 (a, alpha_j) / (alpha_j, alpha_j)`.
    pub fn pairing(&self, a: &[i64], j: usize) -> i64 {
        let s: i64 = (0..self.rank).map(|i| a[i] * self.gram[i][j]).sum();
        2 * s / self.gram[j][j]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| (0..self.rank).map(|j| 2 * self.gram[i][j] / self.gram[j][j]).collect()).collect()
    }

    /// A root is short when its squared length is below the longest simple root's.
    pub fn compute_short(&self, root: &[i64]) -> bool {
        let max = (0..self.rank).map(|i| self.gram[i][i]).max().unwrap_or(0);
        self.form(root, root) < max
    }

    pub fn contains(&self, root: &[i64]) -> bool {
        self.roots.iter().any(|r| r == root)
    }
}

fn gram_matrix(family: LieFamily, rank: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; rank]; rank];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        LieFamily::A => {
            for i in 0..rank {
                g[i][i] = 2;
            }
            for i in 0..rank - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        LieFamily::B => {
            // alpha_n = e_n is short.
            for i in 0..rank {
                g[i][i] = 2;
            }
            g[rank - 1][rank - 1] = 1;
            for i in 0..rank - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        LieFamily::C => {
            // alpha_n = 2 e_n is long.
            for i in 0..rank {
                g[i][i] = 2;
            }
            g[rank - 1][rank - 1] = 4;
            for i in 0..rank - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, rank - 2, rank - 1, -2);
        }
        LieFamily::D => {
            for i in 0..rank {
                g[i][i] = 2;
            }
            for i in 0..rank - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, rank - 3, rank - 1, -1);
        }
        LieFamily::E => {
            // Bourbaki numbering: 1-3-4-5-6(-7), with 2 attached to 4.
            for i in 0..rank {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..rank - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
    }
    g
}

/// All positive roots of the given type, with long/short flags.
///
/// Supported: `A_{n-1}` (rank >= 1), `B_n` (n >= 2), `C_n` (n >= 3),
/// `D_n` (n >= 4), `E6`, `E7`.
pub fn build_root_system(family: LieFamily, rank: usize) -> Result<RootSystem> {
    let ok = match family {
        LieFamily::A => rank >= 1,
        LieFamily::B => rank >= 2,
        LieFamily::C => rank >= 3,
        LieFamily::D => rank >= 4,
        LieFamily::E => rank == 6 || rank == 7,
    };
    if !ok {
        return Err(Error::Parameter(format!("unsupported root system {family}{rank}")));
    }
    let gram = gram_matrix(family, rank);
    let mut sys = RootSystem { family, rank, gram, roots: Vec::new(), short: Vec::new() };

    let simple: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut all: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut layer: Vec<Vec<i64>> = simple.clone();
    // Raise by simple roots using alpha-strings: alpha + alpha_i is a root iff
    // p = q - <alpha, alpha_i^vee> > 0, where q is how far the string extends down.
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for root in &layer {
            for i in 0..rank {
                if *root == simple[i] {
                    continue;
                }
                let mut q = 0;
                let mut down = root.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && all.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let p = q - sys.pairing(root, i);
                if p > 0 {
                    let mut up = root.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    sys.short = roots.iter().map(|r| sys.compute_short(r)).collect();
    sys.roots = roots;
    Ok(sys)
}

/// The seven kinds of cominuscule flag variety, with their parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// `Gr(k, C^n)`, type `A_{n-1}`.
    Grassmannian { k: usize, n: usize },
    /// `Q^{2n-1}`, type `B_n`.
    OddQuadric { n: usize },
    /// `LG(n, 2n)`, type `C_n`.
    LagrangianGrassmannian { n: usize },
    /// `Q^{2n-2}`, type `D_n`, first node.
    EvenQuadric { n: usize },
    /// `OG(n+1, 2n+2)`, type `D_{n+1}`, spin node.
    OrthogonalGrassmannian { n: usize },
    /// The Cayley plane, type `E6`.
    CayleyPlane,
    /// `G_omega(O^3, O^6)`, type `E7`.
    E7Space,
}

impl Space {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Space::Grassmannian { k, n } => n >= 2 && k >= 1 && k < n,
            Space::OddQuadric { n } => n >= 2,
            Space::LagrangianGrassmannian { n } => n >= 3,
            Space::EvenQuadric { n } => n >= 4,
            Space::OrthogonalGrassmannian { n } => n >= 3,
            Space::CayleyPlane | Space::E7Space => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter(format!("invalid parameters for {}", self.name())))
        }
    }

    pub fn root_type(&self) -> (LieFamily, usize) {
        match *self {
            Space::Grassmannian { n, .. } => (LieFamily::A, n - 1),
            Space::OddQuadric { n } => (LieFamily::B, n),
            Space::LagrangianGrassmannian { n } => (LieFamily::C, n),
            Space::EvenQuadric { n } => (LieFamily::D, n),
            Space::OrthogonalGrassmannian { n } => (LieFamily::D, n + 1),
            Space::CayleyPlane => (LieFamily::E, 6),
            Space::E7Space => (LieFamily::E, 7),
        }
    }

    /// Zero-based index of the cominuscule simple root.
    pub fn cominuscule_node(&self) -> usize {
        match *self {
            Space::Grassmannian { k, .. } => k - 1,
            Space::OddQuadric { .. } => 0,
            Space::LagrangianGrassmannian { n } => n - 1,
            Space::EvenQuadric { .. } => 0,
            Space::OrthogonalGrassmannian { n } => n,
            Space::CayleyPlane => 0,
            Space::E7Space => 6,
        }
    }

    /// Stable family name used in JSON.
    pub fn family_name(&self) -> &'static str {
        match self {
            Space::Grassmannian { .. } => "grassmannian",
            Space::OddQuadric { .. } => "odd_quadric",
            Space::LagrangianGrassmannian { .. } => "lagrangian_grassmannian",
            Space::EvenQuadric { .. } => "even_quadric",
            Space::OrthogonalGrassmannian { .. } => "orthogonal_grassmannian",
            Space::CayleyPlane => "cayley_plane",
            Space::E7Space => "e7",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Space::Grassmannian { k, n } => vec![k, n],
            Space::OddQuadric { n }
            | Space::LagrangianGrassmannian { n }
            | Space::EvenQuadric { n }
            | Space::OrthogonalGrassmannian { n } => vec![n],
            Space::CayleyPlane | Space::E7Space => vec![],
        }
    }

    /// Inverse of [`Space::family_name`] / [`Space::params`]. Also accepts the
    /// short command-line aliases.
    pub fn from_parts(family: &str, params: &[usize]) -> Result<Space> {
        let bad = || Error::Parameter(format!("family {family:?} does not take parameters {params:?}"));
        let one = |p: &[usize]| if p.len() == 1 { Ok(p[0]) } else { Err(bad()) };
        let space = match family.to_ascii_lowercase().as_str() {
            "grassmannian" | "gr" => match params {
                [k, n] => Space::Grassmannian { k: *k, n: *n },
                _ => return Err(bad()),
            },
            "odd_quadric" | "oq" => Space::OddQuadric { n: one(params)? },
            "lagrangian_grassmannian" | "lg" => Space::LagrangianGrassmannian { n: one(params)? },
            "even_quadric" | "eq" => Space::EvenQuadric { n: one(params)? },
            "orthogonal_grassmannian" | "og" => Space::OrthogonalGrassmannian { n: one(params)? },
            "cayley_plane" | "cayley" | "op2" | "e6" => {
                if !params.is_empty() {
                    return Err(bad());
                }
                Space::CayleyPlane
            }
            "e7" | "e7_space" => {
                if !params.is_empty() {
                    return Err(bad());
                }
                Space::E7Space
            }
            other => return Err(Error::Parameter(format!("unknown family {other:?}"))),
        };
        space.validate()?;
        Ok(space)
    }

    /// Number of numeric parameters the family takes.
    pub fn param_count(family: &str) -> Option<usize> {
        match family.to_ascii_lowercase().as_str() {
            "grassmannian" | "gr" => Some(2),
            "odd_quadric"
            | "oq"
            | "lagrangian_grassmannian"
            | "lg"
            | "even_quadric"
            | "eq"
            | "orthogonal_grassmannian"
            | "og" => Some(1),
            "cayley_plane" | "cayley" | "op2" | "e6" | "e7" | "e7_space" => Some(0),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Space::Grassmannian { k, n } => format!("Gr({k},{n})"),
            Space::OddQuadric { n } => format!("Q^{}", 2 * n - 1),
            Space::LagrangianGrassmannian { n } => format!("LG({n},{})", 2 * n),
            Space::EvenQuadric { n } => format!("Q^{}", 2 * n - 2),
            Space::OrthogonalGrassmannian { n } => format!("OG({},{})", n + 1, 2 * n + 2),
            Space::CayleyPlane => "OP2".to_string(),
            Space::E7Space => "E7/P7".to_string(),
        }
    }

    /// Expected number of boxes of the poset.
    pub fn expected_size(&self) -> usize {
        match *self {
            Space::Grassmannian { k, n } => k * (n - k),
            Space::OddQuadric { n } => 2 * n - 1,
            Space::LagrangianGrassmannian { n } | Space::OrthogonalGrassmannian { n } => n * (n + 1) / 2,
            Space::EvenQuadric { n } => 2 * n - 2,
            Space::CayleyPlane => 16,
            Space::E7Space => 27,
        }
    }

    /// Planar cells `(row, col)` of the drawing: minimum at the lower left,
    /// boxes increase moving right or up.
    pub fn planar_cells(&self) -> Vec<(usize, usize)> {
        fn rows(spec: &[(usize, usize, usize)]) -> Vec<(usize, usize)> {
            spec.iter().flat_map(|&(r, a, b)| (a..=b).map(move |c| (r, c))).collect()
        }
        match *self {
            Space::Grassmannian { k, n } => (0..k).flat_map(|r| (0..n - k).map(move |c| (r, c))).collect(),
            Space::OddQuadric { n } => (0..2 * n - 1).map(|c| (0, c)).collect(),
            Space::LagrangianGrassmannian { n } | Space::OrthogonalGrassmannian { n } => {
                (0..n).flat_map(|r| (r..n).map(move |c| (r, c))).collect()
            }
            Space::EvenQuadric { n } => rows(&[(0, 0, n - 2), (1, n - 3, 2 * n - 5)]),
            Space::CayleyPlane => rows(&[(0, 0, 4), (1, 2, 4), (2, 3, 5), (3, 3, 7)]),
            Space::E7Space => rows(&[
                (0, 0, 5),
                (1, 3, 5),
                (2, 4, 6),
                (3, 4, 8),
                (4, 4, 8),
                (5, 7, 8),
                (6, 8, 8),
                (7, 8, 8),
                (8, 8, 8),
            ]),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// One element of the poset: a positive root containing the cominuscule root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxInfo {
    pub root: Vec<i64>,
    pub short: bool,
    pub row: usize,
    pub col: usize,
    pub rank: usize,
}

/// The poset of boxes of a cominuscule flag variety.
///
/// Boxes carry a canonical index: a linear extension ordered by (rank, planar
/// column). Every box set in the crate is a bitmask over these indices.
pub struct CominusculePoset {
    space: Space,
    system: RootSystem,
    boxes: Vec<BoxInfo>,
    up: Vec<Shape>,
    down: Vec<Shape>,
    below: Vec<Shape>,
    above: Vec<Shape>,
    rotate: Vec<usize>,
    pub(crate) partners: OnceLock<Option<PartnerTable>>,
}

impl fmt::Debug for CominusculePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CominusculePoset").field("space", &self.space).field("boxes", &self.boxes.len()).finish()
    }
}

impl Clone for CominusculePoset {
    fn clone(&self) -> Self {
        CominusculePoset {
            space: self.space,
            system: self.system.clone(),
            boxes: self.boxes.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            below: self.below.clone(),
            above: self.above.clone(),
            rotate: self.rotate.clone(),
            partners: OnceLock::new(),
        }
    }
}

/// Builds the poset of boxes for a cominuscule space.
pub fn build_poset(space: Space) -> Result<CominusculePoset> {
    space.validate()?;
    let (family, rank) = space.root_type();
    let system = build_root_system(family, rank)?;
    let beta = space.cominuscule_node();

    let mut roots: Vec<(Vec<i64>, bool)> = Vec::new();
    for (i, r) in system.positive_roots().iter().enumerate() {
        match r[beta] {
            0 => {}
            1 => roots.push((r.clone(), system.is_short(i))),
            c => {
                return Err(Error::Parameter(format!(
                    "node {} of {family}{rank} is not cominuscule (coefficient {c})",
                    beta + 1
                )))
            }
        }
    }
    let size = roots.len();
    if size != space.expected_size() || size > MAX_BOXES {
        return Err(Error::Parameter(format!("{space}: found {size} boxes, expected {}", space.expected_size())));
    }

    // Root order covers: gamma covers alpha iff gamma - alpha is a simple root.
    let covers_root = |lo: &[i64], hi: &[i64]| {
        let diff: Vec<i64> = hi.iter().zip(lo).map(|(h, l)| h - l).collect();
        diff.iter().all(|&d| d == 0 || d == 1) && diff.iter().sum::<i64>() == 1
    };
    let lower: Vec<Vec<usize>> =
        (0..size).map(|x| (0..size).filter(|&y| covers_root(&roots[y].0, &roots[x].0)).collect()).collect();

    let cells = space.planar_cells();
    if cells.len() != size {
        return Err(Error::Parameter(format!("{space}: planar drawing has {} cells", cells.len())));
    }
    let placement = embed_planar(&lower, &cells)
        .ok_or_else(|| Error::Parameter(format!("{space}: root poset does not match the planar drawing")))?;

    let heights: Vec<usize> = roots.iter().map(|(r, _)| r.iter().sum::<i64>() as usize).collect();
    let min_height = heights.iter().copied().min().unwrap_or(1);
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&x| (heights[x], cells[placement[x]].1, cells[placement[x]].0));
    let mut canon = vec![0; size];
    for (i, &x) in order.iter().enumerate() {
        canon[x] = i;
    }

    let boxes: Vec<BoxInfo> = order
        .iter()
        .map(|&x| {
            let (row, col) = cells[placement[x]];
            BoxInfo { root: roots[x].0.clone(), short: roots[x].1, row, col, rank: heights[x] - min_height }
        })
        .collect();
    let mut down = vec![Shape::EMPTY; size];
    let mut up = vec![Shape::EMPTY; size];
    for x in 0..size {
        for &y in &lower[x] {
            down[canon[x]] = down[canon[x]].with(canon[y]);
            up[canon[y]] = up[canon[y]].with(canon[x]);
        }
    }
    let mut below = vec![Shape::EMPTY; size];
    for x in 0..size {
        let mut acc = Shape::EMPTY;
        for y in down[x].iter() {
            acc = acc.union(below[y]).with(y);
        }
        below[x] = acc;
    }
    let mut above = vec![Shape::EMPTY; size];
    for x in (0..size).rev() {
        let mut acc = Shape::EMPTY;
        for y in up[x].iter() {
            acc = acc.union(above[y]).with(y);
        }
        above[x] = acc;
    }

    let mut poset = CominusculePoset {
        space,
        system,
        boxes,
        up,
        down,
        below,
        above,
        rotate: Vec::new(),
        partners: OnceLock::new(),
    };
    poset.rotate =
        find_rotate(&poset).ok_or_else(|| Error::Parameter(format!("{space}: no order-reversing involution found")))?;
    Ok(poset)
}

/// Finds a bijection from root boxes to planar cells that turns root covers
/// into planar adjacency (left or lower neighbour). `lower[x]` lists the boxes
/// covered by `x`; boxes are visited in an order where covers come first.
fn embed_planar(lower: &[Vec<usize>], cells: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = lower.len();
    let cell_index = |r: usize, c: usize| cells.iter().position(|&p| p == (r, c));
    let planar_lower: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(r, c)| {
            let mut v = Vec::new();
            if c > 0 {
                v.extend(cell_index(r, c - 1));
            }
            if r > 0 {
                v.extend(cell_index(r - 1, c));
            }
            v.sort_unstable();
            v
        })
        .collect();
    // Topological order: by number of boxes below (root height works too).
    let mut depth = vec![0usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..n {
        for x in 0..n {
            depth[x] = lower[x].iter().map(|&y| depth[y] + 1).max().unwrap_or(0);
        }
    }
    order.sort_by_key(|&x| depth[x]);

    fn go(
        i: usize,
        order: &[usize],
        lower: &[Vec<usize>],
        planar_lower: &[Vec<usize>],
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let mut want: Vec<usize> = lower[x].iter().map(|&y| assign[y].unwrap()).collect();
        want.sort_unstable();
        for cell in 0..planar_lower.len() {
            if used[cell] || planar_lower[cell] != want {
                continue;
            }
            assign[x] = Some(cell);
            used[cell] = true;
            if go(i + 1, order, lower, planar_lower, assign, used) {
                return true;
            }
            assign[x] = None;
            used[cell] = false;
        }
        false
    }
    let mut assign = vec![None; n];
    let mut used = vec![false; n];
    if go(0, &order, lower, &planar_lower, &mut assign, &mut used) {
        Some(assign.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

/// All order-reversing bijections of the poset, in lexicographic order of
/// their image vectors.
pub fn anti_automorphisms(poset: &CominusculePoset) -> Vec<Vec<usize>> {
    let n = poset.len();
    let max_rank = poset.boxes.iter().map(|b| b.rank).max().unwrap_or(0);
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        x: usize,
        poset: &CominusculePoset,
        max_rank: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = poset.len();
        if x == n {
            out.push(image.clone());
            return;
        }
        for cand in 0..n {
            if used[cand]
                || poset.boxes[cand].rank + poset.boxes[x].rank != max_rank
                || poset.up[cand].len() != poset.down[x].len()
                || poset.down[cand].len() != poset.up[x].len()
            {
                continue;
            }
            // Every lower cover y of x (already placed) must map to an upper cover of cand.
            if !poset.down[x].iter().all(|y| poset.up[cand].contains(image[y])) {
                continue;
            }
            image[x] = cand;
            used[cand] = true;
            go(x + 1, poset, max_rank, image, used, out);
            used[cand] = false;
            image[x] = usize::MAX;
        }
    }
    go(0, poset, max_rank, &mut image, &mut used, &mut out);
    out
}

/// `rotate` as the longest element `w_{0,P}` of the Levi subgroup's Weyl
/// group acting on the boxes' roots. It is an order-reversing involution.
fn find_rotate(poset: &CominusculePoset) -> Option<Vec<usize>> {
    let sys = &poset.system;
    let rank = sys.rank();
    let node = poset.space.cominuscule_node();
    let reflect = |v: &mut Vec<i64>, i: usize| {
        let k = sys.pairing(v, i);
        v[i] -= k;
    };
    // w = s_{word[0]} ... s_{word[last]}
    let apply = |word: &[usize], mut v: Vec<i64>| {
        for &i in word.iter().rev() {
            reflect(&mut v, i);
        }
        v
    };
    let simple = |i: usize| {
        let mut e = vec![0; rank];
        e[i] = 1;
        e
    };
    let mut word: Vec<usize> = Vec::new();
    while let Some(i) = (0..rank).filter(|&i| i != node).find(|&i| apply(&word, simple(i)).iter().all(|&c| c >= 0)) {
        word.push(i);
    }
    let map: Vec<usize> = poset
        .boxes
        .iter()
        .map(|b| {
            let image = apply(&word, b.root.clone());
            poset.boxes.iter().position(|c| c.root == image)
        })
        .collect::<Option<_>>()?;
    let involution = (0..map.len()).all(|i| map[map[i]] == i);
    let reversing = (0..map.len()).all(|x| poset.up[x].iter().all(|y| poset.less(map[y], map[x])));
    (involution && reversing).then_some(map)
}

impl CominusculePoset {
    pub fn space(&self) -> Space {
        self.space
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[BoxInfo] {
        &self.boxes
    }

    pub fn box_info(&self, b: usize) -> &BoxInfo {
        &self.boxes[b]
    }

    /// The whole poset as a box set.
    pub fn full(&self) -> Shape {
        Shape::full(self.len())
    }

    /// The minimum box (the cominuscule simple root); always index 0.
    pub fn minimum(&self) -> usize {
        0
    }

    /// Boxes covering `b`.
    pub fn upper_covers(&self, b: usize) -> Shape {
        self.up[b]
    }

    /// Boxes covered by `b`.
    pub fn lower_covers(&self, b: usize) -> Shape {
        self.down[b]
    }

    /// Boxes strictly below `b`.
    pub fn strictly_below(&self, b: usize) -> Shape {
        self.below[b]
    }

    /// Boxes strictly above `b`.
    pub fn strictly_above(&self, b: usize) -> Shape {
        self.above[b]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// Covering pairs `(lower, upper)` in canonical index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                v.push((x, y));
            }
        }
        v
    }

    pub fn rotate(&self, b: usize) -> usize {
        self.rotate[b]
    }

    pub fn rotate_map(&self) -> &[usize] {
        &self.rotate
    }

    pub fn rotate_set(&self, s: Shape) -> Shape {
        s.iter().fold(Shape::EMPTY, |acc, b| acc.with(self.rotate[b]))
    }

    pub fn is_short(&self, b: usize) -> bool {
        self.boxes[b].short
    }

    /// Number of short-root boxes in a box set.
    pub fn shortroots(&self, set: Shape) -> usize {
        set.iter().filter(|&b| self.boxes[b].short).count()
    }

    pub fn is_ideal(&self, s: Shape) -> bool {
        s.iter().all(|b| self.down[b].is_subset(s))
    }

    pub fn is_filter(&self, s: Shape) -> bool {
        s.iter().all(|b| self.up[b].is_subset(s))
    }

    /// Maximal elements of `s`.
    pub fn maximal_in(&self, s: Shape) -> Shape {
        s.iter().filter(|&b| self.up[b].intersect(s).is_empty()).collect()
    }

    /// Minimal elements of the complement of `s`.
    pub fn minimal_outside(&self, s: Shape) -> Shape {
        let comp = self.full().minus(s);
        comp.iter().filter(|&b| self.down[b].intersect(comp).is_empty()).collect()
    }

    /// Down-closure of a box set.
    pub fn down_closure(&self, s: Shape) -> Shape {
        s.iter().fold(s, |acc, b| acc.union(self.below[b]))
    }

    /// Planar position lookup.
    pub fn box_at(&self, row: usize, col: usize) -> Option<usize> {
        self.boxes.iter().position(|b| b.row == row && b.col == col)
    }

    /// Cells of planar column `col`, bottom to top.
    pub fn column(&self, col: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).filter(|&b| self.boxes[b].col == col).collect();
        v.sort_by_key(|&b| self.boxes[b].row);
        v
    }

    pub fn num_columns(&self) -> usize {
        self.boxes.iter().map(|b| b.col + 1).max().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.boxes.iter().map(|b| b.row + 1).max().unwrap_or(0)
    }

    /// All order ideals (straight shapes), sorted by size then bitmask.
    pub fn ideals(&self) -> Vec<Shape> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![Shape::EMPTY];
        seen.insert(Shape::EMPTY);
        while let Some(s) = stack.pop() {
            for b in self.minimal_outside(s).iter() {
                let t = s.with(b);
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        let mut v: Vec<Shape> = seen.into_iter().collect();
        v.sort_by_key(|s| (s.len(), s.bits()));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_type_a() {
        let sys = build_root_system(LieFamily::A, 2).unwrap();
        let mut roots = sys.positive_roots().to_vec();
        roots.sort();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(sys.short_flags().iter().all(|s| !s));
    }

    #[test]
    fn b2_short_roots() {
        // alpha1 = e1 - e2, alpha2 = e2; e2 and e1 = alpha1 + alpha2 are short.
        let sys = build_root_system(LieFamily::B, 2).unwrap();
        assert_eq!(sys.positive_roots().len(), 4);
        let short: Vec<&Vec<i64>> =
            sys.positive_roots().iter().zip(sys.short_flags()).filter(|(_, s)| **s).map(|(r, _)| r).collect();
        assert_eq!(short, vec![&vec![0, 1], &vec![1, 1]]);
    }

    #[test]
    fn classical_root_counts() {
        for n in 2..8 {
            assert_eq!(build_root_system(LieFamily::A, n - 1).unwrap().positive_roots().len(), n * (n - 1) / 2);
            assert_eq!(build_root_system(LieFamily::B, n).unwrap().positive_roots().len(), n * n);
        }
        for n in 3..8 {
            assert_eq!(build_root_system(LieFamily::C, n).unwrap().positive_roots().len(), n * n);
        }
        for n in 4..8 {
            assert_eq!(build_root_system(LieFamily::D, n).unwrap().positive_roots().len(), n * (n - 1));
        }
        assert_eq!(build_root_system(LieFamily::E, 6).unwrap().positive_roots().len(), 36);
        assert_eq!(build_root_system(LieFamily::E, 7).unwrap().positive_roots().len(), 63);
    }

    #[test]
    fn unsupported_types_rejected() {
        assert!(build_root_system(LieFamily::C, 2).is_err());
        assert!(build_root_system(LieFamily::D, 3).is_err());
        assert!(build_root_system(LieFamily::E, 8).is_err());
        assert!(build_poset(Space::Grassmannian { k: 0, n: 3 }).is_err());
        assert!(build_poset(Space::EvenQuadric { n: 3 }).is_err());
    }

    #[test]
    fn cartan_matrix_c3() {
        let sys = build_root_system(LieFamily::C, 3).unwrap();
        assert_eq!(sys.cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
    }

    #[test]
    fn grassmannian_grid() {
        let p = build_poset(Space::Grassmannian { k: 2, n: 5 }).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.num_rows(), 2);
        assert_eq!(p.num_columns(), 3);
        for x in 0..p.len() {
            for y in 0..p.len() {
                let (a, b) = (p.box_info(x), p.box_info(y));
                let grid_less = a.row <= b.row && a.col <= b.col && x != y;
                assert_eq!(p.less(x, y), grid_less);
            }
        }
    }

    #[test]
    fn odd_quadric_chain_has_one_short_root() {
        for n in 2..6 {
            let p = build_poset(Space::OddQuadric { n }).unwrap();
            assert_eq!(p.len(), 2 * n - 1);
            let shorts: Vec<usize> = (0..p.len()).filter(|&b| p.is_short(b)).collect();
            // chain position n (1-based)
            assert_eq!(shorts, vec![n - 1]);
            for b in 1..p.len() {
                assert_eq!(p.lower_covers(b), Shape::EMPTY.with(b - 1));
            }
        }
    }

    #[test]
    fn lagrangian_diagonal_is_long() {
        let p = build_poset(Space::LagrangianGrassmannian { n: 4 }).unwrap();
        assert_eq!(p.len(), 10);
        for b in 0..p.len() {
            let info = p.box_info(b);
            assert_eq!(!info.short, info.row == info.col, "box {b} {info:?}");
        }
        assert_eq!(p.shortroots(p.full()), 6);
    }

    #[test]
    fn box_counts_and_unique_minimum() {
        let spaces = [
            Space::Grassmannian { k: 3, n: 7 },
            Space::OddQuadric { n: 4 },
            Space::LagrangianGrassmannian { n: 3 },
            Space::EvenQuadric { n: 5 },
            Space::OrthogonalGrassmannian { n: 4 },
            Space::CayleyPlane,
            Space::E7Space,
        ];
        for s in spaces {
            let p = build_poset(s).unwrap();
            assert_eq!(p.len(), s.expected_size());
            let minima: Vec<usize> = (0..p.len()).filter(|&b| p.lower_covers(b).is_empty()).collect();
            assert_eq!(minima, vec![0], "{s}");
            for b in 1..p.len() {
                assert!(!p.lower_covers(b).is_empty());
            }
        }
    }

    #[test]
    fn cayley_plane_rows() {
        let p = build_poset(Space::CayleyPlane).unwrap();
        let mut rows = vec![0; p.num_rows()];
        for b in p.boxes() {
            rows[b.row] += 1;
        }
        assert_eq!(rows, vec![5, 3, 3, 5]);
    }

    #[test]
    fn even_quadric_branches_once() {
        let p = build_poset(Space::EvenQuadric { n: 5 }).unwrap();
        let branching: Vec<usize> = (0..p.len()).filter(|&b| p.upper_covers(b).len() == 2).collect();
        assert_eq!(branching.len(), 1);
        assert_eq!(p.box_info(branching[0]).col, 2);
    }

    #[test]
    fn rotate_is_order_reversing_involution() {
        for s in [
            Space::Grassmannian { k: 2, n: 4 },
            Space::Grassmannian { k: 2, n: 5 },
            Space::LagrangianGrassmannian { n: 3 },
            Space::EvenQuadric { n: 4 },
            Space::CayleyPlane,
            Space::E7Space,
        ] {
            let p = build_poset(s).unwrap();
            for x in 0..p.len() {
                assert_eq!(p.rotate(p.rotate(x)), x);
                assert_eq!(p.upper_covers(x).len(), p.lower_covers(p.rotate(x)).len());
                for y in 0..p.len() {
                    assert_eq!(p.less(x, y), p.less(p.rotate(y), p.rotate(x)));
                }
            }
        }
    }

    #[test]
    fn short_flags_recompute() {
        let p = build_poset(Space::LagrangianGrassmannian { n: 3 }).unwrap();
        for b in p.boxes() {
            assert_eq!(p.root_system().compute_short(&b.root), b.short);
        }
    }
}
