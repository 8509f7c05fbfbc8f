//! Dual equivalence of standard tableaux.
//!
//! Two decision procedures are provided and kept independent:
//!
//! * **closure** ([`dual_class`]): the connected component under elementary
//!   Haiman moves, which swap a window of `m` consecutive labels for its dual
//!   equivalent partner;
//! * **infusion** ([`dual_equivalent_by_infusion`]): compare the recording
//!   tableaux `infusion_2(U0, X)` for a fixed filling `U0` of the inner shape.
//!
//! Size-`m` partners are precomputed once per poset by closing the basic-shape
//! pair under every simultaneous slide and reverse slide.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::jdt::{infusion, jdt_starts, jdt_unchecked, rectify, revjdt_starts, revjdt_unchecked};
use crate::rootsys::{CominusculePoset, Space};
use crate::shapes::{canonical_filling, enumerate_syt, parse_shape, Shape, ShapeSpec, SkewShape, Tableau};

/// The minimal straight shape with two standard fillings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicShapeData {
    pub m: usize,
    pub shape: Shape,
    pub fillings: [Tableau; 2],
}

fn basic_columns(space: Space) -> Result<Vec<usize>> {
    let none = |why: &str| Err(Error::NoBasicShape(format!("{space}: {why}")));
    Ok(match space {
        Space::Grassmannian { k, n } => {
            if k < 2 || n - k < 2 {
                return none("the poset is a chain");
            }
            vec![2, 1]
        }
        Space::OddQuadric { .. } => return none("every dual equivalence class is a singleton"),
        Space::LagrangianGrassmannian { .. } | Space::OrthogonalGrassmannian { .. } => vec![1, 2, 1],
        Space::EvenQuadric { n } => {
            let mut v = vec![1; n - 3];
            v.extend([2, 1]);
            v
        }
        Space::CayleyPlane => vec![1, 1, 2, 1],
        Space::E7Space => vec![1, 1, 1, 2, 1],
    })
}

/// The basic shape of a family and its two fillings.
pub fn basic_shape(poset: &CominusculePoset) -> Result<BasicShapeData> {
    let cols = basic_columns(poset.space())?;
    let shape = parse_shape(poset, &ShapeSpec::Columns(cols))?;
    let fillings = enumerate_syt(poset, SkewShape::straight(shape));
    let [a, b] = fillings[..] else {
        return Err(Error::NoBasicShape(format!("{}: shape has {} fillings, not 2", poset.space(), fillings.len())));
    };
    Ok(BasicShapeData { m: shape.len(), shape, fillings: [a, b] })
}

/// Partner map for dual equivalent pairs of size `m`.
#[derive(Clone, Debug)]
pub struct PartnerTable {
    pub m: usize,
    partner: HashMap<Tableau, Tableau>,
}

impl PartnerTable {
    /// Closes the basic pair under all simultaneous slides and reverse slides.
    pub fn build(poset: &CominusculePoset) -> Result<PartnerTable> {
        let basic = basic_shape(poset)?;
        let [a, b] = basic.fillings;
        let mut partner = HashMap::new();
        partner.insert(a, b);
        partner.insert(b, a);
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            let y = partner[&x];
            let mut visit = |x2: Tableau, y2: Tableau| {
                assert_eq!(x2.shape(), y2.shape(), "dual equivalent pair split by a slide");
                if !partner.contains_key(&x2) {
                    partner.insert(x2, y2);
                    partner.insert(y2, x2);
                    queue.push_back(x2);
                }
            };
            for s in jdt_starts(poset, &x).iter() {
                visit(jdt_unchecked(poset, &x, s).0, jdt_unchecked(poset, &y, s).0);
            }
            for s in revjdt_starts(poset, &x).iter() {
                visit(revjdt_unchecked(poset, &x, s).0, revjdt_unchecked(poset, &y, s).0);
            }
        }
        Ok(PartnerTable { m: basic.m, partner })
    }

    pub fn partner(&self, t: &Tableau) -> Option<&Tableau> {
        self.partner.get(t)
    }

    /// Number of tableaux that have a partner.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }
}

/// The memoized partner table, or `None` for families without a basic shape.
pub fn partner_table(poset: &CominusculePoset) -> Option<&PartnerTable> {
    poset.partners.get_or_init(|| PartnerTable::build(poset).ok()).as_ref()
}

/// All tableaux one elementary Haiman move away from `x`.
pub fn elementary_moves(poset: &CominusculePoset, x: &Tableau) -> Vec<Tableau> {
    let Some(table) = partner_table(poset) else { return Vec::new() };
    let m = table.m;
    let n = x.len();
    let mut out = Vec::new();
    if n < m {
        return out;
    }
    for a in 0..=n - m {
        let w = x.window(a + 1, a + m);
        // A ∐ W ∐ B is a valid decomposition by construction; check it anyway.
        debug_assert!(poset.is_ideal(w.inner()) && poset.is_ideal(w.outer()));
        if let Some(p) = table.partner(&w) {
            let mut labels = *x.raw_labels();
            for (b, l) in p.entries() {
                labels[b] = (l + a) as u8;
            }
            out.push(Tableau::from_parts(x.inner(), x.outer(), labels));
        }
    }
    out
}

/// The dual equivalence class of `x`: closure under elementary moves, sorted.
pub fn dual_class(poset: &CominusculePoset, x: &Tableau) -> Vec<Tableau> {
    let mut seen = BTreeSet::from([*x]);
    let mut stack = vec![*x];
    while let Some(t) = stack.pop() {
        for y in elementary_moves(poset, &t) {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Procedure A: `y` lies in the elementary-move closure of `x`.
pub fn dual_equivalent_by_moves(poset: &CominusculePoset, x: &Tableau, y: &Tableau) -> bool {
    if x.shape() != y.shape() {
        return false;
    }
    if x == y {
        return true;
    }
    dual_class(poset, x).binary_search(y).is_ok()
}

/// The recording tableau `infusion_2(U0, x)` with `U0` the canonical filling
/// of `x`'s inner shape. Requires a straight inner shape (always the case for
/// tableaux of skew shapes `nu/lambda`).
pub fn recording_tableau(poset: &CominusculePoset, x: &Tableau) -> Tableau {
    let u0 = canonical_filling(SkewShape::straight(x.inner()));
    infusion(poset, &u0, x).expect("canonical filling fits under x").second
}

/// Procedure B: equal recording tableaux against a fixed inner filling.
pub fn dual_equivalent_by_infusion(poset: &CominusculePoset, x: &Tableau, y: &Tableau) -> bool {
    if x.shape() != y.shape() {
        return false;
    }
    if matches!(poset.space(), Space::OddQuadric { .. }) {
        return x == y;
    }
    recording_tableau(poset, x) == recording_tableau(poset, y)
}

/// Default decision procedure (Procedure B).
pub fn is_dual_equivalent(poset: &CominusculePoset, x: &Tableau, y: &Tableau) -> bool {
    dual_equivalent_by_infusion(poset, x, y)
}

/// Partitions a list of same-shape tableaux into dual equivalence classes by
/// elementary-move closure. Classes are sorted; the list of classes is
/// sorted by first element.
pub fn partition_into_classes(poset: &CominusculePoset, tableaux: &[Tableau]) -> Vec<Vec<Tableau>> {
    let mut assigned: BTreeSet<Tableau> = BTreeSet::new();
    let mut classes = Vec::new();
    for t in tableaux {
        if assigned.contains(t) {
            continue;
        }
        let class = dual_class(poset, t);
        assigned.extend(class.iter().copied());
        classes.push(class);
    }
    classes.sort();
    classes
}

/// Tableaux of one shape-equivalence class, arranged by rectification (rows)
/// and dual equivalence class (columns).
#[derive(Clone, Debug)]
pub struct HaimanTable {
    pub skew: SkewShape,
    pub mu: Shape,
    /// Rectification tableau of each row.
    pub row_keys: Vec<Tableau>,
    /// Dual equivalence classes, one per column.
    pub columns: Vec<Vec<Tableau>>,
    cells: Vec<Vec<Vec<Tableau>>>,
}

impl HaimanTable {
    pub fn rows(&self) -> usize {
        self.row_keys.len()
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// The tableau at `(row, col)` when that cell holds exactly one.
    pub fn cell(&self, row: usize, col: usize) -> Option<&Tableau> {
        match &self.cells[row][col][..] {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn cell_contents(&self, row: usize, col: usize) -> &[Tableau] {
        &self.cells[row][col]
    }

    /// Every cell holds exactly one tableau.
    pub fn is_full_grid(&self) -> bool {
        self.cells.iter().all(|r| r.iter().all(|c| c.len() == 1))
    }

    pub fn tableaux(&self) -> impl Iterator<Item = &Tableau> {
        self.cells.iter().flatten().flatten()
    }
}

/// Haiman table of the tableaux of `skew` whose rectification has shape `mu`.
pub fn haiman_table(poset: &CominusculePoset, skew: SkewShape, mu: Shape) -> HaimanTable {
    let all = enumerate_syt(poset, skew);
    let members: Vec<(Tableau, Tableau)> =
        all.iter().map(|t| (*t, rectify(poset, t))).filter(|(_, r)| r.outer() == mu).collect();
    build_table(poset, skew, mu, &members)
}

/// Haiman tables for every rectification shape occurring in `skew`, ordered
/// by that shape (size, then bitmask).
pub fn haiman_tables(poset: &CominusculePoset, skew: SkewShape) -> Vec<HaimanTable> {
    let mut by_shape: BTreeMap<(usize, Shape), Vec<(Tableau, Tableau)>> = BTreeMap::new();
    for t in enumerate_syt(poset, skew) {
        let r = rectify(poset, &t);
        by_shape.entry((r.outer().len(), r.outer())).or_default().push((t, r));
    }
    by_shape.into_iter().map(|((_, mu), members)| build_table(poset, skew, mu, &members)).collect()
}

fn build_table(poset: &CominusculePoset, skew: SkewShape, mu: Shape, members: &[(Tableau, Tableau)]) -> HaimanTable {
    let row_keys: Vec<Tableau> = members.iter().map(|(_, r)| *r).collect::<BTreeSet<_>>().into_iter().collect();
    let tableaux: Vec<Tableau> = members.iter().map(|(t, _)| *t).collect();
    let columns = partition_into_classes(poset, &tableaux);
    let rect: HashMap<Tableau, Tableau> = members.iter().copied().collect();
    let mut cells = vec![vec![Vec::new(); columns.len()]; row_keys.len()];
    for (c, class) in columns.iter().enumerate() {
        for t in class {
            if let Some(r) = rect.get(t) {
                let row = row_keys.binary_search(r).expect("row key present");
                cells[row][c].push(*t);
            }
        }
    }
    HaimanTable { skew, mu, row_keys, columns, cells }
}

/// Generalized Robinson–Schensted: `(insertion, recording) =
/// (infusion_1(U0, T), infusion_2(U0, T))` with `U0` the canonical filling of
/// the inner shape.
pub fn generalized_rsk(poset: &CominusculePoset, t: &Tableau) -> (Tableau, Tableau) {
    let u0 = canonical_filling(SkewShape::straight(t.inner()));
    let r = infusion(poset, &u0, t).expect("canonical filling fits under t");
    (r.first, r.second)
}

/// Inverse of [`generalized_rsk`].
pub fn inverse_rsk(poset: &CominusculePoset, insertion: &Tableau, recording: &Tableau) -> Result<Tableau> {
    let r = infusion(poset, insertion, recording)?;
    let u0 = canonical_filling(SkewShape::straight(r.first.outer()));
    if r.first != u0 {
        return Err(Error::Domain("recording tableau does not come from the canonical filling".into()));
    }
    Ok(r.second)
}

/// Straight shapes of size `m` with exactly two standard fillings.
pub fn two_filling_shapes(poset: &CominusculePoset, m: usize) -> Vec<Shape> {
    poset
        .ideals()
        .into_iter()
        .filter(|s| s.len() == m)
        .filter(|s| crate::shapes::count_syt(poset, SkewShape::straight(*s)) == 2)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_poset;
    use crate::shapes::shape_from_str;

    #[test]
    fn basic_shapes_per_family() {
        let cases = [
            (Space::Grassmannian { k: 2, n: 4 }, 3),
            (Space::LagrangianGrassmannian { n: 3 }, 4),
            (Space::EvenQuadric { n: 5 }, 5),
            (Space::EvenQuadric { n: 4 }, 4),
            (Space::OrthogonalGrassmannian { n: 3 }, 4),
            (Space::CayleyPlane, 5),
            (Space::E7Space, 6),
        ];
        for (space, m) in cases {
            let p = build_poset(space).unwrap();
            let b = basic_shape(&p).unwrap();
            assert_eq!(b.m, m, "{space}");
            assert_eq!(two_filling_shapes(&p, m), vec![b.shape], "{space}");
            for smaller in 1..m {
                assert!(two_filling_shapes(&p, smaller).is_empty(), "{space} size {smaller}");
            }
        }
        let q = build_poset(Space::OddQuadric { n: 3 }).unwrap();
        assert!(matches!(basic_shape(&q), Err(Error::NoBasicShape(_))));
        let gr = build_poset(Space::Grassmannian { k: 1, n: 4 }).unwrap();
        assert!(matches!(basic_shape(&gr), Err(Error::NoBasicShape(_))));
    }

    #[test]
    fn basic_fillings_are_one_move_apart() {
        let p = build_poset(Space::Grassmannian { k: 2, n: 5 }).unwrap();
        let b = basic_shape(&p).unwrap();
        assert_eq!(elementary_moves(&p, &b.fillings[0]), vec![b.fillings[1]]);
        assert_eq!(elementary_moves(&p, &b.fillings[1]), vec![b.fillings[0]]);
    }

    #[test]
    fn chain_poset_has_no_moves() {
        let p = build_poset(Space::OddQuadric { n: 3 }).unwrap();
        let t = canonical_filling(SkewShape::straight(p.full()));
        assert!(elementary_moves(&p, &t).is_empty());
        assert_eq!(dual_class(&p, &t), vec![t]);
    }

    #[test]
    fn straight_fillings_form_one_class() {
        let p = build_poset(Space::Grassmannian { k: 3, n: 6 }).unwrap();
        for lam in p.ideals() {
            let all = enumerate_syt(&p, SkewShape::straight(lam));
            assert_eq!(dual_class(&p, &all[0]), all);
        }
    }

    #[test]
    fn rsk_round_trip() {
        let p = build_poset(Space::Grassmannian { k: 2, n: 5 }).unwrap();
        let inner = shape_from_str(&p, "1").unwrap();
        let skew = SkewShape::new(&p, inner, p.full()).unwrap();
        for t in enumerate_syt(&p, skew) {
            let (ins, rec) = generalized_rsk(&p, &t);
            assert!(ins.is_straight());
            assert_eq!(inverse_rsk(&p, &ins, &rec).unwrap(), t);
        }
        let e = Tableau::empty(Shape::EMPTY);
        assert_eq!(generalized_rsk(&p, &e), (e, e));
    }
}
