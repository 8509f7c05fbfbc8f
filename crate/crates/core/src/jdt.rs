//! Jeu de taquin: slides, reverse slides, rectification and infusion.
//!
//! A forward slide into `x` requires `x` to be a maximal box of the inner
//! shape. When no labeled box covers `x` the slide is trivial: `x` leaves both
//! the inner and the outer shape. Reverse slides mirror this on the outer side.

use crate::error::{Error, Result};
use crate::rootsys::{CominusculePoset, MAX_BOXES};
use crate::shapes::{Shape, Tableau};

/// The path of one slide: labels moved `from -> to`, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlideRecord {
    pub start: usize,
    pub moves: Vec<(usize, usize)>,
    /// The box left empty at the end of the cascade.
    pub end: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlideDirection {
    Forward,
    Reverse,
}

/// Boxes `x` at which `jdt_x` may be applied.
pub fn jdt_starts(poset: &CominusculePoset, t: &Tableau) -> Shape {
    poset.maximal_in(t.inner())
}

/// Boxes `x` at which `revjdt_x` may be applied.
pub fn revjdt_starts(poset: &CominusculePoset, t: &Tableau) -> Shape {
    poset.minimal_outside(t.outer())
}

fn cascade(
    poset: &CominusculePoset,
    labels: &mut [u8; MAX_BOXES],
    start: usize,
    dir: SlideDirection,
    mut record: Option<&mut Vec<(usize, usize)>>,
) -> usize {
    let mut hole = start;
    loop {
        let neighbours = match dir {
            SlideDirection::Forward => poset.upper_covers(hole),
            SlideDirection::Reverse => poset.lower_covers(hole),
        };
        let mut pick: Option<usize> = None;
        for b in neighbours.iter() {
            let l = labels[b];
            if l == 0 {
                continue;
            }
            pick = match pick {
                None => Some(b),
                Some(p) => {
                    let better = match dir {
                        SlideDirection::Forward => l < labels[p],
                        SlideDirection::Reverse => l > labels[p],
                    };
                    Some(if better { b } else { p })
                }
            };
        }
        let Some(src) = pick else { return hole };
        labels[hole] = labels[src];
        labels[src] = 0;
        if let Some(r) = record.as_deref_mut() {
            r.push((src, hole));
        }
        hole = src;
    }
}

/// Forward slide without building a record. Caller guarantees `x` is valid.
pub(crate) fn jdt_unchecked(poset: &CominusculePoset, t: &Tableau, x: usize) -> (Tableau, usize) {
    let mut labels = *t.raw_labels();
    let end = cascade(poset, &mut labels, x, SlideDirection::Forward, None);
    (Tableau::from_parts(t.inner().without(x), t.outer().without(end), labels), end)
}

/// Reverse slide without building a record. Caller guarantees `x` is valid.
pub(crate) fn revjdt_unchecked(poset: &CominusculePoset, t: &Tableau, x: usize) -> (Tableau, usize) {
    let mut labels = *t.raw_labels();
    let end = cascade(poset, &mut labels, x, SlideDirection::Reverse, None);
    (Tableau::from_parts(t.inner().with(end), t.outer().with(x), labels), end)
}

/// `jdt_x(T)`: slide into the inner corner `x`, each step pulling the
/// smallest label among the covering boxes.
pub fn jdt_slide(poset: &CominusculePoset, t: &Tableau, x: usize) -> Result<(Tableau, SlideRecord)> {
    if x >= poset.len() || !jdt_starts(poset, t).contains(x) {
        return Err(Error::Slide(format!("box {x} is not a maximal box of the inner shape")));
    }
    let mut labels = *t.raw_labels();
    let mut moves = Vec::new();
    let end = cascade(poset, &mut labels, x, SlideDirection::Forward, Some(&mut moves));
    let out = Tableau::from_parts(t.inner().without(x), t.outer().without(end), labels);
    Ok((out, SlideRecord { start: x, moves, end }))
}

/// `revjdt_x(T)`: slide into the outer corner `x`, each step pulling the
/// largest label among the covered boxes.
pub fn revjdt_slide(poset: &CominusculePoset, t: &Tableau, x: usize) -> Result<(Tableau, SlideRecord)> {
    if x >= poset.len() || !revjdt_starts(poset, t).contains(x) {
        return Err(Error::Slide(format!("box {x} is not a minimal box outside the outer shape")));
    }
    let mut labels = *t.raw_labels();
    let mut moves = Vec::new();
    let end = cascade(poset, &mut labels, x, SlideDirection::Reverse, Some(&mut moves));
    let out = Tableau::from_parts(t.inner().with(end), t.outer().with(x), labels);
    Ok((out, SlideRecord { start: x, moves, end }))
}

/// Rectification in the default order: always slide into the inner box with
/// the largest canonical index.
pub fn rectify(poset: &CominusculePoset, t: &Tableau) -> Tableau {
    let mut cur = *t;
    while let Some(x) = cur.inner().last() {
        cur = jdt_unchecked(poset, &cur, x).0;
    }
    cur
}

/// Rectification in the default order, keeping every slide record.
pub fn rectify_traced(poset: &CominusculePoset, t: &Tableau) -> (Tableau, Vec<SlideRecord>) {
    let mut cur = *t;
    let mut trace = Vec::new();
    while let Some(x) = cur.inner().last() {
        let (next, rec) = jdt_slide(poset, &cur, x).expect("largest inner box is maximal");
        trace.push(rec);
        cur = next;
    }
    (cur, trace)
}

/// Rectification along an explicit slide order, which must empty the inner shape.
pub fn rectify_with_order(poset: &CominusculePoset, t: &Tableau, order: &[usize]) -> Result<Tableau> {
    let mut cur = *t;
    for &x in order {
        cur = jdt_slide(poset, &cur, x)?.0;
    }
    if !cur.is_straight() {
        return Err(Error::Slide(format!("order leaves {} inner boxes unslid", cur.inner().len())));
    }
    Ok(cur)
}

/// Reverse rectification: reverse slides (smallest canonical index first)
/// until the outer shape is the whole poset.
pub fn reverse_rectify(poset: &CominusculePoset, t: &Tableau) -> Tableau {
    let mut cur = *t;
    while let Some(x) = revjdt_starts(poset, &cur).first() {
        cur = revjdt_unchecked(poset, &cur, x).0;
    }
    cur
}

/// Output of [`infusion`] and [`revinfusion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InfusionResult {
    /// The slid second input, on the inner side.
    pub first: Tableau,
    /// The labels of the first input, on the outer side.
    pub second: Tableau,
}

fn check_extension(t: &Tableau, u: &Tableau) -> Result<()> {
    if u.inner() != t.outer() {
        return Err(Error::Extension(format!(
            "inner shape {:?} of the second tableau is not the outer shape {:?} of the first",
            u.inner(),
            t.outer()
        )));
    }
    Ok(())
}

/// `infusion(T, U)`: slide `U` into `T`'s boxes, largest label of `T` first,
/// parking each label of `T` in the hole its slide leaves.
pub fn infusion(poset: &CominusculePoset, t: &Tableau, u: &Tableau) -> Result<InfusionResult> {
    check_extension(t, u)?;
    let mut cur = *u;
    let mut parked = [0u8; MAX_BOXES];
    for (i, &x) in t.boxes_by_label().iter().enumerate().rev() {
        let (next, end) = jdt_unchecked(poset, &cur, x);
        parked[end] = (i + 1) as u8;
        cur = next;
    }
    let second = Tableau::from_parts(cur.outer(), u.outer(), parked);
    Ok(InfusionResult { first: cur, second })
}

/// `revinfusion(T, U)`: reverse-slide `T` into `U`'s boxes, smallest label of
/// `U` first, parking each label of `U` in the hole left inside `T`.
pub fn revinfusion(poset: &CominusculePoset, t: &Tableau, u: &Tableau) -> Result<InfusionResult> {
    check_extension(t, u)?;
    let mut cur = *t;
    let mut parked = [0u8; MAX_BOXES];
    for (i, &x) in u.boxes_by_label().iter().enumerate() {
        let (next, end) = revjdt_unchecked(poset, &cur, x);
        parked[end] = (i + 1) as u8;
        cur = next;
    }
    let first = Tableau::from_parts(t.inner(), cur.inner(), parked);
    Ok(InfusionResult { first, second: cur })
}

/// Rectification of `u` in the order encoded by a filling `a` of its inner
/// shape: `infusion_1(a, u)`.
pub fn rectify_by(poset: &CominusculePoset, a: &Tableau, u: &Tableau) -> Result<Tableau> {
    Ok(infusion(poset, a, u)?.first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_poset, Space};
    use crate::shapes::{enumerate_syt, shape_from_str, SkewShape};

    fn gr_example(p: &CominusculePoset) -> Tableau {
        // (3,3,1)/(2,1) in Gr(3,7): rows 2..0 read "1 3 . ." / ". 2 . ." / ". . 4 ."
        let inner = shape_from_str(p, "2,1").unwrap();
        let at = |r, c| p.box_at(r, c).unwrap();
        Tableau::new(p, inner, &[(at(2, 0), 1), (at(1, 1), 2), (at(2, 1), 3), (at(0, 2), 4)]).unwrap()
    }

    #[test]
    fn rectifies_grassmannian_example() {
        let p = build_poset(Space::Grassmannian { k: 3, n: 7 }).unwrap();
        let r = rectify(&p, &gr_example(&p));
        let at = |r, c| p.box_at(r, c).unwrap();
        let expect =
            Tableau::new(&p, Shape::EMPTY, &[(at(0, 0), 1), (at(0, 1), 2), (at(1, 0), 3), (at(0, 2), 4)]).unwrap();
        assert_eq!(r, expect);
        assert_eq!(r.outer(), shape_from_str(&p, "2,1,1").unwrap());
    }

    #[test]
    fn straight_tableau_has_no_slide() {
        let p = build_poset(Space::Grassmannian { k: 2, n: 4 }).unwrap();
        let t = enumerate_syt(&p, SkewShape::straight(p.full()))[0];
        for x in 0..p.len() {
            assert!(matches!(jdt_slide(&p, &t, x), Err(Error::Slide(_))));
        }
        let (r, trace) = rectify_traced(&p, &t);
        assert_eq!(r, t);
        assert!(trace.is_empty());
    }

    #[test]
    fn slide_then_reverse_slide_is_identity() {
        let p = build_poset(Space::Grassmannian { k: 3, n: 7 }).unwrap();
        let t = gr_example(&p);
        for x in jdt_starts(&p, &t).iter() {
            let (s, rec) = jdt_slide(&p, &t, x).unwrap();
            let (back, rec2) = revjdt_slide(&p, &s, rec.end).unwrap();
            assert_eq!(back, t);
            assert_eq!(rec2.end, x);
        }
    }

    #[test]
    fn chain_reverse_slide_shifts_up() {
        let p = build_poset(Space::OddQuadric { n: 3 }).unwrap();
        let t = Tableau::new(&p, Shape::EMPTY.with(0), &[(1, 1), (2, 2)]).unwrap();
        let (s, rec) = revjdt_slide(&p, &t, 3).unwrap();
        assert_eq!(s, Tableau::new(&p, Shape::EMPTY.with(0).with(1), &[(2, 1), (3, 2)]).unwrap());
        assert_eq!(rec.moves, vec![(2, 3), (1, 2)]);
        assert_eq!(rec.end, 1);
    }

    #[test]
    fn infusion_with_empty_first() {
        let p = build_poset(Space::Grassmannian { k: 2, n: 4 }).unwrap();
        let u = enumerate_syt(&p, SkewShape::straight(p.full()))[1];
        let e = Tableau::empty(Shape::EMPTY);
        let r = infusion(&p, &e, &u).unwrap();
        assert_eq!(r.first, u);
        assert_eq!(r.second, Tableau::empty(p.full()));
        assert!(matches!(infusion(&p, &u, &u), Err(Error::Extension(_))));
    }

    #[test]
    fn rectify_with_bad_order_fails() {
        let p = build_poset(Space::Grassmannian { k: 3, n: 7 }).unwrap();
        let t = gr_example(&p);
        assert!(rectify_with_order(&p, &t, &[0]).is_err());
        assert!(rectify_with_order(&p, &t, &[]).is_err());
    }
}
