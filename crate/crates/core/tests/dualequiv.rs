mod common;

use cominuscule::dualequiv::{
    basic_shape, dual_class, dual_equivalent_by_infusion, dual_equivalent_by_moves, elementary_moves, generalized_rsk,
    haiman_table, inverse_rsk, partition_into_classes,
};
use cominuscule::jdt::rectify;
use cominuscule::rootsys::{CominusculePoset, Space};
use cominuscule::shapes::{enumerate_syt, SkewShape};
use common::*;

fn skews(p: &CominusculePoset, max: usize) -> Vec<SkewShape> {
    let ideals = p.ideals();
    let mut out = Vec::new();
    for &a in &ideals {
        for &b in &ideals {
            if a.is_subset(b) && b.len() - a.len() <= max {
                out.push(SkewShape { inner: a, outer: b });
            }
        }
    }
    out
}

#[test]
fn both_procedures_agree_pairwise() {
    for space in
        [Space::Grassmannian { k: 2, n: 5 }, Space::LagrangianGrassmannian { n: 3 }, Space::EvenQuadric { n: 4 }]
    {
        let p = poset(space);
        for s in skews(&p, 5) {
            let syt = enumerate_syt(&p, s);
            for x in &syt {
                for y in &syt {
                    assert_eq!(
                        dual_equivalent_by_moves(&p, x, y),
                        dual_equivalent_by_infusion(&p, x, y),
                        "{}",
                        space.name()
                    );
                }
            }
        }
    }
}

#[test]
fn elementary_moves_preserve_shape_and_are_symmetric() {
    let p = poset(Space::OddQuadric { n: 4 });
    for s in skews(&p, 5) {
        for t in enumerate_syt(&p, s) {
            for m in elementary_moves(&p, &t) {
                assert_eq!(m.shape(), t.shape());
                m.validate(&p).unwrap();
                assert!(elementary_moves(&p, &m).contains(&t));
            }
        }
    }
}

#[test]
fn classes_match_rectification_counts() {
    // each class holds exactly one tableau rectifying to each filling of its shape
    let p = cayley();
    let s = SkewShape { inner: shape(&p, TABLE1_INNER), outer: shape(&p, TABLE1_OUTER) };
    let syt = enumerate_syt(&p, s);
    let classes = partition_into_classes(&p, &syt);
    assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), syt.len());
    for class in &classes {
        let mu = rectify(&p, &class[0]).outer();
        let fillings = enumerate_syt(&p, SkewShape::straight(mu)).len();
        assert_eq!(class.len(), fillings);
        assert_eq!(dual_class(&p, &class[0]).len(), fillings);
    }
}

#[test]
fn worked_pairs() {
    let p = cayley();
    let [(a, b), (c, d)] = de_pairs(&p);
    assert!(dual_equivalent_by_moves(&p, &a, &b));
    assert!(dual_equivalent_by_infusion(&p, &a, &b));
    assert!(!dual_equivalent_by_moves(&p, &c, &d));
    assert!(!dual_equivalent_by_infusion(&p, &c, &d));
}

#[test]
fn haiman_table_example() {
    let p = cayley();
    let s = SkewShape { inner: shape(&p, TABLE1_INNER), outer: shape(&p, TABLE1_OUTER) };
    let h = haiman_table(&p, s, shape(&p, "1,1,2,1"));
    assert_eq!((h.rows(), h.cols()), (2, 3));
    assert!(h.is_full_grid());
    let grid = table1_grid(&p);
    for (r, row) in grid.iter().enumerate() {
        for t in row {
            let (rr, cc) = (0..h.rows())
                .flat_map(|i| (0..h.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| h.cell(i, j) == Some(t))
                .expect("tableau in table");
            assert_eq!(rr, r);
            // tableaux in one column are dual equivalent
            for i in 0..h.rows() {
                assert!(dual_equivalent_by_moves(&p, h.cell(i, cc).unwrap(), t));
            }
        }
    }
}

#[test]
fn rsk_round_trip() {
    let p = poset(Space::Grassmannian { k: 2, n: 5 });
    for s in skews(&p, 6) {
        for t in enumerate_syt(&p, s) {
            let (ins, rec) = generalized_rsk(&p, &t);
            assert!(ins.is_straight());
            assert_eq!(rec.inner(), ins.outer());
            assert_eq!(rec.outer(), t.outer());
            assert_eq!(inverse_rsk(&p, &ins, &rec).unwrap(), t);
        }
    }
}

#[test]
fn basic_shapes() {
    let sizes = [
        (Space::Grassmannian { k: 2, n: 4 }, Some(3)),
        (Space::LagrangianGrassmannian { n: 3 }, Some(4)),
        (Space::EvenQuadric { n: 5 }, Some(5)),
        (Space::CayleyPlane, Some(5)),
        (Space::OddQuadric { n: 3 }, None),
    ];
    for (space, m) in sizes {
        let p = poset(space);
        assert_eq!(basic_shape(&p).ok().map(|b| b.m), m, "{}", space.name());
    }
}
