mod common;

use cominuscule::rootsys::{anti_automorphisms, build_poset, build_root_system, LieFamily, Space};
use cominuscule::Error;
use common::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn positive_root_counts() {
    let cases = [
        (LieFamily::A, 5, 15),
        (LieFamily::B, 4, 16),
        (LieFamily::C, 4, 16),
        (LieFamily::D, 5, 20),
        (LieFamily::E, 6, 36),
        (LieFamily::E, 7, 63),
    ];
    for (family, rank, count) in cases {
        let rs = build_root_system(family, rank).unwrap();
        assert_eq!(rs.positive_roots().len(), count, "{family:?}{rank}");
    }
}

#[test]
fn box_and_ideal_counts() {
    let cases = [
        (Space::Grassmannian { k: 2, n: 5 }, binomial(5, 2)),
        (Space::Grassmannian { k: 3, n: 7 }, binomial(7, 3)),
        (Space::Grassmannian { k: 1, n: 4 }, 4),
        (Space::LagrangianGrassmannian { n: 4 }, 16),
        (Space::OrthogonalGrassmannian { n: 4 }, 16),
        (Space::OddQuadric { n: 4 }, 8),
        (Space::EvenQuadric { n: 5 }, 10),
        (Space::CayleyPlane, 27),
        (Space::E7Space, 56),
    ];
    for (space, ideals) in cases {
        let p = poset(space);
        assert_eq!(p.len(), space.expected_size(), "{}", space.name());
        assert_eq!(p.ideals().len(), ideals, "{}", space.name());
        assert!(p.ideals().iter().all(|s| p.is_ideal(*s)));
    }
}

#[test]
fn unique_minimum_and_maximum() {
    for space in small_spaces().into_iter().chain([Space::CayleyPlane, Space::E7Space]) {
        let p = poset(space);
        let full = p.full();
        assert_eq!(p.maximal_in(full).len(), 1, "{}", space.name());
        assert_eq!(p.minimal_outside(cominuscule::shapes::Shape::EMPTY).len(), 1);
        assert_eq!(p.minimal_outside(cominuscule::shapes::Shape::EMPTY).first(), Some(p.minimum()));
    }
}

#[test]
fn rotate_is_an_order_reversing_involution() {
    for space in small_spaces().into_iter().chain([Space::CayleyPlane, Space::E7Space]) {
        let p = poset(space);
        for x in 0..p.len() {
            assert_eq!(p.rotate(p.rotate(x)), x);
            for y in 0..p.len() {
                assert_eq!(p.less(x, y), p.less(p.rotate(y), p.rotate(x)));
            }
        }
        // complements of ideals rotate to ideals
        for s in p.ideals() {
            assert!(p.is_ideal(p.rotate_set(p.full().minus(s))));
        }
    }
}

#[test]
fn anti_automorphisms_contain_rotate() {
    for space in [Space::Grassmannian { k: 2, n: 4 }, Space::EvenQuadric { n: 4 }, Space::CayleyPlane] {
        let p = poset(space);
        let all = anti_automorphisms(&p);
        assert!(all.iter().any(|m| m.as_slice() == p.rotate_map()), "{}", space.name());
    }
    // a square grid has two: the rotation and the reflection through the antidiagonal
    let p = poset(Space::Grassmannian { k: 2, n: 4 });
    assert_eq!(anti_automorphisms(&p).len(), 2);
}

#[test]
fn covers_match_planar_neighbours() {
    for space in small_spaces() {
        let p = poset(space);
        for (a, b) in p.covers() {
            let (ia, ib) = (p.box_info(a), p.box_info(b));
            assert!(p.less(a, b));
            let step = (ib.row + ib.col) as isize - (ia.row + ia.col) as isize;
            assert_eq!(step, 1, "{}: cover {a}->{b}", space.name());
        }
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    for space in [
        Space::Grassmannian { k: 0, n: 4 },
        Space::Grassmannian { k: 4, n: 4 },
        Space::LagrangianGrassmannian { n: 2 },
        Space::EvenQuadric { n: 3 },
        Space::OrthogonalGrassmannian { n: 2 },
    ] {
        assert!(matches!(build_poset(space), Err(Error::Parameter(_))), "{space:?}");
    }
    assert!(Space::from_parts("nosuch", &[]).is_err());
    assert!(build_poset(Space::Grassmannian { k: 5, n: 12 }).is_err());
}
