mod common;

use common::{distinct_triple, rng, special_pair, z};
use itertools::Itertools;
use tropigeo_core::plane::cross_product;
use tropigeo_core::triangle::{classify, is_good, is_proper, thm1_relabel, thm2_check, TriangleClass};
use tropigeo_core::ProjPoint;

/// Transversality read off classical positions: vertices pairwise in general
/// position, and the vertices of the three side lines likewise.
fn direct_transversal(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    let vertices = [z(a), z(b), z(c)];
    let side_vertices: Vec<_> = [(a, b), (b, c), (c, a)]
        .iter()
        .map(|(p, q)| z(&cross_product(p, q).unwrap().neg().unwrap()))
        .collect();
    let general = |pts: &[tropigeo_core::Point2]| {
        pts.iter()
            .tuple_combinations()
            .all(|(p, q)| p != q && !special_pair(p, q))
    };
    general(&vertices) && general(&side_vertices)
}

fn check(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) {
    let relabel = thm1_relabel(&z(a), &z(b), &z(c)).unwrap();
    let class = classify(a, b, c);
    let direct = direct_transversal(a, b, c);
    let transversal = matches!(class, TriangleClass::Transversal { .. });
    assert_eq!(relabel.is_some(), transversal, "{a} {b} {c}: {class}");
    assert_eq!(direct, transversal, "{a} {b} {c}: {class}");
    assert_eq!(thm2_check(a, b, c).unwrap(), relabel.map(|(l, _)| l));
    if class != TriangleClass::Collinear {
        let gp = is_good(a, b, c).unwrap() && is_proper(a, b, c).unwrap();
        assert_eq!(gp, transversal);
    }
}

#[test]
fn random_triples_agree() {
    let mut rng = rng(0x7a11);
    for _ in 0..1000 {
        let [a, b, c] = distinct_triple(&mut rng, -10, 10);
        check(&a, &b, &c);
    }
}

#[test]
fn grid_triples_agree() {
    let grid: Vec<ProjPoint> = (0..4)
        .cartesian_product(0..4)
        .map(|(x, y)| ProjPoint::from_ints([x, y, 0]))
        .collect();
    let mut transversal = 0;
    let mut total = 0;
    for t in grid.iter().permutations(3) {
        check(t[0], t[1], t[2]);
        total += 1;
        if matches!(classify(t[0], t[1], t[2]), TriangleClass::Transversal { .. }) {
            transversal += 1;
        }
    }
    assert_eq!(total, 16 * 15 * 14);
    assert!(transversal > 0);
}

#[test]
fn relabeling_is_unique_when_present() {
    let mut rng = rng(0xbeef);
    for _ in 0..300 {
        let [a, b, c] = distinct_triple(&mut rng, -6, 6);
        let inputs = [z(&a), z(&b), z(&c)];
        let hits = tropigeo_core::triangle::Labeling::ALL
            .iter()
            .filter(|l| {
                let [p, q, r] = l.apply(&inputs);
                tropigeo_core::triangle::labeling::strict_violations(
                    &tropigeo_core::triangle::labeling::affine_inequalities(&p, &q, &r),
                ) == 0
            })
            .count();
        assert!(hits <= 1);
    }
}

#[test]
fn corner_trichotomy() {
    let mut rng = rng(0xc0);
    for _ in 0..1000 {
        let [a, b, c] = distinct_triple(&mut rng, -10, 10);
        if tropigeo_core::plane::collinear(&a, &b, &c).unwrap() {
            continue;
        }
        let corner = tropigeo_core::triangle::corner(&a, &b, &c).unwrap();
        let options = [
            cross_product(&c, &a).unwrap().neg().unwrap(),
            cross_product(&a, &b).unwrap().neg().unwrap(),
            a.clone(),
        ];
        assert!(options.contains(&corner), "{a} {b} {c} -> {corner}");
    }
}
