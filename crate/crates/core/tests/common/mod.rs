#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropigeo_core::scalar::{rat, ratio};
use tropigeo_core::triangle::{params_complete, triangle_from_params, HexParams};
use tropigeo_core::{AffinePoint, Chart, Point2, ProjPoint, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_point(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> ProjPoint {
    ProjPoint::from_ints([rng.random_range(lo..=hi), rng.random_range(lo..=hi), 0])
}

/// Rational with denominator in 1..=den_max and value roughly in [lo, hi].
pub fn small_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den_max: i64) -> Rational {
    let d = rng.random_range(1..=den_max);
    ratio(rng.random_range(lo * d..=hi * d), d)
}

pub fn distinct_triple(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> [ProjPoint; 3] {
    loop {
        let t = [int_point(rng, lo, hi), int_point(rng, lo, hi), int_point(rng, lo, hi)];
        if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
            return t;
        }
    }
}

pub fn random_params(rng: &mut ChaCha8Rng) -> HexParams {
    loop {
        let l1 = small_rational(rng, 0, 6, 3);
        let l2 = small_rational(rng, 0, 6, 3);
        let l3 = small_rational(rng, 0, 6, 3);
        let l5 = small_rational(rng, 0, 12, 3);
        if let Ok(p) = params_complete(&l1, &l2, &l3, &l5) {
            return p;
        }
    }
}

/// A transversal triple in six-inequality labels, in chart `Z = 0`.
pub fn transversal_triple(rng: &mut ChaCha8Rng) -> [ProjPoint; 3] {
    let params = random_params(rng);
    let base = AffinePoint::ints(rng.random_range(-8..=8), rng.random_range(-8..=8));
    triangle_from_params(&params, &base, Chart::Z).expect("valid params")
}

pub fn z(p: &ProjPoint) -> Point2 {
    p.to_point2(Chart::Z).expect("interior point")
}

pub fn z_coords(p: &ProjPoint) -> [Rational; 3] {
    let q = z(p);
    [q.x, q.y, rat(0)]
}

/// Two distinct classical points through which infinitely many tropical
/// lines pass: the displacement is horizontal, vertical or diagonal.
pub fn special_pair(p: &Point2, q: &Point2) -> bool {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    dx == rat(0) || dy == rat(0) || dx == dy
}
