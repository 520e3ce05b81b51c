//! Tropical span of two or three points and tropical independence, by
//! max-plus residuation.

use crate::error::{Result, TropError};
use crate::plane::{Chart, ProjPoint};
use crate::scalar::Rational;

/// Outcome of a span test; `witness[j]` scales generator `j` (in its `Z = 0`
/// representative) and is present exactly when `member` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanResult {
    pub member: bool,
    pub witness: Option<Vec<Rational>>,
}

/// Representative with last coordinate `0`.
fn z_rep(p: &ProjPoint) -> Result<[Rational; 3]> {
    let q = p.to_point2(Chart::Z).ok_or_else(|| TropError::BoundaryPoint(p.to_string()))?;
    Ok([q.x, q.y, Rational::from_integer(0.into())])
}

/// Principal solution `l_j = min_i (u_i - g_{j,i})`, accepted when
/// `max_j (l_j + g_{j,i}) = u_i` for every `i`.
fn residuate(u: &[Rational; 3], gens: &[[Rational; 3]]) -> SpanResult {
    let lambda: Vec<Rational> = gens
        .iter()
        .map(|g| (0..3).map(|i| &u[i] - &g[i]).min().expect("three coordinates"))
        .collect();
    let member = (0..3).all(|i| {
        let top = gens
            .iter()
            .zip(&lambda)
            .map(|(g, l)| l + &g[i])
            .max()
            .expect("at least one generator");
        top == u[i]
    });
    SpanResult {
        member,
        witness: member.then_some(lambda),
    }
}

/// Whether `u` is a tropical combination `max_j (l_j + g_j)` of the generators.
///
/// Representatives are taken with last coordinate `0`, so a witness always has
/// maximum entry `0`.
pub fn span_membership(u: &ProjPoint, generators: &[ProjPoint]) -> Result<SpanResult> {
    if generators.len() < 2 {
        return Err(TropError::TooFewGenerators {
            min: 2,
            got: generators.len(),
        });
    }
    let u = z_rep(u)?;
    let gens = generators.iter().map(z_rep).collect::<Result<Vec<_>>>()?;
    Ok(residuate(&u, &gens))
}

/// No point lies in the span of the others. At most four points.
pub fn independent(points: &[ProjPoint]) -> Result<bool> {
    if points.len() > 4 {
        return Err(TropError::TooManyPoints {
            max: 4,
            got: points.len(),
        });
    }
    let reps = points.iter().map(z_rep).collect::<Result<Vec<_>>>()?;
    for i in 0..points.len() {
        if points[i + 1..].contains(&points[i]) {
            return Err(TropError::RepeatedPoints);
        }
    }
    for (j, u) in reps.iter().enumerate() {
        let others: Vec<[Rational; 3]> =
            reps.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, g)| g.clone()).collect();
        if !others.is_empty() && residuate(u, &others).member {
            return Ok(false);
        }
    }
    Ok(true)
}
