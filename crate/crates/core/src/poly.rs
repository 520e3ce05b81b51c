//! Tropical polynomials: evaluation, hypersurface membership and homogenization.

use std::collections::BTreeMap;

use crate::error::{Result, TropError};
use crate::scalar::{Rational, TropScalar};

/// A tropical polynomial `max_i (a_i + i . X)` with finite coefficients only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Outcome of evaluating a polynomial at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: TropScalar,
    pub attaining_terms: usize,
    /// The maximum is finite and attained at least twice.
    pub on_variety: bool,
}

impl TropPolynomial {
    /// Terms with a `-inf` coefficient are dropped. Repeated exponents are
    /// merged with tropical addition.
    pub fn new(num_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, TropScalar)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exponent, coeff) in terms {
            if exponent.len() != num_vars {
                return Err(TropError::ArityMismatch {
                    expected: num_vars,
                    got: exponent.len(),
                });
            }
            let TropScalar::Finite(c) = coeff else { continue };
            map.entry(exponent)
                .and_modify(|old| {
                    if c > *old {
                        *old = c.clone();
                    }
                })
                .or_insert(c);
        }
        if map.is_empty() {
            return Err(TropError::EmptyPolynomial);
        }
        Ok(TropPolynomial { num_vars, terms: map })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(num_vars: usize, terms: &[(&[u32], i64)]) -> Result<Self> {
        TropPolynomial::new(
            num_vars,
            terms.iter().map(|(e, c)| (e.to_vec(), TropScalar::int(*c))),
        )
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponent: &[u32]) -> Option<&Rational> {
        self.terms.get(exponent)
    }

    fn total_degree(exponent: &[u32]) -> u32 {
        exponent.iter().sum()
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(|e| Self::total_degree(e)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.max_total_degree();
        self.terms.keys().all(|e| Self::total_degree(e) == d)
    }

    /// Evaluate at `pt`, counting the terms that reach the maximum.
    pub fn eval(&self, pt: &[TropScalar]) -> Result<Evaluation> {
        if pt.len() != self.num_vars {
            return Err(TropError::ArityMismatch {
                expected: self.num_vars,
                got: pt.len(),
            });
        }
        let values: Vec<TropScalar> = self
            .terms
            .iter()
            .map(|(exponent, coeff)| {
                exponent
                    .iter()
                    .zip(pt)
                    .fold(TropScalar::Finite(coeff.clone()), |acc, (&k, x)| acc.odot(&x.pow(k)))
            })
            .collect();
        let value = values.iter().max().cloned().unwrap_or(TropScalar::NegInf);
        let attaining_terms = values.iter().filter(|v| **v == value).count();
        let on_variety = attaining_terms >= 2 && value.is_finite();
        Ok(Evaluation {
            value,
            attaining_terms,
            on_variety,
        })
    }

    /// Homogenize with one extra trailing variable (unless already homogeneous)
    /// and report the degree when every pure power carries a finite coefficient.
    pub fn homogenize(&self) -> (TropPolynomial, Option<u32>) {
        let d = self.max_total_degree();
        let homogeneous = if self.is_homogeneous() {
            self.clone()
        } else {
            let terms = self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut padded = e.clone();
                    padded.push(d - Self::total_degree(e));
                    (padded, c.clone())
                })
                .collect();
            TropPolynomial {
                num_vars: self.num_vars + 1,
                terms,
            }
        };
        let n = homogeneous.num_vars;
        let has_all_pure_powers = (0..n).all(|j| {
            let mut pure = vec![0u32; n];
            pure[j] = d;
            homogeneous.terms.contains_key(&pure)
        });
        let degree = if n == 0 {
            Some(0)
        } else {
            has_all_pure_powers.then_some(d)
        };
        (homogeneous, degree)
    }
}

/// Evaluate `p` at `pt`.
pub fn poly_eval(p: &TropPolynomial, pt: &[TropScalar]) -> Result<Evaluation> {
    p.eval(pt)
}

/// Homogenization and degree of `p`.
pub fn homogenize_and_degree(p: &TropPolynomial) -> (TropPolynomial, Option<u32>) {
    p.homogenize()
}

/// The affine tropical line `max(a + X, b + Y, c)`.
pub fn affine_line(a: &Rational, b: &Rational, c: &Rational) -> TropPolynomial {
    let mut terms = BTreeMap::new();
    terms.insert(vec![1, 0], a.clone());
    terms.insert(vec![0, 1], b.clone());
    terms.insert(vec![0, 0], c.clone());
    TropPolynomial { num_vars: 2, terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn xy0() -> TropPolynomial {
        TropPolynomial::from_int_terms(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[0, 0], 0)]).unwrap()
    }

    fn s(n: i64) -> TropScalar {
        TropScalar::int(n)
    }

    #[test]
    fn evaluation_examples() {
        let p = xy0();
        let e = p.eval(&[s(0), s(-5)]).unwrap();
        assert_eq!((e.value, e.attaining_terms, e.on_variety), (s(0), 2, true));
        let e = p.eval(&[s(3), s(1)]).unwrap();
        assert_eq!((e.value, e.attaining_terms, e.on_variety), (s(3), 1, false));
        let e = p.eval(&[TropScalar::NegInf, TropScalar::NegInf]).unwrap();
        assert_eq!((e.value, e.attaining_terms, e.on_variety), (s(0), 1, false));
    }

    #[test]
    fn neg_inf_maximum_is_off_variety() {
        let p = TropPolynomial::from_int_terms(1, &[(&[1], 0), (&[2], 3)]).unwrap();
        let e = p.eval(&[TropScalar::NegInf]).unwrap();
        assert_eq!(e.value, TropScalar::NegInf);
        assert_eq!(e.attaining_terms, 2);
        assert!(!e.on_variety);
    }

    #[test]
    fn arity_mismatch() {
        assert_eq!(
            xy0().eval(&[s(1)]),
            Err(TropError::ArityMismatch { expected: 2, got: 1 })
        );
        assert!(TropPolynomial::from_int_terms(2, &[(&[1], 0)]).is_err());
    }

    #[test]
    fn neg_inf_terms_are_omitted() {
        let p = TropPolynomial::new(
            1,
            vec![(vec![1], TropScalar::NegInf), (vec![0], s(2))],
        )
        .unwrap();
        assert_eq!(p.terms().count(), 1);
        assert_eq!(
            TropPolynomial::new(1, vec![(vec![1], TropScalar::NegInf)]),
            Err(TropError::EmptyPolynomial)
        );
    }

    #[test]
    fn homogenize_line() {
        let (hom, degree) = xy0().homogenize();
        let expected =
            TropPolynomial::from_int_terms(3, &[(&[1, 0, 0], 0), (&[0, 1, 0], 0), (&[0, 0, 1], 0)]).unwrap();
        assert_eq!(hom, expected);
        assert_eq!(degree, Some(1));
    }

    #[test]
    fn degree_undefined_without_pure_powers() {
        let p = TropPolynomial::from_int_terms(2, &[(&[1, 1], 0), (&[0, 0], 0)]).unwrap();
        let (hom, degree) = p.homogenize();
        let expected = TropPolynomial::from_int_terms(3, &[(&[1, 1, 0], 0), (&[0, 0, 2], 0)]).unwrap();
        assert_eq!(hom, expected);
        assert_eq!(degree, None);
    }

    #[test]
    fn constant_has_degree_zero() {
        for vars in [0usize, 2] {
            let p = TropPolynomial::new(vars, vec![(vec![0; vars], s(5))]).unwrap();
            let (hom, degree) = p.homogenize();
            assert_eq!(hom, p);
            assert_eq!(degree, Some(0));
        }
    }

    #[test]
    fn homogeneous_input_is_unchanged() {
        let p = TropPolynomial::from_int_terms(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 0), (&[0, 0, 2], 0), (&[1, 1, 0], 4)])
            .unwrap();
        let (hom, degree) = p.homogenize();
        assert_eq!(hom, p);
        assert_eq!(degree, Some(2));
    }

    fn polynomial() -> impl Strategy<Value = TropPolynomial> {
        proptest::collection::vec(((0u32..4, 0u32..4), -8i64..8), 1..6).prop_map(|terms| {
            TropPolynomial::new(
                2,
                terms.into_iter().map(|((i, j), c)| (vec![i, j], TropScalar::int(c))),
            )
            .unwrap()
        })
    }

    fn coordinate() -> impl Strategy<Value = TropScalar> {
        prop_oneof![
            1 => Just(TropScalar::NegInf),
            6 => (-20i64..20, 1i64..4).prop_map(|(n, d)| TropScalar::Finite(ratio(n, d))),
        ]
    }

    proptest! {
        #[test]
        fn padding_variable_at_zero_is_neutral(p in polynomial(), x in coordinate(), y in coordinate()) {
            let (hom, _) = p.homogenize();
            let mut pt = vec![x.clone(), y.clone()];
            let direct = p.eval(&pt).unwrap();
            if hom.num_vars() == p.num_vars() + 1 {
                pt.push(TropScalar::zero());
            }
            let via_hom = hom.eval(&pt).unwrap();
            prop_assert_eq!(direct, via_hom);
        }
    }
}
