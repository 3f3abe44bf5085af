//! Variation counts of the derivative sequence and the interval root bound
//! they induce.
//!
//! `variation_at(P, t)` counts the sign alternations of
//! `P^(n)(t), ..., P'(t), P(t)` ignoring zeros. Shifting the argument shows
//! this equals the alternation count of the coefficients of `P(X + t)`, so
//! the production path is a Taylor shift followed by a coefficient count; the
//! derivative-evaluation path is kept as an independent cross-check.
//!
//! For `a <= b` with `P(a) != 0`, the difference
//! `variation_at(P, a) - variation_at(P, b)` is nonnegative, bounds the
//! number of roots in `(a, b]` counted with multiplicity, and has the same
//! parity as that count.

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::{Polynomial, Rational};
use crate::sign_rules::{alternations_ignoring_zeros, count_alternations};

/// Exact values of `P^(n)(t), ..., P(t)` at one point, highest derivative
/// first. The leading entry is `n! * lc(P)` and therefore never zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeSignSequence {
    values: Vec<Rational>,
    point: Rational,
}

impl DerivativeSignSequence {
    /// Wraps externally computed values; the first entry must be nonzero.
    pub fn new(values: Vec<Rational>, point: Rational) -> Result<Self, Error> {
        if values.first().map_or(true, |v| v.is_zero()) {
            return Err(Error::LeadingEntryNotConstantSign);
        }
        Ok(DerivativeSignSequence { values, point })
    }

    /// Evaluates every derivative of `P` at `t`. Errors on constants, whose
    /// derivative sequence carries no sign information.
    pub fn of_polynomial(p: &Polynomial, t: &Rational) -> Result<Self, Error> {
        require_nonconstant(p)?;
        let mut values = Vec::with_capacity(p.coeffs().len());
        let mut d = p.clone();
        values.push(d.evaluate(t));
        while !d.is_constant() {
            d = d.derivative();
            values.push(d.evaluate(t));
        }
        values.reverse();
        debug_assert!(!values[0].is_zero());
        Ok(DerivativeSignSequence {
            values,
            point: t.clone(),
        })
    }

    /// Highest derivative first.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn point(&self) -> &Rational {
        &self.point
    }
}

fn require_nonconstant(p: &Polynomial) -> Result<(), Error> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if p.is_constant() {
        Err(Error::ConstantPolynomial)
    } else {
        Ok(())
    }
}

/// Sign alternations of the derivative sequence of `P` at `t`, computed as
/// the alternation count of the shifted coefficients `P(X + t)`.
pub fn variation_at(p: &Polynomial, t: &Rational) -> Result<usize, Error> {
    require_nonconstant(p)?;
    count_alternations(&p.taylor_shift(t))
}

/// Same count from explicit derivative evaluations; a slower route kept for
/// verification.
pub fn variation_at_via_derivatives(p: &Polynomial, t: &Rational) -> Result<usize, Error> {
    let seq = DerivativeSignSequence::of_polynomial(p, t)?;
    Ok(alternations_ignoring_zeros(seq.values.iter()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BudanReport {
    pub a: Rational,
    pub b: Rational,
    pub v_at_a: usize,
    pub v_at_b: usize,
    /// `v_at_a - v_at_b`: upper bound on roots in `(a, b]` with multiplicity.
    pub bound: usize,
    /// `bound % 2`; equals the root count mod 2.
    pub parity: usize,
}

/// Variation-difference root bound for `(a, b]`. Requires `a <= b` and
/// `P(a) != 0`; the right endpoint may be a root and is counted.
pub fn budan_bound(p: &Polynomial, a: &Rational, b: &Rational) -> Result<BudanReport, Error> {
    require_nonconstant(p)?;
    if a > b {
        return Err(Error::IntervalOutOfOrder {
            a: a.clone(),
            b: b.clone(),
        });
    }
    if p.evaluate(a).is_zero() {
        return Err(Error::LeftEndpointIsRoot);
    }
    let v_at_a = variation_at(p, a)?;
    let v_at_b = variation_at(p, b)?;
    let bound = v_at_a
        .checked_sub(v_at_b)
        .expect("variation count cannot increase to the right of a non-root");
    Ok(BudanReport {
        a: a.clone(),
        b: b.clone(),
        v_at_a,
        v_at_b,
        bound,
        parity: bound % 2,
    })
}

/// The same bound computed from sign data alone: two derivative value
/// sequences of equal length whose leading entries share one sign (the
/// highest derivative keeps a constant sign between the points) and whose
/// left sequence has a nonzero final entry (`f(a) != 0`).
pub fn generalized_budan_bound(
    at_a: &DerivativeSignSequence,
    at_b: &DerivativeSignSequence,
) -> Result<usize, Error> {
    if at_a.values.len() != at_b.values.len() {
        return Err(Error::SequenceLengthMismatch {
            left: at_a.values.len(),
            right: at_b.values.len(),
        });
    }
    let lead_a = &at_a.values[0];
    let lead_b = &at_b.values[0];
    if lead_a.is_zero() || lead_b.is_zero() || lead_a.is_positive() != lead_b.is_positive() {
        return Err(Error::LeadingEntryNotConstantSign);
    }
    if at_a.point >= at_b.point {
        return Err(Error::SequencePointsOutOfOrder);
    }
    if at_a.values.last().expect("nonempty sequence").is_zero() {
        return Err(Error::LeftEndpointIsRoot);
    }
    let v_a = alternations_ignoring_zeros(at_a.values.iter());
    let v_b = alternations_ignoring_zeros(at_b.values.iter());
    v_a.checked_sub(v_b).ok_or(Error::InconsistentSignSequences)
}

/// `variation_at` sampled along ascending points.
pub fn variation_profile(
    p: &Polynomial,
    points: &[Rational],
) -> Result<Vec<(Rational, usize)>, Error> {
    require_nonconstant(p)?;
    if points.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::UnsortedPoints);
    }
    points
        .iter()
        .map(|t| Ok((t.clone(), variation_at(p, t)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};
    use num_traits::Signed;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn variation_examples() {
        let q = p(&[-1, 0, 1]); // X^2 - 1
        assert_eq!(variation_at(&q, &int(0)).unwrap(), 1);
        assert_eq!(variation_at(&q, &int(2)).unwrap(), 0); // values 2, 4, 3
        assert_eq!(variation_at(&q, &int(-2)).unwrap(), 2); // values 2, -4, 3
    }

    #[test]
    fn variation_far_right_of_all_roots_is_zero() {
        let q = p(&[6, -7, 0, 1]);
        let b = q.cauchy_root_bound().unwrap();
        assert_eq!(variation_at(&q, &b).unwrap(), 0);
        assert_eq!(
            variation_at(&q, &-&b).unwrap(),
            q.degree().unwrap()
        );
    }

    #[test]
    fn variation_rejects_degenerate_polynomials() {
        assert_eq!(
            variation_at(&Polynomial::zero(), &int(0)),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(variation_at(&p(&[4]), &int(0)), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn derivative_route_agrees_with_shift_route() {
        for q in [
            p(&[-1, 0, 1]),
            p(&[6, -7, 0, 1]),
            p(&[1, 1, 0, 0, 1]),
            p(&[0, -1, 0, 0, 3]),
        ] {
            for t in [int(-2), int(-1), rat(-1, 2), int(0), rat(3, 7), int(1), int(2)] {
                assert_eq!(
                    variation_at(&q, &t).unwrap(),
                    variation_at_via_derivatives(&q, &t).unwrap(),
                    "polynomial {q}, point {t}"
                );
            }
        }
    }

    #[test]
    fn derivative_sequence_values() {
        let seq = DerivativeSignSequence::of_polynomial(&p(&[-1, 0, 1]), &int(2)).unwrap();
        assert_eq!(seq.values(), &[int(2), int(4), int(3)]);
        assert_eq!(seq.point(), &int(2));
    }

    #[test]
    fn budan_bound_examples() {
        let q = p(&[-1, 0, 1]);
        let r = budan_bound(&q, &int(0), &int(2)).unwrap();
        assert_eq!((r.v_at_a, r.v_at_b, r.bound, r.parity), (1, 0, 1, 1));

        let r = budan_bound(&q, &int(-2), &int(2)).unwrap();
        assert_eq!((r.bound, r.parity), (2, 0));

        // no real roots, still an even overestimate
        let r = budan_bound(&p(&[1, 0, 1]), &int(-2), &int(2)).unwrap();
        assert_eq!((r.bound, r.parity), (2, 0));

        // right endpoint root is counted
        let r = budan_bound(&q, &int(0), &int(1)).unwrap();
        assert_eq!(r.bound, 1);

        // empty interval
        let r = budan_bound(&q, &int(2), &int(2)).unwrap();
        assert_eq!(r.bound, 0);
    }

    #[test]
    fn budan_bound_preconditions() {
        let q = p(&[-1, 0, 1]);
        assert_eq!(
            budan_bound(&q, &int(1), &int(2)),
            Err(Error::LeftEndpointIsRoot)
        );
        assert_eq!(
            budan_bound(&q, &int(2), &int(0)),
            Err(Error::IntervalOutOfOrder {
                a: int(2),
                b: int(0)
            })
        );
    }

    #[test]
    fn generalized_bound_matches_instantiated_bound() {
        let seq_a = DerivativeSignSequence::new(vec![int(2), int(0), int(-1)], int(0)).unwrap();
        let seq_b = DerivativeSignSequence::new(vec![int(2), int(4), int(3)], int(2)).unwrap();
        assert_eq!(generalized_budan_bound(&seq_a, &seq_b).unwrap(), 1);
    }

    #[test]
    fn generalized_bound_preconditions() {
        let ok_a = DerivativeSignSequence::new(vec![int(2), int(-1)], int(0)).unwrap();
        let ok_b = DerivativeSignSequence::new(vec![int(2), int(3)], int(1)).unwrap();

        assert_eq!(
            DerivativeSignSequence::new(vec![int(0), int(1)], int(0)),
            Err(Error::LeadingEntryNotConstantSign)
        );
        assert_eq!(
            DerivativeSignSequence::new(vec![], int(0)),
            Err(Error::LeadingEntryNotConstantSign)
        );

        let neg_lead = DerivativeSignSequence::new(vec![int(-2), int(3)], int(1)).unwrap();
        assert_eq!(
            generalized_budan_bound(&ok_a, &neg_lead),
            Err(Error::LeadingEntryNotConstantSign)
        );

        let short = DerivativeSignSequence::new(vec![int(2)], int(1)).unwrap();
        assert_eq!(
            generalized_budan_bound(&ok_a, &short),
            Err(Error::SequenceLengthMismatch { left: 2, right: 1 })
        );

        let root_at_a = DerivativeSignSequence::new(vec![int(2), int(0)], int(0)).unwrap();
        assert_eq!(
            generalized_budan_bound(&root_at_a, &ok_b),
            Err(Error::LeftEndpointIsRoot)
        );

        let swapped = generalized_budan_bound(&ok_b, &ok_a);
        assert_eq!(swapped, Err(Error::SequencePointsOutOfOrder));

        // more variations on the right than on the left is inconsistent
        let flat = DerivativeSignSequence::new(vec![int(1), int(1)], int(0)).unwrap();
        let wavy = DerivativeSignSequence::new(vec![int(1), int(-1)], int(1)).unwrap();
        assert_eq!(
            generalized_budan_bound(&flat, &wavy),
            Err(Error::InconsistentSignSequences)
        );
    }

    #[test]
    fn profile_is_monotone_and_checked() {
        let q = p(&[6, -7, 0, 1]);
        let pts = [int(-4), int(-2), int(0), rat(3, 2), int(4)];
        let profile = variation_profile(&q, &pts).unwrap();
        assert_eq!(profile.len(), 5);
        for w in profile.windows(2) {
            assert!(w[0].1 >= w[1].1);
        }
        assert_eq!(
            variation_profile(&q, &[int(1), int(0)]),
            Err(Error::UnsortedPoints)
        );
    }

    #[test]
    fn variation_drop_across_a_root_is_at_least_its_multiplicity() {
        // (X - 1)^2 (X + 2): drop across 1 is at least 2
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let before = variation_at(&q, &rat(9, 10)).unwrap();
        let after = variation_at(&q, &rat(11, 10)).unwrap();
        assert!(before - after >= 2);
    }

    #[test]
    fn leading_sequence_entry_is_scaled_leading_coefficient() {
        let q = p(&[5, 0, -3, 2]);
        let seq = DerivativeSignSequence::of_polynomial(&q, &rat(-7, 2)).unwrap();
        // n! * lc = 6 * 2
        assert_eq!(seq.values()[0], int(12));
        assert!(!seq.values()[0].is_zero());
        assert!(seq.values()[0].is_positive());
    }
}
