//! Sturm chains: an exact root-counting oracle.
//!
//! The chain is built on the squarefree part of the input, so its variation
//! difference counts distinct roots; multiplicities are recovered through
//! the squarefree decomposition. Intervals are half-open `(a, b]`
//! throughout, matching the interval bound module.

use num_traits::Zero;

use crate::error::Error;
use crate::poly::{squarefree_decomposition, squarefree_part, Polynomial, Rational};
use crate::sign_rules::alternations_ignoring_zeros;

#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain {
    /// Starts with the squarefree part and its derivative, then negated
    /// remainders, each rescaled by a positive constant; ends with a nonzero
    /// constant.
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.chain
    }

    /// Sign variations of the chain values at `t`, zeros dropped.
    pub fn variations_at(&self, t: &Rational) -> usize {
        let values: Vec<Rational> = self.chain.iter().map(|q| q.evaluate(t)).collect();
        alternations_ignoring_zeros(values.iter())
    }
}

/// Divides by the absolute value of the leading coefficient: a positive
/// rescaling, so chain sign patterns are preserved while coefficients stay
/// small.
fn positive_normalize(p: &Polynomial) -> Polynomial {
    match p.leading_coeff() {
        None => Polynomial::zero(),
        Some(lc) => {
            let m = p.monic();
            if lc < &Rational::zero() {
                -&m
            } else {
                m
            }
        }
    }
}

/// Builds the Sturm chain of the squarefree part of `P`.
pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let s = squarefree_part(p)?;
    let mut chain = vec![s.clone(), positive_normalize(&s.derivative())];
    loop {
        let r = {
            let prev = &chain[chain.len() - 2];
            let cur = &chain[chain.len() - 1];
            prev.div_rem(cur).expect("chain entries are nonzero").1
        };
        if r.is_zero() {
            break;
        }
        chain.push(positive_normalize(&-&r));
    }
    debug_assert!(chain.last().map_or(false, |q| q.is_constant() && !q.is_zero()));
    debug_assert!(chain.len() <= s.coeffs().len());
    Ok(SturmChain { chain })
}

/// Number of distinct roots of the chain's polynomial in `(a, b]`, as the
/// variation drop between the endpoints. Endpoints may be roots: a root at
/// `a` is excluded, a root at `b` counted.
pub fn count_distinct_roots(chain: &SturmChain, a: &Rational, b: &Rational) -> Result<usize, Error> {
    if a > b {
        return Err(Error::IntervalOutOfOrder {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let va = chain.variations_at(a);
    let vb = chain.variations_at(b);
    Ok(va
        .checked_sub(vb)
        .expect("chain variations cannot increase to the right"))
}

/// Number of roots of `P` in `(a, b]` counted with multiplicity: each
/// squarefree factor is counted through its own chain and weighted by its
/// multiplicity.
pub fn count_roots_with_multiplicity(
    p: &Polynomial,
    a: &Rational,
    b: &Rational,
) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if a > b {
        return Err(Error::IntervalOutOfOrder {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let mut total = 0;
    for sf in squarefree_decomposition(p)? {
        let chain = sturm_chain(&sf.factor)?;
        total += sf.multiplicity * count_distinct_roots(&chain, a, b)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactRootCounts {
    /// Positive roots, with multiplicity.
    pub positive: usize,
    /// Negative roots, with multiplicity.
    pub negative: usize,
    /// Multiplicity of the root at zero.
    pub zero: usize,
}

/// Exact signed root counts of `P`, with multiplicity. The zero-root
/// cofactor `Q` has all roots strictly inside `(-B, B)` for its Cauchy bound
/// `B` and no root at the origin, so one chain per squarefree factor counts
/// positives on `(0, B]` and negatives on `(-B, 0]`.
pub fn exact_root_counts(p: &Polynomial) -> Result<ExactRootCounts, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (q, zero) = p.strip_zero_roots()?;
    if q.is_constant() {
        return Ok(ExactRootCounts {
            positive: 0,
            negative: 0,
            zero,
        });
    }
    let b = q.cauchy_root_bound()?;
    let origin = Rational::zero();
    let mut positive = 0;
    let mut negative = 0;
    for sf in squarefree_decomposition(&q)? {
        let chain = sturm_chain(&sf.factor)?;
        positive += sf.multiplicity * count_distinct_roots(&chain, &origin, &b)?;
        negative += sf.multiplicity * count_distinct_roots(&chain, &-&b, &origin)?;
    }
    Ok(ExactRootCounts {
        positive,
        negative,
        zero,
    })
}
