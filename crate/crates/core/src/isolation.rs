//! Real-root isolation by exact bisection.
//!
//! The driver is the variation-difference bound on the squarefree part: a
//! subinterval with bound 0 holds no roots and is discarded, and bound 1
//! certifies exactly one root, because the bound has the parity of the true
//! count. A midpoint that evaluates to zero is itself a root and is emitted
//! exactly.
//!
//! The variation difference alone cannot always resolve an interval: the
//! count drops in even "phantom" steps at roots of higher derivatives, and
//! such a drop point that bisection midpoints never hit exactly (or that
//! sits at a subinterval endpoint) keeps the bound at 2 or more forever --
//! `X^2 + 1` over `(-1/2, 0]` is already such a case. When the bound is
//! indecisive, the interval is therefore retested with the alternation count
//! of `(1+X)^n S(l + (h-l)/(1+X))`, whose variations count roots of the open
//! interval and provably fall to 0 or 1 once bisection separates the roots.
//! That test reuses the same coefficient-counting rule and keeps the
//! variation bound as the primary decision wherever it is decisive.
//!
//! Multiplicities come from the squarefree decomposition: the factor that
//! changes sign over (or vanishes at) the isolating location owns the root.

use num_traits::{One, Signed, Zero};

use crate::budan::variation_at;
use crate::error::Error;
use crate::poly::{rat, squarefree_decomposition, squarefree_part, Polynomial, Rational,
    SquarefreeFactor};
use crate::sign_rules::count_alternations;

/// Bisection depth limit used by `isolate_real_roots`.
pub const DEFAULT_DEPTH_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub enum RootLocation {
    /// The root itself, hit exactly.
    Point(Rational),
    /// Contains exactly one distinct root, strictly between the endpoints;
    /// neither endpoint is a root.
    Interval { low: Rational, high: Rational },
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
}

struct Isolator<'a> {
    /// Monic squarefree part: the product of the factors.
    s: Polynomial,
    s_reflected: Polynomial,
    factors: &'a [SquarefreeFactor],
    cap: usize,
    roots: Vec<IsolatedRoot>,
}

impl Isolator<'_> {
    fn variation(&self, t: &Rational) -> usize {
        variation_at(&self.s, t).expect("squarefree part has degree >= 1")
    }

    /// Alternation count of `(1+X)^n A(1/(1+X))` for `A(X) = S(l + (h-l)X)`:
    /// an upper bound with matching parity for the roots in the open
    /// interval `(l, h)`, decisive once the interval is small enough.
    fn open_interval_count(&self, l: &Rational, h: &Rational) -> usize {
        let a = self.s.taylor_shift(l).scale_variable(&(h - l));
        let t = a.reversed().taylor_shift(&Rational::one());
        count_alternations(&t).expect("transform of a nonzero polynomial is nonzero")
    }

    /// Multiplicity of the single root inside `(l, h)`; the owning factor is
    /// the one that changes sign.
    fn interval_multiplicity(&self, l: &Rational, h: &Rational) -> usize {
        for f in self.factors {
            let fl = f.factor.evaluate(l);
            let fh = f.factor.evaluate(h);
            debug_assert!(!fl.is_zero() && !fh.is_zero());
            if fl.is_positive() != fh.is_positive() {
                return f.multiplicity;
            }
        }
        unreachable!("an isolating interval contains a root of exactly one factor")
    }

    fn point_multiplicity(&self, m: &Rational) -> usize {
        for f in self.factors {
            if f.factor.evaluate(m).is_zero() {
                return f.multiplicity;
            }
        }
        unreachable!("an emitted point is a root of exactly one factor")
    }

    /// A point `from + step` with no roots of `poly` in `(from, from + step]`,
    /// shrinking `step` until the variation count matches the count at
    /// `from`. The count at a point equals its limit from the right even
    /// when `from` is a root, so equality certifies a root-free gap.
    fn clear_gap(
        &self,
        poly: &Polynomial,
        from: &Rational,
        mut step: Rational,
    ) -> Result<Rational, Error> {
        let v_from = variation_at(poly, from).expect("degree >= 1");
        for _ in 0..=self.cap {
            let t = from + &step;
            if variation_at(poly, &t).expect("degree >= 1") == v_from {
                return Ok(t);
            }
            step = step * rat(1, 2);
        }
        Err(Error::DepthCapExceeded { cap: self.cap })
    }

    /// Some `t` in `(m, h)` with no roots of `S` in `(m, t]`.
    fn clear_above(&self, m: &Rational, h: &Rational) -> Result<Rational, Error> {
        self.clear_gap(&self.s, m, (h - m) * rat(1, 2))
    }

    /// Some `t` in `(l, m)` with no roots of `S` in `[t, m)`, via the
    /// reflected polynomial.
    fn clear_below(&self, l: &Rational, m: &Rational) -> Result<Rational, Error> {
        let t = self.clear_gap(&self.s_reflected, &-m, (m - l) * rat(1, 2))?;
        Ok(-t)
    }

    fn emit_interval(&mut self, low: Rational, high: Rational) {
        let multiplicity = self.interval_multiplicity(&low, &high);
        self.roots.push(IsolatedRoot {
            location: RootLocation::Interval { low, high },
            multiplicity,
        });
    }

    /// Isolates the roots of `S` in `(l, h)`; neither endpoint is a root.
    fn recurse(
        &mut self,
        l: Rational,
        h: Rational,
        v_l: usize,
        v_h: usize,
        depth: usize,
    ) -> Result<(), Error> {
        let bound = v_l
            .checked_sub(v_h)
            .expect("variation count is nonincreasing");
        if bound == 0 {
            return Ok(());
        }
        if bound == 1 {
            self.emit_interval(l, h);
            return Ok(());
        }
        let open_count = self.open_interval_count(&l, &h);
        if open_count == 0 {
            return Ok(());
        }
        if open_count == 1 {
            self.emit_interval(l, h);
            return Ok(());
        }
        if depth >= self.cap {
            return Err(Error::DepthCapExceeded { cap: self.cap });
        }
        let mid = (&l + &h) * rat(1, 2);
        if !self.s.evaluate(&mid).is_zero() {
            let v_mid = self.variation(&mid);
            self.recurse(l, mid.clone(), v_l, v_mid, depth + 1)?;
            self.recurse(mid, h, v_mid, v_h, depth + 1)
        } else {
            // the midpoint is a root: emit it exactly and resume on each side
            // beyond a certified root-free gap, so endpoints stay non-roots
            let m1 = self.clear_below(&l, &mid)?;
            let m2 = self.clear_above(&mid, &h)?;
            let v_m1 = self.variation(&m1);
            self.recurse(l, m1, v_l, v_m1, depth + 1)?;
            let multiplicity = self.point_multiplicity(&mid);
            self.roots.push(IsolatedRoot {
                location: RootLocation::Point(mid),
                multiplicity,
            });
            let v_m2 = self.variation(&m2);
            self.recurse(m2, h, v_m2, v_h, depth + 1)
        }
    }
}

/// Isolates every distinct real root of `P` with the default depth cap.
/// Results are sorted left to right; intervals are pairwise disjoint, each
/// containing exactly one distinct root, tagged with its multiplicity.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<IsolatedRoot>, Error> {
    isolate_real_roots_with_cap(p, DEFAULT_DEPTH_CAP)
}

/// `isolate_real_roots` with an explicit bisection depth cap; exceeding the
/// cap is an error rather than an incomplete answer.
pub fn isolate_real_roots_with_cap(
    p: &Polynomial,
    depth_cap: usize,
) -> Result<Vec<IsolatedRoot>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let factors = squarefree_decomposition(p)?;
    let s = factors
        .iter()
        .fold(Polynomial::one(), |acc, f| &acc * &f.factor);
    // every real root lies strictly inside (-B, B), so the endpoints are
    // never roots
    let b = p.cauchy_root_bound()?;
    let neg_b = -&b;
    debug_assert!(!s.evaluate(&neg_b).is_zero() && !s.evaluate(&b).is_zero());
    let mut iso = Isolator {
        s_reflected: s.reflect(),
        s,
        factors: &factors,
        cap: depth_cap,
        roots: Vec::new(),
    };
    let v_l = iso.variation(&neg_b);
    let v_h = iso.variation(&b);
    iso.recurse(neg_b, b, v_l, v_h, 0)?;
    Ok(iso.roots)
}

/// Shrinks an isolating interval to width at most `width` by sign-change
/// bisection on the squarefree part, preserving the single-root guarantee.
/// Exact points are returned unchanged; a bisection midpoint that hits the
/// root turns the interval into an exact point.
pub fn refine(
    root: &IsolatedRoot,
    p: &Polynomial,
    width: &Rational,
) -> Result<IsolatedRoot, Error> {
    if width <= &Rational::zero() {
        return Err(Error::NonPositiveWidth);
    }
    let (low, high) = match &root.location {
        RootLocation::Point(_) => return Ok(root.clone()),
        RootLocation::Interval { low, high } => (low.clone(), high.clone()),
    };
    let s = squarefree_part(p)?;
    let at_low = s.evaluate(&low);
    let at_high = s.evaluate(&high);
    if at_low.is_zero() {
        return Err(Error::NotAnIsolatingInterval);
    }
    if at_high.is_zero() {
        return Ok(IsolatedRoot {
            location: RootLocation::Point(high),
            multiplicity: root.multiplicity,
        });
    }
    if at_low.is_positive() == at_high.is_positive() {
        return Err(Error::NotAnIsolatingInterval);
    }
    let left_sign = at_low.is_positive();
    let (mut l, mut h) = (low, high);
    while &(&h - &l) > width {
        let mid = (&l + &h) * rat(1, 2);
        let at_mid = s.evaluate(&mid);
        if at_mid.is_zero() {
            return Ok(IsolatedRoot {
                location: RootLocation::Point(mid),
                multiplicity: root.multiplicity,
            });
        }
        if at_mid.is_positive() == left_sign {
            l = mid;
        } else {
            h = mid;
        }
    }
    Ok(IsolatedRoot {
        location: RootLocation::Interval { low: l, high: h },
        multiplicity: root.multiplicity,
    })
}
