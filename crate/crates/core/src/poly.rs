//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of power and the vector never
//! ends in a zero, so the zero polynomial is the empty vector and `degree`
//! returns `None` for it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number; always kept in lowest terms with a
/// positive denominator by the underlying representation.
pub type Rational = num_rational::BigRational;

/// The rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The rational `n / 1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    /// Ascending powers; empty for the zero polynomial, last entry nonzero.
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros so the representation invariant holds.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    /// Ascending integer coefficients, e.g. `[-1, 0, 1]` is `X^2 - 1`.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for degree 0.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative; constants map to zero.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// `P(X + t)` by iterated synthetic division; exact and degree-preserving.
    pub fn taylor_shift(&self, t: &Rational) -> Polynomial {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n.saturating_sub(1) {
            for j in (i..n - 1).rev() {
                let add = t * &c[j + 1];
                c[j] = &c[j] + add;
            }
        }
        Polynomial { coeffs: c }
    }

    /// `P(-X)`: negates the coefficient of every odd power.
    pub fn reflect(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial { coeffs }
    }

    /// Factors out the highest power of `X` dividing `P`, returning the
    /// cofactor and the multiplicity of the root at zero.
    pub fn strip_zero_roots(&self) -> Result<(Polynomial, usize), Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let z0 = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        Ok((Polynomial::new(self.coeffs[z0..].to_vec()), z0))
    }

    /// Scalar multiple `c * P`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `P(w * X)`: multiplies the coefficient of `X^i` by `w^i`.
    pub(crate) fn scale_variable(&self, w: &Rational) -> Polynomial {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * &pow;
                pow = &pow * w;
                scaled
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// `X^n * P(1/X)` for `n = deg P`: the coefficient sequence reversed.
    pub(crate) fn reversed(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }

    /// Scalar multiple with leading coefficient 1; zero maps to zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        let d = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lc = divisor.leading_coeff().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d] / &lc;
            if !q.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let sub = &q * dc;
                    rem[k + i] = &rem[k + i] - sub;
                }
            }
            quot[k] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Division known to be exact; panics on a nonzero remainder, which would
    /// indicate a broken algebraic invariant in the caller.
    pub(crate) fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self
            .div_rem(divisor)
            .expect("exact division by nonzero polynomial");
        assert!(r.is_zero(), "division expected to be exact");
        q
    }

    /// `1 + max |a_i| / |a_n|` over `i < n`; every real root lies strictly
    /// inside `(-B, B)`.
    pub fn cauchy_root_bound(&self) -> Result<Rational, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let lead = self.leading_coeff().expect("nonzero").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .expect("degree >= 1 leaves at least one lower coefficient");
        Ok(max + Rational::one())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// Descending-power display: `3x^4 - x`, `x^2 - 1`, `7/2x^2 + 1/3`, `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            if i == 0 || !unit {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] = &coeffs[i + j] + prod;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Monic greatest common divisor by the Euclidean algorithm; the gcd of a
/// polynomial with zero is its monic multiple.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeroPolynomials);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.div_rem(&y).expect("nonzero divisor").1;
        // Rescaling to monic at every step keeps coefficient growth in check.
        x = y.monic();
        y = r;
    }
    Ok(x.monic())
}

/// `P / gcd(P, P')`: the monic polynomial with the same distinct roots as
/// `P`, each simple.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let g = poly_gcd(p, &p.derivative())?;
    Ok(p.exact_div(&g).monic())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactor {
    /// Monic and squarefree; factors of a decomposition are pairwise coprime.
    pub factor: Polynomial,
    pub multiplicity: usize,
}

/// Yun decomposition: returns the monic squarefree factors of `P` grouped by
/// multiplicity, in increasing multiplicity order, skipping trivial ones.
/// The product of `factor^multiplicity` equals `P` up to a nonzero constant.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<SquarefreeFactor>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let deriv = p.derivative();
    let g = poly_gcd(p, &deriv)?;
    if g.is_constant() {
        return Ok(vec![SquarefreeFactor {
            factor: p.monic(),
            multiplicity: 1,
        }]);
    }
    let mut factors = Vec::new();
    let mut w = p.exact_div(&g);
    let mut z = &deriv.exact_div(&g) - &w.derivative();
    let mut multiplicity = 1;
    while !w.is_constant() {
        let h = poly_gcd(&w, &z)?;
        if !h.is_constant() {
            factors.push(SquarefreeFactor {
                factor: h.clone(),
                multiplicity,
            });
        }
        w = w.exact_div(&h);
        z = &z.exact_div(&h) - &w.derivative();
        multiplicity += 1;
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn new_strips_trailing_zeros() {
        let q = Polynomial::new(vec![int(1), int(2), int(0), int(0)]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.coeffs().len(), 2);
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::new(vec![int(0), int(0)]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn leading_coefficient() {
        assert_eq!(p(&[6, -7, 0, 1]).leading_coeff(), Some(&int(1)));
        assert_eq!(Polynomial::zero().leading_coeff(), None);
    }

    #[test]
    fn evaluate_at_rational_point() {
        // X^3 - 7X + 6 at 1/2
        let q = p(&[6, -7, 0, 1]);
        assert_eq!(q.evaluate(&rat(1, 2)), rat(21, 8));
        assert_eq!(q.evaluate(&int(1)), int(0));
        assert_eq!(Polynomial::zero().evaluate(&int(3)), int(0));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[6, -7, 0, 1]).derivative(), p(&[-7, 0, 3]));
        assert_eq!(p(&[5]).derivative(), Polynomial::zero());
        assert_eq!(Polynomial::zero().derivative(), Polynomial::zero());
    }

    #[test]
    fn taylor_shift_examples() {
        // (X + 2)^3 - 7(X + 2) + 6 = X^3 + 6X^2 + 5X
        assert_eq!(p(&[6, -7, 0, 1]).taylor_shift(&int(2)), p(&[0, 5, 6, 1]));
        assert_eq!(p(&[-1, 0, 1]).taylor_shift(&int(0)), p(&[-1, 0, 1]));
        assert_eq!(Polynomial::zero().taylor_shift(&int(5)), Polynomial::zero());
    }

    #[test]
    fn taylor_shift_preserves_degree() {
        let q = p(&[3, 0, -2, 11]);
        assert_eq!(q.taylor_shift(&rat(-7, 3)).degree(), q.degree());
    }

    #[test]
    fn reflect_negates_odd_powers() {
        // P(X) = X^3 - 7X + 6 -> P(-X) = -X^3 + 7X + 6
        assert_eq!(p(&[6, -7, 0, 1]).reflect(), p(&[6, 7, 0, -1]));
        let q = p(&[1, 2, 3]);
        assert_eq!(q.reflect().reflect(), q);
    }

    #[test]
    fn strip_zero_roots_examples() {
        let (q, z0) = p(&[0, -1, 0, 0, 3]).strip_zero_roots().unwrap();
        assert_eq!(q, p(&[-1, 0, 0, 3]));
        assert_eq!(z0, 1);

        let (q, z0) = p(&[0, 0, 0, 1]).strip_zero_roots().unwrap();
        assert_eq!(q, Polynomial::one());
        assert_eq!(z0, 3);

        let (q, z0) = p(&[2, 1]).strip_zero_roots().unwrap();
        assert_eq!(q, p(&[2, 1]));
        assert_eq!(z0, 0);

        assert_eq!(
            Polynomial::zero().strip_zero_roots(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn arithmetic_ops() {
        let a = p(&[1, 1]); // X + 1
        let b = p(&[-1, 1]); // X - 1
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(-&a, p(&[-1, -1]));
        assert_eq!(a.scale(&int(3)), p(&[3, 3]));
    }

    #[test]
    fn mul_matches_evaluation() {
        let a = p(&[2, 0, -1, 5]);
        let b = p(&[-3, 1, 4]);
        let prod = &a * &b;
        for t in [-2i64, -1, 0, 1, 3] {
            let x = int(t);
            assert_eq!(prod.evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        }
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[6, -7, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-6, 1, 1]));

        let (q, r) = p(&[1, 1]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[1, 1]));

        assert_eq!(
            p(&[1]).div_rem(&Polynomial::zero()),
            Err(Error::DivisionByZeroPolynomial)
        );
    }

    #[test]
    fn monic_normalization() {
        assert_eq!(p(&[2, -4, 2]).monic(), p(&[1, -2, 1]));
        assert_eq!(Polynomial::zero().monic(), Polynomial::zero());
    }

    #[test]
    fn gcd_examples() {
        let g = poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));

        // gcd with zero is the monic multiple of the other argument
        let g = poly_gcd(&p(&[2, 4]), &Polynomial::zero()).unwrap();
        assert_eq!(g, p(&[1, 2]).monic());

        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::GcdOfZeroPolynomials)
        );

        // coprime inputs give the constant 1
        let g = poly_gcd(&p(&[-1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(g, Polynomial::one());
    }

    #[test]
    fn squarefree_part_collapses_multiplicities() {
        // (X - 1)^2 (X + 2) -> (X - 1)(X + 2)
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(squarefree_part(&q).unwrap(), &p(&[-1, 1]) * &p(&[2, 1]));
        assert_eq!(squarefree_part(&p(&[7])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn squarefree_decomposition_examples() {
        // (X - 1)^2 (X + 2)
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let factors = squarefree_decomposition(&q).unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].factor, p(&[2, 1]));
        assert_eq!(factors[0].multiplicity, 1);
        assert_eq!(factors[1].factor, p(&[-1, 1]));
        assert_eq!(factors[1].multiplicity, 2);
    }

    #[test]
    fn squarefree_decomposition_pure_power() {
        // X^3 -> [(X, 3)]
        let factors = squarefree_decomposition(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].factor, Polynomial::x());
        assert_eq!(factors[0].multiplicity, 3);
    }

    #[test]
    fn squarefree_decomposition_squarefree_input() {
        let factors = squarefree_decomposition(&p(&[-2, 0, 2])).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].factor, p(&[-1, 0, 1]));
        assert_eq!(factors[0].multiplicity, 1);
    }

    #[test]
    fn squarefree_decomposition_rejects_degenerate_input() {
        assert_eq!(
            squarefree_decomposition(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            squarefree_decomposition(&p(&[3])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn cauchy_bound_examples() {
        assert_eq!(p(&[-1, 0, 1]).cauchy_root_bound().unwrap(), int(2));
        assert_eq!(p(&[6, -7, 0, 1]).cauchy_root_bound().unwrap(), int(8));
        assert_eq!(p(&[-1, 0, 0, 3]).cauchy_root_bound().unwrap(), rat(4, 3));
        assert_eq!(p(&[0, 0, 0, 1]).cauchy_root_bound().unwrap(), int(1));
        assert_eq!(p(&[5]).cauchy_root_bound(), Err(Error::ConstantPolynomial));
        assert_eq!(
            Polynomial::zero().cauchy_root_bound(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn cauchy_bound_contains_constructed_roots() {
        // product of (X - r) for rational roots r; every root must satisfy |r| < B
        let roots = [rat(5, 2), rat(-19, 3), int(4), rat(1, 7)];
        let mut q = Polynomial::one();
        for r in &roots {
            q = &q * &Polynomial::new(vec![-r.clone(), Rational::one()]);
        }
        let b = q.cauchy_root_bound().unwrap();
        for r in &roots {
            assert!(r.abs() < b);
        }
    }

    #[test]
    fn display_descending_powers() {
        assert_eq!(p(&[0, -1, 0, 0, 3]).to_string(), "3x^4 - x");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(p(&[6, -7, 0, 1]).to_string(), "x^3 - 7x + 6");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
        assert_eq!(
            Polynomial::new(vec![rat(1, 3), rat(7, 2)]).to_string(),
            "7/2x + 1/3"
        );
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn scale_variable_substitutes() {
        let q = p(&[1, 1, 1]); // X^2 + X + 1
        let s = q.scale_variable(&int(2)); // 4X^2 + 2X + 1
        assert_eq!(s, p(&[1, 2, 4]));
        for t in [-1i64, 0, 2] {
            let x = int(t);
            assert_eq!(s.evaluate(&x), q.evaluate(&(int(2) * &x)));
        }
    }

    #[test]
    fn reversed_flips_coefficients() {
        assert_eq!(p(&[6, -7, 0, 1]).reversed(), p(&[1, 0, -7, 6]));
        // trailing zeros of the reversal are stripped: X^2 + X reverses to X + 1
        assert_eq!(p(&[0, 1, 1]).reversed(), p(&[1, 1]));
    }
}
