//! Alternation and permanence counts of coefficient sequences.
//!
//! Counts run over the coefficients from the leading one down to the lowest
//! nonzero one; trailing zero coefficients (the root at zero) never
//! participate. Zero coefficients inside that window are resolved by
//! convention rather than skipped:
//!
//! * for alternations, a zero takes the sign of its higher-power neighbor,
//!   which is the same as ignoring zeros entirely;
//! * for permanences, a zero takes the sign opposite to its higher-power
//!   neighbor, so signs alternate across a zero run.
//!
//! Both conventions minimize their count over all ways of assigning signs to
//! the zero coefficients, which is what makes the resulting root bounds as
//! tight as the coefficient signs allow.

use std::fmt;

use num_traits::Signed;

use crate::error::Error;
use crate::poly::{Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `None` for zero.
    pub fn of(x: &Rational) -> Option<Sign> {
        if x.is_positive() {
            Some(Sign::Plus)
        } else if x.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Counts the sign changes in a value sequence, ignoring zero entries.
pub(crate) fn alternations_ignoring_zeros<'a, I>(values: I) -> usize
where
    I: IntoIterator<Item = &'a Rational>,
{
    let mut count = 0;
    let mut last: Option<Sign> = None;
    for v in values {
        if let Some(s) = Sign::of(v) {
            if last.map_or(false, |prev| prev != s) {
                count += 1;
            }
            last = Some(s);
        }
    }
    count
}

/// Raw signs of the counting window in descending power order, `None` for a
/// zero coefficient. Errors on the zero polynomial.
fn window_signs(p: &Polynomial) -> Result<Vec<Option<Sign>>, Error> {
    let (_, z0) = p.strip_zero_roots()?;
    let signs = p.coeffs()[z0..]
        .iter()
        .rev()
        .map(Sign::of)
        .collect::<Vec<_>>();
    Ok(signs)
}

/// Signs of the counting window under the alternation convention, descending
/// from the leading coefficient.
pub fn alternation_signs(p: &Polynomial) -> Result<Vec<Sign>, Error> {
    let raw = window_signs(p)?;
    let mut current = raw[0].expect("window starts at the leading coefficient");
    Ok(raw
        .into_iter()
        .map(|s| {
            if let Some(s) = s {
                current = s;
            }
            current
        })
        .collect())
}

/// Signs of the counting window under the permanence convention: a zero run
/// alternates starting opposite to the nonzero coefficient above it.
pub fn permanence_signs(p: &Polynomial) -> Result<Vec<Sign>, Error> {
    let raw = window_signs(p)?;
    let mut current = raw[0].expect("window starts at the leading coefficient");
    Ok(raw
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            current = match s {
                Some(s) => s,
                None => {
                    debug_assert!(i > 0);
                    current.opposite()
                }
            };
            current
        })
        .collect())
}

/// Number of adjacent sign changes under the alternation convention; equal
/// to the count obtained by simply ignoring zero coefficients.
pub fn count_alternations(p: &Polynomial) -> Result<usize, Error> {
    let signs = alternation_signs(p)?;
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Number of adjacent sign repetitions under the permanence convention.
pub fn count_permanences(p: &Polynomial) -> Result<usize, Error> {
    let signs = permanence_signs(p)?;
    Ok(signs.windows(2).filter(|w| w[0] == w[1]).count())
}

/// Alternation and permanence counts of the window after giving each zero
/// coefficient an explicit sign. `assignment` lists one sign per zero
/// coefficient of the window in descending power order; every adjacent pair
/// of the fully signed sequence is then either an alternation or a
/// permanence, so the two counts sum to `degree - zero_roots`.
pub fn counts_under_assignment(
    p: &Polynomial,
    assignment: &[Sign],
) -> Result<(usize, usize), Error> {
    let raw = window_signs(p)?;
    let zeros = raw.iter().filter(|s| s.is_none()).count();
    if zeros != assignment.len() {
        return Err(Error::AssignmentLengthMismatch {
            expected: zeros,
            got: assignment.len(),
        });
    }
    let mut next = assignment.iter();
    let signs: Vec<Sign> = raw
        .into_iter()
        .map(|s| s.unwrap_or_else(|| *next.next().expect("one assigned sign per zero")))
        .collect();
    let alternations = signs.windows(2).filter(|w| w[0] != w[1]).count();
    let permanences = signs.len() - 1 - alternations;
    Ok((alternations, permanences))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCounts {
    pub alternations: usize,
    pub permanences: usize,
    /// Multiplicity of the root at zero.
    pub zero_roots: usize,
    pub degree: usize,
}

/// Alternation and permanence counts of a nonzero polynomial.
pub fn sign_counts(p: &Polynomial) -> Result<SignCounts, Error> {
    Ok(SignCounts {
        alternations: count_alternations(p)?,
        permanences: count_permanences(p)?,
        zero_roots: p.strip_zero_roots()?.1,
        degree: p.degree().expect("nonzero polynomial"),
    })
}

/// One maximal run of zero coefficients strictly between nonzero ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroBlock {
    /// Sign of the nonzero coefficient just above the run.
    pub left_sign: Sign,
    /// Sign of the nonzero coefficient just below the run.
    pub right_sign: Sign,
    /// Run length `r >= 1`.
    pub zero_run: usize,
    /// Adjacent pairs spanned by the block: `r + 1`.
    pub pair_count: usize,
    /// Alternations the block contributes under the alternation convention.
    pub alternations: usize,
    /// Permanences the block contributes under the permanence convention.
    pub permanences: usize,
    /// `pair_count - alternations - permanences`; always even.
    pub loss: usize,
}

/// The internal zero runs of the counting window, highest powers first.
/// Block losses sum to `degree - zero_roots - alternations - permanences`,
/// the certified lower bound on the number of non-real roots.
pub fn de_gua_blocks(p: &Polynomial) -> Result<Vec<ZeroBlock>, Error> {
    let raw = window_signs(p)?;
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < raw.len() {
        if raw[i].is_some() {
            i += 1;
            continue;
        }
        let start = i;
        while raw[i].is_none() {
            i += 1;
        }
        // window bounds are nonzero, so the run has nonzero neighbors
        let left = raw[start - 1].expect("nonzero bound above the run");
        let right = raw[i].expect("nonzero bound below the run");
        let r = i - start;
        let (alternations, permanences) = if r % 2 == 0 {
            if left != right {
                (1, 0)
            } else {
                (0, 1)
            }
        } else if left == right {
            (0, 0)
        } else {
            (1, 1)
        };
        blocks.push(ZeroBlock {
            left_sign: left,
            right_sign: right,
            zero_run: r,
            pair_count: r + 1,
            alternations,
            permanences,
            loss: r + 1 - alternations - permanences,
        });
    }
    Ok(blocks)
}

/// Root bounds read off the sign counts of a nonconstant polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootBoundReport {
    pub counts: SignCounts,
    /// Upper bound on positive roots counted with multiplicity.
    pub positive_upper: usize,
    /// Upper bound on negative roots counted with multiplicity.
    pub negative_upper: usize,
    /// Positive-root count mod 2.
    pub positive_parity: usize,
    /// Negative-root count mod 2.
    pub negative_parity: usize,
    /// Certified lower bound on the number of non-real roots; always even.
    pub imaginary_lower: usize,
}

/// Bounds the root distribution of `P` from its coefficient signs alone:
/// at most `alternations` positive roots and `permanences` negative roots
/// (with matching parities), hence at least
/// `degree - zero_roots - alternations - permanences` non-real roots.
pub fn descartes_report(p: &Polynomial) -> Result<RootBoundReport, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let counts = sign_counts(p)?;
    Ok(RootBoundReport {
        counts,
        positive_upper: counts.alternations,
        negative_upper: counts.permanences,
        positive_parity: counts.alternations % 2,
        negative_parity: counts.permanences % 2,
        imaginary_lower: counts.degree - counts.zero_roots - counts.alternations
            - counts.permanences,
    })
}
