//! Text forms accepted on the command line.
//!
//! Polynomials come either as expressions — signed terms like `3x^4`, `-x`,
//! `+7/2x^2`, `- 1`, case-insensitive variable, whitespace anywhere between
//! tokens — or as a bracketed coefficient list `[a_n, ..., a_0]` in
//! descending power order with integer or `p/q` entries. Terms with equal
//! exponent are summed. Empty input is the zero polynomial; rejecting it is
//! the analysis commands' job, not the parser's.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polysign::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input at which parsing failed.
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn digits(&mut self, what: &str) -> Result<&'a [u8], ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected {what}")));
        }
        Ok(&self.bytes[start..self.pos])
    }

    /// Consumes a leading `+` or `-` if present; returns whether it was `-`.
    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    /// Unsigned `p` or `p/q` with a nonzero denominator.
    fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let numerator = BigInt::parse_bytes(self.digits("a number")?, 10).expect("digit run");
        if self.peek() != Some(b'/') {
            return Ok(Rational::from(numerator));
        }
        self.pos += 1;
        let den_pos = self.pos;
        let denominator = BigInt::parse_bytes(self.digits("a denominator")?, 10).expect("digit run");
        if denominator.is_zero() {
            return Err(ParseError {
                position: den_pos,
                message: "zero denominator".into(),
            });
        }
        Ok(Rational::new(numerator, denominator))
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let negative = self.sign().unwrap_or(false);
        self.skip_ws();
        let r = self.unsigned_rational()?;
        Ok(if negative { -r } else { r })
    }
}

/// A standalone rational argument such as an interval endpoint or a width.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut s = Scanner::new(text);
    let r = s.signed_rational()?;
    s.expect_end()?;
    Ok(r)
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_ws();
    if s.peek() == Some(b'[') {
        coefficient_list(&mut s)
    } else {
        expression(&mut s)
    }
}

fn coefficient_list(s: &mut Scanner) -> Result<Polynomial, ParseError> {
    s.pos += 1;
    s.skip_ws();
    let mut descending: Vec<Rational> = Vec::new();
    if s.peek() == Some(b']') {
        s.pos += 1;
    } else {
        loop {
            descending.push(s.signed_rational()?);
            s.skip_ws();
            match s.peek() {
                Some(b',') => s.pos += 1,
                Some(b']') => {
                    s.pos += 1;
                    break;
                }
                _ => return Err(s.error("expected ',' or ']'")),
            }
        }
    }
    s.expect_end()?;
    descending.reverse();
    Ok(Polynomial::new(descending))
}

fn expression(s: &mut Scanner) -> Result<Polynomial, ParseError> {
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut first = true;
    loop {
        s.skip_ws();
        if s.at_end() {
            break;
        }
        let negative = match s.sign() {
            Some(n) => n,
            None if first => false,
            None => return Err(s.error("expected '+' or '-' before the next term")),
        };
        s.skip_ws();
        let (coefficient, explicit) = match s.peek() {
            Some(b'0'..=b'9') => (s.unsigned_rational()?, true),
            _ => (Rational::one(), false),
        };
        s.skip_ws();
        let exponent = match s.peek() {
            Some(b'x' | b'X') => {
                s.pos += 1;
                s.skip_ws();
                if s.peek() == Some(b'^') {
                    s.pos += 1;
                    s.skip_ws();
                    let digit_pos = s.pos;
                    let digits = s.digits("an exponent after '^'")?;
                    std::str::from_utf8(digits)
                        .expect("digit run")
                        .parse::<usize>()
                        .map_err(|_| ParseError {
                            position: digit_pos,
                            message: "exponent too large".into(),
                        })?
                } else {
                    1
                }
            }
            _ if explicit => 0,
            _ => return Err(s.error("expected a coefficient or 'x'")),
        };
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, Rational::zero());
        }
        let term = if negative { -coefficient } else { coefficient };
        coeffs[exponent] += term;
        first = false;
    }
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polysign::rat;

    fn asc(p: &Polynomial) -> Vec<Rational> {
        p.coeffs().to_vec()
    }

    #[test]
    fn expression_terms_with_signs_and_exponents() {
        let p = parse_polynomial("3x^4 - x").unwrap();
        assert_eq!(asc(&p), [rat(0, 1), rat(-1, 1), rat(0, 1), rat(0, 1), rat(3, 1)]);
    }

    #[test]
    fn coefficient_lists_are_descending() {
        let p = parse_polynomial("[1, 0, -1]").unwrap();
        assert_eq!(asc(&p), [rat(-1, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(parse_polynomial("[]").unwrap(), Polynomial::zero());
        // High-order zero entries drop out of the stored form.
        assert_eq!(parse_polynomial("[0, 0, 1]").unwrap(), Polynomial::constant(rat(1, 1)));
    }

    #[test]
    fn equal_exponents_are_summed() {
        let p = parse_polynomial("x^2 + x^2").unwrap();
        assert_eq!(asc(&p), [rat(0, 1), rat(0, 1), rat(2, 1)]);
        assert_eq!(parse_polynomial("x - x").unwrap(), Polynomial::zero());
    }

    #[test]
    fn fractional_coefficients_and_loose_whitespace() {
        let p = parse_polynomial("  + 7/2 x ^ 2 - 1/3 ").unwrap();
        assert_eq!(asc(&p), [rat(-1, 3), rat(0, 1), rat(7, 2)]);
        assert_eq!(parse_polynomial("-X").unwrap(), parse_polynomial("- x").unwrap());
    }

    #[test]
    fn empty_input_is_the_zero_polynomial() {
        assert_eq!(parse_polynomial("").unwrap(), Polynomial::zero());
        assert_eq!(parse_polynomial("   ").unwrap(), Polynomial::zero());
        assert_eq!(parse_polynomial("0").unwrap(), Polynomial::zero());
    }

    #[test]
    fn malformed_input_reports_the_position() {
        let err = parse_polynomial("3xx").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse_polynomial("x^-2").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse_polynomial("x^2 2").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse_polynomial("[1, 2").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(parse_polynomial("[1/0]").unwrap_err().message.contains("zero denominator"));
        assert!(parse_polynomial("y + 1").is_err());
    }

    #[test]
    fn display_form_parses_back_to_the_same_polynomial() {
        for text in ["3x^4 - x", "x^2 - 1", "7/2x + 1/3", "-x^3 + x", "0", "[5, 0, 0, -1]"] {
            let p = parse_polynomial(text).unwrap();
            assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p, "{text}");
        }
    }

    #[test]
    fn standalone_rationals() {
        assert_eq!(parse_rational("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rational(" -3 ").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("-10/4").unwrap(), rat(-5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1 2").is_err());
        assert!(parse_rational("").is_err());
    }
}
