//! The ring-spec language.
//!
//! ```text
//! spec   := factor ("x" factor)* | "Z/" n
//! factor := "Z/" p "^" a | "Z/" q | "GF(" q ")" | "F" p "[x]/(" poly ")"
//! ```
//!
//! Case and whitespace are ignored. A bare composite `Z/n` expands to its
//! CRT factors.

use std::fmt;

use thiserror::Error;
use wgamma_core::arith;
use wgamma_core::ring::fp_poly;
use wgamma_core::ring::LocalRingSpec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("parse error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("at position {position}: {source}")]
    Ring {
        position: usize,
        source: wgamma_core::Error,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::Ring { position, .. } => *position,
        }
    }
}

/// Non-whitespace characters, lowercased, each with its offset in the
/// original text.
struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, c.to_ascii_lowercase()))
            .collect();
        Cursor {
            chars,
            at: 0,
            end: text.chars().count(),
        }
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn done(&self) -> bool {
        self.at >= self.chars.len()
    }

    fn error<T>(&self, message: impl fmt::Display) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.position(),
            message: message.to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, literal: &str) -> Result<(), ParseError> {
        for c in literal.chars() {
            if !self.eat(c) {
                return self.error(format!("expected '{literal}'"));
            }
        }
        Ok(())
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.position();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or(ParseError::Syntax {
                    position: start,
                    message: "number too large".into(),
                })?;
            self.at += 1;
            digits += 1;
        }
        if digits == 0 {
            return self.error("expected a number");
        }
        Ok(value)
    }
}

fn ring_error(position: usize, source: wgamma_core::Error) -> ParseError {
    ParseError::Ring { position, source }
}

/// One parsed factor, or the CRT expansion of a composite `Z/n`.
enum Parsed {
    Local(LocalRingSpec),
    Composite(u64),
}

fn factor(cur: &mut Cursor) -> Result<Parsed, ParseError> {
    let start = cur.position();
    match cur.peek() {
        Some('z') => {
            cur.expect("z/")?;
            let base = cur.number()?;
            if cur.eat('^') {
                let exp_pos = cur.position();
                let a = cur.number()?;
                if !arith::is_prime(base) {
                    return Err(ring_error(start, wgamma_core::Error::NotPrime(base)));
                }
                let a = u32::try_from(a)
                    .ok()
                    .filter(|&a| a >= 1)
                    .ok_or(ParseError::Syntax {
                        position: exp_pos,
                        message: "exponent must be between 1 and 2^32 - 1".into(),
                    })?;
                return Ok(Parsed::Local(LocalRingSpec::zmod(base, a)));
            }
            if base < 2 {
                return Err(ring_error(
                    start,
                    wgamma_core::Error::InvalidSpec(format!("Z/{base} is not a supported ring")),
                ));
            }
            Ok(match arith::prime_power(base) {
                Some((p, a)) => Parsed::Local(LocalRingSpec::zmod(p, a)),
                None => Parsed::Composite(base),
            })
        }
        Some('g') => {
            cur.expect("gf(")?;
            let q = cur.number()?;
            cur.expect(")")?;
            LocalRingSpec::galois_field(q)
                .map(Parsed::Local)
                .map_err(|e| ring_error(start, e))
        }
        Some('f') => {
            cur.expect("f")?;
            let p = cur.number()?;
            cur.expect("[x]/(")?;
            if !arith::is_prime(p) {
                return Err(ring_error(start, wgamma_core::Error::NotPrime(p)));
            }
            let g = polynomial(cur, p)?;
            cur.expect(")")?;
            Ok(Parsed::Local(LocalRingSpec::poly_quotient(p, g)))
        }
        _ => cur.error("expected 'Z/', 'GF(' or 'F<p>[x]/('"),
    }
}

/// Sum of terms `c`, `c x`, `c x^e` with optional signs, reduced mod `p`.
fn polynomial(cur: &mut Cursor, p: u64) -> Result<fp_poly::FpPoly, ParseError> {
    let mut coeffs: Vec<u64> = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let has_digits = cur.peek().is_some_and(|c| c.is_ascii_digit());
        let coef = if has_digits {
            let c = cur.number()? % p;
            cur.eat('*');
            c
        } else {
            1
        };
        let exp = if cur.eat('x') {
            if cur.eat('^') {
                let pos = cur.position();
                usize::try_from(cur.number()?)
                    .ok()
                    .filter(|&e| e <= 64)
                    .ok_or(ParseError::Syntax {
                        position: pos,
                        message: "polynomial degree above 64".into(),
                    })?
            } else {
                1
            }
        } else if has_digits {
            0
        } else {
            return cur.error("expected a polynomial term");
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        let term = if negative { (p - coef) % p } else { coef };
        coeffs[exp] = ((u128::from(coeffs[exp]) + u128::from(term)) % u128::from(p)) as u64;
        if cur.peek() == Some(')') || cur.done() {
            break;
        }
    }
    fp_poly::trim(&mut coeffs);
    Ok(coeffs)
}

/// Parses a ring description into its local factors, validating each.
pub fn parse_ring_spec(text: &str) -> Result<Vec<LocalRingSpec>, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.done() {
        return cur.error("empty ring spec");
    }
    let mut parsed = Vec::new();
    loop {
        let start = cur.position();
        parsed.push((start, factor(&mut cur)?));
        if cur.done() {
            break;
        }
        if !(cur.eat('x') || cur.eat('×') || cur.eat('*')) {
            return cur.error("expected 'x' between factors");
        }
    }
    let single = parsed.len() == 1;
    let mut specs = Vec::new();
    for (start, p) in parsed {
        match p {
            Parsed::Local(spec) => {
                spec.summary().map_err(|e| ring_error(start, e))?;
                specs.push(spec);
            }
            Parsed::Composite(n) if single => {
                specs = LocalRingSpec::crt_factors(n).map_err(|e| ring_error(start, e))?;
            }
            Parsed::Composite(n) => {
                return Err(ring_error(start, wgamma_core::Error::NotPrimePower(n)));
            }
        }
    }
    Ok(specs)
}

/// Canonical text for a factor list; parses back to the same list.
pub fn format_ring_spec(specs: &[LocalRingSpec]) -> String {
    specs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" x ")
}
