//! Equation strings such as `6x - 15y + 10z = 4`.
//!
//! Grammar (whitespace anywhere between tokens):
//!
//! ```text
//! equation := term (sign term)* '=' [sign] integer
//! term     := [sign] [integer ['*']] variable
//! variable := 'x' | 'y' | 'z'
//! ```
//!
//! Repeated variables add up, and U+2212 (minus sign) is read as `-`.

use std::fmt;

use thiserror::Error;

use crate::solve3::Equation3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `position` is a zero-based character offset.
    #[error("syntax error at column {}: expected {expected}, found {found}", position + 1)]
    Syntax {
        position: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unknown variable `{name}` at column {}; only x, y and z are allowed", position + 1)]
    UnknownVariable { position: usize, name: String },
    #[error("integer at column {} does not fit in 64 bits", position + 1)]
    Overflow { position: usize },
}

/// Coefficients of `x`, `y`, `z` (zero when absent) and the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParsedEquation {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub rhs: i64,
}

impl From<ParsedEquation> for Equation3 {
    fn from(p: ParsedEquation) -> Self {
        Equation3::new(p.x, p.y, p.z, p.rhs)
    }
}

impl fmt::Display for ParsedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Equation3::from(*self).fmt(f)
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars = text
            .chars()
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        Self { chars, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        }
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            expected,
            found: self.found(),
        }
    }

    /// `+1` or `-1` if a sign is next.
    fn sign(&mut self) -> Option<i64> {
        self.skip_ws();
        let s = match self.peek()? {
            '+' => 1,
            '-' => -1,
            _ => return None,
        };
        self.pos += 1;
        Some(s)
    }

    fn integer(&mut self) -> Result<Option<i64>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as i64))
                .ok_or(ParseError::Overflow { position: start })?;
            self.pos += 1;
        }
        Ok((self.pos > start).then_some(value))
    }

    fn variable(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("a variable"));
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match name.as_str() {
            "x" => Ok(0),
            "y" => Ok(1),
            "z" => Ok(2),
            _ => Err(ParseError::UnknownVariable {
                position: start,
                name,
            }),
        }
    }
}

pub fn parse_equation(text: &str) -> Result<ParsedEquation, ParseError> {
    let mut cur = Cursor::new(text);
    let mut coef = [0i64; 3];
    let mut first = true;
    loop {
        let sign = match cur.sign() {
            Some(s) => s,
            None if first => 1,
            None => break,
        };
        first = false;
        let magnitude_at = {
            cur.skip_ws();
            cur.pos
        };
        let magnitude = match cur.integer()? {
            Some(k) => {
                cur.skip_ws();
                if cur.peek() == Some('*') {
                    cur.pos += 1;
                }
                k
            }
            None => 1,
        };
        let var = cur.variable()?;
        let term = magnitude.checked_mul(sign).ok_or(ParseError::Overflow {
            position: magnitude_at,
        })?;
        coef[var] = coef[var].checked_add(term).ok_or(ParseError::Overflow {
            position: magnitude_at,
        })?;
    }
    cur.skip_ws();
    if cur.peek() != Some('=') {
        return Err(cur.error("`+`, `-` or `=`"));
    }
    cur.pos += 1;
    let sign = cur.sign().unwrap_or(1);
    cur.skip_ws();
    let rhs_at = cur.pos;
    let rhs = cur
        .integer()?
        .ok_or_else(|| cur.error("an integer right-hand side"))?
        .checked_mul(sign)
        .ok_or(ParseError::Overflow { position: rhs_at })?;
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.error("end of input"));
    }
    let [x, y, z] = coef;
    Ok(ParsedEquation { x, y, z, rhs })
}
