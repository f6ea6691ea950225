//! Recursive-descent parser for polynomial expressions and system files.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::behavior::SystemMatrix;
use crate::poly::{LaurentPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("column {col}: {msg}")]
    Expr { col: usize, msg: String },
    #[error("line {line}: {msg}")]
    System { line: usize, msg: String },
}

fn expr_err<T>(col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Expr {
        col,
        msg: msg.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Variable(usize), // 1-based index as written
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(usize, Token)>, // (1-based column, token)
    end_col: usize,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let col = i + 1;
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                tokens.push((col, Token::Plus));
                i += 1;
            }
            b'-' => {
                tokens.push((col, Token::Minus));
                i += 1;
            }
            b'*' => {
                tokens.push((col, Token::Star));
                i += 1;
            }
            b'^' => {
                tokens.push((col, Token::Caret));
                i += 1;
            }
            b'/' => {
                tokens.push((col, Token::Slash));
                i += 1;
            }
            b'(' => {
                tokens.push((col, Token::LParen));
                i += 1;
            }
            b')' => {
                tokens.push((col, Token::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                tokens.push((col, Token::Number(digits.parse().unwrap())));
            }
            b's' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return expr_err(col, "expected a variable index after 's'");
                }
                let idx: usize = text[start..i]
                    .parse()
                    .map_err(|_| ParseError::Expr {
                        col,
                        msg: "variable index too large".into(),
                    })?;
                if idx == 0 {
                    return expr_err(col, "variable indices start at s1");
                }
                tokens.push((col, Token::Variable(idx)));
            }
            _ => {
                return expr_err(col, format!("unexpected character '{}'", c as char));
            }
        }
    }
    Ok(Lexer {
        tokens,
        end_col: bytes.len() + 1,
    })
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_col: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, expected: &Token, what: &str) -> Result<(), ParseError> {
        let col = self.col();
        match self.bump() {
            Some(ref t) if t == expected => Ok(()),
            _ => expr_err(col, format!("expected {what}")),
        }
    }

    // expr := ('+' | '-')? term (('+' | '-') term)*
    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            negate = true;
        } else if matches!(self.peek(), Some(Token::Plus)) {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    // factor := atom ('^' exponent)?
    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base_col = self.col();
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Token::Caret)) {
            return Ok(base);
        }
        self.bump();
        let exp = self.exponent()?;
        if exp >= 0 {
            Ok(base.pow(exp as u32))
        } else {
            match base.inverse() {
                Some(inv) => Ok(inv.pow((-exp) as u32)),
                None => expr_err(
                    base_col,
                    "negative exponent applied to a non-unit (only single terms are invertible)",
                ),
            }
        }
    }

    // exponent := '-'? digits | '(' '-'? digits ')'
    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parenthesized = matches!(self.peek(), Some(Token::LParen));
        if parenthesized {
            self.bump();
        }
        let mut negative = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            negative = true;
        }
        let col = self.col();
        let value = match self.bump() {
            Some(Token::Number(v)) => v,
            _ => return expr_err(col, "expected an integer exponent"),
        };
        let value: i64 = i64::try_from(&value)
            .map_err(|_| ParseError::Expr {
                col,
                msg: "exponent too large".into(),
            })?;
        if parenthesized {
            self.expect(&Token::RParen, "')' after exponent")?;
        }
        Ok(if negative { -value } else { value })
    }

    // atom := rational | variable | '(' expr ')'
    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Token::Number(numer)) => {
                let mut value = Rational::from(numer);
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dcol = self.col();
                    match self.bump() {
                        Some(Token::Number(denom)) => {
                            if denom.is_zero() {
                                return expr_err(dcol, "zero denominator");
                            }
                            value /= Rational::from(denom);
                        }
                        _ => return expr_err(dcol, "expected a denominator"),
                    }
                }
                Ok(LaurentPoly::constant(self.dim, value))
            }
            Some(Token::Variable(idx)) => {
                if idx > self.dim {
                    return expr_err(
                        col,
                        format!("variable s{idx} out of range (n = {})", self.dim),
                    );
                }
                Ok(LaurentPoly::variable(self.dim, idx - 1))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(other) => expr_err(col, format!("unexpected token {other:?}")),
            None => expr_err(col, "unexpected end of expression"),
        }
    }
}

/// Parses one polynomial expression over `s1..sn`.
pub fn parse_poly(text: &str, n: usize) -> Result<LaurentPoly, ParseError> {
    let lexer = lex(text)?;
    let mut parser = Parser {
        tokens: lexer.tokens,
        pos: 0,
        end_col: lexer.end_col,
        dim: n,
    };
    if parser.peek().is_none() {
        return expr_err(1, "empty expression");
    }
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return expr_err(parser.col(), "trailing input after expression");
    }
    Ok(poly)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(idx) => &line[..idx],
        None => line,
    }
}

/// Parses a system file: a header `n k l` followed by `l` rows of `k`
/// `;`-separated expressions.
pub fn parse_system(text: &str) -> Result<SystemMatrix, ParseError> {
    let mut significant: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if !line.is_empty() {
            significant.push((i + 1, line));
        }
    }

    let (header_line, header) = significant
        .first()
        .copied()
        .ok_or_else(|| ParseError::System {
            line: 1,
            msg: "missing header line 'n k l'".into(),
        })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(ParseError::System {
            line: header_line,
            msg: format!("header must be 'n k l', found '{header}'"),
        });
    }
    let parse_field = |s: &str, what: &str| -> Result<usize, ParseError> {
        s.parse().map_err(|_| ParseError::System {
            line: header_line,
            msg: format!("invalid {what} '{s}'"),
        })
    };
    let n = parse_field(fields[0], "lattice dimension")?;
    let k = parse_field(fields[1], "variable count")?;
    let l = parse_field(fields[2], "row count")?;
    if n < 1 {
        return Err(ParseError::System {
            line: header_line,
            msg: "lattice dimension must be at least 1".into(),
        });
    }
    if k < 1 {
        return Err(ParseError::System {
            line: header_line,
            msg: "variable count must be at least 1".into(),
        });
    }

    let row_lines = &significant[1..];
    if row_lines.len() != l {
        return Err(ParseError::System {
            line: row_lines
                .last()
                .map(|(i, _)| *i)
                .unwrap_or(header_line),
            msg: format!("header declares {l} rows, found {}", row_lines.len()),
        });
    }

    let mut rows = Vec::with_capacity(l);
    for &(line_no, line) in row_lines {
        let entries: Vec<&str> = line.split(';').collect();
        if entries.len() != k {
            return Err(ParseError::System {
                line: line_no,
                msg: format!("row has {} entries, expected {k}", entries.len()),
            });
        }
        let mut row = Vec::with_capacity(k);
        for entry in entries {
            let poly = parse_poly(entry, n).map_err(|e| ParseError::System {
                line: line_no,
                msg: e.to_string(),
            })?;
            row.push(poly);
        }
        rows.push(row);
    }

    Ok(SystemMatrix::new(n, k, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_simple_difference() {
        let p = parse_poly("s1 - 1", 2).unwrap();
        let expected = &LaurentPoly::variable(2, 0) - &LaurentPoly::one(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn parses_negative_exponents_and_coefficients() {
        let p = parse_poly("3*s1^2*s2^-1 - 4", 2).unwrap();
        let expected = LaurentPoly::from_terms(
            2,
            [
                (Monomial::new(vec![2, -1]), q(3, 1)),
                (Monomial::new(vec![0, 0]), q(-4, 1)),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn parenthesized_exponent_matches_bare() {
        assert_eq!(
            parse_poly("s1^-2", 1).unwrap(),
            parse_poly("s1^(-2)", 1).unwrap()
        );
    }

    #[test]
    fn expands_products() {
        let p = parse_poly("(s1 - s2)*(s1 + s2)", 2).unwrap();
        let s1 = LaurentPoly::variable(2, 0);
        let s2 = LaurentPoly::variable(2, 1);
        assert_eq!(p, &(&s1 * &s1) - &(&s2 * &s2));
    }

    #[test]
    fn parses_rational_literals() {
        let p = parse_poly("-4/7 + s1", 1).unwrap();
        assert_eq!(p.constant_coeff(), q(-4, 7));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_poly("s1-1", 2).unwrap(),
            parse_poly("  s1  -  1 ", 2).unwrap()
        );
    }

    #[test]
    fn rejects_out_of_range_variable() {
        let err = parse_poly("s3 - 1", 2).unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
    }

    #[test]
    fn reports_error_position() {
        let err = parse_poly("s1 + @", 2).unwrap_err();
        assert_eq!(
            err,
            ParseError::Expr {
                col: 6,
                msg: "unexpected character '@'".into()
            }
        );
    }

    #[test]
    fn rejects_negative_power_of_sum() {
        let err = parse_poly("(s1 + 1)^-1", 2).unwrap_err();
        assert!(err.to_string().contains("non-unit"), "{err}");
    }

    #[test]
    fn negative_power_of_scaled_monomial_is_fine() {
        let p = parse_poly("(2*s1)^-1", 1).unwrap();
        assert_eq!(
            p,
            LaurentPoly::term(Monomial::new(vec![-1]), q(1, 2))
        );
    }

    #[test]
    fn parses_system_file_with_comments() {
        let text = "# constant system\n2 1 2\ns1 - 1\ns2 - 1  # second law\n";
        let m = parse_system(text).unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m.k(), 1);
        assert_eq!(m.num_rows(), 2);
        assert_eq!(
            *m.entry(1, 0),
            &LaurentPoly::variable(2, 1) - &LaurentPoly::one(2)
        );
    }

    #[test]
    fn parses_empty_row_section() {
        let m = parse_system("2 1 0\n").unwrap();
        assert_eq!(m.num_rows(), 0);
    }

    #[test]
    fn rejects_row_arity_mismatch() {
        let text = "2 2 1\ns1 - 1\n";
        let err = parse_system(text).unwrap_err();
        assert!(err.to_string().contains("entries"), "{err}");
    }

    #[test]
    fn rejects_row_count_mismatch() {
        let text = "2 1 2\ns1 - 1\n";
        let err = parse_system(text).unwrap_err();
        assert!(err.to_string().contains("declares 2 rows"), "{err}");
    }
}
