//! Expressions such as `(1+i)/2 * z1^2 - L^-1 u v`.
//!
//! Precedence, tightest first: `^`, then juxtaposition / `*` / `/`, then
//! unary minus, then binary `+` / `-`. Products are taken left to right in
//! the presentation, so `v u` and `u v` differ in a deformed algebra.

use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, ToPrimitive};

use crate::algebra::{Element, GradedPresentation};
use crate::scalars::{gaussian, Scalar};

use super::ParseError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    I,
    L,
    Star,
    Slash,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::I => "`i`".into(),
            Tok::L => "`L`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self,
            Tok::Int(_) | Tok::Ident(_) | Tok::I | Tok::L | Tok::LParen
        )
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, line0: usize, column0: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, column0);
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (start_line, start_col) = (line, col);
        let single = match c {
            '\n' => {
                line += 1;
                col = 1;
                k += 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            c if c.is_ascii_digit() => {
                let mut end = k;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[k..end].iter().collect();
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("digits")),
                    line,
                    column: col,
                });
                col += end - k;
                k = end;
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut end = k;
                while end < chars.len()
                    && (chars[end].is_alphanumeric() || chars[end] == '_' || chars[end] == '\'')
                {
                    end += 1;
                }
                let word: String = chars[k..end].iter().collect();
                let tok = match word.as_str() {
                    "i" => Tok::I,
                    "L" => Tok::L,
                    _ => Tok::Ident(word),
                };
                out.push(Token {
                    tok,
                    line,
                    column: col,
                });
                col += end - k;
                k = end;
                continue;
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        };
        if let Some(tok) = single {
            out.push(Token {
                tok,
                line: start_line,
                column: start_col,
            });
        }
        col += 1;
        k += 1;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    p: &'a Arc<GradedPresentation>,
}

fn as_scalar(e: &Element) -> Option<Scalar> {
    if e.is_zero() {
        return Some(Scalar::zero());
    }
    let mut terms = e.terms();
    let (w, c) = terms.next()?;
    (terms.next().is_none() && w.is_empty()).then(|| c.clone())
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: impl Into<String>) -> ParseError {
        ParseError::new(t.line, t.column, message)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == tok {
            Ok(())
        } else {
            Err(Self::error_at(
                &t,
                format!("expected {}, found {}", tok.describe(), t.tok.describe()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(-&self.term()?);
        }
        self.product()
    }

    fn product(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.power()?;
        loop {
            let t = self.peek().clone();
            match t.tok {
                Tok::Star => {
                    self.next();
                    acc = acc.multiply(&self.power()?).expect("one presentation");
                }
                Tok::Slash => {
                    self.next();
                    let at = self.peek().clone();
                    let d = self.power()?;
                    let inv = as_scalar(&d).and_then(|s| s.inverse()).ok_or_else(|| {
                        Self::error_at(&at, "can only divide by a nonzero scalar monomial")
                    })?;
                    acc = acc.scale(&inv);
                }
                ref tok if tok.starts_primary() => {
                    acc = acc.multiply(&self.power()?).expect("one presentation");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<BigInt, ParseError> {
        let paren = self.peek().tok == Tok::LParen;
        if paren {
            self.next();
        }
        let negative = self.peek().tok == Tok::Minus;
        if negative {
            self.next();
        }
        let t = self.next();
        let Tok::Int(n) = t.tok else {
            return Err(Self::error_at(
                &t,
                format!("expected an integer exponent, found {}", t.tok.describe()),
            ));
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(if negative { -n } else { n })
    }

    fn power(&mut self) -> Result<Element, ParseError> {
        let base_tok = self.peek().clone();
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let k = self.exponent()?;
        if let Tok::L = base_tok.tok {
            if base == Element::scalar(self.p, Scalar::lambda_pow(1)) {
                return Ok(Element::scalar(self.p, Scalar::lambda_pow(k)));
            }
        }
        if k.is_negative() {
            let inv = as_scalar(&base).and_then(|s| s.inverse()).ok_or_else(|| {
                Self::error_at(&caret, "negative powers need an invertible scalar monomial")
            })?;
            let e = (-k)
                .to_u32()
                .ok_or_else(|| Self::error_at(&caret, "exponent too large"))?;
            return Ok(Element::scalar(self.p, inv).pow(e));
        }
        let e = k
            .to_u32()
            .ok_or_else(|| Self::error_at(&caret, "exponent too large"))?;
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<Element, ParseError> {
        let t = self.next();
        let p = self.p;
        match t.tok.clone() {
            Tok::Int(n) => Ok(Element::scalar(
                p,
                Scalar::from_rational(BigRational::from_integer(n)),
            )),
            Tok::I => Ok(Element::scalar(p, Scalar::from_gaussian(gaussian(0, 1)))),
            Tok::L => Ok(Element::scalar(p, Scalar::lambda_pow(BigInt::one()))),
            Tok::Ident(name) => Element::generator_named(p, &name).map_err(|_| {
                Self::error_at(&t, format!("unknown generator `{name}` in `{}`", p.name()))
            }),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(Self::error_at(
                &t,
                format!("expected a term, found {}", other.describe()),
            )),
        }
    }
}

/// Parses `text` as an element of `p`, normal-ordered.
pub fn parse_expression(text: &str, p: &Arc<GradedPresentation>) -> Result<Element, ParseError> {
    parse_expression_at(text, p, 1, 1)
}

/// As [`parse_expression`], reporting positions relative to `(line, column)`.
pub fn parse_expression_at(
    text: &str,
    p: &Arc<GradedPresentation>,
    line: usize,
    column: usize,
) -> Result<Element, ParseError> {
    let tokens = lex(text, line, column)?;
    let mut parser = Parser { tokens, pos: 0, p };
    if parser.peek().tok == Tok::End {
        return Err(Parser::error_at(parser.peek(), "empty expression"));
    }
    let e = parser.expr()?;
    let t = parser.peek();
    if t.tok != Tok::End {
        return Err(Parser::error_at(
            t,
            format!("unexpected {}", t.tok.describe()),
        ));
    }
    Ok(e)
}
