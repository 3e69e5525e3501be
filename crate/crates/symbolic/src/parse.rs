//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr     = term { ("+" | "-") term } ;
//! term     = unary { ("*" | "/") unary } ;
//! unary    = ("-" | "+") unary | power ;
//! power    = atom [ "^" exponent ] ;
//! exponent = [ "-" ] integer | "(" [ "-" ] integer ")" ;
//! atom     = integer | identifier | "(" expr ")" ;
//! ```
//!
//! Identifiers resolve to registered symbols or to context aliases, which are
//! expanded in place.

use crate::coeff::Coefficient;
use crate::context::Context;
use crate::error::SymbolicError;
use crate::ratfn::RatFn;

const MAX_ALIAS_NESTING: usize = 16;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, SymbolicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Int(text[start..i].to_string()), start));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(SymbolicError::Syntax {
                    message: format!("unexpected character `{other}`"),
                    position: start,
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    ctx: &'a Context,
    nesting: usize,
}

pub fn parse<C: Coefficient>(text: &str, ctx: &Context) -> Result<RatFn<C>, SymbolicError> {
    parse_nested(text, ctx, 0)
}

fn parse_nested<C: Coefficient>(
    text: &str,
    ctx: &Context,
    nesting: usize,
) -> Result<RatFn<C>, SymbolicError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        ctx,
        nesting,
    };
    if p.tokens.is_empty() {
        return Err(SymbolicError::Syntax {
            message: "empty expression".into(),
            position: 0,
        });
    }
    let e = p.expr()?;
    if let Some((tok, at)) = p.tokens.get(p.pos) {
        return Err(SymbolicError::Syntax {
            message: format!("unexpected token {tok:?}"),
            position: *at,
        });
    }
    Ok(e)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), SymbolicError> {
        let at = self.position();
        match self.bump() {
            Some((t, _)) if t == want => Ok(()),
            Some((t, _)) => Err(SymbolicError::Syntax {
                message: format!("expected {want:?}, found {t:?}"),
                position: at,
            }),
            None => Err(SymbolicError::Syntax {
                message: format!("expected {want:?}, found end of input"),
                position: at,
            }),
        }
    }

    fn expr<C: Coefficient>(&mut self) -> Result<RatFn<C>, SymbolicError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<RatFn<C>, SymbolicError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let at = self.position();
                    let d = self.unary()?;
                    acc = acc
                        .checked_div(&d)
                        .ok_or(SymbolicError::ZeroDivision { position: at })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<C: Coefficient>(&mut self) -> Result<RatFn<C>, SymbolicError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<C: Coefficient>(&mut self) -> Result<RatFn<C>, SymbolicError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.position();
        let parenthesized = self.peek() == Some(&Token::LParen);
        if parenthesized {
            self.pos += 1;
        }
        let negative = self.peek() == Some(&Token::Minus);
        if negative {
            self.pos += 1;
        }
        let k = match self.bump() {
            Some((Token::Int(s), p)) => s.parse::<i32>().map_err(|_| SymbolicError::Syntax {
                message: format!("exponent `{s}` too large"),
                position: p,
            })?,
            _ => {
                return Err(SymbolicError::Syntax {
                    message: "exponent must be an integer literal".into(),
                    position: at,
                })
            }
        };
        if parenthesized {
            self.expect(Token::RParen)?;
        }
        let k = if negative { -k } else { k };
        base.pow(k).ok_or(SymbolicError::ZeroDivision { position: at })
    }

    fn atom<C: Coefficient>(&mut self) -> Result<RatFn<C>, SymbolicError> {
        let at = self.position();
        match self.bump() {
            Some((Token::Int(s), _)) => {
                let ten = C::from_int(10);
                let mut v = C::zero();
                for d in s.bytes() {
                    v = v * ten.clone() + C::from_int((d - b'0') as i64);
                }
                Ok(RatFn::constant(v))
            }
            Some((Token::Ident(name), p)) => {
                if let Some(v) = self.ctx.lookup(&name) {
                    return Ok(RatFn::var(v));
                }
                if let Some(text) = self.ctx.alias(&name) {
                    if self.nesting >= MAX_ALIAS_NESTING {
                        return Err(SymbolicError::Syntax {
                            message: format!("alias `{name}` nests too deeply"),
                            position: p,
                        });
                    }
                    return parse_nested(text, self.ctx, self.nesting + 1);
                }
                Err(SymbolicError::UnknownSymbol { name, position: p })
            }
            Some((Token::LParen, _)) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some((t, p)) => Err(SymbolicError::Syntax {
                message: format!("unexpected token {t:?}"),
                position: p,
            }),
            None => Err(SymbolicError::Syntax {
                message: "unexpected end of input".into(),
                position: at,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use num_rational::BigRational;

    type E = RatFn<BigRational>;

    fn ctx() -> Context {
        let mut b = Context::builder();
        b.coordinate("r");
        b.parameter("q");
        b.build().unwrap()
    }

    #[test]
    fn precedence_and_unary_minus() {
        let c = ctx();
        let a: E = parse("-r^2", &c).unwrap();
        let b: E = parse("-(r*r)", &c).unwrap();
        assert_eq!(a, b);
        let e: E = parse("1 + 2*3 - 4/2", &c).unwrap();
        assert_eq!(e, E::from_int(5));
        let e: E = parse("r^-2", &c).unwrap();
        assert_eq!(e, parse("1/(r*r)", &c).unwrap());
        let e: E = parse("r^(-1)", &c).unwrap();
        assert_eq!(e, parse("1/r", &c).unwrap());
    }

    #[test]
    fn numerator_and_denominator() {
        let c = ctx();
        let e: E = parse("-2*q/r^3", &c).unwrap();
        let q = c.var("q").unwrap();
        let r = c.var("r").unwrap();
        assert_eq!(e.numer(), &Poly::var(q).scale(&BigRational::from_int(-2)));
        assert_eq!(e.denom(), &Poly::var(r).pow(3));
    }

    #[test]
    fn errors_carry_positions() {
        let c = ctx();
        assert_eq!(
            parse::<BigRational>("r/0", &c).unwrap_err(),
            SymbolicError::ZeroDivision { position: 2 }
        );
        assert_eq!(
            parse::<BigRational>("r + s", &c).unwrap_err(),
            SymbolicError::UnknownSymbol {
                name: "s".into(),
                position: 4
            }
        );
        assert!(matches!(
            parse::<BigRational>("r + (q", &c),
            Err(SymbolicError::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse::<BigRational>("r $ q", &c),
            Err(SymbolicError::Syntax { position: 2, .. })
        ));
        assert!(parse::<BigRational>("(r-r)^-1", &c).is_err());
    }

    #[test]
    fn big_literals() {
        let c = ctx();
        let e: E = parse("123456789012345678901234567890 - 123456789012345678901234567889", &c).unwrap();
        assert_eq!(e, E::one());
    }
}
