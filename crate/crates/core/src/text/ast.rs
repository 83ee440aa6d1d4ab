//! Recursive-descent parser producing a small expression tree.
//!
//! ```text
//! series    = "sum" "(" "i" "=" int ".." "omega" "," expr ")" [ overrides ] ;
//! overrides = "with" "{" [ entry { "," entry } ] "}" ;
//! entry     = int ":" expr ;
//! expr      = product { ( "+" | "-" ) product } ;
//! product   = unary { ( "*" | "/" ) unary } ;
//! unary     = ( "-" | "+" ) unary | power ;
//! power     = primary [ "^" unary ] ;
//! primary   = digits | "i" | "w" | "(" expr ")" ;
//! int       = [ "-" ] digits ;
//! ```

use num_bigint::BigInt;

use super::lexer::{tokenize, Tok, Token};
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 200;

#[derive(Clone, Debug)]
pub(crate) enum Node {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug)]
pub(crate) struct Expr {
    pub node: Node,
    pub offset: usize,
}

#[derive(Debug)]
pub(crate) struct SeriesAst {
    pub start: i64,
    pub body: Expr,
    pub overrides: Vec<(i64, usize, Expr)>,
}

pub(crate) struct Parser {
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

impl Parser {
    pub fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            depth: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<usize> {
        if *self.peek() == tok {
            Ok(self.bump().offset)
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<usize> {
        match self.peek() {
            Tok::Ident(s) if s == name => Ok(self.bump().offset),
            _ => Err(syntax(self.offset(), format!("expected `{name}`"))),
        }
    }

    pub fn expect_end(&mut self) -> Result<()> {
        self.expect(Tok::End, "end of input").map(|_| ())
    }

    fn int_literal(&mut self) -> Result<(i64, usize)> {
        let offset = self.offset();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.bump().tok {
            Tok::Int(v) => {
                let v = if negative { -v } else { v };
                let v = i64::try_from(&v).map_err(|_| syntax(offset, "integer out of range"))?;
                Ok((v, offset))
            }
            _ => Err(syntax(offset, "expected an integer")),
        }
    }

    pub fn series(&mut self) -> Result<SeriesAst> {
        self.expect_ident("sum")?;
        self.expect(Tok::LParen, "`(`")?;
        self.expect_ident("i")?;
        self.expect(Tok::Eq, "`=`")?;
        let (start, _) = self.int_literal()?;
        self.expect(Tok::DotDot, "`..`")?;
        let upper = self.offset();
        match self.peek() {
            Tok::Ident(s) if s == "omega" => {
                self.bump();
            }
            _ => {
                return Err(Error::BadBounds {
                    offset: upper,
                    message: "the upper bound must be `omega`".into(),
                })
            }
        }
        self.expect(Tok::Comma, "`,`")?;
        let body = self.expr()?;
        self.expect(Tok::RParen, "`)`")?;

        let mut overrides = Vec::new();
        if matches!(self.peek(), Tok::Ident(s) if s == "with") {
            self.bump();
            self.expect(Tok::LBrace, "`{`")?;
            if *self.peek() != Tok::RBrace {
                loop {
                    let (index, offset) = self.int_literal()?;
                    self.expect(Tok::Colon, "`:`")?;
                    overrides.push((index, offset, self.expr()?));
                    if *self.peek() == Tok::Comma {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
            self.expect(Tok::RBrace, "`}`")?;
        }
        self.expect_end()?;
        Ok(SeriesAst {
            start,
            body,
            overrides,
        })
    }

    pub fn expr(&mut self) -> Result<Expr> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(syntax(self.offset(), "expression nested too deeply"));
        }
        let mut lhs = self.product()?;
        loop {
            let offset = self.offset();
            let ctor: fn(Box<Expr>, Box<Expr>) -> Node = match self.peek() {
                Tok::Plus => Node::Add,
                Tok::Minus => Node::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.product()?;
            lhs = Expr {
                node: ctor(Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let offset = self.offset();
            let ctor: fn(Box<Expr>, Box<Expr>) -> Node = match self.peek() {
                Tok::Star => Node::Mul,
                Tok::Slash => Node::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr {
                node: ctor(Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(syntax(self.offset(), "expression nested too deeply"));
        }
        let offset = self.offset();
        let e = match self.peek() {
            Tok::Minus => {
                self.bump();
                Expr {
                    node: Node::Neg(Box::new(self.unary()?)),
                    offset,
                }
            }
            Tok::Plus => {
                self.bump();
                self.unary()?
            }
            _ => self.power()?,
        };
        self.depth -= 1;
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            let offset = self.bump().offset;
            let exp = self.unary()?;
            return Ok(Expr {
                node: Node::Pow(Box::new(base), Box::new(exp)),
                offset,
            });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let t = self.bump();
        let node = match t.tok {
            Tok::Int(v) => Node::Int(v),
            Tok::Ident(name) => Node::Var(name),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(inner);
            }
            Tok::End => return Err(syntax(t.offset, "unexpected end of input")),
            _ => return Err(syntax(t.offset, "expected a number, variable or `(`")),
        };
        Ok(Expr {
            node,
            offset: t.offset,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_expr(src: &str) -> Result<Expr> {
        let mut p = Parser::new(src)?;
        let e = p.expr()?;
        p.expect_end()?;
        Ok(e)
    }

    #[test]
    fn power_is_right_associative() {
        let e = parse_expr("2^3^2").unwrap();
        let Node::Pow(_, rhs) = e.node else { panic!() };
        assert!(matches!(rhs.node, Node::Pow(..)));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let e = parse_expr("-2^2").unwrap();
        assert!(matches!(e.node, Node::Neg(_)));
        let e = parse_expr("w^-1").unwrap();
        assert!(matches!(e.node, Node::Pow(..)));
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_expr("1 + ").unwrap_err().offset(), Some(4));
        assert_eq!(parse_expr("(1 + 2").unwrap_err().offset(), Some(6));
        assert_eq!(parse_expr("1 2").unwrap_err().offset(), Some(2));
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let src = "(".repeat(100_000);
        assert!(parse_expr(&src).is_err());
        let src = "-".repeat(100_000) + "1";
        assert!(parse_expr(&src).is_err());
    }

    #[test]
    fn series_header() {
        let ast = Parser::new("sum(i=-2..omega, i) with {3: 1, 4: -1/2}")
            .unwrap()
            .series()
            .unwrap();
        assert_eq!(ast.start, -2);
        assert_eq!(ast.overrides.len(), 2);
        let err = Parser::new("sum(i=1..10, i)").unwrap().series().unwrap_err();
        assert!(matches!(err, Error::BadBounds { offset: 9, .. }));
    }
}
