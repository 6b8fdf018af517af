//! Expression grammar for bundle objects.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := '~' factor | INT '*' factor | primary ('^' INT)?
//! primary:= atom | '(' expr ')'
//! atom   := 'E[' INT ']' | 'L[' FRAC ',' FRAC ']' | 'T' IDENT | 'O' | 'Z'
//! FRAC   := '-'? INT ('/' INT)?
//! ```
//!
//! `+` is direct sum, `*` tensor product, `~` dual, `n*X` the `n`-fold direct
//! sum and `X^n` the `n`-fold tensor power. Whitespace is insignificant.

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::bundle::{BundleObject, Indecomposable};
use crate::picard::LineBundleClass;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Dual(Box<Expr>),
    Mult(u64, Box<Expr>),
    Pow(Box<Expr>, u32),
    Atiyah(u64),
    Line(Rational64, Rational64),
    Generator(String),
    Unit,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("invalid expression at byte {offset}: {message}")]
    Validation { offset: usize, message: String },
}

impl ExprError {
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Syntax { offset, .. } | ExprError::Validation { offset, .. } => *offset,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(b) = self.src.as_bytes().get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn found(&self) -> String {
        match self.src[self.pos..].chars().next() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn syntax(&mut self, expected: &[&'static str]) -> ExprError {
        self.skip_ws();
        ExprError::Syntax {
            offset: self.pos,
            expected: expected.to_vec(),
            found: self.found(),
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, name: &'static str) -> Result<(), ExprError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.syntax(&[name]))
        }
    }

    fn int<T: std::str::FromStr>(&mut self) -> Result<(T, usize), ExprError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax(&["integer"]));
        }
        self.src[start..self.pos]
            .parse()
            .map(|v| (v, start))
            .map_err(|_| ExprError::Validation {
                offset: start,
                message: format!("integer {} out of range", &self.src[start..self.pos]),
            })
    }

    fn frac(&mut self) -> Result<Rational64, ExprError> {
        let neg = self.eat(b'-');
        let (num, _) = self.int::<i64>()?;
        let den = if self.eat(b'/') {
            let (den, at) = self.int::<i64>()?;
            if den == 0 {
                return Err(ExprError::Validation {
                    offset: at,
                    message: "fraction with zero denominator".to_string(),
                });
            }
            den
        } else {
            1
        };
        let q = Rational64::new(num, den);
        Ok(if neg { -q } else { q })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while self.eat(b'+') {
            let rhs = self.term()?;
            lhs = Expr::Sum(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            let rhs = self.factor()?;
            lhs = Expr::Tensor(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(Expr::Dual(Box::new(self.factor()?)))
            }
            Some(b) if b.is_ascii_digit() => {
                let (n, _) = self.int::<u64>()?;
                self.expect(b'*', "'*'")?;
                Ok(Expr::Mult(n, Box::new(self.factor()?)))
            }
            _ => {
                let base = self.primary()?;
                if self.eat(b'^') {
                    let (n, _) = self.int::<u32>()?;
                    Ok(Expr::Pow(Box::new(base), n))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        const EXPECTED: &[&str] = &["'E['", "'L['", "'T'", "'O'", "'Z'", "'('", "'~'", "integer"];
        let Some(b) = self.peek() else {
            return Err(self.syntax(EXPECTED));
        };
        match b {
            b'(' => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(inner)
            }
            b'E' => {
                self.pos += 1;
                self.expect(b'[', "'['")?;
                let (r, at) = self.int::<u64>()?;
                if r == 0 {
                    return Err(ExprError::Validation {
                        offset: at,
                        message: "rank must be at least 1".to_string(),
                    });
                }
                self.expect(b']', "']'")?;
                Ok(Expr::Atiyah(r))
            }
            b'L' => {
                self.pos += 1;
                self.expect(b'[', "'['")?;
                let a = self.frac()?;
                self.expect(b',', "','")?;
                let b = self.frac()?;
                self.expect(b']', "']'")?;
                Ok(Expr::Line(a, b))
            }
            b'T' => {
                self.pos += 1;
                let start = self.pos;
                let bytes = self.src.as_bytes();
                while self.pos < bytes.len() && is_ident_byte(bytes[self.pos]) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.syntax(&["generator name"]));
                }
                Ok(Expr::Generator(self.src[start..self.pos].to_string()))
            }
            b'O' => {
                self.pos += 1;
                Ok(Expr::Unit)
            }
            b'Z' => {
                self.pos += 1;
                Ok(Expr::Zero)
            }
            _ => Err(self.syntax(EXPECTED)),
        }
    }
}

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src: input, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.syntax(&["'+'", "'*'", "end of input"]));
    }
    Ok(e)
}

impl Expr {
    /// Evaluates to Krull–Schmidt normal form.
    pub fn eval(&self) -> BundleObject {
        match self {
            Expr::Sum(a, b) => a.eval().direct_sum(&b.eval()),
            Expr::Tensor(a, b) => a.eval().tensor(&b.eval()),
            Expr::Dual(a) => a.eval().dual(),
            Expr::Mult(n, a) => a.eval().scale(*n),
            Expr::Pow(a, n) => a.eval().tensor_pow(*n),
            Expr::Atiyah(r) => Indecomposable::atiyah(*r)
                .expect("parser rejects rank 0")
                .into(),
            Expr::Line(a, b) => BundleObject::line(LineBundleClass::torsion(*a, *b)),
            Expr::Generator(g) => BundleObject::line(LineBundleClass::generator(g, 1)),
            Expr::Unit => BundleObject::unit(),
            Expr::Zero => BundleObject::zero(),
        }
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesized rendering of the syntax tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(a, b) => write!(f, "({a} + {b})"),
            Expr::Tensor(a, b) => write!(f, "({a} * {b})"),
            Expr::Dual(a) => write!(f, "~{a}"),
            Expr::Mult(n, a) => write!(f, "({n}*{a})"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
            Expr::Atiyah(r) => write!(f, "E[{r}]"),
            Expr::Line(a, b) => write!(f, "L[{a},{b}]"),
            Expr::Generator(g) => write!(f, "T{g}"),
            Expr::Unit => f.write_str("O"),
            Expr::Zero => f.write_str("Z"),
        }
    }
}

/// Parses and normalizes in one step.
pub fn parse_bundle(input: &str) -> Result<BundleObject, ExprError> {
    parse(input).map(|e| e.eval())
}

/// Canonical text of a normal form; `parse_bundle` inverts it.
pub fn print_canonical(a: &BundleObject) -> String {
    a.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn parse_sum_of_tensor_and_multiple() {
        let e = parse("E[2]*L[1/3,0] + 2*E[1]").unwrap();
        assert_eq!(
            e,
            Expr::Sum(
                Box::new(Expr::Tensor(
                    Box::new(Expr::Atiyah(2)),
                    Box::new(Expr::Line(q(1, 3), q(0, 1)))
                )),
                Box::new(Expr::Mult(2, Box::new(Expr::Atiyah(1))))
            )
        );
    }

    #[test]
    fn parse_dual() {
        let e = parse("~(E[3]*L[1/3,0])").unwrap();
        assert!(matches!(e, Expr::Dual(_)));
        assert_eq!(e.eval().to_string(), "E[3]*L[2/3,0]");
    }

    #[test]
    fn rank_zero_is_validation_error() {
        match parse("E[0]") {
            Err(ExprError::Validation { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_is_validation_error() {
        assert!(matches!(
            parse("L[1/0,0]"),
            Err(ExprError::Validation { offset: 4, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_offset_and_expected() {
        match parse("E[2] + ") {
            Err(ExprError::Syntax {
                offset,
                expected,
                found,
            }) => {
                assert_eq!(offset, 7);
                assert!(expected.contains(&"'E['"));
                assert_eq!(found, "end of input");
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse("E[2] E[3]") {
            Err(ExprError::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse("L[1/2;0]"),
            Err(ExprError::Syntax { offset: 5, .. })
        ));
        assert!(matches!(parse("3 E[1]"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("T"), Err(ExprError::Syntax { .. })));
        assert!(matches!(
            parse(""),
            Err(ExprError::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn precedence() {
        // ~ and ^ bind tighter than *, which binds tighter than +.
        let a = parse_bundle("E[2]*E[2] + E[1]").unwrap();
        assert_eq!(a.to_string(), "2*E[1] + E[3]");
        let b = parse_bundle("E[2]^2").unwrap();
        assert_eq!(b.to_string(), "E[1] + E[3]");
        let c = parse_bundle("~Tg^2").unwrap();
        assert_eq!(c.to_string(), "E[1]*~Tg^2");
        let d = parse_bundle("2*E[1]*E[2]").unwrap();
        assert_eq!(d.to_string(), "2*E[2]");
    }

    #[test]
    fn atoms() {
        assert_eq!(parse_bundle("O").unwrap(), BundleObject::unit());
        assert_eq!(parse_bundle("Z").unwrap(), BundleObject::zero());
        assert_eq!(parse_bundle("Z^0").unwrap(), BundleObject::unit());
        assert_eq!(parse_bundle("E[3]^0").unwrap(), BundleObject::unit());
        assert_eq!(
            parse_bundle(" L[ -1/3 , 5/2 ] ").unwrap().to_string(),
            "E[1]*L[2/3,1/2]"
        );
        assert_eq!(parse_bundle("Tfoo_1").unwrap().to_string(), "E[1]*Tfoo_1");
        assert_eq!(parse_bundle("0*E[4]").unwrap(), BundleObject::zero());
    }

    #[test]
    fn canonical_print_examples() {
        let a = parse_bundle("E[3]*L[1/3,0] + E[1] + O").unwrap();
        assert_eq!(print_canonical(&a), "2*E[1] + E[3]*L[1/3,0]");
        assert_eq!(print_canonical(&BundleObject::zero()), "Z");
        assert_eq!(print_canonical(&BundleObject::unit()), "E[1]");
    }

    #[test]
    fn round_trip_with_generators() {
        let a = parse_bundle("3*E[2]*L[1/2,1/3]*Tg^2*~Th + ~E[4]*Th").unwrap();
        let text = print_canonical(&a);
        assert_eq!(parse_bundle(&text).unwrap(), a);
    }
}
