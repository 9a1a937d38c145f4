//! The expression language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '#') unary)*
//! unary   := '-' unary | atom
//! atom    := NAME | NAME '(' args ')' | RATIONAL | '(' expr ')'
//!          | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//! ```
//!
//! `*` is the Zinbiel product (a scalar multiple when its left operand is a
//! literal), `#` the shuffle product, `[f,g]` the commutator and `{f,g}` the
//! anticommutator. Calls: `p(f)`, `bar(f)`, `D(f)`, `J(f,g,h)`. Products must
//! be explicit: `3/2 x` is rejected, write `3/2*x`.

use std::fmt;

use zinbiel_core::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    P,
    Bar,
    Dynkin,
    Jacobiator,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "p" => Func::P,
            "bar" => Func::Bar,
            "D" => Func::Dynkin,
            "J" => Func::Jacobiator,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::P => "p",
            Func::Bar => "bar",
            Func::Dynkin => "D",
            Func::Jacobiator => "J",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Jacobiator => 3,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(String),
    /// Non-negative rational literal.
    Lit(Scalar),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    /// `c*e` with `c` a literal.
    Scale(Scalar, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Shuffle(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Brace(Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {column}: {message}")]
pub struct SyntaxError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Lit(Scalar),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(n) => write!(f, "`{n}`"),
            Tok::Lit(c) => write!(f, "`{c}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |column: usize, message: String| SyntaxError { column, message };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_lowercase() || c == 'D' || c == 'J' {
            let start = i;
            i += 1;
            if c.is_ascii_lowercase() {
                while i < chars.len() && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit()) {
                    i += 1;
                }
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut text: String = chars[start..i].iter().collect();
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                text.push('/');
                text.extend(&chars[s..i]);
            }
            let value = text.parse::<Scalar>().map_err(|_| err(col, format!("invalid rational literal `{text}`")))?;
            out.push((Tok::Lit(value), col));
        } else if "+-*#()[]{},".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(col, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: String) -> Result<T, SyntaxError> {
        Err(SyntaxError { column: self.column(), message })
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            let found = self.peek().clone();
            self.fail(format!("expected `{c}`, found {found}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = match lhs {
                        Expr::Lit(c) => Expr::Scale(c, Box::new(rhs)),
                        other => Expr::Mul(Box::new(other), Box::new(rhs)),
                    };
                }
                Tok::Sym('#') => {
                    self.bump();
                    lhs = Expr::Shuffle(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn pair(&mut self, close: char) -> Result<(Expr, Expr), SyntaxError> {
        let a = self.expr()?;
        self.expect(',')?;
        let b = self.expr()?;
        self.expect(close)?;
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let col = self.column();
        match self.bump() {
            Tok::Lit(c) => Ok(Expr::Lit(c)),
            Tok::Name(name) => {
                let func = Func::from_name(&name);
                let is_call = *self.peek() == Tok::Sym('(');
                match (func, is_call) {
                    (Some(f), true) => {
                        self.bump();
                        let mut args = vec![self.expr()?];
                        while *self.peek() == Tok::Sym(',') {
                            self.bump();
                            args.push(self.expr()?);
                        }
                        self.expect(')')?;
                        if args.len() != f.arity() {
                            return Err(SyntaxError {
                                column: col,
                                message: format!("`{}` takes {} argument(s), found {}", f.name(), f.arity(), args.len()),
                            });
                        }
                        Ok(Expr::Call(f, args))
                    }
                    (None, true) => Err(SyntaxError { column: col, message: format!("unknown function `{name}`") }),
                    (_, false) if name == "D" || name == "J" => {
                        Err(SyntaxError { column: col, message: format!("`{name}` must be called with arguments") })
                    }
                    (_, false) => Ok(Expr::Gen(name)),
                }
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                let (a, b) = self.pair(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Tok::Sym('{') => {
                let (a, b) = self.pair('}')?;
                Ok(Expr::Brace(Box::new(a), Box::new(b)))
            }
            t => Err(SyntaxError { column: col, message: format!("expected an operand, found {t}") }),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        Tok::Name(_) | Tok::Lit(_) | Tok::Sym('(') | Tok::Sym('[') | Tok::Sym('{') => {
            let found = p.peek().clone();
            p.fail(format!("unexpected {found}; products must be written with `*`"))
        }
        t => {
            let t = t.clone();
            p.fail(format!("unexpected {t}"))
        }
    }
}

/// Binding strength used by the printer: higher binds tighter.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) | Expr::Shuffle(..) | Expr::Scale(..) => 1,
        Expr::Neg(..) => 2,
        _ => 3,
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the minimal parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(n) => f.write_str(n),
            Expr::Lit(c) => write!(f, "{c}"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                wrap(f, a, 0)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                wrap(f, b, 1)
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 2)
            }
            Expr::Scale(c, a) => {
                write!(f, "{c}*")?;
                wrap(f, a, 2)
            }
            Expr::Mul(a, b) | Expr::Shuffle(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "#" })?;
                wrap(f, b, 2)
            }
            Expr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            Expr::Brace(a, b) => write!(f, "{{{a},{b}}}"),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}
