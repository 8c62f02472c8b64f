//! Normalization, tokenizing and parsing of the LaTeX subset used by the
//! printed condition lists.
//!
//! Grammar (after layout normalization, braces act as parentheses):
//!
//! ```text
//! equation := sum '=' sum
//! sum      := ['-'] term (('+' | '-') term)*
//! term     := product [op product]        a second op is an error
//! product  := atom atom*                  juxtaposition
//! atom     := number | '(' sum ')' | head ['(' sum [',' sum] ')']
//! head     := name ['_' sub] [prime*] ['^' (number | '(' '-' 1 ')')]
//! ```

use std::fmt;

use regex::Regex;
use std::sync::OnceLock;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Name(String),
    /// `name^power(args)`; `inverse` marks `^{-1}`.
    Call {
        name: String,
        power: u32,
        inverse: bool,
        args: Vec<Expr>,
    },
    Op {
        sym: String,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Juxt(Vec<Expr>),
    /// Signed terms, `true` for `+`.
    Sum(Vec<(bool, Expr)>),
}

impl Expr {
    /// Variable-like names occurring anywhere in the expression.
    pub fn names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Name(n) => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            Expr::Call { args, .. } => args.iter().for_each(|a| a.names(out)),
            Expr::Op { lhs, rhs, .. } => {
                lhs.names(out);
                rhs.names(out);
            }
            Expr::Juxt(fs) => fs.iter().for_each(|f| f.names(out)),
            Expr::Sum(ts) => ts.iter().for_each(|(_, t)| t.names(out)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// Strips layout commands and splits at `\quad` into single equations.
pub fn normalize(text: &str) -> Vec<String> {
    static LABEL: OnceLock<Regex> = OnceLock::new();
    static EMPTY: OnceLock<Regex> = OnceLock::new();
    static SINGLE: OnceLock<Regex> = OnceLock::new();
    let label = LABEL.get_or_init(|| Regex::new(r"\\label\{[^}]*\}").unwrap());
    let empty = EMPTY.get_or_init(|| Regex::new(r"\{\s*\}").unwrap());
    let single = SINGLE.get_or_init(|| Regex::new(r"\{\s*([A-Za-z])\s*\}").unwrap());

    let mut s = label.replace_all(text, "").into_owned();
    s = s.replace("\\mbox{ + }", " + ");
    s = s.replace("\\\\", " ");
    for layout in [
        "\\notag",
        "\\nonumber",
        "\\qquad",
        "\\left",
        "\\right",
        "\\bigl",
        "\\bigr",
        "\\Bigl",
        "\\Bigr",
        "\\big",
        "\\Big",
        "\\,",
        "\\;",
        "\\!",
        "&",
    ] {
        s = s.replace(layout, " ");
    }
    s = empty.replace_all(&s, " ").into_owned();
    s = single.replace_all(&s, "$1").into_owned();
    s.split("\\quad")
        .map(|piece| {
            let piece = piece.split_whitespace().collect::<Vec<_>>().join(" ");
            piece.trim_end_matches([',', '.', ' ']).to_string()
        })
        .filter(|piece| !piece.is_empty())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Eq,
    Under,
    Caret,
    Prime,
    Num(i64),
    Name(String),
    Op(String),
}

const OPS: [&str; 9] = ["\\circ", "\\cdot", "\\trr", "\\trl", "\\ppr", "\\ppl", "\\prec", "\\succ", "\\diamond"];
const GREEK: [&str; 5] = ["\\omega", "\\lambda", "\\mu", "\\nu", "\\sigma"];

fn lex(s: &str) -> Result<Vec<Tok>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' | '{' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' | '}' => {
                out.push(Tok::RParen);
                i += 1
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '=' => {
                out.push(Tok::Eq);
                i += 1
            }
            '_' => {
                out.push(Tok::Under);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '\'' => {
                out.push(Tok::Prime);
                i += 1
            }
            '*' | '<' | '>' => {
                out.push(Tok::Op(c.to_string()));
                i += 1
            }
            '\\' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let cmd: String = chars[start..i].iter().collect();
                if cmd == "\\ast" {
                    out.push(Tok::Op("*".into()));
                } else if OPS.contains(&cmd.as_str()) {
                    out.push(Tok::Op(cmd));
                } else if GREEK.contains(&cmd.as_str()) {
                    out.push(Tok::Name(cmd));
                } else {
                    return err(format!("unknown command {cmd}"));
                }
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().map_err(|_| ParseError(format!("bad number {digits}")))?));
            }
            _ if c.is_ascii_alphabetic() => {
                out.push(Tok::Name(c.to_string()));
                i += 1
            }
            _ => return err(format!("unexpected character {c:?}")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => err(format!("expected {t:?}, found {got:?}")),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut sign = true;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            sign = false;
        }
        loop {
            terms.push((sign, self.term()?));
            match self.peek() {
                Some(Tok::Plus) => sign = true,
                Some(Tok::Minus) => sign = false,
                _ => break,
            }
            self.pos += 1;
        }
        if terms.len() == 1 && terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.product()?;
        if let Some(Tok::Op(sym)) = self.peek().cloned() {
            self.pos += 1;
            let sym = sym + &self.primes();
            let rhs = self.product()?;
            if let Some(Tok::Op(next)) = self.peek() {
                return err(format!("unparenthesized operator chain at {next}"));
            }
            return Ok(Expr::Op { sym, lhs: Box::new(lhs), rhs: Box::new(rhs) });
        }
        Ok(lhs)
    }

    fn primes(&mut self) -> String {
        let mut s = String::new();
        while self.peek() == Some(&Tok::Prime) {
            self.pos += 1;
            s.push('\'');
        }
        s
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::LParen | Tok::Num(_) | Tok::Name(_)))
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        if !self.starts_atom() {
            return err(format!("expected operand, found {:?}", self.peek()));
        }
        let mut factors = Vec::new();
        while self.starts_atom() {
            factors.push(self.atom()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        Ok(Expr::Juxt(factors))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::LParen) => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Name(base)) => self.head(base),
            t => err(format!("expected operand, found {t:?}")),
        }
    }

    fn head(&mut self, base: String) -> Result<Expr, ParseError> {
        let mut name = base;
        if self.peek() == Some(&Tok::Under) {
            self.pos += 1;
            name.push('_');
            match self.next() {
                Some(Tok::Num(n)) => name.push_str(&n.to_string()),
                Some(Tok::Name(s)) | Some(Tok::Op(s)) => name.push_str(&s),
                t => return err(format!("bad subscript {t:?}")),
            }
        }
        name.push_str(&self.primes());
        let mut power = 1;
        let mut inverse = false;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) if n >= 1 => power = n as u32,
                Some(Tok::LParen) => {
                    self.expect(Tok::Minus)?;
                    self.expect(Tok::Num(1))?;
                    self.expect(Tok::RParen)?;
                    inverse = true;
                }
                t => return err(format!("bad exponent {t:?}")),
            }
        }
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let mut args = vec![self.sum()?];
            if self.peek() == Some(&Tok::Comma) {
                self.pos += 1;
                args.push(self.sum()?);
            }
            self.expect(Tok::RParen)?;
            if self.peek() == Some(&Tok::Under) {
                return err(format!("subscript after application of {name}"));
            }
            return Ok(Expr::Call { name, power, inverse, args });
        }
        if power != 1 || inverse {
            return err(format!("exponent on non-applied {name}"));
        }
        if self.peek() == Some(&Tok::Under) {
            return err(format!("double subscript on {name}"));
        }
        Ok(Expr::Name(name))
    }
}

/// Parses one normalized equation.
pub fn parse_equation(text: &str) -> Result<Equation, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let lhs = p.sum()?;
    p.expect(Tok::Eq)?;
    let rhs = p.sum()?;
    if let Some(t) = p.peek() {
        return err(format!("trailing input at {t:?}"));
    }
    Ok(Equation { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> Expr {
        Expr::Name(s.into())
    }

    #[test]
    fn normalize_strips_layout_and_splits() {
        let eqs = normalize(r"\mu ( {D( x )} ) = 0,\quad\lambda ( {T( x )} ) = 0,");
        assert_eq!(eqs.len(), 2);
        assert_eq!(eqs[1], r"\lambda ( {T( x )} ) = 0");
        let eqs = normalize("\\notag&& a \\\\ &=& b , ,");
        assert_eq!(eqs, vec!["a = b".to_string()]);
    }

    #[test]
    fn parses_operators_calls_and_subscripts() {
        let eq = parse_equation(r"(u \trl x) \trl z = \omega_> (u,v) + D^2(x) + k_0 x_0").unwrap();
        match eq.lhs {
            Expr::Op { ref sym, .. } => assert_eq!(sym, "\\trl"),
            ref e => panic!("{e:?}"),
        }
        match eq.rhs {
            Expr::Sum(ref ts) => {
                assert_eq!(ts.len(), 3);
                assert!(matches!(&ts[0].1, Expr::Call { name, args, .. } if name == "\\omega_>" && args.len() == 2));
                assert!(matches!(&ts[1].1, Expr::Call { name, power: 2, .. } if name == "D"));
                assert_eq!(ts[2].1, Expr::Juxt(vec![name("k_0"), name("x_0")]));
            }
            ref e => panic!("{e:?}"),
        }
    }

    #[test]
    fn primes_attach_to_ops_and_names() {
        let eq = parse_equation(r"s(u \trl x) = s(u)\trl ' x + \omega' (u, v)").unwrap();
        let mut names = Vec::new();
        eq.rhs.names(&mut names);
        assert_eq!(names, vec!["u", "x", "v"]);
        match eq.rhs {
            Expr::Sum(ts) => {
                assert!(matches!(&ts[0].1, Expr::Op { sym, .. } if sym == "\\trl'"));
                assert!(matches!(&ts[1].1, Expr::Call { name, .. } if name == "\\omega'"));
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn rejects_garbled_fragments() {
        for bad in [r"(v\succ)\prec x = 0", r"T( x )_0 = x", r"x \succ y \prec z = 0", r"x \foo y = 0", "x + y"] {
            assert!(parse_equation(&normalize(bad).join(" ")).is_err(), "{bad}");
        }
    }

    #[test]
    fn inverse_exponent() {
        let eq = parse_equation(r"u = s^{-1}(s(u))").unwrap();
        assert!(matches!(eq.rhs, Expr::Call { inverse: true, .. }));
    }
}
