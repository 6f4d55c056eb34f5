//! Composite centers built from catalog entries.
//!
//! The textual form is a small functional syntax, e.g.
//! `midpoint(X1, X4)` or `isogonal(excentral, X9)`. Short aliases such as
//! `Be` or `M_IH` expand to expressions.

use std::fmt;
use std::str::FromStr;

use super::{anticomplement, complement, CenterError, CenterId, Result, SubTriangle, TriangleKind};
use crate::kernel::{self, HomPoint, RefTriangle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CenterExpr {
    Catalog(CenterId),
    MidpointOf(Box<CenterExpr>, Box<CenterExpr>),
    /// First operand reflected through the second.
    ReflectThrough(Box<CenterExpr>, Box<CenterExpr>),
    Complement(Box<CenterExpr>),
    Anticomplement(Box<CenterExpr>),
    IsogonalIn(TriangleKind, Box<CenterExpr>),
    IsotomicIn(TriangleKind, Box<CenterExpr>),
    CenterOf(TriangleKind, CenterId),
    /// Vertex index is 1-based, as written.
    VertexOf(TriangleKind, usize),
    AntipodeOf(TriangleKind, usize),
}

use CenterExpr::*;

const ALIASES: &[(&str, &str)] = &[
    ("I", "X1"),
    ("M", "X2"),
    ("G", "X2"),
    ("O", "X3"),
    ("H", "X4"),
    ("E", "X5"),
    ("Sy", "X6"),
    ("Ge", "X7"),
    ("Na", "X8"),
    ("Mi", "X9"),
    ("Sp", "X10"),
    ("L", "X20"),
    ("S", "X21"),
    ("GOT", "X25"),
    ("MB", "X39"),
    ("Be", "X40"),
    ("K", "X54"),
    ("LP", "X64"),
    ("B3", "X76"),
    ("F", "X355"),
    ("Ta", "X389"),
    ("A", "VertexA"),
    ("B", "VertexB"),
    ("C", "VertexC"),
    ("MiP", "isogonal(base, X9)"),
    ("MiPP", "isogonal(excentral, X9)"),
    ("BeP", "isogonal(base, X40)"),
    ("SyA", "anticomplement(X6)"),
    ("HA", "isogonal(medial, center(medial, X20))"),
    ("M_IH", "midpoint(X1, X4)"),
    ("M_MH", "midpoint(X2, X4)"),
    ("M_MiI", "midpoint(X9, X1)"),
];

/// Alias names accepted by the parser, in catalog order.
pub fn alias_names() -> impl Iterator<Item = &'static str> {
    ALIASES.iter().map(|(a, _)| *a)
}

impl CenterExpr {
    pub fn catalog(id: CenterId) -> Self {
        Catalog(id)
    }

    pub fn midpoint(p: CenterExpr, q: CenterExpr) -> Self {
        MidpointOf(Box::new(p), Box::new(q))
    }

    pub fn isogonal_in(kind: TriangleKind, e: CenterExpr) -> Self {
        IsogonalIn(kind, Box::new(e))
    }

    /// Looks up a name: a catalog tag or an alias.
    pub fn named(name: &str) -> Result<Self> {
        name.parse()
    }

    pub fn eval(&self, t: &RefTriangle) -> Result<HomPoint> {
        eval_expr(t, self)
    }
}

fn sub(t: &RefTriangle, kind: TriangleKind) -> Result<SubTriangle> {
    super::derived_triangle(t, kind)
}

fn vertex_index(i: usize) -> Result<usize> {
    if (1..=3).contains(&i) {
        Ok(i - 1)
    } else {
        Err(CenterError::InvalidIndex(i))
    }
}

/// Structural evaluation of an expression on the reference triangle.
pub fn eval_expr(t: &RefTriangle, e: &CenterExpr) -> Result<HomPoint> {
    match e {
        Catalog(id) => super::eval_center(t, *id),
        MidpointOf(p, q) => Ok(kernel::midpoint(&eval_expr(t, p)?, &eval_expr(t, q)?)?),
        ReflectThrough(p, c) => Ok(kernel::reflect(&eval_expr(t, p)?, &eval_expr(t, c)?)?),
        Complement(p) => Ok(complement(&eval_expr(t, p)?)),
        Anticomplement(p) => Ok(anticomplement(&eval_expr(t, p)?)),
        IsogonalIn(kind, p) => sub(t, *kind)?.isogonal(&eval_expr(t, p)?),
        IsotomicIn(kind, p) => sub(t, *kind)?.isotomic(&eval_expr(t, p)?),
        CenterOf(kind, id) => sub(t, *kind)?.center(*id),
        VertexOf(kind, i) => Ok(sub(t, *kind)?.vertex(vertex_index(*i)?).clone()),
        AntipodeOf(kind, i) => sub(t, *kind)?.antipode(vertex_index(*i)?),
    }
}

impl fmt::Display for CenterExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Catalog(id) => write!(f, "{id}"),
            MidpointOf(p, q) => write!(f, "midpoint({p}, {q})"),
            ReflectThrough(p, q) => write!(f, "reflect({p}, {q})"),
            Complement(p) => write!(f, "complement({p})"),
            Anticomplement(p) => write!(f, "anticomplement({p})"),
            IsogonalIn(k, p) => write!(f, "isogonal({k}, {p})"),
            IsotomicIn(k, p) => write!(f, "isotomic({k}, {p})"),
            CenterOf(k, id) => write!(f, "center({k}, {id})"),
            VertexOf(k, i) => write!(f, "vertex({k}, {i})"),
            AntipodeOf(k, i) => write!(f, "antipode({k}, {i})"),
        }
    }
}

impl FromStr for CenterExpr {
    type Err = CenterError;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0, src: s };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(usize),
    Open,
    Close,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            ',' => {
                chars.next();
                out.push(Token::Comma);
            }
            c if c.is_ascii_digit() => {
                let mut n = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    n.push(d);
                    chars.next();
                }
                out.push(Token::Number(n.parse().map_err(|_| CenterError::Parse(s.to_string()))?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                    id.push(d);
                    chars.next();
                }
                out.push(Token::Ident(id));
            }
            _ => return Err(CenterError::Parse(format!("unexpected character {ch:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> CenterError {
        CenterError::Parse(format!("{what} in {:?}", self.src))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        if self.next() == Some(t.clone()) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {t:?}")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.next() {
            Some(Token::Ident(s)) => Ok(s),
            _ => Err(self.error("expected a name")),
        }
    }

    fn kind(&mut self) -> Result<TriangleKind> {
        self.ident()?.parse()
    }

    fn index(&mut self) -> Result<usize> {
        match self.next() {
            Some(Token::Number(n)) => vertex_index(n).map(|_| n),
            _ => Err(self.error("expected a vertex index")),
        }
    }

    fn expr(&mut self) -> Result<CenterExpr> {
        let name = self.ident()?;
        if self.tokens.get(self.pos) != Some(&Token::Open) {
            if let Ok(id) = name.parse::<CenterId>() {
                return Ok(Catalog(id));
            }
            return match ALIASES.iter().find(|(a, _)| *a == name) {
                Some((_, target)) => target.parse(),
                None => Err(CenterError::UnknownCenter(name)),
            };
        }
        self.expect(Token::Open)?;
        let e = match name.to_ascii_lowercase().as_str() {
            "midpoint" | "reflect" => {
                let p = self.expr()?;
                self.expect(Token::Comma)?;
                let q = self.expr()?;
                if name.eq_ignore_ascii_case("midpoint") {
                    MidpointOf(Box::new(p), Box::new(q))
                } else {
                    ReflectThrough(Box::new(p), Box::new(q))
                }
            }
            "complement" => Complement(Box::new(self.expr()?)),
            "anticomplement" => Anticomplement(Box::new(self.expr()?)),
            "isogonal" | "isotomic" => {
                let k = self.kind()?;
                self.expect(Token::Comma)?;
                let p = Box::new(self.expr()?);
                if name.eq_ignore_ascii_case("isogonal") {
                    IsogonalIn(k, p)
                } else {
                    IsotomicIn(k, p)
                }
            }
            "center" => {
                let k = self.kind()?;
                self.expect(Token::Comma)?;
                let id = self.ident()?.parse()?;
                CenterOf(k, id)
            }
            "vertex" | "antipode" => {
                let k = self.kind()?;
                self.expect(Token::Comma)?;
                let i = self.index()?;
                if name.eq_ignore_ascii_case("vertex") {
                    VertexOf(k, i)
                } else {
                    AntipodeOf(k, i)
                }
            }
            _ => return Err(CenterError::UnknownCenter(name)),
        };
        self.expect(Token::Close)?;
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::eval_center;

    fn t6913() -> RefTriangle {
        RefTriangle::from_int_sides(6, 9, 13).unwrap()
    }

    #[test]
    fn parses_aliases_and_calls() {
        assert_eq!("I".parse::<CenterExpr>().unwrap(), Catalog(CenterId::X1));
        assert_eq!("x40".parse::<CenterExpr>().unwrap(), Catalog(CenterId::X40));
        let h_a: CenterExpr = "HA".parse().unwrap();
        assert_eq!(h_a.to_string(), "isogonal(medial, center(medial, X20))");
        assert!(matches!("nosuch".parse::<CenterExpr>(), Err(CenterError::UnknownCenter(_))));
        assert!("vertex(base, 4)".parse::<CenterExpr>().is_err());
        assert!("midpoint(X1 X4)".parse::<CenterExpr>().is_err());
        for a in alias_names() {
            let e: CenterExpr = a.parse().unwrap();
            assert_eq!(e.to_string().parse::<CenterExpr>().unwrap(), e);
        }
    }

    #[test]
    fn composite_evaluations() {
        let t = t6913();
        let i = eval_center(&t, CenterId::X1).unwrap();
        let h = eval_center(&t, CenterId::X4).unwrap();
        let m_ih: CenterExpr = "M_IH".parse().unwrap();
        assert_eq!(m_ih.eval(&t).unwrap(), kernel::midpoint(&i, &h).unwrap());
        let be_p: CenterExpr = "BeP".parse().unwrap();
        assert_eq!(be_p.eval(&t).unwrap(), eval_center(&t, CenterId::X84).unwrap());
        let mb: CenterExpr = "complement(X76)".parse().unwrap();
        assert_eq!(mb.eval(&t).unwrap(), eval_center(&t, CenterId::X39).unwrap());
        let l: CenterExpr = "reflect(X4, X3)".parse().unwrap();
        assert_eq!(l.eval(&t).unwrap(), eval_center(&t, CenterId::X20).unwrap());
        let v: CenterExpr = "vertex(excentral, 2)".parse().unwrap();
        assert_eq!(v.eval(&t).unwrap(), HomPoint::from_ints(6, -9, 13).unwrap());
    }
}
