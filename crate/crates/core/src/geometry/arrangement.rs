use std::fmt;

use num_traits::Zero;

use crate::arith::{parse_field_element, OrderedField, Sign};
use crate::error::{Error, Result};
use crate::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point<F> {
    pub x: F,
    pub y: F,
}

impl<F: OrderedField> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point { x, y }
    }

    pub fn add(&self, dx: &F, dy: &F) -> Self {
        Point { x: self.x.clone() + dx.clone(), y: self.y.clone() + dy.clone() }
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let two = F::from_integer(2);
        Point {
            x: (self.x.clone() + other.x.clone()) / two.clone(),
            y: (self.y.clone() + other.y.clone()) / two,
        }
    }
}

/// The locus `a·x + b·y = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    /// 1-based position in the arrangement; fixes the `e_i` numbering.
    pub index: usize,
    /// Display label. Equal to `index` unless the arrangement was renumbered.
    pub label: usize,
}

impl<F: OrderedField> Line<F> {
    pub fn eval(&self, p: &Point<F>) -> F {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() - self.c.clone()
    }

    pub fn side(&self, p: &Point<F>) -> Sign {
        self.eval(p).sign()
    }

    /// Direction vector `(−b, a)`.
    pub fn direction(&self) -> (F, F) {
        (-self.b.clone(), self.a.clone())
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        (self.a.clone() * other.b.clone() - self.b.clone() * other.a.clone()).is_zero()
    }

    fn coincides(&self, other: &Self) -> bool {
        let cross = |p: &F, q: &F, r: &F, s: &F| (p.clone() * s.clone() - q.clone() * r.clone()).is_zero();
        self.is_parallel(other)
            && cross(&self.a, &self.c, &other.a, &other.c)
            && cross(&self.b, &self.c, &other.b, &other.c)
    }

    /// Intersection point, or `None` for parallel lines.
    pub fn meet(&self, other: &Self) -> Option<Point<F>> {
        let det = self.a.clone() * other.b.clone() - self.b.clone() * other.a.clone();
        if det.is_zero() {
            return None;
        }
        let x = (self.c.clone() * other.b.clone() - self.b.clone() * other.c.clone()) / det.clone();
        let y = (self.a.clone() * other.c.clone() - self.c.clone() * other.a.clone()) / det;
        Some(Point { x, y })
    }

    /// Some point on the line.
    pub fn base_point(&self) -> Point<F> {
        if !self.a.is_zero() {
            Point::new(self.c.clone() / self.a.clone(), F::zero())
        } else {
            Point::new(F::zero(), self.c.clone() / self.b.clone())
        }
    }
}

/// An ordered list of distinct affine lines in the real plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement<F = FieldElement> {
    lines: Vec<Line<F>>,
}

impl<F: OrderedField> Arrangement<F> {
    /// Validates coefficient triples `(a, b, c)` for `a·x + b·y = c`.
    pub fn new(coefficients: Vec<(F, F, F)>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        let mut lines: Vec<Line<F>> = Vec::with_capacity(coefficients.len());
        for (k, (a, b, c)) in coefficients.into_iter().enumerate() {
            let index = k + 1;
            if a.is_zero() && b.is_zero() {
                return Err(Error::ZeroNormal(index));
            }
            let line = Line { a, b, c, index, label: index };
            if let Some(prev) = lines.iter().find(|l| l.coincides(&line)) {
                return Err(Error::DuplicateLine { first: prev.index, second: index });
            }
            lines.push(line);
        }
        Ok(Arrangement { lines })
    }

    /// Replaces the display labels.
    pub fn with_labels(mut self, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), self.lines.len());
        for (line, &l) in self.lines.iter_mut().zip(labels) {
            line.label = l;
        }
        self
    }

    /// Lines at the given 1-based positions, renumbered by position but
    /// keeping their labels.
    pub fn sub_arrangement(&self, positions: &[usize]) -> Result<Self> {
        let mut lines = Vec::with_capacity(positions.len());
        for (k, &p) in positions.iter().enumerate() {
            let src = self
                .lines
                .get(p.wrapping_sub(1))
                .ok_or(Error::IndexOutOfRange { index: p, len: self.lines.len() })?;
            lines.push(Line { index: k + 1, ..src.clone() });
        }
        if lines.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        Ok(Arrangement { lines })
    }

    pub fn lines(&self) -> &[Line<F>] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.lines.iter().map(|l| l.label).collect()
    }

    pub fn sign_vector(&self, p: &Point<F>) -> Vec<Sign> {
        self.lines.iter().map(|l| l.side(p)).collect()
    }
}

impl<F: OrderedField + fmt::Display> fmt::Display for Arrangement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{} {} {}", l.a, l.b, l.c)?;
        }
        Ok(())
    }
}

/// Planes `a·x + b·y + c·z = 0` through the origin of 3-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralArrangement<F = FieldElement> {
    planes: Vec<[F; 3]>,
}

impl<F: OrderedField> CentralArrangement<F> {
    pub fn new(planes: Vec<[F; 3]>) -> Result<Self> {
        if planes.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        for (k, p) in planes.iter().enumerate() {
            if p.iter().all(Zero::is_zero) {
                return Err(Error::ZeroNormal(k + 1));
            }
        }
        Ok(CentralArrangement { planes })
    }

    /// Planes `a·x + b·y + c·z = d`; every `d` must vanish.
    pub fn from_affine_planes(planes: Vec<[F; 4]>) -> Result<Self> {
        let mut out = Vec::with_capacity(planes.len());
        for (k, [a, b, c, d]) in planes.into_iter().enumerate() {
            if !d.is_zero() {
                return Err(Error::NotCentral(k + 1));
            }
            out.push([a, b, c]);
        }
        Self::new(out)
    }

    pub fn planes(&self) -> &[[F; 3]] {
        &self.planes
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }
}

impl<F: OrderedField + fmt::Display> fmt::Display for CentralArrangement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "central")?;
        for [a, b, c] in &self.planes {
            writeln!(f, "{a} {b} {c}")?;
        }
        Ok(())
    }
}

/// Contents of an arrangement file.
#[derive(Debug, Clone)]
pub enum ArrangementFile {
    Affine(Arrangement),
    Central(CentralArrangement),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Tokenizes non-comment content as `(line number, [(column, token)])`.
fn tokenize(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (ci, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(ci),
                (true, Some(s)) => {
                    tokens.push((s, &content[s..ci]));
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push((ln + 1, tokens));
        }
    }
    out
}

fn parse_token(line: usize, column: usize, tok: &str) -> Result<FieldElement> {
    parse_field_element(tok).map_err(|e| syntax(line, column + e.offset + 1, e.message))
}

/// Parses an `.arr` file: either affine lines `a b c` or, after a `central`
/// header, planes `a b c` (or `a b c d` with `d = 0`).
pub fn parse_file(text: &str) -> Result<ArrangementFile> {
    let lines = tokenize(text);
    let central = lines.first().is_some_and(|(_, toks)| toks.len() == 1 && toks[0].1 == "central");
    if central {
        let mut planes = Vec::new();
        for (ln, toks) in &lines[1..] {
            let vals = toks
                .iter()
                .map(|(c, t)| parse_token(*ln, *c, t))
                .collect::<Result<Vec<_>>>()?;
            let plane_no = planes.len() + 1;
            match <[FieldElement; 4]>::try_from(vals.clone()) {
                Ok(p) => planes.push(p),
                Err(_) => match <[FieldElement; 3]>::try_from(vals) {
                    Ok([a, b, c]) => planes.push([a, b, c, FieldElement::zero()]),
                    Err(_) => {
                        return Err(syntax(*ln, 1, format!("plane {plane_no}: expected 3 or 4 field elements")))
                    }
                },
            }
        }
        return Ok(ArrangementFile::Central(CentralArrangement::from_affine_planes(planes)?));
    }
    let mut coeffs = Vec::new();
    for (ln, toks) in &lines {
        if toks.len() != 3 {
            let col = toks.get(3).map_or(toks.last().map_or(1, |t| t.0 + 1), |t| t.0 + 1);
            return Err(syntax(*ln, col, format!("expected 3 field elements, found {}", toks.len())));
        }
        let a = parse_token(*ln, toks[0].0, toks[0].1)?;
        let b = parse_token(*ln, toks[1].0, toks[1].1)?;
        let c = parse_token(*ln, toks[2].0, toks[2].1)?;
        coeffs.push((a, b, c));
    }
    Ok(ArrangementFile::Affine(Arrangement::new(coeffs)?))
}

/// Parses an affine `.arr` file.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    match parse_file(text)? {
        ArrangementFile::Affine(a) => Ok(a),
        ArrangementFile::Central(_) => Err(syntax(1, 1, "expected an affine arrangement, found `central`")),
    }
}

/// Parses a central arrangement file (with the `central` header).
pub fn parse_central(text: &str) -> Result<CentralArrangement> {
    match parse_file(text)? {
        ArrangementFile::Central(c) => Ok(c),
        ArrangementFile::Affine(_) => Err(syntax(1, 1, "missing `central` header")),
    }
}
