//! Text forms for diagrams and diagram sums.
//!
//! A diagram is written `P[k->l]: {1,3}/{2}/{4}`; whitespace is ignored.
//! A sum is `c1 * <diagram> + c2 * <diagram> + ...` with coefficients
//! `p` or `p/q`. The zero sum of shape (k,l) is written `0[k->l]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{DiagramSum, Scalar};
use crate::error::{Error, Result};
use crate::setpart::{make_diagram, Diagram, DiagramShape};

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shape();
        write!(f, "P[{}->{}]:", s.k, s.l)?;
        for (i, b) in self.blocks().iter().enumerate() {
            f.write_str(if i == 0 { " {" } else { "/{" })?;
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            let s = self.shape();
            return write!(f, "0[{}->{}]", s.k, s.l);
        }
        for (i, (d, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * {}", format_scalar(c), d)?;
        }
        Ok(())
    }
}

/// Character cursor that tracks byte positions in the original input.
struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, pos: usize) -> Self {
        Cursor { src, pos }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{token}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "number too large"))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }
}

fn parse_shape(cur: &mut Cursor) -> Result<DiagramShape> {
    cur.expect("[")?;
    let k = cur.number()?;
    cur.expect("->")?;
    let l = cur.number()?;
    cur.expect("]")?;
    Ok(DiagramShape::new(k, l))
}

fn parse_diagram_at(cur: &mut Cursor) -> Result<Diagram> {
    cur.expect("P")?;
    let shape = parse_shape(cur)?;
    cur.expect(":")?;
    let body_start = {
        cur.skip_ws();
        cur.pos
    };
    let mut blocks = Vec::new();
    if cur.peek() == Some('{') {
        loop {
            cur.expect("{")?;
            let mut block = Vec::new();
            if cur.peek() != Some('}') {
                loop {
                    block.push(cur.number()?);
                    if cur.peek() == Some(',') {
                        cur.expect(",")?;
                    } else {
                        break;
                    }
                }
            }
            cur.expect("}")?;
            blocks.push(block);
            if cur.peek() == Some('/') {
                cur.expect("/")?;
            } else {
                break;
            }
        }
    }
    make_diagram(shape, blocks).map_err(|e| Error::parse(body_start, e.to_string()))
}

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut cur = Cursor::new(text, 0);
    let d = parse_diagram_at(&mut cur)?;
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "trailing input after diagram"));
    }
    Ok(d)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    parse_scalar_at(text.trim(), 0)
}

fn parse_scalar_at(text: &str, offset: usize) -> Result<Scalar> {
    let bad = || Error::parse(offset, format!("invalid rational '{text}'"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::parse(offset, "zero denominator"));
    }
    Ok(BigRational::new(p, q))
}

pub fn parse_sum(text: &str) -> Result<DiagramSum> {
    let mut cur = Cursor::new(text, 0);
    if cur.peek() == Some('0') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.peek() == Some('[') {
            let shape = parse_shape(&mut cur)?;
            if !cur.at_end() {
                return Err(Error::parse(cur.pos, "trailing input after zero sum"));
            }
            return Ok(DiagramSum::zero(shape));
        }
        cur.pos = save;
    }

    let mut terms: Vec<(Scalar, Diagram)> = Vec::new();
    loop {
        cur.skip_ws();
        let coeff = if cur.peek() == Some('P') {
            Scalar::one()
        } else {
            let start = cur.pos;
            let end = text[start..].find('*').map(|i| start + i).ok_or_else(|| {
                Error::parse(start, "expected 'coefficient * diagram' or a diagram")
            })?;
            let c = parse_scalar_at(text[start..end].trim(), start)?;
            cur.pos = end + 1;
            c
        };
        let d = parse_diagram_at(&mut cur)?;
        terms.push((coeff, d));
        if cur.at_end() {
            break;
        }
        cur.expect("+")?;
    }
    let shape = terms[0].1.shape();
    DiagramSum::normalize(terms, shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::setpart::enumerate_partition_diagrams;

    #[test]
    fn diagram_round_trip() {
        for d in enumerate_partition_diagrams(DiagramShape::new(2, 2)) {
            let text = d.to_string();
            assert_eq!(parse_diagram(&text).unwrap(), d, "{text}");
        }
        let d = parse_diagram("P[2->2]: {1,3}/{2}/{4}").unwrap();
        assert_eq!(d.to_string(), "P[2->2]: {1,3}/{2}/{4}");
        let spaced = parse_diagram("  P [ 2 -> 2 ] :{ 3 , 1 } / {4}/{ 2 } ").unwrap();
        assert_eq!(spaced, d);
        let empty = parse_diagram("P[0->0]:").unwrap();
        assert_eq!(empty.to_string(), "P[0->0]:");
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_diagram("P[2->2]: {1,3}/{2}/{4") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 21),
            other => panic!("{other:?}"),
        }
        match parse_diagram("Q[1->1]: {1,2}") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        match parse_diagram("P[1->1]: {1,2}/{2}") {
            Err(Error::Parse { position, reason }) => {
                assert_eq!(position, 9);
                assert!(reason.contains("vertex 2"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sum_round_trip() {
        let a = parse_diagram("P[1->1]: {1,2}").unwrap();
        let b = parse_diagram("P[1->1]: {1}/{2}").unwrap();
        let s = DiagramSum::term(BigRational::new(3.into(), 4.into()), a)
            .add(&DiagramSum::term(scalar(-2), b))
            .unwrap();
        let text = s.to_string();
        assert_eq!(text, "-2 * P[1->1]: {1}/{2} + 3/4 * P[1->1]: {1,2}");
        assert_eq!(parse_sum(&text).unwrap(), s);
        let zero = DiagramSum::zero(DiagramShape::new(2, 0));
        assert_eq!(parse_sum(&zero.to_string()).unwrap(), zero);
        assert_eq!(parse_sum("P[1->1]: {1,2}").unwrap().len(), 1);
    }
}
