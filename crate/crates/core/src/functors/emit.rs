//! Matrix text format.
//!
//! ```text
//! # functor=theta n=2 k=1 l=1 rows=2 cols=2
//! 1 0
//! 0 1
//! ```
//!
//! The sparse variant lists `row col value` for nonzero entries only.

use std::fmt::Write;

use num_traits::Zero;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::functors::DenseOperator;
use crate::notation::{format_scalar, parse_scalar};
use crate::setpart::DiagramShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatrixLayout {
    #[default]
    Dense,
    Sparse,
}

pub fn format_matrix(functor: &str, m: &DenseOperator, layout: MatrixLayout) -> String {
    let s = m.shape();
    let mut out = format!(
        "# functor={functor} n={} k={} l={} rows={} cols={}\n",
        m.n(),
        s.k,
        s.l,
        m.rows(),
        m.cols()
    );
    match layout {
        MatrixLayout::Dense => {
            for r in 0..m.rows() {
                let row: Vec<String> = (0..m.cols()).map(|c| format_scalar(m.get(r, c))).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        MatrixLayout::Sparse => {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let x = m.get(r, c);
                    if !x.is_zero() {
                        let _ = writeln!(out, "{r} {c} {}", format_scalar(x));
                    }
                }
            }
        }
    }
    out
}

fn header_field<'a>(fields: &'a [(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::parse(0, format!("header is missing '{key}'")))
}

fn header_number(fields: &[(&str, &str)], key: &str) -> Result<usize> {
    header_field(fields, key)?
        .parse()
        .map_err(|_| Error::parse(0, format!("bad value for '{key}'")))
}

/// Parses either layout. A body of exactly `rows` lines of `cols` entries is
/// read as dense, anything else as sparse; use [`parse_matrix_as`] when
/// that is ambiguous.
pub fn parse_matrix(text: &str) -> Result<(String, DenseOperator)> {
    parse_matrix_impl(text, None)
}

pub fn parse_matrix_as(text: &str, layout: MatrixLayout) -> Result<(String, DenseOperator)> {
    parse_matrix_impl(text, Some(layout))
}

fn parse_matrix_impl(text: &str, layout: Option<MatrixLayout>) -> Result<(String, DenseOperator)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let body = header
        .trim()
        .strip_prefix('#')
        .ok_or_else(|| Error::parse(0, "expected '#' header"))?;
    let fields: Vec<(&str, &str)> = body.split_whitespace().filter_map(|f| f.split_once('=')).collect();
    let name = header_field(&fields, "functor")?.to_string();
    let n = header_number(&fields, "n")?;
    let shape = DiagramShape::new(header_number(&fields, "k")?, header_number(&fields, "l")?);
    let mut m = DenseOperator::zeros(n, shape);
    if header_number(&fields, "rows")? != m.rows() || header_number(&fields, "cols")? != m.cols() {
        return Err(Error::parse(0, "rows/cols disagree with n, k, l"));
    }
    let rest: Vec<(usize, Vec<&str>)> = lines.map(|(i, l)| (i, l.split_whitespace().collect())).collect();
    let layout = layout.unwrap_or_else(|| {
        if rest.len() == m.rows() && rest.iter().all(|(_, t)| t.len() == m.cols()) {
            MatrixLayout::Dense
        } else {
            MatrixLayout::Sparse
        }
    });
    let value = |tok: &str, line: usize| -> Result<Scalar> {
        parse_scalar(tok).map_err(|_| Error::parse(line, format!("bad entry '{tok}' on line {}", line + 1)))
    };
    let index = |tok: &str, bound: usize, line: usize| -> Result<usize> {
        tok.parse::<usize>()
            .ok()
            .filter(|&i| i < bound)
            .ok_or_else(|| Error::parse(line, format!("bad index '{tok}' on line {}", line + 1)))
    };
    match layout {
        MatrixLayout::Dense => {
            if rest.len() != m.rows() {
                return Err(Error::parse(0, format!("expected {} rows, found {}", m.rows(), rest.len())));
            }
            for (r, (line, toks)) in rest.iter().enumerate() {
                if toks.len() != m.cols() {
                    return Err(Error::parse(*line, format!("line {} has {} entries", line + 1, toks.len())));
                }
                for (c, tok) in toks.iter().enumerate() {
                    m.set(r, c, value(tok, *line)?);
                }
            }
        }
        MatrixLayout::Sparse => {
            for (line, toks) in &rest {
                if toks.len() != 3 {
                    return Err(Error::parse(*line, format!("line {} is not 'row col value'", line + 1)));
                }
                let r = index(toks[0], m.rows(), *line)?;
                let c = index(toks[1], m.cols(), *line)?;
                m.set(r, c, value(toks[2], *line)?);
            }
        }
    }
    Ok((name, m))
}
