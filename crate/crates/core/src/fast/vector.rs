//! Order-r tensors over `R^n` in coordinates, and their text format.
//!
//! ```text
//! # n=2 order=1 mode=exact
//! 1/2
//! -3
//! ```

use std::fmt::{self, Write};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::functors::dense::checked_power;
use crate::functors::{DenseOperator, DEFAULT_ENTRY_CAP};
use crate::notation::{format_scalar, parse_scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }

    pub fn from_name(name: &str) -> Result<Mode> {
        match name {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Error::Unknown {
                what: "mode",
                name: name.into(),
            }),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Exact(Vec<Scalar>),
    Float(Vec<f64>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Exact(v) => v.len(),
            Values::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mode(&self) -> Mode {
        match self {
            Values::Exact(_) => Mode::Exact,
            Values::Float(_) => Mode::Float,
        }
    }
}

/// Coordinates of an element of `(R^n)^{⊗r}` in the basis `e_I`, indexed by
/// the mixed-radix encoding of `I`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorVector {
    n: usize,
    order: usize,
    values: Values,
}

impl TensorVector {
    pub fn new(n: usize, order: usize, values: Values) -> Result<Self> {
        let len = checked_power(n, order, DEFAULT_ENTRY_CAP)?;
        if values.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for n={n} order={order} (expected {len})",
                values.len()
            )));
        }
        Ok(TensorVector { n, order, values })
    }

    pub fn exact(n: usize, order: usize, values: Vec<Scalar>) -> Result<Self> {
        Self::new(n, order, Values::Exact(values))
    }

    pub fn float(n: usize, order: usize, values: Vec<f64>) -> Result<Self> {
        Self::new(n, order, Values::Float(values))
    }

    pub fn zeros(n: usize, order: usize, mode: Mode) -> Self {
        let len = n.pow(order as u32);
        let values = match mode {
            Mode::Exact => Values::Exact(vec![Scalar::zero(); len]),
            Mode::Float => Values::Float(vec![0.0; len]),
        };
        TensorVector { n, order, values }
    }

    /// The basis vector `e_I` for the encoded index `I`.
    pub fn basis(n: usize, order: usize, index: usize, mode: Mode) -> Self {
        let mut v = Self::zeros(n, order, mode);
        match &mut v.values {
            Values::Exact(x) => x[index] = Scalar::from_integer(1.into()),
            Values::Float(x) => x[index] = 1.0,
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &Values {
        &self.values
    }

    pub fn into_values(self) -> Values {
        self.values
    }

    pub fn mode(&self) -> Mode {
        self.values.mode()
    }

    pub fn to_float(&self) -> TensorVector {
        let values = match &self.values {
            Values::Exact(v) => Values::Float(v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()),
            Values::Float(v) => Values::Float(v.clone()),
        };
        TensorVector { values, ..*self }
    }

    pub fn as_float(&self) -> Option<&[f64]> {
        match &self.values {
            Values::Float(v) => Some(v),
            Values::Exact(_) => None,
        }
    }

    pub fn as_exact(&self) -> Option<&[Scalar]> {
        match &self.values {
            Values::Exact(v) => Some(v),
            Values::Float(_) => None,
        }
    }

    /// Max-norm distance; exact vectors are compared after conversion.
    pub fn max_abs_diff(&self, other: &TensorVector) -> Result<f64> {
        if self.n != other.n || self.order != other.order {
            return Err(Error::DimensionMismatch(format!(
                "n={} order={} vs n={} order={}",
                self.n, self.order, other.n, other.order
            )));
        }
        if let (Values::Exact(a), Values::Exact(b)) = (&self.values, &other.values) {
            return Ok(a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs().to_f64().unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max));
        }
        let a = self.to_float();
        let b = other.to_float();
        Ok(a.as_float()
            .unwrap()
            .iter()
            .zip(b.as_float().unwrap())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        let f = self.to_float();
        f.as_float().unwrap().iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// Ordinary matrix-vector product in the vector's mode.
pub fn apply_dense(m: &DenseOperator, v: &TensorVector) -> Result<TensorVector> {
    if m.n() != v.n() || m.shape().k != v.order() {
        return Err(Error::DimensionMismatch(format!(
            "operator n={} {} cannot act on a vector with n={} order={}",
            m.n(),
            m.shape(),
            v.n(),
            v.order()
        )));
    }
    let l = m.shape().l;
    let values = match v.values() {
        Values::Exact(x) => {
            let mut out = vec![Scalar::zero(); m.rows()];
            for (r, o) in out.iter_mut().enumerate() {
                for (c, xc) in x.iter().enumerate() {
                    let a = m.get(r, c);
                    if !a.is_zero() && !xc.is_zero() {
                        *o += a * xc;
                    }
                }
            }
            Values::Exact(out)
        }
        Values::Float(x) => Values::Float(m.to_f64().matvec(x)),
    };
    TensorVector::new(v.n(), l, values)
}

pub fn format_vector(v: &TensorVector) -> String {
    let mut out = format!("# n={} order={} mode={}\n", v.n(), v.order(), v.mode());
    match v.values() {
        Values::Exact(x) => x.iter().for_each(|c| {
            let _ = writeln!(out, "{}", format_scalar(c));
        }),
        // `{:?}` prints the shortest representation that reads back exactly
        Values::Float(x) => x.iter().for_each(|c| {
            let _ = writeln!(out, "{c:?}");
        }),
    }
    out
}

pub fn parse_vector(text: &str) -> Result<TensorVector> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let body = header
        .trim()
        .strip_prefix('#')
        .ok_or_else(|| Error::parse(0, "expected '# n=.. order=.. mode=..' header"))?;
    let mut n = None;
    let mut order = None;
    let mut mode = None;
    for field in body.split_whitespace() {
        match field.split_once('=') {
            Some(("n", x)) => n = x.parse::<usize>().ok(),
            Some(("order", x)) => order = x.parse::<usize>().ok(),
            Some(("mode", x)) => mode = Some(Mode::from_name(x).map_err(|e| Error::parse(0, e.to_string()))?),
            _ => return Err(Error::parse(0, format!("unexpected header field '{field}'"))),
        }
    }
    let (Some(n), Some(order), Some(mode)) = (n, order, mode) else {
        return Err(Error::parse(0, "header needs n, order and mode"));
    };
    let tokens: Vec<(usize, &str)> = lines.map(|(i, l)| (i, l.trim())).collect();
    let values = match mode {
        Mode::Exact => Values::Exact(
            tokens
                .iter()
                .map(|&(i, t)| parse_scalar(t).map_err(|_| Error::parse(i, format!("bad value '{t}' on line {}", i + 1))))
                .collect::<Result<_>>()?,
        ),
        Mode::Float => Values::Float(
            tokens
                .iter()
                .map(|&(i, t)| {
                    t.parse::<f64>()
                        .map_err(|_| Error::parse(i, format!("bad value '{t}' on line {}", i + 1)))
                })
                .collect::<Result<_>>()?,
        ),
    };
    TensorVector::new(n, order, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::setpart::DiagramShape;
    use num_rational::BigRational;

    #[test]
    fn text_round_trip() {
        let v = TensorVector::exact(2, 1, vec![BigRational::new(1.into(), 2.into()), scalar(-3)]).unwrap();
        let text = format_vector(&v);
        assert_eq!(text, "# n=2 order=1 mode=exact\n1/2\n-3\n");
        assert_eq!(parse_vector(&text).unwrap(), v);
        let f = TensorVector::float(2, 2, vec![0.1, -2.5, 1e-300, 3.0]).unwrap();
        assert_eq!(parse_vector(&format_vector(&f)).unwrap(), f);
    }

    #[test]
    fn length_is_checked() {
        assert!(matches!(
            TensorVector::float(2, 2, vec![0.0; 3]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(parse_vector("# n=2 order=1 mode=exact\n1\n").is_err());
    }

    #[test]
    fn dense_examples() {
        let ones = DenseOperator::from_i64(4, DiagramShape::new(1, 1), &[1; 16]).unwrap();
        let e1 = TensorVector::basis(4, 1, 0, Mode::Exact);
        let out = apply_dense(&ones, &e1).unwrap();
        assert_eq!(out.as_exact().unwrap(), &vec![scalar(1); 4][..]);
        let zero = DenseOperator::zeros(4, DiagramShape::new(1, 1));
        assert_eq!(apply_dense(&zero, &e1).unwrap(), TensorVector::zeros(4, 1, Mode::Exact));
        let id = DenseOperator::identity(4, 1);
        assert_eq!(apply_dense(&id, &e1).unwrap(), e1);
    }
}
