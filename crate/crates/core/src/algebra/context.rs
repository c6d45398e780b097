use std::fmt;

use super::jellyfish::Rule1Variant;
use super::sum::DiagramSum;
use crate::error::{Error, Result};
use crate::setpart::{classify_bg, Diagram, DiagramKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContextKind {
    Partition,
    Brauer,
    BrauerGrood,
}

impl ContextKind {
    pub fn name(&self) -> &'static str {
        match self {
            ContextKind::Partition => "partition",
            ContextKind::Brauer => "brauer",
            ContextKind::BrauerGrood => "brauer-grood",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "partition" | "p" => Ok(ContextKind::Partition),
            "brauer" | "b" => Ok(ContextKind::Brauer),
            "brauer-grood" | "bg" => Ok(ContextKind::BrauerGrood),
            _ => Err(Error::Unknown {
                what: "context",
                name: name.into(),
            }),
        }
    }
}

/// The category a computation happens in: P(n), B(n) or BG(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CategoryContext {
    n: usize,
    kind: ContextKind,
    rule1: Rule1Variant,
}

impl CategoryContext {
    pub fn new(kind: ContextKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        Ok(CategoryContext {
            n,
            kind,
            rule1: Rule1Variant::Signed,
        })
    }

    pub fn partition(n: usize) -> Result<Self> {
        Self::new(ContextKind::Partition, n)
    }

    pub fn brauer(n: usize) -> Result<Self> {
        Self::new(ContextKind::Brauer, n)
    }

    pub fn brauer_grood(n: usize) -> Result<Self> {
        Self::new(ContextKind::BrauerGrood, n)
    }

    /// Replaces the Rule 1 behaviour; only meaningful for mutation tests.
    pub fn with_rule1(mut self, rule1: Rule1Variant) -> Self {
        self.rule1 = rule1;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ContextKind {
        self.kind
    }

    pub fn rule1(&self) -> Rule1Variant {
        self.rule1
    }

    /// Checks that `d` is a morphism of this category and retags it with the
    /// kind the category assigns.
    pub fn admit(&self, d: &Diagram) -> Result<Diagram> {
        let reject = |reason: String| Error::KindNotInContext {
            context: self.to_string(),
            reason,
        };
        match self.kind {
            ContextKind::Partition => Ok(d.untagged()),
            ContextKind::Brauer => {
                let d = d.untagged();
                if d.is_brauer() {
                    Ok(d)
                } else {
                    Err(reject("diagram has a block that is not a pair".into()))
                }
            }
            ContextKind::BrauerGrood => {
                let plain = d.untagged();
                if plain.is_brauer() {
                    return Ok(plain);
                }
                if let DiagramKind::BrauerGrood(m) = d.kind() {
                    if m != self.n {
                        return Err(reject(format!("diagram has {m} free vertices, context needs {}", self.n)));
                    }
                }
                classify_bg(&plain, self.n).map_err(|e| reject(e.to_string()))
            }
        }
    }

    pub fn admit_sum(&self, s: &DiagramSum) -> Result<DiagramSum> {
        s.try_map_diagrams(|d| self.admit(d))
    }
}

impl fmt::Display for CategoryContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind.name(), self.n)
    }
}
