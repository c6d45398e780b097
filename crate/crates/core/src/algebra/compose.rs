//! Vertical composition and tensor product of diagrams and diagram sums.

use num_traits::One;

use super::context::{CategoryContext, ContextKind};
use super::jellyfish::{rule1_normalize, rule2_expand, JellyfishState, LegEnd, Rule1Outcome};
use super::sum::{power_of, scalar, DiagramSum, Scalar};
use crate::error::{Error, Result};
use crate::setpart::{classify_bg, make_diagram, Diagram, DiagramKind, DiagramShape};
use crate::union_find::UnionFind;

/// Three rows of vertices: the top of `upper`, the shared middle row, and
/// the bottom of `lower`. Free vertices of Brauer–Grood operands get a leg
/// node each instead of being left alone.
struct Stack {
    uf: UnionFind,
    top: usize,
    mid: usize,
    bottom: usize,
    heads: Vec<Vec<usize>>,
}

#[derive(Debug, Default)]
struct Component {
    outer: Vec<usize>,
    legs: Vec<(usize, usize)>,
}

impl Stack {
    fn new(upper: &Diagram, lower: &Diagram, with_heads: bool) -> Self {
        let top = upper.shape().l;
        let mid = upper.shape().k;
        let bottom = lower.shape().k;
        let mut uf = UnionFind::new(top + mid + bottom);
        let mut heads = Vec::new();
        // upper vertex v sits at node v-1, lower vertex v at node top+v-1
        for (d, offset) in [(upper, 0), (lower, top)] {
            let jelly = with_heads && matches!(d.kind(), DiagramKind::BrauerGrood(_));
            let mut legs = Vec::new();
            for block in d.blocks() {
                let nodes: Vec<usize> = block.iter().map(|&v| offset + v - 1).collect();
                if jelly && block.len() == 1 {
                    let leg = uf.push();
                    uf.union(leg, nodes[0]);
                    legs.push((block[0], leg));
                } else {
                    uf.union_all(&nodes);
                }
            }
            if jelly {
                legs.sort_unstable();
                heads.push(legs.into_iter().map(|(_, leg)| leg).collect());
            }
        }
        Stack {
            uf,
            top,
            mid,
            bottom,
            heads,
        }
    }

    fn outer_label(&self, node: usize) -> Option<usize> {
        if node < self.top {
            Some(node + 1)
        } else if node >= self.top + self.mid && node < self.top + self.mid + self.bottom {
            Some(node - self.mid + 1)
        } else {
            None
        }
    }

    fn result_shape(&self) -> DiagramShape {
        DiagramShape::new(self.bottom, self.top)
    }

    fn components(&mut self) -> Vec<Component> {
        let mut leg_of = vec![None; self.uf.len()];
        for (h, legs) in self.heads.iter().enumerate() {
            for (i, &node) in legs.iter().enumerate() {
                leg_of[node] = Some((h, i));
            }
        }
        let comps = self.uf.components();
        comps
            .into_iter()
            .map(|members| {
                let mut c = Component::default();
                for node in members {
                    if let Some(label) = self.outer_label(node) {
                        c.outer.push(label);
                    }
                    if let Some(leg) = leg_of[node] {
                        c.legs.push(leg);
                    }
                }
                c
            })
            .collect()
    }
}

fn check_chain(d2: DiagramShape, d1: DiagramShape) -> Result<()> {
    if d2.k != d1.l {
        return Err(Error::ShapeMismatch {
            expected: DiagramShape::new(d1.l, d2.l),
            found: d2,
        });
    }
    Ok(())
}

/// Concatenates `d2` on top of `d1` and counts the components that lie
/// entirely in the middle row. The returned diagram is unscaled.
pub fn concatenate_count(d2: &Diagram, d1: &Diagram) -> Result<(Diagram, usize)> {
    check_chain(d2.shape(), d1.shape())?;
    let mut stack = Stack::new(d2, d1, false);
    let shape = stack.result_shape();
    let mut blocks = Vec::new();
    let mut removed = 0;
    for c in stack.components() {
        if c.outer.is_empty() {
            removed += 1;
        } else {
            blocks.push(c.outer);
        }
    }
    Ok((make_diagram(shape, blocks)?, removed))
}

fn compose_plain(n: usize, d2: &Diagram, d1: &Diagram) -> Result<DiagramSum> {
    let (d, c) = concatenate_count(d2, d1)?;
    Ok(DiagramSum::term(power_of(n, c), d))
}

fn malformed() -> Error {
    Error::KindNotInContext {
        context: "brauer-grood".into(),
        reason: "concatenation produced a component that is not a path".into(),
    }
}

/// Composition in the Brauer–Grood category when at least one operand
/// carries a jellyfish head.
fn compose_jellyfish(ctx: &CategoryContext, d2: &Diagram, d1: &Diagram) -> Result<DiagramSum> {
    let n = ctx.n();
    let mut stack = Stack::new(d2, d1, true);
    let shape = stack.result_shape();
    let comps = stack.components();
    let heads = stack.heads.len();

    let mut pairs: Vec<Vec<usize>> = Vec::new();
    let mut loops = 0usize;
    let mut ends: Vec<Vec<Option<LegEnd>>> = stack.heads.iter().map(|h| vec![None; h.len()]).collect();
    for c in comps {
        match (c.outer.len(), c.legs.len()) {
            (0, 0) => loops += 1,
            (2, 0) => pairs.push(c.outer),
            (1, 1) => {
                let (h, i) = c.legs[0];
                ends[h][i] = Some(LegEnd::Vertex(c.outer[0]));
            }
            (0, 2) => {
                let (h0, i0) = c.legs[0];
                let (h1, i1) = c.legs[1];
                ends[h0][i0] = Some(LegEnd::Leg { head: h1, leg: i1 });
                ends[h1][i1] = Some(LegEnd::Leg { head: h0, leg: i0 });
            }
            _ => return Err(malformed()),
        }
    }
    let state = JellyfishState {
        heads: ends
            .into_iter()
            .map(|h| h.into_iter().collect::<Option<Vec<_>>>().ok_or_else(malformed))
            .collect::<Result<_>>()?,
    };

    let (sign, state) = match rule1_normalize(&state, ctx.rule1()) {
        Rule1Outcome::Zero => return Ok(DiagramSum::zero(shape)),
        Rule1Outcome::Uncrossed { sign, state } => (sign, state),
    };
    let base = scalar(sign as i64) * power_of(n, loops);

    if heads == 1 {
        let mut blocks = pairs;
        for end in &state.heads[0] {
            match end {
                LegEnd::Vertex(v) => blocks.push(vec![*v]),
                LegEnd::Leg { .. } => return Err(malformed()),
            }
        }
        let d = classify_bg(&make_diagram(shape, blocks)?, n)?;
        return Ok(DiagramSum::term(base, d));
    }

    debug_assert_eq!(heads, 2);
    expand_two_heads(n, shape, pairs, &state, &base)
}

/// Applies Rule 2 to two uncrossed heads and closes every resulting loop.
fn expand_two_heads(
    n: usize,
    shape: DiagramShape,
    pairs: Vec<Vec<usize>>,
    state: &JellyfishState,
    base: &Scalar,
) -> Result<DiagramSum> {
    let (left, right) = (&state.heads[0], &state.heads[1]);
    let legs = left.len();
    let mut out = DiagramSum::zero(shape);
    for term in rule2_expand(legs, right.len())? {
        // nodes 0..legs are head-0 legs, legs..2*legs are head-1 legs
        let mut uf = UnionFind::new(2 * legs);
        for (i, end) in left.iter().enumerate() {
            if let LegEnd::Leg { head: 1, leg } = end {
                uf.union(i, legs + leg);
            }
        }
        for (i, &j) in term.pairing.iter().enumerate() {
            uf.union(i, legs + j);
        }
        let mut blocks = pairs.clone();
        let mut closed = 0usize;
        for comp in uf.components() {
            let outer: Vec<usize> = comp
                .iter()
                .filter_map(|&node| {
                    let end = if node < legs { left[node] } else { right[node - legs] };
                    match end {
                        LegEnd::Vertex(v) => Some(v),
                        LegEnd::Leg { .. } => None,
                    }
                })
                .collect();
            match outer.len() {
                0 => closed += 1,
                2 => blocks.push(outer),
                _ => return Err(malformed()),
            }
        }
        let coeff = base * scalar(term.sign as i64) * power_of(n, closed);
        out.push(coeff, make_diagram(shape, blocks)?);
    }
    Ok(out)
}

/// `d2 • d1` for single diagrams already admitted in `ctx`.
pub(crate) fn compose_diagrams(ctx: &CategoryContext, d2: &Diagram, d1: &Diagram) -> Result<DiagramSum> {
    check_chain(d2.shape(), d1.shape())?;
    match ctx.kind() {
        ContextKind::Partition | ContextKind::Brauer => compose_plain(ctx.n(), d2, d1),
        ContextKind::BrauerGrood => {
            if d2.is_brauer() && d1.is_brauer() {
                compose_plain(ctx.n(), d2, d1)
            } else {
                compose_jellyfish(ctx, d2, d1)
            }
        }
    }
}

/// Bilinear composition `d2 • d1`; `d2` has shape (l,m) and `d1` (k,l).
pub fn compose(ctx: &CategoryContext, d2: &DiagramSum, d1: &DiagramSum) -> Result<DiagramSum> {
    check_chain(d2.shape(), d1.shape())?;
    let d2 = ctx.admit_sum(d2)?;
    let d1 = ctx.admit_sum(d1)?;
    let mut out = DiagramSum::zero(DiagramShape::new(d1.shape().k, d2.shape().l));
    for (a, ca) in d2.terms() {
        for (b, cb) in d1.terms() {
            let prod = compose_diagrams(ctx, a, b)?;
            out.absorb(prod, &(ca * cb));
        }
    }
    Ok(out)
}

/// Where the vertices of two diagrams land when placed side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorLabels {
    pub left: DiagramShape,
    pub right: DiagramShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl TensorLabels {
    pub fn new(left: DiagramShape, right: DiagramShape) -> Self {
        TensorLabels { left, right }
    }

    pub fn shape(&self) -> DiagramShape {
        DiagramShape::new(self.left.k + self.right.k, self.left.l + self.right.l)
    }

    /// Label of vertex `v` of the left operand in the juxtaposed diagram.
    pub fn left_label(&self, v: usize) -> usize {
        let top = self.left.l + self.right.l;
        if v <= self.left.l {
            v
        } else {
            top + (v - self.left.l)
        }
    }

    pub fn right_label(&self, v: usize) -> usize {
        let top = self.left.l + self.right.l;
        if v <= self.right.l {
            self.left.l + v
        } else {
            top + self.left.k + (v - self.right.l)
        }
    }

    /// Inverse of the two labelings.
    pub fn split(&self, label: usize) -> (Side, usize) {
        let top = self.left.l + self.right.l;
        if label <= self.left.l {
            (Side::Left, label)
        } else if label <= top {
            (Side::Right, label - self.left.l)
        } else if label <= top + self.left.k {
            (Side::Left, self.left.l + label - top)
        } else {
            (Side::Right, self.right.l + label - top - self.left.k)
        }
    }
}

fn juxtapose(d1: &Diagram, d2: &Diagram) -> (TensorLabels, Vec<Vec<usize>>) {
    let labels = TensorLabels::new(d1.shape(), d2.shape());
    let mut blocks: Vec<Vec<usize>> = d1
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&v| labels.left_label(v)).collect())
        .collect();
    blocks.extend(
        d2.blocks()
            .iter()
            .map(|b| b.iter().map(|&v| labels.right_label(v)).collect::<Vec<_>>()),
    );
    (labels, blocks)
}

/// `d1 ⊗ d2` for single diagrams admitted in `ctx`.
pub(crate) fn tensor_diagrams(ctx: &CategoryContext, d1: &Diagram, d2: &Diagram) -> Result<DiagramSum> {
    let (labels, blocks) = juxtapose(d1, d2);
    let shape = labels.shape();
    let bg1 = matches!(d1.kind(), DiagramKind::BrauerGrood(_));
    let bg2 = matches!(d2.kind(), DiagramKind::BrauerGrood(_));
    if ctx.kind() != ContextKind::BrauerGrood || !(bg1 || bg2) {
        return Ok(DiagramSum::from_diagram(make_diagram(shape, blocks)?));
    }
    if bg1 != bg2 {
        let d = classify_bg(&make_diagram(shape, blocks)?, ctx.n())?;
        return Ok(DiagramSum::from_diagram(d));
    }

    let pairs: Vec<Vec<usize>> = blocks.iter().filter(|b| b.len() == 2).cloned().collect();
    let left = d1.free_vertices().into_iter().map(|v| LegEnd::Vertex(labels.left_label(v)));
    let right = d2.free_vertices().into_iter().map(|v| LegEnd::Vertex(labels.right_label(v)));
    let state = JellyfishState {
        heads: vec![left.collect(), right.collect()],
    };
    let (sign, state) = match rule1_normalize(&state, ctx.rule1()) {
        Rule1Outcome::Zero => return Ok(DiagramSum::zero(shape)),
        Rule1Outcome::Uncrossed { sign, state } => (sign, state),
    };
    expand_two_heads(ctx.n(), shape, pairs, &state, &scalar(sign as i64))
}

/// Bilinear tensor product; `d1` is placed to the left of `d2`.
pub fn tensor(ctx: &CategoryContext, d1: &DiagramSum, d2: &DiagramSum) -> Result<DiagramSum> {
    let d1 = ctx.admit_sum(d1)?;
    let d2 = ctx.admit_sum(d2)?;
    let shape = TensorLabels::new(d1.shape(), d2.shape()).shape();
    let mut out = DiagramSum::zero(shape);
    for (a, ca) in d1.terms() {
        for (b, cb) in d2.terms() {
            out.absorb(tensor_diagrams(ctx, a, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// The identity morphism on `r` as a sum.
pub fn identity_sum(r: usize) -> DiagramSum {
    DiagramSum::term(Scalar::one(), Diagram::identity(r))
}
