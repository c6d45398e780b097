//! Seeded random diagrams and chainable pairs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{CategoryContext, ContextKind};
use crate::setpart::{classify_bg, make_diagram, Diagram, DiagramShape, SetPartition};

/// A random set partition diagram: each vertex joins an existing block or
/// opens a new one with equal probability per choice.
pub fn random_diagram<R: Rng + ?Sized>(shape: DiagramShape, rng: &mut R) -> Diagram {
    let mut rgs = Vec::with_capacity(shape.total());
    let mut blocks = 0;
    for _ in 0..shape.total() {
        let b = rng.random_range(0..=blocks);
        if b == blocks {
            blocks += 1;
        }
        rgs.push(b);
    }
    let p = SetPartition::from_rgs(&rgs);
    make_diagram(shape, p.blocks().to_vec()).unwrap()
}

/// A random diagram with `singletons` free vertices and every other block a
/// pair, or `None` when the vertex count does not allow one.
fn random_matching<R: Rng + ?Sized>(shape: DiagramShape, singletons: usize, rng: &mut R) -> Option<Diagram> {
    let total = shape.total();
    if total < singletons || (total - singletons) % 2 == 1 {
        return None;
    }
    let mut vertices: Vec<usize> = (1..=total).collect();
    vertices.shuffle(rng);
    let (free, paired) = vertices.split_at(singletons);
    let mut blocks: Vec<Vec<usize>> = free.iter().map(|&v| vec![v]).collect();
    blocks.extend(paired.chunks(2).map(|c| c.to_vec()));
    Some(make_diagram(shape, blocks).unwrap())
}

pub fn random_brauer<R: Rng + ?Sized>(shape: DiagramShape, rng: &mut R) -> Option<Diagram> {
    random_matching(shape, 0, rng)
}

pub fn random_bg<R: Rng + ?Sized>(shape: DiagramShape, n: usize, rng: &mut R) -> Option<Diagram> {
    random_matching(shape, n, rng).map(|d| classify_bg(&d, n).unwrap())
}

/// A random diagram admitted by `ctx`. In the Brauer–Grood context Brauer
/// and (l+k)\n diagrams are drawn with equal odds when both exist.
pub fn random_in_context<R: Rng + ?Sized>(ctx: &CategoryContext, shape: DiagramShape, rng: &mut R) -> Option<Diagram> {
    match ctx.kind() {
        ContextKind::Partition => Some(random_diagram(shape, rng)),
        ContextKind::Brauer => random_brauer(shape, rng),
        ContextKind::BrauerGrood => {
            let n = ctx.n();
            let total = shape.total();
            let bg_ok = total >= n && (total - n) % 2 == 0;
            let brauer_ok = total % 2 == 0;
            match (brauer_ok, bg_ok) {
                (true, true) if rng.random_bool(0.5) => random_bg(shape, n, rng),
                (true, _) => random_brauer(shape, rng),
                (false, true) => random_bg(shape, n, rng),
                (false, false) => None,
            }
        }
    }
}

/// Random arities in `0..=max` until a diagram of each shape exists.
fn retry<R: Rng + ?Sized, T>(max: usize, rng: &mut R, mut f: impl FnMut(&[usize], &mut R) -> Option<T>, arity: usize) -> T {
    loop {
        let dims: Vec<usize> = (0..arity).map(|_| rng.random_range(0..=max)).collect();
        if let Some(t) = f(&dims, rng) {
            return t;
        }
    }
}

/// `(d2, d1)` with `d1: k → l` and `d2: l → m`, all arities at most `max`.
pub fn random_chainable_pair<R: Rng + ?Sized>(ctx: &CategoryContext, max: usize, rng: &mut R) -> (Diagram, Diagram) {
    retry(
        max,
        rng,
        |dims, rng| {
            let (k, l, m) = (dims[0], dims[1], dims[2]);
            let d1 = random_in_context(ctx, DiagramShape::new(k, l), rng)?;
            let d2 = random_in_context(ctx, DiagramShape::new(l, m), rng)?;
            Some((d2, d1))
        },
        3,
    )
}

/// `(a, b, c)` with `c: k → l`, `b: l → m`, `a: m → p`.
pub fn random_chainable_triple<R: Rng + ?Sized>(ctx: &CategoryContext, max: usize, rng: &mut R) -> (Diagram, Diagram, Diagram) {
    retry(
        max,
        rng,
        |dims, rng| {
            let c = random_in_context(ctx, DiagramShape::new(dims[0], dims[1]), rng)?;
            let b = random_in_context(ctx, DiagramShape::new(dims[1], dims[2]), rng)?;
            let a = random_in_context(ctx, DiagramShape::new(dims[2], dims[3]), rng)?;
            Some((a, b, c))
        },
        4,
    )
}

/// Any admitted diagram with both arities at most `max`.
pub fn random_any<R: Rng + ?Sized>(ctx: &CategoryContext, max: usize, rng: &mut R) -> Diagram {
    retry(
        max,
        rng,
        |dims, rng| random_in_context(ctx, DiagramShape::new(dims[0], dims[1]), rng),
        2,
    )
}
