//! Set partitions of `[l+k]` and the diagram families built on them.
//!
//! Vertex labels are 1-based: the top row is `1..=l`, the bottom row is
//! `l+1..=l+k`. A [`SetPartition`] is always stored canonically (blocks
//! ascending internally, ordered by least element), so structural equality
//! is diagram equality.

use std::fmt;

use crate::error::{Error, Result};

/// Arity of a diagram: `k` bottom vertices, `l` top vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramShape {
    pub k: usize,
    pub l: usize,
}

impl DiagramShape {
    pub const fn new(k: usize, l: usize) -> Self {
        DiagramShape { k, l }
    }

    pub const fn total(&self) -> usize {
        self.k + self.l
    }

    pub const fn is_top(&self, vertex: usize) -> bool {
        vertex <= self.l
    }
}

impl fmt::Display for DiagramShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    total: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` as a partition of `1..=total`.
    pub fn new(total: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; total + 1];
        for (index, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { index });
            }
            for &v in block {
                if v == 0 || v > total {
                    return Err(Error::VertexOutOfRange { vertex: v, total });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::OverlappingBlocks { vertex: v });
                }
                owner[v] = index;
            }
        }
        if let Some(vertex) = (1..=total).find(|&v| owner[v] == usize::MAX) {
            return Err(Error::UncoveredVertex { vertex });
        }
        Ok(Self::canonical(total, blocks))
    }

    fn canonical(total: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { total, blocks }
    }

    /// Builds from a restricted growth string: `rgs[i]` is the block label of
    /// vertex `i+1`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let count = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        blocks.retain(|b| !b.is_empty());
        Self::canonical(rgs.len(), blocks)
    }

    pub fn to_rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.total];
        for (label, block) in self.blocks.iter().enumerate() {
            for &v in block {
                rgs[v - 1] = label;
            }
        }
        rgs
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every vertex, indexed by `vertex - 1`.
    pub fn block_index(&self) -> Vec<usize> {
        self.to_rgs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramKind {
    General,
    Brauer,
    /// An (l+k)\n diagram: exactly `n` singleton blocks, all others pairs.
    BrauerGrood(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    shape: DiagramShape,
    partition: SetPartition,
    kind: DiagramKind,
}

impl Diagram {
    pub fn shape(&self) -> DiagramShape {
        self.shape
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        self.partition.blocks()
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn is_brauer(&self) -> bool {
        self.kind == DiagramKind::Brauer
    }

    /// Free vertices (singleton blocks) in ascending label order, which is
    /// top row left to right followed by bottom row left to right.
    pub fn free_vertices(&self) -> Vec<usize> {
        let mut free: Vec<usize> = self
            .blocks()
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect();
        free.sort_unstable();
        free
    }

    /// Builds a diagram from a partition already known to fit `shape`.
    pub(crate) fn from_partition(shape: DiagramShape, partition: SetPartition) -> Self {
        debug_assert_eq!(shape.total(), partition.total());
        let kind = auto_kind(&partition);
        Diagram {
            shape,
            partition,
            kind,
        }
    }

    /// Drops any Brauer–Grood tag, returning the auto-detected kind.
    pub fn untagged(&self) -> Diagram {
        Diagram::from_partition(self.shape, self.partition.clone())
    }

    /// The identity permutation diagram on `r` strands.
    pub fn identity(r: usize) -> Diagram {
        let blocks = (1..=r).map(|i| vec![i, r + i]).collect();
        Diagram::from_partition(DiagramShape::new(r, r), SetPartition::canonical(2 * r, blocks))
    }

    /// The permutation diagram whose top vertex `p` is joined to bottom
    /// vertex `map[p]` (both 0-based positions).
    pub fn permutation(map: &[usize]) -> Result<Diagram> {
        let r = map.len();
        let blocks = map.iter().enumerate().map(|(p, &q)| vec![p + 1, r + q + 1]).collect();
        make_diagram(DiagramShape::new(r, r), blocks)
    }
}

fn auto_kind(partition: &SetPartition) -> DiagramKind {
    if partition.blocks().iter().all(|b| b.len() == 2) {
        DiagramKind::Brauer
    } else {
        DiagramKind::General
    }
}

/// Validates `blocks` against `shape` and returns the canonical diagram,
/// tagged Brauer when every block is a pair.
pub fn make_diagram(shape: DiagramShape, blocks: Vec<Vec<usize>>) -> Result<Diagram> {
    let partition = SetPartition::new(shape.total(), blocks)?;
    Ok(Diagram::from_partition(shape, partition))
}

/// Retags `d` as an (l+k)\n diagram.
pub fn classify_bg(d: &Diagram, n: usize) -> Result<Diagram> {
    let not_bg = |reason: String| Error::NotBrauerGrood { n, reason };
    if n == 0 {
        return Err(not_bg("n must be positive".into()));
    }
    if let Some(b) = d.blocks().iter().find(|b| b.len() > 2) {
        return Err(not_bg(format!("block {:?} has size {}", b, b.len())));
    }
    let singles = d.blocks().iter().filter(|b| b.len() == 1).count();
    if singles != n {
        return Err(not_bg(format!("{singles} free vertices, expected {n}")));
    }
    Ok(Diagram {
        kind: DiagramKind::BrauerGrood(n),
        ..d.clone()
    })
}

/// Constraints on the restricted-growth enumeration.
#[derive(Debug, Clone, Copy)]
struct Filter {
    max_blocks: usize,
    max_block_size: usize,
    // Some(s): final partition must have exactly s singletons and all other
    // blocks at max_block_size (only used with max_block_size == 2).
    singletons: Option<usize>,
}

fn rgs_step(
    m: usize,
    filter: &Filter,
    rgs: &mut Vec<usize>,
    sizes: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let remaining = m - rgs.len();
    if let Some(s) = filter.singletons {
        // open singletons beyond the allowed free count must still be paired
        let open = sizes.iter().filter(|&&c| c == 1).count();
        if open > s + remaining {
            return;
        }
    }
    if remaining == 0 {
        if let Some(s) = filter.singletons {
            if sizes.iter().filter(|&&c| c == 1).count() != s {
                return;
            }
        }
        out.push(rgs.clone());
        return;
    }
    for label in 0..=sizes.len() {
        if label == sizes.len() {
            if sizes.len() >= filter.max_blocks {
                break;
            }
            sizes.push(0);
        } else if sizes[label] >= filter.max_block_size {
            continue;
        }
        sizes[label] += 1;
        rgs.push(label);
        rgs_step(m, filter, rgs, sizes, out);
        rgs.pop();
        sizes[label] -= 1;
        if sizes[label] == 0 {
            sizes.pop();
        }
    }
}

fn diagrams_from(shape: DiagramShape, filter: Filter) -> Vec<Diagram> {
    let mut raw = Vec::new();
    let mut rgs = Vec::with_capacity(shape.total());
    let mut sizes = Vec::new();
    rgs_step(shape.total(), &filter, &mut rgs, &mut sizes, &mut raw);
    raw.iter()
        .map(|r| Diagram::from_partition(shape, SetPartition::from_rgs(r)))
        .collect()
}

/// Every (k,l)-partition diagram, in lexicographic restricted-growth order.
pub fn enumerate_partition_diagrams(shape: DiagramShape) -> Vec<Diagram> {
    let m = shape.total();
    diagrams_from(
        shape,
        Filter {
            max_blocks: m,
            max_block_size: m,
            singletons: None,
        },
    )
}

/// Partition diagrams with at most `n` blocks.
pub fn enumerate_partition_diagrams_bounded(shape: DiagramShape, n: usize) -> Vec<Diagram> {
    let m = shape.total();
    diagrams_from(
        shape,
        Filter {
            max_blocks: n,
            max_block_size: m.max(1),
            singletons: None,
        },
    )
}

pub fn enumerate_brauer(shape: DiagramShape) -> Vec<Diagram> {
    if shape.total() % 2 == 1 {
        return Vec::new();
    }
    diagrams_from(
        shape,
        Filter {
            max_blocks: shape.total(),
            max_block_size: 2,
            singletons: Some(0),
        },
    )
}

/// All (l+k)\n diagrams of `shape`.
pub fn enumerate_bg(shape: DiagramShape, n: usize) -> Vec<Diagram> {
    let m = shape.total();
    if n == 0 || n > m || (m - n) % 2 == 1 {
        return Vec::new();
    }
    diagrams_from(
        shape,
        Filter {
            max_blocks: m,
            max_block_size: 2,
            singletons: Some(n),
        },
    )
    .into_iter()
    .map(|d| Diagram {
        kind: DiagramKind::BrauerGrood(n),
        ..d
    })
    .collect()
}
