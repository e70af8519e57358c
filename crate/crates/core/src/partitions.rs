//! Non-crossing partitions, Kreweras duals and concordance.
//!
//! A partition of `{1..n}` is stored as its restricted growth string: entry
//! `i - 1` is the block number of `i`, blocks numbered by first appearance.
//! Enumeration order is lexicographic on that string.

use crate::error::{Error, Result};
use crate::exactla::{int, zero, RatMatrix, SubsetIndex};
use crate::netmodel::UnionFind;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    rgs: Vec<usize>,
}

/// Whether the labelling has `a < b < c < d` with `a, c` in one block and
/// `b, d` in another.
pub fn is_crossing(labels: &[usize]) -> bool {
    let n = labels.len();
    for a in 0..n {
        for b in a + 1..n {
            if labels[b] == labels[a] {
                continue;
            }
            for c in b + 1..n {
                if labels[c] != labels[a] {
                    continue;
                }
                if (c + 1..n).any(|d| labels[d] == labels[b]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Renumbers arbitrary block labels by first appearance.
pub fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    labels
        .iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(p) => p,
            None => {
                seen.push(*l);
                seen.len() - 1
            }
        })
        .collect()
}

impl NonCrossingPartition {
    /// From any block labelling; fails if the partition crosses.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Malformed("empty partition".into()));
        }
        if is_crossing(labels) {
            return Err(Error::Invariant(format!(
                "partition {} is crossing",
                fmt_blocks(&blocks_of(&canonical_labels(labels)))
            )));
        }
        Ok(NonCrossingPartition {
            rgs: canonical_labels(labels),
        })
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if !(1..=n).contains(&x) || labels[x - 1] != usize::MAX {
                    return Err(Error::Malformed(format!(
                        "element {x} is out of range or repeated"
                    )));
                }
                labels[x - 1] = b;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Malformed(format!(
                "element {} is not covered",
                x + 1
            )));
        }
        Self::from_labels(&labels)
    }

    /// Block notation such as `"1 4 6|2 3|5"`; `n` is the number of elements.
    pub fn parse(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = s
            .split('|')
            .map(|b| {
                b.split_whitespace()
                    .map(|x| {
                        x.parse()
                            .map_err(|_| Error::Malformed(format!("partition element {x:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        Self::from_blocks(n, &blocks)
    }

    pub fn finest(n: usize) -> Self {
        NonCrossingPartition {
            rgs: (0..n).collect(),
        }
    }

    pub fn coarsest(n: usize) -> Self {
        NonCrossingPartition { rgs: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks as sorted 1-based lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        blocks_of(&self.rgs)
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.rgs[i - 1] == self.rgs[j - 1]
    }
}

fn blocks_of(rgs: &[usize]) -> Vec<Vec<usize>> {
    let count = rgs.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); count];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i + 1);
    }
    blocks
}

fn fmt_blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("|")
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_blocks(&self.blocks()))
    }
}

pub fn catalan(n: usize) -> usize {
    crate::exactla::binomial(2 * n, n) / (n + 1)
}

/// All non-crossing partitions of `{1..n}`, `1 ≤ n ≤ 8`.
pub fn enumerate_nc(n: usize) -> Result<Vec<NonCrossingPartition>> {
    if !(1..=8).contains(&n) {
        return Err(Error::SizeBound {
            what: "n",
            value: n,
            bound: 8,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(pos: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<NonCrossingPartition>) {
        if pos == rgs.len() {
            if !is_crossing(rgs) {
                out.push(NonCrossingPartition { rgs: rgs.clone() });
            }
            return;
        }
        for b in 0..=max + 1 {
            rgs[pos] = b;
            rec(pos + 1, max.max(b), rgs, out);
        }
    }
    rec(1, 0, &mut rgs, &mut out);
    Ok(out)
}

/// Kreweras complement. Tilde label `i` sits between `i` and `i + 1`; two
/// tilde labels `i < j` share a block iff no block of `σ` has elements both
/// inside and outside `{i+1..j}`.
pub fn kreweras_dual(sigma: &NonCrossingPartition) -> NonCrossingPartition {
    let n = sigma.n();
    let blocks = sigma.blocks();
    let mut uf = UnionFind::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let separated = blocks.iter().any(|b| {
                let inside = b.iter().filter(|&&x| x > i && x <= j).count();
                inside != 0 && inside != b.len()
            });
            if !separated {
                uf.union(i - 1, j - 1);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    NonCrossingPartition::from_labels(&labels).expect("Kreweras complements are non-crossing")
}

/// Whether the `(n-1)`-subset `subset` of `{1..2n}` is concordant with `σ`:
/// every block of `σ` (labels `2i-1`) and of its dual (labels `2i`) holds
/// exactly one element outside `subset`.
pub fn is_concordant(subset: &[usize], sigma: &NonCrossingPartition) -> Result<bool> {
    let n = sigma.n();
    if subset.len() + 1 != n {
        return Err(Error::Dimension(format!(
            "index set of size {} for n = {n}",
            subset.len()
        )));
    }
    let missing = |x: usize| !subset.contains(&x);
    let odd_ok = sigma
        .blocks()
        .iter()
        .all(|b| b.iter().filter(|&&i| missing(2 * i - 1)).count() == 1);
    if !odd_ok {
        return Ok(false);
    }
    let even_ok = kreweras_dual(sigma)
        .blocks()
        .iter()
        .all(|b| b.iter().filter(|&&i| missing(2 * i)).count() == 1);
    Ok(even_ok)
}

/// The 0/1 concordance matrix: rows are `(n-1)`-subsets of `{1..2n}`,
/// columns non-crossing partitions, both in enumeration order.
#[derive(Clone, Debug)]
pub struct ConcordanceMatrix {
    pub n: usize,
    pub subsets: SubsetIndex,
    pub partitions: Vec<NonCrossingPartition>,
    pub matrix: RatMatrix,
}

impl ConcordanceMatrix {
    /// Column of `σ` as a vector over the subsets.
    pub fn column(&self, sigma: &NonCrossingPartition) -> Option<Vec<crate::Rational>> {
        let c = self.partitions.iter().position(|p| p == sigma)?;
        Some(
            (0..self.matrix.rows())
                .map(|r| self.matrix[(r, c)].clone())
                .collect(),
        )
    }
}

pub fn concordance_matrix(n: usize) -> Result<ConcordanceMatrix> {
    if !(2..=6).contains(&n) {
        return Err(Error::SizeBound {
            what: "n",
            value: n,
            bound: 6,
        });
    }
    let subsets = SubsetIndex::new(2 * n, n - 1);
    let partitions = enumerate_nc(n)?;
    let rows: Vec<Vec<usize>> = subsets.iter().collect();
    let mut matrix = RatMatrix::zeros(rows.len(), partitions.len());
    for (c, sigma) in partitions.iter().enumerate() {
        for (r, subset) in rows.iter().enumerate() {
            matrix[(r, c)] = if is_concordant(subset, sigma)? {
                int(1)
            } else {
                zero()
            };
        }
    }
    Ok(ConcordanceMatrix {
        n,
        subsets,
        partitions,
        matrix,
    })
}
