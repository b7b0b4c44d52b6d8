//! Cyclically ordered partitions of `[m] = {1..m}` and the label
//! conventions connecting cyclic labels, reduced labels, and vertex sets.
//!
//! A cyclic partition is stored in canonical rotation: the block containing
//! the distinguished element `m` comes last in the list. Equality, hashing,
//! ordering and the text form all use this representative.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A cyclically ordered partition of `[m]`, canonical rotation (the block
/// containing `m` is last). The list order is the counterclockwise cyclic
/// order of the blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPartition {
    m: usize,
    blocks: Vec<BTreeSet<usize>>,
}

/// A linear order on `[m-1]`, obtained from an all-singleton cyclic label by
/// cutting through the entry `m` and dropping it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedLabel {
    order: Vec<usize>,
}

impl CyclicPartition {
    /// Builds the canonical form from a raw ordered block list.
    pub fn new(m: usize, raw: Vec<Vec<usize>>) -> Result<CyclicPartition> {
        if m < 4 {
            return Err(Error::MalformedPartition(format!(
                "ground set must have m >= 4 elements, got {m}"
            )));
        }
        let mut seen = vec![false; m + 1];
        let mut blocks: Vec<BTreeSet<usize>> = Vec::with_capacity(raw.len());
        for block in &raw {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            let set: BTreeSet<usize> = block.iter().copied().collect();
            if set.len() != block.len() {
                return Err(Error::MalformedPartition(format!(
                    "repeated element in block {block:?}"
                )));
            }
            for &e in &set {
                if e < 1 || e > m {
                    return Err(Error::MalformedPartition(format!(
                        "element {e} outside ground set [1..{m}]"
                    )));
                }
                if seen[e] {
                    return Err(Error::MalformedPartition(format!(
                        "element {e} appears in two blocks"
                    )));
                }
                seen[e] = true;
            }
            blocks.push(set);
        }
        if let Some(missing) = (1..=m).find(|&e| !seen[e]) {
            return Err(Error::MalformedPartition(format!(
                "element {missing} is missing"
            )));
        }
        let anchor = blocks
            .iter()
            .position(|b| b.contains(&m))
            .expect("m placed");
        blocks.rotate_left(anchor + 1);
        Ok(CyclicPartition { m, blocks })
    }

    /// All-singleton label from the cyclic element order (any rotation).
    pub fn from_cycle(m: usize, order: &[usize]) -> Result<CyclicPartition> {
        CyclicPartition::new(m, order.iter().map(|&e| vec![e]).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    /// Number of blocks, `p`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Cell dimension `m - p`.
    pub fn dim(&self) -> usize {
        self.m - self.block_count()
    }

    pub fn is_vertex(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Orientation-preserving refinement: true iff every block of `coarse`
    /// is the union of a cyclically consecutive run of blocks of `self`, with
    /// the runs appearing in the cyclic order of `coarse`'s blocks.
    pub fn refines(&self, coarse: &CyclicPartition) -> Result<bool> {
        if self.m != coarse.m {
            return Err(Error::GroundSetMismatch {
                expected: coarse.m,
                got: self.m,
            });
        }
        Ok(self.refinement_runs(coarse).is_some())
    }

    /// The run decomposition witnessing `self.refines(coarse)`: for each block
    /// of `coarse` (in canonical order) the indices of `self`'s blocks that
    /// compose it, in cyclic reading order. `None` if not a refinement.
    pub(crate) fn refinement_runs(&self, coarse: &CyclicPartition) -> Option<Vec<Vec<usize>>> {
        let fine = &self.blocks;
        let s = fine.len();
        let p = coarse.blocks.len();
        if s < p {
            return None;
        }
        // Index of the coarse block owning each element.
        let mut owner = vec![usize::MAX; self.m + 1];
        for (ci, cb) in coarse.blocks.iter().enumerate() {
            for &e in cb {
                owner[e] = ci;
            }
        }
        'start: for a in 0..s {
            // The walk starting at fine block `a` must open a fresh run.
            let first = *fine[a].iter().next().expect("nonempty block");
            let c0 = owner[first];
            let mut runs: Vec<Vec<usize>> = vec![Vec::new(); p];
            let mut ci = c0;
            let mut covered = 0usize;
            let mut blocks_done = 0usize;
            for step in 0..s {
                let fi = (a + step) % s;
                let fb = &fine[fi];
                if blocks_done == p || !fb.iter().all(|e| coarse.blocks[ci].contains(e)) {
                    continue 'start;
                }
                runs[ci].push(fi);
                covered += fb.len();
                if covered == coarse.blocks[ci].len() {
                    blocks_done += 1;
                    ci = (ci + 1) % p;
                    covered = 0;
                }
            }
            if blocks_done == p {
                return Some(runs);
            }
        }
        None
    }

    /// Cuts the cycle through `m`: the reduced label of an all-singleton
    /// vertex label.
    pub fn reduce(&self) -> Result<ReducedLabel> {
        if !self.is_vertex() {
            return Err(Error::NotAVertexLabel(format!(
                "{self} has a block of size > 1"
            )));
        }
        // Canonical rotation already puts {m} last.
        let order = self.blocks[..self.m - 1]
            .iter()
            .map(|b| *b.iter().next().expect("singleton"))
            .collect();
        Ok(ReducedLabel { order })
    }

    /// Vertex labels of the closed cell: drop `m` from its block, take all
    /// orderings within each block, rotate each resulting string
    /// `|I_last|` times, and close each string back up with `m` appended.
    pub fn vertex_labels(&self) -> Vec<CyclicPartition> {
        let p = self.block_count();
        let last_size = self.blocks[p - 1].len();
        let mut core: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().collect())
            .collect();
        core[p - 1].retain(|&e| e != self.m);

        let orderings: Vec<Vec<Vec<usize>>> = core
            .iter()
            .map(|b| {
                if b.is_empty() {
                    vec![Vec::new()]
                } else {
                    b.iter().copied().permutations(b.len()).collect()
                }
            })
            .collect();
        let mut out = BTreeSet::new();
        for choice in orderings.iter().multi_cartesian_product() {
            let string: Vec<usize> = choice.into_iter().flatten().copied().collect();
            for t in 0..last_size {
                let mut order = string.clone();
                let len = order.len();
                if len > 0 {
                    order.rotate_right(t % len);
                }
                order.push(self.m);
                out.insert(
                    CyclicPartition::from_cycle(self.m, &order).expect("valid vertex label"),
                );
            }
        }
        out.into_iter().collect()
    }

    /// Every label refining this one (the closure of the cell), including the
    /// label itself: each block is replaced by an ordered partition of it,
    /// composed in cyclic order.
    pub fn refinements(&self) -> Vec<CyclicPartition> {
        let per_block: Vec<Vec<Vec<BTreeSet<usize>>>> = self
            .blocks
            .iter()
            .map(|b| {
                let elems: Vec<usize> = b.iter().copied().collect();
                ordered_set_partitions(&elems)
            })
            .collect();
        let mut out = BTreeSet::new();
        for choice in per_block.iter().multi_cartesian_product() {
            let raw: Vec<Vec<usize>> = choice
                .into_iter()
                .flatten()
                .map(|s| s.iter().copied().collect())
                .collect();
            out.insert(CyclicPartition::new(self.m, raw).expect("valid refinement"));
        }
        out.into_iter().collect()
    }

    /// Labels obtained by splitting exactly one block into two consecutive
    /// blocks; these are the labels of the cells this cell covers.
    pub fn splits(&self) -> Vec<CyclicPartition> {
        let mut out = Vec::new();
        for (t, block) in self.blocks.iter().enumerate() {
            if block.len() < 2 {
                continue;
            }
            let elems: Vec<usize> = block.iter().copied().collect();
            for (first, second) in two_part_ordered_splits(&elems) {
                let mut raw: Vec<Vec<usize>> = Vec::with_capacity(self.block_count() + 1);
                for (u, b) in self.blocks.iter().enumerate() {
                    if u == t {
                        raw.push(first.clone());
                        raw.push(second.clone());
                    } else {
                        raw.push(b.iter().copied().collect());
                    }
                }
                out.push(CyclicPartition::new(self.m, raw).expect("valid split"));
            }
        }
        out.sort();
        out
    }

    /// Relabels elements through `sigma` (a permutation of `[m]` given as
    /// `sigma[e-1]` = image of `e`) and re-canonicalizes.
    pub fn relabel(&self, sigma: &[usize]) -> CyclicPartition {
        assert_eq!(sigma.len(), self.m);
        let raw: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| sigma[e - 1]).collect())
            .collect();
        CyclicPartition::new(self.m, raw).expect("relabeling preserves validity")
    }
}

impl ReducedLabel {
    /// A permutation of `{1..m-1}` written as its element sequence.
    pub fn new(order: Vec<usize>) -> Result<ReducedLabel> {
        let n = order.len();
        if n < 3 {
            return Err(Error::MalformedPartition(format!(
                "reduced label needs at least 3 entries, got {n}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &e in &order {
            if e < 1 || e > n || seen[e] {
                return Err(Error::MalformedPartition(format!(
                    "{order:?} is not a permutation of [1..{n}]"
                )));
            }
            seen[e] = true;
        }
        Ok(ReducedLabel { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn m(&self) -> usize {
        self.order.len() + 1
    }

    /// Appends `{m}` and closes the string into a cycle.
    pub fn lift(&self) -> CyclicPartition {
        let m = self.m();
        let mut order = self.order.clone();
        order.push(m);
        CyclicPartition::from_cycle(m, &order).expect("valid lift")
    }

    /// One application of `cycl`: the last entry moves to the front.
    pub fn cycl(&self) -> ReducedLabel {
        let mut order = self.order.clone();
        order.rotate_right(1);
        ReducedLabel { order }
    }
}

/// All distinct canonical cyclic partitions of `[m]` into exactly `p` blocks,
/// in a deterministic order: underlying set partitions by restricted-growth
/// strings, then all arrangements of the blocks not containing `m`.
pub fn enumerate_partitions(m: usize, p: usize) -> Result<Vec<CyclicPartition>> {
    if m < 4 {
        return Err(Error::GroundSetTooSmall(m));
    }
    assert!(p >= 1 && p <= m, "need 1 <= p <= m, got p={p}");
    let mut out = Vec::new();
    for classes in restricted_growth_strings(m, p) {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); p];
        for (idx, &c) in classes.iter().enumerate() {
            blocks[c].push(idx + 1);
        }
        let m_class = classes[m - 1];
        let rest: Vec<usize> = (0..p).filter(|&c| c != m_class).collect();
        let k = rest.len();
        for perm in rest.into_iter().permutations(k) {
            let mut raw: Vec<Vec<usize>> = perm.into_iter().map(|c| blocks[c].clone()).collect();
            raw.push(blocks[m_class].clone());
            out.push(CyclicPartition::new(m, raw).expect("valid enumeration"));
        }
    }
    Ok(out)
}

/// Restricted-growth strings of length `m` with exactly `p` classes, in
/// lexicographic order.
fn restricted_growth_strings(m: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(
        cur: &mut Vec<usize>,
        pos: usize,
        max_used: usize,
        m: usize,
        p: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == m {
            if max_used + 1 == p {
                out.push(cur.clone());
            }
            return;
        }
        if max_used + 1 + (m - pos) < p {
            return; // cannot reach p classes any more
        }
        for c in 0..=(max_used + 1).min(p - 1) {
            cur[pos] = c;
            rec(cur, pos + 1, max_used.max(c), m, p, out);
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut cur = vec![0usize; m];
    rec(&mut cur, 1, 0, m, p, &mut out);
    out
}

/// All ordered set partitions of `elems` (any number of parts), each part as
/// a sorted set.
pub fn ordered_set_partitions(elems: &[usize]) -> Vec<Vec<BTreeSet<usize>>> {
    let n = elems.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in 1..=n {
        for classes in restricted_growth_strings(n, p) {
            let mut blocks: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); p];
            for (idx, &c) in classes.iter().enumerate() {
                blocks[c].insert(elems[idx]);
            }
            for perm in (0..p).permutations(p) {
                out.push(perm.iter().map(|&c| blocks[c].clone()).collect());
            }
        }
    }
    out
}

/// The `2^k - 2` ordered two-part splits of `elems` (`k = |elems| >= 2`).
fn two_part_ordered_splits(elems: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let k = elems.len();
    let mut out = Vec::new();
    for mask in 1..((1u32 << k) - 1) {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (i, &e) in elems.iter().enumerate() {
            if mask & (1 << i) != 0 {
                first.push(e);
            } else {
                second.push(e);
            }
        }
        out.push((first, second));
    }
    out
}

impl fmt::Display for CyclicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "[{}]", b.iter().map(|e| e.to_string()).join(","))?;
        }
        Ok(())
    }
}

impl FromStr for CyclicPartition {
    type Err = Error;

    /// Parses the canonical text form, e.g. `"[1]|[4]|[3]|[2,5]"`. The ground
    /// set size is the total number of elements.
    fn from_str(s: &str) -> Result<CyclicPartition> {
        let bad = |msg: &str| Error::MalformedPartition(format!("{msg} in {s:?}"));
        let mut raw: Vec<Vec<usize>> = Vec::new();
        let mut count = 0usize;
        for part in s.split('|') {
            let part = part.trim();
            let inner = part
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(|| bad("block must be bracketed"))?;
            let mut block = Vec::new();
            for e in inner.split(',') {
                let e = e.trim();
                if e.is_empty() {
                    return Err(bad("empty element"));
                }
                block.push(e.parse::<usize>().map_err(|_| bad("bad integer"))?);
            }
            count += block.len();
            raw.push(block);
        }
        CyclicPartition::new(count, raw)
    }
}

impl fmt::Display for ReducedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
