//! Exhaustive walk of the semigroup tree (root: the full monoid, children: remove one
//! effective generator), on a 128-bit membership mask.
//!
//! Effective generators of a genus-`g` node are below `3g + 1`, so the mask covers every
//! node up to genus [`MAX_COMPACT_GENUS`].

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use bitvec::prelude::*;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, Table};

pub const MAX_COMPACT_GENUS: usize = 42;

/// Depth at which the walk fans out across worker threads.
const SPLIT_DEPTH: usize = 12;

/// Default cap on the number of semigroups at the deepest genus of a walk.
pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub node_cap: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { node_cap: DEFAULT_NODE_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Compact {
    members: u128,
    conductor: u32,
    multiplicity: u32,
    genus: u32,
}

#[inline]
fn low_mask(n: u32) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl Compact {
    pub(crate) fn root() -> Self {
        Compact { members: u128::MAX, conductor: 0, multiplicity: 1, genus: 0 }
    }

    /// `n` is not a sum of two positive members.
    #[inline]
    fn is_minimal(&self, n: u32) -> bool {
        // bit x of `mirrored` is membership of n - x
        let mirrored = self.members.reverse_bits() >> (127 - n);
        self.members & mirrored & low_mask(n) & !1 == 0
    }

    #[inline]
    pub(crate) fn for_each_effective(&self, mut f: impl FnMut(u32)) {
        let lo = self.conductor.max(1);
        let hi = (self.conductor + self.multiplicity).max(2);
        for n in lo..hi {
            if self.is_minimal(n) {
                f(n);
            }
        }
    }

    pub(crate) fn effectivity(&self) -> usize {
        let mut h = 0;
        self.for_each_effective(|_| h += 1);
        h
    }

    #[inline]
    fn child(&self, n: u32) -> Self {
        Compact {
            members: self.members & !(1u128 << n),
            conductor: n + 1,
            multiplicity: if n == self.multiplicity { n + 1 } else { self.multiplicity },
            genus: self.genus + 1,
        }
    }

    #[inline]
    pub(crate) fn ordinarization_number(&self) -> usize {
        (self.members & low_mask(self.genus + 1) & !1).count_ones() as usize
    }

    pub(crate) fn to_semigroup(self) -> NumericalSemigroup {
        let len = self.conductor.max(1) as usize;
        let mut table: Table = bitvec![u64, Lsb0; 0; len];
        for x in 0..len {
            table.set(x, self.members >> x & 1 == 1);
        }
        NumericalSemigroup::from_table_unchecked(table)
    }
}

/// Per-genus tallies of ordinarization number and effectivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// `levels[g][r]` = number of genus-`g` semigroups with ordinarization number `r`.
    pub levels: Vec<Vec<u64>>,
    /// `effectivity[g][h]` = number of genus-`g` semigroups with `h` effective generators.
    pub effectivity: Vec<Vec<u64>>,
}

impl Census {
    fn empty(max_genus: usize) -> Self {
        Census {
            levels: (0..=max_genus).map(|g| vec![0; g / 2 + 1]).collect(),
            effectivity: (0..=max_genus).map(|g| vec![0; g + 2]).collect(),
        }
    }

    fn record(&mut self, node: &Compact) {
        let g = node.genus as usize;
        self.levels[g][node.ordinarization_number()] += 1;
        self.effectivity[g][node.effectivity()] += 1;
    }

    fn merge(mut self, other: Census) -> Census {
        for (a, b) in self.levels.iter_mut().zip(other.levels) {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        }
        for (a, b) in self.effectivity.iter_mut().zip(other.effectivity) {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        }
        self
    }

    pub fn max_genus(&self) -> usize {
        self.levels.len() - 1
    }

    /// N(g).
    pub fn total(&self, genus: usize) -> u64 {
        self.levels[genus].iter().sum()
    }

    pub fn n_g_r(&self, genus: usize, r: usize) -> u64 {
        self.levels[genus].get(r).copied().unwrap_or(0)
    }
}

struct Budget {
    cap: u64,
    used: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Budget { cap, used: AtomicU64::new(0), exceeded: AtomicBool::new(false) }
    }

    fn charge(&self, n: u64) -> bool {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.cap {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded.load(Ordering::Relaxed)
    }

    fn check(&self, genus: usize) -> Result<()> {
        if self.exceeded.load(Ordering::Relaxed) {
            Err(Error::ResourceLimit(format!(
                "more than {} semigroups of genus {genus}",
                self.cap
            )))
        } else {
            Ok(())
        }
    }
}

fn check_genus(genus: usize) -> Result<()> {
    if genus > MAX_COMPACT_GENUS {
        return Err(Error::ResourceLimit(format!(
            "genus {genus} exceeds the enumerator limit {MAX_COMPACT_GENUS}"
        )));
    }
    Ok(())
}

/// Nodes at `depth` (or shallower leaves when `depth > max_genus`) in DFS order,
/// visiting everything above the frontier with `visit`.
fn frontier(max_genus: usize, mut visit: impl FnMut(&Compact)) -> Vec<Compact> {
    let depth = SPLIT_DEPTH.min(max_genus);
    let mut layer = vec![Compact::root()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for node in &layer {
            visit(node);
            node.for_each_effective(|n| next.push(node.child(n)));
        }
        layer = next;
    }
    layer
}

const FLUSH: u64 = 4096;

fn walk_census(node: &Compact, max_genus: u32, stats: &mut Census, pending: &mut u64, budget: &Budget) -> bool {
    stats.record(node);
    if node.genus == max_genus {
        *pending += 1;
        if *pending >= FLUSH {
            let ok = budget.charge(*pending);
            *pending = 0;
            return ok;
        }
        return true;
    }
    let mut ok = true;
    node.for_each_effective(|n| {
        if ok {
            ok = walk_census(&node.child(n), max_genus, stats, pending, budget);
        }
    });
    ok
}

/// Ordinarization-number and effectivity census of every genus up to `max_genus`.
pub fn census(max_genus: usize, opts: &EnumOptions) -> Result<Census> {
    check_genus(max_genus)?;
    let mut top = Census::empty(max_genus);
    let layer = frontier(max_genus, |n| top.record(n));
    let budget = Budget::new(opts.node_cap);
    let g = max_genus as u32;
    let below = layer
        .par_iter()
        .map(|node| {
            let mut stats = Census::empty(max_genus);
            let mut pending = 0;
            walk_census(node, g, &mut stats, &mut pending, &budget);
            budget.charge(pending);
            stats
        })
        .reduce(|| Census::empty(max_genus), Census::merge);
    budget.check(max_genus)?;
    Ok(top.merge(below))
}

fn walk_collect(node: &Compact, max_genus: u32, out: &mut Vec<Compact>, budget: &Budget) -> bool {
    if node.genus == max_genus {
        out.push(*node);
        return !(out.len() as u64).is_multiple_of(FLUSH) || budget.charge(FLUSH);
    }
    let mut ok = true;
    node.for_each_effective(|n| {
        if ok {
            ok = walk_collect(&node.child(n), max_genus, out, budget);
        }
    });
    ok
}

/// Every genus-`genus` node of the semigroup tree, in depth-first order with children
/// taken by increasing removed generator.
pub(crate) fn enumerate_compact(genus: usize, opts: &EnumOptions) -> Result<Vec<Compact>> {
    check_genus(genus)?;
    let layer = frontier(genus, |_| {});
    let budget = Budget::new(opts.node_cap);
    let g = genus as u32;
    let chunks: Vec<Vec<Compact>> = layer
        .par_iter()
        .map(|node| {
            let mut out = Vec::new();
            walk_collect(node, g, &mut out, &budget);
            budget.charge(out.len() as u64 % FLUSH);
            out
        })
        .collect();
    budget.check(genus)?;
    Ok(chunks.into_iter().flatten().collect())
}
