//! The ordinarization transform `S -> S ∪ {F(S)} ∖ {m(S)}` and the tree it induces on
//! the semigroups of a fixed genus.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::genus_tree::{self, Census, EnumOptions, MAX_COMPACT_GENUS};
use crate::semigroup::NumericalSemigroup;

/// Swap the multiplicity out for the Frobenius number.
pub fn ordinarization_transform(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_ordinary() {
        return Err(Error::OrdinaryInput);
    }
    let mut table = s.table().clone();
    table.set(s.multiplicity(), false);
    table.set(s.conductor() - 1, true);
    Ok(NumericalSemigroup::from_table_unchecked(table))
}

/// Number of transforms needed to reach `S_g`, i.e. `#(S ∩ [1, g])`.
pub fn ordinarization_number(s: &NumericalSemigroup) -> usize {
    s.count_members_between(1, s.genus())
}

/// Semigroups whose transform is `s`, sorted by (new multiplicity, new Frobenius number).
///
/// A child is `S ∖ {a} ∪ {b}` with `a` effective and `⌈m/2⌉ <= b < m`; each candidate is
/// checked for closure.
pub fn children_in_tree(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    if s.is_full() {
        return Vec::new();
    }
    let m = s.multiplicity();
    let effective = s.minimal_generators().effective_generators;
    let mut out = Vec::new();
    for b in m.div_ceil(2)..m {
        for &a in &effective {
            let mut table = s.table_extended(a + 1);
            table.set(a, false);
            table.set(b, true);
            if let Ok(child) = NumericalSemigroup::from_table(table) {
                out.push(child);
            }
        }
    }
    out
}

/// Children with no effective generators; never more than `⌊m(S)/2⌋`.
pub fn children_h0_count(s: &NumericalSemigroup) -> usize {
    children_in_tree(s)
        .iter()
        .filter(|c| c.minimal_generators().effectivity() == 0)
        .count()
}

/// Children of `s` in the semigroup tree: `S ∖ {n}` for each effective generator `n`.
pub fn semigroup_tree_children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    s.minimal_generators()
        .effective_generators
        .into_iter()
        .map(|n| {
            let mut table = s.table_extended(n + 1);
            table.set(n, false);
            NumericalSemigroup::from_table_unchecked(table)
        })
        .collect()
}

/// All semigroups of the given genus, in depth-first semigroup-tree order.
pub fn enumerate_genus(genus: usize, opts: &EnumOptions) -> Result<Vec<NumericalSemigroup>> {
    Ok(genus_tree::enumerate_compact(genus, opts)?
        .iter()
        .map(|c| c.to_semigroup())
        .collect())
}

/// Census of ordinarization numbers and effectivities for every genus up to `max_genus`.
pub fn census(max_genus: usize, opts: &EnumOptions) -> Result<Census> {
    genus_tree::census(max_genus, opts)
}

/// `t(g, h)`: number of genus-`g` semigroups with `h` effective generators.
pub fn effectivity_histogram(genus: usize, opts: &EnumOptions) -> Result<BTreeMap<usize, u64>> {
    let c = census(genus, opts)?;
    Ok(c.effectivity[genus]
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(h, &n)| (h, n))
        .collect())
}

/// Largest genus accepted by [`n_g_r_tuples`].
pub const MAX_TUPLE_GENUS: usize = 127;

/// Counts `S_g ∖ {a_1..a_r} ∪ {b_1..b_r}` that are closed under addition, with
/// `b_i <= g < a_i <= 2g - 1`.
pub fn n_g_r_tuples(genus: usize, r: usize) -> Result<u64> {
    if r == 0 {
        return Ok(1);
    }
    if genus > MAX_TUPLE_GENUS {
        return Err(Error::ResourceLimit(format!(
            "tuple enumeration supports genus <= {MAX_TUPLE_GENUS}, got {genus}"
        )));
    }
    if 2 * r > genus {
        return Ok(0);
    }
    let mut total = 0;
    choose_small(genus as u32, r, genus as u32, 0, &mut |b| total += count_large(genus as u32, r, b));
    Ok(total)
}

/// Picks the members `b` of `[1, g]` from the top down so that every sum `<= g` of two
/// chosen values has already been chosen.
fn choose_small(g: u32, remaining: usize, upper: u32, chosen: u128, emit: &mut impl FnMut(u128)) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    let window = (u128::MAX >> (127 - g)) & !1;
    for b in (remaining as u32..=upper).rev() {
        let with = chosen | 1u128 << b;
        if (with << b) & window & !with == 0 {
            choose_small(g, remaining - 1, b - 1, with, emit);
        }
    }
}

/// Counts gap sets `A ⊂ [g+1, 2g-1]` of size `r` such that `a - b` is a gap for every
/// `a ∈ A` and chosen small member `b`. Bit `a - g` of `large` marks `a ∈ A`.
fn count_large(g: u32, r: usize, small: u128) -> u64 {
    let smalls: Vec<u32> = (1..=g).filter(|&b| small >> b & 1 == 1).collect();
    fn rec(g: u32, smalls: &[u32], small: u128, remaining: usize, from: u32, large: u128) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        let last = 2 * g - 1;
        for a in from..=last {
            if last - a + 1 < remaining as u32 {
                break;
            }
            let ok = smalls.iter().all(|&b| {
                let d = a - b;
                if d <= g {
                    small >> d & 1 == 0
                } else {
                    large >> (d - g) & 1 == 1
                }
            });
            if ok {
                total += rec(g, smalls, small, remaining - 1, a + 1, large | 1u128 << (a - g));
            }
        }
        total
    }
    rec(g, &smalls, small, r, g + 1, 0)
}

/// `n_{g,r}` from the semigroup-tree census, cross-checked against tuple enumeration.
pub fn n_g_r_brute(genus: usize, r: usize, opts: &EnumOptions) -> Result<u64> {
    let from_census = census(genus, opts)?.n_g_r(genus, r);
    let from_tuples = n_g_r_tuples(genus, r)?;
    if from_census != from_tuples {
        return Err(Error::OracleMismatch {
            what: format!("n_{{{genus},{r}}}"),
            left: from_census.to_string(),
            right: from_tuples.to_string(),
        });
    }
    Ok(from_census)
}

/// `T_k`: multiplicity `2k+1`, Kunz coordinates `(k, k, k-1, k-1, ..., 1, 1)`.
pub fn tk_family(k: usize) -> Result<NumericalSemigroup> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let kunz: Vec<usize> = (1..=k).rev().flat_map(|j| [j, j]).collect();
    NumericalSemigroup::from_kunz(2 * k + 1, &kunz)
}

/// All genus-`g` semigroups linked by the ordinarization transform, rooted at `S_g`.
#[derive(Debug, Clone)]
pub struct OrdinarizationTree {
    pub genus: usize,
    /// Breadth-first order; node 0 is `S_g`.
    pub nodes: Vec<NumericalSemigroup>,
    pub parent: Vec<Option<usize>>,
    /// Ordinarization number of each node.
    pub depth: Vec<usize>,
    /// `n_{g,0}, n_{g,1}, ...`
    pub level_counts: Vec<u64>,
}

impl OrdinarizationTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&c| self.parent[c] == Some(id))
    }
}

pub fn build_ordinarization_tree(genus: usize, opts: &EnumOptions) -> Result<OrdinarizationTree> {
    if genus > MAX_COMPACT_GENUS {
        return Err(Error::ResourceLimit(format!("genus {genus} is beyond {MAX_COMPACT_GENUS}")));
    }
    let all = enumerate_genus(genus, opts)?;
    let index: HashMap<&NumericalSemigroup, usize> = all.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); all.len()];
    let mut root = None;
    for (i, s) in all.iter().enumerate() {
        match ordinarization_transform(s) {
            Ok(p) => kids[index[&p]].push(i),
            Err(_) => root = Some(i),
        }
    }
    let root = root.expect("S_g is always present");
    for list in &mut kids {
        list.sort_by_key(|&c| (all[c].multiplicity(), all[c].conductor()));
    }

    let mut order = Vec::with_capacity(all.len());
    let mut parent = Vec::with_capacity(all.len());
    let mut depth = Vec::with_capacity(all.len());
    let mut queue = VecDeque::from([(root, None, 0usize)]);
    while let Some((old, par, d)) = queue.pop_front() {
        let id = order.len();
        order.push(old);
        parent.push(par);
        depth.push(d);
        for &c in &kids[old] {
            queue.push_back((c, Some(id), d + 1));
        }
    }
    let mut level_counts = vec![0u64; depth.iter().max().map_or(0, |d| d + 1)];
    for &d in &depth {
        level_counts[d] += 1;
    }
    let mut slots: Vec<Option<NumericalSemigroup>> = all.into_iter().map(Some).collect();
    let nodes = order.iter().map(|&i| slots[i].take().expect("visited once")).collect();
    Ok(OrdinarizationTree { genus, nodes, parent, depth, level_counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn gens(g: &[usize]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Genus-`g` semigroups by brute force over gap sets inside `[1, 2g - 1]`.
    fn gap_set_oracle(g: usize) -> BTreeSet<Vec<usize>> {
        let width = (2 * g).saturating_sub(1);
        let mut out = BTreeSet::new();
        for mask in 0u64..(1 << width) {
            if mask.count_ones() as usize != g {
                continue;
            }
            let gaps: Vec<usize> = (1..=width).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let limit = 2 * g + 1;
            let member = |x: usize| x == 0 || !gaps.contains(&x);
            let closed = (1..limit).all(|x| {
                (x..limit - x).all(|y| !(member(x) && member(y)) || member(x + y))
            });
            if closed {
                out.insert(gaps);
            }
        }
        out
    }

    #[test]
    fn transform_examples() {
        let t = ordinarization_transform(&gens(&[2, 15])).unwrap();
        assert_eq!(t.gaps(), vec![1, 2, 3, 5, 7, 9, 11]);
        assert!(NumericalSemigroup::from_gaps(t.gaps()).is_ok());
        assert_eq!(ordinarization_transform(&gens(&[2, 3])), Err(Error::OrdinaryInput));
        assert_eq!(ordinarization_transform(&NumericalSemigroup::full()), Err(Error::OrdinaryInput));
    }

    #[test]
    fn number_examples() {
        assert_eq!(ordinarization_number(&NumericalSemigroup::ordinary(9)), 0);
        assert_eq!(ordinarization_number(&gens(&[2, 15])), 3);
        assert_eq!(ordinarization_number(&gens(&[105, 165, 231, 385])), 228);
        assert_eq!(ordinarization_number(&NumericalSemigroup::full()), 0);
    }

    #[test]
    fn children_examples() {
        assert_eq!(children_in_tree(&NumericalSemigroup::ordinary(7)).len(), 18);
        let sharp = gens(&[7, 8, 10, 11, 12, 13]);
        assert_eq!(sharp.genus(), 7);
        assert_eq!(children_h0_count(&sharp), 3);
        assert!(children_in_tree(&NumericalSemigroup::full()).is_empty());
        for c in children_in_tree(&sharp) {
            assert_eq!(ordinarization_transform(&c).unwrap(), sharp);
        }
    }

    #[test]
    fn no_effective_generators_means_no_children() {
        for s in enumerate_genus(8, &EnumOptions::default()).unwrap() {
            if s.minimal_generators().effectivity() == 0 {
                assert!(children_in_tree(&s).is_empty());
            }
        }
    }

    #[test]
    fn fig1_depth2_parent() {
        // Depth-2 node of T_7 with members 4,6,8,10,12,14,.. below 15 and its parent.
        let child = NumericalSemigroup::from_gaps([1, 2, 3, 5, 7, 9, 11]).unwrap();
        let parent = NumericalSemigroup::from_gaps([1, 2, 3, 4, 5, 7, 9]).unwrap();
        assert_eq!(ordinarization_number(&child), 2);
        assert_eq!(ordinarization_transform(&child).unwrap(), parent);
    }

    #[test]
    fn tree_genus_seven() {
        let t = build_ordinarization_tree(7, &EnumOptions::default()).unwrap();
        assert_eq!(t.len(), 39);
        assert_eq!(t.level_counts, vec![1, 18, 19, 1]);
        assert_eq!(t.nodes[0], NumericalSemigroup::ordinary(7));
        for (i, s) in t.nodes.iter().enumerate() {
            assert_eq!(t.depth[i], ordinarization_number(s));
            if let Some(p) = t.parent[i] {
                assert_eq!(ordinarization_transform(s).unwrap(), t.nodes[p]);
            }
        }
        let oracle = gap_set_oracle(7);
        let ours: BTreeSet<Vec<usize>> = t.nodes.iter().map(|s| s.gaps()).collect();
        assert_eq!(ours, oracle);
    }

    #[test]
    fn tree_small_genera() {
        let t0 = build_ordinarization_tree(0, &EnumOptions::default()).unwrap();
        assert_eq!(t0.len(), 1);
        assert_eq!(t0.level_counts, vec![1]);
        let t6 = build_ordinarization_tree(6, &EnumOptions::default()).unwrap();
        assert_eq!(t6.level_counts, vec![1, 12, 9, 1]);
        assert_eq!(t6.len(), 23);
    }

    #[test]
    fn tree_children_order_matches_children_in_tree() {
        let t = build_ordinarization_tree(8, &EnumOptions::default()).unwrap();
        for id in 0..t.len() {
            let from_tree: Vec<_> = t.children(id).map(|c| t.nodes[c].clone()).collect();
            assert_eq!(from_tree, children_in_tree(&t.nodes[id]));
        }
    }

    #[test]
    fn enumerate_examples() {
        let opts = EnumOptions::default();
        assert_eq!(enumerate_genus(0, &opts).unwrap(), vec![NumericalSemigroup::full()]);
        let g3: BTreeSet<_> = enumerate_genus(3, &opts).unwrap().iter().map(|s| s.gaps()).collect();
        assert_eq!(g3, gap_set_oracle(3));
        assert_eq!(g3.len(), 4);
        for g in 1..=9 {
            assert_eq!(enumerate_genus(g, &opts).unwrap().len(), gap_set_oracle(g).len());
        }
    }

    #[test]
    fn generic_semigroup_tree_matches_compact() {
        let opts = EnumOptions::default();
        let mut layer = vec![NumericalSemigroup::full()];
        for g in 1..=9 {
            layer = layer.iter().flat_map(semigroup_tree_children).collect();
            assert_eq!(layer, enumerate_genus(g, &opts).unwrap());
        }
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(n_g_r_tuples(7, 1).unwrap(), 18);
        assert_eq!(n_g_r_tuples(7, 2).unwrap(), 19);
        assert_eq!(n_g_r_tuples(7, 3).unwrap(), 1);
        assert_eq!(n_g_r_tuples(7, 4).unwrap(), 0);
        assert_eq!(n_g_r_brute(7, 2, &EnumOptions::default()).unwrap(), 19);
        assert_eq!(n_g_r_brute(7, 1, &EnumOptions::default()).unwrap(), 18);
        // <2, 2g+1> is alone at depth ⌊g/2⌋ except at g = 3 (<3,4>, <3,5,7> join it)
        // and g = 5 (<4,5,11> joins it).
        for g in 1..=20 {
            let expected = match g {
                3 => 3,
                5 => 2,
                _ => 1,
            };
            assert_eq!(n_g_r_tuples(g, g / 2).unwrap(), expected, "g = {g}");
        }
        let s34 = gens(&[3, 4]);
        assert_eq!((s34.genus(), ordinarization_number(&s34)), (3, 1));
        let s4511 = gens(&[4, 5, 11]);
        assert_eq!((s4511.genus(), ordinarization_number(&s4511)), (5, 2));
    }

    #[test]
    fn histogram_examples() {
        let opts = EnumOptions::default();
        assert_eq!(effectivity_histogram(0, &opts).unwrap(), BTreeMap::from([(1, 1)]));
        assert_eq!(effectivity_histogram(7, &opts).unwrap().values().sum::<u64>(), 39);
        assert_eq!(effectivity_histogram(12, &opts).unwrap().values().sum::<u64>(), 592);
    }

    #[test]
    fn tk_examples() {
        let t2 = tk_family(2).unwrap();
        assert_eq!(t2.frobenius(), 7);
        assert_eq!(t2.minimal_generators().effectivity(), 4);
        let t3 = tk_family(3).unwrap();
        let mut table = t3.table_extended(23);
        table.set(6, true);
        table.set(22, false);
        let child = NumericalSemigroup::from_table(table).unwrap();
        assert!(children_in_tree(&t3).contains(&child));
    }

    #[test]
    fn h0_bound_small() {
        let s = NumericalSemigroup::ordinary(4);
        assert!(children_h0_count(&s) <= 2);
    }

    #[test]
    fn tuples_at_large_genus() {
        for g in [64u64, 65, 100, MAX_TUPLE_GENUS as u64] {
            assert_eq!(n_g_r_tuples(g as usize, 1).unwrap(), crate::families::n_g_1_formula(g));
        }
        assert_eq!(n_g_r_tuples(72, 2).unwrap(), crate::families::n_g_2_formula(72).unwrap());
        assert!(matches!(n_g_r_tuples(MAX_TUPLE_GENUS + 1, 1), Err(Error::ResourceLimit(_))));
    }
}
