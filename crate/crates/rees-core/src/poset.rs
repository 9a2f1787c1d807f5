//! Finite posets given by labeled elements plus an irredundant cover
//! relation, with the structural operators everything else composes:
//! duals, bounding, truncation, intervals, induced subposets.
//!
//! Element order is canonical (sorted by height, then label), so
//! rebuilding from the same inputs yields the identical indexing.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::label::Label;

/// Cached order relation as bitsets over element indices.
pub(crate) struct LeqTable {
    words: usize,
    /// up[i * words ..]: bit j set iff i <= j.
    up: Vec<u64>,
    /// down[j * words ..]: bit i set iff i <= j.
    down: Vec<u64>,
}

impl LeqTable {
    pub(crate) fn up_row(&self, i: usize) -> &[u64] {
        &self.up[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn down_row(&self, j: usize) -> &[u64] {
        &self.down[j * self.words..(j + 1) * self.words]
    }
}

/// Iterate the set bits of a bitset row.
pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &bits)| {
        let mut bits = bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            }
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    Closed,
    Open,
}

pub struct Poset {
    labels: Vec<Label>,
    /// (lower, upper) pairs, lexicographically sorted.
    covers: Vec<(u32, u32)>,
    up_adj: Vec<Vec<u32>>,
    down_adj: Vec<Vec<u32>>,
    /// Longest chain length from a minimal element up to each element.
    heights: Vec<u32>,
    /// Present iff the poset is ranked (all maximal chains share one length).
    ranks: Option<Vec<u32>>,
    index: HashMap<Label, u32>,
    leq: OnceLock<LeqTable>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size())
            .field("covers", &self.covers.len())
            .field("ranked", &self.is_ranked())
            .finish()
    }
}

impl Clone for Poset {
    fn clone(&self) -> Self {
        Poset {
            labels: self.labels.clone(),
            covers: self.covers.clone(),
            up_adj: self.up_adj.clone(),
            down_adj: self.down_adj.clone(),
            heights: self.heights.clone(),
            ranks: self.ranks.clone(),
            index: self.index.clone(),
            leq: OnceLock::new(),
        }
    }
}

impl Poset {
    /// Build a poset from labels and cover pairs given by label.
    ///
    /// Rejects duplicate labels, unknown labels, cycles, and transitively
    /// implied covers (covers must be the transitive reduction).
    pub fn build(labels: Vec<Label>, cover_pairs: &[(Label, Label)]) -> Result<Poset> {
        let mut index: HashMap<&Label, u32> = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l, i as u32).is_some() {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        let mut covers = Vec::with_capacity(cover_pairs.len());
        for (a, b) in cover_pairs {
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            covers.push((ia, ib));
        }
        Poset::from_cover_indices(labels, covers)
    }

    /// Build from labels and cover pairs by index, validating irredundancy.
    pub fn from_cover_indices(labels: Vec<Label>, covers: Vec<(u32, u32)>) -> Result<Poset> {
        let p = Poset::assemble(labels, covers)?;
        // A cover (x, y) is redundant iff some other upper cover z of x
        // satisfies z <= y.
        for &(x, y) in &p.covers {
            for &z in &p.up_adj[x as usize] {
                if z != y && p.leq(z as usize, y as usize) {
                    return Err(Error::RedundantCover(
                        p.labels[x as usize].to_string(),
                        p.labels[y as usize].to_string(),
                    ));
                }
            }
        }
        Ok(p)
    }

    /// Internal constructor: canonicalize ordering, detect cycles, compute
    /// heights and (when the poset is ranked) ranks. Assumes covers are
    /// already irredundant.
    pub(crate) fn assemble(labels: Vec<Label>, covers: Vec<(u32, u32)>) -> Result<Poset> {
        let n = labels.len();
        let mut up_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in &covers {
            if a as usize >= n || b as usize >= n {
                return Err(Error::IndexOutOfRange(a.max(b) as usize, n));
            }
            up_adj[a as usize].push(b);
            indeg[b as usize] += 1;
        }
        // Kahn topological order + longest-path heights.
        let mut heights = vec![0u32; n];
        let mut queue: Vec<u32> = (0..n as u32).filter(|&i| indeg[i as usize] == 0).collect();
        let mut seen = 0usize;
        let mut head = 0usize;
        while head < queue.len() {
            let x = queue[head] as usize;
            head += 1;
            seen += 1;
            for &y in &up_adj[x] {
                let y = y as usize;
                heights[y] = heights[y].max(heights[x] + 1);
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y as u32);
                }
            }
        }
        if seen != n {
            return Err(Error::CoverCycle);
        }

        // Canonical order: (height, label).
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by(|&a, &b| {
            (heights[a as usize], &labels[a as usize])
                .cmp(&(heights[b as usize], &labels[b as usize]))
        });
        let mut position = vec![0u32; n];
        for (new, &old) in order.iter().enumerate() {
            position[old as usize] = new as u32;
        }
        let new_labels: Vec<Label> = order.iter().map(|&o| labels[o as usize].clone()).collect();
        let new_heights: Vec<u32> = order.iter().map(|&o| heights[o as usize]).collect();
        let mut new_covers: Vec<(u32, u32)> = covers
            .iter()
            .map(|&(a, b)| (position[a as usize], position[b as usize]))
            .collect();
        new_covers.sort_unstable();
        new_covers.dedup();

        let mut up_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut down_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in &new_covers {
            up_adj[a as usize].push(b);
            down_adj[b as usize].push(a);
        }
        for v in up_adj.iter_mut().chain(down_adj.iter_mut()) {
            v.sort_unstable();
        }

        // Ranked iff every cover raises height by exactly one and all
        // maximal elements share the same height.
        let pure = {
            let covers_ok = new_covers
                .iter()
                .all(|&(a, b)| new_heights[b as usize] == new_heights[a as usize] + 1);
            let max_heights: Vec<u32> = (0..n)
                .filter(|&i| up_adj[i].is_empty())
                .map(|i| new_heights[i])
                .collect();
            covers_ok && max_heights.windows(2).all(|w| w[0] == w[1])
        };
        let ranks = if pure { Some(new_heights.clone()) } else { None };

        let index: HashMap<Label, u32> = new_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        if index.len() != n {
            let dup = new_labels
                .iter()
                .enumerate()
                .find(|(i, l)| index[*l] as usize != *i)
                .map(|(_, l)| l.to_string())
                .unwrap_or_default();
            return Err(Error::DuplicateLabel(dup));
        }

        Ok(Poset {
            labels: new_labels,
            covers: new_covers,
            up_adj,
            down_adj,
            heights: new_heights,
            ranks,
            index,
            leq: OnceLock::new(),
        })
    }

    /// Build from a full order relation: covers are its transitive reduction.
    pub(crate) fn from_order<F: Fn(usize, usize) -> bool>(
        labels: Vec<Label>,
        leq: F,
    ) -> Result<Poset> {
        let n = labels.len();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    let has_between = (0..n)
                        .any(|z| z != a && z != b && leq(a, z) && leq(z, b));
                    if !has_between {
                        covers.push((a as u32, b as u32));
                    }
                }
            }
        }
        Poset::assemble(labels, covers)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.index.get(l).map(|&i| i as usize)
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[u32] {
        &self.up_adj[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[u32] {
        &self.down_adj[i]
    }

    pub fn is_ranked(&self) -> bool {
        self.ranks.is_some()
    }

    pub fn ranks(&self) -> Option<&[u32]> {
        self.ranks.as_deref()
    }

    pub fn rank(&self, i: usize) -> Option<u32> {
        self.ranks.as_ref().map(|r| r[i])
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    /// Length of the longest chain (the common maximal-chain length when
    /// the poset is ranked). Zero for the empty poset.
    pub fn length(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.down_adj[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.up_adj[i].is_empty())
            .collect()
    }

    pub fn unique_min(&self) -> Option<usize> {
        let m = self.minimal_elements();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    pub fn unique_max(&self) -> Option<usize> {
        let m = self.maximal_elements();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    pub fn is_bounded(&self) -> bool {
        !self.is_empty() && self.unique_min().is_some() && self.unique_max().is_some()
    }

    pub(crate) fn leq_table(&self) -> &LeqTable {
        self.leq.get_or_init(|| {
            let n = self.size();
            let words = n.div_ceil(64).max(1);
            let mut up = vec![0u64; n * words];
            let mut down = vec![0u64; n * words];
            // Canonical index order is a linear extension (covers raise
            // height), so a single sweep in each direction suffices.
            for i in (0..n).rev() {
                up[i * words + i / 64] |= 1 << (i % 64);
                for &j in &self.up_adj[i] {
                    let j = j as usize;
                    for w in 0..words {
                        let bits = up[j * words + w];
                        up[i * words + w] |= bits;
                    }
                }
            }
            for j in 0..n {
                down[j * words + j / 64] |= 1 << (j % 64);
                for &i in &self.down_adj[j] {
                    let i = i as usize;
                    for w in 0..words {
                        let bits = down[i * words + w];
                        down[j * words + w] |= bits;
                    }
                }
            }
            LeqTable { words, up, down }
        })
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        let t = self.leq_table();
        t.up[i * t.words + j / 64] & (1 << (j % 64)) != 0
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Indices strictly below j, ascending.
    pub fn strictly_below(&self, j: usize) -> Vec<usize> {
        iter_bits(self.leq_table().down_row(j))
            .filter(|&i| i != j)
            .collect()
    }

    /// Indices strictly above i, ascending.
    pub fn strictly_above(&self, i: usize) -> Vec<usize> {
        iter_bits(self.leq_table().up_row(i))
            .filter(|&j| j != i)
            .collect()
    }

    // ----- structural operators -----

    /// The dual poset (all covers reversed). Labels are preserved.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::assemble(self.labels.clone(), covers).expect("dual of a poset is a poset")
    }

    /// P with a new maximum adjoined above all maximal elements.
    pub fn adjoin_top(&self) -> Poset {
        let mut labels = self.labels.clone();
        let top = labels.len() as u32;
        labels.push(Label::Top);
        let mut covers = self.covers.clone();
        for m in self.maximal_elements() {
            covers.push((m as u32, top));
        }
        Poset::assemble(labels, covers).expect("adjoin_top preserves acyclicity")
    }

    /// P-hat: new minimum and maximum adjoined (always two new elements).
    pub fn adjoin_bottom_and_top(&self) -> Poset {
        let mut labels = self.labels.clone();
        let bot = labels.len() as u32;
        labels.push(Label::Bottom);
        let top = labels.len() as u32;
        labels.push(Label::Top);
        let mut covers = self.covers.clone();
        for m in self.minimal_elements() {
            covers.push((bot, m as u32));
        }
        for m in self.maximal_elements() {
            covers.push((m as u32, top));
        }
        if self.is_empty() {
            covers.push((bot, top));
        }
        Poset::assemble(labels, covers).expect("hat preserves acyclicity")
    }

    /// P-minus: drop the unique minimum.
    pub fn remove_bottom(&self) -> Result<Poset> {
        let bot = self.unique_min().ok_or(Error::NoUniqueMinimum)?;
        let keep: Vec<usize> = (0..self.size()).filter(|&i| i != bot).collect();
        Ok(self.induced_convex(&keep))
    }

    /// Closed or open interval between x and y, as an induced subposet.
    pub fn interval(&self, x: usize, y: usize, kind: IntervalKind) -> Result<Poset> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].to_string(),
                self.labels[y].to_string(),
            ));
        }
        let keep: Vec<usize> = (0..self.size())
            .filter(|&z| {
                self.leq(x, z)
                    && self.leq(z, y)
                    && (kind == IntervalKind::Closed || (z != x && z != y))
            })
            .collect();
        Ok(self.induced_convex(&keep))
    }

    /// Open principal lower order ideal of y: everything strictly below.
    pub fn open_lower_ideal(&self, y: usize) -> Poset {
        self.induced_convex(&self.strictly_below(y))
    }

    /// Closed principal lower order ideal of y.
    pub fn closed_lower_ideal(&self, y: usize) -> Poset {
        let mut keep = self.strictly_below(y);
        keep.push(y);
        keep.sort_unstable();
        self.induced_convex(&keep)
    }

    /// Induced subposet of a convex subset (ideals, filters, intervals):
    /// covers are the ambient covers restricted to the subset.
    pub(crate) fn induced_convex(&self, indices: &[usize]) -> Poset {
        let mut keep = vec![false; self.size()];
        let mut remap = vec![u32::MAX; self.size()];
        for (new, &old) in indices.iter().enumerate() {
            keep[old] = true;
            remap[old] = new as u32;
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let covers = self
            .covers
            .iter()
            .filter(|&&(a, b)| keep[a as usize] && keep[b as usize])
            .map(|&(a, b)| (remap[a as usize], remap[b as usize]))
            .collect();
        Poset::assemble(labels, covers).expect("induced subposet is a poset")
    }

    /// Induced subposet of an arbitrary subset: the order relation is
    /// restricted and covers recomputed as its transitive reduction.
    pub fn induced(&self, indices: &[usize]) -> Poset {
        let labels: Vec<Label> = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let idx: Vec<usize> = indices.to_vec();
        Poset::from_order(labels, |a, b| self.leq(idx[a], idx[b]))
            .expect("induced subposet is a poset")
    }

    /// All same-rank upper intervals [x, max] are isomorphic.
    /// Requires a bounded ranked poset.
    pub fn is_uniform(&self) -> Result<bool> {
        if !self.is_ranked() {
            return Err(Error::UnrankedPoset);
        }
        if !self.is_bounded() {
            return Err(Error::UnboundedPoset);
        }
        let top = self.unique_max().unwrap();
        let n = self.length();
        for r in 0..=n {
            let level: Vec<usize> = (0..self.size())
                .filter(|&i| self.rank(i) == Some(r))
                .collect();
            if level.len() < 2 {
                continue;
            }
            let first = self.interval(level[0], top, IntervalKind::Closed)?;
            for &x in &level[1..] {
                let other = self.interval(x, top, IntervalKind::Closed)?;
                if !poset_isomorphic(&first, &other) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Poset isomorphism by rank-respecting backtracking search (desk scale).
pub fn poset_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.size() != q.size() || p.covers().len() != q.covers().len() {
        return false;
    }
    let n = p.size();
    if n == 0 {
        return true;
    }
    let sig = |poset: &Poset, i: usize| {
        (
            poset.height(i),
            poset.upper_covers(i).len(),
            poset.lower_covers(i).len(),
            poset.strictly_above(i).len(),
            poset.strictly_below(i).len(),
        )
    };
    let psigs: Vec<_> = (0..n).map(|i| sig(p, i)).collect();
    let qsigs: Vec<_> = (0..n).map(|i| sig(q, i)).collect();
    {
        let mut a = psigs.clone();
        let mut b = qsigs.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    // Order elements so each one is maximally constrained by the mapped
    // prefix: repeatedly pick the element comparable to the most already
    // chosen ones, breaking ties by fewest signature candidates.
    let cand_count =
        |i: usize| -> usize { (0..n).filter(|&j| qsigs[j] == psigs[i]).count() };
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut chosen = vec![false; n];
    let mut bound = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&i| !chosen[i])
            .min_by_key(|&i| (usize::MAX - bound[i], cand_count(i), i))
            .unwrap();
        chosen[next] = true;
        order.push(next);
        for j in 0..n {
            if !chosen[j] && (p.leq(next, j) || p.leq(j, next)) {
                bound[j] += 1;
            }
        }
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        p: &Poset,
        q: &Poset,
        order: &[usize],
        depth: usize,
        psigs: &[(u32, usize, usize, usize, usize)],
        qsigs: &[(u32, usize, usize, usize, usize)],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let a = order[depth];
        for b in 0..q.size() {
            if used[b] || qsigs[b] != psigs[a] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&a2| {
                let b2 = mapping[a2];
                p.leq(a, a2) == q.leq(b, b2) && p.leq(a2, a) == q.leq(b2, b)
            });
            if consistent {
                mapping[a] = b;
                used[b] = true;
                if extend(p, q, order, depth + 1, psigs, qsigs, mapping, used) {
                    return true;
                }
                mapping[a] = usize::MAX;
                used[b] = false;
            }
        }
        false
    }
    extend(p, q, &order, 0, &psigs, &qsigs, &mut mapping, &mut used)
}

/// Check whether `mapping` (indices of p -> indices of q) is an order
/// isomorphism.
pub fn is_order_isomorphism(p: &Poset, q: &Poset, mapping: &[usize]) -> bool {
    if p.size() != q.size() || mapping.len() != p.size() {
        return false;
    }
    let mut seen = vec![false; q.size()];
    for &b in mapping {
        if b >= q.size() || seen[b] {
            return false;
        }
        seen[b] = true;
    }
    for a in 0..p.size() {
        for b in 0..p.size() {
            if p.leq(a, b) != q.leq(mapping[a], mapping[b]) {
                return false;
            }
        }
    }
    true
}

/// Check whether `mapping` is an order-reversing bijection with
/// order-reversing inverse (an antiisomorphism).
pub fn is_order_antiisomorphism(p: &Poset, q: &Poset, mapping: &[usize]) -> bool {
    if p.size() != q.size() || mapping.len() != p.size() {
        return false;
    }
    let mut seen = vec![false; q.size()];
    for &b in mapping {
        if b >= q.size() || seen[b] {
            return false;
        }
        seen[b] = true;
    }
    for a in 0..p.size() {
        for b in 0..p.size() {
            if p.leq(a, b) != q.leq(mapping[b], mapping[a]) {
                return false;
            }
        }
    }
    true
}


#[cfg(test)]
mod error_path_tests {
    use super::*;
    use crate::error::Error;
    use crate::label::Label;

    #[test]
    fn interval_rejects_incomparable_endpoints() {
        let b2 = crate::catalog::boolean_lattice(2);
        let x = b2.index_of(&Label::set_from_iter([1])).unwrap();
        let y = b2.index_of(&Label::set_from_iter([2])).unwrap();
        assert!(matches!(
            b2.interval(x, y, IntervalKind::Closed),
            Err(Error::NotComparable(_, _))
        ));
    }

    #[test]
    fn remove_bottom_requires_unique_minimum() {
        let p = Poset::build(vec![Label::Int(0), Label::Int(1)], &[]).unwrap();
        assert!(matches!(p.remove_bottom(), Err(Error::NoUniqueMinimum)));
    }

    #[test]
    fn ideal_index_out_of_range() {
        let b3 = crate::catalog::boolean_lattice(3);
        assert!(matches!(
            crate::rees::ideal_ij(&b3, 3),
            Err(Error::IndexOutOfRange(3, 3))
        ));
        assert!(crate::rees::r_i_poset(&b3, 4).is_err());
    }

    #[test]
    fn rees_product_requires_ranked_inputs() {
        // a non-graded poset: one long and one short maximal chain
        let labels: Vec<Label> = (0..4).map(Label::Int).collect();
        let covers = vec![
            (Label::Int(0), Label::Int(1)),
            (Label::Int(1), Label::Int(3)),
            (Label::Int(0), Label::Int(2)),
        ];
        let p = Poset::build(labels, &covers).unwrap();
        assert!(!p.is_ranked());
        assert!(matches!(
            crate::rees::rees_product(&p, &crate::catalog::chain(2)),
            Err(Error::UnrankedPoset)
        ));
    }
}
