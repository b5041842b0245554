//! Exact cover of the right cosets of `H` by blocks of elements (conjugacy classes, or
//! orbits under conjugation by a subgroup), with the block `{1}` forced.
//!
//! Blocks meeting some coset twice can never lie in a transversal and are dropped up
//! front, as are blocks meeting `H` itself (already covered by 1). The remaining cosets
//! split into connected components (two cosets are linked when a block meets both);
//! components are solved independently and their solutions combined, which turns the
//! abelian case (all blocks singletons) into a plain product.

use crate::group::ops::right_coset_ids;
use crate::group::set::ElementSet;
use crate::group::table::{Elem, GroupTable};

/// Default cap on search nodes per enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug)]
struct Block {
    elements: Vec<Elem>,
    cosets: Vec<usize>,
}

/// Node accounting shared by all components of one search.
#[derive(Clone, Debug)]
pub(crate) struct Budget {
    pub max_nodes: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(max_nodes: u64) -> Self {
        Budget { max_nodes, used: 0 }
    }

    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.max_nodes
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.max_nodes
    }
}

/// An exact-cover instance over the cosets `1..k` of `H` (coset 0 is `H`).
#[derive(Clone, Debug)]
pub(crate) struct CoverInstance {
    num_cosets: usize,
    blocks: Vec<Block>,
}

/// One independent piece of the instance.
struct Component {
    cosets: Vec<usize>,
    /// `candidates[c]`: the blocks meeting coset `c`, in selection order.
    candidates: Vec<Vec<usize>>,
}

impl CoverInstance {
    /// Blocks are the given partition of `G` (it must contain `{1}` as a block).
    pub fn new(g: &GroupTable, h: &ElementSet, partition: &[ElementSet]) -> Self {
        let ids = right_coset_ids(g, h);
        let num_cosets = g.order() / h.len();
        let mut blocks = Vec::new();
        for part in partition {
            if part.contains(0) {
                continue;
            }
            let mut cosets: Vec<usize> = part.iter().map(|x| ids[x]).collect();
            cosets.sort_unstable();
            let n = cosets.len();
            cosets.dedup();
            if cosets.len() < n || cosets[0] == 0 {
                continue;
            }
            blocks.push(Block { elements: part.members().to_vec(), cosets });
        }
        // selection order: cosets touched, then size, then smallest element
        blocks.sort_by(|a, b| {
            (a.cosets.len(), a.elements.len(), a.elements[0]).cmp(&(b.cosets.len(), b.elements.len(), b.elements[0]))
        });
        CoverInstance { num_cosets, blocks }
    }

    fn components(&self) -> Vec<Component> {
        // union-find over cosets 1..k
        let mut parent: Vec<usize> = (0..self.num_cosets).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for b in &self.blocks {
            let r = find(&mut parent, b.cosets[0]);
            for &c in &b.cosets[1..] {
                let s = find(&mut parent, c);
                parent[s] = r;
            }
        }
        let mut comp_of_root = vec![usize::MAX; self.num_cosets];
        let mut comps: Vec<Component> = Vec::new();
        for c in 1..self.num_cosets {
            let r = find(&mut parent, c);
            if comp_of_root[r] == usize::MAX {
                comp_of_root[r] = comps.len();
                comps.push(Component { cosets: Vec::new(), candidates: vec![Vec::new(); self.num_cosets] });
            }
            comps[comp_of_root[r]].cosets.push(c);
        }
        for (i, b) in self.blocks.iter().enumerate() {
            let k = comp_of_root[find(&mut parent, b.cosets[0])];
            for &c in &b.cosets {
                comps[k].candidates[c].push(i);
            }
        }
        comps
    }

    /// All exact covers of one component, as lists of block indices (up to `limit`,
    /// 0 meaning all).
    fn solve(&self, comp: &Component, limit: usize, budget: &mut Budget) -> Vec<Vec<usize>> {
        let mut covered = vec![false; self.num_cosets];
        let mut chosen = Vec::new();
        let mut out = Vec::new();
        self.dfs(comp, &mut covered, &mut chosen, &mut out, limit, budget);
        out
    }

    fn fits(&self, b: usize, covered: &[bool]) -> bool {
        self.blocks[b].cosets.iter().all(|&c| !covered[c])
    }

    fn dfs(
        &self,
        comp: &Component,
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
        budget: &mut Budget,
    ) {
        if !budget.tick() || (limit > 0 && out.len() >= limit) {
            return;
        }
        // the uncovered coset with fewest fitting candidates
        let mut best: Option<(usize, usize)> = None;
        for &c in &comp.cosets {
            if covered[c] {
                continue;
            }
            let n = comp.candidates[c].iter().filter(|&&b| self.fits(b, covered)).count();
            if best.map_or(true, |(_, m)| n < m) {
                best = Some((c, n));
                if n == 0 {
                    return;
                }
            }
        }
        let Some((c, _)) = best else {
            out.push(chosen.clone());
            return;
        };
        for &b in &comp.candidates[c] {
            if !self.fits(b, covered) {
                continue;
            }
            for &d in &self.blocks[b].cosets {
                covered[d] = true;
            }
            chosen.push(b);
            self.dfs(comp, covered, chosen, out, limit, budget);
            chosen.pop();
            for &d in &self.blocks[b].cosets {
                covered[d] = false;
            }
            if budget.exhausted() || (limit > 0 && out.len() >= limit) {
                return;
            }
        }
    }

    /// Enumerates covers, each returned as the sorted element list including 1.
    /// `accept` filters complete solutions; `limit` caps accepted solutions (0 = all).
    pub fn enumerate(&self, limit: usize, budget: &mut Budget, accept: &dyn Fn(&[Elem]) -> bool, filtered: bool) -> Vec<Vec<Elem>> {
        let comps = self.components();
        // a filter can reject combinations, so each component must then be solved fully
        let per_component = if filtered { 0 } else { limit };
        let mut sols: Vec<Vec<Vec<usize>>> = Vec::with_capacity(comps.len());
        for comp in &comps {
            let s = self.solve(comp, per_component, budget);
            if s.is_empty() {
                return Vec::new();
            }
            sols.push(s);
        }
        // odometer over the components' solutions
        let mut out = Vec::new();
        let mut idx = vec![0usize; sols.len()];
        loop {
            let mut t: Vec<Elem> = vec![0];
            for (k, &i) in idx.iter().enumerate() {
                for &b in &sols[k][i] {
                    t.extend_from_slice(&self.blocks[b].elements);
                }
            }
            t.sort_unstable();
            if accept(&t) {
                out.push(t);
                if limit > 0 && out.len() >= limit {
                    break;
                }
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < sols[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
            if !budget.tick() {
                break;
            }
        }
        out.sort();
        out
    }

    /// The number of covers, multiplying component counts. `None` on overflow.
    pub fn count(&self, budget: &mut Budget) -> Option<u128> {
        let mut total: u128 = 1;
        for comp in &self.components() {
            let n = self.count_component(comp, budget);
            total = total.checked_mul(n)?;
            if n == 0 {
                return Some(0);
            }
        }
        Some(total)
    }

    fn count_component(&self, comp: &Component, budget: &mut Budget) -> u128 {
        // every candidate of a lone coset covers exactly that coset
        if comp.cosets.len() == 1 {
            budget.tick();
            return comp.candidates[comp.cosets[0]].len() as u128;
        }
        let mut covered = vec![false; self.num_cosets];
        self.count_dfs(comp, &mut covered, budget)
    }

    fn count_dfs(&self, comp: &Component, covered: &mut [bool], budget: &mut Budget) -> u128 {
        if !budget.tick() {
            return 0;
        }
        let mut best: Option<(usize, usize)> = None;
        for &c in &comp.cosets {
            if covered[c] {
                continue;
            }
            let n = comp.candidates[c].iter().filter(|&&b| self.fits(b, covered)).count();
            if best.map_or(true, |(_, m)| n < m) {
                best = Some((c, n));
            }
        }
        let Some((c, n)) = best else {
            return 1;
        };
        if n == 0 {
            return 0;
        }
        let mut total = 0u128;
        for &b in &comp.candidates[c] {
            if !self.fits(b, covered) {
                continue;
            }
            for &d in &self.blocks[b].cosets {
                covered[d] = true;
            }
            total += self.count_dfs(comp, covered, budget);
            for &d in &self.blocks[b].cosets {
                covered[d] = false;
            }
            if budget.exhausted() {
                break;
            }
        }
        total
    }
}
