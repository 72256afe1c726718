//! The tree of irreducible numerical semigroups with fixed multiplicity m and
//! Frobenius number F.
//!
//! A numerical semigroup is *irreducible* when it cannot be written as the
//! intersection of two strictly larger numerical semigroups; equivalently its
//! genus attains the minimum ⌈(F+1)/2⌉. The set 𝓘(m,F) of irreducible
//! semigroups with multiplicity m and Frobenius number F carries a tree
//! structure rooted at the unique member whose ratio exceeds F/2: every other
//! node reaches its parent by trading its ratio r for F − r, and the ratio
//! strictly increases toward the root.

use std::fmt;

use rayon::prelude::*;

use crate::semigroup::{GeneratorSet, NumericalSemigroup};

/// Enumeration failures for the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// No irreducible semigroup has this multiplicity and Frobenius number.
    NoIrreducibles { m: i64, frobenius: i64 },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::NoIrreducibles { m, frobenius } => write!(
                f,
                "no irreducible numerical semigroup has multiplicity {m} and Frobenius number {frobenius}"
            ),
        }
    }
}

impl std::error::Error for TreeError {}

/// Whether any irreducible semigroup has multiplicity `m` and Frobenius
/// number `f`: exactly when 2m ≤ F + 2 and m does not divide F. Meaningful
/// for F ≥ 3 (below that the bound is vacuous and this returns false).
pub fn irreducible_exists(m: i64, f: i64) -> bool {
    m >= 1 && f >= 3 && 2 * m <= f + 2 && f % m != 0
}

/// The root of the tree: the unique irreducible member whose ratio exceeds
/// F/2. Built from its known generator pattern around (F+1)/2 (odd F) or
/// (F+2)/2 (even F), with m = 3 handled by its own closed form.
pub fn root(m: i64, f: i64) -> Result<NumericalSemigroup, TreeError> {
    if !irreducible_exists(m, f) {
        return Err(TreeError::NoIrreducibles { m, frobenius: f });
    }
    let gens = if f % 2 == 0 && m == 3 {
        vec![3, f / 2 + 3, f + 3]
    } else {
        let base = if f % 2 == 1 { (f + 1) / 2 } else { (f + 2) / 2 };
        let mut r = base % m;
        if r == 0 {
            r = m;
        }
        // Offsets m−r and r−1 (odd F) or r−2 (even F) are the two residues
        // already reachable from m and the pinned block, so they are skipped.
        let skip_a = m - r;
        let skip_b = if f % 2 == 1 { r - 1 } else { r - 2 };
        let mut gens = vec![m];
        for x in 0..m {
            if x != skip_a && x != skip_b {
                gens.push(base + x);
            }
        }
        // F+m keeps the sieve honest when the block alone overshoots F.
        gens.push(f + m);
        gens
    };
    let gens = GeneratorSet::new(gens).expect("root generators contain m and m+1 block, gcd 1");
    let s = NumericalSemigroup::from_generators(&gens);
    debug_assert_eq!(s.frobenius(), f);
    debug_assert_eq!(s.multiplicity(), m);
    debug_assert!(s.is_irreducible());
    Ok(s)
}

/// Minimal generators x of `s` that yield a child when swapped for F − x:
/// x must exceed F/2, stay below F, avoid 2x−F ∈ S, avoid the two fixed
/// points 3x = 2F and 4x = 3F, and satisfy m < F − x < ratio(s).
pub fn alpha(s: &NumericalSemigroup) -> Vec<i64> {
    let f = s.frobenius();
    if f < 1 {
        return Vec::new();
    }
    let m = s.multiplicity();
    let r = s.ratio().expect("ratio defined for every semigroup with F >= 1");
    s.minimal_generators()
        .iter()
        .filter(|&x| {
            2 * x > f
                && x < f
                && !s.contains(2 * x - f)
                && 3 * x != 2 * f
                && 4 * x != 3 * f
                && m < f - x
                && f - x < r
        })
        .collect()
}

/// Swaps one element of the canonical list for its mirror F − x. The result
/// is validated; for x ∈ alpha(s) it is again irreducible with the same m, F.
fn swap_element(s: &NumericalSemigroup, x: i64, into: i64) -> NumericalSemigroup {
    let mut small: Vec<i64> = s.small_elements().to_vec();
    let pos = small.binary_search(&x).expect("swapped-out element is a small element");
    small.remove(pos);
    let pos = small.binary_search(&into).expect_err("swapped-in element is a gap");
    small.insert(pos, into);
    NumericalSemigroup::from_small_elements(&small, s.frobenius())
        .expect("mirror swap preserves additive closure")
}

/// All children of `s` in the tree, sorted by small-element order.
pub fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let f = s.frobenius();
    let mut out: Vec<NumericalSemigroup> =
        alpha(s).into_iter().map(|x| swap_element(s, x, f - x)).collect();
    out.sort();
    out
}

/// The parent of `s`, reached by trading the ratio r for F − r. The root
/// (2r > F) has no parent.
pub fn parent(s: &NumericalSemigroup) -> Option<NumericalSemigroup> {
    if s.frobenius() < 1 {
        return None;
    }
    let r = s.ratio().expect("ratio defined for every semigroup with F >= 1");
    if 2 * r > s.frobenius() {
        return None;
    }
    Some(swap_element(s, r, s.frobenius() - r))
}

/// Nodes of `s`'s tree from `s` up to the root, endpoints included.
pub fn path_to_root(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let mut path = vec![s.clone()];
    while let Some(p) = parent(path.last().unwrap()) {
        path.push(p);
    }
    path
}

/// The tree 𝓘(m,F) in breadth-first order. Each frontier is sorted by
/// small-element order, so node indices are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleTree {
    m: i64,
    frobenius: i64,
    nodes: Vec<NumericalSemigroup>,
    parents: Vec<Option<usize>>,
}

impl IrreducibleTree {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn root(&self) -> &NumericalSemigroup {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[NumericalSemigroup] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the parent of node `i`; `None` exactly for the root.
    pub fn parent_index(&self, i: usize) -> Option<usize> {
        self.parents[i]
    }

    /// (parent index, child index) pairs, children in node order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parents
            .iter()
            .enumerate()
            .filter_map(|(child, parent)| parent.map(|p| (p, child)))
    }
}

/// Enumerates 𝓘(m,F) by breadth-first expansion from the root.
pub fn enumerate_irreducibles(m: i64, f: i64) -> Result<IrreducibleTree, TreeError> {
    let root = root(m, f)?;
    let mut nodes = vec![root];
    let mut parents: Vec<Option<usize>> = vec![None];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut batch: Vec<(NumericalSemigroup, usize)> = frontier
            .par_iter()
            .flat_map_iter(|&idx| {
                children(&nodes[idx]).into_iter().map(move |c| (c, idx))
            })
            .collect();
        // Distinct parents never produce the same child, so this order is a
        // total one and independent of the worker count.
        batch.sort();
        frontier = (nodes.len()..nodes.len() + batch.len()).collect();
        for (child, parent_idx) in batch {
            nodes.push(child);
            parents.push(Some(parent_idx));
        }
    }
    Ok(IrreducibleTree { m, frobenius: f, nodes, parents })
}
