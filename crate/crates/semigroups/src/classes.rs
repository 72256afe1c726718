//! Enumeration of all numerical semigroups with fixed multiplicity m and
//! Frobenius number F, through equivalence classes hanging off the
//! irreducible ones.
//!
//! Two members of ℒ(m,F) are equivalent when they share
//! θ(S) = {s ∈ S : m < s < F/2}. For m ≥ 3 and F > 2m each class contains a
//! unique irreducible semigroup (its top) and a unique floor
//! Z = ⟨θ(S) ∪ {m}⟩ ∪ {F+1, →}, and the whole class is recovered from the
//! difference set D = S ∖ Z by closing the singleton tails
//! T({d}) = (d + Z) ∩ D under union: the class is {Z ∪ X : X ∈ A} where A
//! collects the distinct unions. Shallower cases (F < 2m, m = 2, F = m−1)
//! have closed forms and skip the machinery entirely.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::semigroup::{additive_closure_upto, NumericalSemigroup};
use crate::tree::{enumerate_irreducibles, TreeError};

/// Width of the subset masks used for tail unions.
const MASK_BITS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassError {
    /// Class machinery needs m ≥ 3 and F > 2m; shallower inputs have closed
    /// forms and must be dispatched there.
    HypothesesNotMet { m: i64, frobenius: i64 },
    /// The expansion seed must be irreducible.
    SeedNotIrreducible,
    /// The subset space (difference set or free interval) exceeds the cap.
    SubsetSpaceTooLarge { size: usize, limit: usize },
}

impl fmt::Display for ClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassError::HypothesesNotMet { m, frobenius } => write!(
                f,
                "class expansion requires multiplicity >= 3 and Frobenius > 2*multiplicity, got m={m}, F={frobenius}"
            ),
            ClassError::SeedNotIrreducible => {
                write!(f, "class expansion seed must be irreducible")
            }
            ClassError::SubsetSpaceTooLarge { size, limit } => write!(
                f,
                "subset space has {size} free elements, exceeding the limit of {limit}"
            ),
        }
    }
}

impl std::error::Error for ClassError {}

impl From<TreeError> for ClassError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::NoIrreducibles { m, frobenius } => {
                ClassError::HypothesesNotMet { m, frobenius }
            }
        }
    }
}

fn hypotheses(s: &NumericalSemigroup) -> Result<(i64, i64), ClassError> {
    let m = s.multiplicity();
    let f = s.frobenius();
    if m >= 3 && f > 2 * m && f % m != 0 {
        Ok((m, f))
    } else {
        Err(ClassError::HypothesesNotMet { m, frobenius: f })
    }
}

/// The class invariant θ(S): elements strictly between m and F/2.
pub fn theta(s: &NumericalSemigroup) -> Vec<i64> {
    let m = s.multiplicity();
    let f = s.frobenius();
    s.small_elements()
        .iter()
        .copied()
        .filter(|&x| x > m && 2 * x < f)
        .collect()
}

/// The class floor Z([S]) = ⟨θ(S) ∪ {m}⟩ ∪ {F+1, →}, the smallest member of
/// S's class. It is homogeneous: no minimal generator lies in [F/2, F].
pub fn class_floor(s: &NumericalSemigroup) -> Result<NumericalSemigroup, ClassError> {
    let (m, f) = hypotheses(s)?;
    let mut gens = vec![m];
    gens.extend(theta(s));
    let reach = additive_closure_upto(&gens, f);
    let mut small: Vec<i64> = (0..=f).filter(|&x| reach[x as usize]).collect();
    small.push(f + 1);
    let floor = NumericalSemigroup::from_small_elements(&small, f)
        .expect("a generated closure truncated at F is additively closed");
    debug_assert!(
        floor
            .minimal_generators()
            .iter()
            .all(|g| 2 * g < f || g > f),
        "class floor must be homogeneous"
    );
    Ok(floor)
}

/// One equivalence class, fully materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassExpansion {
    seed: NumericalSemigroup,
    floor: NumericalSemigroup,
    d_set: Vec<i64>,
    singleton_tails: BTreeMap<i64, Vec<i64>>,
    members: Vec<NumericalSemigroup>,
}

impl ClassExpansion {
    /// The irreducible member the expansion started from.
    pub fn seed(&self) -> &NumericalSemigroup {
        &self.seed
    }

    /// The smallest member Z([S]).
    pub fn floor(&self) -> &NumericalSemigroup {
        &self.floor
    }

    /// D(S) = S ∖ Z([S]), sorted. Always inside (F/2, F).
    pub fn d_set(&self) -> &[i64] {
        &self.d_set
    }

    /// d ↦ T({d}) = (d + Z) ∩ D for each d ∈ D.
    pub fn singleton_tails(&self) -> &BTreeMap<i64, Vec<i64>> {
        &self.singleton_tails
    }

    /// Every member of the class, sorted by small-element order.
    pub fn members(&self) -> &[NumericalSemigroup] {
        &self.members
    }

    /// The set X ∈ A with members[i] = Z ∪ X.
    pub fn added_elements(&self, i: usize) -> Vec<i64> {
        self.members[i]
            .small_elements()
            .iter()
            .copied()
            .filter(|x| !self.floor.contains(*x))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Distinct tail unions as masks over d_set indices: the family
/// A = {T(B) : B ⊆ D}. T distributes over unions, so A is the union-closure
/// of the singleton tails and is walked output-sensitively instead of over
/// all 2^|D| subsets.
fn distinct_tail_unions(tail_masks: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(0);
    let mut queue: Vec<u64> = vec![0];
    while let Some(x) = queue.pop() {
        for &t in tail_masks {
            let y = x | t;
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn member_from_mask(
    floor: &NumericalSemigroup,
    d_set: &[i64],
    mask: u64,
) -> NumericalSemigroup {
    let mut small: Vec<i64> = floor.small_elements().to_vec();
    for (i, &d) in d_set.iter().enumerate() {
        if mask & (1 << i) != 0 {
            let pos = small.binary_search(&d).expect_err("d_set is disjoint from the floor");
            small.insert(pos, d);
        }
    }
    NumericalSemigroup::from_small_elements(&small, floor.frobenius())
        .expect("floor plus a tail union is additively closed")
}

struct ClassParts {
    floor: NumericalSemigroup,
    d_set: Vec<i64>,
    tail_masks: Vec<u64>,
}

fn class_parts(seed: &NumericalSemigroup, limit: Option<usize>) -> Result<ClassParts, ClassError> {
    if !seed.is_irreducible() {
        return Err(ClassError::SeedNotIrreducible);
    }
    let floor = class_floor(seed)?;
    let d_set: Vec<i64> = seed
        .small_elements()
        .iter()
        .copied()
        .filter(|&x| !floor.contains(x))
        .collect();
    let cap = limit.unwrap_or(MASK_BITS).min(MASK_BITS);
    if d_set.len() > cap {
        return Err(ClassError::SubsetSpaceTooLarge { size: d_set.len(), limit: cap });
    }
    let tail_masks: Vec<u64> = d_set
        .iter()
        .map(|&d| {
            let mut mask = 0u64;
            for &z in floor.small_elements() {
                if let Ok(i) = d_set.binary_search(&(d + z)) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    Ok(ClassParts { floor, d_set, tail_masks })
}

/// Materializes the class of an irreducible seed, capping |D| at `limit`
/// (hard cap 63 either way, the mask width).
pub fn expand_class_bounded(
    seed: &NumericalSemigroup,
    limit: Option<usize>,
) -> Result<ClassExpansion, ClassError> {
    let parts = class_parts(seed, limit)?;
    let ClassParts { floor, d_set, tail_masks } = parts;
    let singleton_tails: BTreeMap<i64, Vec<i64>> = d_set
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let tail: Vec<i64> = d_set
                .iter()
                .enumerate()
                .filter(|&(j, _)| tail_masks[i] & (1 << j) != 0)
                .map(|(_, &x)| x)
                .collect();
            (d, tail)
        })
        .collect();
    let mut members: Vec<NumericalSemigroup> = distinct_tail_unions(&tail_masks)
        .into_iter()
        .map(|mask| member_from_mask(&floor, &d_set, mask))
        .collect();
    members.sort();
    Ok(ClassExpansion { seed: seed.clone(), floor, d_set, singleton_tails, members })
}

/// `expand_class_bounded` without a configured cap.
pub fn expand_class(seed: &NumericalSemigroup) -> Result<ClassExpansion, ClassError> {
    expand_class_bounded(seed, None)
}

/// Members of the seed's class with genus exactly `genus`. Each added set X
/// fills |X| gaps of the floor, so the filter keeps unions of size
/// genus(Z) − genus; out-of-range genus yields an empty set, not an error.
pub fn expand_class_with_genus(
    seed: &NumericalSemigroup,
    genus: i64,
) -> Result<Vec<NumericalSemigroup>, ClassError> {
    expand_class_with_genus_bounded(seed, genus, None)
}

pub fn expand_class_with_genus_bounded(
    seed: &NumericalSemigroup,
    genus: i64,
    limit: Option<usize>,
) -> Result<Vec<NumericalSemigroup>, ClassError> {
    let parts = class_parts(seed, limit)?;
    let ClassParts { floor, d_set, tail_masks } = parts;
    let want = floor.genus() - genus;
    if want < 0 || want > d_set.len() as i64 {
        return Ok(Vec::new());
    }
    let mut members: Vec<NumericalSemigroup> = distinct_tail_unions(&tail_masks)
        .into_iter()
        .filter(|mask| mask.count_ones() as i64 == want)
        .map(|mask| member_from_mask(&floor, &d_set, mask))
        .collect();
    members.sort();
    Ok(members)
}

/// Whether any numerical semigroup has multiplicity `m` and Frobenius
/// number `f`: exactly (1,−1) or m ≥ 2, F ≥ m−1, m ∤ F.
pub fn semigroup_exists(m: i64, f: i64) -> bool {
    (m == 1 && f == -1) || (m >= 2 && f >= m - 1 && f % m != 0)
}

/// All of ℒ(m,F), sorted by small-element order. Dispatch: closed forms for
/// the shallow shapes (ℕ, F = m−1, m = 2, m < F < 2m), class expansion over
/// the irreducible tree for m ≥ 3 and F > 2m. Nonexistent (m,F) yields an
/// empty vector.
pub fn enumerate_semigroups_bounded(
    m: i64,
    f: i64,
    limit: Option<usize>,
) -> Result<Vec<NumericalSemigroup>, ClassError> {
    if !semigroup_exists(m, f) {
        return Ok(Vec::new());
    }
    if m == 1 {
        return Ok(vec![NumericalSemigroup::natural_numbers()]);
    }
    if f == m - 1 {
        let s = NumericalSemigroup::from_small_elements(&[0, m], f)
            .expect("{0, m, ->} is a numerical semigroup");
        return Ok(vec![s]);
    }
    if m == 2 {
        // F is odd here, so <2, F+2> is the single member and F+1 is even.
        let small: Vec<i64> = (0..=f + 1).step_by(2).collect();
        let s = NumericalSemigroup::from_small_elements(&small, f)
            .expect("<2, F+2> is a numerical semigroup");
        return Ok(vec![s]);
    }
    if f < 2 * m {
        // Depth two: {0, m} ∪ A ∪ {F+1, ->} for every A ⊆ {m+1, …, F−1};
        // all pairwise sums already exceed F.
        let free: Vec<i64> = (m + 1..f).collect();
        let cap = limit.unwrap_or(MASK_BITS).min(MASK_BITS);
        if free.len() > cap {
            return Err(ClassError::SubsetSpaceTooLarge { size: free.len(), limit: cap });
        }
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1 << free.len()) {
            let mut small = vec![0, m];
            for (i, &x) in free.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    small.push(x);
                }
            }
            small.push(f + 1);
            let s = NumericalSemigroup::from_small_elements(&small, f)
                .expect("depth-two members are additively closed");
            out.push(s);
        }
        out.sort();
        return Ok(out);
    }
    let tree = enumerate_irreducibles(m, f)?;
    let expansions: Result<Vec<Vec<NumericalSemigroup>>, ClassError> = tree
        .nodes()
        .par_iter()
        .map(|seed| expand_class_bounded(seed, limit).map(|e| e.members.clone()))
        .collect();
    let mut out: Vec<NumericalSemigroup> = expansions?.into_iter().flatten().collect();
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "classes partition the family");
    Ok(out)
}

/// `enumerate_semigroups_bounded` without a configured cap.
pub fn enumerate_semigroups(m: i64, f: i64) -> Result<Vec<NumericalSemigroup>, ClassError> {
    enumerate_semigroups_bounded(m, f, None)
}

/// Admissible Frobenius numbers for multiplicity m and genus g, for
/// 2 ≤ m ≤ g: the window [⌈mg/(m−1)⌉ − 1, 2g − 1] minus multiples of m.
pub fn genus_range(m: i64, g: i64) -> Vec<i64> {
    if m < 2 || m > g {
        return Vec::new();
    }
    let lo = (m * g + m - 2) / (m - 1) - 1;
    (lo..=2 * g - 1).filter(|f| f % m != 0).collect()
}

/// All numerical semigroups with multiplicity m and genus g, optionally
/// pinned to one Frobenius number. Deep cases run the genus-filtered class
/// expansion; shallow cases filter their closed forms.
pub fn enumerate_by_genus_bounded(
    m: i64,
    g: i64,
    f: Option<i64>,
    limit: Option<usize>,
) -> Result<Vec<NumericalSemigroup>, ClassError> {
    if m == 1 {
        let wanted = g == 0 && matches!(f, None | Some(-1));
        return Ok(if wanted { vec![NumericalSemigroup::natural_numbers()] } else { Vec::new() });
    }
    if m < 1 || g < 1 || m > g + 1 {
        return Ok(Vec::new());
    }
    if m == g + 1 {
        // Only {0, m, ->} has genus m − 1; its Frobenius number is g.
        if matches!(f, Some(other) if other != g) {
            return Ok(Vec::new());
        }
        let s = NumericalSemigroup::from_small_elements(&[0, m], g)
            .expect("{0, m, ->} is a numerical semigroup");
        return Ok(vec![s]);
    }
    let window = genus_range(m, g);
    let candidates: Vec<i64> = match f {
        Some(f) => window.into_iter().filter(|&x| x == f).collect(),
        None => window,
    };
    let mut out = Vec::new();
    for f in candidates {
        if m >= 3 && f > 2 * m {
            let tree = enumerate_irreducibles(m, f)?;
            let expansions: Result<Vec<Vec<NumericalSemigroup>>, ClassError> = tree
                .nodes()
                .par_iter()
                .map(|seed| expand_class_with_genus_bounded(seed, g, limit))
                .collect();
            out.extend(expansions?.into_iter().flatten());
        } else {
            out.extend(
                enumerate_semigroups_bounded(m, f, limit)?
                    .into_iter()
                    .filter(|s| s.genus() == g),
            );
        }
    }
    out.sort();
    Ok(out)
}

/// `enumerate_by_genus_bounded` without a configured cap.
pub fn enumerate_by_genus(
    m: i64,
    g: i64,
    f: Option<i64>,
) -> Result<Vec<NumericalSemigroup>, ClassError> {
    enumerate_by_genus_bounded(m, g, f, None)
}

/// The unique irreducible semigroup containing S with the same Frobenius
/// number: S plus every gap x > F/2 whose mirror F − x is also a gap.
pub fn irreducible_closure(s: &NumericalSemigroup) -> NumericalSemigroup {
    let f = s.frobenius();
    if f < 1 {
        return s.clone();
    }
    let mut small: Vec<i64> = s.small_elements().to_vec();
    for x in (f / 2 + 1)..f {
        if !s.contains(x) && !s.contains(f - x) {
            let pos = small.binary_search(&x).expect_err("x is a gap");
            small.insert(pos, x);
        }
    }
    NumericalSemigroup::from_small_elements(&small, f)
        .expect("filling mirrored gap pairs preserves additive closure")
}
