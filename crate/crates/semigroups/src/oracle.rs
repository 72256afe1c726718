//! Exhaustive ground-truth enumeration by gap-set scan, for cross-checking
//! the pipeline at small Frobenius numbers.
//!
//! Every numerical semigroup with Frobenius number F is determined by its gap
//! set G ∪ {F} with G ⊆ {1, …, F−1}, so the oracle walks all 2^(F−1) bitmasks
//! and keeps the complements that are additively closed. It deliberately
//! shares no logic with the enumeration pipeline: membership, closure,
//! multiplicity, genus and irreducibility are all recomputed from the raw
//! mask, and irreducibility uses the mirrored-gap criterion (no gap x ≠ F/2
//! with F − x also a gap) rather than the genus count.

use std::fmt;

use rayon::prelude::*;

use crate::semigroup::NumericalSemigroup;

/// Masks get one bit per candidate gap in {1, …, F−1}; past this width the
/// scan is out of reach regardless.
const HARD_CAP: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The oracle scans gap sets for F ≥ 1 only.
    InvalidFrobenius(i64),
    /// 2^(F−1) masks would exceed the configured budget.
    FrobeniusOverCap { frobenius: i64, cap: i64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::InvalidFrobenius(fr) => {
                write!(f, "oracle needs a Frobenius number >= 1, got {fr}")
            }
            OracleError::FrobeniusOverCap { frobenius, cap } => {
                write!(f, "Frobenius number {frobenius} exceeds the oracle cap {cap}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Scan budget and optional filters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    max_frobenius: i64,
    with_multiplicity: Option<i64>,
    with_genus: Option<i64>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_frobenius: 20, with_multiplicity: None, with_genus: None }
    }
}

impl OracleConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Raises or lowers the scan budget; the hard cap is 24.
    pub fn max_frobenius(mut self, f: i64) -> Self {
        assert!(
            (1..=HARD_CAP).contains(&f),
            "oracle budget must be between 1 and {HARD_CAP}"
        );
        self.max_frobenius = f;
        self
    }

    /// Keep only results with this multiplicity.
    pub fn with_multiplicity(mut self, m: i64) -> Self {
        self.with_multiplicity = Some(m);
        self
    }

    /// Keep only results with this genus.
    pub fn with_genus(mut self, g: i64) -> Self {
        self.with_genus = Some(g);
        self
    }
}

/// Gap set of one candidate: mask bit i covers the value i+1, and F itself is
/// always a gap.
#[derive(Clone, Copy)]
struct GapSet {
    mask: u32,
    frobenius: i64,
}

impl GapSet {
    fn is_gap(&self, x: i64) -> bool {
        if x == self.frobenius {
            return true;
        }
        x >= 1 && x < self.frobenius && self.mask & (1 << (x - 1)) != 0
    }

    /// Complement closed under addition? Pairwise sums of positive members up
    /// to F suffice: anything past F is a member by definition.
    fn complement_is_closed(&self) -> bool {
        let members: Vec<i64> = (1..self.frobenius).filter(|&x| !self.is_gap(x)).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                let s = a + b;
                if s > self.frobenius {
                    break;
                }
                if self.is_gap(s) {
                    return false;
                }
            }
        }
        true
    }

    fn multiplicity(&self) -> i64 {
        (1..=self.frobenius + 1).find(|&x| !self.is_gap(x)).unwrap()
    }

    fn genus(&self) -> i64 {
        self.mask.count_ones() as i64 + 1
    }

    /// Mirrored-gap emptiness: irreducible iff no gap x with F − x also a gap
    /// and x ≠ F/2.
    fn is_irreducible(&self) -> bool {
        (1..self.frobenius)
            .all(|x| !(self.is_gap(x) && self.is_gap(self.frobenius - x) && 2 * x != self.frobenius))
    }

    fn to_semigroup(&self) -> NumericalSemigroup {
        let small: Vec<i64> = (0..=self.frobenius + 1).filter(|&x| !self.is_gap(x)).collect();
        NumericalSemigroup::from_small_elements(&small, self.frobenius)
            .expect("oracle already verified additive closure")
    }
}

fn scan(
    f: i64,
    config: &OracleConfig,
    extra: impl Fn(&GapSet) -> bool + Sync,
) -> Result<Vec<NumericalSemigroup>, OracleError> {
    if f < 1 {
        return Err(OracleError::InvalidFrobenius(f));
    }
    let cap = config.max_frobenius.min(HARD_CAP);
    if f > cap {
        return Err(OracleError::FrobeniusOverCap { frobenius: f, cap });
    }
    let mut out: Vec<NumericalSemigroup> = (0u32..1 << (f - 1))
        .into_par_iter()
        .filter_map(|mask| {
            let g = GapSet { mask, frobenius: f };
            if !g.complement_is_closed() {
                return None;
            }
            if let Some(m) = config.with_multiplicity {
                if g.multiplicity() != m {
                    return None;
                }
            }
            if let Some(genus) = config.with_genus {
                if g.genus() != genus {
                    return None;
                }
            }
            if !extra(&g) {
                return None;
            }
            Some(g.to_semigroup())
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every numerical semigroup with Frobenius number `f` passing the filters,
/// sorted by small-element order.
pub fn brute_force_semigroups(
    f: i64,
    config: &OracleConfig,
) -> Result<Vec<NumericalSemigroup>, OracleError> {
    scan(f, config, |_| true)
}

/// The irreducible subset of `brute_force_semigroups`, filtered by the
/// mirrored-gap criterion.
pub fn brute_force_irreducibles(
    f: i64,
    config: &OracleConfig,
) -> Result<Vec<NumericalSemigroup>, OracleError> {
    scan(f, config, GapSet::is_irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::GeneratorSet;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&GeneratorSet::new(gens).unwrap())
    }

    #[test]
    fn tiny_frobenius_numbers() {
        let cfg = OracleConfig::new();
        assert_eq!(brute_force_semigroups(1, &cfg).unwrap(), vec![sg(&[2, 3])]);
        assert_eq!(brute_force_semigroups(2, &cfg).unwrap(), vec![sg(&[3, 4, 5])]);
    }

    #[test]
    fn frobenius_four_has_two_members() {
        let cfg = OracleConfig::new();
        let all = brute_force_semigroups(4, &cfg).unwrap();
        let gap_sets: Vec<Vec<i64>> = all.iter().map(|s| s.gaps()).collect();
        assert_eq!(gap_sets, vec![vec![1, 2, 4], vec![1, 2, 3, 4]]);
        // No member has multiplicity 4: it would force 4 | F.
        let m4 = brute_force_semigroups(4, &OracleConfig::new().with_multiplicity(4)).unwrap();
        assert!(m4.is_empty());
        let m3 = brute_force_semigroups(4, &OracleConfig::new().with_multiplicity(3)).unwrap();
        assert_eq!(m3, vec![sg(&[3, 5, 7])]);
    }

    #[test]
    fn multiplicity_filter_matches_paper_scale_example() {
        let cfg = OracleConfig::new().with_multiplicity(5);
        assert_eq!(brute_force_semigroups(13, &cfg).unwrap().len(), 14);
        assert_eq!(brute_force_irreducibles(13, &cfg).unwrap().len(), 2);
    }

    #[test]
    fn genus_filter() {
        let cfg = OracleConfig::new().with_genus(7);
        let got = brute_force_semigroups(13, &cfg).unwrap();
        assert!(got.iter().all(|s| s.genus() == 7));
        assert!(got.contains(&sg(&[5, 7, 9, 11])));
    }

    #[test]
    fn irreducibles_are_irreducible_both_ways() {
        let cfg = OracleConfig::new();
        for f in 1..=10 {
            let irr = brute_force_irreducibles(f, &cfg).unwrap();
            let all = brute_force_semigroups(f, &cfg).unwrap();
            // The mirrored-gap criterion must agree with the genus criterion.
            let by_genus: Vec<_> = all.into_iter().filter(|s| s.is_irreducible()).collect();
            assert_eq!(irr, by_genus, "criteria disagree at F={f}");
        }
    }

    #[test]
    fn partitions_by_multiplicity() {
        let all = brute_force_semigroups(9, &OracleConfig::new()).unwrap();
        let mut total = 0;
        for m in 1..=10 {
            total += brute_force_semigroups(9, &OracleConfig::new().with_multiplicity(m))
                .unwrap()
                .len();
        }
        assert_eq!(total, all.len());
    }

    #[test]
    fn refuses_out_of_budget_queries() {
        let cfg = OracleConfig::new();
        assert_eq!(brute_force_semigroups(0, &cfg), Err(OracleError::InvalidFrobenius(0)));
        assert_eq!(
            brute_force_semigroups(21, &cfg),
            Err(OracleError::FrobeniusOverCap { frobenius: 21, cap: 20 })
        );
        let raised = OracleConfig::new().max_frobenius(22);
        assert!(matches!(
            brute_force_semigroups(23, &raised),
            Err(OracleError::FrobeniusOverCap { frobenius: 23, cap: 22 })
        ));
    }

    #[test]
    #[should_panic(expected = "oracle budget")]
    fn budget_cannot_exceed_hard_cap() {
        let _ = OracleConfig::new().max_frobenius(25);
    }
}
