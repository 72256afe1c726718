//! Apéry sets and Kunz coordinates.
//!
//! For n ∈ S the Apéry set Ap(S,n) holds, for each residue i mod n, the least
//! element w(i) of S congruent to i. With m = multiplicity, writing
//! w(i) = qᵢ·m + i gives the Kunz coordinates (q₁, …, q_{m−1}); they satisfy
//! qᵢ ≥ 1 and the superadditivity inequalities
//! qᵢ + qⱼ ≥ q_{(i+j) mod m} − ⌊(i+j)/m⌋, and those two families characterize
//! the vectors arising from numerical semigroups. Fixing the Frobenius number
//! F pins one coordinate and bounds the rest (the membership system); adding
//! the genus equation Σqᵢ = ⌈(F+1)/2⌉ and the mirror-pair equalities yields
//! the irreducibility system.

use std::fmt;

use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KunzError {
    /// Apéry sets are taken relative to a positive element of S.
    NotAnElement(i64),
    /// Kunz coordinates need multiplicity at least 2 (ℕ has none).
    MultiplicityTooSmall(i64),
    /// Coordinate vector length must be m − 1.
    WrongLength { expected: usize, got: usize },
    /// Every Kunz coordinate is at least 1.
    CoordinateTooSmall { index: usize, value: i64 },
    /// A superadditivity inequality fails, so no semigroup has this vector.
    NotSuperadditive { i: usize, j: usize },
    /// An Apéry set edge update was fed elements that cannot sit on an edge.
    InconsistentEdge(i64),
    /// The candidate Apéry set is malformed (size, residues, or zero).
    MalformedApery,
}

impl fmt::Display for KunzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KunzError::NotAnElement(n) => {
                write!(f, "{n} is not a positive element of the semigroup")
            }
            KunzError::MultiplicityTooSmall(m) => {
                write!(f, "Kunz coordinates need multiplicity >= 2, got {m}")
            }
            KunzError::WrongLength { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            KunzError::CoordinateTooSmall { index, value } => {
                write!(f, "coordinate {index} is {value}, but every coordinate is >= 1")
            }
            KunzError::NotSuperadditive { i, j } => {
                write!(f, "superadditivity fails at residues ({i}, {j})")
            }
            KunzError::InconsistentEdge(x) => {
                write!(f, "element {x} breaks the edge update (wrong presence/absence)")
            }
            KunzError::MalformedApery => write!(f, "not an Apéry set relative to m"),
        }
    }
}

impl std::error::Error for KunzError {}

impl From<SemigroupError> for KunzError {
    fn from(_: SemigroupError) -> Self {
        KunzError::MalformedApery
    }
}

/// Kunz coordinate vector (q₁, …, q_{m−1}) for multiplicity m. Construction
/// checks shape and qᵢ ≥ 1 only; superadditivity is a semantic property
/// checked where it matters (`semigroup_from_kunz` fails on it, the system
/// predicates report it), because candidate vectors are allowed to violate it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KunzVector {
    m: i64,
    coords: Vec<i64>,
}

impl KunzVector {
    pub fn new(m: i64, coords: Vec<i64>) -> Result<Self, KunzError> {
        if m < 2 {
            return Err(KunzError::MultiplicityTooSmall(m));
        }
        if coords.len() as i64 != m - 1 {
            return Err(KunzError::WrongLength { expected: (m - 1) as usize, got: coords.len() });
        }
        if let Some((index, &value)) = coords.iter().enumerate().find(|&(_, &q)| q < 1) {
            return Err(KunzError::CoordinateTooSmall { index: index + 1, value });
        }
        Ok(KunzVector { m, coords })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Coordinates q₁, …, q_{m−1}, index 0 holding q₁.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// q_i with the 1-based residue index used throughout.
    fn q(&self, i: i64) -> i64 {
        self.coords[(i - 1) as usize]
    }

    /// w(i) = qᵢ·m + i, the Apéry element at residue i.
    fn w(&self, i: i64) -> i64 {
        self.q(i) * self.m + i
    }
}

impl fmt::Display for KunzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Ap(S,n) for a positive n ∈ S, indexed by residue: slot i holds the least
/// element of S congruent to i mod n.
pub fn apery_by_residue(s: &NumericalSemigroup, n: i64) -> Result<Vec<i64>, KunzError> {
    if n < 1 || !s.contains(n) {
        return Err(KunzError::NotAnElement(n));
    }
    let mut w: Vec<Option<i64>> = vec![None; n as usize];
    for &x in s.small_elements() {
        let slot = &mut w[(x % n) as usize];
        if slot.is_none() {
            *slot = Some(x);
        }
    }
    let f = s.frobenius();
    Ok(w.into_iter()
        .enumerate()
        .map(|(i, slot)| {
            // Residues not reached below the conductor first appear right
            // after it; everything past F is a member.
            slot.unwrap_or_else(|| f + 1 + (i as i64 - (f + 1)).rem_euclid(n))
        })
        .collect())
}

/// Ap(S,n) as a sorted set. Always contains 0; its maximum is F + n.
pub fn apery_set(s: &NumericalSemigroup, n: i64) -> Result<Vec<i64>, KunzError> {
    let mut w = apery_by_residue(s, n)?;
    w.sort_unstable();
    Ok(w)
}

/// Kunz coordinates of S relative to its multiplicity.
pub fn kunz_vector(s: &NumericalSemigroup) -> Result<KunzVector, KunzError> {
    let m = s.multiplicity();
    if m < 2 {
        return Err(KunzError::MultiplicityTooSmall(m));
    }
    let w = apery_by_residue(s, m)?;
    let coords: Vec<i64> = (1..m).map(|i| (w[i as usize] - i) / m).collect();
    KunzVector::new(m, coords)
}

fn superadditivity_violation(v: &KunzVector) -> Option<(i64, i64)> {
    let m = v.m;
    for i in 1..m {
        for j in i..m {
            if (i + j) % m == 0 {
                continue;
            }
            let carry = (i + j) / m;
            if v.q(i) + v.q(j) < v.q((i + j) % m) - carry {
                return Some((i, j));
            }
        }
    }
    None
}

/// Rebuilds the semigroup with the given Kunz coordinates:
/// x ∈ S ⇔ x ≥ w(x mod m). Fails if superadditivity does not hold.
pub fn semigroup_from_kunz(v: &KunzVector) -> Result<NumericalSemigroup, KunzError> {
    if let Some((i, j)) = superadditivity_violation(v) {
        return Err(KunzError::NotSuperadditive { i: i as usize, j: j as usize });
    }
    let m = v.m;
    let f = (1..m).map(|i| v.w(i)).max().expect("m >= 2 has at least one residue") - m;
    let small: Vec<i64> = (0..=f + 1)
        .filter(|&x| {
            let r = x % m;
            r == 0 || x >= v.w(r)
        })
        .collect();
    Ok(NumericalSemigroup::from_small_elements(&small, f)
        .expect("superadditive Kunz vectors define additively closed sets"))
}

/// Genus from coordinates alone: every qᵢ counts the gaps at residue i.
pub fn genus_from_kunz(v: &KunzVector) -> i64 {
    v.coords.iter().sum()
}

/// Identifies which constraint of the two linear systems failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintViolation {
    /// No residue is congruent to F mod m, so F cannot be the Frobenius
    /// number of any semigroup with this multiplicity.
    NoPinnedCoordinate,
    /// The coordinate at F's residue must make w(i) = F + m exactly.
    Pin { i: usize },
    /// Every other Apéry element stays strictly below F + m.
    UpperBound { i: usize },
    /// qᵢ + qⱼ ≥ q_{(i+j) mod m} − ⌊(i+j)/m⌋ failed.
    Superadditivity { i: usize, j: usize },
    /// Σqᵢ must equal ⌈(F+1)/2⌉ for irreducibility.
    GenusSum { expected: i64, actual: i64 },
    /// A mirror pair i + j ≡ F (mod m) misses its forced equality.
    MirrorPair { i: usize, j: usize },
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintViolation::NoPinnedCoordinate => {
                write!(f, "no coordinate attains the pin (F is a multiple of m)")
            }
            ConstraintViolation::Pin { i } => write!(f, "pinned coordinate {i} is off target"),
            ConstraintViolation::UpperBound { i } => {
                write!(f, "coordinate {i} pushes its Apéry element to F+m or beyond")
            }
            ConstraintViolation::Superadditivity { i, j } => {
                write!(f, "superadditivity fails at residues ({i}, {j})")
            }
            ConstraintViolation::GenusSum { expected, actual } => {
                write!(f, "coordinates sum to {actual}, irreducibility needs {expected}")
            }
            ConstraintViolation::MirrorPair { i, j } => {
                write!(f, "mirror pair ({i}, {j}) misses its forced equality")
            }
        }
    }
}

/// Checks the membership system for Frobenius number `f`: pinned coordinate
/// at F's residue, strict upper bounds elsewhere, superadditivity over
/// 1 ≤ i ≤ j ≤ m−1 with i + j ≠ m, and integrality qᵢ ≥ 1 (already held by
/// construction). Short-circuits on the first violated constraint.
pub fn check_membership_system(v: &KunzVector, f: i64) -> Result<(), ConstraintViolation> {
    let m = v.m;
    let pin = f.rem_euclid(m);
    if pin == 0 {
        return Err(ConstraintViolation::NoPinnedCoordinate);
    }
    if v.q(pin) != (f - pin) / m + 1 {
        return Err(ConstraintViolation::Pin { i: pin as usize });
    }
    for i in 1..m {
        if i != pin && v.w(i) >= f + m {
            return Err(ConstraintViolation::UpperBound { i: i as usize });
        }
    }
    for i in 1..m {
        for j in i..m {
            if i + j == m {
                continue;
            }
            let carry = (i + j) / m;
            if v.q(i) + v.q(j) < v.q((i + j) % m) - carry {
                return Err(ConstraintViolation::Superadditivity {
                    i: i as usize,
                    j: j as usize,
                });
            }
        }
    }
    Ok(())
}

/// True iff `v` is the Kunz vector of a member of ℒ(m, f).
pub fn satisfies_membership_system(v: &KunzVector, f: i64) -> bool {
    check_membership_system(v, f).is_ok()
}

/// Checks the irreducibility system: the membership system plus the genus
/// equation Σqᵢ = ⌈(F+1)/2⌉ plus, for every pair i ≤ j with
/// i + j ≡ F (mod m), the mirror equality qᵢ + qⱼ + ⌊(i+j)/m⌋ = ⌊F/m⌋ + 1,
/// i.e. w(i) + w(j) = F + m. For even F the pair at i = j = (F/2) mod m is
/// exempt: the gap F/2 mirrors onto itself, and that coordinate instead pins
/// w(i) = F/2 + m, raising the right side to ⌊F/m⌋ + 2.
pub fn check_irreducible_system(v: &KunzVector, f: i64) -> Result<(), ConstraintViolation> {
    check_membership_system(v, f)?;
    let m = v.m;
    let half = (f + 2) / 2;
    let total = genus_from_kunz(v);
    if total != half {
        return Err(ConstraintViolation::GenusSum { expected: half, actual: total });
    }
    let base = f.div_euclid(m) + 1;
    let self_mirror = if f % 2 == 0 { (f / 2).rem_euclid(m) } else { -1 };
    for i in 1..m {
        for j in i..m {
            if (i + j) % m != f.rem_euclid(m) {
                continue;
            }
            let rhs = if i == j && i == self_mirror { base + 1 } else { base };
            if v.q(i) + v.q(j) + (i + j) / m != rhs {
                return Err(ConstraintViolation::MirrorPair { i: i as usize, j: j as usize });
            }
        }
    }
    Ok(())
}

/// True iff `v` is the Kunz vector of a member of 𝓘(m, f).
pub fn satisfies_irreducible_system(v: &KunzVector, f: i64) -> bool {
    check_irreducible_system(v, f).is_ok()
}

/// Walks one tree edge child → parent on Apéry sets: the parent's set is the
/// child's with {r, m+F−r} swapped out for {F−r, m+r}, where r is the
/// child's ratio. Inputs that cannot sit on an edge are rejected.
pub fn apery_update_along_edge(
    child_apery: &[i64],
    child_ratio: i64,
    m: i64,
    f: i64,
) -> Result<Vec<i64>, KunzError> {
    if m < 2 || child_apery.len() as i64 != m {
        return Err(KunzError::MalformedApery);
    }
    let mut seen = vec![false; m as usize];
    for &x in child_apery {
        if x < 0 {
            return Err(KunzError::MalformedApery);
        }
        let r = (x % m) as usize;
        if seen[r] {
            return Err(KunzError::MalformedApery);
        }
        seen[r] = true;
    }
    if !child_apery.contains(&0) {
        return Err(KunzError::MalformedApery);
    }
    let mut out: Vec<i64> = Vec::with_capacity(m as usize);
    let removed = [child_ratio, m + f - child_ratio];
    let inserted = [f - child_ratio, m + child_ratio];
    for &x in child_apery {
        if x == removed[0] || x == removed[1] {
            continue;
        }
        out.push(x);
    }
    if out.len() as i64 != m - 2 {
        let missing = *removed.iter().find(|x| !child_apery.contains(x)).unwrap();
        return Err(KunzError::InconsistentEdge(missing));
    }
    out.extend_from_slice(&inserted);
    out.sort_unstable();
    Ok(out)
}
