//! Core numerical semigroup type and its canonical finite representation.
//!
//! A numerical semigroup `S` is a subset of the natural numbers containing 0,
//! closed under addition, whose complement ℕ∖S (the *gaps*) is finite. It is
//! stored as the pair
//!
//! * `frobenius`: the largest gap F(S), with −1 encoding S = ℕ, and
//! * `small_elements`: every element of S in `[0, F+1]`, strictly increasing.
//!
//! Membership is then `x ∈ S ⇔ x > F or x ∈ small_elements`. The list always
//! starts with 0 and ends with F+1 (the conductor), and never contains F, so
//! the pair determines S and equality is structural.

use std::fmt;

/// Validation and query failures for the core type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    /// Generator list was empty.
    EmptyGenerators,
    /// A generator was zero or negative.
    NonPositiveGenerator(i64),
    /// Generators have gcd > 1, so the complement is infinite.
    NotCoprime(i64),
    /// Small-element list does not start with 0.
    MissingZero,
    /// The stated Frobenius number appears in the element list.
    FrobeniusPresent(i64),
    /// Small-element list does not end with the conductor F+1.
    MissingConductor(i64),
    /// Small-element list is not strictly increasing.
    NotStrictlyIncreasing,
    /// An element lies outside `[0, F+1]`.
    ElementOutOfRange(i64),
    /// `a + b` lands on a gap ≤ F, so the set is not additively closed.
    ClosureViolation { a: i64, b: i64 },
    /// The stated Frobenius number is not −1 and not ≥ 1.
    InvalidFrobenius(i64),
    /// The ratio is undefined (S = ℕ has no non-multiple of its multiplicity).
    UndefinedRatio,
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::EmptyGenerators => write!(f, "generator list is empty"),
            SemigroupError::NonPositiveGenerator(g) => {
                write!(f, "generator {g} is not a positive integer")
            }
            SemigroupError::NotCoprime(d) => {
                write!(f, "generators share the common divisor {d}, complement is infinite")
            }
            SemigroupError::MissingZero => write!(f, "small elements must start with 0"),
            SemigroupError::FrobeniusPresent(fr) => {
                write!(f, "Frobenius number {fr} cannot be an element")
            }
            SemigroupError::MissingConductor(c) => {
                write!(f, "small elements must end with the conductor {c}")
            }
            SemigroupError::NotStrictlyIncreasing => {
                write!(f, "small elements must be strictly increasing")
            }
            SemigroupError::ElementOutOfRange(x) => {
                write!(f, "element {x} lies outside [0, F+1]")
            }
            SemigroupError::ClosureViolation { a, b } => {
                write!(f, "{a} + {b} = {} is a gap, set is not additively closed", a + b)
            }
            SemigroupError::InvalidFrobenius(fr) => {
                write!(f, "{fr} is not a valid Frobenius number (must be -1 or >= 1)")
            }
            SemigroupError::UndefinedRatio => {
                write!(f, "ratio is undefined for the full set of natural numbers")
            }
        }
    }
}

impl std::error::Error for SemigroupError {}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A finite set of positive generators with gcd 1, kept sorted and distinct.
///
/// The gcd-1 condition is exactly what makes ⟨generators⟩ a numerical
/// semigroup (finite complement), so it is validated at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    generators: Vec<i64>,
}

impl GeneratorSet {
    pub fn new(generators: impl Into<Vec<i64>>) -> Result<Self, SemigroupError> {
        let mut generators = generators.into();
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g < 1) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        generators.sort_unstable();
        generators.dedup();
        let d = generators.iter().copied().fold(0, gcd);
        if d != 1 {
            return Err(SemigroupError::NotCoprime(d));
        }
        Ok(GeneratorSet { generators })
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.generators.iter().copied()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Marks every value in `[0, limit]` reachable as a sum of the generators.
pub(crate) fn additive_closure_upto(generators: &[i64], limit: i64) -> Vec<bool> {
    let n = limit.max(0) as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for x in 1..=n {
        for &g in generators {
            let g = g as usize;
            if g > x {
                break;
            }
            if reach[x - g] {
                reach[x] = true;
                break;
            }
        }
    }
    reach
}

/// A numerical semigroup in canonical form. See the module docs for the
/// representation invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    frobenius: i64,
    small_elements: Vec<i64>,
}

impl NumericalSemigroup {
    /// The full set ℕ, encoded with Frobenius number −1.
    pub fn natural_numbers() -> Self {
        NumericalSemigroup { frobenius: -1, small_elements: vec![0] }
    }

    /// Builds ⟨generators⟩ by sieving sums up to `m·max(generators)`, which is
    /// past every gap, then locating the largest unreachable value.
    pub fn from_generators(generators: &GeneratorSet) -> Self {
        let gens = generators.as_slice();
        if gens[0] == 1 {
            return Self::natural_numbers();
        }
        let limit = gens[0] * gens[gens.len() - 1];
        let reach = additive_closure_upto(gens, limit);
        let frobenius = (1..=limit).rev().find(|&x| !reach[x as usize]).unwrap_or(-1);
        debug_assert!(frobenius >= 1);
        let small_elements = (0..=frobenius + 1).filter(|&x| reach[x as usize]).collect();
        NumericalSemigroup { frobenius, small_elements }
    }

    /// Validates a candidate canonical representation and wraps it.
    pub fn from_small_elements(
        small_elements: &[i64],
        frobenius: i64,
    ) -> Result<Self, SemigroupError> {
        if frobenius == -1 {
            return if small_elements == [0] {
                Ok(Self::natural_numbers())
            } else {
                Err(SemigroupError::MissingConductor(0))
            };
        }
        if frobenius < 1 {
            return Err(SemigroupError::InvalidFrobenius(frobenius));
        }
        if small_elements.first() != Some(&0) {
            return Err(SemigroupError::MissingZero);
        }
        if small_elements.last() != Some(&(frobenius + 1)) {
            return Err(SemigroupError::MissingConductor(frobenius + 1));
        }
        if !small_elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(SemigroupError::NotStrictlyIncreasing);
        }
        if let Some(&bad) = small_elements.iter().find(|&&x| x < 0 || x > frobenius + 1) {
            return Err(SemigroupError::ElementOutOfRange(bad));
        }
        if small_elements.binary_search(&frobenius).is_ok() {
            return Err(SemigroupError::FrobeniusPresent(frobenius));
        }
        // Closure only needs pairwise sums of positive small elements: any sum
        // involving a value > F exceeds F and is a member automatically.
        for (i, &a) in small_elements.iter().enumerate().skip(1) {
            for &b in &small_elements[i..] {
                let s = a + b;
                if s > frobenius {
                    break;
                }
                if small_elements.binary_search(&s).is_err() {
                    return Err(SemigroupError::ClosureViolation { a, b });
                }
            }
        }
        Ok(NumericalSemigroup { frobenius, small_elements: small_elements.to_vec() })
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        x > self.frobenius || self.small_elements.binary_search(&x).is_ok()
    }

    /// Largest gap; −1 encodes ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn small_elements(&self) -> &[i64] {
        &self.small_elements
    }

    /// Least positive element.
    pub fn multiplicity(&self) -> i64 {
        if self.frobenius == -1 {
            1
        } else {
            self.small_elements[1]
        }
    }

    /// Number of gaps. Equals F + 2 − |small_elements| because the small
    /// elements cover [0, F+1] minus the gaps.
    pub fn genus(&self) -> i64 {
        self.frobenius + 2 - self.small_elements.len() as i64
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius).filter(|&x| !self.contains(x)).collect()
    }

    /// Elements of S that are not sums of two positive elements of S. Every
    /// minimal generator is at most F + m, so the candidate pool is the
    /// positive small elements together with (F+1, F+m].
    pub fn minimal_generators(&self) -> GeneratorSet {
        if self.frobenius == -1 {
            return GeneratorSet::new(vec![1]).unwrap();
        }
        let m = self.multiplicity();
        let positives = self.small_elements[1..].iter().copied();
        let tail = self.frobenius + 2..=self.frobenius + m;
        let mut gens = Vec::new();
        for x in positives.chain(tail) {
            let mut decomposable = false;
            for &y in &self.small_elements[1..] {
                if 2 * y > x {
                    break;
                }
                if self.contains(x - y) {
                    decomposable = true;
                    break;
                }
            }
            if !decomposable {
                gens.push(x);
            }
        }
        GeneratorSet::new(gens).expect("minimal generators of a numerical semigroup have gcd 1")
    }

    /// Least element of S that is not a multiple of the multiplicity; this is
    /// the second minimal generator. Undefined for ℕ.
    pub fn ratio(&self) -> Result<i64, SemigroupError> {
        if self.frobenius == -1 {
            return Err(SemigroupError::UndefinedRatio);
        }
        let m = self.multiplicity();
        for &x in &self.small_elements[1..] {
            if x % m != 0 {
                return Ok(x);
            }
        }
        // All small elements are multiples of m, including F+1, so F+2 is the
        // first non-multiple member.
        Ok(self.frobenius + 2)
    }

    /// ⌈(F+1)/m⌉, the number of multiplicity-length blocks needed to pass F.
    pub fn depth(&self) -> i64 {
        let m = self.multiplicity();
        (self.frobenius + m) / m
    }

    /// Irreducibility via the genus criterion: g(S) = ⌈(F+1)/2⌉, the least
    /// genus possible for the Frobenius number F.
    pub fn is_irreducible(&self) -> bool {
        self.genus() == (self.frobenius + 2) / 2
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_irreducible() && self.frobenius % 2 != 0
    }

    pub fn is_pseudo_symmetric(&self) -> bool {
        self.is_irreducible() && self.frobenius % 2 == 0
    }
}

/// Orders by small-element list, lexicographically. The conductor F+1 closes
/// every list, so the list alone already determines the semigroup.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.small_elements
            .cmp(&other.small_elements)
            .then(self.frobenius.cmp(&other.frobenius))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
