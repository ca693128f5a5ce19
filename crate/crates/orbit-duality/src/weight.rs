//! Weight multisets attached to partitions, and their congruence-class
//! decompositions.
//!
//! To a partition `p` and a cover degree `n` one attaches the multiset
//!
//! ```text
//! λ_A(p, n) = ⋃_i { (p_i - 1)/2n, (p_i - 3)/2n, …, (1 - p_i)/2n },
//! ```
//!
//! each part contributing an arithmetic progression of step `1/n`
//! symmetric about zero.  For the other classical types only the
//! non-negative half is kept: `λ_X(p, n)` (for `X ∈ {B, C, D}`) is the
//! unique non-negative multiset `λ` with
//!
//! ```text
//! λ ⊔ (-λ) ⊔ {0} = λ_A(p, n*)   (X = B),
//! λ ⊔ (-λ)        = λ_A(p, n*)   (X = C, D),
//! ```
//!
//! where `n* = n / gcd(n, 2)`.  Solvability is a parity condition on the
//! number of zero entries, equivalently on the number of odd parts of
//! `p`; the constructor reconstructs the symmetric multiset from the
//! candidate half and rejects on mismatch.
//!
//! A symmetric multiset decomposes by congruence class modulo 1: the
//! integral class, the half-integral class, and the remaining classes,
//! which come in mirror pairs negated into each other.  Each class yields
//! a partition — the transpose of its Robinson–Schensted shape, with one
//! extra part `1` adjoined to the integral class when that class has an
//! even number of entries (possibly zero).  These class partitions are
//! the raw material for the weight-multiset route to the duality maps.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::partition::{Partition, TypeLetter};
use crate::rs::rs_shape_closed_form;

/// Errors from weight-multiset construction and decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    /// Entries of a degree-`n` weight multiset live in `(1/2n)ℤ`.
    #[error("denominator of {value} does not divide 2n = {bound}")]
    DenominatorBound { value: Rational64, bound: u32 },
    /// The defining equation for the non-negative half has no solution.
    #[error(
        "parity mismatch making the defining equation unsolvable: \
         lambda_A({p}, {n_star}) has {zeros} zero entries, \
         {parity} for type {letter}"
    )]
    UnsolvableParity {
        p: Partition,
        n_star: u32,
        zeros: u32,
        letter: TypeLetter,
        parity: &'static str,
    },
    /// Non-negative halves exist only for the symmetric types.
    #[error("the non-negative half is defined only for types B, C, D, not {letter}")]
    HalfUndefinedForType { letter: TypeLetter },
    /// A congruence class whose mirror class is not its negation.
    #[error(
        "weight multiset is not symmetric under negation: \
         the class of {value} does not mirror the class of {mirror}"
    )]
    AsymmetricClasses {
        value: Rational64,
        mirror: Rational64,
    },
}

/// A finite multiset of rationals, kept sorted non-increasingly.
///
/// Stored as runs of `(value, multiplicity)` with strictly decreasing
/// values, so equality is multiset equality.  The text form lists the
/// entries with repetition: `{1/2, 0, 0, -1/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    runs: Vec<(Rational64, u32)>,
}

impl WeightMultiset {
    /// The empty multiset.
    pub fn empty() -> Self {
        WeightMultiset { runs: Vec::new() }
    }

    /// Builds a degree-`n` weight multiset, checking that every entry
    /// lies in `(1/2n)ℤ`.
    ///
    /// # Panics
    /// Panics if `n == 0`.
    pub fn new(entries: Vec<Rational64>, n: u32) -> Result<Self, WeightError> {
        assert!(n >= 1, "cover degree must be positive");
        let bound = Rational64::from_integer(2 * i64::from(n));
        for &value in &entries {
            if !(value * bound).is_integer() {
                return Err(WeightError::DenominatorBound {
                    value,
                    bound: 2 * n,
                });
            }
        }
        Ok(Self::from_values(entries))
    }

    /// Builds a multiset from arbitrary rational entries, with no
    /// denominator constraint.  Used for congruence classes and symmetric
    /// doublings, which carry no cover degree of their own.
    pub fn from_values(entries: impl IntoIterator<Item = Rational64>) -> Self {
        let mut entries: Vec<Rational64> = entries.into_iter().collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let mut runs: Vec<(Rational64, u32)> = Vec::new();
        for value in entries {
            match runs.last_mut() {
                Some((prev, mult)) if *prev == value => *mult += 1,
                _ => runs.push((value, 1)),
            }
        }
        WeightMultiset { runs }
    }

    /// The `(value, multiplicity)` runs, values strictly decreasing.
    pub fn runs(&self) -> &[(Rational64, u32)] {
        &self.runs
    }

    /// The entries with repetition, non-increasing.
    pub fn entries_expanded(&self) -> Vec<Rational64> {
        self.runs
            .iter()
            .flat_map(|&(value, mult)| std::iter::repeat_n(value, mult as usize))
            .collect()
    }

    /// Total number of entries, counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.runs.iter().map(|&(_, mult)| mult).sum()
    }

    /// Whether the multiset is empty.
    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Multiplicity of `value`.
    pub fn multiplicity(&self, value: Rational64) -> u32 {
        self.runs
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, mult)| mult)
    }

    /// The multiset `{-v : v ∈ self}`.
    pub fn negated(&self) -> WeightMultiset {
        let runs = self
            .runs
            .iter()
            .rev()
            .map(|&(value, mult)| (-value, mult))
            .collect();
        WeightMultiset { runs }
    }

    /// Multiset union.
    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut entries = self.entries_expanded();
        entries.extend(other.entries_expanded());
        Self::from_values(entries)
    }

    /// The symmetric doubling `self ⊔ (-self)`, with an extra `0`
    /// adjoined when `add_zero` is set.
    pub fn symmetric_double(&self, add_zero: bool) -> WeightMultiset {
        let mut entries = self.entries_expanded();
        entries.extend(self.negated().entries_expanded());
        if add_zero {
            entries.push(Rational64::zero());
        }
        Self::from_values(entries)
    }

    /// Whether every entry is `>= 0`.
    pub fn is_non_negative(&self) -> bool {
        self.runs
            .last()
            .is_none_or(|&(value, _)| !value.is_negative())
    }

    /// The partition of multiplicities: the Robinson–Schensted shape of
    /// the entries read as a non-increasing sequence.
    pub fn shape(&self) -> Partition {
        let (shape, _) = rs_shape_closed_form(&self.runs)
            .expect("runs are strictly decreasing with positive multiplicities");
        shape
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for &(value, mult) in &self.runs {
            for _ in 0..mult {
                if !first {
                    f.write_str(", ")?;
                }
                write!(f, "{value}")?;
                first = false;
            }
        }
        f.write_str("}")
    }
}

/// Selects one congruence class of a [`ClassDecomposition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassIndex {
    /// The integral class.
    Zero,
    /// The half-integral class.
    Half,
    /// A mirror-paired class, indexed `1..=l`.
    Pair(usize),
}

/// A weight multiset split into congruence classes modulo 1.
///
/// The integral and half-integral classes are self-mirrored; the
/// remaining classes come in pairs, with `paired_classes[l + 1 - i]`
/// equal to the negation of `paired_classes[i]` (1-indexed) and the
/// class containing the larger maximum placed in the first half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecomposition {
    zero_class: WeightMultiset,
    half_class: WeightMultiset,
    paired_classes: Vec<WeightMultiset>,
}

impl ClassDecomposition {
    /// Entries congruent to `0` modulo 1.
    pub fn zero_class(&self) -> &WeightMultiset {
        &self.zero_class
    }

    /// Entries congruent to `1/2` modulo 1.
    pub fn half_class(&self) -> &WeightMultiset {
        &self.half_class
    }

    /// The mirror-paired classes; the length is always even.
    pub fn paired_classes(&self) -> &[WeightMultiset] {
        &self.paired_classes
    }

    /// The class selected by `index`.
    ///
    /// # Panics
    /// Panics if a [`ClassIndex::Pair`] index is outside `1..=l`.
    pub fn class(&self, index: ClassIndex) -> &WeightMultiset {
        match index {
            ClassIndex::Zero => &self.zero_class,
            ClassIndex::Half => &self.half_class,
            ClassIndex::Pair(i) => {
                assert!(
                    (1..=self.paired_classes.len()).contains(&i),
                    "pair index {i} outside 1..={}",
                    self.paired_classes.len()
                );
                &self.paired_classes[i - 1]
            }
        }
    }

    /// Indices of all classes present, in canonical order: zero, half,
    /// then the pairs.
    pub fn indices(&self) -> Vec<ClassIndex> {
        let mut out = vec![ClassIndex::Zero, ClassIndex::Half];
        out.extend((1..=self.paired_classes.len()).map(ClassIndex::Pair));
        out
    }
}

/// The weight multiset `λ_A(p, n)`: each part `p_i` contributes the
/// progression `(p_i - 1)/2n, (p_i - 3)/2n, …, (1 - p_i)/2n`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn lambda_a(p: &Partition, n: u32) -> WeightMultiset {
    assert!(n >= 1, "cover degree must be positive");
    let two_n = Rational64::from_integer(2 * i64::from(n));
    let mut entries = Vec::with_capacity(p.size() as usize);
    for &part in p.parts() {
        let part = i64::from(part);
        for k in 0..part {
            entries.push(Rational64::from_integer(part - 1 - 2 * k) / two_n);
        }
    }
    WeightMultiset::from_values(entries)
}

/// The non-negative half `λ_X(p, n)` for `X ∈ {B, C, D}`: the unique
/// non-negative multiset whose symmetric doubling (with one extra zero
/// for `X = B`) reconstructs `λ_A(p, n*)`.
///
/// Fails when the zero-entry parity of `λ_A(p, n*)` makes the defining
/// equation unsolvable.
///
/// # Panics
/// Panics if `n == 0`.
pub fn lambda_x(p: &Partition, n: u32, letter: TypeLetter) -> Result<WeightMultiset, WeightError> {
    if letter == TypeLetter::A {
        return Err(WeightError::HalfUndefinedForType { letter });
    }
    let n_star = crate::n_star(n);
    let full = lambda_a(p, n_star);
    let zeros = full.multiplicity(Rational64::zero());
    let needs_odd_zeros = letter == TypeLetter::B;
    let candidate_zeros = if needs_odd_zeros {
        if zeros.is_multiple_of(2) {
            return Err(WeightError::UnsolvableParity {
                p: p.clone(),
                n_star,
                zeros,
                letter,
                parity: "an even count where an odd count is required",
            });
        }
        (zeros - 1) / 2
    } else {
        if zeros % 2 == 1 {
            return Err(WeightError::UnsolvableParity {
                p: p.clone(),
                n_star,
                zeros,
                letter,
                parity: "an odd count where an even count is required",
            });
        }
        zeros / 2
    };

    let mut entries: Vec<Rational64> = Vec::new();
    for &(value, mult) in full.runs() {
        if value.is_positive() {
            entries.extend(std::iter::repeat_n(value, mult as usize));
        }
    }
    entries.extend(std::iter::repeat_n(
        Rational64::zero(),
        candidate_zeros as usize,
    ));
    let candidate = WeightMultiset::from_values(entries);

    // Reconstruct the symmetric multiset from the candidate half and
    // compare; reject on mismatch.
    if candidate.symmetric_double(needs_odd_zeros) != full {
        return Err(WeightError::UnsolvableParity {
            p: p.clone(),
            n_star,
            zeros,
            letter,
            parity: "a half that fails to reconstruct the symmetric multiset",
        });
    }
    Ok(candidate)
}

/// Splits a multiset into congruence classes modulo 1.
///
/// The integral and half-integral classes are kept whole; every other
/// class must be negated onto a matching mirror class, and the pairs are
/// ordered canonically (larger maximum first, pairs sorted by descending
/// maximum, mirrors in reversed order at the back).
pub fn decompose(lam: &WeightMultiset) -> Result<ClassDecomposition, WeightError> {
    let fractional = |v: Rational64| v - v.floor();
    let half = Rational64::new(1, 2);

    // Group runs by fractional part, preserving decreasing value order.
    let mut classes: Vec<(Rational64, Vec<(Rational64, u32)>)> = Vec::new();
    for &(value, mult) in lam.runs() {
        let frac = fractional(value);
        match classes.iter_mut().find(|(f, _)| *f == frac) {
            Some((_, runs)) => runs.push((value, mult)),
            None => classes.push((frac, vec![(value, mult)])),
        }
    }

    let mut zero_class = WeightMultiset::empty();
    let mut half_class = WeightMultiset::empty();
    let mut unpaired: Vec<(Rational64, WeightMultiset)> = Vec::new();
    for (frac, runs) in classes {
        let class = WeightMultiset { runs };
        if frac.is_zero() {
            zero_class = class;
        } else if frac == half {
            half_class = class;
        } else {
            unpaired.push((frac, class));
        }
    }

    // Match each remaining class with the class of the opposite
    // fractional part, which must be exactly its negation.
    let mut representatives: Vec<WeightMultiset> = Vec::new();
    while let Some((frac, class)) = unpaired.pop() {
        let mirror_frac = Rational64::from_integer(1) - frac;
        let mirror_pos = unpaired.iter().position(|(f, _)| *f == mirror_frac);
        let mirror = match mirror_pos {
            Some(pos) => unpaired.swap_remove(pos).1,
            None => {
                return Err(WeightError::AsymmetricClasses {
                    value: class.runs()[0].0,
                    mirror: mirror_frac,
                })
            }
        };
        if class.negated() != mirror {
            return Err(WeightError::AsymmetricClasses {
                value: class.runs()[0].0,
                mirror: mirror.runs()[0].0,
            });
        }
        // The representative is the class with the larger maximum; the
        // maxima differ because the two classes lie in different
        // congruence classes.
        let class_max = class.runs()[0].0;
        let mirror_max = mirror.runs()[0].0;
        representatives.push(if class_max > mirror_max {
            class
        } else {
            mirror
        });
    }
    representatives.sort_by(|a, b| b.runs()[0].0.cmp(&a.runs()[0].0));

    let mut paired_classes = representatives.clone();
    paired_classes.extend(representatives.iter().rev().map(WeightMultiset::negated));

    Ok(ClassDecomposition {
        zero_class,
        half_class,
        paired_classes,
    })
}

/// The partition attached to one congruence class: the transpose of the
/// class's Robinson–Schensted shape, with an extra part `1` adjoined for
/// the integral class when that class has an even number of entries
/// (in particular when it is empty).
pub fn class_partition(dec: &ClassDecomposition, index: ClassIndex) -> Partition {
    let class = dec.class(index);
    let transposed = class.shape().transpose();
    if index == ClassIndex::Zero && class.count().is_multiple_of(2) {
        transposed.disjoint_union(&Partition::new(vec![1]).expect("[1] is a partition"))
    } else {
        transposed
    }
}

/// Decides whether `lam` is of the form `λ_A(p, n)` for some partition
/// `p`, returning that `p`.
///
/// The parts of `p` contribute one arithmetic progression of step `1/n`
/// each, so the entries of `λ_A(p, n)` split into at most two
/// congruence classes modulo `1/n`: an integral class from the odd
/// parts and a half-shifted class from the even parts. The structural
/// conditions therefore hold per class, not globally: all entries lie
/// in `(1/2n)ℤ`; within each class, values and multiplicities are
/// symmetric under negation and consecutive values step down by exactly
/// `1/n` with multiplicities weakly increasing toward the center. The
/// candidate is assembled from the per-class shape transposes and
/// confirmed by rebuilding the multiset, so a returned partition always
/// satisfies `lambda_a(&p, n) == *lam` exactly.
pub fn recognize_lambda_a(lam: &WeightMultiset, n: u32) -> Option<Partition> {
    assert!(n >= 1, "cover degree must be positive");
    let two_n = Rational64::from_integer(2 * i64::from(n));
    if !lam
        .runs()
        .iter()
        .all(|&(value, _)| (value * two_n).is_integer())
    {
        return None;
    }

    let n_rat = Rational64::from_integer(i64::from(n));
    let (integral, shifted): (Vec<_>, Vec<_>) = lam
        .runs()
        .iter()
        .copied()
        .partition(|&(value, _)| (value * n_rat).is_integer());

    let candidate = class_transpose(&integral, n)?.disjoint_union(&class_transpose(&shifted, n)?);
    (lambda_a(&candidate, n) == *lam).then_some(candidate)
}

/// The shape transpose of one congruence class of runs (sorted by
/// strictly decreasing value), provided the class is a centered
/// progression of step `1/n` with multiplicities weakly increasing
/// toward the middle; `None` otherwise.
fn class_transpose(runs: &[(Rational64, u32)], n: u32) -> Option<Partition> {
    let s = runs.len();
    let step = Rational64::new(1, i64::from(n));
    for i in 0..s {
        let (value, mult) = runs[i];
        let (mirror_value, mirror_mult) = runs[s - 1 - i];
        if value != -mirror_value || mult != mirror_mult {
            return None;
        }
    }
    for i in 0..s / 2 {
        if runs[i].0 - runs[i + 1].0 != step || runs[i].1 > runs[i + 1].1 {
            return None;
        }
    }
    let shape = Partition::from_unsorted(runs.iter().map(|&(_, mult)| mult));
    Some(shape.transpose())
}
