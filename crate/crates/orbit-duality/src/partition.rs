//! Exact integer-partition arithmetic.
//!
//! A partition is a weakly decreasing sequence of positive integers; the
//! empty partition is allowed.  Partitions classify nilpotent orbits of
//! classical groups once a parity condition on multiplicities is imposed:
//!
//! * type **B** (odd orthogonal): `|p|` odd and every even part occurs an
//!   even number of times;
//! * type **C** (symplectic): `|p|` even and every odd part occurs an even
//!   number of times;
//! * type **D** (even orthogonal): `|p|` even and every even part occurs
//!   an even number of times;
//! * type **A** imposes nothing.
//!
//! The central operation is the *collapse* `p_X`: the unique largest
//! type-`X` partition dominated by `p`.  It is computed greedily — find
//! the largest part value whose multiplicity has the wrong parity, shave a
//! box off its last occurrence, and re-attach the box at the earliest
//! later position that keeps the sequence weakly decreasing — and the test
//! suite checks the greedy result against a brute-force maximum over all
//! dominated type-`X` partitions.
//!
//! The remaining operations are the transpose `p*`, componentwise sum
//! `p + q` (zero-padded), disjoint union `p ⊔ q` (merge and resort),
//! first-part increment `p^+`, last-part decrement `p^-`, and the
//! dominance order on partitions of equal size.  Transpose exchanges the
//! two additions: `(p ⊔ q)* = p* + q*`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The four classical families, used to select a parity condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
}

impl TypeLetter {
    /// All four letters, in the conventional order.
    pub const ALL: [TypeLetter; 4] = [TypeLetter::A, TypeLetter::B, TypeLetter::C, TypeLetter::D];
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLetter {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(TypeLetter::A),
            "B" | "b" => Ok(TypeLetter::B),
            "C" | "c" => Ok(TypeLetter::C),
            "D" | "d" => Ok(TypeLetter::D),
            other => Err(PartitionError::Parse {
                text: other.to_owned(),
                reason: "expected one of A, B, C, D".to_owned(),
            }),
        }
    }
}

/// Numeral attached to a very even partition to distinguish the two
/// orbits of the even orthogonal group sharing that partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VeryEvenLabel {
    I,
    II,
}

impl VeryEvenLabel {
    /// The other numeral.
    pub fn swapped(self) -> Self {
        match self {
            VeryEvenLabel::I => VeryEvenLabel::II,
            VeryEvenLabel::II => VeryEvenLabel::I,
        }
    }
}

impl fmt::Display for VeryEvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VeryEvenLabel::I => "I",
            VeryEvenLabel::II => "II",
        })
    }
}

impl FromStr for VeryEvenLabel {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(VeryEvenLabel::I),
            "II" => Ok(VeryEvenLabel::II),
            other => Err(PartitionError::Parse {
                text: other.to_owned(),
                reason: "expected I or II".to_owned(),
            }),
        }
    }
}

/// Errors from partition construction and the partial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    /// `p^+` and `p^-` need at least one part to act on.
    #[error("undefined on empty partition")]
    EmptyPartition,
    /// Collapse targets require `|p|` odd for B and even for C and D.
    #[error("size parity incompatible with type {letter}: |p| = {size}")]
    SizeParity { letter: TypeLetter, size: u32 },
    /// Dominance compares only partitions of equal size.
    #[error("dominance is undefined between sizes {0} and {1}")]
    SizeMismatch(u32, u32),
    /// Parts must be weakly decreasing and positive.
    #[error("parts must be weakly decreasing and positive: {reason}")]
    InvalidParts { reason: String },
    /// Text that does not denote a partition.
    #[error("cannot parse {text:?} as a partition: {reason}")]
    Parse { text: String, reason: String },
}

/// A weakly decreasing sequence of positive integers.
///
/// Stored canonically: no zero parts.  Equality is structural, so two
/// values compare equal exactly when they are the same partition.
///
/// The text form is a bracketed comma-separated list, `"[3, 3, 1]"`, with
/// `"[]"` for the empty partition; [`fmt::Display`] and [`FromStr`] round-trip.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts that must already be weakly
    /// decreasing; trailing zeros are stripped.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::InvalidParts {
                reason: format!("{} precedes {}", w[0], w[1]),
            });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary entries by sorting decreasingly
    /// and discarding zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `l(p)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Size `|p|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicity of `value` among the parts.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&x| x == value).count() as u32
    }

    /// Transpose (conjugate) partition: `p*_j = #{i : p_i >= j}`.
    ///
    /// An involution; exchanges componentwise sum and disjoint union.
    pub fn transpose(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Componentwise sum, padding the shorter partition with zeros.
    pub fn part_sum(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (0..len)
            .map(|i| {
                self.parts.get(i).copied().unwrap_or(0) + other.parts.get(i).copied().unwrap_or(0)
            })
            .collect();
        // The componentwise sum of weakly decreasing sequences is weakly
        // decreasing, so no resort is needed.
        Partition { parts }
    }

    /// Disjoint union: merge the parts of both partitions and resort.
    pub fn disjoint_union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// `p^+`: add one box to the first part.
    pub fn plus_one(&self) -> Result<Partition, PartitionError> {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => {
                *first += 1;
                Ok(Partition { parts })
            }
            None => Err(PartitionError::EmptyPartition),
        }
    }

    /// `p^-`: remove one box from the last part, dropping it if it
    /// becomes zero.
    pub fn minus_one(&self) -> Result<Partition, PartitionError> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            Some(last) => {
                *last -= 1;
                if *last == 0 {
                    parts.pop();
                }
                Ok(Partition { parts })
            }
            None => Err(PartitionError::EmptyPartition),
        }
    }

    /// `p^{+-}`: increment the first part, then decrement the last.
    ///
    /// Defined whenever the partition is nonempty.
    pub fn plus_minus(&self) -> Result<Partition, PartitionError> {
        self.plus_one()?.minus_one()
    }

    /// Whether `p` satisfies the type-`letter` parity condition.
    ///
    /// The empty partition has types A, C, and D but not B (its size is
    /// even, not odd).
    pub fn is_type(&self, letter: TypeLetter) -> bool {
        match letter {
            TypeLetter::A => true,
            TypeLetter::B => self.size() % 2 == 1 && self.even_parts_have_even_multiplicity(),
            TypeLetter::C => {
                self.size().is_multiple_of(2) && self.odd_parts_have_even_multiplicity()
            }
            TypeLetter::D => {
                self.size().is_multiple_of(2) && self.even_parts_have_even_multiplicity()
            }
        }
    }

    fn even_parts_have_even_multiplicity(&self) -> bool {
        self.runs()
            .all(|(value, mult)| value % 2 == 1 || mult % 2 == 0)
    }

    fn odd_parts_have_even_multiplicity(&self) -> bool {
        self.runs()
            .all(|(value, mult)| value % 2 == 0 || mult % 2 == 0)
    }

    /// Whether `p` is very even: type D with every part even.  Such a
    /// partition corresponds to two orbits, distinguished by a
    /// [`VeryEvenLabel`].
    pub fn is_very_even(&self) -> bool {
        self.is_type(TypeLetter::D) && self.parts.iter().all(|&x| x % 2 == 0)
    }

    /// Iterates over `(value, multiplicity)` runs in decreasing value order.
    pub fn runs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        RunIter {
            parts: &self.parts,
            pos: 0,
        }
    }

    /// The collapse `p_X`: the largest type-`letter` partition dominated
    /// by `p`.
    ///
    /// Requires `|p|` to have the parity the target type demands (odd for
    /// B, even for C and D); type A returns the partition unchanged.  The
    /// collapse is idempotent, monotone for dominance, and the identity on
    /// partitions already of the target type.
    pub fn collapse(&self, letter: TypeLetter) -> Result<Partition, PartitionError> {
        match letter {
            TypeLetter::A => return Ok(self.clone()),
            TypeLetter::B => {
                if self.size().is_multiple_of(2) {
                    return Err(PartitionError::SizeParity {
                        letter,
                        size: self.size(),
                    });
                }
            }
            TypeLetter::C | TypeLetter::D => {
                if self.size() % 2 == 1 {
                    return Err(PartitionError::SizeParity {
                        letter,
                        size: self.size(),
                    });
                }
            }
        }
        let mut parts = self.parts.clone();
        while let Some(value) = largest_violating_value(&parts, letter) {
            // Shave a box off the last occurrence of the offending value…
            let i = parts
                .iter()
                .rposition(|&x| x == value)
                .expect("value came from the current parts");
            parts[i] -= 1;
            debug_assert!(parts[i] >= 1, "collapse never empties a part");
            // …and re-attach it at the earliest later position that keeps
            // the sequence weakly decreasing, appending a new part 1 if
            // every later position is full.
            let mut j = i + 1;
            while j < parts.len() && parts[j] + 1 > parts[j - 1] {
                j += 1;
            }
            if j == parts.len() {
                parts.push(1);
            } else {
                parts[j] += 1;
            }
        }
        Ok(Partition { parts })
    }

    /// Dominance order: `self ≤ other` iff every prefix sum of `self` is
    /// at most the corresponding prefix sum of `other`.
    ///
    /// Only defined between partitions of equal size.
    pub fn dominance_le(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::SizeMismatch(self.size(), other.size()));
        }
        let mut sum_self = 0u32;
        let mut sum_other = 0u32;
        for i in 0..self.parts.len().max(other.parts.len()) {
            sum_self += self.parts.get(i).copied().unwrap_or(0);
            sum_other += other.parts.get(i).copied().unwrap_or(0);
            if sum_self > sum_other {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Largest part value whose multiplicity violates the type-`letter`
/// parity condition, if any.
fn largest_violating_value(parts: &[u32], letter: TypeLetter) -> Option<u32> {
    // Parts are weakly decreasing, so the first offending run found is
    // the largest offending value.
    let needs_even_mult = |value: u32| match letter {
        TypeLetter::A => false,
        TypeLetter::B | TypeLetter::D => value.is_multiple_of(2),
        TypeLetter::C => value % 2 == 1,
    };
    let mut pos = 0;
    while pos < parts.len() {
        let value = parts[pos];
        let mut end = pos + 1;
        while end < parts.len() && parts[end] == value {
            end += 1;
        }
        if needs_even_mult(value) && (end - pos) % 2 == 1 {
            return Some(value);
        }
        pos = end;
    }
    None
}

struct RunIter<'a> {
    parts: &'a [u32],
    pos: usize,
}

impl Iterator for RunIter<'_> {
    type Item = (u32, u32);

    fn next(&mut self) -> Option<(u32, u32)> {
        let value = *self.parts.get(self.pos)?;
        let start = self.pos;
        while self.pos < self.parts.len() && self.parts[self.pos] == value {
            self.pos += 1;
        }
        Some((value, (self.pos - start) as u32))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| PartitionError::Parse {
                text: s.to_owned(),
                reason: "expected a bracketed list like [3, 1]".to_owned(),
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            let value: u32 = piece.parse().map_err(|_| PartitionError::Parse {
                text: s.to_owned(),
                reason: format!("{piece:?} is not a positive integer"),
            })?;
            if value == 0 {
                return Err(PartitionError::Parse {
                    text: s.to_owned(),
                    reason: "parts must be positive".to_owned(),
                });
            }
            parts.push(value);
        }
        Partition::new(parts).map_err(|e| PartitionError::Parse {
            text: s.to_owned(),
            reason: e.to_string(),
        })
    }
}

/// All partitions of `total`, each with parts at most `max_part`.
///
/// Used by brute-force oracles; the output is in no particular order but
/// contains each partition exactly once.
pub fn partitions_of_bounded(total: u32, max_part: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let cap = remaining.min(max_part);
        for next in (1..=cap).rev() {
            current.push(next);
            go(remaining - next, next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `total`.
pub fn partitions_of(total: u32) -> Vec<Partition> {
    partitions_of_bounded(total, total.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("test partitions are valid")
    }

    /// Brute-force collapse: dominance-maximum over all dominated
    /// type-`letter` partitions of the same size.
    fn collapse_oracle(q: &Partition, letter: TypeLetter) -> Option<Partition> {
        let candidates: Vec<Partition> = partitions_of(q.size())
            .into_iter()
            .filter(|c| c.is_type(letter) && c.dominance_le(q).unwrap())
            .collect();
        let best = candidates.iter().find(|c| {
            candidates
                .iter()
                .all(|other| other.dominance_le(c).unwrap())
        })?;
        Some(best.clone())
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[4, 4]).transpose(), p(&[2, 2, 2, 2]));
    }

    #[test]
    fn part_sum_examples() {
        assert_eq!(p(&[3, 1]).part_sum(&p(&[2, 2])), p(&[5, 3]));
        assert_eq!(p(&[3, 1]).part_sum(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[2]).part_sum(&p(&[1, 1, 1])), p(&[3, 1, 1]));
    }

    #[test]
    fn disjoint_union_examples() {
        assert_eq!(p(&[3, 1]).disjoint_union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().disjoint_union(&p(&[1, 1])), p(&[1, 1]));
    }

    #[test]
    fn increments_and_decrements() {
        assert_eq!(p(&[3, 2]).plus_one().unwrap(), p(&[4, 2]));
        assert_eq!(p(&[3, 2]).minus_one().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).minus_one().unwrap(), p(&[3]));
        assert_eq!(p(&[1]).minus_one().unwrap(), Partition::empty());
        assert_eq!(p(&[2]).plus_minus().unwrap(), p(&[2]));
        assert_eq!(
            Partition::empty().plus_one(),
            Err(PartitionError::EmptyPartition)
        );
        assert_eq!(
            Partition::empty().minus_one(),
            Err(PartitionError::EmptyPartition)
        );
    }

    #[test]
    fn type_membership_examples() {
        assert!(p(&[3, 3, 3]).is_type(TypeLetter::B));
        assert!(p(&[2, 1, 1]).is_type(TypeLetter::C));
        assert!(!p(&[2, 1, 1]).is_type(TypeLetter::D));
        assert!(p(&[2, 2]).is_type(TypeLetter::D));
        assert!(p(&[2, 2]).is_very_even());
        assert!(!p(&[2]).is_very_even());
        // The empty partition has even size: types C and D but not B.
        assert!(Partition::empty().is_type(TypeLetter::A));
        assert!(!Partition::empty().is_type(TypeLetter::B));
        assert!(Partition::empty().is_type(TypeLetter::C));
        assert!(Partition::empty().is_type(TypeLetter::D));
        assert!(Partition::empty().is_very_even());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(
            p(&[4, 3, 2, 2]).collapse(TypeLetter::B).unwrap(),
            p(&[3, 3, 3, 1, 1])
        );
        assert_eq!(p(&[3, 3]).collapse(TypeLetter::C).unwrap(), p(&[3, 3]));
        assert_eq!(
            p(&[2, 1, 1]).collapse(TypeLetter::D).unwrap(),
            p(&[1, 1, 1, 1])
        );
        assert_eq!(p(&[2, 1]).collapse(TypeLetter::B).unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[3, 1]).collapse(TypeLetter::C).unwrap(), p(&[2, 2]));
        assert_eq!(p(&[4, 1]).collapse(TypeLetter::B).unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[6, 2]).collapse(TypeLetter::D).unwrap(), p(&[5, 3]));
        assert_eq!(p(&[3, 1]).collapse(TypeLetter::A).unwrap(), p(&[3, 1]));
        assert_eq!(
            Partition::empty().collapse(TypeLetter::C).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            p(&[2, 2]).collapse(TypeLetter::B),
            Err(PartitionError::SizeParity {
                letter: TypeLetter::B,
                size: 4
            })
        );
        assert_eq!(
            p(&[3]).collapse(TypeLetter::D),
            Err(PartitionError::SizeParity {
                letter: TypeLetter::D,
                size: 3
            })
        );
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominance_le(&p(&[4])).unwrap());
        assert!(!p(&[4]).dominance_le(&p(&[2, 2])).unwrap());
        assert!(!p(&[4, 1, 1]).dominance_le(&p(&[3, 3])).unwrap());
        assert!(!p(&[3, 3]).dominance_le(&p(&[4, 1, 1])).unwrap());
        assert!(p(&[2, 2, 2]).dominance_le(&p(&[3, 2, 1])).unwrap());
        // Incomparable pair: [3,1,1,1] wins on the first prefix sum,
        // [2,2,2] on the third.
        assert!(!p(&[2, 2, 2]).dominance_le(&p(&[3, 1, 1, 1])).unwrap());
        assert!(!p(&[3, 1, 1, 1]).dominance_le(&p(&[2, 2, 2])).unwrap());
        assert_eq!(
            p(&[2]).dominance_le(&p(&[2, 2])),
            Err(PartitionError::SizeMismatch(2, 4))
        );
    }

    #[test]
    fn collapse_matches_oracle_up_to_size_twelve() {
        for total in 0..=12u32 {
            for q in partitions_of(total) {
                for letter in [TypeLetter::B, TypeLetter::C, TypeLetter::D] {
                    let parity_ok = match letter {
                        TypeLetter::B => total % 2 == 1,
                        _ => total % 2 == 0,
                    };
                    if !parity_ok {
                        assert!(q.collapse(letter).is_err());
                        continue;
                    }
                    let greedy = q.collapse(letter).unwrap();
                    let oracle = collapse_oracle(&q, letter)
                        .unwrap_or_else(|| panic!("no type-{letter} partition below {q}"));
                    assert_eq!(greedy, oracle, "collapse of {q} to type {letter}");
                }
            }
        }
    }

    #[test]
    fn collapse_is_idempotent_and_identity_on_typed() {
        for total in 0..=10u32 {
            for q in partitions_of(total) {
                for letter in TypeLetter::ALL {
                    if let Ok(c) = q.collapse(letter) {
                        assert!(c.is_type(letter), "{q} -> {c} must be type {letter}");
                        assert_eq!(c.collapse(letter).unwrap(), c, "idempotence at {q}");
                        if q.is_type(letter) {
                            assert_eq!(c, q, "identity on type-{letter} input {q}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn collapse_is_monotone_for_dominance() {
        for total in [6u32, 7, 8, 9] {
            let all = partitions_of(total);
            for letter in [TypeLetter::B, TypeLetter::C, TypeLetter::D] {
                if (letter == TypeLetter::B) != (total % 2 == 1) {
                    continue;
                }
                for a in &all {
                    for b in &all {
                        if a.dominance_le(b).unwrap() {
                            let ca = a.collapse(letter).unwrap();
                            let cb = b.collapse(letter).unwrap();
                            assert!(
                                ca.dominance_le(&cb).unwrap(),
                                "monotonicity fails: {a} <= {b} but {ca} !<= {cb}"
                            );
                        }
                    }
                }
            }
        }
    }

    /// Collapse interacts with adding a doubled partition transitively:
    /// `((q0 + 2 q1)_X + 2 q2)_X = (q0 + 2 (q1 + q2))_X`.
    #[test]
    fn collapse_absorbs_repeated_doubled_additions() {
        let pool: Vec<Partition> = (0..=6u32).flat_map(partitions_of).collect();
        for q0 in &pool {
            let letters: &[TypeLetter] = if q0.size() % 2 == 0 {
                &[TypeLetter::C, TypeLetter::D]
            } else {
                &[TypeLetter::B]
            };
            for q1 in &pool {
                for q2 in &pool {
                    let double = |q: &Partition| q.part_sum(q);
                    for &letter in letters {
                        let step = q0.part_sum(&double(q1)).collapse(letter).unwrap();
                        let lhs = step.part_sum(&double(q2)).collapse(letter).unwrap();
                        let rhs = q0
                            .part_sum(&double(&q1.part_sum(q2)))
                            .collapse(letter)
                            .unwrap();
                        assert_eq!(lhs, rhs, "q0={q0} q1={q1} q2={q2} X={letter}");
                    }
                }
            }
        }
    }

    /// D-collapse of `p ⊔ [b, b]` either commutes with the union or, in
    /// one exceptional configuration, splits the pair as `[b+1, b-1]`.
    #[test]
    fn d_collapse_of_adjoined_even_pair_case_split() {
        for total in (0..=8u32).filter(|t| t % 2 == 0) {
            for q in partitions_of(total) {
                for b in 1..=4u32 {
                    let lhs = q
                        .disjoint_union(&p(&[b, b]))
                        .collapse(TypeLetter::D)
                        .unwrap();
                    let above: Vec<u32> = q.parts().iter().copied().filter(|&x| x > b).collect();
                    let exceptional = b % 2 == 0
                        && (above.len() as u32 + above.iter().sum::<u32>()) % 2 == 1
                        && q.multiplicity(b) == 0;
                    let rhs = if exceptional {
                        q.collapse(TypeLetter::D)
                            .unwrap()
                            .disjoint_union(&p(&[b + 1, b - 1]))
                    } else {
                        q.collapse(TypeLetter::D)
                            .unwrap()
                            .disjoint_union(&p(&[b, b]))
                    };
                    assert_eq!(lhs, rhs, "q={q} b={b}");
                }
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        for text in ["[]", "[3]", "[3, 3, 1]", "[10, 2, 1]"] {
            let q: Partition = text.parse().unwrap();
            assert_eq!(q.to_string(), text);
        }
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(" [ 2 , 1 ] ".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("[1, 3]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("3, 1".parse::<Partition>().is_err());
        assert!("[x]".parse::<Partition>().is_err());
    }

    #[test]
    fn constructor_rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 3]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn partition_enumerator_counts() {
        // p(0..=10) = 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42.
        let counts: Vec<usize> = (0..=10).map(|t| partitions_of(t).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn transpose_is_an_involution(q in arb_partition(9, 9)) {
            prop_assert_eq!(q.transpose().transpose(), q);
        }

        #[test]
        fn transpose_exchanges_sum_and_union(
            a in arb_partition(7, 7),
            b in arb_partition(7, 7),
        ) {
            prop_assert_eq!(
                a.disjoint_union(&b).transpose(),
                a.transpose().part_sum(&b.transpose())
            );
        }

        #[test]
        fn sums_preserve_total_size(a in arb_partition(7, 7), b in arb_partition(7, 7)) {
            prop_assert_eq!(a.part_sum(&b).size(), a.size() + b.size());
            prop_assert_eq!(a.disjoint_union(&b).size(), a.size() + b.size());
        }

        #[test]
        fn collapse_result_is_dominated(q in arb_partition(8, 8)) {
            for letter in [TypeLetter::B, TypeLetter::C, TypeLetter::D] {
                if let Ok(c) = q.collapse(letter) {
                    prop_assert!(c.is_type(letter));
                    prop_assert!(c.dominance_le(&q).unwrap());
                }
            }
        }

        #[test]
        fn dominance_is_a_partial_order(
            a in arb_partition(6, 6),
            b in arb_partition(6, 6),
        ) {
            prop_assert!(a.dominance_le(&a).unwrap());
            if a.size() == b.size()
                && a.dominance_le(&b).unwrap()
                && b.dominance_le(&a).unwrap()
            {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn text_round_trip(q in arb_partition(30, 12)) {
            let text = q.to_string();
            prop_assert_eq!(text.parse::<Partition>().unwrap(), q);
        }
    }
}
