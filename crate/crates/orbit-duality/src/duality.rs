//! The duality maps on classical nilpotent orbits, for every cover
//! degree `n >= 1`, computed along two independent routes.
//!
//! # Closed formulas
//!
//! The building block is `d_com_A(p, n)`: each part `m` of `p` is divided
//! by `n` as `m = n·a + b` with `0 <= b < n` and replaced by the partition
//! `(n^a, b)`; the results are added componentwise.  At `n = 1` this is
//! the transpose.  The B/C/D maps post-compose with the first-part
//! increment `^+`, the last-part decrement `^-`, and a collapse, with the
//! case split controlled by `n mod 4` (through `n* = n / gcd(n, 2)`):
//!
//! | output | n odd             | n ≡ 2 (mod 4)        | n ≡ 0 (mod 4)   |
//! |--------|-------------------|----------------------|-----------------|
//! | B      | `(d_A(p,n)^+)_B`  | `(d_A(p,n*)^+)_B`    | `(d_A(p,n*))_B` |
//! | C      | `(d_A(p,n)^-)_C`  | `(d_A(p,n*)^{+-})_C` | `(d_A(p,n*))_C` |
//! | D      | `(d_A(p,n*))_D`   | `(d_A(p,n*))_D`      | `(d_A(p,n*))_D` |
//!
//! Each output type constrains the input: the maps consume orbits of the
//! dual group, whose type depends on `n` (see
//! [`ClassicalContext::input_type`]), and every entry point validates
//! this before computing.
//!
//! # The weight-multiset route
//!
//! Independently, [`d_via_ap`] computes the same maps by attaching the
//! weight multiset of the input ([`crate::weight`]), decomposing its
//! symmetrization into congruence classes, turning each class into a
//! partition through its Robinson–Schensted shape, and assembling the
//! class partitions with the `^+`/`^-`/collapse corrections
//! ([`ap_x`]).  The two routes share only the partition primitives, so
//! their agreement — swept exhaustively by [`crate::verify`] — is a real
//! consistency check on both.
//!
//! # Labels, induction, and Speh shapes
//!
//! Very even type-D partitions name two orbits each, distinguished by a
//! Roman-numeral label; [`d_com_d`] transports labels, preserving or
//! swapping them according to `|p|/4 mod 2`.  [`saturate`] and
//! [`induce`] express how all the maps interact with adjoining a doubled
//! partition, and [`speh_wavefront`] evaluates the closed formula for
//! the wavefront partition of a Speh representation on a cover of a
//! general linear group, cross-checkable against `d_com_A`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::n_star;
use crate::partition::{Partition, PartitionError, TypeLetter, VeryEvenLabel};
use crate::weight::{
    class_partition, decompose, lambda_a, lambda_x, ClassIndex, WeightError, WeightMultiset,
};

/// Errors from the duality maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    /// The partition fed to a type-`letter` map at degree `n` must be an
    /// orbit of the dual group, whose type the rule determines.
    #[error(
        "input-type rule violated for type {letter} at n = {n}: \
         {p} is not a type-{expected} partition"
    )]
    InputType {
        letter: TypeLetter,
        n: u32,
        expected: TypeLetter,
        p: Partition,
    },
    /// Roman-numeral labels belong to very even partitions only.
    #[error("a very even label requires a very even partition, got {p}")]
    LabelRequiresVeryEven { p: Partition },
    /// The class-assembly route for B/C/D consumes non-negative halves.
    #[error(
        "the weight-multiset route for type {letter} expects a non-negative multiset, got {lam}"
    )]
    NegativeWeights {
        letter: TypeLetter,
        lam: WeightMultiset,
    },
    /// Speh parameters require `m` to divide `n`.
    #[error("m = {m} must divide n = {n}")]
    NonDividingSpehDegree { m: u32, n: u32 },
    /// Speh parameters are positive integers.
    #[error("Speh parameters must be positive: r0 = {r0}, m = {m}, k = {k}, n = {n}")]
    NonPositiveSpehParameter { r0: u32, m: u32, k: u32, n: u32 },
    /// A partition operation failed (empty-partition increment, size
    /// parity, …).
    #[error(transparent)]
    Partition(#[from] PartitionError),
    /// A weight-multiset operation failed (unsolvable parity, …).
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// A classical family letter together with a cover degree.
///
/// The letter names the *output* type of the duality map; the input
/// ranges over orbits of the dual group, whose type depends on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalContext {
    letter: TypeLetter,
    n: u32,
}

impl ClassicalContext {
    /// # Panics
    /// Panics if `n == 0`.
    pub fn new(letter: TypeLetter, n: u32) -> Self {
        assert!(n >= 1, "cover degree must be positive");
        ClassicalContext { letter, n }
    }

    /// The output type letter.
    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    /// The cover degree.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `n* = n / gcd(n, 2)`.
    pub fn n_star(&self) -> u32 {
        n_star(self.n)
    }

    /// The type of partition the map consumes:
    ///
    /// * output A: any partition;
    /// * output B: type C when `n` is odd or `n ≡ 2 (mod 4)`, type B when
    ///   `4 | n`;
    /// * output C: type B when `n` is odd, type C when `n` is even;
    /// * output D: type D for every `n`.
    pub fn input_type(&self) -> TypeLetter {
        match self.letter {
            TypeLetter::A => TypeLetter::A,
            TypeLetter::B => {
                if self.n.is_multiple_of(4) {
                    TypeLetter::B
                } else {
                    TypeLetter::C
                }
            }
            TypeLetter::C => {
                if self.n % 2 == 1 {
                    TypeLetter::B
                } else {
                    TypeLetter::C
                }
            }
            TypeLetter::D => TypeLetter::D,
        }
    }

    /// Checks the input-type rule for `p`.
    pub fn validate_input(&self, p: &Partition) -> Result<(), DualityError> {
        let expected = self.input_type();
        if p.is_type(expected) {
            Ok(())
        } else {
            Err(DualityError::InputType {
                letter: self.letter,
                n: self.n,
                expected,
                p: p.clone(),
            })
        }
    }
}

impl fmt::Display for ClassicalContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@n={}", self.letter, self.n)
    }
}

/// A partition together with an optional very-even label.
///
/// The label may only be present when the partition is very even; the
/// text form appends `^I` or `^II` in that case: `[2, 2]^I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledOrbit {
    partition: Partition,
    label: Option<VeryEvenLabel>,
}

impl LabeledOrbit {
    /// Attaches `label` to `partition`, rejecting labels on partitions
    /// that are not very even.
    pub fn new(partition: Partition, label: Option<VeryEvenLabel>) -> Result<Self, DualityError> {
        if label.is_some() && !partition.is_very_even() {
            return Err(DualityError::LabelRequiresVeryEven { p: partition });
        }
        Ok(LabeledOrbit { partition, label })
    }

    /// An orbit with no label.
    pub fn unlabeled(partition: Partition) -> Self {
        LabeledOrbit {
            partition,
            label: None,
        }
    }

    /// The underlying partition.
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The label, if any.
    pub fn label(&self) -> Option<VeryEvenLabel> {
        self.label
    }
}

impl fmt::Display for LabeledOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(label) = self.label {
            write!(f, "^{label}")?;
        }
        Ok(())
    }
}

impl FromStr for LabeledOrbit {
    type Err = DualityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let (partition_text, label) = match trimmed.rsplit_once('^') {
            Some((head, tail)) => {
                let label: VeryEvenLabel = tail.trim().parse()?;
                (head, Some(label))
            }
            None => (trimmed, None),
        };
        let partition: Partition = partition_text.parse()?;
        LabeledOrbit::new(partition, label)
    }
}

/// Parameters of a Speh representation on an `n`-fold cover of a general
/// linear group: `r0` blocks, inducing datum sizes `m` and `k`, with
/// `m | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpehDatum {
    r0: u32,
    m: u32,
    k: u32,
    n: u32,
}

impl SpehDatum {
    pub fn new(r0: u32, m: u32, k: u32, n: u32) -> Result<Self, DualityError> {
        if r0 == 0 || m == 0 || k == 0 || n == 0 {
            return Err(DualityError::NonPositiveSpehParameter { r0, m, k, n });
        }
        if !n.is_multiple_of(m) {
            return Err(DualityError::NonDividingSpehDegree { m, n });
        }
        Ok(SpehDatum { r0, m, k, n })
    }

    pub fn r0(&self) -> u32 {
        self.r0
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl fmt::Display for SpehDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "speh(r0={}, m={}, k={}, n={})",
            self.r0, self.m, self.k, self.n
        )
    }
}

/// Division with remainder as a partition: for `m = n·a + b` with
/// `0 <= b < n`, returns `(n, …, n, b)` with `a` copies of `n`, the `b`
/// omitted when zero.
///
/// # Panics
/// Panics if `n == 0`.
pub fn s_part(m: u32, n: u32) -> Partition {
    assert!(n >= 1, "cover degree must be positive");
    let a = m / n;
    let b = m % n;
    let mut parts = vec![n; a as usize];
    if b > 0 {
        parts.push(b);
    }
    Partition::new(parts).expect("division with remainder yields decreasing parts")
}

/// The type-A map: componentwise sum of `s_part(p_i, n)` over the parts.
///
/// At `n = 1` this is the transpose.  Additive under disjoint union:
/// `d_com_A(p ⊔ q, n) = d_com_A(p, n) + d_com_A(q, n)`.
///
/// # Panics
/// Panics if `n == 0`.
///
/// ```
/// use orbit_duality::{d_com_a, Partition};
/// let p: Partition = "[5, 2]".parse().unwrap();
/// assert_eq!(d_com_a(&p, 3).to_string(), "[5, 2]");
/// ```
pub fn d_com_a(p: &Partition, n: u32) -> Partition {
    p.parts().iter().fold(Partition::empty(), |acc, &part| {
        acc.part_sum(&s_part(part, n))
    })
}

/// The type-B map at degree `n`.
///
/// ```
/// use orbit_duality::{d_com_b, Partition};
/// let p: Partition = "[1, 1]".parse().unwrap();
/// assert_eq!(d_com_b(&p, 1).unwrap().to_string(), "[3]");
/// ```
pub fn d_com_b(p: &Partition, n: u32) -> Result<Partition, DualityError> {
    ClassicalContext::new(TypeLetter::B, n).validate_input(p)?;
    let a = d_com_a(p, n_star(n));
    let adjusted = if n.is_multiple_of(4) {
        a
    } else {
        a.plus_one()?
    };
    Ok(adjusted.collapse(TypeLetter::B)?)
}

/// The type-C map at degree `n`.
///
/// ```
/// use orbit_duality::{d_com_c, Partition};
/// let p: Partition = "[3]".parse().unwrap();
/// assert_eq!(d_com_c(&p, 1).unwrap().to_string(), "[1, 1]");
/// ```
pub fn d_com_c(p: &Partition, n: u32) -> Result<Partition, DualityError> {
    ClassicalContext::new(TypeLetter::C, n).validate_input(p)?;
    let a = d_com_a(p, n_star(n));
    let adjusted = if n % 2 == 1 {
        a.minus_one()?
    } else if n % 4 == 2 {
        a.plus_minus()?
    } else {
        a
    };
    Ok(adjusted.collapse(TypeLetter::C)?)
}

/// The type-D map at degree `n`, transporting very-even labels.
///
/// When the input carries a label and the output is very even, the label
/// is preserved if `|p|/4` is even and swapped if it is odd; otherwise
/// the output is unlabeled.
///
/// ```
/// use orbit_duality::{d_com_d, LabeledOrbit};
/// let o: LabeledOrbit = "[2, 2, 2, 2]^I".parse().unwrap();
/// assert_eq!(d_com_d(&o, 1).unwrap().to_string(), "[4, 4]^I");
/// ```
pub fn d_com_d(orbit: &LabeledOrbit, n: u32) -> Result<LabeledOrbit, DualityError> {
    let p = orbit.partition();
    ClassicalContext::new(TypeLetter::D, n).validate_input(p)?;
    let out = d_com_a(p, n_star(n)).collapse(TypeLetter::D)?;
    let label = match orbit.label() {
        Some(label) if out.is_very_even() => {
            // A very even partition has size divisible by 4.
            Some(if (p.size() / 4).is_multiple_of(2) {
                label
            } else {
                label.swapped()
            })
        }
        _ => None,
    };
    LabeledOrbit::new(out, label)
}

/// The metaplectic type-C map: `(((p*)_D)^{+-})_C` on type-C partitions.
///
/// Coincides with `d_com_C(p, 2)` and with `((p_D)*)` for every type-C
/// partition.
pub fn metaplectic_d_c(p: &Partition) -> Result<Partition, DualityError> {
    if !p.is_type(TypeLetter::C) {
        return Err(DualityError::InputType {
            letter: TypeLetter::C,
            n: 2,
            expected: TypeLetter::C,
            p: p.clone(),
        });
    }
    let adjusted = p.transpose().collapse(TypeLetter::D)?.plus_minus()?;
    Ok(adjusted.collapse(TypeLetter::C)?)
}

/// Dispatches `d_com` by output letter, transporting labels for type D.
///
/// For output letters other than D any input label is irrelevant and the
/// result is unlabeled.
pub fn d_com(orbit: &LabeledOrbit, ctx: ClassicalContext) -> Result<LabeledOrbit, DualityError> {
    let p = orbit.partition();
    match ctx.letter() {
        TypeLetter::A => Ok(LabeledOrbit::unlabeled(d_com_a(p, ctx.n()))),
        TypeLetter::B => Ok(LabeledOrbit::unlabeled(d_com_b(p, ctx.n())?)),
        TypeLetter::C => Ok(LabeledOrbit::unlabeled(d_com_c(p, ctx.n())?)),
        TypeLetter::D => d_com_d(orbit, ctx.n()),
    }
}

/// Assembles a partition from the congruence classes of a weight
/// multiset.
///
/// For `letter = A`, `lam` is split by congruence class modulo 1 and the
/// Robinson–Schensted shapes of the classes are added componentwise; no
/// symmetry is required.
///
/// For `letter ∈ {B, C, D}`, `lam` must be non-negative; it is doubled
/// symmetrically (an extra zero adjoined for B), decomposed, and the
/// class partitions are combined as
///
/// ```text
/// B:  ( p_0* + p_½* + Σ_i p_i* )_B
/// C:  ( ((p_0^-)_C)* + (((p_½*)_D)^{+-})_C + Σ_i p_i* )_C
/// D:  ( ((p_0^-)*)_D + ((p_½)_D)* + Σ_i p_i* )_D
/// ```
///
/// where `p_0`, `p_½`, `p_i` are the integral, half-integral, and paired
/// class partitions and an empty half-integral class contributes the
/// empty partition.
pub fn ap_x(lam: &WeightMultiset, letter: TypeLetter) -> Result<Partition, DualityError> {
    if letter == TypeLetter::A {
        return Ok(sum_of_congruence_class_shapes(lam));
    }
    if !lam.is_non_negative() {
        return Err(DualityError::NegativeWeights {
            letter,
            lam: lam.clone(),
        });
    }
    let mu = lam.symmetric_double(letter == TypeLetter::B);
    let dec = decompose(&mu).expect("a symmetric doubling always decomposes");

    let p_zero = class_partition(&dec, ClassIndex::Zero);
    let p_half = class_partition(&dec, ClassIndex::Half);

    let (zero_term, half_term) = match letter {
        TypeLetter::B => (p_zero.transpose(), p_half.transpose()),
        TypeLetter::C => {
            let zero_term = p_zero.minus_one()?.collapse(TypeLetter::C)?.transpose();
            let half_term = if p_half.is_empty() {
                Partition::empty()
            } else {
                p_half
                    .transpose()
                    .collapse(TypeLetter::D)?
                    .plus_minus()?
                    .collapse(TypeLetter::C)?
            };
            (zero_term, half_term)
        }
        TypeLetter::D => {
            let zero_term = p_zero.minus_one()?.transpose().collapse(TypeLetter::D)?;
            let half_term = p_half.collapse(TypeLetter::D)?.transpose();
            (zero_term, half_term)
        }
        TypeLetter::A => unreachable!("handled above"),
    };

    let mut total = zero_term.part_sum(&half_term);
    for i in 1..=dec.paired_classes().len() {
        total = total.part_sum(&class_partition(&dec, ClassIndex::Pair(i)).transpose());
    }
    Ok(total.collapse(letter)?)
}

/// Groups `lam` by congruence class modulo 1 and adds the
/// Robinson–Schensted shapes of the classes componentwise.
fn sum_of_congruence_class_shapes(lam: &WeightMultiset) -> Partition {
    let mut classes: Vec<(num_rational::Rational64, Vec<num_rational::Rational64>)> = Vec::new();
    for &(value, mult) in lam.runs() {
        let frac = value - value.floor();
        let entries = std::iter::repeat_n(value, mult as usize);
        match classes.iter_mut().find(|(f, _)| *f == frac) {
            Some((_, class)) => class.extend(entries),
            None => classes.push((frac, entries.collect())),
        }
    }
    classes
        .into_iter()
        .fold(Partition::empty(), |acc, (_, entries)| {
            acc.part_sum(&WeightMultiset::from_values(entries).shape())
        })
}

/// The duality computed along the weight-multiset route.
///
/// The input is validated against the input-type rule of `ctx`; its
/// weight multiset (full for output A, non-negative half keyed by the
/// input's own type otherwise) is then assembled by [`ap_x`] with the
/// output letter.
///
/// ```
/// use orbit_duality::{d_via_ap, ClassicalContext, Partition, TypeLetter};
/// let p: Partition = "[3, 1]".parse().unwrap();
/// let ctx = ClassicalContext::new(TypeLetter::D, 1);
/// assert_eq!(d_via_ap(&p, ctx).unwrap().to_string(), "[1, 1, 1, 1]");
/// ```
pub fn d_via_ap(p: &Partition, ctx: ClassicalContext) -> Result<Partition, DualityError> {
    ctx.validate_input(p)?;
    match ctx.letter() {
        TypeLetter::A => ap_x(&lambda_a(p, ctx.n()), TypeLetter::A),
        letter => {
            let half = lambda_x(p, ctx.n(), ctx.input_type())?;
            ap_x(&half, letter)
        }
    }
}

/// Adjoins `q` twice: `p ⊔ q ⊔ q`.
pub fn saturate(p: &Partition, q: &Partition) -> Partition {
    p.disjoint_union(q).disjoint_union(q)
}

/// Adds the doubled partition `2q` componentwise and collapses:
/// `(base + 2q)_X`.
///
/// Fails when the total size has the wrong parity for `letter`.
pub fn induce(
    base: &Partition,
    q: &Partition,
    letter: TypeLetter,
) -> Result<Partition, DualityError> {
    let doubled = q.part_sum(q);
    Ok(base.part_sum(&doubled).collapse(letter)?)
}

/// The wavefront partition of a Speh representation: with `n = m·n0` and
/// `k = c·n0 + d` (`0 <= d < n0`), the partition `((n·r0)^c, r0·m·d)`,
/// the last entry omitted when `d = 0`.
///
/// Coincides with `d_com_A((m·k)^{r0}, n)`.
pub fn speh_wavefront(datum: &SpehDatum) -> Partition {
    let n0 = datum.n() / datum.m();
    let c = datum.k() / n0;
    let d = datum.k() % n0;
    let mut parts = vec![datum.n() * datum.r0(); c as usize];
    if d > 0 {
        parts.push(datum.r0() * datum.m() * d);
    }
    Partition::new(parts).expect("the Speh shape is weakly decreasing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use crate::partition::partitions_of;

    fn p(text: &str) -> Partition {
        text.parse().expect("test partitions parse")
    }

    fn orbit(text: &str) -> LabeledOrbit {
        text.parse().expect("test orbits parse")
    }

    #[test]
    fn s_part_examples() {
        assert_eq!(s_part(5, 3), p("[3, 2]"));
        assert_eq!(s_part(6, 3), p("[3, 3]"));
        assert_eq!(s_part(2, 5), p("[2]"));
        assert_eq!(s_part(0, 4), Partition::empty());
    }

    #[test]
    fn d_com_a_examples() {
        assert_eq!(d_com_a(&p("[3, 2]"), 1), p("[2, 2, 1]"));
        assert_eq!(d_com_a(&p("[5, 2]"), 3), p("[5, 2]"));
        assert_eq!(d_com_a(&p("[2, 1]"), 3), p("[3]"));
        assert_eq!(d_com_a(&Partition::empty(), 2), Partition::empty());
    }

    #[test]
    fn d_com_a_at_degree_one_is_transpose() {
        for total in 0..=10u32 {
            for q in partitions_of(total) {
                assert_eq!(d_com_a(&q, 1), q.transpose(), "at {q}");
            }
        }
    }

    #[test]
    fn d_com_b_examples() {
        assert_eq!(d_com_b(&p("[1, 1]"), 1).unwrap(), p("[3]"));
        assert_eq!(d_com_b(&p("[2]"), 1).unwrap(), p("[1, 1, 1]"));
        assert_eq!(d_com_b(&p("[3]"), 4).unwrap(), p("[1, 1, 1]"));
    }

    #[test]
    fn d_com_c_examples() {
        assert_eq!(d_com_c(&p("[3]"), 1).unwrap(), p("[1, 1]"));
        assert_eq!(d_com_c(&p("[1, 1, 1]"), 3).unwrap(), p("[2]"));
        assert_eq!(d_com_c(&p("[4]"), 2).unwrap(), p("[2, 1, 1]"));
    }

    #[test]
    fn d_com_d_examples() {
        assert_eq!(d_com_d(&orbit("[3, 1]"), 1).unwrap(), orbit("[1, 1, 1, 1]"));
        assert_eq!(
            d_com_d(&orbit("[2, 2, 2, 2]^I"), 1).unwrap(),
            orbit("[4, 4]^I")
        );
        assert_eq!(
            d_com_d(&orbit("[2, 2, 2, 2, 2, 2]^I"), 1).unwrap(),
            orbit("[6, 6]^II")
        );
    }

    #[test]
    fn d_com_d_drops_label_when_output_is_not_very_even() {
        // [2, 2] at n = 3: d_A(·, 3) = [4], whose D-collapse [3, 1] is
        // not very even.
        let out = d_com_d(&orbit("[2, 2]^II"), 3).unwrap();
        assert_eq!(out, orbit("[3, 1]"));
        assert_eq!(out.label(), None);
    }

    #[test]
    fn input_type_rule() {
        // Output B: type C input unless 4 | n.
        for (n, expected) in [(1, TypeLetter::C), (2, TypeLetter::C), (4, TypeLetter::B)] {
            assert_eq!(
                ClassicalContext::new(TypeLetter::B, n).input_type(),
                expected
            );
        }
        // Output C: type B input for odd n, type C for even n.
        for (n, expected) in [(1, TypeLetter::B), (2, TypeLetter::C), (3, TypeLetter::B)] {
            assert_eq!(
                ClassicalContext::new(TypeLetter::C, n).input_type(),
                expected
            );
        }
        assert_eq!(
            ClassicalContext::new(TypeLetter::D, 5).input_type(),
            TypeLetter::D
        );
        assert_eq!(
            ClassicalContext::new(TypeLetter::A, 7).input_type(),
            TypeLetter::A
        );
    }

    #[test]
    fn wrong_type_inputs_are_rejected() {
        assert!(matches!(
            d_com_b(&p("[2, 1]"), 1),
            Err(DualityError::InputType { .. })
        ));
        assert!(matches!(
            d_com_b(&p("[1, 1]"), 4),
            Err(DualityError::InputType {
                expected: TypeLetter::B,
                ..
            })
        ));
        assert!(matches!(
            d_com_c(&p("[2]"), 1),
            Err(DualityError::InputType {
                expected: TypeLetter::B,
                ..
            })
        ));
        assert!(matches!(
            d_com_d(&orbit("[2]"), 1),
            Err(DualityError::InputType { .. })
        ));
        assert!(matches!(
            metaplectic_d_c(&p("[3, 1]")),
            Err(DualityError::InputType { .. })
        ));
    }

    #[test]
    fn labeled_orbit_validation_and_text() {
        assert!(matches!(
            LabeledOrbit::new(p("[3, 1]"), Some(VeryEvenLabel::I)),
            Err(DualityError::LabelRequiresVeryEven { .. })
        ));
        let o = orbit("[4, 4]^II");
        assert_eq!(o.partition(), &p("[4, 4]"));
        assert_eq!(o.label(), Some(VeryEvenLabel::II));
        assert_eq!(o.to_string(), "[4, 4]^II");
        assert_eq!(orbit("[3, 1]").to_string(), "[3, 1]");
        assert!("[2]^I".parse::<LabeledOrbit>().is_err());
        assert!("[4, 4]^III".parse::<LabeledOrbit>().is_err());
    }

    #[test]
    fn metaplectic_examples() {
        assert_eq!(metaplectic_d_c(&p("[2]")).unwrap(), p("[2]"));
        assert_eq!(metaplectic_d_c(&p("[2, 2]")).unwrap(), p("[2, 2]"));
        assert_eq!(metaplectic_d_c(&p("[4]")).unwrap(), p("[2, 1, 1]"));
        assert_eq!(metaplectic_d_c(&p("[6, 2]")).unwrap(), p("[2, 2, 2, 1, 1]"));
    }

    #[test]
    fn metaplectic_triple_agreement_small() {
        for total in (0..=10u32).step_by(2) {
            for q in partitions_of(total) {
                if !q.is_type(TypeLetter::C) || q.is_empty() {
                    continue;
                }
                let meta = metaplectic_d_c(&q).unwrap();
                let closed = d_com_c(&q, 2).unwrap();
                let via_d_collapse = q.collapse(TypeLetter::D).unwrap().transpose();
                assert_eq!(meta, closed, "metaplectic vs closed at {q}");
                assert_eq!(meta, via_d_collapse, "metaplectic vs (p_D)* at {q}");
            }
        }
    }

    #[test]
    fn ap_examples() {
        assert_eq!(
            ap_x(&lambda_a(&p("[5, 2]"), 3), TypeLetter::A).unwrap(),
            p("[5, 2]")
        );
        assert_eq!(
            ap_x(
                &lambda_x(&p("[4]"), 2, TypeLetter::C).unwrap(),
                TypeLetter::C
            )
            .unwrap(),
            p("[2, 1, 1]")
        );
        assert_eq!(
            ap_x(
                &lambda_x(&p("[3, 3, 3]"), 2, TypeLetter::B).unwrap(),
                TypeLetter::B
            )
            .unwrap(),
            p("[3, 3, 3]")
        );
    }

    #[test]
    fn ap_rejects_negative_halves() {
        let lam = WeightMultiset::from_values([num_rational::Rational64::new(-1, 2)]);
        assert!(matches!(
            ap_x(&lam, TypeLetter::C),
            Err(DualityError::NegativeWeights { .. })
        ));
    }

    #[test]
    fn d_via_ap_examples() {
        assert_eq!(
            d_via_ap(&p("[3, 2]"), ClassicalContext::new(TypeLetter::A, 1)).unwrap(),
            p("[2, 2, 1]")
        );
        assert_eq!(
            d_via_ap(&p("[2]"), ClassicalContext::new(TypeLetter::C, 2)).unwrap(),
            p("[2]")
        );
        assert_eq!(
            d_via_ap(&p("[3, 1]"), ClassicalContext::new(TypeLetter::D, 1)).unwrap(),
            p("[1, 1, 1, 1]")
        );
    }

    #[test]
    fn dual_paths_agree_on_small_inputs() {
        for total in 1..=8u32 {
            for q in partitions_of(total) {
                for letter in TypeLetter::ALL {
                    for n in 1..=5u32 {
                        let ctx = ClassicalContext::new(letter, n);
                        if !q.is_type(ctx.input_type()) {
                            continue;
                        }
                        let closed = d_com(&LabeledOrbit::unlabeled(q.clone()), ctx)
                            .unwrap()
                            .partition()
                            .clone();
                        let assembled = d_via_ap(&q, ctx).unwrap();
                        assert_eq!(closed, assembled, "paths disagree at {q}, {ctx}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_one_specializations_small() {
        for total in 1..=9u32 {
            for q in partitions_of(total) {
                if q.is_type(TypeLetter::C) {
                    assert_eq!(
                        d_com_b(&q, 1).unwrap(),
                        q.transpose()
                            .plus_one()
                            .unwrap()
                            .collapse(TypeLetter::B)
                            .unwrap(),
                        "B at {q}"
                    );
                }
                if q.is_type(TypeLetter::B) {
                    assert_eq!(
                        d_com_c(&q, 1).unwrap(),
                        q.minus_one()
                            .unwrap()
                            .collapse(TypeLetter::C)
                            .unwrap()
                            .transpose(),
                        "C at {q}"
                    );
                }
                if q.is_type(TypeLetter::D) {
                    assert_eq!(
                        d_com_d(&LabeledOrbit::unlabeled(q.clone()), 1)
                            .unwrap()
                            .partition(),
                        &q.transpose().collapse(TypeLetter::D).unwrap(),
                        "D at {q}"
                    );
                }
            }
        }
    }

    #[test]
    fn zero_orbit_maps_to_regular() {
        // The zero orbit [1, …, 1] of the dual group goes to the regular
        // orbit, the type-X collapse of the single row, for every n.
        for n in 1..=6u32 {
            for half_size in 1..=5u32 {
                let size = 2 * half_size;
                let zero_c = Partition::new(vec![1; size as usize]).unwrap();
                // Type B consumes size 2r (type C) unless 4 | n, where it
                // consumes size 2r + 1 (type B); output size is 2r + 1.
                let out_size_b = size + 1;
                let input_b = if n % 4 == 0 {
                    Partition::new(vec![1; (size + 1) as usize]).unwrap()
                } else {
                    zero_c.clone()
                };
                assert_eq!(
                    d_com_b(&input_b, n).unwrap(),
                    Partition::new(vec![out_size_b])
                        .unwrap()
                        .collapse(TypeLetter::B)
                        .unwrap(),
                    "B zero orbit at n={n}, r={half_size}"
                );

                let input_c = if n % 2 == 1 {
                    Partition::new(vec![1; (size + 1) as usize]).unwrap()
                } else {
                    zero_c.clone()
                };
                assert_eq!(
                    d_com_c(&input_c, n).unwrap(),
                    Partition::new(vec![size])
                        .unwrap()
                        .collapse(TypeLetter::C)
                        .unwrap(),
                    "C zero orbit at n={n}, r={half_size}"
                );

                assert_eq!(
                    d_com_d(&LabeledOrbit::unlabeled(zero_c.clone()), n)
                        .unwrap()
                        .partition(),
                    &Partition::new(vec![size])
                        .unwrap()
                        .collapse(TypeLetter::D)
                        .unwrap(),
                    "D zero orbit at n={n}, r={half_size}"
                );
            }
        }
    }

    #[test]
    fn saturate_and_induce_examples() {
        assert_eq!(saturate(&p("[3]"), &p("[2]")), p("[3, 2, 2]"));
        assert_eq!(
            induce(&p("[2]"), &p("[1]"), TypeLetter::C).unwrap(),
            p("[4]")
        );
        assert_eq!(
            induce(&p("[1, 1, 1]"), &Partition::empty(), TypeLetter::B).unwrap(),
            p("[1, 1, 1]")
        );
        assert_eq!(
            induce(&p("[1, 1, 1, 1]"), &p("[1, 1]"), TypeLetter::D).unwrap(),
            p("[3, 3, 1, 1]")
        );
        assert!(matches!(
            induce(&p("[2]"), &p("[1]"), TypeLetter::B),
            Err(DualityError::Partition(PartitionError::SizeParity { .. }))
        ));
    }

    #[test]
    fn induction_compatibility_small() {
        // d_com_X(p ⊔ q ⊔ q, n) = (d_com_X(p, n) + 2 d_com_A(q, n*))_X
        // for the letters whose closed forms factor through degree n*.
        for letter in [TypeLetter::B, TypeLetter::C, TypeLetter::D] {
            for n in 1..=4u32 {
                let ctx = ClassicalContext::new(letter, n);
                for p_total in 1..=6u32 {
                    for base in partitions_of(p_total) {
                        if !base.is_type(ctx.input_type()) {
                            continue;
                        }
                        for q_total in 0..=3u32 {
                            for q in partitions_of(q_total) {
                                let saturated = saturate(&base, &q);
                                if !saturated.is_type(ctx.input_type()) {
                                    continue;
                                }
                                let lhs = d_com(&LabeledOrbit::unlabeled(saturated.clone()), ctx)
                                    .unwrap()
                                    .partition()
                                    .clone();
                                let rhs = induce(
                                    d_com(&LabeledOrbit::unlabeled(base.clone()), ctx)
                                        .unwrap()
                                        .partition(),
                                    &d_com_a(&q, ctx.n_star()),
                                    letter,
                                )
                                .unwrap();
                                assert_eq!(lhs, rhs, "induction at p={base}, q={q}, {ctx}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn speh_examples() {
        let datum = SpehDatum::new(1, 2, 5, 6).unwrap();
        assert_eq!(speh_wavefront(&datum), p("[6, 4]"));
        let datum = SpehDatum::new(1, 1, 2, 2).unwrap();
        assert_eq!(speh_wavefront(&datum), p("[2]"));
        let datum = SpehDatum::new(2, 1, 3, 2).unwrap();
        assert_eq!(speh_wavefront(&datum), p("[4, 2]"));
    }

    #[test]
    fn speh_validation() {
        assert!(matches!(
            SpehDatum::new(1, 2, 3, 5),
            Err(DualityError::NonDividingSpehDegree { m: 2, n: 5 })
        ));
        assert!(matches!(
            SpehDatum::new(0, 1, 1, 1),
            Err(DualityError::NonPositiveSpehParameter { .. })
        ));
    }

    #[test]
    fn speh_matches_type_a_dual_small() {
        for r0 in 1..=3u32 {
            for m in 1..=3u32 {
                for n0 in 1..=3u32 {
                    let n = m * n0;
                    for k in 1..=6u32 {
                        let datum = SpehDatum::new(r0, m, k, n).unwrap();
                        let rectangle = Partition::new(vec![m * k; r0 as usize]).unwrap();
                        assert_eq!(speh_wavefront(&datum), d_com_a(&rectangle, n), "at {datum}");
                    }
                }
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=8u32, 0..=8).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn d_com_a_is_additive(
            a in arb_partition(),
            b in arb_partition(),
            n in 1..=6u32,
        ) {
            prop_assert_eq!(
                d_com_a(&a.disjoint_union(&b), n),
                d_com_a(&a, n).part_sum(&d_com_a(&b, n))
            );
        }

        #[test]
        fn d_com_a_preserves_size(q in arb_partition(), n in 1..=6u32) {
            prop_assert_eq!(d_com_a(&q, n).size(), q.size());
        }

        #[test]
        fn d_com_a_is_order_reversing(
            a in arb_partition(),
            b in arb_partition(),
            n in 1..=5u32,
        ) {
            if a.size() == b.size() && a.dominance_le(&b).unwrap() {
                prop_assert!(d_com_a(&b, n).dominance_le(&d_com_a(&a, n)).unwrap());
            }
        }
    }
}
