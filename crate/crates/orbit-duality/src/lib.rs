//! Combinatorial duality maps on nilpotent orbits of classical and
//! exceptional groups, in the form used for covering groups.
//!
//! Nilpotent orbits of a classical group are classified by integer
//! partitions subject to a parity condition on part multiplicities (the
//! partition "type"), and orbits of an exceptional group by Bala–Carter
//! labels.  This crate implements, for each positive integer `n`:
//!
//! * the closed-formula duality `d_com` on partitions, built from the
//!   division-with-remainder map on parts, the first-part increment and
//!   last-part decrement, and B/C/D collapses ([`duality`]);
//! * the same map computed along an independent path through weight
//!   multisets, Robinson–Schensted shapes, and congruence-class
//!   decompositions ([`weight`], [`rs`], [`duality::ap_x`]);
//! * lookup tables for the five exceptional groups, stored as piecewise
//!   rules in `n` ([`exceptional`]);
//! * cross-checking sweeps that compare the independent paths and verify
//!   the structural identities the maps satisfy ([`verify`]).
//!
//! The two computation paths share no code beyond the partition
//! primitives, which is what makes the comparison sweep in [`verify`] a
//! meaningful consistency check rather than a tautology.

pub mod duality;
pub mod exceptional;
pub mod partition;
pub mod rs;
pub mod verify;
pub mod weight;

pub use num_rational::Rational64;

pub use duality::{
    ap_x, d_com, d_com_a, d_com_b, d_com_c, d_com_d, d_via_ap, induce, metaplectic_d_c, s_part,
    saturate, speh_wavefront, ClassicalContext, DualityError, LabeledOrbit, SpehDatum,
};
pub use exceptional::{
    d_bv_exceptional, general_q_lookup, stabilization_threshold, ExceptionalGroup,
    ExceptionalTables, OrbitLabel, TableError,
};
pub use partition::{Partition, PartitionError, TypeLetter, VeryEvenLabel};
pub use rs::{rs_insert, rs_shape_closed_form, RsError, Tableau};
pub use verify::{
    run_all, run_suite, Counterexample, Suite, SuiteReport, SweepConfig, DEFAULT_SEED,
};
pub use weight::{
    class_partition, decompose, lambda_a, lambda_x, recognize_lambda_a, ClassDecomposition,
    ClassIndex, WeightError, WeightMultiset,
};

/// Degree parameter actually governing the classical formulas: `n` when
/// `n` is odd, `n/2` when `n` is even.
///
/// Several maps defined for the `n`-fold cover only depend on `n` through
/// this value; computing it in one place keeps the case splits consistent.
pub fn n_star(n: u32) -> u32 {
    assert!(n >= 1, "cover degree must be positive");
    if n.is_multiple_of(2) {
        n / 2
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::n_star;

    #[test]
    fn n_star_halves_even_degrees_only() {
        let expected = [
            (1, 1),
            (2, 1),
            (3, 3),
            (4, 2),
            (5, 5),
            (6, 3),
            (7, 7),
            (8, 4),
        ];
        for (n, want) in expected {
            assert_eq!(n_star(n), want, "n = {n}");
        }
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn n_star_rejects_zero() {
        n_star(0);
    }
}
