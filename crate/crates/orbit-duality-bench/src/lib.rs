//! Shared fixtures for the duality benchmarks.

use orbit_duality::Partition;

/// A moderately large partition of the given type-agnostic size, built
/// as a staircase with a long tail of ones — enough structure to make
/// collapses and dualities do real work.
pub fn staircase_with_tail(size: u32) -> Partition {
    let mut parts = Vec::new();
    let mut remaining = size;
    let mut next = 1u32;
    while remaining >= next {
        parts.push(next);
        remaining -= next;
        next += 1;
    }
    parts.extend(std::iter::repeat_n(1, remaining as usize));
    Partition::from_unsorted(parts)
}

/// An even-multiplicity partition of even size: valid input for the
/// type-C and type-D dualities.
pub fn doubled_staircase(half_size: u32) -> Partition {
    let half = staircase_with_tail(half_size);
    half.disjoint_union(&half)
}
