//! Robinson–Schensted row insertion over exact rationals, and its closed
//! form on non-increasing sequences.
//!
//! Row insertion builds a semistandard tableau (rows weakly increasing
//! left to right, columns strictly increasing top to bottom) one entry at
//! a time: the new value bumps the leftmost entry strictly greater than
//! itself in the first row, the bumped value does the same in the second
//! row, and so on until a value lands at the end of a row.
//!
//! For a *non-increasing* input sequence the result depends only on the
//! multiset of values: if the distinct values are `v_1 > v_2 > … > v_s`
//! with multiplicities `r_1, …, r_s`, then column `j` of the tableau
//! consists of the values with multiplicity at least `j`, sorted
//! increasingly top to bottom, and the shape is the transpose of the
//! sorted multiplicity vector.  [`rs_shape_closed_form`] implements that
//! description directly; the test suite replays the same multisets
//! through [`rs_insert`] and demands identical tableaux.
//!
//! Entries are exact rationals ([`num_rational::Rational64`]) because the
//! sequences fed in downstream are weight multisets with denominators
//! dividing twice a cover degree; floating point would make the equality
//! comparisons meaningless.

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::partition::Partition;

/// Errors from the closed-form constructor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RsError {
    /// The `(value, multiplicity)` list must be strictly decreasing in value.
    #[error("values must be strictly decreasing: {prev} precedes {next}")]
    NotStrictlyDecreasing { prev: Rational64, next: Rational64 },
    /// Multiplicities must be positive.
    #[error("multiplicity of {value} must be positive")]
    ZeroMultiplicity { value: Rational64 },
}

/// A semistandard tableau: rows weakly increase, columns strictly
/// increase, row lengths weakly decrease.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<Rational64>>,
}

impl Tableau {
    /// The empty tableau.
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// The rows, top to bottom.
    pub fn rows(&self) -> &[Vec<Rational64>] {
        &self.rows
    }

    /// Whether the tableau has no cells.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of cells.
    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The shape: row lengths, top to bottom.
    pub fn shape(&self) -> Partition {
        let lengths = self.rows.iter().map(|row| row.len() as u32).collect();
        Partition::new(lengths).expect("row lengths of a tableau weakly decrease")
    }

    /// All entries as a sorted (non-increasing) vector, for multiset
    /// comparisons.
    pub fn entries_sorted(&self) -> Vec<Rational64> {
        let mut all: Vec<Rational64> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("(empty tableau)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, entry) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{entry}")?;
            }
        }
        Ok(())
    }
}

/// Row-inserts the sequence into an initially empty tableau.
pub fn rs_insert(sequence: &[Rational64]) -> Tableau {
    let mut rows: Vec<Vec<Rational64>> = Vec::new();
    for &value in sequence {
        let mut carry = value;
        let mut level = 0;
        loop {
            if level == rows.len() {
                rows.push(vec![carry]);
                break;
            }
            let row = &mut rows[level];
            // Leftmost entry strictly greater than the carried value.
            match row.iter().position(|&e| e > carry) {
                Some(pos) => {
                    std::mem::swap(&mut row[pos], &mut carry);
                    level += 1;
                }
                None => {
                    row.push(carry);
                    break;
                }
            }
        }
    }
    Tableau { rows }
}

/// Builds the insertion tableau of a non-increasing sequence directly
/// from its `(value, multiplicity)` runs, which must be strictly
/// decreasing in value.
///
/// Returns the shape together with the tableau; the shape equals the
/// transpose of the multiplicities sorted decreasingly.
pub fn rs_shape_closed_form(values: &[(Rational64, u32)]) -> Result<(Partition, Tableau), RsError> {
    for window in values.windows(2) {
        if window[0].0 <= window[1].0 {
            return Err(RsError::NotStrictlyDecreasing {
                prev: window[0].0,
                next: window[1].0,
            });
        }
    }
    if let Some(&(value, _)) = values.iter().find(|&&(_, mult)| mult == 0) {
        return Err(RsError::ZeroMultiplicity { value });
    }

    let max_mult = values.iter().map(|&(_, m)| m).max().unwrap_or(0);
    // Column j (1-indexed) holds the values with multiplicity >= j,
    // sorted increasingly top to bottom.
    let columns: Vec<Vec<Rational64>> = (1..=max_mult)
        .map(|j| {
            let mut column: Vec<Rational64> = values
                .iter()
                .filter(|&&(_, mult)| mult >= j)
                .map(|&(value, _)| value)
                .collect();
            column.reverse(); // runs are decreasing; columns increase downward
            column
        })
        .collect();

    let row_count = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Rational64>> = (0..row_count)
        .map(|i| {
            columns
                .iter()
                .map_while(|column| column.get(i).copied())
                .collect()
        })
        .collect();

    let tableau = Tableau { rows };
    Ok((tableau.shape(), tableau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(num: i64, den: i64) -> Rational64 {
        Rational64::new(num, den)
    }

    fn int(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn rows(t: &Tableau) -> Vec<Vec<Rational64>> {
        t.rows().to_vec()
    }

    #[test]
    fn insertion_of_decreasing_sequence_stacks_a_column() {
        let t = rs_insert(&[int(1), int(0), int(-1)]);
        assert_eq!(rows(&t), vec![vec![int(-1)], vec![int(0)], vec![int(1)]]);
        assert_eq!(t.shape(), "[1, 1, 1]".parse().unwrap());
    }

    #[test]
    fn insertion_of_empty_sequence_is_empty() {
        let t = rs_insert(&[]);
        assert!(t.is_empty());
        assert_eq!(t.shape(), Partition::empty());
    }

    #[test]
    fn insertion_of_constant_sequence_is_one_row() {
        let t = rs_insert(&[r(1, 2), r(1, 2)]);
        assert_eq!(rows(&t), vec![vec![r(1, 2), r(1, 2)]]);
        assert_eq!(t.shape(), "[2]".parse().unwrap());
    }

    #[test]
    fn closed_form_examples() {
        let (shape, t) = rs_shape_closed_form(&[(int(3), 1), (int(2), 2), (int(1), 1)]).unwrap();
        assert_eq!(shape, "[2, 1, 1]".parse().unwrap());
        assert_eq!(
            rows(&t),
            vec![vec![int(1), int(2)], vec![int(2)], vec![int(3)]]
        );

        let (shape, t) = rs_shape_closed_form(&[(r(5, 3), 4)]).unwrap();
        assert_eq!(shape, "[4]".parse().unwrap());
        assert_eq!(rows(&t), vec![vec![r(5, 3); 4]]);

        let (shape, t) = rs_shape_closed_form(&[(int(1), 1), (int(0), 2), (int(-1), 1)]).unwrap();
        assert_eq!(shape, "[2, 1, 1]".parse().unwrap());
        assert_eq!(
            rows(&t),
            vec![vec![int(-1), int(0)], vec![int(0)], vec![int(1)]]
        );

        let (shape, t) = rs_shape_closed_form(&[]).unwrap();
        assert_eq!(shape, Partition::empty());
        assert!(t.is_empty());
    }

    #[test]
    fn closed_form_rejects_bad_runs() {
        assert_eq!(
            rs_shape_closed_form(&[(int(1), 1), (int(2), 1)]),
            Err(RsError::NotStrictlyDecreasing {
                prev: int(1),
                next: int(2)
            })
        );
        assert_eq!(
            rs_shape_closed_form(&[(int(2), 1), (int(2), 1)]),
            Err(RsError::NotStrictlyDecreasing {
                prev: int(2),
                next: int(2)
            })
        );
        assert_eq!(
            rs_shape_closed_form(&[(int(1), 0)]),
            Err(RsError::ZeroMultiplicity { value: int(1) })
        );
    }

    #[test]
    fn closed_form_matches_insertion_on_small_runs() {
        // Every multiplicity vector of length <= 3 with entries <= 3.
        for r1 in 1..=3u32 {
            for r2 in 0..=3u32 {
                for r3 in 0..=3u32 {
                    if r2 == 0 && r3 > 0 {
                        continue;
                    }
                    let mut runs = vec![(int(2), r1)];
                    if r2 > 0 {
                        runs.push((int(0), r2));
                    }
                    if r3 > 0 {
                        runs.push((int(-5), r3));
                    }
                    let sequence: Vec<Rational64> = runs
                        .iter()
                        .flat_map(|&(value, mult)| std::iter::repeat_n(value, mult as usize))
                        .collect();
                    let (shape, closed) = rs_shape_closed_form(&runs).unwrap();
                    let inserted = rs_insert(&sequence);
                    assert_eq!(closed, inserted, "runs {runs:?}");
                    assert_eq!(shape, inserted.shape(), "runs {runs:?}");
                }
            }
        }
    }

    /// Strategy: a non-increasing sequence of rationals with small
    /// denominators, presented both expanded and as runs.
    fn arb_runs() -> impl Strategy<Value = Vec<(Rational64, u32)>> {
        proptest::collection::vec((-12i64..=12, 1i64..=6, 1u32..=4), 0..=6).prop_map(|raw| {
            let mut values: Vec<(Rational64, u32)> = Vec::new();
            for (num, den, mult) in raw {
                values.push((Rational64::new(num, den), mult));
            }
            values.sort_by_key(|&(value, _)| std::cmp::Reverse(value));
            // Merge duplicate values into single runs.
            let mut runs: Vec<(Rational64, u32)> = Vec::new();
            for (value, mult) in values {
                match runs.last_mut() {
                    Some((prev, m)) if *prev == value => *m += mult,
                    _ => runs.push((value, mult)),
                }
            }
            runs
        })
    }

    proptest! {
        #[test]
        fn closed_form_matches_insertion(runs in arb_runs()) {
            let sequence: Vec<Rational64> = runs
                .iter()
                .flat_map(|&(value, mult)| std::iter::repeat_n(value, mult as usize))
                .collect();
            let (shape, closed) = rs_shape_closed_form(&runs).unwrap();
            let inserted = rs_insert(&sequence);
            prop_assert_eq!(&closed, &inserted);
            prop_assert_eq!(shape.size() as usize, sequence.len());
            prop_assert_eq!(closed.entries_sorted(), inserted.entries_sorted());
        }

        #[test]
        fn insertion_preserves_cells_and_entries(raw in proptest::collection::vec((-9i64..=9, 1i64..=4), 0..=12)) {
            let sequence: Vec<Rational64> =
                raw.into_iter().map(|(num, den)| Rational64::new(num, den)).collect();
            let t = rs_insert(&sequence);
            prop_assert_eq!(t.cell_count(), sequence.len());
            let mut sorted = sequence.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(t.entries_sorted(), sorted);
            // Tableau validity: rows weakly increase, columns strictly increase.
            for row in t.rows() {
                prop_assert!(row.windows(2).all(|w| w[0] <= w[1]));
            }
            for i in 1..t.rows().len() {
                let (upper, lower) = (&t.rows()[i - 1], &t.rows()[i]);
                prop_assert!(lower.len() <= upper.len());
                for j in 0..lower.len() {
                    prop_assert!(upper[j] < lower[j]);
                }
            }
        }
    }
}
