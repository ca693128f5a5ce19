//! Property-verification sweeps over the whole library.
//!
//! Nine named suites re-check the identities behind the covering
//! Barbasch–Vogan duality at configurable desk scale: exhaustive
//! partition sweeps where a statement is universal, seeded random
//! sampling where the input space is too large to enumerate. Each suite
//! returns a [`SuiteReport`] counting the cases checked and recording
//! counterexamples with their full inputs, so any failure is directly
//! reproducible from the report alone.
//!
//! The suites:
//!
//! * `comparison` — the closed-form duality agrees with the
//!   annihilator-partition path on every valid input.
//! * `achar` — the six Achar-style collapse identities.
//! * `order` — duality reverses the dominance order.
//! * `induction` — compatibility with saturation/induction on seeded
//!   random triples.
//! * `collapse-oracle` — greedy collapse equals the brute-force
//!   dominance-maximum oracle, plus the two-row D-collapse case split.
//! * `rs` — the closed-form insertion shape equals direct
//!   Robinson–Schensted insertion, and the weight-multiset recognition
//!   round trip.
//! * `specialize` — degree-1 closed forms, the metaplectic degree-2
//!   identity, and very-even label transport.
//! * `tables` — exceptional-table spot checks, the zero-orbit rule,
//!   row counts, coverage, and stabilization thresholds.
//! * `speh` — the Speh-representation wavefront formula against its
//!   type-A cross-check.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::duality::{
    d_com, d_com_a, d_com_b, d_com_c, d_com_d, d_via_ap, induce, metaplectic_d_c, saturate,
    speh_wavefront, ClassicalContext, DualityError, LabeledOrbit, SpehDatum,
};
use crate::exceptional::{ExceptionalGroup, ExceptionalTables, OrbitLabel};
use crate::partition::{partitions_of, Partition, TypeLetter, VeryEvenLabel};
use crate::rs::{rs_insert, rs_shape_closed_form};
use crate::weight::{lambda_a, recognize_lambda_a};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED_CAFE;

/// How many counterexamples a report keeps verbatim; the failure count
/// is always exact.
const MAX_RECORDED: usize = 25;

/// A named verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Closed-form duality versus the annihilator-partition path.
    Comparison,
    /// The six Achar-style collapse identities.
    Achar,
    /// Dominance-order reversal.
    Order,
    /// Compatibility with saturation/induction.
    Induction,
    /// Greedy collapse versus the dominance-maximum oracle.
    CollapseOracle,
    /// Robinson–Schensted closed form and weight recognition.
    Rs,
    /// Degree-1/degree-2 specializations and very-even labels.
    Specialize,
    /// Exceptional duality tables.
    Tables,
    /// Speh wavefront formula.
    Speh,
}

impl Suite {
    /// Every suite, in canonical reporting order.
    pub const ALL: [Suite; 9] = [
        Suite::Comparison,
        Suite::Achar,
        Suite::Order,
        Suite::Induction,
        Suite::CollapseOracle,
        Suite::Rs,
        Suite::Specialize,
        Suite::Tables,
        Suite::Speh,
    ];

    /// The suite's command-line name.
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Comparison => "comparison",
            Suite::Achar => "achar",
            Suite::Order => "order",
            Suite::Induction => "induction",
            Suite::CollapseOracle => "collapse-oracle",
            Suite::Rs => "rs",
            Suite::Specialize => "specialize",
            Suite::Tables => "tables",
            Suite::Speh => "speh",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown suite {s:?}; expected one of comparison, achar, order, induction, \
                     collapse-oracle, rs, specialize, tables, speh, all"
                )
            })
    }
}

/// Bounds and seeding for the sweeps.
///
/// `max_size` caps the partition size in exhaustive sweeps and serves as
/// the `|p| + 2|q|` budget in the induction suite; `n_max` caps the
/// cover degree; `samples` sizes the randomized suites; `types` selects
/// which duality letters the letter-indexed suites visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest partition size swept exhaustively.
    pub max_size: u32,
    /// Largest cover degree swept.
    pub n_max: u32,
    /// Sample count for the randomized suites.
    pub samples: u32,
    /// Seed for the randomized suites.
    pub seed: u64,
    /// Duality letters visited by the letter-indexed suites.
    pub types: Vec<TypeLetter>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_size: 10,
            n_max: 5,
            samples: 500,
            seed: DEFAULT_SEED,
            types: TypeLetter::ALL.to_vec(),
        }
    }
}

/// One failing case, with enough context to replay it by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// The full input (partition, degree, letter, seed index, ...).
    pub input: String,
    /// What the left-hand side evaluated to.
    pub lhs: String,
    /// What the right-hand side evaluated to.
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input: {}  lhs: {}  rhs: {}",
            self.input, self.lhs, self.rhs
        )
    }
}

/// The outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    /// Which suite ran.
    pub suite: Suite,
    /// How many cases were checked.
    pub cases: u64,
    /// Exact number of failing cases (recorded examples are capped).
    pub failures: u64,
    /// Up to [`MAX_RECORDED`] failing cases, in discovery order.
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    /// Whether every case passed.
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: {} cases, pass", self.suite, self.cases)
        } else {
            write!(
                f,
                "{}: {} cases, FAIL ({} counterexamples)",
                self.suite, self.cases, self.failures
            )
        }
    }
}

/// Accumulates cases and counterexamples for one suite.
struct ReportBuilder {
    suite: Suite,
    cases: u64,
    failures: u64,
    examples: Vec<Counterexample>,
}

impl ReportBuilder {
    fn new(suite: Suite) -> Self {
        ReportBuilder {
            suite,
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    /// Records one case; `make` is evaluated only on failure.
    fn case(&mut self, ok: bool, make: impl FnOnce() -> Counterexample) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_RECORDED {
                self.examples.push(make());
            }
        }
    }

    /// Records a case whose two sides came from fallible pipelines: any
    /// error counts as a failure, otherwise the sides must be equal.
    fn equation<T: PartialEq + fmt::Display, E: fmt::Display>(
        &mut self,
        input: impl fmt::Display,
        outcome: Result<(T, T), E>,
    ) {
        match outcome {
            Ok((lhs, rhs)) => {
                let ok = lhs == rhs;
                self.case(ok, || Counterexample {
                    input: input.to_string(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            Err(e) => self.case(false, || Counterexample {
                input: input.to_string(),
                lhs: format!("error: {e}"),
                rhs: String::new(),
            }),
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            cases: self.cases,
            failures: self.failures,
            counterexamples: self.examples,
        }
    }
}

/// Runs one suite and reports the outcome.
pub fn run_suite(suite: Suite, cfg: &SweepConfig, tables: &ExceptionalTables) -> SuiteReport {
    let mut rb = ReportBuilder::new(suite);
    match suite {
        Suite::Comparison => run_comparison(cfg, &mut rb),
        Suite::Achar => run_achar(cfg, &mut rb),
        Suite::Order => run_order(cfg, &mut rb),
        Suite::Induction => run_induction(cfg, &mut rb),
        Suite::CollapseOracle => run_collapse_oracle(cfg, &mut rb),
        Suite::Rs => run_rs(cfg, &mut rb),
        Suite::Specialize => run_specialize(cfg, &mut rb),
        Suite::Tables => run_tables(tables, &mut rb),
        Suite::Speh => run_speh(cfg, &mut rb),
    }
    rb.finish()
}

/// Runs every suite in canonical order.
pub fn run_all(cfg: &SweepConfig, tables: &ExceptionalTables) -> Vec<SuiteReport> {
    Suite::ALL
        .into_iter()
        .map(|suite| run_suite(suite, cfg, tables))
        .collect()
}

/// Nonempty valid inputs of the given size for a duality context.
fn valid_inputs(ctx: ClassicalContext, size: u32) -> Vec<Partition> {
    if size == 0 {
        return Vec::new();
    }
    let input_type = ctx.input_type();
    partitions_of(size)
        .into_iter()
        .filter(|p| p.is_type(input_type))
        .collect()
}

// --- comparison ---------------------------------------------------------

fn run_comparison(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    for &letter in &cfg.types {
        for n in 1..=cfg.n_max {
            let ctx = ClassicalContext::new(letter, n);
            for size in 1..=cfg.max_size {
                for p in valid_inputs(ctx, size) {
                    let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                        let closed = d_com(&LabeledOrbit::unlabeled(p.clone()), ctx)?;
                        let via_ap = d_via_ap(&p, ctx)?;
                        Ok((closed.partition().clone(), via_ap))
                    })();
                    rb.equation(format!("{ctx} p={p}"), outcome);
                }
            }
        }
    }
}

// --- achar --------------------------------------------------------------

/// The two sides of an identity evaluated at one input, either of which
/// may fail to be defined.
type IdentitySides = Result<(Partition, Partition), DualityError>;

/// One two-sided collapse identity: the input type it applies to, extra
/// side conditions, and the two pipelines to compare.
struct CollapseIdentity {
    name: &'static str,
    input_type: TypeLetter,
    applies: fn(&Partition, u32) -> bool,
    eval: fn(&Partition, u32) -> IdentitySides,
}

fn collapse_identities() -> [CollapseIdentity; 6] {
    use TypeLetter::{B, C, D};
    [
        CollapseIdentity {
            name: "minus-collapse-C",
            input_type: B,
            applies: |_, _| true,
            eval: |p, n| {
                let lhs = d_com_a(&p.minus_one()?.collapse(C)?, n).collapse(C)?;
                let rhs = d_com_a(p, n).minus_one()?.collapse(C)?;
                Ok((lhs, rhs))
            },
        },
        CollapseIdentity {
            name: "D-collapse-inside",
            input_type: C,
            applies: |_, _| true,
            eval: |p, n| {
                let lhs = d_com_a(&p.collapse(D)?, n).collapse(C)?;
                let rhs = d_com_a(p, n).plus_minus()?.collapse(C)?;
                Ok((lhs, rhs))
            },
        },
        CollapseIdentity {
            name: "minus-B-plus",
            input_type: C,
            applies: |p, n| p.len() % 2 == 1 && n % 2 == 1,
            eval: |p, n| {
                let lhs = d_com_a(&p.minus_one()?.collapse(B)?, n)
                    .plus_one()?
                    .collapse(C)?;
                let rhs = d_com_a(p, n).plus_minus()?.collapse(C)?;
                Ok((lhs, rhs))
            },
        },
        CollapseIdentity {
            name: "plus-B-collapse",
            input_type: C,
            applies: |_, n| n % 2 == 1,
            eval: |p, n| {
                let lhs = d_com_a(&p.plus_one()?.collapse(B)?, n).collapse(B)?;
                let rhs = d_com_a(p, n).plus_one()?.collapse(B)?;
                Ok((lhs, rhs))
            },
        },
        CollapseIdentity {
            name: "plusminus-D-plus",
            input_type: C,
            applies: |p, n| p.len() % 2 == 0 && n % 2 == 1,
            eval: |p, n| {
                let lhs = d_com_a(&p.plus_minus()?.collapse(D)?, n)
                    .plus_one()?
                    .collapse(B)?;
                let rhs = d_com_a(p, n).plus_one()?.collapse(B)?;
                Ok((lhs, rhs))
            },
        },
        CollapseIdentity {
            name: "plusminus-C-collapse-D",
            input_type: D,
            applies: |_, n| n % 2 == 1,
            eval: |p, n| {
                let lhs = d_com_a(&p.plus_minus()?.collapse(C)?, n).collapse(D)?;
                let rhs = d_com_a(p, n).collapse(D)?;
                Ok((lhs, rhs))
            },
        },
    ]
}

fn run_achar(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    for identity in collapse_identities() {
        for n in 1..=cfg.n_max {
            for size in 1..=cfg.max_size {
                for p in partitions_of(size) {
                    if !p.is_type(identity.input_type) || !(identity.applies)(&p, n) {
                        continue;
                    }
                    let outcome = (identity.eval)(&p, n);
                    rb.equation(format!("{} n={n} p={p}", identity.name), outcome);
                }
            }
        }
    }
}

// --- order --------------------------------------------------------------

fn run_order(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    for &letter in &cfg.types {
        for n in 1..=cfg.n_max {
            let ctx = ClassicalContext::new(letter, n);
            for size in 1..=cfg.max_size {
                let inputs = valid_inputs(ctx, size);
                let duals: Vec<Option<Partition>> = inputs
                    .iter()
                    .map(|p| {
                        d_com(&LabeledOrbit::unlabeled(p.clone()), ctx)
                            .ok()
                            .map(|orbit| orbit.partition().clone())
                    })
                    .collect();
                for (i, p) in inputs.iter().enumerate() {
                    for (j, q) in inputs.iter().enumerate() {
                        if i == j || !p.dominance_le(q).unwrap_or(false) {
                            continue;
                        }
                        let ok = match (&duals[i], &duals[j]) {
                            (Some(dp), Some(dq)) => dq.dominance_le(dp).unwrap_or(false),
                            _ => false,
                        };
                        rb.case(ok, || Counterexample {
                            input: format!("{ctx} p={p} <= q={q}"),
                            lhs: match &duals[j] {
                                Some(dq) => format!("d(q)={dq}"),
                                None => "d(q)=error".to_owned(),
                            },
                            rhs: match &duals[i] {
                                Some(dp) => format!("d(p)={dp} (expected d(q) <= d(p))"),
                                None => "d(p)=error".to_owned(),
                            },
                        });
                    }
                }
            }
        }
    }
}

// --- induction ----------------------------------------------------------

fn run_induction(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    let letters: Vec<TypeLetter> = cfg
        .types
        .iter()
        .copied()
        .filter(|&l| l != TypeLetter::A)
        .collect();
    if letters.is_empty() {
        return;
    }
    let budget = cfg.max_size.max(3);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for sample in 0..cfg.samples {
        let letter = letters[rng.gen_range(0..letters.len())];
        let n = rng.gen_range(1..=cfg.n_max.max(1));
        let ctx = ClassicalContext::new(letter, n);

        // Leave room for a nonempty p: |p| + 2|q| <= budget.
        let q_size = rng.gen_range(0..=(budget - 2) / 2);
        let p_budget = budget - 2 * q_size;
        let p_size_drawn = rng.gen_range(1..=p_budget);

        let q = if q_size == 0 {
            Partition::empty()
        } else {
            let candidates = partitions_of(q_size);
            candidates[rng.gen_range(0..candidates.len())].clone()
        };

        // Scan to the nearest size with a valid nonempty input: downward
        // first, then upward. Size 1 (type B) or 2 (types C, D) always
        // has one, and the budget leaves room for size 2.
        let mut p_choice = None;
        for p_size in (1..=p_size_drawn).rev().chain(p_size_drawn + 1..=p_budget) {
            let candidates = valid_inputs(ctx, p_size);
            if !candidates.is_empty() {
                p_choice = Some(candidates[rng.gen_range(0..candidates.len())].clone());
                break;
            }
        }
        let Some(p) = p_choice else {
            continue;
        };

        let outcome = (|| -> Result<(Partition, Partition), DualityError> {
            let saturated = saturate(&p, &q);
            let lhs = d_com(&LabeledOrbit::unlabeled(saturated), ctx)?;
            let base = d_com(&LabeledOrbit::unlabeled(p.clone()), ctx)?;
            let q_dual = d_com_a(&q, ctx.n_star());
            let rhs = induce(base.partition(), &q_dual, letter)?;
            Ok((lhs.partition().clone(), rhs))
        })();
        rb.equation(format!("sample={sample} {ctx} p={p} q={q}"), outcome);
    }
}

// --- collapse-oracle ----------------------------------------------------

/// Brute-force collapse: the dominance-maximum over every dominated
/// partition of the same size and type.
fn oracle_collapse(p: &Partition, letter: TypeLetter) -> Option<Partition> {
    let candidates: Vec<Partition> = partitions_of(p.size())
        .into_iter()
        .filter(|c| c.is_type(letter) && c.dominance_le(p).unwrap_or(false))
        .collect();
    candidates
        .iter()
        .find(|best| {
            candidates
                .iter()
                .all(|other| other.dominance_le(best).unwrap_or(false))
        })
        .cloned()
}

fn run_collapse_oracle(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    use TypeLetter::{B, C, D};
    for letter in [B, C, D] {
        if !cfg.types.contains(&letter) {
            continue;
        }
        for size in 1..=cfg.max_size {
            // Sizes of the wrong parity admit no type-`letter` partition.
            if (letter == B) != (size % 2 == 1) {
                continue;
            }
            for p in partitions_of(size) {
                let outcome = (|| -> Result<(Partition, Partition), String> {
                    let greedy = p.collapse(letter).map_err(|e| e.to_string())?;
                    let oracle = oracle_collapse(&p, letter)
                        .ok_or_else(|| "oracle found no dominance maximum".to_owned())?;
                    Ok((greedy, oracle))
                })();
                rb.equation(format!("collapse {letter} p={p}"), outcome);
            }
        }
    }
    if !cfg.types.contains(&D) {
        return;
    }
    // Two-row D-collapse case split: (p ⊔ [b,b])_D is p_D ⊔ [b,b]
    // except when b is even, p has no part b, and the parts above b
    // have odd count-plus-sum, where it is p_D ⊔ [b+1, b-1].
    for size in (0..=cfg.max_size).step_by(2) {
        for p in partitions_of(size) {
            for b in 1..=6u32 {
                let outcome = (|| -> Result<(Partition, Partition), String> {
                    let two_row = Partition::new(vec![b, b]).map_err(|e| e.to_string())?;
                    let lhs = p
                        .disjoint_union(&two_row)
                        .collapse(D)
                        .map_err(|e| e.to_string())?;
                    let above: Vec<u32> =
                        p.parts().iter().copied().filter(|&part| part > b).collect();
                    let exceptional = b % 2 == 0
                        && p.multiplicity(b) == 0
                        && (above.len() as u32 + above.iter().sum::<u32>()) % 2 == 1;
                    let collapsed = p.collapse(D).map_err(|e| e.to_string())?;
                    let tail = if exceptional {
                        Partition::new(vec![b + 1, b - 1]).map_err(|e| e.to_string())?
                    } else {
                        two_row
                    };
                    Ok((lhs, collapsed.disjoint_union(&tail)))
                })();
                rb.equation(format!("two-row D-collapse p={p} b={b}"), outcome);
            }
        }
    }
}

// --- rs -----------------------------------------------------------------

fn run_rs(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for sample in 0..cfg.samples {
        let len = rng.gen_range(0..=12usize);
        let mut values: Vec<Rational64> = (0..len)
            .map(|_| {
                let numer = rng.gen_range(-12i64..=12);
                let denom = rng.gen_range(1i64..=6);
                Rational64::new(numer, denom)
            })
            .collect();
        values.sort_unstable_by(|a, b| b.cmp(a));

        let mut runs: Vec<(Rational64, u32)> = Vec::new();
        for &value in &values {
            match runs.last_mut() {
                Some((prev, mult)) if *prev == value => *mult += 1,
                _ => runs.push((value, 1)),
            }
        }

        let outcome = (|| -> Result<(String, String), String> {
            let (shape, closed) = rs_shape_closed_form(&runs).map_err(|e| e.to_string())?;
            let direct = rs_insert(&values);
            let lhs = format!("shape={shape} tableau={closed}");
            let rhs = format!("shape={} tableau={direct}", direct.shape());
            Ok((lhs, rhs))
        })();
        let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        rb.equation(
            format!("sample={sample} sequence=[{}]", rendered.join(", ")),
            outcome,
        );
    }

    // Weight-multiset recognition round trip.
    for n in 1..=cfg.n_max {
        for size in 0..=cfg.max_size {
            for p in partitions_of(size) {
                let lam = lambda_a(&p, n);
                let recognized = recognize_lambda_a(&lam, n);
                let ok = recognized.as_ref() == Some(&p);
                rb.case(ok, || Counterexample {
                    input: format!("recognition n={n} p={p} lambda={lam}"),
                    lhs: match recognized {
                        Some(r) => r.to_string(),
                        None => "not recognized".to_owned(),
                    },
                    rhs: p.to_string(),
                });
            }
        }
    }
}

// --- specialize ---------------------------------------------------------

fn run_specialize(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    use TypeLetter::{A, B, C, D};
    for size in 1..=cfg.max_size {
        for p in partitions_of(size) {
            if cfg.types.contains(&A) {
                let outcome: Result<_, DualityError> = Ok((d_com_a(&p, 1), p.transpose()));
                rb.equation(format!("degree-1 A p={p}"), outcome);
            }
            if cfg.types.contains(&B) && p.is_type(C) {
                let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                    Ok((d_com_b(&p, 1)?, p.transpose().plus_one()?.collapse(B)?))
                })();
                rb.equation(format!("degree-1 B p={p}"), outcome);
            }
            if cfg.types.contains(&C) && p.is_type(B) {
                let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                    Ok((d_com_c(&p, 1)?, p.minus_one()?.collapse(C)?.transpose()))
                })();
                rb.equation(format!("degree-1 C p={p}"), outcome);
            }
            if cfg.types.contains(&D) && p.is_type(D) {
                let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                    let closed = d_com_d(&LabeledOrbit::unlabeled(p.clone()), 1)?;
                    Ok((closed.partition().clone(), p.transpose().collapse(D)?))
                })();
                rb.equation(format!("degree-1 D p={p}"), outcome);
            }
            if cfg.types.contains(&C) && p.is_type(C) {
                let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                    Ok((d_com_c(&p, 2)?, metaplectic_d_c(&p)?))
                })();
                rb.equation(format!("metaplectic closed-form p={p}"), outcome);
                let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                    Ok((metaplectic_d_c(&p)?, p.collapse(D)?.transpose()))
                })();
                rb.equation(format!("metaplectic transpose p={p}"), outcome);
            }
        }
    }

    if cfg.types.contains(&D) {
        // Very-even label transport: preserved when size/4 is even,
        // swapped when odd.
        let cases = [
            (vec![2, 2, 2, 2], VeryEvenLabel::I, VeryEvenLabel::I),
            (vec![2, 2, 2, 2], VeryEvenLabel::II, VeryEvenLabel::II),
            (vec![2, 2, 2, 2, 2, 2], VeryEvenLabel::I, VeryEvenLabel::II),
            (vec![2, 2, 2, 2, 2, 2], VeryEvenLabel::II, VeryEvenLabel::I),
        ];
        for (parts, label, expected) in cases {
            let outcome = (|| -> Result<(String, String), DualityError> {
                let p = Partition::new(parts.clone())?;
                let orbit = LabeledOrbit::new(p, Some(label))?;
                let dual = d_com_d(&orbit, 1)?;
                let lhs = dual.to_string();
                let rhs = format!("{}^{expected}", dual.partition());
                Ok((lhs, rhs))
            })();
            rb.equation(format!("label transport [{parts:?}]^{label}"), outcome);
        }
    }
}

// --- tables -------------------------------------------------------------

fn run_tables(tables: &ExceptionalTables, rb: &mut ReportBuilder) {
    use ExceptionalGroup::{E6, E7, E8, F4, G2};

    let lookup_checks: [(ExceptionalGroup, &str, u32, &str); 14] = [
        (G2, "G2", 1, "0"),
        (G2, "G2", 2, "A~1"),
        (G2, "G2", 3, "A1"),
        (G2, "G2", 4, "G2(a1)"),
        (G2, "G2", 7, "G2"),
        (F4, "F4", 3, "A~2+A1"),
        (F4, "C3", 8, "F4(a1)"),
        (E6, "E6", 8, "D5"),
        (E7, "E7", 18, "E7"),
        (E8, "E8", 2, "4A1"),
        (E8, "E8", 7, "A6+A1"),
        (E8, "E8", 9, "E8(b6)"),
        (E8, "E8", 24, "E8(a1)"),
        (E8, "E8", 30, "E8"),
    ];
    for (group, source, n, expected) in lookup_checks {
        let outcome = (|| -> Result<(String, String), String> {
            let orbit = OrbitLabel::new(source).map_err(|e| e.to_string())?;
            let found = tables.lookup(group, &orbit, n).map_err(|e| e.to_string())?;
            Ok((found.to_string(), expected.to_owned()))
        })();
        rb.equation(format!("lookup {group} {source} n={n}"), outcome);
    }

    let threshold_checks: [(ExceptionalGroup, &str, u32); 4] = [
        (E8, "E8", 30),
        (G2, "A1", 2),
        (E7, "E7", 18),
        (G2, "G2", 10),
    ];
    for (group, source, expected) in threshold_checks {
        let outcome = (|| -> Result<(u32, u32), String> {
            let orbit = OrbitLabel::new(source).map_err(|e| e.to_string())?;
            let found = tables
                .stabilization_threshold(group, &orbit)
                .map_err(|e| e.to_string())?;
            Ok((found, expected))
        })();
        rb.equation(format!("threshold {group} {source}"), outcome);
    }

    // The zero orbit dualizes to the regular orbit at every degree.
    for group in ExceptionalGroup::ALL {
        let regular = group.regular_label();
        for n in 1..=40 {
            let outcome = (|| -> Result<(String, String), String> {
                let zero = OrbitLabel::new("0").map_err(|e| e.to_string())?;
                let found = tables.lookup(group, &zero, n).map_err(|e| e.to_string())?;
                Ok((found.to_string(), regular.to_string()))
            })();
            rb.equation(format!("zero orbit {group} n={n}"), outcome);
        }
    }

    // Row counts, full coverage of every degree, and regular tails.
    for group in ExceptionalGroup::ALL {
        let rows = tables.rows(group);
        rb.equation::<usize, String>(
            format!("row count {group}"),
            Ok((rows.len(), group.orbit_count())),
        );
        let regular = group.regular_label();
        for row in rows {
            let rule = row.rule();
            rb.equation::<String, String>(
                format!("tail {group} {}", row.source()),
                Ok((rule.tail_label().to_string(), regular.to_string())),
            );
            let horizon = rule.tail_start() + 5;
            let covered_once = (1..=horizon).all(|n| {
                rule.clauses()
                    .iter()
                    .filter(|(cond, _)| cond.matches(n))
                    .count()
                    == 1
            });
            rb.case(covered_once, || Counterexample {
                input: format!("coverage {group} {}", row.source()),
                lhs: format!("rule {}", rule),
                rhs: format!("every 1 <= n <= {horizon} matched exactly once"),
            });
        }
    }
}

// --- speh ---------------------------------------------------------------

fn run_speh(cfg: &SweepConfig, rb: &mut ReportBuilder) {
    let _ = cfg;
    for r0 in 1..=4u32 {
        for m in 1..=4u32 {
            for n0 in 1..=8u32 {
                if m * n0 > 8 {
                    continue;
                }
                for c in 0..=4u32 {
                    for d in 0..=4u32.min(n0 - 1) {
                        let k = c * n0 + d;
                        if k == 0 {
                            continue;
                        }
                        let n = m * n0;
                        let outcome = (|| -> Result<(Partition, Partition), DualityError> {
                            let datum = SpehDatum::new(r0, m, k, n)?;
                            let lhs = speh_wavefront(&datum);
                            let rectangle = Partition::new(vec![m * k; r0 as usize])?;
                            let rhs = d_com_a(&rectangle, n);
                            Ok((lhs, rhs))
                        })();
                        rb.equation(format!("speh r0={r0} m={m} k={k} n={n}"), outcome);
                    }
                }
            }
        }
    }

    // Pinned instance.
    let outcome = (|| -> Result<(Partition, Partition), DualityError> {
        let datum = SpehDatum::new(1, 2, 5, 6)?;
        Ok((speh_wavefront(&datum), Partition::new(vec![6, 4])?))
    })();
    rb.equation("speh r0=1 m=2 k=5 n=6 pinned", outcome);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> SweepConfig {
        SweepConfig {
            max_size: 8,
            n_max: 3,
            samples: 60,
            seed: DEFAULT_SEED,
            types: TypeLetter::ALL.to_vec(),
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
        assert!("all".parse::<Suite>().is_err());
    }

    #[test]
    fn comparison_suite_passes_at_small_scale() {
        let report = run_suite(
            Suite::Comparison,
            &small_config(),
            ExceptionalTables::embedded(),
        );
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn achar_suite_passes_at_small_scale() {
        let report = run_suite(Suite::Achar, &small_config(), ExceptionalTables::embedded());
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn order_suite_passes_at_small_scale() {
        let report = run_suite(Suite::Order, &small_config(), ExceptionalTables::embedded());
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn induction_suite_passes_at_small_scale() {
        let mut cfg = small_config();
        cfg.max_size = 14;
        let report = run_suite(Suite::Induction, &cfg, ExceptionalTables::embedded());
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert_eq!(report.cases, u64::from(cfg.samples));
    }

    #[test]
    fn collapse_oracle_suite_passes_at_small_scale() {
        let report = run_suite(
            Suite::CollapseOracle,
            &small_config(),
            ExceptionalTables::embedded(),
        );
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn rs_suite_passes_at_small_scale() {
        let report = run_suite(Suite::Rs, &small_config(), ExceptionalTables::embedded());
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn specialize_suite_passes_at_small_scale() {
        let report = run_suite(
            Suite::Specialize,
            &small_config(),
            ExceptionalTables::embedded(),
        );
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn tables_suite_passes_on_embedded_data() {
        let report = run_suite(
            Suite::Tables,
            &small_config(),
            ExceptionalTables::embedded(),
        );
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn speh_suite_passes() {
        let report = run_suite(Suite::Speh, &small_config(), ExceptionalTables::embedded());
        assert!(report.passed(), "{report}: {:?}", report.counterexamples);
        assert!(report.cases > 0);
    }

    #[test]
    fn run_all_covers_every_suite_in_order() {
        let mut cfg = small_config();
        cfg.max_size = 6;
        cfg.samples = 20;
        let reports = run_all(&cfg, ExceptionalTables::embedded());
        let names: Vec<&str> = reports.iter().map(|r| r.suite.name()).collect();
        assert_eq!(
            names,
            vec![
                "comparison",
                "achar",
                "order",
                "induction",
                "collapse-oracle",
                "rs",
                "specialize",
                "tables",
                "speh"
            ]
        );
        assert!(reports.iter().all(SuiteReport::passed));
    }

    #[test]
    fn identical_seeds_reproduce_reports() {
        let cfg = small_config();
        let tables = ExceptionalTables::embedded();
        let first = run_suite(Suite::Induction, &cfg, tables);
        let second = run_suite(Suite::Induction, &cfg, tables);
        assert_eq!(first, second);
    }

    #[test]
    fn reports_record_failures_without_flooding() {
        let mut rb = ReportBuilder::new(Suite::Rs);
        for i in 0..100 {
            rb.case(false, || Counterexample {
                input: format!("case {i}"),
                lhs: "left".to_owned(),
                rhs: "right".to_owned(),
            });
        }
        let report = rb.finish();
        assert_eq!(report.failures, 100);
        assert_eq!(report.counterexamples.len(), MAX_RECORDED);
        assert!(!report.passed());
        assert_eq!(
            report.to_string(),
            "rs: 100 cases, FAIL (100 counterexamples)"
        );
    }
}
