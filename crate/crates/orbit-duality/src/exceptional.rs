//! Duality tables for the five exceptional groups.
//!
//! Nilpotent orbits of an exceptional group are named by Bala–Carter
//! labels, written here in ASCII: a tilde as `~` (`A~1`), primes kept
//! verbatim (`A5'`, `(3A1)''`), sums with `+` (`A4+A1`), and the zero
//! orbit as `0`.  For each group the duality is a finite table: one row
//! per orbit, each row a piecewise-constant rule in the cover degree `n`
//! that eventually stabilizes at the regular orbit (whose label equals
//! the group name).
//!
//! The tables are embedded as a plain-text asset, one row per line:
//!
//! ```text
//! GROUP | ORBIT | cond1 -> label1 ; cond2 -> label2 ; … ; >=N -> REGULAR
//! ```
//!
//! where each condition is a value set `n=a,b,c`, an inclusive range
//! `a..b`, or the final tail `>=N`.  Parsing validates each row — the
//! conditions must cover every `n >= 1` exactly once, the final clause
//! must be the tail, and the tail label must be the regular orbit — and
//! validates each group: the expected number of rows and distinct source
//! labels.  Output labels are stored verbatim from the source tables and
//! are not required to match a source row.
//! [`ExceptionalTables::serialize`] reproduces the asset text exactly,
//! so the embedded data round-trips bit for bit.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

/// The embedded table asset.
const EMBEDDED_TABLES: &str = include_str!("../data/exceptional_duality.txt");

/// The five exceptional simple groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalGroup {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalGroup {
    /// All five groups, in rank order.
    pub const ALL: [ExceptionalGroup; 5] = [
        ExceptionalGroup::G2,
        ExceptionalGroup::F4,
        ExceptionalGroup::E6,
        ExceptionalGroup::E7,
        ExceptionalGroup::E8,
    ];

    /// The group's name, which is also the label of its regular orbit.
    pub fn name(&self) -> &'static str {
        match self {
            ExceptionalGroup::G2 => "G2",
            ExceptionalGroup::F4 => "F4",
            ExceptionalGroup::E6 => "E6",
            ExceptionalGroup::E7 => "E7",
            ExceptionalGroup::E8 => "E8",
        }
    }

    /// The label of the regular nilpotent orbit.
    pub fn regular_label(&self) -> OrbitLabel {
        OrbitLabel(self.name().to_owned())
    }

    /// Number of nilpotent orbits, the zero orbit included.
    pub fn orbit_count(&self) -> usize {
        match self {
            ExceptionalGroup::G2 => 5,
            ExceptionalGroup::F4 => 16,
            ExceptionalGroup::E6 => 21,
            ExceptionalGroup::E7 => 45,
            ExceptionalGroup::E8 => 70,
        }
    }
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionalGroup {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "G2" => Ok(ExceptionalGroup::G2),
            "F4" => Ok(ExceptionalGroup::F4),
            "E6" => Ok(ExceptionalGroup::E6),
            "E7" => Ok(ExceptionalGroup::E7),
            "E8" => Ok(ExceptionalGroup::E8),
            other => Err(TableError::UnknownGroup(other.to_owned())),
        }
    }
}

/// A Bala–Carter label in ASCII form, stored verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel(String);

impl OrbitLabel {
    /// Wraps a label, rejecting text that could not appear in the table
    /// format (empty, or containing the structural characters `|`, `;`,
    /// `->`).
    pub fn new(label: impl Into<String>) -> Result<Self, TableError> {
        let label = label.into();
        let trimmed = label.trim();
        if trimmed.is_empty()
            || trimmed.contains('|')
            || trimmed.contains(';')
            || trimmed.contains("->")
        {
            return Err(TableError::InvalidLabel { label });
        }
        Ok(OrbitLabel(trimmed.to_owned()))
    }

    /// The label text.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for OrbitLabel {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrbitLabel::new(s)
    }
}

/// One condition on the cover degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NCondition {
    /// An explicit value set, written `n=a,b,c`.
    Set(Vec<u32>),
    /// An inclusive range, written `a..b`.
    Range(u32, u32),
    /// All degrees from `N` on, written `>=N`.
    Tail(u32),
}

impl NCondition {
    /// Whether the condition holds at `n`.
    pub fn matches(&self, n: u32) -> bool {
        match self {
            NCondition::Set(values) => values.contains(&n),
            NCondition::Range(lo, hi) => (*lo..=*hi).contains(&n),
            NCondition::Tail(start) => n >= *start,
        }
    }

    /// The values covered by a bounded condition; `None` for the tail.
    fn bounded_values(&self) -> Option<Vec<u32>> {
        match self {
            NCondition::Set(values) => Some(values.clone()),
            NCondition::Range(lo, hi) => Some((*lo..=*hi).collect()),
            NCondition::Tail(_) => None,
        }
    }
}

impl fmt::Display for NCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NCondition::Set(values) => {
                f.write_str("n=")?;
                for (i, value) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{value}")?;
                }
                Ok(())
            }
            NCondition::Range(lo, hi) => write!(f, "{lo}..{hi}"),
            NCondition::Tail(start) => write!(f, ">={start}"),
        }
    }
}

impl FromStr for NCondition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix(">=") {
            let start: u32 = rest
                .trim()
                .parse()
                .map_err(|_| format!("bad tail start in {s:?}"))?;
            return Ok(NCondition::Tail(start));
        }
        if let Some(rest) = s.strip_prefix("n=") {
            let mut values = Vec::new();
            for piece in rest.split(',') {
                let value: u32 = piece
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad set value {piece:?} in {s:?}"))?;
                values.push(value);
            }
            if values.is_empty() {
                return Err(format!("empty value set in {s:?}"));
            }
            return Ok(NCondition::Set(values));
        }
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: u32 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in {s:?}"))?;
            let hi: u32 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in {s:?}"))?;
            if lo > hi {
                return Err(format!("empty range in {s:?}"));
            }
            return Ok(NCondition::Range(lo, hi));
        }
        Err(format!(
            "expected a condition of the form n=a,b,c or a..b or >=N, got {s:?}"
        ))
    }
}

/// A piecewise-constant rule in the cover degree: finitely many bounded
/// clauses followed by a tail.
///
/// A valid rule covers every `n >= 1` exactly once and ends with its
/// only tail clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseRule {
    clauses: Vec<(NCondition, OrbitLabel)>,
}

impl PiecewiseRule {
    /// The clauses, in file order.
    pub fn clauses(&self) -> &[(NCondition, OrbitLabel)] {
        &self.clauses
    }

    /// The label at degree `n`.
    ///
    /// # Panics
    /// Panics if no clause matches; load-time validation makes that
    /// impossible for rules obtained from a parsed table.
    pub fn evaluate(&self, n: u32) -> &OrbitLabel {
        self.clauses
            .iter()
            .find(|(cond, _)| cond.matches(n))
            .map(|(_, label)| label)
            .expect("piecewise clauses cover all n >= 1")
    }

    /// The start of the tail clause.
    pub fn tail_start(&self) -> u32 {
        match self.clauses.last() {
            Some((NCondition::Tail(start), _)) => *start,
            _ => unreachable!("validated rules end with a tail clause"),
        }
    }

    /// The tail label (the regular orbit, for validated rules).
    pub fn tail_label(&self) -> &OrbitLabel {
        &self.clauses.last().expect("validated rules are nonempty").1
    }

    fn validate(&self) -> Result<(), String> {
        let Some(((last_cond, _), bounded)) = self.clauses.split_last() else {
            return Err("rule has no clauses".to_owned());
        };
        let NCondition::Tail(tail_start) = last_cond else {
            return Err("final clause must be a tail (>=N)".to_owned());
        };
        let tail_start = *tail_start;
        let mut covered: Vec<u32> = Vec::new();
        for (cond, _) in bounded {
            match cond.bounded_values() {
                Some(values) => covered.extend(values),
                None => return Err("only the final clause may be a tail".to_owned()),
            }
        }
        covered.sort_unstable();
        let expected: Vec<u32> = (1..tail_start).collect();
        if covered != expected {
            return Err(format!(
                "bounded clauses must cover 1..{} exactly once, got {covered:?}",
                tail_start.saturating_sub(1)
            ));
        }
        Ok(())
    }
}

impl fmt::Display for PiecewiseRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (cond, label)) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{cond} -> {label}")?;
        }
        Ok(())
    }
}

///// One table row: a source orbit and its piecewise rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    source: OrbitLabel,
    rule: PiecewiseRule,
}

impl TableRow {
    /// The source orbit label.
    pub fn source(&self) -> &OrbitLabel {
        &self.source
    }

    /// The rule in `n`.
    pub fn rule(&self) -> &PiecewiseRule {
        &self.rule
    }
}

/// Errors from table parsing, validation, and lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("unknown exceptional group {0:?} (expected G2, F4, E6, E7, or E8)")]
    UnknownGroup(String),
    #[error("no orbit {label:?} in the {group} table")]
    UnknownOrbit {
        group: ExceptionalGroup,
        label: String,
    },
    #[error("invalid orbit label {label:?}")]
    InvalidLabel { label: String },
    #[error("table line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("table validation failed for {group}: {reason}")]
    Invalid {
        group: ExceptionalGroup,
        reason: String,
    },
    #[error("failed to read table file: {0}")]
    Io(String),
}

/// The duality tables for all five exceptional groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalTables {
    groups: Vec<(ExceptionalGroup, Vec<TableRow>)>,
}

impl ExceptionalTables {
    /// Parses and validates the table text.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut groups: Vec<(ExceptionalGroup, Vec<TableRow>)> = Vec::new();
        for (index, raw_line) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |reason: String| TableError::Parse {
                line: line_no,
                reason,
            };
            let mut fields = line.splitn(3, '|');
            let group_text = fields.next().unwrap_or("").trim();
            let orbit_text = fields
                .next()
                .ok_or_else(|| parse_err("missing orbit field".to_owned()))?
                .trim();
            let clauses_text = fields
                .next()
                .ok_or_else(|| parse_err("missing clause field".to_owned()))?
                .trim();

            let group: ExceptionalGroup = group_text
                .parse()
                .map_err(|e: TableError| parse_err(e.to_string()))?;
            let source = OrbitLabel::new(orbit_text).map_err(|e| parse_err(e.to_string()))?;

            let mut clauses = Vec::new();
            for clause_text in clauses_text.split(';') {
                let clause_text = clause_text.trim();
                let (cond_text, label_text) = clause_text
                    .split_once("->")
                    .ok_or_else(|| parse_err(format!("clause {clause_text:?} has no ->")))?;
                let cond: NCondition = cond_text.parse().map_err(parse_err)?;
                let label =
                    OrbitLabel::new(label_text.trim()).map_err(|e| parse_err(e.to_string()))?;
                clauses.push((cond, label));
            }
            let rule = PiecewiseRule { clauses };
            rule.validate().map_err(parse_err)?;

            match groups.last_mut() {
                Some((g, rows)) if *g == group => rows.push(TableRow { source, rule }),
                _ => {
                    if groups.iter().any(|(g, _)| *g == group) {
                        return Err(parse_err(format!("rows for {group} must be contiguous")));
                    }
                    groups.push((group, vec![TableRow { source, rule }]));
                }
            }
        }
        let tables = ExceptionalTables { groups };
        tables.validate()?;
        Ok(tables)
    }

    fn validate(&self) -> Result<(), TableError> {
        for (group, rows) in &self.groups {
            let invalid = |reason: String| TableError::Invalid {
                group: *group,
                reason,
            };
            if rows.len() != group.orbit_count() {
                return Err(invalid(format!(
                    "expected {} rows, found {}",
                    group.orbit_count(),
                    rows.len()
                )));
            }
            let sources: Vec<&OrbitLabel> = rows.iter().map(TableRow::source).collect();
            for (i, source) in sources.iter().enumerate() {
                if sources[..i].contains(source) {
                    return Err(invalid(format!("duplicate row for orbit {source}")));
                }
            }
            let regular = group.regular_label();
            for row in rows {
                if row.rule.tail_label() != &regular {
                    return Err(invalid(format!(
                        "row {} has tail label {}, expected the regular orbit {regular}",
                        row.source,
                        row.rule.tail_label()
                    )));
                }
            }
        }
        for group in ExceptionalGroup::ALL {
            if !self.groups.iter().any(|(g, _)| *g == group) {
                return Err(TableError::Invalid {
                    group,
                    reason: "group missing from table".to_owned(),
                });
            }
        }
        Ok(())
    }

    /// Renders the tables back to the asset text format.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (group, rows) in &self.groups {
            for row in rows {
                out.push_str(&format!("{group} | {} | {}\n", row.source, row.rule));
            }
        }
        out
    }

    /// The tables embedded in the binary.
    ///
    /// # Panics
    /// Panics if the embedded asset fails to parse, which the test suite
    /// rules out.
    pub fn embedded() -> &'static ExceptionalTables {
        static TABLES: OnceLock<ExceptionalTables> = OnceLock::new();
        TABLES.get_or_init(|| {
            ExceptionalTables::parse(EMBEDDED_TABLES)
                .expect("embedded exceptional tables are valid")
        })
    }

    /// The raw text of the embedded asset.
    pub fn embedded_text() -> &'static str {
        EMBEDDED_TABLES
    }

    /// Loads and validates tables from a file, for overriding the
    /// embedded asset.
    pub fn load_from_path(path: &Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path).map_err(|e| TableError::Io(e.to_string()))?;
        ExceptionalTables::parse(&text)
    }

    /// The rows of one group, in table order.
    pub fn rows(&self, group: ExceptionalGroup) -> &[TableRow] {
        self.groups
            .iter()
            .find(|(g, _)| *g == group)
            .map(|(_, rows)| rows.as_slice())
            .expect("validated tables contain all five groups")
    }

    /// The row for one orbit.
    pub fn row(
        &self,
        group: ExceptionalGroup,
        orbit: &OrbitLabel,
    ) -> Result<&TableRow, TableError> {
        self.rows(group)
            .iter()
            .find(|row| row.source() == orbit)
            .ok_or_else(|| TableError::UnknownOrbit {
                group,
                label: orbit.as_str().to_owned(),
            })
    }

    /// The dual orbit of `orbit` at degree `n`.
    pub fn lookup(
        &self,
        group: ExceptionalGroup,
        orbit: &OrbitLabel,
        n: u32,
    ) -> Result<&OrbitLabel, TableError> {
        Ok(self.row(group, orbit)?.rule().evaluate(n))
    }

    /// The least `N` such that the dual is the regular orbit for every
    /// `n >= N`.
    pub fn stabilization_threshold(
        &self,
        group: ExceptionalGroup,
        orbit: &OrbitLabel,
    ) -> Result<u32, TableError> {
        let row = self.row(group, orbit)?;
        let regular = group.regular_label();
        let mut last_non_regular = 0u32;
        for (cond, label) in row.rule().clauses() {
            if label == &regular {
                continue;
            }
            let values = cond
                .bounded_values()
                .expect("non-tail labels are bounded; the tail is regular");
            if let Some(&max) = values.iter().max() {
                last_non_regular = last_non_regular.max(max);
            }
        }
        Ok(last_non_regular + 1)
    }
}

/// The dual orbit of `orbit` in `group` at degree `n`, from the embedded
/// tables.
pub fn d_bv_exceptional(
    group: ExceptionalGroup,
    orbit: &OrbitLabel,
    n: u32,
) -> Result<OrbitLabel, TableError> {
    Ok(ExceptionalTables::embedded()
        .lookup(group, orbit, n)?
        .clone())
}

/// The least degree from which the dual of `orbit` is regular, from the
/// embedded tables.
pub fn stabilization_threshold(
    group: ExceptionalGroup,
    orbit: &OrbitLabel,
) -> Result<u32, TableError> {
    ExceptionalTables::embedded().stabilization_threshold(group, orbit)
}

/// The wavefront-set lookup for a genuine parameter attached to `orbit`:
/// the duality table evaluated at the parameter's own degree `n_alpha`.
///
/// Numerically this agrees with [`d_bv_exceptional`]; it is kept as a
/// separate entry point because callers arrive with a per-parameter
/// degree rather than a fixed cover degree.
pub fn general_q_lookup(
    group: ExceptionalGroup,
    orbit: &OrbitLabel,
    n_alpha: u32,
) -> Result<OrbitLabel, TableError> {
    d_bv_exceptional(group, orbit, n_alpha)
}
