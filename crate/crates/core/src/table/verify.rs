use std::fmt;

use num_bigint::BigInt;

use super::expected::{ExpectedTable, COUNTS, TABLES};
use crate::egyptian::{count_affine, enumerate_affine, EnumQuery};
use crate::star::join;
use crate::Result;

/// Outcome of regenerating one reference table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheck {
    pub name: &'static str,
    pub expected_rows: usize,
    pub produced_rows: usize,
    pub expected_total: u64,
    pub total: u64,
    /// First disagreement, if any.
    pub mismatch: Option<String>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub m: usize,
    pub p: u64,
    pub expected: u64,
    pub found: u64,
}

impl CountCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.found
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub tables: Vec<TableCheck>,
    pub counts: Vec<CountCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(TableCheck::passed) && self.counts.iter().all(CountCheck::passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tables {
            let verdict = if t.passed() { "PASS" } else { "FAIL" };
            write!(
                f,
                "table {:<5} {verdict}  rows {}/{}  total {}/{}",
                t.name, t.produced_rows, t.expected_rows, t.total, t.expected_total
            )?;
            if let Some(why) = &t.mismatch {
                write!(f, "  ({why})")?;
            }
            writeln!(f)?;
        }
        for c in &self.counts {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "count m={} p={} {verdict}  {} (expected {})", c.m, c.p, c.found, c.expected)?;
        }
        Ok(())
    }
}

fn check_table(table: &ExpectedTable) -> Result<TableCheck> {
    let mut query = EnumQuery::new(table.m, table.p);
    query.d_max = table.d_max;
    let result = enumerate_affine(&query)?;
    let mut mismatch = None;
    if result.total != table.total {
        mismatch = Some(format!("total {} but expected {}", result.total, table.total));
    }
    for (i, (want, got)) in table.rows.iter().zip(&result.solutions).enumerate() {
        if mismatch.is_some() {
            break;
        }
        let no = i + 1;
        let want_type = format!("B^({})({})", table.p, join(want.arms));
        let want_x: Vec<BigInt> = want.x.iter().map(|&v| BigInt::from(v)).collect();
        let fields = [
            ("type", want_type, got.type_string()),
            ("D", want.dimension.to_string(), got.dimension().to_string()),
            ("s", want.s.to_string(), got.s().to_string()),
            ("h", want.h.to_string(), got.coxeter_number().to_string()),
            ("x", join(&want_x), join(got.x())),
        ];
        if let Some((field, want, got)) = fields.into_iter().find(|(_, w, g)| w != g) {
            mismatch = Some(format!("row {no}: {field} expected {want}, found {got}"));
        }
    }
    if mismatch.is_none() && result.solutions.len() != table.rows.len() {
        mismatch = Some(format!("{} rows but expected {}", result.solutions.len(), table.rows.len()));
    }
    Ok(TableCheck {
        name: table.name,
        expected_rows: table.rows.len(),
        produced_rows: result.solutions.len(),
        expected_total: table.total,
        total: result.total,
        mismatch,
    })
}

/// Regenerates each table and each count and compares field by field.
pub fn verify_tables(tables: &[ExpectedTable], counts: &[(usize, u64, u64)]) -> Result<VerificationReport> {
    let tables = tables.iter().map(check_table).collect::<Result<Vec<_>>>()?;
    let counts = counts
        .iter()
        .map(|&(m, p, expected)| Ok(CountCheck { m, p, expected, found: count_affine(m, p)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport { tables, counts })
}

/// [`verify_tables`] over the built-in reference data.
pub fn verify_reference_tables() -> VerificationReport {
    verify_tables(TABLES, COUNTS).expect("reference queries are valid")
}
