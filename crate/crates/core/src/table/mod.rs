//! Tabular and graph output for affine solutions, and the regression check
//! against the reference tables.

mod dot;
pub mod expected;
mod verify;

pub use dot::emit_dot;
pub use verify::{verify_reference_tables, verify_tables, CountCheck, TableCheck, VerificationReport};

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::exact::BigInt;
use crate::star::{join, AffineSolution};
use crate::Error;

/// Output format for [`render_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
    Tex,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "tex" => Ok(TableFormat::Tex),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// One of the four classical affine Dynkin stars.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalAlias {
    pub family: char,
    pub rank: u8,
}

impl ClassicalAlias {
    /// `E8^(1)`
    pub fn ascii(&self) -> String {
        format!("{}{}^(1)", self.family, self.rank)
    }

    /// `E_8^{(1)}`
    pub fn tex(&self) -> String {
        format!("{}_{}^{{(1)}}", self.family, self.rank)
    }
}

const CLASSICAL: &[(u64, &[u64], ClassicalAlias)] = &[
    (2, &[1, 1, 1, 1], ClassicalAlias { family: 'D', rank: 4 }),
    (1, &[2, 2, 2], ClassicalAlias { family: 'E', rank: 6 }),
    (1, &[1, 3, 3], ClassicalAlias { family: 'E', rank: 7 }),
    (1, &[1, 2, 5], ClassicalAlias { family: 'E', rank: 8 }),
];

/// The classical name of a solution, for `D_4^(1)` and `E_{6,7,8}^(1)` only.
pub fn classical_alias(sol: &AffineSolution) -> Option<ClassicalAlias> {
    CLASSICAL
        .iter()
        .find(|(p, arms, _)| *p == sol.p() && *arms == sol.shape().arms())
        .map(|(_, _, alias)| *alias)
}

/// A rendered table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub index: usize,
    pub type_string: String,
    pub alias: Option<ClassicalAlias>,
    pub dimension: BigInt,
    pub s: BigInt,
    pub h: BigInt,
    pub x: Vec<BigInt>,
    pub label_string: String,
}

impl TableRow {
    pub fn new(index: usize, sol: &AffineSolution) -> Self {
        TableRow {
            index,
            type_string: sol.type_string(),
            alias: classical_alias(sol),
            dimension: sol.dimension().clone(),
            s: sol.s().clone(),
            h: sol.coxeter_number().clone(),
            x: sol.x().to_vec(),
            label_string: sol.label_string(),
        }
    }

    /// The type column: `B^(p)(...)`, prefixed with the classical name.
    pub fn type_column(&self) -> String {
        match self.alias {
            Some(alias) => format!("{} ~ {}", alias.ascii(), self.type_string),
            None => self.type_string.clone(),
        }
    }

    fn tex_type(&self, sol: &AffineSolution) -> String {
        let b = format!("\\mathcal B^{{({})}}({})", sol.p(), join(sol.shape().arms()));
        match self.alias {
            Some(alias) => format!("${}\\simeq {}$", alias.tex(), b),
            None => format!("${b}$"),
        }
    }
}

#[derive(Serialize)]
struct JsonRow {
    no: usize,
    #[serde(rename = "type")]
    type_string: String,
    alias: Option<String>,
    #[serde(rename = "D")]
    dimension: String,
    s: String,
    h: String,
    x: Vec<String>,
    labels: String,
}

impl From<&TableRow> for JsonRow {
    fn from(row: &TableRow) -> Self {
        JsonRow {
            no: row.index,
            type_string: row.type_string.clone(),
            alias: row.alias.map(|a| a.ascii()),
            dimension: row.dimension.to_string(),
            s: row.s.to_string(),
            h: row.h.to_string(),
            x: row.x.iter().map(BigInt::to_string).collect(),
            labels: row.label_string.clone(),
        }
    }
}

pub fn table_rows(solutions: &[AffineSolution]) -> Vec<TableRow> {
    solutions.iter().enumerate().map(|(i, s)| TableRow::new(i + 1, s)).collect()
}

/// Renders solutions (already in table order) with columns
/// `No., Type, D, s, h, (x_i)[s]`.
pub fn render_table(solutions: &[AffineSolution], format: TableFormat) -> String {
    let rows = table_rows(solutions);
    match format {
        TableFormat::Text => render_text(&rows),
        TableFormat::Csv => render_csv(&rows),
        TableFormat::Json => render_json(&rows),
        TableFormat::Tex => render_tex(&rows, solutions),
    }
}

pub(crate) fn json_rows(solutions: &[AffineSolution]) -> serde_json::Value {
    let rows: Vec<JsonRow> = table_rows(solutions).iter().map(JsonRow::from).collect();
    serde_json::to_value(rows).expect("rows serialize")
}

fn render_text(rows: &[TableRow]) -> String {
    let header = ["No.", "Type", "D", "s", "h", "(x_i)[s]"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.index.to_string(),
                r.type_column(),
                r.dimension.to_string(),
                r.s.to_string(),
                r.h.to_string(),
                r.label_string.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    // numeric columns right-aligned, text left-aligned
    let right = [true, false, true, true, true, false];
    let mut out = String::new();
    let mut line = |fields: &[&str]| {
        let parts: Vec<String> = fields
            .iter()
            .zip(widths.iter().zip(right))
            .map(|(f, (&w, r))| if r { format!("{f:>w$}") } else { format!("{f:<w$}") })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header);
    for row in &cells {
        let refs: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&refs);
    }
    out
}

fn render_csv(rows: &[TableRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["No.", "Type", "D", "s", "h", "labels"]).expect("in-memory write");
    for r in rows {
        writer
            .write_record([
                r.index.to_string(),
                r.type_column(),
                r.dimension.to_string(),
                r.s.to_string(),
                r.h.to_string(),
                r.label_string.clone(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

fn render_json(rows: &[TableRow]) -> String {
    let rows: Vec<JsonRow> = rows.iter().map(JsonRow::from).collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
    s.push('\n');
    s
}

fn render_tex(rows: &[TableRow], solutions: &[AffineSolution]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{longtable}{@{}r l r r r l@{}}\n\\toprule\n");
    out.push_str("No. & Type & $D$ & $s$ & $h$ & $(x_i)[s]$\\\\\n\\midrule\n");
    for (r, sol) in rows.iter().zip(solutions) {
        let _ = writeln!(
            out,
            "{} & {} & {} & {} & {} & ${}$ \\\\",
            r.index,
            r.tex_type(sol),
            r.dimension,
            r.s,
            r.h,
            r.label_string
        );
    }
    out.push_str("\\bottomrule\n\\end{longtable}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egyptian::{enumerate_affine, EnumQuery};

    fn solutions(m: usize, p: u64) -> Vec<AffineSolution> {
        enumerate_affine(&EnumQuery::new(m, p)).unwrap().solutions
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<TableFormat>().unwrap(), TableFormat::Csv);
        assert_eq!("tex".parse::<TableFormat>().unwrap(), TableFormat::Tex);
        assert_eq!("xml".parse::<TableFormat>(), Err(Error::UnknownFormat("xml".into())));
    }

    #[test]
    fn exceptional_table_csv() {
        let csv = render_table(&solutions(3, 1), TableFormat::Csv);
        let expected = "\
No.,Type,D,s,h,labels
1,\"E6^(1) ~ B^(1)(2,2,2)\",7,3,12,\"(1,1,1)[3]\"
2,\"E7^(1) ~ B^(1)(1,3,3)\",8,4,18,\"(2,1,1)[4]\"
3,\"E8^(1) ~ B^(1)(1,2,5)\",9,6,30,\"(3,2,1)[6]\"
";
        assert_eq!(csv, expected);
    }

    #[test]
    fn empty_tables_have_headers_only() {
        assert_eq!(render_table(&[], TableFormat::Csv), "No.,Type,D,s,h,labels\n");
        assert_eq!(render_table(&[], TableFormat::Json), "[]\n");
        assert_eq!(render_table(&[], TableFormat::Text), "No.  Type  D  s  h  (x_i)[s]\n");
        assert_eq!(render_table(&[], TableFormat::Tex).lines().count(), 6);
    }

    #[test]
    fn last_row_of_six_arm_p2_table() {
        let sols = solutions(6, 2);
        assert_eq!(sols.len(), 17);
        let rows = table_rows(&sols);
        let last = rows.last().unwrap();
        assert_eq!(last.index, 17);
        assert_eq!(
            (last.dimension.clone(), last.s.clone(), last.h.clone()),
            (BigInt::from(53), BigInt::from(42), BigInt::from(1134))
        );
    }

    #[test]
    fn json_uses_decimal_strings() {
        let json: serde_json::Value = serde_json::from_str(&render_table(&solutions(4, 2), TableFormat::Json)).unwrap();
        let row = &json[0];
        assert_eq!(row["no"], 1);
        assert_eq!(row["type"], "B^(2)(1,1,1,1)");
        assert_eq!(row["alias"], "D4^(1)");
        assert_eq!(row["D"], "5");
        assert_eq!(row["h"], "6");
        assert_eq!(row["x"], serde_json::json!(["1", "1", "1", "1"]));
    }

    #[test]
    fn tex_rows_follow_longtable_layout() {
        let tex = render_table(&solutions(4, 2), TableFormat::Tex);
        assert!(tex.contains("1 & $D_4^{(1)}\\simeq \\mathcal B^{(2)}(1,1,1,1)$ & 5 & 2 & 6 & $(1,1,1,1)[2]$ \\\\"));
        let tex = render_table(&solutions(2, 1), TableFormat::Tex);
        assert!(tex.contains("1 & $\\mathcal B^{(1)}(1,1)$ & 3 & 2 & 4 & $(1,1)[2]$ \\\\"));
    }

    #[test]
    fn text_table_is_aligned() {
        let text = render_table(&solutions(3, 1), TableFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[3].starts_with("  3  E8^(1) ~ B^(1)(1,2,5)"));
        assert!(lines[3].ends_with("(3,2,1)[6]"));
    }
}
