//! Published determinant-count tables for `r ∈ {2, 3, 5, 7}`, `n ≤ 10`, bundled
//! verbatim, together with the list of cells known to be misprinted.

use num_bigint::BigUint;
use serde::Serialize;

use crate::counting::NTable;
use crate::det::DetCharacter;
use crate::error::{Error, Result};

const TABLES: [(usize, &str); 4] = [
    (2, include_str!("../data/reference_r2.csv")),
    (3, include_str!("../data/reference_r3.csv")),
    (5, include_str!("../data/reference_r5.csv")),
    (7, include_str!("../data/reference_r7.csv")),
];

const ERRATA: &str = include_str!("../data/errata.csv");

/// Column names in the `2r` layout: `N_1, N_zeta_s…, N_negzeta_s…, N_neg1`.
pub fn column_names(r: usize) -> Vec<String> {
    (0..2 * r)
        .map(|c| {
            let d = DetCharacter::from_column(c, r);
            match (d.zeta_exp, d.sign_exp) {
                (0, 0) => "N_1".to_string(),
                (0, _) => "N_neg1".to_string(),
                (x, 0) => format!("N_zeta_{x}"),
                (x, _) => format!("N_negzeta_{x}"),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceRow {
    pub n: usize,
    #[serde(serialize_with = "crate::arith::decimal::serialize_vec")]
    pub cells: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceTable {
    pub r: usize,
    pub rows: Vec<ReferenceRow>,
}

impl ReferenceTable {
    pub fn row(&self, n: usize) -> Option<&ReferenceRow> {
        self.rows.iter().find(|row| row.n == n)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { position: line, message: message.into() }
}

fn parse_table(r: usize, text: &str) -> Result<ReferenceTable> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_error(0, "empty table"))?;
    let mut expected = vec!["n".to_string()];
    expected.extend(column_names(r));
    if header.split(',').collect::<Vec<_>>() != expected {
        return Err(parse_error(0, format!("unexpected header {header}")));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 * r + 1 {
            return Err(parse_error(i + 1, format!("expected {} fields", 2 * r + 1)));
        }
        let n = fields[0].parse().map_err(|_| parse_error(i + 1, "bad n"))?;
        let cells = fields[1..]
            .iter()
            .map(|f| f.parse::<BigUint>().map_err(|_| parse_error(i + 1, format!("bad cell {f}"))))
            .collect::<Result<_>>()?;
        rows.push(ReferenceRow { n, cells });
    }
    Ok(ReferenceTable { r, rows })
}

/// The bundled table for `r`, if one exists.
pub fn reference_table(r: usize) -> Option<ReferenceTable> {
    TABLES
        .iter()
        .find(|(rr, _)| *rr == r)
        .map(|(rr, text)| parse_table(*rr, text).expect("bundled table is well formed"))
}

pub fn reference_ranks() -> Vec<usize> {
    TABLES.iter().map(|(r, _)| *r).collect()
}

/// A published cell known to disagree with the enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub r: usize,
    pub n: usize,
    pub column: String,
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub published: BigUint,
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub computed: BigUint,
    pub evidence: String,
}

pub fn errata() -> Vec<Erratum> {
    ERRATA
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.splitn(6, ',').collect();
            Erratum {
                r: f[0].parse().expect("errata r"),
                n: f[1].parse().expect("errata n"),
                column: f[2].to_string(),
                published: f[3].parse().expect("errata published"),
                computed: f[4].parse().expect("errata computed"),
                evidence: f[5].to_string(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub r: usize,
    pub n: usize,
    pub column: String,
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub published: BigUint,
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub computed: BigUint,
    /// Listed in the errata with exactly these two values.
    pub documented: bool,
}

/// Cell-by-cell comparison of a computed aggregate table with a published row.
pub fn compare_row(row: &ReferenceRow, table: &NTable, known: &[Erratum]) -> Vec<CellMismatch> {
    let r = table.params.r;
    column_names(r)
        .into_iter()
        .zip(row.cells.iter().zip(&table.counts))
        .filter(|(_, (published, computed))| published != computed)
        .map(|(column, (published, computed))| {
            let documented = known.iter().any(|e| {
                e.r == r && e.n == row.n && e.column == column && &e.published == published && &e.computed == computed
            });
            CellMismatch { r, n: row.n, column, published: published.clone(), computed: computed.clone(), documented }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::n_table_aggregate;
    use crate::multipartition::WreathParams;

    #[test]
    fn names() {
        assert_eq!(column_names(2), vec!["N_1", "N_zeta_1", "N_negzeta_1", "N_neg1"]);
        assert_eq!(column_names(3)[2], "N_zeta_2");
        assert_eq!(column_names(3)[4], "N_negzeta_2");
    }

    #[test]
    fn bundled_tables_parse() {
        for r in reference_ranks() {
            let t = reference_table(r).unwrap();
            assert_eq!(t.rows.len(), 10);
            assert!(t.rows.iter().all(|row| row.cells.len() == 2 * r));
        }
        let t = reference_table(2).unwrap();
        assert_eq!(t.row(6).unwrap().cells, [33u32, 8, 16, 8].map(BigUint::from).to_vec());
        assert!(reference_table(11).is_none());
    }

    #[test]
    fn errata_cells_are_the_published_values() {
        for e in errata() {
            let t = reference_table(e.r).unwrap();
            let col = column_names(e.r).iter().position(|c| *c == e.column).unwrap();
            assert_eq!(t.row(e.n).unwrap().cells[col], e.published, "{e:?}");
        }
    }

    #[test]
    fn comparison_flags_documented_cells() {
        let known = errata();
        let row = reference_table(3).unwrap().row(6).unwrap().clone();
        let mismatches = compare_row(&row, &n_table_aggregate(WreathParams::new(6, 3).unwrap()), &known);
        assert_eq!(mismatches.len(), 2);
        assert!(mismatches.iter().all(|m| m.documented));
        let row = reference_table(3).unwrap().row(4).unwrap().clone();
        assert!(compare_row(&row, &n_table_aggregate(WreathParams::new(4, 3).unwrap()), &known).is_empty());
    }
}
