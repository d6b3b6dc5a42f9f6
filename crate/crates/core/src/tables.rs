//! CSV exports: the octonion multiplication table and the S⁷ half-commutator
//! table. UTF-8, comma-separated, LF line endings, no trailing commas.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{AlgebraError, MultiplicationTable};
use crate::fields::{commutator_table, invariant_frame, FieldError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    OctMult,
    Commutators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("unknown table kind {0:?} (expected oct-mult or commutators)")]
    UnknownKind(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl FromStr for TableKind {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oct-mult" => Ok(TableKind::OctMult),
            "commutators" => Ok(TableKind::Commutators),
            other => Err(TableError::UnknownKind(other.to_string())),
        }
    }
}

/// 9×9 grid: header row and column `e0..e7`, cells like `e3` or `-e0`.
pub fn oct_mult_csv(table: &MultiplicationTable) -> Result<String, TableError> {
    let n = table.dim();
    let mut out = String::new();
    let header: Vec<String> = (0..n).map(|j| format!("e{j}")).collect();
    writeln!(out, ",{}", header.join(",")).expect("write to string");
    for i in 0..n {
        let cells: Vec<String> = (0..n)
            .map(|j| table.get(i, j).map(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        writeln!(out, "e{i},{}", cells.join(",")).expect("write to string");
    }
    Ok(out)
}

/// One row per pair `i < j`: `i,j` followed by the 64 matrix entries of
/// `Y_ij` in row-major order.
pub fn commutators_csv() -> Result<String, TableError> {
    let table = commutator_table(&invariant_frame(8)?)?;
    let mut out = String::new();
    let header: Vec<String> = (0..8)
        .flat_map(|r| (0..8).map(move |c| format!("m{r}{c}")))
        .collect();
    writeln!(out, "i,j,{}", header.join(",")).expect("write to string");
    for (&(i, j), f) in table.iter() {
        let coeffs: Vec<String> = f.matrix().data().iter().map(ToString::to_string).collect();
        writeln!(out, "{i},{j},{}", coeffs.join(",")).expect("write to string");
    }
    Ok(out)
}

pub fn emit_table(kind: TableKind) -> Result<String, TableError> {
    match kind {
        TableKind::OctMult => oct_mult_csv(&MultiplicationTable::standard(8)?),
        TableKind::Commutators => commutators_csv(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(csv: &str, row: usize, col: usize) -> &str {
        csv.lines().nth(row).unwrap().split(',').nth(col).unwrap()
    }

    #[test]
    fn oct_mult_cells() {
        let csv = emit_table(TableKind::OctMult).unwrap();
        assert_eq!(csv.lines().count(), 9);
        assert_eq!(cell(&csv, 5, 6), "e1");
        assert_eq!(cell(&csv, 2, 2), "-e0");
        assert_eq!(cell(&csv, 0, 1), "e0");
        assert!(!csv.contains('\r'));
        assert!(csv.lines().all(|l| !l.ends_with(',')));
    }

    #[test]
    fn commutator_rows() {
        let csv = emit_table(TableKind::Commutators).unwrap();
        assert_eq!(csv.lines().count(), 22);
        let row = csv.lines().find(|l| l.starts_with("4,5,")).unwrap();
        let vals: Vec<i64> = row.split(',').skip(2).map(|x| x.parse().unwrap()).collect();
        assert_eq!(vals.len(), 64);
        // Y45 = y1∂0 − y0∂1 − …: row 0 has +1 at column 1, row 1 has −1 at column 0.
        assert_eq!(vals[1], 1);
        assert_eq!(vals[8], -1);
    }

    #[test]
    fn unknown_kind() {
        assert!("bogus".parse::<TableKind>().is_err());
    }
}
