//! Cross-validation of the closed-form cells against explicit intersection.

use rayon::prelude::*;
use serde::Serialize;

use crate::class::{ClassLabel, ClassSet};

use super::engine::ClipsEngine;
use super::tables::{table_cell, ColumnFamily, Condition, RowFamily};
use super::ClipsError;

/// One evaluated cell of the type II × type III tables.
#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub row: &'static str,
    pub column: &'static str,
    pub m: u32,
    pub n: u32,
    pub row_label: ClassLabel,
    pub column_label: ClassLabel,
    pub branch: String,
    pub template: String,
    /// The cell as published.
    pub published: ClassSet,
    /// The cell used by the symbolic engine (published plus errata).
    pub symbolic: ClassSet,
    /// Explicit intersection result.
    pub oracle: ClassSet,
}

impl CellReport {
    pub fn matches(&self) -> bool {
        self.symbolic == self.oracle
    }

    pub fn published_matches(&self) -> bool {
        self.published == self.oracle
    }
}

/// A cell coordinate: row family and `m`, column family and `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellCoord {
    pub row: RowFamily,
    pub m: u32,
    pub column: ColumnFamily,
    pub n: u32,
}

/// Every cell with `m ∈ m_range` for parametrized rows and `n ∈ n_range`
/// for parametrized columns; fixed rows/columns appear once.
pub fn cell_grid(
    rows: &[RowFamily],
    columns: &[ColumnFamily],
    m_range: std::ops::RangeInclusive<u32>,
    n_range: std::ops::RangeInclusive<u32>,
) -> Vec<CellCoord> {
    let mut out = Vec::new();
    for &row in rows {
        let ms: Vec<u32> = if row.is_parametrized() { m_range.clone().filter(|m| *m >= 2).collect() } else { vec![0] };
        for m in ms {
            for &column in columns {
                let ns: Vec<u32> = if column.is_parametrized() {
                    n_range.clone().filter(|n| *n >= column.min_parameter()).collect()
                } else {
                    vec![0]
                };
                for n in ns {
                    out.push(CellCoord { row, m, column, n });
                }
            }
        }
    }
    out
}

/// The cells checked by default: rows `Z_m`, `D_m` (`2 ≤ m ≤ m_max`), `T`,
/// `O`, `I` (each `⊕ Z2c`) against every type III column with
/// `n ≤ n_max`.
pub fn default_grid(n_max: u32, m_max: u32) -> Vec<CellCoord> {
    cell_grid(
        &[RowFamily::Cyclic, RowFamily::Dihedral, RowFamily::Tetra, RowFamily::Octa, RowFamily::Icosa],
        &ColumnFamily::ALL,
        2..=m_max,
        1..=n_max,
    )
}

/// Evaluates one cell symbolically and by explicit intersection.
pub fn check_cell(engine: &ClipsEngine, coord: CellCoord) -> Result<CellReport, ClipsError> {
    let row_label = coord.row.label(coord.m)?;
    let column_label = coord.column.label(coord.n)?;
    let cell = table_cell(coord.row, coord.column, coord.m, coord.n)?;
    let oracle = engine.concrete(column_label, row_label)?;
    Ok(CellReport {
        row: coord.row.name(),
        column: coord.column.name(),
        m: coord.m,
        n: coord.n,
        row_label,
        column_label,
        branch: branch_name(cell.branch),
        template: cell.template,
        published: cell.published,
        symbolic: cell.result,
        oracle,
    })
}

fn branch_name(c: Condition) -> String {
    c.to_string()
}

/// Checks all cells, in parallel; reports come back in input order.
pub fn check_cells(engine: &ClipsEngine, cells: &[CellCoord]) -> Result<Vec<CellReport>, ClipsError> {
    cells.par_iter().map(|coord| check_cell(engine, *coord)).collect()
}
