//! JSON forms of diagrams, decompositions, tableaux and polynomials.
//!
//! Cells are listed in `(row, col)` order. Big integers are decimal strings.

use std::sync::Arc;

use num_bigint::BigInt;
use ribbon_core::poly::{Polynomial, Variable};
use ribbon_core::{Cell, Decomposition, SimpleDiagram, Tableau, Word};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub row: i32,
    pub col: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub word: String,
    pub n: usize,
    pub cells: Vec<CellJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripCellJson {
    pub row: i32,
    pub col: i32,
    pub strip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub word: String,
    pub n: usize,
    pub cells: Vec<CellJson>,
    pub strips: Vec<StripCellJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCellJson {
    pub row: i32,
    pub col: i32,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub word: String,
    pub n: usize,
    pub cells: Vec<CellJson>,
    pub labels: Vec<LabelCellJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub variable: String,
    pub coeffs: Vec<String>,
}

fn cells_json(d: &SimpleDiagram) -> Vec<CellJson> {
    d.cells()
        .iter()
        .map(|c| CellJson { row: c.row, col: c.col })
        .collect()
}

impl From<&SimpleDiagram> for DiagramJson {
    fn from(d: &SimpleDiagram) -> Self {
        DiagramJson {
            word: d.word().to_string(),
            n: d.n(),
            cells: cells_json(d),
        }
    }
}

impl From<&Decomposition> for DecompositionJson {
    fn from(dec: &Decomposition) -> Self {
        let d = dec.diagram();
        DecompositionJson {
            word: d.word().to_string(),
            n: d.n(),
            cells: cells_json(d),
            strips: d
                .cells()
                .iter()
                .zip(dec.assignment())
                .map(|(c, &strip)| StripCellJson { row: c.row, col: c.col, strip })
                .collect(),
        }
    }
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        let d = t.diagram();
        TableauJson {
            word: d.word().to_string(),
            n: d.n(),
            cells: cells_json(d),
            labels: d
                .cells()
                .iter()
                .zip(t.labels())
                .map(|(c, &label)| LabelCellJson { row: c.row, col: c.col, label })
                .collect(),
        }
    }
}

impl<V: Variable> From<&Polynomial<V>> for PolynomialJson {
    fn from(p: &Polynomial<V>) -> Self {
        PolynomialJson {
            variable: p.variable_name().to_string(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<SimpleDiagram, CliError> {
        let word: Word = self.word.parse()?;
        let d = SimpleDiagram::new(word, self.n)?;
        if cells_json(&d) != self.cells {
            return Err(CliError::Input(format!(
                "cells do not match the diagram ({:?}, {})",
                self.word, self.n
            )));
        }
        Ok(d)
    }
}

/// Rebuild the per-cell values listed in `entries` in the diagram's cell order.
fn values_in_cell_order(
    d: &SimpleDiagram,
    entries: impl Iterator<Item = (Cell, usize)>,
    what: &str,
) -> Result<Vec<usize>, CliError> {
    let mut values = vec![0; d.len()];
    let mut seen = vec![false; d.len()];
    for (cell, value) in entries {
        let idx = d
            .index_of(cell)
            .ok_or_else(|| CliError::Input(format!("{what} entry at {cell} lies outside the diagram")))?;
        if seen[idx] {
            return Err(CliError::Input(format!("cell {cell} listed twice")));
        }
        seen[idx] = true;
        values[idx] = value;
    }
    if let Some(idx) = seen.iter().position(|s| !s) {
        return Err(CliError::Input(format!("cell {} has no {what}", d.cells()[idx])));
    }
    Ok(values)
}

impl DecompositionJson {
    pub fn to_decomposition(&self) -> Result<Decomposition, CliError> {
        let d = DiagramJson {
            word: self.word.clone(),
            n: self.n,
            cells: self.cells.clone(),
        }
        .to_diagram()?;
        let strips = values_in_cell_order(
            &d,
            self.strips.iter().map(|s| (Cell::new(s.row, s.col), s.strip)),
            "strip",
        )?;
        Ok(Decomposition::new(Arc::new(d), strips)?)
    }
}

impl TableauJson {
    pub fn to_tableau(&self) -> Result<Tableau, CliError> {
        let d = DiagramJson {
            word: self.word.clone(),
            n: self.n,
            cells: self.cells.clone(),
        }
        .to_diagram()?;
        let labels = values_in_cell_order(
            &d,
            self.labels.iter().map(|s| (Cell::new(s.row, s.col), s.label)),
            "label",
        )?;
        Ok(Tableau::new(Arc::new(d), labels)?)
    }
}

impl PolynomialJson {
    pub fn to_polynomial<V: Variable>(&self) -> Result<Polynomial<V>, CliError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|e| CliError::Input(format!("bad coefficient {c:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let p = Polynomial::from_coeffs(coeffs);
        if p.variable_name() != self.variable {
            return Err(CliError::Input(format!(
                "expected a polynomial in {}, found {:?}",
                p.variable_name(),
                self.variable
            )));
        }
        Ok(p)
    }
}
