//! The abstract regular cell complex on cyclically ordered partitions:
//! cells are partitions into at least 3 parts, incidence is
//! orientation-preserving refinement. The same container holds linkage
//! moduli subcomplexes.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, CyclicPartition};

/// One labeled cell. `covers` lists ids of the cells one dimension down
/// whose labels refine this cell's label.
#[derive(Debug, Clone)]
pub struct Cell {
    pub id: usize,
    pub label: CyclicPartition,
    pub dim: usize,
    pub covers: Vec<usize>,
}

/// Dimension-graded cell set with its covering relation. Cells are stored
/// in increasing dimension; ids are stable ranks within the build order.
#[derive(Debug, Clone)]
pub struct CellComplex {
    m: usize,
    cells: Vec<Cell>,
    by_label: HashMap<CyclicPartition, usize>,
    counts_by_dim: Vec<usize>,
}

/// Builds the full complex on `[m]`: for each `p = m..3` all cyclic
/// partitions into `p` parts as cells of dimension `m - p`, with the
/// covering relation computed from one-block splits.
pub fn build_complex(m: usize) -> Result<CellComplex> {
    if m < 4 {
        return Err(Error::GroundSetTooSmall(m));
    }
    let mut cells: Vec<Cell> = Vec::new();
    let mut by_label: HashMap<CyclicPartition, usize> = HashMap::new();
    let mut counts_by_dim = Vec::new();
    for dim in 0..=(m - 3) {
        let p = m - dim;
        let labels = enumerate_partitions(m, p)?;
        counts_by_dim.push(labels.len());
        for label in labels {
            let id = cells.len();
            let covers = if dim == 0 {
                Vec::new()
            } else {
                let mut ids: Vec<usize> =
                    label.splits().iter().map(|finer| by_label[finer]).collect();
                ids.sort_unstable();
                ids
            };
            by_label.insert(label.clone(), id);
            cells.push(Cell {
                id,
                label,
                dim,
                covers,
            });
        }
    }
    Ok(CellComplex {
        m,
        cells,
        by_label,
        counts_by_dim,
    })
}

impl CellComplex {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn contains(&self, label: &CyclicPartition) -> bool {
        self.by_label.contains_key(label)
    }

    pub fn cell_by_label(&self, label: &CyclicPartition) -> Option<&Cell> {
        self.by_label.get(label).map(|&id| &self.cells[id])
    }

    /// `(f_0, ..., f_{m-3})`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.counts_by_dim.clone()
    }

    /// Alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts_by_dim
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// All covering pairs `(coarser id, finer id)`.
    pub fn covering_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells
            .iter()
            .flat_map(|c| c.covers.iter().map(move |&f| (c.id, f)))
    }

    /// Counts of j-dimensional cells in the closure of `label`, graded
    /// `(c_0, ..., c_dim)`. The closure of a cell is combinatorially a
    /// product of permutohedra, one factor per block.
    pub fn closed_cell_face_counts(&self, label: &CyclicPartition) -> Result<Vec<usize>> {
        if !self.contains(label) {
            return Err(Error::MalformedPartition(format!(
                "{label} is not a cell of the complex on [{}]",
                self.m
            )));
        }
        let mut counts = vec![0usize; label.dim() + 1];
        for r in label.refinements() {
            counts[r.dim()] += 1;
        }
        Ok(counts)
    }

    /// The subcomplex induced on the labels accepted by `keep`, with fresh
    /// ids in the same deterministic order.
    pub fn induced_subcomplex(
        &self,
        mut keep: impl FnMut(&CyclicPartition) -> bool,
    ) -> CellComplex {
        let mut cells: Vec<Cell> = Vec::new();
        let mut by_label: HashMap<CyclicPartition, usize> = HashMap::new();
        let mut counts_by_dim = vec![0usize; self.counts_by_dim.len()];
        let mut old_to_new: HashMap<usize, usize> = HashMap::new();
        for cell in &self.cells {
            if !keep(&cell.label) {
                continue;
            }
            let id = cells.len();
            let covers: Vec<usize> = cell
                .covers
                .iter()
                .filter_map(|old| old_to_new.get(old).copied())
                .collect();
            // Lower-dimensional cells precede their coverers, so the map is
            // already populated for every admissible face.
            old_to_new.insert(cell.id, id);
            by_label.insert(cell.label.clone(), id);
            counts_by_dim[cell.dim] += 1;
            cells.push(Cell {
                id,
                label: cell.label.clone(),
                dim: cell.dim,
                covers,
            });
        }
        while counts_by_dim.last() == Some(&0) {
            counts_by_dim.pop();
        }
        CellComplex {
            m: self.m,
            cells,
            by_label,
            counts_by_dim,
        }
    }

    /// Serializes the complex: `"json"` per the documented schema, `"dot"`
    /// as the Hasse diagram of the covering relation.
    pub fn export(&self, format: &str) -> Result<Vec<u8>> {
        match format {
            "json" => {
                let value = self.to_json();
                let mut bytes = serde_json::to_vec_pretty(&value).expect("serializable");
                bytes.push(b'\n');
                Ok(bytes)
            }
            "dot" => Ok(self.to_dot().into_bytes()),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }

    /// `{"m": .., "cells": [{"id", "dim", "label", "covers"}]}` with keys
    /// sorted by the serializer.
    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "dim": c.dim,
                    "label": c.label.to_string(),
                    "covers": c.covers,
                })
            })
            .collect();
        json!({ "m": self.m, "cells": cells })
    }

    /// Hasse diagram: one node per cell, one edge per covering pair,
    /// oriented from higher to lower dimension.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph complex_{} {{\n", self.m));
        out.push_str("  rankdir=BT;\n");
        for c in &self.cells {
            out.push_str(&format!("  c{} [label=\"{}\"];\n", c.id, c.label));
        }
        for c in &self.cells {
            for &f in &c.covers {
                out.push_str(&format!("  c{} -> c{};\n", c.id, f));
            }
        }
        out.push_str("}\n");
        out
    }
}
