//! Moduli-space cell complexes of planar polygonal linkages: the
//! subcomplex induced on admissible labels, the embedding check, and
//! surface diagnostics at five edges.

use std::collections::HashMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::complex::{build_complex, CellComplex};
use crate::error::{Error, Result};
use crate::partitions::CyclicPartition;
use crate::rat::{rat, Rat};

/// Edge lengths of a closed planar polygon. Construction enforces
/// positivity, closability, and genericity (no subset of edges sums to
/// exactly half the perimeter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linkage {
    lengths: Vec<Rat>,
}

impl Linkage {
    pub fn new(lengths: Vec<Rat>) -> Result<Linkage> {
        let m = lengths.len();
        if m < 4 {
            return Err(Error::GroundSetTooSmall(m));
        }
        if let Some(bad) = lengths.iter().find(|l| !(**l > Rat::zero())) {
            return Err(Error::NotClosable(format!(
                "edge lengths must be positive, got {bad}"
            )));
        }
        let perimeter: Rat = lengths.iter().fold(Rat::zero(), |a, b| a + b);
        for l in &lengths {
            if rat(2) * l > perimeter {
                return Err(Error::NotClosable(format!(
                    "edge of length {l} exceeds the sum of the others"
                )));
            }
        }
        // Genericity: 2 * sum(J) != perimeter for every nonempty J.
        let half_hits = |mask: u32| -> bool {
            let sum: Rat = lengths
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, l)| l.clone())
                .fold(Rat::zero(), |a, b| a + b);
            rat(2) * sum == perimeter
        };
        for mask in 1..(1u32 << m) {
            if half_hits(mask) {
                let subset: Vec<usize> = (0..m)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| i + 1)
                    .collect();
                return Err(Error::DegenerateLinkage(format!(
                    "edges {subset:?} sum to exactly half the perimeter"
                )));
            }
        }
        Ok(Linkage { lengths })
    }

    pub fn from_ints(lengths: &[i64]) -> Result<Linkage> {
        Linkage::new(lengths.iter().map(|&l| rat(l)).collect())
    }

    pub fn m(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[Rat] {
        &self.lengths
    }

    pub fn perimeter(&self) -> Rat {
        self.lengths.iter().fold(Rat::zero(), |a, b| a + b)
    }
}

/// True iff the edges indexed by `subset` (1-based) have total length
/// strictly below half the perimeter.
pub fn is_short(subset: &[usize], linkage: &Linkage) -> bool {
    assert!(!subset.is_empty());
    let sum: Rat = subset
        .iter()
        .map(|&i| linkage.lengths[i - 1].clone())
        .fold(Rat::zero(), |a, b| a + b);
    rat(2) * sum < linkage.perimeter()
}

/// True iff every block of the label is short.
pub fn is_admissible(label: &CyclicPartition, linkage: &Linkage) -> Result<bool> {
    if label.m() != linkage.m() {
        return Err(Error::GroundSetMismatch {
            expected: linkage.m(),
            got: label.m(),
        });
    }
    Ok(label.blocks().iter().all(|b| {
        let subset: Vec<usize> = b.iter().copied().collect();
        is_short(&subset, linkage)
    }))
}

/// The moduli-space complex: the subcomplex of the full complex induced on
/// admissible labels. Downward closed, since refining only shrinks blocks.
pub fn build_moduli_complex(linkage: &Linkage) -> Result<CellComplex> {
    let ambient = build_complex(linkage.m())?;
    let moduli = ambient
        .induced_subcomplex(|label| is_admissible(label, linkage).expect("matching ground sets"));
    for cell in moduli.cells() {
        debug_assert!(cell.label.block_count() >= 3);
    }
    Ok(moduli)
}

/// Result of the structural subcomplex check.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub cells_checked: usize,
    pub problems: Vec<String>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Verifies that the moduli complex embeds in the full face lattice as the
/// subcomplex of admissible labels.
pub fn verify_embedding(linkage: &Linkage) -> Result<EmbeddingReport> {
    let ambient = build_complex(linkage.m())?;
    let moduli = build_moduli_complex(linkage)?;
    Ok(check_embedding(&moduli, linkage, &ambient))
}

/// Structural check behind `verify_embedding`, usable against a tampered
/// complex: every cell must be an admissible ambient cell, every admissible
/// ambient cell must be present, and the covering relation must agree with
/// the ambient one in both directions.
pub fn check_embedding(
    moduli: &CellComplex,
    linkage: &Linkage,
    ambient: &CellComplex,
) -> EmbeddingReport {
    let mut problems = Vec::new();
    for cell in moduli.cells() {
        match ambient.cell_by_label(&cell.label) {
            Some(a) => {
                if a.dim != cell.dim {
                    problems.push(format!("{}: dimension mismatch", cell.label));
                }
            }
            None => problems.push(format!("{}: not a cell of the ambient complex", cell.label)),
        }
        if !is_admissible(&cell.label, linkage).unwrap_or(false) {
            problems.push(format!("{}: label is not admissible", cell.label));
        }
    }
    for cell in ambient.cells() {
        if is_admissible(&cell.label, linkage).unwrap_or(false) && !moduli.contains(&cell.label) {
            problems.push(format!("{}: admissible cell is missing", cell.label));
        }
    }
    // Covering relations present in the moduli complex must be ambient ones.
    for (coarse, fine) in moduli.covering_pairs() {
        let coarse = &moduli.cell(coarse).label;
        let fine = &moduli.cell(fine).label;
        let ambient_pair = ambient
            .cell_by_label(coarse)
            .zip(ambient.cell_by_label(fine))
            .map(|(c, f)| c.covers.contains(&f.id))
            .unwrap_or(false);
        if !ambient_pair {
            problems.push(format!(
                "{coarse} covering {fine} is not an ambient covering"
            ));
        }
    }
    // No ambient incidence between kept cells may be missing.
    for (coarse, fine) in ambient.covering_pairs() {
        let coarse = &ambient.cell(coarse).label;
        let fine = &ambient.cell(fine).label;
        let (Some(mc), Some(mf)) = (moduli.cell_by_label(coarse), moduli.cell_by_label(fine))
        else {
            continue;
        };
        if !mc.covers.contains(&mf.id) {
            problems.push(format!("missing incidence {coarse} over {fine}"));
        }
    }
    EmbeddingReport {
        cells_checked: moduli.cells().len(),
        problems,
    }
}

/// Surface diagnostics for the moduli complex of a five-edge linkage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub f: Vec<usize>,
    pub euler: i64,
    /// Every edge lies in exactly two 2-cells.
    pub pseudo_manifold: bool,
    /// The link of every vertex is a single cycle.
    pub links_are_circles: bool,
    pub connected: bool,
}

impl SurfaceReport {
    pub fn is_closed_surface(&self) -> bool {
        self.pseudo_manifold && self.links_are_circles && self.connected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "f": self.f,
            "euler": self.euler,
            "pseudo_manifold": self.pseudo_manifold,
            "links_are_circles": self.links_are_circles,
            "connected": self.connected,
        })
    }
}

pub fn surface_report(linkage: &Linkage) -> Result<SurfaceReport> {
    if linkage.m() != 5 {
        return Err(Error::GroundSetMismatch {
            expected: 5,
            got: linkage.m(),
        });
    }
    let moduli = build_moduli_complex(linkage)?;
    let f = moduli.f_vector();
    let euler = moduli.euler_characteristic();

    let vertex_ids: Vec<usize> = moduli
        .cells()
        .iter()
        .filter(|c| c.dim == 0)
        .map(|c| c.id)
        .collect();
    let edge_cells: Vec<usize> = moduli
        .cells()
        .iter()
        .filter(|c| c.dim == 1)
        .map(|c| c.id)
        .collect();

    // Pseudo-manifold: each edge is covered by exactly two 2-cells.
    let mut edge_in_faces: HashMap<usize, Vec<usize>> = HashMap::new();
    for cell in moduli.cells().iter().filter(|c| c.dim == 2) {
        for &e in &cell.covers {
            edge_in_faces.entry(e).or_default().push(cell.id);
        }
    }
    let pseudo_manifold = edge_cells
        .iter()
        .all(|e| edge_in_faces.get(e).map_or(0, Vec::len) == 2);

    // Vertex links: nodes are incident edges; each incident 2-cell joins the
    // two of its boundary edges that touch the vertex. A closed-surface
    // vertex has a connected link with all degrees two.
    let mut links_are_circles = true;
    for &v in &vertex_ids {
        let incident: Vec<usize> = edge_cells
            .iter()
            .copied()
            .filter(|&e| moduli.cell(e).covers.contains(&v))
            .collect();
        if incident.is_empty() {
            links_are_circles = false;
            continue;
        }
        let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
        for cell in moduli.cells().iter().filter(|c| c.dim == 2) {
            let at_v: Vec<usize> = cell
                .covers
                .iter()
                .copied()
                .filter(|&e| moduli.cell(e).covers.contains(&v))
                .collect();
            if at_v.is_empty() {
                continue;
            }
            if at_v.len() != 2 {
                links_are_circles = false;
                continue;
            }
            adjacency.entry(at_v[0]).or_default().push(at_v[1]);
            adjacency.entry(at_v[1]).or_default().push(at_v[0]);
        }
        if !incident
            .iter()
            .all(|e| adjacency.get(e).map_or(0, Vec::len) == 2)
        {
            links_are_circles = false;
            continue;
        }
        // Connectivity of the link graph.
        let mut seen = vec![incident[0]];
        let mut stack = vec![incident[0]];
        while let Some(e) = stack.pop() {
            for &next in adjacency.get(&e).into_iter().flatten() {
                if !seen.contains(&next) {
                    seen.push(next);
                    stack.push(next);
                }
            }
        }
        if seen.len() != incident.len() {
            links_are_circles = false;
        }
    }

    // Connectivity of the 1-skeleton.
    let connected = if vertex_ids.is_empty() {
        false
    } else {
        let mut seen = vec![vertex_ids[0]];
        let mut stack = vec![vertex_ids[0]];
        while let Some(v) = stack.pop() {
            for &e in &edge_cells {
                let covers = &moduli.cell(e).covers;
                if covers.contains(&v) {
                    for &w in covers {
                        if !seen.contains(&w) {
                            seen.push(w);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        seen.len() == vertex_ids.len()
    };

    Ok(SurfaceReport {
        f,
        euler,
        pseudo_manifold,
        links_are_circles,
        connected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortness_examples() {
        let l = Linkage::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        assert!(is_short(&[1, 2], &l));
        assert!(!is_short(&[1, 2, 3], &l));
        let l = Linkage::from_ints(&[2, 1, 1, 1]).unwrap();
        assert!(is_short(&[1], &l));
    }

    #[test]
    fn admissibility_examples() {
        let l = Linkage::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        let vertex: CyclicPartition = "[2]|[1]|[4]|[3]|[5]".parse().unwrap();
        assert!(is_admissible(&vertex, &l).unwrap());
        let long_block: CyclicPartition = "[4]|[5]|[1,2,3]".parse().unwrap();
        assert!(!is_admissible(&long_block, &l).unwrap());
        // A 2-block partition is never admissible.
        let two: CyclicPartition = "[1,2]|[3,4,5]".parse().unwrap();
        assert!(!is_admissible(&two, &l).unwrap());
        let wrong_m: CyclicPartition = "[1]|[2]|[3]|[4]".parse().unwrap();
        assert!(matches!(
            is_admissible(&wrong_m, &l),
            Err(Error::GroundSetMismatch { .. })
        ));
    }

    #[test]
    fn construction_rejects_bad_lengths() {
        assert!(matches!(
            Linkage::from_ints(&[1, 1, 1, 1]),
            Err(Error::DegenerateLinkage(_))
        ));
        assert!(matches!(
            Linkage::from_ints(&[10, 1, 1, 1]),
            Err(Error::NotClosable(_))
        ));
        assert!(matches!(
            Linkage::from_ints(&[1, 1, 1]),
            Err(Error::GroundSetTooSmall(3))
        ));
        assert!(matches!(
            Linkage::new(vec![rat(1), rat(1), rat(1), rat(0)]),
            Err(Error::NotClosable(_))
        ));
    }

    #[test]
    fn equilateral_pentagon_moduli() {
        let l = Linkage::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        let moduli = build_moduli_complex(&l).unwrap();
        assert_eq!(moduli.f_vector(), vec![24, 60, 30]);
        assert_eq!(moduli.euler_characteristic(), -6);
    }

    #[test]
    fn quadrilateral_moduli() {
        let l = Linkage::from_ints(&[2, 1, 1, 1]).unwrap();
        let moduli = build_moduli_complex(&l).unwrap();
        assert_eq!(moduli.f_vector(), vec![6, 6]);
        // Every vertex has degree 2.
        let mut degree = vec![0usize; moduli.cells().len()];
        for (_, v) in moduli.covering_pairs() {
            degree[v] += 1;
        }
        for cell in moduli.cells().iter().filter(|c| c.dim == 0) {
            assert_eq!(degree[cell.id], 2);
        }
    }

    #[test]
    fn embedding_checks_pass_and_fail() {
        let l = Linkage::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        let report = verify_embedding(&l).unwrap();
        assert_eq!(report.cells_checked, 114);
        assert!(report.passed(), "{:?}", report.problems);

        let quad = Linkage::from_ints(&[2, 1, 1, 1]).unwrap();
        let report = verify_embedding(&quad).unwrap();
        assert_eq!(report.cells_checked, 12);
        assert!(report.passed());

        // Negative controls: bolting on an inadmissible cell, or dropping an
        // admissible one, must fail.
        let ambient = build_complex(5).unwrap();
        let with_extra = ambient.induced_subcomplex(|label| {
            is_admissible(label, &l).unwrap() || label.to_string() == "[1,2,3]|[4]|[5]"
        });
        assert!(!check_embedding(&with_extra, &l, &ambient).passed());

        let dropped: CyclicPartition = "[2]|[1]|[4]|[3]|[5]".parse().unwrap();
        let with_hole = ambient
            .induced_subcomplex(|label| is_admissible(label, &l).unwrap() && *label != dropped);
        assert!(!check_embedding(&with_hole, &l, &ambient).passed());
    }

    #[test]
    fn pentagon_surface_reports() {
        let l = Linkage::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        let report = surface_report(&l).unwrap();
        assert_eq!(report.euler, -6);
        assert!(report.is_closed_surface());

        let l = Linkage::from_ints(&[3, 1, 1, 1, 1]).unwrap();
        let report = surface_report(&l).unwrap();
        assert_eq!(report.f, vec![24, 36, 14]);
        assert_eq!(report.euler, 2);
        assert!(report.is_closed_surface());

        let quad = Linkage::from_ints(&[2, 1, 1, 1]).unwrap();
        assert!(matches!(
            surface_report(&quad),
            Err(Error::GroundSetMismatch {
                expected: 5,
                got: 4
            })
        ));
    }

    #[test]
    fn downward_closure_of_admissibility() {
        for lengths in [&[2i64, 1, 1, 1][..], &[3, 1, 1, 1, 1], &[1, 1, 1, 1, 1, 2]] {
            let l = Linkage::from_ints(lengths).unwrap();
            let ambient = build_complex(l.m()).unwrap();
            for cell in ambient.cells() {
                if !is_admissible(&cell.label, &l).unwrap() {
                    continue;
                }
                for finer in cell.label.refinements() {
                    assert!(is_admissible(&finer, &l).unwrap());
                }
            }
        }
    }

    #[test]
    fn equilateral_moduli_is_cyclically_symmetric() {
        let l = Linkage::from_ints(&[1, 1, 1, 1, 1]).unwrap();
        let moduli = build_moduli_complex(&l).unwrap();
        let sigma = [2, 3, 4, 5, 1];
        for cell in moduli.cells() {
            assert!(moduli.contains(&cell.label.relabel(&sigma)));
        }
    }
}
