//! The virtual polytope realization: faces of the weighted Minkowski sum
//! of segments in a direction, cluster schemes, labels, vertex coordinates,
//! support values, representative directions and perturbations.
//!
//! All arithmetic is exact rational. Ambient dimension is `n = m - 1`.
//!
//! Labeling convention used throughout: clusters are read in increasing
//! value order and the distinguished element `m` is inserted at the position
//! of the coordinate mean (as a singleton block when the mean falls strictly
//! between two cluster values, merged into the cluster whose value equals
//! the mean otherwise). The mirror convention (decreasing order) produces
//! the reflected labeling of an isomorphic complex.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{CyclicPartition, ReducedLabel};
use crate::point::Point;
use crate::rat::{self, rat, Rat};

/// The generating data in `R^n`: basis points `e_i`, the all-ones point `S`,
/// the points `R_i = n*e_i - S`, and the segment families `q_ij = [e_i, e_j]`
/// and `r_i = [0, R_i]`.
#[derive(Debug, Clone, Copy)]
pub struct SegmentBasis {
    n: usize,
}

impl SegmentBasis {
    pub fn new(n: usize) -> SegmentBasis {
        assert!(n >= 1);
        SegmentBasis { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self, i: usize) -> Point {
        assert!(i >= 1 && i <= self.n);
        let mut coords = vec![Rat::zero(); self.n];
        coords[i - 1] = Rat::one();
        Point(coords)
    }

    pub fn s(&self) -> Point {
        Point(vec![Rat::one(); self.n])
    }

    /// `R_i`: coordinate `n - 1` at position `i`, `-1` elsewhere.
    pub fn r(&self, i: usize) -> Point {
        assert!(i >= 1 && i <= self.n);
        let mut coords = vec![-Rat::one(); self.n];
        coords[i - 1] = rat(self.n as i64 - 1);
        Point(coords)
    }

    /// Direction vector of `q_ij`, `e_i - e_j`.
    pub fn q_vector(&self, i: usize, j: usize) -> Point {
        &self.e(i) - &self.e(j)
    }
}

/// A direction in `R^n`, `n >= 3`, with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction {
    coords: Vec<Rat>,
}

impl Direction {
    pub fn new(coords: Vec<Rat>) -> Result<Direction> {
        if coords.len() < 3 {
            return Err(Error::ImproperDirection(format!(
                "need at least 3 coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Direction { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Direction {
        Direction::new(coords.iter().map(|&c| rat(c)).collect()).expect("enough coordinates")
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Ground-set size of the labels this direction produces.
    pub fn m(&self) -> usize {
        self.n() + 1
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i - 1]
    }

    pub fn mean(&self) -> Rat {
        rat::mean(&self.coords)
    }

    pub fn as_point(&self) -> Point {
        Point(self.coords.clone())
    }

    /// True iff some coordinate repeats or the vector is constant.
    pub fn is_proper(&self) -> bool {
        let first = &self.coords[0];
        self.coords.iter().any(|c| c != first)
    }

    /// Applies the coordinate permutation `sigma` (`sigma[i-1]` = image of
    /// `i`): the value at old position `i` moves to position `sigma(i)`.
    pub fn permute(&self, sigma: &[usize]) -> Direction {
        assert_eq!(sigma.len(), self.n());
        let mut coords = vec![Rat::zero(); self.n()];
        for (i, v) in self.coords.iter().enumerate() {
            coords[sigma[i] - 1] = v.clone();
        }
        Direction { coords }
    }
}

impl FromStr for Direction {
    type Err = Error;

    /// Comma-separated rationals, e.g. `"7,3,2,0"` or `"7/2,3,2,0"`.
    fn from_str(s: &str) -> Result<Direction> {
        let coords = s
            .split(',')
            .map(rat::parse_rat)
            .collect::<Result<Vec<_>>>()?;
        Direction::new(coords)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rat::rat_string(c))?;
        }
        Ok(())
    }
}

/// Where the coordinate mean sits relative to the (strictly decreasing)
/// cluster values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanPosition {
    /// Mean equals the value of cluster `k` (0-based; never the first or
    /// last cluster).
    At(usize),
    /// Mean lies strictly between the values of clusters `k` and `k + 1`.
    Gap(usize),
}

/// Level sets of a direction's coordinates, ordered by strictly decreasing
/// value, together with the classified mean position.
#[derive(Debug, Clone)]
pub struct ClusterScheme {
    /// Coordinate indices (1-based), grouped by value, largest value first.
    pub clusters: Vec<Vec<usize>>,
    /// The common value of each cluster, strictly decreasing.
    pub values: Vec<Rat>,
    pub mean: Rat,
    pub mean_pos: MeanPosition,
}

impl ClusterScheme {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.mean_pos, MeanPosition::At(_))
    }

    /// The cluster whose value equals the mean, if any.
    pub fn mean_cluster(&self) -> Option<&[usize]> {
        match self.mean_pos {
            MeanPosition::At(k) => Some(&self.clusters[k]),
            MeanPosition::Gap(_) => None,
        }
    }
}

/// Level sets of `xi` in strictly decreasing value order with the mean
/// classified exactly. Errors on constant directions.
pub fn cluster_scheme(xi: &Direction) -> Result<ClusterScheme> {
    if !xi.is_proper() {
        return Err(Error::ImproperDirection(
            "all coordinates equal".to_string(),
        ));
    }
    let n = xi.n();
    let mut idx: Vec<usize> = (1..=n).collect();
    idx.sort_by(|&a, &b| xi.coord(b).cmp(xi.coord(a)).then(a.cmp(&b)));

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut values: Vec<Rat> = Vec::new();
    for i in idx {
        if values.last() == Some(xi.coord(i)) {
            clusters.last_mut().expect("cluster exists").push(i);
        } else {
            values.push(xi.coord(i).clone());
            clusters.push(vec![i]);
        }
    }

    let mean = xi.mean();
    let mean_pos = if let Some(k) = values.iter().position(|v| *v == mean) {
        debug_assert!(k > 0 && k + 1 < values.len(), "mean is strictly interior");
        MeanPosition::At(k)
    } else {
        let k = values
            .iter()
            .position(|v| *v < mean)
            .expect("mean below the maximum");
        debug_assert!(k > 0);
        MeanPosition::Gap(k - 1)
    };
    Ok(ClusterScheme {
        clusters,
        values,
        mean,
        mean_pos,
    })
}

/// True iff `xi` is orthogonal to some `r_i`, i.e. some coordinate equals
/// the mean.
pub fn is_diagonal(xi: &Direction) -> Result<bool> {
    Ok(cluster_scheme(xi)?.is_diagonal())
}

/// The face of a segment in a direction: a vertex or the whole segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportFace {
    Point(Point),
    Segment { from: Point, to: Point },
}

/// Face of `q_ij = [e_i, e_j]` in direction `xi`.
pub fn q_face(xi: &Direction, i: usize, j: usize) -> SupportFace {
    assert!(i >= 1 && i < j && j <= xi.n());
    let basis = SegmentBasis::new(xi.n());
    match xi.coord(i).cmp(xi.coord(j)) {
        std::cmp::Ordering::Greater => SupportFace::Point(basis.e(i)),
        std::cmp::Ordering::Less => SupportFace::Point(basis.e(j)),
        std::cmp::Ordering::Equal => SupportFace::Segment {
            from: basis.e(i),
            to: basis.e(j),
        },
    }
}

/// Face of `r_i = [0, R_i]` in direction `xi`, by the sign of `<R_i, xi>`:
/// positive gives the point `R_i`, zero the whole segment, negative the
/// origin.
pub fn r_face(xi: &Direction, i: usize) -> SupportFace {
    assert!(i >= 1 && i <= xi.n());
    let basis = SegmentBasis::new(xi.n());
    let inner = basis.r(i).dot(&xi.as_point());
    match rat::sign(&inner) {
        1 => SupportFace::Point(basis.r(i)),
        -1 => SupportFace::Point(Point::zero(xi.n())),
        _ => SupportFace::Segment {
            from: Point::zero(xi.n()),
            to: basis.r(i),
        },
    }
}

/// A face of the virtual polytope, as a formal weighted segment sum plus an
/// exact translation point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualFace {
    /// Sum of the point faces of all summands (including `S`).
    pub translation: Point,
    /// Pairs `(i, j)` whose segments `q_ij` contribute whole segments.
    pub positive_segments: Vec<(usize, usize)>,
    /// Indices `i` whose inverted segments `-r_i` contribute whole segments.
    pub negative_segments: Vec<usize>,
    pub label: CyclicPartition,
    pub dim: usize,
}

impl VirtualFace {
    pub fn is_diagonal(&self) -> bool {
        !self.negative_segments.is_empty()
    }
}

/// The face of the virtual polytope in direction `xi`: summand faces are
/// combined pointwise, with the whole-polytope direction rejected.
pub fn face(xi: &Direction) -> Result<VirtualFace> {
    let scheme = cluster_scheme(xi)?;
    let n = xi.n();
    let basis = SegmentBasis::new(n);
    let mut translation = basis.s();
    let mut positive_segments = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            match xi.coord(i).cmp(xi.coord(j)) {
                std::cmp::Ordering::Greater => translation = &translation + &basis.e(i),
                std::cmp::Ordering::Less => translation = &translation + &basis.e(j),
                std::cmp::Ordering::Equal => positive_segments.push((i, j)),
            }
        }
    }
    let mut negative_segments = Vec::new();
    for i in 1..=n {
        match xi.coord(i).cmp(&scheme.mean) {
            std::cmp::Ordering::Greater => translation = &translation - &basis.r(i),
            std::cmp::Ordering::Equal => negative_segments.push(i),
            std::cmp::Ordering::Less => {}
        }
    }
    let label = label_of_scheme(&scheme, n + 1);
    let dim = label.m() - label.block_count();
    let free_dims: usize = scheme.clusters.iter().map(|c| c.len() - 1).sum();
    debug_assert_eq!(
        dim,
        free_dims + usize::from(scheme.is_diagonal()),
        "dimension law"
    );
    Ok(VirtualFace {
        translation,
        positive_segments,
        negative_segments,
        label,
        dim,
    })
}

/// The cyclic label of the face in direction `xi`: clusters sorted by
/// increasing value with `m` placed at the mean.
pub fn face_label(xi: &Direction) -> Result<CyclicPartition> {
    let scheme = cluster_scheme(xi)?;
    Ok(label_of_scheme(&scheme, xi.m()))
}

fn label_of_scheme(scheme: &ClusterScheme, m: usize) -> CyclicPartition {
    let c = scheme.cluster_count();
    let mut blocks: Vec<Vec<usize>> = scheme.clusters.iter().rev().cloned().collect();
    match scheme.mean_pos {
        MeanPosition::At(k) => blocks[c - 1 - k].push(m),
        MeanPosition::Gap(k) => blocks.insert(c - 1 - k, vec![m]),
    }
    let label = CyclicPartition::new(m, blocks).expect("cluster blocks partition the ground set");
    // Proper directions always make proper cells: a gap scheme has at least
    // two clusters and a diagonal scheme at least three.
    debug_assert!(label.block_count() >= 3);
    label
}

/// The geometric vertex carrying a reduced label: the permutohedron vertex
/// whose coordinate permutation is the inverse of the label.
pub fn vertex_coordinates(r: &ReducedLabel) -> Point {
    let n = r.m() - 1;
    let mut coords = vec![Rat::zero(); n];
    for (pos, &value) in r.order().iter().enumerate() {
        coords[value - 1] = rat(pos as i64 + 1);
    }
    Point(coords)
}

/// Exact support value `h(xi)` of the virtual polytope:
/// `sum max(xi_i, xi_j) + <S, xi> - sum max(0, <R_i, xi>)`.
pub fn support_value(xi: &Direction) -> Rat {
    let n = xi.n();
    let mut h = Rat::zero();
    for i in 1..=n {
        for j in (i + 1)..=n {
            h += xi.coord(i).max(xi.coord(j)).clone();
        }
    }
    let point = xi.as_point();
    let basis = SegmentBasis::new(n);
    h += basis.s().dot(&point);
    for i in 1..=n {
        let inner = basis.r(i).dot(&point);
        if inner.is_positive() {
            h -= inner;
        }
    }
    h
}

/// Vertex set of the face in direction `xi`, through the label: the images
/// of all all-singleton refinements of the face label.
pub fn face_vertices(xi: &Direction) -> Result<BTreeSet<Point>> {
    let label = face_label(xi)?;
    Ok(label
        .vertex_labels()
        .iter()
        .map(|v| vertex_coordinates(&v.reduce().expect("vertex label")))
        .collect())
}

/// A rational direction whose face carries the given label (any p >= 3
/// label is realizable). Reads the blocks cyclically after the block
/// containing `m`; the first read block is placed above the mean, the rest
/// strictly increasing below it, and the remainder of `m`'s own block (if
/// any) exactly at the mean, which is normalized to zero.
pub fn representative_direction(label: &CyclicPartition) -> Direction {
    let p = label.block_count();
    assert!(p >= 3, "faces have at least 3 blocks, got {p}");
    let m = label.m();
    let n = m - 1;
    let blocks = label.blocks();

    let mut coords = vec![Rat::zero(); n];
    // Blocks 0..p-1 are read cyclically after the m-block (which is last in
    // canonical rotation). Sizes exclude m itself.
    let top: Rat = (1..p - 1)
        .map(|t| rat((blocks[t].len() * (p - 1 - t)) as i64))
        .fold(Rat::zero(), |a, b| a + b)
        / rat(blocks[0].len() as i64);
    for &e in &blocks[0] {
        coords[e - 1] = top.clone();
    }
    for (t, block) in blocks.iter().enumerate().take(p - 1).skip(1) {
        for &e in block {
            coords[e - 1] = rat(t as i64 + 1 - p as i64);
        }
    }
    // Elements sharing m's block sit exactly at the mean, which is zero by
    // construction.
    for &e in &blocks[p - 1] {
        if e != m {
            coords[e - 1] = Rat::zero();
        }
    }
    let xi = Direction::new(coords).expect("n >= 3");
    debug_assert_eq!(xi.mean(), Rat::zero());
    let realized = face_label(&xi).expect("constructed direction is proper");
    assert_eq!(
        &realized, label,
        "internal: constructed direction realizes a different label"
    );
    xi
}

/// The minimal positive gap among distinct coordinate values and between
/// each value and the mean; perturbations strictly below half of `g / n`
/// cannot merge clusters or cross the mean.
pub fn separation_gap(xi: &Direction) -> Rat {
    let mut values: Vec<Rat> = xi.coords().to_vec();
    values.push(xi.mean());
    values.sort();
    values.dedup();
    let mut gap: Option<Rat> = None;
    for w in values.windows(2) {
        let d = &w[1] - &w[0];
        if gap.as_ref().is_none_or(|g| d < *g) {
            gap = Some(d);
        }
    }
    gap.expect("proper direction has at least two distinct values")
}

/// A direction `eta` close to `xi` with `face_label(eta) = target`, for any
/// `target` refining `face_label(xi)`. Offsets stay strictly below the
/// separation bound of `xi`, so the perturbed face is a face of the face.
pub fn perturb_for_refinement(xi: &Direction, target: &CyclicPartition) -> Result<Direction> {
    let scheme = cluster_scheme(xi)?;
    let label = label_of_scheme(&scheme, xi.m());
    if *target == label {
        return Ok(xi.clone());
    }
    let runs = target
        .refinement_runs(&label)
        .ok_or_else(|| Error::NotARefinement(format!("{target} does not refine {label}")))?;

    let n = xi.n();
    let m = xi.m();
    let p = label.block_count();
    let unit = separation_gap(xi) / rat(8 * (n * n * n) as i64);

    let mut delta = vec![Rat::zero(); n];
    // Non-mean blocks: strictly increasing offsets along the reading order;
    // unsplit clusters stay exactly in place.
    for run in runs.iter().take(p - 1) {
        for (pos, &ti) in run.iter().enumerate() {
            let offset = rat(pos as i64) * &unit;
            for &e in &target.blocks()[ti] {
                delta[e - 1] = offset.clone();
            }
        }
    }

    // The block of m: in the diagonal case its coordinates redistribute
    // around the new mean, which must land exactly on the sub-block keeping
    // m (or strictly inside its gap when m ends up alone).
    let mean_block = &label.blocks()[p - 1];
    if mean_block.len() > 1 {
        let run = &runs[p - 1];
        let target_m_index = target.block_count() - 1;
        let w = run
            .iter()
            .position(|&ti| ti == target_m_index)
            .expect("the run of m's block contains m's target block");
        let b_size = target.blocks()[target_m_index].len() - 1;
        let coords_in_mean = mean_block.len() - 1;

        // Relative slots around the new mean, in half-`unit` steps so both
        // the merged and the gap case share one formula.
        let slot = |pos: usize| -> Rat {
            let rel = pos as i64 - w as i64;
            if b_size > 0 {
                rat(2 * rel)
            } else if rel < 0 {
                rat(2 * rel + 1)
            } else {
                rat(2 * rel - 1)
            }
        };

        let outside: Rat = delta
            .iter()
            .enumerate()
            .filter(|(e, _)| !mean_block.contains(&(e + 1)))
            .map(|(_, d)| d.clone())
            .fold(Rat::zero(), |a, b| a + b);
        let slot_mass: Rat = run
            .iter()
            .enumerate()
            .filter(|(_, &ti)| ti != target_m_index)
            .map(|(pos, &ti)| rat(target.blocks()[ti].len() as i64) * slot(pos))
            .fold(Rat::zero(), |a, b| a + b);
        let half = &unit / rat(2);
        let tau = (outside + slot_mass * &half) / rat((n - coords_in_mean) as i64);

        for (pos, &ti) in run.iter().enumerate() {
            let value = if ti == target_m_index {
                tau.clone()
            } else {
                &tau + slot(pos) * &half
            };
            for &e in &target.blocks()[ti] {
                if e != m {
                    delta[e - 1] = value.clone();
                }
            }
        }
    }

    let coords: Vec<Rat> = xi.coords().iter().zip(&delta).map(|(c, d)| c + d).collect();
    let eta = Direction::new(coords).expect("same arity");
    let realized = face_label(&eta).expect("perturbed direction is proper");
    assert_eq!(
        &realized, target,
        "internal: perturbation realized a different label"
    );
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn dir(coords: &[i64]) -> Direction {
        Direction::from_ints(coords)
    }

    #[test]
    fn basis_points() {
        let b = SegmentBasis::new(4);
        assert_eq!(b.r(2), Point::from_ints(&[-1, 3, -1, -1]));
        let sum = (1..=4).fold(Point::zero(4), |acc, i| &acc + &b.r(i));
        assert!(sum.is_zero());
        // <R_i, xi> = n*xi_i - sum(xi).
        let xi = dir(&[7, 3, 2, 0]);
        assert_eq!(b.r(1).dot(&xi.as_point()), rat(16));
        assert_eq!(b.r(2).dot(&xi.as_point()), rat(0));
    }

    #[test]
    fn direction_parsing() {
        let d: Direction = "7/2,3,2,0".parse().unwrap();
        assert_eq!(d.coord(1), &ratio(7, 2));
        assert_eq!(d.to_string(), "7/2,3,2,0");
        assert!("1,2".parse::<Direction>().is_err());
        assert!("1,x,3".parse::<Direction>().is_err());
    }

    #[test]
    fn cluster_scheme_examples() {
        let s = cluster_scheme(&dir(&[7, 3, 2, 0])).unwrap();
        assert_eq!(s.clusters, vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(s.mean, rat(3));
        assert_eq!(s.mean_pos, MeanPosition::At(1));

        let s = cluster_scheme(&dir(&[10, 1, 0])).unwrap();
        assert_eq!(s.clusters, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(s.mean, ratio(11, 3));
        assert_eq!(s.mean_pos, MeanPosition::Gap(0));

        let s = cluster_scheme(&dir(&[5, 5, 1, 1])).unwrap();
        assert_eq!(s.clusters, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(s.mean, rat(3));
        assert_eq!(s.mean_pos, MeanPosition::Gap(0));

        assert!(matches!(
            cluster_scheme(&dir(&[2, 2, 2])),
            Err(Error::ImproperDirection(_))
        ));
    }

    #[test]
    fn diagonal_detection() {
        assert!(is_diagonal(&dir(&[7, 3, 2, 0])).unwrap());
        assert!(!is_diagonal(&dir(&[10, 1, 0])).unwrap());
        assert!(!is_diagonal(&dir(&[5, 5, 1, 1])).unwrap());
    }

    #[test]
    fn q_and_r_faces() {
        let b = SegmentBasis::new(3);
        assert_eq!(q_face(&dir(&[10, 1, 0]), 1, 2), SupportFace::Point(b.e(1)));
        let xi = dir(&[5, 5, 1, 1]);
        assert_eq!(
            q_face(&xi, 3, 4),
            SupportFace::Segment {
                from: SegmentBasis::new(4).e(3),
                to: SegmentBasis::new(4).e(4)
            }
        );
        assert_eq!(
            q_face(&dir(&[0, 1, 0]), 1, 3),
            SupportFace::Segment {
                from: b.e(1),
                to: b.e(3)
            }
        );

        let xi = dir(&[7, 3, 2, 0]);
        let b4 = SegmentBasis::new(4);
        assert_eq!(r_face(&xi, 1), SupportFace::Point(b4.r(1)));
        assert_eq!(
            r_face(&xi, 2),
            SupportFace::Segment {
                from: Point::zero(4),
                to: b4.r(2)
            }
        );
        assert_eq!(r_face(&xi, 4), SupportFace::Point(Point::zero(4)));
    }

    #[test]
    fn face_label_examples() {
        assert_eq!(
            face_label(&dir(&[7, 3, 2, 0])).unwrap().to_string(),
            "[1]|[4]|[3]|[2,5]"
        );
        assert_eq!(
            face_label(&dir(&[10, 1, 0])).unwrap().to_string(),
            "[1]|[3]|[2]|[4]"
        );
        assert_eq!(
            face_label(&dir(&[5, 1, 3])).unwrap().to_string(),
            "[1]|[2]|[3,4]"
        );
    }

    #[test]
    fn diagonal_edge_of_example_five() {
        let xi = dir(&[7, 3, 2, 0]);
        let f = face(&xi).unwrap();
        assert_eq!(f.translation, Point::from_ints(&[1, 4, 3, 2]));
        assert_eq!(f.positive_segments, vec![]);
        assert_eq!(f.negative_segments, vec![2]);
        assert_eq!(f.dim, 1);
        let verts = face_vertices(&xi).unwrap();
        let expect: BTreeSet<Point> = [
            Point::from_ints(&[1, 4, 3, 2]),
            Point::from_ints(&[2, 1, 4, 3]),
        ]
        .into();
        assert_eq!(verts, expect);
    }

    #[test]
    fn vertex_face_at_m_four() {
        let xi = dir(&[10, 1, 0]);
        let f = face(&xi).unwrap();
        assert_eq!(f.dim, 0);
        assert_eq!(f.translation, Point::from_ints(&[1, 3, 2]));
        assert_eq!(
            face_vertices(&xi).unwrap(),
            BTreeSet::from([Point::from_ints(&[1, 3, 2])])
        );
    }

    #[test]
    fn diagonal_edge_at_m_four() {
        let xi = dir(&[5, 1, 3]);
        let f = face(&xi).unwrap();
        assert_eq!(f.translation, Point::from_ints(&[1, 2, 3]));
        assert_eq!(f.negative_segments, vec![3]);
        let expect: BTreeSet<Point> =
            [Point::from_ints(&[1, 2, 3]), Point::from_ints(&[2, 3, 1])].into();
        assert_eq!(face_vertices(&xi).unwrap(), expect);
    }

    #[test]
    fn vertex_coordinates_inverts_the_label() {
        let r = ReducedLabel::new(vec![2, 5, 4, 1, 3]).unwrap();
        assert_eq!(vertex_coordinates(&r), Point::from_ints(&[4, 1, 5, 3, 2]));
        let id = ReducedLabel::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(vertex_coordinates(&id), Point::from_ints(&[1, 2, 3, 4]));
        let invol = ReducedLabel::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(vertex_coordinates(&invol), Point::from_ints(&[2, 1, 4, 3]));
    }

    #[test]
    fn support_values() {
        assert_eq!(support_value(&dir(&[10, 1, 0])), rat(13));
        assert_eq!(support_value(&dir(&[0, 0, 0])), rat(0));
        let xi = dir(&[7, 3, 2, 0]);
        assert_eq!(support_value(&xi), rat(25));
        for v in face_vertices(&xi).unwrap() {
            assert_eq!(v.dot(&xi.as_point()), rat(25));
        }
    }

    #[test]
    fn representative_directions_realize_labels() {
        for text in [
            "[1]|[4]|[3]|[2,5]",
            "[1]|[2]|[3,4]",
            "[1]|[3]|[2]|[4]",
            "[1,2]|[3]|[4,5,6]",
            "[2]|[1]|[4]|[3]|[5]",
        ] {
            let label: CyclicPartition = text.parse().unwrap();
            let xi = representative_direction(&label);
            assert_eq!(face_label(&xi).unwrap(), label, "label {text}");
        }
    }

    #[test]
    fn perturbation_examples() {
        let xi = dir(&[7, 3, 2, 0]);
        let up: CyclicPartition = "[2]|[1]|[4]|[3]|[5]".parse().unwrap();
        let eta = perturb_for_refinement(&xi, &up).unwrap();
        assert_eq!(face_label(&eta).unwrap(), up);
        assert!(eta.coord(2) > &rat(3) && eta.coord(1) == &rat(7));

        let down: CyclicPartition = "[1]|[4]|[3]|[2]|[5]".parse().unwrap();
        let eta = perturb_for_refinement(&xi, &down).unwrap();
        assert_eq!(face_label(&eta).unwrap(), down);
        assert!(eta.coord(2) < &rat(3));

        let same = face_label(&xi).unwrap();
        assert_eq!(perturb_for_refinement(&xi, &same).unwrap(), xi);

        let unrelated: CyclicPartition = "[2]|[4]|[1]|[3]|[5]".parse().unwrap();
        assert!(matches!(
            perturb_for_refinement(&xi, &unrelated),
            Err(Error::NotARefinement(_))
        ));
    }

    #[test]
    fn strictly_decreasing_direction_vertex_formula() {
        // k coordinates above the mean give the reduced label
        // (k, ..., 1, n, ..., k+1).
        for n in 3..=6usize {
            for k in 1..n {
                let xi = decreasing_with_k_above_mean(n, k);
                let f = face(&xi).unwrap();
                assert_eq!(f.dim, 0, "n={n} k={k}");
                let mut expect: Vec<usize> = (1..=k).rev().collect();
                expect.extend((k + 1..=n).rev());
                assert_eq!(
                    f.label.reduce().unwrap().order(),
                    &expect[..],
                    "n={n} k={k}"
                );
                // The vertex's coordinates equal the label (an involution).
                let pt: Vec<i64> = expect.iter().map(|&v| v as i64).collect();
                assert_eq!(f.translation, Point::from_ints(&pt));
            }
        }
    }

    fn decreasing_with_k_above_mean(n: usize, k: usize) -> Direction {
        // Below part: -1, ..., -(n-k); above part: t + (k-1), ..., t with
        // t solved so the mean falls strictly inside the gap (-1, t).
        let below_mass: i64 = (1..=(n - k) as i64).sum();
        let above_extra: i64 = (0..k as i64).sum();
        // Choose t so that total sum is between -n and t*n - epsilon: take
        // t making the sum zero when possible, else shifted up.
        let t = {
            let mut t = 1i64;
            loop {
                let sum = k as i64 * t + above_extra - below_mass;
                if sum > -(n as i64) && sum < t * n as i64 {
                    break t;
                }
                t += 1;
            }
        };
        let mut coords = Vec::with_capacity(n);
        for i in 0..k as i64 {
            coords.push(rat(t + (k as i64 - 1) - i));
        }
        for j in 1..=(n - k) as i64 {
            coords.push(rat(-j));
        }
        let xi = Direction::new(coords.into_iter().collect()).unwrap();
        let s = cluster_scheme(&xi).unwrap();
        assert_eq!(s.mean_pos, MeanPosition::Gap(k - 1), "n={n} k={k}");
        xi
    }

    #[test]
    fn symmetry_equivariance_small() {
        let xi = dir(&[10, 1, 0]);
        let sigma = vec![1, 3, 2]; // swap coordinates 2 and 3
        let permuted = xi.permute(&sigma);
        assert_eq!(permuted.coords(), dir(&[10, 0, 1]).coords());
        let mut full_sigma = sigma.clone();
        full_sigma.push(4);
        assert_eq!(
            face_label(&permuted).unwrap(),
            face_label(&xi).unwrap().relabel(&full_sigma)
        );
    }

    #[test]
    fn two_realizations_share_vertex_and_label() {
        // Orders xi2 < xi3 < mean < xi1 and xi3 < mean < xi1 < xi2 both
        // realize the cyclic label (1,2,3,4) and the vertex (1,2,3).
        let a = dir(&[10, 0, 1]);
        let b = dir(&[5, 10, -20]);
        let la = face_label(&a).unwrap();
        let lb = face_label(&b).unwrap();
        assert_eq!(la, lb);
        assert_eq!(la.to_string(), "[1]|[2]|[3]|[4]");
        assert_eq!(face(&a).unwrap().translation, Point::from_ints(&[1, 2, 3]));
        assert_eq!(face(&b).unwrap().translation, Point::from_ints(&[1, 2, 3]));
    }
}
