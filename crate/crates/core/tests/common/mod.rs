#![allow(dead_code)]

//! Shared oracles for the integration suites. Everything here recomputes
//! expected values by routes independent of the library implementation:
//! Stirling recurrences, surjection counting, and rotation-minimal
//! canonical strings.

use std::collections::BTreeSet;

use cyclop_core::CyclicPartition;

/// Stirling numbers of the second kind by the standard recurrence.
pub fn stirling2(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    if k == 0 {
        return 0;
    }
    let mut prev = vec![0u64; k + 1];
    prev[0] = 1;
    for i in 1..=n {
        let mut cur = vec![0u64; k + 1];
        for j in 1..=k.min(i) {
            cur[j] = prev[j - 1] + j as u64 * prev[j];
        }
        prev = cur;
    }
    prev[k]
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product::<u64>().max(1)
}

/// Expected number of cyclic partitions of `[m]` into `p` blocks.
pub fn cyclic_partition_count(m: usize, p: usize) -> u64 {
    factorial(p - 1) * stirling2(m, p)
}

/// A canonical string independent of the library's normal form: the
/// lexicographically smallest rotation of the ordered block list.
pub fn min_rotation_string(blocks: &[Vec<usize>]) -> String {
    let strings: Vec<String> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            format!(
                "{{{}}}",
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    (0..strings.len())
        .map(|r| {
            let mut rot = strings.clone();
            rot.rotate_left(r);
            rot.join("|")
        })
        .min()
        .expect("nonempty block list")
}

pub fn min_rotation_of(label: &CyclicPartition) -> String {
    let blocks: Vec<Vec<usize>> = label
        .blocks()
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();
    min_rotation_string(&blocks)
}

/// All cyclic partitions of `[m]` into `p` blocks, enumerated by brute
/// force: every surjection `[m] -> [p]` read as an ordered partition, then
/// deduplicated by rotation.
pub fn brute_cyclic_partitions(m: usize, p: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut assignment = vec![0usize; m];
    loop {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); p];
        for (e, &b) in assignment.iter().enumerate() {
            blocks[b].push(e + 1);
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.insert(min_rotation_string(&blocks));
        }
        // Advance the odometer.
        let mut pos = 0;
        loop {
            if pos == m {
                return out;
            }
            assignment[pos] += 1;
            if assignment[pos] < p {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// Cyclic partitions of `[m]` into `p` blocks with every block short for
/// the given edge lengths, counted by brute force over surjections.
pub fn brute_admissible_cyclic_count(lengths: &[u64], p: usize) -> usize {
    let m = lengths.len();
    let perimeter: u64 = lengths.iter().sum();
    let mut out = BTreeSet::new();
    let mut assignment = vec![0usize; m];
    loop {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); p];
        for (e, &b) in assignment.iter().enumerate() {
            blocks[b].push(e + 1);
        }
        let full = blocks.iter().all(|b| !b.is_empty());
        let all_short = blocks.iter().all(|b| {
            let sum: u64 = b.iter().map(|&e| lengths[e - 1]).sum();
            2 * sum < perimeter
        });
        if full && all_short {
            out.insert(min_rotation_string(&blocks));
        }
        let mut pos = 0;
        loop {
            if pos == m {
                return out.len();
            }
            assignment[pos] += 1;
            if assignment[pos] < p {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// Face counts of the permutohedron on `d` letters, graded by dimension:
/// faces with `j` parts have dimension `d - j`, and there are `j! S(d, j)`
/// of them.
pub fn permutohedron_face_counts(d: usize) -> Vec<u64> {
    (0..d)
        .map(|dim| {
            let parts = d - dim;
            factorial(parts) * stirling2(d, parts)
        })
        .collect()
}

/// Face counts of a product of permutohedra, by convolution.
pub fn product_face_counts(sizes: &[usize]) -> Vec<u64> {
    let mut acc = vec![1u64];
    for &d in sizes {
        let factor = permutohedron_face_counts(d);
        let mut next = vec![0u64; acc.len() + factor.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, f) in factor.iter().enumerate() {
                next[i + j] += a * f;
            }
        }
        acc = next;
    }
    acc
}
