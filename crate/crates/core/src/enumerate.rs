//! Enumeration of the shape families the sweeps run over. Orders are
//! stable: partitions by (cells, lexicographic), shapes by (outer, inner),
//! so reports are reproducible across runs.

use crate::partition::{IndexSet, Partition, SkewShape};

/// All partitions fitting in a rows × cols box, sorted by total cells and
/// then lexicographically; includes the empty partition.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    let mut complete: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..rows {
        let mut next = Vec::new();
        for p in &out {
            let hi = p.last().copied().unwrap_or(cols);
            for v in 1..=hi {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        complete.extend(next.iter().cloned());
        out = next;
    }
    let mut parts: Vec<Partition> = complete
        .into_iter()
        .map(|v| Partition::new(v).expect("constructed decreasing"))
        .collect();
    sort_partitions(&mut parts);
    parts
}

/// All partitions with at most `cells` cells (no box constraint), sorted
/// by (cells, lexicographic); includes the empty partition.
pub fn partitions_with_cells_at_most(cells: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = vec![Partition::empty()];
    for total in 1..=cells {
        let mut stack: Vec<u32> = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition::new(current.clone()).expect("decreasing"));
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        rec(total, total, &mut stack, &mut out);
    }
    sort_partitions(&mut out);
    out
}

/// All subpartitions μ ⊆ λ, sorted by (cells, lexicographic).
pub fn subpartitions(lam: &Partition) -> Vec<Partition> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    let mut complete: Vec<Vec<u32>> = vec![Vec::new()];
    for row in 0..lam.len() {
        let mut next = Vec::new();
        for p in &out {
            let hi = p.last().copied().unwrap_or(u32::MAX).min(lam.part(row));
            for v in 1..=hi {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        complete.extend(next.iter().cloned());
        out = next;
    }
    let mut parts: Vec<Partition> = complete
        .into_iter()
        .map(|v| Partition::new(v).expect("constructed decreasing"))
        .collect();
    sort_partitions(&mut parts);
    parts
}

/// All skew shapes whose outer partition fits in the box, optionally
/// capped by the number of outer cells; ordered by (outer, inner) in the
/// stable partition order.
pub fn skew_shapes_in_box(rows: usize, cols: u32, max_cells: Option<u64>) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for outer in partitions_in_box(rows, cols) {
        if let Some(cap) = max_cells {
            if outer.cells() > cap {
                continue;
            }
        }
        for inner in subpartitions(&outer) {
            out.push(SkewShape::new(outer.clone(), inner).expect("inner ⊆ outer"));
        }
    }
    out
}

/// All subsets of [1, n] of every cardinality, by (size, elements).
pub fn index_subsets(n: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let elems: Vec<u32> = (1..=n as u32).filter(|&e| mask & (1 << (e - 1)) != 0).collect();
        out.push(IndexSet::new(elems, n).expect("subset of [n]"));
    }
    out.sort_by_key(|s| (s.len(), s.elements().to_vec()));
    out
}

/// Weakly increasing index tuples of the given length over 0..count,
/// i.e. multisets; used to enumerate unordered shape tuples.
pub fn multiset_indices(count: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(count: usize, len: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for i in start..count {
            current.push(i);
            rec(count, len, i, current, out);
            current.pop();
        }
    }
    rec(count, len, 0, &mut current, &mut out);
    out
}

fn sort_partitions(parts: &mut [Partition]) {
    parts.sort_by_key(|p| (p.cells(), p.clone()));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_counts() {
        // Partitions in an r x c box number binom(r + c, r).
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_in_box(4, 4).len(), 70);
        assert_eq!(partitions_in_box(2, 5).len(), 21);
    }

    #[test]
    fn subpartition_counts() {
        let lam = Partition::new(vec![3, 3, 3]).unwrap();
        assert_eq!(subpartitions(&lam).len(), 20);
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(subpartitions(&lam).len(), 5);
    }

    #[test]
    fn skew_shape_family_size_3x3() {
        assert_eq!(skew_shapes_in_box(3, 3, None).len(), 175);
    }

    #[test]
    fn cells_bounded_partitions() {
        // 1 + 1 + 2 + 3 + 5 = 12 partitions with at most 4 cells.
        assert_eq!(partitions_with_cells_at_most(4).len(), 12);
    }

    #[test]
    fn stable_order() {
        let parts = partitions_in_box(2, 2);
        let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["0", "1", "1,1", "2", "2,1", "2,2"]);
    }

    #[test]
    fn subsets_of_3() {
        let subsets = index_subsets(3);
        assert_eq!(subsets.len(), 8);
        assert_eq!(subsets[0].len(), 0);
        assert_eq!(subsets[7].elements(), &[1, 2, 3]);
    }

    #[test]
    fn multisets() {
        assert_eq!(multiset_indices(3, 2).len(), 6);
        assert_eq!(multiset_indices(4, 0), vec![Vec::<usize>::new()]);
    }
}
