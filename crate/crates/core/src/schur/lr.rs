//! Littlewood-Richardson enumeration kernels.
//!
//! Two independent code paths are kept deliberately separate:
//!
//! * [`skew_lr_contents`] fills a fixed skew shape cell by cell in reverse
//!   reading order, collecting every lattice content; this is the defining
//!   rule for c^λ_{μν} read off the shape λ/μ.
//! * [`lr_product`] expands a product s_μ·s_ν by growing the outer shape
//!   through chains of horizontal strips subject to the lattice bound
//!   m_i(r) ≤ m_{i-1}(r-1) on cumulative row counts.
//!
//! Both produce exact integer multiplicities; the test suite plus the
//! tableau-monomial oracle check them against each other.

use rustc_hash::FxHashMap;

/// Enumerates every Littlewood-Richardson filling of outer/inner and
/// buckets them by content: the result maps ν to c^{outer}_{inner, ν}.
///
/// `outer` and `inner` are canonical part lists with inner ⊆ outer.
pub(crate) fn skew_lr_contents(outer: &[u32], inner: &[u32]) -> FxHashMap<Vec<u32>, i64> {
    let rows = outer.len();
    let mut result: FxHashMap<Vec<u32>, i64> = FxHashMap::default();
    // Cells in reverse reading order: rows top to bottom, right to left.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..rows {
        let lo = inner.get(r).copied().unwrap_or(0) as usize;
        let hi = outer[r] as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    if cells.is_empty() {
        result.insert(Vec::new(), 1);
        return result;
    }

    let mut grid: Vec<Vec<u32>> = outer.iter().map(|&w| vec![0; w as usize]).collect();
    let mut counts: Vec<u32> = vec![0; rows];

    fn in_shape(r: usize, c: usize, outer: &[u32], inner: &[u32]) -> bool {
        r < outer.len()
            && c < outer[r] as usize
            && c >= inner.get(r).copied().unwrap_or(0) as usize
    }

    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        outer: &[u32],
        inner: &[u32],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        result: &mut FxHashMap<Vec<u32>, i64>,
    ) {
        if pos == cells.len() {
            let content: Vec<u32> = counts
                .iter()
                .copied()
                .take_while(|&c| c > 0)
                .collect();
            debug_assert!(content.windows(2).all(|w| w[0] >= w[1]));
            *result.entry(content).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[pos];
        // Reading right to left, the right neighbour is already placed and
        // bounds the letter from above; the cell directly above bounds it
        // strictly from below.
        let right_cap = if in_shape(r, c + 1, outer, inner) {
            grid[r][c + 1]
        } else {
            u32::MAX
        };
        let above = if r > 0 && in_shape(r - 1, c, outer, inner) {
            grid[r - 1][c]
        } else {
            0
        };
        let cap = right_cap.min(r as u32 + 1);
        let mut v = above + 1;
        while v <= cap {
            let vi = (v - 1) as usize;
            // Lattice prefix condition: letter v may not overtake v-1.
            if v == 1 || counts[vi - 1] > counts[vi] {
                counts[vi] += 1;
                grid[r][c] = v;
                rec(pos + 1, cells, outer, inner, grid, counts, result);
                counts[vi] -= 1;
            }
            v += 1;
        }
        grid[r][c] = 0;
    }

    rec(
        0,
        &cells,
        outer,
        inner,
        &mut grid,
        &mut counts,
        &mut result,
    );
    result
}

/// Adds all horizontal strips of `size` cells to `shape`, optionally
/// subject to the lattice bound against the previous strip's cumulative
/// row profile, and calls `emit(new_shape, strip_cumulative_profile)`.
///
/// The profile has one entry per row index r with the number of strip
/// cells placed in rows 0..=r; it saturates at `size`.
pub(crate) fn add_horizontal_strips(
    shape: &[u32],
    size: u32,
    lattice: Option<&[u32]>,
    emit: &mut dyn FnMut(&[u32], &[u32]),
) {
    let prev_at = |r: isize| -> u32 {
        match lattice {
            None => u32::MAX,
            Some(profile) => {
                if r < 0 {
                    0
                } else if (r as usize) < profile.len() {
                    profile[r as usize]
                } else {
                    profile.last().copied().unwrap_or(0)
                }
            }
        }
    };
    let old_len = shape.len();
    let mut new_shape: Vec<u32> = shape.to_vec();
    new_shape.push(0);
    let mut profile: Vec<u32> = Vec::with_capacity(old_len + 1);

    fn rec(
        row: usize,
        budget: u32,
        old: &[u32],
        new_shape: &mut Vec<u32>,
        profile: &mut Vec<u32>,
        prev_at: &dyn Fn(isize) -> u32,
        emit: &mut dyn FnMut(&[u32], &[u32]),
    ) {
        if budget == 0 {
            emit(new_shape, profile);
            return;
        }
        if row > old.len() {
            return;
        }
        let placed = profile.last().copied().unwrap_or(0);
        let row_cap = if row == 0 {
            budget
        } else {
            old[row - 1].saturating_sub(old.get(row).copied().unwrap_or(0))
        };
        let lattice_cap = prev_at(row as isize - 1).saturating_sub(placed);
        let cap = budget.min(row_cap).min(lattice_cap);
        for k in 0..=cap {
            new_shape[row] += k;
            profile.push(placed + k);
            rec(row + 1, budget - k, old, new_shape, profile, prev_at, emit);
            profile.pop();
            new_shape[row] -= k;
        }
    }

    if size == 0 {
        emit(&new_shape, &profile);
        return;
    }
    rec(
        0,
        size,
        shape,
        &mut new_shape,
        &mut profile,
        &prev_at,
        emit,
    );
}

/// Expansion of the product s_μ·s_ν as a map λ ↦ c^λ_{μν}, enumerated by
/// chains of horizontal strips with the lattice condition. The strip for
/// letter 1 is unconstrained; letter i is bounded row by row by the
/// profile of letter i-1.
pub(crate) fn lr_product(mu: &[u32], nu: &[u32]) -> FxHashMap<Vec<u32>, i64> {
    let mut result: FxHashMap<Vec<u32>, i64> = FxHashMap::default();
    if nu.is_empty() {
        result.insert(mu.to_vec(), 1);
        return result;
    }

    fn rec(
        step: usize,
        nu: &[u32],
        shape: &[u32],
        profile: Option<&[u32]>,
        result: &mut FxHashMap<Vec<u32>, i64>,
    ) {
        if step == nu.len() {
            let mut key = shape.to_vec();
            while key.last() == Some(&0) {
                key.pop();
            }
            *result.entry(key).or_insert(0) += 1;
            return;
        }
        let mut trimmed: Vec<u32> = shape.to_vec();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        add_horizontal_strips(&trimmed, nu[step], profile, &mut |next, prof| {
            rec(step + 1, nu, next, Some(prof), result);
        });
    }

    rec(0, nu, mu, None, &mut result);
    result
}

/// All shapes obtained from λ by adding a horizontal strip of k cells:
/// the row Pieri rule s_λ·h_k = Σ s_μ.
pub(crate) fn pieri_row_shapes(lam: &[u32], k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    add_horizontal_strips(lam, k, None, &mut |shape, _| {
        let mut s = shape.to_vec();
        while s.last() == Some(&0) {
            s.pop();
        }
        out.push(s);
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
        v.sort();
        v
    }

    #[test]
    fn skew_contents_basics() {
        // (2,1)/(1): one filling of content (2), one of content (1,1).
        let m = skew_lr_contents(&[2, 1], &[1]);
        assert_eq!(m.len(), 2);
        assert_eq!(m[&vec![2]], 1);
        assert_eq!(m[&vec![1, 1]], 1);

        // Straight shape (3,1): only content (3,1) with multiplicity 1.
        let m = skew_lr_contents(&[3, 1], &[]);
        assert_eq!(m.len(), 1);
        assert_eq!(m[&vec![3, 1]], 1);

        // Empty shape: the empty content once.
        let m = skew_lr_contents(&[], &[]);
        assert_eq!(m[&vec![]], 1);
    }

    #[test]
    fn pieri_smallest_cases() {
        assert_eq!(
            sorted(pieri_row_shapes(&[1], 1)),
            vec![vec![1, 1], vec![2]]
        );
        assert_eq!(
            sorted(pieri_row_shapes(&[2, 1], 2)),
            vec![vec![2, 2, 1], vec![3, 1, 1], vec![3, 2], vec![4, 1]]
        );
        assert_eq!(pieri_row_shapes(&[], 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn product_pieri_agreement() {
        // s_(2) * s_(2) = s_(4) + s_(3,1) + s_(2,2).
        let m = lr_product(&[2], &[2]);
        assert_eq!(m.len(), 3);
        assert_eq!(m[&vec![4]], 1);
        assert_eq!(m[&vec![3, 1]], 1);
        assert_eq!(m[&vec![2, 2]], 1);

        // s_(1) * s_(1) = s_(2) + s_(1,1).
        let m = lr_product(&[1], &[1]);
        assert_eq!(m.len(), 2);
        assert_eq!(m[&vec![2]], 1);
        assert_eq!(m[&vec![1, 1]], 1);
    }

    #[test]
    fn product_with_multiplicity() {
        // s_(2,1) * s_(2,1) contains s_(3,2,1) with coefficient 2.
        let m = lr_product(&[2, 1], &[2, 1]);
        assert_eq!(m[&vec![3, 2, 1]], 2);
        assert_eq!(m[&vec![4, 2]], 1);
        assert_eq!(m[&vec![2, 2, 1, 1]], 1);
        let total: i64 = m.values().sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn product_and_skew_transpose_each_other() {
        // c^λ_{μν} read from the product must match the count of lattice
        // fillings of λ/μ with content ν.
        let mu = [2, 1];
        let nu = [2, 1];
        let prod = lr_product(&mu, &nu);
        for (lam, &coeff) in &prod {
            let via_skew = skew_lr_contents(lam, &mu)
                .get(nu.as_slice())
                .copied()
                .unwrap_or(0);
            assert_eq!(coeff, via_skew, "λ = {lam:?}");
        }
    }
}
