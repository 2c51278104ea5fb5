//! Independent oracle for skew Schur functions: direct enumeration of
//! semistandard tableaux as monomials in finitely many variables, with a
//! leading-monomial elimination back into Schur polynomials.
//!
//! Nothing here touches the Littlewood-Richardson kernels; agreement with
//! [`crate::schur::skew_schur_expand`] and
//! [`crate::schur::jacobi_trudi_det`] is what the oracle-triangle tests
//! certify.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::schur::SchurVector;

/// A sparse polynomial in a fixed number of variables; keys are exponent
/// vectors of that length.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: i64) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// self -= c·other.
    fn sub_scaled(&mut self, other: &MonomialPoly, c: i64) {
        for (e, oc) in other.iter() {
            self.add_term(e.clone(), -c * oc);
        }
    }

    /// The lexicographically greatest monomial and its coefficient.
    fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }
}

impl fmt::Debug for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e:?}")?;
            first = false;
        }
        Ok(())
    }
}

/// The exact monomial expansion of s_{λ/μ}(x_1,…,x_m): one monomial per
/// semistandard filling with entries in [1, m].
pub fn tableau_monomial_oracle(shape: &SkewShape, m: usize) -> MonomialPoly {
    ssyt_polynomial(shape.outer(), shape.inner(), m)
}

fn ssyt_polynomial(outer: &Partition, inner: &Partition, m: usize) -> MonomialPoly {
    let rows = outer.len();
    let mut poly = MonomialPoly::zero(m);
    // Cells in row-major order, left to right.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..rows {
        for c in inner.part(r) as usize..outer.part(r) as usize {
            cells.push((r, c));
        }
    }
    if cells.is_empty() {
        poly.add_term(vec![0; m], 1);
        return poly;
    }

    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; outer.part(r) as usize])
        .collect();
    let mut exponents = vec![0u32; m];

    fn in_shape(r: usize, c: usize, outer: &Partition, inner: &Partition) -> bool {
        r < outer.len() && c < outer.part(r) as usize && c >= inner.part(r) as usize
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        outer: &Partition,
        inner: &Partition,
        m: usize,
        grid: &mut Vec<Vec<u32>>,
        exponents: &mut Vec<u32>,
        poly: &mut MonomialPoly,
    ) {
        if pos == cells.len() {
            poly.add_term(exponents.clone(), 1);
            return;
        }
        let (r, c) = cells[pos];
        let left = if c > 0 && in_shape(r, c - 1, outer, inner) {
            grid[r][c - 1]
        } else {
            1
        };
        let above = if r > 0 && in_shape(r - 1, c, outer, inner) {
            grid[r - 1][c]
        } else {
            0
        };
        for v in left.max(above + 1)..=m as u32 {
            grid[r][c] = v;
            exponents[(v - 1) as usize] += 1;
            rec(pos + 1, cells, outer, inner, m, grid, exponents, poly);
            exponents[(v - 1) as usize] -= 1;
        }
        grid[r][c] = 0;
    }

    rec(
        0,
        &cells,
        outer,
        inner,
        m,
        &mut grid,
        &mut exponents,
        &mut poly,
    );
    poly
}

/// The Schur polynomial s_λ(x_1,…,x_m), cached per (λ, m).
pub fn schur_polynomial(lam: &Partition, m: usize) -> Arc<MonomialPoly> {
    static CACHE: OnceLock<DashMap<(Partition, usize), Arc<MonomialPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(&(lam.clone(), m)) {
        return hit.clone();
    }
    let value = Arc::new(ssyt_polynomial(lam, &Partition::empty(), m));
    cache.insert((lam.clone(), m), value.clone());
    value
}

/// Decomposes a symmetric polynomial into Schur polynomials by repeatedly
/// subtracting the Schur polynomial of the leading exposed monomial. The
/// leading monomial strictly decreases, so this terminates.
pub fn decompose_into_schur(poly: &MonomialPoly) -> Result<SchurVector> {
    let m = poly.nvars();
    let mut rest = poly.clone();
    let mut out = SchurVector::zero();
    while let Some((exponents, c)) = rest.leading() {
        if exponents.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Config(format!(
                "leading monomial {exponents:?} is not weakly decreasing; \
                 the polynomial is not symmetric"
            )));
        }
        let lam = Partition::new(exponents.clone())?;
        let c = c;
        rest.sub_scaled(&schur_polynomial(&lam, m), c);
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Oracle route end to end: enumerate s_{λ/μ}(x_1..x_m) and decompose it.
/// Valid against the full expansion whenever m >= rows of λ.
pub fn oracle_schur_expansion(shape: &SkewShape, m: usize) -> Result<SchurVector> {
    decompose_into_schur(&tableau_monomial_oracle(shape, m))
}
