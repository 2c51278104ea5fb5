//! Kazhdan-Lusztig polynomials for small symmetric groups, used purely as
//! an independent oracle: the f-coefficients of the θ expansion must equal
//! (-1)^{l(vw)} Q_{w,v}(1), and θ must kill the Kazhdan-Lusztig basis
//! elements of non-321-avoiding permutations.
//!
//! The recursion is the textbook one: with s a left descent of v and
//! v' = sv,
//!
//!   P_{w,v} = q^{1-c} P_{sw,v'} + q^c P_{w,v'}
//!             - Σ_z μ(z,v') q^{(l(v)-l(z))/2} P_{w,z}
//!
//! where c = 1 iff sw < w and z runs over z ≤ v' with sz < z.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::IntPoly;
use crate::tl::{theta_expand, NoncrossingMatching};

const MAX_N: usize = 5;

/// The table of P_{w,v}(q) for all pairs in S_n, n <= 5.
pub struct KlTable {
    n: usize,
    perms: Vec<Permutation>,
    index: FxHashMap<Permutation, usize>,
    leq: Vec<Vec<bool>>,
    p: Vec<Vec<IntPoly>>,
}

impl KlTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::BoundExceeded {
                what: "symmetric group rank",
                got: n,
                max: MAX_N,
            });
        }
        let mut perms = Permutation::all(n);
        perms.sort_by_key(|w| (w.length(), w.one_line().to_vec()));
        let index: FxHashMap<Permutation, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let size = perms.len();

        // Bruhat order via the lifting property: for s a left descent of v,
        // w <= v iff (sw <= sv when sw < w) and (w <= sv otherwise).
        let mut leq = vec![vec![false; size]; size];
        for (vi, v) in perms.iter().enumerate() {
            for (wi, w) in perms.iter().enumerate() {
                leq[wi][vi] = bruhat_leq_rec(w, v);
            }
            leq[vi][vi] = true;
        }

        let mut table = Self {
            n,
            perms,
            index,
            leq,
            p: Vec::new(),
        };
        table.fill();
        Ok(table)
    }

    fn fill(&mut self) {
        let size = self.perms.len();
        self.p = vec![vec![IntPoly::zero(); size]; size];
        // perms are sorted by length, so v' = sv precedes v.
        for vi in 0..size {
            let v = self.perms[vi].clone();
            if v.is_identity() {
                self.p[vi][vi] = IntPoly::one();
                continue;
            }
            let s = v.left_descents()[0];
            let vp = v.left_multiply_adjacent(s);
            let vpi = self.index[&vp];
            let lv = v.length();

            // Precompute the correction terms: z <= v' with sz < z and
            // μ(z, v') nonzero.
            let mut corrections: Vec<(usize, i64, usize)> = Vec::new();
            for zi in 0..size {
                if !self.leq[zi][vpi] {
                    continue;
                }
                let z = &self.perms[zi];
                let lz = z.length();
                let sz = z.left_multiply_adjacent(s);
                if sz.length() >= lz {
                    continue;
                }
                let gap = vp.length() as i64 - lz as i64 - 1;
                if gap < 0 || gap % 2 != 0 {
                    continue;
                }
                let mu = self.p[zi][vpi].coeff((gap / 2) as usize);
                if mu != 0 {
                    debug_assert_eq!((lv - lz) % 2, 0);
                    corrections.push((zi, mu, (lv - lz) / 2));
                }
            }

            for wi in 0..size {
                if !self.leq[wi][vi] {
                    continue;
                }
                let w = &self.perms[wi];
                let sw = w.left_multiply_adjacent(s);
                let swi = self.index[&sw];
                let c_desc = sw.length() < w.length();
                let (e1, e2) = if c_desc { (0, 1) } else { (1, 0) };
                let mut sum = &self.p[swi][vpi].shift_up(e1) + &self.p[wi][vpi].shift_up(e2);
                for &(zi, mu, exp) in &corrections {
                    let term = self.p[wi][zi].shift_up(exp);
                    sum -= &term.scale(mu);
                }
                if wi == vi {
                    debug_assert_eq!(sum, IntPoly::one(), "P_{{w,w}} must be 1 at {v}");
                } else {
                    debug_assert!(
                        sum.degree().map_or(true, |d| 2 * d + 1 <= lv - w.length()),
                        "degree bound violated for P_{{{w}, {v}}} = {sum:?}"
                    );
                }
                self.p[wi][vi] = sum;
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bruhat comparison w <= v.
    pub fn bruhat_leq(&self, w: &Permutation, v: &Permutation) -> bool {
        self.leq[self.index[w]][self.index[v]]
    }

    /// P_{w,v}(q); zero unless w <= v, and P_{w,w} = 1.
    pub fn p(&self, w: &Permutation, v: &Permutation) -> &IntPoly {
        &self.p[self.index[w]][self.index[v]]
    }

    /// Q_{v,w}(q) = P_{w∘w, w∘v}(q) for the longest element w∘.
    pub fn q(&self, v: &Permutation, w: &Permutation) -> &IntPoly {
        let w0 = Permutation::longest(self.n);
        let a = w0.compose(w);
        let b = w0.compose(v);
        &self.p[self.index[&a]][self.index[&b]]
    }

    /// The coefficient predicted for f_w(v): (-1)^{l(vw)} Q_{w,v}(1).
    pub fn f_prediction(&self, w: &Permutation, v: &Permutation) -> i64 {
        let sign = if v.compose(w).length() % 2 == 0 { 1 } else { -1 };
        sign * self.q(w, v).eval(1)
    }

    /// θ applied to the Kazhdan-Lusztig basis element C'_w(1) =
    /// Σ_{x ≤ w} P_{x,w}(1) T_x, expanded over basis matchings.
    pub fn theta_of_kl_basis(&self, w: &Permutation) -> BTreeMap<NoncrossingMatching, i64> {
        let wi = self.index[w];
        let mut acc: BTreeMap<NoncrossingMatching, i64> = BTreeMap::new();
        for (xi, x) in self.perms.iter().enumerate() {
            if !self.leq[xi][wi] {
                continue;
            }
            let mult = self.p[xi][wi].eval(1);
            if mult == 0 {
                continue;
            }
            for (m, c) in theta_expand(x) {
                *acc.entry(m).or_insert(0) += mult * c;
            }
        }
        acc.retain(|_, c| *c != 0);
        acc
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }
}

fn bruhat_leq_rec(w: &Permutation, v: &Permutation) -> bool {
    if w.length() > v.length() {
        return false;
    }
    if w == v {
        return true;
    }
    match v.left_descents().first() {
        None => w.is_identity(),
        Some(&s) => {
            let vp = v.left_multiply_adjacent(s);
            let sw = w.left_multiply_adjacent(s);
            if sw.length() < w.length() {
                bruhat_leq_rec(&sw, &vp)
            } else {
                bruhat_leq_rec(w, &vp)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::basis_permutations;

    #[test]
    fn normalization_and_small_ranks() {
        for n in 1..=4 {
            let t = KlTable::new(n).unwrap();
            for w in t.permutations() {
                assert_eq!(t.p(w, w), &IntPoly::one());
            }
        }
        // All Kazhdan-Lusztig polynomials in S_3 are 1 on comparable pairs.
        let t3 = KlTable::new(3).unwrap();
        for v in t3.permutations() {
            for w in t3.permutations() {
                if t3.bruhat_leq(w, v) {
                    assert_eq!(t3.p(w, v), &IntPoly::one(), "P_{{{w},{v}}}");
                }
            }
        }
    }

    #[test]
    fn rank_bound_enforced() {
        assert!(KlTable::new(6).is_err());
        assert!(KlTable::new(0).is_err());
    }

    #[test]
    fn s4_known_nontrivial_entries() {
        // The two singular Schubert varieties of S_4: P_{x,3412} = 1+q for
        // x <= 1324 (two such x) and P_{x,4231} = 1+q for x <= 2143 (four).
        let t = KlTable::new(4).unwrap();
        let one_plus_q = IntPoly::from_coeffs(vec![1, 1]);
        let v3412 = Permutation::from_one_line(vec![3, 4, 1, 2]).unwrap();
        let v4231 = Permutation::from_one_line(vec![4, 2, 3, 1]).unwrap();
        let x1324 = Permutation::from_one_line(vec![1, 3, 2, 4]).unwrap();
        let x2143 = Permutation::from_one_line(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(t.p(&x1324, &v3412), &one_plus_q);
        assert_eq!(t.p(&x2143, &v4231), &one_plus_q);
        let mut nontrivial = Vec::new();
        for v in t.permutations() {
            for w in t.permutations() {
                if t.bruhat_leq(w, v) && t.p(w, v) != &IntPoly::one() {
                    assert_eq!(t.p(w, v), &one_plus_q, "P_{{{w}, {v}}}");
                    nontrivial.push((w.clone(), v.clone()));
                }
            }
        }
        assert_eq!(nontrivial.len(), 6);
        for (w, v) in &nontrivial {
            if v == &v3412 {
                assert!(t.bruhat_leq(w, &x1324));
            } else {
                assert_eq!(v, &v4231);
                assert!(t.bruhat_leq(w, &x2143));
            }
        }
    }

    #[test]
    fn bruhat_sanity() {
        let t = KlTable::new(3).unwrap();
        let e = Permutation::identity(3);
        let w0 = Permutation::longest(3);
        for w in t.permutations() {
            assert!(t.bruhat_leq(&e, w));
            assert!(t.bruhat_leq(w, &w0));
        }
        let s1 = Permutation::from_one_line(vec![2, 1, 3]).unwrap();
        let s2 = Permutation::from_one_line(vec![1, 3, 2]).unwrap();
        assert!(!t.bruhat_leq(&s1, &s2));
        assert!(!t.bruhat_leq(&s2, &s1));
    }

    #[test]
    fn f_coefficients_match_theta_s3() {
        let t = KlTable::new(3).unwrap();
        let basis = basis_permutations(3);
        for v in t.permutations() {
            let expansion = theta_expand(v);
            for (w, m) in basis.iter() {
                let f = expansion.get(m).copied().unwrap_or(0);
                assert_eq!(f, t.f_prediction(w, v), "f_{{{w}}}({v})");
            }
        }
    }

    #[test]
    fn fan_green_projection_s3() {
        let t = KlTable::new(3).unwrap();
        let basis = basis_permutations(3);
        for w in t.permutations() {
            let image = t.theta_of_kl_basis(w);
            if let Some((_, m)) = basis.iter().find(|(x, _)| x == w) {
                assert_eq!(image.len(), 1, "θ(C'_{w}) is a single basis element");
                assert_eq!(image[m], 1);
            } else {
                assert!(image.is_empty(), "θ(C'_{w}) = 0 for non-321-avoiding {w}");
            }
        }
    }
}
