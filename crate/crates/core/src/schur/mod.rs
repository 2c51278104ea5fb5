//! Exact arithmetic in the Schur basis: sparse integer vectors over
//! partitions, Littlewood-Richardson coefficients, skew Schur expansion,
//! products, and the complete homogeneous (h) side with the Jacobi-Trudi
//! determinant.

mod intern;
mod lr;
pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{Partition, SkewShape};

pub(crate) use intern::{export_products, import_products};

/// A sparse integer vector over the Schur basis. No zero coefficients are
/// stored; iteration order is lexicographic in the indexing partition.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurVector {
    terms: BTreeMap<Partition, i64>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The multiplicative unit s_∅.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, 1);
        Self { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut v = Self::zero();
        for (p, c) in pairs {
            v.add_term(p, c);
        }
        v
    }

    pub fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(p) {
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

    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn add(&self, other: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn negate(&self) -> SchurVector {
        SchurVector {
            terms: self.terms.iter().map(|(p, &c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> SchurVector {
        if c == 0 {
            return SchurVector::zero();
        }
        SchurVector {
            terms: self.terms.iter().map(|(p, &v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Bilinear extension of s_μ·s_ν = Σ_λ c^λ_{μν} s_λ.
    pub fn multiply(&self, other: &SchurVector) -> SchurVector {
        let a = self.to_ids();
        let b = other.to_ids();
        SchurVector::from_ids(&intern::multiply_id_vecs(&a, &b))
    }

    /// c-th power via repeated multiplication.
    pub fn pow(&self, c: u32) -> SchurVector {
        let mut out = SchurVector::one();
        for _ in 0..c {
            out = out.multiply(self);
        }
        out
    }

    /// Product of many factors, folded pairwise in a balanced tree so that
    /// intermediate degrees stay as small as possible.
    pub fn multiply_many(factors: &[SchurVector]) -> SchurVector {
        match factors.len() {
            0 => SchurVector::one(),
            1 => factors[0].clone(),
            _ => {
                let mut layer: Vec<Vec<(u32, i64)>> =
                    factors.iter().map(|f| f.to_ids()).collect();
                while layer.len() > 1 {
                    let mut next = Vec::with_capacity(layer.len().div_ceil(2));
                    let mut it = layer.chunks(2);
                    for chunk in &mut it {
                        match chunk {
                            [a, b] => next.push(intern::multiply_id_vecs(a, b)),
                            [a] => next.push(a.clone()),
                            _ => unreachable!(),
                        }
                    }
                    layer = next;
                }
                SchurVector::from_ids(&layer[0])
            }
        }
    }

    /// True iff every coefficient is nonnegative; otherwise also returns
    /// the lexicographically least negative term.
    pub fn is_schur_nonneg(&self) -> (bool, Option<(Partition, i64)>) {
        for (p, c) in self.iter() {
            if c < 0 {
                return (false, Some((p.clone(), c)));
            }
        }
        (true, None)
    }

    /// The minimum coefficient together with the lexicographically least
    /// partition attaining it.
    pub fn min_coefficient(&self) -> Option<(Partition, i64)> {
        self.iter()
            .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(b.0)))
            .map(|(p, c)| (p.clone(), c))
    }

    fn to_ids(&self) -> Vec<(u32, i64)> {
        let mut v: Vec<(u32, i64)> = self
            .terms
            .iter()
            .map(|(p, &c)| (intern::intern(p), c))
            .collect();
        v.sort_unstable_by_key(|&(id, _)| id);
        v
    }

    fn from_ids(ids: &[(u32, i64)]) -> SchurVector {
        SchurVector {
            terms: ids
                .iter()
                .filter(|(_, c)| *c != 0)
                .map(|&(id, c)| (intern::resolve(id), c))
                .collect(),
        }
    }
}

impl fmt::Display for SchurVector {
    /// Descending lexicographic order, e.g. `s[2] + s[1,1]` or
    /// `2s[2,1] - s[3]`; the zero vector prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, &c) in self.terms.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "s[{p}]")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SchurVector {
    /// A list of {partition, coefficient} pairs in lexicographic order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            coefficient: i64,
        }
        s.collect_seq(self.terms.iter().map(|(p, &c)| Term {
            partition: p,
            coefficient: c,
        }))
    }
}

impl<'de> Deserialize<'de> for SchurVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            partition: Partition,
            coefficient: i64,
        }
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(SchurVector::from_terms(
            terms.into_iter().map(|t| (t.partition, t.coefficient)),
        ))
    }
}

/// The Littlewood-Richardson coefficient c^λ_{μν}, computed by enumerating
/// the lattice fillings of λ/μ; zero when degrees or containment fail.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if mu.cells() + nu.cells() != lam.cells() || !mu.contained_in(lam) {
        return 0;
    }
    let target = intern::intern(nu);
    intern::skew_expansion(lam, mu)
        .iter()
        .find(|&&(id, _)| id == target)
        .map(|&(_, c)| c)
        .unwrap_or(0)
}

/// Expansion s_{λ/μ} = Σ_ν c^λ_{μν} s_ν; straight shapes give one term.
pub fn skew_schur_expand(shape: &SkewShape) -> SchurVector {
    SchurVector::from_ids(&intern::skew_expansion(shape.outer(), shape.inner()))
}

/// Product of two Schur vectors.
pub fn schur_multiply(f: &SchurVector, g: &SchurVector) -> SchurVector {
    f.multiply(g)
}

/// Expansion of a product of skew Schur functions.
pub fn product_of_shapes(shapes: &[SkewShape]) -> SchurVector {
    let factors: Vec<SchurVector> = shapes.iter().map(skew_schur_expand).collect();
    SchurVector::multiply_many(&factors)
}

/// A sparse integer combination of monomials in the complete homogeneous
/// symmetric functions. A monomial is a decreasing list of indices >= 1;
/// h_0 = 1 is absorbed and any h_k with k < 0 annihilates its term.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct HVector {
    terms: BTreeMap<Vec<u32>, i64>,
}

impl HVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), 1);
        Self { terms }
    }

    /// The generator h_k: zero for k < 0, the unit for k = 0.
    pub fn h(k: i64) -> Self {
        match k.cmp(&0) {
            std::cmp::Ordering::Less => Self::zero(),
            std::cmp::Ordering::Equal => Self::one(),
            std::cmp::Ordering::Greater => {
                let mut terms = BTreeMap::new();
                terms.insert(vec![k as u32], 1);
                Self { terms }
            }
        }
    }

    pub fn monomial(indices: &[u32], coeff: i64) -> Self {
        let mut sorted: Vec<u32> = indices.iter().copied().filter(|&k| k > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(sorted, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, monomial: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        debug_assert!(monomial.windows(2).all(|w| w[0] >= w[1]));
        match self.terms.entry(monomial) {
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

    pub fn add(&self, other: &HVector) -> HVector {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HVector) -> HVector {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> HVector {
        if c == 0 {
            return HVector::zero();
        }
        HVector {
            terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Product: monomials merge as multisets since the h's commute.
    pub fn multiply(&self, other: &HVector) -> HVector {
        let mut out = HVector::zero();
        for (ma, ca) in self.iter() {
            for (mb, cb) in other.iter() {
                let mut m: Vec<u32> = ma.iter().chain(mb.iter()).copied().collect();
                m.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Expands every h-monomial into the Schur basis by iterated row
    /// Pieri insertion; h_k alone maps to s_(k).
    pub fn expand(&self) -> SchurVector {
        let mut acc: rustc_hash::FxHashMap<u32, i64> = rustc_hash::FxHashMap::default();
        for (m, c) in self.iter() {
            for &(id, mult) in intern::h_monomial_expansion(m).iter() {
                *acc.entry(id).or_insert(0) += c * mult;
            }
        }
        let mut ids: Vec<(u32, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        ids.sort_unstable_by_key(|&(id, _)| id);
        SchurVector::from_ids(&ids)
    }
}

/// Expands an h-monomial combination into the Schur basis.
pub fn h_product_expand(hv: &HVector) -> SchurVector {
    hv.expand()
}

/// The Jacobi-Trudi determinant det(h_{λ_i - μ_j - i + j}) for λ/μ padded
/// to the length of λ, expanded into the Schur basis. Independent of the
/// Littlewood-Richardson route, hence usable as a second oracle.
pub fn jacobi_trudi_det(shape: &SkewShape) -> SchurVector {
    let k = shape.outer().len();
    let lam = shape.outer();
    let mu = shape.inner();
    let mut det = HVector::zero();
    for (sign, perm) in signed_permutations(k) {
        let mut monomial: Vec<u32> = Vec::with_capacity(k);
        let mut dead = false;
        for (i, &ji) in perm.iter().enumerate() {
            let idx = lam.part(i) as i64 - mu.part(ji) as i64 - i as i64 + ji as i64;
            if idx < 0 {
                dead = true;
                break;
            }
            if idx > 0 {
                monomial.push(idx as u32);
            }
        }
        if !dead {
            monomial.sort_unstable_by(|a, b| b.cmp(a));
            det.add_term(monomial, sign);
        }
    }
    det.expand()
}

/// All permutations of 0..k with their signs, for Leibniz expansions.
pub(crate) fn signed_permutations(k: usize) -> Vec<(i64, Vec<usize>)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    fn rec(pos: usize, perm: &mut Vec<usize>, out: &mut Vec<(i64, Vec<usize>)>) {
        let k = perm.len();
        if pos == k {
            let mut inversions = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((if inversions % 2 == 0 { 1 } else { -1 }, perm.clone()));
            return;
        }
        for i in pos..k {
            perm.swap(pos, i);
            rec(pos + 1, perm, out);
            perm.swap(pos, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn sv(pairs: &[(&[u32], i64)]) -> SchurVector {
        SchurVector::from_terms(pairs.iter().map(|&(parts, c)| (p(parts), c)))
    }

    #[test]
    fn lr_coefficient_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[4]), &p(&[2]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2, 1]), &p(&[1])), 1);
        // Degree or containment mismatches give zero.
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[1, 1, 1]), &p(&[2]), &p(&[1])), 0);
    }

    #[test]
    fn skew_expand_examples() {
        assert_eq!(
            skew_schur_expand(&sk("2,1/1")),
            sv(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(skew_schur_expand(&sk("3,1")), sv(&[(&[3, 1], 1)]));
        assert_eq!(skew_schur_expand(&sk("1,1/1")), sv(&[(&[1], 1)]));
    }

    #[test]
    fn schur_multiply_examples() {
        let s1 = SchurVector::basis(p(&[1]));
        assert_eq!(
            s1.multiply(&s1),
            sv(&[(&[2], 1), (&[1, 1], 1)])
        );
        let s2 = SchurVector::basis(p(&[2]));
        assert_eq!(
            s2.multiply(&s2),
            sv(&[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)])
        );
        let s21 = SchurVector::basis(p(&[2, 1]));
        assert_eq!(s21.multiply(&SchurVector::one()), s21);
    }

    #[test]
    fn multiply_is_commutative_and_associative() {
        let a = SchurVector::basis(p(&[2, 1]));
        let b = SchurVector::basis(p(&[1, 1]));
        let c = SchurVector::basis(p(&[3]));
        assert_eq!(a.multiply(&b), b.multiply(&a));
        assert_eq!(
            a.multiply(&b).multiply(&c),
            a.multiply(&b.multiply(&c))
        );
        assert_eq!(
            SchurVector::multiply_many(&[a.clone(), b.clone(), c.clone()]),
            a.multiply(&b).multiply(&c)
        );
    }

    #[test]
    fn h_product_examples() {
        assert_eq!(HVector::h(2).expand(), sv(&[(&[2], 1)]));
        assert_eq!(
            HVector::h(1).multiply(&HVector::h(1)).expand(),
            sv(&[(&[2], 1), (&[1, 1], 1)])
        );
        let h2h1_minus_h3 = HVector::h(2).multiply(&HVector::h(1)).sub(&HVector::h(3));
        assert_eq!(h2h1_minus_h3.expand(), sv(&[(&[2, 1], 1)]));
        assert!(HVector::h(-2).is_zero());
        assert_eq!(HVector::h(0), HVector::one());
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi_det(&sk("2,1")), sv(&[(&[2, 1], 1)]));
        for k in 1..=5 {
            assert_eq!(
                jacobi_trudi_det(&SkewShape::straight(p(&[k]))),
                SchurVector::basis(p(&[k]))
            );
        }
        assert_eq!(
            jacobi_trudi_det(&sk("2,1/1")),
            sv(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(jacobi_trudi_det(&SkewShape::default()), SchurVector::one());
    }

    #[test]
    fn nonneg_and_witness() {
        let (ok, w) = sv(&[(&[2, 2], 1)]).is_schur_nonneg();
        assert!(ok && w.is_none());
        let diff = sv(&[(&[2], 1), (&[1, 1], -1)]);
        let (ok, w) = diff.is_schur_nonneg();
        assert!(!ok);
        assert_eq!(w, Some((p(&[1, 1]), -1)));
        let (ok, w) = SchurVector::zero().is_schur_nonneg();
        assert!(ok && w.is_none());
    }

    #[test]
    fn display_formats() {
        assert_eq!(sv(&[(&[2], 1), (&[1, 1], 1)]).to_string(), "s[2] + s[1,1]");
        assert_eq!(sv(&[(&[1, 1], -1)]).to_string(), "-s[1,1]");
        assert_eq!(SchurVector::zero().to_string(), "0");
        assert_eq!(sv(&[(&[], 3)]).to_string(), "3s[0]");
    }

    #[test]
    fn serde_roundtrip_is_lossless() {
        let v = sv(&[(&[3, 1], 2), (&[2, 2], -1), (&[], 5)]);
        let json = serde_json::to_string(&v).unwrap();
        let back: SchurVector = serde_json::from_str(&json).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn lr_symmetry_small_degrees() {
        // c^λ_{μν} = c^λ_{νμ} for all |λ| <= 8 with μ, ν complementary.
        let mut all: Vec<Partition> = vec![Partition::empty()];
        for total in 1..=8u32 {
            all.extend(partitions_of(total));
        }
        for lam in all.iter().filter(|l| l.cells() <= 8) {
            for mu in all.iter().filter(|m| m.cells() <= lam.cells()) {
                if !mu.contained_in(lam) {
                    continue;
                }
                let rest = lam.cells() - mu.cells();
                for nu in all.iter().filter(|n| n.cells() == rest) {
                    assert_eq!(
                        lr_coefficient(lam, mu, nu),
                        lr_coefficient(lam, nu, mu),
                        "λ={lam} μ={mu} ν={nu}"
                    );
                }
            }
        }
    }

    pub(crate) fn partitions_of(total: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition::new(current.clone()).unwrap());
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn degree_homogeneity_of_products() {
        let a = skew_schur_expand(&sk("3,2/1"));
        let b = skew_schur_expand(&sk("2,2"));
        let prod = a.multiply(&b);
        for (lam, _) in prod.iter() {
            assert_eq!(lam.cells(), 4 + 4);
        }
    }
}
