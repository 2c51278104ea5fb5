//! Partitions, skew shapes, index sets and the shape-level operations:
//! conjugation, the ∨/∧ lattice, merge-sorting of parts, stride and brace
//! selection, coordinatewise midpoints, shifts, and the minor/shape
//! correspondence for Jacobi-Trudi matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing nonnegative parts, stored in
/// canonical form with trailing zeros stripped.
///
/// The derived `Ord` is lexicographic on the part vectors, which is the
/// order used for witness selection and serialized output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// stripped. Fails if the parts increase anywhere.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// Builds a partition from an arbitrary multiset of parts by sorting.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells |λ|.
    pub fn cells(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `k` (k may exceed the length).
    pub fn padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(v.len().max(k), 0);
        v
    }

    /// Componentwise containment: self_i <= other_i for all i.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i))
    }

    /// Transpose of the Young diagram; involutive.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0) as usize;
        let mut cols = vec![0u32; rows];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Componentwise maximum λ∨μ: the union of the Young diagrams.
    pub fn vee(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition {
            parts: (0..k).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    /// Componentwise minimum λ∧μ: the intersection of the Young diagrams.
    pub fn wedge(&self, other: &Partition) -> Partition {
        let k = self.len().min(other.len());
        Partition {
            parts: (0..k)
                .map(|i| self.part(i).min(other.part(i)))
                .take_while(|&p| p > 0)
                .collect(),
        }
    }

    /// Componentwise sum λ+μ.
    pub fn add(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition {
            parts: (0..k).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Componentwise scalar multiple cλ.
    pub fn scale(&self, c: u32) -> Partition {
        if c == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * c).collect(),
        }
    }

    /// Every n-th part starting from the i-th (1-based): (λ_i, λ_{i+n}, …).
    pub fn stride_select(&self, i: usize, n: usize) -> Result<Partition> {
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { i, n });
        }
        Ok(Partition {
            parts: self
                .parts
                .iter()
                .skip(i - 1)
                .step_by(n)
                .copied()
                .collect(),
        })
    }

    /// The conjugate-side selection ((λ')^[i,n])'. The n results sum to λ
    /// and interpolate between ⌈λ/n⌉ and ⌊λ/n⌋.
    pub fn brace_select(&self, i: usize, n: usize) -> Result<Partition> {
        Ok(self.conjugate().stride_select(i, n)?.conjugate())
    }

    /// Componentwise ⌊λ/n⌋.
    pub fn div_floor(&self, n: u32) -> Partition {
        Partition::new(self.parts.iter().map(|&p| p / n).collect::<Vec<_>>())
            .expect("floor of a partition is a partition")
    }

    /// Componentwise ⌈λ/n⌉.
    pub fn div_ceil(&self, n: u32) -> Partition {
        Partition::new(
            self.parts
                .iter()
                .map(|&p| p.div_ceil(n))
                .collect::<Vec<_>>(),
        )
        .expect("ceil of a partition is a partition")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,1`; the empty partition is `0` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let t = tok.trim();
            let p: u32 = t.parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a nonnegative integer part, got {t:?}"),
            })?;
            parts.push(p);
            pos += tok.len() + 1;
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Merged decreasing rearrangement λ∪μ together with its odd- and
/// even-indexed subsequences sort₁ and sort₂ (1-based).
pub fn union_sort(a: &Partition, b: &Partition) -> (Partition, Partition, Partition) {
    let mut merged: Vec<u32> = a.parts.iter().chain(b.parts.iter()).copied().collect();
    merged.sort_unstable_by(|x, y| y.cmp(x));
    let sort1 = merged.iter().copied().step_by(2).collect::<Vec<_>>();
    let sort2 = merged.iter().copied().skip(1).step_by(2).collect::<Vec<_>>();
    (
        Partition::from_unsorted(merged),
        Partition::from_unsorted(sort1),
        Partition::from_unsorted(sort2),
    )
}

/// Decreasing rearrangement of all parts of the given partitions.
pub fn union_all(parts: &[Partition]) -> Partition {
    Partition::from_unsorted(parts.iter().flat_map(|p| p.parts.iter().copied()).collect())
}

/// (λ∨μ, λ∧μ) in one call; |∨| + |∧| = |λ| + |μ|.
pub fn vee_wedge(a: &Partition, b: &Partition) -> (Partition, Partition) {
    (a.vee(b), a.wedge(b))
}

/// Componentwise (⌊(λ+ν)/2⌋, ⌈(λ+ν)/2⌉); floor + ceil = λ + ν.
pub fn midpoint(a: &Partition, b: &Partition) -> (Partition, Partition) {
    let sum = a.add(b);
    (sum.div_floor(2), sum.div_ceil(2))
}

/// Number of anti-inversions: ascending pairs i < j with v_i < v_j.
pub fn ainv(seq: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] < seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// A skew shape λ/μ with μ ⊆ λ, both in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "SkewShapeRepr", into = "SkewShapeRepr")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Clone, Serialize, Deserialize)]
struct SkewShapeRepr {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<SkewShapeRepr> for SkewShape {
    type Error = Error;
    fn try_from(r: SkewShapeRepr) -> Result<Self> {
        SkewShape::new(r.outer, r.inner)
    }
}

impl From<SkewShape> for SkewShapeRepr {
    fn from(s: SkewShape) -> Self {
        Self {
            outer: s.outer,
            inner: s.inner,
        }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::NotASkewShape {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    /// A straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells |λ/μ| = |λ| - |μ|.
    pub fn cells(&self) -> u64 {
        self.outer.cells() - self.inner.cells()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// (λ/μ)∨(ν/ρ) := (λ∨ν)/(μ∨ρ). The result of ∨/∧ on valid skew shapes
    /// is always valid; validity is still checked to catch caller errors.
    pub fn vee(&self, other: &SkewShape) -> Result<SkewShape> {
        SkewShape::new(self.outer.vee(&other.outer), self.inner.vee(&other.inner))
    }

    /// (λ/μ)∧(ν/ρ) := (λ∧ν)/(μ∧ρ).
    pub fn wedge(&self, other: &SkewShape) -> Result<SkewShape> {
        SkewShape::new(
            self.outer.wedge(&other.outer),
            self.inner.wedge(&other.inner),
        )
    }

    /// Shifts the shape one step right (+1 on every coordinate) at fixed
    /// part count `k`. Requires k at least the number of outer parts.
    pub fn shift_right(&self, k: usize) -> Result<SkewShape> {
        if k < self.outer.len() {
            return Err(Error::BoundExceeded {
                what: "part count",
                got: self.outer.len(),
                max: k,
            });
        }
        let outer = Partition::new(self.outer.padded(k).iter().map(|p| p + 1).collect::<Vec<_>>())?;
        let inner = Partition::new(self.inner.padded(k).iter().map(|p| p + 1).collect::<Vec<_>>())?;
        SkewShape::new(outer, inner)
    }

    /// Shifts the shape one step left (-1 on every coordinate) at fixed
    /// part count `k`. Every coordinate of the padded inner (hence outer)
    /// shape must be >= 1.
    pub fn shift_left(&self, k: usize) -> Result<SkewShape> {
        if k < self.outer.len() {
            return Err(Error::BoundExceeded {
                what: "part count",
                got: self.outer.len(),
                max: k,
            });
        }
        if self.inner.len() < k || self.inner.part(k - 1) < 1 {
            return Err(Error::ShiftUnderflow { k });
        }
        let outer = Partition::new(self.outer.padded(k).iter().map(|p| p - 1).collect::<Vec<_>>())?;
        let inner = Partition::new(self.inner.padded(k).iter().map(|p| p - 1).collect::<Vec<_>>())?;
        SkewShape::new(outer, inner)
    }

    /// The (I, J) subsets of [n] associated with the shape padded to k
    /// parts: I = {μ_k+1 < … < μ_1+k}, J = {λ_k+1 < … < λ_1+k}, so that the
    /// Jacobi-Trudi minor Δ_{I,J}(H) equals s_{λ/μ}.
    pub fn to_index_sets(&self, k: usize, n: usize) -> Result<(IndexSet, IndexSet)> {
        if k < self.outer.len() {
            return Err(Error::BoundExceeded {
                what: "part count",
                got: self.outer.len(),
                max: k,
            });
        }
        if self.outer.part(0) as usize + k > n {
            return Err(Error::ShapeDoesNotFit {
                first: self.outer.part(0),
                k,
                n,
            });
        }
        let set_of = |p: &Partition| -> Result<IndexSet> {
            let elems: Vec<u32> = (1..=k)
                .map(|m| p.part(k - m) + m as u32)
                .collect();
            IndexSet::new(elems, n)
        };
        Ok((set_of(&self.inner)?, set_of(&self.outer)?))
    }

    /// Inverse of [`SkewShape::to_index_sets`]: recovers λ/μ from (I, J).
    pub fn from_index_sets(i: &IndexSet, j: &IndexSet) -> Result<SkewShape> {
        if i.len() != j.len() {
            return Err(Error::CardinalityMismatch(i.len(), j.len()));
        }
        let k = i.len();
        let part_of = |s: &IndexSet| -> Result<Partition> {
            let parts: Vec<u32> = (0..k)
                .map(|idx| s.elements()[k - 1 - idx] - (k - idx) as u32)
                .collect();
            Partition::new(parts)
        };
        SkewShape::new(part_of(j)?, part_of(i)?)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `3,1/1` or `3,1`; the empty shape is `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((o, i)) => {
                let outer: Partition = o.parse()?;
                let inner: Partition = i.parse().map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: pos + o.len() + 1,
                        msg,
                    },
                    other => other,
                })?;
                SkewShape::new(outer, inner)
            }
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Anti-inversion number of a sequence of skew shapes: parts of the outer
/// shapes interleaved column-by-column (λ⁽¹⁾₁, …, λ⁽ⁿ⁾₁, λ⁽¹⁾₂, …), plus the
/// same for the inner shapes, all padded to a common length.
pub fn ainv_shapes(shapes: &[SkewShape]) -> usize {
    let k = shapes
        .iter()
        .map(|s| s.outer().len())
        .max()
        .unwrap_or(0);
    let interleave = |pick: &dyn Fn(&SkewShape) -> Partition| -> Vec<u32> {
        (0..k)
            .flat_map(|row| shapes.iter().map(move |s| pick(s).part(row)))
            .collect()
    };
    ainv(&interleave(&|s: &SkewShape| s.outer().clone()))
        + ainv(&interleave(&|s: &SkewShape| s.inner().clone()))
}

/// A strictly increasing subset of [1, ambient].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "IndexSetRepr", into = "IndexSetRepr")]
pub struct IndexSet {
    elements: Vec<u32>,
    ambient: usize,
}

#[derive(Clone, Serialize, Deserialize)]
struct IndexSetRepr {
    elements: Vec<u32>,
    ambient: usize,
}

impl TryFrom<IndexSetRepr> for IndexSet {
    type Error = Error;
    fn try_from(r: IndexSetRepr) -> Result<Self> {
        IndexSet::new(r.elements, r.ambient)
    }
}

impl From<IndexSet> for IndexSetRepr {
    fn from(s: IndexSet) -> Self {
        Self {
            elements: s.elements,
            ambient: s.ambient,
        }
    }
}

impl IndexSet {
    pub fn new(elements: Vec<u32>, ambient: usize) -> Result<Self> {
        let increasing = elements.windows(2).all(|w| w[0] < w[1]);
        let in_range = elements
            .iter()
            .all(|&e| e >= 1 && e as usize <= ambient);
        if !increasing || !in_range {
            return Err(Error::BadIndexSet {
                elems: elements,
                ambient,
            });
        }
        Ok(Self { elements, ambient })
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            elements: (1..=ambient as u32).collect(),
            ambient,
        }
    }

    pub fn empty(ambient: usize) -> Self {
        Self {
            elements: Vec::new(),
            ambient,
        }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// I∨J := {max(i₁,j₁) < max(i₂,j₂) < …}; requires equal cardinality.
    pub fn vee(&self, other: &IndexSet) -> Result<IndexSet> {
        self.zip_with(other, u32::max)
    }

    /// I∧J := {min(i₁,j₁) < min(i₂,j₂) < …}; requires equal cardinality.
    pub fn wedge(&self, other: &IndexSet) -> Result<IndexSet> {
        self.zip_with(other, u32::min)
    }

    fn zip_with(&self, other: &IndexSet, f: impl Fn(u32, u32) -> u32) -> Result<IndexSet> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.len() != other.len() {
            return Err(Error::CardinalityMismatch(self.len(), other.len()));
        }
        IndexSet::new(
            self.elements
                .iter()
                .zip(&other.elements)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            self.ambient,
        )
    }

    /// Complement within [1, ambient].
    pub fn complement(&self) -> IndexSet {
        IndexSet {
            elements: (1..=self.ambient as u32)
                .filter(|e| !self.contains(*e))
                .collect(),
            ambient: self.ambient,
        }
    }

    /// I^∧ := {2n+1-i | i ∈ I}, living in the doubled ambient [1, 2n].
    pub fn hat(&self) -> IndexSet {
        let two_n = 2 * self.ambient as u32;
        IndexSet {
            elements: self
                .elements
                .iter()
                .rev()
                .map(|&i| two_n + 1 - i)
                .collect(),
            ambient: 2 * self.ambient,
        }
    }

    /// The same elements viewed inside a larger ambient set.
    pub fn with_ambient(&self, ambient: usize) -> Result<IndexSet> {
        IndexSet::new(self.elements.clone(), ambient)
    }

    /// Set-theoretic union; requires the same ambient.
    pub fn union(&self, other: &IndexSet) -> Result<IndexSet> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut elems: Vec<u32> = self
            .elements
            .iter()
            .chain(&other.elements)
            .copied()
            .collect();
        elems.sort_unstable();
        elems.dedup();
        IndexSet::new(elems, self.ambient)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}⊆[{}]", self.ambient)
    }
}

/// An ordered pair of skew shapes, the object acted on by the midpoint
/// reduction operations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ShapePair {
    pub first: SkewShape,
    pub second: SkewShape,
}

impl ShapePair {
    pub fn new(first: SkewShape, second: SkewShape) -> Self {
        Self { first, second }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn vee_wedge_examples() {
        assert_eq!(
            vee_wedge(&p(&[3, 1]), &p(&[2, 2])),
            (p(&[3, 2]), p(&[2, 1]))
        );
        assert_eq!(
            vee_wedge(&p(&[2, 1]), &p(&[2, 1])),
            (p(&[2, 1]), p(&[2, 1]))
        );
        assert_eq!(
            vee_wedge(&p(&[3, 2, 1]), &Partition::empty()),
            (p(&[3, 2, 1]), Partition::empty())
        );
    }

    #[test]
    fn union_sort_examples() {
        assert_eq!(
            union_sort(&p(&[3, 1]), &p(&[2, 2])),
            (p(&[3, 2, 2, 1]), p(&[3, 2]), p(&[2, 1]))
        );
        assert_eq!(
            union_sort(&p(&[2]), &p(&[1, 1])),
            (p(&[2, 1, 1]), p(&[2, 1]), p(&[1]))
        );
        assert_eq!(
            union_sort(&Partition::empty(), &Partition::empty()),
            (Partition::empty(), Partition::empty(), Partition::empty())
        );
    }

    #[test]
    fn stride_select_examples() {
        let lam = p(&[5, 4, 2, 1]);
        assert_eq!(lam.stride_select(1, 2).unwrap(), p(&[5, 2]));
        assert_eq!(lam.stride_select(2, 2).unwrap(), p(&[4, 1]));
        assert_eq!(lam.stride_select(1, 1).unwrap(), lam);
        assert!(lam.stride_select(3, 2).is_err());
        assert!(lam.stride_select(0, 2).is_err());
    }

    #[test]
    fn brace_select_examples() {
        let lam = p(&[3, 2]);
        assert_eq!(lam.brace_select(1, 2).unwrap(), p(&[2, 1]));
        assert_eq!(lam.brace_select(2, 2).unwrap(), p(&[1, 1]));
        let even = p(&[4, 2]);
        assert_eq!(even.brace_select(1, 2).unwrap(), p(&[2, 1]));
        assert_eq!(even.brace_select(2, 2).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn midpoint_examples() {
        assert_eq!(midpoint(&p(&[3]), &p(&[1])), (p(&[2]), p(&[2])));
        assert_eq!(
            midpoint(&p(&[2, 1]), &p(&[2, 1])),
            (p(&[2, 1]), p(&[2, 1]))
        );
        assert_eq!(
            midpoint(&p(&[3, 1]), &p(&[2, 2])),
            (p(&[2, 1]), p(&[3, 2]))
        );
    }

    #[test]
    fn shift_examples() {
        let s = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        let shifted = s.shift_right(2).unwrap();
        assert_eq!(shifted, SkewShape::new(p(&[3, 2]), p(&[2, 1])).unwrap());
        assert_eq!(shifted.shift_left(2).unwrap(), s);
        let zero_coord = SkewShape::new(p(&[1]), Partition::empty()).unwrap();
        assert!(zero_coord.shift_left(2).is_err());
    }

    #[test]
    fn shape_subset_bijection_examples() {
        let s = sk("2,1");
        let (i, j) = s.to_index_sets(2, 4).unwrap();
        assert_eq!(i.elements(), &[1, 2]);
        assert_eq!(j.elements(), &[2, 4]);
        assert_eq!(SkewShape::from_index_sets(&i, &j).unwrap(), s);

        let empty = SkewShape::default();
        let (i, j) = empty.to_index_sets(2, 2).unwrap();
        assert_eq!(i.elements(), &[1, 2]);
        assert_eq!(j.elements(), &[1, 2]);

        assert!(sk("3,1").to_index_sets(2, 4).is_err());
    }

    #[test]
    fn ainv_examples() {
        assert_eq!(ainv(&[3, 2, 1]), 0);
        assert_eq!(ainv(&[1, 2, 3]), 3);
        assert_eq!(ainv(&[2, 1, 2]), 1);
    }

    #[test]
    fn ainv_shapes_interleaves_columnwise() {
        // ((2),(1,1)): outer word is (2,1,0,1), inner word all zeros.
        let shapes = [sk("2"), sk("1,1")];
        assert_eq!(ainv_shapes(&shapes), 1);
        let sorted = [sk("2,1"), sk("1")];
        assert_eq!(ainv_shapes(&sorted), 0);
    }

    #[test]
    fn index_set_ops() {
        let i = IndexSet::new(vec![1, 3], 4).unwrap();
        let j = IndexSet::new(vec![2, 4], 4).unwrap();
        assert_eq!(i.vee(&j).unwrap().elements(), &[2, 4]);
        assert_eq!(i.wedge(&j).unwrap().elements(), &[1, 3]);
        assert_eq!(i.complement().elements(), &[2, 4]);
        assert_eq!(i.hat().elements(), &[6, 8]);
        assert_eq!(i.hat().ambient(), 8);
        assert!(IndexSet::new(vec![2, 2], 4).is_err());
        assert!(IndexSet::new(vec![0, 1], 4).is_err());
        assert!(IndexSet::new(vec![5], 4).is_err());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["3,1", "0", "3,1/1", "2,2,1/1,1", "5"] {
            let shape: SkewShape = s.parse().unwrap();
            assert_eq!(shape.to_string(), s);
        }
        assert!("2,1/3".parse::<SkewShape>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    fn boxed_partitions(rows: usize, cols: u32) -> Vec<Partition> {
        // All partitions fitting in a rows x cols box.
        let mut out = vec![Vec::new()];
        for _ in 0..rows {
            let mut next = Vec::new();
            for p in &out {
                let hi = p.last().copied().unwrap_or(cols);
                for v in 0..=hi {
                    let mut q: Vec<u32> = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|v| Partition::new(v).unwrap())
            .collect()
    }

    #[test]
    fn conjugation_exchanges_midpoint_and_sort_exhaustive_5x5() {
        let all = boxed_partitions(5, 5);
        for a in &all {
            for b in &all {
                let (floor, ceil) = midpoint(a, b);
                let (_, s1, s2) = union_sort(&a.conjugate(), &b.conjugate());
                assert_eq!(ceil.conjugate(), s1, "ceil' = sort1(a',b') for {a} {b}");
                assert_eq!(floor.conjugate(), s2, "floor' = sort2(a',b') for {a} {b}");
            }
        }
    }

    #[test]
    fn brace_select_sum_and_chain_6x6() {
        let all = boxed_partitions(6, 6);
        for lam in &all {
            for n in 1..=3usize {
                let picks: Vec<Partition> = (1..=n)
                    .map(|i| lam.brace_select(i, n).unwrap())
                    .collect();
                let mut total = Partition::empty();
                for q in &picks {
                    total = total.add(q);
                }
                assert_eq!(&total, lam, "sum of brace selections for {lam}, n={n}");
                let ceil = lam.div_ceil(n as u32);
                let floor = lam.div_floor(n as u32);
                let mut prev = ceil.clone();
                for q in &picks {
                    assert!(q.contained_in(&prev), "chain broken at {lam}, n={n}");
                    prev = q.clone();
                }
                assert!(floor.contained_in(&prev));
                if lam.parts().iter().all(|p| p % n as u32 == 0) {
                    for q in &picks {
                        assert_eq!(q, &lam.div_floor(n as u32));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn vee_wedge_conserves_cells(a in proptest_partition(), b in proptest_partition()) {
            let (v, w) = vee_wedge(&a, &b);
            prop_assert_eq!(v.cells() + w.cells(), a.cells() + b.cells());
            prop_assert!(w.contained_in(&a) && a.contained_in(&v));
            prop_assert_eq!(a.vee(&b), b.vee(&a));
            prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        }

        #[test]
        fn conjugate_is_involutive(a in proptest_partition()) {
            prop_assert_eq!(a.conjugate().conjugate(), a);
        }

        #[test]
        fn stride_select_partitions_the_parts(a in proptest_partition(), n in 1usize..5) {
            let mut all: Vec<u32> = Vec::new();
            for i in 1..=n {
                all.extend(a.stride_select(i, n).unwrap().parts());
            }
            prop_assert_eq!(Partition::from_unsorted(all), a);
        }

        #[test]
        fn midpoint_sums_back(a in proptest_partition(), b in proptest_partition()) {
            let (floor, ceil) = midpoint(&a, &b);
            prop_assert_eq!(floor.add(&ceil), a.add(&b));
            prop_assert!(floor.contained_in(&ceil));
        }

        #[test]
        fn index_set_roundtrip(a in proptest_partition(), b in proptest_partition()) {
            let (outer, inner) = (a.vee(&b), a.wedge(&b));
            let shape = SkewShape::new(outer, inner).unwrap();
            let k = shape.outer().len().max(1);
            let n = shape.outer().part(0) as usize + k;
            let (i, j) = shape.to_index_sets(k, n).unwrap();
            prop_assert_eq!(SkewShape::from_index_sets(&i, &j).unwrap(), shape);
        }
    }

    fn proptest_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u32..7, 0..6).prop_map(Partition::from_unsorted)
    }
}
