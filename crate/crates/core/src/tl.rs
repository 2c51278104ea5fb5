//! The Temperley-Lieb algebra TL_n(ξ) realized on noncrossing perfect
//! matchings of 2n boundary points.
//!
//! Boundary labeling: the n left points are 1..n top to bottom and the n
//! right points are n+1..2n bottom to top, so the identity diagram is
//! {(i, 2n+1-i)} and the generator t_i caps (i, i+1) on the left and cups
//! (2n-i, 2n+1-i) on the right. This labeling reproduces the wiring pairs
//! (2n+1-i, w(i)) and sends t_1 t_3 t_2 in TL_4 to the matching
//! {(1,2),(3,4),(5,8),(6,7)}; both anchors are regression-tested.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::IndexSet;
use crate::perm::Permutation;
use crate::poly::IntPoly;

/// A perfect noncrossing matching on [1, 2n], stored as sorted edges with
/// the smaller endpoint first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NoncrossingMatching {
    edges: Vec<(u32, u32)>,
}

impl NoncrossingMatching {
    pub fn from_edges(edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        let n = edges.len();
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in &edges {
            if a == b || a == 0 || b as usize > 2 * n || seen[a as usize] || seen[b as usize] {
                return Err(Error::BadIndexSet {
                    elems: edges.iter().flat_map(|&(a, b)| [a, b]).collect(),
                    ambient: 2 * n,
                });
            }
            seen[a as usize] = true;
            seen[b as usize] = true;
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, c) = edges[i];
                let (b, d) = edges[j];
                // Sorted edge lists have a < b; a crossing is a < b < c < d.
                if b < c && c < d {
                    return Err(Error::BadIndexSet {
                        elems: vec![a, b, c, d],
                        ambient: 2 * n,
                    });
                }
            }
        }
        Ok(Self { edges })
    }

    /// The identity diagram {(i, 2n+1-i)}.
    pub fn identity(n: usize) -> Self {
        Self {
            edges: (1..=n as u32).map(|i| (i, 2 * n as u32 + 1 - i)).collect(),
        }
    }

    /// The diagram of the generator t_i in TL_n.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange { i, n: n - 1 });
        }
        let two_n = 2 * n as u32;
        let i = i as u32;
        let mut edges = vec![(i, i + 1), (two_n - i, two_n + 1 - i)];
        for j in (1..=n as u32).filter(|&j| j != i && j != i + 1) {
            edges.push((j, two_n + 1 - j));
        }
        Self::from_edges(edges)
    }

    /// Number of strands n.
    pub fn strands(&self) -> usize {
        self.edges.len()
    }

    /// Number of boundary points 2n.
    pub fn points(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Concatenates self (left) with other (right), gluing the right
    /// boundary of self to the left boundary of other. Returns the
    /// resulting matching and the number of closed internal loops.
    pub fn compose(&self, other: &NoncrossingMatching) -> Result<(NoncrossingMatching, u32)> {
        let n = self.strands();
        if n != other.strands() {
            return Err(Error::AmbientMismatch(n, other.strands()));
        }
        let two_n = 2 * n;
        // Slots: 0..2n are self's points (1-based label - 1), 2n..4n are
        // other's. Right level j of self (label 2n+1-j) glues to left
        // level j of other (label j).
        let mut uf = UnionFind::new(4 * n);
        for &(a, b) in &self.edges {
            uf.union(a as usize - 1, b as usize - 1);
        }
        for &(a, b) in &other.edges {
            uf.union(two_n + a as usize - 1, two_n + b as usize - 1);
        }
        for j in 1..=n {
            uf.union(two_n - j, two_n + j - 1);
        }
        // Final boundary: labels 1..n are self's left points, labels
        // n+1..2n are other's right points.
        let slot_of_label = |label: usize| -> usize {
            if label <= n {
                label - 1
            } else {
                two_n + label - 1
            }
        };
        let mut rep_to_label: FxHashMap<usize, u32> = FxHashMap::default();
        let mut edges = Vec::with_capacity(n);
        for label in 1..=two_n {
            let root = uf.find(slot_of_label(label));
            match rep_to_label.get(&root) {
                Some(&first) => edges.push((first, label as u32)),
                None => {
                    rep_to_label.insert(root, label as u32);
                }
            }
        }
        let matching = NoncrossingMatching::from_edges(edges)?;
        let mut roots = vec![false; 4 * n];
        let mut components = 0;
        for slot in 0..4 * n {
            let r = uf.find(slot);
            if !roots[r] {
                roots[r] = true;
                components += 1;
            }
        }
        Ok((matching, components as u32 - n as u32))
    }

    /// True iff every edge has exactly one endpoint in `s`. The ambient of
    /// `s` must be the 2n boundary points of this matching.
    pub fn is_s_compatible(&self, s: &IndexSet) -> bool {
        assert_eq!(
            s.ambient(),
            self.points(),
            "S lives on the 2n boundary points"
        );
        self.edges
            .iter()
            .all(|&(a, b)| s.contains(a) != s.contains(b))
    }
}

impl fmt::Debug for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}}")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// All noncrossing perfect matchings on [1, 2n]; there are Catalan(n).
pub fn catalan_basis(n: usize) -> Vec<NoncrossingMatching> {
    // The smallest point matches a partner that encloses an even number of
    // points; no edge may connect the enclosed region with the rest.
    fn gen(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let first = points[0];
        let mut out = Vec::new();
        for idx in (1..points.len()).step_by(2) {
            for inside in gen(&points[1..idx]) {
                for outside in gen(&points[idx + 1..]) {
                    let mut edges = Vec::with_capacity(points.len() / 2);
                    edges.push((first, points[idx]));
                    edges.extend_from_slice(&inside);
                    edges.extend_from_slice(&outside);
                    out.push(edges);
                }
            }
        }
        out
    }

    let points: Vec<u32> = (1..=2 * n as u32).collect();
    let mut matchings: Vec<NoncrossingMatching> = gen(&points)
        .into_iter()
        .map(|edges| NoncrossingMatching::from_edges(edges).expect("construction is noncrossing"))
        .collect();
    matchings.sort();
    matchings
}

/// Basis elements t_w that are S-compatible; empty whenever |S| != n.
pub fn theta_set(s: &IndexSet, n: usize) -> Vec<NoncrossingMatching> {
    catalan_basis(n)
        .into_iter()
        .filter(|m| m.is_s_compatible(s))
        .collect()
}

/// An element of TL_n(ξ): a sparse combination of noncrossing matchings
/// with integer ξ-polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<NoncrossingMatching, IntPoly>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_matching(NoncrossingMatching::identity(n))
    }

    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(Self::from_matching(NoncrossingMatching::generator(i, n)?))
    }

    pub fn from_matching(m: NoncrossingMatching) -> Self {
        let n = m.strands();
        let mut terms = BTreeMap::new();
        terms.insert(m, IntPoly::one());
        Self { n, terms }
    }

    /// The product t_{i1}···t_{il}; loops contribute powers of ξ.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut acc = Self::one(n);
        for &i in word {
            acc = acc.multiply(&Self::generator(i, n)?)?;
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &NoncrossingMatching) -> IntPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NoncrossingMatching, &IntPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: NoncrossingMatching, c: IntPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &TLElement) -> Result<TLElement> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TLElement) -> Result<TLElement> {
        self.add(&other.scale(&IntPoly::constant(-1)))
    }

    pub fn scale(&self, c: &IntPoly) -> TLElement {
        if c.is_zero() {
            return TLElement::zero(self.n);
        }
        TLElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Diagram concatenation extended bilinearly; each closed loop formed
    /// while gluing contributes a factor ξ.
    pub fn multiply(&self, other: &TLElement) -> Result<TLElement> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut out = TLElement::zero(self.n);
        for (ma, ca) in self.iter() {
            for (mb, cb) in other.iter() {
                let (m, loops) = ma.compose(mb)?;
                let coeff = &(ca * cb) * &IntPoly::monomial(1, loops as usize);
                out.add_term(m, coeff);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})·{m}", c.display("ξ"))?;
            first = false;
        }
        Ok(())
    }
}

/// Expansion of θ(T_v) = (t_{i1}-1)···(t_{il}-1) in TL_n(2): the map from
/// basis matchings t_w to the coefficients f_w(v). The result does not
/// depend on the chosen reduced word.
pub fn theta_expand(v: &Permutation) -> BTreeMap<NoncrossingMatching, i64> {
    theta_expand_word(&v.reduced_word(), v.n())
}

/// Same expansion from an explicit word (for reduced-word independence
/// tests); ξ is evaluated at 2 as required by θ: C[S_n] → TL_n(2).
pub fn theta_expand_word(word: &[usize], n: usize) -> BTreeMap<NoncrossingMatching, i64> {
    let mut acc: BTreeMap<NoncrossingMatching, i64> = BTreeMap::new();
    acc.insert(NoncrossingMatching::identity(n), 1);
    for &i in word {
        let gen = NoncrossingMatching::generator(i, n).expect("letter in range");
        let mut next: BTreeMap<NoncrossingMatching, i64> = BTreeMap::new();
        let mut bump = |m: NoncrossingMatching, c: i64| {
            let slot = next.entry(m).or_insert(0);
            *slot += c;
        };
        for (m, &c) in &acc {
            let (prod, loops) = m.compose(&gen).expect("same ambient");
            bump(prod, c << loops);
            bump(m.clone(), -c);
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc
}

/// The 321-avoiding permutations of S_n paired with their basis matchings,
/// in lexicographic order of one-line notation.
pub fn basis_permutations(n: usize) -> Arc<Vec<(Permutation, NoncrossingMatching)>> {
    static CACHE: OnceLock<DashMap<usize, Arc<Vec<(Permutation, NoncrossingMatching)>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(&n) {
        return hit.clone();
    }
    let value: Vec<(Permutation, NoncrossingMatching)> = Permutation::all(n)
        .into_iter()
        .filter(|w| w.is_321_avoiding())
        .map(|w| {
            let elt = TLElement::from_word(&w.reduced_word(), n).expect("valid word");
            debug_assert_eq!(elt.num_terms(), 1);
            let (m, c) = elt.iter().next().expect("basis element");
            debug_assert_eq!(c, &IntPoly::one());
            let m = m.clone();
            (w, m)
        })
        .collect();
    let value = Arc::new(value);
    cache.insert(n, value.clone());
    value
}

/// The 321-avoiding permutation whose basis element is the given matching.
pub fn matching_permutation(m: &NoncrossingMatching) -> Option<Permutation> {
    basis_permutations(m.strands())
        .iter()
        .find(|(_, mm)| mm == m)
        .map(|(w, _)| w.clone())
}
