//! Statement checkers: each builds the difference LHS − RHS of one
//! positivity statement as an exact Schur vector, scans its sign, and
//! packages the result as a certificate case. Sweep drivers enumerate
//! whole shape families and fan the cases over a worker pool.
//!
//! Every statement here is a theorem; a negative coefficient in any sweep
//! points at an implementation bug and is reported with its witness.

use std::fmt;
use std::str::FromStr;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::immanant::GenJacobiTrudi;
use crate::partition::{
    ainv_shapes, midpoint, union_all, union_sort, IndexSet, Partition, ShapePair, SkewShape,
};
use crate::schur::{product_of_shapes, SchurVector};

/// The positivity statements the tool can check.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementId {
    CellTransfer,
    Okounkov,
    Fflp,
    Llt,
    Minors,
    Midpoint,
    SortedTuple,
    PlusDecomp,
    CdPower,
    LogConcavity,
}

impl StatementId {
    pub const ALL: [StatementId; 10] = [
        StatementId::CellTransfer,
        StatementId::Okounkov,
        StatementId::Fflp,
        StatementId::Llt,
        StatementId::Minors,
        StatementId::Midpoint,
        StatementId::SortedTuple,
        StatementId::PlusDecomp,
        StatementId::CdPower,
        StatementId::LogConcavity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            StatementId::CellTransfer => "cell_transfer",
            StatementId::Okounkov => "okounkov",
            StatementId::Fflp => "fflp",
            StatementId::Llt => "llt",
            StatementId::Minors => "minors",
            StatementId::Midpoint => "midpoint",
            StatementId::SortedTuple => "sorted_tuple",
            StatementId::PlusDecomp => "plus_decomp",
            StatementId::CdPower => "cd_power",
            StatementId::LogConcavity => "log_concavity",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for StatementId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .iter()
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| Error::Config(format!("unknown statement id {s:?}")))
    }
}

/// A fully specified input for one statement check.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "statement", rename_all = "snake_case")]
pub enum CaseSpec {
    CellTransfer { a: SkewShape, b: SkewShape },
    Okounkov { a: SkewShape, b: SkewShape },
    Fflp { a: SkewShape, b: SkewShape },
    SortedTuple { shapes: Vec<SkewShape> },
    Llt { lambda: Partition, m: usize, n: usize },
    /// Minor-product inequality on the matrix (h_{mu_i - nu_j}), where mu
    /// and nu are the row/column h-parameters.
    Minors {
        n: usize,
        i1: Vec<u32>,
        j1: Vec<u32>,
        i2: Vec<u32>,
        j2: Vec<u32>,
        mu: Partition,
        nu: Partition,
    },
    PlusDecomp { shapes: Vec<SkewShape> },
    CdPower { a: SkewShape, b: SkewShape, c: u32, d: u32 },
    LogConcavity { lambda: Partition, mu: Partition, c: u32, d: u32 },
    Midpoint { a: SkewShape, b: SkewShape },
}

impl CaseSpec {
    pub fn statement(&self) -> StatementId {
        match self {
            CaseSpec::CellTransfer { .. } => StatementId::CellTransfer,
            CaseSpec::Okounkov { .. } => StatementId::Okounkov,
            CaseSpec::Fflp { .. } => StatementId::Fflp,
            CaseSpec::SortedTuple { .. } => StatementId::SortedTuple,
            CaseSpec::Llt { .. } => StatementId::Llt,
            CaseSpec::Minors { .. } => StatementId::Minors,
            CaseSpec::PlusDecomp { .. } => StatementId::PlusDecomp,
            CaseSpec::CdPower { .. } => StatementId::CdPower,
            CaseSpec::LogConcavity { .. } => StatementId::LogConcavity,
            CaseSpec::Midpoint { .. } => StatementId::Midpoint,
        }
    }

    /// The representative of the symmetry class of this case: statements
    /// on unordered pairs compute identical differences for (a, b) and
    /// (b, a), so sweeps evaluate only the canonical twin.
    fn canonical(&self) -> CaseSpec {
        match self {
            CaseSpec::CellTransfer { a, b } if b < a => CaseSpec::CellTransfer {
                a: b.clone(),
                b: a.clone(),
            },
            CaseSpec::Okounkov { a, b } if b < a => CaseSpec::Okounkov {
                a: b.clone(),
                b: a.clone(),
            },
            CaseSpec::Fflp { a, b } if b < a => CaseSpec::Fflp {
                a: b.clone(),
                b: a.clone(),
            },
            CaseSpec::Midpoint { a, b } if b < a => CaseSpec::Midpoint {
                a: b.clone(),
                b: a.clone(),
            },
            CaseSpec::CdPower { a, b, c, d } if b < a => CaseSpec::CdPower {
                a: b.clone(),
                b: a.clone(),
                c: *d,
                d: *c,
            },
            CaseSpec::LogConcavity { lambda, mu, c, d } if mu < lambda => {
                CaseSpec::LogConcavity {
                    lambda: mu.clone(),
                    mu: lambda.clone(),
                    c: *d,
                    d: *c,
                }
            }
            other => other.clone(),
        }
    }
}

/// Outcome of one checked case.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CaseOutcome {
    Checked {
        difference: SchurVector,
        nonneg: bool,
        witness: Option<(Partition, i64)>,
    },
    Skipped { reason: String },
}

/// One verified instance of a positivity statement.
#[derive(Clone, Debug, Serialize)]
pub struct PositivityCase {
    pub spec: CaseSpec,
    pub outcome: CaseOutcome,
}

impl PositivityCase {
    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, CaseOutcome::Skipped { .. })
    }

    /// True for a checked case whose difference has a negative coefficient.
    pub fn is_failure(&self) -> bool {
        matches!(
            self.outcome,
            CaseOutcome::Checked { nonneg: false, .. }
        )
    }

    pub fn difference(&self) -> Option<&SchurVector> {
        match &self.outcome {
            CaseOutcome::Checked { difference, .. } => Some(difference),
            CaseOutcome::Skipped { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&(Partition, i64)> {
        match &self.outcome {
            CaseOutcome::Checked { witness, .. } => witness.as_ref(),
            CaseOutcome::Skipped { .. } => None,
        }
    }
}

fn checked(spec: CaseSpec, lhs: &[SkewShape], rhs: &[SkewShape]) -> PositivityCase {
    let difference = product_of_shapes(lhs).sub(&product_of_shapes(rhs));
    let (nonneg, witness) = difference.is_schur_nonneg();
    PositivityCase {
        spec,
        outcome: CaseOutcome::Checked {
            difference,
            nonneg,
            witness,
        },
    }
}

fn skipped(spec: CaseSpec, reason: impl Into<String>) -> PositivityCase {
    PositivityCase {
        spec,
        outcome: CaseOutcome::Skipped {
            reason: reason.into(),
        },
    }
}

/// Pairs each outer quotient with its inner quotient, recording a skipped
/// case when a quotient fails containment instead of guessing.
fn shapes_from_quotients(
    outers: Vec<Partition>,
    inners: Vec<Partition>,
) -> std::result::Result<Vec<SkewShape>, String> {
    outers
        .into_iter()
        .zip(inners)
        .map(|(o, i)| {
            SkewShape::new(o.clone(), i.clone())
                .map_err(|_| format!("invalid-shape: {i} is not contained in {o}"))
        })
        .collect()
}

/// s_{a∨b}·s_{a∧b} ≥_s s_a·s_b for any two skew shapes.
pub fn check_cell_transfer(a: &SkewShape, b: &SkewShape) -> PositivityCase {
    let spec = CaseSpec::CellTransfer {
        a: a.clone(),
        b: b.clone(),
    };
    match (a.vee(b), a.wedge(b)) {
        (Ok(v), Ok(w)) => checked(spec, &[v, w], &[a.clone(), b.clone()]),
        _ => skipped(spec, "invalid-shape: ∨/∧ of the pair"),
    }
}

/// The floor/ceil midpoint statement:
/// s_{⌊(λ+ν)/2⌋/⌊(μ+ρ)/2⌋}·s_{⌈(λ+ν)/2⌉/⌈(μ+ρ)/2⌉} ≥_s s_{λ/μ}·s_{ν/ρ}.
pub fn check_okounkov(a: &SkewShape, b: &SkewShape) -> PositivityCase {
    let spec = CaseSpec::Okounkov {
        a: a.clone(),
        b: b.clone(),
    };
    let (floor_out, ceil_out) = midpoint(a.outer(), b.outer());
    let (floor_in, ceil_in) = midpoint(a.inner(), b.inner());
    match shapes_from_quotients(vec![floor_out, ceil_out], vec![floor_in, ceil_in]) {
        Ok(lhs) => checked(spec, &lhs, &[a.clone(), b.clone()]),
        Err(reason) => skipped(spec, reason),
    }
}

/// The sorted-parts statement:
/// s_{sort₁(λ,ν)/sort₁(μ,ρ)}·s_{sort₂(λ,ν)/sort₂(μ,ρ)} ≥_s s_{λ/μ}·s_{ν/ρ}.
pub fn check_fflp(a: &SkewShape, b: &SkewShape) -> PositivityCase {
    let spec = CaseSpec::Fflp {
        a: a.clone(),
        b: b.clone(),
    };
    let (_, s1_out, s2_out) = union_sort(a.outer(), b.outer());
    let (_, s1_in, s2_in) = union_sort(a.inner(), b.inner());
    match shapes_from_quotients(vec![s1_out, s2_out], vec![s1_in, s2_in]) {
        Ok(lhs) => checked(spec, &lhs, &[a.clone(), b.clone()]),
        Err(reason) => skipped(spec, reason),
    }
}

/// The stride quotients λ^[i,n]/μ^[i,n] for λ = ∪λ⁽ⁱ⁾, μ = ∪μ⁽ⁱ⁾.
fn stride_tuple(shapes: &[SkewShape]) -> std::result::Result<Vec<SkewShape>, String> {
    let n = shapes.len();
    let lam = union_all(&shapes.iter().map(|s| s.outer().clone()).collect::<Vec<_>>());
    let mu = union_all(&shapes.iter().map(|s| s.inner().clone()).collect::<Vec<_>>());
    let outers: Vec<Partition> = (1..=n)
        .map(|i| lam.stride_select(i, n).expect("1 <= i <= n"))
        .collect();
    let inners: Vec<Partition> = (1..=n)
        .map(|i| mu.stride_select(i, n).expect("1 <= i <= n"))
        .collect();
    shapes_from_quotients(outers, inners)
}

/// ∏ s_{λ^[i,n]/μ^[i,n]} ≥_s ∏ s_{λ⁽ⁱ⁾/μ⁽ⁱ⁾} over the merged partitions.
pub fn check_sorted_tuple(shapes: &[SkewShape]) -> PositivityCase {
    let spec = CaseSpec::SortedTuple {
        shapes: shapes.to_vec(),
    };
    match stride_tuple(shapes) {
        Ok(lhs) => checked(spec, &lhs, shapes),
        Err(reason) => skipped(spec, reason),
    }
}

/// The pairwise replacement chain behind the sorted-tuple statement: each
/// step swaps one unsorted pair (k, l) for its sort₁/sort₂ pair, strictly
/// decreasing the anti-inversion number until the stride tuple is reached.
pub fn sorted_tuple_chain(shapes: &[SkewShape]) -> std::result::Result<Vec<Vec<SkewShape>>, String> {
    let mut chain = vec![shapes.to_vec()];
    let mut current = shapes.to_vec();
    while ainv_shapes(&current) != 0 {
        let mut replaced = false;
        'search: for k in 0..current.len() {
            for l in k + 1..current.len() {
                if ainv_shapes(&[current[k].clone(), current[l].clone()]) == 0 {
                    continue;
                }
                let (_, s1_out, s2_out) = union_sort(current[k].outer(), current[l].outer());
                let (_, s1_in, s2_in) = union_sort(current[k].inner(), current[l].inner());
                let pair = shapes_from_quotients(vec![s1_out, s2_out], vec![s1_in, s2_in])?;
                current[k] = pair[0].clone();
                current[l] = pair[1].clone();
                replaced = true;
                break 'search;
            }
        }
        debug_assert!(replaced, "nonzero ainv must expose an unsorted pair");
        chain.push(current.clone());
    }
    Ok(chain)
}

/// ∏_{i=1}^n s_{λ^[i,n]} ≥_s ∏_{i=1}^m s_{λ^[i,m]}, routed through the
/// sorted-tuple machinery on (λ^[1,m], …, λ^[m,m], ∅, …, ∅).
pub fn check_llt(lambda: &Partition, m: usize, n: usize) -> Result<PositivityCase> {
    if m < 1 || m > n {
        return Err(Error::Config(format!("llt needs 1 <= m <= n, got m={m} n={n}")));
    }
    let spec = CaseSpec::Llt {
        lambda: lambda.clone(),
        m,
        n,
    };
    let mut tuple: Vec<SkewShape> = (1..=m)
        .map(|i| SkewShape::straight(lambda.stride_select(i, m).expect("i <= m")))
        .collect();
    tuple.resize(n, SkewShape::default());
    match stride_tuple(&tuple) {
        Ok(lhs) => Ok(checked(spec, &lhs, &tuple)),
        Err(reason) => Ok(skipped(spec, reason)),
    }
}

/// Δ_{I∨I',J∨J'}·Δ_{I∧I',J∧J'} ≥_s Δ_{I,J}·Δ_{I',J'} on a generalized
/// Jacobi-Trudi matrix.
pub fn check_minors(
    i1: &IndexSet,
    j1: &IndexSet,
    i2: &IndexSet,
    j2: &IndexSet,
    x: &GenJacobiTrudi,
) -> Result<PositivityCase> {
    let spec = CaseSpec::Minors {
        n: x.n(),
        i1: i1.elements().to_vec(),
        j1: j1.elements().to_vec(),
        i2: i2.elements().to_vec(),
        j2: j2.elements().to_vec(),
        mu: x.row_params().clone(),
        nu: x.col_params().clone(),
    };
    let lhs = x
        .minor(&i1.vee(i2)?, &j1.vee(j2)?)?
        .multiply(&x.minor(&i1.wedge(i2)?, &j1.wedge(j2)?)?);
    let rhs = x.minor(i1, j1)?.multiply(&x.minor(i2, j2)?);
    let difference = lhs.sub(&rhs);
    let (nonneg, witness) = difference.is_schur_nonneg();
    Ok(PositivityCase {
        spec,
        outcome: CaseOutcome::Checked {
            difference,
            nonneg,
            witness,
        },
    })
}

/// The brace quotients λ^{i,n}/μ^{i,n} for λ = Σλ⁽ⁱ⁾, μ = Σμ⁽ⁱ⁾.
fn brace_tuple(shapes: &[SkewShape]) -> std::result::Result<Vec<SkewShape>, String> {
    let n = shapes.len();
    let mut lam = Partition::empty();
    let mut mu = Partition::empty();
    for s in shapes {
        lam = lam.add(s.outer());
        mu = mu.add(s.inner());
    }
    let outers: Vec<Partition> = (1..=n)
        .map(|i| lam.brace_select(i, n).expect("1 <= i <= n"))
        .collect();
    let inners: Vec<Partition> = (1..=n)
        .map(|i| mu.brace_select(i, n).expect("1 <= i <= n"))
        .collect();
    shapes_from_quotients(outers, inners)
}

/// ∏ s_{λ^{i,n}/μ^{i,n}} ≥_s ∏ s_{λ⁽ⁱ⁾/μ⁽ⁱ⁾} over the summed partitions.
pub fn check_plus_decomp(shapes: &[SkewShape]) -> PositivityCase {
    let spec = CaseSpec::PlusDecomp {
        shapes: shapes.to_vec(),
    };
    match brace_tuple(shapes) {
        Ok(lhs) => checked(spec, &lhs, shapes),
        Err(reason) => skipped(spec, reason),
    }
}

/// s^⟨c+d⟩ of the weighted average ≥_s s_{λ/μ}^c·s_{ν/ρ}^d; c = d = 1 is
/// exactly the floor/ceil midpoint statement.
pub fn check_cd_power(a: &SkewShape, b: &SkewShape, c: u32, d: u32) -> Result<PositivityCase> {
    if c < 1 || d < 1 {
        return Err(Error::Config(format!("cd_power needs c, d >= 1, got c={c} d={d}")));
    }
    let spec = CaseSpec::CdPower {
        a: a.clone(),
        b: b.clone(),
        c,
        d,
    };
    let mut sequence: Vec<SkewShape> = Vec::with_capacity((c + d) as usize);
    sequence.extend(std::iter::repeat_n(a.clone(), c as usize));
    sequence.extend(std::iter::repeat_n(b.clone(), d as usize));
    Ok(match brace_tuple(&sequence) {
        Ok(lhs) => checked(spec, &lhs, &sequence),
        Err(reason) => skipped(spec, reason),
    })
}

/// Schur log-concavity: (S((cλ+dμ)/(c+d)))^{c+d} ≥_s S(λ)^c·S(μ)^d, for
/// pairs where the weighted average is a partition.
pub fn check_log_concavity(
    lambda: &Partition,
    mu: &Partition,
    c: u32,
    d: u32,
) -> Result<PositivityCase> {
    if c < 1 || d < 1 {
        return Err(Error::Config(format!(
            "log_concavity needs c, d >= 1, got c={c} d={d}"
        )));
    }
    let n = c + d;
    let weighted = lambda.scale(c).add(&mu.scale(d));
    if weighted.parts().iter().any(|p| p % n != 0) {
        return Err(Error::Config(format!(
            "({c}·{lambda} + {d}·{mu}) is not divisible by {n}"
        )));
    }
    let spec = CaseSpec::LogConcavity {
        lambda: lambda.clone(),
        mu: mu.clone(),
        c,
        d,
    };
    let average = SkewShape::straight(weighted.div_floor(n));
    let lhs: Vec<SkewShape> = std::iter::repeat_n(average, n as usize).collect();
    let mut rhs: Vec<SkewShape> = Vec::with_capacity(n as usize);
    rhs.extend(std::iter::repeat_n(SkewShape::straight(lambda.clone()), c as usize));
    rhs.extend(std::iter::repeat_n(SkewShape::straight(mu.clone()), d as usize));
    Ok(checked(spec, &lhs, &rhs))
}

/// One application of θ: (pair) ↦ (∨, ∧).
pub fn theta_pair(pair: &ShapePair) -> ShapePair {
    ShapePair::new(
        pair.first.vee(&pair.second).expect("∨ of valid shapes"),
        pair.first.wedge(&pair.second).expect("∧ of valid shapes"),
    )
}

fn map_coordinates(
    pair: &ShapePair,
    f: impl Fn(u32, u32) -> (u32, u32),
) -> ShapePair {
    let build = |x: &Partition, y: &Partition| -> (Partition, Partition) {
        let k = x.len().max(y.len());
        let mut xs = Vec::with_capacity(k);
        let mut ys = Vec::with_capacity(k);
        for i in 0..k {
            let (a, b) = f(x.part(i), y.part(i));
            xs.push(a);
            ys.push(b);
        }
        (
            Partition::new(xs).expect("coordinate map preserves monotonicity"),
            Partition::new(ys).expect("coordinate map preserves monotonicity"),
        )
    };
    let (first_out, second_out) = build(pair.first.outer(), pair.second.outer());
    let (first_in, second_in) = build(pair.first.inner(), pair.second.inner());
    ShapePair::new(
        SkewShape::new(first_out, first_in).expect("coordinate map preserves containment"),
        SkewShape::new(second_out, second_in).expect("coordinate map preserves containment"),
    )
}

/// φ = (∧, shifted ∨) in coordinates: (x, y) ↦ (min(x,y+1), max(x,y+1)-1).
pub fn phi_pair(pair: &ShapePair) -> ShapePair {
    map_coordinates(pair, |x, y| (x.min(y + 1), x.max(y + 1) - 1))
}

/// ψ = (shifted ∨, ∧) in coordinates: (x, y) ↦ (max(x+1,y)-1, min(x+1,y)).
pub fn psi_pair(pair: &ShapePair) -> ShapePair {
    map_coordinates(pair, |x, y| ((x + 1).max(y) - 1, (x + 1).min(y)))
}

/// The largest coordinatewise distance between the two shapes of a pair.
pub fn coordinate_gap(pair: &ShapePair) -> u32 {
    let gap = |x: &Partition, y: &Partition| -> u32 {
        (0..x.len().max(y.len()))
            .map(|i| x.part(i).abs_diff(y.part(i)))
            .max()
            .unwrap_or(0)
    };
    gap(pair.first.outer(), pair.second.outer()).max(gap(pair.first.inner(), pair.second.inner()))
}

/// The trace of a midpoint reduction: the input pair, every changed pair
/// along the (φ∘ψ)* iteration, and the final θ image.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ShapePair>,
    /// Number of φ∘ψ rounds; bounded by the initial coordinate gap.
    pub rounds: u32,
}

/// Iterates φ∘ψ until every coordinate gap is at most 1, then applies θ.
/// The result is the ceil/floor midpoint pair; every recorded step keeps
/// the product of skew Schur functions weakly increasing.
pub fn midpoint_reduction(pair: &ShapePair) -> ReductionTrace {
    let initial_gap = coordinate_gap(pair);
    let mut steps = vec![pair.clone()];
    let mut current = pair.clone();
    let mut rounds = 0;
    while coordinate_gap(&current) >= 2 {
        let after_psi = psi_pair(&current);
        if after_psi != current {
            steps.push(after_psi.clone());
        }
        let after_phi = phi_pair(&after_psi);
        if after_phi != after_psi {
            steps.push(after_phi.clone());
        }
        current = after_phi;
        rounds += 1;
        assert!(
            rounds <= initial_gap,
            "φ∘ψ must converge within the initial gap {initial_gap}"
        );
    }
    let final_pair = theta_pair(&current);
    if final_pair != current {
        steps.push(final_pair);
    }
    ReductionTrace { steps, rounds }
}

/// Runs the reduction and certifies (a) the trace ends at the midpoint
/// pair, (b) the round count respects the gap bound, and (c) every
/// consecutive step has a Schur-nonnegative product difference.
pub fn check_midpoint(a: &SkewShape, b: &SkewShape) -> PositivityCase {
    let spec = CaseSpec::Midpoint {
        a: a.clone(),
        b: b.clone(),
    };
    let pair = ShapePair::new(a.clone(), b.clone());
    let trace = midpoint_reduction(&pair);
    let (floor_out, ceil_out) = midpoint(a.outer(), b.outer());
    let (floor_in, ceil_in) = midpoint(a.inner(), b.inner());
    let expected_last = ShapePair::new(
        SkewShape::new(ceil_out, ceil_in).expect("midpoint containment"),
        SkewShape::new(floor_out, floor_in).expect("midpoint containment"),
    );
    let last = trace.steps.last().expect("trace is nonempty");
    let mut structure_ok = last == &expected_last;

    let mut witness = None;
    let mut products: Vec<SchurVector> = Vec::with_capacity(trace.steps.len());
    for step in &trace.steps {
        products.push(product_of_shapes(&[step.first.clone(), step.second.clone()]));
    }
    for window in products.windows(2) {
        let diff = window[1].sub(&window[0]);
        if let (false, Some(w)) = diff.is_schur_nonneg() {
            structure_ok = false;
            witness.get_or_insert(w);
        }
    }
    let difference = products
        .last()
        .expect("trace is nonempty")
        .sub(&products[0]);
    if witness.is_none() {
        witness = difference.is_schur_nonneg().1;
    }
    PositivityCase {
        spec,
        outcome: CaseOutcome::Checked {
            nonneg: structure_ok && witness.is_none(),
            difference,
            witness,
        },
    }
}

/// Enumeration bounds for a sweep, echoed into reports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepBounds {
    pub box_rows: usize,
    pub box_cols: u32,
    pub max_cells: Option<u64>,
    pub tuple_len: usize,
    pub n: usize,
    pub cd_max: u32,
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self {
            box_rows: 3,
            box_cols: 3,
            max_cells: None,
            tuple_len: 3,
            n: 3,
            cd_max: 2,
        }
    }
}

impl SweepBounds {
    pub fn validate(&self) -> Result<()> {
        if self.box_rows == 0
            || self.box_cols == 0
            || self.tuple_len == 0
            || self.n == 0
            || self.cd_max == 0
            || self.max_cells == Some(0)
        {
            return Err(Error::Config("all sweep bounds must be positive".into()));
        }
        Ok(())
    }
}

/// The full, stably ordered case family for one statement.
pub fn enumerate_cases(statement: StatementId, bounds: &SweepBounds) -> Vec<CaseSpec> {
    match statement {
        StatementId::CellTransfer | StatementId::Okounkov | StatementId::Fflp => {
            let shapes =
                enumerate::skew_shapes_in_box(bounds.box_rows, bounds.box_cols, bounds.max_cells);
            let mut out = Vec::with_capacity(shapes.len() * shapes.len());
            for a in &shapes {
                for b in &shapes {
                    out.push(match statement {
                        StatementId::CellTransfer => CaseSpec::CellTransfer {
                            a: a.clone(),
                            b: b.clone(),
                        },
                        StatementId::Okounkov => CaseSpec::Okounkov {
                            a: a.clone(),
                            b: b.clone(),
                        },
                        _ => CaseSpec::Fflp {
                            a: a.clone(),
                            b: b.clone(),
                        },
                    });
                }
            }
            out
        }
        StatementId::CdPower => {
            let shapes =
                enumerate::skew_shapes_in_box(bounds.box_rows, bounds.box_cols, bounds.max_cells);
            let mut out = Vec::new();
            for a in &shapes {
                for b in &shapes {
                    for c in 1..=bounds.cd_max {
                        for d in 1..=bounds.cd_max {
                            out.push(CaseSpec::CdPower {
                                a: a.clone(),
                                b: b.clone(),
                                c,
                                d,
                            });
                        }
                    }
                }
            }
            out
        }
        StatementId::Midpoint => {
            let parts = enumerate::partitions_in_box(bounds.box_rows, bounds.box_cols);
            let mut out = Vec::with_capacity(parts.len() * parts.len());
            for a in &parts {
                for b in &parts {
                    out.push(CaseSpec::Midpoint {
                        a: SkewShape::straight(a.clone()),
                        b: SkewShape::straight(b.clone()),
                    });
                }
            }
            out
        }
        StatementId::SortedTuple | StatementId::PlusDecomp => {
            let cells = bounds.max_cells.unwrap_or(4) as u32;
            let parts = enumerate::partitions_with_cells_at_most(cells);
            let mut out = Vec::new();
            for len in 2..=bounds.tuple_len {
                for indices in enumerate::multiset_indices(parts.len(), len) {
                    let shapes: Vec<SkewShape> = indices
                        .iter()
                        .map(|&i| SkewShape::straight(parts[i].clone()))
                        .collect();
                    out.push(match statement {
                        StatementId::SortedTuple => CaseSpec::SortedTuple { shapes },
                        _ => CaseSpec::PlusDecomp { shapes },
                    });
                }
            }
            out
        }
        StatementId::Llt => {
            let parts = enumerate::partitions_in_box(bounds.box_rows, bounds.box_cols);
            let mut out = Vec::new();
            for lambda in &parts {
                for n in 1..=bounds.n {
                    for m in 1..=n {
                        out.push(CaseSpec::Llt {
                            lambda: lambda.clone(),
                            m,
                            n,
                        });
                    }
                }
            }
            out
        }
        StatementId::Minors => {
            let n = bounds.n;
            let x = GenJacobiTrudi::staircase(n);
            let subsets = enumerate::index_subsets(n);
            let mut out = Vec::new();
            for k in 0..=n {
                let level: Vec<&IndexSet> =
                    subsets.iter().filter(|s| s.len() == k).collect();
                for i1 in &level {
                    for j1 in &level {
                        for i2 in &level {
                            for j2 in &level {
                                out.push(CaseSpec::Minors {
                                    n,
                                    i1: i1.elements().to_vec(),
                                    j1: j1.elements().to_vec(),
                                    i2: i2.elements().to_vec(),
                                    j2: j2.elements().to_vec(),
                                    mu: x.row_params().clone(),
                                    nu: x.col_params().clone(),
                                });
                            }
                        }
                    }
                }
            }
            out
        }
        StatementId::LogConcavity => {
            let parts = enumerate::partitions_in_box(bounds.box_rows, bounds.box_cols);
            let mut out = Vec::new();
            for lambda in &parts {
                for mu in &parts {
                    for c in 1..=bounds.cd_max {
                        for d in 1..=bounds.cd_max {
                            let weighted = lambda.scale(c).add(&mu.scale(d));
                            if weighted.parts().iter().all(|p| p % (c + d) == 0) {
                                out.push(CaseSpec::LogConcavity {
                                    lambda: lambda.clone(),
                                    mu: mu.clone(),
                                    c,
                                    d,
                                });
                            }
                        }
                    }
                }
            }
            out
        }
    }
}

/// Runs a single case specification.
pub fn run_case(spec: &CaseSpec) -> Result<PositivityCase> {
    match spec {
        CaseSpec::CellTransfer { a, b } => Ok(check_cell_transfer(a, b)),
        CaseSpec::Okounkov { a, b } => Ok(check_okounkov(a, b)),
        CaseSpec::Fflp { a, b } => Ok(check_fflp(a, b)),
        CaseSpec::SortedTuple { shapes } => Ok(check_sorted_tuple(shapes)),
        CaseSpec::Llt { lambda, m, n } => check_llt(lambda, *m, *n),
        CaseSpec::Minors {
            n,
            i1,
            j1,
            i2,
            j2,
            mu,
            nu,
        } => {
            let x = GenJacobiTrudi::from_h_params(mu.clone(), nu.clone(), *n)?;
            check_minors(
                &IndexSet::new(i1.clone(), *n)?,
                &IndexSet::new(j1.clone(), *n)?,
                &IndexSet::new(i2.clone(), *n)?,
                &IndexSet::new(j2.clone(), *n)?,
                &x,
            )
        }
        CaseSpec::PlusDecomp { shapes } => Ok(check_plus_decomp(shapes)),
        CaseSpec::CdPower { a, b, c, d } => check_cd_power(a, b, *c, *d),
        CaseSpec::LogConcavity { lambda, mu, c, d } => check_log_concavity(lambda, mu, *c, *d),
        CaseSpec::Midpoint { a, b } => Ok(check_midpoint(a, b)),
    }
}

/// Runs a case family over the current worker pool. Symmetric twins share
/// one evaluation; output order follows the input order exactly.
pub fn run_sweep(specs: &[CaseSpec]) -> Result<Vec<PositivityCase>> {
    let memo: DashMap<CaseSpec, CaseOutcome> = DashMap::new();
    specs
        .par_iter()
        .map(|spec| {
            let canonical = spec.canonical();
            if let Some(hit) = memo.get(&canonical) {
                return Ok(PositivityCase {
                    spec: spec.clone(),
                    outcome: hit.clone(),
                });
            }
            let case = run_case(&canonical)?;
            memo.insert(canonical, case.outcome.clone());
            Ok(PositivityCase {
                spec: spec.clone(),
                outcome: case.outcome,
            })
        })
        .collect()
}
