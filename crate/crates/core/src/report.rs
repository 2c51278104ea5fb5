//! Long-lived JSON certificates: run configuration echo, per-sweep
//! aggregates, failures (empty on success), and the minimum coefficient
//! witnessed across all case differences. Reports are deterministic for a
//! fixed configuration and seed, up to the wall-time field.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::immanant::{minor_product_decomposition, DecompositionCase, IntMatrix};
use crate::partition::Partition;
use crate::positivity::{CaseSpec, PositivityCase, SweepBounds};

pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Echo of the run parameters that produced a report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub statement: Option<String>,
    pub bounds: SweepBounds,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub out: Option<String>,
}

impl RunConfig {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            statement: None,
            bounds: SweepBounds::default(),
            trials: 20,
            seed: 7,
            jobs: 0,
            out: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.bounds.validate()?;
        if self.trials == 0 {
            return Err(Error::Config("trials must be positive".into()));
        }
        Ok(())
    }
}

/// A case whose difference acquired a negative coefficient; always empty
/// for the theorem-backed sweeps unless the implementation is wrong.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FailureRecord {
    pub index: usize,
    pub spec: CaseSpec,
    pub witness_partition: Partition,
    pub witness_coefficient: i64,
}

/// The smallest coefficient observed over all case differences, with the
/// lexicographically least partition attaining it in the earliest case.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MinCoefficient {
    pub value: i64,
    pub partition: Partition,
    pub case_index: usize,
}

/// Certificate of a positivity sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PositivityReport {
    pub schema: u32,
    pub tool_version: String,
    pub config: RunConfig,
    pub case_count: usize,
    pub skipped_count: usize,
    pub failures: Vec<FailureRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_coefficient: Option<MinCoefficient>,
    pub wall_time_ms: u64,
}

impl PositivityReport {
    pub fn assemble(config: RunConfig, cases: &[PositivityCase], wall_time_ms: u64) -> Self {
        let mut failures = Vec::new();
        let mut skipped = 0usize;
        let mut min: Option<MinCoefficient> = None;
        for (index, case) in cases.iter().enumerate() {
            if case.is_skipped() {
                skipped += 1;
                continue;
            }
            if case.is_failure() {
                let (partition, coefficient) =
                    case.witness().cloned().expect("failures carry a witness");
                failures.push(FailureRecord {
                    index,
                    spec: case.spec.clone(),
                    witness_partition: partition,
                    witness_coefficient: coefficient,
                });
            }
            if let Some(diff) = case.difference() {
                if let Some((partition, value)) = diff.min_coefficient() {
                    let better = match &min {
                        None => true,
                        Some(current) => {
                            value < current.value
                                || (value == current.value && partition < current.partition)
                        }
                    };
                    if better {
                        min = Some(MinCoefficient {
                            value,
                            partition,
                            case_index: index,
                        });
                    }
                }
            }
        }
        Self {
            schema: SCHEMA_VERSION,
            tool_version: tool_version(),
            config,
            case_count: cases.len(),
            skipped_count: skipped,
            failures,
            min_coefficient: min,
            wall_time_ms,
        }
    }

    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-(I, J) record of the minor-product decomposition sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityCaseRecord {
    pub i: Vec<u32>,
    pub j: Vec<u32>,
    pub s: Vec<u32>,
    pub theta_size: usize,
    pub trials: usize,
    pub equal: bool,
}

/// Certificate of a decomposition-identity sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityReport {
    pub schema: u32,
    pub tool_version: String,
    pub config: RunConfig,
    pub case_count: usize,
    pub failure_count: usize,
    pub cases: Vec<IdentityCaseRecord>,
    pub wall_time_ms: u64,
}

impl IdentityReport {
    pub fn success(&self) -> bool {
        self.failure_count == 0
    }
}

/// Runs the minor-product decomposition over every (I, J) pair of every
/// cardinality in [n], with `trials` seeded pseudorandom matrices per
/// pair. The per-pair RNG stream depends only on (seed, n, I, J).
pub fn run_identity_sweep(n: usize, trials: usize, seed: u64) -> Result<Vec<IdentityCaseRecord>> {
    let subsets = crate::enumerate::index_subsets(n);
    let mut records = Vec::new();
    for i in &subsets {
        for j in subsets.iter().filter(|j| j.len() == i.len()) {
            let mut stream: u64 = seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            for &e in i.elements() {
                stream = stream.wrapping_mul(31).wrapping_add(e as u64);
            }
            stream = stream.wrapping_mul(37).wrapping_add(0xA5A5);
            for &e in j.elements() {
                stream = stream.wrapping_mul(31).wrapping_add(e as u64);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(stream);
            let mut all_equal = true;
            let mut sample: Option<DecompositionCase> = None;
            for _ in 0..trials {
                let x = IntMatrix::random(n, &mut rng);
                let case = minor_product_decomposition(&x, i, j)?;
                all_equal &= case.equal;
                sample.get_or_insert(case);
            }
            let sample = sample.expect("trials >= 1");
            records.push(IdentityCaseRecord {
                i: sample.i,
                j: sample.j,
                s: sample.s,
                theta_size: sample.theta_size,
                trials,
                equal: all_equal,
            });
        }
    }
    Ok(records)
}

/// Assembles the identity-sweep certificate.
pub fn assemble_identity_report(
    config: RunConfig,
    cases: Vec<IdentityCaseRecord>,
    wall_time_ms: u64,
) -> IdentityReport {
    let failure_count = cases.iter().filter(|c| !c.equal).count();
    IdentityReport {
        schema: SCHEMA_VERSION,
        tool_version: tool_version(),
        config,
        case_count: cases.len(),
        failure_count,
        cases,
        wall_time_ms,
    }
}

/// On-disk product cache: exported Littlewood-Richardson expansions keyed
/// by the tool version that produced them.
#[derive(Serialize, Deserialize)]
pub struct LrCacheFile {
    pub schema: u32,
    pub tool_version: String,
    pub products: Vec<(Partition, Partition, Vec<(Partition, i64)>)>,
}

/// Serializes the in-memory product cache.
pub fn export_lr_cache() -> LrCacheFile {
    LrCacheFile {
        schema: SCHEMA_VERSION,
        tool_version: tool_version(),
        products: crate::schur::export_products(),
    }
}

/// Seeds the in-memory product cache from a file payload; entries from a
/// different tool version are ignored.
pub fn import_lr_cache(file: LrCacheFile) -> usize {
    if file.schema != SCHEMA_VERSION || file.tool_version != tool_version() {
        return 0;
    }
    let count = file.products.len();
    crate::schur::import_products(file.products);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::{enumerate_cases, run_sweep, StatementId};

    #[test]
    fn report_roundtrips_and_is_deterministic() {
        let bounds = SweepBounds {
            box_rows: 2,
            box_cols: 2,
            ..SweepBounds::default()
        };
        let specs = enumerate_cases(StatementId::Okounkov, &bounds);
        let cases = run_sweep(&specs).unwrap();
        let mut config = RunConfig::new("check");
        config.statement = Some("okounkov".into());
        config.bounds = bounds;
        let a = PositivityReport::assemble(config.clone(), &cases, 12);
        let b = PositivityReport::assemble(config, &cases, 99);
        assert!(a.success());
        assert_eq!(a.case_count, specs.len());
        assert_eq!(a.skipped_count, 0);
        // Identical up to wall time.
        let mut bj = serde_json::to_value(&b).unwrap();
        bj["wall_time_ms"] = serde_json::json!(12);
        assert_eq!(serde_json::to_value(&a).unwrap(), bj);
        // Lossless JSON round-trip.
        let text = serde_json::to_string_pretty(&a).unwrap();
        let back: PositivityReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_value(&back).unwrap(), serde_json::to_value(&a).unwrap());
    }

    #[test]
    fn min_coefficient_tracks_least_value() {
        use crate::partition::SkewShape;
        use crate::positivity::check_cell_transfer;
        let a: SkewShape = "2".parse().unwrap();
        let b: SkewShape = "1,1".parse().unwrap();
        let cases = vec![check_cell_transfer(&a, &b), check_cell_transfer(&a, &a)];
        let report = PositivityReport::assemble(RunConfig::new("check"), &cases, 0);
        let min = report.min_coefficient.unwrap();
        assert_eq!(min.value, 1);
        assert_eq!(min.partition, "2,2".parse().unwrap());
        assert_eq!(min.case_index, 0);
    }

    #[test]
    fn identity_sweep_small() {
        let records = run_identity_sweep(2, 3, 7).unwrap();
        // (I, J) pairs of equal cardinality in [2]: 1 + 4 + 1.
        assert_eq!(records.len(), 6);
        assert!(records.iter().all(|r| r.equal));
        // Determinism: the same seed reproduces the same records.
        let again = run_identity_sweep(2, 3, 7).unwrap();
        assert_eq!(
            serde_json::to_value(&records).unwrap(),
            serde_json::to_value(&again).unwrap()
        );
    }

    #[test]
    fn config_validation() {
        let mut config = RunConfig::new("check");
        assert!(config.validate().is_ok());
        config.trials = 0;
        assert!(config.validate().is_err());
        let mut config = RunConfig::new("check");
        config.bounds.box_rows = 0;
        assert!(config.validate().is_err());
    }
}
