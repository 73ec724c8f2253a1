//! Timing harness comparing the seed pipeline against the brute-force oracle
//! on random full-rank instances.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth;
use crate::instance::random_instance;
use crate::oracle::{self, OracleConfig};

pub const CSV_HEADER: &str = "strategy,p,k,n,trial,seed,elapsed_s,count,status";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Elementary,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "skipped-cap")]
    SkippedCap,
    #[serde(rename = "mismatch")]
    Mismatch,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub strategy: Strategy,
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub elapsed_s: f64,
    pub count: Option<usize>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<(usize, usize)>,
    pub primes: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
    pub oracle: OracleConfig,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Per-cell RNG seed, a pure function of the base seed and the cell.
pub fn instance_seed(base: u64, k: usize, n: usize, p: u64, trial: usize) -> u64 {
    [k as u64, n as u64, p, trial as u64]
        .into_iter()
        .fold(splitmix64(base), |h, x| splitmix64(h ^ x))
}

/// Parses `2x3,2x4` into `[(2, 3), (2, 4)]`.
pub fn parse_sizes(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(|cell| {
            let (k, n) = cell
                .trim()
                .split_once(['x', 'X'])
                .ok_or_else(|| Error::Parse(format!("size {cell:?} is not KxN")))?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad row count in {cell:?}")))?;
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad column count in {cell:?}")))?;
            if k == 0 || k > n {
                return Err(Error::Parse(format!("size {cell:?} needs 1 <= k <= n")));
            }
            Ok((k, n))
        })
        .collect()
}

/// Runs every (size, prime, trial) cell sequentially, calling `sink` with
/// each record as soon as it is produced.
pub fn run_bench(
    config: &BenchConfig,
    mut sink: impl FnMut(&BenchRecord) -> Result<()>,
) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for &(k, n) in &config.sizes {
        for &p in &config.primes {
            for trial in 0..config.trials {
                let seed = instance_seed(config.seed, k, n, p, trial);
                let spec = random_instance(k, n, p, seed)?.to_spec()?;

                let start = Instant::now();
                let fast = growth::compute_generators(&spec)?;
                let fast_time = start.elapsed().as_secs_f64();

                let slow = if config.oracle.admits(&spec) {
                    let start = Instant::now();
                    let set = oracle::oracle_atoms_with(&spec, &config.oracle)?;
                    Some((set, start.elapsed().as_secs_f64()))
                } else {
                    None
                };

                let agree = slow.as_ref().is_none_or(|(set, _)| *set == fast);
                let status = if agree { Status::Ok } else { Status::Mismatch };
                let row = |strategy, elapsed_s, count, status| BenchRecord {
                    strategy,
                    p,
                    k,
                    n,
                    trial,
                    seed,
                    elapsed_s,
                    count,
                    status,
                };
                let pair = [
                    row(Strategy::Elementary, fast_time, Some(fast.len()), status),
                    match &slow {
                        Some((set, t)) => row(Strategy::Oracle, *t, Some(set.len()), status),
                        None => row(Strategy::Oracle, 0.0, None, Status::SkippedCap),
                    },
                ];
                for r in pair {
                    sink(&r)?;
                    records.push(r);
                }
            }
        }
    }
    Ok(records)
}

/// Streams records as CSV with the fixed header.
pub struct CsvSink<W: Write> {
    writer: csv::Writer<W>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(out: W) -> Self {
        CsvSink {
            writer: csv::Writer::from_writer(out),
        }
    }

    pub fn write(&mut self, record: &BenchRecord) -> Result<()> {
        self.writer
            .serialize(record)
            .map_err(|e| Error::Io(e.to_string()))?;
        self.writer.flush()?;
        Ok(())
    }
}

pub fn any_mismatch(records: &[BenchRecord]) -> bool {
    records.iter().any(|r| r.status == Status::Mismatch)
}
