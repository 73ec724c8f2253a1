//! Seed growth: expand the seeds into the minimal monomial generating set.
//!
//! Every invariant exponent `γ` splits uniquely as `γ = p·β + t` with
//! `t ∈ [0, p-1]^n` in the mod-`p` span of the seeds. An atom is therefore
//! either a pure power `p·e_j` or one of the `p^(n-k) - 1` nonzero span
//! representatives, and the minimal set is what survives a divisibility sweep
//! over those in degree order.

use crate::action::{ActionSpec, ExponentVector, GeneratingSet};
use crate::error::{Error, Result};
use crate::seedgen::{self, SeedSet};

/// Default bound on the number of materialized span representatives.
pub const DEFAULT_CANDIDATE_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthConfig {
    pub max_candidates: u64,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig {
            max_candidates: DEFAULT_CANDIDATE_CAP,
        }
    }
}

/// Nonzero span representatives plus the `n` pure powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePool {
    candidates: Vec<ExponentVector>,
    pure_powers: Vec<ExponentVector>,
}

impl CandidatePool {
    pub fn candidates(&self) -> &[ExponentVector] {
        &self.candidates
    }

    pub fn pure_powers(&self) -> &[ExponentVector] {
        &self.pure_powers
    }
}

pub fn enumerate_candidates(seeds: &SeedSet, spec: &ActionSpec) -> Result<CandidatePool> {
    enumerate_candidates_with(seeds, spec, &GrowthConfig::default())
}

/// Walks every coefficient tuple `c ∈ {0..p-1}^t \ {0}` in odometer order.
///
/// Bumping digit `i` by one (including the wrap from `p-1` back to `0`) adds
/// seed `i` once more mod `p`, so the running sum is updated with a single
/// vector addition per step.
pub fn enumerate_candidates_with(
    seeds: &SeedSet,
    spec: &ActionSpec,
    config: &GrowthConfig,
) -> Result<CandidatePool> {
    let p = spec.p();
    let n = spec.n();
    let t = seeds.len();

    let required = (p as u128).checked_pow(t as u32).unwrap_or(u128::MAX) - 1;
    if required > config.max_candidates as u128 {
        return Err(Error::CapacityExceeded {
            required,
            cap: config.max_candidates as u128,
        });
    }

    let pure_powers = (0..n)
        .map(|j| ExponentVector::pure_power(n, j, p))
        .collect();
    let mut candidates = Vec::with_capacity(required as usize);
    let mut digits = vec![0u32; t];
    let mut acc = vec![0u32; n];
    'walk: loop {
        let mut i = 0;
        loop {
            if i == t {
                break 'walk;
            }
            for (a, &s) in acc.iter_mut().zip(seeds.seeds()[i].components()) {
                *a += s;
                if *a >= p {
                    *a -= p;
                }
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if acc.iter().any(|&a| a != 0) {
            candidates.push(ExponentVector::new(acc.clone()));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    Ok(CandidatePool {
        candidates,
        pure_powers,
    })
}

/// Olson filter, then a greedy divisibility sweep in graded order.
///
/// A vector is kept unless an already kept vector divides it. The quotient of
/// two kernel vectors is again a kernel vector, so any divisor certifies that
/// the vector is decomposable.
pub fn reduce_to_minimal(pool: &CandidatePool, spec: &ActionSpec) -> GeneratingSet {
    let bound = spec.olson_bound();
    let n = spec.n();
    let mut pool_vecs: Vec<&ExponentVector> = pool
        .candidates
        .iter()
        .filter(|c| c.degree() <= bound)
        .chain(pool.pure_powers.iter())
        .collect();
    pool_vecs.sort_unstable();
    pool_vecs.dedup();

    // kept vectors stored flat for a tight inner loop
    let mut flat: Vec<u32> = Vec::new();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for m in pool_vecs {
        let mc = m.components();
        let divisible = flat
            .chunks_exact(n)
            .any(|g| g.iter().zip(mc).all(|(a, b)| a <= b));
        if !divisible {
            flat.extend_from_slice(mc);
            kept.push(m.clone());
        }
    }
    GeneratingSet::new(kept)
}

/// Normalize, generate seeds, grow, reduce.
pub fn compute_generators(spec: &ActionSpec) -> Result<GeneratingSet> {
    compute_generators_with(spec, &GrowthConfig::default())
}

pub fn compute_generators_with(spec: &ActionSpec, config: &GrowthConfig) -> Result<GeneratingSet> {
    let spec = spec.normalize();
    spec.check_exponent_width()?;
    let seeds = seedgen::generate_seeds(&spec)?;
    let pool = enumerate_candidates_with(&seeds, &spec, config)?;
    Ok(reduce_to_minimal(&pool, &spec))
}
