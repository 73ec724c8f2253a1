//! Seed generation: `n - k` invariant monomials whose exponent residues form a
//! basis of `ker(W mod p)`.
//!
//! Pick pivot columns `T` with `det(W_T) ≠ 0 (mod p)`. For every other column
//! `i`, the signed maximal minors of `W` restricted to `S = T ∪ {i}` give a
//! kernel vector supported on `S` (cofactor expansion of the singular matrix
//! obtained by repeating any row of `W_S`). Its entry at `i` is `±det(W_T)`
//! while every other such vector vanishes there, so the vectors are
//! independent.

use crate::action::{ActionSpec, ExponentVector};
use crate::error::{Error, Result};
use crate::modp::{self, PivotSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSet {
    seeds: Vec<ExponentVector>,
    pivot: PivotSet,
}

impl SeedSet {
    pub fn seeds(&self) -> &[ExponentVector] {
        &self.seeds
    }

    pub fn pivot(&self) -> &PivotSet {
        &self.pivot
    }

    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }
}

/// Kernel vector for non-pivot column `i`, with entries in `[0, p-1]`.
///
/// The entry at the `j`-th position (1-based) of `S = T ∪ {i}` is
/// `(-1)^(j+1) * det(W restricted to S minus that column)`.
pub fn raw_seed(spec: &ActionSpec, pivot: &PivotSet, i: usize) -> Result<Vec<u32>> {
    let (w, p, n) = (spec.weights(), spec.p(), spec.n());
    if pivot.contains(i) || i >= n {
        return Err(Error::InvalidColumn(i));
    }
    let mut support: Vec<usize> = pivot.columns().to_vec();
    support.push(i);
    support.sort_unstable();

    let mut v = vec![0u32; n];
    for (pos, &a) in support.iter().enumerate() {
        let rest: Vec<usize> = support.iter().copied().filter(|&c| c != a).collect();
        let minor = modp::det_mod_p(&modp::submatrix(w, &rest), p);
        v[a] = if pos % 2 == 0 {
            minor
        } else {
            modp::neg(minor, p)
        };
    }
    Ok(v)
}

/// Seeds from the deterministic pivot choice of [`modp::find_pivot_columns`].
pub fn generate_seeds(spec: &ActionSpec) -> Result<SeedSet> {
    let pivot = modp::find_pivot_columns(spec.weights(), spec.p())?;
    generate_seeds_with_pivot(spec, pivot)
}

/// Seeds from a caller-supplied pivot set. Any `T` with an invertible minor
/// gives a valid basis; this entry point exists so a particular `T` can be
/// reproduced.
pub fn generate_seeds_with_pivot(spec: &ActionSpec, pivot: PivotSet) -> Result<SeedSet> {
    let n = spec.n();
    if pivot.len() != spec.k() {
        return Err(Error::DimensionMismatch {
            expected: spec.k(),
            found: pivot.len(),
        });
    }
    let seeds = (0..n)
        .filter(|&i| !pivot.contains(i))
        .map(|i| {
            let v = raw_seed(spec, &pivot, i)?;
            if v.iter().all(|&x| x == 0) {
                return Err(Error::Internal(format!(
                    "seed for column {} vanished mod {}",
                    i + 1,
                    spec.p()
                )));
            }
            Ok(ExponentVector::new(v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeedSet { seeds, pivot })
}
