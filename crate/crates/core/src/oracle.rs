//! Brute-force atoms of the invariant semigroup `{α ≥ 0 : Wα ≡ 0 (mod p)}`.
//!
//! If some `α_j > p` then `α - p·e_j` is still invariant and splits `α`, so
//! every atom lies in the box `[0, p]^n`. The oracle lists the invariant
//! points of that box and keeps those with no smaller invariant divisor. It
//! uses nothing from seed generation or growth, only the invariance test.

use crate::action::{ActionSpec, ExponentVector, GeneratingSet};
use crate::error::{Error, Result};
use crate::modp;

pub const DEFAULT_BOX_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `(p+1)^n` the oracle will walk.
    pub max_points: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_points: DEFAULT_BOX_CAP,
        }
    }
}

impl OracleConfig {
    /// Number of box points for `spec`, or `None` when it overflows `u128`.
    pub fn box_size(spec: &ActionSpec) -> Option<u128> {
        (spec.p() as u128 + 1).checked_pow(spec.n() as u32)
    }

    pub fn admits(&self, spec: &ActionSpec) -> bool {
        Self::box_size(spec).is_some_and(|s| s <= self.max_points as u128)
    }
}

/// Nonzero invariant points of `[0, p]^n` in graded order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBox {
    points: Vec<ExponentVector>,
}

impl KernelBox {
    pub fn enumerate(spec: &ActionSpec, config: &OracleConfig) -> Result<Self> {
        let size = OracleConfig::box_size(spec).unwrap_or(u128::MAX);
        if size > config.max_points as u128 {
            return Err(Error::CapacityExceeded {
                required: size,
                cap: config.max_points as u128,
            });
        }
        let n = spec.n();
        let top = spec.p();
        let mut alpha = vec![0u32; n];
        let mut points = Vec::new();
        'walk: loop {
            let mut j = 0;
            loop {
                if j == n {
                    break 'walk;
                }
                if alpha[j] < top {
                    alpha[j] += 1;
                    break;
                }
                alpha[j] = 0;
                j += 1;
            }
            let candidate = ExponentVector::new(alpha.clone());
            if modp::is_invariant(spec, &candidate)? {
                points.push(candidate);
            }
        }
        points.sort_unstable();
        Ok(KernelBox { points })
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn oracle_atoms(spec: &ActionSpec) -> Result<GeneratingSet> {
    oracle_atoms_with(spec, &OracleConfig::default())
}

/// A box point is an atom iff no other box point divides it.
///
/// Divisibility is transitive and any divisor of a box point is itself in the
/// box, so it suffices to test against the atoms already found in lower
/// degrees.
pub fn oracle_atoms_with(spec: &ActionSpec, config: &OracleConfig) -> Result<GeneratingSet> {
    let kernel = KernelBox::enumerate(spec, config)?;
    let mut atoms: Vec<ExponentVector> = Vec::new();
    let mut lower_degree_end = 0;
    let mut current_degree = 0;
    for alpha in kernel.points {
        let d = alpha.degree();
        if d != current_degree {
            current_degree = d;
            lower_degree_end = atoms.len();
        }
        if !atoms[..lower_degree_end].iter().any(|b| b.divides(&alpha)) {
            atoms.push(alpha);
        }
    }
    Ok(GeneratingSet::new(atoms))
}
