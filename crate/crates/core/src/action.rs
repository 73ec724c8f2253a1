//! Domain types shared by every stage: the diagonal action, exponent vectors
//! and generating sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp;

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A diagonal action of `(Z/p)^k` on `n` variables.
///
/// Row `i` of the weight matrix lists the exponents of the primitive `p`-th
/// root of unity by which generator `g_i` scales each variable. Entries are
/// always stored reduced into `[0, p-1]`. The root of unity itself never needs
/// to be materialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionSpec {
    p: u32,
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl ActionSpec {
    /// Builds a spec from integer rows, reducing every entry mod `p`.
    ///
    /// The matrix need not have full row rank; see [`ActionSpec::normalize`].
    pub fn new(p: u64, rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || n == 0 {
            return Err(Error::Parse(
                "weight matrix must have at least one row and one column".into(),
            ));
        }
        Self::with_columns(p, n, rows)
    }

    /// Like [`ActionSpec::new`] but with an explicit column count, so that a
    /// matrix with zero rows (the trivial group) can be represented.
    pub fn with_columns(p: u64, n: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        let p32 = u32::try_from(p).map_err(|_| Error::Overflow { p, free: n })?;
        if n == 0 {
            return Err(Error::Parse("at least one variable is required".into()));
        }
        let mut canon = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            canon.push(row.iter().map(|&w| w.rem_euclid(p as i64) as u32).collect());
        }
        Ok(ActionSpec {
            p: p32,
            n,
            rows: canon,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Number of group generators (rows).
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of variables (columns).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Drops rows that are `Z/p`-linearly dependent on earlier rows.
    ///
    /// Rows are scanned in order and kept when they raise the rank, so the
    /// result is a sub-list of the original rows. The kernel mod `p`, and
    /// therefore the invariant ring, is unchanged.
    pub fn normalize(&self) -> ActionSpec {
        let mut kept: Vec<Vec<u32>> = Vec::with_capacity(self.rows.len());
        let mut rank = 0;
        for row in &self.rows {
            kept.push(row.clone());
            let r = modp::rank_mod_p(&kept, self.p);
            if r > rank {
                rank = r;
            } else {
                kept.pop();
            }
        }
        ActionSpec {
            p: self.p,
            n: self.n,
            rows: kept,
        }
    }

    pub fn is_full_rank(&self) -> bool {
        modp::rank_mod_p(&self.rows, self.p) == self.k()
    }

    /// Olson's degree bound `k(p-1)+1` for the (normalized) group order `p^k`.
    pub fn olson_bound(&self) -> u64 {
        self.k() as u64 * (self.p as u64 - 1) + 1
    }

    /// Rejects instances whose seed sums `(p-1)(n-k)p` would not fit in a
    /// `u32` exponent.
    pub fn check_exponent_width(&self) -> Result<()> {
        let free = self.n.saturating_sub(self.k());
        let p = self.p as u64;
        (p - 1)
            .checked_mul(free as u64)
            .and_then(|v| v.checked_mul(p))
            .filter(|&v| v <= u32::MAX as u64)
            .map(|_| ())
            .ok_or(Error::Overflow { p, free })
    }

    /// Returns the same action with columns reordered: new column `j` is old
    /// column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> ActionSpec {
        assert_eq!(perm.len(), self.n);
        let rows = self
            .rows
            .iter()
            .map(|r| perm.iter().map(|&j| r[j]).collect())
            .collect();
        ActionSpec {
            p: self.p,
            n: self.n,
            rows,
        }
    }
}

/// Validates and normalizes a raw weight matrix in one step.
pub fn normalize(p: u64, rows: Vec<Vec<i64>>) -> Result<ActionSpec> {
    Ok(ActionSpec::new(p, rows)?.normalize())
}

/// Exponent vector `α` of the monomial `x^α`.
///
/// Ordered by total degree first, then by reverse lexicographic comparison of
/// the components so that `x1` sorts ahead of `x2` within a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(components: Vec<u32>) -> Self {
        ExponentVector(components)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `p * e_j` in `n` variables.
    pub fn pure_power(n: usize, j: usize, p: u32) -> Self {
        let mut v = vec![0; n];
        v[j] = p;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn permute(&self, perm: &[usize]) -> ExponentVector {
        ExponentVector(perm.iter().map(|&j| self.0[j]).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, j: usize) -> &u32 {
        &self.0[j]
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorted, duplicate-free set of minimal monomial generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<ExponentVector>", into = "Vec<ExponentVector>")]
pub struct GeneratingSet {
    generators: Vec<ExponentVector>,
}

impl GeneratingSet {
    pub fn new(mut generators: Vec<ExponentVector>) -> Self {
        generators.sort();
        generators.dedup();
        GeneratingSet { generators }
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.generators.iter()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.generators.binary_search(v).is_ok()
    }

    pub fn max_degree(&self) -> u64 {
        self.generators
            .iter()
            .map(ExponentVector::degree)
            .max()
            .unwrap_or(0)
    }

    /// No element divides a different element.
    pub fn is_antichain(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.divides(b))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("exponent vectors always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<Vec<ExponentVector>> for GeneratingSet {
    fn from(v: Vec<ExponentVector>) -> Self {
        GeneratingSet::new(v)
    }
}

impl From<GeneratingSet> for Vec<ExponentVector> {
    fn from(g: GeneratingSet) -> Self {
        g.generators
    }
}

impl<'a> IntoIterator for &'a GeneratingSet {
    type Item = &'a ExponentVector;
    type IntoIter = std::slice::Iter<'a, ExponentVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.generators.iter()
    }
}

/// Default variable names `x1 … xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("x{j}")).collect()
}

/// Renders `x^α` in product notation, e.g. `x*y*z^2`. The zero vector is `1`.
pub fn format_monomial<S: AsRef<str>>(alpha: &ExponentVector, names: &[S]) -> String {
    assert_eq!(alpha.len(), names.len(), "one name per variable");
    let factors: Vec<String> = alpha
        .components()
        .iter()
        .zip(names)
        .filter(|(&a, _)| a > 0)
        .map(|(&a, name)| match a {
            1 => name.as_ref().to_string(),
            _ => format!("{}^{}", name.as_ref(), a),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_monomial(self, &default_names(self.len())))
    }
}
