//! Exact linear algebra over the prime field `Z/p`.
//!
//! Matrices are row lists of canonical residues in `[0, p-1]`. Products are
//! taken in `u64`, which is wide enough for any `u32` modulus.

use crate::action::{ActionSpec, ExponentVector};
use crate::error::{Error, Result};

fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

fn pow(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of a nonzero residue (Fermat).
pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p as u64 - 2, p)
}

/// In-place reduction to row echelon form. Returns the pivot column of each
/// nonzero row, in row order, together with the determinant factor picked
/// up from row swaps and pivot scaling.
fn echelon(m: &mut [Vec<u32>], p: u32) -> (Vec<usize>, u32) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut scale = 1 % p;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if found != r {
            m.swap(found, r);
            scale = neg(scale, p);
        }
        let lead = m[r][c];
        scale = mul(scale, lead, p);
        let lead_inv = inv(lead, p);
        for x in m[r][c..].iter_mut() {
            *x = mul(*x, lead_inv, p);
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = sub(*x, mul(f, y, p), p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, scale)
}

/// Rank of `w` over `Z/p` by Gaussian elimination.
pub fn rank_mod_p(w: &[Vec<u32>], p: u32) -> usize {
    let mut m = w.to_vec();
    echelon(&mut m, p).0.len()
}

/// Determinant of a square matrix over `Z/p`, computed by elimination.
pub fn det_mod_p(m: &[Vec<u32>], p: u32) -> u32 {
    let size = m.len();
    assert!(
        m.iter().all(|r| r.len() == size),
        "det_mod_p needs a square matrix"
    );
    if size == 0 {
        return 1 % p;
    }
    let mut work = m.to_vec();
    let (pivots, scale) = echelon(&mut work, p);
    if pivots.len() < size {
        0
    } else {
        scale
    }
}

/// Columns of `w` selected by `cols`, in the given order.
pub fn submatrix(w: &[Vec<u32>], cols: &[usize]) -> Vec<Vec<u32>> {
    w.iter()
        .map(|r| cols.iter().map(|&c| r[c]).collect())
        .collect()
}

/// Sorted set of `k` column indices whose square submatrix is invertible mod `p`.
///
/// Indices are 0-based; user-facing output adds one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PivotSet(Vec<usize>);

impl PivotSet {
    /// Validates a caller-chosen pivot set against `w`.
    pub fn new(w: &[Vec<u32>], p: u32, mut cols: Vec<usize>) -> Result<Self> {
        let n = w.first().map_or(0, Vec::len);
        cols.sort_unstable();
        cols.dedup();
        if cols.len() != w.len() {
            return Err(Error::DimensionMismatch {
                expected: w.len(),
                found: cols.len(),
            });
        }
        if let Some(&bad) = cols.iter().find(|&&c| c >= n) {
            return Err(Error::InvalidColumn(bad));
        }
        if det_mod_p(&submatrix(w, &cols), p) == 0 {
            return Err(Error::RankDeficient {
                rank: rank_mod_p(&submatrix(w, &cols), p),
                rows: w.len(),
            });
        }
        Ok(PivotSet(cols))
    }

    pub fn columns(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// First pivot column of each echelon row: the lexicographically smallest
/// column set with nonvanishing minor mod `p`.
pub fn find_pivot_columns(w: &[Vec<u32>], p: u32) -> Result<PivotSet> {
    let mut m = w.to_vec();
    let (pivots, _) = echelon(&mut m, p);
    if pivots.len() < w.len() {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            rows: w.len(),
        });
    }
    Ok(PivotSet(pivots))
}

/// `x^α` is invariant iff `W α ≡ 0 (mod p)`.
pub fn is_invariant(spec: &ActionSpec, alpha: &ExponentVector) -> Result<bool> {
    if alpha.len() != spec.n() {
        return Err(Error::DimensionMismatch {
            expected: spec.n(),
            found: alpha.len(),
        });
    }
    Ok(in_kernel(spec.weights(), alpha.components(), spec.p()))
}

/// `W v ≡ 0 (mod p)` for a raw component slice of matching length.
pub fn in_kernel(w: &[Vec<u32>], v: &[u32], p: u32) -> bool {
    let p = p as u64;
    w.iter().all(|row| {
        row.iter()
            .zip(v)
            .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * (b as u64 % p)) % p)
            == 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(p: u64, rows: &[&[i64]]) -> ActionSpec {
        ActionSpec::new(p, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn invariance_examples() {
        let s = spec(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert!(is_invariant(&s, &ExponentVector::new(vec![1, 1, 2])).unwrap());
        assert!(!is_invariant(&s, &ExponentVector::new(vec![1, 0, 0])).unwrap());
        assert!(is_invariant(&s, &ExponentVector::zero(3)).unwrap());
        assert_eq!(
            is_invariant(&s, &ExponentVector::zero(2)),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_mod_p(&[vec![1, 0, 1], vec![0, 1, 1]], 3), 2);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![2, 2]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![0, 0], vec![0, 0]], 2), 0);
    }

    #[test]
    fn pivot_examples() {
        let t = find_pivot_columns(&[vec![1, 1, 1, 1], vec![0, 0, 1, 1]], 2).unwrap();
        assert_eq!(t.columns(), &[0, 2]);
        let t = find_pivot_columns(&[vec![1, 0, 1], vec![0, 1, 1]], 3).unwrap();
        assert_eq!(t.columns(), &[0, 1]);
        let s = spec(2, &[&[0, 1], &[0, 0]]).normalize();
        assert_eq!(find_pivot_columns(s.weights(), 2).unwrap().columns(), &[1]);
        assert_eq!(
            find_pivot_columns(&[vec![0, 1], vec![0, 0]], 2),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        );
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_mod_p(&[vec![1, 1], vec![0, 1]], 3), 1);
        assert_eq!(det_mod_p(&[vec![1, 1], vec![1, 1]], 5), 0);
        for k in 1..5 {
            let id: Vec<Vec<u32>> = (0..k)
                .map(|i| (0..k).map(|j| (i == j) as u32).collect())
                .collect();
            assert_eq!(det_mod_p(&id, 7), 1);
        }
        // row swap flips the sign
        assert_eq!(det_mod_p(&[vec![0, 1], vec![1, 0]], 5), 4);
        assert_eq!(det_mod_p(&[vec![2, 3], vec![1, 4]], 7), 5);
    }

    #[test]
    fn explicit_pivot_set() {
        let w = vec![vec![1, 1, 1, 1], vec![0, 0, 1, 1]];
        assert_eq!(PivotSet::new(&w, 5, vec![2, 1]).unwrap().columns(), &[1, 2]);
        assert!(matches!(
            PivotSet::new(&w, 5, vec![0, 1]),
            Err(Error::RankDeficient { .. })
        ));
        assert!(matches!(
            PivotSet::new(&w, 5, vec![0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    /// Dimension of the row space by listing every `Z/p` combination of rows.
    fn rank_by_span(w: &[Vec<u32>], p: u32) -> usize {
        let k = w.len();
        let n = w.first().map_or(0, Vec::len);
        let mut span = std::collections::HashSet::new();
        let total = (p as usize).pow(k as u32);
        for idx in 0..total {
            let mut c = idx;
            let mut v = vec![0u32; n];
            for row in w {
                let coef = (c % p as usize) as u32;
                c /= p as usize;
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + coef * y) % p;
                }
            }
            span.insert(v);
        }
        let mut dim = 0;
        while (p as usize).pow(dim as u32) < span.len() {
            dim += 1;
        }
        dim
    }

    fn all_matrices(p: u32, k: usize, n: usize) -> Vec<Vec<Vec<u32>>> {
        let total = (p as usize).pow((k * n) as u32);
        (0..total)
            .map(|mut idx| {
                (0..k)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let e = (idx % p as usize) as u32;
                                idx /= p as usize;
                                e
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_matches_span_enumeration() {
        for &(p, k, n) in &[
            (2, 2, 2),
            (2, 2, 3),
            (2, 3, 3),
            (3, 2, 2),
            (3, 2, 3),
            (3, 1, 3),
        ] {
            for w in all_matrices(p, k, n) {
                assert_eq!(rank_mod_p(&w, p), rank_by_span(&w, p), "{w:?} mod {p}");
            }
        }
    }

    /// Leibniz expansion over permutations, reduced at the end.
    fn det_by_permutations(m: &[Vec<u32>], p: u32) -> u32 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in perms(n - 1) {
                for pos in 0..n {
                    let mut v = rest.clone();
                    v.insert(pos, n - 1);
                    out.push(v);
                }
            }
            out
        }
        let n = m.len();
        let mut total: i64 = 0;
        for sigma in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| sigma[i] > sigma[j])
                .count();
            let prod: i64 = (0..n).map(|i| m[i][sigma[i]] as i64).product();
            total += if inversions % 2 == 0 { prod } else { -prod };
        }
        total.rem_euclid(p as i64) as u32
    }

    fn square(p: u32, max: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
        (1..=max).prop_flat_map(move |k| prop::collection::vec(prop::collection::vec(0..p, k), k))
    }

    proptest! {
        #[test]
        fn det_matches_leibniz(
            (p, m) in prop::sample::select(vec![2u32, 3, 5, 7, 11]).prop_flat_map(|p| (Just(p), square(p, 4)))
        ) {
            prop_assert_eq!(det_mod_p(&m, p), det_by_permutations(&m, p));
        }

        #[test]
        fn pivot_minor_is_nonzero(w in prop::collection::vec(prop::collection::vec(0u32..5, 5), 1..4)) {
            let s = ActionSpec::new(5, w.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect())
                .unwrap()
                .normalize();
            let t = find_pivot_columns(s.weights(), 5).unwrap();
            prop_assert_eq!(t.len(), s.k());
            prop_assert_ne!(det_mod_p(&submatrix(s.weights(), t.columns()), 5), 0);
        }

        #[test]
        fn kernel_closed_under_addition(
            w in prop::collection::vec(prop::collection::vec(0u32..7, 4), 1..3),
            a in prop::collection::vec(0u32..15, 4),
            b in prop::collection::vec(0u32..15, 4),
        ) {
            let s = ActionSpec::new(7, w.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()).unwrap();
            let a = ExponentVector::new(a);
            let b = ExponentVector::new(b);
            let sum = ExponentVector::new(a.components().iter().zip(b.components()).map(|(x, y)| x + y).collect());
            if is_invariant(&s, &a).unwrap() && is_invariant(&s, &b).unwrap() {
                prop_assert!(is_invariant(&s, &sum).unwrap());
            }
        }

        #[test]
        fn pure_powers_are_invariant(
            p in prop::sample::select(vec![2u32, 3, 5, 7, 13]),
            w in prop::collection::vec(prop::collection::vec(0i64..100, 4), 1..4),
        ) {
            let s = ActionSpec::new(p as u64, w).unwrap();
            for j in 0..4 {
                prop_assert!(is_invariant(&s, &ExponentVector::pure_power(4, j, p)).unwrap());
            }
        }
    }
}
