//! Instance files: JSON (`{"p": 3, "weights": [[1,0,1],[0,1,1]]}`) or plain
//! text (`p k n` on the first line, then `k` rows of `n` integers, then an
//! optional line of `n` variable names).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::action::{self, ActionSpec};
use crate::error::{Error, Result};
use crate::modp;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub p: u64,
    pub weights: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl InstanceFile {
    pub fn k(&self) -> usize {
        self.weights.len()
    }

    pub fn n(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    /// Parses either format; JSON is recognized by a leading `{`.
    pub fn parse(text: &str) -> Result<Self> {
        let inst = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
        } else {
            Self::parse_text(text)?
        };
        inst.validate()?;
        Ok(inst)
    }

    fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());

        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty instance".into()))?;
        let dims: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header token {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [p, k, n] = dims[..] else {
            return Err(Error::Parse(format!(
                "header must be `p k n`, got {header:?}"
            )));
        };
        let (k, n) = (k as usize, n as usize);

        let mut weights = Vec::with_capacity(k);
        for r in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {k} rows, found {r}")))?;
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in row {}", r + 1)))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            weights.push(row);
        }
        let names = lines
            .next()
            .map(|l| l.split_whitespace().map(str::to_string).collect());
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        Ok(InstanceFile { p, weights, names })
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.weights.is_empty() || n == 0 {
            return Err(Error::Parse(
                "weight matrix must have at least one row and one column".into(),
            ));
        }
        if let Some((i, row)) = self.weights.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        if let Some(names) = &self.names {
            if names.len() != n {
                return Err(Error::Parse(format!(
                    "{} variable names for {n} variables",
                    names.len()
                )));
            }
        }
        Ok(())
    }

    pub fn to_spec(&self) -> Result<ActionSpec> {
        ActionSpec::new(self.p, self.weights.clone())
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.names
            .clone()
            .unwrap_or_else(|| action::default_names(self.n()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance always serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.p, self.k(), self.n());
        for row in &self.weights {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        if let Some(names) = &self.names {
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Uniformly random `k × n` matrix over `Z/p` of full row rank, by rejection.
pub fn random_instance(k: usize, n: usize, p: u64, seed: u64) -> Result<InstanceFile> {
    if !action::is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let p32 = u32::try_from(p).map_err(|_| Error::Overflow { p, free: n })?;
    if k == 0 || n == 0 {
        return Err(Error::Parse("k and n must be positive".into()));
    }
    if k > n {
        return Err(Error::Parse(format!(
            "k = {k} exceeds n = {n}; no full-rank matrix exists"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let w: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p32)).collect())
            .collect();
        if modp::rank_mod_p(&w, p32) == k {
            let weights = w
                .into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect();
            return Ok(InstanceFile {
                p,
                weights,
                names: None,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn json_instance() {
        let inst = InstanceFile::parse(r#"{"p": 3, "weights": [[1,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(inst.p, 3);
        assert_eq!(inst.weights, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(inst.variable_names(), vec!["x1", "x2", "x3"]);
    }

    #[test]
    fn text_instance_with_names() {
        let inst = InstanceFile::parse("# example\n3 2 3\n1 0 1\n0 1 1\nx y z\n").unwrap();
        assert_eq!(inst.weights, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(inst.variable_names(), vec!["x", "y", "z"]);
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "3 2 3\n1 0 1\n0 1\n",
            "3 2 3\n1 0 1\n",
            "3 2\n1 0\n",
            "3 1 2\n1 a\n",
            "3 1 2\n1 1\nx\n",
            "3 1 2\n1 1\nx y\nextra\n",
            "",
            r#"{"p": 3, "weights": [[1,0,1],[0,1]]}"#,
            r#"{"p": 3, "weights": []}"#,
            r#"{"p": 3}"#,
        ] {
            assert!(
                matches!(InstanceFile::parse(bad), Err(Error::Parse(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn composite_modulus_fails_at_spec() {
        let inst = InstanceFile::parse("4 1 2\n1 1\n").unwrap();
        assert_eq!(inst.to_spec(), Err(Error::NonPrimeModulus(4)));
    }

    #[test]
    fn random_is_reproducible_and_full_rank() {
        assert_eq!(
            random_instance(2, 3, 5, 42).unwrap(),
            random_instance(2, 3, 5, 42).unwrap()
        );
        let inst = random_instance(2, 4, 7, 1).unwrap();
        assert!(inst.to_spec().unwrap().is_full_rank());
        assert!(matches!(random_instance(3, 2, 5, 0), Err(Error::Parse(_))));
        assert_eq!(random_instance(2, 3, 6, 0), Err(Error::NonPrimeModulus(6)));
    }

    fn arb_instance() -> impl Strategy<Value = InstanceFile> {
        (
            1usize..4,
            1usize..6,
            prop::sample::select(vec![2u64, 3, 5, 7]),
            any::<bool>(),
        )
            .prop_flat_map(|(k, n, p, named)| {
                let rows = prop::collection::vec(prop::collection::vec(-20i64..20, n), k);
                let names = if named {
                    prop::collection::vec("[a-z][a-z0-9_]{0,3}", n)
                        .prop_map(Some)
                        .boxed()
                } else {
                    Just(None).boxed()
                };
                (Just(p), rows, names).prop_map(|(p, weights, names)| InstanceFile {
                    p,
                    weights,
                    names,
                })
            })
    }

    proptest! {
        #[test]
        fn formats_round_trip(inst in arb_instance()) {
            prop_assert_eq!(InstanceFile::parse(&inst.to_json()).unwrap(), inst.clone());
            prop_assert_eq!(InstanceFile::parse(&inst.to_text()).unwrap(), inst);
        }
    }
}
