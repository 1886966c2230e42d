//! Seeded test corpora and batch verification.

use std::time::Duration;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructors::MatroidSpec;
use crate::convolution::verify_identity;
use crate::error::MatroidError;
use crate::matroid::MultiplicityMatroid;
use crate::report::{IdentityId, IdentityReport};
use crate::sampling::{sample_identity, SampledReport};

/// One input: a single matroid, or a pair sharing an underlying matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: MatroidSpec,
    pub partner: Option<MatroidSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

fn random_columns(rng: &mut ChaCha8Rng) -> Vec<Vec<BigInt>> {
    let height = rng.gen_range(1..=4);
    let width = rng.gen_range(1..=6);
    (0..width)
        .map(|_| {
            (0..height)
                .map(|_| BigInt::from(rng.gen_range(-5..=5)))
                .collect()
        })
        .collect()
}

fn random_table(rng: &mut ChaCha8Rng, size: usize) -> Vec<BigInt> {
    (0..1usize << size)
        .map(|_| BigInt::from(rng.gen_range(1..=9)))
        .collect()
}

fn single(name: String, spec: MatroidSpec) -> CorpusEntry {
    CorpusEntry {
        name,
        spec,
        partner: None,
    }
}

impl Corpus {
    /// The standard corpus:
    ///
    /// * `U_{r,n}` for `0 <= r <= n <= 5`, `K3` and `K4`;
    /// * 25 random integer matrices, height at most 4, at most 6 columns,
    ///   entries in `[-5, 5]`;
    /// * 10 random multiplicity tables on `U_{2,4}` with values in `1..=9`;
    /// * 15 pairs: a random matrix with its own multiplicity, and the same
    ///   matroid with a random table.
    ///
    /// Everything random is drawn from one ChaCha8 stream seeded by `seed`.
    pub fn default_with_seed(seed: u64) -> Corpus {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut entries = Vec::new();
        for n in 0..=5 {
            for r in 0..=n {
                let spec = MatroidSpec::Uniform {
                    rank: r,
                    size: n,
                    multiplicity: None,
                };
                entries.push(single(format!("uniform-{r}-{n}"), spec));
            }
        }
        entries.push(single(
            "k3".into(),
            MatroidSpec::Graphic {
                vertices: 3,
                edges: vec![(0, 1), (1, 2), (0, 2)],
            },
        ));
        entries.push(single(
            "k4".into(),
            MatroidSpec::Graphic {
                vertices: 4,
                edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            },
        ));
        for i in 0..25 {
            let columns = random_columns(&mut rng);
            entries.push(single(
                format!("matrix-{i:02}"),
                MatroidSpec::Matrix { columns },
            ));
        }
        for i in 0..10 {
            let spec = MatroidSpec::Uniform {
                rank: 2,
                size: 4,
                multiplicity: Some(random_table(&mut rng, 4)),
            };
            entries.push(single(format!("weighted-u24-{i:02}"), spec));
        }
        for i in 0..15 {
            let columns = random_columns(&mut rng);
            let spec = MatroidSpec::Matrix { columns };
            let m = spec.build().expect("small integer matrix");
            let partner = MatroidSpec::Explicit {
                size: m.size(),
                rank: m.rank_table().to_vec(),
                multiplicity: random_table(&mut rng, m.size()),
            };
            entries.push(CorpusEntry {
                name: format!("pair-{i:02}"),
                spec,
                partner: Some(partner),
            });
        }
        Corpus { entries }
    }

    /// Drops entries whose ground set has more than `max` elements.
    pub fn with_max_size(mut self, max: usize) -> Corpus {
        self.entries.retain(|e| e.spec.size() <= max);
        self
    }
}

/// How [`verify_all`] and [`run_check`] decide between exact and sampled
/// checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Ground sets larger than this are checked at random points instead of
    /// exactly. `None` means always exact.
    pub sample_above: Option<usize>,
    pub points: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sample_above: None,
            points: 3,
            seed: 0,
        }
    }
}

impl VerifyOptions {
    /// Sampled checking above 10 elements.
    pub fn fast() -> Self {
        VerifyOptions {
            sample_above: Some(10),
            ..VerifyOptions::default()
        }
    }
}

/// Result of one identity on one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Exact(IdentityReport),
    Sampled(SampledReport),
}

impl Check {
    pub fn identity(&self) -> IdentityId {
        match self {
            Check::Exact(r) => r.identity,
            Check::Sampled(r) => r.identity,
        }
    }

    pub fn equal(&self) -> bool {
        match self {
            Check::Exact(r) => r.equal,
            Check::Sampled(r) => r.equal(),
        }
    }

    pub fn elapsed(&self) -> Duration {
        match self {
            Check::Exact(r) => r.elapsed,
            Check::Sampled(r) => r.elapsed,
        }
    }
}

/// Runs one identity, exactly or at random points according to `options`.
pub fn run_check(
    identity: IdentityId,
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
    options: &VerifyOptions,
) -> Result<Check, MatroidError> {
    let sampled = options.sample_above.is_some_and(|k| m1.size() > k);
    if sampled {
        sample_identity(identity, m1, m2, options.points, options.seed).map(Check::Sampled)
    } else {
        verify_identity(identity, m1, m2).map(Check::Exact)
    }
}

/// A check together with the matroid it ran on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub subject: String,
    pub check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub name: String,
    pub outcome: Result<Vec<CheckRecord>, MatroidError>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
}

impl CorpusReport {
    /// Every check equal and no entry failed to build.
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| {
            e.outcome
                .as_ref()
                .is_ok_and(|c| c.iter().all(|r| r.check.equal()))
        })
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.entries
            .iter()
            .filter_map(|e| e.outcome.as_ref().ok())
            .flatten()
    }

    pub fn errors(&self) -> impl Iterator<Item = (&str, &MatroidError)> {
        self.entries
            .iter()
            .filter_map(|e| e.outcome.as_ref().err().map(|err| (e.name.as_str(), err)))
    }
}

fn run_group(
    subject: &str,
    ids: &[IdentityId],
    m1: &MultiplicityMatroid,
    m2: &MultiplicityMatroid,
    options: &VerifyOptions,
    out: &mut Vec<CheckRecord>,
) -> Result<(), MatroidError> {
    for &id in ids {
        out.push(CheckRecord {
            subject: subject.to_owned(),
            check: run_check(id, m1, m2, options)?,
        });
    }
    Ok(())
}

/// Single entries get the single-matroid identities and the relations. Pairs
/// get the product identities, then the relations on each member, reported
/// as `name/m1` and `name/m2`.
pub fn verify_entry(entry: &CorpusEntry, options: &VerifyOptions) -> EntryReport {
    let outcome = (|| {
        let m1 = entry.spec.build()?;
        let mut out = Vec::new();
        match &entry.partner {
            None => {
                run_group(
                    &entry.name,
                    &IdentityId::SINGLE,
                    &m1,
                    &m1,
                    options,
                    &mut out,
                )?;
                run_group(
                    &entry.name,
                    &IdentityId::RELATIONS,
                    &m1,
                    &m1,
                    options,
                    &mut out,
                )?;
            }
            Some(partner) => {
                let m2 = partner.build()?;
                run_group(
                    &entry.name,
                    &IdentityId::PRODUCT,
                    &m1,
                    &m2,
                    options,
                    &mut out,
                )?;
                let s1 = format!("{}/m1", entry.name);
                run_group(&s1, &IdentityId::RELATIONS, &m1, &m1, options, &mut out)?;
                let s2 = format!("{}/m2", entry.name);
                run_group(&s2, &IdentityId::RELATIONS, &m2, &m2, options, &mut out)?;
            }
        }
        Ok(out)
    })();
    EntryReport {
        name: entry.name.clone(),
        outcome,
    }
}

/// Verifies every entry. Entry order is preserved; one entry failing to
/// build does not stop the others.
pub fn verify_all(corpus: &Corpus, options: &VerifyOptions) -> CorpusReport {
    let entries = corpus
        .entries
        .par_iter()
        .map(|e| verify_entry(e, options))
        .collect();
    CorpusReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_shape() {
        let c = Corpus::default_with_seed(42);
        assert_eq!(c.entries.len(), 21 + 2 + 25 + 10 + 15);
        assert_eq!(c.entries.iter().filter(|e| e.partner.is_some()).count(), 15);
        assert_eq!(c, Corpus::default_with_seed(42));
        assert_ne!(c, Corpus::default_with_seed(43));
        for e in &c.entries {
            assert!(e.spec.size() <= 6, "{}", e.name);
            if let MatroidSpec::Matrix { columns } = &e.spec {
                assert!(columns[0].len() <= 4);
                assert!(columns
                    .iter()
                    .flatten()
                    .all(|x| (-5..=5).contains(&i64::try_from(x).unwrap())));
            }
        }
    }

    #[test]
    fn max_size_filter() {
        let c = Corpus::default_with_seed(1).with_max_size(2);
        assert!(c.entries.iter().all(|e| e.spec.size() <= 2));
        assert!(c.entries.iter().any(|e| e.name == "uniform-1-2"));
    }

    #[test]
    fn build_errors_are_collected() {
        let corpus = Corpus {
            entries: vec![
                single(
                    "bad".into(),
                    MatroidSpec::Uniform {
                        rank: 3,
                        size: 1,
                        multiplicity: None,
                    },
                ),
                single(
                    "good".into(),
                    MatroidSpec::Uniform {
                        rank: 1,
                        size: 1,
                        multiplicity: None,
                    },
                ),
            ],
        };
        let report = verify_all(&corpus, &VerifyOptions::default());
        assert!(!report.pass());
        assert_eq!(report.errors().count(), 1);
        assert_eq!(report.records().count(), 8);
        assert!(report.records().all(|r| r.check.equal()));
    }

    #[test]
    fn sampled_mode_above_threshold() {
        let corpus = Corpus {
            entries: vec![single(
                "u13".into(),
                MatroidSpec::Uniform {
                    rank: 1,
                    size: 3,
                    multiplicity: None,
                },
            )],
        };
        let options = VerifyOptions {
            sample_above: Some(2),
            ..VerifyOptions::default()
        };
        let report = verify_all(&corpus, &options);
        assert!(report.pass());
        assert!(report
            .records()
            .all(|r| matches!(r.check, Check::Sampled(_))));
    }
}
