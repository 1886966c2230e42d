//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use arith_tutte::constructors::{from_integer_matrix, graphic, uniform, MatroidSpec};
use arith_tutte::convolution::{verify_backman_lenz, verify_classical_kook, verify_identity};
use arith_tutte::corpus::Corpus;
use arith_tutte::matroid::{AxiomViolation, MultiplicityMatroid};
use arith_tutte::poly::LaurentPoly;
use arith_tutte::report::IdentityId;
use arith_tutte::subset::Subset;
use arith_tutte::tutte::{
    arithmetic_tutte, characteristic, classical_tutte, multivariate_z, ZVars,
};
use arith_tutte_oracles as oracle;
use num_bigint::BigInt;
use num_traits::One;

const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn first_failure(failures: &[String]) -> String {
    failures.first().cloned().unwrap_or_default()
}

struct Built {
    name: String,
    spec: MatroidSpec,
    m: MultiplicityMatroid,
    partner: Option<MultiplicityMatroid>,
}

fn corpus() -> Vec<Built> {
    Corpus::default_with_seed(SEED)
        .entries
        .into_iter()
        .map(|e| Built {
            m: e.spec.build().expect("corpus entries build"),
            partner: e
                .partner
                .as_ref()
                .map(|p| p.build().expect("partners build")),
            name: e.name,
            spec: e.spec,
        })
        .collect()
}

/// Every matroid in the corpus, pair members included.
fn all_matroids(corpus: &[Built]) -> Vec<(String, &MultiplicityMatroid)> {
    let mut out = Vec::new();
    for b in corpus {
        match &b.partner {
            None => out.push((b.name.clone(), &b.m)),
            Some(p) => {
                out.push((format!("{}/m1", b.name), &b.m));
                out.push((format!("{}/m2", b.name), p));
            }
        }
    }
    out
}

fn matrices(corpus: &[Built]) -> Vec<(&str, &[Vec<BigInt>], &MultiplicityMatroid)> {
    corpus
        .iter()
        .filter_map(|b| match &b.spec {
            MatroidSpec::Matrix { columns } => Some((b.name.as_str(), columns.as_slice(), &b.m)),
            _ => None,
        })
        .collect()
}

fn run_ids(
    ids: &[IdentityId],
    cases: &[(&str, &MultiplicityMatroid, &MultiplicityMatroid)],
    limit: Option<Duration>,
) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checks = 0;
    for &(name, m1, m2) in cases {
        for &id in ids {
            checks += 1;
            match verify_identity(id, m1, m2) {
                Ok(r) if r.equal => {}
                Ok(_) => failures.push(format!("{name} {id} unequal")),
                Err(e) => failures.push(format!("{name} {id}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && limit.is_none_or(|l| elapsed < l);
    let limit = limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
    outcome(
        pass,
        format!(
            "{checks} checks on {} inputs, {} unequal, {:.2}s{limit} {}",
            cases.len(),
            failures.len(),
            elapsed.as_secs_f64(),
            first_failure(&failures)
        ),
    )
}

fn criterion_1(corpus: &[Built]) -> Outcome {
    let singles: Vec<_> = corpus
        .iter()
        .filter(|b| b.partner.is_none())
        .map(|b| (b.name.as_str(), &b.m, &b.m))
        .collect();
    if singles.len() != 21 + 2 + 25 + 10 {
        return outcome(
            false,
            format!("expected 58 single inputs, found {}", singles.len()),
        );
    }
    run_ids(&IdentityId::SINGLE, &singles, Some(Duration::from_secs(60)))
}

fn criterion_2(corpus: &[Built]) -> Outcome {
    let mut pairs = Vec::new();
    for b in corpus {
        let Some(p) = &b.partner else { continue };
        let snf = matches!(b.spec, MatroidSpec::Matrix { .. });
        let random_table = p
            .mult_table()
            .iter()
            .all(|x| *x >= BigInt::one() && *x <= BigInt::from(9));
        if !snf || !random_table || !b.m.same_underlying(p) {
            return outcome(
                false,
                format!("{} is not a matrix/random-table pair", b.name),
            );
        }
        pairs.push((b.name.as_str(), &b.m, p));
    }
    if pairs.len() != 15 {
        return outcome(false, format!("expected 15 pairs, found {}", pairs.len()));
    }
    run_ids(&IdentityId::PRODUCT, &pairs, Some(Duration::from_secs(120)))
}

fn criterion_3(corpus: &[Built]) -> Outcome {
    let all = all_matroids(corpus);
    let cases: Vec<_> = all.iter().map(|(n, m)| (n.as_str(), *m, *m)).collect();
    run_ids(&IdentityId::RELATIONS, &cases, None)
}

fn criterion_4(corpus: &[Built]) -> Outcome {
    let mats = matrices(corpus);
    let failures: Vec<String> = mats
        .iter()
        .filter(|(_, _, m)| !m.check_axioms().all_hold())
        .map(|(name, _, _)| name.to_string())
        .collect();
    let broken = uniform(1, 1)
        .unwrap()
        .with_multiplicity(vec![BigInt::from(2), BigInt::from(3)])
        .unwrap();
    let witness = broken.check_axioms().axiom1;
    let expected = AxiomViolation::Divisibility {
        set: Subset::EMPTY,
        element: 0,
    };
    let broken_ok = witness.as_ref() == Some(&expected);
    outcome(
        failures.is_empty() && broken_ok && mats.len() == 40,
        format!(
            "{} matrix matroids, {} not arithmetic{}; broken U(1,1) axiom (1) witness: {}",
            mats.len(),
            failures.len(),
            failures
                .first()
                .map_or(String::new(), |f| format!(" ({f})")),
            witness.map_or("none".into(), |w| w.to_string())
        ),
    )
}

fn criterion_5(corpus: &[Built]) -> Outcome {
    let mut subsets = 0;
    let mut failures = Vec::new();
    for (name, columns, m) in matrices(corpus) {
        for a in Subset::all(m.size()) {
            subsets += 1;
            let (rank, gcd) = oracle::rank_and_minor_gcd(columns, a.bits());
            if m.mult(a) != &gcd || m.rank(a) != rank {
                failures.push(format!("{name} {a}: {} vs minors {gcd}", m.mult(a)));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{subsets} subsets, {} mismatches {}",
            failures.len(),
            first_failure(&failures)
        ),
    )
}

fn parsed(s: &str) -> LaurentPoly {
    s.parse().expect("valid polynomial text")
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |what: &str, got: LaurentPoly, literal: &str, oracle_text: String| {
        if got != parsed(literal) || got != parsed(&oracle_text) {
            failures.push(format!(
                "{what} = {got}, expected {literal} (oracle {oracle_text})"
            ));
        }
    };
    let columns = vec![vec![BigInt::from(2)]];
    let two = from_integer_matrix(&columns).unwrap();
    let rank = |a: u64| oracle::rank_and_minor_gcd(&columns, a).0;
    let mult = |a: u64| oracle::rank_and_minor_gcd(&columns, a).1;
    check(
        "Z(2)",
        multivariate_z(&two, ZVars::QV),
        "1 + 2*q^-1*v0",
        oracle::z_text(1, rank, mult),
    );
    check(
        "M(2)",
        arithmetic_tutte(&two),
        "x + 1",
        oracle::tutte_text(1, rank, mult),
    );
    check(
        "chi(2)",
        characteristic(&two),
        "l - 2",
        oracle::chi_text(1, rank, mult),
    );

    let edges = [(0, 1), (1, 2), (0, 2)];
    let k3 = graphic(3, &edges).unwrap();
    let rank = |a: u64| oracle::forest_rank(&edges, a);
    let one = |_| BigInt::one();
    check(
        "T(K3)",
        classical_tutte(&k3),
        "x^2 + x + y",
        oracle::tutte_text(3, rank, one),
    );
    check(
        "chi(K3)",
        characteristic(&k3),
        "l^2 - 3*l + 2",
        oracle::chi_text(3, rank, one),
    );
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "Z, M, chi of (2) and T, chi of K3 match literals and subset-sum oracle".into()
        } else {
            failures.join("; ")
        },
    )
}

fn criterion_7(corpus: &[Built]) -> Outcome {
    let mut failures = Vec::new();
    let all = all_matroids(corpus);
    for (name, m) in &all {
        let t = m.trivialized();
        if arithmetic_tutte(&t) != classical_tutte(&t) {
            failures.push(format!("{name}: arithmetic != classical"));
        }
        let bl = verify_backman_lenz(&t, &t).unwrap();
        let kook = verify_classical_kook(&t);
        let same = bl.lhs == kook.lhs
            && bl.rhs_first == kook.rhs_first
            && bl.rhs_second.as_ref() == Some(&kook.rhs_first);
        if !same {
            failures.push(format!("{name}: Backman-Lenz sides differ from Kook"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} matroids, {} failures {}",
            all.len(),
            failures.len(),
            first_failure(&failures)
        ),
    )
}

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_arith-tutte");
    let run = || {
        Command::new(bin)
            .args(["corpus", "--seed", "42", "--json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok =
        a.status.success() && b.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    outcome(
        ok,
        format!(
            "two runs of `corpus --seed 42 --json`: {} and {} bytes, exit {:?}/{:?}, identical: {}",
            a.stdout.len(),
            b.stdout.len(),
            a.status.code(),
            b.status.code(),
            a.stdout == b.stdout
        ),
    )
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "single-matroid identities",
            Box::new(|| criterion_1(&corpus)),
        ),
        ("product identities", Box::new(|| criterion_2(&corpus))),
        ("relation checks", Box::new(|| criterion_3(&corpus))),
        ("axiom validation", Box::new(|| criterion_4(&corpus))),
        (
            "Smith form vs minor gcd oracle",
            Box::new(|| criterion_5(&corpus)),
        ),
        ("pinned values", Box::new(criterion_6)),
        ("specialization collapse", Box::new(|| criterion_7(&corpus))),
        ("determinism", Box::new(criterion_8)),
    ];
    let mut all = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {}: {title}: {}",
            i + 1,
            o.detail.trim_end()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
