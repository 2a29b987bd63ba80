//! Acceptance run over a seeded corpus. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rrclosure::ass::{
    ass_cyclic, ass_ideal_subquotient, ass_rr_sequence_with, ass_successive_rr_with, brodmann_inclusion,
    corollary25_check, eventual_equality_with, grade_positive,
};
use rrclosure::closure::{lemma21_with, rr_ideal, rr_power};
use rrclosure::instance::{gen_corpus, GenParams};
use rrclosure::oracle::{cross_check_resolving, oracle_closure_terms, Status};
use rrclosure::properties::{thm28_suite, SuiteConfig};
use rrclosure::{ChainLimits, Filtration, Instance, ModuleElement, Monomial, MonomialIdeal, QuotientPresentation};

const SEED: u64 = 2024;
const CORPUS: usize = 200;

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

fn filtration(inst: &Instance) -> Filtration {
    Filtration::new(inst.ideal.clone(), inst.presentation(), ChainLimits::default()).expect("corpus ideals are proper")
}

/// Runs `check` on every instance and reports the indices where it fails.
fn over_corpus(corpus: &[Instance], check: impl Fn(&Instance) -> Result<bool, String> + Sync) -> (usize, Vec<String>) {
    let bad: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, inst)| match check(inst) {
            Ok(true) => None,
            Ok(false) => Some(format!("#{i}")),
            Err(e) => Some(format!("#{i} ({e})")),
        })
        .collect();
    (corpus.len(), bad)
}

fn corpus_outcome(label: &str, (n, bad): (usize, Vec<String>)) -> Outcome {
    if bad.is_empty() {
        outcome(true, format!("{label} on {n}/{n} instances"))
    } else {
        outcome(
            false,
            format!("{} of {n} instances fail: {}", bad.len(), bad.join(", ")),
        )
    }
}

fn lemma21(corpus: &[Instance]) -> Outcome {
    let r = over_corpus(corpus, |inst| {
        let mut filt = filtration(inst);
        let mut ring = Filtration::new(
            inst.ideal.clone(),
            QuotientPresentation::ring(inst.dim()),
            ChainLimits::default(),
        )
        .map_err(|e| e.to_string())?;
        for n in 1..=5 {
            for m in 1..=n {
                let rep = lemma21_with(&mut filt, &mut ring, n, m).map_err(|e| e.to_string())?;
                if !rep.all_equal() {
                    return Err(format!("n = {n}, m = {m}"));
                }
            }
        }
        Ok(true)
    });
    corpus_outcome("three-way equality for all 1 <= m <= n <= 5", r)
}

fn rr_increasing(corpus: &[Instance]) -> Outcome {
    let r = over_corpus(corpus, |inst| {
        Ok(ass_rr_sequence_with(&mut filtration(inst), 6)
            .map_err(|e| e.to_string())?
            .increasing)
    });
    corpus_outcome("Ass(E / closure of I^n E) increasing for n <= 6", r)
}

fn successive_increasing(corpus: &[Instance]) -> Outcome {
    let degenerate = std::sync::atomic::AtomicUsize::new(0);
    let r = over_corpus(corpus, |inst| {
        let rep = ass_successive_rr_with(&mut filtration(inst), 6).map_err(|e| e.to_string())?;
        degenerate.fetch_add(rep.degenerate.len(), std::sync::atomic::Ordering::Relaxed);
        Ok(rep.increasing)
    });
    let mut o = corpus_outcome("successive-quotient Ass increasing for n <= 6", r);
    o.detail += &format!(" ({} degenerate indices excluded)", degenerate.into_inner());
    o
}

fn stable_equality(corpus: &[Instance]) -> Outcome {
    let ideals: BTreeSet<MonomialIdeal> = corpus.iter().map(|i| i.ideal.clone()).collect();
    let ideals: Vec<MonomialIdeal> = ideals.into_iter().take(60).collect();
    let bad: Vec<String> = ideals
        .par_iter()
        .filter_map(|ideal| {
            let ring = QuotientPresentation::ring(ideal.dim());
            match corollary25_check(ideal, &ring, 6, ChainLimits::default()) {
                Ok(r) if r.n0.is_some() => None,
                Ok(_) => Some(format!("{ideal:?}")),
                Err(e) => Some(format!("{ideal:?} ({e})")),
            }
        })
        .collect();
    let n = ideals.len();
    outcome(
        bad.is_empty() && n >= 50,
        if bad.is_empty() {
            format!("n0 <= 6 found on {n}/{n} rank-1 instances with E = R")
        } else {
            format!("no n0 on {} of {n}: {}", bad.len(), bad.join(", "))
        },
    )
}

fn brodmann(corpus: &[Instance]) -> Outcome {
    let r = over_corpus(corpus, |inst| {
        Ok(brodmann_inclusion(&mut filtration(inst), 6)
            .map_err(|e| e.to_string())?
            .included)
    });
    corpus_outcome("Ass(E / closure of I^n E) within Ass(E / I^{n+s} E)", r)
}

fn reduction_suite() -> Outcome {
    match thm28_suite(SuiteConfig::default(), SEED) {
        Ok(rep) => {
            let parts: Vec<String> = rep
                .items
                .iter()
                .map(|i| {
                    let mut s = format!("{} {}/{}", i.item.label(), i.checked, rep.required);
                    if let Some(c) = &i.counterexample {
                        s += &format!(" COUNTEREXAMPLE {}:\n{}", c.reason, c.instance);
                    }
                    s
                })
                .collect();
            outcome(rep.passed(), parts.join("; "))
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn eventual_equality(corpus: &[Instance]) -> Outcome {
    let applicable: Vec<Instance> = corpus
        .iter()
        .filter(|i| grade_positive(&i.ideal, &i.presentation()).unwrap_or(false))
        .cloned()
        .collect();
    let r = over_corpus(&applicable, |inst| {
        Ok(eventual_equality_with(&mut filtration(inst), 10)
            .map_err(|e| e.to_string())?
            .n0
            .is_some())
    });
    let mut o = corpus_outcome("closure of I^n E = I^n E on [n0, 10]", r);
    o.detail += &format!(
        " ({} of {} corpus instances have positive grade)",
        applicable.len(),
        corpus.len()
    );
    o
}

fn classic_closure() -> Outcome {
    let i = MonomialIdeal::from_exponents(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
    let want = MonomialIdeal::from_exponents(&[[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]]);
    let r = match rr_ideal(&i, ChainLimits::default()) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let structural = r.value.coord(0) == &want && r.certified;
    let ring = QuotientPresentation::ring(2);
    let terms = match oracle_closure_terms(&i, &ring.full(), ring.relations(), 12, 5) {
        Ok(t) => t,
        Err(e) => return outcome(false, e.to_string()),
    };
    let t1 = &terms[0];
    let member = t1.contains(&ModuleElement::new(0, Monomial::new([2, 2]))) == Some(true);
    let gens = t1.generators_within_range().map(|g| g.coord(0).clone());
    let gens_ok = gens.as_ref() == Some(&want) && t1.valid_through() >= Some(want.max_generator_degree());
    outcome(
        structural && member && gens_ok,
        format!(
            "structural {:?} (certified {}), oracle x^2y^2 in (I^2 : I): {member}, oracle generators through degree {:?}: {:?}",
            r.value.coord(0),
            r.certified,
            t1.valid_through(),
            gens
        ),
    )
}

fn oracle_equivalence(corpus: &[Instance]) -> Outcome {
    let results: Vec<(usize, Result<rrclosure::oracle::CrossCheckReport, String>)> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, inst)| (i, cross_check_resolving(inst, 12, 6, 200).map_err(|e| e.to_string())))
        .collect();
    let mut compared = 0;
    let mut raised = 0;
    let mut bad = Vec::new();
    for (i, r) in results {
        match r {
            Ok(rep) => {
                compared += rep.comparisons.len();
                raised += rep.comparisons.iter().filter(|c| c.degree > 12).count();
                for c in &rep.comparisons {
                    match &c.status {
                        Status::Agree => {}
                        Status::Mismatch(m) => bad.push(format!("#{i} {}: {m}", c.label)),
                        Status::Inconclusive => {
                            bad.push(format!("#{i} {}: inconclusive (needs D = {})", c.label, c.needed))
                        }
                    }
                }
                if let Some(rep) = rep.reproducer {
                    bad.push(format!("reproducer:\n{rep}"));
                }
            }
            Err(e) => bad.push(format!("#{i}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{compared} comparisons agree ({raised} resolved at raised D)")
        } else {
            bad.join("; ")
        },
    )
}

fn dual_ass(corpus: &[Instance]) -> Outcome {
    let mut quotients: BTreeSet<MonomialIdeal> = BTreeSet::new();
    for inst in corpus {
        quotients.insert(inst.ideal.clone());
        quotients.extend(inst.relations.coords().iter().cloned());
        for n in 1..=2 {
            if let Ok(r) = rr_power(&inst.ideal, n, &inst.presentation(), ChainLimits::default()) {
                quotients.extend(r.value.coords().iter().cloned());
            }
        }
    }
    let quotients: Vec<MonomialIdeal> = quotients.into_iter().filter(|q| !q.is_unit()).collect();
    let bad: Vec<String> = quotients
        .par_iter()
        .filter_map(|v| {
            let unit = MonomialIdeal::unit(v.dim());
            match (ass_cyclic(v), ass_ideal_subquotient(&unit, v)) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!("{v:?}: {a:?} vs {b:?}")),
            }
        })
        .collect();
    let n = quotients.len();
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("decomposition and colon search agree on {n}/{n} cyclic quotients")
        } else {
            bad.join("; ")
        },
    )
}

fn main() -> ExitCode {
    let params = GenParams::default();
    let corpus = gen_corpus(SEED, CORPUS, params).expect("valid parameters");
    println!(
        "corpus: {} instances, seed {SEED}, d <= {}, rank <= {}, <= {} generators, exponents <= {}",
        corpus.len(),
        params.max_dim,
        params.max_rank,
        params.max_gens,
        params.max_exp
    );
    type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "1 colon identity for closures of powers",
            Duration::from_secs(120),
            Box::new(|| lemma21(&corpus)),
        ),
        (
            "2 Ass of closure quotients increasing",
            Duration::from_secs(180),
            Box::new(|| rr_increasing(&corpus)),
        ),
        (
            "3 Ass of successive quotients increasing",
            Duration::from_secs(180),
            Box::new(|| successive_increasing(&corpus)),
        ),
        (
            "4 stable equality of the two prime sequences",
            Duration::MAX,
            Box::new(|| stable_equality(&corpus)),
        ),
        (
            "5 inclusion of the stable prime sets",
            Duration::MAX,
            Box::new(|| brodmann(&corpus)),
        ),
        (
            "6 reduction properties (i)-(vii)",
            Duration::MAX,
            Box::new(reduction_suite),
        ),
        (
            "7 closure equals power eventually",
            Duration::MAX,
            Box::new(|| eventual_equality(&corpus)),
        ),
        ("8 classic closure value", Duration::MAX, Box::new(classic_closure)),
        (
            "9 oracle equivalence at D = 12",
            Duration::from_secs(600),
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        ("10 dual Ass agreement", Duration::MAX, Box::new(|| dual_ass(&corpus))),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if took > budget {
            o.pass = false;
            o.detail += &format!(" (over the {budget:?} budget)");
        }
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} [{name}] {} ({:.2}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
