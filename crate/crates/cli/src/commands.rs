//! One function per subcommand, each filling a [`Report`].

use anyhow::{anyhow, bail, Context};
use rrclosure::ass::{
    ass_power_sequence, ass_rr_sequence, ass_successive_rr, corollary25_check, eventual_equality_check, grade_positive,
    AssSequenceReport,
};
use rrclosure::closure::{lemma21_with, rr_power};
use rrclosure::instance::{gen_corpus, GenParams};
use rrclosure::oracle::{cross_check_resolving, Status};
use rrclosure::properties::{thm28_suite, SuiteConfig};
use rrclosure::reduction::{is_rr_reduction, uniform_reduction_index};
use rrclosure::{Filtration, Instance, QuotientPresentation};
use serde_json::{json, Value};

use crate::report::{element_text, generators, primes_json, primes_text, Report};
use crate::Opts;

const DEFAULT_PROPS_SEED: u64 = 2024;

pub fn dispatch(name: &'static str, inst: &Instance, text: String, opts: &Opts) -> anyhow::Result<Report> {
    let mut r = Report::new(name, Some(text));
    match name {
        "closure" => closure(&mut r, inst, opts)?,
        "ass-seq" | "power-seq" | "quotient-seq" => sequence(&mut r, inst, opts)?,
        "lemma21" => lemma21(&mut r, inst, opts)?,
        "reduction" => reduction(&mut r, inst, opts)?,
        "grade" => grade(&mut r, inst)?,
        "cor25" => cor25(&mut r, inst, opts)?,
        "eventual-eq" => eventual_eq(&mut r, inst, opts)?,
        "verify" => verify(&mut r, inst, opts)?,
        _ => bail!("unknown command {name}"),
    }
    Ok(r)
}

fn closure(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let n = opts.n.unwrap_or(1);
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let limits = opts.limits()?;
    r.param("n", n);
    r.param("window", limits.window);
    r.param("cap", limits.cap);
    let res = rr_power(&inst.ideal, n, &inst.presentation(), limits)?;
    let names = &inst.vars;
    let gens = generators(&res.value, names);
    let power = generators(&inst.presentation().power_scale_preimage(&inst.ideal, n)?, names);
    let chain: Vec<Value> = res.chain.iter().map(|t| json!(generators(t, names))).collect();
    r.results = json!([{ "n": n, "generators": gens, "power": power, "chain": chain }]);
    r.flags.stabilization_candidate = res.stabilized_at;
    r.flags.certified = Some(res.certified);
    r.extra("stabilized_at", res.stabilized_at);
    r.line(format!("closure of I^{n} E: {}", res.value.display_with(names)));
    r.line(format!("generators: {}", gens.join(", ")));
    r.line(format!("I^{n} E + N: {}", power.join(", ")));
    r.line(format!("chain length: {}", res.chain.len()));
    r.csv.push(vec!["n".into(), "generator".into()]);
    for g in gens {
        r.csv.push(vec![n.to_string(), g]);
    }
    Ok(())
}

fn sequence(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let limits = opts.limits()?;
    let pres = inst.presentation();
    r.param("nmax", opts.nmax);
    r.param("window", limits.window);
    let report = match r.command {
        "ass-seq" => {
            r.param("cap", limits.cap);
            ass_rr_sequence(&inst.ideal, &pres, opts.nmax, limits)?
        }
        "quotient-seq" => {
            r.param("cap", limits.cap);
            ass_successive_rr(&inst.ideal, &pres, opts.nmax, limits)?
        }
        _ => ass_power_sequence(&inst.ideal, &pres, opts.nmax, limits.window)?,
    };
    fill_sequence(r, &report, &inst.vars);
    if r.command != "power-seq" && !report.increasing {
        r.fail("the prime sequence is not increasing");
    }
    Ok(())
}

fn fill_sequence(r: &mut Report, report: &AssSequenceReport, names: &[String]) {
    r.results = Value::Array(report.per_n.iter().map(|s| primes_json(s, names)).collect());
    r.flags.increasing = Some(report.increasing);
    r.flags.stabilization_candidate = report.stabilization_candidate;
    r.flags.certified = Some(report.certified);
    r.extra("n0", report.stabilization_candidate);
    r.extra("degenerate", report.degenerate.clone());
    r.csv.push(vec!["n".into(), "primes".into(), "degenerate".into()]);
    for (i, s) in report.per_n.iter().enumerate() {
        let n = i as u32 + 1;
        let degenerate = report.degenerate.contains(&n);
        let mark = if degenerate { "  (degenerate)" } else { "" };
        r.line(format!("n = {n}: {}{mark}", primes_text(s, names)));
        r.csv
            .push(vec![n.to_string(), primes_text(s, names), degenerate.to_string()]);
    }
    r.line(format!("stable set: {}", primes_text(&report.stable_set, names)));
}

fn lemma21(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let limits = opts.limits()?;
    let pairs: Vec<(u32, u32)> = match (opts.n, opts.m) {
        (Some(n), Some(m)) => vec![(n, m)],
        (Some(n), None) => (1..=n).map(|m| (n, m)).collect(),
        (None, Some(m)) => (m.max(1)..=opts.nmax.max(m)).map(|n| (n, m)).collect(),
        (None, None) => (1..=opts.nmax).flat_map(|n| (1..=n).map(move |m| (n, m))).collect(),
    };
    r.param(
        "pairs",
        pairs
            .iter()
            .map(|&(n, m)| json!({ "n": n, "m": m }))
            .collect::<Vec<_>>(),
    );
    r.param("window", limits.window);
    r.param("cap", limits.cap);
    let mut filt = Filtration::new(inst.ideal.clone(), inst.presentation(), limits)?;
    let mut ring = Filtration::new(inst.ideal.clone(), QuotientPresentation::ring(inst.dim()), limits)?;
    let mut rows = Vec::new();
    let mut certified = true;
    r.csv.push(
        [
            "n",
            "m",
            "closure_eq_power",
            "power_eq_shifted",
            "closure_eq_shifted",
            "certified",
        ]
        .map(String::from)
        .to_vec(),
    );
    for (n, m) in pairs {
        let rep = lemma21_with(&mut filt, &mut ring, n, m)?;
        certified &= rep.certified;
        rows.push(json!({
            "n": n,
            "m": m,
            "closure_eq_power": rep.closure_eq_power,
            "power_eq_shifted": rep.power_eq_shifted,
            "closure_eq_shifted": rep.closure_eq_shifted,
            "certified": rep.certified,
        }));
        r.line(format!(
            "n = {n}, m = {m}: {}",
            if rep.all_equal() { "equal" } else { "DIFFERENT" }
        ));
        r.csv.push(vec![
            n.to_string(),
            m.to_string(),
            rep.closure_eq_power.to_string(),
            rep.power_eq_shifted.to_string(),
            rep.closure_eq_shifted.to_string(),
            rep.certified.to_string(),
        ]);
        if !rep.all_equal() {
            r.fail(format!("the three colon sides differ at n = {n}, m = {m}"));
        }
    }
    r.results = Value::Array(rows);
    r.flags.certified = Some(certified);
    Ok(())
}

fn reduction(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let limits = opts.limits()?;
    let n1 = inst
        .submodule("N1")
        .ok_or_else(|| anyhow!("the instance declares no submodule N1"))?;
    let n2 = inst
        .submodule("N2")
        .ok_or_else(|| anyhow!("the instance declares no submodule N2"))?;
    let pres = inst.presentation();
    r.param("window", limits.window);
    r.param("cap", limits.cap);
    let v = is_rr_reduction(n1, n2, &inst.ideal, &pres, limits)?;
    let s = uniform_reduction_index(n1, n2, &inst.ideal, &pres, limits.cap)?;
    let counter = v
        .counterexample
        .as_ref()
        .map(|e| element_text(e, inst.rank(), &inst.vars));
    r.results = json!([{
        "holds": v.holds,
        "witness_index": v.witness_index,
        "uniform_index": s,
        "counterexample": counter,
    }]);
    r.flags.certified = Some(v.certified);
    r.line(format!("N1 is a reduction of N2: {}", v.holds));
    if let Some(k) = v.witness_index {
        r.line(format!("witness index: {k}"));
    }
    r.line(format!(
        "uniform index: {}",
        s.map_or(format!("none up to {}", limits.cap), |s| s.to_string())
    ));
    if let Some(c) = &counter {
        r.line(format!("counterexample: {c}"));
    }
    r.csv.push(
        ["holds", "witness_index", "uniform_index", "counterexample", "certified"]
            .map(String::from)
            .to_vec(),
    );
    r.csv.push(vec![
        v.holds.to_string(),
        v.witness_index.map_or(String::new(), |k| k.to_string()),
        s.map_or(String::new(), |k| k.to_string()),
        counter.unwrap_or_default(),
        v.certified.to_string(),
    ]);
    Ok(())
}

fn grade(r: &mut Report, inst: &Instance) -> anyhow::Result<()> {
    let g = grade_positive(&inst.ideal, &inst.presentation())?;
    r.results = json!([{ "grade_positive": g }]);
    r.flags.certified = Some(true);
    r.line(format!("grade(I, E) > 0: {g}"));
    r.csv.push(vec!["grade_positive".into()]);
    r.csv.push(vec![g.to_string()]);
    Ok(())
}

fn cor25(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let limits = opts.limits()?;
    r.param("nmax", opts.nmax);
    r.param("window", limits.window);
    r.param("cap", limits.cap);
    let rep = corollary25_check(&inst.ideal, &inst.presentation(), opts.nmax, limits)?;
    let names = &inst.vars;
    let rows: Vec<Value> = rep
        .quotient
        .per_n
        .iter()
        .zip(&rep.successive.per_n)
        .zip(&rep.equal)
        .enumerate()
        .map(|(i, ((q, s), e))| json!({ "n": i + 1, "quotient": primes_json(q, names), "successive": primes_json(s, names), "equal": e }))
        .collect();
    r.results = Value::Array(rows);
    r.flags.increasing = Some(rep.quotient.increasing && rep.successive.increasing);
    r.flags.stabilization_candidate = rep.n0;
    r.flags.certified = Some(rep.quotient.certified);
    r.extra("n0", rep.n0);
    r.csv
        .push(["n", "quotient", "successive", "equal"].map(String::from).to_vec());
    for (i, ((q, s), e)) in rep
        .quotient
        .per_n
        .iter()
        .zip(&rep.successive.per_n)
        .zip(&rep.equal)
        .enumerate()
    {
        let n = i + 1;
        r.line(format!(
            "n = {n}: {} | {} | {}",
            primes_text(q, names),
            primes_text(s, names),
            if *e { "equal" } else { "differ" }
        ));
        r.csv.push(vec![
            n.to_string(),
            primes_text(q, names),
            primes_text(s, names),
            e.to_string(),
        ]);
    }
    if rep.n0.is_none() {
        r.fail(format!(
            "the two sequences do not agree on a final segment up to n = {}",
            opts.nmax
        ));
    }
    Ok(())
}

fn eventual_eq(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let limits = opts.limits()?;
    r.param("nmax", opts.nmax);
    r.param("window", limits.window);
    r.param("cap", limits.cap);
    let rep = eventual_equality_check(&inst.ideal, &inst.presentation(), opts.nmax, limits)?;
    r.results = Value::Array(
        rep.equal
            .iter()
            .enumerate()
            .map(|(i, e)| json!({ "n": i + 1, "equal": e }))
            .collect(),
    );
    r.flags.stabilization_candidate = rep.n0;
    r.flags.certified = Some(rep.certified);
    r.extra("n0", rep.n0);
    r.csv.push(vec!["n".into(), "equal".into()]);
    for (i, e) in rep.equal.iter().enumerate() {
        r.line(format!("n = {}: closure {} power", i + 1, if *e { "=" } else { "!=" }));
        r.csv.push(vec![(i + 1).to_string(), e.to_string()]);
    }
    r.line(format!("n0: {}", rep.n0.map_or("none".to_string(), |n| n.to_string())));
    if rep.n0.is_none() {
        r.fail(format!("closure and power still differ at n = {}", opts.nmax));
    }
    Ok(())
}

fn verify(r: &mut Report, inst: &Instance, opts: &Opts) -> anyhow::Result<()> {
    let degree = opts.truncation_degree;
    let max_degree = opts.max_degree.unwrap_or(degree).max(degree);
    r.param("truncation_degree", degree);
    r.param("max_degree", max_degree);
    r.param("kmax", opts.kmax);
    let rep = cross_check_resolving(inst, degree, opts.kmax, max_degree)?;
    let mut rows = Vec::new();
    r.csv.push(
        ["label", "degree", "valid_through", "needed", "status"]
            .map(String::from)
            .to_vec(),
    );
    for c in &rep.comparisons {
        let status = match &c.status {
            Status::Agree => "agree".to_string(),
            Status::Inconclusive => "inconclusive".to_string(),
            Status::Mismatch(m) => format!("mismatch: {m}"),
        };
        rows.push(json!({
            "label": c.label,
            "degree": c.degree,
            "valid_through": c.valid_through,
            "needed": c.needed,
            "status": status,
        }));
        r.line(format!("{}: {status} (D = {})", c.label, c.degree));
        r.csv.push(vec![
            c.label.clone(),
            c.degree.to_string(),
            c.valid_through.map_or(String::new(), |v| v.to_string()),
            c.needed.to_string(),
            status,
        ]);
    }
    r.results = Value::Array(rows);
    let mismatches = rep.mismatches().count();
    let inconclusive: Vec<&str> = rep.inconclusive().map(|c| c.label.as_str()).collect();
    r.flags.certified = Some(rep.all_agree());
    r.extra("reproducer", rep.reproducer.as_ref().map(|i| i.to_text()));
    if let Some(rep) = &rep.reproducer {
        r.line("reproducer:");
        r.line(rep.to_text().trim_end().to_string());
    }
    if mismatches > 0 {
        r.fail(format!("{mismatches} comparison(s) disagree with the oracle"));
    } else if !inconclusive.is_empty() {
        r.fail(format!(
            "inconclusive at D <= {max_degree}: {} (raise --max-degree)",
            inconclusive.join("; ")
        ));
    }
    Ok(())
}

pub fn props(opts: &Opts) -> anyhow::Result<Report> {
    let seed = opts.seed.unwrap_or(DEFAULT_PROPS_SEED);
    let config = SuiteConfig {
        samples: opts.count.unwrap_or(SuiteConfig::default().samples),
        limits: opts.limits()?,
        ..SuiteConfig::default()
    };
    let mut r = Report::new("props", None);
    r.param("seed", seed);
    r.param("samples", config.samples);
    let rep = thm28_suite(config, seed)?;
    let mut rows = Vec::new();
    r.csv.push(
        ["item", "checked", "strict", "attempts", "passed"]
            .map(String::from)
            .to_vec(),
    );
    for item in &rep.items {
        let passed = item.passed(rep.required);
        let counter = item
            .counterexample
            .as_ref()
            .map(|c| json!({ "reason": c.reason, "instance": c.instance.to_text() }));
        rows.push(json!({
            "item": item.item.label(),
            "checked": item.checked,
            "strict": item.strict,
            "attempts": item.attempts,
            "passed": passed,
            "counterexample": counter,
        }));
        r.line(format!(
            "{}: {} ({} checked, {} strict)",
            item.item.label(),
            if passed { "PASS" } else { "FAIL" },
            item.checked,
            item.strict
        ));
        if let Some(c) = &item.counterexample {
            r.line(format!("  {}", c.reason));
            for l in c.instance.to_text().lines() {
                r.line(format!("  {l}"));
            }
        }
        r.csv.push(vec![
            item.item.label().to_string(),
            item.checked.to_string(),
            item.strict.to_string(),
            item.attempts.to_string(),
            passed.to_string(),
        ]);
        if !passed {
            r.fail(format!("{} failed", item.item.label()));
        }
    }
    r.results = Value::Array(rows);
    Ok(r)
}

pub fn gen(opts: &Opts) -> anyhow::Result<()> {
    let seed = opts.seed.unwrap_or(0);
    let count = opts.count.unwrap_or(1);
    let params = GenParams {
        max_dim: opts.max_dim,
        max_rank: opts.max_rank,
        max_gens: opts.max_gens,
        max_exp: opts.max_exp,
    };
    let corpus = gen_corpus(seed, count, params).map_err(|e| anyhow!(e))?;
    match &opts.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            for (i, inst) in corpus.iter().enumerate() {
                let path = dir.join(format!("instance_{i:03}.txt"));
                std::fs::write(&path, inst.to_text()).with_context(|| format!("writing {}", path.display()))?;
            }
        }
        None => {
            for (i, inst) in corpus.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("# instance {i}");
                print!("{}", inst.to_text());
            }
        }
    }
    Ok(())
}
