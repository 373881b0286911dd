//! `g2skein`: evaluate, verify, derive, enumerate and tabulate from the shell.
//!
//! Exit codes: 0 success, 1 failed check or other error, 2 parse error,
//! 3 incomplete or invalid rule set, 4 pole at a specialization.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use g2skein::acceptance::{self, move_corpus, PRINTED_DIMENSIONS};
use g2skein::confluence::{
    assignment_table, derive_a1, derive_crossing_coefficients, derive_face_coefficients,
    double_pentagon_discrepancy, g2_value, generate_adjacency_equations, generate_move_equations,
    verify_move_equations, verify_theorem1, ReferenceCheck, Sym,
};
use g2skein::enumerate::{
    berele, count_c2_lattice_paths, enumerate_matchings, sixpoint_filter, FreewaySkeleton,
    WebClass, WebGenerator,
};
use g2skein::planar::{parse_with_header, serialize_inline};
use g2skein::repdim::{dim_inv_a2, dim_inv_c2, dim_inv_g2, verify_coefficient_identities};
use g2skein::skein::{resolve_ruleset, Reducer, RuleSet, Strategy};
use g2skein::{Error, Scalar};

#[derive(Parser)]
#[command(
    name = "g2skein",
    version,
    about = "Exact G2 and A1 skein brackets and their verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the bracket of a closed diagram file (`-` for stdin).
    Eval {
        file: PathBuf,
        /// Built-in name (g2, a1), rule-file path, or a name searched on
        /// SKEIN_RULE_PATH; defaults to the file's `ruleset` header, then g2.
        #[arg(long)]
        ruleset: Option<String>,
        /// Specialize at a rational value, e.g. `q=2` or `q=3/2`.
        #[arg(long, value_name = "q=r")]
        at: Option<String>,
        /// Report how much rewriting the reduction did.
        #[arg(long)]
        report_moves: bool,
        /// Face choice: `smallest` or `random:SEED`.
        #[arg(long, default_value = "smallest")]
        strategy: String,
    },
    /// Run a verification suite; exits nonzero naming the first failed check.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest boundary size for the conjectures suite.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Derive coefficient tables from the consistency equations.
    Derive {
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Enumerate diagrams, matchings or lattice paths.
    Enum {
        /// Number of boundary points (path length for `paths`).
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Keep only matchings satisfying the 6-point condition.
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
    },
    /// Invariant-space dimensions of tensor powers for G2, A2 and C2.
    Dims {
        #[arg(long, default_value_t = 9)]
        max_n: u32,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Equations,
    Conjectures,
    Moves,
    Identities,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    G2,
    G2Crossing,
    A1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Acyclic,
    Nonpos,
    Matchings,
    Paths,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    Sixpoint,
}

/// Output of a subcommand: both renderings, and whether its checks passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::RuleIncomplete(_) | Error::RuleSet(_) => 3,
        Error::Pole(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            file,
            ruleset,
            at,
            report_moves,
            strategy,
        } => eval(
            &file,
            ruleset.as_deref(),
            at.as_deref(),
            report_moves,
            &strategy,
        ),
        Command::Verify { suite, max_n } => verify(suite, max_n),
        Command::Derive { target } => derive(target),
        Command::Enum {
            n,
            kind,
            filter,
            count_only,
        } => enumerate(n, kind, filter, count_only),
        Command::Dims { max_n } => Ok(dims(max_n)),
        Command::Selftest => Ok(selftest()),
    };
    match result {
        Ok(r) => {
            match cli.format {
                Format::Text => print!("{}", r.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&r.json).expect("reports serialize")
                ),
            }
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => {
                    println!("{}", json!({ "error": e.to_string(), "exit_code": code }))
                }
            }
            ExitCode::from(code)
        }
    }
}

fn rule_search_path() -> Vec<PathBuf> {
    std::env::var_os("SKEIN_RULE_PATH")
        .map(|p| std::env::split_paths(&p).collect())
        .unwrap_or_default()
}

fn parse_strategy(s: &str) -> g2skein::Result<Strategy> {
    match s.split_once(':') {
        None if s == "smallest" => Ok(Strategy::Smallest),
        Some(("random", seed)) => seed
            .parse()
            .map(Strategy::Random)
            .map_err(|_| Error::Domain(format!("bad seed {seed:?}"))),
        _ => Err(Error::Domain(format!(
            "unknown strategy {s:?}; expected smallest or random:SEED"
        ))),
    }
}

fn parse_at(s: &str) -> g2skein::Result<BigRational> {
    let r = s.trim().strip_prefix("q=").unwrap_or(s).trim();
    r.parse().map_err(|_| {
        Error::Domain(format!(
            "bad specialization {s:?}; expected q=r with r rational"
        ))
    })
}

fn eval(
    file: &PathBuf,
    ruleset: Option<&str>,
    at: Option<&str>,
    report_moves: bool,
    strategy: &str,
) -> g2skein::Result<Report> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file)?
    };
    let (header, d) = parse_with_header(&text)?;
    let rs = resolve_ruleset(
        ruleset.or(header.as_deref()).unwrap_or("g2"),
        &rule_search_path(),
    )?;
    let strategy = parse_strategy(strategy)?;
    let point = at.map(parse_at).transpose()?;
    let calc = rs.calculus();
    let mut reducer = Reducer::new(&calc, strategy);
    let v = reducer.closed(&d)?;
    let mut out = format!("{v}\n");
    let mut j = json!({ "ruleset": rs.name, "value": v.to_string() });
    if let Some(p) = point {
        let x = v.eval_at(&p)?;
        out.push_str(&format!("at q = {p}: {x}\n"));
        j["at"] = json!({ "q": p.to_string(), "value": x.to_string() });
    }
    if report_moves {
        let s = reducer.stats();
        out.push_str(&format!(
            "crossings expanded: {}\ncrossingless states: {}\nface rewrites by size (1..5): {:?}\nmemo hits: {}\n",
            s.crossings_expanded,
            s.crossing_states,
            &s.face_rewrites[1..],
            s.memo_hits
        ));
        j["moves"] = serde_json::to_value(s)?;
    }
    Ok(Report::ok(out, j))
}

/// Counts of reproduced and zero-residual checks.
fn tally(checks: &[ReferenceCheck]) -> (usize, usize) {
    (
        checks.iter().filter(|c| c.reproduced_by.is_some()).count(),
        checks.iter().filter(|c| c.residual == "0").count(),
    )
}

fn verify(suite: Suite, max_n: usize) -> g2skein::Result<Report> {
    match suite {
        Suite::Equations => verify_equations(),
        Suite::Moves => verify_moves(),
        Suite::Identities => verify_identities(),
        Suite::Conjectures => verify_conjectures(max_n),
    }
}

/// Collects named checks; the first failure is reported.
#[derive(Default)]
struct Checks {
    lines: Vec<String>,
    failed: Option<String>,
}

impl Checks {
    fn check(&mut self, name: &str, pass: bool, detail: String) {
        self.lines.push(format!(
            "[{}] {name}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        ));
        if !pass && self.failed.is_none() {
            self.failed = Some(name.to_string());
        }
    }

    fn into_report(self, mut json: Value) -> Report {
        let mut text = self.lines.join("\n");
        text.push('\n');
        if let Some(f) = &self.failed {
            text.push_str(&format!("first failing check: {f}\n"));
        }
        json["checks"] = json!(self.lines);
        json["first_failure"] = json!(self.failed);
        json["ok"] = json!(self.failed.is_none());
        Report {
            text,
            json,
            ok: self.failed.is_none(),
        }
    }
}

fn verify_equations() -> g2skein::Result<Report> {
    let groups = generate_adjacency_equations()?;
    let r = verify_theorem1(&groups);
    let faces = derive_face_coefficients(&groups)?;
    let crossing = derive_crossing_coefficients(&faces)?;
    let assignment = assignment_table(&RuleSet::g2())?;
    let mut c = Checks::default();
    let (rep, zero) = tally(&r.face_equations);
    let n = r.face_equations.len();
    c.check(
        "numbered equations",
        rep == n && zero == n,
        format!("{rep}/{n} printed equations reproduced, {zero}/{n} vanish at the rule values"),
    );
    let (rep, zero) = tally(&r.triangle_pentagon);
    let n = r.triangle_pentagon.len();
    c.check(
        "unlabeled adjacency equations",
        rep == n && zero == n,
        format!("{rep}/{n} reproduced, {zero}/{n} vanish"),
    );
    let pp = &r.pentagon_pentagon;
    let holds = pp.iter().filter(|x| x.residual == "0").count();
    c.check(
        "pentagon-pentagon",
        pp.len() == 2 && holds == 1 && pp[0].residual == "0",
        format!(
            "{holds} holds, {} fails as expected (\"{}\" has residual {})",
            pp.len() - holds,
            pp[1].reference,
            pp[1].residual
        ),
    );
    c.check(
        "other generated equations",
        r.non_pentagon_pairs_hold(),
        format!(
            "{} generated equations outside the pentagon pair vanish; {} not among the printed ones",
            r.residuals.iter().filter(|x| x.source != "5-5").count(),
            r.additional.len()
        ),
    );
    let matches = faces
        .values
        .iter()
        .all(|(k, v)| Sym::from_name(k).map(g2_value).as_ref() == Some(v));
    c.check(
        "face derivation",
        faces.consistent && matches,
        "values equal the built-in rule set".into(),
    );
    let cross_ok = [
        (Sym::F1, &crossing.f1),
        (Sym::F2, &crossing.f2),
        (Sym::G1, &crossing.g1),
        (Sym::G2, &crossing.g2),
    ]
    .iter()
    .all(|(s, v)| g2_value(*s) == **v);
    c.check(
        "crossing derivation",
        cross_ok,
        format!("assignment A,B,C,D = {}", crossing.assignment.join(",")),
    );
    let pinned = assignment
        .iter()
        .filter(|r| r.rule == "crossing")
        .map(|r| r.symbol.as_str())
        .collect::<Vec<_>>();
    c.check(
        "assignment table",
        pinned
            == crossing
                .assignment
                .iter()
                .map(String::as_str)
                .collect::<Vec<_>>(),
        assignment
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", "),
    );
    Ok(c.into_report(json!({
        "suite": "equations",
        "report": serde_json::to_value(&r)?,
        "faces": serde_json::to_value(&faces)?,
        "crossing": serde_json::to_value(&crossing)?,
        "assignment": assignment,
    })))
}

fn verify_moves() -> g2skein::Result<Report> {
    let groups = generate_move_equations()?;
    let (r2, slide) = verify_move_equations(&groups);
    let mut c = Checks::default();
    for (name, checks) in [("R2 equations", &r2), ("vertex-slide equations", &slide)] {
        let (rep, zero) = tally(checks);
        let unreproduced: Vec<&str> = checks
            .iter()
            .filter(|x| x.reproduced_by.is_none())
            .map(|x| x.reference.as_str())
            .collect();
        // A printed equation that is not generated is flagged, not failed;
        // every generated one must vanish.
        let reproduced_vanish = checks
            .iter()
            .filter(|x| x.reproduced_by.is_some())
            .all(|x| x.residual == "0");
        c.check(
            name,
            reproduced_vanish,
            format!(
                "{rep}/{} reproduced, {zero}/{} vanish at the rule values{}",
                checks.len(),
                checks.len(),
                if unreproduced.is_empty() {
                    String::new()
                } else {
                    format!("; flagged: {unreproduced:?}")
                }
            ),
        );
    }
    let val = |s: Sym| g2_value(s);
    let total: usize = groups.iter().map(|g| g.equations.len()).sum();
    let vanish = groups
        .iter()
        .flat_map(|g| &g.equations)
        .filter(|e| e.eval(&val).is_zero())
        .count();
    c.check(
        "generated move equations",
        vanish == total,
        format!("{vanish}/{total} vanish at the rule values"),
    );
    let rs = RuleSet::g2();
    let corpus = move_corpus(acceptance::MOVE_PAIRS, acceptance::SEED)?;
    let mut changed = 0;
    for (d, m) in &corpus {
        if g2skein::skein::reduce_closed(d, &rs)?
            != g2skein::skein::reduce_closed(&d.apply_move(m)?, &rs)?
        {
            changed += 1;
        }
    }
    c.check(
        "random move corpus",
        changed == 0,
        format!(
            "{} (diagram, move) pairs, bracket changed on {changed}",
            corpus.len()
        ),
    );
    Ok(c.into_report(json!({ "suite": "moves", "r2": r2, "slide": slide })))
}

fn verify_identities() -> g2skein::Result<Report> {
    let ids = verify_coefficient_identities()?;
    let mut c = Checks::default();
    for i in &ids {
        c.check(&i.name, i.holds, format!("{} = {}", i.lhs, i.rhs));
    }
    let q_int = ids
        .iter()
        .filter(|i| i.name != "a = dim_q V(1,0)")
        .collect::<Vec<_>>();
    let mut r = c.into_report(json!({ "suite": "identities", "identities": ids }));
    r.text.push_str(&format!(
        "{}/{} quantum-integer identities hold\n",
        q_int.iter().filter(|i| i.holds).count(),
        q_int.len()
    ));
    Ok(r)
}

fn verify_conjectures(max_n: usize) -> g2skein::Result<Report> {
    let mut c = Checks::default();
    let upto = max_n.min(PRINTED_DIMENSIONS.len() - 1);
    let dims: Vec<u64> = (0..=max_n as u32).map(dim_inv_g2).collect();
    let mut acyclic = WebGenerator::new(WebClass::Acyclic);
    let mut nonpos = WebGenerator::new(WebClass::NonPositive);
    let ac: Vec<usize> = (0..=max_n).map(|n| acyclic.generate(n).len()).collect();
    let np: Vec<usize> = (0..=max_n).map(|n| nonpos.generate(n).len()).collect();
    for n in 0..=upto {
        let printed = PRINTED_DIMENSIONS[n];
        c.check(
            &format!("dim_inv_g2({n})"),
            dims[n] == printed,
            format!("{} (printed {printed})", dims[n]),
        );
        c.check(
            &format!("acyclic count n={n}"),
            ac[n] as u64 == printed,
            format!(
                "{} (printed {printed}; non-positive curvature {})",
                ac[n], np[n]
            ),
        );
    }
    for n in (0..=max_n).step_by(2) {
        let six = sixpoint_filter(&enumerate_matchings(n)).len() as u64;
        let paths = count_c2_lattice_paths(n);
        let dim = dim_inv_c2(n as u32, 0);
        c.check(
            &format!("6-point matchings 2n={n}"),
            paths == six.into() && dim == six,
            format!("{six} matchings, {paths} lattice paths, C2 invariant dimension {dim}"),
        );
    }
    let disc = double_pentagon_discrepancy()?;
    let witness: Vec<String> = disc
        .iter()
        .map(|(_, d, k)| format!("{k} * [{}]", serialize_inline(d)))
        .collect();
    c.lines.push(format!(
        "pentagon-pentagon discrepancy: {} terms",
        witness.len()
    ));
    Ok(c.into_report(json!({
        "suite": "conjectures",
        "dim_inv_g2": dims,
        "acyclic": ac,
        "nonpositive_curvature": np,
        "printed": PRINTED_DIMENSIONS,
        "discrepancy": witness,
    })))
}

fn scalar_map<'a>(rows: impl IntoIterator<Item = (&'a str, &'a Scalar)>) -> (String, Value) {
    let mut text = String::new();
    let mut map = serde_json::Map::new();
    for (k, v) in rows {
        text.push_str(&format!("{k} = {v}\n"));
        map.insert(k.to_string(), json!(v.to_string()));
    }
    (text, Value::Object(map))
}

fn derive(target: Target) -> g2skein::Result<Report> {
    match target {
        Target::G2 => {
            let faces = derive_face_coefficients(&generate_adjacency_equations()?)?;
            let mut text = String::new();
            for s in &faces.steps {
                text.push_str(&format!("{} from {}: {}\n", s.symbol, s.equation, s.value));
            }
            let (t, _) = scalar_map(faces.values.iter().map(|(k, v)| (k.as_str(), v)));
            text.push_str(&t);
            let matches = faces
                .values
                .iter()
                .all(|(k, v)| Sym::from_name(k).map(g2_value).as_ref() == Some(v));
            if !(faces.consistent && matches) {
                return Err(Error::Derivation(
                    "face coefficients differ from the built-in rule set".into(),
                ));
            }
            Ok(Report::ok(text, serde_json::to_value(&faces)?))
        }
        Target::G2Crossing => {
            let faces = derive_face_coefficients(&generate_adjacency_equations()?)?;
            let x = derive_crossing_coefficients(&faces)?;
            let (mut text, _) = scalar_map([
                ("f1 g1 = f2 g2", &x.product),
                ("f1^2 + g1^2", &x.sum_of_squares),
                ("f1", &x.f1),
                ("f2", &x.f2),
                ("g1", &x.g1),
                ("g2", &x.g2),
            ]);
            for (d, s) in ["A", "B", "C", "D"].iter().zip(&x.assignment) {
                text.push_str(&format!("crossing {d} {s}\n"));
            }
            text.push_str(&format!(
                "{} R2-consistent rules, {} with right curl q^6\n",
                x.r2_solutions, x.curl_solutions
            ));
            let ok = [
                (Sym::F1, &x.f1),
                (Sym::F2, &x.f2),
                (Sym::G1, &x.g1),
                (Sym::G2, &x.g2),
            ]
            .iter()
            .all(|(s, v)| g2_value(*s) == **v);
            if !ok {
                return Err(Error::Derivation(
                    "crossing coefficients differ from the built-in rule set".into(),
                ));
            }
            Ok(Report::ok(text, serde_json::to_value(&x)?))
        }
        Target::A1 => {
            let (a, b, c) = derive_a1()?;
            let (text, j) = scalar_map([("a", &a), ("b", &b), ("c", &c)]);
            let rs = RuleSet::a1();
            if a != rs.loop_value {
                return Err(Error::Derivation(
                    "loop value differs from the built-in A1 rule set".into(),
                ));
            }
            Ok(Report::ok(text, j))
        }
    }
}

fn enumerate(
    n: usize,
    kind: Kind,
    filter: Option<Filter>,
    count_only: bool,
) -> g2skein::Result<Report> {
    if filter.is_some() && kind != Kind::Matchings {
        return Err(Error::Domain(
            "--filter applies to --kind matchings only".into(),
        ));
    }
    let items: Vec<String> = match kind {
        Kind::Acyclic | Kind::Nonpos => {
            let class = if kind == Kind::Acyclic {
                WebClass::Acyclic
            } else {
                WebClass::NonPositive
            };
            let ws: Vec<FreewaySkeleton> = WebGenerator::new(class).generate(n);
            if count_only {
                return Ok(count_report(ws.len().to_string()));
            }
            ws.iter().map(|w| serialize_inline(&w.diagram)).collect()
        }
        Kind::Matchings => {
            let mut ms = enumerate_matchings(n);
            if filter.is_some() {
                ms = sixpoint_filter(&ms);
            }
            if count_only {
                return Ok(count_report(ms.len().to_string()));
            }
            ms.iter().map(ToString::to_string).collect()
        }
        Kind::Paths => {
            if count_only {
                return Ok(count_report(count_c2_lattice_paths(n).to_string()));
            }
            sixpoint_filter(&enumerate_matchings(n))
                .iter()
                .map(|m| {
                    let t = berele(m);
                    let pairs = t.pairs().expect("6-point matchings give two-row tableaux");
                    pairs
                        .iter()
                        .map(|(a, b)| format!("({a},{b})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect()
        }
    };
    let mut text = items.join("\n");
    if !items.is_empty() {
        text.push('\n');
    }
    Ok(Report::ok(
        text,
        json!({ "count": items.len(), "items": items }),
    ))
}

fn count_report(count: String) -> Report {
    Report::ok(format!("{count}\n"), json!({ "count": count }))
}

fn dims(max_n: u32) -> Report {
    let rows: Vec<(u32, u64, u64, u64)> = (0..=max_n)
        .map(|n| (n, dim_inv_g2(n), dim_inv_a2(n, 0), dim_inv_c2(n, 0)))
        .collect();
    let mut text = String::from("n\tG2 V(1,0)\tA2 V(1,0)\tC2 V(1,0)\n");
    for (n, g, a, c) in &rows {
        text.push_str(&format!("{n}\t{g}\t{a}\t{c}\n"));
    }
    let col = |f: fn(&(u32, u64, u64, u64)) -> u64| rows.iter().map(f).collect::<Vec<_>>();
    Report::ok(
        text,
        json!({ "G2": col(|r| r.1), "A2": col(|r| r.2), "C2": col(|r| r.3) }),
    )
}

fn selftest() -> Report {
    let outcomes = acceptance::run_all();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let mut text: String = outcomes.iter().map(|o| o.line() + "\n").collect();
    text.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
    Report {
        text,
        json: json!({ "criteria": outcomes, "passed": passed }),
        ok: passed == outcomes.len(),
    }
}
