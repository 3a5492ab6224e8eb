use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zigzag::complexes::{from_json, hom_table, HomTable};
use zigzag::freegroup::{enumerate_red_gamma, enumerate_simples, reduced_words, Word};
use zigzag::metrics::{metric_report, MetricReport};
use zigzag::spherical::{base_tuple, hurwitz_spherical_word, SphericalTuple};
use zigzag::suites::{self, Scope, Suite, SuiteReport};
use zigzag::twists::psi;
use zigzag::{Complex, GradingMode, Rational};

#[derive(Parser)]
#[command(name = "zzt", version, about = "Twist functors, slices and word metrics for zigzag algebras")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Rank; `verify` runs each criterion's own ranks when omitted.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// Grading: path, tilde or vec.
    #[arg(long, global = true, default_value = "tilde", value_parser = parse_mode)]
    mode: GradingMode,
    /// Enumeration bound for simples, reflections and lifts.
    #[arg(long, global = true, default_value_t = 5)]
    bound: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal model of Psi_word applied to a target.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// `P<j>`, `gen` for the sum of all projectives, or a path to a complex in JSON.
        #[arg(long, default_value = "gen")]
        target: String,
    },
    /// Distance between two words in the metric of the chosen grading.
    Metric {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        beta: String,
    },
    /// Dimensions of Hom(X, Y[k]<m>).
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Hurwitz orbit of the base tuple under braid words up to a length.
    Hurwitz {
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Enumerated simple elements with a reflection factorization each.
    Simples,
    /// Runs acceptance suites; exits 0 iff all pass.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        maxlen: Option<usize>,
    },
}

fn parse_mode(s: &str) -> Result<GradingMode, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Verification(Value, String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

struct Ctx {
    n: usize,
    mode: GradingMode,
    bound: usize,
    seed: u64,
    json: bool,
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let wants_json = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) if wants_json => {
            println!("{}", json!({ "error": { "kind": "usage", "message": e.to_string().trim() } }));
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    if let Some(k) = std::env::var("ZZT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
    let json = cli.common.format == Format::Json;
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            if json {
                println!("{}", json!({ "error": { "kind": "usage", "message": msg } }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(2)
        }
        Err(Failure::Verification(doc, text)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                print!("{text}");
            }
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let c = &cli.common;
    let ctx = Ctx { n: c.n.unwrap_or(2) as usize, mode: c.mode.clone(), bound: c.bound, seed: c.seed, json: c.format == Format::Json };
    match &cli.command {
        Command::Twist { word, target } => twist(&ctx, word, target),
        Command::Metric { alpha, beta } => metric(&ctx, alpha, beta),
        Command::Hom { source, target } => hom(&ctx, source, target),
        Command::Hurwitz { depth } => hurwitz(&ctx, *depth),
        Command::Simples => simples(&ctx),
        Command::Verify { suite, maxlen } => verify(&ctx, c.n.map(|n| n as usize), suite, *maxlen),
    }
}

fn parse_word(s: &str, n: usize) -> Result<Word, Failure> {
    let w: Word = s.parse().map_err(usage)?;
    if w.max_generator() > n {
        return Err(usage(format!("word {w} uses generators beyond rank {n}")));
    }
    Ok(w)
}

fn parse_object(ctx: &Ctx, s: &str) -> Result<Complex, Failure> {
    if s == "gen" {
        return Ok(Complex::generator(ctx.n, ctx.mode.clone()));
    }
    if let Some(j) = s.strip_prefix('P').and_then(|j| j.parse::<usize>().ok()) {
        return Complex::projective(ctx.n, ctx.mode.clone(), j, 0, 0).map_err(usage);
    }
    let text = std::fs::read_to_string(s).map_err(|e| usage(format!("target {s:?}: {e}")))?;
    let c: Complex = from_json(&text).map_err(usage)?;
    if c.rank() != ctx.n || *c.mode() != ctx.mode {
        return Err(usage(format!("complex in {s:?} has rank {} and mode {}", c.rank(), c.mode())));
    }
    Ok(c)
}

fn twist(ctx: &Ctx, word: &str, target: &str) -> Result<String, Failure> {
    let w = parse_word(word, ctx.n)?;
    let y = parse_object(ctx, target)?;
    let out = psi(&w, &y).map_err(usage)?;
    Ok(if ctx.json { format!("{}\n", zigzag::complexes::to_json(&out)) } else { format!("{out}") })
}

fn metric_text(r: &MetricReport) -> String {
    let name = match r.mode {
        GradingMode::PathLength => "d_exotic",
        GradingMode::OrientVec => "d_dual",
        _ => "d_standard",
    };
    let mut s = format!("word: {}\nmode: {}\nphi: ({}, {})\n", r.word, r.mode, r.phi.0, r.phi.1);
    if let Some((lo, hi)) = r.clamped {
        s += &format!("clamped phi: ({lo}, {hi})\n");
    }
    s += &format!("{name} = {}\n", r.spread);
    let cp = &r.counterpart;
    let value = cp.value.map_or("unknown".to_string(), |v| v.to_string());
    let status = if cp.exact { "exact" } else { "not certified" };
    s += &format!("{} = {value} ({status}; {})\n", cp.name, cp.source);
    s
}

fn metric(ctx: &Ctx, alpha: &str, beta: &str) -> Result<String, Failure> {
    let (a, b) = (parse_word(alpha, ctx.n)?, parse_word(beta, ctx.n)?);
    let r = metric_report(&a, &b, ctx.n, &ctx.mode, ctx.bound).map_err(usage)?;
    Ok(if ctx.json { format!("{}\n", serde_json::to_string_pretty(&r).expect("serializable")) } else { metric_text(&r) })
}

fn hom_text(t: &HomTable) -> String {
    let (Some((k0, k1)), Some((m0, m1))) = (t.hom_range, t.int_range) else {
        return "0\n".to_string();
    };
    let mut s = format!("{:>6}", "k\\m");
    for m in m0..=m1 {
        s += &format!("{m:>4}");
    }
    s.push('\n');
    for k in k0..=k1 {
        s += &format!("{k:>6}");
        for m in m0..=m1 {
            s += &format!("{:>4}", t.get(k, m));
        }
        s.push('\n');
    }
    s += &format!("total {}\n", t.total());
    s
}

fn hom(ctx: &Ctx, source: &str, target: &str) -> Result<String, Failure> {
    let (x, y) = (parse_object(ctx, source)?, parse_object(ctx, target)?);
    let t = hom_table(&x, &y).map_err(usage)?;
    if ctx.json {
        let dims: Vec<Value> = t.dims.iter().map(|(&(k, m), &d)| json!({ "k": k, "m": m, "dim": d })).collect();
        let doc = json!({ "hom_range": t.hom_range, "int_range": t.int_range, "dims": dims, "total": t.total() });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")));
    }
    Ok(hom_text(&t))
}

fn hurwitz(ctx: &Ctx, depth: usize) -> Result<String, Failure> {
    if ctx.n < 2 {
        return Err(usage("the Hurwitz action needs rank at least 2"));
    }
    let base = base_tuple::<Rational>(ctx.n);
    let mut docs = Vec::new();
    let mut text = String::new();
    for braid in reduced_words(ctx.n - 1, depth) {
        let tup: SphericalTuple<Rational> = hurwitz_spherical_word(&braid, &base).map_err(usage)?;
        let label = if braid.is_empty() { "1".to_string() } else { braid.to_string().replace('s', "t") };
        text += &format!("braid {label}\n");
        let mut entries = Vec::new();
        for (k, e) in tup.entries.iter().enumerate() {
            text += &format!("  E{} for {}\n", k + 1, e.reflection);
            for line in e.complex.to_string().lines() {
                text += &format!("    {line}\n");
            }
            entries.push(json!({ "reflection": e.reflection.to_string(), "complex": e.complex.to_doc() }));
        }
        docs.push(json!({ "braid": label, "entries": entries }));
    }
    Ok(if ctx.json { format!("{}\n", serde_json::to_string_pretty(&docs).expect("serializable")) } else { text })
}

fn simples(ctx: &Ctx) -> Result<String, Failure> {
    let mut tuples = enumerate_red_gamma(ctx.n, ctx.bound);
    tuples.sort();
    let mut factor: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
    for tup in &tuples {
        let mut acc = Word::identity();
        factor.entry(acc.clone()).or_default();
        for (k, t) in tup.iter().enumerate() {
            acc = acc.mul(t);
            let cand = tup[..=k].to_vec();
            let size = |f: &[Word]| f.iter().map(Word::len).sum::<usize>();
            let slot = factor.entry(acc.clone()).or_insert_with(|| cand.clone());
            if size(&cand) < size(slot) {
                *slot = cand;
            }
        }
    }
    let list = enumerate_simples(ctx.n, ctx.bound);
    if ctx.json {
        let docs: Vec<Value> = list
            .iter()
            .map(|s| {
                let f: Vec<String> = factor[s].iter().map(|t| t.to_string()).collect();
                json!({ "simple": s.to_string(), "reflections": f })
            })
            .collect();
        return Ok(format!("{}\n", serde_json::to_string_pretty(&docs).expect("serializable")));
    }
    let mut text = String::new();
    for s in &list {
        let f: Vec<String> = factor[s].iter().map(|t| format!("({t})")).collect();
        let f = if f.is_empty() { "empty product".to_string() } else { f.join(" ") };
        text += &format!("{s}  =  {f}\n");
    }
    text += &format!("{} simples from {} reflection tuples, bound {}\n", list.len(), tuples.len(), ctx.bound);
    Ok(text)
}

fn report_text(r: &SuiteReport) -> String {
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let mut s = format!(
        "criterion {:>2} {:<14} {verdict}  checked {} uncertified {} failures {}  [{}]\n",
        r.criterion, r.suite, r.checked, r.uncertified, r.failure_count, r.scope
    );
    for f in &r.failures {
        s += &format!("    {f}\n");
    }
    s
}

fn verify(ctx: &Ctx, n: Option<usize>, suite: &str, maxlen: Option<usize>) -> Result<String, Failure> {
    let list: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(usage)?] };
    let scope = Scope { ranks: n.into_iter().collect(), maxlen, seed: ctx.seed, bound: ctx.bound };
    let reports: Vec<SuiteReport> = list.iter().map(|&s| suites::run(s, &scope)).collect();
    let all = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(report_text).collect();
    let doc = json!({ "passed": all, "reports": reports });
    if !all {
        return Err(Failure::Verification(doc, text));
    }
    Ok(if ctx.json { format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")) } else { text })
}
