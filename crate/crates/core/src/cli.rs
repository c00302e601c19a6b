//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with captured output, so it can be driven from tests.
//!
//! Exit codes: 0 found / yes, 1 not found / no, 2 unknown or budget hit,
//! 64 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::allocation::{check_ef1, default_allow_empty, find_ef1_allocation, Allocation};
use crate::budget::{Budget, Outcome};
use crate::cutset::{
    normalize_relaxed, search_elementary, search_generalized, verify_input, CertificateInput, CutsetCertificate,
    Keep, SearchOptions, SearchReport,
};
use crate::fixtures::{fixture_valuation, FIXTURES};
use crate::graph::{load_graph, Graph};
use crate::obstruction::{find_bipolar_ordering, find_hamiltonian_path, find_trident};
use crate::picking::{leaf_condition_holds, pick, PickError, Profile};
use crate::reduction::{forward_cutset_from_clique, reduce_clique_elementary, reduce_clique_generalized, CliqueInstance};
use crate::spectrum::{compute_spectrum, SpectrumOptions, ValueClass, Verdict};
use crate::valuation::{
    blocking_valuation_cm, blocking_valuation_tame, format_rational, parse_profile, parse_weights, Valuation,
};
use crate::vertex_set::VertexSet;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "fairgraph", version, about = "Cutsets, EF1 oracles and spectra for connected graph division")]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads.
    #[arg(long, global = true, env = "FAIRGRAPH_JOBS")]
    jobs: Option<usize>,
    /// Node limit for each exhaustive search.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    /// Wall-clock limit in seconds for each exhaustive search.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_budget: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural summary: traceability, bipolar ordering, tridents, cutsets.
    Analyze {
        graph: String,
        #[arg(long)]
        max_cut: Option<usize>,
    },
    /// Find, verify or normalize cutsets.
    Cutset {
        #[command(subcommand)]
        action: CutsetCommand,
    },
    /// Decide whether a connected EF1 allocation exists, or check one.
    Oracle(OracleArgs),
    /// Build the blocking valuation of a cutset.
    Block(BlockArgs),
    /// Run the picking procedure for `|V| - 2` or more agents.
    Pick(PickArgs),
    /// Per-agent-count verdicts with certificates.
    Spectrum(SpectrumArgs),
    /// Turn a Clique instance into a cutset instance.
    Reduce(ReduceArgs),
    /// Built-in graphs.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CutsetCommand {
    Find {
        graph: String,
        /// Largest cut (sum of member sizes) to enumerate.
        #[arg(long)]
        max_cut: Option<usize>,
        /// Only type-I members.
        #[arg(long)]
        elementary: bool,
        /// Report every certificate instead of the best gap per valence.
        #[arg(long)]
        all: bool,
        /// At most one type-II member.
        #[arg(long)]
        tame_only: bool,
    },
    Verify {
        graph: String,
        /// JSON certificate, list of certificates, or a `cutset find --json` report.
        #[arg(long)]
        cert: PathBuf,
    },
    /// Rewrite a relaxed certificate into a valid one.
    Normalize {
        graph: String,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum FixturesCommand {
    List,
}

#[derive(Args, Debug)]
struct OracleArgs {
    graph: String,
    /// Defaults to the fixture's published agent count.
    #[arg(long)]
    agents: Option<usize>,
    /// `paper`, `unit`, or a weight file (`vertex p/q` lines).
    #[arg(long)]
    weights: Option<String>,
    /// Removals must keep the envied share connected.
    #[arg(long)]
    outer: bool,
    /// Permit empty shares (default: only when agents >= vertices).
    #[arg(long)]
    allow_empty: Option<bool>,
    /// Check this allocation (one share per line, `-` for empty) instead of searching.
    #[arg(long)]
    allocation: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BlockArgs {
    graph: String,
    #[arg(long, default_value = "CA")]
    class: ValueClass,
    /// Pick a certificate blocking this many agents and confirm with the oracle.
    #[arg(long)]
    agents: Option<usize>,
    #[arg(long)]
    max_cut: Option<usize>,
}

#[derive(Args, Debug)]
struct PickArgs {
    graph: String,
    #[arg(long)]
    agents: usize,
    /// Common weights: `unit`, `paper`, or a weight file.
    #[arg(long, default_value = "unit")]
    weights: String,
    /// Per-agent weights (`agent vertex p/q` lines); overrides --weights.
    #[arg(long)]
    profile: Option<PathBuf>,
    /// Picking order as comma-separated agent indices.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    graph: String,
    #[arg(long, default_value = "CA")]
    class: ValueClass,
    /// Defaults to the vertex count.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    max_cut: Option<usize>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// Clique instance edge list (`n m` header, then `u v` lines); may be disconnected.
    input: PathBuf,
    #[arg(long)]
    h: usize,
    /// Build the generalized-cutset instance.
    #[arg(long)]
    generalized: bool,
    /// Dummy parameter of the generalized instance; defaults to edges + 1.
    #[arg(long)]
    l: Option<usize>,
    /// Also emit the forward certificate for this clique (comma-separated vertices).
    #[arg(long, value_delimiter = ',')]
    clique: Option<Vec<usize>>,
    /// Write `<prefix>.edges` and `<prefix>.json` instead of printing.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit code plus captured output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    json: bool,
    budget: Budget,
}

type Res = Result<(i32, String), String>;

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let text = e.render().to_string();
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let ctx = Ctx {
        json: cli.json,
        budget: Budget {
            nodes: cli.node_budget,
            time: cli.time_budget.map(Duration::from_secs_f64),
        },
    };
    let result = match cli.jobs {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&ctx, &cli.command)),
            Err(e) => Err(format!("cannot start {k} workers: {e}")),
        },
        None => dispatch(&ctx, &cli.command),
    };
    match result {
        Ok((code, stdout)) => CliOutput {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(msg) => CliOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Res {
    match cmd {
        Command::Analyze { graph, max_cut } => analyze(ctx, graph, *max_cut),
        Command::Cutset { action } => match action {
            CutsetCommand::Find {
                graph,
                max_cut,
                elementary,
                all,
                tame_only,
            } => cutset_find(ctx, graph, *max_cut, *elementary, *all, *tame_only),
            CutsetCommand::Verify { graph, cert } => cutset_verify(ctx, graph, cert),
            CutsetCommand::Normalize { graph, cert } => cutset_normalize(ctx, graph, cert),
        },
        Command::Oracle(a) => oracle(ctx, a),
        Command::Block(a) => block(ctx, a),
        Command::Pick(a) => pick_cmd(ctx, a),
        Command::Spectrum(a) => spectrum(ctx, a),
        Command::Reduce(a) => reduce(ctx, a),
        Command::Fixtures { action: FixturesCommand::List } => fixtures_list(ctx),
    }
}

fn graph(source: &str) -> Result<Graph, String> {
    load_graph(source).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn outcome_code<T>(o: &Outcome<T>) -> i32 {
    match o {
        Outcome::Found(_) => EXIT_YES,
        Outcome::NotFound => EXIT_NO,
        Outcome::BudgetExceeded => EXIT_UNKNOWN,
    }
}

fn report_code(r: &SearchReport) -> i32 {
    if !r.certificates.is_empty() {
        EXIT_YES
    } else if r.complete {
        EXIT_NO
    } else {
        EXIT_UNKNOWN
    }
}

fn outcome_text<T>(o: &Outcome<T>, show: impl FnOnce(&T) -> String) -> String {
    match o {
        Outcome::Found(t) => show(t),
        Outcome::NotFound => "none".into(),
        Outcome::BudgetExceeded => "unknown (budget exceeded)".into(),
    }
}

fn sequence(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join("-")
}

fn search_options(ctx: &Ctx, max_cut: Option<usize>) -> SearchOptions {
    let mut o = SearchOptions::default().budget(ctx.budget);
    if let Some(k) = max_cut {
        o = o.max_cut(k);
    }
    o
}

fn analyze(ctx: &Ctx, source: &str, max_cut: Option<usize>) -> Res {
    let g = graph(source)?;
    let ham = find_hamiltonian_path(&g, ctx.budget);
    let bip = find_bipolar_ordering(&g, ctx.budget);
    let tri = find_trident(&g);
    let leaf = leaf_condition_holds(&g);
    let report = search_generalized(&g, &search_options(ctx, max_cut));
    if ctx.json {
        let v = json!({
            "graph": g.name(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "universal_vertices": g.universal_vertices(),
            "hamiltonian_path": ham,
            "bipolar_ordering": bip,
            "trident": tri,
            "leaf_condition": leaf.is_ok(),
            "cutsets": report,
        });
        return Ok((EXIT_YES, to_json(&v)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "graph {}: {} vertices, {} edges", g.name().unwrap_or("-"), g.vertex_count(), g.edge_count());
    let _ = writeln!(out, "hamiltonian path: {}", outcome_text(&ham, |p| sequence(&g, p)));
    let _ = writeln!(out, "bipolar ordering: {}", outcome_text(&bip, |p| sequence(&g, p)));
    let _ = writeln!(
        out,
        "trident: {}",
        outcome_text(&tri, |t| format!("{:?} cut {}", t.kind, g.format_set(t.cut)))
    );
    match leaf {
        Ok(()) => out.push_str("leaf condition: holds\n"),
        Err((a, b, u)) => {
            let _ = writeln!(out, "leaf condition: fails ({} is the only neighbor of {} and {})", g.label(u), g.label(a), g.label(b));
        }
    }
    write_report(&mut out, &g, &report);
    Ok((EXIT_YES, out))
}

fn write_report(out: &mut String, g: &Graph, r: &SearchReport) {
    let _ = writeln!(
        out,
        "cutsets (max cut {}, {}): {}",
        r.max_cut,
        if r.complete { "exhaustive" } else { "budget exceeded" },
        r.certificates.len()
    );
    for c in &r.certificates {
        let ci = c.critical_interval();
        let _ = writeln!(out, "  {} blocks n in {}..={}", c.describe(g), ci.start(), ci.end());
    }
}

fn cutset_find(ctx: &Ctx, source: &str, max_cut: Option<usize>, elementary: bool, all: bool, tame_only: bool) -> Res {
    let g = graph(source)?;
    let report = if elementary {
        let t = max_cut.unwrap_or_else(|| search_options(ctx, None).resolved_max_cut(&g));
        let mut r = search_elementary(&g, t, ctx.budget);
        if !all {
            keep_best(&mut r.certificates);
        }
        r
    } else {
        let mut o = search_options(ctx, max_cut);
        if all {
            o = o.keep(Keep::All);
        }
        if tame_only {
            o = o.tame_only();
        }
        search_generalized(&g, &o)
    };
    let code = report_code(&report);
    if ctx.json {
        return Ok((code, to_json(&report)));
    }
    let mut out = String::new();
    write_report(&mut out, &g, &report);
    Ok((code, out))
}

/// Best gap per valence, in canonical order.
fn keep_best(certs: &mut Vec<CutsetCertificate>) {
    certs.sort_by(|a, b| a.canonical_cmp(b));
    certs.dedup_by_key(|c| c.valence);
}

fn read_certificates(path: &Path) -> Result<Vec<CertificateInput>, String> {
    let text = read(path)?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let list = match &v {
        serde_json::Value::Array(items) => items.clone(),
        serde_json::Value::Object(m) if m.contains_key("certificates") => match &m["certificates"] {
            serde_json::Value::Array(items) => items.clone(),
            _ => return Err("`certificates` must be a list".into()),
        },
        _ => vec![v],
    };
    list.into_iter()
        .map(|c| serde_json::from_value(c).map_err(|e| format!("{}: {e}", path.display())))
        .collect()
}

fn cutset_verify(ctx: &Ctx, source: &str, cert: &Path) -> Res {
    let g = graph(source)?;
    let inputs = read_certificates(cert)?;
    let results: Vec<_> = inputs.iter().map(|c| verify_input(&g, c)).collect();
    let all_ok = results.iter().all(|r| r.is_ok());
    let code = if all_ok { EXIT_YES } else { EXIT_NO };
    if ctx.json {
        let items: Vec<_> = results
            .iter()
            .map(|r| match r {
                Ok(c) => json!({"valid": true, "certificate": c}),
                Err(v) => json!({"valid": false, "violations": v}),
            })
            .collect();
        return Ok((code, to_json(&items)));
    }
    let mut out = String::new();
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(c) => {
                let _ = writeln!(out, "certificate {i}: valid, {}", c.describe(&g));
            }
            Err(vs) => {
                let _ = writeln!(out, "certificate {i}: invalid");
                for v in vs {
                    let _ = writeln!(out, "  {v}");
                }
            }
        }
    }
    Ok((code, out))
}

fn cutset_normalize(ctx: &Ctx, source: &str, cert: &Path) -> Res {
    let g = graph(source)?;
    let inputs = read_certificates(cert)?;
    let [input] = inputs.as_slice() else {
        return Err("normalize takes exactly one certificate".into());
    };
    let members = input.resolve_taus(&g);
    match normalize_relaxed(&g, &members, &input.witness) {
        Ok((c, steps)) => {
            if ctx.json {
                return Ok((EXIT_YES, to_json(&json!({"certificate": c, "steps": steps}))));
            }
            let mut out = String::new();
            for s in &steps {
                let _ = writeln!(out, "case {}: {} ({})", s.case, s.detail, g.format_set(s.member));
            }
            let _ = writeln!(out, "normalized: {}", c.describe(&g));
            Ok((EXIT_YES, out))
        }
        Err(e) => {
            if ctx.json {
                return Ok((EXIT_NO, to_json(&json!({"error": e.to_string()}))));
            }
            Ok((EXIT_NO, format!("{e}\n")))
        }
    }
}

/// Resolves `paper`, `unit` or a weight file; `paper` also yields the
/// fixture's agent count.
fn weights(spec: &str, source: &str, g: &Graph) -> Result<(Valuation, Option<usize>), String> {
    match spec {
        "unit" => Ok((Valuation::unit(g.vertex_count()), None)),
        "paper" => {
            let name = source
                .strip_prefix("fixture:")
                .ok_or("--weights paper needs a fixture:<name> graph")?;
            let (_, v, n) = fixture_valuation(name).map_err(|e| e.to_string())?;
            Ok((v, Some(n)))
        }
        path => parse_weights(g, &read(Path::new(path))?).map(|v| (v, None)).map_err(|e| e.to_string()),
    }
}

fn parse_allocation(g: &Graph, text: &str) -> Result<Allocation, String> {
    let mut shares = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let mut s = VertexSet::new();
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty() && *t != "-") {
            s.insert(g.resolve_vertex(tok).ok_or_else(|| format!("unknown vertex `{tok}`"))?);
        }
        shares.push(s);
    }
    Ok(Allocation::new(shares))
}

fn oracle(ctx: &Ctx, a: &OracleArgs) -> Res {
    let g = graph(&a.graph)?;
    let spec = a
        .weights
        .clone()
        .unwrap_or_else(|| if a.graph.starts_with("fixture:") { "paper".into() } else { "unit".into() });
    let (v, paper_n) = weights(&spec, &a.graph, &g)?;

    if let Some(path) = &a.allocation {
        let alloc = parse_allocation(&g, &read(path)?)?;
        let allow_empty = a.allow_empty.unwrap_or(true);
        alloc.validate(&g, allow_empty).map_err(|e| e.to_string())?;
        let r = check_ef1(&g, &alloc, &v, a.outer);
        let code = if r.is_ok() { EXIT_YES } else { EXIT_NO };
        if ctx.json {
            return Ok((code, to_json(&json!({"ef1": r.is_ok(), "outer": a.outer, "witness": r.err()}))));
        }
        let text = match r {
            Ok(()) => format!("{} allocation {}\n", label(a.outer), alloc.describe(&g)),
            Err(w) => {
                let mut s = format!(
                    "not {}: agent {} ({}) envies agent {} ({})\n",
                    label(a.outer),
                    w.envious,
                    format_rational(&w.own_value),
                    w.envied,
                    format_rational(&w.envied_value)
                );
                for r in &w.removals {
                    let _ = writeln!(
                        s,
                        "  without {}: {}{}",
                        g.label(r.vertex),
                        format_rational(&r.value),
                        if r.connected { "" } else { " (disconnects)" }
                    );
                }
                s
            }
        };
        return Ok((code, text));
    }

    let n = a.agents.or(paper_n).ok_or("--agents is required")?;
    if n == 0 {
        return Err("--agents must be positive".into());
    }
    let allow_empty = a.allow_empty.unwrap_or_else(|| default_allow_empty(&g, n));
    let r = find_ef1_allocation(&g, n, &v, a.outer, allow_empty, ctx.budget);
    let code = outcome_code(&r);
    if ctx.json {
        return Ok((code, to_json(&json!({"agents": n, "outer": a.outer, "result": r}))));
    }
    let text = match &r {
        Outcome::Found(al) => format!("connected {} allocation: {}\n", label(a.outer), al.describe(&g)),
        Outcome::NotFound => format!("no connected {} allocation for {n} agents\n", label(a.outer)),
        Outcome::BudgetExceeded => "unknown: budget exceeded\n".into(),
    };
    Ok((code, text))
}

fn label(outer: bool) -> &'static str {
    if outer {
        "EF1-outer"
    } else {
        "EF1"
    }
}

fn block(ctx: &Ctx, a: &BlockArgs) -> Res {
    let g = graph(&a.graph)?;
    let mut o = search_options(ctx, a.max_cut);
    if a.class == ValueClass::CA {
        o = o.tame_only();
    }
    let report = search_generalized(&g, &o);
    let chosen = match a.agents {
        Some(n) => report.certificates.iter().find(|c| c.blocks(n)),
        None => report.certificates.first(),
    };
    let Some(cert) = chosen else {
        let code = if report.complete { EXIT_NO } else { EXIT_UNKNOWN };
        let msg = "no suitable cutset found";
        return Ok((code, if ctx.json { to_json(&json!({"error": msg})) } else { format!("{msg}\n") }));
    };
    let v = match a.class {
        ValueClass::CA => blocking_valuation_tame(&g, cert).map_err(|e| e.to_string())?,
        ValueClass::CM => blocking_valuation_cm(cert),
    };
    let check = a.agents.map(|n| find_ef1_allocation(&g, n, &v, false, default_allow_empty(&g, n), ctx.budget));
    let code = check.as_ref().map_or(EXIT_YES, |o| match o {
        Outcome::NotFound => EXIT_YES,
        Outcome::Found(_) => EXIT_NO,
        Outcome::BudgetExceeded => EXIT_UNKNOWN,
    });
    if ctx.json {
        return Ok((code, to_json(&json!({"cutset": cert, "valuation": v, "oracle": check}))));
    }
    let mut out = format!("cutset: {}\n", cert.describe(&g));
    match v.weights() {
        Some(w) => {
            for (i, x) in w.iter().enumerate() {
                let _ = writeln!(out, "{} {}", g.label(i), format_rational(x));
            }
        }
        None => {
            let _ = writeln!(
                out,
                "monotone valuation: |S ∩ {}| + number of dominated members",
                g.format_set(cert.distinguished())
            );
        }
    }
    if let (Some(n), Some(o)) = (a.agents, &check) {
        let _ = writeln!(out, "oracle for {n} agents: {}", outcome_text(o, |al| format!("EF1 allocation {}", al.describe(&g))));
    }
    Ok((code, out))
}

fn pick_cmd(ctx: &Ctx, a: &PickArgs) -> Res {
    let g = graph(&a.graph)?;
    let mut profile = match &a.profile {
        Some(p) => Profile::new(parse_profile(&g, a.agents, &read(p)?).map_err(|e| e.to_string())?),
        None => Profile::common(weights(&a.weights, &a.graph, &g)?.0, a.agents),
    };
    if let Some(order) = &a.order {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if !sorted.iter().copied().eq(0..a.agents) {
            return Err("--order must be a permutation of the agents".into());
        }
        profile = profile.with_order(order.clone());
    }
    match pick(&g, &profile) {
        Ok(r) => {
            let ok = crate::allocation::check_ef1_profile(&g, &r.allocation, &profile.valuations, true).is_ok();
            let code = if ok { EXIT_YES } else { EXIT_NO };
            if ctx.json {
                return Ok((code, to_json(&json!({"result": r, "ef1_outer": ok}))));
            }
            Ok((
                code,
                format!(
                    "allocation: {}\nroute: {:?}\nEF1-outer: {}\n",
                    r.allocation.describe(&g),
                    r.route,
                    if ok { "yes" } else { "NO" }
                ),
            ))
        }
        Err(e @ PickError::LeafCondition { .. }) => {
            if ctx.json {
                return Ok((EXIT_NO, to_json(&json!({"error": e}))));
            }
            Ok((EXIT_NO, format!("{e}\n")))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn spectrum(ctx: &Ctx, a: &SpectrumArgs) -> Res {
    let g = graph(&a.graph)?;
    let n_max = a.n_max.unwrap_or(g.vertex_count());
    if n_max == 0 {
        return Err("--n-max must be positive".into());
    }
    let mut opts = SpectrumOptions {
        budget: ctx.budget,
        max_cut: a.max_cut,
        counterexamples: Vec::new(),
    };
    if let Some(name) = a.graph.strip_prefix("fixture:") {
        if let Ok((_, v, n)) = fixture_valuation(name) {
            opts.counterexamples.push((n, v));
        }
    }
    let report = compute_spectrum(&g, a.class, n_max, &opts).map_err(|e| e.to_string())?;
    let code = if report.has_unknown() { EXIT_UNKNOWN } else { EXIT_YES };
    if ctx.json {
        return Ok((code, to_json(&json!({"pattern": report.pattern(), "report": report}))));
    }
    let mut out = format!("{} spectrum {}\n", a.class, report.pattern());
    for e in &report.entries {
        let verdict = match e.verdict {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        };
        let why = e.certificate.as_ref().map_or(String::new(), |c| format!(": {}", c.summary(&g)));
        let _ = writeln!(out, "n={:<3} {verdict}{why}", e.n);
    }
    Ok((code, out))
}

fn reduce(ctx: &Ctx, a: &ReduceArgs) -> Res {
    let inst = CliqueInstance::parse(&read(&a.input)?, a.h).map_err(|e| e.to_string())?;
    let red = if a.generalized {
        reduce_clique_generalized(&inst, a.l)
    } else {
        reduce_clique_elementary(&inst)
    }
    .map_err(|e| e.to_string())?;
    let forward = a.clique.as_ref().map(|c| {
        let s: VertexSet = c.iter().copied().collect();
        forward_cutset_from_clique(&red, s)
    });
    let mut code = EXIT_YES;
    let mut sidecar = serde_json::to_value(red.sidecar()).expect("serializable");
    if let Some(f) = &forward {
        sidecar["forward_certificate"] = match f {
            Ok(c) => serde_json::to_value(c).expect("serializable"),
            Err(e) => {
                code = EXIT_NO;
                json!({"error": e.to_string()})
            }
        };
    }
    let edges = red.graph.to_edge_list();
    let sidecar_text = to_json(&sidecar);
    if let Some(prefix) = &a.out {
        let ep = prefix.with_extension("edges");
        let jp = prefix.with_extension("json");
        std::fs::write(&ep, &edges).map_err(|e| format!("cannot write {}: {e}", ep.display()))?;
        std::fs::write(&jp, &sidecar_text).map_err(|e| format!("cannot write {}: {e}", jp.display()))?;
        let msg = format!(
            "wrote {} ({} vertices, target valence {}) and {}\n",
            ep.display(),
            red.graph.vertex_count(),
            red.target_valence,
            jp.display()
        );
        return Ok((code, if ctx.json { sidecar_text } else { msg }));
    }
    Ok((code, if ctx.json { sidecar_text } else { edges }))
}

fn fixtures_list(ctx: &Ctx) -> Res {
    if ctx.json {
        let items: Vec<_> = FIXTURES
            .iter()
            .map(|f| {
                let g = crate::fixtures::fixture_graph(&f.name.replace("<k>", "5")).ok();
                json!({
                    "name": f.name,
                    "summary": f.summary,
                    "labels": g.map(|g| (0..g.vertex_count()).map(|v| g.label(v)).collect::<Vec<_>>()),
                })
            })
            .collect();
        return Ok((EXIT_YES, to_json(&items)));
    }
    let mut out = String::new();
    for f in FIXTURES {
        let _ = writeln!(out, "{:<10} {}", f.name, f.summary);
        if let Ok(g) = crate::fixtures::fixture_graph(f.name) {
            let labels: Vec<String> = (0..g.vertex_count()).map(|v| format!("{v}={}", g.label(v))).collect();
            let _ = writeln!(out, "{:<10} {}", "", labels.join(" "));
        }
    }
    Ok((EXIT_YES, out))
}
