//! `digitlang` command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 capability error (for example a
//! non-regular language where an automaton is required), 4 verification or
//! acceptance failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use digitlang::cluster::{gf_coefficients, gj_generating_function, primed_alphabet_patterns};
use digitlang::counting::{brute_count, count_series, fit_recurrence};
use digitlang::dirichlet::{self, Method};
use digitlang::langspec::spec_to_json;
use digitlang::manifest::RunManifest;
use digitlang::numeration::parse_block;
use digitlang::oeis::{self, FixtureStore, OeisClient};
use digitlang::regular::{dfao_from_spec, kernel_sequences, LinearRepresentation};
use digitlang::repro::{self, ReproOptions};
use digitlang::spectral;
use digitlang::{evilwords, Error, LanguageSpec};

const EXIT_INPUT: u8 = 2;
const EXIT_CAPABILITY: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "digitlang", version, about = "Digit-restricted numeration languages")]
struct Cli {
    #[command(flatten)]
    out: OutputArgs,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write results to this file instead of stdout.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    /// Where to write the run manifest. Defaults to `<out>.manifest.json`
    /// with `--out`, otherwise a single line on stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Per-length counts.
    Count {
        /// `preset:NAME` or a JSON spec file.
        spec: String,
        #[arg(long, default_value_t = 10)]
        upto: usize,
        /// Add a brute-force column and fail on any mismatch.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        csv: bool,
        /// Also fit a linear recurrence of at most this order.
        #[arg(long)]
        fit: Option<usize>,
    },
    /// Abscissa of convergence of the restricted Dirichlet series.
    Abscissa {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Spectral)]
        method: MethodArg,
        /// Also attach the summatory trace up to `b^K`.
        #[arg(long, value_name = "K")]
        empirical: Option<u32>,
    },
    /// Certified bracket for the series at real `z`.
    Eval {
        spec: String,
        #[arg(long)]
        z: f64,
        /// Enumeration depth and bracket depth.
        #[arg(long, value_delimiter = ',', default_values_t = [4usize, 40])]
        depth: Vec<usize>,
        /// Leading digits used to refine per-length brackets.
        #[arg(long, default_value_t = 2)]
        prefix: usize,
    },
    /// Members below `N`, or below `b^k` with `--power`.
    Summatory {
        spec: String,
        n: Option<String>,
        #[arg(long, conflicts_with = "n")]
        power: Option<u32>,
        /// Trace `log A(b^k) / (k log b)` for `k = 1..=K`.
        #[arg(long, value_name = "K")]
        trace: Option<u32>,
    },
    /// Goulden-Jackson generating function over the primed alphabet.
    Gf {
        #[arg(long, default_value_t = 10)]
        base: u32,
        /// Blocks forbidden at even positions (comma separated).
        #[arg(long, value_delimiter = ',')]
        even: Vec<String>,
        /// Blocks forbidden at odd positions (comma separated).
        #[arg(long, value_delimiter = ',')]
        odd: Vec<String>,
        /// Number of coefficients to list.
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    /// Run the acceptance criteria.
    Repro {
        /// Fixture directory for the OEIS catalogue.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
    /// The evil-position language.
    Evil {
        #[command(subcommand)]
        cmd: EvilCmd,
    },
    /// Minimal DFAO of the characteristic sequence.
    Dfao {
        spec: String,
        /// Lift to base `b^l`.
        #[arg(long, default_value_t = 1)]
        lift: u32,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// Kernel subsequences of the characteristic sequence.
    Kernel {
        spec: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long, default_value_t = 64)]
        terms: usize,
    },
    /// Linear representation of the characteristic sequence.
    Linrep {
        spec: String,
        #[arg(long, default_value_t = 1)]
        lift: u32,
        /// Schutzenberger reduction instead of trimming.
        #[arg(long)]
        reduce: bool,
    },
    /// Dominance checks and candidate poles from the sum matrix.
    Poles {
        spec: String,
        #[arg(long, default_value_t = 1)]
        lift: u32,
        /// Imaginary-part index range `n` for candidate poles.
        #[arg(long, default_value_t = 2)]
        n_max: i64,
        /// Shift range `l` for candidate poles.
        #[arg(long, default_value_t = 1)]
        l_max: i64,
    },
    /// OEIS lookups.
    Oeis {
        #[command(subcommand)]
        cmd: OeisCmd,
    },
    /// Print the resolved spec as JSON.
    Spec { spec: String },
}

#[derive(Subcommand)]
enum EvilCmd {
    /// Exact counts `u_n`.
    Count {
        #[arg(long, default_value_t = 20)]
        upto: usize,
        /// Compare with the closed form.
        #[arg(long)]
        closed: bool,
    },
    /// Non-regularity witness rows.
    Witness {
        #[arg(long, default_value_t = 20)]
        imax: u32,
    },
    /// Exact abscissa `log 24 / (6 log 2)`.
    Abscissa,
    /// Empirical envelope of `log u_n - sigma n log 2`.
    Envelope {
        #[arg(long, default_value_t = 10_000)]
        nmax: u64,
    },
}

#[derive(Subcommand)]
enum OeisCmd {
    /// Match a sequence (at least six terms).
    Lookup {
        #[arg(value_delimiter = ',', num_args = 1.., required = true)]
        terms: Vec<String>,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Match the counts of a spec.
    Counts {
        spec: String,
        #[arg(long, default_value_t = 15)]
        upto: usize,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Check the A-number catalogue against the fixtures.
    Catalog {
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Download entries into a fixture directory (needs the `online` feature).
    Fetch {
        numbers: Vec<String>,
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Query the live service, falling back to fixtures.
    #[arg(long)]
    online: bool,
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Spectral,
    ThetaD,
    Cobham,
    Empirical,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Spectral => Method::Spectral,
            MethodArg::ThetaD => Method::ThetaD,
            MethodArg::Cobham => Method::Cobham,
            MethodArg::Empirical => Method::Empirical,
        }
    }
}

/// Failure carrying its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if e.is_capability() { EXIT_CAPABILITY } else { EXIT_INPUT };
        Fail { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail { code: EXIT_INPUT, msg: e.to_string() }
    }
}

type CmdResult = Result<(), Fail>;

struct Ctx {
    out: OutputArgs,
    manifest: RunManifest,
    buf: Vec<u8>,
    /// Exit code to report after a successful write (verification failures).
    status: u8,
}

impl Ctx {
    fn emit_json(&mut self, v: &impl Serialize) {
        serde_json::to_writer_pretty(&mut self.buf, v).expect("serializable");
        self.buf.push(b'\n');
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.extend_from_slice(s.as_ref().as_bytes());
        self.buf.push(b'\n');
    }

    fn spec(&mut self, source: &str) -> Result<LanguageSpec, Fail> {
        let spec = LanguageSpec::resolve(source)?;
        self.manifest.spec = Some(spec_to_json(&spec));
        self.param("spec_source", source);
        Ok(spec)
    }

    fn param(&mut self, k: &str, v: impl Serialize) {
        self.manifest.parameters.insert(k.to_string(), serde_json::to_value(v).unwrap_or_default());
    }

    fn finish(mut self) -> Result<u8, Fail> {
        match &self.out.out {
            Some(p) => {
                std::fs::write(p, &self.buf)?;
                self.manifest.outputs.push(p.display().to_string());
            }
            None => std::io::stdout().write_all(&self.buf)?,
        }
        let m = serde_json::to_string(&self.manifest).expect("serializable");
        let manifest_path = self
            .out
            .manifest
            .clone()
            .or_else(|| self.out.out.as_ref().map(|p| PathBuf::from(format!("{}.manifest.json", p.display()))));
        match manifest_path {
            Some(p) => std::fs::write(p, m + "\n")?,
            None => eprintln!("manifest: {m}"),
        }
        Ok(self.status)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Count { .. } => "count",
        Command::Abscissa { .. } => "abscissa",
        Command::Eval { .. } => "eval",
        Command::Summatory { .. } => "summatory",
        Command::Gf { .. } => "gf",
        Command::Repro { .. } => "repro",
        Command::Evil { .. } => "evil",
        Command::Dfao { .. } => "dfao",
        Command::Kernel { .. } => "kernel",
        Command::Linrep { .. } => "linrep",
        Command::Poles { .. } => "poles",
        Command::Oeis { .. } => "oeis",
        Command::Spec { .. } => "spec",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx { manifest: RunManifest::new(command_name(&cli.cmd)), out: cli.out, buf: Vec::new(), status: 0 };
    let res = run(cli.cmd, &mut ctx).and_then(|()| ctx.finish());
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command, ctx: &mut Ctx) -> CmdResult {
    match cmd {
        Command::Count { spec, upto, oracle, csv, fit } => cmd_count(ctx, &spec, upto, oracle, csv, fit),
        Command::Abscissa { spec, method, empirical } => cmd_abscissa(ctx, &spec, method, empirical),
        Command::Eval { spec, z, depth, prefix } => {
            let s = ctx.spec(&spec)?;
            ctx.param("z", z);
            ctx.param("depth", &depth);
            ctx.param("prefix", prefix);
            if depth.len() != 2 {
                return Err(Fail { code: EXIT_INPUT, msg: "--depth takes two values: L0,L".into() });
            }
            let b = dirichlet::evaluate(&s, z, depth[0], depth[1], prefix)?;
            if ctx.out.json {
                ctx.emit_json(&b);
            } else {
                ctx.line(format!("F({z}) in [{:e}, {:e}]  (width {:e})", b.lower, b.upper, b.width()));
                for w in &b.warnings {
                    ctx.line(format!("warning: {w}"));
                }
            }
            Ok(())
        }
        Command::Summatory { spec, n, power, trace } => cmd_summatory(ctx, &spec, n, power, trace),
        Command::Gf { base, even, odd, terms } => cmd_gf(ctx, base, &even, &odd, terms),
        Command::Repro { fixtures, only } => cmd_repro(ctx, fixtures, only),
        Command::Evil { cmd } => cmd_evil(ctx, cmd),
        Command::Dfao { spec, lift, dot } => {
            let s = ctx.spec(&spec)?;
            ctx.param("lift", lift);
            let d = dfao_from_spec(&s)?.lift(lift)?;
            if dot {
                ctx.line(d.to_dot().trim_end());
            } else {
                ctx.emit_json(&d);
            }
            Ok(())
        }
        Command::Kernel { spec, depth, terms } => {
            let s = ctx.spec(&spec)?;
            ctx.param("depth", depth);
            ctx.param("terms", terms);
            let k = kernel_sequences(&dfao_from_spec(&s)?, depth, terms);
            ctx.emit_json(&serde_json::json!({ "size": k.len(), "heuristic": true, "elements": k }));
            Ok(())
        }
        Command::Linrep { spec, lift, reduce } => {
            let s = ctx.spec(&spec)?;
            ctx.param("lift", lift);
            ctx.param("reduce", reduce);
            let d = dfao_from_spec(&s)?.lift(lift)?;
            let r = if reduce { LinearRepresentation::from_dfao(&d).reduce() } else { LinearRepresentation::trimmed(&d) };
            ctx.emit_json(&r);
            Ok(())
        }
        Command::Poles { spec, lift, n_max, l_max } => cmd_poles(ctx, &spec, lift, n_max, l_max),
        Command::Oeis { cmd } => cmd_oeis(ctx, cmd),
        Command::Spec { spec } => {
            let s = ctx.spec(&spec)?;
            ctx.emit_json(&spec_to_json(&s));
            Ok(())
        }
    }
}

fn cmd_count(ctx: &mut Ctx, source: &str, upto: usize, oracle: bool, csv: bool, fit: Option<usize>) -> CmdResult {
    let spec = ctx.spec(source)?;
    ctx.param("upto", upto);
    ctx.param("oracle", oracle);
    let counts = count_series(&spec, upto)?;
    let brute: Option<Vec<u64>> =
        if oracle { Some((0..=upto).map(|n| brute_count(&spec, n)).collect::<Result<_, _>>()?) } else { None };
    let mismatches: Vec<usize> = match &brute {
        Some(b) => (0..=upto).filter(|&n| counts.values[n] != BigUint::from(b[n])).collect(),
        None => vec![],
    };
    let rec = fit.and_then(|k| fit_recurrence(&counts.as_bigints(), k));
    if ctx.out.json {
        ctx.emit_json(&serde_json::json!({
            "spec": counts.spec,
            "counts": counts.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "oracle": brute.as_ref().map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
            "mismatches": mismatches,
            "recurrence": rec.as_ref().map(|r| r.to_string()),
        }));
    } else if csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["n", "count"];
        if brute.is_some() {
            header.push("oracle");
        }
        w.write_record(&header).map_err(csv_err)?;
        for (n, c) in counts.values.iter().enumerate() {
            let mut row = vec![n.to_string(), c.to_string()];
            if let Some(b) = &brute {
                row.push(b[n].to_string());
            }
            w.write_record(&row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Fail { code: EXIT_INPUT, msg: e.to_string() })?;
        ctx.buf.extend_from_slice(&bytes);
    } else {
        for (n, c) in counts.values.iter().enumerate() {
            match &brute {
                Some(b) => ctx.line(format!("{n}\t{c}\t{}", b[n])),
                None => ctx.line(format!("{n}\t{c}")),
            }
        }
        if let Some(r) = &rec {
            ctx.line(format!("# {r}"));
        }
    }
    if !mismatches.is_empty() {
        eprintln!("oracle mismatch at n = {mismatches:?}");
        ctx.status = EXIT_VERIFY;
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Fail {
    Fail { code: EXIT_INPUT, msg: e.to_string() }
}

fn cmd_abscissa(ctx: &mut Ctx, source: &str, method: MethodArg, empirical: Option<u32>) -> CmdResult {
    let spec = ctx.spec(source)?;
    ctx.param("method", Method::from(method));
    let mut rep = dirichlet::exact_abscissa_with(&spec, method.into())?;
    if let Some(k) = empirical {
        ctx.param("empirical", k);
        rep.trace = Some(dirichlet::empirical_abscissa(&spec, k)?);
    }
    if ctx.out.json {
        ctx.emit_json(&rep);
    } else {
        let class = serde_json::to_value(rep.classification).unwrap_or_default();
        ctx.line(format!("classification: {}", class.as_str().unwrap_or_default()));
        ctx.line(format!("sigma in [{:.15}, {:.15}]", rep.sigma.0, rep.sigma.1));
        if let Some(e) = &rep.exact {
            ctx.line(format!("exact: sigma = {e}"));
        }
        if let Some(p) = &rep.defining_polynomial {
            ctx.line(format!("defining polynomial: {p} (period {})", rep.period));
        }
        if let Some(d) = rep.polylog_degree {
            ctx.line(format!("polylog degree: {d}"));
        }
        if let Some(t) = &rep.trace {
            for r in &t.rows {
                ctx.line(format!("k={}\tA={}\tratio={:.6}", r.k, r.a, r.ratio));
            }
        }
        for n in &rep.notes {
            ctx.line(format!("note: {n}"));
        }
    }
    Ok(())
}

fn cmd_summatory(ctx: &mut Ctx, source: &str, n: Option<String>, power: Option<u32>, trace: Option<u32>) -> CmdResult {
    let spec = ctx.spec(source)?;
    if let Some(k) = trace {
        ctx.param("trace", k);
        let t = dirichlet::empirical_abscissa(&spec, k)?;
        ctx.emit_json(&t);
        return Ok(());
    }
    let n: BigUint = match (n, power) {
        (Some(s), _) => s.parse().map_err(|_| Fail { code: EXIT_INPUT, msg: format!("bad N {s:?}") })?,
        (None, Some(k)) => BigUint::from(spec.base).pow(k),
        (None, None) => return Err(Fail { code: EXIT_INPUT, msg: "give N, --power or --trace".into() }),
    };
    ctx.param("n", n.to_string());
    let a = dirichlet::summatory(&spec, &n)?;
    if ctx.out.json {
        ctx.emit_json(&serde_json::json!({ "n": n.to_string(), "count": a.to_string() }));
    } else {
        ctx.line(a.to_string());
    }
    Ok(())
}

fn blocks(v: &[String], base: u32) -> Result<Vec<Vec<u8>>, Fail> {
    Ok(v.iter().filter(|s| !s.is_empty()).map(|s| parse_block(s, base)).collect::<Result<_, _>>()?)
}

fn cmd_gf(ctx: &mut Ctx, base: u32, even: &[String], odd: &[String], terms: usize) -> CmdResult {
    ctx.param("base", base);
    ctx.param("even", even);
    ctx.param("odd", odd);
    let set = primed_alphabet_patterns(base, &blocks(even, base)?, &blocks(odd, base)?)?;
    let gf = gj_generating_function(&set)?;
    let coeffs = gf_coefficients(&gf, terms)?;
    if ctx.out.json {
        ctx.emit_json(&serde_json::json!({
            "gf": gf,
            "display": gf.to_string(),
            "patterns": set.len(),
            "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }));
    } else {
        ctx.line(gf.to_string());
        ctx.line(format!("# {}", coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")));
    }
    Ok(())
}

fn cmd_repro(ctx: &mut Ctx, fixtures: Option<PathBuf>, only: Vec<u8>) -> CmdResult {
    ctx.param("fixtures", fixtures.as_ref().map(|p| p.display().to_string()));
    ctx.param("only", &only);
    let opts = ReproOptions { fixtures };
    let report = if only.is_empty() {
        repro::run_all(&opts)
    } else {
        let criteria: Vec<_> = only.iter().map(|&id| repro::run_criterion(id, &opts)).collect();
        let all_passed = criteria.iter().all(|c| c.passed);
        repro::ReproReport { criteria, all_passed }
    };
    if ctx.out.json {
        ctx.emit_json(&report);
    } else {
        for c in &report.criteria {
            ctx.line(c.to_string());
        }
    }
    if !report.all_passed {
        ctx.status = EXIT_VERIFY;
    }
    Ok(())
}

fn cmd_evil(ctx: &mut Ctx, cmd: EvilCmd) -> CmdResult {
    match cmd {
        EvilCmd::Count { upto, closed } => {
            ctx.param("upto", upto);
            ctx.param("closed", closed);
            let u = evilwords::count_lj_upto(upto);
            let c = if closed && upto >= 2 { Some(evilwords::count_lj_closed_upto(upto as u64)?) } else { None };
            let mut bad = Vec::new();
            if let Some(c) = &c {
                bad = (2..=upto).filter(|&n| c[n - 2] != u[n]).collect();
            }
            if ctx.out.json {
                ctx.emit_json(&serde_json::json!({
                    "counts": u.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "closed_form_mismatches": bad,
                }));
            } else {
                for (n, v) in u.iter().enumerate() {
                    let case = evilwords::RatioCase::of(n).map(|r| format!("{:?}", r)).unwrap_or_default();
                    ctx.line(format!("{n}\t{v}\t{case}"));
                }
            }
            if !bad.is_empty() {
                ctx.status = EXIT_VERIFY;
            }
        }
        EvilCmd::Witness { imax } => {
            ctx.param("imax", imax);
            let w = evilwords::nonregularity_witness(imax);
            if !w.all_match {
                ctx.status = EXIT_VERIFY;
            }
            ctx.emit_json(&w);
        }
        EvilCmd::Abscissa => {
            ctx.emit_json(&evilwords::abscissa_lj());
        }
        EvilCmd::Envelope { nmax } => {
            ctx.param("nmax", nmax);
            ctx.emit_json(&evilwords::growth_envelope(nmax));
        }
    }
    Ok(())
}

fn cmd_poles(ctx: &mut Ctx, source: &str, lift: u32, n_max: i64, l_max: i64) -> CmdResult {
    let spec = ctx.spec(source)?;
    ctx.param("lift", lift);
    let rep = LinearRepresentation::trimmed(&dfao_from_spec(&spec)?.lift(lift)?);
    let dg = spectral::dg_applicable(&rep.matrices, spectral::DEFAULT_TOL);
    let sum = rep.int_sum_matrix();
    let pole = sum.as_ref().and_then(|m| spectral::simple_pole(m, rep.base, spectral::DEFAULT_TOL));
    let eigs = spectral::approximate_roots(&rep.sum_matrix().char_poly());
    let cands = spectral::candidate_poles(&eigs, rep.base, -n_max..=n_max, 0..=l_max);
    ctx.emit_json(&serde_json::json!({
        "base": rep.base,
        "dimension": rep.dim(),
        "dg": dg,
        "simple_pole": pole.map(|(lo, hi)| [digitlang::manifest::fmt_f64(lo), digitlang::manifest::fmt_f64(hi)]),
        "candidates": cands,
    }));
    Ok(())
}

fn store(fixtures: &Option<PathBuf>) -> Result<FixtureStore, Fail> {
    Ok(match fixtures {
        Some(d) => FixtureStore::from_dir(d)?,
        None => FixtureStore::bundled()?,
    })
}

fn lookup(ctx: &mut Ctx, terms: &[num_bigint::BigInt], limit: usize, src: &SourceArgs) -> CmdResult {
    ctx.param("online", src.online);
    let s = store(&src.fixtures)?;
    let mut client = if src.online { OeisClient::online(s) } else { OeisClient::offline(s) };
    let outcome = client.lookup(terms, limit)?;
    if ctx.out.json {
        ctx.emit_json(&outcome);
    } else {
        if let Some(e) = &outcome.error {
            ctx.line(format!("# degraded: {e}"));
        }
        for m in &outcome.matches {
            ctx.line(format!(
                "{}\t{}\tquery+{} entry+{}\t{}",
                m.a_number,
                serde_json::to_value(m.kind).unwrap_or_default().as_str().unwrap_or_default(),
                m.query_start,
                m.entry_start,
                m.name
            ));
        }
    }
    Ok(())
}

fn cmd_oeis(ctx: &mut Ctx, cmd: OeisCmd) -> CmdResult {
    match cmd {
        OeisCmd::Lookup { terms, limit, src } => {
            let t = terms
                .iter()
                .map(|s| s.trim().parse())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Fail { code: EXIT_INPUT, msg: format!("bad term: {e}") })?;
            ctx.param("terms", &terms);
            lookup(ctx, &t, limit, &src)
        }
        OeisCmd::Counts { spec, upto, limit, src } => {
            let s = ctx.spec(&spec)?;
            ctx.param("upto", upto);
            let t = count_series(&s, upto)?.as_bigints();
            lookup(ctx, &t, limit, &src)
        }
        OeisCmd::Catalog { fixtures } => {
            ctx.param("fixtures", fixtures.as_ref().map(|p| p.display().to_string()));
            let r = oeis::crosscheck_catalog(&store(&fixtures)?)?;
            if ctx.out.json {
                ctx.emit_json(&r);
            } else {
                for row in &r.rows {
                    let how = row
                        .matched
                        .as_ref()
                        .map(|m| format!("query+{} entry+{}", m.query_start, m.entry_start))
                        .unwrap_or_default();
                    ctx.line(format!("{}\t{:?}\t{}\t{how}", row.a_number, row.status, row.label));
                }
            }
            if !r.all_ok {
                ctx.status = EXIT_VERIFY;
            }
            Ok(())
        }
        OeisCmd::Fetch { numbers, dir } => {
            ctx.param("numbers", &numbers);
            let mut client = OeisClient::online(FixtureStore::default());
            std::fs::create_dir_all(&dir)?;
            for a in &numbers {
                let e = client.fetch(a)?;
                let path = Path::new(&dir).join(format!("{a}.json"));
                std::fs::write(&path, e.to_json())?;
                ctx.manifest.outputs.push(path.display().to_string());
                ctx.line(format!("{a}\t{} terms", e.terms.len()));
            }
            Ok(())
        }
    }
}
