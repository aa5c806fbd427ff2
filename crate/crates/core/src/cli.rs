//! The `kronforge` command line.
//!
//! Partition arguments are comma-separated parts (`6,6,3,2,1,1`) or a rectangle
//! `n x d` (n rows of length d). Output is tab-separated text, or JSON with
//! `--json`. Exit codes: 0 success, 1 domain error, 2 oracle budget refusal,
//! 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::coefficients::{
    kronecker, limit_a_rho, limit_a_rho_d, littlewood_richardson, plethysm_a, rectangular_kronecker, Budget,
    MultiplicityResult,
};
use crate::error::{Error, Result};
use crate::gct::main_verdict;
use crate::hooks::{hook_genfun, hook_kron, vanishing_set};
use crate::partition::{KroneckerTriple, Partition};
use crate::positivity::{
    audit, columns_rule_cert, decompose, even_rows_cert, from_json, hook_cert, main_cert, near_hook_cert,
    rect_block_cert, saturation_witness, stretched_hook_cert, to_json, AuditOutcome, Axiom, Certificate,
};
use crate::symfun::{global_cache, CharacterCache};

const CACHE_ENV: &str = "KRONFORGE_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "kronforge",
    version,
    about = "Exact rectangular Kronecker coefficients, positivity certificates and no-go verdicts",
    after_help = "Partitions: comma-separated parts (6,6,3) or a rectangle \"n x d\" (n rows of length d).\n\
                  Text output: one tab-separated record per line.\n\
                  Exit codes: 0 ok, 1 domain error, 2 budget refusal, 3 verification failure.\n\
                  KRONFORGE_CACHE: path of a persistent character cache."
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit JSON instead of tab-separated text.
    #[arg(long, global = true)]
    json: bool,
    /// Oracle size limit (N for Kronecker, d·n for plethysm).
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
    /// Worker threads for the oracles.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    /// Lift every oracle budget.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kronecker coefficient g(λ, μ, ν). Text: the value.
    Kron {
        #[arg(long, value_parser = shape)]
        lam: Partition,
        #[arg(long, value_parser = shape)]
        mu: Partition,
        #[arg(long, value_parser = shape)]
        nu: Partition,
    },
    /// Littlewood–Richardson coefficient c^λ_{θτ}. Text: the value.
    Lr {
        #[arg(long, value_parser = shape)]
        lam: Partition,
        #[arg(long, value_parser = shape)]
        theta: Partition,
        #[arg(long, value_parser = shape)]
        tau: Partition,
    },
    /// Plethysm coefficient a_λ(d[n]). Text: the value.
    Pleth {
        #[arg(long, value_parser = shape)]
        lam: Partition,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
    },
    /// Stable limit a_ρ, or a_ρ(d) with --d. Text: the value.
    Limit {
        #[arg(long, value_parser = shape)]
        rho: Partition,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Hook coefficient g((nd−k,1^k), d×n, d×n). Text columns with --table: d, k, g_k.
    Hook {
        #[arg(long)]
        d: u64,
        /// Defaults to d.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, required_unless_present = "table")]
        k: Option<u64>,
        #[arg(long)]
        table: bool,
    },
    /// Grid of g(ρ(nd), n×d, n×d), 0 where ρ(nd) is not a partition. Text: header row of d, one row per n; "?" over budget.
    Tables {
        #[arg(long, value_parser = shape)]
        rho: Partition,
        #[arg(long, default_value_t = 6)]
        max: u64,
    },
    /// Decomposition of ν into rectangles, double columns, single columns and a leftover ρ. Text: field, value.
    Decompose {
        #[arg(long, value_parser = shape)]
        nu: Partition,
    },
    /// Emit a positivity certificate as canonical JSON.
    Certify {
        #[command(subcommand)]
        kind: CertKind,
    },
    /// Verify a certificate read from --file or stdin. Text: root triple and leaf counts.
    VerifyCert {
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Settle λ against n×d, n×d for orbit closures of size m. Text: outcome, then trace rules.
    Verdict {
        #[arg(long, value_parser = shape)]
        lam: Partition,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
    },
    /// Integer combination of certified rectangular triples summing to λ. Text: coefficient, λ-part.
    Saturation {
        #[arg(long, value_parser = shape)]
        lam: Partition,
        #[arg(long)]
        d: u64,
    },
    /// Built-in checks. Text: one ok/FAIL line per check.
    Selftest {
        #[arg(long, conflicts_with = "extended")]
        quick: bool,
        /// Oracle re-check of every axiom instance; progress on stderr.
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CertKind {
    /// ((k−1)×(sk), a×(ks), a×(ks)).
    RectBlock {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        a: u64,
    },
    /// ((hw−j, 1^j), h×w, h×w).
    Hook {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        w: u64,
        #[arg(long)]
        j: u64,
    },
    /// ((hw−j−|ρ|, 1^j + ρ), h×w, h×w).
    NearHook {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        w: u64,
        #[arg(long)]
        j: u64,
        #[arg(long, value_parser = shape)]
        rho: Partition,
    },
    /// (ν(ab), a×b, a×b).
    Main {
        #[arg(long, value_parser = shape)]
        nu: Partition,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// (i·(m²−k, 1^k), m×(im), m×(im)).
    Stretched {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
    },
    /// (ρ(m·w), m×w, m×w) for ρ with even rows.
    EvenRows {
        #[arg(long, value_parser = shape)]
        rho: Partition,
        #[arg(long)]
        m: u64,
    },
    /// (ρ(nd), d×n, d×n) from column multiplicities.
    Columns {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = shape)]
        rho: Partition,
    },
}

fn shape(s: &str) -> std::result::Result<Partition, String> {
    Partition::parse_shape(s).map_err(|e| e.to_string())
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 2,
        Error::Verification(_) => 3,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command. Standard
/// input is read only by `verify-cert` without `--file`.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_input(args, || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    })
}

/// [`run`] with standard input supplied by `stdin`.
pub fn run_with_input<I, T>(args: I, stdin: impl FnOnce() -> Result<String> + Send) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let cache_path = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(path) = cache_path.as_deref().filter(|p| p.exists()) {
        match CharacterCache::load(path) {
            Ok(c) => global_cache().absorb(c),
            Err(e) => return failure(&e, String::new()),
        }
    }
    let result = match cli.global.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, stdin)),
            Err(e) => Err(Error::precondition(format!("cannot start {k} threads: {e}"))),
        },
        None => dispatch(&cli, stdin),
    };
    let mut out = match result {
        Ok(o) => o,
        Err(e) => failure(&e, String::new()),
    };
    if let Some(path) = cache_path {
        if let Err(e) = global_cache().save(&path) {
            let _ = writeln!(out.stderr, "warning: could not save character cache: {e}");
        }
    }
    out
}

fn failure(e: &Error, stdout: String) -> Output {
    Output { code: exit_code(e), stdout, stderr: format!("error: {e}\n") }
}

fn ok(stdout: String) -> Result<Output> {
    Ok(Output { code: 0, stdout, stderr: String::new() })
}

fn budget(g: &Global) -> Budget {
    if g.force {
        Budget::unbounded()
    } else {
        g.budget.map(Budget::uniform).unwrap_or_default()
    }
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn value_out(g: &Global, schema: &str, args: Value, r: &MultiplicityResult) -> String {
    if g.json {
        json_line(json!({
            "schema": schema,
            "args": args,
            "value": r.value.to_string(),
            "method": r.method,
            "cost": r.cost,
        }))
    } else {
        format!("{}\n", r.value)
    }
}

fn dispatch(cli: &Cli, stdin: impl FnOnce() -> Result<String> + Send) -> Result<Output> {
    let g = &cli.global;
    let b = budget(g);
    match &cli.command {
        Command::Kron { lam, mu, nu } => {
            let r = kronecker(lam, mu, nu, &b)?;
            ok(value_out(g, "kron-v1", json!({ "lam": lam, "mu": mu, "nu": nu }), &r))
        }
        Command::Lr { lam, theta, tau } => {
            let r = littlewood_richardson(lam, theta, tau)?;
            ok(value_out(g, "lr-v1", json!({ "lam": lam, "theta": theta, "tau": tau }), &r))
        }
        Command::Pleth { lam, d, n } => {
            let r = plethysm_a(lam, *d, *n, &b)?;
            ok(value_out(g, "pleth-v1", json!({ "lam": lam, "d": d, "n": n }), &r))
        }
        Command::Limit { rho, d } => {
            let r = match d {
                Some(d) => limit_a_rho_d(rho, *d, &b)?,
                None => limit_a_rho(rho, &b)?,
            };
            ok(value_out(g, "limit-v1", json!({ "rho": rho, "d": d }), &r))
        }
        Command::Hook { d, n, k, table } => hook_cmd(g, *d, n.unwrap_or(*d), *k, *table),
        Command::Tables { rho, max } => tables_cmd(g, rho, *max, &b),
        Command::Decompose { nu } => {
            let dec = decompose(nu)?;
            dec.check(nu)?;
            if g.json {
                return ok(json_line(json!({ "schema": "decompose-v1", "nu": nu, "decomposition": dec })));
            }
            let map = |m: &std::collections::BTreeMap<u64, u64>| {
                m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(",")
            };
            let mut s = String::new();
            let _ = writeln!(s, "rho\t{}", dec.rho);
            let _ = writeln!(s, "case\t{}", dec.rho_case);
            let _ = writeln!(s, "xi\t{}", dec.xi);
            let _ = writeln!(s, "x\t{}", map(&dec.x));
            let _ = writeln!(s, "y\t{}", map(&dec.y));
            if let Some(e) = &dec.eta {
                let _ = writeln!(s, "eta\t{e}");
            }
            if let Some(c) = dec.column {
                let _ = writeln!(s, "column\t{c}");
            }
            ok(s)
        }
        Command::Certify { kind } => {
            let cert = build_cert(kind)?;
            cert.verify(&b)?;
            ok(format!("{}\n", to_json(&cert)))
        }
        Command::VerifyCert { file } => {
            let text = match file {
                Some(p) => std::fs::read_to_string(p)?,
                None => stdin()?,
            };
            let cert = from_json(&text).map_err(|e| match e {
                Error::Malformed(m) => Error::Verification(format!("unreadable certificate: {m}")),
                Error::Json(j) => Error::Verification(format!("unreadable certificate: {j}")),
                other => other,
            })?;
            let root = cert.verify(&b)?;
            let (o, cf, ax) = cert.leaf_tiers();
            if g.json {
                return ok(json_line(json!({
                    "schema": "verify-v1",
                    "valid": true,
                    "root": root.as_array(),
                    "nodes": cert.node_count(),
                    "leaves": { "oracle": o, "closed-form": cf, "axiom": ax },
                })));
            }
            ok(format!(
                "valid\t{root}\nnodes\t{}\noracle\t{o}\nclosed-form\t{cf}\naxiom\t{ax}\n",
                cert.node_count()
            ))
        }
        Command::Verdict { lam, n, d, m } => {
            let v = main_verdict(lam, *n, *d, *m)?;
            if g.json {
                return ok(json_line(v.to_json()));
            }
            let mut s = format!("{}\n", v.outcome);
            for t in &v.trace {
                let _ = writeln!(s, "{}\t{}", t.rule, t.params);
            }
            ok(s)
        }
        Command::Saturation { lam, d } => {
            let w = saturation_witness(lam, *d)?;
            w.verify(&b)?;
            if g.json {
                let terms: Vec<Value> = w
                    .terms
                    .iter()
                    .map(|(c, k)| json!({ "coefficient": k, "triple": c.triple.as_array() }))
                    .collect();
                return ok(json_line(json!({ "schema": "saturation-v1", "lam": lam, "d": d, "terms": terms })));
            }
            let mut s = String::new();
            for (c, k) in &w.terms {
                let _ = writeln!(s, "{k}\t{}", c.triple.lam);
            }
            ok(s)
        }
        Command::Selftest { extended, .. } => {
            if *extended {
                selftest_extended(g, &b)
            } else {
                selftest_quick(g)
            }
        }
    }
}

fn hook_cmd(g: &Global, d: u64, n: u64, k: Option<u64>, table: bool) -> Result<Output> {
    if !table {
        let k = k.expect("clap requires --k without --table");
        let v = hook_kron(d, n, k)?;
        if g.json {
            return ok(json_line(json!({ "schema": "hook-v1", "d": d, "n": n, "k": k, "value": v.to_string() })));
        }
        return ok(format!("{v}\n"));
    }
    if d == 0 || n < d {
        return Err(Error::precondition(format!("hook table needs n >= d >= 1 (d = {d}, n = {n})")));
    }
    let values: Vec<String> = (0..n * d).map(|k| hook_kron(d, n, k).map(|v| v.to_string())).collect::<Result<_>>()?;
    if g.json {
        return ok(json_line(json!({ "schema": "hook-table-v1", "d": d, "n": n, "g": values })));
    }
    let mut s = String::from("d\tk\tg_k\n");
    for (k, v) in values.iter().enumerate() {
        let _ = writeln!(s, "{d}\t{k}\t{v}");
    }
    ok(s)
}

fn tables_cmd(g: &Global, rho: &Partition, max: u64, b: &Budget) -> Result<Output> {
    let mut grid = Vec::new();
    for n in 1..=max {
        let mut row = Vec::new();
        for d in 1..=max {
            let cell = match rectangular_kronecker(rho, n, d, b) {
                Ok(r) => Some(r.value.to_string()),
                Err(Error::BudgetExceeded { .. }) => Some("?".to_string()),
                Err(Error::Precondition(_)) | Err(Error::InvalidPartition(_)) => None,
                Err(e) => return Err(e),
            };
            row.push(cell);
        }
        grid.push(row);
    }
    if g.json {
        return ok(json_line(json!({ "schema": "tables-v1", "rho": rho, "max": max, "rows": grid })));
    }
    let mut s = String::from("n\\d");
    for d in 1..=max {
        let _ = write!(s, "\t{d}");
    }
    s.push('\n');
    for (n, row) in grid.iter().enumerate() {
        let _ = write!(s, "{}", n + 1);
        for c in row {
            let _ = write!(s, "\t{}", c.as_deref().unwrap_or("-"));
        }
        s.push('\n');
    }
    ok(s)
}

fn build_cert(kind: &CertKind) -> Result<Certificate> {
    match kind {
        CertKind::RectBlock { k, s, a } => rect_block_cert(*k, *s, *a),
        CertKind::Hook { h, w, j } => hook_cert(*h, *w, *j),
        CertKind::NearHook { h, w, j, rho } => near_hook_cert(*h, *w, *j, rho),
        CertKind::Main { nu, a, b } => main_cert(nu, *a, *b),
        CertKind::Stretched { i, m, k } => stretched_hook_cert(*i, *m, *k),
        CertKind::EvenRows { rho, m } => even_rows_cert(rho, *m),
        CertKind::Columns { d, n, rho } => columns_rule_cert(*d, *n, rho),
    }
}

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

type Check = (&'static str, fn() -> Result<bool>);

fn quick_checks() -> Vec<Check> {
    vec![
        ("kronecker 6x3 cube is 1", || {
            let r = Partition::rectangle(6, 3);
            Ok(kronecker(&r, &r, &r, &Budget::uniform(22))?.as_u64() == 1)
        }),
        ("kronecker 6x2 cube is 0", || {
            let r = Partition::rectangle(6, 2);
            Ok(kronecker(&r, &r, &r, &Budget::uniform(22))?.as_u64() == 0)
        }),
        ("hook oracle equals generating function, d=3 n=4", || {
            let gf = hook_genfun(3)?;
            let r = Partition::rectangle(3, 4);
            for k in 0..12 {
                let v = kronecker(&Partition::hook(12 - k, k)?, &r, &r, &Budget::uniform(22))?.value;
                if hook_kron(3, 4, k)? != v {
                    return Ok(false);
                }
                if k < 9 && gf.coeff(k as usize) != hook_kron(3, 3, k)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("hook zeros for d=3 are 1,2,4,6,7", || Ok(vanishing_set(3)?.into_iter().collect::<Vec<_>>() == [1, 2, 4, 6, 7])),
        ("hook generating function d=13 spot coefficients", || {
            let gf = hook_genfun(13)?;
            Ok([(26, 6u32), (22, 4), (16, 3), (12, 2), (5, 1)].iter().all(|&(e, c)| gf.coeff(e) == c.into()))
        }),
        ("limit a_(6)(2) is 1", || Ok(limit_a_rho_d(&p(&[6]), 2, &Budget::uniform(22))?.as_u64() == 1)),
        ("plethysm of exceptional shapes vanishes, nd <= 12", || {
            for (d, n) in [(2, 3), (3, 2), (3, 3), (2, 6), (3, 4), (4, 3)] {
                for rho in crate::positivity::EXCEPTIONAL {
                    let Ok(lam) = p(rho).pad(d * n) else { continue };
                    if plethysm_a(&lam, d, n, &Budget::uniform(22))?.is_positive() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        ("decomposition of every ν with |ν| <= 10", || {
            for n in 1..=10 {
                for nu in crate::symfun::partitions_of(n, None, None) {
                    if crate::positivity::x_membership(&nu) {
                        continue;
                    }
                    decompose(&nu)?.check(&nu)?;
                }
            }
            Ok(true)
        }),
        ("stretched hook certificate i=5 m=7 k=3 verifies", || {
            let c = stretched_hook_cert(5, 7, 3)?;
            c.verify(&Budget::uniform(22))?;
            Ok(true)
        }),
        ("main certificate for (5,3,1) at 82x243 verifies", || {
            let c = main_cert(&p(&[5, 3, 1]), 82, 243)?;
            Ok(c.verify(&Budget::uniform(22))?.lam == p(&[5, 3, 1]).pad(82 * 243)?)
        }),
        ("tampered certificate is rejected", || {
            let text = to_json(&hook_cert(7, 7, 3)?);
            let bad = text.replacen("[46,1,1,1]", "[45,2,1,1]", 1);
            Ok(from_json(&bad)?.verify(&Budget::uniform(22)).is_err())
        }),
        ("saturation witness for (8,6) at d=7 sums exactly", || {
            saturation_witness(&p(&[8, 6]), 7)?.verify(&Budget::uniform(22))?;
            Ok(true)
        }),
        ("oracle-backed certificate leaf at N=9", || {
            let r = Partition::rectangle(3, 3);
            let t = KroneckerTriple::new(Partition::hook(6, 3)?, r.clone(), r)?;
            let c = Certificate::oracle(t)?;
            c.verify(&Budget::uniform(22))?;
            Ok(true)
        }),
    ]
}

fn selftest_quick(g: &Global) -> Result<Output> {
    let mut s = String::new();
    let mut failed = 0;
    let mut rows = Vec::new();
    for (name, check) in quick_checks() {
        let (good, detail) = match check() {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "wrong value".to_string()),
            Err(e) => (false, e.to_string()),
        };
        if !good {
            failed += 1;
        }
        rows.push(json!({ "check": name, "ok": good, "detail": detail }));
        if good {
            let _ = writeln!(s, "ok\t{name}");
        } else {
            let _ = writeln!(s, "FAIL\t{name}\t{detail}");
        }
    }
    let stdout = if g.json { json_line(json!({ "schema": "selftest-v1", "tier": "quick", "checks": rows })) } else { s };
    Ok(Output { code: if failed == 0 { 0 } else { 3 }, stdout, stderr: String::new() })
}

fn selftest_extended(g: &Global, b: &Budget) -> Result<Output> {
    let mut instances: Vec<Axiom> = (1..=5).map(|k| Axiom::Square { k }).collect();
    instances.extend(Axiom::finite_instances());
    let total = instances.len();
    let mut s = String::new();
    let mut rows = Vec::new();
    let mut refuted = 0;
    for (i, ax) in instances.iter().enumerate() {
        let (status, detail) = match audit(ax, b) {
            Ok(AuditOutcome::Confirmed { method, value }) => {
                ("ok", format!("{method} {}", value.map(|v| v.to_string()).unwrap_or_default()))
            }
            Ok(AuditOutcome::Refuted) => {
                refuted += 1;
                ("FAIL", "coefficient is zero".to_string())
            }
            Ok(AuditOutcome::Skipped(why)) => ("skip", why),
            Err(e) => {
                refuted += 1;
                ("FAIL", e.to_string())
            }
        };
        eprintln!("[{}/{total}] {status} {ax}", i + 1);
        rows.push(json!({ "axiom": ax.to_string(), "status": status, "detail": detail }));
        let _ = writeln!(s, "{status}\t{ax}\t{}", detail.trim_end());
    }
    let stdout = if g.json { json_line(json!({ "schema": "selftest-v1", "tier": "extended", "checks": rows })) } else { s };
    Ok(Output { code: if refuted == 0 { 0 } else { 3 }, stdout, stderr: String::new() })
}
