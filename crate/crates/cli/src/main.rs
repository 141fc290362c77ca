use clap::{Parser, Subcommand, ValueEnum};
use kvgt_core::cyclic::{project, tilde_delta};
use kvgt_core::dbk::{delta_alg, s_split, DoubleBracket};
use kvgt_core::error::AlgebraError;
use kvgt_core::expans::{mu_f_formula, Expansion};
use kvgt_core::grp::{self, FreeWord, GroupRingElt, LoopElt};
use kvgt_core::json::{solution_from_str, solution_to_string};
use kvgt_core::kv::{duflo_even_mismatches, duflo_even_prediction, duflo_series, kv_defects, solve, KVSolution};
use kvgt_core::ncalg::{Context, NCPoly, Poly, Series, Slot, Tensor};
use kvgt_core::suites::{run_suite, SuiteConfig, SuiteOutcome, SUITES};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const PASS: u8 = 0;
const CHECK_FAILED: u8 = 1;
const BREACH: u8 = 2;
const USAGE: u8 = 64;
const DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "kvgt", version, about = "Exact Goldman-Turaev / Kashiwara-Vergne calculus in genus zero")]
struct Cli {
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
    /// Solve KV I and KV II through degree N and write the solution as JSON.
    Solve {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Output file; the JSON goes to stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Solution file used by the MT, muF and delta-alg suites.
        #[arg(long)]
        sol: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Defaults to the degree of --sol, else 6.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the JSON result here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Duflo function h, g = h' and the even-part relation.
    Duflo {
        #[arg(long)]
        sol: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare a group-side operation with its algebraic counterpart on given words or loops.
    Transfer {
        #[arg(long)]
        sol: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// A loop such as "g1 g2^-1"; one gives δ⁺, two give the Goldman bracket.
        #[arg(long = "loop")]
        loops: Vec<String>,
        /// A word; one gives μ, two give κ.
        #[arg(long = "word")]
        words: Vec<String>,
    },
    /// Summarize JSON results written by `verify --out`.
    Report {
        #[arg(long = "in", num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// A failed command with its exit code.
struct Exit(u8, String);

type CmdResult = Result<u8, Exit>;

fn usage(msg: impl Into<String>) -> Exit {
    Exit(USAGE, msg.into())
}

fn data(msg: impl Into<String>) -> Exit {
    Exit(DATA, msg.into())
}

fn from_algebra(e: AlgebraError) -> Exit {
    match e {
        AlgebraError::Precondition(_) | AlgebraError::InvalidContext { .. } => usage(e.to_string()),
        AlgebraError::Parse(_) => data(e.to_string()),
        _ => Exit(BREACH, format!("internal invariant breach: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve { n, degree, out } => cmd_solve(n, degree, out.as_deref()),
        Command::Verify { suite, sol, n, degree, samples, seed, format, out } => {
            cmd_verify(&suite, sol.as_deref(), n, degree, samples, seed, format, out.as_deref())
        }
        Command::Duflo { sol, format } => cmd_duflo(&sol, format),
        Command::Transfer { sol, n, degree, loops, words } => cmd_transfer(sol.as_deref(), n, degree, &loops, &words),
        Command::Report { inputs, format } => cmd_report(&inputs, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("kvgt: {msg}");
            ExitCode::from(code)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Exit> {
    std::fs::write(path, text).map_err(|e| Exit(BREACH, format!("cannot write {}: {e}", path.display())))
}

fn load_solution(path: &Path) -> Result<KVSolution, Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| data(format!("cannot read {}: {e}", path.display())))?;
    solution_from_str(&text).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn check_size(n: usize, degree: usize) -> Result<(), Exit> {
    if n < 2 {
        return Err(usage(format!("n must be at least 2 (got {n})")));
    }
    if degree < 2 {
        return Err(usage(format!("degree must be at least 2 (got {degree})")));
    }
    Ok(())
}

fn cmd_solve(n: usize, degree: usize, out: Option<&Path>) -> CmdResult {
    check_size(n, degree)?;
    let sol = solve(n, degree).map_err(from_algebra)?;
    let d = kv_defects(&sol.f);
    if !d.is_zero() {
        return Err(Exit(BREACH, format!("internal invariant breach: defects d1 = {}, d2 = {}", d.d1, d.d2)));
    }
    let text = solution_to_string(&sol);
    let mut log = format!("solved KV I and KV II for n={n} N={degree}\n");
    if n > 2 {
        log.push_str(&format!("operadic extension of the n=2 solution to n={n}\n"));
    }
    for fac in &sol.log {
        log.push_str(&format!("factor {} degree {}\n", fac.stage, fac.degree));
    }
    log.push_str(&format!("h = {}\n", series_text(&sol.h)));
    match out {
        Some(path) => {
            write_file(path, &format!("{text}\n"))?;
            print!("{log}");
            println!("wrote {}", path.display());
        }
        None => {
            eprint!("{log}");
            println!("{text}");
        }
    }
    Ok(PASS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    sol: Option<&Path>,
    n: usize,
    degree: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    format: Format,
    out: Option<&Path>,
) -> CmdResult {
    if !SUITES.contains(&suite) {
        return Err(usage(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    }
    let solution = sol.map(load_solution).transpose()?;
    let degree = degree.or(solution.as_ref().map(|s| s.degree)).unwrap_or(6);
    check_size(n, degree)?;
    let cfg = SuiteConfig { n, degree, seed, samples, max_len: None, solution };
    let outcome = run_suite(suite, &cfg).map_err(from_algebra)?;
    let json = serde_json::to_string_pretty(&outcome).expect("serializable");
    if let Some(path) = out {
        write_file(path, &format!("{json}\n"))?;
    }
    match format {
        Format::Text => print!("{}", outcome.render_text()),
        Format::Json => println!("{json}"),
    }
    Ok(if outcome.passed() { PASS } else { CHECK_FAILED })
}

fn series_text(s: &Series) -> String {
    let parts: Vec<String> = s.coeffs().iter().enumerate().filter(|(_, c)| !num_is_zero(c)).map(|(k, c)| format!("({c})z^{k}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn num_is_zero(c: &kvgt_core::ncalg::Q) -> bool {
    c == &kvgt_core::ncalg::q(0)
}

fn cmd_duflo(sol: &Path, format: Format) -> CmdResult {
    let sol = load_solution(sol)?;
    let h = duflo_series(&sol.f).map_err(|e| data(format!("solution fails KV II: {e}")))?;
    if h != sol.h {
        return Err(data("stored h differs from the Duflo function read off from F"));
    }
    let g = h.derivative();
    let pred = duflo_even_prediction(g.degree());
    let g_odd = h.even_part().derivative();
    let mismatches = duflo_even_mismatches(&h);
    let verdict = if mismatches.is_empty() { "match mod linear" } else { "mismatch" };
    match format {
        Format::Text => {
            let mut t = String::new();
            let _ = writeln!(t, "Duflo function of a KV solution, n={} N={}", sol.n, sol.degree);
            let _ = writeln!(t, "{:>3}  {:>16}  {}", "k", "h_k", "status");
            for k in 2..=h.degree() {
                let status = if k % 2 == 0 { "fixed" } else { "gauge-dependent" };
                let _ = writeln!(t, "{:>3}  {:>16}  {}", k, h.coeff(k).to_string(), status);
            }
            let _ = writeln!(t, "g = h' = {}", series_text(&g));
            let _ = writeln!(t, "{:>3}  {:>16}  {:>16}", "k", "g_odd", "(1/2)(1/2+s)");
            for k in (1..=g.degree()).filter(|k| k % 2 == 1) {
                let _ = writeln!(t, "{:>3}  {:>16}  {:>16}", k, g_odd.coeff(k).to_string(), pred.coeff(k).to_string());
            }
            let _ = writeln!(t, "verdict: {verdict}");
            print!("{t}");
        }
        Format::Json => {
            let coeffs = |s: &Series| s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
            let v = serde_json::json!({
                "n": sol.n,
                "N": sol.degree,
                "h": coeffs(&h),
                "g": coeffs(&g),
                "g_odd": coeffs(&g_odd),
                "prediction": coeffs(&pred),
                "odd_h": "gauge-dependent",
                "verdict": verdict,
                "mismatched_degrees": mismatches,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
    Ok(if mismatches.is_empty() { PASS } else { CHECK_FAILED })
}

fn parse_words(args: &[String], n: usize) -> Result<Vec<FreeWord>, Exit> {
    args.iter()
        .map(|s| {
            let w = FreeWord::parse(s).map_err(|e| data(format!("{s:?}: {e}")))?;
            if w.rank() > n {
                return Err(data(format!("{s:?} uses a generator beyond n = {n}")));
            }
            Ok(w)
        })
        .collect()
}

/// Lowest nonzero degree part, or "0".
fn lowest<L: Slot, R: Slot>(t: &Tensor<L, R>) -> String {
    match t.low_degree() {
        Some(d) => format!("degree {d}: {}", fmt_tensor(&t.degree_part(d))),
        None => "0".into(),
    }
}

fn lowest_poly<K: Slot>(p: &Poly<K>) -> String {
    match p.low_degree() {
        Some(d) => format!("degree {d}: {}", p.degree_part(d)),
        None => "0".into(),
    }
}

fn fmt_tensor<L: Slot, R: Slot>(t: &Tensor<L, R>) -> String {
    let bar = |cyc: bool, w: &kvgt_core::ncalg::Word| if cyc { format!("|{w}|") } else { format!("{w}") };
    let parts: Vec<String> = t.terms().map(|((a, b), c)| format!("({c}){}⊗{}", bar(L::CYCLIC, a), bar(R::CYCLIC, b))).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn verdict(gap: Option<usize>, upto: usize) -> (String, u8) {
    match gap {
        None => (format!("agree through degree {upto}"), PASS),
        Some(d) => (format!("differ from degree {d}"), CHECK_FAILED),
    }
}

fn cmd_transfer(sol: Option<&Path>, n: usize, degree: usize, loops: &[String], words: &[String]) -> CmdResult {
    let sol = match sol {
        Some(p) => load_solution(p)?,
        None => {
            check_size(n, degree)?;
            solve(n, degree).map_err(from_algebra)?
        }
    };
    let ctx: Context = sol.f.ctx();
    let loops = parse_words(loops, ctx.n())?;
    let words = parse_words(words, ctx.n())?;
    let theta = Expansion::theta_from_taut(&sol.f);
    let n_top = ctx.degree();
    let mut t = format!("theta_F from a KV solution, n={} N={}\n", ctx.n(), n_top);
    let (gap, upto) = match (loops.as_slice(), words.as_slice()) {
        ([a, b], []) => {
            let (la, lb) = (LoopElt::word(a.clone()), LoopElt::word(b.clone()));
            let group = grp::goldman(&la, &lb);
            let lhs = project(&theta.expand(&group.lift()).map_err(from_algebra)?);
            let kks = DoubleBracket::kks(ctx);
            let rhs = kks.bracket(&theta.expand_cyc(&la).map_err(from_algebra)?, &theta.expand_cyc(&lb).map_err(from_algebra)?);
            let _ = writeln!(t, "Goldman bracket {{|{a}|, |{b}|}} = {group}");
            let _ = writeln!(t, "group side, lowest {}", lowest_poly(&lhs));
            let _ = writeln!(t, "algebra side {{θ|a|, θ|b|}}_KKS, lowest {}", lowest_poly(&rhs));
            ((&lhs - &rhs).low_degree(), n_top)
        }
        ([a], []) => {
            let la = LoopElt::word(a.clone());
            let group = grp::delta_plus(&la);
            let lhs = theta.expand_tensor(&group).map_err(from_algebra)?.project_both();
            let rhs = delta_alg(&theta.expand_cyc(&la).map_err(from_algebra)?);
            let upto = n_top - 1;
            let _ = writeln!(t, "δ⁺(|{a}|) has {} terms", group.terms().len());
            let _ = writeln!(t, "group side, lowest {}", lowest(&lhs));
            let _ = writeln!(t, "algebra side δ^alg(θ|a|), lowest {}", lowest(&rhs));
            ((&lhs - &rhs).truncated(upto).low_degree(), upto)
        }
        ([], [a, b]) => {
            let (ga, gb) = (GroupRingElt::word(a.clone()), GroupRingElt::word(b.clone()));
            let group = grp::kappa(&ga, &gb);
            let lhs = theta.expand_tensor(&group).map_err(from_algebra)?;
            let pi = DoubleBracket::pi_add(ctx);
            let rhs = pi.eval(&theta.expand(&ga).map_err(from_algebra)?, &theta.expand(&gb).map_err(from_algebra)?);
            let _ = writeln!(t, "κ({a}, {b}) has {} terms", group.terms().len());
            let _ = writeln!(t, "group side, lowest {}", lowest(&lhs));
            let _ = writeln!(t, "algebra side Π_add(θa, θb), lowest {}", lowest(&rhs));
            ((&lhs - &rhs).low_degree(), n_top)
        }
        ([], [a]) => {
            let ga = GroupRingElt::word(a.clone());
            let group = grp::mu(&ga);
            let lhs = theta.expand_tensor(&group).map_err(from_algebra)?.project_left();
            let ta = theta.expand(&ga).map_err(from_algebra)?;
            let g = sol.h.derivative();
            let s = s_split(ctx, &Series::s_function(n_top));
            let gt = tilde_delta(&g.eval(&-NCPoly::x0(ctx)));
            let rhs = mu_f_formula(&ta, &s, &gt);
            let upto = n_top - 1;
            let _ = writeln!(t, "μ({a}) has {} terms", group.terms().len());
            let _ = writeln!(t, "group side, lowest {}", lowest(&lhs));
            let _ = writeln!(t, "algebra side μ^alg + corrections, lowest {}", lowest(&rhs));
            ((&lhs - &rhs).truncated(upto).low_degree(), upto)
        }
        _ => return Err(usage("give two --loop, one --loop, two --word or one --word")),
    };
    let (text, code) = verdict(gap, upto);
    let _ = writeln!(t, "difference: {text}");
    print!("{t}");
    Ok(code)
}

fn cmd_report(inputs: &[PathBuf], format: Format) -> CmdResult {
    let mut outcomes: Vec<SuiteOutcome> = Vec::new();
    for path in inputs {
        let text = std::fs::read_to_string(path).map_err(|e| data(format!("cannot read {}: {e}", path.display())))?;
        let o: SuiteOutcome = serde_json::from_str(&text).map_err(|e| data(format!("{}: {e}", path.display())))?;
        outcomes.push(o);
    }
    let all = outcomes.iter().all(|o| o.passed());
    match format {
        Format::Text => {
            let mut t = format!("{:<14} {:>3} {:>3} {:>6} {:>8}  {}\n", "suite", "n", "N", "seed", "checks", "status");
            for o in &outcomes {
                let ok = o.checks.iter().filter(|c| c.passed).count();
                let checks = format!("{ok}/{}", o.checks.len());
                let status = if o.passed() { "pass" } else { "fail" };
                let _ = writeln!(t, "{:<14} {:>3} {:>3} {:>6} {:>8}  {}", o.suite, o.n, o.degree, o.seed, checks, status);
            }
            let _ = writeln!(t, "overall: {}", if all { "pass" } else { "fail" });
            print!("{t}");
        }
        Format::Json => {
            let v = serde_json::json!({ "passed": all, "suites": outcomes });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
    Ok(if all { PASS } else { CHECK_FAILED })
}
