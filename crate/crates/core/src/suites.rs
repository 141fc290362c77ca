//! Named verification suites: each runs a family of exact checks and reports pass/fail per check.

use crate::cyclic::tilde_delta_cyc;
use crate::dbk::{delta_alg, mu_alg, DoubleBracket};
use crate::deriv::{Derivation, TAutElement, TDerivation};
use crate::dvg::{c_coeff, div_big, div_small, j_int, tdiv, tdiv_via_div, tj_int};
use crate::error::{AlgebraError, Result};
use crate::expans::{exhaustive_words, transfer_check, Expansion, Report, SampleSet, Target};
use crate::grp::{self, FreeWord, GroupRingElt, LoopElt};
use crate::kv::{
    center_basis, center_bruteforce, commutant_pair_space, commutator_test, commutator_trace_kernel, inner_witness, kv_defects,
    sder_basis, solve, span_contains, KVSolution,
};
use crate::ncalg::{lyndon_basis, q, words_of_degree, words_up_to, Context, CyclicPoly, NCPoly, Series, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const SUITES: &[&str] = &["div-cocycle", "dext", "mult", "MT", "muF", "delta-alg", "center", "involutivity", "appendix"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub header: String,
    pub n: usize,
    #[serde(rename = "N")]
    pub degree: usize,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("== {} ==\n{}\nn={} N={} seed={}\n", self.suite, self.header, self.n, self.degree, self.seed);
        for c in &self.checks {
            s.push_str(&format!("[{}] {}: {}\n", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail));
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        s.push_str(&format!("result: {} ({}/{} checks)\n", if self.passed() { "pass" } else { "fail" }, ok, self.checks.len()));
        s
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub degree: usize,
    pub seed: u64,
    /// Number of random samples; each suite has its own default.
    pub samples: Option<usize>,
    /// Exhaustive word length bound; each suite has its own default.
    pub max_len: Option<usize>,
    /// A precomputed KV solution to use instead of solving.
    pub solution: Option<KVSolution>,
}

impl SuiteConfig {
    pub fn new(n: usize, degree: usize) -> Self {
        SuiteConfig { n, degree, seed: 0, samples: None, max_len: None, solution: None }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let (n, degree) = match &cfg.solution {
        Some(sol) if ["MT", "muF", "delta-alg"].contains(&name) => (sol.n, cfg.degree),
        _ => (cfg.n, cfg.degree),
    };
    let ctx = Context::new(n, degree)?;
    let (header, checks) = match name {
        "div-cocycle" => (
            "Div, c_i, tDiv and div are 1-cocycles on tangential derivations, and tDiv = Div∘ρ + Σ(c_i⊗1 − 1⊗c_i)",
            div_cocycle(ctx, cfg)?,
        ),
        "dext" => ("tDiv = Δ̃∘div on tangential derivations and tJ = Δ̃∘j on tangential automorphisms", dext(ctx, cfg)?),
        "mult" => (
            "The exponential expansion carries κ to Π_mult, and μ, μ_{*•}, δ⁺ to the divergences of Π_mult",
            mult(ctx, cfg)?,
        ),
        "MT" => (
            "A KV solution F gives a special expansion θ_F carrying κ to Π_add and the Goldman bracket to the KKS bracket",
            mt(ctx, cfg)?,
        ),
        "muF" => (
            "For a KV solution, μ_θ is μ^alg corrected by the s-function and the derivative of the Duflo function",
            mu_f(ctx, cfg)?,
        ),
        "delta-alg" => (
            "For a KV solution, δ⁺_θ = δ^alg = −tDiv_KKS; a non-central special perturbation produces exactly the predicted defect",
            delta_alg_suite(ctx, cfg)?,
        ),
        "center" => ("The center of (|A|, {−,−}_KKS) is spanned by 1 and the classes |x_i^d|, |x_0^d|", center(ctx)?),
        "involutivity" => ("{|x'|, x''} vanishes after μ, on the group ring and for μ^alg", involutivity(ctx, cfg)?),
        "appendix" => (
            "Inner derivations are recovered from their values, [x, A] is the kernel of a ↦ |a x^{m−1}|, and commutant pairs are powers",
            appendix(ctx, cfg)?,
        ),
        other => return Err(AlgebraError::Precondition(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    };
    Ok(SuiteOutcome { suite: name.to_string(), header: header.to_string(), n, degree, seed: cfg.seed, checks })
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.into(), passed, detail: detail.into() }
}

fn from_report(name: &str, r: &Report) -> CheckOutcome {
    let mut detail = format!("{}/{} ({}), {} vs {}, through degree {}", r.passed, r.samples, r.description, r.theta, r.target, r.compared_through);
    if let Some(s) = r.seed {
        detail.push_str(&format!(", seed {s}"));
    }
    if let Some(f) = &r.first_failure {
        detail.push_str(&format!("; first failure {} in degree {}", f.sample, f.degree));
    }
    check(name, r.passed(), detail)
}

fn counted(name: &str, total: usize, failures: &[String], what: &str) -> CheckOutcome {
    let mut detail = format!("{}/{} {what}", total - failures.len(), total);
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure {f}"));
    }
    check(name, failures.is_empty(), detail)
}

fn rng(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt))
}

/// Every (component, Lyndon basis element) tangential derivation of degree 1..=max.
fn lie_tder_basis(ctx: Context, max: usize) -> Vec<(usize, TDerivation)> {
    let mut out = Vec::new();
    for d in 1..=max {
        for b in lyndon_basis(ctx, d) {
            for i in 0..ctx.n() {
                let mut comps = vec![NCPoly::zero(ctx); ctx.n()];
                comps[i] = b.as_poly().clone();
                out.push((d, TDerivation::new(ctx, comps).expect("size")));
            }
        }
    }
    out
}

/// Random homogeneous tangential derivation with Lie components of degree d.
fn random_lie_tder(rng: &mut ChaCha8Rng, ctx: Context, d: usize) -> TDerivation {
    let basis = lyndon_basis(ctx, d);
    let comps = (0..ctx.n())
        .map(|_| {
            let mut p = NCPoly::zero(ctx);
            for b in &basis {
                let c: i64 = rng.gen_range(-2..=2);
                p.add_scaled(b.as_poly(), &q(c));
            }
            p
        })
        .collect();
    TDerivation::new(ctx, comps).expect("size")
}

fn random_inhomogeneous(rng: &mut ChaCha8Rng, ctx: Context, max: usize) -> TDerivation {
    let mut u = TDerivation::zero(ctx);
    for d in 1..=max {
        u = u.add(&random_lie_tder(rng, ctx, d));
    }
    u
}

/// Names of the cocycle identities that fail on [u, v], compared through `upto`.
fn cocycle_failures(u: &TDerivation, v: &TDerivation, upto: usize) -> Vec<&'static str> {
    let ctx = u.ctx();
    let w = u.bracket(v);
    let mut bad = Vec::new();
    let (ru, rv) = (u.rho(), v.rho());
    let big = &(&ru.apply_tensor(&div_big(&rv)) - &rv.apply_tensor(&div_big(&ru))) - &div_big(&w.rho());
    if !big.truncated(upto).is_zero() {
        bad.push("Div");
    }
    for i in 0..ctx.n() {
        let d = &(&u.act_cyclic(&c_coeff(v, i)) - &v.act_cyclic(&c_coeff(u, i))) - &c_coeff(&w, i);
        if !d.truncated(upto).is_zero() {
            bad.push("c_i");
            break;
        }
    }
    let t = &(&u.act_cyc_tensor(&tdiv(v)) - &v.act_cyc_tensor(&tdiv(u))) - &tdiv(&w);
    if !t.truncated(upto).is_zero() {
        bad.push("tDiv");
    }
    match (div_small(u), div_small(v), div_small(&w)) {
        (Ok(du), Ok(dv), Ok(dw)) => {
            if !(&(&u.act_cyclic(&dv) - &v.act_cyclic(&du)) - &dw).truncated(upto).is_zero() {
                bad.push("div");
            }
        }
        _ => bad.push("div (non-Lie input)"),
    }
    bad
}

fn div_cocycle(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let upto = ctx.degree() - 1;
    // All basis pairs through degree 4, in a context where their brackets are not truncated.
    // The identities are antisymmetric in (u, v), so unordered pairs suffice.
    let max = 4;
    let big = ctx.with_degree(ctx.degree().max(2 * max + 1));
    let basis = lie_tder_basis(big, max);
    let pairs: Vec<(&TDerivation, &TDerivation)> =
        basis.iter().enumerate().flat_map(|(k, (_, u))| basis[k..].iter().map(move |(_, v)| (u, v))).collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(u, v)| {
            let bad = cocycle_failures(u, v, big.degree());
            (!bad.is_empty()).then(|| format!("{} on ({:?}, {:?})", bad.join(","), u.comps(), v.comps()))
        })
        .collect();
    let mut out = vec![counted("cocycles on Lyndon basis pairs", pairs.len(), &failures, &format!("unordered pairs of degree <= {max}, exact"))];

    let count = cfg.samples.unwrap_or(100);
    let mut r = rng(cfg, 1);
    let random: Vec<(TDerivation, TDerivation)> = (0..count)
        .filter_map(|_| {
            if upto < 2 {
                return None;
            }
            let du = r.gen_range(1..upto);
            let dv = r.gen_range(1..=upto - du);
            Some((random_lie_tder(&mut r, ctx, du), random_lie_tder(&mut r, ctx, dv)))
        })
        .collect();
    let failures: Vec<String> = random
        .par_iter()
        .enumerate()
        .filter_map(|(k, (u, v))| {
            let bad = cocycle_failures(u, v, upto);
            (!bad.is_empty()).then(|| format!("{} on sample {k}", bad.join(",")))
        })
        .collect();
    out.push(counted("cocycles on random homogeneous pairs", random.len(), &failures, &format!("pairs, seed {}", cfg.seed)));

    let failures: Vec<String> = basis
        .iter()
        .filter(|(_, u)| tdiv(u) != tdiv_via_div(u))
        .map(|(_, u)| format!("{:?}", u.comps()))
        .collect();
    out.push(counted("tDiv through Div and c_i", basis.len(), &failures, &format!("basis elements of degree <= {max}")));
    Ok(out)
}

fn dext(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let upto = ctx.degree() - 1;
    let basis = lie_tder_basis(ctx, upto);
    let agree = |u: &TDerivation| -> Result<bool> { Ok((&tilde_delta_cyc(&div_small(u)?) - &tdiv(u)).truncated(upto).is_zero()) };
    let mut failures = Vec::new();
    for (_, u) in &basis {
        if !agree(u)? {
            failures.push(format!("{:?}", u.comps()));
        }
    }
    let mut out = vec![counted("tDiv = Δ̃ div on Lyndon basis", basis.len(), &failures, &format!("basis elements of degree <= {upto}"))];

    let count = cfg.samples.unwrap_or(100);
    let mut r = rng(cfg, 2);
    let random: Vec<TDerivation> = (0..count).map(|_| random_inhomogeneous(&mut r, ctx, upto)).collect();
    let failures: Vec<String> = random
        .par_iter()
        .enumerate()
        .filter_map(|(k, u)| match agree(u) {
            Ok(true) => None,
            Ok(false) => Some(format!("sample {k}")),
            Err(e) => Some(format!("sample {k}: {e}")),
        })
        .collect();
    out.push(counted("tDiv = Δ̃ div on random elements", count, &failures, &format!("random derivations, seed {}", cfg.seed)));

    let groups = (count / 10).max(5);
    let factors: Vec<(TDerivation, TDerivation)> =
        (0..groups).map(|_| (random_inhomogeneous(&mut r, ctx, upto), random_inhomogeneous(&mut r, ctx, upto))).collect();
    let failures: Vec<String> = factors
        .par_iter()
        .enumerate()
        .filter_map(|(k, (u, v))| {
            let f = TAutElement::exp_unchecked(u).mul(&TAutElement::exp_unchecked(v));
            (tilde_delta_cyc(&j_int(&f)) != tj_int(&f)).then(|| format!("sample {k}"))
        })
        .collect();
    out.push(counted("tJ = Δ̃ j on random products", groups, &failures, &format!("products e^u e^v, seed {}", cfg.seed)));
    Ok(out)
}

fn generator_pairs(n: usize) -> SampleSet {
    let gens: Vec<FreeWord> = (0..n).map(FreeWord::generator).collect();
    let pairs = gens.iter().flat_map(|a| gens.iter().map(move |b| (a.clone(), b.clone()))).collect();
    SampleSet { description: "all generator pairs".into(), seed: None, words: Vec::new(), pairs }
}

fn mult(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let theta = Expansion::theta_exp(ctx);
    let pi = DoubleBracket::pi_mult(ctx);
    let len = cfg.max_len.unwrap_or(3);
    let words = SampleSet::words(ctx.n(), len);
    let loops = SampleSet::loops(ctx.n(), len);
    Ok(vec![
        from_report("kappa on generators", &transfer_check(&theta, &Target::Kappa(pi.clone()), &generator_pairs(ctx.n()))?),
        from_report("mu", &transfer_check(&theta, &Target::Mu(pi.clone()), &words)?),
        from_report("mu_star", &transfer_check(&theta, &Target::MuStar(pi.clone()), &words)?),
        from_report("delta_plus", &transfer_check(&theta, &Target::Delta(pi), &loops)?),
    ])
}

/// The KV map and its Duflo function in `ctx`, from the configuration or by solving.
fn kv_map(ctx: Context, cfg: &SuiteConfig) -> Result<(TAutElement, Series)> {
    match &cfg.solution {
        Some(sol) => {
            if sol.degree < ctx.degree() {
                return Err(AlgebraError::Precondition(format!("solution is only known through degree {}", sol.degree)));
            }
            let f = sol.f.with_context(ctx);
            let h = Series::new(sol.h.coeffs().to_vec(), ctx.degree());
            Ok((f, h))
        }
        None => {
            let sol = solve(ctx.n(), ctx.degree())?;
            Ok((sol.f, sol.h))
        }
    }
}

fn kv_checks(f: &TAutElement) -> Vec<CheckOutcome> {
    let d = kv_defects(f);
    let low = |p: Option<usize>| p.map_or("zero".to_string(), |k| format!("nonzero from degree {k}"));
    vec![
        check("KV I", d.d1.is_zero(), format!("defect {}", low(d.d1.low_degree()))),
        check("KV II", d.d2.is_zero(), format!("defect {}", low(d.d2.low_degree()))),
    ]
}

fn mt(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let (f, _) = kv_map(ctx, cfg)?;
    let mut out = kv_checks(&f);
    let theta = Expansion::theta_from_taut(&f);
    let sp = theta.is_special();
    out.push(check(
        "theta_F special",
        sp.group_like.holds && sp.tangential.holds && sp.special.holds,
        format!("group-like {}, tangential {}, special {}", sp.group_like.holds, sp.tangential.holds, sp.special.holds),
    ));
    let len = cfg.max_len.unwrap_or(3);
    let samples = SampleSet::pairs(ctx.n(), len).merged(SampleSet::random_pairs(ctx.n(), cfg.samples.unwrap_or(50), len + 2, cfg.seed));
    out.push(from_report("kappa = Pi_add", &transfer_check(&theta, &Target::Kappa(DoubleBracket::pi_add(ctx)), &samples)?));
    out.push(from_report("Goldman = KKS", &transfer_check(&theta, &Target::Goldman, &samples)?));
    Ok(out)
}

fn mu_f(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let (f, h) = kv_map(ctx, cfg)?;
    let mut out = kv_checks(&f);
    let theta = Expansion::theta_from_taut(&f);
    let len = cfg.max_len.unwrap_or(3);
    let samples = SampleSet::words(ctx.n(), len).merged(SampleSet::random_words(ctx.n(), cfg.samples.unwrap_or(50), len + 2, cfg.seed));
    out.push(from_report("mu = muF", &transfer_check(&theta, &Target::MuF(h.derivative()), &samples)?));
    Ok(out)
}

/// Loops of length ≤ `len` where θ_F fails δ⁺ = δ^alg, and where it fails the defect formula
/// θ(δ⁺|γ|) − δ^alg(θ|γ|) = −{θ|γ|, −}_KKS · Δ̃ j(F^{-1}), both through N−1.
fn defect_profile(f: &TAutElement, len: usize) -> Result<(usize, usize, usize)> {
    let ctx = f.ctx();
    let upto = ctx.degree() - 1;
    let theta = Expansion::theta_from_taut(f);
    let kks = DoubleBracket::kks(ctx);
    let dj = tilde_delta_cyc(&j_int(&f.inverse()));
    let loops = SampleSet::loops(ctx.n(), len).words;
    let rows: Vec<Result<(bool, bool)>> = loops
        .par_iter()
        .map(|w| {
            let l = LoopElt::word(w.clone());
            let a = theta.expand_cyc(&l)?;
            let lhs = (&theta.expand_tensor(&grp::delta_plus(&l))?.project_both() - &delta_alg(&a)).truncated(upto);
            let rhs = (-kks.tder(&a)?.act_cyc_tensor(&dj)).truncated(upto);
            Ok((!lhs.is_zero(), lhs == rhs))
        })
        .collect();
    let mut nonzero = 0;
    let mut formula = 0;
    for r in rows {
        let (nz, ok) = r?;
        nonzero += nz as usize;
        formula += ok as usize;
    }
    Ok((loops.len(), nonzero, formula))
}

fn delta_alg_suite(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let (f, _) = kv_map(ctx, cfg)?;
    let mut out = kv_checks(&f);
    let theta = Expansion::theta_from_taut(&f);
    let len = cfg.max_len.unwrap_or(4);
    let loops = SampleSet::loops(ctx.n(), len);
    out.push(from_report("delta_plus = delta_alg", &transfer_check(&theta, &Target::DeltaAlg, &loops)?));
    out.push(from_report("delta_plus = -tDiv_KKS", &transfer_check(&theta, &Target::Delta(DoubleBracket::kks(ctx)), &loops)?));

    let kks = DoubleBracket::kks(ctx);
    let mut failures = Vec::new();
    let necklaces: Vec<CyclicPoly> = words_up_to(ctx.n(), ctx.degree())
        .into_iter()
        .filter(|w| !w.is_empty() && *w == w.min_rotation())
        .map(|w| CyclicPoly::cyc(ctx, w))
        .collect();
    for c in &necklaces {
        if delta_alg(c) != -kks.tdiv(c)? {
            failures.push(format!("{c}"));
        }
    }
    out.push(counted("delta_alg = -tDiv_KKS", necklaces.len(), &failures, "cyclic words"));

    // Controls in three generators.
    let c3 = Context::new(3, ctx.degree().clamp(4, 5))?;
    let sol = solve(3, c3.degree())?;
    let len3 = 3;
    let (total, nonzero, formula) = defect_profile(&sol.f, len3)?;
    out.push(check(
        "n=3 solution has no defect",
        nonzero == 0 && formula == total,
        format!("{nonzero}/{total} loops with defect, formula holds on {formula}, N={}", c3.degree()),
    ));
    let central = sol.f.mul(&TAutElement::exp_unchecked(&TDerivation::q(c3, 0)));
    let (total, nonzero, formula) = defect_profile(&central, len3)?;
    out.push(check(
        "central perturbation keeps delta_plus = delta_alg",
        nonzero == 0 && formula == total,
        format!("{nonzero}/{total} loops with defect, formula holds on {formula}"),
    ));
    let u = sder_basis(c3, 3)?.into_iter().next().ok_or_else(|| AlgebraError::Infeasible("no special derivation in degree 3".into()))?;
    let div_u = div_small(&u)?;
    let central = span_contains(&center_bruteforce(3, 3)?, &div_u);
    out.push(check("perturbation has non-central divergence", !central && !div_u.is_zero(), format!("div(u) = {div_u}")));
    let perturbed = sol.f.mul(&TAutElement::exp_unchecked(&u));
    let (total, nonzero, formula) = defect_profile(&perturbed, len3)?;
    out.push(check(
        "non-central perturbation matches the defect formula",
        nonzero > 0 && formula == total,
        format!("{nonzero}/{total} loops with defect, formula holds on {formula}"),
    ));
    Ok(out)
}

fn center(ctx: Context) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for d in 1..=ctx.degree().min(5) {
        let expected = center_basis(ctx.n(), d)?;
        let found = center_bruteforce(ctx.n(), d)?;
        let same = found.len() == expected.len()
            && expected.iter().all(|c| span_contains(&found, c))
            && found.iter().all(|c| span_contains(&expected, c));
        out.push(check(
            format!("center in degree {d}"),
            same,
            format!("brute force dimension {}, predicted {}", found.len(), expected.len()),
        ));
    }
    Ok(out)
}

fn involutivity(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let len = cfg.max_len.unwrap_or(4);
    let words = exhaustive_words(ctx.n(), len);
    let failures: Vec<String> =
        words.par_iter().filter(|w| !grp::bracket_after_mu(&GroupRingElt::word((*w).clone())).is_zero()).map(|w| format!("{w}")).collect();
    let mut out = vec![counted("group ring", words.len(), &failures, &format!("reduced words of length <= {len}"))];

    let kks = DoubleBracket::kks(ctx);
    let composite = |a: &NCPoly| -> NCPoly {
        let mut s = NCPoly::zero(ctx);
        for ((p, w), c) in mu_alg(a).terms() {
            s += &kks.bracket_left(&CyclicPoly::cyc(ctx, p.clone()), &NCPoly::monomial(ctx, w.clone(), c.clone()));
        }
        s
    };
    let exhaustive = ctx.degree().min(5);
    let all = words_up_to(ctx.n(), exhaustive);
    let failures: Vec<String> = all.par_iter().filter(|w| !composite(&NCPoly::word(ctx, (*w).clone())).is_zero()).map(|w| format!("{w}")).collect();
    out.push(counted("algebra, all words", all.len(), &failures, &format!("words of degree <= {exhaustive}")));

    let count = cfg.samples.unwrap_or(100);
    let mut r = rng(cfg, 3);
    let mut failures = Vec::new();
    for k in 0..count {
        let mut a = NCPoly::zero(ctx);
        for _ in 0..4 {
            let l = r.gen_range(1..=ctx.degree());
            let w = Word::from_letters((0..l).map(|_| r.gen_range(0..ctx.n())));
            a.add_term(w, q(r.gen_range(-3..=3)));
        }
        if !composite(&a).is_zero() {
            failures.push(format!("sample {k}: {a}"));
        }
    }
    out.push(counted("algebra, random elements", count, &failures, &format!("random elements, seed {}", cfg.seed)));
    Ok(out)
}

fn appendix(ctx: Context, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let n = ctx.n();
    let c4 = Context::new(n, 4)?;
    let mut xs: Vec<(String, NCPoly)> = (0..n).map(|i| (format!("x{}", i + 1), NCPoly::generator(c4, i))).collect();
    xs.push(("x0".into(), NCPoly::x0(c4)));

    let mut out = Vec::new();
    let mut dims = Vec::new();
    let mut failures = Vec::new();
    for (name, x) in &xs {
        for m in 1..=4 {
            let (img, ker, same) = commutator_trace_kernel(x, m)?;
            dims.push(format!("{name},{m}:{img}"));
            if !same {
                failures.push(format!("x={name} m={m}: image {img}, kernel {ker}"));
            }
        }
    }
    out.push(counted("[x, A_{m-1}] = ker |- x^{m-1}|", dims.len(), &failures, &format!("cases ({})", dims.join(" "))));

    let mut failures = Vec::new();
    let mut total = 0;
    for (name, x) in &xs {
        for d in 1..=4 {
            for w in words_of_degree(n, d) {
                total += 1;
                match commutator_test(x, &NCPoly::word(c4, w.clone())) {
                    Ok(false) => {}
                    Ok(true) => failures.push(format!("{w} claimed in [{name}, A]")),
                    Err(e) => failures.push(format!("{w} with x={name}: {e}")),
                }
            }
        }
    }
    let count = cfg.samples.unwrap_or(100);
    let mut r = rng(cfg, 4);
    for k in 0..count {
        let (name, x) = &xs[r.gen_range(0..xs.len())];
        let d = r.gen_range(0..=3);
        let mut v = NCPoly::zero(c4);
        for w in words_of_degree(n, d) {
            v.add_term(w, q(r.gen_range(-2..=2)));
        }
        total += 1;
        match commutator_test(x, &x.commutator(&v)) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("sample {k}: commutator with {name} rejected")),
            Err(e) => failures.push(format!("sample {k}: {e}")),
        }
    }
    out.push(counted("commutator test", total, &failures, &format!("monomials and random commutators, seed {}", cfg.seed)));

    let c5 = Context::new(n, 5)?;
    let mut failures = Vec::new();
    for k in 0..count {
        let mut w = NCPoly::zero(c5);
        for _ in 0..3 {
            let l = r.gen_range(1..=4);
            w.add_term(Word::from_letters((0..l).map(|_| r.gen_range(0..n))), q(r.gen_range(-3..=3)));
        }
        match inner_witness(&Derivation::inner(&w)) {
            Ok(found) if found == w => {}
            Ok(found) => failures.push(format!("sample {k}: expected {w}, found {found}")),
            Err(e) => failures.push(format!("sample {k}: {e}")),
        }
    }
    out.push(counted("inner witness", count, &failures, &format!("random inner derivations through degree 5, seed {}", cfg.seed)));

    let mut failures = Vec::new();
    for d in 1..=4 {
        let space = commutant_pair_space(d)?;
        let c = space.first().map(|p| p.ctx()).unwrap_or(Context::new(2, 2 * d)?);
        let powers = [NCPoly::generator(c, 0).pow(d), NCPoly::generator(c, 1).pow(d)];
        let ok = space.len() == 2 && powers.iter().all(|p| poly_span_contains(&space, p));
        if !ok {
            failures.push(format!("degree {d}: dimension {}", space.len()));
        }
    }
    out.push(counted("commutant pairs are spanned by x1^d, x2^d", 4, &failures, "degrees 1..=4 (n=2)"));
    Ok(out)
}

fn poly_span_contains(basis: &[NCPoly], v: &NCPoly) -> bool {
    let cols: Vec<_> = basis.iter().map(crate::kv::to_map).collect();
    crate::linalg::solve_columns(&cols, &crate::kv::to_map(v)).is_some()
}
