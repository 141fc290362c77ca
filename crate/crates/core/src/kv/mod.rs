//! Degree-by-degree solver for the Kashiwara–Vergne problem of type (0, n+1).
//!
//! The solver works in a context one degree above the requested one, so that
//! the special-derivation condition Σ[x_i,u_i] = 0 is visible for corrections
//! of top degree. Results are truncated back before being returned.

mod appendix;
mod sder;

pub use appendix::{commutant_pair_space, commutator_methods, commutator_test, commutator_trace_kernel, inner_precondition_witness, inner_witness};
pub use sder::{center_basis, center_bruteforce, cyclic_to_sder, krv_test, necklaces, sder_basis, sder_to_cyclic, span_contains, KrvClass, KrvReport};

use crate::deriv::{TAutElement, TDerivation};
use crate::dvg::{div_small, j_int};
use crate::error::{AlgebraError, Result};
use crate::linalg::solve_columns;
use crate::ncalg::{lyndon_basis, Context, CyclicPoly, NCPoly, Series, Word, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// One exponential factor e^u appended during construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub stage: String,
    pub degree: usize,
    pub u: TDerivation,
}

#[derive(Clone, Debug)]
pub struct KVSolution {
    pub n: usize,
    pub degree: usize,
    pub f: TAutElement,
    pub h: Series,
    pub log: Vec<Factor>,
}

/// Residuals of the two KV equations together with the fitted h.
#[derive(Clone, Debug)]
pub struct Defects {
    pub d1: NCPoly,
    pub d2: CyclicPoly,
    pub h: Series,
}

impl Defects {
    pub fn is_zero(&self) -> bool {
        self.d1.is_zero() && self.d2.is_zero()
    }
}

pub(crate) fn to_map<K: crate::ncalg::Slot>(p: &crate::ncalg::Poly<K>) -> BTreeMap<Word, Q> {
    p.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

fn sum_generators(ctx: Context) -> NCPoly {
    -NCPoly::x0(ctx)
}

/// log(e^{x_1}⋯e^{x_n}).
pub fn bch_target(ctx: Context) -> NCPoly {
    let mut prod = NCPoly::one(ctx);
    for i in 0..ctx.n() {
        prod = &prod * &NCPoly::generator(ctx, i).exp().expect("primitive");
    }
    prod.log().expect("group-like")
}

/// |Σ x_i^k − (Σ x_i)^k|.
pub fn duflo_shape(ctx: Context, k: usize) -> CyclicPoly {
    let mut p = -sum_generators(ctx).pow(k);
    for i in 0..ctx.n() {
        p += &NCPoly::generator(ctx, i).pow(k);
    }
    crate::cyclic::project(&p)
}

/// |Σ h(x_i) − h(Σ x_i)|.
pub fn duflo_class(ctx: Context, h: &Series) -> CyclicPoly {
    let mut out = CyclicPoly::zero(ctx);
    for k in 1..=h.degree().min(ctx.degree()) {
        let c = h.coeff(k);
        if !c.is_zero() {
            out += &duflo_shape(ctx, k).scale(&c);
        }
    }
    out
}

/// Solves Σ[x_i, u_i] = rhs for u_i in the degree-k Lyndon span, free coordinates zero.
fn solve_special_equation(ctx: Context, k: usize, rhs: &NCPoly) -> Result<TDerivation> {
    let basis = lyndon_basis(ctx, k);
    let mut columns = Vec::new();
    for i in 0..ctx.n() {
        let xi = NCPoly::generator(ctx, i);
        for b in &basis {
            columns.push(to_map(&xi.commutator(b.as_poly())));
        }
    }
    let sol = solve_columns(&columns, &to_map(rhs))
        .ok_or_else(|| AlgebraError::Infeasible(format!("KV I correction in degree {k}: defect {rhs}")))?;
    let mut comps = vec![NCPoly::zero(ctx); ctx.n()];
    for (idx, c) in sol.iter().enumerate() {
        if !c.is_zero() {
            comps[idx / basis.len()].add_scaled(basis[idx % basis.len()].as_poly(), c);
        }
    }
    TDerivation::new(ctx, comps)
}

fn kv1_in(ctx: Context, log: &mut Vec<Factor>) -> Result<TAutElement> {
    let target = bch_target(ctx);
    let x = sum_generators(ctx);
    let mut f = TAutElement::identity(ctx);
    for k in 1..ctx.degree() {
        let defect = (&target - &f.apply(&x)).degree_part(k + 1);
        if defect.is_zero() {
            continue;
        }
        let u = solve_special_equation(ctx, k, &defect)?;
        f = f.mul(&TAutElement::exp_unchecked(&u));
        log.push(Factor { stage: "kv1".into(), degree: k, u });
    }
    Ok(f)
}

/// F ∈ TAut(L_n) with F(Σx_i) = log(e^{x_1}⋯e^{x_n}) through the context degree.
pub fn solve_kv1(n: usize, degree: usize) -> Result<TAutElement> {
    let ctx = Context::new(n, degree)?;
    let mut log = Vec::new();
    Ok(kv1_in(ctx.with_degree(degree + 1), &mut log)?.with_context(ctx))
}

fn kv2_in(mut f: TAutElement, log: &mut Vec<Factor>) -> Result<(TAutElement, Series)> {
    let ctx = f.ctx();
    // corrections of degree ≤ N − 1 suffice; the top degree is only a truncation artifact
    let top = ctx.degree() - 1;
    let mut h = Series::zero(top);
    for k in 1..=top {
        let jk = j_int(&f.inverse()).degree_part(k);
        let basis = sder_basis(ctx, k)?;
        let mut columns: Vec<BTreeMap<Word, Q>> = basis.iter().map(|b| Ok(to_map(&div_small(b)?))).collect::<Result<_>>()?;
        columns.push(to_map(&duflo_shape(ctx, k)));
        let sol = solve_columns(&columns, &to_map(&jk))
            .ok_or_else(|| AlgebraError::Infeasible(format!("KV II in degree {k}: defect {jk}")))?;
        h.set(k, sol[basis.len()].clone());
        let mut u = TDerivation::zero(ctx);
        for (b, c) in basis.iter().zip(&sol) {
            if !c.is_zero() {
                u = u.add(&b.scale(c));
            }
        }
        if !u.is_zero() {
            f = f.mul(&TAutElement::exp_unchecked(&u));
            log.push(Factor { stage: "kv2".into(), degree: k, u });
        }
    }
    Ok((f, h))
}

/// Corrects a KV I solution by special exponentials until KV II holds.
pub fn enforce_kv2(f: &TAutElement) -> Result<KVSolution> {
    let ctx = f.ctx();
    let big = ctx.with_degree(ctx.degree() + 1);
    let mut log = Vec::new();
    let (f2, _) = kv2_in(f.with_context(big), &mut log)?;
    finish(f2.with_context(ctx), log)
}

fn finish(f: TAutElement, log: Vec<Factor>) -> Result<KVSolution> {
    let ctx = f.ctx();
    let d = kv_defects(&f);
    if !d.is_zero() {
        return Err(AlgebraError::Infeasible(format!("solver output has defects d1 = {}, d2 = {}", d.d1, d.d2)));
    }
    let log = log.into_iter().map(|fac| Factor { u: fac.u.with_context(fac.u.ctx().with_degree(ctx.degree())), ..fac }).collect();
    Ok(KVSolution { n: ctx.n(), degree: ctx.degree(), f, h: d.h, log })
}

/// Solves KV I and II directly for n = 2, through operadic extension for n ≥ 3.
pub fn solve(n: usize, degree: usize) -> Result<KVSolution> {
    if n < 2 {
        return Err(AlgebraError::Precondition("the KV problem needs n ≥ 2".into()));
    }
    let ctx2 = Context::new(2, degree)?;
    let big = ctx2.with_degree(degree + 1);
    let mut log = Vec::new();
    let f1 = kv1_in(big, &mut log)?;
    let (f, _) = kv2_in(f1, &mut log)?;
    let sol2 = finish(f.with_context(ctx2), log)?;
    if n == 2 {
        return Ok(sol2);
    }
    let target = Context::new(n, degree)?;
    let mut log = sol2.log.clone();
    let mut fn_ = TAutElement::identity(target);
    for u in operadic_factors(&sol2.f, target) {
        fn_ = fn_.mul(&TAutElement::exp_unchecked(&u));
        log.push(Factor { stage: "operadic".into(), degree: u.low_degree().unwrap_or(0), u });
    }
    finish(fn_, log)
}

/// u^{i,(i+1)⋯n}: u_1 placed at slot i, u_2 at every later slot, after x_1 ↦ x_i, x_2 ↦ x_{i+1}+⋯+x_n.
pub fn cable(u: &TDerivation, target: Context, i: usize) -> TDerivation {
    let n = target.n();
    let rest = (i + 1..n).fold(NCPoly::zero(target), |acc, j| &acc + &NCPoly::generator(target, j));
    let images = [NCPoly::generator(target, i), rest];
    let first = u.comp(0).substitute(target, &images);
    let second = u.comp(1).substitute(target, &images);
    let comps = (0..n)
        .map(|j| match j.cmp(&i) {
            std::cmp::Ordering::Less => NCPoly::zero(target),
            std::cmp::Ordering::Equal => first.clone(),
            std::cmp::Ordering::Greater => second.clone(),
        })
        .collect();
    TDerivation::new(target, comps).expect("size")
}

/// F^{(n)} = F^{n−1,n}∘⋯∘F^{1,2⋯n}.
pub fn operadic_extend(f: &TAutElement, n: usize) -> Result<TAutElement> {
    if f.ctx().n() != 2 {
        return Err(AlgebraError::Precondition("operadic extension starts from n = 2".into()));
    }
    let target = Context::new(n, f.ctx().degree())?;
    let mut out = TAutElement::identity(target);
    for u in operadic_factors(f, target) {
        out = out.mul(&TAutElement::exp_unchecked(&u));
    }
    Ok(out)
}

/// log F^{n−1,n}, …, log F^{1,2⋯n} in product order.
fn operadic_factors(f: &TAutElement, target: Context) -> Vec<TDerivation> {
    let u = f.log();
    (0..target.n() - 1).rev().map(|i| cable(&u, target, i)).collect()
}

/// d1 = F(Σx_i) − log(e^{x_1}⋯e^{x_n}); d2 = j(F^{−1}) minus its best fit by |Σh(x_i) − h(Σx_i)|.
pub fn kv_defects(f: &TAutElement) -> Defects {
    let ctx = f.ctx();
    let d1 = &f.apply(&sum_generators(ctx)) - &bch_target(ctx);
    let j = j_int(&f.inverse());
    let (h, d2) = fit_duflo(&j);
    Defects { d1, d2, h }
}

/// Degree-wise fit c = |Σh(x_i) − h(Σx_i)| + residual, matching the leading word of each shape.
pub fn fit_duflo(c: &CyclicPoly) -> (Series, CyclicPoly) {
    let ctx = c.ctx();
    let mut h = Series::zero(ctx.degree());
    let mut residual = CyclicPoly::zero(ctx);
    for k in 1..=ctx.degree() {
        let ck = c.degree_part(k);
        let shape = duflo_shape(ctx, k);
        let hk = match shape.terms().next() {
            Some((w, pw)) => ck.coeff(w) / pw,
            None => Q::zero(),
        };
        residual += &(&ck - &shape.scale(&hk));
        h.set(k, hk);
    }
    (h, residual)
}

/// h read off from KV II; fails if F violates it.
pub fn duflo_series(f: &TAutElement) -> Result<Series> {
    let d = kv_defects(f);
    if !d.d2.is_zero() {
        return Err(AlgebraError::Precondition(format!("KV II fails: residual {}", d.d2)));
    }
    Ok(d.h)
}

/// ½(½ + s(z)), the predicted even part of g = ḣ.
pub fn duflo_even_prediction(degree: usize) -> Series {
    let half = Q::new(1.into(), 2.into());
    Series::s_function(degree).add(&Series::constant(half.clone(), degree)).scale(&half)
}

/// Degrees in 2..=deg(ḣ) where ḣ_even differs from ½(½ + s).
pub fn duflo_even_mismatches(h: &Series) -> Vec<usize> {
    let g = h.even_part().derivative();
    let pred = duflo_even_prediction(g.degree());
    (2..=g.degree()).filter(|&k| g.coeff(k) != pred.coeff(k)).collect()
}
