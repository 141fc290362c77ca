use super::{TDerivation, TDoubleDerivation};
use crate::cyclic::project;
use crate::error::{AlgebraError, Result};
use crate::ncalg::{Context, CycTensor, CyclicPoly, NCPoly, Q};
use num_traits::Zero;

/// Tangential automorphism F = (F_1,…,F_n) with group-like components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TAutElement {
    ctx: Context,
    comps: Vec<NCPoly>,
}

impl TAutElement {
    pub fn identity(ctx: Context) -> Self {
        TAutElement { ctx, comps: vec![NCPoly::one(ctx); ctx.n()] }
    }

    pub fn from_components(ctx: Context, comps: Vec<NCPoly>) -> Result<Self> {
        if comps.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} components", ctx.n())));
        }
        for c in &comps {
            ctx.check(&c.ctx())?;
            if !c.is_group_like() {
                return Err(AlgebraError::Precondition("component is not group-like".into()));
            }
        }
        Ok(TAutElement { ctx, comps })
    }

    /// F_i = exp(f_i) for primitive f_i.
    pub fn from_component_logs(ctx: Context, logs: &[NCPoly]) -> Result<Self> {
        if logs.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} logs", ctx.n())));
        }
        let mut comps = Vec::with_capacity(logs.len());
        for f in logs {
            if let Some(d) = f.primitivity_defect() {
                return Err(AlgebraError::NotPrimitive(d));
            }
            comps.push(f.exp()?);
        }
        Ok(TAutElement { ctx, comps })
    }

    pub fn component_logs(&self) -> Vec<NCPoly> {
        self.comps.iter().map(|c| c.log().expect("group-like")).collect()
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn comps(&self) -> &[NCPoly] {
        &self.comps
    }

    pub fn with_context(&self, ctx: Context) -> Self {
        TAutElement { ctx, comps: self.comps.iter().map(|c| c.with_context(ctx)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.comps.iter().all(|c| *c == NCPoly::one(self.ctx))
    }

    /// Images ρ(F)(x_i) = F_i^{−1} x_i F_i.
    pub fn generator_images(&self) -> Vec<NCPoly> {
        (0..self.ctx.n())
            .map(|i| &(&self.comps[i].antipode() * &NCPoly::generator(self.ctx, i)) * &self.comps[i])
            .collect()
    }

    pub fn apply(&self, a: &NCPoly) -> NCPoly {
        a.substitute(self.ctx, &self.generator_images())
    }

    pub fn apply_cyclic(&self, c: &CyclicPoly) -> CyclicPoly {
        project(&self.apply(&c.lift()))
    }

    pub fn apply_cyc_tensor(&self, t: &CycTensor) -> CycTensor {
        let images = self.generator_images();
        let f = |w: &crate::ncalg::Word| project(&NCPoly::word(self.ctx, w.clone()).substitute(self.ctx, &images));
        t.map_left(f).map_right(f)
    }

    /// (F·G)_i = F_i ρ(F)(G_i).
    pub fn mul(&self, other: &TAutElement) -> TAutElement {
        self.ctx.check(&other.ctx).expect("context");
        let images = self.generator_images();
        let comps = (0..self.ctx.n())
            .map(|i| &self.comps[i] * &other.comps[i].substitute(self.ctx, &images))
            .collect();
        TAutElement { ctx: self.ctx, comps }
    }

    /// exp(u) for u ∈ tDer(L), from F'(t) = F(t)·e^{tρ(u)}(u_i) solved as a power series in t.
    pub fn exp(u: &TDerivation) -> Result<TAutElement> {
        for c in u.comps() {
            if !c.eps().is_zero() {
                return Err(AlgebraError::Precondition("component has a constant term".into()));
            }
            if let Some(d) = c.primitivity_defect() {
                return Err(AlgebraError::NotPrimitive(d));
            }
        }
        Ok(Self::exp_unchecked(u))
    }

    /// exp(u) without validating the components.
    pub fn exp_unchecked(u: &TDerivation) -> TAutElement {
        let ctx = u.ctx();
        let d = u.rho();
        let big_n = ctx.degree();
        let comps = (0..ctx.n())
            .map(|i| {
                let mut b = vec![u.comp(i).clone()];
                for m in 1..=big_n {
                    let next = d.apply(&b[m - 1]).scale(&Q::new(1.into(), (m as i64).into()));
                    b.push(next);
                }
                let mut a = vec![NCPoly::one(ctx)];
                let mut total = NCPoly::one(ctx);
                for k in 0..big_n {
                    let mut s = NCPoly::zero(ctx);
                    for j in 0..=k {
                        s += &(&a[j] * &b[k - j]);
                    }
                    let next = s.scale(&Q::new(1.into(), ((k + 1) as i64).into()));
                    total += &next;
                    a.push(next);
                }
                total
            })
            .collect();
        TAutElement { ctx, comps }
    }

    /// The unique u ∈ tDer(L) with exp(u) = F, found degree by degree.
    pub fn log(&self) -> TDerivation {
        let mut u = TDerivation::zero(self.ctx);
        for d in 1..=self.ctx.degree() {
            let e = Self::exp_unchecked(&u);
            let diff: Vec<NCPoly> = (0..self.ctx.n()).map(|i| (&self.comps[i] - &e.comps[i]).degree_part(d)).collect();
            u = u.add(&TDerivation::new(self.ctx, diff).expect("size"));
        }
        u
    }

    pub fn inverse(&self) -> TAutElement {
        Self::exp_unchecked(&self.log().neg())
    }

    /// Ad_F(u) = log(F·exp(u)·F^{−1}).
    pub fn adjoint(&self, u: &TDerivation) -> TDerivation {
        self.mul(&Self::exp_unchecked(u)).mul(&self.inverse()).log()
    }

    /// Truncation-degree-wise equality with the identity.
    pub fn distance_from_identity(&self) -> Option<usize> {
        self.comps.iter().filter_map(|c| (c - &NCPoly::one(self.ctx)).low_degree()).min()
    }
}

impl TAutElement {
    /// F·ψ := (F⊗F)∘ψ∘F^{−1}, computed as e^{log F} acting on coefficients.
    pub fn act_tdd(&self, psi: &TDoubleDerivation) -> TDoubleDerivation {
        let u = self.log();
        let mut out = psi.clone();
        let mut term = psi.clone();
        for k in 1..=self.ctx.degree() {
            term = term.act(&u).scale(&Q::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        out
    }
}

/// e^{ad_f}(u) in tDer, computed with the bracket series.
pub fn adjoint_series(f: &TDerivation, u: &TDerivation) -> TDerivation {
    let mut out = u.clone();
    let mut term = u.clone();
    for k in 1..=u.ctx().degree() {
        term = f.bracket(&term).scale(&Q::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}
