//! Derivations, tangential derivations, double derivations and the group TAut.

mod double;
mod taut;

pub use double::{DoubleDerivation, TDoubleDerivation};
pub use taut::{adjoint_series, TAutElement};

use crate::cyclic::project;
use crate::error::{AlgebraError, Result};
use crate::ncalg::{Context, CycTensor, CyclicPoly, NCPoly, Poly, Slot, Tensor, Q};
use num_traits::{One, Zero};

/// A derivation of A, stored by its values on generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    ctx: Context,
    images: Vec<NCPoly>,
}

impl Derivation {
    pub fn new(ctx: Context, images: Vec<NCPoly>) -> Result<Self> {
        if images.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} images", ctx.n())));
        }
        for im in &images {
            ctx.check(&im.ctx())?;
        }
        Ok(Derivation { ctx, images })
    }

    pub fn zero(ctx: Context) -> Self {
        Derivation { ctx, images: vec![NCPoly::zero(ctx); ctx.n()] }
    }

    /// The inner derivation a ↦ [a, w].
    pub fn inner(w: &NCPoly) -> Self {
        let ctx = w.ctx();
        Derivation { ctx, images: (0..ctx.n()).map(|i| NCPoly::generator(ctx, i).commutator(w)).collect() }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn images(&self) -> &[NCPoly] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &NCPoly {
        &self.images[i]
    }

    pub fn apply(&self, a: &NCPoly) -> NCPoly {
        self.ctx.check(&a.ctx()).expect("context");
        let mut out = NCPoly::zero(self.ctx);
        for (w, c) in a.terms() {
            let l = w.letters();
            for k in 0..l.len() {
                let img = &self.images[l[k] as usize];
                if img.is_zero() {
                    continue;
                }
                out.add_scaled(&img.sandwich(&l[..k], &l[k + 1..]), c);
            }
        }
        out
    }

    pub fn apply_cyclic(&self, c: &CyclicPoly) -> CyclicPoly {
        project(&self.apply(&c.lift()))
    }

    /// Action on a two-fold tensor through u⊗1 + 1⊗u (cyclic slots projected).
    pub fn apply_tensor<L: Slot, R: Slot>(&self, t: &Tensor<L, R>) -> Tensor<L, R> {
        let f = |w: &crate::ncalg::Word| -> NCPoly { self.apply(&NCPoly::word(self.ctx, w.clone())) };
        let left = t.map_left::<L>(|w| relabel::<L>(&f(w)));
        let right = t.map_right::<R>(|w| relabel::<R>(&f(w)));
        &left + &right
    }

    pub fn bracket(&self, other: &Derivation) -> Derivation {
        let images = (0..self.ctx.n())
            .map(|i| &self.apply(&other.images[i]) - &other.apply(&self.images[i]))
            .collect();
        Derivation { ctx: self.ctx, images }
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation { ctx: self.ctx, images: self.images.iter().zip(&other.images).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Q) -> Derivation {
        Derivation { ctx: self.ctx, images: self.images.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|a| a.is_zero())
    }
}

/// Reinterprets a plain polynomial in a (possibly cyclic) slot.
pub(crate) fn relabel<K: Slot>(p: &NCPoly) -> Poly<K> {
    let mut out = Poly::<K>::zero(p.ctx());
    for (w, c) in p.terms() {
        out.add_term_ref(w, c);
    }
    out
}

/// Tangential derivation u = (u_1,…,u_n) acting by x_i ↦ [x_i, u_i].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TDerivation {
    ctx: Context,
    comps: Vec<NCPoly>,
}

impl TDerivation {
    pub fn new(ctx: Context, comps: Vec<NCPoly>) -> Result<Self> {
        if comps.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} components", ctx.n())));
        }
        for c in &comps {
            ctx.check(&c.ctx())?;
        }
        Ok(TDerivation { ctx, comps })
    }

    pub fn zero(ctx: Context) -> Self {
        TDerivation { ctx, comps: vec![NCPoly::zero(ctx); ctx.n()] }
    }

    /// q_i = (0,…,x_i,…,0).
    pub fn q(ctx: Context, i: usize) -> Self {
        let mut u = Self::zero(ctx);
        u.comps[i] = NCPoly::generator(ctx, i);
        u
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn comps(&self) -> &[NCPoly] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &NCPoly {
        &self.comps[i]
    }

    pub fn rho(&self) -> Derivation {
        let images = (0..self.ctx.n()).map(|i| NCPoly::generator(self.ctx, i).commutator(&self.comps[i])).collect();
        Derivation { ctx: self.ctx, images }
    }

    /// w_i = ρ(u)(v_i) − ρ(v)(u_i) + [u_i, v_i].
    pub fn bracket(&self, other: &TDerivation) -> TDerivation {
        let ru = self.rho();
        let rv = other.rho();
        let comps = (0..self.ctx.n())
            .map(|i| {
                let mut w = ru.apply(&other.comps[i]);
                w -= &rv.apply(&self.comps[i]);
                w += &self.comps[i].commutator(&other.comps[i]);
                w
            })
            .collect();
        TDerivation { ctx: self.ctx, comps }
    }

    pub fn is_lie(&self) -> bool {
        self.comps.iter().all(|c| c.eps().is_zero() && c.is_primitive())
    }

    /// Σ_i [x_i, u_i] (zero exactly for special derivations).
    pub fn special_defect(&self) -> NCPoly {
        let mut s = NCPoly::zero(self.ctx);
        for (i, c) in self.comps.iter().enumerate() {
            s += &NCPoly::generator(self.ctx, i).commutator(c);
        }
        s
    }

    pub fn is_special(&self) -> bool {
        self.special_defect().is_zero()
    }

    pub fn add(&self, other: &TDerivation) -> TDerivation {
        TDerivation { ctx: self.ctx, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &TDerivation) -> TDerivation {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> TDerivation {
        TDerivation { ctx: self.ctx, comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> TDerivation {
        self.scale(&-Q::one())
    }

    pub fn degree_part(&self, d: usize) -> TDerivation {
        TDerivation { ctx: self.ctx, comps: self.comps.iter().map(|a| a.degree_part(d)).collect() }
    }

    pub fn truncated(&self, d: usize) -> TDerivation {
        TDerivation { ctx: self.ctx, comps: self.comps.iter().map(|a| a.truncated(d)).collect() }
    }

    pub fn with_context(&self, ctx: Context) -> TDerivation {
        TDerivation { ctx, comps: self.comps.iter().map(|a| a.with_context(ctx)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|a| a.is_zero())
    }

    /// Lowest degree among the components.
    pub fn low_degree(&self) -> Option<usize> {
        self.comps.iter().filter_map(|c| c.low_degree()).min()
    }

    /// u acting on |A|⊗|A| via ρ(u)⊗1 + 1⊗ρ(u).
    pub fn act_cyc_tensor(&self, t: &CycTensor) -> CycTensor {
        self.rho().apply_tensor(t)
    }

    pub fn act_cyclic(&self, c: &CyclicPoly) -> CyclicPoly {
        self.rho().apply_cyclic(c)
    }
}
