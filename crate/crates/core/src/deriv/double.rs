use super::{Derivation, TDerivation};
use crate::error::{AlgebraError, Result};
use crate::ncalg::{Context, CyclicPoly, NCPoly, TensorPoly, Q};
use num_traits::One;

/// Derivation A → A⊗A for the outer bimodule, stored by φ(x_i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleDerivation {
    ctx: Context,
    table: Vec<TensorPoly>,
}

impl DoubleDerivation {
    pub fn new(ctx: Context, table: Vec<TensorPoly>) -> Result<Self> {
        if table.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} table entries", ctx.n())));
        }
        Ok(DoubleDerivation { ctx, table })
    }

    pub fn zero(ctx: Context) -> Self {
        DoubleDerivation { ctx, table: vec![TensorPoly::zero(ctx); ctx.n()] }
    }

    /// ∂_i with ∂_i(x_j) = δ_ij 1⊗1.
    pub fn partial(ctx: Context, i: usize) -> Self {
        let mut d = Self::zero(ctx);
        d.table[i] = TensorPoly::unit(ctx);
        d
    }

    /// φ₀ = Σ ad_{x_i}∂_i, so φ₀(a) = 1⊗a − a⊗1.
    pub fn phi0(ctx: Context) -> Self {
        TDoubleDerivation::phi0(ctx).to_double()
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn table(&self) -> &[TensorPoly] {
        &self.table
    }

    pub fn apply(&self, a: &NCPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.ctx);
        let cap = self.ctx.degree();
        for (w, c) in a.terms() {
            let l = w.letters();
            for k in 0..l.len() {
                let img = &self.table[l[k] as usize];
                for ((p, s), x) in img.terms() {
                    if p.len() + s.len() + l.len() - 1 > cap {
                        continue;
                    }
                    let left = crate::ncalg::Word::concat3(&l[..k], p.letters(), &[]);
                    let right = crate::ncalg::Word::concat3(s.letters(), &l[k + 1..], &[]);
                    out.add_term(left, right, x * c);
                }
            }
        }
        out
    }

    /// |φ|: a ↦ φ'(a)φ''(a).
    pub fn collapse(&self) -> Derivation {
        Derivation::new(self.ctx, self.table.iter().map(|t| t.multiply()).collect()).expect("table size")
    }

    /// The induced map |A| → A, |a| ↦ φ''(a)φ'(a).
    pub fn on_cyclic(&self, c: &CyclicPoly) -> NCPoly {
        let mut out = NCPoly::zero(self.ctx);
        for (w, x) in c.terms() {
            let t = self.apply(&NCPoly::word(self.ctx, w.clone()));
            out.add_scaled(&t.multiply_swapped(), x);
        }
        out
    }

    /// c·φ for the inner bimodule action on values.
    pub fn left_mul(&self, c: &NCPoly) -> Self {
        DoubleDerivation { ctx: self.ctx, table: self.table.iter().map(|t| t.second_left_mul(c)).collect() }
    }

    /// φ·c for the inner bimodule action on values.
    pub fn right_mul(&self, c: &NCPoly) -> Self {
        DoubleDerivation { ctx: self.ctx, table: self.table.iter().map(|t| t.first_right_mul(c)).collect() }
    }

    /// [u, φ] = (u⊗1 + 1⊗u)∘φ − φ∘u.
    pub fn bracket_with(&self, u: &Derivation) -> Self {
        let table = (0..self.ctx.n())
            .map(|j| &u.apply_tensor(&self.table[j]) - &self.apply(u.image(j)))
            .collect();
        DoubleDerivation { ctx: self.ctx, table }
    }

    pub fn add(&self, other: &Self) -> Self {
        DoubleDerivation { ctx: self.ctx, table: self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DoubleDerivation { ctx: self.ctx, table: self.table.iter().zip(&other.table).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        DoubleDerivation { ctx: self.ctx, table: self.table.iter().map(|a| a.scale(c)).collect() }
    }
}

/// ψ = Σ_i c'_i (ad_{x_i}∂_i) c''_i stored by the coefficients C_i = c'_i⊗c''_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TDoubleDerivation {
    ctx: Context,
    coeffs: Vec<TensorPoly>,
}

impl TDoubleDerivation {
    pub fn new(ctx: Context, coeffs: Vec<TensorPoly>) -> Result<Self> {
        if coeffs.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} coefficients", ctx.n())));
        }
        Ok(TDoubleDerivation { ctx, coeffs })
    }

    pub fn zero(ctx: Context) -> Self {
        TDoubleDerivation { ctx, coeffs: vec![TensorPoly::zero(ctx); ctx.n()] }
    }

    /// ad_{x_i}∂_i.
    pub fn ad_partial(ctx: Context, i: usize) -> Self {
        let mut d = Self::zero(ctx);
        d.coeffs[i] = TensorPoly::unit(ctx);
        d
    }

    pub fn phi0(ctx: Context) -> Self {
        TDoubleDerivation { ctx, coeffs: vec![TensorPoly::unit(ctx); ctx.n()] }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn coeffs(&self) -> &[TensorPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &TensorPoly {
        &self.coeffs[i]
    }

    /// The inclusion into D_A: ψ(x_j) = c''_j⊗c'_j x_j − x_j c''_j⊗c'_j.
    pub fn to_double(&self) -> DoubleDerivation {
        let table = (0..self.ctx.n())
            .map(|j| {
                let xj = NCPoly::generator(self.ctx, j);
                let s = self.coeffs[j].swap();
                &s.second_right_mul(&xj) - &s.first_left_mul(&xj)
            })
            .collect();
        DoubleDerivation { ctx: self.ctx, table }
    }

    pub fn apply(&self, a: &NCPoly) -> TensorPoly {
        self.to_double().apply(a)
    }

    /// |ψ| = −(c''_1c'_1, …, c''_nc'_n).
    pub fn collapse(&self) -> TDerivation {
        TDerivation::new(self.ctx, self.coeffs.iter().map(|t| -t.multiply_swapped()).collect()).expect("size")
    }

    /// a·ψ.
    pub fn left_mul(&self, a: &NCPoly) -> Self {
        TDoubleDerivation { ctx: self.ctx, coeffs: self.coeffs.iter().map(|t| t.first_left_mul(a)).collect() }
    }

    /// ψ·a.
    pub fn right_mul(&self, a: &NCPoly) -> Self {
        TDoubleDerivation { ctx: self.ctx, coeffs: self.coeffs.iter().map(|t| t.second_right_mul(a)).collect() }
    }

    /// ad_x(ψ) = xψ − ψx.
    pub fn ad(&self, x: &NCPoly) -> Self {
        self.left_mul(x).sub(&self.right_mul(x))
    }

    /// The action of tDer(A) on tD_A, in coefficient form.
    pub fn act(&self, u: &TDerivation) -> Self {
        let ru = u.rho();
        let dd = self.to_double();
        let coeffs = (0..self.ctx.n())
            .map(|i| {
                let c = &self.coeffs[i];
                let ui = u.comp(i);
                let mut t = ru.apply_tensor(c);
                t += &dd.apply(ui).swap();
                t += &c.second_left_mul(ui);
                t -= &c.first_right_mul(ui);
                t
            })
            .collect();
        TDoubleDerivation { ctx: self.ctx, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        TDoubleDerivation { ctx: self.ctx, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TDoubleDerivation { ctx: self.ctx, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        TDoubleDerivation { ctx: self.ctx, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|t| t.is_zero())
    }
}
