use super::poly::{add_entry, Context, Cyc, Lin, NCPoly, Poly, Slot, Q};
use super::word::Word;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// Sparse element of a two-fold tensor product, truncated in total degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<L: Slot, R: Slot> {
    ctx: Context,
    terms: BTreeMap<(Word, Word), Q>,
    _k: PhantomData<(L, R)>,
}

pub type TensorPoly = Tensor<Lin, Lin>;
pub type CycTensor = Tensor<Cyc, Cyc>;
pub type CycMixLeft = Tensor<Cyc, Lin>;
pub type CycMixRight = Tensor<Lin, Cyc>;

impl<L: Slot, R: Slot> Tensor<L, R> {
    pub fn zero(ctx: Context) -> Self {
        Tensor { ctx, terms: BTreeMap::new(), _k: PhantomData }
    }

    pub fn pure(ctx: Context, a: Word, b: Word, c: Q) -> Self {
        let mut t = Self::zero(ctx);
        t.add_term(a, b, c);
        t
    }

    /// `1⊗1` (or `𝟏⊗𝟏`).
    pub fn unit(ctx: Context) -> Self {
        Self::pure(ctx, Word::empty(), Word::empty(), Q::one())
    }

    pub fn from_pair(a: &Poly<L>, b: &Poly<R>) -> Self {
        a.ctx().check(&b.ctx()).expect("context");
        let mut t = Self::zero(a.ctx());
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                t.add_term_ref(u, v, &(x * y));
            }
        }
        t
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Q)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Q) {
        if a.len() + b.len() > self.ctx.degree() {
            return;
        }
        add_entry(&mut self.terms, (L::canon(a), R::canon(b)), c);
    }

    pub fn add_term_ref(&mut self, a: &Word, b: &Word, c: &Q) {
        if a.len() + b.len() > self.ctx.degree() || c.is_zero() {
            return;
        }
        add_entry(&mut self.terms, (L::canon(a.clone()), R::canon(b.clone())), c.clone());
    }

    pub fn coeff(&self, a: &Word, b: &Word) -> Q {
        self.terms.get(&(L::canon(a.clone()), R::canon(b.clone()))).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        self.ctx.check(&other.ctx).expect("context");
        if c.is_zero() {
            return;
        }
        for (k, v) in other.terms.iter() {
            add_entry(&mut self.terms, k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut t = Self::zero(self.ctx);
        t.add_scaled(self, c);
        t
    }

    pub fn swap(&self) -> Tensor<R, L> {
        let mut t = Tensor::<R, L>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            t.terms.insert((b.clone(), a.clone()), c.clone());
        }
        t
    }

    pub fn degree_part(&self, d: usize) -> Self {
        let mut t = Self::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            if a.len() + b.len() == d {
                t.terms.insert((a.clone(), b.clone()), c.clone());
            }
        }
        t
    }

    pub fn truncated(&self, d: usize) -> Self {
        let mut t = Self::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            if a.len() + b.len() <= d {
                t.terms.insert((a.clone(), b.clone()), c.clone());
            }
        }
        t
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(a, b)| a.len() + b.len()).min()
    }

    pub fn with_context(&self, ctx: Context) -> Self {
        assert_eq!(ctx.n(), self.ctx.n());
        let mut t = Self::zero(ctx);
        for ((a, b), c) in self.terms.iter() {
            t.add_term_ref(a, b, c);
        }
        t
    }

    /// Applies a linear map word-by-word on the first slot.
    pub fn map_left<L2: Slot>(&self, f: impl Fn(&Word) -> Poly<L2>) -> Tensor<L2, R> {
        let mut t = Tensor::<L2, R>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            let img = f(a);
            for (w, x) in img.terms() {
                t.add_term_ref(w, b, &(x * c));
            }
        }
        t
    }

    /// Applies a linear map word-by-word on the second slot.
    pub fn map_right<R2: Slot>(&self, f: impl Fn(&Word) -> Poly<R2>) -> Tensor<L, R2> {
        let mut t = Tensor::<L, R2>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            let img = f(b);
            for (w, x) in img.terms() {
                t.add_term_ref(a, w, &(x * c));
            }
        }
        t
    }

    /// Canonicalises the first slot into cyclic words.
    pub fn project_left(&self) -> Tensor<Cyc, R> {
        let mut t = Tensor::<Cyc, R>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            t.add_term_ref(a, b, c);
        }
        t
    }

    pub fn project_right(&self) -> Tensor<L, Cyc> {
        let mut t = Tensor::<L, Cyc>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            t.add_term_ref(a, b, c);
        }
        t
    }

    pub fn project_both(&self) -> CycTensor {
        let mut t = CycTensor::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            t.add_term_ref(a, b, c);
        }
        t
    }

    /// Contracts the first slot with the augmentation-style functional `f`.
    pub fn contract_left(&self, f: impl Fn(&Word) -> Q) -> Poly<R> {
        let mut p = Poly::<R>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            p.add_term_ref(b, &(f(a) * c));
        }
        p
    }

    pub fn contract_right(&self, f: impl Fn(&Word) -> Q) -> Poly<L> {
        let mut p = Poly::<L>::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            p.add_term_ref(a, &(f(b) * c));
        }
        p
    }
}

impl<R: Slot> Tensor<Lin, R> {
    /// `(c⊗1)·t`: left multiplication in the first factor.
    pub fn first_left_mul(&self, c: &NCPoly) -> Self {
        let mut t = Self::zero(self.ctx);
        for ((a, b), x) in self.terms.iter() {
            for (w, y) in c.terms() {
                if w.len() + a.len() + b.len() > self.ctx.degree() {
                    break;
                }
                t.add_term_ref(&w.concat(a), b, &(x * y));
            }
        }
        t
    }

    /// `t·(c⊗1)`: right multiplication in the first factor.
    pub fn first_right_mul(&self, c: &NCPoly) -> Self {
        let mut t = Self::zero(self.ctx);
        for ((a, b), x) in self.terms.iter() {
            for (w, y) in c.terms() {
                if w.len() + a.len() + b.len() > self.ctx.degree() {
                    break;
                }
                t.add_term_ref(&a.concat(w), b, &(x * y));
            }
        }
        t
    }
}

impl<L: Slot> Tensor<L, Lin> {
    /// `(1⊗c)·t`.
    pub fn second_left_mul(&self, c: &NCPoly) -> Self {
        let mut t = Self::zero(self.ctx);
        for ((a, b), x) in self.terms.iter() {
            for (w, y) in c.terms() {
                if w.len() + a.len() + b.len() > self.ctx.degree() {
                    break;
                }
                t.add_term_ref(a, &w.concat(b), &(x * y));
            }
        }
        t
    }

    /// `t·(1⊗c)`.
    pub fn second_right_mul(&self, c: &NCPoly) -> Self {
        let mut t = Self::zero(self.ctx);
        for ((a, b), x) in self.terms.iter() {
            for (w, y) in c.terms() {
                if w.len() + a.len() + b.len() > self.ctx.degree() {
                    break;
                }
                t.add_term_ref(a, &b.concat(w), &(x * y));
            }
        }
        t
    }
}

impl TensorPoly {
    /// Product in A⊗A (componentwise).
    pub fn mul(&self, other: &Self) -> Self {
        self.ctx.check(&other.ctx).expect("context");
        let mut t = Self::zero(self.ctx);
        for ((a, b), x) in self.terms.iter() {
            for ((c, d), y) in other.terms.iter() {
                if a.len() + b.len() + c.len() + d.len() > self.ctx.degree() {
                    continue;
                }
                t.add_term_ref(&a.concat(c), &b.concat(d), &(x * y));
            }
        }
        t
    }

    /// Product in A⊗A^op: `(a⊗b)(c⊗d) = ac⊗db`.
    pub fn mul_op(&self, other: &Self) -> Self {
        self.ctx.check(&other.ctx).expect("context");
        let mut t = Self::zero(self.ctx);
        for ((a, b), x) in self.terms.iter() {
            for ((c, d), y) in other.terms.iter() {
                if a.len() + b.len() + c.len() + d.len() > self.ctx.degree() {
                    continue;
                }
                t.add_term_ref(&a.concat(c), &d.concat(b), &(x * y));
            }
        }
        t
    }

    /// Outer bimodule: `c·(a⊗b) = ca⊗b`.
    pub fn outer_left(&self, c: &NCPoly) -> Self {
        self.first_left_mul(c)
    }

    /// Outer bimodule: `(a⊗b)·c = a⊗bc`.
    pub fn outer_right(&self, c: &NCPoly) -> Self {
        self.second_right_mul(c)
    }

    /// Inner bimodule: `c1*(a⊗b)*c2 = ac2⊗c1b`.
    pub fn inner(&self, c1: &NCPoly, c2: &NCPoly) -> Self {
        self.second_left_mul(c1).first_right_mul(c2)
    }

    /// `Σ a·b`.
    pub fn multiply(&self) -> NCPoly {
        let mut p = NCPoly::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            p.add_term(a.concat(b), c.clone());
        }
        p
    }

    /// `Σ b·a`.
    pub fn multiply_swapped(&self) -> NCPoly {
        let mut p = NCPoly::zero(self.ctx);
        for ((a, b), c) in self.terms.iter() {
            p.add_term(b.concat(a), c.clone());
        }
        p
    }
}

impl CycTensor {
    /// `a∧b = a⊗b − b⊗a`.
    pub fn wedge(a: &Poly<Cyc>, b: &Poly<Cyc>) -> Self {
        let ab = Self::from_pair(a, b);
        let ba = Self::from_pair(b, a);
        &ab - &ba
    }
}

impl<L: Slot, R: Slot> fmt::Debug for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: Slot, R: Slot> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let show = |w: &Word, cyc: bool| if cyc { format!("|{}|", w) } else { w.to_string() };
        let mut first = true;
        for ((a, b), c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}){}⊗{}", c, show(a, L::CYCLIC), show(b, R::CYCLIC))?;
        }
        Ok(())
    }
}

impl<L: Slot, R: Slot> AddAssign<&Tensor<L, R>> for Tensor<L, R> {
    fn add_assign(&mut self, rhs: &Tensor<L, R>) {
        self.add_scaled(rhs, &Q::one());
    }
}

impl<L: Slot, R: Slot> SubAssign<&Tensor<L, R>> for Tensor<L, R> {
    fn sub_assign(&mut self, rhs: &Tensor<L, R>) {
        self.add_scaled(rhs, &-Q::one());
    }
}

impl<L: Slot, R: Slot> Add for &Tensor<L, R> {
    type Output = Tensor<L, R>;
    fn add(self, rhs: &Tensor<L, R>) -> Tensor<L, R> {
        let mut t = self.clone();
        t += rhs;
        t
    }
}

impl<L: Slot, R: Slot> Add for Tensor<L, R> {
    type Output = Tensor<L, R>;
    fn add(mut self, rhs: Tensor<L, R>) -> Tensor<L, R> {
        self += &rhs;
        self
    }
}

impl<L: Slot, R: Slot> Sub for &Tensor<L, R> {
    type Output = Tensor<L, R>;
    fn sub(self, rhs: &Tensor<L, R>) -> Tensor<L, R> {
        let mut t = self.clone();
        t -= rhs;
        t
    }
}

impl<L: Slot, R: Slot> Sub for Tensor<L, R> {
    type Output = Tensor<L, R>;
    fn sub(mut self, rhs: Tensor<L, R>) -> Tensor<L, R> {
        self -= &rhs;
        self
    }
}

impl<L: Slot, R: Slot> Neg for &Tensor<L, R> {
    type Output = Tensor<L, R>;
    fn neg(self) -> Tensor<L, R> {
        self.scale(&-Q::one())
    }
}

impl<L: Slot, R: Slot> Neg for Tensor<L, R> {
    type Output = Tensor<L, R>;
    fn neg(self) -> Tensor<L, R> {
        self.scale(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::poly::q;

    #[test]
    fn inner_and_outer_actions() {
        let c = Context::new(2, 5).unwrap();
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        let t = TensorPoly::from_pair(&x1, &x2);
        let inner = t.inner(&x2, &x1);
        assert_eq!(inner, TensorPoly::from_pair(&(&x1 * &x1), &(&x2 * &x2)));
        let outer = t.outer_left(&x2).outer_right(&x1);
        assert_eq!(outer, TensorPoly::from_pair(&(&x2 * &x1), &(&x2 * &x1)));
    }

    #[test]
    fn cyclic_slots_canonicalise() {
        let c = Context::new(2, 5).unwrap();
        let mut t = CycMixLeft::zero(c);
        t.add_term(Word::from_letters([1, 0]), Word::letter(0), q(1));
        t.add_term(Word::from_letters([0, 1]), Word::letter(0), q(1));
        assert_eq!(t.len(), 1);
    }
}
