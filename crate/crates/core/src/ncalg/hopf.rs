use super::poly::{Context, NCPoly, Q};
use super::tensor::TensorPoly;
use super::word::Word;
use crate::error::{AlgebraError, Result};
use num_traits::{One, Zero};
use std::ops::Deref;

impl NCPoly {
    /// Coproduct with Δ(x_i) = x_i⊗1 + 1⊗x_i (sum over ordered subword splittings).
    pub fn coproduct(&self) -> TensorPoly {
        let mut t = TensorPoly::zero(self.ctx());
        for (w, c) in self.terms() {
            let m = w.len();
            for mask in 0u32..(1u32 << m) {
                let mut left = Vec::with_capacity(m);
                let mut right = Vec::with_capacity(m);
                for k in 0..m {
                    if mask & (1 << k) != 0 {
                        left.push(w.at(k));
                    } else {
                        right.push(w.at(k));
                    }
                }
                t.add_term(Word::from_letters(left), Word::from_letters(right), c.clone());
            }
        }
        t
    }

    /// Antipode ι(x_i) = −x_i, an anti-automorphism.
    pub fn antipode(&self) -> NCPoly {
        NCPoly::from_terms(
            self.ctx(),
            self.terms().map(|(w, c)| {
                let v = if w.len() % 2 == 0 { c.clone() } else { -c.clone() };
                (w.reversed(), v)
            }),
        )
    }

    /// First degree where Δa ≠ a⊗1 + 1⊗a, if any.
    pub fn primitivity_defect(&self) -> Option<usize> {
        let one = NCPoly::one(self.ctx());
        let expected = &TensorPoly::from_pair(self, &one) + &TensorPoly::from_pair(&one, self);
        (&self.coproduct() - &expected).low_degree()
    }

    pub fn is_primitive(&self) -> bool {
        self.primitivity_defect().is_none()
    }

    /// First degree where Δg ≠ g⊗g, if any.
    pub fn group_like_defect(&self) -> Option<usize> {
        (&self.coproduct() - &TensorPoly::from_pair(self, self)).low_degree()
    }

    pub fn is_group_like(&self) -> bool {
        self.eps().is_one() && self.group_like_defect().is_none()
    }

    pub fn exp(&self) -> Result<NCPoly> {
        if !self.eps().is_zero() {
            return Err(AlgebraError::Precondition("exp needs zero augmentation".into()));
        }
        Ok(exp_unchecked(self))
    }

    pub fn log(&self) -> Result<NCPoly> {
        if !self.eps().is_one() {
            return Err(AlgebraError::Precondition("log needs augmentation 1".into()));
        }
        let y = self - &NCPoly::one(self.ctx());
        let mut out = NCPoly::zero(self.ctx());
        let mut pw = y.clone();
        let mut k = 1i64;
        while !pw.is_zero() {
            let c = Q::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, k.into());
            out.add_scaled(&pw, &c);
            pw = &pw * &y;
            k += 1;
        }
        Ok(out)
    }
}

fn exp_unchecked(a: &NCPoly) -> NCPoly {
    let mut out = NCPoly::one(a.ctx());
    let mut term = NCPoly::one(a.ctx());
    let mut k = 1i64;
    loop {
        term = (&term * a).scale(&Q::new(1.into(), k.into()));
        if term.is_zero() {
            break;
        }
        out += &term;
        k += 1;
    }
    out
}

/// A primitive element of A, i.e. an element of the free Lie algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement(NCPoly);

impl LieElement {
    pub fn new(p: NCPoly) -> Result<Self> {
        match p.primitivity_defect() {
            None => Ok(LieElement(p)),
            Some(d) => Err(AlgebraError::NotPrimitive(d)),
        }
    }

    /// Wraps a value known to be primitive by construction.
    pub fn new_unchecked(p: NCPoly) -> Self {
        LieElement(p)
    }

    pub fn zero(ctx: Context) -> Self {
        LieElement(NCPoly::zero(ctx))
    }

    pub fn generator(ctx: Context, i: usize) -> Self {
        LieElement(NCPoly::generator(ctx, i))
    }

    pub fn bracket(&self, other: &LieElement) -> LieElement {
        LieElement(self.0.commutator(&other.0))
    }

    pub fn into_poly(self) -> NCPoly {
        self.0
    }

    pub fn as_poly(&self) -> &NCPoly {
        &self.0
    }
}

impl Deref for LieElement {
    type Target = NCPoly;
    fn deref(&self) -> &NCPoly {
        &self.0
    }
}

/// `log(e^a e^b)`.
pub fn bch(a: &LieElement, b: &LieElement) -> LieElement {
    let ea = exp_unchecked(a);
    let eb = exp_unchecked(b);
    LieElement((&ea * &eb).log().expect("group-like product"))
}

/// `log(e^{x_1}⋯e^{x_n})`.
pub fn bch_of_generators(ctx: Context) -> LieElement {
    let mut g = NCPoly::one(ctx);
    for i in 0..ctx.n() {
        g = &g * &exp_unchecked(&NCPoly::generator(ctx, i));
    }
    LieElement(g.log().expect("group-like"))
}
