//! Cyclic words |A| = A/[A,A], the map Δ̃ = (1⊗ι)Δ and the symmetrisation N.

use crate::ncalg::{Context, CycTensor, CyclicPoly, NCPoly, Poly, TensorPoly, Word, Q};
use num_traits::One;
use std::fmt;

/// Canonical representative of a necklace: the minimal rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(w: Word) -> Self {
        CyclicWord(w.min_rotation())
    }

    pub fn representative(&self) -> &Word {
        &self.0
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}|", self.0)
    }
}

impl CyclicPoly {
    pub fn from_cyclic_word(ctx: Context, w: &CyclicWord, c: Q) -> Self {
        Poly::monomial(ctx, w.0.clone(), c)
    }

    /// `|w|` with coefficient one.
    pub fn cyc(ctx: Context, w: Word) -> Self {
        Poly::monomial(ctx, w, Q::one())
    }

    /// Any linear lift (each class mapped to its canonical representative).
    pub fn lift(&self) -> NCPoly {
        NCPoly::from_terms(self.ctx(), self.terms().map(|(w, c)| (w.clone(), c.clone())))
    }
}

pub fn project(a: &NCPoly) -> CyclicPoly {
    let mut p = CyclicPoly::zero(a.ctx());
    for (w, c) in a.terms() {
        p.add_term_ref(w, c);
    }
    p
}

/// N(|z_1⋯z_m|) = Σ_j z_j⋯z_m z_1⋯z_{j−1}.
pub fn needle(c: &CyclicPoly) -> NCPoly {
    let mut out = NCPoly::zero(c.ctx());
    for (w, x) in c.terms() {
        for k in 0..w.len() {
            out.add_term(w.rotate(k), x.clone());
        }
    }
    out
}

/// Δ̃ = (1⊗ι)Δ.
pub fn tilde_delta(a: &NCPoly) -> TensorPoly {
    a.coproduct().map_right(|w| NCPoly::word(a.ctx(), w.clone()).antipode())
}

pub fn tilde_delta_cyc(c: &CyclicPoly) -> CycTensor {
    tilde_delta(&c.lift()).project_both()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{q, words_up_to};

    fn ctx() -> Context {
        Context::new(2, 5).unwrap()
    }

    #[test]
    fn project_examples() {
        let c = ctx();
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        assert_eq!(project(&(&x1 * &x2)), project(&(&x2 * &x1)));
        assert!(project(&x1.commutator(&x2)).is_zero());
        assert_eq!(project(&NCPoly::one(c)), CyclicPoly::one(c));
    }

    #[test]
    fn project_is_rotation_invariant() {
        let c = ctx();
        for w in words_up_to(2, 5) {
            for k in 0..w.len() {
                assert_eq!(project(&NCPoly::word(c, w.rotate(k))), project(&NCPoly::word(c, w.clone())));
            }
        }
    }

    #[test]
    fn needle_examples() {
        let c = ctx();
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        assert_eq!(needle(&CyclicPoly::cyc(c, Word::from_letters([0, 1]))), &(&x1 * &x2) + &(&x2 * &x1));
        assert!(needle(&CyclicPoly::one(c)).is_zero());
        assert_eq!(needle(&CyclicPoly::cyc(c, Word::from_letters([0, 0]))), (&x1 * &x1).scale(&q(2)));
        for w in words_up_to(2, 5) {
            let a = NCPoly::word(c, w.clone());
            assert_eq!(project(&needle(&project(&a))), project(&a).scale(&q(w.len() as i64)));
        }
    }

    #[test]
    fn tilde_delta_examples() {
        let c = ctx();
        let x1 = NCPoly::generator(c, 0);
        let one = NCPoly::one(c);
        assert_eq!(tilde_delta(&x1), &TensorPoly::from_pair(&x1, &one) - &TensorPoly::from_pair(&one, &x1));
        assert_eq!(tilde_delta(&one), TensorPoly::unit(c));
        let cx1 = CyclicPoly::cyc(c, Word::letter(0));
        let u = CyclicPoly::one(c);
        assert_eq!(tilde_delta_cyc(&cx1), &CycTensor::from_pair(&cx1, &u) - &CycTensor::from_pair(&u, &cx1));
    }

    #[test]
    fn tilde_delta_is_injective_via_counit() {
        let c = ctx();
        for w in words_up_to(2, 4) {
            let a = NCPoly::word(c, w);
            let back = tilde_delta(&a).contract_right(|v| if v.is_empty() { Q::one() } else { q(0) });
            assert_eq!(back, a);
        }
    }
}
