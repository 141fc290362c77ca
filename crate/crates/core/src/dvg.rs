//! Divergence cocycles Div, c_i, tDiv, div, tDiv^T and their group integrals j, tJ.

use crate::cyclic::project;
use crate::deriv::{Derivation, TAutElement, TDerivation, TDoubleDerivation};
use crate::error::{AlgebraError, Result};
use crate::ncalg::{CycMixLeft, CycMixRight, CycTensor, CyclicPoly, NCPoly, TensorPoly, Word, Q};

/// ∂_i(a) = Σ over occurrences of x_i in each word: prefix ⊗ suffix.
pub fn partial(i: usize, a: &NCPoly) -> TensorPoly {
    let mut t = TensorPoly::zero(a.ctx());
    for (w, c) in a.terms() {
        for k in 0..w.len() {
            if w.at(k) == i {
                t.add_term(w.slice(0, k), w.slice(k + 1, w.len()), c.clone());
            }
        }
    }
    t
}

/// Div(u) = Σ_i |∂_i(u(x_i))|.
pub fn div_big(u: &Derivation) -> CycTensor {
    let mut out = CycTensor::zero(u.ctx());
    for i in 0..u.ctx().n() {
        out += &partial(i, u.image(i)).project_both();
    }
    out
}

/// c_i(u) = |u_i|.
pub fn c_coeff(u: &TDerivation, i: usize) -> CyclicPoly {
    project(u.comp(i))
}

/// tDiv(u) = Σ_i |x_i(∂_i u_i) − (∂_i u_i)x_i| (outer bimodule).
pub fn tdiv(u: &TDerivation) -> CycTensor {
    let ctx = u.ctx();
    let mut out = CycTensor::zero(ctx);
    for i in 0..ctx.n() {
        let xi = NCPoly::generator(ctx, i);
        let d = partial(i, u.comp(i));
        out += &d.outer_left(&xi).project_both();
        out -= &d.outer_right(&xi).project_both();
    }
    out
}

/// tDiv(u) = Div(ρ(u)) + Σ_i (c_i(u)⊗𝟏 − 𝟏⊗c_i(u)).
pub fn tdiv_via_div(u: &TDerivation) -> CycTensor {
    let ctx = u.ctx();
    let one = CyclicPoly::one(ctx);
    let mut out = div_big(&u.rho());
    for i in 0..ctx.n() {
        let c = c_coeff(u, i);
        out += &CycTensor::from_pair(&c, &one);
        out -= &CycTensor::from_pair(&one, &c);
    }
    out
}

/// div(u) = Σ_i |x_i (u_i)^i| for u with primitive components.
pub fn div_small(u: &TDerivation) -> Result<CyclicPoly> {
    for c in u.comps() {
        if let Some(d) = c.primitivity_defect() {
            return Err(AlgebraError::NotPrimitive(d));
        }
    }
    Ok(div_small_unchecked(u))
}

pub(crate) fn div_small_unchecked(u: &TDerivation) -> CyclicPoly {
    let ctx = u.ctx();
    let mut out = CyclicPoly::zero(ctx);
    for i in 0..ctx.n() {
        let ui = &u.comp(i).right_factors()[i];
        for (w, c) in ui.terms() {
            out.add_term(Word::letter(i).concat(w), c.clone());
        }
    }
    out
}

/// (tDiv^T(ψ), t̲Div^T(ψ)) in |A|⊗A and A⊗|A|.
pub fn tdiv_t_pair(psi: &TDoubleDerivation) -> (CycMixLeft, CycMixRight) {
    let ctx = psi.ctx();
    let mut left = TensorPoly::zero(ctx);
    let mut right = TensorPoly::zero(ctx);
    for i in 0..ctx.n() {
        let xi = NCPoly::generator(ctx, i);
        for ((c1, c2), k) in psi.coeff(i).terms() {
            let cp = NCPoly::monomial(ctx, c1.clone(), k.clone());
            let cpp = NCPoly::word(ctx, c2.clone());
            let d2 = partial(i, &cpp);
            if !d2.is_zero() {
                left += &d2.second_left_mul(&(&cp * &xi));
                left -= &d2.first_left_mul(&xi).second_left_mul(&cp);
            }
            let d1 = partial(i, &NCPoly::word(ctx, c1.clone()));
            if !d1.is_zero() {
                let cpp_k = cpp.scale(k);
                right += &d1.first_right_mul(&cpp_k).second_right_mul(&xi);
                right -= &d1.first_right_mul(&(&xi * &cpp_k));
            }
        }
    }
    (left.project_left(), right.project_right())
}

/// (1⊗| |)tDiv^T + (| |⊗1)t̲Div^T, which equals tDiv(|ψ|).
pub fn glue(pair: &(CycMixLeft, CycMixRight)) -> CycTensor {
    &pair.0.project_right() + &pair.1.project_left()
}

/// Σ_{k≥0} ρ(u)^k(c)/(k+1)!.
fn integrate_cyclic(u: &TDerivation, c: &CyclicPoly) -> CyclicPoly {
    let d = u.rho();
    let mut out = c.clone();
    let mut term = c.clone();
    for k in 2..=(u.ctx().degree() + 1) {
        term = d.apply_cyclic(&term).scale(&Q::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            break;
        }
        out += &term;
    }
    out
}

fn integrate_tensor(u: &TDerivation, c: &CycTensor) -> CycTensor {
    let d = u.rho();
    let mut out = c.clone();
    let mut term = c.clone();
    for k in 2..=(u.ctx().degree() + 1) {
        term = d.apply_tensor(&term).scale(&Q::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            break;
        }
        out += &term;
    }
    out
}

/// j(exp(u)) = ((e^u − 1)/u)·div(u).
pub fn j_of_exp(u: &TDerivation) -> CyclicPoly {
    integrate_cyclic(u, &div_small_unchecked(u))
}

pub fn tj_of_exp(u: &TDerivation) -> CycTensor {
    integrate_tensor(u, &tdiv(u))
}

/// j(F) through F = exp(log F).
pub fn j_int(f: &TAutElement) -> CyclicPoly {
    j_of_exp(&f.log())
}

pub fn tj_int(f: &TAutElement) -> CycTensor {
    tj_of_exp(&f.log())
}

/// j(e^{u_1}⋯e^{u_m}) via j(fg) = j(f) + f·j(g).
pub fn j_product(factors: &[TDerivation]) -> CyclicPoly {
    let ctx = factors.first().map(|u| u.ctx()).expect("at least one factor");
    let mut acc = CyclicPoly::zero(ctx);
    for u in factors.iter().rev() {
        let f = TAutElement::exp_unchecked(u);
        acc = &j_of_exp(u) + &f.apply_cyclic(&acc);
    }
    acc
}

/// F acting on |A|⊗|A| through ρ(F) in both slots.
pub fn act_cyc_tensor(f: &TAutElement, t: &CycTensor) -> CycTensor {
    f.apply_cyc_tensor(t)
}

/// (1⊗φ)·X for φ: |A| → A induced by a double derivation.
pub fn apply_second_on_cyclic(psi: &TDoubleDerivation, t: &CycTensor) -> CycMixLeft {
    let dd = psi.to_double();
    let ctx = psi.ctx();
    t.map_right(|w| dd.on_cyclic(&CyclicPoly::cyc(ctx, w.clone())))
}

/// (φ⊗1)·X landing in A⊗|A|.
pub fn apply_first_on_cyclic(psi: &TDoubleDerivation, t: &CycTensor) -> CycMixRight {
    let dd = psi.to_double();
    let ctx = psi.ctx();
    t.map_left(|w| dd.on_cyclic(&CyclicPoly::cyc(ctx, w.clone())))
}

pub fn is_zero_pair(p: &(CycMixLeft, CycMixRight)) -> bool {
    p.0.is_zero() && p.1.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{lyndon_basis, q, qf, Context};

    fn ctx() -> Context {
        Context::new(2, 5).unwrap()
    }

    fn x(c: Context, i: usize) -> NCPoly {
        NCPoly::generator(c, i)
    }

    fn cyc(c: Context, l: &[usize]) -> CyclicPoly {
        CyclicPoly::cyc(c, Word::from_letters(l.iter().copied()))
    }

    #[test]
    fn div_big_examples() {
        let c = ctx();
        let u = Derivation::new(c, vec![&x(c, 0) * &x(c, 0), &x(c, 1) * &x(c, 1)]).unwrap();
        let one = CyclicPoly::one(c);
        let mut expected = CycTensor::zero(c);
        for i in 0..2 {
            expected += &CycTensor::from_pair(&one, &cyc(c, &[i]));
            expected += &CycTensor::from_pair(&cyc(c, &[i]), &one);
        }
        assert_eq!(div_big(&u), expected);
        assert!(div_big(&Derivation::zero(c)).is_zero());
    }

    #[test]
    fn c_and_tdiv_examples() {
        let c = ctx();
        let q1 = TDerivation::q(c, 0);
        assert_eq!(c_coeff(&q1, 0), cyc(c, &[0]));
        assert!(c_coeff(&q1, 1).is_zero());
        let one = CyclicPoly::one(c);
        let expected = &CycTensor::from_pair(&cyc(c, &[0]), &one) - &CycTensor::from_pair(&one, &cyc(c, &[0]));
        assert_eq!(tdiv(&q1), expected);
        assert!(tdiv(&TDerivation::zero(c)).is_zero());
        let u = TDerivation::new(c, vec![x(c, 1), NCPoly::zero(c)]).unwrap();
        assert!(tdiv(&u).is_zero());
    }

    #[test]
    fn div_small_examples() {
        let c = ctx();
        assert_eq!(div_small(&TDerivation::q(c, 1)).unwrap(), cyc(c, &[1]));
        let u = TDerivation::new(c, vec![x(c, 0).commutator(&x(c, 1)), NCPoly::zero(c)]).unwrap();
        assert_eq!(div_small(&u).unwrap(), cyc(c, &[0, 1]).scale(&q(-1)));
        assert!(div_small(&TDerivation::zero(c)).unwrap().is_zero());
        let bad = TDerivation::new(c, vec![&x(c, 0) * &x(c, 1), NCPoly::zero(c)]).unwrap();
        assert!(div_small(&bad).is_err());
    }

    #[test]
    fn tdiv_formulas_agree_and_square_commutes() {
        let c = ctx();
        for d in 1..=4 {
            for b in lyndon_basis(c, d) {
                for i in 0..2 {
                    let mut comps = vec![NCPoly::zero(c), NCPoly::zero(c)];
                    comps[i] = b.as_poly().clone();
                    let u = TDerivation::new(c, comps).unwrap();
                    assert_eq!(tdiv(&u), tdiv_via_div(&u));
                    assert_eq!(crate::cyclic::tilde_delta_cyc(&div_small(&u).unwrap()), tdiv(&u));
                }
            }
        }
    }

    #[test]
    fn tdiv_t_examples() {
        let c = ctx();
        let p = tdiv_t_pair(&TDoubleDerivation::phi0(c));
        assert!(p.0.is_zero());
        assert!(is_zero_pair(&tdiv_t_pair(&TDoubleDerivation::ad_partial(c, 0))));
        let psi = TDoubleDerivation::ad_partial(c, 0).left_mul(&x(c, 1));
        assert_eq!(glue(&tdiv_t_pair(&psi)), tdiv(&psi.collapse()));
        let psi2 = TDoubleDerivation::ad_partial(c, 1).left_mul(&(&x(c, 0) * &x(c, 1))).right_mul(&(&x(c, 1) * &x(c, 0)));
        assert_eq!(glue(&tdiv_t_pair(&psi2)), tdiv(&psi2.collapse()));
    }

    #[test]
    fn j_examples() {
        let c = ctx();
        assert!(j_int(&TAutElement::identity(c)).is_zero());
        let f = TAutElement::exp(&TDerivation::q(c, 0)).unwrap();
        assert_eq!(j_int(&f), cyc(c, &[0]));
    }

    #[test]
    fn j_routes_agree() {
        let c = ctx();
        let u1 = TDerivation::new(c, vec![NCPoly::zero(c), x(c, 0).scale(&qf(-1, 2))]).unwrap();
        let u2 = TDerivation::new(c, vec![x(c, 0).commutator(&x(c, 1)), x(c, 1)]).unwrap();
        let prod = TAutElement::exp(&u1).unwrap().mul(&TAutElement::exp(&u2).unwrap());
        assert_eq!(j_product(&[u1, u2]), j_int(&prod));
        assert_eq!(crate::cyclic::tilde_delta_cyc(&j_int(&prod)), tj_int(&prod));
    }
}
