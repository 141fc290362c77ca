//! Double brackets on A and their induced operations: Π_KKS, Π_s, Π_mult, Π_add, μ^alg, δ^alg.

use crate::cyclic::{project, tilde_delta};
use crate::deriv::{Derivation, DoubleDerivation, TDerivation, TDoubleDerivation};
use crate::dvg::{tdiv, tdiv_t_pair};
use crate::error::{AlgebraError, Result};
use crate::ncalg::{Context, CycMixLeft, CycMixRight, CycTensor, CyclicPoly, NCPoly, Series, TensorPoly, Word, Q};
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct DoubleBracket {
    name: String,
    ctx: Context,
    gen_table: Vec<Vec<TensorPoly>>,
    gen_sorted: Vec<Vec<Vec<(Word, Word, Q)>>>,
    tangential: Option<Vec<TDoubleDerivation>>,
    skew: bool,
    summands: Vec<DoubleBracket>,
}

impl DoubleBracket {
    /// Builds a tangential bracket from {x_i,−} ∈ tD_A; the generator table is derived from it.
    pub fn from_tangential(name: &str, ctx: Context, table: Vec<TDoubleDerivation>, skew: bool) -> Self {
        assert_eq!(table.len(), ctx.n());
        let gen_table: Vec<Vec<TensorPoly>> = table
            .iter()
            .map(|psi| {
                let dd = psi.to_double();
                dd.table().to_vec()
            })
            .collect();
        let gen_sorted = sorted_table(&gen_table);
        DoubleBracket { name: name.to_string(), ctx, gen_table, gen_sorted, tangential: Some(table), skew, summands: Vec::new() }
    }

    /// Builds a bracket from its values Π(x_i, x_j) only.
    pub fn from_generators(name: &str, ctx: Context, gen_table: Vec<Vec<TensorPoly>>, skew: bool) -> Self {
        let gen_sorted = sorted_table(&gen_table);
        DoubleBracket { name: name.to_string(), ctx, gen_table, gen_sorted, tangential: None, skew, summands: Vec::new() }
    }

    /// Π_KKS = Σ_i |∂_i ⊗ ad_{x_i}∂_i|.
    pub fn kks(ctx: Context) -> Self {
        let table = (0..ctx.n()).map(|i| TDoubleDerivation::ad_partial(ctx, i)).collect();
        Self::from_tangential("KKS", ctx, table, true)
    }

    /// Π_s with {x_i,−} = s'φ₀s''x_i − x_i s'φ₀s'' where s'⊗s'' = Δ̃(s(−x₀)).
    pub fn pi_s(ctx: Context, s: &Series) -> Self {
        let split = s_split(ctx, s);
        let table = (0..ctx.n())
            .map(|i| {
                let xi = NCPoly::generator(ctx, i);
                let c = &split.second_right_mul(&xi) - &split.first_left_mul(&xi);
                TDoubleDerivation::new(ctx, vec![c; ctx.n()]).expect("size")
            })
            .collect();
        Self::from_tangential("s", ctx, table, false)
    }

    /// Π_mult(x_i,−) = (1/(1−e^{−ad_{x_i}}))ad²_{x_i}∂_i + Σ_{k<i} ad_{x_i}(ad_{x_k}∂_k).
    pub fn pi_mult(ctx: Context) -> Self {
        let todd = Series::todd(ctx.degree());
        let table = (0..ctx.n())
            .map(|i| {
                let xi = NCPoly::generator(ctx, i);
                let mut cur = TDoubleDerivation::ad_partial(ctx, i);
                let mut acc = TDoubleDerivation::zero(ctx);
                for m in 0..=ctx.degree() {
                    if m > 0 {
                        cur = cur.ad(&xi);
                    }
                    acc = acc.add(&cur.scale(&todd.coeff(m)));
                }
                for k in 0..i {
                    acc = acc.add(&TDoubleDerivation::ad_partial(ctx, k).ad(&xi));
                }
                acc
            })
            .collect();
        Self::from_tangential("mult", ctx, table, false)
    }

    /// Π_KKS + Π_s with s(z) = 1/z − 1/(1−e^{−z}).
    pub fn pi_add(ctx: Context) -> Self {
        Self::sum("add", &Self::kks(ctx), &Self::pi_s(ctx, &Series::s_function(ctx.degree())))
    }

    /// Formal sum; the summands are retained.
    pub fn sum(name: &str, a: &DoubleBracket, b: &DoubleBracket) -> Self {
        a.ctx.check(&b.ctx).expect("context");
        let n = a.ctx.n();
        let gen_table: Vec<Vec<TensorPoly>> = (0..n).map(|i| (0..n).map(|j| &a.gen_table[i][j] + &b.gen_table[i][j]).collect()).collect();
        let tangential = match (&a.tangential, &b.tangential) {
            (Some(x), Some(y)) => Some(x.iter().zip(y).map(|(p, q)| p.add(q)).collect()),
            _ => None,
        };
        DoubleBracket {
            name: name.to_string(),
            ctx: a.ctx,
            gen_sorted: sorted_table(&gen_table),
            gen_table,
            tangential,
            skew: a.skew && b.skew,
            summands: vec![a.clone(), b.clone()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn is_skew(&self) -> bool {
        self.skew
    }

    pub fn is_tangential(&self) -> bool {
        self.tangential.is_some()
    }

    pub fn summands(&self) -> &[DoubleBracket] {
        &self.summands
    }

    pub fn generator_value(&self, i: usize, j: usize) -> &TensorPoly {
        &self.gen_table[i][j]
    }

    pub fn tangential_table(&self) -> Option<&[TDoubleDerivation]> {
        self.tangential.as_deref()
    }

    /// Π(a, b) from the generator table by both Leibniz rules.
    pub fn eval(&self, a: &NCPoly, b: &NCPoly) -> TensorPoly {
        let cap = self.ctx.degree();
        let mut acc: HashMap<(Word, Word), Q> = HashMap::new();
        for (z, cz) in a.terms() {
            let zl = z.letters();
            if zl.is_empty() {
                continue;
            }
            for (w, cw) in b.terms() {
                let wl = w.letters();
                if wl.is_empty() {
                    continue;
                }
                // Terms are ordered by length, so every later w is too long as well.
                if zl.len() + wl.len() > cap + 2 {
                    break;
                }
                let budget = cap + 2 - zl.len() - wl.len();
                let coef = cz * cw;
                for j in 0..zl.len() {
                    for k in 0..wl.len() {
                        for (p, q, c) in &self.gen_sorted[zl[j] as usize][wl[k] as usize] {
                            if p.len() + q.len() > budget {
                                break;
                            }
                            let left = Word::concat3(&wl[..k], p.letters(), &zl[j + 1..]);
                            let right = Word::concat3(&zl[..j], q.letters(), &wl[k + 1..]);
                            *acc.entry((left, right)).or_insert_with(Q::zero) += c * &coef;
                        }
                    }
                }
            }
        }
        let mut out = TensorPoly::zero(self.ctx);
        for ((l, r), c) in acc {
            out.add_term(l, r, c);
        }
        out
    }

    /// Π(a,−) ∈ tD_A.
    pub fn at(&self, a: &NCPoly) -> Result<TDoubleDerivation> {
        let table = self.tangential.as_ref().ok_or(AlgebraError::NotTangential)?;
        let n = self.ctx.n();
        let mut coeffs = vec![TensorPoly::zero(self.ctx); n];
        let cap = self.ctx.degree();
        for (z, cz) in a.terms() {
            let zl = z.letters();
            for j in 0..zl.len() {
                let psi = &table[zl[j] as usize];
                for (k, ck) in coeffs.iter_mut().enumerate() {
                    for ((p, q), c) in psi.coeff(k).terms() {
                        if p.len() + q.len() + zl.len() - 1 > cap {
                            continue;
                        }
                        let left = Word::concat3(&zl[..j], p.letters(), &[]);
                        let right = Word::concat3(q.letters(), &zl[j + 1..], &[]);
                        ck.add_term(left, right, c * cz);
                    }
                }
            }
        }
        TDoubleDerivation::new(self.ctx, coeffs)
    }

    /// Π(a,−) as a double derivation (valid without the tangential flag).
    pub fn as_double(&self, a: &NCPoly) -> DoubleDerivation {
        let table = (0..self.ctx.n()).map(|j| self.eval(a, &NCPoly::generator(self.ctx, j))).collect();
        DoubleDerivation::new(self.ctx, table).expect("size")
    }

    /// The tangential lift {|a|,−} ∈ tDer(A).
    pub fn tder(&self, c: &CyclicPoly) -> Result<TDerivation> {
        Ok(self.at(&c.lift())?.collapse())
    }

    /// b ↦ {|a|, b} = Π(a,b)'Π(a,b)''.
    pub fn bracket_derivation(&self, c: &CyclicPoly) -> Derivation {
        self.as_double(&c.lift()).collapse()
    }

    /// {|a|, |b|}.
    pub fn bracket(&self, c1: &CyclicPoly, c2: &CyclicPoly) -> CyclicPoly {
        project(&self.bracket_derivation(c1).apply(&c2.lift()))
    }

    /// {|a|, b}.
    pub fn bracket_left(&self, c: &CyclicPoly, b: &NCPoly) -> NCPoly {
        self.eval(&c.lift(), b).multiply()
    }

    /// {a, |b|} = Π(a,b)''Π(a,b)'.
    pub fn bracket_mixed(&self, a: &NCPoly, c: &CyclicPoly) -> NCPoly {
        self.eval(a, &c.lift()).multiply_swapped()
    }

    /// tDiv_Π(|a|) = tDiv({|a|,−}_Π).
    pub fn tdiv(&self, c: &CyclicPoly) -> Result<CycTensor> {
        Ok(tdiv(&self.tder(c)?))
    }

    /// tDiv^T_Π(a) = tDiv^T(Π(a,−)), both halves.
    pub fn tdiv_t(&self, a: &NCPoly) -> Result<(CycMixLeft, CycMixRight)> {
        Ok(tdiv_t_pair(&self.at(a)?))
    }
}

/// Generator values as term lists sorted by total degree.
fn sorted_table(table: &[Vec<TensorPoly>]) -> Vec<Vec<Vec<(Word, Word, Q)>>> {
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|t| {
                    let mut terms: Vec<(Word, Word, Q)> = t.terms().map(|((p, q), c)| (p.clone(), q.clone(), c.clone())).collect();
                    terms.sort_by_key(|(p, q, _)| p.len() + q.len());
                    terms
                })
                .collect()
        })
        .collect()
}

/// s'⊗s'' = Δ̃(s(−x₀)).
pub fn s_split(ctx: Context, s: &Series) -> TensorPoly {
    let minus_x0 = -NCPoly::x0(ctx);
    tilde_delta(&s.eval(&minus_x0))
}

/// Closed form Π_s(a,b) = s''a⊗s'b − bs''a⊗s' − s''⊗as'b + bs''⊗as'.
pub fn pi_s_closed(ctx: Context, s: &Series, a: &NCPoly, b: &NCPoly) -> TensorPoly {
    let split = s_split(ctx, s);
    let mut out = TensorPoly::zero(ctx);
    for ((p, q), c) in split.terms() {
        let sp = NCPoly::monomial(ctx, p.clone(), c.clone());
        let spp = NCPoly::word(ctx, q.clone());
        out += &TensorPoly::from_pair(&(&spp * a), &(&sp * b));
        out -= &TensorPoly::from_pair(&(&(b * &spp) * a), &sp);
        out -= &TensorPoly::from_pair(&spp, &(&(a * &sp) * b));
        out += &TensorPoly::from_pair(&(b * &spp), &(a * &sp));
    }
    out
}

/// μ^alg(z) = Σ_{j<k} δ_{z_j,z_k}(|z_{j+1}⋯z_{k−1}| ⊗ z_1⋯z_j z_{k+1}⋯z_m − |z_j⋯z_{k−1}| ⊗ z_1⋯z_{j−1} z_{k+1}⋯z_m).
pub fn mu_alg(a: &NCPoly) -> CycMixLeft {
    let mut out = CycMixLeft::zero(a.ctx());
    for (z, c) in a.terms() {
        let l = z.letters();
        let m = l.len();
        for j in 0..m {
            for k in (j + 1)..m {
                if l[j] != l[k] {
                    continue;
                }
                out.add_term(Word::from_slice(&l[j + 1..k]), Word::concat3(&l[..=j], &l[k + 1..], &[]), c.clone());
                out.add_term(Word::from_slice(&l[j..k]), Word::concat3(&l[..j], &l[k + 1..], &[]), -c.clone());
            }
        }
    }
    out
}

/// δ^alg(|z|) = −tDiv_KKS(|z|), by the explicit word formula.
pub fn delta_alg(cp: &CyclicPoly) -> CycTensor {
    let ctx = cp.ctx();
    let mut out = CycTensor::zero(ctx);
    for (z, c) in cp.terms() {
        let l = z.letters();
        let m = l.len();
        for j in 0..m {
            for k in (j + 1)..m {
                if l[j] != l[k] {
                    continue;
                }
                let a1 = Word::from_slice(&l[j..k]);
                let b1 = Word::concat3(&l[k + 1..], &l[..j], &[]);
                let a2 = Word::concat3(&l[k..], &l[..j], &[]);
                let b2 = Word::from_slice(&l[j + 1..k]);
                out.add_term(a1.clone(), b1.clone(), c.clone());
                out.add_term(b1, a1, -c.clone());
                out.add_term(a2.clone(), b2.clone(), c.clone());
                out.add_term(b2, a2, -c.clone());
            }
        }
    }
    out
}

/// The cyclic shortcut {|a|,−}_KKS = −(u_1,…,u_n) with N(|a|) = Σ x_i u_i.
pub fn kks_tder_via_needle(c: &CyclicPoly) -> TDerivation {
    let ctx = c.ctx();
    let n = crate::cyclic::needle(c);
    TDerivation::new(ctx, n.left_factors().into_iter().map(|p| -p).collect()).expect("size")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{q, qf, words_up_to};

    fn x(c: Context, i: usize) -> NCPoly {
        NCPoly::generator(c, i)
    }

    fn cyc(c: Context, l: &[usize]) -> CyclicPoly {
        CyclicPoly::cyc(c, Word::from_letters(l.iter().copied()))
    }

    fn w(c: Context, l: &[usize]) -> NCPoly {
        NCPoly::word(c, Word::from_letters(l.iter().copied()))
    }

    #[test]
    fn kks_generator_values() {
        let c = Context::new(2, 4).unwrap();
        let kks = DoubleBracket::kks(c);
        let one = NCPoly::one(c);
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j {
                    &TensorPoly::from_pair(&one, &x(c, i)) - &TensorPoly::from_pair(&x(c, i), &one)
                } else {
                    TensorPoly::zero(c)
                };
                assert_eq!(kks.eval(&x(c, i), &x(c, j)), expected);
            }
        }
        assert!(kks.eval(&x(c, 0), &one).is_zero());
    }

    #[test]
    fn kks_word_formula() {
        let c = Context::new(2, 6).unwrap();
        let kks = DoubleBracket::kks(c);
        for z in words_up_to(2, 3) {
            for v in words_up_to(2, 3) {
                let zl = z.letters();
                let wl = v.letters();
                let mut expected = TensorPoly::zero(c);
                for j in 0..zl.len() {
                    for k in 0..wl.len() {
                        if zl[j] != wl[k] {
                            continue;
                        }
                        expected.add_term(Word::concat3(&wl[..k], &zl[j + 1..], &[]), Word::concat3(&zl[..=j], &wl[k + 1..], &[]), q(1));
                        expected.add_term(Word::concat3(&wl[..k], &zl[j..], &[]), Word::concat3(&zl[..j], &wl[k + 1..], &[]), q(-1));
                    }
                }
                assert_eq!(kks.eval(&NCPoly::word(c, z.clone()), &NCPoly::word(c, v.clone())), expected);
            }
        }
    }

    #[test]
    fn kks_is_skew() {
        let c = Context::new(2, 6).unwrap();
        let kks = DoubleBracket::kks(c);
        for z in words_up_to(2, 3) {
            for v in words_up_to(2, 3) {
                let a = NCPoly::word(c, z.clone());
                let b = NCPoly::word(c, v.clone());
                assert_eq!(kks.eval(&b, &a), -kks.eval(&a, &b).swap());
            }
        }
    }

    #[test]
    fn kks_tder_examples() {
        let c = Context::new(3, 5).unwrap();
        let kks = DoubleBracket::kks(c);
        let u = kks.tder(&cyc(c, &[0, 1])).unwrap();
        assert_eq!(u, TDerivation::new(c, vec![-x(c, 1), -x(c, 0), NCPoly::zero(c)]).unwrap());
        assert_eq!(kks_tder_via_needle(&cyc(c, &[0, 1, 0, 2])), kks.tder(&cyc(c, &[0, 1, 0, 2])).unwrap());
        let h = &(&x(c, 1) * &x(c, 1)) + &x(c, 1).pow(3);
        let v = kks.tder(&project(&h)).unwrap();
        assert!(v.rho().is_zero());
    }

    #[test]
    fn necklace_bracket_examples() {
        let c = Context::new(3, 5).unwrap();
        let kks = DoubleBracket::kks(c);
        let br = kks.bracket(&cyc(c, &[0, 1]), &cyc(c, &[0, 2]));
        assert_eq!(br, &cyc(c, &[1, 0, 2]) - &cyc(c, &[0, 1, 2]));
        let x0 = NCPoly::x0(c);
        for k in 1..=3 {
            let cx = project(&x0.pow(k));
            assert!(kks.bracket(&cx, &cyc(c, &[0, 1, 2])).is_zero());
        }
        let a = &cyc(c, &[0, 1, 1]) + &cyc(c, &[2, 0]);
        assert!(kks.bracket(&a, &a).is_zero());
    }

    #[test]
    fn necklace_jacobi() {
        let c = Context::new(2, 7).unwrap();
        let kks = DoubleBracket::kks(c);
        let a = &cyc(c, &[0, 1]) + &cyc(c, &[0, 0, 1]);
        let b = &cyc(c, &[1, 1, 0]) - &cyc(c, &[0]);
        let d = cyc(c, &[0, 1, 1]);
        let j = &(&kks.bracket(&a, &kks.bracket(&b, &d)) + &kks.bracket(&b, &kks.bracket(&d, &a))) + &kks.bracket(&d, &kks.bracket(&a, &b));
        assert!(j.is_zero());
    }

    #[test]
    fn brackets_with_powers_of_generators_and_boundary() {
        let c = Context::new(2, 6).unwrap();
        let kks = DoubleBracket::kks(c);
        let a = &w(c, &[0, 1, 1]) + &w(c, &[1, 0]);
        let hx1 = project(&x(c, 0).pow(3));
        assert!(kks.bracket_mixed(&a, &hx1).is_zero());
        let x0 = NCPoly::x0(c);
        let h = project(&x0.pow(3));
        let hdot = x0.pow(2).scale(&q(3));
        assert_eq!(kks.bracket_mixed(&a, &h), -a.commutator(&hdot));
        assert_eq!(kks.bracket_left(&h, &a), a.commutator(&hdot));
    }

    #[test]
    fn bracket_with_split_powers_of_boundary() {
        let c = Context::new(2, 7).unwrap();
        let kks = DoubleBracket::kks(c);
        let x0 = NCPoly::x0(c);
        let a = &w(c, &[0, 1]) - &w(c, &[1]);
        for m in 1..=3usize {
            let split = tilde_delta(&x0.pow(m));
            let mut lhs = NCPoly::zero(c);
            for ((p, qq), k) in split.terms() {
                let hp = CyclicPoly::cyc(c, p.clone());
                let ahpp = &a * &NCPoly::word(c, qq.clone());
                lhs.add_scaled(&kks.bracket_left(&hp, &ahpp), k);
            }
            let mut hdot = Series::zero(c.degree());
            hdot.set(m - 1, q(m as i64));
            let mut rhs = -crate::ncalg::ad_series(&hdot, &x0, &a);
            rhs.add_scaled(&a, &hdot.coeff(0));
            assert_eq!(lhs, rhs, "m={m}");
        }
    }

    #[test]
    fn pi_s_matches_closed_form() {
        let c = Context::new(2, 5).unwrap();
        let s = Series::s_function(5);
        let ps = DoubleBracket::pi_s(c, &s);
        for z in words_up_to(2, 2) {
            for v in words_up_to(2, 2) {
                let a = NCPoly::word(c, z.clone());
                let b = NCPoly::word(c, v.clone());
                assert_eq!(ps.eval(&a, &b), pi_s_closed(c, &s, &a, &b), "{z} {v}");
            }
        }
        let half = Series::constant(qf(-1, 2), 5);
        let pc = DoubleBracket::pi_s(c, &half);
        let a = w(c, &[0, 1]);
        let b = w(c, &[1]);
        let one = NCPoly::one(c);
        let mut expected = TensorPoly::from_pair(&a, &b);
        expected -= &TensorPoly::from_pair(&(&b * &a), &one);
        expected -= &TensorPoly::from_pair(&one, &(&a * &b));
        expected += &TensorPoly::from_pair(&b, &a);
        assert_eq!(pc.eval(&a, &b), expected.scale(&qf(-1, 2)));
    }

    #[test]
    fn pi_s_induced_operations_vanish() {
        let c = Context::new(2, 5).unwrap();
        let ps = DoubleBracket::pi_s(c, &Series::s_function(5));
        for z in words_up_to(2, 3) {
            let cz = CyclicPoly::cyc(c, z.clone());
            assert!(ps.tder(&cz).unwrap().rho().apply_cyclic(&cyc(c, &[0, 1, 1])).is_zero());
            assert!(ps.tder(&cz).unwrap().rho().is_zero());
            assert!(ps.bracket_mixed(&w(c, &[1, 0]), &cz).is_zero());
            assert!(ps.tdiv(&cz).unwrap().is_zero());
        }
    }

    #[test]
    fn pi_s_tdiv_t_closed_form() {
        let c = Context::new(2, 5).unwrap();
        let s = Series::s_function(5);
        let ps = DoubleBracket::pi_s(c, &s);
        let split = s_split(c, &s);
        for z in words_up_to(2, 3) {
            let a = NCPoly::word(c, z.clone());
            let mut expected = TensorPoly::zero(c);
            for ((p, qq), k) in split.terms() {
                let sp = NCPoly::monomial(c, p.clone(), k.clone());
                let spp = NCPoly::word(c, qq.clone());
                expected += &TensorPoly::from_pair(&spp, &(&a * &sp));
                expected -= &TensorPoly::from_pair(&(&spp * &a), &sp);
            }
            assert_eq!(ps.tdiv_t(&a).unwrap().0, expected.project_left());
        }
    }

    #[test]
    fn pi_mult_generator_values() {
        let c = Context::new(2, 5).unwrap();
        let pm = DoubleBracket::pi_mult(c);
        assert!(pm.eval(&x(c, 0), &x(c, 1)).is_zero());
        let one = NCPoly::one(c);
        let mut expected = TensorPoly::from_pair(&one, &w(c, &[1, 0]));
        expected += &TensorPoly::from_pair(&w(c, &[0, 1]), &one);
        expected -= &TensorPoly::from_pair(&x(c, 0), &x(c, 1));
        expected -= &TensorPoly::from_pair(&x(c, 1), &x(c, 0));
        assert_eq!(pm.eval(&x(c, 1), &x(c, 0)), expected);
        for i in 0..2 {
            let e = x(c, i).exp().unwrap();
            let ee = &e * &e;
            let expected = &TensorPoly::from_pair(&one, &ee) - &TensorPoly::from_pair(&e, &e);
            assert_eq!(pm.eval(&e, &e), expected);
        }
    }

    #[test]
    fn delta_and_mu_alg_examples() {
        let c = Context::new(2, 5).unwrap();
        let one = CyclicPoly::one(c);
        assert!(delta_alg(&cyc(c, &[0])).is_zero());
        let d = delta_alg(&cyc(c, &[0, 0]));
        assert_eq!(d, CycTensor::wedge(&cyc(c, &[0]), &one).scale(&q(2)));
        let kks = DoubleBracket::kks(c);
        assert_eq!(kks.tdiv(&cyc(c, &[0, 0])).unwrap(), -d);
        let mut expected = CycMixLeft::zero(c);
        expected.add_term(Word::empty(), Word::letter(0), q(1));
        expected.add_term(Word::letter(0), Word::empty(), q(-1));
        assert_eq!(mu_alg(&w(c, &[0, 0])), expected);
    }

    #[test]
    fn alg_formulas_match_generic_composites() {
        let c = Context::new(2, 6).unwrap();
        let kks = DoubleBracket::kks(c);
        for z in words_up_to(2, 5) {
            let a = NCPoly::word(c, z.clone());
            assert_eq!(mu_alg(&a), kks.tdiv_t(&a).unwrap().0, "{z}");
            let cz = CyclicPoly::cyc(c, z.clone());
            assert_eq!(delta_alg(&cz), -kks.tdiv(&cz).unwrap(), "{z}");
        }
    }

    #[test]
    fn product_rules_for_tdiv_t() {
        let c = Context::new(2, 5).unwrap();
        let brackets = [DoubleBracket::kks(c), DoubleBracket::pi_s(c, &Series::s_function(5)), DoubleBracket::pi_mult(c), DoubleBracket::pi_add(c)];
        let pairs = [(w(c, &[0, 1]), w(c, &[1])), (w(c, &[1, 1]), w(c, &[0, 1])), (w(c, &[0]), &w(c, &[1, 0]) + &w(c, &[0]))];
        for br in &brackets {
            for (a, b) in &pairs {
                let (l_ab, r_ab) = br.tdiv_t(&(a * b)).unwrap();
                let (la, ra) = br.tdiv_t(a).unwrap();
                let (lb, rb) = br.tdiv_t(b).unwrap();
                let pab = br.eval(a, b);
                let pba = br.eval(b, a);
                let left = &(&la.second_right_mul(b) + &lb.second_left_mul(a)) + &pab.project_left();
                assert_eq!(l_ab, left, "{}", br.name());
                let right = &(&ra.first_right_mul(b) + &rb.first_left_mul(a)) + &pba.project_right();
                assert_eq!(r_ab, right, "{}", br.name());
            }
        }
    }
}
