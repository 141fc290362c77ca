//! Inner derivations and commutator membership in the free associative algebra.

use super::to_map;
use crate::cyclic::project;
use crate::deriv::Derivation;
use crate::error::{AlgebraError, Result};
use crate::linalg::{kernel_columns, rank_columns, solve_columns};
use crate::ncalg::{words_of_degree, words_up_to, Context, NCPoly, Word, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// First word a (degree-lexicographic) with |u(a)| ≠ 0.
pub fn inner_precondition_witness(u: &Derivation) -> Option<Word> {
    let ctx = u.ctx();
    words_up_to(ctx.n(), ctx.degree())
        .into_iter()
        .filter(|w| !w.is_empty())
        .find(|w| !project(&u.apply(&NCPoly::word(ctx, w.clone()))).is_zero())
}

/// w with u(a) = [a, w] for every a, assuming |u(a)| = 0 throughout.
pub fn inner_witness(u: &Derivation) -> Result<NCPoly> {
    if let Some(a) = inner_precondition_witness(u) {
        return Err(AlgebraError::Precondition(format!("|u({a})| ≠ 0")));
    }
    let ctx = u.ctx();
    let n = ctx.n();
    let mut w = NCPoly::zero(ctx);
    for d in 1..ctx.degree() {
        let words = words_of_degree(n, d);
        let columns: Vec<BTreeMap<(usize, Word), Q>> = words
            .iter()
            .map(|v| {
                let v = NCPoly::word(ctx, v.clone());
                let mut col = BTreeMap::new();
                for j in 0..n {
                    for (t, c) in NCPoly::generator(ctx, j).commutator(&v).terms() {
                        col.insert((j, t.clone()), c.clone());
                    }
                }
                col
            })
            .collect();
        let mut rhs = BTreeMap::new();
        for j in 0..n {
            for (t, c) in u.image(j).degree_part(d + 1).terms() {
                rhs.insert((j, t.clone()), c.clone());
            }
        }
        let sol = solve_columns(&columns, &rhs).ok_or_else(|| AlgebraError::Infeasible(format!("inner witness in degree {d}")))?;
        for (v, c) in words.into_iter().zip(sol) {
            if !c.is_zero() {
                w.add_term(v, c);
            }
        }
    }
    for j in 0..n {
        if u.image(j) != &NCPoly::generator(ctx, j).commutator(&w) {
            return Err(AlgebraError::Infeasible(format!("inner witness fails on x_{}", j + 1)));
        }
    }
    Ok(w)
}

fn homogeneous_degree(a: &NCPoly) -> Option<usize> {
    match (a.low_degree(), a.high_degree()) {
        (Some(l), Some(h)) if l == h => Some(l),
        _ => None,
    }
}

fn check_linear(x: &NCPoly) -> Result<()> {
    if homogeneous_degree(x) != Some(1) {
        return Err(AlgebraError::Precondition("x must be a nonzero element of degree 1".into()));
    }
    Ok(())
}

/// (a ∈ [x, A] by linear algebra, |a x^{m−1}| = 0) for homogeneous a of degree m ≥ 1.
pub fn commutator_methods(x: &NCPoly, a: &NCPoly) -> Result<(bool, bool)> {
    check_linear(x)?;
    if a.is_zero() {
        return Ok((true, true));
    }
    let m = homogeneous_degree(a).ok_or_else(|| AlgebraError::Precondition("a must be homogeneous".into()))?;
    if m == 0 {
        return Err(AlgebraError::Precondition("a must have positive degree".into()));
    }
    let ctx = a.ctx();
    let columns: Vec<BTreeMap<Word, Q>> =
        words_of_degree(ctx.n(), m - 1).into_iter().map(|v| to_map(&x.commutator(&NCPoly::word(ctx, v)))).collect();
    let linear = solve_columns(&columns, &to_map(a)).is_some();
    let big = ctx.with_degree(ctx.degree().max(2 * m - 1));
    let trace = project(&(&a.with_context(big) * &x.with_context(big).pow(m - 1))).is_zero();
    Ok((linear, trace))
}

/// Whether a ∈ [x, A]; an error if the two methods disagree.
pub fn commutator_test(x: &NCPoly, a: &NCPoly) -> Result<bool> {
    let (linear, trace) = commutator_methods(x, a)?;
    if linear != trace {
        return Err(AlgebraError::Infeasible(format!("commutator methods disagree on {a}")));
    }
    Ok(linear)
}

/// Compares [x, A_{m−1}] with the kernel of a ↦ |a x^{m−1}| on A_m; returns their dimensions and whether they coincide.
pub fn commutator_trace_kernel(x: &NCPoly, m: usize) -> Result<(usize, usize, bool)> {
    check_linear(x)?;
    let ctx = x.ctx();
    let big = ctx.with_degree(ctx.degree().max(2 * m - 1));
    let x = x.with_context(big);
    let image: Vec<BTreeMap<Word, Q>> =
        words_of_degree(ctx.n(), m - 1).into_iter().map(|v| to_map(&x.commutator(&NCPoly::word(big, v)))).collect();
    let trace: Vec<BTreeMap<Word, Q>> =
        words_of_degree(ctx.n(), m).into_iter().map(|v| to_map(&project(&(&NCPoly::word(big, v) * &x.pow(m - 1))))).collect();
    let image_dim = rank_columns(&image);
    let kernel_dim = trace.len() - rank_columns(&trace);
    let contained = image.iter().all(|col| {
        let a = NCPoly::from_terms(big, col.clone());
        project(&(&a * &x.pow(m - 1))).is_zero()
    });
    Ok((image_dim, kernel_dim, contained && image_dim == kernel_dim))
}

fn independent(ctx: Context, vs: Vec<BTreeMap<Word, Q>>) -> Vec<NCPoly> {
    let mut out: Vec<BTreeMap<Word, Q>> = Vec::new();
    for v in vs {
        let mut trial = out.clone();
        trial.push(v.clone());
        if rank_columns(&trial) > out.len() {
            out.push(v);
        }
    }
    out.into_iter().map(|m| NCPoly::from_terms(ctx, m)).collect()
}

/// {a ∈ A_d : [p, a] ∈ [q, A]} with p, q homogeneous.
fn commutant_condition(ctx: Context, d: usize, p: &NCPoly, q: &NCPoly) -> Vec<NCPoly> {
    let l = homogeneous_degree(p).unwrap_or(0);
    let a_words = words_of_degree(ctx.n(), d);
    let b_words = words_of_degree(ctx.n(), d + l - 1);
    let mut columns: Vec<BTreeMap<Word, Q>> = a_words.iter().map(|w| to_map(&p.commutator(&NCPoly::word(ctx, w.clone())))).collect();
    columns.extend(b_words.iter().map(|w| to_map(&-q.commutator(&NCPoly::word(ctx, w.clone())))));
    let parts = kernel_columns(&columns)
        .into_iter()
        .map(|v| a_words.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    independent(ctx, parts)
}

fn intersect(ctx: Context, u: &[NCPoly], v: &[NCPoly]) -> Vec<NCPoly> {
    let mut columns: Vec<BTreeMap<Word, Q>> = u.iter().map(to_map).collect();
    columns.extend(v.iter().map(|p| to_map(&-p)));
    let parts = kernel_columns(&columns)
        .into_iter()
        .map(|coef| {
            let mut s = NCPoly::zero(ctx);
            for (p, c) in u.iter().zip(&coef) {
                s.add_scaled(p, c);
            }
            to_map(&s)
        })
        .collect();
    independent(ctx, parts)
}

/// Basis of {a ∈ A_d : [x_1^l, a] ∈ [x_2, A] and [x_2^l, a] ∈ [x_1, A] for 1 ≤ l ≤ d}, n = 2.
pub fn commutant_pair_space(d: usize) -> Result<Vec<NCPoly>> {
    if d == 0 {
        return Err(AlgebraError::Precondition("degree must be positive".into()));
    }
    let ctx = Context::new(2, 2 * d)?;
    let x = NCPoly::generator(ctx, 0);
    let y = NCPoly::generator(ctx, 1);
    let mut space: Vec<NCPoly> = words_of_degree(2, d).into_iter().map(|w| NCPoly::word(ctx, w)).collect();
    for l in 1..=d {
        space = intersect(ctx, &space, &commutant_condition(ctx, d, &x.pow(l), &y));
        space = intersect(ctx, &space, &commutant_condition(ctx, d, &y.pow(l), &x));
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbk::kks_tder_via_needle;
    use crate::deriv::TDerivation;
    use crate::ncalg::CyclicPoly;

    fn ctx(n: usize, d: usize) -> Context {
        Context::new(n, d).unwrap()
    }

    #[test]
    fn witness_for_inner_derivations() {
        let c = ctx(2, 5);
        let x = |i| NCPoly::generator(c, i);
        let w = &x(0) * &x(1);
        assert_eq!(inner_witness(&Derivation::inner(&w)).unwrap(), w);

        let u = kks_tder_via_needle(&CyclicPoly::cyc(c, Word::from_letters([0, 1]))).rho();
        assert_eq!(inner_witness(&u).unwrap(), NCPoly::x0(c));

        let zero = TDerivation::q(c, 0).rho();
        assert!(inner_witness(&zero).unwrap().is_zero());
    }

    #[test]
    fn witness_rejects_outer() {
        let c = ctx(2, 4);
        let u = Derivation::new(c, vec![NCPoly::generator(c, 1), NCPoly::zero(c)]).unwrap();
        match inner_witness(&u) {
            Err(AlgebraError::Precondition(msg)) => assert!(msg.contains("x1")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn commutator_examples() {
        let c = ctx(2, 4);
        let x = |i| NCPoly::generator(c, i);
        assert!(commutator_test(&x(0), &x(0).commutator(&x(1))).unwrap());
        assert!(!commutator_test(&x(0), &x(1)).unwrap());
        assert!(commutator_test(&NCPoly::zero(c), &x(1)).is_err());
        assert!(commutator_test(&x(0), &(&x(1) + &(&x(0) * &x(1)))).is_err());
    }

    #[test]
    fn commutator_spaces_coincide() {
        for n in 2..=3 {
            let c = ctx(n, 4);
            for m in 1..=4 {
                let (img, ker, same) = commutator_trace_kernel(&NCPoly::generator(c, 0), m).unwrap();
                assert!(same, "n={n} m={m}: {img} vs {ker}");
            }
            let (_, _, same) = commutator_trace_kernel(&NCPoly::x0(c), 3).unwrap();
            assert!(same);
        }
    }

    #[test]
    fn commutant_pairs_are_powers() {
        for d in 1..=3 {
            let s = commutant_pair_space(d).unwrap();
            assert_eq!(s.len(), 2);
            let c = s[0].ctx();
            let powers = [NCPoly::generator(c, 0).pow(d), NCPoly::generator(c, 1).pow(d)];
            let mut cols: Vec<BTreeMap<Word, Q>> = s.iter().map(to_map).collect();
            cols.extend(powers.iter().map(to_map));
            assert_eq!(rank_columns(&cols), 2);
        }
    }
}
