use super::{fit_duflo, to_map};
use crate::cyclic::project;
use crate::dbk::{kks_tder_via_needle, DoubleBracket};
use crate::deriv::TDerivation;
use crate::dvg::div_small_unchecked;
use crate::error::{AlgebraError, Result};
use crate::linalg::{kernel_columns, rank_columns};
use crate::ncalg::{lyndon_basis, words_of_degree, Context, CyclicPoly, NCPoly, Series, Word, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Canonical representatives of cyclic words of degree d.
pub fn necklaces(n: usize, d: usize) -> Vec<Word> {
    words_of_degree(n, d).into_iter().filter(|w| *w == w.min_rotation()).collect()
}

/// Basis of the degree-k special derivations (components in the Lyndon span of degree k).
pub fn sder_basis(ctx: Context, k: usize) -> Result<Vec<TDerivation>> {
    if ctx.degree() < k + 1 {
        return Err(AlgebraError::Precondition(format!("sDer in degree {k} needs truncation degree ≥ {}", k + 1)));
    }
    let basis = lyndon_basis(ctx, k);
    let mut columns = Vec::new();
    for i in 0..ctx.n() {
        let xi = NCPoly::generator(ctx, i);
        for b in &basis {
            columns.push(to_map(&xi.commutator(b.as_poly())));
        }
    }
    let out = kernel_columns(&columns)
        .into_iter()
        .map(|v| {
            let mut comps = vec![NCPoly::zero(ctx); ctx.n()];
            for (idx, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    comps[idx / basis.len()].add_scaled(basis[idx % basis.len()].as_poly(), c);
                }
            }
            TDerivation::new(ctx, comps).expect("size")
        })
        .collect();
    Ok(out)
}

/// |a| ↦ {|a|, −}_KKS as a special derivation, −(u_1,…,u_n) with N(|a|) = Σ x_i u_i.
pub fn cyclic_to_sder(c: &CyclicPoly) -> TDerivation {
    kks_tder_via_needle(c)
}

/// Inverse on each homogeneous part: a = −(1/(m+1)) Σ x_i v_i.
pub fn sder_to_cyclic(v: &TDerivation) -> Result<CyclicPoly> {
    let defect = v.special_defect();
    if let Some(d) = defect.low_degree() {
        return Err(AlgebraError::NotSpecial(d));
    }
    let ctx = v.ctx();
    let mut a = NCPoly::zero(ctx);
    for i in 0..ctx.n() {
        let xi = NCPoly::generator(ctx, i);
        for (w, c) in v.comp(i).terms() {
            let m = w.len() as i64;
            let term = &xi * &NCPoly::monomial(ctx, w.clone(), c.clone());
            a.add_scaled(&term, &Q::new((-1).into(), (m + 1).into()));
        }
    }
    Ok(project(&a))
}

/// Spanning set {|x_i^d|}_{i=0..n}, reduced to an independent subset.
pub fn center_basis(n: usize, d: usize) -> Result<Vec<CyclicPoly>> {
    let ctx = Context::new(n, d)?;
    let mut out: Vec<CyclicPoly> = Vec::new();
    let x0 = NCPoly::x0(ctx);
    let candidates = std::iter::once(x0).chain((0..n).map(|i| NCPoly::generator(ctx, i)));
    for x in candidates {
        let c = project(&x.pow(d));
        if !span_contains(&out, &c) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Kernel of c ↦ ({c, b}_KKS)_b on degree-d classes, b running over all necklaces of degree ≤ d+1.
pub fn center_bruteforce(n: usize, d: usize) -> Result<Vec<CyclicPoly>> {
    let big = Context::new(n, 2 * d)?;
    let kks = DoubleBracket::kks(big);
    let basis = necklaces(n, d);
    let probes: Vec<CyclicPoly> = (1..=d + 1).flat_map(|e| necklaces(n, e)).map(|w| CyclicPoly::cyc(big, w)).collect();
    let columns: Vec<BTreeMap<(usize, Word), Q>> = basis
        .iter()
        .map(|w| {
            let c = CyclicPoly::cyc(big, w.clone());
            let mut col = BTreeMap::new();
            for (j, b) in probes.iter().enumerate() {
                for (v, x) in kks.bracket(&c, b).terms() {
                    col.insert((j, v.clone()), x.clone());
                }
            }
            col
        })
        .collect();
    let ctx = Context::new(n, d)?;
    Ok(kernel_columns(&columns)
        .into_iter()
        .map(|v| CyclicPoly::from_terms(ctx, basis.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero())))
        .collect())
}

/// Whether `v` lies in the span of `basis`.
pub fn span_contains(basis: &[CyclicPoly], v: &CyclicPoly) -> bool {
    if v.is_zero() {
        return true;
    }
    let mut cols: Vec<BTreeMap<Word, Q>> = basis.iter().map(to_map).collect();
    let r = rank_columns(&cols);
    cols.push(to_map(v));
    rank_columns(&cols) == r
}

/// Membership in Σ_i |𝕂[[x_i]]|, tested degree by degree.
fn is_central(c: &CyclicPoly) -> Result<bool> {
    let ctx = c.ctx();
    for k in 1..=ctx.degree() {
        let ck = c.degree_part(k);
        if ck.is_zero() {
            continue;
        }
        let basis: Vec<CyclicPoly> = center_basis(ctx.n(), k)?.iter().map(|b| b.with_context(ctx)).collect();
        if !span_contains(&basis, &ck) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ϖ_k: x_k ↦ z, every other generator ↦ 0.
pub fn substitute_single(c: &CyclicPoly, k: usize) -> Series {
    let mut s = Series::zero(c.ctx().degree());
    for (w, x) in c.terms() {
        if !w.is_empty() && w.letters().iter().all(|&l| l as usize == k) {
            s.set(w.len(), &s.coeff(w.len()) + x);
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KrvClass {
    /// div(u) = |Σh(x_i) − h(Σx_i)|.
    Krv,
    /// div(u) central, with a nonzero q_i-part or no Duflo shape.
    KrvKks,
    Neither,
}

#[derive(Clone, Debug)]
pub struct KrvReport {
    pub class: KrvClass,
    /// Coefficients c_i of u = u' + Σ c_i q_i.
    pub q_part: Vec<Q>,
    /// h fitted to div(u') degree-wise.
    pub h: Series,
    /// div(u') minus its Duflo fit.
    pub residual: CyclicPoly,
    /// ϖ_k(div(u')) = 0 for every k (the hypothesis on u' holds by construction).
    pub substitution_checks: Vec<bool>,
}

/// Classifies a special derivation as in krv_n, in krv_n^KKS only, or neither.
pub fn krv_test(u: &TDerivation) -> Result<KrvReport> {
    if let Some(d) = u.special_defect().low_degree() {
        return Err(AlgebraError::NotSpecial(d));
    }
    let ctx = u.ctx();
    let div = div_small_unchecked(u);
    let q_part: Vec<Q> = (0..ctx.n()).map(|i| div.coeff(&Word::letter(i))).collect();
    let mut stripped = u.clone();
    for (i, c) in q_part.iter().enumerate() {
        stripped = stripped.sub(&TDerivation::q(ctx, i).scale(c));
    }
    let div_s = div_small_unchecked(&stripped);
    let substitution_checks = (0..ctx.n())
        .map(|k| {
            debug_assert!(stripped.comp(k).degree_part(1).coeff(&Word::letter(k)).is_zero());
            substitute_single(&div_s, k).coeffs().iter().all(|c| c.is_zero())
        })
        .collect();
    let (h, residual) = fit_duflo(&div_s);
    let class = if !is_central(&div)? {
        KrvClass::Neither
    } else if residual.is_zero() && q_part.iter().all(|c| c.is_zero()) {
        KrvClass::Krv
    } else {
        KrvClass::KrvKks
    };
    Ok(KrvReport { class, q_part, h, residual, substitution_checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{q, qf};

    fn ctx(n: usize, d: usize) -> Context {
        Context::new(n, d).unwrap()
    }

    fn cyc(c: Context, l: &[usize]) -> CyclicPoly {
        CyclicPoly::cyc(c, Word::from_letters(l.iter().copied()))
    }

    #[test]
    fn sder_dimensions() {
        let c = ctx(2, 5);
        // degree 1: q_1, q_2 and (x_2, x_1)
        assert_eq!(sder_basis(c, 1).unwrap().len(), 3);
        for k in 1..=4 {
            for b in sder_basis(c, k).unwrap() {
                assert!(b.is_special());
            }
        }
        assert!(sder_basis(c, 5).is_err());
    }

    #[test]
    fn needle_and_inverse() {
        let c = ctx(2, 4);
        let x = |i| NCPoly::generator(c, i);
        let u = cyclic_to_sder(&cyc(c, &[0, 1]));
        assert_eq!(u, TDerivation::new(c, vec![-x(1), -x(0)]).unwrap());
        assert_eq!(sder_to_cyclic(&u).unwrap(), cyc(c, &[0, 1]));
        assert!(cyclic_to_sder(&CyclicPoly::one(c)).is_zero());
        let bad = TDerivation::new(c, vec![x(1), NCPoly::zero(c)]).unwrap();
        assert!(matches!(sder_to_cyclic(&bad), Err(AlgebraError::NotSpecial(2))));
    }

    #[test]
    fn roundtrip_on_words() {
        let c = ctx(3, 5);
        for d in 1..=4 {
            for w in necklaces(3, d) {
                let class = CyclicPoly::cyc(c, w);
                let u = cyclic_to_sder(&class);
                assert!(u.is_special());
                assert_eq!(sder_to_cyclic(&u).unwrap(), class);
            }
        }
    }

    #[test]
    fn q_generator_matches_needle() {
        let c = ctx(2, 4);
        let half = qf(-1, 2);
        assert_eq!(cyclic_to_sder(&cyc(c, &[1, 1]).scale(&half)), TDerivation::q(c, 1));
    }

    #[test]
    fn center_dimensions() {
        let n2: Vec<usize> = (1..=4).map(|d| center_basis(2, d).unwrap().len()).collect();
        assert_eq!(n2, vec![2, 3, 3, 3]);
        for d in 1..=3 {
            let brute = center_bruteforce(2, d).unwrap();
            let span = center_basis(2, d).unwrap();
            assert_eq!(brute.len(), span.len());
            for b in &span {
                assert!(span_contains(&brute, b));
            }
        }
        assert_eq!(necklaces(2, 3).len(), 4);
    }

    #[test]
    fn classification() {
        let c = ctx(2, 5);
        let r = krv_test(&TDerivation::q(c, 0)).unwrap();
        assert_eq!(r.class, KrvClass::KrvKks);
        assert_eq!(r.q_part, vec![q(1), q(0)]);
        assert!(r.residual.is_zero());

        let u = cyclic_to_sder(&cyc(c, &[0, 0, 0, 1]));
        let r = krv_test(&u).unwrap();
        assert_eq!(r.class, KrvClass::Neither);
        let div = div_small_unchecked(&u);
        let brute: Vec<CyclicPoly> = center_bruteforce(2, 3).unwrap().iter().map(|b| b.with_context(c)).collect();
        assert!(!span_contains(&brute, &div.degree_part(3)));

        let bad = TDerivation::new(c, vec![NCPoly::generator(c, 1), NCPoly::zero(c)]).unwrap();
        assert!(krv_test(&bad).is_err());
    }

    #[test]
    fn lie_special_derivations_by_degree() {
        // n = 2: every special Lie derivation of degree ≤ 4 lies in krv^KKS
        let c2 = ctx(2, 5);
        for k in 1..=4 {
            for u in sder_basis(c2, k).unwrap() {
                assert_ne!(krv_test(&u).unwrap().class, KrvClass::Neither);
            }
        }
        // n = 3 has non-central divergences from degree 3 on
        let c3 = ctx(3, 4);
        let basis = sder_basis(c3, 3).unwrap();
        assert_eq!(basis.len(), 6);
        for u in &basis {
            assert_eq!(krv_test(u).unwrap().class, KrvClass::Neither);
        }
    }

    #[test]
    fn divergence_free_derivation_is_krv() {
        let c = ctx(2, 5);
        let t = TDerivation::new(c, vec![NCPoly::generator(c, 1), NCPoly::generator(c, 0)]).unwrap();
        let r = krv_test(&t).unwrap();
        assert_eq!(r.class, KrvClass::Krv);
        assert!(r.substitution_checks.iter().all(|&b| b));
    }
}
