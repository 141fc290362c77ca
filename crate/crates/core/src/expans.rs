//! Expansions θ: π → A and the transfer of κ, μ, μ_{*•}, δ⁺ along them.

use crate::cyclic::{project, tilde_delta};
use crate::dbk::{delta_alg, mu_alg, s_split, DoubleBracket};
use crate::deriv::TAutElement;
use crate::error::{AlgebraError, Result};
use crate::grp::{self, FreeWord, GSlot, GTensor, GroupRingElt, LoopElt};
use crate::linalg::solve_columns;
use crate::ncalg::{
    lyndon_basis, Context, CycMixLeft, CycMixRight, CycTensor, CyclicPoly, NCPoly, Poly, Series, Slot, Tensor, TensorPoly, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug)]
pub struct Expansion {
    name: String,
    ctx: Context,
    images: Vec<NCPoly>,
    inverse_images: Vec<NCPoly>,
    tangential: Option<Vec<NCPoly>>,
    provenance: Option<TAutElement>,
}

impl Expansion {
    /// θ^exp(γ_i) = e^{x_i}.
    pub fn theta_exp(ctx: Context) -> Self {
        let images: Vec<NCPoly> = (0..ctx.n()).map(|i| NCPoly::generator(ctx, i).exp().expect("primitive")).collect();
        let inverse_images = images.iter().map(|p| p.antipode()).collect();
        Expansion {
            name: "exp".into(),
            ctx,
            images,
            inverse_images,
            tangential: Some(vec![NCPoly::zero(ctx); ctx.n()]),
            provenance: Some(TAutElement::identity(ctx)),
        }
    }

    /// θ_F = F^{-1}∘θ^exp.
    pub fn theta_from_taut(f: &TAutElement) -> Self {
        let ctx = f.ctx();
        let finv = f.inverse();
        let images: Vec<NCPoly> = (0..ctx.n()).map(|i| finv.apply(&NCPoly::generator(ctx, i).exp().expect("primitive"))).collect();
        let inverse_images = images.iter().map(|p| p.antipode()).collect();
        let tangential = finv.component_logs().into_iter().map(|l| -l).collect();
        Expansion { name: "F".into(), ctx, images, inverse_images, tangential: Some(tangential), provenance: Some(f.clone()) }
    }

    /// A group-like expansion from arbitrary generator images.
    pub fn from_images(name: &str, ctx: Context, images: Vec<NCPoly>) -> Result<Self> {
        if images.len() != ctx.n() {
            return Err(AlgebraError::Precondition(format!("expected {} images", ctx.n())));
        }
        for (i, p) in images.iter().enumerate() {
            let expected = &NCPoly::one(ctx) + &NCPoly::generator(ctx, i);
            if p.truncated(1) != expected {
                return Err(AlgebraError::Precondition(format!("image {} does not start with 1 + x{}", i + 1, i + 1)));
            }
            if !p.is_group_like() {
                return Err(AlgebraError::Precondition(format!("image {} is not group-like", i + 1)));
            }
        }
        let inverse_images = images.iter().map(|p| p.antipode()).collect();
        Ok(Expansion { name: name.into(), ctx, images, inverse_images, tangential: None, provenance: None })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn images(&self) -> &[NCPoly] {
        &self.images
    }

    pub fn tangential_data(&self) -> Option<&[NCPoly]> {
        self.tangential.as_deref()
    }

    pub fn provenance(&self) -> Option<&TAutElement> {
        self.provenance.as_ref()
    }

    fn letter_image(&self, l: i8) -> &NCPoly {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            &self.images[i]
        } else {
            &self.inverse_images[i]
        }
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        if rank > self.ctx.n() {
            return Err(AlgebraError::Precondition(format!("word uses g{rank} but n = {}", self.ctx.n())));
        }
        Ok(())
    }

    pub fn expand_word(&self, w: &FreeWord) -> Result<NCPoly> {
        self.check_rank(w.rank())?;
        let mut out = NCPoly::one(self.ctx);
        for &l in w.letters() {
            out = &out * self.letter_image(l);
        }
        Ok(out)
    }

    pub fn expand(&self, x: &GroupRingElt) -> Result<NCPoly> {
        let mut out = NCPoly::zero(self.ctx);
        for (w, c) in x.terms() {
            out.add_scaled(&self.expand_word(w)?, c);
        }
        Ok(out)
    }

    pub fn expand_cyc(&self, c: &LoopElt) -> Result<CyclicPoly> {
        Ok(project(&self.expand(&c.lift())?))
    }

    /// (θ⊗θ) on a tensor, before projecting loop slots.
    pub fn expand_tensor<L: GSlot, R: GSlot>(&self, t: &GTensor<L, R>) -> Result<TensorPoly> {
        let mut cache = HashMap::new();
        self.expand_tensor_cached(t, &mut cache)
    }

    fn expand_cached(&self, w: &FreeWord, cache: &mut HashMap<FreeWord, NCPoly>) -> Result<NCPoly> {
        if let Some(p) = cache.get(w) {
            return Ok(p.clone());
        }
        let p = self.expand_word(w)?;
        cache.insert(w.clone(), p.clone());
        Ok(p)
    }

    fn expand_tensor_cached<L: GSlot, R: GSlot>(&self, t: &GTensor<L, R>, cache: &mut HashMap<FreeWord, NCPoly>) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero(self.ctx);
        for ((a, b), c) in t.terms() {
            let pa = self.expand_cached(a, cache)?;
            let pb = self.expand_cached(b, cache)?;
            out.add_scaled(&TensorPoly::from_pair(&pa, &pb), c);
        }
        Ok(out)
    }

    /// Checks conditions (group-like, tangential, special) of the definition.
    pub fn is_special(&self) -> SpecialCheck {
        let ctx = self.ctx;
        let group_like = self.images.iter().filter_map(|p| p.group_like_defect()).min();
        let tangential = match &self.tangential {
            Some(g) => (0..ctx.n())
                .filter_map(|i| {
                    let eg = g[i].exp().ok()?;
                    let conj = &(&eg * &NCPoly::generator(ctx, i).exp().ok()?) * &eg.antipode();
                    (&conj - &self.images[i]).low_degree()
                })
                .min(),
            None => (0..ctx.n()).filter_map(|i| find_conjugator(&self.images[i], i).err()).min(),
        };
        let all = FreeWord::from_letters((1..=ctx.n() as i8).collect::<Vec<_>>());
        let prod = self.expand_word(&all).expect("rank");
        let target = (-NCPoly::x0(ctx)).exp().expect("primitive");
        let special = (&prod - &target).low_degree();
        SpecialCheck {
            group_like: Condition::from(group_like),
            tangential: Condition::from(tangential),
            special: Condition::from(special.or(tangential)),
        }
    }
}

/// Finds g ∈ L with e^g e^{x_i} e^{-g} = p, degree by degree; on failure returns the degree.
pub fn find_conjugator(p: &NCPoly, i: usize) -> std::result::Result<NCPoly, usize> {
    let ctx = p.ctx();
    let ell = p.log().map_err(|_| 0usize)?;
    let xi = NCPoly::generator(ctx, i);
    let mut g = NCPoly::zero(ctx);
    for k in 2..=ctx.degree() {
        let eg = g.exp().map_err(|_| k)?;
        let cur = (&(&eg * &xi) * &eg.antipode()).degree_part(k);
        let defect = (&ell.degree_part(k)) - &cur;
        if defect.is_zero() {
            continue;
        }
        let basis = lyndon_basis(ctx, k - 1);
        let columns: Vec<BTreeMap<Word, crate::ncalg::Q>> = basis
            .iter()
            .map(|b| b.as_poly().commutator(&xi).terms().map(|(w, c)| (w.clone(), c.clone())).collect())
            .collect();
        let rhs: BTreeMap<Word, crate::ncalg::Q> = defect.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let sol = solve_columns(&columns, &rhs).ok_or(k)?;
        for (b, c) in basis.iter().zip(sol) {
            g.add_scaled(b.as_poly(), &c);
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub holds: bool,
    pub failing_degree: Option<usize>,
}

impl From<Option<usize>> for Condition {
    fn from(d: Option<usize>) -> Self {
        Condition { holds: d.is_none(), failing_degree: d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCheck {
    pub group_like: Condition,
    pub tangential: Condition,
    pub special: Condition,
}

/// Sample words or word pairs for the transfer checks.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub description: String,
    pub seed: Option<u64>,
    pub words: Vec<FreeWord>,
    pub pairs: Vec<(FreeWord, FreeWord)>,
}

/// All reduced words of length ≤ `max_len`.
pub fn exhaustive_words(n: usize, max_len: usize) -> Vec<FreeWord> {
    (0..=max_len).flat_map(|l| grp::reduced_words(n, l)).collect()
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> FreeWord {
    let mut letters: Vec<i8> = Vec::with_capacity(len);
    while letters.len() < len {
        let i = rng.gen_range(1..=n as i8);
        let l = if rng.gen_bool(0.5) { i } else { -i };
        if letters.last() != Some(&-l) {
            letters.push(l);
        }
    }
    FreeWord::from_letters(letters)
}

impl SampleSet {
    pub fn words(n: usize, max_len: usize) -> Self {
        let words = exhaustive_words(n, max_len);
        SampleSet { description: format!("all reduced words of length <= {max_len}"), seed: None, words, pairs: Vec::new() }
    }

    pub fn loops(n: usize, max_len: usize) -> Self {
        let mut seen = std::collections::BTreeSet::new();
        for w in exhaustive_words(n, max_len) {
            seen.insert(w.conjugacy_class());
        }
        SampleSet {
            description: format!("all conjugacy classes of length <= {max_len}"),
            seed: None,
            words: seen.into_iter().collect(),
            pairs: Vec::new(),
        }
    }

    pub fn pairs(n: usize, max_len: usize) -> Self {
        let ws = exhaustive_words(n, max_len);
        let pairs = ws.iter().flat_map(|a| ws.iter().map(move |b| (a.clone(), b.clone()))).collect();
        SampleSet { description: format!("all pairs of reduced words of length <= {max_len}"), seed: None, words: Vec::new(), pairs }
    }

    pub fn random_words(n: usize, count: usize, max_len: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words = (0..count)
            .map(|_| {
                let len = rng.gen_range(1..=max_len);
                random_word(&mut rng, n, len)
            })
            .collect();
        SampleSet { description: format!("{count} random words of length <= {max_len}"), seed: Some(seed), words, pairs: Vec::new() }
    }

    pub fn random_pairs(n: usize, count: usize, max_len: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs = (0..count)
            .map(|_| {
                let la = rng.gen_range(1..=max_len);
                let a = random_word(&mut rng, n, la);
                let lb = rng.gen_range(1..=max_len);
                (a, random_word(&mut rng, n, lb))
            })
            .collect();
        SampleSet { description: format!("{count} random pairs of length <= {max_len}"), seed: Some(seed), words: Vec::new(), pairs }
    }

    pub fn merged(mut self, other: SampleSet) -> Self {
        self.description = format!("{}; {}", self.description, other.description);
        self.seed = self.seed.or(other.seed);
        self.words.extend(other.words);
        self.pairs.extend(other.pairs);
        self
    }

    pub fn len(&self) -> usize {
        self.words.len() + self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The algebraic side of a transfer check.
#[derive(Clone, Debug)]
pub enum Target {
    /// κ_θ = Π on word pairs.
    Kappa(DoubleBracket),
    /// θ intertwines {−,−} with {−,−}_KKS on loop pairs.
    Goldman,
    /// μ_θ = tDiv^T_Π.
    Mu(DoubleBracket),
    /// (μ_{*•})_θ = t̲Div^T_Π.
    MuStar(DoubleBracket),
    /// δ⁺_θ = −tDiv_Π.
    Delta(DoubleBracket),
    /// μ_θ(a) = μ^alg(a) + |s''|⊗as' − |s''a|⊗s' + |g'|⊗[a,g''], with g = ḣ.
    MuF(Series),
    /// δ⁺_θ = δ^alg.
    DeltaAlg,
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::Kappa(p) => format!("kappa=Pi_{}", p.name()),
            Target::Goldman => "goldman=KKS".into(),
            Target::Mu(p) => format!("mu=tDivT_{}", p.name()),
            Target::MuStar(p) => format!("mu_star=tDivT_right_{}", p.name()),
            Target::Delta(p) => format!("delta_plus=-tDiv_{}", p.name()),
            Target::MuF(_) => "mu=muF".into(),
            Target::DeltaAlg => "delta_plus=delta_alg".into(),
        }
    }

    /// Highest degree at which the comparison is meaningful under truncation at N.
    pub fn compared_through(&self, degree: usize) -> usize {
        match self {
            Target::Kappa(_) | Target::Goldman => degree,
            _ => degree - 1,
        }
    }

    fn binary(&self) -> bool {
        matches!(self, Target::Kappa(_) | Target::Goldman)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub sample: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub theta: String,
    pub target: String,
    pub samples: usize,
    pub passed: usize,
    pub seed: Option<u64>,
    pub description: String,
    pub compared_through: usize,
    pub status: String,
    pub first_failure: Option<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

fn tensor_gap<L: Slot, R: Slot>(a: &Tensor<L, R>, b: &Tensor<L, R>, upto: usize) -> Option<usize> {
    (a - b).truncated(upto).low_degree()
}

fn poly_gap<K: Slot>(a: &Poly<K>, b: &Poly<K>, upto: usize) -> Option<usize> {
    (a - b).truncated(upto).low_degree()
}

/// Right side of the μ formula for KV solutions.
pub fn mu_f_formula(a: &NCPoly, s: &TensorPoly, g: &TensorPoly) -> CycMixLeft {
    let ctx = a.ctx();
    let mut out = mu_alg(a);
    let mut extra = TensorPoly::zero(ctx);
    for ((p, q), c) in s.terms() {
        let sp = NCPoly::monomial(ctx, p.clone(), c.clone());
        let spp = NCPoly::word(ctx, q.clone());
        extra += &TensorPoly::from_pair(&spp, &(a * &sp));
        extra -= &TensorPoly::from_pair(&(&spp * a), &sp);
    }
    for ((p, q), c) in g.terms() {
        let gp = NCPoly::monomial(ctx, p.clone(), c.clone());
        let gpp = NCPoly::word(ctx, q.clone());
        extra += &TensorPoly::from_pair(&gp, &a.commutator(&gpp));
    }
    out += &extra.project_left();
    out
}

/// Compares group-side operations, pushed through θ, with an algebraic target.
pub fn transfer_check(theta: &Expansion, target: &Target, samples: &SampleSet) -> Result<Report> {
    let ctx = theta.ctx;
    let upto = target.compared_through(ctx.degree());
    let s_tensor = s_split(ctx, &Series::s_function(ctx.degree()));
    let g_tensor = match target {
        Target::MuF(g) => tilde_delta(&g.eval(&-NCPoly::x0(ctx))),
        _ => TensorPoly::zero(ctx),
    };
    let kks = DoubleBracket::kks(ctx);
    let items: Vec<(String, FreeWord, FreeWord)> = if target.binary() {
        samples.pairs.iter().map(|(a, b)| (format!("({a}, {b})"), a.clone(), b.clone())).collect()
    } else {
        samples.words.iter().map(|a| (format!("{a}"), a.clone(), FreeWord::identity())).collect()
    };
    let results: Vec<Result<Option<usize>>> = items
        .par_iter()
        .map_init(HashMap::new, |cache, (_, a, b)| -> Result<Option<usize>> {
            let ta = theta.expand_cached(a, cache)?;
            Ok(match target {
                Target::Kappa(pi) => {
                    let tb = theta.expand_cached(b, cache)?;
                    let k = grp::kappa(&GroupRingElt::word(a.clone()), &GroupRingElt::word(b.clone()));
                    let lhs = theta.expand_tensor_cached(&k, cache)?;
                    tensor_gap(&lhs, &pi.eval(&ta, &tb), upto)
                }
                Target::Goldman => {
                    let la = LoopElt::word(a.clone());
                    let lb = LoopElt::word(b.clone());
                    let lhs = project(&theta.expand(&grp::goldman(&la, &lb).lift())?);
                    let rhs = kks.bracket(&project(&ta), &theta.expand_cyc(&lb)?);
                    poly_gap(&lhs, &rhs, upto)
                }
                Target::Mu(pi) => {
                    let lhs: CycMixLeft = theta.expand_tensor_cached(&grp::mu(&GroupRingElt::word(a.clone())), cache)?.project_left();
                    tensor_gap(&lhs, &pi.tdiv_t(&ta)?.0, upto)
                }
                Target::MuStar(pi) => {
                    let lhs: CycMixRight =
                        theta.expand_tensor_cached(&grp::mu_star(&GroupRingElt::word(a.clone())), cache)?.project_right();
                    tensor_gap(&lhs, &pi.tdiv_t(&ta)?.1, upto)
                }
                Target::Delta(pi) => {
                    let lhs: CycTensor = theta.expand_tensor_cached(&grp::delta_plus(&LoopElt::word(a.clone())), cache)?.project_both();
                    let rhs = -pi.tdiv(&project(&ta))?;
                    tensor_gap(&lhs, &rhs, upto)
                }
                Target::MuF(_) => {
                    let lhs: CycMixLeft = theta.expand_tensor_cached(&grp::mu(&GroupRingElt::word(a.clone())), cache)?.project_left();
                    tensor_gap(&lhs, &mu_f_formula(&ta, &s_tensor, &g_tensor), upto)
                }
                Target::DeltaAlg => {
                    let lhs: CycTensor = theta.expand_tensor_cached(&grp::delta_plus(&LoopElt::word(a.clone())), cache)?.project_both();
                    tensor_gap(&lhs, &delta_alg(&project(&ta)), upto)
                }
            })
        })
        .collect();
    let mut passed = 0;
    let mut first_failure = None;
    for (item, r) in items.iter().zip(results) {
        match r? {
            None => passed += 1,
            Some(d) => {
                if first_failure.is_none() {
                    first_failure = Some(Failure { sample: item.0.clone(), degree: d });
                }
            }
        }
    }
    Ok(Report {
        check: "transfer".into(),
        theta: theta.name.clone(),
        target: target.name(),
        samples: items.len(),
        passed,
        seed: samples.seed,
        description: samples.description.clone(),
        compared_through: upto,
        status: if first_failure.is_none() { "pass" } else { "fail" }.into(),
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dvg::partial;

    fn ctx(n: usize, d: usize) -> Context {
        Context::new(n, d).unwrap()
    }

    #[test]
    fn theta_exp_basics() {
        let c = ctx(2, 4);
        let th = Expansion::theta_exp(c);
        let e1 = NCPoly::generator(c, 0).exp().unwrap();
        let e2 = NCPoly::generator(c, 1).exp().unwrap();
        assert_eq!(th.expand(&GroupRingElt::parse("g1").unwrap()).unwrap(), e1);
        assert_eq!(th.expand(&GroupRingElt::parse("g1 g2").unwrap()).unwrap(), &e1 * &e2);
        assert_eq!(th.expand(&GroupRingElt::parse("g1^-1").unwrap()).unwrap(), (-NCPoly::generator(c, 0)).exp().unwrap());
        let a = th.expand_cyc(&LoopElt::word(FreeWord::parse("g1 g2").unwrap())).unwrap();
        let b = project(&th.expand(&GroupRingElt::parse("g2 g1").unwrap()).unwrap());
        assert_eq!(a, b);
        assert!(th.expand(&GroupRingElt::parse("g3").unwrap()).is_err());
    }

    #[test]
    fn theta_exp_is_tangential_not_special() {
        let th = Expansion::theta_exp(ctx(2, 4));
        let r = th.is_special();
        assert!(r.group_like.holds);
        assert!(r.tangential.holds);
        assert_eq!(r.special.failing_degree, Some(2));
        let th1 = Expansion::theta_exp(ctx(1, 4));
        assert!(th1.is_special().special.holds);
        let id = Expansion::theta_from_taut(&TAutElement::identity(ctx(2, 4)));
        assert_eq!(id.images(), th.images());
    }

    #[test]
    fn conjugator_recovery() {
        let c = ctx(2, 5);
        let g = NCPoly::generator(c, 0).commutator(&NCPoly::generator(c, 1)).scale(&crate::ncalg::q(3));
        let eg = g.exp().unwrap();
        let p = &(&eg * &NCPoly::generator(c, 1).exp().unwrap()) * &eg.antipode();
        let found = find_conjugator(&p, 1).unwrap();
        let ef = found.exp().unwrap();
        assert_eq!(&(&ef * &NCPoly::generator(c, 1).exp().unwrap()) * &ef.antipode(), p);
        let bad = Expansion::from_images("bad", c, vec![NCPoly::generator(c, 0).exp().unwrap(), p.clone()]).unwrap();
        assert!(bad.is_special().tangential.holds);
        let q = &NCPoly::generator(c, 1).exp().unwrap() * &NCPoly::generator(c, 0).commutator(&NCPoly::generator(c, 1)).exp().unwrap();
        assert!(find_conjugator(&q, 1).is_err());
    }

    #[test]
    fn kappa_transfers_to_pi_mult_on_generators() {
        let c = ctx(2, 6);
        let th = Expansion::theta_exp(c);
        let pm = DoubleBracket::pi_mult(c);
        let mut pairs = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                pairs.push((FreeWord::generator(i), FreeWord::generator(j)));
            }
        }
        let s = SampleSet { description: "generator pairs".into(), seed: None, words: vec![], pairs };
        let r = transfer_check(&th, &Target::Kappa(pm), &s).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn theta_exp_against_pi_add_fails_at_degree_two() {
        let c = ctx(2, 4);
        let th = Expansion::theta_exp(c);
        let s = SampleSet {
            description: "one pair".into(),
            seed: None,
            words: vec![],
            pairs: vec![(FreeWord::generator(1), FreeWord::generator(0))],
        };
        let r = transfer_check(&th, &Target::Kappa(DoubleBracket::pi_add(c)), &s).unwrap();
        assert_eq!(r.first_failure.unwrap().degree, 2);
    }

    #[test]
    fn mu_and_delta_transfer_for_theta_exp() {
        let c = ctx(2, 5);
        let th = Expansion::theta_exp(c);
        let pm = DoubleBracket::pi_mult(c);
        let s = SampleSet::words(2, 2);
        for t in [Target::Mu(pm.clone()), Target::MuStar(pm.clone()), Target::Delta(pm.clone())] {
            let r = transfer_check(&th, &t, &s).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn derivation_on_exponential() {
        let c = ctx(2, 5);
        let x = &NCPoly::generator(c, 0) + &NCPoly::generator(c, 0).commutator(&NCPoly::generator(c, 1));
        let ex = x.exp().unwrap();
        let series = Series::one_minus_exp_neg_over_z(c.degree());
        for i in 0..2 {
            let phi_x = partial(i, &x);
            let mut acc = TensorPoly::zero(c);
            let mut cur = phi_x.clone();
            for m in 0..=c.degree() {
                if m > 0 {
                    cur = &cur.first_left_mul(&x) - &cur.second_right_mul(&x);
                }
                acc.add_scaled(&cur, &series.coeff(m));
            }
            assert_eq!(partial(i, &ex).truncated(c.degree() - 1), acc.first_left_mul(&ex).truncated(c.degree() - 1));
        }
    }
}
