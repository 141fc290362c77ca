//! Genus-zero operations on the group ring of the free group on γ₁..γ_n.
//!
//! Letters are stored as `±(i+1)` for γ_i^{±1} (zero-based `i`).

use crate::error::{AlgebraError, Result};
use crate::ncalg::Q;
use num_traits::{One, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreeWord(SmallVec<[i8; 12]>);

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(SmallVec::new())
    }

    /// γ_i (zero-based).
    pub fn generator(i: usize) -> Self {
        FreeWord(SmallVec::from_slice(&[(i + 1) as i8]))
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = i8>>(letters: I) -> Self {
        let mut out: SmallVec<[i8; 12]> = SmallVec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not allowed");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        Self::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Highest generator index used, plus one.
    pub fn rank(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Canonical representative of the conjugacy class.
    pub fn conjugacy_class(&self) -> FreeWord {
        let l = &self.0;
        let mut a = 0;
        let mut b = l.len();
        while b - a >= 2 && l[a] == -l[b - 1] {
            a += 1;
            b -= 1;
        }
        let core = &l[a..b];
        let m = core.len();
        if m == 0 {
            return FreeWord::identity();
        }
        let best = (0..m)
            .map(|r| core[r..].iter().chain(core[..r].iter()).copied().collect::<SmallVec<[i8; 12]>>())
            .min()
            .unwrap();
        FreeWord(best)
    }

    /// Parses "g1 g2^-1 g1"; "1", "e" or an empty string is the identity.
    pub fn parse(s: &str) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" || tok == "e" {
                continue;
            }
            let body = tok.strip_prefix('g').ok_or_else(|| AlgebraError::Parse(format!("bad letter '{tok}'")))?;
            let (idx, inv) = match body.split_once('^') {
                Some((i, "-1")) => (i, true),
                Some((i, "1")) => (i, false),
                Some(_) => return Err(AlgebraError::Parse(format!("bad exponent in '{tok}'"))),
                None => (body, false),
            };
            let i: usize = idx.parse().map_err(|_| AlgebraError::Parse(format!("bad index in '{tok}'")))?;
            if i == 0 || i > 127 {
                return Err(AlgebraError::Parse(format!("index out of range in '{tok}'")));
            }
            letters.push(if inv { -(i as i8) } else { i as i8 });
        }
        Ok(FreeWord::from_letters(letters))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| if l > 0 { format!("g{l}") } else { format!("g{}^-1", -l) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All reduced words of length exactly `len` in n generators.
pub fn reduced_words(n: usize, len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for i in 1..=n as i8 {
                for l in [i, -i] {
                    if w.0.last() != Some(&-l) {
                        let mut v = w.0.clone();
                        v.push(l);
                        next.push(FreeWord(v));
                    }
                }
            }
        }
        out = next;
    }
    out
}

/// Marker for a tensor or element slot: plain group ring or loop classes.
pub trait GSlot: Clone + fmt::Debug + PartialEq + Eq + Default {
    const LOOP: bool;
    fn canon(w: FreeWord) -> FreeWord {
        if Self::LOOP {
            w.conjugacy_class()
        } else {
            w
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Grp;
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Loop;

impl GSlot for Grp {
    const LOOP: bool = false;
}
impl GSlot for Loop {
    const LOOP: bool = true;
}

fn add_entry<K: Ord>(map: &mut BTreeMap<K, Q>, key: K, c: Q) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Finite linear combination of free-group words (`Grp`) or conjugacy classes (`Loop`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GElt<K: GSlot> {
    terms: BTreeMap<FreeWord, Q>,
    _k: PhantomData<K>,
}

pub type GroupRingElt = GElt<Grp>;
pub type LoopElt = GElt<Loop>;

impl<K: GSlot> GElt<K> {
    pub fn zero() -> Self {
        GElt { terms: BTreeMap::new(), _k: PhantomData }
    }

    pub fn one() -> Self {
        Self::word(FreeWord::identity())
    }

    pub fn word(w: FreeWord) -> Self {
        Self::monomial(w, Q::one())
    }

    pub fn monomial(w: FreeWord, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::word(FreeWord::parse(s)?))
    }

    pub fn add_term(&mut self, w: FreeWord, c: Q) {
        add_entry(&mut self.terms, K::canon(w), c);
    }

    pub fn terms(&self) -> &BTreeMap<FreeWord, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &FreeWord) -> Q {
        self.terms.get(&K::canon(w.clone())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (w, k) in &self.terms {
            out.terms.insert(w.clone(), k * c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.terms.keys().map(|w| w.rank()).max().unwrap_or(0)
    }
}

impl GroupRingElt {
    pub fn generator(i: usize) -> Self {
        Self::word(FreeWord::generator(i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// The antipode ι(γ) = γ^{-1}.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c.clone());
        }
        out
    }

    pub fn project(&self) -> LoopElt {
        let mut out = LoopElt::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl LoopElt {
    /// Some representative in the group ring.
    pub fn lift(&self) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<K: GSlot> fmt::Display for GElt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (l, r) = if K::LOOP { ("|", "|") } else { ("", "") };
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}){l}{w}{r}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Tensor of two group-ring or loop slots.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GTensor<L: GSlot, R: GSlot> {
    terms: BTreeMap<(FreeWord, FreeWord), Q>,
    _k: PhantomData<(L, R)>,
}

pub type GrpTensor = GTensor<Grp, Grp>;
pub type LoopGrpTensor = GTensor<Loop, Grp>;
pub type GrpLoopTensor = GTensor<Grp, Loop>;
pub type LoopTensor = GTensor<Loop, Loop>;

impl<L: GSlot, R: GSlot> GTensor<L, R> {
    pub fn zero() -> Self {
        GTensor { terms: BTreeMap::new(), _k: PhantomData }
    }

    pub fn add_term(&mut self, a: FreeWord, b: FreeWord, c: Q) {
        add_entry(&mut self.terms, (L::canon(a), R::canon(b)), c);
    }

    pub fn pure(a: FreeWord, b: FreeWord, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<(FreeWord, FreeWord), Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for ((a, b), k) in &self.terms {
            out.add_term(a.clone(), b.clone(), k * c);
        }
        out
    }

    pub fn swap(&self) -> GTensor<R, L> {
        let mut out = GTensor::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c.clone());
        }
        out
    }

    /// Re-canonicalizes each slot into new slot kinds.
    pub fn project<L2: GSlot, R2: GSlot>(&self) -> GTensor<L2, R2> {
        let mut out = GTensor::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }
}

impl<R: GSlot> GTensor<Grp, R> {
    /// (x⊗1)t(y⊗1).
    pub fn first_sandwich(&self, x: &FreeWord, y: &FreeWord) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(x.mul(a).mul(y), b.clone(), c.clone());
        }
        out
    }
}

impl<L: GSlot> GTensor<L, Grp> {
    /// (1⊗x)t(1⊗y).
    pub fn second_sandwich(&self, x: &FreeWord, y: &FreeWord) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), x.mul(b).mul(y), c.clone());
        }
        out
    }
}

impl LoopTensor {
    /// α ⊗ β − β ⊗ α.
    pub fn wedge(a: &LoopElt, b: &LoopElt) -> Self {
        let mut out = Self::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                out.add_term(x.clone(), y.clone(), cx * cy);
                out.add_term(y.clone(), x.clone(), -(cx * cy));
            }
        }
        out
    }

    /// Alt(t) = t − t°.
    pub fn alt(&self) -> Self {
        self.sub(&self.swap())
    }
}

impl<L: GSlot, R: GSlot> fmt::Display for GTensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let wrap = |w: &FreeWord, lp: bool| if lp { format!("|{w}|") } else { format!("{w}") };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("({c}){}⊗{}", wrap(a, L::LOOP), wrap(b, R::LOOP)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn sym(l: i8) -> FreeWord {
    FreeWord::from_letters([l])
}

/// κ on single letters, including inverses.
fn kappa_letters(a: i8, b: i8) -> GrpTensor {
    let mut out = GrpTensor::zero();
    let (ia, ib) = (a.abs(), b.abs());
    let ga = sym(ia);
    let gb = sym(ib);
    let one = FreeWord::identity;
    let one_q = Q::one();
    let base = if ia == ib {
        let mut t = GrpTensor::zero();
        t.add_term(one(), ga.mul(&ga), one_q.clone());
        t.add_term(ga.clone(), ga.clone(), -one_q.clone());
        t
    } else if ia < ib {
        GrpTensor::zero()
    } else {
        let mut t = GrpTensor::zero();
        t.add_term(one(), ga.mul(&gb), one_q.clone());
        t.add_term(gb.mul(&ga), one(), one_q.clone());
        t.add_term(ga.clone(), gb.clone(), -one_q.clone());
        t.add_term(gb.clone(), ga.clone(), -one_q.clone());
        t
    };
    let ainv = sym(-ia);
    let binv = sym(-ib);
    for ((p, q), c) in base.terms() {
        let mut p = p.clone();
        let mut q = q.clone();
        let mut c = c.clone();
        if a < 0 {
            // κ(γ^{-1},y) = −γ^{-1}*κ(γ,y)*γ^{-1}
            p = p.mul(&ainv);
            q = ainv.mul(&q);
            c = -c;
        }
        if b < 0 {
            // κ(x,γ^{-1}) = −γ^{-1}κ(x,γ)γ^{-1}
            p = binv.mul(&p);
            q = q.mul(&binv);
            c = -c;
        }
        out.add_term(p, q, c);
    }
    out
}

fn kappa_words(x: &FreeWord, y: &FreeWord) -> GrpTensor {
    let xl = x.letters();
    let yl = y.letters();
    let mut out = GrpTensor::zero();
    for j in 0..xl.len() {
        for k in 0..yl.len() {
            let g = kappa_letters(xl[j], yl[k]);
            let y_pre = FreeWord::from_letters(yl[..k].iter().copied());
            let y_post = FreeWord::from_letters(yl[k + 1..].iter().copied());
            let x_pre = FreeWord::from_letters(xl[..j].iter().copied());
            let x_post = FreeWord::from_letters(xl[j + 1..].iter().copied());
            for ((p, q), c) in g.terms() {
                out.add_term(y_pre.mul(p).mul(&x_post), x_pre.mul(q).mul(&y_post), c.clone());
            }
        }
    }
    out
}

/// The double bracket κ, extended from generator values by both Leibniz rules.
pub fn kappa(x: &GroupRingElt, y: &GroupRingElt) -> GrpTensor {
    let mut out = GrpTensor::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let cc = ca * cb;
            for ((p, q), c) in kappa_words(a, b).terms() {
                out.add_term(p.clone(), q.clone(), c * &cc);
            }
        }
    }
    out
}

/// {|a|, b} = κ(a,b)'κ(a,b)''.
pub fn bracket_loop_grp(c: &LoopElt, b: &GroupRingElt) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    for ((p, q), k) in kappa(&c.lift(), b).terms() {
        out.add_term(p.mul(q), k.clone());
    }
    out
}

/// The bracket {−,−} induced by κ; this is minus the classical Goldman bracket.
pub fn goldman(c1: &LoopElt, c2: &LoopElt) -> LoopElt {
    bracket_loop_grp(c1, &c2.lift()).project()
}

/// The classical Goldman bracket [−,−]_G = −{−,−}.
pub fn goldman_classical(c1: &LoopElt, c2: &LoopElt) -> LoopElt {
    goldman(c1, c2).scale(&-Q::one())
}

fn mu_letter(l: i8) -> LoopGrpTensor {
    if l > 0 {
        return LoopGrpTensor::zero();
    }
    // μ(γ^{-1}) = −(1⊗γ^{-1})(| |⊗1)κ(γ,γ^{-1})
    let ginv = sym(l);
    let mut out = LoopGrpTensor::zero();
    for ((p, q), c) in kappa_letters(-l, l).terms() {
        out.add_term(p.clone(), ginv.mul(q), -c.clone());
    }
    out
}

fn mu_word(z: &FreeWord) -> LoopGrpTensor {
    let l = z.letters();
    let mut out = LoopGrpTensor::zero();
    for j in 0..l.len() {
        let pre = FreeWord::from_letters(l[..j].iter().copied());
        let post = FreeWord::from_letters(l[j + 1..].iter().copied());
        out = out.add(&mu_letter(l[j]).second_sandwich(&pre, &post));
        let k: LoopGrpTensor = kappa_words(&sym(l[j]), &post).project();
        out = out.add(&k.second_sandwich(&pre, &FreeWord::identity()));
    }
    out
}

/// μ: 𝕂π → |𝕂π|⊗𝕂π, fixed by the product rule and μ(γ_i) = 0.
pub fn mu(x: &GroupRingElt) -> LoopGrpTensor {
    let mut out = LoopGrpTensor::zero();
    for (w, c) in x.terms() {
        out = out.add(&mu_word(w).scale(c));
    }
    out
}

fn mu_star_letter(l: i8) -> GrpLoopTensor {
    if l < 0 {
        return GrpLoopTensor::zero();
    }
    // μ_{*•}(γ) = −(1⊗| |)κ(γ^{-1},γ)(γ⊗1)
    let g = sym(l);
    let mut out = GrpLoopTensor::zero();
    for ((p, q), c) in kappa_letters(-l, l).terms() {
        out.add_term(p.mul(&g), q.clone(), -c.clone());
    }
    out
}

fn mu_star_word(z: &FreeWord) -> GrpLoopTensor {
    let l = z.letters();
    let mut out = GrpLoopTensor::zero();
    for j in 0..l.len() {
        let pre = FreeWord::from_letters(l[..j].iter().copied());
        let post = FreeWord::from_letters(l[j + 1..].iter().copied());
        out = out.add(&mu_star_letter(l[j]).first_sandwich(&pre, &post));
        let k: GrpLoopTensor = kappa_words(&post, &sym(l[j])).project();
        out = out.add(&k.first_sandwich(&pre, &FreeWord::identity()));
    }
    out
}

/// μ_{*•}: 𝕂π → 𝕂π⊗|𝕂π|, fixed by its product rule and μ_{*•}(γ_i^{-1}) = 0.
pub fn mu_star(x: &GroupRingElt) -> GrpLoopTensor {
    let mut out = GrpLoopTensor::zero();
    for (w, c) in x.terms() {
        out = out.add(&mu_star_word(w).scale(c));
    }
    out
}

/// δ⁺(|γ|) = −(1⊗| |)μ(γ) − (| |⊗1)μ_{*•}(γ).
pub fn delta_plus(c: &LoopElt) -> LoopTensor {
    let x = c.lift();
    let a: LoopTensor = mu(&x).project();
    let b: LoopTensor = mu_star(&x).project();
    a.add(&b).scale(&-Q::one())
}

/// δ⁺(|γ|) = −Alt(1⊗| |)μ(γ) + |γ|∧𝟏.
pub fn delta_plus_alt(c: &LoopElt) -> LoopTensor {
    let x = c.lift();
    let a: LoopTensor = mu(&x).project();
    let mut out = a.alt().scale(&-Q::one());
    out = out.add(&LoopTensor::wedge(c, &LoopElt::one()));
    out
}

/// The composite |x'|⊗x'' ↦ {|x'|, x''}.
pub fn bracket_after_mu(x: &GroupRingElt) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    for ((p, q), c) in mu(x).terms() {
        let b = bracket_loop_grp(&LoopElt::word(p.clone()), &GroupRingElt::word(q.clone()));
        out = out.add(&b.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::q;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    fn g(s: &str) -> GroupRingElt {
        GroupRingElt::parse(s).unwrap()
    }

    fn lp(s: &str) -> LoopElt {
        LoopElt::parse(s).unwrap()
    }

    fn t(items: &[(&str, &str, i64)]) -> GrpTensor {
        let mut out = GrpTensor::zero();
        for (a, b, c) in items {
            out.add_term(w(a), w(b), q(*c));
        }
        out
    }

    fn words_upto(n: usize, len: usize) -> Vec<FreeWord> {
        (0..=len).flat_map(|l| reduced_words(n, l)).collect()
    }

    #[test]
    fn parsing_and_classes() {
        assert_eq!(w("g1 g2^-1 g2 g1").to_string(), "g1 g1");
        assert_eq!(w("1"), FreeWord::identity());
        assert!(FreeWord::parse("h1").is_err());
        assert!(FreeWord::parse("g1^2").is_err());
        assert_eq!(w("g2 g1 g3 g2^-1").conjugacy_class(), w("g1 g3"));
        assert_eq!(w("g2 g1").conjugacy_class(), w("g1 g2"));
        assert_eq!(reduced_words(2, 2).len(), 12);
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&g("g2"), &g("g1")), t(&[("1", "g2 g1", 1), ("g1 g2", "1", 1), ("g2", "g1", -1), ("g1", "g2", -1)]));
        assert!(kappa(&g("g1"), &g("g2")).is_zero());
        assert_eq!(kappa(&g("g1^-1"), &g("g1")), t(&[("1", "1", 1), ("g1^-1", "g1", -1)]));
        assert_eq!(kappa(&g("g1 g2"), &g("g1 g3")), t(&[("1", "g1 g2 g1 g3", 1), ("g1", "g1 g2 g3", -1)]));
        assert!(kappa(&GroupRingElt::one(), &g("g1 g2")).is_zero());
    }

    #[test]
    fn kappa_unit_equations() {
        for l in [1i8, 2, -1, -2] {
            let x = GroupRingElt::word(sym(l));
            let xi = GroupRingElt::word(sym(-l));
            for y in words_upto(2, 2) {
                let yy = GroupRingElt::word(y);
                assert!(kappa(&x.mul(&xi), &yy).is_zero());
                assert!(kappa(&yy, &x.mul(&xi)).is_zero());
            }
        }
    }

    #[test]
    fn kappa_skew_and_antipode_identities() {
        let ws = words_upto(2, 3);
        for a in &ws {
            for b in &ws {
                let x = GroupRingElt::word(a.clone());
                let y = GroupRingElt::word(b.clone());
                let kxy = kappa(&x, &y);
                let mut rhs = kxy.swap().scale(&-Q::one());
                rhs.add_term(a.mul(b), FreeWord::identity(), q(1));
                rhs.add_term(FreeWord::identity(), b.mul(a), q(1));
                rhs.add_term(a.clone(), b.clone(), q(-1));
                rhs.add_term(b.clone(), a.clone(), q(-1));
                assert_eq!(kappa(&y, &x), rhs, "{a} / {b}");
                let mut inv = GrpTensor::zero();
                for ((p, qq), c) in kxy.terms() {
                    inv.add_term(qq.inverse(), p.inverse(), c.clone());
                }
                assert_eq!(kappa(&x.antipode(), &y.antipode()), inv);
            }
        }
    }

    #[test]
    fn goldman_examples() {
        assert!(goldman(&lp("g1"), &lp("g2")).is_zero());
        let expected = lp("g1 g2 g1 g3").sub(&lp("g1 g1 g2 g3"));
        assert_eq!(goldman(&lp("g1 g2"), &lp("g1 g3")), expected);
        assert_eq!(goldman_classical(&lp("g1 g2"), &lp("g1 g3")), expected.scale(&q(-1)));
        let c = lp("g1 g2^-1 g1").add(&lp("g2 g1"));
        assert!(goldman(&c, &c).is_zero());
    }

    #[test]
    fn goldman_lie_algebra() {
        let ws: Vec<FreeWord> = words_upto(2, 2);
        for a in &ws {
            assert!(goldman(&LoopElt::one(), &LoopElt::word(a.clone())).is_zero());
            for b in &ws {
                let la = LoopElt::word(a.clone());
                let lb = LoopElt::word(b.clone());
                assert_eq!(goldman(&la, &lb), goldman(&lb, &la).scale(&q(-1)));
            }
        }
        let (a, b, c) = (lp("g1 g2"), lp("g2^-1 g1"), lp("g1 g1 g2"));
        let j = goldman(&a, &goldman(&b, &c)).add(&goldman(&b, &goldman(&c, &a))).add(&goldman(&c, &goldman(&a, &b)));
        assert!(j.is_zero());
    }

    #[test]
    fn mu_examples() {
        assert!(mu(&g("g1")).is_zero());
        assert!(mu(&GroupRingElt::one()).is_zero());
        let mut expected = LoopGrpTensor::zero();
        expected.add_term(FreeWord::identity(), w("g2 g1"), q(1));
        expected.add_term(w("g1 g2"), FreeWord::identity(), q(1));
        expected.add_term(w("g2"), w("g1"), q(-1));
        expected.add_term(w("g1"), w("g2"), q(-1));
        assert_eq!(mu(&g("g2 g1")), expected);
        let x = g("g1");
        let xi = g("g1^-1");
        let recon = mu(&x).second_sandwich(&FreeWord::identity(), &w("g1^-1"));
        let recon = recon.add(&mu(&xi).second_sandwich(&w("g1"), &FreeWord::identity()));
        let recon = recon.add(&kappa(&x, &xi).project());
        assert!(recon.is_zero());
    }

    #[test]
    fn mu_product_rule_is_factorization_independent() {
        let ws = words_upto(2, 2);
        for a in &ws {
            for b in &ws {
                let x = GroupRingElt::word(a.clone());
                let y = GroupRingElt::word(b.clone());
                let lhs = mu(&x.mul(&y));
                let rhs = mu(&x)
                    .second_sandwich(&FreeWord::identity(), b)
                    .add(&mu(&y).second_sandwich(a, &FreeWord::identity()))
                    .add(&kappa(&x, &y).project());
                assert_eq!(lhs, rhs, "{a} / {b}");
                let lhs = mu_star(&x.mul(&y));
                let rhs = mu_star(&x)
                    .first_sandwich(&FreeWord::identity(), b)
                    .add(&mu_star(&y).first_sandwich(a, &FreeWord::identity()))
                    .add(&kappa(&y, &x).project());
                assert_eq!(lhs, rhs, "{a} / {b}");
            }
        }
    }

    #[test]
    fn mu_star_examples() {
        assert!(mu_star(&g("g1^-1")).is_zero());
        assert!(mu_star(&GroupRingElt::one()).is_zero());
        let mut expected = GrpLoopTensor::zero();
        expected.add_term(w("g1"), FreeWord::identity(), q(-1));
        expected.add_term(FreeWord::identity(), w("g1"), q(1));
        assert_eq!(mu_star(&g("g1")), expected);
    }

    #[test]
    fn delta_plus_examples() {
        assert_eq!(delta_plus(&lp("g1")), LoopTensor::wedge(&lp("g1"), &LoopElt::one()));
        assert!(delta_plus(&LoopElt::one()).is_zero());
        let a = delta_plus(&LoopElt::word(w("g1 g2")));
        let b = delta_plus_alt(&lp("g2 g1"));
        assert_eq!(a, b);
    }

    #[test]
    fn delta_plus_formulas_agree() {
        for z in words_upto(2, 4) {
            let c = LoopElt::word(z.clone());
            assert_eq!(delta_plus(&c), delta_plus_alt(&c), "{z}");
        }
    }

    #[test]
    fn involutivity() {
        for z in words_upto(2, 3) {
            assert!(bracket_after_mu(&GroupRingElt::word(z.clone())).is_zero(), "{z}");
        }
    }
}
