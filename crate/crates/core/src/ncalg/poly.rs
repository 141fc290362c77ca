use super::word::Word;
use crate::error::{AlgebraError, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

pub fn qf(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

/// Generator count and truncation degree shared by every value built in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    n: usize,
    degree: usize,
}

impl Context {
    pub fn new(n: usize, degree: usize) -> Result<Self> {
        if n == 0 || degree == 0 || n > 200 {
            return Err(AlgebraError::InvalidContext { n, degree });
        }
        Ok(Context { n, degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn with_degree(&self, degree: usize) -> Context {
        Context::new(self.n, degree).expect("valid degree")
    }

    pub fn check(&self, other: &Context) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch(*self, *other))
        }
    }
}

/// Selects whether a tensor slot holds plain words or cyclic words.
pub trait Slot: Copy + Clone + fmt::Debug + Default + PartialEq + Eq + Hash + Send + Sync + 'static {
    const CYCLIC: bool;
    fn canon(w: Word) -> Word {
        if Self::CYCLIC {
            w.min_rotation()
        } else {
            w
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Lin;
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cyc;

impl Slot for Lin {
    const CYCLIC: bool = false;
}
impl Slot for Cyc {
    const CYCLIC: bool = true;
}

/// Sparse truncated linear combination of (plain or cyclic) words.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: Slot> {
    ctx: Context,
    terms: BTreeMap<Word, Q>,
    _k: PhantomData<K>,
}

pub type NCPoly = Poly<Lin>;
pub type CyclicPoly = Poly<Cyc>;

pub(crate) fn add_entry<Key: Ord>(map: &mut BTreeMap<Key, Q>, key: Key, c: Q) {
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

impl<K: Slot> Poly<K> {
    pub fn zero(ctx: Context) -> Self {
        Poly { ctx, terms: BTreeMap::new(), _k: PhantomData }
    }

    pub fn one(ctx: Context) -> Self {
        Self::monomial(ctx, Word::empty(), Q::one())
    }

    pub fn monomial(ctx: Context, w: Word, c: Q) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Q)>>(ctx: Context, it: I) -> Self {
        let mut p = Self::zero(ctx);
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·w`; words above the truncation degree are dropped.
    pub fn add_term(&mut self, w: Word, c: Q) {
        if w.len() > self.ctx.degree {
            return;
        }
        add_entry(&mut self.terms, K::canon(w), c);
    }

    pub fn add_term_ref(&mut self, w: &Word, c: &Q) {
        if w.len() > self.ctx.degree || c.is_zero() {
            return;
        }
        if K::CYCLIC {
            add_entry(&mut self.terms, w.min_rotation(), c.clone());
        } else {
            add_entry(&mut self.terms, w.clone(), c.clone());
        }
    }

    pub fn coeff(&self, w: &Word) -> Q {
        let key = K::canon(w.clone());
        self.terms.get(&key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        self.ctx.check(&other.ctx).expect("context");
        if c.is_zero() {
            return;
        }
        for (w, v) in other.terms.iter() {
            add_entry(&mut self.terms, w.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        Poly {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
            _k: PhantomData,
        }
    }

    pub fn degree_part(&self, d: usize) -> Self {
        Poly {
            ctx: self.ctx,
            terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect(),
            _k: PhantomData,
        }
    }

    /// Drops every term of degree above `d` (context unchanged).
    pub fn truncated(&self, d: usize) -> Self {
        Poly {
            ctx: self.ctx,
            terms: self.terms.iter().filter(|(w, _)| w.len() <= d).map(|(w, c)| (w.clone(), c.clone())).collect(),
            _k: PhantomData,
        }
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.len())
    }

    pub fn high_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.len())
    }

    /// Re-homes the value into a context with the same `n` (truncating if smaller).
    pub fn with_context(&self, ctx: Context) -> Self {
        assert_eq!(ctx.n(), self.ctx.n(), "generator count differs");
        let mut p = Self::zero(ctx);
        for (w, c) in self.terms.iter() {
            p.add_term_ref(w, c);
        }
        p
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        Ok(out)
    }
}

impl<K: Slot> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: Slot> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if K::CYCLIC {
                write!(f, "({})|{}|", c, w)?;
            } else {
                write!(f, "({}){}", c, w)?;
            }
        }
        Ok(())
    }
}

impl<K: Slot> AddAssign<&Poly<K>> for Poly<K> {
    fn add_assign(&mut self, rhs: &Poly<K>) {
        self.add_scaled(rhs, &Q::one());
    }
}

impl<K: Slot> SubAssign<&Poly<K>> for Poly<K> {
    fn sub_assign(&mut self, rhs: &Poly<K>) {
        self.add_scaled(rhs, &-Q::one());
    }
}

impl<K: Slot> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Slot> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(mut self, rhs: Poly<K>) -> Poly<K> {
        self += &rhs;
        self
    }
}

impl<K: Slot> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Slot> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(mut self, rhs: Poly<K>) -> Poly<K> {
        self -= &rhs;
        self
    }
}

impl<K: Slot> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        self.scale(&-Q::one())
    }
}

impl<K: Slot> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        self.scale(&-Q::one())
    }
}

impl NCPoly {
    pub fn generator(ctx: Context, i: usize) -> Self {
        assert!(i < ctx.n(), "generator index out of range");
        Self::monomial(ctx, Word::letter(i), Q::one())
    }

    /// The boundary element x0 = -(x1 + ... + xn).
    pub fn x0(ctx: Context) -> Self {
        Self::from_terms(ctx, (0..ctx.n()).map(|i| (Word::letter(i), -Q::one())))
    }

    pub fn word(ctx: Context, w: Word) -> Self {
        Self::monomial(ctx, w, Q::one())
    }

    pub fn constant(ctx: Context, c: Q) -> Self {
        Self::monomial(ctx, Word::empty(), c)
    }

    /// Augmentation: the coefficient of the empty word.
    pub fn eps(&self) -> Q {
        self.coeff(&Word::empty())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        Ok(self.mul_trunc(other, self.ctx.degree()))
    }

    /// Product keeping only degrees `<= cap`.
    pub fn mul_trunc(&self, other: &Self, cap: usize) -> Self {
        let cap = cap.min(self.ctx.degree());
        let mut terms = BTreeMap::new();
        for (u, a) in self.terms.iter() {
            if u.len() > cap {
                break;
            }
            for (v, b) in other.terms.iter() {
                if u.len() + v.len() > cap {
                    break;
                }
                add_entry(&mut terms, u.concat(v), a * b);
            }
        }
        Poly { ctx: self.ctx, terms, _k: PhantomData }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.ctx);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `p·a·s` for words p, s.
    pub fn sandwich(&self, prefix: &[u8], suffix: &[u8]) -> Self {
        let mut out = Self::zero(self.ctx);
        let extra = prefix.len() + suffix.len();
        for (w, c) in self.terms.iter() {
            if w.len() + extra > self.ctx.degree() {
                break;
            }
            out.terms.insert(Word::concat3(prefix, w.letters(), suffix), c.clone());
        }
        out
    }

    pub fn left_mul_word(&self, w: &Word) -> Self {
        self.sandwich(w.letters(), &[])
    }

    pub fn right_mul_word(&self, w: &Word) -> Self {
        self.sandwich(&[], w.letters())
    }

    /// Algebra homomorphism sending x_i to `images[i]`, landing in `target`.
    pub fn substitute(&self, target: Context, images: &[NCPoly]) -> NCPoly {
        assert_eq!(images.len(), self.ctx.n());
        for im in images {
            target.check(&im.ctx()).expect("image context");
        }
        let lows: Vec<usize> = images.iter().map(|p| p.low_degree().unwrap_or(usize::MAX)).collect();
        subst_rec(self, 0, target, images, &lows, target.degree())
    }

    /// Reverses every word (the anti-automorphism fixing generators).
    pub fn reversed(&self) -> Self {
        Self::from_terms(self.ctx, self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())))
    }

    /// Splits `a = a^0 + Σ a^i x_i`; returns `a^i` for every i.
    pub fn right_factors(&self) -> Vec<NCPoly> {
        let mut out = vec![Self::zero(self.ctx); self.ctx.n()];
        for (w, c) in self.terms.iter() {
            if let Some(&last) = w.letters().last() {
                out[last as usize].add_term(w.slice(0, w.len() - 1), c.clone());
            }
        }
        out
    }

    /// Splits `a = a^0 + Σ x_i a_i`; returns `a_i` for every i.
    pub fn left_factors(&self) -> Vec<NCPoly> {
        let mut out = vec![Self::zero(self.ctx); self.ctx.n()];
        for (w, c) in self.terms.iter() {
            if let Some(&first) = w.letters().first() {
                out[first as usize].add_term(w.slice(1, w.len()), c.clone());
            }
        }
        out
    }
}

// Horner-style evaluation: a = a0 + Σ x_i a_i gives φ(a) = a0 + Σ φ(x_i) φ(a_i).
fn subst_rec(a: &NCPoly, depth: usize, target: Context, images: &[NCPoly], lows: &[usize], cap: usize) -> NCPoly {
    let mut out = NCPoly::constant(target, a.eps());
    if depth > target.degree() {
        return out;
    }
    for (i, ai) in a.left_factors().into_iter().enumerate() {
        if ai.is_zero() || lows[i] > cap {
            continue;
        }
        let inner = subst_rec(&ai, depth + 1, target, images, lows, cap - lows[i]);
        if inner.is_zero() {
            continue;
        }
        out += &images[i].mul_trunc(&inner, cap);
    }
    out.truncated(cap)
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.try_mul(rhs).expect("context mismatch in product")
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, d: usize) -> Context {
        Context::new(n, d).unwrap()
    }

    #[test]
    fn product_examples() {
        let c = ctx(2, 4);
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        assert_eq!(&x1 * &x2, NCPoly::word(c, Word::from_letters([0, 1])));
        let one = NCPoly::one(c);
        assert_eq!(&(&one + &x1) * &(&one - &x1), &one - &(&x1 * &x1));
    }

    #[test]
    fn truncation_drops_high_degree() {
        let c = ctx(2, 2);
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        assert!((&(&x1 + &x2) * &(&x1 * &x2)).is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = NCPoly::generator(ctx(2, 3), 0);
        let b = NCPoly::generator(ctx(2, 4), 0);
        assert!(matches!(a.try_mul(&b), Err(AlgebraError::ContextMismatch(..))));
    }

    #[test]
    fn substitution_is_multiplicative() {
        let c = ctx(2, 5);
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        let images = vec![&x1 + &(&x1 * &x2), &x2 - &x1];
        let a = &(&x1 * &x2) + &x2;
        let b = &x2 * &(&x1 * &x1);
        let lhs = (&a * &b).substitute(c, &images);
        let rhs = &a.substitute(c, &images) * &b.substitute(c, &images);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclic_terms_merge_rotations() {
        let c = ctx(2, 3);
        let mut p = CyclicPoly::zero(c);
        p.add_term(Word::from_letters([1, 0]), q(1));
        p.add_term(Word::from_letters([0, 1]), q(2));
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&Word::from_letters([1, 0])), q(3));
    }
}
