use super::hopf::LieElement;
use super::poly::{Context, NCPoly};
use super::word::Word;

/// Lyndon words of length exactly `d` over `n` letters, in lexicographic order (Duval).
pub fn lyndon_words(n: usize, d: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if d == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == d {
            out.push(Word::from_letters(w.iter().copied()));
        }
        let m = w.len();
        while w.len() < d {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == n - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: &[u8]) -> bool {
    let m = w.len();
    (1..m).all(|k| {
        let rot: Vec<u8> = w[k..].iter().chain(w[..k].iter()).copied().collect();
        w < rot.as_slice()
    })
}

/// Standard bracketing: w = uv with v the longest proper Lyndon suffix.
pub fn standard_bracket(ctx: Context, w: &Word) -> NCPoly {
    if w.len() == 1 {
        return NCPoly::word(ctx, w.clone());
    }
    let letters = w.letters();
    let split = (1..w.len()).find(|&k| is_lyndon(&letters[k..])).expect("Lyndon word of length > 1 has a Lyndon suffix");
    let u = standard_bracket(ctx, &w.slice(0, split));
    let v = standard_bracket(ctx, &w.slice(split, w.len()));
    u.commutator(&v)
}

/// Basis of the degree-`d` part of the free Lie algebra.
pub fn lyndon_basis(ctx: Context, d: usize) -> Vec<LieElement> {
    lyndon_words(ctx.n(), d).iter().map(|w| LieElement::new_unchecked(standard_bracket(ctx, w))).collect()
}

fn mobius(mut k: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if k > 1 {
        result = -result;
    }
    result
}

/// Witt formula (1/d) Σ_{e|d} μ(d/e) n^e.
pub fn witt_dimension(n: usize, d: usize) -> usize {
    let total: i64 = (1..=d).filter(|e| d % e == 0).map(|e| mobius(d / e) * (n as i64).pow(e as u32)).sum();
    (total / d as i64) as usize
}
