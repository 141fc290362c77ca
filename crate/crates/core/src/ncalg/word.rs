use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// A monomial in the generators. Letters are stored zero-based; `x1` is letter 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 12]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        let mut w = SmallVec::new();
        w.push(i as u8);
        Word(w)
    }

    pub fn from_letters<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Word(it.into_iter().map(|i| i as u8).collect())
    }

    pub fn from_slice(s: &[u8]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn at(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn concat3(a: &[u8], b: &[u8], c: &[u8]) -> Word {
        let mut v: SmallVec<[u8; 12]> = SmallVec::with_capacity(a.len() + b.len() + c.len());
        v.extend_from_slice(a);
        v.extend_from_slice(b);
        v.extend_from_slice(c);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_slice(&self.0[from..to])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn rotate(&self, k: usize) -> Word {
        let m = self.len();
        if m == 0 {
            return self.clone();
        }
        let k = k % m;
        Word::concat3(&self.0[k..], &self.0[..k], &[])
    }

    /// Lexicographically minimal rotation.
    pub fn min_rotation(&self) -> Word {
        let m = self.len();
        let mut best = self.clone();
        for k in 1..m {
            let r = self.rotate(k);
            if r.0 < best.0 {
                best = r;
            }
        }
        best
    }

    /// Substitutes letters through `f` (used for changing generators).
    pub fn map_letters(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&l| f(l as usize) as u8).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in self.0.iter() {
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

/// All words of length exactly `d` over `n` letters, in canonical order.
pub fn words_of_degree(n: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for i in 0..n {
                let mut v = w.0.clone();
                v.push(i as u8);
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `d`, in canonical order.
pub fn words_up_to(n: usize, d: usize) -> Vec<Word> {
    (0..=d).flat_map(|k| words_of_degree(n, k)).collect()
}
