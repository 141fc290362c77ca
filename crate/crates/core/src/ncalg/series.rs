use super::poly::{NCPoly, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// One-variable power series truncated at a fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Q>,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Bernoulli numbers B_0..=B_m with B_1 = −1/2.
pub fn bernoulli(m: usize) -> Vec<Q> {
    let mut b: Vec<Q> = Vec::with_capacity(m + 1);
    for k in 0..=m {
        if k == 0 {
            b.push(Q::one());
            continue;
        }
        // Σ_{j<k+1} C(k+1, j) B_j = 0
        let mut acc = Q::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            acc += Q::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / Q::from_integer(BigInt::from(k + 1)));
    }
    b
}

impl Series {
    pub fn new(mut coeffs: Vec<Q>, degree: usize) -> Self {
        coeffs.resize(degree + 1, Q::zero());
        Series { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Series { coeffs: vec![Q::zero(); degree + 1] }
    }

    pub fn constant(c: Q, degree: usize) -> Self {
        Self::new(vec![c], degree)
    }

    /// The series z.
    pub fn identity(degree: usize) -> Self {
        Self::new(vec![Q::zero(), Q::one()], degree)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, c: Q) {
        if k < self.coeffs.len() {
            self.coeffs[k] = c;
        }
    }

    pub fn exp(degree: usize) -> Self {
        Series { coeffs: (0..=degree).map(|k| Q::new(BigInt::one(), factorial(k))).collect() }
    }

    /// z/(1 − e^{−z}).
    pub fn todd(degree: usize) -> Self {
        let b = bernoulli(degree);
        Series {
            coeffs: (0..=degree)
                .map(|k| {
                    let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
                    sign * &b[k] / Q::from_integer(factorial(k))
                })
                .collect(),
        }
    }

    /// (1 − e^{−z})/z.
    pub fn one_minus_exp_neg_over_z(degree: usize) -> Self {
        Series {
            coeffs: (0..=degree)
                .map(|k| {
                    let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    Q::new(sign, factorial(k + 1))
                })
                .collect(),
        }
    }

    /// s(z) = 1/z − 1/(1 − e^{−z}) with its pole cancelled.
    pub fn s_function(degree: usize) -> Self {
        let t = Self::todd(degree + 1);
        Series { coeffs: (0..=degree).map(|j| -t.coeff(j + 1)).collect() }
    }

    pub fn add(&self, other: &Series) -> Series {
        let d = self.degree().max(other.degree());
        Series { coeffs: (0..=d).map(|k| self.coeff(k) + other.coeff(k)).collect() }
    }

    pub fn scale(&self, c: &Q) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let d = self.degree().min(other.degree());
        let mut coeffs = vec![Q::zero(); d + 1];
        for i in 0..=d {
            for j in 0..=(d - i) {
                coeffs[i + j] += self.coeff(i) * other.coeff(j);
            }
        }
        Series { coeffs }
    }

    /// Truncated one degree lower, since h_{N+1} is unknown.
    pub fn derivative(&self) -> Series {
        let d = self.degree().saturating_sub(1);
        Series { coeffs: (0..=d).map(|k| self.coeff(k + 1) * Q::from_integer(BigInt::from(k + 1))).collect() }
    }

    pub fn even_part(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 0 { c.clone() } else { Q::zero() }).collect(),
        }
    }

    pub fn odd_part(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { c.clone() } else { Q::zero() }).collect(),
        }
    }

    /// f(−z).
    pub fn reflect(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }).collect(),
        }
    }

    /// Σ f_k a^k in A.
    pub fn eval(&self, a: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(a.ctx());
        let mut pw = NCPoly::one(a.ctx());
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                pw = &pw * a;
                if pw.is_zero() {
                    break;
                }
            }
            out.add_scaled(&pw, c);
        }
        out
    }
}

/// Σ f_k ad_x^k(b).
pub fn ad_series(f: &Series, x: &NCPoly, b: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero(b.ctx());
    let mut cur = b.clone();
    for (k, c) in f.coeffs().iter().enumerate() {
        if k > 0 {
            cur = x.commutator(&cur);
            if cur.is_zero() {
                break;
            }
        }
        out.add_scaled(&cur, c);
    }
    out
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{}", c),
                1 => format!("({})z", c),
                _ => format!("({})z^{}", c, k),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::poly::{qf, Context};

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(8);
        assert_eq!(b[1], qf(-1, 2));
        assert_eq!(b[2], qf(1, 6));
        assert_eq!(b[3], qf(0, 1));
        assert_eq!(b[4], qf(-1, 30));
        assert_eq!(b[6], qf(1, 42));
        assert_eq!(b[8], qf(-1, 30));
    }

    #[test]
    fn s_function_coefficients() {
        let s = Series::s_function(5);
        assert_eq!(s.coeff(0), qf(-1, 2));
        assert_eq!(s.coeff(1), qf(-1, 12));
        assert_eq!(s.coeff(2), qf(0, 1));
        assert_eq!(s.coeff(3), qf(1, 720));
    }

    #[test]
    fn todd_inverts_its_reciprocal() {
        let p = Series::todd(7).mul(&Series::one_minus_exp_neg_over_z(7));
        assert_eq!(p, Series::constant(qf(1, 1), 7));
    }

    #[test]
    fn ad_series_examples() {
        let c = Context::new(2, 4).unwrap();
        let x1 = NCPoly::generator(c, 0);
        let x2 = NCPoly::generator(c, 1);
        assert_eq!(ad_series(&Series::identity(4), &x1, &x2), x1.commutator(&x2));
        assert_eq!(ad_series(&Series::constant(qf(1, 1), 4), &x1, &x2), x2);
        assert_eq!(ad_series(&Series::one_minus_exp_neg_over_z(4), &x1, &x1), x1);
    }
}
