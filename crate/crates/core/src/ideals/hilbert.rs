//! Hilbert series of monomial ideals by recursive pivot splitting.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::kernel::Monomial;

/// Dimension and degree of a projective scheme read off its Hilbert series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSummary {
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i64,
    /// Degree counted with multiplicity; `0` for the empty scheme.
    pub degree: u64,
}

impl HilbertSummary {
    pub const EMPTY: HilbertSummary = HilbertSummary { dim: -1, degree: 0 };

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

type UPoly = Vec<BigInt>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn add(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn shift(a: &UPoly, k: usize) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

/// Multiplies by `1 − t^k`.
fn times_one_minus(a: &UPoly, k: usize) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len() + k];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
        out[i + k] -= c;
    }
    trim(out)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> UPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut p = vec![BigInt::one()];
        for g in &gens {
            p = times_one_minus(&p, g.degree() as usize);
        }
        return p;
    }
    // pivot on the variable shared by the most generators
    let mut counts = [0usize; crate::kernel::MAX_VARS];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let v = (0..counts.len()).max_by_key(|&i| (counts[i], core::cmp::Reverse(i))).expect("nonempty");
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pivot = Monomial::one();
    pivot.set_exp(v, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut h = *g;
            h.set_exp(v, g.exp(v).saturating_sub(e));
            h
        })
        .collect();
    add(&numerator(with_pivot), &shift(&numerator(colon), e as usize))
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1−t)^nvars` of the quotient
/// by the monomial ideal generated by `gens`, coefficients ascending in `t`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    numerator(gens.to_vec())
}

/// Dimension and degree of `Proj k[x_0..x_{nvars-1}]/(gens)`.
pub fn summary_from_monomials(gens: &[Monomial], nvars: usize) -> HilbertSummary {
    let mut p = hilbert_numerator(gens);
    if p.is_empty() {
        return HilbertSummary::EMPTY;
    }
    let mut c = 0usize;
    loop {
        let at_one: BigInt = p.iter().sum();
        if !at_one.is_zero() {
            let affine_dim = nvars as i64 - c as i64;
            if affine_dim <= 0 {
                return HilbertSummary::EMPTY;
            }
            debug_assert!(at_one.is_positive());
            return HilbertSummary { dim: affine_dim - 1, degree: at_one.to_u64().expect("degree fits in u64") };
        }
        // synthetic division by (1 − t): q_i = Σ_{j≤i} p_j, negated
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = BigInt::zero();
        for coeff in &p[..p.len() - 1] {
            acc += coeff;
            q.push(acc.clone());
        }
        p = trim(q);
        c += 1;
    }
}

/// Hilbert function values `H(0..=max_deg)` of the quotient ring, from the series.
pub fn hilbert_function(gens: &[Monomial], nvars: usize, max_deg: usize) -> Vec<BigInt> {
    let num = hilbert_numerator(gens);
    // expand N(t)/(1−t)^nvars as a power series
    let mut series: Vec<BigInt> = (0..=max_deg).map(|i| num.get(i).cloned().unwrap_or_default()).collect();
    for _ in 0..nvars {
        for i in 1..series.len() {
            let prev = series[i - 1].clone();
            series[i] += prev;
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn brute_force(gens: &[Monomial], nvars: usize, deg: u32) -> usize {
        // enumerate all monomials of degree `deg` in `nvars` variables
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, gens: &[Monomial], count: &mut usize) {
            if i == nvars - 1 {
                cur.push(left);
                let mono = Monomial::from_exponents(cur);
                if !gens.iter().any(|g| g.divides(&mono)) {
                    *count += 1;
                }
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(nvars, i + 1, left - e, cur, gens, count);
                cur.pop();
            }
        }
        let mut count = 0;
        rec(nvars, 0, deg, &mut Vec::new(), gens, &mut count);
        count
    }

    #[test]
    fn matches_brute_force_counts() {
        let cases: Vec<(Vec<Monomial>, usize)> = vec![
            (vec![m(&[1, 1, 0]), m(&[0, 3, 0])], 3),
            (vec![m(&[2, 0, 0, 0]), m(&[1, 1, 1, 0]), m(&[0, 0, 2, 2])], 4),
            (vec![m(&[0, 1, 2]), m(&[3, 0, 0]), m(&[1, 1, 1])], 3),
            (vec![], 2),
            (vec![m(&[0, 0])], 2),
        ];
        for (gens, n) in cases {
            let h = hilbert_function(&gens, n, 8);
            for d in 0..=8 {
                assert_eq!(h[d], BigInt::from(brute_force(&gens, n, d as u32)), "{:?} degree {}", gens, d);
            }
        }
    }

    #[test]
    fn summaries() {
        assert_eq!(summary_from_monomials(&[], 3), HilbertSummary { dim: 2, degree: 1 });
        assert_eq!(summary_from_monomials(&[m(&[0, 3, 0])], 3), HilbertSummary { dim: 1, degree: 3 });
        assert_eq!(summary_from_monomials(&[m(&[0, 0, 0])], 3), HilbertSummary::EMPTY);
        assert_eq!(summary_from_monomials(&[m(&[1, 0]), m(&[0, 1])], 2), HilbertSummary::EMPTY);
        // x0^2, x0x1 in k[x0,x1,x2]: line x0 = 0 with an embedded point
        assert_eq!(summary_from_monomials(&[m(&[2, 0, 0]), m(&[1, 1, 0])], 3), HilbertSummary { dim: 1, degree: 1 });
    }
}
