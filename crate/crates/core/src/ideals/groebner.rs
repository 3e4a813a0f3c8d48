//! Buchberger's algorithm over ℚ with Gebauer–Möller pair elimination and
//! the sugar selection strategy.
//!
//! Internally every polynomial is kept as a primitive integer polynomial
//! (fraction-free reduction); the final reduced basis is returned monic over ℚ.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::kernel::{Monomial, MonomialOrder, Poly, Scalar};

pub(crate) type Terms = Vec<(Monomial, BigInt)>;

#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub terms: Terms,
    pub sugar: u32,
}

impl IPoly {
    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }
}

pub(crate) fn sort_terms(terms: &mut Terms, order: MonomialOrder) {
    terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
}

pub(crate) fn to_terms(f: &Poly, order: MonomialOrder) -> Terms {
    let mut t = f.primitive_integer_terms();
    if order != MonomialOrder::Grevlex {
        sort_terms(&mut t, order);
    }
    normalize_sign(&mut t);
    t
}

fn normalize_sign(t: &mut Terms) {
    if let Some((_, c)) = t.first() {
        if c.is_negative() {
            for (_, c) in t.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
    }
}

fn content(t: &Terms) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in t {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(t: &mut Terms) {
    let g = content(t);
    if !g.is_zero() && !g.is_one() {
        for (_, c) in t.iter_mut() {
            *c = &*c / &g;
        }
    }
    normalize_sign(t);
}

/// `alpha·p − beta·q·g`, dropping zero terms; all inputs sorted by `order`.
fn combine(p: &[(Monomial, BigInt)], alpha: &BigInt, beta: &BigInt, q: &Monomial, g: &[(Monomial, BigInt)], order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let a_one = alpha.is_one();
    while i < p.len() && j < g.len() {
        let gm = q.mul(&g[j].0);
        match order.cmp(&p[i].0, &gm) {
            Ordering::Greater => {
                out.push((p[i].0, if a_one { p[i].1.clone() } else { alpha * &p[i].1 }));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(beta * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if a_one { p[i].1.clone() } else { alpha * &p[i].1 } - beta * &g[j].1;
                if !c.is_zero() {
                    out.push((gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &p[i..] {
        out.push((t.0, if a_one { t.1.clone() } else { alpha * &t.1 }));
    }
    for t in &g[j..] {
        out.push((q.mul(&t.0), -(beta * &t.1)));
    }
    out
}

/// Fraction-free full reduction of `f` by `basis`.
///
/// Returns `(scale, remainder)` with `scale·f ≡ remainder` modulo the basis,
/// `scale` a nonzero rational and the remainder an integer polynomial. With
/// `primitive` set the remainder is made primitive (and `scale` adjusted).
pub(crate) fn reduce(f: &[(Monomial, BigInt)], basis: &[&Terms], order: MonomialOrder, primitive: bool) -> (Scalar, Terms) {
    let mut p: Terms = f.to_vec();
    let mut r: Terms = Vec::new();
    let mut scale = Scalar::one();
    let mut steps = 0u32;
    let mut start = 0usize;
    while start < p.len() {
        let m = p[start].0;
        let divisor = basis.iter().find(|g| g[0].0.divides(&m));
        match divisor {
            Some(g) => {
                let c = &p[start].1;
                let q = g[0].0.quotient_of(&m);
                let lc = &g[0].1;
                let gg = lc.gcd(c);
                let alpha = lc / &gg;
                let beta = c / &gg;
                if !alpha.is_one() {
                    for t in r.iter_mut() {
                        t.1 = &t.1 * &alpha;
                    }
                    scale *= Scalar::from_integer(alpha.clone());
                }
                p = combine(&p[start..], &alpha, &beta, &q, g, order);
                start = 0;
                steps += 1;
                if steps.is_multiple_of(8) {
                    let g = content(&p).gcd(&content(&r));
                    if !g.is_zero() && !g.is_one() {
                        for t in p.iter_mut().chain(r.iter_mut()) {
                            t.1 = &t.1 / &g;
                        }
                        scale /= Scalar::from_integer(g);
                    }
                }
            }
            None => {
                let t = core::mem::replace(&mut p[start], (m, BigInt::zero()));
                r.push(t);
                start += 1;
            }
        }
    }
    if primitive {
        let g = content(&r);
        if !g.is_zero() && !g.is_one() {
            for t in r.iter_mut() {
                t.1 = &t.1 / &g;
            }
            scale /= Scalar::from_integer(g);
        }
        if let Some((_, c)) = r.first() {
            if c.is_negative() {
                for t in r.iter_mut() {
                    t.1 = -core::mem::take(&mut t.1);
                }
                scale = -scale;
            }
        }
    }
    (scale, r)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn active_leads(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.polys.len()).filter(move |&k| self.active[k])
    }

    /// Gebauer–Möller update with the new polynomial `h`.
    fn update(&mut self, h: IPoly) {
        let hi = self.polys.len();
        let hl = *h.lead();
        self.polys.push(h);
        self.active.push(true);

        let candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let gl = *self.polys[g].lead();
                let lcm = hl.lcm(&gl);
                let sugar = (self.polys[hi].sugar + lcm.degree() - hl.degree())
                    .max(self.polys[g].sugar + lcm.degree() - gl.degree());
                Pair { i: g, j: hi, lcm, sugar }
            })
            .collect();

        // chain criterion among new pairs
        let mut d: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let gl = *self.polys[p.i].lead();
            let coprime = hl.is_coprime(&gl);
            let dominated = candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || d.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p.clone());
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !hl.is_coprime(self.polys[p.i].lead())).collect();

        // drop old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = polys[p.i].lead();
            let lj = polys[p.j].lead();
            !hl.divides(&p.lcm) || li.lcm(&hl) == p.lcm || lj.lcm(&hl) == p.lcm
        });
        self.pairs.extend(e);

        for g in 0..hi {
            if self.active[g] && hl.divides(self.polys[g].lead()) {
                self.active[g] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => order.cmp(&a.lcm, &b.lcm) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Terms {
        let f = &self.polys[p.i].terms;
        let g = &self.polys[p.j].terms;
        let qf = f[0].0.quotient_of(&p.lcm);
        let qg = g[0].0.quotient_of(&p.lcm);
        let gg = f[0].1.gcd(&g[0].1);
        let af = &g[0].1 / &gg;
        let ag = &f[0].1 / &gg;
        // af·qf·f − ag·qg·g, leading terms cancel
        let ff: Terms = f[1..].iter().map(|(m, c)| (qf.mul(m), c.clone())).collect();
        let gt: Terms = g[1..].to_vec();
        combine(&ff, &af, &ag, &qg, &gt, self.order)
    }

    fn basis_refs(&self) -> Vec<&Terms> {
        self.active_leads().map(|k| &self.polys[k].terms).collect()
    }
}

fn poly_degree(t: &Terms) -> u32 {
    t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, as primitive
/// integer polynomials sorted by ascending leading monomial.
pub(crate) fn buchberger(gens: &[Terms], order: MonomialOrder) -> Vec<Terms> {
    let mut input: Vec<Terms> = gens.iter().filter(|t| !t.is_empty()).cloned().collect();
    if input.iter().any(|t| t.len() == 1 && t[0].0.is_one()) {
        return alloc::vec![alloc::vec![(Monomial::one(), BigInt::one())]];
    }
    input.sort_by(|a, b| poly_degree(a).cmp(&poly_degree(b)).then(order.cmp(&a[0].0, &b[0].0)));
    let mut eng = Engine { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for f in input {
        let sugar = poly_degree(&f);
        let (_, r) = reduce(&f, &eng.basis_refs(), order, true);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return alloc::vec![alloc::vec![(Monomial::one(), BigInt::one())]];
        }
        eng.update(IPoly { terms: r, sugar });
    }
    while let Some(p) = eng.select() {
        let s = eng.spoly(&p);
        if s.is_empty() {
            continue;
        }
        let (_, r) = reduce(&s, &eng.basis_refs(), order, true);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return alloc::vec![alloc::vec![(Monomial::one(), BigInt::one())]];
        }
        eng.update(IPoly { terms: r, sugar: p.sugar });
    }
    let mut basis: Vec<Terms> = eng.active_leads().map(|k| eng.polys[k].terms.clone()).collect();
    interreduce(&mut basis, order);
    basis
}

/// Minimalizes and fully reduces a Gröbner basis in place.
pub(crate) fn interreduce(basis: &mut Vec<Terms>, order: MonomialOrder) {
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms> = Vec::new();
    for g in basis.drain(..) {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let n = minimal.len();
    for k in 0..n {
        let others: Vec<&Terms> = (0..n).filter(|&j| j != k).map(|j| &minimal[j]).collect();
        let (scale, r) = reduce(&minimal[k][1..], &others, order, false);
        // scale·tail ≡ r, so scale.numer·g ≡ lc·scale.numer + scale.denom·r
        let head = (minimal[k][0].0, &minimal[k][0].1 * scale.numer());
        let mut full: Terms = Vec::with_capacity(r.len() + 1);
        full.push(head);
        full.extend(r.into_iter().map(|(m, c)| (m, c * scale.denom())));
        make_primitive(&mut full);
        minimal[k] = full;
    }
    basis.extend(minimal);
}

/// Converts primitive integer terms to a monic rational polynomial.
pub(crate) fn to_monic_poly(nvars: usize, t: &Terms) -> Poly {
    let lc = Scalar::from_integer(t[0].1.clone());
    let inv = lc.recip();
    Poly::from_terms(nvars, t.iter().map(|(m, c)| (*m, Scalar::from_integer(c.clone()) * &inv)))
}
