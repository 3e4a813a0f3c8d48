use alloc::vec::Vec;

use num_bigint::BigInt;

use super::groebner::{buchberger, reduce, to_monic_poly, to_terms, Terms};
use crate::kernel::{Monomial, MonomialOrder, Poly, Scalar, MAX_VARS};
use crate::{Error, Result};

/// An ideal of `ℚ[x_0, …, x_{nvars-1}]` given by nonzero generators.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Poly>,
    homogeneous: bool,
    // generators are known to be the reduced grevlex basis
    reduced: bool,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Poly>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let mut kept: Vec<Poly> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(nvars, g.nvars()));
            }
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        let homogeneous = kept.iter().all(Poly::is_homogeneous);
        Ok(Ideal { nvars, gens: kept, homogeneous, reduced: false })
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal { nvars, gens: Vec::new(), homogeneous: true, reduced: true }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal { nvars, gens: alloc::vec![Poly::one(nvars)], homogeneous: true, reduced: true }
    }

    /// The ideal generated by the variables with the given indices.
    pub fn of_variables(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vars.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        let gens = v.into_iter().rev().map(|i| Poly::var(nvars, i)).collect();
        Ideal { nvars, gens, homogeneous: true, reduced: true }
    }

    pub(crate) fn from_reduced(nvars: usize, gens: Vec<Poly>) -> Self {
        let homogeneous = gens.iter().all(Poly::is_homogeneous);
        Ideal { nvars, gens, homogeneous, reduced: true }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Poly::is_constant) || self.gb().is_unit()
    }

    /// Reduced grevlex basis.
    pub fn gb(&self) -> GroebnerBasis {
        if self.reduced {
            return GroebnerBasis::from_reduced(self.nvars, MonomialOrder::Grevlex, self.gens.clone());
        }
        GroebnerBasis::compute(self, MonomialOrder::Grevlex)
    }

    /// The same ideal presented by its reduced grevlex basis.
    pub fn canonical(&self) -> Ideal {
        if self.reduced {
            return self.clone();
        }
        let gb = self.gb();
        Ideal::from_reduced(self.nvars, gb.polys)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let gb = self.gb();
        other.gens.iter().all(|g| gb.contains(g))
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn same_as(&self, other: &Ideal) -> bool {
        self.nvars == other.nvars && self.gb().polys == other.gb().polys
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, gens).expect("same ring")
    }

    pub fn with_generator(&self, f: Poly) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(f);
        Ideal::new(self.nvars, gens).expect("same ring")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(self.nvars, gens).expect("same ring")
    }

    /// Applies `f ↦ map(f)` to every generator (the target ring may differ).
    pub fn map_gens(&self, nvars: usize, map: impl Fn(&Poly) -> Poly) -> Ideal {
        Ideal::new(nvars, self.gens.iter().map(map).collect()).expect("mapped into target ring")
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Ideal {}

/// A reduced Gröbner basis together with its monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Poly>,
    terms: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn compute(ideal: &Ideal, order: MonomialOrder) -> Self {
        let gens: Vec<Terms> = ideal.gens.iter().map(|g| to_terms(g, order)).collect();
        let basis = buchberger(&gens, order);
        let polys = basis.iter().map(|t| to_monic_poly(ideal.nvars, t)).collect();
        GroebnerBasis { nvars: ideal.nvars, order, polys, terms: basis }
    }

    fn from_reduced(nvars: usize, order: MonomialOrder, polys: Vec<Poly>) -> Self {
        let terms = polys.iter().map(|g| to_terms(g, order)).collect();
        GroebnerBasis { nvars, order, polys, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Monic basis elements in ascending order of leading monomial.
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.terms.iter().map(|t| t[0].0).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0][0].0.is_one()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.nvars, self.polys.clone()).expect("basis lives in its ring")
    }

    /// Unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert_eq!(f.nvars(), self.nvars, "ring mismatch");
        if f.is_zero() {
            return f.clone();
        }
        let mut t: Terms = f.primitive_integer_terms();
        if self.order != MonomialOrder::Grevlex {
            super::groebner::sort_terms(&mut t, self.order);
        }
        let refs: Vec<&Terms> = self.terms.iter().collect();
        let (scale, r) = reduce(&t, &refs, self.order, false);
        // f = c·prim(f), scale·prim(f) ≡ r
        let c = content_scalar(f, &t);
        let factor = c / scale;
        Poly::from_terms(self.nvars, r.into_iter().map(|(m, k)| (m, Scalar::from_integer(k) * &factor)))
    }

    pub fn contains(&self, f: &Poly) -> bool {
        if f.is_zero() {
            return true;
        }
        let t = to_terms(f, self.order);
        let refs: Vec<&Terms> = self.terms.iter().collect();
        reduce(&t, &refs, self.order, true).1.is_empty()
    }

    /// Checks Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let refs: Vec<&Terms> = self.terms.iter().collect();
        for i in 0..self.terms.len() {
            for j in i + 1..self.terms.len() {
                let (f, g) = (&self.terms[i], &self.terms[j]);
                let lcm = f[0].0.lcm(&g[0].0);
                let fp = self.to_poly(f).mul_monomial(&f[0].0.quotient_of(&lcm)).scale(&Scalar::from_integer(g[0].1.clone()));
                let gp = self.to_poly(g).mul_monomial(&g[0].0.quotient_of(&lcm)).scale(&Scalar::from_integer(f[0].1.clone()));
                let s = &fp - &gp;
                if s.is_zero() {
                    continue;
                }
                let mut st = s.primitive_integer_terms();
                super::groebner::sort_terms(&mut st, self.order);
                if !reduce(&st, &refs, self.order, true).1.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn to_poly(&self, t: &Terms) -> Poly {
        Poly::from_integer_terms(self.nvars, t)
    }
}

/// The rational `c` with `f = c·prim(f)`, where `prim` gives `t`.
fn content_scalar(f: &Poly, t: &[(Monomial, BigInt)]) -> Scalar {
    let m = t[0].0;
    let fc = f.terms().iter().find(|(fm, _)| *fm == m).expect("same support").1.clone();
    fc / Scalar::from_integer(t[0].1.clone())
}
