use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Scalar, MAX_VARS};
use crate::{Error, Result};

/// How variables of a ring are printed and parsed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarNaming {
    /// `x0, x1, …`
    Plain,
    /// Join ambients: variable `k` of block `j` (1-based) is `xk_j`.
    Blocked { block_len: usize },
}

/// A graded polynomial ring ℚ[x0..xN]; only carries the variable count and naming.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    nvars: usize,
    naming: VarNaming,
}

impl PolyRing {
    pub fn new(nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        Ok(PolyRing { nvars, naming: VarNaming::Plain })
    }

    /// Homogeneous coordinate ring of ℙⁿ.
    pub fn projective(n: usize) -> Result<Self> {
        Self::new(n + 1)
    }

    /// Coordinate ring of the ruled join of `r` copies of ℙⁿ, with blocked names.
    pub fn join(n: usize, r: usize) -> Result<Self> {
        let nvars = r * (n + 1);
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        Ok(PolyRing { nvars, naming: VarNaming::Blocked { block_len: n + 1 } })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn naming(&self) -> VarNaming {
        self.naming
    }

    pub fn var_name(&self, i: usize) -> String {
        match self.naming {
            VarNaming::Plain => format!("x{}", i),
            VarNaming::Blocked { block_len } => format!("x{}_{}", i % block_len, i / block_len + 1),
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars, i)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.nvars)
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars)
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        super::parse_poly(self, text)
    }

    pub fn display(&self, f: &Poly) -> String {
        let mut out = String::new();
        f.write_with(&mut out, |i| self.var_name(i)).expect("writing to a String cannot fail");
        out
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending grevlex and never store zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

fn grevlex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(b, a)
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Poly { nvars, terms: alloc::vec![(Monomial::one(), c)] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Poly { nvars, terms: alloc::vec![(Monomial::var(i), Scalar::one())] }
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Poly { nvars, terms: alloc::vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(nvars: usize, terms: I) -> Self {
        let mut v: Vec<(Monomial, Scalar)> = terms.into_iter().collect();
        debug_assert!(v.iter().all(|(m, _)| m.span() <= nvars));
        v.sort_unstable_by(|a, b| grevlex_desc(&a.0, &b.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Poly { nvars, terms: out }
    }

    pub fn from_integer_terms(nvars: usize, terms: &[(Monomial, BigInt)]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(m, c)| (*m, Scalar::from_integer(c.clone()))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Nonzero homogeneous of degree one.
    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, Scalar)> {
        if order == MonomialOrder::Grevlex {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    /// Coefficients of a linear form, indexed by variable.
    pub fn linear_coefficients(&self) -> Result<Vec<Scalar>> {
        if !self.is_linear_form() {
            return Err(Error::NotLinear(format!("{}", self)));
        }
        let mut out = alloc::vec![Scalar::zero(); self.nvars];
        for (m, c) in &self.terms {
            let i = (0..self.nvars).find(|&i| m.exp(i) == 1).expect("degree one monomial");
            out[i] = c.clone();
        }
        Ok(out)
    }

    pub fn from_linear_coefficients(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i), c.clone())))
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match grevlex_desc(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate { -c.clone() } else { c.clone() })));
        Poly { nvars: self.nvars, terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(self.nvars, acc)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// Multiplication by a monomial keeps the grevlex order of terms.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Exact substitution of coordinates.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::RingMismatch(self.nvars, point.len()));
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    if x.is_zero() {
                        v = Scalar::zero();
                        break;
                    }
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Homogenizes with respect to `var`, which must not occur in `self`.
    pub fn homogenize(&self, var: usize) -> Result<Poly> {
        if self.involves(var) {
            return Err(Error::InvalidArgument(format!("homogenizing variable x{} occurs in {}", var, self)));
        }
        let d = match self.degree_max() {
            None => return Ok(self.clone()),
            Some(d) => d,
        };
        Ok(Poly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| {
                let mut m2 = *m;
                m2.set_exp(var, d - m.degree());
                (m2, c.clone())
            }),
        ))
    }

    fn degree_max(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Sets `var` to one.
    pub fn dehomogenize(&self, var: usize) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| {
                let mut m2 = *m;
                m2.set_exp(var, 0);
                (m2, c.clone())
            }),
        )
    }

    pub fn derivative(&self, var: usize) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exp(var) > 0).map(|(m, c)| {
                let e = m.exp(var);
                let mut m2 = *m;
                m2.set_exp(var, e - 1);
                (m2, c * Scalar::from_integer(BigInt::from(e)))
            }),
        )
    }

    /// Moves the polynomial into a ring with `nvars` variables, sending
    /// variable `i` to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())))
    }

    /// Scales so the grevlex-leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Integer multiple with coprime coefficients and positive grevlex-leading coefficient.
    pub fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<(Monomial, BigInt)> =
            self.terms.iter().map(|(m, c)| (*m, c.numer() * (&lcm / c.denom()))).collect();
        let mut g = BigInt::zero();
        for (_, c) in &ints {
            g = g.gcd(c);
        }
        if let Some((_, first)) = ints.first() {
            if first.is_negative() {
                g = -g;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for (_, c) in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        ints
    }

    pub fn primitive(&self) -> Poly {
        Poly::from_integer_terms(self.nvars, &self.primitive_integer_terms())
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    fn write_with<W: fmt::Write, F: Fn(usize) -> String>(&self, w: &mut W, name: F) -> fmt::Result {
        if self.terms.is_empty() {
            return w.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    w.write_str("-")?;
                }
            } else {
                w.write_str(if neg { " - " } else { " + " })?;
            }
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(w, "{}", abs)?;
                first = false;
            }
            for i in 0..self.nvars {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                if !first {
                    w.write_str("*")?;
                }
                first = false;
                w.write_str(&name(i))?;
                if e > 1 {
                    write!(w, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |i| format!("x{}", i))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars, self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    /// Panics on ring mismatch; use [`Poly::try_add`] for a checked version.
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}
