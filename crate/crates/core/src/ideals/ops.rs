use alloc::vec::Vec;

use super::basis::{GroebnerBasis, Ideal};
use super::hilbert::{summary_from_monomials, HilbertSummary};
use crate::kernel::{LinearChange, Monomial, MonomialOrder, Poly, Scalar, Seed, MAX_VARS};
use crate::{Error, Result};

const HULL_ATTEMPTS: u32 = 20;
const HULL_SEED: Seed = Seed(0x4855_4C4C);

pub fn groebner(i: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    if order == MonomialOrder::Grevlex {
        i.gb()
    } else {
        GroebnerBasis::compute(i, order)
    }
}

pub fn normal_form(f: &Poly, g: &GroebnerBasis) -> Poly {
    g.normal_form(f)
}

fn check_extend(nvars: usize) -> Result<()> {
    if nvars + 1 > MAX_VARS {
        Err(Error::TooManyVariables(nvars + 1))
    } else {
        Ok(())
    }
}

fn shift_up(f: &Poly) -> Poly {
    let map: Vec<usize> = (1..=f.nvars()).collect();
    f.remap(f.nvars() + 1, &map)
}

/// Drops the first `k` variables of polynomials not involving them.
fn shift_down(f: &Poly, k: usize) -> Poly {
    let n = f.nvars();
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    f.remap(n - k, &map)
}

/// Keeps the basis elements free of the first `k` variables. For an
/// elimination order the result is the reduced grevlex basis of the
/// elimination ideal.
fn eliminated_part(gb: &GroebnerBasis, k: usize) -> Vec<Poly> {
    gb.polys().iter().filter(|p| (0..k).all(|v| !p.involves(v))).cloned().collect()
}

/// `I ∩ ℚ[x_k, …]`, kept in the same ring.
pub fn eliminate(i: &Ideal, front_block: usize) -> Ideal {
    if front_block == 0 {
        return i.clone();
    }
    let gb = GroebnerBasis::compute(i, MonomialOrder::Elimination(front_block));
    Ideal::from_reduced(i.nvars(), eliminated_part(&gb, front_block))
}

pub fn intersect_ideals(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.nvars() != j.nvars() {
        return Err(Error::RingMismatch(i.nvars(), j.nvars()));
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(i.nvars()));
    }
    if i.gens().iter().any(Poly::is_constant) {
        return Ok(j.clone());
    }
    if j.gens().iter().any(Poly::is_constant) {
        return Ok(i.clone());
    }
    let n = i.nvars();
    check_extend(n)?;
    let t = Poly::var(n + 1, 0);
    let one_minus_t = &Poly::one(n + 1) - &t;
    let mut gens: Vec<Poly> = i.gens().iter().map(|f| &t * &shift_up(f)).collect();
    gens.extend(j.gens().iter().map(|g| &one_minus_t * &shift_up(g)));
    let big = Ideal::new(n + 1, gens)?;
    let gb = GroebnerBasis::compute(&big, MonomialOrder::Elimination(1));
    let kept = eliminated_part(&gb, 1).iter().map(|p| shift_down(p, 1)).collect();
    Ok(Ideal::from_reduced(n, kept))
}

/// Exact quotient `g / f`, or `None` when `f` does not divide `g`.
pub(crate) fn divide_exact(g: &Poly, f: &Poly) -> Option<Poly> {
    let (lm, lc) = f.terms().first()?.clone();
    let mut rest = g.clone();
    let mut quotient = Vec::new();
    while let Some((m, c)) = rest.terms().first().cloned() {
        let q = m.checked_div(&lm)?;
        let coeff: Scalar = c / &lc;
        rest = &rest - &f.mul_monomial(&q).scale(&coeff);
        quotient.push((q, coeff));
    }
    Some(Poly::from_terms(g.nvars(), quotient))
}

/// Homogeneous colon or saturation by a linear form: after a change of
/// coordinates sending `h` to the last variable, a grevlex basis divided by
/// that variable generates the answer.
fn colon_linear(i: &Ideal, h: &Poly, saturate: bool) -> Ideal {
    let change = LinearChange::sending_to_last(h).expect("nonzero linear form");
    let n = i.nvars();
    let last = n - 1;
    let moved = i.map_gens(n, |g| change.pull(g));
    let gb = moved.gb();
    let gens = gb
        .polys()
        .iter()
        .map(|g| {
            let power = g.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
            let e = if saturate { power } else { power.min(1) };
            if e == 0 {
                change.push(g)
            } else {
                let mut d = Monomial::one();
                d.set_exp(last, e);
                let divided = Poly::from_terms(n, g.terms().iter().map(|(m, c)| (m.checked_div(&d).expect("divisible"), c.clone())));
                change.push(&divided)
            }
        })
        .collect();
    Ideal::new(n, gens).expect("same ring")
}

fn fast_linear(i: &Ideal, f: &Poly) -> bool {
    i.is_homogeneous() && f.is_linear_form() && i.nvars() > 0
}

/// `I : f`.
pub fn quotient_by(i: &Ideal, f: &Poly) -> Result<Ideal> {
    if f.nvars() != i.nvars() {
        return Err(Error::RingMismatch(i.nvars(), f.nvars()));
    }
    if f.is_zero() {
        return Ok(Ideal::unit(i.nvars()));
    }
    if f.is_constant() || i.is_zero() {
        return Ok(i.clone());
    }
    if fast_linear(i, f) {
        return Ok(colon_linear(i, f, false));
    }
    quotient_by_intersection(i, f)
}

pub(crate) fn quotient_by_intersection(i: &Ideal, f: &Poly) -> Result<Ideal> {
    let principal = Ideal::new(i.nvars(), alloc::vec![f.clone()])?;
    let k = intersect_ideals(i, &principal)?;
    let gens = k.gens().iter().map(|g| divide_exact(g, f).expect("intersection lies in (f)")).collect();
    Ideal::new(i.nvars(), gens)
}

/// `I : J = ⋂_{f ∈ gens J} (I : f)`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.nvars() != j.nvars() {
        return Err(Error::RingMismatch(i.nvars(), j.nvars()));
    }
    let mut acc: Option<Ideal> = None;
    for f in j.gens() {
        let q = quotient_by(i, f)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect_ideals(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(i.nvars())))
}

/// `I : f^∞`.
pub fn saturate_by(i: &Ideal, f: &Poly) -> Result<Ideal> {
    if f.nvars() != i.nvars() {
        return Err(Error::RingMismatch(i.nvars(), f.nvars()));
    }
    if f.is_zero() {
        return Ok(Ideal::unit(i.nvars()));
    }
    if f.is_constant() || i.is_zero() {
        return Ok(i.clone());
    }
    if fast_linear(i, f) {
        return Ok(colon_linear(i, f, true));
    }
    saturate_by_elimination(i, f)
}

pub(crate) fn saturate_by_elimination(i: &Ideal, f: &Poly) -> Result<Ideal> {
    let n = i.nvars();
    check_extend(n)?;
    let t = Poly::var(n + 1, 0);
    let mut gens: Vec<Poly> = i.gens().iter().map(shift_up).collect();
    gens.push(&(&t * &shift_up(f)) - &Poly::one(n + 1));
    let big = Ideal::new(n + 1, gens)?;
    let gb = GroebnerBasis::compute(&big, MonomialOrder::Elimination(1));
    let kept = eliminated_part(&gb, 1).iter().map(|p| shift_down(p, 1)).collect();
    Ok(Ideal::from_reduced(n, kept))
}

/// `I : J^∞ = ⋂_{f ∈ gens J} (I : f^∞)`.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.nvars() != j.nvars() {
        return Err(Error::RingMismatch(i.nvars(), j.nvars()));
    }
    let mut acc: Option<Ideal> = None;
    for f in j.gens() {
        let s = saturate_by(i, f)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect_ideals(&a, &s)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(i.nvars())))
}

/// Rabinowitsch test `1 ∈ I + (1 − t·f)`.
pub fn radical_contains(i: &Ideal, f: &Poly) -> Result<bool> {
    let n = i.nvars();
    if f.nvars() != n {
        return Err(Error::RingMismatch(n, f.nvars()));
    }
    if f.is_zero() {
        return Ok(true);
    }
    check_extend(n)?;
    let mut map: Vec<usize> = (0..n).collect();
    let gens_up: Vec<Poly> = i.gens().iter().map(|g| g.remap(n + 1, &map)).collect();
    map.truncate(n);
    let t = Poly::var(n + 1, n);
    let mut gens = gens_up;
    gens.push(&Poly::one(n + 1) - &(&t * &f.remap(n + 1, &map)));
    Ok(Ideal::new(n + 1, gens)?.gb().is_unit())
}

pub fn hilbert(i: &Ideal) -> Result<HilbertSummary> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous(i.gens().iter().find(|g| !g.is_homogeneous()).map(|g| alloc::format!("{}", g)).unwrap_or_default()));
    }
    Ok(summary_from_monomials(&i.gb().leading_monomials(), i.nvars()))
}

/// Homogenizes a grevlex basis of the affine ideal with respect to `var`.
pub fn projective_closure(i: &Ideal, var: usize) -> Result<Ideal> {
    let gb = i.gb();
    let gens = gb.polys().iter().map(|g| g.homogenize(var)).collect::<Result<Vec<_>>>()?;
    Ideal::new(i.nvars(), gens)
}

/// Whether `f` is a nonzerodivisor modulo `I`, i.e. `I : f = I`.
pub fn is_nzd(i: &Ideal, f: &Poly) -> Result<bool> {
    if f.nvars() != i.nvars() {
        return Err(Error::RingMismatch(i.nvars(), f.nvars()));
    }
    if f.is_zero() {
        return Ok(i.is_unit());
    }
    if fast_linear(i, f) {
        let change = LinearChange::sending_to_last(f)?;
        let last = i.nvars() - 1;
        let moved = i.map_gens(i.nvars(), |g| change.pull(g));
        return Ok(moved.gb().leading_monomials().iter().all(|m| m.exp(last) == 0));
    }
    Ok(quotient_by(i, f)?.same_as(i))
}

/// Sufficient test for Cohen–Macaulayness: after a coordinate change the
/// last `dim + 1` variables avoid every leading monomial, so they form a
/// regular sequence modulo the initial ideal and hence modulo `I`.
fn cm_certificate(i: &Ideal, dim: usize) -> bool {
    let n = i.nvars();
    let mut stream = HULL_SEED.stream(u64::MAX);
    let tail = n - dim - 1;
    let matrix: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            if r < tail {
                (0..n).map(|c| if c == r { Scalar::from_integer(1.into()) } else { Scalar::from_integer(0.into()) }).collect()
            } else {
                (0..n).map(|_| stream.scalar(9)).collect()
            }
        })
        .collect();
    let change = match LinearChange::from_matrix(matrix) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let moved = i.map_gens(n, |g| change.pull(g));
    moved.gb().leading_monomials().iter().all(|m| (tail..n).all(|v| m.exp(v) == 0))
}

/// `codim` generic homogeneous combinations of the generators of `i`.
fn generic_subideal(i: &Ideal, codim: usize, attempt: u32) -> Ideal {
    let n = i.nvars();
    let mut gens: Vec<&Poly> = i.gens().iter().collect();
    gens.sort_by_key(|g| g.degree());
    let degs: Vec<u32> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let max_deg = *degs.last().expect("nonzero ideal");
    let mut stream = HULL_SEED.stream(attempt as u64);
    let mut combos = Vec::with_capacity(codim);
    for k in 0..codim {
        let target = if attempt < 4 { degs[k.min(degs.len() - 1)] } else { max_deg };
        let mut f = Poly::zero(n);
        for (g, &d) in gens.iter().zip(&degs) {
            if d > target {
                continue;
            }
            let a = stream.scalar(99);
            let mult = stream.linear_form(n, 9).pow(target - d);
            f = &f + &(&mult * *g).scale(&a);
        }
        combos.push(f);
    }
    Ideal::new(n, combos).expect("same ring")
}

/// Top-dimensional part of a homogeneous ideal, computed as `L : (L : I)`
/// for a complete intersection `L ⊆ I` of the same codimension. Complete
/// intersections and ideals with a Cohen–Macaulay certificate are returned
/// unchanged.
pub fn equidim_hull(i: &Ideal) -> Result<Ideal> {
    if !i.is_homogeneous() {
        return hilbert(i).map(|_| unreachable!());
    }
    let canon = i.canonical();
    if canon.is_unit() {
        return Err(Error::InvalidArgument("hull of the unit ideal".into()));
    }
    if canon.is_zero() {
        return Ok(canon);
    }
    let h = summary_from_monomials(&canon.gb().leading_monomials(), canon.nvars());
    if h.is_empty() {
        return Ok(Ideal::unit(i.nvars()));
    }
    let n = i.nvars();
    let dim = h.dim as usize;
    let codim = n - 1 - dim;
    if i.gens().len() == codim || canon.gens().len() == codim || cm_certificate(&canon, dim) {
        return Ok(canon);
    }
    for attempt in 0..HULL_ATTEMPTS {
        let l = generic_subideal(&canon, codim, attempt);
        if hilbert(&l)?.dim != h.dim {
            continue;
        }
        let link = quotient(&l, &canon)?;
        let hull = quotient(&l, &link)?.canonical();
        if hull.contains_ideal(&canon) && hilbert(&hull)? == h {
            return Ok(hull);
        }
    }
    Err(Error::HullFailure(HULL_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PolyRing;

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(r.nvars(), gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Poly {
        r.parse(s).unwrap()
    }

    #[test]
    fn radical_membership() {
        let r = PolyRing::projective(1).unwrap();
        assert!(radical_contains(&ideal(&r, &["x0^2"]), &p(&r, "x0")).unwrap());
        assert!(!radical_contains(&ideal(&r, &["x0"]), &p(&r, "x1")).unwrap());
        assert!(radical_contains(&ideal(&r, &["x0^2", "x0*x1", "x1^2"]), &p(&r, "x0 + x1")).unwrap());
    }

    #[test]
    fn intersections() {
        let r = PolyRing::projective(1).unwrap();
        let i = ideal(&r, &["x0"]);
        let j = ideal(&r, &["x1"]);
        assert_eq!(intersect_ideals(&i, &j).unwrap(), ideal(&r, &["x0*x1"]));
        assert_eq!(intersect_ideals(&i, &Ideal::unit(2)).unwrap(), i);
        assert_eq!(intersect_ideals(&i, &i).unwrap(), i);
        let r2 = PolyRing::projective(2).unwrap();
        let a = ideal(&r2, &["x0^2 + x1*x2", "x1^3 - x2^2*x0"]);
        let b = ideal(&r2, &["x0 - x1 + 2*x2"]);
        let c = intersect_ideals(&a, &b).unwrap();
        assert!(a.contains_ideal(&c) && b.contains_ideal(&c));
        assert!(c.contains_ideal(&a.product(&b)));
    }

    #[test]
    fn quotients() {
        let r = PolyRing::projective(1).unwrap();
        let i = ideal(&r, &["x0^2*x1"]);
        assert_eq!(quotient(&i, &ideal(&r, &["x1"])).unwrap(), ideal(&r, &["x0^2"]));
        assert_eq!(quotient(&i, &Ideal::unit(2)).unwrap(), i);
        assert_eq!(quotient(&ideal(&r, &["x0*x1"]), &ideal(&r, &["x0"])).unwrap(), ideal(&r, &["x1"]));
    }

    #[test]
    fn linear_colon_matches_intersection_route() {
        let r = PolyRing::projective(3).unwrap();
        let i = ideal(&r, &["x0^2*x1 - x2^3", "x1*x3 - x2^2", "x0*x3^2"]);
        for h in ["x0", "x1 + 2*x3", "x0 - x1 + 3*x2 - x3"] {
            let h = p(&r, h);
            assert_eq!(quotient_by(&i, &h).unwrap(), quotient_by_intersection(&i, &h).unwrap());
            assert_eq!(saturate_by(&i, &h).unwrap(), saturate_by_elimination(&i, &h).unwrap());
        }
    }

    #[test]
    fn saturations() {
        let r = PolyRing::projective(1).unwrap();
        let i = ideal(&r, &["x0^2*x1"]);
        assert_eq!(saturate(&i, &ideal(&r, &["x0"])).unwrap(), ideal(&r, &["x1"]));
        let i = ideal(&r, &["x1"]);
        assert_eq!(saturate(&i, &ideal(&r, &["x0"])).unwrap(), i);
        let r2 = PolyRing::projective(2).unwrap();
        let i = ideal(&r2, &["x0^2", "x0*x1"]);
        assert_eq!(saturate(&i, &ideal(&r2, &["x0", "x1"])).unwrap(), ideal(&r2, &["x0"]));
        let s = saturate_by_elimination(&ideal(&r, &["x0^2*x1"]), &p(&r, "x0^2 + x1^2")).unwrap();
        assert_eq!(s, ideal(&r, &["x0^2*x1"]));
    }

    #[test]
    fn elimination() {
        let r = PolyRing::projective(2).unwrap();
        let i = ideal(&r, &["x0*x1 - 1", "x0*x2"]);
        assert_eq!(eliminate(&i, 1), ideal(&r, &["x2"]));
        assert_eq!(eliminate(&i, 0), i);
    }

    #[test]
    fn hilbert_examples() {
        let r = PolyRing::projective(2).unwrap();
        assert_eq!(hilbert(&Ideal::zero(3)).unwrap(), HilbertSummary { dim: 2, degree: 1 });
        assert_eq!(hilbert(&ideal(&r, &["x1^3 - x0*x2^2"])).unwrap(), HilbertSummary { dim: 1, degree: 3 });
        assert_eq!(hilbert(&Ideal::unit(3)).unwrap(), HilbertSummary::EMPTY);
        assert!(hilbert(&ideal(&r, &["x0 - 1"])).is_err());
    }

    #[test]
    fn closures() {
        let r = PolyRing::projective(2).unwrap();
        let i = ideal(&r, &["x1^3 - x2^2"]);
        assert_eq!(projective_closure(&i, 0).unwrap(), ideal(&r, &["x1^3 - x0*x2^2"]));
        assert_eq!(projective_closure(&Ideal::zero(3), 0).unwrap(), Ideal::zero(3));
        let r6 = PolyRing::projective(6).unwrap();
        let graph = ideal(&r6, &["x4 - x1*x3", "x5 - x2*x3", "x6 - x3^2"]);
        let z = projective_closure(&graph, 0).unwrap();
        assert_eq!(hilbert(&z).unwrap(), HilbertSummary { dim: 3, degree: 4 });
    }

    #[test]
    fn nonzerodivisors() {
        let r = PolyRing::projective(1).unwrap();
        let i = ideal(&r, &["x0*x1"]);
        assert!(is_nzd(&i, &p(&r, "x0 + x1")).unwrap());
        assert!(!is_nzd(&i, &p(&r, "x0")).unwrap());
        assert!(is_nzd(&Ideal::zero(2), &p(&r, "x0^2 + 3*x1")).unwrap());
        let r2 = PolyRing::projective(2).unwrap();
        let i = ideal(&r2, &["x0^2", "x0*x1"]);
        assert!(!is_nzd(&i, &p(&r2, "x1 + x2")).unwrap() || !is_nzd(&i, &p(&r2, "x0")).unwrap());
        assert!(!is_nzd(&i, &p(&r2, "x0^2 + x1*x2")).unwrap());
    }

    #[test]
    fn hulls() {
        let r = PolyRing::projective(2).unwrap();
        assert_eq!(equidim_hull(&ideal(&r, &["x0^2", "x0*x1"])).unwrap(), ideal(&r, &["x0"]));
        let prime = ideal(&r, &["x1^3 - x0*x2^2"]);
        assert_eq!(equidim_hull(&prime).unwrap(), prime);
        let r1 = PolyRing::projective(1).unwrap();
        assert_eq!(equidim_hull(&ideal(&r1, &["x0*x1"])).unwrap(), ideal(&r1, &["x0*x1"]));
        // twisted cubic with an embedded point at [0,0,0,1]
        let r3 = PolyRing::projective(3).unwrap();
        let cubic = ideal(&r3, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let m2 = ideal(&r3, &["x0", "x1", "x2"]).product(&ideal(&r3, &["x0", "x1", "x2"]));
        let mixed = intersect_ideals(&cubic, &m2).unwrap();
        assert_eq!(hilbert(&mixed).unwrap(), HilbertSummary { dim: 1, degree: 3 });
        assert_eq!(equidim_hull(&mixed).unwrap(), cubic);
        assert!(equidim_hull(&Ideal::unit(3)).is_err());
    }
}
