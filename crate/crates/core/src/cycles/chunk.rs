use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::ideals::{equidim_hull, hilbert, is_nzd, quotient, radical_contains, saturate, Ideal};
use crate::kernel::{Poly, ProjPoint};
use crate::{Error, Result};

/// `coefficient × [V(ideal)]`, the top-dimensional cycle of an unmixed ideal
/// counted with scheme multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chunk {
    ideal: Ideal,
    coefficient: u64,
    dim: usize,
    degree: u64,
}

impl Chunk {
    /// Builds a chunk from a homogeneous ideal, replacing it by its
    /// equidimensional hull. Returns `None` for the empty scheme.
    pub fn from_ideal(ideal: &Ideal, coefficient: u64) -> Result<Option<Chunk>> {
        if coefficient == 0 {
            return Err(Error::NonPositiveCoefficient(0));
        }
        let h = hilbert(ideal)?;
        if h.is_empty() {
            return Ok(None);
        }
        let hull = equidim_hull(ideal)?;
        let hh = hilbert(&hull)?;
        if hh != h {
            return Err(Error::Audit(alloc::format!("hull changed Hilbert data {:?} to {:?}", h, hh)));
        }
        Ok(Some(Chunk::from_unmixed(hull, coefficient, h.dim as usize, h.degree)))
    }

    /// Trusted constructor for an ideal already known to be unmixed.
    pub(crate) fn from_unmixed(ideal: Ideal, coefficient: u64, dim: usize, scheme_degree: u64) -> Chunk {
        Chunk { ideal, coefficient, dim, degree: coefficient * scheme_degree }
    }

    /// Like [`from_unmixed`](Self::from_unmixed) with Hilbert data recomputed.
    pub(crate) fn from_unmixed_ideal(ideal: Ideal, coefficient: u64) -> Result<Option<Chunk>> {
        let h = hilbert(&ideal)?;
        if h.is_empty() {
            return Ok(None);
        }
        Ok(Some(Chunk::from_unmixed(ideal, coefficient, h.dim as usize, h.degree)))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Cycle degree, `coefficient × hilbert degree`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn scheme_degree(&self) -> u64 {
        self.degree / self.coefficient
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn with_coefficient(&self, coefficient: u64) -> Chunk {
        Chunk::from_unmixed(self.ideal.clone(), coefficient, self.dim, self.scheme_degree())
    }
}

/// A cycle on ℙⁿ: a formal sum of chunks, possibly of different dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    ambient: usize,
    chunks: Vec<Chunk>,
    label: String,
}

impl Cycle {
    pub fn new(ambient: usize, chunks: Vec<Chunk>) -> Result<Cycle> {
        for c in &chunks {
            if c.nvars() != ambient + 1 {
                return Err(Error::AmbientMismatch(ambient, c.nvars().saturating_sub(1)));
            }
        }
        Ok(Cycle { ambient, chunks, label: String::new() })
    }

    pub fn zero(ambient: usize) -> Cycle {
        Cycle { ambient, chunks: Vec::new(), label: String::new() }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Cycle {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn chunks(&self) -> &[Chunk] {
        &self.chunks
    }

    pub fn is_zero(&self) -> bool {
        self.chunks.is_empty()
    }

    pub fn push(&mut self, chunk: Chunk) {
        assert_eq!(chunk.nvars(), self.ambient + 1, "ambient mismatch");
        self.chunks.push(chunk);
    }

    /// The common dimension of all chunks, if there is one.
    pub fn pure_dim(&self) -> Option<usize> {
        let d = self.chunks.first()?.dim;
        self.chunks.iter().all(|c| c.dim == d).then_some(d)
    }

    /// The part of dimension `dim`.
    pub fn part(&self, dim: usize) -> Cycle {
        Cycle {
            ambient: self.ambient,
            chunks: self.chunks.iter().filter(|c| c.dim == dim).cloned().collect(),
            label: self.label.clone(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.chunks.iter().map(|c| c.dim).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn degree(&self) -> u64 {
        self.chunks.iter().map(|c| c.degree).sum()
    }

    /// Product of the ideals of all chunks, whose zero set is the support.
    pub fn support_ideal(&self) -> Ideal {
        let mut acc = Ideal::unit(self.ambient + 1);
        for c in &self.chunks {
            acc = acc.product(c.ideal());
        }
        acc
    }
}

/// Per-dimension degrees of a cycle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeTable {
    pub by_dim: BTreeMap<usize, u64>,
    pub total: u64,
}

pub fn cycle_degree(c: &Cycle) -> DegreeTable {
    let mut t = DegreeTable::default();
    for ch in c.chunks() {
        *t.by_dim.entry(ch.dim).or_insert(0) += ch.degree;
        t.total += ch.degree;
    }
    t
}

fn single(ambient: usize, chunk: Chunk) -> Cycle {
    Cycle { ambient, chunks: alloc::vec![chunk], label: String::new() }
}

pub fn make_hypersurface(f: &Poly, coefficient: u64) -> Result<Cycle> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(alloc::format!("{}", f)));
    }
    if f.is_constant() {
        return Err(Error::InvalidArgument("hypersurface of a constant".into()));
    }
    if coefficient == 0 {
        return Err(Error::NonPositiveCoefficient(0));
    }
    let n = f.nvars() - 1;
    let ideal = Ideal::new(f.nvars(), alloc::vec![f.clone()])?.canonical();
    let d = f.degree().expect("nonzero") as u64;
    Ok(single(n, Chunk::from_unmixed(ideal, coefficient, n - 1, d)))
}

/// The linear subspace cut out by independent linear forms.
pub fn make_linear_space(nvars: usize, forms: &[Poly]) -> Result<Cycle> {
    for f in forms {
        if f.nvars() != nvars {
            return Err(Error::RingMismatch(nvars, f.nvars()));
        }
        if !f.is_linear_form() {
            return Err(Error::NotLinear(alloc::format!("{}", f)));
        }
    }
    let ideal = Ideal::new(nvars, forms.to_vec())?.canonical();
    if ideal.gens().len() != forms.len() || forms.len() >= nvars {
        return Err(Error::DependentForms);
    }
    let n = nvars - 1;
    Ok(single(n, Chunk::from_unmixed(ideal, 1, n - forms.len(), 1)))
}

pub fn make_point(p: &ProjPoint) -> Result<Cycle> {
    let nvars = p.coords().len();
    let c = p.chart();
    let forms: Vec<Poly> = (0..nvars)
        .filter(|&i| i != c)
        .map(|i| {
            // x_i − p_i·x_c, using p_c = 1
            &Poly::var(nvars, i) - &Poly::var(nvars, c).scale(&p.coords()[i])
        })
        .collect();
    make_linear_space(nvars, &forms)
}

pub fn make_full_space(n: usize) -> Cycle {
    single(n, Chunk::from_unmixed(Ideal::zero(n + 1), 1, n, 1))
}

/// `V(I) ⊆ V(J)`, decided by radical membership of the generators of `J`.
pub fn support_contained(i: &Ideal, j: &Ideal) -> Result<bool> {
    for g in j.gens() {
        if !radical_contains(i, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn supports_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    Ok(support_contained(i, j)? && support_contained(j, i)?)
}

pub fn point_on_support(i: &Ideal, p: &ProjPoint) -> Result<bool> {
    for g in i.gens() {
        if !g.evaluate(p.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits a chunk into its parts inside and outside `V(Z)`.
pub fn split_by(c: &Chunk, z: &Ideal) -> Result<(Option<Chunk>, Option<Chunk>)> {
    let outside_ideal = saturate(c.ideal(), z)?;
    let outside = Chunk::from_unmixed_ideal(outside_ideal.canonical(), c.coefficient)?;
    let inside = match &outside {
        None => Some(c.clone()),
        Some(o) if o.degree == c.degree => None,
        Some(o) => {
            let q = quotient(c.ideal(), o.ideal())?;
            Chunk::from_ideal(&q, c.coefficient)?
        }
    };
    let total = inside.as_ref().map_or(0, |x| x.degree) + outside.as_ref().map_or(0, |x| x.degree);
    if total != c.degree {
        return Err(Error::Audit(alloc::format!("split degrees {} do not add up to {}", total, c.degree)));
    }
    if let Some(i) = &inside {
        if i.dim != c.dim {
            return Err(Error::Audit("inside part lost dimension".into()));
        }
    }
    Ok((inside, outside))
}

/// Coefficient of the irreducible variety `V(prime)` in the cycle, read off
/// by splitting every chunk of the same dimension against it.
pub fn coefficient_along(c: &Cycle, prime: &Ideal) -> Result<u64> {
    let target = Chunk::from_ideal(prime, 1)?.ok_or_else(|| Error::InvalidArgument("empty variety".into()))?;
    let mut total = 0;
    for ch in c.chunks().iter().filter(|ch| ch.dim() == target.dim()) {
        if let (Some(inside), _) = split_by(ch, prime)? {
            if inside.degree() % target.degree() != 0 {
                return Err(Error::Audit("inside degree is not a multiple of the variety degree".into()));
            }
            total += inside.degree() / target.degree();
        }
    }
    Ok(total)
}

/// Proper intersection with the hyperplane `h = 0`.
pub fn cut_with_divisor(c: &Chunk, h: &Poly) -> Result<Chunk> {
    if !h.is_linear_form() {
        return Err(Error::NotLinear(alloc::format!("{}", h)));
    }
    if c.dim == 0 || !is_nzd(c.ideal(), h)? {
        return Err(Error::ImproperCut);
    }
    let cut = c.ideal().with_generator(h.clone());
    let out = Chunk::from_ideal(&cut, c.coefficient)?.ok_or(Error::ImproperCut)?;
    if out.dim + 1 != c.dim || out.degree != c.degree {
        return Err(Error::Audit(alloc::format!(
            "cut of a dim {} degree {} chunk gave dim {} degree {}",
            c.dim, c.degree, out.dim, out.degree
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PolyRing;

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(r.nvars(), gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn builders() {
        let r = PolyRing::projective(2).unwrap();
        let cusp = make_hypersurface(&r.parse("x1^3 - x0*x2^2").unwrap(), 1).unwrap();
        assert_eq!((cusp.chunks()[0].dim(), cusp.chunks()[0].degree()), (1, 3));
        let p = make_point(&ProjPoint::from_integers(&[1, 0, 0]).unwrap()).unwrap();
        assert_eq!(p.chunks()[0].ideal(), &ideal(&r, &["x1", "x2"]));
        assert_eq!((p.chunks()[0].dim(), p.chunks()[0].degree()), (0, 1));
        let full = make_full_space(2);
        assert_eq!((full.chunks()[0].dim(), full.chunks()[0].degree()), (2, 1));
        assert!(full.chunks()[0].ideal().is_zero());
        let forms = [r.parse("x0 + x1").unwrap(), r.parse("2*x0 + 2*x1").unwrap()];
        assert_eq!(make_linear_space(3, &forms), Err(Error::DependentForms));
        assert_eq!(make_hypersurface(&r.zero(), 1), Err(Error::ZeroPolynomial));
        let q = make_point(&ProjPoint::from_integers(&[0, 2, -3]).unwrap()).unwrap();
        assert!(point_on_support(q.chunks()[0].ideal(), &ProjPoint::from_integers(&[0, 4, -6]).unwrap()).unwrap());
    }

    #[test]
    fn degrees() {
        let r = PolyRing::projective(2).unwrap();
        let cusp = make_hypersurface(&r.parse("x1^3 - x0*x2^2").unwrap(), 1).unwrap();
        let t = cycle_degree(&cusp);
        assert_eq!(t.by_dim.into_iter().collect::<Vec<_>>(), [(1, 3)]);
        assert_eq!(t.total, 3);
        assert_eq!(cycle_degree(&make_full_space(2)).by_dim.get(&2), Some(&1));
        assert_eq!(cycle_degree(&Cycle::zero(2)).total, 0);
    }

    #[test]
    fn supports() {
        let r = PolyRing::projective(2).unwrap();
        assert!(supports_equal(&ideal(&r, &["x0^2"]), &ideal(&r, &["x0"])).unwrap());
        assert!(support_contained(&ideal(&r, &["x0", "x1"]), &ideal(&r, &["x0"])).unwrap());
        assert!(!support_contained(&ideal(&r, &["x0"]), &ideal(&r, &["x0", "x1"])).unwrap());
        let cusp = ideal(&r, &["x1^3 - x0*x2^2"]);
        assert!(point_on_support(&cusp, &ProjPoint::from_integers(&[0, 0, 1]).unwrap()).unwrap());
        assert!(!point_on_support(&cusp, &ProjPoint::from_integers(&[1, 1, 0]).unwrap()).unwrap());
    }

    #[test]
    fn splitting() {
        let r = PolyRing::projective(2).unwrap();
        let c = Chunk::from_ideal(&ideal(&r, &["x0*x1"]), 1).unwrap().unwrap();
        let (inside, outside) = split_by(&c, &ideal(&r, &["x0"])).unwrap();
        assert_eq!(inside.unwrap().ideal(), &ideal(&r, &["x0"]));
        assert_eq!(outside.unwrap().ideal(), &ideal(&r, &["x1"]));
        let (inside, outside) = split_by(&c, &ideal(&r, &["x0^2*x1", "x0*x1^2"])).unwrap();
        assert_eq!(inside.unwrap(), c);
        assert!(outside.is_none());
        let (inside, outside) = split_by(&c, &ideal(&r, &["x0 - x2", "x1 - x2"])).unwrap();
        assert!(inside.is_none());
        assert_eq!(outside.unwrap(), c);
        // a double line and a simple line
        let c = Chunk::from_ideal(&ideal(&r, &["x0^2*x1"]), 3).unwrap().unwrap();
        let (inside, outside) = split_by(&c, &ideal(&r, &["x0"])).unwrap();
        let inside = inside.unwrap();
        assert_eq!((inside.degree(), inside.coefficient()), (6, 3));
        assert_eq!(outside.unwrap().degree(), 3);
    }

    #[test]
    fn cuts() {
        let r = PolyRing::projective(2).unwrap();
        let conic = Chunk::from_ideal(&ideal(&r, &["x0*x2 - x1^2"]), 1).unwrap().unwrap();
        let pts = cut_with_divisor(&conic, &r.parse("3*x0 - 7*x1 + 5*x2").unwrap()).unwrap();
        assert_eq!((pts.dim(), pts.degree()), (0, 2));
        let double = Chunk::from_ideal(&ideal(&r, &["x0^2"]), 1).unwrap().unwrap();
        let fat = cut_with_divisor(&double, &r.parse("x1").unwrap()).unwrap();
        assert_eq!((fat.dim(), fat.degree()), (0, 2));
        assert_eq!(fat.ideal(), &ideal(&r, &["x0^2", "x1"]));
        assert_eq!(cut_with_divisor(&double, &r.parse("x0").unwrap()), Err(Error::ImproperCut));
    }
}
