use alloc::vec::Vec;

use super::join::LinearSystem;
use crate::cycles::{cut_with_divisor, split_by, Chunk, Cycle};
use crate::ideals::is_nzd;
use crate::kernel::{random_linear_combination, Poly, Seed};
use crate::{Error, Result};

/// Resamples allowed per step before giving up on a proper cut.
const CUT_ATTEMPTS: u64 = 10;

/// One Stückrad–Vogel run: the parts `v_k` landing in the center after `k`
/// generic cuts, and what is left outside when no further cut is possible.
#[derive(Clone, Debug)]
pub struct SvOutput {
    /// `inside[k]` holds the chunks of `v_k`.
    pub inside: Vec<Vec<Chunk>>,
    /// Zero-dimensional leftovers outside the center.
    pub residual: Vec<Chunk>,
    /// The sampled cuts `h_1, h_2, …`.
    pub cuts: Vec<Poly>,
    pub seed: Seed,
}

impl SvOutput {
    pub fn inside_degree(&self) -> u64 {
        self.inside.iter().flatten().map(Chunk::degree).sum()
    }

    pub fn residual_degree(&self) -> u64 {
        self.residual.iter().map(Chunk::degree).sum()
    }
}

fn draw_cut(sys: &LinearSystem, current: &[Chunk], seed: Seed, k: u64) -> Result<Poly> {
    for attempt in 0..CUT_ATTEMPTS {
        let h = random_linear_combination(sys.forms(), seed, k | (attempt << 32))?;
        let mut proper = true;
        for c in current {
            if !is_nzd(c.ideal(), &h)? {
                proper = false;
                break;
            }
        }
        if proper {
            return Ok(h);
        }
    }
    Err(Error::GenericityExhausted(CUT_ATTEMPTS as u32))
}

/// Runs the Stückrad–Vogel procedure on `c` with respect to `sys`.
pub fn sv(c: &Cycle, sys: &LinearSystem, seed: Seed) -> Result<SvOutput> {
    if c.ambient() + 1 != sys.nvars() {
        return Err(Error::AmbientMismatch(c.ambient(), sys.nvars().saturating_sub(1)));
    }
    let z = sys.center();
    let mut out = SvOutput { inside: alloc::vec![Vec::new()], residual: Vec::new(), cuts: Vec::new(), seed };
    let mut current = Vec::new();
    for ch in c.chunks() {
        let (inside, outside) = split_by(ch, z)?;
        out.inside[0].extend(inside);
        current.extend(outside);
    }
    let mut k = 1u64;
    while !current.is_empty() {
        let (points, rest): (Vec<Chunk>, Vec<Chunk>) = current.into_iter().partition(|c| c.dim() == 0);
        out.residual.extend(points);
        if rest.is_empty() {
            break;
        }
        if sys.forms().is_empty() {
            out.residual.extend(rest);
            break;
        }
        let h = draw_cut(sys, &rest, seed, k)?;
        let mut step = Vec::new();
        let mut next = Vec::new();
        for ch in &rest {
            let cut = cut_with_divisor(ch, &h)?;
            let (inside, outside) = split_by(&cut, z)?;
            step.extend(inside);
            next.extend(outside);
        }
        out.inside.push(step);
        out.cuts.push(h);
        current = next;
        k += 1;
    }
    Ok(out)
}

/// Degree bookkeeping of one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MassAudit {
    pub input_degree: u64,
    pub inside_degree: u64,
    pub deficit: u64,
}

/// Checks `Σ deg v_k + deficit = input degree` with a nonnegative deficit
/// that vanishes when the system has at most `dim` forms.
pub fn sv_mass_check(out: &SvOutput, input: &Cycle, forms: usize) -> Result<MassAudit> {
    let input_degree = input.degree();
    let inside_degree = out.inside_degree();
    let deficit = input_degree
        .checked_sub(inside_degree)
        .ok_or_else(|| Error::Audit(alloc::format!("inside degree {} exceeds input degree {}", inside_degree, input_degree)))?;
    if deficit != out.residual_degree() {
        return Err(Error::Audit(alloc::format!("deficit {} but residual degree {}", deficit, out.residual_degree())));
    }
    if let Some(d) = input.pure_dim() {
        if forms <= d && deficit != 0 {
            return Err(Error::Audit(alloc::format!("nonzero deficit {} with {} forms in dimension {}", deficit, forms, d)));
        }
    }
    Ok(MassAudit { input_degree, inside_degree, deficit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{make_hypersurface, make_point, multiplicity_at};
    use crate::kernel::{PolyRing, ProjPoint};

    fn maximal_ideal_system(p: &ProjPoint) -> LinearSystem {
        let c = make_point(p).unwrap();
        let n = p.coords().len();
        LinearSystem::new(n, c.chunks()[0].ideal().gens().to_vec()).unwrap()
    }

    #[test]
    fn point_off_center() {
        let p = make_point(&ProjPoint::from_integers(&[1, 1, 1]).unwrap()).unwrap();
        let sys = maximal_ideal_system(&ProjPoint::from_integers(&[1, 0, 0]).unwrap());
        let out = sv(&p, &sys, Seed::default()).unwrap();
        assert_eq!(out.inside_degree(), 0);
        assert_eq!(out.residual_degree(), 1);
        let audit = sv_mass_check(&out, &p, 2).unwrap();
        assert_eq!(audit.deficit, 1);
    }

    #[test]
    fn cusp_at_its_singular_point() {
        let r = PolyRing::projective(2).unwrap();
        let a = ProjPoint::from_integers(&[1, 0, 0]).unwrap();
        let cusp = make_hypersurface(&r.parse("x1^3 - x0*x2^2").unwrap(), 1).unwrap();
        let out = sv(&cusp, &maximal_ideal_system(&a), Seed(3)).unwrap();
        assert!(out.inside[0].is_empty());
        let v1: u64 = out.inside[1].iter().map(Chunk::degree).sum();
        assert_eq!(v1, multiplicity_at(&cusp, &a).unwrap());
        assert_eq!(v1, 2);
        let audit = sv_mass_check(&out, &cusp, 2).unwrap();
        assert_eq!(audit.inside_degree + audit.deficit, 3);
        assert_eq!(audit.deficit, 1);
    }

    #[test]
    fn deterministic_in_seed() {
        let r = PolyRing::projective(2).unwrap();
        let cusp = make_hypersurface(&r.parse("x1^3 - x0*x2^2").unwrap(), 1).unwrap();
        let sys = maximal_ideal_system(&ProjPoint::from_integers(&[1, 0, 0]).unwrap());
        let a = sv(&cusp, &sys, Seed(11)).unwrap();
        let b = sv(&cusp, &sys, Seed(11)).unwrap();
        assert_eq!(a.cuts, b.cuts);
        assert_eq!(a.inside, b.inside);
    }
}
