use alloc::vec::Vec;

use crate::cycles::ideal_multiplicity_at;
use crate::ideals::{hilbert, Ideal};
use crate::kernel::{Poly, ProjPoint, Seed, COEFF_BOUND};
use crate::{Error, Result};

const POLAR_ATTEMPTS: u64 = 10;

/// A plane curve met with a generic polar curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarOracle {
    /// `deg F · (deg F − 1)`.
    pub total: u64,
    /// Colength of the intersection at each candidate point.
    pub at_points: Vec<(ProjPoint, u64)>,
    /// Intersection mass away from the candidates.
    pub moving: u64,
    /// The polar actually used.
    pub polar: Poly,
}

/// Intersects `F = 0` with a random polar `Σ β_i ∂F/∂x_i` and splits the
/// intersection into the colengths at the candidate points and the rest.
pub fn polar_self_intersection_oracle(f: &Poly, candidates: &[ProjPoint], seed: Seed) -> Result<PolarOracle> {
    if f.nvars() != 3 {
        return Err(Error::InvalidArgument("polar oracle expects a plane curve".into()));
    }
    if !f.is_homogeneous() || f.is_constant() {
        return Err(Error::NotHomogeneous(alloc::format!("{}", f)));
    }
    for p in candidates {
        if p.ambient_dim() != 2 {
            return Err(Error::AmbientMismatch(2, p.ambient_dim()));
        }
    }
    let d = f.degree().expect("nonconstant") as u64;
    let partials: Vec<Poly> = (0..3).map(|i| f.derivative(i)).collect();
    for attempt in 0..POLAR_ATTEMPTS {
        let polar = seed.stream(attempt).combination(&partials, COEFF_BOUND);
        if polar.is_zero() {
            continue;
        }
        let ideal = Ideal::new(3, alloc::vec![f.clone(), polar.clone()])?;
        let h = hilbert(&ideal)?;
        if h.dim != 0 {
            continue;
        }
        if h.degree != d * (d - 1) {
            return Err(Error::Audit(alloc::format!("polar intersection has degree {}", h.degree)));
        }
        let at_points = candidates
            .iter()
            .map(|p| Ok((p.clone(), ideal_multiplicity_at(&ideal, 0, p)?)))
            .collect::<Result<Vec<_>>>()?;
        let fixed: u64 = at_points.iter().map(|(_, m)| m).sum();
        let moving = h.degree.checked_sub(fixed).ok_or_else(|| Error::Audit("candidate mass exceeds total".into()))?;
        return Ok(PolarOracle { total: h.degree, at_points, moving, polar });
    }
    Err(Error::GenericityExhausted(POLAR_ATTEMPTS as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PolyRing;

    #[test]
    fn cusp_and_conic() {
        let r = PolyRing::projective(2).unwrap();
        let a = ProjPoint::from_integers(&[1, 0, 0]).unwrap();
        let cusp = polar_self_intersection_oracle(&r.parse("x1^3 - x0*x2^2").unwrap(), &[a.clone()], Seed::default()).unwrap();
        assert_eq!((cusp.total, cusp.at_points[0].1, cusp.moving), (6, 3, 3));
        let conic = polar_self_intersection_oracle(&r.parse("x0*x2 - x1^2").unwrap(), &[], Seed::default()).unwrap();
        assert_eq!((conic.total, conic.moving), (2, 2));
        let node = polar_self_intersection_oracle(&r.parse("x1^2*x2 - x0^3 - x0^2*x2").unwrap(), &[ProjPoint::from_integers(&[0, 0, 1]).unwrap()], Seed(5)).unwrap();
        assert_eq!((node.total, node.at_points[0].1, node.moving), (6, 2, 4));
    }
}
