use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::chunk::{point_on_support, Cycle};
use crate::ideals::{hilbert_function, GroebnerBasis, Ideal};
use crate::kernel::{LinearChange, MonomialOrder, Poly, ProjPoint};
use crate::{Error, Result};

/// Largest `s` at which the colength sequence is sampled.
pub const MAX_SAMPLES: u32 = 40;

/// Number of consecutive equal differences accepted as stable.
const WINDOW: usize = 3;

/// Tangent cone at `[1,0,…,0]` of a homogeneous ideal, as an ideal in the
/// remaining variables `x_1..x_n` (renumbered from zero).
fn tangent_cone(ideal: &Ideal) -> Ideal {
    let n = ideal.nvars();
    // deglex with x0 first picks the terms of highest x0-power, i.e. the
    // lowest-degree part in the chart x0 = 1
    let gb = GroebnerBasis::compute(ideal, MonomialOrder::Deglex);
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(1)).collect();
    let gens = gb
        .polys()
        .iter()
        .map(|g| {
            let top = g.terms().iter().map(|(m, _)| m.exp(0)).max().unwrap_or(0);
            let terms = g.terms().iter().filter(|(m, _)| m.exp(0) == top).map(|(m, c)| {
                let mut m = *m;
                m.set_exp(0, 0);
                (m.remap(&map), c.clone())
            });
            Poly::from_terms(n - 1, terms)
        })
        .collect();
    Ideal::new(n - 1, gens).expect("same ring")
}

/// Colengths `H(s) = dim R/(I + m^s)` of the local ring at the origin of
/// the chart `x0 = 1`, for `s = 1..=MAX_SAMPLES`.
fn colengths_at_vertex(ideal: &Ideal) -> Vec<BigInt> {
    let cone = tangent_cone(ideal);
    let hf = hilbert_function(&cone.gb().leading_monomials(), cone.nvars(), MAX_SAMPLES as usize);
    let mut acc = BigInt::from(0);
    hf.into_iter()
        .take(MAX_SAMPLES as usize)
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect()
}

/// Hilbert–Samuel multiplicity at `x` of the scheme of an unmixed ideal of
/// dimension `dim`, as the stabilized `dim`-th difference of colengths.
pub fn ideal_multiplicity_at(ideal: &Ideal, dim: usize, x: &ProjPoint) -> Result<u64> {
    if x.coords().len() != ideal.nvars() {
        return Err(Error::AmbientMismatch(ideal.nvars() - 1, x.ambient_dim()));
    }
    if !point_on_support(ideal, x)? {
        return Ok(0);
    }
    let change = LinearChange::centering(x);
    let moved = ideal.map_gens(ideal.nvars(), |g| change.push(g));
    let mut seq = colengths_at_vertex(&moved);
    for _ in 0..dim {
        seq = seq.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    seq.windows(WINDOW)
        .find(|w| w.iter().all(|v| *v == w[0]))
        .map(|w| w[0].to_u64().expect("multiplicity fits in u64"))
        .ok_or(Error::NoStabilization(MAX_SAMPLES))
}

/// `Σ coefficient × e(local ring at x)` over all chunks.
pub fn multiplicity_at(c: &Cycle, x: &ProjPoint) -> Result<u64> {
    if x.ambient_dim() != c.ambient() {
        return Err(Error::AmbientMismatch(c.ambient(), x.ambient_dim()));
    }
    let mut total = 0;
    for ch in c.chunks() {
        total += ch.coefficient() * ideal_multiplicity_at(ch.ideal(), ch.dim(), x)?;
    }
    Ok(total)
}

/// Lowest total degree of `f` in the affine chart centered at `x`.
pub fn order_of_vanishing(f: &Poly, x: &ProjPoint) -> u32 {
    let change = LinearChange::centering(x);
    let moved = change.push(f);
    moved.dehomogenize(0).min_degree().unwrap_or(u32::MAX)
}
