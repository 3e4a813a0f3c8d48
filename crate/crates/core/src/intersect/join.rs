use alloc::vec::Vec;

use crate::cycles::{support_contained, Chunk, Cycle};
use crate::ideals::{hilbert, quotient_by, Ideal};
use crate::kernel::{ring_map, Poly};
use crate::{Error, Result};

/// Linear forms `η_1..η_m` and their center `Z = (η)`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    forms: Vec<Poly>,
    center: Ideal,
}

impl LinearSystem {
    pub fn new(nvars: usize, forms: Vec<Poly>) -> Result<Self> {
        for f in &forms {
            if f.nvars() != nvars {
                return Err(Error::RingMismatch(nvars, f.nvars()));
            }
            if !f.is_linear_form() {
                return Err(Error::NotLinear(alloc::format!("{}", f)));
            }
        }
        let center = Ideal::new(nvars, forms.clone())?;
        Ok(LinearSystem { forms, center })
    }

    pub fn forms(&self) -> &[Poly] {
        &self.forms
    }

    pub fn center(&self) -> &Ideal {
        &self.center
    }

    pub fn nvars(&self) -> usize {
        self.center.nvars()
    }
}

fn block_var(n: usize, block: usize, i: usize) -> usize {
    block * (n + 1) + i
}

/// The forms `x_k^{j+1} − x_k^j` cutting out the diagonal of the join of
/// `r` copies of ℙⁿ.
pub fn diagonal_system(r: usize, n: usize) -> Result<LinearSystem> {
    if r < 2 {
        return Err(Error::InvalidArgument("the diagonal needs at least two factors".into()));
    }
    let nvars = r * (n + 1);
    if nvars > crate::kernel::MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let mut forms = Vec::with_capacity((r - 1) * (n + 1));
    for j in 0..r - 1 {
        for k in 0..=n {
            forms.push(&Poly::var(nvars, block_var(n, j + 1, k)) - &Poly::var(nvars, block_var(n, j, k)));
        }
    }
    LinearSystem::new(nvars, forms)
}

/// Ruled join in `ℙ^{r(n+1)−1}`: one chunk per choice of a chunk from each factor.
pub fn ruled_join(cycles: &[Cycle]) -> Result<Cycle> {
    let first = cycles.first().ok_or_else(|| Error::InvalidArgument("join of no cycles".into()))?;
    let n = first.ambient();
    for c in cycles {
        if c.ambient() != n {
            return Err(Error::AmbientMismatch(n, c.ambient()));
        }
    }
    let r = cycles.len();
    let nvars = r * (n + 1);
    if nvars > crate::kernel::MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let mut out = Cycle::zero(nvars - 1);
    let mut choice = alloc::vec![0usize; r];
    if cycles.iter().any(|c| c.is_zero()) {
        return Ok(out);
    }
    loop {
        let mut gens = Vec::new();
        let (mut dim, mut degree, mut coeff) = (r - 1, 1u64, 1u64);
        for (j, c) in cycles.iter().enumerate() {
            let ch = &c.chunks()[choice[j]];
            let map: Vec<usize> = (0..=n).map(|i| block_var(n, j, i)).collect();
            gens.extend(ch.ideal().gens().iter().map(|g| g.remap(nvars, &map)));
            dim += ch.dim();
            degree *= ch.scheme_degree();
            coeff *= ch.coefficient();
        }
        let ideal = Ideal::new(nvars, gens)?.canonical();
        out.push(Chunk::from_unmixed(ideal, coeff, dim, degree));
        // next choice
        let mut j = 0;
        loop {
            if j == r {
                return Ok(out);
            }
            choice[j] += 1;
            if choice[j] < cycles[j].chunks().len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// Products `η^α` of the system forms for all exponent vectors of total degree `d`.
fn eta_monomials(m: usize, d: u32) -> Vec<Vec<usize>> {
    // multisets of indices, nondecreasing
    fn rec(m: usize, start: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, 0, d, &mut Vec::new(), &mut out);
    out
}

fn product(forms: &[Poly], idx: &[usize], nvars: usize) -> Poly {
    idx.iter().fold(Poly::one(nvars), |acc, &i| &acc * &forms[i])
}

/// Moves a chunk supported on the join diagonal back to ℙⁿ.
///
/// The quotient ring is filtered by the ideals `Q + (η^β : β ≻ α)`; every
/// graded piece is a module over the diagonal, so its cycle is read off
/// after substituting `x_i^j ↦ x_i`. Pieces of the chunk's dimension add up
/// to the pulled-back cycle, including multiplicity transversal to the
/// diagonal.
pub fn diagonal_pullback(c: &Chunk, r: usize, n: usize) -> Result<Vec<Chunk>> {
    let sys = diagonal_system(r, n)?;
    let nvars = sys.nvars();
    if c.nvars() != nvars {
        return Err(Error::RingMismatch(nvars, c.nvars()));
    }
    if !support_contained(c.ideal(), sys.center())? {
        return Err(Error::NotInDiagonal);
    }
    let images: Vec<Poly> = (0..nvars).map(|v| Poly::var(n + 1, v % (n + 1))).collect();
    let pull = |i: &Ideal| -> Ideal { i.map_gens(n + 1, |g| ring_map(g, &images).expect("arity matches")) };
    let forms = sys.forms();
    let m = forms.len();

    let mut pieces: Vec<Chunk> = Vec::new();
    let mut add = |piece: Chunk| {
        if let Some(p) = pieces.iter_mut().find(|p| p.ideal() == piece.ideal()) {
            *p = p.with_coefficient(p.coefficient() + piece.coefficient());
        } else {
            pieces.push(piece);
        }
    };

    let q = c.ideal().clone();
    if sys.forms().iter().all(|f| q.contains(f)) {
        let image = pull(&q);
        let chunk = Chunk::from_ideal(&image, c.coefficient())?.ok_or(Error::NotInDiagonal)?;
        add(chunk);
    } else {
        let mut top = 1u32;
        while !eta_monomials(m, top).iter().all(|a| q.contains(&product(forms, a, nvars))) {
            top += 1;
        }
        let mut acc = q.sum(&Ideal::new(nvars, eta_monomials(m, top).iter().map(|a| product(forms, a, nvars)).collect())?);
        for d in (0..top).rev() {
            for alpha in eta_monomials(m, d) {
                let mono = product(forms, &alpha, nvars);
                if acc.contains(&mono) {
                    continue;
                }
                let mut j = acc.clone();
                for &i in &alpha {
                    j = quotient_by(&j, &forms[i])?;
                }
                let image = pull(&j);
                if hilbert(&image)?.dim == c.dim() as i64 {
                    if let Some(chunk) = Chunk::from_ideal(&image, c.coefficient())? {
                        add(chunk);
                    }
                }
                acc = acc.with_generator(mono).canonical();
            }
        }
    }
    let total: u64 = pieces.iter().map(Chunk::degree).sum();
    if total != c.degree() || pieces.iter().any(|p| p.dim() != c.dim()) {
        return Err(Error::Audit(alloc::format!("pullback degree {} differs from {}", total, c.degree())));
    }
    Ok(pieces)
}
