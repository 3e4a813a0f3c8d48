use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Monomial, Poly, ProjPoint, Scalar};
use crate::{Error, Result};

/// Substitution homomorphism: variable `i` of `f` is replaced by `images[i]`.
pub fn ring_map(f: &Poly, images: &[Poly]) -> Result<Poly> {
    if images.len() != f.nvars() {
        return Err(Error::Arity { expected: f.nvars(), got: images.len() });
    }
    let target = match images.first() {
        Some(g) => g.nvars(),
        None => return Ok(f.clone()),
    };
    if let Some(g) = images.iter().find(|g| g.nvars() != target) {
        return Err(Error::RingMismatch(target, g.nvars()));
    }
    // powers[i][e] = images[i]^e, built lazily
    let mut powers: Vec<Vec<Poly>> = images.iter().map(|g| alloc::vec![Poly::one(target), g.clone()]).collect();
    let mut acc: Vec<(Monomial, Scalar)> = Vec::new();
    for (m, c) in f.terms() {
        let mut term = Poly::constant(target, c.clone());
        for i in 0..f.nvars() {
            let e = m.exp(i) as usize;
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = &powers[i][powers[i].len() - 1] * &images[i];
                powers[i].push(next);
            }
            term = &term * &powers[i][e];
        }
        acc.extend(term.terms().iter().cloned());
    }
    Ok(Poly::from_terms(target, acc))
}

/// Invertible linear change of coordinates `p ↦ M·p` on ℙⁿ, with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Vec<Vec<Scalar>>,
    inverse: Vec<Vec<Scalar>>,
}

fn invert(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut inv: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

fn substitution(a: &[Vec<Scalar>]) -> Vec<Poly> {
    a.iter().map(|row| Poly::from_linear_coefficients(row)).collect()
}

impl LinearChange {
    pub fn from_matrix(matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("coordinate change must be square".into()));
        }
        let inverse = invert(&matrix).ok_or(Error::DependentForms)?;
        Ok(LinearChange { matrix, inverse })
    }

    pub fn identity(nvars: usize) -> Self {
        let id: Vec<Vec<Scalar>> = (0..nvars)
            .map(|i| (0..nvars).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        LinearChange { matrix: id.clone(), inverse: id }
    }

    /// A change after which the linear form `h` becomes the last variable,
    /// i.e. `pull(h) = x_N`.
    pub fn sending_to_last(h: &Poly) -> Result<Self> {
        let c = h.linear_coefficients()?;
        let n = c.len();
        // prefer a pivot already in last position so the change is sparse
        let k = (0..n).rev().find(|&i| !c[i].is_zero()).expect("linear forms are nonzero");
        let mut inv_rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for i in (0..n).filter(|&i| i != k) {
            let mut row = alloc::vec![Scalar::zero(); n];
            row[i] = Scalar::one();
            inv_rows.push(row);
        }
        inv_rows.push(c);
        let inverse = inv_rows;
        let matrix = invert(&inverse).ok_or(Error::DependentForms)?;
        Ok(LinearChange { matrix, inverse })
    }

    /// A change sending the point `p` to the vertex `[1,0,…,0]`.
    pub fn centering(p: &ProjPoint) -> Self {
        let n = p.coords().len();
        let j = p.chart();
        // columns of the inverse: e_0 ↦ p, e_j ↦ e_0 (when j ≠ 0), others fixed
        let mut inv = alloc::vec![alloc::vec![Scalar::zero(); n]; n];
        for (i, row) in inv.iter_mut().enumerate() {
            row[0] = p.coords()[i].clone();
        }
        for col in 1..n {
            let target = if col == j { 0 } else { col };
            inv[target][col] = Scalar::one();
        }
        let matrix = invert(&inv).expect("centering change is invertible");
        LinearChange { matrix, inverse: inv }
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange { matrix: self.inverse.clone(), inverse: self.matrix.clone() }
    }

    pub fn determinant(&self) -> Scalar {
        let n = self.matrix.len();
        let mut a = self.matrix.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let piv = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return Scalar::zero(),
            };
            if piv != col {
                a.swap(col, piv);
                det = -det;
            }
            det *= a[col][col].clone();
            for r in col + 1..n {
                if !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[col][col];
                    for j in col..n {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                    }
                }
            }
        }
        det
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        let coords = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(p.coords()).fold(Scalar::zero(), |acc, (a, x)| acc + a * x))
            .collect();
        ProjPoint::new(coords).expect("invertible map keeps points nonzero")
    }

    /// `g` with `V(g) = M·V(f)`, i.e. `g(x) = f(M⁻¹x)`.
    pub fn push(&self, f: &Poly) -> Poly {
        ring_map(f, &substitution(&self.inverse)).expect("square change matches ring")
    }

    /// `f(M·x)`, the inverse operation of [`push`](Self::push).
    pub fn pull(&self, f: &Poly) -> Poly {
        ring_map(f, &substitution(&self.matrix)).expect("square change matches ring")
    }
}
