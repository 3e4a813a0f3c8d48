use core::cmp::Ordering;

use super::Monomial;
use super::MAX_VARS;

/// Monomial orders used by the Gröbner engine. All of them are total orders
/// refining divisibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `x0 > x1 > … > xN`.
    Grevlex,
    /// Pure lexicographic, `x0 > x1 > … > xN`.
    Lex,
    /// Graded lexicographic; used for tangent cones with the chart variable first.
    Deglex,
    /// Block order eliminating the first `k` variables, grevlex within each block.
    Elimination(usize),
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let da: u32 = ea[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = eb[lo..hi].iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        if ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    let (ea, eb) = (a.exponents(), b.exponents());
                    for i in (0..MAX_VARS).rev() {
                        if ea[i] != eb[i] {
                            return eb[i].cmp(&ea[i]);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Deglex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => a.exponents().cmp(b.exponents()),
                o => o,
            },
            MonomialOrder::Elimination(k) => match grevlex_range(a, b, 0, k) {
                Ordering::Equal => grevlex_range(a, b, k, MAX_VARS),
                o => o,
            },
        }
    }

    /// Whether the order compares total degree first.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::Deglex | MonomialOrder::Elimination(0))
    }
}
