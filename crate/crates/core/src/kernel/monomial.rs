use core::fmt;

/// Largest number of variables any ring in this crate may carry.
pub const MAX_VARS: usize = 24;

/// Exponent vector with cached total degree.
///
/// Positions past the ring's variable count are always zero, so comparisons
/// never need to know the ring size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { deg: 0, exps: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Highest index carrying a nonzero exponent, plus one.
    pub fn span(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        let old = self.exps[i] as u32;
        self.exps[i] = u8::try_from(e).expect("exponent overflow");
        self.deg = self.deg - old + e;
    }

    /// Degree in the variables with index in `range`.
    pub fn partial_degree(&self, range: core::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            deg += exps[i] as u32;
        }
        Monomial { deg, exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            deg += exps[i] as u32;
        }
        Monomial { deg, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Moves exponents according to `map`: variable `i` becomes `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::one();
        for (i, &j) in map.iter().enumerate() {
            if self.exps[i] != 0 {
                m.exps[j] = m.exps[j].checked_add(self.exps[i]).expect("exponent overflow");
            }
        }
        m.deg = self.deg;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..self.span()])
    }
}
