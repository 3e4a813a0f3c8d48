use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient. `BigRational` keeps itself reduced with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn scalar_from_ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
