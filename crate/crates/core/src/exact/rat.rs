//! Exact rational scalars.
//!
//! Every computation in this crate runs over arbitrary-precision rationals;
//! there is no floating point anywhere. Values are always stored in lowest
//! terms with a positive denominator, and serialize as `p/q` (or `p` when the
//! denominator is 1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The scalar type used throughout the crate.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational, reduced.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p/q` or `p`. Rejects anything else, including float literals.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    let check_int = |part: &str| -> Result<BigInt, String> {
        let body = part.strip_prefix('-').unwrap_or(part);
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid rational literal `{s}`"));
        }
        body.parse::<BigInt>()
            .map(|n| if part.starts_with('-') { -n } else { n })
            .map_err(|e| e.to_string())
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(check_int(s)?)),
        Some((n, d)) => {
            let num = check_int(n)?;
            let den = check_int(d)?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Render as `p/q`, or `p` for integers.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Clear denominators of a rational vector and divide by the content,
/// returning the primitive integer vector with the same direction.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for x in &mut ints {
            *x /= &gcd;
        }
    }
    ints
}
