//! Rational Catalan numbers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Cat(m, d) = binom(d+m, d) / (d+m)` for coprime `m, d`.
pub fn count_formula(m: u64, d: u64) -> Result<BigUint> {
    if m == 0 || d == 0 {
        return Err(Error::invalid(format!("type ({m},{d}) must be positive")));
    }
    let gcd = m.gcd(&d);
    if gcd != 1 {
        return Err(Error::NotCoprime { m, d, gcd });
    }
    let total = BigUint::from(m + d);
    let (q, r) = binomial(m + d, d).div_rem(&total);
    if !r.is_zero() {
        return Err(Error::internal(format!("binom({}, {d}) not divisible by {}", m + d, m + d)));
    }
    Ok(q)
}

/// `[Cat(a, b), Cat(2a, 2b), ..., Cat(Na, Nb)]` for coprime `a, b`, read off
/// the exponential generating identity
/// `sum_n Cat(na, nb) x^n = exp(sum_j binom(j(a+b), jb) / (a+b) * x^j / j)`.
///
/// Exponentiation uses `n g_n = sum_{k=1}^n k f_k g_{n-k}` over exact
/// rationals. A non-integral coefficient is reported as an internal error.
pub fn count_bizley(a: u64, b: u64, terms: usize) -> Result<Vec<BigUint>> {
    if a == 0 || b == 0 {
        return Err(Error::invalid(format!("type ({a},{b}) must be positive")));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::invalid(format!("Bizley series needs coprime (a,b), got ({a},{b})")));
    }
    if terms == 0 {
        return Err(Error::invalid("at least one term is required"));
    }
    let s = a + b;
    let f: Vec<BigRational> = (0..=terms as u64)
        .map(|j| {
            if j == 0 {
                return BigRational::zero();
            }
            let num = BigInt::from(binomial(j * s, j * b));
            BigRational::new(num, BigInt::from(s * j))
        })
        .collect();

    let mut g = vec![BigRational::one()];
    for n in 1..=terms {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            acc += BigRational::from_integer(BigInt::from(k)) * &f[k] * &g[n - k];
        }
        g.push(acc / BigRational::from_integer(BigInt::from(n)));
    }

    g.into_iter()
        .skip(1)
        .enumerate()
        .map(|(i, c)| {
            if !c.is_integer() {
                return Err(Error::internal(format!(
                    "Bizley coefficient {} of ({a},{b}) is {c}, not an integer",
                    i + 1
                )));
            }
            c.to_integer()
                .to_biguint()
                .ok_or_else(|| Error::internal("negative Bizley coefficient"))
        })
        .collect()
}

/// `Cat(m, d)` for any positive `m, d`, via the coprime formula when it
/// applies and the Bizley series otherwise.
pub fn rational_catalan(m: u64, d: u64) -> Result<BigUint> {
    if m == 0 || d == 0 {
        return Err(Error::invalid(format!("type ({m},{d}) must be positive")));
    }
    let g = m.gcd(&d);
    if g == 1 {
        return count_formula(m, d);
    }
    let series = count_bizley(m / g, d / g, g as usize)?;
    Ok(series.last().cloned().expect("g >= 1 terms"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::enumerate_paths;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_formula(1, 1).unwrap(), big(1));
        assert_eq!(count_formula(2, 1).unwrap(), big(1));
        assert_eq!(count_formula(8, 5).unwrap(), big(99));
        assert!(matches!(count_formula(4, 2), Err(Error::NotCoprime { gcd: 2, .. })));
        assert!(count_formula(0, 1).is_err());
    }

    #[test]
    fn bizley_examples() {
        assert_eq!(count_bizley(1, 1, 3).unwrap(), vec![big(1), big(2), big(5)]);
        // (3,2) first coefficient must agree with the coprime formula
        assert_eq!(count_bizley(3, 2, 1).unwrap(), vec![count_formula(3, 2).unwrap()]);
        assert!(count_bizley(2, 2, 1).is_err());
        assert!(count_bizley(2, 1, 0).is_err());
    }

    #[test]
    fn bizley_agrees_with_enumeration() {
        for (a, b) in [(1u64, 1u64), (2, 1), (1, 2), (3, 1), (3, 2)] {
            let terms = (12 / (a + b)) as usize;
            let series = count_bizley(a, b, terms).unwrap();
            for (i, c) in series.iter().enumerate() {
                let n = i as u64 + 1;
                let enumerated = enumerate_paths((n * a) as usize, (n * b) as usize).unwrap().len();
                assert_eq!(*c, big(enumerated as u64), "Cat({},{})", n * a, n * b);
            }
        }
    }

    #[test]
    fn catalan_is_symmetric() {
        for m in 1..8 {
            for d in 1..8 {
                assert_eq!(rational_catalan(m, d).unwrap(), rational_catalan(d, m).unwrap());
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(13, 5), big(1287));
        assert_eq!(binomial(3, 4), big(0));
    }
}
