//! Exact rational linear algebra and `p/q` parsing helpers shared by the
//! cone, polygon, and CLI layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;
use thiserror::Error;

use crate::lattice::{primitive_part, LatticeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("cannot parse `{0}` as an integer or p/q rational")]
    Parse(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses "p" or "p/q" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, RationalError> {
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| RationalError::Parse(s.to_string()))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n =
                BigInt::from_str(num.trim()).map_err(|_| RationalError::Parse(s.to_string()))?;
            let d =
                BigInt::from_str(den.trim()).map_err(|_| RationalError::Parse(s.to_string()))?;
            if d.is_zero() {
                return Err(RationalError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Formats a rational as "p" when integral, "p/q" otherwise (lowest terms,
/// positive denominator — `BigRational` maintains both).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational_vector(s: &str) -> Result<Vec<BigRational>, RationalError> {
    s.split(',').map(parse_rational).collect()
}

/// Clears denominators and divides out the integer gcd: returns the primitive
/// integer vector on the same ray and the positive rational scale with
/// `v = scale * primitive`.
pub fn primitive_ray(v: &[BigRational]) -> Result<(Vec<BigInt>, BigRational), LatticeError> {
    let mut lcm_den = BigInt::one();
    for x in v {
        lcm_den = num_integer::lcm(lcm_den, x.denom().clone());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm_den / x.denom()))
        .collect();
    // primitive_part returns g > 0, so the scale g / lcm_den is positive and
    // the primitive vector keeps the direction of v.
    let (prim, g) = primitive_part(&ints)?;
    Ok((prim, BigRational::new(g, lcm_den)))
}

/// Row-reduces in place and returns the rank. Exact Gaussian elimination.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in 0..nrows {
            if i != rank && !a[i][col].is_zero() {
                let factor = &a[i][col] / &pivot;
                for j in col..ncols {
                    let sub = &factor * &a[rank][j];
                    a[i][j] = &a[i][j] - sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let rat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    rank(&rat)
}

/// Solves the square system `a x = b` exactly. Returns None when `a` is
/// singular.
pub fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) || b.len() != n {
        return None;
    }
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &pivot;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in col..=n {
                    let sub = &factor * &m[col][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| BigRational::from_integer(x.clone()) * y)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn parse_and_format_roundtrip() {
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat(5, 1)), "5");
        assert!(parse_rational("x").is_err());
        assert!(matches!(
            parse_rational("1/0"),
            Err(RationalError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn primitive_ray_examples() {
        // (2,4,6) = 2 * (1,2,3)
        let (p, s) = primitive_ray(&[rat(2, 1), rat(4, 1), rat(6, 1)]).unwrap();
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]);
        assert_eq!(s, rat(2, 1));

        // (1/2, 1/3) = 1/6 * (3,2), by the lcm-of-denominators route
        let (p, s) = primitive_ray(&[rat(1, 2), rat(1, 3)]).unwrap();
        assert_eq!(p, vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(s, rat(1, 6));

        // (5,0) = 5 * (1,0)
        let (p, s) = primitive_ray(&[rat(5, 1), rat(0, 1)]).unwrap();
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(s, rat(5, 1));
    }

    #[test]
    fn rank_and_solve() {
        let rows = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        assert_eq!(rank(&rows), 2);

        let a = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        let b = vec![rat(5, 1), rat(10, 1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(3, 1)]);

        let singular = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert!(solve_square(&singular, &b).is_none());
    }
}
