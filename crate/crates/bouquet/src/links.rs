//! Weighted homogeneous hypersurface links: homogeneity tests, exact
//! monomial counting in weighted projective space, the dimension of the
//! transverse complex family and of the infinitesimal moduli space, the
//! hypothesis test for the rank-one maximal-torus criterion, and the
//! Brieskorn / Sylvester input generators.
//!
//! Weights grow double-exponentially in the Sylvester family, so everything
//! is big-integer; counting refuses degrees beyond a configurable cap rather
//! than approximate.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Default resource cap on the (gcd-reduced) degree for `h0_count`.
pub const DEFAULT_H0_DEGREE_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("weight vector must be nonempty")]
    EmptyWeights,
    #[error("weight {index} must be positive")]
    ZeroWeight { index: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("monomial {index} has {got} exponents, expected {expected}")]
    MonomialLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("reduced degree {degree} exceeds the counting cap {cap}; raise the cap explicitly")]
    DegreeCapExceeded { degree: BigUint, cap: u64 },
    #[error("Brieskorn exponents must be at least 2, got {0}")]
    ExponentTooSmall(u64),
    #[error("Brieskorn exponent list must be nonempty")]
    EmptyExponents,
    #[error("sequence length must be at least 1")]
    EmptySequence,
}

/// Weight vector `w = (w_0, ..., w_n)` and degree `d` of a weighted
/// homogeneous polynomial. `d >= max(w_i)` is not required; counts may be
/// zero or the dimension formulas degenerate, and both are reported as-is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedLinkData {
    weights: Vec<BigUint>,
    degree: BigUint,
}

impl WeightedLinkData {
    pub fn new(weights: Vec<BigUint>, degree: BigUint) -> Result<Self, LinkError> {
        if weights.is_empty() {
            return Err(LinkError::EmptyWeights);
        }
        for (index, w) in weights.iter().enumerate() {
            if w.is_zero() {
                return Err(LinkError::ZeroWeight { index });
            }
        }
        if degree.is_zero() {
            return Err(LinkError::ZeroDegree);
        }
        Ok(WeightedLinkData { weights, degree })
    }

    pub fn from_u64(weights: &[u64], degree: u64) -> Result<Self, LinkError> {
        WeightedLinkData::new(
            weights.iter().map(|&w| BigUint::from(w)).collect(),
            BigUint::from(degree),
        )
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub fn degree(&self) -> &BigUint {
        &self.degree
    }

    /// Number of variables, n+1.
    pub fn var_count(&self) -> usize {
        self.weights.len()
    }
}

/// Every monomial `z^a` must satisfy `sum a_i w_i = d`.
pub fn is_weighted_homogeneous(
    monomials: &[Vec<BigUint>],
    data: &WeightedLinkData,
) -> Result<bool, LinkError> {
    let n = data.var_count();
    for (index, mono) in monomials.iter().enumerate() {
        if mono.len() != n {
            return Err(LinkError::MonomialLength {
                index,
                expected: n,
                got: mono.len(),
            });
        }
    }
    Ok(monomials.iter().all(|mono| {
        let total: BigUint = mono.iter().zip(&data.weights).map(|(a, w)| a * w).sum();
        total == data.degree
    }))
}

/// Exact number of monomials of weighted degree `d`, i.e. solutions of
/// `sum a_i w_i = d` in non-negative integers.
pub fn h0_count(data: &WeightedLinkData) -> Result<BigUint, LinkError> {
    h0_count_with_cap(data, DEFAULT_H0_DEGREE_CAP)
}

pub fn h0_count_with_cap(data: &WeightedLinkData, cap: u64) -> Result<BigUint, LinkError> {
    // Divide out the common gcd first: no solutions unless it divides d.
    let mut g = BigUint::zero();
    for w in &data.weights {
        g = g.gcd(w);
    }
    if !(&data.degree % &g).is_zero() {
        return Ok(BigUint::zero());
    }
    let degree = &data.degree / &g;
    let Some(d) = degree.to_u64().filter(|&d| d <= cap) else {
        return Err(LinkError::DegreeCapExceeded { degree, cap });
    };
    // Weights above the degree force a zero exponent and drop out.
    let weights: Vec<u64> = data
        .weights
        .iter()
        .map(|w| (w / &g).to_u64().unwrap_or(u64::MAX))
        .filter(|&w| w <= d)
        .collect();
    if weights.is_empty() {
        return Ok(if d == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }

    // Few branches: enumerate by recursive splitting on the exponents.
    // Otherwise fill a table over 0..=d, one pass per weight.
    let mut branch_budget: u64 = 1;
    for &w in &weights {
        branch_budget = branch_budget.saturating_mul(d / w + 1);
        if branch_budget > 2_000_000 {
            break;
        }
    }
    if branch_budget <= 2_000_000 {
        return Ok(count_by_splitting(&weights, d));
    }
    Ok(count_by_table(&weights, d))
}

fn count_by_splitting(weights: &[u64], d: u64) -> BigUint {
    fn rec(weights: &[u64], rem: u64) -> BigUint {
        match weights {
            [] => unreachable!("splitting keeps at least one weight"),
            [w] => {
                if rem.is_multiple_of(*w) {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            }
            [w, rest @ ..] => {
                let mut total = BigUint::zero();
                let mut left = rem;
                loop {
                    total += rec(rest, left);
                    if left < *w {
                        break;
                    }
                    left -= w;
                }
                total
            }
        }
    }
    rec(weights, d)
}

fn count_by_table(weights: &[u64], d: u64) -> BigUint {
    let len = (d + 1) as usize;
    // Machine-word pass first; redo with big integers only on overflow.
    let mut table = vec![0u128; len];
    table[0] = 1;
    let mut overflowed = false;
    'outer: for &w in weights {
        for s in (w as usize)..len {
            match table[s].checked_add(table[s - w as usize]) {
                Some(v) => table[s] = v,
                None => {
                    overflowed = true;
                    break 'outer;
                }
            }
        }
    }
    if !overflowed {
        return BigUint::from(table[len - 1]);
    }
    let mut big = vec![BigUint::zero(); len];
    big[0] = BigUint::one();
    for &w in weights {
        for s in (w as usize)..len {
            let add = big[s - w as usize].clone();
            big[s] += add;
        }
    }
    big[len - 1].clone()
}

/// Complex dimension of the transverse family: `h^0(d) - (n+1)`. May be
/// negative for degenerate input.
pub fn dim_transverse_complex_family(data: &WeightedLinkData) -> Result<BigInt, LinkError> {
    let h0 = h0_count(data)?;
    Ok(BigInt::from(h0) - BigInt::from(data.var_count()))
}

/// Complex dimension of the infinitesimal moduli space:
/// `h^0(d) - sum_i h^0(w_i) + dim_aut`. The automorphism dimension is an
/// input; computing it for a given hypersurface is out of scope here.
pub fn dim_moduli(data: &WeightedLinkData, dim_aut: u64) -> Result<BigInt, LinkError> {
    let h0_d = BigInt::from(h0_count(data)?);
    let mut sum = BigInt::zero();
    for w in &data.weights {
        let per_weight =
            WeightedLinkData::new(data.weights.clone(), w.clone()).expect("weights validated");
        sum += BigInt::from(h0_count(&per_weight)?);
    }
    Ok(h0_d - sum + BigInt::from(dim_aut))
}

/// Tests the hypothesis `2 w_i < d` for all but at most one weight; returns
/// the violating indices.
pub fn whscomp_hypothesis(data: &WeightedLinkData) -> (bool, Vec<usize>) {
    let two = BigUint::from(2u32);
    let violations: Vec<usize> = data
        .weights
        .iter()
        .enumerate()
        .filter(|(_, w)| &two * *w >= data.degree)
        .map(|(i, _)| i)
        .collect();
    (violations.len() <= 1, violations)
}

/// Brieskorn data: `d = lcm(a_i)`, `w_i = d / a_i`, so each monomial
/// `z_i^{a_i}` has weighted degree exactly `d`.
pub fn brieskorn_weights(exponents: &[u64]) -> Result<WeightedLinkData, LinkError> {
    if exponents.is_empty() {
        return Err(LinkError::EmptyExponents);
    }
    for &a in exponents {
        if a < 2 {
            return Err(LinkError::ExponentTooSmall(a));
        }
    }
    let mut d = BigUint::one();
    for &a in exponents {
        d = d.lcm(&BigUint::from(a));
    }
    let weights: Vec<BigUint> = exponents.iter().map(|&a| &d / BigUint::from(a)).collect();
    let data = WeightedLinkData::new(weights, d)?;
    // The defining monomials must be weighted homogeneous by construction.
    let monomials: Vec<Vec<BigUint>> = (0..exponents.len())
        .map(|i| {
            (0..exponents.len())
                .map(|j| {
                    if i == j {
                        BigUint::from(exponents[i])
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect();
    debug_assert!(is_weighted_homogeneous(&monomials, &data).unwrap());
    Ok(data)
}

/// Printed-recursion conventions for the extremal sequence. The recursion as
/// usually quoted is self-referential; convention A is the product-plus-one
/// reading that reproduces the quoted numeric values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylvesterConvention {
    /// `a_0 = 2`, `a_k = a_0 * a_1 * ... * a_{k-1} + 1`.
    A,
}

/// First `length` terms: 2, 3, 7, 43, 1807, 3263443, 10650056950807, ...
pub fn sylvester_sequence(
    length: usize,
    convention: SylvesterConvention,
) -> Result<Vec<BigUint>, LinkError> {
    if length == 0 {
        return Err(LinkError::EmptySequence);
    }
    let SylvesterConvention::A = convention;
    let mut seq = vec![BigUint::from(2u32)];
    let mut product = BigUint::from(2u32);
    while seq.len() < length {
        let next = &product + BigUint::one();
        product *= &next;
        seq.push(next);
    }
    Ok(seq)
}
