//! Polygon-space combinatorics and circle-bundle cohomology.
//!
//! Covers the genericity test for side lengths, the heptagon-space
//! cohomology presentation with its symplectic and first Chern classes, rank
//! computations in the degree-four part, Betti numbers of circle bundles via
//! the Gysin sequence over bases with vanishing odd cohomology, reduction of
//! integral classes modulo the Euler class (with the spin test), and the
//! Hausmann–Tolman tower of polygon spaces.
//!
//! Betti numbers are rational: integral torsion upstairs is out of scope
//! beyond census notes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::is_primitive;

/// Sign enumeration cap for the public genericity test.
pub const MAX_SIDES_FOR_GENERICITY: usize = 24;
/// Tower index cap.
pub const MAX_TOWER_INDEX: u64 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon space needs at least 3 sides, got {got}")]
    TooFewSides { got: usize },
    #[error("side length {index} must be positive")]
    NonPositiveLength { index: usize },
    #[error("genericity enumeration supports at most {max} sides, got {got}")]
    GenericityCapExceeded { got: usize, max: usize },
    #[error("tower index at most {max}, got {got}")]
    TowerCapExceeded { got: u64, max: u64 },
    #[error("relation {index} has length {got}, expected {expected}")]
    RelationLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("class vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("base Betti list must be nonempty")]
    EmptyBase,
    #[error("need {expected} cup ranks for {betti} base Betti numbers, got {got}")]
    RankCount {
        expected: usize,
        betti: usize,
        got: usize,
    },
    #[error("cup rank {index} = {rank} exceeds min(b_{{2k}}, b_{{2k+2}}) = {bound}")]
    RankBound { index: usize, rank: u64, bound: u64 },
    #[error("base Betti numbers must be palindromic for duality completion")]
    NotPalindromic,
    #[error("rank prefix longer than the rank list ({got} > {max})")]
    PrefixTooLong { got: usize, max: usize },
    #[error(
        "prefix value r_{index} = {prescribed} conflicts with duality, which forces {required}"
    )]
    PrefixConflict {
        index: usize,
        prescribed: u64,
        required: u64,
    },
    #[error("prefix determines only part of the rank list; supply at least half")]
    PrefixInsufficient,
    #[error("the Euler class must be nonzero")]
    OmegaZero,
    #[error("the Euler class must be primitive")]
    OmegaImprimitive,
}

/// Side lengths of a polygon space, all positive rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonSpaceData {
    alpha: Vec<BigRational>,
}

impl PolygonSpaceData {
    pub fn new(alpha: Vec<BigRational>) -> Result<Self, PolygonError> {
        if alpha.len() < 3 {
            return Err(PolygonError::TooFewSides { got: alpha.len() });
        }
        for (index, a) in alpha.iter().enumerate() {
            if !a.is_positive() {
                return Err(PolygonError::NonPositiveLength { index });
            }
        }
        Ok(PolygonSpaceData { alpha })
    }

    pub fn from_u64(alpha: &[u64]) -> Result<Self, PolygonError> {
        PolygonSpaceData::new(
            alpha
                .iter()
                .map(|&a| BigRational::from_integer(BigInt::from(a)))
                .collect(),
        )
    }

    pub fn side_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }
}

/// Whether some sign vector makes the signed sum of the scaled side lengths
/// vanish; meet-in-the-middle over the two halves, exact integers.
fn signed_sum_vanishes(scaled: &[BigInt]) -> bool {
    let half = scaled.len() / 2;
    let (left, right) = scaled.split_at(half);
    // Fix the global sign on the first entry to halve the work.
    let mut left_sums = vec![];
    enumerate_signed_sums(left, true, &mut left_sums);
    let mut right_sums = vec![];
    enumerate_signed_sums(right, false, &mut right_sums);
    right_sums.sort();
    left_sums
        .iter()
        .any(|s| right_sums.binary_search(&(-s)).is_ok())
}

fn enumerate_signed_sums(values: &[BigInt], fix_first: bool, out: &mut Vec<BigInt>) {
    fn rec(values: &[BigInt], acc: BigInt, out: &mut Vec<BigInt>) {
        match values {
            [] => out.push(acc),
            [v, rest @ ..] => {
                rec(rest, &acc + v, out);
                rec(rest, &acc - v, out);
            }
        }
    }
    match values {
        [] => out.push(BigInt::zero()),
        [v, rest @ ..] if fix_first => rec(rest, v.clone(), out),
        _ => rec(values, BigInt::zero(), out),
    }
}

fn scale_to_integers(alpha: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for a in alpha {
        lcm = lcm.lcm(a.denom());
    }
    alpha
        .iter()
        .map(|a| a.numer() * (&lcm / a.denom()))
        .collect()
}

/// The polygon space is a smooth manifold exactly when no choice of signs
/// zeroes the signed perimeter.
pub fn epsilon_generic(p: &PolygonSpaceData) -> Result<bool, PolygonError> {
    if p.side_count() > MAX_SIDES_FOR_GENERICITY {
        return Err(PolygonError::GenericityCapExceeded {
            got: p.side_count(),
            max: MAX_SIDES_FOR_GENERICITY,
        });
    }
    Ok(!signed_sum_vanishes(&scale_to_integers(p.alpha())))
}

/// Real dimension 2(m-3) of the space of m-gons.
pub fn polygon_dimension(m: u64) -> Result<u64, PolygonError> {
    if m < 3 {
        return Err(PolygonError::TooFewSides { got: m as usize });
    }
    Ok(2 * (m - 3))
}

// ---------------------------------------------------------------------------
// Degree-four linear algebra of a graded ring presentation.
// ---------------------------------------------------------------------------

/// Position of the unordered pair (i,j), i <= j, in the symmetric-square
/// coordinate order (0,0),(0,1),...,(0,g-1),(1,1),...
pub fn sym_index(g: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * g - i * (i + 1) / 2 + j
}

/// Coordinates of the product of two degree-two classes in the symmetric
/// square of the generator space.
pub fn sym_square_product(g: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); g * (g + 1) / 2];
    for i in 0..g {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..g {
            if b[j].is_zero() {
                continue;
            }
            out[sym_index(g, i, j)] += &a[i] * &b[j];
        }
    }
    out
}

/// Degree-two generators and the listed degree-four relations of a graded
/// ring, as vectors in the symmetric square. The stored relations are only
/// the listed ones; rank statements are always relative to them and are
/// never silently extended to the full ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRingPresentation {
    pub gen_names: Vec<String>,
    pub relations4: Vec<Vec<BigInt>>,
    /// Expected rank of degree four of the actual ring, when known; the gap
    /// against `sym_square_dim - relation count` measures unlisted relations.
    pub target_betti4: Option<u64>,
}

impl GradedRingPresentation {
    pub fn new(
        gen_names: Vec<String>,
        relations4: Vec<Vec<BigInt>>,
        target_betti4: Option<u64>,
    ) -> Result<Self, PolygonError> {
        let g = gen_names.len();
        let expected = g * (g + 1) / 2;
        for (index, r) in relations4.iter().enumerate() {
            if r.len() != expected {
                return Err(PolygonError::RelationLength {
                    index,
                    expected,
                    got: r.len(),
                });
            }
        }
        Ok(GradedRingPresentation {
            gen_names,
            relations4,
            target_betti4,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.gen_names.len()
    }

    pub fn sym_square_dim(&self) -> usize {
        let g = self.generator_count();
        g * (g + 1) / 2
    }
}

/// The heptagon-space ring data: generators R, V1..V6, the twelve listed
/// quadratic relations, the symplectic class, and the first Chern class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeptagonData {
    pub presentation: GradedRingPresentation,
    /// `[omega] = 9R + 2(V1+V2) + 4(V3+V4) + 6(V5+V6)`
    pub omega: Vec<BigInt>,
    /// c1 = 5R + 2(V1+...+V6)
    pub c1: Vec<BigInt>,
}

pub fn heptagon_presentation() -> HeptagonData {
    let g = 7usize;
    let names: Vec<String> = std::iter::once("R".to_string())
        .chain((1..=6).map(|i| format!("V{i}")))
        .collect();
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    // V_i^2 + R V_i for i = 1..6
    for i in 1..=6 {
        let mut r = vec![BigInt::zero(); g * (g + 1) / 2];
        r[sym_index(g, i, i)] = BigInt::one();
        r[sym_index(g, 0, i)] = BigInt::one();
        relations.push(r);
    }
    // V4^2 + V5^2 + V6^2 - R^2
    let mut r = vec![BigInt::zero(); g * (g + 1) / 2];
    r[sym_index(g, 4, 4)] = BigInt::one();
    r[sym_index(g, 5, 5)] = BigInt::one();
    r[sym_index(g, 6, 6)] = BigInt::one();
    r[sym_index(g, 0, 0)] = -BigInt::one();
    relations.push(r);
    // The five vanishing products.
    for (i, j) in [(3, 5), (3, 6), (4, 5), (4, 6), (5, 6)] {
        let mut r = vec![BigInt::zero(); g * (g + 1) / 2];
        r[sym_index(g, i, j)] = BigInt::one();
        relations.push(r);
    }
    let presentation = GradedRingPresentation::new(names, relations, Some(15))
        .expect("heptagon relation vectors have the right length");
    let to_vec = |v: [i64; 7]| v.iter().map(|&x| BigInt::from(x)).collect();
    HeptagonData {
        presentation,
        omega: to_vec([9, 2, 2, 4, 4, 6, 6]),
        c1: to_vec([5, 2, 2, 2, 2, 2, 2]),
    }
}

fn rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Rank of the span of the listed relations inside the symmetric square.
pub fn relation_rank(pres: &GradedRingPresentation) -> usize {
    if pres.relations4.is_empty() {
        return 0;
    }
    crate::rational::rank(&rational_rows(&pres.relations4))
}

/// Multiplies the degree-two class `omega` into each generator and measures
/// the span of the images against the listed relations. Returns whether the
/// image span meets the relation span only at zero with full rank (the
/// necessary condition for cup-product injectivity) and the rank of the
/// image modulo the listed relations.
pub fn cup_injectivity_check(
    pres: &GradedRingPresentation,
    omega: &[BigInt],
) -> Result<(bool, usize), PolygonError> {
    let g = pres.generator_count();
    if omega.len() != g {
        return Err(PolygonError::DimensionMismatch {
            expected: g,
            got: omega.len(),
        });
    }
    let mut products: Vec<Vec<BigInt>> = Vec::with_capacity(g);
    for j in 0..g {
        let mut e = vec![BigInt::zero(); g];
        e[j] = BigInt::one();
        products.push(sym_square_product(g, omega, &e));
    }
    let rel_rank = relation_rank(pres);
    let mut all_rows = pres.relations4.clone();
    all_rows.extend(products);
    let total_rank = crate::rational::rank(&rational_rows(&all_rows));
    let image_rank = total_rank - rel_rank;
    Ok((image_rank == g, image_rank))
}

// ---------------------------------------------------------------------------
// Gysin sequence of a circle bundle over a base with vanishing odd
// cohomology.
// ---------------------------------------------------------------------------

/// Even Betti numbers `b_0, b_2, ..., b_{2q}` of the base and the ranks
/// `r_k` of cup product with the Euler class from degree 2k to 2k+2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GysinInput {
    base_betti: Vec<u64>,
    cup_ranks: Vec<u64>,
}

impl GysinInput {
    pub fn new(base_betti: Vec<u64>, cup_ranks: Vec<u64>) -> Result<Self, PolygonError> {
        if base_betti.is_empty() {
            return Err(PolygonError::EmptyBase);
        }
        if cup_ranks.len() + 1 != base_betti.len() {
            return Err(PolygonError::RankCount {
                expected: base_betti.len() - 1,
                betti: base_betti.len(),
                got: cup_ranks.len(),
            });
        }
        for (k, &r) in cup_ranks.iter().enumerate() {
            let bound = base_betti[k].min(base_betti[k + 1]);
            if r > bound {
                return Err(PolygonError::RankBound {
                    index: k,
                    rank: r,
                    bound,
                });
            }
        }
        Ok(GysinInput {
            base_betti,
            cup_ranks,
        })
    }

    pub fn base_betti(&self) -> &[u64] {
        &self.base_betti
    }

    pub fn cup_ranks(&self) -> &[u64] {
        &self.cup_ranks
    }
}

/// Betti numbers `b_0, ..., b_{2q+1}` of the circle-bundle total space:
/// even degrees are cokernels, odd degrees kernels, of cup product with the
/// Euler class on the base.
pub fn gysin_betti(input: &GysinInput) -> Vec<u64> {
    let q = input.cup_ranks.len();
    let rank = |k: i64| -> u64 {
        if k < 0 || k as usize >= q {
            0
        } else {
            input.cup_ranks[k as usize]
        }
    };
    let mut betti = Vec::with_capacity(2 * q + 2);
    for k in 0..=q as i64 {
        let b = input.base_betti[k as usize];
        betti.push(b - rank(k - 1)); // b_{2k}: cokernel of the previous cup
        betti.push(b - rank(k)); // b_{2k+1}: kernel of the next cup
    }
    // Alternating sum telescopes to zero: an odd-dimensional total space.
    let euler: i64 = betti
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    assert_eq!(euler, 0, "Gysin output must have zero Euler characteristic");
    betti
}

/// Completes a partial cup-rank list using the duality symmetry
/// `r_k = r_{q-1-k}` of the pairing on a palindromic base.
pub fn duality_complete_ranks(
    base_betti: &[u64],
    prefix: &[u64],
) -> Result<Vec<u64>, PolygonError> {
    if base_betti.is_empty() {
        return Err(PolygonError::EmptyBase);
    }
    let q = base_betti.len() - 1;
    let palindromic = (0..base_betti.len()).all(|i| base_betti[i] == base_betti[q - i]);
    if !palindromic {
        return Err(PolygonError::NotPalindromic);
    }
    if prefix.len() > q {
        return Err(PolygonError::PrefixTooLong {
            got: prefix.len(),
            max: q,
        });
    }
    let mut ranks: Vec<Option<u64>> = vec![None; q];
    for (k, &r) in prefix.iter().enumerate() {
        // Record the prescribed value and its mirror, watching for clashes.
        for idx in [k, q - 1 - k] {
            match ranks[idx] {
                None => ranks[idx] = Some(r),
                Some(existing) if existing == r => {}
                Some(existing) => {
                    return Err(PolygonError::PrefixConflict {
                        index: k,
                        prescribed: r,
                        required: existing,
                    })
                }
            }
        }
    }
    let complete: Option<Vec<u64>> = ranks.into_iter().collect();
    complete.ok_or(PolygonError::PrefixInsufficient)
}

/// Image of an integral class in `Z^g / Z omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClass {
    /// `cls - t omega` with t the unique integer minimising the coordinate
    /// at omega's first nonzero entry (ties resolved toward the smaller t).
    pub representative: Vec<BigInt>,
    pub is_zero_in_quotient: bool,
    /// Divisibility by two in the quotient: the spin criterion for a
    /// reduced first Chern class.
    pub is_even_in_quotient: bool,
}

pub fn quotient_class_reduce(
    cls: &[BigInt],
    omega: &[BigInt],
) -> Result<QuotientClass, PolygonError> {
    if cls.len() != omega.len() {
        return Err(PolygonError::DimensionMismatch {
            expected: omega.len(),
            got: cls.len(),
        });
    }
    if omega.iter().all(|x| x.is_zero()) {
        return Err(PolygonError::OmegaZero);
    }
    if !is_primitive(omega).expect("omega nonzero") {
        return Err(PolygonError::OmegaImprimitive);
    }
    let pivot = omega.iter().position(|x| !x.is_zero()).expect("nonzero");
    let (c, w) = (&cls[pivot], &omega[pivot]);
    let q = c.div_floor(w);
    let t = {
        let lo = c - &q * w;
        let hi = c - (&q + BigInt::one()) * w;
        if hi.abs() < lo.abs() {
            &q + BigInt::one()
        } else {
            q
        }
    };
    let representative: Vec<BigInt> = cls.iter().zip(omega).map(|(a, b)| a - &t * b).collect();

    // Zero in the quotient: cls is an integer multiple of omega.
    let ratio = &cls[pivot] / &omega[pivot];
    let is_zero_in_quotient = cls.iter().zip(omega).all(|(a, b)| a == &(&ratio * b))
        && (&cls[pivot] % &omega[pivot]).is_zero();

    // Even in the quotient: cls - t omega is even for t in {0, 1} mod 2.
    let all_even = |v: Vec<BigInt>| v.iter().all(|x| x.is_even());
    let is_even_in_quotient =
        all_even(cls.to_vec()) || all_even(cls.iter().zip(omega).map(|(a, b)| a - b).collect());

    Ok(QuotientClass {
        representative,
        is_zero_in_quotient,
        is_even_in_quotient,
    })
}

/// One floor of the tower: side lengths (1,1,2,2,3,3,3, 1/2, ..., 1/2^m) and
/// the dimensions of the three known conjugacy classes of Hamiltonian tori.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerFloor {
    pub data: PolygonSpaceData,
    pub torus_dims: (u64, u64, u64),
}

pub fn hausmann_tolman_tower(m: u64) -> Result<TowerFloor, PolygonError> {
    if m > MAX_TOWER_INDEX {
        return Err(PolygonError::TowerCapExceeded {
            got: m,
            max: MAX_TOWER_INDEX,
        });
    }
    let mut alpha: Vec<BigRational> = [1u64, 1, 2, 2, 3, 3, 3]
        .iter()
        .map(|&a| BigRational::from_integer(BigInt::from(a)))
        .collect();
    for i in 1..=m {
        alpha.push(BigRational::new(
            BigInt::one(),
            BigInt::from(2u64).pow(i as u32),
        ));
    }
    let data = PolygonSpaceData::new(alpha)?;
    // The integer block sums to 15, an odd number, and the dyadic tail stays
    // below one in absolute value, so no signed sum vanishes; verify anyway.
    assert!(
        !signed_sum_vanishes(&scale_to_integers(data.alpha())),
        "tower side lengths must be generic"
    );
    Ok(TowerFloor {
        data,
        torus_dims: (m + 2, m + 3, m + 4),
    })
}
