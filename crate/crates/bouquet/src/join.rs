//! The (k1,k2)-join at the level of orbifold Boothby–Wang data: the
//! smoothness criterion, common-factor reduction, the moment cone of the
//! sphere join, the bouquet lower bound, and the two five-dimensional
//! families of contact structures on S^2 x S^3 and X_infinity.
//!
//! The weighted circle action `(x, y) -> (e^{i k2 t} x, e^{-i k1 t} y)`
//! behind the quotient is never computed analytically; everything here is
//! the combinatorial shadow. A general join of two toric factors is exposed
//! as the scaled product polytope `(k1 P1) x (k2 P2)` fed to
//! [`cone_over_polytope`].

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::cone::{cone_over_polytope, ConeError, GoodCone, LtPolytope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JoinError {
    #[error("join parameters must be positive, got k1={k1}, k2={k2}")]
    NonPositive { k1: u64, k2: u64 },
    #[error("gcd(k1,k2) = {gcd} != 1: reduce the common factor first (the join is the Z_{gcd} quotient of the reduced join)")]
    NotCoprime { gcd: u64 },
    #[error("family D needs k1 > k2 > 0, got ({k1},{k2})")]
    BadDOrder { k1: u64, k2: u64 },
    #[error("family tilde-D needs l > e > 0, got ({l},{e})")]
    BadTildeOrder { l: u64, e: u64 },
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// Orbifold join data: the weights, the orders of the two base orbifolds,
/// and, when the factors are toric, their moment polytopes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinSpec {
    pub k1: u64,
    pub k2: u64,
    pub upsilon1: u64,
    pub upsilon2: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polytope1: Option<LtPolytope>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polytope2: Option<LtPolytope>,
}

impl JoinSpec {
    pub fn new(k1: u64, k2: u64, upsilon1: u64, upsilon2: u64) -> Result<Self, JoinError> {
        if k1 == 0 || k2 == 0 || upsilon1 == 0 || upsilon2 == 0 {
            return Err(JoinError::NonPositive { k1, k2 });
        }
        Ok(JoinSpec {
            k1,
            k2,
            upsilon1,
            upsilon2,
            polytope1: None,
            polytope2: None,
        })
    }

    /// Manifold join for two smooth bases.
    pub fn smooth_bases(k1: u64, k2: u64) -> Result<Self, JoinError> {
        JoinSpec::new(k1, k2, 1, 1)
    }

    pub fn with_polytopes(mut self, p1: LtPolytope, p2: LtPolytope) -> Self {
        self.polytope1 = Some(p1);
        self.polytope2 = Some(p2);
        self
    }

    /// Moment polytope of the join for two toric factors: the product of
    /// the factor polytopes scaled by the join weights. The cone over it is
    /// the join's moment cone.
    pub fn moment_polytope(&self) -> Option<LtPolytope> {
        match (&self.polytope1, &self.polytope2) {
            (Some(p1), Some(p2)) => Some(join_product_polytope(p1, self.k1, p2, self.k2)),
            _ => None,
        }
    }
}

/// The join of the two quasi-regular pieces is a smooth manifold when
/// gcd(upsilon1 * k2, upsilon2 * k1) = 1.
pub fn join_smoothness(spec: &JoinSpec) -> bool {
    (spec.upsilon1 * spec.k2).gcd(&(spec.upsilon2 * spec.k1)) == 1
}

/// Pulls out m = gcd(k1,k2): the (k1,k2)-join is the Z_m quotient of the
/// (k1',k2')-join with k_i' = k_i / m.
pub fn reduce_common_factor(k1: u64, k2: u64) -> Result<(u64, u64, u64), JoinError> {
    if k1 == 0 || k2 == 0 {
        return Err(JoinError::NonPositive { k1, k2 });
    }
    let m = k1.gcd(&k2);
    Ok((m, k1 / m, k2 / m))
}

/// Moment cone of the sphere join S^3 *_{k1,k2} S^3: the cone over the
/// rectangle `[0,k1] x [0,k2]` with unit labels, i.e. the Boothby–Wang cone
/// over CP^1 x CP^1 with the form k1 w1 + k2 w2.
pub fn sphere_join_cone(k1: u64, k2: u64) -> Result<GoodCone, JoinError> {
    if k1 == 0 || k2 == 0 {
        return Err(JoinError::NonPositive { k1, k2 });
    }
    let g = k1.gcd(&k2);
    if g != 1 {
        return Err(JoinError::NotCoprime { gcd: g });
    }
    Ok(cone_over_polytope(&LtPolytope::rectangle(k1, k2)).into_cone()?)
}

/// Scaled product polytope (k1 P1) x (k2 P2) of two toric factors; the cone
/// over it is the join's moment cone.
pub fn join_product_polytope(p1: &LtPolytope, k1: u64, p2: &LtPolytope, k2: u64) -> LtPolytope {
    p1.scale(k1).product(&p2.scale(k2))
}

/// Lower bound n1 * n2 on the number of conjugacy classes of maximal tori of
/// Reeb type for the join, from the counts of the two factors.
pub fn bouquet_lower_bound(n1: u64, n2: u64) -> u64 {
    n1 * n2
}

/// Which five-manifold carries a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SphereBundle {
    /// The trivial bundle S^2 x S^3.
    #[serde(rename = "S2xS3")]
    Trivial,
    /// The non-trivial bundle, X_infinity in Barden's notation.
    #[serde(rename = "Xinf")]
    NonTrivial,
}

impl std::fmt::Display for SphereBundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SphereBundle::Trivial => write!(f, "S2xS3"),
            SphereBundle::NonTrivial => write!(f, "Xinf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzFamily {
    /// D_{k1,k2} with k1 > k2 > 0 coprime; lives on S^2 x S^3.
    D { k1: u64, k2: u64 },
    /// tilde-D_{l,e} with l > e > 0; manifold depends on the parity of l.
    TildeD { l: u64, e: u64 },
}

/// Census facts for one member of the two families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WzRecord {
    pub family: String,
    pub bouquet_size: u64,
    pub manifold: SphereBundle,
    /// l - 2e for tilde-D: members with different values have different
    /// first Chern classes, hence are inequivalent.
    pub c1_invariant: Option<i64>,
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

pub fn wz_family(family: WzFamily) -> Result<WzRecord, JoinError> {
    match family {
        WzFamily::D { k1, k2 } => {
            if !(k1 > k2 && k2 > 0) {
                return Err(JoinError::BadDOrder { k1, k2 });
            }
            let g = k1.gcd(&k2);
            if g != 1 {
                return Err(JoinError::NotCoprime { gcd: g });
            }
            Ok(WzRecord {
                family: format!("D({k1},{k2})"),
                bouquet_size: ceil_div(k1, k2),
                manifold: SphereBundle::Trivial,
                c1_invariant: None,
            })
        }
        WzFamily::TildeD { l, e } => {
            if !(l > e && e > 0) {
                return Err(JoinError::BadTildeOrder { l, e });
            }
            Ok(WzRecord {
                family: format!("tildeD({l},{e})"),
                bouquet_size: ceil_div(e, l - e),
                manifold: if l % 2 == 0 {
                    SphereBundle::Trivial
                } else {
                    SphereBundle::NonTrivial
                },
                c1_invariant: Some(l as i64 - 2 * e as i64),
            })
        }
    }
}
