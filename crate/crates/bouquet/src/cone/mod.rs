//! Good rational polyhedral cones and labelled polytopes.
//!
//! A cone is stored by its inward primitive facet normals:
//! `C = { y : <y, nu_i> >= 0 }`. Sources that list outward normals must
//! negate them at the boundary. The goodness condition, duality, slices at a
//! Reeb hyperplane, and the topological invariants (`pi_1` as a finite
//! abelian group, the rank of `pi_2`) are all computed exactly.

mod dd;

pub use dd::{double_description, ConeDescription};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::str::FromStr;
use thiserror::Error;

use crate::lattice::{
    is_primitive, quotient_group, smith_normal_form, AbelianGroupStructure, IntMatrix, LatticeError,
};
use crate::rational::{dot_int, dot_int_rat, format_rational, parse_rational, primitive_ray};

/// Hard cap on the facet count for the exponential face enumeration.
pub const MAX_FACETS_FOR_FACE_ENUMERATION: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("ambient rank must be at least 2, got {0}")]
    AmbientRankTooSmall(usize),
    #[error("cone needs at least one facet normal")]
    NoFacets,
    #[error("facet normal {index} has length {got}, expected {expected}")]
    WrongNormalLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("facet normal {index} is zero")]
    ZeroNormal { index: usize },
    #[error("facet normal {index} is not primitive")]
    NonPrimitiveNormal { index: usize },
    #[error("facet normals {first} and {second} span the same ray")]
    DuplicateNormal { first: usize, second: usize },
    #[error("cone is degenerate: the inequality system has empty interior")]
    EmptyInterior,
    #[error("face enumeration supports at most {max} facets, got {facets}")]
    CapacityExceeded { facets: usize, max: usize },
    #[error("cone is not good; {failing} face(s) fail the lattice-basis condition")]
    NotGood { failing: usize },
    #[error("pi_1 is not finite (free rank {free_rank}): input is not a good cone of Reeb type")]
    Pi1NotFinite { free_rank: usize },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the Reeb vector is not in the interior of the dual cone")]
    NotInterior,
    #[error("dual cone is not pointed; lineality dimension {}", lineality.len())]
    DualNotPointed { lineality: Vec<Vec<BigInt>> },
    #[error("polytope facet normal {index} is zero")]
    ZeroPolytopeNormal { index: usize },
    #[error("polytope facet label {index} must be a positive integer")]
    ZeroLabel { index: usize },
    #[error("polytope is unbounded")]
    UnboundedPolytope,
    #[error("polytope is empty or not full-dimensional")]
    PolytopeNotFullDimensional,
    #[error("lifted facet normals are not all primitive; labelled cone is an orbifold datum")]
    NonSmoothLift { non_primitive: Vec<usize> },
}

fn bigint_matrix_to_rows(rows: &[Vec<BigInt>]) -> Result<IntMatrix, LatticeError> {
    IntMatrix::from_rows(rows)
}

/// A rational polyhedral cone `{ y in R^(n+1) : <y, nu_i> >= 0 }` given by
/// inward primitive facet normals, validated to be full-dimensional with no
/// repeated rays among the normals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodCone {
    ambient_rank: usize,
    facet_normals: Vec<Vec<BigInt>>,
}

impl GoodCone {
    pub fn new(ambient_rank: usize, facet_normals: Vec<Vec<BigInt>>) -> Result<Self, ConeError> {
        if ambient_rank < 2 {
            return Err(ConeError::AmbientRankTooSmall(ambient_rank));
        }
        if facet_normals.is_empty() {
            return Err(ConeError::NoFacets);
        }
        for (i, nu) in facet_normals.iter().enumerate() {
            if nu.len() != ambient_rank {
                return Err(ConeError::WrongNormalLength {
                    index: i,
                    expected: ambient_rank,
                    got: nu.len(),
                });
            }
            if nu.iter().all(|x| x.is_zero()) {
                return Err(ConeError::ZeroNormal { index: i });
            }
            if !is_primitive(nu)? {
                return Err(ConeError::NonPrimitiveNormal { index: i });
            }
        }
        for i in 0..facet_normals.len() {
            for j in i + 1..facet_normals.len() {
                if facet_normals[i] == facet_normals[j] {
                    return Err(ConeError::DuplicateNormal {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let cone = GoodCone {
            ambient_rank,
            facet_normals,
        };
        if cone.rays().cone_dim() != ambient_rank {
            return Err(ConeError::EmptyInterior);
        }
        Ok(cone)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, ConeError> {
        let normals: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let rank = normals.first().map(|r| r.len()).unwrap_or(0);
        GoodCone::new(rank, normals)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// n+1 = ambient rank; n is the complex dimension of the base.
    pub fn n(&self) -> usize {
        self.ambient_rank - 1
    }

    pub fn facet_count(&self) -> usize {
        self.facet_normals.len()
    }

    pub fn facet_normals(&self) -> &[Vec<BigInt>] {
        &self.facet_normals
    }

    pub fn normal_matrix(&self) -> IntMatrix {
        bigint_matrix_to_rows(&self.facet_normals).expect("validated normals")
    }

    /// V-description of the cone itself (extreme rays and lineality).
    pub fn rays(&self) -> ConeDescription {
        double_description(self.ambient_rank, &self.facet_normals)
    }

    /// Applies a linear map to every facet normal; the result is validated.
    pub fn transform(&self, l: &IntMatrix) -> Result<GoodCone, ConeError> {
        let normals = self.facet_normals.iter().map(|nu| l.mul_vec(nu)).collect();
        GoodCone::new(self.ambient_rank, normals)
    }
}

/// One face that fails the goodness test, recorded by the set of facets
/// containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceFailure {
    pub facet_indices: Vec<usize>,
    pub codimension: usize,
    /// Diagonal of the Smith form of the face's normal matrix; the face is
    /// good exactly when this is all ones with full row count.
    pub smith_diagonal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub good: bool,
    pub failures: Vec<FaceFailure>,
}

/// Enumerates every proper face of codimension 1..=n (the apex is excluded)
/// and tests that the normals of the facets containing the face form a
/// Z-basis of the saturation of their span: the Smith normal form must be
/// square-free of ones, with as many ones as facets through the face.
pub fn check_good(cone: &GoodCone) -> Result<GoodnessReport, ConeError> {
    let n_facets = cone.facet_count();
    if n_facets > MAX_FACETS_FOR_FACE_ENUMERATION {
        return Err(ConeError::CapacityExceeded {
            facets: n_facets,
            max: MAX_FACETS_FOR_FACE_ENUMERATION,
        });
    }
    let ambient = cone.ambient_rank();
    let desc = cone.rays();
    if desc.cone_dim() != ambient {
        return Err(ConeError::EmptyInterior);
    }

    // Activity table: which facets each ray is tight on.
    let ray_active: Vec<BTreeSet<usize>> = desc
        .rays
        .iter()
        .map(|r| {
            (0..n_facets)
                .filter(|&i| dot_int(&cone.facet_normals[i], r).is_zero())
                .collect()
        })
        .collect();

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut failures = Vec::new();

    for mask in 1usize..(1 << n_facets) {
        let subset: Vec<usize> = (0..n_facets).filter(|i| mask & (1 << i) != 0).collect();
        // Rays of the face cut out by this facet subset.
        let face_rays: Vec<usize> = (0..desc.rays.len())
            .filter(|&r| subset.iter().all(|i| ray_active[r].contains(i)))
            .collect();
        // Full active set: all facets containing every ray of the face (and
        // the lineality, which is tight on every facet by construction).
        let active: Vec<usize> = (0..n_facets)
            .filter(|i| face_rays.iter().all(|&r| ray_active[r].contains(i)))
            .collect();
        if !seen.insert(active.clone()) {
            continue;
        }
        let mut span_rows: Vec<Vec<BigInt>> =
            face_rays.iter().map(|&r| desc.rays[r].clone()).collect();
        span_rows.extend(desc.lineality.iter().cloned());
        let face_dim = if span_rows.is_empty() {
            0
        } else {
            crate::rational::rank_int(&span_rows)
        };
        let codim = ambient - face_dim;
        if !(1..=ambient - 1).contains(&codim) {
            continue;
        }
        let rows: Vec<Vec<BigInt>> = active
            .iter()
            .map(|&i| cone.facet_normals[i].clone())
            .collect();
        let matrix = bigint_matrix_to_rows(&rows).expect("face has at least one facet");
        let snf = smith_normal_form(&matrix);
        let diag = snf.diagonal();
        // A Z-basis of the saturation: independent rows (rank = facet count)
        // and every invariant factor equal to one.
        let good_face =
            snf.rank() == active.len() && diag.iter().all(|d| d.is_zero() || d.is_one());
        if !good_face {
            failures.push(FaceFailure {
                facet_indices: active,
                codimension: codim,
                smith_diagonal: diag.iter().map(|d| d.to_string()).collect(),
            });
        }
    }

    failures.sort_by(|a, b| a.facet_indices.cmp(&b.facet_indices));
    Ok(GoodnessReport {
        good: failures.is_empty(),
        failures,
    })
}

/// Minimal generators of the dual cone `{ xi : <y, xi> >= 0 for all y in C }`,
/// primitive and sorted lexicographically. A non-pointed dual is reported as
/// an error carrying its lineality basis.
pub fn dual_cone(cone: &GoodCone) -> Result<Vec<Vec<BigInt>>, ConeError> {
    let desc = cone.rays();
    dual_of_description(&desc)
}

/// Dual of an arbitrary V-described cone; exposed for raw halfspace work.
pub fn dual_of_description(desc: &ConeDescription) -> Result<Vec<Vec<BigInt>>, ConeError> {
    let mut halfspaces: Vec<Vec<BigInt>> = desc.rays.clone();
    for l in &desc.lineality {
        halfspaces.push(l.clone());
        halfspaces.push(l.iter().map(|x| -x).collect());
    }
    let dual = double_description(desc.dim, &halfspaces);
    if !dual.lineality.is_empty() {
        return Err(ConeError::DualNotPointed {
            lineality: dual.lineality,
        });
    }
    let mut rays = dual.rays;
    rays.sort();
    Ok(rays)
}

/// Whether `xi` lies in the interior of the dual cone, i.e. pairs strictly
/// positively with every nonzero point of the cone.
pub fn interior_contains(cone: &GoodCone, xi: &[BigRational]) -> Result<bool, ConeError> {
    if xi.len() != cone.ambient_rank() {
        return Err(ConeError::DimensionMismatch {
            expected: cone.ambient_rank(),
            got: xi.len(),
        });
    }
    let desc = cone.rays();
    if !desc.lineality.is_empty() {
        return Ok(false);
    }
    Ok(desc.rays.iter().all(|r| dot_int_rat(r, xi).is_positive()))
}

/// The primitive lattice generator of the ray through a rational Reeb vector,
/// with the positive scale: `xi = scale * primitive`.
pub fn primitive_reeb(xi: &[BigRational]) -> Result<(Vec<BigInt>, BigRational), ConeError> {
    Ok(primitive_ray(xi)?)
}

/// A facet of a labelled polytope: `{ x : <x, normal> + offset >= 0 }` with a
/// positive integer label recording orbifold structure along the facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtFacet {
    pub normal: Vec<BigInt>,
    pub offset: BigRational,
    pub label: u64,
}

/// A full-dimensional bounded rational polytope with labelled facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtPolytope {
    ambient_rank: usize,
    facets: Vec<LtFacet>,
}

impl LtPolytope {
    pub fn new(ambient_rank: usize, facets: Vec<LtFacet>) -> Result<Self, ConeError> {
        if ambient_rank == 0 || facets.is_empty() {
            return Err(ConeError::PolytopeNotFullDimensional);
        }
        for (i, f) in facets.iter().enumerate() {
            if f.normal.len() != ambient_rank {
                return Err(ConeError::WrongNormalLength {
                    index: i,
                    expected: ambient_rank,
                    got: f.normal.len(),
                });
            }
            if f.normal.iter().all(|x| x.is_zero()) {
                return Err(ConeError::ZeroPolytopeNormal { index: i });
            }
            if !is_primitive(&f.normal)? {
                return Err(ConeError::NonPrimitiveNormal { index: i });
            }
            if f.label == 0 {
                return Err(ConeError::ZeroLabel { index: i });
            }
        }
        let poly = LtPolytope {
            ambient_rank,
            facets,
        };
        // Bounded iff the recession cone { x : <x, u_i> >= 0 } is trivial.
        let normals: Vec<Vec<BigInt>> = poly.facets.iter().map(|f| f.normal.clone()).collect();
        let recession = double_description(ambient_rank, &normals);
        if !(recession.rays.is_empty() && recession.lineality.is_empty()) {
            return Err(ConeError::UnboundedPolytope);
        }
        let verts = poly.vertices();
        if verts.is_empty() {
            return Err(ConeError::PolytopeNotFullDimensional);
        }
        // Full-dimensional iff the vertices affinely span R^n.
        let base = &verts[0];
        let diffs: Vec<Vec<BigRational>> = verts[1..]
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        if diffs.is_empty() || crate::rational::rank(&diffs) != ambient_rank {
            return Err(ConeError::PolytopeNotFullDimensional);
        }
        Ok(poly)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn facets(&self) -> &[LtFacet] {
        &self.facets
    }

    /// All vertices, found by solving every n-subset of facet equalities and
    /// filtering by membership; sorted lexicographically.
    pub fn vertices(&self) -> Vec<Vec<BigRational>> {
        let n = self.ambient_rank;
        let m = self.facets.len();
        let mut verts: Vec<Vec<BigRational>> = Vec::new();
        for mask in 0usize..(1 << m) {
            if (mask.count_ones() as usize) != n {
                continue;
            }
            let idx: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            let a: Vec<Vec<BigRational>> = idx
                .iter()
                .map(|&i| {
                    self.facets[i]
                        .normal
                        .iter()
                        .map(|x| BigRational::from_integer(x.clone()))
                        .collect()
                })
                .collect();
            let b: Vec<BigRational> = idx
                .iter()
                .map(|&i| -self.facets[i].offset.clone())
                .collect();
            let Some(x) = crate::rational::solve_square(&a, &b) else {
                continue;
            };
            let feasible = self
                .facets
                .iter()
                .all(|f| (dot_int_rat(&f.normal, &x) + &f.offset) >= BigRational::zero());
            if feasible && !verts.contains(&x) {
                verts.push(x);
            }
        }
        verts.sort();
        verts
    }

    /// The rectangle `[0,a] x [0,b]` with unit labels, in the facet order
    /// (x1 >= 0, a - x1 >= 0, x2 >= 0, b - x2 >= 0).
    pub fn rectangle(a: u64, b: u64) -> LtPolytope {
        let f = |normal: Vec<i64>, offset: i64| LtFacet {
            normal: normal.into_iter().map(BigInt::from).collect(),
            offset: BigRational::from_integer(BigInt::from(offset)),
            label: 1,
        };
        LtPolytope::new(
            2,
            vec![
                f(vec![1, 0], 0),
                f(vec![-1, 0], a as i64),
                f(vec![0, 1], 0),
                f(vec![0, -1], b as i64),
            ],
        )
        .expect("rectangle with positive sides is a valid polytope")
    }

    /// Scales the polytope by a positive integer: offsets multiply, normals
    /// and labels stay.
    pub fn scale(&self, k: u64) -> LtPolytope {
        let k = BigRational::from_integer(BigInt::from(k));
        let facets = self
            .facets
            .iter()
            .map(|f| LtFacet {
                normal: f.normal.clone(),
                offset: &f.offset * &k,
                label: f.label,
            })
            .collect();
        LtPolytope {
            ambient_rank: self.ambient_rank,
            facets,
        }
    }

    /// Cartesian product; facets of each factor extended by zeros.
    pub fn product(&self, other: &LtPolytope) -> LtPolytope {
        let n1 = self.ambient_rank;
        let n2 = other.ambient_rank;
        let mut facets = Vec::new();
        for f in &self.facets {
            let mut normal = f.normal.clone();
            normal.extend(std::iter::repeat_n(BigInt::zero(), n2));
            facets.push(LtFacet {
                normal,
                offset: f.offset.clone(),
                label: f.label,
            });
        }
        for f in &other.facets {
            let mut normal = vec![BigInt::zero(); n1];
            normal.extend(f.normal.iter().cloned());
            facets.push(LtFacet {
                normal,
                offset: f.offset.clone(),
                label: f.label,
            });
        }
        LtPolytope {
            ambient_rank: n1 + n2,
            facets,
        }
    }
}

/// The cone over a labelled polytope before smoothness is known: lifted
/// normals `m_i * primitive(u_i, c_i)` and the indices where the label made
/// the lift imprimitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeLift {
    pub ambient_rank: usize,
    pub normals: Vec<Vec<BigInt>>,
    pub non_primitive: Vec<usize>,
}

impl PolytopeLift {
    pub fn is_smooth_lift(&self) -> bool {
        self.non_primitive.is_empty()
    }

    /// Converts to a validated cone; fails when some lifted normal is not
    /// primitive (the labelled datum describes an orbifold, not a manifold).
    pub fn into_cone(self) -> Result<GoodCone, ConeError> {
        if !self.non_primitive.is_empty() {
            return Err(ConeError::NonSmoothLift {
                non_primitive: self.non_primitive,
            });
        }
        GoodCone::new(self.ambient_rank, self.normals)
    }
}

/// Embeds the polytope at height one and lifts each labelled facet
/// `(u_i, c_i, m_i)` to the integer vector `m_i * primitive(u_i, c_i)`.
pub fn cone_over_polytope(p: &LtPolytope) -> PolytopeLift {
    let mut normals = Vec::new();
    let mut non_primitive = Vec::new();
    for (i, f) in p.facets().iter().enumerate() {
        let mut lifted: Vec<BigRational> = f
            .normal
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        lifted.push(f.offset.clone());
        let (prim, _) = primitive_ray(&lifted).expect("facet normals are nonzero");
        let label = BigInt::from(f.label);
        let scaled: Vec<BigInt> = prim.iter().map(|x| x * &label).collect();
        if f.label > 1 {
            non_primitive.push(i);
        }
        normals.push(scaled);
    }
    PolytopeLift {
        ambient_rank: p.ambient_rank() + 1,
        normals,
        non_primitive,
    }
}

/// The polytope `C ∩ { <y, xi> = 1 }` for an interior Reeb vector, as a
/// lexicographically sorted vertex list plus a simplicity flag (each vertex
/// on exactly n facets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReebSlice {
    pub vertices: Vec<Vec<BigRational>>,
    pub simple: bool,
}

pub fn reeb_slice(cone: &GoodCone, xi: &[BigRational]) -> Result<ReebSlice, ConeError> {
    if !interior_contains(cone, xi)? {
        return Err(ConeError::NotInterior);
    }
    let ambient = cone.ambient_rank();
    let n = ambient - 1;
    let m = cone.facet_count();
    let mut vertices: Vec<Vec<BigRational>> = Vec::new();
    for mask in 0usize..(1 << m) {
        if (mask.count_ones() as usize) != n {
            continue;
        }
        let idx: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let mut a: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&i| {
                cone.facet_normals[i]
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        a.push(xi.to_vec());
        let mut b = vec![BigRational::zero(); n];
        b.push(BigRational::one());
        let Some(y) = crate::rational::solve_square(&a, &b) else {
            continue;
        };
        let feasible = cone
            .facet_normals
            .iter()
            .all(|nu| !dot_int_rat(nu, &y).is_negative());
        if feasible && !vertices.contains(&y) {
            vertices.push(y);
        }
    }
    vertices.sort();
    let simple = vertices.iter().all(|v| {
        let tight = cone
            .facet_normals
            .iter()
            .filter(|nu| dot_int_rat(nu, v).is_zero())
            .count();
        tight == n
    });
    Ok(ReebSlice { vertices, simple })
}

/// Topological invariants read off a good cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeInvariants {
    pub facet_count: usize,
    pub pi1: AbelianGroupStructure,
    pub pi2_rank: i64,
    /// Odd-degree Betti numbers vanish through half the dimension for every
    /// such manifold; carried as a census note.
    pub odd_betti_vanish: bool,
}

pub fn cone_invariants(cone: &GoodCone) -> Result<ConeInvariants, ConeError> {
    let report = check_good(cone)?;
    if !report.good {
        return Err(ConeError::NotGood {
            failing: report.failures.len(),
        });
    }
    let pi1 = quotient_group(&cone.normal_matrix(), cone.ambient_rank())?;
    if pi1.free_rank > 0 {
        return Err(ConeError::Pi1NotFinite {
            free_rank: pi1.free_rank,
        });
    }
    let facet_count = cone.facet_count();
    let pi2_rank = facet_count as i64 - cone.ambient_rank() as i64;
    Ok(ConeInvariants {
        facet_count,
        pi1,
        pi2_rank,
        odd_betti_vanish: true,
    })
}

// ---------------------------------------------------------------------------
// JSON schemas. Big integers are accepted as JSON numbers or decimal strings
// and always emitted as decimal strings; rationals travel as "p/q".
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NumberOrString {
    Number(i64),
    String(String),
}

impl NumberOrString {
    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            NumberOrString::Number(n) => Ok(BigInt::from(*n)),
            NumberOrString::String(s) => {
                BigInt::from_str(s.trim()).map_err(|_| format!("bad integer `{s}`"))
            }
        }
    }

    fn to_rational(&self) -> Result<BigRational, String> {
        match self {
            NumberOrString::Number(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            NumberOrString::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GoodConeRaw {
    ambient_rank: usize,
    facet_normals: Vec<Vec<NumberOrString>>,
}

impl Serialize for GoodCone {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = GoodConeRaw {
            ambient_rank: self.ambient_rank,
            facet_normals: self
                .facet_normals
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| NumberOrString::String(x.to_string()))
                        .collect()
                })
                .collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GoodCone {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GoodConeRaw::deserialize(deserializer)?;
        let normals: Result<Vec<Vec<BigInt>>, String> = raw
            .facet_normals
            .iter()
            .map(|row| row.iter().map(|x| x.to_bigint()).collect())
            .collect();
        let normals = normals.map_err(D::Error::custom)?;
        GoodCone::new(raw.ambient_rank, normals).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct LtFacetRaw {
    normal: Vec<NumberOrString>,
    offset: NumberOrString,
    label: u64,
}

#[derive(Serialize, Deserialize)]
struct LtPolytopeRaw {
    ambient_rank: usize,
    facets: Vec<LtFacetRaw>,
}

impl Serialize for LtPolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = LtPolytopeRaw {
            ambient_rank: self.ambient_rank,
            facets: self
                .facets
                .iter()
                .map(|f| LtFacetRaw {
                    normal: f
                        .normal
                        .iter()
                        .map(|x| NumberOrString::String(x.to_string()))
                        .collect(),
                    offset: NumberOrString::String(format_rational(&f.offset)),
                    label: f.label,
                })
                .collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LtPolytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = LtPolytopeRaw::deserialize(deserializer)?;
        let mut facets = Vec::with_capacity(raw.facets.len());
        for f in &raw.facets {
            let normal: Result<Vec<BigInt>, String> =
                f.normal.iter().map(|x| x.to_bigint()).collect();
            facets.push(LtFacet {
                normal: normal.map_err(D::Error::custom)?,
                offset: f.offset.to_rational().map_err(D::Error::custom)?,
                label: f.label,
            });
        }
        LtPolytope::new(raw.ambient_rank, facets).map_err(D::Error::custom)
    }
}
