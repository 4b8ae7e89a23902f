//! GL(n+1,Z)-equivalence of good cones.
//!
//! Two cones are equivalent when a unimodular map carries one facet-normal
//! set onto the other. The normals act as vectors, so the unimodular group
//! acts on the columns of the N x (n+1) normal matrix; the Hermite normal
//! form of the transpose cancels that action, and minimising over facet
//! permutations cancels the row order. The resulting matrix is a complete
//! invariant of the equivalence class.

use num_bigint::BigInt;
use thiserror::Error;

use crate::cone::{check_good, cone_invariants, ConeError, GoodCone};
use crate::lattice::{hermite_normal_form, IntMatrix};

/// Permutation search is N! in the worst case; 8 facets keep it at 40,320
/// Hermite reductions.
pub const MAX_FACETS_FOR_CANONICAL_FORM: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivError {
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("canonical form supports at most {max} facets, got {facets}")]
    CapacityExceeded { facets: usize, max: usize },
    #[error("cone is not good; canonical forms are defined for good cones only")]
    NotGood,
    #[error("ambient ranks differ: {0} vs {1}")]
    AmbientRankMismatch(usize, usize),
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn lex_less(a: &IntMatrix, b: &IntMatrix) -> bool {
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            match a.get(r, c).cmp(b.get(r, c)) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    false
}

fn guard(cone: &GoodCone) -> Result<(), EquivError> {
    if cone.facet_count() > MAX_FACETS_FOR_CANONICAL_FORM {
        return Err(EquivError::CapacityExceeded {
            facets: cone.facet_count(),
            max: MAX_FACETS_FOR_CANONICAL_FORM,
        });
    }
    if !check_good(cone)?.good {
        return Err(EquivError::NotGood);
    }
    Ok(())
}

struct Canonicalisation {
    /// The canonical matrix: lexicographic minimum of hnf((P M)^T) over
    /// facet permutations P.
    key: IntMatrix,
    /// The unimodular row transform realising it: key = u * (P M)^T.
    u: IntMatrix,
}

fn canonicalise(cone: &GoodCone) -> Canonicalisation {
    let normals = cone.facet_normals();
    let mut best: Option<Canonicalisation> = None;
    for perm in permutations(normals.len()) {
        let permuted: Vec<Vec<BigInt>> = perm.iter().map(|&i| normals[i].clone()).collect();
        let m = IntMatrix::from_rows(&permuted).expect("nonempty normal set");
        let hnf = hermite_normal_form(&m.transpose());
        let candidate = Canonicalisation {
            key: hnf.h,
            u: hnf.u,
        };
        let better = match &best {
            None => true,
            Some(b) => lex_less(&candidate.key, &b.key),
        };
        if better {
            best = Some(candidate);
        }
    }
    best.expect("at least one permutation")
}

/// Canonical form: equal matrices exactly when the cones differ by a
/// unimodular transformation together with a facet relabelling.
pub fn canonical_form(cone: &GoodCone) -> Result<IntMatrix, EquivError> {
    guard(cone)?;
    Ok(canonicalise(cone).key)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// When equivalent: a unimodular `L` with `{L nu : nu in c1} = c2` as
    /// sets, verified exactly before being returned.
    pub witness: Option<IntMatrix>,
}

pub fn are_equivalent(c1: &GoodCone, c2: &GoodCone) -> Result<Equivalence, EquivError> {
    if c1.ambient_rank() != c2.ambient_rank() {
        return Err(EquivError::AmbientRankMismatch(
            c1.ambient_rank(),
            c2.ambient_rank(),
        ));
    }
    guard(c1)?;
    guard(c2)?;
    if c1.facet_count() != c2.facet_count() {
        return Ok(Equivalence {
            equivalent: false,
            witness: None,
        });
    }
    // Invariants are preserved by unimodular maps, so a mismatch settles
    // inequivalence without the permutation search.
    let i1 = cone_invariants(c1)?;
    let i2 = cone_invariants(c2)?;
    if i1.pi1 != i2.pi1 || i1.pi2_rank != i2.pi2_rank {
        return Ok(Equivalence {
            equivalent: false,
            witness: None,
        });
    }

    let a = canonicalise(c1);
    let b = canonicalise(c2);
    if a.key != b.key {
        return Ok(Equivalence {
            equivalent: false,
            witness: None,
        });
    }
    // key = u1 (P1 M1)^T = u2 (P2 M2)^T, so M2^T = u2^{-1} u1 M1^T P for a
    // permutation P; the witness acting on normal vectors is L = u2^{-1} u1.
    let u2_inv =
        b.u.unimodular_inverse()
            .expect("hnf transform is unimodular");
    let l = u2_inv.mul(&a.u);
    debug_assert!(l.is_unimodular());
    let mut image: Vec<Vec<BigInt>> = c1.facet_normals().iter().map(|nu| l.mul_vec(nu)).collect();
    let mut target: Vec<Vec<BigInt>> = c2.facet_normals().to_vec();
    image.sort();
    target.sort();
    assert_eq!(image, target, "canonical forms agree but witness failed");
    Ok(Equivalence {
        equivalent: true,
        witness: Some(l),
    })
}
