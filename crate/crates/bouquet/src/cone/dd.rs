//! Double description at desk scale: converts a halfspace description
//! `{ y : <a_i, y> >= 0 }` into minimal generators (extreme rays modulo
//! lineality) with exact integer arithmetic.
//!
//! The insertion order is the input order and tie-breaking is positional, so
//! the output is deterministic; callers sort when they need a canonical list.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

use crate::lattice::primitive_part;
use crate::rational::dot_int;

/// V-description of a polyhedral cone: `cone(rays) + span(lineality)`.
#[derive(Debug, Clone)]
pub struct ConeDescription {
    pub dim: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

impl ConeDescription {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the cone as a convex set: rank of rays and lineality.
    pub fn cone_dim(&self) -> usize {
        let mut rows: Vec<Vec<BigInt>> = self.rays.clone();
        rows.extend(self.lineality.iter().cloned());
        if rows.is_empty() {
            0
        } else {
            crate::rational::rank_int(&rows)
        }
    }
}

#[derive(Debug, Clone)]
struct Ray {
    v: Vec<BigInt>,
    /// Indices of processed constraints this ray is tight on.
    active: BTreeSet<usize>,
}

fn reduce(v: &[BigInt]) -> Vec<BigInt> {
    primitive_part(v).expect("ray vectors are nonzero").0
}

/// Runs double description on `{ y in R^dim : <h, y> >= 0 for h in halfspaces }`.
/// Zero halfspace rows are ignored.
pub fn double_description(dim: usize, halfspaces: &[Vec<BigInt>]) -> ConeDescription {
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (t, a) in halfspaces.iter().enumerate() {
        assert_eq!(a.len(), dim, "halfspace dimension mismatch");
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }

        let pivot = lineality.iter().position(|l| !dot_int(a, l).is_zero());
        if let Some(p) = pivot {
            // Split the lineality: one basis vector becomes a ray on the
            // positive side, the rest are projected into the hyperplane.
            let mut l0 = lineality.remove(p);
            if dot_int(a, &l0).is_negative() {
                for x in &mut l0 {
                    *x = -&*x;
                }
            }
            let s0 = dot_int(a, &l0);
            for l in &mut lineality {
                let s = dot_int(a, l);
                if !s.is_zero() {
                    let combo: Vec<BigInt> =
                        l.iter().zip(&l0).map(|(x, y)| &s0 * x - &s * y).collect();
                    *l = reduce(&combo);
                }
            }
            for r in &mut rays {
                let s = dot_int(a, &r.v);
                if !s.is_zero() {
                    let combo: Vec<BigInt> =
                        r.v.iter().zip(&l0).map(|(x, y)| &s0 * x - &s * y).collect();
                    // Scaling by s0 > 0 and shifting along l0 preserves the
                    // sign pattern on processed constraints (l0 is orthogonal
                    // to all of them), so the active set is unchanged.
                    r.v = reduce(&combo);
                }
                r.active.insert(t);
            }
            rays.push(Ray {
                v: l0,
                active: (0..t).collect(),
            });
            continue;
        }

        // Lineality is inside the hyperplane; classify existing rays.
        let evals: Vec<BigInt> = rays.iter().map(|r| dot_int(a, &r.v)).collect();
        let mut new_rays: Vec<Ray> = Vec::new();
        for (i, ri) in rays.iter().enumerate() {
            if !evals[i].is_positive() {
                continue;
            }
            for (j, rj) in rays.iter().enumerate() {
                if !evals[j].is_negative() {
                    continue;
                }
                let shared: BTreeSet<usize> = ri.active.intersection(&rj.active).copied().collect();
                // Combinatorial adjacency: no third ray is tight on every
                // constraint both of these are tight on.
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, rk)| k == i || k == j || !shared.is_subset(&rk.active));
                if !adjacent {
                    continue;
                }
                let (si, sj) = (&evals[i], &evals[j]);
                let combo: Vec<BigInt> =
                    ri.v.iter()
                        .zip(&rj.v)
                        .map(|(x, y)| si * y - sj * x)
                        .collect();
                let mut active = shared;
                active.insert(t);
                new_rays.push(Ray {
                    v: reduce(&combo),
                    active,
                });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, mut r) in rays.into_iter().enumerate() {
            if evals[i].is_zero() {
                r.active.insert(t);
                kept.push(r);
            } else if evals[i].is_positive() {
                kept.push(r);
            }
        }
        kept.extend(new_rays);
        rays = kept;
    }

    ConeDescription {
        dim,
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn orthant_is_self_described() {
        let desc = double_description(3, &big_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(desc.is_pointed());
        assert_eq!(
            sorted(desc.rays),
            big_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
        );
    }

    #[test]
    fn halfspace_keeps_lineality() {
        let desc = double_description(2, &big_rows(&[&[1, 0]]));
        assert_eq!(desc.rays, big_rows(&[&[1, 0]]));
        assert_eq!(desc.lineality.len(), 1);
        assert_eq!(desc.lineality[0], big_rows(&[&[0, 1]])[0]);
        assert_eq!(desc.cone_dim(), 2);
    }

    #[test]
    fn lens_cone_rays() {
        // { y : y1 >= 0, -y1 + 3 y2 >= 0 } has extreme rays (0,1) and (3,1).
        let desc = double_description(2, &big_rows(&[&[1, 0], &[-1, 3]]));
        assert!(desc.is_pointed());
        assert_eq!(sorted(desc.rays), big_rows(&[&[0, 1], &[3, 1]]));
    }

    #[test]
    fn sphere_join_cone_rays() {
        // Rectangle cone over [0,2] x [0,3]: rays through the four corners
        // lifted to height one.
        let desc = double_description(
            3,
            &big_rows(&[&[1, 0, 0], &[-1, 0, 2], &[0, 1, 0], &[0, -1, 3]]),
        );
        assert!(desc.is_pointed());
        assert_eq!(
            sorted(desc.rays),
            big_rows(&[&[0, 0, 1], &[0, 3, 1], &[2, 0, 1], &[2, 3, 1]])
        );
    }

    #[test]
    fn infeasible_strict_interior_detected_by_rank() {
        // A slab degenerates to a line: lineality survives, no rays.
        let desc = double_description(2, &big_rows(&[&[1, 0], &[-1, 0]]));
        assert!(desc.rays.is_empty());
        assert_eq!(desc.lineality, big_rows(&[&[0, 1]]));
        assert_eq!(desc.cone_dim(), 1);
    }

    /// Brute-force oracle: a candidate extreme ray of the cone is the solution
    /// of dim-1 tight constraints; filter by feasibility and extremality.
    fn brute_force_rays(dim: usize, halfspaces: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        use num_rational::BigRational;
        let n = halfspaces.len();
        let mut out: Vec<Vec<BigInt>> = Vec::new();
        let subset_count = 1usize << n;
        for mask in 0..subset_count {
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if idx.len() != dim - 1 {
                continue;
            }
            let rows: Vec<Vec<BigRational>> = idx
                .iter()
                .map(|&i| {
                    halfspaces[i]
                        .iter()
                        .map(|x| BigRational::from_integer(x.clone()))
                        .collect()
                })
                .collect();
            if crate::rational::rank(&rows) != dim - 1 {
                continue;
            }
            // Find an integer kernel vector by extending to a square system.
            for target in 0..dim {
                let mut sys = rows.clone();
                let mut e = vec![BigRational::from_integer(BigInt::zero()); dim];
                e[target] = BigRational::from_integer(BigInt::from(1));
                sys.push(e.clone());
                let rhs: Vec<BigRational> = (0..dim)
                    .map(|i| {
                        if i == dim - 1 {
                            BigRational::from_integer(BigInt::from(1))
                        } else {
                            BigRational::from_integer(BigInt::zero())
                        }
                    })
                    .collect();
                if let Some(sol) = crate::rational::solve_square(&sys, &rhs) {
                    for sign in [1i64, -1] {
                        let scaled: Vec<BigRational> = sol
                            .iter()
                            .map(|x| x * BigRational::from_integer(BigInt::from(sign)))
                            .collect();
                        if let Ok((prim, _)) = crate::rational::primitive_ray(&scaled) {
                            let feasible =
                                halfspaces.iter().all(|h| !dot_int(h, &prim).is_negative());
                            let tight = halfspaces
                                .iter()
                                .filter(|h| dot_int(h, &prim).is_zero())
                                .cloned()
                                .collect::<Vec<_>>();
                            let extreme =
                                !tight.is_empty() && crate::rational::rank_int(&tight) == dim - 1;
                            if feasible && extreme && !out.contains(&prim) {
                                out.push(prim);
                            }
                        }
                    }
                    break;
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_on_assorted_cones() {
        let cases: Vec<Vec<Vec<BigInt>>> = vec![
            big_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            big_rows(&[&[1, 0, 0], &[-1, 0, 1], &[0, 1, 0], &[0, -1, 1]]),
            big_rows(&[&[1, 0, 0], &[-1, 0, 7], &[0, 1, 0], &[0, -1, 2]]),
            big_rows(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 1]]),
            big_rows(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 1], &[0, 0, 1], &[1, 1, -1]]),
        ];
        for halfspaces in cases {
            let desc = double_description(3, &halfspaces);
            assert!(desc.is_pointed());
            assert_eq!(
                sorted(desc.rays.clone()),
                brute_force_rays(3, &halfspaces),
                "mismatch for {halfspaces:?}"
            );
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(96))]

        /// Random full-dimensional pointed cones in 3-space agree with the
        /// brute-force facet-intersection oracle.
        #[test]
        fn matches_brute_force_on_random_cones(
            raw in proptest::collection::vec(
                proptest::collection::vec(-4i64..=4, 3),
                3..=6,
            ),
        ) {
            let halfspaces: Vec<Vec<BigInt>> = raw
                .iter()
                .filter(|row| row.iter().any(|&x| x != 0))
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            proptest::prop_assume!(halfspaces.len() >= 3);
            let desc = double_description(3, &halfspaces);
            // Only compare on pointed full-dimensional instances, where the
            // oracle's extremality test is valid.
            proptest::prop_assume!(desc.is_pointed());
            proptest::prop_assume!(desc.cone_dim() == 3);
            proptest::prop_assert_eq!(
                sorted(desc.rays.clone()),
                brute_force_rays(3, &halfspaces)
            );
        }
    }
}
