//! Exact polyhedral cones: double description for {y : A y ≥ 0}, membership,
//! and canonical ray lists.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    dot, nonneg_solution, primitive, primitive_from_rat, rat_inverse, rat_rank, IntMatrix, Int,
    Rat,
};

/// Primitive generating rays of the pointed cone {y : a y ≥ 0}, canonically sorted.
/// Fails with `DegenerateCone` when the cone has a lineality space.
pub fn extreme_rays(a: &IntMatrix) -> Result<Vec<Vec<Int>>> {
    let dim = a.cols();
    let rows = a.row_vecs();
    let rat_rows = a.to_rat_rows();
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<Rat>> = basis.iter().map(|&k| rat_rows[k].clone()).collect();
        trial.push(rat_rows[i].clone());
        if rat_rank(&trial) == trial.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::DegenerateCone("inequalities do not cut out a pointed cone".into()));
    }
    // initial simplicial cone: columns of B^{-1}
    let b: Vec<Vec<Rat>> = basis.iter().map(|&k| rat_rows[k].clone()).collect();
    let inv = rat_inverse(&b).expect("independent rows");
    let mut rays: Vec<Vec<Int>> = (0..dim)
        .map(|j| primitive_from_rat(&inv.iter().map(|row| row[j].clone()).collect::<Vec<_>>()))
        .collect();
    let mut processed: Vec<Vec<Int>> = basis.iter().map(|&k| rows[k].clone()).collect();
    for (i, row) in rows.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(row, r)).collect();
        let mut next: Vec<Vec<Int>> = Vec::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (p, vp) in rays.iter().zip(&vals) {
            if !vp.is_positive() {
                continue;
            }
            for (n, vn) in rays.iter().zip(&vals) {
                if !vn.is_negative() || !adjacent(&processed, p, n, dim) {
                    continue;
                }
                let comb: Vec<Int> =
                    n.iter().zip(p).map(|(x, y)| vp * x - vn * y).collect();
                next.push(primitive(&comb));
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(row.clone());
    }
    rays.sort();
    Ok(rays)
}

fn adjacent(constraints: &[Vec<Int>], p: &[Int], n: &[Int], dim: usize) -> bool {
    let tight: Vec<Vec<Rat>> = constraints
        .iter()
        .filter(|c| dot(c, p).is_zero() && dot(c, n).is_zero())
        .map(|c| c.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    dim >= 2 && rat_rank(&tight) == dim - 2
}

/// Is `v` a nonnegative combination of the given generators?
pub fn in_cone(generators: &[Vec<Int>], v: &[Int]) -> bool {
    if generators.is_empty() {
        return v.iter().all(|x| x.is_zero());
    }
    let m = IntMatrix::from_columns(generators, v.len());
    nonneg_solution(&m, v).is_some()
}

/// Is `v` in the relative interior of the cone spanned by the generators (full-dimensional case)?
pub fn in_interior(generators: &[Vec<Int>], v: &[Int]) -> bool {
    let dim = v.len();
    let m = IntMatrix::from_columns(generators, dim);
    if m.rank() < dim {
        return false;
    }
    // interior iff strictly inside every facet: test via the facet normals
    match facet_normals(generators, dim) {
        Ok(normals) => normals.iter().all(|n| dot(n, v).is_positive()),
        Err(_) => false,
    }
}

/// Inner facet normals of a full-dimensional pointed cone given by generators.
pub fn facet_normals(generators: &[Vec<Int>], dim: usize) -> Result<Vec<Vec<Int>>> {
    let rows = generators.to_vec();
    extreme_rays(&IntMatrix::from_rows_with_cols(rows, dim))
}

/// Canonical form of a cone given by generators: its primitive extreme rays, sorted.
pub fn canonical_rays(generators: &[Vec<Int>], dim: usize) -> Result<Vec<Vec<Int>>> {
    let normals = facet_normals(generators, dim)?;
    extreme_rays(&IntMatrix::from_rows_with_cols(normals, dim))
}

pub fn same_cone(a: &[Vec<Int>], b: &[Vec<Int>], dim: usize) -> bool {
    match (canonical_rays(a, dim), canonical_rays(b, dim)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;

    fn vv(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn quadrant() {
        let a = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(extreme_rays(&a).unwrap(), vv(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn square_cone_in_3d() {
        // cone over a square: z ≥ |x|, z ≥ |y|
        let a = IntMatrix::from_i64(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]);
        let rays = extreme_rays(&a).unwrap();
        assert_eq!(rays, vv(&[&[-1, -1, 1], &[-1, 1, 1], &[1, -1, 1], &[1, 1, 1]]));
    }

    #[test]
    fn redundant_inequality() {
        let a = IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(extreme_rays(&a).unwrap(), vv(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn lineality_rejected() {
        let a = IntMatrix::from_i64(&[&[1, 0]]);
        assert!(extreme_rays(&a).is_err());
    }

    #[test]
    fn membership() {
        let g = vv(&[&[1, 0], &[1, 2]]);
        assert!(in_cone(&g, &[int(2), int(1)]));
        assert!(!in_cone(&g, &[int(0), int(1)]));
        assert!(in_interior(&g, &[int(2), int(1)]));
        assert!(!in_interior(&g, &[int(1), int(0)]));
        assert!(same_cone(&vv(&[&[2, 1], &[1, 2], &[3, 3]]), &vv(&[&[1, 2], &[2, 1]]), 2));
    }
}
