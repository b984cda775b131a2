//! Weight matrices as GIT presentations of simplicial toric varieties:
//! standardness, well-forming, chambers, irrelevant ideals, fans, and charts.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::{extreme_rays, in_cone};
use crate::error::{Error, Result};
use crate::lattice::{
    cokernel, gcd_of_minors, has_nonneg_kernel, int, kernel_basis,
    primitive_from_rat, rat_inverse, smith_normal_form, subsets, AbelianGroup, Int, IntMatrix,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    pub d: IntMatrix,
    pub labels: Vec<String>,
}

impl WeightMatrix {
    pub fn new(d: IntMatrix) -> Self {
        let labels = (0..d.cols()).map(|i| format!("x{}", i)).collect();
        WeightMatrix { d, labels }
    }

    pub fn with_labels(d: IntMatrix, labels: Vec<String>) -> Result<Self> {
        if labels.len() != d.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} columns",
                labels.len(),
                d.cols()
            )));
        }
        Ok(WeightMatrix { d, labels })
    }

    /// Columns span a strictly convex, full-dimensional cone.
    pub fn check(&self) -> Result<()> {
        if self.d.rank() < self.d.rows() {
            return Err(Error::DegenerateCone("weight matrix does not have full row rank".into()));
        }
        if has_nonneg_kernel(&self.d) {
            return Err(Error::NonConvexCone);
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.d.rows()
    }

    pub fn len(&self) -> usize {
        self.d.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.d.cols() == 0
    }

    /// Class of -K: the sum of the columns.
    pub fn anticanonical(&self) -> Vec<Int> {
        (0..self.d.rows()).map(|i| self.d.row(i).iter().sum()).collect()
    }
}

/// An open chamber of the secondary fan, by the primitive rays of its closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub rays: Vec<Vec<Int>>,
}

impl Chamber {
    pub fn contains(&self, v: &[Int]) -> bool {
        in_cone(&self.rays, v)
    }

    /// Cone equality against a generator list given up to order and scaling.
    pub fn equals_cone(&self, generators: &[Vec<Int>]) -> bool {
        let dim = self.rays.first().map_or(0, |r| r.len());
        crate::cone::same_cone(&self.rays, generators, dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chart {
    pub pivots: Vec<usize>,
    pub stabilizer: AbelianGroup,
    /// (coordinate, class in the stabilizer) for each non-pivot coordinate
    pub residual: Vec<(usize, Vec<Int>)>,
}

impl Chart {
    /// For cyclic stabilizers: order and normalized weights on the non-pivot coordinates.
    pub fn cyclic_weights(&self) -> Option<(Int, Vec<Int>)> {
        if !self.stabilizer.is_finite() || self.stabilizer.invariant_factors.len() > 1 {
            return None;
        }
        let Some(n) = self.stabilizer.invariant_factors.first().cloned() else {
            return Some((Int::one(), vec![Int::zero(); self.residual.len()]));
        };
        let w: Vec<Int> = self.residual.iter().map(|(_, c)| c[0].clone()).collect();
        Some((n.clone(), normalize_cyclic_weights(&w, &n)))
    }
}

/// Lexicographically smallest representative of the weights under unit rescaling.
pub fn normalize_cyclic_weights(w: &[Int], n: &Int) -> Vec<Int> {
    let mut best: Vec<Int> = w.iter().map(|x| x.mod_floor(n)).collect();
    let mut u = int(2);
    while &u < n {
        if u.gcd(n).is_one() {
            let cand: Vec<Int> = w.iter().map(|x| (x * &u).mod_floor(n)).collect();
            if cand < best {
                best = cand;
            }
        }
        u += 1;
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFan {
    pub m: usize,
    /// maximal cones as sorted ray-index sets
    pub cones: Vec<Vec<usize>>,
    /// row i is the ray of coordinate i
    pub rays: IntMatrix,
}

/// gcd of the maximal minors is 1.
pub fn is_standard(d: &IntMatrix) -> bool {
    gcd_of_minors(d, d.rows()).is_one()
}

/// Standard, and standard after removing any column whose divisor can be nonempty.
/// A column whose removal drops the rank cuts out a divisor lying in every
/// unstable locus, so its faithfulness condition is vacuous.
pub fn is_wellformed(d: &IntMatrix) -> bool {
    if !is_standard(d) {
        return false;
    }
    (0..d.cols()).all(|i| {
        let rest = drop_column(d, i);
        rest.rank() < d.rows() || is_standard(&rest)
    })
}

fn drop_column(d: &IntMatrix, i: usize) -> IntMatrix {
    let keep: Vec<usize> = (0..d.cols()).filter(|&j| j != i).collect();
    d.select_columns(&keep)
}

/// Express the columns of `d` (and `extra` vectors) in a basis of the lattice spanned by `gens`.
fn rebase(gens: &IntMatrix, d: &IntMatrix, extra: &[Vec<Int>]) -> Result<(IntMatrix, Vec<Vec<Int>>)> {
    let snf = smith_normal_form(gens);
    let diag = snf.diagonal();
    let r = diag.len();
    let express = |v: &[Int]| -> Result<Vec<Int>> {
        let uv = snf.u.mul_vec(v);
        if uv[r..].iter().any(|x| !x.is_zero()) {
            return Err(Error::Invalid("vector outside the span of the weight lattice".into()));
        }
        (0..r)
            .map(|i| {
                if uv[i].is_multiple_of(&diag[i]) {
                    Ok(&uv[i] / &diag[i])
                } else {
                    Err(Error::Invalid("class does not descend to the well-formed quotient".into()))
                }
            })
            .collect()
    };
    let cols: Vec<Vec<Int>> = d.columns().iter().map(|c| express(c)).collect::<Result<_>>()?;
    let extra: Vec<Vec<Int>> = extra.iter().map(|c| express(c)).collect::<Result<_>>()?;
    Ok((IntMatrix::from_columns(&cols, r), extra))
}

/// Row Hermite normal form under unimodular row operations, applied to `d` and `extra` alike.
fn row_hnf(d: &IntMatrix, extra: &[Vec<Int>]) -> (IntMatrix, Vec<Vec<Int>>) {
    let rows = d.rows();
    let width = d.cols() + extra.len();
    let mut a: Vec<Vec<Int>> = (0..rows)
        .map(|i| {
            let mut r = d.row(i).to_vec();
            r.extend(extra.iter().map(|e| e[i].clone()));
            r
        })
        .collect();
    let mut t = 0;
    for c in 0..d.cols() {
        if t == rows {
            break;
        }
        loop {
            let nz: Vec<usize> = (t..rows).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(t, p);
            let mut done = true;
            for i in t + 1..rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[t][c]);
                for j in 0..width {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[t][c].is_zero() {
            continue;
        }
        if a[t][c].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..t {
            let q = a[i][c].div_floor(&a[t][c]);
            if q.is_zero() {
                continue;
            }
            for j in 0..width {
                let v = &q * &a[t][j];
                a[i][j] -= v;
            }
        }
        t += 1;
    }
    let dm = IntMatrix::from_rows_with_cols(a.iter().map(|r| r[..d.cols()].to_vec()).collect(), d.cols());
    let ex = (0..extra.len())
        .map(|k| a.iter().map(|r| r[d.cols() + k].clone()).collect())
        .collect();
    (dm, ex)
}

/// A well-formed matrix presenting the same coarse quotient; identity on well-formed input.
pub fn wellform(d: &IntMatrix) -> Result<IntMatrix> {
    Ok(wellform_with_bundles(d, &[])?.0)
}

/// Well-forms `d` and carries the given classes along the same base changes.
pub fn wellform_with_bundles(d: &IntMatrix, bundles: &[Vec<Int>]) -> Result<(IntMatrix, Vec<Vec<Int>>)> {
    if is_wellformed(d) {
        return Ok((d.clone(), bundles.to_vec()));
    }
    // saturate: pass to the lattice spanned by the columns
    let (mut cur, mut extra) = rebase(d, d, bundles)?;
    // divide out quasi-reflections, one divisor at a time
    loop {
        let bad = (0..cur.cols()).find_map(|i| {
            let rest = drop_column(&cur, i);
            if rest.rank() < cur.rows() {
                return None;
            }
            let g = gcd_of_minors(&rest, cur.rows());
            (!g.is_one()).then_some((i, g, rest))
        });
        let Some((i, g, rest)) = bad else { break };
        let mut scaled = cur.clone();
        for k in 0..scaled.rows() {
            let v = scaled.get(k, i) * &g;
            scaled.set(k, i, v);
        }
        let (next, ex) = rebase(&rest, &scaled, &extra)?;
        cur = next;
        extra = ex;
    }
    Ok(row_hnf(&cur, &extra))
}

fn check_omega(d: &IntMatrix, omega: &[Int]) -> Result<()> {
    if omega.len() != d.rows() {
        return Err(Error::DimensionMismatch(format!(
            "stability condition has length {}, weight matrix has {} rows",
            omega.len(),
            d.rows()
        )));
    }
    let r = d.rows();
    if r >= 1 {
        for j in subsets(d.cols(), r - 1) {
            let sub = d.select_columns(&j);
            if sub.rank() == r - 1 && in_cone(&sub.columns(), omega) {
                return Err(Error::OnWall);
            }
        }
    }
    if !in_cone(&d.columns(), omega) {
        return Err(Error::EmptyQuotient);
    }
    Ok(())
}

/// Index sets I (|I| = r) with ω in the simplicial cone of D_I, lexicographic.
pub fn irrelevant_ideal(d: &IntMatrix, omega: &[Int]) -> Result<Vec<Vec<usize>>> {
    check_omega(d, omega)?;
    Ok(irrelevant_unchecked(d, omega))
}

fn irrelevant_unchecked(d: &IntMatrix, omega: &[Int]) -> Vec<Vec<usize>> {
    let r = d.rows();
    subsets(d.cols(), r)
        .into_iter()
        .filter(|s| {
            let sub = d.select_columns(s);
            !sub.det().is_zero() && in_cone(&sub.columns(), omega)
        })
        .collect()
}

pub fn chamber_of(d: &IntMatrix, omega: &[Int]) -> Result<Chamber> {
    check_omega(d, omega)?;
    let r = d.rows();
    let mut ineqs: Vec<Vec<Int>> = Vec::new();
    for s in irrelevant_unchecked(d, omega) {
        let inv = rat_inverse(&d.select_columns(&s).to_rat_rows()).expect("simplicial cone");
        for row in inv {
            ineqs.push(primitive_from_rat(&row));
        }
    }
    ineqs.sort();
    ineqs.dedup();
    let rays = extreme_rays(&IntMatrix::from_rows_with_cols(ineqs, r))?;
    Ok(Chamber { rays })
}

pub fn nef_cone(d: &IntMatrix, omega: &[Int]) -> Result<Chamber> {
    chamber_of(d, omega)
}

/// Rays of the fan: rows of an integer kernel basis of D.
pub fn fan_rays(d: &IntMatrix) -> IntMatrix {
    let k = kernel_basis(d);
    IntMatrix::from_columns(&k, d.cols())
}

pub fn fan_from_chamber(d: &IntMatrix, omega: &[Int]) -> Result<SimplicialFan> {
    let irr = irrelevant_ideal(d, omega)?;
    if !is_wellformed(d) {
        return Err(Error::NotWellFormed);
    }
    let m = d.cols();
    let cones: Vec<Vec<usize>> = irr
        .iter()
        .map(|i| (0..m).filter(|j| !i.contains(j)).collect())
        .collect();
    let rays = fan_rays(d);
    let fan = SimplicialFan { m, cones, rays };
    if !fan.is_complete() {
        return Err(Error::Invalid("fan is not complete".into()));
    }
    Ok(fan)
}

impl SimplicialFan {
    pub fn dim(&self) -> usize {
        self.rays.cols()
    }

    pub fn ray(&self, i: usize) -> Vec<Int> {
        self.rays.row(i).to_vec()
    }

    /// Rays span the space positively and every maximal cone is full-dimensional.
    pub fn is_complete(&self) -> bool {
        let n = self.dim();
        if n == 0 {
            return self.cones.len() == 1;
        }
        if self.rays.rank() < n {
            return false;
        }
        // a strictly positive linear relation among the rays
        let relations = self.rays.transpose();
        if relations.rank() < n {
            return false;
        }
        let all_cones_full = self.cones.iter().all(|c| {
            c.len() == n && !self.rays.select_rows(c).det().is_zero()
        });
        all_cones_full && positive_relation_exists(&self.rays)
    }

    /// |det| of the ray matrix of a maximal cone.
    pub fn multiplicity(&self, cone: &[usize]) -> Int {
        self.rays.select_rows(cone).det().abs()
    }
}

fn positive_relation_exists(rays: &IntMatrix) -> bool {
    // Σ λ_i ρ_i = 0 with every λ_i ≥ 1 ⇔ exists μ ≥ 0 with Σ (1+μ_i) ρ_i = 0
    let rt = rays.transpose();
    let target: Vec<Int> = (0..rt.rows()).map(|i| -rt.row(i).iter().sum::<Int>()).collect();
    crate::lattice::nonneg_solution(&rt, &target).is_some()
}

pub fn charts(d: &IntMatrix, omega: &[Int]) -> Result<Vec<Chart>> {
    let irr = irrelevant_ideal(d, omega)?;
    Ok(irr.into_iter().map(|piv| chart(d, &piv)).collect())
}

/// The chart where the pivot coordinates are nonzero.
pub fn chart(d: &IntMatrix, pivots: &[usize]) -> Chart {
    let sub = d.select_columns(pivots);
    let snf = smith_normal_form(&sub);
    let diag = snf.diagonal();
    let stabilizer = cokernel(&sub);
    let torsion: Vec<usize> = (0..diag.len()).filter(|&i| !diag[i].is_one()).collect();
    let residual = (0..d.cols())
        .filter(|j| !pivots.contains(j))
        .map(|j| {
            let uv = snf.u.mul_vec(&d.col(j));
            let class = torsion.iter().map(|&i| uv[i].mod_floor(&diag[i])).collect();
            (j, class)
        })
        .collect();
    Chart { pivots: pivots.to_vec(), stabilizer, residual }
}

/// Weight matrix (free part of the class group) and torsion of the fan with the given rays.
pub fn weight_matrix_from_rays(rays: &IntMatrix) -> (IntMatrix, AbelianGroup) {
    let snf = smith_normal_form(rays);
    let rank = snf.diagonal().len();
    let m = rays.rows();
    let free_rows: Vec<usize> = (rank..m).collect();
    let d = snf.u.select_rows(&free_rows);
    (d, cokernel(rays))
}

/// ω = -K_F - Σ L_i, the natural stability condition of a complete intersection.
pub fn omega_for(d: &IntMatrix, bundles: &[Vec<Int>]) -> Vec<Int> {
    let mut w: Vec<Int> = (0..d.rows()).map(|i| d.row(i).iter().sum()).collect();
    for b in bundles {
        for (x, y) in w.iter_mut().zip(b) {
            *x -= y;
        }
    }
    w
}

pub fn omega_from_i64(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| int(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    fn v(xs: &[i64]) -> Vec<Int> {
        omega_from_i64(xs)
    }

    fn x1_10_3() -> IntMatrix {
        m(&[&[1, 1, 2, 1, 0, 0], &[0, 0, 1, 2, 1, 1]])
    }

    #[test]
    fn standardness() {
        assert!(is_standard(&m(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 3]])));
        assert!(!is_standard(&m(&[&[1, 1, 1], &[0, 0, 2]])));
        assert!(is_standard(&IntMatrix::identity(3)));
    }

    #[test]
    fn wellforming() {
        let bad = m(&[&[1, 1, 1], &[0, 0, 2]]);
        assert!(!is_wellformed(&bad));
        assert_eq!(wellform(&bad).unwrap(), m(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(wellform(&m(&[&[2, 2, 4]])).unwrap(), m(&[&[1, 1, 2]]));
        assert_eq!(wellform(&m(&[&[1, 2, 2]])).unwrap(), m(&[&[1, 1, 1]]));
        assert!(is_wellformed(&m(&[&[1, 2, 3, 5, 10]])));
        let good = x1_10_3();
        assert_eq!(wellform(&good).unwrap(), good);
    }

    #[test]
    fn wellform_carries_bundles() {
        let (d, l) = wellform_with_bundles(&m(&[&[1, 1, 1], &[0, 0, 2]]), &[v(&[2, 2])]).unwrap();
        assert_eq!(d, m(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(l, vec![v(&[1, 1])]);
    }

    #[test]
    fn chamber_x_1_10_3() {
        let c = chamber_of(&x1_10_3(), &v(&[1, 1])).unwrap();
        assert_eq!(c.rays, vec![v(&[1, 2]), v(&[2, 1])]);
    }

    #[test]
    fn chamber_rank_one() {
        let c = chamber_of(&m(&[&[1, 1, 3]]), &v(&[1])).unwrap();
        assert_eq!(c.rays, vec![v(&[1])]);
    }

    #[test]
    fn on_wall_and_outside() {
        assert_eq!(chamber_of(&x1_10_3(), &v(&[1, 0])), Err(Error::OnWall));
        assert_eq!(chamber_of(&x1_10_3(), &v(&[2, 1])), Err(Error::OnWall));
        assert_eq!(chamber_of(&x1_10_3(), &v(&[-1, 1])), Err(Error::EmptyQuotient));
    }

    #[test]
    fn irrelevant_x_1_10_3() {
        let irr = irrelevant_ideal(&x1_10_3(), &v(&[1, 1])).unwrap();
        let mut expect = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                expect.push(vec![i, j]);
            }
        }
        assert_eq!(irr, expect);
        let p2 = irrelevant_ideal(&m(&[&[1, 1, 1]]), &v(&[1])).unwrap();
        assert_eq!(p2, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn charts_x_1_10_3() {
        let d = x1_10_3();
        let u23 = chart(&d, &[2, 3]);
        assert_eq!(u23.cyclic_weights(), Some((int(3), v(&[1, 1, 1, 1]))));
        let u03 = chart(&d, &[0, 3]);
        assert_eq!(u03.cyclic_weights(), Some((int(2), v(&[0, 1, 1, 1]))));
        let p2 = charts(&m(&[&[1, 1, 1]]), &v(&[1])).unwrap();
        assert!(p2.iter().all(|c| c.stabilizer.is_trivial()));
    }

    #[test]
    fn fans() {
        let f = fan_from_chamber(&m(&[&[1, 1, 3]]), &v(&[1])).unwrap();
        assert_eq!(f.cones.len(), 3);
        let f = fan_from_chamber(&x1_10_3(), &v(&[1, 1])).unwrap();
        assert_eq!(f.cones.len(), 9);
        let f = fan_from_chamber(&m(&[&[1, 1, 1, 1]]), &v(&[1])).unwrap();
        assert_eq!(f.cones.len(), 4);
        assert!(f.cones.iter().all(|c| f.multiplicity(c).is_one()));
        assert_eq!(
            fan_from_chamber(&m(&[&[1, 1, 1], &[0, 0, 2]]), &v(&[1, 1])),
            Err(Error::NotWellFormed)
        );
    }

    #[test]
    fn nef_tables() {
        let c = nef_cone(&m(&[&[1, 1, 2, 0], &[0, 1, 3, 1]]), &v(&[4, 5])).unwrap();
        assert!(c.equals_cone(&[v(&[1, 1]), v(&[2, 3])]));
        let d = m(&[&[1, 0, 0, -1, -1], &[0, 3, 3, 2, 1]]);
        let w = omega_for(&d, &[v(&[0, 6])]);
        assert_eq!(w, v(&[-1, 3]));
        assert!(nef_cone(&d, &w).unwrap().equals_cone(&[v(&[0, 1]), v(&[-1, 2])]));
        let p1p1 = m(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(nef_cone(&p1p1, &v(&[1, 1])).unwrap().rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }
}
