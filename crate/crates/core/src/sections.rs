//! Sections of line bundles on GIT toric varieties, the induced singularities
//! of general complete intersections, and symbolic identity checks
//! (Pfaffians, binomial embeddings).

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    enumerate_nonneg_solutions, int, kernel_basis, rat_int, smith_normal_form, solve_rational, AbelianGroup, Int,
    IntMatrix, Rat,
};
use crate::poly::{Monomial, MonomialPoly};
use crate::singularity::{Basket, CyclicQuotient};
use crate::toric::irrelevant_ideal;

/// All exponent vectors of class `class`.
pub fn monomial_basis(d: &IntMatrix, class: &[Int]) -> Result<Vec<Vec<Int>>> {
    enumerate_nonneg_solutions(d, class)
}

/// Monomials not involving any of the killed coordinates.
pub fn restricted_basis(basis: &[Vec<Int>], killed: &[usize]) -> Vec<Vec<Int>> {
    basis.iter().filter(|v| killed.iter().all(|&i| v[i].is_zero())).cloned().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StratumKind {
    /// isolated points of X with this quotient singularity
    Quotient(CyclicQuotient),
    /// stabilizer acts with a pseudo-reflection or is not cyclic
    Other(String),
    /// X meets the stratum in positive dimension
    NonIsolated,
    /// no linear terms to eliminate the normal directions
    CannotReduce,
}

/// X ∩ O for one torus orbit O of F with nontrivial stabilizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    /// coordinates that are nonzero on the orbit
    pub nonzero: Vec<usize>,
    pub stabilizer: AbelianGroup,
    /// dimension of X ∩ O
    pub dim: i64,
    /// number of points when `dim == 0`
    pub points: Int,
    pub kind: StratumKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub strata: Vec<StratumReport>,
}

impl SingularityReport {
    /// The basket of X, if every stratum met is an isolated cyclic quotient.
    pub fn basket(&self) -> Option<Basket> {
        let mut items = Vec::new();
        for s in &self.strata {
            match s.kind {
                StratumKind::Quotient(q) => {
                    let n = s.points.to_usize()?;
                    items.extend(std::iter::repeat(q).take(n));
                }
                _ => return None,
            }
        }
        Some(Basket::new(items))
    }
}

/// Singularities of a general complete intersection of the bundles in the
/// quotient by ω. X is stratified by the torus orbits of F; on an orbit
/// with nonzero coordinates N each general section restricts to a generic
/// Laurent polynomial, so emptiness and point counts follow from the
/// Newton polytopes (Bernstein–Kushnirenko). At isolated points, the
/// normal directions killed by linear terms x_j·(unit) are removed and the
/// stabilizer weights of the rest give the quotient type.
pub fn ci_singularity_report(d: &IntMatrix, omega: &[Int], bundles: &[Vec<Int>]) -> Result<SingularityReport> {
    let m = d.cols();
    let r = d.rows();
    if m > 20 {
        return Err(Error::Invalid("too many coordinates for orbit enumeration".into()));
    }
    let irr = irrelevant_ideal(d, omega)?;
    let bases: Vec<Vec<Vec<Int>>> = bundles.iter().map(|l| monomial_basis(d, l)).collect::<Result<_>>()?;
    let mut report = SingularityReport::default();
    for mask in 1u32..(1 << m) {
        let nonzero: Vec<usize> = (0..m).filter(|&j| mask & (1 << j) != 0).collect();
        if !irr.iter().any(|s| s.iter().all(|i| nonzero.contains(i))) {
            continue;
        }
        let sub = d.select_columns(&nonzero);
        let snf = smith_normal_form(&sub);
        let diag = snf.diagonal();
        let torsion: Vec<usize> = (0..diag.len()).filter(|&i| !diag[i].is_one()).collect();
        if torsion.is_empty() {
            continue;
        }
        let stabilizer = AbelianGroup {
            free_rank: 0,
            invariant_factors: torsion.iter().map(|&i| diag[i].clone()).collect(),
        };
        let zero: Vec<usize> = (0..m).filter(|j| !nonzero.contains(j)).collect();
        let delta = nonzero.len() - r;

        // Newton polytopes on the orbit torus, in coordinates of ker(D_N)
        let lattice = kernel_basis(&sub);
        let mut polytopes: Vec<Vec<Vec<Rat>>> = Vec::new();
        let mut vanishing: Vec<usize> = Vec::new();
        for (i, basis) in bases.iter().enumerate() {
            let on_orbit = restricted_basis(basis, &zero);
            if on_orbit.is_empty() {
                vanishing.push(i);
                continue;
            }
            polytopes.push(orbit_coordinates(&on_orbit, &nonzero, &lattice));
        }
        if !bernstein_nonempty(&polytopes) {
            continue;
        }
        let dim = delta as i64 - polytopes.len() as i64;
        let mut entry = StratumReport { nonzero: nonzero.clone(), stabilizer, dim, points: Int::zero(), kind: StratumKind::NonIsolated };
        if dim > 0 {
            report.strata.push(entry);
            continue;
        }
        entry.points = mixed_volume(&polytopes)?;
        // linear terms x_j·(monomial on N) eliminate normal directions
        let candidates: Vec<Vec<usize>> = vanishing
            .iter()
            .map(|&i| {
                zero.iter()
                    .copied()
                    .filter(|&j| bases[i].iter().any(|v| v[j].is_one() && zero.iter().all(|&l| l == j || v[l].is_zero())))
                    .collect()
            })
            .collect();
        entry.kind = match find_matching(&candidates) {
            None => StratumKind::CannotReduce,
            Some(used) => {
                let slice: Vec<usize> = zero.iter().copied().filter(|j| !used.contains(j)).collect();
                let chars: Vec<Vec<Int>> = slice
                    .iter()
                    .map(|&j| {
                        let uv = snf.u.mul_vec(&d.col(j));
                        torsion.iter().map(|&i| uv[i].mod_floor(&diag[i])).collect()
                    })
                    .collect();
                classify_slice(&entry.stabilizer, &chars)
            }
        };
        report.strata.push(entry);
    }
    Ok(report)
}

fn orbit_coordinates(monomials: &[Vec<Int>], nonzero: &[usize], lattice: &[Vec<Int>]) -> Vec<Vec<Rat>> {
    let base: Vec<Int> = nonzero.iter().map(|&j| monomials[0][j].clone()).collect();
    monomials
        .iter()
        .map(|v| {
            let diff: Vec<Rat> = nonzero.iter().zip(&base).map(|(&j, b)| rat_int(&(&v[j] - b))).collect();
            if lattice.is_empty() {
                return vec![];
            }
            // diff = Σ c_k lattice_k
            let a: Vec<Vec<Rat>> =
                (0..nonzero.len()).map(|row| lattice.iter().map(|b| rat_int(&b[row])).collect()).collect();
            solve_rational(&a, &diff).expect("exponent differences lie in the kernel")
        })
        .collect()
}

fn span_rank(points: &[&Vec<Vec<Rat>>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for p in points {
        for v in p.iter().skip(1) {
            rows.push(v.iter().zip(&p[0]).map(|(a, b)| a - b).collect());
        }
    }
    if rows.is_empty() {
        return 0;
    }
    crate::lattice::rat_rank(&rows)
}

/// Generic Laurent polynomials with these supports have a common zero on the torus.
fn bernstein_nonempty(polytopes: &[Vec<Vec<Rat>>]) -> bool {
    let n = polytopes.len();
    (1u32..(1 << n)).all(|mask| {
        let chosen: Vec<&Vec<Vec<Rat>>> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &polytopes[i]).collect();
        span_rank(&chosen) >= chosen.len()
    })
}

/// Number of common zeros of generic polynomials with these supports, in dimension ≤ 2.
fn mixed_volume(polytopes: &[Vec<Vec<Rat>>]) -> Result<Int> {
    let as_int = |x: &Rat| -> i64 { x.to_integer().to_i64().expect("small exponent") };
    match polytopes.len() {
        0 => Ok(Int::one()),
        1 => {
            let ts: Vec<i64> = polytopes[0].iter().map(|v| as_int(&v[0])).collect();
            Ok(int(ts.iter().max().unwrap() - ts.iter().min().unwrap()))
        }
        2 => {
            let pts = |p: &Vec<Vec<Rat>>| -> Vec<(i64, i64)> { p.iter().map(|v| (as_int(&v[0]), as_int(&v[1]))).collect() };
            let (a, b) = (pts(&polytopes[0]), pts(&polytopes[1]));
            let sum: Vec<(i64, i64)> = a.iter().flat_map(|x| b.iter().map(move |y| (x.0 + y.0, x.1 + y.1))).collect();
            let twice = twice_area(&sum) - twice_area(&a) - twice_area(&b);
            Ok(int(twice / 2))
        }
        n => Err(Error::Invalid(format!("mixed volume in dimension {} is not implemented", n))),
    }
}

fn twice_area(points: &[(i64, i64)]) -> i64 {
    let mut p = points.to_vec();
    p.sort();
    p.dedup();
    let hull = crate::polygon::convex_hull(&p);
    let n = hull.len();
    if n < 3 {
        return 0;
    }
    (0..n).map(|i| hull[i].0 * hull[(i + 1) % n].1 - hull[i].1 * hull[(i + 1) % n].0).sum::<i64>().abs()
}

/// Distinct representatives, one from each candidate list.
fn find_matching(candidates: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(i: usize, c: &[Vec<usize>], used: &mut Vec<usize>) -> bool {
        if i == c.len() {
            return true;
        }
        for &j in &c[i] {
            if !used.contains(&j) {
                used.push(j);
                if go(i + 1, c, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    let mut used = Vec::new();
    go(0, candidates, &mut used).then_some(used)
}

fn classify_slice(group: &AbelianGroup, chars: &[Vec<Int>]) -> StratumKind {
    let show: Vec<String> = chars.iter().map(|c| format!("{:?}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>())).collect();
    if group.invariant_factors.len() != 1 || chars.len() != 2 {
        return StratumKind::Other(format!("{} acting by {}", group, show.join(", ")));
    }
    let n = group.invariant_factors[0].to_i64().expect("small order");
    let a = chars[0][0].to_i64().expect("small weight");
    let b = chars[1][0].to_i64().expect("small weight");
    if a.gcd(&n) != 1 || b.gcd(&n) != 1 {
        return StratumKind::Other(format!("1/{}({},{})", n, a, b));
    }
    let inv = crate::singularity::mod_inverse(a, n);
    match CyclicQuotient::new(n, b * inv) {
        Ok(q) => StratumKind::Quotient(q),
        Err(e) => StratumKind::Other(e.to_string()),
    }
}

/// Common class of all monomials of p, if there is one.
pub fn check_homogeneity(p: &MonomialPoly, d: &IntMatrix, labels: &[String]) -> Option<Vec<Int>> {
    let mut class: Option<Vec<Int>> = None;
    for m in p.monomials() {
        let c = m.degree(d, labels)?;
        match &class {
            None => class = Some(c),
            Some(prev) if *prev != c => return None,
            _ => {}
        }
    }
    class
}

/// Pfaffian of the 4×4 submatrix obtained by deleting row and column i.
pub fn pfaffian4(a: &[Vec<MonomialPoly>], i: usize) -> Result<MonomialPoly> {
    if a.len() != 5 || a.iter().any(|row| row.len() != 5) || i >= 5 {
        return Err(Error::DimensionMismatch("pfaffian4 needs a 5×5 matrix and an index below 5".into()));
    }
    for j in 0..5 {
        if !a[j][j].is_zero() {
            return Err(Error::NotAntisymmetric);
        }
        for k in 0..j {
            if a[j][k] != a[k][j].neg() {
                return Err(Error::NotAntisymmetric);
            }
        }
    }
    let idx: Vec<usize> = (0..5).filter(|&j| j != i).collect();
    let (j, k, l, m) = (idx[0], idx[1], idx[2], idx[3]);
    Ok(a[j][k].mul(&a[l][m]).sub(&a[j][l].mul(&a[k][m])).add(&a[j][m].mul(&a[k][l])))
}

/// Builds the antisymmetric matrix from its strict upper triangle.
pub fn antisymmetric_from_upper(upper: &[Vec<MonomialPoly>]) -> Vec<Vec<MonomialPoly>> {
    let n = upper.len();
    let mut a = vec![vec![MonomialPoly::zero(); n]; n];
    for j in 0..n {
        for k in j + 1..n {
            a[j][k] = upper[j][k].clone();
            a[k][j] = upper[j][k].neg();
        }
    }
    a
}

/// Does the relation vanish after substituting monomials for its variables?
pub fn check_substitution_identity(subst: &BTreeMap<String, Monomial>, relation: &MonomialPoly) -> bool {
    relation.substitute(subst).is_zero()
}

/// Is the substitution graded? Finds a rational φ with φ(deg_F x) = deg_P(x♯) for
/// every ambient coordinate x, where deg_P is taken in the free part of the
/// source class group.
pub fn substitution_is_graded(
    ambient: &IntMatrix,
    ambient_labels: &[String],
    source: &IntMatrix,
    source_labels: &[String],
    subst: &BTreeMap<String, Monomial>,
) -> bool {
    let rf = ambient.rows();
    let rp = source.rows();
    let mut a: Vec<Vec<Rat>> = Vec::new();
    let mut b: Vec<Rat> = Vec::new();
    for (c, label) in ambient_labels.iter().enumerate() {
        let Some(image) = subst.get(label) else { return false };
        let Some(exps) = image.exponents(source_labels) else { return false };
        if image.is_laurent() {
            return false;
        }
        let target = source.mul_vec(&exps);
        for p in 0..rp {
            // unknown φ[p][q] sits at index p*rf + q
            let mut row = vec![Rat::zero(); rp * rf];
            for q in 0..rf {
                row[p * rf + q] = rat_int(ambient.get(q, c));
            }
            a.push(row);
            b.push(rat_int(&target[p]));
        }
    }
    solve_rational(&a, &b).is_some()
}

/// Degree and anticanonical class of a complete intersection of O(b_i) in the
/// weighted Grassmannian wG(2,5); `doubled` holds 2w_i so that all data are integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannianCi {
    pub plucker_weights: Vec<i64>,
    pub grassmannian_degree: Rat,
    /// −K_X = O(fano_degree)
    pub fano_degree: i64,
    pub surface_degree: Rat,
}

pub fn weighted_grassmannian_ci(doubled: &[i64], bundles: &[i64]) -> Result<GrassmannianCi> {
    if doubled.len() != 5 {
        return Err(Error::DimensionMismatch("wG(2,5) needs five weights".into()));
    }
    let mut plucker = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            let s = doubled[i] + doubled[j];
            if s <= 0 || s % 2 != 0 {
                return Err(Error::Invalid(format!("Plücker weight ({}+{})/2 is not a positive integer", doubled[i], doubled[j])));
            }
            plucker.push(s / 2);
        }
    }
    plucker.sort();
    let twice_w: i64 = doubled.iter().sum();
    // Hilbert numerator of the codimension 3 Pfaffian ideal:
    // 1 − Σ t^{w−w_i} + Σ t^{w+w_i} − t^{2w}
    let mut num: BTreeMap<i64, i64> = BTreeMap::new();
    *num.entry(0).or_default() += 1;
    for &di in doubled {
        if (twice_w - di) % 2 != 0 {
            return Err(Error::Invalid("Pfaffian degrees are not integers".into()));
        }
        *num.entry((twice_w - di) / 2).or_default() -= 1;
        *num.entry((twice_w + di) / 2).or_default() += 1;
    }
    *num.entry(twice_w).or_default() -= 1;
    let falling = |e: i64, k: i64| -> i64 { (0..k).map(|i| e - i).product() };
    let deriv = |k: i64| -> i64 { num.iter().map(|(&e, &c)| c * falling(e, k)).sum() };
    if deriv(0) != 0 || deriv(1) != 0 || deriv(2) != 0 {
        return Err(Error::Invalid("Hilbert numerator does not vanish to order 3".into()));
    }
    let prod: i64 = plucker.iter().product();
    let grassmannian_degree = Rat::new(int(-deriv(3)), int(6 * prod));
    // K_P = O(−Σ plücker) = O(−4w), adjunction through the Pfaffian resolution adds 2w
    let fano_degree = twice_w - bundles.iter().sum::<i64>();
    let ambient_dim = 6usize;
    if bundles.len() + 2 != ambient_dim {
        return Err(Error::DimensionMismatch(format!("{} equations in a 6-fold do not cut a surface", bundles.len())));
    }
    let b: i64 = bundles.iter().product();
    let surface_degree = &grassmannian_degree * Rat::from_integer(int(b * fano_degree * fano_degree));
    Ok(GrassmannianCi { plucker_weights: plucker, grassmannian_degree, fano_degree, surface_degree })
}

/// A hypersurface of degree `degree` in P^n, quotient by μ_order acting with `weights`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientHypersurface {
    /// −K² of the quotient
    pub degree: Rat,
    pub basket: Basket,
    /// μ-invariant monomials of the given degree
    pub invariant_monomials: usize,
}

pub fn quotient_hypersurface(order: i64, weights: &[i64], degree: i64) -> Result<QuotientHypersurface> {
    let n = weights.len();
    if n != 4 {
        return Err(Error::DimensionMismatch("only surfaces in P^3 are supported".into()));
    }
    let ones = IntMatrix::from_rows(vec![vec![Int::one(); n]]);
    let all = monomial_basis(&ones, &[int(degree)])?;
    let invariant: Vec<&Vec<Int>> = all
        .iter()
        .filter(|v| {
            let s: Int = v.iter().zip(weights).map(|(e, &w)| e * int(w)).sum();
            s.mod_floor(&int(order)).is_zero()
        })
        .collect();
    // fixed loci of a generator are the weight eigenspaces; order is assumed prime
    let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        classes.entry(w.rem_euclid(order)).or_default().push(i);
    }
    let mut items = Vec::new();
    for (&w, coords) in &classes {
        let on_space = invariant.iter().filter(|v| (0..n).all(|i| coords.contains(&i) || v[i].is_zero())).count();
        let normal: Vec<i64> = (0..n).filter(|i| !coords.contains(i)).map(|i| (weights[i] - w).rem_euclid(order)).collect();
        match coords.len() {
            1 => {
                if on_space > 0 {
                    continue;
                }
                return Err(Error::Invalid("isolated fixed point on X: not handled".into()));
            }
            2 => {
                if on_space == 0 {
                    return Err(Error::Invalid("fixed line contained in X".into()));
                }
                let (a, b) = (normal[0], normal[1]);
                if a.gcd(&order) != 1 || b.gcd(&order) != 1 {
                    return Err(Error::Invalid("action is not free in codimension one".into()));
                }
                let q = CyclicQuotient::new(order, b * crate::singularity::mod_inverse(a, order))?;
                // a general binary form of this degree has `degree` distinct roots
                items.extend(std::iter::repeat(q).take(degree as usize));
            }
            _ => return Err(Error::Invalid("fixed plane meets X in a curve".into())),
        }
    }
    let kx = (n as i64) - degree;
    let degree_x = Rat::new(int(kx * kx * degree), int(order));
    Ok(QuotientHypersurface { degree: degree_x, basket: Basket::new(items), invariant_monomials: invariant.len() })
}

/// Canonical form of cyclic weights: the sorted vector, minimized over unit rescalings.
pub fn weight_type(order: &Int, weights: &[Int]) -> Vec<Int> {
    let mut best: Vec<Int> = weights.iter().map(|x| x.mod_floor(order)).collect();
    best.sort();
    let mut u = int(2);
    while &u < order {
        if u.gcd(order).is_one() {
            let mut cand: Vec<Int> = weights.iter().map(|x| (x * &u).mod_floor(order)).collect();
            cand.sort();
            if cand < best {
                best = cand;
            }
        }
        u += 1;
    }
    best
}

/// Weights of the cyclic group N/⟨rays⟩ on the Cox coordinates of a simplicial cone:
/// a generator g = Σ c_i ρ_i gives weights c_i mod 1, returned with the order.
pub fn simplicial_cone_weights(rays: &IntMatrix) -> Result<(Int, Vec<Int>)> {
    let n = rays.cols();
    if rays.rows() != n {
        return Err(Error::DegenerateCone("cone is not simplicial and full-dimensional".into()));
    }
    let order = rays.det().abs();
    if order.is_zero() {
        return Err(Error::DegenerateCone("rays are dependent".into()));
    }
    let a: Vec<Vec<Rat>> = (0..n).map(|row| (0..n).map(|i| rat_int(rays.get(i, row))).collect()).collect();
    let mut best: Option<(Int, Vec<Int>)> = None;
    for e in 0..n {
        let g: Vec<Rat> = (0..n).map(|i| if i == e { Rat::one() } else { Rat::zero() }).collect();
        let c = solve_rational(&a, &g).expect("invertible");
        let w: Vec<Int> = c.iter().map(|x| (x * rat_int(&order)).to_integer().mod_floor(&order)).collect();
        let denom = c.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
        if best.as_ref().map_or(true, |(d, _)| denom > *d) {
            best = Some((denom, w));
        }
    }
    let (denom, w) = best.expect("nonempty");
    if denom != order {
        return Err(Error::Invalid("N/⟨rays⟩ is not cyclic on a coordinate vector".into()));
    }
    Ok((order.clone(), weight_type(&order, &w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;
    use crate::toric::{omega_for, omega_from_i64 as v};

    fn x1103() -> (IntMatrix, Vec<Vec<Int>>) {
        (IntMatrix::from_i64(&[&[1, 1, 2, 1, 0, 0], &[0, 0, 1, 2, 1, 1]]), vec![v(&[2, 2]), v(&[2, 2])])
    }

    #[test]
    fn basis_examples() {
        let p113 = IntMatrix::from_i64(&[&[1, 1, 3]]);
        let b = monomial_basis(&p113, &v(&[3])).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(b[0], v(&[3, 0, 0]));
        assert_eq!(monomial_basis(&p113, &v(&[0])).unwrap(), vec![v(&[0, 0, 0])]);
        // brute-force oracle for degree 10: Σ_{c ≤ 3} (10 − 3c + 1)
        assert_eq!(monomial_basis(&p113, &v(&[10])).unwrap().len(), 11 + 8 + 5 + 2);
    }

    #[test]
    fn restriction_to_curve() {
        let (d, l) = x1103();
        let basis = monomial_basis(&d, &l[0]).unwrap();
        let on_c = restricted_basis(&basis, &[2, 4, 5]);
        assert_eq!(on_c, vec![v(&[1, 0, 0, 1, 0, 0]), v(&[0, 1, 0, 1, 0, 0])]);
        assert_eq!(restricted_basis(&basis, &[]).len(), basis.len());
        assert!(restricted_basis(&basis, &[0, 1, 2, 3, 4, 5]).is_empty());
    }

    #[test]
    fn worked_example_report() {
        let (d, l) = x1103();
        let w = omega_for(&d, &l);
        let rep = ci_singularity_report(&d, &w, &l).unwrap();
        assert_eq!(rep.strata.len(), 1, "{:?}", rep);
        assert_eq!(rep.strata[0].nonzero, vec![2, 3]);
        assert_eq!(rep.basket().unwrap(), Basket::new(vec![CyclicQuotient::ONE_THIRD]));
    }

    #[test]
    fn hypersurface_reports() {
        let d = IntMatrix::from_i64(&[&[1, 1, 1, 3]]);
        let rep = ci_singularity_report(&d, &v(&[2]), &[v(&[4])]).unwrap();
        assert_eq!(rep.basket().unwrap(), Basket::new(vec![CyclicQuotient::ONE_THIRD]));
        let d = IntMatrix::from_i64(&[&[1, 1, 3, 3]]);
        let rep = ci_singularity_report(&d, &v(&[2]), &[v(&[6])]).unwrap();
        // y0 y1 − x^6: the line x0 = x1 = 0 meets X in two points
        assert_eq!(rep.basket().unwrap(), Basket::new(vec![CyclicQuotient::ONE_THIRD; 2]));
    }

    #[test]
    fn pfaffian_small() {
        let z = vec![vec![MonomialPoly::zero(); 5]; 5];
        assert!(pfaffian4(&z, 0).unwrap().is_zero());
        let mut upper = vec![vec![MonomialPoly::zero(); 5]; 5];
        for j in 0..5 {
            for k in j + 1..5 {
                upper[j][k] = MonomialPoly::parse(&format!("a{}{}", j, k)).unwrap();
            }
        }
        let a = antisymmetric_from_upper(&upper);
        assert_eq!(pfaffian4(&a, 0).unwrap().len(), 3);
        let mut bad = a.clone();
        bad[1][0] = bad[0][1].clone();
        assert_eq!(pfaffian4(&bad, 0), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn homogeneity() {
        let (d, _) = x1103();
        let labels: Vec<String> = (0..6).map(|i| format!("x{}", i)).collect();
        let p = MonomialPoly::parse("x0*x3 + x2*x4").unwrap();
        assert_eq!(check_homogeneity(&p, &d, &labels), Some(v(&[2, 2])));
        let w = IntMatrix::from_i64(&[&[1]]);
        let q = MonomialPoly::parse("x0 + x0^2").unwrap();
        assert_eq!(check_homogeneity(&q, &w, &labels[..1]), None);
    }

    #[test]
    fn substitution_identity() {
        let mut s = BTreeMap::new();
        for (k, val) in [("x0", "u^4"), ("x1", "u*v"), ("x2", "w"), ("y", "v^4")] {
            s.insert(k.to_string(), Monomial::parse(val).unwrap());
        }
        assert!(check_substitution_identity(&s, &MonomialPoly::parse("y*x0 - x1^4").unwrap()));
        assert!(!check_substitution_identity(&BTreeMap::new(), &MonomialPoly::parse("y*x0 - x1^4").unwrap()));
        let ambient = IntMatrix::from_i64(&[&[1, 1, 1, 3]]);
        let source = IntMatrix::from_i64(&[&[1, 3, 4]]);
        let al: Vec<String> = ["x0", "x1", "x2", "y"].iter().map(|s| s.to_string()).collect();
        let sl: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
        assert!(substitution_is_graded(&ambient, &al, &source, &sl, &s));
        s.insert("x2".into(), Monomial::parse("v").unwrap());
        assert!(!substitution_is_graded(&ambient, &al, &source, &sl, &s));
    }

    #[test]
    fn grassmannian_example() {
        let g = weighted_grassmannian_ci(&[1, 1, 1, 3, 3], &[2, 2, 2, 2]).unwrap();
        assert_eq!(g.plucker_weights, vec![1, 1, 1, 2, 2, 2, 2, 2, 2, 3]);
        assert_eq!(g.fano_degree, 1);
        assert_eq!(g.surface_degree, rat(7, 3));
        // ordinary G(2,5) has degree 5 in P^9
        let g = weighted_grassmannian_ci(&[1, 1, 1, 1, 1], &[1, 1, 1, 1]).unwrap();
        assert_eq!(g.grassmannian_degree, rat(5, 1));
    }

    #[test]
    fn cubic_quotient() {
        let q = quotient_hypersurface(3, &[1, 1, 2, 2], 3).unwrap();
        assert_eq!(q.degree, rat(1, 1));
        assert_eq!(q.basket, Basket::new(vec![CyclicQuotient::ONE_THIRD; 6]));
        assert_eq!(q.invariant_monomials, 8);
    }

    #[test]
    fn cone_weights() {
        let rays = IntMatrix::from_i64(&[&[2, 1], &[1, 2]]);
        assert_eq!(simplicial_cone_weights(&rays).unwrap(), (int(3), v(&[1, 1])));
        assert_eq!(weight_type(&int(3), &v(&[1, 1, 2, 2, 2])), v(&[1, 1, 1, 2, 2]));
    }
}
