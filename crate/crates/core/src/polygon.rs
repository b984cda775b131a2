//! Fano polygons, their face fans, singularity content, and toric-surface
//! invariants.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intersection::GradedRingContext;
use crate::lattice::{cokernel, int, smith_normal_form, AbelianGroup, Int, IntMatrix, Rat};
use crate::singularity::{singularity_content_of_cone, Basket, CyclicQuotient};
use crate::toric::{weight_matrix_from_rays, SimplicialFan};

pub type Point = (i64, i64);

fn cross(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

fn show(p: Point) -> String {
    format!("({},{})", p.0, p.1)
}

/// Convex lattice polygon with primitive vertices and the origin strictly inside,
/// stored counterclockwise from the lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FanoPolygon {
    vertices: Vec<Point>,
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|&v| show(v)).collect();
        write!(f, "{}", vs.join(","))
    }
}

impl FanoPolygon {
    pub fn new(vertices: &[Point]) -> Result<Self> {
        let ordered = validate(vertices)?;
        Ok(FanoPolygon { vertices: ordered })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertex pairs (counterclockwise).
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let n = self.vertices.len();
        (0..n).map(|i| (self.vertices[i], self.vertices[(i + 1) % n])).collect()
    }

    /// All lattice points on the boundary, counterclockwise.
    pub fn boundary_points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let d = sub(b, a);
            let g = d.0.gcd(&d.1);
            for t in 0..g {
                out.push((a.0 + t * d.0 / g, a.1 + t * d.1 / g));
            }
        }
        out
    }
}

/// Checks the Fano polygon conditions and returns the canonical vertex order.
pub fn validate(vertices: &[Point]) -> Result<Vec<Point>> {
    if let Some(&v) = vertices.iter().find(|v| v.0.gcd(&v.1) != 1) {
        return Err(Error::NonPrimitiveVertex(show(v)));
    }
    let mut sorted = vertices.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::NotConvex(show(w[0])));
    }
    if sorted.len() < 3 {
        return Err(Error::OriginNotInterior(
            sorted.first().map(|&v| show(v)).unwrap_or_else(|| "(none)".into()),
        ));
    }
    let hull = convex_hull(&sorted);
    if let Some(&v) = sorted.iter().find(|v| !hull.contains(v)) {
        return Err(Error::NotConvex(show(v)));
    }
    let n = hull.len();
    for i in 0..n {
        if cross(hull[i], hull[(i + 1) % n]) <= 0 {
            return Err(Error::OriginNotInterior(show(hull[i])));
        }
    }
    Ok(hull)
}

/// Strict convex hull (no collinear points), counterclockwise from the smallest point.
pub(crate) fn convex_hull(sorted: &[Point]) -> Vec<Point> {
    let mut lower: Vec<Point> = Vec::new();
    for &p in sorted {
        while lower.len() >= 2
            && cross(sub(lower[lower.len() - 1], lower[lower.len() - 2]), sub(p, lower[lower.len() - 2])) <= 0
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in sorted.iter().rev() {
        while upper.len() >= 2
            && cross(sub(upper[upper.len() - 1], upper[upper.len() - 2]), sub(p, upper[upper.len() - 2])) <= 0
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityContent {
    pub n: i64,
    pub basket: Basket,
}

impl SingularityContent {
    pub fn k_one_third(&self) -> Option<usize> {
        let k = self.basket.count(CyclicQuotient::ONE_THIRD);
        (k == self.basket.len()).then_some(k)
    }
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{{}}})", self.n, self.basket)
    }
}

pub fn singularity_content(p: &FanoPolygon) -> Result<SingularityContent> {
    let mut n = 0;
    let mut residues = Vec::new();
    for (a, b) in p.edges() {
        let (t, r) = singularity_content_of_cone(a, b)?;
        n += t;
        residues.extend(r);
    }
    Ok(SingularityContent { n, basket: Basket::new(residues) })
}

/// Complete fan whose maximal cones are consecutive ray pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan2 {
    pub rays: Vec<Point>,
}

impl Fan2 {
    pub fn cones(&self) -> Vec<(Point, Point)> {
        let n = self.rays.len();
        (0..n).map(|i| (self.rays[i], self.rays[(i + 1) % n])).collect()
    }

    fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.rays.iter().map(|&(x, y)| vec![int(x), int(y)]).collect())
    }

    pub fn to_simplicial(&self) -> SimplicialFan {
        let m = self.rays.len();
        let cones = (0..m)
            .map(|i| {
                let mut c = vec![i, (i + 1) % m];
                c.sort();
                c
            })
            .collect();
        SimplicialFan { m, cones, rays: self.ray_matrix() }
    }

    /// Singularity type of each maximal cone.
    pub fn singularities(&self) -> Result<Vec<CyclicQuotient>> {
        self.cones().into_iter().map(|(a, b)| crate::singularity::cone_singularity(a, b)).collect()
    }
}

pub fn face_fan(p: &FanoPolygon) -> Fan2 {
    Fan2 { rays: p.vertices.clone() }
}

/// K^2 of the toric surface, through the general intersection machinery.
pub fn toric_degree(f: &Fan2) -> Result<Rat> {
    let (d, _) = weight_matrix_from_rays(&f.ray_matrix());
    let ctx = GradedRingContext::new(f.to_simplicial(), d)?;
    let ones = vec![Rat::one(); f.rays.len()];
    ctx.top_intersection_divisors(&[ones.clone(), ones])
}

/// Index of the subgroup of Z^2 generated by the rays.
pub fn ray_lattice_index(f: &Fan2) -> Int {
    lattice_index(&f.rays)
}

pub fn lattice_index(points: &[Point]) -> Int {
    let m = IntMatrix::from_rows(points.iter().map(|&(x, y)| vec![int(x), int(y)]).collect());
    let diag = smith_normal_form(&m).diagonal();
    if diag.len() < 2 {
        return Int::zero();
    }
    diag.iter().product()
}

/// Cl = Z^rays / M.
pub fn class_group(f: &Fan2) -> AbelianGroup {
    cokernel(&f.ray_matrix())
}

/// Largest f with -K = f·A in Cl.
pub fn fano_index(f: &Fan2) -> Int {
    let r = f.ray_matrix();
    let snf = smith_normal_form(&r);
    let diag = snf.diagonal();
    let y = snf.u.mul_vec(&vec![Int::one(); f.rays.len()]);
    let free_gcd = y[diag.len()..].iter().fold(Int::zero(), |g, x| g.gcd(x));
    if free_gcd.is_zero() {
        return Int::zero();
    }
    let mut best = Int::one();
    let mut cand = Int::one();
    while cand <= free_gcd {
        if free_gcd.is_multiple_of(&cand)
            && diag.iter().zip(&y).all(|(s, yi)| yi.is_multiple_of(&cand.gcd(s)))
        {
            best = cand.clone();
        }
        cand += 1;
    }
    best
}

/// Order of π1 of the smooth locus of the maximal crepant partial resolution:
/// index of the lattice generated by all boundary points.
pub fn boundary_lattice_index(p: &FanoPolygon) -> Int {
    lattice_index(&p.boundary_points())
}

/// Is there g in GL(2,Z) with g(P) = Q?
pub fn gl2_equivalent(p: &FanoPolygon, q: &FanoPolygon) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let (p0, p1) = (p.vertices[0], p.vertices[1]);
    let det = cross(p0, p1);
    let n = q.len();
    for i in 0..n {
        for dir in [1usize, n - 1] {
            let q0 = q.vertices[i];
            let q1 = q.vertices[(i + dir) % n];
            if cross(q0, q1).abs() != det.abs() {
                continue;
            }
            // g = [q0 q1] [p0 p1]^{-1}
            let num = [
                [q0.0 * p1.1 - q1.0 * p0.1, -q0.0 * p1.0 + q1.0 * p0.0],
                [q0.1 * p1.1 - q1.1 * p0.1, -q0.1 * p1.0 + q1.1 * p0.0],
            ];
            if num.iter().flatten().any(|x| x % det != 0) {
                continue;
            }
            let g = [[num[0][0] / det, num[0][1] / det], [num[1][0] / det, num[1][1] / det]];
            if (g[0][0] * g[1][1] - g[0][1] * g[1][0]).abs() != 1 {
                continue;
            }
            let mut image: Vec<Point> = p
                .vertices
                .iter()
                .map(|&(x, y)| (g[0][0] * x + g[0][1] * y, g[1][0] * x + g[1][1] * y))
                .collect();
            image.sort();
            let mut target = q.vertices.clone();
            target.sort();
            if image == target {
                return true;
            }
        }
    }
    false
}

/// The family a polygon with pure 1/3(1,1) basket deforms to, found by (k, d)
/// among `families`. Pairs shared by two families are settled by `resolved`,
/// a list of (polygon, family) pairs established by explicit degenerations.
pub fn match_family(p: &FanoPolygon, families: &[String], resolved: &[(FanoPolygon, String)]) -> Result<String> {
    let content = singularity_content(p)?;
    let k = content
        .k_one_third()
        .ok_or_else(|| Error::NotApplicable(format!("basket {} is not pure 1/3(1,1)", content.basket)))?;
    let k = k as i64;
    let d = Rat::from_integer(int(12 - content.n)) - Rat::new(int(5 * k), int(3));
    let names: Vec<&String> = families
        .iter()
        .filter(|f| matches!(crate::invariants::parse_family_name(f), Ok((_, k2, d2)) if k2 == k && d2 == d))
        .collect();
    match names.len() {
        0 => Err(Error::NoFamily { k, d: d.to_string() }),
        1 => Ok(names[0].clone()),
        _ => resolved
            .iter()
            .find(|(q, f)| names.contains(&f) && gl2_equivalent(p, q))
            .map(|(_, f)| f.clone())
            .ok_or_else(|| {
                let shown: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                Error::NotApplicable(format!("(k, d) = ({}, {}) is shared by {}", k, d, shown.join(", ")))
            }),
    }
}

/// Anticanonical degree from singularity content: 12 - n - 5k/3.
pub fn content_degree(c: &SingularityContent) -> Option<Rat> {
    let k = c.k_one_third()? as i64;
    Some(Rat::from_integer(int(12 - c.n)) - Rat::new(int(5 * k), int(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn poly(v: &[Point]) -> FanoPolygon {
        FanoPolygon::new(v).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FanoPolygon::new(&[(-1, 2), (-2, 1), (1, -1)]).is_ok());
        assert!(FanoPolygon::new(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]).is_ok());
        assert_eq!(
            FanoPolygon::new(&[(1, 0), (0, 1), (-2, -2)]),
            Err(Error::NonPrimitiveVertex("(-2,-2)".into()))
        );
        assert_eq!(
            FanoPolygon::new(&[(2, 1), (0, 1), (-1, 1), (-1, -1)]),
            Err(Error::NotConvex("(0,1)".into()))
        );
        assert!(matches!(
            FanoPolygon::new(&[(1, 0), (0, 1), (1, 1)]),
            Err(Error::OriginNotInterior(_))
        ));
    }

    #[test]
    fn canonical_order() {
        let a = poly(&[(1, -1), (-1, 2), (-2, 1)]);
        let b = poly(&[(-2, 1), (-1, 2), (1, -1)]);
        assert_eq!(a, b);
        assert_eq!(a.vertices()[0], (-2, 1));
    }

    #[test]
    fn contents() {
        let row26 = poly(&[(-1, 2), (-2, 1), (1, -1)]);
        let c = singularity_content(&row26).unwrap();
        assert_eq!((c.n, c.k_one_third()), (2, Some(1)));
        let row9 = poly(&[(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)]);
        let c = singularity_content(&row9).unwrap();
        assert_eq!((c.n, c.k_one_third()), (0, Some(6)));
        let row7 = poly(&[(2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1), (-1, -2), (1, -1)]);
        let c = singularity_content(&row7).unwrap();
        assert_eq!((c.n, c.k_one_third()), (2, Some(5)));
    }

    #[test]
    fn degrees() {
        let p2 = poly(&[(1, 0), (0, 1), (-1, -1)]);
        assert_eq!(toric_degree(&face_fan(&p2)).unwrap(), rat(9, 1));
        let p113 = poly(&[(1, 0), (-1, -3), (0, 1)]);
        assert_eq!(toric_degree(&face_fan(&p113)).unwrap(), rat(25, 3));
        let row9 = poly(&[(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)]);
        assert_eq!(toric_degree(&face_fan(&row9)).unwrap(), rat(2, 1));
    }

    #[test]
    fn lattice_indices() {
        let row9 = poly(&[(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)]);
        assert_eq!(ray_lattice_index(&face_fan(&row9)), int(3));
        let p2 = poly(&[(1, 0), (0, 1), (-1, -1)]);
        assert_eq!(ray_lattice_index(&face_fan(&p2)), int(1));
        let row12 = poly(&[(3, 1), (-3, 1), (0, -1)]);
        assert_eq!(ray_lattice_index(&face_fan(&row12)), int(3));
        assert_eq!(boundary_lattice_index(&row12), int(1));
        assert_eq!(boundary_lattice_index(&row9), int(3));
    }

    #[test]
    fn class_groups() {
        let p113 = face_fan(&poly(&[(1, 0), (-1, -3), (0, 1)]));
        assert_eq!(class_group(&p113), AbelianGroup { free_rank: 1, invariant_factors: vec![] });
        assert_eq!(fano_index(&p113), int(5));
        let p2 = face_fan(&poly(&[(1, 0), (0, 1), (-1, -1)]));
        assert_eq!(fano_index(&p2), int(3));
        let row9 = face_fan(&poly(&[(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)]));
        assert_eq!(fano_index(&row9), int(1));
        assert_eq!(class_group(&row9).invariant_factors, vec![int(3)]);
    }

    #[test]
    fn equivalence() {
        let a = poly(&[(-1, 2), (-2, 1), (1, -1)]);
        let b = poly(&[(1, 0), (-1, -3), (0, 1)]);
        assert!(gl2_equivalent(&a, &b));
        let c = poly(&[(1, 0), (0, 1), (-1, -1)]);
        assert!(!gl2_equivalent(&a, &c));
    }
}
