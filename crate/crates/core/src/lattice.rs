//! Exact integer and rational linear algebra: Smith normal form, cokernels,
//! minor gcds, kernels, and bounded nonnegative lattice-point enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Builds from rows; `cols` is needed so that a matrix with no rows still has a width.
    pub fn from_rows_with_cols(rows: Vec<Vec<Int>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        IntMatrix { rows: r, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn from_vecs(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors, all of length `height`.
    pub fn from_columns(columns: &[Vec<Int>], height: usize) -> Self {
        let mut m = Self::zeros(height, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), height, "column of wrong height");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn diagonal(entries: &[Int], rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut p = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    p.data[idx] += a * other.get(k, j);
                }
            }
        }
        p
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows_with_cols(rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn to_rat_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).iter().map(rat_int).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        rat_rank(&self.to_rat_rows())
    }

    /// Determinant of a square matrix (Bareiss elimination).
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = self.row_vecs();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &Int) {
        for j in 0..self.cols {
            let v = self.get(src, j) * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, src) * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Result of Smith normal form: `u * m * v == s`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        // smallest nonzero entry in the trailing block becomes the pivot
        let Some((pi, pj)) = min_entry(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(a.get(t, t));
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !a.get(i, t).is_zero() {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(a.get(t, t));
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !a.get(t, j).is_zero() {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let p = a.get(t, t).clone();
            let bad = (t + 1..a.rows)
                .find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    a.add_row(t, i, &Int::one());
                    u.add_row(t, i, &Int::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { s: a, u, v }
}

fn min_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Finitely generated abelian group Z^free_rank ⊕ ⊕ Z/d_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<Int>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{}", r)),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Z^rows / image(m).
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    AbelianGroup {
        free_rank: m.rows - diag.len(),
        invariant_factors: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// gcd of all size×size minors; 0 when they all vanish.
pub fn gcd_of_minors(m: &IntMatrix, size: usize) -> Int {
    if size == 0 {
        return Int::one();
    }
    if size > m.rows.min(m.cols) {
        return Int::zero();
    }
    let diag = smith_normal_form(m).diagonal();
    if diag.len() < size {
        return Int::zero();
    }
    diag[..size].iter().product()
}

/// Saturated integer basis of {x : m x = 0}, one basis vector per entry.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    let rank = snf.diagonal().len();
    (rank..m.cols).map(|j| snf.v.col(j)).collect()
}

pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides out the content; sign is preserved.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Int> = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    primitive(&scaled)
}

// ---- rational linear algebra ----

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(a: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rat_rank(a: &[Vec<Rat>]) -> usize {
    let mut b = a.to_vec();
    rref(&mut b).len()
}

/// Some solution of a·x = b over Q, or None when inconsistent.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][cols].clone();
    }
    Some(x)
}

/// Rational basis of {x : a x = 0}.
pub fn rat_nullspace(a: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut b = a.to_vec();
    let pivots = rref(&mut b);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -b[i][f].clone();
            }
            x
        })
        .collect()
}

/// Inverse of a square rational matrix, if invertible.
pub fn rat_inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Exact feasibility of {x ≥ 0 : a x = b} by enumerating bases.
/// Returns a basic feasible solution when one exists.
pub fn nonneg_solution(a: &IntMatrix, b: &[Int]) -> Option<Vec<Rat>> {
    let rows = a.to_rat_rows();
    let rb: Vec<Rat> = b.iter().map(rat_int).collect();
    solve_rational(&rows, &rb)?;
    if b.iter().all(|x| x.is_zero()) {
        return Some(vec![Rat::zero(); a.cols]);
    }
    let rank = rat_rank(&rows);
    for s in subsets(a.cols, rank) {
        let sub = a.select_columns(&s).to_rat_rows();
        if rat_rank(&sub) < rank {
            continue;
        }
        let Some(xs) = solve_rational(&sub, &rb) else { continue };
        if xs.iter().all(|x| !x.is_negative()) {
            let mut x = vec![Rat::zero(); a.cols];
            for (k, &j) in s.iter().enumerate() {
                x[j] = xs[k].clone();
            }
            return Some(x);
        }
    }
    None
}

/// Does a nonzero v ≥ 0 with a v = 0 exist?
pub fn has_nonneg_kernel(a: &IntMatrix) -> bool {
    let mut rows = a.row_vecs();
    rows.push(vec![Int::one(); a.cols]);
    let aug = IntMatrix::from_rows_with_cols(rows, a.cols);
    let mut b = vec![Int::zero(); a.rows];
    b.push(Int::one());
    nonneg_solution(&aug, &b).is_some()
}

/// All v ≥ 0 with D·v = target, in descending lexicographic order.
pub fn enumerate_nonneg_solutions(d: &IntMatrix, target: &[Int]) -> Result<Vec<Vec<Int>>> {
    if target.len() != d.rows {
        return Err(Error::DimensionMismatch(format!(
            "target has length {}, matrix has {} rows",
            target.len(),
            d.rows
        )));
    }
    let m = d.cols;
    if m == 0 {
        return Ok(if target.iter().all(|x| x.is_zero()) { vec![vec![]] } else { vec![] });
    }
    if has_nonneg_kernel(d) {
        return Err(Error::NonConvexCone);
    }
    // a functional strictly positive on every column bounds each exponent
    let y = positive_functional(d);
    let w: Vec<Int> = (0..m).map(|j| dot(&y, &d.col(j))).collect();
    let budget = dot(&y, target);
    let mut out = Vec::new();
    if budget.is_negative() {
        return Ok(out);
    }
    let cols = d.columns();
    let mut cur = vec![Int::zero(); m];
    let mut residual = target.to_vec();
    enum_rec(0, &cols, &w, &budget, &mut residual, &mut cur, &mut out);
    Ok(out)
}

fn enum_rec(
    j: usize,
    cols: &[Vec<Int>],
    w: &[Int],
    budget: &Int,
    residual: &mut Vec<Int>,
    cur: &mut Vec<Int>,
    out: &mut Vec<Vec<Int>>,
) {
    let m = cols.len();
    if j == m - 1 {
        // the last exponent is forced by the residual
        if budget.is_multiple_of(&w[j]) {
            let e = budget / &w[j];
            if residual.iter().zip(&cols[j]).all(|(r, c)| *r == c * &e) {
                cur[j] = e;
                out.push(cur.clone());
                cur[j] = Int::zero();
            }
        }
        return;
    }
    let max = budget / &w[j];
    let mut e = max.clone();
    for (r, c) in residual.iter_mut().zip(&cols[j]) {
        *r -= c * &max;
    }
    loop {
        cur[j] = e.clone();
        let rest = budget - &w[j] * &e;
        enum_rec(j + 1, cols, w, &rest, residual, cur, out);
        if e.is_zero() {
            break;
        }
        e -= 1;
        for (r, c) in residual.iter_mut().zip(&cols[j]) {
            *r += c;
        }
    }
    cur[j] = Int::zero();
}

/// Integer y with y·D_j > 0 for every column; requires a strictly convex column cone.
pub fn positive_functional(d: &IntMatrix) -> Vec<Int> {
    // restrict to independent rows so that the dual cone is pointed
    let rows = d.to_rat_rows();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..d.rows {
        let mut trial: Vec<Vec<Rat>> = keep.iter().map(|&k| rows[k].clone()).collect();
        trial.push(rows[i].clone());
        if rat_rank(&trial) == trial.len() {
            keep.push(i);
        }
    }
    let sub = d.select_rows(&keep);
    let rays = crate::cone::extreme_rays(&sub.transpose())
        .expect("dual of a full-dimensional cone is pointed");
    let mut y_sub = vec![Int::zero(); keep.len()];
    for r in &rays {
        for (a, b) in y_sub.iter_mut().zip(r) {
            *a += b;
        }
    }
    let mut y = vec![Int::zero(); d.rows];
    for (k, &i) in keep.iter().enumerate() {
        y[i] = y_sub[k].clone();
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn snf_hand_example() {
        let m = IntMatrix::from_i64(&[&[1, 1, 1], &[0, 0, 2]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), v(&[1, 2]));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
    }

    #[test]
    fn snf_trivial_cases() {
        let i = IntMatrix::identity(2);
        assert_eq!(smith_normal_form(&i).s, i);
        let d = IntMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        assert_eq!(smith_normal_form(&d).s, d);
        let d = IntMatrix::from_i64(&[&[4, 0], &[0, 6]]);
        assert_eq!(smith_normal_form(&d).diagonal(), v(&[2, 12]));
    }

    #[test]
    fn cokernels() {
        let m = IntMatrix::from_i64(&[&[2, 1], &[1, 2]]);
        assert_eq!(cokernel(&m), AbelianGroup { free_rank: 0, invariant_factors: v(&[3]) });
        assert!(cokernel(&IntMatrix::identity(3)).is_trivial());
        let c = IntMatrix::from_i64(&[&[3], &[0]]);
        assert_eq!(cokernel(&c), AbelianGroup { free_rank: 1, invariant_factors: v(&[3]) });
    }

    #[test]
    fn minors() {
        let m = IntMatrix::from_i64(&[&[1, 1, 1], &[0, 0, 2]]);
        assert_eq!(gcd_of_minors(&m, 2), int(2));
        assert_eq!(gcd_of_minors(&IntMatrix::identity(2), 2), int(1));
        assert_eq!(gcd_of_minors(&IntMatrix::from_i64(&[&[2, 4]]), 1), int(2));
        assert_eq!(gcd_of_minors(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]]), 2), int(0));
    }

    #[test]
    fn determinant() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        assert_eq!(m.det(), int(-4));
    }

    #[test]
    fn kernel_is_saturated() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for b in &k {
            assert!(m.mul_vec(b).iter().all(|x| x.is_zero()));
        }
        let km = IntMatrix::from_columns(&k, 3);
        assert_eq!(gcd_of_minors(&km, 2), int(1));
    }

    #[test]
    fn weights_113_degree_3() {
        let d = IntMatrix::from_i64(&[&[1, 1, 3]]);
        let sols = enumerate_nonneg_solutions(&d, &v(&[3])).unwrap();
        let expect: Vec<Vec<Int>> =
            [[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [0, 0, 1]].iter().map(|r| v(r)).collect();
        assert_eq!(sols, expect);
    }

    #[test]
    fn zero_target() {
        let d = IntMatrix::from_i64(&[&[1, 0, 2], &[0, 1, 1]]);
        assert_eq!(enumerate_nonneg_solutions(&d, &v(&[0, 0])).unwrap(), vec![v(&[0, 0, 0])]);
    }

    #[test]
    fn non_convex_cone_rejected() {
        let d = IntMatrix::from_i64(&[&[1, -1]]);
        assert_eq!(enumerate_nonneg_solutions(&d, &v(&[1])), Err(Error::NonConvexCone));
    }

    #[test]
    fn nonneg_feasibility() {
        let a = IntMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
        assert!(nonneg_solution(&a, &v(&[1, 1])).is_some());
        assert!(nonneg_solution(&a, &v(&[-1, 1])).is_none());
        assert!(nonneg_solution(&a, &v(&[2, 0])).is_some());
    }
}
