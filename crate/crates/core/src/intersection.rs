//! Top intersection numbers on complete simplicial toric varieties, by
//! reducing monomials in the ray divisors to squarefree cone monomials.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rat_int, rat_inverse, smith_normal_form, solve_rational, Int, IntMatrix, Rat};
use crate::toric::{fan_from_chamber, omega_for, SimplicialFan};

/// Index of the sublattice spanned by the rays of a full-dimensional simplicial cone.
pub fn cone_multiplicity(rays: &IntMatrix) -> Result<Int> {
    let n = rays.cols();
    let diag = smith_normal_form(rays).diagonal();
    if rays.rows() != n || diag.len() < n {
        return Err(Error::DegenerateCone("rays do not span a full-dimensional simplicial cone".into()));
    }
    Ok(diag.iter().product())
}

/// Fan data plus the weight matrix used to lift classes to ray divisors.
pub struct GradedRingContext {
    pub fan: SimplicialFan,
    pub weights: IntMatrix,
    faces: BTreeSet<Vec<usize>>,
    mult: HashMap<Vec<usize>, Int>,
    /// which containing cone to use when several are available (for invariance testing)
    choice: usize,
    memo: RefCell<HashMap<Vec<usize>, Rat>>,
}

impl GradedRingContext {
    pub fn new(fan: SimplicialFan, weights: IntMatrix) -> Result<Self> {
        let mut mult = HashMap::new();
        let mut faces = BTreeSet::new();
        for c in &fan.cones {
            let mu = cone_multiplicity(&fan.rays.select_rows(c))?;
            mult.insert(c.clone(), mu);
            for mask in 0u32..(1 << c.len()) {
                let f: Vec<usize> =
                    (0..c.len()).filter(|&i| mask & (1 << i) != 0).map(|i| c[i]).collect();
                faces.insert(f);
            }
        }
        let realized = weights.mul(&fan.rays);
        if !realized.is_zero() {
            return Err(Error::Invalid("ray realization is not in the kernel of the weight matrix".into()));
        }
        Ok(GradedRingContext { fan, weights, faces, mult, choice: 0, memo: RefCell::new(HashMap::new()) })
    }

    pub fn from_weights(d: &IntMatrix, omega: &[Int]) -> Result<Self> {
        Self::new(fan_from_chamber(d, omega)?, d.clone())
    }

    /// Same context, reducing through a different containing cone where there is a choice.
    pub fn with_choice(&self, choice: usize) -> Self {
        GradedRingContext {
            fan: self.fan.clone(),
            weights: self.weights.clone(),
            faces: self.faces.clone(),
            mult: self.mult.clone(),
            choice,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    fn is_face(&self, support: &[usize]) -> bool {
        self.faces.contains(support)
    }

    /// Ray-divisor coefficients of a class in Cl (any rational lift).
    pub fn lift(&self, class: &[Int]) -> Result<Vec<Rat>> {
        if class.len() != self.weights.rows() {
            return Err(Error::DimensionMismatch(format!(
                "class has length {}, expected {}",
                class.len(),
                self.weights.rows()
            )));
        }
        let b: Vec<Rat> = class.iter().map(rat_int).collect();
        solve_rational(&self.weights.to_rat_rows(), &b)
            .ok_or_else(|| Error::Invalid("class is not in the span of the weights".into()))
    }

    /// Intersection number of classes given in Cl coordinates.
    pub fn top_intersection(&self, classes: &[Vec<Int>]) -> Result<Rat> {
        let lifted: Vec<Vec<Rat>> = classes.iter().map(|c| self.lift(c)).collect::<Result<_>>()?;
        self.top_intersection_divisors(&lifted)
    }

    /// Intersection number of Q-divisors given by ray coefficients.
    pub fn top_intersection_divisors(&self, divisors: &[Vec<Rat>]) -> Result<Rat> {
        let n = self.dim();
        if divisors.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} factors on a variety of dimension {}",
                divisors.len(),
                n
            )));
        }
        if let Some(bad) = divisors.iter().find(|a| a.len() != self.fan.m) {
            return Err(Error::DimensionMismatch(format!(
                "divisor has {} coefficients, fan has {} rays",
                bad.len(),
                self.fan.m
            )));
        }
        // expand the product, dropping monomials whose support is not a face
        let mut terms: HashMap<Vec<usize>, Rat> = HashMap::new();
        terms.insert(Vec::new(), Rat::one());
        for a in divisors {
            let mut next: HashMap<Vec<usize>, Rat> = HashMap::new();
            for (mono, c) in &terms {
                for (i, ai) in a.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    let mut m2 = mono.clone();
                    let pos = m2.partition_point(|&x| x <= i);
                    m2.insert(pos, i);
                    if !self.is_face(&support(&m2)) {
                        continue;
                    }
                    *next.entry(m2).or_insert_with(Rat::zero) += c * ai;
                }
            }
            terms = next;
        }
        let mut total = Rat::zero();
        for (mono, c) in terms {
            total += c * self.monomial(&mono);
        }
        Ok(total)
    }

    /// Degree of a monomial in the ray divisors (sorted index multiset of length dim).
    pub fn monomial(&self, mono: &[usize]) -> Rat {
        if let Some(v) = self.memo.borrow().get(mono) {
            return v.clone();
        }
        let v = self.reduce(mono);
        self.memo.borrow_mut().insert(mono.to_vec(), v.clone());
        v
    }

    fn reduce(&self, mono: &[usize]) -> Rat {
        let supp = support(mono);
        if !self.is_face(&supp) {
            return Rat::zero();
        }
        let n = self.dim();
        if supp.len() == n {
            let mu = &self.mult[&supp];
            return Rat::new(Int::one(), mu.clone());
        }
        let containing: Vec<&Vec<usize>> =
            self.fan.cones.iter().filter(|c| supp.iter().all(|s| c.contains(s))).collect();
        let sigma = containing[self.choice % containing.len()];
        let repeated: Vec<usize> =
            supp.iter().copied().filter(|&s| mono.iter().filter(|&&x| x == s).count() > 1).collect();
        let j = repeated[self.choice % repeated.len()];
        // m with <m, ρ_j> = 1 and <m, ρ_i> = 0 on the rest of σ
        let basis = self.fan.rays.select_rows(sigma).to_rat_rows();
        let inv = rat_inverse(&basis).expect("maximal cones are simplicial");
        let pos = sigma.iter().position(|&x| x == j).unwrap();
        let m: Vec<Rat> = inv.iter().map(|row| row[pos].clone()).collect();
        let mut rest = mono.to_vec();
        rest.remove(rest.iter().position(|&x| x == j).unwrap());
        let mut total = Rat::zero();
        for i in 0..self.fan.m {
            if sigma.contains(&i) {
                continue;
            }
            let pairing: Rat = self
                .fan
                .ray(i)
                .iter()
                .zip(&m)
                .map(|(x, y)| rat_int(x) * y)
                .sum();
            if pairing.is_zero() {
                continue;
            }
            let mut m2 = rest.clone();
            let p = m2.partition_point(|&x| x <= i);
            m2.insert(p, i);
            if !self.is_face(&support(&m2)) {
                continue;
            }
            total -= pairing * self.monomial(&m2);
        }
        total
    }
}

fn support(mono: &[usize]) -> Vec<usize> {
    let mut s = mono.to_vec();
    s.dedup();
    s
}

/// Anticanonical degree of the complete intersection of the bundles in the GIT quotient.
pub fn ci_degree(d: &IntMatrix, omega: Option<&[Int]>, bundles: &[Vec<Int>]) -> Result<Rat> {
    let a = omega_for(d, bundles);
    let omega = omega.map(|w| w.to_vec()).unwrap_or_else(|| a.clone());
    let ctx = GradedRingContext::from_weights(d, &omega)?;
    if ctx.dim() != bundles.len() + 2 {
        return Err(Error::DimensionMismatch(format!(
            "ambient dimension {} with {} equations is not a surface",
            ctx.dim(),
            bundles.len()
        )));
    }
    let mut classes = bundles.to_vec();
    classes.push(a.clone());
    classes.push(a);
    ctx.top_intersection(&classes)
}

/// Self-intersection of -K on the toric surface of a complete 2-d fan.
pub fn surface_anticanonical_degree(fan: &SimplicialFan, weights: &IntMatrix) -> Result<Rat> {
    let ctx = GradedRingContext::new(fan.clone(), weights.clone())?;
    let ones = vec![Rat::one(); fan.m];
    ctx.top_intersection_divisors(&[ones.clone(), ones])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};
    use crate::toric::omega_from_i64 as v;

    #[test]
    fn x_1_10_3_products() {
        let d = IntMatrix::from_i64(&[&[1, 1, 2, 1, 0, 0], &[0, 0, 1, 2, 1, 1]]);
        let ctx = GradedRingContext::from_weights(&d, &v(&[1, 1])).unwrap();
        let l = v(&[1, 0]);
        let m = v(&[0, 1]);
        let top = |a: usize| {
            let mut cs = vec![l.clone(); a];
            cs.extend(vec![m.clone(); 4 - a]);
            ctx.top_intersection(&cs).unwrap()
        };
        assert_eq!(top(2), rat(1, 3));
        assert_eq!(top(3), rat(-1, 6));
        assert_eq!(top(4), rat(1, 12));
        // (L+2M)M^2 = 0 forces M^4 = -LM^3/2; the degree sum 10/3 uses this value
        assert_eq!(top(0), rat(1, 12));
        assert_eq!(top(1), rat(-1, 6));
        assert_eq!(ci_degree(&d, None, &[v(&[2, 2]), v(&[2, 2])]).unwrap(), rat(10, 3));
    }

    #[test]
    fn weighted_projective() {
        let p2 = IntMatrix::from_i64(&[&[1, 1, 1]]);
        let ctx = GradedRingContext::from_weights(&p2, &v(&[1])).unwrap();
        assert_eq!(ctx.top_intersection(&[v(&[1]), v(&[1])]).unwrap(), rat(1, 1));
        let p113 = IntMatrix::from_i64(&[&[1, 1, 3]]);
        assert_eq!(ci_degree(&p113, None, &[]).unwrap(), rat(25, 3));
        let p1113 = IntMatrix::from_i64(&[&[1, 1, 1, 3]]);
        assert_eq!(ci_degree(&p1113, None, &[v(&[4])]).unwrap(), rat(16, 3));
        let p1133 = IntMatrix::from_i64(&[&[1, 1, 3, 3]]);
        assert_eq!(ci_degree(&p1133, None, &[v(&[6])]).unwrap(), rat(8, 3));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(cone_multiplicity(&IntMatrix::identity(3)).unwrap(), int(1));
        let d = IntMatrix::from_i64(&[&[1, 1, 2, 1, 0, 0], &[0, 0, 1, 2, 1, 1]]);
        let fan = fan_from_chamber(&d, &v(&[1, 1])).unwrap();
        let u23 = vec![0, 1, 4, 5];
        let u03 = vec![1, 2, 4, 5];
        assert_eq!(fan.multiplicity(&u23), int(3));
        assert_eq!(fan.multiplicity(&u03), int(2));
        assert!(cone_multiplicity(&IntMatrix::from_i64(&[&[1, 0], &[2, 0]])).is_err());
    }

    #[test]
    fn reduction_order_invariant() {
        let d = IntMatrix::from_i64(&[&[1, 1, 2, 1, 0, 0], &[0, 0, 1, 2, 1, 1]]);
        let ctx = GradedRingContext::from_weights(&d, &v(&[1, 1])).unwrap();
        for mono in [[0, 0, 3, 3], [2, 2, 2, 4], [0, 0, 0, 0], [5, 5, 5, 1]] {
            let base = ctx.monomial(&mono);
            for c in 1..5 {
                assert_eq!(ctx.with_choice(c).monomial(&mono), base);
            }
        }
    }

    #[test]
    fn wrong_factor_count() {
        let p2 = IntMatrix::from_i64(&[&[1, 1, 1]]);
        let ctx = GradedRingContext::from_weights(&p2, &v(&[1])).unwrap();
        assert!(matches!(ctx.top_intersection(&[v(&[1])]), Err(Error::DimensionMismatch(_))));
    }
}
