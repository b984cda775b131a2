//! Cyclic quotient surface singularities 1/r(1,a): normal forms, resolutions,
//! class T, and the singularity content of a two-dimensional cone.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1/r(1,a) in normal form; `r == 1` is a smooth point with `a == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicQuotient {
    pub r: i64,
    pub a: i64,
}

impl CyclicQuotient {
    pub const SMOOTH: CyclicQuotient = CyclicQuotient { r: 1, a: 0 };
    pub const A1: CyclicQuotient = CyclicQuotient { r: 2, a: 1 };
    pub const A2: CyclicQuotient = CyclicQuotient { r: 3, a: 2 };
    pub const ONE_THIRD: CyclicQuotient = CyclicQuotient { r: 3, a: 1 };

    /// Normal form of 1/r(1,a); `a` need only be a unit mod r.
    pub fn new(r: i64, a: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::Invalid(format!("order {} must be positive", r)));
        }
        if r == 1 {
            return Ok(Self::SMOOTH);
        }
        let a = a.rem_euclid(r);
        if a.gcd(&r) != 1 {
            return Err(Error::Invalid(format!("1/{}({}) is not isolated", r, a)));
        }
        let inv = mod_inverse(a, r);
        Ok(CyclicQuotient { r, a: a.min(inv) })
    }

    pub fn is_smooth(&self) -> bool {
        self.r == 1
    }

    pub fn is_du_val(&self) -> bool {
        self.r == 1 || self.a == self.r - 1
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 1 {
            write!(f, "smooth")
        } else {
            write!(f, "1/{}(1,{})", self.r, self.a)
        }
    }
}

pub fn mod_inverse(a: i64, r: i64) -> i64 {
    let e = a.extended_gcd(&r);
    debug_assert_eq!(e.gcd.abs(), 1);
    (e.x * e.gcd.signum()).rem_euclid(r)
}

/// Multiset of singularities in canonical (sorted) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Basket(Vec<CyclicQuotient>);

impl Basket {
    pub fn new(mut items: Vec<CyclicQuotient>) -> Self {
        items.retain(|s| !s.is_smooth());
        items.sort();
        Basket(items)
    }

    pub fn items(&self) -> &[CyclicQuotient] {
        &self.0
    }

    pub fn count(&self, s: CyclicQuotient) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "none");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let c = self.count(s);
            parts.push(if c == 1 { s.to_string() } else { format!("{} x {}", c, s) });
            i += c;
        }
        write!(f, "{}", parts.join(", "))
    }
}

fn det2(u: (i64, i64), v: (i64, i64)) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

fn check_primitive(u: (i64, i64)) -> Result<()> {
    if u.0.gcd(&u.1) != 1 {
        return Err(Error::DegenerateCone(format!("({},{}) is not primitive", u.0, u.1)));
    }
    Ok(())
}

/// Type of the affine toric surface of cone(u, v).
pub fn cone_singularity(u: (i64, i64), v: (i64, i64)) -> Result<CyclicQuotient> {
    check_primitive(u)?;
    check_primitive(v)?;
    let d = det2(u, v);
    if d == 0 {
        return Err(Error::DegenerateCone(format!(
            "({},{}) and ({},{}) are parallel",
            u.0, u.1, v.0, v.1
        )));
    }
    // unimodular M with M u = (0,1), built from a Bezout relation
    let e = u.0.extended_gcd(&u.1);
    let (p, q) = (e.x * e.gcd, e.y * e.gcd); // p u0 + q u1 = 1
    // M = [[u1, -u0], [p, q]] has det u1 q + u0 p = 1 and sends u to (0, 1)
    let mv = (u.1 * v.0 - u.0 * v.1, p * v.0 + q * v.1);
    let r = d.abs();
    debug_assert_eq!(mv.0.abs(), r);
    // after reflecting the first coordinate to +r the cone is <e2, r e1 - a e2>
    CyclicQuotient::new(r, -mv.1)
}

/// Negated self-intersections of the minimal resolution: continued fraction of r/a.
pub fn hj_expansion(s: CyclicQuotient) -> Result<Vec<i64>> {
    if s.r == 1 {
        return Err(Error::SmoothPoint);
    }
    let (mut n, mut d) = (s.r, s.a);
    let mut out = Vec::new();
    while d != 0 {
        let b = Integer::div_ceil(&n, &d);
        out.push(b);
        let next = b * d - n;
        n = d;
        d = next;
    }
    Ok(out)
}

/// Admits a qG-smoothing: r | (a+1)^2.
pub fn is_class_t(s: CyclicQuotient) -> bool {
    s.r == 1 || ((s.a + 1) * (s.a + 1)) % s.r == 0
}

/// The cone presenting 1/r(1,a): <(0,1), (r,-a)>.
pub fn standard_cone(s: CyclicQuotient) -> ((i64, i64), (i64, i64)) {
    if s.r == 1 {
        return ((0, 1), (1, 0));
    }
    ((0, 1), (s.r, -s.a))
}

/// Number of primitive T-cones and the residual R-cone type of cone(u, v).
pub fn singularity_content_of_cone(
    u: (i64, i64),
    v: (i64, i64),
) -> Result<(i64, Option<CyclicQuotient>)> {
    cone_singularity(u, v)?;
    let diff = (v.0 - u.0, v.1 - u.1);
    let width = diff.0.gcd(&diff.1);
    let height = det2(u, v).abs() / width;
    let n = width / height;
    let rest = width % height;
    if rest == 0 {
        return Ok((n, None));
    }
    let step = (diff.0 / width, diff.1 / width);
    let w = (u.0 + rest * step.0, u.1 + rest * step.1);
    Ok((n, Some(cone_singularity(u, w)?)))
}

pub fn singularity_content(s: CyclicQuotient) -> (i64, Option<CyclicQuotient>) {
    let (u, v) = standard_cone(s);
    singularity_content_of_cone(u, v).expect("standard cone is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_types() {
        assert_eq!(cone_singularity((1, 0), (0, 1)).unwrap(), CyclicQuotient::SMOOTH);
        assert_eq!(cone_singularity((1, 0), (-1, -3)).unwrap(), CyclicQuotient::ONE_THIRD);
        assert_eq!(cone_singularity((1, 0), (1, 2)).unwrap(), CyclicQuotient::A1);
        assert!(matches!(cone_singularity((1, 0), (-1, 0)), Err(Error::DegenerateCone(_))));
    }

    #[test]
    fn standard_cone_round_trip() {
        for r in 1..40 {
            for a in 0..r {
                let Ok(s) = CyclicQuotient::new(r, a) else { continue };
                let (u, v) = standard_cone(s);
                assert_eq!(cone_singularity(u, v).unwrap(), s);
            }
        }
    }

    #[test]
    fn hj() {
        assert_eq!(hj_expansion(CyclicQuotient::ONE_THIRD).unwrap(), vec![3]);
        assert_eq!(hj_expansion(CyclicQuotient::A1).unwrap(), vec![2]);
        assert_eq!(hj_expansion(CyclicQuotient::new(12, 7).unwrap()).unwrap(), vec![2, 4, 2]);
        assert_eq!(hj_expansion(CyclicQuotient::SMOOTH), Err(Error::SmoothPoint));
    }

    #[test]
    fn class_t() {
        assert!(is_class_t(CyclicQuotient::new(4, 1).unwrap()));
        assert!(!is_class_t(CyclicQuotient::ONE_THIRD));
        assert!(is_class_t(CyclicQuotient::SMOOTH));
    }

    #[test]
    fn content() {
        assert_eq!(singularity_content(CyclicQuotient::ONE_THIRD), (0, Some(CyclicQuotient::ONE_THIRD)));
        assert_eq!(singularity_content_of_cone((1, 0), (0, 1)).unwrap(), (1, None));
        assert_eq!(singularity_content_of_cone((1, 1), (-2, 1)).unwrap(), (3, None));
        let s = CyclicQuotient::new(12, 7).unwrap();
        assert_eq!(singularity_content(s), (1, Some(CyclicQuotient::ONE_THIRD)));
    }
}
