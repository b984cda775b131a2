//! Numerical invariants of del Pezzo surfaces with k points 1/3(1,1):
//! Riemann–Roch, Noether, the Poincaré series, defect bounds, the candidate
//! sieve, and the blow-up cascade of families.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{int, rat, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInvariants {
    pub k: i64,
    pub d: Rat,
    pub h0: i64,
    pub r: i64,
    pub n: i64,
    pub c2hat: Rat,
    pub moduli: i64,
}

fn third(k: i64) -> Rat {
    rat(k, 3)
}

fn to_i64(x: &Rat) -> i64 {
    x.to_integer().to_i64().expect("small integer")
}

fn check_congruence(k: i64, d: &Rat) -> Result<()> {
    if !(d - third(k)).is_integer() {
        return Err(Error::BadCongruence(format!("{} with k = {}", d, k)));
    }
    Ok(())
}

pub fn invariants_of(k: i64, d: &Rat) -> Result<FamilyInvariants> {
    check_congruence(k, d)?;
    if !d.is_positive() {
        return Err(Error::Invalid(format!("degree {} must be positive", d)));
    }
    let h0 = Rat::one() + d - third(k);
    let r = rat(10, 1) - d + third(k);
    let n = rat(12, 1) - d - rat(5 * k, 3);
    let c2hat = &n + third(k);
    let moduli = rat(10, 1) - d * rat(2, 1) - rat(4 * k, 3);
    Ok(FamilyInvariants {
        k,
        d: d.clone(),
        h0: to_i64(&h0),
        r: to_i64(&r),
        n: to_i64(&n),
        c2hat,
        moduli: to_i64(&moduli),
    })
}

/// Coefficients of Σ h^0(-nK) t^n from the closed rational form.
pub fn poincare_series(k: i64, d: &Rat, terms: usize) -> Result<Vec<Int>> {
    check_congruence(k, d)?;
    let a1 = to_i64(&(d - Rat::one() - third(k)));
    let a2 = to_i64(&(d + rat(2 * k, 3)));
    let num = [1, a1, a2, a1, 1];
    // 1/((1-t)^2 (1-t^3)) has coefficient c_n = Σ_{3j ≤ n} (n - 3j + 1)
    let denom_coeff = |n: i64| -> i64 { (0..=n / 3).map(|j| n - 3 * j + 1).sum() };
    Ok((0..terms as i64)
        .map(|n| {
            let s: i64 = num
                .iter()
                .enumerate()
                .filter(|(i, _)| *i as i64 <= n)
                .map(|(i, a)| a * denom_coeff(n - i as i64))
                .sum();
            int(s)
        })
        .collect())
}

/// (σ_min, σ_max) with k − r/2 ≤ σ ≤ k/2.
pub fn defect_bounds(k: i64, d: &Rat) -> Result<(i64, i64)> {
    check_congruence(k, d)?;
    let r = rat(10, 1) - d + third(k);
    let low = (Rat::from_integer(int(k)) - r / rat(2, 1)).ceil();
    let sigma_min = to_i64(&low).max(0);
    Ok((sigma_min, Integer::div_floor(&k, &2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Occurs,
    ExcludedByBounds,
    ExcludedByCover,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Occurs => "occurs",
            Verdict::ExcludedByBounds => "excluded-by-bounds",
            Verdict::ExcludedByCover => "excluded-by-cover",
            Verdict::Undecided => "undecided",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateStatus {
    pub k: i64,
    pub d: Rat,
    pub sigma_min: i64,
    pub sigma_max: i64,
    pub verdict: Verdict,
}

/// Pairs (k, d) with d ≡ k/3, 0 < d ≤ 12 − 4k/3; flags those failing h0 ≥ 0 or r > k.
fn raw_candidates() -> Vec<(i64, Rat, bool)> {
    let mut out = Vec::new();
    for k in 1.. {
        let top = rat(12, 1) - rat(4 * k, 3);
        if !top.is_positive() {
            break;
        }
        let mut d = third(k) - (third(k)).floor();
        if d.is_zero() {
            d = Rat::one();
        }
        while d <= top {
            let h0 = Rat::one() + &d - third(k);
            let r = rat(10, 1) - &d + third(k);
            let ok = !h0.is_negative() && r > Rat::from_integer(int(k));
            out.push((k, d.clone(), ok));
            d += Rat::one();
        }
    }
    out
}

/// The sieve: numerical bounds, then exclusion by 3^σ-to-1 covers, to a fixpoint.
/// Survivors that are not in the cascade are reported as undecided.
pub fn candidate_sieve() -> Vec<CandidateStatus> {
    let raw = raw_candidates();
    let mut alive: BTreeSet<(i64, Rat)> =
        raw.iter().filter(|c| c.2).map(|(k, d, _)| (*k, d.clone())).collect();
    loop {
        let mut dropped = Vec::new();
        for (k, d) in &alive {
            let (smin, _) = defect_bounds(*k, d).expect("congruent by construction");
            if smin == 0 {
                continue;
            }
            let target = d * Rat::from_integer(int(3).pow(smin as u32));
            let smooth = target.is_integer() && target >= Rat::one() && target <= rat(9, 1);
            let singular = alive.iter().any(|(_, d2)| *d2 == target);
            if !smooth && !singular {
                dropped.push((*k, d.clone()));
            }
        }
        if dropped.is_empty() {
            break;
        }
        for c in dropped {
            alive.remove(&c);
        }
    }
    let occurring = cascade_pairs();
    raw.into_iter()
        .map(|(k, d, ok)| {
            let (sigma_min, sigma_max) = defect_bounds(k, &d).expect("congruent by construction");
            let verdict = if !ok {
                Verdict::ExcludedByBounds
            } else if !alive.contains(&(k, d.clone())) {
                Verdict::ExcludedByCover
            } else if occurring.contains(&(k, d.clone())) {
                Verdict::Occurs
            } else {
                Verdict::Undecided
            };
            CandidateStatus { k, d, sigma_min, sigma_max, verdict }
        })
        .collect()
}

/// Roots (k, d, number of blow-ups) of the cascade.
pub fn cascade_roots() -> Vec<(i64, Rat, i64)> {
    vec![
        (1, rat(25, 3), 8),
        (2, rat(17, 3), 5),
        (3, rat(5, 1), 4),
        (4, rat(7, 3), 2),
        (5, rat(5, 3), 1),
        (6, rat(2, 1), 1),
    ]
}

pub fn cascade(roots: &[(i64, Rat, i64)]) -> BTreeSet<(i64, Rat)> {
    let mut out = BTreeSet::new();
    for (k, d, budget) in roots {
        for j in 0..=*budget {
            out.insert((*k, d - Rat::from_integer(int(j))));
        }
    }
    out
}

pub fn cascade_pairs() -> BTreeSet<(i64, Rat)> {
    cascade(&cascade_roots())
}

/// Family names: S for the k = 1 root, B for the two index-2 families, X otherwise.
pub fn cascade_families() -> Vec<(String, i64)> {
    let mut out: Vec<(String, i64)> = Vec::new();
    for (k, d) in cascade_pairs() {
        let series = if k == 1 && d == rat(25, 3) { 'S' } else { 'X' };
        let f = if series == 'S' { 5 } else { 1 };
        out.push((family_name(series, k, &d), f));
    }
    out.push((family_name('B', 1, &rat(16, 3)), 2));
    out.push((family_name('B', 2, &rat(8, 3)), 2));
    out
}

pub fn format_rat(d: &Rat) -> String {
    if d.is_integer() {
        d.to_integer().to_string()
    } else {
        format!("{}/{}", d.numer(), d.denom())
    }
}

pub fn family_name(series: char, k: i64, d: &Rat) -> String {
    format!("{}_{{{},{}}}", series, k, format_rat(d))
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {:?}", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|_| bad())?;
            let d: Int = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// "X_{1,22/3}" → ('X', 1, 22/3).
pub fn parse_family_name(name: &str) -> Result<(char, i64, Rat)> {
    let bad = || Error::Parse(format!("not a family name: {:?}", name));
    let mut chars = name.chars();
    let series = chars.next().ok_or_else(bad)?;
    let rest = chars.as_str().strip_prefix("_{").and_then(|s| s.strip_suffix('}')).ok_or_else(bad)?;
    let (k, d) = rest.split_once(',').ok_or_else(bad)?;
    let k: i64 = k.trim().parse().map_err(|_| bad())?;
    Ok((series, k, parse_rat(d)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let i = invariants_of(4, &rat(7, 3)).unwrap();
        assert_eq!((i.h0, i.r, i.moduli), (2, 9, 0));
        let i = invariants_of(1, &rat(25, 3)).unwrap();
        assert_eq!((i.h0, i.r, i.moduli), (9, 2, -8));
        let i = invariants_of(6, &rat(1, 1)).unwrap();
        assert_eq!((i.h0, i.r, i.moduli), (0, 11, 0));
        assert!(matches!(invariants_of(1, &rat(1, 1)), Err(Error::BadCongruence(_))));
    }

    #[test]
    fn poincare() {
        let p = poincare_series(1, &rat(25, 3), 4).unwrap();
        assert_eq!(p[0], int(1));
        assert_eq!(p[1], int(9));
        // degree-10 monomials in weights (1,1,3): 11 + 8 + 5 + 2
        assert_eq!(p[2], int(26));
    }

    #[test]
    fn defects() {
        assert_eq!(defect_bounds(6, &rat(1, 1)).unwrap().0, 1);
        assert_eq!(defect_bounds(7, &rat(4, 3)).unwrap().0, 2);
        assert_eq!(defect_bounds(1, &rat(7, 3)).unwrap().1, 0);
    }

    #[test]
    fn sieve_examples() {
        let s = candidate_sieve();
        let find = |k: i64, d: Rat| s.iter().find(|c| c.k == k && c.d == d).unwrap().verdict;
        assert_eq!(find(2, rat(23, 3)), Verdict::ExcludedByCover);
        assert_eq!(find(5, rat(8, 3)), Verdict::Undecided);
        assert_eq!(find(6, rat(1, 1)), Verdict::Occurs);
        assert_eq!(find(6, rat(2, 1)), Verdict::Occurs);
        assert_eq!(find(7, rat(4, 3)), Verdict::ExcludedByCover);
    }

    #[test]
    fn cascade_examples() {
        let five = cascade(&[(5, rat(5, 3), 1)]);
        assert_eq!(five.into_iter().map(|x| x.1).collect::<Vec<_>>(), vec![rat(2, 3), rat(5, 3)]);
        let three = cascade(&[(3, rat(5, 1), 4)]);
        assert_eq!(three.len(), 5);
        assert_eq!(cascade_families().len(), 29);
    }

    #[test]
    fn names() {
        assert_eq!(family_name('X', 1, &rat(22, 3)), "X_{1,22/3}");
        assert_eq!(family_name('X', 3, &rat(5, 1)), "X_{3,5}");
        assert_eq!(parse_family_name("B_{2,8/3}").unwrap(), ('B', 2, rat(8, 3)));
        assert!(parse_family_name("X_1,2").is_err());
    }
}
