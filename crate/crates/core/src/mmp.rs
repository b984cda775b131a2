//! The directed MMP as a state machine on singularity baskets.
//!
//! A state records the basket (k points 1/3(1,1), n2 points A2, n1 points
//! A1) together with rho and K^2 of the minimal resolution Y. Each divisorial
//! contraction of X is a sequence of smooth blow-downs on Y, so K_Y^2 + rho(Y)
//! stays 10 along every edge.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::format_rat;
use crate::lattice::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MMPState {
    pub k: u32,
    pub n2: u32,
    pub n1: u32,
    pub rho_y: i64,
    pub k2y: Rat,
}

impl MMPState {
    pub fn new(k: u32, n2: u32, n1: u32, rho_y: i64, k2y: Rat) -> Result<Self> {
        let s = MMPState { k, n2, n1, rho_y, k2y };
        s.check()?;
        Ok(s)
    }

    /// Root state of a family from its table data: rho(Y) = r, K_Y^2 = d - k/3.
    pub fn from_family(k: u32, d: &Rat, r: i64) -> Result<Self> {
        let k2y = d - Rat::new(Int::from(k), Int::from(3));
        MMPState::new(k, 0, 0, r, k2y)
    }

    pub fn check(&self) -> Result<()> {
        if self.k + 2 * self.n2 + self.n1 > 6 {
            return Err(Error::Invalid(format!("basket {} has k + 2n2 + n1 > 6", self)));
        }
        if self.k2y.clone() + Rat::from_integer(Int::from(self.rho_y)) != Rat::from_integer(Int::from(10)) {
            return Err(Error::Invalid(format!("{}: K_Y^2 + rho(Y) != 10", self)));
        }
        if self.degree() <= Rat::zero() {
            return Err(Error::Invalid(format!("{}: K_X^2 <= 0", self)));
        }
        if self.rho_x() < 1 {
            return Err(Error::Invalid(format!("{}: rho(X) < 1", self)));
        }
        Ok(())
    }

    /// K_X^2: A1 and A2 are crepant, each 1/3(1,1) shifts K^2 by 1/3.
    pub fn degree(&self) -> Rat {
        self.k2y.clone() + Rat::new(Int::from(self.k), Int::from(3))
    }

    /// rho(X): the minimal resolution adds one curve per 1/3 and A1, two per A2.
    pub fn rho_x(&self) -> i64 {
        self.rho_y - (self.k + self.n1 + 2 * self.n2) as i64
    }
}

impl fmt::Display for MMPState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, name) in [(self.k, "1/3"), (self.n2, "A2"), (self.n1, "A1")] {
            match n {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{}x{}", n, name)),
            }
        }
        let basket = if parts.is_empty() { "smooth".to_string() } else { parts.join(" + ") };
        write!(f, "{} [rhoY={}, KY^2={}]", basket, self.rho_y, format_rat(&self.k2y))
    }
}

/// Contraction types in priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ContractionType {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    C1,
    C2,
    D1,
    D2,
    D3,
    D4,
    D5,
}

use ContractionType::*;

const DIVISORIAL: [ContractionType; 6] = [E1, E2, E3, E4, E5, E6];

impl ContractionType {
    pub fn is_divisorial(self) -> bool {
        self <= E6
    }

    /// Blow-downs on the minimal resolution.
    pub fn delta_rho(self) -> i64 {
        match self {
            E1 | E4 | E6 => 1,
            E2 => 2,
            E3 | E5 => 3,
            _ => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            E1 => "E1",
            E2 => "E2",
            E3 => "E3",
            E4 => "E4",
            E5 => "E5",
            E6 => "E6",
            C1 => "C1",
            C2 => "C2",
            D1 => "D1",
            D2 => "D2",
            D3 => "D3",
            D4 => "D4",
            D5 => "D5",
        }
    }
}

impl fmt::Display for ContractionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ContractionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [E1, E2, E3, E4, E5, E6, C1, C2, D1, D2, D3, D4, D5];
        all.into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown contraction type '{}'", s)))
    }
}

pub fn apply(s: &MMPState, t: ContractionType) -> Result<MMPState> {
    let na = |why: &str| Error::NotApplicable(format!("{} on {}: {}", t, s, why));
    let mut n = s.clone();
    match t {
        E1 => {}
        E2 => {
            if s.n1 == 0 {
                return Err(na("no A1 point"));
            }
            n.n1 -= 1;
        }
        E3 => {
            if s.n2 == 0 {
                return Err(na("no A2 point"));
            }
            n.n2 -= 1;
        }
        E4 => {
            if s.k == 0 {
                return Err(na("no 1/3(1,1) point"));
            }
            n.k -= 1;
            n.n1 += 1;
        }
        E5 => {
            if s.k == 0 || s.n1 == 0 {
                return Err(na("needs a 1/3(1,1) point and an A1 point"));
            }
            n.k -= 1;
            n.n1 -= 1;
        }
        E6 => {
            if s.k < 2 {
                return Err(na("needs two 1/3(1,1) points"));
            }
            n.k -= 2;
            n.n2 += 1;
        }
        _ => return Err(na("not a divisorial contraction")),
    }
    if s.rho_x() < 2 {
        return Err(na("rho(X) = 1"));
    }
    let dr = t.delta_rho();
    n.rho_y -= dr;
    n.k2y += Rat::from_integer(Int::from(dr));
    Ok(n)
}

/// One move of the MMP: a divisorial contraction or an end product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Divisorial(ContractionType),
    /// Conic bundle over P^1; the fibre multiset lists C1 and C2 fibres.
    ConicBundle(Vec<ContractionType>),
    RankOne(ContractionType),
}

impl Step {
    pub fn is_terminal(&self) -> bool {
        !matches!(self, Step::Divisorial(_))
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Divisorial(t) | Step::RankOne(t) => write!(f, "{}", t),
            Step::ConicBundle(fibres) => {
                let v: Vec<String> = fibres.iter().map(|t| t.to_string()).collect();
                write!(f, "C({})", v.join(","))
            }
        }
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("C(").and_then(|r| r.strip_suffix(')')) {
            let fibres = inner
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.parse::<ContractionType>())
                .collect::<Result<Vec<_>>>()?;
            if fibres.iter().any(|t| !matches!(t, C1 | C2)) {
                return Err(Error::Parse(format!("bad conic bundle fibres in '{}'", s)));
            }
            return Ok(Step::ConicBundle(fibres));
        }
        let t: ContractionType = s.parse()?;
        Ok(match t {
            D1 | D2 | D3 | D4 | D5 => Step::RankOne(t),
            C1 | C2 => return Err(Error::Parse(format!("write conic bundles as C(...), got '{}'", s))),
            _ => Step::Divisorial(t),
        })
    }
}

pub fn parse_path(s: &str) -> Result<Vec<Step>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push(cur.parse()?);
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    out.push(cur.parse()?);
    Ok(out)
}

pub fn format_path(path: &[Step]) -> String {
    path.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

/// The Picard-rank-one end products: basket (k, n2, n1) and (rho(Y), K_Y^2).
pub const RANK_ONE: [(ContractionType, (u32, u32, u32), i64, i64); 5] = [
    (D1, (0, 0, 0), 1, 9),
    (D2, (0, 0, 1), 2, 8),
    (D3, (0, 1, 1), 4, 6),
    (D4, (0, 3, 0), 7, 3),
    (D5, (1, 0, 0), 2, 8),
];

fn terminal_steps(s: &MMPState) -> Vec<Step> {
    let mut out = Vec::new();
    match s.rho_x() {
        1 => {
            for (t, basket, rho, k2) in RANK_ONE {
                if (s.k, s.n2, s.n1) == basket && s.rho_y == rho && s.k2y == Rat::from_integer(Int::from(k2)) {
                    out.push(Step::RankOne(t));
                }
            }
        }
        2 => {
            // every singular point sits on a special fibre: A1 pairs, and 1/3 with A2
            if s.n1 % 2 == 0 && s.k == s.n2 {
                let mut fibres = vec![C1; (s.n1 / 2) as usize];
                fibres.extend(std::iter::repeat(C2).take(s.k as usize));
                out.push(Step::ConicBundle(fibres));
            }
        }
        _ => {}
    }
    out
}

/// Singularity created by `t` that a higher-priority contraction may consume.
fn created_by(t: ContractionType) -> Option<ContractionType> {
    match t {
        E4 => Some(E2),
        E6 => Some(E3),
        _ => None,
    }
}

/// Moves allowed after `last` in the directed order.
///
/// E1 is never offered: roots have no floating (-1)-curves, and a later E1
/// would have higher priority than any previous step while consuming nothing.
pub fn directed_available(s: &MMPState, last: Option<ContractionType>) -> Vec<Step> {
    let mut out = Vec::new();
    for t in DIVISORIAL {
        if t == E1 || apply(s, t).is_err() {
            continue;
        }
        if let Some(l) = last {
            if t < l && created_by(l) != Some(t) {
                continue;
            }
            if l == E6 && t == E3 {
                continue;
            }
        }
        out.push(Step::Divisorial(t));
    }
    out.extend(terminal_steps(s));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Raw,
    Curated,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Mode::Raw),
            "curated" => Ok(Mode::Curated),
            _ => Err(Error::Parse(format!("unknown mode '{}'", s))),
        }
    }
}

/// A curated branch removal: the branch starting with `path` is cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prune {
    pub path: Vec<Step>,
    pub citation: String,
}

pub const DEAD_END_CITATION: &str = "no conic bundle or rank-one end in the contraction list";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MMPNode {
    pub state: MMPState,
    pub children: Vec<MMPEdge>,
    pub dead_end: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MMPEdge {
    pub step: Step,
    /// Set on curated cuts; the subtree is dropped.
    pub pruned: Option<String>,
    pub node: Option<MMPNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MMPTree {
    pub mode: Mode,
    pub root: MMPNode,
}

pub fn enumerate_tree(root: &MMPState, mode: Mode, prunes: &[Prune]) -> Result<MMPTree> {
    root.check()?;
    let prunes: &[Prune] = if mode == Mode::Raw { &[] } else { prunes };
    let mut path = Vec::new();
    let node = grow(root, None, mode, prunes, &mut path);
    Ok(MMPTree { mode, root: node })
}

fn grow(s: &MMPState, last: Option<ContractionType>, mode: Mode, prunes: &[Prune], path: &mut Vec<Step>) -> MMPNode {
    let mut children = Vec::new();
    for step in directed_available(s, last) {
        path.push(step.clone());
        let cut = prunes.iter().find(|p| p.path == *path).map(|p| p.citation.clone());
        let edge = if cut.is_some() {
            MMPEdge { step: step.clone(), pruned: cut, node: None }
        } else {
            match &step {
                Step::Divisorial(t) => {
                    // directed_available only offers applicable moves
                    let next = apply(s, *t).expect("available move applies");
                    let child = grow(&next, Some(*t), mode, prunes, path);
                    if mode == Mode::Curated && !has_terminal(&child) {
                        MMPEdge { step: step.clone(), pruned: Some(DEAD_END_CITATION.to_string()), node: None }
                    } else {
                        MMPEdge { step: step.clone(), pruned: None, node: Some(child) }
                    }
                }
                _ => MMPEdge { step: step.clone(), pruned: None, node: None },
            }
        };
        path.pop();
        children.push(edge);
    }
    let dead_end = children.is_empty();
    MMPNode { state: s.clone(), children, dead_end }
}

fn has_terminal(n: &MMPNode) -> bool {
    n.children.iter().any(|e| e.pruned.is_none() && (e.step.is_terminal() || e.node.as_ref().is_some_and(has_terminal)))
}

impl MMPTree {
    /// Complete root-to-terminal paths, skipping pruned branches.
    pub fn paths(&self) -> Vec<Vec<Step>> {
        let mut out = Vec::new();
        collect_paths(&self.root, &mut Vec::new(), &mut out);
        out
    }

    pub fn dead_ends(&self) -> Vec<Vec<Step>> {
        let mut out = Vec::new();
        collect_dead(&self.root, &mut Vec::new(), &mut out);
        out
    }

    /// Every (state, step, next state) along unpruned divisorial edges.
    pub fn edges(&self) -> Vec<(MMPState, ContractionType, MMPState)> {
        let mut out = Vec::new();
        collect_edges(&self.root, &mut out);
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.root.state);
        render(&self.root, 1, &mut out);
        out
    }
}

fn collect_paths(n: &MMPNode, path: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
    for e in &n.children {
        if e.pruned.is_some() {
            continue;
        }
        path.push(e.step.clone());
        if e.step.is_terminal() {
            out.push(path.clone());
        } else if let Some(c) = &e.node {
            collect_paths(c, path, out);
        }
        path.pop();
    }
}

fn collect_dead(n: &MMPNode, path: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
    if n.dead_end {
        out.push(path.clone());
    }
    for e in &n.children {
        if let Some(c) = &e.node {
            path.push(e.step.clone());
            collect_dead(c, path, out);
            path.pop();
        }
    }
}

fn collect_edges(n: &MMPNode, out: &mut Vec<(MMPState, ContractionType, MMPState)>) {
    for e in &n.children {
        if let (Step::Divisorial(t), Some(c)) = (&e.step, &e.node) {
            out.push((n.state.clone(), *t, c.state.clone()));
            collect_edges(c, out);
        }
    }
}

fn render(n: &MMPNode, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    if n.dead_end {
        out.push_str(&format!("{}(dead end)\n", pad));
    }
    for e in &n.children {
        match (&e.pruned, &e.node) {
            (Some(why), _) => out.push_str(&format!("{}{} x pruned: {}\n", pad, e.step, why)),
            (None, Some(c)) => {
                out.push_str(&format!("{}{} -> {}\n", pad, e.step, c.state));
                render(c, depth + 1, out);
            }
            (None, None) => out.push_str(&format!("{}{} (end)\n", pad, e.step)),
        }
    }
}

/// Follow `path` from `root`, checking every move is offered by the directed rules.
pub fn run_path(root: &MMPState, path: &[Step]) -> Result<MMPState> {
    let mut s = root.clone();
    let mut last = None;
    for (i, step) in path.iter().enumerate() {
        if !directed_available(&s, last).contains(step) {
            return Err(Error::NotApplicable(format!("step {} ({}) from {}", i + 1, step, s)));
        }
        if step.is_terminal() {
            if i + 1 != path.len() {
                return Err(Error::Invalid(format!("terminal {} is not the last step", step)));
            }
            return Ok(s);
        }
        if let Step::Divisorial(t) = step {
            s = apply(&s, *t)?;
            last = Some(*t);
        }
    }
    Err(Error::Invalid("path has no terminal step".into()))
}

/// Whether every step of `path` is offered in turn; the path need not end in a terminal.
pub fn path_offered(root: &MMPState, path: &[Step]) -> bool {
    let mut s = root.clone();
    let mut last = None;
    for step in path {
        if !directed_available(&s, last).contains(step) {
            return false;
        }
        match step {
            Step::Divisorial(t) => match apply(&s, *t) {
                Ok(n) => {
                    s = n;
                    last = Some(*t);
                }
                Err(_) => return false,
            },
            _ => return true,
        }
    }
    true
}

/// A root of the theorem: a family without floating curves and its directed MMPs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MmpRoot {
    pub family: String,
    pub state: MMPState,
    pub sequences: Vec<Vec<Step>>,
    pub prunes: Vec<Prune>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceCheck {
    pub family: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
}

/// Each root: every stated sequence runs under the directed rules, lies in the
/// raw tree, and the curated tree has exactly the stated sequences.
pub fn verify_mmp_sequences(roots: &[MmpRoot]) -> Vec<SequenceCheck> {
    let mut out = Vec::new();
    for root in roots {
        let expected: Vec<String> = root.sequences.iter().map(|p| format_path(p)).collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        let result = (|| -> Result<(bool, String)> {
            for p in &root.sequences {
                run_path(&root.state, p)?;
            }
            let raw = enumerate_tree(&root.state, Mode::Raw, &[])?;
            let raw_paths: Vec<String> = raw.paths().iter().map(|p| format_path(p)).collect();
            let cur = enumerate_tree(&root.state, Mode::Curated, &root.prunes)?;
            let mut cur_paths: Vec<String> = cur.paths().iter().map(|p| format_path(p)).collect();
            cur_paths.sort();
            let in_raw = expected.iter().all(|p| raw_paths.contains(p));
            let stray: Vec<String> =
                root.prunes.iter().filter(|p| !path_offered(&root.state, &p.path)).map(|p| format_path(&p.path)).collect();
            let ok = in_raw && stray.is_empty() && cur_paths == expected_sorted && cur.dead_ends().is_empty();
            let mut computed = format!("curated [{}]; raw has {} paths", cur_paths.join(" | "), raw_paths.len());
            if !stray.is_empty() {
                computed.push_str(&format!("; prunes off the raw tree: {}", stray.join(" | ")));
            }
            Ok((ok, computed))
        })();
        let (passed, computed) = match result {
            Ok(r) => r,
            Err(e) => (false, e.to_string()),
        };
        out.push(SequenceCheck { family: root.family.clone(), passed, expected: expected.join(" | "), computed });
    }
    out
}

/// Bookkeeping of one edge: Noether on Y, K_X^2 increases, basket bound.
pub fn edge_is_consistent(a: &MMPState, b: &MMPState) -> bool {
    b.check().is_ok() && b.degree() > a.degree() && b.rho_x() == a.rho_x() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn st(k: u32, r: i64, d: Rat) -> MMPState {
        MMPState::from_family(k, &d, r).unwrap()
    }

    fn p(s: &str) -> Vec<Step> {
        parse_path(s).unwrap()
    }

    #[test]
    fn x47_sequence_ends_on_p113() {
        let mut s = st(4, 9, rat(7, 3));
        assert_eq!(s.k2y, rat(1, 1));
        for t in [E4, E2, E4, E5] {
            s = apply(&s, t).unwrap();
        }
        assert_eq!(s, MMPState::new(1, 0, 0, 2, rat(8, 1)).unwrap());
        assert_eq!(terminal_steps(&s), vec![Step::RankOne(D5)]);
    }

    #[test]
    fn x62_three_e6_is_d4() {
        let mut s = st(6, 10, rat(2, 1));
        for _ in 0..3 {
            s = apply(&s, E6).unwrap();
        }
        assert_eq!((s.k, s.n2, s.n1, s.rho_y), (0, 3, 0, 7));
        assert_eq!(s.k2y, rat(3, 1));
        assert_eq!(terminal_steps(&s), vec![Step::RankOne(D4)]);
    }

    #[test]
    fn e2_needs_a1() {
        let s = st(4, 9, rat(7, 3));
        assert!(matches!(apply(&s, E2), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn raw_root_k4_offers_e4_and_e6() {
        let s = st(4, 9, rat(7, 3));
        assert_eq!(directed_available(&s, None), vec![Step::Divisorial(E4), Step::Divisorial(E6)]);
    }

    #[test]
    fn no_e3_right_after_e6() {
        let s = MMPState::new(2, 1, 0, 7, rat(3, 1)).unwrap();
        let avail = directed_available(&s, Some(E6));
        assert!(!avail.contains(&Step::Divisorial(E3)));
        let avail = directed_available(&s, None);
        assert!(avail.contains(&Step::Divisorial(E3)));
    }

    #[test]
    fn two_a1_on_rank_two_is_a_conic_bundle() {
        let s = MMPState::new(0, 0, 2, 4, rat(6, 1)).unwrap();
        assert_eq!(s.rho_x(), 2);
        let avail = directed_available(&s, Some(E2));
        assert_eq!(avail, vec![Step::Divisorial(E2), Step::ConicBundle(vec![C1])]);
    }

    #[test]
    fn bad_root_rejected() {
        assert!(MMPState::new(4, 1, 1, 10, rat(0, 1)).is_err());
        assert!(MMPState::new(1, 0, 0, 3, rat(8, 1)).is_err());
    }

    #[test]
    fn k6_raw_and_curated() {
        let s = st(6, 10, rat(2, 1));
        let raw = enumerate_tree(&s, Mode::Raw, &[]).unwrap();
        let paths: Vec<String> = raw.paths().iter().map(|p| format_path(p)).collect();
        assert!(paths.contains(&"E6,E6,E6,D4".to_string()));
        assert!(paths.contains(&"E6,E6,C(C2,C2)".to_string()));
        let prunes = vec![Prune { path: p("E4"), citation: "k=6: first contraction is not E4".into() }];
        let cur = enumerate_tree(&s, Mode::Curated, &prunes).unwrap();
        let mut paths: Vec<String> = cur.paths().iter().map(|p| format_path(p)).collect();
        paths.sort();
        assert_eq!(paths, vec!["E6,E6,C(C2,C2)", "E6,E6,E6,D4"]);
        assert!(cur.dead_ends().is_empty());
    }

    #[test]
    fn path_round_trip() {
        let s = "E4,E2,C(C1,C2),D5";
        assert_eq!(format_path(&p(s)), s);
        assert_eq!(format_path(&p("E4,C()")), "E4,C()");
        assert!(parse_path("E7").is_err());
    }

    #[test]
    fn run_path_rejects_priority_violation() {
        // E4 after E5 consumes nothing E5 created
        let s = st(5, 10, rat(5, 3));
        assert!(run_path(&s, &p("E4,E4,E5,E5,D5")).is_ok());
        assert!(run_path(&s, &p("E4,E5,E4,E5,D5")).is_err());
    }
}
