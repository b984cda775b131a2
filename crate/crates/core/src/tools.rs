//! Text formats and one-shot analyses shared by the command line and the web demo.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::format_rat;
use crate::lattice::{int, Int, IntMatrix};
use crate::mmp::{enumerate_tree, MMPTree, Mode};
use crate::polygon::{face_fan, match_family, singularity_content, toric_degree, FanoPolygon, Point};
use crate::registry::Registry;

/// Weight file: `r m`, then r rows of m integers, then optionally a line
/// starting with `|` followed by one bundle (a column of length r) per line.
pub fn parse_weight_file(text: &str) -> Result<(IntMatrix, Vec<Vec<Int>>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| Error::Parse("empty weight file".into()))?;
    let dims = parse_ints(head, ' ')?;
    let [r, m] = dims[..] else {
        return Err(Error::Parse(format!("first line must be 'r m', got '{}'", head)));
    };
    if r <= 0 || m <= 0 {
        return Err(Error::Parse("r and m must be positive".into()));
    }
    let mut rows = Vec::new();
    for _ in 0..r {
        let l = lines.next().ok_or_else(|| Error::Parse(format!("expected {} weight rows", r)))?;
        let row = parse_ints(l, ' ')?;
        if row.len() != m as usize {
            return Err(Error::Parse(format!("row '{}' should have {} entries", l, m)));
        }
        rows.push(row);
    }
    let mut bundles = Vec::new();
    if let Some(l) = lines.next() {
        if !l.starts_with('|') {
            return Err(Error::Parse(format!("unexpected line '{}' (bundles start with '|')", l)));
        }
        bundles = parse_bundle_lines(lines, r as usize)?;
    }
    Ok((IntMatrix::from_vecs(&rows), bundles))
}

/// Bundle file: one column vector per line.
pub fn parse_bundle_file(text: &str, r: usize) -> Result<Vec<Vec<Int>>> {
    let lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('|'));
    parse_bundle_lines(lines, r)
}

fn parse_bundle_lines<'a>(lines: impl Iterator<Item = &'a str>, r: usize) -> Result<Vec<Vec<Int>>> {
    lines
        .map(|l| {
            let v = parse_ints(l, ' ')?;
            if v.len() != r {
                return Err(Error::Parse(format!("bundle '{}' should have {} entries", l, r)));
            }
            Ok(v.into_iter().map(int).collect())
        })
        .collect()
}

/// Integers separated by `sep` (and/or whitespace).
pub fn parse_ints(s: &str, sep: char) -> Result<Vec<i64>> {
    s.split(|c: char| c == sep || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("'{}' is not an integer", t))))
        .collect()
}

/// `"a,b,c"` as a class vector.
pub fn parse_class(s: &str) -> Result<Vec<Int>> {
    Ok(parse_ints(s, ',')?.into_iter().map(int).collect())
}

/// `"x,y;x,y;..."`.
pub fn parse_vertices(s: &str) -> Result<Vec<Point>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match parse_ints(t, ',')?[..] {
            [x, y] => Ok((x, y)),
            _ => Err(Error::Parse(format!("vertex '{}' is not 'x,y'", t))),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonAnalysis {
    pub vertices: Vec<[i64; 2]>,
    pub n: i64,
    pub basket: String,
    pub degree: String,
    pub family: Option<String>,
}

/// Singularity content, -K^2 and the family matched against the registry.
pub fn analyze_polygon(reg: &Registry, vertices: &[Point]) -> Result<PolygonAnalysis> {
    let p = FanoPolygon::new(vertices)?;
    let content = singularity_content(&p)?;
    let degree = toric_degree(&face_fan(&p))?;
    let names: Vec<String> = reg.families.iter().map(|f| f.name.clone()).collect();
    let resolved: Vec<(FanoPolygon, String)> = reg
        .polygons
        .iter()
        .filter_map(|q| {
            let pts: Vec<Point> = q.vertices.iter().map(|v| (v[0], v[1])).collect();
            Some((FanoPolygon::new(&pts).ok()?, q.deforms_to.clone()))
        })
        .collect();
    Ok(PolygonAnalysis {
        vertices: p.vertices().iter().map(|v| [v.0, v.1]).collect(),
        n: content.n,
        basket: content.basket.to_string(),
        degree: format_rat(&degree),
        family: match_family(&p, &names, &resolved).ok(),
    })
}

impl PolygonAnalysis {
    pub fn render_text(&self) -> String {
        let vs: Vec<String> = self.vertices.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
        format!(
            "vertices: {}\nn: {}\nbasket: {}\n-K^2: {}\nfamily: {}\n",
            vs.join(" "),
            self.n,
            self.basket,
            self.degree,
            self.family.as_deref().unwrap_or("none")
        )
    }
}

/// Trees of every theorem root with `k` points (k = 1 has two roots).
pub fn mmp_trees(reg: &Registry, k: u32, mode: Mode) -> Result<Vec<(String, MMPTree)>> {
    let roots = reg.mmp_roots()?;
    let out: Vec<(String, MMPTree)> = roots
        .iter()
        .filter(|r| r.state.k == k)
        .map(|r| {
            let prunes: Vec<_> = r.prunes.clone();
            Ok((r.family.clone(), enumerate_tree(&r.state, mode, &prunes)?))
        })
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::Invalid(format!("no MMP root with k = {} (roots have 1 <= k <= 6)", k)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_file_with_bundles() {
        let (d, b) = parse_weight_file("2 6\n1 1 2 1 0 0\n0 0 1 2 1 1\n| bundles\n2 2\n2 2\n").unwrap();
        assert_eq!((d.rows(), d.cols()), (2, 6));
        assert_eq!(b, vec![vec![int(2), int(2)]; 2]);
        assert!(parse_weight_file("2 3\n1 1 1\n").is_err());
        assert!(parse_weight_file("1 3\n1 1\n").is_err());
        assert!(parse_weight_file("1 3\n1 1 1\n2 2\n").is_err());
    }

    #[test]
    fn vertices_and_classes() {
        assert_eq!(parse_vertices("1,0; 0,1;-1,-1").unwrap(), vec![(1, 0), (0, 1), (-1, -1)]);
        assert!(parse_vertices("1,0,2").is_err());
        assert_eq!(parse_class("1, 2").unwrap(), vec![int(1), int(2)]);
    }

    #[test]
    fn analyze_p2() {
        let reg = Registry::embedded().unwrap();
        let a = analyze_polygon(&reg, &[(1, 0), (0, 1), (-1, -1)]).unwrap();
        // three smooth cones each count once in n
        assert_eq!((a.n, a.degree.as_str()), (3, "9"));
    }

    #[test]
    fn trees_by_k() {
        let reg = Registry::embedded().unwrap();
        assert_eq!(mmp_trees(&reg, 1, Mode::Curated).unwrap().len(), 2);
        assert!(mmp_trees(&reg, 7, Mode::Raw).is_err());
    }
}
