//! Blow-ups of finitely many points of projective `k`-space.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::k_subsets;

/// `(−K_X)³ = 64 − 8d` for `d` points of P³.
pub fn points_k3(d: i64) -> i64 {
    64 - 8 * d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointVerdict {
    Fano,
    /// Weak Fano for points in suitably general position.
    CandidateWeakFano,
    Never,
}

/// Numerical verdict for `d ≥ 1` points in `P^k`, `k ≥ 3`.
pub fn numeric_verdict(k: i64, d: i64) -> PointVerdict {
    if d == 1 {
        PointVerdict::Fano
    } else if k == 3 && (2..=7).contains(&d) {
        PointVerdict::CandidateWeakFano
    } else {
        PointVerdict::Never
    }
}

/// Points of `P^k` given by exact homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    dimension: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointConfig {
    pub fn new(points: Vec<Vec<BigRational>>) -> Result<Self> {
        let width = points.first().map_or(4, Vec::len);
        if width < 4 {
            return Err(Error::InvalidPoints(format!(
                "ambient dimension must be at least 3, got {}",
                width as i64 - 1
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != width {
                return Err(Error::InvalidPoints(format!(
                    "point {i} has {} coordinates, expected {width}",
                    p.len()
                )));
            }
            if p.iter().all(Zero::is_zero) {
                return Err(Error::InvalidPoints(format!(
                    "point {i} is the zero vector"
                )));
            }
        }
        for pair in k_subsets(points.len(), 2) {
            if rank(&[&points[pair[0]], &points[pair[1]]]) < 2 {
                return Err(Error::InvalidPoints(format!(
                    "points {} and {} coincide",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Self {
            dimension: width - 1,
            points,
        })
    }

    /// Parses a JSON array of points, each an array of `"p/q"` or integer
    /// strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<String>> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidPoints(format!("malformed point file: {e}")))?;
        let points = raw
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<_>>()?;
        Self::new(points)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |reason: &str| Error::InvalidPoints(format!("bad coordinate {s:?}: {reason}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("not an integer or fraction"))?;
    let den: BigInt = den.parse().map_err(|_| bad("not an integer or fraction"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Rank of the matrix whose rows are `rows`, by exact Gaussian elimination.
pub fn rank(rows: &[&Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| (*r).clone()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = BigRational::one() / &m[r][c];
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] * &inv;
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &factor * p;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceReport {
    pub points: usize,
    pub collinear_triples: Vec<Vec<usize>>,
    pub coplanar_quintuples: Vec<Vec<usize>>,
    /// No three points on a line and no five on a plane.
    pub passes: bool,
    /// Seven points on a twisted cubic is not tested.
    pub twisted_cubic: String,
    pub numeric_verdict: PointVerdict,
    pub k3: i64,
}

/// Lists collinear triples and coplanar 5-tuples of a configuration in P³.
pub fn incidence_check(cfg: &PointConfig) -> Result<IncidenceReport> {
    if cfg.dimension != 3 {
        return Err(Error::Unsupported(format!(
            "incidence checks are implemented in P³ only, got P^{}",
            cfg.dimension
        )));
    }
    let degenerate = |size: usize, max_rank: usize| -> Vec<Vec<usize>> {
        k_subsets(cfg.len(), size)
            .into_iter()
            .filter(|s| {
                let rows: Vec<_> = s.iter().map(|&i| &cfg.points[i]).collect();
                rank(&rows) <= max_rank
            })
            .collect()
    };
    let collinear_triples = degenerate(3, 2);
    let coplanar_quintuples = degenerate(5, 3);
    let d = cfg.len() as i64;
    Ok(IncidenceReport {
        points: cfg.len(),
        passes: collinear_triples.is_empty() && coplanar_quintuples.is_empty(),
        collinear_triples,
        coplanar_quintuples,
        twisted_cubic: "not checked".to_string(),
        numeric_verdict: numeric_verdict(3, d),
        k3: points_k3(d),
    })
}
