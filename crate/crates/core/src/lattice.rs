//! Intersection theory on the Picard lattice of a blow-up of the projective
//! plane at `n` points.
//!
//! A class is stored as `(a; b_1, ..., b_n)` and stands for `a·L - Σ b_i·E_i`,
//! where `L` is the pull-back of a line and `E_i` the exceptional curve over
//! the `i`-th point. The intersection form is diagonal `(1, -1, ..., -1)`.
//!
//! Two concrete models are provided: the cubic surface (six points, `H = -K`)
//! and the rational quartic with an elliptic singularity (twelve points on a
//! plane cubic, `H = 4L - ΣE`, contracted curve `Γ = 3L - ΣE`).

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer class `a·L - Σ b_i·E_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    #[serde(rename = "k")]
    degree: i64,
    mults: Vec<i64>,
}

impl DivisorClass {
    pub fn new(degree: i64, mults: Vec<i64>) -> Self {
        Self { degree, mults }
    }

    pub fn zero(n_points: usize) -> Self {
        Self::new(0, vec![0; n_points])
    }

    /// The pull-back `L` of a general line.
    pub fn line(n_points: usize) -> Self {
        Self::new(1, vec![0; n_points])
    }

    /// The exceptional class `E_i` (0-based index), stored as `(0; ..., -1, ...)`.
    pub fn exceptional(n_points: usize, index: usize) -> Self {
        assert!(index < n_points, "exceptional index {index} out of range");
        let mut mults = vec![0; n_points];
        mults[index] = -1;
        Self::new(0, mults)
    }

    /// `K = -3L + ΣE_i`.
    pub fn canonical(n_points: usize) -> Self {
        Self::new(-3, vec![-1; n_points])
    }

    /// `-K = 3L - ΣE_i`.
    pub fn anticanonical(n_points: usize) -> Self {
        Self::new(3, vec![1; n_points])
    }

    pub fn n_points(&self) -> usize {
        self.mults.len()
    }

    /// Coefficient of `L`.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn is_zero(&self) -> bool {
        self.degree == 0 && self.mults.iter().all(|&m| m == 0)
    }

    pub fn intersect(&self, other: &DivisorClass) -> Result<i64> {
        intersect(self, other)
    }

    pub fn self_intersection(&self) -> i64 {
        self.degree * self.degree - self.mults.iter().map(|m| m * m).sum::<i64>()
    }

    /// Same class with multiplicities sorted in non-increasing order.
    pub fn sorted(&self) -> Self {
        let mut mults = self.mults.clone();
        mults.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(self.degree, mults)
    }

    fn check_same_lattice(&self, other: &DivisorClass) -> Result<()> {
        if self.n_points() != other.n_points() {
            return Err(Error::DimensionMismatch {
                left: self.n_points(),
                right: other.n_points(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.check_same_lattice(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.check_same_lattice(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &DivisorClass, f: impl Fn(i64, i64) -> i64) -> DivisorClass {
        DivisorClass::new(
            f(self.degree, other.degree),
            self.mults
                .iter()
                .zip(&other.mults)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

// The operator impls panic on mismatched lattices; use `checked_add` /
// `checked_sub` for untrusted input.
impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_add(rhs)
            .expect("adding classes of different lattices")
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_sub(rhs)
            .expect("subtracting classes of different lattices")
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.degree, self.mults.iter().map(|m| -m).collect())
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass::new(
            self * rhs.degree,
            rhs.mults.iter().map(|m| self * m).collect(),
        )
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.degree)?;
        for (i, m) in self.mults.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Parses the text encoding `"k;m1,m2,...,mn"`.
impl FromStr for DivisorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParseClass {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, tail) = s.split_once(';').ok_or_else(|| err("missing ';'"))?;
        let degree = head
            .trim()
            .parse::<i64>()
            .map_err(|e| err(&format!("bad degree: {e}")))?;
        let tail = tail.trim();
        let mults = if tail.is_empty() {
            Vec::new()
        } else {
            tail.split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(&format!("bad multiplicity: {e}")))?
        };
        Ok(DivisorClass::new(degree, mults))
    }
}

/// `a₁a₂ - Σ b₁ᵢ b₂ᵢ`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    d1.check_same_lattice(d2)?;
    Ok(d1.degree * d2.degree
        - d1.mults
            .iter()
            .zip(&d2.mults)
            .map(|(a, b)| a * b)
            .sum::<i64>())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Cubic,
    RationalQuartic,
    Generic(usize),
}

/// A blow-up of the plane together with its canonical and hyperplane classes.
///
/// For `Generic(n)` the hyperplane class is taken to be `-K`, i.e. the
/// anticanonical model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeModel {
    kind: ModelKind,
    canonical: DivisorClass,
    hyperplane: DivisorClass,
    elliptic: Option<DivisorClass>,
}

impl LatticeModel {
    pub fn cubic() -> Self {
        Self {
            kind: ModelKind::Cubic,
            canonical: DivisorClass::canonical(6),
            hyperplane: DivisorClass::anticanonical(6),
            elliptic: None,
        }
    }

    /// Twelve points cut on a smooth plane cubic by a quartic. The strict
    /// transform `Γ = 3L - ΣE` of the cubic is contracted to the singular point.
    pub fn rational_quartic() -> Self {
        Self {
            kind: ModelKind::RationalQuartic,
            canonical: DivisorClass::canonical(12),
            hyperplane: DivisorClass::new(4, vec![1; 12]),
            elliptic: Some(DivisorClass::anticanonical(12)),
        }
    }

    pub fn generic(n_points: usize) -> Self {
        Self {
            kind: ModelKind::Generic(n_points),
            canonical: DivisorClass::canonical(n_points),
            hyperplane: DivisorClass::anticanonical(n_points),
            elliptic: None,
        }
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn n_points(&self) -> usize {
        self.canonical.n_points()
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn hyperplane(&self) -> &DivisorClass {
        &self.hyperplane
    }

    pub fn elliptic(&self) -> Option<&DivisorClass> {
        self.elliptic.as_ref()
    }

    /// Degree `D·H` of the image of `d` under the hyperplane map.
    pub fn embedded_degree(&self, d: &DivisorClass) -> Result<i64> {
        intersect(d, &self.hyperplane)
    }
}

/// Arithmetic genus by adjunction: `(D² + D·K)/2 + 1`.
pub fn adjunction_genus(d: &DivisorClass, model: &LatticeModel) -> Result<i64> {
    let twice = d.self_intersection() + intersect(d, model.canonical())?;
    if twice % 2 != 0 {
        return Err(Error::InvalidClass(format!(
            "D² + D·K = {twice} is odd for {d}"
        )));
    }
    Ok(twice / 2 + 1)
}

/// The 27 `(-1)`-classes of the cubic surface, in the order
/// `E_i`, then `L - E_i - E_j` (lexicographic), then `2L - ΣE + E_i`.
pub fn twenty_seven_lines() -> &'static [DivisorClass] {
    static LINES: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    LINES.get_or_init(|| {
        let mut lines = Vec::with_capacity(27);
        for i in 0..6 {
            lines.push(DivisorClass::exceptional(6, i));
        }
        for i in 0..6 {
            for j in i + 1..6 {
                let mut mults = vec![0; 6];
                mults[i] = 1;
                mults[j] = 1;
                lines.push(DivisorClass::new(1, mults));
            }
        }
        for i in 0..6 {
            let mut mults = vec![1; 6];
            mults[i] = 0;
            lines.push(DivisorClass::new(2, mults));
        }
        lines
    })
}

/// Human-readable label for the `index`-th of the 27 lines (1-based points).
pub fn line_label(index: usize) -> String {
    let lines = twenty_seven_lines();
    let class = &lines[index];
    match class.degree() {
        0 => {
            let i = class.mults().iter().position(|&m| m == -1).unwrap_or(0);
            format!("E{}", i + 1)
        }
        1 => {
            let ij: Vec<usize> = (0..6).filter(|&i| class.mults()[i] == 1).collect();
            format!("L-E{}-E{}", ij[0] + 1, ij[1] + 1)
        }
        _ => {
            let i = class.mults().iter().position(|&m| m == 0).unwrap_or(0);
            format!("2L-E-..+E{}", i + 1)
        }
    }
}

fn require_cubic(c: &DivisorClass) -> Result<()> {
    if c.n_points() != 6 {
        return Err(Error::DimensionMismatch {
            left: c.n_points(),
            right: 6,
        });
    }
    Ok(())
}

/// Applies the quadratic Cremona move based at the first three points:
/// `(k; m₁..m₆) → (2k−m₁−m₂−m₃; k−m₂−m₃, k−m₁−m₃, k−m₁−m₂, m₄, m₅, m₆)`.
pub fn quadratic_move(c: &DivisorClass) -> DivisorClass {
    let k = c.degree();
    let m = c.mults();
    let mut mults = m.to_vec();
    mults[0] = k - m[1] - m[2];
    mults[1] = k - m[0] - m[2];
    mults[2] = k - m[0] - m[1];
    DivisorClass::new(2 * k - m[0] - m[1] - m[2], mults)
}

/// Canonical representative on the cubic surface: multiplicities sorted
/// non-increasingly and `k ≥ m₁ + m₂ + m₃`.
///
/// Each quadratic move strictly lowers `k` and preserves both `C·(-K)` and
/// `C²`; since `K^⊥` is negative definite there are finitely many classes with
/// those two invariants, so the loop terminates.
pub fn cremona_normalize(c: &DivisorClass) -> Result<DivisorClass> {
    require_cubic(c)?;
    let mut current = c.sorted();
    loop {
        let m = current.mults();
        if current.degree() >= m[0] + m[1] + m[2] {
            return Ok(current);
        }
        current = quadratic_move(&current).sorted();
    }
}

/// Nef classes on the cubic surface used to prune the effectivity search:
/// `L`, `L - E_i`, `2L - E_a - E_b - E_c - E_d`.
fn cubic_nef_witnesses() -> &'static [DivisorClass] {
    static NEF: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    NEF.get_or_init(|| {
        let mut out = vec![DivisorClass::line(6)];
        for i in 0..6 {
            let mut mults = vec![0; 6];
            mults[i] = 1;
            out.push(DivisorClass::new(1, mults));
        }
        for skip_a in 0..6 {
            for skip_b in skip_a + 1..6 {
                let mut mults = vec![1; 6];
                mults[skip_a] = 0;
                mults[skip_b] = 0;
                out.push(DivisorClass::new(2, mults));
            }
        }
        out
    })
}

/// Decomposes `d` as a non-negative combination of the 27 lines, returning
/// line indices (non-decreasing) of one decomposition, or `None`.
///
/// Every line has `(-K)`-degree 1, so a decomposition uses exactly
/// `d·(-K)` lines; the search is exhaustive over multisets of that size.
pub fn effective_decomposition(d: &DivisorClass) -> Result<Option<Vec<usize>>> {
    require_cubic(d)?;
    let mut failed = HashSet::new();
    let mut path = Vec::new();
    if search_lines(d, 0, &mut path, &mut failed) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

/// Membership of `d` in the monoid generated by the 27 lines.
pub fn is_effective_cubic(d: &DivisorClass) -> Result<bool> {
    Ok(effective_decomposition(d)?.is_some())
}

fn search_lines(
    d: &DivisorClass,
    start: usize,
    path: &mut Vec<usize>,
    failed: &mut HashSet<(DivisorClass, usize)>,
) -> bool {
    let anti = DivisorClass::anticanonical(6);
    let budget = intersect(d, &anti).expect("cubic lattice");
    if budget < 0 {
        return false;
    }
    if budget == 0 {
        return d.is_zero();
    }
    if cubic_nef_witnesses()
        .iter()
        .any(|n| intersect(d, n).expect("cubic lattice") < 0)
    {
        return false;
    }
    if failed.contains(&(d.clone(), start)) {
        return false;
    }
    let lines = twenty_seven_lines();
    for (idx, line) in lines.iter().enumerate().skip(start) {
        let rest = d - line;
        path.push(idx);
        if search_lines(&rest, idx, path, failed) {
            return true;
        }
        path.pop();
    }
    failed.insert((d.clone(), start));
    false
}

/// Rational curves of degree 1, 2 and 3 through the singular point of the
/// rational quartic model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModelClasses {
    /// `E_i`.
    pub lines: Vec<DivisorClass>,
    /// `L - E_i - E_j`, lexicographic in `(i, j)`.
    pub conics: Vec<DivisorClass>,
    /// `2L - E_{i1} - ... - E_{i5}`, lexicographic over 5-subsets.
    pub twisted_cubics: Vec<DivisorClass>,
}

pub fn quartic_model_classes() -> QuarticModelClasses {
    const N: usize = 12;
    let lines = (0..N).map(|i| DivisorClass::exceptional(N, i)).collect();
    let mut conics = Vec::with_capacity(66);
    for i in 0..N {
        for j in i + 1..N {
            let mut mults = vec![0; N];
            mults[i] = 1;
            mults[j] = 1;
            conics.push(DivisorClass::new(1, mults));
        }
    }
    let twisted_cubics = k_subsets(N, 5)
        .into_iter()
        .map(|subset| {
            let mut mults = vec![0; N];
            for i in subset {
                mults[i] = 1;
            }
            DivisorClass::new(2, mults)
        })
        .collect();
    QuarticModelClasses {
        lines,
        conics,
        twisted_cubics,
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}
