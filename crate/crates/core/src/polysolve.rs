//! Matrices over the polynomial ring `Q(i)[z]`.
//!
//! A `rows x cols` matrix (rows <= cols) has full rank at every point of the
//! plane exactly when its maximal minors have no common root, i.e. when their
//! gcd is 1. A set of minors with Bezout witnesses `sum w_k D_k = 1` is then a
//! certificate, and it also yields a polynomial solution of `M x = H` by
//! combining one Cramer solution per minor.
//!
//! Minors are found either lexicographically or by a guided search that works
//! modulo the current gcd: elimination over `Q(i)[z]/(h)` picks columns whose
//! minor is a unit modulo `h`, and splits `h` whenever a zero divisor shows up.
//! A factor on which no full set of unit pivots exists is a proven rank drop.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{GaussRat, Rat};
use crate::cpoly::{bezout_multi, CPoly};
use crate::error::{Error, Result};

/// Default number of minors evaluated before giving up.
pub const DEFAULT_MINOR_BUDGET: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<CPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![CPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, CPoly::one());
        }
        m
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<CPoly>]) -> Result<Self> {
        let mut m = PolyMatrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {c} has {} entries, expected {rows}",
                    col.len()
                )));
            }
            for (r, e) in col.iter().enumerate() {
                m.set(r, c, e.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[CPoly] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &CPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<CPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[CPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m.set(r, k, self.get(r, c).clone());
            }
        }
        m
    }

    /// `(self, other)` side by side.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut m = PolyMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(m)
    }

    pub fn map(&self, f: impl Fn(&CPoly) -> CPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[CPoly]) -> Result<Vec<CPoly>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(CPoly::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn eval(&self, z: &GaussRat) -> Vec<Vec<GaussRat>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|p| p.eval(z)).collect())
            .collect()
    }

    /// Upper bound on the degree of any maximal minor.
    fn minor_degree_bound(&self) -> usize {
        (0..self.rows)
            .map(|r| self.row(r).iter().filter_map(CPoly::degree).max().unwrap_or(0))
            .sum()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// Column indices of a maximal independent set found by left-to-right elimination.
pub fn pivot_columns(m: &[Vec<GaussRat>]) -> Vec<usize> {
    let mut a: Vec<Vec<GaussRat>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] * &inv;
            for k in c..cols {
                let delta = &factor * &a[r][k];
                a[i][k] = &a[i][k] - &delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank over `Q(i)` of a scalar matrix.
pub fn scalar_rank(m: &[Vec<GaussRat>]) -> usize {
    pivot_columns(m).len()
}

/// Rank of `M(z)`.
pub fn rank_at(m: &PolyMatrix, z: &GaussRat) -> usize {
    scalar_rank(&m.eval(z))
}

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
pub fn determinant(m: &PolyMatrix) -> Result<CPoly> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut a: Vec<Vec<CPoly>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut negate = false;
    let mut prev = CPoly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(CPoly::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).ok_or_else(|| {
                    Error::Internal("Bareiss step left a remainder".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = match n {
        0 => CPoly::one(),
        _ => a[n - 1][n - 1].clone(),
    };
    Ok(if negate { -det } else { det })
}

/// Maximal minors with Bezout witnesses: `sum witnesses[k] * minors[k] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullRankCertificate {
    /// Sorted column indices of each maximal square submatrix.
    pub minor_columns: Vec<Vec<usize>>,
    pub minors: Vec<CPoly>,
    pub witnesses: Vec<CPoly>,
}

impl FullRankCertificate {
    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    /// Recomputes every minor from `m` and re-checks the Bezout identity.
    pub fn check(&self, m: &PolyMatrix) -> Result<()> {
        if self.minor_columns.len() != self.minors.len() || self.minors.len() != self.witnesses.len()
        {
            return Err(Error::InvalidCertificate("length mismatch".into()));
        }
        if self.minors.is_empty() {
            return Err(Error::InvalidCertificate("no minors".into()));
        }
        let mut sum = CPoly::zero();
        for ((cols, minor), w) in self.minor_columns.iter().zip(&self.minors).zip(&self.witnesses) {
            if cols.len() != m.rows || cols.iter().any(|&c| c >= m.cols) {
                return Err(Error::InvalidCertificate(format!(
                    "column set {cols:?} is not a maximal minor of a {}x{} matrix",
                    m.rows, m.cols
                )));
            }
            if cols.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidCertificate(format!(
                    "column set {cols:?} is not strictly increasing"
                )));
            }
            let det = determinant(&m.select_columns(cols))?;
            if &det != minor {
                return Err(Error::InvalidCertificate(format!(
                    "minor on columns {cols:?} is {det}, certificate says {minor}"
                )));
            }
            sum = &sum + &(w * minor);
        }
        if !sum.is_one() {
            return Err(Error::InvalidCertificate(format!(
                "witness combination is {sum}, not 1"
            )));
        }
        Ok(())
    }
}

/// How maximal minors are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MinorSearch {
    /// Column choices driven by elimination modulo the running gcd.
    #[default]
    Guided,
    /// Lexicographic over column-index sets.
    Lexicographic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of minor determinants evaluated.
    pub budget: usize,
    pub strategy: MinorSearch,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_MINOR_BUDGET,
            strategy: MinorSearch::Guided,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateOutcome {
    Certified(FullRankCertificate),
    /// Proven rank drop: the gcd of the maximal minors (examined so far) is not 1,
    /// and every root of `gcd` is a point where the rank drops. `gcd = 0` means the
    /// rank is deficient everywhere.
    Obstruction { gcd: CPoly, minors_examined: usize },
    /// Neither a certificate nor a proof was found within the budget.
    BudgetExhausted {
        partial_gcd: CPoly,
        minors_examined: usize,
    },
}

struct MinorAccumulator {
    columns: Vec<Vec<usize>>,
    minors: Vec<CPoly>,
    gcd: CPoly,
    examined: usize,
}

impl MinorAccumulator {
    fn new() -> Self {
        MinorAccumulator {
            columns: Vec::new(),
            minors: Vec::new(),
            gcd: CPoly::zero(),
            examined: 0,
        }
    }

    /// Evaluates one minor; keeps it only if it lowers the running gcd.
    fn push(&mut self, m: &PolyMatrix, cols: Vec<usize>) -> Result<CPoly> {
        self.examined += 1;
        let det = determinant(&m.select_columns(&cols))?;
        if det.is_zero() {
            return Ok(det);
        }
        let g = self.gcd.gcd(&det);
        if g != self.gcd {
            self.gcd = g;
            self.columns.push(cols);
            self.minors.push(det.clone());
        }
        Ok(det)
    }

    fn into_certificate(self) -> Result<FullRankCertificate> {
        let b = bezout_multi(&self.minors)?;
        if !b.gcd.is_one() {
            return Err(Error::Internal(format!("minor gcd is {}, not 1", b.gcd)));
        }
        let mut cert = FullRankCertificate {
            minor_columns: Vec::new(),
            minors: Vec::new(),
            witnesses: Vec::new(),
        };
        for ((cols, minor), w) in self.columns.into_iter().zip(self.minors).zip(b.witnesses) {
            if !w.is_zero() {
                cert.minor_columns.push(cols);
                cert.minors.push(minor);
                cert.witnesses.push(w);
            }
        }
        Ok(cert)
    }
}

/// Searches for maximal minors whose gcd is 1.
pub fn minor_gcd_certificate(m: &PolyMatrix, config: &SearchConfig) -> Result<CertificateOutcome> {
    if m.rows > m.cols {
        return Err(Error::Dimension(format!(
            "minor certificate needs rows <= cols, got {}x{}",
            m.rows, m.cols
        )));
    }
    match config.strategy {
        MinorSearch::Lexicographic => lexicographic_search(m, config.budget),
        MinorSearch::Guided => guided_search(m, config.budget),
    }
}

fn lexicographic_search(m: &PolyMatrix, budget: usize) -> Result<CertificateOutcome> {
    let mut acc = MinorAccumulator::new();
    let mut combo: Vec<usize> = (0..m.rows).collect();
    loop {
        if acc.examined == budget {
            return Ok(CertificateOutcome::BudgetExhausted {
                partial_gcd: acc.gcd,
                minors_examined: acc.examined,
            });
        }
        acc.push(m, combo.clone())?;
        if acc.gcd.is_one() {
            return acc.into_certificate().map(CertificateOutcome::Certified);
        }
        if !next_combination(&mut combo, m.cols) {
            return Ok(CertificateOutcome::Obstruction {
                gcd: acc.gcd,
                minors_examined: acc.examined,
            });
        }
    }
}

/// Advances to the next k-subset of `0..n` in lexicographic order.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

enum ModularPivots {
    /// Columns whose minor is a unit modulo the modulus.
    Found(Vec<usize>),
    /// The modulus factors as `a * b` with both factors nonconstant.
    Split(CPoly, CPoly),
    /// Rank is deficient at every root of the modulus.
    Deficient,
}

/// Inverse of `a` modulo `h`, or the nontrivial gcd when `a` is a zero divisor.
fn inverse_mod(a: &CPoly, h: &CPoly) -> std::result::Result<CPoly, CPoly> {
    let (g, s, _) = CPoly::ext_gcd(a, h);
    if g.is_one() {
        Ok(s.rem(h).expect("nonzero modulus"))
    } else {
        Err(g)
    }
}

/// Column-pivoted elimination over `Q(i)[z]/(h)` for squarefree monic `h`.
fn modular_pivots(m: &PolyMatrix, h: &CPoly) -> ModularPivots {
    let reduce = |p: &CPoly| p.rem(h).expect("nonzero modulus");
    let mut a: Vec<Vec<CPoly>> = (0..m.rows).map(|r| m.row(r).iter().map(reduce).collect()).collect();
    let mut used = vec![false; m.cols];
    let mut chosen = Vec::with_capacity(m.rows);
    for k in 0..m.rows {
        let mut pivot = None;
        'search: for c in (0..m.cols).filter(|&c| !used[c]) {
            for r in k..m.rows {
                if a[r][c].is_zero() {
                    continue;
                }
                match inverse_mod(&a[r][c], h) {
                    Ok(inv) => {
                        pivot = Some((r, c, inv));
                        break 'search;
                    }
                    Err(g) => {
                        let other = h.exact_div(&g).expect("gcd divides modulus");
                        return ModularPivots::Split(g, other.monic());
                    }
                }
            }
        }
        let Some((r, c, inv)) = pivot else {
            return ModularPivots::Deficient;
        };
        a.swap(k, r);
        used[c] = true;
        chosen.push(c);
        for i in k + 1..m.rows {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = reduce(&(&a[i][c] * &inv));
            for j in 0..m.cols {
                if used[j] && j != c || a[k][j].is_zero() {
                    continue;
                }
                let v = &a[i][j] - &(&factor * &a[k][j]);
                a[i][j] = reduce(&v);
            }
        }
    }
    chosen.sort_unstable();
    ModularPivots::Found(chosen)
}

fn guided_search(m: &PolyMatrix, budget: usize) -> Result<CertificateOutcome> {
    let mut acc = MinorAccumulator::new();
    if m.rows == 0 {
        return Ok(CertificateOutcome::Certified(FullRankCertificate {
            minor_columns: vec![vec![]],
            minors: vec![CPoly::one()],
            witnesses: vec![CPoly::one()],
        }));
    }

    // A first nonzero minor: full rank at one of deg+1 distinct points, or nowhere.
    let bound = m.minor_degree_bound();
    let mut first = None;
    for t in 0..=bound as i64 {
        let pivots = pivot_columns(&m.eval(&GaussRat::from_int(t, 0)));
        if pivots.len() == m.rows {
            first = Some(pivots);
            break;
        }
    }
    let Some(first) = first else {
        return Ok(CertificateOutcome::Obstruction {
            gcd: CPoly::zero(),
            minors_examined: 0,
        });
    };
    acc.push(m, first)?;
    if acc.gcd.is_zero() {
        return Err(Error::Internal("minor vanished despite full rank at a point".into()));
    }

    let mut pending = Vec::new();
    if !acc.gcd.is_unit() {
        pending.push(acc.gcd.squarefree_part());
    }
    let mut deficient = false;
    while let Some(h) = pending.pop() {
        if h.is_unit() || h.gcd(&acc.gcd).is_unit() {
            continue;
        }
        match modular_pivots(m, &h) {
            ModularPivots::Split(a, b) => {
                pending.push(b);
                pending.push(a);
            }
            ModularPivots::Deficient => deficient = true,
            ModularPivots::Found(cols) => {
                if acc.examined == budget {
                    return Ok(CertificateOutcome::BudgetExhausted {
                        partial_gcd: acc.gcd,
                        minors_examined: acc.examined,
                    });
                }
                let det = acc.push(m, cols)?;
                if !det.gcd(&h).is_unit() {
                    return Err(Error::Internal(
                        "modular pivots produced a minor sharing a root with the modulus".into(),
                    ));
                }
            }
        }
    }
    if deficient || !acc.gcd.is_one() {
        return Ok(CertificateOutcome::Obstruction {
            gcd: acc.gcd,
            minors_examined: acc.examined,
        });
    }
    acc.into_certificate().map(CertificateOutcome::Certified)
}

/// Solves `M x = H` from a full-rank certificate, one Cramer solution per minor.
pub fn solve_full_rank(m: &PolyMatrix, rhs: &[CPoly], cert: &FullRankCertificate) -> Result<Vec<CPoly>> {
    if rhs.len() != m.rows {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} rows",
            rhs.len(),
            m.rows
        )));
    }
    cert.check(m)?;
    let mut x = vec![CPoly::zero(); m.cols];
    for (cols, w) in cert.minor_columns.iter().zip(&cert.witnesses) {
        let sub = m.select_columns(cols);
        for (t, &c) in cols.iter().enumerate() {
            let mut replaced = sub.clone();
            for (r, h) in rhs.iter().enumerate() {
                replaced.set(r, t, h.clone());
            }
            let numer = determinant(&replaced)?;
            x[c] = &x[c] + &(w * &numer);
        }
    }
    if m.mul_vec(&x)? != rhs {
        return Err(Error::Internal("M x = H failed after Cramer assembly".into()));
    }
    Ok(x)
}

/// Deterministic Gaussian-rational sample points `a/b + (c/d) i`.
pub fn sample_points(count: usize, seed: u64) -> Vec<GaussRat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        Rat::new(rng.random_range(-20i64..=20).into(), rng.random_range(1i64..=9).into())
    };
    (0..count)
        .map(|_| {
            let re = draw(&mut rng);
            let im = draw(&mut rng);
            GaussRat::new(re, im)
        })
        .collect()
}
