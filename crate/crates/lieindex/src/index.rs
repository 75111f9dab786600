//! Indices of Lie algebras and modules through Kirillov matrices.
//!
//! A `VectorMatrix` has entries in a vector space V′, read as degree-one
//! elements of S(V′). Its generic rank is the largest rank of the matrices
//! obtained by applying linear forms on V′ to every entry.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::{QMatrix, Rational};
use crate::liecore::{BasisCoords, Element, LieAlgebra, Subspace};
use crate::slice::OrbitData;
use crate::{Error, Result};

/// Parameters of the randomized generic rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankConfig {
    pub trials: usize,
    pub bound: i64,
    pub seed: u64,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig { trials: 5, bound: 1000, seed: 0 }
    }
}

impl RankConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Input("trials must be at least 1".into()));
        }
        if self.bound < 1 {
            return Err(Error::Input("bound must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_seed(self, seed: u64) -> Self {
        RankConfig { seed, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorMatrix {
    rows: usize,
    cols: usize,
    target_dim: usize,
    /// Row-major; each entry is a coordinate vector on the target basis.
    entries: Vec<Vec<Rational>>,
}

impl VectorMatrix {
    pub fn zeros(rows: usize, cols: usize, target_dim: usize) -> Self {
        VectorMatrix { rows, cols, target_dim, entries: vec![vec![Rational::zero(); target_dim]; rows * cols] }
    }

    /// Entries given as elements, expressed in the target basis.
    pub fn from_elements(target: &BasisCoords, entries: &[Vec<Element>]) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols, target.dim());
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Input("ragged entry array".into()));
            }
            for (j, e) in row.iter().enumerate() {
                let c = target
                    .coords(e)
                    .ok_or_else(|| Error::Input(format!("entry ({i}, {j}) is outside the target space")))?;
                m.entries[i * cols + j] = c;
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

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Rational] {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, coords: Vec<Rational>) {
        assert_eq!(coords.len(), self.target_dim);
        self.entries[i * self.cols + j] = coords;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(Rational::is_zero))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.target_dim);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.entry(i, j).to_vec();
            }
        }
        t
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.entry(i, j).iter().zip(self.entry(j, i)).all(|(a, b)| (a + b).is_zero()))
            })
    }

    /// Sub-block on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len(), self.target_dim);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.entries[a * cols.len() + b] = self.entry(i, j).to_vec();
            }
        }
        m
    }

    /// The rational matrix obtained by applying the linear form φ.
    pub fn evaluate(&self, phi: &[Rational]) -> QMatrix {
        assert_eq!(phi.len(), self.target_dim, "form has the wrong length");
        let mut out = QMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v: Rational = self
                    .entry(i, j)
                    .iter()
                    .zip(phi)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum();
                if !v.is_zero() {
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

pub fn random_form(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Vec<Rational> {
    (0..dim).map(|_| Rational::from_int(rng.random_range(-bound..=bound))).collect()
}

/// Largest rank over `trials` random integer forms in [−bound, bound].
pub fn generic_rank(m: &VectorMatrix, cfg: &RankConfig) -> usize {
    let full = m.rows.min(m.cols);
    if full == 0 || m.is_zero() {
        return 0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best = 0;
    for _ in 0..cfg.trials.max(1) {
        let phi = random_form(&mut rng, m.target_dim, cfg.bound.max(1));
        best = best.max(m.evaluate(&phi).rank());
        if best == full {
            break;
        }
    }
    best
}

/// Exact generic rank from a full grid {0..D}^k of forms, D = min(rows, cols).
/// Every nonzero minor has degree ≤ D, so it is nonzero somewhere on the
/// grid. `None` when the grid would exceed `max_points`.
pub fn exact_generic_rank(m: &VectorMatrix, max_points: usize) -> Option<usize> {
    let full = m.rows.min(m.cols);
    if full == 0 || m.is_zero() {
        return Some(0);
    }
    let side = full + 1;
    let k = m.target_dim;
    let mut points: usize = 1;
    for _ in 0..k {
        points = points.checked_mul(side).filter(|&p| p <= max_points)?;
    }
    let mut best = 0;
    let mut digits = vec![0usize; k];
    for _ in 0..points {
        let phi: Vec<Rational> = digits.iter().map(|&d| Rational::from_int(d as i64)).collect();
        best = best.max(m.evaluate(&phi).rank());
        if best == full {
            break;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < side {
                break;
            }
            *d = 0;
        }
    }
    Some(best)
}

/// K(q, V): entry (i, j) = [q_j, v_i] in the basis of V.
pub fn kirillov(g: &LieAlgebra, q: &Subspace, v: &Subspace) -> Result<VectorMatrix> {
    kirillov_in(g, q, &BasisCoords::with_ambient(g.dim(), v.basis())?)
}

/// K(q, V) with V given by an explicit basis.
pub fn kirillov_in(g: &LieAlgebra, q: &Subspace, v: &BasisCoords) -> Result<VectorMatrix> {
    let qb = q.basis();
    let mut m = VectorMatrix::zeros(v.dim(), qb.len(), v.dim());
    for (i, vi) in v.basis().iter().enumerate() {
        for (j, qj) in qb.iter().enumerate() {
            let br = g.bracket(qj, vi)?;
            let c = v.coords(&br).ok_or_else(|| Error::Input("[q, V] is not contained in V".into()))?;
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// dim q − rank K(q).
pub fn index_of(g: &LieAlgebra, q: &Subspace, cfg: &RankConfig) -> Result<usize> {
    if !g.is_subalgebra(q) {
        return Err(Error::Input("index_of needs a subalgebra".into()));
    }
    let k = kirillov(g, q, q)?;
    Ok(q.dim() - generic_rank(&k, cfg))
}

/// dim V − rank K(q, V).
pub fn index_rep(g: &LieAlgebra, q: &Subspace, v: &Subspace, cfg: &RankConfig) -> Result<usize> {
    let k = kirillov(g, q, v)?;
    Ok(v.dim() - generic_rank(&k, cfg))
}

/// Basis of g^ξ adapted to the ad-ρ weights: a basis of z(g^ξ) by
/// ascending weight first, then a complement in each weight space of g^ξ,
/// again by ascending weight.
#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub coords: BasisCoords,
    pub weights: Vec<i64>,
    /// Number of leading vectors spanning z(g^ξ).
    pub m: usize,
}

impl WeightBasis {
    pub fn new(g: &LieAlgebra, data: &OrbitData) -> Result<Self> {
        let spaces = g.eigenspaces(&data.triple.h, &data.gxi)?;
        let mut zpart = Vec::new();
        let mut rest = Vec::new();
        let mut zw = Vec::new();
        let mut rw = Vec::new();
        for (l, sp) in &spaces {
            let w = l.to_i64().ok_or_else(|| Error::Unsupported("non-integral weight".into()))?;
            let zs = sp.intersect(&data.z);
            for b in zs.basis() {
                zpart.push(b);
                zw.push(w);
            }
            for b in zs.complement_in(sp) {
                rest.push(b);
                rw.push(w);
            }
        }
        let m = zpart.len();
        if m != data.z.dim() {
            return Err(Error::PropertyViolation("z(g^ξ) is not a sum of its weight spaces".into()));
        }
        zpart.extend(rest);
        zw.extend(rw);
        Ok(WeightBasis { coords: BasisCoords::with_ambient(g.dim(), zpart)?, weights: zw, m })
    }

    pub fn elements(&self) -> &[Element] {
        self.coords.basis()
    }

    /// Indices of basis vectors of a given weight, optionally only inside z.
    pub fn of_weight(&self, w: i64, in_z: bool) -> Vec<usize> {
        let end = if in_z { self.m } else { self.weights.len() };
        (0..end).filter(|&i| self.weights[i] == w).collect()
    }
}

/// Rows e_1..e_n of g^ξ (z first), columns e_1..e_m; entry [[η, e_j], e_i].
pub fn de_matrix(g: &LieAlgebra, data: &OrbitData, wb: &WeightBasis) -> Result<VectorMatrix> {
    let b = wb.elements();
    let eta = &data.triple.f;
    let ad_eta: Vec<Element> = b[..wb.m].iter().map(|e| g.bracket_unchecked(eta, e)).collect();
    let mut m = VectorMatrix::zeros(b.len(), wb.m, b.len());
    for (i, ei) in b.iter().enumerate() {
        for (j, aj) in ad_eta.iter().enumerate() {
            let v = g.bracket_unchecked(aj, ei);
            let c = wb
                .coords
                .coords(&v)
                .ok_or_else(|| Error::PropertyViolation(format!("[[η, e_{}], e_{}] is not in g^ξ", j + 1, i + 1)))?;
            m.set(i, j, c);
        }
    }
    for i in 0..wb.m {
        for j in 0..wb.m {
            if m.entry(i, j) != m.entry(j, i) {
                return Err(Error::PropertyViolation(format!(
                    "[[η, e_{}], e_{}] ≠ [[η, e_{}], e_{}]",
                    j + 1,
                    i + 1,
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub rank: usize,
    pub dim_gxi: usize,
    pub dim_z: usize,
    pub dim_n: usize,
    pub ind_gxi: usize,
    pub ind_n: usize,
    pub ind_n_gxi: usize,
    /// rg g − dim z(g^ξ)
    pub target: i64,
    pub de_rank: usize,
    pub prop4_ok: bool,
    /// ind g^ξ + ind n ≤ dim n/g^ξ + 2 ind(n, g^ξ)
    pub ideal_inequality: bool,
    pub ind_n_ok: bool,
    pub ind_n_gxi_ok: bool,
    pub ind_gxi_is_rank: bool,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.ind_n_ok && self.ind_n_gxi_ok && self.prop4_ok && self.ind_gxi_is_rank && self.ideal_inequality
    }
}

/// Indices of g^ξ and n(g^ξ) against rg g − dim z(g^ξ), with the rank
/// criterion on the [D; E] matrix computed independently.
pub fn verify_theorems(g: &LieAlgebra, data: &OrbitData, cfg: &RankConfig) -> Result<TheoremReport> {
    cfg.validate()?;
    let rank = g.rank().ok_or_else(|| Error::Unsupported("algebra has no recorded rank".into()))?;
    let (gxi, z, n) = (&data.gxi, &data.z, &data.n);
    let sub = |k: u64| cfg.with_seed(cfg.seed.wrapping_add(k));
    let ind_gxi = index_of(g, gxi, &sub(1))?;
    let ind_n = index_of(g, n, &sub(2))?;
    let ind_n_gxi = index_rep(g, n, gxi, &sub(3))?;
    let wb = WeightBasis::new(g, data)?;
    let de = de_matrix(g, data, &wb)?;
    let de_rank = generic_rank(&de, &sub(4));
    let target = rank as i64 - z.dim() as i64;
    let quotient = n.dim() - gxi.dim();
    Ok(TheoremReport {
        rank,
        dim_gxi: gxi.dim(),
        dim_z: z.dim(),
        dim_n: n.dim(),
        ind_gxi,
        ind_n,
        ind_n_gxi,
        target,
        de_rank,
        prop4_ok: de_rank == z.dim(),
        ideal_inequality: ind_gxi + ind_n <= quotient + 2 * ind_n_gxi,
        ind_n_ok: ind_n as i64 == target,
        ind_n_gxi_ok: ind_n_gxi as i64 == target,
        ind_gxi_is_rank: ind_gxi == rank,
    })
}
