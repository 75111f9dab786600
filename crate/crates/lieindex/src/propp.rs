//! Property (P): for every nonzero v in z(g^ξ), the top ad-ρ weight space
//! W of z(g^ξ) lies in [[η, g^ξ], v].
//!
//! Per weight m of z(g^ξ) the check reduces to a family M(v) of matrices
//! depending linearly on the coordinates of v in z ∩ V(m), and to deciding
//! that M(v) is surjective for every nonzero parameter vector.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactla::modular::{self, ModEchelon};
use crate::exactla::{poly_gcd_binary, Poly, QMatrix, Rational, MAX_VARS};
use crate::liecore::{BasisCoords, Element, LieAlgebra, Subspace};
use crate::slice::OrbitData;
use crate::{Error, Result};

const PARAM_NAMES: [&str; MAX_VARS] = ["alpha", "beta", "gamma", "delta"];
const GRID: i64 = 2;
const RANDOM_POINTS: usize = 10_000;
const RANDOM_BOUND: i64 = 1000;
const MAX_MINORS: usize = 20_000;

/// Matrix whose entries are linear forms in δ parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrix {
    pub params: usize,
    pub rows: usize,
    pub cols: usize,
    // entries[p][q][s] = coefficient of parameter s
    entries: Vec<Vec<Vec<Rational>>>,
}

impl ParamMatrix {
    /// Σ_s a_s · mats[s].
    pub fn from_matrices(mats: &[QMatrix]) -> Result<Self> {
        let Some(first) = mats.first() else {
            return Err(Error::Input("a parametric matrix needs at least one parameter".into()));
        };
        if mats.len() > MAX_VARS {
            return Err(Error::Unsupported(format!("at most {MAX_VARS} parameters")));
        }
        let (rows, cols) = (first.rows(), first.cols());
        if mats.iter().any(|m| m.rows() != rows || m.cols() != cols) {
            return Err(Error::Input("parameter matrices differ in shape".into()));
        }
        let entries = (0..rows)
            .map(|p| (0..cols).map(|q| mats.iter().map(|m| m.get(p, q).clone()).collect()).collect())
            .collect();
        Ok(ParamMatrix { params: mats.len(), rows, cols, entries })
    }

    pub fn coefficient(&self, s: usize) -> QMatrix {
        QMatrix::from_rows(self.cols, self.entries.iter().map(|r| r.iter().map(|e| e[s].clone()).collect()).collect())
    }

    pub fn entry_poly(&self, p: usize, q: usize) -> Poly {
        Poly::linear(&PARAM_NAMES[..self.params], &self.entries[p][q])
    }

    pub fn evaluate(&self, a: &[Rational]) -> QMatrix {
        assert_eq!(a.len(), self.params);
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.iter().zip(a).map(|(c, x)| c * x).sum()).collect())
            .collect();
        QMatrix::from_rows(self.cols, rows)
    }

    fn evaluate_mod(&self, a: &[u64]) -> Option<Vec<Vec<u64>>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| {
                        let mut acc = 0;
                        for (c, x) in e.iter().zip(a) {
                            acc = modular::add_mod(acc, modular::mul_mod(modular::to_mod(c)?, *x));
                        }
                        Some(acc)
                    })
                    .collect()
            })
            .collect()
    }

    /// rank(M(a)) = rows, with a modular prefilter.
    fn full_rank_at(&self, a: &[i64]) -> bool {
        let am: Vec<u64> = a.iter().map(|&x| modular::int_mod(x)).collect();
        if let Some(m) = self.evaluate_mod(&am) {
            if modular::rank_mod(m, self.cols) == self.rows {
                return true;
            }
        }
        let aq: Vec<Rational> = a.iter().map(|&x| Rational::from_int(x)).collect();
        self.evaluate(&aq).rank() == self.rows
    }

    /// All rows×rows minors, as homogeneous forms of degree `rows`.
    pub fn maximal_minors(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut cols: Vec<usize> = (0..self.rows).collect();
        if self.rows > self.cols {
            return out;
        }
        loop {
            let m: Vec<Vec<Poly>> =
                (0..self.rows).map(|p| cols.iter().map(|&q| self.entry_poly(p, q)).collect()).collect();
            out.push(poly_det(&m));
            // next combination
            let mut i = self.rows;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cols[i] < self.cols - self.rows + i {
                    cols[i] += 1;
                    for j in i + 1..self.rows {
                        cols[j] = cols[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].sub(&m[0][0]);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = m[0][j].mul(&poly_det(&minor));
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Status {
    ExactPass,
    /// rank < rows at `witness` when one is known with rational coordinates.
    ExactFail {
        witness: Option<Vec<String>>,
    },
    ProbabilisticPass {
        evidence: usize,
    },
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::ExactPass => "exact-pass",
            Status::ExactFail { .. } => "exact-fail",
            Status::ProbabilisticPass { .. } => "probabilistic-pass",
        }
    }

    pub fn passed(&self) -> bool {
        !matches!(self, Status::ExactFail { .. })
    }

    fn fail_at(a: &[Rational]) -> Self {
        Status::ExactFail { witness: Some(a.iter().map(Rational::to_string).collect()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// weight 2: v has a nonzero ξ coordinate
    WeightTwo,
    /// m = m_r and δ = 1 = dim W
    Shortcut,
    Rank,
    BinaryGcd,
    Macaulay {
        degree: u32,
    },
    Randomized,
    /// no weight m_r − m + 2 in g^ξ; random direct witness tests instead
    Vacuous,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub weight: i64,
    pub candidate_weight: Option<i64>,
    pub delta: usize,
    pub rows: usize,
    pub cols: usize,
    pub method: Method,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct PVerdict {
    pub status: Status,
    pub blocks: Vec<BlockReport>,
    pub warnings: Vec<String>,
}

fn int_point(a: &[i64]) -> Vec<Rational> {
    a.iter().map(|&x| Rational::from_int(x)).collect()
}

fn grid_points(delta: usize) -> Vec<Vec<i64>> {
    let side = (2 * GRID + 1) as usize;
    (0..side.pow(delta as u32))
        .map(|mut k| {
            (0..delta)
                .map(|_| {
                    let v = (k % side) as i64 - GRID;
                    k /= side;
                    v
                })
                .collect::<Vec<i64>>()
        })
        .filter(|p| p.iter().any(|&x| x != 0))
        .collect()
}

/// Exponent vectors of the monomials of degree d in n variables.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// The forms generate every monomial of degree D, so they have no common
/// nonzero root over ℂ. Rank is computed mod p, which can only
/// underestimate the rational rank.
fn macaulay_certificate(forms: &[Poly], n: usize, degree: u32, max_degree: u32) -> Option<u32> {
    let forms: Vec<&Poly> = forms.iter().filter(|f| !f.is_zero()).collect();
    if forms.is_empty() {
        return None;
    }
    for d in degree..=max_degree {
        let target = monomials(n, d);
        let col: HashMap<&Vec<u32>, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = ModEchelon::new(target.len());
        'outer: for mult in monomials(n, d - degree) {
            for f in &forms {
                let mut row = vec![0u64; target.len()];
                for (e, c) in f.terms() {
                    let m: Vec<u32> = e.iter().zip(&mult).map(|(a, b)| a + b).collect();
                    row[col[&m]] = modular::to_mod(c)?;
                }
                ech.insert(row);
                if ech.is_full() {
                    break 'outer;
                }
            }
        }
        if ech.is_full() {
            return Some(d);
        }
    }
    None
}

/// Decides rank M(a) = rows for every nonzero a ∈ ℚ̄^δ.
pub fn surjective_all_nonzero(m: &ParamMatrix, seed: u64) -> (Method, Status) {
    let delta = m.params;
    let e1: Vec<Rational> = (0..delta).map(|i| if i == 0 { Rational::one() } else { Rational::zero() }).collect();
    if m.rows == 0 {
        return (Method::Rank, Status::ExactPass);
    }
    if m.rows > m.cols {
        return (Method::Rank, Status::fail_at(&e1));
    }
    match delta {
        1 => {
            let ok = m.coefficient(0).rank() == m.rows;
            (Method::Rank, if ok { Status::ExactPass } else { Status::fail_at(&e1) })
        }
        2 => (Method::BinaryGcd, binary_tier(m)),
        _ => {
            let minors = if binomial(m.cols, m.rows) <= MAX_MINORS { m.maximal_minors() } else { Vec::new() };
            let bound = delta as u32 * (m.rows as u32 - 1) + 1;
            if let Some(d) = macaulay_certificate(&minors, delta, m.rows as u32, bound) {
                return (Method::Macaulay { degree: d }, Status::ExactPass);
            }
            (Method::Randomized, randomized_tier(m, seed))
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn binary_tier(m: &ParamMatrix) -> Status {
    for a in [[1, 0], [0, 1]] {
        if !m.full_rank_at(&a) {
            return Status::fail_at(&int_point(&a));
        }
    }
    let minors = m.maximal_minors();
    let g = match poly_gcd_binary(&minors) {
        Ok(g) => g,
        Err(_) => return Status::fail_at(&int_point(&[1, 0])),
    };
    if g.is_constant() {
        return Status::ExactPass;
    }
    // both axes pass, so g(t, 1) has a root t ≠ 0, possibly irrational
    let u = g.restrict_univariate(0, &[Rational::zero(), Rational::one()]);
    match rational_root(&u) {
        Some(t) => Status::fail_at(&[t, Rational::one()]),
        None => Status::ExactFail { witness: None },
    }
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out
}

/// A rational root of a univariate polynomial (low degree first), found by
/// the rational root test when the coefficients are small enough.
fn rational_root(u: &[Rational]) -> Option<Rational> {
    if u.len() == 2 {
        return Some(-(&u[0] / &u[1]));
    }
    let lcm = u.iter().fold(num_bigint::BigInt::from(1), |l, c| num_integer::Integer::lcm(&l, &c.denom()));
    let ints: Vec<i64> =
        u.iter().map(|c| num_traits::ToPrimitive::to_i64(&(c.numer() * &lcm / c.denom()))).collect::<Option<_>>()?;
    let low = ints.iter().position(|&c| c != 0)?;
    if low > 0 {
        return Some(Rational::zero());
    }
    let (a0, an) = (ints[0], *ints.last()?);
    if a0.unsigned_abs() > 1 << 40 || an.unsigned_abs() > 1 << 40 {
        return None;
    }
    for p in divisors(a0) {
        for q in divisors(an) {
            for t in [Rational::new(p, q), Rational::new(-p, q)] {
                let mut acc = Rational::zero();
                for c in u.iter().rev() {
                    acc = &(&acc * &t) + c;
                }
                if acc.is_zero() {
                    return Some(t);
                }
            }
        }
    }
    None
}

fn randomized_tier(m: &ParamMatrix, seed: u64) -> Status {
    let mut evidence = 0;
    for a in grid_points(m.params) {
        if !m.full_rank_at(&a) {
            return Status::fail_at(&int_point(&a));
        }
        evidence += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while evidence < RANDOM_POINTS + grid_points(m.params).len() {
        let a: Vec<i64> = (0..m.params).map(|_| rng.random_range(-RANDOM_BOUND..=RANDOM_BOUND)).collect();
        if a.iter().all(|&x| x == 0) {
            continue;
        }
        if !m.full_rank_at(&a) {
            return Status::fail_at(&int_point(&a));
        }
        evidence += 1;
    }
    Status::ProbabilisticPass { evidence }
}

/// Weight spaces of ad ρ on a subspace, keyed by weight.
pub fn weight_spaces(g: &LieAlgebra, rho: &Element, s: &Subspace) -> Result<BTreeMap<i64, Subspace>> {
    g.eigenspaces(rho, s)?
        .into_iter()
        .map(|(l, v)| {
            let w =
                l.to_i64().filter(|_| l.is_integer()).ok_or_else(|| Error::Unsupported("non-integer weight".into()))?;
            Ok((w, v))
        })
        .collect()
}

/// W: the ad-ρ eigenspace of z(g^ξ) for the largest weight m_r.
pub fn top_weight_space(g: &LieAlgebra, data: &OrbitData) -> Result<(i64, Subspace)> {
    let zw = weight_spaces(g, &data.triple.h, &data.z)?;
    let (m, w) = zw.into_iter().next_back().ok_or_else(|| Error::Input("empty center".into()))?;
    Ok((m, w))
}

/// The matrices M(v_s), v_s running over a basis of z ∩ V(m_i): entry
/// (p, q) is the coordinate of [[η, u_q], v_s] on the p-th basis vector of
/// W, u running over a basis of the weight m_k = m_r − m_i + 2 space of
/// g^ξ. `None` when g^ξ has no such weight.
pub fn structure_coeffs(g: &LieAlgebra, data: &OrbitData, weight: i64) -> Result<Option<Vec<QMatrix>>> {
    let rho = &data.triple.h;
    let (mr, w) = top_weight_space(g, data)?;
    let zw = weight_spaces(g, rho, &data.z)?;
    let vs = zw.get(&weight).map(Subspace::basis).unwrap_or_default();
    let gw = weight_spaces(g, rho, &data.gxi)?;
    let Some(cand) = gw.get(&(mr - weight + 2)) else {
        return Ok(None);
    };
    let wc = BasisCoords::new(w.basis())?;
    let us = cand.basis();
    vs.iter()
        .map(|v| {
            let rows: Vec<Vec<Rational>> = us
                .iter()
                .map(|u| {
                    let x = g.bracket(&g.bracket(&data.triple.f, u)?, v)?;
                    wc.coords(&x).ok_or_else(|| {
                        Error::DataIntegrity(format!(
                            "[[η,u],v] leaves the weight-{mr} space (weights {weight}, {})",
                            mr - weight + 2
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            // rows are indexed by u; transpose to rows indexed by p
            Ok(QMatrix::from_rows(wc.dim(), rows).transpose())
        })
        .collect::<Result<Vec<QMatrix>>>()
        .map(Some)
}

/// W ⊆ [[η, g^ξ], v] by subspace inclusion.
pub fn witness_check(g: &LieAlgebra, data: &OrbitData, v: &Element) -> Result<bool> {
    let (_, w) = top_weight_space(g, data)?;
    let eta_g = g.bracket_with_space(&data.triple.f, &data.gxi)?;
    let image = Subspace::span(g.dim(), eta_g.basis().iter().map(|u| g.bracket_unchecked(u, v)));
    Ok(image.contains_space(&w))
}

fn random_in(rng: &mut ChaCha8Rng, basis: &[Element], n: usize) -> Element {
    loop {
        let c: Vec<Rational> = basis.iter().map(|_| Rational::from_int(rng.random_range(-9..=9))).collect();
        if c.iter().any(|x| !x.is_zero()) {
            let terms: Vec<(Rational, &Element)> = c.into_iter().zip(basis).collect();
            return crate::liecore::combination(n, &terms);
        }
    }
}

/// Direct witness tests on `count` seeded random nonzero elements of z;
/// returns the first failing v, if any.
pub fn random_witness_checks(g: &LieAlgebra, data: &OrbitData, count: usize, seed: u64) -> Result<Option<Element>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zb = data.z.basis();
    for _ in 0..count {
        let v = random_in(&mut rng, &zb, g.dim());
        if !witness_check(g, data, &v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn check_property_p(g: &LieAlgebra, data: &OrbitData, seed: u64) -> Result<PVerdict> {
    let mut warnings = Vec::new();
    if !data.distinguished {
        warnings.push("nilpotent is not distinguished".to_string());
    }
    if data.regular {
        warnings.push("nilpotent is regular".to_string());
    }
    let rho = &data.triple.h;
    let (eta, xi) = (&data.triple.f, &data.triple.e);
    let (mr, w) = top_weight_space(g, data)?;
    let gw = weight_spaces(g, rho, &data.gxi)?;
    if gw.get(&mr) != Some(&w) {
        return Err(Error::DataIntegrity(format!("the weight-{mr} spaces of z(g^ξ) and g^ξ differ")));
    }
    if gw.keys().next_back() != Some(&mr) {
        warnings.push(format!("g^ξ has weights above {mr}; higher terms of v are ignored by the block matrices"));
    }
    let zw = weight_spaces(g, rho, &data.z)?;
    let wb = w.basis();
    let mut blocks = Vec::new();
    for (&m, zm) in &zw {
        let delta = zm.dim();
        let block = |method, status, cand: Option<i64>, rows, cols| BlockReport {
            weight: m,
            candidate_weight: cand,
            delta,
            rows,
            cols,
            method,
            status,
        };
        if m == 2 {
            // ξ_p = [[η, −ξ_p/m_r], ξ]
            let scale = Rational::new(-1, mr);
            let ok = zm.dim() == 1
                && zm.contains(xi)
                && wb.iter().all(|x| g.bracket_unchecked(&g.bracket_unchecked(eta, &x.scale(&scale)), xi) == *x);
            let st = if ok { Status::ExactPass } else { Status::ExactFail { witness: None } };
            blocks.push(block(Method::WeightTwo, st, Some(mr), w.dim(), w.dim()));
            continue;
        }
        if m == mr && delta == 1 && w.dim() == 1 {
            // [[η, ξ], v] = −m_r v
            let v = &wb[0];
            let ok = g.bracket_unchecked(&g.bracket_unchecked(eta, xi), v) == v.scale(&Rational::from_int(-mr));
            let st = if ok { Status::ExactPass } else { Status::fail_at(&[Rational::one()]) };
            blocks.push(block(Method::Shortcut, st, Some(2), 1, 1));
            continue;
        }
        match structure_coeffs(g, data, m)? {
            Some(mats) => {
                let pm = ParamMatrix::from_matrices(&mats)?;
                let (method, status) = surjective_all_nonzero(&pm, seed ^ m as u64);
                blocks.push(block(method, status, Some(mr - m + 2), pm.rows, pm.cols));
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ m as u64);
                let zb = zm.basis();
                let mut status = Status::ProbabilisticPass { evidence: 20 };
                for _ in 0..20 {
                    let v = random_in(&mut rng, &zb, g.dim());
                    if !witness_check(g, data, &v)? {
                        let c = BasisCoords::new(zb.clone())?.coords(&v).expect("v ∈ z ∩ V(m)");
                        status = Status::fail_at(&c);
                        break;
                    }
                }
                blocks.push(block(Method::Vacuous, status, None, w.dim(), 0));
            }
        }
    }
    let status = if let Some(b) = blocks.iter().find(|b| !b.status.passed()) {
        Status::ExactFail {
            witness: match &b.status {
                Status::ExactFail { witness } => witness.clone(),
                _ => None,
            },
        }
    } else if let Some(n) = blocks
        .iter()
        .filter_map(|b| match b.status {
            Status::ProbabilisticPass { evidence } => Some(evidence),
            _ => None,
        })
        .min()
    {
        Status::ProbabilisticPass { evidence: n }
    } else {
        Status::ExactPass
    };
    Ok(PVerdict { status, blocks, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64(rows)
    }

    #[test]
    fn tiers() {
        let zero = ParamMatrix::from_matrices(&[QMatrix::zeros(1, 1)]).unwrap();
        assert!(matches!(surjective_all_nonzero(&zero, 0).1, Status::ExactFail { witness: Some(_) }));
        // [[α, β]] is surjective for every nonzero (α, β)
        let p = ParamMatrix::from_matrices(&[m(&[&[1, 0]]), m(&[&[0, 1]])]).unwrap();
        assert_eq!(surjective_all_nonzero(&p, 0), (Method::BinaryGcd, Status::ExactPass));
        // [[α + β]] vanishes at (1, −1)
        let p = ParamMatrix::from_matrices(&[m(&[&[1]]), m(&[&[1]])]).unwrap();
        let (_, st) = surjective_all_nonzero(&p, 0);
        assert_eq!(st, Status::ExactFail { witness: Some(vec!["-1".into(), "1".into()]) });
        // [[α, β, γ]]
        let p = ParamMatrix::from_matrices(&[m(&[&[1, 0, 0]]), m(&[&[0, 1, 0]]), m(&[&[0, 0, 1]])]).unwrap();
        assert_eq!(surjective_all_nonzero(&p, 0), (Method::Macaulay { degree: 1 }, Status::ExactPass));
        // [[α, β], [β, γ]] is singular on the cone αγ = β²
        let p = ParamMatrix::from_matrices(&[m(&[&[1, 0], &[0, 0]]), m(&[&[0, 1], &[1, 0]]), m(&[&[0, 0], &[0, 1]])])
            .unwrap();
        let (meth, st) = surjective_all_nonzero(&p, 0);
        assert_eq!(meth, Method::Randomized);
        assert!(matches!(st, Status::ExactFail { witness: Some(_) }));
    }

    #[test]
    fn minors_of_a_2x3_family() {
        let p = ParamMatrix::from_matrices(&[m(&[&[1, 0, 0], &[0, 1, 0]]), m(&[&[0, 1, 0], &[0, 0, 1]])]).unwrap();
        let minors = p.maximal_minors();
        assert_eq!(minors.len(), 3);
        assert!(minors.iter().all(|f| f.degree() == Some(2)));
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(grid_points(2).len(), 24);
    }
}
