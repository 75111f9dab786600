//! Matrix realizations of sl_n, so_n and sp_2n with a nilpotent of given
//! Jordan type, the power span z′, the D-matrix on z′, and the special
//! central element of so_2n for partitions [2s+1, 2t+1].
//!
//! The invariant form is chosen block by block from the partition: an
//! anti-diagonal form on each single Jordan block and a hyperbolic form on
//! each pair of equal blocks. All forms are signed permutation matrices,
//! so B⁻¹ = Bᵀ.

use std::fmt;
use std::str::FromStr;

use crate::exactla::{QMatrix, Rational};
use crate::index::{exact_generic_rank, RankConfig, VectorMatrix};
use crate::liecore::{BasisCoords, Element, LieAlgebra, Subspace};
use crate::slice::{jacobson_morozov, OrbitData, Sl2Triple};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Sl,
    So,
    Sp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl => "sl",
            Family::So => "so",
            Family::Sp => "sp",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl" => Ok(Family::Sl),
            "so" => Ok(Family::So),
            "sp" => Ok(Family::Sp),
            _ => Err(Error::Input(format!("unknown family '{s}' (expected sl, so or sp)"))),
        }
    }
}

pub fn parse_partition(s: &str) -> Result<Vec<usize>> {
    let parts: std::result::Result<Vec<usize>, _> =
        s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(str::parse).collect();
    let mut p = parts.map_err(|_| Error::Input(format!("bad partition '{s}'")))?;
    p.sort_unstable_by(|a, b| b.cmp(a));
    Ok(p)
}

/// Checks the family's multiplicity rule; returns the matrix size.
pub fn validate_partition(family: Family, partition: &[usize]) -> Result<usize> {
    if partition.is_empty() || partition.contains(&0) {
        return Err(Error::Input("partition parts must be positive".into()));
    }
    if partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Input("partition must be weakly decreasing".into()));
    }
    let n: usize = partition.iter().sum();
    let mult = |k: usize| partition.iter().filter(|&&p| p == k).count();
    match family {
        Family::Sl if n < 2 => Err(Error::Input("sl_n needs n ≥ 2".into())),
        Family::So if n < 3 => Err(Error::Input("so_n needs n ≥ 3".into())),
        Family::So => match partition.iter().find(|&&k| k % 2 == 0 && mult(k) % 2 == 1) {
            Some(k) => Err(Error::Input(format!("so: even part {k} has odd multiplicity"))),
            None => Ok(n),
        },
        Family::Sp => match partition.iter().find(|&&k| k % 2 == 1 && mult(k) % 2 == 1) {
            Some(k) => Err(Error::Input(format!("sp: odd part {k} has odd multiplicity"))),
            None => Ok(n),
        },
        Family::Sl => Ok(n),
    }
}

/// A Jordan block of ξ: `size` coordinates starting at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JordanBlock {
    pub start: usize,
    pub size: usize,
}

/// A classical Lie algebra realized as n×n matrices.
pub struct ClassicalRealization {
    pub family: Family,
    pub n: usize,
    /// Form matrix B: so/sp are {M : MᵀB + BM = 0}.
    pub form: Option<QMatrix>,
    pub algebra: LieAlgebra,
    basis: Vec<Vec<(usize, usize, Rational)>>,
    // B as a signed permutation: B[i][perm[i]] = sign[i]
    perm: Vec<usize>,
    sign: Vec<Rational>,
    pairs: Vec<(usize, usize)>,
}

impl fmt::Debug for ClassicalRealization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} (dim {})", self.family, self.n, self.algebra.dim())
    }
}

fn dense(n: usize, sparse: &[(usize, usize, Rational)]) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for (i, j, v) in sparse {
        let x = m.get(*i, *j) + v;
        m.set(*i, *j, x);
    }
    m
}

fn commutator(n: usize, a: &[(usize, usize, Rational)], b: &[(usize, usize, Rational)]) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for (i, k, v) in a {
        for (k2, j, w) in b {
            if k == k2 {
                let x = m.get(*i, *j) + &(v * w);
                m.set(*i, *j, x);
            }
        }
    }
    for (i, k, v) in b {
        for (k2, j, w) in a {
            if k == k2 {
                let x = m.get(*i, *j) - &(v * w);
                m.set(*i, *j, x);
            }
        }
    }
    m
}

impl ClassicalRealization {
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Input("sl_n needs n ≥ 2".into()));
        }
        let one = Rational::one();
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(vec![(i, j, one.clone())]);
                    labels.push(format!("E{}_{}", i + 1, j + 1));
                    pairs.push((i, j));
                }
            }
        }
        for i in 0..n - 1 {
            basis.push(vec![(i, i, one.clone()), (i + 1, i + 1, -one.clone())]);
            labels.push(format!("H{}", i + 1));
        }
        Self::assemble(Family::Sl, n, None, basis, labels, pairs, Vec::new(), Vec::new())
    }

    /// so or sp for a form given as a signed permutation matrix.
    pub fn with_form(family: Family, form: QMatrix) -> Result<Self> {
        let n = form.rows();
        if form.cols() != n {
            return Err(Error::Input("form must be square".into()));
        }
        let mut perm = vec![usize::MAX; n];
        let mut sign = vec![Rational::zero(); n];
        for (i, (p, s)) in perm.iter_mut().zip(sign.iter_mut()).enumerate() {
            let nz: Vec<usize> = (0..n).filter(|&j| !form.get(i, j).is_zero()).collect();
            if nz.len() != 1 || form.get(i, nz[0]).abs() != Rational::one() {
                return Err(Error::Input("form must be a signed permutation matrix".into()));
            }
            *p = nz[0];
            *s = form.get(i, nz[0]).clone();
        }
        let expected_sym = match family {
            Family::So => form.transpose() == form,
            Family::Sp => form.transpose() == form.scale(&-Rational::one()),
            Family::Sl => return Err(Error::Input("sl has no invariant form".into())),
        };
        if !expected_sym {
            return Err(Error::Input(format!("form has the wrong symmetry for {family}")));
        }
        // M = Bᵀ S with S antisymmetric (so) or symmetric (sp); (Bᵀ)_{ki} = B_{ik}
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s_terms: Vec<(usize, usize, Rational)> = match family {
                    Family::So if i == j => continue,
                    Family::So => vec![(i, j, Rational::one()), (j, i, -Rational::one())],
                    _ if i == j => vec![(i, i, Rational::one())],
                    _ => vec![(i, j, Rational::one()), (j, i, Rational::one())],
                };
                // (Bᵀ S)_{k j'} = Σ_i B_{ik} S_{i j'} = sign[i] S_{i j'} at k = perm[i]
                let m: Vec<(usize, usize, Rational)> =
                    s_terms.into_iter().map(|(a, b, v)| (perm[a], b, &sign[a] * &v)).collect();
                basis.push(m);
                labels.push(format!("S{}_{}", i + 1, j + 1));
                pairs.push((i, j));
            }
        }
        Self::assemble(family, n, Some(form), basis, labels, pairs, perm, sign)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        family: Family,
        n: usize,
        form: Option<QMatrix>,
        basis: Vec<Vec<(usize, usize, Rational)>>,
        labels: Vec<String>,
        pairs: Vec<(usize, usize)>,
        perm: Vec<usize>,
        sign: Vec<Rational>,
    ) -> Result<Self> {
        let mut r = ClassicalRealization {
            family,
            n,
            form,
            algebra: LieAlgebra::from_brackets(Vec::new(), |_, _| Vec::new()),
            basis,
            perm,
            sign,
            pairs,
        };
        let table: Vec<Vec<Vec<(usize, Rational)>>> = (0..r.basis.len())
            .map(|i| {
                (0..r.basis.len())
                    .map(|j| {
                        if j <= i {
                            return Vec::new();
                        }
                        let c = commutator(n, &r.basis[i], &r.basis[j]);
                        r.coords_of(&c).into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
                    })
                    .collect()
            })
            .collect();
        let toral: Vec<usize> = (0..r.basis.len()).filter(|&k| r.basis[k].iter().all(|(i, j, _)| i == j)).collect();
        let rank = match family {
            Family::Sl => n - 1,
            Family::So => n / 2,
            Family::Sp => n / 2,
        };
        r.algebra = LieAlgebra::from_brackets(labels, |i, j| table[i][j].clone()).with_toral_hint(toral, rank);
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_matrix(&self, k: usize) -> QMatrix {
        dense(self.n, &self.basis[k])
    }

    pub fn to_matrix(&self, x: &Element) -> QMatrix {
        let mut m = QMatrix::zeros(self.n, self.n);
        for (k, c) in x.support() {
            for (i, j, v) in &self.basis[k] {
                let y = m.get(*i, *j) + &(c * v);
                m.set(*i, *j, y);
            }
        }
        m
    }

    /// Coordinates read off without a membership check.
    fn coords_of(&self, m: &QMatrix) -> Vec<Rational> {
        match self.family {
            Family::Sl => {
                let mut c: Vec<Rational> = self.pairs.iter().map(|&(i, j)| m.get(i, j).clone()).collect();
                let mut acc = Rational::zero();
                for i in 0..self.n - 1 {
                    acc += m.get(i, i);
                    c.push(acc.clone());
                }
                c
            }
            // (BM)_{ij} = sign[i] · M_{perm[i], j}
            _ => self.pairs.iter().map(|&(i, j)| &self.sign[i] * m.get(self.perm[i], j)).collect(),
        }
    }

    /// Element with matrix `m`; input error when m is not in the algebra.
    pub fn from_matrix(&self, m: &QMatrix) -> Result<Element> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::Input("matrix of the wrong size".into()));
        }
        let e = Element::from_coeffs(self.coords_of(m));
        if &self.to_matrix(&e) != m {
            return Err(Error::Input(format!("matrix is not in {}{}", self.family, self.n)));
        }
        Ok(e)
    }

    pub fn contains_matrix(&self, m: &QMatrix) -> bool {
        match (&self.form, self.family) {
            (None, _) => m.trace().is_zero(),
            (Some(b), _) => m.transpose().mul(b).add(&b.mul(m)).is_zero(),
        }
    }
}

fn jordan(size: usize) -> QMatrix {
    let mut m = QMatrix::zeros(size, size);
    for i in 0..size.saturating_sub(1) {
        m.set(i, i + 1, Rational::one());
    }
    m
}

fn place(target: &mut QMatrix, block: &QMatrix, r0: usize, c0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if !v.is_zero() {
                target.set(r0 + i, c0 + j, v.clone());
            }
        }
    }
}

fn sub_block(m: &QMatrix, r0: usize, c0: usize, rows: usize, cols: usize) -> QMatrix {
    let mut out = QMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            out.set(i, j, m.get(r0 + i, c0 + j).clone());
        }
    }
    out
}

enum Piece {
    Single(usize),
    Pair(usize),
}

/// A nilpotent of given Jordan type inside its realization.
pub struct PartitionNilpotent {
    pub family: Family,
    pub partition: Vec<usize>,
    pub realization: ClassicalRealization,
    pub xi: QMatrix,
    pub blocks: Vec<JordanBlock>,
    pub triple: Sl2Triple,
}

impl fmt::Debug for PartitionNilpotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} {:?}", self.family, self.realization.n, self.partition)
    }
}

pub fn build_partition_nilpotent(family: Family, partition: &[usize]) -> Result<PartitionNilpotent> {
    let n = validate_partition(family, partition)?;
    let mut pieces = Vec::new();
    let mut i = 0;
    while i < partition.len() {
        let k = partition[i];
        let m = partition[i..].iter().take_while(|&&p| p == k).count();
        let single = match family {
            Family::Sl => m,
            Family::So if k % 2 == 1 => m % 2,
            Family::Sp if k.is_multiple_of(2) => m,
            _ => 0,
        };
        for _ in 0..single {
            pieces.push(Piece::Single(k));
        }
        for _ in 0..(m - single) / 2 {
            pieces.push(Piece::Pair(k));
        }
        i += m;
    }
    let mut xi = QMatrix::zeros(n, n);
    let mut form = QMatrix::zeros(n, n);
    let mut blocks = Vec::new();
    let mut at = 0;
    for p in &pieces {
        match *p {
            Piece::Single(k) => {
                let mut x = QMatrix::zeros(k, k);
                let half = k / 2;
                for a in 0..k - 1 {
                    // so (k odd): c_a = 1 for a < half; sp (k even): c_a = 1 for a < half
                    let c = if a < half { 1 } else { -1 };
                    x.set(a, a + 1, Rational::from_int(if family == Family::Sl { 1 } else { c }));
                }
                for a in 0..k {
                    let s = match family {
                        Family::Sp if a >= half => -1,
                        _ => 1,
                    };
                    form.set(at + a, at + k - 1 - a, Rational::from_int(s));
                }
                place(&mut xi, &x, at, at);
                blocks.push(JordanBlock { start: at, size: k });
                at += k;
            }
            Piece::Pair(k) => {
                let nk = jordan(k);
                place(&mut xi, &nk, at, at);
                place(&mut xi, &nk.transpose().scale(&-Rational::one()), at + k, at + k);
                let eps = if family == Family::So { 1 } else { -1 };
                for a in 0..k {
                    form.set(at + a, at + k + a, Rational::one());
                    form.set(at + k + a, at + a, Rational::from_int(eps));
                }
                blocks.push(JordanBlock { start: at, size: k });
                blocks.push(JordanBlock { start: at + k, size: k });
                at += 2 * k;
            }
        }
    }
    let realization = match family {
        Family::Sl => ClassicalRealization::sl(n)?,
        _ => ClassicalRealization::with_form(family, form)?,
    };
    let e = realization.from_matrix(&xi)?;
    let triple = jacobson_morozov(&realization.algebra, &e)?;
    Ok(PartitionNilpotent { family, partition: partition.to_vec(), realization, xi, blocks, triple })
}

impl PartitionNilpotent {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.realization.algebra
    }

    /// Degree of the minimal polynomial of ξ.
    pub fn degree(&self) -> usize {
        self.partition[0]
    }

    pub fn xi_power(&self, k: u32) -> QMatrix {
        let mut p = QMatrix::identity(self.realization.n);
        for _ in 0..k {
            p = p.mul(&self.xi);
        }
        p
    }

    /// Exponents k of the powers ξ^k spanning z′, in basis order.
    pub fn zprime_exponents(&self) -> Vec<u32> {
        let d = self.degree() as u32;
        match self.family {
            Family::Sl => (1..d).collect(),
            _ => (1..=d / 2).map(|i| 2 * i - 1).collect(),
        }
    }

    pub fn zprime_basis(&self) -> Result<Vec<Element>> {
        self.zprime_exponents().into_iter().map(|k| self.realization.from_matrix(&self.xi_power(k))).collect()
    }

    pub fn zprime(&self) -> Result<Subspace> {
        Ok(Subspace::span(self.algebra().dim(), self.zprime_basis()?))
    }

    pub fn orbit_data(&self) -> Result<OrbitData> {
        OrbitData::new(self.algebra(), self.triple.clone())
    }

    /// Entry (i, j) = [[η, e_j], e_i] on the power basis e of z′.
    pub fn dmatrix(&self) -> Result<VectorMatrix> {
        let basis = self.zprime_basis()?;
        let coords = BasisCoords::with_ambient(self.algebra().dim(), basis.clone())?;
        let g = self.algebra();
        let rows: Vec<Vec<Element>> = basis
            .iter()
            .map(|ei| {
                basis.iter().map(|ej| g.bracket_unchecked(&g.bracket_unchecked(&self.triple.f, ej), ei)).collect()
            })
            .collect();
        VectorMatrix::from_elements(&coords, &rows)
    }

    /// The D-matrix predicted by [[ξ^k, η], ξ^i] = 2ki ξ^{k+i−1}: −2ij ξ^{i+j−1} for sl,
    /// −2(2i−1)(2j−1) ξ^{2i+2j−3} for so and sp, zero past the last power.
    pub fn dmatrix_closed_form(&self) -> VectorMatrix {
        let exps = self.zprime_exponents();
        let r = exps.len();
        let mut m = VectorMatrix::zeros(r, r, r);
        for (i, &a) in exps.iter().enumerate() {
            for (j, &b) in exps.iter().enumerate() {
                let k = a + b - 1;
                if let Some(pos) = exps.iter().position(|&e| e == k) {
                    let mut c = vec![Rational::zero(); r];
                    c[pos] = Rational::from_int(-2 * a as i64 * b as i64);
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    /// |det D(φ)| predicted for z′ = z with φ(ξ^top) = t: 2^{d−1}((d−1)!)² t^{d−1}
    /// for sl, 2^r((2r−1)!!)² t^r for so and sp.
    pub fn dmatrix_det_closed_form(&self, top: &Rational) -> Rational {
        let exps = self.zprime_exponents();
        let r = exps.len() as u32;
        let mut c = Rational::from_int(2).pow(r);
        let prod: i64 = match self.family {
            Family::Sl => (1..=r as i64).product(),
            _ => (1..=r as i64).map(|i| 2 * i - 1).product(),
        };
        c = &c * &Rational::from_int(prod).pow(2);
        &c * &top.pow(r)
    }

    fn two_parts(&self) -> Result<(usize, usize)> {
        match (self.family, self.partition.as_slice()) {
            (Family::So, &[a, b]) if a % 2 == 1 && b % 2 == 1 && a > b => Ok(((a - 1) / 2, (b - 1) / 2)),
            _ => Err(Error::Input("needs so with a partition [2s+1, 2t+1], s > t".into())),
        }
    }

    /// ξ restricted to the second block, as an element of g.
    pub fn xi2(&self) -> Result<Element> {
        let (s, _) = self.two_parts()?;
        let n1 = 2 * s + 1;
        let n = self.realization.n;
        let mut m = QMatrix::zeros(n, n);
        place(&mut m, &sub_block(&self.xi, n1, n1, n - n1, n - n1), n1, n1);
        self.realization.from_matrix(&m)
    }

    pub fn special_center_element(&self) -> Result<SpecialElement> {
        let (s, t) = self.two_parts()?;
        let (n1, n2) = (2 * s + 1, 2 * t + 1);
        let n = n1 + n2;
        let x1 = sub_block(&self.xi, 0, 0, n1, n1);
        let x2 = sub_block(&self.xi, n1, n1, n2, n2);
        // unknown A (n1×n2, row-major): X1·A = 0 and A·X2 = 0
        let vars = n1 * n2;
        let mut eqs = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 {
                let mut row = vec![Rational::zero(); vars];
                for k in 0..n1 {
                    let c = x1.get(i, k);
                    if !c.is_zero() {
                        row[k * n2 + j] += c;
                    }
                }
                eqs.push(row);
                let mut row = vec![Rational::zero(); vars];
                for k in 0..n2 {
                    let c = x2.get(k, j);
                    if !c.is_zero() {
                        row[i * n2 + k] += c;
                    }
                }
                eqs.push(row);
            }
        }
        let ker = QMatrix::from_rows(vars, eqs).kernel_basis();
        if ker.rows() == 0 {
            return Err(Error::PropertyViolation("no nonzero A with X1·A = 0 = A·X2".into()));
        }
        let a = QMatrix::from_rows(n2, ker.row(0).chunks(n2).map(<[Rational]>::to_vec).collect());
        let form = self.realization.form.as_ref().expect("so has a form");
        let j1 = sub_block(form, 0, 0, n1, n1);
        let j2 = sub_block(form, n1, n1, n2, n2);
        let mut w = QMatrix::zeros(n, n);
        place(&mut w, &a, 0, n1);
        place(&mut w, &j2.transpose().mul(&a.transpose()).mul(&j1).scale(&-Rational::one()), n1, 0);
        let g = self.algebra();
        let we = self.realization.from_matrix(&w)?;
        let hw = g.bracket(&self.triple.h, &we)?;
        let (p, c) = we.support().next().expect("w ≠ 0");
        let lambda = &hw.coeffs()[p] / c;
        if hw != we.scale(&lambda) {
            return Err(Error::PropertyViolation("w is not an ad-ρ eigenvector".into()));
        }
        let lambda = lambda
            .to_i64()
            .filter(|_| lambda.is_integer())
            .ok_or_else(|| Error::PropertyViolation("eigenvalue of w is not an integer".into()))?;
        Ok(SpecialElement { w: we, a_rank: a.rank(), lambda, s, t })
    }

    /// The three bracket identities of the so_2n two-part case; returns
    /// x = [[η, w], ξ₂].
    pub fn verify_crochet(&self, w: &Element, lambda: i64) -> Result<Element> {
        let (s, _) = self.two_parts()?;
        let g = self.algebra();
        let eta_w = g.bracket(&self.triple.f, w)?;
        let first = g.bracket(&eta_w, &self.triple.e)?;
        if first != w.scale(&Rational::from_int(-lambda)) {
            return Err(Error::PropertyViolation("[[η,w],ξ] ≠ −λw".into()));
        }
        for i in 2..=s as u32 {
            let p = self.realization.from_matrix(&self.xi_power(2 * i - 1))?;
            if !g.bracket(&eta_w, &p)?.is_zero() {
                return Err(Error::PropertyViolation(format!("[[η,w],ξ^{}] ≠ 0", 2 * i - 1)));
            }
        }
        let xi2 = self.xi2()?;
        let x = g.bracket(&eta_w, &xi2)?;
        if x.is_zero() {
            return Err(Error::PropertyViolation("[[η,w],ξ₂] = 0".into()));
        }
        if !g.bracket(&x, &self.triple.e)?.is_zero() {
            return Err(Error::PropertyViolation("[[η,w],ξ₂] is not in g^ξ".into()));
        }
        let top = self.realization.from_matrix(&self.xi_power(2 * s as u32 - 1))?;
        if !g.bracket(&g.bracket(&self.triple.f, &top)?, &xi2)?.is_zero() {
            return Err(Error::PropertyViolation("[[η,ξ^{2s−1}],ξ₂] ≠ 0".into()));
        }
        Ok(x)
    }

    /// Entries [[η, col_j], row_i] ∈ g^ξ on the echelon basis of g^ξ.
    pub fn bracket_matrix(&self, gxi: &Subspace, rows: &[Element], cols: &[Element]) -> Result<VectorMatrix> {
        let g = self.algebra();
        let coords = BasisCoords::with_ambient(g.dim(), gxi.basis())?;
        let entries: Vec<Vec<Element>> = rows
            .iter()
            .map(|r| cols.iter().map(|c| g.bracket_unchecked(&g.bracket_unchecked(&self.triple.f, c), r)).collect())
            .collect();
        VectorMatrix::from_elements(&coords, &entries)
    }
}

#[derive(Clone, Debug)]
pub struct SpecialElement {
    pub w: Element,
    pub a_rank: usize,
    /// ad-ρ eigenvalue of w.
    pub lambda: i64,
    pub s: usize,
    pub t: usize,
}

/// Results of the so_2n two-part suite.
#[derive(Clone, Debug)]
pub struct TwoPartReport {
    pub s: usize,
    pub t: usize,
    pub lambda: i64,
    pub dim_zprime: usize,
    pub dim_z: usize,
    pub w_in_center: bool,
    pub w_outside_zprime: bool,
    pub basis_of_center: bool,
    pub crochet_ok: bool,
    /// exact generic rank of the full (s+1)×(s+1) D-matrix, when the grid is small
    pub full_d_rank: Option<usize>,
    pub m_prime_nonsingular: bool,
    pub m_prime_det_matches: bool,
}

impl TwoPartReport {
    pub fn pass(&self) -> bool {
        self.dim_zprime == self.s
            && self.dim_z == self.s + 1
            && self.w_in_center
            && self.w_outside_zprime
            && self.basis_of_center
            && self.crochet_ok
            && self.full_d_rank.is_some_and(|r| r <= self.s)
            && self.m_prime_nonsingular
            && self.m_prime_det_matches
    }
}

/// Compress a vector matrix onto the span of its entries.
fn compress(m: &VectorMatrix) -> VectorMatrix {
    let k = m.target_dim();
    let mut span = Subspace::zero(k);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            span = span.sum(&Subspace::span(k, [Element::from_coeffs(m.entry(i, j).to_vec())]));
        }
    }
    let mut out = VectorMatrix::zeros(m.rows(), m.cols(), span.dim());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, span.coords_unchecked(&Element::from_coeffs(m.entry(i, j).to_vec())));
        }
    }
    out
}

pub fn exact_rank_compressed(m: &VectorMatrix, max_points: usize) -> Option<usize> {
    exact_generic_rank(&compress(m), max_points)
}

pub fn two_part_suite(p: &PartitionNilpotent, data: &OrbitData, cfg: &RankConfig) -> Result<TwoPartReport> {
    let sp = p.special_center_element()?;
    let (s, t) = (sp.s, sp.t);
    let g = p.algebra();
    let zb = p.zprime_basis()?;
    let zprime = Subspace::span(g.dim(), zb.clone());
    let w_in_center = data.z.contains(&sp.w);
    let w_outside_zprime = !zprime.contains(&sp.w);
    let mut zfull = zb.clone();
    zfull.push(sp.w.clone());
    let basis_of_center = Subspace::span(g.dim(), zfull.clone()) == data.z && zfull.len() == data.z.dim();
    let x = p.verify_crochet(&sp.w, sp.lambda);
    let crochet_ok = x.is_ok();
    let full_d = p.bracket_matrix(&data.gxi, &zfull, &zfull)?;
    let full_d_rank = exact_rank_compressed(&full_d, 200_000);
    let mut rows: Vec<Element> = zb.clone();
    rows.push(p.xi2()?);
    let mprime = p.bracket_matrix(&data.gxi, &rows, &zfull)?;
    let coords = BasisCoords::with_ambient(g.dim(), data.gxi.basis())?;
    let (mut nonsingular, mut det_matches) = (false, true);
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(cfg.seed);
    let top = zb.last().expect("s ≥ 1").clone();
    let xc = match &x {
        Ok(x) => coords.coords(x),
        Err(_) => None,
    };
    let tc = coords.coords(&top).expect("ξ^{2s−1} ∈ g^ξ");
    let dbl: i64 = (1..=s as i64).map(|i| 2 * i - 1).product();
    let mu = &Rational::from_int(2).pow(s as u32) * &Rational::from_int(dbl).pow(2);
    for _ in 0..cfg.trials.max(1) {
        let phi = crate::index::random_form(&mut rng, coords.dim(), cfg.bound);
        let det = mprime.evaluate(&phi).det();
        nonsingular |= !det.is_zero();
        let pair = |c: &[Rational]| -> Rational { c.iter().zip(&phi).map(|(a, b)| a * b).sum() };
        let predicted = match &xc {
            Some(xc) => &(&mu * &pair(xc)) * &pair(&tc).pow(s as u32),
            None => Rational::zero(),
        };
        det_matches &= det.abs() == predicted.abs();
    }
    Ok(TwoPartReport {
        s,
        t,
        lambda: sp.lambda,
        dim_zprime: zprime.dim(),
        dim_z: data.z.dim(),
        w_in_center,
        w_outside_zprime,
        basis_of_center,
        crochet_ok,
        full_d_rank,
        m_prime_nonsingular: nonsingular,
        m_prime_det_matches: det_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_rules() {
        assert!(validate_partition(Family::Sp, &[2, 2]).is_ok());
        assert!(validate_partition(Family::Sp, &[3, 1]).is_err());
        assert!(validate_partition(Family::So, &[4, 4]).is_ok());
        assert!(validate_partition(Family::So, &[4, 2, 1]).is_err());
        assert!(validate_partition(Family::So, &[1, 1]).is_err());
        assert!(validate_partition(Family::Sl, &[2, 3]).is_err());
        assert_eq!(parse_partition("3, 5").unwrap(), vec![5, 3]);
        assert!(parse_partition("3,x").is_err());
    }
}
