//! sl2-triples through nilpotent elements, orbit invariants, and the orbit
//! catalog of distinguished non-regular nilpotents.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chevalley::{build, CartanType, SimpleLie};
use crate::exactla::{QMatrix, Rational};
use crate::liecore::{Element, LieAlgebra, Subspace};
use crate::{Error, Result};

/// (e, h, f) with [h,e] = 2e, [e,f] = h, [h,f] = −2f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Element,
    pub h: Element,
    pub f: Element,
}

impl Sl2Triple {
    pub fn validate(&self, g: &LieAlgebra) -> Result<()> {
        let two = Rational::from_int(2);
        let he = g.bracket(&self.h, &self.e)?;
        let ef = g.bracket(&self.e, &self.f)?;
        let hf = g.bracket(&self.h, &self.f)?;
        if he != self.e.scale(&two) {
            return Err(Error::PropertyViolation("[h,e] ≠ 2e".into()));
        }
        if ef != self.h {
            return Err(Error::PropertyViolation("[e,f] ≠ h".into()));
        }
        if hf != self.f.scale(&-two) {
            return Err(Error::PropertyViolation("[h,f] ≠ −2f".into()));
        }
        Ok(())
    }
}

/// (ad e)^{dim g} = 0, by repeated squaring.
pub fn is_nilpotent(g: &LieAlgebra, e: &Element) -> Result<bool> {
    let mut p = g.ad_matrix(e)?;
    let mut k = 1;
    while k < g.dim() {
        if p.is_zero() {
            return Ok(true);
        }
        p = p.mul(&p);
        k *= 2;
    }
    Ok(p.is_zero())
}

pub fn jacobson_morozov(g: &LieAlgebra, e: &Element) -> Result<Sl2Triple> {
    if e.len() != g.dim() {
        return Err(Error::Input("element from a different algebra".into()));
    }
    if e.is_zero() {
        return Err(Error::Input("Jacobson–Morozov needs a nonzero nilpotent".into()));
    }
    if !is_nilpotent(g, e)? {
        return Err(Error::Input("element is not nilpotent".into()));
    }
    let n = g.dim();
    let ad = g.ad_matrix(e)?;
    // h ∈ [e, g] iff λ·h = 0 for every λ in the left kernel of ad e
    let lk = ad.transpose().kernel_basis();
    let target: Vec<Rational> = e.scale(&Rational::from_int(-2)).into_coeffs();
    let h = match g.cartan_indices() {
        Some(idx) => solve_h(&ad, &lk, &target, idx)?,
        None => None,
    };
    let h = match h {
        Some(h) => h,
        None => solve_h(&ad, &lk, &target, &(0..n).collect::<Vec<_>>())?
            .ok_or_else(|| Error::PropertyViolation("no h ∈ [e,g] with [h,e] = 2e".into()))?,
    };
    let minus_two = Rational::from_int(-2);
    let space = g.eigenspace(&h, &Subspace::whole(n), &minus_two)?;
    let basis = space.basis();
    // columns: [e, v_k] for the eigenbasis of ad h at −2
    let mut m = QMatrix::zeros(n, basis.len());
    for (k, v) in basis.iter().enumerate() {
        for (i, c) in g.bracket_unchecked(e, v).support() {
            m.set(i, k, c.clone());
        }
    }
    let c = m
        .solve(h.coeffs())?
        .ok_or_else(|| Error::PropertyViolation("no f in the −2 eigenspace with [e,f] = h".into()))?;
    let f = space.element(&c);
    let t = Sl2Triple { e: e.clone(), h, f };
    t.validate(g)?;
    Ok(t)
}

/// Solve ad(e)·h = target (that is [e,h] = −2e) and λ·h = 0 with h
/// supported on `support`.
fn solve_h(ad: &QMatrix, lk: &QMatrix, target: &[Rational], support: &[usize]) -> Result<Option<Element>> {
    let n = ad.rows();
    let rows = n + lk.rows();
    let mut m = QMatrix::zeros(rows, support.len());
    for (k, &s) in support.iter().enumerate() {
        for i in 0..n {
            let v = ad.get(i, s);
            if !v.is_zero() {
                m.set(i, k, v.clone());
            }
        }
        for r in 0..lk.rows() {
            let v = lk.get(r, s);
            if !v.is_zero() {
                m.set(n + r, k, v.clone());
            }
        }
    }
    let mut b = target.to_vec();
    b.resize(rows, Rational::zero());
    Ok(m.solve(&b)?.map(|c| {
        let mut h = vec![Rational::zero(); n];
        for (k, &s) in support.iter().enumerate() {
            h[s] = c[k].clone();
        }
        Element::from_coeffs(h)
    }))
}

/// dim g^e equals the rank.
pub fn is_regular(g: &LieAlgebra, t: &Sl2Triple) -> Result<bool> {
    let rank = g.rank().ok_or_else(|| Error::Unsupported("algebra has no recorded rank".into()))?;
    Ok(g.centralizer(&t.e)?.dim() == rank)
}

/// dim g(0) = dim g(2) for the grading by ad h.
pub fn is_distinguished(g: &LieAlgebra, t: &Sl2Triple) -> Result<bool> {
    let all = Subspace::whole(g.dim());
    let g0 = g.eigenspace(&t.h, &all, &Rational::zero())?;
    let g2 = g.eigenspace(&t.h, &all, &Rational::from_int(2))?;
    Ok(g0.dim() == g2.dim())
}

/// The subspaces attached to a triple: g^ξ, z(g^ξ), n(g^ξ) and the ad-ρ
/// weights on the center.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub triple: Sl2Triple,
    pub gxi: Subspace,
    pub z: Subspace,
    pub n: Subspace,
    /// Eigenvalue of ad h with multiplicity, ascending.
    pub z_weights: Vec<(i64, usize)>,
    pub regular: bool,
    pub distinguished: bool,
}

impl OrbitData {
    pub fn new(g: &LieAlgebra, triple: Sl2Triple) -> Result<Self> {
        let gxi = g.centralizer(&triple.e)?;
        let z = g.center_of(&gxi)?;
        let n = g.normalizer(&gxi);
        if n.dim() != gxi.dim() + z.dim() {
            return Err(Error::PropertyViolation(format!(
                "dim n(g^ξ) = {} but dim g^ξ + dim z = {}",
                n.dim(),
                gxi.dim() + z.dim()
            )));
        }
        let z_weights = integer_weights(g, &triple.h, &z)?;
        let regular = is_regular(g, &triple)?;
        let distinguished = is_distinguished(g, &triple)?;
        Ok(OrbitData { triple, gxi, z, n, z_weights, regular, distinguished })
    }

    pub fn from_nilpotent(g: &LieAlgebra, e: &Element) -> Result<Self> {
        Self::new(g, jacobson_morozov(g, e)?)
    }

    /// Weight multiset on z(g^ξ), repeated by multiplicity.
    pub fn weight_list(&self) -> Vec<i64> {
        self.z_weights.iter().flat_map(|&(w, m)| std::iter::repeat_n(w, m)).collect()
    }

    pub fn top_weight(&self) -> i64 {
        self.z_weights.last().map(|w| w.0).unwrap_or(0)
    }
}

/// Eigenvalues of ad x on an invariant subspace, as integers with multiplicity.
pub fn integer_weights(g: &LieAlgebra, x: &Element, s: &Subspace) -> Result<Vec<(i64, usize)>> {
    g.eigenspaces(x, s)?
        .into_iter()
        .map(|(l, sp)| {
            l.to_i64().map(|v| (v, sp.dim())).ok_or_else(|| Error::Unsupported("non-integral weight".into()))
        })
        .collect()
}

/// One catalog entry. The nilpotent is Σ c·x_β over the stored terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSpec {
    pub cartan_type: CartanType,
    pub label: String,
    pub characteristic: Vec<i64>,
    pub e_terms: Vec<(Vec<i64>, Rational)>,
    /// Line of the `orbit` header.
    pub line: usize,
}

impl OrbitSpec {
    pub fn nilpotent(&self, g: &SimpleLie) -> Result<Element> {
        let mut e = g.algebra.zero();
        for (root, c) in &self.e_terms {
            e.axpy(c, &g.root_vector(root)?);
        }
        Ok(e)
    }

    /// Render in the catalog grammar.
    pub fn to_catalog(&self) -> String {
        let mut s = format!("orbit {} \"{}\"\n", self.cartan_type, self.label);
        let ch: Vec<String> = self.characteristic.iter().map(i64::to_string).collect();
        s += &format!("char {}\n", ch.join(" "));
        for (r, c) in &self.e_terms {
            let rs: Vec<String> = r.iter().map(i64::to_string).collect();
            if c.is_one() {
                s += &format!("e + {}\n", rs.join(","));
            } else {
                s += &format!("e + {} * {}\n", rs.join(","), c);
            }
        }
        s += "end\n";
        s
    }
}

/// Parse the catalog grammar without validating the orbits.
pub fn parse_catalog(text: &str) -> Result<Vec<OrbitSpec>> {
    let mut out = Vec::new();
    let mut cur: Option<OrbitSpec> = None;
    let mut has_char = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match kw {
            "orbit" => {
                if cur.is_some() {
                    return Err(err("`orbit` before `end` of the previous orbit".into()));
                }
                let (ty, label) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err("expected `orbit TYPE \"label\"`".into()))?;
                let label = label.trim();
                if label.len() < 2 || !label.starts_with('"') || !label.ends_with('"') {
                    return Err(err("orbit label must be double-quoted".into()));
                }
                let ct: CartanType = ty.parse().map_err(|e: Error| err(e.to_string()))?;
                cur = Some(OrbitSpec {
                    cartan_type: ct,
                    label: label[1..label.len() - 1].to_string(),
                    characteristic: Vec::new(),
                    e_terms: Vec::new(),
                    line,
                });
                has_char = false;
            }
            "char" => {
                let o = cur.as_mut().ok_or_else(|| err("`char` outside an orbit block".into()))?;
                if has_char {
                    return Err(err("duplicate `char` line".into()));
                }
                let v: std::result::Result<Vec<i64>, _> = rest.split_whitespace().map(str::parse).collect();
                let v = v.map_err(|_| err("characteristic entries must be integers".into()))?;
                if v.len() != o.cartan_type.rank {
                    return Err(err(format!(
                        "characteristic has {} entries, rank of {} is {}",
                        v.len(),
                        o.cartan_type,
                        o.cartan_type.rank
                    )));
                }
                o.characteristic = v;
                has_char = true;
            }
            "e" => {
                let o = cur.as_mut().ok_or_else(|| err("`e` outside an orbit block".into()))?;
                let rest =
                    rest.strip_prefix('+').ok_or_else(|| err("expected `e + c1,...,cl [* coeff]`".into()))?.trim();
                let (vec_part, coeff) = match rest.split_once('*') {
                    Some((v, c)) => {
                        let c: Rational =
                            c.trim().parse().map_err(|_| err(format!("bad coefficient '{}'", c.trim())))?;
                        (v.trim(), c)
                    }
                    None => (rest, Rational::one()),
                };
                let vec_part = vec_part.trim_start_matches(['<', '(', '[']).trim_end_matches(['>', ')', ']']);
                let v: std::result::Result<Vec<i64>, _> = vec_part.split(',').map(|s| s.trim().parse()).collect();
                let v = v.map_err(|_| err(format!("bad root vector '{vec_part}'")))?;
                if v.len() != o.cartan_type.rank {
                    return Err(err(format!("root vector has {} entries, expected {}", v.len(), o.cartan_type.rank)));
                }
                if coeff.is_zero() {
                    return Err(err("zero coefficient".into()));
                }
                o.e_terms.push((v, coeff));
            }
            "end" => {
                let o = cur.take().ok_or_else(|| err("`end` without `orbit`".into()))?;
                if !has_char {
                    return Err(err(format!("orbit \"{}\" has no `char` line", o.label)));
                }
                if o.e_terms.is_empty() {
                    return Err(err(format!("orbit \"{}\" has no `e` terms", o.label)));
                }
                out.push(o);
            }
            other => return Err(err(format!("unknown keyword '{other}'"))),
        }
    }
    if let Some(o) = cur {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("orbit \"{}\" is missing `end`", o.label),
        });
    }
    Ok(out)
}

/// A validated catalog orbit.
#[derive(Clone, Debug)]
pub struct CatalogOrbit {
    pub spec: OrbitSpec,
    /// 1-based position among the orbits of its type, in file order.
    pub index: usize,
    pub algebra: Arc<SimpleLie>,
    pub triple: Sl2Triple,
}

impl CatalogOrbit {
    pub fn id(&self) -> String {
        format!("{}:{}", self.spec.cartan_type, self.index)
    }
}

/// Shared algebras, one per type.
#[derive(Default)]
pub struct AlgebraCache {
    map: BTreeMap<CartanType, Arc<SimpleLie>>,
}

impl AlgebraCache {
    pub fn get(&mut self, ct: CartanType) -> Result<Arc<SimpleLie>> {
        if let Some(g) = self.map.get(&ct) {
            return Ok(g.clone());
        }
        let g = Arc::new(build(ct)?);
        self.map.insert(ct, g.clone());
        Ok(g)
    }
}

/// Validate one spec: e nilpotent, triple completed, characteristic matches.
pub fn validate_orbit(spec: &OrbitSpec, g: &SimpleLie) -> Result<Sl2Triple> {
    let wrap = |e: Error| Error::DataIntegrity(format!("orbit \"{}\" (line {}): {e}", spec.label, spec.line));
    let e = spec.nilpotent(g).map_err(wrap)?;
    let t = jacobson_morozov(&g.algebra, &e).map_err(wrap)?;
    let ch = g.weighted_dynkin(&t.h).map_err(wrap)?;
    if ch != spec.characteristic {
        return Err(Error::DataIntegrity(format!(
            "orbit \"{}\" (line {}): computed characteristic {:?} differs from stored {:?}",
            spec.label, spec.line, ch, spec.characteristic
        )));
    }
    Ok(t)
}

/// Parse and validate every orbit.
pub fn load_catalog(text: &str) -> Result<Vec<CatalogOrbit>> {
    let specs = parse_catalog(text)?;
    let mut cache = AlgebraCache::default();
    let mut counts: BTreeMap<CartanType, usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(specs.len());
    for spec in specs {
        let g = cache.get(spec.cartan_type)?;
        let triple = validate_orbit(&spec, &g)?;
        let c = counts.entry(spec.cartan_type).or_default();
        *c += 1;
        out.push(CatalogOrbit { index: *c, spec, algebra: g, triple });
    }
    Ok(out)
}

/// Find an orbit by `TYPE:index`, `TYPE:subregular` or its label
/// (case-insensitive).
pub fn find_orbit<'a>(orbits: &'a [CatalogOrbit], key: &str) -> Option<&'a CatalogOrbit> {
    let key = key.trim();
    if let Some((ty, sel)) = key.split_once(':') {
        let ct: CartanType = ty.parse().ok()?;
        let idx = if sel.eq_ignore_ascii_case("subregular") { 1 } else { sel.parse().ok()? };
        return orbits.iter().find(|o| o.spec.cartan_type == ct && o.index == idx);
    }
    orbits.iter().find(|o| o.spec.label.eq_ignore_ascii_case(key))
}
