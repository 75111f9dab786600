use std::collections::BTreeMap;
use std::fmt;

use super::Rational;
use crate::Error;

pub const MAX_VARS: usize = 4;

/// Multivariate polynomial over ℚ in at most four named variables.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(vars: &[&str]) -> Self {
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Poly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    /// The variable `vars[i]`.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, Rational::one());
        p
    }

    /// Linear form Σ c_i · vars[i].
    pub fn linear(vars: &[&str], coeffs: &[Rational]) -> Self {
        assert_eq!(vars.len(), coeffs.len());
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    fn like(&self) -> Self {
        Poly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        let cancelled = {
            let e = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
            *e += &c;
            e.is_zero()
        };
        if cancelled {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&vec![0; self.vars.len()]).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        assert_eq!(self.vars, o.vars, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = self.like();
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        assert_eq!(self.vars, o.vars, "variable mismatch");
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += &(c1 * c2);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Poly { vars: self.vars.clone(), terms: acc }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Coefficients of the univariate polynomial obtained by putting
    /// `vars[keep] = t` and every other variable to the given values.
    pub fn restrict_univariate(&self, keep: usize, others: &[Rational]) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if i != keep && k > 0 {
                    t = &t * &others[i].pow(k);
                }
            }
            let d = e[keep] as usize;
            if out.len() <= d {
                out.resize(d + 1, Rational::zero());
            }
            out[d] += &t;
        }
        trim(&mut out);
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

/// Remainder of `a` modulo `b` (dense coefficient vectors, low degree first).
pub fn uni_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let lead = b.last().unwrap().recip();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() * &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub_mul(&f, c);
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd of univariate polynomials; empty vector for gcd(0, 0).
pub fn uni_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = uni_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        let inv = l.recip();
        for c in x.iter_mut() {
            *c = &*c * &inv;
        }
    }
    x
}

/// Greatest common divisor of homogeneous forms in two variables, up to a
/// scalar. The result is constant exactly when the forms share no
/// projective root.
pub fn poly_gcd_binary(forms: &[Poly]) -> Result<Poly, Error> {
    let nz: Vec<&Poly> = forms.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = nz.first() else {
        return Err(Error::Input("gcd of an empty or all-zero family of forms".into()));
    };
    if first.nvars() != 2 {
        return Err(Error::Input("binary gcd needs forms in exactly two variables".into()));
    }
    let names: Vec<&str> = first.vars().iter().map(String::as_str).collect();
    let mut g: Vec<Rational> = Vec::new();
    let mut min_y = u32::MAX;
    for p in &nz {
        if p.vars() != first.vars() || !p.is_homogeneous() {
            return Err(Error::Input("binary gcd needs homogeneous forms in the same two variables".into()));
        }
        // f(x, y) = y^a · homog(f(t, 1)), with a the least power of y
        let a = p.terms().map(|(e, _)| e[1]).min().unwrap();
        min_y = min_y.min(a);
        let u = p.restrict_univariate(0, &[Rational::zero(), Rational::one()]);
        g = if g.is_empty() { uni_gcd(&u, &[]) } else { uni_gcd(&g, &u) };
    }
    let deg = g.len().saturating_sub(1) as u32;
    let mut out = Poly::zero(&names);
    for (i, c) in g.iter().enumerate() {
        out.add_term(vec![i as u32, deg - i as u32 + min_y], c.clone());
    }
    Ok(out)
}

/// Exact division of binary forms, used to check that a gcd divides its inputs.
pub fn divides_binary(d: &Poly, p: &Poly) -> bool {
    if p.is_zero() {
        return true;
    }
    if d.is_zero() {
        return false;
    }
    let dy = d.terms().map(|(e, _)| e[1]).min().unwrap();
    let py = p.terms().map(|(e, _)| e[1]).min().unwrap();
    if dy > py {
        return false;
    }
    let one = [Rational::zero(), Rational::one()];
    let du = d.restrict_univariate(0, &one);
    let pu = p.restrict_univariate(0, &one);
    uni_rem(&pu, &du).is_empty()
}
