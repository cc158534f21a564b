use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::coeff::{Coeff, Rational};
use super::monomial::{Monomial, VarId};
use super::order::OrderSpec;
use super::PolyError;

/// A coefficient together with its monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term<C = Rational> {
    pub coeff: C,
    pub mono: Monomial,
}

impl<C: Coeff> Term<C> {
    pub fn new(coeff: C, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Sparse polynomial in canonical form: a map from monomial to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<C = Rational> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Renders variable names for polynomial text.
pub trait VarNames {
    fn var_name(&self, v: VarId) -> String;
}

impl<F: Fn(VarId) -> String> VarNames for F {
    fn var_name(&self, v: VarId) -> String {
        self(v)
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn from_term(t: Term<C>) -> Self {
        let mut p = Self::zero();
        p.add_term(t.coeff, t.mono);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (C, Monomial)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Adds `c·m` in place, keeping the canonical form.
    pub fn add_term(&mut self, c: C, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.neg(), m.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    /// Multiplication by the term `c·m`.
    pub fn scale(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc.mul(c))).collect() }
    }

    pub fn scale_term(&self, t: &Term<C>) -> Self {
        self.scale(&t.coeff, &t.mono)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ca.mul(cb), ma.mul(mb));
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (f(c), m.clone())))
    }

    pub fn max_var(&self) -> Option<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).max()
    }

    pub fn leading_term(&self, ord: &OrderSpec) -> Result<Term<C>, PolyError> {
        let mut best: Option<(&Monomial, &C)> = None;
        for (m, c) in &self.terms {
            if !ord.is_ranked(m) {
                let v = m.vars().find(|v| v.index() >= ord.nvars()).expect("unranked var");
                return Err(PolyError::UnrankedVariable(v));
            }
            best = match best {
                Some((bm, _)) if ord.cmp_ranked(m, bm) != Ordering::Greater => best,
                _ => Some((m, c)),
            };
        }
        best.map(|(m, c)| Term::new(c.clone(), m.clone())).ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &OrderSpec) -> Result<Monomial, PolyError> {
        self.leading_term(ord).map(|t| t.mono)
    }

    /// Terms sorted strictly decreasing under `ord`.
    pub fn sorted_terms(&self, ord: &OrderSpec) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp_ranked(b.0, a.0));
        v
    }

    /// Canonical text: terms strictly decreasing, each `{+|-}{|c|*}var*var…`.
    pub fn render(&self, ord: &OrderSpec, names: &dyn VarNames) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.sorted_terms(ord) {
            let (neg, mag) = c.sign_magnitude();
            out.push(if neg { '-' } else { '+' });
            let factors = render_monomial(m, names);
            if m.is_one() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    let _ = write!(out, "{mag}*");
                }
                out.push_str(&factors);
            }
        }
        out
    }
}

/// `var*var^2*…`, or `1` for the empty monomial.
pub fn render_monomial(m: &Monomial, names: &dyn VarNames) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut s = String::new();
    for (i, &(v, e)) in m.pairs().iter().enumerate() {
        if i > 0 {
            s.push('*');
        }
        s.push_str(&names.var_name(v));
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    s
}

impl Polynomial<Rational> {
    pub fn constant(n: i64) -> Self {
        Self::from_terms([(Rational::from_integer(BigInt::from(n)), Monomial::one())])
    }

    pub fn var(v: VarId) -> Self {
        Self::from_terms([(Rational::from_integer(BigInt::from(1)), Monomial::var(v))])
    }

    pub fn monomial(sign: i64, m: Monomial) -> Self {
        Self::from_terms([(Rational::from_integer(BigInt::from(sign)), m)])
    }
}

/// Parses the canonical text rendering back into a polynomial.
/// `resolve` maps a variable name such as `x[1,2,1]` to its id.
pub fn parse_polynomial(text: &str, resolve: &dyn Fn(&str) -> Option<VarId>) -> Result<Polynomial, PolyError> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |msg: &str| PolyError::Parse(format!("{msg} in `{text}`"));
    if s.is_empty() {
        return Err(bad("empty polynomial"));
    }
    if s == ['0'] {
        return Ok(Polynomial::zero());
    }
    let mut p = Polynomial::zero();
    let mut i = 0;
    while i < s.len() {
        let mut coeff = Rational::from_integer(BigInt::from(1));
        match s[i] {
            '+' => i += 1,
            '-' => {
                coeff = -coeff;
                i += 1;
            }
            _ if i == 0 => {}
            _ => return Err(bad("expected sign")),
        }
        let mut mono = Monomial::one();
        loop {
            if i >= s.len() {
                return Err(bad("dangling operator"));
            }
            if s[i].is_ascii_digit() {
                let start = i;
                while i < s.len() && (s[i].is_ascii_digit() || s[i] == '/') {
                    i += 1;
                }
                let lit: String = s[start..i].iter().collect();
                let q: Rational = lit.parse().map_err(|_| bad("bad coefficient"))?;
                if Coeff::is_zero(&q) {
                    return Err(bad("zero coefficient"));
                }
                coeff *= q;
            } else {
                let start = i;
                let mut depth = 0;
                while i < s.len() {
                    match s[i] {
                        '[' => depth += 1,
                        ']' => depth -= 1,
                        '*' | '+' | '-' | '^' if depth == 0 => break,
                        _ => {}
                    }
                    i += 1;
                }
                let name: String = s[start..i].iter().collect();
                let v = resolve(&name).ok_or_else(|| bad(&format!("unknown variable `{name}`")))?;
                let mut e = 1u32;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let st = i;
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    let lit: String = s[st..i].iter().collect();
                    e = lit.parse().map_err(|_| bad("bad exponent"))?;
                }
                mono = mono.mul(&Monomial::from_pairs([(v, e)]));
            }
            if i < s.len() && s[i] == '*' {
                i += 1;
                continue;
            }
            break;
        }
        p.add_term(coeff, mono);
    }
    Ok(p)
}

impl<C: Coeff> std::ops::Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        Polynomial::add(self, rhs)
    }
}

impl<C: Coeff> std::ops::Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        Polynomial::sub(self, rhs)
    }
}

impl<C: Coeff> std::ops::Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        Polynomial::mul(self, rhs)
    }
}

impl<C: Coeff> std::ops::Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

impl<'a, C: Coeff> std::ops::AddAssign<&'a Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &'a Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}
