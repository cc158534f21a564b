//! Dense tensors over exact rationals or polynomials: contraction, scans and
//! flattenings, the comparison of double and triple determinantal ideals,
//! and generators of independence ideals.
//!
//! Axes are 0-based in this API; the file and statement formats are 1-based.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::groebner::{ideal_membership, GroebnerBasis};
use crate::minors::{det_poly_matrix, natural_generators, Generator};
use crate::poly::{Monomial, Polynomial, Rational, VarId, VarNames};
use crate::quiver::{LatticePoint, Layout};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("axis {0} is out of range for arity {1}")]
    Axis(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Precondition(String),
}

/// Tensor entries: rationals, or polynomials for symbolic tensors.
pub trait Entry: Clone + PartialEq {
    fn zero() -> Self;
    fn accumulate(&mut self, other: &Self);
}

impl Entry for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl Entry for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

/// Row-major storage, last index fastest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor<T = Rational> {
    shape: Vec<usize>,
    values: Vec<T>,
}

fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for i in (0..shape.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * shape[i + 1];
    }
    s
}

/// All index tuples of `shape` in row-major order.
pub fn index_tuples(shape: &[usize]) -> Box<dyn Iterator<Item = Vec<usize>>> {
    if shape.is_empty() {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(shape.iter().copied().map(|a| 0..a).multi_cartesian_product())
    }
}

impl<T: Entry> Tensor<T> {
    pub fn new(shape: Vec<usize>, values: Vec<T>) -> Result<Self, TensorError> {
        if shape.contains(&0) {
            return Err(TensorError::Shape("every dimension must be positive".into()));
        }
        let size: usize = shape.iter().product();
        if values.len() != size {
            return Err(TensorError::Shape(format!("shape needs {size} values, got {}", values.len())));
        }
        Ok(Tensor { shape, values })
    }

    pub fn from_fn(shape: Vec<usize>, f: impl Fn(&[usize]) -> T) -> Result<Self, TensorError> {
        let values = index_tuples(&shape).map(|ix| f(&ix)).collect();
        Self::new(shape, values)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn arity(&self) -> usize {
        self.shape.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, ix: &[usize]) -> &T {
        let off: usize = ix.iter().zip(strides(&self.shape)).map(|(i, s)| i * s).sum();
        &self.values[off]
    }

    fn check_axis(&self, axis: usize) -> Result<(), TensorError> {
        if axis < self.arity() {
            Ok(())
        } else {
            Err(TensorError::Axis(axis, self.arity()))
        }
    }

    /// Sum over the axes in `axes`; the remaining axes keep their order.
    pub fn contraction(&self, axes: &[usize]) -> Result<Tensor<T>, TensorError> {
        let drop: BTreeSet<usize> = axes.iter().copied().collect();
        if drop.len() != axes.len() {
            return Err(TensorError::Shape("contraction axes must be distinct".into()));
        }
        for &a in &drop {
            self.check_axis(a)?;
        }
        let keep: Vec<usize> = (0..self.arity()).filter(|a| !drop.contains(a)).collect();
        let shape: Vec<usize> = keep.iter().map(|&a| self.shape[a]).collect();
        let st = strides(&shape);
        let mut values = vec![T::zero(); shape.iter().product()];
        for (ix, v) in index_tuples(&self.shape).zip(&self.values) {
            let off: usize = keep.iter().zip(&st).map(|(&a, s)| ix[a] * s).sum();
            values[off].accumulate(v);
        }
        Ok(Tensor { shape, values })
    }

    /// The slices with index `axis` fixed, in index order.
    pub fn scan(&self, axis: usize) -> Result<Vec<Tensor<T>>, TensorError> {
        self.check_axis(axis)?;
        let mut shape = self.shape.clone();
        shape.remove(axis);
        Ok((0..self.shape[axis])
            .map(|c| {
                let values = index_tuples(&shape)
                    .map(|mut ix| {
                        ix.insert(axis, c);
                        self.get(&ix).clone()
                    })
                    .collect();
                Tensor { shape: shape.clone(), values }
            })
            .collect())
    }

    /// Rows indexed by `axis`; columns by the other indices, later axes more significant.
    pub fn flatten(&self, axis: usize) -> Result<Vec<Vec<T>>, TensorError> {
        self.check_axis(axis)?;
        let rest: Vec<usize> = (0..self.arity()).filter(|&a| a != axis).collect();
        let rest_shape: Vec<usize> = rest.iter().rev().map(|&a| self.shape[a]).collect();
        Ok((0..self.shape[axis])
            .map(|i| {
                index_tuples(&rest_shape)
                    .map(|rev_ix| {
                        let mut ix = vec![0; self.arity()];
                        ix[axis] = i;
                        for (&a, &v) in rest.iter().rev().zip(&rev_ix) {
                            ix[a] = v;
                        }
                        self.get(&ix).clone()
                    })
                    .collect()
            })
            .collect())
    }

    /// The arity-2 tensor as a matrix.
    pub fn as_matrix(&self) -> Option<Vec<Vec<T>>> {
        (self.arity() == 2).then(|| self.values.chunks(self.shape[1]).map(<[T]>::to_vec).collect())
    }
}

impl Tensor<Rational> {
    pub fn parse(text: &str) -> Result<Self, TensorError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (n0, head) = lines.next().ok_or(TensorError::Parse { line: 1, message: "empty tensor file".into() })?;
        let mut words = head.split_whitespace();
        if words.next() != Some("shape") {
            return Err(TensorError::Parse { line: n0 + 1, message: "expected 'shape a1 a2 ...'".into() });
        }
        let shape = words
            .map(|w| w.parse::<usize>().map_err(|_| TensorError::Parse { line: n0 + 1, message: format!("bad dimension '{w}'") }))
            .collect::<Result<Vec<_>, _>>()?;
        let mut values = Vec::new();
        for (n, line) in lines {
            for w in line.split_whitespace() {
                let v = w.parse::<Rational>().map_err(|_| TensorError::Parse { line: n + 1, message: format!("bad rational '{w}'") })?;
                values.push(v);
            }
        }
        Self::new(shape, values)
    }

    /// Inverse of [`Tensor::parse`]; one line per last-axis fibre.
    pub fn render(&self) -> String {
        let mut out = format!("shape {}\n", self.shape.iter().join(" "));
        let width = self.shape.last().copied().unwrap_or(1);
        for chunk in self.values.chunks(width) {
            let _ = writeln!(out, "{}", chunk.iter().join(" "));
        }
        out
    }
}

/// Exact rank by fraction-free row reduction over the rationals.
pub fn matrix_rank(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &pivot;
                for k in c..cols {
                    let d = &f * &a[rank][k];
                    a[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn render_matrix<T: std::fmt::Display>(m: &[Vec<T>]) -> String {
    format!("[{}]", m.iter().map(|r| format!("[{}]", r.iter().join(","))).join(","))
}

/// The two-vertex layout with `r` pages and minor sizes `u`, `v`, and its generators.
pub fn double_det_generators(m: usize, n: usize, r: usize, u: usize, v: usize) -> (Layout, Vec<Generator>) {
    let layout = Layout::double_determinantal(m, n, r, u, v);
    let gens = natural_generators(&layout);
    (layout, gens)
}

/// Symbolic tensor of the double determinantal variables, `x[i,j,k]` at index `(i,j,k)`.
pub fn lattice_tensor(layout: &Layout, m: usize, n: usize, r: usize) -> Tensor<Polynomial> {
    Tensor::from_fn(vec![m, n, r], |ix| {
        Polynomial::var(layout.var_at(LatticePoint { row: ix[0], col: ix[1], page: ix[2] }).expect("lattice point"))
    })
    .expect("positive shape")
}

fn eval(p: &Polynomial, point: &dyn Fn(VarId) -> Rational) -> Rational {
    let mut acc = <Rational as Zero>::zero();
    for (mono, c) in p.terms() {
        let mut t = c.clone();
        for &(v, e) in mono.pairs() {
            for _ in 0..e {
                t *= point(v);
            }
        }
        acc += t;
    }
    acc
}

/// Witness tensor together with its three flattening ranks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub tensor: Tensor,
    pub ranks: [usize; 3],
}

fn check_shape(m: usize, n: usize, r: usize, u: usize, v: usize, w: usize) -> Result<(), TensorError> {
    let ok = (2..=m.min(r * n)).contains(&u) && (2..=n.min(m * r)).contains(&v) && (2..=r.min(m * n)).contains(&w);
    if ok {
        Ok(())
    } else {
        Err(TensorError::Precondition(format!(
            "need 2 <= u <= min(m, rn), 2 <= v <= min(n, mr), 2 <= w <= min(r, mn); got m={m} n={n} r={r} u={u} v={v} w={w}"
        )))
    }
}

/// A point of the double determinantal variety outside the triple one, when
/// `(u-1)(v-1) > w-1`. Entries whose page index exceeds `r` are dropped.
pub fn witness_tensor(m: usize, n: usize, r: usize, u: usize, v: usize, w: usize) -> Result<Witness, TensorError> {
    check_shape(m, n, r, u, v, w)?;
    if (u - 1) * (v - 1) < w {
        return Err(TensorError::Precondition(format!("(u-1)(v-1) = {} <= w-1 = {}: no witness exists", (u - 1) * (v - 1), w - 1)));
    }
    let tensor = Tensor::from_fn(vec![m, n, r], |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        if i < u - 1 && j < v - 1 && k == i * (v - 1) + j {
            Rational::one()
        } else {
            <Rational as Zero>::zero()
        }
    })?;
    let ranks = [0, 1, 2].map(|a| matrix_rank(&tensor.flatten(a).expect("axis")));
    assert!(ranks[0] < u && ranks[1] < v, "witness leaves the double determinantal variety");
    assert_eq!(ranks[2], ((u - 1) * (v - 1)).min(r));
    assert!(ranks[2] > w - 1);
    Ok(Witness { tensor, ranks })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Evidence {
    /// Every `w`-minor of the third flattening reduced to zero (or not).
    Reductions { minors: usize, nonzero: usize },
    /// The witness lies on every double determinantal generator and off the triple variety.
    Witness { witness: Witness, generators_vanish: bool },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleEqReport {
    pub predicted: bool,
    pub verified: bool,
    pub evidence: Evidence,
}

impl TripleEqReport {
    pub fn summary(&self) -> String {
        let ev = match &self.evidence {
            Evidence::Reductions { minors, nonzero } => format!("{minors} minors of flattening 3 checked, {nonzero} nonzero remainders"),
            Evidence::Witness { witness, generators_vanish } => format!(
                "witness flattening ranks ({},{},{}), double determinantal generators vanish: {}",
                witness.ranks[0], witness.ranks[1], witness.ranks[2], generators_vanish
            ),
        };
        format!("predicted equal: {}; verified: {}; {ev}", self.predicted, self.verified)
    }
}

/// Decides whether the double and triple determinantal ideals coincide and checks the answer.
pub fn triple_eq_check(m: usize, n: usize, r: usize, u: usize, v: usize, w: usize) -> Result<TripleEqReport, TensorError> {
    check_shape(m, n, r, u, v, w)?;
    let predicted = (u - 1) * (v - 1) < w;
    let (layout, gens) = double_det_generators(m, n, r, u, v);
    if predicted {
        let polys: Vec<Polynomial> = gens.into_iter().map(|g| g.poly).collect();
        let ord = layout.default_order();
        let basis = GroebnerBasis::verify(&polys, &ord).map_err(|rep| TensorError::Precondition(format!("generators are not a Groebner basis: {}", rep.summary())))?;
        let third = lattice_tensor(&layout, m, n, r).flatten(2).expect("axis");
        let mut checked = 0;
        let mut nonzero = 0;
        for rows in (0..third.len()).combinations(w) {
            for cols in (0..third[0].len()).combinations(w) {
                let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&a| cols.iter().map(|&b| third[a][b].clone()).collect()).collect();
                checked += 1;
                if !ideal_membership(&det_poly_matrix(&sub), &basis) {
                    nonzero += 1;
                }
            }
        }
        Ok(TripleEqReport { predicted, verified: nonzero == 0, evidence: Evidence::Reductions { minors: checked, nonzero } })
    } else {
        let witness = witness_tensor(m, n, r, u, v, w)?;
        let at = |x: VarId| {
            let p = layout.point(x);
            witness.tensor.get(&[p.row, p.col, p.page]).clone()
        };
        let generators_vanish = gens.iter().all(|g| eval(&g.poly, &at).is_zero());
        let verified = generators_vanish && witness.ranks[2] > w - 1;
        Ok(TripleEqReport { predicted, verified, evidence: Evidence::Witness { witness, generators_vanish } })
    }
}

/// Variables `p[i1,…,in]` of a probability tensor, numbered in row-major order.
#[derive(Clone, Debug)]
pub struct TensorVars {
    shape: Vec<usize>,
}

impl TensorVars {
    pub fn new(shape: Vec<usize>) -> Self {
        TensorVars { shape }
    }

    pub fn nvars(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn tensor(&self) -> Tensor<Polynomial> {
        let st = strides(&self.shape);
        Tensor::from_fn(self.shape.clone(), |ix| {
            Polynomial::var(VarId(ix.iter().zip(&st).map(|(i, s)| i * s).sum::<usize>() as u32))
        })
        .expect("positive shape")
    }

    pub fn index_of(&self, v: VarId) -> Vec<usize> {
        let mut rest = v.index();
        let mut ix = vec![0; self.shape.len()];
        for (slot, s) in ix.iter_mut().zip(strides(&self.shape)) {
            *slot = rest / s;
            rest %= s;
        }
        ix
    }

    pub fn by_name(&self, name: &str) -> Option<VarId> {
        let inner = name.strip_prefix("p[")?.strip_suffix(']')?;
        let ix: Vec<usize> = inner.split(',').map(|s| s.trim().parse::<usize>().ok()?.checked_sub(1)).collect::<Option<_>>()?;
        if ix.len() != self.shape.len() || ix.iter().zip(&self.shape).any(|(i, a)| i >= a) {
            return None;
        }
        Some(VarId(ix.iter().zip(strides(&self.shape)).map(|(i, s)| i * s).sum::<usize>() as u32))
    }
}

impl VarNames for TensorVars {
    fn var_name(&self, v: VarId) -> String {
        format!("p[{}]", self.index_of(v).iter().map(|i| i + 1).join(","))
    }
}

/// `p` with every variable renamed by `f`.
pub fn relabel(p: &Polynomial, f: impl Fn(VarId) -> VarId) -> Polynomial {
    Polynomial::from_terms(p.terms().map(|(m, c)| (c.clone(), Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (f(v), e))))))
}

/// `p` or `-p`, whichever has a positive coefficient on its least monomial.
pub fn up_to_sign(p: &Polynomial) -> Polynomial {
    match p.terms().next() {
        Some((_, c)) if c < &<Rational as Zero>::zero() => p.neg(),
        _ => p.clone(),
    }
}

/// Independence statements; axes are 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndepStatement {
    /// `a_b`: axes `a` and `b` independent after summing out the rest.
    Marginal(usize, usize),
    /// `a|rest`: axis `a` independent of all other axes jointly.
    Saturated(usize),
    /// `a_b|c`: `a` and `b` independent given `c`.
    Conditional(usize, usize, usize),
    /// `a|rest:s`: dependence of `a` on the rest explained by `s` hidden states.
    Hidden(usize, usize),
}

impl IndepStatement {
    pub fn parse(s: &str) -> Result<Self, TensorError> {
        let bad = || TensorError::Parse { line: 1, message: format!("bad statement '{s}'") };
        let axis = |t: &str| t.trim().parse::<usize>().ok().and_then(|a| a.checked_sub(1)).ok_or_else(bad);
        if let Some((lhs, rhs)) = s.split_once('|') {
            let rhs = rhs.trim();
            if let Some(states) = rhs.strip_prefix("rest:") {
                let k = states.trim().parse::<usize>().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                return Ok(IndepStatement::Hidden(axis(lhs)?, k));
            }
            if rhs == "rest" {
                return Ok(IndepStatement::Saturated(axis(lhs)?));
            }
            let (a, b) = lhs.split_once('_').ok_or_else(bad)?;
            return Ok(IndepStatement::Conditional(axis(a)?, axis(b)?, axis(rhs)?));
        }
        let (a, b) = s.split_once('_').ok_or_else(bad)?;
        Ok(IndepStatement::Marginal(axis(a)?, axis(b)?))
    }

    fn axes(&self) -> Vec<usize> {
        match *self {
            IndepStatement::Marginal(a, b) => vec![a, b],
            IndepStatement::Saturated(a) | IndepStatement::Hidden(a, _) => vec![a],
            IndepStatement::Conditional(a, b, c) => vec![a, b, c],
        }
    }
}

impl std::fmt::Display for IndepStatement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            IndepStatement::Marginal(a, b) => write!(f, "{}_{}", a + 1, b + 1),
            IndepStatement::Saturated(a) => write!(f, "{}|rest", a + 1),
            IndepStatement::Conditional(a, b, c) => write!(f, "{}_{}|{}", a + 1, b + 1, c + 1),
            IndepStatement::Hidden(a, s) => write!(f, "{}|rest:{}", a + 1, s),
        }
    }
}

fn minors_of(m: &[Vec<Polynomial>], size: usize, out: &mut Vec<Polynomial>) {
    if m.is_empty() || size > m.len() || size > m[0].len() {
        return;
    }
    for rows in (0..m.len()).combinations(size) {
        for cols in (0..m[0].len()).combinations(size) {
            let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&a| cols.iter().map(|&b| m[a][b].clone()).collect()).collect();
            out.push(det_poly_matrix(&sub));
        }
    }
}

/// The `(a, b)` matrix left after summing out every other axis of `x`.
fn pair_matrix(x: &Tensor<Polynomial>, a: usize, b: usize) -> Vec<Vec<Polynomial>> {
    let others: Vec<usize> = (0..x.arity()).filter(|&k| k != a && k != b).collect();
    let c = x.contraction(&others).expect("valid axes");
    let mat = c.as_matrix().expect("two axes remain");
    if a < b {
        mat
    } else {
        (0..mat[0].len()).map(|j| mat.iter().map(|row| row[j].clone()).collect()).collect()
    }
}

/// Generators of the ideal of all statements, zeros and duplicates removed, in order.
pub fn independence_ideal(shape: &[usize], statements: &[IndepStatement]) -> Result<Vec<Polynomial>, TensorError> {
    let vars = TensorVars::new(shape.to_vec());
    let x = vars.tensor();
    let mut raw = Vec::new();
    for st in statements {
        let axes = st.axes();
        if axes.iter().collect::<BTreeSet<_>>().len() != axes.len() {
            return Err(TensorError::Shape(format!("statement {st} repeats an axis")));
        }
        if let Some(&a) = axes.iter().find(|&&a| a >= shape.len()) {
            return Err(TensorError::Axis(a, shape.len()));
        }
        match *st {
            IndepStatement::Marginal(a, b) => minors_of(&pair_matrix(&x, a, b), 2, &mut raw),
            IndepStatement::Saturated(a) => minors_of(&x.flatten(a)?, 2, &mut raw),
            IndepStatement::Hidden(a, s) => minors_of(&x.flatten(a)?, s + 1, &mut raw),
            IndepStatement::Conditional(a, b, c) => {
                let shift = |k: usize| if k > c { k - 1 } else { k };
                for slice in x.scan(c)? {
                    minors_of(&pair_matrix(&slice, shift(a), shift(b)), 2, &mut raw);
                }
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in raw {
        if !p.is_zero() && seen.insert(up_to_sign(&p).terms().map(|(m, c)| (m.clone(), c.clone())).collect::<Vec<_>>()) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    /// `x_{ijk} = (i-1) + 2(j-1) + 4(k-1)`.
    fn tensorex() -> Tensor {
        Tensor::from_fn(vec![2, 2, 2], |ix| q((ix[0] + 2 * ix[1] + 4 * ix[2]) as i64)).unwrap()
    }

    #[test]
    fn file_order_and_round_trip() {
        let x = tensorex();
        assert_eq!(x.values(), &[0, 4, 2, 6, 1, 5, 3, 7].map(q));
        assert_eq!(Tensor::parse(&x.render()).unwrap(), x);
        assert!(matches!(Tensor::parse("shape 2 2\n1 2 3\n"), Err(TensorError::Shape(_))));
        assert!(matches!(Tensor::parse("shape 2\n1 x\n"), Err(TensorError::Parse { line: 2, .. })));
    }

    #[test]
    fn contractions() {
        let x = tensorex();
        assert_eq!(x.contraction(&[1]).unwrap().as_matrix().unwrap(), mat(&[&[2, 10], &[4, 12]]));
        assert_eq!(x.contraction(&[2]).unwrap().as_matrix().unwrap(), mat(&[&[4, 8], &[6, 10]]));
        assert_eq!(x.contraction(&[1, 2]).unwrap().values(), &[q(12), q(16)]);
        assert_eq!(x.contraction(&[0, 1, 2]).unwrap().values(), &[q(28)]);
        assert_eq!(x.contraction(&[3]), Err(TensorError::Axis(3, 3)));
    }

    #[test]
    fn scans_and_flattenings() {
        let x = tensorex();
        let s3: Vec<_> = x.scan(2).unwrap().iter().map(|t| t.as_matrix().unwrap()).collect();
        assert_eq!(s3, vec![mat(&[&[0, 2], &[1, 3]]), mat(&[&[4, 6], &[5, 7]])]);
        let s1: Vec<_> = x.scan(0).unwrap().iter().map(|t| t.as_matrix().unwrap()).collect();
        assert_eq!(s1, vec![mat(&[&[0, 4], &[2, 6]]), mat(&[&[1, 5], &[3, 7]])]);
        assert_eq!(x.flatten(0).unwrap(), mat(&[&[0, 2, 4, 6], &[1, 3, 5, 7]]));
        assert_eq!(x.flatten(1).unwrap(), mat(&[&[0, 1, 4, 5], &[2, 3, 6, 7]]));
        let m2 = Tensor::new(vec![2, 3], (0..6).map(q).collect()).unwrap();
        assert_eq!(m2.flatten(0).unwrap(), m2.as_matrix().unwrap());
    }

    #[test]
    fn ranks() {
        assert_eq!(matrix_rank(&mat(&[&[2, 10], &[4, 12]])), 2);
        assert_eq!(matrix_rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(matrix_rank(&mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
    }

    #[test]
    fn witnesses() {
        let w = witness_tensor(2, 3, 2, 2, 3, 2).unwrap();
        let ones: Vec<Vec<usize>> = index_tuples(&[2, 3, 2]).filter(|ix| !w.tensor.get(ix).is_zero()).collect();
        assert_eq!(ones, vec![vec![0, 0, 0], vec![0, 1, 1]]);
        assert_eq!(w.ranks, [1, 2, 2]);
        let w = witness_tensor(3, 3, 4, 3, 3, 4).unwrap();
        assert_eq!(w.tensor.values().iter().filter(|v| !v.is_zero()).count(), 4);
        assert_eq!(w.ranks[2], 4);
        assert!(matches!(witness_tensor(2, 2, 2, 2, 2, 2), Err(TensorError::Precondition(_))));
    }

    #[test]
    fn triple_equality() {
        let eq = triple_eq_check(2, 2, 2, 2, 2, 2).unwrap();
        assert!(eq.predicted && eq.verified);
        assert_eq!(eq.evidence, Evidence::Reductions { minors: 6, nonzero: 0 });
        let ne = triple_eq_check(2, 3, 2, 2, 3, 2).unwrap();
        assert!(!ne.predicted && ne.verified);
        assert!(triple_eq_check(2, 2, 2, 3, 2, 2).is_err());
    }

    #[test]
    fn statements_parse() {
        for s in ["1_2", "1|rest", "1_2|3", "2|rest:3"] {
            assert_eq!(IndepStatement::parse(s).unwrap().to_string(), s);
        }
        assert!(IndepStatement::parse("0_1").is_err());
        assert!(IndepStatement::parse("1|rest:0").is_err());
    }

    #[test]
    fn independence_generators() {
        let vars = TensorVars::new(vec![2, 2]);
        let g = independence_ideal(&[2, 2], &[IndepStatement::Marginal(0, 1)]).unwrap();
        let p = |s: &str| parse_polynomial(s, &|n: &str| vars.by_name(n)).unwrap();
        assert_eq!(g, vec![p("p[1,1]*p[2,2]-p[1,2]*p[2,1]")]);
        let v3 = TensorVars::new(vec![2, 2, 2]);
        let g = independence_ideal(&[2, 2, 2], &[IndepStatement::Marginal(0, 1)]).unwrap();
        let p3 = |s: &str| parse_polynomial(s, &|n: &str| v3.by_name(n)).unwrap();
        let e = |i: usize, j: usize| p3(&format!("p[{i},{j},1]+p[{i},{j},2]"));
        assert_eq!(g, vec![&(&e(1, 1) * &e(2, 2)) - &(&e(1, 2) * &e(2, 1))]);
        assert_eq!(independence_ideal(&[2, 2, 2], &[IndepStatement::Conditional(0, 1, 2)]).unwrap().len(), 2);
        assert_eq!(independence_ideal(&[2, 2], &[IndepStatement::Saturated(2)]), Err(TensorError::Axis(2, 2)));
    }

    #[test]
    fn hidden_statements_give_double_determinantal_ideal() {
        for (m, n, r, u, v) in [(2, 2, 2, 2, 2), (3, 2, 2, 2, 3), (2, 3, 1, 2, 2)] {
            let (layout, gens) = double_det_generators(m, n, r, u, v);
            let st = [n * r, r, 1];
            let to_tensor = |x: VarId| {
                let p = layout.point(x);
                VarId((p.row * st[0] + p.col * st[1] + p.page) as u32)
            };
            let ind = independence_ideal(&[m, n, r], &[IndepStatement::Hidden(0, u - 1), IndepStatement::Hidden(1, v - 1)]).unwrap();
            let a: BTreeSet<Vec<(Monomial, Rational)>> =
                ind.iter().map(|p| up_to_sign(p).terms().map(|(m, c)| (m.clone(), c.clone())).collect()).collect();
            let b: BTreeSet<Vec<(Monomial, Rational)>> = gens
                .iter()
                .map(|g| up_to_sign(&relabel(&g.poly, to_tensor)).terms().map(|(m, c)| (m.clone(), c.clone())).collect())
                .collect();
            assert_eq!(ind.len(), gens.len());
            assert_eq!(a, b);
        }
    }
}
