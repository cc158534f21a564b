//! Minors and pseudominors of the matrices `A_γ`, and the natural generators.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::poly::{Monomial, Polynomial, Rational, Term, VarId};
use crate::quiver::{ConsistentOrder, Layout, Role};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinorError {
    #[error("bad minor spec `{0}`: expected <vertex>:<r1>,<r2>,...;<c1>,<c2>,...")]
    Syntax(String),
    #[error("minor {0}: {1}")]
    Invalid(String, String),
}

/// Square submatrix of `A_vertex` with strictly increasing 0-based rows and columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MinorRef {
    pub vertex: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Square pseudosubmatrix: rows and columns are arbitrary lists, repeats allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PseudoMinorRef {
    pub vertex: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn render_spec(vertex: usize, rows: &[usize], cols: &[usize]) -> String {
    let join = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).join(",");
    format!("{}:{};{}", vertex + 1, join(rows), join(cols))
}

fn parse_spec(s: &str) -> Result<(usize, Vec<usize>, Vec<usize>), MinorError> {
    let bad = || MinorError::Syntax(s.to_string());
    let (v, rest) = s.trim().split_once(':').ok_or_else(bad)?;
    let (r, c) = rest.split_once(';').ok_or_else(bad)?;
    let one_based = |t: &str| -> Result<usize, MinorError> {
        match t.trim().parse::<usize>() {
            Ok(x) if x >= 1 => Ok(x - 1),
            _ => Err(bad()),
        }
    };
    let list = |t: &str| t.split(',').map(one_based).collect::<Result<Vec<_>, _>>();
    Ok((one_based(v)?, list(r)?, list(c)?))
}

impl MinorRef {
    pub fn new(layout: &Layout, vertex: usize, rows: Vec<usize>, cols: Vec<usize>) -> Result<Self, MinorError> {
        let r = MinorRef { vertex, rows, cols };
        r.check(layout)?;
        Ok(r)
    }

    fn check(&self, layout: &Layout) -> Result<(), MinorError> {
        let bad = |msg: &str| Err(MinorError::Invalid(self.to_string(), msg.to_string()));
        if self.vertex >= layout.vertex_count() {
            return bad("no such vertex");
        }
        if self.rows.is_empty() || self.rows.len() != self.cols.len() {
            return bad("rows and columns must be nonempty lists of equal length");
        }
        if !self.rows.windows(2).all(|w| w[0] < w[1]) || !self.cols.windows(2).all(|w| w[0] < w[1]) {
            return bad("rows and columns must be strictly increasing");
        }
        let m = layout.matrix(self.vertex);
        if self.rows.iter().any(|&p| p >= m.rows) || self.cols.iter().any(|&q| q >= m.cols) {
            return bad("index outside the matrix");
        }
        Ok(())
    }

    pub fn parse(layout: &Layout, s: &str) -> Result<Self, MinorError> {
        let (v, rows, cols) = parse_spec(s)?;
        Self::new(layout, v, rows, cols)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn as_pseudo(&self) -> PseudoMinorRef {
        PseudoMinorRef { vertex: self.vertex, rows: self.rows.clone(), cols: self.cols.clone() }
    }

    pub fn entries(&self, layout: &Layout) -> Vec<Vec<VarId>> {
        let m = layout.matrix(self.vertex);
        self.rows.iter().map(|&p| self.cols.iter().map(|&q| m.get(p, q).expect("checked minor")).collect()).collect()
    }

    pub fn diagonal(&self, layout: &Layout) -> Vec<VarId> {
        let m = layout.matrix(self.vertex);
        self.rows.iter().zip(&self.cols).map(|(&p, &q)| m.get(p, q).expect("checked minor")).collect()
    }

    /// Sorted set of the submatrix's variables; equal sets mean equal minors.
    pub fn point_set(&self, layout: &Layout) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.entries(layout).into_iter().flatten().collect();
        v.sort();
        v
    }

    /// The same submatrix viewed inside another vertex's matrix, if it lives there.
    pub fn rehome(&self, layout: &Layout, vertex: usize) -> Option<MinorRef> {
        let entries = self.entries(layout);
        let pos: Vec<Vec<(usize, usize)>> =
            entries.iter().map(|row| row.iter().map(|&v| layout.position_in(vertex, v)).collect::<Option<_>>()).collect::<Option<_>>()?;
        let n = self.size();
        let rows: Vec<usize> = (0..n).map(|t| pos[t][0].0).collect();
        let cols: Vec<usize> = (0..n).map(|s| pos[0][s].1).collect();
        let grid_ok = (0..n).all(|t| (0..n).all(|s| pos[t][s] == (rows[t], cols[s])));
        if !grid_ok {
            return None;
        }
        let r = MinorRef { vertex, rows, cols };
        r.check(layout).ok()?;
        Some(r)
    }

    /// The minor of `A_vertex` whose diagonal is the given variables, if they
    /// run strictly down and to the right there.
    pub fn from_diagonal(layout: &Layout, vertex: usize, diag: &[VarId]) -> Option<MinorRef> {
        let pos: Vec<(usize, usize)> = diag.iter().map(|&v| layout.position_in(vertex, v)).collect::<Option<_>>()?;
        let rows: Vec<usize> = pos.iter().map(|p| p.0).collect();
        let cols: Vec<usize> = pos.iter().map(|p| p.1).collect();
        let r = MinorRef { vertex, rows, cols };
        r.check(layout).ok()?;
        Some(r)
    }
}

impl fmt::Display for MinorRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_spec(self.vertex, &self.rows, &self.cols))
    }
}

impl PseudoMinorRef {
    pub fn new(layout: &Layout, vertex: usize, rows: Vec<usize>, cols: Vec<usize>) -> Result<Self, MinorError> {
        let r = PseudoMinorRef { vertex, rows, cols };
        let bad = |msg: &str| Err(MinorError::Invalid(r.to_string(), msg.to_string()));
        if vertex >= layout.vertex_count() {
            return bad("no such vertex");
        }
        if r.rows.is_empty() || r.rows.len() != r.cols.len() {
            return bad("rows and columns must be nonempty lists of equal length");
        }
        let m = layout.matrix(vertex);
        if r.rows.iter().any(|&p| p >= m.rows) || r.cols.iter().any(|&q| q >= m.cols) {
            return bad("index outside the matrix");
        }
        Ok(r)
    }

    pub fn parse(layout: &Layout, s: &str) -> Result<Self, MinorError> {
        let (v, rows, cols) = parse_spec(s)?;
        Self::new(layout, v, rows, cols)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.iter().duplicates().next().is_some() || self.cols.iter().duplicates().next().is_some()
    }

    /// Sorted minor and the sign relating the two determinants; `None` when trivial.
    pub fn normalize(&self) -> Option<(i64, MinorRef)> {
        if self.is_trivial() {
            return None;
        }
        let parity = |v: &[usize]| v.iter().tuple_combinations().filter(|(a, b)| a > b).count() % 2;
        let sign = if (parity(&self.rows) + parity(&self.cols)) % 2 == 0 { 1 } else { -1 };
        let mut rows = self.rows.clone();
        let mut cols = self.cols.clone();
        rows.sort();
        cols.sort();
        Some((sign, MinorRef { vertex: self.vertex, rows, cols }))
    }

    pub fn entries(&self, layout: &Layout) -> Vec<Vec<VarId>> {
        let m = layout.matrix(self.vertex);
        self.rows.iter().map(|&p| self.cols.iter().map(|&q| m.get(p, q).expect("checked pseudominor")).collect()).collect()
    }
}

impl fmt::Display for PseudoMinorRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_spec(self.vertex, &self.rows, &self.cols))
    }
}

/// All `size`-minors of `A_vertex` in lexicographic `(rows, cols)` order.
pub fn enumerate_minors(layout: &Layout, vertex: usize, size: usize) -> Vec<MinorRef> {
    let m = layout.matrix(vertex);
    if size == 0 || size > m.rows || size > m.cols {
        return Vec::new();
    }
    let col_sets: Vec<Vec<usize>> = (0..m.cols).combinations(size).collect();
    (0..m.rows)
        .combinations(size)
        .flat_map(|rows| col_sets.iter().map(move |cols| MinorRef { vertex, rows: rows.clone(), cols: cols.clone() }))
        .collect()
}

/// Determinant by Laplace expansion along rows, memoized over column subsets.
pub fn det_poly_matrix(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    assert!(m.iter().all(|r| r.len() == k), "determinant of a non-square matrix");
    assert!(k < 32, "matrix too large for subset expansion");
    let mut dp: Vec<Polynomial> = vec![Polynomial::zero(); 1usize << k];
    dp[0] = Polynomial::constant(1);
    // dp[mask] = det of rows 0..|mask| restricted to the columns in mask.
    for mask in 1usize..(1 << k) {
        let t = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero();
        for c in 0..k {
            if mask & (1 << c) == 0 {
                continue;
            }
            let rest = mask & !(1 << c);
            if dp[rest].is_zero() {
                continue;
            }
            let entry = &m[t][c];
            let mut prod = if entry.len() == 1 {
                let (mono, coeff) = entry.terms().next().expect("one term");
                dp[rest].scale(coeff, mono)
            } else {
                dp[rest].mul(entry)
            };
            if (mask >> (c + 1)).count_ones() % 2 == 1 {
                prod = prod.neg();
            }
            acc += &prod;
        }
        dp[mask] = acc;
    }
    dp.pop().expect("nonempty table")
}

fn det_of_vars(grid: &[Vec<VarId>]) -> Polynomial {
    let m: Vec<Vec<Polynomial>> = grid.iter().map(|row| row.iter().map(|&v| Polynomial::var(v)).collect()).collect();
    det_poly_matrix(&m)
}

pub fn expand_minor(layout: &Layout, minor: &MinorRef) -> Polynomial {
    det_of_vars(&minor.entries(layout))
}

/// Determinant of the pseudosubmatrix, zero when a row or column repeats.
pub fn expand_pseudominor(layout: &Layout, minor: &PseudoMinorRef) -> Polynomial {
    if minor.is_trivial() {
        return Polynomial::zero();
    }
    det_of_vars(&minor.entries(layout))
}

/// `+∏` of the main diagonal, the leading term under any consistent order.
pub fn minor_leading_term(layout: &Layout, minor: &MinorRef, _ord: &ConsistentOrder) -> Term<Rational> {
    Term::new(Rational::from_integer(1.into()), Monomial::product_of(minor.diagonal(layout)))
}

/// A natural generator with its expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub minor: MinorRef,
    pub poly: Polynomial,
}

/// The `(rank+1)`-minors of every `A_γ`, deduplicated by lattice-point set,
/// ordered by vertex and then `(rows, cols)`.
pub fn natural_generators(layout: &Layout) -> Vec<Generator> {
    let mut seen: HashSet<Vec<VarId>> = HashSet::new();
    let mut out = Vec::new();
    for vertex in 0..layout.vertex_count() {
        if layout.role(vertex) == Role::Isolated {
            continue;
        }
        let size = layout.spec().ranks[vertex] + 1;
        for minor in enumerate_minors(layout, vertex, size) {
            if seen.insert(minor.point_set(layout)) {
                let poly = expand_minor(layout, &minor);
                out.push(Generator { minor, poly });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn enumeration_counts() {
        let l = Layout::double_determinantal(2, 2, 2, 2, 2);
        assert_eq!(enumerate_minors(&l, 0, 2).len(), 6);
        assert!(enumerate_minors(&l, 0, 3).is_empty());
        let l = Layout::double_determinantal(3, 3, 1, 2, 2);
        let all = enumerate_minors(&l, 0, 2);
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| (&w[0].rows, &w[0].cols) < (&w[1].rows, &w[1].cols)));
    }

    #[test]
    fn key_example_minor() {
        let l = Layout::double_determinantal(3, 3, 1, 2, 2);
        let m = MinorRef::parse(&l, "1:2,3;1,3").unwrap();
        let p = expand_minor(&l, &m);
        let expected = parse_polynomial("x[2,1,1]*x[3,3,1]-x[2,3,1]*x[3,1,1]", &|s| l.var_by_name(s)).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.render(&l.default_order(), &l), "+x[2,1,1]*x[3,3,1]-x[2,3,1]*x[3,1,1]");
        let ord = ConsistentOrder::default_for(&l);
        assert_eq!(Polynomial::from_term(minor_leading_term(&l, &m, &ord)), p.leading_term(&ord).map(Polynomial::from_term).unwrap());
        assert_eq!(m.to_string(), "1:2,3;1,3");
    }

    #[test]
    fn term_counts_are_factorial() {
        let l = Layout::double_determinantal(5, 5, 1, 5, 5);
        let m = MinorRef::new(&l, 0, (0..5).collect(), (0..5).collect()).unwrap();
        let p = expand_minor(&l, &m);
        assert_eq!(p.len(), 120);
        assert!(p.terms().all(|(_, c)| c.numer().magnitude() == &1u32.into() && c.is_integer()));
    }

    #[test]
    fn pseudominor_signs() {
        let l = Layout::double_determinantal(3, 3, 1, 2, 2);
        let triv = PseudoMinorRef::new(&l, 0, vec![0, 0], vec![0, 1]).unwrap();
        assert!(expand_pseudominor(&l, &triv).is_zero());
        let swapped = PseudoMinorRef::new(&l, 0, vec![2, 1], vec![0, 1]).unwrap();
        let sorted = MinorRef::new(&l, 0, vec![1, 2], vec![0, 1]).unwrap();
        assert_eq!(expand_pseudominor(&l, &swapped), expand_minor(&l, &sorted).neg());
        let (sign, norm) = swapped.normalize().unwrap();
        assert_eq!((sign, norm), (-1, sorted));
    }

    #[test]
    fn natural_generator_counts() {
        let l = Layout::double_determinantal(2, 2, 2, 2, 2);
        assert_eq!(natural_generators(&l).len(), 10);
        for (m, n, r, u) in [(3, 3, 2, 2), (2, 3, 2, 2), (3, 2, 3, 2), (3, 3, 1, 2), (3, 4, 2, 3)] {
            let l = Layout::double_determinantal(m, n, r, u, u);
            let expected = binom(m, u) * binom(n * r, u) + binom(m * r, u) * binom(n, u) - r * binom(m, u) * binom(n, u);
            let gens = natural_generators(&l);
            assert_eq!(gens.len(), expected, "({m},{n},{r},{u})");
            for (a, b) in gens.iter().tuple_combinations() {
                assert_ne!(a.poly, b.poly);
            }
        }
        assert!(natural_generators(&Layout::double_determinantal(2, 2, 1, 3, 3)).is_empty());
    }

    #[test]
    fn rehome_single_page_minor() {
        let l = Layout::double_determinantal(2, 2, 2, 2, 2);
        let a = MinorRef::parse(&l, "1:1,2;3,4").unwrap();
        let b = a.rehome(&l, 1).unwrap();
        assert_eq!(b.to_string(), "2:3,4;1,2");
        assert_eq!(expand_minor(&l, &a), expand_minor(&l, &b));
        let cross = MinorRef::parse(&l, "1:1,2;1,4").unwrap();
        assert!(cross.rehome(&l, 1).is_none());
    }
}
