//! Combinatorics of S-pairs of minors: the permuted monomials `L(σ,τ)`,
//! pseudominor decompositions `P(M,N)`, violations, defects, distances,
//! transplants and chain certificates.
//!
//! Indices into the point list `p_1 > … > p_l` are 0-based.

mod chain;
mod transplant;

pub use chain::{build_chain, parse_certificate, verify_chain, ChainCertificate, Step};
pub use transplant::{cross_transplant, maximal_cross_violation, transplant};

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::minors::{expand_minor, expand_pseudominor, MinorRef, PseudoMinorRef};
use crate::poly::{Monomial, Polynomial, Rational, VarId};
use crate::quiver::{ConsistentOrder, LatticePoint, Layout, Role};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpairError {
    #[error("not a permutation of the point indices")]
    NotPermutation,
    #[error("the {0} permutation moves an index outside its leading support")]
    MovesOutside(&'static str),
    #[error("defects are defined only for two minors of the same matrix")]
    CrossMatrix,
    #[error("the {0} is not maximal")]
    NotMaximal(&'static str),
    #[error("w1 - j exceeds w2 - k: swap the roles of the two minors first")]
    SwapRoles,
    #[error("diagonal {0} does not form a minor of the target matrix")]
    NotAMinor(String),
    #[error("enumeration of {0} permutation pairs exceeds the budget")]
    Budget(u128),
    #[error("{0}")]
    NoChain(String),
    #[error("certificate: {0}")]
    Parse(String),
}

/// Which coordinates the two permutations act on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Frame {
    /// Sink minor first, source minor second: rows `i`, columns `j`, page `k`.
    Lattice,
    /// Source minor first, sink minor second: the transposed lattice frame.
    Transposed,
    /// Both minors in one matrix, which is treated as a single page.
    Matrix(usize),
    /// Minors in two matrices sharing no variable.
    Split { first: usize, second: usize },
}

/// Coordinates of a point in the active frame.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FramePoint {
    pub row: usize,
    pub col: usize,
    pub page: usize,
}

/// One-line permutation of `0..l`.
pub type Perm = Vec<usize>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Row,
    Col,
}

/// An ordered S-pair `(M, N)` of minors together with its leading-term geometry.
#[derive(Clone, Debug)]
pub struct SPairAnalysis<'a> {
    pub layout: &'a Layout,
    pub m: MinorRef,
    pub n: MinorRef,
    pub lm_m: Monomial,
    pub lm_n: Monomial,
    pub l: Monomial,
    /// Variables of `L`, strictly decreasing.
    pub points: Vec<VarId>,
    pub coords: Vec<FramePoint>,
    pub s_m: Vec<usize>,
    pub s_n: Vec<usize>,
    in_m: Vec<bool>,
    in_n: Vec<bool>,
    /// Incidences grouped by frame page.
    pub incidences: BTreeMap<usize, Vec<usize>>,
    pub frame: Frame,
}

pub fn sign_of(p: &[usize]) -> i64 {
    let inv = (0..p.len()).tuple_combinations().filter(|&(a, b)| p[a] > p[b]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn frame_for(layout: &Layout, m: &MinorRef, n: &MinorRef, one_page: bool) -> Frame {
    if m.vertex == n.vertex {
        return Frame::Matrix(m.vertex);
    }
    match (layout.role(m.vertex), layout.role(n.vertex)) {
        (Role::Sink, Role::Source) => Frame::Lattice,
        // On a single page both matrices restrict to the same grid, so the
        // untransposed coordinates remain valid.
        (Role::Source, Role::Sink) if one_page => Frame::Lattice,
        (Role::Source, Role::Sink) => Frame::Transposed,
        _ => Frame::Split { first: m.vertex, second: n.vertex },
    }
}

/// `analyze(M, N)`: points of `L = lcm(LM M, LM N)` and the sets `S_M`, `S_N`, `I_j`.
pub fn analyze<'a>(layout: &'a Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> SPairAnalysis<'a> {
    let diag_m = m.diagonal(layout);
    let diag_n = n.diagonal(layout);
    let lm_m = Monomial::product_of(diag_m.iter().copied());
    let lm_n = Monomial::product_of(diag_n.iter().copied());
    let l = lm_m.lcm(&lm_n);
    let mut points: Vec<VarId> = l.vars().collect();
    points.sort_by(|a, b| ord.var_cmp(*b, *a));
    let in_m: Vec<bool> = points.iter().map(|v| diag_m.contains(v)).collect();
    let in_n: Vec<bool> = points.iter().map(|v| diag_n.contains(v)).collect();
    let one_page = points.iter().map(|&v| layout.point(v).page).all_equal();
    let frame = frame_for(layout, m, n, one_page);
    let coords = points
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let lp = layout.point(v);
            match frame {
                Frame::Lattice => FramePoint { row: lp.row, col: lp.col, page: lp.page },
                Frame::Transposed => FramePoint { row: lp.col, col: lp.row, page: lp.page },
                Frame::Matrix(g) => {
                    let (p, q) = layout.position_in(g, v).expect("leading variable lies in its matrix");
                    FramePoint { row: p, col: q, page: 0 }
                }
                Frame::Split { first, second } => {
                    let (home, page) = if in_m[i] { (first, 0) } else { (second, 1) };
                    let (p, q) = layout.position_in(home, v).expect("leading variable lies in its matrix");
                    FramePoint { row: p, col: q, page }
                }
            }
        })
        .collect::<Vec<_>>();
    let s_m: Vec<usize> = (0..points.len()).filter(|&i| in_m[i]).collect();
    let s_n: Vec<usize> = (0..points.len()).filter(|&i| in_n[i]).collect();
    let mut incidences: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..points.len() {
        if in_m[i] && in_n[i] {
            incidences.entry(coords[i].page).or_default().push(i);
        }
    }
    SPairAnalysis {
        layout,
        m: m.clone(),
        n: n.clone(),
        lm_m,
        lm_n,
        l,
        points,
        coords,
        s_m,
        s_n,
        in_m,
        in_n,
        incidences,
        frame,
    }
}

/// One term `sign · cofactor · pseudominor` of a decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompTerm {
    pub sign: i64,
    pub cofactor: Monomial,
    pub pseudo: PseudoMinorRef,
}

impl DecompTerm {
    pub fn expand(&self, layout: &Layout) -> Polynomial {
        let c = Rational::from_integer(self.sign.into());
        expand_pseudominor(layout, &self.pseudo).scale(&c, &self.cofactor)
    }

    /// Leading monomial via the sorted minor's diagonal; `None` when trivial.
    pub fn leading_monomial(&self, layout: &Layout) -> Option<Monomial> {
        let (_, minor) = self.pseudo.normalize()?;
        Some(self.cofactor.mul(&Monomial::product_of(minor.diagonal(layout))))
    }

    fn negated(&self) -> DecompTerm {
        DecompTerm { sign: -self.sign, ..self.clone() }
    }
}

/// `P(M,N)`: row-side terms minus column-side terms, one per nonidentity coset
/// representative, trivial pseudominors dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub row_terms: Vec<(Perm, DecompTerm)>,
    pub col_terms: Vec<(Perm, DecompTerm)>,
}

impl Decomposition {
    /// All terms with the column side negated, so the sum is `P(M,N)`.
    pub fn signed_terms(&self) -> Vec<DecompTerm> {
        self.row_terms.iter().map(|t| t.1.clone()).chain(self.col_terms.iter().map(|t| t.1.negated())).collect()
    }

    pub fn expand(&self, layout: &Layout) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in self.signed_terms() {
            acc += &t.expand(layout);
        }
        acc
    }

    pub fn is_empty(&self) -> bool {
        self.row_terms.is_empty() && self.col_terms.is_empty()
    }
}

impl<'a> SPairAnalysis<'a> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn in_m(&self, i: usize) -> bool {
        self.in_m[i]
    }

    pub fn in_n(&self, i: usize) -> bool {
        self.in_n[i]
    }

    pub fn is_incidence(&self, i: usize) -> bool {
        self.in_m[i] && self.in_n[i]
    }

    pub fn identity(&self) -> Perm {
        (0..self.len()).collect()
    }

    pub fn point(&self, i: usize) -> LatticePoint {
        self.layout.point(self.points[i])
    }

    /// The variable taking its frame row from point `a`, column from `b` and page from `c`.
    fn compose(&self, a: usize, b: usize, c: usize) -> VarId {
        let (pa, pb, pc) = (self.coords[a], self.coords[b], self.coords[c]);
        let found = match self.frame {
            Frame::Lattice => self.layout.var_at(LatticePoint { row: pa.row, col: pb.col, page: pc.page }),
            Frame::Transposed => self.layout.var_at(LatticePoint { row: pb.col, col: pa.row, page: pc.page }),
            Frame::Matrix(g) => self.layout.matrix(g).get(pa.row, pb.col),
            Frame::Split { first, second } => {
                let g = if self.in_m[c] { first } else { second };
                self.layout.matrix(g).get(pa.row, pb.col)
            }
        };
        found.expect("permuted point stays inside the lattice")
    }

    fn check_perm(&self, p: &[usize], side: Side) -> Result<(), SpairError> {
        let l = self.len();
        if p.len() != l || p.iter().copied().collect::<BTreeSet<_>>().len() != l || p.iter().any(|&x| x >= l) {
            return Err(SpairError::NotPermutation);
        }
        let inside = |i: usize| match side {
            Side::Row => self.in_m[i],
            Side::Col => self.in_n[i],
        };
        if (0..l).any(|i| p[i] != i && !inside(i)) {
            return Err(SpairError::MovesOutside(if side == Side::Row { "row" } else { "column" }));
        }
        Ok(())
    }

    /// `L(σ,τ) = ∏ x` at the points taking their row from `σ(i)` and column from `τ(i)`.
    pub fn l_of(&self, sigma: &[usize], tau: &[usize]) -> Result<Monomial, SpairError> {
        self.check_perm(sigma, Side::Row)?;
        self.check_perm(tau, Side::Col)?;
        Ok(self.l_of_unchecked(sigma, tau))
    }

    fn l_of_unchecked(&self, sigma: &[usize], tau: &[usize]) -> Monomial {
        Monomial::product_of((0..self.len()).map(|i| self.compose(sigma[i], tau[i], i)))
    }

    fn side_set(&self, side: Side) -> &[usize] {
        match side {
            Side::Row => &self.s_m,
            Side::Col => &self.s_n,
        }
    }

    /// Every permutation of `S_M` (row) or `S_N` (column), fixing the rest.
    pub fn full_group(&self, side: Side) -> Vec<Perm> {
        let set = self.side_set(side).to_vec();
        let k = set.len();
        set.iter()
            .copied()
            .permutations(k)
            .map(|images| {
                let mut p = self.identity();
                for (slot, img) in set.iter().zip(images) {
                    p[*slot] = img;
                }
                p
            })
            .collect()
    }

    /// Lexicographically least member of the coset `σ·∏Sym(I_j)`.
    pub fn canonical_rep(&self, p: &[usize]) -> Perm {
        let mut out = p.to_vec();
        for block in self.incidences.values() {
            let mut vals: Vec<usize> = block.iter().map(|&i| p[i]).collect();
            vals.sort_unstable();
            for (&i, v) in block.iter().zip(vals) {
                out[i] = v;
            }
        }
        out
    }

    /// One canonical representative per coset, identity first.
    pub fn coset_reps(&self, side: Side) -> Vec<Perm> {
        let reps: BTreeSet<Perm> = self.full_group(side).iter().map(|p| self.canonical_rep(p)).collect();
        reps.into_iter().collect()
    }

    /// Whether `p` lies in `∏Sym(I_j)`.
    pub fn in_incidence_group(&self, p: &[usize]) -> bool {
        (0..self.len()).all(|i| {
            if p[i] == i {
                return true;
            }
            self.is_incidence(i) && self.is_incidence(p[i]) && self.coords[i].page == self.coords[p[i]].page
        })
    }

    fn pseudo_in(&self, vertex: usize, grid: &[Vec<VarId>]) -> PseudoMinorRef {
        let n = grid.len();
        let pos: Vec<Vec<(usize, usize)>> = grid
            .iter()
            .map(|row| row.iter().map(|&v| self.layout.position_in(vertex, v).expect("pseudominor entry lies in its matrix")).collect())
            .collect();
        let straight = (0..n).all(|t| (0..n).all(|s| pos[t][s] == (pos[t][0].0, pos[0][s].1)));
        if straight {
            return PseudoMinorRef {
                vertex,
                rows: (0..n).map(|t| pos[t][0].0).collect(),
                cols: (0..n).map(|s| pos[0][s].1).collect(),
            };
        }
        let flipped = (0..n).all(|t| (0..n).all(|s| pos[t][s] == (pos[0][s].0, pos[t][0].1)));
        assert!(flipped, "permuted entries do not form a pseudosubmatrix");
        PseudoMinorRef { vertex, rows: (0..n).map(|s| pos[0][s].0).collect(), cols: (0..n).map(|t| pos[t][0].1).collect() }
    }

    /// `P_{σ,·} = sgn σ · ∏_{k∈S_M∖S_N} x_{σ(k),k} · det`, the determinant a pseudominor of N's matrix.
    pub fn p_row(&self, sigma: &[usize]) -> Result<DecompTerm, SpairError> {
        self.check_perm(sigma, Side::Row)?;
        let cofactor = Monomial::product_of(self.s_m.iter().filter(|&&k| !self.in_n[k]).map(|&k| self.compose(sigma[k], k, k)));
        let grid: Vec<Vec<VarId>> = self.s_n.iter().map(|&jt| self.s_n.iter().map(|&js| self.compose(sigma[jt], js, jt)).collect()).collect();
        Ok(DecompTerm { sign: sign_of(sigma), cofactor, pseudo: self.pseudo_in(self.n.vertex, &grid) })
    }

    /// `P_{·,τ} = sgn τ · ∏_{k∈S_N∖S_M} x_{k,τ(k)} · det`, the determinant a pseudominor of M's matrix.
    pub fn p_col(&self, tau: &[usize]) -> Result<DecompTerm, SpairError> {
        self.check_perm(tau, Side::Col)?;
        let cofactor = Monomial::product_of(self.s_n.iter().filter(|&&k| !self.in_m[k]).map(|&k| self.compose(k, tau[k], k)));
        let grid: Vec<Vec<VarId>> = self.s_m.iter().map(|&it| self.s_m.iter().map(|&is| self.compose(it, tau[is], is)).collect()).collect();
        Ok(DecompTerm { sign: sign_of(tau), cofactor, pseudo: self.pseudo_in(self.m.vertex, &grid) })
    }

    pub fn decomposition(&self) -> Decomposition {
        let side_terms = |side: Side| -> Vec<(Perm, DecompTerm)> {
            self.coset_reps(side)
                .into_iter()
                .skip(1)
                .map(|p| {
                    let t = match side {
                        Side::Row => self.p_row(&p),
                        Side::Col => self.p_col(&p),
                    }
                    .expect("coset representative");
                    (p, t)
                })
                .filter(|(_, t)| !t.pseudo.is_trivial())
                .collect()
        };
        Decomposition { row_terms: side_terms(Side::Row), col_terms: side_terms(Side::Col) }
    }

    /// Every term's leading monomial is below `L`.
    pub fn has_small_lts(&self, d: &Decomposition, ord: &ConsistentOrder) -> bool {
        has_small_lts(self.layout, d, &self.l, ord)
    }

    fn violation_roles(&self, i: usize, j: usize, k: usize, swapped: bool) -> Option<bool> {
        let (first, second) = if swapped { (&self.in_n, &self.in_m) } else { (&self.in_m, &self.in_n) };
        if i == j || j == k || i == k || !first[i] || !second[j] || !self.is_incidence(k) {
            return None;
        }
        let (a, b, c) = (self.coords[i], self.coords[j], self.coords[k]);
        let ok = a.row <= b.row
            && b.row < c.row
            && b.col <= a.col
            && a.col < c.col
            && (a.row, a.col) != (b.row, b.col)
            && a.page == b.page
            && b.page == c.page;
        ok.then_some(a.row < b.row && b.col < a.col)
    }

    /// Whether `(p_i, p_j, p_k)` is a violation of `(M,N)` (or of `(N,M)` when swapped).
    pub fn is_violation(&self, i: usize, j: usize, k: usize, swapped: bool) -> bool {
        self.violation_roles(i, j, k, swapped).is_some()
    }

    pub fn violations(&self) -> Vec<Violation> {
        let l = self.len();
        let mut out = Vec::new();
        for i in 0..l {
            for j in 0..l {
                for k in 0..l {
                    if let Some(strict) = self.violation_roles(i, j, k, false) {
                        out.push(Violation { i, j, k, strict });
                    }
                }
            }
        }
        out
    }

    fn defect_holds(&self, kind: DefectKind, j: usize, k: usize, r: usize, s: usize, t: usize) -> bool {
        let idx = [j, k, r, s, t];
        if idx.iter().collect::<BTreeSet<_>>().len() != 5 {
            return false;
        }
        let only_m = |i: usize| self.in_m[i] && !self.in_n[i];
        let only_n = |i: usize| self.in_n[i] && !self.in_m[i];
        let (js_ok, kr_ok) = match kind {
            DefectKind::I => (only_m(j) && only_m(s), only_n(k) && only_n(r)),
            DefectKind::II => (only_n(j) && only_n(s), only_m(k) && only_m(r)),
        };
        if !js_ok || !kr_ok || !self.is_incidence(t) {
            return false;
        }
        let [pj, pk, pr, ps, pt] = idx.map(|i| self.coords[i]);
        pj.row <= pk.row
            && pk.row < pr.row
            && pr.row <= ps.row
            && ps.row < pt.row
            && pk.col <= pj.col
            && pj.col < ps.col
            && ps.col <= pr.col
            && pr.col < pt.col
    }

    fn defect_is_maximal(&self, d: &Defect) -> bool {
        let swapped = d.kind == DefectKind::II;
        let (first, second) = if swapped { (&self.in_n, &self.in_m) } else { (&self.in_m, &self.in_n) };
        for j2 in 0..=d.j {
            for k2 in 0..=d.k {
                if first[j2] && second[k2] && (j2, k2) != (d.j, d.k) && self.is_violation(j2, k2, d.t, swapped) {
                    return false;
                }
            }
        }
        for s2 in d.j + 1..=d.s {
            for r2 in d.k + 1..=d.r {
                if (s2, r2) != (d.s, d.r) && self.defect_holds(d.kind, d.j, d.k, r2, s2, d.t) {
                    return false;
                }
            }
        }
        true
    }

    /// All type I and II defects; requires both minors in one matrix.
    pub fn defects(&self) -> Result<Vec<Defect>, SpairError> {
        if !matches!(self.frame, Frame::Matrix(_)) {
            return Err(SpairError::CrossMatrix);
        }
        let l = self.len();
        let mut out = Vec::new();
        for kind in [DefectKind::I, DefectKind::II] {
            for idx in (0..5).map(|_| 0..l).multi_cartesian_product() {
                let (j, k, r, s, t) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
                if self.defect_holds(kind, j, k, r, s, t) {
                    let mut d = Defect { kind, j, k, r, s, t, maximal: false };
                    d.maximal = self.defect_is_maximal(&d);
                    out.push(d);
                }
            }
        }
        Ok(out)
    }

    /// `d(M,N) = |V_M| + |V_N| − 2|V_M ∩ V_N|` over leading-monomial variables.
    pub fn distance(&self) -> usize {
        let common = (0..self.len()).filter(|&i| self.is_incidence(i)).count();
        self.s_m.len() + self.s_n.len() - 2 * common
    }

    /// Brute-force check of both equivalences relating violations and `L(σ,τ)`.
    pub fn check_noviolation_equivalence(&self, ord: &ConsistentOrder) -> Result<bool, SpairError> {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let size = fact(self.s_m.len()) * fact(self.s_n.len());
        if size > fact(8) * fact(8) {
            return Err(SpairError::Budget(size));
        }
        let rows = self.full_group(Side::Row);
        let cols = self.full_group(Side::Col);
        let mut any_greater = false;
        let mut equality_matches = true;
        for sigma in &rows {
            for tau in &cols {
                let lst = self.l_of_unchecked(sigma, tau);
                let cmp = ord.cmp_ranked(&lst, &self.l);
                any_greater |= cmp == std::cmp::Ordering::Greater;
                let in_h = sigma == tau && self.in_incidence_group(sigma);
                equality_matches &= (cmp == std::cmp::Ordering::Equal) == in_h;
            }
        }
        let any_strict = self.violations().iter().any(|v| v.strict);
        Ok(equality_matches && any_strict == any_greater)
    }
}

/// `(p_i, p_j, p_k)` with `i ∈ S_M`, `j ∈ S_N`, `k` an incidence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefectKind {
    I,
    II,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Defect {
    pub kind: DefectKind,
    pub j: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub maximal: bool,
}

pub fn p_decomposition(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> Decomposition {
    analyze(layout, m, n, ord).decomposition()
}

pub fn has_small_lts(layout: &Layout, d: &Decomposition, l: &Monomial, ord: &ConsistentOrder) -> bool {
    d.signed_terms().iter().all(|t| match t.leading_monomial(layout) {
        Some(lm) => ord.cmp_ranked(&lm, l) == std::cmp::Ordering::Less,
        None => true,
    })
}

pub fn find_violations(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> Vec<Violation> {
    analyze(layout, m, n, ord).violations()
}

pub fn find_defects(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> Result<Vec<Defect>, SpairError> {
    analyze(layout, m, n, ord).defects()
}

pub fn distance(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> usize {
    analyze(layout, m, n, ord).distance()
}

pub fn check_noviolation_equivalence(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> Result<bool, SpairError> {
    analyze(layout, m, n, ord).check_noviolation_equivalence(ord)
}

/// Expanded `P(M,N)` by brute force: `Σ_σ Σ_τ sgn σ sgn τ L(σ,τ)` minus the identity cosets.
pub fn brute_force_p_row(a: &SPairAnalysis<'_>, sigma: &[usize]) -> Polynomial {
    let mut acc = Polynomial::zero();
    let s = sign_of(sigma);
    for tau in a.full_group(Side::Col) {
        let m = a.l_of(sigma, &tau).expect("group element");
        acc.add_term(Rational::from_integer((s * sign_of(&tau)).into()), m);
    }
    acc
}

pub fn brute_force_p_col(a: &SPairAnalysis<'_>, tau: &[usize]) -> Polynomial {
    let mut acc = Polynomial::zero();
    let s = sign_of(tau);
    for sigma in a.full_group(Side::Row) {
        let m = a.l_of(&sigma, tau).expect("group element");
        acc.add_term(Rational::from_integer((s * sign_of(&sigma)).into()), m);
    }
    acc
}

/// Expanded minor of the analysis on the chosen side.
pub fn minor_poly(a: &SPairAnalysis<'_>, side: Side) -> Polynomial {
    match side {
        Side::Row => expand_minor(a.layout, &a.m),
        Side::Col => expand_minor(a.layout, &a.n),
    }
}
