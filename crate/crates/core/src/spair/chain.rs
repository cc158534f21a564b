use std::cmp::Ordering;
use std::fmt::Write as _;

use itertools::Itertools;

use super::transplant::transplant_pair;
use super::{analyze, DecompTerm, SpairError};
use crate::minors::{expand_minor, MinorRef, PseudoMinorRef};
use crate::poly::{parse_polynomial, s_polynomial, Monomial, Polynomial, VarId};
use crate::quiver::{ConsistentOrder, Layout};

/// Terms summing to `S(M_{i-1}, M_i)`, each with leading monomial below the pair's lcm.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub terms: Vec<DecompTerm>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainCertificate {
    pub chain: Vec<MinorRef>,
    pub steps: Vec<Step>,
}

const MAX_INSERTIONS: usize = 10_000;

fn same_poly(layout: &Layout, a: &MinorRef, b: &MinorRef) -> bool {
    a.point_set(layout) == b.point_set(layout) && expand_minor(layout, a) == expand_minor(layout, b)
}

/// A decomposition of `S(a, b)` with small leading terms, trying both orientations.
fn step_between(layout: &Layout, a: &MinorRef, b: &MinorRef, ord: &ConsistentOrder) -> Option<Step> {
    if same_poly(layout, a, b) {
        return Some(Step { terms: Vec::new() });
    }
    let fwd = analyze(layout, a, b, ord);
    let d = fwd.decomposition();
    if fwd.has_small_lts(&d, ord) {
        return Some(Step { terms: d.signed_terms() });
    }
    let back = analyze(layout, b, a, ord);
    let d = back.decomposition();
    if back.has_small_lts(&d, ord) {
        return Some(Step { terms: d.signed_terms().iter().map(DecompTerm::negated).collect() });
    }
    None
}

/// Inserts transplants between neighbours of one matrix until every link decomposes.
fn same_matrix_chain(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> Result<Vec<MinorRef>, SpairError> {
    let mut chain = vec![m.clone()];
    if m != n {
        chain.push(n.clone());
    }
    let mut inserted = 0;
    let mut i = 1;
    while i < chain.len() {
        if step_between(layout, &chain[i - 1], &chain[i], ord).is_some() {
            i += 1;
            continue;
        }
        let p = transplant_pair(layout, &chain[i - 1], &chain[i], ord)?
            .ok_or_else(|| SpairError::NoChain(format!("no maximal defect for {} and {}", chain[i - 1], chain[i])))?;
        inserted += 1;
        if inserted > MAX_INSERTIONS {
            return Err(SpairError::NoChain("transplant loop did not terminate".into()));
        }
        chain.insert(i, p);
    }
    Ok(chain)
}

/// Minors of `vertex` with `size` rows whose diagonal uses only variables of `support`.
fn diagonal_minors(layout: &Layout, vertex: usize, size: usize, support: &[VarId]) -> Vec<MinorRef> {
    let mut local: Vec<(usize, usize, VarId)> =
        support.iter().filter_map(|&v| layout.position_in(vertex, v).map(|(p, q)| (p, q, v))).collect();
    local.sort();
    local
        .iter()
        .combinations(size)
        .filter_map(|pick| {
            let diag: Vec<VarId> = pick.iter().map(|t| t.2).collect();
            MinorRef::from_diagonal(layout, vertex, &diag)
        })
        .collect()
}

fn lm_vars(layout: &Layout, m: &MinorRef) -> Vec<VarId> {
    let mut v = m.diagonal(layout);
    v.sort();
    v
}

fn lm_distance(layout: &Layout, a: &MinorRef, b: &MinorRef) -> usize {
    let (va, vb) = (lm_vars(layout, a), lm_vars(layout, b));
    let common = va.iter().filter(|x| vb.contains(x)).count();
    va.len() + vb.len() - 2 * common
}

/// A chain `M = M_0, …, M_k = N` whose links each carry a small-leading-term
/// decomposition; every `LM(M_i)` divides `lcm(LM M, LM N)`.
pub fn build_chain(layout: &Layout, m: &MinorRef, n: &MinorRef, ord: &ConsistentOrder) -> Result<ChainCertificate, SpairError> {
    let chain = if m.vertex == n.vertex || step_between(layout, m, n, ord).is_some() {
        same_matrix_chain(layout, m, n, ord)?
    } else {
        let a = analyze(layout, m, n, ord);
        let support = a.points.clone();
        let left = diagonal_minors(layout, m.vertex, m.size(), &support);
        let right = diagonal_minors(layout, n.vertex, n.size(), &support);
        let mut best: Option<(usize, usize, MinorRef, MinorRef)> = None;
        for p in &left {
            for q in &right {
                if step_between(layout, p, q, ord).is_none() {
                    continue;
                }
                let key = (lm_distance(layout, p, q), lm_distance(layout, m, p) + lm_distance(layout, q, n));
                if best.as_ref().is_none_or(|b| key < (b.0, b.1)) {
                    best = Some((key.0, key.1, p.clone(), q.clone()));
                }
            }
        }
        let (_, _, p, q) = best.ok_or_else(|| SpairError::NoChain(format!("no decomposable crossing for {m} and {n}")))?;
        let mut chain = same_matrix_chain(layout, m, &p, ord)?;
        chain.extend(same_matrix_chain(layout, &q, n, ord)?);
        chain
    };
    let steps = chain
        .windows(2)
        .map(|w| step_between(layout, &w[0], &w[1], ord).ok_or_else(|| SpairError::NoChain(format!("link {} to {} does not decompose", w[0], w[1]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ChainCertificate { chain, steps })
}

fn leading_monomial(p: &Polynomial, ord: &ConsistentOrder) -> Option<Monomial> {
    p.leading_monomial(ord).ok()
}

/// Independent re-check of a certificate by full expansion.
pub fn verify_chain(layout: &Layout, cert: &ChainCertificate, ord: &ConsistentOrder) -> bool {
    if cert.chain.is_empty() || cert.steps.len() + 1 != cert.chain.len() {
        return false;
    }
    let polys: Vec<Polynomial> = cert.chain.iter().map(|m| expand_minor(layout, m)).collect();
    let Some(lms) = polys.iter().map(|p| leading_monomial(p, ord)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let l = lms[0].lcm(&lms[lms.len() - 1]);
    if !lms.iter().all(|lm| lm.divides(&l)) {
        return false;
    }
    for (i, step) in cert.steps.iter().enumerate() {
        let (a, b) = (&polys[i], &polys[i + 1]);
        let Ok(s) = s_polynomial(a, b, ord) else {
            return false;
        };
        let link_lcm = lms[i].lcm(&lms[i + 1]);
        let mut sum = Polynomial::zero();
        for t in &step.terms {
            let Some((_, minor)) = t.pseudo.normalize() else {
                return false;
            };
            if minor.size() != layout.spec().ranks[minor.vertex] + 1 {
                return false;
            }
            let e = t.expand(layout);
            match leading_monomial(&e, ord) {
                Some(lm) if ord.cmp_ranked(&lm, &link_lcm) == Ordering::Less => {}
                _ => return false,
            }
            sum += &e;
        }
        if sum != s {
            return false;
        }
    }
    true
}

impl ChainCertificate {
    pub fn render(&self, layout: &Layout) -> String {
        let mut out = String::from("chain");
        for m in &self.chain {
            let _ = write!(out, " {m}");
        }
        out.push('\n');
        for (i, step) in self.steps.iter().enumerate() {
            let _ = write!(out, "step {}:", i + 1);
            for t in &step.terms {
                let sign = if t.sign < 0 { '-' } else { '+' };
                let cof = if t.cofactor.is_one() { "1".to_string() } else { crate::poly::render_monomial(&t.cofactor, layout) };
                let _ = write!(out, " [{sign} {cof} {}]", t.pseudo);
            }
            out.push('\n');
        }
        out
    }
}

/// Inverse of [`ChainCertificate::render`].
pub fn parse_certificate(layout: &Layout, text: &str) -> Result<ChainCertificate, SpairError> {
    let err = |m: String| SpairError::Parse(m);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let head = lines.next().ok_or_else(|| err("empty certificate".into()))?;
    let rest = head.strip_prefix("chain").ok_or_else(|| err("first line must start with 'chain'".into()))?;
    let chain = rest
        .split_whitespace()
        .map(|s| MinorRef::parse(layout, s).map_err(|e| err(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut steps = Vec::new();
    for (idx, line) in lines.enumerate() {
        let (label, body) = line.split_once(':').ok_or_else(|| err(format!("bad step line '{line}'")))?;
        if label.trim() != format!("step {}", idx + 1) {
            return Err(err(format!("expected 'step {}', found '{}'", idx + 1, label.trim())));
        }
        let mut terms = Vec::new();
        let mut body = body.trim();
        while !body.is_empty() {
            let inner = body.strip_prefix('[').ok_or_else(|| err(format!("expected '[' in '{body}'")))?.trim_start();
            // Variable names contain brackets; only the pseudominor is bracket-free.
            let (sign, after) = inner.split_once(' ').ok_or_else(|| err(format!("bad term '{inner}'")))?;
            let (cof, after) = after.trim_start().split_once(' ').ok_or_else(|| err(format!("bad term '{inner}'")))?;
            let (pm, tail) = after.split_once(']').ok_or_else(|| err("unclosed '['".into()))?;
            let pm = pm.trim();
            body = tail.trim_start();
            let sign = match sign {
                "+" => 1,
                "-" => -1,
                _ => return Err(err(format!("bad sign '{sign}'"))),
            };
            let cofactor = if cof == "1" {
                Monomial::one()
            } else {
                let p = parse_polynomial(cof, &|n: &str| layout.var_by_name(n)).map_err(|e| err(e.to_string()))?;
                match p.terms().collect::<Vec<_>>()[..] {
                    [(m, c)] if crate::poly::Coeff::is_one(c) => m.clone(),
                    _ => return Err(err(format!("cofactor '{cof}' is not a monomial"))),
                }
            };
            let pseudo = PseudoMinorRef::parse(layout, pm).map_err(|e| err(e.to_string()))?;
            terms.push(DecompTerm { sign, cofactor, pseudo });
        }
        steps.push(Step { terms });
    }
    Ok(ChainCertificate { chain, steps })
}
