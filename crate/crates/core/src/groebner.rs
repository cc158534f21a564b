//! Direct verification: Buchberger's S-pair criterion, initial ideals,
//! membership and a textbook completion used as an independent oracle.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::poly::{s_polynomial, Coeff, DivisorSet, Monomial, OrderSpec, PolyError, Polynomial, VarNames};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CheckOptions {
    pub coprime_skip: bool,
    pub fail_fast: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { coprime_skip: true, fail_fast: false }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairOutcome<C> {
    Skip,
    Zero,
    Fail(Polynomial<C>),
}

/// Result of checking every unordered generator pair; pairs appear in
/// index order `(0,1), (0,2), …, (1,2), …`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport<C> {
    pub generators: usize,
    pub total_pairs: usize,
    pub skipped_coprime: usize,
    pub reduced_to_zero: usize,
    pub failures: Vec<((usize, usize), Polynomial<C>)>,
    pub outcomes: Vec<((usize, usize), PairOutcome<C>)>,
    /// Every cofactor coefficient met during reduction was an integer.
    pub integral_cofactors: bool,
}

impl<C: Coeff> CheckReport<C> {
    pub fn is_groebner(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} generators, {} pairs, {} skipped (coprime), {} reduced to zero, {} failures: {}",
            self.generators,
            self.total_pairs,
            self.skipped_coprime,
            self.reduced_to_zero,
            self.failures.len(),
            if self.is_groebner() { "Groebner basis" } else { "not a Groebner basis" }
        )
    }

    /// One `pair <i> <j> {skip|zero|FAIL <poly>}` line per pair, 1-based.
    pub fn listing(&self, ord: &OrderSpec, names: &dyn VarNames) -> String {
        let mut s = String::new();
        for ((i, j), o) in &self.outcomes {
            let tail = match o {
                PairOutcome::Skip => "skip".to_string(),
                PairOutcome::Zero => "zero".to_string(),
                PairOutcome::Fail(p) => format!("FAIL {}", p.render(ord, names)),
            };
            let _ = writeln!(s, "pair {} {} {}", i + 1, j + 1, tail);
        }
        s
    }
}

fn pair_at(n: usize, mut idx: usize) -> (usize, usize) {
    let mut i = 0;
    while idx >= n - 1 - i {
        idx -= n - 1 - i;
        i += 1;
    }
    (i, i + 1 + idx)
}

/// Buchberger's criterion over all unordered pairs. Pairs are evaluated in
/// parallel on the current rayon pool; the report depends only on the input.
pub fn buchberger_check<C: Coeff>(gens: &[Polynomial<C>], ord: &OrderSpec, opts: CheckOptions) -> Result<CheckReport<C>, PolyError> {
    let divisors = DivisorSet::new(gens, ord)?;
    let n = gens.len();
    let total = n * n.saturating_sub(1) / 2;
    let eval = |idx: usize| -> ((usize, usize), PairOutcome<C>, bool) {
        let (i, j) = pair_at(n, idx);
        let (li, lj) = (divisors.leading_term(i), divisors.leading_term(j));
        if opts.coprime_skip && li.mono.is_coprime(&lj.mono) {
            return ((i, j), PairOutcome::Skip, true);
        }
        let s = s_polynomial(&gens[i], &gens[j], ord).expect("nonzero generators");
        let red = divisors.reduce(&s);
        let integral = red.used.iter().all(|(t, _)| t.coeff.is_integral());
        let outcome = if red.remainder.is_zero() { PairOutcome::Zero } else { PairOutcome::Fail(red.remainder) };
        ((i, j), outcome, integral)
    };
    let mut results = Vec::with_capacity(total);
    if opts.fail_fast {
        // Chunked so that the cut-off is the first failing pair in index order.
        let chunk = 256;
        let mut start = 0;
        while start < total {
            let end = (start + chunk).min(total);
            let part: Vec<_> = (start..end).into_par_iter().map(eval).collect();
            let first_fail = part.iter().position(|r| matches!(r.1, PairOutcome::Fail(_)));
            match first_fail {
                Some(k) => {
                    results.extend(part.into_iter().take(k + 1));
                    break;
                }
                None => results.extend(part),
            }
            start = end;
        }
    } else {
        results = (0..total).into_par_iter().map(eval).collect();
    }
    let mut report = CheckReport {
        generators: n,
        total_pairs: results.len(),
        skipped_coprime: 0,
        reduced_to_zero: 0,
        failures: Vec::new(),
        outcomes: Vec::with_capacity(results.len()),
        integral_cofactors: true,
    };
    for (pair, outcome, integral) in results {
        report.integral_cofactors &= integral;
        match &outcome {
            PairOutcome::Skip => report.skipped_coprime += 1,
            PairOutcome::Zero => report.reduced_to_zero += 1,
            PairOutcome::Fail(p) => report.failures.push((pair, p.clone())),
        }
        report.outcomes.push((pair, outcome));
    }
    Ok(report)
}

/// Minimal generators of the monomial ideal spanned by the leading monomials.
pub fn initial_ideal_gens<C: Coeff>(gens: &[Polynomial<C>], ord: &OrderSpec) -> Result<Vec<Monomial>, PolyError> {
    let lms: Vec<Monomial> = gens.iter().map(|g| g.leading_monomial(ord)).collect::<Result<_, _>>()?;
    Ok(minimalize(lms))
}

fn minimalize(mut lms: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    lms.sort_by_key(|m| m.degree());
    for m in lms {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

pub fn is_squarefree(monos: &[Monomial]) -> bool {
    monos.iter().all(Monomial::is_squarefree)
}

/// A generator list that passed [`buchberger_check`] under `ord`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<'a, C> {
    gens: &'a [Polynomial<C>],
    ord: &'a OrderSpec,
}

impl<'a, C: Coeff> GroebnerBasis<'a, C> {
    /// Runs the full check; refuses the list when any S-pair fails.
    pub fn verify(gens: &'a [Polynomial<C>], ord: &'a OrderSpec) -> Result<Self, CheckReport<C>> {
        let report = buchberger_check(gens, ord, CheckOptions::default()).map_err(|_| CheckReport {
            generators: gens.len(),
            total_pairs: 0,
            skipped_coprime: 0,
            reduced_to_zero: 0,
            failures: Vec::new(),
            outcomes: Vec::new(),
            integral_cofactors: true,
        })?;
        if report.is_groebner() && gens.iter().all(|g| !g.is_zero()) {
            Ok(GroebnerBasis { gens, ord })
        } else {
            Err(report)
        }
    }

    pub fn gens(&self) -> &[Polynomial<C>] {
        self.gens
    }

    pub fn normal_form(&self, f: &Polynomial<C>) -> Polynomial<C> {
        DivisorSet::new(self.gens, self.ord).expect("verified basis").remainder(f)
    }
}

/// Membership test, available only for a verified basis.
pub fn ideal_membership<C: Coeff>(f: &Polynomial<C>, basis: &GroebnerBasis<'_, C>) -> bool {
    basis.normal_form(f).is_zero()
}

/// Textbook Buchberger completion with coprime skip; pairs are processed in
/// insertion order and nonzero remainders are appended.
pub fn buchberger_complete<C: Coeff>(gens: &[Polynomial<C>], ord: &OrderSpec) -> Result<Vec<Polynomial<C>>, PolyError> {
    let mut basis: Vec<Polynomial<C>> = gens.to_vec();
    let mut leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(ord)).collect::<Result<_, _>>()?;
    let mut queue: std::collections::VecDeque<(usize, usize)> = std::collections::VecDeque::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.push_back((i, j));
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let r = DivisorSet::new(&basis, ord)?.remainder(&s);
        if r.is_zero() {
            continue;
        }
        let k = basis.len();
        leads.push(r.leading_monomial(ord)?);
        basis.push(r);
        for i in 0..k {
            queue.push_back((i, k));
        }
    }
    Ok(basis)
}
