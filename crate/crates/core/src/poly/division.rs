use std::collections::BTreeMap;

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::{MonoKey, OrderSpec};
use super::polynomial::{Polynomial, Term};
use super::PolyError;

/// `(L/LT(f))·f − (L/LT(g))·g` with `L = lcm(LM f, LM g)`.
pub fn s_polynomial<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>, ord: &OrderSpec) -> Result<Polynomial<C>, PolyError> {
    let lf = f.leading_term(ord)?;
    let lg = g.leading_term(ord)?;
    Ok(s_polynomial_with(f, &lf, g, &lg))
}

pub(crate) fn s_polynomial_with<C: Coeff>(f: &Polynomial<C>, lf: &Term<C>, g: &Polynomial<C>, lg: &Term<C>) -> Polynomial<C> {
    let l = lf.mono.lcm(&lg.mono);
    let one = lf.coeff.one_like();
    let a = f.scale(&one.div(&lf.coeff), &l.div(&lf.mono).expect("lcm divisible"));
    let b = g.scale(&one.div(&lg.coeff), &l.div(&lg.mono).expect("lcm divisible"));
    a.sub(&b)
}

/// Outcome of multivariate division: `f = Σ cofactor·G[index] + remainder`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduction<C> {
    pub remainder: Polynomial<C>,
    pub used: Vec<(Term<C>, usize)>,
}

struct Divisor<C> {
    lead: Term<C>,
    /// Non-leading terms, reused by every reduction step.
    tail: Vec<(Monomial, C)>,
}

/// Divisor list with leading terms precomputed under a fixed order.
pub struct DivisorSet<'a, C> {
    ord: &'a OrderSpec,
    divisors: Vec<Divisor<C>>,
}

impl<'a, C: Coeff> DivisorSet<'a, C> {
    pub fn new(gens: &[Polynomial<C>], ord: &'a OrderSpec) -> Result<Self, PolyError> {
        let mut divisors = Vec::with_capacity(gens.len());
        for g in gens {
            let lead = g.leading_term(ord)?;
            let tail = g.terms().filter(|(m, _)| **m != lead.mono).map(|(m, c)| (m.clone(), c.clone())).collect();
            divisors.push(Divisor { lead, tail });
        }
        Ok(DivisorSet { ord, divisors })
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn leading_term(&self, i: usize) -> &Term<C> {
        &self.divisors[i].lead
    }

    fn first_divisor(&self, m: &Monomial) -> Option<usize> {
        self.divisors.iter().position(|d| d.lead.mono.divides(m))
    }

    /// Division always reducing the largest reducible term by the
    /// lowest-index generator whose leading monomial divides it.
    pub fn reduce(&self, f: &Polynomial<C>) -> Reduction<C> {
        self.reduce_inner(f, true)
    }

    /// As [`DivisorSet::reduce`] without recording cofactors.
    pub fn remainder(&self, f: &Polynomial<C>) -> Polynomial<C> {
        self.reduce_inner(f, false).remainder
    }

    fn reduce_inner(&self, f: &Polynomial<C>, record: bool) -> Reduction<C> {
        let ord = self.ord;
        let mut work: BTreeMap<MonoKey, (Monomial, C)> =
            f.terms().map(|(m, c)| (ord.key(m), (m.clone(), c.clone()))).collect();
        let mut remainder = Polynomial::zero();
        let mut used = Vec::new();
        while let Some((_, (mono, coeff))) = work.pop_last() {
            let Some(i) = self.first_divisor(&mono) else {
                remainder.add_term(coeff, mono);
                continue;
            };
            let d = &self.divisors[i];
            let factor = coeff.div(&d.lead.coeff);
            let shift = mono.div(&d.lead.mono).expect("divisibility checked");
            for (tm, tc) in &d.tail {
                let m = tm.mul(&shift);
                let c = tc.mul(&factor).neg();
                let key = ord.key(&m);
                match work.get_mut(&key) {
                    Some(slot) => {
                        let s = slot.1.add(&c);
                        if s.is_zero() {
                            work.remove(&key);
                        } else {
                            slot.1 = s;
                        }
                    }
                    None => {
                        work.insert(key, (m, c));
                    }
                }
            }
            if record {
                used.push((Term::new(factor, shift), i));
            }
        }
        Reduction { remainder, used }
    }
}

/// Reduces `f` by `gens`; see [`DivisorSet::reduce`] for the tie-break rule.
pub fn reduce<C: Coeff>(f: &Polynomial<C>, gens: &[Polynomial<C>], ord: &OrderSpec) -> Result<Reduction<C>, PolyError> {
    Ok(DivisorSet::new(gens, ord)?.reduce(f))
}
