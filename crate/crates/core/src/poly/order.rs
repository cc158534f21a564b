use std::cmp::Ordering;

use super::monomial::{Monomial, VarId};
use super::PolyError;

/// Lexicographic monomial order given by a ranking of the variables.
/// Rank 0 is the largest variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderSpec {
    rank: Vec<u32>,
    identity: bool,
}

/// Sort key whose derived ordering is the lex order of the monomial:
/// entries `(u32::MAX - rank, exponent)` with the largest variable first.
pub type MonoKey = Vec<(u32, u32)>;

impl OrderSpec {
    /// The order in which variable `i` has rank `i`.
    pub fn identity(nvars: usize) -> Self {
        OrderSpec { rank: (0..nvars as u32).collect(), identity: true }
    }

    /// `rank[v]` is the rank of variable `v`; must be a permutation of `0..n`.
    pub fn from_ranks(rank: Vec<u32>) -> Result<Self, PolyError> {
        let n = rank.len();
        let mut seen = vec![false; n];
        for &r in &rank {
            let r = r as usize;
            if r >= n || seen[r] {
                return Err(PolyError::BadRanking);
            }
            seen[r] = true;
        }
        let identity = rank.iter().enumerate().all(|(i, &r)| i as u32 == r);
        Ok(OrderSpec { rank, identity })
    }

    /// Variables listed from largest to smallest.
    pub fn from_sequence(vars: &[VarId]) -> Result<Self, PolyError> {
        let mut rank = vec![u32::MAX; vars.len()];
        for (r, v) in vars.iter().enumerate() {
            let slot = rank.get_mut(v.index()).ok_or(PolyError::BadRanking)?;
            *slot = r as u32;
        }
        Self::from_ranks(rank)
    }

    pub fn nvars(&self) -> usize {
        self.rank.len()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    pub fn rank(&self, v: VarId) -> Result<u32, PolyError> {
        self.rank.get(v.index()).copied().ok_or(PolyError::UnrankedVariable(v))
    }

    pub fn is_ranked(&self, m: &Monomial) -> bool {
        m.vars().all(|v| v.index() < self.rank.len())
    }

    /// Compares two variables: `Greater` when `a` is the larger one.
    pub fn var_cmp(&self, a: VarId, b: VarId) -> Ordering {
        self.rank[b.index()].cmp(&self.rank[a.index()])
    }

    pub fn key(&self, m: &Monomial) -> MonoKey {
        let mut k: MonoKey = m.pairs().iter().map(|&(v, e)| (u32::MAX - self.rank[v.index()], e)).collect();
        if !self.identity {
            k.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
        }
        k
    }

    /// Lex comparison; every variable must be ranked.
    pub fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        for v in a.vars().chain(b.vars()) {
            self.rank(v)?;
        }
        Ok(self.cmp_ranked(a, b))
    }

    /// Lex comparison for monomials known to be ranked.
    pub fn cmp_ranked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.identity {
            // Identity ranking: VarId order is rank order, no key needed.
            let (pa, pb) = (a.pairs(), b.pairs());
            for (x, y) in pa.iter().zip(pb.iter()) {
                if x.0 != y.0 {
                    return y.0.cmp(&x.0);
                }
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
            return pa.len().cmp(&pb.len());
        }
        self.key(a).cmp(&self.key(b))
    }
}
