use std::fmt;

/// Index of one polynomial-ring variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Coefficient-free power product, stored as `(VarId, exponent)` pairs
/// sorted by `VarId` with every exponent positive. The empty product is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut v: Vec<(VarId, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: Vec<(VarId, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn product_of(vars: impl IntoIterator<Item = VarId>) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|p| p.0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|p| p.1 == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a.max(b))
    }

    fn merge(&self, other: &Monomial, op: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push((a[i].0, op(a[i].1, 0)));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, op(0, b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, op(a[i].1, b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().map(|p| (p.0, op(p.1, 0))));
        out.extend(b[j..].iter().map(|p| (p.0, op(0, p.1))));
        out.retain(|p| p.1 > 0);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        let b = &other.0;
        for &(v, e) in &self.0 {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `self / divisor`, or `None` when the division is not exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.len());
        for &(v, e) in &self.0 {
            let d = divisor.exponent(v);
            if e > d {
                out.push((v, e - d));
            }
        }
        Some(Monomial(out))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(v, e)| (VarId(v), e)))
    }

    #[test]
    fn arithmetic() {
        let a = m(&[(0, 1), (2, 2)]);
        let b = m(&[(2, 1), (3, 1)]);
        assert_eq!(a.mul(&b), m(&[(0, 1), (2, 3), (3, 1)]));
        assert_eq!(a.lcm(&b), m(&[(0, 1), (2, 2), (3, 1)]));
        assert!(!a.divides(&b));
        assert!(m(&[(2, 1)]).divides(&a));
        assert_eq!(a.div(&m(&[(2, 1)])), Some(m(&[(0, 1), (2, 1)])));
        assert_eq!(a.div(&b), None);
        assert!(!a.is_coprime(&b));
        assert!(m(&[(1, 1)]).is_coprime(&a));
        assert!(Monomial::one().divides(&a));
        assert_eq!(m(&[(4, 0)]), Monomial::one());
        assert_eq!(m(&[(1, 1), (1, 2)]), m(&[(1, 3)]));
        assert_eq!(a.degree(), 3);
        assert!(!a.is_squarefree());
    }
}
