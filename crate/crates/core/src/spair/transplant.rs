use super::{analyze, DefectKind, Frame, SPairAnalysis, SpairError, Violation, Defect};
use crate::minors::MinorRef;
use crate::poly::VarId;

fn position(list: &[usize], i: usize) -> usize {
    list.iter().position(|&x| x == i).expect("index lies in the list")
}

/// Smallest list position after `from` holding an incidence.
fn next_incidence(a: &SPairAnalysis<'_>, list: &[usize], from: usize) -> Option<usize> {
    (from + 1..list.len()).find(|&w| a.is_incidence(list[w]))
}

fn build(a: &SPairAnalysis<'_>, vertex: usize, parts: &[(&[usize], std::ops::Range<usize>)]) -> Result<MinorRef, SpairError> {
    let diag: Vec<VarId> = parts.iter().flat_map(|(list, range)| list[range.clone()].iter().map(|&i| a.points[i])).collect();
    MinorRef::from_diagonal(a.layout, vertex, &diag).ok_or_else(|| {
        let names: Vec<String> = diag.iter().map(|&v| a.layout.var_name(v)).collect();
        SpairError::NotAMinor(names.join("*"))
    })
}

/// The minor `P` obtained by moving a run of `N`'s leading variables into `M`
/// (or the reverse), so that `d(M,P) + d(P,N) = d(M,N)` with both sides smaller.
pub fn transplant(a: &SPairAnalysis<'_>, defect: &Defect) -> Result<MinorRef, SpairError> {
    let Frame::Matrix(vertex) = a.frame else {
        return Err(SpairError::CrossMatrix);
    };
    let fresh = a.defects()?;
    if !fresh.iter().any(|d| d == defect && d.maximal) {
        return Err(SpairError::NotMaximal("defect"));
    }
    let (ms, ns) = match defect.kind {
        DefectKind::I => (&a.s_m, &a.s_n),
        DefectKind::II => (&a.s_n, &a.s_m),
    };
    let (jm, sm) = (position(ms, defect.j), position(ms, defect.s));
    let (kn, rn) = (position(ns, defect.k), position(ns, defect.r));
    let w1 = next_incidence(a, ms, jm).expect("defect has a later incidence");
    let w2 = next_incidence(a, ns, kn).expect("defect has a later incidence");
    let y1 = sm.min(w1) - jm;
    let y2 = rn.min(w2) - kn;
    if y1 <= y2 {
        build(a, vertex, &[(ms, 0..jm), (ns, kn..kn + y1), (ms, jm + y1..ms.len())])
    } else {
        build(a, vertex, &[(ns, 0..kn), (ms, jm..jm + y2), (ns, kn + y2..ns.len())])
    }
}

/// Violations `(i, j, k)` with `k` the first incidence after both `i` (in
/// `S_M`) and `j` (in `S_N`), and no other violation through `k` weakly
/// before both. The lexicographically least `(i, j)` is returned.
pub fn maximal_cross_violation(a: &SPairAnalysis<'_>) -> Option<Violation> {
    let all = a.violations();
    all.iter()
        .copied()
        .filter(|v| {
            let jm = position(&a.s_m, v.i);
            let kn = position(&a.s_n, v.j);
            let first_after = next_incidence(a, &a.s_m, jm).map(|w| a.s_m[w]) == Some(v.k)
                && next_incidence(a, &a.s_n, kn).map(|w| a.s_n[w]) == Some(v.k);
            let alone = !all.iter().any(|o| o.k == v.k && o.i <= v.i && o.j <= v.j && (o.i, o.j) != (v.i, v.j));
            first_after && alone
        })
        .min_by_key(|v| (v.i, v.j))
}

/// The minor of `M`'s matrix whose leading term replaces `M`'s run before the
/// incidence by the matching run of `N`.
pub fn cross_transplant(a: &SPairAnalysis<'_>, v: &Violation) -> Result<MinorRef, SpairError> {
    if matches!(a.frame, Frame::Matrix(_)) {
        return Err(SpairError::NoChain("cross transplant needs minors of two different matrices".into()));
    }
    if maximal_cross_violation(a).as_ref() != Some(v) {
        return Err(SpairError::NotMaximal("violation"));
    }
    let jm = position(&a.s_m, v.i);
    let kn = position(&a.s_n, v.j);
    let w1 = position(&a.s_m, v.k);
    let w2 = position(&a.s_n, v.k);
    if w1 - jm > w2 - kn {
        return Err(SpairError::SwapRoles);
    }
    build(a, a.m.vertex, &[(&a.s_m, 0..jm), (&a.s_n, kn..kn + (w1 - jm)), (&a.s_m, w1..a.s_m.len())])
}

/// Convenience wrapper used by the chain builder and the CLI.
pub(super) fn transplant_pair(
    layout: &crate::quiver::Layout,
    m: &MinorRef,
    n: &MinorRef,
    ord: &crate::quiver::ConsistentOrder,
) -> Result<Option<MinorRef>, SpairError> {
    let a = analyze(layout, m, n, ord);
    let defects = a.defects()?;
    let pick = |kind: DefectKind| defects.iter().filter(|d| d.kind == kind && d.maximal).min_by_key(|d| (d.j, d.k)).copied();
    match pick(DefectKind::I).or_else(|| pick(DefectKind::II)) {
        Some(d) => transplant(&a, &d).map(Some),
        None => Ok(None),
    }
}
