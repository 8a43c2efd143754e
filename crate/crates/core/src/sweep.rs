//! Grid scans over `(a, b, q, q')`. Each scan takes a [`Strategy`]; results
//! are always returned in lexicographic grid order.

use crate::arithmetic::{
    classify, cohomology_criterion, counterexample_pair, diffeo_criterion, rigidity_holds,
    ClassificationVerdict,
};
use crate::cohomology::{lemma1_check, total_sw_class, RingPresentation};
use crate::error::Result;
use crate::gf2poly::LinearSubstitution;
use crate::oracle::rings_isomorphic_bruteforce_with;
use crate::Strategy;

/// Order-preserving map, fanned out over the rayon pool when asked to.
pub fn map_ordered<T, R, F>(items: Vec<T>, strategy: Strategy, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

fn shapes(a_max: u32, b_max: u32) -> Vec<(u32, u32)> {
    (1..=a_max)
        .flat_map(|a| (1..=b_max).map(move |b| (a, b)))
        .collect()
}

fn presentations(a_max: u32, b_max: u32) -> Vec<RingPresentation> {
    shapes(a_max, b_max)
        .into_iter()
        .flat_map(|(a, b)| (0..=b).map(move |q| RingPresentation::new(a, b, q).expect("in range")))
        .collect()
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub cases: usize,
    pub isomorphic_cases: usize,
    /// Oracle verdict differs from the congruence criterion.
    pub mismatches: Vec<ClassificationVerdict>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs the brute-force oracle on every `(a, b, q, q')` with `a <= a_max`,
/// `b <= b_max` (or on the single shape `only`) and compares it with
/// [`cohomology_criterion`].
pub fn verify_cohomology_theorem(
    a_max: u32,
    b_max: u32,
    only: Option<(u32, u32)>,
    strategy: Strategy,
) -> Result<VerifyReport> {
    let grid: Vec<(u32, u32, u32, u32)> = only
        .map_or_else(|| shapes(a_max, b_max), |s| vec![s])
        .into_iter()
        .flat_map(|(a, b)| {
            (0..=b).flat_map(move |q| (0..=b).map(move |qp| (a, b, q, qp)))
        })
        .collect();
    let verdicts = map_ordered(grid, strategy, |&(a, b, q, qp)| -> Result<ClassificationVerdict> {
        let mut v = classify(a as u64, b as u64, q as u64, qp as u64)?;
        let src = RingPresentation::new(a, b, qp)?;
        let dst = RingPresentation::new(a, b, q)?;
        v.oracle = Some(rings_isomorphic_bruteforce_with(&src, &dst, Strategy::Sequential)?.witness);
        Ok(v)
    });
    let mut report = VerifyReport::default();
    for v in verdicts {
        let v = v?;
        report.cases += 1;
        if v.oracle_isomorphic() == Some(true) {
            report.isomorphic_cases += 1;
        }
        if !v.oracle_agrees() {
            report.mismatches.push(v);
        }
    }
    Ok(report)
}

/// Presentations with `0 < q < b` where `y^a` or `(x+y)^a` vanishes.
pub fn lemma1_sweep(a_max: u32, b_max: u32, strategy: Strategy) -> Vec<RingPresentation> {
    let grid: Vec<_> = presentations(a_max, b_max)
        .into_iter()
        .filter(|p| 0 < p.q() && p.q() < p.b())
        .collect();
    map_ordered(grid, strategy, |p| (lemma1_check(p) != (true, true)).then_some(*p))
        .into_iter()
        .flatten()
        .collect()
}

/// Presentations where `x -> x, y -> x+y` fails to carry the total
/// Stiefel-Whitney class of `(a, b, q)` to that of `(a, b, b-q)`.
pub fn sw_swap_sweep(a_max: u32, b_max: u32, strategy: Strategy) -> Vec<RingPresentation> {
    map_ordered(presentations(a_max, b_max), strategy, |p| {
        let image = total_sw_class(p).substitute_into(&LinearSubstitution::SHEAR, &p.complement());
        (image != total_sw_class(&p.complement())).then_some(*p)
    })
    .into_iter()
    .flatten()
    .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyRow {
    pub a: u64,
    pub b: u64,
    pub rigidity_holds: bool,
    /// First `(q, q')` found by exhaustive scan with isomorphic rings and
    /// non-diffeomorphic manifolds.
    pub scanned_break: Option<(u64, u64)>,
    pub constructed: Option<(u64, u64)>,
}

impl DichotomyRow {
    pub fn consistent(&self) -> bool {
        self.rigidity_holds == self.scanned_break.is_none()
            && self.rigidity_holds == self.constructed.is_none()
    }
}

/// Compares [`rigidity_holds`] with an exhaustive scan of all pairs.
pub fn dichotomy_scan(a_max: u64, b_max: u64, strategy: Strategy) -> Result<Vec<DichotomyRow>> {
    let grid: Vec<(u64, u64)> = (1..=a_max)
        .flat_map(|a| (1..=b_max).map(move |b| (a, b)))
        .collect();
    map_ordered(grid, strategy, |&(a, b)| -> Result<DichotomyRow> {
        let mut scanned_break = None;
        'scan: for q in 0..=b {
            for qp in 0..=b {
                if cohomology_criterion(a, b, q, qp)? && !diffeo_criterion(a, b, q, qp)? {
                    scanned_break = Some((q, qp));
                    break 'scan;
                }
            }
        }
        Ok(DichotomyRow {
            a,
            b,
            rigidity_holds: rigidity_holds(a, b)?,
            scanned_break,
            constructed: counterexample_pair(a, b)?,
        })
    })
    .into_iter()
    .collect()
}

/// Verdicts for every `0 <= q <= q' <= b`, lexicographic in `(q, q')`.
pub fn table(a: u64, b: u64) -> Result<Vec<ClassificationVerdict>> {
    let mut out = Vec::new();
    for q in 0..=b {
        for qp in q..=b {
            out.push(classify(a, b, q, qp)?);
        }
    }
    Ok(out)
}

/// The constructed counterexample for every `(a, b)` in range where rigidity fails.
pub fn counterexamples(a_max: u64, b_max: u64) -> Result<Vec<ClassificationVerdict>> {
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max {
            if let Some((q, qp)) = counterexample_pair(a, b)? {
                out.push(classify(a, b, q, qp)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_verify() {
        let r = verify_cohomology_theorem(1, 1, None, Strategy::Sequential).unwrap();
        assert_eq!(r.cases, 4);
        assert!(r.passed());
    }

    #[test]
    fn verify_counts() {
        let r = verify_cohomology_theorem(2, 3, None, Strategy::Parallel).unwrap();
        // Σ_b (b+1)^2 over b = 1..3, for each of 2 values of a
        assert_eq!(r.cases, 2 * (4 + 9 + 16));
        assert!(r.passed());
        let only = verify_cohomology_theorem(9, 9, Some((2, 3)), Strategy::Parallel).unwrap();
        assert_eq!(only.cases, 16);
    }

    #[test]
    fn table_counts() {
        assert_eq!(table(2, 2).unwrap().len(), 6);
        let t = table(10, 17).unwrap();
        assert_eq!(t.len(), 18 * 19 / 2);
        assert!(t.iter().any(|v| v.breaks_rigidity()));
        assert!(!table(9, 100).unwrap().iter().any(|v| v.breaks_rigidity()));
    }

    #[test]
    fn counterexample_listing() {
        let c = counterexamples(10, 17).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].a, c[0].b, c[0].q, c[0].q_prime), (10, 17, 0, 16));
        assert!(counterexamples(9, 1000).unwrap().is_empty());
        assert!(counterexamples(10, 32)
            .unwrap()
            .iter()
            .any(|v| (v.a, v.b, v.q, v.q_prime) == (10, 32, 1, 17)));
    }

    #[test]
    fn ordered_map_matches() {
        let items: Vec<u64> = (0..1000).collect();
        let s = map_ordered(items.clone(), Strategy::Sequential, |x| x * x);
        let p = map_ordered(items, Strategy::Parallel, |x| x * x);
        assert_eq!(s, p);
    }
}
