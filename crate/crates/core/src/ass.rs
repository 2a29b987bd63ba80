//! Associated primes of monomial quotients and subquotients, and the prime
//! sequences attached to the Ratliff-Rush filtration.
//!
//! Two independent routes compute `Ass(R/V)`: the radicals of an irreducible
//! decomposition ([`ass_cyclic`]) and a bounded search for monomials whose
//! annihilator is prime ([`ass_ideal_subquotient`] with `U = R`).

use std::collections::BTreeSet;

use crate::closure::{check_nondegenerate, ChainLimits, Filtration};
use crate::decompose::{irreducible_decomposition, prime_data, MonomialPrime};
use crate::error::{AlgebraError, Result};
use crate::ideal::MonomialIdeal;
use crate::module::{MonomialSubmodule, QuotientPresentation};
use crate::monomial::{Monomial, VarSet};

pub type PrimeSet = BTreeSet<MonomialPrime>;

/// `Ass(R/M)` from the radicals of the irreducible components of `M`.
pub fn ass_cyclic(ideal: &MonomialIdeal) -> Result<PrimeSet> {
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal("associated primes"));
    }
    if ideal.is_zero() {
        return Ok(BTreeSet::from([MonomialPrime::zero(ideal.dim())]));
    }
    let mut out = BTreeSet::new();
    for q in irreducible_decomposition(ideal)? {
        let radical = prime_data(&q)?.radical;
        let vars = radical
            .gens()
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc.union(g.support()));
        out.insert(MonomialPrime::new(ideal.dim(), vars));
    }
    Ok(out)
}

/// If `(V : m)` is a prime ideal, returns it. `m ∉ V` is not assumed.
pub fn prime_annihilator(v: &MonomialIdeal, m: &Monomial) -> Option<MonomialPrime> {
    let dim = v.dim();
    if v.is_zero() {
        return Some(MonomialPrime::zero(dim));
    }
    let mut s = VarSet::EMPTY;
    for j in 0..dim {
        let bumped = m.with_exponent(j, m.exponent(j) + 1);
        if v.contains_mono(&bumped) {
            s = s.union(VarSet::from_indices([j]));
        }
    }
    if s.is_empty() {
        return None;
    }
    // (V : m) = P_S exactly when every generator of (V : m) involves S.
    let all_meet = v.gens().iter().all(|g| g.colon(m).support().intersects(s));
    all_meet.then(|| MonomialPrime::new(dim, s))
}

fn check_subquotient(u: &MonomialIdeal, v: &MonomialIdeal) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    if !v.is_subset(u)? {
        return Err(AlgebraError::NotContained("V must be contained in U"));
    }
    if u == v {
        return Err(AlgebraError::EmptyModule);
    }
    Ok(())
}

/// Associated primes of `U/V` with one witness monomial each: a monomial
/// `m ∈ U \ V` with `(V : m)` equal to the prime.
///
/// Candidates range over the box `0 <= m_j <= b_j` with `b_j` the largest
/// exponent of `x_j` in `V`, since `(V : m)` only depends on `min(m, b)`. A
/// candidate at the top of the box in coordinate `j` stands for every larger
/// exponent there, so its membership in `U` is tested after raising that
/// exponent to the largest exponent occurring in `U`.
pub fn ass_witnesses(u: &MonomialIdeal, v: &MonomialIdeal) -> Result<Vec<(MonomialPrime, Monomial)>> {
    check_subquotient(u, v)?;
    let dim = v.dim();
    let bound = v.max_exponents();
    let ubound = u.max_exponents();
    let mut found: Vec<(MonomialPrime, Monomial)> = Vec::new();
    let mut cur = vec![0u32; dim];
    loop {
        let rep = Monomial::new(
            cur.iter()
                .enumerate()
                .map(|(j, &e)| if e == bound[j] { e.max(ubound[j]) } else { e }),
        );
        if u.contains_mono(&rep) && !v.contains_mono(&rep) {
            if let Some(p) = prime_annihilator(v, &rep) {
                if !found.iter().any(|(q, _)| *q == p) {
                    found.push((p, rep));
                }
            }
        }
        // odometer over the box
        let mut j = 0;
        loop {
            if j == dim {
                found.sort();
                return Ok(found);
            }
            if cur[j] < bound[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

/// `Ass(U/V)` for monomial ideals `V ⊊ U`, by colon search.
pub fn ass_ideal_subquotient(u: &MonomialIdeal, v: &MonomialIdeal) -> Result<PrimeSet> {
    Ok(ass_witnesses(u, v)?.into_iter().map(|(p, _)| p).collect())
}

/// Re-checks that `m` witnesses `p ∈ Ass(U/V)`.
pub fn verify_witness(u: &MonomialIdeal, v: &MonomialIdeal, p: &MonomialPrime, m: &Monomial) -> bool {
    u.contains_mono(m) && !v.contains_mono(m) && v.colon_monomial(m).ok() == Some(p.to_ideal())
}

/// `Ass(U/V)` for monomial submodules `V ⊊ U ⊆ F`, coordinate by coordinate.
pub fn ass_module_quotient(u: &MonomialSubmodule, v: &MonomialSubmodule) -> Result<PrimeSet> {
    if !v.is_subset(u)? {
        return Err(AlgebraError::NotContained("V must be contained in U"));
    }
    if u == v {
        return Err(AlgebraError::EmptyModule);
    }
    let mut out = BTreeSet::new();
    for (ui, vi) in u.coords().iter().zip(v.coords()) {
        if ui == vi {
            continue;
        }
        let part = if ui.is_unit() {
            ass_cyclic(vi)?
        } else {
            ass_ideal_subquotient(ui, vi)?
        };
        out.extend(part);
    }
    Ok(out)
}

/// A sequence of associated-prime sets indexed by `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssSequenceReport {
    /// `per_n[n - 1]` is the set at index `n`.
    pub per_n: Vec<PrimeSet>,
    /// Monotone over the non-degenerate indices.
    pub increasing: bool,
    pub stabilization_candidate: Option<u32>,
    pub stable_set: PrimeSet,
    /// A stabilization candidate exists and every closure used was certified.
    pub certified: bool,
    pub closure_certified: bool,
    /// Indices where the module whose primes are taken is zero.
    pub degenerate: Vec<u32>,
}

impl AssSequenceReport {
    fn build(per_n: Vec<PrimeSet>, degenerate: Vec<u32>, window: u32, closure_certified: bool) -> Self {
        let kept: Vec<&PrimeSet> = per_n
            .iter()
            .enumerate()
            .filter(|(i, _)| !degenerate.contains(&(*i as u32 + 1)))
            .map(|(_, s)| s)
            .collect();
        let increasing = kept.windows(2).all(|w| w[0].is_subset(w[1]));
        let last = per_n.last().cloned().unwrap_or_default();
        let mut start = per_n.len();
        while start > 0 && per_n[start - 1] == last {
            start -= 1;
        }
        let run = (per_n.len() - start) as u32;
        let stabilization_candidate = (run >= window.max(1)).then_some(start as u32 + 1);
        AssSequenceReport {
            certified: stabilization_candidate.is_some() && closure_certified,
            increasing,
            stabilization_candidate,
            stable_set: last,
            closure_certified,
            degenerate,
            per_n,
        }
    }

    /// Union of all sets in the sequence.
    pub fn union(&self) -> PrimeSet {
        self.per_n.iter().flatten().copied().collect()
    }
}

fn check_sequence_inputs(ideal: &MonomialIdeal, pres: &QuotientPresentation, n_max: u32) -> Result<()> {
    check_nondegenerate(ideal)?;
    if !pres.is_nonzero() {
        return Err(AlgebraError::Hypothesis("the module E is zero".into()));
    }
    if n_max < 2 {
        return Err(AlgebraError::InvalidArgument(format!(
            "n_max must be at least 2, got {n_max}"
        )));
    }
    Ok(())
}

/// `Ass(E / closure(I^n E))` for `n = 1..=n_max`.
pub fn ass_rr_sequence(
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    n_max: u32,
    limits: ChainLimits,
) -> Result<AssSequenceReport> {
    check_sequence_inputs(ideal, pres, n_max)?;
    let mut filt = Filtration::new(ideal.clone(), pres.clone(), limits)?;
    ass_rr_sequence_with(&mut filt, n_max)
}

pub fn ass_rr_sequence_with(filt: &mut Filtration, n_max: u32) -> Result<AssSequenceReport> {
    check_sequence_inputs(filt.ideal(), filt.presentation(), n_max)?;
    let full = filt.presentation().full();
    let mut per_n = Vec::new();
    let mut degenerate = Vec::new();
    for n in 1..=n_max {
        let v = filt.value(n)?;
        if v == full {
            degenerate.push(n);
            per_n.push(BTreeSet::new());
        } else {
            per_n.push(ass_module_quotient(&full, &v)?);
        }
    }
    Ok(AssSequenceReport::build(
        per_n,
        degenerate,
        filt.limits().window,
        filt.all_certified(),
    ))
}

/// `Ass(E / I^n E)` for `n = 1..=n_max`.
pub fn ass_power_sequence(
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    n_max: u32,
    window: u32,
) -> Result<AssSequenceReport> {
    check_sequence_inputs(ideal, pres, n_max)?;
    let full = pres.full();
    let mut per_n = Vec::new();
    let mut degenerate = Vec::new();
    for n in 1..=n_max {
        let v = pres.power_scale_preimage(ideal, n)?;
        if v == full {
            degenerate.push(n);
            per_n.push(BTreeSet::new());
        } else {
            per_n.push(ass_module_quotient(&full, &v)?);
        }
    }
    Ok(AssSequenceReport::build(per_n, degenerate, window, true))
}

/// `Ass(closure(I^n E) / closure(I^{n+1} E))` for `n = 1..=n_max`. Indices
/// where the two closures coincide contribute the empty set and are listed in
/// `degenerate`.
pub fn ass_successive_rr(
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    n_max: u32,
    limits: ChainLimits,
) -> Result<AssSequenceReport> {
    check_sequence_inputs(ideal, pres, n_max)?;
    let mut filt = Filtration::new(ideal.clone(), pres.clone(), limits)?;
    ass_successive_rr_with(&mut filt, n_max)
}

pub fn ass_successive_rr_with(filt: &mut Filtration, n_max: u32) -> Result<AssSequenceReport> {
    check_sequence_inputs(filt.ideal(), filt.presentation(), n_max)?;
    let mut per_n = Vec::new();
    let mut degenerate = Vec::new();
    for n in 1..=n_max {
        let u = filt.value(n)?;
        let v = filt.value(n + 1)?;
        if u == v {
            degenerate.push(n);
            per_n.push(BTreeSet::new());
        } else {
            per_n.push(ass_module_quotient(&u, &v)?);
        }
    }
    Ok(AssSequenceReport::build(
        per_n,
        degenerate,
        filt.limits().window,
        filt.all_certified(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corollary25Report {
    pub quotient: AssSequenceReport,
    pub successive: AssSequenceReport,
    /// `equal[n - 1]`: the two sets agree at index `n`.
    pub equal: Vec<bool>,
    /// Least `n0` with agreement on all of `[n0, n_max]`.
    pub n0: Option<u32>,
}

fn least_suffix_start(flags: &[bool]) -> Option<u32> {
    let tail = flags.iter().rev().take_while(|&&b| b).count();
    (tail > 0).then(|| (flags.len() - tail) as u32 + 1)
}

/// For `E = R`: compares `Ass(R / closure(I^n))` with
/// `Ass(closure(I^n) / closure(I^{n+1}))` over `n = 1..=n_max`.
pub fn corollary25_check(
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    n_max: u32,
    limits: ChainLimits,
) -> Result<Corollary25Report> {
    if pres.rank() != 1 || !pres.relations().is_zero() {
        return Err(AlgebraError::Hypothesis(
            "the stable-equality check applies to E = R only".into(),
        ));
    }
    let mut filt = Filtration::new(ideal.clone(), pres.clone(), limits)?;
    let quotient = ass_rr_sequence_with(&mut filt, n_max)?;
    let successive = ass_successive_rr_with(&mut filt, n_max)?;
    let equal: Vec<bool> = quotient
        .per_n
        .iter()
        .zip(&successive.per_n)
        .map(|(a, b)| a == b)
        .collect();
    Ok(Corollary25Report {
        n0: least_suffix_start(&equal),
        quotient,
        successive,
        equal,
    })
}

/// Whether `I` contains an `E`-regular element, i.e. lies in no associated
/// prime of `E`.
pub fn grade_positive(ideal: &MonomialIdeal, pres: &QuotientPresentation) -> Result<bool> {
    if !pres.is_nonzero() {
        return Err(AlgebraError::Hypothesis("the module E is zero".into()));
    }
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal("grade"));
    }
    let ass = ass_module_quotient(&pres.full(), pres.relations())?;
    Ok(!ass.iter().any(|p| p.contains_ideal(ideal)))
}

/// Whether the monomial `c` is a nonzerodivisor on `E`.
pub fn is_regular_element(c: &Monomial, pres: &QuotientPresentation) -> Result<bool> {
    if !pres.is_nonzero() {
        return Ok(true);
    }
    let ass = ass_module_quotient(&pres.full(), pres.relations())?;
    Ok(!ass.iter().any(|p| p.contains_monomial(c)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventualEqualityReport {
    /// `equal[n - 1]`: closure of `I^n E` equals `I^n E`.
    pub equal: Vec<bool>,
    pub n0: Option<u32>,
    pub certified: bool,
}

/// Least `n0 <= n_max` with `closure(I^n E) = I^n E` for all `n` in
/// `[n0, n_max]`. Requires `grade(I, E) > 0`.
pub fn eventual_equality_check(
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    n_max: u32,
    limits: ChainLimits,
) -> Result<EventualEqualityReport> {
    let mut filt = Filtration::new(ideal.clone(), pres.clone(), limits)?;
    eventual_equality_with(&mut filt, n_max)
}

pub fn eventual_equality_with(filt: &mut Filtration, n_max: u32) -> Result<EventualEqualityReport> {
    let ideal = filt.ideal().clone();
    let pres = filt.presentation().clone();
    if !grade_positive(&ideal, &pres)? {
        return Err(AlgebraError::Hypothesis("grade(I, E) = 0".into()));
    }
    let mut equal = Vec::new();
    for n in 1..=n_max {
        equal.push(filt.value(n)? == pres.power_scale_preimage(&ideal, n)?);
    }
    Ok(EventualEqualityReport {
        n0: least_suffix_start(&equal),
        equal,
        certified: filt.all_certified(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrodmannReport {
    /// Per `n`: the primes of `E / closure(I^n E)`, the index `n + s` of the
    /// ordinary power they are checked against, and whether they are contained
    /// in `Ass(E / I^{n+s} E)`.
    pub rows: Vec<(PrimeSet, u32, PrimeSet, bool)>,
    pub rr_stable: PrimeSet,
    pub power_stable: PrimeSet,
    pub included: bool,
}

/// Checks `Ass(E / closure(I^n E)) ⊆ Ass(E / I^{n+s} E)` for `n = 1..=n_max`,
/// where `s` is the first chain index at which the closure of `I^n E` was
/// reached; the closure equals `(I^{n+s} E : I^s)` there.
pub fn brodmann_inclusion(filt: &mut Filtration, n_max: u32) -> Result<BrodmannReport> {
    let rr = ass_rr_sequence_with(filt, n_max)?;
    let ideal = filt.ideal().clone();
    let pres = filt.presentation().clone();
    let full = pres.full();
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let res = filt.get(n)?;
        let s = res
            .chain
            .iter()
            .position(|t| *t == res.value)
            .expect("value is a chain term") as u32
            + 1;
        let v = pres.power_scale_preimage(&ideal, n + s)?;
        let power_ass = if v == full {
            BTreeSet::new()
        } else {
            ass_module_quotient(&full, &v)?
        };
        let rr_set = rr.per_n[n as usize - 1].clone();
        let inc = rr_set.is_subset(&power_ass);
        rows.push((rr_set, n + s, power_ass, inc));
    }
    let power_stable = rows.last().map(|r| r.2.clone()).unwrap_or_default();
    Ok(BrodmannReport {
        included: rows.iter().all(|r| r.3),
        rr_stable: rr.stable_set,
        power_stable,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i2(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens)
    }

    fn primes(dim: usize, sets: &[&[usize]]) -> PrimeSet {
        sets.iter()
            .map(|s| MonomialPrime::new(dim, VarSet::from_indices(s.iter().copied())))
            .collect()
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(ass_cyclic(&i2(&[[3, 0]])).unwrap(), primes(2, &[&[0]]));
        assert_eq!(ass_cyclic(&i2(&[[2, 0], [1, 1]])).unwrap(), primes(2, &[&[0], &[0, 1]]));
        assert_eq!(ass_cyclic(&i2(&[[1, 1]])).unwrap(), primes(2, &[&[0], &[1]]));
        assert_eq!(ass_cyclic(&MonomialIdeal::zero(2)).unwrap(), primes(2, &[&[]]));
        assert!(ass_cyclic(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn subquotient_examples() {
        for n in 1..4 {
            let u = i2(&[[n, 0]]);
            let v = i2(&[[n + 1, 0]]);
            assert_eq!(ass_ideal_subquotient(&u, &v).unwrap(), primes(2, &[&[0]]));
        }
        let v = i2(&[[2, 0], [1, 1]]);
        assert_eq!(
            ass_ideal_subquotient(&MonomialIdeal::unit(2), &v).unwrap(),
            ass_cyclic(&v).unwrap()
        );
        assert_eq!(
            ass_ideal_subquotient(&i2(&[[1, 0]]), &v).unwrap(),
            primes(2, &[&[0, 1]])
        );
        assert_eq!(ass_ideal_subquotient(&v, &v).unwrap_err(), AlgebraError::EmptyModule);
        assert!(ass_ideal_subquotient(&i2(&[[2, 0]]), &i2(&[[1, 0]])).is_err());
    }

    #[test]
    fn witnesses_verify() {
        let u = i2(&[[1, 0]]);
        let v = i2(&[[2, 0], [1, 1]]);
        for (p, m) in ass_witnesses(&u, &v).unwrap() {
            assert!(verify_witness(&u, &v, &p, &m));
        }
    }

    #[test]
    fn module_quotient_examples() {
        let full = MonomialSubmodule::full(2, 2);
        let v = MonomialSubmodule::new(vec![i2(&[[2, 0]]), i2(&[[0, 1]])]).unwrap();
        assert_eq!(ass_module_quotient(&full, &v).unwrap(), primes(2, &[&[0], &[1]]));
        assert_eq!(ass_module_quotient(&v, &v).unwrap_err(), AlgebraError::EmptyModule);
        let a = i2(&[[2, 0], [1, 1]]);
        assert_eq!(
            ass_module_quotient(
                &MonomialSubmodule::full(1, 2),
                &MonomialSubmodule::from_ideal(a.clone())
            )
            .unwrap(),
            ass_cyclic(&a).unwrap()
        );
    }

    #[test]
    fn rr_sequence_principal() {
        let r = ass_rr_sequence(
            &i2(&[[1, 0]]),
            &QuotientPresentation::ring(2),
            5,
            ChainLimits::default(),
        )
        .unwrap();
        assert_eq!(r.per_n, vec![primes(2, &[&[0]]); 5]);
        assert!(r.increasing);
        assert_eq!(r.stabilization_candidate, Some(1));
        assert_eq!(r.stable_set, primes(2, &[&[0]]));
        assert!(r.certified);
    }

    #[test]
    fn rr_sequence_x2_xy() {
        let a = i2(&[[2, 0], [1, 1]]);
        let r = ass_rr_sequence(&a, &QuotientPresentation::ring(2), 6, ChainLimits::default()).unwrap();
        assert!(r.increasing);
        assert_eq!(r.stable_set, primes(2, &[&[0], &[0, 1]]));
        let p = ass_power_sequence(&a, &QuotientPresentation::ring(2), 6, 3).unwrap();
        assert_eq!(p.per_n, vec![primes(2, &[&[0], &[0, 1]]); 6]);
        assert!(r.stable_set.is_subset(&p.stable_set));
        let s = ass_successive_rr(&a, &QuotientPresentation::ring(2), 6, ChainLimits::default()).unwrap();
        assert!(s.increasing);
        assert!(s.stabilization_candidate.is_some());
    }

    #[test]
    fn successive_principal() {
        let s = ass_successive_rr(
            &i2(&[[1, 0]]),
            &QuotientPresentation::ring(2),
            4,
            ChainLimits::default(),
        )
        .unwrap();
        assert_eq!(s.per_n, vec![primes(2, &[&[0]]); 4]);
        assert!(s.degenerate.is_empty());
    }

    #[test]
    fn successive_degenerate_indices_reported() {
        // I = (x) acting on R/(x^2): every closure is all of E.
        let e = QuotientPresentation::cyclic(i2(&[[2, 0]]));
        let s = ass_successive_rr(&i2(&[[1, 0]]), &e, 3, ChainLimits::default()).unwrap();
        assert_eq!(s.degenerate, vec![1, 2, 3]);
        assert!(s.per_n.iter().all(BTreeSet::is_empty));
        let r = ass_rr_sequence(&i2(&[[1, 0]]), &e, 3, ChainLimits::default()).unwrap();
        assert_eq!(r.degenerate, vec![1, 2, 3]);
    }

    #[test]
    fn corollary_examples() {
        let ring = QuotientPresentation::ring(2);
        let l = ChainLimits::default();
        let r = corollary25_check(&i2(&[[1, 0]]), &ring, 6, l).unwrap();
        assert_eq!(r.n0, Some(1));
        let r = corollary25_check(&i2(&[[2, 0], [1, 1]]), &ring, 6, l).unwrap();
        assert_eq!(r.n0, Some(1));
        assert_eq!(r.quotient.stable_set, primes(2, &[&[0], &[0, 1]]));
        let r = corollary25_check(&i2(&[[1, 0], [0, 1]]), &ring, 6, l).unwrap();
        assert_eq!(r.n0, Some(1));
        assert!(r.quotient.per_n.iter().all(|s| *s == primes(2, &[&[0, 1]])));
        let e = QuotientPresentation::free(2, 2);
        assert!(corollary25_check(&i2(&[[1, 0]]), &e, 6, l).is_err());
    }

    #[test]
    fn grade_examples() {
        let x = i2(&[[1, 0]]);
        let m = i2(&[[1, 0], [0, 1]]);
        assert!(grade_positive(&x, &QuotientPresentation::ring(2)).unwrap());
        let e = QuotientPresentation::cyclic(x.clone());
        assert!(!grade_positive(&x, &e).unwrap());
        assert!(grade_positive(&m, &e).unwrap());
    }

    #[test]
    fn eventual_equality_examples() {
        let ring = QuotientPresentation::ring(2);
        let l = ChainLimits::default();
        assert_eq!(
            eventual_equality_check(&i2(&[[1, 0]]), &ring, 6, l).unwrap().n0,
            Some(1)
        );
        assert_eq!(
            eventual_equality_check(&i2(&[[2, 0], [1, 1]]), &ring, 6, l).unwrap().n0,
            Some(1)
        );
        let classic = i2(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
        let r = eventual_equality_check(&classic, &ring, 10, l).unwrap();
        assert!(!r.equal[0]);
        assert!(r.n0.unwrap() >= 2);
        let e = QuotientPresentation::cyclic(i2(&[[1, 0]]));
        assert!(eventual_equality_check(&i2(&[[1, 0]]), &e, 6, l).is_err());
    }
}
