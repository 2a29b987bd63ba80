//! Ratliff-Rush reductions: `N1 ⊆ N2` such that every `x ∈ N2` satisfies
//! `I^n x ⊆ I^{n+1} N1` in `E` for some `n`.

use crate::closure::{check_nondegenerate, rr_closure_general, ChainLimits};
use crate::error::{AlgebraError, Result};
use crate::ideal::MonomialIdeal;
use crate::module::{ModuleElement, MonomialSubmodule, QuotientPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub holds: bool,
    /// Least `k` with `I^k N2 ⊆ I^{k+1} N1 + N`.
    pub witness_index: Option<u32>,
    /// A generator of `N2` outside the closure of `N1`.
    pub counterexample: Option<ModuleElement>,
    /// Positive verdicts carry a witness and are always certified. Negative
    /// verdicts are certified only when a degree argument rules out every `n`.
    pub certified: bool,
}

/// `I^k * sub ⊆ I^{k+1} * base + N`, checked by direct multiplication.
pub fn scaled_containment(
    ideal: &MonomialIdeal,
    k: u32,
    sub: &MonomialSubmodule,
    base: &MonomialSubmodule,
    pres: &QuotientPresentation,
) -> Result<bool> {
    let lhs = sub.scale(&ideal.power(k)?)?;
    let rhs = base.scale(&ideal.power(k + 1)?)?.sum(pres.relations())?;
    lhs.is_subset(&rhs)
}

fn check_inputs(
    n1: &MonomialSubmodule,
    n2: &MonomialSubmodule,
    pres: &QuotientPresentation,
) -> Result<(MonomialSubmodule, MonomialSubmodule)> {
    let a = pres.preimage(n1)?;
    let b = pres.preimage(n2)?;
    if !a.is_subset(&b)? {
        return Err(AlgebraError::NotContained("N1 must be contained in N2"));
    }
    Ok((a, b))
}

/// Proves `x ∉ closure(N1)` when possible: if some minimal-degree generator
/// `h` of `I` keeps `x h^k` out of `N` for every `k`, and `x h^k` has degree
/// below everything in `I^{k+1} N1`, then `I^k x ⊄ I^{k+1} N1 + N` for all `k`.
pub fn degree_obstruction(
    ideal: &MonomialIdeal,
    n1: &MonomialSubmodule,
    pres: &QuotientPresentation,
    x: &ModuleElement,
) -> bool {
    let Some(alpha) = ideal.min_generator_degree() else {
        return false;
    };
    let rel = pres.relations().coord(x.coord);
    let beta = n1
        .coord(x.coord)
        .gens()
        .iter()
        .filter(|g| !rel.contains_mono(g))
        .map(|g| g.degree())
        .min();
    if let Some(beta) = beta {
        if x.mono.degree() >= alpha + beta {
            return false;
        }
    }
    ideal.gens().iter().filter(|h| h.degree() == alpha).any(|h| {
        let grows = h.support();
        // x h^k lands in N for large k iff some relation generator is
        // bounded by x outside the support of h.
        !rel.gens().iter().any(|r| {
            r.exponents()
                .iter()
                .zip(x.mono.exponents())
                .enumerate()
                .all(|(j, (&re, &xe))| grows.contains(j) || re <= xe)
        })
    })
}

/// Decides whether `N1` is a Ratliff-Rush reduction of `N2` with respect to
/// `I`, both given as submodules of `F` (their images in `E` are meant).
pub fn is_rr_reduction(
    n1: &MonomialSubmodule,
    n2: &MonomialSubmodule,
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    limits: ChainLimits,
) -> Result<ReductionVerdict> {
    check_nondegenerate(ideal)?;
    let (a, b) = check_inputs(n1, n2, pres)?;
    let closure = rr_closure_general(ideal, &a, pres, limits)?;
    if let Some(k) = closure.first_containing(&b)? {
        return Ok(ReductionVerdict {
            holds: true,
            witness_index: Some(k),
            counterexample: None,
            certified: true,
        });
    }
    let outside: Vec<ModuleElement> = b
        .elements()
        .filter(|e| !closure.value.coord(e.coord).contains_mono(&e.mono))
        .collect();
    let obstructed: Vec<&ModuleElement> = outside
        .iter()
        .filter(|e| degree_obstruction(ideal, &a, pres, e))
        .collect();
    let certified = !obstructed.is_empty();
    let pool: Vec<&ModuleElement> = if certified {
        obstructed
    } else {
        outside.iter().collect()
    };
    // Prefer elements of N2 that are new relative to N1.
    let counterexample = pool
        .iter()
        .find(|e| !a.coord(e.coord).contains_mono(&e.mono))
        .or(pool.first())
        .map(|e| (*e).clone());
    Ok(ReductionVerdict {
        holds: false,
        witness_index: None,
        counterexample,
        certified,
    })
}

/// Least `s <= cap` with `I^s N2 ⊆ I^{s+1} N1 + N`, found by direct
/// multiplication.
pub fn uniform_reduction_index(
    n1: &MonomialSubmodule,
    n2: &MonomialSubmodule,
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    cap: u32,
) -> Result<Option<u32>> {
    check_nondegenerate(ideal)?;
    let (a, b) = check_inputs(n1, n2, pres)?;
    for s in 1..=cap {
        if scaled_containment(ideal, s, &b, &a, pres)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Reduction test that also accepts the unit ideal (then `I^n x ⊆ I^{n+1} N1`
/// just says `x ∈ N1 + N`). Localization can turn `I` into the unit ideal.
pub(crate) fn reduction_holds_allowing_unit(
    n1: &MonomialSubmodule,
    n2: &MonomialSubmodule,
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    limits: ChainLimits,
    bound: u32,
) -> Result<bool> {
    if !pres.is_nonzero() {
        return Ok(true);
    }
    if ideal.is_unit() {
        let (a, b) = check_inputs(n1, n2, pres)?;
        return b.is_subset(&a);
    }
    if is_rr_reduction(n1, n2, ideal, pres, limits)?.holds {
        return Ok(true);
    }
    Ok(uniform_reduction_index(n1, n2, ideal, pres, bound)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn i2(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens)
    }

    fn sub(i: MonomialIdeal) -> MonomialSubmodule {
        MonomialSubmodule::from_ideal(i)
    }

    #[test]
    fn nilpotent_action_gives_reductions() {
        let e = QuotientPresentation::cyclic(i2(&[[2, 0]]));
        let x = i2(&[[1, 0]]);
        let pairs = [
            (MonomialSubmodule::zero(1, 2), sub(x.clone())),
            (MonomialSubmodule::zero(1, 2), sub(i2(&[[0, 1]]))),
            (sub(i2(&[[0, 2]])), sub(MonomialIdeal::unit(2))),
        ];
        for (n1, n2) in pairs {
            let v = is_rr_reduction(&n1, &n2, &x, &e, ChainLimits::default()).unwrap();
            assert!(v.holds);
            let k = v.witness_index.unwrap();
            assert!(scaled_containment(&x, k, &n2, &n1, &e).unwrap());
        }
    }

    #[test]
    fn reflexivity_fails_for_principal_ideal() {
        let x = i2(&[[1, 0]]);
        let ring = QuotientPresentation::ring(2);
        let v = is_rr_reduction(&sub(x.clone()), &sub(x.clone()), &x, &ring, ChainLimits::default()).unwrap();
        assert!(!v.holds);
        assert!(v.certified);
        assert_eq!(v.counterexample, Some(ModuleElement::new(0, Monomial::new([1, 0]))));
    }

    #[test]
    fn classic_ideal_is_not_a_reduction_of_its_closure() {
        let i = i2(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
        let closure = i2(&[[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]]);
        let ring = QuotientPresentation::ring(2);
        let v = is_rr_reduction(&sub(i.clone()), &sub(closure), &i, &ring, ChainLimits::default()).unwrap();
        assert!(!v.holds);
        assert!(v.certified);
        assert_eq!(v.counterexample, Some(ModuleElement::new(0, Monomial::new([2, 2]))));
    }

    #[test]
    fn containment_required() {
        let x = i2(&[[1, 0]]);
        let ring = QuotientPresentation::ring(2);
        let err = is_rr_reduction(
            &sub(x.clone()),
            &MonomialSubmodule::zero(1, 2),
            &x,
            &ring,
            ChainLimits::default(),
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::NotContained(_)));
    }

    #[test]
    fn uniform_index_examples() {
        let e = QuotientPresentation::cyclic(i2(&[[2, 0]]));
        let x = i2(&[[1, 0]]);
        let s = uniform_reduction_index(&MonomialSubmodule::zero(1, 2), &sub(x.clone()), &x, &e, 20).unwrap();
        // I * (x) = (x^2) is already zero in R/(x^2).
        assert_eq!(s, Some(1));
        let ring = QuotientPresentation::ring(2);
        assert_eq!(
            uniform_reduction_index(&sub(x.clone()), &sub(x.clone()), &x, &ring, 20).unwrap(),
            None
        );
    }

    #[test]
    fn uniform_index_matches_witness() {
        let e = QuotientPresentation::cyclic(i2(&[[3, 0], [0, 2]]));
        let i = i2(&[[1, 0], [0, 1]]);
        let n1 = sub(i2(&[[1, 1]]));
        let n2 = sub(i2(&[[1, 0], [0, 1]]));
        let v = is_rr_reduction(&n1, &n2, &i, &e, ChainLimits::default()).unwrap();
        assert!(v.holds);
        let s = uniform_reduction_index(&n1, &n2, &i, &e, 20).unwrap();
        assert_eq!(s, v.witness_index);
    }
}
