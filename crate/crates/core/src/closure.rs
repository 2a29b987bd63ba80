//! Ratliff-Rush closures of ideal powers with respect to a module.
//!
//! Every closure here is the union of an increasing colon chain
//! `T_k = (target_k :_F I^k)`. The union is reached after finitely many
//! steps but no bound is known in advance, so the chain is followed until
//! `window` consecutive terms agree at an index past [`torsion_index`] (the
//! result is then marked certified) or until `cap` terms have been computed.

use std::collections::BTreeMap;

use crate::error::{AlgebraError, Result};
use crate::ideal::MonomialIdeal;
use crate::module::{MonomialSubmodule, QuotientPresentation};

/// Stopping rule for closure chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainLimits {
    pub window: u32,
    pub cap: u32,
}

impl Default for ChainLimits {
    fn default() -> Self {
        ChainLimits { window: 3, cap: 20 }
    }
}

impl ChainLimits {
    pub fn new(window: u32, cap: u32) -> Result<Self> {
        let limits = ChainLimits { window, cap };
        limits.validate()?;
        Ok(limits)
    }

    pub fn validate(&self) -> Result<()> {
        if self.window == 0 {
            return Err(AlgebraError::InvalidArgument("window must be at least 1".into()));
        }
        if self.cap < self.window {
            return Err(AlgebraError::InvalidArgument(format!(
                "cap ({}) must be at least window ({})",
                self.cap, self.window
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    /// Preimage in `F` of the closure (the last chain term).
    pub value: MonomialSubmodule,
    /// `chain[k - 1]` is `T_k`.
    pub chain: Vec<MonomialSubmodule>,
    /// First index of the run of `window` equal terms.
    pub stabilized_at: Option<u32>,
    pub certified: bool,
    pub window_used: u32,
    pub cap_used: u32,
}

impl ClosureResult {
    fn whole(full: MonomialSubmodule, limits: ChainLimits) -> Self {
        ClosureResult {
            value: full.clone(),
            chain: vec![full],
            stabilized_at: Some(1),
            certified: true,
            window_used: limits.window,
            cap_used: limits.cap,
        }
    }

    /// Least `k` with `sub ⊆ T_k`, if any computed term contains it.
    pub fn first_containing(&self, sub: &MonomialSubmodule) -> Result<Option<u32>> {
        for (i, t) in self.chain.iter().enumerate() {
            if sub.is_subset(t)? {
                return Ok(Some(i as u32 + 1));
            }
        }
        Ok(None)
    }
}

pub(crate) fn check_nondegenerate(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(AlgebraError::DegenerateIdeal(
            "the zero ideal has a vacuous closure chain",
        ));
    }
    if ideal.is_unit() {
        return Err(AlgebraError::DegenerateIdeal(
            "the unit ideal has a trivial closure chain",
        ));
    }
    Ok(())
}

fn check_dims(ideal: &MonomialIdeal, pres: &QuotientPresentation) -> Result<()> {
    if ideal.dim() != pres.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: pres.dim(),
            found: ideal.dim(),
        });
    }
    Ok(())
}

/// `(sub :_F I^k)` computed as `k` successive colons by `I`.
fn colon_by_power(sub: MonomialSubmodule, ideal: &MonomialIdeal, k: u32) -> Result<MonomialSubmodule> {
    let mut acc = sub;
    for _ in 0..k {
        if acc.is_full() {
            break;
        }
        acc = acc.colon_ideal(ideal)?;
    }
    Ok(acc)
}

/// Least `k` with `(N :_F I^k) = (N :_F I^{k+1})`. Before this index the
/// chain can sit still while torsion is still being absorbed: for `E = R/(x*y^4)`
/// and `I = (y)`, `T_1 = T_2 = T_3 = (y)` but `T_4 = (x, y)`.
pub fn torsion_index(ideal: &MonomialIdeal, pres: &QuotientPresentation) -> Result<u32> {
    let mut cur = pres.relations().clone();
    let mut k = 0;
    loop {
        let next = cur.colon_ideal(ideal)?;
        if next == cur {
            return Ok(k);
        }
        cur = next;
        k += 1;
    }
}

fn run_chain(
    limits: ChainLimits,
    torsion: u32,
    mut term: impl FnMut(u32) -> Result<MonomialSubmodule>,
) -> Result<ClosureResult> {
    limits.validate()?;
    let mut chain: Vec<MonomialSubmodule> = Vec::new();
    let mut run = 0u32;
    let mut stabilized_at = None;
    for k in 1..=limits.cap {
        let t = term(k)?;
        match chain.last() {
            Some(prev) => {
                assert!(
                    prev.is_subset(&t)?,
                    "closure chain decreased at k = {k}: {prev:?} is not contained in {t:?}"
                );
                if *prev == t {
                    run += 1;
                } else {
                    run = 1;
                }
            }
            None => run = 1,
        }
        chain.push(t);
        if run >= limits.window && k > torsion {
            stabilized_at = Some(k + 1 - limits.window);
            break;
        }
    }
    let value = chain.last().cloned().expect("cap >= 1");
    Ok(ClosureResult {
        value,
        chain,
        certified: stabilized_at.is_some(),
        stabilized_at,
        window_used: limits.window,
        cap_used: limits.cap,
    })
}

/// `{e ∈ F : I^k e ⊆ I^{k+1} W + N for some k ≤ cap}`, via the chain
/// `T_k = ((I^{k+1} W + N) :_F I^k)`.
pub fn rr_closure_general(
    ideal: &MonomialIdeal,
    sub: &MonomialSubmodule,
    pres: &QuotientPresentation,
    limits: ChainLimits,
) -> Result<ClosureResult> {
    check_nondegenerate(ideal)?;
    check_dims(ideal, pres)?;
    if sub.rank() != pres.rank() {
        return Err(AlgebraError::RankMismatch {
            expected: pres.rank(),
            found: sub.rank(),
        });
    }
    run_chain(limits, torsion_index(ideal, pres)?, |k| {
        let target = sub.scale(&ideal.power(k + 1)?)?.sum(pres.relations())?;
        colon_by_power(target, ideal, k)
    })
}

/// The terms `T_1, ..., T_{k_max}` of the general chain, without any
/// stopping rule.
pub fn chain_terms(
    ideal: &MonomialIdeal,
    sub: &MonomialSubmodule,
    pres: &QuotientPresentation,
    k_max: u32,
) -> Result<Vec<MonomialSubmodule>> {
    check_nondegenerate(ideal)?;
    check_dims(ideal, pres)?;
    (1..=k_max)
        .map(|k| {
            let target = sub.scale(&ideal.power(k + 1)?)?.sum(pres.relations())?;
            colon_by_power(target, ideal, k)
        })
        .collect()
}

/// Preimage of the closure of `I^n` with respect to `E`, via
/// `T_k = ((I^{n+k} F + N) :_F I^k)`. For `n = 0` this is all of `F`.
pub fn rr_power(
    ideal: &MonomialIdeal,
    n: u32,
    pres: &QuotientPresentation,
    limits: ChainLimits,
) -> Result<ClosureResult> {
    check_nondegenerate(ideal)?;
    check_dims(ideal, pres)?;
    limits.validate()?;
    if n == 0 {
        return Ok(ClosureResult::whole(pres.full(), limits));
    }
    run_chain(limits, torsion_index(ideal, pres)?, |k| {
        colon_by_power(pres.power_scale_preimage(ideal, n + k)?, ideal, k)
    })
}

/// The Ratliff-Rush ideal of `I` in `R`.
pub fn rr_ideal(ideal: &MonomialIdeal, limits: ChainLimits) -> Result<ClosureResult> {
    rr_power(ideal, 1, &QuotientPresentation::ring(ideal.dim()), limits)
}

/// Closures of successive powers of one ideal over one module, computed on
/// demand and kept.
#[derive(Clone, Debug)]
pub struct Filtration {
    ideal: MonomialIdeal,
    pres: QuotientPresentation,
    limits: ChainLimits,
    terms: BTreeMap<u32, ClosureResult>,
}

impl Filtration {
    pub fn new(ideal: MonomialIdeal, pres: QuotientPresentation, limits: ChainLimits) -> Result<Self> {
        check_nondegenerate(&ideal)?;
        check_dims(&ideal, &pres)?;
        limits.validate()?;
        Ok(Filtration {
            ideal,
            pres,
            limits,
            terms: BTreeMap::new(),
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn presentation(&self) -> &QuotientPresentation {
        &self.pres
    }

    pub fn limits(&self) -> ChainLimits {
        self.limits
    }

    pub fn get(&mut self, n: u32) -> Result<&ClosureResult> {
        if !self.terms.contains_key(&n) {
            let r = rr_power(&self.ideal, n, &self.pres, self.limits)?;
            self.terms.insert(n, r);
        }
        Ok(&self.terms[&n])
    }

    pub fn value(&mut self, n: u32) -> Result<MonomialSubmodule> {
        Ok(self.get(n)?.value.clone())
    }

    /// Whether every closure computed so far was certified.
    pub fn all_certified(&self) -> bool {
        self.terms.values().all(|r| r.certified)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma21Report {
    pub n: u32,
    pub m: u32,
    /// `closure(I^n) :_F closure_R(I^m)`.
    pub colon_by_closure: MonomialSubmodule,
    /// `closure(I^n) :_F I^m`.
    pub colon_by_power: MonomialSubmodule,
    /// `closure(I^{n-m})`.
    pub shifted_closure: MonomialSubmodule,
    pub closure_eq_power: bool,
    pub power_eq_shifted: bool,
    pub closure_eq_shifted: bool,
    pub certified: bool,
}

impl Lemma21Report {
    pub fn all_equal(&self) -> bool {
        self.closure_eq_power && self.power_eq_shifted && self.closure_eq_shifted
    }
}

/// Computes the three sides of the shift identity for `n >= m >= 1`.
pub fn lemma21_check(
    ideal: &MonomialIdeal,
    pres: &QuotientPresentation,
    n: u32,
    m: u32,
    limits: ChainLimits,
) -> Result<Lemma21Report> {
    let mut filt = Filtration::new(ideal.clone(), pres.clone(), limits)?;
    let mut ring = Filtration::new(ideal.clone(), QuotientPresentation::ring(ideal.dim()), limits)?;
    lemma21_with(&mut filt, &mut ring, n, m)
}

/// Same as [`lemma21_check`], reusing closures already held by `filt` (over
/// `E`) and `ring` (over `R`).
pub fn lemma21_with(filt: &mut Filtration, ring: &mut Filtration, n: u32, m: u32) -> Result<Lemma21Report> {
    if m == 0 || n < m {
        return Err(AlgebraError::InvalidArgument(format!(
            "the shift identity needs n >= m >= 1, got n = {n}, m = {m}"
        )));
    }
    let ideal = filt.ideal().clone();
    let top = filt.value(n)?;
    let ring_closure = ring.value(m)?;
    let colon_by_closure = top.colon_ideal(ring_closure.coord(0))?;
    let colon_by_power = top.colon_ideal(&ideal.power(m)?)?;
    let shifted_closure = filt.value(n - m)?;
    let certified = filt.get(n)?.certified && filt.get(n - m)?.certified && ring.get(m)?.certified;
    Ok(Lemma21Report {
        n,
        m,
        closure_eq_power: colon_by_closure == colon_by_power,
        power_eq_shifted: colon_by_power == shifted_closure,
        closure_eq_shifted: colon_by_closure == shifted_closure,
        colon_by_closure,
        colon_by_power,
        shifted_closure,
        certified,
    })
}
