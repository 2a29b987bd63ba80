//! Irreducible decompositions, radicals and monomial primes.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Monomial, VarSet};

/// A monomial prime `(x_j : j in vars)`. The empty set is the zero ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: VarSet,
    dim: usize,
}

impl MonomialPrime {
    pub fn new(dim: usize, vars: VarSet) -> Self {
        debug_assert!(vars.is_subset(VarSet::all(dim)));
        MonomialPrime { vars, dim }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialPrime::new(dim, VarSet::EMPTY)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        if self.vars.is_empty() {
            MonomialIdeal::zero(self.dim)
        } else {
            MonomialIdeal::variables(self.dim, self.vars)
        }
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        m.support().intersects(self.vars)
    }

    /// `I ⊆ P`: every generator of `I` involves a variable of `P`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens().iter().all(|g| self.contains_monomial(g))
    }

    /// Variable names of the generators, in index order.
    pub fn var_names(&self, names: &[String]) -> Vec<String> {
        self.vars
            .iter()
            .map(|j| names.get(j).cloned().unwrap_or_else(|| format!("x{}", j + 1)))
            .collect()
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_ideal())
    }
}

/// Radical and primality data of a proper monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeData {
    pub radical: MonomialIdeal,
    pub is_prime: bool,
    pub prime: Option<MonomialPrime>,
}

pub fn prime_data(ideal: &MonomialIdeal) -> Result<PrimeData> {
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal("radical"));
    }
    let radical = minimalize(ideal.dim(), ideal.gens().iter().map(Monomial::squarefree_part))?;
    let is_prime = ideal.gens().iter().all(|g| g.degree() == 1);
    let prime = is_prime.then(|| {
        MonomialPrime::new(
            ideal.dim(),
            ideal.gens().iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.support())),
        )
    });
    Ok(PrimeData {
        radical,
        is_prime,
        prime,
    })
}

/// The irredundant decomposition of a proper nonzero monomial ideal into
/// irreducible ideals (ideals generated by pure powers of variables).
///
/// Splits on a generator `g = x_j^a * v` with `v != 1` into `A + (x_j^a)` and
/// `A + (v)`, then keeps only the inclusion-minimal leaves.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal("irreducible decomposition"));
    }
    if ideal.is_zero() {
        return Err(AlgebraError::ZeroIdeal("irreducible decomposition"));
    }
    let mut leaves: Vec<MonomialIdeal> = Vec::new();
    let mut seen = HashSet::new();
    split(ideal.clone(), &mut leaves, &mut seen)?;
    let mut out: BTreeSet<MonomialIdeal> = BTreeSet::new();
    for q in &leaves {
        let dominated = leaves.iter().any(|p| p != q && p.is_subset(q).unwrap_or(false));
        if !dominated {
            out.insert(q.clone());
        }
    }
    Ok(out.into_iter().collect())
}

fn split(ideal: MonomialIdeal, leaves: &mut Vec<MonomialIdeal>, seen: &mut HashSet<MonomialIdeal>) -> Result<()> {
    if !seen.insert(ideal.clone()) {
        return Ok(());
    }
    // Every leaf below `ideal` contains it, so it would be pruned anyway.
    if leaves.iter().any(|q| q.is_subset(&ideal).unwrap_or(false)) {
        return Ok(());
    }
    let mixed = ideal.gens().iter().find(|g| g.support().len() > 1).cloned();
    let Some(g) = mixed else {
        leaves.retain(|q| !ideal.is_subset(q).unwrap_or(false));
        leaves.push(ideal);
        return Ok(());
    };
    let j = g.support().iter().next().expect("nonempty support");
    let pure = Monomial::one(ideal.dim()).with_exponent(j, g.exponent(j));
    let rest = g.with_exponent(j, 0);
    let left = ideal.sum(&MonomialIdeal::principal(pure))?;
    let right = ideal.sum(&MonomialIdeal::principal(rest))?;
    split(left, leaves, seen)?;
    split(right, leaves, seen)
}
