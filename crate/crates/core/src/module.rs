//! Monomial submodules of a free module `F = R^r` and presentations `E = F/N`.
//!
//! A monomial submodule is a direct sum of monomial ideals, one per
//! coordinate, so every operation here acts coordinatewise. Submodules of
//! `E` are handled through their preimages in `F`.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialSubmodule {
    dim: usize,
    coords: Vec<MonomialIdeal>,
}

/// A monomial element `mono * e_coord` of `F` (0-based coordinate).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ModuleElement {
    pub coord: usize,
    pub mono: Monomial,
}

impl ModuleElement {
    pub fn new(coord: usize, mono: Monomial) -> Self {
        ModuleElement { coord, mono }
    }
}

impl MonomialSubmodule {
    pub fn new(coords: Vec<MonomialIdeal>) -> Result<Self> {
        let Some(first) = coords.first() else {
            return Err(AlgebraError::InvalidArgument(
                "a submodule needs rank at least 1".into(),
            ));
        };
        let dim = first.dim();
        for c in &coords {
            if c.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    found: c.dim(),
                });
            }
        }
        Ok(MonomialSubmodule { dim, coords })
    }

    /// The rank-1 submodule given by an ideal.
    pub fn from_ideal(ideal: MonomialIdeal) -> Self {
        MonomialSubmodule {
            dim: ideal.dim(),
            coords: vec![ideal],
        }
    }

    pub fn zero(rank: usize, dim: usize) -> Self {
        MonomialSubmodule {
            dim,
            coords: vec![MonomialIdeal::zero(dim); rank],
        }
    }

    /// All of `F`.
    pub fn full(rank: usize, dim: usize) -> Self {
        MonomialSubmodule {
            dim,
            coords: vec![MonomialIdeal::unit(dim); rank],
        }
    }

    /// The submodule generated by the given monomial elements.
    pub fn from_elements(rank: usize, dim: usize, elements: impl IntoIterator<Item = ModuleElement>) -> Result<Self> {
        let mut per: Vec<Vec<Monomial>> = vec![Vec::new(); rank];
        for e in elements {
            if e.coord >= rank {
                return Err(AlgebraError::RankMismatch {
                    expected: rank,
                    found: e.coord + 1,
                });
            }
            per[e.coord].push(e.mono);
        }
        let coords = per
            .into_iter()
            .map(|g| MonomialIdeal::from_generators(dim, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialSubmodule { dim, coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[MonomialIdeal] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &MonomialIdeal {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MonomialIdeal::is_zero)
    }

    pub fn is_full(&self) -> bool {
        self.coords.iter().all(MonomialIdeal::is_unit)
    }

    /// Generators as module elements, coordinate by coordinate.
    pub fn elements(&self) -> impl Iterator<Item = ModuleElement> + '_ {
        self.coords
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.gens().iter().map(move |g| ModuleElement::new(i, g.clone())))
    }

    pub fn contains(&self, e: &ModuleElement) -> Result<bool> {
        if e.coord >= self.rank() {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank(),
                found: e.coord + 1,
            });
        }
        self.coords[e.coord].contains(&e.mono)
    }

    fn check_compatible(&self, other: &MonomialSubmodule) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &MonomialSubmodule,
        f: impl Fn(&MonomialIdeal, &MonomialIdeal) -> Result<MonomialIdeal>,
    ) -> Result<MonomialSubmodule> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialSubmodule { dim: self.dim, coords })
    }

    fn map(&self, f: impl Fn(&MonomialIdeal) -> Result<MonomialIdeal>) -> Result<MonomialSubmodule> {
        let coords = self.coords.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(MonomialSubmodule { dim: self.dim, coords })
    }

    pub fn sum(&self, other: &MonomialSubmodule) -> Result<MonomialSubmodule> {
        self.zip_with(other, MonomialIdeal::sum)
    }

    pub fn intersect(&self, other: &MonomialSubmodule) -> Result<MonomialSubmodule> {
        self.zip_with(other, MonomialIdeal::intersect)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialSubmodule) -> Result<bool> {
        self.check_compatible(other)?;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_subset(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_as(&self, other: &MonomialSubmodule) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    /// `J * self`, coordinatewise.
    pub fn scale(&self, ideal: &MonomialIdeal) -> Result<MonomialSubmodule> {
        self.map(|c| ideal.product(c))
    }

    /// `(self :_F J)`, coordinatewise; `J` must be nonzero.
    pub fn colon_ideal(&self, ideal: &MonomialIdeal) -> Result<MonomialSubmodule> {
        if ideal.is_zero() {
            return Err(AlgebraError::ZeroColon);
        }
        self.map(|c| c.colon(ideal))
    }

    /// `(self :_R e)`.
    pub fn colon_element(&self, e: &ModuleElement) -> Result<MonomialIdeal> {
        if e.coord >= self.rank() {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank(),
                found: e.coord + 1,
            });
        }
        self.coords[e.coord].colon_monomial(&e.mono)
    }

    pub fn localize(&self, keep: VarSet) -> MonomialSubmodule {
        MonomialSubmodule {
            dim: self.dim,
            coords: self.coords.iter().map(|c| c.localize(keep)).collect(),
        }
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.coords
            .iter()
            .map(MonomialIdeal::max_generator_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplaySubmodule { sub: self, names }
    }
}

struct DisplaySubmodule<'a> {
    sub: &'a MonomialSubmodule,
    names: &'a [String],
}

impl fmt::Display for DisplaySubmodule<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[ ")?;
        for (i, c) in self.sub.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{}", c.display_with(self.names))?;
        }
        f.write_str(" ]")
    }
}

impl fmt::Debug for MonomialSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

/// `submodule_scale`: `I * W`.
pub fn submodule_scale(ideal: &MonomialIdeal, sub: &MonomialSubmodule) -> Result<MonomialSubmodule> {
    sub.scale(ideal)
}

/// `submodule_colon_ideal`: `(W :_F J)`.
pub fn submodule_colon_ideal(sub: &MonomialSubmodule, ideal: &MonomialIdeal) -> Result<MonomialSubmodule> {
    sub.colon_ideal(ideal)
}

/// A presentation `E = F / N` with `F = R^rank`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientPresentation {
    relations: MonomialSubmodule,
}

impl QuotientPresentation {
    pub fn new(relations: MonomialSubmodule) -> Self {
        QuotientPresentation { relations }
    }

    /// `E = R`.
    pub fn ring(dim: usize) -> Self {
        QuotientPresentation::new(MonomialSubmodule::zero(1, dim))
    }

    /// `E = R / ideal`.
    pub fn cyclic(ideal: MonomialIdeal) -> Self {
        QuotientPresentation::new(MonomialSubmodule::from_ideal(ideal))
    }

    /// `E = F`.
    pub fn free(rank: usize, dim: usize) -> Self {
        QuotientPresentation::new(MonomialSubmodule::zero(rank, dim))
    }

    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn dim(&self) -> usize {
        self.relations.dim()
    }

    pub fn relations(&self) -> &MonomialSubmodule {
        &self.relations
    }

    pub fn is_nonzero(&self) -> bool {
        !self.relations.is_full()
    }

    pub fn full(&self) -> MonomialSubmodule {
        MonomialSubmodule::full(self.rank(), self.dim())
    }

    /// Preimage in `F` of a submodule of `E` given by generators: `W + N`.
    pub fn preimage(&self, sub: &MonomialSubmodule) -> Result<MonomialSubmodule> {
        sub.sum(&self.relations)
    }

    /// Preimage of `I^n E` in `F`: coordinatewise `I^n + N_i`.
    pub fn power_scale_preimage(&self, ideal: &MonomialIdeal, n: u32) -> Result<MonomialSubmodule> {
        let p = ideal.power(n)?;
        if p.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        self.relations.map(|c| p.sum(c))
    }

    /// Localization of `E`: relations localized coordinatewise.
    pub fn localize(&self, keep: VarSet) -> QuotientPresentation {
        QuotientPresentation::new(self.relations.localize(keep))
    }
}

impl fmt::Debug for QuotientPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F^{}/{:?}", self.rank(), self.relations)
    }
}

/// `power_scale_preimage`: the preimage of `I^n E` in `F`.
pub fn power_scale_preimage(ideal: &MonomialIdeal, n: u32, pres: &QuotientPresentation) -> Result<MonomialSubmodule> {
    pres.power_scale_preimage(ideal, n)
}
