//! Monomial ideals of `k[x_1, .., x_d]` in canonical minimal form.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, VarSet, MAX_VARS};

/// A monomial ideal given by its minimal generators.
///
/// Generators are sorted by decreasing lexicographic order of their exponent
/// vectors (`x^2, x*y, y^2`), so two ideals are equal exactly when their
/// generator lists are. The zero ideal has no
/// generators; the unit ideal is generated by the constant monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

/// Reduces a generator list to its canonical minimal form.
pub fn minimalize(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        g.check_dim(dim)?;
    }
    MonomialIdeal::check_vars(dim)?;
    Ok(MonomialIdeal {
        dim,
        gens: minimal_generators(gens),
    })
}

fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_cached_key(|g| (g.degree(), g.clone()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    fn check_vars(dim: usize) -> Result<()> {
        if dim > MAX_VARS {
            return Err(AlgebraError::InvalidArgument(format!(
                "at most {MAX_VARS} variables are supported, got {dim}"
            )));
        }
        Ok(())
    }

    pub fn from_generators(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(dim, gens)
    }

    /// Builds an ideal from raw exponent vectors; panics on inconsistent
    /// lengths. Meant for tests and literals.
    pub fn from_exponents<const D: usize>(gens: &[[u32; D]]) -> Self {
        minimalize(D, gens.iter().map(|g| Monomial::new(g.iter().copied()))).expect("consistent exponent vectors")
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![Monomial::one(dim)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            dim: m.dim(),
            gens: vec![m],
        }
    }

    /// The prime ideal generated by the variables in `vars`.
    pub fn variables(dim: usize, vars: VarSet) -> Self {
        MonomialIdeal {
            dim,
            gens: {
                let mut g: Vec<Monomial> = vars.iter().map(|j| Monomial::var(dim, j)).collect();
                g.sort_unstable_by(|a, b| b.cmp(a));
                g
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_same_dim(&self, other: &MonomialIdeal) -> Result<()> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        m.check_dim(self.dim)?;
        Ok(self.contains_mono(m))
    }

    pub(crate) fn contains_mono(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(self.gens.iter().all(|g| other.contains_mono(g)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_generators(prods),
        })
    }

    /// `self^n`, memoized process-wide; `self^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        match n {
            0 => return Ok(MonomialIdeal::unit(self.dim)),
            1 => return Ok(self.clone()),
            _ => {}
        }
        if self.is_zero() || self.is_unit() {
            return Ok(self.clone());
        }
        if let Some(hit) = power_cache_get(self, n) {
            return Ok(hit);
        }
        let p = self.power(n - 1)?.product(self)?;
        power_cache_put(self, n, &p);
        Ok(p)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_generators(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_generators(lcms),
        })
    }

    /// `(self : m)`, generated by `a / gcd(a, m)` for the generators `a`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        m.check_dim(self.dim)?;
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_generators(self.gens.iter().map(|a| a.colon(m)).collect()),
        })
    }

    /// `(self : other)`, the intersection of `(self : b)` over the generators
    /// `b` of `other`. Colon by the zero ideal is rejected.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        if other.is_zero() {
            return Err(AlgebraError::ZeroColon);
        }
        let mut acc = MonomialIdeal::unit(self.dim);
        for b in &other.gens {
            acc = acc.intersect(&self.colon_monomial(b)?)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// Image under `x_j -> 1` for every `j` outside `keep`.
    pub fn localize(&self, keep: VarSet) -> MonomialIdeal {
        MonomialIdeal {
            dim: self.dim,
            gens: minimal_generators(self.gens.iter().map(|g| g.localize(keep)).collect()),
        }
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn min_generator_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// Renders as `(x^2, x*y)`, with `(0)` and `(1)` for the trivial ideals.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayIdeal { ideal: self, names }
    }
}

struct DisplayIdeal<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for DisplayIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

const POWER_CACHE_LIMIT: usize = 1 << 14;

type PowerCache = HashMap<(MonomialIdeal, u32), MonomialIdeal>;

static POWER_CACHE: LazyLock<Mutex<PowerCache>> = LazyLock::new(|| Mutex::new(HashMap::new()));

fn power_cache_get(base: &MonomialIdeal, n: u32) -> Option<MonomialIdeal> {
    let cache = POWER_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    // Keyed lookups need an owned key; powers are only looked up for n >= 2.
    cache.get(&(base.clone(), n)).cloned()
}

fn power_cache_put(base: &MonomialIdeal, n: u32, value: &MonomialIdeal) {
    let mut cache = POWER_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() >= POWER_CACHE_LIMIT {
        cache.clear();
    }
    cache.insert((base.clone(), n), value.clone());
}
