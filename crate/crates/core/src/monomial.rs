//! Exponent-vector monomials and variable sets.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

/// Largest number of variables a [`VarSet`] can address.
pub const MAX_VARS: usize = 64;

static EXPONENT_CAP: AtomicU32 = AtomicU32::new(i32::MAX as u32);

/// Current cap on any single exponent produced by multiplication.
pub fn exponent_cap() -> u32 {
    EXPONENT_CAP.load(Ordering::Relaxed)
}

/// Changes the exponent cap process-wide. Products exceeding it fail with
/// [`AlgebraError::ExponentOverflow`].
pub fn set_exponent_cap(cap: u32) {
    EXPONENT_CAP.store(cap, Ordering::Relaxed);
}

type Exponents = SmallVec<[u32; 4]>;

/// A monomial `x_1^{a_1} ... x_d^{a_d}` stored as its exponent vector.
///
/// The derived ordering is lexicographic on the exponent vector, which is the
/// canonical generator order used everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; dim],
        }
    }

    /// The variable `x_j` (0-based) as a monomial.
    pub fn var(dim: usize, j: usize) -> Self {
        let mut m = Self::one(dim);
        m.exps[j] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, _)| j))
    }

    /// `self | other`, componentwise `a_j <= b_j`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        other.check_dim(self.dim())?;
        let cap = exponent_cap();
        let mut exps = Exponents::with_capacity(self.dim());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            let s = a as u64 + b as u64;
            if s > cap as u64 {
                return Err(AlgebraError::ExponentOverflow { value: s, cap });
            }
            exps.push(s as u32);
        }
        Ok(Monomial { exps })
    }

    pub fn pow(&self, n: u32) -> Result<Monomial> {
        let cap = exponent_cap();
        let mut exps = Exponents::with_capacity(self.dim());
        for &a in &self.exps {
            let s = a as u64 * n as u64;
            if s > cap as u64 {
                return Err(AlgebraError::ExponentOverflow { value: s, cap });
            }
            exps.push(s as u32);
        }
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`: the componentwise saturating difference.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Sets every variable outside `keep` to 1.
    pub fn localize(&self, keep: VarSet) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .map(|(j, &e)| if keep.contains(j) { e } else { 0 })
                .collect(),
        }
    }

    pub fn with_exponent(&self, j: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[j] = e;
        m
    }

    /// Renders the monomial as `x^2*y` with the given variable names; `1` for
    /// the constant monomial.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayMonomial { mono: self, names }
    }
}

struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names.get(j) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "x{}", j + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

/// A subset of the variables `{0, .., d-1}` as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn all(dim: usize) -> Self {
        assert!(dim <= MAX_VARS);
        if dim == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << dim) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u64;
        for j in indices {
            assert!(j < MAX_VARS, "variable index {j} out of range");
            bits |= 1 << j;
        }
        VarSet(bits)
    }

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, j: usize) -> bool {
        j < MAX_VARS && self.0 & (1 << j) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_VARS).filter(move |&j| self.contains(j))
    }

    /// Every subset of `all(dim)`, in increasing bitmask order.
    pub fn subsets(dim: usize) -> impl Iterator<Item = VarSet> {
        assert!(dim < MAX_VARS);
        (0..(1u64 << dim)).map(VarSet)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Orders by size, then lexicographically by sorted index list.
impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
