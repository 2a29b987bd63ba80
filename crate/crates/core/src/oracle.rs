//! Brute-force models of monomial ideals and submodules, used to cross-check
//! the structural algorithms.
//!
//! An ideal or submodule is modelled by its members of total degree at most
//! `D`, stored as one bit per monomial. Every derived set records the degree
//! through which it is known to agree with the object it models, and all
//! comparisons stay inside that range. A comparison whose range does not reach
//! the generators of the structural result is inconclusive, never an
//! agreement.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::ass::{ass_module_quotient, PrimeSet};
use crate::closure::{chain_terms, rr_power, ChainLimits};
use crate::decompose::MonomialPrime;
use crate::error::{AlgebraError, Result};
use crate::ideal::MonomialIdeal;
use crate::instance::Instance;
use crate::module::{ModuleElement, MonomialSubmodule};
use crate::monomial::{Monomial, VarSet};

const NONE: u32 = u32::MAX;
const MAX_CUBE: usize = 1 << 26;

/// All monomials of total degree at most `D` in `dim` variables, in graded
/// order, with constant-time lookup of products and predecessors.
#[derive(Debug)]
pub struct Grid {
    dim: usize,
    degree: u32,
    exps: Vec<u32>,
    degs: Vec<u32>,
    by_degree: Vec<Vec<u32>>,
    cube: Vec<u32>,
    strides: Vec<usize>,
    preds: Vec<u32>,
}

impl Grid {
    pub fn new(dim: usize, degree: u32) -> Result<Arc<Grid>> {
        let side = degree as usize + 1;
        let cube_len = side.checked_pow(dim as u32).filter(|&n| n <= MAX_CUBE).ok_or_else(|| {
            AlgebraError::InvalidArgument(format!("truncation degree {degree} is too large for {dim} variables"))
        })?;
        let strides: Vec<usize> = (0..dim).map(|j| side.pow(j as u32)).collect();
        let mut all: Vec<(u32, Vec<u32>)> = Vec::new();
        let mut cur = vec![0u32; dim];
        loop {
            let d: u32 = cur.iter().sum();
            if d <= degree {
                all.push((d, cur.clone()));
            }
            let mut j = 0;
            loop {
                if j == dim {
                    break;
                }
                if cur[j] < degree {
                    cur[j] += 1;
                    break;
                }
                cur[j] = 0;
                j += 1;
            }
            if j == dim {
                break;
            }
        }
        all.sort();
        let mut cube = vec![NONE; cube_len];
        let mut exps = Vec::with_capacity(all.len() * dim);
        let mut degs = Vec::with_capacity(all.len());
        let mut by_degree = vec![Vec::new(); side];
        for (c, (d, e)) in all.iter().enumerate() {
            let idx: usize = e.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum();
            cube[idx] = c as u32;
            exps.extend_from_slice(e);
            degs.push(*d);
            by_degree[*d as usize].push(c as u32);
        }
        let mut preds = vec![NONE; all.len() * dim];
        for (c, (_, e)) in all.iter().enumerate() {
            let idx: usize = e.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum();
            for j in 0..dim {
                if e[j] > 0 {
                    preds[c * dim + j] = cube[idx - strides[j]];
                }
            }
        }
        Ok(Arc::new(Grid {
            dim,
            degree,
            exps,
            degs,
            by_degree,
            cube,
            strides,
            preds,
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.degs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degs.is_empty()
    }

    fn exps(&self, c: usize) -> &[u32] {
        &self.exps[c * self.dim..(c + 1) * self.dim]
    }

    fn deg(&self, c: usize) -> u32 {
        self.degs[c]
    }

    pub fn monomial(&self, c: usize) -> Monomial {
        Monomial::new(self.exps(c).iter().copied())
    }

    pub fn cell_of(&self, m: &Monomial) -> Option<usize> {
        if m.dim() != self.dim || m.degree() > self.degree as u64 {
            return None;
        }
        let idx: usize = m
            .exponents()
            .iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum();
        Some(self.cube[idx] as usize)
    }

    /// The cell of `cell * g`, if it has degree at most `D`.
    fn times(&self, c: usize, g: usize) -> Option<usize> {
        if self.degs[c] + self.degs[g] > self.degree {
            return None;
        }
        let idx: usize = self
            .exps(c)
            .iter()
            .zip(self.exps(g))
            .zip(&self.strides)
            .map(|((&a, &b), &s)| (a + b) as usize * s)
            .sum();
        Some(self.cube[idx] as usize)
    }

    fn pred(&self, c: usize, j: usize) -> Option<usize> {
        let p = self.preds[c * self.dim + j];
        (p != NONE).then_some(p as usize)
    }

    fn var(&self, j: usize) -> Option<usize> {
        self.cell_of(&Monomial::var(self.dim, j))
    }
}

/// Members of total degree at most `D`, one bit vector per coordinate.
#[derive(Clone)]
pub struct TruncatedSet {
    grid: Arc<Grid>,
    bits: Vec<Vec<bool>>,
    exact: i64,
}

impl fmt::Debug for TruncatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSet")
            .field("degree", &self.grid.degree)
            .field("valid_through", &self.valid_through())
            .field("members", &self.members())
            .finish()
    }
}

impl TruncatedSet {
    fn empty(grid: &Arc<Grid>, rank: usize, exact: i64) -> Self {
        TruncatedSet {
            grid: grid.clone(),
            bits: vec![vec![false; grid.len()]; rank],
            exact,
        }
    }

    pub fn degree(&self) -> u32 {
        self.grid.degree
    }

    pub fn rank(&self) -> usize {
        self.bits.len()
    }

    /// Membership is correct for every monomial of degree at most this.
    pub fn valid_through(&self) -> Option<u64> {
        u64::try_from(self.exact).ok()
    }

    /// `None` outside the grid.
    pub fn contains(&self, e: &ModuleElement) -> Option<bool> {
        let c = self.grid.cell_of(&e.mono)?;
        self.bits.get(e.coord).map(|b| b[c])
    }

    /// All members, by coordinate and then in graded order.
    pub fn members(&self) -> Vec<ModuleElement> {
        let mut out = Vec::new();
        for (i, b) in self.bits.iter().enumerate() {
            for c in 0..self.grid.len() {
                if b[c] {
                    out.push(ModuleElement::new(i, self.grid.monomial(c)));
                }
            }
        }
        out
    }

    /// Members of degree at most `bound` with no member dividing them.
    fn minimal_cells(&self, coord: usize, bound: i64) -> Vec<usize> {
        let g = &self.grid;
        let b = &self.bits[coord];
        (0..g.len())
            .take_while(|&c| (g.deg(c) as i64) <= bound)
            .filter(|&c| b[c] && (0..g.dim).all(|j| g.pred(c, j).is_none_or(|p| !b[p])))
            .collect()
    }

    /// The minimal members within the valid range, which are the generators
    /// of the modelled submodule of degree at most `valid_through`.
    pub fn generators_within_range(&self) -> Option<MonomialSubmodule> {
        self.valid_through()?;
        let coords = (0..self.rank())
            .map(|i| {
                MonomialIdeal::from_generators(
                    self.grid.dim,
                    self.minimal_cells(i, self.exact)
                        .into_iter()
                        .map(|c| self.grid.monomial(c)),
                )
            })
            .collect::<Result<Vec<_>>>()
            .ok()?;
        MonomialSubmodule::new(coords).ok()
    }

    fn upward_close(&mut self) {
        let g = self.grid.clone();
        for b in &mut self.bits {
            for c in 0..g.len() {
                if !b[c] && (0..g.dim).any(|j| g.pred(c, j).is_some_and(|p| b[p])) {
                    b[c] = true;
                }
            }
        }
    }
}

/// All members of `sub` of degree at most `degree`, by exhaustive
/// divisibility.
pub fn truncate(sub: &MonomialSubmodule, degree: u32) -> Result<TruncatedSet> {
    let grid = Grid::new(sub.dim(), degree)?;
    Ok(truncate_on(&grid, sub))
}

pub fn truncate_ideal(ideal: &MonomialIdeal, degree: u32) -> Result<TruncatedSet> {
    truncate(&MonomialSubmodule::from_ideal(ideal.clone()), degree)
}

pub fn truncate_on(grid: &Arc<Grid>, sub: &MonomialSubmodule) -> TruncatedSet {
    let mut out = TruncatedSet::empty(grid, sub.rank(), grid.degree as i64);
    for (i, ideal) in sub.coords().iter().enumerate() {
        for c in 0..grid.len() {
            let m = grid.exps(c);
            out.bits[i][c] = ideal
                .gens()
                .iter()
                .any(|g| g.exponents().iter().zip(m).all(|(a, b)| a <= b));
        }
    }
    out
}

/// An expression over ideals and submodules, evaluated on truncated sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Leaf(MonomialSubmodule),
    /// Ideal (rank 1) times a submodule.
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Sum(Box<Expr>, Box<Expr>),
    Intersect(Box<Expr>, Box<Expr>),
    /// Submodule colon an ideal (rank 1).
    Colon(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn module(sub: MonomialSubmodule) -> Expr {
        Expr::Leaf(sub)
    }

    pub fn ideal(ideal: MonomialIdeal) -> Expr {
        Expr::Leaf(MonomialSubmodule::from_ideal(ideal))
    }

    pub fn product(a: Expr, b: Expr) -> Expr {
        Expr::Product(Box::new(a), Box::new(b))
    }

    pub fn power(a: Expr, n: u32) -> Expr {
        Expr::Power(Box::new(a), n)
    }

    pub fn sum(a: Expr, b: Expr) -> Expr {
        Expr::Sum(Box::new(a), Box::new(b))
    }

    pub fn intersect(a: Expr, b: Expr) -> Expr {
        Expr::Intersect(Box::new(a), Box::new(b))
    }

    pub fn colon(a: Expr, b: Expr) -> Expr {
        Expr::Colon(Box::new(a), Box::new(b))
    }

    pub fn rank(&self) -> usize {
        match self {
            Expr::Leaf(s) => s.rank(),
            Expr::Product(_, b) => b.rank(),
            Expr::Power(..) => 1,
            Expr::Sum(a, _) | Expr::Intersect(a, _) | Expr::Colon(a, _) => a.rank(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Expr::Leaf(s) => s.dim(),
            Expr::Product(a, _) | Expr::Power(a, _) | Expr::Sum(a, _) | Expr::Intersect(a, _) | Expr::Colon(a, _) => {
                a.dim()
            }
        }
    }

    /// Upper bounds on the per-variable exponents and on the total degree of
    /// the minimal generators of the value.
    fn bounds(&self) -> (Vec<u64>, u64) {
        let (exps, deg) = match self {
            Expr::Leaf(s) => {
                let mut e = vec![0u64; s.dim()];
                for c in s.coords() {
                    for (x, m) in e.iter_mut().zip(c.max_exponents()) {
                        *x = (*x).max(m as u64);
                    }
                }
                (e, s.max_generator_degree())
            }
            Expr::Product(a, b) => {
                let (ea, da) = a.bounds();
                let (eb, db) = b.bounds();
                (ea.iter().zip(&eb).map(|(x, y)| x + y).collect(), da + db)
            }
            Expr::Power(a, n) => {
                let (ea, da) = a.bounds();
                (ea.iter().map(|x| x * *n as u64).collect(), da * *n as u64)
            }
            Expr::Sum(a, b) => {
                let (ea, da) = a.bounds();
                let (eb, db) = b.bounds();
                (ea.iter().zip(&eb).map(|(x, y)| *x.max(y)).collect(), da.max(db))
            }
            Expr::Intersect(a, b) => {
                let (ea, da) = a.bounds();
                let (eb, db) = b.bounds();
                (ea.iter().zip(&eb).map(|(x, y)| *x.max(y)).collect(), da + db)
            }
            // membership in (T : J) only depends on exponents clipped to those
            // of T
            Expr::Colon(a, _) => {
                let (ea, _) = a.bounds();
                let s = ea.iter().sum();
                (ea, s)
            }
        };
        let cap = exps.iter().sum();
        (exps, deg.min(cap))
    }

    /// Upper bound on the degrees of the minimal generators of the value.
    pub fn generator_degree_bound(&self) -> u64 {
        self.bounds().1
    }

    /// Degrees lost to colons: the value is exact through `D - loss`.
    pub fn loss(&self) -> u64 {
        match self {
            Expr::Leaf(_) => 0,
            Expr::Power(a, _) => a.loss(),
            Expr::Product(a, b) | Expr::Sum(a, b) | Expr::Intersect(a, b) => a.loss().max(b.loss()),
            Expr::Colon(a, b) => a.loss().max(b.loss()) + b.generator_degree_bound(),
        }
    }

    pub fn eval(&self, grid: &Arc<Grid>) -> Result<TruncatedSet> {
        if self.dim() != grid.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: grid.dim,
                found: self.dim(),
            });
        }
        match self {
            Expr::Leaf(s) => Ok(truncate_on(grid, s)),
            Expr::Product(a, b) => {
                require_ideal(a)?;
                product(&a.eval(grid)?, &b.eval(grid)?)
            }
            Expr::Power(a, n) => {
                require_ideal(a)?;
                let base = a.eval(grid)?;
                let mut acc = TruncatedSet::empty(grid, 1, grid.degree as i64);
                acc.bits[0].iter_mut().for_each(|b| *b = true);
                for _ in 0..*n {
                    acc = product(&base, &acc)?;
                }
                Ok(acc)
            }
            Expr::Sum(a, b) => zip_bits(&a.eval(grid)?, &b.eval(grid)?, |x, y| x || y),
            Expr::Intersect(a, b) => zip_bits(&a.eval(grid)?, &b.eval(grid)?, |x, y| x && y),
            Expr::Colon(a, b) => {
                require_ideal(b)?;
                Ok(colon(&a.eval(grid)?, &b.eval(grid)?, b.generator_degree_bound()))
            }
        }
    }
}

fn require_ideal(e: &Expr) -> Result<()> {
    if e.rank() != 1 {
        return Err(AlgebraError::RankMismatch {
            expected: 1,
            found: e.rank(),
        });
    }
    Ok(())
}

fn zip_bits(a: &TruncatedSet, b: &TruncatedSet, f: impl Fn(bool, bool) -> bool) -> Result<TruncatedSet> {
    if a.rank() != b.rank() {
        return Err(AlgebraError::RankMismatch {
            expected: a.rank(),
            found: b.rank(),
        });
    }
    let bits = a
        .bits
        .iter()
        .zip(&b.bits)
        .map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| f(p, q)).collect())
        .collect();
    Ok(TruncatedSet {
        grid: a.grid.clone(),
        bits,
        exact: a.exact.min(b.exact),
    })
}

/// `{a * b : a ∈ A, b ∈ M}` closed upward; exact where both factors are.
fn product(a: &TruncatedSet, m: &TruncatedSet) -> Result<TruncatedSet> {
    let exact = a.exact.min(m.exact);
    let g = &a.grid;
    let mut out = TruncatedSet::empty(g, m.rank(), exact);
    let ga = a.minimal_cells(0, exact);
    for i in 0..m.rank() {
        for &y in &m.minimal_cells(i, exact) {
            for &x in &ga {
                if let Some(c) = g.times(x, y) {
                    out.bits[i][c] = true;
                }
            }
        }
    }
    out.upward_close();
    Ok(out)
}

/// `{e : e * g ∈ T for every member g of J}`. Testing the minimal members of
/// `J` suffices since `T` is closed upward; `jdeg` bounds their degrees, and
/// the result is exact through `min(exact(T), exact(J)) - jdeg`.
fn colon(t: &TruncatedSet, j: &TruncatedSet, jdeg: u64) -> TruncatedSet {
    let exact = t.exact.min(j.exact) - jdeg as i64;
    let g = &t.grid;
    let mut out = TruncatedSet::empty(g, t.rank(), exact);
    if exact < 0 {
        return out;
    }
    let gens = j.minimal_cells(0, jdeg as i64);
    for i in 0..t.rank() {
        for e in 0..g.len() {
            if g.deg(e) as i64 > exact {
                break;
            }
            out.bits[i][e] = gens.iter().all(|&x| g.times(e, x).is_some_and(|c| t.bits[i][c]));
        }
    }
    out
}

/// Evaluates `expr` on the truncation at degree `degree`.
pub fn oracle_eval(expr: &Expr, degree: u32) -> Result<TruncatedSet> {
    expr.eval(&Grid::new(expr.dim(), degree)?)
}

/// `T_k = ((I^{k+1} W + N) : I^k)` as an expression.
pub fn chain_term_expr(ideal: &MonomialIdeal, w: &MonomialSubmodule, relations: &MonomialSubmodule, k: u32) -> Expr {
    let i = Expr::ideal(ideal.clone());
    Expr::colon(
        Expr::sum(
            Expr::product(Expr::power(i.clone(), k + 1), Expr::module(w.clone())),
            Expr::module(relations.clone()),
        ),
        Expr::power(i, k),
    )
}

/// Truncated chain terms `T_1, ..., T_{k_max}` of the closure of `W`.
pub fn oracle_closure_terms(
    ideal: &MonomialIdeal,
    w: &MonomialSubmodule,
    relations: &MonomialSubmodule,
    degree: u32,
    k_max: u32,
) -> Result<Vec<TruncatedSet>> {
    let grid = Grid::new(ideal.dim(), degree)?;
    (1..=k_max)
        .map(|k| chain_term_expr(ideal, w, relations, k).eval(&grid))
        .collect()
}

/// Associated primes of `U/V` found by enumerating annihilators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAss {
    pub primes: PrimeSet,
    pub degree: u32,
    /// Every prime of `U/V` is guaranteed to be among `primes`.
    pub complete: bool,
    /// The least degree at which the enumeration is complete.
    pub needed: u64,
}

/// Enumerates `m ∈ U_i \ V_i` and keeps those whose annihilator `(V_i : m)`
/// is a prime. A candidate `m` is only used when the annihilator is exact
/// through the largest generator degree of `V_i`, which decides primality.
/// The search is complete once it covers every `m` with exponents bounded by
/// those of `U` and `V`.
pub fn oracle_ass(u: &MonomialSubmodule, v: &MonomialSubmodule, degree: u32) -> Result<OracleAss> {
    let grid = Grid::new(u.dim(), degree)?;
    let tu = truncate_on(&grid, u);
    let tv = truncate_on(&grid, v);
    let dim = grid.dim;
    let d = degree as u64;
    let mut primes = PrimeSet::new();
    let mut needed = 0u64;
    for i in 0..u.rank() {
        let (ui, vi) = (u.coord(i), v.coord(i));
        if ui == vi {
            continue;
        }
        let gd = vi.max_generator_degree();
        let (eu, ev) = (ui.max_exponents(), vi.max_exponents());
        let span: u64 = eu.iter().zip(&ev).map(|(&a, &b)| a.max(b) as u64).sum();
        needed = needed.max(gd + span);
        if gd > d {
            continue;
        }
        let vbits = &tv.bits[i];
        for m in 0..grid.len() {
            let dm = grid.deg(m) as u64;
            if dm + gd > d {
                break;
            }
            if !tu.bits[i][m] || vbits[m] {
                continue;
            }
            let s = VarSet::from_indices(
                (0..dim).filter(|&j| grid.var(j).and_then(|x| grid.times(m, x)).is_some_and(|c| vbits[c])),
            );
            let range = (d - dm) as usize;
            let escapes = grid.by_degree[range].iter().any(|&uc| {
                let ue = grid.exps(uc as usize);
                (0..dim).all(|j| ue[j] == 0 || !s.contains(j)) && grid.times(m, uc as usize).is_some_and(|c| vbits[c])
            });
            let complement_empty = (0..dim).all(|j| s.contains(j));
            if complement_empty || !escapes {
                primes.insert(if s.is_empty() {
                    MonomialPrime::zero(dim)
                } else {
                    MonomialPrime::new(dim, s)
                });
            }
        }
    }
    Ok(OracleAss {
        primes,
        degree,
        complete: d >= needed,
        needed,
    })
}

/// Deliberate faults injected into the structural side, to show that the
/// cross-check catches them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Multiplies one generator of the colon result by the first variable.
    CorruptColon,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Agree,
    Mismatch(String),
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub degree: u32,
    /// Degree range on which the oracle is exact (`None` if empty).
    pub valid_through: Option<u64>,
    /// Truncation degree at which this comparison becomes conclusive.
    pub needed: u64,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub degree: u32,
    pub k_max: u32,
    pub comparisons: Vec<Comparison>,
    /// A reduced instance reproducing the first mismatch.
    pub reproducer: Option<Instance>,
}

impl CrossCheckReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons
            .iter()
            .filter(|c| matches!(c.status, Status::Mismatch(_)))
    }

    pub fn inconclusive(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| c.status == Status::Inconclusive)
    }

    pub fn all_agree(&self) -> bool {
        self.comparisons.iter().all(|c| c.status == Status::Agree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Op {
    Product,
    Power(u32),
    Colon,
    IdealIntersection,
    ModuleIntersection,
    /// Closure of `I^power E` when `named` is `None`.
    Chain {
        named: Option<String>,
        power: u32,
        k: u32,
    },
    AssQuotient(u32),
    AssSuccessive,
}

fn ops(inst: &Instance, k_max: u32) -> Vec<Op> {
    let mut out = vec![Op::Product];
    out.extend((1..=4).map(Op::Power));
    out.extend([Op::Colon, Op::IdealIntersection, Op::ModuleIntersection]);
    for power in 1..=2 {
        out.extend((1..=k_max).map(|k| Op::Chain { named: None, power, k }));
    }
    if inst.submodule("N1").is_some() {
        out.extend((1..=k_max).map(|k| Op::Chain {
            named: Some("N1".into()),
            power: 0,
            k,
        }));
    }
    out.extend([Op::AssQuotient(1), Op::AssQuotient(2), Op::AssSuccessive]);
    out
}

fn second_ideal(inst: &Instance) -> MonomialIdeal {
    inst.second_ideal.clone().unwrap_or_else(|| {
        inst.relations
            .coords()
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap_or_else(|| inst.ideal.clone())
    })
}

fn corrupt(sub: &MonomialSubmodule) -> Result<MonomialSubmodule> {
    let mut coords = sub.coords().to_vec();
    if let Some(c) = coords.iter_mut().find(|c| !c.is_zero()) {
        let mut gens = c.gens().to_vec();
        gens[0] = gens[0].mul(&Monomial::var(sub.dim(), 0))?;
        *c = MonomialIdeal::from_generators(sub.dim(), gens)?;
    }
    MonomialSubmodule::new(coords)
}

/// Structural value and oracle expression for the set-valued operations.
fn set_op(inst: &Instance, op: &Op, mutation: Option<Mutation>) -> Result<Option<(String, Expr, MonomialSubmodule)>> {
    let i = &inst.ideal;
    let n = &inst.relations;
    let full = MonomialSubmodule::full(inst.rank(), inst.dim());
    let ie = Expr::ideal(i.clone());
    Ok(Some(match op {
        Op::Product => {
            let j = second_ideal(inst);
            (
                "product".into(),
                Expr::product(ie, Expr::ideal(j.clone())),
                MonomialSubmodule::from_ideal(i.product(&j)?),
            )
        }
        Op::Power(k) => (
            format!("power {k}"),
            Expr::power(ie, *k),
            MonomialSubmodule::from_ideal(i.power(*k)?),
        ),
        Op::Colon => {
            let x = full.scale(&i.power(2)?)?.sum(n)?;
            let mut value = x.colon_ideal(i)?;
            if mutation == Some(Mutation::CorruptColon) {
                value = corrupt(&value)?;
            }
            let expr = Expr::colon(
                Expr::sum(
                    Expr::product(Expr::power(ie.clone(), 2), Expr::module(full)),
                    Expr::module(n.clone()),
                ),
                ie,
            );
            ("colon (I^2 F + N) : I".into(), expr, value)
        }
        Op::IdealIntersection => {
            let j = second_ideal(inst);
            (
                "intersection of ideals".into(),
                Expr::intersect(ie, Expr::ideal(j.clone())),
                MonomialSubmodule::from_ideal(i.intersect(&j)?),
            )
        }
        Op::ModuleIntersection => {
            let x = full.scale(&i.power(2)?)?;
            (
                "intersection N ∩ I^2 F".into(),
                Expr::intersect(
                    Expr::module(n.clone()),
                    Expr::product(Expr::power(ie, 2), Expr::module(full)),
                ),
                n.intersect(&x)?,
            )
        }
        Op::Chain { named, power, k } => {
            let pres = inst.presentation();
            let w = match named {
                Some(name) => pres.preimage(inst.submodule(name).expect("listed submodule"))?,
                None => full.scale(&i.power(power - 1)?)?,
            };
            let terms = chain_terms(i, &w, &pres, *k)?;
            let label = match named {
                Some(name) => format!("chain of {name}, k = {k}"),
                None => format!("chain of I^{power} E, k = {k}"),
            };
            (
                label,
                chain_term_expr(i, &w, n, *k),
                terms.last().cloned().expect("k >= 1"),
            )
        }
        _ => return Ok(None),
    }))
}

fn compare_set(label: String, expr: &Expr, structural: &MonomialSubmodule, grid: &Arc<Grid>) -> Result<Comparison> {
    let set = expr.eval(grid)?;
    let needed = expr.loss() + structural.max_generator_degree();
    let mut status = Status::Inconclusive;
    if let Some(range) = set.valid_through() {
        'outer: for c in 0..grid.len() {
            if grid.deg(c) as u64 > range {
                break;
            }
            let m = grid.monomial(c);
            for i in 0..set.rank() {
                let s = structural.coord(i).contains_mono(&m);
                if set.bits[i][c] != s {
                    status = Status::Mismatch(format!(
                        "{m:?} in coordinate {}: oracle {}, structural {s}",
                        i + 1,
                        set.bits[i][c]
                    ));
                    break 'outer;
                }
            }
        }
        if status == Status::Inconclusive && range >= structural.max_generator_degree() {
            status = Status::Agree;
        }
    }
    Ok(Comparison {
        label,
        degree: grid.degree,
        valid_through: set.valid_through(),
        needed,
        status,
    })
}

fn ass_op(inst: &Instance, op: &Op, degree: u32) -> Result<Option<Comparison>> {
    let pres = inst.presentation();
    let limits = ChainLimits::default();
    let (label, u, v) = match op {
        Op::AssQuotient(n) => {
            let v = rr_power(&inst.ideal, *n, &pres, limits)?.value;
            (format!("Ass of E / closure of I^{n} E"), pres.full(), v)
        }
        Op::AssSuccessive => {
            let u = rr_power(&inst.ideal, 1, &pres, limits)?.value;
            let v = rr_power(&inst.ideal, 2, &pres, limits)?.value;
            ("Ass of successive closures, n = 1".into(), u, v)
        }
        _ => return Ok(None),
    };
    if u == v {
        return Ok(Some(Comparison {
            label,
            degree,
            valid_through: Some(degree as u64),
            needed: 0,
            status: Status::Agree,
        }));
    }
    let structural = ass_module_quotient(&u, &v)?;
    let oracle = oracle_ass(&u, &v, degree)?;
    let status = if oracle.complete && oracle.primes == structural {
        Status::Agree
    } else if !oracle.primes.is_subset(&structural) || oracle.complete {
        Status::Mismatch(format!("oracle {:?}, structural {:?}", oracle.primes, structural))
    } else {
        Status::Inconclusive
    };
    Ok(Some(Comparison {
        label,
        degree,
        valid_through: Some(degree as u64),
        needed: oracle.needed,
        status,
    }))
}

fn run_op(inst: &Instance, op: &Op, grid: &Arc<Grid>, mutation: Option<Mutation>) -> Result<Comparison> {
    if let Some((label, expr, value)) = set_op(inst, op, mutation)? {
        return compare_set(label, &expr, &value, grid);
    }
    Ok(ass_op(inst, op, grid.degree)?.expect("every op is a set op or an Ass op"))
}

fn check_instance(inst: &Instance) -> Result<()> {
    if inst.ideal.is_zero() || inst.ideal.is_unit() {
        return Err(AlgebraError::DegenerateIdeal(
            "cross-checking needs a nonzero proper ideal",
        ));
    }
    if !inst.presentation().is_nonzero() {
        return Err(AlgebraError::EmptyModule);
    }
    Ok(())
}

/// Runs every comparison at truncation degree `degree`.
pub fn cross_check(inst: &Instance, degree: u32, k_max: u32) -> Result<CrossCheckReport> {
    cross_check_with(inst, degree, k_max, None)
}

pub fn cross_check_with(
    inst: &Instance,
    degree: u32,
    k_max: u32,
    mutation: Option<Mutation>,
) -> Result<CrossCheckReport> {
    check_instance(inst)?;
    let grid = Grid::new(inst.dim(), degree)?;
    let list = ops(inst, k_max);
    let comparisons = list
        .iter()
        .map(|op| run_op(inst, op, &grid, mutation))
        .collect::<Result<Vec<_>>>()?;
    let reproducer = match comparisons.iter().position(|c| matches!(c.status, Status::Mismatch(_))) {
        Some(p) => Some(shrink(inst, &list[p], &grid, mutation)?),
        None => None,
    };
    Ok(CrossCheckReport {
        degree,
        k_max,
        comparisons,
        reproducer,
    })
}

/// Like [`cross_check`], then re-runs each inconclusive comparison at the
/// degree it needs, as long as that is at most `max_degree`.
pub fn cross_check_resolving(inst: &Instance, degree: u32, k_max: u32, max_degree: u32) -> Result<CrossCheckReport> {
    cross_check_resolving_with(inst, degree, k_max, max_degree, None)
}

pub fn cross_check_resolving_with(
    inst: &Instance,
    degree: u32,
    k_max: u32,
    max_degree: u32,
    mutation: Option<Mutation>,
) -> Result<CrossCheckReport> {
    let mut report = cross_check_with(inst, degree, k_max, mutation)?;
    if report.reproducer.is_some() {
        return Ok(report);
    }
    let list = ops(inst, k_max);
    let mut grids: HashMap<u32, Arc<Grid>> = HashMap::new();
    for (idx, op) in list.iter().enumerate() {
        let c = &report.comparisons[idx];
        if c.status != Status::Inconclusive || c.needed > max_degree as u64 {
            continue;
        }
        let d = c.needed.max(degree as u64) as u32;
        let grid = match grids.get(&d) {
            Some(g) => g.clone(),
            None => {
                let g = Grid::new(inst.dim(), d)?;
                grids.insert(d, g.clone());
                g
            }
        };
        let redo = run_op(inst, op, &grid, mutation)?;
        let failed = matches!(redo.status, Status::Mismatch(_));
        report.comparisons[idx] = redo;
        if failed {
            report.reproducer = Some(shrink(inst, op, &grid, mutation)?);
            break;
        }
    }
    Ok(report)
}

/// Greedily drops generators and submodules while the comparison still fails.
fn shrink(inst: &Instance, op: &Op, grid: &Arc<Grid>, mutation: Option<Mutation>) -> Result<Instance> {
    let fails = |cand: &Instance| -> bool {
        check_instance(cand).is_ok()
            && run_op(cand, op, grid, mutation).is_ok_and(|c| matches!(c.status, Status::Mismatch(_)))
    };
    let mut best = inst.clone();
    loop {
        let mut improved = false;
        for cand in reductions_of(&best)? {
            if fails(&cand) {
                best = cand;
                improved = true;
                break;
            }
        }
        if !improved {
            return Ok(best);
        }
    }
}

fn without(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::from_generators(
        ideal.dim(),
        ideal
            .gens()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone()),
    )
}

fn reductions_of(inst: &Instance) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    if inst.ideal.gens().len() > 1 {
        for k in 0..inst.ideal.gens().len() {
            let mut c = inst.clone();
            c.ideal = without(&inst.ideal, k)?;
            out.push(c);
        }
    }
    for (i, coord) in inst.relations.coords().iter().enumerate() {
        for k in 0..coord.gens().len() {
            let mut coords = inst.relations.coords().to_vec();
            coords[i] = without(coord, k)?;
            let mut c = inst.clone();
            c.relations = MonomialSubmodule::new(coords)?;
            out.push(c);
        }
    }
    for name in inst.submodules.keys() {
        if name != "N1" {
            let mut c = inst.clone();
            c.submodules.remove(name);
            out.push(c);
        }
    }
    if inst.second_ideal.is_some() {
        let mut c = inst.clone();
        c.second_ideal = None;
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::QuotientPresentation;

    fn i2(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens)
    }

    fn members(set: &TruncatedSet) -> Vec<Monomial> {
        set.members().into_iter().map(|e| e.mono).collect()
    }

    #[test]
    fn truncation_examples() {
        let x = truncate_ideal(&i2(&[[1, 0]]), 2).unwrap();
        let mut got = members(&x);
        got.sort();
        let mut want = vec![Monomial::new([1, 0]), Monomial::new([2, 0]), Monomial::new([1, 1])];
        want.sort();
        assert_eq!(got, want);
        assert!(members(&truncate_ideal(&MonomialIdeal::zero(2), 3).unwrap()).is_empty());
        assert_eq!(members(&truncate_ideal(&MonomialIdeal::unit(2), 1).unwrap()).len(), 3);
    }

    #[test]
    fn colon_exact_range() {
        let e = Expr::colon(Expr::ideal(i2(&[[2, 0]])), Expr::ideal(i2(&[[1, 0]])));
        let set = oracle_eval(&e, 6).unwrap();
        assert_eq!(set.valid_through(), Some(5));
        assert_eq!(set.generators_within_range().unwrap().coord(0), &i2(&[[1, 0]]));
    }

    #[test]
    fn grid_sizes() {
        let g = Grid::new(3, 4).unwrap();
        assert_eq!(g.len(), 35);
        assert_eq!(Grid::new(2, 0).unwrap().len(), 1);
    }

    #[test]
    fn ass_of_cyclic_quotient() {
        let j = i2(&[[2, 0], [1, 1]]);
        let f = MonomialSubmodule::full(1, 2);
        let v = MonomialSubmodule::from_ideal(j);
        let at4 = oracle_ass(&f, &v, 4).unwrap();
        let want: PrimeSet = [
            MonomialPrime::new(2, VarSet::from_indices([0])),
            MonomialPrime::new(2, VarSet::from_indices([0, 1])),
        ]
        .into_iter()
        .collect();
        assert_eq!(at4.primes, want);
        assert!(!at4.complete);
        let at5 = oracle_ass(&f, &v, 5).unwrap();
        assert!(at5.complete);
        assert_eq!(at5.primes, want);
    }

    #[test]
    fn zero_submodule_has_prime_zero() {
        let f = MonomialSubmodule::full(1, 2);
        let r = oracle_ass(&f, &MonomialSubmodule::zero(1, 2), 3).unwrap();
        assert_eq!(r.primes.into_iter().collect::<Vec<_>>(), vec![MonomialPrime::zero(2)]);
    }

    #[test]
    fn degree_zero_is_inconclusive() {
        let inst = Instance::new(
            vec!["x".into(), "y".into()],
            i2(&[[2, 0], [0, 2]]),
            MonomialSubmodule::from_ideal(i2(&[[3, 1]])),
        );
        let r = cross_check(&inst, 0, 3).unwrap();
        assert_eq!(r.mismatches().count(), 0);
        assert!(r.inconclusive().count() > 0);
        assert!(r
            .comparisons
            .iter()
            .filter(|c| c.label != "Ass of successive closures, n = 1" || c.status != Status::Agree)
            .all(|c| c.status == Status::Inconclusive));
    }

    #[test]
    fn resolves_and_agrees() {
        let inst = Instance::new(
            vec!["x".into(), "y".into()],
            i2(&[[4, 0], [3, 1], [1, 3], [0, 4]]),
            MonomialSubmodule::zero(1, 2),
        );
        let r = cross_check_resolving(&inst, 12, 3, 80).unwrap();
        assert!(r.all_agree(), "{:#?}", r.comparisons);
    }

    #[test]
    fn corrupted_colon_is_detected() {
        let inst = Instance::new(
            vec!["x".into(), "y".into()],
            i2(&[[1, 1], [0, 2]]),
            MonomialSubmodule::from_ideal(i2(&[[2, 1]])),
        );
        let r = cross_check_with(&inst, 12, 2, Some(Mutation::CorruptColon)).unwrap();
        let bad: Vec<_> = r.mismatches().map(|c| c.label.clone()).collect();
        assert_eq!(bad, vec!["colon (I^2 F + N) : I".to_string()]);
        assert!(r.reproducer.is_some());
        assert!(cross_check(&inst, 12, 2).unwrap().mismatches().next().is_none());
    }

    #[test]
    fn classic_closure_term() {
        let i = i2(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
        let ring = QuotientPresentation::ring(2);
        let terms = oracle_closure_terms(&i, &ring.full(), ring.relations(), 12, 5).unwrap();
        let e = ModuleElement::new(0, Monomial::new([2, 2]));
        assert_eq!(terms[0].contains(&e), Some(true));
        assert_eq!(terms[0].valid_through(), Some(8));
        let closure = i.sum(&i2(&[[2, 2]])).unwrap();
        assert_eq!(terms[0].generators_within_range().unwrap().coord(0), &closure);
        assert_eq!(terms[1].generators_within_range().unwrap().coord(0), &closure);
    }
}
