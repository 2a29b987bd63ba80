//! The plain-text instance format and seeded instance generation.
//!
//! ```text
//! # comments start with '#'
//! vars x y
//! ideal I: x^4, x^3*y, x*y^3, y^4
//! ideal J: x
//! module rank 2
//! submodule N: e1*x^2, e2*y
//! submodule N1: e1*x^3
//! submodule N2: e1*x^2*y, e2
//! ```
//!
//! `vars` and `ideal I` are required. `module rank` defaults to 1 and every
//! submodule defaults to zero. For rank 1 the `e1*` prefix may be omitted;
//! printing omits it. An empty list after the colon is the zero ideal or
//! submodule and `1` is the unit.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::module::{ModuleElement, MonomialSubmodule, QuotientPresentation};
use crate::monomial::{exponent_cap, Monomial, MAX_VARS};

/// Submodule names accepted besides the relations `N`.
pub const SUBMODULE_NAMES: [&str; 5] = ["N1", "N2", "N3", "M1", "M2"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub vars: Vec<String>,
    pub ideal: MonomialIdeal,
    pub second_ideal: Option<MonomialIdeal>,
    pub relations: MonomialSubmodule,
    /// Named submodules of `F` (`N1`, `N2`, ...).
    pub submodules: BTreeMap<String, MonomialSubmodule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl Instance {
    pub fn new(vars: Vec<String>, ideal: MonomialIdeal, relations: MonomialSubmodule) -> Self {
        Instance {
            vars,
            ideal,
            second_ideal: None,
            relations,
            submodules: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn presentation(&self) -> QuotientPresentation {
        QuotientPresentation::new(self.relations.clone())
    }

    pub fn submodule(&self, name: &str) -> Option<&MonomialSubmodule> {
        self.submodules.get(name)
    }

    pub fn with_submodule(mut self, name: &str, sub: MonomialSubmodule) -> Self {
        self.submodules.insert(name.to_string(), sub);
        self
    }

    pub fn parse(text: &str) -> Result<Instance, ParseError> {
        parse_instance(text)
    }

    /// Canonical text form; `parse` of the output gives back `self`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn write_ideal(&self, f: &mut fmt::Formatter<'_>, ideal: &MonomialIdeal) -> fmt::Result {
        let parts: Vec<String> = ideal
            .gens()
            .iter()
            .map(|g| g.display_with(&self.vars).to_string())
            .collect();
        if parts.is_empty() {
            writeln!(f)
        } else {
            writeln!(f, " {}", parts.join(", "))
        }
    }

    fn write_submodule(&self, f: &mut fmt::Formatter<'_>, sub: &MonomialSubmodule) -> fmt::Result {
        let rank = sub.rank();
        let parts: Vec<String> = sub
            .elements()
            .map(|e| {
                if rank == 1 {
                    e.mono.display_with(&self.vars).to_string()
                } else if e.mono.is_one() {
                    format!("e{}", e.coord + 1)
                } else {
                    format!("e{}*{}", e.coord + 1, e.mono.display_with(&self.vars))
                }
            })
            .collect();
        if parts.is_empty() {
            writeln!(f)
        } else {
            writeln!(f, " {}", parts.join(", "))
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.vars.join(" "))?;
        write!(f, "ideal I:")?;
        self.write_ideal(f, &self.ideal)?;
        if let Some(j) = &self.second_ideal {
            write!(f, "ideal J:")?;
            self.write_ideal(f, j)?;
        }
        writeln!(f, "module rank {}", self.rank())?;
        write!(f, "submodule N:")?;
        self.write_submodule(f, &self.relations)?;
        for name in SUBMODULE_NAMES {
            if let Some(sub) = self.submodules.get(name) {
                write!(f, "submodule {name}:")?;
                self.write_submodule(f, sub)?;
            }
        }
        Ok(())
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_basis_name(s: &str) -> bool {
    s.len() > 1 && s.starts_with('e') && s[1..].chars().all(|c| c.is_ascii_digit())
}

/// A generator list: the text after the colon, with its column offset.
struct ListSpan<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl<'a> ListSpan<'a> {
    /// Items with their 1-based starting columns; empty text gives no items.
    fn items(&self) -> Result<Vec<(usize, &'a str)>, ParseError> {
        if self.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for piece in self.text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            let item = piece.trim();
            if item.is_empty() {
                return Err(err(self.line, self.column + offset, "empty generator in list"));
            }
            out.push((self.column + offset + lead, item));
            offset += piece.len() + 1;
        }
        Ok(out)
    }
}

struct Parser<'v> {
    vars: &'v [String],
}

impl Parser<'_> {
    /// Parses `x^2*y`, `1`, and (when `allow_basis`) `e2*x` / `e2`.
    fn term(
        &self,
        line: usize,
        column: usize,
        text: &str,
        allow_basis: bool,
    ) -> Result<(Option<usize>, Monomial), ParseError> {
        let dim = self.vars.len();
        let mut exps = vec![0u64; dim];
        let mut basis = None;
        let mut offset = 0;
        for factor in text.split('*') {
            let col = column + offset;
            offset += factor.len() + 1;
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(err(line, col, "empty factor"));
            }
            if factor == "1" {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e = e.trim();
                    if e.starts_with('-') {
                        return Err(err(line, col, format!("negative exponent in '{factor}'")));
                    }
                    let value: u64 = e
                        .parse()
                        .map_err(|_| err(line, col, format!("invalid exponent '{e}'")))?;
                    (n.trim(), value)
                }
                None => (factor, 1),
            };
            if is_basis_name(name) && !self.vars.iter().any(|v| v == name) {
                if !allow_basis {
                    return Err(err(line, col, format!("basis element '{name}' outside a submodule")));
                }
                if exp != 1 {
                    return Err(err(line, col, "basis elements take no exponent"));
                }
                if basis.is_some() {
                    return Err(err(line, col, "more than one basis element in a term"));
                }
                let idx: usize = name[1..].parse().map_err(|_| err(line, col, "bad basis index"))?;
                if idx == 0 {
                    return Err(err(line, col, "basis elements are numbered from e1"));
                }
                basis = Some(idx - 1);
                continue;
            }
            let Some(j) = self.vars.iter().position(|v| v == name) else {
                return Err(err(line, col, format!("undeclared variable '{name}'")));
            };
            exps[j] += exp;
            if exps[j] > exponent_cap() as u64 {
                return Err(err(line, col, format!("exponent exceeds cap {}", exponent_cap())));
            }
        }
        Ok((basis, Monomial::new(exps.into_iter().map(|e| e as u32))))
    }

    fn ideal(&self, span: &ListSpan<'_>) -> Result<MonomialIdeal, ParseError> {
        let mut gens = Vec::new();
        for (col, item) in span.items()? {
            gens.push(self.term(span.line, col, item, false)?.1);
        }
        MonomialIdeal::from_generators(self.vars.len(), gens).map_err(|e| err(span.line, span.column, e.to_string()))
    }

    fn submodule(&self, span: &ListSpan<'_>, rank: usize) -> Result<MonomialSubmodule, ParseError> {
        let mut elems = Vec::new();
        for (col, item) in span.items()? {
            let (basis, mono) = self.term(span.line, col, item, true)?;
            let coord = match basis {
                Some(c) if c < rank => c,
                Some(c) => return Err(err(span.line, col, format!("e{} exceeds module rank {rank}", c + 1))),
                None if rank == 1 => 0,
                None => return Err(err(span.line, col, "a basis element e1..er is required for rank > 1")),
            };
            elems.push(ModuleElement::new(coord, mono));
        }
        MonomialSubmodule::from_elements(rank, self.vars.len(), elems)
            .map_err(|e| err(span.line, span.column, e.to_string()))
    }
}

/// Parses the text format into a canonical [`Instance`].
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut rank: Option<usize> = None;
    let mut ideals: BTreeMap<String, ListSpan<'_>> = BTreeMap::new();
    let mut subs: BTreeMap<String, ListSpan<'_>> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let body = content.trim();
        let keyword = body.split_whitespace().next().unwrap_or("");
        let after_kw = &body[keyword.len()..];
        match keyword {
            "vars" => {
                if vars.is_some() {
                    return Err(err(line, indent + 1, "duplicate 'vars' line"));
                }
                let names: Vec<String> = after_kw.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(err(line, indent + 1, "'vars' needs at least one variable"));
                }
                if names.len() > MAX_VARS {
                    return Err(err(line, indent + 1, format!("at most {MAX_VARS} variables")));
                }
                for (i, n) in names.iter().enumerate() {
                    if !is_identifier(n) || is_basis_name(n) {
                        return Err(err(line, indent + 1, format!("invalid variable name '{n}'")));
                    }
                    if names[..i].contains(n) {
                        return Err(err(line, indent + 1, format!("duplicate variable '{n}'")));
                    }
                }
                vars = Some((line, names));
            }
            "module" => {
                let mut words = after_kw.split_whitespace();
                if words.next() != Some("rank") {
                    return Err(err(line, indent + 1, "expected 'module rank <r>'"));
                }
                let value = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|&r| r >= 1)
                    .ok_or_else(|| err(line, indent + 8, "rank must be a positive integer"))?;
                if words.next().is_some() {
                    return Err(err(line, indent + 1, "trailing text after module rank"));
                }
                if rank.replace(value).is_some() {
                    return Err(err(line, indent + 1, "duplicate 'module rank' line"));
                }
            }
            "ideal" | "submodule" => {
                let Some((head, list)) = after_kw.split_once(':') else {
                    return Err(err(line, indent + 1, format!("expected '{keyword} NAME: ...'")));
                };
                let name = head.trim();
                let known = if keyword == "ideal" {
                    matches!(name, "I" | "J")
                } else {
                    name == "N" || SUBMODULE_NAMES.contains(&name)
                };
                if !known {
                    return Err(err(
                        line,
                        indent + keyword.len() + 2,
                        format!("unknown {keyword} '{name}'"),
                    ));
                }
                let column = indent + keyword.len() + head.len() + 2;
                let span = ListSpan {
                    line,
                    column,
                    text: list,
                };
                let table = if keyword == "ideal" { &mut ideals } else { &mut subs };
                if table.insert(name.to_string(), span).is_some() {
                    return Err(err(line, indent + 1, format!("duplicate {keyword} '{name}'")));
                }
            }
            other => return Err(err(line, indent + 1, format!("unknown key '{other}'"))),
        }
    }

    let Some((_, vars)) = vars else {
        return Err(err(1, 1, "missing 'vars' line"));
    };
    let rank = rank.unwrap_or(1);
    let parser = Parser { vars: &vars };
    let Some(ispan) = ideals.get("I") else {
        return Err(err(1, 1, "missing 'ideal I' line"));
    };
    let ideal = parser.ideal(ispan)?;
    let second_ideal = ideals.get("J").map(|s| parser.ideal(s)).transpose()?;
    let relations = match subs.get("N") {
        Some(s) => parser.submodule(s, rank)?,
        None => MonomialSubmodule::zero(rank, vars.len()),
    };
    let mut submodules = BTreeMap::new();
    for name in SUBMODULE_NAMES {
        if let Some(s) = subs.get(name) {
            submodules.insert(name.to_string(), parser.submodule(s, rank)?);
        }
    }
    Ok(Instance {
        vars,
        ideal,
        second_ideal,
        relations,
        submodules,
    })
}

/// Default variable names: `x y z w` up to four variables, `x1 .. xd` beyond.
pub fn default_var_names(dim: usize) -> Vec<String> {
    if dim <= 4 {
        ["x", "y", "z", "w"][..dim].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=dim).map(|j| format!("x{j}")).collect()
    }
}

/// Bounds for random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub max_dim: usize,
    pub max_rank: usize,
    pub max_gens: usize,
    pub max_exp: u32,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_dim: 3,
            max_rank: 2,
            max_gens: 4,
            max_exp: 4,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_dim == 0 || self.max_rank == 0 || self.max_gens == 0 || self.max_exp == 0 {
            return Err("all generation bounds must be positive".into());
        }
        if self.max_dim > 4 || self.max_rank > 4 {
            return Err("generation supports at most 4 variables and rank 4".into());
        }
        Ok(())
    }
}

/// A random nonconstant monomial with exponents in `0..=max_exp`.
pub fn random_monomial<R: Rng>(rng: &mut R, dim: usize, max_exp: u32) -> Monomial {
    loop {
        let m = Monomial::new((0..dim).map(|_| rng.gen_range(0..=max_exp)));
        if !m.is_one() {
            return m;
        }
    }
}

/// A random nonzero proper monomial ideal with `1..=max_gens` generators.
pub fn random_ideal<R: Rng>(rng: &mut R, dim: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    MonomialIdeal::from_generators(dim, (0..count).map(|_| random_monomial(rng, dim, max_exp)))
        .expect("uniform dimension")
}

/// Draws one instance: nonzero proper `I`, and relations with no constant
/// generators, so `E` is never zero.
pub fn gen_random_with<R: Rng>(rng: &mut R, params: GenParams) -> Instance {
    let dim = rng.gen_range(1..=params.max_dim);
    let rank = rng.gen_range(1..=params.max_rank);
    let ideal = random_ideal(rng, dim, params.max_gens, params.max_exp);
    let coords = (0..rank)
        .map(|_| {
            if rng.gen_bool(1.0 / 3.0) {
                MonomialIdeal::zero(dim)
            } else {
                random_ideal(rng, dim, params.max_gens, params.max_exp)
            }
        })
        .collect();
    let relations = MonomialSubmodule::new(coords).expect("uniform dimension");
    Instance::new(default_var_names(dim), ideal, relations)
}

/// `count` instances drawn from one seeded stream.
pub fn gen_corpus(seed: u64, count: usize, params: GenParams) -> Result<Vec<Instance>, String> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| gen_random_with(&mut rng, params)).collect())
}

/// A single seeded instance.
pub fn gen_random(seed: u64, params: GenParams) -> Result<Instance, String> {
    Ok(gen_corpus(seed, 1, params)?.remove(0))
}
