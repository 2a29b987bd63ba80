//! Example values computed by the brute-force oracle and frozen here. Each
//! test re-derives the value with the oracle at the stated truncation degree
//! and checks the structural result against the same literal.

use rrclosure::ass::{
    ass_cyclic, ass_ideal_subquotient, ass_module_quotient, ass_rr_sequence, eventual_equality_check,
};
use rrclosure::closure::{rr_closure_general, rr_ideal, rr_power};
use rrclosure::decompose::irreducible_decomposition;
use rrclosure::oracle::{chain_term_expr, oracle_ass, oracle_closure_terms, oracle_eval, truncate_ideal, Expr};
use rrclosure::reduction::{is_rr_reduction, uniform_reduction_index};
use rrclosure::{
    ChainLimits, ModuleElement, Monomial, MonomialIdeal, MonomialPrime, MonomialSubmodule, PrimeSet,
    QuotientPresentation, VarSet,
};

fn id(gens: &[[u32; 2]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(gens)
}

fn sub(i: MonomialIdeal) -> MonomialSubmodule {
    MonomialSubmodule::from_ideal(i)
}

fn primes(sets: &[&[usize]]) -> PrimeSet {
    sets.iter()
        .map(|s| MonomialPrime::new(2, VarSet::from_indices(s.iter().copied())))
        .collect()
}

/// Generators of the oracle value within its exact range, which must reach
/// the generators of `expected`.
fn oracle_value(expr: &Expr, degree: u32, expected: &MonomialSubmodule) -> MonomialSubmodule {
    let set = oracle_eval(expr, degree).unwrap();
    assert!(
        set.valid_through().unwrap() >= expected.max_generator_degree(),
        "degree {degree} too small"
    );
    set.generators_within_range().unwrap()
}

#[test]
fn intersection_example() {
    let want = sub(id(&[[2, 0], [1, 1]]));
    let expr = Expr::intersect(Expr::ideal(id(&[[2, 0], [0, 1]])), Expr::ideal(id(&[[1, 0]])));
    assert_eq!(oracle_value(&expr, 5, &want), want);
    assert_eq!(sub(id(&[[2, 0], [0, 1]]).intersect(&id(&[[1, 0]])).unwrap()), want);
}

#[test]
fn colon_examples() {
    let want = sub(id(&[[1, 1]]));
    let expr = Expr::colon(Expr::ideal(id(&[[1, 1]])), Expr::ideal(id(&[[1, 0], [0, 1]])));
    assert_eq!(oracle_value(&expr, 4, &want), want);
    assert_eq!(sub(id(&[[1, 1]]).colon(&id(&[[1, 0], [0, 1]])).unwrap()), want);

    let want = sub(id(&[[1, 0], [0, 1]]));
    let expr = Expr::colon(Expr::ideal(id(&[[2, 0], [1, 1]])), Expr::ideal(id(&[[1, 0]])));
    assert_eq!(oracle_value(&expr, 4, &want), want);
    assert_eq!(sub(id(&[[2, 0], [1, 1]]).colon(&id(&[[1, 0]])).unwrap()), want);
}

#[test]
fn decomposition_examples() {
    let cases = [
        (id(&[[2, 0], [1, 1]]), vec![id(&[[1, 0]]), id(&[[2, 0], [0, 1]])]),
        (
            id(&[[2, 0], [1, 1], [0, 3]]),
            vec![id(&[[2, 0], [0, 1]]), id(&[[1, 0], [0, 3]])],
        ),
    ];
    for (ideal, components) in cases {
        let mut got = irreducible_decomposition(&ideal).unwrap();
        got.sort();
        let mut want = components.clone();
        want.sort();
        assert_eq!(got, want);
        let meet = components
            .iter()
            .skip(1)
            .fold(Expr::ideal(components[0].clone()), |acc, c| {
                Expr::intersect(acc, Expr::ideal(c.clone()))
            });
        let set = oracle_eval(&meet, 5).unwrap();
        assert_eq!(set.members(), truncate_ideal(&ideal, 5).unwrap().members());
    }
}

#[test]
fn module_colon_examples() {
    let w = MonomialSubmodule::new(vec![id(&[[2, 0]]), id(&[[1, 1]])]).unwrap();
    let want = MonomialSubmodule::new(vec![id(&[[1, 0]]), id(&[[0, 1]])]).unwrap();
    let expr = Expr::colon(Expr::module(w.clone()), Expr::ideal(id(&[[1, 0]])));
    assert_eq!(oracle_value(&expr, 4, &want), want);
    assert_eq!(w.colon_ideal(&id(&[[1, 0]])).unwrap(), want);

    let w = sub(id(&[[2, 0], [1, 1]]));
    let e = ModuleElement::new(0, Monomial::new([1, 0]));
    let want = id(&[[1, 0], [0, 1]]);
    let expr = Expr::colon(
        Expr::module(w.clone()),
        Expr::ideal(MonomialIdeal::principal(e.mono.clone())),
    );
    assert_eq!(oracle_value(&expr, 4, &sub(want.clone())), sub(want.clone()));
    assert_eq!(w.colon_element(&e).unwrap(), want);
}

#[test]
fn general_closure_example() {
    let i = id(&[[1, 0], [0, 1]]);
    let w = sub(id(&[[1, 0]]));
    let want = sub(id(&[[2, 0], [1, 1]]));
    let ring = QuotientPresentation::ring(2);
    let terms = oracle_closure_terms(&i, &w, ring.relations(), 8, 6).unwrap();
    for t in &terms {
        assert!(t.valid_through().unwrap() >= 2);
        assert_eq!(t.generators_within_range().unwrap(), want);
    }
    assert_eq!(
        rr_closure_general(&i, &w, &ring, ChainLimits::default()).unwrap().value,
        want
    );
}

#[test]
fn classic_closure_example() {
    let i = id(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
    let want = sub(id(&[[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]]));
    let ring = QuotientPresentation::ring(2);
    let terms = oracle_closure_terms(&i, &ring.full(), ring.relations(), 12, 5).unwrap();
    assert_eq!(
        terms[0].contains(&ModuleElement::new(0, Monomial::new([2, 2]))),
        Some(true)
    );
    assert_eq!(terms[0].generators_within_range().unwrap(), want);
    let r = rr_ideal(&i, ChainLimits::default()).unwrap();
    assert!(r.certified);
    assert_eq!(r.value, want);
}

#[test]
fn closed_ideal_example() {
    let i = id(&[[2, 0], [1, 1]]);
    let ring = QuotientPresentation::ring(2);
    let terms = oracle_closure_terms(&i, &ring.full(), ring.relations(), 12, 3).unwrap();
    for t in terms.iter().take(2) {
        assert_eq!(t.generators_within_range().unwrap(), sub(i.clone()));
    }
    let r = rr_power(&i, 1, &ring, ChainLimits::default()).unwrap();
    assert!(r.chain.iter().all(|t| *t == sub(i.clone())));
}

#[test]
fn colon_identity_classic_at_degree_16() {
    let i = id(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
    let ring = QuotientPresentation::ring(2);
    let closure_1 = rr_power(&i, 1, &ring, ChainLimits::default()).unwrap().value;
    // closure of I^2 is the chain with W = I; colon it by I
    let w = ring.full().scale(&i).unwrap();
    let expr = Expr::colon(chain_term_expr(&i, &w, ring.relations(), 1), Expr::ideal(i.clone()));
    assert_eq!(oracle_value(&expr, 16, &closure_1), closure_1);
    let closure_2 = rr_power(&i, 2, &ring, ChainLimits::default()).unwrap().value;
    assert_eq!(closure_2.colon_ideal(&i).unwrap(), closure_1);
}

#[test]
fn ass_examples() {
    let v = id(&[[2, 0], [1, 1]]);
    let want = primes(&[&[0], &[0, 1]]);
    let o = oracle_ass(&MonomialSubmodule::full(1, 2), &sub(v.clone()), 4).unwrap();
    assert_eq!(o.primes, want);
    let o = oracle_ass(&MonomialSubmodule::full(1, 2), &sub(v.clone()), 5).unwrap();
    assert!(o.complete);
    assert_eq!(o.primes, want);
    assert_eq!(ass_cyclic(&v).unwrap(), want);
    assert_eq!(ass_ideal_subquotient(&MonomialIdeal::unit(2), &v).unwrap(), want);

    let u = id(&[[1, 0]]);
    let want = primes(&[&[0, 1]]);
    let o = oracle_ass(&sub(u.clone()), &sub(v.clone()), 8).unwrap();
    assert!(o.complete);
    assert_eq!(o.primes, want);
    assert_eq!(ass_ideal_subquotient(&u, &v).unwrap(), want);
}

#[test]
fn ass_sequence_of_closed_ideal() {
    let i = id(&[[2, 0], [1, 1]]);
    let ring = QuotientPresentation::ring(2);
    let want = primes(&[&[0], &[0, 1]]);
    let rep = ass_rr_sequence(&i, &ring, 6, ChainLimits::default()).unwrap();
    assert!(rep.increasing);
    assert_eq!(rep.stable_set, want);
    for n in 1..=2 {
        let v = rr_power(&i, n, &ring, ChainLimits::default()).unwrap().value;
        let o = oracle_ass(&ring.full(), &v, 12).unwrap();
        assert!(o.complete);
        assert_eq!(o.primes, want);
        assert_eq!(ass_module_quotient(&ring.full(), &v).unwrap(), want);
    }
}

#[test]
fn eventual_equality_examples() {
    let ring = QuotientPresentation::ring(2);
    let classic = id(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
    let r = eventual_equality_check(&classic, &ring, 10, ChainLimits::default()).unwrap();
    let n0 = r.n0.unwrap();
    assert_eq!(n0, 2);
    // oracle: the closure of I differs from I, and the closure of I^2 is I^2
    let t = oracle_closure_terms(&classic, &ring.full(), ring.relations(), 12, 1).unwrap();
    assert_ne!(t[0].generators_within_range().unwrap(), sub(classic.clone()));
    let sq = classic.power(2).unwrap();
    let w = ring.full().scale(&classic).unwrap();
    for k in 1..=3 {
        let expr = chain_term_expr(&classic, &w, ring.relations(), k);
        assert_eq!(oracle_value(&expr, 8 + 4 * k, &sub(sq.clone())), sub(sq.clone()));
    }

    let closed = id(&[[2, 0], [1, 1]]);
    let r = eventual_equality_check(&closed, &ring, 6, ChainLimits::default()).unwrap();
    assert_eq!(r.n0, Some(1));
}

#[test]
fn reduction_examples() {
    let ring = QuotientPresentation::ring(2);
    let classic = id(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
    let closure = id(&[[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]]);
    let v = is_rr_reduction(
        &sub(classic.clone()),
        &sub(closure),
        &classic,
        &ring,
        ChainLimits::default(),
    )
    .unwrap();
    assert!(!v.holds && v.certified);
    assert_eq!(v.counterexample, Some(ModuleElement::new(0, Monomial::new([2, 2]))));
    // oracle: x^2y^2 * I^n stays outside I^{n+2} for n <= 3
    for n in 1..=3u32 {
        let expr = Expr::power(Expr::ideal(classic.clone()), n + 2);
        let set = oracle_eval(&expr, 4 * n + 8).unwrap();
        let probe = Monomial::new([2 + 4 * n, 2]);
        assert_eq!(set.contains(&ModuleElement::new(0, probe)), Some(false));
    }

    // E = R/(x^2), I = (x), N1 = 0, N2 = (x): I * N2 = (x^2) is zero in E
    let e = QuotientPresentation::cyclic(id(&[[2, 0]]));
    let x = id(&[[1, 0]]);
    let s = uniform_reduction_index(&MonomialSubmodule::zero(1, 2), &sub(x.clone()), &x, &e, 20).unwrap();
    assert_eq!(s, Some(1));
    let lhs = oracle_eval(&Expr::product(Expr::ideal(x.clone()), Expr::ideal(x.clone())), 6).unwrap();
    let rhs = oracle_eval(&Expr::ideal(id(&[[2, 0]])), 6).unwrap();
    assert!(lhs.members().iter().all(|m| rhs.contains(m) == Some(true)));
}
