//! Fixtures shared by the criterion benchmarks.

use rrclosure::{MonomialIdeal, MonomialSubmodule, QuotientPresentation};

/// `(x^4, x^3y, xy^3, y^4)`: the closure adds `x^2y^2`.
pub fn classic_ideal() -> MonomialIdeal {
    MonomialIdeal::from_exponents(&[[4, 0], [3, 1], [1, 3], [0, 4]])
}

/// A three-variable ideal with mixed supports.
pub fn mixed_ideal() -> MonomialIdeal {
    MonomialIdeal::from_exponents(&[[3, 0, 1], [0, 2, 2], [1, 3, 0], [2, 1, 1]])
}

/// `E = R^2 / [(x^2 y) ; (y^3, x z)]` over `k[x, y, z]`.
pub fn rank_two_module() -> QuotientPresentation {
    let n = MonomialSubmodule::new(vec![
        MonomialIdeal::from_exponents(&[[2, 1, 0]]),
        MonomialIdeal::from_exponents(&[[0, 3, 0], [1, 0, 1]]),
    ])
    .expect("same dimension");
    QuotientPresentation::new(n)
}
