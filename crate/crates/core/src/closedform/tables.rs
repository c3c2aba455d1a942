//! Coefficient tables of the printed rogue-wave polynomials.
//!
//! Each polynomial is a list of [`Block`]s. A block collects the monomials
//! `x^i t^j a^k` that share a factor `√(1+a²)` (when `radical`) and a free
//! parameter factor (`m₁`, `n₁` or none). Coefficients are exact small
//! integers; every power of `√(1+a²)` above one has been folded into `a`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Param {
    One,
    M1,
    N1,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    pub x: u8,
    pub t: u8,
    pub a: u8,
    pub re: f64,
    pub im: f64,
}

impl Term {
    pub const fn new(x: u8, t: u8, a: u8, re: f64, im: f64) -> Self {
        Term { x, t, a, re, im }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Block {
    pub radical: bool,
    pub param: Param,
    pub terms: &'static [Term],
}

/// `F₁`, real.
pub(crate) const F1: &[Block] = &[
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, -2.0, 0.0),
            Term::new(0, 0, 2, -4.0, 0.0),
            Term::new(0, 0, 4, -2.0, 0.0),
            Term::new(0, 2, 0, 2.0, 0.0),
            Term::new(2, 0, 0, 2.0, 0.0),
            Term::new(2, 0, 2, 4.0, 0.0),
            Term::new(2, 0, 4, 2.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[Term::new(1, 1, 1, -4.0, 0.0)],
    },
];

/// `H₁`, real.
pub(crate) const H1: &[Block] = &[Block {
    radical: true,
    param: Param::One,
    terms: &[Term::new(0, 1, 0, 4.0, 0.0)],
}];

/// `D₁`, real and negative.
pub(crate) const D1: &[Block] = &[
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, -1.0, 0.0),
            Term::new(0, 0, 2, -2.0, 0.0),
            Term::new(0, 0, 4, -1.0, 0.0),
            Term::new(0, 2, 0, -1.0, 0.0),
            Term::new(2, 0, 0, -1.0, 0.0),
            Term::new(2, 0, 2, -2.0, 0.0),
            Term::new(2, 0, 4, -1.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[Term::new(1, 1, 1, 2.0, 0.0)],
    },
];

/// `G₁`, real.
pub(crate) const G1: &[Block] = &[
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 1, 3.0, 0.0),
            Term::new(0, 0, 3, 8.0, 0.0),
            Term::new(0, 0, 5, 6.0, 0.0),
            Term::new(0, 0, 9, -1.0, 0.0),
            Term::new(0, 2, 1, -6.0, 0.0),
            Term::new(0, 2, 3, -8.0, 0.0),
            Term::new(0, 2, 5, -2.0, 0.0),
            Term::new(0, 4, 1, -1.0, 0.0),
            Term::new(2, 0, 1, -6.0, 0.0),
            Term::new(2, 0, 3, -20.0, 0.0),
            Term::new(2, 0, 5, -24.0, 0.0),
            Term::new(2, 0, 7, -12.0, 0.0),
            Term::new(2, 0, 9, -2.0, 0.0),
            Term::new(2, 2, 1, -2.0, 0.0),
            Term::new(2, 2, 3, -8.0, 0.0),
            Term::new(2, 2, 5, -6.0, 0.0),
            Term::new(4, 0, 1, -1.0, 0.0),
            Term::new(4, 0, 3, -4.0, 0.0),
            Term::new(4, 0, 5, -6.0, 0.0),
            Term::new(4, 0, 7, -4.0, 0.0),
            Term::new(4, 0, 9, -1.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(1, 1, 0, 8.0, 0.0),
            Term::new(1, 1, 2, 20.0, 0.0),
            Term::new(1, 1, 4, 16.0, 0.0),
            Term::new(1, 1, 6, 4.0, 0.0),
            Term::new(1, 3, 2, 4.0, 0.0),
            Term::new(3, 1, 2, 4.0, 0.0),
            Term::new(3, 1, 4, 8.0, 0.0),
            Term::new(3, 1, 6, 4.0, 0.0),
        ],
    },
];

/// `p₁^{[0]}`.
pub(crate) const P10: &[Block] = &[
    Block {
        radical: false,
        param: Param::One,
        terms: &[Term::new(0, 1, 0, 1.0, -1.0)],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, 1.0, 1.0),
            Term::new(0, 0, 1, -1.0, 1.0),
            Term::new(1, 0, 0, 1.0, 1.0),
            Term::new(1, 0, 1, -1.0, 1.0),
        ],
    },
];

/// `p₂^{[0]}`.
pub(crate) const P20: &[Block] = &[
    Block {
        radical: false,
        param: Param::One,
        terms: &[Term::new(0, 1, 0, 1.0, -1.0)],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, -1.0, -1.0),
            Term::new(0, 0, 1, 1.0, -1.0),
            Term::new(1, 0, 0, 1.0, 1.0),
            Term::new(1, 0, 1, -1.0, 1.0),
        ],
    },
];

/// `p₁^{[1]}`.
pub(crate) const P11: &[Block] = &[
    Block {
        radical: false,
        param: Param::M1,
        terms: &[
            Term::new(0, 0, 0, 0.0, -6.0),
            Term::new(0, 0, 1, 12.0, 0.0),
            Term::new(0, 0, 3, 12.0, 0.0),
            Term::new(0, 0, 4, 0.0, 6.0),
        ],
    },
    Block {
        radical: false,
        param: Param::N1,
        terms: &[
            Term::new(0, 0, 0, 6.0, 0.0),
            Term::new(0, 0, 1, 0.0, 12.0),
            Term::new(0, 0, 3, 0.0, 12.0),
            Term::new(0, 0, 4, -6.0, 0.0),
        ],
    },
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 1, 0, 9.0, 0.0),
            Term::new(0, 1, 1, 0.0, 6.0),
            Term::new(0, 1, 2, 12.0, 0.0),
            Term::new(0, 1, 3, 0.0, 6.0),
            Term::new(0, 1, 4, 3.0, 0.0),
            Term::new(0, 3, 0, 1.0, 0.0),
            Term::new(1, 1, 0, -6.0, 0.0),
            Term::new(1, 1, 1, 0.0, -12.0),
            Term::new(1, 1, 3, 0.0, -12.0),
            Term::new(1, 1, 4, 6.0, 0.0),
            Term::new(2, 1, 0, -3.0, 0.0),
            Term::new(2, 1, 1, 0.0, -6.0),
            Term::new(2, 1, 3, 0.0, -6.0),
            Term::new(2, 1, 4, 3.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, 0.0, 3.0),
            Term::new(0, 0, 1, -9.0, 0.0),
            Term::new(0, 0, 2, 0.0, -6.0),
            Term::new(0, 0, 3, -6.0, 0.0),
            Term::new(0, 0, 4, 0.0, -9.0),
            Term::new(0, 0, 5, 3.0, 0.0),
            Term::new(0, 2, 0, 0.0, 3.0),
            Term::new(0, 2, 1, -3.0, 0.0),
            Term::new(1, 0, 0, 0.0, -3.0),
            Term::new(1, 0, 1, 9.0, 0.0),
            Term::new(1, 0, 2, 0.0, 6.0),
            Term::new(1, 0, 3, 6.0, 0.0),
            Term::new(1, 0, 4, 0.0, 9.0),
            Term::new(1, 0, 5, -3.0, 0.0),
            Term::new(1, 2, 0, 0.0, 3.0),
            Term::new(1, 2, 1, -3.0, 0.0),
            Term::new(2, 0, 0, 0.0, -3.0),
            Term::new(2, 0, 1, 9.0, 0.0),
            Term::new(2, 0, 2, 0.0, 6.0),
            Term::new(2, 0, 3, 6.0, 0.0),
            Term::new(2, 0, 4, 0.0, 9.0),
            Term::new(2, 0, 5, -3.0, 0.0),
            Term::new(3, 0, 0, 0.0, -1.0),
            Term::new(3, 0, 1, 3.0, 0.0),
            Term::new(3, 0, 2, 0.0, 2.0),
            Term::new(3, 0, 3, 2.0, 0.0),
            Term::new(3, 0, 4, 0.0, 3.0),
            Term::new(3, 0, 5, -1.0, 0.0),
        ],
    },
];

/// `p₂^{[1]}`.
pub(crate) const P21: &[Block] = &[
    Block {
        radical: false,
        param: Param::M1,
        terms: &[
            Term::new(0, 0, 0, 0.0, -6.0),
            Term::new(0, 0, 1, 12.0, 0.0),
            Term::new(0, 0, 3, 12.0, 0.0),
            Term::new(0, 0, 4, 0.0, 6.0),
        ],
    },
    Block {
        radical: false,
        param: Param::N1,
        terms: &[
            Term::new(0, 0, 0, 6.0, 0.0),
            Term::new(0, 0, 1, 0.0, 12.0),
            Term::new(0, 0, 3, 0.0, 12.0),
            Term::new(0, 0, 4, -6.0, 0.0),
        ],
    },
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 1, 0, 9.0, 0.0),
            Term::new(0, 1, 1, 0.0, 6.0),
            Term::new(0, 1, 2, 12.0, 0.0),
            Term::new(0, 1, 3, 0.0, 6.0),
            Term::new(0, 1, 4, 3.0, 0.0),
            Term::new(0, 3, 0, 1.0, 0.0),
            Term::new(1, 1, 0, 6.0, 0.0),
            Term::new(1, 1, 1, 0.0, 12.0),
            Term::new(1, 1, 3, 0.0, 12.0),
            Term::new(1, 1, 4, -6.0, 0.0),
            Term::new(2, 1, 0, -3.0, 0.0),
            Term::new(2, 1, 1, 0.0, -6.0),
            Term::new(2, 1, 3, 0.0, -6.0),
            Term::new(2, 1, 4, 3.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, 0.0, -3.0),
            Term::new(0, 0, 1, 9.0, 0.0),
            Term::new(0, 0, 2, 0.0, 6.0),
            Term::new(0, 0, 3, 6.0, 0.0),
            Term::new(0, 0, 4, 0.0, 9.0),
            Term::new(0, 0, 5, -3.0, 0.0),
            Term::new(0, 2, 0, 0.0, -3.0),
            Term::new(0, 2, 1, 3.0, 0.0),
            Term::new(1, 0, 0, 0.0, -3.0),
            Term::new(1, 0, 1, 9.0, 0.0),
            Term::new(1, 0, 2, 0.0, 6.0),
            Term::new(1, 0, 3, 6.0, 0.0),
            Term::new(1, 0, 4, 0.0, 9.0),
            Term::new(1, 0, 5, -3.0, 0.0),
            Term::new(1, 2, 0, 0.0, 3.0),
            Term::new(1, 2, 1, -3.0, 0.0),
            Term::new(2, 0, 0, 0.0, 3.0),
            Term::new(2, 0, 1, -9.0, 0.0),
            Term::new(2, 0, 2, 0.0, -6.0),
            Term::new(2, 0, 3, -6.0, 0.0),
            Term::new(2, 0, 4, 0.0, -9.0),
            Term::new(2, 0, 5, 3.0, 0.0),
            Term::new(3, 0, 0, 0.0, -1.0),
            Term::new(3, 0, 1, 3.0, 0.0),
            Term::new(3, 0, 2, 0.0, 2.0),
            Term::new(3, 0, 3, 2.0, 0.0),
            Term::new(3, 0, 4, 0.0, 3.0),
            Term::new(3, 0, 5, -1.0, 0.0),
        ],
    },
];

/// `ρ₁`.
pub(crate) const RHO1: &[Block] = &[
    Block {
        radical: false,
        param: Param::M1,
        terms: &[
            Term::new(0, 0, 0, 3.0, 0.0),
            Term::new(0, 0, 1, 0.0, 3.0),
            Term::new(0, 0, 2, 9.0, 0.0),
            Term::new(0, 0, 3, 0.0, 9.0),
            Term::new(0, 0, 4, 9.0, 0.0),
            Term::new(0, 0, 5, 0.0, 9.0),
            Term::new(0, 0, 6, 3.0, 0.0),
            Term::new(0, 0, 7, 0.0, 3.0),
            Term::new(1, 0, 0, -3.0, 0.0),
            Term::new(1, 0, 1, 0.0, -3.0),
            Term::new(1, 0, 2, -9.0, 0.0),
            Term::new(1, 0, 3, 0.0, -9.0),
            Term::new(1, 0, 4, -9.0, 0.0),
            Term::new(1, 0, 5, 0.0, -9.0),
            Term::new(1, 0, 6, -3.0, 0.0),
            Term::new(1, 0, 7, 0.0, -3.0),
        ],
    },
    Block {
        radical: false,
        param: Param::N1,
        terms: &[
            Term::new(0, 0, 0, 0.0, 3.0),
            Term::new(0, 0, 1, -3.0, 0.0),
            Term::new(0, 0, 2, 0.0, 9.0),
            Term::new(0, 0, 3, -9.0, 0.0),
            Term::new(0, 0, 4, 0.0, 9.0),
            Term::new(0, 0, 5, -9.0, 0.0),
            Term::new(0, 0, 6, 0.0, 3.0),
            Term::new(0, 0, 7, -3.0, 0.0),
            Term::new(1, 0, 0, 0.0, -3.0),
            Term::new(1, 0, 1, 3.0, 0.0),
            Term::new(1, 0, 2, 0.0, -9.0),
            Term::new(1, 0, 3, 9.0, 0.0),
            Term::new(1, 0, 4, 0.0, -9.0),
            Term::new(1, 0, 5, 9.0, 0.0),
            Term::new(1, 0, 6, 0.0, -3.0),
            Term::new(1, 0, 7, 3.0, 0.0),
        ],
    },
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 1, 1, 6.0, 0.0),
            Term::new(0, 1, 3, 18.0, 0.0),
            Term::new(0, 1, 5, 18.0, 0.0),
            Term::new(0, 1, 7, 6.0, 0.0),
            Term::new(0, 3, 0, 0.0, -4.0),
            Term::new(0, 3, 1, 2.0, 0.0),
            Term::new(0, 3, 2, 0.0, -4.0),
            Term::new(0, 3, 3, 2.0, 0.0),
            Term::new(1, 1, 0, 0.0, -6.0),
            Term::new(1, 1, 2, 0.0, -18.0),
            Term::new(1, 1, 4, 0.0, -18.0),
            Term::new(1, 1, 6, 0.0, -6.0),
            Term::new(1, 3, 0, 0.0, -2.0),
            Term::new(1, 3, 1, 4.0, 0.0),
            Term::new(1, 3, 2, 0.0, -2.0),
            Term::new(1, 3, 3, 4.0, 0.0),
            Term::new(2, 1, 1, -6.0, 0.0),
            Term::new(2, 1, 2, 0.0, -12.0),
            Term::new(2, 1, 3, -6.0, 0.0),
            Term::new(2, 1, 4, 0.0, -24.0),
            Term::new(2, 1, 5, 6.0, 0.0),
            Term::new(2, 1, 6, 0.0, -12.0),
            Term::new(2, 1, 7, 6.0, 0.0),
            Term::new(3, 1, 0, 0.0, -2.0),
            Term::new(3, 1, 2, 0.0, -10.0),
            Term::new(3, 1, 3, 4.0, 0.0),
            Term::new(3, 1, 4, 0.0, -14.0),
            Term::new(3, 1, 5, 8.0, 0.0),
            Term::new(3, 1, 6, 0.0, -6.0),
            Term::new(3, 1, 7, 4.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::M1,
        terms: &[
            Term::new(0, 1, 0, 0.0, -3.0),
            Term::new(0, 1, 1, 6.0, 0.0),
            Term::new(0, 1, 3, 6.0, 0.0),
            Term::new(0, 1, 4, 0.0, 3.0),
        ],
    },
    Block {
        radical: true,
        param: Param::N1,
        terms: &[
            Term::new(0, 1, 0, 3.0, 0.0),
            Term::new(0, 1, 1, 0.0, 6.0),
            Term::new(0, 1, 3, 0.0, 6.0),
            Term::new(0, 1, 4, -3.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, 3.0, 0.0),
            Term::new(0, 0, 1, 0.0, 6.0),
            Term::new(0, 0, 2, 6.0, 0.0),
            Term::new(0, 0, 3, 0.0, 18.0),
            Term::new(0, 0, 5, 0.0, 18.0),
            Term::new(0, 0, 6, -6.0, 0.0),
            Term::new(0, 0, 7, 0.0, 6.0),
            Term::new(0, 0, 8, -3.0, 0.0),
            Term::new(0, 2, 0, 6.0, 0.0),
            Term::new(0, 2, 1, 0.0, 6.0),
            Term::new(0, 2, 2, 6.0, 0.0),
            Term::new(0, 2, 3, 0.0, 6.0),
            Term::new(0, 4, 0, -1.0, 0.0),
            Term::new(1, 0, 0, 6.0, 0.0),
            Term::new(1, 0, 1, 0.0, 12.0),
            Term::new(1, 0, 2, 12.0, 0.0),
            Term::new(1, 0, 3, 0.0, 36.0),
            Term::new(1, 0, 5, 0.0, 36.0),
            Term::new(1, 0, 6, -12.0, 0.0),
            Term::new(1, 0, 7, 0.0, 12.0),
            Term::new(1, 0, 8, -6.0, 0.0),
            Term::new(1, 2, 0, 6.0, 0.0),
            Term::new(1, 2, 1, 0.0, 12.0),
            Term::new(1, 2, 3, 0.0, 12.0),
            Term::new(1, 2, 4, -6.0, 0.0),
            Term::new(2, 2, 1, 0.0, 6.0),
            Term::new(2, 2, 2, -6.0, 0.0),
            Term::new(2, 2, 3, 0.0, 6.0),
            Term::new(2, 2, 4, -6.0, 0.0),
            Term::new(3, 0, 0, 2.0, 0.0),
            Term::new(3, 0, 1, 0.0, 4.0),
            Term::new(3, 0, 2, 4.0, 0.0),
            Term::new(3, 0, 3, 0.0, 12.0),
            Term::new(3, 0, 5, 0.0, 12.0),
            Term::new(3, 0, 6, -4.0, 0.0),
            Term::new(3, 0, 7, 0.0, 4.0),
            Term::new(3, 0, 8, -2.0, 0.0),
            Term::new(4, 0, 0, 1.0, 0.0),
            Term::new(4, 0, 1, 0.0, 2.0),
            Term::new(4, 0, 2, 2.0, 0.0),
            Term::new(4, 0, 3, 0.0, 6.0),
            Term::new(4, 0, 5, 0.0, 6.0),
            Term::new(4, 0, 6, -2.0, 0.0),
            Term::new(4, 0, 7, 0.0, 2.0),
            Term::new(4, 0, 8, -1.0, 0.0),
        ],
    },
];

/// `ρ₂`.
pub(crate) const RHO2: &[Block] = &[
    Block {
        radical: false,
        param: Param::M1,
        terms: &[
            Term::new(0, 0, 0, -3.0, 0.0),
            Term::new(0, 0, 1, 0.0, -3.0),
            Term::new(0, 0, 2, -9.0, 0.0),
            Term::new(0, 0, 3, 0.0, -9.0),
            Term::new(0, 0, 4, -9.0, 0.0),
            Term::new(0, 0, 5, 0.0, -9.0),
            Term::new(0, 0, 6, -3.0, 0.0),
            Term::new(0, 0, 7, 0.0, -3.0),
            Term::new(1, 0, 0, -3.0, 0.0),
            Term::new(1, 0, 1, 0.0, -3.0),
            Term::new(1, 0, 2, -9.0, 0.0),
            Term::new(1, 0, 3, 0.0, -9.0),
            Term::new(1, 0, 4, -9.0, 0.0),
            Term::new(1, 0, 5, 0.0, -9.0),
            Term::new(1, 0, 6, -3.0, 0.0),
            Term::new(1, 0, 7, 0.0, -3.0),
        ],
    },
    Block {
        radical: false,
        param: Param::N1,
        terms: &[
            Term::new(0, 0, 0, 0.0, -3.0),
            Term::new(0, 0, 1, 3.0, 0.0),
            Term::new(0, 0, 2, 0.0, -9.0),
            Term::new(0, 0, 3, 9.0, 0.0),
            Term::new(0, 0, 4, 0.0, -9.0),
            Term::new(0, 0, 5, 9.0, 0.0),
            Term::new(0, 0, 6, 0.0, -3.0),
            Term::new(0, 0, 7, 3.0, 0.0),
            Term::new(1, 0, 0, 0.0, -3.0),
            Term::new(1, 0, 1, 3.0, 0.0),
            Term::new(1, 0, 2, 0.0, -9.0),
            Term::new(1, 0, 3, 9.0, 0.0),
            Term::new(1, 0, 4, 0.0, -9.0),
            Term::new(1, 0, 5, 9.0, 0.0),
            Term::new(1, 0, 6, 0.0, -3.0),
            Term::new(1, 0, 7, 3.0, 0.0),
        ],
    },
    Block {
        radical: false,
        param: Param::One,
        terms: &[
            Term::new(0, 1, 1, -6.0, 0.0),
            Term::new(0, 1, 3, -18.0, 0.0),
            Term::new(0, 1, 5, -18.0, 0.0),
            Term::new(0, 1, 7, -6.0, 0.0),
            Term::new(0, 3, 0, 0.0, 4.0),
            Term::new(0, 3, 1, -2.0, 0.0),
            Term::new(0, 3, 2, 0.0, 4.0),
            Term::new(0, 3, 3, -2.0, 0.0),
            Term::new(1, 1, 0, 0.0, -6.0),
            Term::new(1, 1, 2, 0.0, -18.0),
            Term::new(1, 1, 4, 0.0, -18.0),
            Term::new(1, 1, 6, 0.0, -6.0),
            Term::new(1, 3, 0, 0.0, -2.0),
            Term::new(1, 3, 1, 4.0, 0.0),
            Term::new(1, 3, 2, 0.0, -2.0),
            Term::new(1, 3, 3, 4.0, 0.0),
            Term::new(2, 1, 1, 6.0, 0.0),
            Term::new(2, 1, 2, 0.0, 12.0),
            Term::new(2, 1, 3, 6.0, 0.0),
            Term::new(2, 1, 4, 0.0, 24.0),
            Term::new(2, 1, 5, -6.0, 0.0),
            Term::new(2, 1, 6, 0.0, 12.0),
            Term::new(2, 1, 7, -6.0, 0.0),
            Term::new(3, 1, 0, 0.0, -2.0),
            Term::new(3, 1, 2, 0.0, -10.0),
            Term::new(3, 1, 3, 4.0, 0.0),
            Term::new(3, 1, 4, 0.0, -14.0),
            Term::new(3, 1, 5, 8.0, 0.0),
            Term::new(3, 1, 6, 0.0, -6.0),
            Term::new(3, 1, 7, 4.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::M1,
        terms: &[
            Term::new(0, 1, 0, 0.0, -3.0),
            Term::new(0, 1, 1, 6.0, 0.0),
            Term::new(0, 1, 3, 6.0, 0.0),
            Term::new(0, 1, 4, 0.0, 3.0),
        ],
    },
    Block {
        radical: true,
        param: Param::N1,
        terms: &[
            Term::new(0, 1, 0, 3.0, 0.0),
            Term::new(0, 1, 1, 0.0, 6.0),
            Term::new(0, 1, 3, 0.0, 6.0),
            Term::new(0, 1, 4, -3.0, 0.0),
        ],
    },
    Block {
        radical: true,
        param: Param::One,
        terms: &[
            Term::new(0, 0, 0, 3.0, 0.0),
            Term::new(0, 0, 1, 0.0, 6.0),
            Term::new(0, 0, 2, 6.0, 0.0),
            Term::new(0, 0, 3, 0.0, 18.0),
            Term::new(0, 0, 5, 0.0, 18.0),
            Term::new(0, 0, 6, -6.0, 0.0),
            Term::new(0, 0, 7, 0.0, 6.0),
            Term::new(0, 0, 8, -3.0, 0.0),
            Term::new(0, 2, 0, 6.0, 0.0),
            Term::new(0, 2, 1, 0.0, 6.0),
            Term::new(0, 2, 2, 6.0, 0.0),
            Term::new(0, 2, 3, 0.0, 6.0),
            Term::new(0, 4, 0, -1.0, 0.0),
            Term::new(1, 0, 0, -6.0, 0.0),
            Term::new(1, 0, 1, 0.0, -12.0),
            Term::new(1, 0, 2, -12.0, 0.0),
            Term::new(1, 0, 3, 0.0, -36.0),
            Term::new(1, 0, 5, 0.0, -36.0),
            Term::new(1, 0, 6, 12.0, 0.0),
            Term::new(1, 0, 7, 0.0, -12.0),
            Term::new(1, 0, 8, 6.0, 0.0),
            Term::new(1, 2, 0, -6.0, 0.0),
            Term::new(1, 2, 1, 0.0, -12.0),
            Term::new(1, 2, 3, 0.0, -12.0),
            Term::new(1, 2, 4, 6.0, 0.0),
            Term::new(2, 2, 1, 0.0, 6.0),
            Term::new(2, 2, 2, -6.0, 0.0),
            Term::new(2, 2, 3, 0.0, 6.0),
            Term::new(2, 2, 4, -6.0, 0.0),
            Term::new(3, 0, 0, -2.0, 0.0),
            Term::new(3, 0, 1, 0.0, -4.0),
            Term::new(3, 0, 2, -4.0, 0.0),
            Term::new(3, 0, 3, 0.0, -12.0),
            Term::new(3, 0, 5, 0.0, -12.0),
            Term::new(3, 0, 6, 4.0, 0.0),
            Term::new(3, 0, 7, 0.0, -4.0),
            Term::new(3, 0, 8, 2.0, 0.0),
            Term::new(4, 0, 0, 1.0, 0.0),
            Term::new(4, 0, 1, 0.0, 2.0),
            Term::new(4, 0, 2, 2.0, 0.0),
            Term::new(4, 0, 3, 0.0, 6.0),
            Term::new(4, 0, 5, 0.0, 6.0),
            Term::new(4, 0, 6, -2.0, 0.0),
            Term::new(4, 0, 7, 0.0, 2.0),
            Term::new(4, 0, 8, -1.0, 0.0),
        ],
    },
];
