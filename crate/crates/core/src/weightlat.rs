//! Exact weights, change of basis and the root-lattice divisibility tests.

use crate::rootsys::{algebra_data, Algebra};
use crate::Q;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coordinates (a1, a2) in the simple-root basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub a1: Q,
    pub a2: Q,
}

impl Weight {
    pub fn new(a1: Q, a2: Q) -> Self {
        Weight { a1, a2 }
    }

    pub fn from_ints(a1: i64, a2: i64) -> Self {
        Weight::new(Q::from_integer(a1), Q::from_integer(a2))
    }

    pub fn zero() -> Self {
        Weight::new(Q::zero(), Q::zero())
    }

    pub fn is_integral(&self) -> bool {
        self.a1.is_integer() && self.a2.is_integer()
    }

    pub fn to_ints(&self) -> Option<(i64, i64)> {
        self.is_integral().then(|| (self.a1.to_integer(), self.a2.to_integer()))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a1 + o.a1, self.a2 + o.a2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a1 - o.a1, self.a2 - o.a2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a1, -self.a2)
    }
}

impl Mul<Q> for Weight {
    type Output = Weight;
    fn mul(self, k: Q) -> Weight {
        Weight::new(self.a1 * k, self.a2 * k)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self * Q::from_integer(k)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_combination(self.a1, self.a2, "a1", "a2"))
    }
}

/// `x a1 + y a2` with the sign of the second term folded in and zero terms dropped.
pub fn format_combination(x: Q, y: Q, e1: &str, e2: &str) -> String {
    match (x.is_zero(), y.is_zero()) {
        (true, true) => "0".to_string(),
        (false, true) => format!("{x} {e1}"),
        (true, false) => format!("{y} {e2}"),
        _ if y < Q::zero() => format!("{x} {e1} - {} {e2}", -y),
        _ => format!("{x} {e1} + {y} {e2}"),
    }
}

/// Integral coordinates (c1, c2) in the fundamental-weight basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundCoords {
    pub c1: i64,
    pub c2: i64,
}

impl FundCoords {
    pub fn new(c1: i64, c2: i64) -> Self {
        FundCoords { c1, c2 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Fund,
    Root,
}

impl Basis {
    /// Usual basis for λ.
    pub fn lambda_default(alg: Algebra) -> Basis {
        match alg {
            Algebra::G2 => Basis::Root,
            _ => Basis::Fund,
        }
    }

    /// Usual basis for μ.
    pub fn mu_default(alg: Algebra) -> Basis {
        match alg {
            Algebra::A2 | Algebra::G2 => Basis::Root,
            _ => Basis::Fund,
        }
    }
}

pub fn fund_to_root(alg: Algebra, c1: Q, c2: Q) -> Weight {
    let [w1, w2] = algebra_data(alg).fundamental_weights;
    w1 * c1 + w2 * c2
}

pub fn to_root_basis(alg: Algebra, f: FundCoords) -> Weight {
    fund_to_root(alg, Q::from_integer(f.c1), Q::from_integer(f.c2))
}

/// Inverse change of basis; returns fundamental coordinates (c1, c2).
pub fn to_fund_basis(alg: Algebra, v: Weight) -> (Q, Q) {
    let [w1, w2] = algebra_data(alg).fundamental_weights;
    // columns w1, w2; Cramer's rule
    let det = w1.a1 * w2.a2 - w2.a1 * w1.a2;
    let c1 = (v.a1 * w2.a2 - w2.a1 * v.a2) / det;
    let c2 = (w1.a1 * v.a2 - v.a1 * w1.a2) / det;
    (c1, c2)
}

/// Weight from integer coordinates in the given basis.
pub fn weight_in(alg: Algebra, basis: Basis, c: (i64, i64)) -> Weight {
    match basis {
        Basis::Root => Weight::from_ints(c.0, c.1),
        Basis::Fund => to_root_basis(alg, FundCoords::new(c.0, c.1)),
    }
}

pub fn in_root_lattice(alg: Algebra, f: FundCoords) -> bool {
    to_root_basis(alg, f).is_integral()
}

/// True when `v` lies in the root lattice.
pub fn weight_in_root_lattice(v: &Weight) -> bool {
    v.is_integral()
}

/// (x, y) with c1 = 3x + y and c2 = y, when 3 | (c1 − c2).
pub fn sl3_param(f: FundCoords) -> Option<(i64, i64)> {
    let diff = f.c1 - f.c2;
    (diff % 3 == 0).then_some((diff / 3, f.c2))
}

/// Rational (x, y) for any fundamental coordinates.
pub fn sl3_param_rational(c1: Q, c2: Q) -> (Q, Q) {
    ((c1 - c2) / Q::from_integer(3), c2)
}

/// Dominance in the fundamental basis.
pub fn is_dominant(alg: Algebra, v: &Weight) -> bool {
    let (c1, c2) = to_fund_basis(alg, *v);
    c1 >= Q::zero() && c2 >= Q::zero()
}
