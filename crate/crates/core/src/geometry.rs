//! Weyl alternation diagrams over lattice windows and empty-region shapes.

use crate::altcond::{lattice_compatible, ClosedForm};
use crate::kwmf::AltSet;
use crate::rootsys::Algebra;
use crate::sweep::{self, Mode};
use crate::weightlat::{to_fund_basis, weight_in, Basis, Weight};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// Inclusive integer window in the algebra's λ convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub c1_min: i64,
    pub c1_max: i64,
    pub c2_min: i64,
    pub c2_max: i64,
}

impl Window {
    pub const DEFAULT_HALF_WIDTH: i64 = 12;

    pub fn new(c1_min: i64, c1_max: i64, c2_min: i64, c2_max: i64) -> Self {
        assert!(c1_min <= c1_max && c2_min <= c2_max, "window must be nonempty");
        Window { c1_min, c1_max, c2_min, c2_max }
    }

    /// [−w, w]².
    pub fn square(w: i64) -> Self {
        Window::new(-w, w, -w, w)
    }

    pub fn width(&self) -> usize {
        (self.c1_max - self.c1_min + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.c2_max - self.c2_min + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, c: (i64, i64)) -> bool {
        (self.c1_min..=self.c1_max).contains(&c.0) && (self.c2_min..=self.c2_max).contains(&c.1)
    }

    /// Rows from the top (largest c2) down, c1 increasing along a row.
    pub fn points(&self) -> Vec<(i64, i64)> {
        (self.c2_min..=self.c2_max)
            .rev()
            .flat_map(|c2| (self.c1_min..=self.c1_max).map(move |c1| (c1, c2)))
            .collect()
    }

    fn index(&self, c: (i64, i64)) -> Option<usize> {
        self.contains(c)
            .then(|| (self.c2_max - c.1) as usize * self.width() + (c.0 - self.c1_min) as usize)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::square(Window::DEFAULT_HALF_WIDTH)
    }
}

/// λ at lattice coordinates (c1, c2) in the algebra's λ convention.
pub fn lambda_at(alg: Algebra, c: (i64, i64)) -> Weight {
    weight_in(alg, Basis::lambda_default(alg), c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramGrid {
    pub algebra: Algebra,
    pub mu: Weight,
    pub window: Window,
    /// Row-major, in the order of [`Window::points`].
    pub cells: Vec<AltSet>,
    /// Distinct nonempty sets by first occurrence; position is the color index.
    pub key: Vec<AltSet>,
}

impl DiagramGrid {
    pub fn get(&self, c: (i64, i64)) -> Option<AltSet> {
        self.window.index(c).map(|i| self.cells[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), AltSet)> + '_ {
        self.window.points().into_iter().zip(self.cells.iter().copied())
    }

    pub fn color_index(&self, set: &AltSet) -> Option<usize> {
        self.key.iter().position(|k| k == set)
    }

    pub fn lambda(&self, c: (i64, i64)) -> Weight {
        lambda_at(self.algebra, c)
    }
}

fn key_of(cells: &[AltSet]) -> Vec<AltSet> {
    let mut key: Vec<AltSet> = Vec::new();
    for c in cells {
        if !c.is_empty() && !key.contains(c) {
            key.push(*c);
        }
    }
    key
}

pub fn diagram_with(form: &ClosedForm, mu: &Weight, window: Window, mode: Mode) -> DiagramGrid {
    let alg = form.algebra;
    let cells = sweep::map(mode, &window.points(), |&c| form.alt_set(&lambda_at(alg, c), mu));
    let key = key_of(&cells);
    DiagramGrid { algebra: alg, mu: *mu, window, cells, key }
}

pub fn diagram(alg: Algebra, mu: &Weight, window: Window) -> DiagramGrid {
    diagram_with(ClosedForm::standard(alg), mu, window, Mode::default_mode())
}

pub fn diagram_sequential(alg: Algebra, mu: &Weight, window: Window) -> DiagramGrid {
    diagram_with(ClosedForm::standard(alg), mu, window, Mode::Sequential)
}

/// Cells whose set is empty, including points off the root lattice.
pub fn empty_region(grid: &DiagramGrid) -> BTreeSet<(i64, i64)> {
    grid.iter().filter(|(_, s)| s.is_empty()).map(|(c, _)| c).collect()
}

/// Empty cells with λ − μ in the root lattice.
pub fn lattice_empty_region(grid: &DiagramGrid) -> BTreeSet<(i64, i64)> {
    grid.iter()
        .filter(|&(c, s)| s.is_empty() && lattice_compatible(grid.algebra, &grid.lambda(c), &grid.mu))
        .map(|(c, _)| c)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeLabel {
    SquareVertexUp,
    SquareEdgeTop,
    EightStar,
    HexagonVertexUp,
    HexagonEdgeTop,
    TwelveStar,
    VerticalStrip,
    HorizontalStrip,
    Cross,
    TriangleUp,
    TriangleDown,
    SixStar,
    PointCluster,
    Unclassified,
}

impl ShapeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ShapeLabel::SquareVertexUp => "square-vertex-up",
            ShapeLabel::SquareEdgeTop => "square-edge-top",
            ShapeLabel::EightStar => "eight-star",
            ShapeLabel::HexagonVertexUp => "hexagon-vertex-up",
            ShapeLabel::HexagonEdgeTop => "hexagon-edge-top",
            ShapeLabel::TwelveStar => "twelve-star",
            ShapeLabel::VerticalStrip => "vertical-strip",
            ShapeLabel::HorizontalStrip => "horizontal-strip",
            ShapeLabel::Cross => "cross",
            ShapeLabel::TriangleUp => "triangle-up",
            ShapeLabel::TriangleDown => "triangle-down",
            ShapeLabel::SixStar => "six-star",
            ShapeLabel::PointCluster => "point-cluster",
            ShapeLabel::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for ShapeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{alg}: mu = {mu} is outside the shape analysis ({reason})")]
pub struct OutOfHypothesis {
    pub alg: Algebra,
    pub mu: String,
    pub reason: &'static str,
}

/// Shape of the empty region from the stated conditions on μ.
pub fn classify_shape(alg: Algebra, mu: &Weight) -> Result<ShapeLabel, OutOfHypothesis> {
    let fail = |reason| OutOfHypothesis { alg, mu: mu.to_string(), reason };
    let (f1, f2) = to_fund_basis(alg, *mu);
    if !(f1.is_integer() && f2.is_integer()) {
        return Err(fail("not an integral weight"));
    }
    let (n, m) = (f1.to_integer(), f2.to_integer());
    match alg {
        Algebra::B2 | Algebra::C2 | Algebra::D2 => {
            if n < 0 || m < 0 {
                return Err(fail("not dominant"));
            }
            let divisible = match alg {
                Algebra::B2 => m % 2 == 0,
                Algebra::C2 => n % 2 == 0,
                _ => n % 2 == 0 && m % 2 == 0,
            };
            if !divisible {
                return Err(fail("divisibility hypothesis fails"));
            }
            Ok(match (alg, n > 0, m > 0) {
                (_, false, false) => ShapeLabel::PointCluster,
                (Algebra::B2, true, false) | (Algebra::C2, false, true) => ShapeLabel::SquareVertexUp,
                (Algebra::B2, false, true) | (Algebra::C2, true, false) => ShapeLabel::SquareEdgeTop,
                (Algebra::D2, true, false) => ShapeLabel::VerticalStrip,
                (Algebra::D2, false, true) => ShapeLabel::HorizontalStrip,
                (Algebra::D2, true, true) => ShapeLabel::Cross,
                _ => ShapeLabel::EightStar,
            })
        }
        Algebra::G2 => {
            let (n, m) = mu.to_ints().ok_or_else(|| fail("not in the root lattice"))?;
            if n < 0 || m < 0 {
                return Err(fail("negative root coordinate"));
            }
            let upper = 2 * n + 1 > 3 * m;
            let right = 2 * m + 1 > n;
            Ok(match (upper, right) {
                (true, true) => ShapeLabel::TwelveStar,
                (true, false) => ShapeLabel::HexagonVertexUp,
                (false, true) => ShapeLabel::HexagonEdgeTop,
                (false, false) => ShapeLabel::Unclassified,
            })
        }
        Algebra::A2 => match mu.to_ints() {
            Some((k, l)) => {
                if k < 0 || l < 0 {
                    return Err(fail("negative root coordinate"));
                }
                Ok(if k == 0 && l == 0 {
                    ShapeLabel::PointCluster
                } else if k == l {
                    ShapeLabel::SixStar
                } else if k > l {
                    ShapeLabel::TriangleUp
                } else {
                    ShapeLabel::TriangleDown
                })
            }
            None => {
                if n < 0 || m < 0 {
                    return Err(fail("not dominant"));
                }
                Ok(ShapeLabel::SixStar)
            }
        },
    }
}

/// True when `points` is symmetric about its centroid.
pub fn point_symmetric(points: &BTreeSet<(i64, i64)>) -> bool {
    if points.is_empty() {
        return true;
    }
    let k = points.len() as i64;
    let (s1, s2) = points.iter().fold((0i64, 0i64), |(a, b), &(x, y)| (a + x, b + y));
    // reflection p ↦ 2c − p with c = s/k; needs 2s divisible by k
    if (2 * s1) % k != 0 || (2 * s2) % k != 0 {
        return false;
    }
    let (t1, t2) = (2 * s1 / k, 2 * s2 / k);
    points.iter().all(|&(x, y)| points.contains(&(t1 - x, t2 - y)))
}

/// Whether `mu` is zero (the degenerate case of the shape rules).
pub fn is_zero(mu: &Weight) -> bool {
    mu.a1.is_zero() && mu.a2.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::weyl_group;
    use crate::weightlat::{to_root_basis, FundCoords};

    fn fund(alg: Algebra, n: i64, m: i64) -> Weight {
        to_root_basis(alg, FundCoords::new(n, m))
    }

    #[test]
    fn a2_example_cell() {
        let g = diagram(Algebra::A2, &Weight::zero(), Window::square(4));
        let a2 = weyl_group(Algebra::A2);
        assert_eq!(g.get((3, 0)), AltSet::from_words(a2, &["1", "s2"]));
    }

    #[test]
    fn d2_key_has_four() {
        let g = diagram(Algebra::D2, &Weight::zero(), Window::square(4));
        assert_eq!(g.key.len(), 4);
    }

    #[test]
    fn origin_window() {
        for alg in Algebra::ALL {
            let g = diagram(alg, &Weight::zero(), Window::square(0));
            assert_eq!(g.cells, vec![AltSet::singleton(0)]);
        }
    }

    #[test]
    fn all_nonempty_has_no_empty_region() {
        let g = DiagramGrid {
            algebra: Algebra::A2,
            mu: Weight::zero(),
            window: Window::square(0),
            cells: vec![AltSet::singleton(0)],
            key: vec![AltSet::singleton(0)],
        };
        assert!(empty_region(&g).is_empty());
    }

    #[test]
    fn shape_examples() {
        assert_eq!(classify_shape(Algebra::B2, &fund(Algebra::B2, 0, 2)), Ok(ShapeLabel::SquareEdgeTop));
        assert_eq!(classify_shape(Algebra::B2, &fund(Algebra::B2, 2, 0)), Ok(ShapeLabel::SquareVertexUp));
        assert_eq!(classify_shape(Algebra::B2, &fund(Algebra::B2, 1, 2)), Ok(ShapeLabel::EightStar));
        assert_eq!(classify_shape(Algebra::C2, &fund(Algebra::C2, 2, 0)), Ok(ShapeLabel::SquareEdgeTop));
        assert_eq!(classify_shape(Algebra::C2, &fund(Algebra::C2, 0, 1)), Ok(ShapeLabel::SquareVertexUp));
        assert_eq!(classify_shape(Algebra::D2, &fund(Algebra::D2, 2, 2)), Ok(ShapeLabel::Cross));
        assert_eq!(classify_shape(Algebra::D2, &fund(Algebra::D2, 2, 0)), Ok(ShapeLabel::VerticalStrip));
        assert_eq!(classify_shape(Algebra::D2, &fund(Algebra::D2, 0, 4)), Ok(ShapeLabel::HorizontalStrip));
        assert_eq!(classify_shape(Algebra::G2, &Weight::from_ints(2, 1)), Ok(ShapeLabel::TwelveStar));
        assert_eq!(classify_shape(Algebra::G2, &Weight::from_ints(3, 0)), Ok(ShapeLabel::HexagonVertexUp));
        assert_eq!(classify_shape(Algebra::G2, &Weight::from_ints(0, 2)), Ok(ShapeLabel::HexagonEdgeTop));
        assert_eq!(classify_shape(Algebra::A2, &Weight::from_ints(1, 1)), Ok(ShapeLabel::SixStar));
        assert_eq!(classify_shape(Algebra::A2, &Weight::from_ints(2, 1)), Ok(ShapeLabel::TriangleUp));
        assert_eq!(classify_shape(Algebra::A2, &Weight::from_ints(1, 2)), Ok(ShapeLabel::TriangleDown));
        assert_eq!(classify_shape(Algebra::A2, &Weight::zero()), Ok(ShapeLabel::PointCluster));
        assert_eq!(classify_shape(Algebra::A2, &fund(Algebra::A2, 1, 2)), Ok(ShapeLabel::SixStar));
    }

    #[test]
    fn shape_errors() {
        assert!(classify_shape(Algebra::B2, &fund(Algebra::B2, 1, 1)).is_err());
        assert!(classify_shape(Algebra::C2, &fund(Algebra::C2, 1, 1)).is_err());
        assert!(classify_shape(Algebra::D2, &fund(Algebra::D2, -2, 0)).is_err());
        assert!(classify_shape(Algebra::G2, &Weight::from_ints(-1, 0)).is_err());
        assert!(classify_shape(Algebra::B2, &Weight::new(crate::Q::new(1, 3), crate::Q::zero())).is_err());
    }

    #[test]
    fn g2_boundary_unclassified() {
        // 2n+1 ≤ 3m and 2m+1 ≤ n has no solution with n, m ≥ 0; equality edges still land somewhere
        for n in 0..30 {
            for m in 0..30 {
                let s = classify_shape(Algebra::G2, &Weight::from_ints(n, m)).unwrap();
                assert_ne!(s, ShapeLabel::Unclassified);
            }
        }
    }

    #[test]
    fn labels_ordered() {
        assert!(ShapeLabel::SquareVertexUp < ShapeLabel::Unclassified);
        assert_eq!(ShapeLabel::TwelveStar.to_string(), "twelve-star");
    }

    #[test]
    fn symmetry_helper() {
        let s: BTreeSet<_> = [(0, 0), (2, 2), (1, 1)].into_iter().collect();
        assert!(point_symmetric(&s));
        let t: BTreeSet<_> = [(0, 0), (2, 2), (1, 0)].into_iter().collect();
        assert!(!point_symmetric(&t));
    }

    #[test]
    fn window_indexing() {
        let w = Window::new(-2, 3, -1, 1);
        for (i, c) in w.points().into_iter().enumerate() {
            assert_eq!(w.index(c), Some(i));
        }
        assert_eq!(w.index((4, 0)), None);
    }
}
