use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};
use weylalt::altcond::{theorem_vars, ClosedForm};
use weylalt::geometry::{
    classify_shape, diagram, diagram_with, empty_region, lambda_at, lattice_empty_region, point_symmetric, DiagramGrid,
    ShapeLabel, Window,
};
use weylalt::kwmf::alt_set_oracle;
use weylalt::render::{emit_csv, emit_svg, emit_tikz, Palette};
use weylalt::rootsys::{weyl_group, Algebra};
use weylalt::sweep::Mode;
use weylalt::weightlat::{to_root_basis, FundCoords, Weight};
use weylalt::Q;

fn fund(alg: Algebra, n: i64, m: i64) -> Weight {
    to_root_basis(alg, FundCoords::new(n, m))
}

fn sample_grids() -> Vec<DiagramGrid> {
    let w = Window::square(10);
    vec![
        diagram(Algebra::A2, &Weight::zero(), w),
        diagram(Algebra::A2, &Weight::from_ints(2, 1), w),
        diagram(Algebra::B2, &Weight::zero(), w),
        diagram(Algebra::B2, &fund(Algebra::B2, 1, 2), w),
        diagram(Algebra::C2, &fund(Algebra::C2, 2, 1), w),
        diagram(Algebra::D2, &fund(Algebra::D2, 2, 2), w),
        diagram(Algebra::G2, &Weight::from_ints(2, 1), w),
    ]
}

#[test]
fn diagram_cells_match_oracle() {
    for g in sample_grids() {
        for (c, set) in g.iter() {
            assert_eq!(set, alt_set_oracle(g.algebra, &lambda_at(g.algebra, c), &g.mu), "{} {c:?}", g.algebra);
        }
    }
}

#[test]
fn key_is_stable_and_mode_independent() {
    let mu = fund(Algebra::C2, 2, 3);
    let w = Window::new(-9, 7, -5, 11);
    let form = ClosedForm::standard(Algebra::C2);
    let a = diagram_with(form, &mu, w, Mode::Parallel);
    let b = diagram_with(form, &mu, w, Mode::Sequential);
    assert_eq!(a, b);
    assert_eq!(a, diagram(Algebra::C2, &mu, w));
    assert_eq!(a.cells.len(), 17 * 17);
    let mut seen = BTreeSet::new();
    let firsts: Vec<_> = a.cells.iter().filter(|s| !s.is_empty() && seen.insert(**s)).copied().collect();
    assert_eq!(firsts, a.key);
}

/// Each condition is affine in the window coordinates with the gradient its
/// coefficients imply, and its solution set is the lattice half-plane on one
/// side of the zero line.
#[test]
fn boundary_lines_are_affine_half_planes() {
    let w = Window::square(12);
    for alg in Algebra::ALL {
        let form = ClosedForm::standard(alg);
        let mu = match alg {
            Algebra::A2 | Algebra::G2 => Weight::from_ints(1, 2),
            _ => fund(alg, 2, 2),
        };
        for idx in 0..weyl_group(alg).len() {
            for label in form.pair_labels(idx) {
                let cond = form.condition(label).unwrap();
                let f = |c: (i64, i64)| cond.value(&theorem_vars(alg, &lambda_at(alg, c), &mu));
                let k = cond.coeffs;
                let grad = match alg {
                    // x = (c1 - c2) / 3, y = c2
                    Algebra::A2 => (k[0] * Q::new(1, 3), k[1] - k[0] * Q::new(1, 3)),
                    _ => (k[0], k[1]),
                };
                let f0 = f((0, 0));
                let step = grad.0.abs() + grad.1.abs();
                for c in w.points() {
                    let v = f(c);
                    assert_eq!(v, f0 + grad.0 * Q::from(c.0) + grad.1 * Q::from(c.1), "{alg} {label} not affine");
                    let inside = v >= Q::from(0);
                    let neighbours = [(c.0 + 1, c.1), (c.0 - 1, c.1), (c.0, c.1 + 1), (c.0, c.1 - 1)];
                    let on_boundary = inside && neighbours.iter().any(|&n| w.contains(n) && f(n) < Q::from(0));
                    if on_boundary {
                        assert!(v < step, "{alg} {label}: boundary point {c:?} too far from the line");
                    }
                }
            }
        }
    }
}

fn touches(region: &BTreeSet<(i64, i64)>, w: i64) -> [bool; 4] {
    [
        region.iter().any(|c| c.0 == -w),
        region.iter().any(|c| c.0 == w),
        region.iter().any(|c| c.1 == -w),
        region.iter().any(|c| c.1 == w),
    ]
}

#[test]
fn b2_eight_star_is_symmetric_and_larger() {
    let mu = fund(Algebra::B2, 1, 2);
    assert_eq!(classify_shape(Algebra::B2, &mu), Ok(ShapeLabel::EightStar));
    let star = lattice_empty_region(&diagram(Algebra::B2, &mu, Window::square(20)));
    let base = lattice_empty_region(&diagram(Algebra::B2, &Weight::zero(), Window::square(20)));
    assert!(point_symmetric(&star));
    assert!(star.len() > base.len(), "{} vs {}", star.len(), base.len());
    assert_eq!(touches(&star, 20), [false; 4]);
    // centred on -ρ
    let (s1, s2) = star.iter().fold((0, 0), |(a, b), c| (a + c.0, b + c.1));
    assert_eq!((s1, s2), (-(star.len() as i64), -(star.len() as i64)));
}

#[test]
fn b2_and_c2_squares_are_bounded() {
    for (alg, n, m) in [(Algebra::B2, 2, 0), (Algebra::B2, 0, 2), (Algebra::C2, 2, 0), (Algebra::C2, 0, 1)] {
        let region = lattice_empty_region(&diagram(alg, &fund(alg, n, m), Window::square(20)));
        assert!(!region.is_empty());
        assert_eq!(touches(&region, 20), [false; 4], "{alg} ({n}, {m})");
        assert!(point_symmetric(&region));
    }
}

#[test]
fn d2_strips_and_cross_reach_the_window_edges() {
    let w = 12;
    let edges = |n, m| touches(&lattice_empty_region(&diagram(Algebra::D2, &fund(Algebra::D2, n, m), Window::square(w))), w);
    assert_eq!(classify_shape(Algebra::D2, &fund(Algebra::D2, 2, 0)), Ok(ShapeLabel::VerticalStrip));
    assert_eq!(edges(2, 0), [false, false, true, true]);
    assert_eq!(edges(0, 2), [true, true, false, false]);
    assert_eq!(edges(2, 2), [true; 4]);
    // μ = 0: every lattice point has exactly one element, so only off-lattice points are empty
    let g = diagram(Algebra::D2, &Weight::zero(), Window::square(w));
    assert!(lattice_empty_region(&g).is_empty());
    assert!(empty_region(&g).iter().all(|c| c.0 % 2 != 0 || c.1 % 2 != 0));
}

#[test]
fn a2_mu0_cluster_sits_at_minus_rho() {
    let g = diagram(Algebra::A2, &Weight::zero(), Window::square(12));
    let region = lattice_empty_region(&g);
    assert!(region.contains(&(-1, -1)));
    assert!(region.iter().all(|c| (c.0 + 1).abs() <= 2 && (c.1 + 1).abs() <= 2), "{region:?}");
}

#[test]
fn g2_twelve_star_is_bounded_and_symmetric() {
    let region = lattice_empty_region(&diagram(Algebra::G2, &Weight::from_ints(2, 1), Window::square(24)));
    assert!(!region.is_empty());
    assert_eq!(touches(&region, 24), [false; 4]);
    assert!(point_symmetric(&region));
}

fn attr<'a>(line: &'a str, name: &str) -> &'a str {
    let key = format!(" {name}=\"");
    let start = line.find(&key).unwrap() + key.len();
    &line[start..start + line[start..].find('"').unwrap()]
}

fn plane(alg: Algebra) -> [[f64; 2]; 2] {
    let h = 3f64.sqrt() / 2.0;
    match alg {
        Algebra::A2 => [[1.0, 0.0], [-0.5, h]],
        Algebra::B2 => [[0.0, 2.0], [1.0, -1.0]],
        Algebra::C2 => [[1.0, -1.0], [0.0, 2.0]],
        Algebra::D2 => [[2.0, 0.0], [0.0, 2.0]],
        Algebra::G2 => [[1.0, 0.0], [-1.5, h]],
    }
}

#[test]
fn csv_and_svg_agree() {
    for g in sample_grids() {
        let csv = String::from_utf8(emit_csv(&g)).unwrap();
        let rows: BTreeSet<(i64, i64)> = csv
            .lines()
            .skip(1)
            .filter(|l| !l.ends_with(','))
            .map(|l| {
                let mut it = l.split(',');
                (it.next().unwrap().parse().unwrap(), it.next().unwrap().parse().unwrap())
            })
            .collect();
        let svg = String::from_utf8(emit_svg(&g, &Palette::default())).unwrap();
        let [a1, a2] = plane(g.algebra);
        let mut circles = BTreeSet::new();
        for line in svg.lines().filter(|l| l.contains("class=\"cell\"")) {
            let c: (i64, i64) = (attr(line, "data-c1").parse().unwrap(), attr(line, "data-c2").parse().unwrap());
            assert!(circles.insert(c));
            if !line.starts_with("<circle") {
                continue;
            }
            let lam = lambda_at(g.algebra, c);
            let (r1, r2) = (
                *lam.a1.numer() as f64 / *lam.a1.denom() as f64,
                *lam.a2.numer() as f64 / *lam.a2.denom() as f64,
            );
            let x = 16.0 * (r1 * a1[0] + r2 * a2[0]);
            let y = -16.0 * (r1 * a1[1] + r2 * a2[1]);
            let cx: f64 = attr(line, "cx").parse().unwrap();
            let cy: f64 = attr(line, "cy").parse().unwrap();
            assert!((cx - x).abs() < 1e-6 && (cy - y).abs() < 1e-6, "{c:?}: ({cx}, {cy}) vs ({x}, {y})");
        }
        assert_eq!(rows, circles, "{}", g.algebra);
        let tikz = String::from_utf8(emit_tikz(&g, &Palette::default())).unwrap();
        assert_eq!(tikz.matches("\\fill").count(), rows.len());
    }
}

#[test]
fn legend_lists_each_used_style_once() {
    // past the palette length a color comes back with another marker, so a style is (element, fill)
    let style = |l: &str| (l.split_whitespace().next().unwrap().to_string(), attr(l, "fill").to_string());
    for g in sample_grids() {
        let svg = String::from_utf8(emit_svg(&g, &Palette::default())).unwrap();
        let body: BTreeSet<_> = svg.lines().filter(|l| l.contains("class=\"cell\"")).map(style).collect();
        let mut legend: BTreeMap<_, usize> = BTreeMap::new();
        for l in svg.lines().filter(|l| l.contains("class=\"swatch\"")) {
            *legend.entry(style(l)).or_default() += 1;
        }
        assert!(legend.values().all(|&n| n == 1));
        assert_eq!(body, legend.keys().cloned().collect(), "{}", g.algebra);
        let texts = svg.lines().filter(|l| l.starts_with("<text")).count();
        assert_eq!(texts, g.key.len());
    }
}

#[test]
fn legend_uses_set_notation() {
    let g = diagram(Algebra::A2, &Weight::zero(), Window::square(4));
    let svg = String::from_utf8(emit_svg(&g, &Palette::default())).unwrap();
    assert!(svg.contains(">{1, s2}</text>"));
}

#[test]
fn palette_beyond_its_length_changes_marker() {
    let g = diagram(Algebra::B2, &fund(Algebra::B2, 1, 2), Window::square(10));
    assert!(g.key.len() > 2);
    let p = Palette::new(["#111111", "#222222"]);
    let svg = String::from_utf8(emit_svg(&g, &p)).unwrap();
    assert!(svg.contains("<rect class=\"cell\""));
    let tikz = String::from_utf8(emit_tikz(&g, &p)).unwrap();
    assert!(tikz.contains("rectangle"));
}
