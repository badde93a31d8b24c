//! Static root-system data and Weyl groups for the five rank-2 algebras.
//!
//! Weights are written in the simple-root basis. Generator matrices come
//! straight from the reflection rules s_i(α_j); the group is closed by
//! breadth-first search and listed in (length, word) order.

use crate::surd::Surd;
use crate::weightlat::Weight;
use crate::Q;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    A2,
    B2,
    C2,
    D2,
    G2,
}

impl Algebra {
    pub const ALL: [Algebra; 5] = [Algebra::A2, Algebra::B2, Algebra::C2, Algebra::D2, Algebra::G2];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::A2 => "A2",
            Algebra::B2 => "B2",
            Algebra::C2 => "C2",
            Algebra::D2 => "D2",
            Algebra::G2 => "G2",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Off-diagonal entries (c, d) with s1(α2) = α2 + c·α1 and s2(α1) = α1 + d·α2.
    fn reflection_shifts(self) -> (i64, i64) {
        match self {
            Algebra::A2 => (1, 1),
            Algebra::B2 => (1, 2),
            Algebra::C2 => (2, 1),
            Algebra::D2 => (0, 0),
            Algebra::G2 => (3, 1),
        }
    }

    pub fn group_order(self) -> usize {
        match self {
            Algebra::A2 => 6,
            Algebra::B2 | Algebra::C2 => 8,
            Algebra::D2 => 4,
            Algebra::G2 => 12,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algebra `{0}` (expected one of a2, b2, c2, d2, g2)")]
pub struct UnknownAlgebra(pub String);

impl FromStr for Algebra {
    type Err = UnknownAlgebra;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a2" | "sl3" => Ok(Algebra::A2),
            "b2" => Ok(Algebra::B2),
            "c2" => Ok(Algebra::C2),
            "d2" => Ok(Algebra::D2),
            "g2" => Ok(Algebra::G2),
            _ => Err(UnknownAlgebra(s.to_string())),
        }
    }
}

/// Integer 2×2 matrix acting on root-basis column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let mut r = [[0i64; 2]; 2];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(r)
    }

    pub fn det(&self) -> i64 {
        let a = &self.0;
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        (0..k).fold(Mat2::IDENTITY, |acc, _| acc.mul(self))
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> Mat2 {
        let d = self.det();
        assert!(d == 1 || d == -1, "matrix is not unimodular");
        let a = &self.0;
        Mat2([[a[1][1] * d, -a[0][1] * d], [-a[1][0] * d, a[0][0] * d]])
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        let a = &self.0;
        Weight::new(
            v.a1 * a[0][0] + v.a2 * a[0][1],
            v.a1 * a[1][0] + v.a2 * a[1][1],
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Generator indices (1 or 2); the word s_i1 s_i2 ... acts right to left.
    pub word: Vec<u8>,
    pub matrix: Mat2,
    pub length: usize,
}

impl WeylElement {
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Word as `s1s2...`, with `identity` standing in for the empty word.
    pub fn name_with(&self, identity: &str) -> String {
        if self.word.is_empty() {
            return identity.to_string();
        }
        self.word.iter().map(|g| format!("s{g}")).collect()
    }

    pub fn name(&self) -> String {
        self.name_with("e")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub algebra: Algebra,
    pub elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        self.elements.iter().position(|e| e.matrix == *m)
    }

    /// Looks up an element from any (not necessarily reduced) word such as
    /// `s2s1s2s1`, `1` or `e`.
    pub fn find_word(&self, word: &str) -> Option<usize> {
        let gens = parse_word(word)?;
        let m = gens
            .iter()
            .fold(Mat2::IDENTITY, |acc, &g| acc.mul(&generator(self.algebra, g)));
        self.index_of(&m)
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.index_of(&self.elements[i].matrix.inverse())
            .expect("group is closed under inverses")
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeylElement> {
        self.elements.iter()
    }
}

impl std::ops::Index<usize> for WeylGroup {
    type Output = WeylElement;
    fn index(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }
}

/// Parses `s1s2s1`, `s1 s2`, `121`, `1`/`e`/`id` (identity).
pub fn parse_word(word: &str) -> Option<Vec<u8>> {
    let w: String = word.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '.').collect();
    if w.is_empty() || w == "e" || w == "1" || w == "id" {
        return Some(Vec::new());
    }
    let digits = w.replace('s', "");
    if w.contains('s') && !w.starts_with('s') {
        return None;
    }
    digits
        .chars()
        .map(|c| match c {
            '1' => Some(1),
            '2' => Some(2),
            _ => None,
        })
        .collect()
}

pub fn generator(alg: Algebra, i: u8) -> Mat2 {
    let (c, d) = alg.reflection_shifts();
    match i {
        1 => Mat2([[-1, c], [0, 1]]),
        2 => Mat2([[1, 0], [d, -1]]),
        _ => panic!("generator index must be 1 or 2"),
    }
}

fn build_group(alg: Algebra) -> WeylGroup {
    let mut elements = vec![WeylElement { word: Vec::new(), matrix: Mat2::IDENTITY, length: 0 }];
    let mut seen: HashSet<Mat2> = HashSet::from([Mat2::IDENTITY]);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for g in [1u8, 2] {
                let m = elements[i].matrix.mul(&generator(alg, g));
                if seen.insert(m) {
                    let mut word = elements[i].word.clone();
                    word.push(g);
                    let length = word.len();
                    elements.push(WeylElement { word, matrix: m, length });
                    next.push(elements.len() - 1);
                }
            }
        }
        frontier = next;
    }
    elements.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    WeylGroup { algebra: alg, elements }
}

pub fn weyl_group(alg: Algebra) -> &'static WeylGroup {
    static GROUPS: OnceLock<Vec<WeylGroup>> = OnceLock::new();
    &GROUPS.get_or_init(|| Algebra::ALL.iter().map(|&a| build_group(a)).collect())[alg.index()]
}

pub fn apply(_alg: Algebra, w: &WeylElement, v: &Weight) -> Weight {
    w.matrix.apply(v)
}

/// Plane embedding of the root basis: columns are the images of α1 and α2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub d: i64,
    pub alpha1: [Surd; 2],
    pub alpha2: [Surd; 2],
}

impl Embedding {
    pub fn place(&self, v: &Weight) -> [Surd; 2] {
        [
            self.alpha1[0] * v.a1 + self.alpha2[0] * v.a2,
            self.alpha1[1] * v.a1 + self.alpha2[1] * v.a2,
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub algebra: Algebra,
    pub simple_roots: [Weight; 2],
    pub positive_roots: Vec<Weight>,
    pub fundamental_weights: [Weight; 2],
    pub rho: Weight,
    pub embedding: Embedding,
}

fn w(a1: i64, a2: i64) -> Weight {
    Weight::from_ints(a1, a2)
}

fn wq(n1: i64, d1: i64, n2: i64, d2: i64) -> Weight {
    Weight::new(Q::new(n1, d1), Q::new(n2, d2))
}

fn rat(p: (i64, i64), q: (i64, i64), d: i64) -> Surd {
    Surd::new(Q::new(p.0, p.1), Q::new(q.0, q.1), d)
}

fn build_data(alg: Algebra) -> RootSystemData {
    let simple_roots = [w(1, 0), w(0, 1)];
    let (positive_roots, fundamental_weights, rho, embedding) = match alg {
        Algebra::A2 => (
            vec![w(1, 0), w(0, 1), w(1, 1)],
            [wq(2, 3, 1, 3), wq(1, 3, 2, 3)],
            w(1, 1),
            Embedding {
                d: 3,
                alpha1: [rat((1, 1), (0, 1), 3), rat((0, 1), (0, 1), 3)],
                alpha2: [rat((-1, 2), (0, 1), 3), rat((0, 1), (1, 2), 3)],
            },
        ),
        Algebra::B2 => (
            vec![w(1, 0), w(0, 1), w(1, 1), w(1, 2)],
            [w(1, 1), wq(1, 2, 1, 1)],
            wq(3, 2, 2, 1),
            Embedding {
                d: 2,
                alpha1: [rat((0, 1), (0, 1), 2), rat((2, 1), (0, 1), 2)],
                alpha2: [rat((1, 1), (0, 1), 2), rat((-1, 1), (0, 1), 2)],
            },
        ),
        Algebra::C2 => (
            vec![w(1, 0), w(0, 1), w(1, 1), w(2, 1)],
            [wq(1, 1, 1, 2), w(1, 1)],
            wq(2, 1, 3, 2),
            Embedding {
                d: 2,
                alpha1: [rat((1, 1), (0, 1), 2), rat((-1, 1), (0, 1), 2)],
                alpha2: [rat((0, 1), (0, 1), 2), rat((2, 1), (0, 1), 2)],
            },
        ),
        Algebra::D2 => (
            vec![w(1, 0), w(0, 1)],
            [wq(1, 2, 0, 1), wq(0, 1, 1, 2)],
            wq(1, 2, 1, 2),
            Embedding {
                d: 1,
                alpha1: [rat((2, 1), (0, 1), 1), rat((0, 1), (0, 1), 1)],
                alpha2: [rat((0, 1), (0, 1), 1), rat((2, 1), (0, 1), 1)],
            },
        ),
        Algebra::G2 => (
            // α1, α2, β1, β2, β3, β4
            vec![w(1, 0), w(0, 1), w(1, 1), w(3, 2), w(2, 1), w(3, 1)],
            [w(2, 1), w(3, 2)],
            w(5, 3),
            Embedding {
                d: 3,
                alpha1: [rat((1, 1), (0, 1), 3), rat((0, 1), (0, 1), 3)],
                alpha2: [rat((-3, 2), (0, 1), 3), rat((0, 1), (1, 2), 3)],
            },
        ),
    };
    RootSystemData { algebra: alg, simple_roots, positive_roots, fundamental_weights, rho, embedding }
}

pub fn algebra_data(alg: Algebra) -> &'static RootSystemData {
    static DATA: OnceLock<Vec<RootSystemData>> = OnceLock::new();
    &DATA.get_or_init(|| Algebra::ALL.iter().map(|&a| build_data(a)).collect())[alg.index()]
}
