//! The ten 2-subset colors of {1,..,5}, code words, and the middle-layer
//! antichain codes behind the complete-digraph cover number `c(n)`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColorError {
    #[error("color index {0} is outside 1..=10")]
    BadIndex(usize),
    #[error("common_neighbors needs at least one color")]
    EmptyList,
    #[error("pair ({0}, {0}) must consist of two distinct colors")]
    NotDistinct(Color),
}

/// 2-subsets of {1..5} in table order; `COLOR_ELEMS[i - 1]` is `S_i`.
const COLOR_ELEMS: [(u8, u8); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

/// One of the colors `S_1..S_10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const COUNT: usize = 10;

    /// `S_index`, `index` in `1..=10`.
    pub fn new(index: usize) -> Result<Self, ColorError> {
        if (1..=10).contains(&index) {
            Ok(Color(index as u8))
        } else {
            Err(ColorError::BadIndex(index))
        }
    }

    pub fn all() -> impl Iterator<Item = Color> + Clone {
        (1..=10u8).map(Color)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The two elements of the underlying subset, ascending.
    pub fn elems(self) -> [u8; 2] {
        let (a, b) = COLOR_ELEMS[self.0 as usize - 1];
        [a, b]
    }

    /// Bit `e - 1` set for each element `e`.
    pub fn elem_mask(self) -> u8 {
        let [a, b] = self.elems();
        (1 << (a - 1)) | (1 << (b - 1))
    }

    /// Colors are adjacent when their subsets intersect; every color is
    /// adjacent to itself.
    pub fn adjacent(self, other: Color) -> bool {
        self.elem_mask() & other.elem_mask() != 0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

pub fn adjacent(a: Color, b: Color) -> bool {
    a.adjacent(b)
}

/// Set of colors as a bitmask; iteration is lowest index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct ColorSet(u16);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0x3ff);

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        colors.into_iter().fold(ColorSet::EMPTY, |s, c| s.with(c))
    }

    pub fn with(self, c: Color) -> Self {
        ColorSet(self.0 | 1 << (c.0 - 1))
    }

    pub fn without(self, c: Color) -> Self {
        ColorSet(self.0 & !(1 << (c.0 - 1)))
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << (c.0 - 1)) != 0
    }

    pub fn intersect(self, other: ColorSet) -> Self {
        ColorSet(self.0 & other.0)
    }

    pub fn minus(self, other: ColorSet) -> Self {
        ColorSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Color> {
        self.iter().next()
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::all().filter(move |&c| self.contains(c))
    }

    /// Colors adjacent to `c` (including `c`).
    pub fn neighbors_of(c: Color) -> Self {
        ColorSet::from_colors(Color::all().filter(|&d| d.adjacent(c)))
    }
}

/// Colors adjacent to every color in `colors`. An empty slice is an error;
/// use [`common_neighbors_or_all`] when "no constraint" should mean all colors.
pub fn common_neighbors(colors: &[Color]) -> Result<ColorSet, ColorError> {
    if colors.is_empty() {
        return Err(ColorError::EmptyList);
    }
    Ok(common_neighbors_or_all(colors))
}

pub fn common_neighbors_or_all(colors: &[Color]) -> ColorSet {
    colors
        .iter()
        .fold(ColorSet::ALL, |acc, &c| acc.intersect(ColorSet::neighbors_of(c)))
}

/// First adjacent cross pair in the scan order `p.0 q.0`, `p.0 q.1`,
/// `p.1 q.0`, `p.1 q.1`. Two pairs of distinct colors always contain one.
pub fn cross_neighbor_pair(
    p: (Color, Color),
    q: (Color, Color),
) -> Result<(Color, Color), ColorError> {
    for pair in [p, q] {
        if pair.0 == pair.1 {
            return Err(ColorError::NotDistinct(pair.0));
        }
    }
    let found = [(p.0, q.0), (p.0, q.1), (p.1, q.0), (p.1, q.1)]
        .into_iter()
        .find(|(a, b)| a.adjacent(*b))
        .expect("two distinct 2-subsets span at least three of five elements");
    Ok(found)
}

fn middle_binomial(k: u32) -> u128 {
    let r = (k / 2) as u128;
    let k = k as u128;
    // C(k, r) computed incrementally; exact at every step.
    (0..r).fold(1u128, |acc, i| acc * (k - i) / (i + 1))
}

/// Least `k` with `C(k, floor(k/2)) >= n`; `c(0) = c(1) = 0`.
pub fn c_of_n(n: u64) -> u32 {
    let n = n as u128;
    (0..).find(|&k| middle_binomial(k) >= n).unwrap()
}

/// A subset of `{1..width}`; bit `i - 1` of `bits` holds element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeWord {
    pub width: u32,
    pub bits: u64,
}

impl CodeWord {
    pub fn new(width: u32, bits: u64) -> Self {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || bits >> width == 0);
        CodeWord { width, bits }
    }

    pub fn from_elems(width: u32, elems: &[u32]) -> Self {
        let bits = elems.iter().fold(0u64, |b, &e| b | 1 << (e - 1));
        CodeWord::new(width, bits)
    }

    pub fn contains(self, elem: u32) -> bool {
        elem >= 1 && elem <= self.width && self.bits & (1 << (elem - 1)) != 0
    }

    pub fn elems(self) -> Vec<u32> {
        (1..=self.width).filter(|&e| self.contains(e)).collect()
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(self, other: CodeWord) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn comparable(self, other: CodeWord) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems().iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The first `m` subsets of size `floor(k/2)` of `{1..k}` in colex order,
/// `k = c_of_n(m)`. Equal-size distinct sets are pairwise incomparable.
pub fn antichain_codes(m: u64) -> Vec<CodeWord> {
    let k = c_of_n(m);
    let r = k / 2;
    let mut out = Vec::with_capacity(m as usize);
    if m == 0 {
        return out;
    }
    // Colex order on r-subsets is numeric order on their bitmasks.
    let mut bits: u64 = (1u64 << r) - 1;
    loop {
        out.push(CodeWord::new(k, bits));
        if out.len() as u64 == m || bits == 0 {
            break;
        }
        // Gosper's hack: next larger integer with the same popcount.
        let c = bits & bits.wrapping_neg();
        let rr = bits + c;
        bits = (((rr ^ bits) >> 2) / c) | rr;
    }
    debug_assert_eq!(out.len() as u64, m);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize) -> Color {
        Color::new(i).unwrap()
    }

    #[test]
    fn table_order() {
        let elems: Vec<[u8; 2]> = Color::all().map(Color::elems).collect();
        assert_eq!(elems[0], [1, 2]);
        assert_eq!(elems[4], [2, 3]);
        assert_eq!(elems[7], [3, 4]);
        assert_eq!(elems[9], [4, 5]);
        assert_eq!(Color::new(0), Err(ColorError::BadIndex(0)));
        assert_eq!(Color::new(11), Err(ColorError::BadIndex(11)));
        assert_eq!(s(7).to_string(), "S7");
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(s(1), s(1)));
        assert!(!adjacent(s(1), s(8)));
        assert!(adjacent(s(1), s(5)));
    }

    #[test]
    fn common_neighbor_examples() {
        let one = common_neighbors(&[s(1)]).unwrap();
        assert_eq!(one, ColorSet::from_colors((1..=7).map(s)));

        let disjoint = common_neighbors(&[s(1), s(8)]).unwrap();
        assert_eq!(disjoint, ColorSet::from_colors([2, 3, 5, 6].map(s)));

        let meeting = common_neighbors(&[s(1), s(2)]).unwrap();
        assert_eq!(meeting, ColorSet::from_colors([1, 2, 3, 4, 5].map(s)));

        assert_eq!(common_neighbors(&[]), Err(ColorError::EmptyList));
        assert_eq!(common_neighbors_or_all(&[]), ColorSet::ALL);
    }

    #[test]
    fn cross_pair_examples() {
        assert_eq!(
            cross_neighbor_pair((s(1), s(8)), (s(9), s(10))),
            Ok((s(8), s(9)))
        );
        assert_eq!(
            cross_neighbor_pair((s(1), s(2)), (s(1), s(3))),
            Ok((s(1), s(1)))
        );
        assert_eq!(
            cross_neighbor_pair((s(4), s(4)), (s(1), s(3))),
            Err(ColorError::NotDistinct(s(4)))
        );
    }

    #[test]
    fn c_of_n_examples() {
        assert_eq!(c_of_n(0), 0);
        assert_eq!(c_of_n(1), 0);
        assert_eq!(c_of_n(2), 2);
        assert_eq!(c_of_n(7), 5);
        assert_eq!(c_of_n(9), 5);
        assert_eq!(c_of_n(10), 5);
        assert_eq!(c_of_n(11), 6);
    }

    #[test]
    fn antichain_examples() {
        let elems = |m| -> Vec<Vec<u32>> { antichain_codes(m).into_iter().map(CodeWord::elems).collect() };
        assert_eq!(elems(2), vec![vec![1], vec![2]]);
        assert_eq!(
            elems(5),
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]]
        );
        let one = antichain_codes(1);
        assert_eq!(one, vec![CodeWord::new(0, 0)]);
        assert_eq!(one[0].to_string(), "{}");
        assert_eq!(CodeWord::from_elems(4, &[1, 3]).to_string(), "{1,3}");
    }
}
