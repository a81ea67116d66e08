//! Compositions, descent sets and ribbon-diagram geometry.
//!
//! A composition `I = (i_1, ..., i_r)` of `n` is encoded alongside its
//! descent set `Des(I) = {i_1, i_1 + i_2, ..., i_1 + ... + i_{r-1}}`.
//! The descent set is cached as a bit code in which descent `k` occupies bit
//! `n - 1 - k`, so that sorting by code reproduces the canonical order used
//! for every matrix in the crate (descent indicator of position 1 is the most
//! significant bit).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest composition size whose descent code fits in a `u64`.
pub const MAX_SIZE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    n: usize,
    code: u64,
}

/// A cell of a ribbon diagram, 1-based, rows counted downwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_SIZE {
            return Err(Error::TooLarge(n));
        }
        let mut code = 0u64;
        let mut acc = 0;
        for &p in &parts[..parts.len().saturating_sub(1)] {
            acc += p;
            code |= 1 << (n - 1 - acc);
        }
        Ok(Self { parts, n, code })
    }

    /// The empty composition of 0, the unit for concatenation.
    pub fn empty() -> Self {
        Self { parts: Vec::new(), n: 0, code: 0 }
    }

    /// The one-part composition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::new(vec![n]).expect("row composition")
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn column(n: usize) -> Self {
        Self::new(vec![1; n]).expect("column composition")
    }

    /// Inverse of [`Composition::descent_set`].
    pub fn from_descents(descents: &[usize], n: usize) -> Result<Self> {
        if n == 0 {
            return match descents.first() {
                None => Ok(Self::empty()),
                Some(&d) => Err(Error::DescentOutOfRange { descent: d, n }),
            };
        }
        let mut code = 0u64;
        for &d in descents {
            if d == 0 || d >= n {
                return Err(Error::DescentOutOfRange { descent: d, n });
            }
            code |= 1 << (n - 1 - d);
        }
        Self::from_code(n, code)
    }

    /// Builds the composition with the given canonical index.
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        if n == 0 || n > MAX_SIZE {
            return Err(Error::TooLarge(n));
        }
        if n < 64 && code >> (n - 1) != 0 {
            return Err(Error::DescentOutOfRange { descent: 0, n });
        }
        let mut parts = Vec::with_capacity(code.count_ones() as usize + 1);
        let mut last = 0;
        for k in 1..n {
            if code >> (n - 1 - k) & 1 == 1 {
                parts.push(k - last);
                last = k;
            }
        }
        parts.push(n - last);
        Ok(Self { parts, n, code })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of parts, `l(I)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Position in [`canonical_order`].
    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn index(&self) -> usize {
        self.code as usize
    }

    pub fn is_descent(&self, k: usize) -> bool {
        k >= 1 && k < self.n && self.code >> (self.n - 1 - k) & 1 == 1
    }

    /// Sorted descent set.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.n).filter(|&k| self.is_descent(k)).collect()
    }

    /// `{1..n-1} \ Des(I)`.
    pub fn non_descents(&self) -> Vec<usize> {
        (1..self.n).filter(|&k| !self.is_descent(k)).collect()
    }

    /// Number of descents strictly below `k`; `k` may range over `1..=n`.
    pub fn d(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange { k, n: self.n });
        }
        Ok(self.d_unchecked(k))
    }

    pub(crate) fn d_unchecked(&self, k: usize) -> usize {
        (1..k).filter(|&j| self.is_descent(j)).count()
    }

    /// Cell of box `k` (1-based) in the ribbon diagram.
    pub fn ribbon_cell(&self, k: usize) -> Result<Cell> {
        let d = self.d(k)?;
        Ok(Cell { row: 1 + d, col: k - d })
    }

    /// All `n` cells of the ribbon diagram, box 1 first.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.n);
        let mut cell = Cell { row: 1, col: 1 };
        for k in 1..=self.n {
            out.push(cell);
            if self.is_descent(k) {
                cell.row += 1;
            } else {
                cell.col += 1;
            }
        }
        out
    }

    /// Ribbon conjugate: the composition whose descent set is the complement.
    pub fn conjugate(&self) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let mask = if self.n == 64 { u64::MAX >> 1 } else { (1u64 << (self.n - 1)) - 1 };
        Self::from_code(self.n, !self.code & mask).expect("complement code")
    }

    /// Mirror image `(i_r, ..., i_1)`.
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self::new(parts).expect("reversed composition")
    }

    /// Transpose of the ribbon shape (reverse of the conjugate).
    pub fn ribbon_transpose(&self) -> Self {
        self.conjugate().reverse()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::new(parts).expect("concatenation")
    }

    /// `(i_1, ..., i_{r-1}, i_r + k_1, k_2, ..., k_s)`; both must be nonempty.
    pub fn near_concat(&self, other: &Self) -> Self {
        assert!(!self.is_empty() && !other.is_empty(), "near_concat of empty composition");
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Self::new(parts).expect("near concatenation")
    }

    /// `L'`: last part incremented.
    pub fn grow_last(&self) -> Self {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Self::new(parts).expect("grown composition")
    }

    /// `L''`: a part 1 appended.
    pub fn append_one(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.push(1);
        Self::new(parts).expect("appended composition")
    }

    /// The composition `L` of `n - 1` with `self = L'` or `self = L''`.
    pub fn parent(&self) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::TooSmall { n: self.n, min: 2 });
        }
        let mut parts = self.parts.clone();
        let last = parts.last_mut().unwrap();
        if *last >= 2 {
            *last -= 1;
        } else {
            parts.pop();
        }
        Self::new(parts)
    }

    /// Compact label in the style of printed matrices: `211`, or dotted parts
    /// (`10.1.1`) when some part has more than one digit.
    pub fn label(&self) -> String {
        if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
        }
    }
}

/// All compositions of `n` in canonical order (ascending descent code).
pub fn canonical_order(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    assert!(n < MAX_SIZE, "canonical_order({n}) is too large to enumerate");
    (0..1u64 << (n - 1)).map(|c| Composition::from_code(n, c).unwrap()).collect()
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then(self.code.cmp(&other.code))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `"2,1,1"` (parentheses and spaces tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Err(Error::ParseComposition(s.to_string()));
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseComposition(s.to_string()))?;
        Self::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building compositions in tests and examples.
#[macro_export]
macro_rules! comp {
    () => { $crate::compositions::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::compositions::Composition::new(vec![$($p),+]).unwrap()
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn descent_sets() {
        assert_eq!(comp![2, 3, 1, 2, 3, 1, 2].descent_set(), vec![2, 5, 6, 8, 11, 12]);
        assert_eq!(comp![1, 2, 2, 4, 1, 1, 3].descent_set(), vec![1, 3, 5, 9, 10, 11]);
        assert!(comp![5].descent_set().is_empty());
        assert_eq!(comp![1, 1, 1].descent_set(), vec![1, 2]);
    }

    #[test]
    fn from_descents_examples() {
        assert_eq!(Composition::from_descents(&[2], 3).unwrap(), comp![2, 1]);
        assert_eq!(Composition::from_descents(&[], 4).unwrap(), comp![4]);
        assert_eq!(Composition::from_descents(&[1, 3], 4).unwrap(), comp![1, 2, 1]);
        assert_eq!(Composition::from_descents(&[4], 4), Err(Error::DescentOutOfRange { descent: 4, n: 4 }));
        assert!(Composition::from_descents(&[0], 4).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(comp![3, 1].conjugate(), comp![1, 1, 2]);
        assert_eq!(comp![3].conjugate(), comp![1, 1, 1]);
        assert_eq!(comp![2, 1].conjugate(), comp![1, 2]);
    }

    #[test]
    fn descent_counts() {
        let i = comp![1, 2, 2, 4, 1, 1, 3];
        assert_eq!(i.d(4).unwrap(), 2);
        assert_eq!(i.d(1).unwrap(), 0);
        assert_eq!(i.d(13).unwrap(), 6);
        assert_eq!(i.d(12).unwrap(), 6);
        assert!(i.d(0).is_err());
        assert!(i.d(15).is_err());
    }

    #[test]
    fn ribbon_cells() {
        let i = comp![3, 1, 2];
        assert_eq!(i.ribbon_cell(4).unwrap(), Cell { row: 2, col: 3 });
        assert_eq!(i.ribbon_cell(6).unwrap(), Cell { row: 3, col: 4 });
        assert_eq!(i.ribbon_cell(1).unwrap(), Cell { row: 1, col: 1 });
        assert!(i.ribbon_cell(7).is_err());
    }

    #[test]
    fn canonical_orders() {
        let three: Vec<_> = canonical_order(3).iter().map(|c| c.label()).collect();
        assert_eq!(three, ["3", "21", "12", "111"]);
        let four: Vec<_> = canonical_order(4).iter().map(|c| c.label()).collect();
        assert_eq!(four, ["4", "31", "22", "211", "13", "121", "112", "1111"]);
        assert_eq!(canonical_order(1), vec![comp![1]]);
    }

    #[test]
    fn concatenations() {
        assert_eq!(comp![1, 2].concat(&comp![2]), comp![1, 2, 2]);
        assert_eq!(comp![1, 2].near_concat(&comp![2]), comp![1, 4]);
        assert_eq!(comp![3].near_concat(&comp![1, 1]), comp![4, 1]);
        assert_eq!(Composition::empty().concat(&comp![2, 1]), comp![2, 1]);
    }

    #[test]
    fn parents_and_children() {
        assert_eq!(comp![2, 2].parent().unwrap(), comp![2, 1]);
        assert_eq!(comp![2, 1, 1].parent().unwrap(), comp![2, 1]);
        assert_eq!(comp![4].parent().unwrap(), comp![3]);
        assert_eq!(comp![2, 1].grow_last(), comp![2, 2]);
        assert_eq!(comp![2, 1].append_one(), comp![2, 1, 1]);
        assert!(comp![1].parent().is_err());
    }

    #[test]
    fn block_pairing_matches_canonical_order() {
        // Rows 2m and 2m+1 of degree n are L' and L'' for the m-th L of degree n-1.
        for n in 2..=8 {
            let big = canonical_order(n);
            for (m, l) in canonical_order(n - 1).iter().enumerate() {
                assert_eq!(big[2 * m], l.grow_last());
                assert_eq!(big[2 * m + 1], l.append_one());
            }
        }
    }

    #[test]
    fn parsing_and_labels() {
        assert_eq!("2,1,1".parse::<Composition>().unwrap(), comp![2, 1, 1]);
        assert_eq!("(3)".parse::<Composition>().unwrap(), comp![3]);
        assert!("2,0".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert_eq!(comp![10, 1].label(), "10.1");
        assert_eq!(serde_json::to_string(&comp![2, 1]).unwrap(), "[2,1]");
        let back: Composition = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, comp![1, 3]);
    }

    fn composition_strategy(max_n: usize) -> impl Strategy<Value = Composition> {
        (1..=max_n).prop_flat_map(|n| (0..1u64 << (n - 1)).prop_map(move |c| Composition::from_code(n, c).unwrap()))
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(c in composition_strategy(10)) {
            prop_assert_eq!(c.conjugate().conjugate(), c.clone());
            prop_assert_eq!(c.len() + c.conjugate().len(), c.size() + 1);
        }

        #[test]
        fn descents_round_trip(c in composition_strategy(10)) {
            let back = Composition::from_descents(&c.descent_set(), c.size()).unwrap();
            prop_assert_eq!(&back, &c);
            let rebuilt = Composition::new(c.parts().to_vec()).unwrap();
            prop_assert_eq!(rebuilt.code(), c.code());
        }

        #[test]
        fn ribbon_path_steps(c in composition_strategy(10)) {
            let cells = c.cells();
            for k in 1..c.size() {
                let (a, b) = (cells[k - 1], cells[k]);
                prop_assert_eq!(a, c.ribbon_cell(k).unwrap());
                if c.is_descent(k) {
                    prop_assert_eq!((b.row - a.row, b.col - a.col), (1, 0));
                } else {
                    prop_assert_eq!((b.row - a.row, b.col - a.col), (0, 1));
                }
            }
        }
    }
}
