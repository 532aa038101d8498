use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Colour;

/// A set of edge colours, stored as a bitmask. Colours must be below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Colour>", from = "Vec<Colour>")]
pub struct ColourSet(u64);

impl ColourSet {
    pub const fn empty() -> Self {
        ColourSet(0)
    }

    /// All colours `0..n`.
    pub fn all(n: usize) -> Self {
        assert!(n <= 64, "at most 64 colours are supported");
        if n == 64 {
            ColourSet(u64::MAX)
        } else {
            ColourSet((1u64 << n) - 1)
        }
    }

    pub fn insert(&mut self, c: Colour) {
        assert!(c < 64, "colour {c} out of range");
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Colour) {
        if c < 64 {
            self.0 &= !(1 << c);
        }
    }

    pub fn contains(&self, c: Colour) -> bool {
        c < 64 && self.0 & (1 << c) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Colour> + '_ {
        let bits = self.0;
        (0..64).filter(move |c| bits & (1 << c) != 0)
    }
}

impl FromIterator<Colour> for ColourSet {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        let mut s = ColourSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl From<Vec<Colour>> for ColourSet {
    fn from(v: Vec<Colour>) -> Self {
        v.into_iter().collect()
    }
}

impl From<ColourSet> for Vec<Colour> {
    fn from(s: ColourSet) -> Self {
        s.iter().collect()
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_membership() {
        let s: ColourSet = [2, 0].into_iter().collect();
        assert_eq!(s.to_string(), "{0,2}");
        assert!(s.contains(0) && !s.contains(1));
        assert_eq!(ColourSet::empty().to_string(), "∅");
        assert_eq!(ColourSet::all(3).len(), 3);
        assert!(s.is_subset(&ColourSet::all(3)));
    }
}
