//! Extended non-negative integer weights: the carrier of the min-plus
//! semiring used by every solver in this crate.

use std::fmt;

/// Largest finite weight accepted on an arc.
///
/// Path sums are held in `u64`, so even a 10^4-node path of maximal arcs
/// stays far from overflow.
pub const MAX_ARC_WEIGHT: u64 = 1_000_000_000;

/// A finite non-negative cost or `Infinite`.
///
/// Variant order matters: the derived `Ord` places every finite value below
/// `Infinite`, which is exactly the order `min` needs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtWeight {
    Finite(u64),
    #[default]
    Infinite,
}

pub use ExtWeight::{Finite, Infinite};

impl ExtWeight {
    pub const ZERO: ExtWeight = Finite(0);
    pub const INFINITY: ExtWeight = Infinite;

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    #[inline]
    pub fn finite(self) -> Option<u64> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }
}

impl From<u64> for ExtWeight {
    fn from(v: u64) -> Self {
        Finite(v)
    }
}

impl fmt::Display for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => f.write_str("inf"),
        }
    }
}

/// Min-plus "multiplication": ordinary addition with `Infinite` absorbing.
#[inline]
pub fn ext_add(a: ExtWeight, b: ExtWeight) -> ExtWeight {
    match (a, b) {
        (Finite(x), Finite(y)) => Finite(x + y),
        _ => Infinite,
    }
}

impl std::ops::Add for ExtWeight {
    type Output = ExtWeight;

    #[inline]
    fn add(self, rhs: ExtWeight) -> ExtWeight {
        ext_add(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn add_examples() {
        assert_eq!(ext_add(Finite(3), Finite(4)), Finite(7));
        assert_eq!(ext_add(Infinite, Finite(5)), Infinite);
        assert_eq!(ext_add(Finite(0), Infinite), Infinite);
        assert_eq!(ext_add(Infinite, Infinite), Infinite);
    }

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(Finite(u64::MAX) < Infinite);
        assert!(Finite(2) < Finite(3));
        assert_eq!(Finite(9).min(Infinite), Finite(9));
    }

    fn weight() -> impl Strategy<Value = ExtWeight> {
        prop_oneof![
            4 => (0..=MAX_ARC_WEIGHT).prop_map(Finite),
            1 => Just(Infinite),
        ]
    }

    proptest! {
        #[test]
        fn semiring_laws(a in weight(), b in weight(), c in weight()) {
            prop_assert_eq!(ext_add(a, b), ext_add(b, a));
            prop_assert_eq!(ext_add(ext_add(a, b), c), ext_add(a, ext_add(b, c)));
            prop_assert_eq!(ext_add(a, ExtWeight::ZERO), a);
            prop_assert_eq!(ext_add(a, Infinite), Infinite);
            // addition distributes over min
            prop_assert_eq!(ext_add(a, b.min(c)), ext_add(a, b).min(ext_add(a, c)));
        }
    }
}
