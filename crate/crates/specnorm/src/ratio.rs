use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Non-negative rational in lowest terms. Morphism norms are ratios of chain
/// lengths and must stay exact, so no floating point is involved anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    numer: u64,
    denom: u64,
}

impl Ratio {
    /// Reduced fraction `numer / denom`. Panics on a zero denominator, which
    /// never arises from length ratios (denominators are positive lengths).
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = gcd(numer, denom);
        Ratio {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub const ZERO: Ratio = Ratio { numer: 0, denom: 1 };
    pub const ONE: Ratio = Ratio { numer: 1, denom: 1 };

    pub fn from_integer(n: u64) -> Self {
        Ratio { numer: n, denom: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication in u128 cannot overflow for u64 operands.
        let lhs = self.numer as u128 * other.denom as u128;
        let rhs = other.numer as u128 * self.denom as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Ratio::new(4, 6);
        assert_eq!((r.numer(), r.denom()), (2, 3));
        assert_eq!(Ratio::new(0, 5), Ratio::ZERO);
        assert_eq!(Ratio::new(7, 7), Ratio::ONE);
    }

    #[test]
    fn orders_by_value() {
        assert!(Ratio::new(1, 2) < Ratio::ONE);
        assert!(Ratio::new(3, 2) > Ratio::ONE);
        assert!(Ratio::new(2, 4) == Ratio::new(1, 2));
        assert!(Ratio::from_integer(2) > Ratio::new(3, 2));
    }

    #[test]
    fn displays_integers_without_denominator() {
        assert_eq!(Ratio::from_integer(2).to_string(), "2");
        assert_eq!(Ratio::new(1, 2).to_string(), "1/2");
        assert_eq!(Ratio::ZERO.to_string(), "0");
    }
}
