use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::Poly;

/// A closed point of the projective line over a number field: a monic
/// irreducible polynomial or the point at infinity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClosedPoint {
    Finite(Poly),
    Infinity,
}

impl ClosedPoint {
    /// Degree of the residue field over the base field.
    pub fn degree(&self) -> usize {
        match self {
            ClosedPoint::Finite(p) => p.deg(),
            ClosedPoint::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ClosedPoint::Infinity)
    }
}

impl fmt::Debug for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedPoint::Finite(p) => write!(f, "[{p}]"),
            ClosedPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// Finite formal sum of closed points with nonzero integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Divisor {
    points: BTreeMap<ClosedPoint, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (ClosedPoint, i64)>) -> Self {
        let mut d = Self::new();
        for (p, m) in pairs {
            d.add_point(p, m);
        }
        d
    }

    pub fn add_point(&mut self, p: ClosedPoint, m: i64) {
        let e = self.points.entry(p.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.points.remove(&p);
        }
    }

    pub fn multiplicity(&self, p: &ClosedPoint) -> i64 {
        self.points.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ClosedPoint, i64)> {
        self.points.iter().map(|(p, &m)| (p, m))
    }

    pub fn support(&self) -> Vec<ClosedPoint> {
        self.points.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.points.is_empty()
    }

    /// `sum m_p deg(p)`.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, m)| m * p.degree() as i64).sum()
    }

    pub fn positive_part(&self) -> Divisor {
        Self::from_pairs(self.iter().filter(|&(_, m)| m > 0).map(|(p, m)| (p.clone(), m)))
    }

    pub fn negative_part(&self) -> Divisor {
        Self::from_pairs(self.iter().filter(|&(_, m)| m < 0).map(|(p, m)| (p.clone(), -m)))
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, m) in other.iter() {
            d.add_point(p.clone(), m);
        }
        d
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        Self::from_pairs(self.iter().map(|(p, m)| (p.clone(), k * m)))
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}*{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;

    #[test]
    fn degree_and_parts() {
        let q = NumberField::rationals();
        let p = ClosedPoint::Finite(Poly::from_ints(&q, &[1, 0, 1]));
        let d = Divisor::from_pairs([(p.clone(), 1), (ClosedPoint::Infinity, -4)]);
        assert_eq!(d.degree(), -2);
        assert_eq!(d.positive_part().degree(), 2);
        assert_eq!(d.negative_part().degree(), 4);
        assert!(d.plus(&d.scaled(-1)).is_zero());
    }
}
