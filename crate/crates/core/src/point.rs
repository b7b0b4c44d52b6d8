//! Exact points/vectors in the ambient coordinate space.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;

use crate::rat::{rat, rat_string, Rat};

/// A point (or vector) with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<Rat>);

impl Point {
    pub fn zero(n: usize) -> Point {
        Point(vec![Rat::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Point) -> Rat {
        assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rat) -> Point {
        Point(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The coordinates as integers, if all of them are integral.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|r| {
                if *r.denom() == 1.into() {
                    r.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// True iff the coordinates are exactly a permutation of `(1..=n)`.
    pub fn is_permutation(&self) -> bool {
        match self.as_ints() {
            None => false,
            Some(v) => {
                let n = v.len() as i64;
                let mut seen = vec![false; v.len()];
                v.iter().all(|&c| {
                    if c >= 1 && c <= n && !seen[(c - 1) as usize] {
                        seen[(c - 1) as usize] = true;
                        true
                    } else {
                        false
                    }
                })
            }
        }
    }
}

impl Index<usize> for Point {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rat_string(c))?;
        }
        write!(f, ")")
    }
}
