use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A non-negative or negative half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(k: i32) -> Self {
        HalfInt(2 * k)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// True when `m` is a valid projection for angular momentum `j`:
    /// `|m| <= j` and `j - m` an integer.
    pub const fn is_projection_of(self, j: HalfInt) -> bool {
        j.0 >= 0 && self.0.abs() <= j.0 && (j.0 - self.0) % 2 == 0
    }

    /// All projections `-j, -j+1, ..., j`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let j = self.0;
        (0..=j).map(move |k| HalfInt(2 * k - j))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections_cover_the_multiplet() {
        let j = HalfInt::from_twice(3);
        let ms: Vec<i32> = j.projections().map(HalfInt::twice).collect();
        assert_eq!(ms, vec![-3, -1, 1, 3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
        assert_eq!(HalfInt::from_int(70).projections().count(), 141);
    }

    #[test]
    fn projection_validity() {
        let j = HalfInt::from_twice(3);
        assert!(HalfInt::from_twice(-3).is_projection_of(j));
        assert!(!HalfInt::from_twice(2).is_projection_of(j));
        assert!(!HalfInt::from_twice(5).is_projection_of(j));
    }

    #[test]
    fn display() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
    }
}
