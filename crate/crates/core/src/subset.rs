//! Bit-mask subsets of a finite ground set `{0, .., n-1}`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_POINTS: usize = 16;

/// Characteristic vector of a subset: point `i` is a member iff bit `i` is set.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Index of the mask in a table of all `2^n` subsets.
    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// The whole ground set of `n` points.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub const fn singleton(point: usize) -> Self {
        SubsetMask(1 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points.into_iter().fold(SubsetMask::EMPTY, |acc, p| acc.with(p))
    }

    /// Like [`SubsetMask::from_points`] but rejects points outside `0..n`.
    pub fn try_from_points(n: usize, points: &[usize]) -> Result<Self> {
        let mut mask = SubsetMask::EMPTY;
        for &p in points {
            if p >= n || p >= MAX_POINTS {
                return Err(Error::BadPoint { point: p, n });
            }
            mask = mask.with(p);
        }
        Ok(mask)
    }

    #[inline]
    pub const fn contains(self, point: usize) -> bool {
        point < 32 && self.0 >> point & 1 == 1
    }

    #[inline]
    pub const fn with(self, point: usize) -> Self {
        SubsetMask(self.0 | 1 << point)
    }

    #[inline]
    pub const fn without(self, point: usize) -> Self {
        SubsetMask(self.0 & !(1 << point))
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Least member, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// True iff no bit at or above `n` is set.
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset_of(SubsetMask::full(n))
    }

    pub fn check_fits(self, n: usize) -> Result<Self> {
        if self.fits(n) {
            Ok(self)
        } else {
            Err(Error::BadMask { bits: self.0, n })
        }
    }

    /// Members in ascending order.
    pub fn points(self) -> Points {
        Points(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.points().collect()
    }

    /// Every subset of `{0, .., n-1}` in ascending mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> + Clone {
        (0..=SubsetMask::full(n).0).map(SubsetMask)
    }

    /// Every subset of `self`, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let top = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == top {
                None
            } else {
                Some((cur.wrapping_sub(top)) & top)
            };
            Some(SubsetMask(cur))
        })
    }
}

/// Iterator over the members of a [`SubsetMask`].
#[derive(Clone)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.union(rhs)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.intersection(rhs)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        self.difference(rhs)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the sorted list of members.
impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.points())
    }
}
