//! Finite topological spaces.
//!
//! Every topology on a finite set is Alexandrov: arbitrary intersections of
//! open sets are open, so each point `x` has a smallest open neighbourhood
//! `N(x)`. The table `N(0), .., N(n-1)` determines the topology completely:
//!
//! * `U` is open iff `N(x) ⊆ U` for every `x ∈ U`;
//! * `x ∈ Cl(A)` iff `N(x) ∩ A ≠ ∅`.
//!
//! Equivalently the table is a reflexive, transitive relation on the points
//! (`y ∈ N(x)`), the specialization preorder.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{SubsetMask, MAX_POINTS};

pub(crate) fn check_point_count(n: usize) -> Result<()> {
    if (1..=MAX_POINTS).contains(&n) {
        Ok(())
    } else {
        Err(Error::BadPointCount { n, cap: MAX_POINTS })
    }
}

/// A topology on `{0, .., n-1}` stored as its minimal-neighbourhood table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Topology {
    n: usize,
    min_nbhd: Vec<SubsetMask>,
}

/// Separation axioms, each evaluated by its textbook definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub regular: bool,
}

impl Topology {
    /// Build from a minimal-neighbourhood table, checking reflexivity and transitivity.
    pub fn from_min_nbhd(n: usize, min_nbhd: Vec<SubsetMask>) -> Result<Self> {
        check_point_count(n)?;
        if min_nbhd.len() != n {
            return Err(Error::NotATopology(format!(
                "neighbourhood table has {} entries for {n} points",
                min_nbhd.len()
            )));
        }
        for (x, &nx) in min_nbhd.iter().enumerate() {
            nx.check_fits(n)?;
            if !nx.contains(x) {
                return Err(Error::NotATopology(format!("{x} is missing from its own neighbourhood {nx}")));
            }
            for y in nx.points() {
                if !min_nbhd[y].is_subset_of(nx) {
                    return Err(Error::NotATopology(format!(
                        "{y} ∈ N({x}) but N({y}) = {} ⊄ {nx}",
                        min_nbhd[y]
                    )));
                }
            }
        }
        Ok(Topology { n, min_nbhd })
    }

    /// Canonicalize a family that must already be a topology (∅ and X included).
    pub fn make_topology(n: usize, opens: &[SubsetMask]) -> Result<Self> {
        check_point_count(n)?;
        let family: BTreeSet<SubsetMask> = opens
            .iter()
            .map(|o| o.check_fits(n))
            .collect::<Result<_>>()?;
        let full = SubsetMask::full(n);
        if !family.contains(&SubsetMask::EMPTY) {
            return Err(Error::NotATopology("∅ is not listed as open".into()));
        }
        if !family.contains(&full) {
            return Err(Error::NotATopology("the whole space is not listed as open".into()));
        }
        for &a in &family {
            for &b in &family {
                if !family.contains(&(a | b)) {
                    return Err(Error::NotATopology(format!("{a} ∪ {b} is not open")));
                }
                if !family.contains(&(a & b)) {
                    return Err(Error::NotATopology(format!("{a} ∩ {b} is not open")));
                }
            }
        }
        Ok(Self::from_family_unchecked(n, family.iter().copied()))
    }

    /// Smallest topology containing every member of `family`.
    pub fn generate_topology(n: usize, family: &[SubsetMask]) -> Result<Self> {
        check_point_count(n)?;
        for f in family {
            f.check_fits(n)?;
        }
        Ok(Self::from_family_unchecked(n, family.iter().copied()))
    }

    /// `N(x)` = intersection of the listed sets containing `x` (X when none do).
    /// For any family this is the table of the topology the family generates.
    fn from_family_unchecked(n: usize, family: impl Iterator<Item = SubsetMask> + Clone) -> Self {
        let full = SubsetMask::full(n);
        let min_nbhd = (0..n)
            .map(|x| {
                family
                    .clone()
                    .filter(|u| u.contains(x))
                    .fold(full, |acc, u| acc & u)
            })
            .collect();
        Topology { n, min_nbhd }
    }

    pub fn discrete(n: usize) -> Result<Self> {
        check_point_count(n)?;
        Ok(Topology { n, min_nbhd: (0..n).map(SubsetMask::singleton).collect() })
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        check_point_count(n)?;
        Ok(Topology { n, min_nbhd: vec![SubsetMask::full(n); n] })
    }

    /// Two points, opens `{∅, {1}, {0,1}}`.
    pub fn sierpinski() -> Self {
        Topology {
            n: 2,
            min_nbhd: vec![SubsetMask::from_bits(0b11), SubsetMask::from_bits(0b10)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn min_nbhd(&self) -> &[SubsetMask] {
        &self.min_nbhd
    }

    /// Smallest open set containing `x`.
    pub fn nbhd(&self, x: usize) -> SubsetMask {
        self.min_nbhd[x]
    }

    pub fn is_open(&self, a: SubsetMask) -> Result<bool> {
        Ok(self.is_open_raw(a.check_fits(self.n)?))
    }

    pub fn closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.closure_raw(a.check_fits(self.n)?))
    }

    pub fn interior(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.interior_raw(a.check_fits(self.n)?))
    }

    pub fn is_closed(&self, a: SubsetMask) -> Result<bool> {
        Ok(self.is_closed_raw(a.check_fits(self.n)?))
    }

    #[inline]
    pub fn is_open_raw(&self, a: SubsetMask) -> bool {
        a.points().all(|x| self.min_nbhd[x].is_subset_of(a))
    }

    #[inline]
    pub fn closure_raw(&self, a: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for (x, nx) in self.min_nbhd.iter().enumerate() {
            if nx.intersects(a) {
                out = out.with(x);
            }
        }
        out
    }

    #[inline]
    pub fn interior_raw(&self, a: SubsetMask) -> SubsetMask {
        self.closure_raw(a.complement(self.n)).complement(self.n)
    }

    #[inline]
    pub fn is_closed_raw(&self, a: SubsetMask) -> bool {
        self.is_open_raw(a.complement(self.n))
    }

    /// Smallest open set containing `a`.
    pub fn open_hull(&self, a: SubsetMask) -> SubsetMask {
        a.points().fold(SubsetMask::EMPTY, |acc, x| acc | self.min_nbhd[x])
    }

    /// All open sets, ascending by mask value.
    pub fn opens(&self) -> Vec<SubsetMask> {
        SubsetMask::all(self.n).filter(|&u| self.is_open_raw(u)).collect()
    }

    pub fn closed_sets(&self) -> Vec<SubsetMask> {
        SubsetMask::all(self.n).filter(|&c| self.is_closed_raw(c)).collect()
    }

    /// Open neighbourhoods of `x`, ascending.
    pub fn nbhds_of(&self, x: usize) -> Vec<SubsetMask> {
        self.opens().into_iter().filter(|u| u.contains(x)).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.min_nbhd.iter().enumerate().all(|(x, &nx)| nx == SubsetMask::singleton(x))
    }

    pub fn separation_profile(&self) -> SeparationProfile {
        let n = self.n;
        let nb = &self.min_nbhd;
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y);
        // Some open set contains x but not y iff y ∉ N(x).
        let t0 = pairs().all(|(x, y)| !nb[x].contains(y) || !nb[y].contains(x));
        let t1 = pairs().all(|(x, y)| !nb[x].contains(y));
        let hausdorff = pairs().all(|(x, y)| !nb[x].intersects(nb[y]));
        // Point x outside closed C: the best candidate pair is N(x) and the open hull of C.
        let regular = self.closed_sets().into_iter().all(|c| {
            let hull = self.open_hull(c);
            c.complement(n).points().all(|x| !nb[x].intersects(hull))
        });
        SeparationProfile { t0, t1, hausdorff, regular }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} opens=[", self.n)?;
        for (i, u) in self.opens().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    /// Every topology on n points, via brute force over neighbourhood tables.
    fn all_topologies(n: usize) -> Vec<Topology> {
        let per_point: Vec<Vec<SubsetMask>> =
            (0..n).map(|x| SubsetMask::all(n).filter(|s| s.contains(x)).collect()).collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let table: Vec<_> = (0..n).map(|x| per_point[x][idx[x]]).collect();
            if let Ok(t) = Topology::from_min_nbhd(n, table) {
                out.push(t);
            }
            let mut k = 0;
            loop {
                if k == n {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < per_point[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn make_topology_examples() {
        let s = Topology::make_topology(2, &[m(&[]), m(&[1]), m(&[0, 1])]).unwrap();
        assert_eq!(s.min_nbhd(), &[m(&[0, 1]), m(&[1])]);
        assert_eq!(s, Topology::sierpinski());

        let one = Topology::make_topology(1, &[m(&[]), m(&[0])]).unwrap();
        assert_eq!(one.opens(), vec![m(&[]), m(&[0])]);

        assert!(matches!(
            Topology::make_topology(2, &[m(&[]), m(&[0])]),
            Err(Error::NotATopology(_))
        ));
        assert!(matches!(
            Topology::make_topology(2, &[m(&[]), m(&[0, 2])]),
            Err(Error::BadMask { .. })
        ));
        assert!(matches!(
            Topology::make_topology(3, &[m(&[]), m(&[0]), m(&[1]), m(&[0, 1, 2])]),
            Err(Error::NotATopology(_))
        ));
        assert!(Topology::make_topology(0, &[]).is_err());
    }

    #[test]
    fn generate_topology_examples() {
        assert_eq!(Topology::generate_topology(2, &[m(&[0]), m(&[1])]).unwrap(), Topology::discrete(2).unwrap());
        assert_eq!(Topology::generate_topology(2, &[]).unwrap(), Topology::indiscrete(2).unwrap());
        let t = Topology::generate_topology(3, &[m(&[1]), m(&[0, 1, 2])]).unwrap();
        assert_eq!(t.opens(), vec![m(&[]), m(&[1]), m(&[0, 1, 2])]);
    }

    #[test]
    fn generate_matches_explicit_union_intersection_closure() {
        // Oracle: close {∅, X} ∪ family under pairwise ∪ and ∩ until stable.
        let n = 3;
        for fam_bits in 0u32..(1 << 8) {
            let family: Vec<_> = (0..8).filter(|i| fam_bits >> i & 1 == 1).map(SubsetMask::from_bits).collect();
            let mut closed: BTreeSet<SubsetMask> = family.iter().copied().collect();
            closed.insert(SubsetMask::EMPTY);
            closed.insert(SubsetMask::full(n));
            loop {
                let snapshot: Vec<_> = closed.iter().copied().collect();
                let before = closed.len();
                for &a in &snapshot {
                    for &b in &snapshot {
                        closed.insert(a | b);
                        closed.insert(a & b);
                    }
                }
                if closed.len() == before {
                    break;
                }
            }
            let t = Topology::generate_topology(n, &family).unwrap();
            assert_eq!(t.opens(), closed.into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn open_closure_interior_examples() {
        let s = Topology::sierpinski();
        assert!(s.is_open(m(&[1])).unwrap());
        assert!(!s.is_open(m(&[0])).unwrap());
        assert!(s.is_open(m(&[])).unwrap());
        assert_eq!(s.closure(m(&[1])).unwrap(), m(&[0, 1]));
        assert_eq!(s.closure(m(&[0])).unwrap(), m(&[0]));
        assert_eq!(s.closure(m(&[])).unwrap(), m(&[]));
        assert_eq!(s.interior(m(&[0])).unwrap(), m(&[]));
        assert_eq!(s.interior(m(&[1])).unwrap(), m(&[1]));
        assert_eq!(s.interior(s.full()).unwrap(), s.full());
        assert!(s.closure(m(&[2])).is_err());
    }

    #[test]
    fn separation_examples() {
        let d = Topology::discrete(2).unwrap().separation_profile();
        assert!(d.t0 && d.t1 && d.hausdorff && d.regular);
        let s = Topology::sierpinski().separation_profile();
        assert!(s.t0 && !s.t1 && !s.hausdorff && !s.regular);
        let i = Topology::indiscrete(2).unwrap().separation_profile();
        assert!(!i.t0 && !i.t1 && !i.hausdorff && i.regular);
    }

    #[test]
    fn separation_matches_open_set_definitions() {
        for n in 1..=3 {
            for t in all_topologies(n) {
                let opens = t.opens();
                let closed = t.closed_sets();
                let p = t.separation_profile();
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
                let sep = |x: usize, y: usize| opens.iter().any(|u| u.contains(x) && !u.contains(y));
                assert_eq!(p.t0, pairs.iter().all(|&(x, y)| sep(x, y) || sep(y, x)));
                assert_eq!(p.t1, pairs.iter().all(|&(x, y)| sep(x, y)));
                let disjoint = |a: SubsetMask, b: SubsetMask| {
                    opens.iter().any(|u| a.is_subset_of(*u) && opens.iter().any(|v| b.is_subset_of(*v) && !u.intersects(*v)))
                };
                assert_eq!(
                    p.hausdorff,
                    pairs.iter().all(|&(x, y)| disjoint(SubsetMask::singleton(x), SubsetMask::singleton(y)))
                );
                let regular = closed.iter().all(|&c| {
                    c.complement(n).points().all(|x| disjoint(SubsetMask::singleton(x), c))
                });
                assert_eq!(p.regular, regular, "{t}");
            }
        }
    }

    #[test]
    fn round_trip_through_open_family() {
        for n in 1..=4 {
            for t in all_topologies(n) {
                assert_eq!(Topology::make_topology(n, &t.opens()).unwrap(), t);
            }
        }
    }

    #[test]
    fn closure_is_kuratowski() {
        for n in 1..=3 {
            for t in all_topologies(n) {
                assert_eq!(t.closure_raw(SubsetMask::EMPTY), SubsetMask::EMPTY);
                for a in SubsetMask::all(n) {
                    let ca = t.closure_raw(a);
                    assert!(a.is_subset_of(ca));
                    assert_eq!(t.closure_raw(ca), ca);
                    assert_eq!(t.is_open_raw(a), t.interior_raw(a) == a);
                    assert_eq!(t.is_closed_raw(a), ca == a);
                    for b in SubsetMask::all(n) {
                        assert_eq!(t.closure_raw(a | b), ca | t.closure_raw(b));
                    }
                }
            }
        }
    }

    #[test]
    fn neighbourhood_test_agrees_with_stored_family() {
        for n in 1..=4 {
            for t in all_topologies(n) {
                let family: BTreeSet<_> = t.opens().into_iter().collect();
                // The derived family is a topology.
                assert!(family.contains(&SubsetMask::EMPTY) && family.contains(&t.full()));
                for &a in &family {
                    for &b in &family {
                        assert!(family.contains(&(a | b)) && family.contains(&(a & b)));
                    }
                }
                // N(x) is the intersection of the stored opens containing x.
                for x in 0..n {
                    let meet = family.iter().filter(|u| u.contains(x)).fold(t.full(), |acc, u| acc & *u);
                    assert_eq!(meet, t.nbhd(x));
                }
            }
        }
    }
}
