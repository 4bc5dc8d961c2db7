//! Brute-force oracles shared by the integration tests. They work from the
//! definitions on explicit set families and share no code with the library's
//! fast paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

use idealtop::{IdealSpace, SubsetMask, Topology};

/// Every topology on `n` points as its sorted list of open sets, by filtering
/// all families that contain `∅` and `X` and are closed under `∪` and `∩`.
pub fn topologies_by_family_filter(n: usize) -> BTreeSet<Vec<u32>> {
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = BTreeSet::new();
    for pick in 0u64..(1 << middle.len()) {
        let mut family = vec![0, full];
        family.extend(middle.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &s)| s));
        let member = |s: u32| family.contains(&s);
        let closed = family.iter().all(|&a| family.iter().all(|&b| member(a | b) && member(a & b)));
        if closed {
            family.sort_unstable();
            out.insert(family);
        }
    }
    out
}

/// Every ideal on `n` points as its sorted member list, by filtering all
/// families for `∅ ∈ 𝓘`, downward closure and closure under finite unions.
pub fn ideals_by_family_filter(n: usize) -> BTreeSet<Vec<u32>> {
    let subsets = 1u32 << n;
    let mut out = BTreeSet::new();
    for pick in 0u64..(1 << subsets) {
        let member = |s: u32| pick >> s & 1 == 1;
        let family: Vec<u32> = (0..subsets).filter(|&s| member(s)).collect();
        let has_empty = member(0);
        let downward = family.iter().all(|&a| (0..subsets).filter(|&b| b & !a == 0).all(member));
        let unions = family.iter().all(|&a| family.iter().all(|&b| member(a | b)));
        if has_empty && downward && unions {
            out.insert(family);
        }
    }
    out
}

/// Open sets of `t`, from the library's open-set test.
pub fn open_family(t: &Topology) -> Vec<u32> {
    t.opens().iter().map(|o| o.bits()).collect()
}

/// `x ∈ A*` iff `U ∩ A ∉ 𝓘` for every open `U ∋ x`, over the explicit open family.
pub fn local_function_oracle(space: &IdealSpace, a: SubsetMask) -> SubsetMask {
    let opens = space.top().opens();
    let small = |s: SubsetMask| space.ideal().members().any(|i| i == s);
    SubsetMask::from_points(
        (0..space.n()).filter(|&x| opens.iter().filter(|u| u.contains(x)).all(|&u| !small(u & a))),
    )
}

/// `Cl(A)` as the intersection of the closed supersets of `A`.
pub fn closure_oracle(t: &Topology, a: SubsetMask) -> SubsetMask {
    let n = t.n();
    t.opens()
        .into_iter()
        .map(|u| u.complement(n))
        .filter(|c| a.is_subset_of(*c))
        .fold(SubsetMask::full(n), |acc, c| acc & c)
}

/// Every `(topology, ideal)` space with at most `max_n` points.
pub fn all_spaces(max_n: usize) -> Vec<IdealSpace> {
    let mut out = vec![];
    for n in 1..=max_n {
        for t in idealtop::enumerate_topologies(n).unwrap() {
            for i in idealtop::enumerate_ideals(n).unwrap() {
                out.push(IdealSpace::new(t.clone(), i).unwrap());
            }
        }
    }
    out
}
