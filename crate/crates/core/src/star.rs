//! The local function and the structures built from it.
//!
//! For an ideal topological space `(X, τ, 𝓘)` the local function is
//!
//! ```text
//! A* = { x : A ∩ U ∉ 𝓘 for every open U ∋ x }
//! ```
//!
//! `Cl*(A) = A ∪ A*` is a Kuratowski closure whose topology `τ*` refines `τ`,
//! and `Ψ(A) = X ∖ (X ∖ A)*` is its dual: `U ∈ τ*` iff `U ⊆ Ψ(U)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::space::Topology;
use crate::subset::SubsetMask;

/// A topology together with an ideal on the same points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSpace {
    top: Topology,
    ideal: Ideal,
}

impl IdealSpace {
    pub fn new(top: Topology, ideal: Ideal) -> Result<Self> {
        if top.n() != ideal.n() {
            return Err(Error::DimensionMismatch(format!(
                "topology on {} points with an ideal on {} points",
                top.n(),
                ideal.n()
            )));
        }
        Ok(IdealSpace { top, ideal })
    }

    pub fn top(&self) -> &Topology {
        &self.top
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn n(&self) -> usize {
        self.top.n()
    }

    pub fn full(&self) -> SubsetMask {
        self.top.full()
    }

    /// `A*`, through minimal neighbourhoods: `x ∈ A*` iff `N(x) ∩ A ∉ 𝓘`.
    ///
    /// Sufficient because every open `U ∋ x` contains `N(x)` and the ideal is
    /// hereditary.
    pub fn local_function(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.local_raw(a.check_fits(self.n())?))
    }

    #[inline]
    pub fn local_raw(&self, a: SubsetMask) -> SubsetMask {
        let carrier = self.ideal.carrier();
        let mut out = SubsetMask::EMPTY;
        for (x, nx) in self.top.min_nbhd().iter().enumerate() {
            if !(*nx & a).is_subset_of(carrier) {
                out = out.with(x);
            }
        }
        out
    }

    /// `A*` by the definition, quantifying over every open neighbourhood.
    pub fn local_function_by_definition(&self, a: SubsetMask) -> Result<SubsetMask> {
        a.check_fits(self.n())?;
        let opens = self.top.opens();
        Ok((0..self.n())
            .filter(|&x| opens.iter().filter(|u| u.contains(x)).all(|&u| !self.ideal.contains(a & u)))
            .fold(SubsetMask::EMPTY, |acc, x| acc.with(x)))
    }

    /// `A* = Cl(A ∖ M)`, a consequence of `(A ∖ I)* = A*` for `I = M` together
    /// with `B* = Cl(B)` whenever `B` meets the carrier trivially.
    pub fn local_function_by_carrier(&self, a: SubsetMask) -> Result<SubsetMask> {
        a.check_fits(self.n())?;
        Ok(self.top.closure_raw(a - self.ideal.carrier()))
    }

    pub fn star_closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.star_closure_raw(a.check_fits(self.n())?))
    }

    #[inline]
    pub fn star_closure_raw(&self, a: SubsetMask) -> SubsetMask {
        a | self.local_raw(a)
    }

    pub fn psi(&self, a: SubsetMask) -> Result<SubsetMask> {
        let out = self.psi_raw(a.check_fits(self.n())?);
        if !self.top.is_open_raw(out) {
            return Err(Error::Internal(format!("Ψ({a}) = {out} is not open in {}", self.top)));
        }
        Ok(out)
    }

    #[inline]
    pub fn psi_raw(&self, a: SubsetMask) -> SubsetMask {
        let n = self.n();
        self.local_raw(a.complement(n)).complement(n)
    }

    /// `τ*`, whose closed sets are the `A` with `A* ⊆ A`. Cross-checked
    /// against the open-set criterion `U ⊆ Ψ(U)`.
    pub fn star_topology(&self) -> Result<Topology> {
        let n = self.n();
        let from_closed: Vec<SubsetMask> = SubsetMask::all(n)
            .filter(|&c| self.local_raw(c).is_subset_of(c))
            .map(|c| c.complement(n))
            .collect();
        let mut from_closed_sorted = from_closed.clone();
        from_closed_sorted.sort();
        let from_psi: Vec<SubsetMask> = SubsetMask::all(n).filter(|&u| u.is_subset_of(self.psi_raw(u))).collect();
        if from_closed_sorted != from_psi {
            return Err(Error::Internal(format!(
                "τ* from closed sets {from_closed_sorted:?} differs from Ψ-criterion {from_psi:?}"
            )));
        }
        Topology::make_topology(n, &from_psi)
    }

    /// `⟨Ψ(τ)⟩`, the topology generated by `{Ψ(U) : U ∈ τ}`.
    pub fn psi_topology(&self) -> Result<Topology> {
        let family: Vec<SubsetMask> = self.top.opens().into_iter().map(|u| self.psi_raw(u)).collect();
        Topology::generate_topology(self.n(), &family)
    }

    /// `𝓘 ∼ τ`: every set that is locally in the ideal at each of its points is in the ideal.
    pub fn is_compatible(&self) -> bool {
        let nb = self.top.min_nbhd();
        SubsetMask::all(self.n()).all(|a| {
            let locally_small = a.points().all(|x| self.ideal.contains(nb[x] & a));
            !locally_small || self.ideal.contains(a)
        })
    }

    /// 𝓘-compactness by its definition over open covers.
    ///
    /// For a cover `𝒰` the best finite subfamily is `𝒰` itself (the remainder
    /// shrinks as the subfamily grows and the ideal is hereditary), and on a
    /// finite space `𝒰` is finite with remainder `∅`. The result is therefore
    /// always true; covers are still enumerated while the open family is small.
    pub fn is_ideal_compact(&self) -> bool {
        let opens = self.top.opens();
        let full = self.full();
        let remainder_small = |cover: u64| {
            let union = opens
                .iter()
                .enumerate()
                .filter(|(i, _)| cover >> i & 1 == 1)
                .fold(SubsetMask::EMPTY, |acc, (_, u)| acc | *u);
            union != full || self.ideal.contains(full - union)
        };
        if opens.len() <= 16 {
            (1u64..(1 << opens.len())).all(remainder_small)
        } else {
            // Only the cover by every open set is examined here.
            self.ideal.contains(full - opens.iter().fold(SubsetMask::EMPTY, |acc, u| acc | *u))
        }
    }

    /// Checks the algebraic laws of the local function over all `A`, `B ⊆ X`, `I ∈ 𝓘`.
    pub fn check_local_function_laws(&self) -> LawReport {
        let n = self.n();
        let top = &self.top;
        let star = |a: SubsetMask| self.local_raw(a);
        let mut report = LawReport::default();

        for a in SubsetMask::all(n) {
            let sa = star(a);
            if report.closed_and_below_closure.passes()
                && !(top.closure_raw(sa) == sa && sa.is_subset_of(top.closure_raw(a)))
            {
                report.closed_and_below_closure = LawOutcome::Fails(LawWitness { a, b: None, i: None });
            }
            if report.idempotent_below.passes() && !star(sa).is_subset_of(sa) {
                report.idempotent_below = LawOutcome::Fails(LawWitness { a, b: None, i: None });
            }
            for b in SubsetMask::all(n) {
                let sb = star(b);
                if report.monotone.passes() && a.is_subset_of(b) && !sa.is_subset_of(sb) {
                    report.monotone = LawOutcome::Fails(LawWitness { a, b: Some(b), i: None });
                }
                if report.additive.passes() && star(a | b) != sa | sb {
                    report.additive = LawOutcome::Fails(LawWitness { a, b: Some(b), i: None });
                }
            }
            for i in self.ideal.members() {
                if report.ideal_invariant.passes() && !(star(a | i) == sa && star(a - i) == sa) {
                    report.ideal_invariant = LawOutcome::Fails(LawWitness { a, b: None, i: Some(i) });
                }
            }
        }
        report
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub a: SubsetMask,
    pub b: Option<SubsetMask>,
    pub i: Option<SubsetMask>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum LawOutcome {
    #[default]
    Holds,
    Fails(LawWitness),
}

impl LawOutcome {
    pub fn passes(&self) -> bool {
        matches!(self, LawOutcome::Holds)
    }
}

/// Outcome per law, with the first witness found on failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct LawReport {
    /// `A ⊆ B ⇒ A* ⊆ B*`
    pub monotone: LawOutcome,
    /// `A* = Cl(A*) ⊆ Cl(A)`
    pub closed_and_below_closure: LawOutcome,
    /// `(A*)* ⊆ A*`
    pub idempotent_below: LawOutcome,
    /// `(A ∪ B)* = A* ∪ B*`
    pub additive: LawOutcome,
    /// `(A ∪ I)* = A* = (A ∖ I)*` for `I ∈ 𝓘`
    pub ideal_invariant: LawOutcome,
}

impl LawReport {
    pub fn outcomes(&self) -> [(&'static str, LawOutcome); 5] {
        [
            ("monotone", self.monotone),
            ("closed_and_below_closure", self.closed_and_below_closure),
            ("idempotent_below", self.idempotent_below),
            ("additive", self.additive),
            ("ideal_invariant", self.ideal_invariant),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes().iter().all(|(_, o)| o.passes())
    }
}
