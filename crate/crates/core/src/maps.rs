//! Total maps between finite ground sets and their topological classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::space::{check_point_count, Topology};
use crate::subset::SubsetMask;

/// A total function `{0..n_dom} -> {0..n_cod}` given by its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMap {
    n_dom: usize,
    n_cod: usize,
    values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(n_dom: usize, n_cod: usize, values: Vec<usize>) -> Result<Self> {
        check_point_count(n_dom)?;
        check_point_count(n_cod)?;
        if values.len() != n_dom {
            return Err(Error::BadMap(format!("{} values for a domain of {n_dom} points", values.len())));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= n_cod) {
            return Err(Error::BadMap(format!("value {v} outside a codomain of {n_cod} points")));
        }
        Ok(FiniteMap { n_dom, n_cod, values })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, n, (0..n).collect())
    }

    pub fn constant(n_dom: usize, n_cod: usize, value: usize) -> Result<Self> {
        Self::new(n_dom, n_cod, vec![value; n_dom])
    }

    pub fn n_dom(&self) -> usize {
        self.n_dom
    }

    pub fn n_cod(&self) -> usize {
        self.n_cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `self` after `first`: `x ↦ self(first(x))`.
    pub fn compose_after(&self, first: &FiniteMap) -> Result<FiniteMap> {
        if first.n_cod != self.n_dom {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose a map into {} points with a map from {} points",
                first.n_cod, self.n_dom
            )));
        }
        FiniteMap::new(first.n_dom, self.n_cod, first.values.iter().map(|&v| self.values[v]).collect())
    }

    /// `f[A] = {f(x) : x ∈ A}`.
    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        a.points().fold(SubsetMask::EMPTY, |acc, x| acc.with(self.values[x]))
    }

    /// `f⁻¹[B] = {x : f(x) ∈ B}`.
    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| b.contains(v))
            .fold(SubsetMask::EMPTY, |acc, (x, _)| acc.with(x))
    }

    pub fn range(&self) -> SubsetMask {
        self.image(SubsetMask::full(self.n_dom))
    }

    pub fn is_injective(&self) -> bool {
        self.range().len() == self.n_dom
    }

    pub fn is_surjective(&self) -> bool {
        self.range() == SubsetMask::full(self.n_cod)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    fn check_dims(&self, domain: &Topology, codomain: &Topology) -> Result<()> {
        if domain.n() != self.n_dom || codomain.n() != self.n_cod {
            return Err(Error::DimensionMismatch(format!(
                "map {}→{} against spaces of {} and {} points",
                self.n_dom,
                self.n_cod,
                domain.n(),
                codomain.n()
            )));
        }
        Ok(())
    }
}

/// The five equivalent descriptions of continuity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Continuity {
    /// Pointwise: every neighbourhood of `f(x)` contains the image of a neighbourhood of `x`.
    Pointwise,
    /// Preimages of open sets are open.
    OpenPreimages,
    /// `f[Cl A] ⊆ Cl f[A]` for every `A`.
    ClosureImages,
    /// `Cl f⁻¹[B] ⊆ f⁻¹[Cl B]` for every `B`.
    ClosurePreimages,
    /// `f⁻¹[Int B] ⊆ Int f⁻¹[B]` for every `B`.
    InteriorPreimages,
}

impl Continuity {
    pub const ALL: [Continuity; 5] = [
        Continuity::Pointwise,
        Continuity::OpenPreimages,
        Continuity::ClosureImages,
        Continuity::ClosurePreimages,
        Continuity::InteriorPreimages,
    ];
}

/// Decide continuity of `f: domain -> codomain` through one characterization.
pub fn is_continuous_by(f: &FiniteMap, domain: &Topology, codomain: &Topology, how: Continuity) -> Result<bool> {
    f.check_dims(domain, codomain)?;
    let (nx, ny) = (f.n_dom, f.n_cod);
    Ok(match how {
        Continuity::Pointwise => (0..nx).all(|x| {
            // Quantify over all neighbourhoods V of f(x) and all U of x.
            codomain.nbhds_of(f.apply(x)).into_iter().all(|v| {
                domain.nbhds_of(x).into_iter().any(|u| f.image(u).is_subset_of(v))
            })
        }),
        Continuity::OpenPreimages => codomain
            .opens()
            .into_iter()
            .all(|v| domain.is_open_raw(f.preimage(v))),
        Continuity::ClosureImages => SubsetMask::all(nx)
            .all(|a| f.image(domain.closure_raw(a)).is_subset_of(codomain.closure_raw(f.image(a)))),
        Continuity::ClosurePreimages => SubsetMask::all(ny)
            .all(|b| domain.closure_raw(f.preimage(b)).is_subset_of(f.preimage(codomain.closure_raw(b)))),
        Continuity::InteriorPreimages => SubsetMask::all(ny)
            .all(|b| f.preimage(codomain.interior_raw(b)).is_subset_of(domain.interior_raw(f.preimage(b)))),
    })
}

pub fn is_continuous(f: &FiniteMap, domain: &Topology, codomain: &Topology) -> Result<bool> {
    is_continuous_by(f, domain, codomain, Continuity::OpenPreimages)
}

pub fn is_open_map(f: &FiniteMap, domain: &Topology, codomain: &Topology) -> Result<bool> {
    f.check_dims(domain, codomain)?;
    Ok(domain.opens().into_iter().all(|u| codomain.is_open_raw(f.image(u))))
}

pub fn is_closed_map(f: &FiniteMap, domain: &Topology, codomain: &Topology) -> Result<bool> {
    f.check_dims(domain, codomain)?;
    Ok(domain.closed_sets().into_iter().all(|c| codomain.is_closed_raw(f.image(c))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapProfile {
    pub continuous: bool,
    pub open_map: bool,
    pub closed_map: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    pub homeomorphism: bool,
}

/// Classify `f`, deciding continuity through open preimages.
pub fn classify(f: &FiniteMap, domain: &Topology, codomain: &Topology) -> Result<MapProfile> {
    let continuous = is_continuous(f, domain, codomain)?;
    Ok(profile(f, domain, codomain, continuous))
}

/// Like [`classify`], but evaluates all five continuity characterizations and
/// fails if any two disagree.
pub fn classify_paranoid(f: &FiniteMap, domain: &Topology, codomain: &Topology) -> Result<MapProfile> {
    let verdicts = Continuity::ALL
        .iter()
        .map(|&how| is_continuous_by(f, domain, codomain, how))
        .collect::<Result<Vec<_>>>()?;
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::Internal(format!(
            "continuity characterizations disagree ({verdicts:?}) for {f:?} from {domain} to {codomain}"
        )));
    }
    Ok(profile(f, domain, codomain, verdicts[0]))
}

fn profile(f: &FiniteMap, domain: &Topology, codomain: &Topology, continuous: bool) -> MapProfile {
    let open_map = domain.opens().into_iter().all(|u| codomain.is_open_raw(f.image(u)));
    let closed_map = domain.closed_sets().into_iter().all(|c| codomain.is_closed_raw(f.image(c)));
    let injective = f.is_injective();
    let surjective = f.is_surjective();
    let bijective = injective && surjective;
    MapProfile {
        continuous,
        open_map,
        closed_map,
        injective,
        surjective,
        bijective,
        homeomorphism: continuous && open_map && bijective,
    }
}
