//! Counterexample constructions: each adjoins one new point `z = n` to a seed
//! space and reports how a seed map extends over the result.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::maps::FiniteMap;
use crate::space::Topology;
use crate::star::IdealSpace;
use crate::subset::{SubsetMask, MAX_POINTS};
use crate::theorems::Instance;

fn new_point_index(seed: &IdealSpace) -> Result<usize> {
    let z = seed.n();
    if z + 1 > MAX_POINTS {
        return Err(Error::CapExceeded { n: z + 1, cap: MAX_POINTS });
    }
    Ok(z)
}

/// A seed codomain `Y` enlarged to `Z = Y ∪ {z}`; maps into `Y` become maps into `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodomainExtension {
    pub space: IdealSpace,
    pub z: usize,
}

impl CodomainExtension {
    /// `f̃(x) = f(x)`, now into `Z`.
    pub fn extend_map(&self, f: &FiniteMap) -> Result<FiniteMap> {
        if f.n_cod() != self.z {
            return Err(Error::DimensionMismatch(format!(
                "map into {} points, seed has {}",
                f.n_cod(),
                self.z
            )));
        }
        FiniteMap::new(f.n_dom(), self.z + 1, f.values().to_vec())
    }

    /// `(X, Z, f̃)` from a seed instance whose codomain was the seed.
    pub fn instance(&self, seed: &Instance) -> Result<Instance> {
        Instance::new(seed.x.clone(), self.space.clone(), self.extend_map(&seed.f)?)
    }
}

/// `τ_Z = {O ∪ {z} : O ∈ τ_Y} ∪ {∅}`, ideal generated by `𝓘_Y` and `{z}`.
///
/// Every nonempty open set contains `z` and `{z}` is small, so `z ∉ A*` for all `A`.
pub fn add_open_point(seed: &IdealSpace) -> Result<CodomainExtension> {
    let z = new_point_index(seed)?;
    let mut opens: Vec<SubsetMask> = seed.top().opens().into_iter().map(|o| o.with(z)).collect();
    opens.push(SubsetMask::EMPTY);
    let top = Topology::make_topology(z + 1, &opens)?;
    let ideal = Ideal::from_carrier(z + 1, seed.ideal().carrier().with(z))?;
    Ok(CodomainExtension { space: IdealSpace::new(top, ideal)?, z })
}

/// `τ_Z = ⟨τ_Y ∪ {Z}⟩` with the ideal unchanged.
///
/// The only neighbourhood of `z` is `Z`, so `z ∈ A*` for every `A ∉ 𝓘_Z`.
pub fn add_generic_point(seed: &IdealSpace) -> Result<CodomainExtension> {
    let z = new_point_index(seed)?;
    let mut family = seed.top().opens();
    family.push(SubsetMask::full(z + 1));
    let top = Topology::generate_topology(z + 1, &family)?;
    let ideal = Ideal::from_carrier(z + 1, seed.ideal().carrier())?;
    Ok(CodomainExtension { space: IdealSpace::new(top, ideal)?, z })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollapseVariant {
    /// Open neighbourhoods of `x0` gain `z`; the extended map stays continuous.
    Cont,
    /// Open sets around `x0` are dropped and `Z` added; the extended map stays open.
    Open,
}

/// A seed domain `X` enlarged by a twin `z` of `x0`, so that `f̃(z) = f(x0)`
/// makes the extended map non-injective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    pub space: IdealSpace,
    pub z: usize,
    pub x0: usize,
    pub variant: CollapseVariant,
}

impl Collapse {
    /// `f̃ = f` on `X` and `f̃(z) = f(x0)`.
    pub fn extend_map(&self, f: &FiniteMap) -> Result<FiniteMap> {
        if f.n_dom() != self.z {
            return Err(Error::DimensionMismatch(format!(
                "map from {} points, seed has {}",
                f.n_dom(),
                self.z
            )));
        }
        let mut values = f.values().to_vec();
        values.push(f.apply(self.x0));
        FiniteMap::new(self.z + 1, f.n_cod(), values)
    }

    /// `{I ∖ {y0} : I ∈ 𝓘_Y}`.
    pub fn adjust_codomain_ideal(ideal_y: &Ideal, y0: usize) -> Result<Ideal> {
        Ideal::from_carrier(ideal_y.n(), ideal_y.carrier().without(y0))
    }

    /// `(Z, Y with adjusted ideal, f̃)` from a seed instance whose domain was the seed.
    pub fn instance(&self, seed: &Instance) -> Result<Instance> {
        let y0 = seed.f.apply(self.x0);
        let ideal_y = Self::adjust_codomain_ideal(seed.y.ideal(), y0)?;
        Instance::new(
            self.space.clone(),
            IdealSpace::new(seed.y.top().clone(), ideal_y)?,
            self.extend_map(&seed.f)?,
        )
    }
}

/// Adjoin a twin `z` of `x0`; the domain ideal becomes `{I ∖ {x0} : I ∈ 𝓘_X}`.
///
/// * [`CollapseVariant::Cont`]: `τ_Z = {O ∈ τ_X : x0 ∉ O} ∪ {O ∪ {z} : O ∈ τ_X, x0 ∈ O}`
/// * [`CollapseVariant::Open`]: `τ_Z = {O ∈ τ_X : x0 ∉ O} ∪ {Z}`
pub fn collapse_point(seed: &IdealSpace, x0: usize, variant: CollapseVariant) -> Result<Collapse> {
    let z = new_point_index(seed)?;
    if x0 >= seed.n() {
        return Err(Error::BadPoint { point: x0, n: seed.n() });
    }
    let opens = seed.top().opens();
    let family: Vec<SubsetMask> = match variant {
        CollapseVariant::Cont => opens
            .into_iter()
            .map(|o| if o.contains(x0) { o.with(z) } else { o })
            .collect(),
        CollapseVariant::Open => opens
            .into_iter()
            .filter(|o| !o.contains(x0))
            .chain(std::iter::once(SubsetMask::full(z + 1)))
            .collect(),
    };
    let top = Topology::make_topology(z + 1, &family)?;
    let ideal = Ideal::from_carrier(z + 1, seed.ideal().carrier().without(x0))?;
    Ok(Collapse { space: IdealSpace::new(top, ideal)?, z, x0, variant })
}
