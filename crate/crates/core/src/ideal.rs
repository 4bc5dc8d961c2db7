//! Ideals on finite ground sets.
//!
//! A family closed under subsets and finite unions is, on a finite set, the
//! power set of its union. An [`Ideal`] therefore stores only that union, the
//! *carrier* `M`, and `A ∈ 𝓘 ⇔ A ⊆ M`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::FiniteMap;
use crate::space::check_point_count;
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    n: usize,
    carrier: SubsetMask,
}

impl Ideal {
    pub fn from_carrier(n: usize, carrier: SubsetMask) -> Result<Self> {
        check_point_count(n)?;
        Ok(Ideal { n, carrier: carrier.check_fits(n)? })
    }

    /// Smallest ideal containing every generator.
    pub fn make_ideal(n: usize, generators: &[SubsetMask]) -> Result<Self> {
        check_point_count(n)?;
        let mut carrier = SubsetMask::EMPTY;
        for g in generators {
            carrier = carrier | g.check_fits(n)?;
        }
        Ok(Ideal { n, carrier })
    }

    /// `{∅}`.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::from_carrier(n, SubsetMask::EMPTY)
    }

    /// `P(X)`, the improper ideal.
    pub fn power_set(n: usize) -> Result<Self> {
        Self::from_carrier(n, SubsetMask::full(n))
    }

    /// The ideal of finite subsets. Every subset of a finite set is finite, so
    /// this is `P(X)` and is improper.
    pub fn fin(n: usize) -> Result<Self> {
        Self::power_set(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> SubsetMask {
        self.carrier
    }

    #[inline]
    pub fn contains(&self, a: SubsetMask) -> bool {
        a.is_subset_of(self.carrier)
    }

    pub fn is_proper(&self) -> bool {
        self.carrier != SubsetMask::full(self.n)
    }

    /// Members in ascending mask order.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> {
        self.carrier.subsets()
    }
}

/// Ideal on the codomain generated by the images of members of `ideal`.
pub fn image_ideal(f: &FiniteMap, ideal: &Ideal) -> Result<Ideal> {
    if f.n_dom() != ideal.n {
        return Err(Error::DimensionMismatch(format!(
            "map from {} points applied to an ideal on {} points",
            f.n_dom(),
            ideal.n
        )));
    }
    Ideal::from_carrier(f.n_cod(), f.image(ideal.carrier))
}

/// How the ideals on either side of a map relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransferFlags {
    /// `f⁻¹[I] ∈ 𝓘_X` for every `I ∈ 𝓘_Y`.
    pub preimage_ok: bool,
    /// `f[I] ∈ 𝓘_Y` for every `I ∈ 𝓘_X`.
    pub image_ok: bool,
    /// `I ∈ 𝓘_X ⇔ f[I] ∈ 𝓘_Y` for every `I ⊆ X`.
    pub equivalence_ok: bool,
}

impl TransferFlags {
    /// Carrier form. `f[I] ⊆ M_Y ⇔ I ⊆ f⁻¹[M_Y]`, so the equivalence holds
    /// exactly when both one-sided conditions do.
    pub fn from_carriers(f: &FiniteMap, carrier_x: SubsetMask, carrier_y: SubsetMask) -> Self {
        let preimage_ok = f.preimage(carrier_y).is_subset_of(carrier_x);
        let image_ok = f.image(carrier_x).is_subset_of(carrier_y);
        TransferFlags { preimage_ok, image_ok, equivalence_ok: preimage_ok && image_ok }
    }

    /// Quantifier form, straight from the definitions.
    pub fn by_quantifiers(f: &FiniteMap, ideal_x: &Ideal, ideal_y: &Ideal) -> Self {
        let preimage_ok = ideal_y.members().all(|i| ideal_x.contains(f.preimage(i)));
        let image_ok = ideal_x.members().all(|i| ideal_y.contains(f.image(i)));
        let equivalence_ok =
            SubsetMask::all(f.n_dom()).all(|i| ideal_x.contains(i) == ideal_y.contains(f.image(i)));
        TransferFlags { preimage_ok, image_ok, equivalence_ok }
    }
}

/// Evaluates both forms and reports an internal error if they disagree.
pub fn transfer_conditions(f: &FiniteMap, ideal_x: &Ideal, ideal_y: &Ideal) -> Result<TransferFlags> {
    if f.n_dom() != ideal_x.n || f.n_cod() != ideal_y.n {
        return Err(Error::DimensionMismatch(format!(
            "map {}→{} against ideals on {} and {} points",
            f.n_dom(),
            f.n_cod(),
            ideal_x.n,
            ideal_y.n
        )));
    }
    let fast = TransferFlags::from_carriers(f, ideal_x.carrier, ideal_y.carrier);
    let slow = TransferFlags::by_quantifiers(f, ideal_x, ideal_y);
    if fast != slow {
        return Err(Error::Internal(format!("transfer conditions disagree: carrier {fast:?}, quantifier {slow:?}")));
    }
    Ok(fast)
}
