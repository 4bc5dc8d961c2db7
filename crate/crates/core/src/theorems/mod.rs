//! Checkers for the preservation theorems, one per [`TheoremId`].
//!
//! A checker evaluates every hypothesis and every claimed conclusion of its
//! theorem on one [`Instance`]. Conclusions are evaluated even when some
//! hypothesis fails, since the search needs their truth values under weakened
//! hypotheses. A failing conclusion comes with the least failing subset,
//! domain-side subsets ordered before codomain-side ones.

pub mod ctor;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::maps::FiniteMap;
use crate::star::IdealSpace;
use crate::subset::SubsetMask;
use crate::tables::{MapTables, SpaceTables};

/// Two ideal spaces and a map between their ground sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub x: IdealSpace,
    pub y: IdealSpace,
    pub f: FiniteMap,
}

impl Instance {
    pub fn new(x: IdealSpace, y: IdealSpace, f: FiniteMap) -> Result<Self> {
        if f.n_dom() != x.n() || f.n_cod() != y.n() {
            return Err(Error::DimensionMismatch(format!(
                "map {}→{} between spaces of {} and {} points",
                f.n_dom(),
                f.n_cod(),
                x.n(),
                y.n()
            )));
        }
        Ok(Instance { x, y, f })
    }

    /// Same instance with different ideals.
    pub fn with_ideals(&self, ideal_x: Ideal, ideal_y: Ideal) -> Result<Self> {
        Instance::new(
            IdealSpace::new(self.x.top().clone(), ideal_x)?,
            IdealSpace::new(self.y.top().clone(), ideal_y)?,
            self.f.clone(),
        )
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "X: {} ideal carrier {}", self.x.top(), self.x.ideal().carrier())?;
        writeln!(f, "Y: {} ideal carrier {}", self.y.top(), self.y.ideal().carrier())?;
        write!(f, "f: {:?}", self.f.values())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Tc1,
    Tc2,
    ContPsi,
    To1,
    OpenStar,
    OpenBij,
    ClosedSur,
    HomeoCor,
    HomeoHr,
    Hr34,
    Hr35,
    Samuels,
    JhComp,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Tc1,
        TheoremId::Tc2,
        TheoremId::ContPsi,
        TheoremId::To1,
        TheoremId::OpenStar,
        TheoremId::OpenBij,
        TheoremId::ClosedSur,
        TheoremId::HomeoCor,
        TheoremId::HomeoHr,
        TheoremId::Hr34,
        TheoremId::Hr35,
        TheoremId::Samuels,
        TheoremId::JhComp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Tc1 => "TC1",
            TheoremId::Tc2 => "TC2",
            TheoremId::ContPsi => "CONTPSI",
            TheoremId::To1 => "TO1",
            TheoremId::OpenStar => "OPEN_STAR",
            TheoremId::OpenBij => "OPENBIJ",
            TheoremId::ClosedSur => "CLOSEDSUR",
            TheoremId::HomeoCor => "HOMEO_COR",
            TheoremId::HomeoHr => "HOMEO_HR",
            TheoremId::Hr34 => "HR34",
            TheoremId::Hr35 => "HR35",
            TheoremId::Samuels => "SAMUELS",
            TheoremId::JhComp => "JHCOMP",
        }
    }

    pub fn hypotheses(self) -> &'static [Hypothesis] {
        use Hypothesis::*;
        match self {
            TheoremId::Tc1 | TheoremId::Tc2 => &[Continuous, PreimageOk],
            TheoremId::ContPsi => &[Continuous, Injective, Surjective, PreimageOk],
            TheoremId::To1 | TheoremId::OpenStar => &[Open, ImageOk],
            TheoremId::OpenBij => &[Open, Injective, Surjective, ImageOk],
            TheoremId::ClosedSur => &[Closed, Injective, ImageOk],
            TheoremId::HomeoCor => &[Continuous, Open, Injective, Surjective, EquivalenceOk],
            TheoremId::HomeoHr => &[Injective, Surjective, IdealImageEq],
            TheoremId::Hr34 => &[PsiContinuous, Injective, CodomainCompatible, PreimageOk],
            TheoremId::Hr35 => &[PsiOpen, Injective, Surjective, DomainCompatible, ImageOk],
            TheoremId::Samuels => &[DenseLocal, CodomainRegular],
            TheoremId::JhComp => &[
                Injective,
                Surjective,
                IdealCompact,
                CodomainHausdorff,
                IdealImageEq,
                StarDomainContinuous,
            ],
        }
    }

    pub fn hypothesis_names(self) -> impl Iterator<Item = &'static str> {
        self.hypotheses().iter().map(|h| h.name())
    }

    /// Claimed conclusions. The first entry is the designated one that
    /// counterexample searches target.
    pub fn conclusions(self) -> &'static [(&'static str, Conclusion)] {
        use Conclusion::*;
        match self {
            TheoremId::Tc1 => &[
                ("a", ImageStarInStarImage),
                ("b", StarPreimageInPreimageStar),
                ("equiv_ab", Equiv(&[ImageStarInStarImage, StarPreimageInPreimageStar])),
            ],
            TheoremId::Tc2 => &[
                ("a", ImageClstarInClstarImage),
                ("b", ClstarPreimageInPreimageClstar),
                ("c", StarContinuous),
                (
                    "equiv_abc",
                    Equiv(&[ImageClstarInClstarImage, ClstarPreimageInPreimageClstar, StarContinuous]),
                ),
            ],
            TheoremId::ContPsi => &[
                ("a", PsiImageInImagePsi),
                ("b", PreimagePsiInPsiPreimage),
                ("equiv_ab", Equiv(&[PsiImageInImagePsi, PreimagePsiInPsiPreimage])),
            ],
            TheoremId::To1 => &[
                ("a", ImagePsiInPsiImage),
                ("b", PsiPreimageInPreimagePsi),
                ("equiv_ab", Equiv(&[ImagePsiInPsiImage, PsiPreimageInPreimagePsi])),
            ],
            TheoremId::OpenStar => &[("star_open", StarOpen)],
            TheoremId::OpenBij | TheoremId::ClosedSur => &[
                ("a", StarImageInImageStar),
                ("b", PreimageStarInStarPreimage),
                ("equiv_ab", Equiv(&[StarImageInImageStar, PreimageStarInStarPreimage])),
            ],
            TheoremId::HomeoCor => &[
                ("a", StarHomeomorphism),
                ("b", StarImageEqImageStar),
                ("c", PreimageStarEqStarPreimage),
                ("d", PsiImageEqImagePsi),
                ("e", PreimagePsiEqPsiPreimage),
                (
                    "all_equiv",
                    Equiv(&[
                        StarHomeomorphism,
                        StarImageEqImageStar,
                        PreimageStarEqStarPreimage,
                        PsiImageEqImagePsi,
                        PreimagePsiEqPsiPreimage,
                    ]),
                ),
            ],
            TheoremId::HomeoHr => &[(
                "all_equiv",
                Equiv(&[StarHomeomorphism, StarImageEqImageStar, PsiImageEqImagePsi]),
            )],
            TheoremId::Hr34 => &[("a", PsiImageInImagePsi)],
            TheoremId::Hr35 => &[("a", ImagePsiInPsiImage)],
            TheoremId::Samuels => &[("continuity_unchanged", ContinuityUnchangedByStar)],
            TheoremId::JhComp => &[("star_homeomorphism", StarHomeomorphism)],
        }
    }

    /// Values reported for information only: the parts of an equivalence
    /// that the theorem does not claim individually.
    pub fn details(self) -> &'static [(&'static str, Conclusion)] {
        use Conclusion::*;
        match self {
            TheoremId::HomeoHr => &[
                ("a", StarHomeomorphism),
                ("b", StarImageEqImageStar),
                ("c", PsiImageEqImagePsi),
            ],
            _ => &[],
        }
    }

    pub fn designated_conclusion(self) -> &'static str {
        self.conclusions()[0].0
    }

    /// Position of a hypothesis by name.
    pub fn hypothesis_index(self, name: &str) -> Result<usize> {
        self.hypotheses().iter().position(|h| h.name() == name).ok_or_else(|| Error::UnknownHypothesisName {
            theorem: self.as_str().to_string(),
            name: name.to_string(),
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canon = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == canon || t.as_str().replace('_', "") == canon.replace('_', ""))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// The compiled form of an instance that checkers read from.
#[derive(Clone, Copy)]
pub struct InstanceTables<'a> {
    pub x: &'a SpaceTables,
    pub y: &'a SpaceTables,
    pub f: &'a MapTables,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Continuous,
    Open,
    Closed,
    Injective,
    Surjective,
    /// `f⁻¹[I] ∈ 𝓘_X` for all `I ∈ 𝓘_Y`
    PreimageOk,
    /// `f[I] ∈ 𝓘_Y` for all `I ∈ 𝓘_X`
    ImageOk,
    /// `I ∈ 𝓘_X ⇔ f[I] ∈ 𝓘_Y`
    EquivalenceOk,
    /// The ideal generated by `f[𝓘_X]` is `𝓘_Y`.
    IdealImageEq,
    /// Continuous from `τ_X` into `⟨Ψ(τ_Y)⟩`.
    PsiContinuous,
    /// Open from `⟨Ψ(τ_X)⟩` into `τ_Y`.
    PsiOpen,
    CodomainCompatible,
    DomainCompatible,
    /// `X* = X`
    DenseLocal,
    CodomainRegular,
    IdealCompact,
    CodomainHausdorff,
    /// Continuous from `τ*_X` into `τ_Y`.
    StarDomainContinuous,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Continuous => "continuous",
            Hypothesis::Open => "open",
            Hypothesis::Closed => "closed",
            Hypothesis::Injective => "injective",
            Hypothesis::Surjective => "surjective",
            Hypothesis::PreimageOk => "preimage_ok",
            Hypothesis::ImageOk => "image_ok",
            Hypothesis::EquivalenceOk => "equivalence_ok",
            Hypothesis::IdealImageEq => "ideal_image_eq",
            Hypothesis::PsiContinuous => "psi_continuous",
            Hypothesis::PsiOpen => "psi_open",
            Hypothesis::CodomainCompatible => "codomain_compatible",
            Hypothesis::DomainCompatible => "domain_compatible",
            Hypothesis::DenseLocal => "dense_local",
            Hypothesis::CodomainRegular => "codomain_regular",
            Hypothesis::IdealCompact => "ideal_compact",
            Hypothesis::CodomainHausdorff => "codomain_hausdorff",
            Hypothesis::StarDomainContinuous => "star_domain_continuous",
        }
    }

    pub fn eval(self, cx: &InstanceTables<'_>) -> bool {
        let InstanceTables { x, y, f } = *cx;
        match self {
            Hypothesis::Continuous => f.continuity_failure(&x.tau, &y.tau).is_none(),
            Hypothesis::Open => f.openness_failure(&x.tau, &y.tau).is_none(),
            Hypothesis::Closed => f.closedness_failure(&x.tau, &y.tau).is_none(),
            Hypothesis::Injective => f.injective,
            Hypothesis::Surjective => f.surjective,
            Hypothesis::PreimageOk => f.preimage(y.carrier).is_subset_of(x.carrier),
            Hypothesis::ImageOk => f.image(x.carrier).is_subset_of(y.carrier),
            Hypothesis::EquivalenceOk => f.preimage(y.carrier) == x.carrier && f.image(x.carrier).is_subset_of(y.carrier),
            Hypothesis::IdealImageEq => f.image(x.carrier) == y.carrier,
            Hypothesis::PsiContinuous => f.continuity_failure(&x.tau, &y.psi_gen).is_none(),
            Hypothesis::PsiOpen => f.openness_failure(&x.psi_gen, &y.tau).is_none(),
            Hypothesis::CodomainCompatible => y.compatible,
            Hypothesis::DomainCompatible => x.compatible,
            Hypothesis::DenseLocal => x.dense,
            Hypothesis::CodomainRegular => y.regular,
            Hypothesis::IdealCompact => x.ideal_compact,
            Hypothesis::CodomainHausdorff => y.hausdorff,
            Hypothesis::StarDomainContinuous => f.continuity_failure(&x.star, &y.tau).is_none(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Domain,
    Codomain,
}

/// Where a conclusion fails: a subset of one ground set, and when the failure
/// is a set inclusion, the least offending point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Site {
    pub side: Side,
    pub subset: SubsetMask,
    pub point: Option<usize>,
}

impl Site {
    fn domain(subset: SubsetMask, point: Option<usize>) -> Self {
        Site { side: Side::Domain, subset, point }
    }

    fn codomain(subset: SubsetMask, point: Option<usize>) -> Self {
        Site { side: Side::Codomain, subset, point }
    }
}

/// Every set-level conclusion the theorems make, over compiled tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    /// `∀A f[A*] ⊆ (f[A])*`
    ImageStarInStarImage,
    /// `∀B (f⁻¹[B])* ⊆ f⁻¹[B*]`
    StarPreimageInPreimageStar,
    /// `∀A f[Cl* A] ⊆ Cl* f[A]`
    ImageClstarInClstarImage,
    /// `∀B Cl* f⁻¹[B] ⊆ f⁻¹[Cl* B]`
    ClstarPreimageInPreimageClstar,
    /// `f: τ*_X → τ*_Y` continuous
    StarContinuous,
    /// `∀A Ψ(f[A]) ⊆ f[Ψ(A)]`
    PsiImageInImagePsi,
    /// `∀B f⁻¹[Ψ(B)] ⊆ Ψ(f⁻¹[B])`
    PreimagePsiInPsiPreimage,
    /// `∀A f[Ψ(A)] ⊆ Ψ(f[A])`
    ImagePsiInPsiImage,
    /// `∀B Ψ(f⁻¹[B]) ⊆ f⁻¹[Ψ(B)]`
    PsiPreimageInPreimagePsi,
    /// `f: τ*_X → τ*_Y` open
    StarOpen,
    /// `∀A (f[A])* ⊆ f[A*]`
    StarImageInImageStar,
    /// `∀B f⁻¹[B*] ⊆ (f⁻¹[B])*`
    PreimageStarInStarPreimage,
    /// `f: τ*_X → τ*_Y` homeomorphism
    StarHomeomorphism,
    /// `∀A (f[A])* = f[A*]`
    StarImageEqImageStar,
    /// `∀B f⁻¹[B*] = (f⁻¹[B])*`
    PreimageStarEqStarPreimage,
    /// `∀A Ψ(f[A]) = f[Ψ(A)]`
    PsiImageEqImagePsi,
    /// `∀B f⁻¹[Ψ(B)] = Ψ(f⁻¹[B])`
    PreimagePsiEqPsiPreimage,
    /// `f: τ → σ` continuous iff `f: τ* → σ` continuous
    ContinuityUnchangedByStar,
    /// All listed conclusions have the same truth value.
    Equiv(&'static [Conclusion]),
}

/// Outcome of one conclusion; `None` means it holds.
pub type Probe = Option<Site>;

fn inclusion(lhs: SubsetMask, rhs: SubsetMask) -> Option<Option<usize>> {
    let extra = lhs - rhs;
    (!extra.is_empty()).then(|| extra.first())
}

fn equality(lhs: SubsetMask, rhs: SubsetMask) -> Option<Option<usize>> {
    let diff = (lhs - rhs) | (rhs - lhs);
    (!diff.is_empty()).then(|| diff.first())
}

fn over_domain(cx: &InstanceTables<'_>, test: impl Fn(SubsetMask) -> Option<Option<usize>>) -> Probe {
    SubsetMask::all(cx.x.n).find_map(|a| test(a).map(|p| Site::domain(a, p)))
}

fn over_codomain(cx: &InstanceTables<'_>, test: impl Fn(SubsetMask) -> Option<Option<usize>>) -> Probe {
    SubsetMask::all(cx.y.n).find_map(|b| test(b).map(|p| Site::codomain(b, p)))
}

impl Conclusion {
    pub fn eval(self, cx: &InstanceTables<'_>) -> Probe {
        let InstanceTables { x, y, f } = *cx;
        match self {
            Conclusion::ImageStarInStarImage => {
                over_domain(cx, |a| inclusion(f.image(x.local(a)), y.local(f.image(a))))
            }
            Conclusion::StarPreimageInPreimageStar => {
                over_codomain(cx, |b| inclusion(x.local(f.preimage(b)), f.preimage(y.local(b))))
            }
            Conclusion::ImageClstarInClstarImage => {
                over_domain(cx, |a| inclusion(f.image(x.star_closure(a)), y.star_closure(f.image(a))))
            }
            Conclusion::ClstarPreimageInPreimageClstar => over_codomain(cx, |b| {
                inclusion(x.star_closure(f.preimage(b)), f.preimage(y.star_closure(b)))
            }),
            Conclusion::StarContinuous => f.continuity_failure(&x.star, &y.star).map(|v| Site::codomain(v, None)),
            Conclusion::PsiImageInImagePsi => over_domain(cx, |a| inclusion(y.psi(f.image(a)), f.image(x.psi(a)))),
            Conclusion::PreimagePsiInPsiPreimage => {
                over_codomain(cx, |b| inclusion(f.preimage(y.psi(b)), x.psi(f.preimage(b))))
            }
            Conclusion::ImagePsiInPsiImage => over_domain(cx, |a| inclusion(f.image(x.psi(a)), y.psi(f.image(a)))),
            Conclusion::PsiPreimageInPreimagePsi => {
                over_codomain(cx, |b| inclusion(x.psi(f.preimage(b)), f.preimage(y.psi(b))))
            }
            Conclusion::StarOpen => f.openness_failure(&x.star, &y.star).map(|u| Site::domain(u, None)),
            Conclusion::StarImageInImageStar => {
                over_domain(cx, |a| inclusion(y.local(f.image(a)), f.image(x.local(a))))
            }
            Conclusion::PreimageStarInStarPreimage => {
                over_codomain(cx, |b| inclusion(f.preimage(y.local(b)), x.local(f.preimage(b))))
            }
            Conclusion::StarHomeomorphism => {
                let sites = [
                    f.first_collision().map(|pair| Site::domain(pair, None)),
                    f.first_missed().map(|p| Site::codomain(SubsetMask::singleton(p), Some(p))),
                    f.continuity_failure(&x.star, &y.star).map(|v| Site::codomain(v, None)),
                    f.openness_failure(&x.star, &y.star).map(|u| Site::domain(u, None)),
                ];
                sites.into_iter().flatten().min()
            }
            Conclusion::StarImageEqImageStar => {
                over_domain(cx, |a| equality(y.local(f.image(a)), f.image(x.local(a))))
            }
            Conclusion::PreimageStarEqStarPreimage => {
                over_codomain(cx, |b| equality(f.preimage(y.local(b)), x.local(f.preimage(b))))
            }
            Conclusion::PsiImageEqImagePsi => over_domain(cx, |a| equality(y.psi(f.image(a)), f.image(x.psi(a)))),
            Conclusion::PreimagePsiEqPsiPreimage => {
                over_codomain(cx, |b| equality(f.preimage(y.psi(b)), x.psi(f.preimage(b))))
            }
            Conclusion::ContinuityUnchangedByStar => {
                let plain = f.continuity_failure(&x.tau, &y.tau);
                let starred = f.continuity_failure(&x.star, &y.tau);
                match (plain, starred) {
                    (None, None) | (Some(_), Some(_)) => None,
                    (Some(v), None) | (None, Some(v)) => Some(Site::codomain(v, None)),
                }
            }
            Conclusion::Equiv(parts) => {
                let probes: Vec<Probe> = parts.iter().map(|c| c.eval(cx)).collect();
                let all_hold = probes.iter().all(Option::is_none);
                let all_fail = probes.iter().all(Option::is_some);
                if all_hold || all_fail {
                    None
                } else {
                    probes.into_iter().flatten().min()
                }
            }
        }
    }
}

/// A named boolean in a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag {
    pub name: &'static str,
    pub value: bool,
}

fn serialize_flags<S: Serializer>(flags: &[Flag], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(flags.len()))?;
    for flag in flags {
        map.serialize_entry(flag.name, &flag.value)?;
    }
    map.end()
}

/// The failing conclusion and where it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub conclusion: &'static str,
    pub side: Side,
    pub subset: SubsetMask,
    pub point: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    #[serde(serialize_with = "serialize_flags")]
    pub hypotheses: Vec<Flag>,
    #[serde(serialize_with = "serialize_flags")]
    pub conclusions: Vec<Flag>,
    #[serde(serialize_with = "serialize_flags", skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Flag>,
    pub vacuous: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn hypothesis(&self, name: &str) -> Option<bool> {
        self.hypotheses.iter().find(|f| f.name == name).map(|f| f.value)
    }

    pub fn conclusion(&self, name: &str) -> Option<bool> {
        self.conclusions.iter().find(|f| f.name == name).map(|f| f.value)
    }

    pub fn detail(&self, name: &str) -> Option<bool> {
        self.details.iter().find(|f| f.name == name).map(|f| f.value)
    }

    pub fn all_conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(|c| c.value)
    }

    /// Hypotheses all hold and some conclusion fails: a counterexample to the theorem.
    pub fn is_violation(&self) -> bool {
        !self.vacuous && !self.all_conclusions_hold()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |flags: &[Flag]| {
            flags.iter().map(|fl| format!("{}={}", fl.name, fl.value)).collect::<Vec<_>>().join(" ")
        };
        let status = if self.is_violation() {
            "VIOLATED"
        } else if self.vacuous {
            "vacuous"
        } else {
            "holds"
        };
        write!(f, "{}: {status}\n  hypotheses: {}\n  conclusions: {}", self.theorem, list(&self.hypotheses), list(&self.conclusions))?;
        if !self.details.is_empty() {
            write!(f, "\n  details: {}", list(&self.details))?;
        }
        if let Some(w) = &self.witness {
            let side = match w.side {
                Side::Domain => "A",
                Side::Codomain => "B",
            };
            write!(f, "\n  witness: {} fails at {side} = {}", w.conclusion, w.subset)?;
            if let Some(p) = w.point {
                write!(f, " (point {p})")?;
            }
        }
        Ok(())
    }
}

/// Evaluate a theorem on compiled tables.
pub fn check_tables(theorem: TheoremId, cx: &InstanceTables<'_>) -> Verdict {
    let hypotheses: Vec<Flag> =
        theorem.hypotheses().iter().map(|h| Flag { name: h.name(), value: h.eval(cx) }).collect();
    let mut witness: Option<(Site, &'static str)> = None;
    let mut conclusions = Vec::with_capacity(theorem.conclusions().len());
    for &(name, c) in theorem.conclusions() {
        let probe = c.eval(cx);
        if let Some(site) = probe {
            if witness.is_none_or(|(best, _)| site < best) {
                witness = Some((site, name));
            }
        }
        conclusions.push(Flag { name, value: probe.is_none() });
    }
    let details = theorem.details().iter().map(|&(name, c)| Flag { name, value: c.eval(cx).is_none() }).collect();
    Verdict {
        theorem,
        vacuous: hypotheses.iter().any(|h| !h.value),
        hypotheses,
        conclusions,
        details,
        witness: witness.map(|(site, conclusion)| Witness {
            conclusion,
            side: site.side,
            subset: site.subset,
            point: site.point,
        }),
    }
}

/// Evaluate a theorem on one instance.
pub fn check(theorem: TheoremId, inst: &Instance) -> Result<Verdict> {
    let x = SpaceTables::new(&inst.x)?;
    let y = SpaceTables::new(&inst.y)?;
    let f = MapTables::new(&inst.f);
    Ok(check_tables(theorem, &InstanceTables { x: &x, y: &y, f: &f }))
}

/// Evaluate every theorem on one instance, compiling it once.
pub fn check_all(inst: &Instance) -> Result<Vec<Verdict>> {
    let x = SpaceTables::new(&inst.x)?;
    let y = SpaceTables::new(&inst.y)?;
    let f = MapTables::new(&inst.f);
    let cx = InstanceTables { x: &x, y: &y, f: &f };
    Ok(TheoremId::ALL.iter().map(|&t| check_tables(t, &cx)).collect())
}
