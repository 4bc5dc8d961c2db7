//! Self-validating walkthroughs of the counterexample constructions.
//!
//! Each demo builds its construction from a Sierpiński-based seed with the
//! identity map, runs the relevant checker and tests the predicted failure.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::maps::FiniteMap;
use crate::space::Topology;
use crate::star::IdealSpace;
use crate::subset::SubsetMask;
use crate::theorems::ctor::{add_generic_point, add_open_point, collapse_point, CollapseVariant};
use crate::theorems::{check, Instance, TheoremId, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemoName {
    AddOpenPoint,
    AddGenericPoint,
    CollapseCont,
    CollapseOpen,
    PstarTrivial,
}

impl DemoName {
    pub const ALL: [DemoName; 5] = [
        DemoName::AddOpenPoint,
        DemoName::AddGenericPoint,
        DemoName::CollapseCont,
        DemoName::CollapseOpen,
        DemoName::PstarTrivial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DemoName::AddOpenPoint => "add-open-point",
            DemoName::AddGenericPoint => "add-generic-point",
            DemoName::CollapseCont => "collapse-cont",
            DemoName::CollapseOpen => "collapse-open",
            DemoName::PstarTrivial => "pstar-trivial",
        }
    }
}

impl FromStr for DemoName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DemoName::ALL
            .into_iter()
            .find(|d| d.as_str() == s)
            .ok_or_else(|| Error::UnknownDemo(s.to_string()))
    }
}

/// One predicted fact and whether it was observed.
#[derive(Debug, Clone, Serialize)]
pub struct Expectation {
    pub description: String,
    pub observed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DemoReport {
    #[serde(serialize_with = "serialize_name")]
    pub name: DemoName,
    pub summary: &'static str,
    #[serde(serialize_with = "crate::json::serialize_instance")]
    pub instance: Instance,
    pub verdicts: Vec<Verdict>,
    pub expectations: Vec<Expectation>,
}

fn serialize_name<S: serde::Serializer>(d: &DemoName, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(d.as_str())
}

impl DemoReport {
    pub fn confirmed(&self) -> bool {
        self.expectations.iter().all(|e| e.observed)
    }
}

impl fmt::Display for DemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "demo {}: {}", self.name.as_str(), self.summary)?;
        writeln!(f, "{}", self.instance)?;
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        for e in &self.expectations {
            writeln!(f, "  [{}] {}", if e.observed { "ok" } else { "FAILED" }, e.description)?;
        }
        write!(f, "prediction {}", if self.confirmed() { "confirmed" } else { "NOT confirmed" })
    }
}

fn expect(description: impl Into<String>, observed: bool) -> Expectation {
    Expectation { description: description.into(), observed }
}

fn sierpinski_space(carrier: SubsetMask) -> Result<IdealSpace> {
    IdealSpace::new(Topology::sierpinski(), Ideal::from_carrier(2, carrier)?)
}

fn identity_seed(carrier: SubsetMask) -> Result<Instance> {
    let s = sierpinski_space(carrier)?;
    Instance::new(s.clone(), s, FiniteMap::identity(2)?)
}

/// The hypotheses of `v` are all true except exactly the named ones.
fn only_failing(v: &Verdict, failing: &[&str]) -> Expectation {
    let observed = v.hypotheses.iter().all(|h| h.value != failing.contains(&h.name));
    expect(format!("{}: every hypothesis holds except {}", v.theorem, failing.join(", ")), observed)
}

pub fn run(name: DemoName) -> Result<DemoReport> {
    match name {
        DemoName::AddOpenPoint => add_open_point_demo(),
        DemoName::AddGenericPoint => add_generic_point_demo(),
        DemoName::CollapseCont => collapse_cont_demo(),
        DemoName::CollapseOpen => collapse_open_demo(),
        DemoName::PstarTrivial => pstar_trivial_demo(),
    }
}

fn add_open_point_demo() -> Result<DemoReport> {
    let seed = identity_seed(SubsetMask::EMPTY)?;
    let ext = add_open_point(&seed.y)?;
    let inst = ext.instance(&seed)?;
    let v = check(TheoremId::ContPsi, &inst)?;

    let x_all = inst.x.full();
    let lhs = inst.y.psi(inst.f.image(x_all))?;
    let rhs = inst.f.image(inst.x.psi(x_all)?);
    let z = ext.z;
    let expectations = vec![
        only_failing(&v, &["surjective"]),
        expect("CONTPSI conclusion a fails", v.conclusion("a") == Some(false)),
        expect(
            format!("z = {z} lies in Ψ(f[X]) = {lhs} but not in f[Ψ(X)] = {rhs}"),
            lhs.contains(z) && !rhs.contains(z),
        ),
        expect(
            "z ∉ A* for every A ⊆ Z",
            SubsetMask::all(inst.y.n()).all(|a| !inst.y.local_raw(a).contains(z)),
        ),
    ];
    Ok(DemoReport {
        name: DemoName::AddOpenPoint,
        summary: "codomain gains a point z contained in every nonempty open set, with {z} small",
        instance: inst,
        verdicts: vec![v],
        expectations,
    })
}

fn add_generic_point_demo() -> Result<DemoReport> {
    let seed = identity_seed(SubsetMask::EMPTY)?;
    let ext = add_generic_point(&seed.y)?;
    let inst = ext.instance(&seed)?;
    let v = check(TheoremId::OpenBij, &inst)?;

    let x_all = inst.x.full();
    let lhs = inst.y.local_raw(inst.f.image(x_all));
    let rhs = inst.f.image(inst.x.local_raw(x_all));
    let z = ext.z;
    let expectations = vec![
        only_failing(&v, &["surjective"]),
        expect("OPENBIJ conclusion a fails", v.conclusion("a") == Some(false)),
        expect(
            format!("z = {z} lies in (f[X])* = {lhs} but not in f[X*] = {rhs}"),
            lhs.contains(z) && !rhs.contains(z),
        ),
        expect(
            "the only neighbourhood of z is Z",
            inst.y.top().nbhds_of(z) == vec![inst.y.full()],
        ),
    ];
    Ok(DemoReport {
        name: DemoName::AddGenericPoint,
        summary: "codomain gains a point z whose only neighbourhood is the whole space",
        instance: inst,
        verdicts: vec![v],
        expectations,
    })
}

fn collapse_cont_demo() -> Result<DemoReport> {
    let x0 = 1;
    let seed = identity_seed(SubsetMask::singleton(x0))?;
    let collapse = collapse_point(&seed.x, x0, CollapseVariant::Cont)?;
    let inst = collapse.instance(&seed)?;
    let v = check(TheoremId::ContPsi, &inst)?;

    let y0 = seed.f.apply(x0);
    let a = inst.x.full().without(collapse.z);
    let lhs = inst.y.psi(inst.f.image(a))?;
    let rhs = inst.f.image(inst.x.psi(a)?);
    let expectations = vec![
        only_failing(&v, &["injective"]),
        expect("CONTPSI conclusion a fails", v.conclusion("a") == Some(false)),
        expect(
            format!("y0 = {y0} lies in Ψ(f[A]) = {lhs} but not in f[Ψ(A)] = {rhs} for A = {a}"),
            lhs.contains(y0) && !rhs.contains(y0),
        ),
    ];
    Ok(DemoReport {
        name: DemoName::CollapseCont,
        summary: "domain gains a twin z of x0 inside every neighbourhood of x0; f(z) = f(x0)",
        instance: inst,
        verdicts: vec![v],
        expectations,
    })
}

fn collapse_open_demo() -> Result<DemoReport> {
    let x0 = 1;
    // {y0} must be small and X ∖ {x0} must be small; with the identity seed
    // and ideal-preserving carriers both force M = X.
    let seed = identity_seed(SubsetMask::full(2))?;
    let collapse = collapse_point(&seed.x, x0, CollapseVariant::Open)?;
    let inst = collapse.instance(&seed)?;
    let open_bij = check(TheoremId::OpenBij, &inst)?;
    let closed_sur = check(TheoremId::ClosedSur, &inst)?;

    let y0 = seed.f.apply(x0);
    let z_all = inst.x.full();
    let lhs = inst.y.local_raw(inst.f.image(z_all));
    let rhs = inst.f.image(inst.x.local_raw(z_all));
    let expectations = vec![
        only_failing(&open_bij, &["injective"]),
        only_failing(&closed_sur, &["injective"]),
        expect("OPENBIJ conclusion a fails", open_bij.conclusion("a") == Some(false)),
        expect("CLOSEDSUR conclusion a fails", closed_sur.conclusion("a") == Some(false)),
        expect(
            format!("y0 = {y0} lies in (f[Z])* = {lhs} but not in f[Z*] = {rhs}"),
            lhs.contains(y0) && !rhs.contains(y0),
        ),
    ];
    Ok(DemoReport {
        name: DemoName::CollapseOpen,
        summary: "domain gains a twin z of x0 whose only neighbourhood is Z; open sets around x0 are dropped",
        instance: inst,
        verdicts: vec![open_bij, closed_sur],
        expectations,
    })
}

fn pstar_trivial_demo() -> Result<DemoReport> {
    let x = sierpinski_space(SubsetMask::full(2))?;
    let y = IdealSpace::new(Topology::discrete(2)?, Ideal::trivial(2)?)?;
    let inst = Instance::new(x, y, FiniteMap::identity(2)?)?;
    let v = check(TheoremId::Tc1, &inst)?;
    let expectations = vec![
        expect("A* = ∅ for every A ⊆ X", SubsetMask::all(2).all(|a| inst.x.local_raw(a).is_empty())),
        only_failing(&v, &["continuous"]),
        expect("TC1 conclusion a holds", v.conclusion("a") == Some(true)),
    ];
    Ok(DemoReport {
        name: DemoName::PstarTrivial,
        summary: "domain ideal P(X): the local function vanishes, so a) holds for a discontinuous map",
        instance: inst,
        verdicts: vec![v],
        expectations,
    })
}
