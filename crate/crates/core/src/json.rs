//! File formats for spaces, ideals, maps and instances.
//!
//! Points are the integers `0..n`. Subsets are sorted point arrays. Every
//! validation error names the document path it came from, and syntax errors
//! carry serde_json's line and column.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::maps::FiniteMap;
use crate::space::Topology;
use crate::star::IdealSpace;
use crate::subset::SubsetMask;
use crate::theorems::Instance;

fn at(path: &str, e: Error) -> Error {
    Error::Parse(format!("{path}: {e}"))
}

fn mask(n: usize, points: &[usize]) -> Result<SubsetMask> {
    SubsetMask::try_from_points(n, points)
}

/// `{"n": 2, "opens": [[1]]}`. `∅` and `X` may be omitted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopologyJson {
    pub n: usize,
    #[serde(default)]
    pub opens: Vec<Vec<usize>>,
    /// Display names for the points; carried through, never interpreted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TopologyJson {
    pub fn to_topology(&self) -> Result<Topology> {
        crate::space::check_point_count(self.n)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::DimensionMismatch(format!("{} labels for {} points", labels.len(), self.n)));
            }
        }
        let mut opens = vec![SubsetMask::EMPTY, SubsetMask::full(self.n)];
        for o in &self.opens {
            opens.push(mask(self.n, o)?);
        }
        Topology::make_topology(self.n, &opens)
    }
}

impl From<&Topology> for TopologyJson {
    fn from(t: &Topology) -> Self {
        TopologyJson { n: t.n(), opens: t.opens().into_iter().map(SubsetMask::to_vec).collect(), labels: None }
    }
}

/// `{"n": 2, "carrier": [1]}` on output; `{"generators": [[0], [1]]}` also accepted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
}

impl IdealJson {
    /// `n` comes from the enclosing space when the ideal omits it.
    pub fn to_ideal(&self, n: usize) -> Result<Ideal> {
        if let Some(own) = self.n {
            if own != n {
                return Err(Error::DimensionMismatch(format!("ideal on {own} points, space has {n}")));
            }
        }
        match (&self.carrier, &self.generators) {
            (Some(c), None) => Ideal::from_carrier(n, mask(n, c)?),
            (None, Some(gens)) => {
                let gens = gens.iter().map(|g| mask(n, g)).collect::<Result<Vec<_>>>()?;
                Ideal::make_ideal(n, &gens)
            }
            (None, None) => Err(Error::Parse("ideal needs `carrier` or `generators`".into())),
            (Some(_), Some(_)) => Err(Error::Parse("ideal has both `carrier` and `generators`".into())),
        }
    }
}

impl From<&Ideal> for IdealJson {
    fn from(i: &Ideal) -> Self {
        IdealJson { n: Some(i.n()), carrier: Some(i.carrier().to_vec()), generators: None }
    }
}

/// `{"topology": {..}, "ideal": {..}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub topology: TopologyJson,
    pub ideal: IdealJson,
}

impl SpaceJson {
    pub fn to_space(&self) -> Result<IdealSpace> {
        let top = self.topology.to_topology().map_err(|e| at("topology", e))?;
        let ideal = self.ideal.to_ideal(top.n()).map_err(|e| at("ideal", e))?;
        IdealSpace::new(top, ideal)
    }
}

impl From<&IdealSpace> for SpaceJson {
    fn from(s: &IdealSpace) -> Self {
        SpaceJson { topology: s.top().into(), ideal: s.ideal().into() }
    }
}

/// `{"n_dom": 2, "n_cod": 3, "values": [0, 2]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub n_dom: usize,
    pub n_cod: usize,
    pub values: Vec<usize>,
}

impl MapJson {
    pub fn to_map(&self) -> Result<FiniteMap> {
        FiniteMap::new(self.n_dom, self.n_cod, self.values.clone())
    }
}

impl From<&FiniteMap> for MapJson {
    fn from(f: &FiniteMap) -> Self {
        MapJson { n_dom: f.n_dom(), n_cod: f.n_cod(), values: f.values().to_vec() }
    }
}

/// `{"X": space, "Y": space, "f": map}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    #[serde(rename = "X")]
    pub x: SpaceJson,
    #[serde(rename = "Y")]
    pub y: SpaceJson,
    pub f: MapJson,
}

impl InstanceJson {
    pub fn to_instance(&self) -> Result<Instance> {
        let x = self.x.to_space().map_err(|e| at("X", e))?;
        let y = self.y.to_space().map_err(|e| at("Y", e))?;
        let f = self.f.to_map().map_err(|e| at("f", e))?;
        Instance::new(x, y, f).map_err(|e| at("f", e))
    }
}

impl From<&Instance> for InstanceJson {
    fn from(i: &Instance) -> Self {
        InstanceJson { x: (&i.x).into(), y: (&i.y).into(), f: (&i.f).into() }
    }
}

/// For `#[serde(serialize_with)]` on fields holding an [`Instance`].
pub fn serialize_instance<S: serde::Serializer>(i: &Instance, s: S) -> std::result::Result<S::Ok, S::Error> {
    InstanceJson::from(i).serialize(s)
}

/// Deserialize any of the document types, reporting syntax errors with their position.
pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

pub fn parse_space(text: &str) -> Result<IdealSpace> {
    parse_json::<SpaceJson>(text)?.to_space()
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_json::<InstanceJson>(text)?.to_instance()
}

/// A subset given as a JSON array such as `[0, 2]`, checked against `n`.
pub fn parse_subset(text: &str, n: usize) -> Result<SubsetMask> {
    let points: Vec<usize> = parse_json(text)?;
    mask(n, &points)
}
