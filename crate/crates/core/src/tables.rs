//! Precomputed lookup tables over all `2^n` subsets.
//!
//! Theorem checkers quantify over every subset of both ground sets, usually
//! several times per instance. The exhaustive search evaluates millions of
//! instances built from a few hundred spaces and maps, so each space and map
//! is compiled once into tables and the checkers only do lookups.

use crate::error::Result;
use crate::maps::FiniteMap;
use crate::space::Topology;
use crate::star::IdealSpace;
use crate::subset::SubsetMask;

/// Open-set family of one topology, as flags and as an ascending list.
#[derive(Debug, Clone)]
pub struct OpenFamily {
    pub open: Vec<bool>,
    pub opens: Vec<SubsetMask>,
    pub closed: Vec<bool>,
    pub closeds: Vec<SubsetMask>,
}

impl OpenFamily {
    pub fn of(top: &Topology) -> Self {
        let n = top.n();
        let open: Vec<bool> = SubsetMask::all(n).map(|a| top.is_open_raw(a)).collect();
        let closed: Vec<bool> = SubsetMask::all(n).map(|a| open[a.complement(n).index()]).collect();
        let opens = SubsetMask::all(n).filter(|a| open[a.index()]).collect();
        let closeds = SubsetMask::all(n).filter(|a| closed[a.index()]).collect();
        OpenFamily { open, opens, closed, closeds }
    }

    #[inline]
    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.open[a.index()]
    }

    #[inline]
    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.closed[a.index()]
    }
}

/// Everything the checkers ask about one ideal space.
#[derive(Debug, Clone)]
pub struct SpaceTables {
    pub n: usize,
    pub full: SubsetMask,
    pub carrier: SubsetMask,
    pub local: Vec<SubsetMask>,
    pub star_closure: Vec<SubsetMask>,
    pub psi: Vec<SubsetMask>,
    /// `τ`
    pub tau: OpenFamily,
    /// `τ*`
    pub star: OpenFamily,
    /// `⟨Ψ(τ)⟩`
    pub psi_gen: OpenFamily,
    pub compatible: bool,
    /// `X* = X`
    pub dense: bool,
    pub regular: bool,
    pub hausdorff: bool,
    pub ideal_compact: bool,
}

impl SpaceTables {
    pub fn new(space: &IdealSpace) -> Result<Self> {
        let n = space.n();
        let full = space.full();
        let local: Vec<SubsetMask> = SubsetMask::all(n).map(|a| space.local_raw(a)).collect();
        let star_closure = SubsetMask::all(n).map(|a| a | local[a.index()]).collect();
        let psi = SubsetMask::all(n).map(|a| space.psi_raw(a)).collect();
        let profile = space.top().separation_profile();
        Ok(SpaceTables {
            n,
            full,
            carrier: space.ideal().carrier(),
            dense: local[full.index()] == full,
            local,
            star_closure,
            psi,
            tau: OpenFamily::of(space.top()),
            star: OpenFamily::of(&space.star_topology()?),
            psi_gen: OpenFamily::of(&space.psi_topology()?),
            compatible: space.is_compatible(),
            regular: profile.regular,
            hausdorff: profile.hausdorff,
            ideal_compact: space.is_ideal_compact(),
        })
    }

    #[inline]
    pub fn local(&self, a: SubsetMask) -> SubsetMask {
        self.local[a.index()]
    }

    #[inline]
    pub fn star_closure(&self, a: SubsetMask) -> SubsetMask {
        self.star_closure[a.index()]
    }

    #[inline]
    pub fn psi(&self, a: SubsetMask) -> SubsetMask {
        self.psi[a.index()]
    }
}

/// Image and preimage of every subset under one map.
#[derive(Debug, Clone)]
pub struct MapTables {
    pub n_dom: usize,
    pub n_cod: usize,
    pub values: Vec<usize>,
    pub image: Vec<SubsetMask>,
    pub preimage: Vec<SubsetMask>,
    pub injective: bool,
    pub surjective: bool,
}

impl MapTables {
    pub fn new(f: &FiniteMap) -> Self {
        MapTables {
            n_dom: f.n_dom(),
            n_cod: f.n_cod(),
            values: f.values().to_vec(),
            image: SubsetMask::all(f.n_dom()).map(|a| f.image(a)).collect(),
            preimage: SubsetMask::all(f.n_cod()).map(|b| f.preimage(b)).collect(),
            injective: f.is_injective(),
            surjective: f.is_surjective(),
        }
    }

    #[inline]
    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        self.image[a.index()]
    }

    #[inline]
    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        self.preimage[b.index()]
    }

    /// Least pair of points with the same value, as a domain subset.
    pub fn first_collision(&self) -> Option<SubsetMask> {
        for x in 0..self.n_dom {
            for y in x + 1..self.n_dom {
                if self.values[x] == self.values[y] {
                    return Some(SubsetMask::singleton(x).with(y));
                }
            }
        }
        None
    }

    /// Least codomain point outside the range.
    pub fn first_missed(&self) -> Option<usize> {
        (SubsetMask::full(self.n_cod) - self.image(SubsetMask::full(self.n_dom))).first()
    }

    /// Least open set of `to` whose preimage is not open in `from`.
    pub fn continuity_failure(&self, from: &OpenFamily, to: &OpenFamily) -> Option<SubsetMask> {
        to.opens.iter().copied().find(|&v| !from.is_open(self.preimage(v)))
    }

    /// Least open set of `from` whose image is not open in `to`.
    pub fn openness_failure(&self, from: &OpenFamily, to: &OpenFamily) -> Option<SubsetMask> {
        from.opens.iter().copied().find(|&u| !to.is_open(self.image(u)))
    }

    /// Least closed set of `from` whose image is not closed in `to`.
    pub fn closedness_failure(&self, from: &OpenFamily, to: &OpenFamily) -> Option<SubsetMask> {
        from.closeds.iter().copied().find(|&c| !to.is_closed(self.image(c)))
    }
}
