//! Exhaustive enumeration of small instances and theorem certification.
//!
//! Instances are visited in a fixed canonical order: size pair `(n_X, n_Y)`,
//! then domain topology, codomain topology, domain ideal, codomain ideal and
//! map. Each `(sizes, T_X, T_Y)` triple is one block of work. Blocks run in
//! parallel and the aggregator keeps the least hit in canonical order, so the
//! report never depends on the worker count.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::maps::FiniteMap;
use crate::space::Topology;
use crate::star::IdealSpace;
use crate::subset::SubsetMask;
use crate::tables::{MapTables, SpaceTables};
use crate::theorems::{check_tables, Conclusion, Instance, InstanceTables, TheoremId, Verdict};

/// Largest point count [`enumerate_topologies`] accepts.
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// Largest point count a search accepts on either side.
pub const MAX_SEARCH_POINTS: usize = 4;

/// Every topology on `n` labelled points, ordered by minimal-neighbourhood table.
///
/// A table `N(0), .., N(n-1)` with `x ∈ N(x)` is a topology iff
/// `y ∈ N(x) ⇒ N(y) ⊆ N(x)` for all `x, y`. Tables are generated in
/// lexicographic order and each choice of `N(x)` is checked in both
/// directions against the points already fixed.
pub fn enumerate_topologies(n: usize) -> Result<Vec<Topology>> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::CapExceeded { n, cap: MAX_ENUMERATION_POINTS });
    }
    crate::space::check_point_count(n)?;
    let mut out = Vec::new();
    let mut table = vec![SubsetMask::EMPTY; n];
    fn consistent(table: &[SubsetMask], x: usize, nx: SubsetMask) -> bool {
        table[..x].iter().enumerate().all(|(y, &ny)| {
            (!nx.contains(y) || ny.is_subset_of(nx)) && (!ny.contains(x) || nx.is_subset_of(ny))
        })
    }
    fn fill(x: usize, n: usize, table: &mut Vec<SubsetMask>, out: &mut Vec<Topology>) {
        if x == n {
            out.push(Topology::from_min_nbhd(n, table.clone()).expect("checked table"));
            return;
        }
        for nx in SubsetMask::all(n).filter(|s| s.contains(x)) {
            if consistent(table, x, nx) {
                table[x] = nx;
                fill(x + 1, n, table, out);
            }
        }
    }
    fill(0, n, &mut table, &mut out);
    Ok(out)
}

/// One ideal per carrier, ascending.
pub fn enumerate_ideals(n: usize) -> Result<Vec<Ideal>> {
    crate::space::check_point_count(n)?;
    SubsetMask::all(n).map(|m| Ideal::from_carrier(n, m)).collect()
}

/// All `n_cod^n_dom` maps, lexicographic by value table.
pub fn enumerate_maps(n_dom: usize, n_cod: usize) -> Result<Vec<FiniteMap>> {
    crate::space::check_point_count(n_dom)?;
    crate::space::check_point_count(n_cod)?;
    let total = n_cod.checked_pow(n_dom as u32).ok_or(Error::CapExceeded { n: n_dom, cap: MAX_SEARCH_POINTS })?;
    (0..total)
        .map(|mut code| {
            let mut values = vec![0; n_dom];
            for v in values.iter_mut().rev() {
                *v = code % n_cod;
                code /= n_cod;
            }
            FiniteMap::new(n_dom, n_cod, values)
        })
        .collect()
}

/// How much of the instance space a search visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    /// Only ideals whose carrier is in the list (carriers too large for a side are skipped).
    RestrictedIdeals(Vec<SubsetMask>),
    /// `samples` instances drawn uniformly with a seeded generator.
    Sampled { seed: u64, samples: u64 },
}

impl SearchMode {
    pub fn label(&self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::RestrictedIdeals(_) => "restricted-ideals",
            SearchMode::Sampled { .. } => "sampled",
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, SearchMode::Exhaustive)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_n_dom: usize,
    pub max_n_cod: usize,
    pub mode: SearchMode,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Print one line per finished block to standard error.
    pub progress: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_n_dom: 3, max_n_cod: 3, mode: SearchMode::Exhaustive, workers: None, progress: false }
    }
}

impl SearchBounds {
    pub fn up_to(max_n: usize) -> Self {
        SearchBounds { max_n_dom: max_n, max_n_cod: max_n, ..Default::default() }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn validate(&self) -> Result<()> {
        for n in [self.max_n_dom, self.max_n_cod] {
            if n == 0 {
                return Err(Error::BadBounds("point caps must be at least 1".into()));
            }
            if n > MAX_SEARCH_POINTS {
                return Err(Error::CapExceeded { n, cap: MAX_SEARCH_POINTS });
            }
        }
        if self.workers == Some(0) {
            return Err(Error::BadBounds("worker count must be at least 1".into()));
        }
        if let SearchMode::Sampled { samples: 0, .. } = self.mode {
            return Err(Error::BadBounds("sample count must be at least 1".into()));
        }
        Ok(())
    }
}

/// The least instance meeting the search target, with its full verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    #[serde(serialize_with = "crate::json::serialize_instance")]
    pub instance: Instance,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub theorem: TheoremId,
    pub dropped_hypotheses: Vec<String>,
    /// The conclusion a counterexample must violate; `None` means any claimed one.
    pub target_conclusion: Option<&'static str>,
    pub mode: &'static str,
    pub max_n_dom: usize,
    pub max_n_cod: usize,
    /// Instances in canonical order up to and including the counterexample, or all of them.
    pub instances_checked: u64,
    pub counterexample: Option<Counterexample>,
    /// No counterexample within the bounds; a proof only when `mode` is exhaustive.
    pub certified: bool,
    /// Wall-clock time; left out of JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n_X<={} n_Y<={} mode={}", self.theorem, self.max_n_dom, self.max_n_cod, self.mode)?;
        if !self.dropped_hypotheses.is_empty() {
            write!(f, " dropped={}", self.dropped_hypotheses.join(","))?;
        }
        writeln!(f)?;
        writeln!(f, "instances checked: {}", self.instances_checked)?;
        match &self.counterexample {
            None if self.mode == "exhaustive" => write!(f, "certified: no counterexample"),
            None => write!(f, "no counterexample found (non-certifying {} search)", self.mode),
            Some(c) => write!(f, "counterexample:\n{}\n{}", c.instance, c.verdict),
        }
    }
}

/// What counts as a hit.
#[derive(Clone, Copy)]
struct Target {
    theorem: TheoremId,
    required: u64,
    conclusion: Option<Conclusion>,
}

impl Target {
    fn hit(&self, cx: &InstanceTables<'_>) -> bool {
        let hyps = self.theorem.hypotheses();
        let holds = hyps.iter().enumerate().all(|(i, h)| self.required >> i & 1 == 0 || h.eval(cx));
        if !holds {
            return false;
        }
        match self.conclusion {
            Some(c) => c.eval(cx).is_some(),
            None => self.theorem.conclusions().iter().any(|(_, c)| c.eval(cx).is_some()),
        }
    }
}

/// Compiled spaces and maps for one side size.
struct Level {
    tops: Vec<Topology>,
    ideals: Vec<Ideal>,
    /// `spaces[t * ideals.len() + i]`
    spaces: Vec<SpaceTables>,
}

impl Level {
    fn new(n: usize, mode: &SearchMode) -> Result<Self> {
        let tops = enumerate_topologies(n)?;
        let ideals: Vec<Ideal> = match mode {
            SearchMode::RestrictedIdeals(carriers) => {
                let mut fitting: Vec<SubsetMask> = carriers.iter().copied().filter(|c| c.fits(n)).collect();
                fitting.sort();
                fitting.dedup();
                fitting.into_iter().map(|c| Ideal::from_carrier(n, c)).collect::<Result<_>>()?
            }
            _ => enumerate_ideals(n)?,
        };
        let mut spaces = Vec::with_capacity(tops.len() * ideals.len());
        for t in &tops {
            for &i in &ideals {
                spaces.push(SpaceTables::new(&IdealSpace::new(t.clone(), i)?)?);
            }
        }
        Ok(Level { tops, ideals, spaces })
    }

    fn space(&self, t: usize, i: usize) -> &SpaceTables {
        &self.spaces[t * self.ideals.len() + i]
    }

    fn ideal_space(&self, t: usize, i: usize) -> IdealSpace {
        IdealSpace::new(self.tops[t].clone(), self.ideals[i]).expect("enumerated space")
    }
}

struct SizePair {
    nd: usize,
    nc: usize,
    maps: Vec<FiniteMap>,
    map_tables: Vec<MapTables>,
}

/// Position of one instance inside the enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Coord {
    pair: usize,
    tx: usize,
    ty: usize,
    mx: usize,
    my: usize,
    f: usize,
}

struct Universe {
    levels: Vec<Option<Level>>,
    pairs: Vec<SizePair>,
}

impl Universe {
    fn new(bounds: &SearchBounds) -> Result<Self> {
        let top = bounds.max_n_dom.max(bounds.max_n_cod);
        let mut levels = vec![];
        for n in 0..=top {
            levels.push(if n == 0 { None } else { Some(Level::new(n, &bounds.mode)?) });
        }
        let mut pairs = vec![];
        for nd in 1..=bounds.max_n_dom {
            for nc in 1..=bounds.max_n_cod {
                let maps = enumerate_maps(nd, nc)?;
                let map_tables = maps.iter().map(MapTables::new).collect();
                pairs.push(SizePair { nd, nc, maps, map_tables });
            }
        }
        Ok(Universe { levels, pairs })
    }

    fn level(&self, n: usize) -> &Level {
        self.levels[n].as_ref().expect("level built")
    }

    /// Instances per `(T_X, T_Y)` block of a size pair.
    fn block_size(&self, pair: &SizePair) -> u64 {
        let ix = self.level(pair.nd).ideals.len() as u64;
        let iy = self.level(pair.nc).ideals.len() as u64;
        ix * iy * pair.maps.len() as u64
    }

    fn tables(&self, c: Coord) -> (&SpaceTables, &SpaceTables, &MapTables) {
        let pair = &self.pairs[c.pair];
        (
            self.level(pair.nd).space(c.tx, c.mx),
            self.level(pair.nc).space(c.ty, c.my),
            &pair.map_tables[c.f],
        )
    }

    fn instance(&self, c: Coord) -> Instance {
        let pair = &self.pairs[c.pair];
        Instance::new(
            self.level(pair.nd).ideal_space(c.tx, c.mx),
            self.level(pair.nc).ideal_space(c.ty, c.my),
            pair.maps[c.f].clone(),
        )
        .expect("enumerated instance")
    }

    /// Scan one block in canonical order; returns the first hit.
    fn scan_block(&self, pair_idx: usize, tx: usize, ty: usize, target: Target, stop: &AtomicUsize, id: usize) -> Option<Coord> {
        let pair = &self.pairs[pair_idx];
        let lx = self.level(pair.nd);
        let ly = self.level(pair.nc);
        for mx in 0..lx.ideals.len() {
            if stop.load(Ordering::Relaxed) < id {
                return None;
            }
            let x = lx.space(tx, mx);
            for my in 0..ly.ideals.len() {
                let y = ly.space(ty, my);
                for (fi, f) in pair.map_tables.iter().enumerate() {
                    if target.hit(&InstanceTables { x, y, f }) {
                        return Some(Coord { pair: pair_idx, tx, ty, mx, my, f: fi });
                    }
                }
            }
        }
        None
    }

    /// Instances strictly before `c` in canonical order.
    fn rank(&self, c: Coord) -> u64 {
        let mut before = 0;
        for pair in &self.pairs[..c.pair] {
            let blocks = (self.level(pair.nd).tops.len() * self.level(pair.nc).tops.len()) as u64;
            before += blocks * self.block_size(pair);
        }
        let pair = &self.pairs[c.pair];
        let ly = self.level(pair.nc);
        let block = (c.tx * ly.tops.len() + c.ty) as u64;
        let within = ((c.mx * ly.ideals.len() + c.my) * pair.maps.len() + c.f) as u64;
        before + block * self.block_size(pair) + within
    }

    fn total(&self) -> u64 {
        self.pairs
            .iter()
            .map(|p| (self.level(p.nd).tops.len() * self.level(p.nc).tops.len()) as u64 * self.block_size(p))
            .sum()
    }
}

fn run_exhaustive(universe: &Universe, target: Target, progress: bool) -> (u64, Option<Coord>) {
    let blocks: Vec<(usize, usize, usize)> = universe
        .pairs
        .iter()
        .enumerate()
        .flat_map(|(p, pair)| {
            let nx = universe.level(pair.nd).tops.len();
            let ny = universe.level(pair.nc).tops.len();
            (0..nx).flat_map(move |tx| (0..ny).map(move |ty| (p, tx, ty)))
        })
        .collect();
    let stop = AtomicUsize::new(usize::MAX);
    let found = AtomicUsize::new(0);
    let hits: Vec<Option<Coord>> = blocks
        .par_iter()
        .enumerate()
        .map(|(id, &(p, tx, ty))| {
            if stop.load(Ordering::Relaxed) < id {
                return None;
            }
            let hit = universe.scan_block(p, tx, ty, target, &stop, id);
            if hit.is_some() {
                stop.fetch_min(id, Ordering::Relaxed);
                found.fetch_add(1, Ordering::Relaxed);
            }
            if progress {
                eprintln!(
                    "block {id}: {} instances, {} counterexamples so far",
                    universe.block_size(&universe.pairs[p]),
                    found.load(Ordering::Relaxed)
                );
            }
            hit
        })
        .collect();
    // Blocks before the least hit all ran to completion, so the first hit is canonical.
    match hits.into_iter().flatten().min() {
        Some(c) => (universe.rank(c) + 1, Some(c)),
        None => (universe.total(), None),
    }
}

fn run_sampled(universe: &Universe, target: Target, seed: u64, samples: u64) -> (u64, Option<Coord>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let pair_idx = rng.gen_range(0..universe.pairs.len());
        let pair = &universe.pairs[pair_idx];
        let lx = universe.level(pair.nd);
        let ly = universe.level(pair.nc);
        let c = Coord {
            pair: pair_idx,
            tx: rng.gen_range(0..lx.tops.len()),
            ty: rng.gen_range(0..ly.tops.len()),
            mx: rng.gen_range(0..lx.ideals.len()),
            my: rng.gen_range(0..ly.ideals.len()),
            f: rng.gen_range(0..pair.maps.len()),
        };
        let (x, y, f) = universe.tables(c);
        if target.hit(&InstanceTables { x, y, f }) {
            return (k + 1, Some(c));
        }
    }
    (samples, None)
}

fn run(theorem: TheoremId, dropped: &[String], conclusion: Option<&'static str>, bounds: &SearchBounds) -> Result<SearchReport> {
    bounds.validate()?;
    let start = Instant::now();
    let mut required = (1u64 << theorem.hypotheses().len()) - 1;
    for name in dropped {
        required &= !(1 << theorem.hypothesis_index(name)?);
    }
    let target = Target {
        theorem,
        required,
        conclusion: conclusion
            .map(|name| theorem.conclusions().iter().find(|(n, _)| *n == name).map(|&(_, c)| c).expect("designated conclusion")),
    };

    let go = || -> Result<(Universe, u64, Option<Coord>)> {
        let universe = Universe::new(bounds)?;
        let (checked, hit) = match bounds.mode {
            SearchMode::Sampled { seed, samples } => run_sampled(&universe, target, seed, samples),
            _ => run_exhaustive(&universe, target, bounds.progress),
        };
        Ok((universe, checked, hit))
    };
    let (universe, instances_checked, hit) = match bounds.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(go)?,
        None => go()?,
    };

    let counterexample = hit.map(|c| {
        let (x, y, f) = universe.tables(c);
        Counterexample { instance: universe.instance(c), verdict: check_tables(theorem, &InstanceTables { x, y, f }) }
    });
    Ok(SearchReport {
        theorem,
        dropped_hypotheses: dropped.to_vec(),
        target_conclusion: conclusion,
        mode: bounds.mode.label(),
        max_n_dom: bounds.max_n_dom,
        max_n_cod: bounds.max_n_cod,
        instances_checked,
        certified: counterexample.is_none(),
        counterexample,
        elapsed: start.elapsed(),
    })
}

/// Look for an instance where every hypothesis holds and some claimed conclusion fails.
pub fn verify_exhaustive(theorem: TheoremId, bounds: &SearchBounds) -> Result<SearchReport> {
    run(theorem, &[], None, bounds)
}

/// Look for the least instance where every hypothesis outside `dropped`
/// holds and the theorem's designated conclusion fails.
pub fn find_counterexample(theorem: TheoremId, dropped: &[&str], bounds: &SearchBounds) -> Result<SearchReport> {
    let mut names: Vec<String> = dropped.iter().map(|s| s.to_string()).collect();
    names.sort_by_key(|n| theorem.hypothesis_index(n).unwrap_or(usize::MAX));
    names.dedup();
    run(theorem, &names, Some(theorem.designated_conclusion()), bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_topologies(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
        assert!(matches!(enumerate_topologies(6), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn topologies_are_sorted_and_distinct() {
        let tops = enumerate_topologies(3).unwrap();
        assert!(tops.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn map_order_is_lexicographic() {
        let maps = enumerate_maps(2, 2).unwrap();
        let tables: Vec<&[usize]> = maps.iter().map(|m| m.values()).collect();
        assert_eq!(tables, vec![&[0, 0][..], &[0, 1], &[1, 0], &[1, 1]]);
        assert_eq!(enumerate_maps(3, 3).unwrap().len(), 27);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(enumerate_ideals(1).unwrap().len(), 2);
        assert_eq!(enumerate_ideals(3).unwrap().len(), 8);
    }

    #[test]
    fn tc1_small_counts() {
        let r = verify_exhaustive(TheoremId::Tc1, &SearchBounds::up_to(1)).unwrap();
        assert!(r.certified);
        assert_eq!(r.instances_checked, 4);

        let bounds = SearchBounds { max_n_dom: 2, max_n_cod: 2, ..Default::default() };
        let r = verify_exhaustive(TheoremId::Tc1, &bounds).unwrap();
        assert!(r.certified);
        // T_X·T_Y·M_X·M_Y·maps per size pair:
        // (1,1) 1·1·2·2·1, (1,2) 1·4·2·4·2, (2,1) 4·1·4·2·1, (2,2) 4·4·4·4·4
        assert_eq!(r.instances_checked, 4 + 64 + 32 + 1024);
    }

    #[test]
    fn bounds_are_validated() {
        assert!(matches!(verify_exhaustive(TheoremId::Tc1, &SearchBounds::up_to(9)), Err(Error::CapExceeded { .. })));
        assert!(matches!(
            find_counterexample(TheoremId::Tc1, &["surjective"], &SearchBounds::up_to(1)),
            Err(Error::UnknownHypothesisName { .. })
        ));
    }

    #[test]
    fn rank_matches_linear_scan() {
        let u = Universe::new(&SearchBounds::up_to(2)).unwrap();
        let mut linear = 0u64;
        for (p, pair) in u.pairs.iter().enumerate() {
            let (lx, ly) = (u.level(pair.nd), u.level(pair.nc));
            for tx in 0..lx.tops.len() {
                for ty in 0..ly.tops.len() {
                    for mx in 0..lx.ideals.len() {
                        for my in 0..ly.ideals.len() {
                            for f in 0..pair.maps.len() {
                                assert_eq!(u.rank(Coord { pair: p, tx, ty, mx, my, f }), linear);
                                linear += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(u.total(), linear);
    }
}
