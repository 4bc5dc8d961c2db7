//! One test per acceptance criterion. Each prints a single `criterion N: PASS|FAIL` line.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use idealtop::demo::{self, DemoName};
use idealtop::maps::classify_paranoid;
use idealtop::theorems::ctor::{add_generic_point, add_open_point};
use idealtop::{
    enumerate_ideals, enumerate_maps, enumerate_topologies, find_counterexample, verify_exhaustive, Ideal,
    IdealSpace, SearchBounds, SubsetMask, TheoremId, Topology,
};

fn report(n: u32, title: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} {title}");
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

#[test]
fn criterion_1_local_function_laws() {
    let start = Instant::now();
    let mut failures = vec![];
    for s in common::all_spaces(3) {
        let n = s.n();
        let star = |a| common::local_function_oracle(&s, a);
        let cl = |a| common::closure_oracle(s.top(), a);
        for a in SubsetMask::all(n) {
            let sa = star(a);
            let mut fail = |law: &str, b: Option<SubsetMask>| {
                failures.push(format!("{law} fails on {} M={} A={a} B={b:?}", s.top(), s.ideal().carrier()))
            };
            if !(cl(sa) == sa && sa.is_subset_of(cl(a))) {
                fail("A* = Cl(A*) ⊆ Cl(A)", None);
            }
            if !star(sa).is_subset_of(sa) {
                fail("(A*)* ⊆ A*", None);
            }
            for b in SubsetMask::all(n) {
                if a.is_subset_of(b) && !sa.is_subset_of(star(b)) {
                    fail("A ⊆ B ⇒ A* ⊆ B*", Some(b));
                }
                if star(a | b) != sa | star(b) {
                    fail("(A ∪ B)* = A* ∪ B*", Some(b));
                }
            }
            for i in s.ideal().members() {
                if star(a | i) != sa || star(a - i) != sa {
                    fail("(A ∪ I)* = A* = (A ∖ I)*", Some(i));
                }
            }
        }
        if !s.check_local_function_laws().all_pass() {
            failures.push(format!("library law checker rejects {} M={}", s.top(), s.ideal().carrier()));
        }
    }
    if start.elapsed() >= Duration::from_secs(10) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    report(1, "local function laws, all spaces with n <= 3", &failures);
}

#[test]
fn criterion_2_sandwich() {
    let mut failures = vec![];
    for s in common::all_spaces(3) {
        let star = s.star_topology().unwrap();
        if !s.top().opens().into_iter().all(|u| star.is_open(u).unwrap()) {
            failures.push(format!("τ ⊄ τ* for {} M={}", s.top(), s.ideal().carrier()));
        }
    }
    for n in 1..=3 {
        for t in enumerate_topologies(n).unwrap() {
            let trivial = IdealSpace::new(t.clone(), Ideal::trivial(n).unwrap()).unwrap();
            if trivial.star_topology().unwrap() != t {
                failures.push(format!("τ*({{∅}}) ≠ τ for {t}"));
            }
            let full = IdealSpace::new(t.clone(), Ideal::power_set(n).unwrap()).unwrap();
            if full.star_topology().unwrap() != Topology::discrete(n).unwrap() {
                failures.push(format!("τ*(P(X)) not discrete for {t}"));
            }
        }
    }
    report(2, "τ ⊆ τ* ⊆ P(X) with both extremes", &failures);
}

#[test]
fn criterion_3_local_function_oracles_agree() {
    let mut failures = vec![];
    let mut compared = 0;
    for s in common::all_spaces(4) {
        let m = s.ideal().carrier();
        for a in SubsetMask::all(s.n()) {
            let fast = s.local_raw(a);
            let by_definition = common::local_function_oracle(&s, a);
            let by_closure = common::closure_oracle(s.top(), a - m);
            compared += 1;
            if fast != by_definition || fast != by_closure {
                failures.push(format!("{} M={m} A={a}: {fast} / {by_definition} / {by_closure}", s.top()));
            }
        }
    }
    report(3, &format!("three local functions agree on {compared} (space, A) pairs with n <= 4"), &failures);
}

#[test]
fn criterion_4_theorem_certification() {
    let start = Instant::now();
    let mut failures = vec![];
    for t in TheoremId::ALL {
        let one = verify_exhaustive(t, &SearchBounds::up_to(3).with_workers(1)).unwrap();
        let four = verify_exhaustive(t, &SearchBounds::up_to(3).with_workers(4)).unwrap();
        let json = |r| serde_json::to_string(r).unwrap();
        if json(&one) != json(&four) {
            failures.push(format!("{t}: report depends on the worker count"));
        }
        println!("    {t}: certified={} instances={}", one.certified, one.instances_checked);
        if let Some(c) = &one.counterexample {
            failures.push(format!("{t}: counterexample\n{}\n{}", c.instance, c.verdict));
        }
    }
    if start.elapsed() > Duration::from_secs(600) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    report(4, "every theorem certified for n_X, n_Y <= 3, same report for 1 and 4 workers", &failures);
}

#[test]
fn criterion_5_continuity_characterizations_agree() {
    let mut failures = vec![];
    for nd in 1..=3 {
        for nc in 1..=3 {
            let (xs, ys) = (enumerate_topologies(nd).unwrap(), enumerate_topologies(nc).unwrap());
            for f in enumerate_maps(nd, nc).unwrap() {
                for tx in &xs {
                    for ty in &ys {
                        if let Err(e) = classify_paranoid(&f, tx, ty) {
                            failures.push(e.to_string());
                        }
                    }
                }
            }
        }
    }
    report(5, "five continuity characterizations agree for n <= 3", &failures);
}

#[test]
fn criterion_6_necessity_demos() {
    let mut failures = vec![];
    for d in DemoName::ALL {
        let r = demo::run(d).unwrap();
        println!("    {}: {}", d.as_str(), if r.confirmed() { "confirmed" } else { "NOT confirmed" });
        if !r.confirmed() {
            failures.push(r.to_string());
        }
    }
    report(6, "every construction demo confirms its predicted failure", &failures);
}

#[test]
fn criterion_7_necessity_search() {
    let mut failures = vec![];
    for (t, dropped) in [
        (TheoremId::ContPsi, "surjective"),
        (TheoremId::OpenBij, "surjective"),
        (TheoremId::ContPsi, "injective"),
    ] {
        let r = find_counterexample(t, &[dropped], &SearchBounds::up_to(3)).unwrap();
        let label = format!("{t} without {dropped}");
        if r.elapsed >= Duration::from_secs(60) {
            failures.push(format!("{label}: took {:?}", r.elapsed));
        }
        match &r.counterexample {
            None => failures.push(format!("{label}: no counterexample")),
            Some(c) => {
                let v = &c.verdict;
                let others_hold = v.hypotheses.iter().all(|h| h.name == dropped || h.value);
                if !others_hold || v.conclusion(t.designated_conclusion()) != Some(false) {
                    failures.push(format!("{label}: malformed witness\n{v}"));
                }
            }
        }
    }
    report(7, "dropping surjectivity or injectivity yields witnesses at n <= 3", &failures);
}

#[test]
fn criterion_8_enumeration_counts() {
    let mut failures = vec![];
    for (n, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let ours: BTreeSet<Vec<u32>> = enumerate_topologies(n).unwrap().iter().map(common::open_family).collect();
        let oracle = common::topologies_by_family_filter(n);
        if ours.len() != expected || ours != oracle {
            failures.push(format!("n={n}: {} topologies, oracle {}", ours.len(), oracle.len()));
        }
    }
    for n in 1..=3 {
        let ours: BTreeSet<Vec<u32>> = enumerate_ideals(n)
            .unwrap()
            .iter()
            .map(|i| {
                let mut v: Vec<u32> = i.members().map(|m| m.bits()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        if ours.len() != 1 << n || ours != common::ideals_by_family_filter(n) {
            failures.push(format!("n={n}: ideal enumeration disagrees with the family filter"));
        }
    }
    report(8, "topology counts 1, 4, 29, 355 and 2^n ideals match the oracles", &failures);
}

#[test]
fn criterion_9_construction_fidelity() {
    let mut failures = vec![];
    for seed in common::all_spaces(3) {
        let open = add_open_point(&seed).unwrap();
        for a in SubsetMask::all(open.space.n()) {
            if common::local_function_oracle(&open.space, a).contains(open.z) {
                failures.push(format!("open point in A* for A={a}, seed {} M={}", seed.top(), seed.ideal().carrier()));
            }
        }
        let generic = add_generic_point(&seed).unwrap();
        for a in SubsetMask::all(generic.space.n()).filter(|&a| !generic.space.ideal().contains(a)) {
            if !common::local_function_oracle(&generic.space, a).contains(generic.z) {
                failures.push(format!("generic point not in A* for A={a}, seed {} M={}", seed.top(), seed.ideal().carrier()));
            }
        }
    }
    report(9, "added points behave as constructed for every seed with n <= 3", &failures);
}
