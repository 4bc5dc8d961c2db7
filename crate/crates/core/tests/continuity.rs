use idealtop::maps::{classify_paranoid, is_continuous_by, Continuity};
use idealtop::{enumerate_maps, enumerate_topologies, is_closed_map, is_open_map, FiniteMap, Topology};

#[test]
fn characterizations_agree_up_to_three_points() {
    let mut continuous = 0;
    let mut total = 0;
    for nd in 1..=3 {
        for nc in 1..=3 {
            let (tx, ty) = (enumerate_topologies(nd).unwrap(), enumerate_topologies(nc).unwrap());
            for f in enumerate_maps(nd, nc).unwrap() {
                for a in &tx {
                    for b in &ty {
                        let p = classify_paranoid(&f, a, b).unwrap();
                        total += 1;
                        continuous += p.continuous as usize;
                    }
                }
            }
        }
    }
    assert!(continuous > 0 && continuous < total);
}

#[test]
fn constant_maps_are_continuous() {
    for t in enumerate_topologies(3).unwrap() {
        for u in enumerate_topologies(2).unwrap() {
            let f = FiniteMap::constant(3, 2, 1).unwrap();
            for how in Continuity::ALL {
                assert!(is_continuous_by(&f, &t, &u, how).unwrap());
            }
        }
    }
}

#[test]
fn identity_from_discrete_is_continuous_but_not_open_onto_sierpinski() {
    let id = FiniteMap::identity(2).unwrap();
    let d = Topology::discrete(2).unwrap();
    let s = Topology::sierpinski();
    let p = classify_paranoid(&id, &d, &s).unwrap();
    assert!(p.continuous && p.bijective && !p.homeomorphism);
    assert!(!is_open_map(&id, &d, &s).unwrap());
    assert!(!is_closed_map(&id, &d, &s).unwrap());
    assert!(!classify_paranoid(&id, &s, &d).unwrap().continuous);
}
