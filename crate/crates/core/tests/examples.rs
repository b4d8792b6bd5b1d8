mod common;

use std::collections::BTreeSet;

use twocover::analysis::{conjecture_check, Analyzer, OmegaSet};
use twocover::geometry::{catalog, decone, face_poset, intersection_data};
use twocover::homology::homology;
use twocover::salvetti::decorate;
use twocover::{OmegaClass, Rational, RationalArrangement};

fn incidence(arr: &twocover::FieldArrangement) -> (BTreeSet<Vec<usize>>, BTreeSet<Vec<usize>>) {
    let d = intersection_data(arr);
    let points = d.points.iter().map(|p| p.lines.clone()).collect();
    let parallel = d.parallel_classes.iter().cloned().collect();
    (points, parallel)
}

#[test]
fn cone_of_decid_decones_back() {
    let cone = catalog::central_catalog("cone(decID)").unwrap();
    let back = decone(&cone, 16).unwrap();
    let original = catalog::decid();
    assert_eq!(incidence(&back), incidence(&original));
    let (p, q) = (face_poset(&back).unwrap(), face_poset(&original).unwrap());
    assert_eq!(
        (p.chambers.len(), p.edges.len(), p.vertices.len()),
        (q.chambers.len(), q.edges.len(), q.vertices.len())
    );
}

#[test]
fn decid_counts_are_consistent() {
    let d = intersection_data(&catalog::decid());
    let pairs: usize = d.points.iter().map(|p| p.lines.len() * (p.lines.len() - 1) / 2).sum::<usize>()
        + d.parallel_classes.iter().map(|c| c.len() * (c.len() - 1) / 2).sum::<usize>();
    assert_eq!(pairs, 15 * 14 / 2);
    let a = Analyzer::new("decID", &catalog::decid()).unwrap();
    let s = a.summary();
    assert_eq!(s.chambers, 1 + 15 + a.b2());
    let on_lines: usize = d.points_on_lines().iter().map(|v| v.len() + 1).sum();
    assert_eq!(s.edges, on_lines);
    let [c0, c1, c2] = s.cells;
    assert_eq!(c0 as i64 - c1 as i64 + c2 as i64, 1 - 15 + a.b2() as i64);
}

#[test]
fn single_line_local_system_and_cover() {
    let one = Rational::from_integer(1.into());
    let zero = Rational::from_integer(0.into());
    let arr = RationalArrangement::new(vec![(one, zero.clone(), zero)]).unwrap();
    let a = Analyzer::new("line", &arr).unwrap();
    let w = OmegaClass::all(1).unwrap();
    let dc = decorate(a.complex(), &w).unwrap();

    let local = homology(&dc.specialize(-1)).unwrap();
    assert_eq!(local.group(0).canonical_string(), "Z_2");
    assert_eq!(local.group(1).canonical_string(), "0");

    let cover = dc.double_cover();
    assert_eq!(cover.ranks, [4, 4, 0]);
    let h = homology(&cover).unwrap();
    assert_eq!((h.group(0).canonical_string(), h.group(1).canonical_string()), ("Z".into(), "Z".into()));
}

#[test]
fn generic_three_lines_have_no_torsion_anywhere() {
    let a = Analyzer::new("generic(3)", &catalog::generic(3)).unwrap();
    let report = conjecture_check(&a, &OmegaSet::All).unwrap();
    assert_eq!(report.rows.len(), 7);
    assert!(report.rows.iter().all(|r| !r.two_torsion && !r.z4));
    assert!(report.is_consistent());
    let r = a.analyze(&OmegaClass::all(3).unwrap()).unwrap();
    assert_eq!(r.alpha(1), 0);
}

#[test]
fn decid_resonant_pair() {
    let a = Analyzer::new("decID", &catalog::decid()).unwrap();
    let all = OmegaClass::all(15).unwrap();
    let eta = OmegaClass::from_indices(15, &[11, 12, 13, 14, 15]).unwrap();
    let product = a.os_algebra().wedge(all.bits(), eta.bits());
    assert!(product.iter().all(|&b| !b));
    let r = a.analyze(&eta).unwrap();
    assert_eq!((r.alpha(1), r.rho(1), r.tau(1)), (6, 6, 0));
}

/// Connected components of the 1-skeleton by union-find on the supports of
/// the columns of `d1`.
fn components(ranks: [usize; 3], d1: &twocover::arith::SparseMatrix<i64>) -> usize {
    let mut parent: Vec<usize> = (0..ranks[0]).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut ends = vec![Vec::new(); ranks[1]];
    for (i, j, _) in d1.iter() {
        ends[j].push(i);
    }
    for e in ends {
        for w in e.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    (0..ranks[0]).filter(|&v| find(&mut parent, v) == v).count()
}

#[test]
fn zeroth_homology_counts_components() {
    let mut arrangements: Vec<(String, Analyzer)> = common::random_arrangements(20, 99)
        .iter()
        .enumerate()
        .map(|(i, arr)| (format!("random#{i}"), Analyzer::new("random", arr).unwrap()))
        .collect();
    arrangements.push(("DP".into(), Analyzer::new("DP", &catalog::double_star()).unwrap()));
    for (name, a) in &arrangements {
        let plain = a.complex().untwisted();
        assert_eq!(a.untwisted().betti(0), components(plain.ranks, &plain.d1), "{name}");
        let w = OmegaClass::all(a.num_lines()).unwrap();
        let cover = decorate(a.complex(), &w).unwrap().double_cover();
        assert_eq!(homology(&cover).unwrap().betti(0), components(cover.ranks, &cover.d1), "{name}");
    }
}
