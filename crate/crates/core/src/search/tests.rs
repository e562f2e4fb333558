use std::collections::BTreeSet;

use super::*;
use crate::detector::Verdict;
use crate::groups::DEFAULT_MAX_COSETS;

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog(spec, DEFAULT_MAX_COSETS).unwrap())
}

fn orbit(t: &[usize], maps: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    maps.iter().map(|m| t.iter().map(|&x| m[x]).collect()).collect()
}

/// Generating pairs with nontrivial commutator, by a plain double loop.
fn naive_origami_pairs(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            let c = g.commutator(a, b);
            if c != 0 && g.subgroup_generated(&[a, b]) == g.order() {
                out.insert(vec![a, b, g.inverse(c)]);
            }
        }
    }
    out
}

#[test]
fn automorphism_counts() {
    assert_eq!(automorphisms(&group("q8")).len(), 24);
    assert_eq!(automorphisms(&group("cyclic:12")).len(), 4);
    assert_eq!(automorphisms(&group("binary:T")).len(), 24);
    assert_eq!(inner_automorphisms(&group("q8")).len(), 4);
    assert_eq!(inner_automorphisms(&group("binary:T")).len(), 12);
    for spec in ["q8", "dicyclic:3"] {
        let g = group(spec);
        for m in automorphisms(&g) {
            for x in 0..g.order() {
                for y in 0..g.order() {
                    assert_eq!(m[g.mul(x, y)], g.mul(m[x], m[y]));
                }
            }
        }
    }
}

#[test]
fn quaternion_origamis() {
    let g = group("q8");
    let naive = naive_origami_pairs(&g);
    assert_eq!(naive.len(), 24);
    let reps = enumerate_origami(&g, Equivalence::Automorphism).unwrap();
    assert_eq!(reps.len(), 1);
    let inner = enumerate_origami(&g, Equivalence::Inner).unwrap();
    assert_eq!(inner.len(), 6);
}

#[test]
fn enumeration_is_exhaustive() {
    for spec in ["q8", "dicyclic:3", "dicyclic:5", "binary:T", "dicyclic:12"] {
        let g = group(spec);
        let naive = naive_origami_pairs(&g);
        for eq in [Equivalence::Inner, Equivalence::Automorphism] {
            let maps = match eq {
                Equivalence::Inner => inner_automorphisms(&g),
                Equivalence::Automorphism => automorphisms(&g),
            };
            let mut covered = BTreeSet::new();
            for d in enumerate_origami(&g, eq).unwrap() {
                let o = orbit(&d.tuple(), &maps);
                assert_eq!(o.first(), Some(&d.tuple()), "representative is least");
                assert!(o.is_disjoint(&covered));
                covered.extend(o);
            }
            assert_eq!(covered, naive, "{spec} {eq:?}");
        }
    }
}

#[test]
fn abelian_groups_have_no_origamis() {
    for n in [1, 4, 6] {
        assert!(enumerate_origami(&group(&format!("cyclic:{n}")), Equivalence::Automorphism)
            .unwrap()
            .is_empty());
    }
}

#[test]
fn genus_zero_tuples() {
    let g = group("cyclic:4");
    let a = g.generators()[0];
    let maps = automorphisms(&g);
    let reps = enumerate_genus0(&g, 4, Equivalence::Automorphism, true).unwrap();
    assert!(reps.iter().any(|d| orbit(&d.tuple(), &maps).contains(&vec![a; 4])));
    for d in &reps {
        assert!(d.puncture_images().iter().all(|&c| g.element_order(c) == 4));
    }
    let g2 = group("cyclic:2");
    let reps = enumerate_genus0(&g2, 4, Equivalence::Automorphism, false).unwrap();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0].cover_genus(), 1);
    let reps = enumerate_genus0(&group("dicyclic:3"), 3, Equivalence::Inner, false).unwrap();
    assert!(reps.iter().all(|d| d.puncture_images().iter().all(|&c| c != 0)));
    assert!(matches!(
        enumerate_genus0(&g, 2, Equivalence::Inner, false),
        Err(SearchError::NotHyperbolic { .. })
    ));
}

#[test]
fn order_32_origami_is_found() {
    let g = group(&format!("presentation:{}", crate::groups::ORDER_32_PRESENTATION));
    let (b, c) = (g.generators()[1], g.generators()[2]);
    let target = vec![c, b, g.inverse(g.commutator(c, b))];
    let maps = automorphisms(&g);
    let reps = enumerate_origami(&g, Equivalence::Automorphism).unwrap();
    assert!(reps.iter().any(|d| orbit(&d.tuple(), &maps).contains(&target)));
}

#[test]
fn runs() {
    let q8 = run(&SearchTask::new("q8", Base { genus: 1, punctures: 1 })).unwrap();
    assert_eq!(q8.reports.len(), 1);
    assert_eq!(q8.reports[0].verdict, Verdict::Counterexample);
    assert_eq!(q8.certified, 1);
    let c4 = run(&SearchTask::new("cyclic:4", Base { genus: 1, punctures: 1 })).unwrap();
    assert!(c4.reports.is_empty());
    let mut t = SearchTask::new("dicyclic:5", Base { genus: 1, punctures: 1 });
    t.only_qualifying = true;
    let out = run(&t).unwrap();
    assert!(!out.reports.is_empty());
    assert!(out.reports.iter().all(|r| r.verdict == Verdict::Counterexample));
    // sorted: qualifying first, then by dimension
    let dims: Vec<usize> = out.reports.iter().map(|r| r.isotrivial_dimension).collect();
    assert!(dims.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn worker_count_does_not_change_output() {
    let task = SearchTask::new("dicyclic:4", Base { genus: 1, punctures: 1 });
    let mut outputs = Vec::new();
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let out = pool.install(|| run_in_current_pool(&task)).unwrap();
        outputs.push(serde_json::to_string(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}
