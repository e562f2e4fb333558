use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::chartab::{character_table, CharacterTable, Cyclotomic};
use crate::groups::{catalog, FiniteGroup, DEFAULT_MAX_COSETS};

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog(spec, DEFAULT_MAX_COSETS).unwrap())
}

fn table(g: &Arc<FiniteGroup>) -> CharacterTable {
    character_table(g.clone()).unwrap()
}

fn standard_origami(spec: &str) -> (CoverDatum, CharacterTable) {
    let g = group(spec);
    let (a, b) = (g.generators()[0], g.generators()[1]);
    let d = CoverDatum::origami(g.clone(), a, b).unwrap();
    (d, table(&g))
}

fn check_sums(d: &CoverDatum, t: &CharacterTable, p: &IsotypicProfile) {
    let h0: usize = p.irreps.iter().map(|r| r.m_h0 * r.degree).sum();
    let h1: usize = p.irreps.iter().map(|r| r.m_h1 * r.degree).sum();
    assert_eq!(h0, d.cover_genus());
    assert_eq!(h1, 2 * d.cover_genus());
    let triv = &p.irreps[t.trivial()];
    assert_eq!((triv.m_v, triv.m_f1v, triv.m_h0), (0, 0, d.base_genus()));
}

#[test]
fn validation_names_each_invariant() {
    let g = group("q8");
    let (i, j) = (g.generators()[0], g.generators()[1]);
    let minus = g.mul(i, i);
    assert!(CoverDatum::origami(g.clone(), i, j).is_ok());
    let err = CoverDatum::origami(g.clone(), i, minus).unwrap_err();
    assert_eq!(err, CoverError::Disconnected { generated: 4, order: 8 });
    let err = CoverDatum::new(g.clone(), vec![(i, j)], vec![]).unwrap_err();
    assert!(matches!(err, CoverError::NotHyperbolic { genus: 1, punctures: 0 }));
    let err = CoverDatum::new(g.clone(), vec![(i, j)], vec![i]).unwrap_err();
    assert!(err.to_string().contains("surface relation"));
    let err = CoverDatum::new(g, vec![(i, 99)], vec![i]).unwrap_err();
    assert!(matches!(err, CoverError::InvalidElement { index: 99, .. }));
}

#[test]
fn quaternion_origami_profile() {
    let (d, t) = standard_origami("q8");
    assert_eq!(d.cover_genus(), 3);
    let c = d.puncture_images()[0];
    assert_eq!(d.group().element_order(c), 2);
    let p = prym_profile(&d, &t, LocalConvention::Counterclockwise).unwrap();
    check_sums(&d, &t, &p);
    let two = p.irreps.iter().find(|r| r.degree == 2).unwrap();
    assert_eq!((two.m_h0, two.m_v, two.m_f1v, two.fs_indicator), (1, 2, 1, -1));
    for r in p.irreps.iter().filter(|r| r.degree == 1) {
        assert_eq!(r.m_v, 0);
    }
}

#[test]
fn dicyclic_two_dimensional_irreps_appear_once() {
    for n in 2..=9usize {
        let (d, t) = standard_origami(&format!("dicyclic:{n}"));
        assert_eq!(d.cover_genus(), 2 * n - 1);
        let p = prym_profile(&d, &t, LocalConvention::Counterclockwise).unwrap();
        check_sums(&d, &t, &p);
        for r in p.irreps.iter().filter(|r| r.degree == 2) {
            assert_eq!(r.m_h0, 1, "dicyclic:{n}");
        }
    }
}

#[test]
fn cyclic_four_over_four_points() {
    let g = group("cyclic:4");
    let a = g.generators()[0];
    let d = CoverDatum::new(g.clone(), vec![], vec![a; 4]).unwrap();
    assert_eq!(d.cover_genus(), 3);
    let t = table(&g);
    let chi = |k: i64| {
        (0..4)
            .find(|&i| *t.value_at(i, a) == Cyclotomic::zeta_power(4, k))
            .unwrap()
    };
    let p = prym_profile(&d, &t, LocalConvention::Counterclockwise).unwrap();
    check_sums(&d, &t, &p);
    let h0 = |k| p.irreps[chi(k)].m_h0;
    assert_eq!((h0(0), h0(1), h0(2), h0(3)), (0, 2, 1, 0));
    assert_eq!(p.irreps[chi(1)].m_v, 2);
    assert_eq!(p.irreps[chi(3)].m_v, 2);
    // the opposite convention swaps the two conjugate characters
    let q = prym_profile(&d, &t, LocalConvention::Clockwise).unwrap();
    assert_eq!(q.irreps[chi(1)].m_h0, 0);
    assert_eq!(q.irreps[chi(3)].m_h0, 2);
}

#[test]
fn unramified_and_trivial_covers() {
    let g = group("cyclic:1");
    let d = CoverDatum::new(g.clone(), vec![(0, 0), (0, 0)], vec![]).unwrap();
    assert_eq!(d.cover_genus(), 2);
    let t = table(&g);
    assert_eq!(chevalley_weil(&d, &t, 0, LocalConvention::Counterclockwise).unwrap(), 2);

    let g = group("cyclic:3");
    let a = g.generators()[0];
    let d = CoverDatum::new(g.clone(), vec![(a, 0), (0, 0)], vec![]).unwrap();
    assert_eq!(d.cover_genus(), 4);
    let t = table(&g);
    for i in 1..3 {
        assert_eq!(chevalley_weil(&d, &t, i, LocalConvention::Counterclockwise).unwrap(), 1);
    }
}

#[test]
fn mirrored_datum_realizes_the_flipped_convention() {
    for spec in ["q8", "dicyclic:5", "binary:T", "cyclic:5"] {
        let g = group(spec);
        let t = table(&g);
        let d = if g.is_abelian() {
            let a = g.generators()[0];
            let n = g.order() as i64;
            CoverDatum::new(g.clone(), vec![], vec![a, a, g.pow(a, n - 2)]).unwrap()
        } else {
            CoverDatum::origami(g.clone(), g.generators()[0], g.generators()[1]).unwrap()
        };
        let m = d.mirrored();
        m.validate().unwrap();
        let flipped = prym_profile(&d, &t, LocalConvention::Clockwise).unwrap();
        let mirrored = prym_profile(&m, &t, LocalConvention::Counterclockwise).unwrap();
        assert_eq!(flipped.irreps, mirrored.irreps, "{spec}");
        let std = prym_profile(&d, &t, LocalConvention::Counterclockwise).unwrap();
        for r in &std.irreps {
            assert_eq!(r.m_h0, flipped.irreps[r.dual].m_h0);
            assert_eq!(r.m_h1, flipped.irreps[r.irrep].m_h1);
        }
    }
}

#[test]
fn cover_file_round_trip() {
    let text = r#"{"group":"q8","base":{"genus":1,"punctures":1},
                   "handles":[["a","b"]],"punctures_monodromy":[]}"#;
    let f = CoverFile::from_json(text).unwrap();
    let g = f.build_group(DEFAULT_MAX_COSETS).unwrap();
    assert!(matches!(
        f.resolve(g.clone(), false),
        Err(CoverFileError::CountMismatch { .. })
    ));
    let d = f.resolve(g.clone(), true).unwrap();
    assert_eq!(d.cover_genus(), 3);
    let back = CoverFile::from_datum("q8", &d);
    let again = back.resolve(g.clone(), false).unwrap();
    assert_eq!(again.tuple(), d.tuple());

    let bad = r#"{"group":"q8","base":{"genus":1,"punctures":1},
                  "handles":[["a","b"]],"punctures_monodromy":["a"]}"#;
    let err = CoverFile::from_json(bad).unwrap().resolve(g.clone(), true).unwrap_err();
    assert!(err.to_string().contains("surface relation"));
    let undeclared = r#"{"group":"q8","base":{"genus":1,"punctures":1},
                  "handles":[["a","x"]],"punctures_monodromy":[]}"#;
    let err = CoverFile::from_json(undeclared).unwrap().resolve(g, true).unwrap_err();
    assert!(matches!(err, CoverFileError::Word { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn genus_matches_differentials(
        spec in prop::sample::select(vec!["q8", "dicyclic:3", "cyclic:6", "binary:T", "dicyclic:4"]),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 6),
        genus in 0usize..=2,
        punctures in 0usize..=3,
    ) {
        let g = group(spec);
        let n = g.order();
        let el = |k: usize| picks[k].index(n);
        let handles: Vec<(usize, usize)> = (0..genus).map(|j| (el(2 * j), el(2 * j + 1))).collect();
        let mut cs: Vec<usize> = (0..punctures.saturating_sub(1)).map(|k| el(4 + k % 2)).collect();
        let d = if punctures == 0 {
            CoverDatum::new(g.clone(), handles, cs)
        } else {
            cs.truncate(punctures - 1);
            CoverDatum::completing_last(g.clone(), handles, cs)
        };
        let Ok(d) = d else { return Ok(()) };
        let t = table(&g);
        for conv in [LocalConvention::Counterclockwise, LocalConvention::Clockwise] {
            let p = prym_profile(&d, &t, conv).unwrap();
            check_sums(&d, &t, &p);
            for r in &p.irreps {
                prop_assert_eq!(r.m_h1, p.irreps[r.dual].m_h1);
            }
        }
    }
}
