//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use pwscope::chartab::{character_table, CharacterTable, Cyclotomic};
use pwscope::covers::{prym_profile, Base, CoverDatum, LocalConvention};
use pwscope::detector::{analyze, same_findings, PWReport, Verdict};
use pwscope::groups::{catalog, FiniteGroup, DEFAULT_MAX_COSETS, ORDER_32_PRESENTATION};
use pwscope::oracle::{certify, cross_check_traces, EXPLICIT_TRACE_LIMIT};
use pwscope::search::{self, Equivalence, SearchTask, TupleFilter};

const CCW: LocalConvention = LocalConvention::Counterclockwise;
const SEED: u64 = 0x5eed_2024;

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog(spec, DEFAULT_MAX_COSETS).unwrap_or_else(|e| panic!("{spec}: {e}")))
}

fn table(g: &Arc<FiniteGroup>) -> CharacterTable {
    character_table(g.clone()).unwrap()
}

fn order32() -> Arc<FiniteGroup> {
    group(&format!("presentation:{ORDER_32_PRESENTATION}"))
}

fn origami(g: &Arc<FiniteGroup>, x: usize, y: usize) -> CoverDatum {
    CoverDatum::origami(g.clone(), x, y).unwrap()
}

fn standard_origami(spec: &str) -> CoverDatum {
    let g = group(spec);
    let (a, b) = (g.generators()[0], g.generators()[1]);
    origami(&g, a, b)
}

fn order32_origami() -> CoverDatum {
    let g = order32();
    let (b, c) = (g.generators()[1], g.generators()[2]);
    origami(&g, c, b)
}

fn quartic_family() -> CoverDatum {
    let g = group("cyclic:4");
    let a = g.generators()[0];
    CoverDatum::new(g, vec![], vec![a; 4]).unwrap()
}

fn report(d: &CoverDatum, conv: LocalConvention) -> PWReport {
    analyze(d, &table(d.group()), conv).unwrap()
}

/// One qualifying (1,1) cover per binary polyhedral group.
fn binary_polyhedral_covers() -> Vec<CoverDatum> {
    ["binary:T", "binary:O", "binary:I"]
        .iter()
        .map(|spec| {
            let g = group(spec);
            let t = table(&g);
            search::enumerate_origami(&g, Equivalence::Automorphism)
                .unwrap()
                .into_iter()
                .find(|d| analyze(d, &t, CCW).unwrap().verdict == Verdict::Counterexample)
                .unwrap_or_else(|| panic!("{spec}: no qualifying origami"))
        })
        .collect()
}

/// Covers named in criteria 1-5.
fn named_covers() -> Vec<CoverDatum> {
    let mut v = vec![standard_origami("q8")];
    v.extend((2..=12).map(|n| standard_origami(&format!("dicyclic:{n}"))));
    v.extend(binary_polyhedral_covers());
    v.push(order32_origami());
    v.push(quartic_family());
    v
}

/// At least 30 seeded random valid covers with |H| <= 48.
fn random_covers() -> Vec<CoverDatum> {
    let plan: &[(&str, usize, usize, usize)] = &[
        ("q8", 1, 1, 3),
        ("q8", 0, 4, 3),
        ("dicyclic:3", 1, 1, 3),
        ("dicyclic:3", 0, 3, 3),
        ("cyclic:6", 0, 4, 3),
        ("cyclic:5", 1, 2, 2),
        ("cyclic:5", 0, 3, 2),
        ("binary:T", 1, 1, 3),
        ("binary:T", 0, 3, 3),
        ("binary:O", 0, 3, 2),
        ("dicyclic:6", 1, 2, 2),
        ("dicyclic:12", 1, 1, 2),
        ("cyclic:12", 1, 2, 2),
        ("q8", 2, 0, 2),
        ("dicyclic:4", 2, 1, 2),
    ];
    let mut out = Vec::new();
    for (k, &(spec, genus, punctures, count)) in plan.iter().enumerate() {
        let g = group(spec);
        assert!(g.order() <= 48);
        let base = Base { genus, punctures };
        let got = search::random_covers(&g, base, count, SEED + k as u64, 10_000);
        assert_eq!(got.len(), count, "{spec} over {base:?}");
        out.extend(got);
    }
    let g = order32();
    out.extend(search::random_covers(&g, Base { genus: 1, punctures: 1 }, 3, SEED, 10_000));
    out
}

fn criterion_1() -> String {
    let d = standard_origami("q8");
    let r = report(&d, CCW);
    assert_eq!(r.cover_genus, 3);
    let with_v: Vec<_> = r
        .orbits
        .iter()
        .filter(|o| o.m_v.iter().any(|&m| m > 0))
        .collect();
    assert_eq!(with_v.len(), 1, "V lives in one Galois orbit");
    let o = with_v[0];
    let dim_v: usize = o.m_v.iter().zip(&o.degrees).map(|(m, d)| m * d).sum();
    assert_eq!(dim_v, 4);
    assert_eq!(o.fs_indicators, vec![-1]);
    assert!(o.criterion2);
    assert_eq!(r.isotrivial_dimension, 2);
    format!("g'=3, dim V=4 in one orbit, FS=-1, criterion 2, dimension {}", r.isotrivial_dimension)
}

fn criterion_2() -> String {
    for n in 2..=12usize {
        let r = report(&standard_origami(&format!("dicyclic:{n}")), CCW);
        assert_eq!(r.cover_genus, 2 * n - 1, "dicyclic:{n}");
        for o in r.orbits.iter().filter(|o| o.degrees[0] == 2) {
            assert!(o.m_h0.iter().all(|&m| m == 1), "dicyclic:{n} m_h0");
        }
        let want = if n % 2 == 0 { n } else { n - 1 };
        assert_eq!(r.isotrivial_dimension, want, "dicyclic:{n}");
    }
    "n=2..12: g'=2n-1, m_h0=1 on 2-dim irreps, dimension n / n-1".into()
}

fn criterion_3() -> String {
    let mut parts = Vec::new();
    for spec in ["binary:T", "binary:O", "binary:I"] {
        let mut task = SearchTask::new(spec, Base { genus: 1, punctures: 1 });
        task.only_qualifying = true;
        let out = search::run(&task).unwrap();
        assert!(!out.reports.is_empty(), "{spec}");
        parts.push(format!("{spec}: {}/{}", out.qualifying, out.enumerated));
    }
    format!("qualifying origami classes {}", parts.join(", "))
}

fn criterion_4() -> String {
    let g = order32();
    assert_eq!(g.order(), 32);
    let derived = g.derived_subgroup();
    assert_eq!(derived.len(), 4);
    assert!(derived.iter().all(|&x| g.element_order(x) <= 2));
    let t = table(&g);
    let fours: Vec<usize> = (0..t.len()).filter(|&i| t.degree(i) == 4).collect();
    assert_eq!(fours.len(), 1);
    let four = fours[0];
    assert_eq!(t.frobenius_schur(four), -1);
    let symplectic = (0..t.len()).filter(|&i| t.frobenius_schur(i) == -1).count();
    assert_eq!(symplectic, 1);
    let (b, c) = (g.generators()[1], g.generators()[2]);
    let comm = g.commutator(c, b);
    assert_eq!(g.element_order(comm), 2);
    assert_eq!(*t.value_at(four, comm), Cyclotomic::zero());
    let d = order32_origami();
    let r = analyze(&d, &t, CCW).unwrap();
    let o = r.orbits.iter().find(|o| o.members == vec![four]).unwrap();
    assert_eq!(o.m_h0, vec![1]);
    assert!(o.criterion2);
    assert_eq!(r.cover_genus, 9);
    assert_eq!(r.isotrivial_dimension, 4);
    "order 32, derived (Z/2)^2, unique symplectic degree 4, tr=0 on [c,b], g'=9, dimension 4".into()
}

fn criterion_5() -> String {
    let d = quartic_family();
    let r = report(&d, CCW);
    assert_eq!(r.cover_genus, 3);
    let c1: Vec<_> = r.orbits.iter().filter(|o| o.criterion1).collect();
    assert_eq!(c1.len(), 1);
    assert_eq!(c1[0].members.len(), 2);
    assert_eq!(c1[0].m_v, vec![2, 2]);
    let mut f1 = c1[0].m_f1v.clone();
    f1.sort_unstable();
    assert_eq!(f1, vec![0, 2]);
    assert!(r.orbits.iter().all(|o| !o.criterion2));
    assert_eq!(r.isotrivial_dimension, 2);
    "g'=3, criterion 1 on the conjugate pair, criterion 2 nowhere, dimension 2".into()
}

fn criterion_6() -> String {
    let named = named_covers();
    let random = random_covers();
    assert!(random.len() >= 30);
    let mut explicit = 0;
    for d in named.iter().chain(&random) {
        let t = table(d.group());
        let p = prym_profile(d, &t, CCW).unwrap();
        let rec = certify(d, &t, &p).unwrap_or_else(|e| panic!("{:?}: {e}", d.tuple()));
        assert_eq!(rec.h1_rank, 2 * d.cover_genus());
        if d.group().order() <= EXPLICIT_TRACE_LIMIT {
            cross_check_traces(d, &t).unwrap();
            explicit += 1;
        }
    }
    format!(
        "{} named covers + {} random covers certified ({explicit} also by explicit H_1 basis)",
        named.len(),
        random.len()
    )
}

fn assert_orthogonal(spec: &str, t: &CharacterTable) {
    let n = t.group().order();
    let r = t.len();
    assert_eq!(r, t.classes().len(), "{spec}");
    for i in 0..r {
        for j in i..r {
            let ip = t.row_product(i, j);
            assert_eq!(ip.as_integer(), Some(i64::from(i == j)), "{spec} rows {i},{j}");
        }
    }
    for c in 0..r {
        for d in c..r {
            let want = if c == d { (n / t.classes().size(c)) as i64 } else { 0 };
            assert_eq!(t.column_product(c, d).as_integer(), Some(want), "{spec} columns {c},{d}");
        }
    }
    let sq: usize = t.degrees().iter().map(|d| d * d).sum();
    assert_eq!(sq, n, "{spec}");
    let g = t.group();
    let involutions = (0..n).filter(|&x| g.mul(x, x) == 0).count() as i64;
    let fs: i64 = (0..r).map(|i| i64::from(t.frobenius_schur(i)) * t.degree(i) as i64).sum();
    assert_eq!(fs, involutions, "{spec}");
    for orbit in t.galois_orbits() {
        let f = t.frobenius_schur(orbit[0]);
        assert!(orbit.iter().all(|&i| t.frobenius_schur(i) == f), "{spec}");
    }
}

fn criterion_7() -> String {
    let mut specs: Vec<String> = (1..=256).map(|n| format!("cyclic:{n}")).collect();
    specs.extend((2..=64).map(|n| format!("dicyclic:{n}")));
    specs.extend(["q8", "binary:T", "binary:O", "binary:I"].map(String::from));
    use rayon::prelude::*;
    specs.par_iter().for_each(|spec| {
        let g = group(spec);
        assert!(g.order() <= 256);
        assert_orthogonal(spec, &table(&g));
    });
    format!("{} catalog groups with |G| <= 256", specs.len())
}

fn no_finding_above_genus_one(d: &CoverDatum, r: &PWReport) {
    if d.base_genus() >= 2 {
        assert!(r.qualifying_orbits.is_empty(), "{:?}", d.tuple());
    }
    for &o in &r.qualifying_orbits {
        if d.base_genus() >= 2 {
            assert!(r.orbits[o].degrees.iter().all(|&deg| deg > 1));
        }
    }
}

fn criterion_8() -> String {
    let mut checked = 0;
    for d in random_covers() {
        no_finding_above_genus_one(&d, &report(&d, CCW));
        checked += 1;
    }
    let mut sweep = 0;
    for (spec, base) in [
        ("q8", Base { genus: 2, punctures: 0 }),
        ("q8", Base { genus: 2, punctures: 1 }),
        ("cyclic:3", Base { genus: 2, punctures: 0 }),
        ("cyclic:3", Base { genus: 2, punctures: 2 }),
        ("dicyclic:3", Base { genus: 2, punctures: 0 }),
        ("dicyclic:3", Base { genus: 2, punctures: 1 }),
        ("binary:T", Base { genus: 2, punctures: 0 }),
    ] {
        let g = group(spec);
        let t = table(&g);
        let covers = search::enumerate(
            &g,
            base,
            Equivalence::Automorphism,
            TupleFilter::default(),
            search::DEFAULT_TUPLE_LIMIT,
        )
        .unwrap();
        assert!(!covers.is_empty(), "{spec} {base:?}");
        for d in &covers {
            let r = analyze(d, &t, CCW).unwrap();
            assert_eq!(r.verdict, Verdict::NoFinding);
            no_finding_above_genus_one(d, &r);
        }
        sweep += covers.len();
    }
    format!("{checked} random covers and {sweep} swept covers over genus-2 bases: no qualifying orbit")
}

fn criterion_9() -> String {
    let mut n = 0;
    for d in named_covers() {
        let t = table(d.group());
        let a = analyze(&d, &t, CCW).unwrap();
        let b = analyze(&d, &t, CCW.flipped()).unwrap();
        assert!(same_findings(&a, &b), "{:?}", d.tuple());
        assert_eq!(a.isotrivial_dimension, b.isotrivial_dimension);
        n += 1;
    }
    format!("{n} covers: verdicts and dimensions unchanged under the flipped convention")
}

fn main() {
    let criteria: [(&str, fn() -> String); 9] = [
        ("quaternion origami", criterion_1),
        ("dicyclic sweep", criterion_2),
        ("binary polyhedral search", criterion_3),
        ("order-32 group", criterion_4),
        ("cyclic genus-0 family", criterion_5),
        ("homology oracle equivalence", criterion_6),
        ("character table properties", criterion_7),
        ("guard soundness", criterion_8),
        ("duality-convention invariance", criterion_9),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|s| name.contains(s.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1}s)", k + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {}: FAIL  {name}: {msg} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
