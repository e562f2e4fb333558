use std::sync::Arc;

use num_rational::Rational64;

use super::*;
use crate::groups::{catalog, FiniteGroup, ORDER_32_PRESENTATION, DEFAULT_MAX_COSETS};

fn table(spec: &str) -> CharacterTable {
    let g = catalog(spec, DEFAULT_MAX_COSETS).unwrap();
    character_table(Arc::new(g)).unwrap()
}

fn order32() -> CharacterTable {
    table(&format!("presentation:{ORDER_32_PRESENTATION}"))
}

fn assert_orthogonality(t: &CharacterTable) {
    let n = t.group().order() as i64;
    let r = t.len();
    assert_eq!(r, t.classes().len());
    for i in 0..r {
        for j in 0..r {
            let ip = t.inner_product(t.character(i), t.character(j)).unwrap();
            assert_eq!(ip.as_integer(), Some(i64::from(i == j)), "rows {i},{j}");
        }
    }
    for c in 0..r {
        for d in 0..r {
            let s: Cyclotomic = (0..r)
                .map(|i| t.value(i, c) * &t.value(i, d).conj())
                .sum();
            let want = if c == d { n / t.classes().size(c) as i64 } else { 0 };
            assert_eq!(s.as_integer(), Some(want), "columns {c},{d}");
        }
    }
    let sq: usize = t.degrees().iter().map(|d| d * d).sum();
    assert_eq!(sq, n as usize);
    for i in 0..r {
        for j in 0..r {
            let generic = t.inner_product(t.character(i), t.character(j)).unwrap();
            assert_eq!(t.row_product(i, j), generic, "fast rows {i},{j}");
            let column: Cyclotomic = (0..r).map(|k| t.value(k, i) * &t.value(k, j).conj()).sum();
            assert_eq!(t.column_product(i, j), column, "fast columns {i},{j}");
        }
    }
}

fn involution_count(g: &FiniteGroup) -> i64 {
    (0..g.order()).filter(|&x| g.mul(x, x) == 0).count() as i64
}

#[test]
fn cyclic_table_is_the_dft_matrix() {
    for n in [1usize, 2, 3, 4, 5, 6, 12, 15] {
        let t = table(&format!("cyclic:{n}"));
        let g = t.group().clone();
        let a = g.generators()[0];
        assert_eq!(t.len(), n);
        // every row is k -> zeta_n^{jk} for exactly one j
        let mut seen = vec![false; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| {
                    (0..n).all(|k| {
                        *t.value_at(i, g.pow(a, k as i64))
                            == Cyclotomic::zeta_power(n, (j * k) as i64)
                    })
                })
                .expect("row matches a DFT row");
            assert!(!seen[j]);
            seen[j] = true;
        }
        assert_orthogonality(&t);
    }
}

#[test]
fn quaternion_table() {
    let t = table("q8");
    // brute-force degree oracle: 5 classes, sum of squares 8, trivial present
    let mut candidates = Vec::new();
    for a in 1..=2usize {
        for b in a..=2 {
            for c in b..=2 {
                for d in c..=2 {
                    for e in d..=2 {
                        let v = [a, b, c, d, e];
                        if v.iter().map(|x| x * x).sum::<usize>() == 8 && a == 1 {
                            candidates.push(v.to_vec());
                        }
                    }
                }
            }
        }
    }
    assert_eq!(candidates, vec![vec![1, 1, 1, 1, 2]]);
    assert_eq!(t.degrees(), &candidates[0][..]);
    assert_eq!(t.frobenius_schur(0), 1);
    assert_eq!(t.frobenius_schur(4), -1);
    assert_eq!(&t.fs_indicators()[..4], &[1, 1, 1, 1]);
    assert_orthogonality(&t);
}

#[test]
fn order_32_has_a_unique_symplectic_degree_four_irrep() {
    let t = order32();
    assert_eq!(t.group().order(), 32);
    let fours: Vec<usize> = (0..t.len()).filter(|&i| t.degree(i) == 4).collect();
    assert_eq!(fours.len(), 1);
    assert_eq!(t.frobenius_schur(fours[0]), -1);
    let symplectic: Vec<usize> = (0..t.len()).filter(|&i| t.frobenius_schur(i) == -1).collect();
    assert_eq!(symplectic, fours);
    assert_orthogonality(&t);
}

#[test]
fn indicators_on_cyclic_four() {
    let t = table("cyclic:4");
    let g = t.group().clone();
    let a = g.generators()[0];
    let chi1 = (0..4)
        .find(|&i| *t.value_at(i, a) == Cyclotomic::zeta_power(4, 1))
        .unwrap();
    let chi2 = (0..4)
        .find(|&i| t.value_at(i, a).as_integer() == Some(-1))
        .unwrap();
    let chi3 = t.dual(chi1);
    assert_eq!(t.frobenius_schur(0), 1);
    assert_eq!(t.frobenius_schur(chi1), 0);
    assert_eq!(t.frobenius_schur(chi2), 1);
    assert_eq!(*t.value_at(chi3, a), Cyclotomic::zeta_power(4, 3));
    let mut orbits = t.galois_orbits().to_vec();
    orbits.sort();
    let mut want = vec![vec![0], vec![chi2], {
        let mut v = vec![chi1, chi3];
        v.sort();
        v
    }];
    want.sort();
    assert_eq!(orbits, want);
}

#[test]
fn dicyclic_orbits_preserve_parity() {
    for n in 2..=8usize {
        let t = table(&format!("dicyclic:{n}"));
        let g = t.group().clone();
        let a = g.generators()[0];
        // rho_j(a) has trace z_{2n}^j + z_{2n}^-j; recover j by matching
        let index_of = |i: usize| -> usize {
            (1..n)
                .find(|&j| {
                    *t.value_at(i, a)
                        == &Cyclotomic::zeta_power(2 * n, j as i64)
                            + &Cyclotomic::zeta_power(2 * n, -(j as i64))
                })
                .expect("2-dim irreps are rho_j")
        };
        for orbit in t.galois_orbits() {
            let twos: Vec<usize> = orbit.iter().copied().filter(|&i| t.degree(i) == 2).collect();
            if twos.is_empty() {
                continue;
            }
            let parity = index_of(twos[0]) % 2;
            for &i in &twos {
                assert_eq!(index_of(i) % 2, parity);
                // rho_j(b)^2 = (-1)^j decides symplectic vs orthogonal
                let want = if index_of(i) % 2 == 1 { -1 } else { 1 };
                assert_eq!(t.frobenius_schur(i), want, "dicyclic:{n} rho_{}", index_of(i));
            }
        }
    }
}

#[test]
fn inner_products() {
    let t = table("binary:T");
    let g = t.group().clone();
    let reg = t.regular_character();
    for i in 0..t.len() {
        let d = t.inner_product(&reg, t.character(i)).unwrap();
        assert_eq!(d.as_integer(), Some(t.degree(i) as i64));
    }
    // conjugation action on G: fixed points of g = |C_G(g)|
    let perm: Vec<Cyclotomic> = t
        .classes()
        .representatives()
        .iter()
        .map(|&x| {
            let fixed = (0..g.order()).filter(|&y| g.conjugate(y, x) == y).count();
            Cyclotomic::from_integer(fixed as i64)
        })
        .collect();
    let triv = t.character(0).clone();
    // Burnside oracle: count orbits of the action directly
    let mut seen = vec![false; g.order()];
    let mut orbits = 0;
    for x in 0..g.order() {
        if !seen[x] {
            orbits += 1;
            for y in 0..g.order() {
                seen[g.conjugate(x, y)] = true;
            }
        }
    }
    assert_eq!(t.inner_product(&perm, &triv).unwrap().as_integer(), Some(orbits));
    assert!(matches!(
        t.inner_product(&perm[1..], &triv),
        Err(ChartabError::LengthMismatch { .. })
    ));
    let half = vec![Cyclotomic::from_rational(Rational64::new(1, 2)); t.len()];
    assert!(t.inner_product(&half, &triv).unwrap().as_rational().is_some());
}

#[test]
fn indicator_sum_counts_square_roots_of_one() {
    for spec in ["q8", "dicyclic:5", "binary:T", "binary:O", "cyclic:6"] {
        let t = table(spec);
        let s: i64 = (0..t.len())
            .map(|i| i64::from(t.frobenius_schur(i)) * t.degree(i) as i64)
            .sum();
        assert_eq!(s, involution_count(t.group()), "{spec}");
        for orbit in t.galois_orbits() {
            let fs = t.frobenius_schur(orbit[0]);
            assert!(orbit.iter().all(|&i| t.frobenius_schur(i) == fs));
        }
    }
}

#[test]
fn binary_icosahedral_degrees() {
    let t = table("binary:I");
    let mut d = t.degrees().to_vec();
    d.sort_unstable();
    assert_eq!(d, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_orthogonality(&t);
}

#[test]
fn export_is_stable() {
    let t = table("q8");
    let a = serde_json::to_string(&t.export()).unwrap();
    let b = serde_json::to_string(&table("q8").export()).unwrap();
    assert_eq!(a, b);
    let back: TableExport = serde_json::from_str(&a).unwrap();
    assert_eq!(back, t.export());
}
