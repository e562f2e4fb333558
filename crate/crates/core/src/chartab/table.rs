use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_rational::Rational64;
use serde::Serialize;

use super::classes::{conjugacy_classes, ClassData};
use super::cyclotomic::{Cyclotomic, IntAccumulator};
use super::modular::{self, Fp};
use super::ChartabError;
use crate::groups::FiniteGroup;

/// Upper bound on the group order accepted by [`character_table`].
pub const MAX_TABLE_ORDER: usize = 10_000;

/// A class function, one value per conjugacy class.
pub type ClassFunction = Vec<Cyclotomic>;

/// Exact character table of a finite group.
///
/// Row 0 is the trivial character; rows are sorted by degree, then by the
/// canonical value vectors.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    classes: ClassData,
    characters: Vec<ClassFunction>,
    degrees: Vec<usize>,
    fs: Vec<i8>,
    orbits: Vec<Vec<usize>>,
    duals: Vec<usize>,
    /// Every value as eigenvalue exponents over the conductor with their
    /// multiplicities, before reduction modulo `Phi_e`.
    terms: Vec<Vec<Vec<(usize, i64)>>>,
}

/// Computes the table by Dixon's method: common eigenvectors of the class
/// multiplication matrices are found over `F_p` with `p = 1 (mod exp G)`,
/// then each character value is lifted to `Q(zeta_exp)` from the
/// eigenvalue multiplicities of the representing matrix.
pub fn character_table(group: Arc<FiniteGroup>) -> Result<CharacterTable, ChartabError> {
    let n = group.order();
    if n > MAX_TABLE_ORDER {
        return Err(ChartabError::TooLarge { order: n });
    }
    let classes = conjugacy_classes(&group);
    let e = classes.exponent();
    let p = modular::choose_prime(e as u64, n as u64);
    let f = Fp { p };
    let z = modular::root_of_unity(f, e as u64);

    let omegas = split_class_algebra(f, &group, &classes)?;
    let mut rows: Vec<LiftedRow> = omegas
        .iter()
        .map(|w| lift_character(f, z, &group, &classes, w))
        .collect::<Result<_, _>>()?;

    let sum_sq: usize = rows.iter().map(|row| row.degree * row.degree).sum();
    if sum_sq != n {
        return Err(ChartabError::Inconsistent(format!(
            "sum of squared degrees {sum_sq} != |G| = {n}"
        )));
    }

    let is_trivial = |row: &ClassFunction| row.iter().all(|v| v.as_integer() == Some(1));
    rows.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| is_trivial(&b.values).cmp(&is_trivial(&a.values)))
            .then_with(|| a.values.cmp(&b.values))
    });
    let degrees: Vec<usize> = rows.iter().map(|row| row.degree).collect();
    // distinct characters have distinct reductions, which index the rows
    let reduced: HashMap<Vec<u64>, usize> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| (row.values_mod.clone(), i))
        .collect();
    let reductions: Vec<Vec<u64>> = rows.iter().map(|row| row.values_mod.clone()).collect();
    let mut characters = Vec::with_capacity(rows.len());
    let mut terms = Vec::with_capacity(rows.len());
    for row in rows {
        characters.push(row.values);
        terms.push(row.terms);
    }

    let mut table = CharacterTable {
        group,
        classes,
        characters,
        degrees,
        fs: Vec::new(),
        orbits: Vec::new(),
        duals: Vec::new(),
        terms,
    };
    table.fs = (0..table.len())
        .map(|i| table.compute_indicator(i))
        .collect::<Result<_, _>>()?;
    let lookup = RowLookup {
        reduced,
        reductions,
    };
    table.duals = (0..table.len())
        .map(|i| table.galois_image(&lookup, i, -1))
        .collect::<Result<_, _>>()?;
    table.orbits = table.compute_orbits(&lookup)?;
    Ok(table)
}

/// Class multiplication matrix `A_j` with `A_j[k][l] = c_{jkl}`, the number
/// of `x` in class `j` with `x^-1 g_l` in class `k`.
fn class_matrix(f: Fp, g: &FiniteGroup, classes: &ClassData, j: usize) -> Vec<Vec<u64>> {
    let r = classes.len();
    let mut m = vec![vec![0u64; r]; r];
    for (l, &z) in classes.representatives().iter().enumerate() {
        for &x in classes.members(j) {
            let k = classes.class_of(g.mul(g.inverse(x), z));
            m[k][l] += 1;
        }
    }
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v %= f.p;
        }
    }
    m
}

/// Splits `F_p^r` into the common one-dimensional eigenspaces of the class
/// matrices and returns the eigenvectors normalized at the identity class.
fn split_class_algebra(
    f: Fp,
    g: &FiniteGroup,
    classes: &ClassData,
) -> Result<Vec<Vec<u64>>, ChartabError> {
    let r = classes.len();
    // each subspace: basis vectors plus pivot coordinates where the basis
    // restricts to the identity
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Subspace> = vec![Subspace::from_vectors(f, identity)];
    for j in 1..r {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let a = class_matrix(f, g, classes, j);
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(s.split(f, &a)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.dim() != 1) || spaces.len() != r {
        return Err(ChartabError::Inconsistent(
            "class matrices did not separate all characters".into(),
        ));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = &s.basis[0];
            if v[0] == 0 {
                return Err(ChartabError::Inconsistent(
                    "eigenvector vanishes at the identity class".into(),
                ));
            }
            let inv = f.inv(v[0]);
            Ok(v.iter().map(|&x| f.mul(x, inv)).collect())
        })
        .collect()
}

struct LiftedRow {
    degree: usize,
    values: ClassFunction,
    terms: Vec<Vec<(usize, i64)>>,
    values_mod: Vec<u64>,
}

/// Rows keyed by their values mod `p`.
struct RowLookup {
    reduced: HashMap<Vec<u64>, usize>,
    reductions: Vec<Vec<u64>>,
}

struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Builds a reduced basis: basis vector `i` is 1 at `pivots[i]` and 0 at
    /// every other pivot.
    fn from_vectors(f: Fp, mut vs: Vec<Vec<u64>>) -> Subspace {
        let mut pivots = Vec::with_capacity(vs.len());
        let mut kept: Vec<Vec<u64>> = Vec::with_capacity(vs.len());
        for mut v in vs.drain(..) {
            for (b, &pc) in kept.iter().zip(&pivots) {
                let c = v[pc];
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            let Some(pc) = v.iter().position(|&x| x != 0) else {
                continue;
            };
            let inv = f.inv(v[pc]);
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            for b in kept.iter_mut() {
                let c = b[pc];
                if c != 0 {
                    for (x, &y) in b.iter_mut().zip(&v) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            kept.push(v);
            pivots.push(pc);
        }
        Subspace {
            basis: kept,
            pivots,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn combine(&self, f: Fp, coords: &[u64]) -> Vec<u64> {
        let n = self.basis[0].len();
        let mut out = vec![0u64; n];
        for (b, &c) in self.basis.iter().zip(coords) {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(b) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }

    /// Eigenspace decomposition of the restriction of `a`.
    fn split(self, f: Fp, a: &[Vec<u64>]) -> Result<Vec<Subspace>, ChartabError> {
        let r = self.dim();
        // restricted[i][j] = coefficient of basis i in a * basis j
        let images: Vec<Vec<u64>> = self.basis.iter().map(|b| modular::mat_vec(f, a, b)).collect();
        let restricted: Vec<Vec<u64>> = (0..r)
            .map(|i| (0..r).map(|j| images[j][self.pivots[i]]).collect())
            .collect();
        let cp = modular::charpoly(f, restricted.clone());
        let roots = modular::roots(f, &cp);
        let total: usize = roots.iter().map(|&(_, m)| m).sum();
        if total != r {
            return Err(ChartabError::Inconsistent(
                "class matrix does not split over the chosen prime".into(),
            ));
        }
        if roots.len() == 1 {
            return Ok(vec![self]);
        }
        let mut krylov: Option<(usize, Vec<Vec<u64>>)> = None;
        let mut out = Vec::with_capacity(roots.len());
        for &(lambda, mult) in &roots {
            let coords: Vec<Vec<u64>> = if mult == 1 {
                vec![simple_eigenvector(f, &restricted, &cp, lambda, &mut krylov)?]
            } else {
                let mut shifted = restricted.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = f.sub(row[i], lambda);
                }
                let ns = modular::nullspace(f, shifted);
                if ns.len() != mult {
                    return Err(ChartabError::Inconsistent(
                        "class matrix is not diagonalizable".into(),
                    ));
                }
                ns
            };
            let vs = coords.iter().map(|c| self.combine(f, c)).collect();
            out.push(Subspace::from_vectors(f, vs));
        }
        Ok(out)
    }
}

/// Eigenvector for a simple eigenvalue: `q(M) v` with
/// `q = charpoly / (x - lambda)`, using Krylov vectors `M^i v`.
fn simple_eigenvector(
    f: Fp,
    m: &[Vec<u64>],
    cp: &[u64],
    lambda: u64,
    krylov: &mut Option<(usize, Vec<Vec<u64>>)>,
) -> Result<Vec<u64>, ChartabError> {
    let r = m.len();
    let q = modular::deflate(f, cp, lambda);
    let start = krylov.as_ref().map_or(0, |(s, _)| *s);
    for seed in start..start + r + 1 {
        if krylov.as_ref().map(|(s, _)| *s) != Some(seed) {
            let mut v: Vec<u64> = if seed == 0 {
                (1..=r as u64).map(|x| x % f.p).collect()
            } else {
                (0..r).map(|i| u64::from(i == seed - 1)).collect()
            };
            let mut ks = Vec::with_capacity(r);
            for _ in 0..r {
                let next = modular::mat_vec(f, m, &v);
                ks.push(v);
                v = next;
            }
            *krylov = Some((seed, ks));
        }
        let ks = &krylov.as_ref().expect("set above").1;
        let mut y = vec![0u64; r];
        for (qi, k) in q.iter().zip(ks) {
            if *qi == 0 {
                continue;
            }
            for (o, &x) in y.iter_mut().zip(k) {
                *o = f.add(*o, f.mul(*qi, x));
            }
        }
        if y.iter().any(|&x| x != 0) {
            return Ok(y);
        }
    }
    Err(ChartabError::Inconsistent(
        "no Krylov vector reaches a simple eigenspace".into(),
    ))
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Recovers the degree and the exact values of one irreducible character
/// from its normalized central character `omega` mod `p`.
fn lift_character(
    f: Fp,
    z: u64,
    g: &FiniteGroup,
    classes: &ClassData,
    omega: &[u64],
) -> Result<LiftedRow, ChartabError> {
    let n = g.order();
    let r = classes.len();
    let e = classes.exponent();
    // |G| / chi(1)^2 = sum_l omega_l omega_{l*} / |K_l|
    let s = (0..r).fold(0u64, |acc, l| {
        let t = f.mul(omega[l], omega[classes.inverse_class(l)]);
        f.add(acc, f.mul(t, f.inv(classes.size(l) as u64)))
    });
    if s == 0 {
        return Err(ChartabError::Inconsistent("degree norm vanished".into()));
    }
    let d2 = f.mul(n as u64 % f.p, f.inv(s));
    let degree = (1..=isqrt(n))
        .find(|&d| (d * d) as u64 % f.p == d2)
        .ok_or_else(|| ChartabError::Inconsistent("no integral degree".into()))?;
    let dmod = degree as u64 % f.p;
    let values_mod: Vec<u64> = (0..r)
        .map(|l| f.mul(f.mul(omega[l], dmod), f.inv(classes.size(l) as u64)))
        .collect();

    let mut values: Vec<Option<Cyclotomic>> = vec![None; r];
    let mut terms: Vec<Vec<(usize, i64)>> = vec![Vec::new(); r];
    for l in 0..r {
        if values[l].is_some() {
            continue;
        }
        let o = classes.element_order(l);
        let step = (e / o) as u64;
        let zo = f.pow(z, step);
        let zo_inv = f.inv(zo);
        // N_u = (1/o) sum_t chi(g^t) zeta_o^{-ut}
        let o_inv = f.inv(o as u64 % f.p);
        let mut mult = vec![0i64; o];
        for (u, slot) in mult.iter_mut().enumerate() {
            let w = f.pow(zo_inv, u as u64);
            let mut acc = 0u64;
            let mut wt = 1u64;
            for t in 0..o {
                acc = f.add(acc, f.mul(values_mod[classes.power_class(l, t as i64)], wt));
                wt = f.mul(wt, w);
            }
            let nu = f.mul(acc, o_inv);
            if nu as usize > degree {
                return Err(ChartabError::Inconsistent(format!(
                    "eigenvalue multiplicity {nu} exceeds degree {degree}"
                )));
            }
            *slot = nu as i64;
        }
        if mult.iter().sum::<i64>() != degree as i64 {
            return Err(ChartabError::Inconsistent(
                "eigenvalue multiplicities do not sum to the degree".into(),
            ));
        }
        // classes of generators of <g_l> carry Galois conjugate values
        for k in 1..o.max(2) {
            if num_integer::gcd(k, o) != 1 {
                continue;
            }
            let lk = classes.power_class(l, k as i64);
            if values[lk].is_some() {
                continue;
            }
            let mut dense = vec![0i64; e];
            for (u, &nu) in mult.iter().enumerate() {
                if nu != 0 {
                    let x = (u * k % o) * step as usize;
                    dense[x] += nu;
                    terms[lk].push((x, nu));
                }
            }
            values[lk] = Some(Cyclotomic::from_dense_int(e, dense, 1));
        }
    }
    let values = values
        .into_iter()
        .map(|v| v.ok_or_else(|| ChartabError::Inconsistent("unvalued class".into())))
        .collect::<Result<_, _>>()?;
    Ok(LiftedRow {
        degree,
        values,
        terms,
        values_mod,
    })
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// Conductor of all stored values (the group exponent).
    pub fn conductor(&self) -> usize {
        self.classes.exponent()
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.characters[i]
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn value(&self, i: usize, class: usize) -> &Cyclotomic {
        &self.characters[i][class]
    }

    /// Value of character `i` at an element.
    pub fn value_at(&self, i: usize, x: usize) -> &Cyclotomic {
        &self.characters[i][self.classes.class_of(x)]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn trivial(&self) -> usize {
        0
    }

    /// Frobenius-Schur indicator of irrep `i`: `+1`, `0` or `-1`.
    pub fn frobenius_schur(&self, i: usize) -> i8 {
        self.fs[i]
    }

    pub fn fs_indicators(&self) -> &[i8] {
        &self.fs
    }

    /// Index of the complex conjugate character.
    pub fn dual(&self, i: usize) -> usize {
        self.duals[i]
    }

    /// Orbits of the Galois action `chi -> chi o (g -> g^k)`, each sorted,
    /// ordered by least member.
    pub fn galois_orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&i))
            .expect("every irrep lies in an orbit")
    }

    fn compute_indicator(&self, i: usize) -> Result<i8, ChartabError> {
        let one = Cyclotomic::one();
        let mut acc = IntAccumulator::new(self.conductor());
        for c in 0..self.classes.len() {
            let sq = self.classes.power_class(c, 2);
            acc.add_product(&self.characters[i][sq], &one, false, self.classes.size(c) as i64);
        }
        let v = acc.finish(self.group.order() as i64);
        match v.as_integer() {
            Some(x @ -1..=1) => Ok(x as i8),
            _ => Err(ChartabError::Inconsistent(format!(
                "Frobenius-Schur indicator of irrep {i} evaluated to {v}"
            ))),
        }
    }

    /// Index of the character `chi_i o (g -> g^k)`.
    fn galois_image(&self, lookup: &RowLookup, i: usize, k: i64) -> Result<usize, ChartabError> {
        let key: Vec<u64> = (0..self.classes.len())
            .map(|c| lookup.reductions[i][self.classes.power_class(c, k)])
            .collect();
        lookup.reduced.get(&key).copied().ok_or_else(|| {
            ChartabError::Inconsistent(format!("Galois image of irrep {i} under k = {k} missing"))
        })
    }

    fn compute_orbits(&self, lookup: &RowLookup) -> Result<Vec<Vec<usize>>, ChartabError> {
        let e = self.conductor() as i64;
        let units: Vec<i64> = (1..e.max(2))
            .filter(|&k| num_integer::gcd(k, e) == 1)
            .collect();
        let mut orbit_of = vec![usize::MAX; self.len()];
        let mut orbits = Vec::new();
        for i in 0..self.len() {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for &k in &units {
                let j = self.galois_image(lookup, i, k)?;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = orbits.len();
                    members.push(j);
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        Ok(orbits)
    }

    /// `sum_i chi_i(C) conj(chi_i(D))`, which is `|C_G(x)|` when `C = D`
    /// and zero otherwise.
    pub fn column_product(&self, c: usize, d: usize) -> Cyclotomic {
        let mut acc = IntAccumulator::new(self.conductor());
        for row in &self.terms {
            acc.add_conj_product_terms(&row[c], &row[d], 1);
        }
        acc.finish(1)
    }

    /// `<chi_i, chi_j>`, which is `1` when `i = j` and zero otherwise.
    pub fn row_product(&self, i: usize, j: usize) -> Cyclotomic {
        let mut acc = IntAccumulator::new(self.conductor());
        for (c, (a, b)) in self.terms[i].iter().zip(&self.terms[j]).enumerate() {
            acc.add_conj_product_terms(a, b, self.classes.size(c) as i64);
        }
        acc.finish(self.group.order() as i64)
    }

    /// `(1/|G|) sum_C |C| phi(C) conj(psi(C))`.
    pub fn inner_product(
        &self,
        phi: &[Cyclotomic],
        psi: &[Cyclotomic],
    ) -> Result<Cyclotomic, ChartabError> {
        let r = self.classes.len();
        if phi.len() != r || psi.len() != r {
            return Err(ChartabError::LengthMismatch {
                expected: r,
                got: if phi.len() != r { phi.len() } else { psi.len() },
            });
        }
        let n = self.group.order() as i64;
        let integral = phi.iter().chain(psi).all(Cyclotomic::has_integer_coefficients);
        let divides = |v: &Cyclotomic| self.conductor() % v.conductor() == 0;
        if integral && phi.iter().chain(psi).all(divides) {
            let mut acc = IntAccumulator::new(self.conductor());
            for c in 0..r {
                acc.add_product(&phi[c], &psi[c], true, self.classes.size(c) as i64);
            }
            return Ok(acc.finish(n));
        }
        let sum: Cyclotomic = (0..r)
            .map(|c| (&phi[c] * &psi[c].conj()).scale(Rational64::from_integer(self.classes.size(c) as i64)))
            .sum();
        Ok(sum.scale(Rational64::new(1, n)))
    }

    /// Character of the regular representation.
    pub fn regular_character(&self) -> ClassFunction {
        (0..self.classes.len())
            .map(|c| Cyclotomic::from_integer(if c == 0 { self.group.order() as i64 } else { 0 }))
            .collect()
    }

    /// Multiplicities of the irreducibles in a class function, provided
    /// they are all integers.
    pub fn decompose(&self, phi: &[Cyclotomic]) -> Result<Vec<i64>, ChartabError> {
        (0..self.len())
            .map(|i| {
                let m = self.inner_product(phi, &self.characters[i])?;
                m.as_integer().ok_or_else(|| {
                    ChartabError::Inconsistent(format!("non-integral multiplicity {m} of irrep {i}"))
                })
            })
            .collect()
    }

    pub fn export(&self) -> TableExport {
        TableExport {
            group: self.group.name().to_string(),
            order: self.group.order(),
            conductor: self.conductor(),
            class_sizes: self.classes.sizes(),
            representatives: self.classes.representatives().to_vec(),
            element_orders: (0..self.classes.len())
                .map(|c| self.classes.element_order(c))
                .collect(),
            characters: self
                .characters
                .iter()
                .map(|row| row.iter().map(export_value).collect())
                .collect(),
            degrees: self.degrees.clone(),
            fs_indicators: self.fs.clone(),
            galois_orbits: self.orbits.clone(),
        }
    }
}

fn export_value(v: &Cyclotomic) -> BTreeMap<usize, String> {
    v.terms().map(|(k, c)| (k, c.to_string())).collect()
}

/// JSON form of a character table. Each value is a map from exponent of
/// `zeta_conductor` to a rational coefficient written `p` or `p/q`.
#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct TableExport {
    pub group: String,
    pub order: usize,
    pub conductor: usize,
    pub class_sizes: Vec<usize>,
    pub representatives: Vec<usize>,
    pub element_orders: Vec<usize>,
    pub characters: Vec<Vec<BTreeMap<usize, String>>>,
    pub degrees: Vec<usize>,
    pub fs_indicators: Vec<i8>,
    pub galois_orbits: Vec<Vec<usize>>,
}
