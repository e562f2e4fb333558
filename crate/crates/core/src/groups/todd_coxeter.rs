//! HLT coset enumeration over the trivial subgroup.
//!
//! The coset table has two columns per generator (the generator and its
//! inverse). Relators are scanned from every live coset, defining new
//! cosets where a scan stalls; coincidences are merged with a union-find
//! forwarding array. On completion the table is compacted and renumbered
//! in breadth-first order from coset 0, so the result does not depend on
//! the order in which cosets were discovered.

use std::collections::VecDeque;

use super::presentation::Presentation;
use super::{FiniteGroup, GroupError, Permutation};

pub const DEFAULT_MAX_COSETS: usize = 10_000;

const NONE: u32 = u32::MAX;

struct CosetTable {
    cols: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: usize,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl CosetTable {
    fn new(cols: usize, max_cosets: usize) -> Self {
        CosetTable {
            cols,
            table: vec![NONE; cols],
            forward: vec![0],
            live: 1,
            max_cosets,
            queue: Vec::new(),
        }
    }

    fn allocated(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, GroupError> {
        if self.live >= self.max_cosets {
            return Err(GroupError::CosetLimit {
                limit: self.max_cosets,
            });
        }
        let d = self.forward.len() as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut c = c;
        while self.forward[c as usize] != r {
            let next = self.forward[c as usize];
            self.forward[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.forward[hi as usize] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != NONE {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, start: u32, word: &[usize]) -> Result<(), GroupError> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = start;
        let mut b = start;
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j && self.get(f, word[i as usize]) != NONE {
                f = self.get(f, word[i as usize]);
                i += 1;
            }
            if i > j {
                if f != start {
                    self.coincidence(f, start);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j as usize] ^ 1) != NONE {
                b = self.get(b, word[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction
                let x = word[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

/// Column sequences for the relators, with generator `g` at column `2g`
/// and its inverse at `2g + 1`.
fn relator_columns(p: &Presentation) -> Vec<Vec<usize>> {
    p.relators()
        .iter()
        .map(|w| {
            w.unit_letters()
                .into_iter()
                .map(|(g, s)| 2 * g + usize::from(s < 0))
                .collect::<Vec<_>>()
        })
        .filter(|r| !r.is_empty())
        .collect()
}

/// Enumerates the cosets of the trivial subgroup and returns the group as
/// its regular permutation representation.
///
/// Element `i` is the coset numbered `i` after breadth-first
/// standardization; generator `k` of the result is the image of the
/// presentation's `k`-th generator.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup, GroupError> {
    if p.generators.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    let ngens = p.generators.len();
    let cols = 2 * ngens;
    let relators = relator_columns(p);
    let mut t = CosetTable::new(cols, max_cosets.max(1));

    let mut c: u32 = 0;
    while (c as usize) < t.allocated() {
        if t.is_live(c) {
            for r in &relators {
                t.scan_and_fill(c, r)?;
                if !t.is_live(c) {
                    break;
                }
            }
            if t.is_live(c) {
                for x in 0..cols {
                    if t.get(c, x) == NONE {
                        t.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }

    // breadth-first renumbering of the live cosets
    let n_old = t.allocated();
    let mut new_of = vec![NONE; n_old];
    let mut order = Vec::with_capacity(t.live);
    new_of[0] = 0;
    order.push(0u32);
    let mut queue = VecDeque::from([0u32]);
    while let Some(c) = queue.pop_front() {
        for x in 0..cols {
            let d = t.rep(t.get(c, x));
            if new_of[d as usize] == NONE {
                new_of[d as usize] = order.len() as u32;
                order.push(d);
                queue.push_back(d);
            }
        }
    }
    let n = order.len();
    let mut gen_images: Vec<Vec<u32>> = vec![vec![0; n]; ngens];
    for (new, &old) in order.iter().enumerate() {
        for (g, images) in gen_images.iter_mut().enumerate() {
            let d = t.rep(t.get(old, 2 * g));
            images[new] = new_of[d as usize];
        }
    }
    let gen_perms: Vec<Permutation> = gen_images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<_, _>>()
        .map_err(|_| GroupError::EnumerationFailed)?;

    // the element for coset i is right multiplication by its
    // representative word; build them along a spanning tree
    let mut elements: Vec<Option<Permutation>> = vec![None; n];
    elements[0] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([0usize]);
    let inv_perms: Vec<Permutation> = gen_perms.iter().map(|p| p.inverse()).collect();
    while let Some(i) = queue.pop_front() {
        let base = elements[i].clone().expect("visited");
        for g in 0..ngens {
            for perm in [&gen_perms[g], &inv_perms[g]] {
                let j = perm.apply(i);
                if elements[j].is_none() {
                    elements[j] = Some(base.then(perm));
                    queue.push_back(j);
                }
            }
        }
    }
    let elements: Vec<Permutation> = elements
        .into_iter()
        .map(|e| e.ok_or(GroupError::EnumerationFailed))
        .collect::<Result<_, _>>()?;
    for (i, e) in elements.iter().enumerate() {
        if e.apply(0) != i {
            return Err(GroupError::EnumerationFailed);
        }
    }
    let generators = gen_perms.iter().map(|p| p.apply(0)).collect();
    let group = FiniteGroup::from_element_list(
        p.to_string(),
        elements,
        generators,
        p.generators.clone(),
    );
    verify_relators(&group, p)?;
    Ok(group)
}

fn verify_relators(g: &FiniteGroup, p: &Presentation) -> Result<(), GroupError> {
    for r in p.relators() {
        if g.evaluate(&r) != 0 {
            return Err(GroupError::EnumerationFailed);
        }
    }
    Ok(())
}
