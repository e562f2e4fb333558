use crate::groups::FiniteGroup;

/// Largest group whose automorphisms are enumerated.
pub const MAX_AUTOMORPHISM_ORDER: usize = 256;

/// Every automorphism as an element map, the identity first.
///
/// Images of the distinguished generators are chosen by backtracking over
/// elements of matching order; a choice is kept when extending it along
/// the Cayley graph is consistent and bijective.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let m = g.element_order(s);
            (0..g.order()).filter(|&x| g.element_order(x) == m).collect()
        })
        .collect();
    let tree = spanning_tree(g);
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(gens.len());
    backtrack(g, &candidates, &tree, &mut choice, &mut out);
    out.sort();
    out
}

/// BFS order with, for every non-identity element, its parent and the
/// generator slot used to reach it.
fn spanning_tree(g: &FiniteGroup) -> Vec<(usize, usize, usize)> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut order = vec![(0, 0, 0)];
    let mut head = 0;
    while head < order.len() {
        let x = order[head].0;
        head += 1;
        for (k, &s) in g.generators().iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                order.push((y, x, k));
            }
        }
    }
    order
}

fn backtrack(
    g: &FiniteGroup,
    candidates: &[Vec<usize>],
    tree: &[(usize, usize, usize)],
    choice: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if choice.len() == candidates.len() {
        if let Some(map) = extend(g, choice, tree) {
            out.push(map);
        }
        return;
    }
    for &x in &candidates[choice.len()] {
        choice.push(x);
        backtrack(g, candidates, tree, choice, out);
        choice.pop();
    }
}

fn extend(g: &FiniteGroup, images: &[usize], tree: &[(usize, usize, usize)]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    for &(y, parent, k) in &tree[1..] {
        map[y] = g.mul(map[parent], images[k]);
    }
    let mut hit = vec![false; g.order()];
    for &v in &map {
        if std::mem::replace(&mut hit[v], true) {
            return None;
        }
    }
    for x in 0..g.order() {
        for (k, &s) in g.generators().iter().enumerate() {
            if map[g.mul(x, s)] != g.mul(map[x], images[k]) {
                return None;
            }
        }
    }
    Some(map)
}

/// Conjugation maps `x -> y^-1 x y`, deduplicated, the identity first.
pub fn inner_automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut maps: Vec<Vec<usize>> = (0..g.order())
        .map(|y| (0..g.order()).map(|x| g.conjugate(x, y)).collect())
        .collect();
    maps.sort();
    maps.dedup();
    maps
}
