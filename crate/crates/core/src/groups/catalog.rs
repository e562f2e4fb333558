//! Named groups: cyclic, dicyclic and the binary polyhedral groups, plus
//! groups given by an inline presentation.

use super::presentation::parse_presentation;
use super::todd_coxeter::todd_coxeter;
use super::{FiniteGroup, GroupError, Permutation};

/// Presentation of the order 32 group whose degree-4 symplectic
/// representation gives an origami with a 4-dimensional isotrivial factor.
pub const ORDER_32_PRESENTATION: &str =
    "<a,b,c | a^4=1, b^4=a^2, c^2=b*a*b^-1=a^-1, a*c=c*a, c*b*c^-1=a^-1*b^3>";

/// Parses a group spec (`cyclic:n`, `dicyclic:n`, `q8`, `binary:T|O|I`,
/// `presentation:<...>`) and builds the group.
pub fn catalog(spec: &str, max_cosets: usize) -> Result<FiniteGroup, GroupError> {
    let spec = spec.trim();
    if let Some(text) = spec.strip_prefix("presentation:") {
        let p = parse_presentation(text)?;
        let mut g = todd_coxeter(&p, max_cosets)?;
        g.set_name(spec);
        return Ok(g);
    }
    let (kind, arg) = match spec.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (spec, None),
    };
    match (kind, arg) {
        ("q8", None) => {
            let mut g = dicyclic(2)?;
            g.set_name("q8");
            Ok(g)
        }
        ("cyclic", Some(a)) => cyclic(parse_param(spec, a)?),
        ("dicyclic", Some(a)) => dicyclic(parse_param(spec, a)?),
        ("binary", Some(k)) => binary_polyhedral(k, max_cosets),
        _ => Err(GroupError::UnknownSpec(spec.to_string())),
    }
}

fn parse_param(spec: &str, a: &str) -> Result<usize, GroupError> {
    a.trim()
        .parse()
        .map_err(|_| GroupError::UnknownSpec(spec.to_string()))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ParameterOutOfRange(format!("cyclic:{n}")));
    }
    let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let gen = Permutation::from_images(images)?;
    FiniteGroup::from_generators(format!("cyclic:{n}"), vec!["a".into()], vec![gen], n)
}

/// The dicyclic group of order `4n`, realized regularly on the symbols
/// `a^k b^e` (index `e*2n + k`) via
/// `a^k * a^l b^f = a^{k+l} b^f`, `a^k b * a^l = a^{k-l} b`,
/// `a^k b * a^l b = a^{k-l+n}`.
pub fn dicyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(GroupError::ParameterOutOfRange(format!("dicyclic:{n}")));
    }
    let m = 2 * n;
    let idx = |k: usize, e: usize| (e * m + k % m) as u32;
    let mul = |(k1, e1): (usize, usize), (k2, e2): (usize, usize)| -> (usize, usize) {
        match (e1, e2) {
            (0, f) => ((k1 + k2) % m, f),
            (1, 0) => ((k1 + m - k2) % m, 1),
            _ => ((k1 + m - k2 + n) % m, 0),
        }
    };
    let right = |g: (usize, usize)| {
        let mut images = vec![0u32; 2 * m];
        for e in 0..2 {
            for k in 0..m {
                let (k2, e2) = mul((k, e), g);
                images[idx(k, e) as usize] = idx(k2, e2);
            }
        }
        Permutation::from_images(images)
    };
    FiniteGroup::from_generators(
        format!("dicyclic:{n}"),
        vec!["a".into(), "b".into()],
        vec![right((1, 0))?, right((0, 1))?],
        4 * n,
    )
}

/// Binary tetrahedral, octahedral or icosahedral group from
/// `<x,y | x^2 = y^3 = (xy)^k, x^4>` with `k = 3, 4, 5`.
pub fn binary_polyhedral(kind: &str, max_cosets: usize) -> Result<FiniteGroup, GroupError> {
    let k = match kind {
        "T" => 3,
        "O" => 4,
        "I" => 5,
        other => return Err(GroupError::UnknownSpec(format!("binary:{other}"))),
    };
    let xy = vec!["x*y"; k].join("*");
    let p = parse_presentation(&format!("<x,y | x^2=y^3={xy}, x^4>"))?;
    let mut g = todd_coxeter(&p, max_cosets)?;
    g.set_name(format!("binary:{kind}"));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::todd_coxeter::DEFAULT_MAX_COSETS;

    fn order(spec: &str) -> usize {
        catalog(spec, DEFAULT_MAX_COSETS).unwrap().order()
    }

    #[test]
    fn catalog_orders() {
        assert_eq!(order("dicyclic:2"), 8);
        assert_eq!(order("q8"), 8);
        assert_eq!(order("dicyclic:7"), 28);
        assert_eq!(order("cyclic:1"), 1);
        assert_eq!(order("binary:T"), 24);
        assert_eq!(order("binary:O"), 48);
        assert_eq!(order("binary:I"), 120);
        assert_eq!(order(&format!("presentation:{ORDER_32_PRESENTATION}")), 32);
    }

    #[test]
    fn catalog_errors() {
        assert!(matches!(
            catalog("dicyclic:1", 10),
            Err(GroupError::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            catalog("cyclic:0", 10),
            Err(GroupError::ParameterOutOfRange(_))
        ));
        assert!(matches!(catalog("sym:3", 10), Err(GroupError::UnknownSpec(_))));
        assert!(matches!(catalog("binary:X", 10), Err(GroupError::UnknownSpec(_))));
        assert!(matches!(catalog("cyclic:x", 10), Err(GroupError::UnknownSpec(_))));
    }

    #[test]
    fn dicyclic_relations() {
        for n in 2..=8 {
            let g = dicyclic(n).unwrap();
            let (a, b) = (g.generators()[0], g.generators()[1]);
            assert_eq!(g.element_order(a), 2 * n);
            assert_eq!(g.mul(b, b), g.pow(a, n as i64));
            assert_eq!(g.conjugate(a, g.inverse(b)), g.inverse(a));
            // [a, b] = a^2, of order n
            let c = g.commutator(a, b);
            assert_eq!(c, g.pow(a, 2));
            assert_eq!(g.element_order(c), n);
        }
    }
}
