//! Todd-Coxeter coset enumeration on a few presentations.
//!
//! cargo run --example coset_enumeration

use pwscope::groups::{parse_presentation, todd_coxeter, DEFAULT_MAX_COSETS};

fn main() {
    let presentations = [
        "<a,b | a^4, b^2=a^2, b^-1*a*b=a^-1>",
        "<x,y | x^2=y^3=x*y*x*y*x*y, x^4>",
        "<x,y | x^2=y^3=x*y*x*y*x*y*x*y*x*y, x^4>",
        "<a,b | a^2, b^3, a*b*a*b*a*b*a*b*a*b*a*b*a*b>",
        "<a,b | a^2, b^2>",
    ];
    for text in presentations {
        let p = parse_presentation(text).expect("valid presentation");
        match todd_coxeter(&p, DEFAULT_MAX_COSETS) {
            Ok(g) => println!("{text}: order {}, exponent {}, abelian {}", g.order(), g.exponent(), g.is_abelian()),
            Err(e) => println!("{text}: {e}"),
        }
    }
}
