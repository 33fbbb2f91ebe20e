//! Diagrams that differ only by basepoint or labelling share a key.
use twisted_gauss::{canonical_key, parse_gauss_code};

fn main() {
    let d = parse_gauss_code("O1+bU2-O2-U1+b").unwrap();
    for k in 0..d.len() {
        let r = d.rotate_basepoint(k);
        println!("{r:<20} key {}", canonical_key(&r));
    }
    let relabelled = parse_gauss_code("O7+bU3-O3-U7+b").unwrap();
    assert_eq!(canonical_key(&relabelled), canonical_key(&d));
}
