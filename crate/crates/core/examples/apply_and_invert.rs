//! Apply a primitive move, then undo it with its inverse.
use twisted_gauss::{apply_move, invert, parse_gauss_code, MoveInstance, MoveKind, MoveParams};

fn main() {
    let d = parse_gauss_code("bO1+bU1+").unwrap();
    let m = MoveInstance::new(MoveKind::T3Fwd, 0, MoveParams::Flip { label: 1 });
    let after = apply_move(&d, &m).unwrap();
    let back = invert(&m, &after);
    println!("{d}  --{m}-->  {after}");
    println!("{after}  --{back}-->  {}", apply_move(&after, &back).unwrap());
    // moves whose pattern is absent are rejected
    println!("{:?}", apply_move(&d, &MoveInstance::simple(MoveKind::F1, 0)).unwrap_err());
}
