//! List every applicable move on a small diagram.
use twisted_gauss::{enumerate_moves, parse_gauss_code, Insertions, KindSet};

fn main() {
    let d = parse_gauss_code("O1+O2-U1+bU2-").unwrap();
    for m in enumerate_moves(&d, KindSet::all(), Insertions::Skip) {
        println!("{m}");
    }
    let with_ins = enumerate_moves(&d, KindSet::all(), Insertions::Canonical);
    println!("{} instances including insertions", with_ins.len());
}
