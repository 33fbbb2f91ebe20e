//! Bounded breadth-first search: reachable sets, shortest paths, minimum depth.
use twisted_gauss::{find_path, min_unknot_depth, parse_gauss_code, reachable, unknot, KindSet, MoveKind, SearchBounds};

fn main() {
    let bb = parse_gauss_code("bb").unwrap();
    let t2: KindSet = [MoveKind::T2Ins, MoveKind::T2Del].into_iter().collect();
    for (key, depth) in reachable(&bb, &SearchBounds::new(t2).with_insertions(2)).unwrap() {
        println!("{depth}\t{key}");
    }

    let d1 = parse_gauss_code("O1+O2-U1+U2-").unwrap();
    let d2 = parse_gauss_code("O1+O2-U2-U1+").unwrap();
    // F1 relates these directly; without F1 the search must go around
    let f1_free: KindSet = [MoveKind::F2, MoveKind::T2Ins, MoveKind::T2Del, MoveKind::T3Fwd, MoveKind::T3Bwd].into_iter().collect();
    let b = SearchBounds::new(f1_free).with_depth(12).with_insertions(6);
    match find_path(&d1, &d2, &b) {
        Ok(Some(p)) => println!("path of {} moves: {}", p.len(), p.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ; ")),
        Ok(None) => println!("no path within bounds"),
        Err(e) => println!("{e}"),
    }

    let d = parse_gauss_code("O1+bU2-O2-U1+b").unwrap();
    let steps = unknot(&d).len();
    let min = min_unknot_depth(&d, &SearchBounds::new(KindSet::all()).with_depth(steps).with_insertions(2)).unwrap();
    println!("unknotter: {steps} moves, shortest: {min:?}");
}
