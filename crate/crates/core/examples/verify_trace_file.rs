//! Write a trace to disk, read it back, replay it; then damage it.
use twisted_gauss::{parse_gauss_code, read_trace, unknot, verify_trace, write_trace};

fn main() {
    let d = parse_gauss_code("O1+bU2-O2-U1+b").unwrap();
    let path = std::env::temp_dir().join("twisted-gauss-example.trace");
    std::fs::write(&path, write_trace(&unknot(&d))).unwrap();

    let mut t = read_trace(&std::fs::read_to_string(&path).unwrap()).unwrap();
    println!("replay: {:?}", verify_trace(&t));
    t.steps.swap(0, 1);
    println!("after swapping two steps: {:?}", verify_trace(&t));
    let _ = std::fs::remove_file(path);
}
